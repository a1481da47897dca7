//! Seeded verification suites: every identity the library rests on,
//! checked by exact arithmetic on reproducible random samples.
//!
//! Each check draws its inputs from a [`Sampler`](crate::sampling::Sampler)
//! seeded by the caller, evaluates an exact identity (zero tolerance — all
//! comparisons are equality of rationals), and tallies passes and failures.
//! A failure records its first counterexample verbatim, as exact rationals.
//!
//! The checks are grouped into named [`Suite`]s for the command-line
//! driver; [`run_suite`] scales each check's sample counts from a single
//! `samples` knob (the counts quoted in the check documentation correspond
//! to `samples = 1000`).

use std::fmt;
use std::str::FromStr;

use crate::closed_form::{self, KConstants, Restriction};
use crate::invariants::{self, VarietyC, VarietyD};
use crate::maps::{self, MapId, MapKind, Point};
use crate::numeric::{seed_pair, Scalar};
use crate::orbit;
use crate::sampling::Sampler;

/// Outcome of one named check: how many elementary identities were tested,
/// how many failed, and the first counterexample if any did.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} passed, {} failed", self.name, self.passed, self.failed)?;
        if let Some(witness) = &self.counterexample {
            write!(f, "\n  first counterexample: {witness}")?;
        }
        Ok(())
    }
}

/// Running tally for a check in progress.
struct Tally {
    result: CheckResult,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            result: CheckResult {
                name,
                passed: 0,
                failed: 0,
                counterexample: None,
            },
        }
    }

    /// Record one elementary identity; an unexpected failure keeps the
    /// first witness for the report.
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.result.passed += 1;
        } else {
            self.result.failed += 1;
            if self.result.counterexample.is_none() {
                self.result.counterexample = Some(witness());
            }
        }
    }

    fn finish(self) -> CheckResult {
        self.result
    }
}

// ---------------------------------------------------------------------------
// The ten checks
// ---------------------------------------------------------------------------

/// Global periodicity of the plane maps: the periodic map and the reduced
/// map return every sampled point to itself after the family period (4 or
/// 6), and never earlier except at a fixed point. `samples` points per map
/// per layer.
pub fn check_global_periodicity(seed: u64, samples: usize) -> CheckResult {
    let mut t = Tally::new("global periodicity of the plane maps");
    let mut s = Sampler::new(seed);
    for id in MapId::ALL {
        let m = id.period();
        for kind in [MapKind::Periodic, MapKind::Reduced] {
            for _ in 0..samples {
                let p = s.plane_point();
                let back = maps::iterate(id, kind, &p, m);
                t.check(back == p, || {
                    format!("{id} {kind}: {p} returns to {back} after {m} steps")
                });
                if maps::apply(id, kind, &p) != p {
                    let mut q = p.clone();
                    let mut early = None;
                    for k in 1..m {
                        q = maps::apply(id, kind, &q);
                        if q == p {
                            early = Some(k);
                            break;
                        }
                    }
                    t.check(early.is_none(), || {
                        format!("{id} {kind}: {p} already returns after {early:?} steps")
                    });
                }
            }
        }
    }
    t.finish()
}

/// The commuting reduction diagrams: the reduction intertwines the full
/// and reduced maps, the projection intertwines the full and periodic
/// maps, the conjugacy intertwines the reduced and periodic maps, and the
/// projection factors exactly through the reduction. `samples` points per
/// map.
pub fn check_reduction_diagrams(seed: u64, samples: usize) -> CheckResult {
    let mut t = Tally::new("commuting reduction and projection diagrams");
    let mut s = Sampler::new(seed);
    for id in MapId::ALL {
        for _ in 0..samples {
            let x = s.point(id.arity());
            let fx = maps::quiver_map(id, &x);
            t.check(
                maps::reduction(id, &fx) == maps::reduced_map(id, &maps::reduction(id, &x)),
                || format!("{id}: reduction square fails at {x}"),
            );
            t.check(
                maps::projection(id, &fx) == maps::periodic_map(id, &maps::projection(id, &x)),
                || format!("{id}: projection square fails at {x}"),
            );
            t.check(
                maps::projection(id, &x) == maps::projection_composed(id, &x),
                || format!("{id}: projection does not factor through reduction at {x}"),
            );
            let p = s.plane_point();
            t.check(
                maps::conjugacy(id, &maps::reduced_map(id, &p))
                    == maps::periodic_map(id, &maps::conjugacy(id, &p)),
                || format!("{id}: conjugacy square fails at {p}"),
            );
        }
    }
    t.finish()
}

/// The reduced maps preserve the plane symplectic form `dx∧dy/(xy)`:
/// the exact Jacobian determinant satisfies `det·x·y = x̂·ŷ` at every
/// sampled point. `samples` points per map, differentiated with jets.
pub fn check_symplectic_pullback(seed: u64, samples: usize) -> CheckResult {
    let mut t = Tally::new("symplectic pullback of the reduced maps");
    let mut s = Sampler::new(seed);
    for id in MapId::ALL {
        for _ in 0..samples {
            let p = s.plane_point();
            let jets = seed_pair(&p[0], &p[1]);
            let [u, v] = maps::reduced_map_jet(id, &jets);
            let det = &(&u.dx * &v.dy) - &(&u.dy * &v.dx);
            t.check(&det * &p[0] * &p[1] == &u.value * &v.value, || {
                format!("{id}: pullback fails at {p} (det = {det})")
            });
        }
    }
    t.finish()
}

/// Closed-form orbits equal brute-force iteration exactly: single steps on
/// the fiber over the fixed point up to 12 steps, whole-period blocks on
/// general fibers up to 3 periods (2 for the longer family), and the
/// specialization of the block form to the fixed fiber. `points` sampled
/// starting points per case.
pub fn check_closed_forms(seed: u64, points: usize) -> CheckResult {
    let mut t = Tally::new("closed-form orbit formulas");
    let mut s = Sampler::new(seed);
    let one = Scalar::one();
    for id in MapId::ALL {
        let m = id.period();
        let free_len = if id == MapId::F0 { 2 } else { 4 };
        let fixed_fiber = VarietyC::new(id, one.clone(), one.clone()).unwrap();

        // Single steps along the fiber over the fixed point.
        for _ in 0..points {
            let free: Vec<Scalar> = (0..free_len).map(|_| s.scalar()).collect();
            let x = fixed_fiber.sample(&free).expect("fiber parametrization");
            let mut it = x.clone();
            for n in 1..=12 {
                it = maps::quiver_map(id, &it);
                t.check(closed_form::fixed_fiber_step(id, &x, n) == it, || {
                    format!("{id}: fixed-fiber closed form differs at step {n} from {x}")
                });
            }
        }

        // Whole-period blocks on general fibers; the longer family's
        // 12-step bound allows 2 blocks, the shorter one 3.
        let max_blocks = 12 / m;
        for _ in 0..points {
            let (a, b) = if id == MapId::F0 {
                (s.square_scalar(), s.square_scalar())
            } else {
                (s.scalar(), s.scalar())
            };
            let fiber = VarietyC::new(id, a.clone(), b.clone()).unwrap();
            let free: Vec<Scalar> = (0..free_len).map(|_| s.scalar()).collect();
            let x = fiber.sample(&free).expect("fiber parametrization");
            let mut it = x.clone();
            for blocks in 1..=max_blocks {
                for _ in 0..m {
                    it = maps::quiver_map(id, &it);
                }
                t.check(
                    closed_form::period_blocks_step(id, &a, &b, &x, blocks) == it,
                    || {
                        format!(
                            "{id}: period-block closed form differs after {blocks} blocks \
                             from {x} over ({a}, {b})"
                        )
                    },
                );
            }
        }

        // Consistency: the block form at the fixed fiber's parameters
        // reproduces the single-step form, whole period by whole period.
        for _ in 0..points {
            let free: Vec<Scalar> = (0..free_len).map(|_| s.scalar()).collect();
            let x = fixed_fiber.sample(&free).expect("fiber parametrization");
            for blocks in 1..=3 {
                t.check(
                    closed_form::period_blocks_step(id, &one, &one, &x, blocks)
                        == closed_form::fixed_fiber_step(id, &x, m * blocks),
                    || format!("{id}: block and single-step forms disagree at {x}"),
                );
            }
        }
    }
    t.finish()
}

/// The plane maps' fixed points are exactly the known ones: (2, 1) for
/// the reduced arity-4 map, (1, 2) for the reduced arity-6 map, (1, 1)
/// for both periodic maps — each fixed exactly, and no sampled point is
/// fixed unless it is the known one. `samples` random plane points per
/// map per layer.
pub fn check_plane_fixed_points(seed: u64, samples: usize) -> CheckResult {
    let mut t = Tally::new("fixed points of the plane maps");
    let mut s = Sampler::new(seed);
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let psi_fixed = Point::pair(one.clone(), one.clone());
    for id in MapId::ALL {
        let reduced_fixed = match id {
            MapId::F0 => Point::pair(two.clone(), one.clone()),
            MapId::Dp3 => Point::pair(one.clone(), two.clone()),
        };
        t.check(maps::reduced_map(id, &reduced_fixed) == reduced_fixed, || {
            format!("{id}: {reduced_fixed} is not fixed by the reduced map")
        });
        t.check(maps::periodic_map(id, &psi_fixed) == psi_fixed, || {
            format!("{id}: {psi_fixed} is not fixed by the periodic map")
        });
        for _ in 0..samples {
            let p = s.plane_point();
            let fixed = maps::reduced_map(id, &p) == p;
            t.check(fixed == (p == reduced_fixed), || {
                format!("{id}: reduced map unexpectedly {}fixes {p}", if fixed { "" } else { "un" })
            });
            let fixed = maps::periodic_map(id, &p) == p;
            t.check(fixed == (p == psi_fixed), || {
                format!("{id}: periodic map unexpectedly {}fixes {p}", if fixed { "" } else { "un" })
            });
        }
    }
    t.finish()
}

/// Orbits of the full maps circulate through the sheets over their
/// starting projection: after `n` steps the projection is exactly the
/// `n`-th iterate of the base point (so the sheet index is `n` mod the
/// period), and a whole period returns to the starting fiber. `points`
/// starting points per map, 24 steps each.
pub fn check_sheet_structure(seed: u64, points: usize) -> CheckResult {
    let mut t = Tally::new("sheet circulation of full orbits");
    let mut s = Sampler::new(seed);
    for id in MapId::ALL {
        let m = id.period();
        for _ in 0..points {
            let x0 = s.point(id.arity());
            let base = maps::projection(id, &x0);
            let base_orbit = invariants::periodic_orbit(id, &base);
            t.check(
                invariants::sheet_index(id, &maps::quiver_map(id, &x0), &base) == Some(1),
                || format!("{id}: classifier misses the first sheet from {x0}"),
            );
            let mut x = x0.clone();
            for n in 1..=orbit::DEFAULT_PHI_STEP_LIMIT {
                x = maps::quiver_map(id, &x);
                t.check(maps::projection(id, &x) == base_orbit[n % m], || {
                    format!("{id}: projection leaves the base orbit at step {n} from {x0}")
                });
            }
        }
    }
    t.finish()
}

/// The full maps have no periodic points and their orbits grow without
/// bound: no revisit within 24 steps from `points` starting points per
/// map, strict component growth across whole periods after a burn-in of 8
/// steps, and the growth constants exceed their thresholds for
/// `param_samples` random fiber parameters.
pub fn check_aperiodic_growth(seed: u64, points: usize, param_samples: usize) -> CheckResult {
    let mut t = Tally::new("aperiodicity and unbounded growth of full orbits");
    let mut s = Sampler::new(seed);
    for id in MapId::ALL {
        let m = id.period();
        for _ in 0..points {
            let x0 = s.point(id.arity());
            let mut pts = Vec::with_capacity(orbit::DEFAULT_PHI_STEP_LIMIT + 1);
            pts.push(x0.clone());
            for _ in 0..orbit::DEFAULT_PHI_STEP_LIMIT {
                pts.push(maps::quiver_map(id, pts.last().unwrap()));
            }
            let revisit = (1..pts.len()).any(|n| pts[..n].contains(&pts[n]));
            t.check(!revisit, || {
                format!(
                    "{id}: revisit within {} steps from {x0}",
                    orbit::DEFAULT_PHI_STEP_LIMIT
                )
            });
            // Strict componentwise growth across two whole periods after a
            // burn-in of 8 steps.
            for probe in 0..2 {
                let lo = 8 + probe * m;
                let grew = (0..id.arity())
                    .all(|i| (&pts[lo + m][i] - &pts[lo][i]).is_positive());
                t.check(grew, || {
                    format!("{id}: a component failed to grow past step {lo} from {x0}")
                });
            }
        }
        for _ in 0..param_samples {
            let (a, b) = (s.scalar(), s.scalar());
            if a.is_one() && b.is_one() {
                continue;
            }
            let k = KConstants::new(id, &a, &b);
            t.check(k.inequalities_hold(), || {
                format!("{id}: growth constants below threshold at ({a}, {b})")
            });
        }
    }
    t.finish()
}

/// The lifted first integrals are constant along full orbits, the
/// displayed arity-4 lift agrees with the composition through the
/// projection, the restricted integrals are constant on their varieties,
/// and the displayed integral Jacobian equals the jet determinant.
/// `orbit_points` 24-step orbits per map and `samples` algebraic spot
/// checks.
pub fn check_first_integrals(seed: u64, orbit_points: usize, samples: usize) -> CheckResult {
    let mut t = Tally::new("first integrals and their lifts");
    let mut s = Sampler::new(seed);
    let one = Scalar::one();
    for id in MapId::ALL {
        for _ in 0..orbit_points {
            let x0 = s.point(id.arity());
            let first = invariants::lifted_integrals(id, &x0);
            let mut x = x0.clone();
            let mut constant = true;
            for _ in 0..orbit::DEFAULT_PHI_STEP_LIMIT {
                x = maps::quiver_map(id, &x);
                if invariants::lifted_integrals(id, &x) != first {
                    constant = false;
                    break;
                }
            }
            t.check(constant, || {
                format!("{id}: lifted integrals drift along the orbit of {x0}")
            });
        }
    }
    let dp3_fixed_fiber = VarietyC::new(MapId::Dp3, one.clone(), one.clone()).unwrap();
    for _ in 0..samples {
        // Displayed arity-4 lift = integrals composed with the projection.
        let x = s.point(4);
        t.check(
            invariants::f0_lifted_display(&x) == invariants::lifted_integrals(MapId::F0, &x),
            || format!("lifted display disagrees with the composition at {x}"),
        );
        // Restricted integrals on the fixed fiber survive a single step.
        let free: Vec<Scalar> = (0..4).map(|_| s.scalar()).collect();
        let z = dp3_fixed_fiber.sample(&free).expect("fiber parametrization");
        let stepped = maps::quiver_map(MapId::Dp3, &z);
        t.check(
            invariants::dp3_restricted_integrals(Restriction::FixedFiber, &stepped)
                == invariants::dp3_restricted_integrals(Restriction::FixedFiber, &z),
            || format!("fixed-fiber integrals drift at {z}"),
        );
        // Restricted integrals on a general fiber survive a whole period.
        let w = s.point(6);
        let p = maps::projection(MapId::Dp3, &w);
        let blocked = closed_form::period_blocks_step(MapId::Dp3, &p[0], &p[1], &w, 1);
        t.check(
            invariants::dp3_restricted_integrals(Restriction::PeriodBlock, &blocked)
                == invariants::dp3_restricted_integrals(Restriction::PeriodBlock, &w),
            || format!("period-block integrals drift at {w}"),
        );
        // Displayed Jacobian = jet determinant.
        let q = s.plane_point();
        t.check(
            invariants::f0_integral_jacobian_display(&q)
                == invariants::integral_jacobian_det(MapId::F0, &q),
            || format!("Jacobian display disagrees with jets at {q}"),
        );
    }
    t.finish()
}

/// The two-dimensional confinements of the arity-6 family: each sampled
/// set maps onto the set with stepped parameters through a full period
/// (returning to itself), the parameter motion is 6-periodic on
/// `param_samples` random tuples, and fixed-fiber orbits stay inside the
/// codimension-4 set cut out by their starting integrals.
pub fn check_confined_varieties(
    seed: u64,
    tuples: usize,
    points_per_tuple: usize,
    param_samples: usize,
) -> CheckResult {
    let mut t = Tally::new("confined sets of the arity-6 family");
    let mut s = Sampler::new(seed);
    let one = Scalar::one();
    for _ in 0..tuples {
        let d = VarietyD::new(s.scalar(), s.scalar(), s.scalar(), s.scalar()).unwrap();
        for _ in 0..points_per_tuple {
            let mut z = d.sample(&s.scalar(), &s.scalar());
            let mut cur = d.clone();
            t.check(cur.contains(&z), || format!("sample off its own set: {z}"));
            for _ in 0..6 {
                z = maps::quiver_map(MapId::Dp3, &z);
                cur = cur.step();
                t.check(cur.contains(&z), || {
                    format!("orbit left the stepped set at {z}")
                });
            }
            t.check(cur == d, || "parameters did not close up".to_string());
        }
    }
    for _ in 0..param_samples {
        let start = [s.scalar(), s.scalar(), s.scalar(), s.scalar()];
        let mut q = start.clone();
        for _ in 0..6 {
            q = invariants::d_params_step(&q);
        }
        t.check(q == start, || {
            format!(
                "parameter motion not 6-periodic from ({}, {}, {}, {})",
                start[0], start[1], start[2], start[3]
            )
        });
    }
    let fixed_fiber = VarietyC::new(MapId::Dp3, one.clone(), one.clone()).unwrap();
    for _ in 0..tuples.max(1) * points_per_tuple.max(1) {
        let free: Vec<Scalar> = (0..4).map(|_| s.scalar()).collect();
        let z0 = fixed_fiber.sample(&free).expect("fiber parametrization");
        let v = invariants::dp3_restricted_integrals(Restriction::FixedFiber, &z0);
        let mut z = z0.clone();
        for _ in 0..=8 {
            t.check(invariants::dp3_confined_contains(&v.j1, &v.j2, &z), || {
                format!("orbit of {z0} left its codimension-4 confinement at {z}")
            });
            z = maps::quiver_map(MapId::Dp3, &z);
        }
    }
    t.finish()
}

/// The plane level sets of the integrals: the candidate points solve the
/// displayed polynomial system, the candidate count collapses exactly when
/// the integral Jacobian vanishes (splitting into two disjoint periodic
/// orbits otherwise, for both families), and a bounded-height exhaustive
/// search finds nothing beyond the candidates. `pairs` sampled level
/// bases and `oracle_pairs` exhaustive searches.
pub fn check_level_set_dichotomy(seed: u64, pairs: usize, oracle_pairs: usize) -> CheckResult {
    let mut t = Tally::new("plane level sets and their dichotomy");
    let mut s = Sampler::new(seed);
    for _ in 0..pairs {
        let (a, b) = (s.scalar(), s.scalar());
        let p = Point::pair(a.clone(), b.clone());

        // Arity-4 family: the eight candidates solve the polynomial system.
        let octet = invariants::level_set_candidates(MapId::F0, &a, &b);
        for q in &octet {
            t.check(invariants::f0_level_equations_hold(&a, &b, &q[0], &q[1]), || {
                format!("candidate {q} misses the level system at ({a}, {b})")
            });
        }

        // Dichotomy for both families, decided by the Jacobian.
        for id in MapId::ALL {
            let m = id.period();
            let candidates = invariants::level_set_candidates(id, &a, &b);
            let orbit_points = invariants::periodic_orbit(id, &p);
            if invariants::integral_jacobian_det(id, &p).is_zero() {
                let mut distinct: Vec<Point> = Vec::new();
                for q in orbit_points {
                    if !distinct.contains(&q) {
                        distinct.push(q);
                    }
                }
                t.check(candidates == distinct, || {
                    format!("{id}: level set at ({a}, {b}) is not a single orbit")
                });
            } else {
                let reflected = invariants::periodic_orbit(id, &invariants::reflect(&p));
                let split = candidates.len() == 2 * m
                    && candidates[..m] == orbit_points[..]
                    && candidates[m..] == reflected[..];
                t.check(split, || {
                    format!("{id}: level set at ({a}, {b}) fails to split into two orbits")
                });
            }
        }
    }

    // Exhaustive no-other-solutions oracle at bounded height.
    let grid = invariants::rationals_of_height(6);
    for _ in 0..oracle_pairs {
        let a = grid[s.index(grid.len())].clone();
        let b = grid[s.index(grid.len())].clone();
        let mut found = invariants::level_set_solutions_bounded(MapId::F0, &a, &b, 12);
        let mut expected = invariants::level_set_candidates(MapId::F0, &a, &b);
        found.sort_by_key(Point::to_string);
        expected.sort_by_key(Point::to_string);
        t.check(found == expected, || {
            format!(
                "exhaustive search at ({a}, {b}) found {} solutions, expected {}",
                found.len(),
                expected.len()
            )
        });
    }
    t.finish()
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// The individual checks, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    GlobalPeriodicity,
    ReductionDiagrams,
    SymplecticPullback,
    ClosedForms,
    PlaneFixedPoints,
    SheetStructure,
    AperiodicGrowth,
    FirstIntegrals,
    ConfinedVarieties,
    LevelSetDichotomy,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::GlobalPeriodicity,
        Check::ReductionDiagrams,
        Check::SymplecticPullback,
        Check::ClosedForms,
        Check::PlaneFixedPoints,
        Check::SheetStructure,
        Check::AperiodicGrowth,
        Check::FirstIntegrals,
        Check::ConfinedVarieties,
        Check::LevelSetDichotomy,
    ];

    /// Run this check with counts scaled from `samples` (the documented
    /// counts correspond to `samples = 1000`).
    pub fn run(self, seed: u64, samples: usize) -> CheckResult {
        let portion = |den: usize| (samples / den).max(1);
        match self {
            Check::GlobalPeriodicity => check_global_periodicity(seed, samples),
            Check::ReductionDiagrams => check_reduction_diagrams(seed, samples),
            Check::SymplecticPullback => check_symplectic_pullback(seed, samples),
            Check::ClosedForms => check_closed_forms(seed, portion(20)),
            Check::PlaneFixedPoints => {
                check_plane_fixed_points(seed, samples.saturating_mul(10))
            }
            Check::SheetStructure => check_sheet_structure(seed, portion(10)),
            Check::AperiodicGrowth => check_aperiodic_growth(seed, portion(10), samples),
            Check::FirstIntegrals => check_first_integrals(seed, portion(10), samples),
            Check::ConfinedVarieties => {
                check_confined_varieties(seed, portion(50), portion(20), samples)
            }
            Check::LevelSetDichotomy => {
                check_level_set_dichotomy(seed, portion(10), portion(50))
            }
        }
    }
}

/// Named groups of checks exposed by the command-line driver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Periodicity,
    Conjugacy,
    ClosedForm,
    Integrals,
    Varieties,
    Symplectic,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Periodicity,
        Suite::Conjugacy,
        Suite::ClosedForm,
        Suite::Integrals,
        Suite::Varieties,
        Suite::Symplectic,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Periodicity => "periodicity",
            Suite::Conjugacy => "conjugacy",
            Suite::ClosedForm => "closedform",
            Suite::Integrals => "integrals",
            Suite::Varieties => "varieties",
            Suite::Symplectic => "symplectic",
            Suite::All => "all",
        }
    }

    /// The checks this suite runs, in order.
    pub fn checks(self) -> &'static [Check] {
        match self {
            Suite::Periodicity => &[Check::GlobalPeriodicity, Check::PlaneFixedPoints],
            Suite::Conjugacy => &[Check::ReductionDiagrams],
            Suite::ClosedForm => &[Check::ClosedForms, Check::AperiodicGrowth],
            Suite::Integrals => &[Check::FirstIntegrals],
            Suite::Varieties => &[
                Check::SheetStructure,
                Check::ConfinedVarieties,
                Check::LevelSetDichotomy,
            ],
            Suite::Symplectic => &[Check::SymplecticPullback],
            Suite::All => &Check::ALL,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Results of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }

    pub fn total_passed(&self) -> u64 {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn total_failed(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }
}

/// Run every check of `suite`, decorrelating their sample streams by
/// offsetting the seed per check.
pub fn run_suite(suite: Suite, seed: u64, samples: usize) -> SuiteReport {
    let checks = suite
        .checks()
        .iter()
        .enumerate()
        .map(|(i, check)| check.run(seed.wrapping_add(i as u64), samples))
        .collect();
    SuiteReport { checks }
}
