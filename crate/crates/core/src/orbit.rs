//! Orbit engine: iteration with full per-step records, exact period
//! detection, closed-form cross-validation, and growth diagnostics.
//!
//! An orbit run records, for every step, the point itself, the sheet of
//! the fiber decomposition it lies on (relative to the starting point's
//! projection), and the values of the lifted first integrals — which must
//! be identical across the whole orbit. Period detection compares points
//! by exact equality against everything stored so far; there is no
//! hashing of approximations anywhere.

use crate::closed_form;
use crate::error::{Error, Result};
use crate::invariants::{self, IntegralValues};
use crate::maps::{self, MapId, MapKind, Point};
use crate::numeric::Scalar;

/// Default step bound for full-map orbits, whose coordinates grow
/// quadratically in bit length — enough to cross-check every closed form
/// while staying fast.
pub const DEFAULT_PHI_STEP_LIMIT: usize = 24;

/// Default step bound for the plane maps, whose orbits stay bounded.
pub const DEFAULT_PERIODIC_STEP_LIMIT: usize = 64;

/// One step of a traced orbit.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    /// Step index, starting from 0 at the initial point.
    pub n: usize,
    pub point: Point,
    /// Index of the sheet over the starting projection the point lies on,
    /// or `None` if it projects outside that periodic orbit (never happens
    /// for orbits of these maps; recorded rather than assumed).
    pub sheet: Option<usize>,
    /// Lifted first-integral values at the point.
    pub integrals: IntegralValues,
}

/// Whole-orbit diagnostics.
#[derive(Clone, Debug)]
pub struct OrbitSummary {
    /// Number of steps taken (records run from 0 to `steps`).
    pub steps: usize,
    /// Exact period, if some point revisited an earlier one: the distance
    /// between the first such pair. `None` for full-map orbits, which never
    /// revisit; the period of the plane maps elsewhere.
    pub period_found: Option<usize>,
    /// For each `n ≥ m`, the minimum over components of
    /// `point(n)_i / point(n − m)_i`, where `m` is the family's period:
    /// the growth factor across one whole period, worst component.
    pub min_component_growth: Vec<(usize, Scalar)>,
    /// For each `n`, the largest numerator/denominator bit length among
    /// the point's components.
    pub bitlength_series: Vec<(usize, u64)>,
}

/// A traced orbit: per-step records plus summary diagnostics.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub records: Vec<OrbitRecord>,
    pub summary: OrbitSummary,
}

/// The plane point an orbit point is classified by: full points project
/// through `π`, reduced-plane points through the conjugacy, periodic-plane
/// points are their own classifiers.
fn plane_classifier(id: MapId, kind: MapKind, x: &Point) -> Point {
    match kind {
        MapKind::Full => maps::projection(id, x),
        MapKind::Reduced => maps::conjugacy(id, x),
        MapKind::Periodic => x.clone(),
    }
}

/// Trace the orbit of `x0` under the chosen map for `steps` steps,
/// recording sheet indices, integral values, revisits, and growth.
pub fn run_orbit(id: MapId, kind: MapKind, x0: &Point, steps: usize) -> Result<Orbit> {
    if x0.arity() != kind.arity(id) {
        return Err(Error::ArityMismatch {
            expected: kind.arity(id),
            got: x0.arity(),
        });
    }
    let m = id.period();
    let base_orbit = invariants::periodic_orbit(id, &plane_classifier(id, kind, x0));

    let mut records: Vec<OrbitRecord> = Vec::with_capacity(steps + 1);
    let mut period_found = None;
    let mut min_component_growth = Vec::new();
    let mut bitlength_series = Vec::with_capacity(steps + 1);

    let mut x = x0.clone();
    for n in 0..=steps {
        if period_found.is_none() {
            if let Some(j) = records.iter().position(|r| r.point == x) {
                period_found = Some(n - j);
            }
        }
        if n >= m {
            let prev = &records[n - m].point;
            let mut ratio = &x[0] / &prev[0];
            for i in 1..x.arity() {
                let r = &x[i] / &prev[i];
                if (&ratio - &r).is_positive() {
                    ratio = r;
                }
            }
            min_component_growth.push((n, ratio));
        }
        bitlength_series.push((n, x.bit_length()));
        let sheet = base_orbit
            .iter()
            .position(|q| q == &plane_classifier(id, kind, &x));
        records.push(OrbitRecord {
            n,
            point: x.clone(),
            sheet,
            integrals: orbit_integrals(id, kind, &x),
        });
        if n < steps {
            x = maps::apply(id, kind, &x);
        }
    }

    Ok(Orbit {
        records,
        summary: OrbitSummary {
            steps,
            period_found,
            min_component_growth,
            bitlength_series,
        },
    })
}

/// The integral values recorded along an orbit: the lifted integrals for
/// full points, the periodic-map integrals pulled through the conjugacy
/// for reduced-plane points, and the periodic-map integrals themselves for
/// periodic-plane points. Each is a first integral of its map.
pub fn orbit_integrals(id: MapId, kind: MapKind, x: &Point) -> IntegralValues {
    invariants::periodic_integrals(id, &plane_classifier(id, kind, x))
}

/// One closed-form-versus-iteration comparison; the two sides are equal,
/// so a single bit length describes both.
#[derive(Clone, Debug)]
pub struct ClosedFormComparison {
    pub n: usize,
    pub bit_length: u64,
}

/// Report of [`validate_closed_form`]: one entry per admissible step
/// count, in increasing order.
#[derive(Clone, Debug)]
pub struct ClosedFormReport {
    pub comparisons: Vec<ClosedFormComparison>,
}

/// Check the closed-form orbit formulas against brute-force iteration at
/// every admissible `n ≤ n_max`: every `n` when `x0` lies on the fiber
/// over the fixed point, whole periods otherwise.
///
/// Returns the list of comparisons performed; fails with
/// [`Error::ClosedFormMismatch`] carrying the first disagreeing step, if
/// any (an acceptance failure — the formulas are exact identities).
pub fn validate_closed_form(id: MapId, x0: &Point, n_max: usize) -> Result<ClosedFormReport> {
    if x0.arity() != id.arity() {
        return Err(Error::ArityMismatch {
            expected: id.arity(),
            got: x0.arity(),
        });
    }
    if n_max < 1 {
        return Err(Error::InvalidParameter(
            "closed-form validation needs n_max ≥ 1".into(),
        ));
    }
    let m = id.period();
    let on_fixed_fiber = {
        let p = maps::projection(id, x0);
        p[0].is_one() && p[1].is_one()
    };
    let mut comparisons = Vec::new();
    let mut iterated = x0.clone();
    for n in 1..=n_max {
        iterated = maps::apply(id, MapKind::Full, &iterated);
        if !(on_fixed_fiber || n % m == 0) {
            continue;
        }
        let closed = closed_form::closed_iterate(id, x0, n)?;
        if closed != iterated {
            return Err(Error::ClosedFormMismatch {
                n,
                closed: closed.to_string(),
                iterated: iterated.to_string(),
            });
        }
        comparisons.push(ClosedFormComparison {
            n,
            bit_length: closed.bit_length(),
        });
    }
    Ok(ClosedFormReport { comparisons })
}

/// Probe the unbounded growth of a full-map orbit: after `burn_in` steps,
/// check that every component strictly increases across each of `probes`
/// consecutive whole periods.
///
/// Plane points are rejected ([`Error::GrowthProbeRejected`]): periodic
/// orbits have no growth to probe. `burn_in` below the module default of 8
/// or fewer than 2 probes are rejected as underpowered.
pub fn growth_probe(id: MapId, x0: &Point, burn_in: usize, probes: usize) -> Result<bool> {
    if x0.arity() == 2 {
        return Err(Error::GrowthProbeRejected(
            "periodic plane orbits have no growth to probe".into(),
        ));
    }
    if x0.arity() != id.arity() {
        return Err(Error::ArityMismatch {
            expected: id.arity(),
            got: x0.arity(),
        });
    }
    if burn_in < 8 {
        return Err(Error::InvalidParameter(format!(
            "growth probe burn-in must be at least 8, got {burn_in}"
        )));
    }
    if probes < 2 {
        return Err(Error::InvalidParameter(format!(
            "growth probe needs at least 2 probes, got {probes}"
        )));
    }
    let m = id.period();
    let mut x = maps::iterate(id, MapKind::Full, x0, burn_in);
    for _ in 0..probes {
        let next = maps::iterate(id, MapKind::Full, &x, m);
        for i in 0..x.arity() {
            if !(&next[i] - &x[i]).is_positive() {
                return Ok(false);
            }
        }
        x = next;
    }
    Ok(true)
}
