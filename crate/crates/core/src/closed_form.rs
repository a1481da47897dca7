//! Closed-form orbit solutions.
//!
//! Both full maps, restricted to the right invariant sets, take the shape
//! `g(x) = G(x)·D·x` with `D` a constant diagonal matrix and `G` a scalar
//! function satisfying `G(g(x)) = c·G(x)`. For such maps the `n`-th iterate
//! collapses to the single product
//!
//! ```text
//!   g⁽ⁿ⁾(x) = c^{n(n−1)/2} · G(x)ⁿ · Dⁿ · x
//! ```
//!
//! which this module evaluates exactly. On the fiber over the periodic map's
//! fixed point the single-step restriction already has this shape (for the
//! arity-6 family, the double step does); elsewhere the period-length block
//! does, with coefficients built from the two constants `k₁`, `k₂` of the
//! fiber. Every closed form here is pinned against brute-force iteration in
//! the test suites.

use crate::error::{Error, Result};
use crate::maps::{self, MapId, Point};
use crate::numeric::Scalar;

/// The scalar factor `G(x) = coeff · (x_num / x_den)^exp` of a
/// [`ScaledDiagonalMap`]. All registered maps have this ratio-power shape.
#[derive(Clone, Debug)]
pub struct RatioPower {
    pub coeff: Scalar,
    pub num_idx: usize,
    pub den_idx: usize,
    pub exp: i64,
}

impl RatioPower {
    pub fn eval(&self, x: &Point) -> Scalar {
        &self.coeff * (&x[self.num_idx] / &x[self.den_idx]).pow(self.exp)
    }
}

/// A map of the form `g(x) = G(x)·D·x` whose scalar factor satisfies the
/// eigenrelation `G(g(x)) = c·G(x)`; the relation is checked exactly on
/// probe points at construction.
#[derive(Clone, Debug)]
pub struct ScaledDiagonalMap {
    diag: Vec<Scalar>,
    g: RatioPower,
    c: Scalar,
}

impl ScaledDiagonalMap {
    pub fn new(diag: Vec<Scalar>, g: RatioPower, c: Scalar) -> Result<Self> {
        assert!(matches!(diag.len(), 2 | 4 | 6), "diagonal arity");
        assert!(
            g.num_idx < diag.len() && g.den_idx < diag.len(),
            "scale-function indices in range"
        );
        let map = ScaledDiagonalMap { diag, g, c };
        for probe in map.probe_points() {
            let lhs = map.g.eval(&map.apply(&probe));
            let rhs = &map.c * &map.g.eval(&probe);
            if lhs != rhs {
                return Err(Error::BadEigenrelation(probe.to_string()));
            }
        }
        Ok(map)
    }

    /// Deterministic probe points with pairwise distinct coordinates, so a
    /// wrong index or exponent in the scale function cannot cancel out.
    fn probe_points(&self) -> [Point; 2] {
        let n = self.diag.len();
        let primes = [2i64, 3, 5, 7, 11, 13];
        let a = Point::new((0..n).map(|i| Scalar::from_int(primes[i])).collect())
            .expect("positive probe");
        let b = Point::new((0..n).map(|i| Scalar::frac(primes[n - 1 - i], primes[i])).collect())
            .expect("positive probe");
        [a, b]
    }

    /// One step: `G(x)·D·x`.
    pub fn apply(&self, x: &Point) -> Point {
        assert_eq!(self.diag.len(), x.arity(), "arity of scaled diagonal map");
        let g = self.g.eval(x);
        Point::new(
            self.diag
                .iter()
                .zip(x.coords())
                .map(|(d, xi)| &g * d * xi)
                .collect(),
        )
        .expect("image of a positive point is positive")
    }

    /// The `n`-th iterate in closed form: `c^{n(n−1)/2}·G(x)ⁿ·Dⁿ·x`.
    pub fn power(&self, x: &Point, n: usize) -> Point {
        assert_eq!(self.diag.len(), x.arity(), "arity of scaled diagonal map");
        let n = i64::try_from(n).expect("step count fits in i64");
        let factor = self.c.pow(n * (n - 1) / 2) * self.g.eval(x).pow(n);
        Point::new(
            self.diag
                .iter()
                .zip(x.coords())
                .map(|(d, xi)| &factor * d.pow(n) * xi)
                .collect(),
        )
        .expect("closed-form image of a positive point is positive")
    }

    pub fn eigenvalue(&self) -> &Scalar {
        &self.c
    }
}

/// The fiber constants `k₁`, `k₂` controlling the period-length block of
/// the orbit through the fiber over `(a, b)`.
///
/// Arity 4: `k₁ = (1+ab)²(a+b)⁴/(a³b⁵)`, `k₂ = (1+ab)⁴(a+b)⁶/(a⁵b⁷)`.
/// Arity 6: `k₁ = (a+1)(b+1)(a+b)/(ab)`, `k₂ = (a+1)³(b+1)²(a+b)/a²`.
#[derive(Clone, Debug)]
pub struct KConstants {
    pub id: MapId,
    pub a: Scalar,
    pub b: Scalar,
    pub k1: Scalar,
    pub k2: Scalar,
}

impl KConstants {
    pub fn new(id: MapId, a: &Scalar, b: &Scalar) -> Self {
        let one = Scalar::one();
        let (k1, k2) = match id {
            MapId::F0 => {
                let p = &one + a * b;
                let s = a + b;
                (
                    p.pow(2) * s.pow(4) / (a.pow(3) * b.pow(5)),
                    p.pow(4) * s.pow(6) / (a.pow(5) * b.pow(7)),
                )
            }
            MapId::Dp3 => {
                let ap = a + &one;
                let bp = b + &one;
                let s = a + b;
                (
                    &ap * &bp * &s / (a * b),
                    ap.pow(3) * bp.pow(2) * s / a.pow(2),
                )
            }
        };
        KConstants {
            id,
            a: a.clone(),
            b: b.clone(),
            k1,
            k2,
        }
    }

    /// The growth inequalities that force divergence of every orbit off the
    /// fixed fiber: `k₁, k₂, k₂/k₁ > 1` (arity 4) and `k₁ > 2`, `k₂ > 3`
    /// (arity 6). They also hold at `(1, 1)` itself.
    pub fn inequalities_hold(&self) -> bool {
        match self.id {
            MapId::F0 => {
                let one = Scalar::one();
                self.k1 > one && self.k2 > one && self.k2 > self.k1
            }
            MapId::Dp3 => self.k1 > Scalar::from_int(2) && self.k2 > Scalar::from_int(3),
        }
    }
}

/// Single-step restriction to the fixed fiber of the arity-4 map:
/// `g(x) = (x₂/x₁)·diag(1,2,2,4)·x`, with `c = 2`.
pub fn f0_fixed_fiber_map() -> ScaledDiagonalMap {
    ScaledDiagonalMap::new(
        vec![
            Scalar::one(),
            Scalar::from_int(2),
            Scalar::from_int(2),
            Scalar::from_int(4),
        ],
        RatioPower {
            coeff: Scalar::one(),
            num_idx: 1,
            den_idx: 0,
            exp: 1,
        },
        Scalar::from_int(2),
    )
    .expect("registered map satisfies its eigenrelation")
}

/// Four-step block restricted to the fiber over `(a, b)` of the arity-4 map:
/// `G = (x₂/x₁)⁴`, `D = diag(k₁,k₂,k₂,k₂²/k₁)`, `c = (k₂/k₁)⁴`.
pub fn f0_period_block_map(a: &Scalar, b: &Scalar) -> ScaledDiagonalMap {
    let k = KConstants::new(MapId::F0, a, b);
    ScaledDiagonalMap::new(
        vec![
            k.k1.clone(),
            k.k2.clone(),
            k.k2.clone(),
            &k.k2 * &k.k2 / &k.k1,
        ],
        RatioPower {
            coeff: Scalar::one(),
            num_idx: 1,
            den_idx: 0,
            exp: 4,
        },
        (&k.k2 / &k.k1).pow(4),
    )
    .expect("registered map satisfies its eigenrelation")
}

/// Double-step restriction to the fixed fiber of the arity-6 map:
/// `G = x₅/x₁`, `D = diag(1,2,2,4,4,8)`, `c = 4`.
pub fn dp3_double_step_map() -> ScaledDiagonalMap {
    ScaledDiagonalMap::new(
        vec![
            Scalar::one(),
            Scalar::from_int(2),
            Scalar::from_int(2),
            Scalar::from_int(4),
            Scalar::from_int(4),
            Scalar::from_int(8),
        ],
        RatioPower {
            coeff: Scalar::one(),
            num_idx: 4,
            den_idx: 0,
            exp: 1,
        },
        Scalar::from_int(4),
    )
    .expect("registered map satisfies its eigenrelation")
}

/// Six-step block restricted to the fiber over `(a, b)` of the arity-6 map:
/// `G = k₂(x₅/x₁)³`, `D = diag(1,k₁,k₁,k₁²,k₁²,k₁³)`, `c = k₁⁶`.
pub fn dp3_period_block_map(a: &Scalar, b: &Scalar) -> ScaledDiagonalMap {
    let k = KConstants::new(MapId::Dp3, a, b);
    ScaledDiagonalMap::new(
        vec![
            Scalar::one(),
            k.k1.clone(),
            k.k1.clone(),
            k.k1.pow(2),
            k.k1.pow(2),
            k.k1.pow(3),
        ],
        RatioPower {
            coeff: k.k2.clone(),
            num_idx: 4,
            den_idx: 0,
            exp: 3,
        },
        k.k1.pow(6),
    )
    .expect("registered map satisfies its eigenrelation")
}

/// Single-step restriction of the arity-6 map to its fixed fiber (not of
/// scaled-diagonal shape; its double step is [`dp3_double_step_map`]):
/// `(x₁,…,x₆) ↦ (x₃, x₄, x₅, x₆, 2x₃x₅/x₁, 4x₃x₅²/(x₁x₂))`.
fn dp3_fiber_single_step(x: &Point) -> Point {
    let c = x.coords();
    let (x1, x2, x3, x5) = (&c[0], &c[1], &c[2], &c[4]);
    Point::new(vec![
        x3.clone(),
        c[3].clone(),
        x5.clone(),
        c[5].clone(),
        Scalar::from_int(2) * x3 * x5 / x1,
        Scalar::from_int(4) * x3 * (x5 * x5) / (x1 * x2),
    ])
    .expect("image of a positive point is positive")
}

/// Closed form for the `n`-th iterate starting on the fixed fiber
/// (`projection(id, x) = (1, 1)`); valid for every `n ≥ 0`.
///
/// Arity 4: `2^{n(n−1)/2}(x₂/x₁)ⁿ·(x₁, 2ⁿx₂, 2ⁿx₃, 4ⁿx₄)`.
///
/// Arity 6, splitting `n` by parity with `λ = 2^{m−1}x₅/x₁`:
/// even `n = 2m` gives `λᵐ(x₁, 2ᵐx₂, 2ᵐx₃, 4ᵐx₄, 4ᵐx₅, 8ᵐx₆)`; odd
/// `n = 2m+1` gives `(2λ)ᵐ(x₃, 2ᵐx₄, 2ᵐx₅, 4ᵐx₆, 4ᵐ·2x₃x₅/x₁,
/// 8ᵐ·4x₃x₅²/(x₁x₂))` — one leading single step composed with the even
/// form, which fixes the fourth coefficient at `4ᵐ`. Both branches are
/// pinned against brute-force iteration in the suites.
pub fn fixed_fiber_step(id: MapId, x: &Point, n: usize) -> Point {
    assert_eq!(id.arity(), x.arity(), "arity of fixed-fiber closed form");
    let c = x.coords();
    match id {
        MapId::F0 => {
            let n = i64::try_from(n).expect("step count fits in i64");
            let two = Scalar::from_int(2);
            let factor = two.pow(n * (n - 1) / 2) * (&c[1] / &c[0]).pow(n);
            let p2 = two.pow(n);
            let p4 = Scalar::from_int(4).pow(n);
            Point::new(vec![
                &factor * &c[0],
                &factor * &p2 * &c[1],
                &factor * &p2 * &c[2],
                &factor * &p4 * &c[3],
            ])
            .expect("closed-form image is positive")
        }
        MapId::Dp3 => {
            let m = i64::try_from(n / 2).expect("step count fits in i64");
            let lambda = Scalar::from_int(2).pow(m - 1) * &c[4] / &c[0];
            let p2 = Scalar::from_int(2).pow(m);
            let p4 = Scalar::from_int(4).pow(m);
            let p8 = Scalar::from_int(8).pow(m);
            if n % 2 == 0 {
                let factor = lambda.pow(m);
                Point::new(vec![
                    &factor * &c[0],
                    &factor * &p2 * &c[1],
                    &factor * &p2 * &c[2],
                    &factor * &p4 * &c[3],
                    &factor * &p4 * &c[4],
                    &factor * &p8 * &c[5],
                ])
                .expect("closed-form image is positive")
            } else {
                let factor = (Scalar::from_int(2) * lambda).pow(m);
                let (x1, x2, x3, x5) = (&c[0], &c[1], &c[2], &c[4]);
                Point::new(vec![
                    &factor * x3,
                    &factor * &p2 * &c[3],
                    &factor * &p2 * x5,
                    &factor * &p4 * &c[5],
                    &factor * &p4 * (Scalar::from_int(2) * x3 * x5 / x1),
                    &factor * &p8 * (Scalar::from_int(4) * x3 * (x5 * x5) / (x1 * x2)),
                ])
                .expect("closed-form image is positive")
            }
        }
    }
}

/// Closed form for `blocks` period-length blocks starting anywhere on the
/// fiber over `(a, b)`: the iterate number is `blocks · period`.
///
/// Arity 4: `(k₂/k₁)^{2n(n−1)}(x₂/x₁)^{4n}·(k₁ⁿx₁, k₂ⁿx₂, k₂ⁿx₃,
/// (k₂²ⁿ/k₁ⁿ)x₄)`. Arity 6: `k₁^{3n(n−1)}k₂ⁿ(x₅/x₁)^{3n}·(x₁, k₁ⁿx₂,
/// k₁ⁿx₃, k₁²ⁿx₄, k₁²ⁿx₅, k₁³ⁿx₆)`, writing `n` for `blocks`.
pub fn period_blocks_step(id: MapId, a: &Scalar, b: &Scalar, x: &Point, blocks: usize) -> Point {
    assert_eq!(id.arity(), x.arity(), "arity of period-block closed form");
    let k = KConstants::new(id, a, b);
    let n = i64::try_from(blocks).expect("block count fits in i64");
    let c = x.coords();
    match id {
        MapId::F0 => {
            let factor = (&k.k2 / &k.k1).pow(2 * n * (n - 1)) * (&c[1] / &c[0]).pow(4 * n);
            let k1n = k.k1.pow(n);
            let k2n = k.k2.pow(n);
            Point::new(vec![
                &factor * &k1n * &c[0],
                &factor * &k2n * &c[1],
                &factor * &k2n * &c[2],
                &factor * &k2n * &k2n / &k1n * &c[3],
            ])
            .expect("closed-form image is positive")
        }
        MapId::Dp3 => {
            let factor =
                k.k1.pow(3 * n * (n - 1)) * k.k2.pow(n) * (&c[4] / &c[0]).pow(3 * n);
            let k1n = k.k1.pow(n);
            let k1n2 = k.k1.pow(2 * n);
            let k1n3 = k.k1.pow(3 * n);
            Point::new(vec![
                &factor * &c[0],
                &factor * &k1n * &c[1],
                &factor * &k1n * &c[2],
                &factor * &k1n2 * &c[3],
                &factor * &k1n2 * &c[4],
                &factor * &k1n3 * &c[5],
            ])
            .expect("closed-form image is positive")
        }
    }
}

/// Closed form for the `n`-th iterate of the full map from any starting
/// point.
///
/// On the fixed fiber every `n` is admissible. Elsewhere the closed form
/// covers whole period-length blocks only, so `n` must be a multiple of the
/// period; other step counts are reachable via [`accelerated_step`].
pub fn closed_iterate(id: MapId, x: &Point, n: usize) -> Result<Point> {
    let p = maps::projection(id, x);
    let one = Scalar::one();
    if p[0] == one && p[1] == one {
        return Ok(fixed_fiber_step(id, x, n));
    }
    let m = id.period();
    if n % m == 0 {
        Ok(period_blocks_step(id, &p[0], &p[1], x, n / m))
    } else {
        Err(Error::NotOnBaseVariety { n, period: m })
    }
}

/// The `n`-th iterate from any starting point: the largest closed-form block
/// first, then at most `period − 1` direct map applications.
pub fn accelerated_step(id: MapId, x: &Point, n: usize) -> Point {
    let p = maps::projection(id, x);
    let one = Scalar::one();
    if p[0] == one && p[1] == one {
        return fixed_fiber_step(id, x, n);
    }
    let m = id.period();
    let whole = n - n % m;
    let mut q = period_blocks_step(id, &p[0], &p[1], x, whole / m);
    for _ in 0..(n - whole) {
        q = maps::quiver_map(id, &q);
    }
    q
}

/// Which restricted map to apply: the single step on the fixed fiber, or
/// the period-length block on a general fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    FixedFiber,
    PeriodBlock,
}

/// Applies the displayed restricted map to `x` after checking that `x`
/// actually lies on the fiber over `(a, b)`.
///
/// `FixedFiber` (requires `(a,b) = (1,1)`) advances one step of the full
/// map; `PeriodBlock` advances one whole period. Both agree exactly with
/// direct iteration — pinned in tests.
pub fn restricted_step(
    id: MapId,
    which: Restriction,
    a: &Scalar,
    b: &Scalar,
    x: &Point,
) -> Result<Point> {
    let p = maps::projection(id, x);
    if &p[0] != a || &p[1] != b {
        return Err(Error::NotOnVariety {
            a: a.to_string(),
            b: b.to_string(),
            found: p.to_string(),
        });
    }
    match which {
        Restriction::FixedFiber => {
            if !a.is_one() || !b.is_one() {
                return Err(Error::InvalidParameter(
                    "the single-step restriction is only defined on the fixed fiber (1, 1)"
                        .into(),
                ));
            }
            Ok(match id {
                MapId::F0 => f0_fixed_fiber_map().apply(x),
                MapId::Dp3 => dp3_fiber_single_step(x),
            })
        }
        Restriction::PeriodBlock => Ok(match id {
            MapId::F0 => f0_period_block_map(a, b).apply(x),
            MapId::Dp3 => dp3_period_block_map(a, b).apply(x),
        }),
    }
}
