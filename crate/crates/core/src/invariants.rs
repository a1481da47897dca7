//! First integrals and the invariant sets they carve out.
//!
//! The periodic plane maps are completely integrable; two independent
//! integrals of each lift through the projection `π` to integrals of the
//! full maps. Orbits of the full map are thereby confined to common level
//! sets, and those level sets decompose into the fibers of `π`:
//!
//! * [`VarietyC`] — a single fiber `{x : π(x) = (a, b)}`; the orbit of any
//!   point circulates through the `m` fibers over the periodic orbit of its
//!   projection, advancing one sheet per step ([`sheet_index`]).
//! * [`VarietyD`] — for the arity-6 family only, the two restricted
//!   integrals cut each fiber down to a two-dimensional set; one map step
//!   sends `D` with parameters `q` onto the `D` with parameters
//!   [`d_params_step`]`(q)`, a globally 6-periodic parameter motion.
//! * [`level_set_candidates`] — the full common level set of the lifted
//!   integrals meets the plane in the periodic orbits of `P` and of its
//!   reflection `σ(P)`; whether those coincide is decided exactly by the
//!   integrals' Jacobian determinant at `P`.

use crate::closed_form::Restriction;
use crate::error::{Error, Result};
use crate::maps::{self, MapId, Point};
use crate::numeric::{seed_pair, Jet2, Scalar};

/// Values of a pair of first integrals at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralValues {
    pub j1: Scalar,
    pub j2: Scalar,
}

// ---------------------------------------------------------------------------
// Integrals of the periodic plane maps, and their lifts
// ---------------------------------------------------------------------------

/// The two first integrals of the periodic plane map.
///
/// Arity-4 family (period 4): `I₁ = x + y + 1/x + 1/y`,
/// `I₂ = xy + 1/(xy) + x/y + y/x`.
/// Arity-6 family (period 6): `I₁ = x + y + 1/x + 1/y + y/x + x/y`,
/// `I₂ = x² + y² + 1/x² + 1/y² + x²/y² + y²/x²`.
pub fn periodic_integrals(id: MapId, p: &Point) -> IntegralValues {
    assert_eq!(2, p.arity(), "integrals take plane points");
    let (x, y) = (&p[0], &p[1]);
    match id {
        MapId::F0 => IntegralValues {
            j1: x + y + x.recip() + y.recip(),
            j2: x * y + (x * y).recip() + x / y + y / x,
        },
        MapId::Dp3 => {
            let q = (x / y).pow(2);
            IntegralValues {
                j1: x + y + x.recip() + y.recip() + y / x + x / y,
                j2: x.pow(2) + y.pow(2) + x.pow(-2) + y.pow(-2) + &q + q.recip(),
            }
        }
    }
}

/// [`periodic_integrals`] on jets, for exact gradients.
pub fn periodic_integrals_jet(id: MapId, p: &[Jet2; 2]) -> [Jet2; 2] {
    let (x, y) = (&p[0], &p[1]);
    match id {
        MapId::F0 => {
            let xy = x * y;
            [
                &(x + y) + &(&x.recip() + &y.recip()),
                &(&xy + &xy.recip()) + &(&(x / y) + &(y / x)),
            ]
        }
        MapId::Dp3 => {
            let q = (&(x / y)).square();
            [
                &(&(x + y) + &(&x.recip() + &y.recip())) + &(&(y / x) + &(x / y)),
                &(&(&x.square() + &y.square())
                    + &(&x.square().recip() + &y.square().recip()))
                    + &(&q + &q.recip()),
            ]
        }
    }
}

/// The lifted integrals `J_k = I_k ∘ π` of the full map.
pub fn lifted_integrals(id: MapId, x: &Point) -> IntegralValues {
    periodic_integrals(id, &maps::projection(id, x))
}

/// The lifted integrals of the arity-4 map in their directly displayed
/// form:
///
/// ```text
///   J₁ = (x₁²x₄² + (x₂²+x₃²)²)/(x₁x₂x₃x₄),
///   J₂ = x₁²x₄²/(x₂²+x₃²)² + (x₂²+x₃²)²/(x₁²x₄²) + x₃²/x₂² + x₂²/x₃².
/// ```
///
/// Agrees exactly with [`lifted_integrals`]`(F0, ·)`; both are implemented
/// from their own formulas and cross-checked.
pub fn f0_lifted_display(x: &Point) -> IntegralValues {
    assert_eq!(4, x.arity(), "the display is for arity-4 points");
    let c = x.coords();
    let (x1, x2, x3, x4) = (&c[0], &c[1], &c[2], &c[3]);
    let s = x2 * x2 + x3 * x3;
    let p = x1 * x1 * (x4 * x4);
    let r = &p / (&s * &s);
    let t = (x3 / x2).pow(2);
    IntegralValues {
        j1: (&p + &s * &s) / (x1 * x2 * x3 * x4),
        j2: &r + r.recip() + &t + t.recip(),
    }
}

/// The two first integrals of the restricted arity-6 maps.
///
/// On the fixed fiber (single-step restriction): `Ī₁ = x₂/x₃ + x₃/x₂`,
/// `Ī₂ = 2x₂²/(x₁x₅) + x₁x₅/x₂²`. On a general fiber (period-block
/// restriction): `Ĩ₁ = x₃/x₂`, `Ĩ₂ = x₁x₅/x₂²`.
pub fn dp3_restricted_integrals(which: Restriction, x: &Point) -> IntegralValues {
    assert_eq!(6, x.arity(), "restricted integrals take arity-6 points");
    let c = x.coords();
    let (x1, x2, x3, x5) = (&c[0], &c[1], &c[2], &c[4]);
    let ratio = x3 / x2;
    let prod = x1 * x5 / (x2 * x2);
    match which {
        Restriction::FixedFiber => IntegralValues {
            j1: &ratio + ratio.recip(),
            j2: Scalar::from_int(2) * prod.recip() + &prod,
        },
        Restriction::PeriodBlock => IntegralValues {
            j1: ratio,
            j2: prod,
        },
    }
}

// ---------------------------------------------------------------------------
// Jacobian of the integrals: independence locus and the level-set dichotomy
// ---------------------------------------------------------------------------

/// The Jacobian determinant of the arity-4 family's periodic integrals, in
/// its displayed factored form `(x−y)(xy−1)(x²−1)(y²−1)/(x³y³)`.
///
/// Must equal the jet-computed determinant exactly; its vanishing marks the
/// plane points where the two integrals are dependent, which is precisely
/// where a level set collapses from two periodic orbits to one.
pub fn f0_integral_jacobian_display(p: &Point) -> Scalar {
    assert_eq!(2, p.arity(), "the Jacobian is over the plane");
    let (x, y) = (&p[0], &p[1]);
    let one = Scalar::one();
    (x - y) * (x * y - &one) * (x * x - &one) * (y * y - &one) / (x.pow(3) * y.pow(3))
}

/// Jacobian determinant of the periodic integrals at `p`, computed by
/// exact forward differentiation.
pub fn integral_jacobian_det(id: MapId, p: &Point) -> Scalar {
    assert_eq!(2, p.arity(), "the Jacobian is over the plane");
    let jets = seed_pair(&p[0], &p[1]);
    let [i1, i2] = periodic_integrals_jet(id, &jets);
    &i1.dx * &i2.dy - &i1.dy * &i2.dx
}

/// Reflection across the diagonal: `(x, y) ↦ (y, x)`. An involution; the
/// level set through `P` is the union of the periodic orbits of `P` and of
/// its reflection.
pub fn reflect(p: &Point) -> Point {
    assert_eq!(2, p.arity(), "reflection acts on the plane");
    Point::pair(p[1].clone(), p[0].clone())
}

/// The full periodic orbit of a plane point: `[p, ψ(p), …, ψ^{m−1}(p)]`.
pub fn periodic_orbit(id: MapId, p: &Point) -> Vec<Point> {
    let mut orbit = Vec::with_capacity(id.period());
    let mut q = p.clone();
    for _ in 0..id.period() {
        orbit.push(q.clone());
        q = maps::periodic_map(id, &q);
    }
    orbit
}

/// The candidate plane points of the common level set through `(a, b)`:
/// the periodic orbit of `(a, b)` followed by that of `(b, a)`, with
/// duplicates removed (first occurrence kept).
///
/// For the arity-4 family this is the eight-point set `{(a,b), (b,a⁻¹),
/// (a⁻¹,b⁻¹), (b⁻¹,a), (b,a), (a,b⁻¹), (b⁻¹,a⁻¹), (a⁻¹,b)}`; for the
/// arity-6 family it is the up-to-twelve analogous points. The set
/// collapses exactly when [`integral_jacobian_det`] vanishes at `(a, b)`.
pub fn level_set_candidates(id: MapId, a: &Scalar, b: &Scalar) -> Vec<Point> {
    let p = Point::pair(a.clone(), b.clone());
    let mut points = periodic_orbit(id, &p);
    points.extend(periodic_orbit(id, &reflect(&p)));
    let mut distinct: Vec<Point> = Vec::with_capacity(points.len());
    for q in points {
        if !distinct.contains(&q) {
            distinct.push(q);
        }
    }
    distinct
}

/// Whether `(u, v)` satisfies the two polynomial equations cutting out the
/// plane trace of the arity-4 level set through `(a, b)`:
///
/// ```text
///   u²v + uv² + u + v − (a + b + 1/a + 1/b)·uv = 0,
///   u²v² + u² + v² + 1 − (ab + 1/(ab) + a/b + b/a)·uv = 0.
/// ```
///
/// Over positive points this is equivalent to equality of the periodic
/// integrals at `(u, v)` and `(a, b)` (clear denominators by `uv`).
pub fn f0_level_equations_hold(a: &Scalar, b: &Scalar, u: &Scalar, v: &Scalar) -> bool {
    let vals = periodic_integrals(MapId::F0, &Point::pair(a.clone(), b.clone()));
    let uv = u * v;
    let one = Scalar::one();
    let eq1 = u * u * v + u * (v * v) + u + v - &vals.j1 * &uv;
    let eq2 = &uv * &uv + u * u + v * v + &one - &vals.j2 * &uv;
    eq1.is_zero() && eq2.is_zero()
}

/// All positive rationals of height at most `h` (numerator and denominator
/// at most `h` in lowest terms), for bounded brute-force searches.
pub fn rationals_of_height(h: i64) -> Vec<Scalar> {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    let mut out = Vec::new();
    for p in 1..=h {
        for q in 1..=h {
            if gcd(p, q) == 1 {
                out.push(Scalar::frac(p, q));
            }
        }
    }
    out
}

/// Exhaustive search for plane points on the level set through `(a, b)`
/// with both coordinates of height at most `h`. Used as an oracle that the
/// candidate set of [`level_set_candidates`] is complete at desk scale.
pub fn level_set_solutions_bounded(
    id: MapId,
    a: &Scalar,
    b: &Scalar,
    h: i64,
) -> Vec<Point> {
    let grid = rationals_of_height(h);
    let target = periodic_integrals(id, &Point::pair(a.clone(), b.clone()));
    let mut found = Vec::new();
    for u in &grid {
        for v in &grid {
            let q = Point::pair(u.clone(), v.clone());
            if periodic_integrals(id, &q) == target {
                found.push(q);
            }
        }
    }
    found
}

// ---------------------------------------------------------------------------
// The fibers of π and the sheet decomposition
// ---------------------------------------------------------------------------

/// Index of the sheet of the decomposition over `base` on which `x` lies:
/// the smallest `i ∈ 0..m` with `π(x) = ψ⁽ⁱ⁾(base)`, or `None` if `x`
/// projects outside the periodic orbit of `base`.
///
/// The sheets are pairwise disjoint — hence the index unique — except over
/// the fixed point `(1, 1)`, where all `m` coincide and the smallest
/// matching index is `0`.
pub fn sheet_index(id: MapId, x: &Point, base: &Point) -> Option<usize> {
    let p = maps::projection(id, x);
    periodic_orbit(id, base).iter().position(|q| q == &p)
}

/// A fiber of the projection `π`: `{x : π(x) = (a, b)}`, the invariant set
/// on which the period-block closed form and constants live.
#[derive(Clone, Debug)]
pub struct VarietyC {
    pub id: MapId,
    pub a: Scalar,
    pub b: Scalar,
}

impl VarietyC {
    pub fn new(id: MapId, a: Scalar, b: Scalar) -> Result<Self> {
        for (i, v) in [&a, &b].into_iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::NonPositive {
                    index: i + 1,
                    value: v.to_string(),
                });
            }
        }
        Ok(VarietyC { id, a, b })
    }

    /// Exact membership test through the projection.
    pub fn contains(&self, x: &Point) -> bool {
        let p = maps::projection(self.id, x);
        p[0] == self.a && p[1] == self.b
    }

    /// A point of the fiber from free coordinates.
    ///
    /// Arity 4 (two free coordinates `x₁, x₂`): solves the radical
    /// parametrization `x₃ = √(a/b)·x₂`, `x₄ = (x₂²+x₃²)/(√(ab)·x₁)`, so
    /// `a/b` and `ab` must be perfect squares of rationals.
    /// Arity 6 (four free coordinates `x₁, x₂, x₃, x₅`): radical-free,
    /// `x₄ = a·x₃x₅/x₂`, `x₆ = (b(a+1)/a)·x₂x₅/x₁`.
    pub fn sample(&self, free: &[Scalar]) -> Result<Point> {
        match self.id {
            MapId::F0 => {
                if free.len() != 2 {
                    return Err(Error::ArityMismatch {
                        expected: 2,
                        got: free.len(),
                    });
                }
                let ratio_root = (&self.a / &self.b).sqrt_exact()?;
                let prod_root = (&self.a * &self.b).sqrt_exact()?;
                let (x1, x2) = (&free[0], &free[1]);
                let x3 = &ratio_root * x2;
                let x4 = (x2 * x2 + &x3 * &x3) / (&prod_root * x1);
                Point::new(vec![x1.clone(), x2.clone(), x3, x4])
            }
            MapId::Dp3 => {
                if free.len() != 4 {
                    return Err(Error::ArityMismatch {
                        expected: 4,
                        got: free.len(),
                    });
                }
                let (x1, x2, x3, x5) = (&free[0], &free[1], &free[2], &free[3]);
                let one = Scalar::one();
                let x4 = &self.a * x3 * x5 / x2;
                let x6 = &self.b * (&self.a + &one) / &self.a * x2 * x5 / x1;
                Point::new(vec![
                    x1.clone(),
                    x2.clone(),
                    x3.clone(),
                    x4,
                    x5.clone(),
                    x6,
                ])
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The two-dimensional confinement of arity-6 orbits
// ---------------------------------------------------------------------------

/// The two-dimensional algebraic set inside the arity-6 fiber over
/// `(a, b)` cut out by the restricted integrals:
///
/// ```text
///   z₄ = a·z₃z₅/z₂,  z₆ = (b(a+1)/a)·z₂z₅/z₁,  z₃ = c·z₂,  z₁z₅ = d·z₂².
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyD {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl VarietyD {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        for (i, v) in [&a, &b, &c, &d].into_iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::NonPositive {
                    index: i + 1,
                    value: v.to_string(),
                });
            }
        }
        Ok(VarietyD { a, b, c, d })
    }

    /// The unique set of this family through `z`: `(a, b) = π(z)`,
    /// `c = z₃/z₂`, `d = z₁z₅/z₂²`.
    pub fn through(z: &Point) -> Self {
        assert_eq!(6, z.arity(), "this confinement is for arity-6 points");
        let p = maps::projection(MapId::Dp3, z);
        let c = z.coords();
        VarietyD {
            a: p[0].clone(),
            b: p[1].clone(),
            c: &c[2] / &c[1],
            d: &c[0] * &c[4] / (&c[1] * &c[1]),
        }
    }

    /// Exact membership: all four defining equations.
    pub fn contains(&self, z: &Point) -> bool {
        assert_eq!(6, z.arity(), "this confinement is for arity-6 points");
        let c = z.coords();
        let one = Scalar::one();
        c[3] == &self.a * &c[2] * &c[4] / &c[1]
            && c[5] == &self.b * (&self.a + &one) / &self.a * &c[1] * &c[4] / &c[0]
            && c[2] == &self.c * &c[1]
            && &c[0] * &c[4] == &self.d * &c[1] * &c[1]
    }

    /// A point of the set from the two free coordinates `z₁, z₂`.
    pub fn sample(&self, z1: &Scalar, z2: &Scalar) -> Point {
        let one = Scalar::one();
        let z3 = &self.c * z2;
        let z5 = &self.d * z2 * z2 / z1;
        let z4 = &self.a * &z3 * &z5 / z2;
        let z6 = &self.b * (&self.a + &one) / &self.a * z2 * &z5 / z1;
        Point::new(vec![z1.clone(), z2.clone(), z3, z4, z5, z6])
            .expect("positive parameters give a positive point")
    }

    /// The parameters of the set one full-map step carries this one onto.
    pub fn step(&self) -> Self {
        let [a, b, c, d] = d_params_step(&[
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]);
        VarietyD { a, b, c, d }
    }
}

/// One step of the parameter motion of [`VarietyD`] under the full map:
/// `(α, β, γ, δ) ↦ (β, β/α, 1/(αγ), (α+1)/(α²δ))`. Globally 6-periodic.
pub fn d_params_step(q: &[Scalar; 4]) -> [Scalar; 4] {
    let [alpha, beta, gamma, delta] = q;
    let one = Scalar::one();
    [
        beta.clone(),
        beta / alpha,
        (alpha * gamma).recip(),
        (alpha + &one) / (alpha * alpha * delta),
    ]
}

/// Membership in the fixed-fiber confinement of the arity-6 family:
///
/// ```text
///   z₄ = z₃z₅/z₂,  z₆ = 2z₂z₅/z₁,  z₂² + z₃² = c·z₂z₃,
///   2z₂⁴ + z₁²z₅² = d·z₁z₂²z₅,
/// ```
///
/// the level set of the fixed-fiber restricted integrals at `(c, d)`
/// inside the fiber over `(1, 1)`. Every orbit starting on that fiber
/// stays in the set with `c, d` read off the starting point.
pub fn dp3_confined_contains(c: &Scalar, d: &Scalar, z: &Point) -> bool {
    assert_eq!(6, z.arity(), "this confinement is for arity-6 points");
    let w = z.coords();
    let (z1, z2, z3, z4, z5, z6) = (&w[0], &w[1], &w[2], &w[3], &w[4], &w[5]);
    let two = Scalar::from_int(2);
    z4 == &(z3 * z5 / z2)
        && z6 == &(&two * z2 * z5 / z1)
        && z2 * z2 + z3 * z3 == c * z2 * z3
        && &two * z2.pow(4) + z1 * z1 * (z5 * z5) == d * z1 * (z2 * z2) * z5
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{iterate, quiver_map, MapKind};

    fn pt(coords: &[i64]) -> Point {
        Point::from_ints(coords).unwrap()
    }

    fn sc(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    fn pair(x: &str, y: &str) -> Point {
        Point::pair(sc(x), sc(y))
    }

    #[test]
    fn periodic_integrals_hand_values() {
        let v = periodic_integrals(MapId::F0, &pt(&[1, 1]));
        assert_eq!((v.j1, v.j2), (sc("4"), sc("4")));
        let v = periodic_integrals(MapId::F0, &pt(&[2, 2]));
        assert_eq!((v.j1, v.j2), (sc("5"), sc("25/4")));
        let v = periodic_integrals(MapId::Dp3, &pt(&[1, 1]));
        assert_eq!((v.j1, v.j2), (sc("6"), sc("6")));
    }

    #[test]
    fn lifted_integrals_hand_values_and_display() {
        let x = pt(&[1, 1, 1, 1]);
        let v = lifted_integrals(MapId::F0, &x);
        assert_eq!((v.j1.clone(), v.j2.clone()), (sc("5"), sc("25/4")));
        assert_eq!(f0_lifted_display(&x), v);
        let v = lifted_integrals(MapId::Dp3, &pt(&[1, 1, 1, 1, 1, 1]));
        assert_eq!((v.j1, v.j2), (sc("7"), sc("21/2")));
    }

    #[test]
    fn restricted_integrals_hand_values() {
        let x = pt(&[1, 1, 1, 1, 1, 2]);
        let v = dp3_restricted_integrals(Restriction::FixedFiber, &x);
        assert_eq!((v.j1, v.j2), (sc("2"), sc("3")));
        let v = dp3_restricted_integrals(Restriction::PeriodBlock, &x);
        assert_eq!((v.j1, v.j2), (sc("1"), sc("1")));
        // Equal second and third coordinates force the first fixed-fiber
        // integral to its minimum value 2.
        let x = pt(&[1, 2, 2, 5, 1, 7]);
        assert_eq!(dp3_restricted_integrals(Restriction::FixedFiber, &x).j1, sc("2"));
    }

    #[test]
    fn jacobian_display_hand_values() {
        assert!(f0_integral_jacobian_display(&pt(&[2, 1])).is_zero());
        assert_eq!(f0_integral_jacobian_display(&pt(&[2, 3])), sc("-5/9"));
        assert!(f0_integral_jacobian_display(&pair("5/7", "5/7")).is_zero());
    }

    #[test]
    fn jacobian_jets_agree_with_display() {
        for p in [pt(&[2, 3]), pair("1/3", "7/5"), pt(&[1, 1]), pt(&[4, 1])] {
            assert_eq!(
                integral_jacobian_det(MapId::F0, &p),
                f0_integral_jacobian_display(&p)
            );
        }
        // Arity-6 family: fixture derived by hand from the gradients.
        assert_eq!(integral_jacobian_det(MapId::Dp3, &pt(&[2, 3])), sc("35/324"));
        assert!(integral_jacobian_det(MapId::Dp3, &pair("2", "1/2")).is_zero());
        assert!(integral_jacobian_det(MapId::Dp3, &pt(&[2, 4])).is_zero());
    }

    #[test]
    fn reflection_is_an_involution() {
        assert_eq!(reflect(&pt(&[2, 3])), pt(&[3, 2]));
        assert_eq!(reflect(&pt(&[1, 1])), pt(&[1, 1]));
        let p = pair("3/7", "11/2");
        assert_eq!(reflect(&reflect(&p)), p);
    }

    #[test]
    fn parameter_step_hand_values_and_periodicity() {
        let q = [sc("1"), sc("1"), sc("1"), sc("1")];
        let step1 = d_params_step(&q);
        assert_eq!(step1, [sc("1"), sc("1"), sc("1"), sc("2")]);
        assert_eq!(d_params_step(&step1), q);
        let mut r = [sc("2"), sc("3"), sc("5/7"), sc("1/3")];
        let start = r.clone();
        for _ in 0..6 {
            r = d_params_step(&r);
        }
        assert_eq!(r, start);
    }

    #[test]
    fn octet_matches_its_displayed_points() {
        let got = level_set_candidates(MapId::F0, &sc("2"), &sc("3"));
        let want: Vec<Point> = [
            ("2", "3"),
            ("3", "1/2"),
            ("1/2", "1/3"),
            ("1/3", "2"),
            ("3", "2"),
            ("2", "1/3"),
            ("1/3", "1/2"),
            ("1/2", "3"),
        ]
        .iter()
        .map(|(u, v)| pair(u, v))
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn octet_collapses_on_the_dependence_locus() {
        assert_eq!(
            level_set_candidates(MapId::F0, &sc("1"), &sc("1")),
            vec![pt(&[1, 1])]
        );
        let four = level_set_candidates(MapId::F0, &sc("2"), &sc("1"));
        assert_eq!(four.len(), 4);
        // With the Jacobian zero at (2,1), the reflection orbit adds nothing.
        assert!(f0_integral_jacobian_display(&pt(&[2, 1])).is_zero());
        assert_eq!(four, periodic_orbit(MapId::F0, &pt(&[2, 1])));
    }

    #[test]
    fn dp3_candidates_split_or_collapse_with_the_jacobian() {
        let twelve = level_set_candidates(MapId::Dp3, &sc("2"), &sc("3"));
        assert_eq!(twelve.len(), 12);
        assert!(!integral_jacobian_det(MapId::Dp3, &pt(&[2, 3])).is_zero());
        // (2,4) lies on the collapse locus: the reflected orbit coincides.
        let six = level_set_candidates(MapId::Dp3, &sc("2"), &sc("4"));
        assert_eq!(six.len(), 6);
        assert!(integral_jacobian_det(MapId::Dp3, &pt(&[2, 4])).is_zero());
    }

    #[test]
    fn level_equations_accept_the_octet_and_reject_others() {
        let (a, b) = (sc("2"), sc("3"));
        for q in level_set_candidates(MapId::F0, &a, &b) {
            assert!(f0_level_equations_hold(&a, &b, &q[0], &q[1]));
        }
        assert!(!f0_level_equations_hold(&a, &b, &sc("2"), &sc("2")));
        assert!(!f0_level_equations_hold(&a, &b, &sc("1"), &sc("1")));
    }

    #[test]
    fn bounded_search_finds_exactly_the_octet() {
        let (a, b) = (sc("2"), sc("3"));
        let mut found = level_set_solutions_bounded(MapId::F0, &a, &b, 6);
        let mut octet = level_set_candidates(MapId::F0, &a, &b);
        found.sort_by_key(Point::to_string);
        octet.sort_by_key(Point::to_string);
        assert_eq!(found, octet);
    }

    #[test]
    fn sheet_index_examples() {
        let base = pt(&[2, 2]);
        let x = pt(&[1, 1, 1, 1]);
        assert_eq!(sheet_index(MapId::F0, &x, &base), Some(0));
        assert_eq!(sheet_index(MapId::F0, &quiver_map(MapId::F0, &x), &base), Some(1));
        assert_eq!(
            sheet_index(MapId::Dp3, &pt(&[1, 1, 1, 1, 1, 1]), &pt(&[3, 3])),
            None
        );
    }

    #[test]
    fn fiber_membership_and_sampling() {
        let c11 = VarietyC::new(MapId::F0, sc("1"), sc("1")).unwrap();
        assert_eq!(c11.sample(&[sc("1"), sc("1")]).unwrap(), pt(&[1, 1, 1, 2]));
        let c = VarietyC::new(MapId::Dp3, sc("1"), sc("1")).unwrap();
        assert_eq!(
            c.sample(&[sc("1"), sc("1"), sc("1"), sc("1")]).unwrap(),
            pt(&[1, 1, 1, 1, 1, 2])
        );
        let c = VarietyC::new(MapId::Dp3, sc("2"), sc("1")).unwrap();
        let x = c.sample(&[sc("1"), sc("1"), sc("1"), sc("1")]).unwrap();
        assert_eq!(x.coords()[3], sc("2"));
        assert_eq!(x.coords()[5], sc("3/2"));
        assert!(c.contains(&x));

        // Perfect-square parameters admit the radical parametrization...
        let c41 = VarietyC::new(MapId::F0, sc("4"), sc("1")).unwrap();
        let x = c41.sample(&[sc("3"), sc("5/2")]).unwrap();
        assert!(c41.contains(&x));
        // ...while non-square ratios are rejected.
        let c23 = VarietyC::new(MapId::F0, sc("2"), sc("3")).unwrap();
        assert!(matches!(
            c23.sample(&[sc("1"), sc("1")]),
            Err(Error::NotPerfectSquare(_))
        ));
        assert!(matches!(
            c23.sample(&[sc("1")]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn confinement_membership_examples() {
        let d = VarietyD::new(sc("1"), sc("1"), sc("1"), sc("1")).unwrap();
        assert!(d.contains(&pt(&[1, 1, 1, 1, 1, 2])));
        assert!(!d.contains(&pt(&[1, 1, 1, 1, 1, 1])));
        assert_eq!(VarietyD::through(&pt(&[1, 1, 1, 1, 1, 2])), d);
        let z = d.sample(&sc("3"), &sc("1/2"));
        assert!(d.contains(&z));
    }

    #[test]
    fn confinement_cycles_through_parameter_steps() {
        let d = VarietyD::new(sc("2"), sc("3"), sc("5/7"), sc("1/3")).unwrap();
        let mut z = d.sample(&sc("1"), &sc("2"));
        let mut cur = d.clone();
        for _ in 0..6 {
            assert!(cur.contains(&z));
            z = quiver_map(MapId::Dp3, &z);
            cur = cur.step();
        }
        assert_eq!(cur, d);
        assert!(cur.contains(&z));
    }

    #[test]
    fn fixed_fiber_confinement_holds_along_orbits() {
        let x = pt(&[1, 1, 1, 1, 1, 2]);
        let v = dp3_restricted_integrals(Restriction::FixedFiber, &x);
        let mut z = x.clone();
        for _ in 0..=8 {
            assert!(dp3_confined_contains(&v.j1, &v.j2, &z));
            z = quiver_map(MapId::Dp3, &z);
        }
        assert!(!dp3_confined_contains(&v.j1, &v.j2, &pt(&[1, 1, 1, 1, 1, 1])));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn scalar() -> impl Strategy<Value = Scalar> {
            (1i64..=100, 1i64..=100).prop_map(|(n, d)| Scalar::frac(n, d))
        }

        fn plane_point() -> impl Strategy<Value = Point> {
            (scalar(), scalar()).prop_map(|(x, y)| Point::pair(x, y))
        }

        fn full_point(id: MapId) -> impl Strategy<Value = Point> {
            proptest::collection::vec(scalar(), id.arity())
                .prop_map(|c| Point::new(c).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn periodic_integrals_are_invariant(p in plane_point()) {
                for id in MapId::ALL {
                    prop_assert_eq!(
                        periodic_integrals(id, &maps::periodic_map(id, &p)),
                        periodic_integrals(id, &p)
                    );
                }
            }

            #[test]
            fn lifted_integrals_are_invariant_f0(x in full_point(MapId::F0)) {
                let id = MapId::F0;
                prop_assert_eq!(
                    lifted_integrals(id, &quiver_map(id, &x)),
                    lifted_integrals(id, &x)
                );
                prop_assert_eq!(f0_lifted_display(&x), lifted_integrals(id, &x));
            }

            #[test]
            fn lifted_integrals_are_invariant_dp3(x in full_point(MapId::Dp3)) {
                let id = MapId::Dp3;
                prop_assert_eq!(
                    lifted_integrals(id, &quiver_map(id, &x)),
                    lifted_integrals(id, &x)
                );
            }

            #[test]
            fn jacobian_display_matches_jets(p in plane_point()) {
                prop_assert_eq!(
                    f0_integral_jacobian_display(&p),
                    integral_jacobian_det(MapId::F0, &p)
                );
            }

            #[test]
            fn level_equations_match_integral_equality(p in plane_point(), q in plane_point()) {
                let holds = f0_level_equations_hold(&p[0], &p[1], &q[0], &q[1]);
                let equal = periodic_integrals(MapId::F0, &p) == periodic_integrals(MapId::F0, &q);
                prop_assert_eq!(holds, equal);
            }

            #[test]
            fn candidates_all_share_the_level_set(p in plane_point()) {
                for id in MapId::ALL {
                    let target = periodic_integrals(id, &p);
                    for q in level_set_candidates(id, &p[0], &p[1]) {
                        prop_assert_eq!(periodic_integrals(id, &q), target.clone());
                    }
                }
            }

            #[test]
            fn candidate_collapse_tracks_the_jacobian(p in plane_point()) {
                for id in MapId::ALL {
                    let m = id.period();
                    let candidates = level_set_candidates(id, &p[0], &p[1]);
                    let orbit = periodic_orbit(id, &p);
                    let fixed = Point::pair(Scalar::one(), Scalar::one());
                    if integral_jacobian_det(id, &p).is_zero() {
                        // Dependence locus: one periodic orbit carries the
                        // whole level set.
                        let mut distinct: Vec<Point> = Vec::new();
                        for q in orbit {
                            if !distinct.contains(&q) {
                                distinct.push(q);
                            }
                        }
                        prop_assert_eq!(&candidates, &distinct);
                    } else {
                        prop_assert_ne!(&p, &fixed);
                        prop_assert_eq!(candidates.len(), 2 * m);
                    }
                }
            }

            #[test]
            fn restricted_block_integrals_are_invariant(x in full_point(MapId::Dp3)) {
                let p = maps::projection(MapId::Dp3, &x);
                let stepped = crate::closed_form::period_blocks_step(
                    MapId::Dp3, &p[0], &p[1], &x, 1,
                );
                prop_assert_eq!(
                    dp3_restricted_integrals(Restriction::PeriodBlock, &stepped),
                    dp3_restricted_integrals(Restriction::PeriodBlock, &x)
                );
            }

            #[test]
            fn restricted_fiber_integrals_are_invariant(
                x1 in scalar(), x2 in scalar(), x3 in scalar(), x5 in scalar(),
            ) {
                let fiber = VarietyC::new(MapId::Dp3, Scalar::one(), Scalar::one()).unwrap();
                let x = fiber.sample(&[x1, x2, x3, x5]).unwrap();
                prop_assert!(fiber.contains(&x));
                let stepped = quiver_map(MapId::Dp3, &x);
                prop_assert_eq!(
                    dp3_restricted_integrals(Restriction::FixedFiber, &stepped),
                    dp3_restricted_integrals(Restriction::FixedFiber, &x)
                );
            }

            #[test]
            fn sheets_advance_by_one_per_step(x4 in full_point(MapId::F0), x6 in full_point(MapId::Dp3)) {
                for (id, x) in [(MapId::F0, x4.clone()), (MapId::Dp3, x6.clone())] {
                    let base = maps::projection(id, &x);
                    let m = id.period();
                    let mut z = x.clone();
                    for n in 0..=m {
                        let i = sheet_index(id, &z, &base);
                        prop_assert_eq!(i, Some(n % m));
                        z = quiver_map(id, &z);
                    }
                }
            }

            #[test]
            fn whole_period_returns_to_the_same_fiber(x in full_point(MapId::Dp3)) {
                let id = MapId::Dp3;
                let p = maps::projection(id, &x);
                let z = iterate(id, MapKind::Full, &x, id.period());
                prop_assert_eq!(maps::projection(id, &z), p);
            }

            #[test]
            fn confinement_steps_onto_the_parameter_image(
                a in scalar(), b in scalar(), c in scalar(), d in scalar(),
                z1 in scalar(), z2 in scalar(),
            ) {
                let dv = VarietyD::new(a, b, c, d).unwrap();
                let z = dv.sample(&z1, &z2);
                prop_assert!(dv.contains(&z));
                prop_assert!(dv.step().contains(&quiver_map(MapId::Dp3, &z)));
            }

            #[test]
            fn parameter_step_is_six_periodic(
                a in scalar(), b in scalar(), c in scalar(), d in scalar(),
            ) {
                let start = [a, b, c, d];
                let mut q = start.clone();
                for _ in 0..6 {
                    q = d_params_step(&q);
                }
                prop_assert_eq!(q, start);
            }
        }
    }
}
