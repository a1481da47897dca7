//! The two map families and the projections connecting them.
//!
//! Each family consists of a birational map on the full phase space (arity 4
//! or 6), a two-dimensional symplectic reduction of it, and a very simple
//! globally periodic map conjugate to the reduction. The maps are tied
//! together by a reduction `Π`, a conjugacy `Π̃`, and their composition `π`:
//!
//! ```text
//!   full space ──quiver_map──▶ full space
//!       │ reduction                │ reduction
//!       ▼                          ▼
//!   plane ─────reduced_map────▶ plane
//!       │ conjugacy                │ conjugacy
//!       ▼                          ▼
//!   plane ─────periodic_map───▶ plane
//! ```
//!
//! Both squares commute exactly over the positive rationals; the property
//! tests at the bottom of this file and the `verify` suites check this on
//! random points with exact equality.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::numeric::{Jet2, Scalar};

/// Selects one of the two map families.
///
/// `F0` acts on arity-4 points and reduces to a globally 4-periodic map;
/// `Dp3` acts on arity-6 points and reduces to a globally 6-periodic one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapId {
    F0,
    Dp3,
}

impl MapId {
    /// Dimension of the full phase space (4 or 6).
    pub fn arity(self) -> usize {
        match self {
            MapId::F0 => 4,
            MapId::Dp3 => 6,
        }
    }

    /// Period of the associated globally periodic plane map (4 or 6).
    pub fn period(self) -> usize {
        match self {
            MapId::F0 => 4,
            MapId::Dp3 => 6,
        }
    }

    /// Both families, for iteration in tests and verification suites.
    pub const ALL: [MapId; 2] = [MapId::F0, MapId::Dp3];
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapId::F0 => write!(f, "f0"),
            MapId::Dp3 => write!(f, "dp3"),
        }
    }
}

/// Which layer of a family to apply: the full birational map, its
/// two-dimensional reduction, or the globally periodic plane map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Full,
    Reduced,
    Periodic,
}

impl MapKind {
    /// Arity of the points this layer acts on.
    pub fn arity(self, id: MapId) -> usize {
        match self {
            MapKind::Full => id.arity(),
            MapKind::Reduced | MapKind::Periodic => 2,
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapKind::Full => write!(f, "phi"),
            MapKind::Reduced => write!(f, "phihat"),
            MapKind::Periodic => write!(f, "psi"),
        }
    }
}

/// A phase-space point: an ordered tuple of strictly positive rationals with
/// arity 2 (plane), 4, or 6 (full spaces).
#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    coords: Vec<Scalar>,
}

impl Point {
    /// Builds a point, validating arity and strict positivity.
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let n = coords.len();
        if !matches!(n, 2 | 4 | 6) {
            return Err(Error::InvalidParameter(format!(
                "point arity must be 2, 4 or 6, got {n}"
            )));
        }
        for (i, c) in coords.iter().enumerate() {
            if !c.is_positive() {
                return Err(Error::NonPositive {
                    index: i + 1,
                    value: c.to_string(),
                });
            }
        }
        Ok(Point { coords })
    }

    /// Builds a plane point. Positivity is the caller's responsibility; all
    /// internal producers (map images of positive points) satisfy it.
    pub fn pair(x: Scalar, y: Scalar) -> Self {
        debug_assert!(x.is_positive() && y.is_positive());
        Point { coords: vec![x, y] }
    }

    /// Internal constructor for coordinates already known to be positive.
    pub(crate) fn from_raw(coords: Vec<Scalar>) -> Self {
        debug_assert!(coords.iter().all(Scalar::is_positive));
        Point { coords }
    }

    /// Convenience constructor from small integers, for tests and examples.
    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Point::new(coords.iter().copied().map(Scalar::from_int).collect())
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Largest bit length over all numerators and denominators; a cheap
    /// measure of how much the coordinates have grown along an orbit.
    pub fn bit_length(&self) -> u64 {
        self.coords.iter().map(Scalar::bit_length).max().unwrap_or(0)
    }
}

impl Index<usize> for Point {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_arity(expected: usize, p: &Point) -> &Point {
    assert_eq!(
        expected,
        p.arity(),
        "map applied to a point of the wrong arity"
    );
    p
}

/// The full birational map of the family (arity 4 for `F0`, 6 for `Dp3`).
///
/// `F0`: `(x1,..,x4) ↦ (x3, x4, (x2²+x3²)/x1, (x1²x4² + (x2²+x3²)²)/(x1²x2))`.
/// `Dp3`: `(x1,..,x6) ↦ (x3, x4, x5, x6, (x2x4+x3x5)/x1,
/// (x1x4x6 + x2x4x5 + x3x5²)/(x1x2))`.
pub fn quiver_map(id: MapId, x: &Point) -> Point {
    check_arity(id.arity(), x);
    let c = x.coords();
    match id {
        MapId::F0 => {
            let (x1, x2, x3, x4) = (&c[0], &c[1], &c[2], &c[3]);
            let s = x2 * x2 + x3 * x3;
            let y3 = &s / x1;
            let y4 = (x1 * x1 * (x4 * x4) + &s * &s) / (x1 * x1 * x2);
            Point::from_raw(vec![x3.clone(), x4.clone(), y3, y4])
        }
        MapId::Dp3 => {
            let (x1, x2, x3, x4, x5, x6) = (&c[0], &c[1], &c[2], &c[3], &c[4], &c[5]);
            let y5 = (x2 * x4 + x3 * x5) / x1;
            let y6 = (x1 * x4 * x6 + x2 * x4 * x5 + x3 * (x5 * x5)) / (x1 * x2);
            Point::from_raw(vec![
                x3.clone(),
                x4.clone(),
                x5.clone(),
                x6.clone(),
                y5,
                y6,
            ])
        }
    }
}

/// The two-dimensional symplectic reduction of the family.
///
/// `F0`: `(x,y) ↦ (y(x² + (1+y²)²)/x², (1+y²)/x)`.
/// `Dp3`: `(x,y) ↦ (y/(1+x), y(1+x+y)/(x(1+x)²))`.
pub fn reduced_map(id: MapId, p: &Point) -> Point {
    check_arity(2, p);
    let (x, y) = (&p[0], &p[1]);
    let one = Scalar::one();
    match id {
        MapId::F0 => {
            let t = &one + y * y;
            let u = y * (x * x + &t * &t) / (x * x);
            let v = &t / x;
            Point::pair(u, v)
        }
        MapId::Dp3 => {
            let w = &one + x;
            let u = y / &w;
            let v = y * (&w + y) / (x * (&w * &w));
            Point::pair(u, v)
        }
    }
}

/// The globally periodic plane map: `(x,y) ↦ (y, 1/x)` for `F0` (period 4)
/// and `(x,y) ↦ (y, y/x)` for `Dp3` (period 6).
pub fn periodic_map(id: MapId, p: &Point) -> Point {
    check_arity(2, p);
    let (x, y) = (&p[0], &p[1]);
    match id {
        MapId::F0 => Point::pair(y.clone(), x.recip()),
        MapId::Dp3 => Point::pair(y.clone(), y / x),
    }
}

/// The reduction `Π` from the full space onto the plane of the reduced map.
///
/// `F0`: `(x1,..,x4) ↦ (x1x4/x2², x3/x2)`.
/// `Dp3`: `(x1,..,x6) ↦ (x2x4/(x3x5), x1x4x6/(x3x5²))`.
pub fn reduction(id: MapId, x: &Point) -> Point {
    check_arity(id.arity(), x);
    let c = x.coords();
    match id {
        MapId::F0 => Point::pair(&c[0] * &c[3] / (&c[1] * &c[1]), &c[2] / &c[1]),
        MapId::Dp3 => Point::pair(
            &c[1] * &c[3] / (&c[2] * &c[4]),
            &c[0] * &c[3] * &c[5] / (&c[2] * (&c[4] * &c[4])),
        ),
    }
}

/// The conjugacy `Π̃` carrying the reduced map onto the periodic map.
///
/// `F0`: `(x,y) ↦ (y(1+y²)/x, (1+y²)/(xy))`. `Dp3`: `(x,y) ↦ (x, y/(1+x))`.
pub fn conjugacy(id: MapId, p: &Point) -> Point {
    check_arity(2, p);
    let (x, y) = (&p[0], &p[1]);
    let one = Scalar::one();
    match id {
        MapId::F0 => {
            let t = &one + y * y;
            Point::pair(y * &t / x, &t / (x * y))
        }
        MapId::Dp3 => Point::pair(x.clone(), y / (&one + x)),
    }
}

/// The inverse of [`conjugacy`].
///
/// `F0`: `(x,y) ↦ ((x+y)/y² · √(y/x), √(x/y))`, defined over the rationals
/// only when `y/x` is a perfect square. `Dp3`: `(x,y) ↦ (x, (1+x)y)`, always
/// defined.
pub fn conjugacy_inverse(id: MapId, p: &Point) -> Result<Point> {
    check_arity(2, p);
    let (x, y) = (&p[0], &p[1]);
    match id {
        MapId::F0 => {
            let r = (y / x).sqrt_exact()?;
            let u = (x + y) / (y * y) * &r;
            Ok(Point::pair(u, r.recip()))
        }
        MapId::Dp3 => Ok(Point::pair(x.clone(), (Scalar::one() + x) * y)),
    }
}

/// The projection `π` from the full space onto the plane of the periodic
/// map, in its directly displayed form.
///
/// `F0`: `(x1,..,x4) ↦ (x3(x2²+x3²)/(x1x2x4), x2(x2²+x3²)/(x1x3x4))`.
/// `Dp3`: `(x1,..,x6) ↦ (x2x4/(x3x5), x1x4x6/(x5(x2x4+x3x5)))`.
///
/// Algebraically this equals [`projection_composed`]; both are implemented
/// from their own formulas and cross-checked exactly so a transcription slip
/// in either one is caught.
pub fn projection(id: MapId, x: &Point) -> Point {
    check_arity(id.arity(), x);
    let c = x.coords();
    match id {
        MapId::F0 => {
            let s = &c[1] * &c[1] + &c[2] * &c[2];
            Point::pair(
                &c[2] * &s / (&c[0] * &c[1] * &c[3]),
                &c[1] * &s / (&c[0] * &c[2] * &c[3]),
            )
        }
        MapId::Dp3 => Point::pair(
            &c[1] * &c[3] / (&c[2] * &c[4]),
            &c[0] * &c[3] * &c[5] / (&c[4] * (&c[1] * &c[3] + &c[2] * &c[4])),
        ),
    }
}

/// `π` computed as conjugacy ∘ reduction, the defining factorization.
pub fn projection_composed(id: MapId, x: &Point) -> Point {
    conjugacy(id, &reduction(id, x))
}

/// Applies one step of the selected layer.
pub fn apply(id: MapId, kind: MapKind, p: &Point) -> Point {
    match kind {
        MapKind::Full => quiver_map(id, p),
        MapKind::Reduced => reduced_map(id, p),
        MapKind::Periodic => periodic_map(id, p),
    }
}

/// The `n`-fold composition of the selected layer; `n = 0` is the identity.
pub fn iterate(id: MapId, kind: MapKind, p: &Point, n: usize) -> Point {
    let mut q = p.clone();
    for _ in 0..n {
        q = apply(id, kind, &q);
    }
    q
}

/// [`reduced_map`] evaluated on jets, for exact Jacobians.
///
/// Mirrors the scalar formulas term by term; the agreement of values with
/// [`reduced_map`] and of derivatives with hand-derived Jacobians is pinned
/// in tests.
pub fn reduced_map_jet(id: MapId, p: &[Jet2; 2]) -> [Jet2; 2] {
    let (x, y) = (&p[0], &p[1]);
    let one = Jet2::from_int(1);
    match id {
        MapId::F0 => {
            let t = &one + &y.square();
            let u = &(y * &(&x.square() + &t.square())) / &x.square();
            let v = &t / x;
            [u, v]
        }
        MapId::Dp3 => {
            let w = &one + x;
            let u = y / &w;
            let v = &(y * &(&w + y)) / &(x * &w.square());
            [u, v]
        }
    }
}

/// [`periodic_map`] evaluated on jets.
pub fn periodic_map_jet(id: MapId, p: &[Jet2; 2]) -> [Jet2; 2] {
    let (x, y) = (&p[0], &p[1]);
    match id {
        MapId::F0 => [y.clone(), x.recip()],
        MapId::Dp3 => [y.clone(), y / x],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::seed_pair;

    fn pt(coords: &[i64]) -> Point {
        Point::from_ints(coords).unwrap()
    }

    fn pair(x: &str, y: &str) -> Point {
        Point::pair(x.parse().unwrap(), y.parse().unwrap())
    }

    #[test]
    fn point_rejects_nonpositive_coordinates() {
        let err = Point::from_ints(&[1, 0, 1, 1]).unwrap_err();
        assert!(matches!(err, Error::NonPositive { index: 2, .. }));
        let err = Point::from_ints(&[1, 1, -3, 1]).unwrap_err();
        assert!(matches!(err, Error::NonPositive { index: 3, .. }));
    }

    #[test]
    fn point_rejects_unsupported_arity() {
        assert!(Point::from_ints(&[1, 2, 3]).is_err());
        assert!(Point::from_ints(&[]).is_err());
        assert!(Point::from_ints(&[1, 2, 3, 4, 5, 6, 7]).is_err());
    }

    #[test]
    fn quiver_map_hand_values() {
        assert_eq!(quiver_map(MapId::F0, &pt(&[1, 1, 1, 1])), pt(&[1, 1, 2, 5]));
        assert_eq!(quiver_map(MapId::F0, &pt(&[1, 1, 1, 2])), pt(&[1, 2, 2, 8]));
        assert_eq!(
            quiver_map(MapId::Dp3, &pt(&[1, 1, 1, 1, 1, 1])),
            pt(&[1, 1, 1, 1, 2, 3])
        );
        assert_eq!(
            quiver_map(MapId::Dp3, &pt(&[1, 1, 1, 1, 1, 2])),
            pt(&[1, 1, 1, 2, 2, 4])
        );
    }

    #[test]
    fn reduced_map_fixed_points_and_hand_values() {
        assert_eq!(reduced_map(MapId::F0, &pt(&[2, 1])), pt(&[2, 1]));
        assert_eq!(reduced_map(MapId::Dp3, &pt(&[1, 2])), pt(&[1, 2]));
        assert_eq!(reduced_map(MapId::F0, &pt(&[1, 1])), pt(&[5, 2]));
        assert_eq!(
            reduced_map(MapId::Dp3, &pt(&[1, 1])),
            pair("1/2", "3/4")
        );
    }

    #[test]
    fn periodic_map_hand_values() {
        assert_eq!(periodic_map(MapId::F0, &pt(&[1, 1])), pt(&[1, 1]));
        assert_eq!(periodic_map(MapId::F0, &pt(&[2, 3])), pair("3", "1/2"));
        assert_eq!(periodic_map(MapId::Dp3, &pt(&[2, 3])), pair("3", "3/2"));
    }

    #[test]
    fn reduction_hand_values() {
        assert_eq!(reduction(MapId::F0, &pt(&[1, 1, 1, 1])), pt(&[1, 1]));
        assert_eq!(reduction(MapId::F0, &pt(&[1, 2, 3, 4])), pair("1", "3/2"));
        assert_eq!(reduction(MapId::Dp3, &pt(&[1, 1, 1, 1, 1, 1])), pt(&[1, 1]));
    }

    #[test]
    fn conjugacy_hand_values() {
        assert_eq!(conjugacy(MapId::F0, &pt(&[1, 1])), pt(&[2, 2]));
        assert_eq!(conjugacy(MapId::Dp3, &pt(&[1, 1])), pair("1", "1/2"));
        assert_eq!(conjugacy(MapId::Dp3, &pt(&[3, 8])), pt(&[3, 2]));
    }

    #[test]
    fn conjugacy_inverse_hand_values() {
        assert_eq!(conjugacy_inverse(MapId::F0, &pt(&[2, 2])).unwrap(), pt(&[1, 1]));
        assert_eq!(
            conjugacy_inverse(MapId::Dp3, &pair("1", "1/2")).unwrap(),
            pt(&[1, 1])
        );
        let err = conjugacy_inverse(MapId::F0, &pt(&[2, 3])).unwrap_err();
        assert!(matches!(err, Error::NotPerfectSquare(_)));
    }

    #[test]
    fn projection_hand_values() {
        assert_eq!(projection(MapId::F0, &pt(&[1, 1, 1, 1])), pt(&[2, 2]));
        assert_eq!(
            projection(MapId::Dp3, &pt(&[1, 1, 1, 1, 1, 1])),
            pair("1", "1/2")
        );
        // One full-map step downstairs equals one periodic-map step.
        assert_eq!(
            projection(MapId::Dp3, &pt(&[1, 1, 1, 1, 2, 3])),
            pair("1/2", "1/2")
        );
        assert_eq!(
            periodic_map(MapId::Dp3, &pair("1", "1/2")),
            pair("1/2", "1/2")
        );
    }

    #[test]
    fn iterate_periodic_chains() {
        let p = pt(&[2, 3]);
        assert_eq!(iterate(MapId::F0, MapKind::Periodic, &p, 4), p);
        assert_eq!(iterate(MapId::Dp3, MapKind::Periodic, &p, 6), p);
        assert_eq!(
            iterate(MapId::F0, MapKind::Full, &pt(&[1, 1, 1, 2]), 2),
            pt(&[2, 8, 8, 64])
        );
        assert_eq!(iterate(MapId::F0, MapKind::Full, &pt(&[1, 1, 1, 2]), 0), pt(&[1, 1, 1, 2]));
    }

    #[test]
    fn reduced_map_jet_matches_hand_jacobian_f0() {
        // At (1,1): rows (-8, 13) and (-2, 2), derived by hand from the
        // displayed formulas.
        let [x, y] = seed_pair(&Scalar::one(), &Scalar::one());
        let [u, v] = reduced_map_jet(MapId::F0, &[x, y]);
        assert_eq!(u.value, Scalar::from_int(5));
        assert_eq!(u.dx, Scalar::from_int(-8));
        assert_eq!(u.dy, Scalar::from_int(13));
        assert_eq!(v.value, Scalar::from_int(2));
        assert_eq!(v.dx, Scalar::from_int(-2));
        assert_eq!(v.dy, Scalar::from_int(2));
    }

    #[test]
    fn periodic_map_jet_matches_hand_jacobian() {
        // (x,y) ↦ (y, 1/x) at (2,3): rows (0, 1) and (-1/4, 0).
        let [x, y] = seed_pair(&Scalar::from_int(2), &Scalar::from_int(3));
        let [u, v] = periodic_map_jet(MapId::F0, &[x, y]);
        assert_eq!(u.dx, Scalar::zero());
        assert_eq!(u.dy, Scalar::one());
        assert_eq!(v.dx, Scalar::frac(-1, 4));
        assert_eq!(v.dy, Scalar::zero());
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
            #[test]
            fn reduction_intertwines_full_and_reduced_f0(x in full_point(MapId::F0)) {
                let id = MapId::F0;
                prop_assert_eq!(
                    reduction(id, &quiver_map(id, &x)),
                    reduced_map(id, &reduction(id, &x))
                );
            }

            #[test]
            fn reduction_intertwines_full_and_reduced_dp3(x in full_point(MapId::Dp3)) {
                let id = MapId::Dp3;
                prop_assert_eq!(
                    reduction(id, &quiver_map(id, &x)),
                    reduced_map(id, &reduction(id, &x))
                );
            }

            #[test]
            fn conjugacy_intertwines_reduced_and_periodic(p in plane_point()) {
                for id in MapId::ALL {
                    prop_assert_eq!(
                        conjugacy(id, &reduced_map(id, &p)),
                        periodic_map(id, &conjugacy(id, &p))
                    );
                }
            }

            #[test]
            fn projection_display_equals_composition(
                x4 in full_point(MapId::F0),
                x6 in full_point(MapId::Dp3),
            ) {
                prop_assert_eq!(
                    projection(MapId::F0, &x4),
                    projection_composed(MapId::F0, &x4)
                );
                prop_assert_eq!(
                    projection(MapId::Dp3, &x6),
                    projection_composed(MapId::Dp3, &x6)
                );
            }

            #[test]
            fn reduced_and_periodic_maps_are_globally_periodic(p in plane_point()) {
                for id in MapId::ALL {
                    let m = id.period();
                    prop_assert_eq!(iterate(id, MapKind::Periodic, &p, m), p.clone());
                    prop_assert_eq!(iterate(id, MapKind::Reduced, &p, m), p.clone());
                }
            }

            #[test]
            fn periodic_map_has_minimal_period_off_fixed_point(p in plane_point()) {
                let fixed = Point::pair(Scalar::one(), Scalar::one());
                prop_assume!(p != fixed);
                for id in MapId::ALL {
                    for k in 1..id.period() {
                        prop_assert_ne!(iterate(id, MapKind::Periodic, &p, k), p.clone());
                    }
                }
            }

            #[test]
            fn conjugacy_inverse_round_trips(p in plane_point()) {
                // Downward round trip, both families. For F0 the image of
                // the conjugacy always has a perfect-square coordinate
                // ratio, so the inverse applies.
                for id in MapId::ALL {
                    let q = conjugacy(id, &p);
                    prop_assert_eq!(conjugacy_inverse(id, &q).unwrap(), p.clone());
                }
            }

            #[test]
            fn conjugacy_inverse_upward_round_trip(
                t in scalar(), u in 1i64..=10, v in 1i64..=10, w in scalar(),
            ) {
                // F0 inverse needs a perfect-square ratio y/x; build one.
                let x = &t * &Scalar::frac(v * v, 1);
                let y = &t * &Scalar::frac(u * u, 1);
                let p = Point::pair(x, y);
                let back = conjugacy(MapId::F0, &conjugacy_inverse(MapId::F0, &p).unwrap());
                prop_assert_eq!(back, p);

                let q = Point::pair(w.clone(), t.clone());
                let back = conjugacy(MapId::Dp3, &conjugacy_inverse(MapId::Dp3, &q).unwrap());
                prop_assert_eq!(back, q);
            }

            #[test]
            fn jet_values_agree_with_scalar_maps(p in plane_point()) {
                let jets = seed_pair(&p[0], &p[1]);
                for id in MapId::ALL {
                    let [u, v] = reduced_map_jet(id, &jets);
                    let q = reduced_map(id, &p);
                    prop_assert_eq!(&u.value, &q[0]);
                    prop_assert_eq!(&v.value, &q[1]);
                    let [u, v] = periodic_map_jet(id, &jets);
                    let q = periodic_map(id, &p);
                    prop_assert_eq!(&u.value, &q[0]);
                    prop_assert_eq!(&v.value, &q[1]);
                }
            }
        }
    }
}
