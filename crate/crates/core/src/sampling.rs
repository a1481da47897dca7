//! Seeded random sampling of scalars and points.
//!
//! Every verification suite draws its inputs through a [`Sampler`], so a
//! run is reproducible from its seed alone. Numerators and denominators are
//! drawn uniformly from `1..=100`: small heights keep exact arithmetic fast
//! while still exercising nontrivial identities.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::maps::{MapId, MapKind, Point};
use crate::numeric::Scalar;

/// Deterministic source of random positive rationals and phase-space points.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A positive rational with numerator and denominator uniform in
    /// `1..=100`.
    pub fn scalar(&mut self) -> Scalar {
        let n = self.rng.gen_range(1i64..=100);
        let d = self.rng.gen_range(1i64..=100);
        Scalar::frac(n, d)
    }

    /// A positive rational that is the square of one drawn at height ≤ 10,
    /// for paths that need exact square roots.
    pub fn square_scalar(&mut self) -> Scalar {
        let n = self.rng.gen_range(1i64..=10);
        let d = self.rng.gen_range(1i64..=10);
        Scalar::frac(n * n, d * d)
    }

    /// A point of the requested arity with independently sampled coordinates.
    pub fn point(&mut self, arity: usize) -> Point {
        Point::new((0..arity).map(|_| self.scalar()).collect())
            .expect("sampled coordinates are positive")
    }

    /// A plane point.
    pub fn plane_point(&mut self) -> Point {
        self.point(2)
    }

    /// A plane point distinct from `avoid` (e.g. off the fixed point).
    pub fn plane_point_avoiding(&mut self, avoid: &Point) -> Point {
        loop {
            let p = self.plane_point();
            if &p != avoid {
                return p;
            }
        }
    }

    /// A point of the arity the selected map layer acts on.
    pub fn point_for(&mut self, id: MapId, kind: MapKind) -> Point {
        self.point(kind.arity(id))
    }

    /// A uniform index below `bound`, for seeded choice from a finite list.
    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}
