use std::fmt;

use super::Scalar;

/// First-order jet over [`Scalar`]: a value plus its two partial derivatives
/// with respect to a pair of independent variables.
///
/// Arithmetic follows the exact sum, product and quotient rules, so pushing a
/// seeded pair through any rational expression yields the exact Jacobian row
/// by row. Division panics if the divisor's value is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Jet2 {
    pub value: Scalar,
    pub dx: Scalar,
    pub dy: Scalar,
}

impl Jet2 {
    /// A constant: both partials vanish.
    pub fn constant(value: Scalar) -> Self {
        Jet2 {
            value,
            dx: Scalar::zero(),
            dy: Scalar::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Jet2::constant(Scalar::from_int(n))
    }

    /// Seed for the first independent variable: `dx = 1`.
    pub fn seed_x(value: Scalar) -> Self {
        Jet2 {
            value,
            dx: Scalar::one(),
            dy: Scalar::zero(),
        }
    }

    /// Seed for the second independent variable: `dy = 1`.
    pub fn seed_y(value: Scalar) -> Self {
        Jet2 {
            value,
            dx: Scalar::zero(),
            dy: Scalar::one(),
        }
    }

    /// Reciprocal: `(1/v)' = -v'/v^2`.
    pub fn recip(&self) -> Self {
        assert!(!self.value.is_zero(), "reciprocal of a zero-valued jet");
        let inv_sq = self.value.recip().pow(2);
        Jet2 {
            value: self.value.recip(),
            dx: -(&self.dx * &inv_sq),
            dy: -(&self.dy * &inv_sq),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Scales value and both partials by a constant.
    pub fn scale(&self, s: &Scalar) -> Self {
        Jet2 {
            value: &self.value * s,
            dx: &self.dx * s,
            dy: &self.dy * s,
        }
    }
}

impl fmt::Debug for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [d/dx {}, d/dy {}]", self.value, self.dx, self.dy)
    }
}

impl std::ops::Add for &Jet2 {
    type Output = Jet2;
    fn add(self, rhs: &Jet2) -> Jet2 {
        Jet2 {
            value: &self.value + &rhs.value,
            dx: &self.dx + &rhs.dx,
            dy: &self.dy + &rhs.dy,
        }
    }
}

impl std::ops::Sub for &Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: &Jet2) -> Jet2 {
        Jet2 {
            value: &self.value - &rhs.value,
            dx: &self.dx - &rhs.dx,
            dy: &self.dy - &rhs.dy,
        }
    }
}

impl std::ops::Mul for &Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: &Jet2) -> Jet2 {
        Jet2 {
            value: &self.value * &rhs.value,
            dx: &self.dx * &rhs.value + &self.value * &rhs.dx,
            dy: &self.dy * &rhs.value + &self.value * &rhs.dy,
        }
    }
}

impl std::ops::Div for &Jet2 {
    type Output = Jet2;
    fn div(self, rhs: &Jet2) -> Jet2 {
        self * &rhs.recip()
    }
}

impl std::ops::Neg for &Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 {
            value: -&self.value,
            dx: -&self.dx,
            dy: -&self.dy,
        }
    }
}

/// Seeds `(x, y)` with unit partials, ready to be pushed through a map.
pub fn seed_pair(x: &Scalar, y: &Scalar) -> [Jet2; 2] {
    [Jet2::seed_x(x.clone()), Jet2::seed_y(y.clone())]
}

/// Exact value and 2x2 Jacobian of a two-component rational map at `(x, y)`.
///
/// The Jacobian is row-major: `jac[i][j]` is the partial of component `i`
/// with respect to variable `j`.
pub fn jacobian2<F>(f: F, x: &Scalar, y: &Scalar) -> ([Scalar; 2], [[Scalar; 2]; 2])
where
    F: FnOnce(&Jet2, &Jet2) -> [Jet2; 2],
{
    let [jx, jy] = seed_pair(x, y);
    let [u, v] = f(&jx, &jy);
    (
        [u.value, v.value],
        [[u.dx, u.dy], [v.dx, v.dy]],
    )
}

/// Exact value and gradient of a scalar rational function at `(x, y)`.
pub fn gradient2<F>(f: F, x: &Scalar, y: &Scalar) -> (Scalar, [Scalar; 2])
where
    F: FnOnce(&Jet2, &Jet2) -> Jet2,
{
    let [jx, jy] = seed_pair(x, y);
    let u = f(&jx, &jy);
    (u.value, [u.dx, u.dy])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_map_has_identity_jacobian() {
        let (value, jac) = jacobian2(
            |x, y| [x.clone(), y.clone()],
            &Scalar::from_int(3),
            &Scalar::from_int(5),
        );
        assert_eq!(value, [Scalar::from_int(3), Scalar::from_int(5)]);
        assert_eq!(jac[0], [Scalar::one(), Scalar::zero()]);
        assert_eq!(jac[1], [Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn quotient_rule_is_exact() {
        // f(x, y) = x / y at (3, 4): df/dx = 1/4, df/dy = -3/16.
        let (value, grad) = gradient2(
            |x, y| x / y,
            &Scalar::from_int(3),
            &Scalar::from_int(4),
        );
        assert_eq!(value, Scalar::frac(3, 4));
        assert_eq!(grad, [Scalar::frac(1, 4), Scalar::frac(-3, 16)]);
    }

    #[test]
    fn stationary_point_of_symmetric_sum() {
        // x + 1/x + y + 1/y has value 4 and vanishing gradient at (1, 1).
        let (value, grad) = gradient2(
            |x, y| &(&(x + &x.recip()) + y) + &y.recip(),
            &Scalar::one(),
            &Scalar::one(),
        );
        assert_eq!(value, Scalar::from_int(4));
        assert_eq!(grad, [Scalar::zero(), Scalar::zero()]);
    }
}
