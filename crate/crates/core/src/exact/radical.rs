use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Rat;

/// `u + v·x̄ + w·x̄²` in `Q[x̄]/(x̄³ − α)`.
///
/// `α` is not required to be a non-cube; use [`is_rational_cube`] when the
/// quotient has to be a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadCubicNum {
    pub alpha: Rat,
    pub u: Rat,
    pub v: Rat,
    pub w: Rat,
}

impl RadCubicNum {
    /// Panics if `alpha` is zero.
    pub fn new(alpha: Rat, u: Rat, v: Rat, w: Rat) -> Self {
        assert!(!alpha.is_zero(), "radical extension needs alpha != 0");
        Self { alpha, u, v, w }
    }

    pub fn coeffs(&self) -> [&Rat; 3] {
        [&self.u, &self.v, &self.w]
    }

    fn with(&self, u: Rat, v: Rat, w: Rat) -> Self {
        Self { alpha: self.alpha.clone(), u, v, w }
    }

    /// Basis element `x̄^k`, `k < 3`.
    pub fn basis(alpha: &Rat, k: usize) -> Self {
        let mut c = [Rat::zero(), Rat::zero(), Rat::zero()];
        c[k] = Rat::from_integer(1.into());
        let [u, v, w] = c;
        Self::new(alpha.clone(), u, v, w)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.alpha, rhs.alpha);
        let a = &self.alpha;
        let (u1, v1, w1) = (&self.u, &self.v, &self.w);
        let (u2, v2, w2) = (&rhs.u, &rhs.v, &rhs.w);
        // x̄³ = α, x̄⁴ = αx̄
        self.with(
            u1 * u2 + a * (v1 * w2 + w1 * v2),
            u1 * v2 + v1 * u2 + a * (w1 * w2),
            u1 * w2 + v1 * v2 + w1 * u2,
        )
    }

    pub fn cube(&self) -> Self {
        self.mul(self).mul(self)
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero() && self.w.is_zero()
    }

    /// Matrix of multiplication by `self` in the basis `1, x̄, x̄²`; column `k`
    /// holds the coordinates of `self · x̄^k`.
    pub fn mult_matrix(&self) -> [[Rat; 3]; 3] {
        let cols: Vec<Self> = (0..3).map(|k| self.mul(&Self::basis(&self.alpha, k))).collect();
        std::array::from_fn(|i| std::array::from_fn(|j| cols[j].coeffs()[i].clone()))
    }

    pub fn trace(&self) -> Rat {
        let m = self.mult_matrix();
        &m[0][0] + &m[1][1] + &m[2][2]
    }
}

fn is_perfect_cube(n: &BigInt) -> bool {
    let r = n.abs().cbrt();
    &r * &r * &r == n.abs()
}

/// True iff `x³ = alpha` has a rational solution.
pub fn is_rational_cube(alpha: &Rat) -> bool {
    // lowest terms: n/d is a cube iff n and d both are
    is_perfect_cube(alpha.numer()) && is_perfect_cube(alpha.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn r(alpha: i64, u: i64, v: i64, w: i64) -> RadCubicNum {
        RadCubicNum::new(rat(alpha), rat(u), rat(v), rat(w))
    }

    /// Schoolbook product of polynomials in x̄ up to degree 6, reduced only at
    /// the end. Independent of `RadCubicNum::mul`.
    fn cube_oracle(alpha: i64, c: [i64; 3]) -> [i64; 3] {
        let mut sq = [0i64; 5];
        for i in 0..3 {
            for j in 0..3 {
                sq[i + j] += c[i] * c[j];
            }
        }
        let mut cu = [0i64; 7];
        for i in 0..5 {
            for j in 0..3 {
                cu[i + j] += sq[i] * c[j];
            }
        }
        let mut out = [0i64; 3];
        for (k, &x) in cu.iter().enumerate() {
            out[k % 3] += x * alpha.pow((k / 3) as u32);
        }
        out
    }

    #[test]
    fn cube_examples() {
        assert_eq!(r(2, 0, 1, 0).cube(), r(2, 2, 0, 0));
        assert_eq!(r(2, 1, 0, 0).cube(), r(2, 1, 0, 0));
        assert_eq!(cube_oracle(2, [0, 1, 1]), [6, 6, 6]);
        assert_eq!(r(2, 0, 1, 1).cube(), r(2, 6, 6, 6));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(r(2, 5, 7, 9).trace(), rat(15));
        assert_eq!(r(2, 0, 1, 0).trace(), rat(0));
        assert_eq!(r(2, 0, 0, 1).trace(), rat(0));
        assert_eq!(r(2, 1, 0, 0).trace(), rat(3));
    }

    #[test]
    fn cube_detection() {
        assert!(is_rational_cube(&rat(8)));
        assert!(is_rational_cube(&rat(-27)));
        assert!(is_rational_cube(&ratio(8, 125)));
        assert!(!is_rational_cube(&rat(2)));
        assert!(!is_rational_cube(&ratio(8, 3)));
    }

    proptest! {
        #[test]
        fn cube_matches_oracle(alpha in -6i64..7, u in -5i64..6, v in -5i64..6, w in -5i64..6) {
            prop_assume!(alpha != 0);
            let [a, b, c] = cube_oracle(alpha, [u, v, w]);
            prop_assert_eq!(r(alpha, u, v, w).cube(), r(alpha, a, b, c));
        }

        #[test]
        fn trace_is_three_u(alpha in -6i64..7, u in -50i64..50, v in -50i64..50, w in -50i64..50) {
            prop_assume!(alpha != 0);
            prop_assert_eq!(r(alpha, u, v, w).trace(), rat(3 * u));
        }

        #[test]
        fn trace_is_linear(u in -9i64..9, v in -9i64..9, w in -9i64..9, p in -9i64..9, q in -9i64..9, s in -9i64..9, k in -5i64..5) {
            let x = r(3, u, v, w);
            let y = r(3, p, q, s);
            let sum = r(3, u + k * p, v + k * q, w + k * s);
            prop_assert_eq!(sum.trace(), x.trace() + rat(k) * y.trace());
        }
    }
}
