use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{is_rational_cube, ratio, RadCubicNum, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadCubicReport {
    pub alpha: Rat,
    pub samples: usize,
    /// Samples whose cube came out rational.
    pub rational_cubes: usize,
    /// Samples where "cube is rational" and "at most one nonzero
    /// coordinate" disagree.
    pub mismatches: usize,
    /// Samples whose trace differs from `3u`.
    pub trace_failures: usize,
    /// Grid points where the `u = 0` expansion disagrees with the closed form.
    pub formula_failures: usize,
}

impl RadCubicReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.trace_failures == 0 && self.formula_failures == 0 && self.rational_cubes > 0
    }
}

/// `(v x̄ + w x̄²)³ = (v³α + w³α²) + 3αv²w·x̄ + 3αvw²·x̄²`.
pub fn u_zero_cube_formula(alpha: &Rat, v: &Rat, w: &Rat) -> [Rat; 3] {
    let three = Rat::from_integer(3.into());
    [
        v * v * v * alpha + w * w * w * alpha * alpha,
        &three * alpha * v * v * w,
        &three * alpha * v * w * w,
    ]
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Rat {
    let mut n = 0;
    while n == 0 {
        n = rng.random_range(-9..=9);
    }
    ratio(n, rng.random_range(1..=4))
}

/// Samples `y = u + v x̄ + w x̄²` with a random support pattern and checks
/// that `y³` is rational exactly when at most one coordinate is nonzero.
/// Also checks `tr(y) = 3u` on every sample and the `u = 0` expansion on a
/// grid.
pub fn rad_cubic_classification(alpha: &Rat, samples: usize, seed: u64) -> Result<RadCubicReport> {
    if alpha.is_zero() || is_rational_cube(alpha) {
        return Err(Error::InvalidArgument(format!("{alpha} is a rational cube")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rational_cubes = 0;
    let mut mismatches = 0;
    let mut trace_failures = 0;
    let three = ratio(3, 1);
    for _ in 0..samples {
        let support: u8 = rng.random_range(0..8);
        let mut c = [Rat::zero(), Rat::zero(), Rat::zero()];
        for (k, ck) in c.iter_mut().enumerate() {
            if support >> k & 1 == 1 {
                *ck = random_coeff(&mut rng);
            }
        }
        let [u, v, w] = c;
        let y = RadCubicNum::new(alpha.clone(), u, v, w);
        if y.trace() != &three * &y.u {
            trace_failures += 1;
        }
        let rational = y.cube().is_rational();
        rational_cubes += rational as usize;
        if rational != (support.count_ones() <= 1) {
            mismatches += 1;
        }
    }

    let grid: Vec<Rat> = [-2, -1, 1, 3].map(|n| ratio(n, 1)).to_vec();
    let alphas = [alpha.clone(), ratio(2, 1), ratio(-3, 1), ratio(1, 2)];
    let mut formula_failures = 0;
    for a in &alphas {
        for v in &grid {
            for w in &grid {
                let y = RadCubicNum::new(a.clone(), Rat::zero(), v.clone(), w.clone()).cube();
                let [c0, c1, c2] = u_zero_cube_formula(a, v, w);
                if y.u != c0 || y.v != c1 || y.w != c2 {
                    formula_failures += 1;
                }
            }
        }
    }

    Ok(RadCubicReport { alpha: alpha.clone(), samples, rational_cubes, mismatches, trace_failures, formula_failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn examples() {
        let two = rat(2);
        let xbar = RadCubicNum::new(two.clone(), rat(0), rat(1), rat(0));
        assert_eq!(xbar.cube(), RadCubicNum::new(two.clone(), rat(2), rat(0), rat(0)));
        let y = RadCubicNum::new(two.clone(), rat(1), rat(1), rat(0));
        // (1 + x̄)³ = 1 + 3x̄ + 3x̄² + 2
        assert_eq!(y.cube(), RadCubicNum::new(two, rat(3), rat(3), rat(3)));
        assert!(!y.cube().is_rational());
    }

    #[test]
    fn formula_without_alpha_is_wrong() {
        // the cross terms carry a factor α: (x̄ + x̄²)³ with α = 2
        let y = RadCubicNum::new(rat(2), rat(0), rat(1), rat(1)).cube();
        assert_eq!((y.u.clone(), y.v.clone(), y.w.clone()), (rat(6), rat(6), rat(6)));
        assert_ne!(y.v, rat(3));
    }

    #[test]
    fn classification() {
        let r = rad_cubic_classification(&rat(2), 500, 7).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.rational_cubes < r.samples);
        let r = rad_cubic_classification(&ratio(3, 5), 200, 1).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn rejects_cubes() {
        assert!(rad_cubic_classification(&rat(8), 10, 0).is_err());
        assert!(rad_cubic_classification(&ratio(-27, 64), 10, 0).is_err());
        assert!(rad_cubic_classification(&rat(0), 10, 0).is_err());
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            rad_cubic_classification(&rat(5), 100, 42).unwrap(),
            rad_cubic_classification(&rat(5), 100, 42).unwrap()
        );
    }
}
