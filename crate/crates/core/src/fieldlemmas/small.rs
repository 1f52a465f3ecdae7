use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::CycNum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pgl2Report {
    /// Projective classes of `diag(ω^a, ω^b)`.
    pub classes: usize,
    pub order_diag_1_omega: u32,
    pub scalar_is_identity: bool,
}

impl Pgl2Report {
    pub fn passed(&self) -> bool {
        self.classes == 3 && self.order_diag_1_omega == 3 && self.scalar_is_identity
    }
}

/// `diag(ω^a, ω^b)` scaled so its first entry is 1, as `[d₀, d₁]`.
fn normal_diag(a: i64, b: i64) -> [CycNum; 2] {
    let x = CycNum::omega_pow(a);
    let y = CycNum::omega_pow(b);
    [CycNum::one(), y / x]
}

fn diag_order(a: i64, b: i64) -> u32 {
    let [_, r] = normal_diag(a, b);
    let mut p = r.clone();
    let mut k = 1;
    while !p.is_one() {
        p = &p * &r;
        k += 1;
    }
    k
}

pub fn pgl2_diagonal_check() -> Pgl2Report {
    let mut classes: Vec<[CycNum; 2]> = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            let d = normal_diag(a, b);
            if !classes.contains(&d) {
                classes.push(d);
            }
        }
    }
    Pgl2Report {
        classes: classes.len(),
        order_diag_1_omega: diag_order(0, 1),
        scalar_is_identity: normal_diag(1, 1) == [CycNum::one(), CycNum::one()],
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// True iff some subgroup of `(Z/pZ)*` has an orbit of size exactly 3 on the
/// nonzero residues. Subgroups are cyclic, so this asks for an element `x`
/// whose orbit on 1 closes after exactly three steps.
pub fn prime_orbit_check(p: u64) -> Result<bool> {
    if !is_prime(p) || !(5..10_000).contains(&p) {
        return Err(Error::InvalidArgument(format!("{p} is not a prime in [5, 10000)")));
    }
    Ok((2..p).any(|x| {
        let mut y = x;
        let mut steps = 1;
        while y != 1 && steps < 4 {
            y = y * x % p;
            steps += 1;
        }
        y == 1 && steps == 3
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSweep {
    pub primes: usize,
    pub mismatches: Vec<u64>,
}

/// Compares the orbit criterion with `p ≡ 1 (mod 3)` for all primes in
/// `[5, 10000)`.
pub fn prime_orbit_sweep() -> PrimeSweep {
    let mut primes = 0;
    let mut mismatches = Vec::new();
    for p in (5..10_000).filter(|&p| is_prime(p)) {
        primes += 1;
        if prime_orbit_check(p).unwrap() != (p % 3 == 1) {
            mismatches.push(p);
        }
    }
    PrimeSweep { primes, mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgl2() {
        use num_traits::Zero;
        let r = pgl2_diagonal_check();
        assert_eq!(r.classes, 3);
        assert!(r.passed());
        assert_eq!(diag_order(1, 1), 1);
        assert!(normal_diag(0, 0)[1].is_one() && !normal_diag(0, 2)[1].is_zero());
    }

    #[test]
    fn primes() {
        assert!(prime_orbit_check(7).unwrap());
        assert!(!prime_orbit_check(5).unwrap());
        assert!(prime_orbit_check(13).unwrap());
        assert!(!prime_orbit_check(11).unwrap());
        assert!(prime_orbit_check(9).is_err());
        assert!(prime_orbit_check(3).is_err());
        assert!(prime_orbit_check(10_007).is_err());
    }

    #[test]
    fn sweep() {
        let s = prime_orbit_sweep();
        assert_eq!(s.primes, 1227);
        assert!(s.mismatches.is_empty());
    }
}
