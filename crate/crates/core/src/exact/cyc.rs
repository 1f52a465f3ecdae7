use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, Rat};

/// An element `a + bω` of `Q(ω)`, where `ω² = −1 − ω`.
///
/// The basis `{1, ω}` makes the representation unique, so derived equality
/// and hashing are the field's equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycNum {
    a: Rat,
    b: Rat,
}

impl CycNum {
    pub fn new(a: Rat, b: Rat) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(rat(a), rat(b))
    }

    pub fn from_rat(a: Rat) -> Self {
        Self::new(a, Rat::zero())
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::from_ints(1, 0),
            1 => Self::from_ints(0, 1),
            _ => Self::from_ints(-1, -1),
        }
    }

    pub fn re(&self) -> &Rat {
        &self.a
    }

    /// Coefficient of `ω`.
    pub fn om(&self) -> &Rat {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a + bω² = (a − b) − bω`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// `N(a + bω) = a² − ab + b²`.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Self::new(c.a / &n, c.b / &n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Returns `k` with `self == ω^k`, if `self` is a cube root of unity.
    pub fn omega_log(&self) -> Option<u8> {
        (0..3u8).find(|&k| *self == Self::omega_pow(k as i64))
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for CycNum {
    fn one() -> Self {
        Self::new(Rat::one(), Rat::zero())
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
}

impl From<Rat> for CycNum {
    fn from(a: Rat) -> Self {
        Self::from_rat(a)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = −1 − ω
        let bd = &self.b * &rhs.b;
        CycNum::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - bd,
        )
    }
}

impl<'a> Div<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self * &rhs.inv().expect("division by zero in Q(ω)")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}ω", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}ω", self.a, -&self.b),
            _ => write!(f, "{} + {}ω", self.a, self.b),
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
