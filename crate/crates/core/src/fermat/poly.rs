use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact::CycNum;

/// Sparse polynomial in four variables over `Q(ω)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly4 {
    terms: BTreeMap<[u8; 4], CycNum>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: CycNum) -> Self {
        let mut p = Self::zero();
        p.add_term([0; 4], c);
        p
    }

    /// `x_i`.
    pub fn var(i: usize) -> Self {
        let mut m = [0; 4];
        m[i] = 1;
        let mut p = Self::zero();
        p.add_term(m, CycNum::one());
        p
    }

    /// `x³ + y³ + z³ + t³`.
    pub fn fermat_cubic() -> Self {
        (0..4).fold(Self::zero(), |acc, i| acc.add(&Self::var(i).pow(3)))
    }

    fn add_term(&mut self, m: [u8; 4], c: CycNum) {
        let entry = self.terms.entry(m).or_insert_with(CycNum::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &CycNum) -> Poly4 {
        let mut out = Poly4::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly4) -> Poly4 {
        let mut out = Poly4::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = std::array::from_fn(|i| m1[i] + m2[i]);
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly4 {
        (0..k).fold(Poly4::constant(CycNum::one()), |acc, _| acc.mul(self))
    }

    /// Substitutes `x_i ↦ Σ_j rows[i][j]·x_j`.
    pub fn substitute_linear(&self, rows: &[[CycNum; 4]; 4]) -> Poly4 {
        let images: Vec<Poly4> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .fold(Poly4::zero(), |acc, (j, c)| acc.add(&Poly4::var(j).scale(c)))
            })
            .collect();
        let mut out = Poly4::zero();
        for (m, c) in &self.terms {
            let term = (0..4).fold(Poly4::constant(c.clone()), |acc, i| acc.mul(&images[i].pow(m[i] as u32)));
            out = out.add(&term);
        }
        out
    }

    /// `Some(s)` with `self = s·other`, if the two are proportional and
    /// `other` is nonzero.
    pub fn ratio_to(&self, other: &Poly4) -> Option<CycNum> {
        let (m, c) = other.terms.iter().next()?;
        let s = self.terms.get(m).cloned().unwrap_or_else(CycNum::zero) / c.clone();
        (*self == other.scale(&s)).then_some(s)
    }
}
