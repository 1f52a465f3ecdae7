use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly4;
use crate::exact::{det, CycNum};

/// How the four coordinates are split into two pairs; the first pair always
/// contains `x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Pairing {
    XyZt,
    XzYt,
    XtYz,
}

impl Pairing {
    pub const ALL: [Pairing; 3] = [Pairing::XyZt, Pairing::XzYt, Pairing::XtYz];

    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Pairing::XyZt => [(0, 1), (2, 3)],
            Pairing::XzYt => [(0, 2), (1, 3)],
            Pairing::XtYz => [(0, 3), (1, 2)],
        }
    }

    /// The pairing whose first pair is `{0, partner}`.
    pub fn with_partner_of_x(partner: usize) -> Pairing {
        match partner {
            1 => Pairing::XyZt,
            2 => Pairing::XzYt,
            3 => Pairing::XtYz,
            _ => panic!("coordinate {partner} cannot pair with x"),
        }
    }
}

/// The line `{x_p + ω^a x_q = 0, x_r + ω^b x_s = 0}` on the Fermat cubic,
/// where `(p, q), (r, s)` are the pairs of `pairing`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FermatLine {
    pub pairing: Pairing,
    pub a: u8,
    pub b: u8,
}

const COORD: [char; 4] = ['x', 'y', 'z', 't'];

impl FermatLine {
    pub fn new(pairing: Pairing, a: u8, b: u8) -> Self {
        assert!(a < 3 && b < 3);
        Self { pairing, a, b }
    }

    pub fn index(&self) -> usize {
        self.pairing as usize * 9 + self.a as usize * 3 + self.b as usize
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < 27);
        Self::new(Pairing::ALL[i / 9], (i / 3 % 3) as u8, (i % 3) as u8)
    }

    /// Coefficient rows of the two defining linear forms.
    pub fn forms(&self) -> [[CycNum; 4]; 2] {
        let [(p, q), (r, s)] = self.pairing.pairs();
        let mut f1: [CycNum; 4] = Default::default();
        let mut f2: [CycNum; 4] = Default::default();
        f1[p] = CycNum::one();
        f1[q] = CycNum::omega_pow(self.a.into());
        f2[r] = CycNum::one();
        f2[s] = CycNum::omega_pow(self.b.into());
        [f1, f2]
    }

    /// Two points spanning the line.
    pub fn points(&self) -> [[CycNum; 4]; 2] {
        let [(p, q), (r, s)] = self.pairing.pairs();
        let mut p1: [CycNum; 4] = Default::default();
        let mut p2: [CycNum; 4] = Default::default();
        p1[p] = -CycNum::omega_pow(self.a.into());
        p1[q] = CycNum::one();
        p2[r] = -CycNum::omega_pow(self.b.into());
        p2[s] = CycNum::one();
        [p1, p2]
    }

    /// Substitutes the parametrisation `s·P₁ + t·P₂` into the equation and
    /// checks the result vanishes identically.
    pub fn lies_on_fermat(&self) -> bool {
        let [p1, p2] = self.points();
        let rows: [[CycNum; 4]; 4] = std::array::from_fn(|i| {
            [p1[i].clone(), p2[i].clone(), CycNum::zero(), CycNum::zero()]
        });
        Poly4::fermat_cubic().substitute_linear(&rows).is_zero()
    }

    pub fn contains_point(&self, pt: &[CycNum; 4]) -> bool {
        self.forms().iter().all(|f| eval_form(f, pt).is_zero())
    }
}

impl fmt::Display for FermatLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(p, q), (r, s)] = self.pairing.pairs();
        write!(f, "({}{}|{}{},{},{})", COORD[p], COORD[q], COORD[r], COORD[s], self.a, self.b)
    }
}

pub(crate) fn eval_form(f: &[CycNum; 4], pt: &[CycNum; 4]) -> CycNum {
    f.iter().zip(pt).fold(CycNum::zero(), |acc, (a, b)| &acc + &(a * b))
}

/// The 27 lines, in index order.
pub fn fermat_lines() -> Vec<FermatLine> {
    (0..27).map(FermatLine::from_index).collect()
}

/// `det` of the four defining forms; zero iff the lines meet.
pub fn meet_determinant(l1: &FermatLine, l2: &FermatLine) -> CycNum {
    let [a, b] = l1.forms();
    let [c, d] = l2.forms();
    let m: Vec<Vec<CycNum>> = [a, b, c, d].into_iter().map(|r| r.to_vec()).collect();
    det(&m)
}

pub fn lines_meet(l1: &FermatLine, l2: &FermatLine) -> bool {
    meet_determinant(l1, l2).is_zero()
}

/// Adjacency of the 27 Fermat lines, by exact determinants.
pub fn fermat_incidence() -> [[bool; 27]; 27] {
    let lines = fermat_lines();
    let mut adj = [[false; 27]; 27];
    for i in 0..27 {
        for j in i + 1..27 {
            let m = lines_meet(&lines[i], &lines[j]);
            adj[i][j] = m;
            adj[j][i] = m;
        }
    }
    adj
}
