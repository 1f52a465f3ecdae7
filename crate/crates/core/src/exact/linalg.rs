use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::CycNum;

/// Commutative ring operations needed by the division-free routines below.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// Characteristic polynomial `det(λI − A)`, coefficients lowest degree first.
///
/// Samuelson–Berkowitz recursion: division free, so it works verbatim over
/// `i64`, `Rat` and `CycNum`.
pub fn char_poly<T: Scalar>(m: &[Vec<T>]) -> Vec<T> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "char_poly needs a square matrix");
    // highest degree first while building
    let mut p = vec![T::one()];
    for k in (0..n).rev() {
        let size = n - k - 1;
        let a = m[k][k].clone();
        let row: Vec<T> = m[k][k + 1..].to_vec();
        let mut v: Vec<T> = (k + 1..n).map(|i| m[i][k].clone()).collect();
        let mut col = vec![T::one(), -a];
        for _ in 0..size {
            let rv = row.iter().zip(&v).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
            col.push(-rv);
            v = (k + 1..n)
                .map(|i| {
                    (k + 1..n).zip(&v).fold(T::zero(), |acc, (j, x)| acc + m[i][j].clone() * x.clone())
                })
                .collect();
        }
        let next: Vec<T> = (0..size + 2)
            .map(|i| {
                (0..=i.min(size)).fold(T::zero(), |acc, j| acc + col[i - j].clone() * p[j].clone())
            })
            .collect();
        p = next;
    }
    p.reverse();
    p
}

pub fn det<T: Scalar>(m: &[Vec<T>]) -> T {
    let c0 = char_poly(m).swap_remove(0);
    if m.len().is_multiple_of(2) {
        c0
    } else {
        -c0
    }
}

pub fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| (0..inner).fold(T::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

/// Basis of `{x : A x = 0}` over a field, by reduction to row echelon form.
pub fn nullspace<T>(m: &[Vec<T>], ncols: usize) -> Vec<Vec<T>>
where
    T: Scalar + Div<Output = T>,
{
    let mut rows: Vec<Vec<T>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        rows[r] = rows[r].iter().map(|x| x.clone() * inv.clone()).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![T::zero(); ncols];
            v[free] = T::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][free].clone();
            }
            v
        })
        .collect()
}

/// Polynomial over `Q(ω)` in the variable `λ`, lowest degree first, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyCyc {
    coeffs: Vec<CycNum>,
}

impl PolyCyc {
    pub fn new(mut coeffs: Vec<CycNum>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `λ − root`.
    pub fn linear(root: CycNum) -> Self {
        Self::new(vec![-root, CycNum::one()])
    }

    pub fn from_roots<I: IntoIterator<Item = CycNum>>(roots: I) -> Self {
        roots.into_iter().fold(Self::new(vec![CycNum::one()]), |acc, r| &acc * &Self::linear(r))
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        self.coeffs.iter().rev().fold(CycNum::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn char_poly_of(m: &[Vec<CycNum>]) -> Self {
        Self::new(char_poly(m))
    }
}

impl Mul for &PolyCyc {
    type Output = PolyCyc;
    fn mul(self, rhs: &PolyCyc) -> PolyCyc {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return PolyCyc::new(vec![]);
        }
        let mut out = vec![CycNum::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyCyc::new(out)
    }
}

impl fmt::Display for PolyCyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})λ"),
                _ => format!("({c})λ^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for PolyCyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
