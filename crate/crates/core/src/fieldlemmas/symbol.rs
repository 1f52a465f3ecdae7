use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{nullspace, CycNum, Rat};

/// The algebra over `Q(ω)` with basis `xⁱyʲ` (`0 ≤ i, j < 3`) and relations
/// `x³ = a`, `y³ = b`, `xy = ωyx`. Elements are coordinate vectors indexed
/// by `3i + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolAlg {
    a: CycNum,
    b: CycNum,
}

pub type Elem = [CycNum; 9];

impl SymbolAlg {
    pub fn new(a: Rat, b: Rat) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidArgument("symbol parameters must be nonzero".into()));
        }
        Ok(Self { a: CycNum::from_rat(a), b: CycNum::from_rat(b) })
    }

    pub fn zero(&self) -> Elem {
        Default::default()
    }

    pub fn basis(&self, i: usize, j: usize) -> Elem {
        let mut e = self.zero();
        e[3 * (i % 3) + j % 3] = CycNum::one();
        e
    }

    pub fn one(&self) -> Elem {
        self.basis(0, 0)
    }

    pub fn x(&self) -> Elem {
        self.basis(1, 0)
    }

    pub fn y(&self) -> Elem {
        self.basis(0, 1)
    }

    pub fn scalar(&self, c: CycNum) -> Elem {
        let mut e = self.zero();
        e[0] = c;
        e
    }

    /// `(xⁱyʲ)(xᵏyˡ) = ω^{2jk} xⁱ⁺ᵏ yʲ⁺ˡ`, since `yx = ω²xy`; exponents
    /// past 2 are reduced with `x³ = a`, `y³ = b`.
    fn basis_product(&self, (i, j): (usize, usize), (k, l): (usize, usize)) -> (usize, CycNum) {
        let mut c = CycNum::omega_pow((2 * j * k) as i64);
        let (mut p, mut q) = (i + k, j + l);
        if p >= 3 {
            p -= 3;
            c = &c * &self.a;
        }
        if q >= 3 {
            q -= 3;
            c = &c * &self.b;
        }
        (3 * p + q, c)
    }

    pub fn mul(&self, u: &Elem, v: &Elem) -> Elem {
        let mut out = self.zero();
        for (s, cu) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (t, cv) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (idx, c) = self.basis_product((s / 3, s % 3), (t / 3, t % 3));
                out[idx] = &out[idx] + &(&(cu * cv) * &c);
            }
        }
        out
    }

    pub fn scale(&self, c: &CycNum, u: &Elem) -> Elem {
        u.clone().map(|x| &x * c)
    }

    /// Inverse of a basis monomial `xⁱyʲ`.
    pub fn monomial_inverse(&self, i: usize, j: usize) -> Elem {
        // x⁻¹ = x²/a and y⁻¹ = y²/b
        let xi = self.scale(&(CycNum::one() / self.a.clone()), &self.basis(2, 0));
        let yi = self.scale(&(CycNum::one() / self.b.clone()), &self.basis(0, 2));
        let xinv = (0..i).fold(self.one(), |acc, _| self.mul(&acc, &xi));
        let yinv = (0..j).fold(self.one(), |acc, _| self.mul(&acc, &yi));
        self.mul(&yinv, &xinv)
    }

    /// Dimension over `Q(ω)` of the center.
    pub fn center_dimension(&self) -> usize {
        // rows: coordinates of zb − bz for each basis b, as linear forms in z
        let mut rows = Vec::with_capacity(81);
        for t in 0..9 {
            let b = self.basis(t / 3, t % 3);
            let cols: Vec<Elem> = (0..9)
                .map(|s| {
                    let z = self.basis(s / 3, s % 3);
                    let zb = self.mul(&z, &b);
                    let bz = self.mul(&b, &z);
                    std::array::from_fn(|k| &zb[k] - &bz[k])
                })
                .collect();
            for k in 0..9 {
                rows.push((0..9).map(|s| cols[s][k].clone()).collect::<Vec<_>>());
            }
        }
        nullspace(&rows, 9).len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolReport {
    pub associative: bool,
    pub unital: bool,
    pub center_dimension: usize,
    pub conjugation_gives_omega_y: bool,
    pub cube_of_x_central: bool,
    /// Order of the group generated by `x`, `y` modulo scalars.
    pub projective_order: usize,
    /// `k` with `xyx⁻¹y⁻¹ = ωᵏ`.
    pub commutator_exponent: Option<u8>,
}

impl SymbolReport {
    pub fn passed(&self) -> bool {
        self.associative
            && self.unital
            && self.center_dimension == 1
            && self.conjugation_gives_omega_y
            && self.cube_of_x_central
            && self.projective_order == 9
            && matches!(self.commutator_exponent, Some(1 | 2))
    }
}

/// Monomials scaled to coefficient 1, so equality is equality modulo scalars.
fn projective_monomial(u: &Elem) -> Option<usize> {
    let nz: Vec<usize> = (0..9).filter(|&k| !u[k].is_zero()).collect();
    (nz.len() == 1).then(|| nz[0])
}

pub fn symbol_algebra_check(a: Rat, b: Rat) -> Result<SymbolReport> {
    let alg = SymbolAlg::new(a, b)?;
    let basis: Vec<Elem> = (0..9).map(|s| alg.basis(s / 3, s % 3)).collect();

    let associative = basis.iter().all(|u| {
        basis.iter().all(|v| {
            let uv = alg.mul(u, v);
            basis.iter().all(|w| alg.mul(&uv, w) == alg.mul(u, &alg.mul(v, w)))
        })
    });
    let unital = basis.iter().all(|u| alg.mul(&alg.one(), u) == *u && alg.mul(u, &alg.one()) == *u);

    let x = alg.x();
    let y = alg.y();
    let xinv = alg.monomial_inverse(1, 0);
    let yinv = alg.monomial_inverse(0, 1);
    let conj = alg.mul(&alg.mul(&x, &y), &xinv);
    let conjugation_gives_omega_y = conj == alg.scale(&CycNum::omega(), &y);

    let x3 = alg.mul(&x, &alg.mul(&x, &x));
    let cube_of_x_central = basis.iter().all(|z| {
        let az = alg.scale(&alg.a, z);
        alg.mul(&x3, z) == az && alg.mul(z, &x3) == az
    });

    // x and y only ever produce scalar multiples of monomials
    let mut seen = vec![0usize];
    let mut frontier = vec![0usize];
    while let Some(s) = frontier.pop() {
        for g in [&x, &y] {
            let h = projective_monomial(&alg.mul(g, &basis[s])).expect("monomial");
            if !seen.contains(&h) {
                seen.push(h);
                frontier.push(h);
            }
        }
    }

    let comm = alg.mul(&alg.mul(&x, &y), &alg.mul(&xinv, &yinv));
    let commutator_exponent = projective_monomial(&comm).filter(|&k| k == 0).and_then(|_| comm[0].omega_log());

    Ok(SymbolReport {
        associative,
        unital,
        center_dimension: alg.center_dimension(),
        conjugation_gives_omega_y,
        cube_of_x_central,
        projective_order: seen.len(),
        commutator_exponent,
    })
}
