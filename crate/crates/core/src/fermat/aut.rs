use std::fmt;

use num_traits::Zero;

use super::lines::{FermatLine, Pairing};
use super::poly::Poly4;
use crate::exact::CycNum;
use crate::permgroup::Perm;
use crate::weyl::CarterType;

/// Projective monomial automorphism `diag(1, ω^d₁, ω^d₂, ω^d₃)·P_σ` of the
/// Fermat cubic, where `P_σ e_j = e_σ(j)`.
///
/// The top-left entry of the diagonal factor is normalised to 1, which makes
/// the representative unique modulo scalars.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FermatAut {
    pub sigma: [u8; 4],
    pub d: [u8; 3],
}

impl FermatAut {
    pub fn identity() -> Self {
        Self { sigma: [0, 1, 2, 3], d: [0; 3] }
    }

    pub fn new(sigma: [u8; 4], d: [u8; 3]) -> Self {
        let mut seen = [false; 4];
        for &s in &sigma {
            assert!(s < 4 && !std::mem::replace(&mut seen[s as usize], true), "sigma must permute 0..4");
        }
        assert!(d.iter().all(|&x| x < 3));
        Self { sigma, d }
    }

    /// `diag(1, ω^a, ω^b, ω^c)`.
    pub fn diagonal(a: u8, b: u8, c: u8) -> Self {
        Self::new([0, 1, 2, 3], [a % 3, b % 3, c % 3])
    }

    /// Pure coordinate permutation.
    pub fn permutation(sigma: [u8; 4]) -> Self {
        Self::new(sigma, [0; 3])
    }

    /// Normalises an arbitrary monomial matrix `diag(ω^e)·P_σ`.
    pub fn from_monomial(sigma: [u8; 4], e: [i64; 4]) -> Self {
        let d = [1, 2, 3].map(|i| (e[i] - e[0]).rem_euclid(3) as u8);
        Self::new(sigma, d)
    }

    /// Exponents of the diagonal factor, `[0, d₁, d₂, d₃]`.
    pub fn exponents(&self) -> [i64; 4] {
        [0, self.d[0] as i64, self.d[1] as i64, self.d[2] as i64]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self ∘ other` as projective matrices.
    pub fn compose(&self, other: &FermatAut) -> FermatAut {
        let e1 = self.exponents();
        let e2 = other.exponents();
        let sigma: [u8; 4] = std::array::from_fn(|j| self.sigma[other.sigma[j] as usize]);
        let mut inv1 = [0usize; 4];
        for (j, &s) in self.sigma.iter().enumerate() {
            inv1[s as usize] = j;
        }
        // D₁P₁D₂P₂ = D₁(P₁D₂P₁⁻¹)P₁P₂, and P₁D₂P₁⁻¹ moves entry j to σ₁(j)
        let e: [i64; 4] = std::array::from_fn(|i| e1[i] + e2[inv1[i]]);
        Self::from_monomial(sigma, e)
    }

    pub fn inverse(&self) -> FermatAut {
        let mut g = *self;
        loop {
            let next = g.compose(self);
            if next.is_identity() {
                return g;
            }
            g = next;
        }
    }

    pub fn pow(&self, k: u32) -> FermatAut {
        (0..k).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> u32 {
        let mut g = *self;
        let mut k = 1;
        while !g.is_identity() {
            g = g.compose(self);
            k += 1;
        }
        k
    }

    /// Matrix representative over `Q(ω)`.
    pub fn matrix(&self) -> [[CycNum; 4]; 4] {
        let e = self.exponents();
        let mut m: [[CycNum; 4]; 4] = Default::default();
        for j in 0..4 {
            let i = self.sigma[j] as usize;
            m[i][j] = CycNum::omega_pow(e[i]);
        }
        m
    }

    pub fn apply_point(&self, pt: &[CycNum; 4]) -> [CycNum; 4] {
        let m = self.matrix();
        std::array::from_fn(|i| (0..4).fold(CycNum::zero(), |acc, j| &acc + &(&m[i][j] * &pt[j])))
    }

    /// True iff substituting the matrix into `x³ + y³ + z³ + t³` returns a
    /// nonzero multiple of it.
    pub fn preserves_fermat(&self) -> bool {
        let f = Poly4::fermat_cubic();
        f.substitute_linear(&self.matrix()).ratio_to(&f).is_some_and(|s| !s.is_zero())
    }

    /// Image of a line, read off from the monomial action on the two
    /// defining forms.
    pub fn apply_line(&self, line: &FermatLine) -> FermatLine {
        let e = self.exponents();
        let [(p, q), (r, s)] = line.pairing.pairs();
        // The point with x_p = −ω^a, x_q = 1 goes to x_σp = −ω^(a+e[σp]),
        // x_σq = ω^e[σq], which satisfies x_σp + ω^c x_σq = 0 with
        // c = a + e[σp] − e[σq].
        let map_form = |p: usize, q: usize, a: u8| {
            let (sp, sq) = (self.sigma[p] as usize, self.sigma[q] as usize);
            let c = a as i64 + e[sp] - e[sq];
            if sp < sq {
                (sp, sq, c.rem_euclid(3) as u8)
            } else {
                (sq, sp, (-c).rem_euclid(3) as u8)
            }
        };
        let f1 = map_form(p, q, line.a);
        let f2 = map_form(r, s, line.b);
        let (first, second) = if f1.0 == 0 { (f1, f2) } else { (f2, f1) };
        FermatLine::new(Pairing::with_partner_of_x(first.1), first.2, second.2)
    }

    /// Induced permutation of the 27 Fermat lines (by line index).
    pub fn line_perm(&self) -> Perm {
        let images: Vec<usize> = (0..27).map(|i| self.apply_line(&FermatLine::from_index(i)).index()).collect();
        Perm::from_images(&images).expect("automorphisms permute the lines")
    }

    /// Eigenvalues as exponents `k` of `exp(2πik/36)`, sorted.
    ///
    /// A cycle of length `L` of `σ` with entry product `ω^s` contributes the
    /// `L` roots of `λ^L = ω^s`. Cycle lengths divide 4 or equal 3, so every
    /// eigenvalue is a 36th root of unity.
    pub fn eigen_exponents(&self) -> [u8; 4] {
        monomial_eigen_exponents(self.sigma, self.exponents())
    }

    pub fn eigen_type(&self) -> CarterType {
        classify_eigen_exponents(&self.eigen_exponents())
    }
}

impl fmt::Display for FermatAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "σ=[{},{},{},{}] d=[{},{},{}]",
            self.sigma[0], self.sigma[1], self.sigma[2], self.sigma[3], self.d[0], self.d[1], self.d[2]
        )
    }
}

/// Eigenvalue exponents (units of 1/36 turn) of `diag(ω^e)·P_σ` for an
/// arbitrary, not necessarily normalised, exponent vector.
pub fn monomial_eigen_exponents(sigma: [u8; 4], e: [i64; 4]) -> [u8; 4] {
    let mut seen = [false; 4];
    let mut out = Vec::with_capacity(4);
    for start in 0..4 {
        if seen[start] {
            continue;
        }
        let mut len = 0i64;
        let mut s = 0i64;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = sigma[j] as usize;
            s += e[j];
            len += 1;
        }
        for m in 0..len {
            out.push(((12 * s + 36 * m) / len).rem_euclid(36) as u8);
        }
    }
    let mut out: [u8; 4] = out.try_into().unwrap();
    out.sort_unstable();
    out
}

/// `A2` iff the eigenvalues are `1, 1, ω, ω` up to a common scalar,
/// `A2xA2` iff they are `1, 1, ω, ω²` up to a common scalar.
pub fn classify_eigen_exponents(ex: &[u8; 4]) -> CarterType {
    // all ratios must be cube roots of unity
    if ex.iter().any(|&x| (x as i64 - ex[0] as i64).rem_euclid(12) != 0) {
        return CarterType::Other;
    }
    let mut counts = [0usize; 3];
    for &x in ex {
        counts[((x as i64 - ex[0] as i64).rem_euclid(36) / 12) as usize] += 1;
    }
    counts.sort_unstable_by(|a, b| b.cmp(a));
    match counts {
        [2, 2, 0] => CarterType::A2,
        [2, 1, 1] => CarterType::A2xA2,
        _ => CarterType::Other,
    }
}

/// All 648 automorphisms, sorted.
pub fn fermat_aut_group() -> Vec<FermatAut> {
    let mut out = Vec::with_capacity(648);
    for sigma in permutations4() {
        for code in 0..27u8 {
            out.push(FermatAut::new(sigma, [code / 9, code / 3 % 3, code % 3]));
        }
    }
    out.sort();
    out
}

fn permutations4() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for code in 0..256u32 {
        let p: [u8; 4] = std::array::from_fn(|i| (code >> (2 * (3 - i)) & 3) as u8);
        if (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j])) {
            out.push(p);
        }
    }
    out
}

/// The elements of type `A2`, checked to number six and to commute
/// pairwise.
pub fn a2_census() -> crate::Result<Vec<FermatAut>> {
    let a2: Vec<FermatAut> = fermat_aut_group().into_iter().filter(|g| g.eigen_type() == CarterType::A2).collect();
    if a2.len() != 6 {
        return Err(crate::Error::InvalidArgument(format!("expected 6 elements of type A2, found {}", a2.len())));
    }
    if !a2.iter().all(|g| a2.iter().all(|h| g.compose(h) == h.compose(g))) {
        return Err(crate::Error::InvalidArgument("A2 elements do not commute".into()));
    }
    Ok(a2)
}
