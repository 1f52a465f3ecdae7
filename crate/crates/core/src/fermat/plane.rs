use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{char_poly, det, mat_mul, nullspace, CycNum};

type Mat = Vec<Vec<CycNum>>;

/// A point of the projective plane over `Q(ω)`; equality is up to scalar.
#[derive(Clone, Debug)]
pub struct ProjPoint3 {
    coords: [CycNum; 3],
}

impl ProjPoint3 {
    pub fn new(coords: [CycNum; 3]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("all coordinates zero".into()));
        }
        Ok(Self { coords })
    }

    fn from_vec(v: Vec<CycNum>) -> Self {
        Self::new(v.try_into().expect("three coordinates")).expect("nonzero vector")
    }

    /// `[ω^a : ω^b : ω^c]`.
    pub fn omega_powers(a: i64, b: i64, c: i64) -> Self {
        Self::from_vec(vec![CycNum::omega_pow(a), CycNum::omega_pow(b), CycNum::omega_pow(c)])
    }

    pub fn unit(i: usize) -> Self {
        let mut v = vec![CycNum::zero(); 3];
        v[i] = CycNum::one();
        Self::from_vec(v)
    }

    pub fn coords(&self) -> &[CycNum; 3] {
        &self.coords
    }

    /// Scaled so the first nonzero coordinate is 1.
    pub fn normalized(&self) -> [CycNum; 3] {
        let pivot = self.coords.iter().find(|c| !c.is_zero()).unwrap().clone();
        self.coords.clone().map(|c| c / pivot.clone())
    }

    pub fn apply(m: &[Vec<CycNum>], p: &ProjPoint3) -> ProjPoint3 {
        let v = (0..3).map(|i| (0..3).fold(CycNum::zero(), |acc, j| &acc + &(&m[i][j] * &p.coords[j]))).collect();
        Self::from_vec(v)
    }
}

impl PartialEq for ProjPoint3 {
    fn eq(&self, other: &Self) -> bool {
        (0..3).all(|i| (i + 1..3).all(|j| &self.coords[i] * &other.coords[j] == &self.coords[j] * &other.coords[i]))
    }
}

impl Eq for ProjPoint3 {}

impl fmt::Display for ProjPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.normalized();
        write!(f, "[{a}:{b}:{c}]")
    }
}

fn det3(ps: [&ProjPoint3; 3]) -> CycNum {
    let m: Mat = ps.iter().map(|p| p.coords.to_vec()).collect();
    det(&m)
}

/// Row `(x², y², z², xy, xz, yz)` of a point.
fn veronese(p: &ProjPoint3) -> Vec<CycNum> {
    let [x, y, z] = &p.coords;
    vec![x * x, y * y, z * z, x * y, x * z, y * z]
}

/// Determinant of the conic-condition matrix on six points.
pub fn veronese_det(ps: &[ProjPoint3; 6]) -> CycNum {
    let m: Mat = ps.iter().map(veronese).collect();
    det(&m)
}

/// `p₁ = [1:1:1]`, `p₂ = [ω:1:ω²]`, `p₃ = [ω²:1:ω]` and the coordinate
/// points, checked to be in general position: no three collinear and no
/// conic through all six.
pub fn plane_marked_points() -> Result<[ProjPoint3; 6]> {
    let pts = [
        ProjPoint3::omega_powers(0, 0, 0),
        ProjPoint3::omega_powers(1, 0, 2),
        ProjPoint3::omega_powers(2, 0, 1),
        ProjPoint3::unit(0),
        ProjPoint3::unit(1),
        ProjPoint3::unit(2),
    ];
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                if det3([&pts[i], &pts[j], &pts[k]]).is_zero() {
                    return Err(Error::InvalidArgument(format!("p{} p{} p{} collinear", i + 1, j + 1, k + 1)));
                }
            }
        }
    }
    if veronese_det(&pts).is_zero() {
        return Err(Error::InvalidArgument("the six points lie on a conic".into()));
    }
    Ok(pts)
}

fn ints(rows: [[i64; 3]; 3]) -> Mat {
    rows.iter().map(|r| r.iter().map(|&x| CycNum::from(x)).collect()).collect()
}

fn diag(es: [i64; 3]) -> Mat {
    (0..3).map(|i| (0..3).map(|j| if i == j { CycNum::omega_pow(es[i]) } else { CycNum::zero() }).collect()).collect()
}

/// `b`: `e₁ → e₂ → e₃ → e₁`.
pub fn matrix_b() -> Mat {
    ints([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
}

/// `c = diag(ω, 1, ω²)`.
pub fn matrix_c() -> Mat {
    diag([1, 0, 2])
}

fn identity() -> Mat {
    ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
}

/// `m` scaled so its first nonzero entry is 1.
fn projective_normal(m: &[Vec<CycNum>]) -> Mat {
    let pivot = m.iter().flatten().find(|c| !c.is_zero()).expect("nonzero matrix").clone();
    m.iter().map(|r| r.iter().map(|c| c / &pivot).collect()).collect()
}

/// Order of the subgroup of `PGL₃` generated by `gens`.
pub fn projective_closure_order(gens: &[Mat]) -> usize {
    let mut elems = vec![projective_normal(&identity())];
    let mut frontier = elems.clone();
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = projective_normal(&mat_mul(s, &g));
            if !elems.contains(&h) {
                elems.push(h.clone());
                frontier.push(h);
            }
        }
    }
    elems.len()
}

/// Fixed points of `m` in the plane, as `(eigenvalue exponent, basis of the
/// eigenspace)`. Every eigenvalue must be a cube root of unity.
pub fn fixed_subspaces(m: &[Vec<CycNum>]) -> Result<Vec<(u8, Vec<Vec<CycNum>>)>> {
    let poly = char_poly(m);
    let mut out = Vec::new();
    let mut total = 0;
    for k in 0..3u8 {
        let lambda = CycNum::omega_pow(k.into());
        let value = poly.iter().rev().fold(CycNum::zero(), |acc, c| &(&acc * &lambda) + c);
        if !value.is_zero() {
            continue;
        }
        let shifted = shift(m, &lambda);
        let space = nullspace(&shifted, 3);
        total += space.len();
        out.push((k, space));
    }
    if total != 3 {
        return Err(Error::InvalidArgument("eigenvalues are not all cube roots of unity".into()));
    }
    Ok(out)
}

fn shift(m: &[Vec<CycNum>], lambda: &CycNum) -> Mat {
    (0..3).map(|i| (0..3).map(|j| if i == j { &m[i][j] - lambda } else { m[i][j].clone() }).collect()).collect()
}

/// Dimension of the space of vectors that are eigenvectors of both `m1` and
/// `m2`, summed over all pairs of cube-root eigenvalues.
pub fn common_fixed_dimension(m1: &[Vec<CycNum>], m2: &[Vec<CycNum>]) -> usize {
    let mut dim = 0;
    for k in 0..3 {
        for l in 0..3 {
            let mut stacked = shift(m1, &CycNum::omega_pow(k));
            stacked.extend(shift(m2, &CycNum::omega_pow(l)));
            dim += nullspace(&stacked, 3).len();
        }
    }
    dim
}

/// Results of checking how `b` and `c` act on the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneReport {
    pub b_fixes_p123: bool,
    pub b_cycles_p456: bool,
    pub c_fixes_p456: bool,
    pub c_cycles_p123: bool,
    pub group_order: usize,
    pub b_fixed: Vec<ProjPoint3>,
    pub c_fixed: Vec<ProjPoint3>,
    pub common_fixed_dim: usize,
    /// `k` with `bcb⁻¹c⁻¹ = ωᵏ·I`, if the commutator is such a scalar.
    pub commutator_exponent: Option<u8>,
}

impl PlaneReport {
    pub fn passed(&self) -> bool {
        self.b_fixes_p123
            && self.b_cycles_p456
            && self.c_fixes_p456
            && self.c_cycles_p123
            && self.group_order == 9
            && self.common_fixed_dim == 0
            && self.b_fixed.iter().all(|p| !self.c_fixed.contains(p))
            && matches!(self.commutator_exponent, Some(1 | 2))
    }
}

fn inverse_of_order3(m: &[Vec<CycNum>]) -> Mat {
    mat_mul(m, m)
}

/// `Some(k)` if `m = ωᵏ·I`.
fn omega_scalar(m: &[Vec<CycNum>]) -> Option<u8> {
    let k = m[0][0].omega_log()?;
    (*m == diag([k.into(); 3])).then_some(k)
}

pub fn plane_actions_check() -> Result<PlaneReport> {
    let pts = plane_marked_points()?;
    let b = matrix_b();
    let c = matrix_c();
    let maps_to = |m: &Mat, i: usize, j: usize| ProjPoint3::apply(m, &pts[i]) == pts[j];

    let points_of = |m: &Mat| -> Result<Vec<ProjPoint3>> {
        let mut out = Vec::new();
        for (_, space) in fixed_subspaces(m)? {
            if space.len() != 1 {
                return Err(Error::InvalidArgument("repeated eigenvalue gives a fixed line".into()));
            }
            out.push(ProjPoint3::from_vec(space[0].clone()));
        }
        Ok(out)
    };

    // b, c have order 3, so m² = m⁻¹
    let comm = mat_mul(&mat_mul(&b, &c), &mat_mul(&inverse_of_order3(&b), &inverse_of_order3(&c)));

    Ok(PlaneReport {
        b_fixes_p123: (0..3).all(|i| maps_to(&b, i, i)),
        b_cycles_p456: maps_to(&b, 3, 4) && maps_to(&b, 4, 5) && maps_to(&b, 5, 3),
        c_fixes_p456: (3..6).all(|i| maps_to(&c, i, i)),
        c_cycles_p123: maps_to(&c, 0, 1) && maps_to(&c, 1, 2) && maps_to(&c, 2, 0),
        group_order: projective_closure_order(&[b.clone(), c.clone()]),
        b_fixed: points_of(&b)?,
        c_fixed: points_of(&c)?,
        common_fixed_dim: common_fixed_dimension(&b, &c),
        commutator_exponent: omega_scalar(&comm),
    })
}
