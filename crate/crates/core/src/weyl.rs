//! Reflection groups of the del Pezzo lattices and Carter typing.
//!
//! `W(E₆)` is realised as a permutation group on the 27 line classes; the
//! smaller groups `W(A₄)` and `W(D₅)` act on their own root systems.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::char_poly;
use crate::fermat;
use crate::permgroup::{Perm, PermGroup};
use crate::piclattice::{
    canonical_class, canonical_class_n, extend_to_weyl, LatticeMap, LineTag, PicVec, NUM_LINES, RANK,
};

/// A root: `v² = −2` and `v·K = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootVec(pub PicVec);

/// All roots of the lattice `⟨L, E₁, …, Eₙ⟩`, `n ∈ {4, 5, 6}`, sorted.
pub fn roots(n: usize) -> Result<Vec<RootVec>> {
    if !(4..=6).contains(&n) {
        return Err(Error::UnsupportedRank(n));
    }
    let k = canonical_class_n(n);
    // Σeᵢ = −3l and Σeᵢ² = l² + 2 bound |l| ≤ 2 and |eᵢ| ≤ 2 for n ≤ 6.
    let mut out = Vec::new();
    for l in -2..=2 {
        for code in 0..5i64.pow(n as u32) {
            let mut c = code;
            let mut e = [0; 6];
            for slot in e.iter_mut().take(n) {
                *slot = c % 5 - 2;
                c /= 5;
            }
            let v = PicVec::new(l, e);
            if v.square() == -2 && v.pairing(&k) == 0 {
                out.push(RootVec(v));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `s_r(x) = x + (x·r)·r`.
pub fn reflect(r: &RootVec, x: &PicVec) -> PicVec {
    *x + x.pairing(&r.0) * r.0
}

/// Element of `W(E₆)`: a permutation of the 27 lines together with the
/// lattice matrix it determines.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElem {
    perm: Perm,
    matrix: LatticeMap,
}

impl WeylElem {
    pub fn identity() -> Self {
        Self { perm: Perm::identity(NUM_LINES), matrix: LatticeMap::identity() }
    }

    pub fn from_matrix(matrix: LatticeMap) -> Result<Self> {
        if !matrix.fixes_canonical_class() || !matrix.preserves_pairing() {
            return Err(Error::NotAutomorphism("not an isometry fixing K".into()));
        }
        Ok(Self { perm: matrix.line_perm()?, matrix })
    }

    /// The lattice map is recovered from the images of `E₁..E₆`, and the
    /// permutation is checked to be the one it induces.
    pub fn from_perm(perm: Perm) -> Result<Self> {
        if perm.degree() != NUM_LINES {
            return Err(Error::DegreeMismatch { expected: NUM_LINES, found: perm.degree() });
        }
        let images: [usize; 6] = std::array::from_fn(|i| perm.apply(i));
        let matrix = extend_to_weyl(&images)?;
        if matrix.line_perm()? != perm {
            return Err(Error::NotAutomorphism("line permutation is not induced by a lattice map".into()));
        }
        Ok(Self { perm, matrix })
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn matrix(&self) -> &LatticeMap {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElem) -> WeylElem {
        WeylElem { perm: self.perm.compose(&other.perm), matrix: self.matrix.compose(&other.matrix) }
    }

    pub fn inverse(&self) -> WeylElem {
        WeylElem::from_perm(self.perm.inverse()).expect("inverse of a Weyl element")
    }

    pub fn pow(&self, k: u32) -> WeylElem {
        (0..k).fold(WeylElem::identity(), |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> u64 {
        self.perm.order()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn image_of_line(&self, tag: LineTag) -> LineTag {
        LineTag::from_index(self.perm.apply(tag.index()))
    }

    /// True iff the element permutes `{E₁, …, E₆}`.
    pub fn preserves_exceptionals(&self) -> bool {
        (0..6).all(|i| self.perm.apply(i) < 6)
    }
}

/// Images of `E₁..E₆`, e.g. `[Q1, Q2, Q3, L56, L46, L45]`.
impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = (0..6).map(|i| LineTag::from_index(self.perm.apply(i)).to_string()).collect();
        write!(f, "[{}]", imgs.join(", "))
    }
}

/// Reflection in a root of the rank-7 lattice, as a Weyl element.
pub fn reflection(r: &RootVec) -> Result<WeylElem> {
    if r.0.square() != -2 || r.0.pairing(&canonical_class()) != 0 {
        return Err(Error::InvalidArgument(format!("{} is not a root", r.0)));
    }
    let cols: [PicVec; RANK] = std::array::from_fn(|k| reflect(r, &PicVec::basis(k)));
    WeylElem::from_matrix(LatticeMap::from_columns(cols))
}

/// `W(A₄)`, `W(D₅)` or `W(E₆)` for `n = 4, 5, 6`.
///
/// For `n = 6` the group acts on the 27 lines; for `n = 4, 5` on its sorted
/// root set.
pub fn generate(n: usize) -> Result<PermGroup> {
    let rts = roots(n)?;
    if n == 6 {
        let gens = reflection_perms()?;
        return PermGroup::closure(NUM_LINES, &gens);
    }
    let mut gens: Vec<Perm> = rts
        .iter()
        .map(|r| {
            let images: Vec<usize> = rts
                .iter()
                .map(|x| rts.binary_search(&RootVec(reflect(r, &x.0))).expect("roots are permuted"))
                .collect();
            Perm::from_images(&images)
        })
        .collect::<Result<_>>()?;
    gens.sort();
    gens.dedup();
    PermGroup::closure(rts.len(), &gens)
}

/// The 36 distinct reflections of `W(E₆)` as line permutations.
pub fn reflection_perms() -> Result<Vec<Perm>> {
    let mut gens: Vec<Perm> = roots(6)?.iter().map(|r| reflection(r).map(|w| w.perm)).collect::<Result<_>>()?;
    gens.sort();
    gens.dedup();
    Ok(gens)
}

/// `W(E₆)` on the 27 lines, computed once.
pub fn we6() -> &'static PermGroup {
    static GROUP: OnceLock<PermGroup> = OnceLock::new();
    GROUP.get_or_init(|| generate(6).expect("W(E6) generation"))
}

/// The two Carter classes distinguished here; everything else is `Other`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CarterType {
    A2,
    A2xA2,
    Other,
}

impl fmt::Display for CarterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CarterType::A2 => "A2",
            CarterType::A2xA2 => "A2xA2",
            CarterType::Other => "Other",
        })
    }
}

/// Simple roots `E₁−E₂, …, E₅−E₆, L−E₁−E₂−E₃`, a basis of `K⊥`.
pub fn simple_roots() -> [PicVec; 6] {
    let e = PicVec::exceptional;
    [
        e(0) - e(1),
        e(1) - e(2),
        e(2) - e(3),
        e(3) - e(4),
        e(4) - e(5),
        PicVec::hyperplane() - e(0) - e(1) - e(2),
    ]
}

/// `(adj(B), det(B))` for `B` with columns the simple roots and `K`.
fn root_basis_inverse() -> &'static ([[i64; RANK]; RANK], i64) {
    static INV: OnceLock<([[i64; RANK]; RANK], i64)> = OnceLock::new();
    INV.get_or_init(|| {
        let sr = simple_roots();
        let cols = [sr[0], sr[1], sr[2], sr[3], sr[4], sr[5], canonical_class()];
        let b = LatticeMap::from_columns(cols);
        let d = b.det();
        let mut adj = [[0i64; RANK]; RANK];
        for i in 0..RANK {
            for j in 0..RANK {
                let minor: Vec<Vec<i64>> = (0..RANK)
                    .filter(|&r| r != j)
                    .map(|r| (0..RANK).filter(|&c| c != i).map(|c| b.0[r][c]).collect())
                    .collect();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[i][j] = sign * crate::exact::det(&minor);
            }
        }
        (adj, d)
    })
}

/// Matrix of the restriction to `K⊥` in the simple-root basis.
pub fn k_perp_matrix(g: &WeylElem) -> [[i64; 6]; 6] {
    let (adj, d) = root_basis_inverse();
    let sr = simple_roots();
    let mut out = [[0i64; 6]; 6];
    for (j, root) in sr.iter().enumerate() {
        let x = g.matrix.apply(root).coords();
        let coords: [i64; RANK] = std::array::from_fn(|i| {
            let s: i64 = (0..RANK).map(|k| adj[i][k] * x[k]).sum();
            debug_assert_eq!(s % d, 0);
            s / d
        });
        debug_assert_eq!(coords[6], 0, "K⊥ is invariant");
        for i in 0..6 {
            out[i][j] = coords[i];
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut o = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            o[i + j] += x * y;
        }
    }
    o
}

fn poly_pow(a: &[i64], k: usize) -> Vec<i64> {
    (0..k).fold(vec![1], |acc, _| poly_mul(&acc, a))
}

/// `(t−1)^i (t²+t+1)^j`, lowest degree first.
fn cyclotomic_product(i: usize, j: usize) -> Vec<i64> {
    poly_mul(&poly_pow(&[-1, 1], i), &poly_pow(&[1, 1, 1], j))
}

/// Characteristic polynomial on `K⊥`, lowest degree first.
pub fn k_perp_char_poly(g: &WeylElem) -> Vec<i64> {
    let m: Vec<Vec<i64>> = k_perp_matrix(g).iter().map(|r| r.to_vec()).collect();
    char_poly(&m)
}

pub fn carter_type(g: &WeylElem) -> CarterType {
    let p = k_perp_char_poly(g);
    if p == cyclotomic_product(4, 1) {
        CarterType::A2
    } else if p == cyclotomic_product(2, 2) {
        CarterType::A2xA2
    } else {
        CarterType::Other
    }
}

/// The element fixing `L` and permuting `E₁..E₆` by `p` (degree 6).
pub fn standard_s6(p: &Perm) -> Result<WeylElem> {
    if p.degree() != 6 {
        return Err(Error::DegreeMismatch { expected: 6, found: p.degree() });
    }
    let images: [usize; 6] = std::array::from_fn(|i| p.apply(i));
    WeylElem::from_matrix(extend_to_weyl(&images)?)
}

/// `b`: the 3-cycle `E₄ → E₅ → E₆ → E₄`.
pub fn element_b() -> WeylElem {
    standard_s6(&Perm::from_cycles(6, &[&[3, 4, 5]]).unwrap()).unwrap()
}

/// `c`: the 3-cycle `E₁ → E₂ → E₃ → E₁`.
pub fn element_c() -> WeylElem {
    standard_s6(&Perm::from_cycles(6, &[&[0, 1, 2]]).unwrap()).unwrap()
}

/// Images of `E₁..E₆` under `r`.
pub const R_IMAGES: [LineTag; 6] =
    [LineTag::Q(0), LineTag::Q(1), LineTag::Q(2), LineTag::L(4, 5), LineTag::L(3, 5), LineTag::L(3, 4)];

/// The element `r` sending `E₁..E₆` to `Q₁, Q₂, Q₃, L₅₆, L₄₆, L₄₅`.
pub fn build_r() -> Result<WeylElem> {
    WeylElem::from_matrix(extend_to_weyl(&R_IMAGES.map(LineTag::index))?)
}

/// Elements of `W(E₆)` preserving both `{E₁,E₂,E₃}` and `{E₄,E₅,E₆}`.
pub fn set_preservers() -> Vec<Perm> {
    we6()
        .elements()
        .iter()
        .filter(|g| (0..3).all(|i| g.apply(i) < 3) && (3..6).all(|i| (3..6).contains(&g.apply(i))))
        .cloned()
        .collect()
}

pub fn commutes_with_set_preservers(r: &WeylElem) -> bool {
    set_preservers().iter().all(|g| g.commutes_with(r.perm()))
}

/// Outcome of the Sylow comparison between the centralizers of `b` in
/// `W(E₆)` and in the automorphism group of the Fermat cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowReport {
    pub class_size: usize,
    pub centralizer_order: usize,
    pub sylow_order: usize,
    pub sylow_rank: Option<u32>,
    pub fermat_centralizer_order: usize,
    pub fermat_sylow_order: usize,
    pub coincide: bool,
    pub r_in_sylow: bool,
}

/// Computes the centralizer of `b` in `W(E₆)` and its unique Sylow
/// 3-subgroup, and compares it with the Sylow 3-subgroup of the centralizer
/// of `b` inside the embedded Fermat automorphism group.
pub fn verify_sylow_lemma() -> Result<SylowReport> {
    let w = we6();
    let b = element_b();
    let class = w.conjugacy_class(b.perm())?;
    let cent = w.centralizer(b.perm())?;
    let sylow = cent.sylow3_unique()?;

    let fermat_side = fermat::centralizer_of_b()?;
    let fermat_sylow = fermat_side.sylow3_unique()?;
    let r = build_r()?;

    Ok(SylowReport {
        class_size: class.len(),
        centralizer_order: cent.order(),
        sylow_order: sylow.order(),
        sylow_rank: sylow.is_elementary_abelian_3(),
        fermat_centralizer_order: fermat_side.order(),
        fermat_sylow_order: fermat_sylow.order(),
        coincide: fermat_sylow.elements() == sylow.elements(),
        r_in_sylow: sylow.contains(r.perm()),
    })
}

/// Number of elements of `W(E₆)` of each Carter type in scope.
pub fn carter_census() -> (usize, usize) {
    let mut a2 = 0;
    let mut a2a2 = 0;
    for p in we6().elements() {
        let w = WeylElem::from_perm(p.clone()).expect("group element");
        match carter_type(&w) {
            CarterType::A2 => a2 += 1,
            CarterType::A2xA2 => a2a2 += 1,
            CarterType::Other => {}
        }
    }
    (a2, a2a2)
}

/// Every element of `W(E₆)` fixes `K`, preserves the pairing, and distinct
/// permutations come from distinct lattice maps.
pub fn check_all_isometries() -> Result<usize> {
    let mut mats = HashSet::new();
    for p in we6().elements() {
        let w = WeylElem::from_perm(p.clone())?;
        if !w.matrix.fixes_canonical_class() || !w.matrix.preserves_pairing() {
            return Err(Error::NotAutomorphism(format!("{w}")));
        }
        mats.insert(w.matrix);
    }
    if mats.len() != we6().order() {
        return Err(Error::NotAutomorphism("line action is not faithful".into()));
    }
    Ok(mats.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::piclattice::lines27;
    use LineTag::*;

    fn s6(cycles: &[&[usize]]) -> WeylElem {
        standard_s6(&Perm::from_cycles(6, cycles).unwrap()).unwrap()
    }

    #[test]
    fn root_counts() {
        let r6 = roots(6).unwrap();
        assert_eq!(r6.len(), 72);
        let e = PicVec::exceptional;
        let diff = r6.iter().filter(|r| r.0.l == 0).count();
        let one = r6.iter().filter(|r| r.0.l.abs() == 1).count();
        let two = r6.iter().filter(|r| r.0.l.abs() == 2).count();
        assert_eq!((diff, one, two), (30, 40, 2));
        assert!(r6.contains(&RootVec(e(0) - e(3))));
        assert_eq!(roots(4).unwrap().len(), 20);
        assert_eq!(roots(5).unwrap().len(), 40);
        assert_eq!(roots(7), Err(Error::UnsupportedRank(7)));
    }

    #[test]
    fn reflection_swapping_points() {
        let e = PicVec::exceptional;
        let s = reflection(&RootVec(e(0) - e(1))).unwrap();
        assert_eq!(s.image_of_line(E(0)), E(1));
        assert_eq!(s.image_of_line(Q(1)), Q(0));
        assert_eq!(s.image_of_line(LineTag::l(0, 4)), LineTag::l(1, 4));
        assert_eq!(s.image_of_line(LineTag::l(0, 1)), LineTag::l(0, 1));
        assert_eq!(s, s6(&[&[0, 1]]));
    }

    #[test]
    fn reflection_in_line_through_three_points() {
        // Apply the reflection formula to each line vector directly.
        let r = RootVec(PicVec::hyperplane() - PicVec::exceptional(0) - PicVec::exceptional(1) - PicVec::exceptional(2));
        let s = reflection(&r).unwrap();
        for l in lines27() {
            let img = reflect(&r, &l.vector);
            assert_eq!(s.image_of_line(l.tag).vector(), img);
        }
        assert_eq!(s.image_of_line(E(0)), LineTag::l(1, 2));
        assert_eq!(s.image_of_line(E(1)), LineTag::l(0, 2));
        assert_eq!(s.image_of_line(E(2)), LineTag::l(0, 1));
        assert_eq!(s.image_of_line(Q(3)), LineTag::l(4, 5));
        assert_eq!(s.image_of_line(E(3)), E(3));
        assert_eq!(s.image_of_line(LineTag::l(0, 3)), LineTag::l(0, 3));
    }

    #[test]
    fn reflections_are_involutions() {
        for r in roots(6).unwrap() {
            let s = reflection(&r).unwrap();
            assert!(s.compose(&s).is_identity());
            assert!(!s.is_identity());
        }
        assert_eq!(reflection_perms().unwrap().len(), 36);
    }

    #[test]
    fn small_weyl_orders() {
        assert_eq!(generate(4).unwrap().order(), 120);
        assert_eq!(generate(5).unwrap().order(), 1920);
    }

    #[test]
    fn s6_embedding() {
        assert!(s6(&[]).is_identity());
        let b = element_b();
        assert_eq!(b.image_of_line(E(3)), E(4));
        assert_eq!(b.image_of_line(E(0)), E(0));
        assert_eq!(b.matrix().apply(&PicVec::hyperplane()), PicVec::hyperplane());
        assert_eq!(element_c().image_of_line(E(2)), E(0));
    }

    #[test]
    fn carter_types_of_s6_elements() {
        assert_eq!(carter_type(&element_b()), CarterType::A2);
        assert_eq!(carter_type(&s6(&[&[0, 1, 2], &[3, 4, 5]])), CarterType::A2xA2);
        assert_eq!(carter_type(&WeylElem::identity()), CarterType::Other);
        assert_eq!(carter_type(&s6(&[&[0, 1]])), CarterType::Other);
        // direct char poly of (123)(456) on K⊥
        assert_eq!(k_perp_char_poly(&s6(&[&[0, 1, 2], &[3, 4, 5]])), cyclotomic_product(2, 2));
    }

    #[test]
    fn r_construction() {
        let r = build_r().unwrap();
        assert_eq!(r.order(), 3);
        let r2 = r.pow(2);
        let expect = [LineTag::l(1, 2), LineTag::l(0, 2), LineTag::l(0, 1), Q(3), Q(4), Q(5)];
        for (i, t) in expect.into_iter().enumerate() {
            assert_eq!(r2.image_of_line(E(i as u8)), t);
        }
        assert_eq!(r.to_string(), "[Q1, Q2, Q3, L56, L46, L45]");
        let b = element_b();
        let c = element_c();
        assert_eq!(b.compose(&r), r.compose(&b));
        assert_eq!(c.compose(&r), r.compose(&c));
        assert_eq!(b.compose(&c), c.compose(&b));
        assert!(b.preserves_exceptionals() && !r.preserves_exceptionals());
        assert_ne!(r, b);
        assert_ne!(r, b.pow(2));
    }

    #[test]
    fn displayed_br_rb_table() {
        let b = element_b();
        let r = build_r().unwrap();
        let br = b.compose(&r);
        let expect = [Q(0), Q(1), Q(2), LineTag::l(3, 5), LineTag::l(3, 4), LineTag::l(4, 5)];
        for (i, t) in expect.into_iter().enumerate() {
            assert_eq!(br.image_of_line(E(i as u8)), t);
        }
    }

    #[test]
    fn r_commutes_with_transpositions_in_the_blocks() {
        let r = build_r().unwrap();
        for g in [s6(&[&[0, 1]]), s6(&[&[3, 4]])] {
            assert_eq!(g.compose(&r), r.compose(&g));
        }
    }

    #[test]
    fn k_perp_basis_is_unimodular_on_roots() {
        let (_, d) = root_basis_inverse();
        assert_eq!(d.abs(), 3);
        // K⊥ matrix of the identity is the identity
        let m = k_perp_matrix(&WeylElem::identity());
        for (i, row) in m.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, i64::from(i == j));
            }
        }
    }

    #[test]
    fn from_perm_rejects_non_lattice_permutations() {
        // swapping two lines that meet cannot come from an isometry
        let p = Perm::from_cycles(27, &[&[0, Q(1).index()]]).unwrap();
        assert!(WeylElem::from_perm(p).is_err());
    }
}
