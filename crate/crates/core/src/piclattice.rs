//! The Picard lattice of a smooth cubic surface.
//!
//! A class is written `l·L + Σ eᵢ·Eᵢ`, where `L` is the pullback of a line
//! from the plane and `E₁..E₆` are the exceptional curves of the blowup. The
//! pairing is `L² = 1`, `Eᵢ² = −1`, all other products zero, and the
//! canonical class is `K = −3L + ΣEᵢ`.
//!
//! Lines are indexed `E₁..E₆ = 0..5`, `Q₁..Q₆ = 6..11`, then `Lᵢⱼ` for
//! `i < j` in lexicographic order as `12..26`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::permgroup::Perm;

pub const RANK: usize = 7;
pub const NUM_LINES: usize = 27;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct PicVec {
    pub l: i64,
    pub e: [i64; 6],
}

impl PicVec {
    pub const ZERO: PicVec = PicVec { l: 0, e: [0; 6] };

    pub const fn new(l: i64, e: [i64; 6]) -> Self {
        Self { l, e }
    }

    pub fn from_coords(c: [i64; RANK]) -> Self {
        Self { l: c[0], e: [c[1], c[2], c[3], c[4], c[5], c[6]] }
    }

    pub fn coords(&self) -> [i64; RANK] {
        let e = self.e;
        [self.l, e[0], e[1], e[2], e[3], e[4], e[5]]
    }

    /// The class `L`.
    pub const fn hyperplane() -> Self {
        Self::new(1, [0; 6])
    }

    /// The class `Eᵢ`, `i` zero-based.
    pub fn exceptional(i: usize) -> Self {
        let mut e = [0; 6];
        e[i] = 1;
        Self::new(0, e)
    }

    /// Basis vector `k` in the order `L, E₁, …, E₆`.
    pub fn basis(k: usize) -> Self {
        if k == 0 {
            Self::hyperplane()
        } else {
            Self::exceptional(k - 1)
        }
    }

    pub fn pairing(&self, other: &PicVec) -> i64 {
        self.l * other.l - self.e.iter().zip(&other.e).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn square(&self) -> i64 {
        self.pairing(self)
    }
}

impl Add for PicVec {
    type Output = PicVec;
    fn add(self, o: PicVec) -> PicVec {
        PicVec::new(self.l + o.l, std::array::from_fn(|i| self.e[i] + o.e[i]))
    }
}

impl Sub for PicVec {
    type Output = PicVec;
    fn sub(self, o: PicVec) -> PicVec {
        self + (-o)
    }
}

impl Neg for PicVec {
    type Output = PicVec;
    fn neg(self) -> PicVec {
        PicVec::new(-self.l, self.e.map(|x| -x))
    }
}

impl Mul<PicVec> for i64 {
    type Output = PicVec;
    fn mul(self, v: PicVec) -> PicVec {
        PicVec::new(self * v.l, v.e.map(|x| self * x))
    }
}

impl fmt::Display for PicVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.e.iter().map(i64::to_string).collect();
        write!(f, "({}; {})", self.l, e.join(","))
    }
}

pub fn pairing(u: &PicVec, v: &PicVec) -> i64 {
    u.pairing(v)
}

/// Canonical class `−3L + E₁ + … + Eₙ` of the blowup of the plane in `n`
/// points (`n ≤ 6`); the unused `E` slots are zero.
pub fn canonical_class_n(n: usize) -> PicVec {
    let mut e = [0; 6];
    e[..n].fill(1);
    PicVec::new(-3, e)
}

/// Canonical class of the cubic surface.
pub fn canonical_class() -> PicVec {
    canonical_class_n(6)
}

/// Name of a line class. Indices are zero-based; `Display` prints them
/// one-based (`E1`, `Q6`, `L56`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum LineTag {
    E(u8),
    Q(u8),
    /// `L(i, j)` with `i < j`.
    L(u8, u8),
}

impl LineTag {
    pub fn l(i: usize, j: usize) -> Self {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        assert!(a != b && b < 6);
        LineTag::L(a as u8, b as u8)
    }

    pub fn index(self) -> usize {
        match self {
            LineTag::E(i) => i as usize,
            LineTag::Q(i) => 6 + i as usize,
            LineTag::L(i, j) => {
                let (i, j) = (i as usize, j as usize);
                // pairs before row i, then offset within the row
                12 + (0..i).map(|k| 5 - k).sum::<usize>() + (j - i - 1)
            }
        }
    }

    pub fn from_index(idx: usize) -> Self {
        all_tags()[idx]
    }

    pub fn vector(self) -> PicVec {
        match self {
            LineTag::E(i) => PicVec::exceptional(i as usize),
            LineTag::Q(i) => {
                let mut e = [-1; 6];
                e[i as usize] = 0;
                PicVec::new(2, e)
            }
            LineTag::L(i, j) => {
                let mut e = [0; 6];
                e[i as usize] = -1;
                e[j as usize] = -1;
                PicVec::new(1, e)
            }
        }
    }
}

impl fmt::Display for LineTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LineTag::E(i) => write!(f, "E{}", i + 1),
            LineTag::Q(i) => write!(f, "Q{}", i + 1),
            LineTag::L(i, j) => write!(f, "L{}{}", i + 1, j + 1),
        }
    }
}

fn all_tags() -> &'static [LineTag; NUM_LINES] {
    static TAGS: OnceLock<[LineTag; NUM_LINES]> = OnceLock::new();
    TAGS.get_or_init(|| {
        let mut tags = Vec::with_capacity(NUM_LINES);
        tags.extend((0..6).map(LineTag::E));
        tags.extend((0..6).map(LineTag::Q));
        for i in 0..6u8 {
            for j in i + 1..6 {
                tags.push(LineTag::L(i, j));
            }
        }
        tags.try_into().unwrap()
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LineClass {
    pub tag: LineTag,
    pub vector: PicVec,
}

impl LineClass {
    pub fn index(&self) -> usize {
        self.tag.index()
    }
}

/// The 27 line classes, in index order.
pub fn lines27() -> &'static [LineClass] {
    static LINES: OnceLock<Vec<LineClass>> = OnceLock::new();
    LINES.get_or_init(|| all_tags().iter().map(|&tag| LineClass { tag, vector: tag.vector() }).collect())
}

pub fn line(idx: usize) -> &'static LineClass {
    &lines27()[idx]
}

/// Index of the line class with the given vector, if it is one.
pub fn line_index(v: &PicVec) -> Option<usize> {
    static LOOKUP: OnceLock<HashMap<PicVec, usize>> = OnceLock::new();
    LOOKUP
        .get_or_init(|| lines27().iter().enumerate().map(|(i, l)| (l.vector, i)).collect())
        .get(v)
        .copied()
}

/// All `v` with `v² = −1` and `v·K = −1`, found by exhaustive search.
///
/// Writing `v = (l; e)`, the two equations say `Σeᵢ = 1 − 3l` and
/// `Σeᵢ² = l² + 1`; Cauchy–Schwarz then forces `0 ≤ l ≤ 2` and `|eᵢ| ≤ 2`,
/// so the box searched below is complete.
pub fn lines_by_equation() -> Vec<PicVec> {
    let k = canonical_class();
    let mut out = Vec::new();
    for l in 0..=2 {
        for code in 0..5i64.pow(6) {
            let mut c = code;
            let e: [i64; 6] = std::array::from_fn(|_| {
                let d = c % 5 - 2;
                c /= 5;
                d
            });
            let v = PicVec::new(l, e);
            if v.square() == -1 && v.pairing(&k) == -1 {
                out.push(v);
            }
        }
    }
    out.sort();
    out
}

/// Intersection graph of the 27 lines: an edge joins two lines that meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    adj: [[bool; NUM_LINES]; NUM_LINES],
}

impl IncidenceGraph {
    pub fn new() -> Self {
        let lines = lines27();
        let mut adj = [[false; NUM_LINES]; NUM_LINES];
        for i in 0..NUM_LINES {
            for j in 0..NUM_LINES {
                adj[i][j] = i != j && lines[i].vector.pairing(&lines[j].vector) == 1;
            }
        }
        Self { adj }
    }

    pub fn meets(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..NUM_LINES).filter(move |&j| self.adj[i][j])
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }
}

impl Default for IncidenceGraph {
    fn default() -> Self {
        Self::new()
    }
}

/// Six distinct, pairwise skew lines.
pub fn is_sixer(lines: &[usize]) -> bool {
    let all = lines27();
    lines.len() == 6
        && lines.iter().enumerate().all(|(a, &i)| {
            lines[a + 1..].iter().all(|&j| i != j && all[i].vector.pairing(&all[j].vector) == 0)
        })
}

/// Every unordered sixer, as sorted index sets, in lexicographic order.
pub fn all_sixers() -> Vec<[usize; 6]> {
    let g = IncidenceGraph::new();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(6);
    fn extend(g: &IncidenceGraph, start: usize, stack: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
        if stack.len() == 6 {
            out.push(stack.as_slice().try_into().unwrap());
            return;
        }
        for j in start..NUM_LINES {
            if stack.iter().all(|&i| !g.meets(i, j)) {
                stack.push(j);
                extend(g, j + 1, stack, out);
                stack.pop();
            }
        }
    }
    extend(&g, 0, &mut stack, &mut out);
    out
}

/// The unique line meeting each of five pairwise skew lines.
pub fn unique_transversal(five: &[usize; 5]) -> Result<usize> {
    let g = IncidenceGraph::new();
    let found: Vec<usize> = (0..NUM_LINES).filter(|&j| five.iter().all(|&i| g.meets(i, j))).collect();
    match found[..] {
        [t] => Ok(t),
        _ => Err(Error::Transversal { found: found.len() }),
    }
}

/// Integer matrix acting on `(l, e₁, …, e₆)` coordinates; column `k` is the
/// image of basis vector `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LatticeMap(pub [[i64; RANK]; RANK]);

impl LatticeMap {
    pub fn identity() -> Self {
        let mut m = [[0; RANK]; RANK];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self(m)
    }

    pub fn from_columns(cols: [PicVec; RANK]) -> Self {
        let mut m = [[0; RANK]; RANK];
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.coords().into_iter().enumerate() {
                m[i][j] = x;
            }
        }
        Self(m)
    }

    pub fn apply(&self, v: &PicVec) -> PicVec {
        let c = v.coords();
        PicVec::from_coords(std::array::from_fn(|i| (0..RANK).map(|j| self.0[i][j] * c[j]).sum()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LatticeMap) -> LatticeMap {
        LatticeMap(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..RANK).map(|k| self.0[i][k] * other.0[k][j]).sum())
        }))
    }

    pub fn det(&self) -> i64 {
        let rows: Vec<Vec<i64>> = self.0.iter().map(|r| r.to_vec()).collect();
        crate::exact::det(&rows)
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }

    pub fn fixes_canonical_class(&self) -> bool {
        let k = canonical_class();
        self.apply(&k) == k
    }

    /// Pairing preserved on all pairs of basis vectors.
    pub fn preserves_pairing(&self) -> bool {
        (0..RANK).all(|i| {
            (0..RANK).all(|j| {
                let (u, v) = (PicVec::basis(i), PicVec::basis(j));
                self.apply(&u).pairing(&self.apply(&v)) == u.pairing(&v)
            })
        })
    }

    /// The induced permutation of the 27 line classes.
    pub fn line_perm(&self) -> Result<Perm> {
        let images = lines27()
            .iter()
            .map(|l| {
                line_index(&self.apply(&l.vector))
                    .ok_or_else(|| Error::NotAutomorphism(format!("{} is not sent to a line", l.tag)))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(&images)
    }
}

/// The lattice map fixing `K` with `Eᵢ ↦ images[i]`, checked to be an
/// integral isometry.
pub fn extend_to_weyl(images: &[usize; 6]) -> Result<LatticeMap> {
    if !is_sixer(images) {
        return Err(Error::NotASixer);
    }
    let k = canonical_class();
    let f: [PicVec; 6] = images.map(|i| line(i).vector);
    // L = (−K + ΣEᵢ)/3, so its image is (−K + Σ f(Eᵢ))/3
    let num = f.iter().fold(-k, |acc, v| acc + *v);
    if num.coords().iter().any(|c| c % 3 != 0) {
        return Err(Error::NotAutomorphism("image of L is not integral".into()));
    }
    let ml = PicVec::from_coords(num.coords().map(|c| c / 3));
    let m = LatticeMap::from_columns([ml, f[0], f[1], f[2], f[3], f[4], f[5]]);
    if !m.fixes_canonical_class() {
        return Err(Error::NotAutomorphism("K is not fixed".into()));
    }
    if !m.preserves_pairing() {
        return Err(Error::NotAutomorphism("pairing is not preserved".into()));
    }
    if m.det().abs() != 1 {
        return Err(Error::NotAutomorphism("not invertible over the integers".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use LineTag::*;

    fn idx(t: LineTag) -> usize {
        t.index()
    }

    #[test]
    fn canonical_class_square() {
        let k = canonical_class();
        assert_eq!(k.square(), 3);
        assert_eq!(canonical_class_n(4).square(), 5);
        assert_eq!(canonical_class_n(5).square(), 4);
    }

    #[test]
    fn hyperplane_is_third_of_anticanonical_plus_exceptionals() {
        let sum = (0..6).fold(-canonical_class(), |acc, i| acc + PicVec::exceptional(i));
        assert_eq!(sum, 3 * PicVec::hyperplane());
    }

    #[test]
    fn line_vectors() {
        assert_eq!(lines27().len(), 27);
        assert_eq!(E(0).vector(), PicVec::new(0, [1, 0, 0, 0, 0, 0]));
        assert_eq!(Q(0).vector(), PicVec::new(2, [0, -1, -1, -1, -1, -1]));
        assert_eq!(LineTag::l(4, 5).vector(), PicVec::new(1, [0, 0, 0, 0, -1, -1]));
        let k = canonical_class();
        for l in lines27() {
            assert_eq!(l.vector.square(), -1, "{}", l.tag);
            assert_eq!(l.vector.pairing(&k), -1, "{}", l.tag);
        }
    }

    #[test]
    fn indexing_convention() {
        assert_eq!(idx(E(0)), 0);
        assert_eq!(idx(Q(5)), 11);
        assert_eq!(idx(LineTag::l(0, 1)), 12);
        assert_eq!(idx(LineTag::l(0, 5)), 16);
        assert_eq!(idx(LineTag::l(1, 2)), 17);
        assert_eq!(idx(LineTag::l(4, 5)), 26);
        for i in 0..NUM_LINES {
            assert_eq!(LineTag::from_index(i).index(), i);
        }
        assert_eq!(LineTag::l(4, 5).to_string(), "L56");
    }

    #[test]
    fn q1_by_brute_force() {
        // v² = −1, v·K = −1, v·E₁ = 0, v·Eⱼ = 1 (j ≠ 1), small coefficients
        let k = canonical_class();
        let mut hits = vec![];
        for l in -3..=3 {
            for code in 0..7i64.pow(6) {
                let mut c = code;
                let e: [i64; 6] = std::array::from_fn(|_| {
                    let d = c % 7 - 3;
                    c /= 7;
                    d
                });
                let v = PicVec::new(l, e);
                if v.square() == -1
                    && v.pairing(&k) == -1
                    && v.pairing(&PicVec::exceptional(0)) == 0
                    && (1..6).all(|j| v.pairing(&PicVec::exceptional(j)) == 1)
                {
                    hits.push(v);
                }
            }
        }
        assert_eq!(hits, vec![Q(0).vector()]);
    }

    #[test]
    fn tag_convention_matches_equations() {
        let mut tagged: Vec<PicVec> = lines27().iter().map(|l| l.vector).collect();
        tagged.sort();
        assert_eq!(tagged, lines_by_equation());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&E(0).vector(), &Q(0).vector()), 0);
        assert_eq!(pairing(&E(0).vector(), &Q(1).vector()), 1);
        assert_eq!(pairing(&LineTag::l(4, 5).vector(), &LineTag::l(3, 5).vector()), 0);
        assert_eq!(pairing(&LineTag::l(0, 1).vector(), &LineTag::l(2, 3).vector()), 1);
    }

    #[test]
    fn displayed_relation_table() {
        // Exhaustive check of the intersection numbers between named lines.
        for i in 0..6usize {
            for j in 0..6usize {
                let eq = E(i as u8).vector().pairing(&Q(j as u8).vector());
                assert_eq!(eq, i64::from(i != j));
                if i != j {
                    assert_eq!(Q(i as u8).vector().pairing(&Q(j as u8).vector()), 0);
                }
            }
        }
        for (a, b) in (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))) {
            let lab = LineTag::l(a, b).vector();
            for k in 0..6 {
                let inside = i64::from(k == a || k == b);
                assert_eq!(lab.pairing(&PicVec::exceptional(k)), inside);
                assert_eq!(lab.pairing(&Q(k as u8).vector()), inside);
            }
            for (c, d) in (0..6).flat_map(|c| (c + 1..6).map(move |d| (c, d))) {
                if (a, b) == (c, d) {
                    continue;
                }
                let disjoint = ![c, d].contains(&a) && ![c, d].contains(&b);
                assert_eq!(lab.pairing(&LineTag::l(c, d).vector()), i64::from(disjoint));
            }
        }
    }

    #[test]
    fn incidence_graph_is_ten_regular() {
        let g = IncidenceGraph::new();
        for i in 0..NUM_LINES {
            assert_eq!(g.degree(i), 10);
        }
        // complement (minus the diagonal) is 16-regular
        for i in 0..NUM_LINES {
            assert_eq!((0..NUM_LINES).filter(|&j| j != i && !g.meets(i, j)).count(), 16);
        }
    }

    #[test]
    fn sixers() {
        let e: Vec<usize> = (0..6).collect();
        assert!(is_sixer(&e));
        let twisted = [Q(0), Q(1), Q(2), LineTag::l(4, 5), LineTag::l(3, 5), LineTag::l(3, 4)].map(idx);
        assert!(is_sixer(&twisted));
        let bad = [E(0), Q(1), E(2), E(3), E(4), E(5)].map(idx);
        assert!(!is_sixer(&bad));
        assert!(!is_sixer(&[0, 0, 1, 2, 3, 4]));
        assert_eq!(all_sixers().len(), 72);
    }

    #[test]
    fn transversals() {
        assert_eq!(unique_transversal(&[0, 1, 2, 3, 4]).unwrap(), idx(Q(5)));
        assert_eq!(unique_transversal(&[1, 2, 3, 4, 5]).unwrap(), idx(Q(0)));
        let five = [Q(0), Q(1), Q(2), LineTag::l(4, 5), LineTag::l(3, 5)].map(idx);
        let t = unique_transversal(&five).unwrap();
        // brute force scan
        let g = IncidenceGraph::new();
        let scan: Vec<usize> = (0..27).filter(|&j| five.iter().all(|&i| g.meets(i, j))).collect();
        assert_eq!(scan, vec![t]);
        assert_eq!(LineTag::from_index(t), E(5));
        assert!(matches!(unique_transversal(&[0, 1, 2, 3, 6]), Err(Error::Transversal { .. })));
    }

    #[test]
    fn every_five_of_every_sixer_has_a_transversal() {
        for s in all_sixers() {
            for skip in 0..6 {
                let five: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                assert!(unique_transversal(&five.try_into().unwrap()).is_ok());
            }
        }
    }

    #[test]
    fn extend_identity_and_swap() {
        assert_eq!(extend_to_weyl(&[0, 1, 2, 3, 4, 5]).unwrap(), LatticeMap::identity());
        let m = extend_to_weyl(&[1, 0, 2, 3, 4, 5]).unwrap();
        let p = m.line_perm().unwrap();
        assert_eq!(p.apply(idx(Q(0))), idx(Q(1)));
        assert_eq!(p.apply(idx(LineTag::l(0, 2))), idx(LineTag::l(1, 2)));
        assert_eq!(p.apply(idx(LineTag::l(0, 1))), idx(LineTag::l(0, 1)));
        assert_eq!(m.compose(&m), LatticeMap::identity());
        assert_eq!(extend_to_weyl(&[0, 7, 2, 3, 4, 5]), Err(Error::NotASixer));
    }

    #[test]
    fn extend_r_has_order_three() {
        let imgs = [Q(0), Q(1), Q(2), LineTag::l(4, 5), LineTag::l(3, 5), LineTag::l(3, 4)].map(idx);
        let r = extend_to_weyl(&imgs).unwrap();
        assert_ne!(r, LatticeMap::identity());
        assert_eq!(r.compose(&r).compose(&r), LatticeMap::identity());
    }

    #[test]
    fn extensions_of_all_ordered_sixers_are_isometries() {
        for s in all_sixers() {
            for rot in 0..6 {
                let mut imgs = s;
                imgs.rotate_left(rot);
                let m = extend_to_weyl(&imgs).unwrap();
                assert!(m.fixes_canonical_class());
                assert!(m.preserves_pairing());
                assert!(m.line_perm().is_ok());
            }
        }
    }
}
