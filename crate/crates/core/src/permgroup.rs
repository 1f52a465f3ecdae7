//! Finite permutation groups held as fully enumerated, sorted element lists.
//!
//! Every group in this crate has at most a few tens of thousands of
//! elements, so the queries below are brute force over the element list and
//! can be checked by hand on small examples.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the number of elements [`PermGroup::closure`] will
/// enumerate.
pub const DEFAULT_LIMIT: usize = 1_000_000;

/// Largest supported degree; images are stored as bytes.
pub const MAX_DEGREE: usize = 256;

/// A bijection of `0..n`. Ordering is lexicographic on the image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE);
        Self { images: (0..n).map(|i| i as u8).collect() }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidPerm(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut seen = vec![false; n];
        for &i in images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPerm(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Self { images: images.iter().map(|&i| i as u8).collect() })
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &i) in cycle.iter().enumerate() {
                let j = cycle[(k + 1) % cycle.len()];
                if i >= n || j >= n {
                    return Err(Error::InvalidPerm(format!("point out of range in {cycle:?}")));
                }
                images[i] = j;
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, k: u32) -> Perm {
        (0..k).fold(Perm::identity(self.degree()), |acc, _| acc.compose(self))
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        h.compose(self).compose(&h.inverse())
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Lengths of the cycles, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, l| num_integer::lcm(acc, l as u64))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// Cycle notation on `0..n`, fixed points omitted.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.apply(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group with its full element list in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self { degree, generators: vec![], elements: vec![Perm::identity(degree)] }
    }

    /// Saturates the generators under composition, up to [`DEFAULT_LIMIT`]
    /// elements.
    pub fn closure(degree: usize, generators: &[Perm]) -> Result<Self> {
        Self::closure_with_limit(degree, generators, DEFAULT_LIMIT)
    }

    pub fn closure_with_limit(degree: usize, generators: &[Perm], limit: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        // In a finite group left-multiplying by generators reaches every
        // element, inverses included.
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= limit {
                        return Err(Error::SizeLimit { limit });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self { degree, generators: generators.to_vec(), elements })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Position of `g` in the canonical element order.
    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    fn require(&self, g: &Perm) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::NotInGroup)
        }
    }

    /// `{h g h⁻¹ : h ∈ G}`, sorted.
    pub fn conjugacy_class(&self, g: &Perm) -> Result<Vec<Perm>> {
        self.require(g)?;
        let class: HashSet<Perm> = self.elements.iter().map(|h| g.conjugate_by(h)).collect();
        let mut class: Vec<Perm> = class.into_iter().collect();
        class.sort_unstable();
        Ok(class)
    }

    pub fn centralizer(&self, g: &Perm) -> Result<PermGroup> {
        self.require(g)?;
        let elems = self.elements.iter().filter(|h| h.commutes_with(g)).cloned().collect();
        Ok(self.subgroup_from_closed_set(elems))
    }

    /// Wraps a sorted element set already known to be a subgroup, choosing a
    /// small generating set greedily.
    fn subgroup_from_closed_set(&self, elements: Vec<Perm>) -> PermGroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut generators = Vec::new();
        let mut span = PermGroup::trivial(self.degree);
        for e in &elements {
            if !span.contains(e) {
                generators.push(e.clone());
                span = PermGroup::closure(self.degree, &generators).expect("subgroup of a finite group");
            }
        }
        debug_assert_eq!(span.elements, elements);
        PermGroup { degree: self.degree, generators, elements }
    }

    /// Smallest subgroup containing `elems`.
    pub fn subgroup_generated(&self, elems: &[Perm]) -> Result<PermGroup> {
        for e in elems {
            self.require(e)?;
        }
        PermGroup::closure(self.degree, elems)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// True iff `self ≤ other` and `self` is closed under conjugation by
    /// every element of `other`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.elements.iter().all(|h| self.generators_or_elements().iter().all(|g| self.contains(&g.conjugate_by(h))))
    }

    fn generators_or_elements(&self) -> &[Perm] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators_or_elements();
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// The unique Sylow 3-subgroup, certified by checking that the elements
    /// of 3-power order form a subgroup of order equal to the 3-part of
    /// `|G|`. Fails when they do not, which means the Sylow 3-subgroup is not
    /// normal (or, equivalently, not unique).
    pub fn sylow3_unique(&self) -> Result<PermGroup> {
        let mut three_part = 1usize;
        let mut n = self.order();
        while n.is_multiple_of(3) {
            n /= 3;
            three_part *= 3;
        }
        let threes: Vec<Perm> = self.elements.iter().filter(|g| is_power_of_three(g.order())).cloned().collect();
        if threes.len() != three_part {
            return Err(Error::NoNormalSylow3);
        }
        let set: HashSet<&Perm> = threes.iter().collect();
        let closed = threes.iter().all(|a| threes.iter().all(|b| set.contains(&a.compose(b))));
        if !closed {
            return Err(Error::NoNormalSylow3);
        }
        Ok(self.subgroup_from_closed_set(threes))
    }

    /// `Some(r)` if the group is `(Z/3Z)^r`, else `None`.
    pub fn is_elementary_abelian_3(&self) -> Option<u32> {
        if !self.is_abelian() || !self.elements.iter().all(|g| g.is_identity() || g.order() == 3) {
            return None;
        }
        let mut n = self.order();
        let mut rank = 0;
        while n.is_multiple_of(3) {
            n /= 3;
            rank += 1;
        }
        (n == 1).then_some(rank)
    }
}

fn is_power_of_three(mut n: u64) -> bool {
    while n.is_multiple_of(3) {
        n /= 3;
    }
    n == 1
}

/// The symmetric group on `n` points, generated by a transposition and an
/// `n`-cycle.
pub fn symmetric_group(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let t = Perm::from_cycles(n, &[&[0, 1]]).unwrap();
    let cyc: Vec<usize> = (0..n).collect();
    let c = Perm::from_cycles(n, &[&cyc]).unwrap();
    PermGroup::closure(n, &[t, c]).expect("S_n within limit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, c: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, c).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(&[0, 0, 1]).is_err());
        assert!(Perm::from_images(&[0, 3, 1]).is_err());
    }

    #[test]
    fn compose_applies_right_first() {
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        // a∘b: 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&b).apply(2), 0);
        assert_eq!(format!("{}", a.compose(&b)), "(0 1 2)");
    }

    #[test]
    fn small_closures() {
        assert_eq!(PermGroup::closure(4, &[Perm::identity(4)]).unwrap().order(), 1);
        assert_eq!(PermGroup::closure(3, &[cyc(3, &[&[0, 1, 2]])]).unwrap().order(), 3);
        assert_eq!(symmetric_group(5).order(), 120);
    }

    #[test]
    fn closure_limit() {
        let err = PermGroup::closure_with_limit(5, symmetric_group(5).generators(), 50).unwrap_err();
        assert_eq!(err, Error::SizeLimit { limit: 50 });
    }

    #[test]
    fn degree_mismatch() {
        assert!(matches!(
            PermGroup::closure(4, &[Perm::identity(3)]),
            Err(Error::DegreeMismatch { expected: 4, found: 3 })
        ));
    }

    #[test]
    fn classes_in_s3() {
        let s3 = symmetric_group(3);
        let id = s3.identity();
        assert_eq!(s3.conjugacy_class(&id).unwrap(), vec![id.clone()]);
        // brute force: 3-cycles of S3 are (0 1 2) and (0 2 1), in image order
        let class = s3.conjugacy_class(&cyc(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(class, vec![cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 2, 1]])]);
        assert_eq!(s3.centralizer(&id).unwrap().order(), 6);
        assert_eq!(s3.centralizer(&cyc(3, &[&[0, 1, 2]])).unwrap().order(), 3);
        let c3 = PermGroup::closure(3, &[cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(c3.conjugacy_class(&cyc(3, &[&[0, 1]])), Err(Error::NotInGroup));
        assert!(c3.centralizer(&cyc(3, &[&[0, 1]])).is_err());
    }

    #[test]
    fn sylow3() {
        let c3 = PermGroup::closure(3, &[cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(c3.sylow3_unique().unwrap(), c3);
        // S3 has a single Sylow-3 (A3); S4 has four.
        assert_eq!(symmetric_group(3).sylow3_unique().unwrap().order(), 3);
        assert_eq!(symmetric_group(4).sylow3_unique(), Err(Error::NoNormalSylow3));
    }

    #[test]
    fn elementary_abelian() {
        assert_eq!(PermGroup::trivial(4).is_elementary_abelian_3(), Some(0));
        assert_eq!(symmetric_group(3).is_elementary_abelian_3(), None);
        let g = PermGroup::closure(6, &[cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[3, 4, 5]])]).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.is_elementary_abelian_3(), Some(2));
        let z9 = PermGroup::closure(9, &[cyc(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]])]).unwrap();
        assert_eq!(z9.is_elementary_abelian_3(), None);
    }

    #[test]
    fn generated_subgroups() {
        let s6 = symmetric_group(6);
        assert_eq!(s6.subgroup_generated(&[]).unwrap().order(), 1);
        let h = s6.subgroup_generated(&[cyc(6, &[&[3, 4, 5]]), cyc(6, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(h.order(), 9);
        assert!(h.is_subgroup_of(&s6));
        let c3 = PermGroup::closure(3, &[cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert!(c3.subgroup_generated(&[cyc(3, &[&[0, 1]])]).is_err());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(&v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn orbit_stabilizer_and_lagrange(gens in proptest::collection::vec(perm_strategy(5), 1..3)) {
            let g = PermGroup::closure(5, &gens).unwrap();
            prop_assert_eq!(120 % g.order(), 0);
            for x in g.elements() {
                let cls = g.conjugacy_class(x).unwrap().len();
                let cen = g.centralizer(x).unwrap();
                prop_assert_eq!(cls * cen.order(), g.order());
                prop_assert_eq!(g.order() % cen.order(), 0);
            }
            if let Ok(s) = g.sylow3_unique() {
                prop_assert!(s.is_normal_in(&g));
            }
        }

        #[test]
        fn closure_is_deterministic(gens in proptest::collection::vec(perm_strategy(6), 1..4)) {
            let a = PermGroup::closure(6, &gens).unwrap();
            let mut rev = gens.clone();
            rev.reverse();
            let b = PermGroup::closure(6, &rev).unwrap();
            prop_assert_eq!(a.elements(), b.elements());
            for e in a.elements() {
                prop_assert!(a.contains(&e.inverse()));
            }
        }
    }
}
