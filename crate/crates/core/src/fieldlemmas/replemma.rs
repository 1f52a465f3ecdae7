use std::collections::BTreeSet;

use num_traits::Zero;

use crate::exact::CycNum;
use crate::permgroup::{Perm, PermGroup};

/// Exponents `(a, b, c, d)` of `diag(ω^a, ω^b, ω^c, ω^d)`; addition mod 3 is
/// matrix multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExponentQuad(pub [u8; 4]);

impl ExponentQuad {
    pub fn all() -> Vec<ExponentQuad> {
        (0..81u8).map(|n| ExponentQuad([n / 27, n / 9 % 3, n / 3 % 3, n % 3])).collect()
    }

    pub fn code(&self) -> usize {
        self.0.iter().fold(0, |acc, &x| acc * 3 + x as usize)
    }

    pub fn add(&self, other: &ExponentQuad) -> ExponentQuad {
        ExponentQuad(std::array::from_fn(|i| (self.0[i] + other.0[i]) % 3))
    }

    /// Determinant condition: `a + b + c + d ≡ 0 (mod 3)`.
    pub fn cond1(&self) -> bool {
        self.0.iter().map(|&x| x as u32).sum::<u32>() % 3 == 0
    }

    /// `ω^a + ω^b + ω^c + ω^d`.
    pub fn trace(&self) -> CycNum {
        self.0.iter().fold(CycNum::zero(), |acc, &x| &acc + &CycNum::omega_pow(x.into()))
    }

    /// Trace condition over `Q`, or trivially true when `ω` is in the field.
    pub fn cond2(&self, has_omega: bool) -> bool {
        has_omega || self.trace().is_rational()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepLemmaReport {
    pub has_omega: bool,
    pub total: usize,
    pub cond1: usize,
    pub cond12: usize,
    pub witness: ExponentQuad,
    pub witness_in_cond1: bool,
    pub witness_fails_cond2: bool,
    /// `Some(3)` when the condition-(1) quads form `(Z/3Z)³`.
    pub cond1_rank: Option<u32>,
    /// Largest subgroup of the condition-(1) group inside the admissible set.
    pub largest_admissible_subgroup: usize,
    /// Two admissible quads whose sum is not admissible.
    pub non_closure: Option<(ExponentQuad, ExponentQuad)>,
}

impl RepLemmaReport {
    pub fn passed(&self) -> bool {
        let base = self.total == 81 && self.cond1 == 27 && self.cond1_rank == Some(3);
        if self.has_omega {
            base && self.cond12 == 27 && self.largest_admissible_subgroup == 27
        } else {
            base && self.cond12 == 19
                && self.witness_in_cond1
                && self.witness_fails_cond2
                && self.largest_admissible_subgroup < 27
                && self.non_closure.is_some()
        }
    }
}

/// Span of `gens` under addition mod 3.
fn span(gens: &[ExponentQuad]) -> BTreeSet<ExponentQuad> {
    let mut set = BTreeSet::from([ExponentQuad([0; 4])]);
    for g in gens {
        let current: Vec<ExponentQuad> = set.iter().copied().collect();
        for x in current {
            set.insert(x.add(g));
            set.insert(x.add(g).add(g));
        }
    }
    set
}

pub fn rep_lemma_check(has_omega: bool) -> RepLemmaReport {
    let all = ExponentQuad::all();
    let group: Vec<ExponentQuad> = all.iter().copied().filter(ExponentQuad::cond1).collect();
    let admissible: BTreeSet<ExponentQuad> = group.iter().copied().filter(|q| q.cond2(has_omega)).collect();

    // translations of the 81 quads by the condition-(1) quads
    let translations: Vec<Perm> = group
        .iter()
        .map(|g| Perm::from_images(&all.iter().map(|x| x.add(g).code()).collect::<Vec<_>>()).unwrap())
        .collect();
    let cond1_rank = PermGroup::closure(all.len(), &translations)
        .ok()
        .filter(|g| g.order() == group.len())
        .and_then(|g| g.is_elementary_abelian_3());

    // every subgroup of (Z/3Z)³ is spanned by at most three elements
    let mut largest = 1;
    for (i, a) in group.iter().enumerate() {
        for (j, b) in group.iter().enumerate().skip(i) {
            for c in &group[j..] {
                let s = span(&[*a, *b, *c]);
                if s.len() > largest && s.is_subset(&admissible) {
                    largest = s.len();
                }
            }
        }
    }

    let non_closure = admissible
        .iter()
        .flat_map(|a| admissible.iter().map(move |b| (*a, *b)))
        .find(|(a, b)| !admissible.contains(&a.add(b)));

    let witness = ExponentQuad([1, 1, 1, 0]);
    RepLemmaReport {
        has_omega,
        total: all.len(),
        cond1: group.len(),
        cond12: admissible.len(),
        witness,
        witness_in_cond1: witness.cond1(),
        witness_fails_cond2: !witness.cond2(has_omega),
        cond1_rank,
        largest_admissible_subgroup: largest,
        non_closure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Trace is rational iff exponents 1 and 2 occur equally often, since
    /// ω² = −1 − ω.
    fn cond2_oracle(q: &ExponentQuad) -> bool {
        q.0.iter().filter(|&&x| x == 1).count() == q.0.iter().filter(|&&x| x == 2).count()
    }

    #[test]
    fn counts() {
        let r = rep_lemma_check(false);
        assert_eq!(r.cond1, 27);
        assert_eq!(r.cond12, 19);
        assert!(r.witness_fails_cond2);
        assert_eq!(r.cond1_rank, Some(3));
        assert_eq!(r.largest_admissible_subgroup, 9);
        assert!(r.passed(), "{r:?}");
        let oracle = ExponentQuad::all().iter().filter(|q| q.cond1() && cond2_oracle(q)).count();
        assert_eq!(oracle, 19);
    }

    #[test]
    fn cond2_matches_oracle() {
        for q in ExponentQuad::all() {
            assert_eq!(q.cond2(false), cond2_oracle(&q), "{q:?}");
        }
    }

    #[test]
    fn non_closure_witness() {
        let (a, b) = rep_lemma_check(false).non_closure.unwrap();
        assert!(a.cond1() && cond2_oracle(&a) && b.cond1() && cond2_oracle(&b));
        assert!(!cond2_oracle(&a.add(&b)));
    }

    #[test]
    fn order_nine_example() {
        let s = span(&[ExponentQuad([1, 2, 0, 0]), ExponentQuad([0, 0, 1, 2])]);
        assert_eq!(s.len(), 9);
        assert!(s.iter().all(|q| q.cond1() && cond2_oracle(q)));
    }

    #[test]
    fn with_omega() {
        let r = rep_lemma_check(true);
        assert_eq!(r.cond12, 27);
        assert_eq!(r.largest_admissible_subgroup, 27);
        assert!(r.non_closure.is_none());
        assert!(r.passed());
    }
}
