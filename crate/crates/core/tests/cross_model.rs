//! Invariants linking the abstract lattice model with the Fermat cubic.

use std::sync::OnceLock;

use proptest::prelude::*;

use cubic27::fermat::{
    adapted_marking, embedded_group, fermat_aut_group, find_marking, monomial_eigen_exponents,
    classify_eigen_exponents, FermatAut, FermatLine, Marking,
};
use cubic27::piclattice::{line, pairing, canonical_class, IncidenceGraph, LineTag, NUM_LINES};
use cubic27::weyl::{carter_type, element_b, verify_sylow_lemma, we6, WeylElem};
use cubic27::{CarterType, Perm};

fn marking() -> &'static Marking {
    static M: OnceLock<Marking> = OnceLock::new();
    M.get_or_init(|| find_marking().unwrap())
}

fn auts() -> &'static [FermatAut] {
    static A: OnceLock<Vec<FermatAut>> = OnceLock::new();
    A.get_or_init(fermat_aut_group)
}

fn aut() -> impl Strategy<Value = FermatAut> {
    (0..648usize).prop_map(|i| auts()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn embedding_is_homomorphism(g in aut(), h in aut()) {
        let m = marking();
        prop_assert_eq!(m.embed(&g.compose(&h)).unwrap(), m.embed(&g).unwrap().compose(&m.embed(&h).unwrap()));
    }

    #[test]
    fn embedded_elements_are_isometries(g in aut()) {
        let w = marking().embed(&g).unwrap();
        prop_assert!(w.matrix().preserves_pairing());
        prop_assert!(w.matrix().fixes_canonical_class());
        prop_assert!(we6().contains(w.perm()));
    }

    #[test]
    fn eigen_type_scalar_invariant(g in aut(), k in 0i64..3) {
        let e = g.exponents().map(|x| x + k);
        prop_assert_eq!(classify_eigen_exponents(&monomial_eigen_exponents(g.sigma, e)), g.eigen_type());
    }

    #[test]
    fn orders_agree(g in aut()) {
        prop_assert_eq!(g.order() as u64, marking().embed(&g).unwrap().order());
    }

    #[test]
    fn incidence_preserved_by_automorphisms(g in aut(), i in 0..NUM_LINES, j in 0..NUM_LINES) {
        prop_assume!(i != j);
        let (a, b) = (FermatLine::from_index(i), FermatLine::from_index(j));
        let meets = cubic27::fermat::lines_meet(&a, &b);
        prop_assert_eq!(cubic27::fermat::lines_meet(&g.apply_line(&a), &g.apply_line(&b)), meets);
    }
}

#[test]
fn marked_classes_pair_like_lines() {
    let m = marking();
    for x in 0..NUM_LINES {
        let v = line(m.class_of(&FermatLine::from_index(x)).index()).vector;
        assert_eq!(v.square(), -1);
        assert_eq!(pairing(&v, &canonical_class()), -1);
    }
}

#[test]
fn kernel_is_trivial() {
    let m = marking();
    let ids: Vec<&FermatAut> = auts().iter().filter(|g| m.embed(g).unwrap().is_identity()).collect();
    assert_eq!(ids, vec![&FermatAut::identity()]);
    assert_eq!(embedded_group(m).unwrap().order(), 648);
}

#[test]
fn every_sixer_choice_gives_conjugate_embedding() {
    // two markings differ by an element of W(E6)
    let m1 = marking();
    let s = cubic27::fermat::a2_census().unwrap()[0];
    let m2 = adapted_marking(&s).unwrap();
    let images: Vec<usize> = (0..NUM_LINES)
        .map(|c| m2.class_of(&m1.line_of(LineTag::from_index(c))).index())
        .collect();
    let t = Perm::from_images(&images).unwrap();
    assert!(WeylElem::from_perm(t.clone()).is_ok());
    for g in auts().iter().step_by(13) {
        let w1 = m1.embed(g).unwrap();
        let w2 = m2.embed(g).unwrap();
        assert_eq!(w1.perm().conjugate_by(&t), *w2.perm());
    }
}

#[test]
fn type_census_on_the_fermat_side() {
    let m = marking();
    let mut counts = [0usize; 3];
    for g in auts() {
        let t = g.eigen_type();
        assert_eq!(t, carter_type(&m.embed(g).unwrap()));
        counts[match t {
            CarterType::A2 => 0,
            CarterType::A2xA2 => 1,
            CarterType::Other => 2,
        }] += 1;
    }
    assert_eq!(counts[0], 6);
    assert_eq!(counts.iter().sum::<usize>(), 648);
}

#[test]
fn sylow_subgroups_coincide() {
    let r = verify_sylow_lemma().unwrap();
    assert_eq!(r.class_size, 240);
    assert_eq!(r.centralizer_order, 216);
    assert_eq!(r.sylow_order, 27);
    assert_eq!(r.sylow_rank, Some(3));
    assert_eq!(r.fermat_centralizer_order, 108);
    assert_eq!(r.fermat_sylow_order, 27);
    assert!(r.coincide);
    assert!(r.r_in_sylow);
}

#[test]
fn lattice_graph_matches_pairing() {
    let g = IncidenceGraph::new();
    for i in 0..NUM_LINES {
        for j in 0..NUM_LINES {
            if i != j {
                assert_eq!(g.meets(i, j), pairing(&line(i).vector, &line(j).vector) == 1);
            }
        }
    }
    assert!(element_b().perm().order() == 3);
}
