use serde_json::{json, Value};

use cubic27::exact::{ratio, Rat};
use cubic27::fermat::{
    a2_census, embedded_group, fermat_aut_group, fermat_incidence, fermat_lines, find_marking, plane_actions_check,
    plane_marked_points, veronese_det, FermatAut,
};
use cubic27::fieldlemmas::{
    pgl2_diagonal_check, prime_orbit_check, prime_orbit_sweep, rad_cubic_classification, rep_lemma_check,
    symbol_algebra_check,
};
use cubic27::piclattice::{all_sixers, lines27, lines_by_equation, unique_transversal, IncidenceGraph, NUM_LINES};
use cubic27::weyl::{
    build_r, carter_census, carter_type, commutes_with_set_preservers, element_b, element_c, generate,
    set_preservers, verify_sylow_lemma, we6, R_IMAGES,
};
use cubic27::{CarterType, LineTag, Result, WeylElem};

use crate::Config;

pub type CheckFn = fn(&Config) -> Result<(bool, Value)>;

/// A registered check: id, a short description of the statement it
/// verifies, and the function running it.
pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    pub run: CheckFn,
}

pub const REGISTRY: &[Check] = &[
    Check { id: "rep-lemma", anchor: "diagonal (Z/3)^3 in GL4: determinant and rational-trace conditions", run: rep_lemma },
    Check { id: "rad-cubic", anchor: "cubes in Q(cbrt a) are rational only for c, c*x, c*x^2", run: rad_cubic },
    Check { id: "symbol-algebra", anchor: "degree-3 symbol algebra: xy = w yx, central simple, w-commutator", run: symbol_algebra },
    Check { id: "prime-orbit", anchor: "orbit of size 3 in (Z/p)* iff p = 1 mod 3", run: prime_orbit },
    Check { id: "plane-points", anchor: "six marked plane points in general position, actions of b and c", run: plane_points },
    Check { id: "no-common-fixed", anchor: "b and c have no common fixed point; lifts commute up to w", run: no_common_fixed },
    Check { id: "lines27", anchor: "27 lines in the lattice and on the Fermat cubic, incidence graphs", run: lines_27 },
    Check { id: "transversal", anchor: "five lines of a sixer have a unique common transversal", run: transversal },
    Check { id: "weyl-orders", anchor: "orders of W(A4), W(D5), W(E6)", run: weyl_orders },
    Check { id: "carter-class", anchor: "class of an A2 element in W(E6): size 240, centralizer 216", run: carter_class },
    Check { id: "build-r", anchor: "element r sending E1..E6 to Q1,Q2,Q3,L56,L46,L45", run: build_r_check },
    Check { id: "galois-commute", anchor: "r commutes with every element preserving {E1,E2,E3} and {E4,E5,E6}", run: galois_commute },
    Check { id: "z3-cubed", anchor: "<b,r> = (Z/3)^2 and <b,c,r> = (Z/3)^3 in W(E6)", run: z3_cubed },
    Check { id: "fermat-aut", anchor: "automorphisms of the Fermat cubic: (Z/3)^3 x| S4 of order 648", run: fermat_aut },
    Check { id: "a2-census", anchor: "six pairwise commuting A2 automorphisms of the Fermat cubic", run: a2_census_check },
    Check { id: "sylow-coincide", anchor: "Sylow 3-subgroups of both centralizers of b coincide", run: sylow_coincide },
    Check { id: "embed-consistency", anchor: "eigenvalue type of each automorphism equals its Carter type", run: embed_consistency },
    Check { id: "pgl2-diag", anchor: "diagonal cube-root classes in PGL2 form a group of order 3", run: pgl2_diag },
];

pub fn find(id: &str) -> Option<&'static Check> {
    REGISTRY.iter().find(|c| c.id == id)
}

fn rep_lemma(cfg: &Config) -> Result<(bool, Value)> {
    let r = rep_lemma_check(cfg.has_omega);
    let witness = json!({
        "cond1": r.cond1,
        "cond12": r.cond12,
        "witness_quad": r.witness.0,
        "witness_fails_cond2": r.witness_fails_cond2,
        "cond1_rank": r.cond1_rank,
        "largest_admissible_subgroup": r.largest_admissible_subgroup,
        "non_closure": r.non_closure.map(|(a, b)| [a.0, b.0]),
        "has_omega": r.has_omega,
    });
    Ok((r.passed(), witness))
}

fn rad_cubic(cfg: &Config) -> Result<(bool, Value)> {
    let alphas: [Rat; 3] = [ratio(2, 1), ratio(3, 5), ratio(-7, 1)];
    let mut ok = true;
    let mut runs = Vec::new();
    for (k, a) in alphas.iter().enumerate() {
        let r = rad_cubic_classification(a, cfg.samples, cfg.seed.wrapping_add(k as u64))?;
        ok &= r.passed();
        runs.push(json!({
            "alpha": a.to_string(),
            "samples": r.samples,
            "rational_cubes": r.rational_cubes,
            "mismatches": r.mismatches,
            "trace_failures": r.trace_failures,
            "formula_failures": r.formula_failures,
        }));
    }
    Ok((ok, Value::Array(runs)))
}

fn symbol_algebra(_: &Config) -> Result<(bool, Value)> {
    let params = [(ratio(2, 1), ratio(3, 1)), (ratio(-1, 7), ratio(5, 1)), (ratio(5, 1), ratio(2, 3))];
    let mut ok = true;
    let mut runs = Vec::new();
    for (a, b) in params {
        let r = symbol_algebra_check(a.clone(), b.clone())?;
        ok &= r.passed();
        runs.push(json!({
            "a": a.to_string(),
            "b": b.to_string(),
            "associative": r.associative,
            "center_dimension": r.center_dimension,
            "xyx^-1 = w y": r.conjugation_gives_omega_y,
            "projective_order": r.projective_order,
            "commutator_exponent": r.commutator_exponent,
        }));
    }
    Ok((ok, Value::Array(runs)))
}

fn prime_orbit(_: &Config) -> Result<(bool, Value)> {
    let sweep = prime_orbit_sweep();
    let examples = [(5, prime_orbit_check(5)?), (7, prime_orbit_check(7)?), (13, prime_orbit_check(13)?)];
    let ok = sweep.mismatches.is_empty() && examples == [(5, false), (7, true), (13, true)];
    Ok((ok, json!({ "primes": sweep.primes, "mismatches": sweep.mismatches, "examples": examples })))
}

fn plane_points(_: &Config) -> Result<(bool, Value)> {
    let pts = plane_marked_points()?;
    let r = plane_actions_check()?;
    let ok = r.b_fixes_p123 && r.b_cycles_p456 && r.c_fixes_p456 && r.c_cycles_p123 && r.group_order == 9;
    Ok((
        ok,
        json!({
            "points": pts.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "noncollinear_triples": 20,
            "veronese_det": veronese_det(&pts).to_string(),
            "b_fixes_p123": r.b_fixes_p123,
            "b_cycles_p456": r.b_cycles_p456,
            "c_fixes_p456": r.c_fixes_p456,
            "c_cycles_p123": r.c_cycles_p123,
            "group_order": r.group_order,
        }),
    ))
}

fn no_common_fixed(_: &Config) -> Result<(bool, Value)> {
    let r = plane_actions_check()?;
    let disjoint = r.b_fixed.iter().all(|p| !r.c_fixed.contains(p));
    let ok = disjoint && r.common_fixed_dim == 0 && r.commutator_exponent == Some(1);
    Ok((
        ok,
        json!({
            "b_fixed": r.b_fixed.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "c_fixed": r.c_fixed.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "common_fixed_dim": r.common_fixed_dim,
            "commutator": r.commutator_exponent.map(|k| format!("w^{k}")),
        }),
    ))
}

fn lines_27(_: &Config) -> Result<(bool, Value)> {
    let lattice = lines27();
    let mut by_eq = lines_by_equation();
    by_eq.sort();
    let mut by_tag: Vec<_> = lattice.iter().map(|l| l.vector).collect();
    by_tag.sort();
    let graph = IncidenceGraph::new();
    let lattice_regular = (0..NUM_LINES).all(|i| graph.degree(i) == 10);

    let fermat = fermat_lines();
    let on_surface = fermat.iter().all(|l| l.lies_on_fermat());
    let adj = fermat_incidence();
    let fermat_regular = adj.iter().all(|row| row.iter().filter(|&&m| m).count() == 10);
    let marking = find_marking()?;
    marking.verify()?;

    let ok = lattice.len() == 27 && by_eq == by_tag && lattice_regular && fermat.len() == 27 && on_surface && fermat_regular;
    Ok((
        ok,
        json!({
            "lattice_lines": lattice.len(),
            "lattice_by_equation": by_eq.len(),
            "fermat_lines": fermat.len(),
            "degree": 10,
            "marking_pairs_checked": NUM_LINES * (NUM_LINES - 1) / 2,
            "marking_sixer": marking.sixer().map(|l| l.to_string()),
        }),
    ))
}

fn transversal(_: &Config) -> Result<(bool, Value)> {
    let sixers = all_sixers();
    let mut checked = 0;
    for s in &sixers {
        for skip in 0..6 {
            let five: [usize; 5] = std::array::from_fn(|k| s[if k < skip { k } else { k + 1 }]);
            unique_transversal(&five)?;
            checked += 1;
        }
    }
    let example = unique_transversal(&[0, 1, 2, 3, 4].map(|i| LineTag::E(i).index()))?;
    let ok = sixers.len() == 72 && checked == 432 && example == LineTag::Q(5).index();
    Ok((ok, json!({ "sixers": sixers.len(), "five_subsets": checked, "E1..E5": LineTag::from_index(example).to_string() })))
}

fn weyl_orders(_: &Config) -> Result<(bool, Value)> {
    let a4 = generate(4)?.order();
    let d5 = generate(5)?.order();
    let e6 = we6().order();
    Ok(((a4, d5, e6) == (120, 1920, 51840), json!({ "A4": a4, "D5": d5, "E6": e6 })))
}

fn carter_class(_: &Config) -> Result<(bool, Value)> {
    let b = element_b();
    let w = we6();
    let class = w.conjugacy_class(b.perm())?.len();
    let cent = w.centralizer(b.perm())?;
    let sylow = cent.sylow3_unique()?;
    let (a2, a2a2) = carter_census();
    let ok = carter_type(&b) == CarterType::A2
        && class == 240
        && cent.order() == 216
        && sylow.order() == 27
        && sylow.is_elementary_abelian_3() == Some(3)
        && a2 == class;
    Ok((
        ok,
        json!({
            "b": b.to_string(),
            "type": carter_type(&b).to_string(),
            "class_size": class,
            "centralizer_order": cent.order(),
            "sylow_order": sylow.order(),
            "sylow_rank": sylow.is_elementary_abelian_3(),
            "census": { "A2": a2, "A2xA2": a2a2 },
        }),
    ))
}

fn build_r_check(_: &Config) -> Result<(bool, Value)> {
    let r = build_r()?;
    let images: Vec<String> = (0..6).map(|i| r.image_of_line(LineTag::E(i)).to_string()).collect();
    let expected: Vec<String> = R_IMAGES.iter().map(ToString::to_string).collect();
    let br = we6().subgroup_generated(&[element_b().perm().clone(), r.perm().clone()])?;
    let ok = r.order() == 3 && images == expected && br.order() == 9 && r.compose(&element_b()) == element_b().compose(&r);
    Ok((ok, json!({ "r": r.to_string(), "r^2": r.pow(2).to_string(), "order": r.order(), "<b,r>": br.order() })))
}

fn galois_commute(_: &Config) -> Result<(bool, Value)> {
    let r = build_r()?;
    let preservers = set_preservers();
    let commutes = commutes_with_set_preservers(&r);
    Ok((preservers.len() == 36 && commutes, json!({ "set_preservers": preservers.len(), "all_commute": commutes })))
}

fn z3_cubed(_: &Config) -> Result<(bool, Value)> {
    let w = we6();
    let (b, c, r) = (element_b(), element_c(), build_r()?);
    let br = w.subgroup_generated(&[b.perm().clone(), r.perm().clone()])?;
    let bcr = w.subgroup_generated(&[b.perm().clone(), c.perm().clone(), r.perm().clone()])?;
    let sylow = w.centralizer(b.perm())?.sylow3_unique()?;
    let ok = br.order() == 9
        && br.is_elementary_abelian_3() == Some(2)
        && bcr.order() == 27
        && bcr.is_elementary_abelian_3() == Some(3);
    Ok((
        ok,
        json!({
            "<b,r>": br.order(),
            "<b,c,r>": bcr.order(),
            "rank": bcr.is_elementary_abelian_3(),
            "equals_centralizer_sylow": bcr.elements() == sylow.elements(),
        }),
    ))
}

fn fermat_aut(_: &Config) -> Result<(bool, Value)> {
    let auts = fermat_aut_group();
    let preserving = auts.iter().filter(|g| g.preserves_fermat()).count();
    let h = FermatAut::permutation([0, 2, 3, 1]);
    let image = embedded_group(&find_marking()?)?;
    let ok = auts.len() == 648 && preserving == 648 && h.preserves_fermat() && image.order() == 648;
    Ok((ok, json!({ "order": auts.len(), "preserving": preserving, "embedded_order": image.order() })))
}

fn a2_census_check(_: &Config) -> Result<(bool, Value)> {
    let a2 = a2_census()?;
    let commuting = a2.iter().all(|g| a2.iter().all(|h| g.compose(h) == h.compose(g)));
    let patterns: Vec<[u8; 3]> = (1..3).flat_map(|a| [[a, a, 0], [a, 0, a], [0, a, a]]).collect();
    let diagonal = a2.iter().all(|g| g.sigma == [0, 1, 2, 3] && patterns.contains(&g.d));
    Ok((
        a2.len() == 6 && commuting && diagonal,
        json!({
            "count": a2.len(),
            "commuting": commuting,
            "elements": a2.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    ))
}

fn sylow_coincide(_: &Config) -> Result<(bool, Value)> {
    let r = verify_sylow_lemma()?;
    let ok = r.coincide && r.centralizer_order == 216 && r.fermat_centralizer_order == 108 && r.fermat_sylow_order == 27;
    Ok((
        ok,
        json!({
            "weyl_centralizer": r.centralizer_order,
            "weyl_sylow": r.sylow_order,
            "fermat_centralizer": r.fermat_centralizer_order,
            "fermat_sylow": r.fermat_sylow_order,
            "coincide": r.coincide,
            "r_in_sylow": r.r_in_sylow,
        }),
    ))
}

fn embed_consistency(_: &Config) -> Result<(bool, Value)> {
    let m = find_marking()?;
    let mut agree = 0;
    let mut counts = [0usize; 3];
    let mut order3_a2 = 0;
    for g in fermat_aut_group() {
        let w: WeylElem = m.embed(&g)?;
        let t = g.eigen_type();
        agree += (t == carter_type(&w)) as usize;
        counts[t as usize] += 1;
        let s4_three_cycle = g.d == [0; 3] && g.order() == 3;
        let gh = g.sigma == [0, 2, 3, 1] && g.d.iter().map(|&x| x as u32).sum::<u32>() % 3 == 0;
        if (s4_three_cycle || gh) && t != CarterType::A2xA2 {
            order3_a2 += 1;
        }
    }
    Ok((
        agree == 648 && order3_a2 == 0,
        json!({
            "agree": agree,
            "A2": counts[CarterType::A2 as usize],
            "A2xA2": counts[CarterType::A2xA2 as usize],
            "other": counts[CarterType::Other as usize],
            "misclassified_order3": order3_a2,
        }),
    ))
}

fn pgl2_diag(_: &Config) -> Result<(bool, Value)> {
    let r = pgl2_diagonal_check();
    Ok((
        r.passed(),
        json!({
            "classes": r.classes,
            "order_diag_1_w": r.order_diag_1_omega,
            "diag_w_w_trivial": r.scalar_is_identity,
        }),
    ))
}
