use std::fmt;

use super::aut::{a2_census, fermat_aut_group, FermatAut};
use super::lines::FermatLine;
use super::incidence;
use crate::error::{Error, Result};
use crate::permgroup::{Perm, PermGroup};
use crate::piclattice::{IncidenceGraph, LineTag, NUM_LINES};
use crate::weyl::{element_b, WeylElem};

/// Incidence-preserving bijection from the Fermat lines to the abstract
/// line classes, both taken by index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Marking {
    to_class: [usize; NUM_LINES],
    to_line: [usize; NUM_LINES],
    sixer: [usize; 6],
}

impl Marking {
    /// Sends `sixer[i]` to `Eᵢ₊₁` and names every other line by which
    /// members of the sixer it meets: five of them for `Qᵢ`, two for `Lᵢⱼ`.
    pub fn from_sixer(sixer: [usize; 6]) -> Result<Self> {
        let adj = incidence();
        for (k, &a) in sixer.iter().enumerate() {
            if sixer[k + 1..].iter().any(|&b| b == a || adj[a][b]) {
                return Err(Error::NotASixer);
            }
        }
        let mut to_class = [usize::MAX; NUM_LINES];
        for (i, &s) in sixer.iter().enumerate() {
            to_class[s] = LineTag::E(i as u8).index();
        }
        for x in 0..NUM_LINES {
            if sixer.contains(&x) {
                continue;
            }
            let met: Vec<usize> = (0..6).filter(|&i| adj[x][sixer[i]]).collect();
            let tag = match met.len() {
                5 => LineTag::Q((0..6).find(|i| !met.contains(i)).unwrap() as u8),
                2 => LineTag::l(met[0], met[1]),
                n => return Err(Error::Marking(format!("line {} meets {n} lines of the sixer", FermatLine::from_index(x)))),
            };
            to_class[x] = tag.index();
        }
        let mut to_line = [usize::MAX; NUM_LINES];
        for (x, &c) in to_class.iter().enumerate() {
            if to_line[c] != usize::MAX {
                return Err(Error::Marking(format!("class {} assigned twice", LineTag::from_index(c))));
            }
            to_line[c] = x;
        }
        let m = Self { to_class, to_line, sixer };
        m.verify()?;
        Ok(m)
    }

    /// Checks all 351 pairs: Fermat lines meet iff their classes pair to 1.
    pub fn verify(&self) -> Result<()> {
        let adj = incidence();
        let graph = IncidenceGraph::new();
        for i in 0..NUM_LINES {
            for j in i + 1..NUM_LINES {
                if adj[i][j] != graph.meets(self.to_class[i], self.to_class[j]) {
                    return Err(Error::Marking(format!(
                        "incidence differs on {} and {}",
                        FermatLine::from_index(i),
                        FermatLine::from_index(j)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn sixer(&self) -> [FermatLine; 6] {
        self.sixer.map(FermatLine::from_index)
    }

    pub fn class_of(&self, line: &FermatLine) -> LineTag {
        LineTag::from_index(self.to_class[line.index()])
    }

    pub fn line_of(&self, tag: LineTag) -> FermatLine {
        FermatLine::from_index(self.to_line[tag.index()])
    }

    /// Transports the line permutation of `g` to the abstract classes.
    pub fn embed(&self, g: &FermatAut) -> Result<WeylElem> {
        let p = g.line_perm();
        let images: Vec<usize> = (0..NUM_LINES).map(|c| self.to_class[p.apply(self.to_line[c])]).collect();
        WeylElem::from_perm(Perm::from_images(&images)?)
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.to_line.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={}", LineTag::from_index(i), FermatLine::from_index(*c))?;
        }
        Ok(())
    }
}

/// Lowest-index sixer of Fermat lines, extended to a marking.
pub fn find_marking() -> Result<Marking> {
    let adj = incidence();
    let mut chosen = Vec::with_capacity(6);
    if extend_sixer(adj, &mut chosen, 0) {
        Marking::from_sixer(chosen.try_into().unwrap())
    } else {
        Err(Error::NotASixer)
    }
}

fn extend_sixer(adj: &[[bool; NUM_LINES]; NUM_LINES], chosen: &mut Vec<usize>, from: usize) -> bool {
    if chosen.len() == 6 {
        return true;
    }
    for x in from..NUM_LINES {
        if chosen.iter().all(|&c| !adj[c][x]) {
            chosen.push(x);
            if extend_sixer(adj, chosen, x + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// A marking under which `s` becomes `b`: `s` fixes the first three sixer
/// lines and cycles the last three. Requires `s` to have such a sixer.
pub fn adapted_marking(s: &FermatAut) -> Result<Marking> {
    let adj = incidence();
    let p = s.line_perm();
    let fixed: Vec<usize> = (0..NUM_LINES).filter(|&x| p.apply(x) == x).collect();
    let skew = |a: usize, b: usize| a != b && !adj[a][b];
    for (i, &a) in fixed.iter().enumerate() {
        for (j, &b) in fixed.iter().enumerate().skip(i + 1) {
            if !skew(a, b) {
                continue;
            }
            for &c in &fixed[j + 1..] {
                if !skew(a, c) || !skew(b, c) {
                    continue;
                }
                for d in 0..NUM_LINES {
                    let e = p.apply(d);
                    let f = p.apply(e);
                    if p.apply(f) != d || d == e {
                        continue;
                    }
                    let six = [a, b, c, d, e, f];
                    if (0..6).all(|u| (u + 1..6).all(|v| skew(six[u], six[v]))) {
                        let m = Marking::from_sixer(six)?;
                        if m.embed(s)?.perm() != element_b().perm() {
                            return Err(Error::Marking("adapted marking does not send s to b".into()));
                        }
                        return Ok(m);
                    }
                }
            }
        }
    }
    Err(Error::Marking(format!("{s} fixes no sixer of the required shape")))
}

/// `embed` as a free function.
pub fn embed_aut(m: &Marking, g: &FermatAut) -> Result<WeylElem> {
    m.embed(g)
}

/// Image of all 648 automorphisms as a permutation group on the classes,
/// checked to be injective.
pub fn embedded_group(m: &Marking) -> Result<PermGroup> {
    let perms: Vec<Perm> = fermat_aut_group().iter().map(|g| m.embed(g).map(|w| w.perm().clone())).collect::<Result<_>>()?;
    let group = PermGroup::closure(NUM_LINES, &perms)?;
    if group.order() != perms.len() {
        return Err(Error::Marking(format!("embedding is not injective: image has order {}", group.order())));
    }
    Ok(group)
}

/// Centralizer of `b` inside the embedded automorphism group, where the
/// marking is adapted so that the first `A₂` automorphism maps to `b`.
pub fn centralizer_of_b() -> Result<PermGroup> {
    let s = a2_census()?[0];
    let m = adapted_marking(&s)?;
    let group = embedded_group(&m)?;
    group.centralizer(element_b().perm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{carter_type, we6, CarterType};

    #[test]
    fn marking_is_isomorphism() {
        let m = find_marking().unwrap();
        m.verify().unwrap();
        for (i, l) in m.sixer().iter().enumerate() {
            assert_eq!(m.class_of(l), LineTag::E(i as u8));
        }
        for x in 0..NUM_LINES {
            let l = FermatLine::from_index(x);
            assert_eq!(m.line_of(m.class_of(&l)), l);
        }
    }

    #[test]
    fn embedding_is_injective_homomorphism() {
        let m = find_marking().unwrap();
        let auts = fermat_aut_group();
        assert!(m.embed(&FermatAut::identity()).unwrap().is_identity());
        let images: Vec<WeylElem> = auts.iter().map(|g| m.embed(g).unwrap()).collect();
        for (g, wg) in auts.iter().zip(&images) {
            assert!(we6().contains(wg.perm()));
            for (h, wh) in auts.iter().zip(&images).step_by(7) {
                assert_eq!(m.embed(&g.compose(h)).unwrap(), wg.compose(wh));
            }
        }
        assert_eq!(embedded_group(&m).unwrap().order(), 648);
    }

    #[test]
    fn eigen_type_matches_carter_type() {
        let m = find_marking().unwrap();
        for g in fermat_aut_group() {
            assert_eq!(g.eigen_type(), carter_type(&m.embed(&g).unwrap()), "{g}");
        }
    }

    #[test]
    fn a2_span_is_diagonal_subgroup() {
        let m = find_marking().unwrap();
        let group = embedded_group(&m).unwrap();
        let images: Vec<Perm> = a2_census().unwrap().iter().map(|g| m.embed(g).unwrap().perm().clone()).collect();
        let span = group.subgroup_generated(&images).unwrap();
        // exponent vectors (1,1,0), (1,0,1), (0,1,1) have determinant 2 mod 3
        let det = |m: [[i64; 3]; 3]| {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        };
        assert_eq!(det([[1, 1, 0], [1, 0, 1], [0, 1, 1]]).rem_euclid(3), 1);
        assert_eq!(span.order(), 27);
        assert_eq!(span.is_elementary_abelian_3(), Some(3));
        let diagonal: Vec<Perm> = fermat_aut_group()
            .iter()
            .filter(|g| g.sigma == [0, 1, 2, 3])
            .map(|g| m.embed(g).unwrap().perm().clone())
            .collect();
        assert_eq!(span.elements(), group.subgroup_generated(&diagonal).unwrap().elements());
        for w in &images {
            assert_eq!(carter_type(&WeylElem::from_perm(w.clone()).unwrap()), CarterType::A2);
        }
    }

    #[test]
    fn adapted_marking_and_centralizer() {
        let s = a2_census().unwrap()[0];
        let m = adapted_marking(&s).unwrap();
        assert_eq!(m.embed(&s).unwrap().perm(), element_b().perm());
        let cent = centralizer_of_b().unwrap();
        assert_eq!(cent.order(), 108);
        let syl = cent.sylow3_unique().unwrap();
        assert_eq!(syl.order(), 27);
        assert!(syl.is_subgroup_of(&we6().centralizer(element_b().perm()).unwrap()));
    }

    #[test]
    fn rejects_non_sixer() {
        let adj = incidence();
        let (a, b) = (0..NUM_LINES).flat_map(|a| (0..NUM_LINES).map(move |b| (a, b))).find(|&(a, b)| adj[a][b]).unwrap();
        let m = find_marking().unwrap();
        let mut six = m.sixer.to_vec();
        six[0] = a;
        six[1] = b;
        assert_eq!(Marking::from_sixer(six.try_into().unwrap()), Err(Error::NotASixer));
    }
}
