//! Semidirect products `AφB`, their sections, and the second factors they
//! induce from unit-valued 1-cocycles.
//!
//! The carrier is `A × B` in row-major order: `(a, b)` has index `a·|B| + b`.

use crate::action::MonoidAction;
use crate::cohomology::{h1, z1, Cocycle1};
use crate::descent::{DescentCocycle, Side};
use crate::error::{AlgebraError, Result};
use crate::factorization::{try_factorization, Factorization};
use crate::groupoid::{groupoid_components, CohomologyClasses};
use crate::map::{enumerate_homs, ElementMap};
use crate::monoid::FiniteMonoid;
use crate::submonoid::SubMonoid;

#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    product: FiniteMonoid,
    action: MonoidAction,
    first: SubMonoid,
    second: SubMonoid,
    embed_a: ElementMap,
    embed_b: ElementMap,
    proj_a: ElementMap,
    proj_b: ElementMap,
}

impl SemidirectProduct {
    /// `(a1, b1)(a2, b2) = (a1·(b1 ⋆ a2), b1·b2)`.
    pub fn new(a: &FiniteMonoid, action: &MonoidAction, b: &FiniteMonoid) -> Result<Self> {
        if action.acted() != a || action.actor() != b {
            return Err(AlgebraError::ActionMismatch);
        }
        let (na, nb) = (a.size(), b.size());
        let mut table = Vec::with_capacity(na * nb * na * nb);
        for a1 in a.elements() {
            for b1 in b.elements() {
                for a2 in a.elements() {
                    for b2 in b.elements() {
                        table.push(a.mul(a1, action.act(b1, a2)) * nb + b.mul(b1, b2));
                    }
                }
            }
        }
        let labels = a
            .elements()
            .flat_map(|x| b.elements().map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
            .collect();
        let name = format!("{}x{}", a.name().unwrap_or("A"), b.name().unwrap_or("B"));
        let product = FiniteMonoid::from_flat(na * nb, table, Some(labels))
            .map_err(|e| AlgebraError::InternalInconsistency(format!("semidirect table: {e}")))?
            .with_name(name);
        let (ea, eb) = (a.identity(), b.identity());
        let first = SubMonoid::from_sorted_unchecked(&product, a.elements().map(|x| x * nb + eb).collect());
        let second = SubMonoid::from_sorted_unchecked(&product, b.elements().map(|y| ea * nb + y).collect());
        let (wa, wb, wp) = (SubMonoid::whole(a), SubMonoid::whole(b), SubMonoid::whole(&product));
        let embed_a = ElementMap::new_unchecked(&wa, &wp, first.members().to_vec());
        let embed_b = ElementMap::new_unchecked(&wb, &wp, second.members().to_vec());
        let proj_a = ElementMap::new_unchecked(&wp, &wa, product.elements().map(|x| x / nb).collect());
        let proj_b = ElementMap::new_unchecked(&wp, &wb, product.elements().map(|x| x % nb).collect());
        Ok(SemidirectProduct { product, action: action.clone(), first, second, embed_a, embed_b, proj_a, proj_b })
    }

    pub fn product(&self) -> &FiniteMonoid {
        &self.product
    }

    pub fn action(&self) -> &MonoidAction {
        &self.action
    }

    /// `j_A(A)`.
    pub fn first(&self) -> &SubMonoid {
        &self.first
    }

    /// `j_B(B)`.
    pub fn second(&self) -> &SubMonoid {
        &self.second
    }

    pub fn embed_a(&self) -> &ElementMap {
        &self.embed_a
    }

    pub fn embed_b(&self) -> &ElementMap {
        &self.embed_b
    }

    pub fn proj_a(&self) -> &ElementMap {
        &self.proj_a
    }

    pub fn proj_b(&self) -> &ElementMap {
        &self.proj_b
    }

    pub fn pair(&self, a: usize, b: usize) -> usize {
        a * self.action.actor().size() + b
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        let nb = self.action.actor().size();
        (x / nb, x % nb)
    }

    /// `(j_A(A), j_B(B))` as a factorization of the product.
    pub fn factorization(&self) -> Result<Factorization> {
        try_factorization(&self.product, &self.first, &self.second)?
            .ok_or_else(|| AlgebraError::InternalInconsistency("(A, B) does not factorize AφB".into()))
    }
}

/// Sections of `p_B` matched against `Z¹` and `H¹`.
#[derive(Clone, Debug)]
pub struct SectionsReport {
    /// Homomorphisms `f: B → AφB` with `p_B ∘ f = id`, lexicographic.
    pub sections: Vec<ElementMap>,
    pub cocycles: Vec<Cocycle1>,
    /// Index of `b ↦ χ(b)·b` in `sections`, per cocycle.
    pub section_of_cocycle: Vec<Option<usize>>,
    /// Index of `p_A ∘ f` in `cocycles`, per section.
    pub cocycle_of_section: Vec<Option<usize>>,
    /// Sections modulo conjugation by `j_A(U(A))`.
    pub section_classes: CohomologyClasses<ElementMap>,
    pub cohomology: CohomologyClasses<Cocycle1>,
}

impl SectionsReport {
    /// Both correspondences are total and mutually inverse.
    pub fn is_bijective(&self) -> bool {
        self.sections.len() == self.cocycles.len()
            && self
                .section_of_cocycle
                .iter()
                .enumerate()
                .all(|(i, s)| s.is_some_and(|s| self.cocycle_of_section[s] == Some(i)))
    }

    /// The section classes and the `H¹` classes induce the same partition.
    pub fn classes_match(&self) -> bool {
        if !self.is_bijective() || self.section_classes.num_classes() != self.cohomology.num_classes() {
            return false;
        }
        let n = self.cocycles.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let si = self.section_of_cocycle[i].unwrap();
                let sj = self.section_of_cocycle[j].unwrap();
                (self.cohomology.class_of[i] == self.cohomology.class_of[j])
                    == (self.section_classes.class_of[si] == self.section_classes.class_of[sj])
            })
        })
    }
}

/// Enumerates sections by a homomorphism scan and cocycles by the cocycle
/// search, then relates them.
pub fn sections(sd: &SemidirectProduct) -> Result<SectionsReport> {
    let act = &sd.action;
    let b = act.actor();
    let p = &sd.product;
    let wb = SubMonoid::whole(b);
    let sections: Vec<ElementMap> = enumerate_homs(&wb, &SubMonoid::whole(p))?
        .into_iter()
        .filter(|f| b.elements().all(|y| sd.split(f.apply(y)).1 == y))
        .collect();
    let cocycles = z1(act, false)?;
    let section_of_cocycle = cocycles
        .iter()
        .map(|chi| {
            let values: Vec<usize> = b.elements().map(|y| sd.pair(chi.apply(y), y)).collect();
            sections.iter().position(|f| f.values() == values.as_slice())
        })
        .collect();
    let cocycle_of_section = sections
        .iter()
        .map(|f| {
            let values: Vec<usize> = b.elements().map(|y| sd.split(f.apply(y)).0).collect();
            cocycles.iter().position(|c| c.values() == values.as_slice())
        })
        .collect();
    let acting = sd.first.units();
    let section_classes = CohomologyClasses::from_groupoid(groupoid_components(sections.clone(), &acting, |g, f| {
        let inv = p.inverse(g).ok_or(AlgebraError::NotInvertible(g))?;
        ElementMap::from_fn(f.domain(), f.codomain(), |y| p.mul(p.mul(g, f.apply(y)), inv))
    })?);
    Ok(SectionsReport {
        sections,
        cocycles,
        section_of_cocycle,
        cocycle_of_section,
        section_classes,
        cohomology: h1(act, false)?,
    })
}

/// `{χ(b)·b : b ∈ B}` for a unit-valued cocycle. Cross-checked against the
/// kernel of [`complement_cocycle`].
pub fn fac_from_z1(sd: &SemidirectProduct, chi: &Cocycle1) -> Result<SubMonoid> {
    let a = sd.action.acted();
    if let Some(y) = sd.action.actor().elements().find(|&y| !a.is_invertible(chi.apply(y))) {
        return Err(AlgebraError::NotUnitValued(y));
    }
    let members: Vec<usize> = sd.action.actor().elements().map(|y| sd.pair(chi.apply(y), y)).collect();
    let sub = SubMonoid::new(&sd.product, members)
        .map_err(|e| AlgebraError::InternalInconsistency(format!("{{χ(b)b}} is not a submonoid: {e}")))?;
    let kernel = crate::descent::cocycle_kernel(&complement_cocycle(sd, chi)?);
    if kernel != sub {
        return Err(AlgebraError::InternalInconsistency(format!(
            "{{χ(b)b}} = {:?} but the complement kernel is {:?}",
            sub.members(),
            kernel.members()
        )));
    }
    Ok(sub)
}

/// The left cocycle `(a, b) ↦ a·χ(b)⁻¹` of `AφB` with values in `j_A(A)`.
pub fn complement_cocycle(sd: &SemidirectProduct, chi: &Cocycle1) -> Result<DescentCocycle> {
    let a = sd.action.acted();
    let eb = sd.action.actor().identity();
    let values = sd
        .product
        .elements()
        .map(|x| {
            let (u, y) = sd.split(x);
            let inv = a.inverse(chi.apply(y)).ok_or(AlgebraError::NotUnitValued(y))?;
            Ok(sd.pair(a.mul(u, inv), eb))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = ElementMap::new(&SubMonoid::whole(&sd.product), &sd.first, values)?;
    DescentCocycle::new(map, Side::Left)
        .map_err(|e| AlgebraError::InternalInconsistency(format!("complement map: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::factorization::fac_over;
    use crate::map::find_isomorphism;

    #[test]
    fn trivial_action_is_direct_product() {
        let b2 = catalog::b2();
        let c2 = catalog::cyclic(2);
        let sd = SemidirectProduct::new(&b2, &MonoidAction::trivial(&c2, &b2), &c2).unwrap();
        assert_eq!(sd.product(), &catalog::b2_times_c2());
        assert!(sd.proj_b().is_homomorphism());
        sd.factorization().unwrap();
    }

    #[test]
    fn inversion_gives_s3() {
        let s3 = catalog::symmetric3();
        let m = catalog::c3_semidirect_c2();
        assert!(find_isomorphism(&m, &s3).is_some());
        let inv = catalog::inversion_action();
        let sd = SemidirectProduct::new(inv.acted(), &inv, inv.actor()).unwrap();
        assert!(sd.proj_b().is_homomorphism());
        assert!(!sd.proj_a().is_homomorphism());
        assert_eq!(sd.embed_a().values(), &[0, 2, 4]);
        assert_eq!(sd.embed_b().values(), &[0, 1]);
    }

    #[test]
    fn mismatched_action() {
        let inv = catalog::inversion_action();
        assert_eq!(
            SemidirectProduct::new(&catalog::cyclic(4), &inv, inv.actor()).unwrap_err(),
            AlgebraError::ActionMismatch
        );
    }

    #[test]
    fn sections_of_inversion_product() {
        let inv = catalog::inversion_action();
        let sd = SemidirectProduct::new(inv.acted(), &inv, inv.actor()).unwrap();
        let rep = sections(&sd).unwrap();
        assert_eq!(rep.sections.len(), 3);
        assert_eq!(rep.section_classes.num_classes(), 1);
        assert!(rep.is_bijective());
        assert!(rep.classes_match());
        // j_B corresponds to the zero cocycle.
        let zero = rep.cocycles.iter().position(|c| c == &Cocycle1::zero(&inv)).unwrap();
        assert_eq!(rep.sections[rep.section_of_cocycle[zero].unwrap()].values(), sd.embed_b().values());
    }

    #[test]
    fn trivial_action_sections_are_homs() {
        let c2 = catalog::cyclic(2);
        let s3 = catalog::symmetric3();
        let sd = SemidirectProduct::new(&s3, &MonoidAction::trivial(&c2, &s3), &c2).unwrap();
        let rep = sections(&sd).unwrap();
        let homs = enumerate_homs(&SubMonoid::whole(&c2), &SubMonoid::whole(&s3)).unwrap();
        assert_eq!(rep.sections.len(), homs.len());
        assert!(rep.is_bijective() && rep.classes_match());
    }

    #[test]
    fn complements_from_cocycles() {
        let inv = catalog::inversion_action();
        let sd = SemidirectProduct::new(inv.acted(), &inv, inv.actor()).unwrap();
        let zs = z1(&inv, true).unwrap();
        let mut subs: Vec<SubMonoid> = zs.iter().map(|c| fac_from_z1(&sd, c).unwrap()).collect();
        assert_eq!(fac_from_z1(&sd, &Cocycle1::zero(&inv)).unwrap(), *sd.second());
        // χ(g) = a gives {(e,e), (a,g)}.
        let chi = Cocycle1::new(&inv, vec![0, 1]).unwrap();
        assert_eq!(fac_from_z1(&sd, &chi).unwrap().members(), &[sd.pair(0, 0), sd.pair(1, 1)]);
        subs.sort();
        subs.dedup();
        assert_eq!(subs, fac_over(sd.product(), sd.first()).unwrap());
    }

    #[test]
    fn non_unit_cocycle_rejected() {
        // B2 acting trivially on B2: χ = id is a homomorphism, hence a cocycle.
        let b2 = catalog::b2();
        let t = MonoidAction::trivial(&b2, &b2);
        let sd = SemidirectProduct::new(&b2, &t, &b2).unwrap();
        let chi = Cocycle1::new(&t, vec![0, 1]).unwrap();
        assert_eq!(fac_from_z1(&sd, &chi).unwrap_err(), AlgebraError::NotUnitValued(1));
    }
}
