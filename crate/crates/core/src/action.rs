//! Left actions `⋆: B × A → A` of a monoid on a monoid by endomorphisms.

use std::fmt;

use crate::endomorphism::{endomorphism_monoid, EndomorphismMonoid};
use crate::error::{ActionAxiom, AlgebraError, Result};
use crate::map::{enumerate_homs, ElementMap};
use crate::monoid::FiniteMonoid;
use crate::submonoid::SubMonoid;

/// A validated action of `actor` (B) on `acted` (A).
#[derive(Clone, PartialEq, Eq)]
pub struct MonoidAction {
    actor: FiniteMonoid,
    acted: FiniteMonoid,
    /// `star[b * |A| + a] = b ⋆ a`.
    star: Vec<usize>,
}

impl MonoidAction {
    /// Validates a `|B| × |A|` table against (A1)–(A4).
    pub fn new(actor: &FiniteMonoid, acted: &FiniteMonoid, star: &[Vec<usize>]) -> Result<Self> {
        if star.len() != actor.size() {
            return Err(AlgebraError::NotAMap(format!(
                "star table has {} rows, actor has {} elements",
                star.len(),
                actor.size()
            )));
        }
        let mut flat = Vec::with_capacity(actor.size() * acted.size());
        for (b, row) in star.iter().enumerate() {
            if row.len() != acted.size() {
                return Err(AlgebraError::NotAMap(format!("star row {b} has length {}", row.len())));
            }
            for &v in row {
                acted.check_element(v)?;
                flat.push(v);
            }
        }
        let act = MonoidAction { actor: actor.clone(), acted: acted.clone(), star: flat };
        act.check_axioms()?;
        Ok(act)
    }

    /// Tabulates `b ⋆ a = φ(b)(a)` for a homomorphism `φ: B → End(A)`.
    pub fn from_end_hom(actor: &FiniteMonoid, end: &EndomorphismMonoid, phi: &ElementMap) -> Result<Self> {
        if phi.domain().parent() != actor || !phi.domain().is_whole() || phi.codomain().parent() != &end.monoid {
            return Err(AlgebraError::ActionMismatch);
        }
        if let Some(v) = phi.homomorphism_violation() {
            return Err(AlgebraError::NotAHomomorphism(v));
        }
        let acted = end.maps[0].domain().parent().clone();
        let rows: Vec<Vec<usize>> = actor
            .elements()
            .map(|b| end.maps[phi.apply(b)].values().to_vec())
            .collect();
        Self::new(actor, &acted, &rows)
    }

    /// `b ⋆ a = a`.
    pub fn trivial(actor: &FiniteMonoid, acted: &FiniteMonoid) -> Self {
        let star = actor.elements().flat_map(|_| acted.elements()).collect();
        MonoidAction { actor: actor.clone(), acted: acted.clone(), star }
    }

    fn check_axioms(&self) -> Result<()> {
        let (b, a) = (&self.actor, &self.acted);
        let fail = |axiom, witness| Err(AlgebraError::AxiomViolation { axiom, witness });
        if let Some(x) = a.elements().find(|&x| self.act(b.identity(), x) != x) {
            return fail(ActionAxiom::A1, vec![x]);
        }
        for y1 in b.elements() {
            for y2 in b.elements() {
                for x in a.elements() {
                    if self.act(b.mul(y1, y2), x) != self.act(y1, self.act(y2, x)) {
                        return fail(ActionAxiom::A2, vec![y1, y2, x]);
                    }
                }
            }
        }
        if let Some(y) = b.elements().find(|&y| self.act(y, a.identity()) != a.identity()) {
            return fail(ActionAxiom::A3, vec![y]);
        }
        for y in b.elements() {
            for x1 in a.elements() {
                for x2 in a.elements() {
                    if self.act(y, a.mul(x1, x2)) != a.mul(self.act(y, x1), self.act(y, x2)) {
                        return fail(ActionAxiom::A4, vec![y, x1, x2]);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn actor(&self) -> &FiniteMonoid {
        &self.actor
    }

    pub fn acted(&self) -> &FiniteMonoid {
        &self.acted
    }

    #[inline]
    pub fn act(&self, b: usize, a: usize) -> usize {
        self.star[b * self.acted.size() + a]
    }

    pub fn star_rows(&self) -> Vec<Vec<usize>> {
        self.star.chunks(self.acted.size()).map(|r| r.to_vec()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.actor.elements().all(|b| self.acted.elements().all(|a| self.act(b, a) == a))
    }

    /// The same table acting on `A^op`.
    pub fn opposite(&self) -> MonoidAction {
        MonoidAction { actor: self.actor.clone(), acted: self.acted.opposite(), star: self.star.clone() }
    }

    /// `H⁰`: elements of `A` fixed by every `b`.
    pub fn h0(&self) -> SubMonoid {
        let members = self
            .acted
            .elements()
            .filter(|&a| self.actor.elements().all(|b| self.act(b, a) == a))
            .collect();
        SubMonoid::from_sorted_unchecked(&self.acted, members)
    }

    /// The homomorphism `B → End(A)` this action corresponds to.
    pub fn to_end_hom(&self, end: &EndomorphismMonoid) -> Result<ElementMap> {
        let whole_a = SubMonoid::whole(&self.acted);
        let whole_b = SubMonoid::whole(&self.actor);
        let values = self
            .actor
            .elements()
            .map(|b| {
                let f = ElementMap::new_unchecked(&whole_a, &whole_a, self.star_rows()[b].clone());
                end.index_of(&f).ok_or(AlgebraError::ActionMismatch)
            })
            .collect::<Result<Vec<_>>>()?;
        ElementMap::new(&whole_b, &SubMonoid::whole(&end.monoid), values)
    }
}

impl fmt::Debug for MonoidAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoidAction({:?})", self.star_rows())
    }
}

/// Every action of `b` on `a`, one per homomorphism `B → End(A)`, in the
/// order of those homomorphisms.
pub fn enumerate_actions(b: &FiniteMonoid, a: &FiniteMonoid) -> Result<Vec<MonoidAction>> {
    let end = endomorphism_monoid(a)?;
    let homs = enumerate_homs(&SubMonoid::whole(b), &SubMonoid::whole(&end.monoid))?;
    homs.iter().map(|phi| MonoidAction::from_end_hom(b, &end, phi)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_and_inversion_are_valid() {
        let c2 = catalog::cyclic(2);
        let c3 = catalog::cyclic(3);
        let t = MonoidAction::trivial(&c2, &c3);
        assert_eq!(MonoidAction::new(&c2, &c3, &t.star_rows()).unwrap(), t);
        let inv = catalog::inversion_action();
        assert_eq!(inv.act(1, 1), 2);
        assert!(!inv.is_trivial());
    }

    #[test]
    fn squaring_on_c4_fails() {
        // g ⋆ a = a² is an endomorphism of the abelian C4, so (A4) holds;
        // applying it twice gives a⁴ = e instead of e ⋆ a = a.
        let c2 = catalog::cyclic(2);
        let c4 = catalog::cyclic(4);
        let star = vec![vec![0, 1, 2, 3], vec![0, 2, 0, 2]];
        let err = MonoidAction::new(&c2, &c4, &star).unwrap_err();
        assert_eq!(err, AlgebraError::AxiomViolation { axiom: ActionAxiom::A2, witness: vec![1, 1, 1] });
    }

    #[test]
    fn axiom_witnesses() {
        let c2 = catalog::cyclic(2);
        let c3 = catalog::cyclic(3);
        let a1 = MonoidAction::new(&c2, &c3, &[vec![0, 2, 1], vec![0, 1, 2]]).unwrap_err();
        assert!(matches!(a1, AlgebraError::AxiomViolation { axiom: ActionAxiom::A1, .. }));
        let b2 = catalog::b2();
        let a3 = MonoidAction::new(&b2, &c3, &[vec![0, 1, 2], vec![1, 1, 1]]).unwrap_err();
        assert_eq!(a3, AlgebraError::AxiomViolation { axiom: ActionAxiom::A3, witness: vec![1] });
        // z ⋆ a = e is an action; an idempotent but non-multiplicative row
        // breaks (A4) only.
        assert!(MonoidAction::new(&b2, &c3, &[vec![0, 1, 2], vec![0, 0, 0]]).is_ok());
        let c4 = catalog::cyclic(4);
        let a4 = MonoidAction::new(&b2, &c4, &[vec![0, 1, 2, 3], vec![0, 1, 0, 1]]).unwrap_err();
        assert!(matches!(a4, AlgebraError::AxiomViolation { axiom: ActionAxiom::A4, .. }), "{a4:?}");
    }

    #[test]
    fn opposite_is_an_involution() {
        let inv = catalog::inversion_action();
        assert_eq!(inv.opposite().star_rows(), inv.star_rows());
        assert_eq!(inv.opposite().opposite(), inv);
        let lz = catalog::lz2_plus_one();
        let t = MonoidAction::trivial(&catalog::cyclic(2), &lz);
        let op = t.opposite();
        assert!(op.is_trivial());
        assert_eq!(op.acted(), &catalog::rz2_plus_one());
        assert!(MonoidAction::new(op.actor(), op.acted(), &op.star_rows()).is_ok());
    }

    #[test]
    fn fixed_points() {
        let inv = catalog::inversion_action();
        assert_eq!(inv.h0().members(), &[0]);
        let t = MonoidAction::trivial(&catalog::cyclic(2), &catalog::b2());
        assert!(t.h0().is_whole());
    }

    #[test]
    fn actions_correspond_to_end_homs() {
        let c2 = catalog::cyclic(2);
        let c3 = catalog::cyclic(3);
        let acts = enumerate_actions(&c2, &c3).unwrap();
        // g must go to an involutive endomorphism: identity or inversion.
        assert_eq!(acts.len(), 2);
        assert!(acts.contains(&catalog::inversion_action()));
        let end = endomorphism_monoid(&c3).unwrap();
        for act in &acts {
            let phi = act.to_end_hom(&end).unwrap();
            assert_eq!(&MonoidAction::from_end_hom(&c2, &end, &phi).unwrap(), act);
        }
    }
}
