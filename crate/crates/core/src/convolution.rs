//! Inner actions `φκ(b)(a) = κ(b)·a·κ(b)⁻¹` defined by a unit-valued
//! homomorphism `κ: B → A`, and the convolution `(χ ∗ κ)(b) = χ(b)·κ(b)`
//! relating `Z¹_{φκ}(B, A)` to `Hom(B, A)`.

use crate::action::MonoidAction;
use crate::cohomology::{h1, Cocycle1};
use crate::error::{AlgebraError, Result};
use crate::groupoid::{groupoid_components, CohomologyClasses};
use crate::map::{enumerate_homs, ElementMap};
use crate::monoid::FiniteMonoid;
use crate::submonoid::SubMonoid;

#[derive(Clone, Debug)]
pub struct ConvolutionReport {
    pub action: MonoidAction,
    pub cohomology: CohomologyClasses<Cocycle1>,
    /// `Hom(B, A)` modulo conjugation by `U(A)`.
    pub hom_classes: CohomologyClasses<ElementMap>,
    /// Index in `hom_classes.objects` of `χ ∗ κ`, per cocycle.
    pub convolution: Vec<Option<usize>>,
}

impl ConvolutionReport {
    /// `χ ↦ χ ∗ κ` is a bijection `Z¹ → Hom` sending `0` to `κ`.
    pub fn is_pointed_bijection(&self) -> bool {
        let mut hit = vec![false; self.hom_classes.objects.len()];
        for c in &self.convolution {
            match c {
                Some(i) if !hit[*i] => hit[*i] = true,
                _ => return false,
            }
        }
        let zero = self.cohomology.base_point.expect("H1 is pointed");
        hit.iter().all(|&h| h) && self.convolution[zero] == self.hom_classes.base_point
    }

    /// The map on classes is well defined, injective and pointed.
    pub fn classes_correspond(&self) -> bool {
        if !self.is_pointed_bijection() || self.cohomology.num_classes() != self.hom_classes.num_classes() {
            return false;
        }
        let n = self.convolution.len();
        let class = |i: usize| self.hom_classes.class_of[self.convolution[i].unwrap()];
        (0..n).all(|i| (0..n).all(|j| (self.cohomology.class_of[i] == self.cohomology.class_of[j]) == (class(i) == class(j))))
    }
}

/// Builds `φκ`, enumerates `Z¹_{φκ}(B, A)` and `Hom(B, A)` independently and
/// matches them under convolution.
pub fn inner_action_and_convolution(b: &FiniteMonoid, a: &FiniteMonoid, kappa: &ElementMap) -> Result<ConvolutionReport> {
    let (wb, wa) = (SubMonoid::whole(b), SubMonoid::whole(a));
    if kappa.domain() != &wb || kappa.domain().parent() != b || kappa.codomain().parent() != a {
        return Err(AlgebraError::NotUnitValuedHom("κ must map B into A".into()));
    }
    if let Some(v) = kappa.homomorphism_violation() {
        return Err(AlgebraError::NotUnitValuedHom(v));
    }
    if let Some(y) = b.elements().find(|&y| !a.is_invertible(kappa.apply(y))) {
        return Err(AlgebraError::NotUnitValuedHom(format!("κ({y}) is not invertible")));
    }
    let star: Vec<Vec<usize>> = b
        .elements()
        .map(|y| {
            let k = kappa.apply(y);
            let inv = a.inverse(k).expect("checked above");
            a.elements().map(|x| a.mul(a.mul(k, x), inv)).collect()
        })
        .collect();
    let action = MonoidAction::new(b, a, &star)
        .map_err(|e| AlgebraError::InternalInconsistency(format!("inner action: {e}")))?;
    let cohomology = h1(&action, false)?;

    let homs = enumerate_homs(&wb, &wa)?;
    let units = a.elements().filter(|&x| a.is_invertible(x));
    let mut hom_classes = CohomologyClasses::from_groupoid(groupoid_components(homs, &SubMonoid::new(a, units)?, |g, f| {
        let inv = a.inverse(g).ok_or(AlgebraError::NotInvertible(g))?;
        ElementMap::from_fn(f.domain(), f.codomain(), |y| a.mul(a.mul(g, f.apply(y)), inv))
    })?);
    let kappa_whole = ElementMap::new(&wb, &wa, kappa.values().to_vec())?;
    if !hom_classes.set_base_point(&kappa_whole) {
        return Err(AlgebraError::InternalInconsistency("κ missing from Hom(B, A)".into()));
    }
    let convolution = cohomology
        .objects
        .iter()
        .map(|chi| {
            let values: Vec<usize> = b.elements().map(|y| a.mul(chi.apply(y), kappa.apply(y))).collect();
            hom_classes.objects.iter().position(|f| f.values() == values.as_slice())
        })
        .collect();
    Ok(ConvolutionReport { action, cohomology, hom_classes, convolution })
}
