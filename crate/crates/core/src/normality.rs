//! Normal submonoids, normal factorizations and split epimorphisms.

use crate::action::MonoidAction;
use crate::descent::{cocycle_kernel, fac_from_subgroup_cocycle, DescentCocycle, Side};
use crate::error::{AlgebraError, Result};
use crate::factorization::{try_factorization, Factorization};
use crate::map::{ElementMap, MonoidIso};
use crate::monoid::FiniteMonoid;
use crate::semidirect::SemidirectProduct;
use crate::submonoid::SubMonoid;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normality {
    /// `xN ⊆ Nx`
    Left,
    /// `Nx ⊆ xN`
    Right,
    Both,
}

/// Checks the requested inclusion for every `x ∈ xs`.
pub fn normality_check(m: &FiniteMonoid, n: &SubMonoid, xs: &[usize], side: Normality) -> bool {
    let coset = |x: usize, left: bool| -> Vec<bool> {
        let mut mask = vec![false; m.size()];
        for &k in n.members() {
            mask[if left { m.mul(x, k) } else { m.mul(k, x) }] = true;
        }
        mask
    };
    let within = |x: usize, left_sub: bool| {
        let small = coset(x, left_sub);
        let big = coset(x, !left_sub);
        small.iter().zip(&big).all(|(&s, &b)| !s || b)
    };
    xs.iter().all(|&x| match side {
        Normality::Left => within(x, true),
        Normality::Right => within(x, false),
        Normality::Both => within(x, true) && within(x, false),
    })
}

/// The semidirect presentation recovered from a left normal factorization.
#[derive(Clone, Debug)]
pub struct SemidirectPresentation {
    /// `b ⋆ a = l(ba)` on `A` and `B` reindexed by member position.
    pub action: MonoidAction,
    pub product: SemidirectProduct,
    /// `(a, b) ↦ ab`.
    pub iso: MonoidIso,
}

#[derive(Clone, Debug)]
pub struct NormalityReport {
    pub r_is_homomorphism: bool,
    pub left_normal: bool,
    pub semidirect: Option<SemidirectPresentation>,
    /// For `A` a group: whether `A` is left `M`-normal.
    pub left_m_normal: Option<bool>,
}

impl NormalityReport {
    pub fn conditions(&self) -> [bool; 3] {
        [self.r_is_homomorphism, self.left_normal, self.semidirect.is_some()]
    }

    pub fn all_hold(&self) -> bool {
        self.conditions().iter().all(|&c| c)
    }
}

/// Evaluates, for a factorization `(A, B)`: `r` is a homomorphism; `A` is
/// left `B`-normal; `b ⋆ a = l(ba)` is an action and `AφB → M` is an
/// isomorphism. The three must agree, and for a group `A` left `B`-normality
/// must agree with left `M`-normality.
pub fn factorization_normality_equivalences(f: &Factorization) -> Result<NormalityReport> {
    let m = f.parent();
    let (a, b) = (f.first(), f.second());
    let r_is_homomorphism = f.r().is_homomorphism();
    let left_normal = normality_check(m, a, b.members(), Normality::Left);
    let semidirect = semidirect_presentation(f)?;
    let left_m_normal = a
        .is_subgroup()
        .then(|| normality_check(m, a, &m.elements().collect::<Vec<_>>(), Normality::Left));
    let report = NormalityReport { r_is_homomorphism, left_normal, semidirect, left_m_normal };
    let c = report.conditions();
    if c[0] != c[1] || c[1] != c[2] {
        return Err(AlgebraError::InternalInconsistency(format!(
            "normal factorization conditions disagree on {}: {c:?}",
            f.display()
        )));
    }
    if report.left_m_normal.is_some_and(|mn| mn != left_normal) {
        return Err(AlgebraError::InternalInconsistency(format!(
            "left B-normal and left M-normal disagree for the group factor of {}",
            f.display()
        )));
    }
    Ok(report)
}

fn semidirect_presentation(f: &Factorization) -> Result<Option<SemidirectPresentation>> {
    let m = f.parent();
    let (a, b) = (f.first(), f.second());
    let (am, bm) = (a.to_monoid(), b.to_monoid());
    let star: Vec<Vec<usize>> = b
        .members()
        .iter()
        .map(|&y| {
            a.members()
                .iter()
                .map(|&x| a.position(f.l().apply(m.mul(y, x))).expect("l takes values in A"))
                .collect()
        })
        .collect();
    let Ok(action) = MonoidAction::new(&bm, &am, &star) else {
        return Ok(None);
    };
    let product = SemidirectProduct::new(&am, &action, &bm)?;
    let forward = ElementMap::from_fn(&SubMonoid::whole(product.product()), &SubMonoid::whole(m), |x| {
        let (i, j) = product.split(x);
        m.mul(a.members()[i], b.members()[j])
    })?;
    Ok(MonoidIso::from_forward(forward)
        .ok()
        .map(|iso| SemidirectPresentation { action, product, iso }))
}

#[derive(Clone, Debug)]
pub struct SplitEpiReport {
    pub kernel: SubMonoid,
    pub section_image: SubMonoid,
    /// `Ker(p)` is a group and `(Ker p, s(B))` factorizes `M`.
    pub kernel_factorization: bool,
    /// `p(m1) = p(m2)` implies `m2 = k·m1` for exactly one `k ∈ Ker(p)`.
    pub unique_translation: bool,
    /// Under the conditions: `Ker(p)` is left `s(B)`-normal.
    pub kernel_left_normal: Option<bool>,
    /// Under the conditions: factorization, cocycle and split epi round trip.
    pub round_trips: Option<bool>,
}

impl SplitEpiReport {
    pub fn holds(&self) -> bool {
        self.kernel_factorization
            && self.unique_translation
            && self.kernel_left_normal == Some(true)
            && self.round_trips == Some(true)
    }
}

/// Analyses a split pair `p: M → B`, `s: B → M` with `p ∘ s = id`.
pub fn split_epi_analysis(m: &FiniteMonoid, b: &FiniteMonoid, p: &ElementMap, s: &ElementMap) -> Result<SplitEpiReport> {
    let shape_ok = p.domain().parent() == m
        && p.domain().is_whole()
        && p.codomain().parent() == b
        && s.domain().parent() == b
        && s.domain().is_whole()
        && s.codomain().parent() == m;
    if !shape_ok {
        return Err(AlgebraError::NotASplitPair("maps do not run M → B → M".into()));
    }
    for (name, f) in [("p", p), ("s", s)] {
        if let Some(v) = f.homomorphism_violation() {
            return Err(AlgebraError::NotASplitPair(format!("{name} is not a homomorphism: {v}")));
        }
    }
    if let Some(y) = b.elements().find(|&y| p.apply(s.apply(y)) != y) {
        return Err(AlgebraError::NotASplitPair(format!("p(s({y})) != {y}")));
    }
    let kernel = p.kernel_submonoid()?;
    let section_image = SubMonoid::new(m, s.image())?;
    let factorization = if kernel.is_subgroup() { try_factorization(m, &kernel, &section_image)? } else { None };
    let kernel_factorization = factorization.is_some();

    let mut unique_translation = true;
    'pairs: for m1 in m.elements() {
        for m2 in m.elements() {
            if p.apply(m1) != p.apply(m2) {
                continue;
            }
            let hits = kernel.members().iter().filter(|&&k| m.mul(k, m1) == m2).count();
            if hits != 1 {
                unique_translation = false;
                break 'pairs;
            }
        }
    }
    if kernel_factorization != unique_translation {
        return Err(AlgebraError::InternalInconsistency(format!(
            "split pair: kernel factorization {kernel_factorization} but unique translation {unique_translation}"
        )));
    }

    let (kernel_left_normal, round_trips) = match &factorization {
        Some(f) => (
            Some(normality_check(m, &kernel, section_image.members(), Normality::Left)),
            Some(split_round_trips(m, p, s, f)?),
        ),
        None => (None, None),
    };
    Ok(SplitEpiReport { kernel, section_image, kernel_factorization, unique_translation, kernel_left_normal, round_trips })
}

/// factorization `(K, S)` ↦ cocycle `l` ↦ split pair `(q†, ι)` ↦
/// factorization `(Ker q†, ι(S))`, and the split pair agrees with `(p, s)`:
/// `s ∘ p = ι ∘ q†`.
fn split_round_trips(m: &FiniteMonoid, p: &ElementMap, s: &ElementMap, f: &Factorization) -> Result<bool> {
    let q = DescentCocycle::new(f.l().clone(), Side::Left)?;
    let rebuilt = fac_from_subgroup_cocycle(m, f.first(), &q)?;
    let dagger = rebuilt.r();
    let kernel_of_q = cocycle_kernel(&q);
    let back = try_factorization(m, &dagger.kernel_submonoid()?, &kernel_of_q)?;
    let same_epi = m.elements().all(|x| s.apply(p.apply(x)) == dagger.apply(x));
    Ok(&rebuilt == f && back.as_ref() == Some(f) && kernel_of_q == *f.second() && same_epi && dagger.is_homomorphism())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::factorization::enumerate_factorizations;
    use crate::map::find_isomorphism;

    fn s3_parts() -> (FiniteMonoid, SubMonoid, SubMonoid, impl Fn(&str) -> usize) {
        let s3 = catalog::symmetric3();
        let m = s3.clone();
        let l = move |s: &str| m.find_label(s).unwrap();
        let a3 = SubMonoid::closure(&s3, [l("(123)")]).unwrap();
        let t12 = SubMonoid::closure(&s3, [l("(12)")]).unwrap();
        (s3, a3, t12, l)
    }

    #[test]
    fn normality_examples() {
        let (s3, a3, t12, _) = s3_parts();
        let all: Vec<usize> = s3.elements().collect();
        assert!(normality_check(&s3, &a3, &all, Normality::Left));
        assert!(!normality_check(&s3, &t12, a3.members(), Normality::Left));
        for n in [&a3, &t12] {
            assert!(normality_check(&s3, n, &[s3.identity()], Normality::Both));
        }
    }

    #[test]
    fn s3_semidirect_recovered() {
        let (s3, a3, t12, _) = s3_parts();
        let f = try_factorization(&s3, &a3, &t12).unwrap().unwrap();
        let rep = factorization_normality_equivalences(&f).unwrap();
        assert!(rep.all_hold());
        assert_eq!(rep.left_m_normal, Some(true));
        let pres = rep.semidirect.unwrap();
        assert!(pres.iso.is_valid());
        assert!(find_isomorphism(pres.product.product(), &s3).is_some());
        assert!(find_isomorphism(pres.product.product(), &catalog::c3_semidirect_c2()).is_some());
        assert!(!pres.action.is_trivial());
    }

    #[test]
    fn reverse_s3_factorization_is_not_normal() {
        let (s3, a3, t12, _) = s3_parts();
        let f = try_factorization(&s3, &t12, &a3).unwrap().unwrap();
        let rep = factorization_normality_equivalences(&f).unwrap();
        assert_eq!(rep.conditions(), [false; 3]);
        assert_eq!(rep.left_m_normal, Some(false));
    }

    #[test]
    fn conditions_agree_on_catalog() {
        for m in catalog::all() {
            for f in enumerate_factorizations(&m).unwrap() {
                let rep = factorization_normality_equivalences(&f).unwrap();
                if f.first().is_trivial() {
                    assert!(rep.all_hold());
                }
            }
        }
        let m = catalog::b2_times_c2();
        let f = try_factorization(&m, &SubMonoid::new(&m, [0, 2]).unwrap(), &SubMonoid::new(&m, [0, 1]).unwrap())
            .unwrap()
            .unwrap();
        let rep = factorization_normality_equivalences(&f).unwrap();
        assert!(rep.all_hold());
        assert!(rep.semidirect.unwrap().action.is_trivial());
    }

    #[test]
    fn sign_split_epi() {
        let (s3, a3, t12, l) = s3_parts();
        let c2 = catalog::cyclic(2);
        let p = ElementMap::from_fn(&SubMonoid::whole(&s3), &SubMonoid::whole(&c2), |x| usize::from(!a3.contains(x)))
            .unwrap();
        let s = ElementMap::new(&SubMonoid::whole(&c2), &SubMonoid::whole(&s3), vec![l("e"), l("(12)")]).unwrap();
        let rep = split_epi_analysis(&s3, &c2, &p, &s).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.kernel, a3);
        assert_eq!(rep.section_image, t12);
    }

    #[test]
    fn identity_split_epi() {
        for m in catalog::all() {
            let w = SubMonoid::whole(&m);
            let id = ElementMap::identity(&w);
            let rep = split_epi_analysis(&m, &m, &id, &id).unwrap();
            assert!(rep.holds());
            assert!(rep.kernel.is_trivial());
        }
    }

    #[test]
    fn b2_times_c2_projection() {
        let m = catalog::b2_times_c2();
        let c2 = catalog::cyclic(2);
        let p = ElementMap::from_fn(&SubMonoid::whole(&m), &SubMonoid::whole(&c2), |x| x % 2).unwrap();
        let s = ElementMap::new(&SubMonoid::whole(&c2), &SubMonoid::whole(&m), vec![0, 1]).unwrap();
        let rep = split_epi_analysis(&m, &c2, &p, &s).unwrap();
        assert_eq!(rep.kernel.members(), &[0, 2]);
        assert!(!rep.kernel_factorization);
        assert!(!rep.unique_translation);
        assert_eq!(rep.round_trips, None);
    }

    #[test]
    fn rejects_non_split_pairs() {
        let c2 = catalog::cyclic(2);
        let w = SubMonoid::whole(&c2);
        let zero = ElementMap::zero(&w, &w);
        let id = ElementMap::identity(&w);
        assert!(matches!(split_epi_analysis(&c2, &c2, &zero, &id), Err(AlgebraError::NotASplitPair(_))));
    }
}
