//! Exact factorizations `M = A·B` and their component maps.
//!
//! A pair of submonoids `(A, B)` factorizes `M` when `(a, b) ↦ ab` is a
//! bijection `A × B → M`. Inverting that bijection gives the component maps
//! `l: M → A` and `r: M → B` with `m = l(m)·r(m)`.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::map::ElementMap;
use crate::monoid::FiniteMonoid;
use crate::submonoid::{enumerate_submonoids, SubMonoid};

#[derive(Clone)]
pub struct Factorization {
    parent: FiniteMonoid,
    first: SubMonoid,
    second: SubMonoid,
    l: ElementMap,
    r: ElementMap,
}

impl Factorization {
    /// Assembles a factorization whose component maps are already known to
    /// invert the multiplication map.
    pub(crate) fn from_parts(
        parent: &FiniteMonoid,
        first: &SubMonoid,
        second: &SubMonoid,
        l: ElementMap,
        r: ElementMap,
    ) -> Self {
        Factorization { parent: parent.clone(), first: first.clone(), second: second.clone(), l, r }
    }

    pub fn parent(&self) -> &FiniteMonoid {
        &self.parent
    }

    pub fn first(&self) -> &SubMonoid {
        &self.first
    }

    pub fn second(&self) -> &SubMonoid {
        &self.second
    }

    /// The first-component map `M → A`.
    pub fn l(&self) -> &ElementMap {
        &self.l
    }

    /// The second-component map `M → B`.
    pub fn r(&self) -> &ElementMap {
        &self.r
    }

    pub fn decompose(&self, m: usize) -> (usize, usize) {
        (self.l.apply(m), self.r.apply(m))
    }

    pub fn display(&self) -> String {
        format!("({}, {})", self.first.display(), self.second.display())
    }
}

impl PartialEq for Factorization {
    fn eq(&self, other: &Self) -> bool {
        self.first == other.first && self.second == other.second && self.l == other.l && self.r == other.r
    }
}

impl Eq for Factorization {}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Factorization({:?}, {:?})", self.first.members(), self.second.members())
    }
}

/// Why a pair of submonoids fails to factorize the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorizationFailure {
    /// `|A|·|B| ≠ |M|`.
    Cardinality { first: usize, second: usize, parent: usize },
    /// `missing` is not a product `ab`.
    Surjectivity { missing: usize },
    /// Two distinct pairs with the same product.
    Injectivity { pair: (usize, usize), other: (usize, usize), product: usize },
}

impl fmt::Display for FactorizationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorizationFailure::Cardinality { first, second, parent } => {
                write!(f, "cardinality: {first} x {second} != {parent}")
            }
            FactorizationFailure::Surjectivity { missing } => write!(f, "surjectivity: {missing} is not a product"),
            FactorizationFailure::Injectivity { pair, other, product } => {
                write!(f, "injectivity: {pair:?} and {other:?} both give {product}")
            }
        }
    }
}

fn check_parents(m: &FiniteMonoid, subs: &[&SubMonoid]) -> Result<()> {
    if subs.iter().all(|s| s.parent() == m) {
        Ok(())
    } else {
        Err(AlgebraError::ParentMismatch)
    }
}

/// Decides whether `(a, b)` factorizes `m`, explaining failures.
pub fn analyze_pair(
    m: &FiniteMonoid,
    a: &SubMonoid,
    b: &SubMonoid,
) -> Result<std::result::Result<Factorization, FactorizationFailure>> {
    check_parents(m, &[a, b])?;
    if a.len() * b.len() != m.size() {
        return Ok(Err(FactorizationFailure::Cardinality {
            first: a.len(),
            second: b.len(),
            parent: m.size(),
        }));
    }
    const NONE: usize = usize::MAX;
    let mut left = vec![NONE; m.size()];
    let mut right = vec![NONE; m.size()];
    for &x in a.members() {
        for &y in b.members() {
            let p = m.mul(x, y);
            if left[p] != NONE {
                return Ok(Err(FactorizationFailure::Injectivity {
                    pair: (left[p], right[p]),
                    other: (x, y),
                    product: p,
                }));
            }
            left[p] = x;
            right[p] = y;
        }
    }
    // With matching cardinality injectivity already forces surjectivity.
    if let Some(missing) = left.iter().position(|&v| v == NONE) {
        return Ok(Err(FactorizationFailure::Surjectivity { missing }));
    }
    let whole = SubMonoid::whole(m);
    Ok(Ok(Factorization {
        parent: m.clone(),
        first: a.clone(),
        second: b.clone(),
        l: ElementMap::new_unchecked(&whole, a, left),
        r: ElementMap::new_unchecked(&whole, b, right),
    }))
}

pub fn try_factorization(m: &FiniteMonoid, a: &SubMonoid, b: &SubMonoid) -> Result<Option<Factorization>> {
    Ok(analyze_pair(m, a, b)?.ok())
}

/// `FAC(M)`, sorted by `(first, second)` member lists.
pub fn enumerate_factorizations(m: &FiniteMonoid) -> Result<Vec<Factorization>> {
    let subs = enumerate_submonoids(m)?;
    let mut out = Vec::new();
    for a in &subs {
        for b in &subs {
            if let Some(f) = try_factorization(m, a, b)? {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// `FAC(A/M)`: every second factor paired with `a`.
pub fn fac_over(m: &FiniteMonoid, a: &SubMonoid) -> Result<Vec<SubMonoid>> {
    check_parents(m, &[a])?;
    if !m.size().is_multiple_of(a.len()) {
        return Ok(Vec::new());
    }
    let want = m.size() / a.len();
    let mut out = Vec::new();
    for b in enumerate_submonoids(m)?.into_iter().filter(|b| b.len() == want) {
        if try_factorization(m, a, &b)?.is_some() {
            out.push(b);
        }
    }
    Ok(out)
}

/// Outcome of the cancellation tests that every factor must pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterOutcome {
    Passes,
    /// The offending `(factor element, m)` pair.
    Fails { factor: usize, element: usize },
}

impl FilterOutcome {
    pub fn passes(&self) -> bool {
        matches!(self, FilterOutcome::Passes)
    }
}

/// For a first factor: `a·m ∈ A` with `a ∈ A` forces `m ∈ A`.
pub fn first_factor_filter(m: &FiniteMonoid, a: &SubMonoid) -> FilterOutcome {
    for &x in a.members() {
        for y in m.elements() {
            if a.contains(m.mul(x, y)) && !a.contains(y) {
                return FilterOutcome::Fails { factor: x, element: y };
            }
        }
    }
    FilterOutcome::Passes
}

/// For a second factor: `m·b ∈ B` with `b ∈ B` forces `m ∈ B`.
pub fn second_factor_filter(m: &FiniteMonoid, b: &SubMonoid) -> FilterOutcome {
    for &x in b.members() {
        for y in m.elements() {
            if b.contains(m.mul(y, x)) && !b.contains(y) {
                return FilterOutcome::Fails { factor: x, element: y };
            }
        }
    }
    FilterOutcome::Passes
}

/// `l(am) = a·l(m)` for all `a ∈ A`, `m ∈ M`.
pub fn satisfies_l2(a: &SubMonoid, l: &ElementMap) -> bool {
    let m = a.parent();
    a.members()
        .iter()
        .all(|&x| m.elements().all(|y| l.apply(m.mul(x, y)) == m.mul(x, l.apply(y))))
}

/// `r(mb) = r(m)·b` for all `m ∈ M`, `b ∈ B`.
pub fn satisfies_r2(b: &SubMonoid, r: &ElementMap) -> bool {
    let m = b.parent();
    b.members()
        .iter()
        .all(|&y| m.elements().all(|x| r.apply(m.mul(x, y)) == m.mul(r.apply(x), y)))
}

/// The three conditions characterizing factorizations through `l` and `r`:
/// `AB = M`; `l` satisfies (L2) with kernel `B`; `r` satisfies (R2) with kernel `A`.
pub fn product_kernel_conditions(
    m: &FiniteMonoid,
    a: &SubMonoid,
    b: &SubMonoid,
    l: &ElementMap,
    r: &ElementMap,
) -> [bool; 3] {
    let mut covered = vec![false; m.size()];
    for &x in a.members() {
        for &y in b.members() {
            covered[m.mul(x, y)] = true;
        }
    }
    [
        covered.iter().all(|&c| c),
        satisfies_l2(a, l) && l.kernel() == b.members(),
        satisfies_r2(b, r) && r.kernel() == a.members(),
    ]
}

/// The four conditions of the kernel-pair criterion:
/// (L2) for `l`; (R2) for `r`; `r` kills `A` and `l` kills `B`;
/// `K[l] ∩ K[r]` is the diagonal.
pub fn bicross_conditions(
    m: &FiniteMonoid,
    a: &SubMonoid,
    b: &SubMonoid,
    l: &ElementMap,
    r: &ElementMap,
) -> [bool; 4] {
    let e = m.identity();
    let kills = a.members().iter().all(|&x| r.apply(x) == e) && b.members().iter().all(|&y| l.apply(y) == e);
    let diagonal = m
        .elements()
        .all(|x| m.elements().all(|y| x == y || l.apply(x) != l.apply(y) || r.apply(x) != r.apply(y)));
    [satisfies_l2(a, l), satisfies_r2(b, r), kills, diagonal]
}

pub fn verify_bicross(m: &FiniteMonoid, a: &SubMonoid, b: &SubMonoid, l: &ElementMap, r: &ElementMap) -> bool {
    bicross_conditions(m, a, b, l, r).iter().all(|&c| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s3_parts() -> (FiniteMonoid, SubMonoid, SubMonoid) {
        let s3 = catalog::symmetric3();
        let l = |s: &str| s3.find_label(s).unwrap();
        let a3 = SubMonoid::closure(&s3, [l("(123)")]).unwrap();
        let t = SubMonoid::closure(&s3, [l("(12)")]).unwrap();
        (s3, a3, t)
    }

    #[test]
    fn unit_factor() {
        for m in catalog::all() {
            let f = try_factorization(&m, &SubMonoid::trivial(&m), &SubMonoid::whole(&m))
                .unwrap()
                .unwrap();
            assert!(f.l().values().iter().all(|&v| v == m.identity()));
            assert_eq!(f.r().values(), &m.elements().collect::<Vec<_>>()[..]);
        }
    }

    #[test]
    fn s3_alternating_times_transposition() {
        let (s3, a3, t) = s3_parts();
        let f = try_factorization(&s3, &a3, &t).unwrap().unwrap();
        // Oracle: invert the multiplication map by scanning all 6 pairs.
        for m in s3.elements() {
            let pairs: Vec<(usize, usize)> = a3
                .members()
                .iter()
                .flat_map(|&x| t.members().iter().map(move |&y| (x, y)))
                .filter(|&(x, y)| s3.mul(x, y) == m)
                .collect();
            assert_eq!(pairs, vec![f.decompose(m)]);
        }
        // (23) = (132)(12): A3-part (132), transposition part (12).
        let l = |s: &str| s3.find_label(s).unwrap();
        assert_eq!(f.decompose(l("(23)")), (l("(132)"), l("(12)")));
    }

    #[test]
    fn b2_cardinality_failure() {
        let b2 = catalog::b2();
        let w = SubMonoid::whole(&b2);
        assert_eq!(
            analyze_pair(&b2, &w, &w).unwrap().unwrap_err(),
            FactorizationFailure::Cardinality { first: 2, second: 2, parent: 2 }
        );
    }

    #[test]
    fn injectivity_and_surjectivity_failures() {
        let c4 = catalog::cyclic(4);
        let h = SubMonoid::new(&c4, [0, 2]).unwrap();
        assert!(matches!(
            analyze_pair(&c4, &h, &h).unwrap().unwrap_err(),
            FactorizationFailure::Injectivity { .. }
        ));
    }

    #[test]
    fn parent_mismatch() {
        let c2 = catalog::cyclic(2);
        let b2 = catalog::b2();
        assert_eq!(
            try_factorization(&c2, &SubMonoid::trivial(&b2), &SubMonoid::whole(&c2)).unwrap_err(),
            AlgebraError::ParentMismatch
        );
    }

    #[test]
    fn factorization_lists() {
        assert_eq!(enumerate_factorizations(&catalog::trivial()).unwrap().len(), 1);
        let c2 = catalog::cyclic(2);
        let facs = enumerate_factorizations(&c2).unwrap();
        let pairs: Vec<_> = facs.iter().map(|f| (f.first().members().to_vec(), f.second().members().to_vec())).collect();
        assert_eq!(pairs, vec![(vec![0], vec![0, 1]), (vec![0, 1], vec![0])]);

        let (s3, a3, _) = s3_parts();
        let facs = enumerate_factorizations(&s3).unwrap();
        let l = |s: &str| s3.find_label(s).unwrap();
        for tr in ["(12)", "(13)", "(23)"] {
            let t = SubMonoid::closure(&s3, [l(tr)]).unwrap();
            assert!(facs.iter().any(|f| f.first() == &a3 && f.second() == &t));
            assert!(facs.iter().any(|f| f.first() == &t && f.second() == &a3));
        }
        let mut sorted = facs.clone();
        sorted.sort_by(|x, y| (x.first(), x.second()).cmp(&(y.first(), y.second())));
        assert_eq!(facs, sorted);
        // 2 trivial + 3 (A3, T) + 3 (T, A3); (T, T') pairs have 4 elements.
        assert_eq!(facs.len(), 8);
    }

    #[test]
    fn fac_over_examples() {
        let (s3, a3, _) = s3_parts();
        let over = fac_over(&s3, &a3).unwrap();
        assert_eq!(over.len(), 3);
        assert!(over.iter().all(|b| b.len() == 2));
        for m in catalog::all() {
            assert_eq!(fac_over(&m, &SubMonoid::trivial(&m)).unwrap(), vec![SubMonoid::whole(&m)]);
        }
        let c4 = catalog::cyclic(4);
        let h = SubMonoid::new(&c4, [0, 2]).unwrap();
        assert!(fac_over(&c4, &h).unwrap().is_empty());
    }

    #[test]
    fn filter_examples() {
        let lz = catalog::lz2_plus_one();
        let a = SubMonoid::new(&lz, [0, 1]).unwrap();
        assert_eq!(first_factor_filter(&lz, &a), FilterOutcome::Fails { factor: 1, element: 2 });
        let (s3, a3, _) = s3_parts();
        assert!(first_factor_filter(&s3, &a3).passes());
        let c4 = catalog::cyclic(4);
        let h = SubMonoid::new(&c4, [0, 2]).unwrap();
        assert!(first_factor_filter(&c4, &h).passes());
        assert!(fac_over(&c4, &h).unwrap().is_empty());
    }

    #[test]
    fn bicross_examples() {
        let (s3, a3, t) = s3_parts();
        let f = try_factorization(&s3, &a3, &t).unwrap().unwrap();
        assert!(verify_bicross(&s3, &a3, &t, f.l(), f.r()));
        let whole = SubMonoid::whole(&s3);
        let constant = ElementMap::zero(&whole, &t);
        let conds = bicross_conditions(&s3, &a3, &t, f.l(), &constant);
        assert!(!conds[3]);
        assert!(!verify_bicross(&s3, &a3, &t, f.l(), &constant));
        for m in catalog::all() {
            let triv = SubMonoid::trivial(&m);
            let w = SubMonoid::whole(&m);
            let zero = ElementMap::zero(&w, &triv);
            let id = ElementMap::identity(&w);
            assert!(verify_bicross(&m, &triv, &w, &zero, &id));
        }
    }
}
