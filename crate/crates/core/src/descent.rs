//! Descent 1-cocycles `q: M → A`, the `U(A)`-action on them, and the
//! correspondences between cocycles and second factors.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::factorization::{try_factorization, Factorization};
use crate::groupoid::{groupoid_components, CohomologyClasses};
use crate::map::ElementMap;
use crate::monoid::FiniteMonoid;
use crate::submonoid::SubMonoid;

/// Largest `|M|` accepted by [`enumerate_descent_cocycles`].
pub const COCYCLE_SEARCH_BOUND: usize = 64;

const UNSET: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// A map `M → A` satisfying (L1)–(L3), or (R1)–(R3) on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentCocycle {
    map: ElementMap,
    side: Side,
}

impl DescentCocycle {
    /// Validates `map` (domain the whole of `M`) as a cocycle.
    pub fn new(map: ElementMap, side: Side) -> Result<Self> {
        if !map.domain().is_whole() {
            return Err(AlgebraError::NotAMap("a cocycle is defined on the whole monoid".into()));
        }
        if let Some(v) = descent_violation(map.codomain(), &map, side) {
            return Err(AlgebraError::NotACocycle(v.to_string()));
        }
        Ok(DescentCocycle { map, side })
    }

    pub fn map(&self) -> &ElementMap {
        &self.map
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The coefficient submonoid `A`.
    pub fn coefficients(&self) -> &SubMonoid {
        self.map.codomain()
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        self.map.domain().parent()
    }

    pub fn apply(&self, m: usize) -> usize {
        self.map.values()[m]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleCondition {
    L1,
    L2,
    L3,
    R1,
    R2,
    R3,
}

impl fmt::Display for CocycleCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The first failing condition, with the elements it fails at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleViolation {
    pub condition: CocycleCondition,
    pub witness: Vec<usize>,
}

impl fmt::Display for CocycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.condition, self.witness)
    }
}

/// Checks the cocycle conditions of `q: M → A` pointwise.
///
/// Left: `q(a) = a`, `q(am) = a·q(m)`, `q(m1·m2) = q(m1·q(m2))`.
/// Right: `q(a) = a`, `q(ma) = q(m)·a`, `q(m1·m2) = q(q(m1)·m2)`.
pub fn descent_violation(a: &SubMonoid, q: &ElementMap, side: Side) -> Option<CocycleViolation> {
    let m = a.parent();
    let v = |x: usize| q.apply(x);
    let (c1, c2, c3) = match side {
        Side::Left => (CocycleCondition::L1, CocycleCondition::L2, CocycleCondition::L3),
        Side::Right => (CocycleCondition::R1, CocycleCondition::R2, CocycleCondition::R3),
    };
    let fail = |condition, witness| Some(CocycleViolation { condition, witness });
    if let Some(&x) = a.members().iter().find(|&&x| v(x) != x) {
        return fail(c1, vec![x]);
    }
    for &x in a.members() {
        for y in m.elements() {
            let ok = match side {
                Side::Left => v(m.mul(x, y)) == m.mul(x, v(y)),
                Side::Right => v(m.mul(y, x)) == m.mul(v(y), x),
            };
            if !ok {
                return fail(c2, vec![x, y]);
            }
        }
    }
    for x in m.elements() {
        for y in m.elements() {
            let ok = match side {
                Side::Left => v(m.mul(x, y)) == v(m.mul(x, v(y))),
                Side::Right => v(m.mul(x, y)) == v(m.mul(v(x), y)),
            };
            if !ok {
                return fail(c3, vec![x, y]);
            }
        }
    }
    None
}

pub fn is_descent_cocycle(a: &SubMonoid, q: &ElementMap, side: Side) -> bool {
    q.domain().is_whole() && q.codomain() == a && descent_violation(a, q, side).is_none()
}

/// `𝒟(M, A)` on the requested side, in lexicographic order of value tables.
pub fn enumerate_descent_cocycles(m: &FiniteMonoid, a: &SubMonoid, side: Side) -> Result<Vec<DescentCocycle>> {
    if a.parent() != m {
        return Err(AlgebraError::ParentMismatch);
    }
    if m.size() > COCYCLE_SEARCH_BOUND {
        return Err(AlgebraError::SizeBoundExceeded {
            what: "descent cocycle search",
            size: m.size(),
            bound: COCYCLE_SEARCH_BOUND,
        });
    }
    let tables = match side {
        Side::Left => left_cocycle_tables(m, a),
        // Right conditions over M are the left conditions over M^op.
        Side::Right => left_cocycle_tables(&m.opposite(), &a.transplant(&m.opposite())?),
    };
    let whole = SubMonoid::whole(m);
    Ok(tables
        .into_iter()
        .map(|t| DescentCocycle { map: ElementMap::new_unchecked(&whole, a, t), side })
        .collect())
}

fn left_cocycle_tables(m: &FiniteMonoid, a: &SubMonoid) -> Vec<Vec<usize>> {
    let mut q = vec![UNSET; m.size()];
    for &x in a.members() {
        q[x] = x;
    }
    let mut out = Vec::new();
    if propagate(m, a, &mut q) {
        search(m, a, &mut q, &mut out);
    }
    out.sort();
    out
}

fn search(m: &FiniteMonoid, a: &SubMonoid, q: &mut [usize], out: &mut Vec<Vec<usize>>) {
    let Some(slot) = q.iter().position(|&v| v == UNSET) else {
        out.push(q.to_vec());
        return;
    };
    for &v in a.members() {
        let mut trial = q.to_vec();
        trial[slot] = v;
        if propagate(m, a, &mut trial) {
            search(m, a, &mut trial, out);
        }
    }
}

/// Closes a partial table under (L2) and (L3); `false` on a contradiction.
/// At a fixpoint with every entry set, all conditions hold.
fn propagate(m: &FiniteMonoid, a: &SubMonoid, q: &mut [usize]) -> bool {
    fn assign(q: &mut [usize], at: usize, value: usize, changed: &mut bool) -> bool {
        if q[at] == UNSET {
            q[at] = value;
            *changed = true;
            true
        } else {
            q[at] == value
        }
    }
    loop {
        let mut changed = false;
        for y in m.elements() {
            let v = q[y];
            if v == UNSET {
                continue;
            }
            for &x in a.members() {
                if !assign(q, m.mul(x, y), m.mul(x, v), &mut changed) {
                    return false;
                }
            }
            for z in m.elements() {
                let (p1, p2) = (m.mul(z, y), m.mul(z, v));
                match (q[p1], q[p2]) {
                    (UNSET, UNSET) => {}
                    (UNSET, w) => {
                        q[p1] = w;
                        changed = true;
                    }
                    (w, UNSET) => {
                        q[p2] = w;
                        changed = true;
                    }
                    (w1, w2) if w1 != w2 => return false,
                    _ => {}
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// `(a0 ⋆ q)(m) = q(m·a0)·a0⁻¹` for `a0 ∈ U(A)`.
pub fn star_act(a0: usize, q: &DescentCocycle) -> Result<DescentCocycle> {
    if q.side != Side::Left {
        return Err(AlgebraError::NotACocycle("the star action is defined on left cocycles".into()));
    }
    let a = q.coefficients();
    let m = a.parent();
    let inv = a.inverse_within(a0).ok_or(AlgebraError::NotInvertible(a0))?;
    let values = m.elements().map(|x| m.mul(q.apply(m.mul(x, a0)), inv)).collect();
    Ok(DescentCocycle { map: ElementMap::new_unchecked(q.map.domain(), a, values), side: Side::Left })
}

/// `Ker(q) = {m : q(m) = 1}`.
pub fn cocycle_kernel(q: &DescentCocycle) -> SubMonoid {
    let m = q.monoid();
    let e = m.identity();
    let members = m.elements().filter(|&x| q.apply(x) == e).collect();
    SubMonoid::from_sorted_unchecked(m, members)
}

/// Orbits of `U(A)` acting by `⋆` on left cocycles, optionally restricted to
/// those with `q(B) ⊆ U(A)`. When `(A, B)` is a factorization the set is
/// pointed at the class of `l`.
pub fn descent_cohomology(
    m: &FiniteMonoid,
    a: &SubMonoid,
    restrict_unit_on: Option<&SubMonoid>,
) -> Result<CohomologyClasses<DescentCocycle>> {
    let mut cocycles = enumerate_descent_cocycles(m, a, Side::Left)?;
    let mut base = None;
    if let Some(b) = restrict_unit_on {
        if b.parent() != m {
            return Err(AlgebraError::ParentMismatch);
        }
        let units = a.units();
        cocycles.retain(|q| b.members().iter().all(|&y| units.contains(q.apply(y))));
        base = try_factorization(m, a, b)?.map(|f| f.l().clone());
    }
    let groupoid = groupoid_components(cocycles, &a.units(), star_act)?;
    let mut classes = CohomologyClasses::from_groupoid(groupoid);
    if let Some(l) = base {
        let l = DescentCocycle { map: l, side: Side::Left };
        if !classes.set_base_point(&l) {
            return Err(AlgebraError::InternalInconsistency("l is missing from the cocycle list".into()));
        }
    }
    Ok(classes)
}

/// `(L, Ker q)` with `l = q` and `r = q†`, `q†(m) = q(m)⁻¹·m`, for a subgroup `L`.
pub fn fac_from_subgroup_cocycle(m: &FiniteMonoid, l_sub: &SubMonoid, q: &DescentCocycle) -> Result<Factorization> {
    if l_sub.parent() != m {
        return Err(AlgebraError::ParentMismatch);
    }
    if !l_sub.is_subgroup() {
        return Err(AlgebraError::NotASubgroup);
    }
    if q.side != Side::Left || q.coefficients() != l_sub || q.monoid() != m {
        return Err(AlgebraError::NotACocycle("not a left cocycle into the given subgroup".into()));
    }
    if let Some(v) = descent_violation(l_sub, &q.map, Side::Left) {
        return Err(AlgebraError::NotACocycle(v.to_string()));
    }
    let kernel = cocycle_kernel(q);
    let dagger: Vec<usize> = m
        .elements()
        .map(|x| m.mul(l_sub.inverse_within(q.apply(x)).expect("values lie in a group"), x))
        .collect();
    if let Some(x) = m.elements().find(|&x| !kernel.contains(dagger[x])) {
        return Err(AlgebraError::InternalInconsistency(format!("q†({x}) lies outside Ker(q)")));
    }
    let whole = SubMonoid::whole(m);
    let r = ElementMap::new_unchecked(&whole, &kernel, dagger);
    Ok(Factorization::from_parts(m, l_sub, &kernel, q.map.clone(), r))
}

/// A list with a distinguished element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSet<T> {
    pub elements: Vec<T>,
    pub base: usize,
}

impl<T> PointedSet<T> {
    pub fn base_element(&self) -> &T {
        &self.elements[self.base]
    }
}

/// `𝒟^{u,B}(M, A)`: left cocycles with `q(B) ⊆ U(A)`, pointed at `l`.
pub fn unit_valued_cocycles(m: &FiniteMonoid, a: &SubMonoid, b: &SubMonoid) -> Result<PointedSet<DescentCocycle>> {
    let f = try_factorization(m, a, b)?.ok_or(AlgebraError::NotAFactorization)?;
    let units = a.units();
    let elements: Vec<DescentCocycle> = enumerate_descent_cocycles(m, a, Side::Left)?
        .into_iter()
        .filter(|q| b.members().iter().all(|&y| units.contains(q.apply(y))))
        .collect();
    let base = elements
        .iter()
        .position(|q| q.map == *f.l())
        .ok_or_else(|| AlgebraError::InternalInconsistency("l is not unit-valued on B".into()))?;
    Ok(PointedSet { elements, base })
}

/// `a0·B·a0⁻¹` for `a0 ∈ U(A)`.
pub fn conjugate_second_factor(a: &SubMonoid, a0: usize, b: &SubMonoid) -> Result<SubMonoid> {
    if !a.same_parent(b) {
        return Err(AlgebraError::ParentMismatch);
    }
    if a.inverse_within(a0).is_none() {
        return Err(AlgebraError::NotInvertible(a0));
    }
    b.conjugate(a0)
}
