//! Non-abelian 1-cocycles `χ: B → A` for an action of `B` on `A`, and the
//! cohomology pointed set `H¹`.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::action::MonoidAction;
use crate::error::{AlgebraError, Result};
use crate::groupoid::{groupoid_components, CohomologyClasses};
use crate::map::ElementMap;
use crate::submonoid::SubMonoid;

/// Bound on both `|A|` and `|B|` for [`z1`].
pub const Z1_BOUND: usize = 8;

const UNSET: usize = usize::MAX;

/// A map `χ: B → A` with `χ(b1 b2) = χ(b1)·(b1 ⋆ χ(b2))`.
#[derive(Clone)]
pub struct Cocycle1 {
    action: MonoidAction,
    map: ElementMap,
    unit_valued: bool,
}

impl Cocycle1 {
    /// Validates `values[b] = χ(b)`.
    pub fn new(action: &MonoidAction, values: Vec<usize>) -> Result<Self> {
        let map = ElementMap::new(&SubMonoid::whole(action.actor()), &SubMonoid::whole(action.acted()), values)?;
        if let Some(w) = cocycle_violation(action, map.values()) {
            return Err(AlgebraError::NotACocycle(format!("cocycle law fails at {w:?}")));
        }
        let a = action.acted();
        let unit_valued = map.values().iter().all(|&v| a.is_invertible(v));
        Ok(Cocycle1 { action: action.clone(), map, unit_valued })
    }

    /// `0_{B,A}`.
    pub fn zero(action: &MonoidAction) -> Self {
        let map = ElementMap::zero(&SubMonoid::whole(action.actor()), &SubMonoid::whole(action.acted()));
        Cocycle1 { action: action.clone(), map, unit_valued: true }
    }

    pub fn action(&self) -> &MonoidAction {
        &self.action
    }

    pub fn map(&self) -> &ElementMap {
        &self.map
    }

    pub fn values(&self) -> &[usize] {
        self.map.values()
    }

    pub fn apply(&self, b: usize) -> usize {
        self.map.values()[b]
    }

    pub fn is_unit_valued(&self) -> bool {
        self.unit_valued
    }
}

impl PartialEq for Cocycle1 {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl Eq for Cocycle1 {}

impl Hash for Cocycle1 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.map.hash(state);
    }
}

impl PartialOrd for Cocycle1 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cocycle1 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.map.cmp(&other.map)
    }
}

impl fmt::Debug for Cocycle1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocycle1{:?}", self.map.values())
    }
}

/// First `(b1, b2)` where the cocycle law fails, or `[1_B]` if `χ(1) ≠ 1`.
pub fn cocycle_violation(act: &MonoidAction, chi: &[usize]) -> Option<Vec<usize>> {
    let (a, b) = (act.acted(), act.actor());
    if chi[b.identity()] != a.identity() {
        return Some(vec![b.identity()]);
    }
    for b1 in b.elements() {
        for b2 in b.elements() {
            if chi[b.mul(b1, b2)] != a.mul(chi[b1], act.act(b1, chi[b2])) {
                return Some(vec![b1, b2]);
            }
        }
    }
    None
}

/// `Z¹(B, A)`, or `Z¹(B, U(A))` with `unit_valued`, in lexicographic order.
pub fn z1(act: &MonoidAction, unit_valued: bool) -> Result<Vec<Cocycle1>> {
    let (a, b) = (act.acted(), act.actor());
    for (size, what) in [(a.size(), "cocycle coefficients"), (b.size(), "cocycle domain")] {
        if size > Z1_BOUND {
            return Err(AlgebraError::SizeBoundExceeded { what, size, bound: Z1_BOUND });
        }
    }
    let candidates: Vec<usize> = a.elements().filter(|&x| !unit_valued || a.is_invertible(x)).collect();
    let mut chi = vec![UNSET; b.size()];
    chi[b.identity()] = a.identity();
    let order: Vec<usize> = b.elements().filter(|&x| x != b.identity()).collect();
    let mut out = Vec::new();
    extend(act, &candidates, &order, 0, &mut chi, &mut out);
    let whole_a = SubMonoid::whole(a);
    let whole_b = SubMonoid::whole(b);
    Ok(out
        .into_iter()
        .map(|values| {
            let unit = values.iter().all(|&v| a.is_invertible(v));
            Cocycle1 { action: act.clone(), map: ElementMap::new_unchecked(&whole_b, &whole_a, values), unit_valued: unit }
        })
        .collect())
}

fn extend(act: &MonoidAction, candidates: &[usize], order: &[usize], k: usize, chi: &mut [usize], out: &mut Vec<Vec<usize>>) {
    if k == order.len() {
        out.push(chi.to_vec());
        return;
    }
    for &v in candidates {
        chi[order[k]] = v;
        if consistent(act, chi) {
            extend(act, candidates, order, k + 1, chi, out);
        }
    }
    chi[order[k]] = UNSET;
}

/// The cocycle law on every pair whose three values are assigned.
fn consistent(act: &MonoidAction, chi: &[usize]) -> bool {
    let (a, b) = (act.acted(), act.actor());
    for b1 in b.elements() {
        if chi[b1] == UNSET {
            continue;
        }
        for b2 in b.elements() {
            let p = chi[b.mul(b1, b2)];
            if chi[b2] == UNSET || p == UNSET {
                continue;
            }
            if p != a.mul(chi[b1], act.act(b1, chi[b2])) {
                return false;
            }
        }
    }
    true
}

/// `(g·χ)(b) = g·χ(b)·(b ⋆ g)⁻¹` for `g ∈ U(A)`.
pub fn act_on_cocycle(g: usize, chi: &Cocycle1) -> Result<Cocycle1> {
    let act = &chi.action;
    let a = act.acted();
    let values = act
        .actor()
        .elements()
        .map(|b| {
            let moved = act.act(b, g);
            let inv = a.inverse(moved).ok_or(AlgebraError::NotInvertible(moved))?;
            Ok(a.mul(a.mul(g, chi.apply(b)), inv))
        })
        .collect::<Result<Vec<_>>>()?;
    let unit_valued = values.iter().all(|&v| a.is_invertible(v));
    Ok(Cocycle1 { action: act.clone(), map: ElementMap::new_unchecked(chi.map.domain(), chi.map.codomain(), values), unit_valued })
}

/// The least `a0 ∈ U(A)` with `χ(b)·(b ⋆ a0) = a0·χ′(b)` for all `b`.
pub fn cohomologous_witness(chi: &Cocycle1, other: &Cocycle1) -> Option<usize> {
    let act = &chi.action;
    let a = act.acted();
    a.elements().filter(|&x| a.is_invertible(x)).find(|&a0| {
        act.actor()
            .elements()
            .all(|b| a.mul(chi.apply(b), act.act(b, a0)) == a.mul(a0, other.apply(b)))
    })
}

/// `H¹` as orbits of `U(A)` on `Z¹`, pointed at `0_{B,A}`.
pub fn h1(act: &MonoidAction, unit_valued: bool) -> Result<CohomologyClasses<Cocycle1>> {
    let cocycles = z1(act, unit_valued)?;
    let units = act.acted().elements().filter(|&x| act.acted().is_invertible(x));
    let units = SubMonoid::new(act.acted(), units)?;
    let groupoid = groupoid_components(cocycles, &units, act_on_cocycle)?;
    let mut classes = CohomologyClasses::from_groupoid(groupoid);
    if !classes.set_base_point(&Cocycle1::zero(act)) {
        return Err(AlgebraError::InternalInconsistency("zero cocycle missing from Z1".into()));
    }
    Ok(classes)
}
