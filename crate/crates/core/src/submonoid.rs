//! Submonoids of a [`FiniteMonoid`]: closure, units, exhaustive enumeration.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{AlgebraError, Result};
use crate::monoid::FiniteMonoid;

const ABSENT: usize = usize::MAX;

/// Largest carrier for which [`enumerate_submonoids`] runs the subset scan.
pub const SUBSET_SCAN_BOUND: usize = 20;
/// Hard bound for [`enumerate_submonoids`].
pub const SUBMONOID_ENUMERATION_BOUND: usize = 24;

/// An identity-containing, multiplicatively closed subset of a parent monoid.
///
/// Members are kept strictly sorted. Equality and ordering use the member
/// list only; callers comparing submonoids of different parents should check
/// [`SubMonoid::same_parent`].
#[derive(Clone)]
pub struct SubMonoid {
    parent: FiniteMonoid,
    members: Vec<usize>,
    position: Vec<usize>,
}

impl SubMonoid {
    /// Validates `members` as a submonoid of `parent`.
    pub fn new(parent: &FiniteMonoid, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        for &x in &set {
            parent.check_element(x)?;
        }
        if !set.contains(&parent.identity()) {
            return Err(AlgebraError::NotASubmonoid("identity missing".into()));
        }
        for &x in &set {
            for &y in &set {
                if !set.contains(&parent.mul(x, y)) {
                    return Err(AlgebraError::NotASubmonoid(format!(
                        "{x}*{y} = {} not a member",
                        parent.mul(x, y)
                    )));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(parent, set.into_iter().collect()))
    }

    pub(crate) fn from_sorted_unchecked(parent: &FiniteMonoid, members: Vec<usize>) -> Self {
        let mut position = vec![ABSENT; parent.size()];
        for (i, &x) in members.iter().enumerate() {
            position[x] = i;
        }
        SubMonoid { parent: parent.clone(), members, position }
    }

    pub fn whole(parent: &FiniteMonoid) -> Self {
        Self::from_sorted_unchecked(parent, parent.elements().collect())
    }

    pub fn trivial(parent: &FiniteMonoid) -> Self {
        Self::from_sorted_unchecked(parent, vec![parent.identity()])
    }

    /// Smallest submonoid containing `generators`.
    pub fn closure(parent: &FiniteMonoid, generators: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut inside = vec![false; parent.size()];
        let mut members = vec![parent.identity()];
        inside[parent.identity()] = true;
        for g in generators {
            parent.check_element(g)?;
            if !inside[g] {
                inside[g] = true;
                members.push(g);
            }
        }
        close_in_place(parent, &mut inside, &mut members);
        members.sort_unstable();
        Ok(Self::from_sorted_unchecked(parent, members))
    }

    pub fn parent(&self) -> &FiniteMonoid {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn identity(&self) -> usize {
        self.parent.identity()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.position.len() && self.position[x] != ABSENT
    }

    /// Index of `x` inside [`members`](Self::members).
    #[inline]
    pub fn position(&self, x: usize) -> Option<usize> {
        match self.position.get(x) {
            Some(&p) if p != ABSENT => Some(p),
            _ => None,
        }
    }

    pub fn same_parent(&self, other: &SubMonoid) -> bool {
        self.parent == other.parent
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.size()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Inverse of `x` inside this submonoid, if both `x` and the inverse lie in it.
    pub fn inverse_within(&self, x: usize) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        self.parent.inverse(x).filter(|&y| self.contains(y))
    }

    /// The group of units `U(A)` of this submonoid, as a submonoid of the parent.
    pub fn units(&self) -> SubMonoid {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| self.inverse_within(x).is_some())
            .collect();
        Self::from_sorted_unchecked(&self.parent, members)
    }

    /// True iff every member has its inverse in the submonoid.
    pub fn is_subgroup(&self) -> bool {
        self.members.iter().all(|&x| self.inverse_within(x).is_some())
    }

    pub fn is_conical(&self) -> bool {
        self.units().len() == 1
    }

    pub fn is_subset_of(&self, other: &SubMonoid) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// `a0 · S · a0⁻¹` for an element `a0` invertible in the parent.
    pub fn conjugate(&self, a0: usize) -> Result<SubMonoid> {
        self.parent.check_element(a0)?;
        let inv = self.parent.inverse(a0).ok_or(AlgebraError::NotInvertible(a0))?;
        let members: BTreeSet<usize> = self
            .members
            .iter()
            .map(|&x| self.parent.mul(self.parent.mul(a0, x), inv))
            .collect();
        Ok(Self::from_sorted_unchecked(&self.parent, members.into_iter().collect()))
    }

    /// The submonoid as a monoid in its own right, elements indexed by
    /// position in [`members`](Self::members).
    pub fn to_monoid(&self) -> FiniteMonoid {
        let k = self.members.len();
        let mut table = Vec::with_capacity(k * k);
        for &x in &self.members {
            for &y in &self.members {
                table.push(self.position[self.parent.mul(x, y)]);
            }
        }
        let labels = self.members.iter().map(|&x| self.parent.label(x)).collect();
        FiniteMonoid::from_parts_unchecked(k, table, self.position[self.parent.identity()], Some(labels))
    }

    /// Same member set viewed inside `other_parent` (e.g. the opposite monoid).
    pub fn transplant(&self, other_parent: &FiniteMonoid) -> Result<SubMonoid> {
        SubMonoid::new(other_parent, self.members.iter().copied())
    }

    pub fn display(&self) -> String {
        let labels: Vec<String> = self.members.iter().map(|&x| self.parent.label(x)).collect();
        format!("{{{}}}", labels.join(","))
    }
}

fn close_in_place(parent: &FiniteMonoid, inside: &mut [bool], members: &mut Vec<usize>) {
    let mut queue: VecDeque<usize> = members.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            for p in [parent.mul(x, y), parent.mul(y, x)] {
                if !inside[p] {
                    inside[p] = true;
                    members.push(p);
                    queue.push_back(p);
                }
            }
            i += 1;
        }
    }
}

impl PartialEq for SubMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for SubMonoid {}

impl Hash for SubMonoid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for SubMonoid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubMonoid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl fmt::Debug for SubMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubMonoid{:?}", self.members)
    }
}

/// `U(M)`: all elements with a two-sided inverse.
pub fn units(m: &FiniteMonoid) -> SubMonoid {
    SubMonoid::whole(m).units()
}

pub fn submonoid_closure(m: &FiniteMonoid, generators: &[usize]) -> Result<SubMonoid> {
    SubMonoid::closure(m, generators.iter().copied())
}

pub fn is_subgroup(s: &SubMonoid) -> bool {
    s.is_subgroup()
}

/// Every submonoid of `m`, sorted lexicographically by member list.
///
/// Uses a scan over subsets containing the identity up to
/// [`SUBSET_SCAN_BOUND`] elements and generator-closure search above that.
pub fn enumerate_submonoids(m: &FiniteMonoid) -> Result<Vec<SubMonoid>> {
    let n = m.size();
    if n > SUBMONOID_ENUMERATION_BOUND {
        return Err(AlgebraError::SizeBoundExceeded {
            what: "submonoid enumeration",
            size: n,
            bound: SUBMONOID_ENUMERATION_BOUND,
        });
    }
    let mut out = if n <= SUBSET_SCAN_BOUND {
        submonoids_by_subset_scan(m)
    } else {
        submonoids_by_closure_search(m)
    };
    out.sort();
    Ok(out)
}

pub(crate) fn submonoids_by_subset_scan(m: &FiniteMonoid) -> Vec<SubMonoid> {
    let n = m.size();
    let e = m.identity();
    let others: Vec<usize> = m.elements().filter(|&x| x != e).collect();
    let mut out = Vec::new();
    let mut members = Vec::with_capacity(n);
    let mut inside = vec![false; n];
    for mask in 0u64..(1u64 << others.len()) {
        members.clear();
        inside.iter_mut().for_each(|b| *b = false);
        members.push(e);
        inside[e] = true;
        for (bit, &x) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                members.push(x);
                inside[x] = true;
            }
        }
        let closed = members
            .iter()
            .all(|&x| members.iter().all(|&y| inside[m.mul(x, y)]));
        if closed {
            let mut sorted = members.clone();
            sorted.sort_unstable();
            out.push(SubMonoid::from_sorted_unchecked(m, sorted));
        }
    }
    out
}

pub(crate) fn submonoids_by_closure_search(m: &FiniteMonoid) -> Vec<SubMonoid> {
    let start = SubMonoid::trivial(m);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(start.members.clone());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        for x in m.elements().filter(|&x| !s.contains(x)) {
            let bigger = SubMonoid::closure(m, s.members.iter().copied().chain([x]))
                .expect("elements are in range");
            if seen.insert(bigger.members.clone()) {
                queue.push_back(bigger);
            }
        }
        out.push(s);
    }
    out
}
