//! Action groupoids `X // G` of a finite group acting on a finite object set,
//! and the orbit partitions built from them.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{AlgebraError, Result};
use crate::submonoid::SubMonoid;

/// A morphism `element: objects[source] → objects[target]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub source: usize,
    pub element: usize,
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct ActionGroupoid<T> {
    pub objects: Vec<T>,
    pub acting_group: SubMonoid,
    /// Every `(x, g, g·x)`, ordered by source then group element.
    pub morphisms: Vec<Morphism>,
    /// Connected components as sorted object indices, ordered by their least
    /// member.
    pub components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl<T> ActionGroupoid<T> {
    pub fn component_of(&self, object: usize) -> usize {
        self.component_of[object]
    }

    /// Number of connected components, `|π₀|`.
    pub fn num_components(&self) -> usize {
        self.components.len()
    }
}

/// Builds `objects // G` for `G = acting_group`, checking that `action` is a
/// group action on `objects`: closure, `1·x = x` and `g·(h·x) = (gh)·x`.
pub fn groupoid_components<T, F>(objects: Vec<T>, acting_group: &SubMonoid, action: F) -> Result<ActionGroupoid<T>>
where
    T: Eq + Hash + Clone,
    F: Fn(usize, &T) -> Result<T>,
{
    if !acting_group.is_subgroup() {
        return Err(AlgebraError::NotAnAction("acting submonoid is not a group".into()));
    }
    let index: HashMap<&T, usize> = objects.iter().enumerate().map(|(i, x)| (x, i)).collect();
    if index.len() != objects.len() {
        return Err(AlgebraError::NotAnAction("objects are not distinct".into()));
    }
    let group = acting_group.members();
    let g = acting_group.parent();
    // act[k][i] = index of group[k]·objects[i]
    let mut act = vec![vec![0; objects.len()]; group.len()];
    for (k, &x) in group.iter().enumerate() {
        for (i, obj) in objects.iter().enumerate() {
            let image = action(x, obj)?;
            act[k][i] = *index
                .get(&image)
                .ok_or_else(|| AlgebraError::NotAnAction(format!("element {x} moves object {i} outside the set")))?;
        }
    }
    let e = acting_group.position(g.identity()).expect("subgroup contains the identity");
    if let Some(i) = (0..objects.len()).find(|&i| act[e][i] != i) {
        return Err(AlgebraError::NotAnAction(format!("identity moves object {i}")));
    }
    for (k1, &x) in group.iter().enumerate() {
        for (k2, &y) in group.iter().enumerate() {
            let k12 = acting_group.position(g.mul(x, y)).expect("subgroup is closed");
            for i in 0..objects.len() {
                if act[k1][act[k2][i]] != act[k12][i] {
                    return Err(AlgebraError::NotAnAction(format!(
                        "{x}·({y}·object {i}) differs from ({x}{y})·object {i}"
                    )));
                }
            }
        }
    }

    let mut morphisms = Vec::with_capacity(group.len() * objects.len());
    #[allow(clippy::needless_range_loop)]
    for i in 0..objects.len() {
        for (k, &x) in group.iter().enumerate() {
            morphisms.push(Morphism { source: i, element: x, target: act[k][i] });
        }
    }
    let mut component_of = vec![usize::MAX; objects.len()];
    let mut components = Vec::new();
    for start in 0..objects.len() {
        if component_of[start] != usize::MAX {
            continue;
        }
        // A group orbit is the set of images of one point.
        let c = components.len();
        let mut members: Vec<usize> = act.iter().map(|row| row[start]).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            component_of[m] = c;
        }
        components.push(members);
    }
    Ok(ActionGroupoid { objects, acting_group: acting_group.clone(), morphisms, components, component_of })
}

/// Orbit classes with replayable witnesses.
#[derive(Clone, Debug)]
pub struct CohomologyClasses<T> {
    pub objects: Vec<T>,
    pub class_of: Vec<usize>,
    /// Object indices per class; the first entry is the representative.
    pub classes: Vec<Vec<usize>>,
    /// `witnesses[i]` is a group element carrying the representative of
    /// `class_of[i]` to object `i`.
    pub witnesses: Vec<usize>,
    /// Index of the distinguished object, when the set is pointed.
    pub base_point: Option<usize>,
}

impl<T> CohomologyClasses<T> {
    pub fn from_groupoid(groupoid: ActionGroupoid<T>) -> Self {
        let mut witnesses = vec![usize::MAX; groupoid.objects.len()];
        for class in &groupoid.components {
            let rep = class[0];
            for mor in groupoid.morphisms.iter().filter(|m| m.source == rep) {
                if witnesses[mor.target] == usize::MAX {
                    witnesses[mor.target] = mor.element;
                }
            }
        }
        CohomologyClasses {
            class_of: groupoid.component_of,
            classes: groupoid.components,
            objects: groupoid.objects,
            witnesses,
            base_point: None,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &T> + '_ {
        self.classes.iter().map(|c| &self.objects[c[0]])
    }

    /// Class of the base point, if pointed.
    pub fn base_class(&self) -> Option<usize> {
        self.base_point.map(|b| self.class_of[b])
    }
}

impl<T: PartialEq> CohomologyClasses<T> {
    /// Points the set at `object`; returns `false` if it is not an object.
    pub fn set_base_point(&mut self, object: &T) -> bool {
        self.base_point = self.objects.iter().position(|o| o == object);
        self.base_point.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_group_gives_singletons() {
        let c3 = catalog::cyclic(3);
        let t = SubMonoid::trivial(&c3);
        let g = groupoid_components(vec!['a', 'b', 'c'], &t, |_, x| Ok(*x)).unwrap();
        assert_eq!(g.components, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(g.morphisms.len(), 3);
    }

    #[test]
    fn rotation_is_one_orbit() {
        let c3 = catalog::cyclic(3);
        let whole = SubMonoid::whole(&c3);
        let g = groupoid_components(vec![0usize, 1, 2], &whole, |k, x| Ok((x + k) % 3)).unwrap();
        assert_eq!(g.num_components(), 1);
        let classes = CohomologyClasses::from_groupoid(g);
        assert_eq!(classes.witnesses, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_non_actions() {
        let c3 = catalog::cyclic(3);
        let whole = SubMonoid::whole(&c3);
        // Not closed.
        assert!(groupoid_components(vec![0usize, 1], &whole, |k, x| Ok((x + k) % 3)).is_err());
        // Identity acts non-trivially.
        assert!(groupoid_components(vec![0usize, 1, 2], &whole, |_, x| Ok((x + 1) % 3)).is_err());
        let b2 = catalog::b2();
        assert!(groupoid_components(vec![0usize], &SubMonoid::whole(&b2), |_, x| Ok(*x)).is_err());
    }
}
