//! `End(A)` as a finite monoid under composition.

use crate::error::Result;
use crate::map::{enumerate_homs, ElementMap};
use crate::monoid::FiniteMonoid;
use crate::submonoid::SubMonoid;

#[derive(Clone, Debug)]
pub struct EndomorphismMonoid {
    /// Element `i` is `maps[i]`; the product is `maps[i] ∘ maps[j]`.
    pub monoid: FiniteMonoid,
    pub maps: Vec<ElementMap>,
}

impl EndomorphismMonoid {
    pub fn index_of(&self, f: &ElementMap) -> Option<usize> {
        self.maps.binary_search(f).ok()
    }
}

pub fn endomorphism_monoid(a: &FiniteMonoid) -> Result<EndomorphismMonoid> {
    let whole = SubMonoid::whole(a);
    let maps = enumerate_homs(&whole, &whole)?;
    let k = maps.len();
    let mut table = Vec::with_capacity(k * k);
    for f in &maps {
        for g in &maps {
            let fg = f.compose(g)?;
            table.push(maps.binary_search(&fg).expect("End(A) is closed under composition"));
        }
    }
    let id = ElementMap::identity(&whole);
    let identity = maps.binary_search(&id).expect("identity is an endomorphism");
    let labels = (0..k).map(|i| format!("f{i}")).collect();
    let name = format!("End({})", a.name().unwrap_or("A"));
    Ok(EndomorphismMonoid {
        monoid: FiniteMonoid::from_parts_unchecked(k, table, identity, Some(labels)).with_name(name),
        maps,
    })
}
