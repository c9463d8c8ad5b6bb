//! Total maps between (sub)monoids, homomorphism search and isomorphism search.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{AlgebraError, Result};
use crate::monoid::FiniteMonoid;
use crate::submonoid::SubMonoid;

/// Exhaustive hom/endomorphism search bound on the domain size.
pub const HOM_DOMAIN_BOUND: usize = 8;

const UNSET: usize = usize::MAX;

/// A total map from the members of `domain` to members of `codomain`.
///
/// Values are parent-monoid indices, stored in the order of
/// `domain.members()`. Whole monoids are handled as [`SubMonoid::whole`].
#[derive(Clone)]
pub struct ElementMap {
    domain: SubMonoid,
    codomain: SubMonoid,
    values: Vec<usize>,
}

impl ElementMap {
    pub fn new(domain: &SubMonoid, codomain: &SubMonoid, values: Vec<usize>) -> Result<Self> {
        if values.len() != domain.len() {
            return Err(AlgebraError::NotAMap(format!(
                "{} values for a domain of {} elements",
                values.len(),
                domain.len()
            )));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, &v)| !codomain.contains(v)) {
            return Err(AlgebraError::NotAMap(format!(
                "image {v} of {} lies outside the codomain",
                domain.members()[i]
            )));
        }
        Ok(Self::new_unchecked(domain, codomain, values))
    }

    pub(crate) fn new_unchecked(domain: &SubMonoid, codomain: &SubMonoid, values: Vec<usize>) -> Self {
        ElementMap { domain: domain.clone(), codomain: codomain.clone(), values }
    }

    pub fn from_fn(domain: &SubMonoid, codomain: &SubMonoid, f: impl Fn(usize) -> usize) -> Result<Self> {
        let values = domain.members().iter().map(|&x| f(x)).collect();
        Self::new(domain, codomain, values)
    }

    /// `0_{D,C}`: everything goes to the identity.
    pub fn zero(domain: &SubMonoid, codomain: &SubMonoid) -> Self {
        Self::new_unchecked(domain, codomain, vec![codomain.identity(); domain.len()])
    }

    pub fn identity(on: &SubMonoid) -> Self {
        Self::new_unchecked(on, on, on.members().to_vec())
    }

    /// Inclusion of `sub` into `sup`.
    pub fn inclusion(sub: &SubMonoid, sup: &SubMonoid) -> Result<Self> {
        Self::new(sub, sup, sub.members().to_vec())
    }

    pub fn domain(&self) -> &SubMonoid {
        &self.domain
    }

    pub fn codomain(&self) -> &SubMonoid {
        &self.codomain
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Image of the domain element `x` (a parent index).
    ///
    /// Panics if `x` is not in the domain.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        let p = self
            .domain
            .position(x)
            .unwrap_or_else(|| panic!("{x} is not in the domain of this map"));
        self.values[p]
    }

    pub fn try_apply(&self, x: usize) -> Option<usize> {
        self.domain.position(x).map(|p| self.values[p])
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ElementMap) -> Result<ElementMap> {
        let values = inner
            .domain
            .members()
            .iter()
            .map(|&x| {
                self.try_apply(inner.apply(x))
                    .ok_or_else(|| AlgebraError::NotAMap("composition leaves the domain".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ElementMap::new_unchecked(&inner.domain, &self.codomain, values))
    }

    /// The first failure of the homomorphism laws, if any.
    pub fn homomorphism_violation(&self) -> Option<String> {
        let dm = self.domain.parent();
        let cm = self.codomain.parent();
        if self.apply(dm.identity()) != cm.identity() {
            return Some("identity is not preserved".into());
        }
        for &x in self.domain.members() {
            for &y in self.domain.members() {
                let lhs = self.apply(dm.mul(x, y));
                let rhs = cm.mul(self.apply(x), self.apply(y));
                if lhs != rhs {
                    return Some(format!("f({x}*{y}) = {lhs} but f({x})*f({y}) = {rhs}"));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_violation().is_none()
    }

    /// Domain elements sent to the codomain identity.
    pub fn kernel(&self) -> Vec<usize> {
        let e = self.codomain.identity();
        self.domain
            .members()
            .iter()
            .zip(&self.values)
            .filter(|(_, &v)| v == e)
            .map(|(&x, _)| x)
            .collect()
    }

    pub fn kernel_submonoid(&self) -> Result<SubMonoid> {
        SubMonoid::new(self.domain.parent(), self.kernel())
    }

    /// Set image of the map, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.values.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.image().len() == self.codomain.len()
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<ElementMap> {
        if !self.is_bijective() {
            return None;
        }
        let values = self
            .codomain
            .members()
            .iter()
            .map(|&y| {
                let p = self.values.iter().position(|&v| v == y).unwrap();
                self.domain.members()[p]
            })
            .collect();
        Some(ElementMap::new_unchecked(&self.codomain, &self.domain, values))
    }

    /// `K[f]`: pairs of domain elements with equal images.
    pub fn kernel_pair(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &x) in self.domain.members().iter().enumerate() {
            for (j, &y) in self.domain.members().iter().enumerate() {
                if self.values[i] == self.values[j] {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn display(&self) -> String {
        let dm = self.domain.parent();
        let cm = self.codomain.parent();
        let parts: Vec<String> = self
            .domain
            .members()
            .iter()
            .zip(&self.values)
            .map(|(&x, &v)| format!("{}->{}", dm.label(x), cm.label(v)))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

impl PartialEq for ElementMap {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && self.domain == other.domain && self.codomain == other.codomain
    }
}

impl Eq for ElementMap {}

impl Hash for ElementMap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl PartialOrd for ElementMap {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementMap {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.values.cmp(&other.values)
    }
}

impl fmt::Debug for ElementMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementMap{:?}", self.values)
    }
}

/// A pair of mutually inverse homomorphisms.
#[derive(Clone, Debug)]
pub struct MonoidIso {
    pub forward: ElementMap,
    pub backward: ElementMap,
}

impl MonoidIso {
    pub fn from_forward(forward: ElementMap) -> Result<Self> {
        if let Some(v) = forward.homomorphism_violation() {
            return Err(AlgebraError::NotAHomomorphism(v));
        }
        let backward = forward
            .inverse()
            .ok_or_else(|| AlgebraError::NotAMap("forward map is not bijective".into()))?;
        Ok(MonoidIso { forward, backward })
    }

    /// Checks that both maps are homomorphisms and mutually inverse.
    pub fn is_valid(&self) -> bool {
        self.forward.is_homomorphism()
            && self.backward.is_homomorphism()
            && self
                .forward
                .domain()
                .members()
                .iter()
                .all(|&x| self.backward.try_apply(self.forward.apply(x)) == Some(x))
            && self
                .backward
                .domain()
                .members()
                .iter()
                .all(|&y| self.forward.try_apply(self.backward.apply(y)) == Some(y))
    }
}

/// All identity-preserving multiplicative maps `domain → codomain`, in
/// lexicographic order of their value tables.
pub fn enumerate_homs(domain: &SubMonoid, codomain: &SubMonoid) -> Result<Vec<ElementMap>> {
    if domain.len() > HOM_DOMAIN_BOUND {
        return Err(AlgebraError::SizeBoundExceeded {
            what: "homomorphism enumeration",
            size: domain.len(),
            bound: HOM_DOMAIN_BOUND,
        });
    }
    let search = HomSearch { domain, codomain };
    let mut vals = vec![UNSET; domain.len()];
    vals[domain.position(domain.identity()).unwrap()] = codomain.identity();
    let mut out = Vec::new();
    if search.propagate(&mut vals) {
        search.extend(vals, &mut out);
    }
    Ok(out)
}

struct HomSearch<'a> {
    domain: &'a SubMonoid,
    codomain: &'a SubMonoid,
}

impl HomSearch<'_> {
    /// Forces `f(xy) = f(x) f(y)` for assigned pairs until fixpoint.
    fn propagate(&self, vals: &mut [usize]) -> bool {
        let dm = self.domain.parent();
        let cm = self.codomain.parent();
        let members = self.domain.members();
        loop {
            let mut changed = false;
            for (i, &x) in members.iter().enumerate() {
                if vals[i] == UNSET {
                    continue;
                }
                for (j, &y) in members.iter().enumerate() {
                    if vals[j] == UNSET {
                        continue;
                    }
                    let k = self.domain.position(dm.mul(x, y)).unwrap();
                    let want = cm.mul(vals[i], vals[j]);
                    if vals[k] == UNSET {
                        if !self.codomain.contains(want) {
                            return false;
                        }
                        vals[k] = want;
                        changed = true;
                    } else if vals[k] != want {
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn extend(&self, vals: Vec<usize>, out: &mut Vec<ElementMap>) {
        match vals.iter().position(|&v| v == UNSET) {
            None => out.push(ElementMap::new_unchecked(self.domain, self.codomain, vals)),
            Some(slot) => {
                for &c in self.codomain.members() {
                    let mut next = vals.clone();
                    next[slot] = c;
                    if self.propagate(&mut next) {
                        self.extend(next, out);
                    }
                }
            }
        }
    }
}

/// Searches for an isomorphism `m → n`, returning the lexicographically least
/// bijection (as a value table) when several exist.
pub fn find_isomorphism(m: &FiniteMonoid, n: &FiniteMonoid) -> Option<MonoidIso> {
    if m.size() != n.size() {
        return None;
    }
    let unit_count = |x: &FiniteMonoid| x.elements().filter(|&e| x.is_invertible(e)).count();
    let idem_count = |x: &FiniteMonoid| x.elements().filter(|&e| x.mul(e, e) == e).count();
    if unit_count(m) != unit_count(n)
        || idem_count(m) != idem_count(n)
        || m.is_commutative() != n.is_commutative()
    {
        return None;
    }
    let size = m.size();
    let mut forward = vec![UNSET; size];
    let mut used = vec![false; size];
    if !iso_search(m, n, 0, &mut forward, &mut used) {
        return None;
    }
    let dom = SubMonoid::whole(m);
    let cod = SubMonoid::whole(n);
    let f = ElementMap::new_unchecked(&dom, &cod, forward);
    let b = f.inverse().expect("search produces a bijection");
    Some(MonoidIso { forward: f, backward: b })
}

fn iso_search(m: &FiniteMonoid, n: &FiniteMonoid, x: usize, f: &mut [usize], used: &mut [bool]) -> bool {
    if x == m.size() {
        return true;
    }
    for y in n.elements() {
        if used[y] || (x == m.identity()) != (y == n.identity()) {
            continue;
        }
        f[x] = y;
        used[y] = true;
        if partial_hom_ok(m, n, f, x) && iso_search(m, n, x + 1, f, used) {
            return true;
        }
        used[y] = false;
        f[x] = UNSET;
    }
    false
}

/// Checks every product involving the newly assigned `x` whose factors and
/// result are all assigned.
fn partial_hom_ok(m: &FiniteMonoid, n: &FiniteMonoid, f: &[usize], x: usize) -> bool {
    for y in 0..=x {
        for (a, b) in [(x, y), (y, x)] {
            let p = f[m.mul(a, b)];
            if p != UNSET && p != n.mul(f[a], f[b]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn whole(m: &FiniteMonoid) -> SubMonoid {
        SubMonoid::whole(m)
    }

    /// Oracle: test every map with `f(1)=1` for multiplicativity.
    fn brute_force_homs(d: &FiniteMonoid, c: &FiniteMonoid) -> Vec<Vec<usize>> {
        let n = d.size();
        let k = c.size();
        let mut out = Vec::new();
        let total = k.pow(n as u32);
        for code in 0..total {
            let f: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
            if f[d.identity()] != c.identity() {
                continue;
            }
            if d.elements().all(|x| d.elements().all(|y| f[d.mul(x, y)] == c.mul(f[x], f[y]))) {
                out.push(f);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn hom_examples() {
        let c2 = catalog::cyclic(2);
        let c3 = catalog::cyclic(3);
        let s3 = catalog::symmetric3();
        let homs = enumerate_homs(&whole(&c2), &whole(&c3)).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0], ElementMap::zero(&whole(&c2), &whole(&c3)));
        assert_eq!(enumerate_homs(&whole(&c2), &whole(&s3)).unwrap().len(), 4);
        let t = catalog::trivial();
        assert_eq!(enumerate_homs(&whole(&s3), &whole(&t)).unwrap().len(), 1);
    }

    #[test]
    fn homs_match_brute_force_on_catalog() {
        let small: Vec<_> = catalog::all().into_iter().filter(|m| m.size() <= 4).collect();
        for d in &small {
            for c in &small {
                let got: Vec<Vec<usize>> = enumerate_homs(&whole(d), &whole(c))
                    .unwrap()
                    .into_iter()
                    .map(|h| h.values().to_vec())
                    .collect();
                assert_eq!(got, brute_force_homs(d, c), "{:?} -> {:?}", d.name(), c.name());
            }
        }
    }

    #[test]
    fn hom_bound() {
        let c9 = catalog::cyclic(9);
        assert!(matches!(
            enumerate_homs(&whole(&c9), &whole(&c9)),
            Err(AlgebraError::SizeBoundExceeded { .. })
        ));
    }

    #[test]
    fn isomorphism_examples() {
        let c2 = catalog::cyclic(2);
        let b2 = catalog::b2();
        assert!(find_isomorphism(&c2, &b2).is_none());
        let s3 = catalog::symmetric3();
        let id = find_isomorphism(&s3, &s3).unwrap();
        assert_eq!(id.forward.values(), &[0, 1, 2, 3, 4, 5]);
        let sd = catalog::c3_semidirect_c2();
        let iso = find_isomorphism(&sd, &s3).unwrap();
        assert!(iso.is_valid());
        // The opposite of S3 is isomorphic to S3 (via inversion).
        assert!(find_isomorphism(&s3.opposite(), &s3).is_some());
        // LZ2+1 and its opposite are not isomorphic.
        assert!(find_isomorphism(&catalog::lz2_plus_one(), &catalog::rz2_plus_one()).is_none());
    }

    #[test]
    fn kernel_and_image() {
        let s3 = catalog::symmetric3();
        let c2 = catalog::cyclic(2);
        let sign = ElementMap::new(&whole(&s3), &whole(&c2), vec![0, 1, 1, 1, 0, 0]).unwrap();
        assert!(sign.is_homomorphism());
        assert_eq!(sign.kernel(), vec![0, 4, 5]);
        assert_eq!(sign.image(), vec![0, 1]);
        assert!(!sign.is_injective());
    }

    #[test]
    fn new_rejects_bad_values() {
        let c2 = catalog::cyclic(2);
        assert!(ElementMap::new(&whole(&c2), &whole(&c2), vec![0]).is_err());
        let triv = SubMonoid::trivial(&c2);
        assert!(ElementMap::new(&whole(&c2), &triv, vec![0, 1]).is_err());
    }
}
