//! Finite monoids stored as Cayley tables.
//!
//! Elements are dense indices `0..n`. The table is validated once at
//! construction (square, in range, two-sided identity, associative) and is
//! immutable afterwards, so a [`FiniteMonoid`] is cheap to clone and safe to
//! share between threads.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};

#[derive(Debug)]
struct MonoidData {
    size: usize,
    table: Vec<usize>,
    identity: usize,
    labels: Option<Vec<String>>,
    name: Option<String>,
}

/// A validated finite monoid.
///
/// Equality compares the multiplication table and identity only; labels and
/// the display name are presentation metadata.
#[derive(Clone)]
pub struct FiniteMonoid {
    inner: Arc<MonoidData>,
}

impl FiniteMonoid {
    /// Validates a table given as rows. `table[x][y]` is the product `x*y`.
    pub fn from_table(rows: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(AlgebraError::NotSquare { rows: 0, bad_row: 0, len: 0 });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::NotSquare { rows: n, bad_row: i, len: row.len() });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat, labels)
    }

    /// Validates a row-major flat table of length `size * size`.
    pub fn from_flat(size: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if size == 0 || table.len() != size * size {
            return Err(AlgebraError::NotSquare {
                rows: size,
                bad_row: 0,
                len: if size == 0 { 0 } else { table.len() / size.max(1) },
            });
        }
        for (idx, &v) in table.iter().enumerate() {
            if v >= size {
                return Err(AlgebraError::IndexOutOfRange {
                    row: idx / size,
                    col: idx % size,
                    value: v,
                    size,
                });
            }
        }
        if let Some(l) = &labels {
            if l.len() != size {
                return Err(AlgebraError::LabelCount { expected: size, got: l.len() });
            }
        }
        let mul = |x: usize, y: usize| table[x * size + y];
        let identities: Vec<usize> = (0..size)
            .filter(|&e| (0..size).all(|x| mul(e, x) == x && mul(x, e) == x))
            .collect();
        // Two identities e, e' would satisfy e = e*e' = e'.
        debug_assert!(identities.len() <= 1);
        let identity = *identities.first().ok_or(AlgebraError::NoIdentity)?;
        if let Some((x, y, z)) = first_non_associative(size, &table) {
            return Err(AlgebraError::NotAssociative { x, y, z });
        }
        Ok(Self::from_parts_unchecked(size, table, identity, labels))
    }

    /// Builds a monoid whose table is already known to be valid.
    pub(crate) fn from_parts_unchecked(
        size: usize,
        table: Vec<usize>,
        identity: usize,
        labels: Option<Vec<String>>,
    ) -> Self {
        FiniteMonoid {
            inner: Arc::new(MonoidData { size, table, identity, labels, name: None }),
        }
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        let d = &self.inner;
        FiniteMonoid {
            inner: Arc::new(MonoidData {
                size: d.size,
                table: d.table.clone(),
                identity: d.identity,
                labels: d.labels.clone(),
                name: Some(name.into()),
            }),
        }
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Self> {
        let d = &self.inner;
        if labels.len() != d.size {
            return Err(AlgebraError::LabelCount { expected: d.size, got: labels.len() });
        }
        Ok(FiniteMonoid {
            inner: Arc::new(MonoidData {
                size: d.size,
                table: d.table.clone(),
                identity: d.identity,
                labels: Some(labels),
                name: d.name.clone(),
            }),
        })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.inner.size
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.inner.table[x * self.inner.size + y]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.size
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.inner.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.inner.table.chunks(self.inner.size).map(|r| r.to_vec()).collect()
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.inner.labels.as_deref()
    }

    /// Display label of `x`, falling back to its index.
    pub fn label(&self, x: usize) -> String {
        match &self.inner.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.inner.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.size() {
            Ok(())
        } else {
            Err(AlgebraError::ElementOutOfRange { value: x, size: self.size() })
        }
    }

    /// The two-sided inverse of `x`, if any.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        let e = self.identity();
        self.elements().find(|&y| self.mul(x, y) == e && self.mul(y, x) == e)
    }

    pub fn is_invertible(&self, x: usize) -> bool {
        self.inverse(x).is_some()
    }

    pub fn is_group(&self) -> bool {
        self.elements().all(|x| self.is_invertible(x))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| (x + 1..self.size()).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Conical: the identity is the only invertible element.
    pub fn is_conical(&self) -> bool {
        self.elements().filter(|&x| self.is_invertible(x)).count() == 1
    }

    /// Re-checks the monoid laws on every element and triple.
    pub fn check_laws(&self) -> Result<()> {
        let e = self.identity();
        if !self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x) {
            return Err(AlgebraError::NoIdentity);
        }
        match first_non_associative(self.size(), self.flat_table()) {
            Some((x, y, z)) => Err(AlgebraError::NotAssociative { x, y, z }),
            None => Ok(()),
        }
    }

    /// The opposite monoid: same carrier, `x *op y = y * x`.
    pub fn opposite(&self) -> FiniteMonoid {
        let n = self.size();
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = self.mul(y, x);
            }
        }
        let mut m = Self::from_parts_unchecked(n, table, self.identity(), self.inner.labels.clone());
        if let Some(name) = self.name() {
            m = m.with_name(format!("{name}^op"));
        }
        m
    }

    /// Direct product, carrier ordered row-major `(x, y) ↦ x * |other| + y`.
    pub fn direct_product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let (n, k) = (self.size(), other.size());
        let size = n * k;
        let mut table = vec![0; size * size];
        for x1 in 0..n {
            for y1 in 0..k {
                for x2 in 0..n {
                    for y2 in 0..k {
                        table[(x1 * k + y1) * size + x2 * k + y2] =
                            self.mul(x1, x2) * k + other.mul(y1, y2);
                    }
                }
            }
        }
        let labels = (0..size)
            .map(|i| format!("({},{})", self.label(i / k), other.label(i % k)))
            .collect();
        Self::from_parts_unchecked(size, table, self.identity() * k + other.identity(), Some(labels))
    }

    /// Relabels the carrier along a permutation: element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<FiniteMonoid> {
        let n = self.size();
        let mut inv = vec![usize::MAX; n];
        for (x, &px) in perm.iter().enumerate() {
            self.check_element(px)?;
            inv[px] = x;
        }
        if perm.len() != n || inv.contains(&usize::MAX) {
            return Err(AlgebraError::NotAMap("relabeling is not a permutation".into()));
        }
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        let labels = self
            .inner
            .labels
            .as_ref()
            .map(|l| (0..n).map(|i| l[inv[i]].clone()).collect());
        Ok(Self::from_parts_unchecked(n, table, perm[self.identity()], labels))
    }
}

fn first_non_associative(n: usize, table: &[usize]) -> Option<(usize, usize, usize)> {
    for x in 0..n {
        for y in 0..n {
            let xy = table[x * n + y];
            for z in 0..n {
                if table[xy * n + z] != table[x * n + table[y * n + z]] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.size == other.inner.size
                && self.inner.identity == other.inner.identity
                && self.inner.table == other.inner.table)
    }
}

impl Eq for FiniteMonoid {}

impl std::hash::Hash for FiniteMonoid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.size.hash(state);
        self.inner.identity.hash(state);
        self.inner.table.hash(state);
    }
}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("name", &self.inner.name)
            .field("size", &self.inner.size)
            .field("identity", &self.inner.identity)
            .field("table", &self.rows())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_monoid() {
        let m = FiniteMonoid::from_table(&[vec![0]], None).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.identity(), 0);
    }

    #[test]
    fn cyclic_two() {
        let m = FiniteMonoid::from_table(&[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(m.identity(), 0);
        assert!(m.is_group());
    }

    #[test]
    fn two_element_with_zero() {
        let m = FiniteMonoid::from_table(&[vec![0, 1], vec![1, 1]], None).unwrap();
        assert_eq!(m.identity(), 0);
        assert!(!m.is_group());
        assert!(m.is_conical());
    }

    #[test]
    fn identity_need_not_be_zero() {
        let m = FiniteMonoid::from_table(&[vec![0, 0], vec![0, 1]], None).unwrap();
        assert_eq!(m.identity(), 1);
    }

    #[test]
    fn rejects_out_of_range() {
        let err = FiniteMonoid::from_table(&[vec![0, 1], vec![1, 2]], None).unwrap_err();
        assert_eq!(err, AlgebraError::IndexOutOfRange { row: 1, col: 1, value: 2, size: 2 });
    }

    #[test]
    fn rejects_missing_identity() {
        let err = FiniteMonoid::from_table(&[vec![1, 1], vec![1, 1]], None).unwrap_err();
        assert_eq!(err, AlgebraError::NoIdentity);
    }

    #[test]
    fn rejects_non_associative_with_witness() {
        // Identity 0; on {1,2}: 1*1=2, 1*2=1, 2*1=2, 2*2=2.
        let rows = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]];
        match FiniteMonoid::from_table(&rows, None).unwrap_err() {
            AlgebraError::NotAssociative { x, y, z } => {
                let t = |a: usize, b: usize| rows[a][b];
                assert_ne!(t(t(x, y), z), t(x, t(y, z)));
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn rejects_ragged() {
        assert!(matches!(
            FiniteMonoid::from_table(&[vec![0, 1], vec![1]], None),
            Err(AlgebraError::NotSquare { .. })
        ));
        assert!(FiniteMonoid::from_table(&[], None).is_err());
    }

    #[test]
    fn opposite_is_involution() {
        let lz = FiniteMonoid::from_table(&[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]], None).unwrap();
        let op = lz.opposite();
        assert_ne!(op, lz);
        // Right-zero semigroup with identity adjoined.
        assert_eq!(op.rows(), vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]]);
        assert_eq!(op.opposite(), lz);
    }
}
