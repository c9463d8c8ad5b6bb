//! Exhaustive generation of small monoids with the identity fixed at index 0.

use crate::error::{AlgebraError, Result};
use crate::monoid::FiniteMonoid;

/// Largest order generated exhaustively.
pub const MONOID_ENUMERATION_BOUND: usize = 4;

const UNSET: usize = usize::MAX;

/// All monoid tables on `0..n` with identity `0`, in lexicographic order of
/// the flat table. With `up_to_iso`, only the lexicographically least table of
/// each isomorphism class (under permutations fixing 0) is kept.
pub fn enumerate_monoids(n: usize, up_to_iso: bool) -> Result<Vec<FiniteMonoid>> {
    if n == 0 || n > MONOID_ENUMERATION_BOUND {
        return Err(AlgebraError::SizeBoundExceeded {
            what: "monoid enumeration",
            size: n,
            bound: MONOID_ENUMERATION_BOUND,
        });
    }
    let mut table = vec![UNSET; n * n];
    for x in 0..n {
        table[x] = x;
        table[x * n] = x;
    }
    let free: Vec<usize> = (1..n).flat_map(|x| (1..n).map(move |y| x * n + y)).collect();
    let mut tables = Vec::new();
    fill(n, &mut table, &free, 0, &mut tables);

    let perms = permutations_fixing_zero(n);
    let kept: Vec<Vec<usize>> = if up_to_iso {
        tables.into_iter().filter(|t| is_canonical(n, t, &perms)).collect()
    } else {
        tables
    };
    Ok(kept
        .into_iter()
        .enumerate()
        .map(|(i, t)| FiniteMonoid::from_parts_unchecked(n, t, 0, None).with_name(format!("M{n}.{i}")))
        .collect())
}

fn fill(n: usize, table: &mut [usize], free: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    if k == free.len() {
        out.push(table.to_vec());
        return;
    }
    let slot = free[k];
    for v in 0..n {
        table[slot] = v;
        if partially_associative(n, table) {
            fill(n, table, free, k + 1, out);
        }
    }
    table[slot] = UNSET;
}

/// Associativity over every triple whose products are already determined.
fn partially_associative(n: usize, t: &[usize]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let (l, r) = (t[xy * n + z], t[x * n + yz]);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    permute(n, &mut current, &mut used, &mut out);
    out
}

fn permute(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if current.len() == n {
        out.push(current.clone());
        return;
    }
    for v in 1..n {
        if !used[v] {
            used[v] = true;
            current.push(v);
            permute(n, current, used, out);
            current.pop();
            used[v] = false;
        }
    }
}

fn is_canonical(n: usize, t: &[usize], perms: &[Vec<usize>]) -> bool {
    let mut relabeled = vec![0; n * n];
    for p in perms {
        for x in 0..n {
            for y in 0..n {
                relabeled[p[x] * n + p[y]] = p[t[x * n + y]];
            }
        }
        if relabeled.as_slice() < t {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: every table with identity row/column fixed, filtered by a full
    /// associativity check, quotiented by the permutations fixing 0.
    fn brute_force(n: usize) -> (usize, usize) {
        let free = (n - 1) * (n - 1);
        let mut all = Vec::new();
        for code in 0..n.pow(free as u32) {
            let mut t = vec![0; n * n];
            for x in 0..n {
                t[x] = x;
                t[x * n] = x;
            }
            let mut c = code;
            for x in 1..n {
                for y in 1..n {
                    t[x * n + y] = c % n;
                    c /= n;
                }
            }
            if FiniteMonoid::from_flat(n, t.clone(), None).is_ok() {
                all.push(t);
            }
        }
        let perms = permutations_fixing_zero(n);
        let mut classes: Vec<Vec<usize>> = all
            .iter()
            .map(|t| {
                perms
                    .iter()
                    .map(|p| {
                        let mut r = vec![0; n * n];
                        for x in 0..n {
                            for y in 0..n {
                                r[p[x] * n + p[y]] = p[t[x * n + y]];
                            }
                        }
                        r
                    })
                    .min()
                    .unwrap()
            })
            .collect();
        classes.sort();
        classes.dedup();
        (all.len(), classes.len())
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_monoids(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_monoids(2, false).unwrap().len(), 2);
        assert_eq!(enumerate_monoids(2, true).unwrap().len(), 2);
        assert_eq!(enumerate_monoids(3, true).unwrap().len(), 7);
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=4 {
            let (all, classes) = brute_force(n);
            assert_eq!(enumerate_monoids(n, false).unwrap().len(), all);
            assert_eq!(enumerate_monoids(n, true).unwrap().len(), classes);
        }
    }

    #[test]
    fn order_four_classes() {
        // 35 isomorphism classes of monoids of order 4.
        let ms = enumerate_monoids(4, true).unwrap();
        assert_eq!(ms.len(), 35);
        for m in &ms {
            m.check_laws().unwrap();
            assert_eq!(m.identity(), 0);
        }
        for (i, a) in ms.iter().enumerate() {
            for b in &ms[i + 1..] {
                assert!(crate::map::find_isomorphism(a, b).is_none());
            }
        }
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = enumerate_monoids(3, true).unwrap().iter().map(|m| m.rows()).collect();
        let b: Vec<_> = enumerate_monoids(3, true).unwrap().iter().map(|m| m.rows()).collect();
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted);
    }

    #[test]
    fn bound() {
        assert!(enumerate_monoids(5, false).is_err());
        assert!(enumerate_monoids(0, false).is_err());
    }
}
