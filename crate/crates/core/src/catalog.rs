//! Small named monoids used throughout the tests, the CLI and the
//! verification suite.

use crate::action::MonoidAction;
use crate::monoid::FiniteMonoid;
use crate::semidirect::SemidirectProduct;

fn build(name: &str, rows: Vec<Vec<usize>>, labels: &[&str]) -> FiniteMonoid {
    FiniteMonoid::from_table(&rows, Some(labels.iter().map(|s| s.to_string()).collect()))
        .expect("catalog tables are valid")
        .with_name(name)
}

pub fn trivial() -> FiniteMonoid {
    build("trivial", vec![vec![0]], &["e"])
}

/// Cyclic group of order `n` generated by `g` (index `k` is `g^k`).
pub fn cyclic(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    FiniteMonoid::from_table(&rows, Some(labels))
        .expect("cyclic table is valid")
        .with_name(format!("C{n}"))
}

/// Klein four-group `{e, a, b, c}`.
pub fn klein4() -> FiniteMonoid {
    let rows = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect::<Vec<_>>();
    build("V4", rows, &["e", "a", "b", "c"])
}

/// `C2` with an absorbing zero adjoined: `{1, g, 0}`.
pub fn c2_with_zero() -> FiniteMonoid {
    build("C2^0", vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]], &["1", "g", "0"])
}

/// `{1, z}` with `z` absorbing.
pub fn b2() -> FiniteMonoid {
    build("B2", vec![vec![0, 1], vec![1, 1]], &["1", "z"])
}

/// Left-zero semigroup `{x, y}` (`uv = u`) with an identity adjoined.
pub fn lz2_plus_one() -> FiniteMonoid {
    build("LZ2+1", vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]], &["1", "x", "y"])
}

/// Right-zero semigroup `{x, y}` (`uv = v`) with an identity adjoined.
pub fn rz2_plus_one() -> FiniteMonoid {
    build("RZ2+1", vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]], &["1", "x", "y"])
}

pub fn b2_times_c2() -> FiniteMonoid {
    b2().direct_product(&cyclic(2)).with_name("B2xC2")
}

/// Permutations of {1,2,3} in the order listed by [`S3_LABELS`].
const S3_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
];

pub const S3_LABELS: [&str; 6] = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];

/// The symmetric group on three points, product `(στ)(x) = σ(τ(x))`.
pub fn symmetric3() -> FiniteMonoid {
    let index = |p: [usize; 3]| S3_PERMS.iter().position(|q| *q == p).unwrap();
    let rows = S3_PERMS
        .iter()
        .map(|s| {
            S3_PERMS
                .iter()
                .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                .collect()
        })
        .collect();
    build("S3", rows, &S3_LABELS)
}

/// `C2` acting on `C3` by inversion.
pub fn inversion_action() -> MonoidAction {
    let c3 = cyclic(3);
    let c2 = cyclic(2);
    let star = vec![vec![0, 1, 2], vec![0, 2, 1]];
    MonoidAction::new(&c2, &c3, &star).expect("inversion is an action")
}

pub fn c3_semidirect_c2() -> FiniteMonoid {
    let act = inversion_action();
    SemidirectProduct::new(act.acted(), &act, act.actor())
        .expect("action matches")
        .product()
        .clone()
        .with_name("C3xiC2")
}

/// The built-in catalog in a fixed order.
pub fn all() -> Vec<FiniteMonoid> {
    vec![
        trivial(),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        klein4(),
        c2_with_zero(),
        b2(),
        lz2_plus_one(),
        b2_times_c2(),
        symmetric3(),
        c3_semidirect_c2(),
    ]
}

pub fn by_name(name: &str) -> Option<FiniteMonoid> {
    all()
        .into_iter()
        .chain([rz2_plus_one()])
        .find(|m| m.name().is_some_and(|n| n.eq_ignore_ascii_case(name)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_valid_and_named() {
        for m in all() {
            m.check_laws().unwrap();
            assert!(m.name().is_some());
            assert!(by_name(m.name().unwrap()).is_some());
        }
    }

    #[test]
    fn s3_conventions() {
        let s3 = symmetric3();
        let l = |s: &str| s3.find_label(s).unwrap();
        // Right-to-left composition: (12)(23) sends 1 -> 2, 2 -> 3, 3 -> 1.
        assert_eq!(s3.mul(l("(12)"), l("(23)")), l("(123)"));
        assert_eq!(s3.mul(l("(123)"), l("(123)")), l("(132)"));
        assert!(!s3.is_commutative());
        assert!(s3.is_group());
    }
}
