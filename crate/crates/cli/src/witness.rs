//! Bounded checks of two integer facts: every positive integer is uniquely
//! `odd · 2^k`, and addition on ℤ is not injective on pairs
//! (`(-7) + 5 = (-3) + 1`).

use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub bound: u64,
    /// Integers in `1..=bound` with exactly one decomposition.
    pub unique: u64,
    pub first_failure: Option<u64>,
    /// `(n, odd, k)` for a few sample values, including 48 when in range.
    pub samples: Vec<(u64, u64, u32)>,
    pub sum_witness: ((i64, i64), (i64, i64), i64, bool),
}

impl WitnessReport {
    pub fn passes(&self) -> bool {
        self.first_failure.is_none() && self.unique == self.bound && self.sum_witness.3
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        writeln!(s, "odd x 2^k decompositions for 1..={}: {} unique", self.bound, self.unique).unwrap();
        for (n, odd, k) in &self.samples {
            writeln!(s, "  {n} = {odd} * 2^{k}").unwrap();
        }
        if let Some(n) = self.first_failure {
            writeln!(s, "  FAIL at {n}").unwrap();
        }
        let ((a, b), (c, d), sum, ok) = self.sum_witness;
        writeln!(s, "({a}) + {b} = ({c}) + {d} = {sum}, pairs distinct: {}", if ok { "yes" } else { "no" }).unwrap();
        writeln!(s, "result: {}", if self.passes() { "PASS" } else { "FAIL" }).unwrap();
        s
    }
}

/// Every decomposition `n = odd · 2^k`, found by trying each `k` with
/// `2^k ≤ n`.
fn decompositions(n: u64) -> impl Iterator<Item = (u64, u32)> {
    (0..=n.ilog2()).filter_map(move |k| {
        let p = 1u64 << k;
        (n.is_multiple_of(p) && (n / p) % 2 == 1).then_some((n / p, k))
    })
}

pub fn integer_witnesses(bound: u64) -> WitnessReport {
    let mut unique = 0;
    let mut first_failure = None;
    for n in 1..=bound {
        let mut it = decompositions(n);
        let ok = match (it.next(), it.next()) {
            (Some((odd, k)), None) => odd << k == n && n >> n.trailing_zeros() == odd,
            _ => false,
        };
        if ok {
            unique += 1;
        } else if first_failure.is_none() {
            first_failure = Some(n);
        }
    }
    let samples = [1u64, 2, 12, 48]
        .into_iter()
        .filter(|&n| n <= bound)
        .filter_map(|n| decompositions(n).next().map(|(odd, k)| (n, odd, k)))
        .collect();
    let (p, q) = ((-7i64, 5i64), (-3i64, 1i64));
    let sum = p.0 + p.1;
    let ok = sum == q.0 + q.1 && sum == -2 && p != q;
    WitnessReport { bound, unique, first_failure, samples, sum_witness: (p, q, sum, ok) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(decompositions(1).collect::<Vec<_>>(), vec![(1, 0)]);
        assert_eq!(decompositions(48).collect::<Vec<_>>(), vec![(3, 4)]);
        let r = integer_witnesses(48);
        assert!(r.passes());
        assert!(r.samples.contains(&(48, 3, 4)));
        assert_eq!(r.sum_witness.2, -2);
    }
}
