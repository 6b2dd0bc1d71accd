//! Integer partitions, centralizer orders, and elementary number theory.

use num::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// A partition of a nonnegative integer: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Build a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_exponential(&self) -> ExponentialForm {
        let mut multiplicities = BTreeMap::new();
        for &p in &self.parts {
            *multiplicities.entry(p).or_insert(0u32) += 1;
        }
        ExponentialForm { multiplicities }
    }

    /// Concatenation of parts: the product rule for power sums.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Every part multiplied by `k`.
    pub fn stretch(&self, k: u32) -> Partition {
        assert!(k >= 1);
        Partition::new(self.parts.iter().map(|&p| p * k).collect())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", strs.join(","))
    }
}

/// Exponential notation `(1^{m_1}, 2^{m_2}, ...)` for a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialForm {
    multiplicities: BTreeMap<u32, u32>,
}

impl ExponentialForm {
    /// Multiplicity of the part size `j`.
    pub fn multiplicity(&self, j: u32) -> u32 {
        self.multiplicities.get(&j).copied().unwrap_or(0)
    }

    /// Iterate over `(part size, multiplicity)` with nonzero multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.multiplicities.iter().map(|(&j, &m)| (j, m))
    }

    /// `l(lambda) = sum_j m_j`, the number of parts.
    pub fn length(&self) -> u32 {
        self.multiplicities.values().sum()
    }

    /// `c_lambda`: the number of distinct part sizes.
    pub fn support_count(&self) -> u32 {
        self.multiplicities.len() as u32
    }

    pub fn n(&self) -> u32 {
        self.multiplicities.iter().map(|(&j, &m)| j * m).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&j, &m) in self.multiplicities.iter().rev() {
            for _ in 0..m {
                parts.push(j);
            }
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
            n: current.iter().sum(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// Centralizer order `z_lambda = prod_j j^{m_j} m_j!`.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::from(1u32);
    for (j, m) in lambda.to_exponential().iter() {
        for _ in 0..m {
            z *= BigInt::from(j);
        }
        for i in 1..=m {
            z *= BigInt::from(i);
        }
    }
    z
}

/// Number-theoretic Moebius function.
pub fn moebius(d: u64) -> i64 {
    assert!(d >= 1);
    let mut d = d;
    let mut sign = 1i64;
    let mut p = 2u64;
    while p * p <= d {
        if d % p == 0 {
            d /= p;
            if d % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    sign
}

/// All divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;
    use num::Zero;

    /// Independent partition counter: p(n, k) = partitions of n with parts <= k.
    fn count_partitions(n: usize) -> u64 {
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for k in 0..=n {
            table[0][k] = 1;
        }
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if m >= k { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let p3: Vec<Vec<u32>> = partitions_of(3).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn partition_counts_match_recurrence() {
        assert_eq!(partitions_of(8).len(), 22);
        for n in 0..=20 {
            assert_eq!(partitions_of(n).len() as u64, count_partitions(n as usize));
        }
    }

    #[test]
    fn reverse_lex_order() {
        for n in 1..=10 {
            let ps = partitions_of(n);
            for w in ps.windows(2) {
                assert!(w[0].parts() > w[1].parts(), "{:?} !> {:?}", w[0], w[1]);
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&Partition::new(vec![1, 1, 1])), BigInt::from(6));
        assert_eq!(z_of(&Partition::new(vec![2, 1])), BigInt::from(2));
        assert_eq!(z_of(&Partition::new(vec![6])), BigInt::from(6));
    }

    #[test]
    fn sum_of_class_sizes_is_factorial() {
        // sum over lambda of n!/z_lambda counts all permutations of S_n.
        for n in 0..=30u32 {
            let mut fact = BigInt::from(1u32);
            for i in 1..=n {
                fact *= BigInt::from(i);
            }
            let mut total = BigInt::zero();
            for lam in partitions_of(n) {
                let z = z_of(&lam);
                assert!((&fact % &z).is_zero());
                total += &fact / z;
            }
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn exponential_round_trip() {
        for n in 0..=20 {
            for lam in partitions_of(n) {
                let e = lam.to_exponential();
                assert_eq!(e.n(), n);
                assert_eq!(e.length(), lam.len());
                assert_eq!(e.to_partition(), lam);
            }
        }
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
    }

    #[test]
    fn moebius_divisor_sum() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        for n in 2..=1000u64 {
            let s: i64 = divisors(n).iter().map(|&d| moebius(d)).sum();
            assert_eq!(s, 0, "n = {n}");
        }
        assert_eq!(divisors(1).iter().map(|&d| moebius(d)).sum::<i64>(), 1);
    }
}
