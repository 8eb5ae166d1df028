//! Integer partitions: enumeration, counting and conjugation.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::text::Cursor;

/// A partition of `weight`: a non-increasing sequence of positive parts.
///
/// The empty partition (weight 0) is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Caller guarantees `parts` is non-increasing with no zeros.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        cur.expect(b'[')?;
        let mut parts = Vec::new();
        if !cur.eat(b']') {
            loop {
                let at = cur.position();
                let part = cur.number()?;
                if part == 0 {
                    return Err(crate::error::parse_error(at, "parts must be positive"));
                }
                parts.push(part);
                if cur.eat(b']') {
                    break;
                }
                cur.expect(b',')?;
            }
        }
        cur.finish()?;
        Partition::new(parts)
    }
}

/// Transpose of the Ferrers diagram: `result[j]` counts the parts `>= j + 1`.
pub fn conjugate(p: &Partition) -> Partition {
    let parts = (1..=p.largest())
        .map(|j| p.parts.iter().take_while(|&&part| part >= j).count())
        .collect();
    Partition::from_sorted(parts)
}

/// Streams the partitions of `n` in reverse-lexicographic order,
/// starting from `[n]` and ending at `[1,1,...,1]`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition::from_sorted(current.clone());

        // Successor: lower the rightmost part above 1 and refill greedily.
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let mut next = current;
            let ones = next.len() - i - 1;
            let v = next[i] - 1;
            next.truncate(i);
            next.push(v);
            let mut rest = ones + 1;
            while rest >= v {
                next.push(v);
                rest -= v;
            }
            if rest > 0 {
                next.push(rest);
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

/// `p(k)` for `k = 0..=n` by the pentagonal-number recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigInt> = Vec::with_capacity(n + 1);
    table.push(BigInt::from(1u32));
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = table[m - g1].clone();
            if g2 <= m {
                term += &table[m - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        debug_assert!(!acc.is_negative());
        table.push(acc);
    }
    table
        .into_iter()
        .map(|v| v.to_biguint().expect("p(n) is non-negative"))
        .collect()
}

/// `p(n)`, the number of partitions of `n`.
pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().expect("table has n + 1 entries")
}
