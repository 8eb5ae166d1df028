//! Segre characteristics: Jordan block sizes grouped by eigenvalue.
//!
//! A characteristic of total weight `n` is a multiset of non-empty
//! partitions whose weights add up to `n`. The number of them is `P(n)`,
//! the partitions-of-partitions number, computed here two independent ways:
//! as a coefficient of `∏ (1 - x^k)^(-p(k))` and as a sum over partitions
//! `a` of `n` of the number of ways to split every part of `a` further.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{parse_error, Error, Result};
use crate::partitions::{enumerate_partitions, partition_counts, Partition, Partitions};
use crate::text::Cursor;

/// Groups of Jordan block sizes, one group per distinct eigenvalue.
///
/// Groups are kept in the order they were given (a [`JordanSpec`] pairs
/// them positionally with eigenvalues), but equality, hashing and ordering
/// all work on the canonical form: groups sorted by descending weight, ties
/// broken by descending lexicographic order of parts.
///
/// [`JordanSpec`]: crate::jordan::JordanSpec
#[derive(Debug, Clone)]
pub struct SegreCharacteristic {
    groups: Vec<Partition>,
    total_weight: usize,
}

/// The canonical group order: heavier groups first, then lexicographically larger.
fn group_order(a: &Partition, b: &Partition) -> Ordering {
    b.weight()
        .cmp(&a.weight())
        .then_with(|| b.parts().cmp(a.parts()))
}

impl SegreCharacteristic {
    pub fn new(groups: Vec<Partition>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::NoGroups);
        }
        if groups.iter().any(Partition::is_empty) {
            return Err(Error::EmptyGroup);
        }
        let total_weight = groups.iter().map(Partition::weight).sum();
        Ok(SegreCharacteristic {
            groups,
            total_weight,
        })
    }

    /// Groups in construction order.
    pub fn groups(&self) -> &[Partition] {
        &self.groups
    }

    pub fn total_weight(&self) -> usize {
        self.total_weight
    }

    pub fn num_groups(&self) -> usize {
        self.groups.len()
    }

    pub fn is_canonical(&self) -> bool {
        self.groups
            .windows(2)
            .all(|w| group_order(&w[0], &w[1]) != Ordering::Greater)
    }

    /// The same characteristic with its groups in canonical order.
    pub fn canonical(&self) -> SegreCharacteristic {
        let mut groups = self.groups.clone();
        groups.sort_by(group_order);
        SegreCharacteristic {
            groups,
            total_weight: self.total_weight,
        }
    }

    fn canonical_groups(&self) -> Vec<&Partition> {
        let mut groups: Vec<&Partition> = self.groups.iter().collect();
        groups.sort_by(|a, b| group_order(a, b));
        groups
    }

    /// All block sizes, forgetting which eigenvalue they belong to.
    pub fn flattened(&self) -> Partition {
        let parts = self
            .groups
            .iter()
            .flat_map(|g| g.parts().iter().copied())
            .collect();
        Partition::new(parts).expect("group parts are positive")
    }

    /// Group weights, i.e. the algebraic multiplicities of the eigenvalues.
    pub fn multiplicities(&self) -> Partition {
        Partition::new(self.groups.iter().map(Partition::weight).collect())
            .expect("groups are non-empty")
    }
}

impl PartialEq for SegreCharacteristic {
    fn eq(&self, other: &Self) -> bool {
        self.total_weight == other.total_weight
            && self.groups.len() == other.groups.len()
            && self.canonical_groups() == other.canonical_groups()
    }
}

impl Eq for SegreCharacteristic {}

impl Hash for SegreCharacteristic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_groups().hash(state);
    }
}

impl Ord for SegreCharacteristic {
    /// Enumeration order: by the flattened block partition in
    /// reverse-lexicographic order, then by canonical groups with heavier and
    /// lexicographically larger groups first. For `n = 4` this yields
    /// `[(4)], [(3,1)], [(3),(1)], [(2,2)], [(2),(2)], [(2,1,1)], ...`.
    fn cmp(&self, other: &Self) -> Ordering {
        let flat = other.flattened().parts().cmp(self.flattened().parts());
        flat.then_with(|| {
            let (a, b) = (self.canonical_groups(), other.canonical_groups());
            for (x, y) in a.iter().zip(&b) {
                match group_order(x, y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for SegreCharacteristic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SegreCharacteristic {
    /// Every group is parenthesized, singletons included: `[(2,1),(3),(1)]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, group) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("(")?;
            for (j, part) in group.parts().iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{part}")?;
            }
            f.write_str(")")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SegreCharacteristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_segre(s)
    }
}

/// Formats with every group parenthesized.
pub fn format_segre(s: &SegreCharacteristic) -> String {
    s.to_string()
}

/// Parses `[(2,1),(3),(1)]`. A bare integer is read as a singleton group,
/// so the mixed notation `[(2,1),3,1,(2,1)]` is accepted too. Whitespace is
/// ignored.
pub fn parse_segre(text: &str) -> Result<SegreCharacteristic> {
    let mut cur = Cursor::new(text);
    cur.expect(b'[')?;
    let mut groups = Vec::new();
    loop {
        let start = cur.position();
        let group = if cur.eat(b'(') {
            let mut parts = Vec::new();
            loop {
                let at = cur.position();
                if cur.peek() == Some(b')') {
                    return Err(parse_error(at, "empty group"));
                }
                let part = cur.number()?;
                if part == 0 {
                    return Err(parse_error(at, "block sizes must be positive"));
                }
                parts.push(part);
                if cur.eat(b')') {
                    break;
                }
                cur.expect(b',')?;
            }
            parts
        } else if matches!(cur.peek(), Some(b) if b.is_ascii_digit()) {
            let part = cur.number()?;
            if part == 0 {
                return Err(parse_error(start, "block sizes must be positive"));
            }
            vec![part]
        } else {
            return Err(cur.unexpected("'(' or an integer"));
        };
        groups.push(Partition::new(group)?);
        if cur.eat(b']') {
            break;
        }
        cur.expect(b',')?;
    }
    cur.finish()?;
    SegreCharacteristic::new(groups)
}

/// Every way of splitting each part `a_k` of `outer` into a partition,
/// i.e. the Cartesian product of the partition lists of the parts. Results
/// are not deduplicated: the length is `∏ p(a_k)`.
pub fn multipartitions(outer: &Partition) -> Vec<SegreCharacteristic> {
    outer
        .parts()
        .iter()
        .map(|&a| enumerate_partitions(a))
        .multi_cartesian_product()
        .map(|groups| SegreCharacteristic::new(groups).expect("parts are positive"))
        .collect()
}

/// Every distinct Segre characteristic of total weight `n`, each exactly
/// once, sorted by the [`Ord`] on [`SegreCharacteristic`]. Each element is
/// in canonical group order.
pub fn enumerate_segre(n: usize) -> Vec<SegreCharacteristic> {
    let unique: BTreeSet<SegreCharacteristic> = Partitions::new(n)
        .filter(|outer| !outer.is_empty())
        .flat_map(|outer| multipartitions(&outer))
        .map(|s| s.canonical())
        .collect();
    unique.into_iter().collect()
}

/// Binomial coefficient `C(m + j - 1, j)` sequence for `j = 0..=len`: the
/// coefficients of `(1 - y)^(-m)`.
fn negative_binomial_series(m: &BigUint, len: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(len + 1);
    let mut c = BigUint::one();
    out.push(c.clone());
    for j in 1..=len {
        c = c * (m + BigUint::from(j - 1)) / BigUint::from(j);
        out.push(c.clone());
    }
    out
}

/// `P(n)` as the coefficient of `x^n` in `∏_{k=1..n} (1 - x^k)^(-p(k))`,
/// using exact polynomial arithmetic truncated at degree `n`.
pub fn count_segre_gf(n: usize) -> BigUint {
    let p = partition_counts(n);
    let mut poly = vec![BigUint::zero(); n + 1];
    poly[0] = BigUint::one();
    for (k, pk) in p.iter().enumerate().skip(1) {
        let series = negative_binomial_series(pk, n / k);
        let mut next = vec![BigUint::zero(); n + 1];
        for (i, coeff) in poly.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (j, s) in series.iter().enumerate() {
                let deg = i + j * k;
                if deg > n {
                    break;
                }
                next[deg] += coeff * s;
            }
        }
        poly = next;
    }
    poly.swap_remove(n)
}

/// `P(n)` as a sum over partitions `a` of `n` of the number of ways to
/// pick a partition for every part of `a`.
///
/// Equal parts are interchangeable: a part size `j` that occurs `m` times
/// contributes the multiset count `C(p(j) + m - 1, m)` rather than `p(j)^m`.
/// Taking `∏ p(a_k)` literally counts ordered tuples and overshoots from
/// `n = 4` on (15 instead of 14).
pub fn count_segre_sum(n: usize) -> BigUint {
    let p = partition_counts(n);
    // Depth-first over partitions in multiplicity form: part sizes strictly
    // decreasing, each with a multiplicity.
    fn walk(
        remaining: usize,
        max_part: usize,
        product: &BigUint,
        p: &[BigUint],
        acc: &mut BigUint,
    ) {
        if remaining == 0 {
            *acc += product;
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            let mut choices = BigUint::one();
            for m in 1..=remaining / part {
                // C(p + m - 1, m) from C(p + m - 2, m - 1).
                choices = choices * (&p[part] + BigUint::from(m - 1)) / BigUint::from(m);
                walk(
                    remaining - m * part,
                    part - 1,
                    &(product * &choices),
                    p,
                    acc,
                );
            }
        }
    }
    let mut acc = BigUint::zero();
    walk(n, n, &BigUint::one(), &p, &mut acc);
    acc
}
