//! From rank patterns to Jordan block sizes.
//!
//! For a fixed eigenvalue λ of an `n × n` matrix, the ranks
//! `r_k = rank((A - λI)^k)` drop by `q_k = r_{k-1} - r_k` at step `k`. The
//! growth sequence `q` is non-increasing, and its conjugate partition is
//! the list of Jordan block sizes for λ.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_error, Error, Result};
use crate::partitions::{conjugate, Partition};
use crate::text::Cursor;

/// `rank((A - λI)^k)` for `k = 0..=m`, stored up to the first repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankPattern {
    dimension: usize,
    ranks: Vec<usize>,
}

impl RankPattern {
    /// Validates the shape of a measured pattern and trims it to the minimal
    /// stabilized form: `(10, 8, 7, 7, 7)` is stored as `(10, 8, 7)`.
    ///
    /// Whether the drops are non-increasing is not checked here; see
    /// [`nullity_growth`].
    pub fn new(dimension: usize, ranks: Vec<usize>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidRankPattern(
                "dimension must be positive".into(),
            ));
        }
        match ranks.first() {
            None => return Err(Error::InvalidRankPattern("no ranks given".into())),
            Some(&r0) if r0 != dimension => {
                return Err(Error::InvalidRankPattern(format!(
                    "first rank must equal the dimension {dimension}, got {r0}"
                )))
            }
            _ => {}
        }
        let mut stable_at = None;
        for (k, w) in ranks.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(Error::InvalidRankPattern(format!(
                    "ranks increase at k = {} ({} then {})",
                    k + 1,
                    w[0],
                    w[1]
                )));
            }
            match stable_at {
                None if w[1] == w[0] => stable_at = Some(k + 1),
                Some(_) if w[1] != w[0] => {
                    return Err(Error::InvalidRankPattern(format!(
                        "ranks change after stabilizing at {}",
                        w[0]
                    )))
                }
                _ => {}
            }
        }
        let mut ranks = ranks;
        if let Some(len) = stable_at {
            ranks.truncate(len);
        }
        Ok(RankPattern { dimension, ranks })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Stabilization index `m` (the number of rank drops).
    pub fn steps(&self) -> usize {
        self.ranks.len() - 1
    }

    /// The floor `r_m` the ranks settle at.
    pub fn final_rank(&self) -> usize {
        *self.ranks.last().expect("at least r_0")
    }

    /// `n - r_m`, the algebraic multiplicity of λ.
    pub fn multiplicity(&self) -> usize {
        self.dimension - self.final_rank()
    }
}

impl fmt::Display for RankPattern {
    /// `n=10: 10,7,5,3,2,1,0`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}: ", self.dimension)?;
        for (i, r) in self.ranks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for RankPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        cur.expect(b'n')?;
        cur.expect(b'=')?;
        let dimension = cur.number()?;
        cur.expect(b':')?;
        let mut ranks = vec![cur.number()?];
        while cur.eat(b',') {
            ranks.push(cur.number()?);
        }
        if cur.peek().is_some() {
            return Err(cur.unexpected("',' or end of input"));
        }
        RankPattern::new(dimension, ranks).map_err(|e| match e {
            Error::InvalidRankPattern(msg) => parse_error(0, msg),
            other => other,
        })
    }
}

/// The nullity growth (Weyr) sequence `q_1 ≥ q_2 ≥ ... ≥ q_m ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NullityGrowth(Vec<usize>);

impl NullityGrowth {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// The growth sequence read as a partition (it is non-increasing).
    pub fn as_partition(&self) -> Partition {
        Partition::from_sorted(self.0.clone())
    }
}

impl fmt::Display for NullityGrowth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_partition().fmt(f)
    }
}

/// `q_k = r_{k-1} - r_k`; rejects patterns whose growth ever increases.
pub fn nullity_growth(rp: &RankPattern) -> Result<NullityGrowth> {
    let q: Vec<usize> = rp.ranks.windows(2).map(|w| w[0] - w[1]).collect();
    for (k, w) in q.windows(2).enumerate() {
        if w[1] > w[0] {
            return Err(Error::NonMonotoneGrowth {
                step: k + 2,
                previous: w[0],
                current: w[1],
            });
        }
    }
    Ok(NullityGrowth(q))
}

/// Jordan block sizes for the eigenvalue: the conjugate of the growth
/// sequence. Empty when λ is not an eigenvalue (pattern `(n)`).
pub fn blocks_from_rank_pattern(rp: &RankPattern) -> Result<Partition> {
    Ok(conjugate(&nullity_growth(rp)?.as_partition()))
}

/// Closed-form inverse: `r_k = n - Σ_i min(b_i, k)` for `k = 0..=max(b)`.
pub fn rank_pattern_from_blocks(blocks: &Partition, n: usize) -> Result<RankPattern> {
    if blocks.weight() > n {
        return Err(Error::BlocksExceedDimension {
            total: blocks.weight(),
            dimension: n,
        });
    }
    let ranks = (0..=blocks.largest())
        .map(|k| n - blocks.parts().iter().map(|&b| b.min(k)).sum::<usize>())
        .collect();
    RankPattern::new(n, ranks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partitions;

    fn rp(n: usize, ranks: &[usize]) -> RankPattern {
        RankPattern::new(n, ranks.to_vec()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn growth_examples() {
        assert_eq!(
            nullity_growth(&rp(10, &[10, 7, 5, 3, 2, 1, 0]))
                .unwrap()
                .values(),
            [3, 2, 2, 1, 1, 1]
        );
        assert_eq!(nullity_growth(&rp(1, &[1, 0])).unwrap().values(), [1]);
        let stabilized = rp(10, &[10, 8, 7, 7]);
        assert_eq!(stabilized.ranks(), [10, 8, 7]);
        assert_eq!(nullity_growth(&stabilized).unwrap().values(), [2, 1]);
    }

    #[test]
    fn blocks_examples() {
        assert_eq!(
            blocks_from_rank_pattern(&rp(10, &[10, 7, 5, 3, 2, 1, 0])).unwrap(),
            part(&[6, 3, 1])
        );
        for k in 1..=9 {
            let ranks: Vec<usize> = (0..=k).rev().collect();
            assert_eq!(
                blocks_from_rank_pattern(&rp(k, &ranks)).unwrap(),
                part(&[k])
            );
        }
        assert_eq!(
            blocks_from_rank_pattern(&rp(10, &[10, 8])).unwrap(),
            part(&[1, 1])
        );
    }

    #[test]
    fn non_eigenvalue_gives_no_blocks() {
        let constant = rp(4, &[4, 4, 4]);
        assert_eq!(constant.ranks(), [4]);
        assert_eq!(
            blocks_from_rank_pattern(&constant).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            rank_pattern_from_blocks(&part(&[6, 3, 1]), 10)
                .unwrap()
                .ranks(),
            [10, 7, 5, 3, 2, 1, 0]
        );
        assert_eq!(
            rank_pattern_from_blocks(&part(&[1]), 1).unwrap().ranks(),
            [1, 0]
        );
        assert_eq!(
            rank_pattern_from_blocks(&part(&[2, 1]), 10)
                .unwrap()
                .ranks(),
            [10, 8, 7]
        );
        assert_eq!(
            rank_pattern_from_blocks(&part(&[3, 3]), 5),
            Err(Error::BlocksExceedDimension {
                total: 6,
                dimension: 5
            })
        );
    }

    #[test]
    fn round_trips() {
        for w in 1..=12 {
            for b in Partitions::new(w) {
                for n in [w, w + 1, w + 5] {
                    let pattern = rank_pattern_from_blocks(&b, n).unwrap();
                    let growth = nullity_growth(&pattern).unwrap();
                    assert_eq!(growth.values()[0], b.len());
                    assert_eq!(growth.values().len(), b.largest());
                    assert_eq!(pattern.steps(), b.largest());
                    let back = blocks_from_rank_pattern(&pattern).unwrap();
                    assert_eq!(back, b);
                    assert_eq!(back.weight(), pattern.multiplicity());
                    assert_eq!(rank_pattern_from_blocks(&back, n).unwrap(), pattern);
                }
            }
        }
    }

    #[test]
    fn rejects_non_monotone_growth() {
        let bad = rp(5, &[5, 3, 2, 0]);
        assert_eq!(
            nullity_growth(&bad),
            Err(Error::NonMonotoneGrowth {
                step: 3,
                previous: 1,
                current: 2
            })
        );
        assert!(blocks_from_rank_pattern(&bad).is_err());
        assert!(blocks_from_rank_pattern(&rp(6, &[6, 5, 3])).is_err());
    }

    #[test]
    fn five_three_two_zero_is_unrealizable() {
        // No block structure of any eigenvalue of a 5x5 matrix has this pattern.
        let target = rp(5, &[5, 3, 2, 0]);
        for w in 1..=5 {
            for b in Partitions::new(w) {
                assert_ne!(rank_pattern_from_blocks(&b, 5).unwrap(), target);
            }
        }
    }

    #[test]
    fn constructor_rejects_malformed_patterns() {
        assert!(RankPattern::new(0, vec![0]).is_err());
        assert!(RankPattern::new(3, vec![]).is_err());
        assert!(RankPattern::new(3, vec![2, 1]).is_err());
        assert!(RankPattern::new(3, vec![3, 1, 2]).is_err());
        assert!(RankPattern::new(4, vec![4, 2, 2, 1]).is_err());
    }

    #[test]
    fn text_form() {
        let pattern: RankPattern = "n=10: 10,7,5,3,2,1,0".parse().unwrap();
        assert_eq!(pattern, rp(10, &[10, 7, 5, 3, 2, 1, 0]));
        assert_eq!(pattern.to_string(), "n=10: 10,7,5,3,2,1,0");
        assert_eq!("n=1:1,0".parse::<RankPattern>().unwrap(), rp(1, &[1, 0]));
        assert!("n=10 10,7".parse::<RankPattern>().is_err());
        assert!("n=3: 2,1".parse::<RankPattern>().is_err());
        assert!("n=3: 3,2,".parse::<RankPattern>().is_err());
    }
}
