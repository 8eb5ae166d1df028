//! Jordan matrices from Segre characteristics, and the reverse: reading the
//! Segre characteristic off a concrete rational matrix through its rank
//! patterns.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{rational_roots, ExactMatrix, Rational};
use crate::partitions::Partition;
use crate::rank::{blocks_from_rank_pattern, RankPattern};
use crate::segre::SegreCharacteristic;

/// A Segre characteristic with one distinct eigenvalue per group.
///
/// Two specs are equal when they pair the same eigenvalues with the same
/// block groups, regardless of group order.
#[derive(Debug, Clone)]
pub struct JordanSpec {
    segre: SegreCharacteristic,
    eigenvalues: Vec<Rational>,
}

impl JordanSpec {
    pub fn new(segre: SegreCharacteristic, eigenvalues: Vec<Rational>) -> Result<Self> {
        if eigenvalues.len() != segre.num_groups() {
            return Err(Error::EigenvalueCount {
                eigenvalues: eigenvalues.len(),
                groups: segre.num_groups(),
            });
        }
        for (i, ev) in eigenvalues.iter().enumerate() {
            if eigenvalues[..i].contains(ev) {
                return Err(Error::DuplicateEigenvalue(ev.clone()));
            }
        }
        Ok(JordanSpec { segre, eigenvalues })
    }

    /// Eigenvalues `1, 2, ..., k` assigned to the groups in order.
    pub fn positional(segre: SegreCharacteristic) -> Self {
        let eigenvalues = (1..=segre.num_groups())
            .map(|i| Rational::from_integer(BigInt::from(i)))
            .collect();
        JordanSpec { segre, eigenvalues }
    }

    pub fn segre(&self) -> &SegreCharacteristic {
        &self.segre
    }

    pub fn eigenvalues(&self) -> &[Rational] {
        &self.eigenvalues
    }

    pub fn dimension(&self) -> usize {
        self.segre.total_weight()
    }

    /// `(eigenvalue, blocks)` pairs in group order.
    pub fn groups(&self) -> impl Iterator<Item = (&Rational, &Partition)> {
        self.eigenvalues.iter().zip(self.segre.groups())
    }
}

impl PartialEq for JordanSpec {
    fn eq(&self, other: &Self) -> bool {
        fn pairs(s: &JordanSpec) -> Vec<(&Rational, &Partition)> {
            let mut v: Vec<_> = s.groups().collect();
            v.sort();
            v
        }
        pairs(self) == pairs(other)
    }
}

impl Eq for JordanSpec {}

/// Block-diagonal Jordan matrix: groups in the given order, each group's blocks
/// largest first, λ on the diagonal and 1 on the superdiagonal inside each
/// block.
pub fn build_jordan(spec: &JordanSpec) -> ExactMatrix {
    let n = spec.dimension();
    let mut m = ExactMatrix::zeros(n, n);
    let mut offset = 0;
    for (lambda, group) in spec.groups() {
        for &block in group.parts() {
            for i in 0..block {
                m.set(offset + i, offset + i, lambda.clone());
                if i + 1 < block {
                    m.set(offset + i, offset + i + 1, Rational::one());
                }
            }
            offset += block;
        }
    }
    m
}

/// `rank((m - λI)^k)` for `k = 0, 1, ...` until two consecutive ranks agree.
///
/// Powers are built incrementally, one multiplication per step. If λ is
/// not an eigenvalue the result is the one-entry pattern `(n)`.
pub fn rank_pattern_of(m: &ExactMatrix, lambda: &Rational) -> Result<RankPattern> {
    let shifted = m.shift(lambda)?;
    let n = m.rows();
    let mut ranks = vec![n];
    let mut power = shifted.clone();
    loop {
        let r = power.rank();
        if r == *ranks.last().expect("r_0") {
            break;
        }
        ranks.push(r);
        if r == 0 {
            break;
        }
        power = power.matmul(&shifted)?;
    }
    RankPattern::new(n, ranks)
}

/// One eigenvalue's share of an [`AnalysisReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueReport {
    pub value: Rational,
    pub multiplicity: usize,
    pub rank_pattern: RankPattern,
    pub blocks: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    /// Canonical form.
    pub segre: SegreCharacteristic,
    /// Ascending by eigenvalue.
    pub eigenvalues: Vec<EigenvalueReport>,
}

impl AnalysisReport {
    pub fn dimension(&self) -> usize {
        self.segre.total_weight()
    }

    /// The report as a spec: eigenvalues paired with their block groups.
    pub fn jordan_spec(&self) -> JordanSpec {
        let segre =
            SegreCharacteristic::new(self.eigenvalues.iter().map(|e| e.blocks.clone()).collect())
                .expect("every eigenvalue has at least one block");
        JordanSpec::new(
            segre,
            self.eigenvalues.iter().map(|e| e.value.clone()).collect(),
        )
        .expect("eigenvalues are distinct")
    }

    pub fn to_json(&self) -> Value {
        let eigenvalues: Vec<Value> = self
            .eigenvalues
            .iter()
            .map(|e| {
                json!({
                    "value": e.value.to_string(),
                    "rank_pattern": e.rank_pattern.ranks(),
                    "blocks": e.blocks.parts(),
                })
            })
            .collect();
        json!({"segre": self.segre.to_string(), "eigenvalues": eigenvalues})
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "segre: {}", self.segre)?;
        for e in &self.eigenvalues {
            let ranks: Vec<String> = e
                .rank_pattern
                .ranks()
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(
                f,
                "eigenvalue {}: multiplicity {}, rank pattern ({}), blocks {}",
                e.value,
                e.multiplicity,
                ranks.join(","),
                e.blocks
            )?;
        }
        Ok(())
    }
}

/// Segre characteristic of a square rational matrix.
///
/// Eigenvalues come from the characteristic polynomial; each one's Jordan
/// blocks come from its rank pattern. Matrices with any eigenvalue outside
/// the rationals are rejected with [`Error::IrrationalEigenvalue`].
pub fn analyze(m: &ExactMatrix) -> Result<AnalysisReport> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let scale = Rational::from_integer(m.denominator_lcm());
    let factorization = rational_roots(&m.char_poly()?);
    if factorization.remainder_degree() > 0 {
        return Err(Error::IrrationalEigenvalue {
            remainder_degree: factorization.remainder_degree(),
        });
    }

    // Roots are ascending and the scale is positive, so eigenvalues are too.
    let mut eigenvalues = Vec::with_capacity(factorization.roots.len());
    for (root, multiplicity) in factorization.roots {
        let value = root / &scale;
        let rank_pattern = rank_pattern_of(m, &value)?;
        let blocks = blocks_from_rank_pattern(&rank_pattern)?;
        if blocks.weight() != multiplicity {
            return Err(Error::InternalInconsistency(format!(
                "eigenvalue {value} has algebraic multiplicity {multiplicity} \
                 but its blocks {blocks} add up to {}",
                blocks.weight()
            )));
        }
        eigenvalues.push(EigenvalueReport {
            value,
            multiplicity,
            rank_pattern,
            blocks,
        });
    }

    let total: usize = eigenvalues.iter().map(|e| e.multiplicity).sum();
    if total != m.rows() {
        return Err(Error::InternalInconsistency(format!(
            "multiplicities add up to {total}, not {}",
            m.rows()
        )));
    }
    let segre = SegreCharacteristic::new(eigenvalues.iter().map(|e| e.blocks.clone()).collect())?
        .canonical();
    Ok(AnalysisReport { segre, eigenvalues })
}
