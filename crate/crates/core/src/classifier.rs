//! Schur-positivity of complete multipartite graphs, with certificates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::posets_graphs::multipartite;
use crate::schur_engine::{positivity_scan, NegativeCoefficient, Subject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    SchurPositive,
    NotSchurPositive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    /// Every part is 1 or 2.
    AllPartsLe2,
    /// `(3, 2^beta)` with `beta >= 1`.
    ThreeTwoPower,
    Unbalanced,
    /// `(m^a, (m-1)^b)` with `a >= 2`, `m >= 3`.
    SquareCase,
    /// `(m, (m-1)^b)` with `b >= 2`, `m >= 4`.
    TailCase,
    /// `(m, m-1)` with `m >= 4`.
    BipartiteSmall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    Witness,
    FullScan,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub lambda: Partition,
    pub verdict: Verdict,
    pub reason: Reason,
    pub witness: Option<Partition>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub negative_coefficient: Option<NegativeCoefficient>,
}

fn reason_for(lambda: &Partition) -> Result<(Verdict, Reason)> {
    if lambda.len() < 2 {
        return Err(Error::LengthOne);
    }
    let parts = lambda.parts();
    let (top, low) = (parts[0], parts[parts.len() - 1]);
    if top <= 2 {
        return Ok((Verdict::SchurPositive, Reason::AllPartsLe2));
    }
    if top == 3 && parts[1..].iter().all(|&x| x == 2) {
        return Ok((Verdict::SchurPositive, Reason::ThreeTwoPower));
    }
    let reason = if top > low + 1 {
        Reason::Unbalanced
    } else if lambda.multiplicity(top) >= 2 {
        Reason::SquareCase
    } else if parts.len() >= 3 {
        Reason::TailCase
    } else {
        Reason::BipartiteSmall
    };
    Ok((Verdict::NotSchurPositive, reason))
}

/// Verdict and reason for `K_lambda`, with a witness whenever one exists.
pub fn classify(lambda: &Partition) -> Result<ClassificationReport> {
    let (verdict, reason) = reason_for(lambda)?;
    let witness = match witness_for(lambda) {
        Ok(mu) => Some(mu),
        Err(Error::IsPositive(_)) | Err(Error::NoWitness(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ClassificationReport {
        lambda: lambda.clone(),
        verdict,
        reason,
        witness,
        verified: false,
        negative_coefficient: None,
    })
}

/// A type `mu` dominated by `lambda` such that `K_lambda` has no stable
/// partition of type `mu`.
pub fn witness_for(lambda: &Partition) -> Result<Partition> {
    let (verdict, reason) = reason_for(lambda)?;
    if verdict == Verdict::SchurPositive {
        return Err(Error::IsPositive(lambda.clone()));
    }
    let parts = lambda.parts();
    let k = parts.len();
    let m = parts[0];
    let mut out = match reason {
        Reason::Unbalanced => {
            // Move one box from the last largest part to the first smallest.
            let j = lambda.multiplicity(m) - 1;
            let i = k - lambda.multiplicity(parts[k - 1]);
            let mut out = parts.to_vec();
            out[j] -= 1;
            out[i] += 1;
            out
        }
        Reason::SquareCase => {
            let alpha = lambda.multiplicity(m);
            let beta = k - alpha;
            let mut out = vec![m; alpha - 2];
            out.extend(std::iter::repeat_n(m - 1, beta + 2));
            out.push(2);
            out
        }
        Reason::TailCase => {
            let beta = k - 1;
            let mut out = vec![m];
            out.extend(std::iter::repeat_n(m - 1, beta - 2));
            out.extend([m - 2, m - 2, 2]);
            out
        }
        Reason::BipartiteSmall => {
            // K_(4,3) is nice, so no witness exists there.
            if m < 5 {
                return Err(Error::NoWitness(lambda.clone()));
            }
            vec![m - 2, m - 2, 3]
        }
        Reason::AllPartsLe2 | Reason::ThreeTwoPower => unreachable!("positive"),
    };
    out.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(out)
}

/// Checks the classification of `lambda`.
///
/// `Witness` confirms dominance and the missing stable partition; shapes
/// without a witness (the positive ones and `(4,3)`) fall back to a full
/// scan within `cap`. `FullScan` expands `X_{K_lambda}` and compares the
/// sign pattern with the verdict.
pub fn verify_classification(lambda: &Partition, mode: VerifyMode, cap: usize) -> Result<ClassificationReport> {
    let mut report = classify(lambda)?;
    if mode == VerifyMode::Witness {
        if let Some(mu) = &report.witness {
            let k = multipartite(lambda)?;
            report.verified = lambda.dominates(mu)? && !k.spec.has_stable_partition(mu);
            return Ok(report);
        }
        if lambda.weight() > cap {
            return Ok(report);
        }
    }
    let scan = positivity_scan(&Subject::multipartite(lambda)?, cap)?;
    report.verified = scan.all_nonnegative == (report.verdict == Verdict::SchurPositive);
    report.negative_coefficient = scan.first_negative;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur_engine::DEFAULT_MAX_VERTICES;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn verdicts() {
        let r = classify(&p(&[3, 2, 2, 2])).unwrap();
        assert_eq!((r.verdict, r.reason), (Verdict::SchurPositive, Reason::ThreeTwoPower));
        assert_eq!(r.witness, None);
        let r = classify(&p(&[2, 2, 1])).unwrap();
        assert_eq!((r.verdict, r.reason), (Verdict::SchurPositive, Reason::AllPartsLe2));
        let r = classify(&p(&[3, 3])).unwrap();
        assert_eq!((r.verdict, r.reason), (Verdict::NotSchurPositive, Reason::SquareCase));
        assert_eq!(r.witness, Some(p(&[2, 2, 2])));
        assert_eq!(classify(&p(&[4])), Err(Error::LengthOne));
        assert_eq!(classify(&Partition::empty()), Err(Error::LengthOne));
        let r = classify(&p(&[4, 3])).unwrap();
        assert_eq!((r.verdict, r.reason, r.witness), (Verdict::NotSchurPositive, Reason::BipartiteSmall, None));
    }

    #[test]
    fn worked_witnesses() {
        assert_eq!(witness_for(&p(&[6, 6, 5, 5, 5])).unwrap(), p(&[5, 5, 5, 5, 5, 2]));
        assert_eq!(witness_for(&p(&[5, 4, 4, 4])).unwrap(), p(&[5, 4, 3, 3, 2]));
        assert_eq!(witness_for(&p(&[5, 5, 5, 4, 3, 3])).unwrap(), p(&[5, 5, 4, 4, 4, 3]));
        assert_eq!(witness_for(&p(&[6, 5])).unwrap(), p(&[4, 4, 3]));
        assert_eq!(witness_for(&p(&[3, 2])), Err(Error::IsPositive(p(&[3, 2]))));
        assert_eq!(witness_for(&p(&[4, 3])), Err(Error::NoWitness(p(&[4, 3]))));
    }

    #[test]
    fn witness_and_scan_verification() {
        let r = verify_classification(&p(&[7, 7, 7, 6, 6]), VerifyMode::Witness, DEFAULT_MAX_VERTICES).unwrap();
        assert!(r.verified);
        assert_eq!(r.witness, Some(p(&[7, 6, 6, 6, 6, 2])));
        let r = verify_classification(&p(&[3, 2, 2]), VerifyMode::FullScan, DEFAULT_MAX_VERTICES).unwrap();
        assert!(r.verified);
        assert_eq!(r.verdict, Verdict::SchurPositive);
        let r = verify_classification(&p(&[3, 3]), VerifyMode::FullScan, DEFAULT_MAX_VERTICES).unwrap();
        assert!(r.verified);
        assert!(r.negative_coefficient.is_some());
        // No witness: falls back to scanning.
        let r = verify_classification(&p(&[4, 3]), VerifyMode::Witness, DEFAULT_MAX_VERTICES).unwrap();
        assert!(r.verified);
        assert!(r.negative_coefficient.is_some());
        assert!(matches!(
            verify_classification(&p(&[4, 4, 4, 4]), VerifyMode::FullScan, DEFAULT_MAX_VERTICES),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn report_json() {
        let r = classify(&p(&[3, 3])).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"lambda":[3,3],"verdict":"NotSchurPositive","reason":"SquareCase","witness":[2,2,2],"verified":false}"#
        );
    }
}
