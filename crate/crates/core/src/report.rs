//! Verification reports and the two-route comparison used by every check.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::arith::{format_rational, BigRational, RationalFunction};
use crate::error::Error;

/// Points at which every symbolic comparison is re-done numerically.
pub const NUMERIC_POINTS: [i64; 3] = [2, 3, 5];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "ANZ1")]
    Anz1,
    #[serde(rename = "ANZ2")]
    Anz2,
    #[serde(rename = "ANZ3")]
    Anz3,
    #[serde(rename = "EQ4")]
    Eq4,
    #[serde(rename = "EQ5")]
    Eq5,
    #[serde(rename = "A2_SUM")]
    A2Sum,
    #[serde(rename = "B2_SUM")]
    B2Sum,
    #[serde(rename = "C2_SUM")]
    C2Sum,
    #[serde(rename = "C1_SUM")]
    C1Sum,
    #[serde(rename = "AB_SPLIT")]
    AbSplit,
    #[serde(rename = "D_EQ_B2")]
    DEqB2,
    #[serde(rename = "FINAL_COMBINE")]
    FinalCombine,
    #[serde(rename = "BRIDGE_AB")]
    BridgeAb,
    #[serde(rename = "BRIDGE_C")]
    BridgeC,
    #[serde(rename = "BRIDGE_D")]
    BridgeD,
    #[serde(rename = "C_SPLIT")]
    CSplit,
    #[serde(rename = "C2_NEG_B2")]
    C2NegB2,
    #[serde(rename = "ABSORPTION")]
    Absorption,
    #[serde(rename = "QCHU")]
    QChu,
    #[serde(rename = "TRANSFORM")]
    Transform,
    #[serde(rename = "LIMIT_TRANSFORM")]
    LimitTransform,
    #[serde(rename = "QBINOMIAL")]
    QBinomial,
    #[serde(rename = "COEFF_LEMMA")]
    CoeffLemma,
    #[serde(rename = "MARGINAL_SP")]
    MarginalSp,
    #[serde(rename = "MARGINAL_O")]
    MarginalO,
    #[serde(rename = "NORMALIZATION_SP")]
    NormalizationSp,
    #[serde(rename = "NORMALIZATION_O")]
    NormalizationO,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        use IdentityId::*;
        match self {
            Anz1 => "ANZ1",
            Anz2 => "ANZ2",
            Anz3 => "ANZ3",
            Eq4 => "EQ4",
            Eq5 => "EQ5",
            A2Sum => "A2_SUM",
            B2Sum => "B2_SUM",
            C2Sum => "C2_SUM",
            C1Sum => "C1_SUM",
            AbSplit => "AB_SPLIT",
            DEqB2 => "D_EQ_B2",
            FinalCombine => "FINAL_COMBINE",
            BridgeAb => "BRIDGE_AB",
            BridgeC => "BRIDGE_C",
            BridgeD => "BRIDGE_D",
            CSplit => "C_SPLIT",
            C2NegB2 => "C2_NEG_B2",
            Absorption => "ABSORPTION",
            QChu => "QCHU",
            Transform => "TRANSFORM",
            LimitTransform => "LIMIT_TRANSFORM",
            QBinomial => "QBINOMIAL",
            CoeffLemma => "COEFF_LEMMA",
            MarginalSp => "MARGINAL_SP",
            MarginalO => "MARGINAL_O",
            NormalizationSp => "NORMALIZATION_SP",
            NormalizationO => "NORMALIZATION_O",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named integer or rational coordinates of one comparison, e.g. `{"k":2,"m":5}`.
pub type Index = Map<String, Value>;

/// Builds an [`Index`] from `(name, value)` pairs.
pub fn index<const N: usize>(pairs: [(&str, i64); N]) -> Index {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), Value::from(v)))
        .collect()
}

pub fn format_index(index: &Index) -> String {
    index
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub index: Index,
    pub pass: bool,
    /// Evaluation points at which the numeric route was compared.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub numeric_points: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub index: Index,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: Index,
    pub reason: String,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: Map<String, Value>,
    pub pass: bool,
    pub checked: usize,
    pub skipped: Vec<Skipped>,
    pub counterexample: Option<Counterexample>,
    pub outcomes: Vec<Outcome>,
}

impl VerificationReport {
    /// One line per outcome, e.g. `ANZ1 m=1: PASS`.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        for o in &self.outcomes {
            let idx = format_index(&o.index);
            let sep = if idx.is_empty() { "" } else { " " };
            let verdict = if o.pass { "PASS" } else { "FAIL" };
            lines.push(format!("{}{sep}{idx}: {verdict}", self.identity));
        }
        for s in &self.skipped {
            lines.push(format!("{} {}: SKIP ({})", self.identity, format_index(&s.index), s.reason));
        }
        if let Some(c) = &self.counterexample {
            lines.push(format!(
                "{} counterexample at {}: {} (lhs = {}, rhs = {})",
                self.identity,
                format_index(&c.index),
                c.reason,
                c.lhs,
                c.rhs
            ));
        }
        if lines.is_empty() {
            lines.push(format!("{}: PASS (vacuous)", self.identity));
        }
        lines.join("\n")
    }
}

/// Accumulates outcomes for one identity.
#[derive(Debug)]
pub struct Check {
    identity: IdentityId,
    params: Map<String, Value>,
    outcomes: Vec<Outcome>,
    skipped: Vec<Skipped>,
    counterexample: Option<Counterexample>,
}

/// Side values from the direct numeric route at one point.
pub type NumericSides = Result<(BigRational, BigRational), Error>;

impl Check {
    pub fn new(identity: IdentityId) -> Self {
        Check {
            identity,
            params: Map::new(),
            outcomes: Vec::new(),
            skipped: Vec::new(),
            counterexample: None,
        }
    }

    pub fn param(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.params.insert(name.to_string(), value.into());
        self
    }

    pub fn skip(&mut self, index: Index, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            index,
            reason: reason.into(),
        });
    }

    fn fail(&mut self, index: &Index, reason: String, lhs: Value, rhs: Value) {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                index: index.clone(),
                reason,
                lhs,
                rhs,
            });
        }
    }

    /// Records a comparison of two rational functions. The symbolic sides must
    /// be equal, and at every point of [`NUMERIC_POINTS`] where nothing has a
    /// pole, `numeric(q)` (the same formulas evaluated directly over `Q`) must
    /// agree with each other and with the evaluated symbolic sides.
    pub fn compare(
        &mut self,
        index: Index,
        symbolic: Result<(RationalFunction, RationalFunction), Error>,
        numeric: impl Fn(&BigRational) -> NumericSides,
    ) -> bool {
        let (lhs, rhs) = match symbolic {
            Ok(sides) => sides,
            Err(e) => {
                self.fail(&index, format!("evaluation error: {e}"), Value::Null, Value::Null);
                self.outcomes.push(Outcome {
                    index,
                    pass: false,
                    numeric_points: Vec::new(),
                });
                return false;
            }
        };
        let json = |f: &RationalFunction| serde_json::to_value(f).expect("serializable");
        let mut pass = true;
        if lhs != rhs {
            pass = false;
            self.fail(&index, "symbolic sides differ".into(), json(&lhs), json(&rhs));
        }
        let mut points = Vec::new();
        for p in NUMERIC_POINTS {
            let point = BigRational::from_integer(p.into());
            let (Ok(l), Ok(r)) = (lhs.eval(&point), rhs.eval(&point)) else {
                continue;
            };
            let Ok((nl, nr)) = numeric(&point) else {
                continue;
            };
            points.push(p);
            if nl != nr || nl != l || nr != r {
                pass = false;
                let reason = format!("numeric route disagrees at q = {p}");
                self.fail(
                    &index,
                    reason,
                    Value::String(format_rational(&nl)),
                    Value::String(format_rational(&nr)),
                );
            }
        }
        self.outcomes.push(Outcome {
            index,
            pass,
            numeric_points: points,
        });
        pass
    }

    /// Records a comparison with no q-dependence (both sides already rational).
    pub fn compare_rational(&mut self, index: Index, lhs: &BigRational, rhs: &BigRational) -> bool {
        let pass = lhs == rhs;
        if !pass {
            self.fail(
                &index,
                "sides differ".into(),
                Value::String(format_rational(lhs)),
                Value::String(format_rational(rhs)),
            );
        }
        self.outcomes.push(Outcome {
            index,
            pass,
            numeric_points: Vec::new(),
        });
        pass
    }

    /// Records an outcome decided elsewhere.
    pub fn record(&mut self, index: Index, pass: bool, reason: &str) {
        if !pass {
            self.fail(&index, reason.to_string(), Value::Null, Value::Null);
        }
        self.outcomes.push(Outcome {
            index,
            pass,
            numeric_points: Vec::new(),
        });
    }

    /// Appends the outcomes and skips of `other`, keeping the earliest
    /// counterexample.
    pub fn absorb(&mut self, other: Check) {
        self.outcomes.extend(other.outcomes);
        self.skipped.extend(other.skipped);
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    pub fn finish(self) -> VerificationReport {
        let pass = self.counterexample.is_none() && self.outcomes.iter().all(|o| o.pass);
        VerificationReport {
            identity: self.identity,
            params: self.params,
            pass,
            checked: self.outcomes.len(),
            skipped: self.skipped,
            counterexample: self.counterexample,
            outcomes: self.outcomes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;

    #[test]
    fn identity_names_match_serde() {
        for id in [IdentityId::A2Sum, IdentityId::DEqB2, IdentityId::C2NegB2, IdentityId::Anz1] {
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.as_str()));
        }
    }

    #[test]
    fn failing_comparison_keeps_first_counterexample() {
        let mut check = Check::new(IdentityId::Anz1);
        let q = RationalFunction::q();
        let one = RationalFunction::one();
        check.compare(index([("m", 1)]), Ok((q.clone(), q.clone())), |p| Ok((p.clone(), p.clone())));
        check.compare(index([("m", 2)]), Ok((q.clone(), one.clone())), |p| Ok((p.clone(), BigRational::one())));
        check.compare(index([("m", 3)]), Ok((one.clone(), q.clone())), |p| Ok((BigRational::one(), p.clone())));
        let report = check.finish();
        assert!(!report.pass);
        assert_eq!(report.checked, 3);
        let ce = report.counterexample.unwrap();
        assert_eq!(ce.index, index([("m", 2)]));
        assert_eq!(report.outcomes[0].numeric_points, vec![2, 3, 5]);
    }

    #[test]
    fn numeric_disagreement_fails_even_when_symbolic_agrees() {
        let mut check = Check::new(IdentityId::Anz1);
        let q = RationalFunction::q();
        check.compare(index([("m", 1)]), Ok((q.clone(), q.clone())), |_| {
            Ok((BigRational::from_i64(2), BigRational::from_i64(2)))
        });
        let report = check.finish();
        assert!(!report.pass);
        assert!(report.counterexample.unwrap().reason.contains("q = 3"));
    }

    #[test]
    fn text_format() {
        let mut check = Check::new(IdentityId::Anz1);
        let q = RationalFunction::q();
        check.compare(index([("m", 1)]), Ok((q.clone(), q)), |p| Ok((p.clone(), p.clone())));
        assert_eq!(check.finish().to_text(), "ANZ1 m=1: PASS");
    }

    use num_traits::One;
}
