//! Stable JSON schemas for decompositions, certificates and verdicts.
//!
//! Ideals and monomials travel as strings in the shared text syntax;
//! free variable sets as sorted `"xK"` lists. Serialization is
//! deterministic, so emit -> parse -> emit is byte-identical.

use serde::{Deserialize, Serialize};

use crate::construct::{BranchLabel, CertSource, Certificate, TraceNode};
use crate::error::Result;
use crate::ideal::QuotientPresentation;
use crate::monomial::VarSet;
use crate::parse::{parse_ideal, parse_monomial};
use crate::stanley::{StanleyDecomposition, StanleySpace, Verdict, Violation};

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TargetJson {
    pub inner: String,
    pub outer: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SpaceJson {
    pub gen: String,
    pub free: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct DecompositionJson {
    pub n: usize,
    pub target: TargetJson,
    pub spaces: Vec<SpaceJson>,
}

impl DecompositionJson {
    pub fn from_decomposition(d: &StanleyDecomposition) -> Self {
        Self {
            n: d.n,
            target: TargetJson {
                inner: d.target.inner().to_string(),
                outer: d.target.outer().to_string(),
            },
            spaces: d
                .spaces
                .iter()
                .map(|s| SpaceJson {
                    gen: s.gen.to_string(),
                    free: s.free.vars().map(|v| format!("x{v}")).collect(),
                })
                .collect(),
        }
    }

    pub fn to_decomposition(&self) -> Result<StanleyDecomposition> {
        let inner = parse_ideal(&self.target.inner, self.n)?;
        let outer = parse_ideal(&self.target.outer, self.n)?;
        let target = QuotientPresentation::new(inner, outer)?;
        let mut spaces = Vec::with_capacity(self.spaces.len());
        for s in &self.spaces {
            let gen = parse_monomial(&s.gen, self.n)?;
            let mut free = VarSet::EMPTY;
            for name in &s.free {
                let m = parse_monomial(name, self.n)?;
                let support = m.support();
                free = free.union(support);
            }
            spaces.push(StanleySpace { gen, free });
        }
        Ok(StanleyDecomposition::new(target, spaces))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BettiEntryJson {
    pub i: usize,
    pub degree: Vec<String>,
    pub rank: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BettiTableJson {
    pub entries: Vec<BettiEntryJson>,
}

impl BettiTableJson {
    pub fn from_table(table: &crate::betti::BettiTable) -> Self {
        Self {
            entries: table
                .entries()
                .map(|(i, degree, rank)| BettiEntryJson {
                    i,
                    degree: VarSet::from_mask(degree)
                        .vars()
                        .map(|v| format!("x{v}"))
                        .collect(),
                    rank,
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TraceNodeJson {
    pub r: usize,
    pub target: String,
    pub branch: String,
    #[serde(rename = "depth_SI", skip_serializing_if = "Option::is_none")]
    pub depth_si: Option<usize>,
    #[serde(rename = "depth_ST", skip_serializing_if = "Option::is_none")]
    pub depth_st: Option<usize>,
    pub source: String,
    pub children: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CertificateJson {
    pub n: usize,
    pub target: String,
    pub claimed_bound: usize,
    pub decomposition: DecompositionJson,
    pub trace: Vec<TraceNodeJson>,
}

impl CertificateJson {
    pub fn from_certificate(c: &Certificate) -> Self {
        Self {
            n: c.target.ring_size(),
            target: c.target.to_string(),
            claimed_bound: c.claimed_bound,
            decomposition: DecompositionJson::from_decomposition(&c.decomposition),
            trace: c.trace.iter().map(trace_node_json).collect(),
        }
    }
}

fn trace_node_json(node: &TraceNode) -> TraceNodeJson {
    TraceNodeJson {
        r: node.ring_size,
        target: node.target.to_string(),
        branch: match node.branch {
            BranchLabel::Base => "base",
            BranchLabel::Lift => "lift",
            BranchLabel::Good => "good",
            BranchLabel::Bad => "bad",
        }
        .into(),
        depth_si: node.depth_sub_quotient,
        depth_st: node.depth_quotient,
        source: match node.source {
            CertSource::Search => "search",
            CertSource::Lemma => "lemma",
        }
        .into(),
        children: node.children.clone(),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ViolationJson {
    pub kind: String,
    pub monomial: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub spaces: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct VerdictJson {
    pub valid: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub violations: Vec<ViolationJson>,
}

impl VerdictJson {
    pub fn from_verdict(v: &Verdict) -> Self {
        Self {
            valid: v.is_valid(),
            violations: v
                .violations()
                .iter()
                .map(|violation| match violation {
                    Violation::Uncovered { monomial } => ViolationJson {
                        kind: "uncovered".into(),
                        monomial: monomial.to_string(),
                        spaces: vec![],
                    },
                    Violation::MultiplyCovered { monomial, spaces } => ViolationJson {
                        kind: "multiply-covered".into(),
                        monomial: monomial.to_string(),
                        spaces: spaces.clone(),
                    },
                    Violation::OutsideModule { monomial, spaces } => ViolationJson {
                        kind: "outside-module".into(),
                        monomial: monomial.to_string(),
                        spaces: spaces.clone(),
                    },
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::certify_weak_conjecture;
    use crate::stanley::{sdepth_exact, verify_decomposition};

    #[test]
    fn decomposition_round_trip_is_byte_identical() {
        let i = parse_ideal("x1*x2, x1*x3, x2*x4", 4).unwrap();
        let pres = QuotientPresentation::of_ideal(i).unwrap();
        let sd = sdepth_exact(&pres).unwrap();
        let d = sd.decomposition(&pres);
        let json = serde_json::to_string_pretty(&DecompositionJson::from_decomposition(&d))
            .unwrap();
        let parsed: DecompositionJson = serde_json::from_str(&json).unwrap();
        let d2 = parsed.to_decomposition().unwrap();
        assert!(verify_decomposition(&d2).is_valid());
        let json2 =
            serde_json::to_string_pretty(&DecompositionJson::from_decomposition(&d2)).unwrap();
        assert_eq!(json, json2);
    }

    #[test]
    fn certificate_schema_fields() {
        let i = parse_ideal("x1*x2, x1*x3, x2*x4", 4).unwrap();
        let cert = certify_weak_conjecture(&i).unwrap();
        let json = serde_json::to_value(CertificateJson::from_certificate(&cert)).unwrap();
        let root = &json["trace"][0];
        assert_eq!(root["r"], 4);
        assert_eq!(root["branch"], "bad");
        assert_eq!(root["source"], "search");
        assert_eq!(root["depth_SI"], 1);
        assert_eq!(root["depth_ST"], 2);
    }
}
