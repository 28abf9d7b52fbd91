//! JSON instance documents: a function, an optional domain, basepoints and
//! a norm. Rationals are written as `"p/q"` strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::rat::{self, Rat};
use crate::geometry::{Constraint, HPolyhedron, NormKind, NormSpec};
use crate::plfunc::{PLExpr, PLFunction};

pub const INSTANCE_VERSION: u32 = 1;

fn default_norm() -> NormKind {
    NormKind::Linf
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub version: u32,
    pub dim: usize,
    pub expr: PLExpr,
    /// Rows `a·x <= b`; absent means the whole space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Vec<Constraint>>,
    #[serde(default, with = "rat::serde_rat_mat")]
    pub basepoints: Vec<Vec<Rat>>,
    #[serde(default = "default_norm")]
    pub norm: NormKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Reported error bound for Euclidean distances.
pub fn l2_tolerance() -> Rat {
    rat::rat(1, 1_000_000_000)
}

impl InstanceDoc {
    pub fn new(function: &PLFunction, basepoints: Vec<Vec<Rat>>, norm: NormKind) -> Self {
        InstanceDoc {
            version: INSTANCE_VERSION,
            dim: function.dim,
            expr: function.expr.clone(),
            domain: function.domain.as_ref().map(|d| {
                let mut rows = d.ineqs.clone();
                for e in &d.eqs {
                    rows.push(e.clone());
                    rows.push(Constraint::new(rat::neg(&e.normal), -&e.offset));
                }
                rows
            }),
            basepoints,
            norm,
            seed: None,
        }
    }

    /// Parses and validates; errors carry a line/column location.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance documents always serialize")
    }

    fn validate(&self) -> Result<()> {
        let invalid = |message: String| Error::Parse {
            location: "document".into(),
            message,
        };
        if self.version != INSTANCE_VERSION {
            return Err(invalid(format!("unsupported version {}", self.version)));
        }
        let f = self.function().map_err(|e| invalid(e.to_string()))?;
        for (i, p) in self.basepoints.iter().enumerate() {
            if p.len() != self.dim {
                return Err(invalid(format!("basepoint {i} has dimension {}", p.len())));
            }
            if !f.in_domain(p) {
                return Err(invalid(format!("basepoint {i} lies outside the domain")));
            }
        }
        Ok(())
    }

    pub fn function(&self) -> Result<PLFunction> {
        let domain = match &self.domain {
            None => None,
            Some(rows) => Some(HPolyhedron::from_constraints(self.dim, rows.clone(), Vec::new())?),
        };
        PLFunction::new(self.dim, self.expr.clone(), domain)
    }

    pub fn norm_spec(&self) -> NormSpec {
        norm_spec(self.norm)
    }
}

pub fn norm_spec(kind: NormKind) -> NormSpec {
    match kind {
        NormKind::L1 => NormSpec::l1(),
        NormKind::Linf => NormSpec::linf(),
        NormKind::L2Float => NormSpec::l2(l2_tolerance()),
    }
}

/// `"p/q,p/q,..."` as a point.
pub fn parse_point(text: &str) -> Result<Vec<Rat>> {
    text.split(',')
        .map(|s| {
            rat::parse_rat(s.trim()).ok_or_else(|| Error::Parse {
                location: "basepoint".into(),
                message: format!("invalid rational {s:?}"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat::{int, rat};

    const KINKED: &str = r#"{
        "version": 1,
        "dim": 1,
        "expr": {"max": [{"atom": {"g": ["-1"], "c": "0"}}, {"atom": {"g": ["1/2"], "c": "0"}}]},
        "basepoints": [["0"]],
        "norm": "linf"
    }"#;

    #[test]
    fn parses_and_round_trips() {
        let doc = InstanceDoc::parse(KINKED).unwrap();
        let f = doc.function().unwrap();
        assert_eq!(f.value(&[int(2)]).unwrap(), int(1));
        assert_eq!(f.value(&[int(-2)]).unwrap(), int(2));
        let again = InstanceDoc::parse(&doc.to_json()).unwrap();
        assert_eq!(doc, again);
    }

    #[test]
    fn domain_rows_and_points() {
        let text = r#"{"version": 1, "dim": 1, "expr": {"atom": {"g": ["1"], "c": "0"}},
                       "domain": [{"a": ["1"], "b": "0"}], "basepoints": [["0"], ["-3/2"]]}"#;
        let doc = InstanceDoc::parse(text).unwrap();
        assert_eq!(doc.norm, NormKind::Linf);
        let f = doc.function().unwrap();
        assert!(!f.in_domain(&[int(1)]));
        assert_eq!(doc.basepoints[1], vec![rat(-3, 2)]);
        assert_eq!(parse_point("1/2, -3").unwrap(), vec![rat(1, 2), int(-3)]);
    }

    #[test]
    fn errors_have_locations() {
        match InstanceDoc::parse("{\"version\": 1,\n \"dim\": }") {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 2")),
            other => panic!("expected a parse error, got {other:?}"),
        }
        let outside = r#"{"version": 1, "dim": 1, "expr": {"atom": {"g": ["1"], "c": "0"}},
                          "domain": [{"a": ["1"], "b": "0"}], "basepoints": [["1"]]}"#;
        assert!(matches!(InstanceDoc::parse(outside), Err(Error::Parse { .. })));
        let bad_rat = r#"{"version": 1, "dim": 1, "expr": {"atom": {"g": ["x"], "c": "0"}}}"#;
        assert!(InstanceDoc::parse(bad_rat).is_err());
    }
}
