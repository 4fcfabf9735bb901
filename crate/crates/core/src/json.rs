//! JSON wire format for polynomials.
//!
//! ```text
//! {"m":1,"n":1,"p":null,"terms":[{"e":[0,1],"c":"-1"},{"e":[1,0],"c":"1"}]}
//! ```
//!
//! Terms are written in canonical order, coefficients as decimal integers or
//! reduced `a/b` fractions (residues in `[0,p)` when `p` is set). Parsing is
//! strict: duplicate exponent vectors and zero coefficients are rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::profile::Profile;
use crate::scalar::Coefficient;
use crate::weight::Weight;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub e: Vec<i64>,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDoc {
    pub m: usize,
    pub n: usize,
    pub p: Option<u64>,
    pub terms: Vec<TermDoc>,
}

impl From<&LaurentPolynomial> for PolynomialDoc {
    fn from(f: &LaurentPolynomial) -> Self {
        let profile = f.profile();
        PolynomialDoc {
            m: profile.m(),
            n: profile.n(),
            p: profile.p(),
            terms: f
                .terms()
                .map(|(w, c)| TermDoc {
                    e: w.entries().to_vec(),
                    c: c.to_canonical_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialDoc> for LaurentPolynomial {
    type Error = Error;

    fn try_from(doc: PolynomialDoc) -> Result<Self> {
        let profile = Profile::new(doc.m, doc.n, doc.p)?;
        let ch = profile.characteristic();
        let mut seen = std::collections::BTreeSet::new();
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in doc.terms {
            let w = Weight::new(t.e);
            if w.len() != profile.rank() {
                return Err(Error::Parse(format!(
                    "exponent vector {w} has length {}, expected {}",
                    w.len(),
                    profile.rank()
                )));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::Parse(format!("duplicate exponent vector {w}")));
            }
            let c = Coefficient::parse(ch, &t.c)?;
            if c.is_zero() {
                return Err(Error::Parse(format!("zero coefficient at {w}")));
            }
            terms.push((w, c));
        }
        LaurentPolynomial::from_terms(profile, terms)
    }
}

pub fn to_json_value(f: &LaurentPolynomial) -> serde_json::Value {
    serde_json::to_value(PolynomialDoc::from(f)).expect("polynomial doc serializes")
}

/// Compact canonical JSON text.
pub fn to_json_string(f: &LaurentPolynomial) -> String {
    serde_json::to_string(&PolynomialDoc::from(f)).expect("polynomial doc serializes")
}

pub fn parse_polynomial(text: &str) -> Result<LaurentPolynomial> {
    let doc: PolynomialDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))?;
    LaurentPolynomial::try_from(doc)
}

pub fn from_json_value(value: &serde_json::Value) -> Result<LaurentPolynomial> {
    let doc: PolynomialDoc = serde_json::from_value(value.clone())
        .map_err(|e| Error::Parse(format!("malformed JSON: {e}")))?;
    LaurentPolynomial::try_from(doc)
}

/// Reorders terms and normalizes coefficient spelling.
pub fn canonicalize(text: &str) -> Result<String> {
    parse_polynomial(text).map(|f| to_json_string(&f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_c1_round_trip() {
        let doc = r#"{"m":1,"n":1,"p":null,"terms":[{"e":[0,1],"c":"-1"},{"e":[1,0],"c":"1"}]}"#;
        let f = parse_polynomial(doc).unwrap();
        assert_eq!(f.to_string(), "-y1 + x1");
        assert_eq!(to_json_string(&f), doc);
    }

    #[test]
    fn canonicalize_sorts_and_reduces() {
        let doc = r#"{"m":1,"n":1,"p":null,"terms":[{"e":[1,0],"c":"2/4"},{"e":[0,-1],"c":"3"}]}"#;
        assert_eq!(
            canonicalize(doc).unwrap(),
            r#"{"m":1,"n":1,"p":null,"terms":[{"e":[0,-1],"c":"3"},{"e":[1,0],"c":"1/2"}]}"#
        );
    }

    #[test]
    fn rejects_schema_violations() {
        let dup = r#"{"m":1,"n":1,"p":null,"terms":[{"e":[1,0],"c":"1"},{"e":[1,0],"c":"2"}]}"#;
        assert!(parse_polynomial(dup).is_err());
        let zero = r#"{"m":1,"n":1,"p":null,"terms":[{"e":[1,0],"c":"0"}]}"#;
        assert!(parse_polynomial(zero).is_err());
        let arity = r#"{"m":1,"n":1,"p":null,"terms":[{"e":[1,0,0],"c":"1"}]}"#;
        assert!(parse_polynomial(arity).is_err());
        let nonprime = r#"{"m":1,"n":1,"p":4,"terms":[]}"#;
        assert!(parse_polynomial(nonprime).is_err());
        assert!(parse_polynomial("{not json").is_err());
        let zero_mod = r#"{"m":1,"n":1,"p":3,"terms":[{"e":[1,0],"c":"3"}]}"#;
        assert!(parse_polynomial(zero_mod).is_err());
    }
}
