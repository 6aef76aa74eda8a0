//! The query block shared by every report.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use schubloc::{Variant, WeylElement, WeylGroup};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Output {
    Roots,
    Bruhat,
    Comin,
    Tangent,
    RestrictChow,
    RestrictK,
    Mult,
    Hilbert,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    #[serde(rename = "type")]
    pub group: String,
    pub variant: Variant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    /// Reduced word for `x` (`X^w`) or for `w0 x` (`X_w`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
    pub outputs: Vec<Output>,
    pub terms: usize,
}

/// A query with its elements parsed.
pub struct Resolved {
    pub group: WeylGroup,
    pub w: Option<WeylElement>,
    pub x: Option<WeylElement>,
}

impl Resolved {
    pub fn pair(&self) -> Result<(&WeylElement, &WeylElement)> {
        match (&self.w, &self.x) {
            (Some(w), Some(x)) => Ok((w, x)),
            _ => Err(CliError::Usage("both --w and --x are required".into())),
        }
    }
}

impl Query {
    /// Build a normalized query: elements are stored in canonical form so
    /// that the serialized block parses back to the same value.
    pub fn new(
        group: &str,
        variant: Variant,
        w: Option<&str>,
        x: Option<&str>,
        word: Option<Vec<usize>>,
        outputs: Vec<Output>,
        terms: usize,
    ) -> Result<(Query, Resolved)> {
        let g = WeylGroup::from_label(group)?;
        let w = w.map(|s| g.parse_element(s)).transpose()?;
        let x = x.map(|s| g.parse_element(s)).transpose()?;
        let q = Query {
            group: g.root_system().label().to_string(),
            variant,
            w: w.as_ref().map(element_string),
            x: x.as_ref().map(element_string),
            word,
            outputs,
            terms,
        };
        Ok((q, Resolved { group: g, w, x }))
    }

    pub fn resolve(&self) -> Result<Resolved> {
        let (_, r) = Query::new(
            &self.group,
            self.variant,
            self.w.as_deref(),
            self.x.as_deref(),
            self.word.clone(),
            self.outputs.clone(),
            self.terms,
        )?;
        Ok(r)
    }
}

/// Space-separated one-line notation in type A, otherwise the canonical word
/// (`e` for the identity).
pub fn element_string(x: &WeylElement) -> String {
    if let Some(p) = x.to_one_line() {
        return join(&p);
    }
    if x.is_identity() {
        return "e".into();
    }
    join(x.word())
}

pub fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Integers in reports: a JSON number when it fits in `i64`, a decimal
/// string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Int(pub BigInt);

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int(v)
    }
}

impl From<&BigInt> for Int {
    fn from(v: &BigInt) -> Self {
        Int(v.clone())
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Int(v.into())),
            Raw::Str(s) => s.parse().map(Int).map_err(serde::de::Error::custom),
        }
    }
}

pub fn ints(v: &[BigInt]) -> Vec<Int> {
    v.iter().map(Int::from).collect()
}
