//! Report structures. Field order is declaration order, so the JSON layout
//! is stable.

use serde::{Deserialize, Serialize};

use crate::query::{Int, Query};

pub const TOOL: &str = "schubloc";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub query: Query,
    pub results: Results,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Results {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootsResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruhat: Option<BruhatResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comin: Option<CominResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent: Option<TangentResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restrict_chow: Option<RestrictResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restrict_k: Option<RestrictResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<MultResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertResult>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootRecord {
    pub id: usize,
    pub name: String,
    pub coords: Vec<i32>,
    pub height: i32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootsResult {
    pub label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub num_positive: usize,
    pub positive: Vec<RootRecord>,
    pub highest: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BruhatResult {
    pub length_w: usize,
    pub length_x: usize,
    /// `x <= w`.
    pub x_leq_w: bool,
    /// `w <= x`.
    pub w_leq_x: bool,
    /// `subword`, or `subword+tableau` when the type A criterion was checked too.
    pub criterion: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub roots: Vec<String>,
    pub multipliers: Vec<Int>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CominResult {
    pub feasible: bool,
    pub exactness: schubloc::Exactness,
    pub parabolic: Vec<usize>,
    /// The roots `beta` whose T-curves lie in the slice.
    pub curve_roots: Vec<String>,
    /// Their weights `-x beta`, on which the certificate must be `-1`.
    pub slice_weights: Vec<String>,
    /// `alpha_i(v)` for each simple root.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
    pub kernel: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSets {
    pub down: Vec<String>,
    pub down_p: Vec<String>,
    pub down_l: Vec<String>,
    pub up: Vec<String>,
    pub up_p: Vec<String>,
    pub up_l: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Zariski {
    pub weights: Vec<String>,
    pub tangent_dim: usize,
    pub smooth: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TangentResult {
    pub dim: usize,
    pub slice_dimension: usize,
    pub curve_roots: Vec<String>,
    /// Type A only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zariski: Option<Zariski>,
    pub sets: RootSets,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WordRoot {
    pub position: usize,
    pub letter: usize,
    pub root: String,
    pub coords: Vec<i32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubexpressionRecord {
    pub positions: Vec<usize>,
    pub roots: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RestrictResult {
    pub kind: String,
    /// The element the word spells: `x`, or `w0 x` for `X_w`.
    pub word_for: String,
    pub word: Vec<usize>,
    pub roots: Vec<WordRoot>,
    pub subexpressions: Vec<SubexpressionRecord>,
    pub count: usize,
    pub class: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultResult {
    pub multiplicity: Int,
    pub source: schubloc::MultiplicitySource,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vec<String>>,
    /// Value from the cominuscule-element shortcut, when it applies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shortcut: Option<Int>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyTerm {
    pub coefficient: Int,
    pub power: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HilbertPolyRecord {
    /// `sum a C(k + m - 1, m - 1)` as pairs `(a, m)`.
    pub binomial_terms: Vec<PolyTerm>,
    /// Coefficients in `k`, lowest degree first.
    pub coefficients: Vec<String>,
    pub display: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultCheck {
    pub numerator_at_one: Int,
    pub formula: Int,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HilbertResult {
    pub canonical: String,
    pub numerator: Vec<Int>,
    pub dim: u32,
    pub d: u64,
    pub taylor_prefix: Vec<Int>,
    pub stable_from: usize,
    pub hilbert_polynomial: HilbertPolyRecord,
    /// `sum c / (t - 1)^p`.
    pub partial_fractions: Vec<PolyTerm>,
    pub multiplicity: Int,
    pub multiplicity_check: MultCheck,
    pub diagnostics: Vec<String>,
}
