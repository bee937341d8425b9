use gpss_core::algorithms::{independent_lower_bound, size_lower_bound, Verdict};
use gpss_core::generator::{expected_degree_lower_bound, GenOutcome, GenParams, RNG_NAME};
use gpss_core::{format_decimal, LinearHypergraph, Rational};
use serde::{Deserialize, Serialize};

use crate::suite::InputFormat;

pub fn ratio(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// What `solve` prints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub instance: String,
    pub format: InputFormat,
    pub algorithm: String,
    pub n: usize,
    pub edges: usize,
    pub coll_total: usize,
    pub size: usize,
    pub maximal: bool,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_seed: Option<u64>,
    /// `2n^2 / (coll + 2n)`.
    pub bound: String,
    pub bound_decimal: String,
    pub independent_bound: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independent_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimum: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_exhausted: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes_explored: Option<u64>,
    pub members: Vec<usize>,
}

impl ResultRecord {
    pub fn new(
        instance: String,
        format: InputFormat,
        h: &LinearHypergraph,
        algorithm: &str,
        members: Vec<usize>,
        verdict: &Verdict,
    ) -> Self {
        let bound = size_lower_bound(h);
        Self {
            instance,
            format,
            algorithm: algorithm.to_string(),
            n: h.n(),
            edges: h.edges().len(),
            coll_total: h.coll_stats().coll_total,
            size: members.len(),
            maximal: *verdict == Verdict::OkAndMaximal,
            verdict: verdict.to_string(),
            order_seed: None,
            bound: ratio(bound),
            bound_decimal: format_decimal(bound, 3),
            independent_bound: ratio(independent_lower_bound(h)),
            independent_size: None,
            optimum: None,
            optimal: None,
            budget_exhausted: None,
            nodes_explored: None,
            members,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("record fields are TOML-representable")
    }
}

/// `key: value` sidecar written next to a generated hypergraph.
pub fn generator_metadata(params: &GenParams, out: &GenOutcome) -> String {
    let bound = expected_degree_lower_bound(params.d, params.m).expect("m validated by generator");
    let lines = [
        ("generator", RNG_NAME.to_string()),
        ("seed", params.seed.to_string()),
        ("stream", params.stream.to_string()),
        ("n", params.n.to_string()),
        ("m", params.m.to_string()),
        ("d", params.d.to_string()),
        ("attempts", (out.accepted + out.rejections).to_string()),
        ("accepted", out.accepted.to_string()),
        ("rejections", out.rejections.to_string()),
        ("avg_degree_raw", ratio(out.avg_degree_raw)),
        ("avg_degree_raw_decimal", format_decimal(out.avg_degree_raw, 3)),
        ("expected_degree_lower_bound", ratio(bound)),
        ("edges_kept", out.hypergraph.edges().len().to_string()),
    ];
    lines.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}
