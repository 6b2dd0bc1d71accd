//! Rendering of symmetric functions with q-series coefficients.
//!
//! Terms are flattened to (q-power, partition, rational) triples and sorted by
//! q-power first, then by the partition order of the underlying basis (which
//! lists partitions in reverse lexicographic order). Output is deterministic.

use num::One;
use serde::{Deserialize, Serialize};
use symchar::combinat::{partitions_of, Partition};
use symchar::qseries::{Rational, Trunc};
use symchar::symfunc::SymFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// One rendered term: coefficient of `q^q_power p_partition` (or whatever the
/// basis letter is), the coefficient as an exact "num/den" string.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonTerm {
    pub q: usize,
    pub partition: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonMeta {
    pub version: String,
    pub ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cache_hit: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonDocument {
    pub formula: String,
    pub n: u32,
    pub basis: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_q_degree: Option<usize>,
    pub terms: Vec<JsonTerm>,
    pub meta: JsonMeta,
}

/// Flatten to (q, partition, coefficient), sorted q-power first then the
/// reverse-lex partition order.
pub fn flatten(f: &SymFunc) -> Vec<(usize, Partition, Rational)> {
    let order = partitions_of(f.degree());
    let mut out = Vec::new();
    let max_q = f
        .terms()
        .map(|(_, s)| s.coeffs().len())
        .max()
        .unwrap_or(0);
    for q in 0..max_q {
        for lam in &order {
            let c = f.coeff(lam).coeff(q);
            if !num::Zero::is_zero(&c) {
                out.push((q, lam.clone(), c));
            }
        }
    }
    out
}

fn rational_string(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn partition_list(lam: &Partition) -> String {
    let parts: Vec<String> = lam.parts().iter().map(|p| p.to_string()).collect();
    parts.join(",")
}

pub fn render_text(f: &SymFunc) -> String {
    let letter = f.basis().letter();
    let terms = flatten(f);
    if terms.is_empty() {
        return "0".to_string();
    }
    let rendered: Vec<String> = terms
        .iter()
        .map(|(q, lam, c)| {
            let mut factors = Vec::new();
            if !c.is_one() {
                factors.push(rational_string(c));
            }
            match q {
                0 => {}
                1 => factors.push("q".to_string()),
                k => factors.push(format!("q^{k}")),
            }
            factors.push(format!("{letter}[{}]", partition_list(lam)));
            factors.join("*")
        })
        .collect();
    rendered.join(" + ")
}

pub fn render_latex(f: &SymFunc) -> String {
    let letter = f.basis().letter();
    let terms = flatten(f);
    if terms.is_empty() {
        return "0".to_string();
    }
    let rendered: Vec<String> = terms
        .iter()
        .map(|(q, lam, c)| {
            let mut factors = Vec::new();
            if !c.is_one() {
                if c.denom().is_one() {
                    factors.push(c.numer().to_string());
                } else {
                    factors.push(format!("\\tfrac{{{}}}{{{}}}", c.numer(), c.denom()));
                }
            }
            match q {
                0 => {}
                1 => factors.push("q".to_string()),
                k => factors.push(format!("q^{{{k}}}")),
            }
            factors.push(format!("{letter}_{{{}}}", partition_list(lam)));
            factors.join(" ")
        })
        .collect();
    rendered.join(" + ")
}

pub struct RenderInfo {
    pub formula: String,
    pub n: u32,
    pub max_q_degree: Option<usize>,
    pub meta: JsonMeta,
}

pub fn render(f: &SymFunc, format: Format, info: &RenderInfo) -> String {
    match format {
        Format::Text => render_text(f),
        Format::Latex => render_latex(f),
        Format::Json => {
            let max_q_degree = match (info.max_q_degree, truncation_of(f)) {
                (Some(d), _) => Some(d),
                (None, t) => t,
            };
            let doc = JsonDocument {
                formula: info.formula.clone(),
                n: info.n,
                basis: f.basis().letter().to_string(),
                max_q_degree,
                terms: flatten(f)
                    .into_iter()
                    .map(|(q, lam, c)| JsonTerm {
                        q,
                        partition: lam.parts().to_vec(),
                        coeff: rational_string(&c),
                    })
                    .collect(),
                meta: info.meta.clone(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
    }
}

fn truncation_of(f: &SymFunc) -> Option<usize> {
    f.terms()
        .filter_map(|(_, s)| match s.trunc() {
            Trunc::Exact => None,
            Trunc::At(d) => Some(d),
        })
        .min()
}
