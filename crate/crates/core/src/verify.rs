//! The additively graceful verifier.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::graph::SignedGraph;
use crate::labeling::{induced_edge_labels, Labeling};

/// One failed clause of the definition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    /// Several vertices share `label`.
    NotInjective { label: u32, vertices: Vec<usize> },
    LabelExceedsBound {
        vertex: usize,
        label: u32,
        bound: u32,
    },
    /// The positive edge labels are not exactly `{1, ..., m}`.
    PositiveLabelsWrong {
        missing: Vec<u32>,
        duplicated: Vec<u32>,
    },
    /// The negative edge labels are not exactly `{1, ..., n}`.
    NegativeLabelsWrong {
        missing: Vec<u32>,
        duplicated: Vec<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            ok: violations.is_empty(),
            violations,
        }
    }
}

/// Checks every clause of the definition and reports all failures.
///
/// The codomain bound is `m + ceil((n + 1) / 2)` even where a looser one would
/// still give distinct edge labels.
pub fn verify(g: &SignedGraph, f: &Labeling) -> Result<VerificationReport> {
    let induced = induced_edge_labels(g, f)?;
    let mut violations = Vec::new();

    let mut owners: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &label) in f.values().iter().enumerate() {
        owners.entry(label).or_default().push(v);
    }
    violations.extend(
        owners
            .into_iter()
            .filter(|(_, vs)| vs.len() > 1)
            .map(|(label, vertices)| Violation::NotInjective { label, vertices }),
    );

    let bound = g.label_bound();
    violations.extend(
        f.values()
            .iter()
            .enumerate()
            .filter(|(_, &label)| label > bound)
            .map(|(vertex, &label)| Violation::LabelExceedsBound {
                vertex,
                label,
                bound,
            }),
    );

    if let Some((missing, duplicated)) = mismatch(&induced.positive, g.m()) {
        violations.push(Violation::PositiveLabelsWrong {
            missing,
            duplicated,
        });
    }
    if let Some((missing, duplicated)) = mismatch(&induced.negative, g.n()) {
        violations.push(Violation::NegativeLabelsWrong {
            missing,
            duplicated,
        });
    }
    Ok(VerificationReport::from_violations(violations))
}

/// Compares a multiset of edge labels against `{1, ..., k}`.
fn mismatch(labels: &[u32], k: usize) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in labels {
        *counts.entry(x).or_default() += 1;
    }
    let missing: Vec<u32> = (1..=k as u32).filter(|x| !counts.contains_key(x)).collect();
    let duplicated: Vec<u32> = counts
        .iter()
        .filter(|(_, &c)| c > 1)
        .map(|(&x, _)| x)
        .collect();
    if missing.is_empty() && duplicated.is_empty() {
        None
    } else {
        Some((missing, duplicated))
    }
}
