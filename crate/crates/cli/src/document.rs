//! The JSON graph document read and written by every subcommand.
//!
//! ```json
//! {
//!   "version": 1,
//!   "family": { "kind": "star", "m": 2, "n": 0 },
//!   "p": 3, "m": 2, "n": 0,
//!   "edges": [[0, 1, "+"], [0, 2, "+"]],
//!   "labels": { "0": 0, "1": 1, "2": 2 },
//!   "verdict": { "status": "Exists", "provenance": "theorem", "theorem": "star.case1" }
//! }
//! ```
//!
//! `family` is optional; without it the edge list alone defines the graph.
//! `labels` and `verdict` are optional.

use std::collections::BTreeMap;

use anyhow::{bail, ensure, Context};
use serde::{Deserialize, Serialize};
use signed_graceful::{
    Config, DoubleStarConfig, FamilyGraph, Labeling, Provenance, Sign, SignedGraph, StarConfig,
    TheoremTag, Verdict, VerdictStatus,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilyDescriptor {
    Star {
        m: usize,
        n: usize,
    },
    DoubleStar {
        l: usize,
        r: usize,
        neg_pendants_left: usize,
        neg_pendants_right: usize,
        bridge: Sign,
    },
}

impl From<Config> for FamilyDescriptor {
    fn from(cfg: Config) -> Self {
        match cfg {
            Config::Star(c) => FamilyDescriptor::Star { m: c.m, n: c.n },
            Config::DoubleStar(c) => FamilyDescriptor::DoubleStar {
                l: c.l,
                r: c.r,
                neg_pendants_left: c.left_neg,
                neg_pendants_right: c.right_neg,
                bridge: c.bridge,
            },
        }
    }
}

impl TryFrom<FamilyDescriptor> for Config {
    type Error = signed_graceful::Error;

    fn try_from(d: FamilyDescriptor) -> Result<Self, Self::Error> {
        Ok(match d {
            FamilyDescriptor::Star { m, n } => StarConfig::new(m, n)?.into(),
            FamilyDescriptor::DoubleStar {
                l,
                r,
                neg_pendants_left,
                neg_pendants_right,
                bridge,
            } => DoubleStarConfig::new(l, r, neg_pendants_left, neg_pendants_right, bridge).into(),
        })
    }
}

/// Flat form of a [`Verdict`] without the witness (that lives in `labels`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictMeta {
    pub status: VerdictStatus,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes_explored: Option<u64>,
}

pub fn provenance_fields(p: Provenance) -> (String, Option<TheoremTag>) {
    match p {
        Provenance::Theorem(tag) => ("theorem".into(), Some(tag)),
        other => (other.to_string(), None),
    }
}

pub fn provenance_from_fields(
    name: &str,
    theorem: Option<TheoremTag>,
) -> anyhow::Result<Provenance> {
    Ok(match (name, theorem) {
        ("theorem", Some(tag)) => Provenance::Theorem(tag),
        ("theorem", None) => bail!("provenance `theorem` without a theorem tag"),
        ("search-witness", None) => Provenance::SearchWitness,
        ("search-exhaustion", None) => Provenance::SearchExhaustion,
        ("budget-exceeded", None) => Provenance::BudgetExceeded,
        ("no-theorem", None) => Provenance::NoTheorem,
        (other, None) => bail!("unknown provenance `{other}`"),
        (other, Some(_)) => bail!("provenance `{other}` does not take a theorem tag"),
    })
}

impl From<&Verdict> for VerdictMeta {
    fn from(v: &Verdict) -> Self {
        let (provenance, theorem) = provenance_fields(v.provenance);
        Self {
            status: v.status,
            provenance,
            theorem,
            nodes_explored: v.nodes_explored,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyDescriptor>,
    pub p: usize,
    pub m: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize, Sign)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<usize, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictMeta>,
}

/// A document after validation.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub config: Option<Config>,
    pub graph: SignedGraph,
    pub labeling: Option<Labeling>,
}

impl GraphDocument {
    pub fn new(graph: &SignedGraph, family: Option<Config>) -> Self {
        Self {
            version: FORMAT_VERSION,
            family: family.map(Into::into),
            p: graph.p(),
            m: graph.m(),
            n: graph.n(),
            edges: graph.edges().iter().map(|e| (e.u, e.v, e.sign)).collect(),
            labels: None,
            verdict: None,
        }
    }

    pub fn from_family(family: &FamilyGraph) -> Self {
        Self::new(&family.graph, Some(family.config))
    }

    pub fn with_labeling(mut self, f: &Labeling) -> Self {
        self.labels = Some(f.values().iter().copied().enumerate().collect());
        self
    }

    pub fn with_verdict(mut self, v: &Verdict) -> Self {
        self.verdict = Some(v.into());
        self
    }

    pub fn from_json(text: &str) -> anyhow::Result<Self> {
        serde_json::from_str(text).context("malformed graph document")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Checks the document against the graph invariants and returns the
    /// graph it describes.
    pub fn parse(&self) -> anyhow::Result<Parsed> {
        ensure!(
            self.version == FORMAT_VERSION,
            "unsupported document version {} (expected {FORMAT_VERSION})",
            self.version
        );
        let graph = SignedGraph::new(self.p, self.edges.iter().copied())?;
        ensure!(
            graph.m() == self.m && graph.n() == self.n,
            "edge list has m={} n={} but the document says m={} n={}",
            graph.m(),
            graph.n(),
            self.m,
            self.n
        );
        let config = match self.family {
            Some(d) => {
                let cfg = Config::try_from(d)?;
                let expected = cfg.build()?.graph;
                ensure!(
                    expected == graph,
                    "edge list does not match the family {cfg}"
                );
                Some(cfg)
            }
            None => None,
        };
        let labeling = match &self.labels {
            Some(map) => {
                if let Some(&v) = map.keys().find(|&&v| v >= self.p) {
                    bail!("label given for vertex {v} but p = {}", self.p);
                }
                let values = (0..self.p)
                    .map(|v| {
                        map.get(&v)
                            .copied()
                            .with_context(|| format!("vertex {v} has no label"))
                    })
                    .collect::<anyhow::Result<Vec<_>>>()?;
                Some(Labeling::new(values))
            }
            None => None,
        };
        Ok(Parsed {
            config,
            graph,
            labeling,
        })
    }
}
