//! Exhaustive search for additively graceful labelings.
//!
//! The search is complete modulo permutations of interchangeable pendants:
//! every additively graceful labeling is reachable after sorting labels within
//! each orbit. [`SearchOutcome::NotExists`] is therefore a certificate that no
//! labeling exists at all.
//!
//! The tree is split into first-level branches that are explored
//! independently and merged in branch order, so the verdict, the witness and
//! the class counts do not depend on the number of worker threads.

mod canonical;
mod engine;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::Orbits;
use crate::graph::SignedGraph;
use crate::labeling::Labeling;

pub use canonical::{canonical_form, EquivalenceSpec};
use engine::{Branch, Flow, Problem};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_nodes: 1_000_000_000,
            max_seconds: 300.0,
        }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Result<Self> {
        let budget = Self {
            max_nodes,
            max_seconds,
        };
        budget.validate()?;
        Ok(budget)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_nodes == 0 {
            return Err(Error::InvalidBudget("max_nodes must be positive"));
        }
        if self.max_seconds.is_nan() || self.max_seconds <= 0.0 {
            return Err(Error::InvalidBudget("max_seconds must be positive"));
        }
        Ok(())
    }

    fn deadline(&self) -> Instant {
        let now = Instant::now();
        Duration::try_from_secs_f64(self.max_seconds)
            .ok()
            .and_then(|d| now.checked_add(d))
            .unwrap_or(now + Duration::from_secs(86_400 * 365))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Exists {
        witness: Labeling,
        nodes_explored: u64,
    },
    NotExists {
        nodes_explored: u64,
    },
    Aborted {
        nodes_explored: u64,
    },
}

impl SearchOutcome {
    pub fn nodes_explored(&self) -> u64 {
        match self {
            SearchOutcome::Exists { nodes_explored, .. }
            | SearchOutcome::NotExists { nodes_explored }
            | SearchOutcome::Aborted { nodes_explored } => *nodes_explored,
        }
    }

    pub fn witness(&self) -> Option<&Labeling> {
        match self {
            SearchOutcome::Exists { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn is_aborted(&self) -> bool {
        matches!(self, SearchOutcome::Aborted { .. })
    }
}

/// Equivalence classes of additively graceful labelings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub class_count: usize,
    /// Canonical forms, sorted.
    pub representatives: Vec<Labeling>,
    pub nodes_explored: u64,
}

/// Runs `work` on every branch, on `jobs` threads when `jobs > 1`. Results
/// come back in branch order either way.
fn map_branches<T, F>(branches: &[Branch], jobs: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Branch) -> T + Sync + Send,
{
    if jobs <= 1 {
        return branches.iter().map(work).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| branches.par_iter().map(&work).collect()),
        Err(_) => branches.iter().map(work).collect(),
    }
}

/// Looks for one additively graceful labeling of `g`.
pub fn exhaustive_search(g: &SignedGraph, orbits: &Orbits, budget: &SearchBudget) -> SearchOutcome {
    exhaustive_search_with_jobs(g, orbits, budget, 1)
}

pub fn exhaustive_search_with_jobs(
    g: &SignedGraph,
    orbits: &Orbits,
    budget: &SearchBudget,
    jobs: usize,
) -> SearchOutcome {
    let problem = Problem::new(g, orbits);
    let branches = problem.branches();
    let deadline = budget.deadline();
    let run = |branch: &Branch, max_nodes: u64| {
        let mut witness = None;
        let (flow, nodes) = problem.run_branch(branch, max_nodes, deadline, |labels| {
            witness = Some(Labeling::new(labels.to_vec()));
            Flow::Stop
        });
        (flow, nodes, witness)
    };

    let results: Box<dyn Iterator<Item = _>> = if jobs <= 1 {
        Box::new(branches.iter().map(|b| run(b, budget.max_nodes)))
    } else {
        Box::new(map_branches(&branches, jobs, |b| run(b, budget.max_nodes)).into_iter())
    };
    let mut total = 0u64;
    for (flow, nodes, witness) in results {
        total += nodes;
        if flow == Flow::Abort || total > budget.max_nodes {
            return SearchOutcome::Aborted {
                nodes_explored: total,
            };
        }
        if flow == Flow::Stop {
            return SearchOutcome::Exists {
                witness: witness.expect("stop implies a witness"),
                nodes_explored: total,
            };
        }
    }
    SearchOutcome::NotExists {
        nodes_explored: total,
    }
}

/// Enumerates every additively graceful labeling and counts the classes under
/// `equiv`.
pub fn count_classes(
    g: &SignedGraph,
    orbits: &Orbits,
    equiv: EquivalenceSpec,
    budget: &SearchBudget,
) -> Result<ClassReport> {
    count_classes_with_jobs(g, orbits, equiv, budget, 1)
}

pub fn count_classes_with_jobs(
    g: &SignedGraph,
    orbits: &Orbits,
    equiv: EquivalenceSpec,
    budget: &SearchBudget,
    jobs: usize,
) -> Result<ClassReport> {
    equiv.validate(g)?;
    // the orbit-ordered search only visits one labeling per permutation class
    let discrete;
    let search_orbits = if equiv.pendant_permutation {
        orbits
    } else {
        discrete = Orbits::discrete(g.p());
        &discrete
    };
    let problem = Problem::new(g, search_orbits);
    let branches = problem.branches();
    let deadline = budget.deadline();

    let results = map_branches(&branches, jobs, |branch| {
        let mut forms = BTreeSet::new();
        let (flow, nodes) = problem.run_branch(branch, budget.max_nodes, deadline, |labels| {
            let f = Labeling::new(labels.to_vec());
            forms.insert(canonical_form(&f, orbits, equiv));
            Flow::Continue
        });
        (flow, nodes, forms)
    });

    let mut total = 0u64;
    let mut all = BTreeSet::new();
    for (flow, nodes, forms) in results {
        total += nodes;
        if flow == Flow::Abort || total > budget.max_nodes {
            return Err(Error::SearchAborted { nodes: total });
        }
        all.extend(forms);
    }
    let representatives: Vec<Labeling> = all.into_iter().collect();
    Ok(ClassReport {
        class_count: representatives.len(),
        representatives,
        nodes_explored: total,
    })
}
