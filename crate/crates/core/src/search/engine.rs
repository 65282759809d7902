//! Backtracking over vertex labels.
//!
//! Vertices are assigned in a fixed order. After each assignment the induced
//! labels of edges to already-labeled neighbors must be in range and unused;
//! labels within an orbit must increase with the vertex index. For `n >= 2`
//! the search is seeded: the vertex labeled 0 carries negative edges to the
//! vertices labeled 1 and 2, so every seed fixes those three vertices up
//! front.

use std::time::Instant;

use fixedbitset::FixedBitSet;

use crate::families::Orbits;
use crate::graph::{Sign, SignedGraph};

const UNSET: u32 = u32::MAX;
const DEADLINE_CHECK_INTERVAL: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
    Abort,
}

/// One independent subtree: a forced prefix plus the order of the remaining
/// vertices.
#[derive(Debug, Clone)]
pub(crate) struct Branch {
    pub prefix: Vec<(usize, u32)>,
    pub rest: Vec<usize>,
}

pub(crate) struct Problem<'a> {
    graph: &'a SignedGraph,
    orbits: &'a Orbits,
    bound: u32,
    m: u32,
    n: u32,
}

impl<'a> Problem<'a> {
    pub fn new(graph: &'a SignedGraph, orbits: &'a Orbits) -> Self {
        debug_assert_eq!(graph.p(), orbits.p());
        Self {
            graph,
            orbits,
            bound: graph.label_bound(),
            m: graph.m() as u32,
            n: graph.n() as u32,
        }
    }

    /// Partial assignments every additively graceful labeling (up to orbit
    /// order) extends.
    fn seeds(&self) -> Vec<Vec<(usize, u32)>> {
        if self.n < 2 {
            return vec![Vec::new()];
        }
        let mut seeds = Vec::new();
        for zero in 0..self.graph.p() {
            let negative: Vec<usize> = self
                .graph
                .neighbors(zero)
                .iter()
                .filter(|(_, s)| s.is_negative())
                .map(|&(w, _)| w)
                .collect();
            for &one in &negative {
                for &two in &negative {
                    if one != two {
                        seeds.push(vec![(zero, 0), (one, 1), (two, 2)]);
                    }
                }
            }
        }
        seeds
    }

    /// First-level partition of the search tree, in a fixed order.
    pub fn branches(&self) -> Vec<Branch> {
        let mut out = Vec::new();
        for seed in self.seeds() {
            let mut state = State::new(self);
            if !seed.iter().all(|&(v, x)| state.assign(self, v, x)) {
                continue;
            }
            let rest: Vec<usize> = (0..self.graph.p())
                .filter(|v| seed.iter().all(|&(s, _)| s != *v))
                .collect();
            let Some((&first, tail)) = rest.split_first() else {
                out.push(Branch { prefix: seed, rest });
                continue;
            };
            let (lo, hi) = state.orbit_window(self, first);
            for x in lo..=hi {
                if state.assign(self, first, x) {
                    state.unassign(self, first);
                    let mut prefix = seed.clone();
                    prefix.push((first, x));
                    out.push(Branch {
                        prefix,
                        rest: tail.to_vec(),
                    });
                }
            }
        }
        out
    }

    /// Explores one branch, calling `visit` on every complete labeling.
    pub fn run_branch<F>(
        &self,
        branch: &Branch,
        max_nodes: u64,
        deadline: Instant,
        mut visit: F,
    ) -> (Flow, u64)
    where
        F: FnMut(&[u32]) -> Flow,
    {
        let mut state = State::new(self);
        for &(v, x) in &branch.prefix {
            let ok = state.assign(self, v, x);
            debug_assert!(ok, "branch prefixes are consistent by construction");
        }
        state.nodes = 1;
        let mut walk = Walk {
            problem: self,
            state,
            order: &branch.rest,
            max_nodes,
            deadline,
        };
        let flow = walk.dfs(0, &mut visit);
        (flow, walk.state.nodes)
    }
}

struct State {
    labels: Vec<u32>,
    used_vertex: FixedBitSet,
    used_positive: FixedBitSet,
    used_negative: FixedBitSet,
    assigned: usize,
    nodes: u64,
}

impl State {
    fn new(problem: &Problem<'_>) -> Self {
        Self {
            labels: vec![UNSET; problem.graph.p()],
            used_vertex: FixedBitSet::with_capacity(problem.bound as usize + 1),
            used_positive: FixedBitSet::with_capacity(problem.m as usize + 1),
            used_negative: FixedBitSet::with_capacity(problem.n as usize + 1),
            assigned: 0,
            nodes: 0,
        }
    }

    /// Label range for `v` allowed by the orbit ordering.
    fn orbit_window(&self, problem: &Problem<'_>, v: usize) -> (u32, u32) {
        let mut lo = 0;
        let mut hi = problem.bound;
        for &w in problem.orbits.class_of(v) {
            let x = self.labels[w];
            if x == UNSET {
                continue;
            }
            if w < v {
                lo = lo.max(x + 1);
            } else if w > v && x > 0 {
                hi = hi.min(x - 1);
            } else if w > v {
                return (1, 0);
            }
        }
        (lo, hi)
    }

    fn edge_label(&self, x: u32, w: usize, sign: Sign) -> Option<u32> {
        let y = self.labels[w];
        (y != UNSET).then(|| match sign {
            Sign::Positive => x.abs_diff(y),
            Sign::Negative => x + y,
        })
    }

    /// Assigns `x` to `v` if every constraint touching labeled vertices holds.
    /// Leaves the state untouched on failure.
    fn assign(&mut self, problem: &Problem<'_>, v: usize, x: u32) -> bool {
        if x > problem.bound || self.used_vertex.contains(x as usize) {
            return false;
        }
        let (lo, hi) = self.orbit_window(problem, v);
        if x < lo || x > hi {
            return false;
        }
        let neighbors = problem.graph.neighbors(v);
        for (k, &(w, sign)) in neighbors.iter().enumerate() {
            let Some(label) = self.edge_label(x, w, sign) else {
                continue;
            };
            let (limit, used) = match sign {
                Sign::Positive => (problem.m, &mut self.used_positive),
                Sign::Negative => (problem.n, &mut self.used_negative),
            };
            if label == 0 || label > limit || used.contains(label as usize) {
                // roll back the edges already taken for this vertex
                for &(w2, s2) in &neighbors[..k] {
                    if let Some(l2) = self.edge_label(x, w2, s2) {
                        self.used_mut(s2).set(l2 as usize, false);
                    }
                }
                return false;
            }
            used.insert(label as usize);
        }
        self.labels[v] = x;
        self.used_vertex.insert(x as usize);
        self.assigned += 1;
        true
    }

    fn unassign(&mut self, problem: &Problem<'_>, v: usize) {
        let x = self.labels[v];
        debug_assert_ne!(x, UNSET);
        self.labels[v] = UNSET;
        for &(w, sign) in problem.graph.neighbors(v) {
            if let Some(label) = self.edge_label(x, w, sign) {
                self.used_mut(sign).set(label as usize, false);
            }
        }
        self.used_vertex.set(x as usize, false);
        self.assigned -= 1;
    }

    fn used_mut(&mut self, sign: Sign) -> &mut FixedBitSet {
        match sign {
            Sign::Positive => &mut self.used_positive,
            Sign::Negative => &mut self.used_negative,
        }
    }
}

struct Walk<'p, 'g> {
    problem: &'p Problem<'g>,
    state: State,
    order: &'p [usize],
    max_nodes: u64,
    deadline: Instant,
}

impl Walk<'_, '_> {
    fn dfs<F>(&mut self, depth: usize, visit: &mut F) -> Flow
    where
        F: FnMut(&[u32]) -> Flow,
    {
        let Some(&v) = self.order.get(depth) else {
            return visit(&self.state.labels);
        };
        // pigeonhole: not enough unused vertex labels for the remaining vertices
        let free = self.problem.bound as usize + 1 - self.state.assigned;
        if free < self.order.len() - depth {
            return Flow::Continue;
        }
        let (lo, hi) = self.state.orbit_window(self.problem, v);
        for x in lo..=hi {
            if !self.state.assign(self.problem, v, x) {
                continue;
            }
            self.state.nodes += 1;
            if self.state.nodes > self.max_nodes
                || (self.state.nodes.is_multiple_of(DEADLINE_CHECK_INTERVAL)
                    && Instant::now() >= self.deadline)
            {
                self.state.unassign(self.problem, v);
                return Flow::Abort;
            }
            let flow = self.dfs(depth + 1, visit);
            self.state.unassign(self.problem, v);
            if flow != Flow::Continue {
                return flow;
            }
        }
        Flow::Continue
    }
}
