//! Signed graphs: simple undirected graphs whose edges are tagged positive or
//! negative.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Edge sign. `Positive < Negative`, which fixes the canonical edge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "pos" | "positive" => Ok(Sign::Positive),
            "-" | "neg" | "negative" => Ok(Sign::Negative),
            other => Err(format!(
                "unknown sign `{other}` (expected +, -, pos or neg)"
            )),
        }
    }
}

/// An undirected signed edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    fn sort_key(&self) -> (Sign, usize, usize) {
        (self.sign, self.u, self.v)
    }
}

/// A `(p, m, n)` signed graph.
///
/// Edges are kept sorted by `(sign, min endpoint, max endpoint)` so that any
/// two graphs with the same edge set compare and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    p: usize,
    edges: Vec<Edge>,
    m: usize,
    n: usize,
    adjacency: Vec<Vec<(usize, Sign)>>,
}

impl SignedGraph {
    /// Builds a graph on vertices `0..p` from `(u, v, sign)` triples in any
    /// order and orientation.
    pub fn new(p: usize, edges: impl IntoIterator<Item = (usize, usize, Sign)>) -> Result<Self> {
        if p == 0 {
            return Err(Error::NoVertices);
        }
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            for vertex in [a, b] {
                if vertex >= p {
                    return Err(Error::VertexOutOfRange { vertex, p });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            list.push(Edge { u, v, sign });
        }
        list.sort_by_key(Edge::sort_key);

        let m = list.iter().filter(|e| e.sign == Sign::Positive).count();
        let n = list.len() - m;
        let mut adjacency = vec![Vec::new(); p];
        for e in &list {
            adjacency[e.u].push((e.v, e.sign));
            adjacency[e.v].push((e.u, e.sign));
        }
        Ok(Self {
            p,
            edges: list,
            m,
            n,
            adjacency,
        })
    }

    /// Number of vertices.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of positive edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of negative edges.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of edges, `m + n`.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn positive_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.sign == Sign::Positive)
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.sign == Sign::Negative)
    }

    /// Neighbors of `v` together with the sign of the connecting edge.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn negative_degree(&self, v: usize) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|(_, s)| s.is_negative())
            .count()
    }

    /// Largest label an additively graceful labeling may use:
    /// `m + ceil((n + 1) / 2)`.
    pub fn label_bound(&self) -> u32 {
        (self.m + (self.n + 2) / 2) as u32
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.p];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.p
    }

    pub fn is_tree(&self) -> bool {
        self.q() + 1 == self.p && self.is_connected()
    }
}
