//! Vertex labelings, their induced edge labels, and the two label
//! transformations that preserve positive edge labels.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// A candidate vertex labeling: `values[v]` is the label of vertex `v`.
///
/// Injectivity is not enforced on construction; [`crate::verify`] reports it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling {
    values: Vec<u32>,
}

impl Labeling {
    pub fn new(values: Vec<u32>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.values.get(v).copied()
    }

    pub fn max_label(&self) -> Option<u32> {
        self.values.iter().copied().max()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.values.len());
        self.values.iter().all(|x| seen.insert(*x))
    }

    /// Checks that the labeling covers exactly the vertices of `g`.
    pub fn check_domain(&self, g: &SignedGraph) -> Result<()> {
        if self.values.len() < g.p() {
            return Err(Error::MissingVertexLabel(self.values.len()));
        }
        if self.values.len() > g.p() {
            return Err(Error::ExtraVertexLabels {
                labels: self.values.len(),
                p: g.p(),
            });
        }
        Ok(())
    }

    /// The complementary labeling `M - f` with respect to the upper bound `M`.
    pub fn complement(&self, bound: u32) -> Result<Labeling> {
        let max = self.max_label().unwrap_or(0);
        if bound < max {
            return Err(Error::BoundTooSmall { bound, max });
        }
        Ok(Labeling::new(
            self.values.iter().map(|&x| bound - x).collect(),
        ))
    }

    /// `v -> f(v) + k` or `v -> k - f(v)`, both of which leave every
    /// `|f(u) - f(v)|` unchanged.
    pub fn affine_positive(&self, orientation: Orientation, shift: i64) -> Result<Labeling> {
        let sign = match orientation {
            Orientation::Forward => 1,
            Orientation::Reversed => -1,
        };
        self.values
            .iter()
            .enumerate()
            .map(|(vertex, &x)| {
                let value = sign * i64::from(x) + shift;
                u32::try_from(value).map_err(|_| Error::NegativeLabelProduced { vertex, value })
            })
            .collect::<Result<Vec<_>>>()
            .map(Labeling::new)
    }
}

impl From<Vec<u32>> for Labeling {
    fn from(values: Vec<u32>) -> Self {
        Self::new(values)
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The sign `s` in `g = s * f + k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Forward,
    Reversed,
}

/// Edge labels induced by a vertex labeling, listed in the graph's canonical
/// edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedLabels {
    /// `|f(u) - f(v)|` for each positive edge.
    pub positive: Vec<u32>,
    /// `f(u) + f(v)` for each negative edge.
    pub negative: Vec<u32>,
}

pub fn induced_edge_labels(g: &SignedGraph, f: &Labeling) -> Result<InducedLabels> {
    f.check_domain(g)?;
    let at = |v: usize| f.values[v];
    Ok(InducedLabels {
        positive: g
            .positive_edges()
            .map(|e| at(e.u).abs_diff(at(e.v)))
            .collect(),
        negative: g.negative_edges().map(|e| at(e.u) + at(e.v)).collect(),
    })
}
