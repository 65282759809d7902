//! Canonical representatives of labeling equivalence classes.

use crate::error::{Error, Result};
use crate::families::Orbits;
use crate::graph::SignedGraph;
use crate::labeling::Labeling;

/// Which symmetries identify two labelings.
///
/// Complementation means `f ~ M - f` for any upper bound `M`. Composing two
/// complements gives a translation, so the generated group is
/// `f -> +-f + k`; only positive edge labels survive it, hence it is an
/// equivalence only when `n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EquivalenceSpec {
    pub pendant_permutation: bool,
    pub complementation: bool,
}

impl EquivalenceSpec {
    pub const PERMUTATION: Self = Self {
        pendant_permutation: true,
        complementation: false,
    };

    pub const FULL: Self = Self {
        pendant_permutation: true,
        complementation: true,
    };

    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        if self.complementation && g.n() > 0 {
            return Err(Error::ComplementationWithNegativeEdges(g.n()));
        }
        Ok(())
    }
}

/// Lexicographically least labeling equivalent to `f`.
///
/// Within the class of `f`, every translate `+-f + k` that stays
/// nonnegative is reachable, and translating down only decreases the vector,
/// so the minimum is attained at the two translates whose smallest label is 0.
pub fn canonical_form(f: &Labeling, orbits: &Orbits, equiv: EquivalenceSpec) -> Labeling {
    let mut candidates = Vec::with_capacity(2);
    if equiv.complementation && !f.is_empty() {
        let min = *f.values().iter().min().expect("nonempty");
        let max = f.max_label().expect("nonempty");
        candidates.push(f.values().iter().map(|&x| x - min).collect::<Vec<_>>());
        candidates.push(f.values().iter().map(|&x| max - x).collect());
    } else {
        candidates.push(f.values().to_vec());
    }
    if equiv.pendant_permutation {
        for values in &mut candidates {
            sort_within_orbits(values, orbits);
        }
    }
    Labeling::new(
        candidates
            .into_iter()
            .min()
            .expect("at least one candidate"),
    )
}

fn sort_within_orbits(values: &mut [u32], orbits: &Orbits) {
    for class in orbits.classes() {
        if class.len() < 2 {
            continue;
        }
        let mut labels: Vec<u32> = class.iter().map(|&v| values[v]).collect();
        labels.sort_unstable();
        for (&v, x) in class.iter().zip(labels) {
            values[v] = x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star_orbits(m: usize) -> Orbits {
        Orbits::new(m + 1, vec![vec![0], (1..=m).collect()]).unwrap()
    }

    #[test]
    fn pendant_sort() {
        let f: Labeling = vec![0, 2, 1].into();
        let c = canonical_form(&f, &star_orbits(2), EquivalenceSpec::PERMUTATION);
        assert_eq!(c.values(), &[0, 1, 2]);
        assert_eq!(
            canonical_form(&c, &star_orbits(2), EquivalenceSpec::PERMUTATION),
            c
        );
    }

    #[test]
    fn with_complementation() {
        let f: Labeling = vec![0, 2, 1].into();
        let c = canonical_form(&f, &star_orbits(2), EquivalenceSpec::FULL);
        assert_eq!(c.values(), &[0, 1, 2]);
        // (1; 2, 3) is the translate of (0; 1, 2); (3; 1, 2) is its complement
        for g in [vec![1, 2, 3], vec![3, 1, 2], vec![2, 0, 1]] {
            assert_eq!(
                canonical_form(&g.into(), &star_orbits(2), EquivalenceSpec::FULL),
                c
            );
        }
        // the second class stays apart
        let second = canonical_form(
            &vec![1, 0, 3].into(),
            &star_orbits(2),
            EquivalenceSpec::FULL,
        );
        assert_eq!(second.values(), &[1, 0, 3]);
        assert_eq!(
            canonical_form(
                &vec![2, 3, 0].into(),
                &star_orbits(2),
                EquivalenceSpec::FULL
            ),
            second
        );
    }

    #[test]
    fn without_symmetries_is_identity() {
        let none = EquivalenceSpec {
            pendant_permutation: false,
            complementation: false,
        };
        let f: Labeling = vec![3, 1, 2].into();
        assert_eq!(canonical_form(&f, &star_orbits(2), none), f);
    }
}
