//! Parametric signed stars and signed double stars.
//!
//! Vertex numbering is fixed:
//!
//! * star: center `z = 0`, then the negative pendants `u_1..u_n`, then the
//!   positive pendants `v_1..v_m`;
//! * double star: `z_1 = 0`, `z_2 = 1`, then the negative pendants of `z_1`
//!   (`u_i`), the positive pendants of `z_1` (`v_i`), the negative pendants of
//!   `z_2` (`y_i`) and the positive pendants of `z_2` (`w_i`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// A star with `m` positive and `n` negative pendant edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StarConfig {
    pub m: usize,
    pub n: usize,
}

impl StarConfig {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let cfg = Self { m, n };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m + self.n == 0 {
            return Err(Error::EmptyStar);
        }
        Ok(())
    }

    pub fn p(&self) -> usize {
        self.m + self.n + 1
    }

    pub fn center(&self) -> usize {
        0
    }

    /// Vertex of `u_i`, `1 <= i <= n`.
    pub fn u(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        i
    }

    /// Vertex of `v_i`, `1 <= i <= m`.
    pub fn v(&self, i: usize) -> usize {
        debug_assert!((1..=self.m).contains(&i));
        self.n + i
    }
}

/// Two centers joined by a bridge edge, each carrying positive and negative
/// pendants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DoubleStarConfig {
    /// Positive pendants at `z_1`.
    pub l: usize,
    /// Positive pendants at `z_2`.
    pub r: usize,
    /// Negative pendants at `z_1`.
    pub left_neg: usize,
    /// Negative pendants at `z_2`.
    pub right_neg: usize,
    pub bridge: Sign,
}

impl DoubleStarConfig {
    pub fn new(l: usize, r: usize, left_neg: usize, right_neg: usize, bridge: Sign) -> Self {
        Self {
            l,
            r,
            left_neg,
            right_neg,
            bridge,
        }
    }

    pub fn p(&self) -> usize {
        self.l + self.r + self.left_neg + self.right_neg + 2
    }

    pub fn m(&self) -> usize {
        self.l + self.r + usize::from(self.bridge == Sign::Positive)
    }

    pub fn n(&self) -> usize {
        self.left_neg + self.right_neg + usize::from(self.bridge == Sign::Negative)
    }

    /// The same graph seen from the other end of the bridge.
    pub fn mirrored(&self) -> Self {
        Self {
            l: self.r,
            r: self.l,
            left_neg: self.right_neg,
            right_neg: self.left_neg,
            bridge: self.bridge,
        }
    }

    pub fn z1(&self) -> usize {
        0
    }

    pub fn z2(&self) -> usize {
        1
    }

    /// Negative pendant `u_i` of `z_1`.
    pub fn u(&self, i: usize) -> usize {
        debug_assert!((1..=self.left_neg).contains(&i));
        1 + i
    }

    /// Positive pendant `v_i` of `z_1`.
    pub fn v(&self, i: usize) -> usize {
        debug_assert!((1..=self.l).contains(&i));
        1 + self.left_neg + i
    }

    /// Negative pendant `y_i` of `z_2`.
    pub fn y(&self, i: usize) -> usize {
        debug_assert!((1..=self.right_neg).contains(&i));
        1 + self.left_neg + self.l + i
    }

    /// Positive pendant `w_i` of `z_2`.
    pub fn w(&self, i: usize) -> usize {
        debug_assert!((1..=self.r).contains(&i));
        1 + self.left_neg + self.l + self.right_neg + i
    }

    /// `map[v]` is the vertex of [`Self::mirrored`] that plays the role of `v`.
    pub fn mirror_map(&self) -> Vec<usize> {
        let mirror = self.mirrored();
        let mut map = vec![0; self.p()];
        map[self.z1()] = mirror.z2();
        map[self.z2()] = mirror.z1();
        for i in 1..=self.left_neg {
            map[self.u(i)] = mirror.y(i);
        }
        for i in 1..=self.l {
            map[self.v(i)] = mirror.w(i);
        }
        for i in 1..=self.right_neg {
            map[self.y(i)] = mirror.u(i);
        }
        for i in 1..=self.r {
            map[self.w(i)] = mirror.v(i);
        }
        map
    }
}

/// Any family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Config {
    Star(StarConfig),
    DoubleStar(DoubleStarConfig),
}

impl Config {
    pub fn p(&self) -> usize {
        match self {
            Config::Star(c) => c.p(),
            Config::DoubleStar(c) => c.p(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Config::Star(c) => c.n,
            Config::DoubleStar(c) => c.n(),
        }
    }

    pub fn build(&self) -> Result<FamilyGraph> {
        match self {
            Config::Star(c) => make_star(*c),
            Config::DoubleStar(c) => make_double_star(*c),
        }
    }

    /// Every star and double star with at most `p_max` vertices and
    /// `n_max` negative edges, both sides of every mirror pair included.
    pub fn all_up_to(p_max: usize, n_max: usize) -> Vec<Config> {
        let mut out = Vec::new();
        for m in 0..p_max {
            for n in 0..=n_max.min(p_max - 1 - m) {
                if let Ok(c) = StarConfig::new(m, n) {
                    out.push(c.into());
                }
            }
        }
        for bridge in [Sign::Positive, Sign::Negative] {
            for left_neg in 0..=n_max {
                for right_neg in 0..=n_max - left_neg {
                    for l in 0..=p_max {
                        for r in 0..=p_max {
                            let c = DoubleStarConfig::new(l, r, left_neg, right_neg, bridge);
                            if c.p() <= p_max && c.n() <= n_max {
                                out.push(c.into());
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl From<StarConfig> for Config {
    fn from(c: StarConfig) -> Self {
        Config::Star(c)
    }
}

impl From<DoubleStarConfig> for Config {
    fn from(c: DoubleStarConfig) -> Self {
        Config::DoubleStar(c)
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Config::Star(c) => write!(f, "star(m={},n={})", c.m, c.n),
            Config::DoubleStar(c) => write!(
                f,
                "ds(l={},r={},neg={}/{},bridge={})",
                c.l, c.r, c.left_neg, c.right_neg, c.bridge
            ),
        }
    }
}

/// The role a vertex plays in its family graph. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    StarCenter,
    CenterZ1,
    CenterZ2,
    /// Negative pendant of the star center or of `z_1`.
    NegPendantU(usize),
    /// Negative pendant of `z_2`.
    NegPendantY(usize),
    /// Positive pendant of the star center or of `z_1`.
    PosPendantV(usize),
    /// Positive pendant of `z_2`.
    PosPendantW(usize),
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::StarCenter => write!(f, "z"),
            VertexRole::CenterZ1 => write!(f, "z1"),
            VertexRole::CenterZ2 => write!(f, "z2"),
            VertexRole::NegPendantU(i) => write!(f, "u{i}"),
            VertexRole::NegPendantY(i) => write!(f, "y{i}"),
            VertexRole::PosPendantV(i) => write!(f, "v{i}"),
            VertexRole::PosPendantW(i) => write!(f, "w{i}"),
        }
    }
}

/// A family graph together with the role of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub config: Config,
    pub graph: SignedGraph,
    pub roles: Vec<VertexRole>,
}

impl FamilyGraph {
    pub fn orbits(&self) -> Orbits {
        pendant_orbits(&self.graph, &self.roles)
    }
}

pub fn make_star(cfg: StarConfig) -> Result<FamilyGraph> {
    cfg.validate()?;
    let mut roles = vec![VertexRole::StarCenter];
    let mut edges = Vec::with_capacity(cfg.m + cfg.n);
    for i in 1..=cfg.n {
        roles.push(VertexRole::NegPendantU(i));
        edges.push((cfg.center(), cfg.u(i), Sign::Negative));
    }
    for i in 1..=cfg.m {
        roles.push(VertexRole::PosPendantV(i));
        edges.push((cfg.center(), cfg.v(i), Sign::Positive));
    }
    Ok(FamilyGraph {
        config: cfg.into(),
        graph: SignedGraph::new(cfg.p(), edges)?,
        roles,
    })
}

pub fn make_double_star(cfg: DoubleStarConfig) -> Result<FamilyGraph> {
    let mut roles = vec![VertexRole::CenterZ1, VertexRole::CenterZ2];
    let mut edges = vec![(cfg.z1(), cfg.z2(), cfg.bridge)];
    for i in 1..=cfg.left_neg {
        roles.push(VertexRole::NegPendantU(i));
        edges.push((cfg.z1(), cfg.u(i), Sign::Negative));
    }
    for i in 1..=cfg.l {
        roles.push(VertexRole::PosPendantV(i));
        edges.push((cfg.z1(), cfg.v(i), Sign::Positive));
    }
    for i in 1..=cfg.right_neg {
        roles.push(VertexRole::NegPendantY(i));
        edges.push((cfg.z2(), cfg.y(i), Sign::Negative));
    }
    for i in 1..=cfg.r {
        roles.push(VertexRole::PosPendantW(i));
        edges.push((cfg.z2(), cfg.w(i), Sign::Positive));
    }
    Ok(FamilyGraph {
        config: cfg.into(),
        graph: SignedGraph::new(cfg.p(), edges)?,
        roles,
    })
}

/// A partition of the vertices into classes of interchangeable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbits {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Orbits {
    /// Classes are sorted internally and ordered by their smallest vertex.
    pub fn new(p: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        classes.sort();
        let mut class_of = vec![usize::MAX; p];
        for (k, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= p || class_of[v] != usize::MAX {
                    return Err(Error::InvalidOrbits { p });
                }
                class_of[v] = k;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::InvalidOrbits { p });
        }
        Ok(Self { classes, class_of })
    }

    /// Every vertex in its own class.
    pub fn discrete(p: usize) -> Self {
        Self {
            classes: (0..p).map(|v| vec![v]).collect(),
            class_of: (0..p).collect(),
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> &[usize] {
        &self.classes[self.class_of[v]]
    }

    pub fn p(&self) -> usize {
        self.class_of.len()
    }
}

/// Groups pendants by (attached center, edge sign); centers are singletons.
pub fn pendant_orbits(g: &SignedGraph, roles: &[VertexRole]) -> Orbits {
    let mut groups: std::collections::BTreeMap<(usize, u8), Vec<usize>> = Default::default();
    let mut classes = Vec::new();
    for (v, role) in roles.iter().enumerate() {
        match role {
            VertexRole::StarCenter | VertexRole::CenterZ1 | VertexRole::CenterZ2 => {
                classes.push(vec![v])
            }
            _ => {
                let (center, sign) = g.neighbors(v)[0];
                groups.entry((center, sign as u8)).or_default().push(v);
            }
        }
    }
    classes.extend(groups.into_values());
    Orbits::new(g.p(), classes).expect("family roles cover every vertex once")
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    fn ds(l: usize, r: usize, a: usize, b: usize, bridge: Sign) -> FamilyGraph {
        make_double_star(DoubleStarConfig::new(l, r, a, b, bridge)).unwrap()
    }

    #[test]
    fn star_examples() {
        let s = make_star(StarConfig::new(3, 0).unwrap()).unwrap();
        assert_eq!((s.graph.p(), s.graph.m(), s.graph.n()), (4, 3, 0));
        let s = make_star(StarConfig::new(0, 2).unwrap()).unwrap();
        assert_eq!((s.graph.p(), s.graph.m(), s.graph.n()), (3, 0, 2));
        assert!(s.graph.negative_edges().all(|e| e.u == 0));
        let s = make_star(StarConfig::new(2, 1).unwrap()).unwrap();
        assert_eq!((s.graph.p(), s.graph.m(), s.graph.n()), (4, 2, 1));
        assert_eq!(
            s.roles,
            vec![
                VertexRole::StarCenter,
                VertexRole::NegPendantU(1),
                VertexRole::PosPendantV(1),
                VertexRole::PosPendantV(2)
            ]
        );
        assert_eq!(StarConfig::new(0, 0), Err(Error::EmptyStar));
    }

    #[test]
    fn double_star_examples() {
        let d = ds(2, 3, 2, 0, Positive);
        assert_eq!((d.graph.p(), d.graph.m(), d.graph.n()), (9, 6, 2));
        let d = ds(0, 4, 1, 0, Negative);
        assert_eq!((d.graph.p(), d.graph.m(), d.graph.n()), (7, 4, 2));
        let d = ds(1, 1, 0, 0, Positive);
        assert_eq!((d.graph.p(), d.graph.m(), d.graph.n()), (4, 3, 0));
        // a path: two vertices of degree 2, two of degree 1
        let mut degrees: Vec<_> = (0..4).map(|v| d.graph.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2, 2]);
    }

    #[test]
    fn degenerate_double_star_is_an_edge() {
        let d = ds(0, 0, 0, 0, Negative);
        assert_eq!((d.graph.p(), d.graph.m(), d.graph.n()), (2, 0, 1));
    }

    #[test]
    fn counts_match_config_over_grid() {
        for l in 0..5 {
            for r in 0..5 {
                for a in 0..3 {
                    for b in 0..3 {
                        for bridge in [Positive, Negative] {
                            let cfg = DoubleStarConfig::new(l, r, a, b, bridge);
                            let d = make_double_star(cfg).unwrap();
                            assert_eq!(d.graph.m(), cfg.m());
                            assert_eq!(d.graph.n(), cfg.n());
                            assert_eq!(d.graph.p(), cfg.p());
                            assert!(d.graph.is_tree());
                            assert_eq!(d, make_double_star(cfg).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mirror_map_is_an_isomorphism() {
        let cfg = DoubleStarConfig::new(2, 3, 1, 2, Positive);
        let here = make_double_star(cfg).unwrap();
        let there = make_double_star(cfg.mirrored()).unwrap();
        let map = cfg.mirror_map();
        let mapped = SignedGraph::new(
            cfg.p(),
            here.graph
                .edges()
                .iter()
                .map(|e| (map[e.u], map[e.v], e.sign)),
        )
        .unwrap();
        assert_eq!(mapped, there.graph);
        assert_eq!(cfg.mirrored().mirrored(), cfg);
    }

    #[test]
    fn orbit_examples() {
        let s = make_star(StarConfig::new(3, 0).unwrap()).unwrap();
        assert_eq!(s.orbits().classes(), &[vec![0], vec![1, 2, 3]]);

        let d = ds(2, 2, 2, 0, Positive);
        // z1, z2, u = {2,3}, v = {4,5}, w = {6,7}
        assert_eq!(
            d.orbits().classes(),
            &[vec![0], vec![1], vec![2, 3], vec![4, 5], vec![6, 7]]
        );

        let d = ds(1, 0, 0, 0, Negative);
        assert_eq!(d.orbits().classes(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn orbits_must_partition() {
        assert!(Orbits::new(3, vec![vec![0, 1]]).is_err());
        assert!(Orbits::new(2, vec![vec![0, 1], vec![1]]).is_err());
        assert_eq!(Orbits::discrete(2).classes(), &[vec![0], vec![1]]);
    }
}
