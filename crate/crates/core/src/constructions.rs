//! Explicit labelings and the theorem table that decides which one applies.
//!
//! Every labeling here is written in the vertex numbering of
//! [`crate::families`]. Double-star formulas for negative pendants assume the
//! pendants hang off `z_1`; [`construct`] mirrors other configurations first
//! and maps the result back.

use crate::families::{Config, DoubleStarConfig, StarConfig};
use crate::graph::Sign;
use crate::labeling::Labeling;
use crate::theorem::{Claim, TheoremTag};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionOutcome {
    Built {
        labeling: Labeling,
        tag: TheoremTag,
    },
    ProvenNonexistent {
        tag: TheoremTag,
    },
    /// No formula applies. `claim` carries a result that asserts existence
    /// without giving a labeling, when there is one.
    Uncovered {
        claim: Option<TheoremTag>,
    },
}

impl ConstructionOutcome {
    pub fn tag(&self) -> Option<TheoremTag> {
        match self {
            ConstructionOutcome::Built { tag, .. }
            | ConstructionOutcome::ProvenNonexistent { tag } => Some(*tag),
            ConstructionOutcome::Uncovered { claim } => *claim,
        }
    }

    pub fn labeling(&self) -> Option<&Labeling> {
        match self {
            ConstructionOutcome::Built { labeling, .. } => Some(labeling),
            _ => None,
        }
    }

    fn built(labeling: Labeling, tag: TheoremTag) -> Self {
        ConstructionOutcome::Built { labeling, tag }
    }

    fn none(tag: TheoremTag) -> Self {
        ConstructionOutcome::ProvenNonexistent { tag }
    }
}

/// Writes labels by vertex; every vertex must be assigned exactly once.
struct Assign {
    values: Vec<Option<u32>>,
}

impl Assign {
    fn new(p: usize) -> Self {
        Self {
            values: vec![None; p],
        }
    }

    fn set(&mut self, vertex: usize, label: usize) {
        debug_assert!(
            self.values[vertex].is_none(),
            "vertex {vertex} assigned twice"
        );
        self.values[vertex] = Some(label as u32);
    }

    fn finish(self) -> Labeling {
        Labeling::new(
            self.values
                .into_iter()
                .enumerate()
                .map(|(v, x)| x.unwrap_or_else(|| panic!("vertex {v} left unlabeled")))
                .collect(),
        )
    }
}

pub fn construct_star(cfg: StarConfig) -> ConstructionOutcome {
    let (m, n) = (cfg.m, cfg.n);
    let mut f = Assign::new(cfg.p());
    match n {
        0 => {
            f.set(cfg.center(), 0);
            for i in 1..=m {
                f.set(cfg.v(i), i);
            }
            ConstructionOutcome::built(f.finish(), TheoremTag::StarCase1)
        }
        1 => {
            f.set(cfg.center(), 1);
            f.set(cfg.u(1), 0);
            for i in 1..=m {
                f.set(cfg.v(i), i + 1);
            }
            ConstructionOutcome::built(f.finish(), TheoremTag::StarCase2)
        }
        2 if m == 0 => {
            f.set(cfg.u(1), 1);
            f.set(cfg.center(), 0);
            f.set(cfg.u(2), 2);
            ConstructionOutcome::built(f.finish(), TheoremTag::StarCase3)
        }
        2 => ConstructionOutcome::none(TheoremTag::StarTwoNegWithPositive),
        _ => ConstructionOutcome::none(TheoremTag::TreeNegBound),
    }
}

/// The all-positive star labeling `z = 1, v_1 = 0, v_i = i + 1` that is not
/// equivalent to [`construct_star`]'s: its largest label gap is `m + 1`
/// instead of `m`.
pub fn star_second_labeling(m: usize) -> crate::Result<Labeling> {
    if m < 2 {
        return Err(crate::Error::MTooSmall(m));
    }
    let cfg = StarConfig { m, n: 0 };
    let mut f = Assign::new(cfg.p());
    f.set(cfg.center(), 1);
    f.set(cfg.v(1), 0);
    for i in 2..=m {
        f.set(cfg.v(i), i + 1);
    }
    Ok(f.finish())
}

/// Graceful labeling of the all-positive double star:
/// `z_1 = q`, `v_i = i - 1`, `z_2 = l`, `w_i = l + i` with `q = l + r + 1`.
///
/// Edge labels: `z_1 v_i` gives `q - l + 1..=q`, the bridge gives `q - l`,
/// and `z_2 w_i` gives `1..=r`.
pub fn construct_ds_all_positive(l: usize, r: usize) -> Labeling {
    let cfg = DoubleStarConfig::new(l, r, 0, 0, Sign::Positive);
    let q = l + r + 1;
    let mut f = Assign::new(cfg.p());
    f.set(cfg.z1(), q);
    for i in 1..=l {
        f.set(cfg.v(i), i - 1);
    }
    f.set(cfg.z2(), l);
    for i in 1..=r {
        f.set(cfg.w(i), l + i);
    }
    f.finish()
}

/// Positive bridge, one negative pendant `u` at `z_1`.
pub fn construct_ds_pendant_neg(l: usize, r: usize) -> Labeling {
    let cfg = DoubleStarConfig::new(l, r, 1, 0, Sign::Positive);
    let mut f = Assign::new(cfg.p());
    f.set(cfg.u(1), 0);
    f.set(cfg.z1(), 1);
    for i in 1..=l {
        f.set(cfg.v(i), r + 2 + i);
    }
    f.set(cfg.z2(), r + 2);
    for i in 1..=r {
        f.set(cfg.w(i), 1 + i);
    }
    f.finish()
}

/// Negative bridge, positive pendants only. Exists iff one side is empty, in
/// which case the graph is a star with one negative edge.
pub fn construct_ds_neg_bridge(l: usize, r: usize) -> ConstructionOutcome {
    let cfg = DoubleStarConfig::new(l, r, 0, 0, Sign::Negative);
    if l > 0 && r > 0 {
        return ConstructionOutcome::none(TheoremTag::DsNegBridge);
    }
    let mut f = Assign::new(cfg.p());
    if r == 0 {
        // star centered at z1; z2 is its negative pendant
        f.set(cfg.z1(), 1);
        f.set(cfg.z2(), 0);
        for i in 1..=l {
            f.set(cfg.v(i), i + 1);
        }
    } else {
        f.set(cfg.z2(), 1);
        f.set(cfg.z1(), 0);
        for i in 1..=r {
            f.set(cfg.w(i), i + 1);
        }
    }
    ConstructionOutcome::built(f.finish(), TheoremTag::DsNegBridge)
}

/// Negative bridge plus one negative pendant `u` at `z_1`. Exists iff `l = 0`.
pub fn construct_ds_neg_bridge_neg_pendant(l: usize, r: usize) -> ConstructionOutcome {
    if l > 0 {
        return ConstructionOutcome::none(TheoremTag::DsNegBridgeNegPendant);
    }
    let cfg = DoubleStarConfig::new(0, r, 1, 0, Sign::Negative);
    let mut f = Assign::new(cfg.p());
    f.set(cfg.u(1), 1);
    f.set(cfg.z1(), 0);
    f.set(cfg.z2(), 2);
    for i in 1..=r {
        f.set(cfg.w(i), 2 + i);
    }
    ConstructionOutcome::built(f.finish(), TheoremTag::DsNegBridgeNegPendant)
}

type Hypothesis = fn(usize, usize) -> bool;

/// Results about two negative pendants at `z_1` with a positive bridge, in
/// dispatch priority order. The first matching entry decides.
pub const TWO_NEG_PENDANT_TABLE: &[(TheoremTag, Hypothesis)] = &[
    (TheoremTag::Ds2NegRLt2, |_, r| r < 2),
    (TheoremTag::Ds2NegR2, |_, r| r == 2),
    (TheoremTag::Ds2NegL0RGt2, |l, r| l == 0 && r > 2),
    (TheoremTag::Ds2NegL1R4, |l, r| l == 1 && r == 4),
    (TheoremTag::Ds2NegL1RGe5, |l, r| l == 1 && r >= 5),
    (TheoremTag::Ds2NegLOddR3, |l, r| {
        l % 2 == 1 && l >= 3 && r == 3
    }),
    (TheoremTag::Ds2NegL3ROdd, |l, r| {
        l == 3 && r % 2 == 1 && r >= 7
    }),
    (TheoremTag::Ds2NegLEqRMinus2, |l, r| l + 2 == r),
    (TheoremTag::Ds2NegL2, |l, r| l == 2 && r >= 2),
    (TheoremTag::Ds2NegLEven, |l, r| {
        l >= 2 && r >= 2 && l % 2 == 0
    }),
    (TheoremTag::Ds2NegREven, |l, r| {
        l >= 2 && r >= 2 && r % 2 == 0
    }),
];

/// Every table entry whose hypothesis covers `(l, r)`, not only the first.
pub fn two_neg_pendant_theorems(l: usize, r: usize) -> Vec<TheoremTag> {
    TWO_NEG_PENDANT_TABLE
        .iter()
        .filter(|(_, holds)| holds(l, r))
        .map(|(tag, _)| *tag)
        .collect()
}

/// Positive bridge, two negative pendants `u_1, u_2` at `z_1`.
pub fn construct_ds_two_neg_pendants(l: usize, r: usize) -> ConstructionOutcome {
    let Some(&(tag, _)) = TWO_NEG_PENDANT_TABLE.iter().find(|(_, holds)| holds(l, r)) else {
        return ConstructionOutcome::Uncovered { claim: None };
    };
    let labeling = match tag {
        TheoremTag::Ds2NegR2 => ds2neg_r2(l),
        TheoremTag::Ds2NegLEqRMinus2 => ds2neg_l_eq_r_minus_2(r),
        TheoremTag::Ds2NegL2 => ds2neg_l2(r),
        TheoremTag::Ds2NegLEven => ds2neg_l_even(l, r),
        TheoremTag::Ds2NegREven => ds2neg_r_even(l, r),
        TheoremTag::Ds2NegL1R4 => return ConstructionOutcome::Uncovered { claim: Some(tag) },
        _ => {
            debug_assert_eq!(tag.claim(), Claim::NotExists);
            return ConstructionOutcome::none(tag);
        }
    };
    ConstructionOutcome::built(labeling, tag)
}

/// `f(z_1, u_1, u_2) = (0, 1, 2)`, shared by every two-negative-pendant
/// formula.
fn two_neg_seed(l: usize, r: usize) -> (DoubleStarConfig, Assign) {
    let cfg = DoubleStarConfig::new(l, r, 2, 0, Sign::Positive);
    let mut f = Assign::new(cfg.p());
    f.set(cfg.z1(), 0);
    f.set(cfg.u(1), 1);
    f.set(cfg.u(2), 2);
    (cfg, f)
}

fn ds2neg_r2(l: usize) -> Labeling {
    let (cfg, mut f) = two_neg_seed(l, 2);
    for i in 1..=l {
        f.set(cfg.v(i), i + 2);
    }
    f.set(cfg.z2(), l + 3);
    f.set(cfg.w(1), l + 4);
    f.set(cfg.w(2), l + 5);
    f.finish()
}

fn ds2neg_l_eq_r_minus_2(r: usize) -> Labeling {
    let l = r - 2;
    let (cfg, mut f) = two_neg_seed(l, r);
    f.set(cfg.z2(), r + 1);
    for i in 1..=l {
        f.set(cfg.v(i), r + 1 + i);
        f.set(cfg.w(i), i + 2);
    }
    for i in l + 1..=l + 2 {
        f.set(cfg.w(i), r + 1 + i);
    }
    f.finish()
}

fn ds2neg_l2(r: usize) -> Labeling {
    let (cfg, mut f) = two_neg_seed(2, r);
    f.set(cfg.v(1), r + 1);
    f.set(cfg.v(2), r + 2);
    f.set(cfg.z2(), r + 3);
    for i in 1..=r - 2 {
        f.set(cfg.w(i), i + 2);
    }
    f.set(cfg.w(r - 1), r + 4);
    f.set(cfg.w(r), r + 5);
    f.finish()
}

/// `l = 2t`.
fn ds2neg_l_even(l: usize, r: usize) -> Labeling {
    let t = l / 2;
    let (cfg, mut f) = two_neg_seed(l, r);
    for i in 1..t {
        f.set(cfg.v(i), 2 + i);
    }
    for i in t..=2 * t {
        f.set(cfg.v(i), r + i);
    }
    f.set(cfg.z2(), 2 * t + r + 1);
    for i in 1..=r - 2 {
        f.set(cfg.w(i), t + 1 + i);
    }
    for i in r - 1..=r {
        f.set(cfg.w(i), 2 * t + 3 + i);
    }
    f.finish()
}

/// `r = 2t`, `t >= 2`.
fn ds2neg_r_even(l: usize, r: usize) -> Labeling {
    let t = r / 2;
    let (cfg, mut f) = two_neg_seed(l, r);
    for i in 1..=l - 2 {
        f.set(cfg.v(i), t + 1 + i);
    }
    for i in l - 1..=l {
        f.set(cfg.v(i), 2 * t + i);
    }
    f.set(cfg.z2(), 2 * t + l + 1);
    for i in 1..t {
        f.set(cfg.w(i), 2 + i);
    }
    for i in t..=2 * t - 2 {
        f.set(cfg.w(i), l + i);
    }
    for i in 2 * t - 1..=2 * t {
        f.set(cfg.w(i), l + 3 + i);
    }
    f.finish()
}

/// Puts negative pendants on the `z_1` side: configurations with more negative
/// pendants at `z_2` are mirrored.
pub fn normalize(cfg: DoubleStarConfig) -> (DoubleStarConfig, bool) {
    if cfg.right_neg > cfg.left_neg {
        (cfg.mirrored(), true)
    } else {
        (cfg, false)
    }
}

fn construct_double_star(cfg: DoubleStarConfig) -> ConstructionOutcome {
    if cfg.n() > 2 {
        return ConstructionOutcome::none(TheoremTag::TreeNegBound);
    }
    let (norm, mirrored) = normalize(cfg);
    let DoubleStarConfig { l, r, .. } = norm;
    let outcome = match (norm.bridge, norm.left_neg, norm.right_neg) {
        (Sign::Positive, 0, 0) => {
            ConstructionOutcome::built(construct_ds_all_positive(l, r), TheoremTag::DsAllPositive)
        }
        (Sign::Positive, 1, 0) => {
            ConstructionOutcome::built(construct_ds_pendant_neg(l, r), TheoremTag::DsNegPendant)
        }
        (Sign::Positive, 2, 0) => construct_ds_two_neg_pendants(l, r),
        (Sign::Positive, 1, 1) => ConstructionOutcome::Uncovered { claim: None },
        (Sign::Negative, 0, 0) => construct_ds_neg_bridge(l, r),
        (Sign::Negative, 1, 0) => construct_ds_neg_bridge_neg_pendant(l, r),
        _ => unreachable!("n <= 2 leaves no other sign shape"),
    };
    if !mirrored {
        return outcome;
    }
    // `norm` is `cfg` mirrored; relabel back through the inverse map.
    match outcome {
        ConstructionOutcome::Built { labeling, tag } => {
            let map = cfg.mirror_map();
            let values = (0..cfg.p()).map(|v| labeling.values()[map[v]]).collect();
            ConstructionOutcome::built(Labeling::new(values), tag)
        }
        other => other,
    }
}

/// Dispatches any configuration to the applicable formula or result.
pub fn construct(cfg: Config) -> ConstructionOutcome {
    match cfg {
        Config::Star(c) => construct_star(c),
        Config::DoubleStar(c) => construct_double_star(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_double_star, make_star};
    use crate::verify::verify;
    use Sign::*;

    fn ds(l: usize, r: usize, a: usize, b: usize, bridge: Sign) -> DoubleStarConfig {
        DoubleStarConfig::new(l, r, a, b, bridge)
    }

    fn verifies(cfg: Config, f: &Labeling) -> bool {
        let g = cfg.build().unwrap();
        verify(&g.graph, f).unwrap().ok
    }

    /// Labels listed in the order of `vertices`.
    fn at(f: &Labeling, vertices: &[usize]) -> Vec<u32> {
        vertices.iter().map(|&v| f.values()[v]).collect()
    }

    #[test]
    fn star_cases() {
        let cfg = StarConfig::new(3, 0).unwrap();
        let out = construct_star(cfg);
        assert_eq!(out.tag(), Some(TheoremTag::StarCase1));
        assert_eq!(out.labeling().unwrap().values(), &[0, 1, 2, 3]);
        assert!(verifies(cfg.into(), out.labeling().unwrap()));

        let cfg = StarConfig::new(2, 1).unwrap();
        let out = construct_star(cfg);
        // (z, u1, v1, v2)
        assert_eq!(out.labeling().unwrap().values(), &[1, 0, 2, 3]);
        assert!(verifies(cfg.into(), out.labeling().unwrap()));

        let cfg = StarConfig::new(0, 2).unwrap();
        let f = construct_star(cfg).labeling().unwrap().clone();
        assert_eq!(at(&f, &[cfg.u(1), cfg.center(), cfg.u(2)]), vec![1, 0, 2]);

        assert_eq!(
            construct_star(StarConfig::new(1, 2).unwrap()),
            ConstructionOutcome::ProvenNonexistent {
                tag: TheoremTag::StarTwoNegWithPositive
            }
        );
        assert_eq!(
            construct_star(StarConfig::new(0, 3).unwrap()).tag(),
            Some(TheoremTag::TreeNegBound)
        );
    }

    #[test]
    fn second_star_labeling() {
        assert_eq!(star_second_labeling(2).unwrap().values(), &[1, 0, 3]);
        assert_eq!(star_second_labeling(3).unwrap().values(), &[1, 0, 3, 4]);
        assert_eq!(star_second_labeling(1), Err(crate::Error::MTooSmall(1)));
        for m in 2..=12 {
            let g = make_star(StarConfig::new(m, 0).unwrap()).unwrap();
            let f = star_second_labeling(m).unwrap();
            assert!(verify(&g.graph, &f).unwrap().ok);
            let gap = |f: &Labeling| f.max_label().unwrap() - f.values().iter().min().unwrap();
            assert_eq!(gap(&f), m as u32 + 1);
            let first = construct_star(StarConfig::new(m, 0).unwrap());
            assert_eq!(gap(first.labeling().unwrap()), m as u32);
        }
    }

    #[test]
    fn all_positive_double_star() {
        let cfg = ds(1, 1, 0, 0, Positive);
        let f = construct_ds_all_positive(1, 1);
        assert_eq!(
            at(&f, &[cfg.z1(), cfg.z2(), cfg.v(1), cfg.w(1)]),
            vec![3, 1, 0, 2]
        );
        // with l = 0 the graph is a star centered at z2 labeled 0
        let f = construct_ds_all_positive(0, 3);
        assert_eq!(f.values(), &[4, 0, 1, 2, 3]);
        let f = construct_ds_all_positive(3, 2);
        assert!(f.max_label().unwrap() <= 7);
        for l in 0..=30 {
            for r in 0..=30 {
                let f = construct_ds_all_positive(l, r);
                assert!(verifies(ds(l, r, 0, 0, Positive).into(), &f), "l={l} r={r}");
            }
        }
    }

    #[test]
    fn pendant_negative_examples() {
        let cfg = ds(1, 1, 1, 0, Positive);
        let f = construct_ds_pendant_neg(1, 1);
        let order = [cfg.u(1), cfg.z1(), cfg.z2(), cfg.w(1), cfg.v(1)];
        assert_eq!(at(&f, &order), vec![0, 1, 3, 2, 4]);
        assert!(verifies(cfg.into(), &f));

        let cfg = ds(0, 2, 1, 0, Positive);
        let f = construct_ds_pendant_neg(0, 2);
        let order = [cfg.u(1), cfg.z1(), cfg.z2(), cfg.w(1), cfg.w(2)];
        assert_eq!(at(&f, &order), vec![0, 1, 4, 2, 3]);
        assert!(verifies(cfg.into(), &f));

        let cfg = ds(2, 0, 1, 0, Positive);
        let f = construct_ds_pendant_neg(2, 0);
        let order = [cfg.u(1), cfg.z1(), cfg.z2(), cfg.v(1), cfg.v(2)];
        assert_eq!(at(&f, &order), vec![0, 1, 2, 3, 4]);
        assert!(verifies(cfg.into(), &f));
    }

    #[test]
    fn negative_bridge_examples() {
        let out = construct_ds_neg_bridge(0, 3);
        let cfg = ds(0, 3, 0, 0, Negative);
        // star-with-one-negative-edge pattern centered at z2
        let f = out.labeling().unwrap();
        assert_eq!(at(f, &[cfg.z2(), cfg.z1()]), vec![1, 0]);
        assert!(verifies(cfg.into(), f));
        assert_eq!(
            construct_ds_neg_bridge(2, 3),
            ConstructionOutcome::ProvenNonexistent {
                tag: TheoremTag::DsNegBridge
            }
        );
        let out = construct_ds_neg_bridge(1, 0);
        assert!(verifies(
            ds(1, 0, 0, 0, Negative).into(),
            out.labeling().unwrap()
        ));
    }

    #[test]
    fn negative_bridge_negative_pendant_examples() {
        let cfg = ds(0, 3, 1, 0, Negative);
        let f = construct_ds_neg_bridge_neg_pendant(0, 3)
            .labeling()
            .unwrap()
            .clone();
        let order = [cfg.u(1), cfg.z1(), cfg.z2(), cfg.w(1), cfg.w(2), cfg.w(3)];
        assert_eq!(at(&f, &order), vec![1, 0, 2, 3, 4, 5]);
        assert!(verifies(cfg.into(), &f));
        assert_eq!(
            construct_ds_neg_bridge_neg_pendant(1, 2).tag(),
            Some(TheoremTag::DsNegBridgeNegPendant)
        );
        assert!(construct_ds_neg_bridge_neg_pendant(1, 2)
            .labeling()
            .is_none());
        let cfg = ds(0, 1, 1, 0, Negative);
        let f = construct_ds_neg_bridge_neg_pendant(0, 1)
            .labeling()
            .unwrap()
            .clone();
        assert_eq!(
            at(&f, &[cfg.u(1), cfg.z1(), cfg.z2(), cfg.w(1)]),
            vec![1, 0, 2, 3]
        );
        assert!(verifies(cfg.into(), &f));
    }

    fn two_neg_order(cfg: &DoubleStarConfig) -> Vec<usize> {
        let mut order = vec![cfg.z1(), cfg.u(1), cfg.u(2), cfg.z2()];
        order.extend((1..=cfg.l).map(|i| cfg.v(i)));
        order.extend((1..=cfg.r).map(|i| cfg.w(i)));
        order
    }

    #[test]
    fn two_negative_pendant_examples() {
        let cfg = ds(0, 2, 2, 0, Positive);
        let out = construct_ds_two_neg_pendants(0, 2);
        assert_eq!(out.tag(), Some(TheoremTag::Ds2NegR2));
        assert_eq!(
            at(out.labeling().unwrap(), &two_neg_order(&cfg)),
            vec![0, 1, 2, 3, 4, 5]
        );

        let cfg = ds(1, 3, 2, 0, Positive);
        let out = construct_ds_two_neg_pendants(1, 3);
        assert_eq!(out.tag(), Some(TheoremTag::Ds2NegLEqRMinus2));
        // (z1, u1, u2, z2, v1, w1, w2, w3)
        assert_eq!(
            at(out.labeling().unwrap(), &two_neg_order(&cfg)),
            vec![0, 1, 2, 4, 5, 3, 6, 7]
        );
        assert!(verifies(cfg.into(), out.labeling().unwrap()));

        let cfg = ds(2, 3, 2, 0, Positive);
        let out = construct_ds_two_neg_pendants(2, 3);
        assert_eq!(out.tag(), Some(TheoremTag::Ds2NegL2));
        assert_eq!(
            at(out.labeling().unwrap(), &two_neg_order(&cfg)),
            vec![0, 1, 2, 6, 4, 5, 3, 7, 8]
        );
        assert!(verifies(cfg.into(), out.labeling().unwrap()));

        assert_eq!(
            construct_ds_two_neg_pendants(3, 3),
            ConstructionOutcome::ProvenNonexistent {
                tag: TheoremTag::Ds2NegLOddR3
            }
        );
        assert_eq!(
            construct_ds_two_neg_pendants(5, 5),
            ConstructionOutcome::Uncovered { claim: None }
        );
        assert_eq!(
            construct_ds_two_neg_pendants(1, 4),
            ConstructionOutcome::Uncovered {
                claim: Some(TheoremTag::Ds2NegL1R4)
            }
        );
    }

    #[test]
    fn dispatcher_examples() {
        let out = construct(ds(4, 7, 2, 0, Positive).into());
        assert_eq!(out.tag(), Some(TheoremTag::Ds2NegLEven));
        assert!(verifies(
            ds(4, 7, 2, 0, Positive).into(),
            out.labeling().unwrap()
        ));
        assert_eq!(
            construct(ds(1, 1, 1, 1, Positive).into()),
            ConstructionOutcome::Uncovered { claim: None }
        );
        assert_eq!(
            construct(ds(2, 2, 2, 1, Positive).into()).tag(),
            Some(TheoremTag::TreeNegBound)
        );
    }

    #[test]
    fn mirrored_configurations_are_relabeled() {
        for cfg in [
            ds(3, 4, 0, 2, Positive),
            ds(2, 5, 0, 1, Positive),
            ds(3, 0, 0, 1, Negative),
            ds(4, 6, 0, 2, Positive),
        ] {
            let out = construct(cfg.into());
            let f = out.labeling().expect("built");
            assert!(verifies(cfg.into(), f), "{cfg:?}");
        }
        assert_eq!(
            construct(ds(1, 2, 1, 0, Negative).into()).tag(),
            Some(TheoremTag::DsNegBridgeNegPendant)
        );
    }

    #[test]
    fn formulas_have_full_image() {
        for l in 0..=15 {
            for r in 0..=15 {
                for (a, b, bridge) in [
                    (1, 0, Positive),
                    (2, 0, Positive),
                    (0, 0, Negative),
                    (1, 0, Negative),
                ] {
                    let cfg = ds(l, r, a, b, bridge);
                    if let Some(f) = construct(cfg.into()).labeling() {
                        let mut image = f.values().to_vec();
                        image.sort_unstable();
                        let expect: Vec<u32> = (0..(cfg.m() + cfg.n()) as u32 + 1).collect();
                        assert_eq!(image, expect, "{cfg:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn table_never_proves_both_ways() {
        for l in 0..=40 {
            for r in 0..=40 {
                let claims: Vec<Claim> = two_neg_pendant_theorems(l, r)
                    .into_iter()
                    .map(TheoremTag::claim)
                    .collect();
                let exists = claims.contains(&Claim::Exists);
                let not_exists = claims.contains(&Claim::NotExists);
                assert!(
                    !(exists && not_exists),
                    "l={l} r={r}: {:?}",
                    two_neg_pendant_theorems(l, r)
                );
            }
        }
    }

    #[test]
    fn uncovered_region_is_exactly_odd_odd() {
        for l in 0..=40 {
            for r in 0..=40 {
                let out = construct_ds_two_neg_pendants(l, r);
                let expect_gap = l % 2 == 1 && l >= 5 && r % 2 == 1 && r >= 5 && l + 2 != r;
                assert_eq!(
                    out == ConstructionOutcome::Uncovered { claim: None },
                    expect_gap,
                    "l={l} r={r}"
                );
            }
        }
    }

    #[test]
    fn constructed_stars_verify() {
        for m in 0..=20 {
            for n in 0..=2 {
                let Ok(cfg) = StarConfig::new(m, n) else {
                    continue;
                };
                if let Some(f) = construct_star(cfg).labeling() {
                    let g = make_star(cfg).unwrap();
                    assert!(verify(&g.graph, f).unwrap().ok);
                }
            }
        }
        let g = make_double_star(ds(0, 0, 0, 0, Positive)).unwrap();
        assert!(
            verify(&g.graph, construct(g.config).labeling().unwrap())
                .unwrap()
                .ok
        );
    }
}
