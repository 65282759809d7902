//! Verdicts for family configurations: the theorem table first, exhaustive
//! search for whatever it does not cover.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::mpsc;
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{construct, ConstructionOutcome};
use crate::families::{Config, DoubleStarConfig};
use crate::graph::Sign;
use crate::labeling::Labeling;
use crate::search::{
    count_classes, exhaustive_search_with_jobs, EquivalenceSpec, SearchBudget, SearchOutcome,
};
use crate::theorem::TheoremTag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictStatus {
    Exists,
    NotExists,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "source", content = "theorem")]
pub enum Provenance {
    Theorem(TheoremTag),
    SearchWitness,
    SearchExhaustion,
    BudgetExceeded,
    /// No theorem applies and search was not requested.
    NoTheorem,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Theorem(tag) => write!(f, "theorem:{tag}"),
            Provenance::SearchWitness => f.write_str("search-witness"),
            Provenance::SearchExhaustion => f.write_str("search-exhaustion"),
            Provenance::BudgetExceeded => f.write_str("budget-exceeded"),
            Provenance::NoTheorem => f.write_str("no-theorem"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub provenance: Provenance,
    /// Present exactly when `status` is `Exists`; in the vertex numbering of
    /// the configuration as given.
    pub witness: Option<Labeling>,
    /// Search effort, when the search ran.
    pub nodes_explored: Option<u64>,
}

impl Verdict {
    fn theorem(outcome: ConstructionOutcome) -> Option<Self> {
        match outcome {
            ConstructionOutcome::Built { labeling, tag } => Some(Self {
                status: VerdictStatus::Exists,
                provenance: Provenance::Theorem(tag),
                witness: Some(labeling),
                nodes_explored: None,
            }),
            ConstructionOutcome::ProvenNonexistent { tag } => Some(Self {
                status: VerdictStatus::NotExists,
                provenance: Provenance::Theorem(tag),
                witness: None,
                nodes_explored: None,
            }),
            ConstructionOutcome::Uncovered { .. } => None,
        }
    }

    fn from_search(outcome: SearchOutcome) -> Self {
        let nodes_explored = Some(outcome.nodes_explored());
        match outcome {
            SearchOutcome::Exists { witness, .. } => Self {
                status: VerdictStatus::Exists,
                provenance: Provenance::SearchWitness,
                witness: Some(witness),
                nodes_explored,
            },
            SearchOutcome::NotExists { .. } => Self {
                status: VerdictStatus::NotExists,
                provenance: Provenance::SearchExhaustion,
                witness: None,
                nodes_explored,
            },
            SearchOutcome::Aborted { .. } => Self {
                status: VerdictStatus::Unknown,
                provenance: Provenance::BudgetExceeded,
                witness: None,
                nodes_explored,
            },
        }
    }

    /// One-character code for verdict matrices.
    pub fn code(&self) -> char {
        match (self.status, self.provenance) {
            (VerdictStatus::Exists, _) => 'E',
            (VerdictStatus::NotExists, _) => 'N',
            (VerdictStatus::Unknown, Provenance::BudgetExceeded) => 'A',
            (VerdictStatus::Unknown, _) => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    pub use_search_fallback: bool,
    pub budget: SearchBudget,
    /// Worker threads for a single search.
    pub jobs: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            use_search_fallback: false,
            budget: SearchBudget::default(),
            jobs: 1,
        }
    }
}

/// Witnesses for configurations whose existence is asserted without a formula.
fn claim_witnesses() -> &'static Mutex<HashMap<Config, Verdict>> {
    static CACHE: OnceLock<Mutex<HashMap<Config, Verdict>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn search(cfg: Config, options: &ClassifyOptions) -> Verdict {
    let family = cfg.build().expect("valid configuration");
    Verdict::from_search(exhaustive_search_with_jobs(
        &family.graph,
        &family.orbits(),
        &options.budget,
        options.jobs,
    ))
}

/// Decides `cfg` from the theorem table, falling back to search when allowed.
///
/// Configurations with an existence claim but no formula are always searched
/// (they are small) and the witness is memoized for the process.
pub fn classify(cfg: Config, options: &ClassifyOptions) -> Verdict {
    match construct(cfg) {
        ConstructionOutcome::Uncovered { claim: Some(_) } => {
            if let Some(v) = claim_witnesses().lock().expect("poisoned").get(&cfg) {
                return v.clone();
            }
            let verdict = search(cfg, options);
            if verdict.status != VerdictStatus::Unknown {
                claim_witnesses()
                    .lock()
                    .expect("poisoned")
                    .insert(cfg, verdict.clone());
            }
            verdict
        }
        ConstructionOutcome::Uncovered { claim: None } if options.use_search_fallback => {
            search(cfg, options)
        }
        ConstructionOutcome::Uncovered { claim: None } => Verdict {
            status: VerdictStatus::Unknown,
            provenance: Provenance::NoTheorem,
            witness: None,
            nodes_explored: None,
        },
        outcome => Verdict::theorem(outcome).expect("covered outcome"),
    }
}

/// Sign patterns of double stars with at most two negative edges, in the
/// orientation the theorem table uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    AllPositive,
    NegPendant,
    NegBridge,
    TwoNegPendants,
    NegBridgeNegPendant,
    SplitNegPendants,
}

impl Shape {
    pub const ALL: [Shape; 6] = [
        Shape::AllPositive,
        Shape::NegPendant,
        Shape::NegBridge,
        Shape::TwoNegPendants,
        Shape::NegBridgeNegPendant,
        Shape::SplitNegPendants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shape::AllPositive => "all-positive",
            Shape::NegPendant => "neg-pendant",
            Shape::NegBridge => "neg-bridge",
            Shape::TwoNegPendants => "two-neg-pendants",
            Shape::NegBridgeNegPendant => "neg-bridge-neg-pendant",
            Shape::SplitNegPendants => "split-neg-pendants",
        }
    }

    pub fn config(self, l: usize, r: usize) -> DoubleStarConfig {
        let (left_neg, right_neg, bridge) = match self {
            Shape::AllPositive => (0, 0, Sign::Positive),
            Shape::NegPendant => (1, 0, Sign::Positive),
            Shape::NegBridge => (0, 0, Sign::Negative),
            Shape::TwoNegPendants => (2, 0, Sign::Positive),
            Shape::NegBridgeNegPendant => (1, 0, Sign::Negative),
            Shape::SplitNegPendants => (1, 1, Sign::Positive),
        };
        DoubleStarConfig::new(l, r, left_neg, right_neg, bridge)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Shape::ALL
            .into_iter()
            .find(|shape| shape.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Shape::ALL.iter().map(|s| s.name()).collect();
                format!("unknown shape `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub shape: Shape,
    pub config: DoubleStarConfig,
    pub verdict: Verdict,
    pub class_count: Option<usize>,
    pub elapsed: Duration,
}

impl SweepCell {
    pub fn l(&self) -> usize {
        self.config.l
    }

    pub fn r(&self) -> usize {
        self.config.r
    }
}

/// Persistent record of finished cells.
pub trait CellStore {
    fn lookup(&self, shape: Shape, config: &DoubleStarConfig) -> Option<SweepCell>;
    fn record(&mut self, cell: &SweepCell) -> std::io::Result<()>;
}

/// A store that remembers nothing.
pub struct NoStore;

impl CellStore for NoStore {
    fn lookup(&self, _: Shape, _: &DoubleStarConfig) -> Option<SweepCell> {
        None
    }

    fn record(&mut self, _: &SweepCell) -> std::io::Result<()> {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub classify: ClassifyOptions,
    /// Cells evaluated concurrently.
    pub jobs: usize,
    /// Also count labeling classes of every existing cell.
    pub classes: Option<EquivalenceSpec>,
}

/// All cells of a sweep, ordered by shape, then `l`, then `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub l_max: usize,
    pub r_max: usize,
    pub cells: Vec<SweepCell>,
}

impl SweepGrid {
    pub fn cells_for(&self, shape: Shape) -> impl Iterator<Item = &SweepCell> {
        self.cells.iter().filter(move |c| c.shape == shape)
    }

    /// Verdict codes indexed by `[l][r]`.
    pub fn matrix(&self, shape: Shape) -> Vec<Vec<char>> {
        let mut rows = vec![vec!['?'; self.r_max + 1]; self.l_max + 1];
        for cell in self.cells_for(shape) {
            rows[cell.l()][cell.r()] = cell.verdict.code();
        }
        rows
    }

    pub fn any_budget_exceeded(&self) -> bool {
        self.cells
            .iter()
            .any(|c| c.verdict.provenance == Provenance::BudgetExceeded)
    }
}

fn evaluate(shape: Shape, config: DoubleStarConfig, options: &SweepOptions) -> SweepCell {
    let start = Instant::now();
    let classify_options = ClassifyOptions {
        jobs: 1,
        ..options.classify
    };
    let verdict = classify(config.into(), &classify_options);
    let class_count = match (options.classes, verdict.status) {
        (Some(equiv), VerdictStatus::Exists) => {
            let family = crate::families::make_double_star(config).expect("valid configuration");
            count_classes(
                &family.graph,
                &family.orbits(),
                equiv,
                &options.classify.budget,
            )
            .ok()
            .map(|report| report.class_count)
        }
        _ => None,
    };
    SweepCell {
        shape,
        config,
        verdict,
        class_count,
        elapsed: start.elapsed(),
    }
}

/// Classifies every `(l, r)` with `l <= l_max`, `r <= r_max` for each shape.
///
/// Cells already in `store` are reused. New cells are computed on
/// `options.jobs` threads and recorded by the calling thread in cell order,
/// so a store sees the same sequence regardless of completion order.
pub fn sweep(
    l_max: usize,
    r_max: usize,
    shapes: &[Shape],
    options: &SweepOptions,
    store: &mut dyn CellStore,
) -> std::io::Result<SweepGrid> {
    let mut slots: Vec<Option<SweepCell>> = Vec::new();
    let mut pending = Vec::new();
    for &shape in shapes {
        for l in 0..=l_max {
            for r in 0..=r_max {
                let config = shape.config(l, r);
                let cached = store.lookup(shape, &config);
                if cached.is_none() {
                    pending.push((slots.len(), shape, config));
                }
                slots.push(cached);
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .map_err(std::io::Error::other)?;
    let (tx, rx) = mpsc::channel::<(usize, SweepCell)>();
    let mut write_error = None;
    std::thread::scope(|scope| {
        let pending = &pending;
        scope.spawn(move || {
            pool.install(|| {
                pending
                    .par_iter()
                    .for_each_with(tx, |tx, &(index, shape, config)| {
                        let _ = tx.send((index, evaluate(shape, config, options)));
                    });
            });
        });

        // single writer: record in pending order as cells become available
        let mut ready = BTreeMap::new();
        let mut next = 0;
        for (index, cell) in rx {
            ready.insert(index, cell);
            while let Some(&(slot, _, _)) = pending.get(next) {
                let Some(cell) = ready.remove(&slot) else {
                    break;
                };
                if write_error.is_none() {
                    if let Err(e) = store.record(&cell) {
                        write_error = Some(e);
                    }
                }
                slots[slot] = Some(cell);
                next += 1;
            }
        }
    });
    if let Some(e) = write_error {
        return Err(e);
    }
    Ok(SweepGrid {
        l_max,
        r_max,
        cells: slots
            .into_iter()
            .map(|c| c.expect("every cell evaluated"))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::StarConfig;
    use crate::verify::verify;
    use Sign::*;

    fn ds(l: usize, r: usize, a: usize, b: usize, bridge: Sign) -> Config {
        DoubleStarConfig::new(l, r, a, b, bridge).into()
    }

    fn with_search() -> ClassifyOptions {
        ClassifyOptions {
            use_search_fallback: true,
            ..Default::default()
        }
    }

    #[test]
    fn classify_examples() {
        let v = classify(StarConfig::new(5, 1).unwrap().into(), &Default::default());
        assert_eq!(v.status, VerdictStatus::Exists);
        assert_eq!(v.provenance, Provenance::Theorem(TheoremTag::StarCase2));

        let v = classify(ds(0, 3, 1, 0, Negative), &Default::default());
        assert_eq!(v.status, VerdictStatus::Exists);
        assert_eq!(
            v.provenance,
            Provenance::Theorem(TheoremTag::DsNegBridgeNegPendant)
        );

        let v = classify(ds(1, 6, 2, 0, Positive), &Default::default());
        assert_eq!(v.status, VerdictStatus::NotExists);
        assert_eq!(v.provenance, Provenance::Theorem(TheoremTag::Ds2NegL1RGe5));
    }

    #[test]
    fn uncovered_cells_need_the_fallback() {
        let v = classify(ds(5, 5, 2, 0, Positive), &Default::default());
        assert_eq!(
            (v.status, v.provenance),
            (VerdictStatus::Unknown, Provenance::NoTheorem)
        );
        assert_eq!(v.code(), 'U');
        let v = classify(ds(5, 5, 2, 0, Positive), &with_search());
        assert!(matches!(
            v.provenance,
            Provenance::SearchWitness | Provenance::SearchExhaustion
        ));
        if let Some(w) = &v.witness {
            let g = ds(5, 5, 2, 0, Positive).build().unwrap();
            assert!(verify(&g.graph, w).unwrap().ok);
        }
    }

    #[test]
    fn existence_claim_is_searched_even_without_fallback() {
        let cfg = ds(1, 4, 2, 0, Positive);
        let v = classify(cfg, &Default::default());
        assert_eq!(v.status, VerdictStatus::Exists);
        assert_eq!(v.provenance, Provenance::SearchWitness);
        let g = cfg.build().unwrap();
        assert!(verify(&g.graph, v.witness.as_ref().unwrap()).unwrap().ok);
        // memoized
        assert_eq!(classify(cfg, &Default::default()), v);
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let options = ClassifyOptions {
            use_search_fallback: true,
            budget: SearchBudget::new(3, 10.0).unwrap(),
            jobs: 1,
        };
        let v = classify(ds(9, 9, 2, 0, Positive), &options);
        assert_eq!(v.provenance, Provenance::BudgetExceeded);
        assert_eq!(v.code(), 'A');
    }

    #[test]
    fn shapes_round_trip() {
        for shape in Shape::ALL {
            assert_eq!(shape.name().parse::<Shape>(), Ok(shape));
        }
        assert!("bogus".parse::<Shape>().is_err());
    }

    #[test]
    fn sweep_examples() {
        let options = SweepOptions {
            classify: with_search(),
            jobs: 2,
            classes: None,
        };
        let grid = sweep(4, 4, &[Shape::TwoNegPendants], &options, &mut NoStore).unwrap();
        assert_eq!(grid.cells.len(), 25);
        let m = grid.matrix(Shape::TwoNegPendants);
        assert_eq!((m[0][2], m[0][3], m[1][4]), ('E', 'N', 'E'));

        let grid = sweep(2, 2, &[Shape::NegBridge], &options, &mut NoStore).unwrap();
        for cell in &grid.cells {
            let expect = if cell.l() == 0 || cell.r() == 0 {
                'E'
            } else {
                'N'
            };
            assert_eq!(cell.verdict.code(), expect);
        }

        let grid = sweep(5, 5, &[Shape::AllPositive], &options, &mut NoStore).unwrap();
        assert!(grid.cells.iter().all(|c| c.verdict.code() == 'E'));
    }

    struct Recorder {
        seen: Vec<(Shape, usize, usize)>,
        preset: Option<SweepCell>,
    }

    impl CellStore for Recorder {
        fn lookup(&self, shape: Shape, config: &DoubleStarConfig) -> Option<SweepCell> {
            self.preset
                .clone()
                .filter(|c| c.shape == shape && &c.config == config)
        }

        fn record(&mut self, cell: &SweepCell) -> std::io::Result<()> {
            self.seen.push((cell.shape, cell.l(), cell.r()));
            Ok(())
        }
    }

    #[test]
    fn store_sees_cells_in_order_and_cached_cells_are_skipped() {
        let options = SweepOptions {
            classify: with_search(),
            jobs: 4,
            classes: None,
        };
        let first = sweep(2, 2, &[Shape::NegPendant], &options, &mut NoStore).unwrap();
        let mut store = Recorder {
            seen: Vec::new(),
            preset: Some(first.cells[0].clone()),
        };
        let grid = sweep(2, 2, &[Shape::NegPendant], &options, &mut store).unwrap();
        let expected: Vec<_> = (0..3)
            .flat_map(|l| (0..3).map(move |r| (Shape::NegPendant, l, r)))
            .skip(1)
            .collect();
        assert_eq!(store.seen, expected);
        assert_eq!(
            grid.matrix(Shape::NegPendant),
            first.matrix(Shape::NegPendant)
        );
    }
}
