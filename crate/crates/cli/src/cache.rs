//! Append-only sweep cache: one JSON record per line.
//!
//! Everything except `timing` is a pure function of the cell, so two runs of
//! the same sweep write identical records apart from that field. On reload
//! the last record for a cell wins.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use anyhow::Context;
use serde::{Deserialize, Serialize};
use signed_graceful::classify::{CellStore, Shape, SweepCell};
use signed_graceful::{
    Config, DoubleStarConfig, Labeling, Provenance, TheoremTag, Verdict, VerdictStatus,
};

use crate::document::{provenance_fields, provenance_from_fields, FamilyDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
    /// Seconds since the Unix epoch.
    pub recorded_at: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheRecord {
    pub shape: Shape,
    pub config: FamilyDescriptor,
    pub status: VerdictStatus,
    pub provenance: String,
    #[serde(default)]
    pub theorem: Option<TheoremTag>,
    #[serde(default)]
    pub witness: Option<Vec<u32>>,
    #[serde(default)]
    pub nodes_explored: Option<u64>,
    #[serde(default)]
    pub class_count: Option<usize>,
    pub timing: Timing,
}

impl CacheRecord {
    pub fn from_cell(cell: &SweepCell) -> Self {
        let (provenance, theorem) = provenance_fields(cell.verdict.provenance);
        let recorded_at = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Self {
            shape: cell.shape,
            config: Config::from(cell.config).into(),
            status: cell.verdict.status,
            provenance,
            theorem,
            witness: cell.verdict.witness.as_ref().map(|w| w.values().to_vec()),
            nodes_explored: cell.verdict.nodes_explored,
            class_count: cell.class_count,
            timing: Timing {
                elapsed_ms: cell.elapsed.as_millis() as u64,
                recorded_at,
            },
        }
    }

    pub fn to_cell(&self) -> anyhow::Result<SweepCell> {
        let config = match Config::try_from(self.config)? {
            Config::DoubleStar(c) => c,
            Config::Star(_) => anyhow::bail!("sweep records describe double stars"),
        };
        anyhow::ensure!(
            self.shape.config(config.l, config.r) == config,
            "record config does not have shape {}",
            self.shape
        );
        Ok(SweepCell {
            shape: self.shape,
            config,
            verdict: Verdict {
                status: self.status,
                provenance: provenance_from_fields(&self.provenance, self.theorem)?,
                witness: self.witness.clone().map(Labeling::new),
                nodes_explored: self.nodes_explored,
            },
            class_count: self.class_count,
            elapsed: Duration::from_millis(self.timing.elapsed_ms),
        })
    }
}

pub struct JsonlCache {
    path: PathBuf,
    cells: HashMap<(Shape, DoubleStarConfig), SweepCell>,
    file: Option<File>,
    /// Treat cached budget-exceeded cells as misses.
    pub retry_aborted: bool,
    /// Treat cached existing cells without a class count as misses.
    pub need_class_counts: bool,
    /// Records written since opening.
    pub recorded: usize,
}

impl JsonlCache {
    /// Loads `path` if it exists. A truncated final line (an interrupted
    /// write) is ignored; any other unreadable line is an error.
    pub fn open(path: &Path) -> anyhow::Result<Self> {
        let mut cells = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(
                File::open(path)
                    .with_context(|| format!("cannot read cache {}", path.display()))?,
            );
            let lines: Vec<String> = reader.lines().collect::<io::Result<_>>()?;
            let last = lines.len().saturating_sub(1);
            for (i, line) in lines.iter().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let parsed = serde_json::from_str::<CacheRecord>(line)
                    .map_err(anyhow::Error::from)
                    .and_then(|r| r.to_cell());
                match parsed {
                    Ok(cell) => {
                        cells.insert((cell.shape, cell.config), cell);
                    }
                    Err(_) if i == last && !ends_with_newline(path)? => {}
                    Err(e) => {
                        return Err(e.context(format!(
                            "{}:{}: bad cache record",
                            path.display(),
                            i + 1
                        )))
                    }
                }
            }
        }
        Ok(Self {
            path: path.to_path_buf(),
            cells,
            file: None,
            retry_aborted: false,
            need_class_counts: false,
            recorded: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

fn ends_with_newline(path: &Path) -> io::Result<bool> {
    let bytes = std::fs::read(path)?;
    Ok(bytes.is_empty() || bytes.last() == Some(&b'\n'))
}

impl CellStore for JsonlCache {
    fn lookup(&self, shape: Shape, config: &DoubleStarConfig) -> Option<SweepCell> {
        let cell = self.cells.get(&(shape, *config))?;
        if self.retry_aborted && cell.verdict.provenance == Provenance::BudgetExceeded {
            return None;
        }
        if self.need_class_counts
            && cell.verdict.status == VerdictStatus::Exists
            && cell.class_count.is_none()
        {
            return None;
        }
        Some(cell.clone())
    }

    fn record(&mut self, cell: &SweepCell) -> io::Result<()> {
        if self.file.is_none() {
            if self.path.exists() && !ends_with_newline(&self.path)? {
                // drop a partial record left by an interrupted write
                let bytes = std::fs::read(&self.path)?;
                let keep = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
                OpenOptions::new()
                    .write(true)
                    .open(&self.path)?
                    .set_len(keep as u64)?;
            }
            let file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&self.path)?;
            self.file = Some(file);
        }
        let mut line =
            serde_json::to_string(&CacheRecord::from_cell(cell)).map_err(io::Error::other)?;
        line.push('\n');
        let file = self.file.as_mut().expect("opened above");
        file.write_all(line.as_bytes())?;
        file.flush()?;
        self.cells.insert((cell.shape, cell.config), cell.clone());
        self.recorded += 1;
        Ok(())
    }
}

/// Cache contents with the `timing` field removed, for comparing runs.
pub fn strip_timing(text: &str) -> anyhow::Result<Vec<String>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut value: serde_json::Value = serde_json::from_str(l)?;
            if let Some(obj) = value.as_object_mut() {
                obj.remove("timing");
            }
            Ok(value.to_string())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use signed_graceful::classify::{sweep, ClassifyOptions, SweepOptions};

    fn options() -> SweepOptions {
        SweepOptions {
            classify: ClassifyOptions {
                use_search_fallback: true,
                ..Default::default()
            },
            jobs: 2,
            classes: None,
        }
    }

    #[test]
    fn records_round_trip() {
        let grid = sweep(
            3,
            3,
            &[Shape::TwoNegPendants],
            &options(),
            &mut signed_graceful::classify::NoStore,
        )
        .unwrap();
        for cell in &grid.cells {
            let record = CacheRecord::from_cell(cell);
            let text = serde_json::to_string(&record).unwrap();
            let back: CacheRecord = serde_json::from_str(&text).unwrap();
            let mut restored = back.to_cell().unwrap();
            restored.elapsed = cell.elapsed;
            assert_eq!(restored.verdict, cell.verdict);
            assert_eq!(restored.config, cell.config);
        }
    }

    #[test]
    fn rerun_is_idempotent_and_reads_back() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let mut cache = JsonlCache::open(&path).unwrap();
        let first = sweep(
            3,
            2,
            &[Shape::NegBridge, Shape::NegPendant],
            &options(),
            &mut cache,
        )
        .unwrap();
        let bytes = std::fs::read(&path).unwrap();
        assert_eq!(String::from_utf8_lossy(&bytes).lines().count(), 24);

        let mut cache = JsonlCache::open(&path).unwrap();
        assert_eq!(cache.len(), 24);
        let second = sweep(
            3,
            2,
            &[Shape::NegBridge, Shape::NegPendant],
            &options(),
            &mut cache,
        )
        .unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), bytes);
        for shape in [Shape::NegBridge, Shape::NegPendant] {
            assert_eq!(first.matrix(shape), second.matrix(shape));
        }
    }

    #[test]
    fn truncated_tail_is_tolerated() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let mut cache = JsonlCache::open(&path).unwrap();
        sweep(1, 1, &[Shape::AllPositive], &options(), &mut cache).unwrap();
        let mut text = std::fs::read_to_string(&path).unwrap();
        text.push_str("{\"shape\":\"all-pos");
        std::fs::write(&path, &text).unwrap();
        let mut cache = JsonlCache::open(&path).unwrap();
        assert_eq!(cache.len(), 4);
        sweep(2, 1, &[Shape::AllPositive], &options(), &mut cache).unwrap();
        let reopened = JsonlCache::open(&path).unwrap();
        assert_eq!(reopened.len(), 6);

        std::fs::write(&path, "garbage\n").unwrap();
        assert!(JsonlCache::open(&path).is_err());
    }

    #[test]
    fn strip_timing_ignores_only_timing() {
        let a = r#"{"a":1,"timing":{"elapsed_ms":3,"recorded_at":5}}"#;
        let b = r#"{"a":1,"timing":{"elapsed_ms":9,"recorded_at":7}}"#;
        assert_eq!(strip_timing(a).unwrap(), strip_timing(b).unwrap());
        assert_ne!(
            strip_timing(a).unwrap(),
            strip_timing(r#"{"a":2}"#).unwrap()
        );
    }
}
