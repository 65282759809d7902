//! Graphviz and CSV output.

use std::fmt::Write;

use signed_graceful::classify::{Shape, SweepGrid};
use signed_graceful::{Config, Labeling, Sign, SignedGraph, VertexRole};

/// DOT text for `g`: negative edges dashed, positive edges solid. With a
/// labeling, vertices show their label and edges their induced label.
pub fn dot(g: &SignedGraph, roles: Option<&[VertexRole]>, f: Option<&Labeling>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.p() {
        let name = roles
            .and_then(|r| r.get(v))
            .map_or_else(|| v.to_string(), |role| role.to_string());
        let label = match f {
            Some(f) => format!("{name}\\n{}", f.values()[v]),
            None => name,
        };
        writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
    }
    for e in g.edges() {
        let style = match e.sign {
            Sign::Positive => "solid",
            Sign::Negative => "dashed",
        };
        write!(out, "  {} -- {} [style={style}", e.u, e.v).unwrap();
        if let Some(f) = f {
            let (a, b) = (f.values()[e.u], f.values()[e.v]);
            let induced = match e.sign {
                Sign::Positive => a.abs_diff(b),
                Sign::Negative => a + b,
            };
            write!(out, ", label=\"{induced}\"").unwrap();
        }
        out.push_str("];\n");
    }
    out.push_str("}\n");
    out
}

pub fn roles_for(config: Option<Config>) -> Option<Vec<VertexRole>> {
    config.and_then(|c| c.build().ok()).map(|f| f.roles)
}

pub const LEGEND: &str = "# E=exists N=not-exists U=unknown(no theorem) A=aborted(budget)";

/// Verdict matrix for one shape: rows are `l`, columns `r`.
pub fn verdict_csv(grid: &SweepGrid, shape: Shape) -> String {
    let rows = grid.matrix(shape);
    let mut out = format!("{LEGEND}\n# shape={shape}\n");
    header(&mut out, grid.r_max);
    for (l, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(char::to_string).collect();
        writeln!(out, "{l},{}", cells.join(",")).unwrap();
    }
    out
}

/// Class counts for one shape; empty where no labeling exists or the count
/// was not computed.
pub fn class_csv(grid: &SweepGrid, shape: Shape) -> String {
    let mut rows = vec![vec![String::new(); grid.r_max + 1]; grid.l_max + 1];
    for cell in grid.cells_for(shape) {
        if let Some(c) = cell.class_count {
            rows[cell.l()][cell.r()] = c.to_string();
        }
    }
    let mut out = format!("# classes under pendant permutation\n# shape={shape}\n");
    header(&mut out, grid.r_max);
    for (l, row) in rows.iter().enumerate() {
        writeln!(out, "{l},{}", row.join(",")).unwrap();
    }
    out
}

fn header(out: &mut String, r_max: usize) {
    let cols: Vec<String> = (0..=r_max).map(|r| r.to_string()).collect();
    writeln!(out, "l\\r,{}", cols.join(",")).unwrap();
}

#[cfg(test)]
mod tests {
    use super::*;
    use signed_graceful::StarConfig;

    #[test]
    fn all_negative_path() {
        let fam = Config::from(StarConfig::new(0, 2).unwrap())
            .build()
            .unwrap();
        // center 0, so the labeling (u1, z, u2) = (1, 0, 2) reads z=0, u1=1, u2=2
        let text = dot(&fam.graph, Some(&fam.roles), Some(&vec![0, 1, 2].into()));
        assert_eq!(text.matches(" [label=").count(), 3);
        assert_eq!(text.matches("style=dashed").count(), 2);
        assert!(!text.contains("style=solid"));
        assert!(text.contains("0 -- 1 [style=dashed, label=\"1\"]"));
        assert!(text.contains("0 -- 2 [style=dashed, label=\"2\"]"));
        assert_eq!(
            text,
            dot(&fam.graph, Some(&fam.roles), Some(&vec![0, 1, 2].into()))
        );
    }

    #[test]
    fn positive_star_and_unlabeled() {
        let fam = Config::from(StarConfig::new(2, 0).unwrap())
            .build()
            .unwrap();
        let text = dot(&fam.graph, None, None);
        assert_eq!(text.matches("style=solid").count(), 2);
        assert!(!text.contains("dashed"));
        assert!(!text.contains(", label="));
        assert!(text.contains("  1 [label=\"1\"];"));
    }
}
