use std::io::{Read, Write};
use std::path::Path;

use anyhow::Context;
use serde_json::json;
use signed_graceful::classify::{sweep, NoStore, Shape, SweepGrid, SweepOptions};
use signed_graceful::search::{count_classes_with_jobs, exhaustive_search_with_jobs};
use signed_graceful::{
    classify, construct, verify, ClassifyOptions, Config, ConstructionOutcome, EquivalenceSpec,
    Error, Provenance, SearchOutcome, VerdictStatus,
};

use crate::args::{Command, FamilyArgs, RenderFormat, SearchArgs, SweepArgs, Symmetry};
use crate::cache::JsonlCache;
use crate::document::{GraphDocument, VerdictMeta};
use crate::render;
use crate::Exit;

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<Exit> {
    match command {
        Command::Construct(family) => cmd_construct(family.config()?, out),
        Command::Verify { input } => cmd_verify(&read_input(&input)?, out),
        Command::Classify {
            family,
            search,
            no_search,
        } => cmd_classify(&family, &search, !no_search, out),
        Command::Search { family, search } => cmd_search(&family, &search, out),
        Command::Classes {
            family,
            search,
            equiv,
        } => cmd_classes(&family, &search, &equiv, out),
        Command::Sweep(args) => cmd_sweep(&args, out, err),
        Command::Render { input, format } => cmd_render(&read_input(&input)?, format, out),
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

/// Emits the graph document for `cfg` with the constructed labeling, if any.
pub fn cmd_construct(cfg: Config, out: &mut dyn Write) -> anyhow::Result<Exit> {
    let family = cfg.build()?;
    let outcome = construct(cfg);
    let mut doc = GraphDocument::from_family(&family);
    let (status, exit) = match &outcome {
        ConstructionOutcome::Built { labeling, .. } => {
            doc = doc.with_labeling(labeling);
            (VerdictStatus::Exists, Exit::Ok)
        }
        ConstructionOutcome::ProvenNonexistent { .. } => {
            (VerdictStatus::NotExists, Exit::Nonexistent)
        }
        ConstructionOutcome::Uncovered { .. } => (VerdictStatus::Unknown, Exit::Uncovered),
    };
    doc.verdict = Some(VerdictMeta {
        status,
        provenance: if outcome.tag().is_some() {
            "theorem"
        } else {
            "no-theorem"
        }
        .into(),
        theorem: outcome.tag(),
        nodes_explored: None,
    });
    writeln!(out, "{}", doc.to_json())?;
    Ok(exit)
}

pub fn cmd_verify(text: &str, out: &mut dyn Write) -> anyhow::Result<Exit> {
    let parsed = GraphDocument::from_json(text)?.parse()?;
    let f = parsed.labeling.context("document has no labels")?;
    let report = verify(&parsed.graph, &f)?;
    if report.ok {
        writeln!(out, "ok: {f} is additively graceful")?;
    } else {
        for v in &report.violations {
            writeln!(out, "violation: {}", serde_json::to_string(v)?)?;
        }
    }
    writeln!(out, "{}", serde_json::to_string(&report)?)?;
    Ok(if report.ok {
        Exit::Ok
    } else {
        Exit::VerifyFailed
    })
}

pub fn cmd_classify(
    family: &FamilyArgs,
    search: &SearchArgs,
    fallback: bool,
    out: &mut dyn Write,
) -> anyhow::Result<Exit> {
    let cfg = family.config()?;
    let options = ClassifyOptions {
        use_search_fallback: fallback,
        budget: search.budget()?,
        jobs: search.jobs,
    };
    let verdict = classify(cfg, &options);
    writeln!(out, "config      {cfg}")?;
    writeln!(out, "status      {:?}", verdict.status)?;
    writeln!(out, "provenance  {}", verdict.provenance)?;
    if let Some(w) = &verdict.witness {
        writeln!(out, "witness     {w}")?;
    }
    if let Some(nodes) = verdict.nodes_explored {
        writeln!(out, "nodes       {nodes}")?;
    }
    let meta = VerdictMeta::from(&verdict);
    writeln!(
        out,
        "{}",
        json!({
            "config": crate::document::FamilyDescriptor::from(cfg),
            "verdict": meta,
            "witness": verdict.witness.as_ref().map(|w| w.values().to_vec()),
        })
    )?;
    Ok(match verdict.provenance {
        Provenance::BudgetExceeded => Exit::BudgetExceeded,
        Provenance::NoTheorem => Exit::Uncovered,
        _ => Exit::Ok,
    })
}

pub fn cmd_search(
    family: &FamilyArgs,
    search: &SearchArgs,
    out: &mut dyn Write,
) -> anyhow::Result<Exit> {
    let cfg = family.config()?;
    let fam = cfg.build()?;
    let outcome =
        exhaustive_search_with_jobs(&fam.graph, &fam.orbits(), &search.budget()?, search.jobs);
    let (status, exit) = match &outcome {
        SearchOutcome::Exists { .. } => ("Exists", Exit::Ok),
        SearchOutcome::NotExists { .. } => ("NotExists", Exit::Ok),
        SearchOutcome::Aborted { .. } => ("Aborted", Exit::BudgetExceeded),
    };
    writeln!(out, "config      {cfg}")?;
    writeln!(out, "status      {status}")?;
    if let Some(w) = outcome.witness() {
        writeln!(out, "witness     {w}")?;
    }
    writeln!(out, "nodes       {}", outcome.nodes_explored())?;
    writeln!(
        out,
        "{}",
        json!({
            "config": crate::document::FamilyDescriptor::from(cfg),
            "status": status,
            "witness": outcome.witness().map(|w| w.values().to_vec()),
            "nodes_explored": outcome.nodes_explored(),
        })
    )?;
    Ok(exit)
}

pub fn cmd_classes(
    family: &FamilyArgs,
    search: &SearchArgs,
    equiv: &[Symmetry],
    out: &mut dyn Write,
) -> anyhow::Result<Exit> {
    let cfg = family.config()?;
    let fam = cfg.build()?;
    let spec = EquivalenceSpec {
        pendant_permutation: equiv.contains(&Symmetry::Perm),
        complementation: equiv.contains(&Symmetry::Comp),
    };
    spec.validate(&fam.graph)?;
    let report = match count_classes_with_jobs(
        &fam.graph,
        &fam.orbits(),
        spec,
        &search.budget()?,
        search.jobs,
    ) {
        Ok(report) => report,
        Err(Error::SearchAborted { nodes }) => {
            writeln!(out, "config      {cfg}")?;
            writeln!(out, "status      Aborted after {nodes} nodes")?;
            writeln!(
                out,
                "{}",
                json!({ "status": "Aborted", "nodes_explored": nodes })
            )?;
            return Ok(Exit::BudgetExceeded);
        }
        Err(e) => return Err(e.into()),
    };
    writeln!(out, "config      {cfg}")?;
    writeln!(out, "classes     {}", report.class_count)?;
    for rep in &report.representatives {
        writeln!(out, "  {rep}")?;
    }
    writeln!(
        out,
        "{}",
        json!({
            "config": crate::document::FamilyDescriptor::from(cfg),
            "class_count": report.class_count,
            "representatives": report.representatives.iter().map(|r| r.values().to_vec()).collect::<Vec<_>>(),
            "nodes_explored": report.nodes_explored,
        })
    )?;
    Ok(Exit::Ok)
}

pub fn run_sweep(args: &SweepArgs) -> anyhow::Result<(SweepGrid, usize)> {
    let shapes: Vec<Shape> = if args.shape.is_empty() {
        Shape::ALL.to_vec()
    } else {
        args.shape.clone()
    };
    let options = SweepOptions {
        classify: ClassifyOptions {
            use_search_fallback: !args.no_search,
            budget: args.search.budget()?,
            jobs: 1,
        },
        jobs: args.search.jobs,
        classes: args.classes.then_some(EquivalenceSpec::PERMUTATION),
    };
    match &args.cache {
        Some(path) => {
            let mut cache = JsonlCache::open(path)?;
            cache.retry_aborted = args.retry_aborted;
            cache.need_class_counts = args.classes;
            let grid = sweep(args.l_max, args.r_max, &shapes, &options, &mut cache)
                .with_context(|| format!("writing cache {}", path.display()))?;
            Ok((grid, cache.recorded))
        }
        None => {
            let grid = sweep(args.l_max, args.r_max, &shapes, &options, &mut NoStore)?;
            let n = grid.cells.len();
            Ok((grid, n))
        }
    }
}

pub fn cmd_sweep(
    args: &SweepArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<Exit> {
    let (grid, computed) = run_sweep(args)?;
    let mut shapes: Vec<Shape> = grid.cells.iter().map(|c| c.shape).collect();
    shapes.dedup();
    for (i, &shape) in shapes.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        write!(out, "{}", render::verdict_csv(&grid, shape))?;
        if args.classes {
            writeln!(out)?;
            write!(out, "{}", render::class_csv(&grid, shape))?;
        }
    }
    writeln!(
        err,
        "{} cells, {} newly computed",
        grid.cells.len(),
        computed
    )?;
    if grid.any_budget_exceeded() {
        writeln!(err, "some cells ran out of search budget (marked A)")?;
        return Ok(Exit::BudgetExceeded);
    }
    Ok(Exit::Ok)
}

pub fn cmd_render(text: &str, format: RenderFormat, out: &mut dyn Write) -> anyhow::Result<Exit> {
    let parsed = GraphDocument::from_json(text)?.parse()?;
    match format {
        RenderFormat::Dot => {
            let roles = render::roles_for(parsed.config);
            write!(
                out,
                "{}",
                render::dot(&parsed.graph, roles.as_deref(), parsed.labeling.as_ref())
            )?;
        }
    }
    Ok(Exit::Ok)
}
