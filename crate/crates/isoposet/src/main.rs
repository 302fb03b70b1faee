use clap::{Parser, Subcommand};
use isoposet::catalog::{builtin_catalog, load_catalog, Catalog};
use isoposet::error::Error;
use isoposet::expr::parse_group_expr;
use isoposet::group::Group;
use isoposet::grpiso::{fingerprint, is_isomorphic, verify_witness};
use isoposet::iso::{build_iso_poset, pq_property, IsoPoset};
use isoposet::names::name_group;
use isoposet::poset::{poset_isomorphic, properties};
use isoposet::subgrp::{enumerate_subgroups, lattice_meta, SubgroupLattice};
use isoposet::suites::{run_suite, SuiteCtx, SuiteReport, SUITE_NAMES};
use isoposet::{Caps, Result};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "isoposet",
    about = "Subgroup lattices and posets of isomorphism classes for small finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the poset of isomorphism classes of subgroups of a group
    Iso { expr: String },
    /// Print the full subgroup lattice of a group
    Lattice { expr: String },
    /// Compare two groups and their Iso posets
    Compare { expr1: String, expr2: String },
    /// Construct and verify a twin pair of order n
    Twin { n: u64 },
    /// Run a verification suite (or "all")
    Verify {
        suite: String,
        /// Catalog file to use instead of the built-in one
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Upper bound on group orders considered by the suite
        #[arg(long)]
        max_order: Option<u32>,
        /// Emit the machine-readable JSON report instead of tables
        #[arg(long)]
        json: bool,
        /// Directory for DOT exports of every analyzed Iso poset
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Directory for the persistent analysis cache
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

fn resolve_expr(expr: &str, catalog: &Catalog, caps: &Caps) -> Result<Group> {
    let spec = parse_group_expr(expr)?;
    catalog.resolve(&spec, caps)
}

fn analyze(g: &Group, caps: &Caps) -> Result<(SubgroupLattice, IsoPoset)> {
    let l = enumerate_subgroups(g, caps)?;
    let ip = build_iso_poset(&l, caps)?;
    Ok((l, ip))
}

fn print_poset_properties(p: &isoposet::poset::Poset) -> Result<()> {
    let r = properties(p)?;
    println!(
        "properties: lattice={} chain={} modular={} distributive={} complemented={} height={}",
        r.is_lattice, r.is_chain, r.is_modular, r.is_distributive, r.is_complemented, r.height
    );
    Ok(())
}

fn cmd_iso(expr: &str, catalog: &Catalog, caps: &Caps) -> Result<()> {
    let g = resolve_expr(expr, catalog, caps)?;
    let (l, ip) = analyze(&g, caps)?;
    println!("group: {} (order {})", name_group(&g, caps), g.order());
    println!("subgroups: {}", l.len());
    println!("iso classes: {}", ip.len());
    println!("{:>4}  {:<14} {:>6} {:>8}", "idx", "class", "order", "members");
    for c in 0..ip.len() {
        println!(
            "{:>4}  {:<14} {:>6} {:>8}",
            c,
            ip.poset.labels[c],
            ip.class_order(c),
            ip.classes[c].len()
        );
    }
    println!(
        "hasse: {}",
        ip.poset
            .hasse
            .iter()
            .map(|(a, b)| format!("{a}<{b}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    print_poset_properties(&ip.poset)?;
    let pq = pq_property(&l, caps)?;
    println!("pq-property: {}", if pq.holds { "holds" } else { "fails" });
    Ok(())
}

fn cmd_lattice(expr: &str, catalog: &Catalog, caps: &Caps) -> Result<()> {
    let g = resolve_expr(expr, catalog, caps)?;
    let (l, _) = analyze(&g, caps)?;
    let meta = lattice_meta(&l);
    println!("group: {} (order {})", name_group(&g, caps), g.order());
    println!(
        "subgroups: {} in {} conjugacy classes",
        l.len(),
        l.num_conjugacy_classes()
    );
    println!("{:>4} {:>6} {:>7} {:>6}", "id", "order", "normal", "class");
    for i in 0..l.len() {
        println!(
            "{:>4} {:>6} {:>7} {:>6}",
            i, l.subgroups[i].order, l.normal_flags[i], l.conjugacy_class_ids[i]
        );
    }
    println!(
        "hasse: {}",
        l.hasse
            .iter()
            .map(|(a, b)| format!("{a}<{b}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!(
        "frattini: {}  clt: {}  jordan-dedekind: {}  minimal normal: {:?}",
        meta.frattini_id, meta.is_clt, meta.jordan_dedekind, meta.minimal_normal_ids
    );
    Ok(())
}

fn cmd_compare(expr1: &str, expr2: &str, catalog: &Catalog, caps: &Caps) -> Result<()> {
    let g1 = resolve_expr(expr1, catalog, caps)?;
    let g2 = resolve_expr(expr2, catalog, caps)?;
    println!("group 1: {} (order {})", name_group(&g1, caps), g1.order());
    println!("group 2: {} (order {})", name_group(&g2, caps), g2.order());
    let f1 = fingerprint(&g1);
    let f2 = fingerprint(&g2);
    println!("fingerprints: {} vs {}", f1.short_hash(), f2.short_hash());
    match is_isomorphic(&g1, &g2) {
        Some(w) => {
            assert!(verify_witness(&g1, &g2, &w));
            println!("groups: isomorphic (witness verified)");
        }
        None => println!("groups: not isomorphic"),
    }
    let ip1 = analyze(&g1, caps)?.1;
    let ip2 = analyze(&g2, caps)?.1;
    match poset_isomorphic(&ip1.poset, &ip2.poset) {
        Some(_) => println!("iso posets: isomorphic ({} classes)", ip1.len()),
        None => println!(
            "iso posets: not isomorphic ({} vs {} classes)",
            ip1.len(),
            ip2.len()
        ),
    }
    Ok(())
}

fn cmd_twin(n: u64, caps: &Caps) -> Result<()> {
    let (s1, s2) = isoposet::analytic::twin_pair(n)?;
    let g1 = isoposet::group::construct(&s1, caps)?;
    let g2 = isoposet::group::construct(&s2, caps)?;
    println!("twin pair of order {n}: {s1} and {s2}");
    let non_iso = is_isomorphic(&g1, &g2).is_none();
    let ip1 = analyze(&g1, caps)?.1;
    let ip2 = analyze(&g2, caps)?.1;
    let posets_match = poset_isomorphic(&ip1.poset, &ip2.poset).is_some();
    println!("groups non-isomorphic: {non_iso}");
    println!(
        "iso posets isomorphic: {posets_match} ({} classes)",
        ip1.len()
    );
    if !(non_iso && posets_match) {
        return Err(Error::Internal("twin pair failed verification".into()));
    }
    Ok(())
}

fn print_suite(report: &SuiteReport) {
    println!("suite: {}", report.suite);
    for c in &report.cases {
        println!("  {:<7} {}", c.status.to_string(), c.id);
        if c.status != isoposet::suites::CaseStatus::Pass {
            println!("          evidence: {}", c.evidence);
        }
    }
    let (pass, fail, flagged) = report.counts();
    println!("  {pass} passed, {fail} failed, {flagged} flagged");
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    catalog_path: Option<&PathBuf>,
    max_order: Option<u32>,
    json: bool,
    dot: Option<&PathBuf>,
    cache: Option<&PathBuf>,
    caps: &Caps,
) -> Result<bool> {
    let catalog = match catalog_path {
        Some(p) => load_catalog(p, caps)?,
        None => builtin_catalog(caps)?,
    };
    let ctx = SuiteCtx {
        catalog: &catalog,
        caps,
        max_order,
        cache_dir: cache.map(|p| p.as_path()),
        dot_dir: dot.map(|p| p.as_path()),
    };
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        vec![suite]
    };
    let mut reports = Vec::new();
    for name in names {
        reports.push(run_suite(name, &ctx)?);
    }
    if json {
        if reports.len() == 1 {
            println!("{}", serde_json::to_string_pretty(&reports[0])?);
        } else {
            println!("{}", serde_json::to_string_pretty(&reports)?);
        }
    } else {
        for r in &reports {
            print_suite(r);
        }
    }
    Ok(reports.iter().any(|r| r.failed()))
}

fn run(cli: Cli) -> Result<bool> {
    let caps = Caps::default();
    match cli.command {
        Command::Iso { expr } => {
            let catalog = builtin_catalog(&caps)?;
            cmd_iso(&expr, &catalog, &caps)?;
            Ok(false)
        }
        Command::Lattice { expr } => {
            let catalog = builtin_catalog(&caps)?;
            cmd_lattice(&expr, &catalog, &caps)?;
            Ok(false)
        }
        Command::Compare { expr1, expr2 } => {
            let catalog = builtin_catalog(&caps)?;
            cmd_compare(&expr1, &expr2, &catalog, &caps)?;
            Ok(false)
        }
        Command::Twin { n } => {
            cmd_twin(n, &caps)?;
            Ok(false)
        }
        Command::Verify {
            suite,
            catalog,
            max_order,
            json,
            dot,
            cache,
        } => cmd_verify(
            &suite,
            catalog.as_ref(),
            max_order,
            json,
            dot.as_ref(),
            cache.as_ref(),
            &caps,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
