//! Command-line surface over the library: ingest diagrams or matrix
//! pairs, compute polynomials, run the condition checkers and print
//! deterministic text or JSON.
//!
//! Exit codes: 0 on success (and when every requested check holds),
//! 1 when some check fails, 2 on input or validation errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use alexpoly::fox::{alexander_matrix, delta1};
use alexpoly::laurent::parse_poly;
use alexpoly::linkdiag::{linking_matrix, parse_braid, parse_pd, wirtinger};
use alexpoly::multilink::{check_lemma7, multiplicity_grid, specialize, MultilinkSpec};
use alexpoly::seifert::SeifertPair;
use alexpoly::torres::{
    check_prop8, check_torres_formula, check_torres_fox, reconstruct, reconstruction_query,
    with_component_last, SublinkData, TorresBranch,
};
use alexpoly::{Error, LinkDiagram, LinkingMatrix, UnitClass};

mod report;
use report::*;

#[derive(Parser)]
#[command(
    name = "alexpoly",
    version,
    about = "Alexander polynomials of links and multilinks"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print extra per-step detail in text mode
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Multivariable polynomial of a link diagram, with its linking matrix
    Compute {
        /// PD document file
        #[arg(long)]
        pd: Option<PathBuf>,
        /// Braid document (inline JSON or a file path)
        #[arg(long)]
        braid: Option<String>,
    },
    /// One-variable multilink polynomial from a multivariable one
    Specialize {
        /// Polynomial in the text grammar
        #[arg(long)]
        poly: String,
        /// Number of variables
        #[arg(long)]
        mu: usize,
        /// Multiplicities, comma separated, e.g. 1,-2,0
        #[arg(long)]
        m: String,
    },
    /// One-variable multilink polynomial of a Seifert matrix pair file
    Seifert {
        /// Pair file
        #[arg(long)]
        pair: PathBuf,
    },
    /// Run a condition checker; exits 1 when any check fails
    Check {
        /// Which condition to check
        #[arg(value_enum)]
        which: CheckKind,
        /// PD document file
        #[arg(long)]
        pd: Option<PathBuf>,
        /// Braid document (inline JSON or a file path)
        #[arg(long)]
        braid: Option<String>,
        /// Candidate polynomial instead of a diagram (torres-fox, prop8)
        #[arg(long)]
        poly: Option<String>,
        /// Number of variables for --poly
        #[arg(long)]
        mu: Option<usize>,
        /// Linking matrix rows for --poly, e.g. 0,1;1,0
        #[arg(long)]
        lk: Option<String>,
        /// Half-width of the multiplicity grid for sweeping checks
        #[arg(long, default_value_t = 3)]
        m_grid: i64,
    },
    /// Rebuild a multivariable polynomial from a specialization table
    Reconstruct {
        /// Oracle fixture file mapping multiplicity vectors to polynomials
        #[arg(long)]
        oracle: PathBuf,
        /// Number of variables
        #[arg(long)]
        mu: usize,
        /// Per-variable degree bound of the polynomial being rebuilt
        #[arg(long)]
        bound: i64,
    },
    /// Boundary cable data of a multilink
    Cable {
        /// PD document file
        #[arg(long)]
        pd: Option<PathBuf>,
        /// Braid document (inline JSON or a file path)
        #[arg(long)]
        braid: Option<String>,
        /// Multiplicities, comma separated
        #[arg(long)]
        m: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Torres,
    TorresFox,
    Lemma7,
    Prop8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(all_checks_hold) => {
            if all_checks_hold {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every requested check held (vacuously true for
/// non-check commands).
fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Compute { pd, braid } => {
            let diagram = load_diagram(pd.as_deref(), braid.as_deref())?;
            cmd_compute(cli, &diagram)
        }
        Command::Specialize { poly, mu, m } => cmd_specialize(cli, poly, *mu, m),
        Command::Seifert { pair } => cmd_seifert(cli, pair),
        Command::Check {
            which,
            pd,
            braid,
            poly,
            mu,
            lk,
            m_grid,
        } => {
            if *m_grid < 1 {
                return Err(Error::InvalidInput("--m-grid must be at least 1".into()));
            }
            match which {
                CheckKind::Torres => {
                    let diagram = load_diagram(pd.as_deref(), braid.as_deref())?;
                    cmd_check_torres(cli, &diagram)
                }
                CheckKind::TorresFox => {
                    let (delta, lk) = load_poly_and_linking(pd, braid, poly, mu, lk)?;
                    cmd_check_torres_fox(cli, &delta, &lk)
                }
                CheckKind::Lemma7 => {
                    let diagram = load_diagram(pd.as_deref(), braid.as_deref())?;
                    cmd_check_lemma7(cli, &diagram, *m_grid)
                }
                CheckKind::Prop8 => cmd_check_prop8(cli, pd, braid, poly, mu, lk, *m_grid),
            }
        }
        Command::Reconstruct { oracle, mu, bound } => cmd_reconstruct(cli, oracle, *mu, *bound),
        Command::Cable { pd, braid, m } => {
            let diagram = load_diagram(pd.as_deref(), braid.as_deref())?;
            cmd_cable(cli, &diagram, m)
        }
    }
}

// -------------------------------------------------------------------
// Input loading
// -------------------------------------------------------------------

fn load_diagram(pd: Option<&Path>, braid: Option<&str>) -> Result<LinkDiagram, Error> {
    match (pd, braid) {
        (Some(path), None) => parse_pd(&std::fs::read_to_string(path)?),
        (None, Some(arg)) => {
            let doc = if arg.trim_start().starts_with('{') {
                arg.to_string()
            } else {
                std::fs::read_to_string(arg)?
            };
            parse_braid(&doc)
        }
        _ => Err(Error::InvalidInput(
            "provide exactly one of --pd or --braid".into(),
        )),
    }
}

fn diagram_delta(d: &LinkDiagram) -> UnitClass {
    delta1(&alexander_matrix(&wirtinger(d), d.num_components()))
}

/// Either a diagram (polynomial computed from it) or an explicit
/// candidate polynomial with its linking matrix.
fn load_poly_and_linking(
    pd: &Option<PathBuf>,
    braid: &Option<String>,
    poly: &Option<String>,
    mu: &Option<usize>,
    lk: &Option<String>,
) -> Result<(UnitClass, LinkingMatrix), Error> {
    if let Some(poly) = poly {
        let mu = mu.ok_or_else(|| Error::InvalidInput("--poly needs --mu".into()))?;
        let lk = lk
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("--poly needs --lk".into()))?;
        let lk = parse_linking(lk, mu)?;
        let delta = parse_poly(poly, mu)?.canonicalize();
        return Ok((delta, lk));
    }
    let diagram = load_diagram(pd.as_deref(), braid.as_deref())?;
    let lk = linking_matrix(&diagram)?;
    Ok((diagram_delta(&diagram), lk))
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("'{x}' is not an integer")))
        })
        .collect()
}

fn parse_linking(s: &str, mu: usize) -> Result<LinkingMatrix, Error> {
    let rows: Vec<Vec<i64>> = s.split(';').map(parse_ints).collect::<Result<_, _>>()?;
    if rows.len() != mu {
        return Err(Error::InvalidInput(format!("expected {mu} linking rows")));
    }
    LinkingMatrix::from_rows(rows)
}

// -------------------------------------------------------------------
// Commands
// -------------------------------------------------------------------

fn cmd_compute(cli: &Cli, diagram: &LinkDiagram) -> Result<bool, Error> {
    let lk = linking_matrix(diagram)?;
    let delta = diagram_delta(diagram);
    let out = ComputeOut {
        delta: delta.to_string(),
        mu: diagram.num_components(),
        linking_matrix: lk.rows().to_vec(),
        num_arcs: diagram.num_arcs(),
        num_crossings: diagram.crossings().len(),
    };
    match cli.format {
        Format::Json => print_json(&out),
        Format::Text => {
            println!("{}", out.delta);
            println!("mu = {}", out.mu);
            println!("linking matrix = {:?}", out.linking_matrix);
            if cli.verbose {
                println!("arcs = {}, crossings = {}", out.num_arcs, out.num_crossings);
            }
        }
    }
    Ok(true)
}

fn cmd_specialize(cli: &Cli, poly: &str, mu: usize, m: &str) -> Result<bool, Error> {
    let delta = parse_poly(poly, mu)?.canonicalize();
    let m = parse_ints(m)?;
    let spec = MultilinkSpec::new(LinkingMatrix::zero(mu), m)?;
    let out = specialize(&delta, &spec)?;
    match cli.format {
        Format::Json => print_json(&PolyOut {
            delta: out.to_string(),
        }),
        Format::Text => println!("{out}"),
    }
    Ok(true)
}

fn cmd_seifert(cli: &Cli, pair: &Path) -> Result<bool, Error> {
    let sp = SeifertPair::from_json(&std::fs::read_to_string(pair)?)?;
    let delta = sp.delta();
    match cli.format {
        Format::Json => print_json(&SeifertOut {
            delta: delta.to_string(),
            rows: sp.rows(),
            cols: sp.cols(),
            extra_rank: sp.extra_rank(),
        }),
        Format::Text => {
            println!("{delta}");
            if cli.verbose {
                println!(
                    "shape = {} x {}, extra rank = {}",
                    sp.rows(),
                    sp.cols(),
                    sp.extra_rank()
                );
            }
        }
    }
    Ok(true)
}

fn cmd_cable(cli: &Cli, diagram: &LinkDiagram, m: &str) -> Result<bool, Error> {
    let lk = linking_matrix(diagram)?;
    let spec = MultilinkSpec::new(lk, parse_ints(m)?)?;
    let rows: Vec<CableOut> = (0..spec.mu())
        .map(|i| {
            let c = spec.cable_data(i);
            CableOut {
                component: i + 1,
                d: c.d,
                p: c.p,
                q: c.q,
            }
        })
        .collect();
    match cli.format {
        Format::Json => print_json(&rows),
        Format::Text => {
            for r in &rows {
                println!("component {}: d={} p={} q={}", r.component, r.d, r.p, r.q);
            }
        }
    }
    Ok(true)
}

fn cmd_check_torres(cli: &Cli, diagram: &LinkDiagram) -> Result<bool, Error> {
    let mu = diagram.num_components();
    if mu < 2 {
        return Err(Error::InvalidInput(
            "torres check needs at least two components".into(),
        ));
    }
    let delta = diagram_delta(diagram);
    let lk = linking_matrix(diagram)?;
    let mut outs = Vec::with_capacity(mu);
    for comp in 0..mu {
        let (delta_perm, lk_perm) = with_component_last(&delta, &lk, comp);
        let sub = diagram.delete_component(comp)?;
        let delta_sub = diagram_delta(&sub);
        let r = check_torres_formula(&delta_perm, &delta_sub, &lk_perm);
        outs.push(TorresOut {
            component: comp + 1,
            holds: r.holds,
            branch: match r.branch {
                TorresBranch::Mu2 => "mu2",
                TorresBranch::MuGreater2 => "mu_gt2",
            },
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            details: r.details,
        });
    }
    let all = outs.iter().all(|o| o.holds);
    match cli.format {
        Format::Json => print_json(&outs),
        Format::Text => {
            for o in &outs {
                println!(
                    "torres, component {} removed: {}",
                    o.component,
                    if o.holds { "PASS" } else { "FAIL" }
                );
                if cli.verbose || !o.holds {
                    println!("  lhs = {}", o.lhs);
                    println!("  rhs = {}", o.rhs);
                }
            }
            println!("torres: {}", if all { "all hold" } else { "FAILED" });
        }
    }
    Ok(all)
}

fn cmd_check_torres_fox(cli: &Cli, delta: &UnitClass, lk: &LinkingMatrix) -> Result<bool, Error> {
    if lk.mu() < 2 {
        return Err(Error::InvalidInput(
            "symmetry check needs at least two components".into(),
        ));
    }
    let r = check_torres_fox(delta, lk);
    let out = SymmetryOut {
        holds: r.holds,
        nu: r.nu.clone(),
        parity_ok: r.parity_ok,
    };
    let all = r.holds && r.parity_ok;
    match cli.format {
        Format::Json => print_json(&out),
        Format::Text => {
            println!(
                "torres-fox: {}{}",
                if all { "PASS" } else { "FAIL" },
                match &out.nu {
                    Some(nu) => format!(
                        " (nu = {nu:?}, parity {})",
                        if r.parity_ok { "ok" } else { "bad" }
                    ),
                    None => String::new(),
                }
            );
        }
    }
    Ok(all)
}

fn cmd_check_lemma7(cli: &Cli, diagram: &LinkDiagram, m_grid: i64) -> Result<bool, Error> {
    let mu = diagram.num_components();
    if mu < 2 {
        return Err(Error::InvalidInput(
            "deletion check needs at least two components".into(),
        ));
    }
    let delta = diagram_delta(diagram);
    let lk = linking_matrix(diagram)?;
    let sub = diagram.delete_component(mu - 1)?;
    let delta_sub = diagram_delta(&sub);
    let mut outs = Vec::new();
    for mut m in multiplicity_grid(mu - 1, m_grid) {
        m.push(0);
        let spec = MultilinkSpec::new(lk.clone(), m.clone())?;
        let r = check_lemma7(&delta, &delta_sub, &spec)?;
        outs.push(Lemma7Out {
            m,
            holds: r.holds,
            factor_exponent: r.factor_exponent,
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
        });
    }
    let passed = outs.iter().filter(|o| o.holds).count();
    let all = passed == outs.len();
    match cli.format {
        Format::Json => print_json(&outs),
        Format::Text => {
            for o in outs.iter().filter(|o| cli.verbose || !o.holds) {
                println!(
                    "lemma7 at m = {:?}: {}",
                    o.m,
                    if o.holds { "PASS" } else { "FAIL" }
                );
            }
            println!("lemma7: {passed}/{} hold", outs.len());
        }
    }
    Ok(all)
}

#[allow(clippy::too_many_arguments)]
fn cmd_check_prop8(
    cli: &Cli,
    pd: &Option<PathBuf>,
    braid: &Option<String>,
    poly: &Option<String>,
    mu: &Option<usize>,
    lk: &Option<String>,
    m_grid: i64,
) -> Result<bool, Error> {
    // With a diagram the sublink polynomials for the zero-multiplicity
    // recursion are computed by deleting components; with a bare
    // candidate polynomial they are unavailable and that condition is
    // reported as skipped.
    let (delta, linking, sublinks): (UnitClass, LinkingMatrix, Vec<Option<SublinkData>>) =
        if poly.is_some() {
            let (delta, linking) = load_poly_and_linking(pd, braid, poly, mu, lk)?;
            let n = linking.mu();
            (delta, linking, vec![None; n])
        } else {
            let diagram = load_diagram(pd.as_deref(), braid.as_deref())?;
            let linking = linking_matrix(&diagram)?;
            let subs = (0..diagram.num_components())
                .map(|i| {
                    let sub = diagram.delete_component(i)?;
                    Ok(Some(SublinkData {
                        delta: diagram_delta(&sub),
                        lk: linking_matrix(&sub)?,
                    }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            (diagram_delta(&diagram), linking, subs)
        };
    let n = linking.mu();
    if n < 2 {
        return Err(Error::InvalidInput(
            "normalization check needs at least two components".into(),
        ));
    }
    let provider = |i: usize| sublinks[i].clone();
    let mut outs = Vec::new();
    for m in multiplicity_grid(n, m_grid) {
        let r = check_prop8(&delta, &linking, &m, &provider)?;
        outs.push(Prop8Out {
            m: r.m,
            d: r.d,
            d_i: r.d_each,
            nabla: r.nabla.map(|p| p.to_string()),
            cond_i: r.cond_i,
            cond_ii: r.cond_ii,
            cond_iii: r.cond_iii,
            cond_iv: r.cond_iv,
            big_d: r.minor_d,
            notes: r.notes,
            passes: r.cond_i
                && r.cond_ii.unwrap_or(true)
                && r.cond_iii.unwrap_or(true)
                && r.cond_iv.unwrap_or(true),
        });
    }
    let passed = outs.iter().filter(|o| o.passes).count();
    let all = passed == outs.len();
    match cli.format {
        Format::Json => print_json(&outs),
        Format::Text => {
            for o in outs.iter().filter(|o| cli.verbose || !o.passes) {
                println!(
                    "prop8 at m = {:?}: {} (i={} ii={:?} iii={:?} iv={:?}, D={})",
                    o.m,
                    if o.passes { "PASS" } else { "FAIL" },
                    o.cond_i,
                    o.cond_ii,
                    o.cond_iii,
                    o.cond_iv,
                    o.big_d
                );
            }
            println!("prop8: {passed}/{} hold", outs.len());
        }
    }
    Ok(all)
}

fn cmd_reconstruct(cli: &Cli, oracle: &Path, mu: usize, bound: i64) -> Result<bool, Error> {
    let table = OracleFile::load(oracle)?;
    let (query, _) = reconstruction_query(mu, bound)?;
    let poly = table.entries.get(&query).ok_or_else(|| {
        Error::InvalidInput(format!(
            "oracle file has no entry for the required vector {query:?}; \
             generate it with the specialize command"
        ))
    })?;
    let answer = parse_poly(poly, 1)?.canonicalize();
    let out = reconstruct(|_m: &[i64]| answer.clone(), mu, bound)?;
    match cli.format {
        Format::Json => print_json(&PolyOut {
            delta: out.to_string(),
        }),
        Format::Text => println!("{out}"),
    }
    Ok(true)
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}
