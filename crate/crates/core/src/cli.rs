//! Command-line front end: tropicalize ideals, evaluate Schur polynomials,
//! census necklaces, verify rectangle edges, and report matroids, with
//! ASCII/SVG/JSON output. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cyclotomic::CycNum;
use crate::field::Zero;
use crate::ideal::GradedIdeal;
use crate::matroid::{GroundSet, Matroid};
use crate::monomial::{mon_d, TermOrder};
use crate::necklace::{converse_skip_search, enumerate, necklace_determinant, Necklace};
use crate::parse;
use crate::picture::{build_picture, render_ascii, render_necklace_svg, render_svg};
use crate::schur::{
    elementary_all, schur_eval_bialternant, schur_eval_jacobi_trudi, Partition, PointConfig,
    SchurError,
};
use crate::tgraph::{rectangle_edge_points, stratum_probe};

pub const JSON_SCHEMA: &str = "trop-hilb/1";

#[derive(Parser)]
#[command(
    name = "trop-hilb",
    version,
    about = "Exact tropicalizations of ideals in two variables, Schur strata, and necklace data"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Tropicalize an ideal: Hilbert function, circuits, initial ideals,
    /// and grid pictures
    Trop(TropArgs),
    /// Schur / symmetric polynomial evaluation at point configurations
    Schur {
        #[command(subcommand)]
        cmd: SchurCmd,
    },
    /// Binary necklace enumeration and invariants
    Necklace {
        #[command(subcommand)]
        cmd: NecklaceCmd,
    },
    /// Torus-graph computations on rectangle edges and strata
    Tgraph {
        #[command(subcommand)]
        cmd: TgraphCmd,
    },
    /// Rank and circuits of the matroid of an explicit subspace
    Matroid(MatroidArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Svg,
    Json,
}

#[derive(Args)]
struct TropArgs {
    /// Semicolon-separated homogeneous generators, e.g.
    /// "x^3+x^2*y+2*x*y^2+3*y^3; x^5; x*y^4"
    #[arg(long)]
    ideal: String,
    /// Truncation degree (default: 2 * max generator degree + 2)
    #[arg(long)]
    max_degree: Option<u32>,
    /// Coefficient field check: "q" or "cyclotomic:d"
    #[arg(long)]
    field: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Keep circuits that are forced by lower-degree circuits
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    omit_uninformative: bool,
    /// Directory to write trop.txt / trop.svg / trop.json into
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the SVG picture to this exact path
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Also run the tropical-ideal axiom check (exit 1 on violation)
    #[arg(long)]
    check_axioms: bool,
}

#[derive(Subcommand)]
enum SchurCmd {
    /// Evaluate s_lambda and the elementary values at a configuration
    Eval {
        /// Partition as a comma list, e.g. "4,1" (empty = empty partition)
        #[arg(long)]
        lambda: String,
        /// Points "(x1,y1);(x2,y2);..."; coordinates are rationals or z(d)
        /// expressions
        #[arg(long)]
        points: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum NecklaceCmd {
    /// List the necklaces of N_{d,k} with their circuit tables
    Census {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
        /// Tropicalization truncation degree (default 2d)
        #[arg(long)]
        max_degree: Option<u32>,
        /// Write one d-gon SVG per necklace into this directory
        #[arg(long)]
        emit_figures: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Search N_{d,k} for tropicalization-equal pairs not related by the
    /// skip action (exit 1 if any are found)
    ConverseSearch {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
    /// The necklace determinant det(zeta^(p_i q_j)) of two necklaces
    Determinant {
        /// First necklace as a bit string, e.g. "110000"
        #[arg(long)]
        first: String,
        /// Second necklace as a bit string
        #[arg(long)]
        second: String,
    },
}

#[derive(Subcommand)]
enum TgraphCmd {
    /// Verify the rectangle edge points indexed by N_{d0,k}
    RectangleEdge {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d0: u32,
        /// Optional cutoff degree for the truncated-rectangle variant
        #[arg(long)]
        d1: Option<u32>,
        /// Write the JSON report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Group ideals by truncated tropicalization
    StratumProbe {
        /// An ideal (repeatable)
        #[arg(long = "ideal", required = true)]
        ideals: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
}

#[derive(Args)]
struct MatroidArgs {
    /// Spanning vectors of the subspace, semicolon-separated coordinate
    /// lists, e.g. "1,0,-1; 0,1,0"
    #[arg(long)]
    vectors: String,
    /// Ground labels (comma list; default e0,e1,...)
    #[arg(long)]
    ground: Option<String>,
}

/// Entry point; returns the process exit code.
pub fn cli_main<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let mut full: Vec<String> = vec!["trop-hilb".to_string()];
    full.extend(argv);
    let cli = match Cli::try_parse_from(full) {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version through the error path with exit 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.cmd {
        Cmd::Trop(args) => trop_cmd(args),
        Cmd::Schur { cmd } => schur_cmd(cmd),
        Cmd::Necklace { cmd } => necklace_cmd(cmd),
        Cmd::Tgraph { cmd } => tgraph_cmd(cmd),
        Cmd::Matroid(args) => matroid_cmd(args),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir).map_err(|e| format!("creating {}: {e}", dir.display()))?;
        }
    }
    fs::write(path, contents).map_err(|e| format!("writing {}: {e}", path.display()))
}

fn check_field_flag(ideal: &GradedIdeal, flag: &Option<String>) -> Result<(), String> {
    let Some(flag) = flag else { return Ok(()) };
    let max_order = ideal
        .generators()
        .iter()
        .flat_map(|g| g.terms().map(|(_, c)| c.order()))
        .fold(1u32, num::integer::lcm);
    match flag.as_str() {
        "q" => {
            if max_order != 1 {
                return Err(format!(
                    "--field q but the input uses z({max_order}) coefficients"
                ));
            }
        }
        other => {
            let Some(d) = other
                .strip_prefix("cyclotomic:")
                .and_then(|s| s.parse::<u32>().ok())
            else {
                return Err(format!("bad --field value {other:?}; use q or cyclotomic:d"));
            };
            if d % max_order != 0 {
                return Err(format!(
                    "coefficients lie in Q(z({max_order})), which does not embed in Q(z({d}))"
                ));
            }
        }
    }
    Ok(())
}

fn trop_json(
    ideal: &GradedIdeal,
    t: &crate::ideal::TruncatedTropIdeal,
    max_degree: u32,
) -> Result<serde_json::Value, String> {
    let mut degrees = Vec::new();
    for d in 0..=max_degree {
        let piece = t.piece(d);
        let circuits: Vec<Vec<String>> = piece
            .circuits()
            .map_err(|e| e.to_string())?
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&i| mon_d(d)[i].to_string())
                    .collect()
            })
            .collect();
        degrees.push(json!({
            "degree": d,
            "hilbert": piece.rank(),
            "circuits": circuits,
        }));
    }
    let init = |order: TermOrder| -> Vec<String> {
        ideal
            .initial_monomial_ideal(order, max_degree)
            .iter()
            .map(|m| m.to_string())
            .collect()
    };
    Ok(json!({
        "schema": JSON_SCHEMA,
        "ideal": ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "max_degree": max_degree,
        "hilbert": (0..=max_degree).map(|d| t.hilbert(d)).collect::<Vec<_>>(),
        "degrees": degrees,
        "initial_ideals": {
            "x_greater": init(TermOrder::XGreater),
            "y_greater": init(TermOrder::YGreater),
        },
    }))
}

fn trop_cmd(args: TropArgs) -> Result<i32, String> {
    let ideal = GradedIdeal::parse(&args.ideal).map_err(|e| e.to_string())?;
    check_field_flag(&ideal, &args.field)?;
    let max_degree = args.max_degree.unwrap_or_else(|| ideal.default_max_degree());
    let t = ideal.tropicalize(max_degree);
    let picture = build_picture(&t, args.omit_uninformative).map_err(|e| e.to_string())?;

    let ascii = render_ascii(&picture);
    let svg = render_svg(&picture);
    let json_report = trop_json(&ideal, &t, max_degree)?;

    match args.format {
        Format::Ascii => print!("{ascii}"),
        Format::Svg => print!("{svg}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&json_report).unwrap()),
    }
    if let Some(dir) = &args.out {
        write_file(&dir.join("trop.txt"), &ascii)?;
        write_file(&dir.join("trop.svg"), &svg)?;
        write_file(
            &dir.join("trop.json"),
            &serde_json::to_string_pretty(&json_report).unwrap(),
        )?;
    }
    if let Some(path) = &args.svg {
        write_file(path, &svg)?;
    }
    if args.check_axioms {
        let violations = t.tropical_axiom_check().map_err(|e| e.to_string())?;
        if !violations.is_empty() {
            for v in &violations {
                eprintln!(
                    "axiom violation: degree {} circuit {:?} times {}",
                    v.degree, v.circuit, v.multiplier
                );
            }
            return Ok(1);
        }
    }
    Ok(0)
}

fn schur_cmd(cmd: SchurCmd) -> Result<i32, String> {
    match cmd {
        SchurCmd::Eval { lambda, points, format } => {
            let parts = parse::parse_partition(&lambda).map_err(|e| e.to_string())?;
            let lambda = Partition::new(parts);
            let pts = parse::parse_points(&points).map_err(|e| e.to_string())?;
            let config = PointConfig::new(pts).map_err(|e| e.to_string())?;
            let value = schur_eval_jacobi_trudi(&lambda, &config);
            let e = elementary_all(&config);
            let bialternant = match schur_eval_bialternant(&lambda, &config) {
                Ok(v) => Some(v),
                Err(SchurError::RepeatedPoints) => None,
                Err(e) => return Err(e.to_string()),
            };
            if let Some(b) = &bialternant {
                if *b != value {
                    return Err("bialternant and Jacobi-Trudi disagree".to_string());
                }
            }
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "schema": JSON_SCHEMA,
                            "lambda": lambda.parts(),
                            "k": config.k(),
                            "schur": value.to_string(),
                            "is_zero": value.is_zero(),
                            "elementary": e.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                            "bialternant_defined": bialternant.is_some(),
                        }))
                        .unwrap()
                    );
                }
                _ => {
                    println!("s_({lambda}) = {value}");
                    for (j, ej) in e.iter().enumerate() {
                        println!("e_{j} = {ej}");
                    }
                }
            }
            Ok(0)
        }
    }
}

fn necklace_census_json(
    d: u32,
    k: u32,
    max_degree: u32,
    necklaces: &[Necklace],
) -> Result<serde_json::Value, String> {
    let mut items = Vec::new();
    for n in necklaces {
        let t = n.trop(max_degree);
        let mut circuit_table = Vec::new();
        for deg in 0..=max_degree {
            let circuits: Vec<Vec<String>> = t
                .piece(deg)
                .circuits()
                .map_err(|e| e.to_string())?
                .iter()
                .map(|c| c.iter().map(|&i| mon_d(deg)[i].to_string()).collect())
                .collect();
            circuit_table.push(json!({
                "degree": deg,
                "hilbert": t.hilbert(deg),
                "circuits": circuits,
            }));
        }
        items.push(json!({
            "bits": n.bits(),
            "positions": n.canonical_positions().iter().collect::<Vec<_>>(),
            "gcd_alpha": n.gcd_alpha(),
            "polynomial": n.canonicalize().polynomial().to_string(),
            "degrees": circuit_table,
        }));
    }
    Ok(json!({
        "schema": JSON_SCHEMA,
        "d": d,
        "k": k,
        "count": necklaces.len(),
        "max_degree": max_degree,
        "necklaces": items,
    }))
}

fn necklace_cmd(cmd: NecklaceCmd) -> Result<i32, String> {
    match cmd {
        NecklaceCmd::Census { d, k, max_degree, emit_figures, format } => {
            let necklaces = enumerate(d, k).map_err(|e| e.to_string())?;
            let max_degree = max_degree.unwrap_or(2 * d);
            if let Some(dir) = &emit_figures {
                for n in &necklaces {
                    write_file(
                        &dir.join(format!("necklace_{}.svg", n.bits())),
                        &render_necklace_svg(n),
                    )?;
                }
            }
            match format {
                Format::Json => {
                    let report = necklace_census_json(d, k, max_degree, &necklaces)?;
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                }
                _ => {
                    println!("N_{{{d},{k}}}: {} necklaces", necklaces.len());
                    for n in &necklaces {
                        println!("  {}  alpha = {}", n.bits(), n.gcd_alpha());
                    }
                }
            }
            Ok(0)
        }
        NecklaceCmd::ConverseSearch { d, k, max_degree } => {
            let pairs = converse_skip_search(d, k, max_degree).map_err(|e| e.to_string())?;
            if pairs.is_empty() {
                println!(
                    "no tropicalization-equal non-skip pairs in N_{{{d},{k}}} up to degree {max_degree}"
                );
                Ok(0)
            } else {
                for (a, b) in &pairs {
                    println!("counterexample candidate: {a} ~ {b}");
                }
                Ok(1)
            }
        }
        NecklaceCmd::Determinant { first, second } => {
            let a = Necklace::parse(&first).map_err(|e| e.to_string())?;
            let b = Necklace::parse(&second).map_err(|e| e.to_string())?;
            let det = necklace_determinant(&a, &b).map_err(|e| e.to_string())?;
            println!("D({a}, {b}) = {det}");
            println!("vanishes: {}", det.is_zero());
            Ok(0)
        }
    }
}

fn tgraph_cmd(cmd: TgraphCmd) -> Result<i32, String> {
    match cmd {
        TgraphCmd::RectangleEdge { k, d0, d1, json: json_path } => {
            let points = rectangle_edge_points(k, d0, d1).map_err(|e| e.to_string())?;
            let all_ok = points.iter().all(|p| p.verified());
            let report = json!({
                "schema": JSON_SCHEMA,
                "k": k,
                "d0": d0,
                "d1": d1,
                "count": points.len(),
                "all_verified": all_ok,
                "points": points.iter().map(|p| json!({
                    "necklace": p.necklace.bits(),
                    "ideal": p.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "hilbert": p.hilbert,
                    "colength": p.colength,
                    "initial_x_greater": p.init_x_greater.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "initial_y_greater": p.init_y_greater.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "verified": p.verified(),
                })).collect::<Vec<_>>(),
            });
            if let Some(path) = &json_path {
                write_file(path, &serde_json::to_string_pretty(&report).unwrap())?;
            }
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(if all_ok { 0 } else { 1 })
        }
        TgraphCmd::StratumProbe { ideals, max_degree } => {
            let parsed: Result<Vec<GradedIdeal>, _> =
                ideals.iter().map(|s| GradedIdeal::parse(s)).collect();
            let parsed = parsed.map_err(|e| e.to_string())?;
            let groups = stratum_probe(&parsed, max_degree).map_err(|e| e.to_string())?;
            let report = json!({
                "schema": JSON_SCHEMA,
                "max_degree": max_degree,
                "group_count": groups.len(),
                "groups": groups.iter().map(|g| {
                    g.iter().map(|&i| ideals[i].clone()).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(0)
        }
    }
}

fn matroid_cmd(args: MatroidArgs) -> Result<i32, String> {
    let mut vectors: Vec<Vec<CycNum>> = Vec::new();
    for chunk in args.vectors.split(';') {
        if chunk.trim().is_empty() {
            continue;
        }
        let row: Result<Vec<CycNum>, _> =
            chunk.split(',').map(|c| parse::parse_cyc(c.trim())).collect();
        vectors.push(row.map_err(|e| e.to_string())?);
    }
    if vectors.is_empty() {
        return Err("no vectors given".to_string());
    }
    let n = vectors[0].len();
    let labels: Vec<String> = match &args.ground {
        Some(g) => g.split(',').map(|s| s.trim().to_string()).collect(),
        None => (0..n).map(|i| format!("e{i}")).collect(),
    };
    if labels.len() != n {
        return Err(format!("{} labels for vectors of length {n}", labels.len()));
    }
    let distinct: BTreeSet<&String> = labels.iter().collect();
    if distinct.len() != labels.len() {
        return Err("duplicate ground labels".to_string());
    }
    let ground = GroundSet::new(labels).map_err(|e| e.to_string())?;
    let m = Matroid::from_subspace(ground, &vectors).map_err(|e| e.to_string())?;
    let report = m.to_json().map_err(|e| e.to_string())?;
    let mut report = report;
    report["schema"] = json!(JSON_SCHEMA);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(0)
}
