//! Command-line surface: analyze stored 1-forms, construct distributions
//! from curves or foliations by curves, enumerate spectra, classify linear
//! vector fields, and verify the whole fixture corpus.
//!
//! Exit codes: 0 success, 1 verification mismatch or failed consistency
//! assertion, 2 parse error, 3 math or resource error.

use clap::{Args, Parser, Subcommand};
use codim1::corpus::verify_corpus;
use codim1::differential::{OneForm, VectorField};
use codim1::distribution::analyze;
use codim1::error::Error;
use codim1::exec::Strategy;
use codim1::foliation1d::{
    annihilator_form_space, classify_linear, induce_distribution, seeded_combination,
    traceless_normalize, LinearCase,
};
use codim1::parse::{parse_form_file, parse_ideal_file, parse_matrix_file, parse_vf_file};
use codim1::report::{report_json, scheme_json};
use codim1::spectra::{enumerate_spectra, SpectrumConstraints};
use codim1::syzygy_forms::candidate_forms;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "codim1",
    about = "Exact analysis of codimension-one distributions on projective 3-space",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a twisted 1-form: singular scheme, Chern classes, stability,
    /// classification row.
    Analyze(AnalyzeArgs),
    /// Construct a distribution from a curve ideal or from a stored vector
    /// field (foliation by curves).
    Construct(ConstructArgs),
    /// Enumerate admissible spectra for a rank-2 reflexive sheaf with c1 = 0.
    Spectra(SpectraArgs),
    /// Classify a degree-1 foliation by curves from its traceless matrix.
    ClassifyLinear(ClassifyArgs),
    /// Run every corpus entry and summarize classification-table coverage.
    VerifyCorpus(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Form file: A0:..A3: lines or a dx/dy/dz/dw expression
    form: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    /// Curve ideal file (one generator per line)
    #[arg(long, conflicts_with = "field")]
    curve: Option<PathBuf>,
    /// Distribution degree for the curve construction
    #[arg(long, requires = "curve")]
    degree: Option<u32>,
    /// Extra point ideals intersected into the target scheme
    #[arg(long)]
    points: Vec<PathBuf>,
    /// Vector field file (F0:..F3: lines)
    #[arg(long)]
    field: Option<PathBuf>,
    /// Conormal twist for the field construction
    #[arg(long, requires = "field")]
    twist: Option<i64>,
    /// Seed for the section pick
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SpectraArgs {
    #[arg(allow_hyphen_values = true)]
    c2: i64,
    #[arg(allow_hyphen_values = true)]
    c3: i64,
    #[arg(long)]
    stable: bool,
    #[arg(long)]
    locally_free: bool,
    /// Twists p <= -1 with h1(F(p)) = 0
    #[arg(long = "h1-zero", allow_hyphen_values = true)]
    h1_zero: Vec<i64>,
    /// Twists p >= -3 with h2(F(p)) = 0
    #[arg(long = "h2-zero", allow_hyphen_values = true)]
    h2_zero: Vec<i64>,
    /// Bounds p=n with h2(F(p)) <= n
    #[arg(long = "h2-max", value_parser = parse_pair, allow_hyphen_values = true)]
    h2_max: Vec<(i64, i64)>,
    /// Equalities p=n with h2(F(p)) = n
    #[arg(long = "h2-exact", value_parser = parse_pair, allow_hyphen_values = true)]
    h2_exact: Vec<(i64, i64)>,
    /// Forbid the value 1 (singular scheme lies in no quadric)
    #[arg(long = "no-one")]
    no_one: bool,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once('=').ok_or("expected p=n")?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

#[derive(Args)]
struct ClassifyArgs {
    /// Matrix file: 4 lines of 4 rationals
    matrix: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Fixture directory
    #[arg(long, default_value = "fixtures")]
    fixtures: PathBuf,
    /// Run a single entry
    #[arg(long)]
    only: Option<String>,
    /// Disable the parallel worker pool
    #[arg(long)]
    sequential: bool,
    #[arg(long)]
    json: bool,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::Inconsistent(_) => 1,
        Error::Resource(_) | Error::Invalid(_) => 3,
    }
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze(args) => {
            let coeffs = parse_form_file(&read_file(&args.form)?)?;
            let form = OneForm::new(coeffs)?;
            let report = analyze(&form)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report_json(&report)).unwrap());
            } else {
                print_report(&report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct(args) => run_construct(args),
        Command::Spectra(args) => {
            let cons = SpectrumConstraints {
                stable: args.stable,
                locally_free: args.locally_free,
                h1_zero_at: args.h1_zero,
                h2_zero_at: args.h2_zero,
                h2_at_most: args.h2_max,
                h2_exact: args.h2_exact,
                forbid_value_one: args.no_one,
            };
            let out = enumerate_spectra(args.c2, args.c3, &cons)?;
            for s in out {
                println!("{}", s.render());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyLinear(args) => {
            let matrix = parse_matrix_file(&read_file(&args.matrix)?)?;
            let field = traceless_normalize(&matrix)?;
            let c = classify_linear(&field)?;
            let case = match c.case {
                LinearCase::Generic => "generic: four points counted with multiplicity",
                LinearCase::OneDoubleEigenspace => {
                    "one 2-dimensional eigenspace: line plus a length-2 residue"
                }
                LinearCase::TwoDoubleEigenspaces => {
                    "two 2-dimensional eigenspaces: two skew lines or a double line of genus -1"
                }
            };
            if args.json {
                let v = json!({
                    "schema": 1,
                    "case": case,
                    "conormal_chern": [c.conormal_chern.c1, c.conormal_chern.c2, c.conormal_chern.c3],
                    "scheme": scheme_json(&c.scheme),
                    "curve_part": scheme_json(&c.curve_part),
                    "residual_length": c.residual,
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("case: {case}");
                println!(
                    "conormal chern: c1 = {}, c2 = {}, c3 = {}",
                    c.conormal_chern.c1, c.conormal_chern.c2, c.conormal_chern.c3
                );
                println!(
                    "singular scheme: dim {}, degree {}, residual length {}",
                    c.scheme.dim(),
                    c.scheme.degree(),
                    c.residual
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCorpus(args) => {
            let strategy = if args.sequential {
                Strategy::Sequential
            } else {
                Strategy::default()
            };
            let summary = verify_corpus(&args.fixtures, args.only.as_deref(), strategy)?;
            if args.json {
                let v = json!({
                    "schema": 1,
                    "pass": summary.pass,
                    "entries": summary.outcomes.iter().map(|o| json!({
                        "id": o.id,
                        "pass": o.pass,
                        "failures": o.failures,
                        "c2": o.c2,
                        "c3": o.c3,
                    })).collect::<Vec<_>>(),
                    "coverage": summary.coverage.iter().map(|r| json!({
                        "c2": r.c2, "c3": r.c3, "covered_by": r.covered_by,
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                for o in &summary.outcomes {
                    if o.pass {
                        println!("PASS {}", o.id);
                    } else {
                        println!("FAIL {}", o.id);
                        for f in &o.failures {
                            println!("     {f}");
                        }
                    }
                }
                println!("--- table coverage ---");
                for r in &summary.coverage {
                    let who = if r.covered_by.is_empty() {
                        "UNCOVERED".to_string()
                    } else {
                        r.covered_by.join(", ")
                    };
                    println!("({:>2}, {:>2}): {}", r.c2, r.c3, who);
                }
                println!(
                    "{}: {} entries",
                    if summary.pass { "PASS" } else { "FAIL" },
                    summary.outcomes.len()
                );
            }
            Ok(if summary.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_construct(args: ConstructArgs) -> Result<ExitCode, Error> {
    if let Some(curve_path) = &args.curve {
        let degree = args
            .degree
            .ok_or_else(|| Error::invalid("--degree is required with --curve"))?;
        let gens = parse_ideal_file(&read_file(curve_path)?)?;
        let mut ideal = codim1::groebner::Ideal::new(gens);
        for p in &args.points {
            let pgens = parse_ideal_file(&read_file(p)?)?;
            ideal = ideal.intersection(&codim1::groebner::Ideal::new(pgens))?;
        }
        let curve = codim1::scheme::saturate_irrelevant(&ideal)?;
        let cand = candidate_forms(&curve, degree)?;
        if let Some(m) = cand.violation {
            eprintln!(
                "note: the scheme lies in a degree-{m} hypersurface; the syzygy \
                 correspondence does not apply"
            );
        }
        if cand.primitive_dim() == 0 {
            return Err(Error::invalid(format!(
                "no saturated candidate: space dimension {}, common factor {}",
                cand.basis.len(),
                cand.common_factor.render()
            )));
        }
        let sigma = seeded_combination(&cand.basis, args.seed)?;
        let (prim, _) = codim1::differential::primitive_part(sigma.coeffs())?;
        let report = analyze(&prim)?;
        if args.json {
            let v = json!({
                "schema": 1,
                "basis_dim": cand.basis.len(),
                "form": prim.render(),
                "report": report_json(&report),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        } else {
            println!("candidate space dimension: {}", cand.basis.len());
            println!("form: {}", prim.render());
            print_report(&report);
        }
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(field_path) = &args.field {
        let twist = args
            .twist
            .ok_or_else(|| Error::invalid("--twist is required with --field"))?;
        let comps = parse_vf_file(&read_file(field_path)?)?;
        let field = VectorField::new(comps)?;
        let basis = annihilator_form_space(&field, twist)?;
        if basis.is_empty() {
            return Err(Error::invalid("the conormal has no sections at this twist"));
        }
        let sigma = seeded_combination(&basis, args.seed)?;
        let out = induce_distribution(&field, &sigma, twist)?;
        if args.json {
            let v = json!({
                "schema": 1,
                "annihilator_dim": basis.len(),
                "conormal_chern": [out.conormal.c1, out.conormal.c2, out.conormal.c3],
                "predicted": [out.predicted.c1, out.predicted.c2, out.predicted.c3],
                "agrees": out.agrees,
                "report": report_json(&out.report),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        } else {
            println!("annihilator space dimension: {}", basis.len());
            println!(
                "conormal chern: ({}, {}, {})",
                out.conormal.c1, out.conormal.c2, out.conormal.c3
            );
            println!(
                "predicted: ({}, {}, {}) — {}",
                out.predicted.c1,
                out.predicted.c2,
                out.predicted.c3,
                if out.agrees { "agrees" } else { "disagrees" }
            );
            print_report(&out.report);
        }
        return Ok(ExitCode::SUCCESS);
    }
    Err(Error::invalid("construct needs --curve or --field"))
}

fn print_report(r: &codim1::distribution::DistributionReport) {
    println!("degree: {}", r.degree);
    println!("chern: c1 = {}, c2 = {}, c3 = {}", r.c1, r.c2, r.c3);
    match r.pa_c {
        Some(pa) => println!("curve part: degree {}, arithmetic genus {}", r.deg_c, pa),
        None => println!("curve part: empty"),
    }
    println!("residual length: {}", r.residual_length);
    println!(
        "stability: {} (h0(T(-1)) = {}, h0(T) = {})",
        r.stability.tag.as_str(),
        r.stability.h0_minus_one,
        r.stability.h0_zero
    );
    println!("quadric containment dimension: {}", r.quadric_dim);
    if let Some(row) = r.table_row {
        println!("table row: ({}, {}): {}", row.c2, row.c3, row.locus);
    }
}
