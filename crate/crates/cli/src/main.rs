use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use morin_core::lefschetz::{emit_slice, noncusp_polynomials, paper_slices, witness_verify};
use morin_core::numeric::{numeric_classify, Tolerances};
use morin_core::parse::DocumentError;
use morin_core::{classify_with, ClassifyOptions, CriteriaReport, GermDocument, Rational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "morin", version, about = "Classify corank-one map germs into folds, cusps and Morin singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the germ described in FILE.
    Classify(ClassifyArgs),
    /// The Lefschetz unfolding and its non-cusp locus.
    #[command(subcommand)]
    Lefschetz(LefschetzCommand),
}

#[derive(Args)]
struct ClassifyArgs {
    file: PathBuf,
    /// JSON report (the only format; accepted for explicitness).
    #[arg(long)]
    json: bool,
    /// Include Λ, H_η, θ and H^{(i)} as polynomial text.
    #[arg(long)]
    trace: bool,
    /// Base point, comma-separated rationals; overrides the file's `point:`.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Floating-point classification at the base point.
    #[arg(long)]
    numeric: bool,
    #[arg(long, requires = "numeric")]
    tol_residual: Option<f64>,
    #[arg(long, requires = "numeric")]
    tol_zero: Option<f64>,
    #[arg(long, requires = "numeric")]
    tol_rank: Option<f64>,
}

#[derive(Subcommand)]
enum LefschetzCommand {
    /// Write the five locus components on an (a1, a2, b1) grid at fixed b2.
    Slice(SliceArgs),
    /// Print the five polynomials defining the non-cusp locus.
    Noncusp,
    /// Look for a singular point that is neither fold nor cusp.
    Witness {
        /// a1,a2,b1,b2 as rationals.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
}

#[derive(Args)]
struct SliceArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "all_paper_slices")]
    b2: Option<String>,
    /// Grid points per axis.
    #[arg(long, default_value_t = 101)]
    grid: usize,
    /// Axis range `lo:hi` shared by a1, a2 and b1.
    #[arg(long, allow_hyphen_values = true, default_value = "-1:1")]
    range: String,
    /// Output file (single slice only).
    #[arg(long, conflicts_with = "all_paper_slices")]
    out: Option<PathBuf>,
    /// Directory for the generated files.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Write the slices b2 = -1/2, -1/4, 0, 1/4, 1/2.
    #[arg(long)]
    all_paper_slices: bool,
}

fn parse_rationals(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|s| s.trim().parse::<Rational>().map_err(|e| anyhow!("{e}")))
        .collect()
}

fn classify_cmd(args: &ClassifyArgs) -> Result<Value> {
    let text = fs::read_to_string(&args.file).with_context(|| format!("cannot read {}", args.file.display()))?;
    let doc = GermDocument::parse(&text).map_err(|e| anyhow!("{}:{e}", args.file.display()))?;
    let point = args.point.as_deref().map(parse_rationals).transpose()?;
    let located = |e: DocumentError| match e {
        DocumentError::Parse(p) => anyhow!("{}:{p}", args.file.display()),
        DocumentError::Germ(g) => anyhow!("{}: {g}", args.file.display()),
    };
    if args.numeric {
        let zero = vec![Rational::zero(); doc.sources.len()];
        let germ = doc.to_germ(Some(&zero)).map_err(located)?;
        let base = point.or_else(|| doc.point.clone()).unwrap_or(zero);
        let defaults = Tolerances::default();
        let tol = Tolerances {
            residual_tol: args.tol_residual.unwrap_or(defaults.residual_tol),
            zero_tol: args.tol_zero.unwrap_or(defaults.zero_tol),
            rank_tol: args.tol_rank.unwrap_or(defaults.rank_tol),
            ..defaults
        };
        let p: Vec<f64> = base.iter().map(Rational::to_f64).collect();
        let verdict = numeric_classify(&germ, &p, &tol)?;
        return Ok(json!({ "mode": "numeric", "tolerances": tol, "numeric": verdict }));
    }
    let germ = doc.to_germ(point.as_deref()).map_err(located)?;
    let opts = ClassifyOptions {
        keep_polynomials: args.trace,
        ..ClassifyOptions::default()
    };
    let report = classify_with(&germ, &opts)?;
    Ok(report_json(&report, args.trace))
}

fn report_json(report: &CriteriaReport, trace: bool) -> Value {
    let t = &report.trace;
    let mut warnings = Vec::new();
    if t.h_derivs_at_0.len() > 1 && t.h_derivs_at_0[1..].iter().all(|h| h.is_zero()) {
        warnings.push(format!("H and its derivatives along θ vanish at 0 up to order {}", t.n - 1));
    }
    let mut out = json!({
        "label": report.label,
        "display": report.label.to_string(),
        "k": report.label.morin_index(),
        "signature": t.signature,
        "m": t.m,
        "n": t.n,
        "germ_rank": t.germ_rank,
        "frame": t.frame,
        "lambda_rank": t.lambda_rank,
        "h_eta_at_0": t.h_eta_at_0,
        "h_derivs_at_0": t.h_derivs_at_0,
        "theta_column": t.theta_column,
        "theta_at_0": t.theta_at_0,
        "condition_b": t.condition_b,
        "warnings": warnings,
    });
    if trace {
        out["polynomials"] = serde_json::to_value(&t.polynomials).expect("serializable");
    }
    out
}

fn parse_range(text: &str) -> Result<(Rational, Rational)> {
    let (lo, hi) = text.split_once(':').ok_or_else(|| anyhow!("range must be lo:hi, got `{text}`"))?;
    let lo: Rational = lo.trim().parse().map_err(|e| anyhow!("{e}"))?;
    let hi: Rational = hi.trim().parse().map_err(|e| anyhow!("{e}"))?;
    if lo >= hi {
        bail!("empty range `{text}`");
    }
    Ok((lo, hi))
}

fn write_slice(b2: &Rational, args: &SliceArgs, range: &(Rational, Rational), out: Option<&Path>) -> Result<PathBuf> {
    let grid = emit_slice(b2, args.grid, range.clone())?;
    let path = match out {
        Some(p) => p.to_path_buf(),
        None => args.out_dir.join(grid.file_name()),
    };
    let file = fs::File::create(&path).with_context(|| format!("cannot write {}", path.display()))?;
    let mut w = std::io::BufWriter::new(file);
    grid.write_csv(&mut w).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(path)
}

fn lefschetz_cmd(cmd: &LefschetzCommand) -> Result<Value> {
    match cmd {
        LefschetzCommand::Noncusp => {
            let comps: Vec<String> = noncusp_polynomials().components.iter().map(|c| c.to_string()).collect();
            Ok(json!({ "components": comps }))
        }
        LefschetzCommand::Witness { params } => {
            let p = parse_rationals(params)?;
            let p: [Rational; 4] = p
                .try_into()
                .map_err(|v: Vec<Rational>| anyhow!("expected 4 parameters, got {}", v.len()))?;
            let report = witness_verify(&p)?;
            let mut v = serde_json::to_value(&report)?;
            v["confirmed"] = json!(report.confirmed());
            Ok(v)
        }
        LefschetzCommand::Slice(args) => {
            let range = parse_range(&args.range)?;
            let values = if args.all_paper_slices {
                paper_slices()
            } else {
                let b2 = args.b2.as_deref().expect("required by clap");
                vec![b2.parse::<Rational>().map_err(|e| anyhow!("{e}"))?]
            };
            let mut files = Vec::new();
            for b2 in &values {
                files.push(write_slice(b2, args, &range, args.out.as_deref())?.display().to_string());
            }
            Ok(json!({ "files": files }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify(args) => classify_cmd(args),
        Command::Lefschetz(cmd) => lefschetz_cmd(cmd),
    };
    match result {
        Ok(v) => {
            let text = serde_json::to_string_pretty(&v).expect("serializable");
            // A closed pipe on stdout is not an error of ours.
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
