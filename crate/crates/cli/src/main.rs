use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rigged::bijection::{phi, phi_inv};
use rigged::document::Document;
use rigged::paths::{enumerate_paths, Path, RectangleSeq};
use rigged::promotion::{
    e0, e0_bar, f0, f0_bar, lift, lift_bar, pr, pr_bar, r_matrix, rho, rho_bar, rs, RemovalCell, SlideRules,
};
use rigged::rigged::RiggedConfiguration;
use rigged::verify::{self, Report, SuiteSpec};
use rigged::young::TieRule;
use rigged::Error;

const EXIT_INTERNAL: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_UNDEFINED: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "rigged", version, about = "Paths, rigged configurations and promotion in type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a map to each input document (one JSON document per line, or one pretty document).
    Compute {
        op: Op,
        /// Crystal index for `f` and `e`.
        #[arg(long)]
        index: Option<usize>,
        /// Zero-based permutation of the factors for `rmatrix`, e.g. `1,0,2`.
        #[arg(long, value_delimiter = ',')]
        perm: Vec<usize>,
        /// Input file; stdin when omitted.
        #[arg(long)]
        input: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run exhaustive checks and report discrepancies.
    Verify {
        /// `default`, `sweep`, or a single instance such as `3:2x2,1x2`.
        #[arg(long, default_value = "default")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_area: usize,
        /// Ranks used by `--suite sweep`.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        ranks: Vec<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Replace a slide rule on the path side; the main diagram should then fail.
        #[arg(long, value_enum)]
        mutate: Option<Mutation>,
        /// Restrict to some checks; all holding checks run by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        check: Vec<Check>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Discrepancies printed per check.
        #[arg(long, default_value_t = 3)]
        show: usize,
    },
    /// Convert documents between JSON and the pretty form.
    Render {
        #[arg(long)]
        input: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// List every path of `P_n(B)`, or its image under Φ.
    Enumerate {
        #[arg(long)]
        rank: usize,
        /// Rectangles as `HxW`, e.g. `2x2,1x2`.
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = Kind::Path)]
        kind: Kind,
        /// Only classically highest weight elements.
        #[arg(long)]
        highest_weight: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Phi,
    PhiInv,
    Pr,
    Prbar,
    Rho,
    Rhobar,
    Lift,
    Liftbar,
    Rs,
    Rmatrix,
    F,
    E,
    F0,
    E0,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path,
    Rc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mutation {
    TieLeft,
    RemovalBottomLeft,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Main,
    Bijection,
    Crystal,
    Affine,
    HighestWeight,
    Area,
    Rmatrix,
    Reductions,
    Structure,
    /// Known to fail: `rs` keeping the Knuth class of the row word.
    RsKnuth,
    /// Known to fail: the strict row comparison of selections.
    RowOrderStrict,
}

const HOLDING: [Check; 9] = [
    Check::Main,
    Check::Bijection,
    Check::Crystal,
    Check::Affine,
    Check::HighestWeight,
    Check::Area,
    Check::Rmatrix,
    Check::Reductions,
    Check::Structure,
];

/// Failure carrying the exit status.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Undefined(u) => Fail(EXIT_UNDEFINED, format!("undefined: {}", u.reason())),
            other => Fail(EXIT_INVALID, other.to_string()),
        }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail(EXIT_INTERNAL, format!("i/o: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { op, index, perm, input, format } => compute(op, index, &perm, input, format),
        Command::Verify { suite, max_area, ranks, jobs, mutate, check, format, show } => {
            verify_cmd(&suite, max_area, &ranks, jobs, mutate, &check, format, show)
        }
        Command::Render { input, format } => render(input, format),
        Command::Enumerate { rank, shape, kind, highest_weight, format } => {
            enumerate(rank, &shape, kind, highest_weight, format)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("rigged: {msg}");
            ExitCode::from(code)
        }
    }
}

fn read_documents(input: Option<std::path::PathBuf>) -> Result<Vec<Document>, Fail> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().lock().read_to_string(&mut s)?;
            s
        }
    };
    if text.trim_start().starts_with('{') {
        text.lines().filter(|l| !l.trim().is_empty()).map(|l| Ok(Document::from_json(l)?)).collect()
    } else {
        Ok(vec![Document::parse_pretty(&text)?])
    }
}

fn emit(out: &mut impl Write, doc: &Document, format: Format) -> Result<(), Fail> {
    match format {
        Format::Json => writeln!(out, "{}", doc.to_json())?,
        Format::Pretty => write!(out, "{}", doc.render()?)?,
    }
    Ok(())
}

enum Value {
    Path(Path),
    Rc(RiggedConfiguration),
    Nothing,
}

fn need_index(index: Option<usize>, rank: usize) -> Result<usize, Fail> {
    match index {
        Some(a) if (1..=rank).contains(&a) => Ok(a),
        Some(a) => Err(Fail(EXIT_INVALID, format!("index {a} outside 1..={rank}"))),
        None => Err(Fail(EXIT_INVALID, "--index is required".into())),
    }
}

fn apply(op: Op, index: Option<usize>, perm: &[usize], doc: &Document) -> Result<Value, Fail> {
    let maybe_path = |x: Option<Path>| x.map_or(Value::Nothing, Value::Path);
    let maybe_rc = |x: Option<RiggedConfiguration>| x.map_or(Value::Nothing, Value::Rc);
    Ok(match doc {
        Document::Path { .. } => {
            let p = doc.to_path()?;
            match op {
                Op::Phi => Value::Rc(phi(&p)),
                Op::Pr => Value::Path(pr(&p)?),
                Op::Rho => Value::Path(rho(&p)?),
                Op::Lift => Value::Path(lift(&p)),
                Op::Rs => Value::Path(rs(&p)?),
                Op::Rmatrix => Value::Path(r_matrix(&p, perm)?),
                Op::F => maybe_path(p.f(need_index(index, p.rank())?)?),
                Op::E => maybe_path(p.e(need_index(index, p.rank())?)?),
                Op::F0 => maybe_path(f0(&p)?),
                Op::E0 => maybe_path(e0(&p)?),
                Op::PhiInv | Op::Prbar | Op::Rhobar | Op::Liftbar => {
                    return Err(Fail(EXIT_INVALID, "this map takes a rigged configuration".into()))
                }
            }
        }
        Document::Rc { .. } => {
            let rc = doc.to_rc()?;
            match op {
                Op::PhiInv => Value::Path(phi_inv(&rc)?),
                Op::Prbar => Value::Rc(pr_bar(&rc)?),
                Op::Rhobar => Value::Rc(rho_bar(&rc)?.0),
                Op::Liftbar => Value::Rc(lift_bar(&rc)?),
                Op::Rs => Value::Rc(rc.rs_bar()?),
                Op::F => maybe_rc(rc.f(need_index(index, rc.rank())?)?),
                Op::E => maybe_rc(rc.e(need_index(index, rc.rank())?)?),
                Op::F0 => maybe_rc(f0_bar(&rc)?),
                Op::E0 => maybe_rc(e0_bar(&rc)?),
                Op::Phi | Op::Pr | Op::Rho | Op::Lift | Op::Rmatrix => {
                    return Err(Fail(EXIT_INVALID, "this map takes a path".into()))
                }
            }
        }
    })
}

fn compute(
    op: Op,
    index: Option<usize>,
    perm: &[usize],
    input: Option<std::path::PathBuf>,
    format: Format,
) -> Result<(), Fail> {
    let mut out = io::stdout().lock();
    for doc in read_documents(input)? {
        match apply(op, index, perm, &doc)? {
            Value::Path(p) => emit(&mut out, &Document::from(&p), format)?,
            Value::Rc(rc) => emit(&mut out, &Document::from(&rc), format)?,
            // crystal operator vanished on this element
            Value::Nothing => writeln!(out, "null")?,
        }
    }
    Ok(())
}

fn render(input: Option<std::path::PathBuf>, format: Format) -> Result<(), Fail> {
    let mut out = io::stdout().lock();
    for doc in read_documents(input)? {
        // validate before printing either form
        match doc {
            Document::Path { .. } => drop(doc.to_path()?),
            Document::Rc { .. } => drop(doc.to_rc()?),
        }
        emit(&mut out, &doc, format)?;
    }
    Ok(())
}

fn enumerate(rank: usize, shape: &str, kind: Kind, highest_weight: bool, format: Format) -> Result<(), Fail> {
    let shape = RectangleSeq::parse(shape)?;
    shape.check_rank(rank)?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    for p in enumerate_paths(rank, &shape) {
        if highest_weight && !p.is_highest_weight() {
            continue;
        }
        match kind {
            Kind::Path => emit(&mut out, &Document::from(&p), format)?,
            Kind::Rc => emit(&mut out, &Document::from(&phi(&p)), format)?,
        }
    }
    out.flush()?;
    Ok(())
}

fn parse_suite(suite: &str, max_area: usize, ranks: &[usize]) -> Result<SuiteSpec, Fail> {
    match suite {
        "default" => Ok(SuiteSpec::default_suite(max_area)),
        "sweep" => Ok(SuiteSpec::sweep(ranks, 3, 2, max_area)),
        single => {
            let (n, shape) = single
                .split_once(':')
                .ok_or_else(|| Fail(EXIT_INVALID, format!("unknown suite {single:?}")))?;
            let n: usize = n.parse().map_err(|_| Fail(EXIT_INVALID, format!("bad rank in {single:?}")))?;
            let shape = RectangleSeq::parse(shape)?;
            shape.check_rank(n)?;
            Ok(SuiteSpec::single(n, shape))
        }
    }
}

fn run_check(check: Check, suite: &SuiteSpec) -> Report {
    match check {
        Check::Main => verify::check_main_diagram(suite),
        Check::Bijection => verify::check_bijection(suite),
        Check::Crystal => verify::check_crystal(suite),
        Check::Affine => verify::check_affine(suite),
        Check::HighestWeight => verify::check_highest_weight(suite),
        Check::Area => {
            let max_rank = suite.instances.iter().map(|x| x.0).max().unwrap_or(1);
            verify::check_area_maps(max_rank, 3)
        }
        Check::Rmatrix => verify::check_rmatrix(suite),
        Check::Reductions => verify::check_reductions(suite),
        Check::Structure => verify::check_structure(suite),
        Check::RsKnuth => verify::check_rs_knuth(suite),
        Check::RowOrderStrict => verify::check_row_order_strict(suite),
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    suite: &str,
    max_area: usize,
    ranks: &[usize],
    jobs: Option<usize>,
    mutate: Option<Mutation>,
    checks: &[Check],
    format: Format,
    show: usize,
) -> Result<(), Fail> {
    let mut spec = parse_suite(suite, max_area, ranks)?.with_jobs(jobs);
    if let Some(m) = mutate {
        spec = spec.with_rules(match m {
            Mutation::TieLeft => SlideRules { tie: TieRule::Left, removal: RemovalCell::Corner },
            Mutation::RemovalBottomLeft => SlideRules { tie: TieRule::Above, removal: RemovalCell::BottomLeft },
        });
    }
    let checks = if checks.is_empty() { &HOLDING[..] } else { checks };
    let mut out = io::stdout().lock();
    let mut failed = 0;
    for &check in checks {
        let report = run_check(check, &spec);
        if !report.passed() {
            failed += 1;
        }
        let shown = report.discrepancies.iter().take(show);
        match format {
            Format::Pretty => {
                let verdict = if report.passed() { "ok" } else { "FAILED" };
                writeln!(out, "{verdict:6} {}", report.summary())?;
                for d in shown {
                    writeln!(out, "       {} {}", d.input.to_json(), d.detail)?;
                }
            }
            Format::Json => {
                let shown: Vec<_> = shown
                    .map(|d| json!({ "input": serde_json::to_value(&d.input).expect("document"), "detail": d.detail }))
                    .collect();
                let line = json!({
                    "check": report.check,
                    "cases": report.cases,
                    "discrepancies": report.discrepancies.len(),
                    "examples": shown,
                });
                writeln!(out, "{line}")?;
            }
        }
    }
    if failed > 0 {
        return Err(Fail(EXIT_VERIFY, format!("{failed} checks reported discrepancies")));
    }
    Ok(())
}
