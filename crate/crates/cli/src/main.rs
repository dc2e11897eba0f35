use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use slicereg::theorems::{
    bohr_radius_estimate, run_check, sharpness_witness, Check, Generator, HarnessConfig, SharpnessWitness,
};
use slicereg::{
    cayley_map, coefficients_by_contour, disk_map, extend_from_slice, regular_conjugate, regular_reciprocal, split,
    star_product, symmetrization, Error, MobiusMap, QSeries, Quaternion, UnitImaginary,
};

const THREADS_VAR: &str = "SLICEREG_THREADS";

/// Slice regular power series over the quaternions: algebra, slice tools,
/// Mobius maps and inequality checks. All output is JSON.
#[derive(Parser)]
#[command(name = "slicereg", version, after_help = "Set SLICEREG_THREADS to cap the worker threads used by `verify`.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a series at a point.
    Eval {
        series: PathBuf,
        /// Point as w,x,y,z.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Star product of two series.
    Star { f: PathBuf, g: PathBuf },
    /// Regular conjugate.
    Conj { f: PathBuf },
    /// Symmetrization f * f^c.
    Symm { f: PathBuf },
    /// Regular reciprocal truncated at the given degree.
    Recip {
        f: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Split a series as F + G J on the slice of I.
    Split {
        f: PathBuf,
        /// Imaginary unit I (i, j, k or x,y,z).
        #[arg(long, allow_hyphen_values = true)]
        slice: String,
        /// Unit J orthogonal to I.
        #[arg(long, allow_hyphen_values = true)]
        ortho: String,
    },
    /// Evaluate through the extension formula from one slice.
    Extend {
        f: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from_slice: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Recover coefficients from samples on a circle of one slice.
    Coeffs {
        #[arg(long)]
        samples_of: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        slice: String,
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        nodes: usize,
    },
    /// Fractional linear transformations.
    #[command(subcommand)]
    Mobius(MobiusCommand),
    /// Run an inequality check over the generated corpus.
    Verify(VerifyArgs),
    /// Build a function showing the 1/3 radius cannot be enlarged at q0.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        q0: String,
        /// Override the parameter a (requires --c).
        #[arg(long, requires = "c")]
        a: Option<f64>,
        #[arg(long, requires = "a")]
        c: Option<f64>,
    },
}

#[derive(Args)]
struct Matrix {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, allow_hyphen_values = true)]
    d: String,
}

#[derive(Subcommand)]
enum MobiusCommand {
    /// Dieudonne determinant of [[a, b], [c, d]].
    Det(Matrix),
    /// Apply q -> (qa + b)^-1 (qc + d).
    Apply {
        #[command(flatten)]
        matrix: Matrix,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Map sending Re q < 0 into the unit ball, centered at w0.
    Cayley {
        #[arg(long, allow_hyphen_values = true)]
        w0: String,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Unit ball automorphism moving the real point a0 to 0.
    Disk {
        #[arg(long, allow_hyphen_values = true)]
        a0: f64,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Bc,
    WeakBohr,
    SharpBohr,
    CoeffBounds,
    Radius,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratorArg {
    G1,
    G2,
}

#[derive(Args)]
struct VerifyArgs {
    check: CheckArg,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Restrict the corpus to one generator; alternates when omitted.
    #[arg(long)]
    generator: Option<GeneratorArg>,
    #[arg(long, default_value_t = slicereg::theorems::harness::DEFAULT_TOL)]
    tol: f64,
    /// Test points per Borel-Caratheodory check.
    #[arg(long, default_value_t = slicereg::theorems::harness::DEFAULT_SAMPLES)]
    samples: usize,
}

fn domain(message: impl Into<String>) -> Error {
    Error::InvalidArgument(message.into())
}

fn parse_floats(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',').map(|p| p.trim().parse::<f64>().map_err(|_| domain(format!("not a number: {p:?}")))).collect()
}

fn parse_quaternion(s: &str) -> Result<Quaternion, Error> {
    match parse_floats(s)?[..] {
        [w, x, y, z] => Ok(Quaternion::new(w, x, y, z)),
        [w] => Ok(Quaternion::real(w)),
        _ => Err(domain(format!("expected w,x,y,z, got {s:?}"))),
    }
}

fn parse_unit(s: &str) -> Result<UnitImaginary, Error> {
    match s.trim() {
        "i" => return Ok(UnitImaginary::i()),
        "j" => return Ok(UnitImaginary::j()),
        "k" => return Ok(UnitImaginary::k()),
        _ => {}
    }
    match parse_floats(s)?[..] {
        [x, y, z] => UnitImaginary::from_quaternion(Quaternion::new(0.0, x, y, z), 1e-9),
        [w, x, y, z] => UnitImaginary::from_quaternion(Quaternion::new(w, x, y, z), 1e-9),
        _ => Err(domain(format!("expected i, j, k or x,y,z, got {s:?}"))),
    }
}

fn read_series(path: &Path) -> Result<QSeries, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| domain(format!("cannot read {}: {e}", path.display())))?;
    QSeries::from_json(&text)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

#[derive(Serialize)]
struct WitnessOutput<'a> {
    #[serde(flatten)]
    witness: &'a SharpnessWitness,
    certified_sup: f64,
    bohr_radius: f64,
}

fn mobius_output(map: &MobiusMap, at: Option<&str>) -> Result<Value, Error> {
    let [a, b, c, d] = map.coefficients();
    let mut out = json!({ "a": a, "b": b, "c": c, "d": d, "det": map.det() });
    if let Some(at) = at {
        out["value"] = to_value(&map.apply(parse_quaternion(at)?)?);
    }
    Ok(out)
}

fn complex_pairs(s: &slicereg::SliceSeries) -> Vec<[f64; 2]> {
    s.0.iter().map(|z| [z.re, z.im]).collect()
}

/// Returns the JSON to print and whether the run passed.
fn run(command: Command) -> Result<(Value, bool), Error> {
    let out = match command {
        Command::Eval { series, at } => json!({ "value": read_series(&series)?.evaluate(parse_quaternion(&at)?) }),
        Command::Star { f, g } => to_value(&star_product(&read_series(&f)?, &read_series(&g)?)),
        Command::Conj { f } => to_value(&regular_conjugate(&read_series(&f)?)),
        Command::Symm { f } => to_value(&symmetrization(&read_series(&f)?)),
        Command::Recip { f, degree } => to_value(&regular_reciprocal(&read_series(&f)?, degree)?),
        Command::Split { f, slice, ortho } => {
            let pair = split(&read_series(&f)?, parse_unit(&slice)?, parse_unit(&ortho)?)?;
            json!({
                "slice": pair.unit,
                "ortho": pair.ortho,
                "F": complex_pairs(&pair.f),
                "G": complex_pairs(&pair.g),
            })
        }
        Command::Extend { f, from_slice, at } => {
            let f = read_series(&f)?;
            json!({ "value": extend_from_slice(&f, parse_unit(&from_slice)?, parse_quaternion(&at)?) })
        }
        Command::Coeffs { samples_of, slice, radius, nmax, nodes } => {
            let f = read_series(&samples_of)?;
            let coeffs = coefficients_by_contour(|q| f.evaluate(q), parse_unit(&slice)?, radius, nmax, nodes)?;
            to_value(&QSeries::new(coeffs))
        }
        Command::Mobius(m) => match m {
            MobiusCommand::Det(m) => {
                let det = slicereg::dieudonne_det(
                    parse_quaternion(&m.a)?,
                    parse_quaternion(&m.b)?,
                    parse_quaternion(&m.c)?,
                    parse_quaternion(&m.d)?,
                );
                json!({ "det": det })
            }
            MobiusCommand::Apply { matrix: m, at } => {
                let map = MobiusMap::new(
                    parse_quaternion(&m.a)?,
                    parse_quaternion(&m.b)?,
                    parse_quaternion(&m.c)?,
                    parse_quaternion(&m.d)?,
                )?;
                mobius_output(&map, Some(&at))?
            }
            MobiusCommand::Cayley { w0, at } => mobius_output(&cayley_map(parse_quaternion(&w0)?)?, at.as_deref())?,
            MobiusCommand::Disk { a0, at } => mobius_output(&disk_map(a0)?, at.as_deref())?,
        },
        Command::Verify(args) => {
            let config = HarnessConfig {
                trials: args.trials,
                seed: args.seed,
                generator: args.generator.map(|g| match g {
                    GeneratorArg::G1 => Generator::G1,
                    GeneratorArg::G2 => Generator::G2,
                }),
                tol: args.tol,
                samples: args.samples,
                ..HarnessConfig::default()
            };
            let check = match args.check {
                CheckArg::Bc => Check::Bc,
                CheckArg::WeakBohr => Check::WeakBohr,
                CheckArg::SharpBohr => Check::SharpBohr,
                CheckArg::CoeffBounds => Check::CoeffBounds,
                CheckArg::Radius => Check::Radius,
            };
            let report = run_check(check, &config);
            return Ok((to_value(&report), report.passed()));
        }
        Command::Witness { q0, a, c } => {
            let q0 = parse_quaternion(&q0)?;
            let witness = match (a, c) {
                (Some(a), Some(c)) => SharpnessWitness::with_parameters(q0, a, c)?,
                _ => sharpness_witness(q0)?,
            };
            let admissible = witness.admissible();
            to_value(&WitnessOutput {
                witness: &witness,
                certified_sup: admissible.certified_sup,
                bohr_radius: bohr_radius_estimate(&admissible, 1e-12),
            })
        }
    };
    Ok((out, true))
}

fn configure_threads() -> Result<(), Error> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| domain(format!("{THREADS_VAR} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| domain(e.to_string()))
}

fn print_error(kind: &str, message: &str) -> ExitCode {
    println!("{}", json!({ "error": { "kind": kind, "message": message } }));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            return print_error("usage", message.trim());
        }
    };
    if let Err(e) = configure_threads() {
        return print_error(e.kind(), &e.to_string());
    }
    match run(cli.command) {
        Ok((out, passed)) => {
            println!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => print_error(e.kind(), &e.to_string()),
    }
}
