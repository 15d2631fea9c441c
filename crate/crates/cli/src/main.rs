use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spanline_core::checks::{run_suite, Instance, Registry, RunOptions, SuiteConfig};
use spanline_core::combin::{staircases, substaircase_sequences, words, Word};
use spanline_core::gkm::restrict_at_word;
use spanline_core::groebner::{buchberger, GroebnerJson};
use spanline_core::poly::{parse_rational, Polynomial, PolynomialJson, TermOrder, VarUniverse};
use spanline_core::presentations::{basis_a, basis_c, ideal, rank, IdealJson, IdealName};
use spanline_core::schubert::{cell_data, cell_representative, Convention};
use spanline_core::Error;

#[derive(Parser)]
#[command(name = "spanline", version, about = "Exact checks for equivariant cohomology presentations of spanning line configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Args, Clone)]
struct Output {
    /// Write JSON to PATH, or to stdout when no path is given.
    #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    json: Option<String>,
    #[arg(long, value_enum, default_value = "lex")]
    order: Order,
}

#[derive(ValueEnum, Clone, Copy)]
enum Order {
    Lex,
    Grlex,
}

impl From<Order> for TermOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Lex => TermOrder::Lex,
            Order::Grlex => TermOrder::GradedLex,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum BasisName {
    A,
    C,
}

#[derive(Args, Clone)]
struct VerifyArgs {
    #[arg(long, requires_all = ["k", "d"])]
    n: Option<usize>,
    #[arg(long, requires_all = ["n", "d"])]
    k: Option<usize>,
    #[arg(long, requires_all = ["n", "k"])]
    d: Option<usize>,
    /// Comma-separated distinct rationals, e.g. `1,-2,1/3`.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads for running instances in parallel.
    #[arg(long)]
    jobs: Option<usize>,
    /// Suite config: {"instances":[..],"checks":[..],"seed":..,"alpha":..}.
    #[arg(long, value_name = "PATH")]
    config: Option<String>,
    /// Record wall-clock time per check (makes reports non-reproducible).
    #[arg(long)]
    timings: bool,
    /// Schubert representative convention.
    #[arg(long, default_value = "right-minus")]
    convention: Convention,
    #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    json: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of the cohomology as a free module.
    Rank {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
    },
    /// Words indexing the torus-fixed points.
    Words {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Staircases, or with --sub every componentwise-smaller sequence.
    Staircases {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        sub: bool,
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Monomial basis A or Schur-type basis C.
    Basis {
        #[arg(value_enum)]
        which: BasisName,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
    },
    /// Generators of a named ideal.
    Ideal {
        name: IdealName,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
    },
    /// Reduced Gröbner basis of a named ideal or an ideal file.
    Groebner {
        /// I, Jq, Jqt, Ink, or a JSON file holding an ideal, a basis, or a list of polynomials.
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Run a group of checks: orbit-harmonics, thm-1-2, gkm, schubert, all, or one check name.
    Verify {
        target: Option<String>,
        #[command(flatten)]
        args: VerifyArgs,
    },
    #[command(subcommand)]
    Gkm(GkmCommand),
    #[command(subcommand)]
    Schubert(SchubertCommand),
}

#[derive(Subcommand)]
enum GkmCommand {
    /// Restrict a C basis element (by index) or a polynomial file to a fixed word.
    Restrict {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        word: Word,
        /// Basis index, or a file with polynomial JSON or text.
        #[arg(long)]
        elem: String,
        #[command(flatten)]
        out: Output,
    },
    /// Injectivity and divisibility checks.
    Verify {
        #[command(flatten)]
        args: VerifyArgs,
    },
}

#[derive(Subcommand)]
enum SchubertCommand {
    /// Representative of the cell of a surjective word.
    Rep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        word: Word,
        #[arg(long, default_value = "right-minus")]
        convention: Convention,
        #[command(flatten)]
        out: Output,
    },
    /// Basis certification for the representatives.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "right-minus")]
        convention: Convention,
        #[arg(long)]
        timings: bool,
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Check,
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(_)
            | Error::Parse(_)
            | Error::RepeatedAlpha(_)
            | Error::NotFubini
            | Error::NotConvex(_)
            | Error::OutsideBox(..)
            | Error::Json(_)
            | Error::UniverseMismatch(..)
            | Error::VariableOutsideUniverse(..)
            | Error::NotInvariant => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// JSON to the requested sink, otherwise the text form to stdout.
fn emit(json: &Option<String>, value: Value, text: impl FnOnce() -> String) -> Outcome {
    match json.as_deref() {
        None => {
            let t = text();
            if !t.is_empty() {
                print_out(&t);
            }
        }
        Some("-") => print_out(&serde_json::to_string_pretty(&value).expect("json")),
        Some(path) => {
            let body = serde_json::to_string_pretty(&value).expect("json") + "\n";
            fs::write(path, body).map_err(|e| Failure::Usage(format!("cannot write {path}: {e}")))?;
        }
    }
    Ok(())
}

/// A closed pipe (`| head`) is not an error.
fn print_out(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn universe(p: Params) -> Result<VarUniverse, Failure> {
    Ok(VarUniverse::for_instance(p.n, p.k, p.d)?)
}

fn lines<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join("\n")
}

fn seq(s: &[u32]) -> String {
    s.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

/// Generators from a file: ideal JSON, basis JSON, a list of polynomial JSON.
fn generators_from_file(path: &str) -> Result<Vec<Polynomial>, Failure> {
    let text = read(path)?;
    let polys: Vec<PolynomialJson> = if let Ok(i) = serde_json::from_str::<IdealJson>(&text) {
        i.generators
    } else if let Ok(g) = serde_json::from_str::<GroebnerJson>(&text) {
        g.generators
    } else {
        serde_json::from_str(&text)
            .map_err(|e| Failure::Usage(format!("{path}: not an ideal file ({e})")))?
    };
    Ok(polys.iter().map(Polynomial::from_json).collect::<Result<_, _>>()?)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Rank { params, out } => {
            universe(params)?;
            let r = rank(params.n, params.k, params.d);
            emit(&out.json, json!({"n": params.n, "k": params.k, "d": params.d, "rank": r.to_string()}), || {
                r.to_string()
            })
        }
        Command::Words { params, count, out } => {
            universe(params)?;
            let ws = words(params.n, params.k, params.d);
            if count {
                return emit(&out.json, json!(ws.len()), || ws.len().to_string());
            }
            emit(&out.json, json!(ws.iter().map(|w| w.to_string()).collect::<Vec<_>>()), || {
                lines(&ws, |w| w.to_string())
            })
        }
        Command::Staircases { n, d, sub, count, out } => {
            if d == 0 || d > n {
                return Err(Failure::Usage(format!("need 1 <= d <= n, got n = {n}, d = {d}")));
            }
            let seqs = if sub { substaircase_sequences(n, d) } else { staircases(n, d) };
            if count {
                return emit(&out.json, json!(seqs.len()), || seqs.len().to_string());
            }
            emit(&out.json, json!(seqs), || lines(&seqs, |s| seq(s)))
        }
        Command::Basis { which, params, out } => {
            universe(params)?;
            let (n, k, d) = (params.n, params.k, params.d);
            match which {
                BasisName::A => {
                    let a = basis_a(n, k, d)?;
                    let text: Vec<String> = a.iter().map(|m| m.to_text(VarUniverse::new(params.n, params.d, 0))).collect();
                    emit(&out.json, json!(text), || text.join("\n"))
                }
                BasisName::C => {
                    let c = basis_c(n, k, d)?;
                    let ord = out.order.into();
                    let value = json!(c
                        .iter()
                        .map(|e| json!({
                            "label": e.label(),
                            "degree": e.degree(),
                            "polynomial": e.poly.to_json(ord),
                        }))
                        .collect::<Vec<_>>());
                    emit(&out.json, value, || lines(&c, |e| format!("{}\t{}", e.label(), e.poly.to_text(ord))))
                }
            }
        }
        Command::Ideal { name, params, out } => {
            let i = ideal(name, params.n, params.k, params.d)?;
            let ord = out.order.into();
            emit(&out.json, json!(i.to_json(ord)), || lines(&i.generators, |g| g.to_text(ord)))
        }
        Command::Groebner { ideal: source, n, k, d, out } => {
            let gens = match source.parse::<IdealName>() {
                Ok(name) => {
                    let (Some(n), Some(k), Some(d)) = (n, k, d) else {
                        return Err(Failure::Usage("named ideals need --n, --k and --d".into()));
                    };
                    ideal(name, n, k, d)?.generators
                }
                Err(_) => generators_from_file(&source)?,
            };
            let gb = buchberger(&gens, out.order.into())?;
            let ord = gb.order();
            emit(&out.json, json!(gb.to_json()), || lines(gb.generators(), |g| g.to_text(ord)))
        }
        Command::Verify { target, args } => verify(target, args),
        Command::Gkm(GkmCommand::Verify { args }) => verify(Some("gkm".into()), args),
        Command::Schubert(SchubertCommand::Verify { n, k, seed, convention, timings, json }) => {
            let args = VerifyArgs {
                n: Some(n),
                k: Some(k),
                d: Some(k),
                alpha: None,
                seed,
                jobs: None,
                config: None,
                timings,
                convention,
                json,
            };
            verify(Some("schubert".into()), args)
        }
        Command::Gkm(GkmCommand::Restrict { params, word, elem, out }) => {
            universe(params)?;
            let u = VarUniverse::new(params.n, params.d, params.k);
            let f = match elem.parse::<usize>() {
                Ok(i) => {
                    let basis = basis_c(params.n, params.k, params.d)?;
                    let len = basis.len();
                    basis
                        .into_iter()
                        .nth(i)
                        .ok_or_else(|| Failure::Usage(format!("basis index {i} out of range 0..{len}")))?
                        .poly
                }
                Err(_) => {
                    let text = read(&elem)?;
                    match serde_json::from_str::<PolynomialJson>(&text) {
                        Ok(j) => Polynomial::from_json(&j)?,
                        Err(_) => Polynomial::parse(u, text.trim())?,
                    }
                }
            };
            let r = restrict_at_word(&f, &word, params.k)?;
            let ord = out.order.into();
            emit(&out.json, json!(r.to_json(ord)), || r.to_text(ord))
        }
        Command::Schubert(SchubertCommand::Rep { n, k, word, convention, out }) => {
            if word.len() != n {
                return Err(Failure::Usage(format!("word {word} has length {} but n = {n}", word.len())));
            }
            let rep = cell_representative(&word, k, convention)?;
            let data = cell_data(&word, k)?;
            let ord = out.order.into();
            let value = json!({
                "word": word.to_string(),
                "convex": data.convex.to_string(),
                "sort": data.sort.to_string(),
                "standard": data.standard.to_string(),
                "convention": convention.to_string(),
                "representative": rep.to_json(ord),
            });
            emit(&out.json, value, || rep.to_text(ord))
        }
    }
}

fn verify(target: Option<String>, args: VerifyArgs) -> Outcome {
    let registry = Registry::default();
    let mut config = match &args.config {
        Some(path) => SuiteConfig::from_json(&read(path)?)?,
        None => SuiteConfig::default(),
    };
    match (&target, &args.config) {
        (Some(t), _) => config.checks = vec![t.clone()],
        (None, Some(_)) => {}
        (None, None) => config.checks = vec!["all".into()],
    }
    if let (Some(n), Some(k), Some(d)) = (args.n, args.k, args.d) {
        config.instances = vec![Instance::new(n, k, d)];
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(alpha) = &args.alpha {
        let values = alpha
            .split(',')
            .map(|s| parse_rational(s).map(|r| json!(r.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        config.alpha = Some(values);
    }
    let options = RunOptions { timings: args.timings, convention: args.convention };
    let progress = |msg: &str| eprintln!("{msg}");
    let jobs = args.jobs.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let reports = pool.install(|| run_suite(&config, &registry, options, &progress))?;
    let value = serde_json::to_value(&reports).expect("reports serialize");
    emit(&args.json, value, || {
        let mut out = Vec::new();
        for r in &reports {
            let Instance { n, k, d } = r.instance;
            out.push(format!("{} rank {}", r.instance, rank(n, k, d)));
            for c in &r.checks {
                let timing = if args.timings { format!(" ({} ms)", c.elapsed_ms) } else { String::new() };
                out.push(format!("  {:<20}{}{timing}", c.name, if c.pass { "pass" } else { "FAIL" }));
            }
        }
        let all = reports.iter().all(|r| r.passed());
        out.push(if all { "pass".into() } else { "FAIL".into() });
        out.join("\n")
    })?;
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
