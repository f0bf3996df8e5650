use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use dsiht::{
    bench, demo, dsiht, dsiht_analytic, format_matrix, parse_matrix, ql_decompose, qr_decompose, BasicKind,
    CMatrix, Cpx, DsihtError, Generator, HeapPath, TypeSchedule,
};

/// QR/QL decompositions of complex matrices via discrete signal-induced heap transforms.
#[derive(Parser)]
#[command(name = "dsiht", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a square complex matrix.
    Decompose(DecomposeArgs),
    /// Apply the heap transform induced by a generator to a signal.
    Transform(TransformArgs),
    /// Replay the built-in worked examples.
    Demo,
    /// Compare residual norms of DsiHT and Householder QR on random matrices.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    T,
    M,
    G,
    Analytic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Qr,
    Ql,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Natural,
    Strong,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Matrix file, one row per line.
    input: PathBuf,
    /// Basic transform kind for every stage [default: m]
    #[arg(long = "type", value_enum, conflicts_with = "schedule")]
    kind: Option<KindArg>,
    /// Per-stage kinds, e.g. `t,m,g,t,t`.
    #[arg(long)]
    schedule: Option<String>,
    #[arg(long, value_enum, default_value = "qr")]
    mode: Mode,
    /// Write Q here.
    #[arg(long)]
    out_q: Option<PathBuf>,
    /// Write R (or L with `--mode ql`) here.
    #[arg(long, visible_alias = "out-l")]
    out_r: Option<PathBuf>,
    /// Significant digits in written matrices.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: u8,
}

#[derive(Args)]
struct TransformArgs {
    /// Generator vector file (one row or one column).
    generator: PathBuf,
    /// Signal vector file, same length as the generator.
    signal: PathBuf,
    #[arg(long = "type", value_enum, default_value = "m")]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "natural")]
    path: PathArg,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: u8,
}

#[derive(Args)]
struct BenchArgs {
    /// Matrix sizes.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "6,13,17,19,21,40,64,100,128,201,256,400",
        value_parser = clap::value_parser!(u64).range(1..=4096)
    )]
    sizes: Vec<u64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Repetitions per timing.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Run sizes on a thread pool.
    #[arg(long)]
    parallel: bool,
}

enum Failure {
    Usage(String),
    Input(String),
    RankDeficient(String),
    DemoFailed,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::RankDeficient(_) => 3,
            Failure::DemoFailed => 4,
        }
    }
}

impl From<DsihtError> for Failure {
    fn from(e: DsihtError) -> Self {
        match e {
            DsihtError::RankDeficient(_) => Failure::RankDeficient(e.to_string()),
            DsihtError::ScheduleLength { .. } | DsihtError::AnalyticRequiresM => Failure::Usage(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read_matrix(path: &Path) -> Result<CMatrix, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_vector(path: &Path) -> Result<Vec<Cpx>, Failure> {
    let m = read_matrix(path)?;
    if m.rows() == 1 {
        Ok(m.row(0).to_vec())
    } else if m.cols() == 1 {
        Ok(m.column(0))
    } else {
        Err(Failure::Input(format!(
            "{}: expected a vector, found a {}x{} matrix",
            path.display(),
            m.rows(),
            m.cols()
        )))
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, format!("{text}\n")).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn schedule_for(args: &DecomposeArgs, n: usize) -> Result<TypeSchedule, Failure> {
    if let Some(csv) = &args.schedule {
        return csv.parse().map_err(Failure::Usage);
    }
    Ok(match args.kind.unwrap_or(KindArg::M) {
        KindArg::T => TypeSchedule::uniform(BasicKind::T, n),
        KindArg::M => TypeSchedule::uniform(BasicKind::M, n),
        KindArg::G => TypeSchedule::uniform(BasicKind::G, n),
        KindArg::Analytic => TypeSchedule::analytic(n),
    })
}

fn decompose(args: &DecomposeArgs) -> Result<(), Failure> {
    let x = read_matrix(&args.input)?;
    let schedule = schedule_for(args, x.rows())?;
    let d = match args.mode {
        Mode::Qr => qr_decompose(&x, &schedule)?,
        Mode::Ql => ql_decompose(&x, &schedule)?,
    };
    let digits = usize::from(args.digits);
    let q = format_matrix(&d.q, digits)?;
    let f = format_matrix(&d.factor, digits)?;
    if let Some(p) = &args.out_q {
        write_file(p, &q)?;
    }
    if let Some(p) = &args.out_r {
        write_file(p, &f)?;
    }
    println!("residual={:e} unitarity={:e}", d.residual_norm, d.unitarity_error);
    Ok(())
}

fn transform(args: &TransformArgs) -> Result<(), Failure> {
    let kind = match args.kind {
        KindArg::T => Some(BasicKind::T),
        KindArg::M => Some(BasicKind::M),
        KindArg::G => Some(BasicKind::G),
        KindArg::Analytic => None,
    };
    let path = match args.path {
        PathArg::Natural => HeapPath::Natural,
        PathArg::Strong => HeapPath::Strong,
    };
    if kind.is_none() && path == HeapPath::Strong {
        return Err(Failure::Usage("--type analytic supports only --path natural".into()));
    }
    let gen = Generator::new(read_vector(&args.generator)?)?;
    let signal = read_vector(&args.signal)?;
    let out = match kind {
        Some(kind) => dsiht(&gen, &signal, kind, path)?,
        None => dsiht_analytic(&gen, &signal)?,
    };
    let n = out.len();
    let text = format_matrix(&CMatrix::from_vec(1, n, out)?, usize::from(args.digits))?;
    match &args.out {
        Some(p) => write_file(p, &text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run_demo() -> Result<(), Failure> {
    let outcomes = demo::run();
    for o in &outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        match (&o.max_error, &o.error) {
            (Some(e), _) => println!("{status}  {:<26} max_error={e:.2e}", o.name),
            (None, Some(msg)) => println!("{status}  {:<26} error: {msg}", o.name),
            (None, None) => println!("{status}  {}", o.name),
        }
    }
    if demo::all_passed(&outcomes) {
        Ok(())
    } else {
        Err(Failure::DemoFailed)
    }
}

fn run_bench(args: &BenchArgs) -> Result<(), Failure> {
    let sizes: Vec<usize> = args.sizes.iter().map(|&n| n as usize).collect();
    let rows = bench::run(&sizes, args.seed, args.trials as usize, args.parallel)?;
    println!("{}", bench::HEADER);
    for row in rows {
        println!("{}", row.to_tsv());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match &cli.command {
        Command::Decompose(a) => decompose(a),
        Command::Transform(a) => transform(a),
        Command::Demo => run_demo(),
        Command::Bench(a) => run_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Input(m) | Failure::RankDeficient(m) => eprintln!("dsiht: {m}"),
                Failure::DemoFailed => eprintln!("dsiht: some examples failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
