//! `pets`: split a secret into threshold share files, join them back,
//! inspect share headers, and print share-size/rate tables.
//!
//! Exit codes: 0 success, 2 invalid parameters, 3 I/O, 4 seed refused for a
//! production suite, 5 not enough shares, 6 shares from different sharings,
//! 7 unreadable share file.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pets_core::metrics::{self, RateReport};
use pets_core::{CipherSuite, Error, Field, SchemeId, SchemeParams, Share};
use rand::rngs::OsRng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

#[derive(Debug, Parser)]
#[command(name = "pets", version, about = "Threshold secret sharing with short shares")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Split a secret into n share files.
    Split(SplitArgs),
    /// Rebuild a secret from at least t share files.
    Join(JoinArgs),
    /// Print a share file's header.
    Inspect {
        share: PathBuf,
    },
    /// Print per-share payloads and information rates.
    Rates(RatesArgs),
}

#[derive(Debug, Args)]
struct SplitArgs {
    /// Secret file, or `-` for standard input.
    #[arg(short, long, default_value = "-")]
    input: String,
    #[arg(long, default_value = "pets")]
    scheme: SchemeId,
    #[arg(short, long)]
    t: usize,
    #[arg(short, long)]
    n: usize,
    #[arg(long, default_value = "stream256")]
    suite: CipherSuite,
    #[arg(long, default_value = "gf256")]
    field: Field,
    #[arg(short, long)]
    out_dir: PathBuf,
    /// Deterministic key and coefficient generation. For tests only.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct JoinArgs {
    #[arg(required = true)]
    shares: Vec<PathBuf>,
    /// Output file, or `-` for standard output.
    #[arg(short, long, default_value = "-")]
    out: String,
}

#[derive(Debug, Args)]
struct RatesArgs {
    /// The (2,3) comparison over GF(4): 512-symbol secret, 128-symbol key.
    #[arg(long)]
    paper_examples: bool,
    /// Every scheme and 1 <= t <= n <= max-n.
    #[arg(long)]
    sweep: bool,
    #[arg(long, default_value_t = 16)]
    max_n: usize,
    #[arg(long)]
    scheme: Option<SchemeId>,
    #[arg(short, long)]
    t: Option<usize>,
    #[arg(short, long)]
    n: Option<usize>,
    /// Threshold as a fraction of n, e.g. `1/2`.
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, default_value_t = 512)]
    sym_s: usize,
    #[arg(long, default_value_t = 128)]
    sym_k: usize,
    /// Comma-separated output instead of an aligned table.
    #[arg(long)]
    csv: bool,
}

#[derive(Debug)]
enum Failure {
    Params(String),
    Io(String),
    SeedPolicy(String),
    Insufficient(String),
    Mismatch(String),
    BadFile(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Params(_) => 2,
            Failure::Io(_) => 3,
            Failure::SeedPolicy(_) => 4,
            Failure::Insufficient(_) => 5,
            Failure::Mismatch(_) => 6,
            Failure::BadFile(_) => 7,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Params(m)
            | Failure::Io(m)
            | Failure::SeedPolicy(m)
            | Failure::Insufficient(m)
            | Failure::Mismatch(m)
            | Failure::BadFile(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InsufficientShares { .. } => Failure::Insufficient(msg),
            Error::IncompatibleShares(_) | Error::DuplicateIndex(_) => Failure::Mismatch(msg),
            Error::BadMagic
            | Error::UnsupportedVersion(_)
            | Error::Malformed(_)
            | Error::UnknownField(_)
            | Error::UnknownSuite(_)
            | Error::UnknownScheme(_) => Failure::BadFile(msg),
            Error::Rng(_) => Failure::Io(msg),
            _ => Failure::Params(msg),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn read_input(input: &str) -> Result<Vec<u8>, Failure> {
    if input == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read(input).map_err(|e| io_failure(Path::new(input), e))
    }
}

fn split(args: SplitArgs) -> Result<(), Failure> {
    let params = SchemeParams {
        scheme: args.scheme,
        t: args.t,
        n: args.n,
        field: args.field,
        suite: args.suite,
    };
    pets_core::params::validate_threshold(args.t, args.n, args.field)?;
    let secret = read_input(&args.input)?;
    let shares = match args.seed {
        Some(seed) => {
            if args.scheme != SchemeId::Shamir && !args.suite.is_test_suite() {
                return Err(Failure::SeedPolicy(format!(
                    "--seed is only accepted with the test suites, not {}",
                    args.suite
                )));
            }
            eprintln!("WARNING: deterministic mode (--seed). Shares are reproducible and NOT secure.");
            pets_core::split(&secret, &params, &mut ChaCha20Rng::seed_from_u64(seed))?
        }
        None => pets_core::split(&secret, &params, &mut OsRng)?,
    };
    fs::create_dir_all(&args.out_dir).map_err(|e| io_failure(&args.out_dir, e))?;
    for share in &shares {
        let path = args.out_dir.join(format!("share_{}.pet", share.index()));
        fs::write(&path, share.to_bytes()).map_err(|e| io_failure(&path, e))?;
        println!("{}", path.display());
    }
    Ok(())
}

fn load_share(path: &Path) -> Result<Share, Failure> {
    let bytes = fs::read(path).map_err(|e| io_failure(path, e))?;
    Share::from_bytes(&bytes).map_err(|e| match Failure::from(e) {
        Failure::BadFile(m) => Failure::BadFile(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn join(args: JoinArgs) -> Result<(), Failure> {
    let shares = args
        .shares
        .iter()
        .map(|p| load_share(p))
        .collect::<Result<Vec<_>, _>>()?;
    let secret = pets_core::reconstruct(&shares)?;
    if args.out == "-" {
        io::stdout()
            .write_all(&secret)
            .map_err(|e| Failure::Io(format!("stdout: {e}")))?;
    } else {
        fs::write(&args.out, &secret).map_err(|e| io_failure(Path::new(&args.out), e))?;
    }
    Ok(())
}

fn inspect(path: &Path) -> Result<(), Failure> {
    let share = load_share(path)?;
    let h = &share.header;
    let nonce: String = h.nonce.iter().map(|b| format!("{b:02x}")).collect();
    println!("file: {}", path.display());
    println!("version: {}", pets_core::share::VERSION);
    println!("scheme: {}", h.scheme);
    println!("field: {}", h.field);
    println!("cipher: {}", h.suite.map_or("none", CipherSuite::name));
    println!("t: {}", h.t);
    println!("n: {}", h.n);
    println!("index: {}", h.index);
    println!("nonce: {nonce}");
    println!("orig_len: {}", h.orig_len);
    println!("plain_pad: {}", h.plain_pad);
    println!("tail_pad: {}", h.tail_pad);
    println!("poly_part_len: {}", h.poly_part_len);
    println!("frag_part_len: {}", h.frag_part_len);
    println!("payload_symbols: {}", h.payload_symbols());
    println!("payload_bytes: {}", h.payload_bytes());
    Ok(())
}

fn rates(args: RatesArgs) -> Result<(), Failure> {
    let render = |rows: &[RateReport]| {
        if args.csv {
            metrics::render_csv(rows)
        } else {
            metrics::render_text(rows)
        }
    };
    if args.paper_examples {
        print!("{}", render(&metrics::reference_examples()?));
        return Ok(());
    }
    if args.sweep {
        let table = metrics::scheme_sweep(args.max_n, &[(args.sym_s, args.sym_k)])?;
        print!("{}", render(&table.rows));
        return Ok(());
    }
    let scheme = args
        .scheme
        .ok_or_else(|| Failure::Params("give --paper-examples, --sweep, or --scheme with --n".into()))?;
    let n = args.n.ok_or_else(|| Failure::Params("--n is required with --scheme".into()))?;
    let (t, delta) = match (args.t, &args.delta) {
        (Some(t), None) => (t, None),
        (None, Some(d)) => {
            let delta = metrics::parse_rate(d)?;
            let t = delta * metrics::Rate::from_integer(n as u64);
            if !t.is_integer() {
                return Err(Failure::Params(format!("delta {delta} times n={n} is not an integer")));
            }
            (t.to_integer() as usize, Some(delta))
        }
        (Some(_), Some(_)) => return Err(Failure::Params("give either --t or --delta, not both".into())),
        (None, None) => return Err(Failure::Params("--t or --delta is required with --scheme".into())),
    };
    let report = metrics::rate_of(scheme, args.sym_s, args.sym_k, t, n)?;
    print!("{}", render(&[report]));
    if let (Some(delta), SchemeId::Pets) = (delta, scheme) {
        let closed = metrics::rate_asymptotic_pets(delta, args.sym_s, args.sym_k)?;
        println!(
            "closed form delta*S/(S+K) = {}/{} ({})",
            closed.numer(),
            closed.denom(),
            if closed == report.rate { "matches" } else { "differs: geometry needs padding" }
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Split(args) => split(args),
        Command::Join(args) => join(args),
        Command::Inspect { share } => inspect(&share),
        Command::Rates(args) => rates(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
