//! `bezout` — exact Bezoutian / resultant computations for a pair of
//! rational polynomials.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 parse or usage error, 2 precondition violation, 3 theorem violation
//! (the last one signals a bug, not bad input).

use bezout_core::{
    batch, bezout, instances, linalg, matrix::ExactMatrix, parse_polynomial, BezoutError,
    BezoutPair, KernelBasis, Polynomial, Rational,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::io::Read;
use std::process::ExitCode;

const PARSE_OR_USAGE: u8 = 1;
const PRECONDITION: u8 = 2;
const THEOREM_VIOLATION: u8 = 3;

/// Sample points used to spot-check the resultant action per pair.
const ACTION_POINTS: usize = 20;
/// Coefficient bound for randomly generated pairs.
const RANDOM_COEFF_BOUND: u64 = 50;

#[derive(Parser)]
#[command(
    name = "bezout",
    about = "Exact Bezoutian and resultant matrices of polynomial pairs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Bezoutian matrix of the pair
    Bezoutian(PairArgs),
    /// Print the 2n x 2n resultant block matrix of the pair
    Resultant(PairArgs),
    /// Print the nullities of the Bezoutian and the resultant
    Nullity(NullityArgs),
    /// Print the gcd degree by the Euclidean algorithm and by nullity
    GcdDegree(PairArgs),
    /// Print the parametrized kernel basis of the multiplication map
    Kernel(PairArgs),
    /// Check the identity chain on the pair, or on --random generated pairs
    Verify(VerifyArgs),
    /// Emit the full JSON report for the pair
    Report(PairArgs),
}

#[derive(Args)]
struct PairArgs {
    /// First polynomial, e.g. "z^2 - 1"
    #[arg(short = 'f', long = "poly-f")]
    poly_f: Option<String>,
    /// Second polynomial, e.g. "z - 1"
    #[arg(short = 'g', long = "poly-g")]
    poly_g: Option<String>,
    /// Working size n; defaults to max(deg f, deg g) (at least 1)
    #[arg(long)]
    size: Option<usize>,
    /// Variable name, a single letter
    #[arg(long, default_value = "z")]
    var: char,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct NullityArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Developer flag: read a serialized matrix (path or "-" for stdin)
    /// and print its nullity instead of building the pair
    #[arg(long, value_name = "PATH")]
    matrix_in: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Check this many randomly generated pairs instead of -f/-g
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    /// Seed for all randomized checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Degree bound (and working size) for generated pairs
    #[arg(long, default_value_t = 8)]
    max_degree: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
    Latex,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{err}");
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            eprint!("{err}");
            return ExitCode::from(PARSE_OR_USAGE);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Bezoutian(args) => {
            let pair = build_pair(&args)?;
            print_matrix(&bezout::bezoutian_divided_difference(&pair), args.format);
            Ok(())
        }
        Command::Resultant(args) => {
            let pair = build_pair(&args)?;
            print_matrix(&bezout::resultant_matrix(&pair), args.format);
            Ok(())
        }
        Command::Nullity(args) => run_nullity(args),
        Command::GcdDegree(args) => run_gcd_degree(args),
        Command::Kernel(args) => run_kernel(args),
        Command::Verify(args) => run_verify(args),
        Command::Report(args) => {
            let pair = build_pair(&args)?;
            let report = bezout::gcd_report(&pair).map_err(map_bezout_error)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report.to_json()).expect("report serializes")
            );
            Ok(())
        }
    }
}

fn parse_pair_polynomial(text: &str, var: char, which: &str) -> Result<Polynomial, Failure> {
    parse_polynomial(text, var)
        .map_err(|err| Failure::new(PARSE_OR_USAGE, format!("in {which}: {err}")))
}

fn build_pair(args: &PairArgs) -> Result<BezoutPair, Failure> {
    if !args.var.is_alphabetic() {
        return Err(Failure::new(
            PARSE_OR_USAGE,
            format!("variable must be a letter, got {:?}", args.var),
        ));
    }
    let f_text = args
        .poly_f
        .as_deref()
        .ok_or_else(|| Failure::new(PARSE_OR_USAGE, "missing -f/--poly-f"))?;
    let g_text = args
        .poly_g
        .as_deref()
        .ok_or_else(|| Failure::new(PARSE_OR_USAGE, "missing -g/--poly-g"))?;
    let f = parse_pair_polynomial(f_text, args.var, "-f")?;
    let g = parse_pair_polynomial(g_text, args.var, "-g")?;
    match args.size {
        // A size below max(deg f, deg g) is a usage error, not a
        // precondition failure of the math.
        Some(size) => BezoutPair::new(f, g, size).map_err(|err| match err {
            BezoutError::SizeBelowDegree { .. } | BezoutError::ZeroSize => {
                Failure::new(PARSE_OR_USAGE, format!("--size: {err}"))
            }
            other => map_bezout_error(other),
        }),
        None => BezoutPair::with_default_size(f, g).map_err(map_bezout_error),
    }
}

fn map_bezout_error(err: BezoutError) -> Failure {
    let code = match err {
        BezoutError::TheoremViolation(_) => THEOREM_VIOLATION,
        _ => PRECONDITION,
    };
    Failure::new(code, err.to_string())
}

fn print_matrix(matrix: &ExactMatrix, format: Format) {
    match format {
        Format::Plain => print!("{}", matrix.to_plain_text()),
        Format::Latex => print!("{}", matrix.to_latex()),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&matrix.to_json()).expect("matrix serializes")
        ),
    }
}

fn run_nullity(args: NullityArgs) -> Result<(), Failure> {
    if let Some(source) = &args.matrix_in {
        let text = read_matrix_source(source)?;
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|err| Failure::new(PARSE_OR_USAGE, format!("matrix input: {err}")))?;
        let matrix = ExactMatrix::from_json(&value)
            .map_err(|err| Failure::new(PARSE_OR_USAGE, err.to_string()))?;
        let nullity = linalg::nullity(&matrix);
        match args.pair.format {
            Format::Json => println!("{}", json!({ "nullity": nullity })),
            _ => println!("nullity: {nullity}"),
        }
        return Ok(());
    }
    let pair = build_pair(&args.pair)?;
    let bezoutian_nullity = linalg::nullity(&bezout::bezoutian_hankel_toeplitz(&pair));
    let resultant_nullity = linalg::nullity(&bezout::resultant_matrix(&pair));
    match args.pair.format {
        Format::Json => println!(
            "{}",
            json!({
                "bezoutian_nullity": bezoutian_nullity,
                "resultant_nullity": resultant_nullity,
            })
        ),
        _ => {
            println!("bezoutian nullity: {bezoutian_nullity}");
            println!("resultant nullity: {resultant_nullity}");
        }
    }
    Ok(())
}

fn read_matrix_source(source: &str) -> Result<String, Failure> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|err| Failure::new(PARSE_OR_USAGE, format!("reading stdin: {err}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(source)
            .map_err(|err| Failure::new(PARSE_OR_USAGE, format!("reading {source}: {err}")))
    }
}

fn run_gcd_degree(args: PairArgs) -> Result<(), Failure> {
    let pair = build_pair(&args)?;
    let report = bezout::gcd_report(&pair).map_err(map_bezout_error)?;
    // The nullity route recovers the gcd degree after discounting the
    // shared zero at infinity carried by an oversized n.
    let from_nullity = report.bezoutian_nullity - report.infinity_multiplicity;
    match args.format {
        Format::Json => println!(
            "{}",
            json!({
                "euclid_gcd_degree": report.gcd_degree,
                "nullity_gcd_degree": from_nullity,
            })
        ),
        _ => {
            println!("euclid: {}", report.gcd_degree);
            println!("nullity: {from_nullity}");
        }
    }
    Ok(())
}

fn run_kernel(args: PairArgs) -> Result<(), Failure> {
    let pair = build_pair(&args)?;
    let basis = bezout::multiplication_kernel(&pair).map_err(map_bezout_error)?;
    print_kernel(&basis, args.format);
    Ok(())
}

fn print_kernel(basis: &KernelBasis, format: Format) {
    match format {
        Format::Json => {
            let vectors: Vec<Vec<String>> = basis
                .vectors
                .iter()
                .map(|v| v.iter().map(bezout_core::format_rational).collect())
                .collect();
            println!(
                "{}",
                json!({
                    "dim": basis.dim,
                    "count": basis.len(),
                    "vectors": vectors,
                })
            );
        }
        Format::Plain => {
            if basis.is_empty() {
                println!("empty kernel (dimension {})", basis.dim);
            } else {
                print!("{}", basis.as_matrix().to_plain_text());
            }
        }
        Format::Latex => print!("{}", basis.as_matrix().to_latex()),
    }
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    match args.random {
        Some(count) => run_verify_random(&args, count),
        None => run_verify_single(&args),
    }
}

fn run_verify_single(args: &VerifyArgs) -> Result<(), Failure> {
    let pair = build_pair(&args.pair)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let points: Vec<Rational> = (0..ACTION_POINTS)
        .map(|_| instances::random_rational(&mut rng, RANDOM_COEFF_BOUND))
        .collect();

    let action = points
        .iter()
        .all(|z| bezout::verify_resultant_action(&pair, z));
    report_check("resultant action", action, Some(points.len()))?;
    let congruence = bezout::verify_congruence(&pair);
    report_check("congruence", congruence, None)?;
    let factorization = bezout::verify_block_factorization(&pair).map_err(map_bezout_error)?;
    report_check("block factorization", factorization, None)?;
    Ok(())
}

fn report_check(name: &str, held: bool, points: Option<usize>) -> Result<(), Failure> {
    if held {
        match points {
            Some(count) => println!("{name}: ok ({count} points)"),
            None => println!("{name}: ok"),
        }
        Ok(())
    } else {
        Err(Failure::new(
            THEOREM_VIOLATION,
            format!("{name} identity failed; this is a bug"),
        ))
    }
}

fn run_verify_random(args: &VerifyArgs, count: usize) -> Result<(), Failure> {
    if args.max_degree == 0 {
        return Err(Failure::new(PARSE_OR_USAGE, "--max-degree must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    // Generated pairs keep deg f = n so the block factorization check
    // applies to every one of them.
    let jobs: Vec<batch::IdentityJob> = (0..count)
        .map(|_| {
            let degree = rng.gen_range(1..=args.max_degree);
            let pair = instances::random_pair_full_f(&mut rng, degree, RANDOM_COEFF_BOUND);
            let points = (0..ACTION_POINTS)
                .map(|_| instances::random_rational(&mut rng, RANDOM_COEFF_BOUND))
                .collect();
            batch::IdentityJob { pair, points }
        })
        .collect();
    let outcomes = batch::check_identity_batch(&jobs);
    let mut held = 0;
    for (index, outcome) in outcomes.iter().enumerate() {
        match outcome {
            Ok(result) if result.all_hold() => held += 1,
            Ok(result) => {
                return Err(Failure::new(
                    THEOREM_VIOLATION,
                    format!(
                        "pair {index}: action={} congruence={} factorization={}; this is a bug",
                        result.resultant_action, result.congruence, result.block_factorization
                    ),
                ));
            }
            Err(err) => return Err(map_bezout_error(err.clone())),
        }
    }
    println!("{held}/{count} identities hold");
    Ok(())
}
