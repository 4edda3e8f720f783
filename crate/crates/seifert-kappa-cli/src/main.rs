//! Command-line front end: single computations, verification sweeps and
//! machine-readable output.

mod commands;
mod output;
mod parse;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

/// Exact invariants of Seifert homology spheres with cyclic actions.
#[derive(Parser, Debug)]
#[command(name = "seifert-kappa", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for sweeps; SEIFERT_KAPPA_THREADS overrides it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dedekind, Dedekind-Rademacher, Dedekind-Dieter or cosecant sums.
    Sum(SumArgs),
    /// The twisted signature eta invariant of a Seifert sphere.
    EtaSign(EtaSignArgs),
    /// α-invariant of a Seifert sphere quotient or a lens space.
    Alpha(AlphaArgs),
    /// Equivariant correction terms n_L.
    Correction(CorrectionArgs),
    /// Rotation numbers of line bundles or Brieskorn components.
    Rotation(RotationArgs),
    /// Equivariant kappa sets of Brieskorn spheres.
    Kappa(KappaArgs),
    /// The defect vector of fixed-point data.
    Sigma(SigmaArgs),
    /// Non-extension verdicts for catalog manifolds and cobordisms.
    CheckExtension(CheckExtensionArgs),
    /// Free-stabilization bounds for the N and P families.
    StabBound(StabBoundArgs),
    /// Necessary conditions for an equivariant h-cobordism to a lens space.
    HCob(HCobArgs),
    /// The E8 fixed-point construction.
    E8Data(E8Args),
    /// Named verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct SumArgs {
    /// dedekind, rademacher, dieter or cosecant.
    #[arg(long)]
    family: String,
    /// brute or reciprocity.
    #[arg(long, default_value = "brute")]
    method: String,
    /// Numerator argument b.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<i64>,
    /// Modulus a.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<i64>,
    /// Shift x (rational).
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Shift y (rational).
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Cosecant multiplier q.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
    /// Cosecant multiplier r.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    /// Cosecant modulus p.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
    /// Cosecant sign character ±1.
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<i64>,
}

#[derive(Args, Debug)]
struct EtaSignArgs {
    /// Seifert invariants, e.g. 2,3,59.
    #[arg(long)]
    seifert: String,
    /// Group order r.
    #[arg(long)]
    r: i64,
    /// Character index q.
    #[arg(long)]
    q: i64,
}

#[derive(Args, Debug)]
struct AlphaArgs {
    /// Seifert invariants of Y.
    #[arg(long)]
    seifert: Option<String>,
    /// Group order for the Seifert quotient.
    #[arg(long)]
    r: Option<i64>,
    /// Lens space weights p,a,b.
    #[arg(long, allow_hyphen_values = true)]
    lens: Option<String>,
}

#[derive(Args, Debug)]
struct CorrectionArgs {
    /// Seifert invariants.
    #[arg(long)]
    seifert: String,
    /// Group order r.
    #[arg(long)]
    r: i64,
    /// A single character index L; the whole vector if omitted.
    #[arg(long = "L", allow_hyphen_values = true)]
    l: Option<String>,
}

#[derive(Args, Debug)]
struct RotationArgs {
    /// Seifert invariants of a homology sphere.
    #[arg(long)]
    seifert: Option<String>,
    /// Line bundle, e.g. (0;0,0,1).
    #[arg(long)]
    bundle: Option<String>,
    /// Brieskorn family: 12n+5, 12n-5, 12n-1 or 12n+1.
    #[arg(long, allow_hyphen_values = true)]
    family: Option<String>,
    /// Family parameters, comma separated.
    #[arg(long)]
    n: Option<String>,
    /// The symbolic rotation-number table, checked for n up to 5.
    #[arg(long)]
    table: bool,
}

#[derive(Args, Debug)]
struct KappaArgs {
    /// Brieskorn family.
    #[arg(long, allow_hyphen_values = true)]
    family: String,
    /// Family parameters.
    #[arg(long)]
    n: String,
    /// Odd primes.
    #[arg(long)]
    p: String,
    /// plus (Y) or minus (−Y).
    #[arg(long, default_value = "plus")]
    side: String,
}

#[derive(Args, Debug)]
struct SigmaArgs {
    /// The prime p.
    #[arg(long)]
    p: i64,
    /// Isolated fixed points a,b;a,b;...
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    points: String,
    /// Fixed surfaces c,s;... with rotation c and self-intersection s.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    surfaces: String,
    /// σ(X).
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    signature: i64,
}

#[derive(Args, Debug)]
struct CheckExtensionArgs {
    /// N, N#, P, P#, milnor, cobordism or custom.
    #[arg(long)]
    manifold: String,
    /// Primes.
    #[arg(long)]
    p: String,
    /// Family parameters for N, N#, P, P#.
    #[arg(long)]
    n: Option<String>,
    /// m for the Milnor fiber M(2,3,m).
    #[arg(long)]
    m: Option<i64>,
    /// Inner Milnor fiber m for a cobordism.
    #[arg(long)]
    inner: Option<i64>,
    /// Outer Milnor fiber m for a cobordism.
    #[arg(long)]
    outer: Option<i64>,
    /// E8 summands of a custom manifold.
    #[arg(long, default_value_t = 0)]
    e8: i64,
    /// Hyperbolic summands of a custom manifold.
    #[arg(long, default_value_t = 0)]
    h: i64,
    /// Boundary of a custom manifold: family:side:n, e.g. 12n-1:minus:2.
    #[arg(long, allow_hyphen_values = true)]
    boundary: Option<String>,
}

#[derive(Args, Debug)]
struct StabBoundArgs {
    /// N or P.
    #[arg(long)]
    family: String,
    /// Family parameters.
    #[arg(long)]
    n: String,
    /// Primes.
    #[arg(long)]
    p: String,
}

#[derive(Args, Debug)]
struct HCobArgs {
    /// Seifert invariants of Y.
    #[arg(long)]
    seifert: String,
    /// The prime p.
    #[arg(long)]
    p: i64,
    /// Lens weights a,b of L(p; a, b).
    #[arg(long, allow_hyphen_values = true)]
    lens: String,
}

#[derive(Args, Debug)]
struct E8Args {
    /// Primes.
    #[arg(long)]
    p: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// correction-terms, cosecant-tables, alpha-equality, rotation-table,
    /// comparing, e8 or reciprocity.
    suite: String,
    /// Primes; defaults depend on the suite.
    #[arg(long)]
    p: Option<String>,
    /// Family parameters; defaults depend on the suite.
    #[arg(long)]
    n: Option<String>,
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments: exit 2.
    Usage(String),
    /// A library error or a failed verification: exit 1.
    Domain(String),
}

impl From<seifert_kappa::Error> for Failure {
    fn from(e: seifert_kappa::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    match std::env::var("SEIFERT_KAPPA_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("SEIFERT_KAPPA_THREADS must be a positive integer, got {v:?}"))),
        Err(_) => Ok(flag),
    }
}

fn run(cli: Cli) -> Result<(output::Report, bool), Failure> {
    if let Some(k) = thread_count(cli.threads)? {
        if k == 0 {
            return Err(Failure::Usage("thread count must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    use commands::*;
    let report = match cli.command {
        Command::Sum(a) => sum(a)?,
        Command::EtaSign(a) => eta_sign(a)?,
        Command::Alpha(a) => alpha(a)?,
        Command::Correction(a) => correction(a)?,
        Command::Rotation(a) => rotation(a)?,
        Command::Kappa(a) => kappa(a)?,
        Command::Sigma(a) => sigma(a)?,
        Command::CheckExtension(a) => check_extension(a)?,
        Command::StabBound(a) => stab_bound(a)?,
        Command::HCob(a) => h_cob(a)?,
        Command::E8Data(a) => e8_data(a)?,
        Command::Verify(a) => return verify::run(&a.suite, a.p.as_deref(), a.n.as_deref()),
    };
    Ok((report, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok((report, ok)) => {
            print!("{}", report.render(format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
