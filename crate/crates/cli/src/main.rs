//! Command-line front end: parameter reports, generator-matrix and
//! radical-basis emission, verification suites, and the canonical
//! length-16 reproduction.
//!
//! Exit codes: 0 on success, 1 on a verification failure, 2 on a
//! usage or parameter error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grm_codes::checks::{self, CheckConfig, CheckStatus};
use grm_codes::error::Error;
use grm_codes::ff::is_prime;
use grm_codes::galois_ring::GaloisRing;
use grm_codes::grm::{GrmContext, OrderingKind, Slot};
use grm_codes::group_algebra::{qary_weight, Algebra};
use grm_codes::report;

/// Largest ambient dimension q^m accepted by the front end.
const AMBIENT_GUARD: u64 = 4096;

#[derive(Parser)]
#[command(
    name = "grm",
    version,
    about = "Galois rings, modular group algebras and Generalized Reed-Muller codes, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderingArg {
    /// g_i is the group element with index i + 1
    Integer,
    /// g_i = gamma^i (r = 1 only)
    Gamma,
}

impl From<OrderingArg> for OrderingKind {
    fn from(o: OrderingArg) -> OrderingKind {
        match o {
            OrderingArg::Integer => OrderingKind::Integer,
            OrderingArg::Gamma => OrderingKind::GammaPowers,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct ParamArgs {
    /// Prime characteristic base
    #[arg(long)]
    p: u64,
    /// Characteristic exponent: the ring has characteristic p^r
    #[arg(long)]
    r: u32,
    /// Rank of the ring over Z_{p^r}
    #[arg(long)]
    m: usize,
    /// Coordinate order on the nonzero group elements
    #[arg(long, value_enum, default_value_t = OrderingArg::Integer)]
    ordering: OrderingArg,
    /// Override the mod-p seed polynomial of the ring modulus
    /// (comma-separated coefficients, low degree first)
    #[arg(long, value_delimiter = ',')]
    fbar: Option<Vec<u64>>,
    /// Override the primitive element by its integer encoding
    #[arg(long)]
    gamma: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the numeric profile of one parameter set
    Params {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Emit the generator matrix of the order-nu code
    Genmatrix {
        #[command(flatten)]
        params: ParamArgs,
        /// Code order
        #[arg(long)]
        nu: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Output path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the radical-power basis matrix at level t
    Radical {
        #[command(flatten)]
        params: ParamArgs,
        /// Radical level
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suites for one parameter set
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Seed for the randomized identities
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Cap on q^m for the product-based radical reference
        #[arg(long, default_value_t = 81)]
        max_dim: usize,
        /// Corrupt the ring modulus before checking (negative control)
        #[arg(long, hide = true)]
        corrupt_h: bool,
    },
    /// Reproduce and check the length-16 profile over F_4
    Example16,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", friendly(&e));
            ExitCode::from(2)
        }
    }
}

/// Friendlier phrasing for the most common parameter mistakes.
fn friendly(e: &Error) -> String {
    match e {
        Error::NotPrime(v) => format!("p must be prime (got {v})"),
        other => other.to_string(),
    }
}

fn build_ring(params: &ParamArgs, corrupt: bool) -> Result<Arc<GaloisRing>, Error> {
    if !is_prime(params.p) {
        return Err(Error::NotPrime(params.p));
    }
    if params.r < 1 || params.m < 1 {
        return Err(Error::InvalidParameter("require r >= 1 and m >= 1".into()));
    }
    let q = params
        .p
        .checked_pow(params.r)
        .ok_or_else(|| Error::InvalidParameter("p^r overflows".into()))?;
    if q.checked_pow(params.m as u32)
        .is_none_or(|s| s > AMBIENT_GUARD)
    {
        return Err(Error::InvalidParameter(format!(
            "q^m exceeds the guard of {AMBIENT_GUARD}"
        )));
    }
    let ring = GaloisRing::new(params.p, params.r, params.m, params.fbar.clone())?;
    if corrupt {
        let mut h = ring.h().to_vec();
        let bump = params.p.pow(params.r - 1);
        h[0] = (h[0] + bump) % q;
        return GaloisRing::from_h_unchecked(params.p, params.r, params.m, h);
    }
    Ok(ring)
}

fn build_context(params: &ParamArgs, corrupt: bool) -> Result<GrmContext, Error> {
    let ring = build_ring(params, corrupt)?;
    let algebra = Algebra::new(&ring, None)?;
    GrmContext::new(&algebra, params.ordering.into(), params.gamma, None)
}

fn emit(text: String, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidParameter(format!("cannot write output file: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Params { params } => {
            let ctx = build_context(&params, false)?;
            print!("{}", render_params(&report::params_report(&ctx)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Genmatrix {
            params,
            nu,
            format,
            out,
        } => {
            let ctx = build_context(&params, false)?;
            let file = report::genmatrix(&ctx, nu)?;
            let text = match format {
                FormatArg::Json => report::to_json(&file),
                FormatArg::Csv => report::rows_to_csv(&file.rows),
            };
            emit(text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Radical {
            params,
            t,
            format,
            out,
        } => {
            let ctx = build_context(&params, false)?;
            let file = report::radical_matrix(&ctx, t)?;
            let text = match format {
                FormatArg::Json => report::to_json(&file),
                FormatArg::Csv => report::rows_to_csv(&file.rows),
            };
            emit(text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            params,
            seed,
            max_dim,
            corrupt_h,
        } => {
            let ring = build_ring(&params, corrupt_h)?;
            let algebra = Algebra::new(&ring, None)?;
            let cfg = CheckConfig {
                seed,
                oracle_cap: max_dim,
            };
            let outcomes = checks::run_all(&algebra, params.ordering.into(), params.gamma, &cfg)?;
            let mut failed = 0usize;
            for o in &outcomes {
                match o.status {
                    CheckStatus::Pass => println!("ok   {} - {}", o.name, o.detail),
                    CheckStatus::Skipped => println!("skip {} - {}", o.name, o.detail),
                    CheckStatus::Fail => {
                        failed += 1;
                        eprintln!("FAIL {} - {}", o.name, o.detail);
                    }
                }
            }
            if failed > 0 {
                eprintln!("{failed} check(s) failed");
                Ok(ExitCode::from(1))
            } else {
                println!("all checks passed");
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Example16 => example16(),
    }
}

fn render_params(rep: &report::ParamsReport) -> String {
    let join_usize = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let join_u64 = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    s.push_str(&format!("p = {}  r = {}  m = {}\n", rep.p, rep.r, rep.m));
    s.push_str(&format!(
        "q = {}  |G| = {}  n = {}  m(q-1) = {}\n",
        rep.q,
        rep.n + 1,
        rep.n,
        rep.max_level
    ));
    s.push_str(&format!("h = {:?}\n", rep.modulus_h));
    s.push_str(&format!("field modulus = {:?}\n", rep.field_modulus));
    s.push_str(&format!("ext modulus = {:?}\n", rep.modulus_ext));
    s.push_str(&format!("gamma = {}\n", rep.gamma));
    s.push_str(&format!("ordering = {}\n", rep.ordering));
    s.push_str(&format!(
        "t:        {}\n",
        join_usize(&(0..=rep.max_level as usize).collect::<Vec<_>>())
    ));
    s.push_str(&format!("N(t):     {}\n", join_u64(&rep.weight_counts)));
    s.push_str(&format!("dim M^t:  {}\n", join_usize(&rep.radical_dims)));
    s.push_str(&format!(
        "nu:       {}\n",
        join_usize(&(0..rep.max_level as usize).collect::<Vec<_>>())
    ));
    s.push_str(&format!("deg f_nu: {}\n", join_usize(&rep.degrees)));
    s.push_str(&format!("dim C_nu: {}\n", join_usize(&rep.code_dims)));
    s
}

fn example16() -> Result<ExitCode, Error> {
    let ring = GaloisRing::new(2, 2, 2, None)?;
    let algebra = Algebra::new(&ring, None)?;
    let ctx = GrmContext::new(&algebra, OrderingKind::Integer, None, None)?;
    let mut all_ok = true;
    let mut check = |label: &str, got: String, expect: String| {
        let ok = got == expect;
        all_ok &= ok;
        println!(
            "{} {label}: {got} (expected {expect})",
            if ok { "ok  " } else { "FAIL" }
        );
    };

    let dims: Vec<usize> = (0..6)
        .map(|nu| ctx.code(nu).map(|c| c.dim()))
        .collect::<Result<_, _>>()?;
    check(
        "dim C_nu",
        format!("{dims:?}"),
        "[1, 3, 6, 10, 13, 15]".into(),
    );

    let degs: Vec<usize> = (0..6)
        .map(|nu| Ok::<usize, Error>(ctx.generator_poly(nu)?.degree().unwrap_or(0)))
        .collect::<Result<_, _>>()?;
    check(
        "deg f_nu",
        format!("{degs:?}"),
        "[14, 12, 9, 5, 2, 0]".into(),
    );

    let counts: Vec<u64> = (2..=5).map(|t| ctx.weight_count(t)).collect();
    check("N(2..=5)", format!("{counts:?}"), "[3, 4, 3, 2]".into());
    for (t, expect) in [
        (5u32, "[11, 14]"),
        (4, "[7, 10, 13]"),
        (3, "[3, 6, 9, 12]"),
        (2, "[2, 5, 8]"),
    ] {
        let members: Vec<usize> = (0..16)
            .filter(|&k| qary_weight(k, 4, 2).unwrap() == t)
            .collect();
        check(
            &format!("weight-{t} indices"),
            format!("{members:?}"),
            expect.into(),
        );
    }

    let mut positions = vec![lt_position(&ctx, 0, 0)?];
    for i in 1..=5u32 {
        for j in 0..ctx.weight_count(6 - i) as usize {
            positions.push(lt_position(&ctx, i, j)?);
        }
    }
    check(
        "leading-term positions of K_5",
        format!("{positions:?}"),
        "[14, 12, 13, 9, 10, 11, 5, 6, 7, 8, 2, 3, 4, 0, 1]".into(),
    );

    let f0 = ctx.generator_poly(0)?;
    check(
        "f_0",
        format!("{:?}", f0.coeffs()),
        format!("{:?}", vec![1u64; 15]),
    );
    let f5 = ctx.generator_poly(5)?;
    check("deg f_5", format!("{:?}", f5.degree()), "Some(0)".into());

    if all_ok {
        println!("all quantities match");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("some quantities do not match");
        Ok(ExitCode::from(1))
    }
}

fn lt_position(ctx: &GrmContext, nu: u32, j: usize) -> Result<usize, Error> {
    let elem = ctx.extended_shift(nu, j)?;
    match ctx.leading_term(&elem)?.slot {
        Slot::Position(pos) => Ok(pos),
        Slot::Identity => Err(Error::Internal(
            "extended generator has its leading term at the identity slot".into(),
        )),
    }
}
