use std::process::ExitCode;
use std::sync::Arc;

use binomial_schur::capelli::{self, Algebra, HighestWeight, Kind};
use binomial_schur::delta::{BinomialSequence, DeltaOperator, DEFAULT_SERIES_ORDER};
use binomial_schur::exact::{default_names, fmt_rational, parse_rational, Rational};
use binomial_schur::partition::Partition;
use binomial_schur::schur::{dhat, Family, SchurContext};
use binomial_schur::verify::{self, Profile};
use binomial_schur::{Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bschur", version, about = "Schur-type functions of polynomial sequences of binomial type")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct OpArgs {
    /// Delta operator: d, fwd, bwd, ctr or series:a2,a3,...
    #[arg(long, default_value = "d")]
    op: String,
    /// Truncation order for series operators.
    #[arg(long, default_value_t = DEFAULT_SERIES_ORDER, value_parser = clap::value_parser!(usize))]
    order: usize,
    /// Coefficients kept for negative-index series.
    #[arg(long, default_value_t = 24, value_parser = window_parser)]
    window: usize,
}

fn window_parser(s: &str) -> std::result::Result<usize, String> {
    let w: usize = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if w < 4 {
        return Err("window must be at least 4".into());
    }
    Ok(w)
}

impl OpArgs {
    fn sequence(&self) -> Result<Arc<BinomialSequence>> {
        let op = DeltaOperator::parse(&self.op, self.order)?;
        Ok(Arc::new(BinomialSequence::with_window(op, self.window)))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print p_n, or p*_n with --star.
    Seq {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Print every index from --n to --to.
        #[arg(long, allow_negative_numbers = true)]
        to: Option<i64>,
        #[arg(long)]
        star: bool,
    },
    /// Print s_λ or s*_λ, symbolically or at a point.
    Schur {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long)]
        n_vars: usize,
        /// Comma-separated parts; negative parts need --at.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        star: bool,
        /// Comma-separated rational evaluation point.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Print e_k, e*_k, h_k or h*_k.
    Family {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long)]
        n_vars: usize,
        /// One of e, e*, h, h*.
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Print the shift-expansion coefficient d_λμ(u), or d̂ with --hat.
    Coeff {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, default_value = "0")]
        lambda: String,
        #[arg(long, default_value = "0")]
        mu: String,
        #[arg(long)]
        hat: bool,
        /// Use the conjugate sequence.
        #[arg(long)]
        star: bool,
        /// Number of variables; required without --hat.
        #[arg(long)]
        n_vars: Option<usize>,
    },
    /// Eigenvalue of a Capelli-type central element.
    Eigen {
        /// gl, o or sp.
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n_vars: usize,
        #[arg(long, default_value = "0")]
        lambda: String,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        u: String,
        /// For gl: c (determinant type) or d (permanent type).
        #[arg(long, default_value = "c")]
        kind: String,
    },
    /// Run the identity checks.
    Verify {
        #[arg(long, default_value = "quick")]
        profile: String,
        /// Only run checks whose id contains this text.
        #[arg(long)]
        filter: Option<String>,
    },
}

enum Failure {
    Usage(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_point(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

fn emit(format: Format, value: &str) {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => println!("{}", json!({ "value": value })),
    }
}

fn run(cli: &Cli) -> std::result::Result<(), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Seq { op, n, to, star } => {
            let seq = op.sequence()?;
            let last = to.unwrap_or(*n);
            for m in *n..=last {
                let text = seq.term(m, *star)?.to_text("x");
                match (format, to.is_some()) {
                    (Format::Text, true) => println!("{}_{m}(x) = {text}", if *star { "p*" } else { "p" }),
                    (Format::Text, false) => println!("{text}"),
                    (Format::Json, _) => println!("{}", json!({ "n": m, "star": star, "value": text })),
                }
            }
        }
        Command::Schur { op, n_vars, lambda, star, at } => {
            let ctx = SchurContext::new(op.sequence()?, *n_vars)?;
            let lam = Partition::parse_signature(lambda)?;
            let rows = ctx.rows(&lam)?;
            match at {
                Some(p) => emit(format, &fmt_rational(&ctx.schur_rows_at(&rows, *star, &parse_point(p)?)?)),
                None => emit(format, &ctx.schur_rows(&rows, *star)?.to_text(&default_names(*n_vars))),
            }
        }
        Command::Family { op, n_vars, family, k, at } => {
            let ctx = SchurContext::new(op.sequence()?, *n_vars)?;
            let fam = Family::parse(family)?;
            let point = at.as_deref().map(parse_point).transpose()?;
            emit(format, &ctx.family(fam, *k, point.as_deref())?.to_text(&default_names(*n_vars)));
        }
        Command::Coeff { op, lambda, mu, hat, star, n_vars } => {
            let seq = op.sequence()?;
            let (lam, mu) = (Partition::parse(lambda)?, Partition::parse(mu)?);
            let poly = match (hat, n_vars) {
                (true, _) => dhat(&seq, &lam, &mu, *star)?,
                (false, Some(n)) => SchurContext::new(seq, *n)?.d_coeff(&lam, &mu, false, *star)?,
                (false, None) => return Err(Error::InvalidArgument("--n-vars is required without --hat".into()).into()),
            };
            emit(format, &poly.to_text("u"));
        }
        Command::Eigen { algebra, n_vars, lambda, k, u, kind } => {
            let hw = HighestWeight::new(Algebra::parse(algebra)?, *n_vars, Partition::parse(lambda)?)?;
            let kind = match kind.as_str() {
                "c" | "C" => Kind::C,
                "d" | "D" => Kind::D,
                other => return Err(Error::Parse(format!("unknown kind {other:?}; expected c or d")).into()),
            };
            emit(format, &fmt_rational(&capelli::eigen(&hw, *k, &parse_rational(u)?, kind)?));
        }
        Command::Verify { profile, filter } => {
            let summary = verify::run_all(Profile::parse(profile)?, filter.as_deref());
            for r in &summary.reports {
                match format {
                    Format::Text => println!("{r}"),
                    Format::Json => println!("{}", r.to_json()),
                }
            }
            match format {
                Format::Text => println!("{}", summary.footer()),
                Format::Json => println!(
                    "{}",
                    json!({ "items": summary.reports.len(), "unexpected": summary.unexpected().count() })
                ),
            }
            if !summary.all_as_expected() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
