//! Command-line front end: parses variety/algebra/expression inputs,
//! dispatches operations, runs named property suites, and prints
//! machine-readable JSON reports.
//!
//! Exit codes: 0 on success, 1 when a verified property is violated,
//! 2 on input errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use steencalc::arith::{FqField, PrimeModulus};
use steencalc::error::Error;
use steencalc::{arith, expr, input, milnor, mup, suites};

#[derive(Parser)]
#[command(name = "steencalc", version, about = "Exact mod-p characteristic-class calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Steenrod operations on supported varieties, and the property suites
    Steenrod {
        #[command(subcommand)]
        cmd: SteenrodCmd,
    },
    /// Graded mu_p-algebra analysis over finite fields
    Torsor {
        #[command(subcommand)]
        cmd: TorsorCmd,
    },
    /// Kummer polynomial factorization over F_q
    Kummer {
        #[command(subcommand)]
        cmd: KummerCmd,
    },
    /// Milnor K-theory residue checks over F_q(t)
    Kcomplex {
        #[command(subcommand)]
        cmd: KcomplexCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    /// the total cohomological operation
    Total,
    /// one graded piece of the cohomological operation (needs --k)
    CohK,
    /// the total homological operation
    HomTotal,
}

#[derive(Subcommand)]
enum SteenrodCmd {
    /// Apply an operation to a class in a variety
    Eval {
        /// preset name (P3, P1xP2) or a variety JSON file
        #[arg(long)]
        variety: String,
        /// class expression, e.g. "h + h^2"
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value = "total")]
        op: OpKind,
        /// graded index for --op coh-k
        #[arg(long)]
        k: Option<i64>,
        /// coefficient prime for preset varieties
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Run a named property suite and print its report
    Verify {
        #[arg(long)]
        suite: String,
        /// RNG seed (the STEENCALC_SEED environment variable overrides it)
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum TorsorCmd {
    /// Evaluate the equivalent torsor conditions of an algebra file
    Check {
        #[arg(long)]
        algebra: String,
    },
    /// Verify the deformation-grading identity up to a power bound
    Deform {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
}

#[derive(Subcommand)]
enum KummerCmd {
    /// Factor t^p - a over F_q
    Factor {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        /// an element of F_q: an integer, or an expression in the field
        /// generator x for prime-power q
        #[arg(long)]
        a: String,
    },
}

#[derive(Subcommand)]
enum KcomplexCmd {
    /// Verify the residue-level anticommutation for one pair (a, f)
    Check {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        /// rational function in t, e.g. "(t^2-1)/(t-3)"
        #[arg(long)]
        a: String,
        #[arg(long)]
        f: String,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(violated) => std::process::exit(if violated { 1 } else { 0 }),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

/// Returns whether a verified property was violated (exit code 1).
fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Steenrod { cmd } => match cmd {
            SteenrodCmd::Eval { variety, class, op, k, prime } => {
                let x = input::load_variety(&variety, prime)?;
                let class = expr::parse_cycle(x.ring(), &class)?;
                let result = match op {
                    OpKind::Total => x.coh_total(&class)?,
                    OpKind::HomTotal => x.hom_total(&class)?,
                    OpKind::CohK => {
                        let k = k.ok_or_else(|| {
                            Error::Input("--op coh-k needs --k".into())
                        })?;
                        x.coh_k(&class, k)?
                    }
                };
                println!("{}", json!({ "result": input::class_to_json(&result) }));
                Ok(false)
            }
            SteenrodCmd::Verify { suite, seed } => {
                let seed = match std::env::var("STEENCALC_SEED") {
                    Ok(text) => text.parse().map_err(|_| {
                        Error::Input(format!("STEENCALC_SEED=`{text}` is not an integer"))
                    })?,
                    Err(_) => seed,
                };
                let report = suites::run_suite(&suite, seed)?;
                println!(
                    "{}",
                    serde_json::to_string(&report)
                        .map_err(|e| Error::Input(format!("report serialization: {e}")))?
                );
                Ok(!report.passed())
            }
        },
        Command::Torsor { cmd } => match cmd {
            TorsorCmd::Check { algebra } => {
                let alg = input::load_algebra(&algebra)?;
                let report = mup::torsor_check(&alg);
                println!(
                    "{}",
                    json!({ "result": {
                        "conditions": {
                            "fixed_point_empty": report.fixed_point_empty,
                            "ideal_is_unit": report.ideal_is_unit,
                            "all_powers_span": report.all_powers_span,
                            "first_power_spans": report.first_power_spans,
                            "complementary_products_span": report.complementary_products_span,
                            "component_products_bijective": report.component_products_bijective,
                            "coaction_matrix_bijective": report.coaction_matrix_bijective,
                        },
                        "torsor": report.is_torsor(),
                        "mixed": report.is_mixed(),
                    }})
                );
                Ok(report.is_mixed())
            }
            TorsorCmd::Deform { algebra, kmax } => {
                let alg = input::load_algebra(&algebra)?;
                let report = mup::deformation_report(&alg, kmax);
                println!(
                    "{}",
                    json!({ "result": {
                        "holds": report.holds(),
                        "kmax": report.kmax,
                        "slice_identity": report.slice_identity,
                        "negative_degree_vanishes": report.negative_degree_vanishes,
                        "quotient_dim": report.quotient_dim,
                    }})
                );
                Ok(!report.holds())
            }
        },
        Command::Kummer { cmd } => match cmd {
            KummerCmd::Factor { q, p, a } => {
                let field = FqField::new(q)?;
                let p = PrimeModulus::new(p)?;
                let a = expr::parse_scalar(&field, &a)?;
                let factors = arith::factor_kummer(&field, &a, p)?;
                let rendered: Vec<serde_json::Value> = factors
                    .iter()
                    .map(|f| {
                        json!({
                            "degree": f.degree,
                            "multiplicity": f.multiplicity,
                            "polynomial": f.poly.display(&field, "t"),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({ "result": { "q": q, "p": p.get(), "factors": rendered } })
                );
                Ok(false)
            }
        },
        Command::Kcomplex { cmd } => match cmd {
            KcomplexCmd::Check { q, p, a, f } => {
                let field = FqField::new(q)?;
                let p = PrimeModulus::new(p)?;
                let a = expr::parse_rational(&field, &a)?;
                let f = expr::parse_rational(&field, &f)?;
                let checks = milnor::anticommute_places(&field, &a, &f, p)?;
                let holds = checks.iter().all(|c| c.holds);
                let places: Vec<serde_json::Value> = checks
                    .iter()
                    .map(|c| {
                        json!({
                            "place": c.place.display(&field),
                            "applicable": c.applicable,
                            "holds": c.holds,
                        })
                    })
                    .collect();
                println!("{}", json!({ "result": { "holds": holds, "places": places } }));
                Ok(!holds)
            }
        },
    }
}
