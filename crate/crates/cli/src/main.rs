mod expr;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dqg_core::coalg::DiffOp;
use dqg_core::nfcore::{clear_detinv, mul_det_power, render, Element, Mutation, Session};
use dqg_core::pairing::Pairer;
use dqg_core::scalars::coeff_pretty;
use dqg_core::suites::{run_suite, SuiteOptions};

#[derive(Parser)]
#[command(name = "dqg", version, about = "Exact verification of a dynamical quantum group")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and report pass/fail per check.
    Check {
        /// Suite name: qdybe, confluence, rll, basis, minors, laplace,
        /// cofactor, antipode, star, dagger, unitarity, pairing,
        /// cobraiding, hopf-pairing, star-pairing, hall-littlewood, all.
        suite: Option<String>,
        /// Suite name (alternative to the positional argument).
        #[arg(long = "suite")]
        suite_flag: Option<String>,
        /// Matrix size (2..=4); for hall-littlewood, the variable count (1..=5).
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Seed for randomized word tests.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Inject a deliberate sign fault into the rewriting system, so the
        /// checks demonstrably fail with counterexamples.
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Print the normal form of an expression.
    Nf {
        expr: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Multiply by det^k before rendering to clear inverse-determinant
        /// factors (default: as written).
        #[arg(long = "clear-det")]
        clear_det: Option<u32>,
    },
    /// Pair two expressions and print the resulting difference operator.
    Pair {
        first: String,
        second: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

fn render_diffop(d: &DiffOp) -> String {
    if d.is_zero() {
        return "0".into();
    }
    d.terms
        .iter()
        .map(|(alpha, f)| {
            let shifts = alpha
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("{}@({})", coeff_pretty(f, &["L"]), shifts)
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Cancel inverse determinants where possible. Multiplies by `det^dmax`,
/// and when the cleared element is a pure power `det^j` rewrites the whole
/// thing as `det^(j-dmax)`. Otherwise re-attaches `dinv^dmax` so the value
/// is unchanged (or, with `dmax` chosen automatically, gives the input back).
fn cancel_det(sess: &Session, x: &Element, dmax: Option<u32>) -> Element {
    let auto = dmax.is_none();
    let dmax = dmax.unwrap_or_else(|| x.max_detinv_power());
    if dmax == 0 {
        return x.clone();
    }
    let cleared = clear_detinv(sess, x, dmax);
    let mut pow = Element::one(sess.n);
    for j in 0..=dmax {
        if cleared == pow {
            // x = det^(j - dmax)
            return if j >= dmax {
                mul_det_power(sess, &Element::one(sess.n), j - dmax)
            } else {
                let mut out = Element::zero(sess.n);
                for (m, c) in &Element::det_inv(sess.n).terms {
                    let mut m2 = m.clone();
                    m2.d = dmax - j;
                    out.insert_add(m2, c.clone());
                }
                out
            };
        }
        if j < dmax {
            pow = mul_det_power(sess, &pow, 1);
        }
    }
    if auto {
        return x.clone();
    }
    let mut out = Element::zero(sess.n);
    for (m, c) in &cleared.terms {
        let mut m2 = m.clone();
        m2.d = dmax;
        out.insert_add(m2, c.clone());
    }
    out
}

fn check_n(n: usize, suite: &str) -> Result<(), String> {
    let range = if suite == "hall-littlewood" { 1..=5 } else { 2..=4 };
    if range.contains(&n) {
        Ok(())
    } else {
        Err(format!("--n {} out of range {:?} for suite '{}'", n, range, suite))
    }
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Check {
            suite,
            suite_flag,
            n,
            format,
            seed,
            mutate,
        } => {
            let suite = suite_flag.or(suite).unwrap_or_else(|| "all".into());
            let opts = SuiteOptions {
                seed,
                mutation: mutate.then_some(Mutation::FlipSameRowSign),
            };
            let rep = run_suite(&suite, n, &opts)?;
            match format {
                Format::Text => print!("{}", rep.render_text()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&rep).map_err(|e| e.to_string())?
                ),
            }
            Ok(rep.all_pass())
        }
        Cmd::Nf { expr, n, clear_det } => {
            check_n(n, "")?;
            let sess = Session::new(n);
            let x = expr::parse_expr(&expr, &sess).map_err(|e| e.to_string())?;
            if clear_det.is_some_and(|k| x.max_detinv_power() > k) {
                return Err(format!(
                    "--clear-det {} is below the inverse-determinant power {} in the result",
                    clear_det.unwrap(),
                    x.max_detinv_power()
                ));
            }
            let x = cancel_det(&sess, &x, clear_det);
            println!("{}", render(&x));
            Ok(true)
        }
        Cmd::Pair { first, second, n } => {
            check_n(n, "")?;
            let sess = Session::new(n);
            let x = expr::parse_expr(&first, &sess).map_err(|e| e.to_string())?;
            let a = expr::parse_expr(&second, &sess).map_err(|e| e.to_string())?;
            let d = Pairer::new(&sess).pair(&x, &a);
            println!("{}", render_diffop(&d));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
