//! Command-line front end: `coeff`, `enumerate`, `verify`, and `orders`.
//!
//! Partitions on the command line use the text format of
//! [`crate::shapes`] (`"3,2,1"`, empty is `""` or `"0"`). Orders are given
//! as `J`, `F`, or `@path` to an order file with one `row,col` cell per
//! line; files are validated for domain and admissibility before use.
//! Exit status: 0 on success, 1 when a verification check or agreement
//! fails, 2 on usage or runtime errors.

mod sweeps;

pub use sweeps::{
    compatible_triples, sweep_bijection, sweep_order_independence, sweep_tensor, Check, Summary,
    VerificationReport, ALL_ORDER_PAIRS_MAX, MAX_ENTRY_CEILING, MAX_MU_CEILING, MAX_NU_CEILING,
    MAX_SIZE_CEILING,
};

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write as _;
use std::process::ExitCode;

use anyhow::{Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::crystal::{lr_coefficient_crystal, lr_crystal};
use crate::oracle::lr_coefficient_ballot;
use crate::orders::{
    enumerate_admissible_orders_capped, OrderKind, TotalCellOrder, DEFAULT_ORDER_CAP,
};
use crate::pictures::{enumerate_pictures, pictures_via_crystal};
use crate::shapes::{Cell, Partition, SkewShape};

const ENV_MAX_NU: &str = "LR_CRYSTALS_MAX_NU";
const ENV_MAX_MU: &str = "LR_CRYSTALS_MAX_MU";

#[derive(Parser)]
#[command(
    name = "lr-crystals",
    version,
    about = "Littlewood-Richardson coefficients by crystals, pictures, and the ballot rule"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one Littlewood-Richardson coefficient.
    Coeff(CoeffArgs),
    /// Stream crystal elements or pictures for a triple as JSON lines.
    #[command(subcommand)]
    Enumerate(EnumerateTarget),
    /// Run a verification sweep and report one pass/fail line per check.
    Verify(VerifyArgs),
    /// List all admissible orders on the cells of a (skew) shape.
    Orders(OrdersArgs),
}

#[derive(Args)]
struct CoeffArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
    /// Counting method; `all` cross-checks every method and fails (exit 1)
    /// on disagreement.
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Crystal,
    Pictures,
    Ballot,
    All,
}

#[derive(Subcommand)]
enum EnumerateTarget {
    /// Crystal elements of a triple, one tableau (array of rows) per line.
    Crystal {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Admissible order on the cells of mu: J, F, or @path.
        #[arg(long, default_value = "J")]
        order: String,
    },
    /// Admissible pictures of a triple, one map per line.
    Pictures {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Admissible order on the cells of mu (the picture domain).
        #[arg(long, default_value = "J")]
        order: String,
        /// Admissible order on the cells of nu\lambda (the picture codomain).
        #[arg(long, default_value = "J")]
        target_order: String,
        /// Compute the set through the crystal instead of by direct search.
        #[arg(long)]
        via_crystal: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Which sweep to run.
    #[arg(value_enum)]
    suite: Suite,
    /// Largest |nu| to sweep (bijection, order-independence).
    #[arg(long)]
    max_nu: Option<usize>,
    /// Largest |mu| to sweep (order-independence).
    #[arg(long)]
    max_mu: Option<usize>,
    /// Largest entry bound (theorem36).
    #[arg(long)]
    max_entry: Option<u32>,
    /// Largest |lambda| and |mu| (theorem36).
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Count identities, conversion round trips, and trace agreement.
    Bijection,
    /// Crystal and picture sets across all admissible orders.
    OrderIndependence,
    /// Tensor-product decomposition dimension identity.
    #[value(name = "theorem36")]
    Tensor,
    /// Everything above.
    All,
}

#[derive(Args)]
struct OrdersArgs {
    /// A partition ("2,2") or skew shape ("3,2,1/1") whose cells to order.
    #[arg(long)]
    shape: SkewShape,
    /// Abort if more than this many orders would be listed.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

/// Parses argv and runs the tool; see the module docs for exit codes.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::try_from(e.exit_code()).unwrap_or(2);
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Coeff(args) => cmd_coeff(args),
        Command::Enumerate(target) => cmd_enumerate(target).map(|()| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Orders(args) => cmd_orders(args).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn budget(flag: Option<usize>, env: &str, default: usize) -> usize {
    flag.or_else(|| std::env::var(env).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(default)
}

fn load_order(spec: &str, domain: &[Cell], what: &str) -> Result<TotalCellOrder> {
    let order = if let Some(path) = spec.strip_prefix('@') {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading order file {path}"))?;
        let order = TotalCellOrder::parse(&text)?;
        order.require_domain(domain, what)?;
        order
    } else {
        let kind: OrderKind = spec.parse()?;
        TotalCellOrder::from_comparator(domain, kind)?
    };
    order.require_admissible()?;
    Ok(order)
}

fn cmd_coeff(args: CoeffArgs) -> Result<bool> {
    let CoeffArgs {
        lambda,
        mu,
        nu,
        method,
        json,
    } = args;
    // An incompatible triple has coefficient 0 by every method; only the
    // ballot rule is total, so short-circuit the others.
    let compatible = lambda.size() + mu.size() == nu.size() && nu.contains(&lambda);

    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    if matches!(method, Method::Crystal | Method::All) {
        let n = if compatible {
            lr_coefficient_crystal(&lambda, &mu, &nu)?
        } else {
            0
        };
        counts.insert("crystal", n);
    }
    if matches!(method, Method::Pictures | Method::All) {
        let n = if compatible {
            let skew = SkewShape::new(nu.clone(), lambda.clone())?;
            let a = TotalCellOrder::from_comparator(&skew.cells(), OrderKind::J)?;
            let a_prime = TotalCellOrder::from_comparator(&mu.cells(), OrderKind::J)?;
            enumerate_pictures(&mu, &skew, &a, &a_prime)?.len()
        } else {
            0
        };
        counts.insert("pictures", n);
    }
    if matches!(method, Method::Ballot | Method::All) {
        counts.insert("ballot", lr_coefficient_ballot(&lambda, &mu, &nu));
    }

    let agree = match method {
        Method::All => {
            let mut values = counts.values();
            let first = *values.next().expect("all method computes three counts");
            Some(values.all(|&v| v == first))
        }
        _ => None,
    };

    if json {
        let mut value = json!({
            "lambda": lambda,
            "mu": mu,
            "nu": nu,
            "coefficients": counts,
        });
        if let Some(agree) = agree {
            value["agree"] = json!(agree);
        }
        println!("{value}");
    } else if method == Method::All {
        for (name, n) in &counts {
            println!("{name} {n}");
        }
        println!("agree {}", agree.expect("computed for all"));
    } else {
        let n = counts
            .values()
            .next()
            .expect("one method computes one count");
        println!("{n}");
    }
    Ok(agree.unwrap_or(true))
}

fn cmd_enumerate(target: EnumerateTarget) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match target {
        EnumerateTarget::Crystal {
            lambda,
            mu,
            nu,
            order,
        } => {
            let order = load_order(&order, &mu.cells(), "mu")?;
            let elements = lr_crystal(&lambda, &mu, &nu, &order)?;
            for t in &elements {
                writeln!(out, "{}", serde_json::to_string(t)?)?;
            }
            writeln!(out, "{}", json!({ "count": elements.len() }))?;
        }
        EnumerateTarget::Pictures {
            lambda,
            mu,
            nu,
            order,
            target_order,
            via_crystal,
        } => {
            let pictures = if via_crystal {
                pictures_via_crystal(&lambda, &mu, &nu)?
            } else {
                let skew = SkewShape::new(nu.clone(), lambda.clone())?;
                let a = load_order(&target_order, &skew.cells(), "nu\\lambda")?;
                let a_prime = load_order(&order, &mu.cells(), "mu")?;
                enumerate_pictures(&mu, &skew, &a, &a_prime)?
            };
            for f in &pictures {
                writeln!(out, "{}", serde_json::to_string(f)?)?;
            }
            writeln!(out, "{}", json!({ "count": pictures.len() }))?;
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<bool> {
    let VerifyArgs {
        suite,
        max_nu,
        max_mu,
        max_entry,
        max_size,
        json,
    } = args;
    let bijection = |max_nu: Option<usize>| sweep_bijection(budget(max_nu, ENV_MAX_NU, 8));
    let independence = |max_mu: Option<usize>, max_nu: Option<usize>| {
        sweep_order_independence(budget(max_mu, ENV_MAX_MU, 5), budget(max_nu, ENV_MAX_NU, 7))
    };
    let tensor = |max_entry: Option<u32>, max_size: Option<usize>| {
        sweep_tensor(max_entry.unwrap_or(3), max_size.unwrap_or(4))
    };

    let report = match suite {
        Suite::Bijection => bijection(max_nu)?,
        Suite::OrderIndependence => independence(max_mu, max_nu)?,
        Suite::Tensor => tensor(max_entry, max_size)?,
        Suite::All => {
            let mut report = bijection(max_nu)?;
            report.merge(independence(max_mu, max_nu)?);
            report.merge(tensor(max_entry, max_size)?);
            report
        }
    };

    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", report.render_table());
    }
    Ok(report.all_passed())
}

fn cmd_orders(args: OrdersArgs) -> Result<()> {
    let OrdersArgs { shape, cap, json } = args;
    let orders = enumerate_admissible_orders_capped(&shape.cells(), cap)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if json {
        for order in &orders {
            writeln!(out, "{}", serde_json::to_string(order.sequence())?)?;
        }
        writeln!(out, "{}", json!({ "count": orders.len() }))?;
    } else {
        for order in &orders {
            let line: Vec<String> = order.sequence().iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
    }
    Ok(())
}
