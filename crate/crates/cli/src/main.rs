mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use freechar::arith::rat_to_string;
use freechar::charvar::{a_series, aind_series, airr_series, default_dmax, m_series, CharVarTable};
use freechar::combinatorics::{
    a_n_via_inversion, connected_tuples, hall_recursion_oracle, limit_transform, subgroup_counts,
};
use freechar::ffield::{burnside_count, classify_orbits};
use freechar::verify::{run_verification, VerifyConfig};
use freechar::{rat, Error, Int};
use serde::Serialize;

use render::{
    coeff_strings, polys_csv, polys_doc, polys_text, verify_doc, OracleDoc, PermstatsDoc,
    SubgroupRow, SubgroupsDoc, TupleEntry,
};

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_GUARD: u8 = 4;

#[derive(Parser)]
#[command(
    name = "freechar",
    version,
    about = "Counting polynomials of character varieties of free groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counting polynomials, E-polynomials and Euler characteristics.
    Polys(PolysArgs),
    /// Run the full property suite.
    Verify(VerifyArgs),
    /// Numbers of finite-index subgroups.
    Subgroups(SubgroupsArgs),
    /// Connected permutation tuples and their length polynomial.
    Permstats(PermstatsArgs),
    /// Brute-force orbit classification over a prime field.
    Oracle(OracleArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PolysArgs {
    /// Rank of the free group.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    dmax: Option<u64>,
    /// Series truncation order; at least dmax.
    #[arg(long)]
    order: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    dmax: Option<u64>,
    #[arg(long, default_value_t = 6)]
    nmax: usize,
    /// Comma-separated primes for the finite-field checks.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    primes: Vec<u32>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SubgroupsArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    nmax: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct PermstatsArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    m: u32,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
    #[arg(long)]
    p: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[command(flatten)]
    out: OutputArgs,
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) => EXIT_USAGE,
            Error::SizeGuard(_) => EXIT_GUARD,
            _ => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn verification(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_VERIFY,
        message: message.into(),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn emit(out: &OutputArgs, body: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, body).map_err(|e| Failure {
            code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn no_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(usage("csv output is only available for polys"));
    }
    Ok(())
}

fn cmd_polys(args: &PolysArgs) -> Result<(), Failure> {
    let dmax = args
        .dmax
        .map_or_else(|| default_dmax(args.m), |d| d as usize);
    let order = args.order.unwrap_or(dmax);
    if order < dmax {
        return Err(usage(format!(
            "--order {order} is smaller than --dmax {dmax}"
        )));
    }
    let mut table = CharVarTable::compute(args.m, order)?;
    table.rows.truncate(dmax);
    table.dmax = dmax;
    let doc = polys_doc(&table)?;
    let body = match args.out.format {
        Format::Json => to_json(&doc),
        Format::Csv => polys_csv(&doc).map_err(|e| verification(e.to_string()))?,
        Format::Text => polys_text(&doc),
    };
    emit(&args.out, &body)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    no_csv(args.out.format)?;
    let dmax = args
        .dmax
        .map_or_else(|| default_dmax(args.m).min(4), |d| d as usize);
    let config = VerifyConfig {
        m: args.m,
        dmax,
        primes: args.primes.clone(),
        nmax: args.nmax,
    };
    let report = run_verification(&config)?;
    let body = match args.out.format {
        Format::Json => to_json(&verify_doc(&report)),
        _ => format!("{report}\n"),
    };
    emit(&args.out, &body)?;
    if report.all_pass() {
        Ok(())
    } else {
        let names: Vec<&str> = report.failures().map(|i| i.name.as_str()).collect();
        Err(verification(format!("failed: {}", names.join("; "))))
    }
}

fn cmd_subgroups(args: &SubgroupsArgs) -> Result<(), Failure> {
    no_csv(args.out.format)?;
    let nmax = args.nmax as usize;
    let counts = subgroup_counts(args.m, nmax)?;
    let hall = hall_recursion_oracle(args.m, nmax);
    let limits = if args.m >= 2 {
        Some(limit_transform(args.m, nmax)?)
    } else {
        None
    };
    let rows: Vec<SubgroupRow> = counts
        .iter()
        .zip(&hall)
        .enumerate()
        .map(|(i, (c, h))| SubgroupRow {
            n: c.n,
            j_n: c.j_n.to_string(),
            hall: h.to_string(),
            limit: limits.as_ref().map(|l| rat_to_string(&l[i])),
        })
        .collect();
    let doc = SubgroupsDoc { m: args.m, rows };
    let body = match args.out.format {
        Format::Json => to_json(&doc),
        _ => {
            let mut s = format!("m = {}\n", doc.m);
            for r in &doc.rows {
                s += &format!("J_{} = {}", r.n, r.j_n);
                if let Some(l) = &r.limit {
                    s += &format!("  (J_n/n = {l})");
                }
                s.push('\n');
            }
            s
        }
    };
    emit(&args.out, &body)?;
    if counts.iter().zip(&hall).any(|(c, h)| &c.j_n != h) {
        return Err(verification(
            "log formula disagrees with the Hall recursion",
        ));
    }
    if let Some(l) = &limits {
        let bad = counts
            .iter()
            .zip(l)
            .any(|(c, x)| x * rat(c.n as i64) != freechar::Rat::from_integer(c.j_n.clone()));
        if bad {
            return Err(verification("limit transform disagrees with J_n / n"));
        }
    }
    Ok(())
}

fn cmd_permstats(args: &PermstatsArgs) -> Result<(), Failure> {
    no_csv(args.out.format)?;
    let n = args.n as usize;
    let tuples = connected_tuples(n, args.m)?;
    let a_n = freechar::combinatorics::perms::length_polynomial(&tuples);
    let inv = a_n_via_inversion(args.m, n)?;
    let doc = PermstatsDoc {
        m: args.m,
        n,
        a_n: coeff_strings(&a_n),
        a_n_text: a_n.to_string(),
        a_n_inversion: coeff_strings(inv.coeff(n)),
        tuples: tuples
            .iter()
            .map(|t| TupleEntry {
                tuple: t.to_string(),
                length: t.length(),
            })
            .collect(),
    };
    let body = match args.out.format {
        Format::Json => to_json(&doc),
        _ => {
            let mut s = format!("a_{} = {}\n", n, doc.a_n_text);
            s += &format!(
                "{} connected tuples in S_{}^{}:\n",
                doc.tuples.len(),
                n,
                args.m - 1
            );
            for t in &doc.tuples {
                s += &format!("  {}  length {}\n", t.tuple, t.length);
            }
            s
        }
    };
    emit(&args.out, &body)?;
    if &a_n != inv.coeff(n) {
        return Err(verification("enumeration disagrees with series inversion"));
    }
    Ok(())
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), Failure> {
    no_csv(args.out.format)?;
    let d = args.d as usize;
    let (p, m) = (args.p, args.m);
    let c = classify_orbits(d, p, m, true)?;
    let burnside = burnside_count(d, p, m)?;
    let at_p = |s: freechar::Result<freechar::QSeries>| -> Result<freechar::Rat, Failure> {
        Ok(s?.coeff(d).eval(&rat(i64::from(p))))
    };
    let values = [
        at_p(m_series(m, d))?,
        at_p(a_series(m, d))?,
        at_p(airr_series(m, d))?,
        at_p(aind_series(m, d))?,
    ];
    let counts = [
        c.orbits,
        c.semisimple,
        c.abs_irreducible,
        c.abs_indecomposable,
    ];
    let agree = burnside == Int::from(c.orbits)
        && values
            .iter()
            .zip(&counts)
            .all(|(v, &k)| *v == freechar::Rat::from_integer(Int::from(k)));
    let doc = OracleDoc {
        d,
        p,
        m,
        orbits: c.orbits,
        abs_irr: c.abs_irreducible,
        abs_ind: c.abs_indecomposable,
        semisimple: c.semisimple,
        burnside: burnside.to_string(),
        m_value: rat_to_string(&values[0]),
        a_value: rat_to_string(&values[1]),
        a_irr_value: rat_to_string(&values[2]),
        a_ind_value: rat_to_string(&values[3]),
        agree,
    };
    let body = match args.out.format {
        Format::Json => to_json(&doc),
        _ => format!(
            "GL_{d}(F_{p}) acting on {m}-tuples\n\
             orbits: {} (Burnside {}, M_{d}({p}) = {})\n\
             semisimple: {} (A_{d}({p}) = {})\n\
             abs_irr: {} (A_{d}^irr({p}) = {})\n\
             abs_ind: {} (A_{d}^ind({p}) = {})\n",
            doc.orbits,
            doc.burnside,
            doc.m_value,
            doc.semisimple,
            doc.a_value,
            doc.abs_irr,
            doc.a_irr_value,
            doc.abs_ind,
            doc.a_ind_value
        ),
    };
    emit(&args.out, &body)?;
    if !agree {
        return Err(verification(
            "brute-force counts disagree with the polynomials",
        ));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Polys(a) => cmd_polys(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Subgroups(a) => cmd_subgroups(a),
        Command::Permstats(a) => cmd_permstats(a),
        Command::Oracle(a) => cmd_oracle(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
