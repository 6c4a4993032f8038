//! Command-line front end: argument parsing, dispatch and output formatting.

pub mod error;
pub mod json;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use gue_core::algebra::{ResolventMatrix, Ring};
use gue_core::correlators::{
    correlator, evaluate_at, k_point_with, mixed_correlator, one_point, two_point_closed_form, KPointMethod,
    KPointOptions,
};
use gue_core::enumeration::{polygon_numbers, weighted_count};
use gue_core::genus::{free_energy, DEFAULT_ORDER};
use gue_core::resolvent::{build_general_resolvent, build_gue_resolvent, required_window, LatticeData};
use gue_core::wick::{Oracle, DEFAULT_BUDGET};
use gue_core::{PolyN, SymbolPoly};

pub use error::CliError;
use json::{poly_to_json, rational_to_json};

#[derive(Parser, Debug)]
#[command(name = "gue", version, about = "Exact GUE correlators, polygon counts and free energies")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write data here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed forms for one and two points, the commutator family otherwise.
    Auto,
    /// Nested commutators of resolvents.
    AdForm,
    /// Full cyclic permutation sum.
    PermutationSum,
    /// Wick enumeration.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ResolventMode {
    /// Closed form with entries in `Z[n]`.
    Gue,
    /// General recursion fed with GUE lattice data.
    General,
    /// General recursion with free symbols `v_n`, `w_n`.
    Symbolic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Connected correlator <tr M^i1 ... tr M^ik>_c as a polynomial in N.
    Correlator {
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Evaluate at this matrix size instead of returning a polynomial.
        #[arg(long)]
        n: Option<i64>,
        /// Extra exponents checked for cancellation on the commutator paths.
        #[arg(long, default_value_t = KPointOptions::default().slack)]
        slack: i64,
        /// Largest total degree the oracle may enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// <(tr M^b)^m tr M^i tr M^j>_c.
    Mixed {
        #[arg(long)]
        b: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
    },
    /// Labelled polygon counts n_{g,b,k} for k up to the given number of vertices.
    PolygonTable {
        #[arg(long)]
        valence: u32,
        #[arg(long)]
        max_vertices: u32,
        #[arg(long, default_value_t = 1)]
        min_vertices: u32,
    },
    /// Weighted ribbon-graph count a_g(i1..ik).
    RibbonWeight {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
    },
    /// Genus-g free energy as a series in s with coefficients in x = t^2.
    GenusFreeEnergy {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Evaluate every coefficient at x = 1.
        #[arg(long)]
        x_one: bool,
    },
    /// Dumps the matrix resolvent as series in 1/lambda.
    Resolvent {
        #[arg(long, value_enum, default_value_t = ResolventMode::Gue)]
        mode: ResolventMode,
        /// Integer site (gue, general) or lattice label (symbolic).
        #[arg(long)]
        site: Option<i64>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Cross-checks every correlator path against the oracle for all exponent lists up to the budget.
    Verify {
        #[arg(long, default_value_t = 12)]
        budget: usize,
    },
}

/// Data produced by one command, rendered once at the end.
struct Output {
    json: Value,
    csv: String,
}

/// Parses `args` (program name first), runs one subcommand and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return report(&CliError::Usage(e.kind().to_string()), err);
        }
    };
    match execute(&cli).and_then(|o| emit(&cli, o, out)) {
        Ok(code) => code,
        Err(e) => report(&e, err),
    }
}

fn report(e: &CliError, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "{}", e.to_json());
    e.exit_code()
}

fn emit(cli: &Cli, o: Output, out: &mut dyn Write) -> Result<i32, CliError> {
    let code = if o.json.get("failed").and_then(Value::as_u64).unwrap_or(0) > 0 { 4 } else { 0 };
    let text = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&o.json).expect("values serialize")),
        Format::Csv => o.csv,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(code)
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Correlator { exponents, method, n, slack, budget } => {
            let p = correlator_by(exponents, *method, *slack, *budget)?;
            Ok(match n {
                Some(n) => value_output(&evaluate_at(&p, *n)),
                None => poly_output(&p, "N"),
            })
        }
        Command::Mixed { b, m, i, j } => Ok(poly_output(&mixed_correlator(*b, *m, *i, *j)?, "N")),
        Command::PolygonTable { valence, max_vertices, min_vertices } => {
            polygon_table(*valence, *min_vertices, *max_vertices)
        }
        Command::RibbonWeight { genus, exponents } => {
            let a = weighted_count(*genus, exponents)?;
            let csv = format!("genus,num,den\n{genus},{},{}\n", a.numer(), a.denom());
            Ok(Output { json: json!({ "genus": genus, "exponents": exponents, "weight": rational_to_json(&a) }), csv })
        }
        Command::GenusFreeEnergy { genus, order, x_one } => genus_free_energy(*genus, *order, *x_one),
        Command::Resolvent { mode, site, depth } => resolvent(*mode, *site, *depth),
        Command::Verify { budget } => verify(*budget),
    }
}

fn correlator_by(exps: &[u32], method: Method, slack: i64, budget: usize) -> Result<PolyN, CliError> {
    let opts = |method| KPointOptions { method, slack, ..KPointOptions::default() };
    Ok(match method {
        Method::Auto => correlator(exps)?,
        Method::AdForm => k_point_with(exps, opts(KPointMethod::AdForm))?,
        Method::PermutationSum => k_point_with(exps, opts(KPointMethod::PermutationSum))?,
        Method::Oracle => Oracle::new(budget).connected_moment(exps)?,
    })
}

fn poly_output(p: &PolyN, var: &str) -> Output {
    let mut csv = String::from("degree,coefficient\n");
    for (d, c) in p.terms().filter(|(_, c)| !c.is_zero()) {
        let _ = writeln!(csv, "{d},{c}");
    }
    Output { json: poly_to_json(p, var), csv }
}

fn value_output(v: &BigInt) -> Output {
    Output { json: json!({ "value": v.to_string() }), csv: format!("value\n{v}\n") }
}

fn polygon_table(b: u32, kmin: u32, kmax: u32) -> Result<Output, CliError> {
    if kmin == 0 || kmin > kmax {
        return Err(CliError::Usage("need 1 <= min-vertices <= max-vertices".into()));
    }
    let tables = (kmin..=kmax)
        .filter(|k| (b * k) % 2 == 0)
        .map(|k| polygon_numbers(b, k))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Value> = tables
        .iter()
        .map(|t| json!({ "vertices": t.vertices, "counts": t.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>() }))
        .collect();
    let mut csv = String::from("genus,vertices,count\n");
    let gmax = tables.iter().map(|t| t.max_genus()).max().unwrap_or(0);
    for g in 0..=gmax {
        for t in tables.iter().filter(|t| g <= t.max_genus()) {
            let _ = writeln!(csv, "{g},{},{}", t.vertices, t.get(g));
        }
    }
    Ok(Output { json: json!({ "valence": b, "rows": rows }), csv })
}

fn genus_free_energy(genus: u32, order: usize, x_one: bool) -> Result<Output, CliError> {
    let f = free_energy(genus, order)?;
    let mut map = serde_json::Map::new();
    if x_one {
        let mut csv = String::from("k,num,den\n");
        for k in 0..=order {
            let v = f.at_x_one(k)?;
            let _ = writeln!(csv, "{k},{},{}", v.numer(), v.denom());
            map.insert(k.to_string(), rational_to_json(&v));
        }
        return Ok(Output { json: json!({ "genus": genus, "order": order, "at_x_one": map }), csv });
    }
    let mut logs = serde_json::Map::new();
    let mut csv = String::from("k,coefficient,log_x_coefficient\n");
    for k in 0..=order {
        let (c, l) = (f.coeff(k), f.log_coeff(k));
        let _ = writeln!(csv, "{k},{c},{l}");
        map.insert(k.to_string(), json!(c.to_string()));
        if !l.is_zero() {
            logs.insert(k.to_string(), json!(l.to_string()));
        }
    }
    let json = json!({ "genus": genus, "order": order, "variable": "t", "x": "t^2", "coeffs": map, "log_x": logs });
    Ok(Output { json, csv })
}

fn resolvent(mode: ResolventMode, site: Option<i64>, depth: usize) -> Result<Output, CliError> {
    let at = |r: ResolventMatrix<PolyN>| match site {
        Some(n) => {
            let n = BigInt::from(n);
            dump(&r.map_coeffs(|p: &PolyN| PolyN::constant(p.eval(&n))), |c| c.coeff(0).to_string())
        }
        None => dump(&r, |c| c.display("n")),
    };
    let mut out = match mode {
        ResolventMode::Gue => at(build_gue_resolvent(depth)?),
        ResolventMode::General => {
            let (lo, hi) = required_window(0, depth);
            at(build_general_resolvent(&LatticeData::gue(lo, hi), 0, depth)?)
        }
        ResolventMode::Symbolic => {
            let n0 = site.unwrap_or(0);
            let (lo, hi) = required_window(n0, depth);
            let r = build_general_resolvent(&LatticeData::<SymbolPoly>::symbolic(lo, hi), n0, depth)?;
            dump(&r, |c| c.to_string())
        }
    };
    out.json["depth"] = json!(depth);
    out.json["site"] = json!(site);
    Ok(out)
}

/// Entries as `{"e11": {"<exponent of lambda>": "<coefficient>"}, ...}`.
fn dump<C: Ring>(r: &ResolventMatrix<C>, show: impl Fn(&C) -> String) -> Output {
    let mut entries = serde_json::Map::new();
    let mut csv = String::from("entry,exponent,coefficient\n");
    for (name, e) in ["e11", "e12", "e21", "e22"].into_iter().zip(r.entries()) {
        let mut m = serde_json::Map::new();
        for (x, c) in e.terms() {
            let s = show(c);
            let _ = writeln!(csv, "{name},{x},\"{s}\"");
            m.insert(x.to_string(), json!(s));
        }
        entries.insert(name.into(), Value::Object(m));
    }
    Output { json: json!({ "variable": "lambda", "entries": entries }), csv }
}

/// Exponent lists with total at most `max_total`, as non-increasing partitions.
fn exponent_lists(max_total: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_total, max_total, &mut Vec::new(), &mut out);
    out.sort_by_key(|v| (v.iter().sum::<u32>(), v.len()));
    out
}

fn verify(budget: usize) -> Result<Output, CliError> {
    if budget > DEFAULT_BUDGET {
        return Err(gue_core::Error::BudgetExceeded {
            required: format!("total degree {budget}"),
            budget: DEFAULT_BUDGET,
        }
        .into());
    }
    let mut oracle = Oracle::new(budget);
    let mut rows = Vec::new();
    let mut csv = String::from("exponents,paths,ok\n");
    let mut failed = 0u64;
    for e in exponent_lists(budget as u32) {
        let want = oracle.connected_moment(&e)?;
        let mut paths = vec![("oracle_filtered", oracle.connected_moment_filtered(&e)?), ("correlator", correlator(&e)?)];
        match e.len() {
            1 => paths.push(("one_point", one_point(e[0])?)),
            2 => paths.push(("two_point_closed_form", two_point_closed_form(e[0], e[1])?)),
            k => {
                if k <= 5 {
                    paths.push(("k_point", k_point_with(&e, KPointOptions::default())?));
                }
                // sorted non-increasing: the two smallest exponents are free, the rest repeat
                if e[..k - 2].iter().all(|&x| x == e[0]) {
                    paths.push(("mixed_correlator", mixed_correlator(e[0], (k - 2) as u32, e[k - 2], e[k - 1])?));
                }
            }
        }
        let ok = paths.iter().all(|(_, p)| *p == want);
        failed += u64::from(!ok);
        let names: Vec<&str> = paths.iter().map(|(n, _)| *n).collect();
        let list: Vec<String> = e.iter().map(u32::to_string).collect();
        let _ = writeln!(csv, "{},{},{ok}", list.join(" "), names.join(" "));
        rows.push(json!({ "exponents": e, "paths": names, "ok": ok }));
    }
    let json = json!({ "budget": budget, "checked": rows.len(), "failed": failed, "comparisons": rows });
    Ok(Output { json, csv })
}
