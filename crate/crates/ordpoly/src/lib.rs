//! `ordpoly`: facet lists, shellings, triangulations and h-vectors of
//! ordinary polytopes from the command line, plus the invariant suite.
//!
//! ```text
//! ordpoly <verb> <d> <k> <n> [--i I] [--format text|json|csv]
//!         [--method toric|closed|multiplicial|triangulation|shelling|all] [--grid]
//! ```
//!
//! Exit status: 2 for bad arguments, 1 when a verification fails (or a
//! computation errors), 0 otherwise.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, ValueEnum};
use ordpoly_core::bijection::{bijection_rows, expected_count, subset_to_facet};
use ordpoly_core::combinat::Family;
use ordpoly_core::multiplex::multiplex_facets;
use ordpoly_core::ordinary::enumerate_facets;
use ordpoly_core::shelling::colex_shelling;
use ordpoly_core::triangulation::triangulation_shelling;
use ordpoly_core::{Error, Params};
use serde_json::json;

pub mod lattice_json;
pub mod render;
pub mod suite;

use lattice_json::LatticeJson;
use render::{write_tables, Cell, Format, Table};

pub const DEFAULT_MAX_FACES: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Facets,
    Shell,
    Triangulate,
    Hvector,
    Bijection,
    Multiplex,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Toric,
    Closed,
    Multiplicial,
    Triangulation,
    Shelling,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "ordpoly", version, about = "Combinatorics of ordinary polytopes P^{d,k,n}")]
pub struct Cli {
    #[arg(value_enum)]
    pub verb: Verb,
    pub d: u32,
    pub k: u32,
    pub n: u32,
    /// Size of the minimal new faces (bijection only).
    #[arg(long = "i")]
    pub i: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// h-vector route (hvector only).
    #[arg(long, value_enum, default_value = "all")]
    pub method: Method,
    /// Run over k' in d..=k and n' in k'..=k'+(n-k).
    #[arg(long)]
    pub grid: bool,
}

/// Why a command stopped.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

/// A finished command: its tables and whether every check passed.
struct Output {
    tables: Vec<Table>,
    ok: bool,
}

impl Output {
    fn one(table: Table, ok: bool) -> Self {
        Output { tables: vec![table], ok }
    }
}

/// Parses `args` (program name first), runs the command and writes to
/// `out`, diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let max_faces = match std::env::var("ORDPOLY_MAX_FACES") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(m) if m > 0 => m,
            _ => {
                let _ = writeln!(err, "error: ORDPOLY_MAX_FACES must be a positive integer, got {v:?}");
                return 2;
            }
        },
        Err(_) => DEFAULT_MAX_FACES,
    };
    let instances = match instances(&cli) {
        Ok(v) => v,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };

    let results: Vec<Result<Output, Failure>> = if instances.len() > 1 {
        std::thread::scope(|s| {
            let handles: Vec<_> = instances
                .iter()
                .map(|p| s.spawn(|| dispatch(&cli, p, max_faces)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    } else {
        instances.iter().map(|p| dispatch(&cli, p, max_faces)).collect()
    };

    let mut tables = Vec::new();
    let mut status = 0;
    for (p, r) in instances.iter().zip(results) {
        match r {
            Ok(o) => {
                tables.extend(o.tables);
                if !o.ok {
                    status = 1;
                }
            }
            Err(Failure::Usage(msg)) => {
                let _ = writeln!(err, "error: {msg}");
                return 2;
            }
            Err(Failure::Compute(e)) => {
                let _ = writeln!(err, "error: {p}: {e}");
                status = 1;
            }
        }
    }
    if let Err(e) = write_tables(&tables, cli.format, out) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    status
}

fn instances(cli: &Cli) -> Result<Vec<Params>, String> {
    let p = Params::new(cli.d, cli.k, cli.n).map_err(|e| e.to_string())?;
    if !cli.grid {
        return Ok(vec![p]);
    }
    let span = cli.n - cli.k;
    let mut out = Vec::new();
    for k in cli.d..=cli.k {
        for n in k..=k + span {
            out.push(Params::new(cli.d, k, n).map_err(|e| e.to_string())?);
        }
    }
    Ok(out)
}

fn dispatch(cli: &Cli, p: &Params, max_faces: usize) -> Result<Output, Failure> {
    if cli.i.is_some() && cli.verb != Verb::Bijection {
        return Err(Failure::Usage("--i only applies to bijection".into()));
    }
    if cli.method != Method::All && cli.verb != Verb::Hvector {
        return Err(Failure::Usage("--method only applies to hvector".into()));
    }
    let mut out = match cli.verb {
        Verb::Facets => facets(p, max_faces)?,
        Verb::Shell => shell(p)?,
        Verb::Triangulate => triangulate(p)?,
        Verb::Hvector => hvector(p, cli.method, max_faces)?,
        Verb::Bijection => bijection(p, cli.i)?,
        Verb::Multiplex => multiplex(p, max_faces)?,
        Verb::Verify => verify(p, max_faces),
    };
    for t in &mut out.tables {
        t.params = Some((p.d(), p.k(), p.n()));
    }
    Ok(out)
}

fn facets(p: &Params, max_faces: usize) -> Result<Output, Failure> {
    let list = enumerate_facets(p)?;
    let mut t = Table::new(format!("{p}: {} facets", list.len()), vec!["j", "F_j"]);
    for (j, f) in list.iter().enumerate() {
        t.rows.push(vec![Cell::Int(j as i64 + 1), Cell::Grid(f.clone(), p.n())]);
    }
    let lat = ordpoly_core::lattice::build_face_lattice_capped(&list, p.d(), max_faces)?;
    t.note("f", Cell::Ints(lat.f_vector()));
    t.extra.push(("lattice", json!(LatticeJson::from_lattice(&lat))));
    Ok(Output::one(t, true))
}

fn shell(p: &Params) -> Result<Output, Failure> {
    let steps = colex_shelling(p)?;
    let mut t = Table::new(format!("{p}: colex shelling"), vec!["j", "F_j", "G_j"]);
    for s in &steps {
        t.rows.push(vec![
            Cell::Int(s.index as i64),
            Cell::Grid(s.facet.clone(), p.n()),
            Cell::Grid(s.minimal_new_face.clone(), p.n()),
        ]);
    }
    Ok(Output::one(t, true))
}

fn triangulate(p: &Params) -> Result<Output, Failure> {
    let steps = triangulation_shelling(p)?;
    let mut t = Table::new(format!("{p}: shelled boundary triangulation"), vec!["j", "l", "T_jl", "U_jl"]);
    for s in &steps {
        t.rows.push(vec![
            Cell::Int(s.facet_index as i64),
            Cell::Int(s.window as i64),
            Cell::Grid(s.simplex.clone(), p.n()),
            Cell::Grid(s.minimal_new_face.clone(), p.n()),
        ]);
    }
    t.note("h", Cell::Ints(ordpoly_core::triangulation::simplicial_h(&steps, p.d()).into_vec()));
    Ok(Output::one(t, true))
}

fn hvector(p: &Params, method: Method, max_faces: usize) -> Result<Output, Failure> {
    if method == Method::Closed && p.d() % 2 == 0 {
        return Err(Failure::Usage("the closed form needs odd d".into()));
    }
    let h = suite::h_computations(p, max_faces)?;
    let mut t = Table::new(format!("{p}: toric h-vector"), vec!["method", "h"]);
    let mut row = |name: &str, v: &ordpoly_core::HVector| {
        t.rows.push(vec![Cell::Text(name.into()), Cell::Ints(v.as_slice().to_vec())]);
    };
    let all = method == Method::All;
    if all || method == Method::Toric {
        row("toric", &h.toric);
    }
    if let Some(c) = h.closed.as_ref().filter(|_| all || method == Method::Closed) {
        row("closed", c);
    }
    if all || method == Method::Multiplicial {
        row("multiplicial", &h.multiplicial);
    }
    if all || method == Method::Triangulation {
        row("triangulation", &h.triangulation);
    }
    if all || method == Method::Shelling {
        row("shelling", &h.shelling);
    }
    t.note("h'", Cell::Ints(h.h_prime.as_slice().to_vec()));
    t.note("f", Cell::Ints(h.f.clone()));
    let ok = !all || h.all_agree();
    if all {
        t.note("agreement", Cell::Text(if ok { "pass" } else { "FAIL" }.into()));
    }
    Ok(Output::one(t, ok))
}

fn bijection(p: &Params, i: Option<u32>) -> Result<Output, Failure> {
    if p.n() + 1 < p.d() + p.k() {
        return Err(Failure::Usage(format!("bijection needs n >= d+k-1 = {}", p.d() + p.k() - 1)));
    }
    let sizes: Vec<u32> = match i {
        Some(i) if i == 0 || i > p.m() => {
            return Err(Failure::Usage(format!("--i must lie in 1..={}", p.m())));
        }
        Some(i) => vec![i],
        None => (1..=p.m()).collect(),
    };
    let mut tables = Vec::new();
    let mut all_ok = true;
    for i in sizes {
        let rows = bijection_rows(p, i)?;
        let mut t = Table::new(
            format!("{p}, i = {i}: simplices with max F_j = {} and |U| = i", p.n() - 1),
            vec!["T", "U", "b", "c", "e", "Y", "a1", "x", "y", "A"],
        );
        let mut round_trip = true;
        for r in &rows {
            round_trip &= subset_to_facet(&r.a, p, i).as_ref() == Ok(&r.t);
            t.rows.push(vec![
                Cell::Set(r.t.clone()),
                Cell::Set(r.u.clone()),
                Cell::Int(r.b.into()),
                Cell::Int(r.c.into()),
                Cell::Int(r.e.into()),
                Cell::Set(r.y.clone()),
                Cell::Int(r.a1.into()),
                Cell::Set(r.x_values.clone()),
                Cell::Ints(r.y_counts.iter().map(|&v| v.into()).collect()),
                Cell::Set(r.a.clone()),
            ]);
        }
        let want = expected_count(p, i);
        let count_ok = rows.len() as i64 == want;
        t.note("count", Cell::Text(format!("{} (binomial {want})", rows.len())));
        t.note("round trip", Cell::Text(if round_trip { "pass" } else { "FAIL" }.into()));
        all_ok &= round_trip && count_ok;
        tables.push(t);
    }
    Ok(Output { tables, ok: all_ok })
}

fn multiplex(p: &Params, max_faces: usize) -> Result<Output, Failure> {
    if p.family() == Family::Ordinary || p.k() != p.d() {
        return Err(Failure::Usage("multiplex needs k = d".into()));
    }
    let list = multiplex_facets(p.d(), p.n())?;
    let order = list.colex_order();
    let steps = colex_shelling(p)?;
    let mut t = Table::new(format!("M^{{{},{}}}: colex shelling", p.d(), p.n()), vec!["j", "facet", "F", "G_j"]);
    for (pos, (&i, s)) in order.iter().zip(&steps).enumerate() {
        t.rows.push(vec![
            Cell::Int(pos as i64 + 1),
            Cell::Text(format!("F_{i}")),
            Cell::Grid(list.facet(i).clone(), p.n()),
            Cell::Grid(s.minimal_new_face.clone(), p.n()),
        ]);
    }
    let h = suite::h_computations(p, max_faces)?;
    t.note("toric h", Cell::Ints(h.toric.as_slice().to_vec()));
    t.note("h'", Cell::Ints(h.h_prime.as_slice().to_vec()));
    let solid = ordpoly_core::triangulation::simplicial_h_of_complex(
        &ordpoly_core::multiplex::multiplex_triangulation(p.d(), p.n())?,
        p.d() + 1,
    );
    t.note("solid triangulation h", Cell::Ints(solid.into_vec()));
    Ok(Output::one(t, true))
}

fn verify(p: &Params, max_faces: usize) -> Output {
    let checks = suite::verify(p, max_faces);
    let ok = checks.iter().all(suite::Check::passed);
    let mut t = Table::new(format!("{p}: {}", if ok { "pass" } else { "FAIL" }), vec!["check", "result"]);
    for c in &checks {
        let result = match &c.failure {
            None => "pass".to_string(),
            Some(w) => format!("FAIL {w}"),
        };
        t.rows.push(vec![Cell::Text(c.name.into()), Cell::Text(result)]);
    }
    Output::one(t, ok)
}
