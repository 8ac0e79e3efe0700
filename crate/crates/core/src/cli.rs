//! Command-line front end. Every artifact carries the tool version and the
//! parsed configuration, and two runs with the same configuration write the
//! same bytes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangement::{self, Cell, CellFilter, FacePoset, Limits};
use crate::combinat::{PartitionTree, SignVector};
use crate::complex::{self, GroupAction, SimplicialComplex};
use crate::cupcalc::{self, WitnessCase, WitnessLimits, WitnessReport};
use crate::error::Error;
use crate::homology;
use crate::oracle;
use crate::sphere::{self, SphereCell};
use crate::tcformulas::{self, TcReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser, Serialize)]
#[command(name = "braid-strata", version, about = "Cell structures on configuration spaces of R^k and S^k")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,

    /// Worker threads for parallel stages.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub jobs: Option<usize>,

    /// Refuse inputs with more cells than this (overrides BRAID_STRATA_LIMIT).
    #[arg(long, global = true)]
    pub limit_cells: Option<u128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Euclidean,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FilterArg {
    All,
    Configuration,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpaceArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum)]
    pub space: Space,
    /// Euclidean cells to keep; sphere cells are always configurations.
    #[arg(long, value_enum)]
    pub filter: Option<FilterArg>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ComplexArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub space: SpaceArgs,
    /// Pass to the quotient by the symmetric group.
    #[arg(long)]
    pub quotient: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    DimSalvetti,
    DimSphere,
    Freeness,
    OracleConsistency,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub theorem: Theorem,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub k_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TcFamily {
    SphereProduct,
    Torus,
    Symplectic,
    Quaternionic,
    TcsSphere,
    Genus,
    CohomWitness,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TcArgs {
    #[arg(long, value_enum)]
    pub family: TcFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Sphere dimensions, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ks: Vec<usize>,
    /// Degree of the truncated generator for cohom-witness.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Also evaluate the cup-length witness products.
    #[arg(long)]
    pub witness: bool,
    /// Print unreduced values (reduced value plus one).
    #[arg(long)]
    pub unreduced: bool,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Enumerate cells.
    Cells(SpaceArgs),
    /// Face poset and its Hasse diagram.
    Poset(SpaceArgs),
    /// Order complex of the face poset.
    Complex(ComplexArgs),
    /// Integral homology of the order complex.
    Homology(ComplexArgs),
    /// Sweep a theorem over a parameter grid.
    Verify(VerifyArgs),
    /// Topological-complexity tables.
    Tc(TcArgs),
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Artifact {
    body: String,
    ok: bool,
}

/// Parses the process arguments and runs; returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(artifact) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &artifact.body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            } else {
                print!("{}", artifact.body);
            }
            if artifact.ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("refused: {msg}");
            EXIT_RESOURCE
        }
    }
}

fn limits(cli: &Cli) -> Result<Limits, Failure> {
    let mut limits = Limits::from_env()?;
    if let Some(max) = cli.limit_cells {
        limits.max_cells = max;
    }
    Ok(limits)
}

fn execute(cli: &Cli) -> Result<Artifact, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        // Fails only if a pool already exists, which is fine for repeated in-process runs.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let limits = limits(cli)?;
    let header = Header::new(cli, &limits);
    match &cli.command {
        Command::Cells(a) => cmd_cells(a, cli.format, &limits, &header),
        Command::Poset(a) => cmd_poset(a, cli.format, &limits, &header),
        Command::Complex(a) => cmd_complex(a, cli.format, &limits, &header, false),
        Command::Homology(a) => cmd_complex(a, cli.format, &limits, &header, true),
        Command::Verify(a) => cmd_verify(a, cli.format, &limits, &header),
        Command::Tc(a) => cmd_tc(a, cli.format, &header),
    }
}

struct Header {
    config: Value,
}

impl Header {
    fn new(cli: &Cli, limits: &Limits) -> Self {
        let mut config = serde_json::to_value(cli).expect("config serializes");
        config["limit_cells"] = json!(limits.max_cells.to_string());
        Header { config }
    }

    fn json(&self, result: Value) -> String {
        let doc = json!({
            "tool": "braid-strata",
            "version": env!("CARGO_PKG_VERSION"),
            "config": self.config,
            "result": result,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json serializes");
        s.push('\n');
        s
    }

    fn comment(&self, prefix: &str) -> String {
        format!("{prefix} braid-strata {}\n{prefix} config {}\n", env!("CARGO_PKG_VERSION"), self.config)
    }
}

fn filter_for(a: &SpaceArgs) -> Result<CellFilter, Failure> {
    match (a.space, a.filter) {
        (Space::Euclidean, None | Some(FilterArg::All)) => Ok(CellFilter::All),
        (_, Some(FilterArg::Configuration)) => Ok(CellFilter::Configuration),
        (Space::Sphere, None) => Ok(CellFilter::Configuration),
        (Space::Sphere, Some(FilterArg::All)) => {
            Err(Failure::Usage("sphere cells are configuration cells; --filter all does not apply".into()))
        }
    }
}

fn space_name(s: Space) -> &'static str {
    match s {
        Space::Euclidean => "euclidean",
        Space::Sphere => "sphere",
    }
}

fn reject_dot(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(format!("--format dot is only available for poset, not {what}")));
    }
    Ok(())
}

fn cell_records<C: Cell>(cells: &[C]) -> Vec<Value> {
    cells
        .iter()
        .enumerate()
        .map(|(id, c)| {
            let mut m = serde_json::Map::new();
            m.insert("id".into(), json!(id));
            m.extend(c.record());
            m.insert("dim".into(), json!(c.dimension()));
            Value::Object(m)
        })
        .collect()
}

fn cmd_cells(a: &SpaceArgs, format: Format, limits: &Limits, h: &Header) -> Result<Artifact, Failure> {
    reject_dot(format, "cells")?;
    let filter = filter_for(a)?;
    let (records, lines) = match a.space {
        Space::Euclidean => {
            let cells = arrangement::enumerate_cells(a.n, a.k, filter, limits)?;
            (cell_records(&cells), cells.iter().map(|c| format!("{c}\t{}", c.dimension())).collect::<Vec<_>>())
        }
        Space::Sphere => {
            let cells = sphere_cells(a.n, a.k, limits)?;
            (cell_records(&cells), cells.iter().map(|c| format!("{c}\t{}", Cell::dimension(c))).collect())
        }
    };
    let body = match format {
        Format::Json => h.json(json!({
            "n": a.n, "k": a.k, "space": space_name(a.space),
            "count": records.len(), "cells": records,
        })),
        _ => {
            let mut s = h.comment("#");
            let _ = writeln!(s, "# {} cells", lines.len());
            for l in lines {
                let _ = writeln!(s, "{l}");
            }
            s
        }
    };
    Ok(Artifact { body, ok: true })
}

fn sphere_cells(n: usize, k: usize, limits: &Limits) -> Result<Vec<SphereCell>, Failure> {
    if n < 2 {
        return Err(Failure::Usage("sphere cells need n >= 2".into()));
    }
    if k == 0 {
        return Err(Failure::Usage("k must be at least 1".into()));
    }
    limits.check("sphere cells", n, k, sphere::count_sphere_cells(n, k))?;
    let labels: Vec<usize> = (1..=n).collect();
    let mut cells: Vec<SphereCell> = arrangement::enumerate_trees(&labels, k, CellFilter::Configuration)
        .into_iter()
        .map(|tree| SphereCell::Interior { tree })
        .collect();
    for ell in 1..=n {
        let rest: Vec<usize> = labels.iter().copied().filter(|&x| x != ell).collect();
        cells.extend(
            arrangement::enumerate_trees(&rest, k, CellFilter::Configuration)
                .into_iter()
                .map(|tree| SphereCell::Basepoint { ell, tree }),
        );
    }
    Ok(cells)
}

enum AnyPoset {
    Euclidean(FacePoset<PartitionTree>),
    Sphere(FacePoset<SphereCell>),
}

fn build_poset(a: &SpaceArgs, limits: &Limits) -> Result<AnyPoset, Failure> {
    let filter = filter_for(a)?;
    Ok(match a.space {
        Space::Euclidean => AnyPoset::Euclidean(arrangement::face_poset(a.n, a.k, filter, limits)?),
        Space::Sphere => AnyPoset::Sphere(sphere::sphere_poset(a.n, a.k, limits)?.poset),
    })
}

fn poset_text<C: Cell>(p: &FacePoset<C>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {} cells, {} covers", p.len(), p.covers().len());
    for e in p.elements() {
        let _ = writeln!(s, "{}\t{}\t{}", e.id, e.dim, e.cell);
    }
    for (lo, hi) in p.covers() {
        let _ = writeln!(s, "{lo} < {hi}");
    }
    s
}

fn cmd_poset(a: &SpaceArgs, format: Format, limits: &Limits, h: &Header) -> Result<Artifact, Failure> {
    let poset = build_poset(a, limits)?;
    let space = space_name(a.space);
    let name = format!("{space}_n{}_k{}", a.n, a.k);
    let body = match (&poset, format) {
        (AnyPoset::Euclidean(p), Format::Json) => h.json(p.to_json(a.n, a.k, space)),
        (AnyPoset::Sphere(p), Format::Json) => h.json(p.to_json(a.n, a.k, space)),
        (AnyPoset::Euclidean(p), Format::Dot) => h.comment("//") + &p.to_dot(&name),
        (AnyPoset::Sphere(p), Format::Dot) => h.comment("//") + &p.to_dot(&name),
        (AnyPoset::Euclidean(p), Format::Text) => h.comment("#") + &poset_text(p),
        (AnyPoset::Sphere(p), Format::Text) => h.comment("#") + &poset_text(p),
    };
    Ok(Artifact { body, ok: true })
}

fn complex_and_action(a: &ComplexArgs, limits: &Limits) -> Result<(SimplicialComplex, Option<GroupAction>), Failure> {
    let poset = build_poset(&a.space, limits)?;
    let c = match &poset {
        AnyPoset::Euclidean(p) => complex::order_complex(p),
        AnyPoset::Sphere(p) => complex::order_complex(p),
    };
    let action = if a.quotient {
        Some(match &poset {
            AnyPoset::Euclidean(p) => GroupAction::symmetric(p, a.space.n)?,
            AnyPoset::Sphere(p) => GroupAction::symmetric(p, a.space.n)?,
        })
    } else {
        None
    };
    Ok((c, action))
}

fn cmd_complex(a: &ComplexArgs, format: Format, limits: &Limits, h: &Header, homology: bool) -> Result<Artifact, Failure> {
    reject_dot(format, if homology { "homology" } else { "complex" })?;
    let (c, action) = complex_and_action(a, limits)?;
    let (json_doc, text) = match (&action, homology) {
        (None, false) => (
            c.to_json(),
            format!("f-vector {:?}\neuler characteristic {}\n", c.f_vector(), c.euler_char()),
        ),
        (Some(g), false) => {
            let q = complex::quotient(&c, g)?;
            (
                q.to_json(),
                format!(
                    "quotient by a group of order {}\nf-vector {:?}\neuler characteristic {}\n",
                    q.group_order(),
                    q.f_vector(),
                    q.euler_char()
                ),
            )
        }
        (None, true) => {
            let hg = homology::homology(&c)?;
            (hg.to_json(), format!("{hg}\n"))
        }
        (Some(g), true) => {
            let q = complex::quotient(&c, g)?;
            let hg = homology::homology(&q)?;
            (hg.to_json(), format!("{hg}\n"))
        }
    };
    let body = match format {
        Format::Json => h.json(json_doc),
        _ => h.comment("#") + &text,
    };
    Ok(Artifact { body, ok: true })
}

#[derive(Debug, Serialize)]
struct Instance {
    n: usize,
    k: usize,
    status: &'static str,
    measured: Option<Value>,
    predicted: Option<Value>,
    detail: String,
}

impl Instance {
    fn compare(n: usize, k: usize, measured: Value, predicted: Value, detail: String) -> Self {
        let status = if measured == predicted { "pass" } else { "fail" };
        Instance { n, k, status, measured: Some(measured), predicted: Some(predicted), detail }
    }

    fn refused(n: usize, k: usize, e: Error) -> Result<Self, Failure> {
        match e {
            Error::ResourceLimit { .. } => Ok(Instance {
                n,
                k,
                status: "skipped",
                measured: None,
                predicted: None,
                detail: e.to_string(),
            }),
            other => Err(other.into()),
        }
    }
}

fn verify_instance(t: Theorem, n: usize, k: usize, limits: &Limits) -> Result<Instance, Error> {
    match t {
        Theorem::DimSphere => {
            let p = sphere::sphere_poset(n, k, limits)?.poset;
            let measured = p.order_complex_dimension();
            Ok(Instance::compare(
                n,
                k,
                json!(measured),
                json!((k - 1) * (n - 1) + 1),
                format!("{} cells", p.len()),
            ))
        }
        Theorem::DimSalvetti => {
            let p = arrangement::salvetti_poset(n, k, limits)?;
            Ok(Instance::compare(
                n,
                k,
                json!(p.order_complex_dimension()),
                json!((n - 1) * (k - 1)),
                format!("{} cells", p.len()),
            ))
        }
        Theorem::Freeness => {
            let sal = arrangement::salvetti_poset(n, k, limits)?;
            let sal_free = sphere::orbits(&sal, n)?.free;
            let sph_free = if n >= 2 { sphere::orbits(&sphere::sphere_poset(n, k, limits)?.poset, n)?.free } else { true };
            Ok(Instance::compare(
                n,
                k,
                json!([sal_free, sph_free]),
                json!([true, true]),
                "free on [euclidean configurations, sphere]".into(),
            ))
        }
        Theorem::OracleConsistency => {
            let raw = SignVector::all_raw(n, k);
            limits.check("oracle consistency", n, k, raw.len() as u128)?;
            let mut disagreements = 0usize;
            let mut realizable = Vec::new();
            for sv in &raw {
                let combinatorial = PartitionTree::from_signvector(sv).is_ok();
                if combinatorial != oracle::realizable(sv) {
                    disagreements += 1;
                }
                if combinatorial {
                    realizable.push(sv.clone());
                }
            }
            for a in &realizable {
                for b in &realizable {
                    if a.leq(b) != oracle::closure_leq_geometric(a, b)? {
                        disagreements += 1;
                    }
                }
            }
            Ok(Instance::compare(
                n,
                k,
                json!(disagreements),
                json!(0),
                format!("{} raw sign vectors, {} realizable", raw.len(), realizable.len()),
            ))
        }
    }
}

fn cmd_verify(a: &VerifyArgs, format: Format, limits: &Limits, h: &Header) -> Result<Artifact, Failure> {
    reject_dot(format, "verify")?;
    if a.k_max == 0 || a.n_max < 2 {
        return Err(Failure::Usage("need --n-max >= 2 and --k-max >= 1".into()));
    }
    let mut rows = Vec::new();
    for n in 2..=a.n_max {
        for k in 1..=a.k_max {
            rows.push(match verify_instance(a.theorem, n, k, limits) {
                Ok(i) => i,
                Err(e) => Instance::refused(n, k, e)?,
            });
        }
    }
    let ok = rows.iter().all(|r| r.status != "fail");
    let body = match format {
        Format::Json => h.json(json!({ "theorem": a.theorem, "passed": ok, "instances": rows })),
        _ => {
            let mut s = h.comment("#");
            for r in &rows {
                let show = |v: &Option<Value>| v.as_ref().map_or("-".to_string(), Value::to_string);
                let _ = writeln!(
                    s,
                    "{:<7} n={} k={} measured={} predicted={} {}",
                    r.status.to_uppercase(),
                    r.n,
                    r.k,
                    show(&r.measured),
                    show(&r.predicted),
                    r.detail
                );
            }
            let _ = writeln!(s, "{}", if ok { "all instances pass" } else { "some instances fail" });
            s
        }
    };
    Ok(Artifact { body, ok })
}

fn need(x: Option<usize>, flag: &str) -> Result<usize, Failure> {
    x.ok_or_else(|| Failure::Usage(format!("this family needs --{flag}")))
}

fn witness_text(w: &WitnessReport) -> String {
    let mut s = String::new();
    for p in &w.products {
        let _ = writeln!(
            s,
            "  {} : {} factors, zero divisors {}, nonzero {}, coefficient of {} = {}",
            p.expression, p.factors, p.zero_divisors, p.nonzero, p.target, p.target_coefficient
        );
        if let (Some(t), Some(c)) = (&p.leading, &p.leading_coefficient) {
            let _ = writeln!(s, "    leading term {c} {t}");
        }
    }
    let _ = writeln!(s, "  zero-divisor cup-length >= {}", w.cl_lower_bound);
    s
}

fn cmd_tc(a: &TcArgs, format: Format, h: &Header) -> Result<Artifact, Failure> {
    reject_dot(format, "tc")?;
    let n = a.n;
    let mut reports: Vec<TcReport> = Vec::new();
    let mut genus_rows: Vec<Value> = Vec::new();
    let mut witness_case: Option<WitnessCase> = None;
    match a.family {
        TcFamily::SphereProduct => {
            reports.push(tcformulas::tc_sphere_product(&a.ks, n)?);
            witness_case = Some(WitnessCase::SpheresProduct { ks: a.ks.clone(), n });
        }
        TcFamily::Torus => {
            let k = need(a.k, "k")?;
            reports.push(tcformulas::tc_torus(k, n)?);
            witness_case = Some(WitnessCase::SpheresProduct { ks: vec![1; k], n });
        }
        TcFamily::Symplectic => {
            let m = need(a.m, "m")?;
            reports.push(tcformulas::tc_symplectic(m, n)?);
            witness_case = Some(WitnessCase::Cohom { n, m, d: 2 });
        }
        TcFamily::Quaternionic => {
            let m = need(a.m, "m")?;
            reports.push(tcformulas::tc_quaternionic(m, n)?);
            witness_case = Some(WitnessCase::Cohom { n, m, d: 4 });
        }
        TcFamily::TcsSphere => {
            let k = need(a.k, "k")?;
            reports.push(tcformulas::tcs_sphere_upper(n, k)?);
            witness_case = Some(WitnessCase::MultBySphere { n, k });
        }
        TcFamily::Genus => {
            let k = need(a.k, "k")?;
            for i in 2..=n {
                let (r, f) = tcformulas::genus_eps_upper(i, k)?;
                genus_rows.push(json!({ "i": i, "k": k, "rational": r.to_string(), "floor": f }));
            }
        }
        TcFamily::CohomWitness => {
            let m = need(a.m, "m")?;
            if a.d % 2 == 1 {
                return Err(Failure::Usage(format!("cohom-witness needs an even degree, got --d {}", a.d)));
            }
            witness_case = Some(WitnessCase::Cohom { n, m, d: a.d });
        }
    }
    let run_witness = a.witness || a.family == TcFamily::CohomWitness;
    let witness = match (run_witness, witness_case) {
        (true, Some(case)) => Some(cupcalc::verify_witness(&case, &WitnessLimits::default())?),
        (true, None) => return Err(Failure::Usage("no witness product for this family".into())),
        _ => None,
    };
    let ok = witness.as_ref().is_none_or(WitnessReport::nonzero);
    let body = match format {
        Format::Json => {
            let mut doc = serde_json::Map::new();
            if !reports.is_empty() {
                doc.insert("reports".into(), serde_json::to_value(&reports).expect("serializes"));
            }
            if !genus_rows.is_empty() {
                doc.insert("genus".into(), Value::Array(genus_rows));
            }
            if let Some(w) = &witness {
                doc.insert("witness".into(), serde_json::to_value(w).expect("serializes"));
            }
            doc.insert("unreduced".into(), json!(a.unreduced));
            h.json(Value::Object(doc))
        }
        _ => {
            let mut s = h.comment("#");
            for r in &reports {
                let _ = writeln!(s, "{}", r.render(a.unreduced));
                if let Some(v) = r.value {
                    let _ = writeln!(s, "  exact {}", v + usize::from(a.unreduced));
                } else {
                    let _ = writeln!(s, "  lower {}  upper {}", r.lower, r.upper);
                }
                let _ = writeln!(s, "  {}", r.provenance);
            }
            for g in &genus_rows {
                let _ = writeln!(s, "genus(stage {}) <= {} (floor {})", g["i"], g["rational"].as_str().unwrap_or(""), g["floor"]);
            }
            if let Some(w) = &witness {
                if let WitnessCase::Cohom { m, .. } = w.case {
                    let _ = writeln!(s, "TC_{n} >= {}", m * n);
                }
                s.push_str(&witness_text(w));
            }
            s
        }
    };
    Ok(Artifact { body, ok })
}
