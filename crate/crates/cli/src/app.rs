//! Command dispatch for the `polyq` binary.
//!
//! Exit codes: 0 success, 1 domain error (bad input), 2 integrity failure
//! (an identity the engine guarantees was violated), 64 usage.

use crate::io::{read_polymatroid, InputDocument, IoError};
use clap::{Args, Parser, Subcommand};
use polyq_core::activity;
use polyq_core::{constructions, corpus, dawson, geometry, poly, tutte, verify};
use polyq_core::{ElementOrder, Error, MinkowskiConfig, Polymatroid, Subset};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INTEGRITY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(
    name = "polyq",
    about = "Exact lattice-point invariants of matroid and polymatroid base polytopes",
    disable_help_subcommand = true
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Ground-set size, base count, rank, and the matroid flag.
    Info(FileArg),
    /// Number of lattice points of P + uΔ + t∇.
    Count(CountArgs),
    /// Binomial-basis coefficient table of the counting polynomial.
    Q(FileArg),
    /// The invariant Q' in the power basis, as a canonical string.
    Qprime(FileArg),
    /// Tutte polynomial of a matroid; all four engines by default.
    Tutte(TutteArgs),
    /// Transfer activities per base, and the activity polynomials.
    Activities(ActivitiesArgs),
    /// Dawson partition, top-degree faces, and the coefficient report.
    Dawson(FileArg),
    /// Emit the s-dual as a new document.
    Dual(DualArgs),
    /// Emit the direct sum of two documents.
    Dsum(DsumArgs),
    /// Emit one slice of the polytope along an element.
    Slice(SliceArgs),
    /// Emit the relaxation of a circuit-hyperplane.
    Relax(RelaxArgs),
    /// Emit a stock or pseudorandom input document.
    Gen(GenArgs),
    /// Run every applicable identity check against the input.
    Verify(FileArg),
}

#[derive(Args)]
pub struct FileArg {
    pub file: String,
}

#[derive(Args)]
pub struct CountArgs {
    pub file: String,
    #[arg(long)]
    pub t: u32,
    #[arg(long)]
    pub u: u32,
    /// Dump the lattice points as CSV instead of printing the count.
    #[arg(long)]
    pub emit_points: bool,
}

#[derive(Args)]
pub struct TutteArgs {
    pub file: String,
    /// subset | delcon | activity | lattice (default: all, cross-checked).
    #[arg(long)]
    pub method: Option<String>,
}

#[derive(Args)]
pub struct ActivitiesArgs {
    pub file: String,
    /// Element order such as "2,3,1"; natural order by default.
    #[arg(long)]
    pub order: Option<String>,
    /// Print only the bivariate activity enumerator.
    #[arg(long)]
    pub enumerator: bool,
    /// Print only the internal polynomial.
    #[arg(long)]
    pub internal: bool,
    /// Print only the external polynomial.
    #[arg(long)]
    pub external: bool,
}

#[derive(Args)]
pub struct DualArgs {
    pub file: String,
    #[arg(long)]
    pub s: i64,
}

#[derive(Args)]
pub struct DsumArgs {
    pub file1: String,
    pub file2: String,
}

#[derive(Args)]
pub struct SliceArgs {
    pub file: String,
    #[arg(long)]
    pub element: usize,
    #[arg(long)]
    pub level: i64,
}

#[derive(Args)]
pub struct RelaxArgs {
    pub file: String,
    /// The circuit-hyperplane, e.g. "1,2".
    #[arg(long)]
    pub set: String,
}

#[derive(Args)]
pub struct GenArgs {
    /// uniform | graphic-k4 | paper-ex1 | paper-ex75 | random-polymatroid
    #[arg(long)]
    pub family: String,
    /// Comma-separated key=value pairs, e.g. "r=2,n=4".
    #[arg(long, default_value = "")]
    pub params: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub name: Option<String>,
}

pub enum Failure {
    Domain(String),
    Integrity(String),
    /// A failing verification run: the report still belongs on stdout.
    FailedReport(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Integrity(_) | Failure::FailedReport(_) => EXIT_INTEGRITY,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Integrity(m) | Failure::FailedReport(m) => m,
        }
    }

    pub fn is_report(&self) -> bool {
        matches!(self, Failure::FailedReport(_))
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Errors raised while computing on an already-validated input signal a
/// broken identity; errors about the input itself are the caller's fault.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DegreeCheckFailed { .. }
            | Error::NotDivisible(_)
            | Error::NonTermination(_)
            | Error::NotAPartition(_)
            | Error::OrderDependenceDetected(_)
            | Error::PartitionViolation(_, _)
            | Error::IdentityFailed(_) => Failure::Integrity(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

pub fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Info(a) => info(&a.file, cli.json),
        Command::Count(a) => count(&a, cli.json),
        Command::Q(a) => q_matrix(&a.file),
        Command::Qprime(a) => qprime(&a.file, cli.json),
        Command::Tutte(a) => tutte_cmd(&a, cli.json),
        Command::Activities(a) => activities(&a, cli.json),
        Command::Dawson(a) => dawson_cmd(&a.file, cli.json),
        Command::Dual(a) => dual(&a),
        Command::Dsum(a) => dsum(&a),
        Command::Slice(a) => slice(&a),
        Command::Relax(a) => relax(&a),
        Command::Gen(a) => gen(&a),
        Command::Verify(a) => verify_cmd(&a.file, cli.json),
    }
}

fn info(path: &str, as_json: bool) -> Result<String, Failure> {
    let (name, m) = read_polymatroid(path)?;
    if as_json {
        Ok(json!({
            "format": crate::io::FORMAT,
            "name": name,
            "n": m.n(),
            "bases": m.base_count(),
            "rank": m.total_rank(),
            "matroid": m.is_matroid(),
        })
        .to_string())
    } else {
        let mut out = String::new();
        if let Some(name) = name {
            out.push_str(&format!("name: {name}\n"));
        }
        out.push_str(&format!("n: {}\n", m.n()));
        out.push_str(&format!("bases: {}\n", m.base_count()));
        out.push_str(&format!("rank: {}\n", m.total_rank()));
        out.push_str(&format!("matroid: {}", m.is_matroid()));
        Ok(out)
    }
}

fn count(args: &CountArgs, as_json: bool) -> Result<String, Failure> {
    let (_, m) = read_polymatroid(&args.file)?;
    let cfg = MinkowskiConfig::new(args.t, args.u);
    if args.emit_points {
        let points = geometry::lattice_points(&m, cfg)?;
        let mut out = String::new();
        out.push_str(
            &(1..=m.n())
                .map(|i| format!("x{i}"))
                .collect::<Vec<_>>()
                .join(","),
        );
        for p in points {
            out.push('\n');
            out.push_str(
                &p.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
        return Ok(out);
    }
    let value = geometry::count_lattice_points(&m, cfg)?;
    if as_json {
        Ok(json!({"t": args.t, "u": args.u, "count": value}).to_string())
    } else {
        Ok(value.to_string())
    }
}

fn q_matrix(path: &str) -> Result<String, Failure> {
    let (_, m) = read_polymatroid(path)?;
    let table = geometry::q_table(&m)?;
    Ok(serde_json::to_string(table.matrix()).expect("matrix serializes"))
}

fn qprime(path: &str, as_json: bool) -> Result<String, Failure> {
    let (_, m) = read_polymatroid(path)?;
    let qp = geometry::q_prime(&m)?;
    if as_json {
        Ok(json!({"qprime": qp.to_string()}).to_string())
    } else {
        Ok(qp.to_string())
    }
}

fn tutte_cmd(args: &TutteArgs, as_json: bool) -> Result<String, Failure> {
    let (_, m) = read_polymatroid(&args.file)?;
    if !m.is_matroid() {
        return Err(Failure::Domain("tutte requires a matroid input".into()));
    }
    let natural = ElementOrder::natural(m.n());
    let lattice_route = |m: &Polymatroid| -> Result<_, Error> {
        poly::tutte_from_qprime(&geometry::q_prime(m)?, m.n(), m.total_rank())
    };
    let result = match args.method.as_deref() {
        Some("subset") => tutte::tutte_subset_sum(&m)?,
        Some("delcon") => tutte::tutte_deletion_contraction(&m)?,
        Some("activity") => tutte::tutte_activity(&m, &natural)?,
        Some("lattice") => {
            let t = lattice_route(&m)?;
            if t.has_negative_coefficient() {
                eprintln!("warning: recovered polynomial has negative coefficients");
            }
            t
        }
        Some(other) => {
            return Err(Failure::Domain(format!("unknown method {other:?}")));
        }
        None => {
            let subset = tutte::tutte_subset_sum(&m)?;
            let delcon = tutte::tutte_deletion_contraction(&m)?;
            let act = tutte::tutte_activity(&m, &natural)?;
            let lattice = lattice_route(&m)?;
            if subset != delcon || subset != act || subset != lattice {
                return Err(Failure::Integrity(format!(
                    "tutte engines disagree: subset {subset}, delcon {delcon}, \
                     activity {act}, lattice {lattice}"
                )));
            }
            subset
        }
    };
    if as_json {
        Ok(json!({"tutte": result.to_string()}).to_string())
    } else {
        Ok(result.to_string())
    }
}

fn parse_order(n: usize, text: &str) -> Result<ElementOrder, Failure> {
    let seq: Result<Vec<usize>, _> = text.split(',').map(|p| p.trim().parse()).collect();
    let seq = seq.map_err(|_| Failure::Domain(format!("bad order {text:?}")))?;
    if seq.len() != n {
        return Err(Failure::Domain(format!(
            "order has {} entries, ground set has {n}",
            seq.len()
        )));
    }
    ElementOrder::new(seq).map_err(|e| Failure::Domain(e.to_string()))
}

fn activities(args: &ActivitiesArgs, as_json: bool) -> Result<String, Failure> {
    let (_, m) = read_polymatroid(&args.file)?;
    let order = match &args.order {
        Some(text) => parse_order(m.n(), text)?,
        None => ElementOrder::natural(m.n()),
    };
    let enumerator = activity::activity_enumerator(&m, &order);
    let internal = activity::internal_polynomial(&m, &order);
    let external = activity::external_polynomial(&m, &order);
    if args.enumerator {
        return Ok(enumerator.to_string());
    }
    if args.internal {
        return Ok(internal.to_string());
    }
    if args.external {
        return Ok(external.to_string());
    }
    let mut rows = Vec::new();
    for b in m.bases() {
        let rec = activity::kalman_activities(&m, b, &order)?;
        rows.push((b.clone(), rec));
    }
    if as_json {
        let table: Vec<_> = rows
            .iter()
            .map(|(b, rec)| {
                json!({
                    "base": b.coords(),
                    "int_active": rec.int_active.elements().collect::<Vec<_>>(),
                    "ext_active": rec.ext_active.elements().collect::<Vec<_>>(),
                    "iota": rec.iota,
                    "epsilon": rec.epsilon,
                })
            })
            .collect();
        Ok(json!({
            "order": order.ascending(),
            "bases": table,
            "enumerator": enumerator.to_string(),
            "internal": internal.to_string(),
            "external": external.to_string(),
        })
        .to_string())
    } else {
        let mut out = String::new();
        for (b, rec) in &rows {
            out.push_str(&format!(
                "base {b}: iota {} {}, epsilon {} {}\n",
                rec.iota, rec.int_active, rec.epsilon, rec.ext_active
            ));
        }
        out.push_str(&format!("enumerator: {enumerator}\n"));
        out.push_str(&format!("internal: {internal}\n"));
        out.push_str(&format!("external: {external}"));
        Ok(out)
    }
}

fn dawson_cmd(path: &str, as_json: bool) -> Result<String, Failure> {
    let (_, m) = read_polymatroid(path)?;
    if !m.is_matroid() {
        return Err(Failure::Domain("dawson requires a matroid input".into()));
    }
    let order = ElementOrder::natural(m.n());
    let parts = dawson::dawson_partition(&m, &order)?;
    let faces = dawson::top_degree_faces(&m)?;
    let report = dawson::coefficient_report(&m)?;
    let enumerator = dawson::interval_enumerator(&m, &order)?;
    if as_json {
        Ok(json!({
            "parts": parts.iter().map(|p| json!({
                "lower": p.lower.elements().collect::<Vec<_>>(),
                "upper": p.upper.elements().collect::<Vec<_>>(),
                "basis": p.basis.elements().collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "faces": faces.iter().map(|f| json!({
                "x": f.partition.x.elements().collect::<Vec<_>>(),
                "y": f.partition.y.elements().collect::<Vec<_>>(),
                "basis": f.basis.elements().collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "interval_enumerator": enumerator.to_string(),
            "alternating": report.alternating,
            "top_degree_binomial": report.top_degree_binomial,
            "grading": report.grading,
        })
        .to_string())
    } else {
        let mut out = String::new();
        for p in &parts {
            out.push_str(&format!(
                "part [{}, {}] basis {}\n",
                p.lower, p.upper, p.basis
            ));
        }
        for f in &faces {
            out.push_str(&format!(
                "face X {} Y {} basis {}\n",
                f.partition.x, f.partition.y, f.basis
            ));
        }
        out.push_str(&format!("interval enumerator: {enumerator}\n"));
        out.push_str(&format!(
            "alternation: {}\n",
            if report.alternating { "pass" } else { "fail" }
        ));
        out.push_str(&format!(
            "top-degree: {}\n",
            if report.top_degree_binomial {
                "pass"
            } else {
                "fail"
            }
        ));
        out.push_str(&format!(
            "grading: {}",
            match report.grading {
                Some(true) => "pass",
                Some(false) => "fail",
                None => "n/a",
            }
        ));
        Ok(out)
    }
}

fn emit(name: String, m: &Polymatroid) -> Result<String, Failure> {
    Ok(InputDocument::from_polymatroid(Some(name), m).to_json())
}

fn dual(args: &DualArgs) -> Result<String, Failure> {
    let (name, m) = read_polymatroid(&args.file)?;
    let dual = constructions::s_dual(&m, args.s)?;
    let base = name.unwrap_or_else(|| "input".into());
    emit(format!("{base}-dual-s{}", args.s), &dual)
}

fn dsum(args: &DsumArgs) -> Result<String, Failure> {
    let (name1, m1) = read_polymatroid(&args.file1)?;
    let (name2, m2) = read_polymatroid(&args.file2)?;
    let sum = constructions::direct_sum(&m1, &m2)?;
    let base1 = name1.unwrap_or_else(|| "left".into());
    let base2 = name2.unwrap_or_else(|| "right".into());
    emit(format!("{base1}-plus-{base2}"), &sum)
}

fn slice(args: &SliceArgs) -> Result<String, Failure> {
    let (name, m) = read_polymatroid(&args.file)?;
    let family = constructions::slices(&m, args.element)?;
    let level = family.level(args.level).ok_or_else(|| {
        Failure::Domain(format!(
            "level {} outside [{}, {}]",
            args.level, family.k_min, family.k_max
        ))
    })?;
    let base = name.unwrap_or_else(|| "input".into());
    emit(
        format!("{base}-slice-{}-at-{}", args.element, args.level),
        level,
    )
}

fn relax(args: &RelaxArgs) -> Result<String, Failure> {
    let (name, m) = read_polymatroid(&args.file)?;
    let elements: Result<Vec<usize>, _> = args.set.split(',').map(|p| p.trim().parse()).collect();
    let elements = elements.map_err(|_| Failure::Domain(format!("bad set {:?}", args.set)))?;
    if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > m.n()) {
        return Err(Failure::Domain(format!("element {bad} out of range")));
    }
    let relaxed = constructions::relax_circuit_hyperplane(&m, Subset::from_elements(elements))?;
    let base = name.unwrap_or_else(|| "input".into());
    emit(format!("{base}-relaxed"), &relaxed)
}

fn gen(args: &GenArgs) -> Result<String, Failure> {
    let params: Vec<(String, String)> = args
        .params
        .split(',')
        .filter(|p| !p.is_empty())
        .map(|pair| {
            let mut it = pair.splitn(2, '=');
            let key = it.next().unwrap_or_default().trim().to_string();
            let value = it.next().unwrap_or_default().trim().to_string();
            (key, value)
        })
        .collect();
    let (default_name, m) = corpus::family(&args.family, &params, args.seed)?;
    let name = args.name.clone().unwrap_or(default_name);
    emit(name, &m)
}

fn verify_cmd(path: &str, as_json: bool) -> Result<String, Failure> {
    let (name, m) = read_polymatroid(path)?;
    let report = verify::verify(&m);
    let rendered = if as_json {
        json!({
            "format": crate::io::FORMAT,
            "name": name,
            "n": m.n(),
            "matroid": m.is_matroid(),
            "checks": report.checks.iter().map(|c| json!({
                "id": c.id,
                "status": match c.status {
                    verify::CheckStatus::Pass => "pass",
                    verify::CheckStatus::Fail => "fail",
                    verify::CheckStatus::Info => "info",
                },
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "failed": report.failed(),
            "ok": report.ok(),
        })
        .to_string()
    } else {
        let mut out = String::new();
        for c in &report.checks {
            let status = match c.status {
                verify::CheckStatus::Pass => "pass",
                verify::CheckStatus::Fail => "FAIL",
                verify::CheckStatus::Info => "info",
            };
            if c.detail.is_empty() {
                out.push_str(&format!("{}: {status}\n", c.id));
            } else {
                out.push_str(&format!("{}: {status} ({})\n", c.id, c.detail));
            }
        }
        out.push_str(&format!(
            "{} checks, {} failed",
            report.checks.len(),
            report.failed()
        ));
        out
    };
    if report.ok() {
        Ok(rendered)
    } else {
        Err(Failure::FailedReport(rendered))
    }
}
