//! Browser demo bindings: parse a base list typed into the page, then
//! serve the lattice-point cloud of `P + uΔ + t∇`, the invariant
//! polynomials, and the activity partition as JSON for the canvas to
//! draw. Everything here is a thin wrapper over the core crate; the
//! functions are plain string-to-string so they are testable natively
//! and callable from JavaScript identically.

use polyq_core::activity::{self, PartitionSide};
use polyq_core::geometry::{self, MinkowskiConfig};
use polyq_core::poly;
use polyq_core::{base, ElementOrder, Polymatroid};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

fn parse_bases(text: &str) -> Result<Polymatroid, String> {
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let cleaned = line.trim();
        if cleaned.is_empty() || cleaned.starts_with('#') {
            continue;
        }
        let row: Result<Vec<i64>, _> = cleaned
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|p| !p.is_empty())
            .map(|p| p.parse())
            .collect();
        match row {
            Ok(v) if !v.is_empty() => vectors.push(v),
            _ => return Err(format!("line {}: not an integer vector", line_no + 1)),
        }
    }
    if vectors.is_empty() {
        return Err("no base vectors given".into());
    }
    let n = vectors[0].len();
    base::polymatroid_from_bases(n, &vectors).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ErrorOut {
    error: String,
}

fn err_json(message: String) -> String {
    serde_json::to_string(&ErrorOut { error: message }).expect("error serializes")
}

#[derive(Serialize)]
struct AnalyzeOut {
    n: usize,
    bases: usize,
    rank: i64,
    matroid: bool,
    qprime: String,
    tutte: Option<String>,
    internal: String,
    external: String,
}

/// Invariants of the typed-in polymatroid, as a JSON object.
#[wasm_bindgen]
pub fn analyze(bases_text: &str) -> String {
    let m = match parse_bases(bases_text) {
        Ok(m) => m,
        Err(e) => return err_json(e),
    };
    let qprime = match geometry::q_prime(&m) {
        Ok(qp) => qp,
        Err(e) => return err_json(e.to_string()),
    };
    let tutte = if m.is_matroid() {
        poly::tutte_from_qprime(&qprime, m.n(), m.total_rank())
            .ok()
            .map(|t| t.to_string())
    } else {
        None
    };
    let order = ElementOrder::natural(m.n());
    let out = AnalyzeOut {
        n: m.n(),
        bases: m.base_count(),
        rank: m.total_rank(),
        matroid: m.is_matroid(),
        qprime: qprime.to_string(),
        tutte,
        internal: activity::internal_polynomial(&m, &order).to_string(),
        external: activity::external_polynomial(&m, &order).to_string(),
    };
    serde_json::to_string(&out).expect("analysis serializes")
}

#[derive(Serialize)]
struct CloudOut {
    n: usize,
    t: u32,
    u: u32,
    count: i64,
    points: Vec<Vec<i64>>,
    bases: Vec<Vec<i64>>,
}

/// Lattice points of `P + uΔ + t∇`, with the bases tagged separately so
/// the page can color them.
#[wasm_bindgen]
pub fn lattice_cloud(bases_text: &str, t: u32, u: u32) -> String {
    let m = match parse_bases(bases_text) {
        Ok(m) => m,
        Err(e) => return err_json(e),
    };
    let cfg = MinkowskiConfig::new(t, u);
    let points = match geometry::lattice_points(&m, cfg) {
        Ok(points) => points,
        Err(e) => return err_json(e.to_string()),
    };
    let out = CloudOut {
        n: m.n(),
        t,
        u,
        count: points.len() as i64,
        points,
        bases: m.bases().iter().map(|b| b.coords().to_vec()).collect(),
    };
    serde_json::to_string(&out).expect("cloud serializes")
}

#[derive(Serialize)]
struct CellOut {
    base: Vec<i64>,
    active: Vec<usize>,
    dimension: usize,
    points: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct PartitionOut {
    n: usize,
    t: u32,
    side: String,
    total: i64,
    cells: Vec<CellOut>,
}

/// The simplex partition of `P + t∇` (internal side) or `P + tΔ`
/// (external side): every lattice point grouped under its terminal base.
#[wasm_bindgen]
pub fn activity_cells(bases_text: &str, t: u32, internal: bool) -> String {
    let m = match parse_bases(bases_text) {
        Ok(m) => m,
        Err(e) => return err_json(e),
    };
    let side = if internal {
        PartitionSide::Internal
    } else {
        PartitionSide::External
    };
    let report = match activity::activity_partition_check(&m, t, side) {
        Ok(report) => report,
        Err(e) => return err_json(e.to_string()),
    };
    let cells = report
        .cells
        .iter()
        .map(|cell| {
            let dirs: Vec<usize> = cell.active.elements().collect();
            let mut points = Vec::new();
            expand_cell(
                &dirs,
                t as usize,
                cell.base.coords(),
                internal,
                &mut Vec::new(),
                &mut points,
            );
            points.sort();
            points.dedup();
            CellOut {
                base: cell.base.coords().to_vec(),
                active: dirs,
                dimension: cell.dimension,
                points,
            }
        })
        .collect();
    let out = PartitionOut {
        n: m.n(),
        t,
        side: if internal { "internal" } else { "external" }.into(),
        total: report.total_points,
        cells,
    };
    serde_json::to_string(&out).expect("partition serializes")
}

fn expand_cell(
    dirs: &[usize],
    t: usize,
    base: &[i64],
    internal: bool,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<i64>>,
) {
    if t == 0 {
        let mut v = base.to_vec();
        for &j in chosen.iter() {
            if internal {
                v[j - 1] -= 1;
            } else {
                v[j - 1] += 1;
            }
        }
        out.push(v);
        return;
    }
    for &d in dirs {
        if chosen.last().is_some_and(|&last| d < last) {
            continue;
        }
        chosen.push(d);
        expand_cell(dirs, t - 1, base, internal, chosen, out);
        chosen.pop();
    }
}
