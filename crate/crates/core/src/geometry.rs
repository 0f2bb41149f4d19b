//! Lattice-point geometry of `P(M) + uΔ + t∇`.
//!
//! Two independent membership oracles are provided. The halfspace test
//! follows from support-function additivity of the Minkowski sum; the
//! decomposition search works directly from the definition, writing a
//! point as base + increments - decrements. The test suites force the two
//! to agree; everything else uses the fast one.

use crate::base::BaseVector;
use crate::error::{Error, Result};
use crate::ground::Subset;
use crate::poly::BivariatePolynomial;
use crate::rank::Polymatroid;
use std::collections::{HashMap, HashSet};

/// Dilation factors of the two simplices: `u` scales the standard simplex
/// (increments), `t` scales its reflection (decrements).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinkowskiConfig {
    pub t: u32,
    pub u: u32,
}

impl MinkowskiConfig {
    pub fn new(t: u32, u: u32) -> Self {
        MinkowskiConfig { t, u }
    }
}

/// Default cap on the bounding-box volume scanned by the counter.
pub const BOX_LIMIT: u128 = 1_000_000_000;

/// Halfspace membership test for `P(M) + uΔ + t∇`.
///
/// A lattice point lies in the sum iff its coordinate sum is
/// `r(E) + u - t` and `q·e_S ≤ r(S) + u` for every nonempty proper `S`;
/// the lower bounds follow by complementation.
pub fn member_minkowski(m: &Polymatroid, q: &[i64], cfg: MinkowskiConfig) -> bool {
    if q.len() != m.n() {
        return false;
    }
    let ground = m.ground();
    let full = ground.full_subset();
    let total: i64 = q.iter().sum();
    if total != m.total_rank() + cfg.u as i64 - cfg.t as i64 {
        return false;
    }
    for s in ground.subsets() {
        if s.is_empty() || s == full {
            continue;
        }
        let dot: i64 = s.elements().map(|e| q[e - 1]).sum();
        if dot > m.rank(s) + cfg.u as i64 {
            return false;
        }
    }
    true
}

type PointSet = HashSet<Vec<i64>>;

/// Decomposition-search membership oracle: a point is in the sum iff it
/// can be written as a base plus `u` unit increments minus `t` unit
/// decrements. Reachable sets are memoized per `(t, u)`.
pub struct DecompositionOracle<'a> {
    m: &'a Polymatroid,
    cache: std::cell::RefCell<HashMap<(u32, u32), PointSet>>,
}

impl<'a> DecompositionOracle<'a> {
    pub fn new(m: &'a Polymatroid) -> Self {
        DecompositionOracle {
            m,
            cache: std::cell::RefCell::new(HashMap::new()),
        }
    }

    pub fn member(&self, q: &[i64], cfg: MinkowskiConfig) -> bool {
        if q.len() != self.m.n() {
            return false;
        }
        self.reachable(cfg);
        self.cache.borrow()[&(cfg.t, cfg.u)].contains(q)
    }

    pub fn count(&self, cfg: MinkowskiConfig) -> i64 {
        self.reachable(cfg);
        self.cache.borrow()[&(cfg.t, cfg.u)].len() as i64
    }

    fn reachable(&self, cfg: MinkowskiConfig) {
        if self.cache.borrow().contains_key(&(cfg.t, cfg.u)) {
            return;
        }
        let n = self.m.n();
        // All multisets of u increments over the bases, one layer at a time.
        let mut ups: HashSet<Vec<i64>> =
            self.m.bases().iter().map(|b| b.coords().to_vec()).collect();
        for layer in 1..=cfg.u {
            if let Some(hit) = self.cache.borrow().get(&(0, layer)) {
                ups = hit.clone();
                continue;
            }
            let mut next = HashSet::new();
            for p in &ups {
                for i in 0..n {
                    let mut v = p.clone();
                    v[i] += 1;
                    next.insert(v);
                }
            }
            ups = next;
            self.cache.borrow_mut().insert((0, layer), ups.clone());
        }
        let mut downs = ups;
        for layer in 1..=cfg.t {
            if let Some(hit) = self.cache.borrow().get(&(layer, cfg.u)) {
                downs = hit.clone();
                continue;
            }
            let mut next = HashSet::new();
            for p in &downs {
                for i in 0..n {
                    let mut v = p.clone();
                    v[i] -= 1;
                    next.insert(v);
                }
            }
            downs = next;
            self.cache
                .borrow_mut()
                .insert((layer, cfg.u), downs.clone());
        }
        self.cache.borrow_mut().insert((cfg.t, cfg.u), downs);
    }
}

/// Per-coordinate bounding box `[-t, r({i}) + u]` of the sum.
pub fn bounding_box(m: &Polymatroid, cfg: MinkowskiConfig) -> Vec<(i64, i64)> {
    (1..=m.n())
        .map(|e| (-(cfg.t as i64), m.rank(Subset::singleton(e)) + cfg.u as i64))
        .collect()
}

/// Counts the lattice points of `P(M) + uΔ + t∇` by scanning the bounding
/// box, with subset-constraint pruning on coordinate prefixes. The result
/// is exactly the number of box points passing `member_minkowski`.
pub fn count_lattice_points(m: &Polymatroid, cfg: MinkowskiConfig) -> Result<i64> {
    count_lattice_points_limited(m, cfg, BOX_LIMIT)
}

pub fn count_lattice_points_limited(
    m: &Polymatroid,
    cfg: MinkowskiConfig,
    limit: u128,
) -> Result<i64> {
    let bounds = bounding_box(m, cfg);
    let volume: u128 = bounds
        .iter()
        .map(|(lo, hi)| (hi - lo + 1) as u128)
        .product();
    if volume > limit {
        return Err(Error::BoxOverflow(volume, limit));
    }
    let mut count = 0i64;
    let mut point = vec![0i64; m.n()];
    let target = m.total_rank() + cfg.u as i64 - cfg.t as i64;
    scan(m, cfg, &bounds, 0, 0, target, &mut point, &mut count);
    Ok(count)
}

/// Collects the lattice points themselves (same scan as the counter).
pub fn lattice_points(m: &Polymatroid, cfg: MinkowskiConfig) -> Result<Vec<Vec<i64>>> {
    let bounds = bounding_box(m, cfg);
    let volume: u128 = bounds
        .iter()
        .map(|(lo, hi)| (hi - lo + 1) as u128)
        .product();
    if volume > BOX_LIMIT {
        return Err(Error::BoxOverflow(volume, BOX_LIMIT));
    }
    let mut out = Vec::new();
    let mut point = vec![0i64; m.n()];
    collect(m, cfg, &bounds, 0, &mut point, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn scan(
    m: &Polymatroid,
    cfg: MinkowskiConfig,
    bounds: &[(i64, i64)],
    depth: usize,
    sum: i64,
    target: i64,
    point: &mut Vec<i64>,
    count: &mut i64,
) {
    let n = m.n();
    if depth == n {
        debug_assert_eq!(sum, target);
        *count += 1;
        return;
    }
    let tail_lo: i64 = bounds[depth + 1..].iter().map(|(lo, _)| lo).sum();
    let tail_hi: i64 = bounds[depth + 1..].iter().map(|(_, hi)| hi).sum();
    let (lo, hi) = bounds[depth];
    for v in lo..=hi {
        let s = sum + v;
        if s + tail_lo > target || s + tail_hi < target {
            continue;
        }
        point[depth] = v;
        if prefix_feasible(m, cfg, depth, point) {
            scan(m, cfg, bounds, depth + 1, s, target, point, count);
        }
    }
}

fn collect(
    m: &Polymatroid,
    cfg: MinkowskiConfig,
    bounds: &[(i64, i64)],
    depth: usize,
    point: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if depth == m.n() {
        if member_minkowski(m, point, cfg) {
            out.push(point.clone());
        }
        return;
    }
    let (lo, hi) = bounds[depth];
    for v in lo..=hi {
        point[depth] = v;
        if prefix_feasible(m, cfg, depth, point) {
            collect(m, cfg, bounds, depth + 1, point, out);
        }
    }
}

/// Checks every subset constraint whose maximal element is the coordinate
/// just fixed; earlier prefixes were already checked on the way down.
fn prefix_feasible(m: &Polymatroid, cfg: MinkowskiConfig, depth: usize, point: &[i64]) -> bool {
    let full = m.ground().full_subset();
    let newest = 1u32 << depth;
    let rest = newest - 1;
    let mut t = rest;
    loop {
        let s = Subset(t | newest);
        if s != full {
            let dot: i64 = s.elements().map(|e| point[e - 1]).sum();
            if dot > m.rank(s) + cfg.u as i64 {
                return false;
            }
        }
        if t == 0 {
            return true;
        }
        t = (t - 1) & rest;
    }
}

/// The invariant in the binomial basis: `Q(t,u) = Σ c_ij C(t,i) C(u,j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTable {
    n: usize,
    c: Vec<Vec<i64>>,
}

impl QTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient of `C(t,i) C(u,j)`.
    pub fn coefficient(&self, i: usize, j: usize) -> i64 {
        self.c[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.c
    }

    /// Evaluates the fitted polynomial.
    pub fn evaluate(&self, t: u32, u: u32) -> i64 {
        let mut acc = 0i64;
        for (i, row) in self.c.iter().enumerate() {
            for (j, &cij) in row.iter().enumerate() {
                acc += cij * binomial(t as i64, i as i64) * binomial(u as i64, j as i64);
            }
        }
        acc
    }

    /// The change of basis `C(t,i)C(u,j) -> (x-1)^i (y-1)^j`.
    pub fn q_prime(&self) -> BivariatePolynomial {
        let x = BivariatePolynomial::var_x();
        let y = BivariatePolynomial::var_y();
        let one = BivariatePolynomial::one();
        let xm = &x - &one;
        let ym = &y - &one;
        let mut acc = BivariatePolynomial::zero();
        for (i, row) in self.c.iter().enumerate() {
            for (j, &cij) in row.iter().enumerate() {
                if cij == 0 {
                    continue;
                }
                let term = &xm.pow(i as u32) * &ym.pow(j as u32);
                acc = &acc + &term.scale(&num_bigint::BigInt::from(cij));
            }
        }
        acc
    }
}

/// `C(n, k)` for integer `n ≥ 0`; zero outside the triangle.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of ways to write `m` as a sum of `p` ordered nonnegative
/// integers: `C(m+p-1, p-1)`, with the empty composition counting one
/// way to reach zero.
fn compositions(m: i64, p: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    if p == 0 {
        return i64::from(m == 0);
    }
    binomial(m + p - 1, p - 1)
}

/// Interpolates the counting polynomial from counts on the triangular
/// grid `t + u ≤ n - 1` via iterated forward differences, then verifies
/// the degree bound against at least three extra counts with `t + u = n`.
#[allow(clippy::needless_range_loop)]
pub fn q_table(m: &Polymatroid) -> Result<QTable> {
    let n = m.n();
    let mut counts = vec![vec![0i64; n]; n];
    for t in 0..n {
        for u in 0..n - t {
            counts[t][u] = count_lattice_points(m, MinkowskiConfig::new(t as u32, u as u32))?;
        }
    }
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n - i {
            let mut acc = 0i64;
            for a in 0..=i {
                for b in 0..=j {
                    let sign = if (i - a + j - b) % 2 == 0 { 1 } else { -1 };
                    acc += sign
                        * binomial(i as i64, a as i64)
                        * binomial(j as i64, b as i64)
                        * counts[a][b];
                }
            }
            c[i][j] = acc;
        }
    }
    let table = QTable { n, c };

    let mut probes: Vec<(u32, u32)> = vec![
        (n as u32, 0),
        (0, n as u32),
        ((n / 2) as u32, (n - n / 2) as u32),
    ];
    probes.sort();
    probes.dedup();
    while probes.len() < 3 {
        let extra = (1, n as u32);
        if probes.contains(&extra) {
            probes.push((n as u32, 1));
        } else {
            probes.push(extra);
        }
        probes.sort();
        probes.dedup();
    }
    for (t, u) in probes {
        let counted = count_lattice_points(m, MinkowskiConfig::new(t, u))?;
        let fitted = table.evaluate(t, u);
        if counted != fitted {
            return Err(Error::DegreeCheckFailed {
                t,
                u,
                counted,
                fitted,
            });
        }
    }
    Ok(table)
}

/// The invariant in the power basis, straight from the counts.
pub fn q_prime(m: &Polymatroid) -> Result<BivariatePolynomial> {
    Ok(q_table(m)?.q_prime())
}

/// Closed-form count for matroids: a sum over subsets of products of
/// composition counts, with cancellation depth `k`.
pub fn count_matroid_closed_form(m: &Polymatroid, cfg: MinkowskiConfig) -> Result<i64> {
    if !m.is_matroid() {
        return Err(Error::NotAMatroid("closed-form count".into()));
    }
    let ground = m.ground();
    let n = m.n() as i64;
    let rm = m.total_rank();
    let (i, j) = (cfg.u as i64, cfg.t as i64); // i scales Δ, j scales ∇
    let mut acc = 0i64;
    for s in ground.subsets() {
        let size = s.len() as i64;
        let null = size - m.rank(s);
        let cork = rm - m.rank(s);
        for k in 0..=i.min(j) {
            acc += compositions(i - k - null, size) * compositions(j - k - cork, n - size);
        }
    }
    Ok(acc)
}

/// A base vector wrapped back from a raw point, for callers that need it.
pub fn base_from_point(m: &Polymatroid, q: &[i64]) -> Option<BaseVector> {
    if crate::base::is_base(m, q) {
        Some(BaseVector::new(q.to_vec()))
    } else {
        None
    }
}
