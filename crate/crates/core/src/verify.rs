//! The one-shot verification suite: every identity the engine knows,
//! run against a single input, with per-check results.
//!
//! Check selection adapts to the input (matroid-only identities are
//! skipped for proper polymatroids) and to its size, using the same
//! bounds everywhere: exhaustive work up to four elements, seeded
//! sampling beyond.

use crate::activity::{self, PartitionSide};
use crate::base;
use crate::constructions;
use crate::corpus::Rng;
use crate::dawson::{self, PartitionXY};
use crate::error::Result;
use crate::geometry::{self, DecompositionOracle, MinkowskiConfig};
use crate::ground::{ElementOrder, Subset};
use crate::poly::{self, BivariatePolynomial};
use crate::rank::Polymatroid;
use crate::tutte;
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Informational: recorded, never affects the verdict.
    Info,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .count()
    }

    fn push(&mut self, id: &str, outcome: Result<Option<String>>) {
        match outcome {
            Ok(None) => self.checks.push(CheckResult {
                id: id.into(),
                status: CheckStatus::Pass,
                detail: String::new(),
            }),
            Ok(Some(info)) => self.checks.push(CheckResult {
                id: id.into(),
                status: CheckStatus::Info,
                detail: info,
            }),
            Err(e) => self.checks.push(CheckResult {
                id: id.into(),
                status: CheckStatus::Fail,
                detail: e.to_string(),
            }),
        }
    }
}

fn fail(msg: String) -> Result<Option<String>> {
    Err(crate::error::Error::IdentityFailed(msg))
}

const PASS: Result<Option<String>> = Ok(None);

fn sample_seed(n: usize) -> u64 {
    0x7e57_c0de_0000 + n as u64
}

/// Runs every applicable check. Deterministic: same input, same report.
pub fn verify(m: &Polymatroid) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n = m.n();

    report.push(
        "core/bases-satisfy-constraints",
        bases_satisfy_constraints(m),
    );
    report.push("core/roundtrip-rank-bases", roundtrip_rank_bases(m));
    if n <= 4 {
        report.push("core/base-exchange", base_exchange(m));
    }
    if m.is_matroid() {
        report.push("core/matroid-bases-zero-one", matroid_bases_zero_one(m));
    }

    report.push("geometry/oracle-equivalence", oracle_equivalence(m));
    report.push("geometry/qtable-consistency", qtable_consistency(m));
    report.push("geometry/base-count-constant", base_count_constant(m));
    if n >= 2 {
        report.push("geometry/monotone-counts", monotone_counts(m));
    }
    if m.is_matroid() {
        report.push("geometry/closed-form-count", closed_form_count(m));
    }

    if m.is_matroid() {
        report.push("tutte/four-way-agreement", four_way_agreement(m));
        report.push("tutte/roundtrip-coordinates", roundtrip_coordinates(m));
        report.push("tutte/evaluations", tutte_evaluations(m));
        if n >= 2 {
            report.push("tutte/minor-recurrence", minor_recurrence(m));
        }
        report.push("tutte/duality-swap", duality_swap(m));
    }

    report.push("activity/specialization", activity_specialization(m));
    report.push("activity/order-invariance", order_invariance(m));
    report.push("activity/simplex-partition", simplex_partition(m));

    report.push("coefficients/top-degree", top_degree(m));
    if m.is_matroid() {
        report.push("coefficients/alternation", alternation(m));
        report.push("coefficients/interval-grading", interval_grading(m));
        report.push("structure/terminal-basis", terminal_basis(m));
        report.push("structure/dawson-partition", dawson_checks(m));
        report.push("structure/faces-vs-intervals", faces_vs_intervals(m));
    } else {
        report.push("coefficients/alternation", alternation_info(m));
    }

    report.push("constructions/dual-involution", dual_involution(m));
    if n >= 2 {
        report.push("constructions/slice-recurrence", slice_recurrence(m));
        report.push("constructions/slice-base-counts", slice_base_counts(m));
    }
    if n <= 4 {
        report.push("constructions/direct-sum-product", direct_sum_product(m));
        report.push("constructions/sum-convolution", sum_convolution(m));
    }
    if m.is_matroid() {
        report.push("constructions/relaxation", relaxation(m));
    }

    report
}

fn bases_satisfy_constraints(m: &Polymatroid) -> Result<Option<String>> {
    for b in m.bases() {
        if !base::is_base(m, b.coords()) {
            return fail(format!("enumerated vector {b} fails the base constraints"));
        }
    }
    if m.base_count() == 0 {
        return fail("no bases".into());
    }
    PASS
}

fn roundtrip_rank_bases(m: &Polymatroid) -> Result<Option<String>> {
    let vectors: Vec<Vec<i64>> = m.bases().iter().map(|b| b.coords().to_vec()).collect();
    let rebuilt = base::polymatroid_from_bases(m.n(), &vectors)?;
    if rebuilt.rank_fn() != m.rank_fn() {
        return fail("rank table changed under bases -> ranks -> bases".into());
    }
    PASS
}

fn base_exchange(m: &Polymatroid) -> Result<Option<String>> {
    if base::base_exchange_holds(m) {
        PASS
    } else {
        fail("exchange property violated".into())
    }
}

fn matroid_bases_zero_one(m: &Polymatroid) -> Result<Option<String>> {
    let r = m.total_rank();
    for b in m.bases() {
        if b.coords().iter().any(|&v| v != 0 && v != 1) || b.total() != r {
            return fail(format!("{b} is not a 0/1 vector with {r} ones"));
        }
    }
    PASS
}

fn oracle_equivalence(m: &Polymatroid) -> Result<Option<String>> {
    let n = m.n();
    let oracle = DecompositionOracle::new(m);
    if n <= 4 {
        for t in 0..=4u32 {
            for u in 0..=4 - t {
                let cfg = MinkowskiConfig::new(t, u);
                let bounds = geometry::bounding_box(m, cfg);
                let mut q = vec![0i64; n];
                if !exhaust_box(m, &oracle, cfg, &bounds, 0, &mut q)? {
                    return fail(format!("oracles disagree at (t,u)=({t},{u})"));
                }
            }
        }
    } else {
        let mut rng = Rng::new(sample_seed(n));
        let mut tested = 0;
        while tested < 1000 {
            let t = rng.below(3) as u32;
            let u = rng.below((5 - t) as u64) as u32;
            let cfg = MinkowskiConfig::new(t, u);
            let bounds = geometry::bounding_box(m, cfg);
            let q: Vec<i64> = bounds
                .iter()
                .map(|&(lo, hi)| rng.range_i64(lo, hi))
                .collect();
            let fast = geometry::member_minkowski(m, &q, cfg);
            let slow = oracle.member(&q, cfg);
            if fast != slow {
                return fail(format!("oracles disagree at {q:?}, (t,u)=({t},{u})"));
            }
            tested += 1;
        }
    }
    PASS
}

fn exhaust_box(
    m: &Polymatroid,
    oracle: &DecompositionOracle,
    cfg: MinkowskiConfig,
    bounds: &[(i64, i64)],
    depth: usize,
    q: &mut Vec<i64>,
) -> Result<bool> {
    if depth == bounds.len() {
        return Ok(geometry::member_minkowski(m, q, cfg) == oracle.member(q, cfg));
    }
    for v in bounds[depth].0..=bounds[depth].1 {
        q[depth] = v;
        if !exhaust_box(m, oracle, cfg, bounds, depth + 1, q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn qtable_consistency(m: &Polymatroid) -> Result<Option<String>> {
    let table = geometry::q_table(m)?;
    // The fitted polynomial must reproduce two off-grid counts.
    let n = m.n() as u32;
    for (t, u) in [(n + 1, 0), (0, n + 1)] {
        let counted = geometry::count_lattice_points(m, MinkowskiConfig::new(t, u))?;
        if counted != table.evaluate(t, u) {
            return fail(format!("fit disagrees with the count at ({t},{u})"));
        }
    }
    PASS
}

fn base_count_constant(m: &Polymatroid) -> Result<Option<String>> {
    let table = geometry::q_table(m)?;
    if table.coefficient(0, 0) != m.base_count() as i64 {
        return fail(format!(
            "constant term {} differs from base count {}",
            table.coefficient(0, 0),
            m.base_count()
        ));
    }
    if m.is_matroid() {
        let t = tutte::tutte_subset_sum(m)?;
        let one = BigInt::from(1);
        if t.evaluate_int(&one, &one) != BigInt::from(m.base_count() as i64) {
            return fail("T(1,1) differs from the base count".into());
        }
    }
    PASS
}

fn monotone_counts(m: &Polymatroid) -> Result<Option<String>> {
    for t in 0..3u32 {
        for u in 0..3u32 {
            let here = geometry::count_lattice_points(m, MinkowskiConfig::new(t, u))?;
            let up_t = geometry::count_lattice_points(m, MinkowskiConfig::new(t + 1, u))?;
            let up_u = geometry::count_lattice_points(m, MinkowskiConfig::new(t, u + 1))?;
            if up_t <= here || up_u <= here {
                return fail(format!("count not strictly monotone at ({t},{u})"));
            }
        }
    }
    PASS
}

fn closed_form_count(m: &Polymatroid) -> Result<Option<String>> {
    let n = m.n() as u32;
    for t in 0..=n {
        for u in 0..=n - t {
            let direct = geometry::count_lattice_points(m, MinkowskiConfig::new(t, u))?;
            let closed = geometry::count_matroid_closed_form(m, MinkowskiConfig::new(t, u))?;
            if direct != closed {
                return fail(format!(
                    "closed form {closed} vs direct {direct} at ({t},{u})"
                ));
            }
        }
    }
    PASS
}

fn probe_orders(n: usize) -> Vec<ElementOrder> {
    let mut orders = vec![ElementOrder::natural(n), ElementOrder::reversed(n)];
    let mut rng = Rng::new(sample_seed(n) ^ 0x5eed);
    for _ in 0..3 {
        orders.push(rng.order(n));
    }
    orders
}

fn four_way_agreement(m: &Polymatroid) -> Result<Option<String>> {
    let subset = tutte::tutte_subset_sum(m)?;
    let delcon = tutte::tutte_deletion_contraction(m)?;
    if subset != delcon {
        return fail("subset sum and deletion-contraction disagree".into());
    }
    for order in probe_orders(m.n()) {
        let act = tutte::tutte_activity(m, &order)?;
        if act != subset {
            return fail(format!(
                "activity form disagrees under order {:?}",
                order.ascending()
            ));
        }
    }
    let lattice = poly::tutte_from_qprime(&geometry::q_prime(m)?, m.n(), m.total_rank())?;
    if lattice != subset {
        return fail("lattice route disagrees".into());
    }
    PASS
}

fn roundtrip_coordinates(m: &Polymatroid) -> Result<Option<String>> {
    let t = tutte::tutte_subset_sum(m)?;
    let n = m.n();
    let r = m.total_rank();
    let qp = poly::qprime_from_tutte(&t, n, r)?;
    if qp != geometry::q_prime(m)? {
        return fail("invariant from Tutte differs from the counted invariant".into());
    }
    let back = poly::tutte_from_qprime(&qp, n, r)?;
    if back != t {
        return fail("coordinate roundtrip is not the identity".into());
    }
    if back.has_negative_coefficient() {
        return fail("recovered Tutte polynomial has negative coefficients".into());
    }
    PASS
}

fn tutte_evaluations(m: &Polymatroid) -> Result<Option<String>> {
    let t = tutte::tutte_subset_sum(m)?;
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    if t.evaluate_int(&two, &one) != BigInt::from(tutte::independent_set_count(m)?) {
        return fail("T(2,1) differs from the independent-set count".into());
    }
    if t.evaluate_int(&two, &two) != BigInt::from(1i64 << m.n()) {
        return fail("T(2,2) differs from 2^n".into());
    }
    PASS
}

fn minor_recurrence(m: &Polymatroid) -> Result<Option<String>> {
    let qp = geometry::q_prime(m)?;
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let unit = &(&x + &y) - &BivariatePolynomial::one();
    for e in m.ground().elements() {
        let expected = if m.is_loop(e)? || m.is_coloop(e)? {
            let minor = if m.is_loop(e)? {
                tutte::delete(m, e)?
            } else {
                tutte::contract(m, e)?
            };
            &unit * &geometry::q_prime(&minor)?
        } else {
            let del = geometry::q_prime(&tutte::delete(m, e)?)?;
            let con = geometry::q_prime(&tutte::contract(m, e)?)?;
            &(&x * &del) + &(&y * &con)
        };
        if expected != qp {
            return fail(format!("minor recurrence fails at element {e}"));
        }
    }
    PASS
}

fn duality_swap(m: &Polymatroid) -> Result<Option<String>> {
    let dual = constructions::s_dual(m, 1)?;
    let t = tutte::tutte_subset_sum(m)?;
    let td = tutte::tutte_subset_sum(&dual)?;
    if td != t.swap_vars() {
        return fail("dual Tutte polynomial is not the variable swap".into());
    }
    PASS
}

fn activity_specialization(m: &Polymatroid) -> Result<Option<String>> {
    let qp = geometry::q_prime(m)?.rename("xi", "eta");
    let xi = BivariatePolynomial::monomial(1, 1, 0).rename("xi", "eta");
    let eta = BivariatePolynomial::monomial(1, 0, 1).rename("xi", "eta");
    // Substitute y = 1 / x = 1 by evaluating one variable at a time.
    let q_x1 = substitute_one(&qp, true);
    let q_1y = substitute_one(&qp, false);
    for order in probe_orders(m.n()) {
        let mut internal_active = BivariatePolynomial::zero_in("xi", "eta");
        let mut external_active = BivariatePolynomial::zero_in("xi", "eta");
        for b in m.bases() {
            let rec = activity::kalman_activities(m, b, &order)?;
            internal_active.add_term((rec.iota as u32, 0), BigInt::from(1));
            external_active.add_term((0, rec.epsilon as u32), BigInt::from(1));
        }
        if &xi * &q_x1 != internal_active {
            return fail(format!(
                "xi*Q'(xi,1) differs from the internal enumerator under {:?}",
                order.ascending()
            ));
        }
        if &eta * &q_1y != external_active {
            return fail(format!(
                "eta*Q'(1,eta) differs from the external enumerator under {:?}",
                order.ascending()
            ));
        }
        // Equivalent degree-reversed form against the inactive-count polynomials.
        let n = m.n() as u32;
        let internal_inactive = activity::internal_polynomial(m, &order);
        let external_inactive = activity::external_polynomial(m, &order);
        if reverse_degrees(&internal_inactive, n, true) != q_x1 {
            return fail("degree reversal of the internal polynomial fails".into());
        }
        if reverse_degrees(&external_inactive, n, false) != q_1y {
            return fail("degree reversal of the external polynomial fails".into());
        }
    }
    PASS
}

/// Partial evaluation at 1: keeps `x` when `keep_x`, else keeps `y`.
fn substitute_one(p: &BivariatePolynomial, keep_x: bool) -> BivariatePolynomial {
    let (vx, vy) = p.vars();
    let mut out = BivariatePolynomial::zero_in(vx, vy);
    for (&(i, j), c) in p.terms() {
        let e = if keep_x { (i, 0) } else { (0, j) };
        out.add_term(e, c.clone());
    }
    out
}

/// `p(1/v) * v^(n-1)` on a univariate polynomial stored in one slot.
fn reverse_degrees(p: &BivariatePolynomial, n: u32, in_x: bool) -> BivariatePolynomial {
    let (vx, vy) = p.vars();
    let mut out = BivariatePolynomial::zero_in(vx, vy);
    for (&(i, j), c) in p.terms() {
        let e = if in_x { (n - 1 - i, 0) } else { (0, n - 1 - j) };
        out.add_term(e, c.clone());
    }
    out
}

fn order_invariance(m: &Polymatroid) -> Result<Option<String>> {
    activity::internal_polynomial_invariant(m)?;
    activity::external_polynomial_invariant(m)?;
    PASS
}

fn simplex_partition(m: &Polymatroid) -> Result<Option<String>> {
    for t in 1..=3u32 {
        let internal = activity::activity_partition_check(m, t, PartitionSide::Internal)?;
        let count = geometry::count_lattice_points(m, MinkowskiConfig::new(t, 0))?;
        if internal.total_points != count {
            return fail(format!("internal partition misses points at t={t}"));
        }
        let external = activity::activity_partition_check(m, t, PartitionSide::External)?;
        let count = geometry::count_lattice_points(m, MinkowskiConfig::new(0, t))?;
        if external.total_points != count {
            return fail(format!("external partition misses points at t={t}"));
        }
    }
    PASS
}

fn top_degree(m: &Polymatroid) -> Result<Option<String>> {
    let qp = geometry::q_prime(m)?;
    let n = m.n() as u32;
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let binomial_part = (&x + &y).pow(n - 1);
    let ok = qp.total_degree() == n - 1 && qp.top_degree_part() == binomial_part;
    if m.is_matroid() {
        if ok {
            PASS
        } else {
            fail("top-degree part is not (x+y)^(n-1)".into())
        }
    } else {
        // Observed on every example, asserted nowhere.
        Ok(Some(format!(
            "top-degree part {} (x+y)^(n-1)",
            if ok { "equals" } else { "differs from" }
        )))
    }
}

fn alternation(m: &Polymatroid) -> Result<Option<String>> {
    let report = dawson::coefficient_report(m)?;
    if report.alternating {
        PASS
    } else {
        fail(format!(
            "sign alternation fails at {:?}",
            report.alternation_witnesses
        ))
    }
}

fn alternation_info(m: &Polymatroid) -> Result<Option<String>> {
    let report = dawson::coefficient_report(m)?;
    Ok(Some(if report.alternating {
        "signs alternate".into()
    } else {
        format!("signs do not alternate: {:?}", report.alternation_witnesses)
    }))
}

fn interval_grading(m: &Polymatroid) -> Result<Option<String>> {
    let report = dawson::coefficient_report(m)?;
    match report.grading {
        Some(true) => PASS,
        Some(false) => fail("interval grading identity fails".into()),
        None => fail("grading not computed for a matroid".into()),
    }
}

fn terminal_basis(m: &Polymatroid) -> Result<Option<String>> {
    let bases = m.matroid_bases()?;
    for p in PartitionXY::all(m) {
        let mut found: Option<Subset> = None;
        for &start in &bases {
            let terminal = dawson::find_basis_for_partition(m, p, start)?;
            match found {
                None => found = Some(terminal),
                Some(prev) if prev != terminal => {
                    return fail(format!(
                        "terminal basis depends on the start at ({}, {})",
                        p.x, p.y
                    ));
                }
                _ => {}
            }
        }
        let terminal = found.expect("at least one basis");
        if !dawson::is_terminal_basis(m, p, terminal)? {
            return fail(format!(
                "terminal basis fails the activity characterization at ({}, {})",
                p.x, p.y
            ));
        }
        let hits = bases
            .iter()
            .filter(|b| dawson::is_terminal_basis(m, p, **b).unwrap_or(false))
            .count();
        if hits != 1 {
            return fail(format!(
                "{hits} bases satisfy the characterization at ({}, {})",
                p.x, p.y
            ));
        }
    }
    PASS
}

fn dawson_checks(m: &Polymatroid) -> Result<Option<String>> {
    let order = ElementOrder::natural(m.n());
    let parts = dawson::dawson_partition(m, &order)?;
    if parts.len() != m.base_count() {
        return fail("part count differs from the base count".into());
    }
    let closed = dawson::interval_enumerator(m, &order)?;
    if m.n() <= 4 {
        let brute = dawson::interval_enumerator_bruteforce(m, &order)?;
        if closed != brute {
            return fail("closed-form interval enumerator differs from brute force".into());
        }
    }
    PASS
}

fn faces_vs_intervals(m: &Polymatroid) -> Result<Option<String>> {
    let faces = dawson::top_degree_faces(m)?;
    let parts = dawson::dawson_partition(m, &ElementOrder::natural(m.n()))?;
    if faces.len() != 1 << (m.n() - 1) {
        return fail("wrong number of top-degree faces".into());
    }
    for face in &faces {
        let owner = parts.iter().find(|p| {
            p.lower.is_subset_of(face.partition.x) && face.partition.x.is_subset_of(p.upper)
        });
        match owner {
            Some(part) if part.basis == face.basis => {}
            Some(part) => {
                return fail(format!(
                    "face at ({}, {}) has basis {}, its interval is owned by {}",
                    face.partition.x, face.partition.y, face.basis, part.basis
                ));
            }
            None => {
                return fail(format!(
                    "face label {} lies in no interval",
                    face.partition.x
                ));
            }
        }
    }
    PASS
}

fn dual_involution(m: &Polymatroid) -> Result<Option<String>> {
    let max_singleton = m
        .ground()
        .elements()
        .map(|e| m.rank(Subset::singleton(e)))
        .max()
        .unwrap_or(0);
    let qp = geometry::q_prime(m)?;
    for s in max_singleton..=max_singleton + 2 {
        let dual = constructions::s_dual(m, s)?;
        let back = constructions::s_dual(&dual, s)?;
        if &back != m {
            return fail(format!("double dual differs at s={s}"));
        }
        if geometry::q_prime(&dual)? != qp.swap_vars() {
            return fail(format!("dual invariant is not the variable swap at s={s}"));
        }
    }
    PASS
}

fn slice_recurrence(m: &Polymatroid) -> Result<Option<String>> {
    for a in m.ground().elements() {
        constructions::slice_recurrence_check(m, a)?;
    }
    PASS
}

fn slice_base_counts(m: &Polymatroid) -> Result<Option<String>> {
    for a in m.ground().elements() {
        let family = constructions::slices(m, a)?;
        let total: usize = family.levels.iter().map(|p| p.base_count()).sum();
        if total != m.base_count() {
            return fail(format!("slice base counts at {a} sum to {total}"));
        }
    }
    PASS
}

fn direct_sum_product(m: &Polymatroid) -> Result<Option<String>> {
    let partner = crate::corpus::uniform(1, 2);
    let sum = constructions::direct_sum(m, &partner)?;
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let unit = &(&x + &y) - &BivariatePolynomial::one();
    let lhs = geometry::q_prime(&sum)?;
    let rhs = &(&unit * &geometry::q_prime(m)?) * &geometry::q_prime(&partner)?;
    if lhs != rhs {
        return fail("direct-sum product identity fails".into());
    }
    PASS
}

fn sum_convolution(m: &Polymatroid) -> Result<Option<String>> {
    let partner = crate::corpus::uniform(1, 1);
    let sum = constructions::direct_sum(m, &partner)?;
    for t in 0..=3u32 {
        for u in 0..=3u32 {
            let mut lhs = 0i64;
            for k in 0..=t.min(u) {
                lhs += geometry::count_lattice_points(&sum, MinkowskiConfig::new(t - k, u - k))?;
            }
            let mut rhs = 0i64;
            for t1 in 0..=t {
                for u1 in 0..=u {
                    rhs += geometry::count_lattice_points(m, MinkowskiConfig::new(t1, u1))?
                        * geometry::count_lattice_points(
                            &partner,
                            MinkowskiConfig::new(t - t1, u - u1),
                        )?;
                }
            }
            if lhs != rhs {
                return fail(format!("convolution fails at (t,u)=({t},{u})"));
            }
        }
    }
    PASS
}

fn relaxation(m: &Polymatroid) -> Result<Option<String>> {
    // Check the identity on every circuit-hyperplane, if any exist.
    let mut seen = 0;
    let n = m.n() as u32;
    let r = m.total_rank() as u32;
    for c in m.ground().subsets() {
        if c.is_empty() {
            continue;
        }
        let relaxed = match constructions::relax_circuit_hyperplane(m, c) {
            Ok(rel) => rel,
            Err(_) => continue,
        };
        seen += 1;
        if r == 0 || n - r == 0 {
            continue;
        }
        let shift = BivariatePolynomial::monomial(1, n - r - 1, r - 1);
        let lhs = geometry::q_prime(m)?;
        let rhs = &geometry::q_prime(&relaxed)? - &shift;
        if lhs != rhs {
            return fail(format!("relaxation identity fails for {c}"));
        }
        if seen >= 2 {
            break;
        }
    }
    if seen == 0 {
        return Ok(Some("no circuit-hyperplane to relax".into()));
    }
    PASS
}
