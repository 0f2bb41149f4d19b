//! Transfer activities of polymatroid bases, the univariate activity
//! polynomials, and the simplex partition they induce on the one-sided
//! Minkowski sums.

use crate::base::BaseVector;
use crate::error::{Error, Result};
use crate::geometry::{binomial, lattice_points, member_minkowski, MinkowskiConfig};
use crate::ground::{ElementOrder, Subset};
use crate::poly::BivariatePolynomial;
use crate::rank::Polymatroid;
use std::collections::BTreeMap;

/// Activity data of one base under one element order.
///
/// An element is internally active when no transfer from it to any
/// order-smaller element stays a base, and externally active when no
/// transfer to it from any order-smaller element does. The order-smallest
/// element is always active both ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityRecord {
    pub base: BaseVector,
    pub order: ElementOrder,
    pub int_active: Subset,
    pub ext_active: Subset,
    pub iota: usize,
    pub epsilon: usize,
    pub iota_bar: usize,
    pub epsilon_bar: usize,
}

/// Computes the activity record of `x` via transfer tests.
pub fn kalman_activities(
    m: &Polymatroid,
    x: &BaseVector,
    order: &ElementOrder,
) -> Result<ActivityRecord> {
    if !crate::base::is_base(m, x.coords()) {
        return Err(Error::NotABase(x.coords().to_vec()));
    }
    let n = m.n();
    let mut int_active = Subset::EMPTY;
    let mut ext_active = Subset::EMPTY;
    for e in 1..=n {
        let internally = order
            .smaller_than(e)
            .iter()
            .all(|&v| !crate::base::is_base(m, x.transfer(e, v).coords()));
        if internally {
            int_active = int_active.insert(e);
        }
        let externally = order
            .smaller_than(e)
            .iter()
            .all(|&v| !crate::base::is_base(m, x.transfer(v, e).coords()));
        if externally {
            ext_active = ext_active.insert(e);
        }
    }
    let iota = int_active.len();
    let epsilon = ext_active.len();
    Ok(ActivityRecord {
        base: x.clone(),
        order: order.clone(),
        int_active,
        ext_active,
        iota,
        epsilon,
        iota_bar: n - iota,
        epsilon_bar: n - epsilon,
    })
}

/// The bivariate enumerator `Σ_x ξ^ι(x) η^ε(x)`. Genuinely order-dependent
/// for polymatroids.
pub fn activity_enumerator(m: &Polymatroid, order: &ElementOrder) -> BivariatePolynomial {
    let mut acc = BivariatePolynomial::zero_in("xi", "eta");
    for x in m.bases() {
        let rec = kalman_activities(m, x, order).expect("enumerating over bases");
        acc.add_term(
            (rec.iota as u32, rec.epsilon as u32),
            num_bigint::BigInt::from(1),
        );
    }
    acc
}

/// Internal polynomial `Σ_x ξ^ῑ(x)` over inactive counts.
pub fn internal_polynomial(m: &Polymatroid, order: &ElementOrder) -> BivariatePolynomial {
    let mut acc = BivariatePolynomial::zero_in("xi", "eta");
    for x in m.bases() {
        let rec = kalman_activities(m, x, order).expect("enumerating over bases");
        acc.add_term((rec.iota_bar as u32, 0), num_bigint::BigInt::from(1));
    }
    acc
}

/// External polynomial `Σ_x η^ε̄(x)` over inactive counts.
pub fn external_polynomial(m: &Polymatroid, order: &ElementOrder) -> BivariatePolynomial {
    let mut acc = BivariatePolynomial::zero_in("xi", "eta");
    for x in m.bases() {
        let rec = kalman_activities(m, x, order).expect("enumerating over bases");
        acc.add_term((0, rec.epsilon_bar as u32), num_bigint::BigInt::from(1));
    }
    acc
}

/// Orders used for the order-invariance check: every order for `n ≤ 4`,
/// ten seeded shuffles beyond that.
fn probe_orders(n: usize) -> Vec<ElementOrder> {
    if n <= 4 {
        ElementOrder::all(n)
    } else {
        let mut rng = crate::corpus::Rng::new(ORDER_PROBE_SEED);
        (0..10).map(|_| rng.order(n)).collect()
    }
}

const ORDER_PROBE_SEED: u64 = 0x5eed_0f0f_1234;

/// Internal polynomial computed across many orders, failing loudly if any
/// two disagree (they provably cannot).
pub fn internal_polynomial_invariant(m: &Polymatroid) -> Result<BivariatePolynomial> {
    cross_order(m, internal_polynomial, "internal")
}

/// External polynomial computed across many orders, checked the same way.
pub fn external_polynomial_invariant(m: &Polymatroid) -> Result<BivariatePolynomial> {
    cross_order(m, external_polynomial, "external")
}

fn cross_order(
    m: &Polymatroid,
    f: fn(&Polymatroid, &ElementOrder) -> BivariatePolynomial,
    label: &str,
) -> Result<BivariatePolynomial> {
    let orders = probe_orders(m.n());
    let mut result: Option<(BivariatePolynomial, ElementOrder)> = None;
    for order in orders {
        let value = f(m, &order);
        match &result {
            None => result = Some((value, order)),
            Some((first, first_order)) => {
                if *first != value {
                    return Err(Error::OrderDependenceDetected(format!(
                        "{label} polynomial differs between orders {:?} and {:?}",
                        first_order.ascending(),
                        order.ascending()
                    )));
                }
            }
        }
    }
    Ok(result.expect("at least one order").0)
}

/// Which side of the simplex partition to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionSide {
    /// Decrement side (`P + t∇`), governed by internal activity.
    Internal,
    /// Increment side (`P + tΔ`), governed by external activity.
    External,
}

/// One base's cell in the partition report.
#[derive(Clone, Debug)]
pub struct PartitionCell {
    pub base: BaseVector,
    pub active: Subset,
    pub dimension: usize,
    pub points: usize,
}

/// Result of the greedy simplex-partition check at scale `t`.
#[derive(Clone, Debug)]
pub struct PartitionReport {
    pub side: PartitionSide,
    pub t: u32,
    pub cells: Vec<PartitionCell>,
    pub total_points: i64,
}

/// Partitions the lattice points of `P + t∇` (or `P + tΔ`) by walking each
/// point back to a base with greedy unit steps, order-smallest first, and
/// verifies the walk lands in the active simplex of its terminal base:
/// assignments are unique, each cell is exactly the dilated face spanned by
/// the active directions, and cell sizes are `C(t + d, d)` for the
/// predicted dimensions `d`.
pub fn activity_partition_check(
    m: &Polymatroid,
    t: u32,
    side: PartitionSide,
) -> Result<PartitionReport> {
    let order = ElementOrder::natural(m.n());
    let cfg = match side {
        PartitionSide::Internal => MinkowskiConfig::new(t, 0),
        PartitionSide::External => MinkowskiConfig::new(0, t),
    };
    let points = lattice_points(m, cfg)?;
    // Terminal base -> the points walked to it, with the steps they used.
    type Walks = Vec<(Vec<i64>, Vec<usize>)>;
    let mut assigned: BTreeMap<Vec<i64>, Walks> = BTreeMap::new();

    for g in &points {
        let mut h = g.clone();
        let mut used = Vec::with_capacity(t as usize);
        for step in 0..t {
            let remaining = t - step - 1;
            let shrink = match side {
                PartitionSide::Internal => MinkowskiConfig::new(remaining, 0),
                PartitionSide::External => MinkowskiConfig::new(0, remaining),
            };
            let found = order.ascending().iter().copied().find(|&j| {
                let mut probe = h.clone();
                match side {
                    PartitionSide::Internal => probe[j - 1] += 1,
                    PartitionSide::External => probe[j - 1] -= 1,
                }
                member_minkowski(m, &probe, shrink)
            });
            let Some(j) = found else {
                return Err(Error::PartitionViolation(
                    g.clone(),
                    format!("no unit step after {step} of {t}"),
                ));
            };
            match side {
                PartitionSide::Internal => h[j - 1] += 1,
                PartitionSide::External => h[j - 1] -= 1,
            }
            used.push(j);
        }
        assigned.entry(h).or_default().push((g.clone(), used));
    }

    let mut cells = Vec::new();
    for (terminal, members) in &assigned {
        let base = BaseVector::new(terminal.clone());
        let rec = kalman_activities(m, &base, &order)?;
        let active = match side {
            PartitionSide::Internal => rec.int_active,
            PartitionSide::External => rec.ext_active,
        };
        for (g, used) in members {
            if let Some(&bad) = used.iter().find(|&&j| !active.contains(j)) {
                return Err(Error::PartitionViolation(
                    g.clone(),
                    format!("walk used inactive direction {bad}"),
                ));
            }
        }
        // The cell must be exactly the scaled active face at the base.
        let mut expected: Vec<Vec<i64>> = Vec::new();
        compositions_over(
            &active.elements().collect::<Vec<_>>(),
            t as usize,
            terminal,
            side,
            &mut vec![],
            &mut expected,
        );
        expected.sort();
        expected.dedup();
        let mut got: Vec<Vec<i64>> = members.iter().map(|(g, _)| g.clone()).collect();
        got.sort();
        if expected != got {
            return Err(Error::PartitionViolation(
                terminal.clone(),
                format!(
                    "cell has {} points, active face has {}",
                    got.len(),
                    expected.len()
                ),
            ));
        }
        let dimension = active.len() - 1;
        let predicted = binomial(t as i64 + dimension as i64, dimension as i64);
        if predicted != got.len() as i64 {
            return Err(Error::PartitionViolation(
                terminal.clone(),
                format!("cell size {} != C(t+d,d) = {predicted}", got.len()),
            ));
        }
        cells.push(PartitionCell {
            base,
            active,
            dimension,
            points: got.len(),
        });
    }

    // Every base must own a cell.
    if assigned.len() != m.base_count() {
        return Err(Error::PartitionViolation(
            vec![],
            format!(
                "{} terminal bases, {} bases in the polymatroid",
                assigned.len(),
                m.base_count()
            ),
        ));
    }

    Ok(PartitionReport {
        side,
        t,
        cells,
        total_points: points.len() as i64,
    })
}

/// Enumerates `terminal ∓ (multiset of `t` steps over `dirs`)`.
fn compositions_over(
    dirs: &[usize],
    t: usize,
    terminal: &[i64],
    side: PartitionSide,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<i64>>,
) {
    if t == 0 {
        let mut v = terminal.to_vec();
        for &j in chosen.iter() {
            match side {
                PartitionSide::Internal => v[j - 1] -= 1,
                PartitionSide::External => v[j - 1] += 1,
            }
        }
        out.push(v);
        return;
    }
    for &d in dirs {
        if let Some(&last) = chosen.last() {
            if d < last {
                continue;
            }
        }
        chosen.push(d);
        compositions_over(dirs, t - 1, terminal, side, chosen, out);
        chosen.pop();
    }
}
