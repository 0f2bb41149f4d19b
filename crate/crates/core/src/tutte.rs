//! Tutte polynomials of matroids, three ways: the corank-nullity subset
//! sum, deletion-contraction, and the activity generating function.
//!
//! Minors are built by manipulating base lists (delete: maximal bases
//! avoiding the element; contract: bases through it, with the element
//! removed) and re-validating through the base-list constructor, so a
//! single rank-table code path serves everything.

use crate::base::polymatroid_from_bases;
use crate::error::{Error, Result};
use crate::ground::{ElementOrder, Subset};
use crate::poly::BivariatePolynomial;
use crate::rank::Polymatroid;
use num_bigint::BigInt;
use std::collections::HashMap;

fn require_matroid(m: &Polymatroid, what: &str) -> Result<()> {
    if m.is_matroid() {
        Ok(())
    } else {
        Err(Error::NotAMatroid(what.into()))
    }
}

/// Corank-nullity sum over all subsets:
/// `T(x,y) = Σ_S (x-1)^(r(M)-r(S)) (y-1)^(|S|-r(S))`.
pub fn tutte_subset_sum(m: &Polymatroid) -> Result<BivariatePolynomial> {
    require_matroid(m, "tutte_subset_sum")?;
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let one = BivariatePolynomial::one();
    let xm = &x - &one;
    let ym = &y - &one;
    let rm = m.total_rank();
    let mut acc = BivariatePolynomial::zero();
    for s in m.ground().subsets() {
        let cork = (rm - m.rank(s)) as u32;
        let null = (s.len() as i64 - m.rank(s)) as u32;
        acc = &acc + &(&xm.pow(cork) * &ym.pow(null));
    }
    Ok(acc)
}

/// Deletes `e` and relabels the remaining elements to `1..n-1`.
pub fn delete(m: &Polymatroid, e: usize) -> Result<Polymatroid> {
    require_matroid(m, "delete")?;
    let bases = m.matroid_bases()?;
    let avoiding: Vec<Subset> = bases.iter().filter(|b| !b.contains(e)).copied().collect();
    let chosen = if avoiding.is_empty() {
        // e is a coloop: drop it from every basis.
        bases.iter().map(|b| b.remove(e)).collect()
    } else {
        avoiding
    };
    minor_from_sets(m.n(), e, chosen)
}

/// Contracts `e` and relabels the remaining elements to `1..n-1`.
pub fn contract(m: &Polymatroid, e: usize) -> Result<Polymatroid> {
    require_matroid(m, "contract")?;
    let bases = m.matroid_bases()?;
    let through: Vec<Subset> = bases
        .iter()
        .filter(|b| b.contains(e))
        .map(|b| b.remove(e))
        .collect();
    if through.is_empty() {
        // e is a loop: contraction equals deletion.
        return delete(m, e);
    }
    minor_from_sets(m.n(), e, through)
}

fn minor_from_sets(n: usize, removed: usize, sets: Vec<Subset>) -> Result<Polymatroid> {
    let vectors: Vec<Vec<i64>> = sets
        .iter()
        .map(|b| {
            (1..=n)
                .filter(|&i| i != removed)
                .map(|i| i64::from(b.contains(i)))
                .collect()
        })
        .collect();
    polymatroid_from_bases(n - 1, &vectors)
}

/// Deletion-contraction recursion on the smallest element that is neither
/// a loop nor a coloop; a matroid of `c` coloops and `l` loops is `x^c y^l`.
/// Memoized on the canonical base-set encoding.
pub fn tutte_deletion_contraction(m: &Polymatroid) -> Result<BivariatePolynomial> {
    require_matroid(m, "tutte_deletion_contraction")?;
    let mut memo: HashMap<(usize, Vec<u32>), BivariatePolynomial> = HashMap::new();
    delcon(m, &mut memo)
}

fn delcon(
    m: &Polymatroid,
    memo: &mut HashMap<(usize, Vec<u32>), BivariatePolynomial>,
) -> Result<BivariatePolynomial> {
    let key = {
        let mut masks: Vec<u32> = m.matroid_bases()?.iter().map(|b| b.0).collect();
        masks.sort_unstable();
        (m.n(), masks)
    };
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let mut pivot = None;
    let mut coloops = 0u32;
    let mut loops = 0u32;
    for e in m.ground().elements() {
        if m.is_loop(e)? {
            loops += 1;
        } else if m.is_coloop(e)? {
            coloops += 1;
        } else if pivot.is_none() {
            pivot = Some(e);
        }
    }
    let result = match pivot {
        None => BivariatePolynomial::monomial(1, coloops, loops),
        Some(e) => {
            let del = delcon(&delete(m, e)?, memo)?;
            let con = delcon(&contract(m, e)?, memo)?;
            &del + &con
        }
    };
    memo.insert(key, result.clone());
    Ok(result)
}

/// Classical activities of a matroid basis (fundamental circuit and
/// cocircuit tests), under the given element order.
///
/// Returns `(internal, external)`: the internally active elements of `B`
/// and the externally active elements of its complement.
pub fn standard_activities(
    m: &Polymatroid,
    basis: Subset,
    order: &ElementOrder,
) -> Result<(Subset, Subset)> {
    require_matroid(m, "standard_activities")?;
    let bases = m.matroid_bases()?;
    if !bases.contains(&basis) {
        return Err(Error::NotABasis(basis));
    }
    let basis_set: std::collections::HashSet<u32> = bases.iter().map(|b| b.0).collect();
    let ground = m.ground();

    let mut internal = Subset::EMPTY;
    let mut external = Subset::EMPTY;
    for e in ground.elements() {
        if basis.contains(e) {
            // Fundamental cocircuit: e plus the outside elements that can replace it.
            let cocircuit: Vec<usize> = std::iter::once(e)
                .chain(ground.elements().filter(|&f| {
                    !basis.contains(f) && basis_set.contains(&basis.remove(e).insert(f).0)
                }))
                .collect();
            if cocircuit.iter().all(|&f| f == e || order.less(e, f)) {
                internal = internal.insert(e);
            }
        } else {
            // Fundamental circuit: e plus the basis elements it can replace.
            let circuit: Vec<usize> = std::iter::once(e)
                .chain(ground.elements().filter(|&b| {
                    basis.contains(b) && basis_set.contains(&basis.remove(b).insert(e).0)
                }))
                .collect();
            if circuit.iter().all(|&f| f == e || order.less(e, f)) {
                external = external.insert(e);
            }
        }
    }
    Ok((internal, external))
}

/// Tutte polynomial as the activity generating function, with every
/// non-basis element counted internally active and every basis element
/// externally active on top of the classical sets:
/// `T = Σ_B x^ι(B) y^ε(B) / (x^(n-r) y^r)`, the division exact.
pub fn tutte_activity(m: &Polymatroid, order: &ElementOrder) -> Result<BivariatePolynomial> {
    require_matroid(m, "tutte_activity")?;
    let n = m.n();
    let r = m.total_rank();
    let mut acc = BivariatePolynomial::zero();
    for basis in m.matroid_bases()? {
        let (internal, external) = standard_activities(m, basis, order)?;
        let iota = internal.len() + (n - basis.len());
        let eps = external.len() + basis.len();
        acc.add_term((iota as u32, eps as u32), BigInt::from(1));
    }
    acc.div_monomial((n as i64 - r) as u32, r as u32)
        .ok_or_else(|| Error::NotDivisible(format!("x^{}*y^{}", n as i64 - r, r)))
}

/// Independent-set count by brute force, for cross-checks against `T(2,1)`.
pub fn independent_set_count(m: &Polymatroid) -> Result<i64> {
    require_matroid(m, "independent_set_count")?;
    Ok(m.ground()
        .subsets()
        .filter(|&s| m.rank(s) == s.len() as i64)
        .count() as i64)
}
