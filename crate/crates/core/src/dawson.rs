//! Top-degree faces, the basis-search algorithm behind them, Dawson
//! partitions, and the sign/grading structure of the invariant's
//! coefficients for matroids.

use crate::error::{Error, Result};
use crate::ground::{ElementOrder, Subset};
use crate::poly::BivariatePolynomial;
use crate::rank::Polymatroid;
use crate::tutte::standard_activities;
use num_bigint::BigInt;
use std::collections::HashSet;

/// A pair `(X, Y)` covering the ground set and meeting exactly in the
/// smallest element. There are `2^(n-1)` of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionXY {
    pub x: Subset,
    pub y: Subset,
}

impl PartitionXY {
    pub fn new(m: &Polymatroid, x: Subset, y: Subset) -> Result<Self> {
        let ground = m.ground();
        let min = Subset::singleton(1);
        if x.union(y) != ground.full_subset() || x.intersection(y) != min {
            return Err(Error::InvalidInput(format!(
                "({x}, {y}) is not a valid face label"
            )));
        }
        Ok(PartitionXY { x, y })
    }

    /// All `2^(n-1)` labels, ordered by the mask of `X`.
    pub fn all(m: &Polymatroid) -> Vec<PartitionXY> {
        let n = m.n();
        let full = m.ground().full_subset();
        let mut out = Vec::with_capacity(1 << (n - 1));
        for rest in 0..(1u32 << (n - 1)) {
            let x = Subset(rest << 1 | 1);
            let y = x.symmetric_difference(full).insert(1);
            out.push(PartitionXY { x, y });
        }
        out
    }
}

/// One maximal mixed cell carrying a vertex of the base polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopDegreeFace {
    pub partition: PartitionXY,
    pub basis: Subset,
}

/// A Dawson interval `[B \ Int(B), B ∪ Ext(B)]` owned by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DawsonPart {
    pub lower: Subset,
    pub upper: Subset,
    pub basis: Subset,
}

fn require_matroid(m: &Polymatroid, what: &str) -> Result<()> {
    if m.is_matroid() {
        Ok(())
    } else {
        Err(Error::NotAMatroid(what.into()))
    }
}

/// Encoding under which symmetric differences are compared: the largest
/// differing element decides, which is exactly the mask as an integer.
fn lex_weight(s: Subset) -> u32 {
    s.0
}

/// The two-rule basis search. Starting anywhere, repeatedly
///
/// (a) replace a basis element by the largest possible `x ∈ X` above it,
/// (b) failing that, replace an element of `Y` by the smallest possible
///     element below it,
///
/// scanning positions in ascending order and restarting after every
/// replacement. The terminal basis is independent of the start; the
/// weight of `B △ Y` strictly increases at every step, which is asserted,
/// and an iteration cap guards termination.
pub fn find_basis_for_partition(m: &Polymatroid, p: PartitionXY, start: Subset) -> Result<Subset> {
    require_matroid(m, "find_basis_for_partition")?;
    let bases: HashSet<u32> = m.matroid_bases()?.iter().map(|b| b.0).collect();
    if !bases.contains(&start.0) {
        return Err(Error::NotABasis(start));
    }
    let n = m.n();
    let cap = bases.len() * n * n;
    let mut current = start;
    let mut weight = lex_weight(current.symmetric_difference(p.y));
    let mut replacements = 0usize;
    'outer: loop {
        let elements: Vec<usize> = current.elements().collect();
        for &b in &elements {
            // Rule (a): the largest x in X above b keeping a basis.
            let swap_up = (b + 1..=n)
                .rev()
                .filter(|&x| p.x.contains(x))
                .find(|&x| bases.contains(&current.remove(b).insert(x).0));
            if let Some(x) = swap_up {
                current = current.remove(b).insert(x);
                let next_weight = lex_weight(current.symmetric_difference(p.y));
                if next_weight <= weight {
                    return Err(Error::NonTermination(replacements));
                }
                weight = next_weight;
                replacements += 1;
                if replacements > cap {
                    return Err(Error::NonTermination(replacements));
                }
                continue 'outer;
            }
            // Rule (b): the smallest element below b, if b lies in Y.
            if p.y.contains(b) {
                let swap_down = (1..b).find(|&z| bases.contains(&current.remove(b).insert(z).0));
                if let Some(z) = swap_down {
                    current = current.remove(b).insert(z);
                    let next_weight = lex_weight(current.symmetric_difference(p.y));
                    if next_weight <= weight {
                        return Err(Error::NonTermination(replacements));
                    }
                    weight = next_weight;
                    replacements += 1;
                    if replacements > cap {
                        return Err(Error::NonTermination(replacements));
                    }
                    continue 'outer;
                }
            }
        }
        return Ok(current);
    }
}

/// The terminal-basis characterization: every element of `X` outside `B`
/// is externally active and every element of `Y` inside `B` is internally
/// active, classical activities taken under the natural order. Exactly
/// one basis satisfies it per face label.
pub fn is_terminal_basis(m: &Polymatroid, p: PartitionXY, basis: Subset) -> Result<bool> {
    let order = ElementOrder::natural(m.n());
    let (internal, external) = standard_activities(m, basis, &order)?;
    let ext_ok = p.x.difference(basis).is_subset_of(external);
    let int_ok = p.y.intersection(basis).is_subset_of(internal);
    Ok(ext_ok && int_ok)
}

/// Enumerates all `2^(n-1)` top-degree faces and verifies the activity
/// characterization of each terminal basis.
pub fn top_degree_faces(m: &Polymatroid) -> Result<Vec<TopDegreeFace>> {
    require_matroid(m, "top_degree_faces")?;
    let start = m.matroid_bases()?[0];
    let mut out = Vec::new();
    for p in PartitionXY::all(m) {
        let basis = find_basis_for_partition(m, p, start)?;
        if !is_terminal_basis(m, p, basis)? {
            return Err(Error::IdentityFailed(format!(
                "terminal basis {basis} of ({}, {}) fails the activity characterization",
                p.x, p.y
            )));
        }
        out.push(TopDegreeFace {
            partition: p,
            basis,
        });
    }
    Ok(out)
}

/// The Dawson partition `[B \ Int(B), B ∪ Ext(B)]` over all bases, with
/// the partition and ordering properties verified.
pub fn dawson_partition(m: &Polymatroid, order: &ElementOrder) -> Result<Vec<DawsonPart>> {
    require_matroid(m, "dawson_partition")?;
    let mut parts = Vec::new();
    for basis in m.matroid_bases()? {
        let (internal, external) = standard_activities(m, basis, order)?;
        parts.push(DawsonPart {
            lower: basis.difference(internal),
            upper: basis.union(external),
            basis,
        });
    }
    // Every subset must land in exactly one interval.
    for s in m.ground().subsets() {
        let hits = parts
            .iter()
            .filter(|p| p.lower.is_subset_of(s) && s.is_subset_of(p.upper))
            .count();
        if hits != 1 {
            return Err(Error::NotAPartition(format!(
                "subset {s} lies in {hits} intervals"
            )));
        }
    }
    // Sorting by lower endpoints must sort the upper endpoints too.
    parts.sort_by_key(|p| p.lower.0);
    if parts.windows(2).any(|w| w[0].upper.0 >= w[1].upper.0) {
        return Err(Error::NotAPartition(
            "interval endpoints are not sorted together".into(),
        ));
    }
    Ok(parts)
}

/// Generating function of interval pairs: over parts `[S_i, T_i]` and
/// chains `S_i ⊆ A ⊆ C ⊆ T_i`, sums `x^(n-|C|) y^|A|`; computed in closed
/// form as `Σ_i x^(n-|T_i|) y^|S_i| (x+y+1)^|T_i \ S_i|`.
///
/// The orientation (which endpoint grades which variable) is the one the
/// brute-force census validates; the opposite choice pairs with the dual.
pub fn interval_enumerator(m: &Polymatroid, order: &ElementOrder) -> Result<BivariatePolynomial> {
    let parts = dawson_partition(m, order)?;
    let n = m.n() as u32;
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let core = &(&x + &y) + &BivariatePolynomial::one();
    let mut acc = BivariatePolynomial::zero();
    for part in &parts {
        let free = part.upper.difference(part.lower).len() as u32;
        let shift =
            BivariatePolynomial::monomial(1, n - part.upper.len() as u32, part.lower.len() as u32);
        acc = &acc + &(&shift * &core.pow(free));
    }
    Ok(acc)
}

/// Brute-force version of the interval enumerator, kept as the oracle the
/// grading was pinned against.
pub fn interval_enumerator_bruteforce(
    m: &Polymatroid,
    order: &ElementOrder,
) -> Result<BivariatePolynomial> {
    let parts = dawson_partition(m, order)?;
    let n = m.n() as u32;
    let mut acc = BivariatePolynomial::zero();
    for part in &parts {
        for a in m.ground().subsets() {
            if !(part.lower.is_subset_of(a) && a.is_subset_of(part.upper)) {
                continue;
            }
            for c in m.ground().subsets() {
                if !(a.is_subset_of(c) && c.is_subset_of(part.upper)) {
                    continue;
                }
                acc.add_term((n - c.len() as u32, a.len() as u32), BigInt::from(1));
            }
        }
    }
    Ok(acc)
}

/// Sign and grading report for the invariant of a matroid (the first two
/// checks also run on polymatroids, where alternation may legitimately
/// fail).
#[derive(Clone, Debug)]
pub struct CoefficientReport {
    /// `(-1)^(n-1) Q'(-x,-y)` is coefficientwise nonnegative.
    pub alternating: bool,
    /// Monomials violating alternation, if any.
    pub alternation_witnesses: Vec<(u32, u32)>,
    /// The top-degree part equals `(x+y)^(n-1)`.
    pub top_degree_binomial: bool,
    /// `(x+y+1) * (-1)^(n-1) Q'(-x,-y)` equals the interval enumerator
    /// (matroids only).
    pub grading: Option<bool>,
}

impl CoefficientReport {
    pub fn all_pass(&self) -> bool {
        self.alternating && self.top_degree_binomial && self.grading.unwrap_or(true)
    }
}

/// Computes the report from the lattice-point invariant.
pub fn coefficient_report(m: &Polymatroid) -> Result<CoefficientReport> {
    let qp = crate::geometry::q_prime(m)?;
    let n = m.n() as u32;
    let flipped = qp.flip_signs(true, true);
    let signed = if (n - 1) % 2 == 1 {
        flipped.scale(&BigInt::from(-1))
    } else {
        flipped
    };
    let alternation_witnesses: Vec<(u32, u32)> = signed
        .terms()
        .filter(|(_, c)| num_traits::Signed::is_negative(*c))
        .map(|(&e, _)| e)
        .collect();
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let top_degree_binomial =
        qp.total_degree() == n - 1 && qp.top_degree_part() == (&x + &y).pow(n - 1);
    let grading = if m.is_matroid() {
        let lhs = &(&(&x + &y) + &BivariatePolynomial::one()) * &signed;
        let rhs = interval_enumerator(m, &ElementOrder::natural(m.n()))?;
        Some(lhs == rhs)
    } else {
        None
    };
    Ok(CoefficientReport {
        alternating: alternation_witnesses.is_empty(),
        alternation_witnesses,
        top_degree_binomial,
        grading,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn pxy(m: &Polymatroid, x: &[usize]) -> PartitionXY {
        let xs = Subset::from_elements(x.iter().copied());
        let y = xs.complement(m.ground()).insert(1);
        PartitionXY::new(m, xs.insert(1), y).unwrap()
    }

    #[test]
    fn algorithm_examples() {
        let m = corpus::example_matroid();
        let b1 = Subset::singleton(1);
        let b2 = Subset::singleton(2);
        // X = {1,3}, Y = {1,2}: terminal basis {1} from either start.
        let p = pxy(&m, &[3]);
        assert_eq!(find_basis_for_partition(&m, p, b1).unwrap(), b1);
        assert_eq!(find_basis_for_partition(&m, p, b2).unwrap(), b1);
        // X = {1,2,3}, Y = {1}: terminal basis {2}.
        let p = pxy(&m, &[2, 3]);
        assert_eq!(find_basis_for_partition(&m, p, b1).unwrap(), b2);
        assert_eq!(find_basis_for_partition(&m, p, b2).unwrap(), b2);

        let u11 = corpus::uniform(1, 1);
        let p = PartitionXY::new(&u11, Subset::singleton(1), Subset::singleton(1)).unwrap();
        assert_eq!(
            find_basis_for_partition(&u11, p, Subset::singleton(1)).unwrap(),
            Subset::singleton(1)
        );
    }

    #[test]
    fn terminal_matches_max_weight_oracle() {
        // The terminal basis maximizes the weight of B △ Y over all bases.
        for entry in corpus::matroid_corpus(4) {
            let m = &entry.polymatroid;
            let bases = m.matroid_bases().unwrap();
            for p in PartitionXY::all(m) {
                let found = find_basis_for_partition(m, p, bases[0]).unwrap();
                let best = bases
                    .iter()
                    .max_by_key(|b| lex_weight(b.symmetric_difference(p.y)))
                    .unwrap();
                assert_eq!(found, *best, "{} ({}, {})", entry.name, p.x, p.y);
            }
        }
    }

    #[test]
    fn faces_of_example() {
        let m = corpus::example_matroid();
        let faces = top_degree_faces(&m).unwrap();
        assert_eq!(faces.len(), 4);
        let summary: Vec<(u32, u32)> = faces
            .iter()
            .map(|f| (f.partition.x.remove(1).0, f.basis.0))
            .collect();
        // X \ {1} over {2,3} with its terminal basis.
        let expected = vec![
            (Subset::EMPTY.0, Subset::singleton(1).0),
            (Subset::singleton(2).0, Subset::singleton(2).0),
            (Subset::singleton(3).0, Subset::singleton(1).0),
            (Subset::from_elements([2, 3]).0, Subset::singleton(2).0),
        ];
        assert_eq!(summary, expected);

        assert_eq!(top_degree_faces(&corpus::uniform(1, 1)).unwrap().len(), 1);
        let u12_faces = top_degree_faces(&corpus::uniform(1, 2)).unwrap();
        assert_eq!(u12_faces.len(), 2);
        for f in &u12_faces {
            let expected = if f.partition.x.contains(2) { 2 } else { 1 };
            assert_eq!(f.basis, Subset::singleton(expected));
        }
    }

    #[test]
    fn terminal_basis_is_unique() {
        for entry in corpus::matroid_corpus(4) {
            let m = &entry.polymatroid;
            for p in PartitionXY::all(m) {
                let hits = m
                    .matroid_bases()
                    .unwrap()
                    .iter()
                    .filter(|b| is_terminal_basis(m, p, **b).unwrap())
                    .count();
                assert_eq!(hits, 1, "{} ({}, {})", entry.name, p.x, p.y);
            }
        }
    }

    #[test]
    fn dawson_parts_of_examples() {
        let order = ElementOrder::natural(3);
        let m = corpus::example_matroid();
        let parts = dawson_partition(&m, &order).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].lower, Subset::EMPTY);
        assert_eq!(parts[0].upper, Subset::from_elements([1, 3]));
        assert_eq!(parts[1].lower, Subset::singleton(2));
        assert_eq!(parts[1].upper, Subset::from_elements([1, 2, 3]));

        let u11 = corpus::uniform(1, 1);
        let parts = dawson_partition(&u11, &ElementOrder::natural(1)).unwrap();
        assert_eq!(
            (parts[0].lower, parts[0].upper),
            (Subset::EMPTY, Subset::singleton(1))
        );

        let u23 = corpus::uniform(2, 3);
        let parts = dawson_partition(&u23, &order).unwrap();
        let triples: Vec<(u32, u32)> = parts.iter().map(|p| (p.lower.0, p.upper.0)).collect();
        assert_eq!(
            triples,
            vec![
                (Subset::EMPTY.0, Subset::from_elements([1, 2]).0),
                (Subset::singleton(3).0, Subset::from_elements([1, 3]).0),
                (
                    Subset::from_elements([2, 3]).0,
                    Subset::from_elements([1, 2, 3]).0
                ),
            ]
        );
    }

    #[test]
    fn interval_enumerator_example() {
        let m = corpus::example_matroid();
        let order = ElementOrder::natural(3);
        let got = interval_enumerator(&m, &order).unwrap();
        // (x+y)(x+y+1)^2
        let x = BivariatePolynomial::var_x();
        let y = BivariatePolynomial::var_y();
        let expected = &(&x + &y) * &(&(&x + &y) + &BivariatePolynomial::one()).pow(2);
        assert_eq!(got, expected);
        assert_eq!(got, interval_enumerator_bruteforce(&m, &order).unwrap());
        // Total interval count across parts.
        let one = BigInt::from(1);
        assert_eq!(got.evaluate_int(&one, &one), BigInt::from(18));

        let u11 = corpus::uniform(1, 1);
        let got = interval_enumerator(&u11, &ElementOrder::natural(1)).unwrap();
        let expected = &(&x + &y) + &BivariatePolynomial::one();
        assert_eq!(got, expected);
    }

    #[test]
    fn coefficient_report_examples() {
        let m = corpus::example_matroid();
        let report = coefficient_report(&m).unwrap();
        assert!(report.all_pass());

        let u12 = corpus::uniform(1, 2);
        assert!(coefficient_report(&u12).unwrap().all_pass());

        let doubled = corpus::doubled_example_polymatroid();
        let report = coefficient_report(&doubled).unwrap();
        assert!(!report.alternating);
        assert_eq!(report.alternation_witnesses, vec![(0, 0)]);
        assert!(report.top_degree_binomial);
        assert_eq!(report.grading, None);
    }
}
