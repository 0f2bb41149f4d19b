//! Polymatroid algebra: direct sums, duals with a scale parameter,
//! single-coordinate slices, and circuit-hyperplane relaxation, together
//! with the identities their invariants satisfy.

use crate::base::polymatroid_from_bases;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::poly::BivariatePolynomial;
use crate::rank::Polymatroid;

/// Direct sum on disjoint ground sets; the second summand is relabeled to
/// `n1+1 ..= n1+n2`.
pub fn direct_sum(m1: &Polymatroid, m2: &Polymatroid) -> Result<Polymatroid> {
    let n1 = m1.n();
    let n2 = m2.n();
    let ground = GroundSet::new(n1 + n2)?;
    let values = ground
        .subsets()
        .map(|s| {
            let left = Subset(s.0 & ((1 << n1) - 1));
            let right = Subset(s.0 >> n1);
            m1.rank(left) + m2.rank(right)
        })
        .collect();
    Polymatroid::from_table(ground, values)
}

/// The dual with scale `s`: ranks `r*(S) = s|S| + r(E \ S) - r(E)`,
/// the rank function of the reflected polytope `{s·1 - x}`. Requires `s`
/// at least the largest singleton rank; applying it twice with the same
/// `s` gives the original back.
pub fn s_dual(m: &Polymatroid, s: i64) -> Result<Polymatroid> {
    let max_singleton = m
        .ground()
        .elements()
        .map(|e| m.rank(Subset::singleton(e)))
        .max()
        .unwrap_or(0);
    if s < max_singleton {
        return Err(Error::STooSmall {
            s,
            min: max_singleton,
        });
    }
    let ground = m.ground();
    let total = m.total_rank();
    let values = ground
        .subsets()
        .map(|sub| s * sub.len() as i64 + m.rank(sub.complement(ground)) - total)
        .collect();
    Polymatroid::from_table(ground, values)
}

/// The slices of a polymatroid along one coordinate: for each value `k`
/// the bases with `x_a = k`, projected to the remaining elements. The
/// lowest slice is the deletion, the highest the contraction.
#[derive(Clone, Debug)]
pub struct SliceFamily {
    pub element: usize,
    pub k_min: i64,
    pub k_max: i64,
    /// Slice polymatroids on `n-1` elements, indexed from `k_min` upward.
    pub levels: Vec<Polymatroid>,
}

impl SliceFamily {
    pub fn deletion(&self) -> &Polymatroid {
        &self.levels[0]
    }

    pub fn contraction(&self) -> &Polymatroid {
        self.levels.last().expect("at least one slice")
    }

    pub fn level(&self, k: i64) -> Option<&Polymatroid> {
        if k < self.k_min || k > self.k_max {
            None
        } else {
            Some(&self.levels[(k - self.k_min) as usize])
        }
    }
}

/// Groups the bases by their coordinate at `a` and rebuilds each group as
/// a polymatroid on the remaining elements. Every slice must validate;
/// a failure here is a finding about the input, not a crash.
pub fn slices(m: &Polymatroid, a: usize) -> Result<SliceFamily> {
    let n = m.n();
    if a == 0 || a > n {
        return Err(Error::InvalidInput(format!("element {a} out of range")));
    }
    if n < 2 {
        return Err(Error::InvalidInput(
            "slices need at least two elements".into(),
        ));
    }
    let bases = m.bases();
    let k_min = bases.iter().map(|b| b.get(a)).min().expect("nonempty");
    let k_max = bases.iter().map(|b| b.get(a)).max().expect("nonempty");
    let mut levels = Vec::new();
    for k in k_min..=k_max {
        let group: Vec<Vec<i64>> = bases
            .iter()
            .filter(|b| b.get(a) == k)
            .map(|b| (1..=n).filter(|&i| i != a).map(|i| b.get(i)).collect())
            .collect();
        if group.is_empty() {
            return Err(Error::NotAPolymatroid(format!(
                "slice at {a} = {k} has no bases"
            )));
        }
        levels.push(polymatroid_from_bases(n - 1, &group).map_err(|e| {
            Error::NotAPolymatroid(format!("slice at {a} = {k} is not a polymatroid: {e}"))
        })?);
    }
    Ok(SliceFamily {
        element: a,
        k_min,
        k_max,
        levels,
    })
}

/// Both sides of the slice recurrence, for reporting.
#[derive(Clone, Debug)]
pub struct SliceRecurrenceReport {
    pub element: usize,
    pub lhs: BivariatePolynomial,
    pub rhs: BivariatePolynomial,
    pub holds: bool,
}

/// Checks `Q'_M = (x-1) Q'_del + (y-1) Q'_con + Σ_k Q'_(slice k)`, the sum
/// running over every slice including the two extremes.
pub fn slice_recurrence_check(m: &Polymatroid, a: usize) -> Result<SliceRecurrenceReport> {
    let family = slices(m, a)?;
    let lhs = crate::geometry::q_prime(m)?;
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let one = BivariatePolynomial::one();
    let del = crate::geometry::q_prime(family.deletion())?;
    let con = crate::geometry::q_prime(family.contraction())?;
    let mut rhs = &(&(&x - &one) * &del) + &(&(&y - &one) * &con);
    for level in &family.levels {
        rhs = &rhs + &crate::geometry::q_prime(level)?;
    }
    let holds = lhs == rhs;
    if !holds {
        return Err(Error::IdentityFailed(format!(
            "slice recurrence at element {a}: lhs {lhs}, rhs {rhs}"
        )));
    }
    Ok(SliceRecurrenceReport {
        element: a,
        lhs,
        rhs,
        holds,
    })
}

/// Adds a set that is simultaneously a circuit and a hyperplane as a new
/// basis. The preconditions are checked from the rank table; the result is
/// rebuilt from the extended base list and revalidated.
pub fn relax_circuit_hyperplane(m: &Polymatroid, c: Subset) -> Result<Polymatroid> {
    if !m.is_matroid() {
        return Err(Error::NotAMatroid("relax_circuit_hyperplane".into()));
    }
    let size = c.len() as i64;
    let rank = m.rank(c);
    if rank >= size {
        return Err(Error::NotACircuitHyperplane(c, "set is independent".into()));
    }
    if rank != size - 1 {
        return Err(Error::NotACircuitHyperplane(
            c,
            "set is dependent but not a circuit".into(),
        ));
    }
    for e in c.elements() {
        let smaller = c.remove(e);
        if m.rank(smaller) != smaller.len() as i64 {
            return Err(Error::NotACircuitHyperplane(
                c,
                format!("proper subset {smaller} is dependent"),
            ));
        }
    }
    if rank != m.total_rank() - 1 {
        return Err(Error::NotACircuitHyperplane(
            c,
            "rank is not one below the matroid rank".into(),
        ));
    }
    for e in c.complement(m.ground()).elements() {
        if m.rank(c.insert(e)) == rank {
            return Err(Error::NotACircuitHyperplane(
                c,
                format!("not a flat: adding {e} keeps the rank"),
            ));
        }
    }
    let n = m.n();
    let mut vectors: Vec<Vec<i64>> = m.bases().iter().map(|b| b.coords().to_vec()).collect();
    vectors.push((1..=n).map(|i| i64::from(c.contains(i))).collect());
    polymatroid_from_bases(n, &vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::geometry::q_prime;
    use crate::poly::BivariatePolynomial as Poly;

    fn p(terms: &[((u32, u32), i64)]) -> Poly {
        Poly::from_terms(terms.iter().copied())
    }

    #[test]
    fn direct_sum_reproduces_example() {
        // U_{1,2} plus a loop is the worked three-element matroid.
        let u12 = corpus::uniform(1, 2);
        let loop1 = corpus::uniform(0, 1);
        let sum = direct_sum(&u12, &loop1).unwrap();
        assert_eq!(sum, corpus::example_matroid());

        // Product identity: (x+y-1) * Q'_1 * Q'_2.
        let q_sum = q_prime(&sum).unwrap();
        let x = Poly::var_x();
        let y = Poly::var_y();
        let unit = &(&x + &y) - &Poly::one();
        let q1 = q_prime(&u12).unwrap();
        let q2 = q_prime(&loop1).unwrap();
        assert_eq!(q_sum, &(&unit * &q1) * &q2);
        assert_eq!(
            q_sum,
            p(&[
                ((2, 0), 1),
                ((1, 1), 2),
                ((0, 2), 1),
                ((1, 0), -1),
                ((0, 1), -1)
            ])
        );

        // Two singletons: a segment.
        let seg = direct_sum(&corpus::singleton(1), &corpus::singleton(1)).unwrap();
        assert_eq!(
            q_prime(&seg).unwrap(),
            p(&[((1, 0), 1), ((0, 1), 1), ((0, 0), -1)])
        );
    }

    #[test]
    fn dual_examples() {
        let u13 = corpus::uniform(1, 3);
        let d = s_dual(&u13, 1).unwrap();
        assert_eq!(d, corpus::uniform(2, 3));
        assert_eq!(
            q_prime(&u13).unwrap(),
            p(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1), ((0, 1), -1)])
        );
        assert_eq!(
            q_prime(&d).unwrap(),
            p(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1), ((1, 0), -1)])
        );

        // The worked example is self-complementary up to swapping x and y.
        let m = corpus::example_matroid();
        let md = s_dual(&m, 1).unwrap();
        let bases: Vec<Vec<i64>> = md.bases().iter().map(|b| b.coords().to_vec()).collect();
        assert_eq!(bases, vec![vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(q_prime(&md).unwrap(), q_prime(&m).unwrap().swap_vars());

        // Involution for several scales, matroid or not.
        for entry in corpus::polymatroid_corpus() {
            let m = entry.polymatroid;
            let max_singleton = (1..=m.n())
                .map(|e| m.rank(Subset::singleton(e)))
                .max()
                .unwrap();
            for s in max_singleton..=max_singleton + 2 {
                let twice = s_dual(&s_dual(&m, s).unwrap(), s).unwrap();
                assert_eq!(twice, m, "{} s={}", entry.name, s);
            }
        }
        assert!(matches!(
            s_dual(&corpus::singleton(3), 2),
            Err(Error::STooSmall { .. })
        ));
    }

    #[test]
    fn slices_of_doubled_example() {
        let m2 = corpus::doubled_example_polymatroid();
        let family = slices(&m2, 1).unwrap();
        assert_eq!((family.k_min, family.k_max), (0, 2));
        let projected: Vec<Vec<Vec<i64>>> = family
            .levels
            .iter()
            .map(|p| p.bases().iter().map(|b| b.coords().to_vec()).collect())
            .collect();
        assert_eq!(
            projected,
            vec![vec![vec![2, 0]], vec![vec![1, 0]], vec![vec![0, 0]]]
        );
    }

    #[test]
    fn slices_of_matroids_are_minors() {
        let m = corpus::example_matroid();
        // 1 is neither loop nor coloop: two slices.
        let family = slices(&m, 1).unwrap();
        assert_eq!(family.levels.len(), 2);
        // 3 is a loop: a single slice.
        let family = slices(&m, 3).unwrap();
        assert_eq!(family.levels.len(), 1);
        // A coloop gives a single slice as well.
        let u22 = corpus::uniform(2, 2);
        let family = slices(&u22, 1).unwrap();
        assert_eq!(family.levels.len(), 1);
        assert_eq!(family.k_min, 1);
    }

    #[test]
    fn slice_recurrence_on_doubled_example() {
        let m2 = corpus::doubled_example_polymatroid();
        let report = slice_recurrence_check(&m2, 1).unwrap();
        assert!(report.holds);
        assert_eq!(
            report.lhs,
            p(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1), ((0, 0), -1)])
        );
    }

    #[test]
    fn relaxation_examples() {
        let seed = polymatroid_from_bases(3, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let c = Subset::from_elements([1, 2]);
        let relaxed = relax_circuit_hyperplane(&seed, c).unwrap();
        assert_eq!(relaxed, corpus::uniform(2, 3));
        // Q'_M = Q'_relaxed - x^(n-r-1) y^(r-1).
        let n = seed.n() as u32;
        let r = seed.total_rank() as u32;
        let shift = Poly::monomial(1, n - r - 1, r - 1);
        assert_eq!(
            q_prime(&seed).unwrap(),
            &q_prime(&relaxed).unwrap() - &shift
        );

        // Already a basis: rejected.
        assert!(matches!(
            relax_circuit_hyperplane(&corpus::uniform(2, 3), c),
            Err(Error::NotACircuitHyperplane(_, _))
        ));
        // Not a flat: {1,2} in U_{1,3} has rank 1 = r(E), not a hyperplane.
        assert!(relax_circuit_hyperplane(&corpus::uniform(1, 3), c).is_err());
    }
}
