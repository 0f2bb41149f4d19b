//! Integer base vectors of a polymatroid and the transfer relation.
//!
//! A base is an integer vector `x` with `x·e_E = r(E)` and `x·e_S ≤ r(S)`
//! for every subset `S`. Those constraints force `x ≥ 0`, so enumeration
//! can stay inside the box `Π [0, r({i})]`.

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::rank::{Polymatroid, RankFunction};

/// A lattice point of the base polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseVector(Vec<i64>);

impl BaseVector {
    pub fn new(coords: Vec<i64>) -> Self {
        BaseVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate of `element` (1-based label).
    pub fn get(&self, element: usize) -> i64 {
        self.0[element - 1]
    }

    /// Sum of coordinates over a subset.
    pub fn dot(&self, s: Subset) -> i64 {
        s.elements().map(|e| self.0[e - 1]).sum()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Elements with a nonzero coordinate.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, _)| i + 1)
    }

    /// The vector `self - e_from + e_to`.
    pub fn transfer(&self, from: usize, to: usize) -> BaseVector {
        let mut v = self.0.clone();
        v[from - 1] -= 1;
        v[to - 1] += 1;
        BaseVector(v)
    }
}

impl std::fmt::Display for BaseVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Checks the base constraints of a single vector against the rank table.
pub fn is_base(m: &Polymatroid, q: &[i64]) -> bool {
    if q.len() != m.n() {
        return false;
    }
    if q.iter().any(|&v| v < 0) {
        return false;
    }
    let ground = m.ground();
    for s in ground.subsets() {
        let dot: i64 = s.elements().map(|e| q[e - 1]).sum();
        if s == ground.full_subset() {
            if dot != m.total_rank() {
                return false;
            }
        } else if dot > m.rank(s) {
            return false;
        }
    }
    true
}

impl Polymatroid {
    /// All integer bases, sorted lexicographically. Computed once and cached.
    pub fn bases(&self) -> &[BaseVector] {
        self.bases_cell().get_or_init(|| enumerate_bases(self))
    }

    pub fn base_count(&self) -> usize {
        self.bases().len()
    }

    /// True iff `x - e_from + e_to` is again a base. A transfer from an
    /// element to itself is trivially possible.
    pub fn transfer_possible(&self, x: &BaseVector, from: usize, to: usize) -> Result<bool> {
        if !is_base(self, x.coords()) {
            return Err(Error::NotABase(x.coords().to_vec()));
        }
        if from == to {
            return Ok(true);
        }
        Ok(is_base(self, x.transfer(from, to).coords()))
    }
}

fn enumerate_bases(m: &Polymatroid) -> Vec<BaseVector> {
    let n = m.n();
    let target = m.total_rank();
    let singleton_rank: Vec<i64> = (1..=n).map(|e| m.rank(Subset::singleton(e))).collect();
    // Max the tail can still contribute, for pruning.
    let mut tail_max = vec![0i64; n + 1];
    for i in (0..n).rev() {
        tail_max[i] = tail_max[i + 1] + singleton_rank[i];
    }
    let mut out = Vec::new();
    let mut partial = vec![0i64; n];
    descend(
        m,
        0,
        0,
        target,
        &singleton_rank,
        &tail_max,
        &mut partial,
        &mut out,
    );
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn descend(
    m: &Polymatroid,
    depth: usize,
    sum: i64,
    target: i64,
    singleton_rank: &[i64],
    tail_max: &[i64],
    partial: &mut Vec<i64>,
    out: &mut Vec<BaseVector>,
) {
    let n = m.n();
    if depth == n {
        if sum == target {
            out.push(BaseVector::new(partial.clone()));
        }
        return;
    }
    for v in 0..=singleton_rank[depth] {
        let new_sum = sum + v;
        if new_sum > target || new_sum + tail_max[depth + 1] < target {
            continue;
        }
        partial[depth] = v;
        // Check every constraint whose largest element is the one just fixed.
        let mut ok = true;
        let newest = 1u32 << depth;
        let rest = newest - 1;
        let mut t = rest;
        loop {
            let s = Subset(t | newest);
            let dot: i64 = s.elements().map(|e| partial[e - 1]).sum();
            if dot > m.rank(s) {
                ok = false;
                break;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        if ok {
            descend(
                m,
                depth + 1,
                new_sum,
                target,
                singleton_rank,
                tail_max,
                partial,
                out,
            );
        }
        partial[depth] = 0;
    }
}

/// Recovers a polymatroid from a claimed full list of its bases.
///
/// The rank is `r(S) = max_x x·e_S`; the table is validated, and the
/// resulting polymatroid must enumerate exactly the input set (otherwise
/// the input was not the complete lattice-point set of its own polytope).
pub fn polymatroid_from_bases(n: usize, bases: &[Vec<i64>]) -> Result<Polymatroid> {
    let ground = GroundSet::new(n)?;
    if bases.is_empty() {
        return Err(Error::NotAPolymatroid("empty base list".into()));
    }
    for b in bases {
        if b.len() != n {
            return Err(Error::NotAPolymatroid(format!(
                "vector {b:?} has length {}, expected {n}",
                b.len()
            )));
        }
        if b.iter().any(|&v| v < 0) {
            return Err(Error::NotAPolymatroid(format!(
                "vector {b:?} has a negative coordinate"
            )));
        }
    }
    let total: i64 = bases[0].iter().sum();
    if bases.iter().any(|b| b.iter().sum::<i64>() != total) {
        return Err(Error::NotAPolymatroid(
            "coordinate sums are not all equal".into(),
        ));
    }

    let values: Vec<i64> = ground
        .subsets()
        .map(|s| {
            bases
                .iter()
                .map(|b| s.elements().map(|e| b[e - 1]).sum::<i64>())
                .max()
                .unwrap()
        })
        .collect();
    let rank = RankFunction::from_table(ground, values)
        .map_err(|e| Error::NotAPolymatroid(format!("rank table invalid: {e}")))?;
    let m = Polymatroid::new(rank);

    let mut input: Vec<BaseVector> = bases.iter().map(|b| BaseVector::new(b.clone())).collect();
    input.sort();
    input.dedup();
    if m.bases() != input.as_slice() {
        return Err(Error::NotAPolymatroid(
            "input is not the full lattice-point set of its polytope".into(),
        ));
    }
    Ok(m)
}

/// Exhaustively checks the exchange property: for bases `x`, `y` and any
/// `i` with `x_i > y_i` there is an `l` with `x_l < y_l` such that
/// `x - e_i + e_l` is a base.
pub fn base_exchange_holds(m: &Polymatroid) -> bool {
    let bases = m.bases();
    for x in bases {
        for y in bases {
            for i in 1..=m.n() {
                if x.get(i) <= y.get(i) {
                    continue;
                }
                let found = (1..=m.n())
                    .any(|l| x.get(l) < y.get(l) && is_base(m, x.transfer(i, l).coords()));
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn example_bases() {
        let m = corpus::example_matroid();
        let bases: Vec<Vec<i64>> = m.bases().iter().map(|b| b.coords().to_vec()).collect();
        assert_eq!(bases, vec![vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn example75_bases() {
        let m = corpus::example_polymatroid();
        let bases: Vec<Vec<i64>> = m.bases().iter().map(|b| b.coords().to_vec()).collect();
        assert_eq!(
            bases,
            vec![
                vec![0, 2, 1],
                vec![1, 1, 1],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0],
            ]
        );
    }

    #[test]
    fn singleton_rank_k() {
        let m = corpus::singleton(4);
        assert_eq!(m.bases(), &[BaseVector::new(vec![4])]);
    }

    #[test]
    fn transfers_in_example() {
        let m = corpus::example_matroid();
        let x = BaseVector::new(vec![0, 1, 0]);
        assert!(m.transfer_possible(&x, 2, 1).unwrap());
        let y = BaseVector::new(vec![1, 0, 0]);
        assert!(!m.transfer_possible(&y, 2, 1).unwrap());
        assert!(m.transfer_possible(&y, 2, 2).unwrap());
        assert!(m
            .transfer_possible(&BaseVector::new(vec![1, 1, 0]), 1, 2)
            .is_err());
    }

    #[test]
    fn from_bases_roundtrip() {
        let m = polymatroid_from_bases(3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(m.rank(Subset::from_elements([1, 2])), 1);
        assert_eq!(m.rank(Subset::singleton(3)), 0);
        assert_eq!(m.total_rank(), 1);
        assert_eq!(m, corpus::example_matroid());

        let k = polymatroid_from_bases(1, &[vec![5]]).unwrap();
        assert_eq!(k.rank(Subset::singleton(1)), 5);
    }

    #[test]
    fn from_bases_rejects_bad_input() {
        assert!(matches!(
            polymatroid_from_bases(2, &[vec![1, 0], vec![0, 1], vec![2, -1]]),
            Err(Error::NotAPolymatroid(_))
        ));
        assert!(polymatroid_from_bases(2, &[vec![1, 0], vec![2, 1]]).is_err());
        // Missing interior point: the midpoint of (0,2) and (2,0) is (1,1).
        assert!(matches!(
            polymatroid_from_bases(2, &[vec![0, 2], vec![2, 0]]),
            Err(Error::NotAPolymatroid(_))
        ));
    }

    #[test]
    fn matroid_bases_are_indicator_vectors() {
        let m = corpus::uniform(2, 4);
        assert_eq!(m.base_count(), 6);
        for b in m.bases() {
            assert!(b.coords().iter().all(|&v| v == 0 || v == 1));
            assert_eq!(b.total(), 2);
        }
    }

    #[test]
    fn exchange_property_small() {
        for m in [
            corpus::example_matroid(),
            corpus::example_polymatroid(),
            corpus::uniform(2, 4),
            corpus::doubled_example_polymatroid(),
        ] {
            assert!(base_exchange_holds(&m));
        }
    }
}
