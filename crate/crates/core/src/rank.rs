//! Rank functions and polymatroids.

use crate::error::{Axiom, Error, Result};
use crate::ground::{GroundSet, Subset};

/// A total rank table over all `2^n` subsets of a ground set, validated
/// against the polymatroid axioms on construction:
///
/// - P1: `r(∅) = 0`
/// - P2: `Y ⊆ X  ⇒  r(Y) ≤ r(X)`
/// - P3: `r(X∪Y) + r(X∩Y) ≤ r(X) + r(Y)`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankFunction {
    ground: GroundSet,
    values: Vec<i64>,
}

impl RankFunction {
    /// Validates `values` (indexed by subset mask) and wraps it.
    ///
    /// The checks are exhaustive: P2 over all element-removals, P3 over all
    /// pairs of subsets. A violation reports the offending subsets.
    pub fn from_table(ground: GroundSet, values: Vec<i64>) -> Result<Self> {
        if values.len() != ground.subset_count() {
            return Err(Error::InvalidInput(format!(
                "rank table has {} entries, expected {}",
                values.len(),
                ground.subset_count()
            )));
        }
        if values[0] != 0 {
            return Err(Error::AxiomViolation {
                axiom: Axiom::P1,
                witness_a: Subset::EMPTY,
                witness_b: Subset::EMPTY,
            });
        }
        for s in ground.subsets() {
            if values[s.0 as usize] < 0 {
                return Err(Error::InvalidInput(format!("negative rank at {s}")));
            }
            // P2 reduces to single-element removals.
            for e in s.elements() {
                let smaller = s.remove(e);
                if values[smaller.0 as usize] > values[s.0 as usize] {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::P2,
                        witness_a: smaller,
                        witness_b: s,
                    });
                }
            }
        }
        for x in ground.subsets() {
            for y in ground.subsets() {
                if y.0 < x.0 {
                    continue;
                }
                let union = x.union(y);
                let inter = x.intersection(y);
                if values[union.0 as usize] + values[inter.0 as usize]
                    > values[x.0 as usize] + values[y.0 as usize]
                {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::P3,
                        witness_a: x,
                        witness_b: y,
                    });
                }
            }
        }
        Ok(RankFunction { ground, values })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn rank(&self, s: Subset) -> i64 {
        self.values[s.0 as usize]
    }

    /// Rank of the full ground set.
    pub fn total_rank(&self) -> i64 {
        self.values[self.ground.full_subset().0 as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// A polymatroid: a validated rank function plus the matroid flag
/// (`r({i}) ≤ 1` for every element).
#[derive(Clone, Debug)]
pub struct Polymatroid {
    rank: RankFunction,
    is_matroid: bool,
    bases: std::sync::OnceLock<Vec<crate::base::BaseVector>>,
}

impl PartialEq for Polymatroid {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
    }
}
impl Eq for Polymatroid {}

impl Polymatroid {
    pub fn new(rank: RankFunction) -> Self {
        let is_matroid = rank
            .ground()
            .elements()
            .all(|e| rank.rank(Subset::singleton(e)) <= 1);
        Polymatroid {
            rank,
            is_matroid,
            bases: std::sync::OnceLock::new(),
        }
    }

    /// Validates a raw table and wraps it in one step.
    pub fn from_table(ground: GroundSet, values: Vec<i64>) -> Result<Self> {
        Ok(Polymatroid::new(RankFunction::from_table(ground, values)?))
    }

    pub fn rank_fn(&self) -> &RankFunction {
        &self.rank
    }

    pub fn ground(&self) -> GroundSet {
        self.rank.ground()
    }

    pub fn n(&self) -> usize {
        self.rank.ground().size()
    }

    pub fn rank(&self, s: Subset) -> i64 {
        self.rank.rank(s)
    }

    pub fn total_rank(&self) -> i64 {
        self.rank.total_rank()
    }

    pub fn is_matroid(&self) -> bool {
        self.is_matroid
    }

    pub(crate) fn bases_cell(&self) -> &std::sync::OnceLock<Vec<crate::base::BaseVector>> {
        &self.bases
    }

    fn require_matroid(&self) -> Result<()> {
        if self.is_matroid {
            Ok(())
        } else {
            Err(Error::NotAMatroid(
                "operation defined for matroids only".into(),
            ))
        }
    }

    /// A loop is an element of rank zero. Matroids only.
    pub fn is_loop(&self, e: usize) -> Result<bool> {
        self.require_matroid()?;
        Ok(self.rank(Subset::singleton(e)) == 0)
    }

    /// A coloop is an element whose removal drops the rank. Matroids only.
    pub fn is_coloop(&self, e: usize) -> Result<bool> {
        self.require_matroid()?;
        let rest = Subset::singleton(e).complement(self.ground());
        Ok(self.rank(rest) == self.total_rank() - 1)
    }

    /// Basis sets of a matroid, as subsets (the supports of its base vectors).
    pub fn matroid_bases(&self) -> Result<Vec<Subset>> {
        self.require_matroid()?;
        Ok(self
            .bases()
            .iter()
            .map(|b| Subset::from_elements(b.support()))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, f: impl Fn(Subset) -> i64) -> Vec<i64> {
        let g = GroundSet::new(n).unwrap();
        g.subsets().map(f).collect()
    }

    #[test]
    fn uniform_u12_is_valid() {
        // r(∅)=0, r({1})=r({2})=1, r({1,2})=1
        let g = GroundSet::new(2).unwrap();
        let m = Polymatroid::from_table(g, vec![0, 1, 1, 1]).unwrap();
        assert!(m.is_matroid());
        assert_eq!(m.total_rank(), 1);
    }

    #[test]
    fn p1_violation() {
        let g = GroundSet::new(1).unwrap();
        let err = RankFunction::from_table(g, vec![1, 1]).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::P1,
                ..
            }
        ));
    }

    #[test]
    fn p2_violation() {
        let g = GroundSet::new(2).unwrap();
        let err = RankFunction::from_table(g, vec![0, 2, 1, 1]).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::P2,
                ..
            }
        ));
    }

    #[test]
    fn p3_violation() {
        // r({1})=r({2})=1 but r({1,2})=3 breaks submodularity.
        let g = GroundSet::new(2).unwrap();
        let err = RankFunction::from_table(g, vec![0, 1, 1, 3]).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::P3,
                ..
            }
        ));
    }

    #[test]
    fn doubled_example_polymatroid() {
        // Doubling the rank of the three-element matroid with bases {1},{2}:
        // singleton ranks 2,2,0 and r(E)=2.
        let g = GroundSet::new(3).unwrap();
        let values = table(3, |s| {
            let base = [0, 1, 1, 1, 0, 1, 1, 1][s.0 as usize];
            2 * base
        });
        let m = Polymatroid::from_table(g, values).unwrap();
        assert!(!m.is_matroid());
        assert_eq!(m.total_rank(), 2);
    }

    #[test]
    fn loops_and_coloops() {
        // Bases {1},{2} on three elements: 3 is a loop, nothing is a coloop.
        let g = GroundSet::new(3).unwrap();
        let m = Polymatroid::from_table(g, vec![0, 1, 1, 1, 0, 1, 1, 1]).unwrap();
        assert!(m.is_loop(3).unwrap());
        assert!(!m.is_loop(1).unwrap());
        assert!(!m.is_coloop(1).unwrap());

        // A single coloop.
        let g1 = GroundSet::new(1).unwrap();
        let u11 = Polymatroid::from_table(g1, vec![0, 1]).unwrap();
        assert!(u11.is_coloop(1).unwrap());
        assert!(!u11.is_loop(1).unwrap());

        // U_{1,2}: neither loops nor coloops.
        let g2 = GroundSet::new(2).unwrap();
        let u12 = Polymatroid::from_table(g2, vec![0, 1, 1, 1]).unwrap();
        assert!(!u12.is_loop(1).unwrap() && !u12.is_coloop(1).unwrap());
    }

    #[test]
    fn matroid_ops_reject_polymatroids() {
        let g = GroundSet::new(1).unwrap();
        let p = Polymatroid::from_table(g, vec![0, 3]).unwrap();
        assert!(p.is_loop(1).is_err());
    }
}
