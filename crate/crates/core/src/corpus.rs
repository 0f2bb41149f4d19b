//! Stock matroids and polymatroids used by the test suites and the
//! command-line corpus generator.

use crate::base::polymatroid_from_bases;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::rank::Polymatroid;

/// The uniform matroid `U_{r,n}`: every `r`-subset is a basis.
pub fn uniform(r: usize, n: usize) -> Polymatroid {
    let ground = GroundSet::new(n).expect("uniform ground size");
    let values = ground.subsets().map(|s| s.len().min(r) as i64).collect();
    Polymatroid::from_table(ground, values).expect("uniform rank table")
}

/// The three-element matroid with bases `{1}` and `{2}` (element 3 a loop).
pub fn example_matroid() -> Polymatroid {
    polymatroid_from_bases(3, &[vec![1, 0, 0], vec![0, 1, 0]]).expect("example matroid")
}

/// The same matroid with its rank function doubled; the smallest
/// polymatroid whose invariant has non-alternating signs.
pub fn doubled_example_polymatroid() -> Polymatroid {
    let m = example_matroid();
    let ground = m.ground();
    let values = ground.subsets().map(|s| 2 * m.rank(s)).collect();
    Polymatroid::from_table(ground, values).expect("doubled rank table")
}

/// The rank-3 polymatroid on three elements with five integer bases,
/// the standard witness that the bivariate activity enumerator depends
/// on the element order.
pub fn example_polymatroid() -> Polymatroid {
    polymatroid_from_bases(
        3,
        &[
            vec![0, 2, 1],
            vec![1, 1, 1],
            vec![1, 2, 0],
            vec![2, 1, 0],
            vec![2, 0, 1],
        ],
    )
    .expect("example polymatroid")
}

/// A single element of rank `k`.
pub fn singleton(k: i64) -> Polymatroid {
    let ground = GroundSet::new(1).expect("singleton ground");
    Polymatroid::from_table(ground, vec![0, k]).expect("singleton table")
}

/// The graphic matroid of the complete graph on four vertices: six edges,
/// sixteen spanning trees, rank three. Edges are labeled 1..=6 as
/// 12, 13, 14, 23, 24, 34.
pub fn graphic_k4() -> Polymatroid {
    const EDGES: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let ground = GroundSet::new(6).expect("k4 ground");
    let values = ground
        .subsets()
        .map(|s| {
            // Rank of an edge set = 4 - number of connected components.
            let mut parent: Vec<usize> = (0..=4).collect();
            fn find(parent: &mut Vec<usize>, v: usize) -> usize {
                if parent[v] != v {
                    let root = find(parent, parent[v]);
                    parent[v] = root;
                }
                parent[v]
            }
            for e in s.elements() {
                let (a, b) = EDGES[e - 1];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
            let components = (1..=4).filter(|&v| find(&mut parent, v) == v).count();
            (4 - components) as i64
        })
        .collect();
    Polymatroid::from_table(ground, values).expect("k4 rank table")
}

/// Deterministic generator state (splitmix64).
#[derive(Clone, Debug)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// A uniformly shuffled element order on `1..=n`.
    pub fn order(&mut self, n: usize) -> crate::ground::ElementOrder {
        let mut seq: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = self.below(i as u64 + 1) as usize;
            seq.swap(i, j);
        }
        crate::ground::ElementOrder::new(seq).expect("shuffled permutation")
    }
}

/// A random polymatroid on `n` elements: a sum of one to three truncated
/// modular functions `S ↦ min(cap, Σ_{i∈S} w_i)`, which is always
/// normalized, monotone, and submodular. Deterministic in the seed.
pub fn random_polymatroid(n: usize, seed: u64) -> Result<Polymatroid> {
    let ground = GroundSet::new(n)?;
    let mut rng = Rng::new(seed);
    let summands = 1 + rng.below(3) as usize;
    let mut parts = Vec::with_capacity(summands);
    for _ in 0..summands {
        let weights: Vec<i64> = (0..n).map(|_| rng.range_i64(0, 3)).collect();
        let sum: i64 = weights.iter().sum();
        let cap = if sum == 0 {
            0
        } else {
            rng.range_i64(1, sum.min(5))
        };
        parts.push((weights, cap));
    }
    let values = ground
        .subsets()
        .map(|s| {
            parts
                .iter()
                .map(|(w, cap)| {
                    let total: i64 = s.elements().map(|e| w[e - 1]).sum();
                    total.min(*cap)
                })
                .sum()
        })
        .collect();
    Polymatroid::from_table(ground, values)
}

/// Named corpus entry: a polymatroid plus the label the file corpus uses.
pub struct CorpusEntry {
    pub name: String,
    pub polymatroid: Polymatroid,
}

fn dual_entry(name: &str, m: &Polymatroid) -> CorpusEntry {
    CorpusEntry {
        name: format!("{name}-dual"),
        polymatroid: crate::constructions::s_dual(m, 1).expect("matroid 1-dual"),
    }
}

/// The matroid verification corpus: all uniforms with `n ≤ max_n`, the
/// worked three-element example, graphic K4, their 1-duals, and two
/// circuit-hyperplane relaxations.
pub fn matroid_corpus(max_n: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=n {
            out.push(CorpusEntry {
                name: format!("uniform-{r}-{n}"),
                polymatroid: uniform(r, n),
            });
        }
    }
    let ex = example_matroid();
    out.push(dual_entry("example-1", &ex));
    out.push(CorpusEntry {
        name: "example-1".into(),
        polymatroid: ex,
    });
    if max_n >= 6 {
        let k4 = graphic_k4();
        out.push(dual_entry("k4", &k4));
        out.push(CorpusEntry {
            name: "k4".into(),
            polymatroid: k4,
        });
    }
    // Two relaxations: {1,2} is a circuit-hyperplane of both seeds.
    let seed_a = polymatroid_from_bases(3, &[vec![1, 0, 1], vec![0, 1, 1]]).expect("seed a");
    let relaxed_a =
        crate::constructions::relax_circuit_hyperplane(&seed_a, Subset::from_elements([1, 2]))
            .expect("relax seed a");
    out.push(CorpusEntry {
        name: "line3".into(),
        polymatroid: seed_a,
    });
    out.push(CorpusEntry {
        name: "relaxed-line3".into(),
        polymatroid: relaxed_a,
    });
    let seed_b = polymatroid_from_bases(
        4,
        &[
            vec![1, 0, 1, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 1, 0],
            vec![0, 1, 0, 1],
        ],
    )
    .expect("seed b");
    let relaxed_b =
        crate::constructions::relax_circuit_hyperplane(&seed_b, Subset::from_elements([1, 2]))
            .expect("relax seed b");
    out.push(CorpusEntry {
        name: "pair4".into(),
        polymatroid: seed_b,
    });
    out.push(CorpusEntry {
        name: "relaxed-pair4".into(),
        polymatroid: relaxed_b,
    });
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// The polymatroid verification corpus (proper polymatroids only).
pub fn polymatroid_corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        CorpusEntry {
            name: "example-75".into(),
            polymatroid: example_polymatroid(),
        },
        CorpusEntry {
            name: "example-1-doubled".into(),
            polymatroid: doubled_example_polymatroid(),
        },
        CorpusEntry {
            name: "singleton-3".into(),
            polymatroid: singleton(3),
        },
    ];
    let mut picked = 0;
    let mut seed = 1u64;
    while picked < 6 {
        let n = 2 + (seed % 3) as usize;
        if let Ok(p) = random_polymatroid(n, seed) {
            if !p.is_matroid() {
                out.push(CorpusEntry {
                    name: format!("random-{n}-{seed}"),
                    polymatroid: p,
                });
                picked += 1;
            }
        }
        seed += 1;
    }
    out
}

/// Family dispatcher used by the command-line generator.
pub fn family(name: &str, params: &[(String, String)], seed: u64) -> Result<(String, Polymatroid)> {
    let get = |key: &str| -> Option<&str> {
        params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    };
    let parse = |key: &str| -> Result<usize> {
        get(key)
            .ok_or_else(|| Error::InvalidInput(format!("missing parameter {key}")))?
            .parse()
            .map_err(|_| Error::InvalidInput(format!("parameter {key} is not a number")))
    };
    match name {
        "uniform" => {
            let r = parse("r")?;
            let n = parse("n")?;
            if n == 0 || n > crate::ground::MAX_GROUND || r > n {
                return Err(Error::InvalidInput(format!(
                    "uniform parameters r={r} n={n}"
                )));
            }
            Ok((format!("uniform-{r}-{n}"), uniform(r, n)))
        }
        "graphic-k4" => Ok(("k4".into(), graphic_k4())),
        "paper-ex1" => Ok(("example-1".into(), example_matroid())),
        "paper-ex75" => Ok(("example-75".into(), example_polymatroid())),
        "random-polymatroid" => {
            let n = parse("n")?;
            Ok((format!("random-{n}-{seed}"), random_polymatroid(n, seed)?))
        }
        other => Err(Error::InvalidInput(format!("unknown family {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_sixteen_spanning_trees() {
        let k4 = graphic_k4();
        assert!(k4.is_matroid());
        assert_eq!(k4.total_rank(), 3);
        assert_eq!(k4.base_count(), 16);
    }

    #[test]
    fn random_polymatroids_validate() {
        for seed in 0..40 {
            let n = 2 + (seed % 3) as usize;
            let m = random_polymatroid(n, seed).unwrap();
            assert!(m.base_count() >= 1);
        }
    }

    #[test]
    fn rng_is_deterministic() {
        let mut a = Rng::new(7);
        let mut b = Rng::new(7);
        for _ in 0..10 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn corpus_sizes() {
        let matroids = matroid_corpus(6);
        assert!(matroids.len() >= 20);
        assert!(matroids.iter().all(|e| e.polymatroid.is_matroid()));
        let polys = polymatroid_corpus();
        assert!(polys.iter().any(|e| !e.polymatroid.is_matroid()));
    }
}
