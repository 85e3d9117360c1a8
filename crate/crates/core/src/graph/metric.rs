//! Gromov products, guards and the four-point estimate of δ.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{BallGraph, VertexId, UNREACHABLE};
use crate::error::{LabError, Result};
use crate::half::HalfInt;

/// Which quadruples `estimate_delta` looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplingPolicy {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaEstimate {
    pub delta: HalfInt,
    pub quadruples: u64,
    /// A quadruple attaining the maximum defect, as labels.
    pub witness: Option<[String; 4]>,
}

impl BallGraph {
    /// `⟨x,y⟩_z`, exactly.
    pub fn gromov_product(&self, x: VertexId, y: VertexId, z: VertexId) -> Result<HalfInt> {
        for v in [x, y, z] {
            self.check(v)?;
        }
        let (dxz, dyz, dxy) = (self.distance(x, z), self.distance(y, z), self.distance(x, y));
        if [dxz, dyz, dxy].contains(&UNREACHABLE) {
            return Err(LabError::InvalidArgument("gromov product across components".into()));
        }
        Ok(HalfInt::from_doubled(dxz as i64 + dyz as i64 - dxy as i64))
    }

    /// Deletion test: every geodesic from `x` to `z` passes through `w`.
    pub fn is_guard(&self, w: VertexId, x: VertexId, z: VertexId) -> Result<bool> {
        for v in [w, x, z] {
            self.check(v)?;
        }
        if w == x || w == z || x == z {
            return Err(LabError::InvalidArgument(
                "guard test needs three distinct vertices".into(),
            ));
        }
        let before = self.distance(x, z);
        if before == UNREACHABLE {
            return Ok(false);
        }
        let after = self.bfs(x, Some(w))[z.index()];
        Ok(after == UNREACHABLE || after > before)
    }

    /// Same answer as [`BallGraph::is_guard`], but the search only visits the
    /// geodesic interval between `x` and `z`. Endpoints count as guards.
    pub fn guards(&self, w: VertexId, x: VertexId, z: VertexId) -> bool {
        if w == x || w == z {
            return true;
        }
        let dxz = self.distance(x, z);
        if dxz == UNREACHABLE || self.distance(x, w) + self.distance(w, z) != dxz {
            return false;
        }
        let to_z = self.distances_from(z);
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([x]);
        seen[x.index()] = true;
        while let Some(u) = queue.pop_front() {
            let du = to_z[u.index()];
            for &v in self.neighbors(u) {
                if v == w || seen[v.index()] || to_z[v.index()] + 1 != du {
                    continue;
                }
                if v == z {
                    return false;
                }
                seen[v.index()] = true;
                queue.push_back(v);
            }
        }
        true
    }

    /// Largest four-point defect `(L - M)/2` over the chosen quadruples.
    pub fn estimate_delta(&self, policy: SamplingPolicy) -> DeltaEstimate {
        let n = self.len();
        let mut best = 0i64;
        let mut witness = None;
        let mut count = 0u64;
        let mut consider = |q: [usize; 4], count: &mut u64| {
            *count += 1;
            let d = |a: usize, b: usize| self.distance(VertexId(q[a] as u32), VertexId(q[b] as u32)) as i64;
            let mut s = [d(0, 1) + d(2, 3), d(0, 2) + d(1, 3), d(0, 3) + d(1, 2)];
            s.sort_unstable();
            let defect = s[2] - s[1];
            if defect > best {
                best = defect;
                witness = Some(q);
            }
        };
        match policy {
            SamplingPolicy::Exhaustive => {
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            for d in c + 1..n {
                                consider([a, b, c, d], &mut count);
                            }
                        }
                    }
                }
            }
            SamplingPolicy::Sampled { count: samples, seed } => {
                if n > 0 {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    for _ in 0..samples {
                        let q = [0; 4].map(|_| rng.gen_range(0..n));
                        consider(q, &mut count);
                    }
                }
            }
        }
        DeltaEstimate {
            delta: HalfInt::from_doubled(best),
            quadruples: count,
            witness: witness.map(|q| q.map(|v| self.labels[v].clone())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BallLimits;

    fn graph(n: usize, edges: &[(usize, usize)]) -> BallGraph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        BallGraph::from_edges(labels, edges, 0, None, BallLimits::default()).unwrap()
    }

    #[test]
    fn four_cycle_middle_is_not_a_guard() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let v = |i| VertexId(i);
        assert!(!g.is_guard(v(1), v(0), v(2)).unwrap());
        assert!(!g.guards(v(1), v(0), v(2)));
    }

    #[test]
    fn path_middle_is_a_guard() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let v = |i| VertexId(i);
        assert!(g.is_guard(v(1), v(0), v(2)).unwrap());
        assert!(g.guards(v(1), v(0), v(2)));
        assert!(g.is_guard(v(1), v(0), v(0)).is_err());
    }

    #[test]
    fn cycle_defect() {
        // {0,1,3,4} in C_6: pair sums 1+1, 3+3, 2+2, so (L - M)/2 = 1.
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let est = g.estimate_delta(SamplingPolicy::Exhaustive);
        assert_eq!(est.quadruples, 15);
        assert_eq!(est.delta, HalfInt::from_int(1));
    }

    #[test]
    fn single_vertex_delta_is_zero() {
        let g = graph(1, &[]);
        assert_eq!(g.estimate_delta(SamplingPolicy::Exhaustive).delta, HalfInt::ZERO);
        assert_eq!(
            g.estimate_delta(SamplingPolicy::Sampled { count: 10, seed: 1 }).delta,
            HalfInt::ZERO
        );
    }
}
