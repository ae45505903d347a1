use super::{Bits, Budget, GraphError, LabeledGraph};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominationStats {
    pub gamma: usize,
    /// Number of dominating sets of size `gamma`.
    pub min_count: u64,
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Counts dominating sets of size exactly k. Each node branches on the
/// dominators of one undominated vertex; branch i forbids the dominators
/// tried before it, so every set is reached along exactly one path.
struct Counter<'a> {
    closed: Vec<Bits>,
    n: usize,
    budget: &'a mut Budget,
}

impl Counter<'_> {
    fn count(
        &mut self,
        k: usize,
        chosen: usize,
        undominated: &Bits,
        forbidden: &mut Bits,
        taken: &Bits,
    ) -> Result<u64, GraphError> {
        self.budget.tick("domination search")?;
        if undominated.is_empty() {
            let free = self.n - forbidden.count() - taken.count();
            return Ok(binomial(free, k - chosen));
        }
        let left = k - chosen;
        if left == 0 {
            return Ok(0);
        }
        let mut allowed = forbidden.complement();
        allowed.minus_with(taken);
        let mut pick = None;
        let mut best_gain = 0;
        for u in undominated.iter() {
            let options = self.closed[u].and_count(&allowed);
            if options == 0 {
                return Ok(0);
            }
            if pick.is_none_or(|(_, o)| options < o) {
                pick = Some((u, options));
            }
        }
        for w in allowed.iter() {
            best_gain = best_gain.max(self.closed[w].and_count(undominated));
        }
        if best_gain * left < undominated.count() {
            return Ok(0);
        }
        let (u, _) = pick.expect("undominated set is nonempty");
        let candidates: Vec<usize> = self.closed[u].and(&allowed).iter().collect();
        let mut total = 0;
        let mut newly_forbidden = Vec::with_capacity(candidates.len());
        for w in candidates {
            let mut next_taken = taken.clone();
            next_taken.insert(w);
            let next_undom = undominated.minus(&self.closed[w]);
            total += self.count(k, chosen + 1, &next_undom, forbidden, &next_taken)?;
            forbidden.insert(w);
            newly_forbidden.push(w);
        }
        for w in newly_forbidden {
            forbidden.remove(w);
        }
        Ok(total)
    }
}

/// Domination number and the number of minimum dominating sets.
pub fn domination_stats(g: &LabeledGraph, budget: &mut Budget) -> Result<DominationStats, GraphError> {
    g.require_loop_free("domination")?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(DominationStats { gamma: 0, min_count: 1 });
    }
    let closed: Vec<Bits> = (0..n)
        .map(|v| {
            let mut b = g.neighbors(v).clone();
            b.insert(v);
            b
        })
        .collect();
    let mut counter = Counter { closed, n, budget };
    for k in 1..=n {
        let mut forbidden = Bits::new(n);
        let c = counter.count(k, 0, &Bits::full(n), &mut forbidden, &Bits::new(n))?;
        if c > 0 {
            return Ok(DominationStats { gamma: k, min_count: c });
        }
    }
    unreachable!("the full vertex set dominates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Label;

    fn residue_graph(n: u64) -> LabeledGraph {
        let v: Vec<u64> = (1..n).filter(|&x| num_integer::gcd(x, n) > 1).collect();
        let labels = v.iter().copied().map(Label::Int).collect();
        LabeledGraph::from_fn(labels, |i, j| (v[i] * v[j]).is_multiple_of(n), |_| false).unwrap()
    }

    fn brute(g: &LabeledGraph) -> DominationStats {
        let n = g.vertex_count();
        let mut best: Option<(usize, u64)> = None;
        for mask in 0u32..1 << n {
            let dominated = (0..n).all(|v| {
                mask >> v & 1 == 1 || g.neighbors(v).iter().any(|u| mask >> u & 1 == 1)
            });
            if dominated {
                let size = mask.count_ones() as usize;
                best = match best {
                    Some((s, c)) if s == size => Some((s, c + 1)),
                    Some((s, _)) if s < size => best,
                    _ => Some((size, 1)),
                };
            }
        }
        let (gamma, min_count) = best.unwrap();
        DominationStats { gamma, min_count }
    }

    #[test]
    fn domination_examples() {
        let mut b = Budget::unlimited();
        let z8 = domination_stats(&residue_graph(8), &mut b).unwrap();
        assert_eq!((z8.gamma, z8.min_count), (1, 1));
        let z30 = domination_stats(&residue_graph(30), &mut b).unwrap();
        assert_eq!((z30.gamma, z30.min_count), (3, 8));
        let star = LabeledGraph::unlabeled(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(domination_stats(&star, &mut b).unwrap().gamma, 1);
        assert_eq!(domination_stats(&LabeledGraph::empty(), &mut b).unwrap().gamma, 0);
    }

    #[test]
    fn domination_matches_subset_enumeration() {
        let mut b = Budget::unlimited();
        for g in [
            LabeledGraph::cycle(7),
            LabeledGraph::path(6),
            LabeledGraph::unlabeled(4, &[(0, 1)]),
            residue_graph(12),
            residue_graph(20),
            residue_graph(15),
        ] {
            assert_eq!(domination_stats(&g, &mut b).unwrap(), brute(&g));
        }
    }
}
