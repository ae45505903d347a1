use super::{Bits, Budget, GraphError, Label, LabeledGraph};
use std::collections::BTreeMap;

/// Branch and bound with greedy-coloring bounds over a degree-descending
/// relabeling of the candidate vertices.
struct MaxClique<'a> {
    adj: Vec<Bits>,
    best: usize,
    budget: &'a mut Budget,
}

impl MaxClique<'_> {
    fn color_sort(&self, p: &Bits) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = p.clone();
        let mut order = Vec::with_capacity(p.count());
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.minus_with(&self.adj[v]);
                uncolored.remove(v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, size: usize, mut p: Bits) -> Result<(), GraphError> {
        self.budget.tick("clique search")?;
        let (order, bounds) = self.color_sort(&p);
        for k in (0..order.len()).rev() {
            if size + bounds[k] <= self.best {
                return Ok(());
            }
            let v = order[k];
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(size + 1, next)?;
            }
            p.remove(v);
        }
        Ok(())
    }
}

fn max_clique_within(
    g: &LabeledGraph,
    candidates: &Bits,
    budget: &mut Budget,
) -> Result<usize, GraphError> {
    let mut verts: Vec<usize> = candidates.iter().collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).and_count(candidates)), v));
    let m = verts.len();
    let adj: Vec<Bits> = verts
        .iter()
        .map(|&v| Bits::from_indices(m, (0..m).filter(|&j| g.adjacent(v, verts[j]))))
        .collect();
    let mut search = MaxClique {
        adj,
        best: 0,
        budget,
    };
    if m > 0 {
        search.expand(0, Bits::full(m))?;
    }
    Ok(search.best)
}

/// Exact maximum clique size, optionally restricted to cliques containing `anchor`.
pub fn clique_number(
    g: &LabeledGraph,
    anchor: Option<&Label>,
    budget: &mut Budget,
) -> Result<usize, GraphError> {
    g.require_loop_free("clique number")?;
    match anchor {
        Some(label) => {
            let v = g
                .index_of(label)
                .ok_or_else(|| GraphError::UnknownLabel(label.to_string()))?;
            Ok(1 + max_clique_within(g, g.neighbors(v), budget)?)
        }
        None => max_clique_within(g, &Bits::full(g.vertex_count()), budget),
    }
}

/// Number of cliques of each size 1..=max_size.
pub fn clique_census(
    g: &LabeledGraph,
    max_size: usize,
    budget: &mut Budget,
) -> Result<BTreeMap<usize, u64>, GraphError> {
    g.require_loop_free("clique census")?;
    fn walk(
        g: &LabeledGraph,
        p: Bits,
        size: usize,
        max_size: usize,
        counts: &mut BTreeMap<usize, u64>,
        budget: &mut Budget,
    ) -> Result<(), GraphError> {
        for v in p.iter() {
            budget.tick("clique census")?;
            *counts.entry(size + 1).or_insert(0) += 1;
            if size + 1 < max_size {
                let mut next = p.and(g.neighbors(v));
                for u in 0..=v {
                    next.remove(u);
                }
                walk(g, next, size + 1, max_size, counts, budget)?;
            }
        }
        Ok(())
    }
    let mut counts: BTreeMap<usize, u64> = (1..=max_size).map(|k| (k, 0)).collect();
    if max_size > 0 {
        walk(g, Bits::full(g.vertex_count()), 0, max_size, &mut counts, budget)?;
    }
    Ok(counts)
}

pub fn independence_number(g: &LabeledGraph, budget: &mut Budget) -> Result<usize, GraphError> {
    g.require_loop_free("independence number")?;
    clique_number(&g.complement(), None, budget)
}

pub fn vertex_cover_number(g: &LabeledGraph, budget: &mut Budget) -> Result<usize, GraphError> {
    Ok(g.vertex_count() - independence_number(g, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residue_graph(n: u64) -> LabeledGraph {
        let v: Vec<u64> = (1..n).filter(|&x| num_integer::gcd(x, n) > 1).collect();
        let labels = v.iter().copied().map(Label::Int).collect();
        LabeledGraph::from_fn(labels, |i, j| (v[i] * v[j]).is_multiple_of(n), |_| false).unwrap()
    }

    fn brute_clique(g: &LabeledGraph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|i| {
                    mask >> i & 1 == 0
                        || (i + 1..n).all(|j| mask >> j & 1 == 0 || g.adjacent(i, j))
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn clique_examples() {
        let mut b = Budget::unlimited();
        assert_eq!(clique_number(&LabeledGraph::complete(4), None, &mut b).unwrap(), 4);
        assert_eq!(clique_number(&residue_graph(36), None, &mut b).unwrap(), 5);
        let anchored = clique_number(&residue_graph(12), Some(&Label::Int(3)), &mut b).unwrap();
        assert_eq!(anchored, 2);
        assert!(clique_number(&residue_graph(12), Some(&Label::Int(5)), &mut b).is_err());
        assert_eq!(clique_number(&LabeledGraph::empty(), None, &mut b).unwrap(), 0);
    }

    #[test]
    fn clique_matches_subset_enumeration() {
        let mut b = Budget::unlimited();
        for n in 2..40 {
            let g = residue_graph(n);
            if g.vertex_count() <= 16 {
                assert_eq!(clique_number(&g, None, &mut b).unwrap(), brute_clique(&g), "n={n}");
            }
        }
    }

    #[test]
    fn census_and_independence() {
        let mut b = Budget::unlimited();
        let k3 = LabeledGraph::complete(3);
        assert_eq!(clique_census(&k3, 3, &mut b).unwrap()[&2], 3);
        let c5 = LabeledGraph::cycle(5);
        assert_eq!(independence_number(&c5, &mut b).unwrap(), 2);
        assert_eq!(vertex_cover_number(&c5, &mut b).unwrap(), 3);
        assert_eq!(independence_number(&LabeledGraph::complete(4), &mut b).unwrap(), 1);
        assert_eq!(vertex_cover_number(&residue_graph(4), &mut b).unwrap(), 0);
        assert_eq!(vertex_cover_number(&residue_graph(8), &mut b).unwrap(), 1);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let mut b = Budget::new(3);
        let err = clique_number(&residue_graph(210), None, &mut b).unwrap_err();
        assert!(err.is_resource());
    }
}
