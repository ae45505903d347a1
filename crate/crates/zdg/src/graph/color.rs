use super::{clique_number, Bits, Budget, GraphError, LabeledGraph};
use serde::{Serialize, Serializer};
use std::fmt;

/// Chromatic number, or `Undefined` for graphs carrying loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chromatic {
    Number(usize),
    Undefined,
}

impl Chromatic {
    pub fn number(self) -> Option<usize> {
        match self {
            Chromatic::Number(k) => Some(k),
            Chromatic::Undefined => None,
        }
    }
}

impl fmt::Display for Chromatic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chromatic::Number(k) => write!(f, "{k}"),
            Chromatic::Undefined => write!(f, "undefined"),
        }
    }
}

impl Serialize for Chromatic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Chromatic::Number(k) => s.serialize_u64(*k as u64),
            Chromatic::Undefined => s.serialize_str("undefined"),
        }
    }
}

/// DSATUR branch and bound. Stops as soon as a coloring with at most
/// `stop_at` colors is known.
struct Dsatur<'a> {
    adj: Vec<Bits>,
    degree: Vec<usize>,
    color: Vec<Option<usize>>,
    /// `sat[v][c]` counts neighbors of v currently colored c.
    sat: Vec<Vec<u32>>,
    satdeg: Vec<usize>,
    best: usize,
    stop_at: usize,
    budget: &'a mut Budget,
}

impl Dsatur<'_> {
    fn new(adj: Vec<Bits>, best: usize, stop_at: usize, budget: &mut Budget) -> Dsatur<'_> {
        let n = adj.len();
        Dsatur {
            degree: adj.iter().map(Bits::count).collect(),
            adj,
            color: vec![None; n],
            sat: vec![vec![0; n + 1]; n],
            satdeg: vec![0; n],
            best,
            stop_at,
            budget,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for u in self.adj[v].iter() {
            if self.sat[u][c] == 0 {
                self.satdeg[u] += 1;
            }
            self.sat[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for u in self.adj[v].iter() {
            self.sat[u][c] -= 1;
            if self.sat[u][c] == 0 {
                self.satdeg[u] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize) -> Result<(), GraphError> {
        if used >= self.best {
            return Ok(());
        }
        let n = self.adj.len();
        if colored == n {
            self.best = used;
            return Ok(());
        }
        self.budget.tick("chromatic search")?;
        let v = (0..n)
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.satdeg[v], self.degree[v], std::cmp::Reverse(v)))
            .expect("some vertex is uncolored");
        for c in 0..=used.min(n) {
            if self.sat[v][c] != 0 || used.max(c + 1) >= self.best {
                continue;
            }
            self.assign(v, c);
            self.search(colored + 1, used.max(c + 1))?;
            self.unassign(v, c);
            if self.best <= self.stop_at {
                break;
            }
        }
        Ok(())
    }
}

fn reduced_adjacency(g: &LabeledGraph) -> Vec<Bits> {
    let keep = g.twin_representatives(false);
    let h = g.induced(&keep);
    (0..h.vertex_count()).map(|i| h.neighbors(i).clone()).collect()
}

/// Exact minimum number of colors. Nonadjacent twins share a color in some
/// optimal coloring, so the search runs on one representative per class.
pub fn chromatic_number(g: &LabeledGraph, budget: &mut Budget) -> Result<Chromatic, GraphError> {
    if g.has_loops() {
        return Ok(Chromatic::Undefined);
    }
    let keep = g.twin_representatives(false);
    let h = g.induced(&keep);
    let lower = clique_number(&h, None, budget)?;
    let adj = (0..h.vertex_count()).map(|i| h.neighbors(i).clone()).collect::<Vec<_>>();
    let n = adj.len();
    let mut search = Dsatur::new(adj, n + 1, lower, budget);
    search.search(0, 0)?;
    Ok(Chromatic::Number(search.best.min(n)))
}

/// Whether a proper coloring with at most k colors exists; never for loops.
pub fn is_k_colorable(g: &LabeledGraph, k: usize, budget: &mut Budget) -> Result<bool, GraphError> {
    if g.has_loops() {
        return Ok(false);
    }
    let adj = reduced_adjacency(g);
    if adj.len() <= k {
        return Ok(true);
    }
    let mut search = Dsatur::new(adj, k + 1, k, budget);
    search.search(0, 0)?;
    Ok(search.best <= k)
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

    fn brute_chromatic(g: &LabeledGraph) -> usize {
        let n = g.vertex_count();
        (1..=n)
            .find(|&k| {
                (0..k.pow(n as u32)).any(|code| {
                    let col: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
                    g.edges().all(|(a, b)| col[a] != col[b])
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn chromatic_examples() {
        let mut b = Budget::unlimited();
        assert_eq!(chromatic_number(&LabeledGraph::cycle(5), &mut b).unwrap(), Chromatic::Number(3));
        assert_eq!(chromatic_number(&LabeledGraph::complete(4), &mut b).unwrap(), Chromatic::Number(4));
        assert_eq!(chromatic_number(&residue_graph(30), &mut b).unwrap(), Chromatic::Number(3));
        assert_eq!(chromatic_number(&LabeledGraph::empty(), &mut b).unwrap(), Chromatic::Number(0));
        let looped = LabeledGraph::from_edges(vec![Label::Int(1)], &[], &[0]).unwrap();
        assert_eq!(chromatic_number(&looped, &mut b).unwrap(), Chromatic::Undefined);
        assert!(!is_k_colorable(&looped, 5, &mut b).unwrap());
    }

    #[test]
    fn chromatic_matches_exhaustive_coloring() {
        let mut b = Budget::unlimited();
        for g in [LabeledGraph::cycle(7), LabeledGraph::path(4), residue_graph(16), residue_graph(18)] {
            assert_eq!(chromatic_number(&g, &mut b).unwrap(), Chromatic::Number(brute_chromatic(&g)));
        }
    }

    #[test]
    fn k_colorable_threshold() {
        let mut b = Budget::unlimited();
        let c5 = LabeledGraph::cycle(5);
        assert!(!is_k_colorable(&c5, 2, &mut b).unwrap());
        assert!(is_k_colorable(&c5, 3, &mut b).unwrap());
    }
}
