use super::{Bits, Budget, GraphError, Label, LabeledGraph};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OddCycleKind {
    Hole,
    Antihole,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectWitness {
    pub kind: OddCycleKind,
    pub cycle: Vec<Label>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectResult {
    pub perfect: bool,
    pub witness: Option<PerfectWitness>,
}

/// Induced-path search. The start vertex is the smallest on the cycle; each
/// extension must avoid the neighborhoods of the interior path vertices.
struct HoleSearch<'a> {
    g: &'a LabeledGraph,
    min_len: usize,
    budget: &'a mut Budget,
}

impl HoleSearch<'_> {
    fn extend(
        &mut self,
        path: &mut Vec<usize>,
        allowed: &Bits,
        interior_nbrs: &Bits,
    ) -> Result<bool, GraphError> {
        self.budget.tick("odd hole search")?;
        let s = path[0];
        let last = *path.last().expect("path starts nonempty");
        let mut candidates = self.g.neighbors(last).and(allowed);
        candidates.minus_with(interior_nbrs);
        for x in candidates.iter() {
            if path.len() >= 2 && self.g.adjacent(x, s) {
                let len = path.len() + 1;
                if len >= self.min_len && len % 2 == 1 && path[1] < x {
                    path.push(x);
                    return Ok(true);
                }
                continue;
            }
            let mut next_allowed = allowed.clone();
            next_allowed.remove(x);
            let mut next_nbrs = interior_nbrs.clone();
            if path.len() >= 2 {
                next_nbrs.or_with(self.g.neighbors(last));
                next_nbrs.remove(s);
            }
            path.push(x);
            if self.extend(path, &next_allowed, &next_nbrs)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
}

fn odd_hole_indices(
    g: &LabeledGraph,
    min_len: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>, GraphError> {
    let n = g.vertex_count();
    let mut search = HoleSearch {
        g,
        min_len: min_len.max(5),
        budget,
    };
    for s in 0..n {
        let allowed = Bits::from_indices(n, s + 1..n);
        let mut path = vec![s];
        if search.extend(&mut path, &allowed, &Bits::new(n))? {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// An induced odd cycle of length at least `min_len` (and at least 5).
/// Twins never lie on a common hole of length >= 5, so the search runs on
/// one representative per twin class; the cycle is induced in `g` itself.
pub fn find_odd_hole(
    g: &LabeledGraph,
    min_len: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<Label>>, GraphError> {
    g.require_loop_free("odd hole search")?;
    let keep = g.twin_representatives(true);
    let h = g.induced(&keep);
    Ok(odd_hole_indices(&h, min_len, budget)?.map(|c| h.labels_of(&c)))
}

/// Perfect iff neither the graph nor its complement has an odd hole of
/// length >= 5.
pub fn is_perfect(g: &LabeledGraph, budget: &mut Budget) -> Result<PerfectResult, GraphError> {
    g.require_loop_free("perfectness")?;
    let keep = g.twin_representatives(true);
    let h = g.induced(&keep);
    if let Some(c) = odd_hole_indices(&h, 5, budget)? {
        return Ok(PerfectResult {
            perfect: false,
            witness: Some(PerfectWitness {
                kind: OddCycleKind::Hole,
                cycle: h.labels_of(&c),
            }),
        });
    }
    if let Some(c) = odd_hole_indices(&h.complement(), 5, budget)? {
        return Ok(PerfectResult {
            perfect: false,
            witness: Some(PerfectWitness {
                kind: OddCycleKind::Antihole,
                cycle: h.labels_of(&c),
            }),
        });
    }
    Ok(PerfectResult {
        perfect: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(xs: &[u64]) -> Label {
        Label::Tuple(xs.to_vec())
    }

    fn z2_power(k: usize) -> LabeledGraph {
        let labels: Vec<Vec<u64>> = (1u64..(1 << k) - 1)
            .map(|m| (0..k).rev().map(|i| m >> i & 1).collect())
            .collect::<Vec<_>>();
        let mut labels = labels;
        labels.sort();
        let ls = labels.iter().map(|v| t(v)).collect();
        LabeledGraph::from_fn(
            ls,
            |i, j| labels[i].iter().zip(&labels[j]).all(|(a, b)| a * b == 0),
            |_| false,
        )
        .unwrap()
    }

    #[test]
    fn odd_hole_examples() {
        let mut b = Budget::unlimited();
        let c5 = LabeledGraph::cycle(5);
        let hole = find_odd_hole(&c5, 5, &mut b).unwrap().unwrap();
        assert_eq!(hole.len(), 5);
        assert_eq!(find_odd_hole(&LabeledGraph::cycle(6), 5, &mut b).unwrap(), None);
        assert_eq!(find_odd_hole(&LabeledGraph::complete(6), 5, &mut b).unwrap(), None);
        assert_eq!(find_odd_hole(&LabeledGraph::cycle(7), 9, &mut b).unwrap(), None);
    }

    #[test]
    fn finds_a_five_hole_in_z2_to_the_fifth() {
        let mut b = Budget::unlimited();
        let g = z2_power(5);
        let hole = find_odd_hole(&g, 5, &mut b).unwrap().unwrap();
        let idx: Vec<usize> = hole.iter().map(|l| g.index_of(l).unwrap()).collect();
        assert!(g.is_induced_cycle(&idx));
        assert_eq!(idx.len() % 2, 1);
        let named = [
            t(&[1, 1, 0, 0, 0]),
            t(&[0, 0, 1, 1, 0]),
            t(&[1, 0, 0, 0, 1]),
            t(&[0, 1, 1, 0, 0]),
            t(&[0, 0, 0, 1, 1]),
        ];
        let named_idx: Vec<usize> = named.iter().map(|l| g.index_of(l).unwrap()).collect();
        assert!(g.is_induced_cycle(&named_idx));
    }

    #[test]
    fn perfectness_examples() {
        let mut b = Budget::unlimited();
        assert!(is_perfect(&LabeledGraph::complete(4), &mut b).unwrap().perfect);
        let c5 = is_perfect(&LabeledGraph::cycle(5), &mut b).unwrap();
        assert!(!c5.perfect);
        assert_eq!(c5.witness.unwrap().kind, OddCycleKind::Hole);
        let anti = is_perfect(&LabeledGraph::cycle(7).complement(), &mut b).unwrap();
        assert_eq!(anti.witness.unwrap().kind, OddCycleKind::Antihole);
        assert!(is_perfect(&LabeledGraph::cycle(8), &mut b).unwrap().perfect);
        assert!(!is_perfect(&z2_power(5), &mut b).unwrap().perfect);
        assert!(is_perfect(&z2_power(4), &mut b).unwrap().perfect);
    }
}
