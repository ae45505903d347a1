use super::{Bits, GraphError, Label, LabeledGraph};
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordalResult {
    pub chordal: bool,
    /// A chordless cycle of length at least 4 when not chordal.
    pub witness: Option<Vec<Label>>,
}

/// Lexicographic breadth-first search; ties go to the smallest index.
fn lex_bfs(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut tags: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .fold(None::<usize>, |best, v| match best {
                Some(b) if tags[b] >= tags[v] => Some(b),
                _ => Some(v),
            })
            .expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !visited[u] {
                tags[u].push(n - step);
            }
        }
    }
    order
}

fn is_perfect_elimination(g: &LabeledGraph, visit: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut rank = vec![0usize; n];
    for (i, &v) in visit.iter().enumerate() {
        rank[v] = i;
    }
    for &v in visit.iter().rev() {
        let earlier: Vec<usize> = g.neighbors(v).iter().filter(|&u| rank[u] < rank[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&u| rank[u]) {
            if !earlier
                .iter()
                .all(|&u| u == parent || g.adjacent(u, parent))
            {
                return false;
            }
        }
    }
    true
}

/// Shortest u-w path avoiding `blocked`, or None.
fn shortest_path(g: &LabeledGraph, u: usize, w: usize, blocked: &Bits) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    prev[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x).iter() {
            if prev[y] == usize::MAX && !blocked.contains(y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// First chordless cycle of length >= 4: smallest v, then the smallest pair
/// u < w of nonadjacent neighbors joined by a path that avoids the rest of
/// N[v]; a shortest such path closes a chordless cycle through v.
fn chordless_cycle(g: &LabeledGraph) -> Option<Vec<usize>> {
    for v in 0..g.vertex_count() {
        let nv: Vec<usize> = g.neighbors(v).iter().collect();
        for (a, &u) in nv.iter().enumerate() {
            for &w in &nv[a + 1..] {
                if g.adjacent(u, w) {
                    continue;
                }
                let mut blocked = g.neighbors(v).clone();
                blocked.insert(v);
                blocked.remove(u);
                blocked.remove(w);
                if let Some(path) = shortest_path(g, u, w, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &LabeledGraph) -> Result<ChordalResult, GraphError> {
    g.require_loop_free("chordality")?;
    if is_perfect_elimination(g, &lex_bfs(g)) {
        return Ok(ChordalResult {
            chordal: true,
            witness: None,
        });
    }
    let cycle = chordless_cycle(g).expect("a graph without a perfect elimination order has a hole");
    debug_assert!(g.is_induced_cycle(&cycle) && cycle.len() >= 4);
    Ok(ChordalResult {
        chordal: false,
        witness: Some(g.labels_of(&cycle)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residue_graph(n: u64) -> LabeledGraph {
        let v: Vec<u64> = (1..n).filter(|&x| num_integer::gcd(x, n) > 1).collect();
        let labels = v.iter().copied().map(Label::Int).collect();
        LabeledGraph::from_fn(labels, |i, j| (v[i] * v[j]).is_multiple_of(n), |_| false).unwrap()
    }

    #[test]
    fn chordal_examples() {
        assert!(is_chordal(&residue_graph(18)).unwrap().chordal);
        let z15 = is_chordal(&residue_graph(15)).unwrap();
        assert!(!z15.chordal);
        let witness: Vec<Label> = [3, 5, 6, 10].into_iter().map(Label::Int).collect();
        assert_eq!(z15.witness, Some(witness));
        assert!(!is_chordal(&LabeledGraph::cycle(4)).unwrap().chordal);
        assert!(is_chordal(&LabeledGraph::complete(5)).unwrap().chordal);
        assert!(is_chordal(&LabeledGraph::empty()).unwrap().chordal);
    }

    #[test]
    fn lexbfs_agrees_with_hole_search() {
        for n in 2..120 {
            let g = residue_graph(n);
            let by_order = is_perfect_elimination(&g, &lex_bfs(&g));
            assert_eq!(by_order, chordless_cycle(&g).is_none(), "n={n}");
        }
    }
}
