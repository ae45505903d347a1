//! Planarity via biconnected decomposition and the
//! Demoucron-Malgrange-Pertuiset face-embedding algorithm.

use super::{GraphError, LabeledGraph};
use std::collections::{BTreeSet, VecDeque};

type Edge = (usize, usize);

fn norm(a: usize, b: usize) -> Edge {
    (a.min(b), a.max(b))
}

/// Edge sets of the biconnected components (Tarjan, edge stack).
fn biconnected_components(adj: &[Vec<usize>]) -> Vec<Vec<Edge>> {
    struct St<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<Edge>,
        out: Vec<Vec<Edge>>,
    }
    fn dfs(s: &mut St<'_>, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for k in 0..s.adj[u].len() {
            let v = s.adj[u][k];
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut comp = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        comp.push(norm(e.0, e.1));
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.out.push(comp);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = adj.len();
    let mut s = St {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for u in 0..n {
        if s.disc[u] == 0 {
            dfs(&mut s, u, usize::MAX);
        }
    }
    s.out
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices; empty for a single chord edge.
    interior: Vec<usize>,
}

/// Decides planarity of one biconnected graph given as adjacency lists.
fn biconnected_planar(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n <= 4 || m <= n {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let cycle = find_cycle(adj);
    let mut on = vec![false; n];
    let mut embedded: BTreeSet<Edge> = BTreeSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        on[v] = true;
        embedded.insert(norm(v, cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];
    while embedded.len() < m {
        let fragments = fragments(adj, &on, &embedded);
        let mut choice: Option<(usize, usize)> = None;
        for (k, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((k, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((k, admissible[0]));
                    }
                }
            }
        }
        let (k, f) = choice.expect("unembedded edges leave a fragment");
        let path = fragment_path(adj, &fragments[k], &on);
        for w in path.windows(2) {
            embedded.insert(norm(w[0], w[1]));
        }
        for &v in &path {
            on[v] = true;
        }
        let face = faces.swap_remove(f);
        let (a, b) = (path[0], *path.last().expect("paths have two ends"));
        let ia = face.iter().position(|&x| x == a).expect("attachment on face");
        let ib = face.iter().position(|&x| x == b).expect("attachment on face");
        let inner = &path[1..path.len() - 1];
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    return out;
                }
                i = (i + 1) % face.len();
            }
        };
        let mut first = walk(ia, ib);
        first.extend(inner.iter().rev());
        let mut second = walk(ib, ia);
        second.extend(inner.iter());
        faces.push(first);
        faces.push(second);
    }
    true
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(top) = stack.last_mut() {
        let (u, k) = *top;
        if k == adj[u].len() {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let v = adj[u][k];
        if depth[v] == usize::MAX {
            depth[v] = depth[u] + 1;
            parent[v] = u;
            stack.push((v, 0));
        } else if v != parent[u] && depth[v] < depth[u] {
            let mut cycle = vec![u];
            let mut cur = u;
            while cur != v {
                cur = parent[cur];
                cycle.push(cur);
            }
            return cycle;
        }
    }
    unreachable!("biconnected graphs with more edges than vertices have cycles")
}

fn fragments(adj: &[Vec<usize>], on: &[bool], embedded: &BTreeSet<Edge>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for &v in &adj[u] {
            if u < v && on[u] && on[v] && !embedded.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    interior: Vec::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if on[s] || seen[s] {
            continue;
        }
        let mut interior = Vec::new();
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(x) = queue.pop_front() {
            interior.push(x);
            for &y in &adj[x] {
                if on[y] {
                    attachments.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment {
            attachments: attachments.into_iter().collect(),
            interior,
        });
    }
    out
}

/// A path through the fragment between two distinct attachments.
fn fragment_path(adj: &[Vec<usize>], frag: &Fragment, on: &[bool]) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let inside: BTreeSet<usize> = frag.interior.iter().copied().collect();
    let start = *adj[a]
        .iter()
        .find(|x| inside.contains(x))
        .expect("attachment touches its fragment");
    let mut prev = vec![usize::MAX; adj.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&b) = adj[x].iter().find(|&&y| on[y] && y != a) {
            let mut path = vec![b, x];
            let mut cur = x;
            while cur != start {
                cur = prev[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if inside.contains(&y) && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

pub fn is_planar(g: &LabeledGraph) -> Result<bool, GraphError> {
    g.require_loop_free("planarity")?;
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Ok(false);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|i| g.neighbors(i).iter().collect()).collect();
    for comp in biconnected_components(&adj) {
        let verts: BTreeSet<usize> = comp.iter().flat_map(|&(a, b)| [a, b]).collect();
        let index: Vec<usize> = verts.iter().copied().collect();
        let local = |v: usize| index.binary_search(&v).expect("component vertex");
        let mut sub = vec![Vec::new(); index.len()];
        for &(a, b) in &comp {
            sub[local(a)].push(local(b));
            sub[local(b)].push(local(a));
        }
        if !biconnected_planar(&sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(a: usize, b: usize) -> LabeledGraph {
        let edges: Vec<Edge> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        LabeledGraph::unlabeled(a + b, &edges)
    }

    fn petersen() -> LabeledGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        LabeledGraph::unlabeled(10, &edges)
    }

    fn subdivided_k33() -> LabeledGraph {
        // K3,3 with every edge split by a new vertex.
        let mut edges = Vec::new();
        let mut next = 6;
        for i in 0..3 {
            for j in 3..6 {
                edges.push((i, next));
                edges.push((next, j));
                next += 1;
            }
        }
        LabeledGraph::unlabeled(next, &edges)
    }

    fn grid(w: usize, h: usize) -> LabeledGraph {
        let mut edges = Vec::new();
        for y in 0..h {
            for x in 0..w {
                let v = y * w + x;
                if x + 1 < w {
                    edges.push((v, v + 1));
                }
                if y + 1 < h {
                    edges.push((v, v + w));
                }
            }
        }
        LabeledGraph::unlabeled(w * h, &edges)
    }

    #[test]
    fn planarity_examples() {
        assert!(is_planar(&LabeledGraph::complete(4)).unwrap());
        assert!(!is_planar(&LabeledGraph::complete(5)).unwrap());
        assert!(!is_planar(&complete_bipartite(3, 3)).unwrap());
        assert!(is_planar(&complete_bipartite(2, 7)).unwrap());
        assert!(!is_planar(&petersen()).unwrap());
        assert!(!is_planar(&subdivided_k33()).unwrap());
        assert!(is_planar(&grid(5, 4)).unwrap());
        assert!(is_planar(&LabeledGraph::cycle(9)).unwrap());
    }

    #[test]
    fn removing_one_edge_of_k5_restores_planarity() {
        let edges: Vec<Edge> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .filter(|&e| e != (0, 1))
            .collect();
        assert!(is_planar(&LabeledGraph::unlabeled(5, &edges)).unwrap());
    }

    #[test]
    fn octahedron_and_wheel_are_planar() {
        let oct: Vec<Edge> = (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
            .filter(|&(i, j)| j != i + 3 || i >= 3)
            .collect();
        assert!(is_planar(&LabeledGraph::unlabeled(6, &oct)).unwrap());
        let mut wheel: Vec<Edge> = (1..8).map(|i| (0, i)).collect();
        wheel.extend((1..8).map(|i| (i, i % 7 + 1)));
        assert!(is_planar(&LabeledGraph::unlabeled(8, &wheel)).unwrap());
    }
}
