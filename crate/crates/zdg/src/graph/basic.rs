use super::{Bits, Extended, GraphError, Label, LabeledGraph};
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicInvariants {
    pub complete: bool,
    pub regular: bool,
    pub connected: bool,
    pub eulerian: bool,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MetricInvariants {
    pub girth: Extended,
    pub diameter: Extended,
}

pub fn degree_sequence(g: &LabeledGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|i| g.degree(i)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn bfs(g: &LabeledGraph, root: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have distances");
        for w in g.neighbors(u).iter() {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn basic_invariants(g: &LabeledGraph) -> Result<BasicInvariants, GraphError> {
    g.require_loop_free("basic invariants")?;
    let n = g.vertex_count();
    let degree_sequence = degree_sequence(g);
    let complete = g.edge_count() == n * n.saturating_sub(1) / 2;
    let regular = degree_sequence.windows(2).all(|w| w[0] == w[1]);
    let connected = n == 0 || bfs(g, 0).iter().all(Option::is_some);
    let eulerian = g.edge_count() > 0 && degree_sequence.iter().all(|d| d % 2 == 0) && {
        let start = (0..n).find(|&i| g.degree(i) > 0).expect("some edge exists");
        let dist = bfs(g, start);
        (0..n).all(|i| g.degree(i) == 0 || dist[i].is_some())
    };
    Ok(BasicInvariants {
        complete,
        regular,
        connected,
        eulerian,
        degree_sequence,
    })
}

/// Girth is the shortest cycle length; diameter is infinite when the graph is
/// disconnected and 0 on at most one vertex.
pub fn metric_invariants(g: &LabeledGraph) -> Result<MetricInvariants, GraphError> {
    g.require_loop_free("metric invariants")?;
    let n = g.vertex_count();
    let mut girth: Option<usize> = None;
    let mut diameter = Some(0usize);
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    girth = Some(girth.map_or(len, |g0| g0.min(len)));
                }
            }
        }
        if dist.contains(&usize::MAX) {
            diameter = None;
        } else if let Some(d) = diameter {
            diameter = Some(d.max(*dist.iter().max().unwrap_or(&0)));
        }
    }
    let ext = |x: Option<usize>| x.map_or(Extended::Infinite, |v| Extended::Finite(v as u64));
    Ok(MetricInvariants {
        girth: ext(girth),
        diameter: ext(diameter),
    })
}

/// Partition into independent parts with every cross pair adjacent, parts
/// sorted by smallest label; `None` when no such partition exists.
pub fn complete_multipartite(g: &LabeledGraph) -> Result<Option<Vec<Vec<Label>>>, GraphError> {
    g.require_loop_free("complete multipartite test")?;
    let n = g.vertex_count();
    let mut assigned = Bits::new(n);
    let mut parts = Vec::new();
    for v in 0..n {
        if assigned.contains(v) {
            continue;
        }
        let mut part = g.neighbors(v).complement();
        part.insert(v);
        for u in part.iter() {
            let mut other = g.neighbors(u).complement();
            other.insert(u);
            if other != part || assigned.contains(u) {
                return Ok(None);
            }
        }
        assigned.or_with(&part);
        parts.push(part.iter().map(|i| g.label(i).clone()).collect());
    }
    Ok(Some(parts))
}

/// Vertices whose open neighborhood is a clique; isolated vertices qualify.
pub fn simplicial_vertices(g: &LabeledGraph) -> Result<Vec<Label>, GraphError> {
    g.require_loop_free("simplicial vertices")?;
    let out = (0..g.vertex_count())
        .filter(|&v| {
            let nv = g.neighbors(v);
            nv.iter().all(|u| {
                let mut rest = nv.clone();
                rest.remove(u);
                rest.is_subset(g.neighbors(u))
            })
        })
        .map(|v| g.label(v).clone())
        .collect();
    Ok(out)
}

/// Two-colorability by breadth-first search.
pub fn is_bipartite(g: &LabeledGraph) -> Result<bool, GraphError> {
    g.require_loop_free("bipartite test")?;
    let n = g.vertex_count();
    let mut side = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are colored");
            for w in g.neighbors(u).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return Ok(false),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(true)
}
