use super::{Budget, GraphError, LabeledGraph};
use std::collections::BTreeMap;

/// Color refinement run jointly on both graphs so colors are comparable.
fn refine(g1: &LabeledGraph, g2: &LabeledGraph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g1, g2];
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| (0..g.vertex_count()).map(|v| g.degree(v) * 2 + g.has_loop(v) as usize).collect())
        .collect();
    loop {
        let mut sigs: Vec<Vec<(usize, Vec<usize>)>> = Vec::new();
        for (gi, g) in graphs.iter().enumerate() {
            let s = (0..g.vertex_count())
                .map(|v| {
                    let mut around: Vec<usize> = g.neighbors(v).iter().map(|u| colors[gi][u]).collect();
                    around.sort_unstable();
                    (colors[gi][v], around)
                })
                .collect();
            sigs.push(s);
        }
        let palette: BTreeMap<&(usize, Vec<usize>), usize> = sigs
            .iter()
            .flatten()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|s| s.iter().map(|x| palette[x]).collect())
            .collect();
        let classes = |c: &[Vec<usize>]| c.iter().flatten().collect::<std::collections::BTreeSet<_>>().len();
        if classes(&next) == classes(&colors) {
            return (next[0].clone(), next[1].clone());
        }
        colors = next;
    }
}

struct Matcher<'a> {
    g1: &'a LabeledGraph,
    g2: &'a LabeledGraph,
    c1: Vec<usize>,
    c2: Vec<usize>,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    budget: &'a mut Budget,
}

impl Matcher<'_> {
    fn place(&mut self, depth: usize) -> Result<bool, GraphError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.budget.tick("isomorphism search")?;
        let v = self.order[depth];
        for w in 0..self.g2.vertex_count() {
            if self.used[w] || self.c2[w] != self.c1[v] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let mu = self.map[u].expect("earlier vertices are mapped");
                self.g1.adjacent(u, v) == self.g2.adjacent(mu, w)
            });
            if !consistent {
                continue;
            }
            self.map[v] = Some(w);
            self.used[w] = true;
            if self.place(depth + 1)? {
                return Ok(true);
            }
            self.map[v] = None;
            self.used[w] = false;
        }
        Ok(false)
    }
}

/// Exact isomorphism test respecting loops; refuses graphs above `cap` vertices.
pub fn are_isomorphic(
    g1: &LabeledGraph,
    g2: &LabeledGraph,
    cap: usize,
    budget: &mut Budget,
) -> Result<bool, GraphError> {
    for g in [g1, g2] {
        if g.vertex_count() > cap {
            return Err(GraphError::TooLarge {
                what: "isomorphism",
                vertices: g.vertex_count(),
                cap,
            });
        }
    }
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.loops().count() != g2.loops().count()
    {
        return Ok(false);
    }
    let (c1, c2) = refine(g1, g2);
    let histogram = |c: &[usize]| {
        let mut h = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_insert(0usize) += 1;
        }
        h
    };
    let h1 = histogram(&c1);
    if h1 != histogram(&c2) {
        return Ok(false);
    }
    let mut order: Vec<usize> = (0..g1.vertex_count()).collect();
    order.sort_by_key(|&v| (h1[&c1[v]], v));
    let n = g1.vertex_count();
    let mut m = Matcher {
        g1,
        g2,
        c1,
        c2,
        order,
        map: vec![None; n],
        used: vec![false; n],
        budget,
    };
    m.place(0)
}
