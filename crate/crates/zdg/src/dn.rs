//! The zero-divisor graph of the divisor poset D_n: vertices are the
//! divisors d > 1 missing some prime of n, adjacent when coprime.

use crate::graph::{Extended, Label, LabeledGraph};
use crate::numthy::{divisors_of, factorize, gcd, Factorization};
use crate::zn::ensure_within;
use crate::{Error, Result};
use serde::Serialize;

/// Π(αᵢ + 1) − Παᵢ − 1: all divisors except 1 and those divisible by every prime.
pub fn dn_vertex_count(f: &Factorization) -> u64 {
    let all: u64 = f.exponents().map(|e| e as u64 + 1).product();
    let full: u64 = f.exponents().map(|e| e as u64).product();
    all - full - 1
}

fn is_vertex(f: &Factorization, d: u64) -> bool {
    d > 1 && f.primes().any(|p| !d.is_multiple_of(p))
}

pub fn dn_vertices(f: &Factorization) -> Vec<u64> {
    divisors_of(f).into_iter().filter(|&d| is_vertex(f, d)).collect()
}

pub fn build_dn_graph(n: u64, cap: Option<usize>) -> Result<LabeledGraph> {
    if n < 2 {
        return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
    }
    let f = factorize(n)?;
    ensure_within("divisor graph construction", dn_vertex_count(&f), cap)?;
    let v = dn_vertices(&f);
    let labels = v.iter().copied().map(Label::Int).collect();
    Ok(LabeledGraph::from_fn(labels, |i, j| gcd(v[i], v[j]) == 1, |_| false)?)
}

/// deg(d) = Π_{p ∤ d}(α_p + 1) − 1.
pub fn dn_degree(f: &Factorization, d: u64) -> u64 {
    f.factors
        .iter()
        .filter(|&&(p, _)| !d.is_multiple_of(p))
        .map(|&(_, e)| e as u64 + 1)
        .product::<u64>()
        - 1
}

/// Closed-form report; fields other than `trivial` describe the graph only
/// when it is nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DnReport {
    pub n: u64,
    pub trivial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter_class: Option<u64>,
    pub complete: bool,
    pub complete_bipartite: bool,
    pub clique_number: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_leading_coeff: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_second_coeff: Option<u64>,
    pub domination: u64,
    pub regular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth_class: Option<Extended>,
    pub perfect: bool,
    pub chordal: bool,
    pub simplicial: Vec<u64>,
    pub planar: bool,
    pub eulerian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_count_squarefree: Option<u64>,
    pub independence_lower_bound: u64,
}

fn binomial2(r: u64) -> u64 {
    r * (r - 1) / 2
}

/// (3^r − 2^(r+1) + 1)/2 edges for square-free n with r primes.
pub fn squarefree_edge_count(r: u32) -> u64 {
    (3u64.pow(r) + 1 - 2u64.pow(r + 1)) / 2
}

/// The edge count as printed, Σ_{i=1}^{r−1} 2^{r−i−1}·C(r,i) − 2^{r−1} − 1;
/// negative at r = 2.
pub fn squarefree_edge_count_printed(r: u32) -> i64 {
    let mut binom = 1i64;
    let mut sum = 0i64;
    for i in 1..r {
        binom = binom * (r - i + 1) as i64 / i as i64;
        sum += (1i64 << (r - i - 1)) * binom;
    }
    sum - (1i64 << (r - 1)) - 1
}

/// The weaker square-free independence bound 2^{r−1} − r.
pub fn squarefree_independence_printed(r: u32) -> u64 {
    (1u64 << (r - 1)) - r as u64
}

/// max over i of αᵢ·(Π_{j≠i}(αⱼ+1) − Π_{j≠i}αⱼ): the number of vertices
/// divisible by pᵢ, which are pairwise non-coprime.
pub fn dn_independence_bound(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    if f.omega() < 2 {
        return Err(Error::Invalid(format!("{n} is a prime power; its divisor graph is empty")));
    }
    Ok(independence_bound_of(&f))
}

fn independence_bound_of(f: &Factorization) -> u64 {
    let exps: Vec<u64> = f.exponents().map(u64::from).collect();
    (0..exps.len())
        .map(|i| {
            let others = exps.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e);
            let with_one: u64 = others.clone().map(|e| e + 1).product();
            let without: u64 = others.product();
            exps[i] * (with_one - without)
        })
        .max()
        .unwrap_or(0)
}

/// Vertices divisible by every prime but one, where the missing prime has
/// exponent 1. Ascending.
fn simplicial_closed(f: &Factorization) -> Vec<u64> {
    dn_vertices(f)
        .into_iter()
        .filter(|&d| {
            let missing: Vec<u32> = f
                .factors
                .iter()
                .filter(|&&(p, _)| d % p != 0)
                .map(|&(_, e)| e)
                .collect();
            missing == [1]
        })
        .collect()
}

pub fn dn_report(n: u64) -> Result<DnReport> {
    if n < 2 {
        return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
    }
    let f = factorize(n)?;
    let r = f.omega() as u64;
    let mut sig = f.signature();
    let exps = std::mem::take(&mut sig.0);
    let trivial = r < 2;
    let two = r == 2;
    let min_exp = exps.last().copied().unwrap_or(0);
    let lead: u64 = exps.iter().map(|&e| e as u64).product();
    let second = if r >= 3 {
        let sum: u64 = (0..exps.len())
            .map(|i| {
                exps.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &e)| e as u64)
                    .product::<u64>()
            })
            .sum();
        Some(sum + binomial2(r) * lead)
    } else if two {
        Some(exps.iter().map(|&e| e as u64).sum())
    } else {
        None
    };
    let girth = if trivial {
        None
    } else if two && min_exp == 1 {
        Some(Extended::Infinite)
    } else if two {
        Some(Extended::Finite(4))
    } else {
        Some(Extended::Finite(3))
    };
    let diameter = match r {
        0 | 1 => None,
        2 if f.is_square_free() => Some(1),
        2 => Some(2),
        _ => Some(3),
    };
    let planar = matches!(exps.as_slice(), [_, 1] | [_, 2] | [1, 1, 1] | [2, 1, 1]);
    let domination = if trivial {
        0
    } else if two && min_exp == 1 {
        1
    } else {
        r
    };
    Ok(DnReport {
        n,
        trivial,
        diameter_class: diameter,
        complete: two && f.is_square_free(),
        complete_bipartite: two,
        clique_number: if trivial { 0 } else { r },
        clique_leading_coeff: (!trivial).then_some(lead),
        clique_second_coeff: second,
        domination,
        regular: two && exps[0] == exps[1],
        girth_class: girth,
        perfect: r <= 4,
        chordal: (two && min_exp == 1) || exps == [1, 1, 1],
        simplicial: simplicial_closed(&f),
        planar,
        eulerian: !trivial && exps.iter().all(|e| e % 2 == 0),
        edge_count_squarefree: f.is_square_free().then(|| squarefree_edge_count(r as u32)),
        independence_lower_bound: independence_bound_of(&f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(g: &LabeledGraph) -> Vec<u64> {
        g.labels().iter().map(|l| l.as_int().unwrap()).collect()
    }

    #[test]
    fn graph_examples() {
        let g = build_dn_graph(30, None).unwrap();
        assert_eq!(ints(&g), vec![2, 3, 5, 6, 10, 15]);
        assert_eq!(g.edge_count(), 6);
        let g = build_dn_graph(12, None).unwrap();
        assert_eq!(ints(&g), vec![2, 3, 4]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(build_dn_graph(1024, None).unwrap().vertex_count(), 0);
    }

    #[test]
    fn report_examples() {
        let r = dn_report(30).unwrap();
        assert_eq!(r.diameter_class, Some(3));
        assert_eq!(r.girth_class, Some(Extended::Finite(3)));
        assert_eq!((r.clique_number, r.domination), (3, 3));
        assert!(r.perfect && r.chordal && r.planar && !r.eulerian);
        assert_eq!(r.simplicial, vec![6, 10, 15]);
        assert_eq!((r.edge_count_squarefree, r.independence_lower_bound), (Some(6), 3));
        let r = dn_report(12).unwrap();
        assert!(r.complete_bipartite && r.chordal && r.planar);
        assert_eq!(r.girth_class, Some(Extended::Infinite));
        assert_eq!(r.simplicial, vec![2, 4]);
        let r = dn_report(36).unwrap();
        assert_eq!(r.girth_class, Some(Extended::Finite(4)));
        assert!(r.eulerian && r.regular);
        assert!(dn_report(64).unwrap().trivial);
    }

    #[test]
    fn independence_bound_examples() {
        assert_eq!(dn_independence_bound(12).unwrap(), 2);
        assert_eq!(dn_independence_bound(30).unwrap(), 3);
        assert_eq!(dn_independence_bound(360).unwrap(), 12);
        assert!(dn_independence_bound(27).is_err());
    }

    #[test]
    fn edge_count_forms() {
        assert_eq!(squarefree_edge_count_printed(2), -1);
        assert_eq!(squarefree_edge_count(2), 1);
        assert_eq!(squarefree_edge_count(3), 6);
        assert_eq!(squarefree_independence_printed(3), 1);
    }

    proptest! {
        #[test]
        fn degree_formula_matches_adjacency(n in 2u64..5000) {
            let f = factorize(n).unwrap();
            prop_assume!(dn_vertex_count(&f) <= 200);
            let g = build_dn_graph(n, None).unwrap();
            prop_assert_eq!(g.vertex_count() as u64, dn_vertex_count(&f));
            for (i, l) in g.labels().iter().enumerate() {
                prop_assert_eq!(g.degree(i) as u64, dn_degree(&f, l.as_int().unwrap()));
            }
        }
    }
}
