//! Γ(Z_{n1} × … × Z_{nk}) and its type graph, plus the closed-form
//! classification of product graphs.

use crate::graph::{Label, LabeledGraph};
use crate::numthy::{
    checked_mul, combined_signature, euler_phi, factorize, gcd, proper_divisors, star_pair,
    PrimeSignature,
};
use crate::theorems::{clique_formula, gamma_formula, smith_form, zn_report};
use crate::zn::ensure_within;
use crate::{mul_is_zero, Error, Result};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Moduli of the factors; at least one, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProductDims(Vec<u64>);

impl ProductDims {
    pub fn new(dims: Vec<u64>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Invalid("a product needs at least one factor".into()));
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::Invalid(format!("every modulus must be at least 2, got {d}")));
        }
        Ok(ProductDims(dims))
    }

    pub fn dims(&self) -> &[u64] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// |R| − |R×| − 1, the vertex count of the product graph.
    pub fn vertex_count(&self) -> Result<u64> {
        let mut order = 1u64;
        let mut units = 1u64;
        for &n in &self.0 {
            order = checked_mul(order, n, "ring order")?;
            units *= euler_phi(n)?;
        }
        Ok(order - units - 1)
    }
}

impl FromStr for ProductDims {
    type Err = Error;

    /// Comma-separated moduli, e.g. `12,2`.
    fn from_str(s: &str) -> Result<Self> {
        let dims = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Invalid(format!("bad modulus {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ProductDims::new(dims)
    }
}

impl fmt::Display for ProductDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Cartesian product of the slot value lists, lexicographic.
fn tuples(slots: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for values in slots {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut t = prefix.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn product_is_zero(a: &[u64], b: &[u64], dims: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .zip(dims)
        .all(|((&x, &y), &n)| mul_is_zero(x, y, n))
}

fn tuple_graph(vertices: Vec<Vec<u64>>, dims: &[u64], looped: bool) -> Result<LabeledGraph> {
    let labels = vertices.iter().cloned().map(Label::Tuple).collect();
    Ok(LabeledGraph::from_fn(
        labels,
        |i, j| product_is_zero(&vertices[i], &vertices[j], dims),
        |i| looped && product_is_zero(&vertices[i], &vertices[i], dims),
    )?)
}

/// Nonzero non-units of the product ring, lexicographic.
pub fn product_vertices(d: &ProductDims) -> Vec<Vec<u64>> {
    let slots: Vec<Vec<u64>> = d.dims().iter().map(|&n| (0..n).collect()).collect();
    tuples(&slots)
        .into_iter()
        .filter(|t| {
            t.iter().any(|&x| x != 0)
                && t.iter().zip(d.dims()).any(|(&x, &n)| gcd(x, n) > 1)
        })
        .collect()
}

/// Vertices as above; adjacency is a componentwise zero product.
pub fn build_product_graph(d: &ProductDims, cap: Option<usize>) -> Result<LabeledGraph> {
    ensure_within("product graph construction", d.vertex_count()?, cap)?;
    tuple_graph(product_vertices(d), d.dims(), false)
}

/// Slot values {0, 1} ∪ proper nontrivial divisors, ascending.
fn slot_types(n: u64) -> Result<Vec<u64>> {
    let mut v = vec![0, 1];
    v.extend(proper_divisors(n)?);
    Ok(v)
}

/// All type labels: slot tuples other than all-0 and all-1.
pub fn product_type_labels(d: &ProductDims) -> Result<Vec<Vec<u64>>> {
    let slots = d
        .dims()
        .iter()
        .map(|&n| slot_types(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(tuples(&slots)
        .into_iter()
        .filter(|t| !t.iter().all(|&x| x == 0) && !t.iter().all(|&x| x == 1))
        .collect())
}

pub fn build_product_type_graph(d: &ProductDims, cap: Option<usize>) -> Result<LabeledGraph> {
    build_product_type_graph_with(d, false, cap)
}

/// As above; `strong` adds a loop on every label whose square is zero.
pub fn build_product_type_graph_with(
    d: &ProductDims,
    strong: bool,
    cap: Option<usize>,
) -> Result<LabeledGraph> {
    let labels = product_type_labels(d)?;
    ensure_within("product type graph construction", labels.len() as u64, cap)?;
    tuple_graph(labels, d.dims(), strong)
}

/// Type label of a vertex: 0 stays 0, units become 1, else gcd(xᵢ, nᵢ).
pub fn vertex_type(d: &ProductDims, v: &[u64]) -> Vec<u64> {
    v.iter()
        .zip(d.dims())
        .map(|(&x, &n)| if x == 0 { 0 } else { gcd(x, n) })
        .collect()
}

/// Per-slot exponent signatures, slots sorted.
pub fn canonical_type_signature(d: &ProductDims) -> Result<Vec<PrimeSignature>> {
    let mut sigs = d
        .dims()
        .iter()
        .map(|&n| Ok(factorize(n)?.signature()))
        .collect::<Result<Vec<_>>>()?;
    sigs.sort();
    Ok(sigs)
}

/// Closed-form side of the product classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub dims: ProductDims,
    pub combined_signature: PrimeSignature,
    pub perfect: bool,
    pub complete: bool,
    pub chordal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_bipartite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_lower_bound: Option<u64>,
    /// [Σγᵢ, 2Σγᵢ] with γᵢ the closed domination number of each factor.
    pub domination_bounds: (u64, u64),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_partite_k: Option<usize>,
    pub simplicial_exists: bool,
}

fn is_prime_dim(n: u64) -> bool {
    crate::numthy::is_prime(n)
}

/// Self-annihilating part of the clique bound: nonzero multiples of n*.
fn star_multiples(n: u64) -> Result<u64> {
    Ok(n / star_pair(n)?.0 - 1)
}

pub fn product_report(d: &ProductDims) -> Result<ProductReport> {
    let dims = d.dims();
    let k = d.k();
    let combined = combined_signature(dims)?;
    let perfect = smith_form(&combined);
    let mut sorted = dims.to_vec();
    sorted.sort_unstable();
    let factors = dims.iter().map(|&n| factorize(n)).collect::<std::result::Result<Vec<_>, _>>()?;
    let gamma_sum: u64 = factors.iter().map(gamma_formula).sum();
    let all_prime = factors.iter().all(|f| f.is_prime());

    let (complete, chordal, simplicial_exists) = if k == 1 {
        // A single factor is the graph of Z_n itself.
        let z = zn_report(dims[0])?;
        (z.complete, z.chordal, z.simplicial_exists)
    } else {
        let chordal = match sorted.as_slice() {
            [2, 2, 2] => true,
            [2, m] => factors.iter().any(|f| f.n == *m && f.is_prime_power() && f.factors[0].1 <= 2),
            _ => false,
        };
        let simplicial = dims.contains(&2)
            || dims
                .iter()
                .map(|&n| zn_report(n).map(|z| z.simplicial_exists))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .any(|s| s);
        (k == 2 && sorted == [2, 2], chordal, simplicial)
    };

    let (complete_bipartite, bipartite, clique_lower_bound) = if k == 2 {
        let p0 = is_prime_dim(dims[0]);
        let p1 = is_prime_dim(dims[1]);
        let bip = (p0 && p1) || (p0 && dims[1] == 4) || (p1 && dims[0] == 4);
        let bound = clique_formula(&factors[0])
            + clique_formula(&factors[1])
            + star_multiples(dims[0])? * star_multiples(dims[1])?;
        (Some(p0 && p1), Some(bip), Some(bound))
    } else {
        (None, None, None)
    };

    Ok(ProductReport {
        dims: d.clone(),
        combined_signature: combined,
        perfect,
        complete,
        chordal,
        complete_bipartite,
        bipartite,
        clique_lower_bound,
        domination_bounds: (gamma_sum, 2 * gamma_sum),
        k_partite_k: all_prime.then_some(k),
        simplicial_exists,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(s: &str) -> ProductDims {
        s.parse().unwrap()
    }

    fn tuple_edges(g: &LabeledGraph) -> Vec<(String, String)> {
        g.edges()
            .map(|(i, j)| (g.label(i).to_string(), g.label(j).to_string()))
            .collect()
    }

    #[test]
    fn parses_and_validates_dims() {
        assert_eq!(dims("12, 2").dims(), &[12, 2]);
        assert!("".parse::<ProductDims>().is_err());
        assert!("3,1".parse::<ProductDims>().is_err());
        assert!("3,x".parse::<ProductDims>().is_err());
        assert_eq!(dims("2,4").to_string(), "2,4");
    }

    #[test]
    fn product_graph_examples() {
        let g = build_product_graph(&dims("2,2"), None).unwrap();
        assert_eq!(tuple_edges(&g), vec![("0,1".into(), "1,0".into())]);
        let g = build_product_graph(&dims("2,4"), None).unwrap();
        assert_eq!(g.vertex_count(), 5);
        let mut e = tuple_edges(&g);
        e.sort();
        let want: Vec<(String, String)> = [("0,1", "1,0"), ("0,2", "1,0"), ("0,2", "1,2"), ("0,3", "1,0")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(e, want);
        let g = build_product_graph(&dims("2,2,2"), None).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        assert_eq!(dims("2,4").vertex_count().unwrap(), 5);
        assert!(build_product_graph(&dims("16,16"), Some(100)).unwrap_err().is_resource());
    }

    #[test]
    fn type_graph_examples() {
        let g = build_product_type_graph(&dims("2,2"), None).unwrap();
        assert_eq!(tuple_edges(&g), vec![("0,1".into(), "1,0".into())]);
        let g = build_product_type_graph(&dims("4,2"), None).unwrap();
        let labels: Vec<String> = g.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["0,1", "1,0", "2,0", "2,1"]);
        let a = g.index_of(&Label::Tuple(vec![2, 0])).unwrap();
        let b = g.index_of(&Label::Tuple(vec![0, 1])).unwrap();
        assert!(g.adjacent(a, b) && !g.has_loops());
        // |{0,1,2,3,4,6}| · |{0,1}| − 2.
        assert_eq!(product_type_labels(&dims("12,2")).unwrap().len(), 10);
    }

    #[test]
    fn vertex_types() {
        let d = dims("12,2");
        assert_eq!(vertex_type(&d, &[10, 0]), vec![2, 0]);
        assert_eq!(vertex_type(&d, &[5, 1]), vec![1, 1]);
        assert_eq!(vertex_type(&d, &[0, 1]), vec![0, 1]);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(
            canonical_type_signature(&dims("12,2")).unwrap(),
            canonical_type_signature(&dims("18,3")).unwrap()
        );
        assert_eq!(
            canonical_type_signature(&dims("2,3")).unwrap(),
            canonical_type_signature(&dims("3,2")).unwrap()
        );
        assert_eq!(
            combined_signature(&[4, 9]).unwrap(),
            combined_signature(&[36]).unwrap()
        );
    }

    #[test]
    fn report_examples() {
        assert!(product_report(&dims("12,2")).unwrap().perfect);
        assert!(!product_report(&dims("2,2,2,2,2")).unwrap().perfect);
        let r = product_report(&dims("4,4")).unwrap();
        assert_eq!(r.clique_lower_bound, Some(3));
        assert_eq!(r.domination_bounds, (2, 4));
        let r = product_report(&dims("2,2")).unwrap();
        assert!(r.complete && r.chordal && r.complete_bipartite == Some(true));
        assert_eq!(r.k_partite_k, Some(2));
        let r = product_report(&dims("3,4")).unwrap();
        assert_eq!((r.bipartite, r.complete_bipartite), (Some(true), Some(false)));
        assert!(product_report(&dims("2,9")).unwrap().chordal);
        assert!(!product_report(&dims("2,8")).unwrap().chordal);
        assert!(!product_report(&dims("3,3")).unwrap().simplicial_exists);
    }
}
