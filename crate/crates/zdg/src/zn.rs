//! Γ(Z_n), its type classes T_a = {x : gcd(x, n) = a}, and the type graphs.

use crate::graph::{GraphError, Label, LabeledGraph};
use crate::numthy::{euler_phi, gcd, proper_divisors};
use crate::{mul_is_zero, Error, Result};

fn require_at_least_two(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::Invalid(format!("modulus must be at least 2, got {n}")));
    }
    Ok(())
}

/// Number of vertices of Γ(Z_n): n − φ(n) − 1.
pub fn ring_vertex_count(n: u64) -> Result<u64> {
    require_at_least_two(n)?;
    Ok(n - euler_phi(n)? - 1)
}

pub(crate) fn ensure_within(what: &'static str, count: u64, cap: Option<usize>) -> Result<()> {
    match cap {
        Some(cap) if count > cap as u64 => Err(GraphError::TooLarge {
            what,
            vertices: usize::try_from(count).unwrap_or(usize::MAX),
            cap,
        }
        .into()),
        _ => Ok(()),
    }
}

/// Nonzero zero-divisors of Z_n, ascending.
pub fn ring_vertices(n: u64) -> Vec<u64> {
    (1..n).filter(|&x| gcd(x, n) > 1).collect()
}

/// Γ(Z_n): labels are the nonzero zero-divisors; u ~ v iff uv ≡ 0 (mod n).
/// Γ(Z_p) is the empty graph.
pub fn build_ring_graph(n: u64, cap: Option<usize>) -> Result<LabeledGraph> {
    ensure_within("ring graph construction", ring_vertex_count(n)?, cap)?;
    let v = ring_vertices(n);
    let labels = v.iter().copied().map(Label::Int).collect();
    Ok(LabeledGraph::from_fn(labels, |i, j| mul_is_zero(v[i], v[j], n), |_| false)?)
}

/// One type class T_a; members are produced on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeClass {
    pub n: u64,
    pub a: u64,
    /// |T_a| = φ(n/a).
    pub size: u64,
}

impl TypeClass {
    /// x = a·k with 0 < k < n/a and gcd(k, n/a) = 1, ascending.
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        let m = self.n / self.a;
        (1..m).filter(move |&k| gcd(k, m) == 1).map(move |k| k * self.a)
    }
}

pub fn type_class_info(n: u64, a: u64) -> Result<TypeClass> {
    require_at_least_two(n)?;
    if a <= 1 || a >= n || !n.is_multiple_of(a) {
        return Err(Error::Invalid(format!(
            "{a} is not a proper nontrivial divisor of {n}"
        )));
    }
    Ok(TypeClass {
        n,
        a,
        size: euler_phi(n / a)?,
    })
}

/// Every type class of Z_n, by ascending label. Empty for prime n.
pub fn type_classes(n: u64) -> Result<Vec<TypeClass>> {
    require_at_least_two(n)?;
    proper_divisors(n)?
        .into_iter()
        .map(|a| type_class_info(n, a))
        .collect()
}

/// Γᵀ(Z_n) on the proper nontrivial divisors, a ~ b iff ab ≡ 0 (mod n);
/// the strong variant adds a loop at every a with a² ≡ 0.
pub fn build_type_graph(n: u64, strong: bool) -> Result<LabeledGraph> {
    require_at_least_two(n)?;
    let d = proper_divisors(n)?;
    let labels = d.iter().copied().map(Label::Int).collect();
    Ok(LabeledGraph::from_fn(
        labels,
        |i, j| mul_is_zero(d[i], d[j], n),
        |i| strong && mul_is_zero(d[i], d[i], n),
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(xs: &[u64]) -> Vec<Label> {
        xs.iter().copied().map(Label::Int).collect()
    }

    fn edge_labels(g: &LabeledGraph) -> Vec<(u64, u64)> {
        g.edges()
            .map(|(i, j)| (g.label(i).as_int().unwrap(), g.label(j).as_int().unwrap()))
            .collect()
    }

    #[test]
    fn ring_graph_examples() {
        let g8 = build_ring_graph(8, None).unwrap();
        assert_eq!(g8.labels(), ints(&[2, 4, 6]).as_slice());
        assert_eq!(edge_labels(&g8), vec![(2, 4), (4, 6)]);
        let g9 = build_ring_graph(9, None).unwrap();
        assert_eq!(edge_labels(&g9), vec![(3, 6)]);
        let g6 = build_ring_graph(6, None).unwrap();
        assert_eq!(g6.labels(), ints(&[2, 3, 4]).as_slice());
        assert_eq!(edge_labels(&g6), vec![(2, 3), (3, 4)]);
        assert_eq!(build_ring_graph(13, None).unwrap().vertex_count(), 0);
    }

    #[test]
    fn ring_graph_respects_cap() {
        let err = build_ring_graph(100, Some(10)).unwrap_err();
        assert!(err.is_resource());
        assert!(build_ring_graph(1, None).is_err());
    }

    #[test]
    fn type_class_examples() {
        let t = type_class_info(12, 6).unwrap();
        assert_eq!((t.members().collect::<Vec<_>>(), t.size), (vec![6], 1));
        let t = type_class_info(12, 2).unwrap();
        assert_eq!((t.members().collect::<Vec<_>>(), t.size), (vec![2, 10], 2));
        let t = type_class_info(30, 6).unwrap();
        assert_eq!(t.members().collect::<Vec<_>>(), vec![6, 12, 18, 24]);
        assert_eq!(t.size, 4);
        assert!(type_class_info(12, 5).is_err());
        assert!(type_class_info(12, 12).is_err());
    }

    #[test]
    fn type_graph_examples() {
        let g = build_type_graph(12, true).unwrap();
        assert_eq!(g.labels(), ints(&[2, 3, 4, 6]).as_slice());
        assert_eq!(edge_labels(&g), vec![(2, 6), (3, 4), (4, 6)]);
        assert_eq!(g.loops().map(|i| g.label(i).clone()).collect::<Vec<_>>(), ints(&[6]));
        let p2 = build_type_graph(49, true).unwrap();
        assert_eq!(p2.vertex_count(), 1);
        assert!(p2.has_loop(0));
        assert!(!build_type_graph(30, true).unwrap().has_loops());
        assert!(!build_type_graph(12, false).unwrap().has_loops());
        assert_eq!(build_type_graph(7, true).unwrap().vertex_count(), 0);
    }

    proptest! {
        #[test]
        fn classes_partition_the_vertices(n in 2u64..3000) {
            let classes = type_classes(n).unwrap();
            let mut all: Vec<u64> = classes.iter().flat_map(|c| c.members().collect::<Vec<_>>()).collect();
            for c in &classes {
                prop_assert_eq!(c.members().count() as u64, c.size);
            }
            all.sort_unstable();
            prop_assert_eq!(all, ring_vertices(n));
            let total: u64 = classes.iter().map(|c| c.size).sum();
            prop_assert_eq!(total, ring_vertex_count(n).unwrap());
        }
    }
}
