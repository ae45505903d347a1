//! Closed-form classification of Γ(Z_n) from the factorization of n alone.
//! Every value here is the predicted side of a verification claim.

use crate::numthy::{factorize, gcd, star_pair, Factorization, PrimeSignature};
use crate::zn::type_class_info;
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZnTheoremReport {
    pub n: u64,
    pub perfect: bool,
    pub complete: bool,
    pub chordal: bool,
    pub clique_number: u64,
    pub gamma: u64,
    pub gamma_beta_perfect: bool,
    pub simplicial_exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kpartite_k_squarefree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_dominating_count: Option<u64>,
}

/// The four perfect forms p^a, p^a q^b, p^a q r and pqrs, as signatures.
pub fn smith_form(sig: &PrimeSignature) -> bool {
    matches!(sig.exponents(), [_] | [_, _] | [_, 1, 1] | [1, 1, 1, 1])
}

/// n/n* + (number of primes with odd exponent) − 1, and 0 for prime n
/// where the graph has no vertices.
pub fn clique_formula(f: &Factorization) -> u64 {
    if f.is_prime() {
        return 0;
    }
    let (star, _) = star_pair(f.n).expect("n >= 2");
    let odd = f.exponents().filter(|e| e % 2 == 1).count() as u64;
    f.n / star + odd - 1
}

/// 0 for primes; 1 for higher prime powers and for 2p, where p dominates
/// every even vertex; otherwise the number of primes.
pub fn gamma_formula(f: &Factorization) -> u64 {
    if f.is_prime() {
        0
    } else if f.is_prime_power() || is_twice_odd_prime(f) {
        1
    } else {
        f.omega() as u64
    }
}

fn is_twice_odd_prime(f: &Factorization) -> bool {
    matches!(f.factors.as_slice(), [(2, 1), (p, 1)] if *p > 2)
}

fn is_twice_odd_prime_square(f: &Factorization) -> bool {
    matches!(f.factors.as_slice(), [(2, 1), (p, 2)] if *p > 2)
}

/// n ∈ {8, 9} ∪ {p} ∪ {2p : p odd} ∪ {3p}.
fn gamma_beta_form(f: &Factorization) -> bool {
    let n = f.n;
    n == 8
        || n == 9
        || f.is_prime()
        || is_twice_odd_prime(f)
        || (n.is_multiple_of(3) && f.omega() <= 2 && f.is_square_free() && n > 3)
}

pub fn zn_report(n: u64) -> Result<ZnTheoremReport> {
    if n < 2 {
        return Err(Error::Invalid(format!("modulus must be at least 2, got {n}")));
    }
    let f = factorize(n)?;
    let k = f.omega() as u64;
    let complete = matches!(f.factors.as_slice(), [(_, 2)]);
    let chordal = f.is_prime_power() || is_twice_odd_prime(&f) || is_twice_odd_prime_square(&f);
    let min_dominating_count = (k >= 3).then(|| f.primes().map(|p| p - 1).product());
    Ok(ZnTheoremReport {
        n,
        perfect: smith_form(&f.signature()),
        complete,
        chordal,
        clique_number: clique_formula(&f),
        gamma: gamma_formula(&f),
        gamma_beta_perfect: gamma_beta_form(&f),
        simplicial_exists: !f.is_prime() && (n.is_multiple_of(2) || !f.is_square_free()),
        kpartite_k_squarefree: f.is_square_free().then_some(k),
        min_dominating_count,
    })
}

/// T_2 (when n is even) together with every T_g for g | n₊, g a proper
/// nontrivial divisor of n. Ascending.
pub fn simplicial_set_closed(n: u64) -> Result<Vec<u64>> {
    let (_, substar) = star_pair(n)?;
    let mut labels: Vec<u64> = Vec::new();
    if n.is_multiple_of(2) && n > 2 {
        labels.push(2);
    }
    labels.extend((2..=substar).filter(|&g| substar % g == 0 && g < n));
    labels.sort_unstable();
    labels.dedup();
    let mut out = Vec::new();
    for a in labels {
        out.extend(type_class_info(n, a)?.members());
    }
    out.sort_unstable();
    Ok(out)
}

/// v² ≡ 0 (mod n) exactly when n* divides v.
pub fn self_annihilator_closed(v: u64, n: u64) -> Result<bool> {
    if v == 0 || v >= n || gcd(v, n) == 1 {
        return Err(Error::Invalid(format!("{v} is not a vertex of the graph of Z_{n}")));
    }
    Ok(v.is_multiple_of(star_pair(n)?.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_examples() {
        let r = zn_report(100).unwrap();
        assert!(r.perfect && !r.complete);
        assert_eq!(r.clique_number, 9);
        assert!(zn_report(15).unwrap().gamma_beta_perfect);
        assert!(!zn_report(2310).unwrap().perfect);
        assert!(zn_report(49).unwrap().complete);
        assert_eq!(zn_report(36).unwrap().clique_number, 5);
        assert_eq!(zn_report(30).unwrap().min_dominating_count, Some(8));
        assert_eq!(zn_report(12).unwrap().min_dominating_count, None);
        assert_eq!(zn_report(30).unwrap().kpartite_k_squarefree, Some(3));
        assert_eq!(zn_report(12).unwrap().kpartite_k_squarefree, None);
    }

    #[test]
    fn gamma_branches() {
        assert_eq!(zn_report(7).unwrap().gamma, 0);
        assert_eq!(zn_report(4).unwrap().gamma, 1);
        assert_eq!(zn_report(27).unwrap().gamma, 1);
        assert_eq!(zn_report(60).unwrap().gamma, 3);
        assert_eq!(zn_report(14).unwrap().gamma, 1);
        assert_eq!(zn_report(15).unwrap().gamma, 2);
    }

    #[test]
    fn gamma_beta_set_below_forty() {
        let hits: Vec<u64> = (2..40).filter(|&n| zn_report(n).unwrap().gamma_beta_perfect).collect();
        assert_eq!(
            hits,
            vec![2, 3, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 31, 33, 34, 37, 38, 39]
        );
    }

    #[test]
    fn chordal_set_below_sixty() {
        let hits: Vec<u64> = (2..60).filter(|&n| zn_report(n).unwrap().chordal).collect();
        assert_eq!(
            hits,
            vec![2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 22, 23, 25, 26, 27, 29, 31, 32, 34, 37, 38, 41, 43, 46, 47, 49, 50, 53, 58, 59]
        );
    }

    #[test]
    fn smith_forms() {
        let ok = |e: Vec<u32>| smith_form(&PrimeSignature::from_exponents(e));
        assert!(ok(vec![5]) && ok(vec![3, 2]) && ok(vec![4, 1, 1]) && ok(vec![1, 1, 1, 1]));
        assert!(!ok(vec![2, 2, 1]) && !ok(vec![2, 1, 1, 1]) && !ok(vec![1; 5]));
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(simplicial_set_closed(12).unwrap(), vec![2, 10]);
        assert_eq!(simplicial_set_closed(15).unwrap(), Vec::<u64>::new());
        assert_eq!(simplicial_set_closed(9).unwrap(), vec![3, 6]);
        assert_eq!(simplicial_set_closed(4).unwrap(), vec![2]);
    }

    #[test]
    fn self_annihilator_examples() {
        assert!(self_annihilator_closed(6, 12).unwrap());
        assert!(!self_annihilator_closed(2, 12).unwrap());
        assert!(self_annihilator_closed(12, 72).unwrap());
        assert!(self_annihilator_closed(5, 12).is_err());
    }
}
