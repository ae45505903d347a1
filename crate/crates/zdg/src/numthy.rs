//! Integer arithmetic behind every graph family: factorization, divisors,
//! the star pair (n*, n₊), Euler's phi and prime signatures.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("zero has no factorization")]
    Zero,
    #[error("expected an integer >= 2, got {0}")]
    BelowTwo(u64),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("empty list of dimensions")]
    EmptyDims,
}

/// Canonical prime decomposition; primes strictly increasing, exponents >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.factors.iter().map(|&(_, e)| e)
    }

    /// Number of distinct primes.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn signature(&self) -> PrimeSignature {
        PrimeSignature::from_exponents(self.exponents().collect())
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

/// Exponent multiset, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimeSignature(pub Vec<u32>);

impl PrimeSignature {
    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        PrimeSignature(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Smallest integer with this signature: the largest exponent goes on 2,
    /// the next on 3, and so on.
    pub fn smallest_representative(&self) -> Result<u64, NumError> {
        let mut out = 1u64;
        let mut primes = PrimeIter::new();
        for &e in &self.0 {
            let p = primes.next().expect("prime iterator is unbounded");
            out = checked_mul(out, checked_pow(p, e)?, "signature representative")?;
        }
        Ok(out)
    }
}

impl std::fmt::Display for PrimeSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn checked_mul(a: u64, b: u64, what: &'static str) -> Result<u64, NumError> {
    a.checked_mul(b).ok_or(NumError::Overflow(what))
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64, NumError> {
    base.checked_pow(exp).ok_or(NumError::Overflow("power"))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin; the twelve smallest prime bases cover all of u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho with a fixed seed schedule.
fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("some increment always splits a composite")
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

pub fn factorize(n: u64) -> Result<Factorization, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let mut m = n;
    let mut primes = Vec::new();
    for p in 2..=1000u64 {
        if p * p > m {
            break;
        }
        while m.is_multiple_of(p) {
            primes.push(p);
            m /= p;
        }
    }
    split_into(m, &mut primes);
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { n, factors })
}

/// All divisors of n, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>, NumError> {
    let f = factorize(n)?;
    Ok(divisors_of(&f))
}

pub fn divisors_of(f: &Factorization) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in &f.factors {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Divisors d with 1 < d < n.
pub fn proper_divisors(n: u64) -> Result<Vec<u64>, NumError> {
    Ok(divisors(n)?
        .into_iter()
        .filter(|&d| d != 1 && d != n)
        .collect())
}

/// (n*, n₊) = (Π p^⌈α/2⌉, Π p^⌊α/2⌋).
pub fn star_pair(n: u64) -> Result<(u64, u64), NumError> {
    if n < 2 {
        return Err(NumError::BelowTwo(n));
    }
    let f = factorize(n)?;
    let (mut star, mut substar) = (1u64, 1u64);
    for &(p, e) in &f.factors {
        star *= p.pow(e.div_ceil(2));
        substar *= p.pow(e / 2);
    }
    Ok((star, substar))
}

pub fn n_star(n: u64) -> Result<u64, NumError> {
    star_pair(n).map(|(s, _)| s)
}

pub fn n_substar(n: u64) -> Result<u64, NumError> {
    star_pair(n).map(|(_, s)| s)
}

pub fn euler_phi(n: u64) -> Result<u64, NumError> {
    let f = factorize(n)?;
    Ok(phi_of(&f))
}

pub fn phi_of(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .fold(f.n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Multiset union of the exponent signatures of every dimension.
pub fn combined_signature(dims: &[u64]) -> Result<PrimeSignature, NumError> {
    if dims.is_empty() {
        return Err(NumError::EmptyDims);
    }
    let mut exps = Vec::new();
    for &d in dims {
        if d < 2 {
            return Err(NumError::BelowTwo(d));
        }
        exps.extend(factorize(d)?.exponents());
    }
    Ok(PrimeSignature::from_exponents(exps))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Unbounded ascending iterator over the primes.
#[derive(Debug, Clone)]
pub struct PrimeIter {
    next: u64,
}

impl PrimeIter {
    pub fn new() -> Self {
        PrimeIter { next: 2 }
    }
}

impl Default for PrimeIter {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PrimeIter {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while !is_prime(self.next) {
            self.next += 1;
        }
        let p = self.next;
        self.next += 1;
        Some(p)
    }
}
