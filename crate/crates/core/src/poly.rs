//! Exact polynomial containers: equivariant Chow and K-theory classes,
//! univariate rational polynomials, and integer Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rootsys::Covector;

/// Integer polynomial in the simple-root variables `alpha_1..alpha_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChowClass {
    rank: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl ChowClass {
    pub fn zero(rank: usize) -> Self {
        ChowClass {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        let mut c = ChowClass::zero(rank);
        c.terms.insert(vec![0; rank], BigInt::one());
        c
    }

    /// The linear form `sum m_i alpha_i`.
    pub fn linear(coords: &[i32]) -> Self {
        let rank = coords.len();
        let mut c = ChowClass::zero(rank);
        for (i, &m) in coords.iter().enumerate() {
            if m != 0 {
                let mut e = vec![0; rank];
                e[i] = 1;
                c.terms.insert(e, BigInt::from(m));
            }
        }
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &ChowClass) {
        for (e, c) in &other.terms {
            add_term(&mut self.terms, e.clone(), c.clone());
        }
    }

    pub fn mul(&self, other: &ChowClass) -> ChowClass {
        let mut out = ChowClass::zero(self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                add_term(&mut out.terms, e, ca * cb);
            }
        }
        out
    }

    /// Total degrees that occur, sorted.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Substitute `alpha_i -> c_i`.
    pub fn evaluate(&self, v: &Covector) -> BigRational {
        let vals = v.pairings();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut acc = BigRational::from_integer(c.clone());
                for (x, &k) in vals.iter().zip(e) {
                    if k > 0 {
                        acc *= num_traits::pow(x.clone(), k as usize);
                    }
                }
                acc
            })
            .sum()
    }

    /// Substitute `alpha_i -> a_i + eps b_i`, giving a polynomial in `eps`.
    pub fn evaluate_line(&self, a: &[BigRational], b: &[BigRational]) -> QPoly {
        let mut powers: Vec<Vec<QPoly>> = Vec::with_capacity(self.rank);
        let max_exp = |i: usize| self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        for i in 0..self.rank {
            let lin = QPoly::new(vec![a[i].clone(), b[i].clone()]);
            let mut p = vec![QPoly::one()];
            for k in 1..=max_exp(i) as usize {
                let next = p[k - 1].mul(&lin);
                p.push(next);
            }
            powers.push(p);
        }
        let mut out = QPoly::zero();
        for (e, c) in &self.terms {
            let mut term = QPoly::constant(BigRational::from_integer(c.clone()));
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&powers[i][k as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            write_signed(f, c, first, e.iter().all(|&k| k == 0))?;
            let mut mono = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => mono.push(format!("a{}", i + 1)),
                    _ => mono.push(format!("a{}^{}", i + 1, k)),
                }
            }
            write!(f, "{}", mono.join("*"))?;
            first = false;
        }
        Ok(())
    }
}

fn write_signed(f: &mut fmt::Formatter<'_>, c: &BigInt, first: bool, constant: bool) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if constant || !mag.is_one() {
        write!(f, "{mag}")?;
        if !constant {
            write!(f, "*")?;
        }
    }
    Ok(())
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, BigInt>, k: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Element of the integer group ring of the root lattice: `sum c_lambda e^lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KClass {
    rank: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl KClass {
    pub fn zero(rank: usize) -> Self {
        KClass {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        KClass::monomial(&vec![0; rank])
    }

    /// `e^lambda`.
    pub fn monomial(lambda: &[i32]) -> Self {
        let mut k = KClass::zero(lambda.len());
        k.terms.insert(lambda.to_vec(), BigInt::one());
        k
    }

    /// `e^{-lambda} - 1`.
    pub fn exp_neg_minus_one(lambda: &[i32]) -> Self {
        let neg: Vec<i32> = lambda.iter().map(|c| -c).collect();
        let mut k = KClass::monomial(&neg);
        add_term(&mut k.terms, vec![0; lambda.len()], -BigInt::one());
        k
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &KClass) {
        for (e, c) in &other.terms {
            add_term(&mut self.terms, e.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> KClass {
        KClass {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &KClass) -> KClass {
        let mut out = KClass::zero(self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                add_term(&mut out.terms, e, ca * cb);
            }
        }
        out
    }

    /// Degree-`d` component of the image under `e^lambda -> exp(lambda)`,
    /// i.e. `sum c_lambda lambda^d / d!` with rational coefficients.
    pub fn degree_part(&self, d: u32) -> BTreeMap<Vec<u32>, BigRational> {
        let mut out: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
        for (lambda, c) in &self.terms {
            // expand (sum lambda_i a_i)^d by repeated multiplication
            let mut p: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            p.insert(vec![0; self.rank], BigInt::one());
            for _ in 0..d {
                let mut next = BTreeMap::new();
                for (e, k) in &p {
                    for (i, &l) in lambda.iter().enumerate() {
                        if l != 0 {
                            let mut e2 = e.clone();
                            e2[i] += 1;
                            add_term(&mut next, e2, k * BigInt::from(l));
                        }
                    }
                }
                p = next;
            }
            for (e, k) in p {
                let q = BigRational::new(k * c, fact.clone());
                let entry = out.entry(e).or_insert_with(BigRational::zero);
                *entry += q;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let constant = e.iter().all(|&k| k == 0);
            write_signed(f, c, first, constant)?;
            if !constant {
                let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
                write!(f, "e^[{}]", parts.join(","))?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Dense univariate polynomial with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        QPoly::new(c.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        QPoly::new(c.iter().map(|v| BigRational::from_integer(v.clone())).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        QPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn pow(&self, k: usize) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] / &lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (QPoly::new(q), QPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.coeffs.last() {
            Some(l) => a.scale(&(BigRational::one() / l)),
            None => a,
        }
    }

    /// Integer coefficients, if all coefficients are integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Compose with `var -> var^k`.
    pub fn inflate(&self, k: usize) -> QPoly {
        let mut out = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        QPoly::new(out)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 || !mag.is_one() {
                s.push_str(&mag.to_string());
                if k > 0 {
                    s.push('*');
                }
            }
            s.push_str(&mono);
        }
        s
    }
}

/// Integer Laurent polynomial in one variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(k: i64, c: BigInt) -> Self {
        let mut p = LaurentPoly::zero();
        add_term(&mut p.terms, k, c);
        p
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        add_term(&mut self.terms, k, c);
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// `(p, s)` with `self = u^s * p(u)` and `p(0) != 0`.
    pub fn to_shifted_poly(&self) -> (QPoly, i64) {
        let Some(lo) = self.min_exp() else {
            return (QPoly::zero(), 0);
        };
        let hi = *self.terms.keys().last().unwrap();
        let mut c = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (k, v) in &self.terms {
            c[(k - lo) as usize] = BigRational::from_integer(v.clone());
        }
        (QPoly::new(c), lo)
    }
}

/// Integer Laurent polynomial in `(u, s)`; used to track a one-parameter
/// perturbation through the substitution `s = 1 + eps`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        BiLaurent::default()
    }

    pub fn one() -> Self {
        BiLaurent::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(a: i64, b: i64, c: BigInt) -> Self {
        let mut p = BiLaurent::zero();
        add_term(&mut p.terms, (a, b), c);
        p
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &BiLaurent) {
        for (k, c) in &other.terms {
            add_term(&mut self.terms, *k, c.clone());
        }
    }

    pub fn mul(&self, other: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                add_term(&mut out.terms, (a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> BiLaurent {
        let mut acc = BiLaurent::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coefficient of `eps^k` after `s = 1 + eps`:
    /// `sum c binom(b, k) u^a` with the generalized binomial.
    pub fn taylor_at_s1(&self, k: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            let bin = generalized_binomial(b, k);
            if !bin.is_zero() {
                out.add_term(a, c * bin);
            }
        }
        out
    }

    /// Lowest `k` with a nonzero `eps^k` coefficient, searched up to `limit`.
    pub fn order_at_s1(&self, limit: usize) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        (0..=limit).find(|&k| !self.taylor_at_s1(k).is_zero())
    }
}

/// `binom(b, k) = b (b-1) ... (b-k+1) / k!` for any integer `b`.
pub fn generalized_binomial(b: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(b - i);
        den *= BigInt::from(i + 1);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `binom(n, k)` with the convention that it vanishes outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    generalized_binomial(n, k as usize)
}
