//! Finite crystallographic root systems in simple-root coordinates.
//!
//! Cartan matrices follow the convention `a[i][j] = <alpha_i^vee, alpha_j>`
//! with Bourbaki numbering, so the simple reflection `s_i` acts on
//! `beta = sum m_j alpha_j` by `beta - (sum_j a[i][j] m_j) alpha_i`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Series letter and rank, e.g. `A5` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanLabel {
    pub series: char,
    pub rank: usize,
}

impl CartanLabel {
    pub fn new(series: char, rank: usize) -> Result<Self> {
        let series = series.to_ascii_uppercase();
        let ok = match series {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 3,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if !ok {
            return Err(Error::BadLabel(format!("{series}{rank}")));
        }
        Ok(CartanLabel { series, rank })
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars.next().ok_or_else(|| Error::BadLabel(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadLabel(s.to_string()))?;
        CartanLabel::new(series, rank).map_err(|_| Error::BadLabel(s.to_string()))
    }
}

/// A type label together with a validated Cartan matrix of finite type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    label: CartanLabel,
    matrix: Vec<Vec<i64>>,
}

impl CartanDatum {
    /// The Cartan matrix of the given type in Bourbaki numbering.
    pub fn standard(label: CartanLabel) -> Self {
        let n = label.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match label.series {
            'A' => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            'B' => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            'C' => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            'D' => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            'E' => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            'F' => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            'G' => link(0, 1, -3, -1),
            _ => unreachable!("label validated on construction"),
        }
        CartanDatum { label, matrix: a }
    }

    /// Validates `matrix` against the finite-type axioms.
    pub fn new(label: CartanLabel, matrix: Vec<Vec<i64>>) -> Result<Self> {
        validate_cartan(&matrix)?;
        if matrix.len() != label.rank {
            return Err(Error::DimensionMismatch {
                expected: label.rank,
                got: matrix.len(),
            });
        }
        Ok(CartanDatum { label, matrix })
    }

    pub fn label(&self) -> CartanLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// True when the label is `A_n` and the matrix is the standard one.
    pub fn is_type_a(&self) -> bool {
        self.label.series == 'A' && self.matrix == CartanDatum::standard(self.label).matrix
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(CartanDatum::standard(s.parse()?))
    }
}

/// Rational symmetrizer `d` with `d_i a_ij = d_j a_ji`, scaled to positive integers.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = &di * BigRational::from_integer(a[i][j].into())
                    / BigRational::from_integer(a[j][i].into());
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) if *existing != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(Option::unwrap).collect();
    let lcm = d
        .iter()
        .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    Ok(d.iter()
        .map(|x| {
            let v = x * BigRational::from_integer(lcm.clone());
            i64::try_from(v.to_integer()).expect("symmetrizer entries are small")
        })
        .collect())
}

fn determinant(m: &[Vec<i128>]) -> i128 {
    // Bareiss elimination; exact for integer input.
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn validate_cartan(a: &[Vec<i64>]) -> Result<()> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidCartan("matrix is not square".into()));
    }
    for i in 0..n {
        if a[i][i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is not 2")));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                return Err(Error::InvalidCartan(format!("off-diagonal entry ({i},{j}) is positive")));
            }
            if (a[i][j] == 0) != (a[j][i] == 0) {
                return Err(Error::InvalidCartan(format!(
                    "entries ({i},{j}) and ({j},{i}) are not simultaneously zero"
                )));
            }
            if a[i][j] * a[j][i] > 3 {
                return Err(Error::InvalidCartan(format!(
                    "product of entries ({i},{j}) and ({j},{i}) exceeds 3"
                )));
            }
        }
    }
    let d = symmetrizer(a)?;
    let gram: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| (d[i] * a[i][j]) as i128).collect())
        .collect();
    for k in 1..=n {
        let minor: Vec<Vec<i128>> = gram[..k].iter().map(|r| r[..k].to_vec()).collect();
        if determinant(&minor) <= 0 {
            return Err(Error::InvalidCartan(format!(
                "symmetrized matrix is not positive definite (leading minor of size {k})"
            )));
        }
    }
    Ok(())
}

/// A root written in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coords: Vec<i32>,
}

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Root { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Root { coords }
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    /// Support `{i : m_i != 0}`, 1-based.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Index of a root inside its [`RootSystem`]. Positive roots come first, in
/// graded-lex order; negative roots follow in the same order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootId(pub(crate) u16);

impl RootId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A rational element of the Cartan subalgebra, recorded by its pairings with
/// the simple roots: `pairings[i] = alpha_{i+1}(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Covector {
    pairings: Vec<BigRational>,
}

impl Covector {
    pub fn new(pairings: Vec<BigRational>) -> Self {
        Covector { pairings }
    }

    pub fn zero(rank: usize) -> Self {
        Covector::new(vec![BigRational::zero(); rank])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Covector::new(values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    /// `e_i` indicator: pairs to 1 with `alpha_i` and 0 with the other simple roots.
    pub fn indicator(rank: usize, i: usize) -> Self {
        let mut v = Covector::zero(rank);
        v.pairings[i - 1] = BigRational::one();
        v
    }

    pub fn rank(&self) -> usize {
        self.pairings.len()
    }

    pub fn pairings(&self) -> &[BigRational] {
        &self.pairings
    }

    pub fn is_zero(&self) -> bool {
        self.pairings.iter().all(Zero::is_zero)
    }

    /// `sum m_i c_i`.
    pub fn pair(&self, root: &Root) -> Result<BigRational> {
        self.pair_coords(root.coords())
    }

    pub fn pair_coords(&self, coords: &[i32]) -> Result<BigRational> {
        if coords.len() != self.pairings.len() {
            return Err(Error::DimensionMismatch {
                expected: self.pairings.len(),
                got: coords.len(),
            });
        }
        Ok(coords
            .iter()
            .zip(&self.pairings)
            .filter(|(m, _)| **m != 0)
            .map(|(&m, c)| c * BigRational::from_integer(m.into()))
            .sum())
    }

    pub fn neg(&self) -> Covector {
        Covector::new(self.pairings.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Covector) -> Covector {
        Covector::new(
            self.pairings
                .iter()
                .zip(&other.pairings)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Covector {
        Covector::new(self.pairings.iter().map(|c| c * s).collect())
    }

    /// Least common denominator of the pairings.
    pub fn common_denominator(&self) -> BigInt {
        self.pairings
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()))
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.pairings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The full root set of a [`CartanDatum`] with simple-reflection tables.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    roots: Vec<Root>,
    positive_count: usize,
    index: HashMap<Vec<i32>, RootId>,
    simple_ids: Vec<RootId>,
    simple_reflection: Vec<Vec<RootId>>,
    gram: Vec<Vec<i64>>,
    type_a: bool,
}

impl RootSystem {
    pub fn new(datum: CartanDatum) -> Self {
        let n = datum.rank();
        let a = datum.matrix();
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 1..=n {
            let r = Root::simple(n, i).coords;
            seen.insert(r.clone(), ());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let c: i64 = (0..n).map(|j| a[i][j] * r[j] as i64).sum();
                let mut s = r.clone();
                s[i] -= c as i32;
                if !seen.contains_key(&s) {
                    seen.insert(s.clone(), ());
                    queue.push_back(s);
                }
            }
        }
        let mut positive: Vec<Root> = seen
            .into_keys()
            .map(Root::new)
            .filter(Root::is_positive)
            .collect();
        positive.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| y.coords.cmp(&x.coords)));
        let positive_count = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let index: HashMap<Vec<i32>, RootId> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), RootId(k as u16)))
            .collect();
        let simple_ids = (1..=n).map(|i| index[&Root::simple(n, i).coords]).collect();
        let simple_reflection = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        let c: i64 = (0..n).map(|j| a[i][j] * r.coords[j] as i64).sum();
                        let mut s = r.coords.clone();
                        s[i] -= c as i32;
                        index[&s]
                    })
                    .collect()
            })
            .collect();
        let d = symmetrizer(a).expect("datum validated on construction");
        let gram = (0..n).map(|i| (0..n).map(|j| d[i] * a[i][j]).collect()).collect();
        let type_a = datum.is_type_a();
        RootSystem {
            datum,
            roots,
            positive_count,
            index,
            simple_ids,
            simple_reflection,
            gram,
            type_a,
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(RootSystem::new(label.parse()?))
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn label(&self) -> CartanLabel {
        self.datum.label()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn is_type_a(&self) -> bool {
        self.type_a
    }

    pub fn num_positive(&self) -> usize {
        self.positive_count
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Positive roots in graded-lex order (height, then coordinates descending).
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.positive_count]
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.positive_count as u16).map(RootId)
    }

    pub fn all_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len() as u16).map(RootId)
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.index()]
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id.index() < self.positive_count
    }

    pub fn negate(&self, id: RootId) -> RootId {
        let p = self.positive_count as u16;
        if id.0 < p {
            RootId(id.0 + p)
        } else {
            RootId(id.0 - p)
        }
    }

    /// Positive representative of `{id, -id}`.
    pub fn abs(&self, id: RootId) -> RootId {
        if self.is_positive(id) {
            id
        } else {
            self.negate(id)
        }
    }

    pub fn simple_id(&self, i: usize) -> RootId {
        self.simple_ids[i - 1]
    }

    pub fn id_of(&self, root: &Root) -> Result<RootId> {
        if root.coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: root.coords.len(),
            });
        }
        self.index
            .get(&root.coords)
            .copied()
            .ok_or_else(|| Error::NotARoot(root.coords.clone(), self.label().to_string()))
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.index.contains_key(&root.coords)
    }

    /// `s_i(root)` for the 1-based simple index `i`.
    pub fn simple_reflect(&self, i: usize, id: RootId) -> RootId {
        self.simple_reflection[i - 1][id.index()]
    }

    /// Symmetric invariant form in simple-root coordinates, integer scaled.
    pub fn inner(&self, x: &[i32], y: &[i32]) -> i64 {
        let n = self.rank();
        let mut acc = 0i64;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += x[i] as i64 * self.gram[i][j] * y[j] as i64;
            }
        }
        acc
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn coroot_pairing(&self, beta: RootId, alpha: RootId) -> i64 {
        let b = &self.root(beta).coords;
        let a = &self.root(alpha).coords;
        2 * self.inner(b, a) / self.inner(a, a)
    }

    pub fn reflect_id(&self, alpha: RootId, beta: RootId) -> RootId {
        let k = self.coroot_pairing(beta, alpha) as i32;
        let a = &self.root(alpha).coords;
        let s: Vec<i32> = self
            .root(beta)
            .coords
            .iter()
            .zip(a)
            .map(|(b, a)| b - k * a)
            .collect();
        self.index[&s]
    }

    /// `s_alpha(beta) = beta - <beta, alpha^vee> alpha`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        let a = self.id_of(alpha)?;
        let b = self.id_of(beta)?;
        Ok(self.root(self.reflect_id(a, b)).clone())
    }

    pub fn pair(&self, root: &Root, v: &Covector) -> Result<BigRational> {
        if v.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: v.rank(),
            });
        }
        v.pair(root)
    }

    /// In type A, `(a, b)` with `root = e_a - e_b`; `None` otherwise.
    pub fn epsilon_pair(&self, id: RootId) -> Option<(usize, usize)> {
        if !self.type_a {
            return None;
        }
        let r = self.root(id);
        let first = r.coords.iter().position(|&c| c != 0)? + 1;
        let last = r.coords.iter().rposition(|&c| c != 0)? + 1;
        if r.is_positive() {
            Some((first, last + 1))
        } else {
            Some((last + 1, first))
        }
    }

    /// Root `e_a - e_b` in type A (1-based, `a != b`).
    pub fn epsilon_root(&self, a: usize, b: usize) -> Result<RootId> {
        if !self.type_a {
            return Err(Error::RequiresTypeA(self.label().to_string()));
        }
        let n = self.rank() + 1;
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::Parse(format!("e{a}-e{b} is not a root of {}", self.label())));
        }
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let mut coords = vec![0; self.rank()];
        for c in &mut coords[lo - 1..hi - 1] {
            *c = sign;
        }
        self.id_of(&Root::new(coords))
    }

    /// `e1-e3` in type A, simple-root coordinates otherwise.
    pub fn format_root(&self, id: RootId) -> String {
        match self.epsilon_pair(id) {
            Some((a, b)) => format!("e{a}-e{b}"),
            None => self.root(id).to_string(),
        }
    }

    /// Accepts `e1-e3` (type A) or `[1,1,0,...]`.
    pub fn parse_root(&self, s: &str) -> Result<RootId> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let coords: std::result::Result<Vec<i32>, _> =
                body.split(',').map(|t| t.trim().parse::<i32>()).collect();
            let coords = coords.map_err(|_| Error::Parse(format!("bad root `{s}`")))?;
            return self.id_of(&Root::new(coords));
        }
        let bad = || Error::Parse(format!("bad root `{s}`"));
        let (l, r) = s.split_once('-').ok_or_else(bad)?;
        let a = l.trim().strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let b = r.trim().strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        self.epsilon_root(a, b)
    }

    /// True when every simple root in the support of `id` lies in `simples`.
    pub fn in_span(&self, id: RootId, simples: &[usize]) -> bool {
        self.root(id).support().all(|i| simples.contains(&i))
    }

    /// Sign of a root's coordinates as an integer (`1` or `-1`).
    pub fn sign(&self, id: RootId) -> i32 {
        if self.is_positive(id) {
            1
        } else {
            -1
        }
    }

    pub fn highest_root(&self) -> RootId {
        RootId(self.positive_count as u16 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn a2_positive_roots() {
        let r = rs("A2");
        let got: Vec<Vec<i32>> = r.positive_roots().iter().map(|x| x.coords.clone()).collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn b2_positive_roots() {
        let r = rs("B2");
        let got: Vec<Vec<i32>> = r.positive_roots().iter().map(|x| x.coords.clone()).collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn positive_root_counts() {
        for (label, count) in [
            ("A1", 1),
            ("A5", 15),
            ("B3", 9),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            assert_eq!(rs(label).num_positive(), count, "{label}");
        }
    }

    #[test]
    fn rejects_bad_matrices() {
        let label = CartanLabel::new('A', 2).unwrap();
        let cases: Vec<(Vec<Vec<i64>>, &str)> = vec![
            (vec![vec![2, -1], vec![-1, 3]], "diagonal"),
            (vec![vec![2, 1], vec![1, 2]], "positive"),
            (vec![vec![2, 0], vec![-1, 2]], "simultaneously zero"),
            (vec![vec![2, -2], vec![-2, 2]], "exceeds 3"),
            (vec![vec![2, -2], vec![-2, 2, 0]], "square"),
        ];
        for (m, needle) in cases {
            let err = CartanDatum::new(label, m).unwrap_err();
            assert!(err.to_string().contains(needle), "{err} should mention {needle}");
        }
        // affine A2: symmetrizable but only positive semidefinite
        let affine = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        let err = CartanDatum::new(CartanLabel::new('A', 3).unwrap(), affine).unwrap_err();
        assert!(err.to_string().contains("positive definite"));
        // non-symmetrizable cycle
        let bad = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        let err = CartanDatum::new(CartanLabel::new('A', 3).unwrap(), bad).unwrap_err();
        assert!(err.to_string().contains("symmetrizable"));
    }

    #[test]
    fn reflections() {
        let r = rs("A2");
        let a1 = Root::new(vec![1, 0]);
        let a2 = Root::new(vec![0, 1]);
        assert_eq!(r.reflect(&a1, &a2).unwrap(), Root::new(vec![1, 1]));
        for alpha in r.positive_roots() {
            assert_eq!(r.reflect(alpha, alpha).unwrap(), alpha.neg());
        }
        // s_{e1-e4}(e4-e6) = e1-e6 in A5
        let a5 = rs("A5");
        let alpha = a5.parse_root("e1-e4").unwrap();
        let beta = a5.parse_root("e4-e6").unwrap();
        assert_eq!(a5.format_root(a5.reflect_id(alpha, beta)), "e1-e6");
        assert!(r.reflect(&Root::new(vec![2, 0]), &a1).is_err());
    }

    #[test]
    fn pairing() {
        let v = Covector::indicator(3, 2);
        assert_eq!(v.pair(&Root::simple(3, 2)).unwrap(), BigRational::one());
        let c = Covector::from_ints(&[0, -1, 0]);
        assert_eq!(c.pair(&Root::new(vec![1, 1, 0])).unwrap(), BigRational::from_integer((-1).into()));
        let a5 = rs("A5");
        let cert = Covector::from_ints(&[0, -1, 0, -1, 0]);
        let e13 = a5.parse_root("e1-e3").unwrap();
        assert_eq!(a5.pair(a5.root(e13), &cert).unwrap(), BigRational::from_integer((-1).into()));
        assert!(c.pair(&Root::new(vec![1, 1])).is_err());
    }

    #[test]
    fn epsilon_notation_roundtrip() {
        let r = rs("A5");
        for id in r.all_ids() {
            let s = r.format_root(id);
            assert_eq!(r.parse_root(&s).unwrap(), id, "{s}");
        }
        assert_eq!(r.format_root(r.simple_id(1)), "e1-e2");
        assert_eq!(r.parse_root("[1,1,0,0,0]").unwrap(), r.parse_root("e1-e3").unwrap());
        let b = rs("B2");
        assert_eq!(b.format_root(b.highest_root()), "[1,2]");
    }

    #[test]
    fn labels() {
        assert!("A0".parse::<CartanLabel>().is_err());
        assert!("E9".parse::<CartanLabel>().is_err());
        assert!("X3".parse::<CartanLabel>().is_err());
        assert_eq!("b3".parse::<CartanLabel>().unwrap().to_string(), "B3");
    }
}
