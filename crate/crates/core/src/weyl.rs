//! Weyl group arithmetic on root permutations.
//!
//! An element is stored as the permutation it induces on the root set of its
//! [`RootSystem`], which makes products, inverses and sign tests constant work
//! per root. The canonical reduced word is derived lazily.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootId, RootSystem};

struct GroupData {
    rs: RootSystem,
    simple: Vec<Vec<u16>>,
    reflections: Vec<Vec<u16>>,
}

/// Handle to the Weyl group of a root system. Cheap to clone.
#[derive(Clone)]
pub struct WeylGroup(Arc<GroupData>);

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylGroup({})", self.0.rs.label())
    }
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Self {
        let n = rs.rank();
        let simple = (1..=n)
            .map(|i| rs.all_ids().map(|r| rs.simple_reflect(i, r).0).collect())
            .collect();
        let reflections = rs
            .positive_ids()
            .map(|b| rs.all_ids().map(|r| rs.reflect_id(b, r).0).collect())
            .collect();
        WeylGroup(Arc::new(GroupData {
            rs,
            simple,
            reflections,
        }))
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(WeylGroup::new(RootSystem::from_label(label)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.0.rs
    }

    pub fn rank(&self) -> usize {
        self.0.rs.rank()
    }

    pub fn is_type_a(&self) -> bool {
        self.0.rs.is_type_a()
    }

    pub fn same_group(&self, other: &WeylGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.rs.datum() == other.0.rs.datum()
    }

    fn element_from_perm(&self, perm: Vec<u16>) -> WeylElement {
        let p = self.0.rs.num_positive() as u16;
        let length = perm[..p as usize].iter().filter(|&&r| r >= p).count();
        WeylElement {
            group: self.clone(),
            perm,
            length,
            word: OnceLock::new(),
        }
    }

    pub fn identity(&self) -> WeylElement {
        self.element_from_perm((0..self.0.rs.num_roots() as u16).collect())
    }

    fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn simple(&self, i: usize) -> Result<WeylElement> {
        self.check_letter(i)?;
        Ok(self.element_from_perm(self.0.simple[i - 1].clone()))
    }

    /// Group product `s_{i_1} s_{i_2} ... s_{i_l}`; the word need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut x = self.identity();
        for &i in word {
            self.check_letter(i)?;
            x = x.mul_simple_right(i);
        }
        Ok(x)
    }

    /// Like [`from_word`](Self::from_word) but rejects words that are not reduced.
    pub fn from_reduced_word(&self, word: &[usize]) -> Result<WeylElement> {
        let x = self.from_word(word)?;
        if x.length() != word.len() {
            return Err(Error::NotReduced(word.to_vec()));
        }
        Ok(x)
    }

    /// 0-Hecke (Demazure) product of the letters.
    pub fn hecke_product(&self, word: &[usize]) -> Result<WeylElement> {
        let mut x = self.identity();
        for &i in word {
            self.check_letter(i)?;
            x = x.hecke_mul_simple(i);
        }
        Ok(x)
    }

    /// Type A element whose action is `e_i -> e_{w(i)}`.
    pub fn from_one_line(&self, one_line: &[usize]) -> Result<WeylElement> {
        let rs = &self.0.rs;
        if !rs.is_type_a() {
            return Err(Error::RequiresTypeA(rs.label().to_string()));
        }
        let n = rs.rank() + 1;
        let mut seen = vec![false; n + 1];
        let valid = one_line.len() == n
            && one_line.iter().all(|&v| {
                let fresh = (1..=n).contains(&v) && !seen[v];
                if fresh {
                    seen[v] = true;
                }
                fresh
            });
        if !valid {
            return Err(Error::NotAPermutation {
                n,
                values: one_line.to_vec(),
            });
        }
        let perm = rs
            .all_ids()
            .map(|r| {
                let (a, b) = rs.epsilon_pair(r).expect("type A");
                rs.epsilon_root(one_line[a - 1], one_line[b - 1])
                    .expect("image of a root is a root")
                    .0
            })
            .collect();
        Ok(self.element_from_perm(perm))
    }

    /// `s_beta` for a positive or negative root.
    pub fn reflection(&self, beta: RootId) -> WeylElement {
        let b = self.0.rs.abs(beta);
        self.element_from_perm(self.0.reflections[b.index()].clone())
    }

    pub fn longest(&self) -> WeylElement {
        let mut x = self.identity();
        'outer: loop {
            for i in 1..=self.rank() {
                if !x.has_right_descent(i) {
                    x = x.mul_simple_right(i);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// All elements, sorted by length and then by canonical word.
    pub fn elements(&self) -> Vec<WeylElement> {
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        let id = self.identity();
        seen.insert(id.perm.clone());
        let mut level = vec![id];
        let mut out = Vec::new();
        while !level.is_empty() {
            let mut next = Vec::new();
            for x in &level {
                for i in 1..=self.rank() {
                    if !x.has_right_descent(i) {
                        let y = x.mul_simple_right(i);
                        if seen.insert(y.perm.clone()) {
                            next.push(y);
                        }
                    }
                }
            }
            level.sort_by(|a, b| a.word().cmp(b.word()));
            out.append(&mut level);
            level = next;
        }
        out
    }

    /// Parse `"5 6 3 4 1 2"` (type A one-line), a word `"2 1 3"`, or `"e"`.
    ///
    /// In type A the two forms cannot collide: a permutation of `1..=n+1`
    /// contains `n+1`, which is not a generator index.
    pub fn parse_element(&self, s: &str) -> Result<WeylElement> {
        let cleaned: String = s
            .chars()
            .map(|c| if matches!(c, ',' | '(' | ')' | '[' | ']') { ' ' } else { c })
            .collect();
        let trimmed = cleaned.trim();
        if trimmed.is_empty() || trimmed == "e" || trimmed == "id" {
            return Ok(self.identity());
        }
        let tokens: std::result::Result<Vec<usize>, _> =
            trimmed.split_whitespace().map(str::parse::<usize>).collect();
        let tokens = tokens.map_err(|_| Error::Parse(format!("bad element `{s}`")))?;
        let n = self.rank() + 1;
        if self.is_type_a() && tokens.len() == n && tokens.contains(&n) {
            return self.from_one_line(&tokens);
        }
        self.from_word(&tokens)
    }
}

/// An element of a Weyl group.
#[derive(Clone)]
pub struct WeylElement {
    group: WeylGroup,
    perm: Vec<u16>,
    length: usize,
    word: OnceLock<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm && self.group.same_group(&other.group)
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({self})")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(w) = self.to_one_line() {
            let parts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(","))
        } else if self.length == 0 {
            write!(f, "e")
        } else {
            let parts: Vec<String> = self.word().iter().map(|v| v.to_string()).collect();
            write!(f, "s[{}]", parts.join(" "))
        }
    }
}

impl WeylElement {
    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    fn rs(&self) -> &RootSystem {
        &self.group.0.rs
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Lexicographically least reduced word.
    pub fn word(&self) -> &[usize] {
        self.word.get_or_init(|| {
            // Peel the smallest left descent repeatedly; tracked on the inverse,
            // where left descents of x are right descents of x^-1.
            let mut y = self.inverse();
            let mut word = Vec::with_capacity(self.length);
            while !y.is_identity() {
                let i = (1..=self.group.rank())
                    .find(|&i| y.has_right_descent(i))
                    .expect("nonidentity element has a descent");
                word.push(i);
                y = y.mul_simple_right(i);
            }
            word
        })
    }

    pub fn apply(&self, r: RootId) -> RootId {
        RootId(self.perm[r.index()])
    }

    pub fn apply_root(&self, root: &Root) -> Result<Root> {
        let id = self.rs().id_of(root)?;
        Ok(self.rs().root(self.apply(id)).clone())
    }

    /// `x(alpha_i) < 0`, i.e. `l(x s_i) < l(x)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let rs = self.rs();
        !rs.is_positive(self.apply(rs.simple_id(i)))
    }

    /// `x^{-1}(alpha_i) < 0`, i.e. `l(s_i x) < l(x)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.group.rank()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..=self.group.rank()).filter(|&i| inv.has_right_descent(i)).collect()
    }

    pub fn mul_simple_right(&self, i: usize) -> WeylElement {
        let s = &self.group.0.simple[i - 1];
        self.group
            .element_from_perm(s.iter().map(|&r| self.perm[r as usize]).collect())
    }

    pub fn mul_simple_left(&self, i: usize) -> WeylElement {
        let s = &self.group.0.simple[i - 1];
        self.group
            .element_from_perm(self.perm.iter().map(|&r| s[r as usize]).collect())
    }

    /// Right Demazure step: `x s_i` if that is longer, else `x`.
    pub fn hecke_mul_simple(&self, i: usize) -> WeylElement {
        if self.has_right_descent(i) {
            self.clone()
        } else {
            self.mul_simple_right(i)
        }
    }

    /// `x s_beta`.
    pub fn mul_reflection(&self, beta: RootId) -> WeylElement {
        let b = self.rs().abs(beta);
        let s = &self.group.0.reflections[b.index()];
        self.group
            .element_from_perm(s.iter().map(|&r| self.perm[r as usize]).collect())
    }

    fn check_same(&self, other: &WeylElement) -> Result<()> {
        if !self.group.same_group(&other.group) {
            return Err(Error::MixedGroups {
                left: self.rs().label().to_string(),
                right: other.rs().label().to_string(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_same(other)?;
        Ok(self
            .group
            .element_from_perm(other.perm.iter().map(|&r| self.perm[r as usize]).collect()))
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (r, &img) in self.perm.iter().enumerate() {
            inv[img as usize] = r as u16;
        }
        self.group.element_from_perm(inv)
    }

    /// `I(x) = {alpha > 0 : x(alpha) < 0}` in root order.
    pub fn inversion_set(&self) -> Vec<RootId> {
        let rs = self.rs();
        rs.positive_ids()
            .filter(|&r| !rs.is_positive(self.apply(r)))
            .collect()
    }

    /// One-line notation `(x(1), ..., x(n+1))` in type A.
    pub fn to_one_line(&self) -> Option<Vec<usize>> {
        let rs = self.rs();
        if !rs.is_type_a() {
            return None;
        }
        // x(e_i - e_{n+1}) = e_{x(i)} - e_{x(n+1)}; the common second index is
        // x(n+1), and it is the element missing from the first indices.
        let n = rs.rank() + 1;
        let mut out = vec![0usize; n];
        let mut used = vec![false; n + 1];
        for (i, slot) in out.iter_mut().enumerate().take(n - 1) {
            let r = rs.epsilon_root(i + 1, n).expect("type A root");
            let (a, _) = rs.epsilon_pair(self.apply(r)).expect("type A root");
            *slot = a;
            used[a] = true;
        }
        out[n - 1] = (1..=n).find(|&v| !used[v]).expect("permutation");
        Some(out)
    }

    /// Bruhat comparison `self <= w` via the lifting property along the
    /// canonical word of `w`.
    pub fn bruhat_leq(&self, w: &WeylElement) -> Result<bool> {
        self.check_same(w)?;
        if self.length > w.length {
            return Ok(false);
        }
        let mut x = self.clone();
        let mut w = w.clone();
        for &s in w.word().to_vec().iter().rev() {
            if x.has_right_descent(s) {
                x = x.mul_simple_right(s);
            }
            w = w.mul_simple_right(s);
            if x.length > w.length {
                return Ok(false);
            }
        }
        Ok(x.is_identity())
    }

    /// Type A tableau criterion: for every k the sorted prefix of length k of
    /// `self` is dominated entrywise by that of `w`.
    pub fn bruhat_leq_one_line(&self, w: &WeylElement) -> Result<bool> {
        self.check_same(w)?;
        let (Some(a), Some(b)) = (self.to_one_line(), w.to_one_line()) else {
            return Err(Error::RequiresTypeA(self.rs().label().to_string()));
        };
        for k in 1..a.len() {
            let mut pa = a[..k].to_vec();
            let mut pb = b[..k].to_vec();
            pa.sort_unstable();
            pb.sort_unstable();
            if pa.iter().zip(&pb).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal or maximal representative of the left coset `x W_J`.
    pub fn coset_rep(&self, j: &ParabolicSubset, side: Side) -> WeylElement {
        let want_descent = side == Side::Min;
        let mut x = self.clone();
        'outer: loop {
            for &i in j.simples() {
                if x.has_right_descent(i) == want_descent {
                    x = x.mul_simple_right(i);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    pub fn is_min_in_coset(&self, j: &ParabolicSubset) -> bool {
        j.simples().iter().all(|&i| !self.has_right_descent(i))
    }

    /// Lazy lexicographic enumeration of all reduced words.
    pub fn reduced_words(&self) -> ReducedWords {
        ReducedWords {
            stack: vec![(self.inverse(), 1)],
            prefix: Vec::new(),
            rank: self.group.rank(),
            started: false,
        }
    }

    pub fn reduced_word_count(&self) -> BigUint {
        let mut memo: HashMap<Vec<u16>, BigUint> = HashMap::new();
        count_words(&self.inverse(), &mut memo)
    }

    /// Stable textual key: type label plus canonical word.
    pub fn key(&self) -> String {
        let w: Vec<String> = self.word().iter().map(|v| v.to_string()).collect();
        format!("{}:{}", self.rs().label(), w.join(" "))
    }
}

fn count_words(y: &WeylElement, memo: &mut HashMap<Vec<u16>, BigUint>) -> BigUint {
    // `y` is the inverse of the element whose words are counted.
    if y.is_identity() {
        return BigUint::one();
    }
    if let Some(c) = memo.get(&y.perm) {
        return c.clone();
    }
    let mut total = BigUint::zero();
    for i in 1..=y.group.rank() {
        if y.has_right_descent(i) {
            total += count_words(&y.mul_simple_right(i), memo);
        }
    }
    memo.insert(y.perm.clone(), total.clone());
    total
}

/// Iterator returned by [`WeylElement::reduced_words`].
pub struct ReducedWords {
    // Frames hold inverses so that left descents become right-descent tests.
    stack: Vec<(WeylElement, usize)>,
    prefix: Vec<usize>,
    rank: usize,
    started: bool,
}

impl Iterator for ReducedWords {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            if let Some((y, _)) = self.stack.last() {
                if y.is_identity() {
                    self.stack.clear();
                    return Some(Vec::new());
                }
            }
        }
        loop {
            let (y, next) = self.stack.last_mut()?;
            let found = (*next..=self.rank).find(|&i| y.has_right_descent(i));
            match found {
                None => {
                    self.stack.pop();
                    self.prefix.pop();
                }
                Some(i) => {
                    *next = i + 1;
                    let child = y.mul_simple_right(i);
                    self.prefix.push(i);
                    if child.is_identity() {
                        let word = self.prefix.clone();
                        self.prefix.pop();
                        return Some(word);
                    }
                    self.stack.push((child, 1));
                }
            }
        }
    }
}

/// Subset of simple-root indices defining `W_J` and the standard parabolic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParabolicSubset {
    simples: Vec<usize>,
}

impl ParabolicSubset {
    pub fn new(rank: usize, simples: &[usize]) -> Result<Self> {
        let mut s = simples.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&bad) = s.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::GeneratorOutOfRange { index: bad, rank });
        }
        Ok(ParabolicSubset { simples: s })
    }

    pub fn empty() -> Self {
        ParabolicSubset { simples: Vec::new() }
    }

    pub fn full(rank: usize) -> Self {
        ParabolicSubset {
            simples: (1..=rank).collect(),
        }
    }

    pub fn simples(&self) -> &[usize] {
        &self.simples
    }

    pub fn contains(&self, i: usize) -> bool {
        self.simples.binary_search(&i).is_ok()
    }

    /// Whether a root lies in the Levi root subsystem `Phi_L`.
    pub fn in_levi(&self, rs: &RootSystem, r: RootId) -> bool {
        rs.in_span(r, &self.simples)
    }

    /// All elements of `W_J`, in length-then-word order.
    pub fn elements(&self, group: &WeylGroup) -> Vec<WeylElement> {
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        let id = group.identity();
        seen.insert(id.perm.clone());
        let mut queue = VecDeque::from([id]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for &i in &self.simples {
                let y = x.mul_simple_right(i);
                if seen.insert(y.perm.clone()) {
                    queue.push_back(y);
                }
            }
            out.push(x);
        }
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word().cmp(b.word())));
        out
    }

    /// The left coset `x W_J`.
    pub fn coset(&self, x: &WeylElement) -> Vec<WeylElement> {
        self.elements(x.group())
            .iter()
            .map(|u| x.mul(u).expect("same group"))
            .collect()
    }
}

/// Which end of a coset to pick.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Min,
    Max,
}

const CACHE_FORMAT: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: u32,
    tool_version: String,
    entries: Vec<(String, Vec<Vec<usize>>)>,
}

#[derive(Default)]
struct CacheState {
    map: HashMap<String, Arc<Vec<Vec<usize>>>>,
    order: VecDeque<String>,
    stored_words: usize,
    hits: u64,
    misses: u64,
}

/// Bounded, thread-safe memo of full reduced-word lists keyed by element.
///
/// Eviction is first-in first-out by total stored words. The on-disk form is
/// tagged with a format number and the tool version; a mismatch on load
/// yields an empty cache.
pub struct ReducedWordCache {
    state: Mutex<CacheState>,
    capacity_words: usize,
    tool_version: String,
}

impl ReducedWordCache {
    pub fn new(capacity_words: usize, tool_version: &str) -> Self {
        ReducedWordCache {
            state: Mutex::new(CacheState::default()),
            capacity_words,
            tool_version: tool_version.to_string(),
        }
    }

    /// All reduced words of `w` in lexicographic order, memoized.
    pub fn reduced_words(&self, w: &WeylElement) -> Arc<Vec<Vec<usize>>> {
        let key = w.key();
        {
            let mut st = self.state.lock().expect("cache lock");
            if let Some(v) = st.map.get(&key).cloned() {
                st.hits += 1;
                return v;
            }
            st.misses += 1;
        }
        let words: Arc<Vec<Vec<usize>>> = Arc::new(w.reduced_words().collect());
        self.insert(key, words.clone());
        words
    }

    fn insert(&self, key: String, words: Arc<Vec<Vec<usize>>>) {
        if words.len() > self.capacity_words {
            return;
        }
        let mut st = self.state.lock().expect("cache lock");
        if st.map.contains_key(&key) {
            return;
        }
        while st.stored_words + words.len() > self.capacity_words {
            let Some(old) = st.order.pop_front() else { break };
            if let Some(v) = st.map.remove(&old) {
                st.stored_words -= v.len();
            }
        }
        st.stored_words += words.len();
        st.order.push_back(key.clone());
        st.map.insert(key, words);
    }

    pub fn len(&self) -> usize {
        self.state.lock().expect("cache lock").map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(hits, misses)` since construction or load.
    pub fn stats(&self) -> (u64, u64) {
        let st = self.state.lock().expect("cache lock");
        (st.hits, st.misses)
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let st = self.state.lock().expect("cache lock");
        let file = CacheFile {
            format: CACHE_FORMAT,
            tool_version: self.tool_version.clone(),
            entries: st
                .order
                .iter()
                .map(|k| (k.clone(), st.map[k].as_ref().clone()))
                .collect(),
        };
        let text = serde_json::to_string(&file).map_err(std::io::Error::other)?;
        std::fs::write(path, text)
    }

    /// Missing, unreadable, or stale files yield an empty cache.
    pub fn load(path: &Path, capacity_words: usize, tool_version: &str) -> Self {
        let cache = ReducedWordCache::new(capacity_words, tool_version);
        let Ok(text) = std::fs::read_to_string(path) else {
            return cache;
        };
        let Ok(file) = serde_json::from_str::<CacheFile>(&text) else {
            return cache;
        };
        if file.format != CACHE_FORMAT || file.tool_version != tool_version {
            return cache;
        }
        for (k, v) in file.entries {
            cache.insert(k, Arc::new(v));
        }
        cache
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> WeylGroup {
        WeylGroup::from_label(&format!("A{n}")).unwrap()
    }

    #[test]
    fn braid_relation() {
        let g = a(2);
        assert_eq!(g.from_word(&[1, 2, 1]).unwrap(), g.from_word(&[2, 1, 2]).unwrap());
        assert_eq!(g.from_word(&[2, 1, 2]).unwrap().word(), &[1, 2, 1]);
        assert!(g.from_word(&[]).unwrap().is_identity());
        assert!(g.from_word(&[1, 1]).unwrap().is_identity());
        assert!(g.from_word(&[3]).is_err());
    }

    #[test]
    fn one_line_examples() {
        let g = a(5);
        let x = g.from_word(&[4, 3, 2, 1, 5, 4, 3, 2, 4, 3, 5, 4]).unwrap();
        assert_eq!(x.to_one_line().unwrap(), vec![5, 6, 3, 4, 1, 2]);
        assert_eq!(x.length(), 12);
        let w = g.from_one_line(&[3, 4, 1, 6, 2, 5]).unwrap();
        assert_eq!(w.length(), 6);
        assert_eq!(g.from_word(&[2, 1, 3, 2, 5, 4]).unwrap(), w);
        assert!(g.from_one_line(&[1, 2, 3, 4, 5, 6]).unwrap().is_identity());
        assert!(matches!(
            g.from_one_line(&[1, 1, 3, 4, 5, 6]),
            Err(Error::NotAPermutation { .. })
        ));
        let b = WeylGroup::from_label("B2").unwrap();
        assert!(matches!(b.from_one_line(&[1, 2]), Err(Error::RequiresTypeA(_))));
    }

    #[test]
    fn one_line_roundtrip_a3() {
        let g = a(3);
        for x in g.elements() {
            let ol = x.to_one_line().unwrap();
            assert_eq!(g.from_one_line(&ol).unwrap(), x);
            let inv: usize = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| ol[i] > ol[j])
                .count();
            assert_eq!(inv, x.length());
        }
    }

    #[test]
    fn inversion_sets() {
        let g = a(5);
        assert!(g.identity().inversion_set().is_empty());
        let s3 = g.simple(3).unwrap();
        assert_eq!(s3.inversion_set(), vec![g.root_system().simple_id(3)]);
        assert_eq!(g.longest().inversion_set().len(), 15);
    }

    #[test]
    fn bruhat_examples() {
        let g = a(5);
        let w = g.from_one_line(&[3, 4, 1, 6, 2, 5]).unwrap();
        let x = g.from_one_line(&[5, 6, 3, 4, 1, 2]).unwrap();
        assert!(w.bruhat_leq(&x).unwrap());
        assert!(!x.bruhat_leq(&w).unwrap());
        assert!(w.bruhat_leq_one_line(&x).unwrap());
        assert!(g.identity().bruhat_leq(&w).unwrap());
        let b = WeylGroup::from_label("B2").unwrap();
        assert!(matches!(
            b.identity().bruhat_leq(&w),
            Err(Error::MixedGroups { .. })
        ));
    }

    #[test]
    fn reduced_word_enumeration() {
        let g = a(2);
        let words: Vec<_> = g.longest().reduced_words().collect();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        let id: Vec<_> = g.identity().reduced_words().collect();
        assert_eq!(id, vec![Vec::<usize>::new()]);
        let w3 = a(3).longest();
        assert_eq!(w3.reduced_words().count(), 16);
        assert_eq!(w3.reduced_word_count(), BigUint::from(16u32));
        assert_eq!(a(5).longest().reduced_word_count(), BigUint::from(292864u32));
    }

    #[test]
    fn hecke_and_coset() {
        let g = a(5);
        assert_eq!(g.hecke_product(&[2, 2]).unwrap(), g.simple(2).unwrap());
        let got = g.hecke_product(&[3, 2, 1, 5, 3, 2, 5, 4]).unwrap();
        assert_eq!(got.to_one_line().unwrap(), vec![4, 3, 1, 6, 2, 5]);
        let j = ParabolicSubset::new(5, &[1, 3, 5]).unwrap();
        let x = g.from_one_line(&[5, 6, 3, 4, 1, 2]).unwrap();
        assert_eq!(x.coset_rep(&j, Side::Min), x);
        assert_eq!(g.longest().coset_rep(&j, Side::Min), x);
        assert_eq!(x.coset_rep(&j, Side::Max), g.longest());
        assert!(g.simple(3).unwrap().coset_rep(&j, Side::Min).is_identity());
        assert_eq!(j.coset(&x).len(), 8);
    }

    #[test]
    fn parse_forms() {
        let g = a(5);
        let x = g.parse_element("5 6 3 4 1 2").unwrap();
        assert_eq!(x, g.parse_element("4 3 2 1 5 4 3 2 4 3 5 4").unwrap());
        assert_eq!(x, g.parse_element("(5,6,3,4,1,2)").unwrap());
        assert!(g.parse_element("e").unwrap().is_identity());
        assert!(g.parse_element("x y").is_err());
    }

    #[test]
    fn cache_roundtrip() {
        let g = a(3);
        let cache = ReducedWordCache::new(1000, "t1");
        let w0 = g.longest();
        assert_eq!(cache.reduced_words(&w0).len(), 16);
        assert_eq!(cache.reduced_words(&w0).len(), 16);
        assert_eq!(cache.stats(), (1, 1));
        let dir = std::env::temp_dir().join(format!("schubloc-cache-{}", std::process::id()));
        cache.save(&dir).unwrap();
        let loaded = ReducedWordCache::load(&dir, 1000, "t1");
        assert_eq!(loaded.len(), 1);
        let stale = ReducedWordCache::load(&dir, 1000, "t2");
        assert!(stale.is_empty());
        std::fs::remove_file(&dir).ok();
        let tiny = ReducedWordCache::new(10, "t1");
        tiny.reduced_words(&w0);
        assert!(tiny.is_empty());
    }

    #[test]
    fn exceptional_groups() {
        for (label, order) in [("B2", 8), ("G2", 12), ("B3", 48), ("D4", 192)] {
            let g = WeylGroup::from_label(label).unwrap();
            let elems = g.elements();
            assert_eq!(elems.len(), order, "{label}");
            assert_eq!(g.longest().length(), g.root_system().num_positive());
        }
    }
}
