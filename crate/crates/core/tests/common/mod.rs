//! Independent reference implementations for type A, built only on
//! one-line permutation arithmetic.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (1..=n).collect()
}

/// Right multiplication by `s_i` swaps positions `i` and `i+1`.
pub fn times_simple(p: &Perm, i: usize) -> Perm {
    let mut q = p.clone();
    q.swap(i - 1, i);
    q
}

pub fn from_word(n: usize, word: &[usize]) -> Perm {
    word.iter().fold(identity(n), |p, &i| times_simple(&p, i))
}

pub fn inversions(p: &Perm) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Bruhat order as the reflexive-transitive closure of covering relations
/// `x -> x t` with `t` a transposition and length going up by one.
pub struct BruhatOracle {
    pub perms: Vec<Perm>,
    pub index: HashMap<Perm, usize>,
    leq: Vec<Vec<bool>>,
}

impl BruhatOracle {
    pub fn new(n: usize) -> Self {
        let perms = all_perms(n);
        let index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let m = perms.len();
        let mut covers: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (a, p) in perms.iter().enumerate() {
            let l = inversions(p);
            for i in 0..n {
                for j in i + 1..n {
                    let mut q = p.clone();
                    q.swap(i, j);
                    if inversions(&q) == l + 1 {
                        covers[a].push(index[&q]);
                    }
                }
            }
        }
        let mut leq = vec![vec![false; m]; m];
        for a in 0..m {
            let mut queue = VecDeque::from([a]);
            leq[a][a] = true;
            while let Some(b) = queue.pop_front() {
                for &c in &covers[b] {
                    if !leq[a][c] {
                        leq[a][c] = true;
                        queue.push_back(c);
                    }
                }
            }
        }
        BruhatOracle { perms, index, leq }
    }

    pub fn leq(&self, x: &Perm, w: &Perm) -> bool {
        self.leq[self.index[x]][self.index[w]]
    }
}

/// Group product over a subset of positions; `None` when not reduced.
pub fn reduced_product(n: usize, word: &[usize], positions: &[usize]) -> Option<Perm> {
    let mut p = identity(n);
    for &k in positions {
        let q = times_simple(&p, word[k - 1]);
        if inversions(&q) != inversions(&p) + 1 {
            return None;
        }
        p = q;
    }
    Some(p)
}

pub fn hecke_product(n: usize, letters: &[usize]) -> Perm {
    let mut p = identity(n);
    for &i in letters {
        if p[i - 1] < p[i] {
            p = times_simple(&p, i);
        }
    }
    p
}

/// Every subset of positions, 1-based, in lexicographic order.
pub fn all_subsets(len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1 << len))
        .map(|mask| (0..len).filter(|&k| mask & (1 << k) != 0).map(|k| k + 1).collect())
        .collect();
    out.sort();
    out
}

pub fn naive_reduced_subexpressions(n: usize, word: &[usize], w: &Perm) -> Vec<Vec<usize>> {
    all_subsets(word.len())
        .into_iter()
        .filter(|s| reduced_product(n, word, s).as_ref() == Some(w))
        .collect()
}

pub fn naive_hecke_subexpressions(n: usize, word: &[usize], w: &Perm) -> Vec<Vec<usize>> {
    all_subsets(word.len())
        .into_iter()
        .filter(|s| {
            let letters: Vec<usize> = s.iter().map(|&k| word[k - 1]).collect();
            &hecke_product(n, &letters) == w
        })
        .collect()
}

/// Positive roots `e_i - e_j` (`i < j`) with `x > x t_ij >= w`, restricted
/// to pairs not inside one block of the parabolic (`w(i) < w(i+1)` links).
pub fn slice_pairs(oracle: &BruhatOracle, w: &Perm, x: &Perm) -> Vec<(usize, usize)> {
    let n = w.len();
    // the parabolic: simple k in J iff w(k) < w(k+1); blocks are maximal runs
    let mut block = vec![0usize; n];
    for k in 1..n {
        block[k] = if w[k - 1] < w[k] { block[k - 1] } else { block[k - 1] + 1 };
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if block[i] == block[j] {
                continue;
            }
            if x[i] > x[j] {
                let mut y = x.clone();
                y.swap(i, j);
                if oracle.leq(w, &y) {
                    out.push((i + 1, j + 1));
                }
            }
        }
    }
    out
}

/// Feasibility of `v_a - v_b = -1` for every listed pair, where the pair
/// `(i, j)` stands for the weight `-x(e_i - e_j) = e_{x(j)} - e_{x(i)}`.
/// Solved by propagating potentials along a spanning forest.
pub fn potentials_feasible(x: &Perm, pairs: &[(usize, usize)]) -> bool {
    let n = x.len();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n + 1];
    for &(i, j) in pairs {
        let (a, b) = (x[j - 1], x[i - 1]);
        // v_a - v_b = -1
        adj[a].push((b, 1));
        adj[b].push((a, -1));
    }
    let mut pot: Vec<Option<i64>> = vec![None; n + 1];
    for s in 1..=n {
        if pot[s].is_some() {
            continue;
        }
        pot[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            let pa = pot[a].unwrap();
            for &(b, d) in &adj[a] {
                // v_b = v_a + d
                match pot[b] {
                    None => {
                        pot[b] = Some(pa + d);
                        queue.push_back(b);
                    }
                    Some(pb) if pb != pa + d => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn avoids_321(p: &Perm) -> bool {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if p[i] > p[j] && p[j] > p[k] {
                    return false;
                }
            }
        }
    }
    true
}
