//! Restrictions of Schubert classes to torus-fixed points, via reduced and
//! 0-Hecke subexpressions of a reduced word.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{ChowClass, KClass};
use crate::rootsys::RootId;
use crate::schub::Variant;
use crate::weyl::{WeylElement, WeylGroup};

/// A reduced word and its root sequence `r(j) = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSequence {
    pub word: Vec<usize>,
    pub roots: Vec<RootId>,
}

pub fn root_sequence(group: &WeylGroup, word: &[usize]) -> Result<RootSequence> {
    group.from_reduced_word(word)?;
    let rs = group.root_system();
    let mut prefix = group.identity();
    let mut roots = Vec::with_capacity(word.len());
    for &i in word {
        roots.push(prefix.apply(rs.simple_id(i)));
        prefix = prefix.mul_simple_right(i);
    }
    Ok(RootSequence {
        word: word.to_vec(),
        roots,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubexpressionMode {
    /// Reduced subwords whose group product is `w`.
    Reduced,
    /// Arbitrary subwords whose 0-Hecke product is `w`.
    Hecke,
}

/// All subexpressions of `word` for `w`, as 1-based position lists in
/// lexicographic order.
pub fn enumerate_subexpressions(
    word: &[usize],
    w: &WeylElement,
    mode: SubexpressionMode,
) -> Result<Vec<Vec<usize>>> {
    let group = w.group();
    group.from_reduced_word(word)?;
    // suffix[p] = Demazure product of word[p..]
    let mut suffix = vec![group.identity(); word.len() + 1];
    for p in (0..word.len()).rev() {
        suffix[p] = group.simple(word[p])?.hecke_word_product(&suffix[p + 1]);
    }
    let mut out = Vec::new();
    let mut positions = Vec::new();
    let u = group.identity();
    let viable = match mode {
        SubexpressionMode::Reduced => reduced_viable(&u, w, &suffix[0])?,
        SubexpressionMode::Hecke => hecke_viable(&u, w, &suffix[0])?,
    };
    if viable {
        dfs(word, w, mode, &suffix, 0, &u, &mut positions, &mut out)?;
    }
    Ok(out)
}

trait HeckeExt {
    fn hecke_word_product(&self, other: &WeylElement) -> WeylElement;
}

impl HeckeExt for WeylElement {
    fn hecke_word_product(&self, other: &WeylElement) -> WeylElement {
        other
            .word()
            .iter()
            .fold(self.clone(), |acc, &i| acc.hecke_mul_simple(i))
    }
}

fn reduced_viable(u: &WeylElement, w: &WeylElement, rest: &WeylElement) -> Result<bool> {
    let need = u.inverse().mul(w)?;
    Ok(u.length() + need.length() == w.length() && need.bruhat_leq(rest)?)
}

fn hecke_viable(u: &WeylElement, w: &WeylElement, rest: &WeylElement) -> Result<bool> {
    Ok(u.bruhat_leq(w)? && w.bruhat_leq(&u.hecke_word_product(rest))?)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    word: &[usize],
    w: &WeylElement,
    mode: SubexpressionMode,
    suffix: &[WeylElement],
    start: usize,
    u: &WeylElement,
    positions: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if u == w {
        out.push(positions.clone());
        if mode == SubexpressionMode::Reduced {
            return Ok(());
        }
    }
    for p in start..word.len() {
        let s = word[p];
        let next = match mode {
            SubexpressionMode::Reduced => {
                if u.has_right_descent(s) {
                    continue;
                }
                let n = u.mul_simple_right(s);
                if !reduced_viable(&n, w, &suffix[p + 1])? {
                    continue;
                }
                n
            }
            SubexpressionMode::Hecke => {
                let n = u.hecke_mul_simple(s);
                if !hecke_viable(&n, w, &suffix[p + 1])? {
                    continue;
                }
                n
            }
        };
        positions.push(p + 1);
        dfs(word, w, mode, suffix, p + 1, &next, positions, out)?;
        positions.pop();
    }
    Ok(())
}

/// One summand of a restriction formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subexpression {
    /// 1-based positions in the word.
    pub positions: Vec<usize>,
    /// The roots `r(i_j)` at those positions, mapped by `w0` for `X_w`.
    pub roots: Vec<RootId>,
}

/// The pair actually fed to the subexpression formulas: `(w, x)` for `X^w`
/// and `(w0 w, w0 x)` for `X_w`.
pub fn opposite_pair(w: &WeylElement, x: &WeylElement, variant: Variant) -> Result<(WeylElement, WeylElement)> {
    match variant {
        Variant::Opposite => Ok((w.clone(), x.clone())),
        Variant::Standard => {
            let w0 = w.group().longest();
            Ok((w0.mul(w)?, w0.mul(x)?))
        }
    }
}

/// Resolve the reduced word used for `x` (for `X_w`, a word for `w0 x`).
fn word_for(x: &WeylElement, word: Option<&[usize]>) -> Result<Vec<usize>> {
    match word {
        None => Ok(x.word().to_vec()),
        Some(wd) => {
            let y = x.group().from_reduced_word(wd)?;
            if &y != x {
                return Err(Error::WordMismatch {
                    word: wd.to_vec(),
                    expected: x.to_string(),
                    actual: y.to_string(),
                });
            }
            Ok(wd.to_vec())
        }
    }
}

fn w0_image(w0: &WeylElement, r: RootId, variant: Variant) -> RootId {
    match variant {
        Variant::Opposite => r,
        Variant::Standard => w0.apply(r),
    }
}

/// Subexpressions together with their root labels.
pub fn subexpressions(
    w: &WeylElement,
    x: &WeylElement,
    variant: Variant,
    word: Option<&[usize]>,
    mode: SubexpressionMode,
) -> Result<(RootSequence, Vec<Subexpression>)> {
    w.mul(x)?;
    let (wo, xo) = opposite_pair(w, x, variant)?;
    let word = word_for(&xo, word)?;
    let group = x.group();
    let seq = root_sequence(group, &word)?;
    let w0 = group.longest();
    let lists = if wo.bruhat_leq(&xo)? {
        enumerate_subexpressions(&word, &wo, mode)?
    } else {
        Vec::new()
    };
    let subs = lists
        .into_iter()
        .map(|positions| Subexpression {
            roots: positions
                .iter()
                .map(|&p| w0_image(&w0, seq.roots[p - 1], variant))
                .collect(),
            positions,
        })
        .collect();
    Ok((seq, subs))
}

/// `i_x^*` of the Chow class of the Schubert variety: sum over reduced
/// subexpressions of the product of their roots.
pub fn billey_restriction(
    w: &WeylElement,
    x: &WeylElement,
    variant: Variant,
    word: Option<&[usize]>,
) -> Result<ChowClass> {
    let rs = x.group().root_system();
    let (_, subs) = subexpressions(w, x, variant, word, SubexpressionMode::Reduced)?;
    let mut total = ChowClass::zero(rs.rank());
    for s in &subs {
        let term = s
            .roots
            .iter()
            .fold(ChowClass::one(rs.rank()), |acc, &r| acc.mul(&ChowClass::linear(rs.root(r).coords())));
        total.add_assign(&term);
    }
    Ok(total)
}

/// `i_x^*` of the structure sheaf class: `(-1)^{l(w)}` times the sum over
/// Hecke subexpressions of `prod (e^{-r} - 1)`.
pub fn gw_restriction(
    w: &WeylElement,
    x: &WeylElement,
    variant: Variant,
    word: Option<&[usize]>,
) -> Result<KClass> {
    let rs = x.group().root_system();
    let (wo, _) = opposite_pair(w, x, variant)?;
    let (_, subs) = subexpressions(w, x, variant, word, SubexpressionMode::Hecke)?;
    let mut total = KClass::zero(rs.rank());
    for s in &subs {
        let term = s.roots.iter().fold(KClass::one(rs.rank()), |acc, &r| {
            acc.mul(&KClass::exp_neg_minus_one(rs.root(r).coords()))
        });
        total.add_assign(&term);
    }
    if wo.length() % 2 == 1 {
        total = total.neg();
    }
    Ok(total)
}
