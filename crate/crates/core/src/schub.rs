//! Down/Up sets, maximal parabolics, slice weights and the cominuscule
//! certificate solver.
//!
//! Certificates are normalized so that every slice weight `alpha` satisfies
//! `alpha(v) = -1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linsolve::{self, Solution};
use crate::rootsys::{Covector, RootId, RootSystem};
use crate::weyl::{ParabolicSubset, WeylElement};

/// Which family of Schubert varieties is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `X^w`, closure of the `B^-` orbit, with fixed points `x >= w`.
    Opposite,
    /// `X_w`, closure of the `B` orbit, with fixed points `x <= w`.
    Standard,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "opposite" => Ok(Variant::Opposite),
            "standard" => Ok(Variant::Standard),
            _ => Err(Error::Parse(format!("unknown variant `{s}`"))),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Opposite => "opposite",
            Variant::Standard => "standard",
        })
    }
}

/// Whether a feasible certificate proves the point cominuscule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    NecessaryOnly,
}

/// The six root sets attached to a fixed point and a parabolic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DownUpSets {
    pub down: Vec<RootId>,
    pub down_p: Vec<RootId>,
    pub down_l: Vec<RootId>,
    pub up: Vec<RootId>,
    pub up_p: Vec<RootId>,
    pub up_l: Vec<RootId>,
}

/// `{j : w(alpha_j) > 0}` (Opposite) or `{j : w(alpha_j) < 0}` (Standard).
pub fn max_parabolic(w: &WeylElement, variant: Variant) -> ParabolicSubset {
    let rank = w.group().rank();
    let simples: Vec<usize> = (1..=rank)
        .filter(|&j| match variant {
            Variant::Opposite => !w.has_right_descent(j),
            Variant::Standard => w.has_right_descent(j),
        })
        .collect();
    ParabolicSubset::new(rank, &simples).expect("indices in range")
}

pub fn down_up_sets(x: &WeylElement, p: &ParabolicSubset) -> DownUpSets {
    let rs = x.group().root_system();
    let mut s = DownUpSets {
        down: Vec::new(),
        down_p: Vec::new(),
        down_l: Vec::new(),
        up: Vec::new(),
        up_p: Vec::new(),
        up_l: Vec::new(),
    };
    // Images x(gamma) of negative roots gamma, split by sign and by whether
    // gamma lies in the Levi.
    for g in rs.positive_ids() {
        let img = x.apply(rs.negate(g));
        let levi = p.in_levi(rs, g);
        if rs.is_positive(img) {
            if levi { &mut s.down_l } else { &mut s.down_p }.push(img);
        } else if levi {
            s.up_l.push(img);
        } else {
            s.up_p.push(img);
        }
    }
    for v in [&mut s.down_p, &mut s.down_l, &mut s.up_p, &mut s.up_l] {
        v.sort_unstable();
    }
    s.down = merged(&s.down_p, &s.down_l);
    s.up = merged(&s.up_p, &s.up_l);
    s
}

fn merged(a: &[RootId], b: &[RootId]) -> Vec<RootId> {
    let mut v: Vec<RootId> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

/// Checks `x >= w` (Opposite) or `x <= w` (Standard).
pub fn check_bruhat(w: &WeylElement, x: &WeylElement, variant: Variant) -> Result<()> {
    let ok = match variant {
        Variant::Opposite => w.bruhat_leq(x)?,
        Variant::Standard => x.bruhat_leq(w)?,
    };
    if ok {
        Ok(())
    } else {
        let rel = match variant {
            Variant::Opposite => "x >= w",
            Variant::Standard => "x <= w",
        };
        Err(Error::BruhatPrecondition(format!("{rel} fails for x = {x}, w = {w}")))
    }
}

/// Positive roots of the unipotent radical `u_P`.
pub fn radical_roots(rs: &RootSystem, p: &ParabolicSubset) -> Vec<RootId> {
    rs.positive_ids().filter(|&b| !p.in_levi(rs, b)).collect()
}

/// T-curve weights in positive-root form: `beta in Phi(u_P)` with
/// `x > x s_beta >= w` (Opposite) or `x < x s_beta <= w` (Standard).
pub fn curve_weights(w: &WeylElement, x: &WeylElement, variant: Variant) -> Result<Vec<RootId>> {
    check_bruhat(w, x, variant)?;
    let rs = x.group().root_system();
    let p = max_parabolic(w, variant);
    let mut out = Vec::new();
    for b in radical_roots(rs, &p) {
        let goes_down = !rs.is_positive(x.apply(b));
        let keep = match variant {
            Variant::Opposite => goes_down && w.bruhat_leq(&x.mul_reflection(b))?,
            Variant::Standard => !goes_down && x.mul_reflection(b).bruhat_leq(w)?,
        };
        if keep {
            out.push(b);
        }
    }
    Ok(out)
}

/// Weight form `-x beta` of a set of positive roots.
pub fn to_weight_form(x: &WeylElement, betas: &[RootId]) -> Vec<RootId> {
    let rs = x.group().root_system();
    betas.iter().map(|&b| rs.negate(x.apply(b))).collect()
}

/// Tangent-space weights in type A and the resulting smoothness verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZariskiReport {
    /// `beta > 0` with `x s_beta >= w` (Opposite) or `x s_beta <= w` (Standard).
    pub weights: Vec<RootId>,
    /// Dimension of the Schubert variety.
    pub dim: usize,
    pub smooth: bool,
}

pub fn zariski_weights_type_a(w: &WeylElement, x: &WeylElement, variant: Variant) -> Result<ZariskiReport> {
    let rs = x.group().root_system();
    if !rs.is_type_a() {
        return Err(Error::RequiresTypeA(rs.label().to_string()));
    }
    check_bruhat(w, x, variant)?;
    let mut weights = Vec::new();
    for b in rs.positive_ids() {
        let y = x.mul_reflection(b);
        let keep = match variant {
            Variant::Opposite => w.bruhat_leq(&y)?,
            Variant::Standard => y.bruhat_leq(w)?,
        };
        if keep {
            weights.push(b);
        }
    }
    let dim = variety_dimension(w, variant);
    Ok(ZariskiReport {
        smooth: weights.len() == dim,
        weights,
        dim,
    })
}

/// `|Phi^+| - l(w)` for `X^w`, `l(w)` for `X_w`.
pub fn variety_dimension(w: &WeylElement, variant: Variant) -> usize {
    match variant {
        Variant::Opposite => w.group().root_system().num_positive() - w.length(),
        Variant::Standard => w.length(),
    }
}

/// Obstruction to feasibility: integer multipliers `m` on the listed roots
/// with `sum m_j beta_j = 0` but `sum m_j != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibilityWitness {
    pub roots: Vec<RootId>,
    pub multipliers: Vec<BigInt>,
}

/// Result of solving `alpha(v) = -1` over a set of weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CominCertificate {
    pub feasible: bool,
    /// Canonical solution, free variables set to zero.
    pub v: Option<Covector>,
    /// Constraint weights in weight form.
    pub slice_weights: Vec<RootId>,
    /// The same constraints in positive-root form.
    pub beta_weights: Vec<RootId>,
    pub exactness: Exactness,
    /// Basis of covectors vanishing on every slice weight.
    pub kernel: Vec<Covector>,
    pub witness: Option<InfeasibilityWitness>,
}

impl CominCertificate {
    /// Every feasible certificate `v + sum t_i k_i`.
    pub fn shifted(&self, coefficients: &[BigRational]) -> Option<Covector> {
        let mut v = self.v.clone()?;
        for (k, t) in self.kernel.iter().zip(coefficients) {
            v = v.add(&k.scale(t));
        }
        Some(v)
    }
}

/// Solve `alpha(v) = -1` for every `alpha` in `weights`.
///
/// `witness_labels[j]` is the root reported for constraint `j` in an
/// infeasibility witness.
pub fn solve_minus_one(
    rs: &RootSystem,
    weights: &[RootId],
    witness_labels: &[RootId],
    exactness: Exactness,
) -> Result<CominCertificate> {
    let n = rs.rank();
    let a: Vec<Vec<BigRational>> = weights
        .iter()
        .map(|&r| {
            rs.root(r)
                .coords()
                .iter()
                .map(|&m| BigRational::from_integer(m.into()))
                .collect()
        })
        .collect();
    let b = vec![BigRational::from_integer((-1).into()); weights.len()];
    let mut cert = CominCertificate {
        feasible: false,
        v: None,
        slice_weights: weights.to_vec(),
        beta_weights: witness_labels.to_vec(),
        exactness,
        kernel: Vec::new(),
        witness: None,
    };
    match linsolve::solve(&a, &b, n)? {
        Solution::Feasible { x, kernel } => {
            let v = Covector::new(x);
            for &r in weights {
                if v.pair(rs.root(r))? != BigRational::from_integer((-1).into()) {
                    return Err(Error::Inconsistent("certificate failed verification".into()));
                }
            }
            cert.feasible = true;
            cert.v = Some(v);
            cert.kernel = kernel.into_iter().map(Covector::new).collect();
        }
        Solution::Infeasible { .. } => {
            let (keep, multipliers) = linsolve::minimal_infeasible_subset(&a, &b, n)?
                .ok_or_else(|| Error::Inconsistent("infeasible system has no infeasible subset".into()))?;
            cert.witness = Some(InfeasibilityWitness {
                roots: keep.iter().map(|&i| witness_labels[i]).collect(),
                multipliers,
            });
        }
    }
    Ok(cert)
}

fn exactness_of(rs: &RootSystem) -> Exactness {
    if rs.is_type_a() {
        Exactness::Exact
    } else {
        Exactness::NecessaryOnly
    }
}

/// Certificate for `xB` in `X^w` (or `X_w`): solve over the slice weights
/// `-x beta`, `beta` in [`curve_weights`].
pub fn comin_certificate(w: &WeylElement, x: &WeylElement, variant: Variant) -> Result<CominCertificate> {
    let betas = curve_weights(w, x, variant)?;
    let weights = to_weight_form(x, &betas);
    let rs = x.group().root_system();
    solve_minus_one(rs, &weights, &betas, exactness_of(rs))
}

/// Feasibility of `alpha(v) = -1` over all of `Down_x`.
pub fn is_cominuscule_element(x: &WeylElement) -> Result<CominCertificate> {
    let rs = x.group().root_system();
    let down = down_up_sets(x, &ParabolicSubset::empty()).down;
    let mut cert = solve_minus_one(rs, &down, &down, Exactness::Exact)?;
    if rs.is_type_a() && cert.feasible != avoids_321(x)? {
        return Err(Error::Inconsistent(format!(
            "321-pattern scan disagrees with linear feasibility at {x}"
        )));
    }
    cert.exactness = Exactness::Exact;
    Ok(cert)
}

/// True when the one-line form has no `i < j < k` with `x(i) > x(j) > x(k)`.
pub fn avoids_321(x: &WeylElement) -> Result<bool> {
    let ol = x
        .to_one_line()
        .ok_or_else(|| Error::RequiresTypeA(x.group().root_system().label().to_string()))?;
    let n = ol.len();
    for j in 1..n.saturating_sub(1) {
        let left = ol[..j].iter().any(|&a| a > ol[j]);
        let right = ol[j + 1..].iter().any(|&c| c < ol[j]);
        if left && right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `l(x) - |x Phi_L^- cap Phi^+| - l(w)` (Opposite) or
/// `l(w) - |x Phi_L^- cap Phi^-| - l(x)` (Standard).
pub fn slice_dimension(w: &WeylElement, x: &WeylElement, variant: Variant) -> Result<usize> {
    check_bruhat(w, x, variant)?;
    let p = max_parabolic(w, variant);
    let sets = down_up_sets(x, &p);
    let d = match variant {
        Variant::Opposite => x.length() as i64 - sets.down_l.len() as i64 - w.length() as i64,
        Variant::Standard => w.length() as i64 - sets.up_l.len() as i64 - x.length() as i64,
    };
    usize::try_from(d).map_err(|_| Error::Inconsistent(format!("negative slice dimension {d}")))
}
