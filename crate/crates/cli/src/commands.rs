//! One function per requested output.

use std::time::Instant;

use schubloc::evalmap::fast_path_certificate;
use schubloc::localize::{opposite_pair, subexpressions};
use schubloc::*;

use crate::error::{CliError, Result};
use crate::query::{element_string, ints, Int, Output, Query, Resolved};
use crate::report::*;

fn names(rs: &RootSystem, ids: &[RootId]) -> Vec<String> {
    ids.iter().map(|&r| rs.format_root(r)).collect()
}

fn covector(v: &Covector) -> Vec<String> {
    v.pairings().iter().map(|c| c.to_string()).collect()
}

/// Evaluate every requested output of a query.
pub fn run_query(q: &Query, r: &Resolved) -> Result<Report> {
    let start = Instant::now();
    let mut results = Results::default();
    for out in &q.outputs {
        match out {
            Output::Roots => results.roots = Some(roots(&r.group)),
            Output::Bruhat => results.bruhat = Some(bruhat(r)?),
            Output::Comin => results.comin = Some(comin(q, r)?),
            Output::Tangent => results.tangent = Some(tangent(q, r)?),
            Output::RestrictChow => results.restrict_chow = Some(restrict(q, r, SubexpressionMode::Reduced)?),
            Output::RestrictK => results.restrict_k = Some(restrict(q, r, SubexpressionMode::Hecke)?),
            Output::Mult => results.mult = Some(mult(q, r)?),
            Output::Hilbert => results.hilbert = Some(hilbert(q, r)?),
        }
    }
    Ok(Report {
        tool: TOOL.into(),
        version: VERSION.into(),
        query: q.clone(),
        results,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn opts(q: &Query) -> EvalOptions {
    EvalOptions {
        word: q.word.clone(),
        ..EvalOptions::default()
    }
}

pub fn roots(g: &WeylGroup) -> RootsResult {
    let rs = g.root_system();
    RootsResult {
        label: rs.label().to_string(),
        rank: rs.rank(),
        cartan: rs.datum().matrix().to_vec(),
        num_positive: rs.num_positive(),
        positive: rs
            .positive_ids()
            .map(|id| {
                let root = rs.root(id);
                RootRecord {
                    id: id.index(),
                    name: rs.format_root(id),
                    coords: root.coords().to_vec(),
                    height: root.height(),
                }
            })
            .collect(),
        highest: rs.format_root(rs.highest_root()),
    }
}

pub fn bruhat(r: &Resolved) -> Result<BruhatResult> {
    let (w, x) = r.pair()?;
    let x_leq_w = x.bruhat_leq(w)?;
    let w_leq_x = w.bruhat_leq(x)?;
    let mut criterion = "subword".to_string();
    if r.group.is_type_a() {
        if x.bruhat_leq_one_line(w)? != x_leq_w || w.bruhat_leq_one_line(x)? != w_leq_x {
            return Err(CliError::Internal("subword and tableau criteria disagree".into()));
        }
        criterion.push_str("+tableau");
    }
    Ok(BruhatResult {
        length_w: w.length(),
        length_x: x.length(),
        x_leq_w,
        w_leq_x,
        criterion,
    })
}

pub fn comin(q: &Query, r: &Resolved) -> Result<CominResult> {
    let (w, x) = r.pair()?;
    let rs = r.group.root_system();
    let cert = comin_certificate(w, x, q.variant)?;
    Ok(CominResult {
        feasible: cert.feasible,
        exactness: cert.exactness,
        parabolic: max_parabolic(w, q.variant).simples().to_vec(),
        curve_roots: names(rs, &cert.beta_weights),
        slice_weights: names(rs, &cert.slice_weights),
        certificate: cert.v.as_ref().map(covector),
        kernel: cert.kernel.iter().map(covector).collect(),
        witness: cert.witness.as_ref().map(|wit| Witness {
            roots: names(rs, &wit.roots),
            multipliers: ints(&wit.multipliers),
        }),
    })
}

pub fn tangent(q: &Query, r: &Resolved) -> Result<TangentResult> {
    let (w, x) = r.pair()?;
    let rs = r.group.root_system();
    let curve = curve_weights(w, x, q.variant)?;
    let zariski = if rs.is_type_a() {
        let z = zariski_weights_type_a(w, x, q.variant)?;
        Some(Zariski {
            tangent_dim: z.weights.len(),
            weights: names(rs, &z.weights),
            smooth: z.smooth,
        })
    } else {
        None
    };
    let sets = down_up_sets(x, &max_parabolic(w, q.variant));
    Ok(TangentResult {
        dim: schub::variety_dimension(w, q.variant),
        slice_dimension: slice_dimension(w, x, q.variant)?,
        curve_roots: names(rs, &curve),
        zariski,
        sets: RootSets {
            down: names(rs, &sets.down),
            down_p: names(rs, &sets.down_p),
            down_l: names(rs, &sets.down_l),
            up: names(rs, &sets.up),
            up_p: names(rs, &sets.up_p),
            up_l: names(rs, &sets.up_l),
        },
    })
}

pub fn restrict(q: &Query, r: &Resolved, mode: SubexpressionMode) -> Result<RestrictResult> {
    let (w, x) = r.pair()?;
    let rs = r.group.root_system();
    let (seq, subs) = subexpressions(w, x, q.variant, q.word.as_deref(), mode)?;
    let (_, target) = opposite_pair(w, x, q.variant)?;
    let class = match mode {
        SubexpressionMode::Reduced => billey_restriction(w, x, q.variant, Some(&seq.word))?.to_string(),
        SubexpressionMode::Hecke => gw_restriction(w, x, q.variant, Some(&seq.word))?.to_string(),
    };
    Ok(RestrictResult {
        kind: match mode {
            SubexpressionMode::Reduced => "chow".into(),
            SubexpressionMode::Hecke => "k".into(),
        },
        word_for: element_string(&target),
        roots: seq
            .word
            .iter()
            .zip(&seq.roots)
            .enumerate()
            .map(|(i, (&letter, &root))| WordRoot {
                position: i + 1,
                letter,
                root: rs.format_root(root),
                coords: rs.root(root).coords().to_vec(),
            })
            .collect(),
        word: seq.word.clone(),
        count: subs.len(),
        subexpressions: subs
            .iter()
            .map(|s| SubexpressionRecord {
                positions: s.positions.clone(),
                roots: names(rs, &s.roots),
            })
            .collect(),
        class,
    })
}

pub fn mult(q: &Query, r: &Resolved) -> Result<MultResult> {
    let (w, x) = r.pair()?;
    let m = local_multiplicity(w, x, q.variant, &opts(q))?;
    let shortcut = if fast_path_certificate(x, q.variant)?.feasible {
        let f = fast_path_321(w, x, q.variant, 1)?;
        if f.multiplicity != m.value {
            return Err(CliError::Internal(format!(
                "shortcut multiplicity {} differs from {}",
                f.multiplicity, m.value
            )));
        }
        Some(Int(f.multiplicity))
    } else {
        None
    };
    Ok(MultResult {
        multiplicity: Int(m.value.clone()),
        source: m.source,
        certificate: m.report.as_ref().map(|rep| covector(&rep.certificate)),
        direction: m.report.as_ref().map(|rep| covector(&rep.direction)),
        shortcut,
    })
}

pub fn hilbert(q: &Query, r: &Resolved) -> Result<HilbertResult> {
    let (w, x) = r.pair()?;
    let h = hilbert_series_with(w, x, q.variant, q.terms, &opts(q))?;
    let at_one = h.numerator_at_one();
    let agree = at_one == h.multiplicity;
    if !agree {
        return Err(CliError::Internal(format!(
            "numerator at 1 is {at_one} but the multiplicity formula gives {}",
            h.multiplicity
        )));
    }
    let terms = |v: &[(num_bigint::BigInt, u32)]| -> Vec<PolyTerm> {
        v.iter()
            .map(|(c, p)| PolyTerm {
                coefficient: Int(c.clone()),
                power: *p,
            })
            .collect()
    };
    Ok(HilbertResult {
        canonical: h.display(),
        numerator: ints(&h.numerator),
        dim: h.dim,
        d: h.d,
        taylor_prefix: ints(&h.taylor_prefix),
        stable_from: h.stable_from(),
        hilbert_polynomial: HilbertPolyRecord {
            binomial_terms: terms(&h.hilbert_poly.terms),
            coefficients: h.hilbert_poly.coefficients.iter().map(|c| c.to_string()).collect(),
            display: h.hilbert_poly.display(),
        },
        partial_fractions: terms(&h.partial_fractions),
        multiplicity: Int(h.multiplicity.clone()),
        multiplicity_check: MultCheck {
            numerator_at_one: Int(at_one),
            formula: Int(h.multiplicity.clone()),
            agree,
        },
        diagnostics: h.diagnostics.clone(),
    })
}
