//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schubloc::schub::{down_up_sets, variety_dimension};
use schubloc::*;

const A: Variant = Variant::Opposite;
const WORD_FIXTURE_2: [usize; 12] = [2, 1, 4, 3, 5, 4, 2, 1, 3, 2, 5, 4];
const WORD_FIXTURE_3: [usize; 12] = [4, 3, 2, 1, 5, 4, 3, 2, 4, 3, 5, 4];

const BOUND_1: Duration = Duration::from_secs(1);
const BOUND_2: Duration = Duration::from_secs(5);
const BOUND_3: Duration = Duration::from_secs(5);
const BOUND_6: Duration = Duration::from_secs(30);
const BOUND_8: Duration = Duration::from_secs(120);

struct Checks {
    criterion: u32,
    items: Vec<(String, bool)>,
    start: Instant,
    bound: Option<Duration>,
}

impl Checks {
    fn new(criterion: u32, bound: Option<Duration>) -> Self {
        Checks {
            criterion,
            items: Vec::new(),
            start: Instant::now(),
            bound,
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.items.push((name.into(), ok));
    }

    fn finish(mut self) {
        let elapsed = self.start.elapsed();
        if let Some(b) = self.bound {
            self.check(format!("elapsed {:.3}s < {:.0}s", elapsed.as_secs_f64(), b.as_secs_f64()), elapsed < b);
        }
        let failed: Vec<&str> = self.items.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
        if failed.is_empty() {
            println!("criterion {}: PASS ({} checks, {:.3}s)", self.criterion, self.items.len(), elapsed.as_secs_f64());
        } else {
            println!("criterion {}: FAIL [{}]", self.criterion, failed.join("; "));
        }
        assert!(failed.is_empty(), "criterion {} failed: {:?}", self.criterion, failed);
    }
}

fn a5() -> WeylGroup {
    WeylGroup::from_label("A5").unwrap()
}

fn el(g: &WeylGroup, one_line: &[usize]) -> WeylElement {
    g.from_one_line(one_line).unwrap()
}

fn names(rs: &RootSystem, ids: &[RootId]) -> BTreeSet<String> {
    ids.iter().map(|&r| rs.format_root(r)).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// The data that must agree between two Hilbert series computations.
type SeriesKey = (Vec<BigInt>, u32, Vec<(BigInt, u32)>, Vec<(BigInt, u32)>, BigInt);

fn key(h: &HilbertSeries) -> SeriesKey {
    (
        h.numerator.clone(),
        h.dim,
        h.partial_fractions.clone(),
        h.hilbert_poly.terms.clone(),
        h.multiplicity.clone(),
    )
}

fn opts_word(word: &[usize]) -> EvalOptions {
    EvalOptions {
        word: Some(word.to_vec()),
        ..EvalOptions::default()
    }
}

#[test]
fn criterion_1_fixture_1_tangent_and_slice_sets() {
    let mut c = Checks::new(1, Some(BOUND_1));
    let g = a5();
    let rs = g.root_system();
    let w = el(&g, &[3, 4, 1, 6, 2, 5]);
    let y = el(&g, &[5, 6, 2, 4, 1, 3]);
    let s = curve_weights(&w, &y, A).unwrap();
    let s_expected = set(&["e1-e4", "e1-e6", "e2-e4", "e3-e5", "e4-e6"]);
    c.check("S matches", names(rs, &s) == s_expected);
    let z = zariski_weights_type_a(&w, &y, A).unwrap();
    let mut r_expected = s_expected.clone();
    r_expected.extend(set(&["e1-e2", "e3-e4", "e3-e6", "e5-e6"]));
    c.check("R matches", names(rs, &z.weights) == r_expected);
    c.check("|R| = 9 = dim", z.weights.len() == 9 && z.dim == 9 && z.smooth);
    let cert = comin_certificate(&w, &y, A).unwrap();
    c.check("certificate infeasible", !cert.feasible && cert.witness.is_some());
    let m = local_multiplicity(&w, &y, A, &EvalOptions::default()).unwrap();
    c.check("mult reported 1", m.value == BigInt::from(1) && m.source == MultiplicitySource::Smooth);
    c.finish();
}

#[test]
fn criterion_2_fixture_2_subexpressions_and_multiplicity() {
    let mut c = Checks::new(2, Some(BOUND_2));
    let g = a5();
    let w = el(&g, &[3, 4, 1, 6, 2, 5]);
    let x = el(&g, &[5, 6, 3, 4, 1, 2]);
    c.check("word spells x", g.from_reduced_word(&WORD_FIXTURE_2).unwrap() == x);
    let cert = comin_certificate(&w, &x, A).unwrap();
    c.check("certificate feasible", cert.feasible && cert.exactness == Exactness::Exact);
    let subs = enumerate_subexpressions(&WORD_FIXTURE_2, &w, SubexpressionMode::Reduced).unwrap();
    c.check(format!("15 reduced subexpressions (got {})", subs.len()), subs.len() == 15);
    let m = multiplicity_with(&w, &x, A, &opts_word(&WORD_FIXTURE_2)).unwrap();
    c.check(format!("multiplicity 3 (got {})", m.multiplicity), m.multiplicity == BigInt::from(3));
    c.finish();
}

#[test]
fn criterion_3_fixture_3_hecke_subexpressions_and_series() {
    let mut c = Checks::new(3, Some(BOUND_3));
    let g = a5();
    let w = el(&g, &[4, 3, 1, 6, 2, 5]);
    let x = el(&g, &[5, 6, 3, 4, 1, 2]);
    let red = enumerate_subexpressions(&WORD_FIXTURE_3, &w, SubexpressionMode::Reduced).unwrap();
    let red_expected: Vec<Vec<usize>> = vec![vec![2, 3, 4, 5, 7, 8, 9], vec![2, 3, 4, 5, 7, 8, 12], vec![2, 3, 4, 7, 8, 11, 12]];
    c.check("3 reduced at listed positions", red == red_expected);
    let hecke = enumerate_subexpressions(&WORD_FIXTURE_3, &w, SubexpressionMode::Hecke).unwrap();
    let mut hecke_expected = red_expected.clone();
    hecke_expected.push(vec![2, 3, 4, 5, 7, 8, 11, 12]);
    hecke_expected.push(vec![2, 3, 4, 5, 7, 8, 9, 12]);
    hecke_expected.sort();
    c.check("5 Hecke at listed positions", hecke == hecke_expected);
    let opts = opts_word(&WORD_FIXTURE_3);
    let m = multiplicity_with(&w, &x, A, &opts).unwrap().multiplicity;
    c.check("multiplicity 3", m == BigInt::from(3));
    let h = hilbert_series_with(&w, &x, A, 12, &opts).unwrap();
    c.check(
        "partial fractions 3/(t-1)^8 + 2/(t-1)^7",
        h.partial_fractions == vec![(BigInt::from(3), 8), (BigInt::from(2), 7)],
    );
    c.check(
        "Hilbert polynomial 3 C(k+7,7) - 2 C(k+6,6)",
        h.hilbert_poly.terms == vec![(BigInt::from(3), 8), (BigInt::from(-2), 7)],
    );
    let values_ok = (0..40).all(|k| {
        let expected = BigInt::from(3) * common_binom(k + 7, 7) - BigInt::from(2) * common_binom(k + 6, 6);
        h.hilbert_poly.eval(k as i64) == expected
    });
    c.check("Hilbert polynomial values", values_ok);
    // leading coefficient 3/7!
    let lead = h.hilbert_poly.coefficients.last().cloned();
    c.check(
        "leading coefficient 3/5040",
        h.hilbert_poly.coefficients.len() == 8 && lead == Some(BigRational::new(3.into(), 5040.into())),
    );
    c.check("numerator 1 + 2t over (1-t)^8", h.numerator == vec![BigInt::from(1), BigInt::from(2)] && h.dim == 8);
    c.finish();
}

fn common_binom(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[test]
fn criterion_4_word_certificate_direction_invariance() {
    let mut c = Checks::new(4, None);
    let g = a5();
    let x = el(&g, &[5, 6, 3, 4, 1, 2]);
    let g_alt = Covector::from_ints(&[3, 1, 4, 1, 5]);
    for (label, w) in [("fixture 2", el(&g, &[3, 4, 1, 6, 2, 5])), ("fixture 3", el(&g, &[4, 3, 1, 6, 2, 5]))] {
        let base_opts = opts_word(&WORD_FIXTURE_2);
        let m0 = multiplicity_with(&w, &x, A, &base_opts).unwrap().multiplicity;
        let h0 = key(&hilbert_series_with(&w, &x, A, 12, &base_opts).unwrap());

        // (a) two reduced words
        let other = opts_word(&WORD_FIXTURE_3);
        let m1 = multiplicity_with(&w, &x, A, &other).unwrap().multiplicity;
        let h1 = key(&hilbert_series_with(&w, &x, A, 12, &other).unwrap());
        c.check(format!("{label} (a) words agree"), m0 == m1 && h0 == h1);

        // (b) two certificates
        let cert = comin_certificate(&w, &x, A).unwrap();
        match cert.kernel.first() {
            Some(_) => {
                let ones: Vec<BigRational> = cert.kernel.iter().map(|_| BigRational::from_integer(1.into())).collect();
                let v2 = cert.shifted(&ones).unwrap();
                let o = EvalOptions {
                    certificate: Some(v2),
                    ..base_opts.clone()
                };
                let m2 = multiplicity_with(&w, &x, A, &o).unwrap().multiplicity;
                let h2 = key(&hilbert_series_with(&w, &x, A, 12, &o).unwrap());
                c.check(format!("{label} (b) certificates agree"), m0 == m2 && h0 == h2);
            }
            None => c.check(
                format!(
                    "{label} (b) second certificate: none exists, {} slice weights span the dual space of rank {}",
                    cert.slice_weights.len(),
                    g.rank()
                ),
                false,
            ),
        }

        // (c) two directions
        let o = EvalOptions {
            direction: Some(g_alt.clone()),
            ..base_opts.clone()
        };
        let m3 = multiplicity_with(&w, &x, A, &o).unwrap().multiplicity;
        let h3 = key(&hilbert_series_with(&w, &x, A, 12, &o).unwrap());
        c.check(format!("{label} (c) directions agree"), m0 == m3 && h0 == h3);
    }
    c.finish();
}

#[test]
fn certificate_invariance_where_the_kernel_is_nontrivial() {
    // supplements part (b) above on pairs that admit a one-parameter family
    let g = WeylGroup::from_label("A3").unwrap();
    let els = g.elements();
    let mut tried = 0;
    for w in &els {
        for x in &els {
            if !w.bruhat_leq(x).unwrap() {
                continue;
            }
            let cert = comin_certificate(w, x, A).unwrap();
            if !cert.feasible || cert.kernel.is_empty() {
                continue;
            }
            let base = multiplicity(w, x, A).unwrap();
            let h0 = key(&hilbert_series(w, x, A, 10).unwrap());
            for t in [1i64, -2, 3] {
                let coeffs: Vec<BigRational> = cert.kernel.iter().map(|_| BigRational::from_integer(t.into())).collect();
                let o = EvalOptions {
                    certificate: cert.shifted(&coeffs),
                    ..EvalOptions::default()
                };
                assert_eq!(multiplicity_with(w, x, A, &o).unwrap().multiplicity, base, "{w} {x} t={t}");
                assert_eq!(key(&hilbert_series_with(w, x, A, 10, &o).unwrap()), h0, "{w} {x} t={t}");
            }
            tried += 1;
        }
    }
    assert!(tried > 20, "only {tried} pairs with a kernel");
}

#[test]
fn criterion_5_numerator_at_one_is_multiplicity() {
    let mut c = Checks::new(5, None);
    let g = WeylGroup::from_label("A3").unwrap();
    let els = g.elements();
    let mut count = 0;
    let mut bad = Vec::new();
    for variant in [Variant::Opposite, Variant::Standard] {
        for w in &els {
            for x in &els {
                let ok = match variant {
                    Variant::Opposite => w.bruhat_leq(x).unwrap(),
                    Variant::Standard => x.bruhat_leq(w).unwrap(),
                };
                if !ok || !comin_certificate(w, x, variant).unwrap().feasible {
                    continue;
                }
                count += 1;
                let m = multiplicity(w, x, variant).unwrap();
                let h = hilbert_series(w, x, variant, 10).unwrap();
                if h.numerator_at_one() != m || h.multiplicity != m {
                    bad.push(format!("{variant} {w} {x}"));
                }
            }
        }
    }
    c.check(format!("A3 exhaustive, {count} cominuscule pairs, mismatches {bad:?}"), bad.is_empty() && count > 0);
    let g5 = a5();
    let x = el(&g5, &[5, 6, 3, 4, 1, 2]);
    for w in [el(&g5, &[3, 4, 1, 6, 2, 5]), el(&g5, &[4, 3, 1, 6, 2, 5])] {
        let m = multiplicity(&w, &x, A).unwrap();
        let h = hilbert_series(&w, &x, A, 12).unwrap();
        c.check(format!("fixture w={w}"), h.numerator_at_one() == m && m == BigInt::from(3));
    }
    c.finish();
}

fn perm_of(w: &WeylElement) -> common::Perm {
    w.to_one_line().unwrap()
}

#[test]
fn criterion_6_small_rank_oracles() {
    let mut c = Checks::new(6, Some(BOUND_6));
    let g3 = WeylGroup::from_label("A3").unwrap();
    let els = g3.elements();
    let oracle = common::BruhatOracle::new(4);
    c.check("A3 has 24 elements", els.len() == 24);
    let mut mism = 0;
    for x in &els {
        for w in &els {
            let o = oracle.leq(&perm_of(x), &perm_of(w));
            if x.bruhat_leq(w).unwrap() != o || x.bruhat_leq_one_line(w).unwrap() != o {
                mism += 1;
            }
        }
    }
    c.check(format!("Bruhat = closure of covers on 576 pairs ({mism} mismatches)"), mism == 0);

    // Hecke product: the Bruhat-maximum of all subword products
    let g2 = WeylGroup::from_label("A2").unwrap();
    let oracle2 = common::BruhatOracle::new(3);
    let mut hecke_bad = 0;
    let mut words_checked = 0;
    for (g, orc, n, max_len) in [(&g2, &oracle2, 3usize, 6usize), (&g3, &oracle, 4, 5)] {
        for word in all_words(n - 1, max_len) {
            words_checked += 1;
            let expected = max_subword_product(orc, n, &word);
            let got = perm_of(&g.hecke_product(&word).unwrap());
            if Some(got) != expected {
                hecke_bad += 1;
            }
        }
    }
    c.check(format!("Hecke product on {words_checked} words ({hecke_bad} mismatches)"), hecke_bad == 0);

    let mut billey_bad = 0;
    for w in &els {
        for x in &els {
            let nonzero = !billey_restriction(w, x, A, None).unwrap().is_zero();
            if nonzero != oracle.leq(&perm_of(w), &perm_of(x)) {
                billey_bad += 1;
            }
        }
    }
    c.check(format!("Billey nonzero iff x >= w ({billey_bad} mismatches)"), billey_bad == 0);

    for (g, n, expected) in [(&g2, 3usize, 2u32), (&g3, 4, 16)] {
        let w0 = g.longest();
        let lib = w0.reduced_word_count();
        let listed = w0.reduced_words().count();
        let brute = all_words(n - 1, w0.length())
            .into_iter()
            .filter(|wd| wd.len() == w0.length() && common::reduced_product(n, wd, &(1..=wd.len()).collect::<Vec<_>>()).is_some())
            .count();
        c.check(
            format!("A{} longest element has {expected} reduced words", n - 1),
            lib == expected.into() && listed == expected as usize && brute == expected as usize,
        );
    }
    c.finish();
}

/// Words over `1..=rank` of length at most `max_len`.
fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..=rank {
                let mut v: Vec<usize> = w.clone();
                v.push(i);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn max_subword_product(oracle: &common::BruhatOracle, n: usize, word: &[usize]) -> Option<common::Perm> {
    let products: Vec<common::Perm> = common::all_subsets(word.len())
        .iter()
        .map(|s| {
            let letters: Vec<usize> = s.iter().map(|&k| word[k - 1]).collect();
            common::from_word(n, &letters)
        })
        .collect();
    let maxima: BTreeSet<common::Perm> = products
        .iter()
        .filter(|p| products.iter().all(|q| oracle.leq(q, p)))
        .cloned()
        .collect();
    if maxima.len() == 1 {
        maxima.into_iter().next()
    } else {
        None
    }
}

/// Bruhat and feasibility tables for one group and variant.
struct Tables {
    els: Vec<WeylElement>,
    leq: Vec<Vec<bool>>,
}

impl Tables {
    fn new(g: &WeylGroup) -> Self {
        let els = g.elements();
        let leq = els.iter().map(|a| els.iter().map(|b| a.bruhat_leq(b).unwrap()).collect()).collect();
        Tables { els, leq }
    }

    /// `w` and `x` satisfy the Bruhat precondition of `variant`.
    fn admissible(&self, w: usize, x: usize, variant: Variant) -> bool {
        match variant {
            Variant::Opposite => self.leq[w][x],
            Variant::Standard => self.leq[x][w],
        }
    }

    fn pairs(&self, variant: Variant) -> Vec<(usize, usize)> {
        let n = self.els.len();
        (0..n)
            .flat_map(|w| (0..n).map(move |x| (w, x)))
            .filter(|&(w, x)| self.admissible(w, x, variant))
            .collect()
    }
}

fn sample(pairs: Vec<(usize, usize)>, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = pairs;
    p.shuffle(&mut rng);
    p.truncate(count);
    p
}

#[test]
fn criterion_7_structural_properties() {
    let mut c = Checks::new(7, None);
    let a3 = WeylGroup::from_label("A3").unwrap();
    let a4 = WeylGroup::from_label("A4").unwrap();
    let t3 = Tables::new(&a3);
    let t4 = Tables::new(&a4);
    for variant in [Variant::Opposite, Variant::Standard] {
        for (label, t, pairs) in [
            ("A3", &t3, t3.pairs(variant)),
            ("A4", &t4, sample(t4.pairs(variant), 250, 7)),
        ] {
            coset_invariance(&mut c, label, t, &pairs, variant);
            slice_dimension_relation(&mut c, label, t, &pairs, variant);
        }
    }
    for (label, t) in [("A3", &t3), ("A4", &t4)] {
        let mut bad = 0;
        let mut count = 0;
        for x in &t.els {
            if !common::avoids_321(&perm_of(x)) {
                continue;
            }
            for w in &t.els {
                if w.bruhat_leq(x).unwrap() {
                    count += 1;
                    if !comin_certificate(w, x, A).unwrap().feasible {
                        bad += 1;
                    }
                }
            }
        }
        c.check(format!("{label}: 321-avoiding x feasible in every X^w, {count} pairs, {bad} failures"), bad == 0);
    }
    for (label, t) in [("A3", &t3), ("A4", &t4)] {
        for variant in [Variant::Opposite, Variant::Standard] {
            order_ideal(&mut c, label, t, variant);
        }
    }
    c.finish();
}

fn coset_invariance(c: &mut Checks, label: &str, t: &Tables, pairs: &[(usize, usize)], variant: Variant) {
    let mut bad = Vec::new();
    for &(wi, xi) in pairs {
        let (w, x) = (&t.els[wi], &t.els[xi]);
        let p = max_parabolic(w, variant);
        let base = comin_certificate(w, x, variant).unwrap().feasible;
        let base_data = base.then(|| (multiplicity(w, x, variant).unwrap(), key(&hilbert_series(w, x, variant, 8).unwrap())));
        for y in p.coset(x) {
            let feasible = comin_certificate(w, &y, variant).unwrap().feasible;
            let data = feasible.then(|| (multiplicity(w, &y, variant).unwrap(), key(&hilbert_series(w, &y, variant, 8).unwrap())));
            if feasible != base || data != base_data {
                bad.push(format!("{w} {x} {y}"));
            }
        }
    }
    c.check(
        format!("{label} {variant}: coset invariance on {} pairs, failures {:?}", pairs.len(), &bad[..bad.len().min(3)]),
        bad.is_empty(),
    );
}

fn slice_dimension_relation(c: &mut Checks, label: &str, t: &Tables, pairs: &[(usize, usize)], variant: Variant) {
    let mut stated_bad = 0;
    let mut corrected_bad = 0;
    for &(wi, xi) in pairs {
        let (w, x) = (&t.els[wi], &t.els[xi]);
        let s = curve_weights(w, x, variant).unwrap().len();
        let dim_slice = slice_dimension(w, x, variant).unwrap();
        if s > dim_slice {
            stated_bad += 1;
        }
        // the tangent excess of the slice equals that of the variety
        let z = zariski_weights_type_a(w, x, variant).unwrap();
        let excess_ok = s >= dim_slice && s - dim_slice == z.weights.len() - z.dim;
        // slice dimension plus the orbit directions gives the variety
        let p = max_parabolic(w, variant);
        let sets = down_up_sets(x, &p);
        let orbit = match variant {
            Variant::Opposite => sets.up.len() + sets.down_l.len(),
            Variant::Standard => sets.down.len() + sets.up_l.len(),
        };
        if !excess_ok || dim_slice + orbit != variety_dimension(w, variant) {
            corrected_bad += 1;
        }
    }
    c.check(
        format!("{label} {variant}: |curve_weights| <= slice_dimension, {stated_bad} of {} pairs violate it", pairs.len()),
        stated_bad == 0,
    );
    c.check(
        format!("{label} {variant}: slice dimension formula and tangent excess, {corrected_bad} failures"),
        corrected_bad == 0,
    );
}

fn order_ideal(c: &mut Checks, label: &str, t: &Tables, variant: Variant) {
    let n = t.els.len();
    let mut feasible = vec![vec![false; n]; n];
    for (w, x) in t.pairs(variant) {
        feasible[w][x] = comin_certificate(&t.els[w], &t.els[x], variant).unwrap().feasible;
    }
    let parabolics: Vec<ParabolicSubset> = t.els.iter().map(|w| max_parabolic(w, variant)).collect();
    let mut triples = 0;
    let mut bad = 0;
    for w in 0..n {
        for x in 0..n {
            if !feasible[w][x] {
                continue;
            }
            for v in 0..n {
                let between = t.admissible(w, v, variant) && t.admissible(v, x, variant);
                let nested = parabolics[w].simples().iter().all(|&j| parabolics[v].contains(j));
                if between && nested {
                    triples += 1;
                    if !feasible[v][x] {
                        bad += 1;
                    }
                }
            }
        }
    }
    c.check(format!("{label} {variant}: order ideal on {triples} triples, {bad} failures"), bad == 0);
}

#[test]
fn criterion_8_fast_path_agreement() {
    let mut c = Checks::new(8, Some(BOUND_8));
    let a3 = WeylGroup::from_label("A3").unwrap();
    let a4 = WeylGroup::from_label("A4").unwrap();
    let t3 = Tables::new(&a3);
    let t4 = Tables::new(&a4);
    let avoid = |t: &Tables, p: &(usize, usize)| common::avoids_321(&perm_of(&t.els[p.1]));
    let p3: Vec<_> = t3.pairs(A).into_iter().filter(|p| avoid(&t3, p)).collect();
    let p4: Vec<_> = t4.pairs(A).into_iter().filter(|p| avoid(&t4, p)).collect();
    let p4 = sample(p4, 600, 11);
    for (label, t, pairs) in [("A3", &t3, p3), ("A4", &t4, p4)] {
        let mut bad = Vec::new();
        for &(wi, xi) in &pairs {
            let (w, x) = (&t.els[wi], &t.els[xi]);
            let fast = fast_path_321(w, x, A, 8).unwrap();
            let m = multiplicity(w, x, A).unwrap();
            let h = hilbert_series(w, x, A, 8).unwrap();
            if fast.multiplicity != m || key(&fast.series) != key(&h) {
                bad.push(format!("{w} {x}"));
            }
        }
        c.check(
            format!("{label}: {} pairs, mismatches {:?}", pairs.len(), &bad[..bad.len().min(3)]),
            bad.is_empty() && (label == "A3" || pairs.len() >= 500),
        );
    }
    c.finish();
}

#[test]
fn criterion_9_fixture_4_coset_points() {
    let mut c = Checks::new(9, None);
    let g = a5();
    let w = el(&g, &[3, 4, 1, 6, 2, 5]);
    let x = el(&g, &[5, 6, 3, 4, 1, 2]);
    let base = key(&hilbert_series(&w, &x, A, 12).unwrap());
    let p = max_parabolic(&w, A);
    c.check("W_P generated by s1 s3 s5", p.simples() == [1, 3, 5]);
    c.check("x minimal in its coset", down_up_sets(&x, &p).down_l.is_empty());
    for y in [el(&g, &[5, 6, 4, 3, 1, 2]), el(&g, &[6, 5, 4, 3, 2, 1])] {
        let cert = comin_certificate(&w, &y, A).unwrap();
        c.check(format!("{y} feasible"), cert.feasible);
        let sets = down_up_sets(&y, &p);
        c.check(format!("{y} not minimal, Down_L nonempty"), !sets.down_l.is_empty());
        let m = multiplicity(&w, &y, A).unwrap();
        c.check(format!("{y} multiplicity 3 (got {m})"), m == BigInt::from(3));
        let h = hilbert_series(&w, &y, A, 12).unwrap();
        c.check(format!("{y} same Hilbert series as x"), key(&h) == base);
    }
    c.finish();
}
