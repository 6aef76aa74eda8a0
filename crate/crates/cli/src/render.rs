//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::query::{join, Query};
use crate::report::*;

/// `[0,1,1]` as `a2+a3`.
pub fn alpha_form(coords: &[i32]) -> String {
    let mut s = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !s.is_empty() || c < 0 {
            s.push(if c < 0 { '-' } else { '+' });
        }
        if c.abs() != 1 {
            write!(s, "{}", c.abs()).unwrap();
        }
        write!(s, "a{}", i + 1).unwrap();
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn query_line(q: &Query) -> String {
    let mut s = format!("{} {}", q.group, q.variant);
    if let Some(w) = &q.w {
        write!(s, "  w = ({w})").unwrap();
    }
    if let Some(x) = &q.x {
        write!(s, "  x = ({x})").unwrap();
    }
    if let Some(word) = &q.word {
        write!(s, "  word = {}", join(word)).unwrap();
    }
    s
}

pub fn render(report: &Report) -> String {
    let mut out = String::new();
    let o = &mut out;
    writeln!(o, "{}", query_line(&report.query)).unwrap();
    let r = &report.results;
    if let Some(roots) = &r.roots {
        writeln!(o, "{} rank {}, {} positive roots, highest {}", roots.label, roots.rank, roots.num_positive, roots.highest).unwrap();
        writeln!(o, "cartan:").unwrap();
        for row in &roots.cartan {
            writeln!(o, "  {}", join(row)).unwrap();
        }
        for root in &roots.positive {
            writeln!(o, "  {:>3}  {:<12} {:<20} height {}", root.id, root.name, alpha_form(&root.coords), root.height).unwrap();
        }
    }
    if let Some(b) = &r.bruhat {
        writeln!(o, "l(w) = {}, l(x) = {}", b.length_w, b.length_x).unwrap();
        writeln!(o, "x <= w: {}   w <= x: {}   ({})", b.x_leq_w, b.w_leq_x, b.criterion).unwrap();
    }
    if let Some(c) = &r.comin {
        writeln!(o, "parabolic W_P = <{}>", c.parabolic.iter().map(|j| format!("s{j}")).collect::<Vec<_>>().join(",")).unwrap();
        writeln!(o, "curve roots = {}", braces(&c.curve_roots)).unwrap();
        writeln!(o, "slice weights = {}", braces(&c.slice_weights)).unwrap();
        let exact = match c.exactness {
            schubloc::Exactness::Exact => "",
            schubloc::Exactness::NecessaryOnly => " (necessary condition only)",
        };
        if c.feasible {
            writeln!(o, "cominuscule: yes{exact}").unwrap();
            if let Some(v) = &c.certificate {
                writeln!(o, "certificate alpha_i(v) = ({})", v.join(", ")).unwrap();
            }
            for k in &c.kernel {
                writeln!(o, "  kernel ({})", k.join(", ")).unwrap();
            }
        } else {
            writeln!(o, "cominuscule: no").unwrap();
            if let Some(wit) = &c.witness {
                let terms: Vec<String> = wit
                    .roots
                    .iter()
                    .zip(&wit.multipliers)
                    .map(|(r, m)| format!("{m}*({r})"))
                    .collect();
                writeln!(o, "obstruction {} : {} = 0", braces(&wit.roots), terms.join(" + ")).unwrap();
            }
        }
    }
    if let Some(t) = &r.tangent {
        writeln!(o, "dim = {}, slice dim = {}", t.dim, t.slice_dimension).unwrap();
        writeln!(o, "S = {}", braces(&t.curve_roots)).unwrap();
        if let Some(z) = &t.zariski {
            writeln!(o, "R = {}", braces(&z.weights)).unwrap();
            writeln!(o, "|R| = {}, {}", z.tangent_dim, if z.smooth { "smooth" } else { "singular" }).unwrap();
        }
        writeln!(o, "Down = {}  Down_P = {}  Down_L = {}", t.sets.down.len(), t.sets.down_p.len(), t.sets.down_l.len()).unwrap();
        writeln!(o, "Up = {}  Up_P = {}  Up_L = {}", t.sets.up.len(), t.sets.up_p.len(), t.sets.up_l.len()).unwrap();
    }
    for res in [&r.restrict_chow, &r.restrict_k].into_iter().flatten() {
        writeln!(o, "word for ({}) = {}", res.word_for, join(&res.word)).unwrap();
        for wr in &res.roots {
            writeln!(o, "  r({}) = {} = {}", wr.position, alpha_form(&wr.coords), wr.root).unwrap();
        }
        let label = if res.kind == "chow" { "reduced" } else { "Hecke" };
        writeln!(o, "{} {} subexpressions:", res.count, label).unwrap();
        for s in &res.subexpressions {
            let marked: String = res
                .word
                .iter()
                .enumerate()
                .map(|(i, l)| if s.positions.contains(&(i + 1)) { format!("[{l}]") } else { l.to_string() })
                .collect();
            let pos: Vec<String> = s.positions.iter().map(|p| p.to_string()).collect();
            writeln!(o, "  {marked} : positions {}", pos.join(", ")).unwrap();
        }
        writeln!(o, "class = {}", res.class).unwrap();
    }
    if let Some(m) = &r.mult {
        writeln!(o, "mult = {} ({:?})", m.multiplicity, m.source).unwrap();
    }
    if let Some(h) = &r.hilbert {
        writeln!(o, "H = {}", h.canonical).unwrap();
        let pf: Vec<String> = h.partial_fractions.iter().map(|t| format!("{}/(t-1)^{}", t.coefficient, t.power)).collect();
        writeln!(o, "  = {}", pf.join(" + ")).unwrap();
        writeln!(o, "prefix {}", h.taylor_prefix.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")).unwrap();
        writeln!(o, "h(k) = {}", h.hilbert_polynomial.display).unwrap();
        writeln!(o, "mult = {} (numerator at 1 = {})", h.multiplicity, h.multiplicity_check.numerator_at_one).unwrap();
        for d in &h.diagnostics {
            writeln!(o, "note: {d}").unwrap();
        }
    }
    out
}
