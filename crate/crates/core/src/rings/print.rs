//! Deterministic textual form of elements, parseable back by [`crate::expr`].

use super::{dense, Elem, Ring, RingKind};

/// True when `s` has a top-level `+` or binary `-`.
pub(crate) fn is_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

/// Wrap in parentheses unless it is a single factor.
pub(crate) fn paren_product(s: &str) -> String {
    if is_sum(s) || s.contains(['*', '/']) || s.starts_with('-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Join `(coefficient, monomial)` pairs, highest first, as a signed sum.
pub(crate) fn join_terms(terms: &[(String, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (c, m)) in terms.iter().enumerate() {
        let term = if m.is_empty() {
            c.clone()
        } else if c == "1" {
            m.clone()
        } else if c == "-1" {
            format!("-{m}")
        } else if is_sum(c) {
            format!("({c})*{m}")
        } else {
            format!("{c}*{m}")
        };
        if idx == 0 {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

impl Ring {
    pub fn format(&self, e: &Elem) -> String {
        match (self.kind(), e) {
            (RingKind::Rationals, Elem::Rat(q)) => q.to_string(),
            (RingKind::PrimeField(_), Elem::Mod(v)) => v.to_string(),
            (RingKind::Poly { base, vars }, Elem::Poly(p)) => {
                let terms: Vec<(String, String)> = p
                    .terms
                    .iter()
                    .map(|(exp, c)| {
                        let mono: Vec<String> = exp
                            .iter()
                            .zip(vars)
                            .filter(|(k, _)| **k > 0)
                            .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                            .collect();
                        (base.format(c), mono.join("*"))
                    })
                    .collect();
                join_terms(&terms)
            }
            (RingKind::Frac { poly }, Elem::Frac(f)) => {
                let num = poly.format(&Elem::Poly(f.0.clone()));
                if poly.is_one(&Elem::Poly(f.1.clone())) {
                    return num;
                }
                let den = poly.format(&Elem::Poly(f.1.clone()));
                let num = if is_sum(&num) { format!("({num})") } else { num };
                format!("{num}/{}", paren_product(&den))
            }
            (RingKind::Quotient { base, name, .. }, Elem::Ext(v)) => dense::format(base, v, name),
            _ => panic!("element {:?} does not belong to {}", e, self.describe()),
        }
    }
}
