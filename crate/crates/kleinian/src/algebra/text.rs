//! Text form of PBW elements, e.g. `x^2 y e0 + 3 e1 - (1/2+z) x e2`.
//! Rendering and parsing round-trip exactly; for m = 1 the idempotent
//! marker is omitted.

use std::fmt;

use crate::algebra::{AlgElem, CtxRef, GAlgElem};
use crate::scalars::cyc::parse_scalar;
use crate::scalars::CycScalar;
use crate::{Error, Result};

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.ctx().m();
        let mut pieces: Vec<(bool, String)> = Vec::new(); // (negative, body)
        let mut keys: Vec<&(u32, u32)> = self.terms().keys().collect();
        keys.sort_by_key(|(k, l)| (std::cmp::Reverse(k + l), std::cmp::Reverse(*k)));
        for (k, l) in keys.into_iter() {
            let c = &self.terms()[&(*k, *l)];
            for i in 0..m {
                let s = c.component(i as i64);
                if s.is_zero() {
                    continue;
                }
                let (neg, coeff_str) = render_coeff(&s);
                let mut body = String::new();
                if !coeff_str.is_empty() {
                    body.push_str(&coeff_str);
                }
                let mut push_factor = |t: String| {
                    if !body.is_empty() {
                        body.push(' ');
                    }
                    body.push_str(&t);
                };
                if *k == 1 {
                    push_factor("x".into());
                } else if *k > 1 {
                    push_factor(format!("x^{}", k));
                }
                if *l == 1 {
                    push_factor("y".into());
                } else if *l > 1 {
                    push_factor(format!("y^{}", l));
                }
                if m > 1 {
                    push_factor(format!("e{}", i));
                }
                if body.is_empty() {
                    body = "1".into();
                }
                pieces.push((neg, body));
            }
        }
        if pieces.is_empty() {
            return write!(f, "0");
        }
        for (idx, (neg, body)) in pieces.iter().enumerate() {
            if idx == 0 {
                if *neg {
                    write!(f, "-")?;
                }
            } else if *neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", body)?;
        }
        Ok(())
    }
}

/// Returns (is_negative, magnitude-string); empty string for magnitude 1.
fn render_coeff(s: &CycScalar) -> (bool, String) {
    if let Some(r) = s.as_rat() {
        use num::Signed;
        let neg = r.is_negative();
        let mag = r.abs();
        let mag_s = CycScalar::from_rat(s.order(), mag);
        if mag_s.is_one() {
            (neg, String::new())
        } else {
            (neg, mag_s.to_string())
        }
    } else {
        (false, format!("({})", s))
    }
}

/// Parse the text form back into a PBW element. Factors multiply in the
/// written order (so `y x` normalizes to `x y - tau`).
pub fn parse_alg_elem(ctx: &CtxRef, s: &str) -> Result<AlgElem> {
    let m = ctx.m();
    let mut out = AlgElem::zero(ctx);
    for (sign, term) in split_terms(s)? {
        if term.trim().is_empty() {
            return Err(Error::ParseError("empty term".into()));
        }
        let mut acc = AlgElem::one(ctx);
        if sign {
            acc = acc.neg();
        }
        for factor in tokenize_factors(term.trim())? {
            match factor {
                Factor::Scalar(text) => {
                    let c = parse_scalar(m, &text)?;
                    acc = acc.mul_scalar(&c);
                }
                Factor::X(k) => {
                    for _ in 0..k {
                        acc = acc.rmul_x();
                    }
                }
                Factor::Y(l) => {
                    for _ in 0..l {
                        acc = acc.rmul_y();
                    }
                }
                Factor::E(i) => {
                    if i >= m {
                        return Err(Error::ParseError(format!("idempotent e{i} out of range")));
                    }
                    acc = acc.mul_coeff(&GAlgElem::idem(m, i as i64));
                }
            }
        }
        out = out.add(&acc);
    }
    Ok(out)
}

enum Factor {
    Scalar(String),
    X(u32),
    Y(u32),
    E(u32),
}

/// Split on top-level + and - (not inside parentheses). Signs directly
/// before a term (including at the start) fold into that term's sign.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::ParseError("empty expression".into()));
    }
    if t == "0" {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = false;
    let mut started = false;
    for ch in t.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
                started = true;
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::ParseError("unbalanced parentheses".into()));
                }
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !started => {
                if ch == '-' {
                    sign = !sign;
                }
            }
            '+' | '-' if depth == 0 => {
                out.push((sign, std::mem::take(&mut cur)));
                sign = ch == '-';
                started = false;
            }
            c if c.is_whitespace() => cur.push(ch),
            _ => {
                cur.push(ch);
                started = true;
            }
        }
    }
    if depth != 0 {
        return Err(Error::ParseError("unbalanced parentheses".into()));
    }
    if started {
        out.push((sign, cur));
    } else if !cur.trim().is_empty() || sign {
        return Err(Error::ParseError("dangling sign".into()));
    }
    Ok(out)
}

fn tokenize_factors(term: &str) -> Result<Vec<Factor>> {
    let bytes = term.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() || c == '*' {
            i += 1;
            continue;
        }
        if c == '(' {
            let mut depth = 1;
            let start = i + 1;
            let mut j = i + 1;
            while j < bytes.len() && depth > 0 {
                match bytes[j] {
                    b'(' => depth += 1,
                    b')' => depth -= 1,
                    _ => {}
                }
                j += 1;
            }
            if depth != 0 {
                return Err(Error::ParseError("unbalanced parentheses".into()));
            }
            out.push(Factor::Scalar(term[start..j - 1].to_string()));
            i = j;
        } else if c == 'x' || c == 'y' {
            i += 1;
            let mut pow = 1u32;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                pow = term[start..i]
                    .parse()
                    .map_err(|_| Error::ParseError(format!("bad power in `{term}`")))?;
            }
            out.push(if c == 'x' { Factor::X(pow) } else { Factor::Y(pow) });
        } else if c == 'e' {
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(Error::ParseError(format!("bad idempotent in `{term}`")));
            }
            let idx: u32 = term[start..i]
                .parse()
                .map_err(|_| Error::ParseError(format!("bad idempotent in `{term}`")))?;
            out.push(Factor::E(idx));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                i += 1;
            }
            out.push(Factor::Scalar(term[start..i].to_string()));
        } else if c == 'z' {
            // bare root of unity without parentheses
            let start = i;
            i += 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push(Factor::Scalar(term[start..i].to_string()));
        } else {
            return Err(Error::ParseError(format!("unexpected `{c}` in `{term}`")));
        }
    }
    Ok(out)
}
