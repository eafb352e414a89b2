//! Truncated bilateral series in the y-outer order: sum y^a x^b c_{ab} with
//! integer exponents bounded above and group-algebra coefficients on the
//! right.
//!
//! Reordering a generator past a power never raises the total degree a + b
//! (each swap costs exactly 2), so an element stored down to a total-degree
//! cutoff stays exact above that cutoff through sums and products. The
//! cutoff is tracked explicitly and widens through multiplication by the
//! partner's top total degree.

use std::collections::BTreeMap;

use crate::algebra::{normal_y_x, sigma_x, AlgElem, CtxRef, GAlgElem};
use crate::scalars::CycScalar;
use crate::{Error, Result};

use super::loc::{LocElemX, LocElemY};

#[derive(Clone)]
pub struct BiSeries {
    ctx: CtxRef,
    /// (a, b) -> c for the term y^a x^b c.
    terms: BTreeMap<(i64, i64), GAlgElem>,
    /// Terms with a + b < cutoff have been dropped; the element is exact at
    /// and above it.
    cutoff: i64,
}

impl std::fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BiSeries(cutoff={}, {} terms)", self.cutoff, self.terms.len())
    }
}

impl BiSeries {
    pub fn zero(ctx: &CtxRef, cutoff: i64) -> Self {
        BiSeries { ctx: ctx.clone(), terms: BTreeMap::new(), cutoff }
    }

    pub fn term(ctx: &CtxRef, a: i64, b: i64, c: GAlgElem, cutoff: i64) -> Self {
        let mut s = Self::zero(ctx, cutoff);
        s.add_term(a, b, c);
        s
    }

    /// The left idempotent e_n as a series element.
    pub fn idem(ctx: &CtxRef, n: u32, cutoff: i64) -> Self {
        Self::term(ctx, 0, 0, GAlgElem::idem(ctx.m(), n as i64), cutoff)
    }

    pub fn ctx(&self) -> &CtxRef {
        &self.ctx
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), GAlgElem> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Max total degree of the stored support (None when empty).
    pub fn max_total(&self) -> Option<i64> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    fn add_term(&mut self, a: i64, b: i64, c: GAlgElem) {
        if c.is_zero() || a + b < self.cutoff {
            return;
        }
        let key = (a, b);
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn coefficient(&self, a: i64, b: i64) -> Option<GAlgElem> {
        if a + b < self.cutoff {
            return None;
        }
        Some(
            self.terms
                .get(&(a, b))
                .cloned()
                .unwrap_or_else(|| GAlgElem::zero(self.ctx.m())),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let cutoff = self.cutoff.max(o.cutoff);
        let mut out = Self::zero(&self.ctx, cutoff);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, c.clone());
        }
        for ((a, b), c) in &o.terms {
            out.add_term(*a, *b, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        BiSeries {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
            cutoff: self.cutoff,
        }
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        let mut out = Self::zero(&self.ctx, self.cutoff);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, c.mul_scalar(s));
        }
        out
    }

    pub fn mul_galg(&self, g: &GAlgElem) -> Self {
        let mut out = Self::zero(&self.ctx, self.cutoff);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, c.mul(g));
        }
        out
    }

    /// Right multiplication by x^{sign 1}.
    pub fn rmul_x(&self, up: bool) -> Self {
        let d = if up { 1 } else { -1 };
        let mut out = Self::zero(&self.ctx, self.cutoff);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b + d, c.shift(d));
        }
        out
    }

    /// Right multiplication by y:
    /// (y^a x^b c) y = y^{a+1} x^b c.shift(-1) + y^a x^{b-1} S_b c.shift(-1).
    pub fn rmul_y(&self) -> Self {
        let mut out = Self::zero(&self.ctx, self.cutoff);
        for ((a, b), c) in &self.terms {
            let cs = c.shift(-1);
            out.add_term(*a + 1, *b, cs.clone());
            let corr = sigma_x(&self.ctx, *b).mul(&cs);
            out.add_term(*a, *b - 1, corr);
        }
        out
    }

    /// Right multiplication by y^{-1} (descends; truncates at the cutoff):
    /// (y^a x^b c) y^{-1} = y^{a-1} x^b c.shift(1) - (y^{a-1} x^{b-1} S_b c) y^{-1}.
    pub fn rmul_y_inv(&self) -> Self {
        let mut out = Self::zero(&self.ctx, self.cutoff);
        for ((a, b), c) in &self.terms {
            term_y_inv(&self.ctx, *a, *b, c, &mut out);
        }
        out
    }

    /// Right multiplication by the monomial y^a x^b.
    pub fn rmul_monomial(&self, a: i64, b: i64) -> Self {
        let mut acc = self.clone();
        for _ in 0..a.unsigned_abs() {
            acc = if a > 0 { acc.rmul_y() } else { acc.rmul_y_inv() };
        }
        for _ in 0..b.unsigned_abs() {
            acc = acc.rmul_x(b > 0);
        }
        acc
    }

    /// Full product. The result is exact above
    /// max(self.cutoff + o.maxtot, o.cutoff + self.maxtot, floor).
    pub fn mul(&self, o: &Self, floor: i64) -> Self {
        let mut cutoff = floor;
        if let (Some(t1), Some(t2)) = (self.max_total(), o.max_total()) {
            cutoff = cutoff.max(self.cutoff + t2).max(o.cutoff + t1);
        } else {
            // a factor is identically zero above its cutoff
            cutoff = cutoff.max(self.cutoff.min(o.cutoff));
            return Self::zero(&self.ctx, cutoff);
        }
        let mut out = Self::zero(&self.ctx, cutoff);
        for ((a, b), d) in &o.terms {
            // work at the output cutoff so the y^{-1} cascade terminates
            let mut part = self.clone();
            part.cutoff = cutoff;
            part.terms.retain(|(ta, tb), _| ta + tb >= cutoff);
            let part = part.rmul_monomial(*a, *b).mul_galg(d);
            out = out.add(&part);
        }
        out.cutoff = cutoff;
        out.terms.retain(|(a, b), _| a + b >= cutoff);
        out
    }

    /// Drop every term with a negative x exponent (the acute rho_x on the
    /// doubly-localized side).
    pub fn drop_neg_x(&self) -> Self {
        let mut out = Self::zero(&self.ctx, self.cutoff);
        for ((a, b), c) in &self.terms {
            if *b >= 0 {
                out.add_term(*a, *b, c.clone());
            }
        }
        out
    }

    /// Drop every term with a negative y exponent (the grave rho_y).
    pub fn drop_neg_y(&self) -> Self {
        let mut out = Self::zero(&self.ctx, self.cutoff);
        for ((a, b), c) in &self.terms {
            if *a >= 0 {
                out.add_term(*a, *b, c.clone());
            }
        }
        out
    }

    /// The positive quadrant, converted to a PBW element. Exactness requires
    /// the cutoff at or below zero.
    pub fn positive_quadrant_alg(&self) -> Result<AlgElem> {
        if self.cutoff > 0 {
            return Err(Error::WindowError(format!(
                "series cutoff {} leaves the positive quadrant incomplete",
                self.cutoff
            )));
        }
        let mut out = AlgElem::zero(&self.ctx);
        for ((a, b), c) in &self.terms {
            if *a < 0 || *b < 0 {
                continue;
            }
            let mono = normal_y_x(&self.ctx, *a as u32, *b as u32);
            out = out.add(&mono.mul_coeff(c));
        }
        Ok(out)
    }

    /// Equality of all coefficients at or above the coarser cutoff.
    pub fn agrees_with(&self, o: &Self) -> bool {
        let cutoff = self.cutoff.max(o.cutoff);
        let keys: std::collections::BTreeSet<(i64, i64)> = self
            .terms
            .keys()
            .chain(o.terms.keys())
            .filter(|(a, b)| a + b >= cutoff)
            .copied()
            .collect();
        for (a, b) in keys {
            let x = self.coefficient(a, b).unwrap();
            let y = o.coefficient(a, b).unwrap();
            if x != y {
                return false;
            }
        }
        true
    }

    /// Expansion of an x-outer localized element at infinity in x, reordered
    /// into the y-outer series form.
    pub fn from_loc_x(v: &LocElemX, cutoff: i64) -> Self {
        let ctx = v.ctx().clone();
        let n = v.idem_index() as i64;
        let mut out = Self::zero(&ctx, cutoff);
        for (l, f) in v.parts() {
            // expand f down to x-exponent cutoff - l (lower terms cannot
            // reach the cutoff after reordering)
            let (qpoly, tail) = {
                let min_exp = cutoff - *l as i64;
                let depth = if min_exp <= 0 { (-min_exp) as usize + 1 } else { 0 };
                f.expand_at_infinity(depth)
            };
            let mut flat = Self::zero(&ctx, cutoff);
            for (t, c) in qpoly.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    flat.add_term(0, t as i64, GAlgElem::idem(ctx.m(), n - t as i64).mul_scalar(c));
                }
            }
            for (s, c) in tail.iter().enumerate() {
                let t = -(s as i64) - 1;
                if !c.is_zero() {
                    flat.add_term(0, t, GAlgElem::idem(ctx.m(), n - t).mul_scalar(c));
                }
            }
            for _ in 0..*l {
                flat = flat.rmul_y();
            }
            out = out.add(&flat);
        }
        out
    }

    /// Expansion of a y-outer localized element: already ordered.
    pub fn from_loc_y(v: &LocElemY, cutoff: i64) -> Self {
        let ctx = v.ctx().clone();
        let n = v.idem_index() as i64;
        let mut out = Self::zero(&ctx, cutoff);
        for (k, g) in v.parts() {
            let min_exp = cutoff - *k as i64;
            let depth = if min_exp <= 0 { (-min_exp) as usize + 1 } else { 0 };
            let (qpoly, tail) = g.expand_at_infinity(depth);
            for (t, c) in qpoly.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    let coeff =
                        GAlgElem::idem(ctx.m(), n + t as i64 - *k as i64).mul_scalar(c);
                    out.add_term(t as i64, *k as i64, coeff);
                }
            }
            for (s, c) in tail.iter().enumerate() {
                let t = -(s as i64) - 1;
                if !c.is_zero() {
                    let coeff = GAlgElem::idem(ctx.m(), n + t - *k as i64).mul_scalar(c);
                    out.add_term(t, *k as i64, coeff);
                }
            }
        }
        out
    }

    /// Inverse of e_n + (terms of negative total degree), as a geometric
    /// series down to the cutoff.
    pub fn invert_unipotent(&self, n: u32) -> Result<Self> {
        let m = self.ctx.m();
        let unit = GAlgElem::idem(m, n as i64);
        match self.coefficient(0, 0) {
            Some(c) if c == unit => {}
            _ => {
                return Err(Error::WindowError(
                    "series is not of the form e_n + lower".into(),
                ))
            }
        }
        for ((a, b), _) in &self.terms {
            if *a + *b > 0 {
                return Err(Error::WindowError("series has terms above degree zero".into()));
            }
        }
        let e = Self::term(&self.ctx, 0, 0, unit, self.cutoff);
        let s = e.sub(self); // strictly negative total degree
        let mut total = e.clone();
        let mut power = e.clone();
        loop {
            power = power.mul(&s, self.cutoff);
            if power.is_empty() {
                break;
            }
            total = total.add(&power);
        }
        Ok(total)
    }
}

fn term_y_inv(ctx: &CtxRef, a: i64, b: i64, c: &GAlgElem, out: &mut BiSeries) {
    if a - 1 + b < out.cutoff && a - 2 + b < out.cutoff {
        // both the main term and the whole correction cascade are below
        return;
    }
    out.add_term(a - 1, b, c.shift(1));
    let corr = sigma_x(ctx, b).mul(c).neg();
    if !corr.is_zero() {
        term_y_inv(ctx, a - 1, b - 1, &corr, out);
    }
}
