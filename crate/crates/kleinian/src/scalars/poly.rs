//! Dense univariate polynomials over Q(zeta_m).
//!
//! Coefficients ascend; the vector is empty for zero, last entry nonzero
//! otherwise. The variable name is not part of the type — `RatFunc` carries
//! the x/y tag.

use crate::scalars::cyc::CycScalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    m: u32,
    c: Vec<CycScalar>,
}

impl Poly {
    pub fn zero(m: u32) -> Self {
        Poly { m, c: vec![] }
    }

    pub fn one(m: u32) -> Self {
        Poly { m, c: vec![CycScalar::one(m)] }
    }

    pub fn constant(s: CycScalar) -> Self {
        let m = s.order();
        let mut p = Poly { m, c: vec![s] };
        p.normalize();
        p
    }

    pub fn var(m: u32) -> Self {
        Poly { m, c: vec![CycScalar::zero(m), CycScalar::one(m)] }
    }

    pub fn monomial(s: CycScalar, deg: usize) -> Self {
        let m = s.order();
        if s.is_zero() {
            return Self::zero(m);
        }
        let mut c = vec![CycScalar::zero(m); deg + 1];
        c[deg] = s;
        Poly { m, c }
    }

    pub fn from_coeffs(m: u32, c: Vec<CycScalar>) -> Self {
        let mut p = Poly { m, c };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.c.last().map(|x| x.is_zero()).unwrap_or(false) {
            self.c.pop();
        }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> CycScalar {
        self.c.get(k).cloned().unwrap_or_else(|| CycScalar::zero(self.m))
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn leading(&self) -> Option<&CycScalar> {
        self.c.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).add(&other.coeff(i)));
        }
        Self::from_coeffs(self.m, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly { m: self.m, c: self.c.iter().map(|x| x.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.m);
        }
        let mut c = vec![CycScalar::zero(self.m); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(self.m, c)
    }

    pub fn mul_scalar(&self, s: &CycScalar) -> Self {
        Self::from_coeffs(self.m, self.c.iter().map(|x| x.mul(s)).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![CycScalar::zero(self.m); k];
        c.extend(self.c.iter().cloned());
        Poly { m: self.m, c }
    }

    /// Exact division with remainder by a nonzero divisor.
    pub fn divrem(&self, den: &Self) -> (Self, Self) {
        assert!(!den.is_zero(), "division by zero polynomial");
        let dd = den.c.len() - 1;
        let lead_inv = den.c[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (Self::zero(self.m), self.clone());
        }
        let mut quot = vec![CycScalar::zero(self.m); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (i, d) in den.c.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&c.mul(d));
            }
        }
        (Self::from_coeffs(self.m, quot), Self::from_coeffs(self.m, rem))
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Normalize to a monic polynomial (or zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.mul_scalar(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, at: &CycScalar) -> CycScalar {
        let mut acc = CycScalar::zero(self.m);
        for c in self.c.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// p(c * x): scales coefficient k by c^k. Used by the sector projector.
    pub fn scale_var(&self, c: &CycScalar) -> Self {
        let mut pow = CycScalar::one(self.m);
        let mut out = Vec::with_capacity(self.c.len());
        for a in &self.c {
            out.push(a.mul(&pow));
            pow = pow.mul(c);
        }
        Self::from_coeffs(self.m, out)
    }

    /// Keep only the coefficients with exponent congruent to r mod `modulus`.
    pub fn sector_slice(&self, r: u32, modulus: u32) -> Self {
        let mut out = vec![CycScalar::zero(self.m); self.c.len()];
        for (k, a) in self.c.iter().enumerate() {
            if (k as u32) % modulus == r % modulus {
                out[k] = a.clone();
            }
        }
        Self::from_coeffs(self.m, out)
    }

    /// True if every exponent with a nonzero coefficient is congruent to
    /// r mod `modulus`.
    pub fn is_sector_pure(&self, r: u32, modulus: u32) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(k, a)| a.is_zero() || (k as u32) % modulus == r % modulus)
    }
}
