//! Rational functions in one variable over Q(zeta_m), tagged by the variable
//! x or y, with the polynomial-part split and the sector projector.
//!
//! Canonical form: gcd(num, den) = 1 and den monic; zero is 0/1.

use crate::scalars::cyc::CycScalar;
use crate::scalars::poly::Poly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn flip(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    pub var: Var,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero(m: u32, var: Var) -> Self {
        RatFunc { var, num: Poly::zero(m), den: Poly::one(m) }
    }

    pub fn one(m: u32, var: Var) -> Self {
        RatFunc { var, num: Poly::one(m), den: Poly::one(m) }
    }

    pub fn from_poly(var: Var, p: Poly) -> Self {
        RatFunc { var, den: Poly::one(p.order()), num: p }
    }

    pub fn from_parts(var: Var, num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = RatFunc { var, num, den };
        f.reduce();
        f
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.order());
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.divrem(&g).0;
            self.den = self.den.divrem(&g).0;
        }
        let lead = self.den.leading().unwrap().clone();
        if !lead.is_one() {
            let li = lead.inv().unwrap();
            self.num = self.num.mul_scalar(&li);
            self.den = self.den.mul_scalar(&li);
        }
    }

    pub fn order(&self) -> u32 {
        self.num.order()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// deg num - deg den; the top exponent of the expansion at infinity.
    /// None for the zero function.
    pub fn top_exponent(&self) -> Option<i64> {
        self.num.degree().map(|dn| dn as i64 - self.den.degree().unwrap() as i64)
    }

    fn assert_compat(&self, other: &Self) {
        assert_eq!(self.var, other.var, "mixed variables");
        assert_eq!(self.order(), other.order(), "mixed cyclotomic orders");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compat(other);
        Self::from_parts(
            self.var,
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { var: self.var, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compat(other);
        Self::from_parts(self.var, self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_scalar(&self, s: &CycScalar) -> Self {
        Self::from_parts(self.var, self.num.mul_scalar(s), self.den.clone())
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        Self::from_parts(self.var, self.num.mul(p), self.den.clone())
    }

    pub fn inv(&self) -> crate::Result<Self> {
        if self.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(Self::from_parts(self.var, self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> crate::Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// f = poly + proper with deg num(proper) < deg den(proper); unique.
    pub fn poly_part(&self) -> (Poly, RatFunc) {
        let (q, r) = self.num.divrem(&self.den);
        (q, RatFunc::from_parts(self.var, r, self.den.clone()))
    }

    /// True if deg num < deg den (the polynomial part vanishes).
    pub fn is_proper(&self) -> bool {
        match self.top_exponent() {
            None => true,
            Some(t) => t < 0,
        }
    }

    /// Keep exactly the variable-powers congruent to r mod `modulus` of the
    /// expansion: (1/modulus) * sum_j zeta^{-jr} f(zeta^j * var).
    pub fn sector_project(&self, r: u32, modulus: u32) -> Self {
        let m = self.order();
        assert_eq!(m, modulus, "sector modulus must match the cyclotomic order");
        if modulus == 1 {
            return self.clone();
        }
        let mut acc = Self::zero(m, self.var);
        for j in 0..modulus {
            let zj = CycScalar::zeta_pow(m, j as i64);
            let w = CycScalar::zeta_pow(m, -((j * r) as i64));
            let twisted = Self::from_parts(
                self.var,
                self.num.scale_var(&zj).mul_scalar(&w),
                self.den.scale_var(&zj),
            );
            acc = acc.add(&twisted);
        }
        let inv_m = CycScalar::from_rat(m, num::BigRational::new(1.into(), (modulus as i64).into()));
        acc.mul_scalar(&inv_m)
    }

    /// Laurent coefficients at infinity: returns (polynomial part, tail) where
    /// tail[t] is the coefficient of var^{-(t+1)} for t = 0..depth-1.
    pub fn expand_at_infinity(&self, depth: usize) -> (Poly, Vec<CycScalar>) {
        let m = self.order();
        let (q, proper) = self.poly_part();
        let mut tail = vec![CycScalar::zero(m); depth];
        if proper.is_zero() {
            return (q, tail);
        }
        let u = proper.num;
        let v = proper.den; // monic, deg v > deg u
        let dv = v.degree().unwrap();
        // u = v * sum_{t>=1} a_t var^{-t}; match coefficients of var^{dv-t}.
        for t in 1..=depth {
            let target = if dv >= t { u.coeff(dv - t) } else { CycScalar::zero(m) };
            let mut s = target;
            for r in 1..t {
                // v-coefficient at dv - (t - r)
                let idx = dv as i64 - (t as i64 - r as i64);
                if idx >= 0 {
                    s = s.sub(&tail[r - 1].mul(&v.coeff(idx as usize)));
                }
            }
            tail[t - 1] = s;
        }
        (q, tail)
    }
}
