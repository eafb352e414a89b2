//! The cyclotomic field Q(zeta_m), represented as Q[t]/(Phi_m(t)).
//!
//! An element stores its residue as a dense coefficient vector of length
//! phi(m) = deg Phi_m. For m = 1 and m = 2 the field degenerates to plain
//! rationals (phi(m) = 1) through the same code path. The string form is
//! parseable back, e.g. `-3/7`, `z^2`, `1/2+z-2*z^3`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational number.
pub type Rat = BigRational;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

// ---- Cyclotomic polynomials ----

/// Divide `num` by the monic polynomial `den` over Q, asserting exactness.
/// Both are dense ascending coefficient vectors.
fn exact_div(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let mut rem: Vec<Rat> = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        assert!(rem.iter().all(|c| c.is_zero()));
        return vec![];
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let v = &rem[k + i] - &c * d;
            rem[k + i] = v;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// The m-th cyclotomic polynomial as dense ascending coefficients,
/// computed by Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d.
fn cyclotomic_poly(m: u32) -> Vec<Rat> {
    assert!(m >= 1);
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rat>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let phi = if m == 1 {
        vec![rat(-1, 1), rat(1, 1)]
    } else {
        let mut num = vec![Rat::zero(); (m + 1) as usize];
        num[0] = rat(-1, 1);
        num[m as usize] = rat(1, 1);
        let mut q = num;
        for d in 1..m {
            if m % d == 0 {
                q = exact_div(&q, &cyclotomic_poly(d));
            }
        }
        q
    };
    cache.lock().unwrap().insert(m, phi.clone());
    phi
}

/// Euler phi, as the degree of Phi_m.
pub fn euler_phi(m: u32) -> usize {
    cyclotomic_poly(m).len() - 1
}

// ---- CycScalar ----

/// An element of Q(zeta_m), stored as the residue of a polynomial in the
/// class `z` of `t` modulo Phi_m. Coefficients have fixed length phi(m).
#[derive(Clone, PartialEq, Eq)]
pub struct CycScalar {
    m: u32,
    c: Vec<Rat>,
}

impl CycScalar {
    pub fn zero(m: u32) -> Self {
        CycScalar { m, c: vec![Rat::zero(); euler_phi(m)] }
    }

    pub fn one(m: u32) -> Self {
        Self::from_rat(m, Rat::one())
    }

    pub fn from_rat(m: u32, r: Rat) -> Self {
        let mut s = Self::zero(m);
        s.c[0] = r;
        s
    }

    pub fn from_int(m: u32, n: i64) -> Self {
        Self::from_rat(m, rat(n, 1))
    }

    /// The class of t, i.e. a fixed primitive m-th root of unity.
    pub fn zeta(m: u32) -> Self {
        Self::zeta_pow(m, 1)
    }

    /// zeta^j for any integer j (reduced mod m).
    pub fn zeta_pow(m: u32, j: i64) -> Self {
        let jm = j.rem_euclid(m as i64) as u32;
        // reduce t^jm mod Phi_m
        let mut raw = vec![Rat::zero(); jm as usize + 1];
        raw[jm as usize] = Rat::one();
        Self::reduce(m, raw)
    }

    fn reduce(m: u32, mut raw: Vec<Rat>) -> Self {
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        while raw.len() > deg {
            let k = raw.len() - 1;
            let c = raw[k].clone();
            if !c.is_zero() {
                for i in 0..deg {
                    let v = &raw[k - deg + i] - &c * &phi[i];
                    raw[k - deg + i] = v;
                }
            }
            raw.pop();
        }
        raw.resize(deg, Rat::zero());
        CycScalar { m, c: raw }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// Some(r) if the element lies in the rational subfield.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(self.m, other.m, "mixed cyclotomic orders");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        let c = self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect();
        CycScalar { m: self.m, c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same(other);
        let c = self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect();
        CycScalar { m: self.m, c }
    }

    pub fn neg(&self) -> Self {
        CycScalar { m: self.m, c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same(other);
        let n = self.c.len();
        let mut raw = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &raw[i + j] + a * b;
                raw[i + j] = v;
            }
        }
        Self::reduce(self.m, raw)
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        CycScalar { m: self.m, c: self.c.iter().map(|a| a * r).collect() }
    }

    /// Field inverse via the extended Euclidean algorithm in Q[t] mod Phi_m.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // extended euclid on (a, Phi): u*a + v*Phi = g, g constant
        let phi = cyclotomic_poly(self.m);
        let mut r0: Vec<Rat> = phi.clone();
        let mut r1: Vec<Rat> = self.c.clone();
        trim(&mut r1);
        let mut u0: Vec<Rat> = vec![];
        let mut u1: Vec<Rat> = vec![Rat::one()];
        while deg(&r1) > 0 {
            let (q, r) = poly_divrem(&r0, &r1);
            let uq = poly_sub(&u0, &poly_mul(&q, &u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = uq;
        }
        assert!(!r1.is_empty(), "Phi_m must be coprime to a nonzero residue");
        let g = r1[0].clone();
        let inv_c: Vec<Rat> = u1.iter().map(|x| x / &g).collect();
        Ok(Self::reduce(self.m, inv_c))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.m);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

// helpers on raw dense Q[t] vectors (ascending, trimmed)
fn deg(p: &[Rat]) -> isize {
    p.len() as isize - 1
}

fn trim(p: &mut Vec<Rat>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        let v = &out[i] - c;
        out[i] = v;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let v = &out[i + j] + x * y;
            out[i + j] = v;
        }
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in b.iter().enumerate() {
            let v = &rem[k + i] - &c * d;
            rem[k + i] = v;
        }
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

// ---- Display / parsing ----

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycScalar {
    /// Renders `c0 + c1*z + c2*z^2 + ...`; pure rationals render bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rat() {
            return write!(f, "{}", fmt_rat(&r));
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if k == 0 {
                write!(f, "{}", fmt_rat(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", fmt_rat(&mag))?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{}", k)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc(m={}, {})", self.m, self)
    }
}

/// Parse a scalar string: signed rational and `z`-power terms joined by
/// `+`/`-`, e.g. `-3/7`, `z^2`, `1/2+z-2*z^3`. Whitespace is ignored.
pub fn parse_scalar(m: u32, s: &str) -> Result<CycScalar> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::ParseError("empty scalar".into()));
    }
    let bytes = compact.as_bytes();
    let mut out = CycScalar::zero(m);
    let mut i = 0usize;
    let mut sign = Rat::one();
    // leading sign
    if bytes[i] == b'+' {
        i += 1;
    } else if bytes[i] == b'-' {
        sign = -Rat::one();
        i += 1;
    }
    loop {
        if i >= bytes.len() {
            return Err(Error::ParseError(format!("dangling sign in `{s}`")));
        }
        // term: [rational][*][z[^k]]
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let num_str = &compact[start..i];
        let mut coeff = if num_str.is_empty() {
            Rat::one()
        } else {
            parse_rat(num_str)?
        };
        coeff *= sign.clone();
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let mut power = 0usize;
        if i < bytes.len() && bytes[i] == b'z' {
            i += 1;
            power = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let ps = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                power = compact[ps..i]
                    .parse::<usize>()
                    .map_err(|_| Error::ParseError(format!("bad exponent in `{s}`")))?;
            }
        } else if num_str.is_empty() {
            return Err(Error::ParseError(format!("expected term in `{s}`")));
        }
        let term = CycScalar::zeta_pow(m, power as i64).mul_rat(&coeff);
        out = out.add(&term);
        if i >= bytes.len() {
            break;
        }
        match bytes[i] {
            b'+' => {
                sign = Rat::one();
                i += 1;
            }
            b'-' => {
                sign = -Rat::one();
                i += 1;
            }
            _ => {
                return Err(Error::ParseError(format!(
                    "unexpected `{}` in `{s}`",
                    compact[i..].chars().next().unwrap()
                )))
            }
        }
    }
    Ok(out)
}

fn parse_rat(s: &str) -> Result<Rat> {
    let mk = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::ParseError(format!("bad integer `{t}`")))
    };
    if let Some((n, d)) = s.split_once('/') {
        let den = mk(d)?;
        if den.is_zero() {
            return Err(Error::ParseError("zero denominator".into()));
        }
        Ok(Rat::new(mk(n)?, den))
    } else {
        Ok(Rat::from(mk(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(m: u32, n: i64) -> CycScalar {
        CycScalar::from_int(m, n)
    }

    #[test]
    fn cyclotomic_polys_small() {
        // Phi_4 = t^2 + 1, Phi_2 = t + 1, Phi_6 = t^2 - t + 1
        assert_eq!(cyclotomic_poly(4), vec![rat(1, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(cyclotomic_poly(2), vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(cyclotomic_poly(6), vec![rat(1, 1), rat(-1, 1), rat(1, 1)]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn zeta_relations() {
        // m=4: zeta * zeta = -1
        let z = CycScalar::zeta(4);
        assert_eq!(z.mul(&z), c(4, -1));
        // m=2: zeta = -1 as a rational constant
        assert_eq!(CycScalar::zeta(2).as_rat(), Some(rat(-1, 1)));
        // zeta^m = 1 for several m
        for m in [1u32, 2, 3, 4, 6, 5] {
            assert!(CycScalar::zeta(m).pow(m as i64).unwrap().is_one());
        }
    }

    #[test]
    fn m3_product_example() {
        // (1+zeta)(1+zeta^2) = 1 + zeta + zeta^2 + zeta^3 = 0 + 1 = 1
        // (expand modulo t^2 + t + 1 by hand: zeta^2 = -1-zeta, zeta^3 = 1)
        let z = CycScalar::zeta(3);
        let a = c(3, 1).add(&z);
        let b = c(3, 1).add(&z.mul(&z));
        assert!(a.mul(&b).is_one());
    }

    fn random_scalar(m: u32, rng: &mut ChaCha8Rng) -> CycScalar {
        let phi = euler_phi(m);
        let c: Vec<Rat> = (0..phi)
            .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
            .collect();
        CycScalar { m, c }
    }

    #[test]
    fn field_axioms_fuzz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in [1u32, 2, 3, 4, 6] {
            for _ in 0..500 {
                let a = random_scalar(m, &mut rng);
                let b = random_scalar(m, &mut rng);
                let cc = random_scalar(m, &mut rng);
                // associativity + commutativity + distributivity
                assert_eq!(a.mul(&b).mul(&cc), a.mul(&b.mul(&cc)));
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.mul(&b.add(&cc)), a.mul(&b).add(&a.mul(&cc)));
                // inverses
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn inversion_of_zero_fails() {
        assert!(matches!(CycScalar::zero(4).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn rational_embedding_agrees() {
        let a = CycScalar::from_rat(6, rat(3, 7));
        let b = CycScalar::from_rat(6, rat(-2, 5));
        assert_eq!(a.mul(&b).as_rat(), Some(rat(3, 7) * rat(-2, 5)));
        assert_eq!(a.add(&b).as_rat(), Some(rat(3, 7) + rat(-2, 5)));
    }

    #[test]
    fn display_parse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in [1u32, 3, 4, 6] {
            for _ in 0..50 {
                let a = random_scalar(m, &mut rng);
                let s = a.to_string();
                let back = parse_scalar(m, &s).unwrap();
                assert_eq!(a, back, "round trip failed for `{s}`");
            }
        }
        assert_eq!(parse_scalar(4, "-3/7").unwrap(), CycScalar::from_rat(4, rat(-3, 7)));
        assert_eq!(parse_scalar(4, "z^2").unwrap(), c(4, -1));
    }
}
