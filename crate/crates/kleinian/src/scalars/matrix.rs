//! Exact dense linear algebra over Q(zeta_m).
//!
//! Gaussian elimination over the field gives det, rank, solve, and nullspace;
//! the Faddeev-LeVerrier recursion gives the characteristic polynomial of the
//! pencil xI - A together with its adjugate, which also yields adj(A) and
//! charpoly for plain matrices. All results are exact.

use crate::scalars::cyc::CycScalar;
use crate::scalars::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    m: u32,
    rows: usize,
    cols: usize,
    e: Vec<CycScalar>,
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    pub fn zeros(m: u32, rows: usize, cols: usize) -> Self {
        ExactMatrix { m, rows, cols, e: vec![CycScalar::zero(m); rows * cols] }
    }

    pub fn identity(m: u32, n: usize) -> Self {
        let mut out = Self::zeros(m, n, n);
        for i in 0..n {
            out.set(i, i, CycScalar::one(m));
        }
        out
    }

    pub fn from_fn(m: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycScalar) -> Self {
        let mut out = Self::zeros(m, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, f(r, c));
            }
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &CycScalar {
        &self.e[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycScalar) {
        self.e[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeError(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let e = self.e.iter().zip(&other.e).map(|(a, b)| a.add(b)).collect();
        Ok(ExactMatrix { m: self.m, rows: self.rows, cols: self.cols, e })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            m: self.m,
            rows: self.rows,
            cols: self.cols,
            e: self.e.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeError(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.m, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.at(r, c).add(&a.mul(other.at(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, s: &CycScalar) -> Self {
        ExactMatrix {
            m: self.m,
            rows: self.rows,
            cols: self.cols,
            e: self.e.iter().map(|x| x.mul(s)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.m, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = CycScalar::zero(self.m);
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.at(i, i));
        }
        t
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeError("pow needs a square matrix".into()));
        }
        let mut acc = Self::identity(self.m, self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    // ---- Elimination ----

    /// Row echelon reduction in place; returns pivot column indices and the
    /// determinant scale (product of pivots with sign), meaningful only when
    /// square. Full reduced row echelon form.
    fn rref(&self) -> (Self, Vec<usize>, CycScalar) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut det = CycScalar::one(self.m);
        let mut r = 0usize;
        for c in 0..a.cols {
            if r >= a.rows {
                break;
            }
            // find pivot
            let mut pr = None;
            for i in r..a.rows {
                if !a.at(i, c).is_zero() {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != r {
                for cc in 0..a.cols {
                    let x = a.at(pr, cc).clone();
                    let y = a.at(r, cc).clone();
                    a.set(pr, cc, y);
                    a.set(r, cc, x);
                }
                det = det.neg();
            }
            let p = a.at(r, c).clone();
            det = det.mul(&p);
            let pi = p.inv().unwrap();
            for cc in 0..a.cols {
                let v = a.at(r, cc).mul(&pi);
                a.set(r, cc, v);
            }
            for i in 0..a.rows {
                if i != r && !a.at(i, c).is_zero() {
                    let f = a.at(i, c).clone();
                    for cc in 0..a.cols {
                        let v = a.at(i, cc).sub(&f.mul(a.at(r, cc)));
                        a.set(i, cc, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots, det)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<CycScalar> {
        if !self.is_square() {
            return Err(Error::ShapeError("det needs a square matrix".into()));
        }
        let (_, pivots, det) = self.rref();
        if pivots.len() < self.rows {
            return Ok(CycScalar::zero(self.m));
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::ShapeError("inverse needs a square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.m, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, CycScalar::one(self.m));
        }
        let (red, pivots, _) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = Self::zeros(self.m, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.at(r, n + c).clone());
            }
        }
        Ok(Some(inv))
    }

    /// Basis of the right nullspace, as columns.
    pub fn nullspace(&self) -> Vec<Vec<CycScalar>> {
        let (red, pivots, _) = self.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![CycScalar::zero(self.m); self.cols];
            v[fc] = CycScalar::one(self.m);
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = red.at(ri, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve self * z = rhs. Returns None when inconsistent; otherwise a
    /// particular solution together with a nullspace basis.
    pub fn solve(&self, rhs: &[CycScalar]) -> Option<(Vec<CycScalar>, Vec<Vec<CycScalar>>)> {
        assert_eq!(rhs.len(), self.rows, "rhs length mismatch");
        let mut aug = Self::zeros(self.m, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let (red, pivots, _) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut part = vec![CycScalar::zero(self.m); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            part[pc] = red.at(ri, self.cols).clone();
        }
        Some((part, self.nullspace()))
    }

    // ---- Characteristic polynomial and adjugates ----

    /// Faddeev-LeVerrier on the pencil: returns the monic characteristic
    /// polynomial p(x) = det(xI - A) and the coefficient matrices B_k with
    /// adj(xI - A) = sum_k B_k x^k (k = 0..n-1). Requires a square matrix.
    pub fn pencil(&self) -> Result<(Poly, Vec<ExactMatrix>)> {
        if !self.is_square() {
            return Err(Error::ShapeError("pencil needs a square matrix".into()));
        }
        let n = self.rows;
        let m = self.m;
        let mut coeffs = vec![CycScalar::zero(m); n + 1];
        coeffs[n] = CycScalar::one(m);
        let mut mats: Vec<ExactMatrix> = Vec::with_capacity(n);
        let mut mk = Self::identity(m, n); // M_1 = I
        for k in 1..=n {
            if k > 1 {
                // M_k = A*M_{k-1} + c_{n-k+1} I
                let mut next = self.mul(&mk)?;
                let c = coeffs[n - k + 1].clone();
                for i in 0..n {
                    let v = next.at(i, i).add(&c);
                    next.set(i, i, v);
                }
                mk = next;
            }
            // c_{n-k} = -tr(A*M_k)/k
            let t = self.mul(&mk)?.trace();
            let kk = CycScalar::from_int(m, k as i64).inv().unwrap();
            coeffs[n - k] = t.neg().mul(&kk);
            mats.push(mk.clone());
        }
        // adj(xI - A) = sum_{k=1..n} M_k x^{n-k}
        let mut adj = vec![Self::zeros(m, n, n); n.max(1)];
        if n == 0 {
            adj.clear();
        }
        for (k, mkk) in mats.iter().enumerate() {
            adj[n - 1 - k] = mkk.clone();
        }
        Ok((Poly::from_coeffs(m, coeffs), adj))
    }

    /// Monic characteristic polynomial det(xI - A).
    pub fn charpoly(&self) -> Result<Poly> {
        Ok(self.pencil()?.0)
    }

    /// Classical adjoint: adj(A) * A = A * adj(A) = det(A) I.
    pub fn adjugate(&self) -> Result<Self> {
        let (_, adj_pencil) = self.pencil()?;
        let n = self.rows;
        if n == 0 {
            return Ok(Self::zeros(self.m, 0, 0));
        }
        // adj(A) = adj(xI - B)|_{x=0, B=-A} with sign bookkeeping:
        // adj(-(A)) at the pencil of -A evaluated in 0: adj(0*I - (-A)).
        // Simpler: adj(A) = (-1)^{n-1} * adj(xI - A)|_{x=0} with A in the
        // pencil? adj(xI - A) at x = 0 is adj(-A) = (-1)^{n-1} adj(A).
        let at0 = adj_pencil[0].clone();
        if n % 2 == 1 {
            Ok(at0)
        } else {
            Ok(at0.neg())
        }
    }

    /// Evaluate a polynomial at this matrix.
    pub fn eval_poly(&self, p: &Poly) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeError("eval_poly needs a square matrix".into()));
        }
        let n = self.rows;
        let mut acc = Self::zeros(self.m, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                let v = acc.at(i, i).add(c);
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }

    /// Column vector from a slice.
    pub fn col(m: u32, v: &[CycScalar]) -> Self {
        Self::from_fn(m, v.len(), 1, |r, _| v[r].clone())
    }

    /// Row vector from a slice.
    pub fn row(m: u32, v: &[CycScalar]) -> Self {
        Self::from_fn(m, 1, v.len(), |_, c| v[c].clone())
    }

    /// The single entry of a 1x1 matrix.
    pub fn scalar(&self) -> CycScalar {
        assert!(self.rows == 1 && self.cols == 1, "not a 1x1 matrix");
        self.e[0].clone()
    }

    pub fn column_vec(&self, c: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }
}
