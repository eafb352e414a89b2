//! The two-term model of a point: the lambda functional, the cyclic
//! degree-zero module with its reduction engine, the differential, and the
//! nu action.
//!
//! The degree-zero module is never materialized; all computations are
//! windowed over the basis {(k, l)} <-> i_n x^k y^l. Acting by x reduces
//! through the twisted ideal relation
//! `i_n a (y x) = i_n a (x y) - i_n a tau + lambda(a) i_n`,
//! which is the whole content of the reduction engine.

use std::collections::BTreeMap;

use crate::algebra::{same_ctx, CtxRef};
use crate::quiver::QuiverPoint;
use crate::scalars::{CycScalar, ExactMatrix};
use crate::{Error, Result};

use serde::{Deserialize, Serialize};

/// The moments lambda_{kl} = jbar Ybar^l Xbar^k ibar for k, l <= bound,
/// the complete gauge invariant of a point.
#[derive(Clone, PartialEq, Eq)]
pub struct LambdaTable {
    ctx: CtxRef,
    n: u32,
    bound: u32,
    vals: Vec<Vec<CycScalar>>, // vals[k][l]
}

impl std::fmt::Debug for LambdaTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LambdaTable(m={}, n={}, bound={})", self.ctx.m(), self.n, self.bound)
    }
}

impl LambdaTable {
    /// Fill the table from a valid stable point (an unstable point would not
    /// be determined by its moments).
    pub fn from_point(p: &QuiverPoint, bound: u32) -> Result<LambdaTable> {
        if !p.is_stable() {
            return Err(Error::StabilityError);
        }
        let m = p.ctx().m();
        let nn = p.total_dim();
        // powers of Xbar and Ybar up to the bound
        let mut xpows = Vec::with_capacity(bound as usize + 1);
        let mut ypows = Vec::with_capacity(bound as usize + 1);
        xpows.push(ExactMatrix::identity(m, nn));
        ypows.push(ExactMatrix::identity(m, nn));
        for k in 1..=bound as usize {
            xpows.push(xpows[k - 1].mul(p.xbar())?);
            ypows.push(ypows[k - 1].mul(p.ybar())?);
        }
        let mut vals = vec![vec![CycScalar::zero(m); bound as usize + 1]; bound as usize + 1];
        for k in 0..=bound as usize {
            let xk_i = xpows[k].mul(p.ibar())?;
            for (l, row) in ypows.iter().enumerate() {
                let v = p.jbar().mul(&row.mul(&xk_i)?)?;
                vals[k][l] = v.scalar();
            }
        }
        Ok(LambdaTable { ctx: p.ctx().clone(), n: p.framing_index(), bound, vals })
    }

    /// Assemble a solved table (the ideal-side route).
    pub fn from_values(
        ctx: &CtxRef,
        n: u32,
        bound: u32,
        mut entries: BTreeMap<(u32, u32), CycScalar>,
    ) -> LambdaTable {
        let mut vals = vec![vec![CycScalar::zero(ctx.m()); bound as usize + 1]; bound as usize + 1];
        for ((k, l), v) in std::mem::take(&mut entries) {
            assert!(k <= bound && l <= bound, "entry outside the bound");
            vals[k as usize][l as usize] = v;
        }
        LambdaTable { ctx: ctx.clone(), n, bound, vals }
    }

    pub fn ctx(&self) -> &CtxRef {
        &self.ctx
    }

    pub fn framing_index(&self) -> u32 {
        self.n
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn at(&self, k: u32, l: u32) -> Result<CycScalar> {
        if k > self.bound || l > self.bound {
            return Err(Error::BoundError { needed: k.max(l), bound: self.bound });
        }
        Ok(self.vals[k as usize][l as usize].clone())
    }

    /// The support law: lambda_{kl} = 0 whenever k and l differ mod m.
    pub fn support_ok(&self) -> bool {
        let m = self.ctx.m();
        for k in 0..=self.bound {
            for l in 0..=self.bound {
                if k % m != l % m && !self.vals[k as usize][l as usize].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Equality of the overlapping window of two tables.
    pub fn agrees_with(&self, other: &LambdaTable) -> bool {
        if self.n != other.n || same_ctx(&self.ctx, &other.ctx).is_err() {
            return false;
        }
        let b = self.bound.min(other.bound);
        for k in 0..=b {
            for l in 0..=b {
                if self.vals[k as usize][l as usize] != other.vals[k as usize][l as usize] {
                    return false;
                }
            }
        }
        true
    }
}

/// JSON form of a lambda table: zeros omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LambdaJson {
    pub m: u32,
    pub n: u32,
    pub bound: u32,
    pub values: Vec<(u32, u32, String)>,
}

impl LambdaJson {
    pub fn from_table(t: &LambdaTable) -> Self {
        let mut values = Vec::new();
        for k in 0..=t.bound {
            for l in 0..=t.bound {
                let v = &t.vals[k as usize][l as usize];
                if !v.is_zero() {
                    values.push((k, l, v.to_string()));
                }
            }
        }
        LambdaJson { m: t.ctx.m(), n: t.n, bound: t.bound, values }
    }

    pub fn to_table(&self, ctx: &CtxRef) -> Result<LambdaTable> {
        if ctx.m() != self.m {
            return Err(Error::ContextError);
        }
        let mut entries = BTreeMap::new();
        for (k, l, s) in &self.values {
            entries.insert((*k, *l), crate::scalars::cyc::parse_scalar(self.m, s)?);
        }
        Ok(LambdaTable::from_values(ctx, self.n, self.bound, entries))
    }
}

// ---- The degree-zero module ----

/// A windowed element of the cyclic degree-zero module, in the basis
/// {(k, l)} <-> i_n x^k y^l. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct L0Element {
    terms: BTreeMap<(u32, u32), CycScalar>,
}

impl L0Element {
    pub fn zero() -> Self {
        L0Element { terms: BTreeMap::new() }
    }

    pub fn basis(k: u32, l: u32, m: u32) -> Self {
        Self::term(k, l, CycScalar::one(m))
    }

    pub fn term(k: u32, l: u32, c: CycScalar) -> Self {
        let mut e = Self::zero();
        e.add_term(k, l, c);
        e
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), CycScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: u32, l: u32, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(k, l)) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&(k, l));
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert((k, l), c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((k, l), c) in &o.terms {
            out.add_term(*k, *l, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        L0Element { terms: self.terms.iter().map(|(kl, c)| (*kl, c.neg())).collect() }
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        let mut out = Self::zero();
        for ((k, l), c) in &self.terms {
            out.add_term(*k, *l, c.mul(s));
        }
        out
    }

    pub fn max_degrees(&self) -> (u32, u32) {
        let mk = self.terms.keys().map(|(k, _)| *k).max().unwrap_or(0);
        let ml = self.terms.keys().map(|(_, l)| *l).max().unwrap_or(0);
        (mk, ml)
    }
}

/// A right generator to act by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    X,
    Y,
    E(u32),
}

/// Right action of a generator on the degree-zero module, reducing through
/// the lambda-twisted relation. Basis laws:
/// `(k,l).y = (k,l+1)`, `(k,l).e_i = [i = n+l-k mod m] (k,l)`, and
/// `(k,l).x = shift_y((k,l-1).x) - tau_{n+l-1-k} (k,l-1) + lambda_{k,l-1} (0,0)`
/// with base `(k,0).x = (k+1,0)`.
pub fn l0_act(v: &L0Element, gen: Gen, lambda: &LambdaTable) -> Result<L0Element> {
    let m = lambda.ctx.m();
    let n = lambda.n as i64;
    let mut out = L0Element::zero();
    for ((k, l), c) in &v.terms {
        let acted = match gen {
            Gen::Y => L0Element::term(*k, *l + 1, CycScalar::one(m)),
            Gen::E(i) => {
                let sector = (n + *l as i64 - *k as i64).rem_euclid(m as i64) as u32;
                if sector == i % m {
                    L0Element::basis(*k, *l, m)
                } else {
                    L0Element::zero()
                }
            }
            Gen::X => act_x_basis(*k, *l, lambda)?,
        };
        out = out.add(&acted.scale(c));
    }
    Ok(out)
}

fn act_x_basis(k: u32, l: u32, lambda: &LambdaTable) -> Result<L0Element> {
    let m = lambda.ctx.m();
    if l == 0 {
        return Ok(L0Element::basis(k + 1, 0, m));
    }
    if k > lambda.bound || l > lambda.bound {
        return Err(Error::BoundError { needed: k.max(l), bound: lambda.bound });
    }
    let inner = act_x_basis(k, l - 1, lambda)?;
    // shift_y: append one y to every term
    let mut shifted = L0Element::zero();
    for ((a, b), c) in inner.terms() {
        shifted.add_term(*a, *b + 1, c.clone());
    }
    let n = lambda.n as i64;
    let tau = lambda.ctx.tau_at(n + l as i64 - 1 - k as i64);
    let corr = L0Element::term(k, l - 1, tau.neg());
    let lam = L0Element::term(0, 0, lambda.at(k, l - 1)?);
    Ok(shifted.add(&corr).add(&lam))
}

/// The differential into U on the basis: (k, l) -> Ybar^l Xbar^k ibar.
pub fn dl_apply(v: &L0Element, p: &QuiverPoint) -> Result<ExactMatrix> {
    let m = p.ctx().m();
    let total = p.total_dim();
    let mut out = ExactMatrix::zeros(m, total, 1);
    for ((k, l), c) in v.terms() {
        let mut w = p.ibar().clone();
        w = p.xbar().pow(*k as usize)?.mul(&w)?;
        w = p.ybar().pow(*l as usize)?.mul(&w)?;
        out = out.add(&w.mul_scalar(c))?;
    }
    Ok(out)
}

/// Membership in the kernel of the differential (the degree-zero cohomology).
pub fn h0_membership(v: &L0Element, model: &DGModel) -> Result<bool> {
    let (mk, ml) = v.max_degrees();
    if mk > model.lambda.bound || ml > model.lambda.bound {
        return Err(Error::BoundError {
            needed: mk.max(ml),
            bound: model.lambda.bound,
        });
    }
    Ok(dl_apply(v, &model.point)?.is_zero())
}

/// The nu action on U: v.nu = i(jbar(v)), landing in the span of (0,0).
pub fn nu_apply(u: &ExactMatrix, model: &DGModel) -> Result<L0Element> {
    let jv = model.point.jbar().mul(u)?;
    Ok(L0Element::term(0, 0, jv.scalar()))
}

/// A two-term model: the lambda table plus the finite-dimensional level.
#[derive(Clone, Debug)]
pub struct DGModel {
    pub lambda: LambdaTable,
    pub point: QuiverPoint,
}

impl DGModel {
    pub fn from_point(p: &QuiverPoint, bound: u32) -> Result<DGModel> {
        Ok(DGModel { lambda: LambdaTable::from_point(p, bound)?, point: p.clone() })
    }

    /// Default window: Cayley-Hamilton closes every recursion within degree
    /// N per variable, plus margin.
    pub fn default_bound(p: &QuiverPoint) -> u32 {
        2 * p.total_dim() as u32 + 4
    }
}

/// Axioms and consistency checks for a model; empty report iff all pass.
/// Non-generic tau only warns (projectivity needs genericity).
pub fn check_axioms(model: &DGModel) -> Vec<String> {
    let mut report = Vec::new();
    let p = &model.point;
    let lam = &model.lambda;
    let m = p.ctx().m();
    // (finiteness) holds structurally; (cyclicity) = stability of the point
    if !p.is_stable() {
        report.push("cyclic-vector axiom fails: Krylov span of ibar is proper".into());
    }
    if !p.is_valid() {
        report.push("point data violates the moment map or grading".into());
    }
    if lam.n != p.framing_index() {
        report.push("lambda table and point disagree on the framing index".into());
    }
    if !lam.support_ok() {
        report.push("lambda support law fails: nonzero entry off k = l mod m".into());
    }
    // nu lands in the image of i and agrees with the lambda form:
    // (i_n.a).nu = lambda(a) (0,0) on the basis window
    let window = lam.bound.min(4);
    for k in 0..=window {
        for l in 0..=window {
            let v = L0Element::basis(k, l, m);
            let img = match dl_apply(&v, p) {
                Ok(u) => u,
                Err(e) => {
                    report.push(format!("dL failed at ({k},{l}): {e}"));
                    continue;
                }
            };
            let nu = match nu_apply(&img, model) {
                Ok(x) => x,
                Err(e) => {
                    report.push(format!("nu failed at ({k},{l}): {e}"));
                    continue;
                }
            };
            let expect = L0Element::term(0, 0, lam.at(k, l).unwrap());
            if nu != expect {
                report.push(format!(
                    "nu inconsistent with lambda at ({k},{l})"
                ));
            }
        }
    }
    // moment identity on the basis window: (v.x).y - (v.y).x computed by the
    // reduction engine equals tau-scalar * v - lambda-correction * (0,0)
    for k in 0..=window {
        for l in 0..=window {
            let v = L0Element::basis(k, l, m);
            let xy = l0_act(&l0_act(&v, Gen::X, lam).unwrap(), Gen::Y, lam).unwrap();
            let yx = l0_act(&l0_act(&v, Gen::Y, lam).unwrap(), Gen::X, lam).unwrap();
            let n = lam.n as i64;
            let tau = lam.ctx().tau_at(n + l as i64 - k as i64);
            let lhs = xy.sub(&yx);
            let rhs = v.scale(&tau).sub(&L0Element::term(0, 0, lam.at(k, l).unwrap()));
            if lhs != rhs {
                report.push(format!("module law fails at basis ({k},{l})"));
            }
        }
    }
    // intertwining dL(v.x) = Xbar dL(v), dL(v.y) = Ybar dL(v)
    for k in 0..=window {
        for l in 0..=window {
            let v = L0Element::basis(k, l, m);
            let dv = dl_apply(&v, p).unwrap();
            for (gen, mat) in [(Gen::X, p.xbar()), (Gen::Y, p.ybar())] {
                let via_module = dl_apply(&l0_act(&v, gen, lam).unwrap(), p).unwrap();
                let via_matrix = mat.mul(&dv).unwrap();
                if via_module != via_matrix {
                    report.push(format!("dL fails to intertwine {gen:?} at ({k},{l})"));
                }
            }
        }
    }
    if !p.ctx().is_generic() {
        report.push(
            "warning: tau is not generic within the bounded test; projectivity of H^0 is not guaranteed"
                .into(),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraContext;
    use crate::quiver::random::random_point;

    fn zero_point() -> QuiverPoint {
        let ctx = AlgebraContext::weyl(1);
        QuiverPoint::new(
            &ctx,
            0,
            vec![1],
            ExactMatrix::zeros(1, 1, 1),
            ExactMatrix::zeros(1, 1, 1),
            ExactMatrix::from_fn(1, 1, 1, |_, _| CycScalar::one(1)),
            ExactMatrix::from_fn(1, 1, 1, |_, _| CycScalar::one(1)),
        )
        .unwrap()
    }

    #[test]
    fn lambda_zero_point_is_delta() {
        let p = zero_point();
        let t = LambdaTable::from_point(&p, 6).unwrap();
        for k in 0..=6u32 {
            for l in 0..=6u32 {
                let expect = if k == 0 && l == 0 {
                    CycScalar::one(1)
                } else {
                    CycScalar::zero(1)
                };
                assert_eq!(t.at(k, l).unwrap(), expect);
            }
        }
    }

    #[test]
    fn lambda_m2_one_dimensional() {
        // m=2, dims (1,0), tau=(5,1): lambda_00 = 5, everything else 0
        let tau = vec![CycScalar::from_int(2, 5), CycScalar::from_int(2, 1)];
        let ctx = AlgebraContext::new(2, tau);
        let p = QuiverPoint::new(
            &ctx,
            0,
            vec![1, 0],
            ExactMatrix::zeros(2, 1, 1),
            ExactMatrix::zeros(2, 1, 1),
            ExactMatrix::from_fn(2, 1, 1, |_, _| CycScalar::one(2)),
            ExactMatrix::from_fn(2, 1, 1, |_, _| CycScalar::from_int(2, 5)),
        )
        .unwrap();
        let t = LambdaTable::from_point(&p, 4).unwrap();
        assert_eq!(t.at(0, 0).unwrap(), CycScalar::from_int(2, 5));
        for k in 0..=4u32 {
            for l in 0..=4u32 {
                if (k, l) != (0, 0) {
                    assert!(t.at(k, l).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn lambda_support_law_random() {
        for m in [2u32, 3, 4] {
            let ctx = AlgebraContext::weyl(m);
            let dims: Vec<usize> = (0..m).map(|_| 1).collect();
            let p = random_point(&ctx, 0, &dims, 13 + m as u64).unwrap();
            let t = LambdaTable::from_point(&p, 2 * p.total_dim() as u32 + 2).unwrap();
            assert!(t.support_ok());
            if m == 3 {
                assert!(t.at(1, 2).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn gauge_invariance_of_lambda() {
        let ctx = AlgebraContext::weyl(2);
        let p = random_point(&ctx, 0, &[1, 1], 21).unwrap();
        let mut g = ExactMatrix::identity(2, 2);
        g.set(0, 0, CycScalar::from_int(2, 3));
        g.set(1, 1, CycScalar::from_int(2, -2));
        let q = p.gauge_apply(&g).unwrap();
        assert!(q.is_valid());
        let tp = LambdaTable::from_point(&p, 6).unwrap();
        let tq = LambdaTable::from_point(&q, 6).unwrap();
        assert!(tp.agrees_with(&tq));
    }

    #[test]
    fn l0_act_examples() {
        // m=1, tau=1, zero-point lambda: (0,1).x = (1,1); the tau and lambda
        // corrections cancel.
        let p = zero_point();
        let lam = LambdaTable::from_point(&p, 8).unwrap();
        let v = L0Element::basis(0, 1, 1);
        let out = l0_act(&v, Gen::X, &lam).unwrap();
        assert_eq!(out, L0Element::basis(1, 1, 1));
        // (k,0).y = (k,1)
        let w = l0_act(&L0Element::basis(3, 0, 1), Gen::Y, &lam).unwrap();
        assert_eq!(w, L0Element::basis(3, 1, 1));
        // idempotent grading on (0,0)
        let e0 = l0_act(&L0Element::basis(0, 0, 1), Gen::E(0), &lam).unwrap();
        assert_eq!(e0, L0Element::basis(0, 0, 1));
    }

    #[test]
    fn idempotent_grading_m2() {
        let ctx = AlgebraContext::weyl(2);
        let p = random_point(&ctx, 0, &[1, 1], 3).unwrap();
        let lam = LambdaTable::from_point(&p, 6).unwrap();
        // (0,0).e_n = (0,0); (0,0).e_{n+1} = 0 with n = 0
        assert_eq!(
            l0_act(&L0Element::basis(0, 0, 2), Gen::E(0), &lam).unwrap(),
            L0Element::basis(0, 0, 2)
        );
        assert!(l0_act(&L0Element::basis(0, 0, 2), Gen::E(1), &lam).unwrap().is_zero());
    }

    #[test]
    fn dl_examples_and_membership() {
        let p = zero_point();
        let model = DGModel::from_point(&p, 8).unwrap();
        // (0,0) -> ibar
        let d0 = dl_apply(&L0Element::basis(0, 0, 1), &p).unwrap();
        assert_eq!(d0, *p.ibar());
        // (1,1) -> Ybar Xbar ibar = 0 at the zero point
        assert!(dl_apply(&L0Element::basis(1, 1, 1), &p).unwrap().is_zero());
        // charpoly membership: i_n charpoly_X(x) is always in the kernel
        let cp = p.xbar().charpoly().unwrap();
        let mut v = L0Element::zero();
        for (k, c) in cp.coeffs().iter().enumerate() {
            v = v.add(&L0Element::term(k as u32, 0, c.clone()));
        }
        assert!(h0_membership(&v, &model).unwrap());
        // (0,0) itself is not in the kernel when ibar is nonzero
        assert!(!h0_membership(&L0Element::basis(0, 0, 1), &model).unwrap());
        // (1,0) is: Xbar ibar = 0
        assert!(h0_membership(&L0Element::basis(1, 0, 1), &model).unwrap());
    }

    #[test]
    fn charpoly_membership_random_points() {
        for (m, dims, seed) in [(1u32, vec![2usize], 5u64), (2, vec![1, 1], 6), (3, vec![1, 1, 1], 7)] {
            let ctx = AlgebraContext::weyl(m);
            let p = random_point(&ctx, 0, &dims, seed).unwrap();
            let model = DGModel::from_point(&p, DGModel::default_bound(&p)).unwrap();
            let cp = p.xbar().charpoly().unwrap();
            let mut v = L0Element::zero();
            for (k, c) in cp.coeffs().iter().enumerate() {
                v = v.add(&L0Element::term(k as u32, 0, c.clone()));
            }
            assert!(h0_membership(&v, &model).unwrap(), "m={m}");
        }
    }

    #[test]
    fn nu_examples() {
        let p = zero_point();
        let model = DGModel::from_point(&p, 6).unwrap();
        // u = ibar: nu sends it to jbar(ibar) (0,0) = lambda_00 (0,0)
        let out = nu_apply(p.ibar(), &model).unwrap();
        assert_eq!(out, L0Element::term(0, 0, CycScalar::one(1)));
        // u = 0 -> 0
        let z = ExactMatrix::zeros(1, 1, 1);
        assert!(nu_apply(&z, &model).unwrap().is_zero());
    }

    #[test]
    fn nu_vanishes_for_tau_zero() {
        // tau = 0 degenerate context: any valid point needs ibar jbar =
        // [X,Y]; take X=Y=0, i=0... stability fails for N>0, so use N=0 and
        // a direct 1x1 check with i=j=0 shape: the nu image is zero on all
        // of U because jbar = 0 forces it.
        let ctx = AlgebraContext::new(1, vec![CycScalar::zero(1)]);
        let p = QuiverPoint::empty(&ctx, 0);
        let model = DGModel::from_point(&p, 4).unwrap();
        let u = ExactMatrix::zeros(1, 0, 1);
        assert!(nu_apply(&u, &model).unwrap().is_zero());
    }

    #[test]
    fn axioms_hold_for_random_points() {
        for (m, dims, seed) in [(1u32, vec![2usize], 19u64), (2, vec![1, 1], 23), (3, vec![1, 1, 1], 29)] {
            let ctx = AlgebraContext::weyl(m);
            let p = random_point(&ctx, 0, &dims, seed).unwrap();
            let model = DGModel::from_point(&p, DGModel::default_bound(&p)).unwrap();
            let report = check_axioms(&model);
            assert!(report.is_empty(), "m={m}: {report:?}");
        }
    }

    #[test]
    fn axioms_catch_forgeries() {
        let p = zero_point();
        let model = DGModel::from_point(&p, 6).unwrap();
        // forge lambda_00
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), CycScalar::from_int(1, 7));
        let forged = LambdaTable::from_values(p.ctx(), 0, 6, entries);
        let bad = DGModel { lambda: forged, point: p.clone() };
        assert!(!check_axioms(&bad).is_empty());
        // zero out ibar: cyclicity fails
        let ctx = AlgebraContext::weyl(1);
        let unstable = QuiverPoint::new(
            &ctx,
            0,
            vec![1],
            ExactMatrix::zeros(1, 1, 1),
            ExactMatrix::zeros(1, 1, 1),
            ExactMatrix::zeros(1, 1, 1),
            ExactMatrix::from_fn(1, 1, 1, |_, _| CycScalar::one(1)),
        )
        .unwrap();
        let lam = LambdaTable::from_values(&ctx, 0, 6, BTreeMap::new());
        let bad2 = DGModel { lambda: lam, point: unstable };
        assert!(check_axioms(&bad2).iter().any(|r| r.contains("cyclic")));
    }

    #[test]
    fn lambda_json_round_trip() {
        let ctx = AlgebraContext::weyl(2);
        let p = random_point(&ctx, 0, &[1, 1], 31).unwrap();
        let t = LambdaTable::from_point(&p, 5).unwrap();
        let dto = LambdaJson::from_table(&t);
        let text = serde_json::to_string(&dto).unwrap();
        let back: LambdaJson = serde_json::from_str(&text).unwrap();
        let t2 = back.to_table(&ctx).unwrap();
        assert!(t.agrees_with(&t2) && t2.agrees_with(&t));
    }
}
