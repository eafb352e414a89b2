//! The cyclic block form: per-arrow blocks X_i in Hom(V_{i+1}, V_i) and
//! Y_i in Hom(V_i, V_{i+1}), packed into the banded big matrices and back.

use crate::algebra::CtxRef;
use crate::scalars::{CycScalar, ExactMatrix};
use crate::{Error, Result};

use super::QuiverPoint;

/// A point of the D^n variety in per-arrow block form. `x_blocks[i]` is
/// k_i x k_{i+1}, `y_blocks[i]` is k_{i+1} x k_i; the framing vectors live
/// on V_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicQuiverPoint {
    pub ctx: CtxRef,
    pub n: u32,
    pub dims: Vec<usize>,
    pub x_blocks: Vec<ExactMatrix>,
    pub y_blocks: Vec<ExactMatrix>,
    pub i_vec: Vec<CycScalar>,
    pub j_vec: Vec<CycScalar>,
}

impl CyclicQuiverPoint {
    /// Check the D^n relations X_i Y_i - Y_{i-1} X_{i-1} + tau_i = delta_{i,n} i j.
    pub fn validate(&self) -> Vec<String> {
        match pack_cyclic(self) {
            Ok(p) => p.validate(),
            Err(e) => vec![format!("shape error: {e}")],
        }
    }
}

/// Assemble the banded big matrices from per-arrow blocks. X_i lands in
/// block row i, block column i+1; Y_i in block row i+1, block column i.
pub fn pack_cyclic(c: &CyclicQuiverPoint) -> Result<QuiverPoint> {
    let m = c.ctx.m();
    let mm = m as usize;
    if c.dims.len() != mm || c.x_blocks.len() != mm || c.y_blocks.len() != mm {
        return Err(Error::ShapeError("need one block per arrow".into()));
    }
    let total: usize = c.dims.iter().sum();
    let offset = |i: usize| -> usize { c.dims[..i].iter().sum() };
    let mut xbar = ExactMatrix::zeros(m, total, total);
    let mut ybar = ExactMatrix::zeros(m, total, total);
    for i in 0..mm {
        let ip1 = (i + 1) % mm;
        let xb = &c.x_blocks[i];
        if xb.rows() != c.dims[i] || xb.cols() != c.dims[ip1] {
            return Err(Error::ShapeError(format!(
                "X_{i} is {}x{}, expected {}x{}",
                xb.rows(),
                xb.cols(),
                c.dims[i],
                c.dims[ip1]
            )));
        }
        let yb = &c.y_blocks[i];
        if yb.rows() != c.dims[ip1] || yb.cols() != c.dims[i] {
            return Err(Error::ShapeError(format!(
                "Y_{i} is {}x{}, expected {}x{}",
                yb.rows(),
                yb.cols(),
                c.dims[ip1],
                c.dims[i]
            )));
        }
        if mm == 1 {
            xbar = xb.clone();
            ybar = yb.clone();
        } else {
            for r in 0..xb.rows() {
                for cc in 0..xb.cols() {
                    xbar.set(offset(i) + r, offset(ip1) + cc, xb.at(r, cc).clone());
                }
            }
            for r in 0..yb.rows() {
                for cc in 0..yb.cols() {
                    ybar.set(offset(ip1) + r, offset(i) + cc, yb.at(r, cc).clone());
                }
            }
        }
    }
    let kn = c.dims[c.n as usize];
    if c.i_vec.len() != kn || c.j_vec.len() != kn {
        return Err(Error::ShapeError("framing vectors must live on V_n".into()));
    }
    let noff = offset(c.n as usize);
    let mut ibar = ExactMatrix::zeros(m, total, 1);
    let mut jbar = ExactMatrix::zeros(m, 1, total);
    for (r, v) in c.i_vec.iter().enumerate() {
        ibar.set(noff + r, 0, v.clone());
    }
    for (r, v) in c.j_vec.iter().enumerate() {
        jbar.set(0, noff + r, v.clone());
    }
    QuiverPoint::new(&c.ctx, c.n, c.dims.clone(), xbar, ybar, ibar, jbar)
}

/// Slice the banded matrices back into per-arrow blocks. Fails if any entry
/// sits outside the cyclic band.
pub fn unpack_cyclic(p: &QuiverPoint) -> Result<CyclicQuiverPoint> {
    let m = p.ctx().m();
    let mm = m as usize;
    let total = p.total_dim();
    if mm > 1 {
        for r in 0..total {
            for c in 0..total {
                let sr = p.sector_of(r) as i64;
                let sc = p.sector_of(c) as i64;
                let off_band_x =
                    !p.xbar().at(r, c).is_zero() && (sc - sr).rem_euclid(mm as i64) != 1;
                let off_band_y =
                    !p.ybar().at(r, c).is_zero() && (sr - sc).rem_euclid(mm as i64) != 1;
                if off_band_x || off_band_y {
                    return Err(Error::ValidationError(format!(
                        "entry ({r},{c}) breaks the cyclic band structure"
                    )));
                }
            }
        }
    }
    let mut x_blocks = Vec::with_capacity(mm);
    let mut y_blocks = Vec::with_capacity(mm);
    for i in 0..mm {
        let ip1 = (i + 1) % mm;
        let (ro, co) = (p.block_offset(i as i64), p.block_offset(ip1 as i64));
        let xb = ExactMatrix::from_fn(m, p.dims()[i], p.dims()[ip1], |r, c| {
            p.xbar().at(ro + r, co + c).clone()
        });
        let yb = ExactMatrix::from_fn(m, p.dims()[ip1], p.dims()[i], |r, c| {
            p.ybar().at(co + r, ro + c).clone()
        });
        x_blocks.push(xb);
        y_blocks.push(yb);
    }
    let noff = p.block_offset(p.framing_index() as i64);
    let kn = p.dims()[p.framing_index() as usize];
    let i_vec = (0..kn).map(|r| p.ibar().at(noff + r, 0).clone()).collect();
    let j_vec = (0..kn).map(|r| p.jbar().at(0, noff + r).clone()).collect();
    Ok(CyclicQuiverPoint {
        ctx: p.ctx().clone(),
        n: p.framing_index(),
        dims: p.dims().to_vec(),
        x_blocks,
        y_blocks,
        i_vec,
        j_vec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraContext;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn m2_band_display() {
        // m=2, dims (1,1): Xbar = [[0, X_0], [X_1, 0]]
        let ctx = AlgebraContext::weyl(2);
        let x0 = ExactMatrix::from_fn(2, 1, 1, |_, _| CycScalar::from_int(2, 7));
        let x1 = ExactMatrix::from_fn(2, 1, 1, |_, _| CycScalar::from_int(2, 9));
        let c = CyclicQuiverPoint {
            ctx: ctx.clone(),
            n: 0,
            dims: vec![1, 1],
            x_blocks: vec![x0, x1],
            y_blocks: vec![ExactMatrix::zeros(2, 1, 1), ExactMatrix::zeros(2, 1, 1)],
            i_vec: vec![CycScalar::one(2)],
            j_vec: vec![CycScalar::one(2)],
        };
        let p = pack_cyclic(&c).unwrap();
        assert_eq!(p.xbar().at(0, 1), &CycScalar::from_int(2, 7));
        assert_eq!(p.xbar().at(1, 0), &CycScalar::from_int(2, 9));
        assert!(p.xbar().at(0, 0).is_zero() && p.xbar().at(1, 1).is_zero());
    }

    #[test]
    fn m1_pack_is_reshaping() {
        let ctx = AlgebraContext::weyl(1);
        let x = ExactMatrix::from_fn(1, 2, 2, |r, c| CycScalar::from_int(1, (r * 2 + c) as i64));
        let cp = CyclicQuiverPoint {
            ctx: ctx.clone(),
            n: 0,
            dims: vec![2],
            x_blocks: vec![x.clone()],
            y_blocks: vec![ExactMatrix::zeros(1, 2, 2)],
            i_vec: vec![CycScalar::one(1), CycScalar::zero(1)],
            j_vec: vec![CycScalar::one(1), CycScalar::one(1)],
        };
        let p = pack_cyclic(&cp).unwrap();
        assert_eq!(p.xbar(), &x);
        assert_eq!(unpack_cyclic(&p).unwrap(), cp);
    }

    #[test]
    fn round_trip_random_m3() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let ctx = AlgebraContext::weyl(3);
        let dims = [1usize, 1, 1];
        let blk = |rng: &mut ChaCha8Rng, r: usize, c: usize| {
            ExactMatrix::from_fn(3, r, c, |_, _| CycScalar::from_int(3, rng.gen_range(-3..=3)))
        };
        let cp = CyclicQuiverPoint {
            ctx: ctx.clone(),
            n: 0,
            dims: dims.to_vec(),
            x_blocks: (0..3).map(|i| blk(&mut rng, dims[i], dims[(i + 1) % 3])).collect(),
            y_blocks: (0..3).map(|i| blk(&mut rng, dims[(i + 1) % 3], dims[i])).collect(),
            i_vec: vec![CycScalar::from_int(3, 2)],
            j_vec: vec![CycScalar::from_int(3, -1)],
        };
        let packed = pack_cyclic(&cp).unwrap();
        let back = unpack_cyclic(&packed).unwrap();
        assert_eq!(back, cp);
        let repacked = pack_cyclic(&back).unwrap();
        assert_eq!(repacked, packed);
    }
}
