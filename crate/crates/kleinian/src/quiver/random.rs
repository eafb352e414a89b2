//! Seeded generation of valid stable points.
//!
//! The moment equation is affine-linear in (Ybar, jbar) once Xbar and ibar
//! are fixed, so generation samples the X blocks and ibar from small
//! integers, solves the linear system exactly, and samples a point of the
//! solution space. Deterministic per seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::CtxRef;
use crate::scalars::{CycScalar, ExactMatrix};
use crate::{Error, Result};

use super::QuiverPoint;

const MAX_TRIES: usize = 60;

/// Generate a valid stable point with the given stratum data, or report
/// failure after bounded retries (empty strata fail by construction).
pub fn random_point(ctx: &CtxRef, n: u32, dims: &[usize], seed: u64) -> Result<QuiverPoint> {
    let m = ctx.m();
    if dims.len() != m as usize {
        return Err(Error::ShapeError("dims length must equal the group order".into()));
    }
    if n >= m {
        return Err(Error::ShapeError("framing index out of range".into()));
    }
    let total: usize = dims.iter().sum();
    if total == 0 {
        return Ok(QuiverPoint::empty(ctx, n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_TRIES {
        if let Some(p) = try_once(ctx, n, dims, &mut rng)? {
            return Ok(p);
        }
    }
    Err(Error::GenerationError(format!(
        "no stable point found for m={m}, n={n}, dims={dims:?} (stratum may be empty)"
    )))
}

fn try_once(
    ctx: &CtxRef,
    n: u32,
    dims: &[usize],
    rng: &mut ChaCha8Rng,
) -> Result<Option<QuiverPoint>> {
    let m = ctx.m();
    let mm = m as usize;
    let total: usize = dims.iter().sum();
    let offset = |i: usize| -> usize { dims[..i].iter().sum() };
    let sector_of = |idx: usize| -> usize {
        let mut acc = 0;
        for (i, d) in dims.iter().enumerate() {
            acc += d;
            if idx < acc {
                return i;
            }
        }
        unreachable!()
    };
    // sample Xbar on the band and ibar on U_n
    let mut xbar = ExactMatrix::zeros(m, total, total);
    for r in 0..total {
        for c in 0..total {
            let band = mm == 1
                || (sector_of(c) as i64 - sector_of(r) as i64).rem_euclid(mm as i64) == 1;
            if band {
                xbar.set(r, c, CycScalar::from_int(m, rng.gen_range(-3..=3)));
            }
        }
    }
    let kn = dims[n as usize];
    let noff = offset(n as usize);
    let mut ibar = ExactMatrix::zeros(m, total, 1);
    for r in 0..kn {
        // keep the first coordinate nonzero so im(ibar) has a chance
        let v = if r == 0 { rng.gen_range(1..=3) } else { rng.gen_range(-2..=2) };
        ibar.set(noff + r, 0, CycScalar::from_int(m, v));
    }
    // unknowns: Ybar band entries, then jbar entries on U_n
    let mut ycoords = Vec::new();
    for r in 0..total {
        for c in 0..total {
            let band = mm == 1
                || (sector_of(r) as i64 - sector_of(c) as i64).rem_euclid(mm as i64) == 1;
            if band {
                ycoords.push((r, c));
            }
        }
    }
    let nv = ycoords.len() + kn;
    // equations: (X Y - Y X + T - i j)[r,c] = 0 on the diagonal blocks
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for r in 0..total {
        for c in 0..total {
            if sector_of(r) != sector_of(c) {
                continue;
            }
            let mut row = vec![CycScalar::zero(m); nv];
            for (vi, &(yr, yc)) in ycoords.iter().enumerate() {
                // (X Y)[r,c]: X[r,yr] Y[yr,yc] delta_{yc,c}
                if yc == c {
                    row[vi] = row[vi].add(xbar.at(r, yr));
                }
                // -(Y X)[r,c]: -Y[yr,yc] X[yc,c] delta_{yr,r}
                if yr == r {
                    row[vi] = row[vi].sub(xbar.at(yc, c));
                }
            }
            for jj in 0..kn {
                // -(i j)[r,c] = -ibar[r] jbar[c]; unknown jbar at column noff+jj
                if noff + jj == c {
                    let idx = ycoords.len() + jj;
                    row[idx] = row[idx].sub(ibar.at(r, 0));
                }
            }
            rows.push(row);
            // rhs: -T[r,c]
            let t = if r == c {
                ctx.tau_at(sector_of(r) as i64).neg()
            } else {
                CycScalar::zero(m)
            };
            rhs.push(t);
        }
    }
    let sys = ExactMatrix::from_fn(m, rows.len(), nv, |r, c| rows[r][c].clone());
    let Some((part, null)) = sys.solve(&rhs) else {
        return Ok(None);
    };
    // sample the affine solution space
    let mut sol = part;
    for dir in &null {
        let w = CycScalar::from_int(m, rng.gen_range(-2..=2));
        for (i, d) in dir.iter().enumerate() {
            sol[i] = sol[i].add(&d.mul(&w));
        }
    }
    let mut ybar = ExactMatrix::zeros(m, total, total);
    for (vi, &(yr, yc)) in ycoords.iter().enumerate() {
        ybar.set(yr, yc, sol[vi].clone());
    }
    let mut jbar = ExactMatrix::zeros(m, 1, total);
    for jj in 0..kn {
        jbar.set(0, noff + jj, sol[ycoords.len() + jj].clone());
    }
    let p = QuiverPoint::new(ctx, n, dims.to_vec(), xbar, ybar, ibar, jbar)?;
    if p.is_valid() && p.is_stable() {
        Ok(Some(p))
    } else {
        Ok(None)
    }
}
