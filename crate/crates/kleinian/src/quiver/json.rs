//! JSON exchange format for points. Scalars travel as exact strings
//! ("-3/7", "1/2+z"); tau entries may also be given as cyclotomic
//! coefficient lists. Round trips are bit-exact.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraContext, CtxRef};
use crate::scalars::cyc::parse_scalar;
use crate::scalars::{CycScalar, ExactMatrix};
use crate::{Error, Result};

use super::cyclic::{pack_cyclic, unpack_cyclic, CyclicQuiverPoint};
use super::QuiverPoint;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Text(String),
    Coeffs(Vec<String>),
}

impl ScalarJson {
    pub fn to_scalar(&self, m: u32) -> Result<CycScalar> {
        match self {
            ScalarJson::Text(s) => parse_scalar(m, s),
            ScalarJson::Coeffs(cs) => {
                let mut acc = CycScalar::zero(m);
                for (k, c) in cs.iter().enumerate() {
                    let r = parse_scalar(m, c)?
                        .as_rat()
                        .ok_or_else(|| Error::ParseError("coeff list entries must be rational".into()))?;
                    acc = acc.add(&CycScalar::zeta_pow(m, k as i64).mul_rat(&r));
                }
                Ok(acc)
            }
        }
    }

    pub fn from_scalar(s: &CycScalar) -> Self {
        ScalarJson::Text(s.to_string())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointJson {
    pub m: u32,
    pub n: u32,
    pub tau: Vec<ScalarJson>,
    pub dims: Vec<usize>,
    #[serde(rename = "X_blocks")]
    pub x_blocks: Vec<Vec<String>>,
    #[serde(rename = "Y_blocks")]
    pub y_blocks: Vec<Vec<String>>,
    pub i: Vec<String>,
    pub j: Vec<String>,
}

impl PointJson {
    pub fn from_point(p: &QuiverPoint) -> Result<Self> {
        let c = unpack_cyclic(p)?;
        let flat = |mat: &ExactMatrix| -> Vec<String> {
            let mut out = Vec::with_capacity(mat.rows() * mat.cols());
            for r in 0..mat.rows() {
                for cc in 0..mat.cols() {
                    out.push(mat.at(r, cc).to_string());
                }
            }
            out
        };
        Ok(PointJson {
            m: p.ctx().m(),
            n: p.framing_index(),
            tau: p.ctx().tau().iter().map(ScalarJson::from_scalar).collect(),
            dims: p.dims().to_vec(),
            x_blocks: c.x_blocks.iter().map(&flat).collect(),
            y_blocks: c.y_blocks.iter().map(&flat).collect(),
            i: c.i_vec.iter().map(|s| s.to_string()).collect(),
            j: c.j_vec.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn context(&self) -> Result<CtxRef> {
        if self.tau.len() != self.m as usize {
            return Err(Error::ParseError("tau length must equal m".into()));
        }
        let tau = self
            .tau
            .iter()
            .map(|t| t.to_scalar(self.m))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraContext::new(self.m, tau))
    }

    pub fn to_point(&self) -> Result<QuiverPoint> {
        let ctx = self.context()?;
        let m = self.m;
        let mm = m as usize;
        if self.dims.len() != mm || self.x_blocks.len() != mm || self.y_blocks.len() != mm {
            return Err(Error::ParseError("dims/X_blocks/Y_blocks must have m entries".into()));
        }
        let parse_block = |flat: &[String], rows: usize, cols: usize| -> Result<ExactMatrix> {
            if flat.len() != rows * cols {
                return Err(Error::ParseError(format!(
                    "block has {} entries, expected {}x{}",
                    flat.len(),
                    rows,
                    cols
                )));
            }
            let mut out = ExactMatrix::zeros(m, rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    out.set(r, c, parse_scalar(m, &flat[r * cols + c])?);
                }
            }
            Ok(out)
        };
        let mut x_blocks = Vec::with_capacity(mm);
        let mut y_blocks = Vec::with_capacity(mm);
        for i in 0..mm {
            let ip1 = (i + 1) % mm;
            x_blocks.push(parse_block(&self.x_blocks[i], self.dims[i], self.dims[ip1])?);
            y_blocks.push(parse_block(&self.y_blocks[i], self.dims[ip1], self.dims[i])?);
        }
        let kn = self.dims[self.n as usize];
        if self.i.len() != kn || self.j.len() != kn {
            return Err(Error::ParseError("framing vectors must have k_n entries".into()));
        }
        let i_vec = self.i.iter().map(|s| parse_scalar(m, s)).collect::<Result<Vec<_>>>()?;
        let j_vec = self.j.iter().map(|s| parse_scalar(m, s)).collect::<Result<Vec<_>>>()?;
        pack_cyclic(&CyclicQuiverPoint {
            ctx,
            n: self.n,
            dims: self.dims.clone(),
            x_blocks,
            y_blocks,
            i_vec,
            j_vec,
        })
    }
}
