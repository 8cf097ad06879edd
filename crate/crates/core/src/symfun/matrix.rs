use super::tpoly::TPoly;
use crate::error::{Error, Result};

/// A dense square matrix over `ℤ[t, t⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TMatrix {
    size: usize,
    data: Vec<TPoly>,
}

impl TMatrix {
    pub fn zeros(size: usize) -> Self {
        TMatrix {
            size,
            data: vec![TPoly::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = TMatrix::zeros(size);
        for i in 0..size {
            m.set(i, i, TPoly::one());
        }
        m
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> TPoly) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                data.push(f(i, j));
            }
        }
        TMatrix { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &TPoly {
        &self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TPoly) {
        self.data[i * self.size + j] = v;
    }

    pub fn transpose(&self) -> Self {
        TMatrix::from_fn(self.size, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &TMatrix) -> Self {
        assert_eq!(self.size, other.size, "matrix sizes differ");
        let n = self.size;
        TMatrix::from_fn(n, |i, j| {
            let mut acc = TPoly::zero();
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc += &(a * other.get(k, j));
            }
            acc
        })
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[TPoly]) -> Vec<TPoly> {
        assert_eq!(v.len(), self.size, "vector length differs");
        (0..self.size)
            .map(|j| {
                let mut acc = TPoly::zero();
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        acc += &(c * self.get(i, j));
                    }
                }
                acc
            })
            .collect()
    }

    /// Entrywise evaluation at `t = 1`.
    pub fn at_one(&self) -> Self {
        TMatrix {
            size: self.size,
            data: self.data.iter().map(|p| TPoly::constant(p.at_one())).collect(),
        }
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.transpose().is_upper_triangular()
    }

    /// Exact inverse of a triangular matrix whose diagonal entries are units
    /// `±t^k`; no division by a non-unit ever happens.
    pub fn inverse_triangular(&self) -> Result<Self> {
        if self.is_upper_triangular() {
            self.inverse_upper()
        } else if self.is_lower_triangular() {
            Ok(self.transpose().inverse_upper()?.transpose())
        } else {
            Err(Error::NotInvertible("matrix is not triangular".into()))
        }
    }

    fn inverse_upper(&self) -> Result<Self> {
        let n = self.size;
        let inv_diag: Vec<TPoly> = (0..n)
            .map(|i| {
                self.get(i, i).unit_inverse().ok_or_else(|| {
                    Error::NotInvertible(format!("diagonal entry {} is not a unit", self.get(i, i)))
                })
            })
            .collect::<Result<_>>()?;
        let mut x = TMatrix::zeros(n);
        for j in 0..n {
            x.set(j, j, inv_diag[j].clone());
            for i in (0..j).rev() {
                let mut acc = TPoly::zero();
                for k in i + 1..=j {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += &(a * x.get(k, j));
                    }
                }
                x.set(i, j, -(&inv_diag[i] * &acc));
            }
        }
        Ok(x)
    }
}
