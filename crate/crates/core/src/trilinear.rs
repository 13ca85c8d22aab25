//! Trilinear maps `A⊗A⊗A → A` and the slot action of ℚ[Σ₃] on them.

use std::fmt;

use crate::error::Result;
use crate::linalg::{check_len, Vector};
use crate::rational::Rational;
use crate::sym3::GroupAlgElem;

/// Coordinates `T_{ijk}^l` with `T(e_i⊗e_j⊗e_k) = Σ_l T_{ijk}^l e_l`.
#[derive(Clone, PartialEq, Eq)]
pub struct TrilinearMap {
    dim: usize,
    coords: Vec<Rational>,
}

impl TrilinearMap {
    pub fn zero(dim: usize) -> Self {
        TrilinearMap {
            dim,
            coords: vec![Rational::zero(); dim.pow(4)],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Rational) -> Self {
        let mut t = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        let at = t.offset(i, j, k, l);
                        t.coords[at] = f(i, j, k, l);
                    }
                }
            }
        }
        t
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim + l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.coords[self.offset(i, j, k, l)]
    }

    pub(crate) fn entry_mut(&mut self, i: usize, j: usize, k: usize, l: usize) -> &mut Rational {
        let at = self.offset(i, j, k, l);
        &mut self.coords[at]
    }

    /// All coordinates, ordered by `(i, j, k, l)` with `l` fastest.
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &TrilinearMap) -> Result<TrilinearMap> {
        check_len(self.dim, other.dim)?;
        Ok(TrilinearMap {
            dim: self.dim,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TrilinearMap) -> Result<TrilinearMap> {
        check_len(self.dim, other.dim)?;
        Ok(TrilinearMap {
            dim: self.dim,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `T∘Φ_v`, where `Φ_σ(x₁⊗x₂⊗x₃) = x_{σ⁻¹(1)}⊗x_{σ⁻¹(2)}⊗x_{σ⁻¹(3)}`
    /// and `Φ` is extended linearly over `v`.
    ///
    /// In coordinates, `(T∘Φ_σ)_{i₁i₂i₃}^l = T_{i_{σ⁻¹(1)} i_{σ⁻¹(2)} i_{σ⁻¹(3)}}^l`.
    pub fn phi_precompose(&self, v: &GroupAlgElem) -> TrilinearMap {
        let n = self.dim;
        let terms: Vec<_> = v.terms().map(|(s, a)| (s.inverse(), a.clone())).collect();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = [i, j, k];
                    for (inv, a) in &terms {
                        let src = [idx[inv.apply(0)], idx[inv.apply(1)], idx[inv.apply(2)]];
                        for l in 0..n {
                            let t = self.get(src[0], src[1], src[2], l);
                            if !t.is_zero() {
                                *out.entry_mut(i, j, k, l) += &(a * t);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `T(x, y, z)`.
    pub fn evaluate(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        for v in [x, y, z] {
            check_len(self.dim, v.len())?;
        }
        let n = self.dim;
        let mut out = Vector::zeros(n);
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let xy = &x[i] * &y[j];
                for k in (0..n).filter(|&k| !z[k].is_zero()) {
                    let xyz = &xy * &z[k];
                    for l in 0..n {
                        let t = self.get(i, j, k, l);
                        if !t.is_zero() {
                            out[l] += &(&xyz * t);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for TrilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let mut m = f.debug_map();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let t = self.get(i, j, k, l);
                        if !t.is_zero() {
                            m.entry(&(i + 1, j + 1, k + 1, l + 1), t);
                        }
                    }
                }
            }
        }
        m.finish()
    }
}
