//! Finite-dimensional cogebras given by costructure constants
//! `Δ(e_k) = Σ D_k^{ij} e_i⊗e_j`.
//!
//! The slot action on `C⊗C⊗C` is the same as for algebras:
//! `Φ_σ(y₁⊗y₂⊗y₃) = y_{σ⁻¹(1)}⊗y_{σ⁻¹(2)}⊗y_{σ⁻¹(3)}`.

use std::fmt;

use crate::algebra::default_basis;
use crate::error::{Error, Result};
use crate::linalg::{check_len, LinearMap, Vector};
use crate::rational::Rational;
use crate::sym3::{GroupAlgElem, Perm3, SubgroupId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cogebra {
    dim: usize,
    basis: Vec<String>,
    // coproducts[k] lists the nonzero (i, j, D_k^{ij}), sorted by (i, j).
    coproducts: Vec<Vec<(usize, usize, Rational)>>,
    counit: Option<Vector>,
}

impl Cogebra {
    /// The cogebra with nonzero constants `(k, i, j, D_k^{ij})`.
    pub fn from_constants<I>(dim: usize, constants: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut coproducts = vec![Vec::new(); dim];
        for (k, i, j, c) in constants {
            for index in [k, i, j] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange {
                        index: index + 1,
                        dim,
                    });
                }
            }
            let cell: &mut Vec<(usize, usize, Rational)> = &mut coproducts[k];
            match cell.binary_search_by_key(&(i, j), |(i, j, _)| (*i, *j)) {
                Ok(_) => return Err(Error::DuplicateEntry(vec![k + 1, i + 1, j + 1])),
                Err(at) => cell.insert(at, (i, j, c)),
            }
        }
        for cell in &mut coproducts {
            cell.retain(|(_, _, c)| !c.is_zero());
        }
        Ok(Cogebra {
            dim,
            basis: default_basis("c", dim),
            coproducts,
            counit: None,
        })
    }

    /// Attaches a counit, checking `(ε⊗id)∘Δ = id = (id⊗ε)∘Δ` on every basis
    /// element.
    pub fn with_counit(mut self, counit: Vector) -> Result<Self> {
        check_len(self.dim, counit.len())?;
        for k in 0..self.dim {
            let mut left = Vector::zeros(self.dim);
            let mut right = Vector::zeros(self.dim);
            for (i, j, c) in self.coproduct(k) {
                left[*j] += &(c * &counit[*i]);
                right[*i] += &(c * &counit[*j]);
            }
            let e = Vector::unit(self.dim, k);
            if left != e || right != e {
                return Err(Error::InvalidCounit(format!(
                    "{counit:?} fails on basis element {}",
                    self.basis[k]
                )));
            }
        }
        self.counit = Some(counit);
        Ok(self)
    }

    pub fn with_basis(mut self, names: Vec<String>) -> Result<Self> {
        check_len(self.dim, names.len())?;
        self.basis = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn counit(&self) -> Option<&Vector> {
        self.counit.as_ref()
    }

    pub fn coproduct(&self, k: usize) -> &[(usize, usize, Rational)] {
        &self.coproducts[k]
    }

    /// Nonzero constants `(k, i, j, D_k^{ij})` in `(k, i, j)` order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        self.coproducts
            .iter()
            .enumerate()
            .flat_map(|(k, cell)| cell.iter().map(move |(i, j, c)| (k, *i, *j, c)))
    }

    /// `Δ(x)` as coordinates on `C⊗C`, pair `(i, j)` at position `i·n + j`.
    pub fn comultiply(&self, x: &Vector) -> Result<Vector> {
        check_len(self.dim, x.len())?;
        let n = self.dim;
        let mut out = Vector::zeros(n * n);
        for k in (0..n).filter(|&k| !x[k].is_zero()) {
            for (i, j, c) in self.coproduct(k) {
                out[i * n + j] += &(&x[k] * c);
            }
        }
        Ok(out)
    }

    pub fn is_cocommutative(&self) -> bool {
        *self == flip(self)
    }
}

/// A linear map `C → C⊗C⊗C`; `get(l, i, j, k)` is the coefficient of
/// `e_i⊗e_j⊗e_k` in the image of `e_l`.
#[derive(Clone, PartialEq, Eq)]
pub struct CubeMap {
    dim: usize,
    coords: Vec<Rational>,
}

impl CubeMap {
    fn zero(dim: usize) -> Self {
        CubeMap {
            dim,
            coords: vec![Rational::zero(); dim.pow(4)],
        }
    }

    #[inline]
    fn offset(&self, l: usize, i: usize, j: usize, k: usize) -> usize {
        ((l * self.dim + i) * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, l: usize, i: usize, j: usize, k: usize) -> &Rational {
        &self.coords[self.offset(l, i, j, k)]
    }

    fn entry_mut(&mut self, l: usize, i: usize, j: usize, k: usize) -> &mut Rational {
        let at = self.offset(l, i, j, k);
        &mut self.coords[at]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn sub(&self, other: &CubeMap) -> CubeMap {
        CubeMap {
            dim: self.dim,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> CubeMap {
        CubeMap {
            dim: self.dim,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// `Φ_v∘Q`. The output coordinate at `(j₁, j₂, j₃)` collects the input
    /// coordinate at `(j_{σ(1)}, j_{σ(2)}, j_{σ(3)})`.
    pub fn phi_postcompose(&self, v: &GroupAlgElem) -> CubeMap {
        let n = self.dim;
        let terms: Vec<(Perm3, &Rational)> = v.terms().collect();
        let mut out = Self::zero(n);
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let idx = [i, j, k];
                        for (s, a) in &terms {
                            let q = self.get(l, idx[s.apply(0)], idx[s.apply(1)], idx[s.apply(2)]);
                            if !q.is_zero() {
                                *out.entry_mut(l, i, j, k) += &(*a * q);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for CubeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let mut m = f.debug_map();
        for x in 0..self.coords.len() {
            if !self.coords[x].is_zero() {
                let key = (
                    x / (n * n * n) + 1,
                    (x / (n * n)) % n + 1,
                    (x / n) % n + 1,
                    x % n + 1,
                );
                m.entry(&key, &self.coords[x]);
            }
        }
        m.finish()
    }
}

/// `(Δ⊗Id)∘Δ`.
pub fn left_iterated(c: &Cogebra) -> CubeMap {
    let mut q = CubeMap::zero(c.dim);
    for l in 0..c.dim {
        for (m, k, d1) in c.coproduct(l) {
            for (i, j, d2) in c.coproduct(*m) {
                *q.entry_mut(l, *i, *j, *k) += &(d1 * d2);
            }
        }
    }
    q
}

/// `(Id⊗Δ)∘Δ`.
pub fn right_iterated(c: &Cogebra) -> CubeMap {
    let mut q = CubeMap::zero(c.dim);
    for l in 0..c.dim {
        for (i, m, d1) in c.coproduct(l) {
            for (j, k, d2) in c.coproduct(*m) {
                *q.entry_mut(l, *i, *j, *k) += &(d1 * d2);
            }
        }
    }
    q
}

/// `(Δ⊗Id)∘Δ − (Id⊗Δ)∘Δ`.
pub fn coassociator(c: &Cogebra) -> CubeMap {
    left_iterated(c).sub(&right_iterated(c))
}

/// `Σ_{σ∈G_i} sign(σ) Φ_σ∘((Δ⊗Id)∘Δ − (Id⊗Δ)∘Δ) = 0`.
pub fn gi_cocheck(c: &Cogebra, i: SubgroupId) -> bool {
    coassociator(c)
        .phi_postcompose(&i.alternating_sum())
        .is_zero()
}

pub fn is_coassociative(c: &Cogebra) -> bool {
    coassociator(c).is_zero()
}

/// How to read the `G_i^!`-cogebra identity
/// `Φ_{u_i}∘(Id⊗Δ)∘Δ = (Id⊗Δ)∘Δ`, `u_i = Σ_{σ∈G_i} σ⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum BangReading {
    /// The sum is averaged: `(1/|G_i|) Φ_{u_i}∘(Id⊗Δ)∘Δ = (Id⊗Δ)∘Δ`. This is
    /// equivalent to `Φ_σ∘(Id⊗Δ)∘Δ = (Id⊗Δ)∘Δ` for every `σ ∈ G_i`, the exact
    /// dual of the `G_i^!`-algebra identities.
    #[default]
    Normalized,
    /// The identity as displayed, unnormalized. For `i ≥ 2` it forces
    /// `(Id⊗Δ)∘Δ = 0`: applying `Φ_{u_i}` to both sides gives
    /// `|G_i|·Φ_{u_i}R = Φ_{u_i}R`.
    Literal,
}

/// `G_i^!`-cogebra test for `i ∈ 2..=6`: coassociativity plus the
/// `u_i`-invariance of `(Id⊗Δ)∘Δ` under the chosen reading.
pub fn gi_bang_cocheck(c: &Cogebra, i: SubgroupId, reading: BangReading) -> Result<bool> {
    if i.get() < 2 {
        return Err(Error::BangIndex(i.get()));
    }
    if !is_coassociative(c) {
        return Ok(false);
    }
    let r = right_iterated(c);
    let lhs = r.phi_postcompose(&i.inverse_sum());
    Ok(match reading {
        BangReading::Literal => lhs == r,
        BangReading::Normalized => lhs == r.scaled(&Rational::from(i.order() as i64)),
    })
}

/// `τ∘Δ`, with `τ(x⊗y) = y⊗x`. Basis labels and counit are kept.
pub fn flip(c: &Cogebra) -> Cogebra {
    let flipped = c.constants().map(|(k, i, j, d)| (k, j, i, d.clone()));
    let mut out = Cogebra::from_constants(c.dim, flipped).expect("same index set");
    out.basis = c.basis.clone();
    out.counit = c.counit.clone();
    out
}

/// `Δ_L = Δ − τ∘Δ`, without counit.
pub fn lie_cogebra_from(c: &Cogebra) -> Cogebra {
    let n = c.dim;
    let mut entries = Vec::new();
    for k in 0..n {
        let mut dense = vec![Rational::zero(); n * n];
        for (i, j, d) in c.coproduct(k) {
            dense[i * n + j] += d;
            dense[j * n + i] -= d;
        }
        for (x, d) in dense.into_iter().enumerate() {
            if !d.is_zero() {
                entries.push((k, x / n, x % n, d));
            }
        }
    }
    let mut out = Cogebra::from_constants(n, entries).expect("indices in range");
    out.basis = c.basis.clone();
    out
}

/// `τ∘Δ = −Δ`.
pub fn is_co_anticommutative(c: &Cogebra) -> bool {
    let n = c.dim;
    (0..n).all(|k| {
        let mut dense = vec![Rational::zero(); n * n];
        for (i, j, d) in c.coproduct(k) {
            dense[i * n + j] += d;
            dense[j * n + i] += d;
        }
        dense.iter().all(Rational::is_zero)
    })
}

/// `Φ_v∘(Id⊗Δ)∘Δ = 0` with `v = id + c₁ + c₂`.
pub fn co_jacobi_check(c: &Cogebra) -> bool {
    right_iterated(c)
        .phi_postcompose(&SubgroupId::new(5).expect("valid").inverse_sum())
        .is_zero()
}

pub fn is_lie_cogebra(c: &Cogebra) -> bool {
    is_co_anticommutative(c) && co_jacobi_check(c)
}

/// Cogebra morphism test: `(f⊗f)∘Δ = Δ'∘f`, and `ε'∘f = ε` when both carry a
/// counit.
pub fn is_comorphism(f: &LinearMap, source: &Cogebra, target: &Cogebra) -> Result<bool> {
    check_len(source.dim, f.src_dim())?;
    check_len(target.dim, f.dst_dim())?;
    let ff = f.tensor(f);
    for k in 0..source.dim {
        let lhs = ff.apply(&source.comultiply(&Vector::unit(source.dim, k))?)?;
        let rhs = target.comultiply(f.image_of_basis(k))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    if let (Some(e), Some(e2)) = (&source.counit, &target.counit) {
        for k in 0..source.dim {
            if f.image_of_basis(k).dot(e2)? != e[k] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Aggregated classification of a cogebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CogebraReport {
    pub dim: usize,
    /// `gi_coassoc[i - 1]` for `G₁ … G₆`.
    pub gi_coassoc: [bool; 6],
    /// `gi_bang_normalized[i - 2]` for `G₂^! … G₆^!`.
    pub gi_bang_normalized: [bool; 5],
    pub gi_bang_literal: [bool; 5],
    pub is_coassociative: bool,
    pub is_cocommutative: bool,
    pub is_lie_cogebra: bool,
    pub has_counit: bool,
}

pub fn classify_cogebra(c: &Cogebra) -> CogebraReport {
    let gi_coassoc = SubgroupId::ALL.map(|i| gi_cocheck(c, i));
    let bang = |reading| SubgroupId::BANG.map(|i| gi_bang_cocheck(c, i, reading).expect("i >= 2"));
    CogebraReport {
        dim: c.dim,
        gi_coassoc,
        gi_bang_normalized: bang(BangReading::Normalized),
        gi_bang_literal: bang(BangReading::Literal),
        is_coassociative: gi_coassoc[0],
        is_cocommutative: c.is_cocommutative(),
        is_lie_cogebra: is_lie_cogebra(c),
        has_counit: c.counit.is_some(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn g(i: u8) -> SubgroupId {
        SubgroupId::new(i).unwrap()
    }

    /// Δ(c₁) = c₁⊗c₁, Δ(c₂) = c₁⊗c₂ + c₂⊗c₁: the dual of ℚ[x]/(x²).
    fn dual_trunc_poly() -> Cogebra {
        Cogebra::from_constants(2, [(0, 0, 0, q(1)), (1, 0, 1, q(1)), (1, 1, 0, q(1))])
            .unwrap()
            .with_counit(Vector::from_integers(&[1, 0]))
            .unwrap()
    }

    fn group_like() -> Cogebra {
        Cogebra::from_constants(1, [(0, 0, 0, q(1))])
            .unwrap()
            .with_counit(Vector::from_integers(&[1]))
            .unwrap()
    }

    #[test]
    fn comultiply_examples() {
        assert_eq!(
            group_like().comultiply(&Vector::unit(1, 0)).unwrap(),
            Vector::from_integers(&[1])
        );
        let zero = Cogebra::from_constants(3, []).unwrap();
        assert!(zero
            .comultiply(&Vector::from_integers(&[1, 2, 3]))
            .unwrap()
            .is_zero());
        assert_eq!(
            dual_trunc_poly().comultiply(&Vector::unit(2, 1)).unwrap(),
            Vector::from_integers(&[0, 1, 1, 0])
        );
        assert!(zero.comultiply(&Vector::zeros(2)).is_err());
    }

    #[test]
    fn counit_is_validated() {
        let c = Cogebra::from_constants(2, [(0, 0, 0, q(1)), (1, 0, 1, q(1)), (1, 1, 0, q(1))])
            .unwrap();
        assert!(matches!(
            c.with_counit(Vector::from_integers(&[0, 1])),
            Err(Error::InvalidCounit(_))
        ));
    }

    #[test]
    fn zero_coproduct_passes_everything() {
        let zero = Cogebra::from_constants(2, []).unwrap();
        for i in SubgroupId::ALL {
            assert!(gi_cocheck(&zero, i));
        }
        for i in SubgroupId::BANG {
            assert!(gi_bang_cocheck(&zero, i, BangReading::Literal).unwrap());
            assert!(gi_bang_cocheck(&zero, i, BangReading::Normalized).unwrap());
        }
    }

    #[test]
    fn readings_of_the_bang_identity() {
        for c in [dual_trunc_poly(), group_like()] {
            assert!(is_coassociative(&c));
            for i in SubgroupId::BANG {
                assert!(gi_bang_cocheck(&c, i, BangReading::Normalized).unwrap());
                // (Id⊗Δ)∘Δ ≠ 0, so the unnormalized display cannot hold.
                assert!(!gi_bang_cocheck(&c, i, BangReading::Literal).unwrap());
            }
        }
        assert_eq!(
            gi_bang_cocheck(&group_like(), g(1), BangReading::Normalized),
            Err(Error::BangIndex(1))
        );
    }

    #[test]
    fn flip_examples() {
        let c = Cogebra::from_constants(2, [(0, 0, 1, q(1))]).unwrap();
        let f = flip(&c);
        assert_eq!(f.constants().collect::<Vec<_>>(), vec![(0, 1, 0, &q(1))]);
        assert_eq!(flip(&f), c);
        assert_eq!(flip(&dual_trunc_poly()), dual_trunc_poly());
        assert!(dual_trunc_poly().is_cocommutative());
        assert!(!c.is_cocommutative());
    }

    #[test]
    fn lie_cogebra_of_cocommutative_is_zero() {
        let l = lie_cogebra_from(&dual_trunc_poly());
        assert_eq!(l.constants().count(), 0);
        assert!(l.counit().is_none());
        assert!(is_lie_cogebra(&l));
    }

    #[test]
    fn lie_cogebra_is_anticommutative() {
        let c = Cogebra::from_constants(
            2,
            [
                (0, 0, 1, q(1)),
                (1, 1, 1, q(-1)),
                (1, 0, 0, q(2)),
                (0, 1, 0, q(3)),
            ],
        )
        .unwrap();
        let l = lie_cogebra_from(&c);
        assert!(is_co_anticommutative(&l));
        assert_eq!(l.coproduct(0), &[(0, 1, q(-2)), (1, 0, q(2))]);
    }

    #[test]
    fn comorphisms() {
        // c₁ is group-like in the dual of ℚ[x]/(x²); c₂ is not.
        let incl = LinearMap::new(2, vec![Vector::from_integers(&[1, 0])]).unwrap();
        assert!(is_comorphism(&incl, &group_like(), &dual_trunc_poly()).unwrap());
        let bad = LinearMap::new(2, vec![Vector::from_integers(&[0, 1])]).unwrap();
        assert!(!is_comorphism(&bad, &group_like(), &dual_trunc_poly()).unwrap());
    }
}
