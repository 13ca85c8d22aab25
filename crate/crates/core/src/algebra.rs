//! Finite-dimensional algebras given by structure constants, and the
//! Σ₃-invariance identities of their associator.
//!
//! Every identity is checked on all basis triples, which is exact by
//! multilinearity. Indices in this API are zero-based; the file format and
//! the CLI use one-based labels.

use crate::error::{Error, Result};
use crate::linalg::{self, check_len, LinearMap, Subspace, Vector};
use crate::rational::Rational;
use crate::sym3::{GroupAlgElem, Perm3, SubgroupId};
use crate::trilinear::TrilinearMap;

/// An algebra `(A, μ)` with `μ(e_i, e_j) = Σ_k C_ij^k e_k` and an optional
/// two-sided unit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    dim: usize,
    basis: Vec<String>,
    // products[i * dim + j] lists the nonzero (k, C_ij^k), sorted by k.
    products: Vec<Vec<(usize, Rational)>>,
    unit: Option<Vector>,
}

pub(crate) fn default_basis(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

impl Algebra {
    /// The algebra with the given nonzero constants `(i, j, k, C_ij^k)`.
    /// Zero values are dropped; a repeated `(i, j, k)` is an error.
    pub fn from_constants<I>(dim: usize, constants: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut products = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in constants {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange {
                        index: index + 1,
                        dim,
                    });
                }
            }
            let cell: &mut Vec<(usize, Rational)> = &mut products[i * dim + j];
            match cell.binary_search_by_key(&k, |(k, _)| *k) {
                Ok(_) => return Err(Error::DuplicateEntry(vec![i + 1, j + 1, k + 1])),
                Err(at) => cell.insert(at, (k, c)),
            }
        }
        for cell in &mut products {
            cell.retain(|(_, c)| !c.is_zero());
        }
        Ok(Algebra {
            dim,
            basis: default_basis("e", dim),
            products,
            unit: None,
        })
    }

    /// Constants listed densely in `(i, j, k)` order, `k` fastest.
    pub fn from_dense(dim: usize, values: &[Rational]) -> Result<Self> {
        check_len(dim.pow(3), values.len())?;
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(x, c)| (x / (dim * dim), (x / dim) % dim, x % dim, c.clone()));
        Self::from_constants(dim, entries)
    }

    pub fn from_integers(dim: usize, values: &[i64]) -> Result<Self> {
        let values: Vec<Rational> = values.iter().map(|&c| Rational::from(c)).collect();
        Self::from_dense(dim, &values)
    }

    /// Attaches a unit, checking `μ(u, e_j) = e_j = μ(e_j, u)` for every `j`.
    pub fn with_unit(mut self, unit: Vector) -> Result<Self> {
        check_len(self.dim, unit.len())?;
        for j in 0..self.dim {
            let e = Vector::unit(self.dim, j);
            if self.multiply(&unit, &e)? != e || self.multiply(&e, &unit)? != e {
                return Err(Error::InvalidUnit(format!(
                    "{unit:?} fails on basis element {}",
                    self.basis[j]
                )));
            }
        }
        self.unit = Some(unit);
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

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    /// Nonzero `(k, C_ij^k)` in increasing `k`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// Nonzero constants `(i, j, k, C_ij^k)` in `(i, j, k)` order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.dim;
        self.products
            .iter()
            .enumerate()
            .flat_map(move |(ij, cell)| cell.iter().map(move |(k, c)| (ij / n, ij % n, *k, c)))
    }

    /// All `n³` constants in `(i, j, k)` order.
    pub fn dense(&self) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n * n * n];
        for (i, j, k, c) in self.constants() {
            out[(i * n + j) * n + k] = c.clone();
        }
        out
    }

    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_len(self.dim, x.len())?;
        check_len(self.dim, y.len())?;
        let mut out = Vector::zeros(self.dim);
        for i in (0..self.dim).filter(|&i| !x[i].is_zero()) {
            for j in (0..self.dim).filter(|&j| !y[j].is_zero()) {
                let xy = &x[i] * &y[j];
                for (k, c) in self.product(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        Ok(out)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// `C_ij^k = −C_ji^k` for all indices (so in particular `C_ii^k = 0`).
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let ij = self.product(i, j);
                let ji = self.product(j, i);
                ij.len() == ji.len()
                    && ij
                        .iter()
                        .zip(ji)
                        .all(|((k1, a), (k2, b))| k1 == k2 && (a + b).is_zero())
            })
        })
    }
}

pub fn multiply(a: &Algebra, x: &Vector, y: &Vector) -> Result<Vector> {
    a.multiply(x, y)
}

/// `(x, y, z) ↦ (xy)z`.
pub fn left_triple_product(a: &Algebra) -> TrilinearMap {
    let n = a.dim;
    let mut t = TrilinearMap::zero(n);
    for i in 0..n {
        for j in 0..n {
            for (m, c1) in a.product(i, j) {
                for k in 0..n {
                    for (l, c2) in a.product(*m, k) {
                        *t.entry_mut(i, j, k, *l) += &(c1 * c2);
                    }
                }
            }
        }
    }
    t
}

/// `(x, y, z) ↦ x(yz)`.
pub fn right_triple_product(a: &Algebra) -> TrilinearMap {
    let n = a.dim;
    let mut t = TrilinearMap::zero(n);
    for j in 0..n {
        for k in 0..n {
            for (m, c1) in a.product(j, k) {
                for i in 0..n {
                    for (l, c2) in a.product(i, *m) {
                        *t.entry_mut(i, j, k, *l) += &(c1 * c2);
                    }
                }
            }
        }
    }
    t
}

/// `A_μ = μ∘(μ⊗Id − Id⊗μ)`, i.e. `T_{ijk}^l = Σ_m (C_ij^m C_mk^l − C_jk^m C_im^l)`.
pub fn associator(a: &Algebra) -> TrilinearMap {
    left_triple_product(a)
        .sub(&right_triple_product(a))
        .expect("same dimension")
}

/// Whether `A_μ∘Φ_v = 0`.
pub fn is_sigma3_assoc_for(a: &Algebra, v: &GroupAlgElem) -> bool {
    associator(a).phi_precompose(v).is_zero()
}

/// `Σ_{σ∈G_i} sign(σ) A_μ∘Φ_σ = 0`.
pub fn gi_check(a: &Algebra, i: SubgroupId) -> bool {
    is_sigma3_assoc_for(a, &i.alternating_sum())
}

pub fn is_associative(a: &Algebra) -> bool {
    associator(a).is_zero()
}

/// The subspace `{v ∈ ℚ[Σ₃] : A_μ∘Φ_v = 0}`.
///
/// Each of the `n⁴` coordinates of `A_μ∘Φ_v` is a linear form in the six
/// coordinates of `v`; the answer is the common kernel. The result is a right
/// ideal of ℚ[Σ₃] since `Φ_v∘Φ_σ = Φ_{v∘σ}`.
pub fn annihilator(a: &Algebra) -> Subspace {
    let t = associator(a);
    let columns: Vec<TrilinearMap> = Perm3::ALL
        .iter()
        .map(|&s| t.phi_precompose(&GroupAlgElem::basis(s)))
        .collect();
    let rows: Vec<Vector> = (0..t.coords().len())
        .map(|x| {
            columns
                .iter()
                .map(|c| c.coords()[x].clone())
                .collect::<Vector>()
        })
        .filter(|row| !row.is_zero())
        .collect();
    linalg::kernel(&rows, 6).expect("rows have six columns")
}

/// The bracket algebra `[x, y] = μ(x, y) − μ(y, x)`, without unit.
pub fn commutator_algebra(a: &Algebra) -> Algebra {
    let n = a.dim;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let b = &a.constant(i, j, k) - &a.constant(j, i, k);
                if !b.is_zero() {
                    entries.push((i, j, k, b));
                }
            }
        }
    }
    Algebra::from_constants(n, entries)
        .expect("indices in range")
        .with_basis(a.basis.clone())
        .expect("same dimension")
}

/// Antisymmetry plus `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on all basis
/// triples.
pub fn jacobi_check(a: &Algebra) -> bool {
    if !a.is_antisymmetric() {
        return false;
    }
    let left = left_triple_product(a);
    let n = a.dim;
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                (0..n).all(|l| {
                    (left.get(i, j, k, l) + left.get(j, k, i, l) + left.get(k, i, j, l)).is_zero()
                })
            })
        })
    })
}

/// The W-test `A_μ∘Φ_W = 0`, equivalent in characteristic zero to
/// `A_μ(x, x, x) = 0` for every `x`.
pub fn power_assoc_check(a: &Algebra) -> bool {
    let w = GroupAlgElem::from_integers([1; 6]);
    is_sigma3_assoc_for(a, &w)
}

/// Argument arrangements whose triple products must agree with `x₁x₂x₃`.
/// An entry `[p, q, r]` stands for `x_{p+1} x_{q+1} x_{r+1}`.
fn bang_arrangements(i: SubgroupId) -> &'static [[usize; 3]] {
    match i.get() {
        2 => &[[1, 0, 2]],
        3 => &[[0, 2, 1]],
        4 => &[[2, 1, 0]],
        5 => &[[1, 2, 0], [2, 0, 1]],
        _ => &[[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]],
    }
}

/// `G_i^!`-algebra test for `i ∈ 2..=6`: associativity plus the listed
/// permutation identities on triple products.
pub fn gi_bang_check(a: &Algebra, i: SubgroupId) -> Result<bool> {
    if i.get() < 2 {
        return Err(Error::BangIndex(i.get()));
    }
    if !is_associative(a) {
        return Ok(false);
    }
    let p = left_triple_product(a);
    let n = a.dim;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let args = [x, y, z];
                for arr in bang_arrangements(i) {
                    let (u, v, w) = (args[arr[0]], args[arr[1]], args[arr[2]]);
                    if (0..n).any(|l| p.get(x, y, z, l) != p.get(u, v, w, l)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The two composites of the axiomatic `G_i`-associativity square:
/// `μ∘(μ⊗Id)_{G_i}` and `μ∘(Id⊗μ)_{G_i}`, where
/// `(μ⊗Id)_{G_i} = Σ_{σ∈G_i} sign(σ) (μ⊗Id)∘Φ_σ`.
pub fn gi_square(a: &Algebra, i: SubgroupId) -> (TrilinearMap, TrilinearMap) {
    let ai = i.alternating_sum();
    (
        left_triple_product(a).phi_precompose(&ai),
        right_triple_product(a).phi_precompose(&ai),
    )
}

pub fn gi_square_commutes(a: &Algebra, i: SubgroupId) -> bool {
    let (top, bottom) = gi_square(a, i);
    top == bottom
}

/// Algebra morphism test: `μ'(f x, f y) = f(μ(x, y))` on basis pairs, and
/// `f(u) = u'` when both algebras carry a unit.
pub fn is_morphism(f: &LinearMap, source: &Algebra, target: &Algebra) -> Result<bool> {
    check_len(source.dim, f.src_dim())?;
    check_len(target.dim, f.dst_dim())?;
    for i in 0..source.dim {
        for j in 0..source.dim {
            let lhs = target.multiply(f.image_of_basis(i), f.image_of_basis(j))?;
            let rhs = f.apply(
                &source.multiply(&Vector::unit(source.dim, i), &Vector::unit(source.dim, j))?,
            )?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    if let (Some(u), Some(u2)) = (&source.unit, &target.unit) {
        if &f.apply(u)? != u2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Aggregated classification of an algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassificationReport {
    pub dim: usize,
    /// `gi_assoc[i - 1]` for `G₁ … G₆`.
    pub gi_assoc: [bool; 6],
    /// `gi_bang[i - 2]` for `G₂^! … G₆^!`.
    pub gi_bang: [bool; 5],
    pub is_associative: bool,
    pub is_lie_admissible: bool,
    pub is_3_power_associative: bool,
    pub has_unit: bool,
    pub annihilator_dim: usize,
    pub annihilator_basis: Vec<GroupAlgElem>,
}

impl ClassificationReport {
    pub fn gi(&self, i: SubgroupId) -> bool {
        self.gi_assoc[i.get() as usize - 1]
    }

    pub fn bang(&self, i: SubgroupId) -> Option<bool> {
        (i.get() >= 2).then(|| self.gi_bang[i.get() as usize - 2])
    }
}

pub fn classify(a: &Algebra) -> ClassificationReport {
    let gi_assoc = SubgroupId::ALL.map(|i| gi_check(a, i));
    let gi_bang = SubgroupId::BANG.map(|i| gi_bang_check(a, i).expect("i >= 2"));
    let ann = annihilator(a);
    ClassificationReport {
        dim: a.dim,
        gi_assoc,
        gi_bang,
        is_associative: gi_assoc[0],
        is_lie_admissible: gi_assoc[5],
        is_3_power_associative: power_assoc_check(a),
        has_unit: a.unit.is_some(),
        annihilator_dim: ann.dim(),
        annihilator_basis: ann
            .basis()
            .iter()
            .map(|b| GroupAlgElem::from_vector(b).expect("length 6"))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym3::{ga_multiply, right_ideal, special_vector};

    fn g(i: u8) -> SubgroupId {
        SubgroupId::new(i).unwrap()
    }

    fn mat2() -> Algebra {
        // E_ab E_cd = δ_bc E_ad, basis E11, E12, E21, E22.
        let idx = |a: usize, b: usize| 2 * a + b;
        let mut entries = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for d in 0..2 {
                    entries.push((idx(a, b), idx(b, d), idx(a, d), Rational::one()));
                }
            }
        }
        Algebra::from_constants(4, entries)
            .unwrap()
            .with_unit(Vector::from_integers(&[1, 0, 0, 1]))
            .unwrap()
    }

    fn trunc_poly2() -> Algebra {
        Algebra::from_integers(2, &[1, 0, 0, 1, 0, 1, 0, 0])
            .unwrap()
            .with_unit(Vector::from_integers(&[1, 0]))
            .unwrap()
    }

    /// C₁₁² = 1, C₂₁¹ = 1: not 3-power associative.
    fn witness() -> Algebra {
        Algebra::from_constants(2, [(0, 0, 1, Rational::one()), (1, 0, 0, Rational::one())])
            .unwrap()
    }

    fn sl2() -> Algebra {
        // basis h, e, f
        let q = Rational::from;
        Algebra::from_constants(
            3,
            [
                (0, 1, 1, q(2)),
                (1, 0, 1, q(-2)),
                (0, 2, 2, q(-2)),
                (2, 0, 2, q(2)),
                (1, 2, 0, q(1)),
                (2, 1, 0, q(-1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Algebra::from_constants(2, [(0, 2, 0, Rational::one())]),
            Err(Error::IndexOutOfRange { index: 3, dim: 2 })
        );
        assert_eq!(
            Algebra::from_constants(2, [(0, 1, 0, Rational::one()), (0, 1, 0, Rational::one())]),
            Err(Error::DuplicateEntry(vec![1, 2, 1]))
        );
        assert!(matches!(
            witness().with_unit(Vector::from_integers(&[1, 0])),
            Err(Error::InvalidUnit(_))
        ));
    }

    #[test]
    fn multiplication_reads_the_table() {
        let k1 = Algebra::from_integers(1, &[1]).unwrap();
        assert_eq!(
            k1.multiply(&Vector::unit(1, 0), &Vector::unit(1, 0))
                .unwrap(),
            Vector::unit(1, 0)
        );

        let w = witness();
        assert_eq!(
            w.multiply(&Vector::unit(2, 1), &Vector::unit(2, 0))
                .unwrap(),
            Vector::unit(2, 0)
        );

        let m = mat2();
        let x = Vector::from_integers(&[1, 2, -3, 5]);
        assert_eq!(m.multiply(m.unit().unwrap(), &x).unwrap(), x);
        assert_eq!(m.multiply(&x, m.unit().unwrap()).unwrap(), x);
        assert!(m.multiply(&Vector::zeros(3), &x).is_err());
    }

    #[test]
    fn associator_examples() {
        assert!(associator(&mat2()).is_zero());
        assert!(associator(&Algebra::from_integers(1, &[7]).unwrap()).is_zero());
        let t = associator(&witness());
        // (e₁e₁)e₁ − e₁(e₁e₁) = e₂e₁ − e₁e₂ = e₁
        assert_eq!(t.get(0, 0, 0, 0), &Rational::one());
        assert!(t.get(0, 0, 0, 1).is_zero());
    }

    #[test]
    fn gi_on_associative_algebras() {
        for i in SubgroupId::ALL {
            assert!(gi_check(&mat2(), i));
            assert!(gi_check(&trunc_poly2(), i));
        }
        assert_eq!(annihilator(&mat2()), Subspace::full(6));
    }

    #[test]
    fn sl2_is_g5_and_lie() {
        assert!(gi_check(&sl2(), g(5)));
        assert!(jacobi_check(&sl2()));
        assert!(!gi_check(&sl2(), g(1)));
    }

    #[test]
    fn jacobi_examples() {
        assert!(jacobi_check(&Algebra::from_constants(3, []).unwrap()));
        assert!(jacobi_check(&commutator_algebra(&mat2())));
        assert!(!jacobi_check(&witness()));
        // A cross-product-like bracket is a Lie algebra.
        let q = Rational::from;
        let so3 = Algebra::from_constants(
            3,
            [
                (0, 1, 2, q(1)),
                (1, 0, 2, q(-1)),
                (1, 2, 0, q(1)),
                (2, 1, 0, q(-1)),
                (2, 0, 1, q(-1)),
                (0, 2, 1, q(1)),
            ],
        )
        .unwrap();
        assert!(jacobi_check(&so3));
    }

    #[test]
    fn commutator_of_commutative_is_zero() {
        let c = commutator_algebra(&trunc_poly2());
        assert_eq!(c.constants().count(), 0);
        assert!(c.unit().is_none());
    }

    #[test]
    fn power_associativity() {
        assert!(power_assoc_check(&mat2()));
        assert!(power_assoc_check(&commutator_algebra(&witness())));
        assert!(!power_assoc_check(&witness()));
    }

    #[test]
    fn bang_checks() {
        for i in SubgroupId::BANG {
            assert!(gi_bang_check(&trunc_poly2(), i).unwrap());
            assert!(!gi_bang_check(&mat2(), i).unwrap());
            assert!(!gi_bang_check(&witness(), i).unwrap());
        }
        assert_eq!(gi_bang_check(&mat2(), g(1)), Err(Error::BangIndex(1)));
    }

    #[test]
    fn classify_mat2() {
        let r = classify(&mat2());
        assert_eq!(r.gi_assoc, [true; 6]);
        assert_eq!(r.gi_bang, [false; 5]);
        assert_eq!(r.annihilator_dim, 6);
        assert!(r.has_unit && r.is_associative && r.is_lie_admissible && r.is_3_power_associative);
    }

    #[test]
    fn classify_trunc_poly() {
        let r = classify(&trunc_poly2());
        assert_eq!(r.gi_assoc, [true; 6]);
        assert_eq!(r.gi_bang, [true; 5]);
    }

    #[test]
    fn annihilator_is_right_ideal_and_contains_v_when_gi() {
        let v = special_vector("V").unwrap();
        for a in [witness(), sl2(), mat2()] {
            let ann = annihilator(&a);
            for b in ann.basis() {
                let b = GroupAlgElem::from_vector(b).unwrap();
                for s in Perm3::ALL {
                    let moved = ga_multiply(&b, &GroupAlgElem::basis(s));
                    assert!(ann.contains(&moved.to_vector()).unwrap());
                }
            }
            for i in SubgroupId::ALL {
                if gi_check(&a, i) {
                    assert!(right_ideal(&i.alternating_sum())
                        .is_subspace_of(&ann)
                        .unwrap());
                    assert!(ann.contains(&v.to_vector()).unwrap());
                }
            }
        }
    }

    #[test]
    fn square_matches_definition() {
        for a in [witness(), sl2(), mat2(), trunc_poly2()] {
            for i in SubgroupId::ALL {
                assert_eq!(gi_square_commutes(&a, i), gi_check(&a, i));
            }
        }
    }

    #[test]
    fn morphisms() {
        let k1 = Algebra::from_integers(1, &[1])
            .unwrap()
            .with_unit(Vector::from_integers(&[1]))
            .unwrap();
        let eval = LinearMap::new(
            1,
            vec![Vector::from_integers(&[1]), Vector::from_integers(&[0])],
        )
        .unwrap();
        assert!(is_morphism(&eval, &trunc_poly2(), &k1).unwrap());
        let bad = LinearMap::new(
            1,
            vec![Vector::from_integers(&[1]), Vector::from_integers(&[1])],
        )
        .unwrap();
        assert!(!is_morphism(&bad, &trunc_poly2(), &k1).unwrap());
        assert!(is_morphism(&LinearMap::identity(4), &mat2(), &mat2()).unwrap());
    }
}
