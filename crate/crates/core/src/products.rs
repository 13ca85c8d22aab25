//! Tensor products of algebras and convolution algebras on `Hom(C, A)`.
//!
//! Pair bases are enumerated row-major: the label `(a, b)` sits at flat index
//! `a·n₂ + b` (zero-based), i.e. `(a−1)·n₂ + b` with one-based labels.

use crate::algebra::{gi_check, Algebra};
use crate::cogebra::{gi_bang_cocheck, is_coassociative, BangReading, Cogebra};
use crate::linalg::Vector;
use crate::sym3::SubgroupId;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PairBasisLabel {
    pub left: usize,
    pub right: usize,
}

impl PairBasisLabel {
    pub fn flat(self, right_dim: usize) -> usize {
        self.left * right_dim + self.right
    }

    pub fn from_flat(index: usize, right_dim: usize) -> Self {
        PairBasisLabel {
            left: index / right_dim,
            right: index % right_dim,
        }
    }
}

fn tensor_vectors(x: &Vector, y: &Vector) -> Vector {
    x.iter()
        .flat_map(|a| y.iter().map(move |b| a * b))
        .collect()
}

/// `μ_A⊗μ_B((a₁⊗b₁)⊗(a₂⊗b₂)) = μ_A(a₁⊗a₂)⊗μ_B(b₁⊗b₂)`. The unit is the
/// tensor of the units when both exist.
pub fn tensor_algebras(a: &Algebra, b: &Algebra) -> Algebra {
    let nb = b.dim();
    let label = |l, r| PairBasisLabel { left: l, right: r }.flat(nb);
    let mut entries = Vec::new();
    for (a1, a2, a3, ca) in a.constants() {
        for (b1, b2, b3, cb) in b.constants() {
            entries.push((label(a1, b1), label(a2, b2), label(a3, b3), ca * cb));
        }
    }
    let names = a
        .basis()
        .iter()
        .flat_map(|x| b.basis().iter().map(move |y| format!("({x},{y})")))
        .collect();
    let mut t = Algebra::from_constants(a.dim() * nb, entries)
        .expect("distinct labels")
        .with_basis(names)
        .expect("dimension n_A·n_B");
    if let (Some(ua), Some(ub)) = (a.unit(), b.unit()) {
        t = t
            .with_unit(tensor_vectors(ua, ub))
            .expect("a tensor of units is a unit");
    }
    t
}

/// The convolution algebra `(Hom(C, A), ⋆)` with `f⋆g = μ∘λ₂(f⊗g)∘Δ`.
///
/// Basis element `E_ab` sends the `a`-th basis vector of `C` to the `b`-th
/// basis vector of `A` and the others to zero, so
/// `E_{a₁b₁}⋆E_{a₂b₂} = Σ_{k,l} D_k^{a₁a₂} C_{b₁b₂}^l E_{kl}`. The unit is
/// `η∘ε` when `C` has a counit and `A` a unit.
pub fn convolution_algebra(c: &Cogebra, a: &Algebra) -> Algebra {
    let na = a.dim();
    let label = |l, r| PairBasisLabel { left: l, right: r }.flat(na);
    let mut entries = Vec::new();
    for (k, a1, a2, d) in c.constants() {
        for (b1, b2, l, m) in a.constants() {
            entries.push((label(a1, b1), label(a2, b2), label(k, l), d * m));
        }
    }
    let names = c
        .basis()
        .iter()
        .flat_map(|x| a.basis().iter().map(move |y| format!("E({x},{y})")))
        .collect();
    let mut hom = Algebra::from_constants(c.dim() * na, entries)
        .expect("distinct labels")
        .with_basis(names)
        .expect("dimension n_C·n_A");
    if let (Some(eps), Some(u)) = (c.counit(), a.unit()) {
        hom = hom
            .with_unit(tensor_vectors(eps, u))
            .expect("η∘ε is the convolution unit");
    }
    hom
}

/// Subgroups `G_i` for which `A` is `G_i`-associative and `C` is a
/// `G_i^!`-cogebra under `reading` (coassociative when `i = 1`).
pub fn convolution_hypotheses(c: &Cogebra, a: &Algebra, reading: BangReading) -> Vec<SubgroupId> {
    SubgroupId::ALL
        .into_iter()
        .filter(|&i| {
            let cogebra_side = if i.get() == 1 {
                is_coassociative(c)
            } else {
                gi_bang_cocheck(c, i, reading).expect("i >= 2")
            };
            cogebra_side && gi_check(a, i)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::annihilator;
    use crate::duality::{dualize_algebra, dualize_cogebra};
    use crate::rational::Rational;

    fn k1() -> Algebra {
        Algebra::from_integers(1, &[1])
            .unwrap()
            .with_unit(Vector::from_integers(&[1]))
            .unwrap()
    }

    fn trunc_poly2() -> Algebra {
        Algebra::from_integers(2, &[1, 0, 0, 1, 0, 1, 0, 0])
            .unwrap()
            .with_unit(Vector::from_integers(&[1, 0]))
            .unwrap()
    }

    fn g(i: u8) -> SubgroupId {
        SubgroupId::new(i).unwrap()
    }

    #[test]
    fn labels() {
        let l = PairBasisLabel { left: 1, right: 2 };
        assert_eq!(l.flat(3), 5);
        assert_eq!(PairBasisLabel::from_flat(5, 3), l);
    }

    #[test]
    fn tensor_with_the_field() {
        let a = Algebra::from_integers(2, &[0, 1, 0, 0, 1, 0, 0, 0]).unwrap();
        let t = tensor_algebras(&a, &k1());
        assert_eq!(t.dense(), a.dense());
        assert!(t.unit().is_none());
        assert_eq!(t.basis(), &["(e1,e1)".to_string(), "(e2,e1)".to_string()]);
        let u = tensor_algebras(&k1(), &k1());
        assert_eq!(u.unit(), Some(&Vector::from_integers(&[1])));
    }

    #[test]
    fn trivial_convolution() {
        let c = dualize_algebra(&k1());
        let hom = convolution_algebra(&c, &k1());
        assert_eq!(hom.dense(), vec![Rational::one()]);
        assert_eq!(hom.unit(), Some(&Vector::from_integers(&[1])));
    }

    #[test]
    fn convolution_is_dual_tensor() {
        let a = Algebra::from_integers(2, &[0, 1, 0, 0, 1, 0, 0, 0]).unwrap();
        let c = dualize_algebra(&trunc_poly2());
        let hom = convolution_algebra(&c, &a);
        let t = tensor_algebras(&dualize_cogebra(&c), &a);
        assert_eq!(hom.dense(), t.dense());
    }

    #[test]
    fn commutative_tensor_is_g5() {
        // Commutative algebras satisfy the G₅ identity, so the tensor square
        // of a commutative algebra is Σ₃-associative.
        let c = Algebra::from_integers(2, &[0, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        let sq = Algebra::from_integers(2, &[1, 1, 1, 0, 1, 0, 0, 1]).unwrap();
        for a in [c, sq] {
            assert!(a.is_commutative());
            let t = tensor_algebras(&a, &a);
            assert!(t.is_commutative());
            assert!(gi_check(&t, g(5)));
            assert!(annihilator(&t).dim() > 0);
        }
    }

    #[test]
    fn hypotheses() {
        let c = dualize_algebra(&trunc_poly2());
        let all: Vec<_> = SubgroupId::ALL.to_vec();
        assert_eq!(
            convolution_hypotheses(&c, &trunc_poly2(), BangReading::Normalized),
            all
        );
        assert_eq!(
            convolution_hypotheses(&c, &trunc_poly2(), BangReading::Literal),
            vec![g(1)]
        );
    }
}
