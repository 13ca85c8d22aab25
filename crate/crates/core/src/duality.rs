//! Algebra ↔ cogebra duality in finite dimension.
//!
//! Dual bases are identified positionally (`f_i ↔ e_i`): the dual cogebra of
//! an algebra has `Δ(f_k) = Σ C_ij^k f_i⊗f_j`, and the dual algebra of a
//! cogebra has `μ(f_i, f_j) = Σ D_k^{ij} f_k`. Units and counits correspond
//! coordinate for coordinate, so both round trips are the identity.

use crate::algebra::Algebra;
use crate::cogebra::Cogebra;

/// `x ↦ x*` and `x* ↦ x`; an involution on labels with at most one trailing `*`.
pub fn dual_label(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(stem) => stem.to_string(),
        None => format!("{name}*"),
    }
}

fn dual_labels(names: &[String]) -> Vec<String> {
    names.iter().map(|s| dual_label(s)).collect()
}

/// The cogebra on `A*`; its counit is evaluation at the unit of `A`.
pub fn dualize_algebra(a: &Algebra) -> Cogebra {
    let constants = a.constants().map(|(i, j, k, c)| (k, i, j, c.clone()));
    let mut c = Cogebra::from_constants(a.dim(), constants)
        .expect("indices in range")
        .with_basis(dual_labels(a.basis()))
        .expect("same dimension");
    if let Some(u) = a.unit() {
        c = c
            .with_counit(u.clone())
            .expect("evaluation at a unit is a counit");
    }
    c
}

/// The algebra on `C*`, `μ = Δ*∘λ₂`; its unit is the counit of `C`.
pub fn dualize_cogebra(c: &Cogebra) -> Algebra {
    let constants = c.constants().map(|(k, i, j, d)| (i, j, k, d.clone()));
    let mut a = Algebra::from_constants(c.dim(), constants)
        .expect("indices in range")
        .with_basis(dual_labels(c.basis()))
        .expect("same dimension");
    if let Some(e) = c.counit() {
        a = a.with_unit(e.clone()).expect("a counit dualizes to a unit");
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gi_check;
    use crate::cogebra::gi_cocheck;
    use crate::linalg::Vector;
    use crate::rational::Rational;
    use crate::sym3::SubgroupId;

    fn trunc_poly2() -> Algebra {
        Algebra::from_integers(2, &[1, 0, 0, 1, 0, 1, 0, 0])
            .unwrap()
            .with_unit(Vector::from_integers(&[1, 0]))
            .unwrap()
    }

    #[test]
    fn one_dimensional() {
        let k1 = Algebra::from_integers(1, &[1])
            .unwrap()
            .with_unit(Vector::from_integers(&[1]))
            .unwrap();
        let d = dualize_algebra(&k1);
        assert_eq!(d.coproduct(0), &[(0, 0, Rational::one())]);
        assert_eq!(d.counit(), Some(&Vector::from_integers(&[1])));
        assert_eq!(d.basis(), &["e1*".to_string()]);
    }

    #[test]
    fn truncated_polynomials() {
        let d = dualize_algebra(&trunc_poly2());
        assert_eq!(d.coproduct(0), &[(0, 0, Rational::one())]);
        assert_eq!(
            d.coproduct(1),
            &[(0, 1, Rational::one()), (1, 0, Rational::one())]
        );
    }

    #[test]
    fn round_trips() {
        let a = trunc_poly2();
        assert_eq!(dualize_cogebra(&dualize_algebra(&a)), a);
        let c = Cogebra::from_constants(
            2,
            [(1, 0, 1, Rational::from(3)), (0, 1, 1, Rational::from(-1))],
        )
        .unwrap();
        assert_eq!(dualize_algebra(&dualize_cogebra(&c)), c);
    }

    #[test]
    fn labels_are_an_involution() {
        for s in ["e1", "x*", "", "a*b"] {
            assert_eq!(dual_label(&dual_label(s)), s);
        }
    }

    #[test]
    fn identities_transport() {
        // C₁₁² = 1, C₂₁¹ = 1
        let a = Algebra::from_integers(2, &[0, 1, 0, 0, 1, 0, 0, 0]).unwrap();
        let d = dualize_algebra(&a);
        for i in SubgroupId::ALL {
            assert_eq!(gi_check(&a, i), gi_cocheck(&d, i));
        }
    }
}
