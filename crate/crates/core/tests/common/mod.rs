#![allow(dead_code)]

use nalg_core::catalog;
use nalg_core::sym3::{Perm3, SubgroupId};
use nalg_core::{Algebra, Cogebra, Document, Rational, Vector};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn g(i: u8) -> SubgroupId {
    SubgroupId::new(i).unwrap()
}

pub fn algebras() -> Vec<(&'static str, Algebra)> {
    catalog::entries()
        .iter()
        .filter_map(|e| match e.load() {
            Document::Algebra(a) => Some((e.name, a)),
            Document::Cogebra(_) => None,
        })
        .collect()
}

pub fn cogebras() -> Vec<(&'static str, Cogebra)> {
    catalog::entries()
        .iter()
        .filter_map(|e| match e.load() {
            Document::Cogebra(c) => Some((e.name, c)),
            Document::Algebra(_) => None,
        })
        .collect()
}

pub fn basis(n: usize, i: usize) -> Vector {
    Vector::unit(n, i)
}

/// Rationals p/q with |p| ≤ 9, 1 ≤ q ≤ 5.
pub fn random_vectors(seed: u64, n: usize, count: usize) -> Vec<Vector> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)).unwrap())
                .collect()
        })
        .collect()
}

/// `(x₁x₂)x₃ − x₁(x₂x₃)` by direct multiplication.
pub fn associator_at(a: &Algebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let left = a.multiply(&a.multiply(x, y).unwrap(), z).unwrap();
    let right = a.multiply(x, &a.multiply(y, z).unwrap()).unwrap();
    left.sub(&right).unwrap()
}

/// Slot `k` receives argument `σ⁻¹(k)`.
pub fn permuted(sigma: Perm3, xs: [&Vector; 3]) -> [&Vector; 3] {
    let inv = sigma.inverse();
    [xs[inv.apply(0)], xs[inv.apply(1)], xs[inv.apply(2)]]
}

/// `Σ_{σ∈G_i} sign(σ) A(x_{σ⁻¹(1)}, x_{σ⁻¹(2)}, x_{σ⁻¹(3)})`.
pub fn gi_sum_at(a: &Algebra, i: SubgroupId, xs: [&Vector; 3]) -> Vector {
    let mut out = Vector::zeros(a.dim());
    for &sigma in i.elements() {
        let [x, y, z] = permuted(sigma, xs);
        out.add_scaled(&sigma.sign(), &associator_at(a, x, y, z));
    }
    out
}
