//! Named example algebras and cogebras.
//!
//! Each instance is committed under `catalog/` in the file format of
//! [`crate::format`] and can be rebuilt from scratch: fixed instances from
//! their defining products, searched instances by exhaustive enumeration, and
//! `<name>_dual` by dualizing `<name>`. [`regenerate`] rebuilds everything and
//! compares the canonical text byte for byte.
//!
//! Searches enumerate constant tuples lexicographically, first position most
//! significant, digits in the listed order; the first hit wins.

use crate::algebra::{annihilator, gi_bang_check, gi_check, is_associative, jacobi_check, Algebra};
use crate::duality::dualize_algebra;
use crate::error::{Error, Result};
use crate::format::Document;
use crate::linalg::Vector;
use crate::rational::Rational;
use crate::sym3::SubgroupId;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    /// All `n³` constants `C_ij^k` in `(i, j, k)` order, `k` fastest.
    Dense,
    /// `C_ij^k = −C_ji^k`; free constants `C_ij^k` for `i < j` in
    /// `(i, j, k)` order.
    Antisymmetric,
}

/// A fixed, exhaustively searched space of structure constants.
#[derive(Clone, Copy, Debug)]
pub struct SearchSpace {
    pub dim: usize,
    pub shape: Shape,
    pub digits: &'static [i64],
    /// The predicate selecting the instance.
    pub predicate: &'static str,
    test: fn(&Algebra) -> bool,
}

impl SearchSpace {
    pub fn tuple_len(&self) -> usize {
        let n = self.dim;
        match self.shape {
            Shape::Dense => n * n * n,
            Shape::Antisymmetric => n * (n - 1) / 2 * n,
        }
    }

    pub fn candidate_count(&self) -> u128 {
        (self.digits.len() as u128).pow(self.tuple_len() as u32)
    }

    fn build(&self, tuple: &[i64]) -> Algebra {
        let n = self.dim;
        match self.shape {
            Shape::Dense => Algebra::from_integers(n, tuple).expect("tuple length n³"),
            Shape::Antisymmetric => {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let mut entries = Vec::new();
                for ((i, j), chunk) in pairs.zip(tuple.chunks(n)) {
                    for (k, &c) in chunk.iter().enumerate() {
                        entries.push((i, j, k, Rational::from(c)));
                        entries.push((j, i, k, Rational::from(-c)));
                    }
                }
                Algebra::from_constants(n, entries).expect("distinct entries")
            }
        }
    }

    /// The first candidate satisfying the predicate, with its zero-based
    /// position in the enumeration.
    pub fn search(&self) -> Option<(u128, Algebra)> {
        let len = self.tuple_len();
        let mut digits = vec![0usize; len];
        let mut position = 0u128;
        loop {
            let tuple: Vec<i64> = digits.iter().map(|&d| self.digits[d]).collect();
            let a = self.build(&tuple);
            if (self.test)(&a) {
                return Some((position, a));
            }
            position += 1;
            let mut slot = len;
            loop {
                if slot == 0 {
                    return None;
                }
                slot -= 1;
                digits[slot] += 1;
                if digits[slot] < self.digits.len() {
                    break;
                }
                digits[slot] = 0;
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Origin {
    Fixed(fn() -> Algebra),
    Search(SearchSpace),
    Dual(&'static str),
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub summary: &'static str,
    pub origin: Origin,
    /// Advertised `gi_check` results for `G₁ … G₆` (algebras only).
    pub gi: Option<[bool; 6]>,
    text: &'static str,
}

impl Entry {
    /// The committed file.
    pub fn text(&self) -> &'static str {
        self.text
    }

    pub fn load(&self) -> Document {
        Document::parse(self.text).expect("committed catalog files parse")
    }

    /// Rebuilds the instance from its origin.
    pub fn rebuild(&self) -> Document {
        match self.origin {
            Origin::Fixed(f) => Document::Algebra(f()),
            Origin::Search(space) => {
                let (_, a) = space.search().expect("search space contains a hit");
                Document::Algebra(a)
            }
            Origin::Dual(base) => match entry(base).expect("known base").rebuild() {
                Document::Algebra(a) => Document::Cogebra(dualize_algebra(&a)),
                Document::Cogebra(_) => unreachable!("duals are taken of algebras"),
            },
        }
    }
}

fn g(i: u8) -> SubgroupId {
    SubgroupId::new(i).expect("valid subgroup")
}

fn strictly(i: u8) -> impl Fn(&Algebra) -> bool {
    move |a| gi_check(a, g(i)) && !is_associative(a)
}

fn mat2() -> Algebra {
    // E_ab E_cd = δ_bc E_ad
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
        .and_then(|m| m.with_basis(["e11", "e12", "e21", "e22"].map(String::from).to_vec()))
        .and_then(|m| m.with_unit(Vector::from_integers(&[1, 0, 0, 1])))
        .expect("matrix units")
}

fn trunc_poly2() -> Algebra {
    Algebra::from_integers(2, &[1, 0, 0, 1, 0, 1, 0, 0])
        .and_then(|a| a.with_basis(vec!["1".into(), "x".into()]))
        .and_then(|a| a.with_unit(Vector::from_integers(&[1, 0])))
        .expect("K[x]/(x^2)")
}

fn k1() -> Algebra {
    Algebra::from_integers(1, &[1])
        .and_then(|a| a.with_unit(Vector::from_integers(&[1])))
        .expect("the field")
}

fn sl2() -> Algebra {
    // [h,e] = 2e, [h,f] = −2f, [e,f] = h
    let (h, e, f) = (0, 1, 2);
    let entries = [
        (h, e, e, 2),
        (e, h, e, -2),
        (h, f, f, -2),
        (f, h, f, 2),
        (e, f, h, 1),
        (f, e, h, -1),
    ];
    Algebra::from_constants(3, entries.map(|(i, j, k, c)| (i, j, k, Rational::from(c))))
        .and_then(|a| a.with_basis(vec!["h".into(), "e".into(), "f".into()]))
        .expect("sl(2)")
}

const SIGNED: &[i64] = &[-1, 0, 1];
const BINARY: &[i64] = &[0, 1];

macro_rules! entries {
    ($($name:literal, $summary:literal, $origin:expr, $gi:expr;)*) => {
        &[$(Entry {
            name: $name,
            summary: $summary,
            origin: $origin,
            gi: $gi,
            text: include_str!(concat!("../catalog/", $name, ".json")),
        }),*]
    };
}

const T: bool = true;
const F: bool = false;

static ENTRIES: &[Entry] = entries![
    "mat2", "2×2 matrices", Origin::Fixed(mat2), Some([T, T, T, T, T, T]);
    "trunc_poly2", "K[x]/(x²)", Origin::Fixed(trunc_poly2), Some([T, T, T, T, T, T]);
    "k1", "the one-dimensional unital algebra", Origin::Fixed(k1), Some([T, T, T, T, T, T]);
    "sl2", "sl(2) in the basis h, e, f", Origin::Fixed(sl2), Some([F, F, F, F, T, T]);
    "vinberg2", "first 2-dim G2-associative algebra that is not associative",
        Origin::Search(SearchSpace {
            dim: 2, shape: Shape::Dense, digits: SIGNED,
            predicate: "G2 and not G1", test: |a| strictly(2)(a),
        }), Some([F, T, F, F, F, T]);
    "prelie2", "first 2-dim G3-associative algebra that is not associative",
        Origin::Search(SearchSpace {
            dim: 2, shape: Shape::Dense, digits: SIGNED,
            predicate: "G3 and not G1", test: |a| strictly(3)(a),
        }), Some([F, T, T, T, F, T]);
    "g4_2", "first 2-dim G4-associative algebra that is not associative",
        Origin::Search(SearchSpace {
            dim: 2, shape: Shape::Dense, digits: SIGNED,
            predicate: "G4 and not G1", test: |a| strictly(4)(a),
        }), Some([F, F, F, T, F, T]);
    "g5_only", "first 2-dim G5-associative algebra that is neither associative nor antisymmetric",
        Origin::Search(SearchSpace {
            dim: 2, shape: Shape::Dense, digits: SIGNED,
            predicate: "G5, not G1, not antisymmetric",
            test: |a| strictly(5)(a) && !a.is_antisymmetric(),
        }), Some([F, F, F, F, T, T]);
    "g2bang3", "first 3-dim G2!-algebra that is not commutative",
        Origin::Search(SearchSpace {
            dim: 3, shape: Shape::Dense, digits: BINARY,
            predicate: "G2! and not commutative",
            test: |a| !a.is_commutative() && gi_bang_check(a, g(2)).expect("i = 2"),
        }), Some([T, T, T, T, T, T]);
    "nonjacobi3", "first 3-dim antisymmetric algebra failing the Jacobi identity",
        Origin::Search(SearchSpace {
            dim: 3, shape: Shape::Antisymmetric, digits: SIGNED,
            predicate: "fails Jacobi", test: |a| !jacobi_check(a),
        }), Some([F, F, F, F, F, F]);
    "generic3", "first 3-dim algebra whose associator has zero annihilator",
        Origin::Search(SearchSpace {
            dim: 3, shape: Shape::Dense, digits: SIGNED,
            predicate: "annihilator is zero", test: |a| annihilator(a).dim() == 0,
        }), Some([F, F, F, F, F, F]);
    "mat2_dual", "dual cogebra of mat2", Origin::Dual("mat2"), None;
    "trunc_poly2_dual", "dual cogebra of trunc_poly2", Origin::Dual("trunc_poly2"), None;
    "k1_dual", "dual cogebra of k1", Origin::Dual("k1"), None;
    "sl2_dual", "dual cogebra of sl2", Origin::Dual("sl2"), None;
    "vinberg2_dual", "dual cogebra of vinberg2", Origin::Dual("vinberg2"), None;
    "prelie2_dual", "dual cogebra of prelie2", Origin::Dual("prelie2"), None;
    "g4_2_dual", "dual cogebra of g4_2", Origin::Dual("g4_2"), None;
    "g5_only_dual", "dual cogebra of g5_only", Origin::Dual("g5_only"), None;
    "g2bang3_dual", "dual cogebra of g2bang3", Origin::Dual("g2bang3"), None;
    "nonjacobi3_dual", "dual cogebra of nonjacobi3", Origin::Dual("nonjacobi3"), None;
    "generic3_dual", "dual cogebra of generic3", Origin::Dual("generic3"), None;
];

pub fn entries() -> &'static [Entry] {
    ENTRIES
}

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.name)
}

pub fn entry(name: &str) -> Result<&'static Entry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

pub fn get(name: &str) -> Result<Document> {
    entry(name).map(Entry::load)
}

pub fn algebra(name: &str) -> Result<Algebra> {
    match get(name)? {
        Document::Algebra(a) => Ok(a),
        Document::Cogebra(_) => Err(Error::Format(format!("{name} is a cogebra"))),
    }
}

pub fn cogebra(name: &str) -> Result<crate::cogebra::Cogebra> {
    match get(name)? {
        Document::Cogebra(c) => Ok(c),
        Document::Algebra(_) => Err(Error::Format(format!("{name} is an algebra"))),
    }
}

/// Rebuilds every instance and compares it with the committed text; returns
/// the names reproduced.
pub fn regenerate() -> Result<Vec<&'static str>> {
    let diverged: Vec<String> = ENTRIES
        .iter()
        .filter(|e| e.rebuild().print() != e.text)
        .map(|e| e.name.to_string())
        .collect();
    if !diverged.is_empty() {
        return Err(Error::CatalogDivergence(diverged));
    }
    Ok(names().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name() {
        assert_eq!(get("nope"), Err(Error::UnknownCatalogEntry("nope".into())));
    }

    #[test]
    fn enumeration_order() {
        let space = SearchSpace {
            dim: 1,
            shape: Shape::Dense,
            digits: SIGNED,
            predicate: "C11^1 = 0",
            test: |a| a.constant(0, 0, 0).is_zero(),
        };
        assert_eq!(space.candidate_count(), 3);
        assert_eq!(space.search().unwrap().0, 1);
    }

    #[test]
    fn antisymmetric_shape() {
        let space = SearchSpace {
            dim: 3,
            shape: Shape::Antisymmetric,
            digits: SIGNED,
            predicate: "any",
            test: |_| true,
        };
        assert_eq!(space.tuple_len(), 9);
        let (_, a) = space.search().unwrap();
        assert!(a.is_antisymmetric());
        assert_eq!(a.constant(1, 0, 2), Rational::one());
    }

    #[test]
    fn matrices() {
        let m = algebra("mat2").unwrap();
        assert_eq!(m.dim(), 4);
        assert!(m.unit().is_some());
        assert!(is_associative(&m));
    }
}
