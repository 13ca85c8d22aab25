//! The symmetric group Σ₃ and its group algebra ℚ[Σ₃].
//!
//! Conventions used throughout the crate:
//!
//! * [`compose`]`(p, q)` applies `q` first, then `p`: `(p∘q)(k) = p(q(k))`.
//! * Group-algebra coordinates are always listed in the order
//!   `[id, τ₁₂, τ₁₃, τ₂₃, c₁, c₂]` with `c₁ = (1 2 3)` and `c₂ = c₁²`.
//! * The group acts on ℚ[Σ₃] by `(σ, v) ↦ σ⁻¹∘v` ([`Action::Inverse`]); its
//!   orbits span the spaces returned by [`orbit_span`].
//!
//! The set `{v : A_μ∘Φ_v = 0}` of an algebra is closed under *right*
//! multiplication `v ↦ v∘σ`, not under the left action above. The crate
//! therefore exposes both [`orbit_span`] and [`right_ideal`]; implications
//! between the `G_i` identities are derived from right-ideal membership.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{self, Subspace, Vector};
use crate::rational::Rational;

/// A permutation of `{1, 2, 3}`, stored as zero-based images.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([0, 1, 2]);
    pub const T12: Perm3 = Perm3([1, 0, 2]);
    pub const T13: Perm3 = Perm3([2, 1, 0]);
    pub const T23: Perm3 = Perm3([0, 2, 1]);
    pub const C1: Perm3 = Perm3([1, 2, 0]);
    pub const C2: Perm3 = Perm3([2, 0, 1]);

    /// All six elements in basis order.
    pub const ALL: [Perm3; 6] = [
        Perm3::ID,
        Perm3::T12,
        Perm3::T13,
        Perm3::T23,
        Perm3::C1,
        Perm3::C2,
    ];

    /// Builds a permutation from its one-based images `(σ(1), σ(2), σ(3))`.
    pub fn from_images(images: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &x in &images {
            if !(1..=3).contains(&x) || seen[x as usize - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Perm3([images[0] - 1, images[1] - 1, images[2] - 1]))
    }

    /// One-based images `(σ(1), σ(2), σ(3))`.
    pub fn images(self) -> [u8; 3] {
        [self.0[0] + 1, self.0[1] + 1, self.0[2] + 1]
    }

    /// Image of the zero-based point `k`.
    pub fn apply(self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (k, &img) in self.0.iter().enumerate() {
            inv[img as usize] = k as u8;
        }
        Perm3(inv)
    }

    /// Position in the basis order `[id, τ₁₂, τ₁₃, τ₂₃, c₁, c₂]`.
    pub fn index(self) -> usize {
        Perm3::ALL
            .iter()
            .position(|&p| p == self)
            .expect("ALL lists every permutation")
    }

    pub fn is_even(self) -> bool {
        matches!(self, Perm3::ID | Perm3::C1 | Perm3::C2)
    }

    pub fn sign(self) -> Rational {
        if self.is_even() {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    /// Token used by the expression grammar.
    pub fn name(self) -> &'static str {
        ["id", "t12", "t13", "t23", "c1", "c2"][self.index()]
    }
}

impl fmt::Debug for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `p∘q`: apply `q` first, then `p`.
pub fn compose(p: Perm3, q: Perm3) -> Perm3 {
    Perm3([
        p.0[q.0[0] as usize],
        p.0[q.0[1] as usize],
        p.0[q.0[2] as usize],
    ])
}

pub fn sign(p: Perm3) -> Rational {
    p.sign()
}

/// An element of ℚ[Σ₃] in the basis order of [`Perm3::ALL`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupAlgElem {
    coords: [Rational; 6],
}

impl GroupAlgElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(p: Perm3) -> Self {
        let mut v = Self::zero();
        v.coords[p.index()] = Rational::one();
        v
    }

    pub fn from_coords(coords: [Rational; 6]) -> Self {
        GroupAlgElem { coords }
    }

    pub fn from_integers(coords: [i64; 6]) -> Self {
        GroupAlgElem {
            coords: coords.map(Rational::from),
        }
    }

    pub fn from_vector(v: &Vector) -> Result<Self> {
        linalg::check_len(6, v.len())?;
        Ok(GroupAlgElem {
            coords: std::array::from_fn(|i| v[i].clone()),
        })
    }

    /// Sum of `sign(σ)·σ`, or of plain `σ`, over a set of permutations.
    fn sum_of(perms: &[Perm3], signed: bool) -> Self {
        perms.iter().fold(Self::zero(), |acc, &p| {
            let term = Self::basis(p);
            if signed && !p.is_even() {
                acc - term
            } else {
                acc + term
            }
        })
    }

    pub fn coords(&self) -> &[Rational; 6] {
        &self.coords
    }

    pub fn coeff(&self, p: Perm3) -> &Rational {
        &self.coords[p.index()]
    }

    /// Nonzero terms `(σ, a_σ)` in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (Perm3, &Rational)> {
        Perm3::ALL
            .into_iter()
            .zip(self.coords.iter())
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn to_vector(&self) -> Vector {
        self.coords.iter().cloned().collect()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        GroupAlgElem {
            coords: std::array::from_fn(|i| &self.coords[i] * c),
        }
    }
}

impl Add for GroupAlgElem {
    type Output = GroupAlgElem;
    fn add(self, rhs: GroupAlgElem) -> GroupAlgElem {
        &self + &rhs
    }
}

impl Add for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn add(self, rhs: &GroupAlgElem) -> GroupAlgElem {
        GroupAlgElem {
            coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]),
        }
    }
}

impl Sub for GroupAlgElem {
    type Output = GroupAlgElem;
    fn sub(self, rhs: GroupAlgElem) -> GroupAlgElem {
        &self - &rhs
    }
}

impl Sub for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn sub(self, rhs: &GroupAlgElem) -> GroupAlgElem {
        GroupAlgElem {
            coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]),
        }
    }
}

impl Neg for GroupAlgElem {
    type Output = GroupAlgElem;
    fn neg(self) -> GroupAlgElem {
        GroupAlgElem {
            coords: self.coords.map(|c| -c),
        }
    }
}

impl Mul for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn mul(self, rhs: &GroupAlgElem) -> GroupAlgElem {
        ga_multiply(self, rhs)
    }
}

impl Mul for GroupAlgElem {
    type Output = GroupAlgElem;
    fn mul(self, rhs: GroupAlgElem) -> GroupAlgElem {
        ga_multiply(&self, &rhs)
    }
}

impl fmt::Display for GroupAlgElem {
    /// Canonical expression form, e.g. `id - t12 + 3/2*c1`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.terms() {
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            f.write_str(p.name())?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Bilinear extension of [`compose`].
pub fn ga_multiply(u: &GroupAlgElem, v: &GroupAlgElem) -> GroupAlgElem {
    let mut out = GroupAlgElem::zero();
    for (p, a) in u.terms() {
        for (q, b) in v.terms() {
            out.coords[compose(p, q).index()] += &(a * b);
        }
    }
    out
}

/// One of the six subgroups `G₁ … G₆` of Σ₃.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubgroupId(u8);

impl SubgroupId {
    pub const ALL: [SubgroupId; 6] = [
        SubgroupId(1),
        SubgroupId(2),
        SubgroupId(3),
        SubgroupId(4),
        SubgroupId(5),
        SubgroupId(6),
    ];

    /// Indices for which the `G_i^!` identities are defined.
    pub const BANG: [SubgroupId; 5] = [
        SubgroupId(2),
        SubgroupId(3),
        SubgroupId(4),
        SubgroupId(5),
        SubgroupId(6),
    ];

    pub fn new(i: u8) -> Result<Self> {
        if (1..=6).contains(&i) {
            Ok(SubgroupId(i))
        } else {
            Err(Error::InvalidSubgroup(i))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn elements(self) -> &'static [Perm3] {
        match self.0 {
            1 => &[Perm3::ID],
            2 => &[Perm3::ID, Perm3::T12],
            3 => &[Perm3::ID, Perm3::T23],
            4 => &[Perm3::ID, Perm3::T13],
            5 => &[Perm3::ID, Perm3::C1, Perm3::C2],
            _ => &Perm3::ALL,
        }
    }

    pub fn order(self) -> usize {
        self.elements().len()
    }

    /// `a_i = Σ_{σ∈G_i} sign(σ)·σ`.
    pub fn alternating_sum(self) -> GroupAlgElem {
        GroupAlgElem::sum_of(self.elements(), true)
    }

    /// `u_i = Σ_{σ∈G_i} σ⁻¹`.
    pub fn inverse_sum(self) -> GroupAlgElem {
        let inverses: Vec<Perm3> = self.elements().iter().map(|p| p.inverse()).collect();
        GroupAlgElem::sum_of(&inverses, false)
    }

    /// Name of the corresponding class of algebras.
    pub fn family(self) -> &'static str {
        match self.0 {
            1 => "associative",
            2 => "Vinberg",
            3 => "pre-Lie",
            4 => "G4",
            5 => "G5-generalized-Jacobi",
            _ => "Lie-admissible",
        }
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.0)
    }
}

/// Named vectors of ℚ[Σ₃].
///
/// * `V`, `W`: the sign and trivial isotypic generators.
/// * `a1`…`a6`: signed sums over `G_i`.
/// * `u1`…`u6`: sums of inverses over `G_i`.
/// * `v1`…`v6`: single generators `id, τ₁₂, τ₂₃, τ₁₃, id+c₁+c₂, V`.
pub fn special_vector(name: &str) -> Result<GroupAlgElem> {
    let unknown = || Error::UnknownVector(name.to_string());
    let normalized: String = name
        .chars()
        .map(|c| match c {
            '₁'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap_or(c),
            _ => c,
        })
        .collect();
    match normalized.as_str() {
        "V" => return Ok(GroupAlgElem::from_integers([1, -1, -1, -1, 1, 1])),
        "W" => return Ok(GroupAlgElem::from_integers([1; 6])),
        _ => {}
    }
    let mut chars = normalized.chars();
    let (Some(kind), Some(digit), None) = (chars.next(), chars.next(), chars.next()) else {
        return Err(unknown());
    };
    let i = digit.to_digit(10).ok_or_else(unknown)? as u8;
    let g = SubgroupId::new(i).map_err(|_| unknown())?;
    match kind {
        'a' => Ok(g.alternating_sum()),
        'u' => Ok(g.inverse_sum()),
        'v' => Ok(match i {
            1 => GroupAlgElem::basis(Perm3::ID),
            2 => GroupAlgElem::basis(Perm3::T12),
            3 => GroupAlgElem::basis(Perm3::T23),
            4 => GroupAlgElem::basis(Perm3::T13),
            5 => GroupAlgElem::from_integers([1, 0, 0, 0, 1, 1]),
            _ => special_vector("V")?,
        }),
        _ => Err(unknown()),
    }
}

/// How Σ₃ acts on ℚ[Σ₃].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Action {
    /// `(σ, v) ↦ σ⁻¹∘v`.
    Inverse,
    /// `(σ, v) ↦ v∘σ`; the closure relevant to associator annihilators.
    RightMultiplication,
}

pub fn act(action: Action, sigma: Perm3, v: &GroupAlgElem) -> GroupAlgElem {
    match action {
        Action::Inverse => ga_multiply(&GroupAlgElem::basis(sigma.inverse()), v),
        Action::RightMultiplication => ga_multiply(v, &GroupAlgElem::basis(sigma)),
    }
}

/// The six translates `σ⁻¹∘v`, σ in basis order, duplicates kept.
pub fn orbit(v: &GroupAlgElem) -> [GroupAlgElem; 6] {
    Perm3::ALL.map(|s| act(Action::Inverse, s, v))
}

fn span_of(elems: &[GroupAlgElem]) -> Subspace {
    let vectors: Vec<Vector> = elems.iter().map(GroupAlgElem::to_vector).collect();
    linalg::span(6, &vectors).expect("group-algebra vectors have length 6")
}

/// `F_v`, the span of the orbit of `v`.
pub fn orbit_span(v: &GroupAlgElem) -> Subspace {
    span_of(&orbit(v))
}

/// `v·ℚ[Σ₃]`, the span of `{v∘σ : σ ∈ Σ₃}`.
pub fn right_ideal(v: &GroupAlgElem) -> Subspace {
    let translates = Perm3::ALL.map(|s| act(Action::RightMultiplication, s, v));
    span_of(&translates)
}

pub fn is_invariant(s: &Subspace, action: Action) -> Result<bool> {
    linalg::check_len(6, s.ambient_dim())?;
    for b in s.basis() {
        let b = GroupAlgElem::from_vector(b)?;
        for sigma in Perm3::ALL {
            if !s.contains(&act(action, sigma, &b).to_vector())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Multiplicities of the trivial, sign and two-dimensional standard
/// irreducible representations of Σ₃.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Multiplicities {
    pub trivial: usize,
    pub sign: usize,
    pub standard: usize,
}

impl Multiplicities {
    pub fn dim(&self) -> usize {
        self.trivial + self.sign + 2 * self.standard
    }
}

/// Maschke decomposition of a subspace invariant under [`Action::Inverse`].
pub fn maschke_multiplicities(s: &Subspace) -> Result<Multiplicities> {
    maschke_multiplicities_under(s, Action::Inverse)
}

/// Maschke decomposition of a subspace invariant under `action`.
///
/// Each multiplicity is the rank of the image of `s` under a central
/// idempotent (`W/6`, `V/6`, and `id − W/6 − V/6`), divided by the degree of
/// the irreducible. Central idempotents commute with either action.
pub fn maschke_multiplicities_under(s: &Subspace, action: Action) -> Result<Multiplicities> {
    if !is_invariant(s, action)? {
        return Err(Error::NotInvariant);
    }
    let sixth = Rational::new(1, 6).expect("nonzero denominator");
    let e_trivial = special_vector("W")?.scaled(&sixth);
    let e_sign = special_vector("V")?.scaled(&sixth);
    let e_standard = GroupAlgElem::basis(Perm3::ID) - e_trivial.clone() - e_sign.clone();
    let image_dim = |e: &GroupAlgElem| -> Result<usize> {
        let images = s
            .basis()
            .iter()
            .map(|b| Ok(ga_multiply(e, &GroupAlgElem::from_vector(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(span_of(&images).dim())
    };
    let standard = image_dim(&e_standard)?;
    debug_assert_eq!(standard % 2, 0);
    Ok(Multiplicities {
        trivial: image_dim(&e_trivial)?,
        sign: image_dim(&e_sign)?,
        standard: standard / 2,
    })
}
