//! Exact vectors and subspaces over ℚ.
//!
//! A [`Subspace`] always stores its basis in reduced row-echelon form with
//! leading coefficient one, so two subspaces are equal as sets exactly when
//! their stored bases are equal.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn zeros(len: usize) -> Self {
        Vector(vec![Rational::zero(); len])
    }

    /// The `index`-th standard basis vector.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }

    pub fn scaled(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            if !y.is_zero() {
                *x += &(c * y);
            }
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        check_len(self.len(), other.len())?;
        Ok(Vector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        check_len(self.len(), other.len())?;
        Ok(Vector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn dot(&self, other: &Vector) -> Result<Rational> {
        check_len(self.len(), other.len())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    fn leading(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Linear subspace of ℚ^n in canonical reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| Vector::unit(ambient, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.leading().expect("basis rows are nonzero"))
            .collect()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is a member.
    fn reduce(&self, v: &mut Vector) {
        for row in &self.basis {
            let p = row.leading().expect("basis rows are nonzero");
            if !v[p].is_zero() {
                let c = -&v[p];
                v.add_scaled(&c, row);
            }
        }
    }

    /// Adds `v` to the spanning set, keeping the basis canonical. Returns
    /// whether the dimension grew.
    fn insert(&mut self, mut v: Vector) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.leading() else {
            return false;
        };
        let inv = v[p].recip().expect("leading entry is nonzero");
        let v = v.scaled(&inv);
        for row in &mut self.basis {
            if !row[p].is_zero() {
                let c = -&row[p];
                row.add_scaled(&c, &v);
            }
        }
        let at = self
            .basis
            .iter()
            .position(|row| row.leading().expect("basis rows are nonzero") > p)
            .unwrap_or(self.basis.len());
        self.basis.insert(at, v);
        true
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        check_len(self.ambient, v.len())?;
        let mut w = v.clone();
        self.reduce(&mut w);
        Ok(w.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_len(other.ambient, self.ambient)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient", &self.ambient)
            .field("basis", &self.basis)
            .finish()
    }
}

/// Canonical basis of the linear span of `vectors` inside ℚ^`ambient`.
pub fn span<'a, I>(ambient: usize, vectors: I) -> Result<Subspace>
where
    I: IntoIterator<Item = &'a Vector>,
{
    let mut s = Subspace::zero(ambient);
    for v in vectors {
        check_len(ambient, v.len())?;
        if !v.is_zero() {
            s.insert(v.clone());
        }
    }
    Ok(s)
}

/// Rank of a matrix given by its rows.
pub fn rank(rows: &[Vector], cols: usize) -> Result<usize> {
    Ok(span(cols, rows)?.dim())
}

/// Exact null space `{x : M x = 0}` of the matrix with the given rows.
pub fn kernel(rows: &[Vector], cols: usize) -> Result<Subspace> {
    let row_space = span(cols, rows)?;
    let pivots = row_space.pivots();
    let mut null = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = Vector::zeros(cols);
        x[free] = Rational::one();
        for (row, &p) in row_space.basis().iter().zip(&pivots) {
            x[p] = -&row[free];
        }
        null.push(x);
    }
    span(cols, &null)
}

pub fn member(v: &Vector, s: &Subspace) -> Result<bool> {
    s.contains(v)
}

/// A linear map `ℚ^src → ℚ^dst`, given by the images of the standard basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    dst: usize,
    images: Vec<Vector>,
}

impl LinearMap {
    pub fn new(dst: usize, images: Vec<Vector>) -> Result<Self> {
        for v in &images {
            check_len(dst, v.len())?;
        }
        Ok(LinearMap { dst, images })
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            dst: n,
            images: (0..n).map(|i| Vector::unit(n, i)).collect(),
        }
    }

    pub fn src_dim(&self) -> usize {
        self.images.len()
    }

    pub fn dst_dim(&self) -> usize {
        self.dst
    }

    pub fn image_of_basis(&self, i: usize) -> &Vector {
        &self.images[i]
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        check_len(self.src_dim(), x.len())?;
        let mut out = Vector::zeros(self.dst);
        for (c, img) in x.iter().zip(&self.images) {
            out.add_scaled(c, img);
        }
        Ok(out)
    }

    /// `f⊗g` on the row-major pair bases: `(a, b) ↦ a·n_b + b`.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let mut images = Vec::with_capacity(self.src_dim() * other.src_dim());
        for f in &self.images {
            for g in &other.images {
                images.push(
                    f.iter()
                        .flat_map(|x| g.iter().map(move |y| x * y))
                        .collect(),
                );
            }
        }
        LinearMap {
            dst: self.dst * other.dst,
            images,
        }
    }
}
