//! Elements, functionals and linear maps on the underlying module of an
//! algebra, all as exact coefficient arrays over a fixed basis.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// An element of the algebra, as coefficients over the basis `e_0..e_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    pub field: FieldSpec,
    pub coeffs: Vec<Scalar>,
}

/// A linear functional, as a covector of the same length.
#[derive(Debug, Clone, PartialEq)]
pub struct Functional {
    pub field: FieldSpec,
    pub coeffs: Vec<Scalar>,
}

/// A linear endomorphism acting on coefficient vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct LinMap {
    mat: Matrix,
}

impl AlgebraElement {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        AlgebraElement {
            field,
            coeffs: alloc::vec![field.zero(); n],
        }
    }

    pub fn basis(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut e = Self::zero(field, n);
        e.coeffs[i] = field.one();
        e
    }

    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Scalar>) -> Self {
        AlgebraElement { field, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        AlgebraElement {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| self.field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        AlgebraElement {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| self.field.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        AlgebraElement {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| self.field.mul(s, a)).collect(),
        }
    }

    /// Index and value of the first nonzero coordinate.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !self.field.is_zero(c))
    }
}

impl Functional {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Functional {
            field,
            coeffs: alloc::vec![field.zero(); n],
        }
    }

    /// The coordinate functional `f^i` dual to the standard basis.
    pub fn coordinate(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut f = Self::zero(field, n);
        f.coeffs[i] = field.one();
        f
    }

    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Scalar>) -> Self {
        Functional { field, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Exact evaluation `<f | a>`.
    pub fn eval(&self, a: &AlgebraElement) -> Scalar {
        assert_eq!(self.dim(), a.dim());
        let f = self.field;
        let mut acc = f.zero();
        for (c, x) in self.coeffs.iter().zip(&a.coeffs) {
            if !f.is_zero(c) && !f.is_zero(x) {
                acc = f.add(&acc, &f.mul(c, x));
            }
        }
        acc
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Functional {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| self.field.mul(s, a)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Functional {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| self.field.add(a, b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }
}

impl LinMap {
    pub fn new(mat: Matrix) -> Self {
        assert_eq!(mat.rows(), mat.cols(), "linear map must be square");
        LinMap { mat }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinMap {
            mat: Matrix::identity(field, n),
        }
    }

    /// Builds the map column by column from images of basis vectors.
    pub fn from_images(field: FieldSpec, images: &[AlgebraElement]) -> Self {
        let n = images.len();
        LinMap {
            mat: Matrix::from_fn(field, n, n, |r, c| images[c].coeffs[r].clone()),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.mat.field()
    }

    pub fn apply(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            field: a.field,
            coeffs: self.mat.mul_vec(&a.coeffs),
        }
    }

    /// Pullback of a functional: `f . self`.
    pub fn pullback(&self, f: &Functional) -> Functional {
        Functional {
            field: f.field,
            coeffs: self.mat.mul_covec(&f.coeffs),
        }
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &LinMap) -> LinMap {
        LinMap {
            mat: self.mat.mul(&other.mat),
        }
    }

    pub fn inverse(&self) -> Option<LinMap> {
        self.mat.inverse().map(|mat| LinMap { mat })
    }

    pub fn is_identity(&self) -> bool {
        let f = self.field();
        let n = self.dim();
        (0..n).all(|r| (0..n).all(|c| if r == c { f.is_one(self.mat.get(r, c)) } else { f.is_zero(self.mat.get(r, c)) }))
    }

    pub fn column(&self, c: usize) -> AlgebraElement {
        AlgebraElement {
            field: self.field(),
            coeffs: (0..self.dim()).map(|r| self.mat.get(r, c).clone()).collect(),
        }
    }
}

fn fmt_combo(f: &mut fmt::Formatter<'_>, field: FieldSpec, coeffs: &[Scalar], symbol: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if field.is_zero(c) {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        if field.is_one(c) {
            write!(f, "{symbol}{i}")?;
        } else {
            write!(f, "({c})*{symbol}{i}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combo(f, self.field, &self.coeffs, "e")
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combo(f, self.field, &self.coeffs, "f")
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        for r in 0..n {
            write!(f, "[")?;
            for c in 0..n {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.mat.get(r, c))?;
            }
            write!(f, "]")?;
            if r + 1 < n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Renders a short witness string for report entries.
pub fn display_string(value: &impl fmt::Display) -> String {
    alloc::format!("{value}")
}
