//! Algebra presentations by structure constants, and the checks that a
//! candidate table really is a unital associative algebra.

use alloc::vec::Vec;

use crate::field::{FieldSpec, Scalar};
use crate::linear::{AlgebraElement, Functional, LinMap};
use crate::report::{LawScan, Report};
use crate::tensor::{MultTable, Tensor};
use crate::Result;

/// A finite-dimensional algebra over an exact field, presented by its
/// multiplication table `e_i e_j = sum_k m_{ij}^k e_k` and unit vector.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraPresentation {
    table: MultTable,
}

impl AlgebraPresentation {
    pub fn new(field: FieldSpec, dim: usize, dense: &[Scalar], unit: Vec<Scalar>) -> Result<Self> {
        Ok(AlgebraPresentation {
            table: MultTable::new(field, dim, dense, unit)?,
        })
    }

    pub fn from_table(table: MultTable) -> Self {
        AlgebraPresentation { table }
    }

    pub fn field(&self) -> FieldSpec {
        self.table.field()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &MultTable {
        &self.table
    }

    pub fn unit(&self) -> AlgebraElement {
        self.table.unit()
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.field(), self.dim(), i)
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.table.mul_elems(a, b)
    }

    /// Product of several factors, left to right.
    pub fn product(&self, factors: &[&AlgebraElement]) -> AlgebraElement {
        let mut acc = self.unit();
        for x in factors {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn left_mult(&self, a: &AlgebraElement) -> LinMap {
        self.table.left_mult(a)
    }

    pub fn right_mult(&self, a: &AlgebraElement) -> LinMap {
        self.table.right_mult(a)
    }

    pub fn invert(&self, a: &AlgebraElement) -> Option<AlgebraElement> {
        self.table.invert_elem(a)
    }

    /// Conjugation `x -> u x u^{-1}` as a linear map.
    pub fn conjugation(&self, u: &AlgebraElement, u_inv: &AlgebraElement) -> LinMap {
        self.left_mult(u).compose(&self.right_mult(u_inv))
    }

    pub fn unit_tensor(&self, rank: usize) -> Tensor {
        let one = self.unit();
        let parts: Vec<&AlgebraElement> = (0..rank).map(|_| &one).collect();
        Tensor::of_elements(&parts)
    }

    /// `<f | a b>` for a functional and two elements.
    pub fn eval_on_product(&self, f: &Functional, a: &AlgebraElement, b: &AlgebraElement) -> Scalar {
        f.eval(&self.mul(a, b))
    }
}

/// Checks associativity and both unit laws on every basis index.
pub fn verify_algebra(alg: &AlgebraPresentation) -> Report {
    let n = alg.dim();
    let mut report = Report::new("algebra");

    let mut assoc = LawScan::new("associativity (e_i e_j) e_k = e_i (e_j e_k)");
    for i in 0..n {
        for j in 0..n {
            let ij = alg.mul(&alg.basis(i), &alg.basis(j));
            for k in 0..n {
                let lhs = alg.mul(&ij, &alg.basis(k));
                let rhs = alg.mul(&alg.basis(i), &alg.mul(&alg.basis(j), &alg.basis(k)));
                assoc.expect(lhs == rhs, &[i, j, k], || lhs.clone(), || rhs.clone());
            }
        }
    }
    assoc.finish(&mut report);

    let one = alg.unit();
    let mut unit_law = LawScan::new("unit laws 1*e_i = e_i = e_i*1");
    for i in 0..n {
        let e = alg.basis(i);
        let left = alg.mul(&one, &e);
        unit_law.expect(left == e, &[i], || left.clone(), || e.clone());
        let right = alg.mul(&e, &one);
        unit_law.expect(right == e, &[i], || right.clone(), || e.clone());
    }
    unit_law.finish(&mut report);

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    /// C2 group algebra over Q.
    pub(crate) fn c2_algebra() -> AlgebraPresentation {
        let f = q();
        let mut dense = vec![f.zero(); 8];
        dense[0] = f.one();
        dense[2 + 1] = f.one();
        dense[4 + 1] = f.one();
        dense[6] = f.one();
        AlgebraPresentation::new(f, 2, &dense, vec![f.one(), f.zero()]).unwrap()
    }

    #[test]
    fn c2_is_an_algebra() {
        let report = verify_algebra(&c2_algebra());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn wrong_unit_is_caught() {
        let f = q();
        let good = c2_algebra();
        let mut dense = vec![f.zero(); 8];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    dense[(i * 2 + j) * 2 + k] = good.table().constant(i, j, k);
                }
            }
        }
        // claim the unit is g instead of 1
        let bad = AlgebraPresentation::new(f, 2, &dense, vec![f.zero(), f.one()]).unwrap();
        let report = verify_algebra(&bad);
        assert!(!report.passed());
        assert!(!report.check("unit laws 1*e_i = e_i = e_i*1").unwrap().passed);
        assert!(report.check("associativity (e_i e_j) e_k = e_i (e_j e_k)").unwrap().passed);
    }

    #[test]
    fn inverse_of_group_element() {
        let alg = c2_algebra();
        let g = alg.basis(1);
        let inv = alg.invert(&g).unwrap();
        assert_eq!(inv, g);
        let f = q();
        let nilpotent_free = alg.invert(&AlgebraElement::from_coeffs(f, vec![f.one(), f.one()]));
        // 1 + g is not invertible in Q[C2] (it maps to 0 under the sign character)
        assert!(nilpotent_free.is_none());
    }
}
