//! Dense tensors over `H^(x)m` with leg-wise contraction machinery.
//!
//! A [`Tensor`] of rank `m` stores all `n^m` coefficients of an element
//! of the m-fold tensor power of an n-dimensional space. Operations that
//! need the multiplication of the algebra (pointwise products in
//! `H^(x)m`, merging legs through the multiplication map) take a
//! [`MultTable`]; everything iterates over nonzero entries only, so the
//! very sparse tensors produced by group-like presentations stay cheap.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::linear::{AlgebraElement, Functional, LinMap};
use crate::matrix::Matrix;
use crate::{Error, Result};

/// Structure constants `e_i e_j = sum_k m_{ij}^k e_k` together with the
/// unit element, in the sparse per-pair form used by tensor contraction.
#[derive(Debug, Clone, PartialEq)]
pub struct MultTable {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
}

impl MultTable {
    /// From dense constants (`n^3` scalars, index `(i*n + j)*n + k`).
    pub fn new(field: FieldSpec, n: usize, dense: &[Scalar], unit: Vec<Scalar>) -> Result<Self> {
        if dense.len() != n * n * n {
            return Err(Error::Shape(alloc::format!(
                "multiplication table has {} entries, expected {}",
                dense.len(),
                n * n * n
            )));
        }
        if unit.len() != n {
            return Err(Error::Shape(alloc::format!(
                "unit has {} coordinates, expected {}",
                unit.len(),
                n
            )));
        }
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut row = Vec::new();
                for k in 0..n {
                    let c = &dense[(i * n + j) * n + k];
                    if !field.is_zero(c) {
                        row.push((k, c.clone()));
                    }
                }
                rows.push(row);
            }
        }
        Ok(MultTable { field, n, rows, unit })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::from_coeffs(self.field, self.unit.clone())
    }

    /// Sparse expansion of `e_i e_j`.
    pub fn product_row(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.rows[i * self.n + j]
    }

    /// Dense structure constant `m_{ij}^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.product_row(i, j)
            .iter()
            .find(|(idx, _)| *idx == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn mul_elems(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let f = self.field;
        let mut out = AlgebraElement::zero(f, self.n);
        for (i, ca) in a.coeffs.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let c = f.mul(ca, cb);
                for (k, m) in self.product_row(i, j) {
                    out.coeffs[*k] = f.add(&out.coeffs[*k], &f.mul(&c, m));
                }
            }
        }
        out
    }

    /// Left multiplication `x -> a x` as a linear map.
    pub fn left_mult(&self, a: &AlgebraElement) -> LinMap {
        let images: Vec<AlgebraElement> = (0..self.n)
            .map(|j| self.mul_elems(a, &AlgebraElement::basis(self.field, self.n, j)))
            .collect();
        LinMap::from_images(self.field, &images)
    }

    /// Right multiplication `x -> x a` as a linear map.
    pub fn right_mult(&self, a: &AlgebraElement) -> LinMap {
        let images: Vec<AlgebraElement> = (0..self.n)
            .map(|j| self.mul_elems(&AlgebraElement::basis(self.field, self.n, j), a))
            .collect();
        LinMap::from_images(self.field, &images)
    }

    /// Two-sided inverse of `a`, if any.
    pub fn invert_elem(&self, a: &AlgebraElement) -> Option<AlgebraElement> {
        let inv = self.left_mult(a).matrix().solve(&self.unit)?;
        let candidate = AlgebraElement::from_coeffs(self.field, inv);
        // Dedekind-finiteness makes the other side automatic; check anyway.
        if self.mul_elems(&candidate, a).coeffs == self.unit {
            Some(candidate)
        } else {
            None
        }
    }
}

/// A dense element of `H^(x)rank` with legs of dimension `n`.
///
/// Leg 0 is the most significant index: the flat index of
/// `(i_0, ..., i_{r-1})` is `((i_0 n + i_1) n + ...) n + i_{r-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    field: FieldSpec,
    n: usize,
    rank: usize,
    data: Vec<Scalar>,
}

fn pow(n: usize, e: usize) -> usize {
    let mut acc = 1;
    for _ in 0..e {
        acc *= n;
    }
    acc
}

impl Tensor {
    pub fn zero(field: FieldSpec, n: usize, rank: usize) -> Self {
        Tensor {
            field,
            n,
            rank,
            data: vec![field.zero(); pow(n, rank)],
        }
    }

    pub fn from_element(a: &AlgebraElement) -> Self {
        Tensor {
            field: a.field,
            n: a.dim(),
            rank: 1,
            data: a.coeffs.clone(),
        }
    }

    /// Outer product of elements: `a_0 (x) a_1 (x) ...`.
    pub fn of_elements(parts: &[&AlgebraElement]) -> Self {
        assert!(!parts.is_empty());
        let mut t = Self::from_element(parts[0]);
        for p in &parts[1..] {
            t = t.outer(&Self::from_element(p));
        }
        t
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn stride(&self, leg: usize) -> usize {
        pow(self.n, self.rank - 1 - leg)
    }

    fn digits(&self, mut flat: usize) -> Vec<usize> {
        let mut d = vec![0; self.rank];
        for leg in (0..self.rank).rev() {
            d[leg] = flat % self.n;
            flat /= self.n;
        }
        d
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        assert_eq!(idx.len(), self.rank);
        let flat: usize = idx.iter().fold(0, |acc, &i| acc * self.n + i);
        &self.data[flat]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        assert_eq!(idx.len(), self.rank);
        let flat: usize = idx.iter().fold(0, |acc, &i| acc * self.n + i);
        self.data[flat] = v;
    }

    fn add_at(&mut self, flat: usize, v: &Scalar) {
        self.data[flat] = self.field.add(&self.data[flat], v);
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.data.iter().enumerate().filter(|(_, c)| !self.field.is_zero(c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.rank, self.n), (other.rank, other.n));
        Tensor {
            field: self.field,
            n: self.n,
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| self.field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.rank, self.n), (other.rank, other.n));
        Tensor {
            field: self.field,
            n: self.n,
            rank: self.rank,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| self.field.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        Tensor {
            field: self.field,
            n: self.n,
            rank: self.rank,
            data: self.data.iter().map(|a| self.field.mul(s, a)).collect(),
        }
    }

    pub fn outer(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.n, other.n);
        let mut out = Tensor::zero(self.field, self.n, self.rank + other.rank);
        let shift = pow(self.n, other.rank);
        for (ia, va) in self.nonzeros() {
            for (ib, vb) in other.nonzeros() {
                out.add_at(ia * shift + ib, &self.field.mul(va, vb));
            }
        }
        out
    }

    /// Gather permutation: result leg `j` is `self` leg `perm[j]`.
    pub fn permute_legs(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.rank);
        let mut seen = vec![false; self.rank];
        for &p in perm {
            assert!(!seen[p], "permutation repeats a leg");
            seen[p] = true;
        }
        let mut out = Tensor::zero(self.field, self.n, self.rank);
        for (flat, v) in self.nonzeros() {
            let d = self.digits(flat);
            let target: usize = perm.iter().fold(0, |acc, &src| acc * self.n + d[src]);
            out.data[target] = v.clone();
        }
        out
    }

    /// Applies a linear map to one leg.
    pub fn map_leg(&self, leg: usize, m: &LinMap) -> Tensor {
        assert!(leg < self.rank);
        assert_eq!(m.dim(), self.n);
        let f = self.field;
        let stride = self.stride(leg);
        let mut out = Tensor::zero(f, self.n, self.rank);
        for (flat, v) in self.nonzeros() {
            let i = (flat / stride) % self.n;
            let base = flat - i * stride;
            for j in 0..self.n {
                let c = m.matrix().get(j, i);
                if !f.is_zero(c) {
                    out.add_at(base + j * stride, &f.mul(c, v));
                }
            }
        }
        out
    }

    /// Contracts one leg with a functional, lowering the rank by one.
    pub fn apply_functional_leg(&self, leg: usize, func: &Functional) -> Tensor {
        assert!(leg < self.rank);
        assert_eq!(func.dim(), self.n);
        let f = self.field;
        let stride = self.stride(leg);
        let mut out = Tensor::zero(f, self.n, self.rank - 1);
        for (flat, v) in self.nonzeros() {
            let i = (flat / stride) % self.n;
            if f.is_zero(&func.coeffs[i]) {
                continue;
            }
            let high = flat / (stride * self.n);
            let low = flat % stride;
            out.add_at(high * stride + low, &f.mul(&func.coeffs[i], v));
        }
        out
    }

    /// Substitutes leg `leg` by the rank-2 expansion of its basis index:
    /// index `i` is replaced by `expansions[i]`, raising the rank by one.
    /// This is how a coproduct is applied to one leg.
    pub fn expand_leg(&self, leg: usize, expansions: &[Tensor]) -> Tensor {
        assert!(leg < self.rank);
        assert_eq!(expansions.len(), self.n);
        let f = self.field;
        let stride = self.stride(leg);
        let mut out = Tensor::zero(f, self.n, self.rank + 1);
        // in the result, legs (leg, leg+1) replace the old leg
        let out_stride = out.stride(leg + 1); // == stride
        for (flat, v) in self.nonzeros() {
            let i = (flat / stride) % self.n;
            let high = flat / (stride * self.n);
            let low = flat % stride;
            let base = high * (out_stride * self.n * self.n) + low;
            let exp = &expansions[i];
            assert_eq!(exp.rank(), 2);
            for (eflat, w) in exp.nonzeros() {
                let a = eflat / self.n;
                let b = eflat % self.n;
                out.add_at(base + (a * self.n + b) * out_stride, &f.mul(v, w));
            }
        }
        out
    }

    /// Places the legs of `self` at `positions` inside a rank-`total`
    /// tensor whose remaining legs carry the unit of the algebra.
    pub fn embed(&self, total: usize, positions: &[usize], table: &MultTable) -> Tensor {
        assert_eq!(positions.len(), self.rank);
        assert!(positions.iter().all(|&p| p < total));
        let f = self.field;
        let mut used = vec![false; total];
        for &p in positions {
            assert!(!used[p], "duplicate embed position");
            used[p] = true;
        }
        let free: Vec<usize> = (0..total).filter(|&p| !used[p]).collect();
        let unit = table.unit();
        let unit_nz: Vec<(usize, &Scalar)> = unit
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .collect();
        let mut out = Tensor::zero(f, self.n, total);
        let strides: Vec<usize> = (0..total).map(|l| pow(self.n, total - 1 - l)).collect();
        for (flat, v) in self.nonzeros() {
            let d = self.digits(flat);
            let base: usize = d.iter().zip(positions).map(|(&i, &p)| i * strides[p]).sum();
            // distribute unit coefficients over the free legs
            let mut stack: Vec<(usize, usize, Scalar)> = vec![(0, base, v.clone())];
            while let Some((depth, acc, coeff)) = stack.pop() {
                if depth == free.len() {
                    out.add_at(acc, &coeff);
                    continue;
                }
                for (i, c) in &unit_nz {
                    stack.push((depth + 1, acc + i * strides[free[depth]], f.mul(&coeff, c)));
                }
            }
        }
        out
    }

    /// Pointwise product in the algebra `H^(x)rank`: multiplies matching
    /// legs through the multiplication table, `self` acting on the left.
    pub fn mul_pointwise(&self, other: &Tensor, table: &MultTable) -> Tensor {
        assert_eq!((self.rank, self.n), (other.rank, other.n));
        let f = self.field;
        let mut out = Tensor::zero(f, self.n, self.rank);
        let other_nz: Vec<(usize, &Scalar)> = other.nonzeros().collect();
        for (ia, va) in self.nonzeros() {
            let da = self.digits(ia);
            for (ib, vb) in &other_nz {
                let db = self.digits(*ib);
                let coeff = f.mul(va, vb);
                // expand the product of basis tensors leg by leg
                let mut stack: Vec<(usize, usize, Scalar)> = vec![(0, 0, coeff)];
                while let Some((leg, acc, c)) = stack.pop() {
                    if leg == self.rank {
                        out.add_at(acc, &c);
                        continue;
                    }
                    for (k, m) in table.product_row(da[leg], db[leg]) {
                        stack.push((leg + 1, acc * self.n + k, f.mul(&c, m)));
                    }
                }
            }
        }
        out
    }

    /// Multiplies legs `leg` and `leg+1` into one, lowering the rank.
    pub fn mul_adjacent(&self, leg: usize, table: &MultTable) -> Tensor {
        assert!(leg + 1 < self.rank);
        let f = self.field;
        let mut out = Tensor::zero(f, self.n, self.rank - 1);
        let s1 = self.stride(leg + 1);
        for (flat, v) in self.nonzeros() {
            let j = (flat / s1) % self.n;
            let i = (flat / (s1 * self.n)) % self.n;
            let high = flat / (s1 * self.n * self.n);
            let low = flat % s1;
            for (k, m) in table.product_row(i, j) {
                out.add_at(high * (s1 * self.n) + k * s1 + low, &f.mul(v, m));
            }
        }
        out
    }

    /// Multiplies the legs of each group (in the listed order) into a
    /// single output leg. The groups must partition the legs of `self`;
    /// the output has one leg per group.
    pub fn merge_legs(&self, groups: &[&[usize]], table: &MultTable) -> Tensor {
        let mut seen = vec![false; self.rank];
        for g in groups {
            assert!(!g.is_empty(), "empty merge group");
            for &l in *g {
                assert!(l < self.rank && !seen[l], "merge groups must partition the legs");
                seen[l] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "merge groups must cover all legs");
        let perm: Vec<usize> = groups.iter().flat_map(|g| g.iter().copied()).collect();
        let mut t = self.permute_legs(&perm);
        let mut offset = 0;
        for g in groups {
            for _ in 1..g.len() {
                t = t.mul_adjacent(offset, table);
            }
            offset += 1;
        }
        t
    }

    /// The rank-1 tensor as an element.
    pub fn into_element(self) -> AlgebraElement {
        assert_eq!(self.rank, 1);
        AlgebraElement::from_coeffs(self.field, self.data)
    }

    /// Flattens a rank-2 tensor to its `n x n` coefficient matrix.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.rank, 2);
        Matrix::from_fn(self.field, self.n, self.n, |r, c| self.data[r * self.n + c].clone())
    }
}

/// Per-leg operation for [`tensor_contract`].
pub enum LegOp<'a> {
    /// Leave the leg untouched.
    Keep,
    /// Apply a linear map to the leg.
    Map(&'a LinMap),
    /// Contract the leg with a functional (the leg disappears).
    Func(&'a Functional),
}

/// Applies per-leg functionals and maps, then multiplies the designated
/// groups of surviving legs through the algebra multiplication.
///
/// `merge` lists groups by original leg index; every surviving leg must
/// appear in exactly one group, and legs consumed by a functional must
/// not appear. An empty `merge` keeps the surviving legs as they are.
pub fn tensor_contract(t: &Tensor, ops: &[LegOp], merge: &[&[usize]], table: &MultTable) -> Tensor {
    assert_eq!(ops.len(), t.rank(), "one leg op per tensor leg");
    let mut current = t.clone();
    // maps first: they do not disturb leg numbering
    for (leg, op) in ops.iter().enumerate() {
        if let LegOp::Map(m) = op {
            current = current.map_leg(leg, m);
        }
    }
    // functionals from the right so earlier indices stay valid
    let mut position: Vec<Option<usize>> = (0..t.rank()).map(Some).collect();
    for leg in (0..t.rank()).rev() {
        if let LegOp::Func(f) = &ops[leg] {
            current = current.apply_functional_leg(leg, f);
            position[leg] = None;
            for p in position.iter_mut().skip(leg + 1) {
                if let Some(q) = p {
                    *q -= 1;
                }
            }
        }
    }
    if merge.is_empty() {
        return current;
    }
    let translated: Vec<Vec<usize>> = merge
        .iter()
        .map(|g| {
            g.iter()
                .map(|&orig| position[orig].expect("merge group references a contracted leg"))
                .collect()
        })
        .collect();
    let views: Vec<&[usize]> = translated.iter().map(Vec::as_slice).collect();
    current.merge_legs(&views, table)
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (flat, v) in self.nonzeros() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !self.field.is_one(v) {
                write!(f, "({v})*")?;
            }
            let d = self.digits(flat);
            let names: Vec<String> = d.iter().map(|i| alloc::format!("e{i}")).collect();
            write!(f, "{}", names.join("(x)"))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    /// C2 group algebra table: e0 = 1, e1 = g, g^2 = 1.
    fn c2_table() -> MultTable {
        let f = q();
        let mut dense = vec![f.zero(); 8];
        // (i*2 + j)*2 + k
        dense[0] = f.one(); // e0 e0 = e0
        dense[(1) * 2 + 1] = f.one(); // e0 e1 = e1
        dense[(2) * 2 + 1] = f.one(); // e1 e0 = e1
        dense[(3) * 2] = f.one(); // e1 e1 = e0
        let unit = vec![f.one(), f.zero()];
        MultTable::new(f, 2, &dense, unit).unwrap()
    }

    #[test]
    fn pointwise_product_in_square() {
        let f = q();
        let table = c2_table();
        let g = AlgebraElement::basis(f, 2, 1);
        let one = table.unit();
        // (g (x) 1) * (g (x) g) = 1 (x) g
        let a = Tensor::of_elements(&[&g, &one]);
        let b = Tensor::of_elements(&[&g, &g]);
        let prod = a.mul_pointwise(&b, &table);
        assert_eq!(prod, Tensor::of_elements(&[&one, &g]));
    }

    #[test]
    fn counit_leg_on_unit_tensor() {
        let f = q();
        let table = c2_table();
        let one = table.unit();
        let t3 = Tensor::of_elements(&[&one, &one, &one]);
        let eps = Functional::from_coeffs(f, vec![f.one(), f.one()]);
        let contracted = t3.apply_functional_leg(1, &eps);
        assert_eq!(contracted, Tensor::of_elements(&[&one, &one]));
    }

    #[test]
    fn merge_respects_order() {
        let f = q();
        let table = c2_table();
        let g = AlgebraElement::basis(f, 2, 1);
        let x = AlgebraElement::from_coeffs(f, vec![f.from_i64(1), f.from_i64(2)]);
        let t = Tensor::of_elements(&[&g, &x, &g]);
        // merge legs (2,1) then leg 0 alone: g*x (x) ... wait, groups [[2,1],[0]]
        let merged = t.merge_legs(&[&[2, 1], &[0]], &table);
        let gx = table.mul_elems(&g, &x);
        assert_eq!(merged, Tensor::of_elements(&[&gx, &g]));
    }

    #[test]
    fn embed_fills_units() {
        let f = q();
        let table = c2_table();
        let g = AlgebraElement::basis(f, 2, 1);
        let t = Tensor::from_element(&g);
        let embedded = t.embed(3, &[1], &table);
        let one = table.unit();
        assert_eq!(embedded, Tensor::of_elements(&[&one, &g, &one]));
    }

    #[test]
    fn contract_identity_counit_identity() {
        // (id (x) eps (x) id)(1 (x) 1 (x) 1) = 1 (x) 1
        let f = q();
        let table = c2_table();
        let one = table.unit();
        let t3 = Tensor::of_elements(&[&one, &one, &one]);
        let eps = Functional::from_coeffs(f, vec![f.one(), f.one()]);
        let out = tensor_contract(&t3, &[LegOp::Keep, LegOp::Func(&eps), LegOp::Keep], &[], &table);
        assert_eq!(out, Tensor::of_elements(&[&one, &one]));
    }

    /// Naive triple-loop contraction oracle for rank-3 tensors with one
    /// functional leg: result[a][c] = sum_b t[a][b][c] * f[b].
    fn naive_middle_contraction(t: &Tensor, func: &Functional) -> Tensor {
        let f = t.field();
        let n = t.dim();
        let mut out = Tensor::zero(f, n, 2);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let term = f.mul(t.get(&[a, b, c]), &func.coeffs[b]);
                    let cur = out.get(&[a, c]).clone();
                    out.set(&[a, c], f.add(&cur, &term));
                }
            }
        }
        out
    }

    proptest! {
        #[test]
        fn functional_contraction_matches_naive(values in proptest::collection::vec(-4i64..4, 27),
                                                fvals in proptest::collection::vec(-4i64..4, 3)) {
            let f = q();
            let mut t = Tensor::zero(f, 3, 3);
            for (i, v) in values.iter().enumerate() {
                t.data[i] = f.from_i64(*v);
            }
            let func = Functional::from_coeffs(f, fvals.iter().map(|&v| f.from_i64(v)).collect());
            prop_assert_eq!(t.apply_functional_leg(1, &func), naive_middle_contraction(&t, &func));
        }

        #[test]
        fn permute_round_trip(values in proptest::collection::vec(-4i64..4, 8)) {
            let f = q();
            let mut t = Tensor::zero(f, 2, 3);
            for (i, v) in values.iter().enumerate() {
                t.data[i] = f.from_i64(*v);
            }
            // rotate legs forward then back
            let rotated = t.permute_legs(&[2, 0, 1]);
            let back = rotated.permute_legs(&[1, 2, 0]);
            prop_assert_eq!(back, t);
        }
    }
}
