//! Constructors for concrete presentations: group algebras, dual group
//! algebras twisted by a 3-cocycle, the classic 4-dimensional
//! non-unimodular Hopf algebra, and gauge twisting of an existing
//! presentation.
//!
//! Every builder runs the full axiom suite on its output and refuses to
//! return a presentation that fails it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraPresentation;
use crate::field::{FieldSpec, Scalar};
use crate::linear::{AlgebraElement, Functional, LinMap};
use crate::presentation::{full_verify, QuasiBialgebra, QuasiHopf};
use crate::tensor::Tensor;
use crate::{Error, Result};

/// A finite group as a multiplication table `mul[g * order + h] = gh`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(order: usize, mul: Vec<usize>) -> Result<Self> {
        if mul.len() != order * order {
            return Err(Error::NotAGroup(alloc::format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if mul.iter().any(|&g| g >= order) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        let t = GroupTable { order, mul };
        let id = (0..order)
            .find(|&e| (0..order).all(|g| t.mul(e, g) == g && t.mul(g, e) == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for g in 0..order {
            for h in 0..order {
                for k in 0..order {
                    if t.mul(t.mul(g, h), k) != t.mul(g, t.mul(h, k)) {
                        return Err(Error::NotAGroup(alloc::format!(
                            "associativity fails at ({g}, {h}, {k})"
                        )));
                    }
                }
            }
        }
        for g in 0..order {
            if !(0..order).any(|h| t.mul(g, h) == id && t.mul(h, g) == id) {
                return Err(Error::NotAGroup(alloc::format!("element {g} has no inverse")));
            }
        }
        Ok(t)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let mut mul = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                mul.push((g + h) % n);
            }
        }
        GroupTable { order: n, mul }
    }

    /// The symmetric group on three letters; elements are ordered
    /// `e, r, r^2, s, sr, sr^2` with `r` a 3-cycle and `s` a transposition,
    /// so the rotation subgroup occupies indices `0..3`.
    pub fn symmetric3() -> Self {
        // permutations of {0,1,2} as images (p[0], p[1], p[2])
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2], // e
            [1, 2, 0], // r
            [2, 0, 1], // r^2
            [1, 0, 2], // s
            [2, 1, 0], // sr
            [0, 2, 1], // sr^2
        ];
        let mut mul = Vec::with_capacity(36);
        for g in perms {
            for h in perms {
                let composed = [g[h[0]], g[h[1]], g[h[2]]];
                let idx = perms.iter().position(|p| *p == composed).unwrap();
                mul.push(idx);
            }
        }
        GroupTable { order: 6, mul }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h]
    }

    pub fn identity(&self) -> usize {
        (0..self.order)
            .find(|&e| (0..self.order).all(|g| self.mul(e, g) == g))
            .expect("validated table has an identity")
    }

    pub fn inverse(&self, g: usize) -> usize {
        let id = self.identity();
        (0..self.order)
            .find(|&h| self.mul(g, h) == id)
            .expect("validated table has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (0..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
    }
}

fn verified(h: QuasiHopf) -> Result<QuasiHopf> {
    let report = full_verify(&h);
    if report.passed() {
        Ok(h)
    } else {
        Err(Error::Verification(report))
    }
}

/// The group algebra `k[G]`: basis indexed by group elements,
/// `delta(g) = g (x) g`, `eps(g) = 1`, `S(g) = g^-1`, trivial associator,
/// `alpha = beta = 1`.
pub fn build_group_algebra(group: &GroupTable, field: FieldSpec) -> Result<QuasiHopf> {
    let n = group.order();
    let mut dense = vec![field.zero(); n * n * n];
    for g in 0..n {
        for h in 0..n {
            dense[(g * n + h) * n + group.mul(g, h)] = field.one();
        }
    }
    let id = group.identity();
    let mut unit = vec![field.zero(); n];
    unit[id] = field.one();
    let alg = AlgebraPresentation::new(field, n, &dense, unit)?;

    let delta: Vec<Tensor> = (0..n)
        .map(|g| {
            let mut t = Tensor::zero(field, n, 2);
            t.set(&[g, g], field.one());
            t
        })
        .collect();
    let counit = Functional::from_coeffs(field, vec![field.one(); n]);
    let phi = alg.unit_tensor(3);
    let phi_inv = alg.unit_tensor(3);
    let qb = QuasiBialgebra::new(alg.clone(), delta, counit, phi, phi_inv)?;

    let s = LinMap::from_images(
        field,
        &(0..n)
            .map(|g| AlgebraElement::basis(field, n, group.inverse(g)))
            .collect::<Vec<_>>(),
    );
    let h = QuasiHopf::new(qb, s, alg.unit(), alg.unit())?;
    verified(h)
}

/// Values of a function `G^3 -> k` as a dense array `omega[(g*n + h)*n + k]`.
pub type CocycleValues = Vec<Scalar>;

/// The normalized sign 3-cocycle on `Z_2`: `omega(a, b, c) = (-1)^{abc}`.
pub fn sign_cocycle_z2(field: FieldSpec) -> CocycleValues {
    let mut omega = vec![field.one(); 8];
    omega[7] = field.from_i64(-1);
    omega
}

/// The constant cocycle `omega = 1` on any group.
pub fn trivial_cocycle(group: &GroupTable, field: FieldSpec) -> CocycleValues {
    vec![field.one(); group.order() * group.order() * group.order()]
}

fn check_cocycle(group: &GroupTable, field: FieldSpec, omega: &[Scalar]) -> Result<()> {
    let n = group.order();
    if omega.len() != n * n * n {
        return Err(Error::BadCocycle("value array has the wrong length".into()));
    }
    let id = group.identity();
    let value = |g: usize, h: usize, k: usize| &omega[(g * n + h) * n + k];
    for v in omega {
        if field.is_zero(v) {
            return Err(Error::BadCocycle("values must be units".into()));
        }
    }
    for g in 0..n {
        for h in 0..n {
            if !field.is_one(value(id, g, h)) || !field.is_one(value(g, id, h)) || !field.is_one(value(g, h, id)) {
                return Err(Error::BadCocycle("not normalized at the identity".into()));
            }
        }
    }
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // omega(h,k,l) omega(g, hk, l) omega(g,h,k)
                    //   = omega(gh, k, l) omega(g, h, kl)
                    let lhs = field.mul(
                        &field.mul(value(h, k, l), value(g, group.mul(h, k), l)),
                        value(g, h, k),
                    );
                    let rhs = field.mul(value(group.mul(g, h), k, l), value(g, h, group.mul(k, l)));
                    if lhs != rhs {
                        return Err(Error::BadCocycle(alloc::format!(
                            "cocycle identity fails at ({g}, {h}, {k}, {l})"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The dual group algebra `k^G` of a finite abelian group, with its
/// coproduct dual to the group law and the associator twisted by a
/// normalized 3-cocycle `omega`:
///
/// ```text
/// Phi = sum omega(g, h, k) e_g (x) e_h (x) e_k,   S(e_g) = e_{g^-1},
/// alpha = 1,   beta = sum omega(g, g^-1, g)^-1 e_g.
/// ```
pub fn build_dual_group_algebra_twisted(
    group: &GroupTable,
    omega: &[Scalar],
    field: FieldSpec,
) -> Result<QuasiHopf> {
    check_cocycle(group, field, omega)?;
    let n = group.order();
    // orthogonal idempotents
    let mut dense = vec![field.zero(); n * n * n];
    for g in 0..n {
        dense[(g * n + g) * n + g] = field.one();
    }
    let unit = vec![field.one(); n];
    let alg = AlgebraPresentation::new(field, n, &dense, unit)?;

    let delta: Vec<Tensor> = (0..n)
        .map(|g| {
            let mut t = Tensor::zero(field, n, 2);
            for h in 0..n {
                for k in 0..n {
                    if group.mul(h, k) == g {
                        t.set(&[h, k], field.one());
                    }
                }
            }
            t
        })
        .collect();
    let id = group.identity();
    let mut counit_coeffs = vec![field.zero(); n];
    counit_coeffs[id] = field.one();
    let counit = Functional::from_coeffs(field, counit_coeffs);

    let mut phi = Tensor::zero(field, n, 3);
    let mut phi_inv = Tensor::zero(field, n, 3);
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let w = &omega[(g * n + h) * n + k];
                phi.set(&[g, h, k], w.clone());
                phi_inv.set(&[g, h, k], field.inv(w).expect("cocycle values are units"));
            }
        }
    }
    let qb = QuasiBialgebra::new(alg.clone(), delta, counit, phi, phi_inv)?;

    let s = LinMap::from_images(
        field,
        &(0..n)
            .map(|g| AlgebraElement::basis(field, n, group.inverse(g)))
            .collect::<Vec<_>>(),
    );
    let beta_coeffs: Vec<Scalar> = (0..n)
        .map(|g| {
            let w = &omega[(g * n + group.inverse(g)) * n + g];
            field.inv(w).expect("cocycle values are units")
        })
        .collect();
    let beta = AlgebraElement::from_coeffs(field, beta_coeffs);
    let h = QuasiHopf::new(qb, s, alg.unit(), beta)?;
    verified(h)
}

/// The 4-dimensional Hopf algebra with basis `1, g, x, gx`, relations
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, coproduct `delta(g) = g (x) g`,
/// `delta(x) = x (x) 1 + g (x) x`, antipode `S(g) = g`, `S(x) = -gx`.
/// It is non-unimodular and not separable, which makes it the standard
/// witness for the modular augmentation and fourth-power machinery.
/// Needs 2 invertible in the field.
pub fn build_sweedler(field: FieldSpec) -> Result<QuasiHopf> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let n = 4;
    let one = field.one();
    let minus = field.from_i64(-1);
    // basis order: 1, g, x, gx
    let mut dense = vec![field.zero(); 64];
    let mut set = |i: usize, j: usize, k: usize, v: &Scalar| {
        dense[(i * n + j) * n + k] = v.clone();
    };
    // products with 1
    for i in 0..4 {
        set(0, i, i, &one);
        set(i, 0, i, &one);
    }
    set(1, 1, 0, &one); // g g = 1
    set(1, 2, 3, &one); // g x = gx
    set(1, 3, 2, &one); // g gx = x
    set(2, 1, 3, &minus); // x g = -gx
    set(3, 1, 2, &minus); // gx g = -x
                          // x x = 0, x gx = 0, gx x = 0, gx gx = 0
    let mut unit = vec![field.zero(); 4];
    unit[0] = field.one();
    let alg = AlgebraPresentation::new(field, n, &dense, unit)?;

    let mut d0 = Tensor::zero(field, n, 2);
    d0.set(&[0, 0], one.clone());
    let mut d1 = Tensor::zero(field, n, 2);
    d1.set(&[1, 1], one.clone());
    let mut d2 = Tensor::zero(field, n, 2);
    d2.set(&[2, 0], one.clone());
    d2.set(&[1, 2], one.clone());
    let mut d3 = Tensor::zero(field, n, 2);
    d3.set(&[3, 1], one.clone());
    d3.set(&[0, 3], one.clone());
    let delta = vec![d0, d1, d2, d3];

    let counit = Functional::from_coeffs(field, vec![one.clone(), one.clone(), field.zero(), field.zero()]);
    let qb = QuasiBialgebra::new(alg.clone(), delta, counit, alg.unit_tensor(3), alg.unit_tensor(3))?;

    let s = LinMap::from_images(
        field,
        &[
            AlgebraElement::basis(field, n, 0),
            AlgebraElement::basis(field, n, 1),
            AlgebraElement::basis(field, n, 3).scale(&minus),
            AlgebraElement::basis(field, n, 2),
        ],
    );
    let h = QuasiHopf::new(qb, s, alg.unit(), alg.unit())?;
    verified(h)
}

/// Twists a presentation by an invertible, counit-normalized gauge
/// element `F` of `H (x) H`:
///
/// ```text
/// delta_F = F delta(.) F^-1
/// Phi_F   = F_23 (id (x) delta)(F) Phi (delta (x) id)(F^-1) F_12^-1
/// alpha_F = S(F^-1_1) alpha F^-1_2,   beta_F = F^1 beta S(F^2)
/// ```
///
/// The twist formulas place no correctness weight on themselves: the
/// result is re-verified by the full axiom suite and rejected if any law
/// fails.
pub fn gauge_twist(h: &QuasiHopf, gauge: &Tensor) -> Result<QuasiHopf> {
    let alg = h.algebra();
    let table = alg.table();
    let field = alg.field();
    let n = alg.dim();
    if gauge.rank() != 2 || gauge.dim() != n {
        return Err(Error::Shape("gauge element must live in H (x) H".into()));
    }

    // counit normalization on either leg
    for leg in 0..2 {
        let collapsed = gauge.apply_functional_leg(leg, h.counit()).into_element();
        if collapsed != alg.unit() {
            return Err(Error::Inconsistent(String::from(
                "gauge element is not counit-normalized",
            )));
        }
    }

    // invert F in the algebra H (x) H via left multiplication
    let unit2 = alg.unit_tensor(2);
    let left_mult = crate::matrix::Matrix::from_fn(field, n * n, n * n, |r, c| {
        let mut basis = Tensor::zero(field, n, 2);
        basis.set(&[c / n, c % n], field.one());
        gauge.mul_pointwise(&basis, table).get(&[r / n, r % n]).clone()
    });
    let inv_coeffs = left_mult
        .solve(
            &(0..n * n)
                .map(|i| unit2.get(&[i / n, i % n]).clone())
                .collect::<Vec<_>>(),
        )
        .ok_or(Error::Singular("gauge element"))?;
    let mut gauge_inv = Tensor::zero(field, n, 2);
    for (i, c) in inv_coeffs.iter().enumerate() {
        gauge_inv.set(&[i / n, i % n], c.clone());
    }
    if gauge_inv.mul_pointwise(gauge, table) != unit2 {
        return Err(Error::Singular("gauge element"));
    }

    let delta: Vec<Tensor> = (0..n)
        .map(|i| {
            gauge
                .mul_pointwise(h.qb().delta_basis(i), table)
                .mul_pointwise(&gauge_inv, table)
        })
        .collect();

    let phi = gauge
        .embed(3, &[1, 2], table)
        .mul_pointwise(&h.qb().delta_leg(gauge, 1), table)
        .mul_pointwise(h.phi(), table)
        .mul_pointwise(&h.qb().delta_leg(&gauge_inv, 0), table)
        .mul_pointwise(&gauge_inv.embed(3, &[0, 1], table), table);
    let phi_inv = gauge
        .embed(3, &[0, 1], table)
        .mul_pointwise(&h.qb().delta_leg(gauge, 0), table)
        .mul_pointwise(h.phi_inv(), table)
        .mul_pointwise(&h.qb().delta_leg(&gauge_inv, 1), table)
        .mul_pointwise(&gauge_inv.embed(3, &[1, 2], table), table);

    let alpha = gauge_inv
        .map_leg(0, &alg.right_mult(h.alpha()).compose(h.s_map()))
        .merge_legs(&[&[0, 1]], table)
        .into_element();
    let beta = gauge
        .map_leg(0, &alg.right_mult(h.beta()))
        .map_leg(1, h.s_map())
        .merge_legs(&[&[0, 1]], table)
        .into_element();

    let twisted = h.with_structure(delta, phi, phi_inv, alpha, beta)?;
    verified(twisted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables_are_groups() {
        for n in 1..6 {
            GroupTable::new(n, GroupTable::cyclic(n).mul).unwrap();
        }
    }

    #[test]
    fn symmetric3_is_a_nonabelian_group() {
        let t = GroupTable::symmetric3();
        GroupTable::new(6, t.mul.clone()).unwrap();
        assert!(!t.is_abelian());
        // the rotations form a subgroup at indices 0..3
        for g in 0..3 {
            for h in 0..3 {
                assert!(t.mul(g, h) < 3);
            }
        }
    }

    #[test]
    fn broken_table_is_rejected() {
        // "multiplication" that is not associative
        let err = GroupTable::new(2, vec![0, 1, 1, 1]);
        assert!(err.is_err());
    }
}
