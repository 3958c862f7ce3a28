//! The four comparison elements `q_R, p_R, q_L, p_L` in `H (x) H` built
//! from the associator and antipode, and the identities they satisfy.
//!
//! They generalize the Hopf-algebra manipulations of the type
//! `a_(1) (x) a_(2) S(a_(3)) = a (x) 1` to the quasi setting and are the
//! backbone of the integral and separability computations.

use crate::linear::AlgebraElement;
use crate::presentation::QuasiHopf;
use crate::report::{LawScan, Report};
use crate::tensor::Tensor;

#[derive(Debug, Clone, PartialEq)]
pub struct QPElements {
    pub q_r: Tensor,
    pub p_r: Tensor,
    pub q_l: Tensor,
    pub p_l: Tensor,
}

/// Builds the four elements exactly from `Phi`, `Phi^-1`, `S`, `alpha`
/// and `beta`:
///
/// ```text
/// q_R = X^1 (x) S^-1(alpha X^3) X^2      q_L = S(x^1) alpha x^2 (x) x^3
/// p_R = x^1 (x) x^2 beta S(x^3)          p_L = X^2 S^-1(X^1 beta) (x) X^3
/// ```
pub fn qp_elements(h: &QuasiHopf) -> QPElements {
    let alg = h.algebra();
    let table = alg.table();
    let alpha_left = alg.left_mult(h.alpha());
    let beta_right = alg.right_mult(h.beta());
    let alpha_right = alg.right_mult(h.alpha());

    // q_R: apply S^-1 . (alpha *) to leg 2, then multiply legs (2, 1)
    let q_r = h
        .phi()
        .map_leg(2, &h.s_inv_map().compose(&alpha_left))
        .merge_legs(&[&[0], &[2, 1]], table);

    // q_L: apply (* alpha) . S to leg 0, then multiply legs (0, 1)
    let q_l = h
        .phi_inv()
        .map_leg(0, &alpha_right.compose(h.s_map()))
        .merge_legs(&[&[0, 1], &[2]], table);

    // p_R: apply (* beta) to leg 1 and S to leg 2, multiply legs (1, 2)
    let p_r = h
        .phi_inv()
        .map_leg(1, &beta_right)
        .map_leg(2, h.s_map())
        .merge_legs(&[&[0], &[1, 2]], table);

    // p_L: apply S^-1 . (* beta) to leg 0, multiply legs (1, 0)
    let p_l = h
        .phi()
        .map_leg(0, &h.s_inv_map().compose(&beta_right))
        .merge_legs(&[&[1, 0], &[2]], table);

    QPElements { q_r, p_r, q_l, p_l }
}

/// Checks the four per-element facilitation identities on every basis
/// element and the four element equations coupling each q with its p.
pub fn verify_qp_identities(h: &QuasiHopf, qp: &QPElements) -> Report {
    let alg = h.algebra();
    let table = alg.table();
    let n = h.dim();
    let one = alg.unit();
    let unit2 = alg.unit_tensor(2);
    let mut report = Report::new("q/p identities");

    let pair =
        |left: &AlgebraElement, right: &AlgebraElement| Tensor::of_elements(&[left, right]);

    // q^1_R a_(1,1) (x) S^-1(a_(2)) q^2_R a_(1,2) = a q^1_R (x) q^2_R
    let mut law = LawScan::new("q_R moves a through the coproduct");
    for i in 0..n {
        let a = alg.basis(i);
        let t = h.qb().delta_leg(&h.delta(&a), 0).map_leg(2, h.s_inv_map());
        let lhs = qp
            .q_r
            .embed(5, &[0, 3], table)
            .mul_pointwise(&t.embed(5, &[1, 4, 2], table), table)
            .merge_legs(&[&[0, 1], &[2, 3, 4]], table);
        let rhs = pair(&a, &one).mul_pointwise(&qp.q_r, table);
        law.expect(lhs == rhs, &[i], || lhs.clone(), || rhs.clone());
    }
    law.finish(&mut report);

    // a_(1,1) p^1_R (x) a_(1,2) p^2_R S(a_(2)) = p^1_R a (x) p^2_R
    let mut law = LawScan::new("p_R moves a through the coproduct");
    for i in 0..n {
        let a = alg.basis(i);
        let t = h.qb().delta_leg(&h.delta(&a), 0).map_leg(2, h.s_map());
        let lhs = t
            .embed(5, &[0, 2, 4], table)
            .mul_pointwise(&qp.p_r.embed(5, &[1, 3], table), table)
            .merge_legs(&[&[0, 1], &[2, 3, 4]], table);
        let rhs = qp.p_r.mul_pointwise(&pair(&a, &one), table);
        law.expect(lhs == rhs, &[i], || lhs.clone(), || rhs.clone());
    }
    law.finish(&mut report);

    // S(a_(1)) q^1_L a_(2,1) (x) q^2_L a_(2,2) = q^1_L (x) a q^2_L
    let mut law = LawScan::new("q_L moves a through the coproduct");
    for i in 0..n {
        let a = alg.basis(i);
        let t = h.qb().delta_leg(&h.delta(&a), 1).map_leg(0, h.s_map());
        let lhs = t
            .embed(5, &[0, 2, 4], table)
            .mul_pointwise(&qp.q_l.embed(5, &[1, 3], table), table)
            .merge_legs(&[&[0, 1, 2], &[3, 4]], table);
        let rhs = pair(&one, &a).mul_pointwise(&qp.q_l, table);
        law.expect(lhs == rhs, &[i], || lhs.clone(), || rhs.clone());
    }
    law.finish(&mut report);

    // a_(2,1) p^1_L S^-1(a_(1)) (x) a_(2,2) p^2_L = p^1_L (x) p^2_L a
    let mut law = LawScan::new("p_L moves a through the coproduct");
    for i in 0..n {
        let a = alg.basis(i);
        let t = h.qb().delta_leg(&h.delta(&a), 1).map_leg(0, h.s_inv_map());
        let lhs = t
            .embed(5, &[2, 0, 3], table)
            .mul_pointwise(&qp.p_l.embed(5, &[1, 4], table), table)
            .merge_legs(&[&[0, 1, 2], &[3, 4]], table);
        let rhs = qp.p_l.mul_pointwise(&pair(&one, &a), table);
        law.expect(lhs == rhs, &[i], || lhs.clone(), || rhs.clone());
    }
    law.finish(&mut report);

    // delta(q^1_R) p_R (1 (x) S(q^2_R)) = 1 (x) 1
    let x = h.qb().delta_leg(&qp.q_r.map_leg(1, h.s_map()), 0);
    let lhs = x
        .embed(5, &[0, 2, 4], table)
        .mul_pointwise(&qp.p_r.embed(5, &[1, 3], table), table)
        .merge_legs(&[&[0, 1], &[2, 3, 4]], table);
    report.push_eq(
        "delta(q^1_R) p_R (1 (x) S(q^2_R)) = 1 (x) 1",
        lhs == unit2,
        || lhs.clone(),
        || unit2.clone(),
    );

    // (1 (x) S^-1(p^2_R)) q_R delta(p^1_R) = 1 (x) 1
    let x = h.qb().delta_leg(&qp.p_r.map_leg(1, h.s_inv_map()), 0);
    let lhs = x
        .embed(5, &[1, 4, 2], table)
        .mul_pointwise(&qp.q_r.embed(5, &[0, 3], table), table)
        .merge_legs(&[&[0, 1], &[2, 3, 4]], table);
    report.push_eq(
        "(1 (x) S^-1(p^2_R)) q_R delta(p^1_R) = 1 (x) 1",
        lhs == unit2,
        || lhs.clone(),
        || unit2.clone(),
    );

    // delta(q^2_L) p_L (S^-1(q^1_L) (x) 1) = 1 (x) 1
    let x = h.qb().delta_leg(&qp.q_l.map_leg(0, h.s_inv_map()), 1);
    let lhs = x
        .embed(5, &[2, 0, 3], table)
        .mul_pointwise(&qp.p_l.embed(5, &[1, 4], table), table)
        .merge_legs(&[&[0, 1, 2], &[3, 4]], table);
    report.push_eq(
        "delta(q^2_L) p_L (S^-1(q^1_L) (x) 1) = 1 (x) 1",
        lhs == unit2,
        || lhs.clone(),
        || unit2.clone(),
    );

    // (S(p^1_L) (x) 1) q_L delta(p^2_L) = 1 (x) 1
    let x = h.qb().delta_leg(&qp.p_l.map_leg(0, h.s_map()), 1);
    let lhs = x
        .embed(5, &[0, 2, 4], table)
        .mul_pointwise(&qp.q_l.embed(5, &[1, 3], table), table)
        .merge_legs(&[&[0, 1, 2], &[3, 4]], table);
    report.push_eq(
        "(S(p^1_L) (x) 1) q_L delta(p^2_L) = 1 (x) 1",
        lhs == unit2,
        || lhs.clone(),
        || unit2.clone(),
    );

    report
}
