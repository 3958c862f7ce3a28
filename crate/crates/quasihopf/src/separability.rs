//! Separability and strong separability of a presentation, decided
//! through its integrals.
//!
//! A presentation is separable exactly when it has a normalized one-sided
//! integral; in that case four explicit separability elements can be
//! written down from the q/p calculus, and each is certified here by
//! checking `e^1 e^2 = 1` and the Casimir condition on every basis
//! element rather than trusted.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::AlgebraPresentation;
use crate::frobenius::FrobeniusSystem;
use crate::integrals::{integral_space, Side};
use crate::linear::AlgebraElement;
use crate::matrix::Matrix;
use crate::presentation::QuasiHopf;
use crate::qp::qp_elements;
use crate::report::Report;
use crate::tensor::Tensor;

/// `t / eps(t)` for the one-sided integral `t`, or `None` when `eps(t)`
/// is not invertible in the field (the inseparable case; in positive
/// characteristic "invertible" is the right reading of "nonzero").
pub fn normalized_integral(h: &QuasiHopf, side: Side) -> Option<AlgebraElement> {
    let space = integral_space(h, side);
    if space.dim() != 1 {
        return None;
    }
    let t = &space.basis[0];
    let eps = h.counit().eval(t);
    let inv = h.algebra().field().inv(&eps)?;
    Some(t.scale(&inv))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertVariant {
    /// `S(r_(1) p^1_L) (x) alpha r_(2) p^2_L`
    E1,
    /// `S(r_(1) p^1_R) (x) alpha r_(2) p^2_R`
    E2,
    /// `q^1_L t_(1) beta (x) S(q^2_L t_(2))`
    E3,
    /// `q^1_R t_(1) beta (x) S(q^2_R t_(2))`
    E4,
}

impl CertVariant {
    pub fn name(&self) -> &'static str {
        match self {
            CertVariant::E1 => "e1 (right integral, p_L)",
            CertVariant::E2 => "e2 (right integral, p_R)",
            CertVariant::E3 => "e3 (left integral, q_L)",
            CertVariant::E4 => "e4 (left integral, q_R)",
        }
    }
}

/// One candidate separability element with its verification status.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparabilityCertificate {
    pub variant: CertVariant,
    pub element: Tensor,
    pub normalized_integral: AlgebraElement,
    pub mult_ok: bool,
    pub casimir_ok: bool,
}

impl SeparabilityCertificate {
    pub fn passed(&self) -> bool {
        self.mult_ok && self.casimir_ok
    }
}

fn certify(h: &QuasiHopf, variant: CertVariant, element: Tensor, t: &AlgebraElement) -> SeparabilityCertificate {
    let alg = h.algebra();
    let table = alg.table();
    let mult_ok = element.merge_legs(&[&[0, 1]], table).into_element() == alg.unit();
    let mut casimir_ok = true;
    for i in 0..alg.dim() {
        let a = alg.basis(i);
        let left = Tensor::of_elements(&[&a, &alg.unit()]).mul_pointwise(&element, table);
        let right = element.mul_pointwise(&Tensor::of_elements(&[&alg.unit(), &a]), table);
        if left != right {
            casimir_ok = false;
            break;
        }
    }
    SeparabilityCertificate {
        variant,
        element,
        normalized_integral: t.clone(),
        mult_ok,
        casimir_ok,
    }
}

/// Builds and verifies the four candidate separability elements from the
/// available normalized integrals. Without any normalized integral the
/// list is empty (the presentation is not separable).
pub fn separability_elements(
    h: &QuasiHopf,
    left: Option<&AlgebraElement>,
    right: Option<&AlgebraElement>,
) -> Vec<SeparabilityCertificate> {
    let alg = h.algebra();
    let table = alg.table();
    let qp = qp_elements(h);
    let alpha_left = alg.left_mult(h.alpha());
    let beta_right = alg.right_mult(h.beta());
    let mut certs = Vec::new();

    if let Some(r) = right {
        for (variant, p) in [(CertVariant::E1, &qp.p_l), (CertVariant::E2, &qp.p_r)] {
            let element = h
                .delta(r)
                .mul_pointwise(p, table)
                .map_leg(0, h.s_map())
                .map_leg(1, &alpha_left);
            certs.push(certify(h, variant, element, r));
        }
    }
    if let Some(t) = left {
        for (variant, qq) in [(CertVariant::E3, &qp.q_l), (CertVariant::E4, &qp.q_r)] {
            let element = qq
                .mul_pointwise(&h.delta(t), table)
                .map_leg(0, &beta_right)
                .map_leg(1, h.s_map());
            certs.push(certify(h, variant, element, t));
        }
    }
    certs
}

/// Whether the left and right integral spaces coincide as subspaces.
pub fn is_unimodular(h: &QuasiHopf) -> bool {
    let left = integral_space(h, Side::Left);
    let right = integral_space(h, Side::Right);
    if left.dim() != right.dim() {
        return false;
    }
    let field = h.algebra().field();
    let n = h.algebra().dim();
    let all: Vec<&AlgebraElement> = left.basis.iter().chain(&right.basis).collect();
    let stacked = Matrix::from_fn(field, all.len(), n, |r, c| all[r].coeffs[c].clone());
    stacked.rank() == left.dim()
}

/// Solves directly for a module splitting of the counit: an element `t`
/// with `a t = eps(a) t` for all `a` and `eps(t) = 1`. Its existence is
/// equivalent to separability and is the independent route used to
/// cross-check the certificate construction.
pub fn counit_splitting(h: &QuasiHopf) -> Option<AlgebraElement> {
    let alg = h.algebra();
    let field = alg.field();
    let n = alg.dim();
    let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
    let mut rhs: Vec<crate::field::Scalar> = Vec::new();
    for i in 0..n {
        let mult = alg.left_mult(&alg.basis(i));
        let eps = h.counit().eval(&alg.basis(i));
        for r in 0..n {
            let mut row = Vec::with_capacity(n);
            for c in 0..n {
                let m = mult.matrix().get(r, c).clone();
                row.push(if r == c { field.sub(&m, &eps) } else { m });
            }
            rows.push(row);
            rhs.push(field.zero());
        }
    }
    rows.push(h.counit().coeffs.clone());
    rhs.push(field.one());
    let system = Matrix::from_rows(field, rows);
    let solution = system.solve(&rhs)?;
    Some(AlgebraElement::from_coeffs(field, solution))
}

/// Outcome of the strong-separability test `u = sum_i y_i x_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct StrongSeparability {
    pub u: AlgebraElement,
    pub u_inv: Option<AlgebraElement>,
    pub strongly_separable: bool,
    /// `eta(a) = u^{-1} a u` verified on all basis elements (when `u` is
    /// invertible).
    pub nakayama_is_conjugation: Option<bool>,
}

/// Applies the invertibility criterion for strong separability to a
/// Frobenius system whose dual bases satisfy `sum_i x_i phi(y_i a) = a`.
pub fn strong_separability_check(alg: &AlgebraPresentation, fs: &FrobeniusSystem) -> StrongSeparability {
    let field = alg.field();
    let n = alg.dim();
    let mut u = AlgebraElement::zero(field, n);
    for (xi, yi) in fs.x.iter().zip(&fs.y) {
        u = u.add(&alg.mul(yi, xi));
    }
    let u_inv = alg.invert(&u);
    let nakayama_is_conjugation = u_inv.as_ref().map(|inv| {
        let conj = alg.conjugation(inv, &u);
        conj == fs.eta
    });
    StrongSeparability {
        strongly_separable: u_inv.is_some(),
        u,
        u_inv,
        nakayama_is_conjugation,
    }
}

/// `phi(ab) = phi(ba)` on all basis pairs.
pub fn is_trace(alg: &AlgebraPresentation, phi: &crate::linear::Functional) -> bool {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            if phi.eval(&alg.mul(&alg.basis(i), &alg.basis(j)))
                != phi.eval(&alg.mul(&alg.basis(j), &alg.basis(i)))
            {
                return false;
            }
        }
    }
    true
}

/// Whether the dual-bases tensor `sum_i x_i (x) y_i` is symmetric.
pub fn dual_bases_symmetric(alg: &AlgebraPresentation, fs: &FrobeniusSystem) -> bool {
    let t = fs.dual_bases_tensor(alg);
    t == t.permute_legs(&[1, 0])
}

/// Hypotheses of the strong-separability theorem: `beta S(alpha) = 1`
/// and `S^2 = id`.
pub fn strong_separability_hypotheses(h: &QuasiHopf) -> (bool, bool) {
    let alg = h.algebra();
    let beta_s_alpha = alg.mul(h.beta(), &h.s(h.alpha())) == alg.unit();
    let s_squared = h.s_map().compose(h.s_map()).is_identity();
    (beta_s_alpha, s_squared)
}

/// The four displayed identities tying integrals to the q/p elements:
///
/// ```text
/// q^1 t_(1) (x) S^-1(beta) q^2 t_(2)   = t_(1) (x) t_(2)
/// r_(1) p^1 (x) r_(2) p^2 alpha        = r_(1) (x) r_(2)
/// beta q^1 t_(1) (x) S(q^2 t_(2))      = t_(1) (x) S(t_(2))
/// r_(1) p^1 S^-1(alpha) (x) r_(2) p^2  = r_(1) (x) r_(2)
/// ```
///
/// with `q = q_R`, `p = p_R`, `t` any left integral and `r` any right
/// integral.
pub fn integral_qp_lemmas(h: &QuasiHopf, t: &AlgebraElement, r: &AlgebraElement) -> Report {
    let alg = h.algebra();
    let table = alg.table();
    let qp = qp_elements(h);
    let mut report = Report::new("integral q/p lemmas");
    let one = alg.unit();

    let dt = h.delta(t);
    let dr = h.delta(r);

    let s_inv_beta = h.s_inv(h.beta());
    let lhs = Tensor::of_elements(&[&one, &s_inv_beta])
        .mul_pointwise(&qp.q_r.mul_pointwise(&dt, table), table);
    report.push_eq(
        "q^1 t_(1) (x) S^-1(beta) q^2 t_(2) = delta(t)",
        lhs == dt,
        || lhs.clone(),
        || dt.clone(),
    );

    let lhs = dr
        .mul_pointwise(&qp.p_r, table)
        .mul_pointwise(&Tensor::of_elements(&[&one, h.alpha()]), table);
    report.push_eq(
        "r_(1) p^1 (x) r_(2) p^2 alpha = delta(r)",
        lhs == dr,
        || lhs.clone(),
        || dr.clone(),
    );

    let qdt = qp.q_r.mul_pointwise(&dt, table).map_leg(1, h.s_map());
    let lhs = Tensor::of_elements(&[h.beta(), &one]).mul_pointwise(&qdt, table);
    let rhs = dt.map_leg(1, h.s_map());
    report.push_eq(
        "beta q^1 t_(1) (x) S(q^2 t_(2)) = t_(1) (x) S(t_(2))",
        lhs == rhs,
        || lhs.clone(),
        || rhs.clone(),
    );

    let s_inv_alpha = h.s_inv(h.alpha());
    let lhs = dr
        .mul_pointwise(&qp.p_r, table)
        .mul_pointwise(&Tensor::of_elements(&[&s_inv_alpha, &one]), table);
    report.push_eq(
        "r_(1) p^1 S^-1(alpha) (x) r_(2) p^2 = delta(r)",
        lhs == dr,
        || lhs.clone(),
        || dr.clone(),
    );

    report
}

/// Diagnostic used when no certificate can exist.
pub fn separability_diagnostic(h: &QuasiHopf) -> Option<String> {
    let left = normalized_integral(h, Side::Left);
    let right = normalized_integral(h, Side::Right);
    if left.is_none() && right.is_none() {
        Some(String::from("no normalized left or right integral"))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{
        build_dual_group_algebra_twisted, build_group_algebra, build_sweedler, sign_cocycle_z2,
        GroupTable,
    };
    use crate::field::FieldSpec;
    use crate::frobenius::frobenius_system;
    use crate::integrals::IntegralData;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn c2_has_normalized_integral_over_q_but_not_f2() {
        let h = build_group_algebra(&GroupTable::cyclic(2), q()).unwrap();
        let t = normalized_integral(&h, Side::Left).unwrap();
        let f = q();
        // (1+g)/2
        assert_eq!(
            t,
            AlgebraElement::from_coeffs(
                f,
                alloc::vec![f.from_ratio(1, 2).unwrap(), f.from_ratio(1, 2).unwrap()]
            )
        );
        let f2 = FieldSpec::prime_field(2).unwrap();
        let h2 = build_group_algebra(&GroupTable::cyclic(2), f2).unwrap();
        assert!(normalized_integral(&h2, Side::Left).is_none());
        assert!(normalized_integral(&h2, Side::Right).is_none());
    }

    #[test]
    fn sweedler_is_not_separable() {
        let h = build_sweedler(q()).unwrap();
        assert!(normalized_integral(&h, Side::Left).is_none());
        let certs = separability_elements(&h, None, None);
        assert!(certs.is_empty());
        assert_eq!(
            separability_diagnostic(&h).unwrap(),
            "no normalized left or right integral"
        );
        assert!(counit_splitting(&h).is_none());
        assert!(!is_unimodular(&h));
    }

    #[test]
    fn twisted_z2_all_four_certificates_pass() {
        let g = GroupTable::cyclic(2);
        let h = build_dual_group_algebra_twisted(&g, &sign_cocycle_z2(q()), q()).unwrap();
        let left = normalized_integral(&h, Side::Left).unwrap();
        let right = normalized_integral(&h, Side::Right).unwrap();
        // normalized integral is e0
        assert_eq!(left, AlgebraElement::basis(q(), 2, 0));
        let certs = separability_elements(&h, Some(&left), Some(&right));
        assert_eq!(certs.len(), 4);
        for c in &certs {
            assert!(c.passed(), "{} failed", c.variant.name());
        }
        assert!(is_unimodular(&h));
        assert!(counit_splitting(&h).is_some());
    }

    #[test]
    fn s3_strong_separability() {
        let h = build_group_algebra(&GroupTable::symmetric3(), q()).unwrap();
        let (b, s) = strong_separability_hypotheses(&h);
        assert!(b && s);
        // build the Frobenius system on the normalized (Haar) integral
        let t = normalized_integral(&h, Side::Left).unwrap();
        let ints = IntegralData::compute(&h).unwrap();
        let haar_ints = IntegralData {
            generator: t,
            ..ints
        };
        let fs = frobenius_system(&h, &haar_ints).unwrap();
        let strong = strong_separability_check(h.algebra(), &fs);
        assert_eq!(strong.u, h.algebra().unit());
        assert!(strong.strongly_separable);
        assert_eq!(strong.nakayama_is_conjugation, Some(true));
        assert!(fs.eta.is_identity());
        assert!(is_trace(h.algebra(), &fs.phi));
        assert!(dual_bases_symmetric(h.algebra(), &fs));
    }

    #[test]
    fn sweedler_is_not_strongly_separable() {
        let h = build_sweedler(q()).unwrap();
        let ints = IntegralData::compute(&h).unwrap();
        let fs = frobenius_system(&h, &ints).unwrap();
        let strong = strong_separability_check(h.algebra(), &fs);
        assert!(!strong.strongly_separable);
        let (b, s) = strong_separability_hypotheses(&h);
        assert!(b); // beta S(alpha) = 1 holds trivially
        assert!(!s); // but S^2 != id
    }

    #[test]
    fn integral_qp_lemmas_detect_swapped_correction_elements() {
        // wiring-error sensitivity: evaluating the first lemma with the
        // alpha/beta corrections interchanged (against the true q/p
        // elements) must fail
        let g = GroupTable::cyclic(2);
        let h = build_dual_group_algebra_twisted(&g, &sign_cocycle_z2(q()), q()).unwrap();
        let alg = h.algebra();
        let table = alg.table();
        let ints = IntegralData::compute(&h).unwrap();
        let t = ints.left.basis[0].clone();
        let r = ints.right.basis[0].clone();
        assert!(integral_qp_lemmas(&h, &t, &r).passed());

        let qp = crate::qp::qp_elements(&h);
        let one = alg.unit();
        let dt = h.delta(&t);
        // wrong: S^-1(alpha) in place of S^-1(beta)
        let s_inv_alpha = h.s_inv(h.alpha());
        let wrong = Tensor::of_elements(&[&one, &s_inv_alpha])
            .mul_pointwise(&qp.q_r.mul_pointwise(&dt, table), table);
        assert_ne!(wrong, dt);
        // wrong: beta in place of alpha in the right-integral lemma
        let dr = h.delta(&r);
        let wrong = dr
            .mul_pointwise(&qp.p_r, table)
            .mul_pointwise(&Tensor::of_elements(&[&one, h.beta()]), table);
        assert_ne!(wrong, dr);
    }

    #[test]
    fn hopf_case_lemmas_collapse() {
        let h = build_group_algebra(&GroupTable::cyclic(2), q()).unwrap();
        let ints = IntegralData::compute(&h).unwrap();
        let t = ints.left.basis[0].clone();
        let r = ints.right.basis[0].clone();
        assert!(integral_qp_lemmas(&h, &t, &r).passed());
    }
}
