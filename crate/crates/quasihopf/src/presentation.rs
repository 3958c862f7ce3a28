//! Quasi-bialgebra and quasi-Hopf presentations with their axiom
//! verifiers.
//!
//! The coproduct needs to be coassociative only up to conjugation by the
//! associator `Phi`, which in turn satisfies the normalized 3-cocycle
//! laws; the antipode `S` comes with the elements `alpha`, `beta` tying
//! it to the associator. Every law is checked on basis elements, which
//! by bilinearity certifies it on the whole algebra.

use alloc::vec::Vec;

use crate::algebra::{verify_algebra, AlgebraPresentation};
use crate::field::Scalar;
use crate::linear::{AlgebraElement, Functional, LinMap};
use crate::report::{LawScan, Report};
use crate::tensor::Tensor;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct QuasiBialgebra {
    algebra: AlgebraPresentation,
    delta: Vec<Tensor>,
    counit: Functional,
    phi: Tensor,
    phi_inv: Tensor,
}

impl QuasiBialgebra {
    pub fn new(
        algebra: AlgebraPresentation,
        delta: Vec<Tensor>,
        counit: Functional,
        phi: Tensor,
        phi_inv: Tensor,
    ) -> Result<Self> {
        let n = algebra.dim();
        if delta.len() != n {
            return Err(Error::Shape(alloc::format!(
                "coproduct gives {} images, expected {n}",
                delta.len()
            )));
        }
        for (i, d) in delta.iter().enumerate() {
            if d.rank() != 2 || d.dim() != n {
                return Err(Error::Shape(alloc::format!("delta(e_{i}) is not an n x n tensor")));
            }
        }
        if counit.dim() != n {
            return Err(Error::Shape("counit dimension mismatch".into()));
        }
        for (name, t) in [("phi", &phi), ("phi_inv", &phi_inv)] {
            if t.rank() != 3 || t.dim() != n {
                return Err(Error::Shape(alloc::format!("{name} is not rank 3 of dimension {n}")));
            }
        }
        Ok(QuasiBialgebra {
            algebra,
            delta,
            counit,
            phi,
            phi_inv,
        })
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn counit(&self) -> &Functional {
        &self.counit
    }

    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn phi_inv(&self) -> &Tensor {
        &self.phi_inv
    }

    pub fn delta_basis(&self, i: usize) -> &Tensor {
        &self.delta[i]
    }

    pub fn delta(&self, x: &AlgebraElement) -> Tensor {
        let f = self.algebra.field();
        let mut acc = Tensor::zero(f, self.dim(), 2);
        for (i, c) in x.coeffs.iter().enumerate() {
            if !f.is_zero(c) {
                acc = acc.add(&self.delta[i].scale(c));
            }
        }
        acc
    }

    /// Applies the coproduct to one leg of a tensor.
    pub fn delta_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.expand_leg(leg, &self.delta)
    }

    /// Convolution product of two functionals: `(f * g)(x) = f(x_(1)) g(x_(2))`.
    pub fn convolve(&self, f: &Functional, g: &Functional) -> Functional {
        let field = self.algebra.field();
        let coeffs = (0..self.dim())
            .map(|j| {
                self.delta[j]
                    .apply_functional_leg(0, f)
                    .into_element()
                    .coeffs
                    .iter()
                    .zip(&g.coeffs)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect();
        Functional::from_coeffs(field, coeffs)
    }

    /// `x <- f = f(x_(1)) x_(2)` as a linear map.
    pub fn coact_left(&self, f: &Functional) -> LinMap {
        let images: Vec<AlgebraElement> = (0..self.dim())
            .map(|j| self.delta[j].apply_functional_leg(0, f).into_element())
            .collect();
        LinMap::from_images(self.algebra.field(), &images)
    }

    /// `f -> x = x_(1) f(x_(2))` as a linear map.
    pub fn coact_right(&self, f: &Functional) -> LinMap {
        let images: Vec<AlgebraElement> = (0..self.dim())
            .map(|j| self.delta[j].apply_functional_leg(1, f).into_element())
            .collect();
        LinMap::from_images(self.algebra.field(), &images)
    }
}

/// Verifies the quasi-bialgebra laws: the coproduct is an algebra map,
/// the counit laws hold, the associator conjugates coassociativity,
/// satisfies the normalized 3-cocycle equation and is invertible, and
/// the counit collapses the associator on the outer legs as well.
pub fn verify_quasi_bialgebra(qb: &QuasiBialgebra) -> Report {
    let alg = qb.algebra();
    let table = alg.table();
    let f = alg.field();
    let n = qb.dim();
    let mut report = Report::new("quasi-bialgebra");

    let mut hom = LawScan::new("coproduct is an algebra map");
    for i in 0..n {
        for j in 0..n {
            let lhs = qb.delta(&alg.mul(&alg.basis(i), &alg.basis(j)));
            let rhs = qb.delta_basis(i).mul_pointwise(qb.delta_basis(j), table);
            hom.expect(lhs == rhs, &[i, j], || lhs.clone(), || rhs.clone());
        }
    }
    hom.finish(&mut report);
    report.push_eq(
        "coproduct of the unit",
        qb.delta(&alg.unit()) == alg.unit_tensor(2),
        || qb.delta(&alg.unit()),
        || alg.unit_tensor(2),
    );

    let mut counit_law = LawScan::new("counit laws (eps (x) id) delta = id = (id (x) eps) delta");
    for i in 0..n {
        let e = alg.basis(i);
        let left = qb.delta_basis(i).apply_functional_leg(0, qb.counit()).into_element();
        counit_law.expect(left == e, &[i], || left.clone(), || e.clone());
        let right = qb.delta_basis(i).apply_functional_leg(1, qb.counit()).into_element();
        counit_law.expect(right == e, &[i], || right.clone(), || e.clone());
    }
    counit_law.finish(&mut report);

    let mut counit_hom = LawScan::new("counit is an algebra map");
    for i in 0..n {
        for j in 0..n {
            let lhs = qb.counit().eval(&alg.mul(&alg.basis(i), &alg.basis(j)));
            let rhs = f.mul(
                &qb.counit().eval(&alg.basis(i)),
                &qb.counit().eval(&alg.basis(j)),
            );
            counit_hom.expect(lhs == rhs, &[i, j], || lhs.clone(), || rhs.clone());
        }
    }
    counit_hom.expect(
        f.is_one(&qb.counit().eval(&alg.unit())),
        &[],
        || qb.counit().eval(&alg.unit()),
        || f.one(),
    );
    counit_hom.finish(&mut report);

    let mut coassoc = LawScan::new("quasi-coassociativity (id (x) delta)delta = Phi (delta (x) id)delta Phi^-1");
    for i in 0..n {
        let d = qb.delta_basis(i);
        let lhs = qb.delta_leg(d, 1);
        let inner = qb.delta_leg(d, 0);
        let rhs = qb.phi.mul_pointwise(&inner, table).mul_pointwise(&qb.phi_inv, table);
        coassoc.expect(lhs == rhs, &[i], || lhs.clone(), || rhs.clone());
    }
    coassoc.finish(&mut report);

    // pentagon: (1 (x) Phi)(id (x) delta (x) id)(Phi)(Phi (x) 1)
    //         = (id (x) id (x) delta)(Phi)(delta (x) id (x) id)(Phi)
    let lhs = qb
        .phi
        .embed(4, &[1, 2, 3], table)
        .mul_pointwise(&qb.delta_leg(&qb.phi, 1), table)
        .mul_pointwise(&qb.phi.embed(4, &[0, 1, 2], table), table);
    let rhs = qb
        .delta_leg(&qb.phi, 2)
        .mul_pointwise(&qb.delta_leg(&qb.phi, 0), table);
    report.push_eq("3-cocycle equation for Phi", lhs == rhs, || lhs.clone(), || rhs.clone());

    let normal = qb.phi.apply_functional_leg(1, qb.counit());
    report.push_eq(
        "normalization (id (x) eps (x) id)(Phi) = 1 (x) 1",
        normal == alg.unit_tensor(2),
        || normal.clone(),
        || alg.unit_tensor(2),
    );

    let prod = qb.phi.mul_pointwise(&qb.phi_inv, table);
    report.push_eq(
        "Phi Phi^-1 = 1 (x) 1 (x) 1",
        prod == alg.unit_tensor(3),
        || prod.clone(),
        || alg.unit_tensor(3),
    );
    let prod_rev = qb.phi_inv.mul_pointwise(&qb.phi, table);
    report.push_eq(
        "Phi^-1 Phi = 1 (x) 1 (x) 1",
        prod_rev == alg.unit_tensor(3),
        || prod_rev.clone(),
        || alg.unit_tensor(3),
    );

    // counit on the outer legs of Phi collapses it as well
    let left = qb.phi.apply_functional_leg(0, qb.counit());
    report.push_eq(
        "eps(X^1) X^2 (x) X^3 = 1 (x) 1",
        left == alg.unit_tensor(2),
        || left.clone(),
        || alg.unit_tensor(2),
    );
    let right = qb.phi.apply_functional_leg(2, qb.counit());
    report.push_eq(
        "X^1 (x) X^2 eps(X^3) = 1 (x) 1",
        right == alg.unit_tensor(2),
        || right.clone(),
        || alg.unit_tensor(2),
    );

    report
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuasiHopf {
    qb: QuasiBialgebra,
    antipode: LinMap,
    antipode_inv: LinMap,
    alpha: AlgebraElement,
    beta: AlgebraElement,
}

impl QuasiHopf {
    /// Wraps a quasi-bialgebra with antipode data; fails if the antipode
    /// matrix is singular (it must be bijective).
    pub fn new(
        qb: QuasiBialgebra,
        antipode: LinMap,
        alpha: AlgebraElement,
        beta: AlgebraElement,
    ) -> Result<Self> {
        let n = qb.dim();
        if antipode.dim() != n || alpha.dim() != n || beta.dim() != n {
            return Err(Error::Shape("antipode data dimension mismatch".into()));
        }
        let antipode_inv = antipode.inverse().ok_or(Error::Singular("antipode"))?;
        Ok(QuasiHopf {
            qb,
            antipode,
            antipode_inv,
            alpha,
            beta,
        })
    }

    pub fn qb(&self) -> &QuasiBialgebra {
        &self.qb
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        self.qb.algebra()
    }

    pub fn dim(&self) -> usize {
        self.qb.dim()
    }

    pub fn counit(&self) -> &Functional {
        self.qb.counit()
    }

    pub fn phi(&self) -> &Tensor {
        self.qb.phi()
    }

    pub fn phi_inv(&self) -> &Tensor {
        self.qb.phi_inv()
    }

    pub fn delta(&self, x: &AlgebraElement) -> Tensor {
        self.qb.delta(x)
    }

    pub fn s_map(&self) -> &LinMap {
        &self.antipode
    }

    pub fn s_inv_map(&self) -> &LinMap {
        &self.antipode_inv
    }

    pub fn s(&self, x: &AlgebraElement) -> AlgebraElement {
        self.antipode.apply(x)
    }

    pub fn s_inv(&self, x: &AlgebraElement) -> AlgebraElement {
        self.antipode_inv.apply(x)
    }

    pub fn alpha(&self) -> &AlgebraElement {
        &self.alpha
    }

    pub fn beta(&self) -> &AlgebraElement {
        &self.beta
    }

    /// `eps(alpha)` and `eps(beta)`.
    pub fn counit_alpha_beta(&self) -> (Scalar, Scalar) {
        (
            self.counit().eval(&self.alpha),
            self.counit().eval(&self.beta),
        )
    }

    /// Replaces `alpha` by `eps(beta) alpha` and `beta` by `eps(alpha) beta`,
    /// after which both have counit one. Requires `eps(alpha) eps(beta) = 1`.
    pub fn rescale_alpha_beta(&self) -> Result<QuasiHopf> {
        let f = self.algebra().field();
        let (ea, eb) = self.counit_alpha_beta();
        if !f.is_one(&f.mul(&ea, &eb)) {
            return Err(Error::Inconsistent(alloc::format!(
                "eps(alpha) eps(beta) = {} != 1",
                f.mul(&ea, &eb)
            )));
        }
        Ok(QuasiHopf {
            qb: self.qb.clone(),
            antipode: self.antipode.clone(),
            antipode_inv: self.antipode_inv.clone(),
            alpha: self.alpha.scale(&eb),
            beta: self.beta.scale(&ea),
        })
    }

    /// Replaces the presentation data wholesale (used by gauge twisting).
    pub fn with_structure(
        &self,
        delta: Vec<Tensor>,
        phi: Tensor,
        phi_inv: Tensor,
        alpha: AlgebraElement,
        beta: AlgebraElement,
    ) -> Result<QuasiHopf> {
        let qb = QuasiBialgebra::new(
            self.algebra().clone(),
            delta,
            self.counit().clone(),
            phi,
            phi_inv,
        )?;
        QuasiHopf::new(qb, self.antipode.clone(), alpha, beta)
    }
}

/// Verifies the antipode axioms on every basis element, the two
/// associator-antipode equations, and the derived counit identities.
pub fn verify_antipode(h: &QuasiHopf) -> Report {
    let alg = h.algebra();
    let table = alg.table();
    let f = alg.field();
    let n = h.dim();
    let mut report = Report::new("antipode");

    let mut anti = LawScan::new("antipode is an anti-homomorphism");
    for i in 0..n {
        for j in 0..n {
            let lhs = h.s(&alg.mul(&alg.basis(i), &alg.basis(j)));
            let rhs = alg.mul(&h.s(&alg.basis(j)), &h.s(&alg.basis(i)));
            anti.expect(lhs == rhs, &[i, j], || lhs.clone(), || rhs.clone());
        }
    }
    anti.expect(
        h.s(&alg.unit()) == alg.unit(),
        &[],
        || h.s(&alg.unit()),
        || alg.unit(),
    );
    anti.finish(&mut report);

    report.push_flag(
        "antipode is bijective",
        h.s_map().compose(h.s_inv_map()).is_identity(),
    );

    // S(a_(1)) alpha a_(2) = eps(a) alpha
    let s_then_alpha = alg.right_mult(h.alpha()).compose(h.s_map());
    let mut alpha_axiom = LawScan::new("S(a_(1)) alpha a_(2) = eps(a) alpha");
    for i in 0..n {
        let d = h.delta(&alg.basis(i));
        let lhs = d.map_leg(0, &s_then_alpha).mul_adjacent(0, table).into_element();
        let rhs = h.alpha().scale(&h.counit().eval(&alg.basis(i)));
        alpha_axiom.expect(lhs == rhs, &[i], || lhs.clone(), || rhs.clone());
    }
    alpha_axiom.finish(&mut report);

    // a_(1) beta S(a_(2)) = eps(a) beta
    let beta_right = alg.right_mult(h.beta());
    let mut beta_axiom = LawScan::new("a_(1) beta S(a_(2)) = eps(a) beta");
    for i in 0..n {
        let d = h.delta(&alg.basis(i));
        let lhs = d
            .map_leg(0, &beta_right)
            .map_leg(1, h.s_map())
            .mul_adjacent(0, table)
            .into_element();
        let rhs = h.beta().scale(&h.counit().eval(&alg.basis(i)));
        beta_axiom.expect(lhs == rhs, &[i], || lhs.clone(), || rhs.clone());
    }
    beta_axiom.finish(&mut report);

    // X^1 beta S(X^2) alpha X^3 = 1
    let lhs = h
        .phi()
        .map_leg(0, &beta_right)
        .map_leg(1, &s_then_alpha)
        .merge_legs(&[&[0, 1, 2]], table)
        .into_element();
    report.push_eq(
        "X^1 beta S(X^2) alpha X^3 = 1",
        lhs == alg.unit(),
        || lhs.clone(),
        || alg.unit(),
    );

    // S(x^1) alpha x^2 beta S(x^3) = 1
    let lhs = h
        .phi_inv()
        .map_leg(0, &s_then_alpha)
        .map_leg(1, &beta_right)
        .map_leg(2, h.s_map())
        .merge_legs(&[&[0, 1, 2]], table)
        .into_element();
    report.push_eq(
        "S(x^1) alpha x^2 beta S(x^3) = 1",
        lhs == alg.unit(),
        || lhs.clone(),
        || alg.unit(),
    );

    let eps_s = h.s_map().pullback(h.counit());
    report.push_eq(
        "eps . S = eps",
        eps_s == *h.counit(),
        || eps_s.clone(),
        || h.counit().clone(),
    );

    let (ea, eb) = h.counit_alpha_beta();
    report.push_eq(
        "eps(alpha) eps(beta) = 1",
        f.is_one(&f.mul(&ea, &eb)),
        || f.mul(&ea, &eb),
        || f.one(),
    );

    report
}

/// Runs the whole chain: algebra laws, quasi-bialgebra laws, antipode
/// axioms, and the q/p element identities.
pub fn full_verify(h: &QuasiHopf) -> Report {
    let mut report = Report::new("full axiom suite");
    report.merge(verify_algebra(h.algebra()));
    report.merge(verify_quasi_bialgebra(h.qb()));
    report.merge(verify_antipode(h));
    let qp = crate::qp::qp_elements(h);
    report.merge(crate::qp::verify_qp_identities(h, &qp));
    report
}
