//! Integrals, the projection onto them, and the isomorphism between
//! `H` and (left integrals) (x) `H*`.
//!
//! A left integral satisfies `a t = eps(a) t` for every `a`; over a
//! field the space of left integrals of a valid presentation is
//! one-dimensional, which is exactly what makes the Frobenius structure
//! of the next module work.

use alloc::vec::Vec;

use crate::linear::{AlgebraElement, Functional, LinMap};
use crate::matrix::Matrix;
use crate::presentation::QuasiHopf;
use crate::qp::{qp_elements, QPElements};
use crate::tensor::Tensor;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(&self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// A basis of the space of one-sided integrals, echelon-normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralSpace {
    pub side: Side,
    pub basis: Vec<AlgebraElement>,
}

impl IntegralSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solves the linear system `e_i t = eps(e_i) t` (or its right-handed
/// version) over all basis indices at once.
pub fn integral_space(h: &QuasiHopf, side: Side) -> IntegralSpace {
    let alg = h.algebra();
    let field = alg.field();
    let n = alg.dim();
    let mut stacked: Option<Matrix> = None;
    for i in 0..n {
        let mult = match side {
            Side::Left => alg.left_mult(&alg.basis(i)),
            Side::Right => alg.right_mult(&alg.basis(i)),
        };
        let eps = h.counit().eval(&alg.basis(i));
        let block = Matrix::from_fn(field, n, n, |r, c| {
            let m = mult.matrix().get(r, c).clone();
            if r == c {
                field.sub(&m, &eps)
            } else {
                m
            }
        });
        stacked = Some(match stacked {
            None => block,
            Some(prev) => prev.vstack(&block),
        });
    }
    let basis = stacked
        .expect("dimension is at least one")
        .kernel_basis()
        .into_iter()
        .map(|coeffs| AlgebraElement::from_coeffs(field, coeffs))
        .collect();
    IntegralSpace { side, basis }
}

/// The projection `P : H -> (left integrals)` assembled from the
/// canonical dual bases `a_i = e_i`, `f^i` = coordinate functionals:
///
/// ```text
/// P(h) = sum_i < f^i | beta S^2(q^2_R (a_i)_(2)) h >  q^1_R (a_i)_(1)
/// ```
pub fn projection_matrix(h: &QuasiHopf, qp: &QPElements) -> LinMap {
    let alg = h.algebra();
    let table = alg.table();
    let field = alg.field();
    let n = alg.dim();
    let s2 = h.s_map().compose(h.s_map());
    let beta_left = alg.left_mult(h.beta());
    let mut images = Vec::with_capacity(n);
    for j in 0..n {
        let ej = alg.basis(j);
        let mut image = AlgebraElement::zero(field, n);
        for i in 0..n {
            // q_R * delta(e_i), then beta S^2(..) e_j on the second leg
            let w = qp
                .q_r
                .mul_pointwise(h.qb().delta_basis(i), table)
                .map_leg(1, &beta_left.compose(&s2))
                .mul_pointwise(&Tensor::of_elements(&[&alg.unit(), &ej]), table);
            let fi = Functional::coordinate(field, n, i);
            image = image.add(&w.apply_functional_leg(1, &fi).into_element());
        }
        images.push(image);
    }
    LinMap::from_images(field, &images)
}

/// The scalar `sum_j < f^j | S(P(a_j) beta) >`, which equals one for
/// every valid presentation and certifies that the projection hits a
/// nonzero integral.
pub fn integral_certificate(h: &QuasiHopf, projection: &LinMap) -> crate::field::Scalar {
    let alg = h.algebra();
    let field = alg.field();
    let mut acc = field.zero();
    for j in 0..alg.dim() {
        let b_j = projection.column(j);
        let val = h.s(&alg.mul(&b_j, h.beta()));
        acc = field.add(&acc, &val.coeffs[j]);
    }
    acc
}

/// The modified coproduct built from `q_R` and `p_R`:
/// `delta_u(x) = q^1_R x_(1) p^1_R (x) q^2_R x_(2) p^2_R`.
pub fn underline_coproduct(h: &QuasiHopf, x: &AlgebraElement) -> Tensor {
    let qp = qp_elements(h);
    underline_coproduct_with(h, &qp, x)
}

pub fn underline_coproduct_with(h: &QuasiHopf, qp: &QPElements, x: &AlgebraElement) -> Tensor {
    let table = h.algebra().table();
    qp.q_r
        .mul_pointwise(&h.delta(x), table)
        .mul_pointwise(&qp.p_r, table)
}

/// Everything downstream needs about the integrals of one presentation:
/// both spaces, the canonical left generator (first nonzero coordinate
/// scaled to one), and the projection matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralData {
    pub left: IntegralSpace,
    pub right: IntegralSpace,
    pub generator: AlgebraElement,
    pub projection: LinMap,
}

impl IntegralData {
    /// Fails if either integral space does not have dimension one,
    /// which cannot happen for a genuine quasi-Hopf presentation over a
    /// field.
    pub fn compute(h: &QuasiHopf) -> Result<Self> {
        let left = integral_space(h, Side::Left);
        let right = integral_space(h, Side::Right);
        if left.dim() != 1 {
            return Err(Error::IntegralDimension {
                side: "left",
                dim: left.dim(),
            });
        }
        if right.dim() != 1 {
            return Err(Error::IntegralDimension {
                side: "right",
                dim: right.dim(),
            });
        }
        let field = h.algebra().field();
        let raw = &left.basis[0];
        let (_, lead) = raw.leading().expect("kernel basis vectors are nonzero");
        let generator = raw.scale(&field.inv(lead).expect("leading coefficient is a unit"));
        let qp = qp_elements(h);
        let projection = projection_matrix(h, &qp);
        Ok(IntegralData {
            left,
            right,
            generator,
            projection,
        })
    }

    /// Coordinates of `x` in the rank-one integral space, if `x` is a
    /// scalar multiple of the generator.
    pub fn integral_coordinate(&self, x: &AlgebraElement) -> Option<crate::field::Scalar> {
        let (lead_idx, _) = self.generator.leading().expect("generator is nonzero");
        let c = x.coeffs[lead_idx].clone();
        if *x == self.generator.scale(&c) {
            Some(c)
        } else {
            None
        }
    }
}

/// `theta(t (x) f) = f(S(t_(2u))) t_(1u)` with the underline coproduct.
pub fn theta(h: &QuasiHopf, t: &AlgebraElement, f: &Functional) -> AlgebraElement {
    let ud = underline_coproduct(h, t);
    let f_s = h.s_map().pullback(f);
    ud.apply_functional_leg(1, &f_s).into_element()
}

/// The matrix of `theta(t (x) .)` acting on functional coordinates.
pub fn theta_matrix(h: &QuasiHopf, t: &AlgebraElement) -> Matrix {
    let ud = underline_coproduct(h, t);
    // theta(f)_a = sum_b ud[a, b] (f . S)_b = (C S^T f)_a
    ud.to_matrix().mul(&h.s_map().matrix().transpose())
}

/// `theta_inv(x)` in the rank-one factorization: the functional `w`
/// with `theta^{-1}(x) = t (x) w` over the canonical generator `t`.
/// Exact: every projection `P(a_i x)` must be a multiple of `t`.
pub fn theta_inv(h: &QuasiHopf, ints: &IntegralData, x: &AlgebraElement) -> Result<Functional> {
    let alg = h.algebra();
    let field = alg.field();
    let n = alg.dim();
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        let v = ints.projection.apply(&alg.mul(&alg.basis(i), x));
        let c = ints
            .integral_coordinate(&v)
            .ok_or(Error::NotProportional("projection image"))?;
        coeffs.push(c);
    }
    Ok(Functional::from_coeffs(field, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_group_algebra, build_sweedler, GroupTable};
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn c2_left_integral_is_one_plus_g() {
        let h = build_group_algebra(&GroupTable::cyclic(2), q()).unwrap();
        let ints = IntegralData::compute(&h).unwrap();
        let f = q();
        let expected = AlgebraElement::from_coeffs(f, alloc::vec![f.one(), f.one()]);
        assert_eq!(ints.generator, expected);
        assert_eq!(ints.left.dim(), 1);
        assert_eq!(ints.right.dim(), 1);
    }

    #[test]
    fn sweedler_integral_has_zero_counit() {
        let h = build_sweedler(q()).unwrap();
        let ints = IntegralData::compute(&h).unwrap();
        let eps = h.counit().eval(&ints.generator);
        assert!(q().is_zero(&eps));
        // left and right integrals differ: non-unimodular
        let rl = &ints.right.basis[0];
        assert!(ints.integral_coordinate(rl).is_none());
    }

    #[test]
    fn projection_lands_in_the_integral_space() {
        for h in [
            build_group_algebra(&GroupTable::cyclic(2), q()).unwrap(),
            build_sweedler(q()).unwrap(),
        ] {
            let ints = IntegralData::compute(&h).unwrap();
            for j in 0..h.dim() {
                let image = ints.projection.column(j);
                assert!(
                    ints.integral_coordinate(&image).is_some(),
                    "P(e_{j}) escapes the integral space"
                );
            }
        }
    }

    #[test]
    fn certificate_is_one() {
        let h = build_sweedler(q()).unwrap();
        let ints = IntegralData::compute(&h).unwrap();
        assert!(q().is_one(&integral_certificate(&h, &ints.projection)));
    }
}
