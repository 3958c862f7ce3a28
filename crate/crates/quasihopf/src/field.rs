//! Exact scalars over the rationals or a prime field.
//!
//! Every scalar in a computation belongs to one [`FieldSpec`]; arithmetic
//! goes through the field so that prime-field residues always stay
//! reduced and rational arithmetic stays in lowest terms. There is no
//! floating point anywhere.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// The ground field of a presentation: `Q` or `F_p` for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

/// An exact field element: an arbitrary-precision rational or a reduced
/// residue mod p. The variant must match the [`FieldSpec`] in use; mixing
/// them is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

/// Deterministic Miller-Rabin, exact for all u64 inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl FieldSpec {
    /// The rational field.
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// The prime field `F_p`; checks that `p` is prime.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, value: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(value))),
            FieldSpec::PrimeField(p) => {
                let p = *p as i128;
                Scalar::Fp(((value as i128).rem_euclid(p)) as u64)
            }
        }
    }

    /// `num/den` as a field element; fails on zero denominator or a
    /// denominator divisible by the characteristic.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let d = self.from_i64(den);
        let inv = self.inv(&d).ok_or(Error::ZeroDenominator)?;
        Ok(self.mul(&self.from_i64(num), &inv))
    }

    fn expect_q<'a>(&self, s: &'a Scalar) -> &'a BigRational {
        match s {
            Scalar::Q(r) => r,
            Scalar::Fp(_) => panic!("prime-field scalar used in rational arithmetic"),
        }
    }

    fn expect_fp(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Fp(r) => *r,
            Scalar::Q(_) => panic!("rational scalar used in prime-field arithmetic"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(self.expect_q(a) + self.expect_q(b)),
            FieldSpec::PrimeField(p) => {
                Scalar::Fp(((self.expect_fp(a) as u128 + self.expect_fp(b) as u128) % *p as u128) as u64)
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(-self.expect_q(a)),
            FieldSpec::PrimeField(p) => {
                let r = self.expect_fp(a);
                Scalar::Fp(if r == 0 { 0 } else { p - r })
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(self.expect_q(a) * self.expect_q(b)),
            FieldSpec::PrimeField(p) => {
                Scalar::Fp(((self.expect_fp(a) as u128 * self.expect_fp(b) as u128) % *p as u128) as u64)
            }
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match self {
            FieldSpec::Rationals => {
                let r = self.expect_q(a);
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(r.recip()))
                }
            }
            FieldSpec::PrimeField(p) => {
                let r = self.expect_fp(a);
                if r == 0 {
                    return None;
                }
                // extended Euclid on signed 128-bit copies
                let (mut t, mut new_t) = (0i128, 1i128);
                let (mut r0, mut r1) = (*p as i128, r as i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (t, new_t) = (new_t, t - q * new_t);
                    (r0, r1) = (r1, r0 - q * r1);
                }
                debug_assert_eq!(r0, 1);
                Some(Scalar::Fp(t.rem_euclid(*p as i128) as u64))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|binv| self.mul(a, &binv))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp(r) => *r == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp(r) => *r == 1,
        }
    }

    /// Parses an exact literal. Rational fields accept `-3`, `5/7`;
    /// prime fields accept the same forms plus `p`-prefixed residues
    /// like `p3`. Fractions over a prime field are resolved by modular
    /// inversion.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::ParseScalar(text.to_string()));
        }
        if let FieldSpec::PrimeField(p) = self {
            if let Some(rest) = text.strip_prefix('p') {
                let r: u64 = rest
                    .parse()
                    .map_err(|_| Error::ParseScalar(text.to_string()))?;
                return Ok(Scalar::Fp(r % p));
            }
        }
        let (num_text, den_text) = match text.split_once('/') {
            Some((n, d)) => (n, d),
            None => (text, "1"),
        };
        let num: i64 = num_text
            .parse()
            .map_err(|_| Error::ParseScalar(text.to_string()))?;
        let den: i64 = den_text
            .parse()
            .map_err(|_| Error::ParseScalar(text.to_string()))?;
        self.from_ratio(num, den)
    }

    /// Canonical file form: lowest-terms `num` / `num/den` over the
    /// rationals, `p`-prefixed reduced residues over a prime field.
    pub fn file_string(&self, s: &Scalar) -> String {
        match s {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(r) => format!("p{r}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(r) => write!(f, "{r}"),
        }
    }
}

impl Scalar {
    /// Signed integer value if the scalar is an integer rational.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(r) if r.denom().is_one() => {
                let n = r.numer();
                if n.bits() <= 62 {
                    let mag: i64 = n.magnitude().try_into().ok()?;
                    Some(if n.is_negative() { -mag } else { mag })
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_detection() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(97).is_ok());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err());
        assert!(FieldSpec::prime_field(3_215_031_751).is_err()); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn fp_inverse() {
        let f = FieldSpec::prime_field(7).unwrap();
        for r in 1..7 {
            let a = Scalar::Fp(r);
            let inv = f.inv(&a).unwrap();
            assert!(f.is_one(&f.mul(&a, &inv)));
        }
        assert_eq!(f.inv(&Scalar::Fp(0)), None);
    }

    #[test]
    fn parse_forms() {
        let q = FieldSpec::rationals();
        assert_eq!(q.parse("3/6").unwrap(), q.from_ratio(1, 2).unwrap());
        assert_eq!(q.parse("-4").unwrap(), q.from_i64(-4));
        assert!(q.parse("p3").is_err());
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f5.parse("p7").unwrap(), Scalar::Fp(2));
        assert_eq!(f5.parse("3/4").unwrap(), f5.div(&f5.from_i64(3), &f5.from_i64(4)).unwrap());
    }

    proptest! {
        // (a/b) * (b/a) = 1 identically: exactness over Q
        #[test]
        fn rational_exactness(a in -1000i64..1000, b in 1i64..1000) {
            prop_assume!(a != 0);
            let q = FieldSpec::rationals();
            let x = q.from_ratio(a, b).unwrap();
            let y = q.from_ratio(b, a).unwrap();
            prop_assert!(q.is_one(&q.mul(&x, &y)));
        }

        #[test]
        fn field_axioms_fp(a in 0u64..13, b in 0u64..13, c in 0u64..13) {
            let f = FieldSpec::prime_field(13).unwrap();
            let (a, b, c) = (Scalar::Fp(a), Scalar::Fp(b), Scalar::Fp(c));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        }
    }
}
