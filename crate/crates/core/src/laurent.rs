//! Sparse Laurent polynomials in the half-power variable `v`, with `v² = q`.
//!
//! `LaurentPoly` has arbitrary-precision integer coefficients and is the
//! coefficient ring of every Hecke and Whittaker element. `RatLaurent` has
//! rational coefficients and holds values of characters at torus points.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Operations a coefficient ring has to support.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + fmt::Debug
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> + fmt::Debug
{
}

/// `Σ_k c_k v^k` with finitely many nonzero `c_k`. No zero coefficient is
/// ever stored, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent<R> {
    coeffs: BTreeMap<i64, R>,
}

pub type LaurentPoly = Laurent<BigInt>;
pub type RatLaurent = Laurent<BigRational>;

impl<R: Coeff> Laurent<R> {
    pub fn zero() -> Self {
        Laurent {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · v^k`.
    pub fn monomial(c: R, k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self::monomial(R::one(), k)
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        Self::v_pow(2 * k)
    }

    /// `Σ c_k q^k` from a list of q-coefficients starting at `q^0`.
    pub fn from_q_coeffs(cs: impl IntoIterator<Item = R>) -> Self {
        Self::from_terms(cs.into_iter().enumerate().map(|(k, c)| (2 * k as i64, c)))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, k: i64, c: R) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(R::zero);
        let sum = slot.clone() + c;
        if sum.is_zero() {
            self.coeffs.remove(&k);
        } else {
            *slot = sum;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending order of the exponent of `v`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i64) -> R {
        self.coeffs.get(&k).cloned().unwrap_or_else(R::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// `p(v) ↦ p(v⁻¹)`.
    pub fn invert_variable(&self) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&e, c)| (e, c.clone() * s.clone())))
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Laurent<S> {
        Laurent::from_terms(self.coeffs.iter().map(|(&e, c)| (e, f(c))))
    }

    /// True when every exponent of `v` is even and non-negative, i.e. the
    /// polynomial lies in `R[q]`.
    pub fn is_q_polynomial(&self) -> bool {
        self.coeffs.keys().all(|&k| k >= 0 && k % 2 == 0)
    }

    /// True when every exponent of `v` is even.
    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|&k| k % 2 == 0)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<R: Coeff + Signed> Laurent<R> {
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

/// Coefficient rings that embed into the rationals.
pub trait ToRational {
    fn to_rational(&self) -> BigRational;
}

impl ToRational for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl ToRational for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

pub(crate) fn rational_pow(base: &BigRational, k: i64) -> BigRational {
    let e = i32::try_from(k).expect("exponent out of range");
    Pow::pow(base, e)
}

impl<R: Coeff + ToRational> Laurent<R> {
    /// Exact value at `v = v0`.
    pub fn eval_v(&self, v0: &BigRational) -> Result<BigRational> {
        if v0.is_zero() {
            if self.coeffs.keys().any(|&k| k < 0) {
                return Err(Error::ZeroEvaluation);
            }
            return Ok(self.coeff(0).to_rational());
        }
        Ok(self
            .coeffs
            .iter()
            .fold(BigRational::zero(), |acc, (&k, c)| {
                acc + c.to_rational() * rational_pow(v0, k)
            }))
    }

    /// Exact value at `q = q0`; only defined when all powers of `v` are even.
    pub fn eval_q(&self, q0: &BigRational) -> Result<BigRational> {
        if !self.is_even() {
            return Err(Error::OddVPower);
        }
        if q0.is_zero() {
            if self.coeffs.keys().any(|&k| k < 0) {
                return Err(Error::ZeroEvaluation);
            }
            return Ok(self.coeff(0).to_rational());
        }
        Ok(self
            .coeffs
            .iter()
            .fold(BigRational::zero(), |acc, (&k, c)| {
                acc + c.to_rational() * rational_pow(q0, k / 2)
            }))
    }

    /// Splits the value at `v² = q0` as `a + b·v` with rational `a`, `b`.
    pub fn eval_sqrt_q(&self, q0: &BigRational) -> Result<(BigRational, BigRational)> {
        if q0.is_zero() {
            return Err(Error::ZeroEvaluation);
        }
        let mut even = BigRational::zero();
        let mut odd = BigRational::zero();
        for (&k, c) in &self.coeffs {
            let half = k.div_euclid(2);
            let term = c.to_rational() * rational_pow(q0, half);
            if k.rem_euclid(2) == 0 {
                even += term;
            } else {
                odd += term;
            }
        }
        Ok((even, odd))
    }
}

impl LaurentPoly {
    pub fn to_rational(&self) -> RatLaurent {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    pub fn from_i64_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }
}

impl<R: Coeff> Add for &Laurent<R> {
    type Output = Laurent<R>;
    fn add(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<R: Coeff> Sub for &Laurent<R> {
    type Output = Laurent<R>;
    fn sub(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<R: Coeff> Mul for &Laurent<R> {
    type Output = Laurent<R>;
    fn mul(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = Laurent::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                out.add_term(a + b, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Coeff> Neg for &Laurent<R> {
    type Output = Laurent<R>;
    fn neg(self) -> Laurent<R> {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl<R: Coeff> AddAssign<&Laurent<R>> for Laurent<R> {
    fn add_assign(&mut self, rhs: &Laurent<R>) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, c.clone());
        }
    }
}

impl<R: Coeff> SubAssign<&Laurent<R>> for Laurent<R> {
    fn sub_assign(&mut self, rhs: &Laurent<R>) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, -c.clone());
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Coeff> $tr for Laurent<R> {
            type Output = Laurent<R>;
            fn $m(self, rhs: Laurent<R>) -> Laurent<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Coeff> Neg for Laurent<R> {
    type Output = Laurent<R>;
    fn neg(self) -> Laurent<R> {
        -&self
    }
}

impl<R: Coeff> std::iter::Sum for Laurent<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// Canonical printing: ascending powers of `v`, e.g. `-1 + 2*v^2`.
impl<R: Coeff + Signed + fmt::Display> fmt::Display for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&k, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "v^{k}")?,
                (_, false) => write!(f, "{mag}*v^{k}")?,
            }
        }
        Ok(())
    }
}

/// JSON representation of a single coefficient.
pub trait JsonCoeff: Sized {
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self>;
}

impl JsonCoeff for BigInt {
    fn to_json(&self) -> serde_json::Value {
        match self.to_i64() {
            Some(x) => serde_json::Value::from(x),
            None => serde_json::Value::String(self.to_string()),
        }
    }

    fn from_json(v: &serde_json::Value) -> Result<Self> {
        match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer"))),
            serde_json::Value::String(s) => s
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{s}`"))),
            other => Err(Error::Parse(format!("bad coefficient {other}"))),
        }
    }
}

impl JsonCoeff for BigRational {
    fn to_json(&self) -> serde_json::Value {
        if self.is_integer() {
            self.to_integer().to_json()
        } else {
            serde_json::Value::String(self.to_string())
        }
    }

    fn from_json(v: &serde_json::Value) -> Result<Self> {
        match v {
            serde_json::Value::String(s) => s
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational `{s}`"))),
            other => BigInt::from_json(other).map(BigRational::from_integer),
        }
    }
}

impl<R: Coeff + JsonCoeff> Laurent<R> {
    /// `{"v": {"-2": 1, "0": 3}}` for `v⁻² + 3`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("laurent polynomial serialises")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let inner = v
            .get("v")
            .and_then(|x| x.as_object())
            .ok_or_else(|| Error::Parse("expected {\"v\": {...}}".into()))?;
        let mut p = Self::zero();
        for (k, c) in inner {
            let e: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{k}`")))?;
            p.add_term(e, R::from_json(c)?);
        }
        Ok(p)
    }
}

struct Terms<'a, R>(&'a BTreeMap<i64, R>);

impl<R: JsonCoeff> Serialize for Terms<'_, R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, c) in self.0 {
            m.serialize_entry(&k.to_string(), &c.to_json())?;
        }
        m.end()
    }
}

impl<R: Coeff + JsonCoeff> Serialize for Laurent<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("v", &Terms(&self.coeffs))?;
        m.end()
    }
}

impl<'de, R: Coeff + JsonCoeff> Deserialize<'de> for Laurent<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_i64_terms(terms)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        let a = lp(&[(1, 1), (-1, 1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (-2, -1)]));
        assert!((&a * &LaurentPoly::zero()).is_zero());
        let one_plus_q = lp(&[(0, 1), (2, 1)]);
        assert_eq!(&one_plus_q * &one_plus_q, lp(&[(0, 1), (2, 2), (4, 1)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let p = lp(&[(0, 1), (2, 1)]);
        assert_eq!(p.eval_q(&rat(3, 1)).unwrap(), rat(4, 1));
        assert_eq!(lp(&[(-1, 1)]).eval_v(&rat(3, 1)).unwrap(), rat(1, 3));
        assert_eq!(
            LaurentPoly::q_pow(-1).eval_q(&rat(9, 1)).unwrap(),
            rat(1, 9)
        );
        assert!(matches!(
            lp(&[(-1, 1)]).eval_v(&rat(0, 1)),
            Err(Error::ZeroEvaluation)
        ));
        assert!(matches!(
            lp(&[(1, 1)]).eval_q(&rat(3, 1)),
            Err(Error::OddVPower)
        ));
        let (a, b) = lp(&[(-1, 2), (2, 1)]).eval_sqrt_q(&rat(3, 1)).unwrap();
        assert_eq!(a, rat(3, 1));
        assert_eq!(b, rat(2, 3));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(lp(&[(2, 1), (-2, -1)]).to_string(), "-v^-2 + v^2");
        assert_eq!(lp(&[(0, 3), (-2, 1)]).to_string(), "v^-2 + 3");
        assert_eq!(lp(&[(1, -2), (0, 1)]).to_string(), "1 - 2*v^1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = lp(&[(-2, 1), (0, 3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"v":{"-2":1,"0":3}}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let huge = LaurentPoly::constant(BigInt::from(10).pow(30u32));
        let back: LaurentPoly =
            serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(|t| lp(&t))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), n in 1i64..5, d in 1i64..5) {
            let v0 = rat(n, d);
            let lhs = (&a * &b).eval_v(&v0).unwrap();
            prop_assert_eq!(lhs, a.eval_v(&v0).unwrap() * b.eval_v(&v0).unwrap());
        }
    }
}
