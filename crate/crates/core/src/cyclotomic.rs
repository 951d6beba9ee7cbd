//! Exact arithmetic in `Z[ζ_p]` and `Q(ζ_p)` for a prime `p`.
//!
//! Elements are stored in the basis `1, ζ, …, ζ^{p-2}`; the relation
//! `ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})` keeps the representation canonical.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::Coeff;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<R> {
    p: u64,
    coeffs: Vec<R>,
}

/// A value of the additive character `ψ` and sums of such values.
pub type CharValue = Cyclotomic<BigInt>;
pub type CyclotomicRational = Cyclotomic<BigRational>;

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl<R: Coeff> Cyclotomic<R> {
    pub fn zero(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not a prime")));
        }
        Ok(Cyclotomic {
            p,
            coeffs: vec![R::zero(); (p - 1) as usize],
        })
    }

    pub fn constant(p: u64, c: R) -> Result<Self> {
        let mut out = Self::zero(p)?;
        out.coeffs[0] = c;
        Ok(out)
    }

    pub fn one(p: u64) -> Result<Self> {
        Self::constant(p, R::one())
    }

    /// `ζ_p^k`.
    pub fn zeta_pow(p: u64, k: i64) -> Result<Self> {
        let mut out = Self::zero(p)?;
        out.add_zeta_pow(k, &R::one());
        Ok(out)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in the base ring.
    pub fn as_constant(&self) -> Option<&R> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    /// `self += c·ζ^k`.
    pub fn add_zeta_pow(&mut self, k: i64, c: &R) {
        let e = k.rem_euclid(self.p as i64) as usize;
        if e + 1 == self.p as usize {
            for x in &mut self.coeffs {
                *x = x.clone() - c.clone();
            }
        } else {
            self.coeffs[e] = self.coeffs[e].clone() + c.clone();
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Cyclotomic<S> {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_prime(&self, other: &Self) {
        assert_eq!(
            self.p, other.p,
            "mixing cyclotomic fields of different primes"
        );
    }
}

impl<R: Coeff> AddAssign<&Cyclotomic<R>> for Cyclotomic<R> {
    fn add_assign(&mut self, rhs: &Cyclotomic<R>) {
        self.check_prime(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b.clone();
        }
    }
}

impl<R: Coeff> Add for &Cyclotomic<R> {
    type Output = Cyclotomic<R>;
    fn add(self, rhs: Self) -> Cyclotomic<R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<R: Coeff> Neg for &Cyclotomic<R> {
    type Output = Cyclotomic<R>;
    fn neg(self) -> Cyclotomic<R> {
        self.map_coeffs(|c| R::zero() - c.clone())
    }
}

impl<R: Coeff> Sub for &Cyclotomic<R> {
    type Output = Cyclotomic<R>;
    fn sub(self, rhs: Self) -> Cyclotomic<R> {
        self + &(-rhs)
    }
}

impl<R: Coeff> Mul for &Cyclotomic<R> {
    type Output = Cyclotomic<R>;
    fn mul(self, rhs: Self) -> Cyclotomic<R> {
        self.check_prime(rhs);
        let mut out = Cyclotomic {
            p: self.p,
            coeffs: vec![R::zero(); self.coeffs.len()],
        };
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.add_zeta_pow((i + j) as i64, &(a.clone() * b.clone()));
                }
            }
        }
        out
    }
}

impl<R: Coeff + Signed + fmt::Display> fmt::Display for Cyclotomic<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An element `a + b·v` of `Q(ζ_p)[v]/(v² - q)`, the home of the oracle's
/// values: `a` collects even powers of `v = q^{1/2}`, `b` the odd ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtQValue {
    pub q: u64,
    pub even: CyclotomicRational,
    pub odd: CyclotomicRational,
}

impl SqrtQValue {
    pub fn zero(q: u64) -> Result<Self> {
        Ok(SqrtQValue {
            q,
            even: CyclotomicRational::zero(q)?,
            odd: CyclotomicRational::zero(q)?,
        })
    }

    /// `(a + b·v)·x` for rational `a`, `b` and `x ∈ Z[ζ_p]`.
    pub fn add_product(&mut self, (a, b): &(BigRational, BigRational), x: &CharValue) {
        let x = x.map_coeffs(|c| BigRational::from_integer(c.clone()));
        self.even += &x.scale(a);
        self.odd += &x.scale(b);
    }

    pub fn from_rational_pair(q: u64, (a, b): &(BigRational, BigRational)) -> Result<Self> {
        Ok(SqrtQValue {
            q,
            even: CyclotomicRational::constant(q, a.clone())?,
            odd: CyclotomicRational::constant(q, b.clone())?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}

impl fmt::Display for SqrtQValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "({})*v", self.odd),
            (false, false) => write!(f, "{} + ({})*v", self.even, self.odd),
        }
    }
}
