//! Exact scalar fields: the rationals and prime fields GF(p).
//!
//! Every algorithm in this crate is generic over [`Field`]. Two families of
//! implementations are provided: [`Rational`] (arbitrary precision) and
//! [`Gf<P>`] for a prime `P <= 257`. There is no floating point anywhere.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest prime modulus accepted for [`Gf`].
pub const MAX_PRIME: u32 = 257;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar `{0}`: expected -?digits(/digits)?")]
    Malformed(String),
    #[error("denominator of `{text}` vanishes modulo {p}")]
    VanishingDenominator { text: String, p: u32 },
    #[error("unsupported field `{0}`")]
    Unsupported(String),
    #[error("operands over different fields: {0} and {1}")]
    MixedFields(FieldSpec, FieldSpec),
}

/// Which field a structure lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self, FieldError> {
        if p <= MAX_PRIME && is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(FieldError::Unsupported(format!("GF({p})")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Fails unless both specs agree.
    pub fn ensure_same(self, other: FieldSpec) -> Result<(), FieldError> {
        if self == other {
            Ok(())
        } else {
            Err(FieldError::MixedFields(self, other))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    /// Accepts `Q`, `GF(p)`, `GF p` and `GFp`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = t
            .strip_prefix("GF")
            .ok_or_else(|| FieldError::Unsupported(t.to_string()))?;
        let digits = rest
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        let p: u32 = digits
            .parse()
            .map_err(|_| FieldError::Unsupported(t.to_string()))?;
        FieldSpec::prime(p)
    }
}

pub const fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field.
///
/// The arithmetic operators never round. Division through `/` panics on a zero
/// divisor, in the same way integer division does; use [`Field::inv`] or
/// [`Field::checked_div`] when the divisor is not known to be nonzero.
pub trait Field:
    Clone
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn spec() -> FieldSpec;

    fn inv(&self) -> Result<Self, FieldError>;

    fn from_i64(v: i64) -> Self;

    /// Parses the scalar grammar `-?digits(/digits)?`.
    fn parse(text: &str) -> Result<Self, FieldError>;

    /// All elements in canonical order, or `None` for an infinite field.
    fn elements() -> Option<Vec<Self>>;

    /// Roots of `coeffs[0] + coeffs[1] t + ... ` lying in the field, without
    /// multiplicity, in ascending order. Complete for every implementation.
    fn roots(coeffs: &[Self]) -> Vec<Self>;

    fn characteristic() -> u32 {
        Self::spec().characteristic()
    }

    fn is_finite() -> bool {
        Self::spec().is_finite()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.clone() * rhs.inv()?)
    }
}

/// Splits scalar text into sign, numerator digits and optional denominator digits.
fn split_scalar(text: &str) -> Result<(bool, &str, Option<&str>), FieldError> {
    let malformed = || FieldError::Malformed(text.to_string());
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(malformed());
    }
    Ok((neg, num, den))
}

pub type Rational = BigRational;

impl Field for BigRational {
    fn spec() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse(text: &str) -> Result<Self, FieldError> {
        let (neg, num, den) = split_scalar(text)?;
        let n: BigInt = num.parse().map_err(|_| FieldError::Malformed(text.to_string()))?;
        let d: BigInt = match den {
            Some(d) => d.parse().map_err(|_| FieldError::Malformed(text.to_string()))?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let r = BigRational::new(n, d);
        Ok(if neg { -r } else { r })
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        rational_roots(coeffs)
    }
}

/// Rational roots by the rational root theorem after clearing denominators.
fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        // constant polynomials: either no roots or every element
        return Vec::new();
    }
    let mut roots = Vec::new();
    // factor out t^k
    let shift = c.iter().take_while(|x| x.is_zero()).count();
    if shift > 0 {
        roots.push(BigRational::zero());
        c.drain(..shift);
    }
    if c.len() > 1 {
        let lcm = c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = c.iter().map(|x| (x * &lcm).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let eval = |r: &BigRational| {
            ints.iter()
                .rev()
                .fold(BigRational::zero(), |acc, k| acc * r + BigRational::from_integer(k.clone()))
        };
        for p in divisors(&a0) {
            for q in divisors(&an) {
                if !p.gcd(&q).is_one() {
                    continue;
                }
                for sign in [1i32, -1] {
                    let r = BigRational::new(&p * BigInt::from(sign), q.clone());
                    if eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Trial division; coefficients in this crate are small.
    let mut out = Vec::new();
    if let Some(m) = n.to_u64() {
        let mut d = 1u64;
        while d * d <= m {
            if m % d == 0 {
                out.push(BigInt::from(d));
                if d * d != m {
                    out.push(BigInt::from(m / d));
                }
            }
            d += 1;
        }
    } else {
        let mut d = BigInt::one();
        while &(&d * &d) <= n {
            if (n % &d).is_zero() {
                out.push(d.clone());
                out.push(n / &d);
            }
            d += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// An element of the prime field GF(P), stored as its residue in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf<const P: u32>(u32);

impl<const P: u32> Gf<P> {
    const VALID: () = assert!(is_prime(P) && P <= MAX_PRIME, "modulus must be a prime <= 257");

    pub const fn new(v: u32) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Gf(v % P)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Gf::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Reduces a decimal digit string modulo P without overflow.
    fn reduce_digits(digits: &str) -> u32 {
        digits
            .bytes()
            .fold(0u32, |acc, b| (acc * 10 + u32::from(b - b'0')) % P)
    }
}

impl<const P: u32> fmt::Debug for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Gf<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Gf(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Gf<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Gf(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u32> Mul for Gf<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Gf(self.0 * rhs.0 % P)
    }
}

impl<const P: u32> Div for Gf<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in GF(p)")
    }
}

impl<const P: u32> Neg for Gf<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Gf(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u32> AddAssign for Gf<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Gf<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Gf<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Zero for Gf<P> {
    fn zero() -> Self {
        Gf::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Gf<P> {
    fn one() -> Self {
        Gf::new(1)
    }
}

impl<const P: u32> Field for Gf<P> {
    fn spec() -> FieldSpec {
        FieldSpec::Prime(P)
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.0 == 0 {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Gf::new(v.rem_euclid(i64::from(P)) as u32)
    }

    fn parse(text: &str) -> Result<Self, FieldError> {
        let (neg, num, den) = split_scalar(text)?;
        let n = Gf::new(Self::reduce_digits(num));
        let value = match den {
            Some(d) => {
                let d = Gf::<P>::new(Self::reduce_digits(d));
                let inv = d.inv().map_err(|_| FieldError::VanishingDenominator {
                    text: text.to_string(),
                    p: P,
                })?;
                n * inv
            }
            None => n,
        };
        Ok(if neg { -value } else { value })
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Gf::new).collect())
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Vec::new();
        }
        (0..P)
            .map(Gf::new)
            .filter(|t| {
                coeffs
                    .iter()
                    .rev()
                    .fold(Gf::new(0), |acc, c| acc * *t + *c)
                    .is_zero()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type F5 = Gf<5>;

    fn q(s: &str) -> Rational {
        Rational::parse(s).unwrap()
    }

    #[test]
    fn inverse_of_two_mod_five() {
        assert_eq!(F5::new(2).inv().unwrap(), F5::new(3));
    }

    #[test]
    fn rational_addition_is_exact() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!((q("1/2") + q("1/3")).to_string(), "5/6");
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(F5::new(0).inv(), Err(FieldError::DivisionByZero));
        assert_eq!(Rational::zero().inv(), Err(FieldError::DivisionByZero));
        assert!(q("3").checked_div(&Rational::zero()).is_err());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(F5::parse("1/2").unwrap(), F5::new(3));
        assert_eq!(q("-3"), Rational::from_i64(-3));
        assert!(matches!(
            F5::parse("1/5"),
            Err(FieldError::VanishingDenominator { p: 5, .. })
        ));
        assert_eq!(F5::parse("-1").unwrap(), F5::new(4));
        assert_eq!(Gf::<7>::parse("123456789012345678901234567890").unwrap(), Gf::<7>::new(
            (123456789012345678901234567890u128 % 7) as u32
        ));
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "-", "1/", "/2", "1.5", "+1", "a", "1/2/3", "--1", " 1"] {
            assert!(matches!(Rational::parse(bad), Err(FieldError::Malformed(_))), "{bad}");
            assert!(matches!(F5::parse(bad), Err(FieldError::Malformed(_))), "{bad}");
        }
        assert_eq!(Rational::parse("1/0"), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rational_normal_form() {
        let r = q("-6/4");
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(q("4/2").to_string(), "2");
        assert_eq!(q("-0").to_string(), "0");
    }

    #[test]
    fn field_spec_parse_and_display() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("GF(5)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert_eq!("GF 7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!("GF(4)".parse::<FieldSpec>().is_err());
        assert!("GF(263)".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(257).to_string(), "GF(257)");
        assert_eq!(FieldSpec::Rationals.characteristic(), 0);
        assert_eq!(Gf::<257>::characteristic(), 257);
        assert!(FieldSpec::Rationals.ensure_same(FieldSpec::Prime(2)).is_err());
    }

    #[test]
    fn rational_roots_found() {
        // (t - 1/2)(t + 3) t = t^3 + 5/2 t^2 - 3/2 t
        let c = [q("0"), q("-3/2"), q("5/2"), q("1")];
        assert_eq!(Rational::roots(&c), vec![q("-3"), q("0"), q("1/2")]);
        // t^2 - 2 has no rational roots
        assert!(Rational::roots(&[q("-2"), q("0"), q("1")]).is_empty());
        assert_eq!(Gf::<7>::roots(&[Gf::new(5), Gf::new(0), Gf::new(1)]), vec![Gf::new(3), Gf::new(4)]);
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn gf<const P: u32>() -> impl Strategy<Value = Gf<P>> {
        (0..P).prop_map(Gf::new)
    }

    fn check_axioms<F: Field>(a: F, b: F, c: F) {
        assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        assert_eq!(a.clone() + (-a.clone()), F::zero());
        assert_eq!(a.clone() * F::one(), a);
        if !a.is_zero() {
            assert_eq!(a.clone() * a.inv().unwrap(), F::one());
        }
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
            check_axioms(a, b, c);
        }

        #[test]
        fn gf2_field_axioms(a in gf::<2>(), b in gf::<2>(), c in gf::<2>()) {
            check_axioms(a, b, c);
        }

        #[test]
        fn gf3_field_axioms(a in gf::<3>(), b in gf::<3>(), c in gf::<3>()) {
            check_axioms(a, b, c);
        }

        #[test]
        fn gf257_field_axioms(a in gf::<257>(), b in gf::<257>(), c in gf::<257>()) {
            check_axioms(a, b, c);
        }

        #[test]
        fn render_then_parse_is_identity(a in rat(), b in gf::<7>()) {
            prop_assert_eq!(Rational::parse(&a.to_string()).unwrap(), a);
            prop_assert_eq!(Gf::<7>::parse(&b.to_string()).unwrap(), b);
        }
    }
}
