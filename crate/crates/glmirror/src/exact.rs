//! Exact scalar arithmetic.
//!
//! * [`Rational`]: arbitrary-precision rationals (always reduced, positive denominator).
//! * [`TropNum`]: the min-plus semiring `Q ∪ {+∞}`.
//! * [`PosLead`]: the leading term `c·t^μ` (with `c > 0`) of a positive
//!   generalized Puiseux series. Because positive series never cancel under
//!   addition, the leading term of any subtraction-free expression is computed
//!   exactly from the leading terms of its inputs.
//!
//! The module also defines the small algebraic trait hierarchy used by the
//! matrix and symbolic layers: [`Semiring`], [`Ring`], [`Field`] and
//! [`Semifield`] (a division semiring without zero, the natural home of
//! subtraction-free computation).
//!
//! ```
//! use glmirror::exact::{rat, PosLead};
//! let a = PosLead::new(rat(1, 1), rat(2, 1)).unwrap();
//! let b = PosLead::new(rat(1, 1), rat(3, 1)).unwrap();
//! assert_eq!(a.add(&b).to_string(), "5@1");
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{MirrorError, Result};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"p/q"`, or `"p"` when it is an integer.
pub fn render_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `"p/q"` or `"p"` (optionally signed) into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed = if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|e| MirrorError::Parse(format!("{t}: {e}")))?;
        let q = BigInt::from_str(q.trim()).map_err(|e| MirrorError::Parse(format!("{t}: {e}")))?;
        if q.is_zero() {
            return Err(MirrorError::Parse(format!("{t}: zero denominator")));
        }
        Rational::new(p, q)
    } else {
        let p = BigInt::from_str(t).map_err(|e| MirrorError::Parse(format!("{t}: {e}")))?;
        Rational::from_integer(p)
    };
    Ok(parsed)
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod rational_string {
    use super::*;

    /// Serializes a rational as a string.
    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&render_rational(q))
    }

    /// Deserializes a rational from a string.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Algebraic traits
// ---------------------------------------------------------------------------

/// Commutative semiring with explicit zero.
pub trait Semiring: Clone + PartialEq + fmt::Debug {
    /// Additive identity.
    fn zero() -> Self;
    /// Multiplicative identity.
    fn one() -> Self;
    /// Sum.
    fn add(&self, other: &Self) -> Self;
    /// Product.
    fn mul(&self, other: &Self) -> Self;
    /// Whether this element is the additive identity.
    fn is_zero(&self) -> bool;
}

/// Commutative ring.
pub trait Ring: Semiring {
    /// Additive inverse.
    fn neg(&self) -> Self;
    /// Difference.
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    /// Embeds a rational constant.
    fn from_rational(q: &Rational) -> Self;
}

/// Field: every non-zero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Quotient, `None` when dividing by zero.
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

/// Division semiring without zero: the carrier of subtraction-free computation.
///
/// Implemented by positive number systems ([`PosLead`], [`MinPlus`]) as well as
/// by symbolic types that are closed under `+`, `×`, `÷`.
pub trait Semifield: Clone + PartialEq + fmt::Debug {
    /// Embeds a positive rational constant.
    fn from_coefficient(c: &Rational) -> Self;
    /// Sum.
    fn add(&self, other: &Self) -> Self;
    /// Product.
    fn mul(&self, other: &Self) -> Self;
    /// Quotient.
    fn div(&self, other: &Self) -> Self;
    /// Multiplicative identity.
    fn unit() -> Self {
        Self::from_coefficient(&<Rational as One>::one())
    }
    /// Reciprocal.
    fn recip(&self) -> Self {
        Self::unit().div(self)
    }
    /// Integer power.
    fn powi(&self, e: i64) -> Self {
        let mut acc = Self::unit();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(self);
        }
        if e < 0 {
            acc.recip()
        } else {
            acc
        }
    }
}

impl Semiring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for Rational {
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Semifield for Rational {
    fn from_coefficient(c: &Rational) -> Self {
        c.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

/// A semifield with an adjoined zero (`None`) is a semiring.
impl<T: Semifield> Semiring for Option<T> {
    fn zero() -> Self {
        None
    }
    fn one() -> Self {
        Some(T::unit())
    }
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (None, x) | (x, None) => x.clone(),
            (Some(a), Some(b)) => Some(a.add(b)),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Some(a), Some(b)) => Some(a.mul(b)),
            _ => None,
        }
    }
    fn is_zero(&self) -> bool {
        self.is_none()
    }
}

// ---------------------------------------------------------------------------
// Tropical numbers
// ---------------------------------------------------------------------------

/// Element of the min-plus semiring `Q ∪ {+∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TropNum {
    /// A finite rational value.
    Finite(Rational),
    /// Positive infinity: identity of `min`, absorbing for `+`.
    Infinity,
}

/// Operation selector for [`trop_combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TropOp {
    /// Tropical addition.
    Min,
    /// Tropical multiplication.
    Plus,
}

impl TropNum {
    /// Finite value constructor.
    pub fn finite(q: Rational) -> Self {
        TropNum::Finite(q)
    }

    /// Tropical sum (`min`).
    pub fn min(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical product (`+`), with `∞` absorbing.
    pub fn plus(&self, other: &Self) -> Self {
        match (self, other) {
            (TropNum::Finite(a), TropNum::Finite(b)) => TropNum::Finite(a + b),
            _ => TropNum::Infinity,
        }
    }
}

impl PartialOrd for TropNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropNum::Finite(a), TropNum::Finite(b)) => a.cmp(b),
            (TropNum::Finite(_), TropNum::Infinity) => Ordering::Less,
            (TropNum::Infinity, TropNum::Finite(_)) => Ordering::Greater,
            (TropNum::Infinity, TropNum::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for TropNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropNum::Finite(q) => write!(f, "{q}"),
            TropNum::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for TropNum {
    type Err = MirrorError;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "inf" {
            Ok(TropNum::Infinity)
        } else {
            parse_rational(s).map(TropNum::Finite)
        }
    }
}

impl Serialize for TropNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TropNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Semiring for TropNum {
    fn zero() -> Self {
        TropNum::Infinity
    }
    fn one() -> Self {
        TropNum::Finite(Zero::zero())
    }
    fn add(&self, other: &Self) -> Self {
        self.min(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.plus(other)
    }
    fn is_zero(&self) -> bool {
        matches!(self, TropNum::Infinity)
    }
}

/// Combines two tropical numbers with the selected operation.
pub fn trop_combine(a: &TropNum, b: &TropNum, op: TropOp) -> TropNum {
    match op {
        TropOp::Min => a.min(b),
        TropOp::Plus => a.plus(b),
    }
}

/// Finite min-plus semifield: `add = min`, `mul = +`, `div = −`.
///
/// Evaluating a subtraction-free expression over `MinPlus` is exactly its
/// tropicalization.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinPlus(pub Rational);

impl Semifield for MinPlus {
    fn from_coefficient(_c: &Rational) -> Self {
        MinPlus(Zero::zero())
    }
    fn add(&self, other: &Self) -> Self {
        MinPlus(std::cmp::min(&self.0, &other.0).clone())
    }
    fn mul(&self, other: &Self) -> Self {
        MinPlus(&self.0 + &other.0)
    }
    fn div(&self, other: &Self) -> Self {
        MinPlus(&self.0 - &other.0)
    }
}

// ---------------------------------------------------------------------------
// Positive leading terms
// ---------------------------------------------------------------------------

/// Leading term `coefficient · t^valuation` of a positive Puiseux series.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PosLead {
    valuation: Rational,
    coefficient: Rational,
}

/// Operation selector for [`poslead_combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosLeadOp {
    /// Series addition.
    Add,
    /// Series multiplication.
    Mul,
    /// Series division.
    Div,
}

impl PosLead {
    /// Creates a leading term; the coefficient must be strictly positive.
    pub fn new(valuation: Rational, coefficient: Rational) -> Result<Self> {
        if !coefficient.is_positive() {
            return Err(MirrorError::Domain(format!(
                "PosLead coefficient must be positive, got {coefficient}"
            )));
        }
        Ok(PosLead { valuation, coefficient })
    }

    /// The positive constant `c` (valuation zero).
    pub fn constant(c: Rational) -> Result<Self> {
        Self::new(Zero::zero(), c)
    }

    /// The monomial `t^μ` with unit coefficient.
    pub fn t_pow(mu: Rational) -> Self {
        PosLead { valuation: mu, coefficient: One::one() }
    }

    /// The valuation `Val_K`.
    pub fn valuation(&self) -> &Rational {
        &self.valuation
    }

    /// The positive leading coefficient.
    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    /// Sum: the smaller valuation wins; tied coefficients add.
    pub fn add(&self, other: &Self) -> Self {
        match self.valuation.cmp(&other.valuation) {
            Ordering::Less => self.clone(),
            Ordering::Greater => other.clone(),
            Ordering::Equal => PosLead {
                valuation: self.valuation.clone(),
                coefficient: &self.coefficient + &other.coefficient,
            },
        }
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        PosLead {
            valuation: &self.valuation + &other.valuation,
            coefficient: &self.coefficient * &other.coefficient,
        }
    }

    /// Quotient.
    pub fn div(&self, other: &Self) -> Self {
        PosLead {
            valuation: &self.valuation - &other.valuation,
            coefficient: &self.coefficient / &other.coefficient,
        }
    }
}

impl fmt::Display for PosLead {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.coefficient, self.valuation)
    }
}

impl FromStr for PosLead {
    type Err = MirrorError;
    fn from_str(s: &str) -> Result<Self> {
        let (c, v) = s
            .split_once('@')
            .ok_or_else(|| MirrorError::Parse(format!("expected coeff@valuation, got {s}")))?;
        PosLead::new(parse_rational(v)?, parse_rational(c)?)
    }
}

impl Serialize for PosLead {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PosLead {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Semifield for PosLead {
    fn from_coefficient(c: &Rational) -> Self {
        PosLead { valuation: Zero::zero(), coefficient: c.clone() }
    }
    fn add(&self, other: &Self) -> Self {
        PosLead::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        PosLead::mul(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        PosLead::div(self, other)
    }
}

/// Combines two leading terms with the selected field operation.
pub fn poslead_combine(a: &PosLead, b: &PosLead, op: PosLeadOp) -> PosLead {
    match op {
        PosLeadOp::Add => a.add(b),
        PosLeadOp::Mul => a.mul(b),
        PosLeadOp::Div => a.div(b),
    }
}
