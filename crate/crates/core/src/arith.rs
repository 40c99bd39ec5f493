//! Exact scalars: rationals and single-radical surds `q·√r`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul, Neg};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// A point (or vector) with exact rational coordinates.
pub type Point = Vec<Rational>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn half() -> Rational {
    rat(1, 2)
}

pub fn point(coords: &[(i64, i64)]) -> Point {
    coords.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseError::Rational(text.to_string()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|_| ParseError::Rational(text.to_string()))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| ParseError::Rational(text.to_string()))?;
        if d.is_zero() {
            return Err(ParseError::Rational(text.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
            || (whole_digits.is_empty() && frac.is_empty())
        {
            return Err(ParseError::Rational(text.to_string()));
        }
        let digits = format!("{whole_digits}{frac}");
        let numer: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits
                .parse()
                .map_err(|_| ParseError::Rational(text.to_string()))?
        };
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    let n: BigInt = s.parse().map_err(|_| ParseError::Rational(text.to_string()))?;
    Ok(Rational::from_integer(n))
}

pub fn rational_to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 only fails on overflow of both parts; fall back to
        // a scaled division.
        let n = value.numer().to_f64().unwrap_or(f64::NAN);
        let d = value.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Splits `n > 0` as `outside² · inside` with `inside` squarefree.
///
/// Trial division runs up to `TRIAL_LIMIT`; the leftover cofactor is then
/// either 1, a prime, a product of two primes or a perfect square whenever it
/// is below `TRIAL_LIMIT³`, so the split is exact for every radicand below
/// 10¹⁵.
fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    const TRIAL_LIMIT: u64 = 100_000;
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut inside = BigInt::one();
    let mut d: u64 = 2;
    while d <= TRIAL_LIMIT {
        let big_d = BigInt::from(d);
        if &big_d * &big_d > rest {
            break;
        }
        let square = &big_d * &big_d;
        while (&rest % &square).is_zero() {
            rest /= &square;
            outside *= &big_d;
        }
        if (&rest % &big_d).is_zero() {
            rest /= &big_d;
            inside *= &big_d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        outside *= root;
    } else {
        inside *= rest;
    }
    (outside, inside)
}

/// Exact number `coefficient · √radicand` with a squarefree radicand.
///
/// A radicand of 1 represents a plain rational. Zero is stored with radicand 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdValue {
    coefficient: Rational,
    radicand: BigInt,
}

impl SurdValue {
    pub fn new(coefficient: Rational, radicand: BigInt) -> Self {
        assert!(radicand.is_positive(), "surd radicand must be positive");
        if coefficient.is_zero() {
            return Self::zero();
        }
        let (outside, inside) = squarefree_split(&radicand);
        SurdValue {
            coefficient: coefficient * Rational::from_integer(outside),
            radicand: inside,
        }
    }

    pub fn zero() -> Self {
        SurdValue {
            coefficient: Rational::zero(),
            radicand: BigInt::one(),
        }
    }

    pub fn from_rational(value: Rational) -> Self {
        SurdValue {
            coefficient: value,
            radicand: BigInt::one(),
        }
    }

    /// `√value` for a non-negative rational.
    pub fn sqrt(value: &Rational) -> Self {
        assert!(!value.is_negative(), "square root of a negative rational");
        if value.is_zero() {
            return Self::zero();
        }
        // √(p/q) = √(p·q) / q
        let radicand = value.numer() * value.denom();
        Self::new(Rational::new(BigInt::one(), value.denom().clone()), radicand)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.coefficient)
    }

    pub fn abs(&self) -> Self {
        SurdValue {
            coefficient: self.coefficient.abs(),
            radicand: self.radicand.clone(),
        }
    }

    /// The exact square `q²·r`.
    pub fn square(&self) -> Rational {
        &self.coefficient * &self.coefficient * Rational::from_integer(self.radicand.clone())
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coefficient) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Sum of two surds; defined when the radicands agree or one side is zero.
    pub fn checked_add(&self, other: &SurdValue) -> Option<SurdValue> {
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(other.clone());
        }
        if self.radicand != other.radicand {
            return None;
        }
        let coefficient = &self.coefficient + &other.coefficient;
        Some(if coefficient.is_zero() {
            Self::zero()
        } else {
            SurdValue {
                coefficient,
                radicand: self.radicand.clone(),
            }
        })
    }

    pub fn scale(&self, factor: &Rational) -> SurdValue {
        if factor.is_zero() {
            return Self::zero();
        }
        SurdValue {
            coefficient: &self.coefficient * factor,
            radicand: self.radicand.clone(),
        }
    }

    fn sign(&self) -> Sign {
        self.coefficient.numer().sign()
    }
}

impl Mul for &SurdValue {
    type Output = SurdValue;

    fn mul(self, rhs: &SurdValue) -> SurdValue {
        SurdValue::new(
            &self.coefficient * &rhs.coefficient,
            &self.radicand * &rhs.radicand,
        )
    }
}

impl Mul for SurdValue {
    type Output = SurdValue;

    fn mul(self, rhs: SurdValue) -> SurdValue {
        &self * &rhs
    }
}

impl Div for &SurdValue {
    type Output = SurdValue;

    /// Panics on division by zero.
    fn div(self, rhs: &SurdValue) -> SurdValue {
        assert!(!rhs.is_zero(), "division by a zero surd");
        // a√r / (b√s) = (a / (b s)) √(r s)
        let denom = &rhs.coefficient * Rational::from_integer(rhs.radicand.clone());
        SurdValue::new(&self.coefficient / denom, &self.radicand * &rhs.radicand)
    }
}

impl Neg for SurdValue {
    type Output = SurdValue;

    fn neg(self) -> SurdValue {
        SurdValue {
            coefficient: -self.coefficient,
            radicand: self.radicand,
        }
    }
}

impl From<Rational> for SurdValue {
    fn from(value: Rational) -> Self {
        SurdValue::from_rational(value)
    }
}

impl PartialOrd for SurdValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SurdValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.sign(), other.sign());
        let rank = |s: Sign| match s {
            Sign::Minus => 0,
            Sign::NoSign => 1,
            Sign::Plus => 2,
        };
        match rank(a).cmp(&rank(b)) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        let by_square = self.square().cmp(&other.square());
        match a {
            Sign::Minus => by_square.reverse(),
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => by_square,
        }
    }
}

impl fmt::Display for SurdValue {
    /// `q` for rationals, `q*sqrt(r)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.coefficient)
        } else {
            write!(f, "{}*sqrt({})", self.coefficient, self.radicand)
        }
    }
}

impl FromStr for SurdValue {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Surd(s.to_string());
        match s.trim().split_once("*sqrt(") {
            None => parse_rational(s)
                .map(SurdValue::from_rational)
                .map_err(|_| bad()),
            Some((coeff, rest)) => {
                let radicand = rest.strip_suffix(')').ok_or_else(bad)?;
                let coefficient = parse_rational(coeff).map_err(|_| bad())?;
                let radicand: BigInt = radicand.trim().parse().map_err(|_| bad())?;
                if !radicand.is_positive() {
                    return Err(bad());
                }
                Ok(SurdValue::new(coefficient, radicand))
            }
        }
    }
}

pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_reduction() {
        let s = SurdValue::new(int(1), BigInt::from(72));
        assert_eq!(s.coefficient(), &int(6));
        assert_eq!(s.radicand(), &BigInt::from(2));
        let big = BigInt::from(99_991u64) * BigInt::from(99_991u64) * BigInt::from(3);
        let s = SurdValue::new(int(1), big);
        assert_eq!(s.radicand(), &BigInt::from(3));
    }

    #[test]
    fn sqrt_of_rational() {
        let s = SurdValue::sqrt(&rat(11, 9));
        assert_eq!(s.to_string(), "1/3*sqrt(11)");
        assert_eq!(SurdValue::sqrt(&rat(16, 9)).to_string(), "4/3");
        assert!(SurdValue::sqrt(&int(0)).is_zero());
    }

    #[test]
    fn ordering_uses_exact_squares() {
        let sqrt2 = SurdValue::sqrt(&int(2));
        assert!(SurdValue::from(rat(4, 3)) < sqrt2);
        assert!(SurdValue::from(rat(142, 100)) > sqrt2);
        assert!(-sqrt2.clone() < SurdValue::zero());
        assert!(-sqrt2.clone() < -SurdValue::from(int(1)));
    }

    #[test]
    fn display_parse_round_trip() {
        for text in ["4/3", "1/3*sqrt(11)", "-2*sqrt(7)", "0"] {
            let s: SurdValue = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert!("1*sqrt(-2)".parse::<SurdValue>().is_err());
    }

    #[test]
    fn addition_requires_common_radicand() {
        let a = SurdValue::sqrt(&int(3));
        let b = SurdValue::sqrt(&int(12));
        assert_eq!(a.checked_add(&b).unwrap().to_string(), "3*sqrt(3)");
        assert!(a.checked_add(&SurdValue::sqrt(&int(2))).is_none());
    }

    #[test]
    fn multiplication_and_division() {
        let a = SurdValue::sqrt(&int(6));
        let b = SurdValue::sqrt(&int(3));
        assert_eq!((&a * &b).to_string(), "3*sqrt(2)");
        assert_eq!((&a / &b).to_string(), "1*sqrt(2)");
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }
}
