//! Exact scalar arithmetic: big integers, reduced rationals, and values of
//! the form sqrt(r) for rational r, compared without floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(int(p), int(q))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

pub fn rat_of(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// 2^k as a big integer, k small.
pub fn pow2(k: usize) -> Int {
    Int::one() << k
}

/// 3^k as a big integer.
pub fn pow3(k: usize) -> Int {
    num_traits::pow::pow(int(3), k)
}

/// Floor of sqrt(x) for a nonnegative rational x.
///
/// Uses floor(sqrt(x)) = isqrt(floor(x)), which holds because consecutive
/// integer squares bracket x exactly when they bracket floor(x).
pub fn sqrt_floor(x: &Rat) -> Int {
    assert!(!x.is_negative(), "sqrt of negative rational");
    x.floor().to_integer().sqrt()
}

/// Ceiling of sqrt(x) for a nonnegative rational x.
pub fn sqrt_ceil(x: &Rat) -> Int {
    let f = sqrt_floor(x);
    if &rat_of(&f) * &rat_of(&f) == *x {
        f
    } else {
        f + 1
    }
}

/// Compares a rational r against sqrt(d), for d >= 0, exactly.
pub fn cmp_rat_sqrt(r: &Rat, d: &Rat) -> Ordering {
    debug_assert!(!d.is_negative());
    if r.is_negative() {
        return Ordering::Less;
    }
    (r * r).cmp(d)
}

/// floor(c + sqrt(d)) for rational c and rational d >= 0.
pub fn floor_plus_sqrt(c: &Rat, d: &Rat) -> Int {
    let mut q = c.floor().to_integer() + sqrt_floor(d) - 2;
    loop {
        let next: Int = &q + 1;
        let r = Rat::from_integer(next.clone()) - c;
        if cmp_rat_sqrt(&r, d) != Ordering::Greater {
            q = next;
        } else {
            return q;
        }
    }
}

/// floor(c - sqrt(d)) for rational c and rational d >= 0.
pub fn floor_minus_sqrt(c: &Rat, d: &Rat) -> Int {
    let mut q = c.floor().to_integer() - sqrt_floor(d) - 3;
    loop {
        let next: Int = &q + 1;
        let r = c - Rat::from_integer(next.clone());
        if cmp_rat_sqrt(&r, d) != Ordering::Less {
            q = next;
        } else {
            return q;
        }
    }
}

/// ceil(c + sqrt(d)) for rational c and rational d >= 0.
pub fn ceil_plus_sqrt(c: &Rat, d: &Rat) -> Int {
    -floor_minus_sqrt(&-c, d)
}

/// ceil(c - sqrt(d)) for rational c and rational d >= 0.
pub fn ceil_minus_sqrt(c: &Rat, d: &Rat) -> Int {
    -floor_plus_sqrt(&-c, d)
}

/// Exact square root of a rational if it is a perfect square.
pub fn sqrt_exact(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let sn = x.numer().sqrt();
    let sd = x.denom().sqrt();
    if &sn * &sn == *x.numer() && &sd * &sd == *x.denom() {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Parses "p/q" or "p" into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: Int = p
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let q: Int = q
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(p, q))
}

/// Formats a rational as "p/q", or "p" when the denominator is one.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// An exact nonnegative real stored as the square root of a rational.
///
/// Rational values q are stored with radicand q^2; all comparisons happen
/// on radicands, which is valid because both operands are nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeValue {
    radicand: Rat,
}

impl GaugeValue {
    pub fn from_radicand(radicand: Rat) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        GaugeValue { radicand }
    }

    pub fn from_rational(q: &Rat) -> Self {
        assert!(!q.is_negative(), "gauge values are nonnegative");
        GaugeValue { radicand: q * q }
    }

    pub fn zero() -> Self {
        GaugeValue {
            radicand: Rat::zero(),
        }
    }

    pub fn one() -> Self {
        GaugeValue {
            radicand: Rat::one(),
        }
    }

    pub fn radicand(&self) -> &Rat {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.radicand.is_zero()
    }

    /// Exact rational value, when the radicand is a perfect square.
    pub fn as_rational(&self) -> Option<Rat> {
        sqrt_exact(&self.radicand)
    }

    /// Compares sqrt(radicand) against a rational, exactly.
    pub fn cmp_rational(&self, q: &Rat) -> Ordering {
        if q.is_negative() {
            return Ordering::Greater;
        }
        self.radicand.cmp(&(q * q))
    }

    /// The value scaled by a nonnegative rational factor.
    pub fn scale(&self, t: &Rat) -> Self {
        assert!(!t.is_negative());
        GaugeValue {
            radicand: &self.radicand * t * t,
        }
    }

    /// floor(a / value) for positive rational a and nonzero value.
    ///
    /// a/sqrt(r) = sqrt(a^2/r), so integer bracketing of the radicand
    /// decides the floor exactly.
    pub fn div_into_floor(&self, a: &Rat) -> Int {
        assert!(a.is_positive() && !self.is_zero());
        sqrt_floor(&(a * a / &self.radicand))
    }

    /// ceil(a / value) for positive rational a and nonzero value.
    pub fn div_into_ceil(&self, a: &Rat) -> Int {
        assert!(a.is_positive() && !self.is_zero());
        sqrt_ceil(&(a * a / &self.radicand))
    }
}

impl PartialOrd for GaugeValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GaugeValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.radicand.cmp(&other.radicand)
    }
}

impl fmt::Display for GaugeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{}", format_rat(&q)),
            None => write!(f, "sqrt({})", format_rat(&self.radicand)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_floor_brackets() {
        assert_eq!(sqrt_floor(&rat(2, 1)), int(1));
        assert_eq!(sqrt_floor(&rat(4, 1)), int(2));
        assert_eq!(sqrt_floor(&rat(9, 4)), int(1));
        assert_eq!(sqrt_floor(&rat(0, 1)), int(0));
        assert_eq!(sqrt_ceil(&rat(2, 1)), int(2));
        assert_eq!(sqrt_ceil(&rat(4, 1)), int(2));
        assert_eq!(sqrt_ceil(&rat(9, 4)), int(2));
        // 9/4 is a perfect square of 3/2, so ceil(sqrt) over integers is 2.
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
    }

    #[test]
    fn gauge_comparisons() {
        let g = GaugeValue::from_radicand(rat(1, 2)); // sqrt(1/2)
        assert_eq!(g.cmp_rational(&rat(1, 1)), Ordering::Less);
        assert_eq!(g.cmp_rational(&rat(1, 2)), Ordering::Greater);
        assert_eq!(g.cmp_rational(&rat(-3, 1)), Ordering::Greater);
        // 2 / sqrt(1/2) = sqrt(8), between 2 and 3.
        assert_eq!(g.div_into_floor(&rat(2, 1)), int(2));
        assert_eq!(g.div_into_ceil(&rat(2, 1)), int(3));
        let h = GaugeValue::from_rational(&rat(1, 3));
        assert_eq!(h.div_into_floor(&rat(2, 1)), int(6));
        assert_eq!(h.div_into_ceil(&rat(2, 1)), int(6));
        assert!(GaugeValue::from_rational(&rat(1, 3)) < GaugeValue::from_radicand(rat(1, 2)));
    }

    #[test]
    fn sqrt_shifted_floors() {
        // floor/ceil of 1/2 +- sqrt(2): sqrt(2) = 1.414..
        assert_eq!(floor_plus_sqrt(&rat(1, 2), &rat(2, 1)), int(1));
        assert_eq!(ceil_plus_sqrt(&rat(1, 2), &rat(2, 1)), int(2));
        assert_eq!(floor_minus_sqrt(&rat(1, 2), &rat(2, 1)), int(-1));
        assert_eq!(ceil_minus_sqrt(&rat(1, 2), &rat(2, 1)), int(0));
        // Exact hits: 3 +- sqrt(4).
        assert_eq!(floor_plus_sqrt(&rat(3, 1), &rat(4, 1)), int(5));
        assert_eq!(ceil_plus_sqrt(&rat(3, 1), &rat(4, 1)), int(5));
        assert_eq!(floor_minus_sqrt(&rat(3, 1), &rat(4, 1)), int(1));
        assert_eq!(ceil_minus_sqrt(&rat(3, 1), &rat(4, 1)), int(1));
        // Zero radicand.
        assert_eq!(floor_plus_sqrt(&rat(-7, 2), &rat(0, 1)), int(-4));
        assert_eq!(ceil_plus_sqrt(&rat(-7, 2), &rat(0, 1)), int(-3));
    }

    #[test]
    fn rational_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(format_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
