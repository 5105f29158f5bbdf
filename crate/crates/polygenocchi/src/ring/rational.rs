//! Arbitrary-precision rationals.
//!
//! Canonical form invariant: always fully reduced, denominator positive.
//! The text grammar is `[+-]?digits` or `[+-]?digits/digits` with a positive
//! denominator; printing uses the same grammar (`"p"` when the denominator is
//! one, `"p/q"` otherwise), so parse . print is the identity on canonical text.

use crate::error::Error;
use crate::ring::Coeff;
use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Rat {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Rat {
        Rat(BigRational::from_integer(n))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Exact inverse; `None` for zero.
    pub fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    /// Integer power, negative exponents allowed for nonzero values.
    ///
    /// Panics when raising zero to a negative power.
    pub fn pow(&self, exp: i64) -> Rat {
        if exp == 0 {
            return Rat::one();
        }
        let base = if exp < 0 {
            self.inv().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let mut acc = Rat::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    // Canonical text is the most readable form for Debug too.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat, Error> {
        let bad = || Error::InvalidRational(s.to_string());
        let (sign, body) = match s.as_bytes().first() {
            Some(b'+') => (Sign::Plus, &s[1..]),
            Some(b'-') => (Sign::Minus, &s[1..]),
            _ => (Sign::Plus, s),
        };
        let (num_str, den_str) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(num_str) {
            return Err(bad());
        }
        let mut numer: BigInt = num_str.parse().map_err(|_| bad())?;
        if sign == Sign::Minus {
            numer = -numer;
        }
        let denom: BigInt = match den_str {
            Some(d) => {
                if !all_digits(d) {
                    return Err(bad());
                }
                let denom: BigInt = d.parse().map_err(|_| bad())?;
                if denom.is_zero() {
                    return Err(bad());
                }
                denom
            }
            None => BigInt::one(),
        };
        Ok(Rat(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl Coeff for Rat {
    fn zero() -> Rat {
        Rat::zero()
    }
    fn one() -> Rat {
        Rat::one()
    }
    fn add(&self, other: &Rat) -> Rat {
        self + other
    }
    fn sub(&self, other: &Rat) -> Rat {
        self - other
    }
    fn mul(&self, other: &Rat) -> Rat {
        self * other
    }
    fn neg(&self) -> Rat {
        -self
    }
    fn invert(&self) -> Option<Rat> {
        self.inv()
    }
    fn from_rat(r: &Rat) -> Rat {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

/// n! as a rational.
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_bigint(acc)
}

/// Integer binomial coefficient C(n, k) as a rational; zero when k > n.
pub fn binom_int(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rat(BigRational::new(num, den))
}

/// Generalized binomial coefficient `binom(beta, n)` for rational `beta`:
/// `beta (beta-1) ... (beta-n+1) / n!`, with `binom(beta, 0) = 1`.
pub fn rat_binomial(beta: &Rat, n: usize) -> Rat {
    let mut prod = Rat::one();
    for i in 0..n {
        prod = &prod * &(beta - &Rat::from_int(i as i64));
    }
    &prod * &factorial(n).inv().expect("factorial is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Integer;
    use proptest::prelude::*;

    fn canonical(r: &Rat) -> bool {
        r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["-3/7", "4", "0", "1/2", "-1", "22/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        // Non-canonical text parses to canonical form.
        assert_eq!("4/6".parse::<Rat>().unwrap().to_string(), "2/3");
        assert_eq!("+3".parse::<Rat>().unwrap().to_string(), "3");
        assert_eq!("-0".parse::<Rat>().unwrap().to_string(), "0");
    }

    #[test]
    fn parse_rejects_bad_text() {
        for s in ["", "/", "3/", "/4", "3/-4", "1.5", "a", "3 / 4", "1/0", "--2"] {
            assert!(s.parse::<Rat>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn binomial_examples() {
        // (1/2 choose 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(rat_binomial(&Rat::new(1, 2), 2), Rat::new(-1, 8));
        // (beta choose 0) = 1
        assert_eq!(rat_binomial(&Rat::new(-7, 3), 0), Rat::one());
        // Integer beta below n hits a zero factor.
        assert_eq!(rat_binomial(&Rat::from_int(3), 5), Rat::zero());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        assert_eq!(Rat::new(2, 3).pow(-2), Rat::new(9, 4));
        assert_eq!(Rat::new(5, 1).pow(0), Rat::one());
        assert_eq!(Rat::new(-2, 1).pow(3), Rat::from_int(-8));
    }

    #[test]
    fn factorial_and_integer_binomial() {
        assert_eq!(factorial(0), Rat::one());
        assert_eq!(factorial(6), Rat::from_int(720));
        assert_eq!(binom_int(10, 3), Rat::from_int(120));
        assert_eq!(binom_int(3, 5), Rat::zero());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-40i64..=40, 1i64..=24).prop_map(|(n, d)| Rat::new(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        // Distributivity over 1000 random triples, and canonical form after
        // every operation.
        #[test]
        fn distributive_and_canonical(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            let left = &a * &(&b + &c);
            let right = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(&left, &right);
            prop_assert!(canonical(&left));
            prop_assert!(canonical(&(&a - &b)));
            prop_assert!(canonical(&(-&c)));
        }
    }

    proptest! {
        #[test]
        fn display_round_trips(a in arb_rat()) {
            let s = a.to_string();
            let back: Rat = s.parse().unwrap();
            prop_assert_eq!(back, a);
        }

        // rat_binomial(beta, n) * n! equals the plain falling product.
        #[test]
        fn binomial_times_factorial(n in -30i64..=30, d in 1i64..=12, k in 0usize..=10) {
            let beta = Rat::new(n, d);
            let mut prod = Rat::one();
            for i in 0..k {
                prod = &prod * &(&beta - &Rat::from_int(i as i64));
            }
            prop_assert_eq!(&rat_binomial(&beta, k) * &factorial(k), prod);
        }
    }
}
