//! Exact scalars: Gaussian rationals a + b·i with arbitrary-precision
//! rational parts.
//!
//! Every field operation is exact; both components are kept reduced with a
//! positive denominator (guaranteed by `BigRational`). The square root of −1
//! is written `i`, so e.g. a primitive fourth root of unity is available
//! exactly.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// The rational `num/den` as a scalar. Panics if `den == 0`.
    pub fn rat(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// The purely imaginary rational `(num/den)·i`. Panics if `den == 0`.
    pub fn rat_i(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True if the imaginary part is zero.
    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// The rational `re² + im²` (zero iff the scalar is zero).
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero; callers must test `is_zero`.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = self.norm();
        Scalar::new(&self.re / &n, -(&self.im / &n))
    }

    /// Integer power (negative exponents invert). Panics on `0^negative`.
    pub fn pow(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `a/b+c/d*i` with zero parts omitted,
    /// whole numbers written without `/1`, and `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", fmt_rational(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", fmt_rational(&self.re), fmt_rational(&-self.im.clone()))
        } else {
            write!(f, "{}+{}*i", fmt_rational(&self.re), fmt_rational(&self.im))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses the canonical form plus the conveniences `i`, `-i`, `a+i`, `a-i`.
    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // Split an interior +/- (never part of a rational, whose sign is leading).
        let split = s
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx);
        let (re_part, im_part): (&str, Option<&str>) = match split {
            Some(idx) if s.ends_with('i') => (&s[..idx], Some(&s[idx..])),
            _ if s.ends_with('i') => ("", Some(s)),
            _ => (s, None),
        };
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_part)?
        };
        let im = match im_part {
            None => BigRational::zero(),
            Some(p) => {
                let body = p.strip_suffix('i').expect("checked suffix");
                let body = body.strip_suffix('*').unwrap_or(body);
                match body {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    other => parse_rational(other)?,
                }
            }
        };
        Ok(Scalar::new(re, im))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $trait::$m(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_on_samples() {
        let samples = [
            Scalar::zero(),
            Scalar::one(),
            Scalar::i(),
            Scalar::rat(3, 2),
            Scalar::new(
                BigRational::new(BigInt::from(-1), BigInt::from(3)),
                BigRational::new(BigInt::from(5), BigInt::from(7)),
            ),
        ];
        for a in &samples {
            for b in &samples {
                assert_eq!(a + b, b + a, "commutative addition");
                assert_eq!(a * b, b * a, "commutative multiplication");
                if !b.is_zero() {
                    assert_eq!(&(&(a / b) * b) - a, Scalar::zero(), "division inverts");
                }
            }
        }
    }

    #[test]
    fn i_squares_to_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        assert_eq!(Scalar::i().pow(4), Scalar::one());
        assert_eq!(Scalar::i().inv(), -Scalar::i());
    }

    #[test]
    fn display_canonical_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_int(-7).to_string(), "-7");
        assert_eq!(Scalar::rat(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::i().to_string(), "1*i");
        assert_eq!((-Scalar::i()).to_string(), "-1*i");
        assert_eq!(
            (&Scalar::rat(1, 2) + &Scalar::rat_i(-2, 3)).to_string(),
            "1/2-2/3*i"
        );
        assert_eq!(
            (&Scalar::from_int(2) + &Scalar::i()).to_string(),
            "2+1*i"
        );
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-5", "3/2", "-3/2", "1*i", "-1*i", "1/2-2/3*i", "2+1*i", "7/3+1/9*i"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s, "round trip {s}");
        }
        // Conveniences normalize.
        assert_eq!("i".parse::<Scalar>().unwrap(), Scalar::i());
        assert_eq!("-i".parse::<Scalar>().unwrap(), -Scalar::i());
        assert_eq!("2+i".parse::<Scalar>().unwrap().to_string(), "2+1*i");
        assert_eq!("2-i".parse::<Scalar>().unwrap().to_string(), "2-1*i");
        assert_eq!("4/2".parse::<Scalar>().unwrap().to_string(), "2");
        assert!("".parse::<Scalar>().is_err());
        assert!("t".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn reduced_normal_form() {
        let v = &Scalar::rat(2, 4) + &Scalar::rat(0, 5);
        assert_eq!(v.re().numer(), &BigInt::from(1));
        assert_eq!(v.re().denom(), &BigInt::from(2));
        let w = Scalar::rat(1, -3);
        assert!(w.re().denom() > &BigInt::from(0), "positive denominator");
        assert_eq!(w.to_string(), "-1/3");
    }
}
