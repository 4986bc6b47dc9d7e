//! Exact complex scalars over the rationals.
//!
//! A [`GScalar`] is a complex number whose real and imaginary parts are
//! arbitrary-precision rationals. Both parts are kept in canonical form
//! (lowest terms, positive denominator), so `==` is exact structural
//! equality and hashing-free deduplication works. There is no floating
//! point anywhere.

use crate::error::Error;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rational = BigRational;

/// Parse a rational in the canonical text form: `p` or `p/q`, decimal
/// digits, optional leading minus on `p` only. `q` must be positive.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    fn parse_int(digits: &str, allow_sign: bool, whole: &str) -> Result<BigInt, Error> {
        let (neg, body) = match digits.strip_prefix('-') {
            Some(rest) if allow_sign => (true, rest),
            Some(_) => return Err(Error::BadRational(whole.to_string())),
            None => (false, digits),
        };
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::BadRational(whole.to_string()));
        }
        let mag: BigInt = body.parse().expect("digit string parses");
        Ok(if neg { -mag } else { mag })
    }

    let mut parts = s.splitn(3, '/');
    let numer = parse_int(parts.next().unwrap_or(""), true, s)?;
    let denom = match parts.next() {
        None => BigInt::one(),
        Some(d) => {
            if parts.next().is_some() {
                return Err(Error::BadRational(s.to_string()));
            }
            let d = parse_int(d, false, s)?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator(s.to_string()));
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: lowest terms, positive denominator, `p` when the
/// denominator is one, otherwise `p/q`. Inverse of [`parse_rational`] on
/// canonical strings.
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawScalar", into = "RawScalar")]
pub struct GScalar {
    re: Rational,
    im: Rational,
}

#[derive(Serialize, Deserialize)]
struct RawScalar {
    re: String,
    im: String,
}

impl TryFrom<RawScalar> for GScalar {
    type Error = Error;
    fn try_from(raw: RawScalar) -> Result<Self, Error> {
        Ok(GScalar::new(parse_rational(&raw.re)?, parse_rational(&raw.im)?))
    }
}

impl From<GScalar> for RawScalar {
    fn from(s: GScalar) -> RawScalar {
        RawScalar {
            re: rational_string(&s.re),
            im: rational_string(&s.im),
        }
    }
}

impl GScalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        GScalar { re, im }
    }

    pub fn zero() -> Self {
        GScalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GScalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GScalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GScalar::new(Rational::from_integer(n.into()), Rational::zero())
    }

    /// Real rational `p/q`. Panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GScalar::new(Rational::new(p.into(), q.into()), Rational::zero())
    }

    /// Gaussian rational `rp/rq + (ip/iq) i`. Panics on zero denominators.
    pub fn from_parts(rp: i64, rq: i64, ip: i64, iq: i64) -> Self {
        assert!(rq != 0 && iq != 0, "zero denominator");
        GScalar::new(Rational::new(rp.into(), rq.into()), Rational::new(ip.into(), iq.into()))
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        GScalar::new(self.re.clone(), -self.im.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `|z|^2 = re^2 + im^2`, a rational.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero scalar");
        GScalar::new(&self.re / &n, -&self.im / &n)
    }
}

impl Add for &GScalar {
    type Output = GScalar;
    fn add(self, rhs: &GScalar) -> GScalar {
        GScalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GScalar {
    type Output = GScalar;
    fn sub(self, rhs: &GScalar) -> GScalar {
        GScalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GScalar {
    type Output = GScalar;
    fn mul(self, rhs: &GScalar) -> GScalar {
        GScalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GScalar {
    type Output = GScalar;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: &GScalar) -> GScalar {
        self * &rhs.inv()
    }
}

impl Neg for &GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        GScalar::new(-self.re.clone(), -self.im.clone())
    }
}

// Owned/borrowed operator forwarding.
macro_rules! forward_scalar_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for GScalar {
            type Output = GScalar;
            fn $method(self, rhs: GScalar) -> GScalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&GScalar> for GScalar {
            type Output = GScalar;
            fn $method(self, rhs: &GScalar) -> GScalar {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<GScalar> for &GScalar {
            type Output = GScalar;
            fn $method(self, rhs: GScalar) -> GScalar {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}
forward_scalar_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GScalar {
    type Output = GScalar;
    fn neg(self) -> GScalar {
        -&self
    }
}

impl fmt::Display for GScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rational_string(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", rational_string(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}{}i", rational_string(&self.re), rational_string(&self.im))
        } else {
            write!(f, "{}+{}i", rational_string(&self.re), rational_string(&self.im))
        }
    }
}
