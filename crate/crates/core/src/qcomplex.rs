use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact complex rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QComplex(Complex<BigRational>);

impl QComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        QComplex(Complex::new(re, im))
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// `num / den` on the real axis. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.0.re
    }

    pub fn im(&self) -> &BigRational {
        &self.0.im
    }

    pub fn is_zero(&self) -> bool {
        self.0.re.is_zero() && self.0.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.0.im.is_zero()
    }

    /// `|z|²`, exact.
    pub fn norm_sq(&self) -> BigRational {
        self.0.norm_sqr()
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| QComplex(self.0.inv()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> Complex<f64> {
        Complex::new(
            self.0.re.to_f64().unwrap_or(f64::NAN),
            self.0.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Parses a pair of rationals such as `("3/2", "0")`.
    pub fn parse_pair(re: &str, im: &str) -> Option<Self> {
        Some(Self::new(parse_rational(re)?, parse_rational(im)?))
    }
}

/// Parses `p/q` or an integer, rejecting zero denominators.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        BigInt::from_str(s).ok().map(BigRational::from_integer)
    }
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Ord for QComplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .re
            .cmp(&other.0.re)
            .then_with(|| self.0.im.cmp(&other.0.im))
    }
}

impl PartialOrd for QComplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            return f.write_str(&format_rational(&self.0.re));
        }
        let sign = if self.0.im.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}i",
            format_rational(&self.0.re),
            sign,
            format_rational(&self.0.im.abs())
        )
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&QComplex> for &QComplex {
            type Output = QComplex;
            fn $m(self, rhs: &QComplex) -> QComplex {
                QComplex($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr for QComplex {
            type Output = QComplex;
            fn $m(self, rhs: QComplex) -> QComplex {
                QComplex($tr::$m(self.0, rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex(-self.0)
    }
}

impl Neg for &QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex(-self.0.clone())
    }
}

impl From<BigRational> for QComplex {
    fn from(r: BigRational) -> Self {
        QComplex::real(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = QComplex::ratio(2, 3);
        let b = QComplex::parse_pair("1/3", "1").unwrap();
        assert_eq!((&a + &b).to_string(), "1+1i");
        assert_eq!((&b * &b).to_string(), "-8/9+2/3i");
        assert_eq!((&b / &b), QComplex::one());
        assert_eq!(QComplex::ratio(1, 2).pow(10), QComplex::ratio(1, 1024));
        assert_eq!(QComplex::ratio(3, 2).norm_sq(), BigRational::new(9.into(), 4.into()));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-3/6"), Some(BigRational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("7"), Some(BigRational::from_integer(7.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(QComplex::zero().inv().is_none());
        assert_eq!(QComplex::ratio(2, 1).inv(), Some(QComplex::ratio(1, 2)));
    }
}
