use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// A Gaussian rational `re + im*i` with exact, fully reduced components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// `i^k` for any (possibly negative) integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
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

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared absolute value `re^2 + im^2` (a nonnegative rational).
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussRat {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        let inv = rhs.inv().expect("division by zero GaussRat");
        self * &inv
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl GaussRat {
    /// Render without outer parentheses: `2`, `-1/2`, `i`, `-i`, `2*i`, `1+i`, `1-2/3*i`.
    pub fn render(&self) -> String {
        if self.im.is_zero() {
            return fmt_rational(&self.re);
        }
        let im_part = |im: &BigRational| -> String {
            let a = im.abs();
            if a.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", fmt_rational(&a))
            }
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                format!("-{}", im_part(&self.im))
            } else {
                im_part(&self.im)
            }
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            format!("{}{}{}", fmt_rational(&self.re), sign, im_part(&self.im))
        }
    }

    /// True when `render()` is a bare nonnegative integer (safe to print unparenthesized).
    pub fn is_plain(&self) -> bool {
        self.im.is_zero() && self.re.denom().is_one() && !self.re.is_negative()
    }

    /// True when the value is exactly `i`.
    pub fn is_i(&self) -> bool {
        self.re.is_zero() && self.im.is_one()
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_field_ops() {
        let z = &GaussRat::from_int(1) + &GaussRat::i();
        let w = &z * &z;
        assert_eq!(w, &GaussRat::from_int(2) * &GaussRat::i());
        let back = &w / &z;
        assert_eq!(back, z);
    }

    #[test]
    fn i_powers_cycle() {
        assert_eq!(GaussRat::i_pow(0), GaussRat::one());
        assert_eq!(GaussRat::i_pow(2), -GaussRat::one());
        assert_eq!(GaussRat::i_pow(-1), -GaussRat::i());
        assert_eq!(GaussRat::i_pow(5), GaussRat::i());
    }

    #[test]
    fn render_forms() {
        assert_eq!(GaussRat::from_int(-3).render(), "-3");
        assert_eq!(GaussRat::from_frac(1, 2).render(), "1/2");
        assert_eq!(GaussRat::i().render(), "i");
        assert_eq!((-GaussRat::i()).render(), "-i");
        let z = &GaussRat::from_int(1) - &GaussRat::from_frac(2, 3).mul_i();
        assert_eq!(z.render(), "1-2/3*i");
    }
}

impl GaussRat {
    /// Multiply by `i`.
    pub fn mul_i(&self) -> Self {
        GaussRat {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }
}
