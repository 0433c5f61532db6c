use std::fmt;

use num::integer::lcm;
use num::rational::Ratio;
use num::Zero;

use super::gauss::GaussRat;
use super::laurent::{dense_divrem, dense_gcd, dense_is_zero, QExp, QLaurent};
use crate::error::{Error, Result};

/// An element of the field Q(i)(q^(1/D)): a ratio of Laurent polynomials kept
/// in canonical form, so equality is plain structural comparison.
///
/// Canonical form: the denominator is an honest polynomial in `q^(1/D)` with a
/// nonzero constant term and leading coefficient 1, and shares no factor with
/// the numerator. The numerator absorbs all `q`-power shifts. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq)]
pub struct QScalar {
    num: QLaurent,
    den: QLaurent,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: QLaurent::zero(),
            den: QLaurent::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: QLaurent::one(),
            den: QLaurent::one(),
        }
    }

    pub fn from_laurent(num: QLaurent) -> Self {
        QScalar {
            num,
            den: QLaurent::one(),
        }
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::from_laurent(QLaurent::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRat::from_int(n))
    }

    pub fn i() -> Self {
        Self::constant(GaussRat::i())
    }

    /// `q^exp` for a rational exponent.
    pub fn q_pow(exp: QExp) -> Self {
        Self::from_laurent(QLaurent::q_pow(exp))
    }

    pub fn ratio(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn num(&self) -> &QLaurent {
        &self.num
    }

    pub fn den(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial (trivial denominator).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn reduced(num: QLaurent, den: QLaurent) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QScalar {
                num,
                den: QLaurent::one(),
            };
        }
        let scale = lcm(num.exp_denominator(), den.exp_denominator());
        let (on, pn) = num.to_dense(scale);
        let (od, pd) = den.to_dense(scale);
        // Try exact division first: most ratios met in practice are polynomial.
        let (quot, rem) = dense_divrem(&pn, &pd);
        if dense_is_zero(&rem) {
            return QScalar {
                num: QLaurent::from_dense(on - od, &quot, scale),
                den: QLaurent::one(),
            };
        }
        let g = dense_gcd(&pn, &pd);
        let (pn2, r1) = dense_divrem(&pn, &g);
        debug_assert!(dense_is_zero(&r1));
        let (pd2, r2) = dense_divrem(&pd, &g);
        debug_assert!(dense_is_zero(&r2));
        // make the denominator monic in its highest power
        let lead = pd2.last().unwrap().clone();
        let inv = &GaussRat::one() / &lead;
        let num_out = QLaurent::from_dense(on - od, &pn2, scale).scale(&inv);
        let den_out = QLaurent::from_dense(0, &pd2, scale).scale(&inv);
        QScalar {
            num: num_out,
            den: den_out,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar {
                num: self.num.add(&rhs.num),
                den: QLaurent::one(),
            };
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::reduced(num, den)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar {
                num: self.num.mul(&rhs.num),
                den: QLaurent::one(),
            };
        }
        Self::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().div(self)
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QScalar {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one());
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Order of vanishing at `q = infinity`, measured in powers of `q^(-1)`;
    /// `None` encodes `+infinity` (the zero scalar).
    pub fn valuation_at_infinity(&self) -> InfinityValuation {
        if self.is_zero() {
            return InfinityValuation::infinite();
        }
        let dn = self.num.max_exp().unwrap();
        let dd = self.den.max_exp().unwrap();
        InfinityValuation::finite(dd - dn)
    }

    /// Membership in the local ring of functions regular at `q = infinity`.
    pub fn regular_at_infinity(&self) -> bool {
        self.valuation_at_infinity().is_nonnegative()
    }

    /// Value at `q = infinity` (the degree-zero coefficient of the expansion
    /// in `q^(-1/D)`); errors when the scalar has a pole there.
    pub fn limit_at_infinity(&self) -> Result<GaussRat> {
        let val = self.valuation_at_infinity();
        if !val.is_nonnegative() {
            return Err(Error::NotRegularAtInfinity(self.to_string()));
        }
        if val.is_positive() {
            return Ok(GaussRat::zero());
        }
        let ln = self.num.leading_coeff().unwrap();
        let ld = self.den.leading_coeff().unwrap();
        Ok(ln / ld)
    }
}

/// Valuation at `q = infinity`: an element of (1/D)Z together with +infinity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InfinityValuation(Option<QExp>);

impl InfinityValuation {
    pub fn infinite() -> Self {
        InfinityValuation(None)
    }

    pub fn finite(v: QExp) -> Self {
        InfinityValuation(Some(v))
    }

    pub fn is_infinite(&self) -> bool {
        self.0.is_none()
    }

    pub fn value(&self) -> Option<QExp> {
        self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        match self.0 {
            None => true,
            Some(v) => v >= QExp::zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self.0 {
            None => true,
            Some(v) => v > QExp::zero(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        match (self.0, rhs.0) {
            (Some(a), Some(b)) => Self::finite(a + b),
            _ => Self::infinite(),
        }
    }

    pub fn min(&self, rhs: &Self) -> Self {
        match (self.0, rhs.0) {
            (Some(a), Some(b)) => Self::finite(a.min(b)),
            (Some(a), None) => Self::finite(a),
            (None, Some(b)) => Self::finite(b),
            (None, None) => Self::infinite(),
        }
    }
}

impl fmt::Display for InfinityValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "+inf"),
            Some(v) => {
                if v.denom() == &1 {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
        }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::render_scalar(self))
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::render_scalar(self))
    }
}

/// The quantum integer `[n] = (q^n - q^-n) / (q - q^-1)` in `q^d` (so the
/// `q_i`-integer for `d = d_i`); `[n]` with `d = 1` for the plain one.
pub fn quantum_integer(n: i64, d: i64) -> QScalar {
    use std::cmp::Ordering;
    match n.cmp(&0) {
        Ordering::Equal => QScalar::zero(),
        Ordering::Less => quantum_integer(-n, d).neg(),
        Ordering::Greater => {
            let mut p = QLaurent::zero();
            for k in 0..n {
                p = p.add(&QLaurent::q_pow(Ratio::from_integer((n - 1 - 2 * k) * d)));
            }
            QScalar::from_laurent(p)
        }
    }
}

/// `[n]! = [n][n-1]...[2]` in `q^d`.
pub fn quantum_factorial(n: i64, d: i64) -> QScalar {
    assert!(n >= 0, "quantum factorial needs n >= 0");
    let mut out = QScalar::one();
    for k in 2..=n {
        out = out.mul(&quantum_integer(k, d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::laurent::qexp;

    fn q() -> QScalar {
        QScalar::q_pow(QExp::from_integer(1))
    }

    #[test]
    fn spec_arith_examples() {
        // (q + q^-1) * q = q^2 + 1
        let lhs = q().add(&QScalar::q_pow(qexp(-1, 1))).mul(&q());
        let rhs = QScalar::q_pow(qexp(2, 1)).add(&QScalar::one());
        assert_eq!(lhs, rhs);

        // (q^2 - 1) / (q - q^-1) = q
        let a = QScalar::q_pow(qexp(2, 1)).sub(&QScalar::one());
        let b = q().sub(&QScalar::q_pow(qexp(-1, 1)));
        assert_eq!(a.div(&b).unwrap(), q());

        // q^(3/4) * q^(3/4) * q^(1/2) * q^(-2) = 1
        let p = QScalar::q_pow(qexp(3, 4))
            .mul(&QScalar::q_pow(qexp(3, 4)))
            .mul(&QScalar::q_pow(qexp(1, 2)))
            .mul(&QScalar::q_pow(qexp(-2, 1)));
        assert!(p.is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(q().div(&QScalar::zero()).is_err());
        assert!(QScalar::zero().inv().is_err());
    }

    #[test]
    fn quantum_integers() {
        assert!(quantum_integer(1, 1).is_one());
        // [2] = q + q^-1
        assert_eq!(
            quantum_integer(2, 1),
            q().add(&QScalar::q_pow(qexp(-1, 1)))
        );
        // [3] = q^2 + 1 + q^-2, cross-checked against the defining ratio
        let expect = QScalar::q_pow(qexp(2, 1))
            .add(&QScalar::one())
            .add(&QScalar::q_pow(qexp(-2, 1)));
        assert_eq!(quantum_integer(3, 1), expect);
        let num = QScalar::q_pow(qexp(3, 1)).sub(&QScalar::q_pow(qexp(-3, 1)));
        let den = q().sub(&QScalar::q_pow(qexp(-1, 1)));
        assert_eq!(num.div(&den).unwrap(), expect);
        // [2] in q_i = q^3 (the G2 long root scale)
        assert_eq!(
            quantum_integer(2, 3),
            QScalar::q_pow(qexp(3, 1)).add(&QScalar::q_pow(qexp(-3, 1)))
        );
        // [-n] = -[n]
        assert_eq!(quantum_integer(-2, 1), quantum_integer(2, 1).neg());
    }

    #[test]
    fn quantum_factorials() {
        assert!(quantum_factorial(0, 1).is_one());
        assert!(quantum_factorial(1, 1).is_one());
        assert_eq!(
            quantum_factorial(3, 1),
            quantum_integer(3, 1).mul(&quantum_integer(2, 1))
        );
    }

    #[test]
    fn valuation_and_limits() {
        // q^-1: regular with limit 0
        let a = QScalar::q_pow(qexp(-1, 1));
        assert!(a.regular_at_infinity());
        assert_eq!(a.limit_at_infinity().unwrap(), GaussRat::zero());

        // (1 - q^2)/(1 + q^2): regular with limit -1
        let num = QScalar::one().sub(&QScalar::q_pow(qexp(2, 1)));
        let den = QScalar::one().add(&QScalar::q_pow(qexp(2, 1)));
        let x = num.div(&den).unwrap();
        assert!(x.regular_at_infinity());
        assert_eq!(x.limit_at_infinity().unwrap(), GaussRat::from_int(-1));

        // q: not regular
        assert!(!q().regular_at_infinity());
        assert!(q().limit_at_infinity().is_err());
    }

    #[test]
    fn canonical_form_normalizes_denominator() {
        // (2q) / (3 + 3q^2) must have monic denominator with constant term
        let x = QScalar::from_int(2)
            .mul(&q())
            .div(&QScalar::from_int(3).mul(&QScalar::one().add(&QScalar::q_pow(qexp(2, 1)))))
            .unwrap();
        assert_eq!(x.den().leading_coeff().unwrap(), &GaussRat::one());
        assert_eq!(x.den().min_exp().unwrap(), QExp::zero());
        // value check by cross multiplication
        let back = x.mul(&QScalar::from_laurent(x.den().clone()));
        assert_eq!(
            back,
            QScalar::from_laurent(x.num().clone())
        );
    }
}
