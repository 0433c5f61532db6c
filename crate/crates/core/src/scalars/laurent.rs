use std::collections::BTreeMap;
use std::fmt;

use num::integer::lcm;
use num::rational::Ratio;
use num::{One, Zero};

use super::gauss::GaussRat;

/// Exponent of `q`: a rational with small denominator (the dynamic root order).
pub type QExp = Ratio<i64>;

pub fn qexp(num: i64, den: i64) -> QExp {
    Ratio::new(num, den)
}

/// A Laurent "polynomial" in `q` with Gaussian-rational coefficients and
/// rational exponents. The zero element is the empty term map; no stored
/// coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct QLaurent {
    terms: BTreeMap<QExp, GaussRat>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(GaussRat::one(), QExp::zero())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial(c, QExp::zero())
    }

    pub fn monomial(coeff: GaussRat, exp: QExp) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        QLaurent { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: QExp) -> Self {
        Self::monomial(GaussRat::one(), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&QExp::zero())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QExp, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest exponent, if nonzero.
    pub fn max_exp(&self) -> Option<QExp> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, if nonzero.
    pub fn min_exp(&self) -> Option<QExp> {
        self.terms.keys().next().copied()
    }

    /// Coefficient of the highest power.
    pub fn leading_coeff(&self) -> Option<&GaussRat> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, exp: &QExp) -> GaussRat {
        self.terms.get(exp).cloned().unwrap_or_else(GaussRat::zero)
    }

    fn insert_add(&mut self, exp: QExp, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.insert_add(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = QLaurent::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.insert_add(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return QLaurent::zero();
        }
        QLaurent {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by `q^exp`.
    pub fn shift(&self, exp: QExp) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + exp, c.clone())).collect(),
        }
    }

    /// Least common multiple of all exponent denominators (1 for the zero element).
    pub fn exp_denominator(&self) -> i64 {
        self.terms
            .keys()
            .fold(1i64, |acc, e| lcm(acc, *e.denom()))
    }

    /// Dense coefficient list in `t = q^(1/scale)` after factoring out `t^offset`:
    /// `self = t^offset * (coeffs[0] + coeffs[1] t + ...)`, with `coeffs[0] != 0`.
    /// Returns `(offset, coeffs)`; the zero element gives `(0, [])`.
    pub fn to_dense(&self, scale: i64) -> (i64, Vec<GaussRat>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let idx = |e: &QExp| -> i64 {
            let scaled = e * QExp::from_integer(scale);
            debug_assert!(scaled.denom().is_one(), "exponent denominator must divide scale");
            scaled.to_integer()
        };
        let low = idx(&self.min_exp().unwrap());
        let high = idx(&self.max_exp().unwrap());
        let mut coeffs = vec![GaussRat::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms.iter() {
            coeffs[(idx(e) - low) as usize] = c.clone();
        }
        (low, coeffs)
    }

    pub fn from_dense(offset: i64, coeffs: &[GaussRat], scale: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(qexp(offset + k as i64, scale), c.clone());
            }
        }
        QLaurent { terms }
    }
}

/// Trim trailing (high-degree) zeros of a dense polynomial.
fn trim(p: &mut Vec<GaussRat>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

pub fn dense_is_zero(p: &[GaussRat]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Polynomial long division over the Gaussian rationals: `a = q*b + r`.
pub fn dense_divrem(a: &[GaussRat], b: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let mut r: Vec<GaussRat> = a.to_vec();
    trim(&mut r);
    let mut bt: Vec<GaussRat> = b.to_vec();
    trim(&mut bt);
    assert!(!bt.is_empty(), "division by zero polynomial");
    let db = bt.len() - 1;
    let lead = bt[db].clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quot = vec![GaussRat::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        quot[dr - db] = factor.clone();
        for k in 0..=db {
            let delta = &factor * &bt[k];
            r[dr - db + k] = &r[dr - db + k] - &delta;
        }
        trim(&mut r);
        if dr == db {
            break;
        }
    }
    trim(&mut quot);
    (quot, r)
}

/// Monic gcd of two dense polynomials (Euclid with per-step monic normalization).
pub fn dense_gcd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut x: Vec<GaussRat> = a.to_vec();
    let mut y: Vec<GaussRat> = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = r;
        if !y.is_empty() {
            // normalize to keep coefficients small
            let lead = y.last().unwrap().clone();
            for c in y.iter_mut() {
                *c = &*c / &lead;
            }
        }
    }
    if x.is_empty() {
        return x;
    }
    let lead = x.last().unwrap().clone();
    for c in x.iter_mut() {
        *c = &*c / &lead;
    }
    x
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::render_laurent(self))
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::render_laurent(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QLaurent {
        QLaurent::q_pow(QExp::one())
    }

    #[test]
    fn laurent_mul_collects_terms() {
        // (q + q^-1) * q = q^2 + 1
        let a = q().add(&QLaurent::q_pow(qexp(-1, 1)));
        let prod = a.mul(&q());
        let expect = QLaurent::q_pow(qexp(2, 1)).add(&QLaurent::one());
        assert_eq!(prod, expect);
    }

    #[test]
    fn fractional_exponents_cancel() {
        // q^(3/4) * q^(3/4) * q^(1/2) * q^(-2) = 1
        let p = QLaurent::q_pow(qexp(3, 4))
            .mul(&QLaurent::q_pow(qexp(3, 4)))
            .mul(&QLaurent::q_pow(qexp(1, 2)))
            .mul(&QLaurent::q_pow(qexp(-2, 1)));
        assert!(p.is_one());
    }

    #[test]
    fn dense_roundtrip_and_divrem() {
        let a = q().mul(&q()).sub(&QLaurent::one()); // q^2 - 1
        let b = q().sub(&QLaurent::q_pow(qexp(-1, 1))); // q - q^-1
        let d = lcm(a.exp_denominator(), b.exp_denominator());
        let (oa, da) = a.to_dense(d);
        let (ob, db) = b.to_dense(d);
        // (q^2-1) / (q - q^-1) = q  as Laurent elements: shift offsets apart
        let (quot, rem) = dense_divrem(&da, &db);
        assert!(dense_is_zero(&rem));
        let qout = QLaurent::from_dense(oa - ob, &quot, d);
        assert_eq!(qout, q());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = q().add(&QLaurent::one()); // q + 1
        let b = q().sub(&QLaurent::one()); // q - 1
        let (_, da) = a.to_dense(1);
        let (_, db) = b.to_dense(1);
        let g = dense_gcd(&da, &db);
        assert_eq!(g.len(), 1);
        assert!(g[0].is_one());
    }
}
