//! Exact arithmetic in the Laurent polynomial ring Q[q, q^-1] and its
//! fraction field Q(q).
//!
//! A [`RatFunc`] is stored as `num / den` where `den` is an ordinary
//! polynomial with nonzero constant term and leading coefficient 1, and
//! `num` (a Laurent polynomial) is coprime to `den`. Since q is a unit in the
//! Laurent ring this form is unique, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(Rational),
    #[error("specialization point must be positive and different from 1, got {0}")]
    BadPoint(Rational),
}

/// Sparse Laurent polynomial with rational coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i32, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(exp, c)] }
        }
    }

    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// combining repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(iter: I) -> Self {
        let mut acc: BTreeMap<i32, Rational> = BTreeMap::new();
        for (e, c) in iter {
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(i32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms
            .binary_search_by_key(&exp, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Lowest exponent; zero polynomial reports 0.
    pub fn min_exp(&self) -> i32 {
        self.terms.first().map_or(0, |t| t.0)
    }

    pub fn max_exp(&self) -> i32 {
        self.terms.last().map_or(0, |t| t.0)
    }

    fn leading_coeff(&self) -> &Rational {
        &self.terms.last().expect("nonzero polynomial").1
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Evaluates at a nonzero rational point.
    pub fn eval(&self, q0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rational(q0, *e);
        }
        acc
    }

    /// Number of stored terms plus the exponent span; used to rank pivots.
    pub fn size(&self) -> usize {
        if self.terms.is_empty() {
            0
        } else {
            self.terms.len() + (self.max_exp() - self.min_exp()) as usize
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i >= self.terms.len()
                || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &other.terms[j];
                out.push((*e, if negate_other { -c } else { c.clone() }));
                j += 1;
            } else {
                let c = if negate_other {
                    &self.terms[i].1 - &other.terms[j].1
                } else {
                    &self.terms[i].1 + &other.terms[j].1
                };
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        LaurentPoly { terms: out }
    }

    fn mul_poly(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.scale(c).shift(*e);
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.scale(c).shift(*e);
        }
        let base = self.min_exp() + other.min_exp();
        let len = (self.max_exp() - self.min_exp() + other.max_exp() - other.min_exp()) as usize + 1;
        let mut dense = vec![Rational::zero(); len];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                dense[(e1 + e2 - base) as usize] += c1 * c2;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (base + i as i32, c))
                .collect(),
        }
    }

    fn to_dense(&self) -> Vec<Rational> {
        debug_assert!(self.min_exp() >= 0);
        let mut v = vec![Rational::zero(); self.max_exp() as usize + 1];
        for (e, c) in &self.terms {
            v[*e as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: Vec<Rational>) -> Self {
        LaurentPoly {
            terms: v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i32, c))
                .collect(),
        }
    }
}

fn pow_rational(x: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Quotient and remainder of ordinary polynomials (dense, ascending).
fn poly_div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lb = &b[db];
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / lb;
        for (i, bc) in b.iter().enumerate() {
            let t = &factor * bc;
            rem[shift + i] -= t;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn make_monic(v: &mut [Rational]) {
    let lc = v.last().unwrap().clone();
    if !lc.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &lc;
        }
    }
}

/// Monic gcd of two nonzero ordinary polynomials.
fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    make_monic(&mut x);
    make_monic(&mut y);
    while !y.is_empty() {
        let (_, mut r) = poly_div_rem(&x, &y);
        if !r.is_empty() {
            make_monic(&mut r);
        }
        x = y;
        y = r;
    }
    x
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_poly(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let var = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

/// Element of Q(q) in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    /// `sign * q^e` for a sign given as ±1.
    pub fn signed_q_pow(sign: i32, e: i32) -> Self {
        let c = Rational::from_integer(BigInt::from(sign));
        Self::from_laurent(LaurentPoly::monomial(c, e))
    }

    /// q - q^{-1}.
    pub fn q_minus_qinv() -> Self {
        Self::from_laurent(LaurentPoly::from_terms([
            (1, Rational::one()),
            (-1, -Rational::one()),
        ]))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let s = den.min_exp();
        if s != 0 {
            den = den.shift(-s);
            num = num.shift(-s);
        }
        let lc = den.leading_coeff().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            den = den.scale(&inv);
            num = num.scale(&inv);
        }
        if den.is_one() || num.is_monomial() {
            return RatFunc { num, den };
        }
        let t = num.min_exp();
        let p = num.shift(-t);
        let g = poly_gcd(&p.to_dense(), &den.to_dense());
        if g.len() > 1 {
            let (qn, _) = poly_div_rem(&p.to_dense(), &g);
            let (qd, _) = poly_div_rem(&den.to_dense(), &g);
            num = LaurentPoly::from_dense(qn).shift(t);
            den = LaurentPoly::from_dense(qd);
        }
        RatFunc { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// `(c, e)` if the value is `c * q^e`.
    pub fn as_monomial(&self) -> Option<(&Rational, i32)> {
        if self.den.is_one() && self.num.is_monomial() {
            let (e, c) = &self.num.terms[0];
            Some((c, *e))
        } else {
            None
        }
    }

    /// The value as a rational constant, if it does not depend on q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Evaluates at q0 ≠ 0; only poles are rejected.
    pub fn eval_at(&self, q0: &Rational) -> Result<Rational, CoeffError> {
        if q0.is_zero() {
            return Err(CoeffError::Pole(q0.clone()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(CoeffError::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Specialization at a real positive parameter q0 ≠ 1.
    pub fn specialize(&self, q0: &Rational) -> Result<Rational, CoeffError> {
        if !q0.is_positive() || q0.is_one() {
            return Err(CoeffError::BadPoint(q0.clone()));
        }
        self.eval_at(q0)
    }

    /// Rough complexity measure used to choose pivots.
    pub fn size(&self) -> usize {
        self.num.size() + self.den.size()
    }
}

impl From<i64> for RatFunc {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_laurent(num);
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_laurent(&self.num * &rhs.num);
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl RatFunc {
    /// True when the rendering is a single signed term, so it can be used as
    /// a factor without parentheses.
    pub fn is_single_term(&self) -> bool {
        self.den.is_one() && self.num.terms.len() <= 1
    }
}

impl FromStr for RatFunc {
    type Err = crate::expr::ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::expr::parse_coefficient(s)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn rat(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn cancellation_and_expansion() {
        assert_eq!(&r("q - q^-1") + &r("q^-1"), r("q"));
        assert_eq!(&r("q - q^-1") * &r("q + q^-1"), r("q^2 - q^-2"));
        let x = r("q - q^-1");
        assert!((&x.inv().unwrap() * &x).is_one());
    }

    #[test]
    fn reduced_form_is_canonical() {
        let a = r("(q^2 - 1)/(q - 1)");
        assert_eq!(a, r("q + 1"));
        let b = r("(2*q)/(4*q^3 + 2*q)");
        assert_eq!(b, r("1/(2*q^2 + 1)"));
        assert_eq!(b.denominator().terms().last().unwrap().1, Rational::one());
        assert_eq!(r("q^-2/q^-3"), r("q"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFunc::zero().inv(), Err(CoeffError::DivisionByZero));
        assert_eq!(
            RatFunc::one().checked_div(&r("q - q")),
            Err(CoeffError::DivisionByZero)
        );
    }

    #[test]
    fn specialization() {
        assert_eq!(r("q^2 - q^-2").specialize(&rat(2, 1)).unwrap(), rat(15, 4));
        assert_eq!(RatFunc::one().specialize(&rat(3, 2)).unwrap(), rat(1, 1));
        let x = r("(q - q^-1)/(q - q^-1)");
        assert_eq!(x.specialize(&rat(3, 2)).unwrap(), rat(1, 1));
        assert!(matches!(
            r("1/(q - 2)").specialize(&rat(2, 1)),
            Err(CoeffError::Pole(_))
        ));
        assert!(matches!(
            r("q").specialize(&rat(1, 1)),
            Err(CoeffError::BadPoint(_))
        ));
        assert!(matches!(
            r("q").specialize(&rat(0, 1)),
            Err(CoeffError::BadPoint(_))
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "0",
            "1",
            "-q^2",
            "q - q^-1",
            "3/2*q^3 - 1 + q^-4",
            "(q^2 + 1)/(q^2 - 3)",
            "(-q)/(q^2 + 1/2)",
        ] {
            let x = r(s);
            assert_eq!(r(&x.to_string()), x, "{s}");
        }
        assert_eq!(r("-q^2").to_string(), "-q^2");
        assert_eq!(r("q - q^-1").to_string(), "q - q^-1");
    }
}
