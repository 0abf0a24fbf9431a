use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{poly_gcd_cofactors, LaurentPoly};
use crate::error::{Error, Result};

/// An element of Q(q), kept as a reduced ratio of Laurent polynomials.
///
/// Canonical form: the denominator has lowest exponent 0 and a positive
/// lowest coefficient, numerator and denominator are coprime in Q[q], and the
/// integer gcd of all their coefficients is 1. Structural equality is field
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        QRat { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QRat { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        QRat { num: LaurentPoly::q_pow(k), den: LaurentPoly::one() }
    }

    /// `c q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        QRat { num: LaurentPoly::monomial(c.into(), k), den: LaurentPoly::one() }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        QRat { num: p, den: LaurentPoly::one() }
    }

    /// `num / den` reduced to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    /// `q - q^-1`, the ubiquitous denominator of the quantum group relations.
    pub fn q_minus_qinv() -> Self {
        Self::from_laurent(LaurentPoly::from_terms([(1, 1), (-1, -1)]))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QRat { num, den };
        }
        let shift = -den.min_exp().unwrap();
        let (_, dcoeffs) = den.into_dense();
        let num = num.shift(shift);
        let (nlow, ncoeffs) = num.into_dense();
        // q does not divide den any more, so gcd(num, den) only involves the
        // polynomial part of num.
        let (ncoeffs, dcoeffs) = if dcoeffs.len() > 1 {
            let (_, n, d) = poly_gcd_cofactors(&ncoeffs, &dcoeffs);
            (n, d)
        } else {
            (ncoeffs, dcoeffs)
        };
        let mut num = LaurentPoly::from_dense(nlow, ncoeffs);
        let mut den = LaurentPoly::from_dense(0, dcoeffs);
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact_int(&c);
            den = den.div_exact_int(&c);
        }
        if den.dense().1[0].is_negative() {
            num = -&num;
            den = -&den;
        }
        QRat { num, den }
    }

    /// Canonical form for a pair already known to be coprime in Q[q], with a
    /// denominator of lowest exponent 0: only content and sign are fixed.
    fn finish(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        debug_assert_eq!(den.min_exp(), Some(0));
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact_int(&c);
            den = den.div_exact_int(&c);
        }
        if den.dense().1[0].is_negative() {
            num = -&num;
            den = -&den;
        }
        QRat { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Multiplies by `q^k`; never needs a gcd.
    pub fn shift(&self, k: i64) -> Self {
        QRat { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        QRat { num: base.num.pow(n.unsigned_abs()), den: base.den.pow(n.unsigned_abs()) }
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() || q0.abs().is_one() {
            return Err(Error::ForbiddenSpecialization(q0.to_string()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<LaurentPoly> for QRat {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat { num: &self.num + &rhs.num, den: LaurentPoly::one() };
        }
        if self.den == rhs.den {
            return QRat::normalize(&self.num + &rhs.num, self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): the sum a(d/g) + c(b/g) can only share
        // factors with g.
        let shared = den_cofactors(&self.den, &rhs.den);
        let (b1, d1) = match &shared {
            Some((b1, d1)) => (b1.clone(), d1.clone()),
            None => (self.den.clone(), rhs.den.clone()),
        };
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &self.den * &d1;
        match shared {
            Some(_) => QRat::normalize(num, den),
            None => QRat::finish(num, den),
        }
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // both operands are reduced, so only the cross pairs can cancel
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        QRat::finish(&n1 * &n2, &d1 * &d2)
    }
}

/// `(b / g, d / g)` for `g = gcd(b, d)` of two canonical denominators, or
/// `None` when `g` is a unit.
fn den_cofactors(b: &LaurentPoly, d: &LaurentPoly) -> Option<(LaurentPoly, LaurentPoly)> {
    let (_, bc) = b.dense();
    let (_, dc) = d.dense();
    let (g, b1, d1) = poly_gcd_cofactors(bc, dc);
    (g.len() > 1).then(|| (LaurentPoly::from_dense(0, b1), LaurentPoly::from_dense(0, d1)))
}

/// Removes the common polynomial factor of a numerator and a canonical
/// denominator.
fn cancel(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let (nlow, nc) = num.dense();
    let (_, dc) = den.dense();
    if dc.len() == 1 || nc.len() == 1 {
        return (num.clone(), den.clone());
    }
    let (g, n1, d1) = poly_gcd_cofactors(nc, dc);
    if g.len() == 1 {
        return (num.clone(), den.clone());
    }
    (LaurentPoly::from_dense(nlow, n1), LaurentPoly::from_dense(0, d1))
}

impl Div for &QRat {
    type Output = QRat;
    /// Panics on division by zero; see [`QRat::checked_div`].
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, rhs: &QRat) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &LaurentPoly| {
                if p.term_count() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

fn poly_to_pairs(p: &LaurentPoly) -> Vec<(i64, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

#[derive(Serialize, Deserialize)]
struct RawQRat {
    num: Vec<(i64, String)>,
    den: Vec<(i64, String)>,
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawQRat { num: poly_to_pairs(&self.num), den: poly_to_pairs(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawQRat::deserialize(d)?;
        let parse = |v: Vec<(i64, String)>| -> std::result::Result<LaurentPoly, D::Error> {
            let terms = v
                .into_iter()
                .map(|(e, c)| c.parse::<BigInt>().map(|c| (e, c)))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(D::Error::custom)?;
            Ok(LaurentPoly::from_terms(terms))
        };
        QRat::new(parse(raw.num)?, parse(raw.den)?).map_err(D::Error::custom)
    }
}
