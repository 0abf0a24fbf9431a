//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A Laurent polynomial `sum_i c_i q^(low + i)`.
///
/// Stored densely from the lowest to the highest exponent. The first and last
/// stored coefficients are nonzero; the zero polynomial has no coefficients.
/// [`LaurentPoly::terms`] only yields the nonzero coefficients, in strictly
/// increasing exponent order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

pub(crate) fn checked_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("q-exponent overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c q^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: exp, coeffs: vec![c] }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let len = usize::try_from(high - low).expect("Laurent polynomial too wide") + 1;
        let mut coeffs = vec![BigInt::zero(); len];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly { low: checked_exp(low, lead_zeros as i64), coeffs }
    }

    pub(crate) fn dense(&self) -> (i64, &[BigInt]) {
        (self.low, &self.coeffs)
    }

    pub(crate) fn into_dense(self) -> (i64, Vec<BigInt>) {
        (self.low, self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `c q^k` (including constants), false for zero.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Lowest exponent with a nonzero coefficient, `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if self.is_zero() || exp < self.low {
            return BigInt::zero();
        }
        self.coeffs.get((exp - self.low) as usize).cloned().unwrap_or_default()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: checked_exp(self.low, k), coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// gcd of all coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Least common multiple in Z[q, q^-1] up to units: an ordinary
    /// polynomial with nonzero constant term and positive lowest coefficient.
    /// Zero if either input is zero.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (_, g_a, _) = poly_gcd_cofactors(&self.coeffs, &other.coeffs);
        let int_gcd = self.content().gcd(&other.content());
        let out = LaurentPoly::from_dense(0, poly_mul(&g_a, &other.coeffs)).div_exact_int(&int_gcd);
        if out.coeffs[0].is_negative() {
            -&out
        } else {
            out
        }
    }

    pub(crate) fn div_exact_int(&self, c: &BigInt) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at a rational point `q0 != 0`.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        let low = i32::try_from(self.low).expect("exponent out of range for evaluation");
        acc * q0.pow(low)
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_dense(checked_exp(self.low, rhs.low), poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `q^2 + 1 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag} q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag} q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// Dense polynomial helpers over Z, ascending degree, no trailing zeros.

/// The coefficients as machine integers, when all of them fit.
fn small(a: &[BigInt]) -> Option<Vec<i64>> {
    a.iter().map(ToPrimitive::to_i64).collect()
}

fn max_bits(a: &[i64]) -> u32 {
    a.iter().map(|x| 64 - x.unsigned_abs().leading_zeros()).max().unwrap_or(0)
}

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if let (Some(sa), Some(sb)) = (small(a), small(b)) {
        let terms = a.len().min(b.len()) as u64;
        if max_bits(&sa) + max_bits(&sb) + (64 - terms.leading_zeros()) < 127 {
            let mut out = vec![0i128; a.len() + b.len() - 1];
            for (i, &x) in sa.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in sb.iter().enumerate() {
                    out[i + j] += i128::from(x) * i128::from(y);
                }
            }
            return out.into_iter().map(BigInt::from).collect();
        }
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&p);
    if !c.is_zero() && !c.is_one() {
        for x in &mut p {
            *x /= &c;
        }
    }
    p
}

/// Pseudo-remainder of `a` by `b` (b nonzero), trimmed.
fn pseudo_rem(mut r: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &lr * y;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd of two nonzero integer polynomials (content 1, leading
/// coefficient positive).
#[cfg(test)]
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    poly_gcd_cofactors(a, b).0
}

/// `(g, a / g, b / g)` with `g` the primitive gcd of two nonzero integer
/// polynomials.
///
/// The gcd is first computed modulo a few large primes, lifted to the
/// symmetric range and confirmed by exact division; the division quotients
/// are the cofactors. Only if no prime yields a divisor does it fall back to
/// a primitive remainder sequence.
pub(crate) fn poly_gcd_cofactors(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    if a.len() == 1 || b.len() == 1 {
        return (vec![BigInt::one()], a.to_vec(), b.to_vec());
    }
    let lc_gcd = a.last().unwrap().gcd(b.last().unwrap());
    for &p in &modp::PRIMES {
        let Some(g) = modp::gcd(a, b, p) else { continue };
        if g.len() == 1 {
            return (vec![BigInt::one()], a.to_vec(), b.to_vec());
        }
        let cand = primitive_part(modp::lift(&g, &lc_gcd, p));
        let cand = if cand.last().is_some_and(Signed::is_negative) { cand.iter().map(|x| -x).collect() } else { cand };
        if let Some(qa) = poly_div_checked(a, &cand) {
            if let Some(qb) = poly_div_checked(b, &cand) {
                return (cand, qa, qb);
            }
        }
    }
    let g = poly_gcd_prs(a, b);
    let qa = poly_div_exact(a, &g);
    let qb = poly_div_exact(b, &g);
    (g, qa, qb)
}

fn poly_gcd_prs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() {
        (primitive_part(a.to_vec()), primitive_part(b.to_vec()))
    } else {
        (primitive_part(b.to_vec()), primitive_part(a.to_vec()))
    };
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_rem(a, &b);
        a = b;
        b = primitive_part(r);
    }
    if a.last().is_some_and(Signed::is_negative) {
        for x in &mut a {
            *x = -&*x;
        }
    }
    a
}

/// `a / b` in Z[q] if the division is exact.
fn poly_div_checked(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    if let (Some(sa), Some(sb)) = (small(a), small(b)) {
        if let Some(r) = small_div_checked(&sa, &sb) {
            return r.map(|q| q.into_iter().map(BigInt::from).collect());
        }
    }
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    let lb = &b[db];
    for k in (0..quot.len()).rev() {
        let lead = &r[k + db];
        if lead.is_zero() {
            continue;
        }
        let (qk, rem) = lead.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &qk * y;
        }
        quot[k] = qk;
    }
    if !r.iter().all(Zero::is_zero) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// Machine-integer version of [`poly_div_checked`]; `None` on overflow.
fn small_div_checked(a: &[i64], b: &[i64]) -> Option<Option<Vec<i128>>> {
    let db = b.len() - 1;
    let mut r: Vec<i128> = a.iter().map(|&x| i128::from(x)).collect();
    let mut quot = vec![0i128; a.len() - db];
    let lb = i128::from(b[db]);
    for k in (0..quot.len()).rev() {
        let lead = r[k + db];
        if lead == 0 {
            continue;
        }
        if lead % lb != 0 {
            return Some(None);
        }
        let qk = lead / lb;
        for (i, &y) in b.iter().enumerate() {
            r[k + i] = r[k + i].checked_sub(qk.checked_mul(i128::from(y))?)?;
        }
        quot[k] = qk;
    }
    if r.iter().any(|&x| x != 0) {
        return Some(None);
    }
    while quot.last() == Some(&0) {
        quot.pop();
    }
    Some(Some(quot))
}

/// Polynomial arithmetic over word-sized prime fields.
mod modp {
    use num_bigint::{BigInt, Sign};
    use num_traits::ToPrimitive;

    pub(super) const PRIMES: [u64; 3] = [M61, 4_611_686_018_427_387_847, 2_305_843_009_213_693_921];

    const M61: u64 = (1 << 61) - 1;

    fn mulm(a: u64, b: u64, p: u64) -> u64 {
        let z = u128::from(a) * u128::from(b);
        if p == M61 {
            // 2^61 = 1 mod M61
            let mut r = (z as u64 & M61) + (z >> 61) as u64;
            while r >= M61 {
                r -= M61;
            }
            return r;
        }
        (z % u128::from(p)) as u64
    }

    fn inv(a: u64, p: u64) -> u64 {
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, base, p);
            }
            base = mulm(base, base, p);
            e >>= 1;
        }
        acc
    }

    fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        a.iter()
            .map(|x| {
                if let Some(v) = x.to_i64() {
                    return i128::from(v).rem_euclid(i128::from(p)) as u64;
                }
                let r = x % &pb;
                let r = if r.sign() == Sign::Minus { r + &pb } else { r };
                r.to_u64().unwrap()
            })
            .collect()
    }

    fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    /// Monic gcd of `a` and `b` modulo `p`, or `None` when `p` divides a
    /// leading coefficient.
    pub(super) fn gcd(a: &[BigInt], b: &[BigInt], p: u64) -> Option<Vec<u64>> {
        let mut a = reduce(a, p);
        let mut b = reduce(b, p);
        if a.last() == Some(&0) || b.last() == Some(&0) {
            return None;
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let lb_inv = inv(*b.last().unwrap(), p);
            while a.len() >= b.len() {
                let k = a.len() - b.len();
                let f = mulm(*a.last().unwrap(), lb_inv, p);
                for (i, y) in b.iter().enumerate() {
                    let t = mulm(f, *y, p);
                    a[k + i] = if a[k + i] >= t { a[k + i] - t } else { a[k + i] + p - t };
                }
                trim(&mut a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        let li = inv(*a.last().unwrap(), p);
        Some(a.iter().map(|&x| mulm(x, li, p)).collect())
    }

    /// `scale * g` lifted from GF(p) to the symmetric integer range.
    pub(super) fn lift(g: &[u64], scale: &BigInt, p: u64) -> Vec<BigInt> {
        let s = reduce(std::slice::from_ref(scale), p)[0];
        let half = p / 2;
        g.iter()
            .map(|&x| {
                let y = mulm(x, s, p);
                if y > half {
                    BigInt::from(y) - BigInt::from(p)
                } else {
                    BigInt::from(y)
                }
            })
            .collect()
    }
}

/// Exact quotient `a / b` in Z[q]; `b` must divide `a`.
pub(crate) fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        debug_assert!(a.iter().all(Zero::is_zero));
        return Vec::new();
    }
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    let lb = &b[db];
    for k in (0..quot.len()).rev() {
        let lead = &r[k + db];
        if lead.is_zero() {
            continue;
        }
        let (qk, rem) = lead.div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &qk * y;
        }
        quot[k] = qk;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(&mut quot);
    quot
}
