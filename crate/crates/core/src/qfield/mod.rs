//! The coefficient field Q(q): exact Laurent polynomials, their reduced
//! fractions, and q-integers.

mod laurent;
mod rat;

pub use laurent::LaurentPoly;
pub use rat::QRat;

use num_rational::BigRational;

use crate::error::Result;

/// `[n]_q = (q^n - q^-n) / (q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn qint(n: u32) -> QRat {
    let n = i64::from(n);
    QRat::from_laurent(LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1))))
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn qfactorial(n: u32) -> QRat {
    (1..=n).fold(QRat::one(), |acc, k| &acc * &qint(k))
}

pub fn qr_add(x: &QRat, y: &QRat) -> QRat {
    x + y
}

pub fn qr_mul(x: &QRat, y: &QRat) -> QRat {
    x * y
}

pub fn qr_div(x: &QRat, y: &QRat) -> Result<QRat> {
    x.checked_div(y)
}

pub fn qr_eval(x: &QRat, q0: &BigRational) -> Result<BigRational> {
    x.eval(q0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_q_integers() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(3), QRat::from_laurent(LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)])));
    }

    #[test]
    fn small_q_factorials() {
        assert!(qfactorial(0).is_one());
        assert_eq!(qfactorial(2), QRat::from_laurent(LaurentPoly::from_terms([(1, 1), (-1, 1)])));
        // (q + q^-1)(q^2 + 1 + q^-2) = q^3 + 2q + 2q^-1 + q^-3
        assert_eq!(qfactorial(3), QRat::from_laurent(LaurentPoly::from_terms([(3, 1), (1, 2), (-1, 2), (-3, 1)])));
    }

    #[test]
    fn eval_q_integer_at_two() {
        let v = qr_eval(&qint(3), &BigRational::from_integer(2.into())).unwrap();
        assert_eq!(v, BigRational::new(21.into(), 4.into()));
    }
}
