//! Shared inputs for the criterion benches.

use uqsl2_core::{AlgElem, Generator, LaurentPoly, QRat};

/// `[n]_q`-style coefficients with shared factors, so that adding and
/// multiplying them exercises gcd cancellation.
pub fn coefficient_pair(n: i64) -> (QRat, QRat) {
    let num = LaurentPoly::from_terms((0..n).map(|k| (2 * k - n, k + 1)));
    let den = LaurentPoly::from_terms([(0, 1), (2, -1)]).pow(n as u32 / 2 + 1);
    let a = QRat::new(num.clone(), den.clone()).expect("nonzero denominator");
    let b = QRat::new(&num * &LaurentPoly::from_terms([(1, 1), (-1, 1)]), den.shift(-1)).expect("nonzero denominator");
    (a, b)
}

/// `F^a E^c` summed with weight-matched `K` factors, a typical mid-size
/// target for the adjoint actions.
pub fn mixed_element(deg: u32) -> AlgElem {
    let f = AlgElem::generator(Generator::F);
    let e = AlgElem::generator(Generator::E);
    let k = AlgElem::generator(Generator::K);
    (0..=deg).fold(AlgElem::zero(), |acc, a| &acc + &f.pow(a).mul(&k).mul(&e.pow(deg - a)))
}
