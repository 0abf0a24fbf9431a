//! U_q(sl_2) in the PBW basis `F^a K^b E^c`.
//!
//! Products are reduced with the relations
//!
//! ```text
//! K K^-1 = 1 = K^-1 K,   K E = q^2 E K,   K F = q^-2 F K,
//! E F - F E = (K - K^-1) / (q - q^-1)
//! ```
//!
//! [`AlgElem::mul`] goes through a memoized table of `E^c F^d` normal forms;
//! [`normalize_word`] is an independent single-swap rewriting engine used as
//! its oracle.

mod elem;
mod rewrite;

pub use elem::AlgElem;
pub use rewrite::{normalize_word, normalize_word_with, RewriteStrategy};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qfield::{qint, QRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    E,
    F,
    K,
    Kinv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::E, Generator::F, Generator::K, Generator::Kinv];

    pub fn name(self) -> &'static str {
        match self {
            Generator::E => "E",
            Generator::F => "F",
            Generator::K => "K",
            Generator::Kinv => "Kinv",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The basis monomial `F^f K^k E^e`, in exactly that left-to-right order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PbwMonomial {
    pub f: u32,
    pub k: i32,
    pub e: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { f: 0, k: 0, e: 0 };

    pub fn new(f: u32, k: i32, e: u32) -> Self {
        PbwMonomial { f, k, e }
    }

    /// `2 (e - f)`: conjugation by K scales the monomial by `q^weight`.
    pub fn weight(&self) -> i64 {
        2 * (i64::from(self.e) - i64::from(self.f))
    }

    /// Total E-degree plus F-degree.
    pub fn degree(&self) -> u32 {
        self.e + self.f
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |sym: &str, exp: i64| match exp {
            0 => {}
            1 => parts.push(sym.to_string()),
            _ => parts.push(format!("{sym}^{exp}")),
        };
        push("F", i64::from(self.f));
        push("K", i64::from(self.k));
        push("E", i64::from(self.e));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

pub fn monomial(a: u32, b: i32, c: u32, coeff: QRat) -> AlgElem {
    AlgElem::monomial(PbwMonomial::new(a, b, c), coeff)
}

pub fn mul(x: &AlgElem, y: &AlgElem) -> AlgElem {
    x.mul(y)
}

pub fn weight_split(x: &AlgElem) -> std::collections::BTreeMap<i64, AlgElem> {
    x.weight_split()
}

/// Right-hand side of the `E^n F - F E^n` commutator identity:
/// `[n]_q / (q - q^-1) * (q^(n-1) E^(n-1) K - q^(1-n) E^(n-1) K^-1)`,
/// returned in PBW form.
pub fn efn_commutator(n: u32) -> AlgElem {
    assert!(n >= 1, "efn_commutator needs n >= 1");
    let scale = &qint(n) / &QRat::q_minus_qinv();
    let n = i64::from(n);
    // E^(n-1) K^(+-1) = q^(-+2(n-1)) K^(+-1) E^(n-1)
    let plus = scale.shift((n - 1) - 2 * (n - 1));
    let minus = -scale.shift(-(n - 1) + 2 * (n - 1));
    let e = (n - 1) as u32;
    &monomial(0, 1, e, plus) + &monomial(0, -1, e, minus)
}

/// The quantum Casimir `E F + (q K^-1 + q^-1 K) / (q - q^-1)^2`, central in
/// U_q(sl_2).
pub fn casimir() -> AlgElem {
    let d2 = QRat::q_minus_qinv().pow(2);
    let ef = AlgElem::generator(Generator::E).mul(&AlgElem::generator(Generator::F));
    &(&ef + &monomial(0, -1, 0, &QRat::q_pow(1) / &d2)) + &monomial(0, 1, 0, &QRat::q_pow(-1) / &d2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: Generator) -> AlgElem {
        AlgElem::generator(x)
    }

    fn inv_d() -> QRat {
        QRat::q_minus_qinv().inv().unwrap()
    }

    #[test]
    fn monomial_constructor() {
        assert_eq!(monomial(0, 0, 0, QRat::one()), AlgElem::one());
        assert_eq!(monomial(0, 1, 0, QRat::one()), g(Generator::K));
        assert!(monomial(2, 1, 3, QRat::zero()).is_zero());
        // F K is a basis monomial; K F is q^-2 F K.
        let kf = g(Generator::K).mul(&g(Generator::F));
        assert_eq!(kf, monomial(1, 1, 0, QRat::q_pow(-2)));
    }

    #[test]
    fn defining_relations() {
        let ef = g(Generator::E).mul(&g(Generator::F));
        let expected = &(&monomial(1, 0, 1, QRat::one()) + &monomial(0, 1, 0, inv_d())) + &monomial(0, -1, 0, -inv_d());
        assert_eq!(ef, expected);
        // K E = q^2 E K, and K E is itself the basis monomial F^0 K^1 E^1
        assert_eq!(g(Generator::K).mul(&g(Generator::E)), monomial(0, 1, 1, QRat::one()));
        assert_eq!(g(Generator::E).mul(&g(Generator::K)), monomial(0, 1, 1, QRat::q_pow(-2)));
        assert_eq!(g(Generator::K).mul(&g(Generator::Kinv)), AlgElem::one());
        assert_eq!(g(Generator::Kinv).mul(&g(Generator::K)), AlgElem::one());
    }

    #[test]
    fn efn_small_cases() {
        let k_minus_kinv = &monomial(0, 1, 0, inv_d()) + &monomial(0, -1, 0, -inv_d());
        assert_eq!(efn_commutator(1), k_minus_kinv);
        // n = 2: q[2]/(q-q^-1) E K - q^-1[2]/(q-q^-1) E K^-1, via mul.
        let e = g(Generator::E);
        let c = &qint(2) / &QRat::q_minus_qinv();
        let expected = &e.mul(&g(Generator::K)).scale(&c.shift(1)) - &e.mul(&g(Generator::Kinv)).scale(&c.shift(-1));
        assert_eq!(efn_commutator(2), expected);
    }

    #[test]
    fn efn_matches_iterated_mul() {
        let e = g(Generator::E);
        let f = g(Generator::F);
        for n in 1..=10u32 {
            let en = e.pow(n);
            let lhs = &en.mul(&f) - &f.mul(&en);
            assert_eq!(efn_commutator(n), lhs, "n = {n}");
        }
    }

    #[test]
    fn weight_split_examples() {
        let e = g(Generator::E);
        let f = g(Generator::F);
        let split = (&e + &f).weight_split();
        assert_eq!(split.len(), 2);
        assert_eq!(split[&2], e);
        assert_eq!(split[&-2], f);
        let x = &e.mul(&f) + &g(Generator::K);
        let split = x.weight_split();
        assert_eq!(split.keys().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(split[&0], x);
    }

    #[test]
    fn casimir_is_central_and_weight_zero() {
        let c = casimir();
        assert!(c.terms().all(|(m, _)| m.weight() == 0));
        for x in Generator::ALL {
            let x = g(x);
            assert_eq!(c.mul(&x), x.mul(&c));
        }
        // 1/(q-q^-1) + q^-1/(q-q^-1)^2 = q/(q-q^-1)^2
        let d2 = QRat::q_minus_qinv().pow(2);
        assert_eq!(c.coeff(&PbwMonomial::new(0, 1, 0)), &QRat::q_pow(1) / &d2);
        assert_eq!(c.coeff(&PbwMonomial::new(0, -1, 0)), &QRat::q_pow(-1) / &d2);
        assert_eq!(c.coeff(&PbwMonomial::new(1, 0, 1)), QRat::one());
    }
}
