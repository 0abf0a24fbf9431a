//! Hopf structure of U_q(sl_2):
//!
//! ```text
//! Δ(K^±1) = K^±1 ⊗ K^±1,  Δ(E) = E ⊗ K + 1 ⊗ E,  Δ(F) = F ⊗ 1 + K^-1 ⊗ F
//! ε(K^±1) = 1,  ε(E) = ε(F) = 0
//! S(K^±1) = K^∓1,  S(E) = -E K^-1,  S(F) = -K F
//! ```
//!
//! and the left adjoint action `ad_b(a) = Σ b_(1) a S(b_(2))`.

mod tensor;

pub use tensor::{TensorElem, TripleElem};

use std::collections::HashMap;

use crate::pbw::{AlgElem, Generator, PbwMonomial};
use crate::qfield::QRat;

fn coproduct_generator(g: Generator) -> TensorElem {
    let gen = AlgElem::generator;
    match g {
        Generator::K | Generator::Kinv => TensorElem::pure(&gen(g), &gen(g)),
        Generator::E => {
            &TensorElem::pure(&gen(Generator::E), &gen(Generator::K))
                + &TensorElem::pure(&AlgElem::one(), &gen(Generator::E))
        }
        Generator::F => {
            &TensorElem::pure(&gen(Generator::F), &AlgElem::one())
                + &TensorElem::pure(&gen(Generator::Kinv), &gen(Generator::F))
        }
    }
}

fn tensor_pow(t: &TensorElem, n: u32) -> TensorElem {
    (0..n).fold(TensorElem::one(), |acc, _| acc.tensor_mul(t))
}

/// Δ of a single basis monomial `F^a K^b E^c`.
pub fn coproduct_monomial(m: &PbwMonomial) -> TensorElem {
    let kb = PbwMonomial::new(0, m.k, 0);
    let fa = tensor_pow(&coproduct_generator(Generator::F), m.f);
    let ec = tensor_pow(&coproduct_generator(Generator::E), m.e);
    fa.tensor_mul(&TensorElem::basis(kb, kb, QRat::one())).tensor_mul(&ec)
}

pub fn coproduct(x: &AlgElem) -> TensorElem {
    let mut out = TensorElem::zero();
    for (m, c) in x.terms() {
        out.add_assign_ref(&coproduct_monomial(m).scale(c));
    }
    out
}

pub fn counit_monomial(m: &PbwMonomial) -> QRat {
    if m.e == 0 && m.f == 0 {
        QRat::one()
    } else {
        QRat::zero()
    }
}

pub fn counit(x: &AlgElem) -> QRat {
    x.terms().fold(QRat::zero(), |acc, (m, c)| &acc + &(c * &counit_monomial(m)))
}

/// `S(F^a K^b E^c) = S(E)^c S(K)^b S(F)^a`.
pub fn antipode_monomial(m: &PbwMonomial) -> AlgElem {
    let minus_one = QRat::from_int(-1);
    let s_e = AlgElem::generator(Generator::E).mul(&AlgElem::generator(Generator::Kinv)).scale(&minus_one);
    let s_f = AlgElem::generator(Generator::K).mul(&AlgElem::generator(Generator::F)).scale(&minus_one);
    s_e.pow(m.e).mul(&AlgElem::basis(PbwMonomial::new(0, -m.k, 0))).mul(&s_f.pow(m.f))
}

pub fn antipode(x: &AlgElem) -> AlgElem {
    let mut out = AlgElem::zero();
    for (m, c) in x.terms() {
        out.add_assign_ref(&antipode_monomial(m).scale(c));
    }
    out
}

pub fn tensor_mul(x: &TensorElem, y: &TensorElem) -> TensorElem {
    x.tensor_mul(y)
}

/// `ad_actor(target) = Σ actor_(1) target S(actor_(2))`, by Sweedler expansion.
pub fn adjoint(actor: &AlgElem, target: &AlgElem) -> AlgElem {
    if actor.is_zero() || target.is_zero() {
        return AlgElem::zero();
    }
    let mut s_cache: HashMap<PbwMonomial, AlgElem> = HashMap::new();
    let mut out = AlgElem::zero();
    for (l, r, c) in coproduct(actor).terms() {
        let s = s_cache.entry(*r).or_insert_with(|| antipode_monomial(r));
        let term = AlgElem::basis(*l).mul(target).mul(s);
        out.add_assign_ref(&term.scale(c));
    }
    out
}

/// One-generator adjoint action in closed form:
/// `ad_E(X) = (EX - XE)K^-1`, `ad_K(X) = K X K^-1`, `ad_K^-1(X) = K^-1 X K`,
/// `ad_F(X) = FX - K^-1 X K F`.
pub fn adjoint_closed(gen: Generator, target: &AlgElem) -> AlgElem {
    let g = AlgElem::generator;
    match gen {
        Generator::E => {
            let comm = &g(Generator::E).mul(target) - &target.mul(&g(Generator::E));
            comm.mul(&g(Generator::Kinv))
        }
        Generator::K | Generator::Kinv => {
            // conjugation by K^±1 scales each weight component by q^(±w)
            let sign = if gen == Generator::K { 1 } else { -1 };
            AlgElem::from_terms(target.terms().map(|(m, c)| (*m, c.shift(sign * m.weight()))))
        }
        Generator::F => {
            let kf = g(Generator::K).mul(&g(Generator::F));
            &g(Generator::F).mul(target) - &g(Generator::Kinv).mul(target).mul(&kf)
        }
    }
}

/// `ad_{g^n}(x)` for `n = 0..=max`, stopping early once a power is zero.
pub fn adjoint_powers(gen: Generator, x: &AlgElem, max: u32) -> Vec<AlgElem> {
    let mut out = vec![x.clone()];
    for _ in 0..max {
        let last = out.last().unwrap();
        if last.is_zero() {
            break;
        }
        out.push(adjoint_closed(gen, last));
    }
    out
}

/// `(Δ ⊗ id) Δ(x)` as a flat triple tensor.
pub fn coproduct_then_left(x: &AlgElem) -> TripleElem {
    let mut out = TripleElem::default();
    for (l, r, c) in coproduct(x).terms() {
        for (a, b, c2) in coproduct_monomial(l).terms() {
            out.add_term(*a, *b, *r, c * c2);
        }
    }
    out
}

/// `(id ⊗ Δ) Δ(x)` as a flat triple tensor.
pub fn coproduct_then_right(x: &AlgElem) -> TripleElem {
    let mut out = TripleElem::default();
    for (l, r, c) in coproduct(x).terms() {
        for (a, b, c2) in coproduct_monomial(r).terms() {
            out.add_term(*l, *a, *b, c * c2);
        }
    }
    out
}

/// The basis monomials `F^a K^b E^c` with `a, c <= max_fe` and `|b| <= max_k`.
pub fn corpus(max_fe: u32, max_k: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    let max_k = max_k as i32;
    for a in 0..=max_fe {
        for b in -max_k..=max_k {
            for c in 0..=max_fe {
                out.push(PbwMonomial::new(a, b, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{casimir, monomial};

    fn g(x: Generator) -> AlgElem {
        AlgElem::generator(x)
    }

    #[test]
    fn generator_coproducts() {
        let de = coproduct(&g(Generator::E));
        let expected = &TensorElem::pure(&g(Generator::E), &g(Generator::K))
            + &TensorElem::pure(&AlgElem::one(), &g(Generator::E));
        assert_eq!(de, expected);
        let dk = coproduct(&g(Generator::Kinv));
        assert_eq!(dk, TensorElem::pure(&g(Generator::Kinv), &g(Generator::Kinv)));
    }

    #[test]
    fn coproduct_of_ef_is_product_of_coproducts() {
        let ef = g(Generator::E).mul(&g(Generator::F));
        let lhs = coproduct(&ef);
        let rhs = coproduct(&g(Generator::E)).tensor_mul(&coproduct(&g(Generator::F)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_examples() {
        assert!(counit(&AlgElem::basis(PbwMonomial::new(0, 5, 0))).is_one());
        assert!(counit(&g(Generator::E).mul(&g(Generator::F))).is_zero());
        let s = QRat::from_laurent(crate::LaurentPoly::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(counit(&casimir()), &s / &QRat::q_minus_qinv().pow(2));
    }

    #[test]
    fn antipode_examples() {
        let expected = g(Generator::E).mul(&g(Generator::Kinv)).scale(&QRat::from_int(-1));
        assert_eq!(antipode(&g(Generator::E)), expected);
        let kf = g(Generator::K).mul(&g(Generator::F));
        for n in 0..4 {
            let sign = QRat::from_int(if n % 2 == 0 { 1 } else { -1 });
            assert_eq!(antipode(&g(Generator::F).pow(n)), kf.pow(n).scale(&sign));
        }
        let m_s_id: AlgElem =
            coproduct(&g(Generator::E)).map_legs(antipode_monomial, |m| AlgElem::basis(*m)).mul_legs();
        assert!(m_s_id.is_zero());
    }

    #[test]
    fn tensor_mul_examples() {
        let ek = TensorElem::pure(&g(Generator::E), &g(Generator::K));
        let one_f = TensorElem::pure(&AlgElem::one(), &g(Generator::F));
        let kf = g(Generator::K).mul(&g(Generator::F));
        assert_eq!(ek.tensor_mul(&one_f), TensorElem::pure(&g(Generator::E), &kf));
        assert_eq!(TensorElem::one().tensor_mul(&ek), ek);
    }

    #[test]
    fn adjoint_examples() {
        let k = g(Generator::K);
        let e = g(Generator::E);
        let one_minus_q2 = QRat::from_laurent(crate::LaurentPoly::from_terms([(0, 1), (2, -1)]));
        assert_eq!(adjoint(&e, &k), e.scale(&one_minus_q2));
        let fe = g(Generator::F).mul(&e);
        let ef = e.mul(&g(Generator::F));
        assert_eq!(adjoint(&g(Generator::F), &e), &fe - &ef.scale(&QRat::q_pow(-2)));
        // ad_{E^n}(K^-1) = prod_{j=1..n} (1 - q^-2j) E^n K^(-n-1)
        for n in 1..=4u32 {
            let prod = (1..=n as i64).fold(QRat::one(), |acc, j| {
                &acc * &QRat::from_laurent(crate::LaurentPoly::from_terms([(0, 1), (-2 * j, -1)]))
            });
            let en_k = e.pow(n).mul(&AlgElem::basis(PbwMonomial::new(0, -(n as i32) - 1, 0)));
            assert_eq!(adjoint(&e.pow(n), &g(Generator::Kinv)), en_k.scale(&prod), "n = {n}");
        }
    }

    #[test]
    fn adjoint_closed_examples() {
        let one_minus_q2 = QRat::from_laurent(crate::LaurentPoly::from_terms([(0, 1), (2, -1)]));
        assert_eq!(adjoint_closed(Generator::E, &g(Generator::K)), g(Generator::E).scale(&one_minus_q2));
        let m = PbwMonomial::new(2, -1, 1);
        assert_eq!(adjoint_closed(Generator::K, &AlgElem::basis(m)), monomial(2, -1, 1, QRat::q_pow(m.weight())));
    }

    #[test]
    fn corpus_size() {
        assert_eq!(corpus(2, 2).len(), 45);
    }
}
