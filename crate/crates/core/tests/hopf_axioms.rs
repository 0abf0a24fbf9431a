use uqsl2_core::hopf::{
    adjoint, adjoint_closed, antipode, antipode_monomial, coproduct, coproduct_then_left, coproduct_then_right, corpus,
    counit, counit_monomial,
};
use uqsl2_core::{AlgElem, Generator, PbwMonomial, QRat};

fn g(x: Generator) -> AlgElem {
    AlgElem::generator(x)
}

#[test]
fn coassociativity_on_corpus() {
    for m in corpus(2, 2) {
        let x = AlgElem::basis(m);
        assert_eq!(coproduct_then_left(&x), coproduct_then_right(&x), "{m}");
    }
}

#[test]
fn counit_axioms_on_corpus() {
    for m in corpus(2, 2) {
        let x = AlgElem::basis(m);
        let d = coproduct(&x);
        assert_eq!(d.contract_left(counit_monomial), x, "{m}");
        assert_eq!(d.contract_right(counit_monomial), x, "{m}");
    }
}

#[test]
fn antipode_axioms_on_corpus() {
    for m in corpus(2, 2) {
        let x = AlgElem::basis(m);
        let unit = AlgElem::scalar(counit(&x));
        let d = coproduct(&x);
        let left = d.map_legs(antipode_monomial, |r| AlgElem::basis(*r)).mul_legs();
        let right = d.map_legs(|l| AlgElem::basis(*l), antipode_monomial).mul_legs();
        assert_eq!(left, unit, "{m}");
        assert_eq!(right, unit, "{m}");
    }
}

#[test]
fn coproduct_and_antipode_respect_products() {
    let ms = corpus(1, 1);
    for a in &ms {
        for b in &ms {
            let x = AlgElem::basis(*a);
            let y = AlgElem::basis(*b);
            let xy = x.mul(&y);
            assert_eq!(coproduct(&xy), coproduct(&x).tensor_mul(&coproduct(&y)), "{a} * {b}");
            assert_eq!(antipode(&xy), antipode(&y).mul(&antipode(&x)), "{a} * {b}");
            assert_eq!(counit(&xy), &counit(&x) * &counit(&y));
        }
    }
}

#[test]
fn adjoint_is_a_representation() {
    for m in corpus(1, 1) {
        let z = AlgElem::basis(m);
        for a in Generator::ALL {
            assert_eq!(adjoint_closed(a, &z), adjoint(&g(a), &z), "{a:?} on {m}");
            for b in Generator::ALL {
                let nested = adjoint(&g(a), &adjoint(&g(b), &z));
                assert_eq!(nested, adjoint(&g(a).mul(&g(b)), &z), "{a:?}{b:?} on {m}");
            }
        }
        assert_eq!(adjoint(&AlgElem::one(), &z), z);
    }
}

#[test]
fn adjoint_subrepresentation() {
    let e = g(Generator::E);
    let f = g(Generator::F);
    let kf = g(Generator::K).mul(&f);
    let middle = &f.mul(&e) - &e.mul(&f).scale(&QRat::q_pow(-2));
    let q_plus = QRat::from_laurent(uqsl2_core::LaurentPoly::from_terms([(1, 1), (-1, 1)]));
    assert_eq!(adjoint(&f, &e), middle);
    assert_eq!(adjoint(&f, &middle), kf.scale(&-&q_plus));
    assert_eq!(adjoint(&e, &kf), -&middle);
    assert_eq!(adjoint(&e, &middle), e.scale(&q_plus));
}

#[test]
fn corpus_contents() {
    let c = corpus(2, 2);
    assert_eq!(c.len(), 45);
    assert!(c.contains(&PbwMonomial::new(2, -2, 2)));
    assert!(c.contains(&PbwMonomial::ONE));
}
