//! Single-swap rewriting of generator words into PBW normal form.

use std::collections::BTreeMap;

use super::{AlgElem, Generator, PbwMonomial};
use crate::qfield::QRat;

/// Which out-of-order adjacent pair to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
}

fn rank(g: Generator) -> u8 {
    match g {
        Generator::F => 0,
        Generator::K | Generator::Kinv => 1,
        Generator::E => 2,
    }
}

fn is_redex(a: Generator, b: Generator) -> bool {
    use Generator::*;
    rank(a) > rank(b) || matches!((a, b), (K, Kinv) | (Kinv, K))
}

/// Rewrite of one adjacent pair as a list of `(replacement, coefficient)`.
fn rewrite_pair(a: Generator, b: Generator) -> Vec<(Vec<Generator>, QRat)> {
    use Generator::*;
    match (a, b) {
        (K, Kinv) | (Kinv, K) => vec![(vec![], QRat::one())],
        (K, F) => vec![(vec![F, K], QRat::q_pow(-2))],
        (Kinv, F) => vec![(vec![F, Kinv], QRat::q_pow(2))],
        (E, K) => vec![(vec![K, E], QRat::q_pow(-2))],
        (E, Kinv) => vec![(vec![Kinv, E], QRat::q_pow(2))],
        (E, F) => {
            let inv = QRat::q_minus_qinv().inv().expect("q - q^-1 is nonzero");
            vec![(vec![F, E], QRat::one()), (vec![K], inv.clone()), (vec![Kinv], -inv)]
        }
        _ => unreachable!("not a redex: {a}{b}"),
    }
}

fn find_redex(word: &[Generator], strategy: RewriteStrategy) -> Option<usize> {
    let mut idx = (0..word.len().saturating_sub(1)).filter(|&i| is_redex(word[i], word[i + 1]));
    match strategy {
        RewriteStrategy::Leftmost => idx.next(),
        RewriteStrategy::Rightmost => idx.next_back(),
    }
}

fn normal_word_to_monomial(word: &[Generator]) -> PbwMonomial {
    let mut m = PbwMonomial::ONE;
    for g in word {
        match g {
            Generator::F => m.f += 1,
            Generator::K => m.k += 1,
            Generator::Kinv => m.k -= 1,
            Generator::E => m.e += 1,
        }
    }
    m
}

/// The product of `word` in PBW normal form, using leftmost rewriting.
pub fn normalize_word(word: &[Generator]) -> AlgElem {
    normalize_word_with(word, RewriteStrategy::Leftmost)
}

pub fn normalize_word_with(word: &[Generator], strategy: RewriteStrategy) -> AlgElem {
    let mut pending: BTreeMap<Vec<Generator>, QRat> = BTreeMap::new();
    pending.insert(word.to_vec(), QRat::one());
    let mut out = AlgElem::zero();
    while let Some((w, c)) = pending.pop_first() {
        match find_redex(&w, strategy) {
            None => out.add_term(normal_word_to_monomial(&w), c),
            Some(i) => {
                for (rep, rc) in rewrite_pair(w[i], w[i + 1]) {
                    let mut nw = Vec::with_capacity(w.len() + 1);
                    nw.extend_from_slice(&w[..i]);
                    nw.extend_from_slice(&rep);
                    nw.extend_from_slice(&w[i + 2..]);
                    let nc = &c * &rc;
                    let slot = pending.entry(nw).or_insert_with(QRat::zero);
                    *slot += &nc;
                }
                pending.retain(|_, v| !v.is_zero());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn kf_word() {
        assert_eq!(normalize_word(&[K, F]), AlgElem::monomial(PbwMonomial::new(1, 1, 0), QRat::q_pow(-2)));
    }

    #[test]
    fn commutator_word() {
        let inv = QRat::q_minus_qinv().inv().unwrap();
        let expected = &AlgElem::monomial(PbwMonomial::new(0, 1, 0), inv.clone())
            + &AlgElem::monomial(PbwMonomial::new(0, -1, 0), -inv);
        assert_eq!(&normalize_word(&[E, F]) - &normalize_word(&[F, E]), expected);
    }

    #[test]
    fn trivial_words() {
        assert_eq!(normalize_word(&[K, Kinv]), AlgElem::one());
        assert_eq!(normalize_word(&[]), AlgElem::one());
        assert_eq!(normalize_word(&[F, K, K, E]), AlgElem::basis(PbwMonomial::new(1, 2, 1)));
    }

    #[test]
    fn rewriting_agrees_with_table_multiplication() {
        let word = [E, E, Kinv, F, E, F, F, K];
        let by_mul = word.iter().fold(AlgElem::one(), |acc, g| acc.mul(&AlgElem::generator(*g)));
        assert_eq!(normalize_word(&word), by_mul);
    }
}
