use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::pbw::{AlgElem, PbwMonomial};
use crate::qfield::QRat;

/// A finite Q(q)-combination of `left ⊗ right` PBW monomial pairs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorElem {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), QRat>,
}

impl TensorElem {
    pub fn zero() -> Self {
        TensorElem::default()
    }

    pub fn one() -> Self {
        Self::basis(PbwMonomial::ONE, PbwMonomial::ONE, QRat::one())
    }

    pub fn basis(l: PbwMonomial, r: PbwMonomial, c: QRat) -> Self {
        let mut t = TensorElem::zero();
        t.add_term(l, r, c);
        t
    }

    /// `a ⊗ b`.
    pub fn pure(a: &AlgElem, b: &AlgElem) -> Self {
        let mut t = TensorElem::zero();
        t.add_pure_scaled(a, b, &QRat::one());
        t
    }

    /// `self += c (a ⊗ b)`.
    pub fn add_pure_scaled(&mut self, a: &AlgElem, b: &AlgElem, c: &QRat) {
        for (ma, ca) in a.terms() {
            let cac = ca * c;
            for (mb, cb) in b.terms() {
                self.add_term(*ma, *mb, &cac * cb);
            }
        }
    }

    pub fn add_term(&mut self, l: PbwMonomial, r: PbwMonomial, c: QRat) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry((l, r)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &TensorElem) {
        for ((l, r), c) in &other.terms {
            self.add_term(*l, *r, c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &PbwMonomial, &QRat)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn coeff(&self, l: &PbwMonomial, r: &PbwMonomial) -> QRat {
        self.terms.get(&(*l, *r)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &QRat) -> TensorElem {
        if c.is_zero() {
            return TensorElem::zero();
        }
        TensorElem { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }

    /// `a ⊗ b ↦ b ⊗ a`.
    pub fn flip(&self) -> TensorElem {
        TensorElem { terms: self.terms.iter().map(|((l, r), c)| ((*r, *l), c.clone())).collect() }
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn tensor_mul(&self, rhs: &TensorElem) -> TensorElem {
        let mut out = TensorElem::zero();
        for ((l1, r1), c1) in &self.terms {
            let a = AlgElem::basis(*l1);
            let b = AlgElem::basis(*r1);
            for ((l2, r2), c2) in &rhs.terms {
                let left = a.mul(&AlgElem::basis(*l2));
                let right = b.mul(&AlgElem::basis(*r2));
                out.add_pure_scaled(&left, &right, &(c1 * c2));
            }
        }
        out
    }

    /// The multiplication map `a ⊗ b ↦ ab`.
    pub fn mul_legs(&self) -> AlgElem {
        let mut out = AlgElem::zero();
        for ((l, r), c) in &self.terms {
            out.add_assign_ref(&AlgElem::basis(*l).mul(&AlgElem::basis(*r)).scale(c));
        }
        out
    }

    /// Applies a linear functional to the left leg.
    pub fn contract_left(&self, f: impl Fn(&PbwMonomial) -> QRat) -> AlgElem {
        let mut out = AlgElem::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(*r, c * &f(l));
        }
        out
    }

    pub fn contract_right(&self, f: impl Fn(&PbwMonomial) -> QRat) -> AlgElem {
        let mut out = AlgElem::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(*l, c * &f(r));
        }
        out
    }

    /// Applies linear maps to each leg: `a ⊗ b ↦ f(a) ⊗ g(b)`.
    pub fn map_legs(&self, f: impl Fn(&PbwMonomial) -> AlgElem, g: impl Fn(&PbwMonomial) -> AlgElem) -> TensorElem {
        let mut out = TensorElem::zero();
        for ((l, r), c) in &self.terms {
            out.add_pure_scaled(&f(l), &g(r), c);
        }
        out
    }

    pub fn filter(&self, keep: impl Fn(&PbwMonomial, &PbwMonomial) -> bool) -> TensorElem {
        TensorElem { terms: self.terms.iter().filter(|((l, r), _)| keep(l, r)).map(|(k, c)| (*k, c.clone())).collect() }
    }

    /// Largest combined E+F degree of a term.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(l, r)| l.degree() + r.degree()).max()
    }

    pub fn eval(&self, q0: &BigRational) -> Result<BTreeMap<(PbwMonomial, PbwMonomial), BigRational>> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            out.insert(*k, c.eval(q0)?);
        }
        Ok(out)
    }
}

impl Add for &TensorElem {
    type Output = TensorElem;
    fn add(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &TensorElem {
    type Output = TensorElem;
    fn sub(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(*l, *r, -c);
        }
        out
    }
}

impl Neg for &TensorElem {
    type Output = TensorElem;
    fn neg(self) -> TensorElem {
        TensorElem { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl std::fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((l, r), c)| format!("({c}) {l} ⊗ {r}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson {
    left: PbwMonomial,
    right: PbwMonomial,
    coeff: QRat,
}

impl Serialize for TensorElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((l, r), c) in &self.terms {
            seq.serialize_element(&TensorTermJson { left: *l, right: *r, coeff: c.clone() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TensorElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut t = TensorElem::zero();
        for term in Vec::<TensorTermJson>::deserialize(d)? {
            t.add_term(term.left, term.right, term.coeff);
        }
        Ok(t)
    }
}

/// Flat element of the triple tensor power, used for coassociativity.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TripleElem {
    terms: BTreeMap<(PbwMonomial, PbwMonomial, PbwMonomial), QRat>,
}

impl TripleElem {
    pub fn add_term(&mut self, a: PbwMonomial, b: PbwMonomial, c: PbwMonomial, x: QRat) {
        if x.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b, c)).or_default();
        *slot += &x;
        if slot.is_zero() {
            self.terms.remove(&(a, b, c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial, PbwMonomial), &QRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
