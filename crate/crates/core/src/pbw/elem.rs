use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Generator, PbwMonomial};
use crate::error::Result;
use crate::qfield::{qint, QRat};

/// A finite Q(q)-linear combination of PBW monomials.
///
/// Terms are kept in a sorted map keyed by `(f, k, e)`; zero coefficients
/// are never stored, so the empty map is the zero element.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgElem {
    terms: BTreeMap<PbwMonomial, QRat>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem::default()
    }

    pub fn one() -> Self {
        Self::scalar(QRat::one())
    }

    pub fn scalar(c: QRat) -> Self {
        Self::monomial(PbwMonomial::ONE, c)
    }

    pub fn monomial(m: PbwMonomial, c: QRat) -> Self {
        let mut x = AlgElem::zero();
        x.add_term(m, c);
        x
    }

    pub fn basis(m: PbwMonomial) -> Self {
        Self::monomial(m, QRat::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::basis(match g {
            Generator::E => PbwMonomial::new(0, 0, 1),
            Generator::F => PbwMonomial::new(1, 0, 0),
            Generator::K => PbwMonomial::new(0, 1, 0),
            Generator::Kinv => PbwMonomial::new(0, -1, 0),
        })
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, QRat)>>(terms: I) -> Self {
        let mut x = AlgElem::zero();
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    /// Adds `c m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: PbwMonomial, c: QRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &AlgElem) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
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

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &QRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> QRat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// True if the element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<QRat> {
        match self.terms.len() {
            0 => Some(QRat::zero()),
            1 => self.terms.get(&PbwMonomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &QRat) -> AlgElem {
        if c.is_zero() {
            return AlgElem::zero();
        }
        AlgElem { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Multiplies every coefficient by `q^k`.
    pub fn shift(&self, k: i64) -> AlgElem {
        AlgElem { terms: self.terms.iter().map(|(m, x)| (*m, x.shift(k))).collect() }
    }

    /// Largest E-degree plus F-degree among the terms.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(PbwMonomial::degree).max()
    }

    /// Keeps only the terms for which `keep` holds.
    pub fn filter(&self, keep: impl Fn(&PbwMonomial) -> bool) -> AlgElem {
        AlgElem { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Decomposition into weight-homogeneous parts.
    pub fn weight_split(&self) -> BTreeMap<i64, AlgElem> {
        let mut out: BTreeMap<i64, AlgElem> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight()).or_default().terms.insert(*m, c.clone());
        }
        out
    }

    /// The weight, if every term has the same one. The zero element has none.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut ws = self.terms.keys().map(PbwMonomial::weight);
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }

    pub fn mul(&self, rhs: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c = c1 * c2;
                mul_monomials_into(&mut out, m1, m2, &c);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> AlgElem {
        (0..n).fold(AlgElem::one(), |acc, _| acc.mul(self))
    }

    /// Coefficients specialized at `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BTreeMap<PbwMonomial, BigRational>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            out.insert(*m, c.eval(q0)?);
        }
        Ok(out)
    }
}

type EfTable = HashMap<(u32, u32), Arc<Vec<(PbwMonomial, QRat)>>>;

fn ef_cache() -> &'static RwLock<EfTable> {
    static CACHE: OnceLock<RwLock<EfTable>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `E F^x = F^x E + [x]/(q - q^-1) F^(x-1) (q^(1-x) K - q^(x-1) K^-1)`,
/// applied to `E * (F^x K^y E^z)`.
fn left_mul_e(src: &[(PbwMonomial, QRat)]) -> Vec<(PbwMonomial, QRat)> {
    let mut out = AlgElem::zero();
    let d = QRat::q_minus_qinv();
    for (m, c) in src {
        let (x, y, z) = (m.f, m.k, m.e);
        out.add_term(PbwMonomial::new(x, y, z + 1), c.shift(-2 * i64::from(y)));
        if x > 0 {
            let s = &(c * &qint(x)) / &d;
            let xi = i64::from(x);
            out.add_term(PbwMonomial::new(x - 1, y + 1, z), s.shift(1 - xi));
            out.add_term(PbwMonomial::new(x - 1, y - 1, z), -s.shift(xi - 1));
        }
    }
    out.terms.into_iter().collect()
}

/// Normal form of `E^c F^d`, memoized.
pub(crate) fn ef_normal_form(c: u32, d: u32) -> Arc<Vec<(PbwMonomial, QRat)>> {
    if let Some(v) = ef_cache().read().unwrap().get(&(c, d)) {
        return v.clone();
    }
    let mut start = c;
    let mut cur: Option<Arc<Vec<(PbwMonomial, QRat)>>> = None;
    {
        let cache = ef_cache().read().unwrap();
        while start > 0 {
            start -= 1;
            if let Some(v) = cache.get(&(start, d)) {
                cur = Some(v.clone());
                break;
            }
        }
    }
    let mut cur = cur.unwrap_or_else(|| {
        start = 0;
        Arc::new(vec![(PbwMonomial::new(d, 0, 0), QRat::one())])
    });
    let mut fresh = Vec::new();
    for i in start + 1..=c {
        cur = Arc::new(left_mul_e(&cur));
        fresh.push(((i, d), cur.clone()));
    }
    let mut cache = ef_cache().write().unwrap();
    cache.entry((0, d)).or_insert_with(|| Arc::new(vec![(PbwMonomial::new(d, 0, 0), QRat::one())]));
    for (k, v) in fresh {
        cache.entry(k).or_insert(v);
    }
    cur
}

/// `out += c * (F^a K^b E^e1)(F^d K^h E^e2)`.
fn mul_monomials_into(out: &mut AlgElem, m1: &PbwMonomial, m2: &PbwMonomial, c: &QRat) {
    if m1.e == 0 || m2.f == 0 {
        // F^a K^b . K^h E^e2 after moving K^b past F^d or E^e1 past K^h
        let shift = -2 * i64::from(m1.k) * i64::from(m2.f) - 2 * i64::from(m1.e) * i64::from(m2.k);
        out.add_term(PbwMonomial::new(m1.f + m2.f, m1.k + m2.k, m1.e + m2.e), c.shift(shift));
        return;
    }
    let table = ef_normal_form(m1.e, m2.f);
    for (t, tc) in table.iter() {
        // K^b F^x = q^(-2bx) F^x K^b,  E^z K^h = q^(-2zh) K^h E^z
        let shift = -2 * i64::from(m1.k) * i64::from(t.f) - 2 * i64::from(t.e) * i64::from(m2.k);
        out.add_term(PbwMonomial::new(m1.f + t.f, m1.k + t.k + m2.k, t.e + m2.e), (c * tc).shift(shift));
    }
}

impl Add for &AlgElem {
    type Output = AlgElem;
    fn add(self, rhs: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &AlgElem {
    type Output = AlgElem;
    fn sub(self, rhs: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        AlgElem { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl std::fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c}) {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    f: u32,
    k: i32,
    e: u32,
    coeff: QRat,
}

impl Serialize for AlgElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermJson { f: m.f, k: m.k, e: m.e, coeff: c.clone() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for AlgElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<TermJson>::deserialize(d)?;
        Ok(AlgElem::from_terms(raw.into_iter().map(|t| (PbwMonomial::new(t.f, t.k, t.e), t.coeff))))
    }
}
