//! Transmuted (braided) structures on U_q(sl_2), computed from the R-matrix
//!
//! ```text
//! R = q^(H⊗H/2) Σ_n c_n E^n ⊗ F^n,   c_n = q^(n(n+1)/2) (1 - q^-2)^n / [n]_q!
//! ```
//!
//! truncated at a [`TruncationOrder`]. R acts on `x ⊗ y` through the adjoint
//! action on each leg. The Cartan element `H` is never represented: on a
//! tensor of weight components `(w1, w2)` the factor `q^(H⊗H/2)` is the
//! scalar `q^(w1 w2 / 2)`, and where one leg of it multiplies instead of
//! acting (braided coproduct and antipode) it resums to `K^(±μ/2)`, `μ`
//! being the weight of the acted-on leg after `ad_{E^n}`.
//!
//! Conventions:
//! * `braiding(x, y) = Σ R_2 ▷ y ⊗ R_1 ▷ x` (flip after the R-action);
//! * braided product `(a ⊗ b)(c ⊗ d) = a Ψ(b ⊗ c) d` with `Ψ = braiding`;
//! * `Δ̲(a) = Σ a_(1) S(R_2) ⊗ R_1 ▷ a_(2)`, `S̲(a) = Σ R_2 S(R_1 ▷ a)`;
//! * `ad̲_X(Y) = Σ X_1 (R_2 ▷ Y)(R_1 ▷ S̲ X_2)` over `Δ̲(X) = Σ X_1 ⊗ X_2`.
//!
//! Every R-sum in one computation is cut at the same order `N`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{adjoint_powers, antipode_monomial, coproduct, TensorElem};
use crate::pbw::{casimir, AlgElem, Generator, PbwMonomial};
use crate::qfield::{qfactorial, LaurentPoly, QRat};

/// Cutoff `N` on the R-matrix summation index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruncationOrder(pub u32);

impl TruncationOrder {
    pub fn n_max(self) -> u32 {
        self.0
    }

    /// Combined E+F degree from which terms count as truncation tail:
    /// `2 (N - 1)`.
    pub fn tail_threshold(self) -> u32 {
        2 * self.0.saturating_sub(1)
    }
}

impl fmt::Display for TruncationOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A truncated braided quantity together with the order it was computed at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedSeries<T> {
    pub order: TruncationOrder,
    pub value: T,
}

/// The index-`n` summand `c_n E^n ⊗ F^n` of R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSummand {
    pub n: u32,
    pub coeff: QRat,
}

impl RSummand {
    pub fn new(n: u32) -> Self {
        RSummand { n, coeff: r_coefficient(n) }
    }

    /// `ad_{E^n}(x)`.
    pub fn e_part(&self, x: &AlgElem) -> AlgElem {
        adjoint_powers(Generator::E, x, self.n).into_iter().nth(self.n as usize).unwrap_or_default()
    }

    /// `ad_{F^n}(y)`.
    pub fn f_part(&self, y: &AlgElem) -> AlgElem {
        adjoint_powers(Generator::F, y, self.n).into_iter().nth(self.n as usize).unwrap_or_default()
    }
}

/// `c_n = q^(n(n+1)/2) (1 - q^-2)^n / [n]_q!`, memoized.
pub fn r_coefficient(n: u32) -> QRat {
    static TABLE: OnceLock<RwLock<Vec<QRat>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| RwLock::new(Vec::new()));
    if let Some(c) = table.read().unwrap().get(n as usize) {
        return c.clone();
    }
    let mut t = table.write().unwrap();
    let one_minus = QRat::from_laurent(LaurentPoly::from_terms([(0, 1), (-2, -1)]));
    while t.len() <= n as usize {
        let k = t.len() as u32;
        let nn = i64::from(k);
        let c = &one_minus.pow(k as i32).shift(nn * (nn + 1) / 2) / &qfactorial(k);
        t.push(c);
    }
    t[n as usize].clone()
}

/// `q^(w1 w2 / 2)` for even weights.
pub fn cartan_pair_factor(w1: i64, w2: i64) -> Result<QRat> {
    for w in [w1, w2] {
        if w % 2 != 0 {
            return Err(Error::OddWeight(w));
        }
    }
    Ok(QRat::q_pow((w1 / 2) * w2))
}

/// Index-by-index components of the R-action on `x ⊗ y`.
pub fn r_act_components(x: &AlgElem, y: &AlgElem, order: TruncationOrder) -> Vec<TensorElem> {
    let n_max = order.n_max();
    let mut out = vec![TensorElem::zero(); n_max as usize + 1];
    if x.is_zero() || y.is_zero() {
        return out;
    }
    let ex = adjoint_powers(Generator::E, x, n_max);
    let fy = adjoint_powers(Generator::F, y, n_max);
    for (n, (a, b)) in ex.iter().zip(&fy).enumerate() {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let cn = r_coefficient(n as u32);
        let slot = &mut out[n];
        for (m1, c1) in a.terms() {
            let c1n = c1 * &cn;
            for (m2, c2) in b.terms() {
                // cartan_pair_factor(w1, w2) is the monomial q^(w1 w2 / 2)
                let c = (&c1n * c2).shift((m1.weight() / 2) * m2.weight());
                slot.add_term(*m1, *m2, c);
            }
        }
    }
    out
}

/// `R(x ⊗ y) = Σ R_1 ▷ x ⊗ R_2 ▷ y`, truncated.
pub fn r_act(x: &AlgElem, y: &AlgElem, order: TruncationOrder) -> TensorElem {
    sum_tensors(r_act_components(x, y, order))
}

/// `Ψ(x ⊗ y) = Σ R_2 ▷ y ⊗ R_1 ▷ x`.
pub fn braiding(x: &AlgElem, y: &AlgElem, order: TruncationOrder) -> TensorElem {
    if let Some(c) = x.as_scalar() {
        return TensorElem::pure(y, &AlgElem::one()).scale(&c);
    }
    if let Some(c) = y.as_scalar() {
        return TensorElem::pure(&AlgElem::one(), x).scale(&c);
    }
    r_act(x, y, order).flip()
}

/// Product in the braided tensor square: `(a ⊗ b)(c ⊗ d) = a Ψ(b ⊗ c) d`.
pub fn braided_mul(t1: &TensorElem, t2: &TensorElem, order: TruncationOrder) -> TensorElem {
    let mut psi_cache: HashMap<(PbwMonomial, PbwMonomial), TensorElem> = HashMap::new();
    let mut out = TensorElem::zero();
    for (a1, b1, c1) in t1.terms() {
        for (a2, b2, c2) in t2.terms() {
            let psi = psi_cache
                .entry((*b1, *a2))
                .or_insert_with(|| braiding(&AlgElem::basis(*b1), &AlgElem::basis(*a2), order));
            let c = c1 * c2;
            for (u, v, cu) in psi.terms() {
                let left = AlgElem::basis(*a1).mul(&AlgElem::basis(*u));
                let right = AlgElem::basis(*v).mul(&AlgElem::basis(*b2));
                out.add_pure_scaled(&left, &right, &(&c * cu));
            }
        }
    }
    out
}

fn sum_tensors(parts: Vec<TensorElem>) -> TensorElem {
    parts.into_iter().fold(TensorElem::zero(), |mut acc, t| {
        acc.add_assign_ref(&t);
        acc
    })
}

fn sum_algs(parts: Vec<AlgElem>) -> AlgElem {
    parts.into_iter().fold(AlgElem::zero(), |mut acc, t| {
        acc.add_assign_ref(&t);
        acc
    })
}

/// `S(F^n) = (-1)^n (K F)^n`.
fn antipode_f_power(n: u32) -> AlgElem {
    antipode_monomial(&PbwMonomial::new(n, 0, 0))
}

/// Index-by-index components of `Δ̲(x)`:
/// component `n` is `c_n Σ a_(1) S(F^n) K^(-μ/2) ⊗ [ad_{E^n} a_(2)]_μ`.
pub fn braided_coproduct_components(x: &AlgElem, order: TruncationOrder) -> Vec<TensorElem> {
    let n_max = order.n_max();
    let mut out = vec![TensorElem::zero(); n_max as usize + 1];
    if x.is_zero() {
        return out;
    }
    let s_f: Vec<AlgElem> = (0..=n_max).map(antipode_f_power).collect();
    let mut ad_cache: HashMap<PbwMonomial, Vec<AlgElem>> = HashMap::new();
    let mut left_cache: HashMap<(PbwMonomial, u32, i64), AlgElem> = HashMap::new();
    for (a1, a2, c) in coproduct(x).terms() {
        let powers = ad_cache.entry(*a2).or_insert_with(|| adjoint_powers(Generator::E, &AlgElem::basis(*a2), n_max));
        for (n, part) in powers.iter().enumerate() {
            let cn = &r_coefficient(n as u32) * c;
            for (m, cm) in part.terms() {
                let mu = m.weight();
                let left = left_cache.entry((*a1, n as u32, mu)).or_insert_with(|| {
                    AlgElem::basis(*a1).mul(&s_f[n]).mul(&AlgElem::basis(PbwMonomial::new(0, -(mu / 2) as i32, 0)))
                });
                out[n].add_pure_scaled(left, &AlgElem::basis(*m), &(&cn * cm));
            }
        }
    }
    out
}

pub fn braided_coproduct(x: &AlgElem, order: TruncationOrder) -> BraidedSeries<TensorElem> {
    BraidedSeries { order, value: sum_tensors(braided_coproduct_components(x, order)) }
}

/// Index-by-index components of `S̲(x)`:
/// component `n` is `c_n Σ K^(μ/2) F^n S([ad_{E^n} x]_μ)`.
pub fn braided_antipode_components(x: &AlgElem, order: TruncationOrder) -> Vec<AlgElem> {
    let n_max = order.n_max();
    let mut out = vec![AlgElem::zero(); n_max as usize + 1];
    if x.is_zero() {
        return out;
    }
    let mut prefix_cache: HashMap<(u32, i64), AlgElem> = HashMap::new();
    for (m, c) in x.terms() {
        let powers = adjoint_powers(Generator::E, &AlgElem::basis(*m), n_max);
        for (n, part) in powers.iter().enumerate() {
            let cn = &r_coefficient(n as u32) * c;
            for (pm, pc) in part.terms() {
                let mu = pm.weight();
                let prefix = prefix_cache.entry((n as u32, mu)).or_insert_with(|| {
                    AlgElem::basis(PbwMonomial::new(0, (mu / 2) as i32, 0))
                        .mul(&AlgElem::basis(PbwMonomial::new(n as u32, 0, 0)))
                });
                let term = prefix.mul(&antipode_monomial(pm));
                out[n].add_assign_ref(&term.scale(&(&cn * pc)));
            }
        }
    }
    out
}

pub fn braided_antipode(x: &AlgElem, order: TruncationOrder) -> BraidedSeries<AlgElem> {
    BraidedSeries { order, value: sum_algs(braided_antipode_components(x, order)) }
}

/// `ad_{g^k}(x)` for `k = 0..=n_max`, each split into weight components.
fn split_powers(gen: Generator, x: &AlgElem, n_max: u32) -> WeightedPowers {
    adjoint_powers(gen, x, n_max).iter().map(|p| p.weight_split().into_iter().collect()).collect()
}

/// Per power `k`, the `(weight, component)` pairs of an adjoint power.
type WeightedPowers = Vec<Vec<(i64, AlgElem)>>;

/// [`split_powers`] for `E` with power `n` already multiplied by `c_n`.
fn r_weighted_e_powers(x: &AlgElem, n_max: u32) -> WeightedPowers {
    let mut out = split_powers(Generator::E, x, n_max);
    for (n, parts) in out.iter_mut().enumerate() {
        let cn = r_coefficient(n as u32);
        for (_, p) in parts.iter_mut() {
            *p = p.scale(&cn);
        }
    }
    out
}

/// `·Ψ(x ⊗ y) = Σ_n c_n (ad_{F^n} y)(ad_{E^n} x)` with the Cartan factor
/// applied per weight pair; `ex` comes from [`r_weighted_e_powers`] and `fy`
/// from [`split_powers`].
fn multiplied_braiding(ex: &[Vec<(i64, AlgElem)>], fy: &[Vec<(i64, AlgElem)>]) -> AlgElem {
    let mut out = AlgElem::zero();
    for (a, b) in ex.iter().zip(fy) {
        for (wy, yb) in b {
            for (wx, xa) in a {
                out.add_assign_ref(&yb.mul(xa).shift((wx / 2) * wy));
            }
        }
    }
    out
}

/// `·(Ψ(S̲x ⊗ S̲y))`, which should reproduce `S̲(xy)`.
pub fn braided_antipode_product(x: &AlgElem, y: &AlgElem, order: TruncationOrder) -> BraidedSeries<AlgElem> {
    let n = order.n_max();
    let sx = braided_antipode(x, order).value;
    let sy = braided_antipode(y, order).value;
    let value = multiplied_braiding(&r_weighted_e_powers(&sx, n), &split_powers(Generator::F, &sy, n));
    BraidedSeries { order, value }
}

/// The target-independent part of `ad̲_x`: writing `Δ̲(x) = Σ x_1 ⊗ r(x_1)`
/// with distinct left monomials `x_1`, the weighted powers
/// `c_k ad_{E^k} S̲(r(x_1))`.
struct AdjointKernel {
    legs: Vec<(PbwMonomial, WeightedPowers)>,
}

fn adjoint_kernel(x: &AlgElem, order: TruncationOrder) -> Arc<AdjointKernel> {
    type Cache = RwLock<HashMap<(AlgElem, TruncationOrder), Arc<AdjointKernel>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (x.clone(), order);
    if let Some(k) = cache.read().unwrap().get(&key) {
        return k.clone();
    }
    let mut right: BTreeMap<PbwMonomial, AlgElem> = BTreeMap::new();
    for (x1, x2, c) in braided_coproduct(x, order).value.terms() {
        right.entry(*x1).or_default().add_term(*x2, c.clone());
    }
    let legs = right
        .into_iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|(x1, r)| {
            let s = braided_antipode(&r, order).value;
            (x1, r_weighted_e_powers(&s, order.n_max()))
        })
        .collect();
    let kernel = Arc::new(AdjointKernel { legs });
    cache.write().unwrap().insert(key, kernel.clone());
    kernel
}

/// `ad̲_x(y) = ·² (id ⊗ Ψ)(id ⊗ S̲ ⊗ id)(Δ̲ ⊗ id)(x ⊗ y)`.
///
/// The target-independent part is memoized per `(x, order)`, so sweeping
/// many targets with the same actor is cheap.
pub fn braided_adjoint(x: &AlgElem, y: &AlgElem, order: TruncationOrder) -> BraidedSeries<AlgElem> {
    let mut out = AlgElem::zero();
    if x.is_zero() || y.is_zero() {
        return BraidedSeries { order, value: out };
    }
    let kernel = adjoint_kernel(x, order);
    let fy = split_powers(Generator::F, y, order.n_max());
    for (x1, ex) in &kernel.legs {
        out.add_assign_ref(&AlgElem::basis(*x1).mul(&multiplied_braiding(ex, &fy)));
    }
    BraidedSeries { order, value: out }
}

pub fn braided_casimir_coproduct(order: TruncationOrder) -> BraidedSeries<TensorElem> {
    braided_coproduct(&casimir(), order)
}

pub fn braided_casimir_antipode(order: TruncationOrder) -> BraidedSeries<AlgElem> {
    braided_antipode(&casimir(), order)
}

/// Drops the terms whose E+F degree reaches the tail threshold of `order`.
pub fn tail_filter(x: &AlgElem, order: TruncationOrder) -> AlgElem {
    let t = order.tail_threshold();
    x.filter(|m| m.degree() < t)
}

/// Tensor version of [`tail_filter`]; the degree is summed over both legs.
pub fn tail_filter_tensor(x: &TensorElem, order: TruncationOrder) -> TensorElem {
    let t = order.tail_threshold();
    x.filter(|l, r| l.degree() + r.degree() < t)
}
