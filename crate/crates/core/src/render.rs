//! Text, LaTeX and JSON renderings of algebra and tensor elements.
//!
//! Text puts each coefficient in front of its PBW monomial, e.g. `-q^2 E`;
//! coefficients with more than one term are parenthesized. LaTeX keeps the
//! Laurent-polynomial terms as they are and collects every term with a
//! nontrivial denominator over the lcm of those denominators. JSON is the
//! serde form of the element, so `0` renders as `[]`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::hopf::TensorElem;
use crate::pbw::{AlgElem, PbwMonomial};
use crate::qfield::{LaurentPoly, QRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected text, latex or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Latex => "latex",
            Format::Json => "json",
        })
    }
}

/// Anything `show` can print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Alg(AlgElem),
    Tensor(TensorElem),
}

impl Element {
    pub fn is_zero(&self) -> bool {
        match self {
            Element::Alg(x) => x.is_zero(),
            Element::Tensor(t) => t.is_zero(),
        }
    }
}

pub fn render(x: &Element, format: Format) -> String {
    match (x, format) {
        (Element::Alg(a), Format::Text) => text(alg_terms(a)),
        (Element::Tensor(t), Format::Text) => text(tensor_terms(t, " ⊗ ")),
        (Element::Alg(a), Format::Latex) => latex(alg_latex_terms(a)),
        (Element::Tensor(t), Format::Latex) => latex(tensor_latex_terms(t)),
        (Element::Alg(a), Format::Json) => serde_json::to_string(a).expect("serializable"),
        (Element::Tensor(t), Format::Json) => serde_json::to_string(t).expect("serializable"),
    }
}

fn alg_terms(x: &AlgElem) -> Vec<(String, &QRat)> {
    x.terms().map(|(m, c)| (m.to_string(), c)).collect()
}

fn tensor_terms<'a>(x: &'a TensorElem, sep: &str) -> Vec<(String, &'a QRat)> {
    x.terms().map(|(l, r, c)| (format!("{l}{sep}{r}"), c)).collect()
}

fn alg_latex_terms(x: &AlgElem) -> Vec<(String, &QRat)> {
    x.terms().map(|(m, c)| (latex_monomial(m), c)).collect()
}

fn tensor_latex_terms(x: &TensorElem) -> Vec<(String, &QRat)> {
    x.terms().map(|(l, r, c)| (format!("{} \\otimes {}", latex_monomial(l), latex_monomial(r)), c)).collect()
}

/// `"1"` is the unit basis element and is dropped next to a coefficient.
fn is_unit(basis: &str) -> bool {
    basis == "1"
}

/// Appends `term` to `out`, turning a leading minus into a binary one.
fn push_signed(out: &mut String, term: &str) {
    if out.is_empty() {
        out.push_str(term);
    } else if let Some(rest) = term.strip_prefix('-') {
        out.push_str(" - ");
        out.push_str(rest);
    } else {
        out.push_str(" + ");
        out.push_str(term);
    }
}

fn text(terms: Vec<(String, &QRat)>) -> String {
    let mut out = String::new();
    for (basis, c) in terms {
        push_signed(&mut out, &text_term(c, &basis));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn text_term(c: &QRat, basis: &str) -> String {
    let coeff = if c.is_laurent() && c.numer().is_monomial() { c.numer().to_string() } else { format!("({c})") };
    attach(&coeff, basis, " ")
}

/// Joins a rendered coefficient and a basis element, eliding unit factors.
fn attach(coeff: &str, basis: &str, sep: &str) -> String {
    match (coeff, is_unit(basis)) {
        (_, true) => coeff.to_string(),
        ("1", false) => basis.to_string(),
        ("-1", false) => format!("-{basis}"),
        _ => format!("{coeff}{sep}{basis}"),
    }
}

/// `F^{a}K^{b}E^{c}`, exponents of one omitted.
pub fn latex_monomial(m: &PbwMonomial) -> String {
    let mut out = String::new();
    for (sym, exp) in [("F", i64::from(m.f)), ("K", i64::from(m.k)), ("E", i64::from(m.e))] {
        match exp {
            0 => {}
            1 => out.push_str(sym),
            _ => out.push_str(&format!("{sym}^{{{exp}}}")),
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Descending exponents, e.g. `q^{4} - 2q^{2} + 1`.
pub fn latex_poly(p: &LaurentPoly) -> String {
    let mut out = String::new();
    for (e, c) in p.terms().rev() {
        let mag = c.abs();
        let body = match (e, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => "q".to_string(),
            (1, false) => format!("{mag}q"),
            (_, true) => format!("q^{{{e}}}"),
            (_, false) => format!("{mag}q^{{{e}}}"),
        };
        let term = if c.is_negative() { format!("-{body}") } else { body };
        push_signed(&mut out, &term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn latex_coeff_term(p: &LaurentPoly, basis: &str) -> String {
    let coeff = if p.is_monomial() { latex_poly(p) } else { format!("\\left({}\\right)", latex_poly(p)) };
    attach(&coeff, basis, " ")
}

fn latex(terms: Vec<(String, &QRat)>) -> String {
    let mut out = String::new();
    let mut den = LaurentPoly::one();
    for (_, c) in &terms {
        if !c.is_laurent() {
            den = den.lcm(c.denom());
        }
    }
    let common = QRat::from_laurent(den.clone());
    let mut over = String::new();
    for (basis, c) in &terms {
        if c.is_laurent() {
            push_signed(&mut out, &latex_coeff_term(c.numer(), basis));
        } else {
            let scaled = *c * &common;
            push_signed(&mut over, &latex_coeff_term(scaled.numer(), basis));
        }
    }
    if !over.is_empty() {
        push_signed(&mut out, &format!("\\frac{{{over}}}{{{}}}", latex_poly(&den)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
