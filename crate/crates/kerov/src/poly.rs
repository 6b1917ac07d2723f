//! Sparse multivariate polynomials over the indexed indeterminates
//! `R_i` or `C_m` (`i, m ≥ 2`) with exact rational coefficients.
//!
//! Every polynomial carries a basis tag. Arithmetic on operands with
//! different tags is a contract violation and panics: the two families
//! satisfy different conversion rules, and a silent mix would poison every
//! downstream identity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;
use crate::scalar::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Basis {
    R,
    C,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::R => "R",
            Basis::C => "C",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct Poly {
    basis: Basis,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(basis: Basis) -> Self {
        Poly { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::constant(basis, Rational::from_integer(1.into()))
    }

    pub fn constant(basis: Basis, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::unit(), value);
        }
        Poly { basis, terms }
    }

    /// The indeterminate `R_index` or `C_index`. Panics if `index < 2`.
    pub fn indeterminate(basis: Basis, index: u32) -> Self {
        Self::term(basis, Monomial::indeterminate(index), Rational::from_integer(1.into()))
    }

    pub fn term(basis: Basis, monomial: Monomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Poly { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending) monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::unit())
    }

    /// The value of a constant polynomial; `None` if any indeterminate occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.keys().all(Monomial::is_unit) {
            Some(self.constant_term())
        } else {
            None
        }
    }

    /// Largest indeterminate index occurring, if any.
    pub fn max_index(&self) -> Option<u32> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(i, _)| i))
            .max()
    }

    fn insert(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_basis(&self, other: &Poly) {
        assert_eq!(
            self.basis, other.basis,
            "mixed-basis polynomial arithmetic: {} vs {}",
            self.basis, other.basis
        );
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.basis);
        }
        Poly {
            basis: self.basis,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one(self.basis);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// True if every monomial has the given weight (the zero polynomial is
    /// homogeneous of every weight).
    pub fn is_homogeneous_of_weight(&self, weight: u64) -> bool {
        self.terms.keys().all(|m| m.weight() == weight)
    }

    /// Splits into weight-homogeneous summands, keyed by weight.
    pub fn graded_by_weight(&self) -> BTreeMap<u64, Poly> {
        let mut pieces: BTreeMap<u64, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            pieces
                .entry(m.weight())
                .or_insert_with(|| Poly::zero(self.basis))
                .insert(m.clone(), c.clone());
        }
        pieces
    }

    /// Substitutes a polynomial (in the target basis) for every
    /// indeterminate. `image(i)` is the replacement for `X_i`.
    pub fn substitute(&self, target: Basis, image: &dyn Fn(u32) -> Poly) -> Poly {
        let mut result = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for &(index, exp) in m.factors() {
                let img = image(index);
                assert_eq!(img.basis(), target, "substitution image in wrong basis");
                term = &term * &img.pow(exp);
            }
            result += term;
        }
        result
    }

    /// Evaluates at rational values of the indeterminates.
    pub fn eval(&self, value: &dyn Fn(u32) -> Rational) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(index, exp) in m.factors() {
                let x = value(index);
                for _ in 0..exp {
                    v *= &x;
                }
            }
            total += v;
        }
        total
    }

    /// Renders in descending canonical order, e.g. `R_6 + 15 R_4 + 5 R_2^2`.
    pub fn render_text(&self) -> String {
        render(self, |c, m| {
            let sym = self.basis.symbol();
            match (c, m) {
                (None, None) => "1".to_string(),
                (Some(c), None) => c,
                (None, Some(m)) => m.render(sym),
                (Some(c), Some(m)) => format!("{c} {}", m.render(sym)),
            }
        })
    }

    /// Renders as LaTeX, e.g. `\tfrac{35}{4}\,C_{5}+42\,C_{3}`.
    pub fn render_latex(&self) -> String {
        let sym = self.basis.symbol();
        let mono = |m: &Monomial| {
            m.factors()
                .iter()
                .map(|&(i, e)| {
                    if e == 1 {
                        format!("{sym}_{{{i}}}")
                    } else {
                        format!("{sym}_{{{i}}}^{{{e}}}")
                    }
                })
                .collect::<Vec<_>>()
                .join("")
        };
        let out = render(self, |c, m| {
            let c = c.map(|c| {
                if c.contains('/') {
                    let (p, q) = c.split_once('/').unwrap();
                    format!("\\tfrac{{{p}}}{{{q}}}")
                } else {
                    c
                }
            });
            match (c, m) {
                (None, None) => "1".to_string(),
                (Some(c), None) => c,
                (None, Some(m)) => mono(m),
                (Some(c), Some(m)) => format!("{c}\\,{}", mono(m)),
            }
        });
        out.replace(" + ", "+").replace(" - ", "-")
    }
}

/// Shared rendering walk: emits terms in descending canonical order with
/// signs pulled out; the callback receives the absolute coefficient (None
/// when it is 1) and the monomial (None when it is the unit).
fn render(p: &Poly, piece: impl Fn(Option<String>, Option<&Monomial>) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let one = Rational::from_integer(1.into());
    let mut out = String::new();
    for (m, c) in p.terms.iter().rev() {
        let negative = c < &Rational::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let coeff_str = if abs == one && !m.is_unit() { None } else { Some(abs.to_string()) };
        let mono = if m.is_unit() { None } else { Some(m) };
        out.push_str(&piece(coeff_str, mono));
    }
    out
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        self.check_basis(&rhs);
        for (m, c) in rhs.terms {
            self.insert(m, c);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            basis: self.basis,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_basis(rhs);
        let mut out = Poly::zero(self.basis);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Serialized form: `{"basis":"R","terms":[{"monomial":[[2,1]],"coeff":"5/2"}]}`,
/// terms in canonical order, coefficients as exact `p/q` strings.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    monomial: Vec<(u32, u32)>,
    coeff: String,
}

impl From<Poly> for PolyRepr {
    fn from(p: Poly) -> Self {
        PolyRepr {
            basis: p.basis,
            terms: p
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    monomial: m.factors().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyRepr> for Poly {
    type Error = String;
    fn try_from(repr: PolyRepr) -> Result<Poly, String> {
        let mut poly = Poly::zero(repr.basis);
        for term in repr.terms {
            for &(i, e) in &term.monomial {
                if i < 2 || e == 0 {
                    return Err(format!("invalid monomial factor ({i},{e})"));
                }
            }
            let coeff = Rational::from_str(&term.coeff)
                .map_err(|e| format!("invalid coefficient {:?}: {e}", term.coeff))?;
            poly.insert(Monomial::from_pairs(term.monomial), coeff);
        }
        Ok(poly)
    }
}
