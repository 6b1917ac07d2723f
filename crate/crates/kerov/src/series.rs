//! Truncated univariate formal power series with polynomial coefficients.
//!
//! A [`Series`] of order `N` stores the exact coefficients of degrees
//! `0..=N`; nothing beyond the order is ever inferred, and asking for a
//! coefficient past the order panics rather than returning something
//! possibly incomplete. Binary operations truncate to the minimum operand
//! order. The variable name is documentation only, but binary operations
//! assert it matches as a cheap misuse check.
//!
//! Besides ring arithmetic this module provides reciprocals, composition,
//! the Euler operator `D = t d/dt`, and compositional inversion by the
//! Lagrange coefficient formula: when `f = y/ψ(y)` with invertible `ψ(0)`,
//! the inverse `g` satisfies `[z^n] g = (1/n) [y^{n-1}] ψ(y)^n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;

use crate::poly::{Basis, Poly};
use crate::scalar::{frac, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    var: &'static str,
    coeffs: Vec<Poly>, // length order + 1
}

impl Series {
    pub fn zero(var: &'static str, basis: Basis, order: usize) -> Self {
        Series { var, coeffs: vec![Poly::zero(basis); order + 1] }
    }

    pub fn one(var: &'static str, basis: Basis, order: usize) -> Self {
        let mut s = Self::zero(var, basis, order);
        s.coeffs[0] = Poly::one(basis);
        s
    }

    /// The series `c · t^degree + O(t^{order+1})`. Panics if `degree > order`.
    pub fn monomial(var: &'static str, degree: usize, coeff: Poly, order: usize) -> Self {
        assert!(degree <= order, "monomial degree {degree} exceeds order {order}");
        let mut s = Self::zero(var, coeff.basis(), order);
        s.coeffs[degree] = coeff;
        s
    }

    pub fn from_coeffs(var: &'static str, coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the degree-0 coefficient");
        let basis = coeffs[0].basis();
        assert!(coeffs.iter().all(|c| c.basis() == basis), "mixed-basis series coefficients");
        Series { var, coeffs }
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn basis(&self) -> Basis {
        self.coeffs[0].basis()
    }

    /// The exact coefficient at degree `d`. Panics if `d` exceeds the order.
    pub fn coeff(&self, d: usize) -> &Poly {
        assert!(
            d <= self.order(),
            "coefficient at degree {d} requested from a series of order {}",
            self.order()
        );
        &self.coeffs[d]
    }

    /// The coefficient at degree `d` as a rational; panics if it is not a
    /// constant polynomial.
    pub fn rational_coeff(&self, d: usize) -> Rational {
        self.coeff(d)
            .as_constant()
            .expect("series coefficient is not a constant")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn truncated(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot extend a series beyond its stored order");
        Series { var: self.var, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, s: &Rational) -> Series {
        self.map(|c| c.scale(s))
    }

    pub fn mul_poly(&self, p: &Poly) -> Series {
        self.map(|c| c * p)
    }

    fn map(&self, f: impl Fn(&Poly) -> Poly) -> Series {
        Series { var: self.var, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Multiplies by `t^k`; order grows by `k` (the shifted coefficients
    /// stay exact).
    pub fn shift_up(&self, k: usize) -> Series {
        let basis = self.basis();
        let mut coeffs = vec![Poly::zero(basis); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { var: self.var, coeffs }
    }

    /// Divides by `t^k`; panics unless the first `k` coefficients vanish.
    /// Order shrinks by `k`.
    pub fn shift_down(&self, k: usize) -> Series {
        assert!(k <= self.order(), "cannot shift a series of order {} down by {k}", self.order());
        assert!(
            self.coeffs[..k].iter().all(Poly::is_zero),
            "shift_down would discard nonzero low-order coefficients"
        );
        Series { var: self.var, coeffs: self.coeffs[k..].to_vec() }
    }

    fn check_compatible(&self, other: &Series) {
        assert_eq!(self.var, other.var, "series in different variables");
        assert_eq!(self.basis(), other.basis(), "mixed-basis series arithmetic");
    }

    /// The Euler operator `D = t d/dt`: multiplies the degree-`m`
    /// coefficient by `m`. Order is preserved.
    pub fn euler_d(&self) -> Series {
        Series {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| c.scale(&Rational::from_integer(m.into())))
                .collect(),
        }
    }

    /// Multiplicative inverse: `self · result = 1` up to the order.
    /// Panics unless the constant coefficient is a nonzero rational.
    pub fn reciprocal(&self) -> Series {
        let a0 = self
            .coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .expect("series reciprocal requires a nonzero constant term");
        let order = self.order();
        let basis = self.basis();
        let inv_a0 = Rational::from_integer(1.into()) / a0;
        let mut out = vec![Poly::zero(basis); order + 1];
        out[0] = Poly::constant(basis, inv_a0.clone());
        let neg_inv_a0 = -inv_a0;
        for n in 1..=order {
            let mut acc = Poly::zero(basis);
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc += &self.coeffs[k] * &out[n - k];
            }
            out[n] = acc.scale(&neg_inv_a0);
        }
        Series { var: self.var, coeffs: out }
    }

    /// Composition `self(inner)`. Panics unless `inner(0) = 0`.
    /// Result order is the minimum of the operand orders and the result
    /// takes `inner`'s variable.
    pub fn compose(&self, inner: &Series) -> Series {
        assert!(
            inner.coeffs[0].is_zero(),
            "series composition requires the inner series to vanish at 0"
        );
        assert_eq!(self.basis(), inner.basis(), "mixed-basis series composition");
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        // Horner from the top degree down; each step costs one truncated product.
        let mut result = Series::monomial(inner.var, 0, self.coeffs[self.order()].clone(), order);
        for d in (0..self.order()).rev() {
            result = &result * &inner;
            if !self.coeffs[d].is_zero() {
                result.coeffs[0] += self.coeffs[d].clone();
            }
        }
        result
    }

    /// Compositional inverse by term-by-term Lagrange inversion.
    ///
    /// Requires `self = c·t + …` with `c` a nonzero rational. Writing
    /// `self = y/ψ(y)`, the inverse has `[z^n] = (1/n)[y^{n-1}] ψ(y)^n`.
    /// Both compositions with the result give the identity up to the order.
    pub fn reversion(&self) -> Series {
        assert!(
            self.coeffs[0].is_zero(),
            "series reversion requires zero constant term"
        );
        self.coeffs
            .get(1)
            .and_then(Poly::as_constant)
            .filter(|c| !c.is_zero())
            .expect("series reversion requires a nonzero rational linear coefficient");
        let order = self.order();
        let basis = self.basis();
        // ψ = t / self, a unit series exact to order - 1.
        let psi = self.shift_down(1).reciprocal();
        let mut out = vec![Poly::zero(basis); order + 1];
        if order >= 1 {
            let mut psi_pow = psi.clone(); // ψ^n as n advances
            out[1] = psi_pow.coeff(0).clone();
            for n in 2..=order {
                psi_pow = &psi_pow * &psi;
                out[n] = psi_pow.coeff(n - 1).scale(&frac(1, n as i64));
            }
        }
        Series { var: self.var, coeffs: out }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.check_compatible(rhs);
        let order = self.order().min(rhs.order());
        Series {
            var: self.var,
            coeffs: (0..=order).map(|d| &self.coeffs[d] + &rhs.coeffs[d]).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self + &(-rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.map(|c| -c)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.check_compatible(rhs);
        let order = self.order().min(rhs.order());
        let basis = self.basis();
        let mut coeffs = vec![Poly::zero(basis); order + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(order + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate().take(order + 1 - a) {
                if cb.is_zero() {
                    continue;
                }
                coeffs[a + b] += ca * cb;
            }
        }
        Series { var: self.var, coeffs }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "({})·{}^{}", c, self.var, d)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}
