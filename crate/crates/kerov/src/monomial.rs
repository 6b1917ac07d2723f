//! Monomials in an indexed family of indeterminates `X_2, X_3, …`.
//!
//! A monomial is a sorted list of `(index, exponent)` pairs with indices
//! strictly increasing and exponents ≥ 1; the empty list is the unit. The
//! weight of `X_{j_1}…X_{j_i}` is `j_1 + … + j_i` (indices summed with
//! multiplicity), which is the grading used throughout.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    /// The unit monomial (empty product).
    pub fn unit() -> Self {
        Monomial { factors: Vec::new() }
    }

    /// The single indeterminate `X_index`. Panics if `index < 2`.
    pub fn indeterminate(index: u32) -> Self {
        Self::from_pairs([(index, 1)])
    }

    /// Builds a monomial from `(index, exponent)` pairs in any order,
    /// merging repeated indices and dropping zero exponents.
    /// Panics on an index < 2.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut factors: Vec<(u32, u32)> = Vec::new();
        for (index, exp) in pairs {
            assert!(index >= 2, "indeterminate index must be at least 2, got {index}");
            if exp == 0 {
                continue;
            }
            factors.push((index, exp));
        }
        factors.sort_unstable_by_key(|&(i, _)| i);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(factors.len());
        for (index, exp) in factors {
            match merged.last_mut() {
                Some((i, e)) if *i == index => *e += exp,
                _ => merged.push((index, exp)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Σ index·exponent`, the grading degree.
    pub fn weight(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(i, e)| u64::from(i) * u64::from(e))
            .sum()
    }

    /// Total degree `Σ exponent`.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    /// Exponent of `X_index` in this monomial (0 if absent).
    pub fn exponent_of(&self, index: u32) -> u32 {
        self.factors
            .iter()
            .find(|&&(i, _)| i == index)
            .map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Self::from_pairs(self.factors.iter().chain(other.factors.iter()).copied())
    }

    /// Renders with the given indeterminate symbol, e.g. `R_2^2 R_5`.
    pub fn render(&self, symbol: &str) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    format!("{symbol}_{i}")
                } else {
                    format!("{symbol}_{i}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Canonical order: by weight, then lexicographically on the
/// `(index, exponent)` vector. Total and deterministic; polynomial term
/// maps and all printed output rely on it.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("X"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_normalizes() {
        let m = Monomial::from_pairs([(5, 1), (2, 1), (2, 1)]);
        assert_eq!(m.factors(), &[(2, 2), (5, 1)]);
        assert_eq!(m.weight(), 9);
        assert_eq!(m.degree(), 3);
        assert_eq!(Monomial::from_pairs([(3, 0)]), Monomial::unit());
        assert_eq!(Monomial::unit().weight(), 0);
    }

    #[test]
    #[should_panic(expected = "at least 2")]
    fn rejects_small_index() {
        Monomial::from_pairs([(1, 1)]);
    }

    #[test]
    fn canonical_order() {
        let r2 = Monomial::indeterminate(2);
        let r4 = Monomial::indeterminate(4);
        let r2sq = Monomial::from_pairs([(2, 2)]);
        let r2r3 = Monomial::from_pairs([(2, 1), (3, 1)]);
        // weight first
        assert!(r2 < r2sq);
        // same weight 4: [(2,2)] < [(4,1)] lexicographically
        assert!(r2sq < r4);
        // same weight 5: [(2,1),(3,1)] < [(5,1)]
        assert!(r2r3 < Monomial::indeterminate(5));
    }

    #[test]
    fn rendering() {
        assert_eq!(Monomial::unit().render("R"), "1");
        assert_eq!(Monomial::from_pairs([(2, 2), (3, 1)]).render("C"), "C_2^2 C_3");
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec((2u32..7, 1u32..4), 0..4).prop_map(Monomial::from_pairs)
    }

    proptest! {
        #[test]
        fn weight_additive_under_multiplication(a in arb_monomial(), b in arb_monomial()) {
            prop_assert_eq!(a.mul(&b).weight(), a.weight() + b.weight());
        }

        #[test]
        fn multiplication_commutes(a in arb_monomial(), b in arb_monomial()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }
    }
}
