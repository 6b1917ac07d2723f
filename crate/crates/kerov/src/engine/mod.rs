//! All routes to the character polynomials `Σ_k` and their graded pieces
//! `Σ_{k,2n}`.
//!
//! Four independent computations are provided and cross-checked:
//! the partition-sum extraction over `P_λ(t)/C(t)` ([`sigma_main`]), its
//! one-part modification ([`sigma_mainmod`]), the generating-function form
//! over `j = 1..k-1` ([`sigma_maingen`]), and the series route through
//! `φ` and `Φ(x,j)` built on Lagrange inversion ([`sigma_biane`]).
//! Closed forms for the first two graded pieces and the linear terms live
//! in [`closed`], and the `R ↔ C` basis change in [`convert`].

mod biane;
mod closed;
mod cmachinery;
mod convert;
mod routes;
mod useries;

pub use biane::{phi_capital, phi_i_operator, phi_series, sigma_biane};
pub use closed::{linear_coefficient, pure_power_coeff, sigma_k2_closed, sigma_k4_closed, sigma_k4_series_form, stanley_value};
pub use cmachinery::{c_m_explicit, c_series, p_list, p_m, r_i_in_c, working_order};
pub use convert::{to_c_basis, to_r_basis};
pub use routes::{sigma_main, sigma_mainmod, sigma_maingen};

use std::collections::BTreeMap;

use crate::poly::{Basis, Poly};

/// A character polynomial `Σ_k` split into graded pieces: the key `2n` maps
/// to the weight-`(k+1-2n)` part `Σ_{k,2n}`. Every even `2n` with
/// `0 ≤ 2n ≤ k+1` is present (possibly zero); no key beyond `k+1` exists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KerovResult {
    k: u32,
    basis: Basis,
    pieces: BTreeMap<u32, Poly>,
}

impl KerovResult {
    /// Builds a result from graded pieces, filling in absent (zero) grades
    /// and validating weight homogeneity of each piece.
    pub fn new(k: u32, basis: Basis, pieces: BTreeMap<u32, Poly>) -> Self {
        let mut full = BTreeMap::new();
        let mut two_n = 0;
        while two_n <= k + 1 {
            full.insert(two_n, Poly::zero(basis));
            two_n += 2;
        }
        for (two_n, piece) in pieces {
            assert!(two_n % 2 == 0, "grades are even integers, got {two_n}");
            assert!(two_n <= k + 1, "grade {two_n} out of range for k = {k}");
            assert_eq!(piece.basis(), basis, "piece basis mismatch");
            let weight = u64::from(k + 1 - two_n);
            assert!(
                piece.is_homogeneous_of_weight(weight),
                "piece 2n = {two_n} of Σ_{k} must be weight-homogeneous of weight {weight}, got {piece}"
            );
            full.insert(two_n, piece);
        }
        KerovResult { k, basis, pieces: full }
    }

    /// Splits a full polynomial by weight. Panics if a monomial's weight
    /// exceeds `k+1` or has the wrong parity.
    pub fn from_total(k: u32, total: Poly) -> Self {
        let basis = total.basis();
        let mut pieces = BTreeMap::new();
        for (weight, piece) in total.graded_by_weight() {
            assert!(
                weight <= u64::from(k + 1) && (u64::from(k + 1) - weight) % 2 == 0,
                "monomial weight {weight} cannot occur in Σ_{k}"
            );
            pieces.insert(k + 1 - weight as u32, piece);
        }
        Self::new(k, basis, pieces)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// The graded piece at `2n` (zero if it vanishes). Panics for a grade
    /// outside `0 ≤ 2n ≤ k+1` or an odd grade.
    pub fn piece(&self, two_n: u32) -> &Poly {
        self.pieces
            .get(&two_n)
            .unwrap_or_else(|| panic!("Σ_{{{},{two_n}}} is not a stored grade", self.k))
    }

    /// Grades in ascending order.
    pub fn grades(&self) -> impl Iterator<Item = u32> + '_ {
        self.pieces.keys().copied()
    }

    pub fn pieces(&self) -> &BTreeMap<u32, Poly> {
        &self.pieces
    }

    /// The full polynomial `Σ_k = Σ_n Σ_{k,2n}`.
    pub fn total(&self) -> Poly {
        let mut out = Poly::zero(self.basis);
        for piece in self.pieces.values() {
            out += piece.clone();
        }
        out
    }

    /// Converts every piece to the other basis.
    pub fn converted(&self) -> KerovResult {
        let convert = match self.basis {
            Basis::R => convert::to_c_basis,
            Basis::C => convert::to_r_basis,
        };
        let pieces = self.pieces.iter().map(|(&g, p)| (g, convert(p))).collect();
        KerovResult::new(
            self.k,
            match self.basis {
                Basis::R => Basis::C,
                Basis::C => Basis::R,
            },
            pieces,
        )
    }
}
