//! Stirling numbers and evaluations of monomial symmetric functions.
//!
//! `mhat_j(j, k)` is the power sum `1^j + 2^j + … + (k-1)^j`, computed
//! through Stirling numbers of the second kind. `mhat_lambda(λ, k)` is the
//! monomial symmetric function `m_λ` evaluated at `x_i = i` for
//! `i = 1..k-1` and `x_i = 0` beyond; it is obtained by expanding
//!
//! `Σ_λ m̂_λ a_λ = exp Σ_j m̂_j [x^j] log A(x)`,   `A(x) = 1 + Σ a_i x^i`,
//!
//! in auxiliary indeterminates `a_i` truncated at total degree `|λ|`, and
//! reading off the coefficient of `a_λ`.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::partition::{partitions_of, Partition};
use crate::scalar::{binomial, factorial, frac, Integer, Rational};

/// Stirling number of the second kind `S(j, i)`: the number of set
/// partitions of a `j`-set into `i` nonempty blocks.
pub fn stirling2(j: u32, i: u32) -> Integer {
    if i > j {
        return Integer::zero();
    }
    if j == 0 {
        return Integer::one(); // S(0,0) = 1
    }
    if i == 0 {
        return Integer::zero();
    }
    // S(j, i) = i·S(j-1, i) + S(j-1, i-1)
    let mut row = vec![Integer::zero(); i as usize + 1];
    row[0] = Integer::one(); // row for j = 0
    for _ in 1..=j {
        let mut next = vec![Integer::zero(); i as usize + 1];
        for b in 1..=i as usize {
            next[b] = Integer::from(b as u32) * &row[b] + &row[b - 1];
        }
        row = next;
    }
    row[i as usize].clone()
}

/// The power sum `m̂_j = Σ_{i=1}^{k-1} i^j`, via
/// `Σ_{i=1}^{j} S(j,i)·i!·C(k, i+1)`. Zero when `k = 1` (empty sum).
pub fn mhat_j(j: u32, k: u32) -> Rational {
    assert!(j >= 1, "mhat_j needs j >= 1");
    let mut total = Integer::zero();
    for i in 1..=j {
        total += stirling2(j, i) * factorial(u64::from(i)) * binomial(u64::from(k), u64::from(i) + 1);
    }
    Rational::from_integer(total)
}

/// All evaluations `m̂_λ` for `λ ⊢ d` at once, keyed by `λ`.
pub fn mhat_evaluations(d: u32, k: u32) -> BTreeMap<Partition, Rational> {
    let mut out = BTreeMap::new();
    if d == 0 {
        out.insert(Partition::empty(), Rational::one());
        return out;
    }
    // log A = Σ_{i≥1} (-1)^{i-1} B^i / i with B = Σ a_i, truncated at weight d.
    let mut basic = APoly::zero(d);
    for i in 1..=d {
        basic.add_term(Partition::new(vec![i]), Rational::one());
    }
    let mut log_a = APoly::zero(d);
    let mut power = APoly::one(d);
    for i in 1..=d {
        power = power.mul(&basic);
        log_a.add_scaled(&power, &frac(if i % 2 == 1 { 1 } else { -1 }, i64::from(i)));
    }
    // Q = Σ_j m̂_j · (weight-j part of log A)
    let mut q = APoly::zero(d);
    for (lam, coeff) in &log_a.terms {
        q.add_term(lam.clone(), coeff * mhat_j(lam.size(), k));
    }
    // exp Q = Σ_i Q^i / i!
    let mut exp_q = APoly::one(d);
    let mut q_power = APoly::one(d);
    let mut inv_fact = Rational::one();
    for i in 1..=d {
        q_power = q_power.mul(&q);
        inv_fact /= Rational::from_integer(Integer::from(i));
        exp_q.add_scaled(&q_power, &inv_fact);
    }
    for lam in partitions_of(d) {
        let value = exp_q.terms.get(&lam).cloned().unwrap_or_else(Rational::zero);
        out.insert(lam, value);
    }
    out
}

/// The monomial symmetric function `m_λ` evaluated at `1, 2, …, k-1`.
pub fn mhat_lambda(lam: &Partition, k: u32) -> Rational {
    if lam.is_empty() {
        return Rational::one();
    }
    mhat_evaluations(lam.size(), k)
        .remove(lam)
        .expect("mhat_evaluations covers every partition of d")
}

/// Polynomial in auxiliary indeterminates `a_1, a_2, …`, with each monomial
/// `a_{λ_1}···a_{λ_ℓ}` keyed by the partition `λ` and graded by `|λ|`.
/// Products truncate beyond `max_weight`.
struct APoly {
    max_weight: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl APoly {
    fn zero(max_weight: u32) -> Self {
        APoly { max_weight, terms: BTreeMap::new() }
    }

    fn one(max_weight: u32) -> Self {
        let mut p = Self::zero(max_weight);
        p.add_term(Partition::empty(), Rational::one());
        p
    }

    fn add_term(&mut self, key: Partition, coeff: Rational) {
        if coeff.is_zero() || key.size() > self.max_weight {
            return;
        }
        match self.terms.entry(key) {
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

    fn add_scaled(&mut self, other: &APoly, scale: &Rational) {
        for (key, coeff) in &other.terms {
            self.add_term(key.clone(), coeff * scale);
        }
    }

    fn mul(&self, other: &APoly) -> APoly {
        let mut out = APoly::zero(self.max_weight);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if ka.size() + kb.size() > self.max_weight {
                    continue;
                }
                let mut parts: Vec<u32> =
                    ka.parts().iter().chain(kb.parts().iter()).copied().collect();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(Partition::new(parts), ca * cb);
            }
        }
        out
    }
}
