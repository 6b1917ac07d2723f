//! Ground truth independent of the polynomial machinery: Young-diagram
//! profiles, the moment transform `H_ω` and free cumulants `R_i(ω)`,
//! irreducible symmetric-group characters by the Murnaghan–Nakayama rule,
//! and the cycle-product counts behind the linear coefficients.

use std::collections::HashMap;

use num::{One, Zero};

use crate::partition::{partitions_of, Partition};
use crate::poly::{Basis, Poly};
use crate::scalar::{factorial, Integer, Rational};
use crate::series::Series;

/// Interlacing local minima `x_1 < y_1 < x_2 < … < y_{m-1} < x_m` of the
/// 45°-rotated diagram boundary, at unit box scale.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Profile {
    minima: Vec<i64>,
    maxima: Vec<i64>,
}

impl Profile {
    /// Panics unless the coordinates strictly interlace and balance
    /// (`Σx = Σy`, equivalently the subleading moment vanishes).
    pub fn new(minima: Vec<i64>, maxima: Vec<i64>) -> Self {
        assert_eq!(minima.len(), maxima.len() + 1, "profile needs one more minimum than maxima");
        for i in 0..maxima.len() {
            assert!(
                minima[i] < maxima[i] && maxima[i] < minima[i + 1],
                "profile coordinates must strictly interlace"
            );
        }
        let sx: i64 = minima.iter().sum();
        let sy: i64 = maxima.iter().sum();
        assert_eq!(sx, sy, "profile must balance: Σx = Σy");
        Profile { minima, maxima }
    }

    pub fn minima(&self) -> &[i64] {
        &self.minima
    }

    pub fn maxima(&self) -> &[i64] {
        &self.maxima
    }
}

/// The profile of a shape: minima are the contents of its addable corners,
/// maxima the contents of its removable corners (content = column − row).
pub fn profile(shape: &Partition) -> Profile {
    let parts = shape.parts();
    let m = parts.len();
    let part = |r: usize| -> i64 {
        if r < m {
            i64::from(parts[r])
        } else {
            0
        }
    };
    let mut minima = Vec::new();
    let mut maxima = Vec::new();
    // row indices are 0-based; content of cell (r, c) is c - r with both 0-based
    for r in 0..=m {
        let above = if r == 0 { i64::MAX } else { part(r - 1) };
        if above > part(r) {
            minima.push(part(r) - r as i64);
        }
    }
    for r in 0..m {
        if part(r) > part(r + 1) {
            maxima.push(part(r) - 1 - r as i64);
        }
    }
    minima.reverse();
    maxima.reverse();
    Profile::new(minima, maxima)
}

/// The expansion of `H_ω(z) = Π(z - y_i) / Π(z - x_i)` at infinity, as a
/// power series in `s = 1/z`: `H_ω(1/s) = Σ_{j≥0} m_j s^{j+1}` with
/// `m_0 = 1`. Coefficients are constant polynomials.
pub fn moment_series(p: &Profile, order: usize) -> Series {
    let lin = |c: i64| -> Series {
        // 1 - c·s
        let one = Series::one("s", Basis::R, order);
        let cs = Series::monomial("s", 1, Poly::constant(Basis::R, Rational::from_integer((-c).into())), order);
        &one + &cs
    };
    let mut numer = Series::one("s", Basis::R, order);
    for &y in &p.maxima {
        numer = &numer * &lin(y);
    }
    let mut denom = Series::one("s", Basis::R, order);
    for &x in &p.minima {
        denom = &denom * &lin(x);
    }
    if order == 0 {
        return Series::zero("s", Basis::R, 0);
    }
    (&numer * &denom.reciprocal()).shift_up(1).truncated(order)
}

/// Free cumulants `R_1 … R_max_i` of a profile.
///
/// With `M(s) = H(1/s)` and `K = H^{⟨-1⟩}` written as `K(z) = ρ(z)/z`,
/// `ρ(z) = 1 + Σ R_i z^i`, the defining identity `H(K(z)) = z` says
/// `M^{⟨-1⟩}(z) = z/ρ(z)`; reverting `M` order by order and dividing out
/// `z` yields the cumulants triangularly.
pub fn free_cumulants(p: &Profile, max_i: usize) -> Vec<Rational> {
    let order = max_i + 1;
    let m = moment_series(p, order);
    let m_inv = m.reversion();
    let rho = m_inv.shift_down(1).reciprocal();
    (1..=max_i).map(|i| rho.rational_coeff(i)).collect()
}

/// First-column hook lengths (beta numbers) of a shape.
fn beta_numbers(shape: &Partition) -> Vec<u32> {
    let parts = shape.parts();
    let m = parts.len() as u32;
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + m - 1 - i as u32)
        .collect()
}

fn shape_from_betas(mut betas: Vec<u32>) -> Partition {
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let m = betas.len() as u32;
    let parts: Vec<u32> = betas
        .iter()
        .enumerate()
        .map(|(i, &b)| b + 1 + i as u32 - m)
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts)
}

/// Irreducible character `χ_ω(λ)` by recursive border-strip removal.
///
/// Strips are removed for the largest remaining cycle first; removals are
/// enumerated on the beta-number set, where removing an `h`-strip is the
/// replacement `b ↦ b - h` and the sign is `(-1)^{#betas strictly between}`.
pub fn mn_character(shape: &Partition, class: &Partition) -> Integer {
    assert_eq!(
        shape.size(),
        class.size(),
        "character shape and class must partition the same integer"
    );
    let mut memo = HashMap::new();
    let mut cycles = class.parts().to_vec();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    mn_recurse(shape.clone(), &cycles, &mut memo)
}

fn mn_recurse(
    shape: Partition,
    cycles: &[u32],
    memo: &mut HashMap<(Partition, Vec<u32>), Integer>,
) -> Integer {
    if cycles.is_empty() {
        return Integer::one(); // shape is empty too, by size bookkeeping
    }
    let key = (shape.clone(), cycles.to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let h = cycles[0];
    let rest = &cycles[1..];
    let betas = beta_numbers(&shape);
    let mut total = Integer::zero();
    for (pos, &b) in betas.iter().enumerate() {
        if b < h {
            continue;
        }
        let target = b - h;
        if betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&c| target < c && c < b).count();
        let mut next = betas.clone();
        next[pos] = target;
        let value = mn_recurse(shape_from_betas(next), rest, memo);
        if height % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Degree of the irreducible representation by the hook-length formula;
/// used as an independent check on the recursive characters.
pub fn hook_length_degree(shape: &Partition) -> Integer {
    let parts = shape.parts();
    let cols = |c: u32| -> u32 { parts.iter().filter(|&&p| p > c).count() as u32 };
    let mut hooks = Integer::one();
    for (r, &p) in parts.iter().enumerate() {
        for c in 0..p {
            let arm = p - 1 - c;
            let leg = cols(c) - 1 - r as u32;
            hooks *= Integer::from(arm + leg + 1);
        }
    }
    factorial(u64::from(shape.size())) / hooks
}

/// The normalized character `χ̂_ω(k 1^{n-k}) = n(n-1)…(n-k+1)·χ/deg`.
pub fn normalized_character(shape: &Partition, k: u32) -> Rational {
    let n = shape.size();
    assert!(k >= 1 && k <= n, "normalized character needs 1 <= k <= n = {n}, got {k}");
    let mut class_parts = vec![k];
    class_parts.extend(std::iter::repeat(1).take((n - k) as usize));
    let class = Partition::new(class_parts);
    let chi = mn_character(shape, &class);
    let degree = mn_character(shape, &Partition::new(vec![1; n as usize]));
    let mut falling = Integer::one();
    for i in 0..k {
        falling *= Integer::from(n - i);
    }
    Rational::new(falling * chi, degree)
}

/// Size of the conjugacy class `C_λ` in `S_n`: `n! / Π i^{m_i} m_i!`.
pub fn class_size(class: &Partition) -> Integer {
    let n = class.size();
    let mut denom = Integer::one();
    for (part, mult) in class.multiplicities() {
        for _ in 0..mult {
            denom *= Integer::from(part);
        }
        denom *= factorial(u64::from(mult));
    }
    factorial(u64::from(n)) / denom
}

/// The central character `χ̃_ω(λ) = |C_λ|·χ_ω(λ)/deg`.
pub fn central_character(shape: &Partition, class: &Partition) -> Rational {
    assert_eq!(shape.size(), class.size(), "central character needs |ω| = |λ|");
    let chi = mn_character(shape, class);
    let degree = mn_character(shape, &Partition::new(vec![1; shape.size() as usize]));
    Rational::new(class_size(class) * chi, degree)
}

/// The number of `k`-cycles `c` in `S_k` for which the product of `c` with
/// the canonical `k`-cycle has exactly `k - 2n` cycles, by enumeration of
/// all `(k-1)!` candidates.
pub fn count_cycle_products(k: u32, n: u32) -> u64 {
    assert!(n >= 1 && k >= 2 * n - 1, "count_cycle_products needs k >= 2n-1 >= 1");
    let k = k as usize;
    let target = k as i64 - 2 * i64::from(n);
    if target < 1 {
        return 0; // a permutation of S_k has at least one cycle
    }
    let target = target as usize;
    // c = (1 a_1 a_2 … a_{k-1}) over all orderings of {2..k} (0-based here)
    let mut rest: Vec<usize> = (1..k).collect();
    let mut count = 0u64;
    permute(&mut rest, 0, &mut |tail: &[usize]| {
        // cycle c maps 0 -> tail[0] -> … -> tail[k-2] -> 0
        let mut c = vec![0usize; k];
        let mut prev = 0usize;
        for &v in tail {
            c[prev] = v;
            prev = v;
        }
        c[prev] = 0;
        // p = σ ∘ c with σ the canonical cycle i -> i+1 (mod k)
        let mut p = vec![0usize; k];
        for i in 0..k {
            p[i] = (c[i] + 1) % k;
        }
        if cycle_count(&p) == target {
            count += 1;
        }
    });
    count
}

fn permute(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, visit);
        items.swap(start, i);
    }
}

fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for mut i in 0..p.len() {
        if seen[i] {
            continue;
        }
        cycles += 1;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
        }
    }
    cycles
}

/// Sum of squared degrees over all shapes of `n`; equals `n!`.
pub fn degree_square_sum(n: u32) -> Integer {
    let class = Partition::new(vec![1; n as usize]);
    partitions_of(n)
        .iter()
        .map(|shape| {
            let d = mn_character(shape, &class);
            &d * &d
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn shape(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn profiles_of_small_shapes() {
        let p = profile(&shape(&[1]));
        assert_eq!(p.minima(), &[-1, 1]);
        assert_eq!(p.maxima(), &[0]);
        let p = profile(&shape(&[2]));
        assert_eq!(p.minima(), &[-1, 2]);
        assert_eq!(p.maxima(), &[1]);
        let p = profile(&shape(&[2, 1]));
        assert_eq!(p.minima(), &[-2, 0, 2]);
        assert_eq!(p.maxima(), &[-1, 1]);
        let p = profile(&Partition::empty());
        assert_eq!(p.minima(), &[0]);
        assert!(p.maxima().is_empty());
    }

    #[test]
    fn profiles_interlace_and_balance() {
        for n in 0..=12 {
            for shape in partitions_of(n) {
                let _ = profile(&shape); // constructor asserts the invariants
            }
        }
    }

    #[test]
    fn moment_series_of_single_box() {
        // H = z/(z^2 - 1): s + s^3 + s^5 + …
        let m = moment_series(&profile(&shape(&[1])), 6);
        for d in 0..=6 {
            let expect = if d % 2 == 1 { rat(1) } else { rat(0) };
            assert_eq!(m.rational_coeff(d), expect, "degree {d}");
        }
    }

    #[test]
    fn moment_series_of_staircase() {
        // ω = (2,1): H = (z^2-1)/(z^3-4z): s + 3 s^3 + 12 s^5 + …
        let m = moment_series(&profile(&shape(&[2, 1])), 6);
        assert_eq!(m.rational_coeff(1), rat(1));
        assert_eq!(m.rational_coeff(2), rat(0));
        assert_eq!(m.rational_coeff(3), rat(3));
        assert_eq!(m.rational_coeff(5), rat(12));
    }

    #[test]
    fn low_moments_are_universal() {
        // coefficient of s^2 is 0 and of s^3 is n, for every shape of n
        for n in 1..=8 {
            for shape in partitions_of(n) {
                let m = moment_series(&profile(&shape), 4);
                assert_eq!(m.rational_coeff(2), rat(0), "{shape}");
                assert_eq!(m.rational_coeff(3), rat(i64::from(n)), "{shape}");
            }
        }
    }

    #[test]
    fn cumulants_of_small_shapes() {
        assert_eq!(
            free_cumulants(&profile(&shape(&[1])), 4),
            vec![rat(0), rat(1), rat(0), rat(-1)]
        );
        assert_eq!(
            free_cumulants(&profile(&shape(&[2, 1])), 4),
            vec![rat(0), rat(3), rat(0), rat(-6)]
        );
    }

    #[test]
    fn first_two_cumulants_are_universal() {
        for n in 1..=10 {
            for shape in partitions_of(n) {
                let r = free_cumulants(&profile(&shape), 2);
                assert_eq!(r[0], rat(0), "R_1 of {shape}");
                assert_eq!(r[1], rat(i64::from(n)), "R_2 of {shape}");
            }
        }
    }

    #[test]
    fn characters_by_hand() {
        // trivial representation
        for class in partitions_of(5) {
            assert_eq!(mn_character(&shape(&[5]), &class), Integer::one());
        }
        // sign representation: (-1)^(n - ℓ(λ))
        for class in partitions_of(5) {
            let sign = if (5 - class.len() as u32) % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn_character(&shape(&[1, 1, 1, 1, 1]), &class), Integer::from(sign));
        }
        assert_eq!(mn_character(&shape(&[2, 1]), &shape(&[3])), Integer::from(-1));
        assert_eq!(mn_character(&shape(&[2, 1]), &shape(&[1, 1, 1])), Integer::from(2));
    }

    #[test]
    fn degrees_match_hook_lengths() {
        for n in 1..=10 {
            let class = Partition::new(vec![1; n as usize]);
            for shape in partitions_of(n) {
                assert_eq!(
                    mn_character(&shape, &class),
                    hook_length_degree(&shape),
                    "degree of {shape}"
                );
            }
        }
    }

    #[test]
    fn degree_squares_sum_to_group_order() {
        for n in 1..=8 {
            assert_eq!(degree_square_sum(n), factorial(u64::from(n)), "n = {n}");
        }
    }

    #[test]
    fn normalized_character_examples() {
        assert_eq!(normalized_character(&shape(&[2, 1]), 3), rat(-3));
        for n in 2..=7 {
            assert_eq!(normalized_character(&shape(&[n]), 1), rat(i64::from(n)));
        }
    }

    #[test]
    #[should_panic(expected = "1 <= k <= n")]
    fn normalized_character_rejects_large_k() {
        normalized_character(&shape(&[2, 1]), 4);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&shape(&[3])), Integer::from(2)); // two 3-cycles in S_3
        assert_eq!(class_size(&shape(&[2, 1])), Integer::from(3));
        assert_eq!(class_size(&shape(&[1, 1, 1])), Integer::one());
        let total: Integer = partitions_of(6).iter().map(class_size).sum();
        assert_eq!(total, factorial(6));
    }

    #[test]
    fn central_character_examples() {
        assert_eq!(central_character(&shape(&[2, 1]), &shape(&[3])), rat(-1));
        assert_eq!(central_character(&shape(&[1]), &shape(&[1])), rat(1));
    }

    #[test]
    fn normalized_is_k_times_central() {
        for n in 1..=7u32 {
            for shape in partitions_of(n) {
                for k in 1..=n {
                    let mut class_parts = vec![k];
                    class_parts.extend(std::iter::repeat(1).take((n - k) as usize));
                    let class = Partition::new(class_parts);
                    assert_eq!(
                        normalized_character(&shape, k),
                        rat(i64::from(k)) * central_character(&shape, &class),
                        "ω = {shape}, k = {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn cycle_product_counts() {
        assert_eq!(count_cycle_products(3, 1), 1);
        assert_eq!(count_cycle_products(5, 2), 8);
        assert_eq!(count_cycle_products(6, 1), 35);
        assert_eq!(count_cycle_products(3, 2), 0);
    }
}
