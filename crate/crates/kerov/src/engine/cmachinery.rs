//! The series `C(t)`, the explicit polynomials `C_m`, the inverse expansion
//! of `R_i` in the `C` family, and the operator products `P_m(t)`.

use crate::monomial::Monomial;
use crate::partition::{partitions_of, Partition};
use crate::poly::{Basis, Poly};
use crate::scalar::{factorial, frac, rat, Integer, Rational};
use crate::series::Series;

/// Truncation order used for all series at character index `k`; enough for
/// every extraction `[t^{k+1-2n}]` and `[x^{k+1}]`.
pub fn working_order(k: u32) -> usize {
    k as usize + 2
}

/// `C(t) = 1 / (1 - Σ_{i≥2} (i-1) R_i t^i)`, coefficients in the `R` basis.
/// The degree-`m` coefficient is the weight-`m` polynomial `C_m`.
pub fn c_series(order: usize) -> Series {
    let mut denom = vec![Poly::zero(Basis::R); order + 1];
    denom[0] = Poly::one(Basis::R);
    for i in 2..=order {
        denom[i] = Poly::indeterminate(Basis::R, i as u32).scale(&rat(1 - i as i64));
    }
    Series::from_coeffs("t", denom).reciprocal()
}

/// Iterates over the multisets `{j_i}` with `Σ i·j_i = m` and all `i ≥ 2`,
/// presented as partitions of `m` into parts ≥ 2.
fn partitions_with_parts_at_least_two(m: u32) -> impl Iterator<Item = Partition> {
    partitions_of(m)
        .into_iter()
        .filter(|lam| lam.parts().last().map_or(true, |&p| p >= 2))
}

/// The polynomial `C_m` in the `R` basis:
/// `Σ (j_2+j_3+…)! Π ((i-1)R_i)^{j_i} / j_i!` over `2j_2+3j_3+… = m`,
/// with `C_0 = 1` and `C_1 = 0`.
pub fn c_m_explicit(m: u32) -> Poly {
    if m == 0 {
        return Poly::one(Basis::R);
    }
    let mut out = Poly::zero(Basis::R);
    for lam in partitions_with_parts_at_least_two(m) {
        let mults = lam.multiplicities();
        let total: u32 = mults.iter().map(|&(_, j)| j).sum();
        let mut coeff = Rational::from_integer(factorial(u64::from(total)));
        for &(i, j) in &mults {
            let mut power = Integer::from(1);
            for _ in 0..j {
                power *= Integer::from(i - 1);
            }
            coeff *= Rational::new(power, factorial(u64::from(j)));
        }
        let mono = Monomial::from_pairs(mults.iter().map(|&(i, j)| (i, j)));
        out += Poly::term(Basis::R, mono, coeff);
    }
    out
}

/// The inverse expansion: `R_i` as a polynomial in the `C` basis,
/// `R_i = (1/(i-1)) Σ (-1)^{1+j_2+j_3+…} (j_2+j_3+…)! Π C_m^{j_m}/j_m!`
/// over `2j_2+3j_3+… = i`. Signed for `i ≥ 4`.
pub fn r_i_in_c(i: u32) -> Poly {
    assert!(i >= 2, "free cumulant indices start at 2, got {i}");
    let mut out = Poly::zero(Basis::C);
    for lam in partitions_with_parts_at_least_two(i) {
        let mults = lam.multiplicities();
        let total: u32 = mults.iter().map(|&(_, j)| j).sum();
        let mut coeff = Rational::from_integer(factorial(u64::from(total)));
        if total % 2 == 0 {
            coeff = -coeff; // sign (-1)^{1 + Σ j}
        }
        for &(_, j) in &mults {
            coeff /= Rational::from_integer(factorial(u64::from(j)));
        }
        let mono = Monomial::from_pairs(mults.iter().map(|&(m, j)| (m, j)));
        out += Poly::term(Basis::C, mono, coeff);
    }
    out.scale(&frac(1, i64::from(i) - 1))
}

/// `P_1(t), …, P_max(t)`, all exact to `order`.
///
/// Built by the recursion `Q_1 = -C`, `Q_{i+1} = (1/(i+1))·t·C·D(Q_i)`
/// with `Q_i = t^{i-1} P_i`, so a single high-order `C` serves every `P_i`.
pub fn p_list(max: u32, order: usize) -> Vec<Series> {
    assert!(max >= 1);
    let inner = order + max as usize;
    let c = c_series(inner);
    let mut out = Vec::with_capacity(max as usize);
    let mut q = -&c; // Q_1
    out.push(q.truncated(order));
    for i in 1..max {
        // Q_{i+1} = (1/(i+1)) t·C·D(Q_i); the product truncates to C's order
        q = (&c * &q.euler_d()).shift_up(1).scale(&frac(1, i64::from(i) + 1));
        out.push(q.shift_down(i as usize).truncated(order));
    }
    out
}

/// `P_m(t) = -(1/m!)·C·(D+(m-2)I)C···(D+I)C·DC`, exact to `order`.
pub fn p_m(m: u32, order: usize) -> Series {
    p_list(m, order).pop().expect("p_list returns m series")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r_poly(pairs: &[(u32, u32)], num: i64, den: i64) -> Poly {
        Poly::term(Basis::R, Monomial::from_pairs(pairs.iter().copied()), frac(num, den))
    }

    #[test]
    fn c_series_low_coefficients() {
        let c = c_series(4);
        assert_eq!(c.coeff(0), &Poly::one(Basis::R));
        assert!(c.coeff(1).is_zero());
        assert_eq!(c.coeff(2), &Poly::indeterminate(Basis::R, 2));
        assert_eq!(c.coeff(3), &r_poly(&[(3, 1)], 2, 1));
        // C_4 = 3R_4 + R_2^2
        assert_eq!(c.coeff(4), &(&r_poly(&[(4, 1)], 3, 1) + &r_poly(&[(2, 2)], 1, 1)));
    }

    #[test]
    fn explicit_c_polynomials() {
        assert_eq!(c_m_explicit(0), Poly::one(Basis::R));
        assert!(c_m_explicit(1).is_zero());
        assert_eq!(c_m_explicit(2), Poly::indeterminate(Basis::R, 2));
        assert_eq!(c_m_explicit(3), r_poly(&[(3, 1)], 2, 1));
        assert_eq!(c_m_explicit(4), &r_poly(&[(4, 1)], 3, 1) + &r_poly(&[(2, 2)], 1, 1));
    }

    #[test]
    fn explicit_matches_series() {
        let c = c_series(14);
        for m in 0..=14 {
            assert_eq!(&c_m_explicit(m as u32), c.coeff(m), "C_{m}");
        }
    }

    #[test]
    fn inverse_expansion_low_cases() {
        // R_2 = C_2, R_3 = C_3/2, R_4 = (C_4 - C_2^2)/3 with a negative sign
        assert_eq!(r_i_in_c(2), Poly::indeterminate(Basis::C, 2));
        assert_eq!(
            r_i_in_c(3),
            Poly::term(Basis::C, Monomial::indeterminate(3), frac(1, 2))
        );
        let expect = &Poly::term(Basis::C, Monomial::indeterminate(4), frac(1, 3))
            + &Poly::term(Basis::C, Monomial::from_pairs([(2, 2)]), frac(-1, 3));
        assert_eq!(r_i_in_c(4), expect);
    }

    #[test]
    fn p_one_and_two() {
        let order = 8;
        let c = c_series(order);
        let ps = p_list(2, order);
        assert_eq!(ps[0], -&c, "P_1 = -C");
        let p2_direct = (&c * &c.euler_d()).scale(&frac(-1, 2));
        assert_eq!(ps[1], p2_direct, "P_2 = -C·DC/2");
    }

    #[test]
    fn p_three_operator_expansion() {
        // P_3 = -(1/6)(C^2 DC + C (DC)^2 + C^2 D^2 C)
        let order = 8;
        let c = c_series(order);
        let dc = c.euler_d();
        let ddc = dc.euler_d();
        let c2 = &c * &c;
        let expect = (&(&(&c2 * &dc) + &(&c * &(&dc * &dc))) + &(&c2 * &ddc)).scale(&frac(-1, 6));
        assert_eq!(p_m(3, order), expect);
    }

    /// Direct build of the operator product, used as an independent check
    /// on the recursion in `p_list`.
    fn p_m_operator(m: u32, order: usize) -> Series {
        let c = c_series(order);
        let mut x = c.clone();
        for j in 0..m.saturating_sub(1) {
            x = &c * &(&x.euler_d() + &x.scale(&rat(i64::from(j))));
        }
        x.scale(&Rational::new(Integer::from(-1), factorial(u64::from(m))))
    }

    #[test]
    fn recursion_matches_operator_product() {
        for m in 1..=5 {
            assert_eq!(p_m(m, 9), p_m_operator(m, 9), "P_{m}");
        }
    }

    #[test]
    fn euler_squared_on_pure_power_series() {
        // with only R_m nonzero, C = 1/(1-(m-1)R_m t^m) and
        // D^2 C = Σ_j (mj)^2 ((m-1)R_m)^j t^{mj}
        for m in 2..=4u32 {
            let order = 13;
            let mut denom = vec![Poly::zero(Basis::R); order + 1];
            denom[0] = Poly::one(Basis::R);
            denom[m as usize] = Poly::indeterminate(Basis::R, m).scale(&rat(1 - i64::from(m)));
            let c = Series::from_coeffs("t", denom).reciprocal();
            let dd = c.euler_d().euler_d();
            for j in 0..=(order as u32 / m) {
                let deg = (m * j) as usize;
                let mut scale = rat(1); // (m-1)^j
                for _ in 0..j {
                    scale *= rat(i64::from(m) - 1);
                }
                let expect = Poly::term(
                    Basis::R,
                    Monomial::from_pairs([(m, j)]),
                    rat((i64::from(m) * i64::from(j)).pow(2)) * scale,
                );
                assert_eq!(dd.coeff(deg), &expect, "m={m} j={j}");
            }
        }
    }
}
