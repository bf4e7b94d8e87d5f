//! Exact integer combinatorics for polytope face counts.
//!
//! Everything here is a pure function over `i64` parameters returning
//! [`BigInt`] values. Binomial coefficients follow the convention that
//! `C(a, b) = 0` whenever `b < 0`, `b > a` or `a < 0`, which makes the
//! face-count formulas total over their documented domains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{out_of_range, Result};

/// A (dimension, vertex count) pair with `v > d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub d: i64,
    pub v: i64,
}

impl Params {
    pub fn new(v: i64, d: i64) -> Result<Self> {
        if d < 1 {
            return Err(out_of_range(format!("dimension d={d} must be at least 1")));
        }
        if v <= d {
            return Err(out_of_range(format!(
                "vertex count v={v} must exceed the dimension d={d}"
            )));
        }
        Ok(Self { d, v })
    }

    /// The vertex surplus `k = v - d`.
    pub fn surplus(&self) -> i64 {
        self.v - self.d
    }
}

/// Excess degree `2e - dv` of a genuine polytope; never negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExcessDegree(pub u64);

impl ExcessDegree {
    pub fn from_counts(edges: i64, verts: i64, dim: i64) -> Result<Self> {
        let xi = excess(edges, verts, dim);
        u64::try_from(xi)
            .map(ExcessDegree)
            .map_err(|_| out_of_range(format!("negative excess {xi}: fewer edges than dv/2")))
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

/// Binomial coefficient with the out-of-range-is-zero convention.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        // C(a, i) * (a - i) = C(a, i + 1) * (i + 1), so the division is exact.
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `phi_m(v, d) = C(d+1, m+1) + C(d, m+1) - C(2d+1-v, m+1)`.
///
/// For `m = 1` this is the edge count of the triplex with `v` vertices.
pub fn phi(m: i64, v: i64, d: i64) -> Result<BigInt> {
    if d < 2 {
        return Err(out_of_range(format!("phi needs d >= 2, got d={d}")));
    }
    if v < d + 1 {
        return Err(out_of_range(format!("phi needs v >= d+1, got v={v}, d={d}")));
    }
    if !(0..d).contains(&m) {
        return Err(out_of_range(format!("phi needs 0 <= m <= d-1, got m={m}, d={d}")));
    }
    Ok(phi_unchecked(m, v, d))
}

pub(crate) fn phi_unchecked(m: i64, v: i64, d: i64) -> BigInt {
    binom(d + 1, m + 1) + binom(d, m + 1) - binom(2 * d + 1 - v, m + 1)
}

/// Edge minimum written in terms of the surplus: `d(d+k)/2 + (k-1)(d-k)/2`.
pub fn phi_edges_surplus_form(d: i64, k: i64) -> Result<BigInt> {
    if !(1..=d).contains(&k) {
        return Err(out_of_range(format!("surplus k={k} must lie in [1, d={d}]")));
    }
    // d(d+k) + (k-1)(d-k) is always even
    let twice = BigInt::from(d) * (d + k) + BigInt::from(k - 1) * (d - k);
    Ok(twice / 2)
}

/// Excess degree `2e - dv`. Negative values mean the counts cannot come from a polytope.
pub fn excess(edges: i64, verts: i64, dim: i64) -> i64 {
    2 * edges - dim * verts
}

/// `LHS - RHS` of
/// `phi(d+k-n, d-1) + nd - C(n,2) = phi(d+k, d) + (k-n)(n-2)`,
/// which vanishes identically on `1 <= n <= k <= d`.
pub fn outside_vertices_identity_residual(d: i64, k: i64, n: i64) -> Result<BigInt> {
    if !(1 <= n && n <= k && k <= d) {
        return Err(out_of_range(format!(
            "identity needs 1 <= n <= k <= d, got d={d}, k={k}, n={n}"
        )));
    }
    let lhs = phi_unchecked(1, d + k - n, d - 1) + BigInt::from(n * d) - binom(n, 2);
    let rhs = phi_unchecked(1, d + k, d) + BigInt::from((k - n) * (n - 2));
    Ok(lhs - rhs)
}

/// f-vector of the triplex `M_{k,d-k}`, which is `[phi_m(d+k, d)]` for `m = 0..d`.
pub fn triplex_fvector(d: i64, k: i64) -> Result<Vec<BigInt>> {
    if !(1..=d).contains(&k) {
        return Err(out_of_range(format!("triplex needs 1 <= k <= d, got k={k}, d={d}")));
    }
    Ok((0..d).map(|m| phi_unchecked(m, d + k, d)).collect())
}

/// f-vector of the `d`-dimensional pentasm.
pub fn pentasm_fvector(d: i64) -> Result<Vec<BigInt>> {
    if d < 3 {
        return Err(out_of_range(format!("pentasm needs d >= 3, got d={d}")));
    }
    let mut out = vec![BigInt::from(2 * d + 1)];
    out.extend((1..d).map(|m| binom(d + 1, m + 1) + binom(d, m + 1) + binom(d - 1, m)));
    Ok(out)
}

/// Number of `m`-faces of the `t`-fold pyramid over `Delta_{r,s}`, `d = r+s+t`.
///
/// These are exactly the `d`-polytopes with `d+2` facets.
pub fn dplus2_face_count(r: i64, s: i64, t: i64, m: i64) -> Result<BigInt> {
    if r < 1 || s < 1 || t < 0 {
        return Err(out_of_range(format!(
            "need r >= 1, s >= 1, t >= 0, got r={r}, s={s}, t={t}"
        )));
    }
    let d = r + s + t;
    if !(0..d).contains(&m) {
        return Err(out_of_range(format!("face dimension m={m} outside [0, {d})")));
    }
    Ok(binom(d + 2, m + 2) - binom(s + t + 1, m + 2) - binom(r + t + 1, m + 2)
        + binom(t + 1, m + 2))
}

/// `C(d,m) - C(d,m+1) - C(d-2,m-2)`: the margin by which the triplex wins once
/// `m` clears the golden-ratio threshold. Requires `d >= m >= 2`.
pub fn alpha_margin(d: i64, m: i64) -> Result<BigInt> {
    if !(2 <= m && m <= d) {
        return Err(out_of_range(format!("need d >= m >= 2, got d={d}, m={m}")));
    }
    Ok(binom(d, m) - binom(d, m + 1) - binom(d - 2, m - 2))
}

/// Factored form `(m^2 + dm - (d-1)^2) / ((m+1)m) * C(d-2, m-1)`.
pub fn alpha_margin_factored(d: i64, m: i64) -> Result<BigRational> {
    if !(2 <= m && m <= d) {
        return Err(out_of_range(format!("need d >= m >= 2, got d={d}, m={m}")));
    }
    let numer = BigInt::from(m * m + d * m - (d - 1) * (d - 1)) * binom(d - 2, m - 1);
    Ok(BigRational::new(numer, BigInt::from((m + 1) * m)))
}

/// `C(d,m) - C(d,m+1) - C(d-3,m-3)`. Requires `d >= m >= 3`.
pub fn beta_margin(d: i64, m: i64) -> Result<BigInt> {
    if !(3 <= m && m <= d) {
        return Err(out_of_range(format!("need d >= m >= 3, got d={d}, m={m}")));
    }
    Ok(binom(d, m) - binom(d, m + 1) - binom(d - 3, m - 3))
}

/// `p(m,d) = m^3 + (d-2)m^2 + (d^2-2d-1)m - (d^3-4d^2+5d-2)`.
pub fn beta_cubic(m: i64, d: i64) -> BigInt {
    let (m, d) = (BigInt::from(m), BigInt::from(d));
    &m * &m * &m + (&d - 2) * &m * &m + (&d * &d - &d * 2 - 1) * &m
        - (&d * &d * &d - &d * &d * 4 + &d * 5 - 2)
}

/// Factored form `p(m,d) / ((m+1)m(m-1)) * C(d-3, m-2)`.
pub fn beta_margin_factored(d: i64, m: i64) -> Result<BigRational> {
    if !(3 <= m && m <= d) {
        return Err(out_of_range(format!("need d >= m >= 3, got d={d}, m={m}")));
    }
    let numer = beta_cubic(m, d) * binom(d - 3, m - 2);
    Ok(BigRational::new(numer, BigInt::from((m + 1) * m * (m - 1))))
}

/// `m >= alpha * d` with `alpha = (sqrt 5 - 1)/2`, decided as `m^2 + md >= d^2`.
pub fn above_alpha(m: i64, d: i64) -> bool {
    let (m, d) = (i128::from(m), i128::from(d));
    m > 0 && d > 0 && m * m + m * d >= d * d
}

/// `m >= beta * d` where `beta` is the real root of `x^3 + x^2 + x = 1`,
/// decided as `m^3 + m^2 d + m d^2 >= d^3`.
pub fn above_beta(m: i64, d: i64) -> bool {
    let (m, d) = (i128::from(m), i128::from(d));
    m > 0 && d > 0 && m * m * m + m * m * d + m * d * d >= d * d * d
}

/// `m >= 0.62 d`.
pub fn above_062(m: i64, d: i64) -> bool {
    100 * m >= 62 * d
}

/// `m >= 0.6 (d-1)`.
pub fn above_060_of_d_minus_1(m: i64, d: i64) -> bool {
    10 * m >= 6 * (d - 1)
}

/// `m >= 0.55 d`.
pub fn above_055(m: i64, d: i64) -> bool {
    100 * m >= 55 * d
}

/// `sum_{j=1..p} C(d-j, n) - (C(d, n+1) - C(d-p, n+1))`; zero for `0 <= p <= d`.
pub fn telescoped_sum_residual(d: i64, p: i64, n: i64) -> BigInt {
    let sum: BigInt = (1..=p).map(|j| binom(d - j, n)).sum();
    sum - (binom(d, n + 1) - binom(d - p, n + 1))
}

/// Alternating sum `f_0 - f_1 + ... ± f_{d-1}`.
pub fn euler_alternating_sum(fvec: &[BigInt]) -> BigInt {
    fvec.iter()
        .enumerate()
        .map(|(i, f)| if i % 2 == 0 { f.clone() } else { -f })
        .sum()
}

/// Euler–Poincaré: the alternating sum of a `d`-polytope's f-vector is `1 - (-1)^d`.
pub fn satisfies_euler(fvec: &[BigInt]) -> bool {
    let d = fvec.len();
    let expected = if d.is_multiple_of(2) { 0 } else { 2 };
    euler_alternating_sum(fvec) == BigInt::from(expected)
}

/// True when `n` is prime.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

pub(crate) fn ceil_half(x: &BigInt) -> BigInt {
    if x.is_negative() {
        -(-x / BigInt::from(2))
    } else {
        (x + 1u32) / BigInt::from(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(big).collect()
    }

    #[test]
    fn binom_small_values_and_convention() {
        assert_eq!(binom(5, 2), big(10));
        assert_eq!(binom(3, 5), big(0));
        assert_eq!(binom(29, 2), big(406));
        assert_eq!(binom(4, -1), big(0));
        assert_eq!(binom(-3, 1), big(0));
        assert_eq!(binom(0, 0), big(1));
    }

    #[test]
    fn binom_agrees_with_pascal_triangle() {
        let mut row = vec![BigInt::one()];
        for a in 1..=60i64 {
            let mut next = vec![BigInt::one(); (a + 1) as usize];
            for b in 1..a as usize {
                next[b] = &row[b - 1] + &row[b];
            }
            row = next;
            for b in 0..=a {
                assert_eq!(binom(a, b), row[b as usize], "C({a},{b})");
            }
        }
    }

    #[test]
    fn phi_examples() {
        for d in 2..20 {
            assert_eq!(phi(1, 2 * d, d).unwrap(), big(d * d));
        }
        assert_eq!(phi(2, 10, 5).unwrap(), big(30));
        assert_eq!(phi(1, 8, 4).unwrap(), big(16));
    }

    #[test]
    fn phi_rejects_out_of_range() {
        assert!(phi(1, 4, 4).is_err());
        assert!(phi(4, 8, 4).is_err());
        assert!(phi(-1, 8, 4).is_err());
        assert!(phi(0, 3, 1).is_err());
    }

    #[test]
    fn surplus_form_examples() {
        assert_eq!(phi_edges_surplus_form(4, 4).unwrap(), big(16));
        assert_eq!(phi_edges_surplus_form(10, 4).unwrap(), big(79));
        assert_eq!(phi_edges_surplus_form(24, 6).unwrap(), big(405));
        assert!(phi_edges_surplus_form(4, 5).is_err());
        assert!(phi_edges_surplus_form(4, 0).is_err());
    }

    #[test]
    fn excess_examples() {
        assert_eq!(excess(16, 8, 4), 0);
        assert_eq!(excess(19, 9, 4), 2);
        assert_eq!(excess(11, 7, 3), 1);
        assert!(ExcessDegree::from_counts(3, 8, 4).is_err());
        assert_eq!(ExcessDegree::from_counts(19, 9, 4).unwrap().value(), 2);
    }

    #[test]
    fn outside_vertices_identity_examples() {
        assert_eq!(outside_vertices_identity_residual(5, 3, 2).unwrap(), big(0));
        assert_eq!(outside_vertices_identity_residual(10, 7, 4).unwrap(), big(0));
        assert_eq!(outside_vertices_identity_residual(50, 50, 25).unwrap(), big(0));
        assert!(outside_vertices_identity_residual(5, 6, 2).is_err());
    }

    #[test]
    fn triplex_fvector_examples() {
        assert_eq!(triplex_fvector(3, 2).unwrap(), bigs(&[5, 8, 5]));
        assert_eq!(triplex_fvector(4, 4).unwrap(), bigs(&[8, 16, 14, 6]));
        assert_eq!(triplex_fvector(5, 3).unwrap()[4], big(7));
        assert!(triplex_fvector(3, 4).is_err());
    }

    #[test]
    fn triplex_fvector_boundary_entries() {
        for d in 2..=12 {
            for k in 1..=d {
                let f = triplex_fvector(d, k).unwrap();
                assert_eq!(f[0], big(d + k));
                let facets = if k >= 2 { d + 2 } else { d + 1 };
                assert_eq!(f[(d - 1) as usize], big(facets));
            }
        }
    }

    #[test]
    fn pentasm_fvector_examples() {
        assert_eq!(pentasm_fvector(3).unwrap(), bigs(&[7, 11, 6]));
        // f_2 = C(5,3) + C(4,3) + C(3,2) = 10 + 4 + 3; Euler forces the same value.
        assert_eq!(pentasm_fvector(4).unwrap(), bigs(&[9, 19, 17, 7]));
        assert_eq!(pentasm_fvector(5).unwrap()[1], big(29));
        for d in 3..=15 {
            let f = pentasm_fvector(d).unwrap();
            assert_eq!(f[1], big(d * d + d - 1));
            assert_eq!(f[(d - 1) as usize], big(d + 3));
        }
        assert!(pentasm_fvector(2).is_err());
    }

    #[test]
    fn dplus2_examples() {
        assert_eq!(dplus2_face_count(2, 2, 0, 0).unwrap(), big(9));
        assert_eq!(dplus2_face_count(2, 2, 0, 1).unwrap(), big(18));
        assert_eq!(dplus2_face_count(2, 2, 0, 3).unwrap(), big(6));
        for (r, s, t) in [(1, 1, 0), (2, 3, 1), (3, 3, 2), (1, 4, 3)] {
            let d = r + s + t;
            assert_eq!(dplus2_face_count(r, s, t, 0).unwrap(), big((r + 1) * (s + 1) + t));
            assert_eq!(dplus2_face_count(r, s, t, d - 1).unwrap(), big(d + 2));
        }
        assert!(dplus2_face_count(0, 2, 0, 0).is_err());
    }

    #[test]
    fn margin_examples() {
        assert_eq!(alpha_margin(5, 3).unwrap(), big(2));
        assert_eq!(beta_margin(6, 3).unwrap(), big(4));
        assert_eq!(alpha_margin(4, 4).unwrap(), big(0));
        assert!(alpha_margin(5, 1).is_err());
        assert!(beta_margin(5, 2).is_err());
        // factored forms from hand arithmetic: (8/12)*3 and (32/24)*3
        assert_eq!(
            alpha_margin_factored(5, 3).unwrap(),
            BigRational::from_integer(big(2))
        );
        assert_eq!(beta_cubic(3, 6), big(32));
        assert_eq!(
            beta_margin_factored(6, 3).unwrap(),
            BigRational::from_integer(big(4))
        );
    }

    #[test]
    fn threshold_examples() {
        assert!(above_alpha(62, 100));
        assert!(!above_alpha(61, 100));
        assert!(above_beta(55, 100));
        assert!(!above_beta(54, 100));
        assert!(above_062(62, 100));
        assert!(!above_062(61, 100));
    }

    #[test]
    fn euler_on_formula_vectors() {
        for d in 2..=20 {
            for k in 1..=d {
                assert!(satisfies_euler(&triplex_fvector(d, k).unwrap()), "triplex d={d} k={k}");
            }
        }
        for d in 3..=20 {
            assert!(satisfies_euler(&pentasm_fvector(d).unwrap()), "pentasm d={d}");
        }
    }

    #[test]
    fn primes() {
        let small: Vec<i64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn ceil_half_rounds_up() {
        assert_eq!(ceil_half(&big(7)), big(4));
        assert_eq!(ceil_half(&big(8)), big(4));
        assert_eq!(ceil_half(&big(-3)), big(-1));
    }
}
