//! Closed-form weight distributions for the supported code families, plus
//! generator-matrix constructions so every formula can be cross-checked
//! against brute-force enumeration.
//!
//! All arithmetic is exact. Formulas that divide check divisibility and
//! panic on a remainder: an inexact division means the formula is wrong,
//! not that rounding is wanted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::code::{CodeError, GeneratorMatrix, LinearCode, WeightDistribution};
use crate::field::FieldSpec;
use crate::limbs::Slint;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameters: {0}")]
    BadParams(String),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParams(msg.into())
}

/// C(n, k) as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// a / b, panicking unless the division is exact.
fn exact_div(a: BigInt, b: &BigInt) -> BigInt {
    use num_traits::ToPrimitive;
    if let Some(d) = b.to_u64() {
        let mut s = Slint::from_bigint(&a);
        assert!(s.div_scalar_exact(d), "inexact division by {b}");
        return s.to_bigint();
    }
    use num_integer::Integer;
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division by {b}");
    q
}

/// prod_{i=a}^{b} (q^i - 1); empty product for a > b.
fn qpow_product(q: u64, a: u32, b: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in a..=b {
        acc *= BigInt::from(q).pow(i) - 1;
    }
    acc
}

fn check_prime_power(q: u64) -> Result<FieldSpec, FamilyError> {
    FieldSpec::new(q).map_err(|e| bad(e.to_string()))
}

// ---------------------------------------------------------------------------
// closed forms

/// GF(q)^n itself: A_i = C(n,i)(q-1)^i.
pub fn wd_full_space(n: usize, q: u64) -> Result<WeightDistribution, FamilyError> {
    if n < 1 {
        return Err(bad("full_space needs n >= 1"));
    }
    if q < 2 {
        return Err(bad("full_space needs q >= 2"));
    }
    let counts = (0..=n)
        .map(|i| binomial(n as u64, i as u64) * BigInt::from(q - 1).pow(i as u32))
        .collect();
    Ok(WeightDistribution::new(q as u32, n, n, counts))
}

/// The binary even-weight [n, n-1] code.
pub fn wd_even(n: usize) -> Result<WeightDistribution, FamilyError> {
    if n < 2 {
        return Err(bad("even needs n >= 2"));
    }
    let counts = (0..=n)
        .map(|i| {
            if i % 2 == 0 {
                binomial(n as u64, i as u64)
            } else {
                BigInt::zero()
            }
        })
        .collect();
    Ok(WeightDistribution::new(2, n, n - 1, counts))
}

/// The q-ary simplex code: all nonzero words have weight q^{m-1}.
pub fn wd_simplex(m: u32, q: u64) -> Result<WeightDistribution, FamilyError> {
    if m < 2 {
        return Err(bad("simplex needs m >= 2"));
    }
    check_prime_power(q)?;
    let n: usize = ((BigInt::from(q).pow(m) - BigInt::from(1)) / BigInt::from(q - 1))
        .try_into()
        .map_err(|_| bad("simplex length overflows"))?;
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::one();
    counts[q.pow(m - 1) as usize] = BigInt::from(q).pow(m) - 1;
    Ok(WeightDistribution::new(q as u32, n, m as usize, counts))
}

/// First order Reed-Muller code R(1, m).
pub fn wd_rm1(m: u32) -> Result<WeightDistribution, FamilyError> {
    if m < 1 {
        return Err(bad("rm1 needs m >= 1"));
    }
    let n = 1usize << m;
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::one();
    counts[n] = BigInt::one();
    counts[n / 2] = BigInt::from(2u64.pow(m + 1) - 2);
    Ok(WeightDistribution::new(2, n, m as usize + 1, counts))
}

const GOLAY23_TABLE: [(usize, u64); 8] = [
    (0, 1),
    (7, 253),
    (8, 506),
    (11, 1288),
    (12, 1288),
    (15, 506),
    (16, 253),
    (23, 1),
];

const GOLAY24_TABLE: [(usize, u64); 5] = [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)];

pub fn wd_golay23() -> WeightDistribution {
    let mut counts = vec![BigInt::zero(); 24];
    for (w, a) in GOLAY23_TABLE {
        counts[w] = BigInt::from(a);
    }
    WeightDistribution::new(2, 23, 12, counts)
}

pub fn wd_golay24() -> WeightDistribution {
    let mut counts = vec![BigInt::zero(); 25];
    for (w, a) in GOLAY24_TABLE {
        counts[w] = BigInt::from(a);
    }
    WeightDistribution::new(2, 24, 12, counts)
}

/// Binary Hamming code of length n = 2^m - 1:
/// A_{2i}   = (C(n,2i)   + (-1)^i n C((n-1)/2, i)) / (n+1),
/// A_{2i+1} = (C(n,2i+1) - (-1)^i n C((n-1)/2, i)) / (n+1).
pub fn wd_hamming_binary(m: u32) -> Result<WeightDistribution, FamilyError> {
    if m < 2 {
        return Err(bad("hamming2 needs m >= 2"));
    }
    let n = (1u64 << m) - 1;
    let half = (n - 1) / 2;
    // the code contains the all-ones word, so A_w = A_{n-w}: compute the
    // lower half and mirror the rest
    let top = (n - 1) / 2;
    let mut counts = vec![BigInt::zero(); n as usize + 1];
    let mut c_n_w = Slint::one(); // C(n, w), updated as w grows
    let mut c_half = Slint::from_u64(n); // n * C((n-1)/2, i)
    let mut term = Slint::zero();
    for w in 0..=top {
        let i = w / 2;
        let sign_pos = i % 2 == 0;
        let plus = (w % 2 == 0) == sign_pos;
        Slint::lincomb_into(&mut term, 1, &c_n_w, if plus { 1 } else { -1 }, &c_half);
        counts[w as usize] = term
            .to_bigint_shr(m)
            .expect("hamming2 counts divide by n + 1");
        if w == top {
            break;
        }
        assert!(c_n_w.mul_div_scalar_exact(n - w, w + 1));
        if w % 2 == 1 {
            // advance i after consuming both parities
            let i = w / 2;
            if i < half {
                assert!(c_half.mul_div_scalar_exact(half - i, i + 1));
            } else {
                c_half = Slint::zero();
            }
        }
    }
    for w in top as usize + 1..=n as usize {
        counts[w] = counts[n as usize - w].clone();
    }
    Ok(WeightDistribution::new(
        2,
        n as usize,
        (n - m as u64) as usize,
        counts,
    ))
}

/// Extended binary Hamming code of length n = 2^m:
/// A_{2i} = (C(n,2i) + (-1)^i (n-1) C(n/2, i)) / n, odd counts zero.
pub fn wd_ext_hamming_binary(m: u32) -> Result<WeightDistribution, FamilyError> {
    if m < 2 {
        return Err(bad("ext_hamming2 needs m >= 2"));
    }
    let n = 1u64 << m;
    let mut counts = vec![BigInt::zero(); n as usize + 1];
    let mut c_half = Slint::from_u64(n - 1); // (n-1) * C(n/2, i)
    let mut c_n_2i = Slint::one(); // C(n, 2i)
    let mut term = Slint::zero();
    // A_{2i} = A_{n-2i} (the code contains the all-ones word): compute up
    // to the middle and mirror the rest
    let top = n / 4;
    for i in 0..=top {
        let plus = i % 2 == 0;
        Slint::lincomb_into(&mut term, 1, &c_n_2i, if plus { 1 } else { -1 }, &c_half);
        counts[2 * i as usize] = term
            .to_bigint_shr(m)
            .expect("ext_hamming2 counts divide by n");
        if i < top {
            match (
                (n - 2 * i).checked_mul(n - 2 * i - 1),
                (2 * i + 1).checked_mul(2 * i + 2),
            ) {
                (Some(num), Some(den)) => assert!(c_n_2i.mul_div_scalar_exact(num, den)),
                _ => {
                    assert!(c_n_2i.mul_div_scalar_exact(n - 2 * i, 2 * i + 1));
                    assert!(c_n_2i.mul_div_scalar_exact(n - 2 * i - 1, 2 * i + 2));
                }
            }
            assert!(c_half.mul_div_scalar_exact(n / 2 - i, i + 1));
        }
    }
    for i in top as usize + 1..=n as usize / 2 {
        counts[2 * i] = counts[n as usize - 2 * i].clone();
    }
    Ok(WeightDistribution::new(
        2,
        n as usize,
        (n - m as u64 - 1) as usize,
        counts,
    ))
}

/// q-ary Hamming code of length n = (q^m - 1)/(q - 1):
/// q^m A_w = (q-1)^w C(n,w)
///           + n(q-1) sum_{i+j=w} C(n - q^{m-1}, i) C(q^{m-1}, j) (q-1)^i (-1)^j.
pub fn wd_hamming_q(m: u32, q: u64) -> Result<WeightDistribution, FamilyError> {
    if m < 2 {
        return Err(bad("hamming_q needs m >= 2"));
    }
    check_prime_power(q)?;
    let n: u64 = ((BigInt::from(q).pow(m) - BigInt::from(1)) / BigInt::from(q - 1))
        .try_into()
        .map_err(|_| bad("hamming_q length overflows"))?;
    let a = n - q.pow(m - 1); // (q^{m-1} - 1)/(q - 1)
    let b = q.pow(m - 1);
    let divisor = BigInt::from(q).pow(m);
    let nq1 = BigInt::from(n) * (q - 1);
    let qm1 = BigInt::from(q - 1);
    let mut counts = Vec::with_capacity(n as usize + 1);
    for w in 0..=n {
        let mut sum = BigInt::zero();
        for i in 0..=w.min(a) {
            let j = w - i;
            if j > b {
                continue;
            }
            let term = binomial(a, i) * binomial(b, j) * qm1.pow(i as u32);
            if j % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let total = binomial(n, w) * qm1.pow(w as u32) + &nq1 * sum;
        counts.push(exact_div(total, &divisor));
    }
    Ok(WeightDistribution::new(
        q as u32,
        n as usize,
        (n - m as u64) as usize,
        counts,
    ))
}

/// Second order Reed-Muller code R(2, m). Nonzero weights are 0, 2^m,
/// 2^{m-1}, and 2^{m-1} +- 2^{m-j-1} for 1 <= j <= floor(m/2).
pub fn wd_rm2(m: u32) -> Result<WeightDistribution, FamilyError> {
    if m < 2 {
        return Err(bad("rm2 needs m >= 2"));
    }
    let n = 1usize << m;
    let k = 1 + m as usize + (m as usize * (m as usize - 1)) / 2;
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::one();
    counts[n] = BigInt::one();
    let mut middle = BigInt::from(2u64.pow(m) - 1);
    for l in 1..=(m - 1) / 2 {
        middle += exact_div(
            BigInt::from(2u64).pow(l * l + l) * qpow_product(2, m - 2 * l, m),
            &prod_even(2, l),
        );
    }
    counts[n / 2] = middle * 2;
    for j in 1..=m / 2 {
        let freq = exact_div(
            BigInt::from(2u64).pow(j * j + j) * qpow_product(2, m - 2 * j + 1, m),
            &prod_even(2, j),
        );
        let off = 1usize << (m - j - 1);
        counts[n / 2 - off] += freq.clone();
        counts[n / 2 + off] += freq;
    }
    Ok(WeightDistribution::new(2, n, k, counts))
}

/// prod_{i=1}^{j} (q^{2i} - 1).
fn prod_even(q: u64, j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=j {
        acc *= BigInt::from(q).pow(2 * i) - 1;
    }
    acc
}

/// Homogeneous second order Reed-Muller code of length q^m. Weights follow
/// the pattern q^m - q^{m-1} - t q^{m-j-1}(q-1) for t = -1, 0, +1.
pub fn wd_hrm2(q: u64, m: u32) -> Result<WeightDistribution, FamilyError> {
    if m < 2 {
        return Err(bad("hrm2 needs m >= 2"));
    }
    check_prime_power(q)?;
    let n: usize = BigInt::from(q)
        .pow(m)
        .try_into()
        .map_err(|_| bad("hrm2 length overflows"))?;
    let k = (m as usize * (m as usize + 1)) / 2;
    let w0 = n - n / q as usize; // q^m - q^{m-1}
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::one();
    let mut middle = BigInt::from(q).pow(m) - 1;
    for l in 1..=(m - 1) / 2 {
        middle += exact_div(
            BigInt::from(q).pow(l * l + l) * qpow_product(q, m - 2 * l, m),
            &prod_even(q, l),
        );
    }
    counts[w0] = middle;
    for j in 1..=m / 2 {
        let base = exact_div(
            BigInt::from(q).pow(j * j) * qpow_product(q, m - 2 * j + 1, m),
            &prod_even(q, j),
        );
        let off = q.pow(m - j - 1) as usize * (q as usize - 1);
        for tau in [1i64, -1] {
            let freq = exact_div(&base * (BigInt::from(q).pow(j) + tau), &BigInt::from(2));
            let w = (w0 as i64 - tau * off as i64) as usize;
            counts[w] += freq;
        }
    }
    Ok(WeightDistribution::new(q as u32, n, k, counts))
}

/// Projective second order Reed-Muller code of length (q^{m+1}-1)/(q-1).
///
/// Codewords correspond one-to-one with those of the homogeneous code in
/// m+1 variables, with every weight scaled down by q - 1.
pub fn wd_prm2(q: u64, m: u32) -> Result<WeightDistribution, FamilyError> {
    if m < 2 {
        return Err(bad("prm2 needs m >= 2"));
    }
    let hrm = wd_hrm2(q, m + 1)?;
    let n = (hrm.n - 1) / (q as usize - 1); // (q^{m+1} - 1)/(q - 1) points
    let k = ((m as usize + 1) * (m as usize + 2)) / 2;
    let mut counts = vec![BigInt::zero(); n + 1];
    for (w, c) in hrm.counts.iter().enumerate() {
        if !c.is_zero() {
            assert_eq!(w % (q as usize - 1), 0, "homogeneous weight not scalable");
            counts[w / (q as usize - 1)] += c;
        }
    }
    Ok(WeightDistribution::new(q as u32, n, k, counts))
}

/// The unique hypothetical MDS weight distribution for [n, k] over GF(q):
/// A_w = C(n,w)(q-1) sum_{j=0}^{w-d} (-1)^j C(w-1,j) q^{w-d-j}, d = n-k+1.
///
/// Existence of an actual code is not checked; for parameters where none
/// exists some counts can come out negative.
pub fn wd_mds(n: usize, k: usize, q: u64) -> Result<WeightDistribution, FamilyError> {
    if k < 1 || k > n {
        return Err(bad("mds needs 1 <= k <= n"));
    }
    if q < 2 {
        return Err(bad("mds needs q >= 2"));
    }
    let d = n - k + 1;
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::one();
    for w in d..=n {
        let mut sum = BigInt::zero();
        for j in 0..=(w - d) {
            let term = binomial(w as u64 - 1, j as u64) * BigInt::from(q).pow((w - d - j) as u32);
            if j % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        counts[w] = binomial(n as u64, w as u64) * (q - 1) * sum;
    }
    Ok(WeightDistribution::new(q as u32, n, k, counts))
}

// ---------------------------------------------------------------------------
// generator constructions

/// All vectors in GF(q)^m whose first nonzero coordinate is 1, in
/// lexicographic order. One representative per projective point.
fn projective_points(field: &FieldSpec, m: u32) -> Vec<Vec<u32>> {
    let q = field.q();
    let total = (q as u64).pow(m);
    let mut pts = Vec::new();
    for idx in 0..total {
        let mut v = vec![0u32; m as usize];
        let mut t = idx;
        for slot in (0..m as usize).rev() {
            v[slot] = (t % q as u64) as u32;
            t /= q as u64;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            pts.push(v);
        }
    }
    pts
}

pub fn gen_full_space(n: usize, q: u64) -> Result<GeneratorMatrix, FamilyError> {
    if n < 1 {
        return Err(bad("full_space needs n >= 1"));
    }
    let field = check_prime_power(q)?;
    let mut entries = vec![0u32; n * n];
    for i in 0..n {
        entries[i * n + i] = 1;
    }
    Ok(GeneratorMatrix::new(field, n, n, entries).unwrap())
}

pub fn gen_even(n: usize) -> Result<GeneratorMatrix, FamilyError> {
    if n < 2 {
        return Err(bad("even needs n >= 2"));
    }
    let field = FieldSpec::new(2).unwrap();
    let k = n - 1;
    let mut entries = vec![0u32; k * n];
    for i in 0..k {
        entries[i * n + i] = 1;
        entries[i * n + i + 1] = 1;
    }
    Ok(GeneratorMatrix::new(field, n, k, entries).unwrap())
}

/// Simplex code: projective points as columns of an m x n matrix.
pub fn gen_simplex(m: u32, q: u64) -> Result<GeneratorMatrix, FamilyError> {
    if m < 2 {
        return Err(bad("simplex needs m >= 2"));
    }
    let field = check_prime_power(q)?;
    let pts = projective_points(&field, m);
    let n = pts.len();
    let mut entries = vec![0u32; m as usize * n];
    for (col, p) in pts.iter().enumerate() {
        for row in 0..m as usize {
            entries[row * n + col] = p[row];
        }
    }
    Ok(GeneratorMatrix::new(field, n, m as usize, entries).unwrap())
}

/// q-ary Hamming code: the dual of the simplex code.
pub fn gen_hamming_q(m: u32, q: u64) -> Result<GeneratorMatrix, FamilyError> {
    let simplex = LinearCode::new(gen_simplex(m, q)?).expect("simplex has full rank");
    Ok(simplex.dual().generator().clone())
}

/// Extended binary Hamming code: the dual of R(1, m).
pub fn gen_ext_hamming2(m: u32) -> Result<GeneratorMatrix, FamilyError> {
    if m < 2 {
        return Err(bad("ext_hamming2 needs m >= 2"));
    }
    let rm1 = LinearCode::new(gen_rm(1, m)?).expect("rm(1,m) has full rank");
    Ok(rm1.dual().generator().clone())
}

/// Reed-Muller code R(r, m): evaluations of squarefree monomials of degree
/// at most r at all points of GF(2)^m.
pub fn gen_rm(r: u32, m: u32) -> Result<GeneratorMatrix, FamilyError> {
    if m < 1 || r > m {
        return Err(bad("rm needs 1 <= r and r <= m"));
    }
    let field = FieldSpec::new(2).unwrap();
    let n = 1usize << m;
    // monomials as variable subsets, ordered by degree then index pattern
    let mut monomials: Vec<u32> = (0..1u32 << m).filter(|s| s.count_ones() <= r).collect();
    monomials.sort_by_key(|s| (s.count_ones(), *s));
    let k = monomials.len();
    let mut entries = vec![0u32; k * n];
    for (row, &s) in monomials.iter().enumerate() {
        for x in 0..n {
            // monomial value: every variable in s must be 1 at point x
            entries[row * n + x] = (((x as u32) & s) == s) as u32;
        }
    }
    Ok(GeneratorMatrix::new(field, n, k, entries).unwrap())
}

/// Points of GF(q)^m in lexicographic order (first coordinate varies
/// slowest).
fn affine_points(q: u32, m: u32) -> Vec<Vec<u32>> {
    let total = (q as u64).pow(m);
    (0..total)
        .map(|idx| {
            let mut v = vec![0u32; m as usize];
            let mut t = idx;
            for slot in (0..m as usize).rev() {
                v[slot] = (t % q as u64) as u32;
                t /= q as u64;
            }
            v
        })
        .collect()
}

fn quadratic_rows(field: &FieldSpec, nvars: u32, pts: &[Vec<u32>]) -> Vec<u32> {
    let n = pts.len();
    let mut entries = Vec::new();
    for i in 0..nvars as usize {
        for j in i..nvars as usize {
            let mut row = vec![0u32; n];
            for (col, p) in pts.iter().enumerate() {
                row[col] = field.mul(p[i], p[j]);
            }
            entries.extend(row);
        }
    }
    entries
}

/// Homogeneous second order Reed-Muller code: evaluations of x_i x_j
/// (i <= j) at all points of GF(q)^m.
pub fn gen_hrm2(q: u64, m: u32) -> Result<GeneratorMatrix, FamilyError> {
    if m < 2 {
        return Err(bad("hrm2 needs m >= 2"));
    }
    let field = check_prime_power(q)?;
    let pts = affine_points(field.q(), m);
    let entries = quadratic_rows(&field, m, &pts);
    let k = (m as usize * (m as usize + 1)) / 2;
    Ok(GeneratorMatrix::new(field, pts.len(), k, entries).unwrap())
}

/// Projective second order Reed-Muller code: evaluations of x_i x_j
/// (0 <= i <= j <= m) at the normalized points of PG(m, q).
pub fn gen_prm2(q: u64, m: u32) -> Result<GeneratorMatrix, FamilyError> {
    if m < 2 {
        return Err(bad("prm2 needs m >= 2"));
    }
    let field = check_prime_power(q)?;
    let pts = projective_points(&field, m + 1);
    let entries = quadratic_rows(&field, m + 1, &pts);
    let k = ((m as usize + 1) * (m as usize + 2)) / 2;
    Ok(GeneratorMatrix::new(field, pts.len(), k, entries).unwrap())
}

/// Reed-Solomon style MDS code: Vandermonde rows over the first n field
/// elements in value order, with an extra (0,...,0,1) column when n = q+1.
pub fn gen_rs_mds(n: usize, k: usize, q: u64) -> Result<GeneratorMatrix, FamilyError> {
    let field = check_prime_power(q)?;
    let hyperoval = n == q as usize + 2 && k == 3 && q % 2 == 0;
    if k < 1 || k > n || (n > q as usize + 1 && !hyperoval) {
        return Err(bad(
            "rs_mds needs 1 <= k <= n <= q + 1, or n = q + 2 with k = 3 and q even",
        ));
    }
    let mut entries = vec![0u32; k * n];
    if hyperoval {
        // conic {(1, x, x^2)} plus its nucleus (0, 1, 0) and (0, 0, 1):
        // for even q these q + 2 points have no three collinear
        for col in 0..q as usize {
            entries[col] = 1;
            entries[n + col] = col as u32;
            entries[2 * n + col] = field.mul(col as u32, col as u32);
        }
        entries[n + q as usize] = 1;
        entries[2 * n + q as usize + 1] = 1;
        return Ok(GeneratorMatrix::new(field, n, k, entries).unwrap());
    }
    let extended = n == q as usize + 1;
    let plain = if extended { n - 1 } else { n };
    for row in 0..k {
        for col in 0..plain {
            entries[row * n + col] = field.pow(col as u32, row as u64);
        }
    }
    if extended {
        entries[(k - 1) * n + n - 1] = 1;
    }
    Ok(GeneratorMatrix::new(field, n, k, entries).unwrap())
}

/// Generator polynomial of the [23, 12] Golay code, low coefficient first.
const GOLAY_G: [u32; 12] = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1];

pub fn gen_golay23() -> GeneratorMatrix {
    let field = FieldSpec::new(2).unwrap();
    let mut entries = vec![0u32; 12 * 23];
    for row in 0..12 {
        for (i, &c) in GOLAY_G.iter().enumerate() {
            entries[row * 23 + row + i] = c;
        }
    }
    GeneratorMatrix::new(field, 23, 12, entries).unwrap()
}

/// Extended Golay code: each generator row gets an overall parity bit.
pub fn gen_golay24() -> GeneratorMatrix {
    let g23 = gen_golay23();
    let mut entries = Vec::with_capacity(12 * 24);
    for row in 0..12 {
        let r = g23.row(row);
        let parity = r.iter().sum::<u32>() % 2;
        entries.extend_from_slice(r);
        entries.push(parity);
    }
    GeneratorMatrix::new(g23.field, 24, 12, entries).unwrap()
}

// ---------------------------------------------------------------------------
// dispatch

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    FullSpace,
    Even,
    Simplex,
    Rm1,
    Golay23,
    Golay24,
    Hamming2,
    ExtHamming2,
    HammingQ,
    Rm2,
    Hrm2,
    Prm2,
    Mds,
}

impl Family {
    pub const ALL: [(&'static str, Family); 13] = [
        ("full_space", Family::FullSpace),
        ("even", Family::Even),
        ("simplex", Family::Simplex),
        ("rm1", Family::Rm1),
        ("golay23", Family::Golay23),
        ("golay24", Family::Golay24),
        ("hamming2", Family::Hamming2),
        ("ext_hamming2", Family::ExtHamming2),
        ("hamming_q", Family::HammingQ),
        ("rm2", Family::Rm2),
        ("hrm2", Family::Hrm2),
        ("prm2", Family::Prm2),
        ("mds", Family::Mds),
    ];

    pub fn parse(name: &str) -> Result<Family, FamilyError> {
        Family::ALL
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, f)| f)
            .ok_or_else(|| bad(format!("unknown family {name:?}")))
    }

    pub fn name(self) -> &'static str {
        Family::ALL.iter().find(|&&(_, f)| f == self).unwrap().0
    }
}

/// A family name plus its integer parameters.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: BTreeMap<String, u64>) -> Self {
        FamilySpec { family, params }
    }

    fn param(&self, name: &str) -> Result<u64, FamilyError> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| bad(format!("{} needs parameter {name}", self.family.name())))
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution, FamilyError> {
        match self.family {
            Family::FullSpace => wd_full_space(self.param("n")? as usize, self.param("q")?),
            Family::Even => wd_even(self.param("n")? as usize),
            Family::Simplex => wd_simplex(self.param("m")? as u32, self.param("q")?),
            Family::Rm1 => wd_rm1(self.param("m")? as u32),
            Family::Golay23 => Ok(wd_golay23()),
            Family::Golay24 => Ok(wd_golay24()),
            Family::Hamming2 => wd_hamming_binary(self.param("m")? as u32),
            Family::ExtHamming2 => wd_ext_hamming_binary(self.param("m")? as u32),
            Family::HammingQ => wd_hamming_q(self.param("m")? as u32, self.param("q")?),
            Family::Rm2 => wd_rm2(self.param("m")? as u32),
            Family::Hrm2 => wd_hrm2(self.param("q")?, self.param("m")? as u32),
            Family::Prm2 => wd_prm2(self.param("q")?, self.param("m")? as u32),
            Family::Mds => wd_mds(
                self.param("n")? as usize,
                self.param("k")? as usize,
                self.param("q")?,
            ),
        }
    }

    pub fn generator(&self) -> Result<GeneratorMatrix, FamilyError> {
        match self.family {
            Family::FullSpace => gen_full_space(self.param("n")? as usize, self.param("q")?),
            Family::Even => gen_even(self.param("n")? as usize),
            Family::Simplex => gen_simplex(self.param("m")? as u32, self.param("q")?),
            Family::Rm1 => gen_rm(1, self.param("m")? as u32),
            Family::Golay23 => Ok(gen_golay23()),
            Family::Golay24 => Ok(gen_golay24()),
            Family::Hamming2 => gen_hamming_q(self.param("m")? as u32, 2),
            Family::ExtHamming2 => gen_ext_hamming2(self.param("m")? as u32),
            Family::HammingQ => gen_hamming_q(self.param("m")? as u32, self.param("q")?),
            Family::Rm2 => gen_rm(2, self.param("m")? as u32),
            Family::Hrm2 => gen_hrm2(self.param("q")?, self.param("m")? as u32),
            Family::Prm2 => gen_prm2(self.param("q")?, self.param("m")? as u32),
            Family::Mds => gen_rs_mds(
                self.param("n")? as usize,
                self.param("k")? as usize,
                self.param("q")?,
            ),
        }
    }
}

/// Brute-force the generator for a family spec and compare against the
/// closed form. Used by tests and the verify command.
pub fn cross_check(spec: &FamilySpec, budget: u64) -> Result<bool, CodeError> {
    let wd = spec
        .weight_distribution()
        .map_err(|e| CodeError::BadMatrix(e.to_string()))?;
    let gen = spec
        .generator()
        .map_err(|e| CodeError::BadMatrix(e.to_string()))?;
    let brute = LinearCode::new(gen)?.brute_weight_distribution(budget)?;
    Ok(wd.counts == brute.counts && wd.n == brute.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BRUTE_BUDGET;

    fn counts_of(wd: &WeightDistribution) -> Vec<i64> {
        wd.counts
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn spec(family: Family, params: &[(&str, u64)]) -> FamilySpec {
        FamilySpec::new(
            family,
            params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        )
    }

    #[test]
    fn basic_families() {
        assert_eq!(counts_of(&wd_even(4).unwrap()), vec![1, 0, 6, 0, 1]);
        assert_eq!(counts_of(&wd_full_space(2, 2).unwrap()), vec![1, 2, 1]);
        let s = wd_simplex(3, 2).unwrap();
        assert_eq!(s.n, 7);
        assert_eq!(counts_of(&s), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        assert_eq!(counts_of(&wd_rm1(3).unwrap()), vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        let g = wd_golay23();
        assert_eq!(g.counts[7], BigInt::from(253));
        assert_eq!(g.counts[8], BigInt::from(506));
        assert_eq!(g.counts[11], BigInt::from(1288));
        assert_eq!(g.counts[12], BigInt::from(1288));
        assert_eq!(g.counts[23], BigInt::from(1));
        assert!(g.is_valid());
        assert!(wd_golay24().is_valid());
        assert_eq!(wd_even(1).unwrap_err(), FamilyError::BadParams("even needs n >= 2".into()));
    }

    #[test]
    fn hamming_binary_small() {
        assert_eq!(counts_of(&wd_hamming_binary(3).unwrap()), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(
            counts_of(&wd_hamming_binary(4).unwrap()),
            vec![1, 0, 0, 35, 105, 168, 280, 435, 435, 280, 168, 105, 35, 0, 0, 1]
        );
        let h5 = wd_hamming_binary(5).unwrap();
        assert_eq!(h5.counts[3], BigInt::from(155));
        assert_eq!(h5.counts[4], BigInt::from(1085));
        assert_eq!(h5.counts[5], BigInt::from(5208));
        assert_eq!(h5.counts[15], BigInt::from(9398115u64));
        assert_eq!(h5.counts[16], BigInt::from(9398115u64));
        assert!(h5.is_valid());
        assert!(h5.is_symmetric());
    }

    #[test]
    fn hamming_binary_zero_pattern() {
        for m in 3..=10 {
            let h = wd_hamming_binary(m).unwrap();
            let n = h.n;
            assert!(h.counts[1].is_zero() && h.counts[2].is_zero());
            assert!(h.counts[n - 1].is_zero() && h.counts[n - 2].is_zero());
            for w in 3..=n - 3 {
                assert!(h.counts[w] > BigInt::zero(), "m={m} w={w}");
            }
        }
    }

    #[test]
    fn ext_hamming_small() {
        let e3 = wd_ext_hamming_binary(3).unwrap();
        assert_eq!(counts_of(&e3), vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        let e4 = wd_ext_hamming_binary(4).unwrap();
        let nonzero: Vec<i64> = counts_of(&e4).into_iter().filter(|&c| c != 0).collect();
        assert_eq!(nonzero, vec![1, 140, 448, 870, 448, 140, 1]);
        assert!(e4.is_valid());
        assert!(e4.is_symmetric());
    }

    #[test]
    fn hamming_q_examples() {
        assert_eq!(counts_of(&wd_hamming_q(2, 4).unwrap()), vec![1, 0, 0, 30, 15, 18]);
        // the ternary tetracode: A_4 vanishes
        assert_eq!(counts_of(&wd_hamming_q(2, 3).unwrap()), vec![1, 0, 0, 8, 0]);
        let h33 = wd_hamming_q(3, 3).unwrap();
        assert!(h33.is_valid());
        let brute = LinearCode::new(gen_hamming_q(3, 3).unwrap())
            .unwrap()
            .brute_weight_distribution(DEFAULT_BRUTE_BUDGET)
            .unwrap();
        assert_eq!(h33.counts, brute.counts);
    }

    #[test]
    fn rm2_examples() {
        assert_eq!(counts_of(&wd_rm2(2).unwrap()), vec![1, 4, 6, 4, 1]);
        assert_eq!(counts_of(&wd_rm2(3).unwrap()), vec![1, 0, 28, 0, 70, 0, 28, 0, 1]);
        for m in 2..=5u32 {
            let wd = wd_rm2(m).unwrap();
            assert!(wd.is_valid(), "m={m}");
            assert!(wd.is_symmetric(), "m={m}");
            let k = 1 + m + m * (m - 1) / 2;
            assert_eq!(wd.total(), BigInt::from(2u64).pow(k));
        }
    }

    #[test]
    fn hrm2_examples() {
        let h32 = wd_hrm2(3, 2).unwrap();
        assert_eq!(counts_of(&h32), vec![1, 0, 0, 0, 12, 0, 8, 0, 6, 0]);
        let h23 = wd_hrm2(2, 3).unwrap();
        assert_eq!(counts_of(&h23), vec![1, 0, 21, 0, 35, 0, 7, 0, 0]);
        let h33 = wd_hrm2(3, 3).unwrap();
        assert_eq!(h33.counts[12], BigInt::from(156));
        assert_eq!(h33.counts[18], BigInt::from(494));
        assert_eq!(h33.counts[24], BigInt::from(78));
        for (q, m) in [(2u64, 2u32), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)] {
            let wd = wd_hrm2(q, m).unwrap();
            assert_eq!(
                wd.total(),
                BigInt::from(q).pow(m * (m + 1) / 2),
                "q={q} m={m}"
            );
        }
    }

    #[test]
    fn prm2_examples() {
        let p32 = wd_prm2(3, 2).unwrap();
        assert_eq!(p32.n, 13);
        assert_eq!(p32.counts[6], BigInt::from(156));
        assert_eq!(p32.counts[9], BigInt::from(494));
        assert_eq!(p32.counts[12], BigInt::from(78));
        assert_eq!(p32.total(), BigInt::from(3u64).pow(6));
        // nonzero count multisets match the homogeneous code one dimension up
        for (q, m) in [(2u64, 2u32), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)] {
            let mut p: Vec<BigInt> = wd_prm2(q, m)
                .unwrap()
                .counts
                .into_iter()
                .filter(|c| !c.is_zero())
                .collect();
            let mut h: Vec<BigInt> = wd_hrm2(q, m + 1)
                .unwrap()
                .counts
                .into_iter()
                .filter(|c| !c.is_zero())
                .collect();
            p.sort();
            h.sort();
            assert_eq!(p, h, "q={q} m={m}");
        }
    }

    #[test]
    fn mds_examples() {
        assert_eq!(counts_of(&wd_mds(5, 3, 5).unwrap()), vec![1, 0, 0, 40, 40, 44]);
        assert_eq!(counts_of(&wd_mds(5, 3, 4).unwrap()), vec![1, 0, 0, 30, 15, 18]);
        assert_eq!(counts_of(&wd_mds(6, 4, 5).unwrap()), vec![1, 0, 0, 80, 120, 264, 160]);
        // full-length case degenerates to the full space
        for (n, q) in [(4usize, 3u64), (5, 4), (6, 2)] {
            assert_eq!(
                wd_mds(n, n, q).unwrap().counts,
                wd_full_space(n, q).unwrap().counts
            );
        }
        // q = 4, n = q + 2: the two exceptional counts A_4 = 45, A_6 = 18
        let e = wd_mds(6, 3, 4).unwrap();
        assert_eq!(counts_of(&e), vec![1, 0, 0, 0, 45, 0, 18]);
    }

    #[test]
    fn closed_forms_match_brute_force() {
        let cases = [
            spec(Family::FullSpace, &[("n", 4), ("q", 3)]),
            spec(Family::Even, &[("n", 6)]),
            spec(Family::Simplex, &[("m", 3), ("q", 2)]),
            spec(Family::Simplex, &[("m", 2), ("q", 4)]),
            spec(Family::Rm1, &[("m", 4)]),
            spec(Family::Golay23, &[]),
            spec(Family::Golay24, &[]),
            spec(Family::Hamming2, &[("m", 3)]),
            spec(Family::Hamming2, &[("m", 4)]),
            spec(Family::ExtHamming2, &[("m", 3)]),
            spec(Family::ExtHamming2, &[("m", 4)]),
            spec(Family::HammingQ, &[("m", 2), ("q", 3)]),
            spec(Family::HammingQ, &[("m", 2), ("q", 4)]),
            spec(Family::HammingQ, &[("m", 2), ("q", 5)]),
            spec(Family::Rm2, &[("m", 2)]),
            spec(Family::Rm2, &[("m", 3)]),
            spec(Family::Rm2, &[("m", 4)]),
            spec(Family::Hrm2, &[("q", 2), ("m", 3)]),
            spec(Family::Hrm2, &[("q", 2), ("m", 4)]),
            spec(Family::Hrm2, &[("q", 3), ("m", 2)]),
            spec(Family::Hrm2, &[("q", 3), ("m", 3)]),
            spec(Family::Hrm2, &[("q", 4), ("m", 2)]),
            spec(Family::Prm2, &[("q", 2), ("m", 2)]),
            spec(Family::Prm2, &[("q", 2), ("m", 3)]),
            spec(Family::Prm2, &[("q", 3), ("m", 2)]),
            spec(Family::Mds, &[("n", 5), ("k", 3), ("q", 5)]),
            spec(Family::Mds, &[("n", 5), ("k", 3), ("q", 4)]),
            spec(Family::Mds, &[("n", 6), ("k", 4), ("q", 5)]),
            spec(Family::Mds, &[("n", 8), ("k", 4), ("q", 7)]),
        ];
        for s in &cases {
            assert!(
                cross_check(s, DEFAULT_BRUTE_BUDGET).unwrap(),
                "{:?} {:?}",
                s.family,
                s.params
            );
        }
    }

    #[test]
    fn rs_mds_bounds() {
        assert!(gen_rs_mds(7, 3, 5).is_err());
        assert!(gen_rs_mds(6, 3, 5).is_ok());
        assert!(gen_rs_mds(3, 0, 5).is_err());
    }
}
