//! Tutte polynomial of a code's column matroid, the weight enumerator
//! recovered from it, and the characteristic polynomial.
//!
//! Everything here walks the 2^n column subsets once, tallying subsets by
//! (rank, size). The walk reuses elimination state down the recursion, so
//! each inclusion costs one vector reduction instead of a fresh
//! elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::code::{CodeError, LinearCode};
use crate::code::WeightDistribution;
use crate::families::binomial;
use crate::field::FieldSpec;

/// Default subset enumeration budget: at most 2^20 subsets.
pub const DEFAULT_TUTTE_BUDGET: u64 = 1 << 20;

/// Exact bivariate polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    pub coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    fn add_term(&mut self, key: (u32, u32), v: BigInt) {
        let slot = self.coeffs.entry(key).or_default();
        *slot += v;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn eval_i64(&self, x: i64, y: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(i, j), c) in &self.coeffs {
            acc += c * BigInt::from(x).pow(i) * BigInt::from(y).pow(j);
        }
        acc
    }
}

/// Exact univariate polynomial, constant term first, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePolynomial {
    pub coeffs: Vec<BigInt>,
}

impl UnivariatePolynomial {
    fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Number of column subsets of each (rank, size), from one DFS over the
/// subset lattice with an incrementally maintained elimination basis.
struct RankCounts {
    r: usize,
    n: usize,
    counts: BTreeMap<(usize, usize), u64>,
}

fn rank_counts(code: &LinearCode, budget: u64) -> Result<RankCounts, CodeError> {
    let n = code.n();
    let k = code.rank();
    let required = BigInt::from(2u64).pow(n as u32);
    if required > BigInt::from(budget) {
        return Err(CodeError::BudgetExceeded { required, budget });
    }
    let field = code.field().clone();
    let columns: Vec<Vec<u32>> = (0..n)
        .map(|c| (0..k).map(|r| code.generator().at(r, c)).collect())
        .collect();
    let mut counts = BTreeMap::new();
    // basis rows kept reduced, each with its pivot position
    let mut basis: Vec<(usize, Vec<u32>)> = Vec::new();
    walk(&field, &columns, 0, 0, &mut basis, &mut counts);
    Ok(RankCounts { r: k, n, counts })
}

fn walk(
    field: &FieldSpec,
    columns: &[Vec<u32>],
    idx: usize,
    size: usize,
    basis: &mut Vec<(usize, Vec<u32>)>,
    counts: &mut BTreeMap<(usize, usize), u64>,
) {
    if idx == columns.len() {
        *counts.entry((basis.len(), size)).or_default() += 1;
        return;
    }
    walk(field, columns, idx + 1, size, basis, counts);
    // include column idx: reduce it against the basis
    let mut v = columns[idx].clone();
    for (pivot, row) in basis.iter() {
        if v[*pivot] != 0 {
            let factor = v[*pivot];
            for (x, y) in v.iter_mut().zip(row) {
                *x = field.sub(*x, field.mul(factor, *y));
            }
        }
    }
    match v.iter().position(|&x| x != 0) {
        Some(pivot) => {
            let inv = field.inv(v[pivot]).unwrap();
            for x in v.iter_mut() {
                *x = field.mul(*x, inv);
            }
            basis.push((pivot, v));
            walk(field, columns, idx + 1, size + 1, basis, counts);
            basis.pop();
        }
        None => walk(field, columns, idx + 1, size + 1, basis, counts),
    }
}

/// T(M; x, y) = sum over column subsets A of
/// (x-1)^{r - rk(A)} (y-1)^{|A| - rk(A)}.
pub fn tutte_polynomial(code: &LinearCode, budget: u64) -> Result<BivariatePolynomial, CodeError> {
    let rc = rank_counts(code, budget)?;
    let mut t = BivariatePolynomial::default();
    for (&(rk, size), &cnt) in &rc.counts {
        let a = (rc.r - rk) as u64;
        let b = (size - rk) as u64;
        // (x-1)^a (y-1)^b expanded term by term
        for i in 0..=a {
            for j in 0..=b {
                let mut c = binomial(a, i) * binomial(b, j) * cnt;
                if (a - i + b - j) % 2 == 1 {
                    c = -c;
                }
                t.add_term((i as u32, j as u32), c);
            }
        }
    }
    Ok(t)
}

/// Weight distribution through the Tutte connection
/// W_C(x,y) = y^{n-r} (x-y)^r T((x+(q-1)y)/(x-y), x/y).
///
/// Substituting into the (x-1)^a (y-1)^b expansion of T cancels every
/// denominator symbolically: the subset of rank rk and size s contributes
/// q^{r-rk} y^{n-s} (x-y)^s, so the evaluation stays polynomial throughout.
pub fn wd_via_tutte(code: &LinearCode, budget: u64) -> Result<WeightDistribution, CodeError> {
    let rc = rank_counts(code, budget)?;
    let n = rc.n;
    let q = code.field().q() as u64;
    // A_w = [x^{n-w} y^w] sum q^{r-rk} cnt * y^{n-s} (x-y)^s
    let mut counts = vec![BigInt::zero(); n + 1];
    for (&(rk, size), &cnt) in &rc.counts {
        let scale = BigInt::from(q).pow((rc.r - rk) as u32) * cnt;
        for t in 0..=size {
            // x^t y^{s-t} term of (x-y)^s, total y-degree n - t
            let mut c = binomial(size as u64, t as u64) * &scale;
            if (size - t) % 2 == 1 {
                c = -c;
            }
            counts[n - t] += c;
        }
    }
    Ok(WeightDistribution::new(
        code.field().q(),
        n,
        rc.r,
        counts,
    ))
}

/// Characteristic polynomial chi(M; q) = sum_A (-1)^{|A|} q^{r - rk(A)},
/// computed from the subset tallies directly.
pub fn characteristic_polynomial(
    code: &LinearCode,
    budget: u64,
) -> Result<UnivariatePolynomial, CodeError> {
    let rc = rank_counts(code, budget)?;
    let mut coeffs = vec![BigInt::zero(); rc.r + 1];
    for (&(rk, size), &cnt) in &rc.counts {
        if size % 2 == 0 {
            coeffs[rc.r - rk] += cnt;
        } else {
            coeffs[rc.r - rk] -= cnt;
        }
    }
    Ok(UnivariatePolynomial::new(coeffs))
}

/// chi through the identity (-1)^r T(1-q, 0), as a polynomial in q.
/// Cross-check for the two displayed forms.
pub fn characteristic_via_tutte(
    code: &LinearCode,
    budget: u64,
) -> Result<UnivariatePolynomial, CodeError> {
    let t = tutte_polynomial(code, budget)?;
    let r = code.rank();
    // T(1-q, 0): only the j = 0 terms of y survive; (1-q)^i expands in q
    let mut coeffs = vec![BigInt::zero(); r + 1];
    for (&(i, j), c) in &t.coeffs {
        if j != 0 {
            continue;
        }
        for d in 0..=i as u64 {
            let mut term = binomial(i as u64, d) * c;
            if (d + r as u64) % 2 == 1 {
                term = -term;
            }
            coeffs[d as usize] += term;
        }
    }
    Ok(UnivariatePolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{gap_report, NonzeroDistribution};
    use crate::code::{GeneratorMatrix, DEFAULT_BRUTE_BUDGET};
    use crate::families;
    use crate::field::FieldSpec;
    use num_traits::Signed;

    fn code(q: u64, n: usize, k: usize, entries: Vec<u32>) -> LinearCode {
        let gen = GeneratorMatrix::new(FieldSpec::new(q).unwrap(), n, k, entries).unwrap();
        LinearCode::new(gen).unwrap()
    }

    fn test_codes() -> Vec<LinearCode> {
        vec![
            code(2, 3, 1, vec![1, 1, 1]),
            LinearCode::new(families::gen_even(4).unwrap()).unwrap(),
            LinearCode::new(families::gen_hamming_q(3, 2).unwrap()).unwrap(),
            code(3, 4, 2, vec![0, 1, 1, 1, 1, 0, 1, 2]),
            LinearCode::new(families::gen_rs_mds(5, 3, 4).unwrap()).unwrap(),
            LinearCode::new(families::gen_rs_mds(6, 3, 5).unwrap()).unwrap(),
        ]
    }

    #[test]
    fn tripled_element_matroid() {
        let c = code(2, 3, 1, vec![1, 1, 1]);
        let t = tutte_polynomial(&c, DEFAULT_TUTTE_BUDGET).unwrap();
        let expect: BTreeMap<(u32, u32), BigInt> = [
            ((1, 0), BigInt::from(1)),
            ((0, 1), BigInt::from(1)),
            ((0, 2), BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(t.coeffs, expect); // x + y + y^2
    }

    #[test]
    fn rank_zero_matroid() {
        let c = LinearCode::zero(FieldSpec::new(2).unwrap(), 3);
        let t = tutte_polynomial(&c, DEFAULT_TUTTE_BUDGET).unwrap();
        let expect: BTreeMap<(u32, u32), BigInt> = [((0, 3), BigInt::from(1))].into_iter().collect();
        assert_eq!(t.coeffs, expect); // y^3
    }

    #[test]
    fn uniform_matroid_basis_count() {
        let c = LinearCode::new(families::gen_rs_mds(4, 2, 5).unwrap()).unwrap();
        let t = tutte_polynomial(&c, DEFAULT_TUTTE_BUDGET).unwrap();
        assert_eq!(t.eval_i64(1, 1), BigInt::from(6)); // C(4,2) bases
    }

    #[test]
    fn budget_guard() {
        let c = code(2, 3, 1, vec![1, 1, 1]);
        assert!(matches!(
            tutte_polynomial(&c, 4),
            Err(CodeError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn weight_enumerator_round_trip() {
        for c in test_codes() {
            let via = wd_via_tutte(&c, DEFAULT_TUTTE_BUDGET).unwrap();
            let brute = c.brute_weight_distribution(DEFAULT_BRUTE_BUDGET).unwrap();
            assert_eq!(via.counts, brute.counts, "n={} q={}", c.n(), c.field().q());
        }
    }

    #[test]
    fn characteristic_polynomial_forms_agree() {
        let single = code(2, 1, 1, vec![1]);
        let chi = characteristic_polynomial(&single, DEFAULT_TUTTE_BUDGET).unwrap();
        assert_eq!(chi.coeffs, vec![BigInt::from(-1), BigInt::from(1)]); // q - 1
        for c in test_codes() {
            let a = characteristic_polynomial(&c, DEFAULT_TUTTE_BUDGET).unwrap();
            let b = characteristic_via_tutte(&c, DEFAULT_TUTTE_BUDGET).unwrap();
            assert_eq!(a, b, "n={} q={}", c.n(), c.field().q());
        }
    }

    #[test]
    fn absolute_characteristic_coefficients_log_concave() {
        for c in test_codes() {
            let chi = characteristic_polynomial(&c, DEFAULT_TUTTE_BUDGET).unwrap();
            let abs: Vec<BigInt> = chi.coeffs.iter().map(|c| c.abs()).collect();
            assert!(abs.iter().all(|c| !c.is_zero()));
            let nzd = NonzeroDistribution {
                weights: (0..abs.len()).collect(),
                counts: abs,
            };
            assert!(gap_report(&nzd).log_concave, "n={} q={}", c.n(), c.field().q());
        }
    }
}
