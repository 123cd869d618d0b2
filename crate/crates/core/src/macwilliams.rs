//! MacWilliams transform: the weight distribution of the dual code from the
//! weight distribution of the code, exactly.
//!
//! For an [n, k] code over GF(q) with counts A_i, the dual counts are
//! B_j = q^{-k} sum_i A_i K_j(i) where K_j(i) is the coefficient of y^j in
//! (1 + (q-1)y)^{n-i} (1 - y)^i. Those coefficients satisfy a three-term
//! recurrence in j, so each input weight contributes in O(n) big-integer
//! operations instead of O(n^2).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::code::WeightDistribution;
use crate::limbs::Slint;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MacWilliamsError {
    #[error("transform is not divisible by q^k; input is not a valid [{n}, {k}] distribution over GF({q})")]
    InexactTransform { q: u32, n: usize, k: usize },
}

/// Kravchuk-style coefficient row: c_j = [y^j] (1+(q-1)y)^{n-i} (1-y)^i.
/// Satisfies c_0 = 1 and
/// (j+1) c_{j+1} = ((q-1)(n-i) - i - (q-2)j) c_j - (q-1)(n - j + 1) c_{j-1}.
fn kravchuk_row(q: u64, n: u64, i: u64, out: &mut [BigInt]) {
    out[0] = BigInt::from(1);
    if n == 0 {
        return;
    }
    let base = (q as i64 - 1) * (n - i) as i64 - i as i64;
    out[1] = BigInt::from(base);
    // for q = 2 the generating polynomial reverses to (-1)^i times itself,
    // so c_{n-j} = (-1)^i c_j and the recurrence only needs to reach the
    // middle; the scalar coefficients all fit in i64 (n, q <= 2^16)
    let top = if q == 2 { n / 2 } else { n - 1 };
    for j in 1..=top {
        let a = (base - (q as i64 - 2) * j as i64) * &out[j as usize];
        let b = ((q - 1) * (n - j + 1)) as i64 * &out[j as usize - 1];
        let num = a - b;
        debug_assert!((&num % (j as i64 + 1)).is_zero());
        out[j as usize + 1] = num / (j as i64 + 1);
    }
    if q == 2 {
        let negate = i % 2 == 1;
        for j in 0..(n - top) {
            let v = out[j as usize].clone();
            out[(n - j) as usize] = if negate { -v } else { v };
        }
    }
}

/// Per-input-weight recurrence state, advanced one output index at a time.
enum Row {
    /// weight n for any q: K_j(n) = (-1)^j C(n,j), a running binomial
    Top { cur: Slint },
    /// q = 2, 2i = n or 2i = n + 1: (1-x)^i (1+x)^(n-i) collapses to
    /// (1-x^2)^(n/2) resp. (1-x)(1-x^2)^((n-1)/2), a strided binomial in
    /// quarter-sized values
    Strided {
        cur: Slint,
        half: u64,
        with_odd: bool,
        negate: bool,
        done: bool,
    },
    /// general three-term Kravchuk recurrence in j
    Rec {
        prev: Slint,
        cur: Slint,
        next: Slint,
        base: i64,
        negate: bool,
    },
}

/// Streamed limb-space transform for inputs whose counts fit in u64. The
/// loop runs index-major: every input weight keeps O(1) recurrence state,
/// the accumulator for one output index is assembled and emitted before the
/// next, and nothing n-sized is materialized. Memory stays proportional to
/// the number of distinct input weights times one coefficient, which is what
/// makes sparse inputs (two or three weights) cheap at large n. For q = 2
/// the c_{n-j} = (-1)^i c_j symmetry halves the work and the final q^k
/// division is a shift when q is a power of two.
fn transform_small_counts_each(
    q: u64,
    n: usize,
    k: usize,
    counts: &[u64],
    emit: &mut dyn FnMut(usize, BigInt),
) -> Result<(), MacWilliamsError> {
    let inexact = || MacWilliamsError::InexactTransform { q: q as u32, n, k };
    let binary = q == 2;
    // with only even input weights the (-1)^i signs all vanish and the
    // output is symmetric outright
    let symmetric = binary
        && counts
            .iter()
            .enumerate()
            .all(|(i, &a)| a == 0 || i % 2 == 0);
    let jmax = if binary { n / 2 } else { n };
    // The weight-0 row is K_j(0) = C(n,j)(q-1)^j and the weight-n row is
    // K_j(n) = (-1)^j C(n,j). For q = 2 both share the magnitude C(n,j),
    // so one running binomial writes a0 + (-1)^j a_n directly into the
    // accumulator. For q > 2 the same runner covers the weight-0 row alone
    // and the weight-n row gets its own Top state below.
    let a0 = counts[0];
    let an = if binary { counts[n] } else { 0 };
    let merged_top = an != 0 && a0.checked_add(an).is_some();
    let growth_ok = (q - 1).checked_mul(n as u64).is_some();
    let top_active = (a0 != 0 || merged_top) && growth_ok;
    let mut top_cur = Slint::one();
    let top_scalar = |flip: bool| -> (u64, bool) {
        if merged_top && flip {
            if a0 >= an {
                (a0 - an, false)
            } else {
                (an - a0, true)
            }
        } else if merged_top {
            (a0 + an, false)
        } else {
            (a0, false)
        }
    };
    let mut rows = Vec::new();
    for (iu, &a) in counts.iter().enumerate() {
        let i = iu as u64;
        if a == 0 || (i == 0 && growth_ok) {
            continue;
        }
        if i == n as u64 && (merged_top || !growth_ok) && binary {
            continue;
        }
        let negate = i % 2 == 1;
        if i == n as u64 {
            rows.push(Row::Top { cur: Slint::from_u64(a) });
        } else if binary && (2 * i == n as u64 || 2 * i == n as u64 + 1) {
            rows.push(Row::Strided {
                cur: Slint::from_u64(a),
                half: n as u64 - i,
                with_odd: 2 * i == n as u64 + 1,
                negate,
                done: false,
            });
        } else {
            // the recurrence is linear, so seeding c_0 with A_i folds the
            // A_i * K_j(i) multiplication into it for free
            rows.push(Row::Rec {
                prev: Slint::zero(),
                cur: Slint::from_u64(a),
                next: Slint::zero(),
                base: (q as i64 - 1) * (n as u64 - i) as i64 - i as i64,
                negate,
            });
        }
    }
    // divide by q^k: a shift when q is a power of two, scalar division
    // when q^k fits a limb, full big-integer division otherwise
    let shift = if q.is_power_of_two() {
        Some(k as u32 * q.trailing_zeros())
    } else {
        None
    };
    let qk_small = q.checked_pow(k as u32).filter(|_| shift.is_none());
    let qk_big = BigInt::from(q).pow(k as u32);
    let divide = |v: &mut Slint| -> Result<BigInt, MacWilliamsError> {
        if let Some(s) = shift {
            v.to_bigint_shr(s).ok_or_else(inexact)
        } else if let Some(d) = qk_small {
            if !v.div_scalar_exact(d) {
                return Err(inexact());
            }
            Ok(v.to_bigint())
        } else {
            let (div, rem) = num_integer::Integer::div_rem(&v.to_bigint(), &qk_big);
            if !rem.is_zero() {
                return Err(inexact());
            }
            Ok(div)
        }
    };
    let want_hi = binary && !symmetric;
    // acc_lo holds q^k B_j, acc_hi holds q^k B_{n-j} through the sign
    // symmetry; both buffers are reused across j
    let mut acc_lo = Slint::zero();
    let mut acc_hi = Slint::zero();
    for j in 0..=jmax as u64 {
        let ju = j as usize;
        if top_active {
            let flip = j % 2 == 1;
            let (s_lo, neg_lo) = top_scalar(flip);
            Slint::mul_scalar_into(&mut acc_lo, &top_cur, s_lo, neg_lo);
            if want_hi {
                // the weight-n contribution to index n-j carries (-1)^n
                let (s_hi, neg_hi) = top_scalar(flip ^ (n % 2 == 1));
                Slint::mul_scalar_into(&mut acc_hi, &top_cur, s_hi, neg_hi);
            }
            if ju < jmax && !top_cur.mul_div_scalar_exact((q - 1) * (n as u64 - j), j + 1) {
                unreachable!("binomial update is integral");
            }
        } else {
            acc_lo.set_zero();
            acc_hi.set_zero();
        }
        for row in rows.iter_mut() {
            match row {
                Row::Top { cur } => {
                    let minus = j % 2 == 1;
                    acc_lo.add_signed(cur, minus);
                    if want_hi {
                        acc_hi.add_signed(cur, minus ^ (n % 2 == 1));
                    }
                    if ju < jmax && !cur.mul_div_scalar_exact(n as u64 - j, j + 1) {
                        unreachable!("binomial update is integral");
                    }
                }
                Row::Strided { cur, half, with_odd, negate, done } => {
                    if *done {
                        continue;
                    }
                    let t = j / 2;
                    let minus = t % 2 == 1;
                    if j % 2 == 0 {
                        acc_lo.add_signed(cur, minus);
                        if want_hi {
                            acc_hi.add_signed(cur, minus ^ *negate);
                        }
                    } else {
                        if *with_odd {
                            acc_lo.add_signed(cur, !minus);
                            if want_hi {
                                acc_hi.add_signed(cur, !minus ^ *negate);
                            }
                        }
                        // the runner steps once per index pair
                        if ju < jmax {
                            if t < *half {
                                if !cur.mul_div_scalar_exact(*half - t, t + 1) {
                                    unreachable!("binomial update is integral");
                                }
                            } else {
                                *done = true;
                            }
                        }
                    }
                }
                Row::Rec { prev, cur, next, base, negate } => {
                    acc_lo.add_signed(cur, false);
                    if want_hi {
                        acc_hi.add_signed(cur, *negate);
                    }
                    if ju < jmax {
                        let alpha = *base - (q as i64 - 2) * j as i64;
                        let beta = ((q - 1) * (n as u64 - j + 1)) as i64;
                        Slint::lincomb_into(next, alpha, cur, -beta, prev);
                        if !next.div_scalar_exact(j + 1) {
                            unreachable!("Kravchuk recurrence is integral");
                        }
                        std::mem::swap(prev, cur);
                        std::mem::swap(cur, next);
                    }
                }
            }
        }
        let lo = divide(&mut acc_lo)?;
        if binary && n - ju > jmax {
            if symmetric {
                emit(n - ju, lo.clone());
            } else {
                emit(n - ju, divide(&mut acc_hi)?);
            }
        }
        emit(ju, lo);
    }
    Ok(())
}

/// Visit the dual distribution's counts one entry at a time without holding
/// the whole output table. Every index in 0..=n is emitted exactly once, in
/// no particular order. All the arithmetic of [`macwilliams`] lives here;
/// the table-returning form is a collect over this.
pub fn macwilliams_each(
    wd: &WeightDistribution,
    mut emit: impl FnMut(usize, BigInt),
) -> Result<(), MacWilliamsError> {
    let n = wd.n;
    let q = wd.q as u64;
    if n > 0 {
        let small: Option<Vec<u64>> = wd.counts.iter().map(|c| c.to_u64()).collect();
        if let Some(counts) = small {
            return transform_small_counts_each(q, n, wd.k, &counts, &mut emit);
        }
    }
    // counts beyond u64 (or n = 0): plain BigInt accumulation over
    // materialized Kravchuk rows
    let qk = BigInt::from(q).pow(wd.k as u32);
    let mut acc = vec![BigInt::zero(); n + 1];
    let mut row = vec![BigInt::zero(); n + 1];
    for (i, a) in wd.counts.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        kravchuk_row(q, n as u64, i as u64, &mut row);
        for (slot, c) in acc.iter_mut().zip(&row) {
            *slot += a * c;
        }
    }
    for (j, v) in acc.into_iter().enumerate() {
        let (div, rem) = num_integer::Integer::div_rem(&v, &qk);
        if !rem.is_zero() {
            return Err(MacWilliamsError::InexactTransform {
                q: wd.q,
                n,
                k: wd.k,
            });
        }
        emit(j, div);
    }
    Ok(())
}

/// Transform a weight distribution into its dual's. The result is an
/// [n, n-k] distribution; non-divisibility by q^k signals a malformed input.
pub fn macwilliams(wd: &WeightDistribution) -> Result<WeightDistribution, MacWilliamsError> {
    let mut counts = vec![BigInt::zero(); wd.n + 1];
    macwilliams_each(wd, |j, v| counts[j] = v)?;
    Ok(WeightDistribution::new(wd.q, wd.n, wd.n - wd.k, counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{GeneratorMatrix, LinearCode, DEFAULT_BRUTE_BUDGET};
    use crate::families;
    use crate::field::FieldSpec;

    #[test]
    fn simplex_transforms_to_hamming() {
        for m in 2..=8u32 {
            let s = families::wd_simplex(m, 2).unwrap();
            let h = macwilliams(&s).unwrap();
            assert_eq!(h.counts, families::wd_hamming_binary(m).unwrap().counts);
        }
    }

    #[test]
    fn rm1_transforms_to_extended_hamming() {
        for m in 2..=8u32 {
            let r = families::wd_rm1(m).unwrap();
            let e = macwilliams(&r).unwrap();
            assert_eq!(e.counts, families::wd_ext_hamming_binary(m).unwrap().counts);
        }
    }

    #[test]
    fn involution_on_assorted_codes() {
        let cases: Vec<(u64, usize, usize, Vec<u32>)> = vec![
            (2, 7, 3, vec![1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 1]),
            (3, 4, 2, vec![0, 1, 1, 1, 1, 0, 1, 2]),
            (4, 5, 2, vec![1, 2, 3, 0, 1, 0, 1, 1, 2, 3]),
            (5, 6, 3, vec![1, 0, 0, 1, 2, 3, 0, 1, 0, 4, 4, 1, 0, 0, 1, 1, 1, 1]),
        ];
        for (q, n, k, entries) in cases {
            let field = FieldSpec::new(q).unwrap();
            let gen = GeneratorMatrix::new(field, n, k, entries).unwrap();
            let code = LinearCode::new(gen).unwrap();
            let wd = code.brute_weight_distribution(DEFAULT_BRUTE_BUDGET).unwrap();
            let dual_wd = code
                .dual()
                .brute_weight_distribution(DEFAULT_BRUTE_BUDGET)
                .unwrap();
            let t = macwilliams(&wd).unwrap();
            assert_eq!(t.counts, dual_wd.counts, "q={q}");
            let back = macwilliams(&t).unwrap();
            assert_eq!(back.counts, wd.counts, "involution q={q}");
        }
    }

    #[test]
    fn golay_pair() {
        // the extended Golay code is self-dual
        let g24 = families::wd_golay24();
        let t = macwilliams(&g24).unwrap();
        assert_eq!(t.counts, g24.counts);
        // the [23, 12] code is not, but the transform is an involution
        let g23 = families::wd_golay23();
        let back = macwilliams(&macwilliams(&g23).unwrap()).unwrap();
        assert_eq!(back.counts, g23.counts);
    }

    #[test]
    fn rejects_inexact_input() {
        let mut wd = families::wd_golay23();
        wd.counts[7] += 1;
        assert!(macwilliams(&wd).is_err());
    }
}
