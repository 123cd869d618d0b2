//! Sequence analysis for weight distributions: log-concavity and gap
//! counting, unimodality, a Sturm-based real-rootedness check for Newton's
//! inequality, and the exact threshold machinery for MDS distributions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::code::WeightDistribution;
use crate::families::{binomial, wd_mds, FamilyError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("zero denominator in exact ratio")]
    ZeroDenominator,
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// The nonzero counts of a weight distribution with their weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonzeroDistribution {
    pub weights: Vec<usize>,
    pub counts: Vec<BigInt>,
}

pub fn nonzero(wd: &WeightDistribution) -> NonzeroDistribution {
    let mut weights = Vec::new();
    let mut counts = Vec::new();
    for (w, c) in wd.counts.iter().enumerate() {
        if !c.is_zero() {
            weights.push(w);
            counts.push(c.clone());
        }
    }
    NonzeroDistribution { weights, counts }
}

/// One failed log-concavity comparison: a_i^2 < a_{i-1} a_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapViolation {
    pub index: usize,
    /// a_i^2 - a_{i-1} a_{i+1}, negative by construction.
    pub deficit: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub violations: Vec<GapViolation>,
    pub gap_count: usize,
    pub log_concave: bool,
    pub unimodal: bool,
    /// First index attaining the maximum count.
    pub peak_index: usize,
}

/// Exact gap report: strict failures of a_i^2 >= a_{i-1} a_{i+1} count as
/// gaps, ties do not. Unimodality allows plateaus.
pub fn gap_report(nzd: &NonzeroDistribution) -> GapReport {
    let a = &nzd.counts;
    let mut violations = Vec::new();
    for i in 1..a.len().saturating_sub(1) {
        let deficit = &a[i] * &a[i] - &a[i - 1] * &a[i + 1];
        if deficit < BigInt::zero() {
            violations.push(GapViolation { index: i, deficit });
        }
    }
    let peak_index = a
        .iter()
        .enumerate()
        .max_by(|(i, x), (j, y)| x.cmp(y).then(j.cmp(i)))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut unimodal = true;
    let mut falling = false;
    for i in 1..a.len() {
        if a[i] > a[i - 1] && falling {
            unimodal = false;
            break;
        }
        if a[i] < a[i - 1] {
            falling = true;
        }
    }
    let gap_count = violations.len();
    GapReport {
        violations,
        gap_count,
        log_concave: gap_count == 0,
        unimodal,
        peak_index,
    }
}

/// Exact rational polynomials, lowest coefficient first. Small degrees
/// only; used by the Sturm chain.
mod ratpoly {
    use super::*;

    pub type Poly = Vec<BigRational>;

    pub fn trim(p: &mut Poly) {
        while p.last().map(Zero::is_zero).unwrap_or(false) {
            p.pop();
        }
    }

    pub fn degree(p: &Poly) -> usize {
        p.len().saturating_sub(1)
    }

    pub fn derivative(p: &Poly) -> Poly {
        let mut d: Poly = p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect();
        trim(&mut d);
        d
    }

    /// Remainder of a by b (b nonzero).
    pub fn rem(a: &Poly, b: &Poly) -> Poly {
        let mut r = a.clone();
        trim(&mut r);
        let db = degree(b);
        let lead = b.last().unwrap();
        while !r.is_empty() && degree(&r) >= db && !(db == 0) {
            let shift = degree(&r) - db;
            let factor = r.last().unwrap() / lead;
            for i in 0..b.len() {
                let t = &factor * &b[i];
                r[shift + i] -= t;
            }
            trim(&mut r);
        }
        if db == 0 {
            return Vec::new();
        }
        r
    }

    pub fn div_exact(a: &Poly, b: &Poly) -> Poly {
        let mut r = a.clone();
        trim(&mut r);
        let db = degree(b);
        let lead = b.last().unwrap();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
        while !r.is_empty() && degree(&r) >= db && r.len() > db {
            let shift = degree(&r) - db;
            let factor = r.last().unwrap() / lead;
            q[shift] = factor.clone();
            for i in 0..b.len() {
                let t = &factor * &b[i];
                r[shift + i] -= t;
            }
            trim(&mut r);
        }
        debug_assert!(r.is_empty(), "division was not exact");
        trim(&mut q);
        q
    }

    /// Monic gcd.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(lead) = x.last().cloned() {
            for c in &mut x {
                *c /= lead.clone();
            }
        }
        x
    }

    fn sign_at_infinity(p: &Poly, positive: bool) -> i8 {
        let lead = p.last().unwrap();
        let s = if lead.is_positive() { 1i8 } else { -1 };
        if positive || degree(p) % 2 == 0 {
            s
        } else {
            -s
        }
    }

    /// Number of distinct real roots of a squarefree polynomial, by the
    /// difference in Sturm chain sign variations at -inf and +inf.
    pub fn sturm_distinct_real_roots(p: &Poly) -> usize {
        if degree(p) == 0 {
            return 0;
        }
        let mut chain = vec![p.clone(), derivative(p)];
        loop {
            let last = &chain[chain.len() - 1];
            if last.is_empty() {
                chain.pop();
                break;
            }
            if degree(last) == 0 {
                break;
            }
            let mut r = rem(&chain[chain.len() - 2], last);
            for c in &mut r {
                *c = -c.clone();
            }
            chain.push(r);
        }
        let variations = |positive: bool| {
            let signs: Vec<i8> = chain
                .iter()
                .filter(|p| !p.is_empty())
                .map(|p| sign_at_infinity(p, positive))
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        variations(false) - variations(true)
    }

    /// Real roots counted with multiplicity: distinct roots of the
    /// squarefree part plus, recursively, the roots of gcd(p, p').
    pub fn real_roots_with_multiplicity(p: &Poly) -> usize {
        if degree(p) == 0 {
            return 0;
        }
        let g = gcd(p, &derivative(p));
        if degree(&g) == 0 {
            return sturm_distinct_real_roots(p);
        }
        let squarefree = div_exact(p, &g);
        sturm_distinct_real_roots(&squarefree) + real_roots_with_multiplicity(&g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRootCheck {
    pub degree: usize,
    pub sturm_real_root_count: usize,
    pub all_real: bool,
}

/// Newton's test polynomial P(x) = sum C(t,i) a_i x^i for the nonzero
/// counts a_0..a_t. If all roots of P are real the sequence is log-concave.
pub fn newton_real_rooted(nzd: &NonzeroDistribution) -> RealRootCheck {
    let t = nzd.counts.len() - 1;
    let mut p: ratpoly::Poly = nzd
        .counts
        .iter()
        .enumerate()
        .map(|(i, a)| BigRational::from(binomial(t as u64, i as u64) * a))
        .collect();
    ratpoly::trim(&mut p);
    let degree = ratpoly::degree(&p);
    let count = ratpoly::real_roots_with_multiplicity(&p);
    RealRootCheck {
        degree,
        sturm_real_root_count: count,
        all_real: count == degree,
    }
}

// ---------------------------------------------------------------------------
// MDS machinery


/// f_k(s, w, q) = sum_{j=0}^{s} (-1)^j C(w-1, j) q^{-j}.
pub fn mds_f(s: u64, w: u64, q: u64) -> BigRational {
    let qr = BigRational::from(BigInt::from(q));
    let mut acc = BigRational::zero();
    for j in 0..=s {
        let term = BigRational::from(binomial(w - 1, j)) / qr.pow(j as i32);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// g_k(s, w, q) = f(s,w,q)^2 / (f(s-1,w-1,q) f(s+1,w+1,q)).
pub fn mds_g(s: u64, w: u64, q: u64) -> Result<BigRational, AnalysisError> {
    if s < 1 {
        return Err(AnalysisError::BadParams("g needs s >= 1".into()));
    }
    let num = mds_f(s, w, q).pow(2);
    let den = mds_f(s - 1, w - 1, q) * mds_f(s + 1, w + 1, q);
    if den.is_zero() {
        return Err(AnalysisError::ZeroDenominator);
    }
    Ok(num / den)
}

/// G_k(s, n, q) = A_w^2 / (A_{w-1} A_{w+1}) with w = n - k + 1 + s, from
/// the exact MDS counts.
pub fn mds_ratio_g_big(s: usize, n: usize, k: usize, q: u64) -> Result<BigRational, AnalysisError> {
    let d = n - k + 1;
    let w = d + s;
    if !(d < w && w < n) {
        return Err(AnalysisError::BadParams("ratio needs d < w < n".into()));
    }
    let wd = wd_mds(n, k, q).map_err(|FamilyError::BadParams(m)| AnalysisError::BadParams(m))?;
    let den = &wd.counts[w - 1] * &wd.counts[w + 1];
    if den.is_zero() {
        return Err(AnalysisError::ZeroDenominator);
    }
    Ok(BigRational::new(&wd.counts[w] * &wd.counts[w], den))
}

/// Threshold data for the quadratic
/// (m+k-1) q^2 - (k m^2 - 2k + 2) q + (k m^3 - k m^2)/2 - km + m + k - 1,
/// m = n - k + 2. Its larger root is the log-concavity threshold q0(n, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdResult {
    pub m: i128,
    /// (c2, c1, c0), possibly scaled by `scale`.
    pub coeffs: (i128, i128, i128),
    /// 1, or 2 when the constant term needed doubling to stay integral.
    pub scale: i128,
    pub discriminant: i128,
    /// Unit integer intervals (lo, lo+1) holding the smaller and larger
    /// root; None when the quadratic has no two distinct real roots.
    pub root_intervals: Option<((i64, i64), (i64, i64))>,
    /// Least integer q* with the quadratic >= 0 for every integer q >= q*;
    /// None when it is nonnegative at every integer.
    pub q_min_integer: Option<i64>,
}

impl ThresholdResult {
    pub fn eval(&self, q: i64) -> i128 {
        let (c2, c1, c0) = self.coeffs;
        let q = q as i128;
        c2 * q * q + c1 * q + c0
    }
}

pub fn mds_q0(n: usize, k: usize) -> Result<ThresholdResult, AnalysisError> {
    if k < 3 || k > n {
        return Err(AnalysisError::BadParams("q0 needs 3 <= k <= n".into()));
    }
    let (n, k) = (n as i128, k as i128);
    let m = n - k + 2;
    let mut c2 = m + k - 1;
    let mut c1 = -(k * m * m - 2 * k + 2);
    let half = k * m * m * m - k * m * m;
    let (c0, scale);
    if half % 2 == 0 {
        c0 = half / 2 - k * m + m + k - 1;
        scale = 1;
    } else {
        // keep everything integral by doubling the whole quadratic
        c0 = half - 2 * (k * m - m - k + 1);
        c2 *= 2;
        c1 *= 2;
        scale = 2;
    }
    let discriminant = c1 * c1 - 4 * c2 * c0;
    let result = |root_intervals, q_min_integer| ThresholdResult {
        m,
        coeffs: (c2, c1, c0),
        scale,
        discriminant,
        root_intervals,
        q_min_integer,
    };
    if discriminant <= 0 {
        return Ok(result(None, None));
    }
    let eval = |q: i128| c2 * q * q + c1 * q + c0;
    let sqrt_disc: i128 = BigInt::from(discriminant)
        .sqrt()
        .try_into()
        .expect("discriminant fits");
    // approximate floors of the two roots, then correct by exact signs
    let approx_small = (-c1 - sqrt_disc).div_euclid(2 * c2);
    let approx_large = (-c1 + sqrt_disc).div_euclid(2 * c2);
    let last_negative = (approx_large - 2..=approx_large + 2)
        .rev()
        .find(|&x| eval(x) < 0);
    let first_negative = (approx_small - 2..=approx_small + 2).find(|&x| eval(x) < 0);
    let (Some(lo), Some(hi)) = (first_negative, last_negative) else {
        // real roots exist but no integer lies strictly between them
        return Ok(result(None, None));
    };
    let intervals = (
        ((lo - 1) as i64, lo as i64),
        (hi as i64, (hi + 1) as i64),
    );
    Ok(result(Some(intervals), Some((hi + 1) as i64)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    LogConcave,
    NotLogConcave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictMethod {
    Theorem,
    Direct,
}

#[derive(Debug, Clone)]
pub struct MdsVerdict {
    pub status: VerdictStatus,
    pub method: VerdictMethod,
    pub notes: String,
    pub threshold: Option<ThresholdResult>,
    /// Gap count of the explicit distribution, when its counts are all
    /// nonnegative (they can go negative when no such code exists).
    pub direct_gap_count: Option<usize>,
}

/// Decide log-concavity of the [n, k] MDS weight distribution over GF(q).
///
/// For 3 <= k <= n/2 + 3 the quadratic threshold theorem applies and the
/// verdict is the sign test q >= q0(n, k); the explicit distribution is
/// still computed as a cross-check. Outside that range the verdict comes
/// from the distribution directly.
pub fn mds_verdict(n: usize, k: usize, q: u64) -> Result<MdsVerdict, AnalysisError> {
    if k < 1 || k > n {
        return Err(AnalysisError::BadParams("verdict needs 1 <= k <= n".into()));
    }
    if q < 2 {
        return Err(AnalysisError::BadParams("verdict needs q >= 2".into()));
    }
    let wd = wd_mds(n, k, q).map_err(|FamilyError::BadParams(m)| AnalysisError::BadParams(m))?;
    let negative = wd.counts.iter().any(|c| c < &BigInt::zero());
    let direct_gap_count = if negative {
        None
    } else {
        Some(gap_report(&nonzero(&wd)).gap_count)
    };
    let mut notes = String::new();
    if n > q as usize + 1 {
        notes.push_str("n > q + 1: no MDS code with these parameters is known to exist; ");
    }
    if negative {
        notes.push_str("formula produced negative counts, so no such code exists; ");
    }
    let theorem_applies = k >= 3 && 2 * k <= n + 6;
    if theorem_applies {
        let threshold = mds_q0(n, k)?;
        let status = match threshold.q_min_integer {
            Some(q_min) if (q as i64) < q_min => VerdictStatus::NotLogConcave,
            _ => VerdictStatus::LogConcave,
        };
        if let Some(q_min) = threshold.q_min_integer {
            notes.push_str(&format!("threshold q0 requires q >= {q_min}; "));
        }
        if let Some(gaps) = direct_gap_count {
            notes.push_str(&format!("direct check found {gaps} gap(s)"));
        }
        return Ok(MdsVerdict {
            status,
            method: VerdictMethod::Theorem,
            notes,
            threshold: Some(threshold),
            direct_gap_count,
        });
    }
    let status = match direct_gap_count {
        Some(0) => VerdictStatus::LogConcave,
        Some(_) => VerdictStatus::NotLogConcave,
        None => VerdictStatus::NotLogConcave,
    };
    Ok(MdsVerdict {
        status,
        method: VerdictMethod::Direct,
        notes,
        threshold: None,
        direct_gap_count,
    })
}
