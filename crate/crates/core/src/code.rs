//! Linear codes over GF(q): generator matrices, duals, and exact weight
//! distributions by brute-force codeword enumeration.
//!
//! The brute-force enumerator is the independent oracle that every
//! closed-form weight distribution in [`crate::families`] is checked against.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::FieldSpec;

/// Default enumeration budget: at most 2^28 codewords.
pub const DEFAULT_BRUTE_BUDGET: u64 = 1 << 28;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator rows are dependent (rank {0})")]
    RankDeficient(usize),
    #[error("enumeration needs {required} codewords, over the budget {budget}")]
    BudgetExceeded { required: BigInt, budget: u64 },
    #[error("malformed generator matrix: {0}")]
    BadMatrix(String),
}

/// A k x n matrix over GF(q), row-major.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    entries: Vec<u32>,
}

impl GeneratorMatrix {
    pub fn new(field: FieldSpec, n: usize, k: usize, entries: Vec<u32>) -> Result<Self, CodeError> {
        if n == 0 || entries.len() != n * k {
            return Err(CodeError::BadMatrix(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                n * k,
                k,
                n,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&x| x >= field.q()) {
            return Err(CodeError::BadMatrix(format!(
                "entry {bad} is out of range for GF({})",
                field.q()
            )));
        }
        Ok(GeneratorMatrix {
            field,
            n,
            k,
            entries,
        })
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.n + c]
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.n..(r + 1) * self.n]
    }

    /// Serialize in the generator matrix text format: a `q n k` header line,
    /// then k rows of n integers.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.field.q(), self.n, self.k);
        for r in 0..self.k {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parse the text format. Lines starting with `#` are comments.
    pub fn from_text(text: &str) -> Result<Self, CodeError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| CodeError::BadMatrix("empty input".into()))?;
        let head: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| CodeError::BadMatrix(format!("bad header token {t:?}"))))
            .collect::<Result<_, _>>()?;
        let [q, n, k] = head[..] else {
            return Err(CodeError::BadMatrix("header must be `q n k`".into()));
        };
        let field = FieldSpec::new(q).map_err(|e| CodeError::BadMatrix(e.to_string()))?;
        let mut entries = Vec::with_capacity((n * k) as usize);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| CodeError::BadMatrix("missing matrix row".into()))?;
            let row: Vec<u32> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| CodeError::BadMatrix(format!("bad entry {t:?}"))))
                .collect::<Result<_, _>>()?;
            if row.len() != n as usize {
                return Err(CodeError::BadMatrix(format!(
                    "row has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        GeneratorMatrix::new(field, n as usize, k as usize, entries)
    }
}

/// A linear code held as a generator matrix in reduced row-echelon form.
/// `k = 0` (the zero code) is representable with an empty generator.
#[derive(Debug, Clone)]
pub struct LinearCode {
    gen: GeneratorMatrix,
    pivots: Vec<usize>,
}

/// Row-reduce `entries` (k rows, n cols) in place over `field`.
/// Returns the pivot columns.
fn rref(field: &FieldSpec, entries: &mut [u32], k: usize, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == k {
            break;
        }
        let Some(pr) = (row..k).find(|&r| entries[r * n + col] != 0) else {
            continue;
        };
        for c in 0..n {
            entries.swap(row * n + c, pr * n + c);
        }
        let inv = field.inv(entries[row * n + col]).unwrap();
        for c in col..n {
            entries[row * n + c] = field.mul(entries[row * n + c], inv);
        }
        for r in 0..k {
            if r != row && entries[r * n + col] != 0 {
                let factor = entries[r * n + col];
                for c in col..n {
                    let sub = field.mul(factor, entries[row * n + c]);
                    entries[r * n + c] = field.sub(entries[r * n + c], sub);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

impl LinearCode {
    /// Row-reduce a generator matrix. Errors if the rows are dependent.
    pub fn new(gen: GeneratorMatrix) -> Result<Self, CodeError> {
        let mut entries = gen.entries.clone();
        let pivots = rref(&gen.field, &mut entries, gen.k, gen.n);
        if pivots.len() < gen.k {
            return Err(CodeError::RankDeficient(pivots.len()));
        }
        Ok(LinearCode {
            gen: GeneratorMatrix {
                field: gen.field,
                n: gen.n,
                k: gen.k,
                entries,
            },
            pivots,
        })
    }

    /// The zero code of length n (no codewords besides 0).
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        LinearCode {
            gen: GeneratorMatrix {
                field,
                n,
                k: 0,
                entries: Vec::new(),
            },
            pivots: Vec::new(),
        }
    }

    pub fn generator(&self) -> &GeneratorMatrix {
        &self.gen
    }
    pub fn field(&self) -> &FieldSpec {
        &self.gen.field
    }
    pub fn n(&self) -> usize {
        self.gen.n
    }
    pub fn rank(&self) -> usize {
        self.gen.k
    }
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// The dual code: permute to standard form [I_k | A], emit
    /// [-A^T | I_{n-k}], and un-permute.
    pub fn dual(&self) -> LinearCode {
        let field = self.gen.field.clone();
        let n = self.gen.n;
        let k = self.gen.k;
        if k == 0 {
            // dual of the zero code is the full space
            let mut entries = vec![0u32; n * n];
            for i in 0..n {
                entries[i * n + i] = 1;
            }
            let gen = GeneratorMatrix::new(field, n, n, entries).unwrap();
            return LinearCode::new(gen).unwrap();
        }
        let nonpivots: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        if nonpivots.is_empty() {
            return LinearCode::zero(field, n);
        }
        let dk = nonpivots.len();
        let mut entries = vec![0u32; dk * n];
        for (j, &npc) in nonpivots.iter().enumerate() {
            for (i, &pc) in self.pivots.iter().enumerate() {
                entries[j * n + pc] = field.neg(self.gen.at(i, npc));
            }
            entries[j * n + npc] = 1;
        }
        let gen = GeneratorMatrix::new(field, n, dk, entries).unwrap();
        LinearCode::new(gen).expect("dual rows contain an identity block")
    }

    /// Exact weight distribution by enumerating all q^k codewords.
    pub fn brute_weight_distribution(
        &self,
        budget: u64,
    ) -> Result<WeightDistribution, CodeError> {
        let q = self.gen.field.q();
        let k = self.gen.k;
        let n = self.gen.n;
        let required = BigInt::from(q).pow(k as u32);
        if required > BigInt::from(budget) {
            return Err(CodeError::BudgetExceeded { required, budget });
        }
        let mut counts = vec![0u64; n + 1];
        if k == 0 {
            counts[0] = 1;
        } else if q == 2 {
            self.enumerate_binary(&mut counts);
        } else {
            self.enumerate_generic(&mut counts);
        }
        Ok(WeightDistribution {
            q,
            n,
            k,
            counts: counts.into_iter().map(BigInt::from).collect(),
        })
    }

    /// Binary: one XOR per codeword along a Gray-code walk.
    fn enumerate_binary(&self, counts: &mut [u64]) {
        let n = self.gen.n;
        let k = self.gen.k;
        let words = n.div_ceil(64);
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|r| {
                let mut w = vec![0u64; words];
                for c in 0..n {
                    if self.gen.at(r, c) != 0 {
                        w[c / 64] |= 1 << (c % 64);
                    }
                }
                w
            })
            .collect();
        let mut cw = vec![0u64; words];
        counts[0] += 1;
        let total: u64 = 1 << k;
        for step in 1..total {
            let row = &rows[step.trailing_zeros() as usize];
            let mut wt = 0u32;
            for (w, r) in cw.iter_mut().zip(row) {
                *w ^= r;
                wt += w.count_ones();
            }
            counts[wt as usize] += 1;
        }
    }

    /// Generic q: odometer over coefficient vectors with incremental
    /// codeword updates from precomputed scalar multiples of each row.
    fn enumerate_generic(&self, counts: &mut [u64]) {
        let field = &self.gen.field;
        let q = field.q();
        let n = self.gen.n;
        let k = self.gen.k;
        // scaled[r][c * n + i] = c * row_r[i]
        let scaled: Vec<Vec<u32>> = (0..k)
            .map(|r| {
                let mut t = vec![0u32; q as usize * n];
                for c in 1..q {
                    for i in 0..n {
                        t[c as usize * n + i] = field.mul(c, self.gen.at(r, i));
                    }
                }
                t
            })
            .collect();
        let mut digits = vec![0u32; k];
        let mut cw = vec![0u32; n];
        counts[0] += 1;
        let total = (q as u64).pow(k as u32);
        for _ in 1..total {
            let mut level = 0;
            loop {
                let old = digits[level];
                let new = if old + 1 == q { 0 } else { old + 1 };
                digits[level] = new;
                let t = &scaled[level];
                let old_base = old as usize * n;
                let new_base = new as usize * n;
                for i in 0..n {
                    cw[i] = field.add(field.sub(cw[i], t[old_base + i]), t[new_base + i]);
                }
                if new != 0 {
                    break;
                }
                level += 1;
            }
            let wt = cw.iter().filter(|&&x| x != 0).count();
            counts[wt] += 1;
        }
    }
}

/// Exact weight distribution A_0..A_n of a linear [n, k] code over GF(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub counts: Vec<BigInt>,
}

impl WeightDistribution {
    pub fn new(q: u32, n: usize, k: usize, counts: Vec<BigInt>) -> Self {
        debug_assert_eq!(counts.len(), n + 1);
        WeightDistribution { q, n, k, counts }
    }

    /// Sum of all counts; q^k for a valid distribution.
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.counts.first().map(One::is_one).unwrap_or(false)
            && self.counts.iter().all(|c| c >= &BigInt::zero())
            && self.total() == BigInt::from(self.q).pow(self.k as u32)
    }

    /// A_i = A_{n-i} for all i.
    pub fn is_symmetric(&self) -> bool {
        let c = &self.counts;
        (0..=self.n / 2).all(|i| c[i] == c[self.n - i])
    }
}
