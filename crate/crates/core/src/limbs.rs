//! Internal signed magnitude arithmetic on u64 limbs.
//!
//! num-bigint is the public face of all exact arithmetic here, but its
//! operator plumbing allocates several temporaries per step, which is the
//! dominant cost in the long scalar recurrences (Kravchuk rows, running
//! binomial updates) on lengths like 2^16. This module keeps those inner
//! loops on raw little-endian limb vectors and converts at the edges.

use num_bigint::{BigInt, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Slint {
    neg: bool,
    /// little-endian magnitude, no trailing zero limbs
    mag: Vec<u64>,
}

fn trim(mag: &mut Vec<u64>) {
    while mag.last() == Some(&0) {
        mag.pop();
    }
}

fn mag_cmp(a: &[u64], b: &[u64]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// acc += x, magnitudes only
fn mag_add_assign(acc: &mut Vec<u64>, x: &[u64]) {
    if acc.len() < x.len() {
        acc.resize(x.len(), 0);
    }
    let mut carry: u128 = 0;
    for (i, slot) in acc.iter_mut().enumerate() {
        let v = *slot as u128 + x.get(i).copied().unwrap_or(0) as u128 + carry;
        *slot = v as u64;
        carry = v >> 64;
        if carry == 0 && i >= x.len() {
            return;
        }
    }
    if carry != 0 {
        acc.push(carry as u64);
    }
}

/// acc -= x, requires acc >= x
fn mag_sub_assign(acc: &mut Vec<u64>, x: &[u64]) {
    let mut borrow: i128 = 0;
    for (i, slot) in acc.iter_mut().enumerate() {
        let v = *slot as i128 - x.get(i).copied().unwrap_or(0) as i128 + borrow;
        if v < 0 {
            *slot = (v + (1i128 << 64)) as u64;
            borrow = -1;
        } else {
            *slot = v as u64;
            borrow = 0;
            if i >= x.len() {
                break;
            }
        }
    }
    debug_assert_eq!(borrow, 0);
    trim(acc);
}

/// x - acc written into acc, requires x >= acc
fn mag_rsub_assign(acc: &mut Vec<u64>, x: &[u64]) {
    let mut out = x.to_vec();
    mag_sub_assign(&mut out, acc);
    *acc = out;
}

impl Slint {
    pub fn zero() -> Self {
        Slint { neg: false, mag: Vec::new() }
    }

    pub fn one() -> Self {
        Slint { neg: false, mag: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_empty()
    }

    /// reset to zero keeping the limb buffer
    pub fn set_zero(&mut self) {
        self.mag.clear();
        self.neg = false;
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let (sign, mag) = x.to_u64_digits();
        Slint { neg: sign == Sign::Minus, mag }
    }

    pub fn to_bigint(&self) -> BigInt {
        if self.mag.is_empty() {
            return BigInt::from(0);
        }
        let mut digits = vec![0u32; self.mag.len() * 2];
        for (i, &l) in self.mag.iter().enumerate() {
            digits[2 * i] = l as u32;
            digits[2 * i + 1] = (l >> 32) as u32;
        }
        let sign = if self.neg { Sign::Minus } else { Sign::Plus };
        BigInt::new(sign, digits)
    }

    /// (self >> bits) as a BigInt, or None when any shifted-out bit is
    /// set; fuses an exact power-of-two division into digit emission
    pub fn to_bigint_shr(&self, bits: u32) -> Option<BigInt> {
        if self.mag.is_empty() {
            return Some(BigInt::from(0));
        }
        if bits == 0 {
            return Some(self.to_bigint());
        }
        let whole = (bits / 64) as usize;
        let part = bits % 64;
        if whole >= self.mag.len() {
            return None;
        }
        if self.mag[..whole].iter().any(|&l| l != 0) {
            return None;
        }
        if part != 0 && self.mag[whole] << (64 - part) != 0 {
            return None;
        }
        let src = &self.mag[whole..];
        let len = src.len();
        let mut digits = vec![0u32; len * 2];
        for i in 0..len {
            let v = if part == 0 {
                src[i]
            } else {
                let hi = if i + 1 < len { src[i + 1] << (64 - part) } else { 0 };
                (src[i] >> part) | hi
            };
            digits[2 * i] = v as u32;
            digits[2 * i + 1] = (v >> 32) as u32;
        }
        let sign = if self.neg { Sign::Minus } else { Sign::Plus };
        Some(BigInt::new(sign, digits))
    }

    pub fn from_u64(v: u64) -> Self {
        let mut s = Slint { neg: false, mag: vec![v] };
        trim(&mut s.mag);
        s
    }

    /// self += x (or -= with `negate`), no scalar multiply
    pub fn add_signed(&mut self, x: &Slint, negate: bool) {
        if x.is_zero() {
            return;
        }
        let x_neg = x.neg ^ negate;
        if self.is_zero() {
            self.mag.clear();
            self.mag.extend_from_slice(&x.mag);
            self.neg = x_neg;
            return;
        }
        if self.neg == x_neg {
            mag_add_assign(&mut self.mag, &x.mag);
        } else {
            match mag_cmp(&self.mag, &x.mag) {
                std::cmp::Ordering::Less => {
                    mag_rsub_assign(&mut self.mag, &x.mag);
                    self.neg = x_neg;
                }
                _ => mag_sub_assign(&mut self.mag, &x.mag),
            }
        }
        if self.mag.is_empty() {
            self.neg = false;
        }
    }

    /// dst = s * x, optionally negated; dst's buffer is reused
    pub fn mul_scalar_into(dst: &mut Slint, x: &Slint, s: u64, negate: bool) {
        if s == 0 || x.is_zero() {
            dst.mag.clear();
            dst.neg = false;
            return;
        }
        let len = x.mag.len();
        if dst.mag.len() < len {
            dst.mag.resize(len, 0);
        } else {
            dst.mag.truncate(len);
        }
        let mut carry: u128 = 0;
        for i in 0..len {
            let v = x.mag[i] as u128 * s as u128 + carry;
            dst.mag[i] = v as u64;
            carry = v >> 64;
        }
        if carry != 0 {
            dst.mag.push(carry as u64);
        }
        dst.neg = x.neg ^ negate;
    }

    /// dst = a * x + b * y in a single fused pass; dst's buffer is reused.
    /// Safe for |a|, |b| < 2^62 (per-limb sums stay inside i128).
    pub fn lincomb_into(dst: &mut Slint, a: i64, x: &Slint, b: i64, y: &Slint) {
        // widening u64 multiplies with the operand signs folded in; this
        // keeps the inner loop on single mulx-width products instead of
        // full 128-bit multiplications
        let a_neg = (a < 0) ^ x.neg;
        let b_neg = (b < 0) ^ y.neg;
        let au = a.unsigned_abs() as u128;
        let bu = b.unsigned_abs() as u128;
        let xl = x.mag.len();
        let yl = y.mag.len();
        let len = xl.max(yl);
        // every slot in 0..len is overwritten below, so avoid the memset a
        // clear + resize pair would do on the already-initialized prefix
        if dst.mag.len() < len {
            dst.mag.resize(len, 0);
        } else {
            dst.mag.truncate(len);
        }
        let mut carry: i128 = 0;
        let common = xl.min(yl);
        for i in 0..common {
            let px = au * x.mag[i] as u128;
            let py = bu * y.mag[i] as u128;
            let mut v = carry;
            v += if a_neg { -(px as i128) } else { px as i128 };
            v += if b_neg { -(py as i128) } else { py as i128 };
            dst.mag[i] = v as u64;
            carry = v >> 64;
        }
        for i in common..xl {
            let px = au * x.mag[i] as u128;
            let v = carry + if a_neg { -(px as i128) } else { px as i128 };
            dst.mag[i] = v as u64;
            carry = v >> 64;
        }
        for i in common..yl {
            let py = bu * y.mag[i] as u128;
            let v = carry + if b_neg { -(py as i128) } else { py as i128 };
            dst.mag[i] = v as u64;
            carry = v >> 64;
        }
        if carry > 0 {
            dst.mag.push(carry as u64);
            debug_assert_eq!(carry >> 64, 0);
            dst.neg = false;
        } else if carry < 0 {
            // value is carry * 2^64^len + M with 0 <= M < 2^64^len:
            // negate the limbs two's-complement style to get the magnitude
            let mut borrow = true; // add 1 to the complement
            for l in dst.mag.iter_mut() {
                *l = !*l;
                if borrow {
                    let (nv, overflow) = l.overflowing_add(1);
                    *l = nv;
                    borrow = overflow;
                }
            }
            let high = (-carry) as u64 - if borrow { 0 } else { 1 };
            if high != 0 {
                dst.mag.push(high);
            }
            dst.neg = true;
        } else {
            dst.neg = false;
        }
        trim(&mut dst.mag);
        if dst.mag.is_empty() {
            dst.neg = false;
        }
    }

    /// a * x + b * y
    /// self /= d; returns false (leaving self in an unspecified state)
    /// when the division is not exact
    pub fn div_scalar_exact(&mut self, d: u64) -> bool {
        debug_assert!(d > 0);
        if self.mag.is_empty() {
            return true;
        }
        let s = d.trailing_zeros();
        let d = d >> s;
        if s > 0 && self.mag[0] & ((1u64 << s) - 1) != 0 {
            return false;
        }
        if d == 1 {
            if s > 0 {
                let last = self.mag.len() - 1;
                for i in 0..last {
                    self.mag[i] = (self.mag[i] >> s) | (self.mag[i + 1] << (64 - s));
                }
                self.mag[last] >>= s;
                trim(&mut self.mag);
                if self.mag.is_empty() {
                    self.neg = false;
                }
            }
            return true;
        }
        // low-to-high exact division by the odd part: each quotient limb is
        // determined mod 2^64 through the inverse, and the running borrow
        // ends at zero exactly when d divides the value; the power-of-two
        // part is shifted out in the same pass
        let mut inv = d;
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(d.wrapping_mul(inv)));
        }
        debug_assert_eq!(d.wrapping_mul(inv), 1);
        let mut borrow: u64 = 0;
        if s == 0 {
            for l in self.mag.iter_mut() {
                let (cur, under) = l.overflowing_sub(borrow);
                let q = cur.wrapping_mul(inv);
                *l = q;
                borrow = ((q as u128 * d as u128) >> 64) as u64 + under as u64;
            }
        } else {
            let last = self.mag.len() - 1;
            for i in 0..=last {
                let hi = if i < last { self.mag[i + 1] << (64 - s) } else { 0 };
                let y = (self.mag[i] >> s) | hi;
                let (cur, under) = y.overflowing_sub(borrow);
                let q = cur.wrapping_mul(inv);
                self.mag[i] = q;
                borrow = ((q as u128 * d as u128) >> 64) as u64 + under as u64;
            }
        }
        trim(&mut self.mag);
        if self.mag.is_empty() {
            self.neg = false;
        }
        borrow == 0
    }

    /// self = self * mul / d in one pass; returns false (leaving self in
    /// an unspecified state) when the division is not exact. Runs the
    /// scalar multiply, the power-of-two shift of d and the odd-part
    /// division in a single pipelined sweep over the limbs.
    pub fn mul_div_scalar_exact(&mut self, mul: u64, d: u64) -> bool {
        debug_assert!(d > 0);
        if self.is_zero() {
            return true;
        }
        if mul == 0 {
            self.mag.clear();
            self.neg = false;
            return true;
        }
        let s = d.trailing_zeros();
        let dd = d >> s;
        let mut inv = dd;
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(dd.wrapping_mul(inv)));
        }
        debug_assert_eq!(dd.wrapping_mul(inv), 1);
        let len = self.mag.len();
        let mut mc = self.mag[0] as u128 * mul as u128;
        let mut prev = mc as u64; // multiplied limb trailing the read index
        mc >>= 64;
        if s > 0 && prev & ((1u64 << s) - 1) != 0 {
            return false;
        }
        let mut borrow: u64 = 0;
        let step = |y: u64, borrow: &mut u64| -> u64 {
            let (t, under) = y.overflowing_sub(*borrow);
            let q = t.wrapping_mul(inv);
            *borrow = ((q as u128 * dd as u128) >> 64) as u64 + under as u64;
            q
        };
        for idx in 1..len {
            let v = self.mag[idx] as u128 * mul as u128 + mc;
            let cur = v as u64;
            mc = v >> 64;
            let y = if s == 0 { prev } else { (prev >> s) | (cur << (64 - s)) };
            self.mag[idx - 1] = step(y, &mut borrow);
            prev = cur;
        }
        let top = mc as u64;
        let y = if s == 0 { prev } else { (prev >> s) | (top << (64 - s)) };
        self.mag[len - 1] = step(y, &mut borrow);
        let y = if s == 0 { top } else { top >> s };
        if y != 0 || borrow != 0 {
            let q = step(y, &mut borrow);
            if q != 0 {
                self.mag.push(q);
            }
        }
        trim(&mut self.mag);
        if self.mag.is_empty() {
            self.neg = false;
        }
        borrow == 0
    }

}
