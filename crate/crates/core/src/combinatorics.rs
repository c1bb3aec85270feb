//! Partitions and the exact combinatorial scalars every series term is built
//! from: generalized Pochhammer symbols, the constants `q` and `pi_m`, and
//! Stanley's upper/lower hook-length products.

use crate::{Error, Rat, Result};
use num::{BigInt, One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Build a rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Build a rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational from `"3"`, `"-5/2"` or a plain decimal like `"2.5"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = || Error::RationalParse(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') {
            -1
        } else {
            1
        };
        let int = BigInt::from_str(int.trim()).map_err(|_| err())?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let num = BigInt::from_str(frac).map_err(|_| err())?;
        let den = num::pow(BigInt::from(10), frac.len());
        let frac_part = Rat::new(num, den);
        let int_part = Rat::from_integer(int);
        return Ok(if sign < 0 {
            int_part - frac_part
        } else {
            int_part + frac_part
        });
    }
    let n = BigInt::from_str(s).map_err(|_| err())?;
    Ok(Rat::from_integer(n))
}

/// A partition: weakly decreasing tuple of nonnegative integers. Trailing
/// zeros are not stored, so `(3,1,0)` and `(3,1)` are the same value.
///
/// The derived `Ord` compares part vectors lexicographically; within a fixed
/// weight this is the reverse-lexicographic ranking used everywhere for
/// deterministic iteration (larger first when iterated in reverse).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates weak decrease; trailing zeros are trimmed.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Conjugate (transposed diagram) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition { parts }
    }

    /// Componentwise doubling `2m`, the induced partition for type B.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
        }
    }

    /// Interlaced doubling `(m1, m1, m2, m2, ...)`, the induced partition for
    /// type BC.
    pub fn doubled_interlaced(&self) -> Partition {
        let mut parts = Vec::with_capacity(2 * self.parts.len());
        for &p in &self.parts {
            parts.push(p);
            parts.push(p);
        }
        Partition { parts }
    }

    /// `2m + parity * (1,...,1)` on exactly `rank` rows, the induced partition
    /// for type D. With parity 1 every row is occupied, so the base partition
    /// must fit inside the rank.
    pub fn doubled_plus_parity(&self, rank: usize, parity: u8) -> Result<Partition> {
        if self.len() > rank {
            return Err(Error::PartitionTooLong {
                len: self.len(),
                rank,
            });
        }
        let eps = u32::from(parity.min(1));
        let parts: Vec<u32> = (0..rank).map(|i| 2 * self.part(i) + eps).collect();
        Partition::new(parts)
    }

    /// True when `self` dominates `other` (both of the same weight):
    /// all prefix sums of `self` are at least those of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.weight(), other.weight());
        let n = self.parts.len().max(other.parts.len());
        let (mut sa, mut sb) = (0u64, 0u64);
        for i in 0..n {
            sa += u64::from(self.part(i));
            sb += u64::from(other.part(i));
            if sa < sb {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `""` and `"0"` are the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| Error::PartitionParse(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::PartitionParse(s.to_string()))
    }
}

/// All partitions of `weight` with at most `max_len` parts, in
/// reverse-lexicographic (largest-first) order. Deterministic; the empty
/// partition is the single result for weight 0.
pub fn enumerate_partitions(weight: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(weight, max_len, weight, &mut stack, &mut out);
    out
}

fn descend(rem: u32, slots: usize, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = rem.min(cap);
    // smallest admissible leading part: the rest must fit in the slots left
    let lo = rem.div_ceil(slots as u32);
    if lo > hi {
        return;
    }
    for p in (lo..=hi).rev() {
        stack.push(p);
        descend(rem - p, slots - 1, p, stack, out);
        stack.pop();
    }
}

/// Classical rising factorial `(c)_n = c (c+1) ... (c+n-1)`.
pub fn rising(c: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    let mut f = c.clone();
    for _ in 0..n {
        acc *= &f;
        f += Rat::one();
    }
    acc
}

/// Generalized Pochhammer symbol
/// `(c)_{m,beta} = prod_j prod_{k=1..m_j} (c - beta (j-1) + k - 1)`.
pub fn gen_pochhammer(c: &Rat, m: &Partition, beta: &Rat) -> Rat {
    let mut acc = Rat::one();
    for (j, &mj) in m.parts().iter().enumerate() {
        let base = c - beta * rat_int(j as i64);
        acc *= rising(&base, mj);
    }
    acc
}

/// The constant `q = 1 + (a/2)(r-1)`.
pub fn q_param(r: u32, a: &Rat) -> Rat {
    Rat::one() + a / rat_int(2) * rat_int(i64::from(r) - 1)
}

/// The normalization constant `pi_m` at multiplicity `a/2`:
///
/// ```text
/// pi_m = prod_{1<=i<j<=r}  (m_i - m_j + (a/2)(j-i)) / ((a/2)(j-i))
///                        * ((a/2)(j-i+1))_{m_i-m_j} / ((a/2)(j-i-1) + 1)_{m_i-m_j}
/// ```
///
/// With `Omega_m(1^r) = 1` this makes `pi_m / (q)_m` the weight of the
/// monomial-normalized Jack polynomial in the hypergeometric series, i.e.
/// `C_m(1^r)/|m|!` in the `C`-normalization.
pub fn pi_m(m: &Partition, r: u32, a: &Rat) -> Result<Rat> {
    if m.len() > r as usize {
        return Err(Error::PartitionTooLong {
            len: m.len(),
            rank: r as usize,
        });
    }
    let half_a = a / rat_int(2);
    let mut acc = Rat::one();
    for i in 0..(r as usize) {
        for j in (i + 1)..(r as usize) {
            let diff = m.part(i) - m.part(j);
            if diff == 0 {
                continue;
            }
            let gap = rat_int((j - i) as i64);
            let num0 = rat_int(i64::from(diff)) + &half_a * &gap;
            let den0 = &half_a * &gap;
            acc *= num0 / den0;
            let up = &half_a * (&gap + Rat::one());
            let dn = &half_a * (&gap - Rat::one()) + Rat::one();
            acc *= rising(&up, diff) / rising(&dn, diff);
        }
    }
    Ok(acc)
}

/// Lower and upper hook-length products `(h_*(m), h^*(m))` at Jack parameter
/// `alpha`: over the cells `s` of the diagram, `h_* = prod (alpha a(s) + l(s) + 1)`
/// and `h^* = prod (alpha a(s) + l(s) + alpha)`.
pub fn hook_products(m: &Partition, alpha: &Rat) -> (Rat, Rat) {
    let conj = m.conjugate();
    let mut lower = Rat::one();
    let mut upper = Rat::one();
    for (i, &row) in m.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = rat_int(i64::from(row) - 1 - j as i64);
            let leg = rat_int(i64::from(conj.part(j)) - 1 - i as i64);
            lower *= alpha * &arm + &leg + Rat::one();
            upper *= alpha * &arm + &leg + alpha;
        }
    }
    (lower, upper)
}

/// True when the rational is a (possibly negative) integer `<= 0`.
pub fn is_nonpositive_integer(x: &Rat) -> bool {
    x.is_integer() && !x.is_positive()
}
