//! Sparse multivariate polynomials over exact rationals, on a fixed set of
//! variables `x_1..x_r`. This is the small symbolic engine shared by the Jack
//! eigenoperator construction and the Dunkl-operator oracle: exponent-map
//! storage, differentiation, variable symmetries, and exact division by the
//! linear forms `x_i - x_j`, `x_i + x_j` and `x_i`.

use crate::{Error, Rat, Result};
use num::Zero;
use std::collections::BTreeMap;

/// Polynomial in `rank` variables with exact rational coefficients.
/// Exponent vectors always have length `rank`; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    rank: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(rank: usize) -> Self {
        MPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: Rat) -> Self {
        let mut p = MPoly::zero(rank);
        p.add_term(vec![0; rank], c);
        p
    }

    pub fn monomial(exps: Vec<u32>, c: Rat) -> Self {
        let mut p = MPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant term, i.e. the value at the origin.
    pub fn eval_zero(&self) -> Rat {
        self.coeff(&vec![0; self.rank])
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        debug_assert_eq!(exps.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.rank);
        }
        let mut out = MPoly::zero(self.rank);
        for (e, v) in self.terms() {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = MPoly::zero(self.rank);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Partial derivative with respect to `x_i` (0-based).
    pub fn partial(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.rank);
        for (e, c) in self.terms() {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * crate::combinatorics::rat_int(i64::from(e[i])));
        }
        out
    }

    /// Multiply by the monomial `x_i^k`.
    pub fn mul_var_pow(&self, i: usize, k: u32) -> MPoly {
        let mut out = MPoly::zero(self.rank);
        for (e, c) in self.terms() {
            let mut e2 = e.clone();
            e2[i] += k;
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// Swap variables `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MPoly {
        let mut out = MPoly::zero(self.rank);
        for (e, c) in self.terms() {
            let mut e2 = e.clone();
            e2.swap(i, j);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Send `x_i` to `-x_i`.
    pub fn flip_var(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.rank);
        for (e, c) in self.terms() {
            let c2 = if e[i] % 2 == 1 { -c.clone() } else { c.clone() };
            out.add_term(e.clone(), c2);
        }
        out
    }

    /// Send `(x_i, x_j)` to `(-x_j, -x_i)`, the reflection in `x_i + x_j`.
    pub fn antiswap_vars(&self, i: usize, j: usize) -> MPoly {
        let mut out = MPoly::zero(self.rank);
        for (e, c) in self.terms() {
            let mut e2 = e.clone();
            e2.swap(i, j);
            let c2 = if (e[i] + e[j]) % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            out.add_term(e2, c2);
        }
        out
    }

    /// Apply the permutation `perm` to the variables: the new exponent of
    /// `x_{perm[i]}` is the old exponent of `x_i`.
    pub fn permute_vars(&self, perm: &[usize]) -> MPoly {
        let mut out = MPoly::zero(self.rank);
        for (e, c) in self.terms() {
            let mut e2 = vec![0u32; self.rank];
            for (i, &x) in e.iter().enumerate() {
                e2[perm[i]] = x;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Exact division by `x_i` (every term must contain `x_i`).
    pub fn div_var(&self, i: usize) -> Result<MPoly> {
        let mut out = MPoly::zero(self.rank);
        for (e, c) in self.terms() {
            if e[i] == 0 {
                return Err(Error::NonDivisible(format!("x_{}", i + 1)));
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.terms.insert(e2, c.clone());
        }
        Ok(out)
    }

    /// Exact division by `x_i - sign * x_j` (`sign` is +1 or -1). Uses the
    /// identity `x_i^k = (x_i - s x_j) sum_{d<k} s^{k-1-d} x_i^d x_j^{k-1-d}
    /// + (s x_j)^k`; the collected remainder must vanish.
    pub fn div_linear(&self, i: usize, j: usize, sign: i8) -> Result<MPoly> {
        debug_assert!(i != j);
        let mut quot = MPoly::zero(self.rank);
        let mut rem = MPoly::zero(self.rank);
        for (e, c) in self.terms() {
            let k = e[i];
            let mut base = e.clone();
            base[i] = 0;
            for d in 0..k {
                let mut e2 = base.clone();
                e2[i] = d;
                e2[j] += k - 1 - d;
                let neg = sign < 0 && (k - 1 - d) % 2 == 1;
                quot.add_term(e2, if neg { -c.clone() } else { c.clone() });
            }
            let mut er = base;
            er[j] += k;
            let neg = sign < 0 && k % 2 == 1;
            rem.add_term(er, if neg { -c.clone() } else { c.clone() });
        }
        if !rem.is_zero() {
            let op = if sign >= 0 { "-" } else { "+" };
            return Err(Error::NonDivisible(format!(
                "x_{} {} x_{}",
                i + 1,
                op,
                j + 1
            )));
        }
        Ok(quot)
    }

    /// Exact division by the Vandermonde product `prod_{i<j} (x_i - x_j)`.
    pub fn div_vandermonde(&self) -> Result<MPoly> {
        let mut out = self.clone();
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                out = out.div_linear(i, j, 1)?;
            }
        }
        Ok(out)
    }

    /// Total degree (None when zero).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{rat, rat_int};
    use num::One;

    fn x(rank: usize, i: usize) -> MPoly {
        let mut e = vec![0; rank];
        e[i] = 1;
        MPoly::monomial(e, Rat::one())
    }

    #[test]
    fn arithmetic_and_derivative() {
        let p = x(2, 0).add(&x(2, 1)); // x + y
        let sq = p.mul(&p); // x^2 + 2xy + y^2
        assert_eq!(sq.coeff(&[1, 1]), rat_int(2));
        assert_eq!(sq.partial(0).coeff(&[1, 0]), rat_int(2));
        assert_eq!(sq.partial(0).coeff(&[0, 1]), rat_int(2));
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn linear_division_exact() {
        // (x^3 - y^3) / (x - y) = x^2 + xy + y^2
        let num =
            MPoly::monomial(vec![3, 0], Rat::one()).sub(&MPoly::monomial(vec![0, 3], Rat::one()));
        let q = num.div_linear(0, 1, 1).unwrap();
        assert_eq!(q.coeff(&[2, 0]), Rat::one());
        assert_eq!(q.coeff(&[1, 1]), Rat::one());
        assert_eq!(q.coeff(&[0, 2]), Rat::one());
        // (x^2 - y^2) / (x + y) = x - y
        let num =
            MPoly::monomial(vec![2, 0], Rat::one()).sub(&MPoly::monomial(vec![0, 2], Rat::one()));
        let q = num.div_linear(0, 1, -1).unwrap();
        assert_eq!(q.coeff(&[1, 0]), Rat::one());
        assert_eq!(q.coeff(&[0, 1]), -Rat::one());
        // x^2 + y^2 is not divisible by x - y
        let bad =
            MPoly::monomial(vec![2, 0], Rat::one()).add(&MPoly::monomial(vec![0, 2], Rat::one()));
        assert!(bad.div_linear(0, 1, 1).is_err());
    }

    #[test]
    fn reflections() {
        let p = MPoly::monomial(vec![2, 1], rat(3, 2));
        assert_eq!(p.swap_vars(0, 1).coeff(&[1, 2]), rat(3, 2));
        assert_eq!(p.flip_var(1).coeff(&[2, 1]), rat(-3, 2));
        assert_eq!(p.antiswap_vars(0, 1).coeff(&[1, 2]), rat(-3, 2));
    }

    #[test]
    fn vandermonde_division() {
        // a_delta = prod_{i<j}(x_i - x_j) for r = 3 divided by itself is 1.
        let r = 3;
        let mut v = MPoly::constant(r, Rat::one());
        for i in 0..r {
            for j in (i + 1)..r {
                v = v.mul(&x(r, i).sub(&x(r, j)));
            }
        }
        let q = v.div_vandermonde().unwrap();
        assert_eq!(q, MPoly::constant(r, Rat::one()));
    }
}
