//! Brute-force verification route for the closed-form Fock norms: Dunkl
//! operators attached to the restricted root system, acting symbolically on
//! polynomials, and the Fock-Fischer pairing `||p||^2 = p(D) p* |_{x=0}`.
//!
//! Everything here is exact and deliberately small-scale; this is a test
//! oracle, not a production evaluator.
//!
//! Coordinates: the root `beta_j` is the linear form `2 x_j`, `beta_j / 2` is
//! `x_j`, and `(beta_j +- beta_k)/2` is `x_j +- x_k`; this is the unique
//! realization with `beta_j(xi_k) = 2 delta_jk`. The reflections are the sign
//! flip of `x_j` for `+-beta_j` and `+-beta_j/2`, the transposition of
//! `(x_j, x_k)` for `(beta_j - beta_k)/2`, and `(x_j, x_k) -> (-x_k, -x_j)`
//! for `(beta_j + beta_k)/2`.

use crate::combinatorics::{rat_int, Partition};
use crate::jack::jack_j;
use crate::mpoly::MPoly;
use crate::{Error, Rat, Result};
use num::{Signed, Zero};

/// Exponent-map polynomial re-exported under the name the oracle speaks.
pub type MultivariatePoly = MPoly;

/// Rank and root multiplicities of one restricted root system of type B/BC/D
/// (`iota - 1` on `+-beta_j`, `a` on `(beta_j +- beta_k)/2`, `2b` on
/// `+-beta_j/2`).
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystemData {
    pub rank: usize,
    pub iota_minus_1: Rat,
    pub a: Rat,
    pub two_b: Rat,
}

impl RootSystemData {
    pub fn new(rank: usize, iota_minus_1: Rat, a: Rat, two_b: Rat) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument(
                "root system rank must be positive".into(),
            ));
        }
        if iota_minus_1.is_negative() || a.is_negative() || two_b.is_negative() {
            return Err(Error::InvalidArgument(
                "multiplicities must be nonnegative".into(),
            ));
        }
        Ok(RootSystemData {
            rank,
            iota_minus_1,
            a,
            two_b,
        })
    }

    /// Multiplicity data of a domain's restricted root system.
    pub fn from_domain(dom: &crate::domains::DomainDescriptor) -> Result<Self> {
        RootSystemData::new(
            dom.real.rank as usize,
            dom.real.iota_minus_1.clone(),
            dom.real.a.clone(),
            dom.real.two_b.clone(),
        )
    }

    /// Combined coefficient on the `1/x_j` difference term:
    /// `(iota - 1)/2 + b`.
    fn k1(&self) -> Rat {
        (&self.iota_minus_1 + &self.two_b) / rat_int(2)
    }
}

/// Apply the Dunkl operator `D_j` (`j` is 1-based):
///
/// ```text
/// D_j p = d_j p + (1/2) sum_{roots > 0} mult * root(xi_j)/root(x) * (p - p o refl)
/// ```
///
/// The difference quotients are exact polynomial divisions; non-divisibility
/// cannot happen for polynomial input and is reported as an error rather than
/// silently truncated.
pub fn dunkl_apply(rs: &RootSystemData, j: usize, p: &MPoly) -> Result<MPoly> {
    if j == 0 || j > rs.rank {
        return Err(Error::InvalidArgument(format!(
            "variable index {j} out of 1..={}",
            rs.rank
        )));
    }
    if p.rank() != rs.rank {
        return Err(Error::InvalidArgument(
            "polynomial rank does not match root system".into(),
        ));
    }
    let i = j - 1;
    let mut out = p.partial(i);
    let k1 = rs.k1();
    if !k1.is_zero() {
        let diff = p.sub(&p.flip_var(i));
        out = out.add(&diff.div_var(i)?.scale(&k1));
    }
    if !rs.a.is_zero() && rs.rank > 1 {
        let half_a = &rs.a / rat_int(2);
        for k in 0..rs.rank {
            if k == i {
                continue;
            }
            let dswap = p.sub(&p.swap_vars(i, k));
            out = out.add(&dswap.div_linear(i, k, 1)?.scale(&half_a));
            let danti = p.sub(&p.antiswap_vars(i, k));
            out = out.add(&danti.div_linear(i, k, -1)?.scale(&half_a));
        }
    }
    Ok(out)
}

/// Fock-Fischer pairing `p(D) q* |_{x=0}`; with `half` set, each `D_j` is
/// replaced by `D_j / 2` (the convention for type BC, where the minimal
/// tripotents of the real form have twice the norm square).
pub fn pair_b(rs: &RootSystemData, p: &MPoly, q: &MPoly, half: bool) -> Result<Rat> {
    if p.rank() != rs.rank || q.rank() != rs.rank {
        return Err(Error::InvalidArgument(
            "polynomial rank does not match root system".into(),
        ));
    }
    let mut acc = Rat::zero();
    for (exps, coeff) in p.terms() {
        let mut g = q.clone();
        let mut total: u32 = 0;
        for (var, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                g = dunkl_apply(rs, var + 1, &g)?;
                if g.is_zero() {
                    break;
                }
            }
            total += e;
        }
        let mut c = coeff * g.eval_zero();
        if half && total > 0 {
            c /= num::pow(rat_int(2), total as usize);
        }
        acc += c;
    }
    Ok(acc)
}

/// Norm square `||p||^2 = p(D) p* |_{x=0}` (coefficients are real here, so
/// `p* = p`).
pub fn norm_b(rs: &RootSystemData, p: &MPoly, half: bool) -> Result<Rat> {
    pair_b(rs, p, p, half)
}

/// The restriction of the invariant polynomial to the Cartan subspace:
/// `Omega_m(x_1^2, ..., x_r^2)`, optionally times `x_1 ... x_r` (type D odd
/// branch). Built from the exact Jack table; `m_mu(x^2) = m_{2 mu}(x)`.
pub fn restricted_invariant(m: &Partition, rank: usize, a: &Rat, odd: bool) -> Result<MPoly> {
    let alpha = rat_int(2) / a;
    let table = jack_j(m, &alpha, rank)?;
    let ones = table.eval_ones();
    let mut out = MPoly::zero(rank);
    for (mu, c) in table.coeffs() {
        let doubled = mu.doubled();
        let scaled = c / &ones;
        for mut e in crate::jack::distinct_permutations(&doubled, rank) {
            if odd {
                for x in e.iter_mut() {
                    *x += 1;
                }
            }
            out.add_term(e, scaled.clone());
        }
    }
    Ok(out)
}
