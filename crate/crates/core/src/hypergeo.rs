//! The multivariate hypergeometric series `kFl^{(2/a)}`:
//!
//! ```text
//! kFl(alpha; beta; t) = sum_m  [prod_p (alpha_p)_m / prod_p (beta_p)_m]
//!                              * pi_m / (q)_m * Omega_m(t_1^2, ..., t_r^2)
//! ```
//!
//! summed over partitions `m` of length at most the rank, with all Pochhammer
//! symbols at step `a/2`. Note the squares: the series consumes its argument
//! through `t_i^2`. This module owns that convention; callers pass geometric
//! coordinates `t` and never square anything themselves.
//!
//! Evaluation is by complete weight shells in increasing weight, reduced in
//! enumeration order, so results are bit-reproducible for a given accumulator
//! type. The magnitude of the last complete shell is reported as the tail
//! proxy; there is no extrapolation.

use crate::combinatorics::{
    enumerate_partitions, is_nonpositive_integer, pi_m, q_param, rat_int, Partition,
};
use crate::jack::omega_eval;
use crate::numeric::{Precision, SeriesScalar};
use crate::{Error, Rat, Result};
use num::{One, Signed, Zero};
use serde::Serialize;

/// Validated parameter list for one series.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesParams {
    alpha: Vec<Rat>,
    beta: Vec<Rat>,
    rank: u32,
    mult_a: Rat,
}

impl SeriesParams {
    /// Validates the denominator parameters against the pole lattice: for
    /// each `beta_p` and row `i <= r`, `beta_p - (a/2)(i-1)` must not be a
    /// nonpositive integer, unless a truncating numerator parameter kills
    /// every term with `m_i > 0` first.
    pub fn new(alpha: Vec<Rat>, beta: Vec<Rat>, rank: u32, mult_a: Rat) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument(
                "series rank must be at least 1".into(),
            ));
        }
        if !mult_a.is_positive() {
            return Err(Error::NonPositiveMultiplicity(mult_a.to_string()));
        }
        let p = SeriesParams {
            alpha,
            beta,
            rank,
            mult_a,
        };
        let trunc = p.truncation_row();
        let half_a = &p.mult_a / rat_int(2);
        for b in &p.beta {
            for i in 1..=rank {
                let shifted = b - &half_a * rat_int(i64::from(i) - 1);
                if is_nonpositive_integer(&shifted) && trunc.is_none_or(|j| j > i) {
                    return Err(Error::PoleLattice {
                        beta: b.to_string(),
                        row: i,
                    });
                }
            }
        }
        Ok(p)
    }

    pub fn alpha(&self) -> &[Rat] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Rat] {
        &self.beta
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn mult_a(&self) -> &Rat {
        &self.mult_a
    }

    /// Smallest row `j` with some numerator parameter equal to `(a/2)(j-1)`:
    /// the series then runs only over partitions with `m_j = 0`.
    pub fn truncation_row(&self) -> Option<u32> {
        let half_a = &self.mult_a / rat_int(2);
        let mut best: Option<u32> = None;
        for al in &self.alpha {
            for j in 1..=self.rank {
                if *al == &half_a * rat_int(i64::from(j) - 1) {
                    best = Some(best.map_or(j, |b| b.min(j)));
                    break;
                }
            }
        }
        best
    }

    /// Boundedness of the series on `[0,1)^r`, equivalently convergence of
    /// the sum at the all-ones point.
    ///
    /// For the balanced shape `k = l+1` the criterion is the strict
    /// inequality `sum(alpha) - sum(beta) < -(a/2)(r-1)`. A numerator equal
    /// to zero truncates the sum to the single empty partition, which is
    /// convergent outright. A truncating numerator at a later row `j >= 2`
    /// does not relax the criterion: the single-row shells survive the
    /// truncation and their terms decay like `w^(eps-1)`, so the same strict
    /// inequality decides. Shapes the balanced criterion does not cover are
    /// extended by domination: `k <= l` converges, `k > l+1` diverges.
    pub fn convergent_at_one(&self) -> bool {
        if self.truncation_row() == Some(1) {
            return true;
        }
        let k = self.alpha.len();
        let l = self.beta.len();
        if k <= l {
            return true;
        }
        if k > l + 1 {
            return false;
        }
        self.criterion_margin().is_negative()
    }

    /// `eps = sum(alpha) - sum(beta) + (a/2)(r-1)`; negative means bounded.
    pub fn criterion_margin(&self) -> Rat {
        let sa: Rat = self.alpha.iter().fold(Rat::zero(), |acc, x| acc + x);
        let sb: Rat = self.beta.iter().fold(Rat::zero(), |acc, x| acc + x);
        sa - sb + &self.mult_a / rat_int(2) * rat_int(i64::from(self.rank) - 1)
    }

    /// One series term at partition `m`, without the Jack factor:
    /// `prod (alpha_p)_m / prod (beta_p)_m * pi_m / (q)_m`.
    ///
    /// Numerator zeros are detected exactly (in every accumulator type) and
    /// short-circuit to zero before any division, so truncated series never
    /// touch the cancelling denominator factors.
    pub fn term_coeff<T: SeriesScalar>(&self, m: &Partition) -> Result<T> {
        let half_a = &self.mult_a / rat_int(2);
        // exact zero detection on the numerator lattice
        for al in &self.alpha {
            for (j, &mj) in m.parts().iter().enumerate() {
                let base = al - &half_a * rat_int(j as i64);
                // (base)_{mj} = 0 iff base is in {0, -1, ..., -(mj-1)}
                if mj > 0 && is_nonpositive_integer(&base) && -base.clone() < rat_int(i64::from(mj))
                {
                    return Ok(T::zero());
                }
            }
        }
        let q = q_param(self.rank, &self.mult_a);
        let mut acc = T::from_rat(&pi_m(m, self.rank, &self.mult_a)?);
        for (j, &mj) in m.parts().iter().enumerate() {
            let shift = &half_a * rat_int(j as i64);
            for k in 0..mj {
                let off = rat_int(i64::from(k)) - &shift;
                for al in &self.alpha {
                    acc = acc * T::from_rat(&(al + &off));
                }
                for be in &self.beta {
                    let d = be + &off;
                    if d.is_zero() {
                        return Err(Error::PoleHit { row: j as u32 + 1 });
                    }
                    acc = acc / T::from_rat(&d);
                }
                acc = acc / T::from_rat(&(&q + &off));
            }
        }
        Ok(acc)
    }

    /// Exact rational route for one term; the independent cross-check of
    /// [`Self::term_coeff`] used by tests.
    pub fn term_coeff_exact(&self, m: &Partition) -> Result<Rat> {
        use crate::combinatorics::gen_pochhammer;
        let half_a = &self.mult_a / rat_int(2);
        let mut num = Rat::one();
        for al in &self.alpha {
            num *= gen_pochhammer(al, m, &half_a);
        }
        if num.is_zero() {
            return Ok(Rat::zero());
        }
        let mut den = Rat::one();
        for be in &self.beta {
            den *= gen_pochhammer(be, m, &half_a);
        }
        if den.is_zero() {
            return Err(Error::PoleHit { row: 0 });
        }
        let q = q_param(self.rank, &self.mult_a);
        let qm = gen_pochhammer(&q, m, &half_a);
        Ok(num * pi_m(m, self.rank, &self.mult_a)? / (den * qm))
    }

    fn describe(&self) -> String {
        let a: Vec<String> = self.alpha.iter().map(|x| x.to_string()).collect();
        let b: Vec<String> = self.beta.iter().map(|x| x.to_string()).collect();
        format!(
            "{}F{}(({}); ({}); rank {}, a = {})",
            self.alpha.len(),
            self.beta.len(),
            a.join(", "),
            b.join(", "),
            self.rank,
            self.mult_a
        )
    }
}

/// Convergence verdict attached to every summed series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ConvergedByCriterion,
    TruncatedSeries,
    DivergentByCriterion,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::ConvergedByCriterion => write!(f, "converged-by-criterion"),
            Verdict::TruncatedSeries => write!(f, "truncated-series"),
            Verdict::DivergentByCriterion => write!(f, "divergent-by-criterion"),
        }
    }
}

/// Outcome of a truncated series evaluation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: f64,
    /// Exact rational value, present only in extended precision.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_exact: Option<String>,
    /// Largest complete weight shell included in the sum.
    pub truncation_degree: u32,
    /// Absolute value of the last included shell sum, the tail proxy.
    pub last_shell_magnitude: f64,
    pub verdict: Verdict,
}

/// Sum the series over weight shells `0..=max_degree` at the squared argument
/// `Omega_m(t^2)` (callers pass `t`). Each `t_i` must lie in `[0,1)`.
pub fn hyper_eval(
    p: &SeriesParams,
    t: &[f64],
    max_degree: u32,
    precision: Precision,
) -> Result<SeriesResult> {
    if t.len() != p.rank as usize {
        return Err(Error::InvalidArgument(format!(
            "expected {} coordinates, got {}",
            p.rank,
            t.len()
        )));
    }
    for (i, &x) in t.iter().enumerate() {
        if !(0.0..1.0).contains(&x) {
            return Err(Error::ArgumentOutOfDomain { index: i, value: x });
        }
    }
    let verdict = if p.convergent_at_one() {
        Verdict::ConvergedByCriterion
    } else {
        Verdict::DivergentByCriterion
    };
    match precision {
        Precision::Double => {
            let u: Vec<f64> = t.iter().map(|x| x * x).collect();
            let (value, shells) = eval_omega_arg::<f64>(p, &u, max_degree)?;
            Ok(pack(value, &shells, max_degree, verdict))
        }
        Precision::Extended => {
            let u: Vec<Rat> = t
                .iter()
                .map(|&x| {
                    let r = <Rat as SeriesScalar>::from_f64(x);
                    &r * &r
                })
                .collect();
            let (value, shells) = eval_omega_arg::<Rat>(p, &u, max_degree)?;
            Ok(pack(value, &shells, max_degree, verdict))
        }
    }
}

/// Shell-wise sum with the Jack argument passed through unsquared. This is
/// the one entry point that bypasses the squaring convention; radial formulas
/// whose expansion is in `Omega_m(t)` rather than `Omega_m(t^2)` go through
/// here.
pub(crate) fn eval_omega_arg<T: SeriesScalar>(
    p: &SeriesParams,
    u: &[T],
    max_degree: u32,
) -> Result<(T, Vec<T>)> {
    debug_assert_eq!(u.len(), p.rank as usize);
    let mut total = T::zero();
    let mut shells = Vec::with_capacity(max_degree as usize + 1);
    for w in 0..=max_degree {
        let mut shell = T::zero();
        for m in enumerate_partitions(w, p.rank as usize) {
            let c: T = p.term_coeff(&m)?;
            if c.is_zero() {
                continue;
            }
            let om = omega_eval::<T>(&m, &p.mult_a, u)?;
            shell = shell + c * om;
        }
        total = total + shell.clone();
        shells.push(shell);
    }
    Ok((total, shells))
}

/// Shell sums of the series at the all-ones point (`Omega = 1`), up to
/// `max_degree`, with no convergence gate. The empirical-boundedness suite
/// consumes these.
pub fn shells_at_one(p: &SeriesParams, max_degree: u32, precision: Precision) -> Result<Vec<f64>> {
    match precision {
        Precision::Double => shells_at_one_typed::<f64>(p, max_degree),
        Precision::Extended => {
            let shells = shells_at_one_typed::<Rat>(p, max_degree)?;
            Ok(shells)
        }
    }
}

fn shells_at_one_typed<T: SeriesScalar>(p: &SeriesParams, max_degree: u32) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(max_degree as usize + 1);
    for w in 0..=max_degree {
        let mut shell = T::zero();
        for m in enumerate_partitions(w, p.rank as usize) {
            shell = shell + p.term_coeff::<T>(&m)?;
        }
        out.push(shell.to_f64());
    }
    Ok(out)
}

/// Sum the series at the all-ones point. Refuses parameter sets that fail
/// the boundedness criterion. Stops early once a shell's absolute sum drops
/// below `tail_tol`; the verdict records whether that happened within
/// `max_degree`.
pub fn hyper_at_one(
    p: &SeriesParams,
    max_degree: u32,
    tail_tol: f64,
    precision: Precision,
) -> Result<SeriesResult> {
    if !p.convergent_at_one() {
        return Err(Error::DivergentAtOne(p.describe()));
    }
    match precision {
        Precision::Double => at_one_typed::<f64>(p, max_degree, tail_tol),
        Precision::Extended => at_one_typed::<Rat>(p, max_degree, tail_tol),
    }
}

fn at_one_typed<T: SeriesScalar>(
    p: &SeriesParams,
    max_degree: u32,
    tail_tol: f64,
) -> Result<SeriesResult> {
    let tol = T::from_f64(tail_tol);
    let mut total = T::zero();
    let mut last_shell = T::zero();
    let mut degree = 0;
    let mut reached = false;
    for w in 0..=max_degree {
        let mut shell = T::zero();
        for m in enumerate_partitions(w, p.rank as usize) {
            shell = shell + p.term_coeff::<T>(&m)?;
        }
        total = total + shell.clone();
        last_shell = shell;
        degree = w;
        if w > 0 && last_shell.abs() < tol {
            reached = true;
            break;
        }
    }
    let verdict = if reached {
        Verdict::ConvergedByCriterion
    } else {
        Verdict::TruncatedSeries
    };
    Ok(SeriesResult {
        value: total.to_f64(),
        value_exact: total.exact_repr(),
        truncation_degree: degree,
        last_shell_magnitude: last_shell.abs().to_f64(),
        verdict,
    })
}

fn pack<T: SeriesScalar>(
    value: T,
    shells: &[T],
    max_degree: u32,
    verdict: Verdict,
) -> SeriesResult {
    let last = shells.last().map(|s| s.abs().to_f64()).unwrap_or(0.0);
    SeriesResult {
        value: value.to_f64(),
        value_exact: value.exact_repr(),
        truncation_degree: max_degree,
        last_shell_magnitude: last,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::rat;

    fn params(alpha: &[Rat], beta: &[Rat], rank: u32, a: Rat) -> SeriesParams {
        SeriesParams::new(alpha.to_vec(), beta.to_vec(), rank, a).unwrap()
    }

    #[test]
    fn criterion_matches_gauss_at_rank_one() {
        let p = params(&[rat_int(1), rat_int(1)], &[rat_int(3)], 1, rat_int(2));
        assert!(p.convergent_at_one());
        let p = params(&[rat_int(2), rat_int(2)], &[rat_int(3)], 2, rat_int(2));
        assert!(!p.convergent_at_one());
    }

    #[test]
    fn zero_numerator_truncates_everything() {
        let p = params(&[rat_int(0), rat_int(5)], &[rat_int(3)], 3, rat_int(2));
        assert!(p.convergent_at_one());
        assert_eq!(p.truncation_row(), Some(1));
        let r = hyper_at_one(&p, 50, 1e-12, Precision::Double).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn shape_extensions() {
        // k <= l: dominated, convergent
        let p = params(&[rat_int(5)], &[rat_int(3), rat_int(3)], 2, rat_int(2));
        assert!(p.convergent_at_one());
        // k > l + 1: divergent
        let p = params(
            &[rat_int(1), rat_int(1), rat_int(1)],
            &[rat_int(9)],
            2,
            rat_int(2),
        );
        assert!(!p.convergent_at_one());
    }

    #[test]
    fn pole_lattice_rejected_unless_truncated() {
        // beta = 0 is a pole at row 1
        let err = SeriesParams::new(vec![rat_int(1)], vec![rat_int(0)], 2, rat_int(2));
        assert!(matches!(err, Err(Error::PoleLattice { .. })));
        // beta = 1 at rank 2, a = 2: pole at row 2 (1 - 1 = 0); a numerator
        // truncating at row 2 saves it
        let err = SeriesParams::new(vec![rat_int(5)], vec![rat_int(1)], 2, rat_int(2));
        assert!(matches!(err, Err(Error::PoleLattice { .. })));
        let ok = SeriesParams::new(
            vec![rat_int(1), rat_int(5)],
            vec![rat_int(1)],
            2,
            rat_int(2),
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn gauss_log_identity_rank_one() {
        // 2F1(1,1;2;t) with the squared-argument convention sums to
        // -ln(1 - t^2)/t^2
        let p = params(&[rat_int(1), rat_int(1)], &[rat_int(2)], 1, rat_int(2));
        let t = 0.5;
        let r = hyper_eval(&p, &[t], 60, Precision::Double).unwrap();
        let expect = -(1.0 - t * t).ln() / (t * t);
        assert!((r.value - expect).abs() < 1e-10, "{} vs {expect}", r.value);
        // the parameter sum sits exactly on the boundary: divergent at 1
        assert_eq!(r.verdict, Verdict::DivergentByCriterion);
    }

    #[test]
    fn at_zero_only_the_empty_partition_survives() {
        let p = params(&[rat(7, 2), rat_int(1)], &[rat_int(4)], 3, rat_int(1));
        let r = hyper_eval(&p, &[0.0, 0.0, 0.0], 8, Precision::Double).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn truncating_numerator_equals_restricted_sum() {
        // alpha contains (a/2)(2-1) = 1 at a = 2: only m_2 = 0 survives
        let p = params(&[rat_int(1), rat_int(2)], &[rat_int(6)], 2, rat_int(2));
        let full = hyper_eval(&p, &[0.4, 0.3], 24, Precision::Double).unwrap();
        // restricted sum computed by hand over single-row partitions
        let mut expect = 0.0;
        for w in 0..=24u32 {
            let m = Partition::new(vec![w]).unwrap();
            let c: f64 = p.term_coeff(&m).unwrap();
            let om: f64 = omega_eval(&m, &rat_int(2), &[0.4f64 * 0.4, 0.3 * 0.3]).unwrap();
            expect += c * om;
        }
        assert!((full.value - expect).abs() < 1e-12);
    }

    /// `1F0(nu; t) = prod_j (1 - t_j^2)^(-nu)`, independent of the
    /// multiplicity parameter: one closed-form oracle covering the partition
    /// weights, `pi_m/(q)_m`, and the Jack evaluation at once.
    #[test]
    fn binomial_identity_at_rank_two() {
        let t = [0.3f64, 0.6];
        let expect = ((1.0f64 - 0.09) * (1.0 - 0.36)).powf(-1.5);
        for a in [rat_int(1), rat_int(2), rat_int(4)] {
            let p = params(&[rat(3, 2)], &[], 2, a.clone());
            let r = hyper_eval(&p, &t, 80, Precision::Double).unwrap();
            assert!(
                (r.value - expect).abs() < 1e-12,
                "a = {a}: {} vs {expect}",
                r.value
            );
        }
    }

    #[test]
    fn hyper_at_one_refuses_divergent() {
        let p = params(&[rat_int(2), rat_int(2)], &[rat_int(3)], 2, rat_int(2));
        assert!(matches!(
            hyper_at_one(&p, 40, 1e-8, Precision::Double),
            Err(Error::DivergentAtOne(_))
        ));
    }

    #[test]
    fn monotone_partial_sums_for_positive_parameters() {
        let p = params(&[rat(3, 2), rat_int(1)], &[rat_int(5)], 2, rat_int(2));
        let shells = shells_at_one(&p, 30, Precision::Double).unwrap();
        assert!(shells.iter().all(|&s| s >= 0.0));
    }

    #[test]
    fn log_growth_on_the_boundary() {
        // eps = 0: diagonal partial sums grow like the log of the shell count
        let p = params(&[rat_int(1), rat_int(1)], &[rat_int(2)], 1, rat_int(2));
        let shells = shells_at_one(&p, 80, Precision::Double).unwrap();
        let s = |hi: usize| -> f64 { shells[..=hi].iter().sum() };
        let d1 = s(40) - s(20);
        let d2 = s(80) - s(40);
        assert!(
            d2 / d1 > 0.6 && d2 / d1 < 1.4,
            "increment ratio {}",
            d2 / d1
        );
        assert!(!p.convergent_at_one());
    }

    #[test]
    fn extended_precision_matches_double() {
        let p = params(&[rat(3, 2), rat_int(1)], &[rat_int(5)], 2, rat_int(2));
        let d = hyper_at_one(&p, 40, 1e-12, Precision::Double).unwrap();
        let e = hyper_at_one(&p, 40, 1e-12, Precision::Extended).unwrap();
        assert!((d.value - e.value).abs() < 1e-12);
        assert!(e.value_exact.is_some());
    }

    #[test]
    fn term_routes_agree() {
        let p = params(&[rat(5, 3), rat_int(2)], &[rat(9, 2)], 3, rat(1, 2));
        for w in 0..=6u32 {
            for m in enumerate_partitions(w, 3) {
                let exact = p.term_coeff_exact(&m).unwrap();
                let fast: Rat = p.term_coeff(&m).unwrap();
                assert_eq!(exact, fast, "m = {m}");
            }
        }
    }

    /// Exact-coefficient route vs incremental floating route, including the
    /// Jack factor: relative agreement to 1e-12.
    #[test]
    fn exact_and_floating_terms_agree() {
        use crate::numeric::SeriesScalar;
        let p = params(&[rat(7, 2), rat_int(2)], &[rat(11, 3)], 2, rat_int(2));
        let t = [0.35f64, 0.6];
        let u = [t[0] * t[0], t[1] * t[1]];
        let ur = [
            <Rat as SeriesScalar>::from_f64(u[0]),
            <Rat as SeriesScalar>::from_f64(u[1]),
        ];
        for w in 0..=8u32 {
            for m in enumerate_partitions(w, 2) {
                let exact = p.term_coeff_exact(&m).unwrap()
                    * omega_eval::<Rat>(&m, &rat_int(2), &ur).unwrap();
                let float = p.term_coeff::<f64>(&m).unwrap()
                    * omega_eval::<f64>(&m, &rat_int(2), &u).unwrap();
                let exact_f = SeriesScalar::to_f64(&exact);
                let denom = exact_f.abs().max(1e-300);
                assert!(
                    (exact_f - float).abs() / denom < 1e-12,
                    "m = {m}: {exact_f} vs {float}"
                );
            }
        }
    }
}
