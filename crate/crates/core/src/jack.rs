//! Exact Jack polynomials in the monomial symmetric basis.
//!
//! The table for a whole weight shell is computed at once: the degree-two
//! eigenoperator
//!
//! ```text
//! D(alpha) = (alpha/2) sum_i x_i^2 d_i^2  +  sum_{i != j} x_i^2/(x_i - x_j) d_i
//! ```
//!
//! is realized as an exact matrix on the monomial basis of the shell, which is
//! triangular with respect to dominance order with distinct diagonal entries
//! along comparable pairs; each `J_m` is then the triangular eigenvector with
//! leading coefficient `h_*(m)` (so the coefficient on `m_{1^n}` is `n!`).
//! Shells are memoized per `(rank, alpha, weight)` behind a shared cache.
//!
//! The Sekiguchi determinant operator is built here too, as an independent
//! route used by the oracle tests: same basis, different operator.

use crate::combinatorics::{
    enumerate_partitions, gen_pochhammer, hook_products, pi_m, q_param, rat_int, Partition,
};
use crate::domains::{DomainDescriptor, DomainKind};
use crate::mpoly::MPoly;
use crate::numeric::SeriesScalar;
use crate::{Error, Rat, Result};
use num::{BigInt, One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

/// Homogeneous symmetric polynomial, stored as exact coefficients over the
/// monomial symmetric basis `m_mu` at a fixed rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPoly {
    rank: usize,
    degree: u32,
    coeffs: BTreeMap<Partition, Rat>,
    ones: Rat,
}

impl SymmetricPoly {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient on `m_mu` (zero if absent; zero coefficients are not stored).
    pub fn coeff(&self, mu: &Partition) -> Rat {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterate `(mu, coefficient)` pairs in increasing lexicographic order of
    /// `mu`; reverse for the largest-first convention.
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.coeffs.iter()
    }

    /// Evaluate at a point, in any scalar type (exact when `T` is rational).
    pub fn eval<T: SeriesScalar>(&self, t: &[T]) -> T {
        debug_assert_eq!(t.len(), self.rank);
        let mut acc = T::zero();
        for (mu, c) in &self.coeffs {
            let mut msum = T::zero();
            for perm in distinct_permutations(mu, self.rank) {
                let mut prod = T::one();
                for (i, &e) in perm.iter().enumerate() {
                    if e > 0 {
                        prod = prod * pow_u32(&t[i], e);
                    }
                }
                msum = msum + prod;
            }
            acc = acc + T::from_rat(c) * msum;
        }
        acc
    }

    /// Exact value at `(1,...,1)` (precomputed at table construction): each
    /// `m_mu(1^r)` is the number of distinct permutations of `mu` padded with
    /// zeros to the rank.
    pub fn eval_ones(&self) -> Rat {
        self.ones.clone()
    }
}

fn pow_u32<T: SeriesScalar>(base: &T, mut e: u32) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Distinct permutations of `mu` padded with zeros to length `rank`.
pub(crate) fn distinct_permutations(mu: &Partition, rank: usize) -> Vec<Vec<u32>> {
    let mut v: Vec<u32> = (0..rank).map(|i| mu.part(i)).collect();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn count_permutations(mu: &Partition, rank: usize) -> BigInt {
    let mut mult: HashMap<u32, u64> = HashMap::new();
    for i in 0..rank {
        *mult.entry(mu.part(i)).or_insert(0) += 1;
    }
    let mut num = BigInt::one();
    for k in 2..=(rank as u64) {
        num *= BigInt::from(k);
    }
    let mut den = BigInt::one();
    for (_, c) in mult {
        for k in 2..=c {
            den *= BigInt::from(k);
        }
    }
    num / den
}

/// Full monomial expansion of `m_mu` at the given rank.
fn msym_poly(mu: &Partition, rank: usize) -> MPoly {
    let mut p = MPoly::zero(rank);
    for e in distinct_permutations(mu, rank) {
        p.add_term(e, Rat::one());
    }
    p
}

/// Read the monomial-symmetric coordinates of a symmetric polynomial: the
/// coefficient on `m_mu` is the coefficient of the sorted-descending exponent.
fn collect_msym(p: &MPoly) -> BTreeMap<Partition, Rat> {
    let mut out = BTreeMap::new();
    for (e, c) in p.terms() {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            let mu = Partition::new(e.clone()).expect("sorted exponent");
            out.insert(mu, c.clone());
        }
    }
    out
}

/// Apply `D(alpha)` to a symmetric polynomial (full monomial expansion).
fn lb_apply(f: &MPoly, alpha: &Rat) -> MPoly {
    let r = f.rank();
    let mut out = MPoly::zero(r);
    for i in 0..r {
        out = out.add(&f.partial(i).partial(i).mul_var_pow(i, 2));
    }
    out = out.scale(&(alpha / rat_int(2)));
    for i in 0..r {
        for j in (i + 1)..r {
            let g = f
                .partial(i)
                .mul_var_pow(i, 2)
                .sub(&f.partial(j).mul_var_pow(j, 2));
            let q = g
                .div_linear(i, j, 1)
                .expect("antisymmetric difference is divisible");
            out = out.add(&q);
        }
    }
    out
}

/// Exact matrix of an operator on the monomial basis of a weight shell:
/// column `c` holds the expansion of `op(m_{parts[c]})`. Partitions are in
/// reverse-lexicographic (largest-first) order, a linear extension of
/// dominance, so triangular operators have zero entries above the diagonal.
fn operator_matrix<F>(rank: usize, weight: u32, op: F) -> Result<(Vec<Partition>, Vec<Vec<Rat>>)>
where
    F: Fn(&MPoly) -> Result<MPoly>,
{
    let parts = enumerate_partitions(weight, rank);
    let n = parts.len();
    let index: HashMap<&Partition, usize> = parts.iter().zip(0..).collect();
    let mut mat = vec![vec![Rat::zero(); n]; n];
    for (c, lam) in parts.iter().enumerate() {
        let image = op(&msym_poly(lam, rank))?;
        for (mu, coeff) in collect_msym(&image) {
            let row = *index
                .get(&mu)
                .unwrap_or_else(|| panic!("operator left the weight-{weight} shell at {mu}"));
            mat[row][c] = coeff;
        }
    }
    Ok((parts, mat))
}

/// Solve for the eigenvector of a dominance-triangular matrix sitting in
/// column `col`, normalized so its leading entry is `leading`. The diagonal
/// entry at `col` is the eigenvalue; a zero gap against a later diagonal
/// entry that actually couples is an error (it cannot happen for the
/// operators used here at positive parameter).
pub(crate) fn triangular_eigenvector(
    parts: &[Partition],
    mat: &[Vec<Rat>],
    col: usize,
    leading: Rat,
) -> Result<Vec<Rat>> {
    let n = parts.len();
    let e_lam = mat[col][col].clone();
    let mut v = vec![Rat::zero(); n];
    v[col] = leading;
    for row in (col + 1)..n {
        let mut s = Rat::zero();
        for (k, vk) in v.iter().enumerate().take(row).skip(col) {
            if !vk.is_zero() && !mat[row][k].is_zero() {
                s += &mat[row][k] * vk;
            }
        }
        if s.is_zero() {
            continue;
        }
        let gap = &e_lam - &mat[row][row];
        if gap.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "eigenvalue collision between {} and {}",
                parts[col], parts[row]
            )));
        }
        v[row] = s / gap;
    }
    Ok(v)
}

fn compute_shell(rank: usize, alpha: &Rat, weight: u32) -> Result<Arc<ShellMap>> {
    let (parts, mat) = operator_matrix(rank, weight, |f| Ok(lb_apply(f, alpha)))?;
    if cfg!(debug_assertions) {
        for (c, col_part) in parts.iter().enumerate() {
            for (row, entry) in mat.iter().enumerate().take(c) {
                debug_assert!(
                    entry[c].is_zero(),
                    "eigenoperator not dominance-triangular at {col_part}/{}",
                    parts[row]
                );
            }
        }
    }
    let mut shell = BTreeMap::new();
    for (c, lam) in parts.iter().enumerate() {
        let v = triangular_eigenvector(&parts, &mat, c, hook_products(lam, alpha).0)?;
        let coeffs: BTreeMap<Partition, Rat> = parts
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c))
            .collect();
        let mut ones = Rat::zero();
        for (mu, c) in &coeffs {
            ones += c * Rat::from_integer(count_permutations(mu, rank));
        }
        shell.insert(
            lam.clone(),
            SymmetricPoly {
                rank,
                degree: weight,
                coeffs,
                ones,
            },
        );
    }
    Ok(Arc::new(shell))
}

/// One weight shell: every Jack table of the given rank, parameter and
/// degree, keyed by partition.
pub type ShellMap = BTreeMap<Partition, SymmetricPoly>;

/// Shared, content-addressed cache of Jack weight shells. Writes are
/// idempotent: two threads computing the same shell insert equal values.
pub struct JackCache {
    inner: RwLock<HashMap<(usize, String, u32), Arc<ShellMap>>>,
}

impl JackCache {
    pub fn new() -> Self {
        JackCache {
            inner: RwLock::new(HashMap::new()),
        }
    }

    pub fn shell(&self, rank: usize, alpha: &Rat, weight: u32) -> Result<Arc<ShellMap>> {
        let key = (rank, alpha.to_string(), weight);
        if let Some(hit) = self.inner.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let shell = compute_shell(rank, alpha, weight)?;
        let mut guard = self.inner.write().expect("cache lock");
        Ok(guard.entry(key).or_insert(shell).clone())
    }
}

impl Default for JackCache {
    fn default() -> Self {
        Self::new()
    }
}

fn global_cache() -> &'static JackCache {
    static CACHE: OnceLock<JackCache> = OnceLock::new();
    CACHE.get_or_init(JackCache::new)
}

/// The Jack polynomial `J_m^{(alpha)}` in `r` variables, in the monomial
/// basis with exact coefficients. Normalized so the leading coefficient (on
/// `m_m`) is the lower hook product `h_*(m)`; equivalently the coefficient on
/// `m_{1^{|m|}}` is `|m|!` whenever that monomial fits in `r` variables.
///
/// Rejects `len(m) > r`, where the polynomial vanishes identically.
pub fn jack_j(m: &Partition, alpha: &Rat, r: usize) -> Result<SymmetricPoly> {
    if !alpha.is_positive() {
        return Err(Error::NonPositiveAlpha(alpha.to_string()));
    }
    if m.len() > r {
        return Err(Error::PartitionTooLong {
            len: m.len(),
            rank: r,
        });
    }
    let shell = global_cache().shell(r, alpha, m.weight())?;
    Ok(shell.get(m).expect("partition in its own shell").clone())
}

/// Normalized Jack evaluation `Omega_m(t) = J_m^{(2/a)}(t) / J_m^{(2/a)}(1^r)`,
/// exact when the inputs are rational.
///
/// The normalization is divided through in exact arithmetic before any
/// conversion to `T`: the raw `J` coefficients grow factorially with the
/// weight and would overflow floating accumulators long before the
/// normalized coefficients (which stay polynomially bounded) do.
pub fn omega_eval<T: SeriesScalar>(m: &Partition, a: &Rat, t: &[T]) -> Result<T> {
    if !a.is_positive() {
        return Err(Error::NonPositiveMultiplicity(a.to_string()));
    }
    if m.len() > t.len() {
        return Err(Error::PartitionTooLong {
            len: m.len(),
            rank: t.len(),
        });
    }
    let alpha = rat_int(2) / a;
    let shell = global_cache().shell(t.len(), &alpha, m.weight())?;
    let table = shell.get(m).expect("partition in its own shell");
    let ones = table.eval_ones();
    if ones.is_zero() {
        return Err(Error::InvalidArgument(format!("J_{m}(1^{}) = 0", t.len())));
    }
    let mut acc = T::zero();
    for (mu, c) in table.coeffs() {
        let normalized = c / &ones;
        let mut msum = T::zero();
        for perm in distinct_permutations(mu, t.len()) {
            let mut prod = T::one();
            for (i, &e) in perm.iter().enumerate() {
                if e > 0 {
                    prod = prod * pow_u32(&t[i], e);
                }
            }
            msum = msum + prod;
        }
        acc = acc + T::from_rat(&normalized) * msum;
    }
    Ok(acc)
}

/// Closed form for `J_m^{(2/a)}(1^r) = (r a/2)_{m, a/2} (a/2)^{-|m|}`.
pub fn jack_norm_one(m: &Partition, r: u32, a: &Rat) -> Result<Rat> {
    if m.len() > r as usize {
        return Err(Error::PartitionTooLong {
            len: m.len(),
            rank: r as usize,
        });
    }
    let beta = a / rat_int(2);
    let base = &beta * rat_int(i64::from(r));
    let poch = gen_pochhammer(&base, m, &beta);
    let scale = num::pow(beta, m.weight() as usize);
    Ok(poch / scale)
}

/// Dimension of the K-type component indexed by `m` on a complex domain:
/// `d(m) = (d/r)_m pi_m / (q)_m` with the complex-domain parameters. The
/// value must be a positive integer; anything else flags an inconsistent
/// descriptor.
pub fn dim_component(dom: &DomainDescriptor, m: &Partition) -> Result<Rat> {
    if dom.kind != DomainKind::BCxBC {
        return Err(Error::UnsupportedFamily {
            family: dom.label.clone(),
            what: "K-type dimensions (complex-domain descriptors only)".into(),
        });
    }
    let r = dom.complex.rank;
    if m.len() > r as usize {
        return Err(Error::PartitionTooLong {
            len: m.len(),
            rank: r as usize,
        });
    }
    let a = &dom.complex.a;
    let beta = a / rat_int(2);
    let poch = gen_pochhammer(&dom.dim_over_rank, m, &beta);
    let q = q_param(r, a);
    let qm = gen_pochhammer(&q, m, &beta);
    let pim = pi_m(m, r, a)?;
    let d = poch * pim / qm;
    if !d.is_integer() || !d.is_positive() {
        return Err(Error::DimensionNotIntegral {
            value: d.to_string(),
            partition: m.to_string(),
        });
    }
    Ok(d)
}

/// Exact matrix of the Sekiguchi determinant operator
///
/// ```text
/// S(u) = a_delta^{-1} det[ x_i^{r-j} (x_i d_i + (r-j)/alpha + u) ]_{i,j}
/// ```
///
/// on the monomial basis of a weight shell. Used as the independent oracle
/// route: the Jack vectors must be eigenvectors with distinct eigenvalues.
pub fn sekiguchi_matrix(
    rank: usize,
    alpha: &Rat,
    weight: u32,
    u: &Rat,
) -> Result<(Vec<Partition>, Vec<Vec<Rat>>)> {
    operator_matrix(rank, weight, |f| sekiguchi_apply(f, alpha, u))
}

fn sekiguchi_apply(f: &MPoly, alpha: &Rat, u: &Rat) -> Result<MPoly> {
    let r = f.rank();
    let mut total = MPoly::zero(r);
    let mut perm: Vec<usize> = (0..r).collect();
    let mut sign = 1i8;
    loop {
        // product over rows i of x_i^{r-1-perm[i]} (x_i d_i + (r-1-perm[i])/alpha + u)
        let mut g = f.clone();
        for (i, &col) in perm.iter().enumerate() {
            let shift = (r - 1 - col) as u32;
            let c = rat_int(i64::from(shift)) / alpha + u;
            g = g
                .partial(i)
                .mul_var_pow(i, 1)
                .add(&g.scale(&c))
                .mul_var_pow(i, shift);
        }
        total = if sign > 0 {
            total.add(&g)
        } else {
            total.sub(&g)
        };
        if !next_permutation_usize(&mut perm, &mut sign) {
            break;
        }
    }
    total.div_vandermonde()
}

fn next_permutation_usize(v: &mut [usize], sign: &mut i8) -> bool {
    // lexicographic successor; each step is a transposition followed by a
    // suffix reversal, so track parity explicitly
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    *sign = -*sign;
    let suffix = &mut v[i..];
    let swaps = suffix.len() / 2;
    suffix.reverse();
    if swaps % 2 == 1 {
        *sign = -*sign;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn degree_one_is_power_sum() {
        for r in 1..=4 {
            let j = jack_j(&p(&[1]), &rat(7, 3), r).unwrap();
            assert_eq!(j.coeff(&p(&[1])), Rat::one());
            assert_eq!(j.coeffs().count(), 1);
        }
    }

    #[test]
    fn known_small_tables() {
        // J_(2) = (1+alpha) m_2 + 2 m_11, J_(1,1) = 2 m_11
        let alpha = rat(5, 3);
        let j2 = jack_j(&p(&[2]), &alpha, 2).unwrap();
        assert_eq!(j2.coeff(&p(&[2])), Rat::one() + &alpha);
        assert_eq!(j2.coeff(&p(&[1, 1])), rat_int(2));
        let j11 = jack_j(&p(&[1, 1]), &alpha, 2).unwrap();
        assert_eq!(j11.coeff(&p(&[1, 1])), rat_int(2));
        assert_eq!(j11.coeff(&p(&[2])), Rat::zero());
    }

    #[test]
    fn lowest_monomial_coefficient_is_factorial() {
        for w in 1..=4u32 {
            for m in enumerate_partitions(w, w as usize) {
                let j = jack_j(&m, &rat(3, 2), w as usize).unwrap();
                let mut fact = Rat::one();
                for k in 2..=w {
                    fact *= rat_int(i64::from(k));
                }
                let ones = Partition::new(vec![1; w as usize]).unwrap();
                assert_eq!(j.coeff(&ones), fact, "m = {m}");
            }
        }
    }

    #[test]
    fn rejects_long_partitions() {
        assert!(matches!(
            jack_j(&p(&[1, 1, 1]), &rat_int(2), 2),
            Err(Error::PartitionTooLong { .. })
        ));
        assert!(jack_j(&p(&[2]), &rat_int(-1), 2).is_err());
    }

    #[test]
    fn triangular_in_dominance() {
        let alpha = rat_int(2);
        for m in enumerate_partitions(5, 3) {
            let j = jack_j(&m, &alpha, 3).unwrap();
            for (mu, _) in j.coeffs() {
                assert!(m.dominates(mu), "J_{m} has coefficient on {mu}");
            }
        }
    }

    #[test]
    fn knop_sahi_positivity_alpha_two() {
        for w in 0..=4u32 {
            for m in enumerate_partitions(w, 3) {
                let j = jack_j(&m, &rat_int(2), 3).unwrap();
                for (mu, c) in j.coeffs() {
                    assert!(c.is_positive(), "J_{m} coefficient on {mu} is {c}");
                }
            }
        }
    }

    #[test]
    fn omega_normalization_and_linear_case() {
        let t = vec![rat(1, 3), rat(1, 7), rat(2, 5)];
        let v: Rat = omega_eval(&p(&[1]), &rat_int(2), &t).unwrap();
        let mean = (&t[0] + &t[1] + &t[2]) / rat_int(3);
        assert_eq!(v, mean);
        let ones = vec![Rat::one(); 3];
        let v1: Rat = omega_eval(&p(&[2, 1]), &rat(1, 2), &ones).unwrap();
        assert_eq!(v1, Rat::one());
        let zeros = vec![Rat::zero(); 3];
        let v0: Rat = omega_eval(&p(&[2, 1]), &rat(1, 2), &zeros).unwrap();
        assert_eq!(v0, Rat::zero());
    }

    #[test]
    fn omega_is_symmetric_under_permutations() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(23);
        let m = p(&[3, 1]);
        let a = rat_int(2);
        let base = vec![rat(1, 3), rat(2, 7), rat(-1, 5), rat(4, 9)];
        let reference: Rat = omega_eval(&m, &a, &base).unwrap();
        for _ in 0..10 {
            let mut t = base.clone();
            t.shuffle(&mut rng);
            let v: Rat = omega_eval(&m, &a, &t).unwrap();
            assert_eq!(v, reference);
        }
    }

    #[test]
    fn norm_one_closed_form_matches_table() {
        for a in [rat_int(1), rat_int(2), rat_int(4), rat(1, 2)] {
            let alpha = rat_int(2) / &a;
            for r in 1..=3u32 {
                for w in 0..=4u32 {
                    for m in enumerate_partitions(w, r as usize) {
                        let table = jack_j(&m, &alpha, r as usize).unwrap();
                        assert_eq!(
                            table.eval_ones(),
                            jack_norm_one(&m, r, &a).unwrap(),
                            "m={m} r={r} a={a}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn schur_specialization_alpha_one() {
        // J_m^{(1)} = H(m) s_m with H the ordinary hook product; the Schur
        // polynomial comes from the bialternant ratio, an independent route.
        let r = 3;
        for w in 1..=4u32 {
            for m in enumerate_partitions(w, r) {
                let j = jack_j(&m, &Rat::one(), r).unwrap();
                let (h, h2) = hook_products(&m, &Rat::one());
                assert_eq!(h, h2);
                let schur = schur_bialternant(&m, r);
                for (mu, c) in schur.terms_msym() {
                    assert_eq!(j.coeff(&mu), &h * c, "m={m} mu={mu}");
                }
                assert_eq!(j.coeffs().count(), schur.terms_msym().len());
            }
        }
    }

    struct SchurTable(BTreeMap<Partition, Rat>);

    impl SchurTable {
        fn terms_msym(&self) -> Vec<(Partition, Rat)> {
            self.0.iter().map(|(p, c)| (p.clone(), c.clone())).collect()
        }
    }

    fn schur_bialternant(m: &Partition, r: usize) -> SchurTable {
        // a_{m+delta} / a_delta with delta = (r-1, ..., 1, 0)
        let mut num = MPoly::zero(r);
        let mut perm: Vec<usize> = (0..r).collect();
        let mut sign = 1i8;
        loop {
            let mut e = vec![0u32; r];
            for (i, &pos) in perm.iter().enumerate() {
                e[i] = m.part(pos) + (r - 1 - pos) as u32;
            }
            num.add_term(e, if sign > 0 { Rat::one() } else { -Rat::one() });
            if !next_permutation_usize(&mut perm, &mut sign) {
                break;
            }
        }
        let q = num.div_vandermonde().unwrap();
        SchurTable(collect_msym(&q))
    }

    #[test]
    fn cache_is_safe_for_concurrent_identical_inserts() {
        let cache = std::sync::Arc::new(JackCache::new());
        let mut handles = Vec::new();
        for _ in 0..8 {
            let cache = cache.clone();
            handles.push(std::thread::spawn(move || {
                let shell = cache.shell(3, &rat(2, 3), 4).unwrap();
                shell.len()
            }));
        }
        for h in handles {
            assert_eq!(h.join().unwrap(), enumerate_partitions(4, 3).len());
        }
    }

    #[test]
    fn sekiguchi_eigenvectors() {
        let alpha = rat(2, 3);
        let u = rat(7, 2);
        let r = 2;
        for w in 1..=4u32 {
            let (parts, mat) = sekiguchi_matrix(r, &alpha, w, &u).unwrap();
            let mut eigs = Vec::new();
            for lam in &parts {
                let j = jack_j(lam, &alpha, r).unwrap();
                let v: Vec<Rat> = parts.iter().map(|mu| j.coeff(mu)).collect();
                let lead = parts.iter().position(|q| q == lam).unwrap();
                let mut image = vec![Rat::zero(); parts.len()];
                for (row, image_row) in image.iter_mut().enumerate() {
                    for (k, vk) in v.iter().enumerate() {
                        *image_row += &mat[row][k] * vk;
                    }
                }
                let eig = &image[lead] / &v[lead];
                for (row, val) in image.iter().enumerate() {
                    assert_eq!(val, &(&eig * &v[row]), "lambda={lam} row={}", parts[row]);
                }
                // classical eigenvalue: prod_i (lambda_i + (r-i)/alpha + u)
                let mut expect = Rat::one();
                for i in 0..r {
                    expect *=
                        rat_int(i64::from(lam.part(i))) + rat_int((r - 1 - i) as i64) / &alpha + &u;
                }
                assert_eq!(eig, expect);
                eigs.push(eig);
            }
            for i in 0..eigs.len() {
                for j in (i + 1)..eigs.len() {
                    assert_ne!(eigs[i], eigs[j]);
                }
            }
        }
    }
}
