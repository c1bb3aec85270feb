//! Closed-form Fock and Bergman norm squares of the L-invariant polynomials
//! `p_n`, family by family. The base partition `m` indexes the invariant; the
//! induced partition `n` is its image in the K-type decomposition of the
//! ambient complex domain (doubled for type B, interlaced for type BC, doubled
//! plus a parity row for type D, the pair `(m, m)` in the diagonal case).
//!
//! Bergman norms come from dividing the Fock norm by the generalized
//! Pochhammer factor `(nu)_{n, a'/2}` of the ambient domain. The printed
//! split forms (with the doubling identities applied row by row) are kept as
//! a second, independently coded route; the two must agree exactly.

use crate::combinatorics::{gen_pochhammer, pi_m, q_param, rat_int, Partition};
use crate::domains::{DomainDescriptor, DomainKind};
use crate::{Error, Rat, Result};
use num::{One, Signed, Zero};

/// Which norm-formula family a label belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormFamily {
    BCxBC,
    A,
    B,
    BC,
    DEven,
    DOdd,
}

impl std::fmt::Display for NormFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            NormFamily::BCxBC => "BCxBC",
            NormFamily::A => "A",
            NormFamily::B => "B",
            NormFamily::BC => "BC",
            NormFamily::DEven => "D (even)",
            NormFamily::DOdd => "D (odd)",
        };
        write!(f, "{s}")
    }
}

/// An L-invariant polynomial, identified by its base partition and the
/// induced K-type partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantLabel {
    pub family: NormFamily,
    pub base: Partition,
    pub induced: Partition,
}

/// Build the label for `m` on the given domain. `parity` selects the even or
/// odd branch for type D and must be `None` elsewhere.
pub fn label_for(
    dom: &DomainDescriptor,
    m: &Partition,
    parity: Option<u8>,
) -> Result<InvariantLabel> {
    let r = dom.real.rank as usize;
    if m.len() > r {
        return Err(Error::PartitionTooLong {
            len: m.len(),
            rank: r,
        });
    }
    let family = match dom.kind {
        DomainKind::BCxBC => NormFamily::BCxBC,
        DomainKind::A => NormFamily::A,
        DomainKind::B1 => NormFamily::B,
        DomainKind::BC => NormFamily::BC,
        DomainKind::D1 => match parity.unwrap_or(0) {
            0 => NormFamily::DEven,
            _ => NormFamily::DOdd,
        },
        DomainKind::B2 | DomainKind::D2 => {
            return Err(Error::UnsupportedFamily {
                family: dom.label.clone(),
                what: "invariant norms (classification data only)".into(),
            })
        }
    };
    if parity.is_some() && dom.kind != DomainKind::D1 {
        return Err(Error::InvalidArgument(
            "parity applies to type D only".into(),
        ));
    }
    let induced = match family {
        NormFamily::BCxBC | NormFamily::A => m.clone(),
        NormFamily::B => m.doubled(),
        NormFamily::BC => m.doubled_interlaced(),
        NormFamily::DEven => m.doubled(),
        NormFamily::DOdd => m.doubled_plus_parity(r, 1)?,
    };
    Ok(InvariantLabel {
        family,
        base: m.clone(),
        induced,
    })
}

fn check_family(dom: &DomainDescriptor, label: &InvariantLabel) -> Result<()> {
    let ok = matches!(
        (dom.kind, label.family),
        (DomainKind::BCxBC, NormFamily::BCxBC)
            | (DomainKind::A, NormFamily::A)
            | (DomainKind::B1, NormFamily::B)
            | (DomainKind::BC, NormFamily::BC)
            | (DomainKind::D1, NormFamily::DEven)
            | (DomainKind::D1, NormFamily::DOdd)
    );
    if !ok {
        return Err(Error::FamilyMismatch {
            label: label.family.to_string(),
            domain: dom.label.clone(),
        });
    }
    Ok(())
}

/// `((r-1) a/2 + b + 1/2)`, the second Pochhammer base for types B and D
/// (`b = 0` for D).
fn type_b_constant(dom: &DomainDescriptor) -> Rat {
    &dom.real.a / rat_int(2) * rat_int(i64::from(dom.real.rank) - 1)
        + dom.real.b()
        + crate::combinatorics::rat(1, 2)
}

/// `((r-1) a/2 + (iota + 2b)/2)`, the second Pochhammer base for type BC.
fn type_bc_constant(dom: &DomainDescriptor) -> Rat {
    let iota = &dom.real.iota_minus_1 + Rat::one();
    &dom.real.a / rat_int(2) * rat_int(i64::from(dom.real.rank) - 1)
        + (iota + &dom.real.two_b) / rat_int(2)
}

/// Fock-Fischer norm square of the invariant polynomial.
pub fn fock_norm(dom: &DomainDescriptor, label: &InvariantLabel) -> Result<Rat> {
    check_family(dom, label)?;
    let m = &label.base;
    let r = dom.real.rank;
    let a = &dom.real.a;
    let q = q_param(r, a);
    let half_a = a / rat_int(2);
    let qm = gen_pochhammer(&q, m, &half_a);
    let pim = pi_m(m, r, a)?;
    let two_pow = num::pow(rat_int(2), 2 * m.weight() as usize);
    let val = match label.family {
        NormFamily::BCxBC => {
            let dr = gen_pochhammer(&dom.dim_over_rank, m, &half_a);
            dr * qm / pim
        }
        NormFamily::A => qm / pim,
        NormFamily::B => {
            let c = gen_pochhammer(&type_b_constant(dom), m, &half_a);
            two_pow * qm * c / pim
        }
        NormFamily::BC => {
            let c = gen_pochhammer(&type_bc_constant(dom), m, &half_a);
            qm * c / pim
        }
        NormFamily::DEven => {
            let c = gen_pochhammer(&type_b_constant(dom), m, &half_a);
            two_pow * qm * c / pim
        }
        NormFamily::DOdd => {
            let c_d = type_b_constant(dom);
            let mut row_prod = Rat::one();
            for j in 0..r {
                row_prod *= &c_d - &half_a * rat_int(i64::from(j));
            }
            let c = gen_pochhammer(&(&c_d + Rat::one()), m, &half_a);
            num::pow(rat_int(2), r as usize) * row_prod * two_pow * qm * c / pim
        }
    };
    debug_assert!(val.is_positive());
    Ok(val)
}

/// `(nu)_{n, a'/2}` for the induced partition, with the diagonal family
/// squaring (both tensor factors carry the same K-type).
pub fn nu_pochhammer(dom: &DomainDescriptor, label: &InvariantLabel, nu: &Rat) -> Rat {
    let half_ap = &dom.complex.a / rat_int(2);
    let p = gen_pochhammer(nu, &label.induced, &half_ap);
    match label.family {
        NormFamily::BCxBC => &p * &p,
        _ => p,
    }
}

/// Bergman-space norm square at weight `nu`: `fock_norm / (nu)_{n, a'/2}`.
pub fn bergman_norm(dom: &DomainDescriptor, label: &InvariantLabel, nu: &Rat) -> Result<Rat> {
    let fock = fock_norm(dom, label)?;
    let denom = nu_pochhammer(dom, label, nu);
    if denom.is_zero() {
        return Err(Error::NuKillsComponent { nu: nu.to_string() });
    }
    Ok(fock / denom)
}

/// Bergman norm via the printed split formulas, in which the ambient
/// Pochhammer has been rewritten through the row-doubling identities. Kept
/// deliberately separate from [`bergman_norm`]; tests require exact agreement.
pub fn bergman_norm_printed(
    dom: &DomainDescriptor,
    label: &InvariantLabel,
    nu: &Rat,
) -> Result<Rat> {
    check_family(dom, label)?;
    let m = &label.base;
    let r = dom.real.rank;
    let a = &dom.real.a;
    let half_a = a / rat_int(2);
    let q = q_param(r, a);
    let qm = gen_pochhammer(&q, m, &half_a);
    let pim = pi_m(m, r, a)?;
    let two = rat_int(2);
    let half = crate::combinatorics::rat(1, 2);
    let val = match label.family {
        NormFamily::BCxBC => {
            // (d/r)_m^2 / ((nu)_m^2 d(m)) with d(m) = (d/r)_m pi_m / (q)_m
            let dr = gen_pochhammer(&dom.dim_over_rank, m, &half_a);
            let nm = gen_pochhammer(nu, m, &half_a);
            if nm.is_zero() {
                return Err(Error::NuKillsComponent { nu: nu.to_string() });
            }
            let dim = &dr * &pim / &qm;
            &dr * &dr / (&nm * &nm * dim)
        }
        NormFamily::A => {
            let nm = gen_pochhammer(nu, m, &half_a);
            if nm.is_zero() {
                return Err(Error::NuKillsComponent { nu: nu.to_string() });
            }
            qm / (nm * pim)
        }
        NormFamily::B | NormFamily::DEven => {
            let c = gen_pochhammer(&type_b_constant(dom), m, &half_a);
            let n1 = gen_pochhammer(&(nu / &two), m, &half_a);
            let n2 = gen_pochhammer(&((nu + Rat::one()) / &two), m, &half_a);
            if n1.is_zero() || n2.is_zero() {
                return Err(Error::NuKillsComponent { nu: nu.to_string() });
            }
            qm * c / (pim * n1 * n2)
        }
        NormFamily::BC => {
            let c = gen_pochhammer(&type_bc_constant(dom), m, &half_a);
            let half_ap = &dom.complex.a / &two;
            let n1 = gen_pochhammer(nu, m, &half_a);
            let n2 = gen_pochhammer(&(nu - half_ap), m, &half_a);
            if n1.is_zero() || n2.is_zero() {
                return Err(Error::NuKillsComponent { nu: nu.to_string() });
            }
            qm * c / (pim * n1 * n2)
        }
        NormFamily::DOdd => {
            let c_d = type_b_constant(dom);
            let mut rows = Rat::one();
            for j in 0..r {
                let shift = &half_a * rat_int(i64::from(j));
                let den = nu / &two - &shift;
                if den.is_zero() {
                    return Err(Error::NuKillsComponent { nu: nu.to_string() });
                }
                rows *= (&c_d - &shift) / den;
            }
            let c = gen_pochhammer(&(&c_d + Rat::one()), m, &half_a);
            let n1 = gen_pochhammer(&(nu / &two + &half), m, &half_a);
            let n2 = gen_pochhammer(&(nu / &two + Rat::one()), m, &half_a);
            if n1.is_zero() || n2.is_zero() {
                return Err(Error::NuKillsComponent { nu: nu.to_string() });
            }
            rows * qm * c / (pim * n1 * n2)
        }
    };
    Ok(val)
}

/// `(sigma)_{n, a'/2}` on the induced partition: the numerator each radial
/// expansion coefficient carries, squared for the diagonal family.
pub fn sigma_pochhammer(dom: &DomainDescriptor, label: &InvariantLabel, sigma: &Rat) -> Rat {
    nu_pochhammer(dom, label, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_partitions, rat};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn empty_partition_has_unit_norms() {
        let doms = [
            DomainDescriptor::su(4, 2).unwrap(),
            DomainDescriptor::type_a(2, 2).unwrap(),
            DomainDescriptor::so(6, 2).unwrap(),
            DomainDescriptor::sp(4, 2).unwrap(),
            DomainDescriptor::d1(2).unwrap(),
        ];
        for dom in &doms {
            let label = label_for(dom, &Partition::empty(), None).unwrap();
            assert_eq!(fock_norm(dom, &label).unwrap(), Rat::one(), "{}", dom.label);
            assert_eq!(bergman_norm(dom, &label, &rat(7, 3)).unwrap(), Rat::one());
        }
        // odd type D at the empty base still carries the row product
        let d = DomainDescriptor::d1(2).unwrap();
        let odd = label_for(&d, &Partition::empty(), Some(1)).unwrap();
        assert_eq!(odd.induced, p(&[1, 1]));
        assert!(fock_norm(&d, &odd).unwrap().is_positive());
    }

    #[test]
    fn type_a_linear_example() {
        // r = 2, a = 2: (q)_(1) / pi_(1) = 2/4 = 1/2
        let dom = DomainDescriptor::type_a(2, 2).unwrap();
        let label = label_for(&dom, &p(&[1]), None).unwrap();
        assert_eq!(fock_norm(&dom, &label).unwrap(), rat(1, 2));
    }

    #[test]
    fn bcxbc_fock_equals_dimension_route() {
        // (d/r)_m (q)_m / pi_m agrees with (d/r)_m^2 / d(m)
        let dom = DomainDescriptor::su(5, 3).unwrap();
        let half = rat(1, 2);
        let _ = half;
        for w in 0..=4u32 {
            for m in enumerate_partitions(w, 3) {
                let label = label_for(&dom, &m, None).unwrap();
                let fock = fock_norm(&dom, &label).unwrap();
                let dr = gen_pochhammer(&dom.dim_over_rank, &m, &Rat::one());
                let dim = crate::jack::dim_component(&dom, &m).unwrap();
                assert_eq!(fock, &dr * &dr / dim, "m = {m}");
            }
        }
    }

    #[test]
    fn bergman_routes_agree_exactly() {
        let doms = [
            DomainDescriptor::su(5, 2).unwrap(),
            DomainDescriptor::type_a(3, 2).unwrap(),
            DomainDescriptor::so(7, 2).unwrap(),
            DomainDescriptor::sp(5, 2).unwrap(),
            DomainDescriptor::d1(3).unwrap(),
        ];
        let nus = [rat(7, 2), rat(13, 3), rat_int(6), rat(-9, 4)];
        for dom in &doms {
            let parities: &[Option<u8>] = if dom.kind == DomainKind::D1 {
                &[Some(0), Some(1)]
            } else {
                &[None]
            };
            for parity in parities {
                for w in 0..=4u32 {
                    for m in enumerate_partitions(w, dom.real.rank as usize) {
                        let label = label_for(dom, &m, *parity).unwrap();
                        for nu in &nus {
                            let direct = bergman_norm(dom, &label, nu);
                            let printed = bergman_norm_printed(dom, &label, nu);
                            match (direct, printed) {
                                (Ok(x), Ok(y)) => assert_eq!(x, y, "{} m={m} nu={nu}", dom.label),
                                (Err(_), Err(_)) => {}
                                (a, b) => {
                                    panic!("route disagreement {}: {a:?} vs {b:?}", dom.label)
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fock_positivity() {
        let doms = [
            DomainDescriptor::su(5, 2).unwrap(),
            DomainDescriptor::so(8, 3).unwrap(),
            DomainDescriptor::sp(5, 3).unwrap(),
            DomainDescriptor::d1(3).unwrap(),
            DomainDescriptor::type_a(3, 4).unwrap(),
        ];
        for dom in &doms {
            for w in 0..=4u32 {
                for m in enumerate_partitions(w, dom.real.rank as usize) {
                    let label = label_for(dom, &m, None).unwrap();
                    assert!(fock_norm(dom, &label).unwrap().is_positive());
                }
            }
        }
    }

    #[test]
    fn nu_on_lattice_is_rejected() {
        let dom = DomainDescriptor::su(5, 2).unwrap();
        let label = label_for(&dom, &p(&[2, 1]), None).unwrap();
        // nu = 1 is the second singular point; (1)_{(2,1),1} = 0
        assert!(matches!(
            bergman_norm(&dom, &label, &Rat::one()),
            Err(Error::NuKillsComponent { .. })
        ));
    }

    #[test]
    fn family_mismatch_rejected() {
        let su = DomainDescriptor::su(5, 2).unwrap();
        let so = DomainDescriptor::so(5, 2).unwrap();
        let label = label_for(&so, &p(&[1]), None).unwrap();
        assert!(matches!(
            fock_norm(&su, &label),
            Err(Error::FamilyMismatch { .. })
        ));
        let b2 = DomainDescriptor::b2(2).unwrap();
        assert!(matches!(
            label_for(&b2, &p(&[1]), None),
            Err(Error::UnsupportedFamily { .. })
        ));
    }
}
