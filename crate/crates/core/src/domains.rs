//! Classification data for irreducible real bounded symmetric domains
//! `X = H/L` sitting inside a Hermitian domain `D = G/K`: the real and
//! complex multiplicity quadruples, and every derived constant the series
//! formulas consume (genus, `d/r`, `rho(xi)`, the Wallach set).
//!
//! Families and their quadruples `(r, iota-1, a, 2b)` / complex `(r', a', 2b')`:
//!
//! | kind   | realization                                  | real            | complex          |
//! |--------|----------------------------------------------|-----------------|------------------|
//! | BCxBC  | complex domain as diagonal in `D x conj(D)`  | `(r,1,a,2b)`    | `(r,a,2b)`       |
//! | A      | tube-type real forms (symmetric cones)       | `(r,0,a,0)`     | `(r,a,0)`        |
//! | B1     | `SO0(l,r)` in `SU(l,r)`                      | `(r,0,1,l-r)`   | `(r,2,2(l-r))`   |
//! | B2     | `SO(2r+1,C)` in `SO*(2(2r+1))`               | `(r,1,2,2)`     | `(r,4,4)`        |
//! | BC     | `Sp(l,r)` in `SU(2l,2r)`                     | `(r,3,4,4(l-r))`| `(2r,2,4(l-r))`  |
//! | D1     | `SO(r,r)` in `SU(r,r)`                       | `(r,0,1,0)`     | `(r,2,0)`        |
//! | D2     | `SU*(8)` in `E7(-25)`                        | `(3,0,4,0)`     | `(3,8,0)`        |
//!
//! The B1 row needs a word: printed tables for this family disagree between
//! sources on the short-root multiplicity; `2b = l - r` is the unique choice
//! under which the closed-form convergence bounds for `SO0(l,r)` come out of
//! the generic criterion, so that is what we use.

use crate::combinatorics::rat_int;
use crate::{Error, Rat, Result};
use num::{One, Signed, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DomainKind {
    BCxBC,
    A,
    B1,
    B2,
    BC,
    D1,
    D2,
}

impl std::fmt::Display for DomainKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DomainKind::BCxBC => "BCxBC",
            DomainKind::A => "A",
            DomainKind::B1 => "B1",
            DomainKind::B2 => "B2",
            DomainKind::BC => "BC",
            DomainKind::D1 => "D1",
            DomainKind::D2 => "D2",
        };
        write!(f, "{s}")
    }
}

/// Root multiplicity quadruple of the real form: rank, long roots `iota-1`,
/// middle roots `a`, short roots `2b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadruple {
    pub rank: u32,
    pub iota_minus_1: Rat,
    pub a: Rat,
    pub two_b: Rat,
}

impl Quadruple {
    pub fn b(&self) -> Rat {
        &self.two_b / rat_int(2)
    }
}

/// Complex-domain triple `(r', a', 2b')`; the long-root multiplicity is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexTriple {
    pub rank: u32,
    pub a: Rat,
    pub two_b: Rat,
}

impl ComplexTriple {
    pub fn b(&self) -> Rat {
        &self.two_b / rat_int(2)
    }
}

/// Fully derived descriptor of one domain. Immutable value; construct through
/// the family constructors, which validate parameters and the internal
/// consistency of every derived constant.
#[derive(Clone, Debug, PartialEq)]
pub struct DomainDescriptor {
    pub kind: DomainKind,
    /// Human-readable realization, e.g. `SO0(10,2) in SU(10,2)`.
    pub label: String,
    /// Matrix-size parameters where applicable.
    pub l: Option<u32>,
    pub r_param: Option<u32>,
    pub real: Quadruple,
    pub complex: ComplexTriple,
    /// Genus `p = a'(r'-1) + 2 + b'` of the ambient complex domain.
    pub genus: Rat,
    /// `d/r' = 1 + b' + (a'/2)(r'-1)`, the rank-normalized dimension.
    pub dim_over_rank: Rat,
    /// `rho(xi) = r(iota-1) + (a/2) r (r-1) + b r`, half-sum of positive
    /// restricted roots against the central ray, from the real quadruple.
    pub rho_xi: Rat,
    pub wallach_singular: Vec<Rat>,
    pub wallach_threshold: Rat,
    /// Rank-one descriptors fall outside the classified families (which start
    /// at rank two); they are admitted only to drive low-rank oracles.
    pub rank_one: bool,
}

fn derive(
    kind: DomainKind,
    label: String,
    l: Option<u32>,
    r_param: Option<u32>,
    real: Quadruple,
    complex: ComplexTriple,
) -> DomainDescriptor {
    let rp = complex.rank;
    let ap = &complex.a;
    let bp = complex.b();
    let genus = ap * rat_int(i64::from(rp) - 1) + rat_int(2) + &bp;
    let dim_over_rank = Rat::one() + &bp + ap / rat_int(2) * rat_int(i64::from(rp) - 1);
    let r = real.rank;
    let rho_xi = rat_int(i64::from(r)) * &real.iota_minus_1
        + &real.a / rat_int(2) * rat_int(i64::from(r)) * rat_int(i64::from(r) - 1)
        + real.b() * rat_int(i64::from(r));
    let half_ap = ap / rat_int(2);
    let wallach_singular: Vec<Rat> = (0..rp).map(|j| &half_ap * rat_int(i64::from(j))).collect();
    let wallach_threshold = &half_ap * rat_int(i64::from(rp) - 1);
    let rank_one = r == 1;
    DomainDescriptor {
        kind,
        label,
        l,
        r_param,
        real,
        complex,
        genus,
        dim_over_rank,
        rho_xi,
        wallach_singular,
        wallach_threshold,
        rank_one,
    }
}

impl DomainDescriptor {
    /// The complex domain of `SU(l,r)`, viewed as the diagonal real form in
    /// its square. Rank one is admitted (flagged) for oracle use.
    pub fn su(l: u32, r: u32) -> Result<Self> {
        if r < 1 || l < r {
            return Err(Error::InvalidDomain(format!(
                "SU(l,r) needs l >= r >= 1, got l={l} r={r}"
            )));
        }
        Self::bcxbc_with_params(
            r,
            rat_int(2),
            rat_int(2 * (i64::from(l) - i64::from(r))),
            Some(l),
            format!("SU({l},{r}) diagonal in SU({l},{r}) x SU({l},{r})"),
        )
    }

    /// Generic diagonal (complex) domain with rank `r`, middle multiplicity
    /// `a` and short multiplicity `2b`.
    pub fn bcxbc(r: u32, a: Rat, two_b: Rat) -> Result<Self> {
        let label = format!("complex domain (r={r}, a={a}, 2b={two_b}) diagonal in its square");
        Self::bcxbc_with_params(r, a, two_b, None, label)
    }

    fn bcxbc_with_params(
        r: u32,
        a: Rat,
        two_b: Rat,
        l: Option<u32>,
        label: String,
    ) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidDomain("rank must be at least 1".into()));
        }
        if a.is_negative() || two_b.is_negative() {
            return Err(Error::InvalidDomain(
                "multiplicities must be nonnegative".into(),
            ));
        }
        let real = Quadruple {
            rank: r,
            iota_minus_1: Rat::one(),
            a: a.clone(),
            two_b: two_b.clone(),
        };
        let complex = ComplexTriple { rank: r, a, two_b };
        Ok(derive(DomainKind::BCxBC, label, l, Some(r), real, complex))
    }

    /// Tube-type real form (symmetric cone realization) of rank `r` with
    /// middle multiplicity `a`; admissible `(r,a)` are `a` in `{1,2,4}` for
    /// any `r >= 2`, any `a >= 1` at `r = 2`, and `(3,8)`.
    pub fn type_a(r: u32, a: u32) -> Result<Self> {
        let ok = (r >= 2 && matches!(a, 1 | 2 | 4)) || (r == 2 && a >= 1) || (r == 3 && a == 8);
        if !ok {
            return Err(Error::InvalidDomain(format!("type A admits a in {{1,2,4}} (r>=2), any a at r=2, or (r,a)=(3,8); got r={r} a={a}")));
        }
        let real = Quadruple {
            rank: r,
            iota_minus_1: Rat::zero(),
            a: rat_int(i64::from(a)),
            two_b: Rat::zero(),
        };
        let complex = ComplexTriple {
            rank: r,
            a: rat_int(i64::from(a)),
            two_b: Rat::zero(),
        };
        Ok(derive(
            DomainKind::A,
            format!("type A cone (r={r}, a={a})"),
            None,
            Some(r),
            real,
            complex,
        ))
    }

    /// `X = SO0(l,r)/(SO(l) x SO(r))` inside `SU(l,r)`, `l > r >= 2`.
    pub fn so(l: u32, r: u32) -> Result<Self> {
        if r < 2 || l <= r {
            return Err(Error::InvalidDomain(format!(
                "SO0(l,r) needs l > r >= 2, got l={l} r={r}"
            )));
        }
        let lr = i64::from(l) - i64::from(r);
        let real = Quadruple {
            rank: r,
            iota_minus_1: Rat::zero(),
            a: Rat::one(),
            two_b: rat_int(lr),
        };
        let complex = ComplexTriple {
            rank: r,
            a: rat_int(2),
            two_b: rat_int(2 * lr),
        };
        Ok(derive(
            DomainKind::B1,
            format!("SO0({l},{r}) in SU({l},{r})"),
            Some(l),
            Some(r),
            real,
            complex,
        ))
    }

    /// `SO(2r+1,C)/SO(2r+1)` inside `SO*(2(2r+1))`; quadruple storage only.
    pub fn b2(r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidDomain(format!(
                "type B2 needs r >= 2, got {r}"
            )));
        }
        let real = Quadruple {
            rank: r,
            iota_minus_1: Rat::one(),
            a: rat_int(2),
            two_b: rat_int(2),
        };
        let complex = ComplexTriple {
            rank: r,
            a: rat_int(4),
            two_b: rat_int(4),
        };
        Ok(derive(
            DomainKind::B2,
            format!(
                "SO({},C)/SO({}) in SO*({})",
                2 * r + 1,
                2 * r + 1,
                4 * r + 2
            ),
            None,
            Some(r),
            real,
            complex,
        ))
    }

    /// `X = Sp(l,r)/(Sp(l) x Sp(r))` inside `SU(2l,2r)`, `l > r >= 2`.
    pub fn sp(l: u32, r: u32) -> Result<Self> {
        if r < 2 || l <= r {
            return Err(Error::InvalidDomain(format!(
                "Sp(l,r) needs l > r >= 2, got l={l} r={r}"
            )));
        }
        let lr = i64::from(l) - i64::from(r);
        let real = Quadruple {
            rank: r,
            iota_minus_1: rat_int(3),
            a: rat_int(4),
            two_b: rat_int(4 * lr),
        };
        let complex = ComplexTriple {
            rank: 2 * r,
            a: rat_int(2),
            two_b: rat_int(4 * lr),
        };
        Ok(derive(
            DomainKind::BC,
            format!("Sp({l},{r}) in SU({},{})", 2 * l, 2 * r),
            Some(l),
            Some(r),
            real,
            complex,
        ))
    }

    /// `X = SO(r,r)/(SO(r) x SO(r))` inside `SU(r,r)`, `r >= 2`.
    pub fn d1(r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidDomain(format!(
                "type D1 needs r >= 2, got {r}"
            )));
        }
        let real = Quadruple {
            rank: r,
            iota_minus_1: Rat::zero(),
            a: Rat::one(),
            two_b: Rat::zero(),
        };
        let complex = ComplexTriple {
            rank: r,
            a: rat_int(2),
            two_b: Rat::zero(),
        };
        Ok(derive(
            DomainKind::D1,
            format!("SO({r},{r}) in SU({r},{r})"),
            None,
            Some(r),
            real,
            complex,
        ))
    }

    /// `SU*(8)/Sp(4)` inside `E7(-25)`; quadruple storage only.
    pub fn d2() -> Result<Self> {
        let real = Quadruple {
            rank: 3,
            iota_minus_1: Rat::zero(),
            a: rat_int(4),
            two_b: Rat::zero(),
        };
        let complex = ComplexTriple {
            rank: 3,
            a: rat_int(8),
            two_b: Rat::zero(),
        };
        Ok(derive(
            DomainKind::D2,
            "SU*(8)/Sp(4) in E7(-25)".into(),
            None,
            Some(3),
            real,
            complex,
        ))
    }

    /// Singular Wallach points and the continuous-ray threshold of the
    /// ambient complex domain.
    pub fn wallach_set(&self) -> (&[Rat], &Rat) {
        (&self.wallach_singular, &self.wallach_threshold)
    }

    /// Classify `nu` against the Wallach set: `Ok(None)` means the continuous
    /// ray, `Ok(Some(j))` the `j`-th singular point `nu = (a'/2)(j-1)`,
    /// 1-based.
    pub fn classify_nu(&self, nu: &Rat) -> Result<Option<u32>> {
        if nu > &self.wallach_threshold {
            return Ok(None);
        }
        for (idx, point) in self.wallach_singular.iter().enumerate() {
            if nu == point {
                return Ok(Some(idx as u32 + 1));
            }
        }
        Err(Error::NuOutsideWallach {
            nu: nu.to_string(),
            desc: format!(
                "{{0, {}/2, ..., {}}} united with ({}, inf)",
                self.complex.a, self.wallach_threshold, self.wallach_threshold
            ),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::rat;

    #[test]
    fn su_descriptor_constants() {
        let d = DomainDescriptor::su(3, 2).unwrap();
        assert_eq!(d.genus, rat_int(5)); // l + r for SU(l,r)
        assert_eq!(d.dim_over_rank, rat_int(3)); // = l
        assert_eq!(d.rho_xi, rat_int(6)); // r(1 + b + (a/2)(r-1)) = 2(1+1+1)
        assert_eq!(d.wallach_singular, vec![rat_int(0), rat_int(1)]);
        assert_eq!(d.wallach_threshold, rat_int(1));
        assert!(!d.rank_one);
    }

    #[test]
    fn sp_quadruples() {
        let d = DomainDescriptor::sp(4, 2).unwrap();
        assert_eq!(d.real.rank, 2);
        assert_eq!(d.real.iota_minus_1, rat_int(3));
        assert_eq!(d.real.a, rat_int(4));
        assert_eq!(d.real.two_b, rat_int(8));
        assert_eq!(d.complex.rank, 4);
        assert_eq!(d.complex.a, rat_int(2));
        assert_eq!(d.complex.two_b, rat_int(8));
        // complex rank doubles and the middle multiplicity halves
        assert_eq!(d.complex.rank, 2 * d.real.rank);
        assert_eq!(d.real.a, rat_int(2) * &d.complex.a);
        // ambient SU(8,4): singular points {0,1,2,3}
        assert_eq!(d.wallach_singular.len(), 4);
        assert_eq!(d.wallach_threshold, rat_int(3));
    }

    #[test]
    fn d1_quadruples() {
        let d = DomainDescriptor::d1(3).unwrap();
        assert_eq!(d.real.iota_minus_1, Rat::zero());
        assert_eq!(d.real.a, Rat::one());
        assert_eq!(d.real.two_b, Rat::zero());
        assert_eq!(d.complex.a, rat_int(2));
        assert_eq!(d.complex.two_b, Rat::zero());
    }

    #[test]
    fn so_uses_half_integer_b() {
        let d = DomainDescriptor::so(7, 2).unwrap();
        assert_eq!(d.real.two_b, rat_int(5));
        assert_eq!(d.real.b(), rat(5, 2));
        assert_eq!(d.complex.two_b, rat_int(10));
    }

    #[test]
    fn complex_rank_matches_real_rank_outside_bc() {
        for dom in [
            DomainDescriptor::so(7, 3).unwrap(),
            DomainDescriptor::b2(2).unwrap(),
            DomainDescriptor::d1(4).unwrap(),
            DomainDescriptor::d2().unwrap(),
            DomainDescriptor::type_a(3, 2).unwrap(),
        ] {
            assert_eq!(dom.complex.rank, dom.real.rank, "{}", dom.label);
        }
        // only the quaternionic family doubles the rank
        let bc = DomainDescriptor::sp(5, 2).unwrap();
        assert_eq!(bc.complex.rank, 2 * bc.real.rank);
    }

    #[test]
    fn rank_one_flagged() {
        let d = DomainDescriptor::su(2, 1).unwrap();
        assert!(d.rank_one);
        assert_eq!(d.wallach_singular, vec![Rat::zero()]);
        assert_eq!(d.wallach_threshold, Rat::zero());
        assert_eq!(d.dim_over_rank, rat_int(2)); // 1 + b' = 1 + (l - r)
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(DomainDescriptor::su(1, 2).is_err());
        assert!(DomainDescriptor::su(2, 2).is_ok()); // tube case l = r
        assert!(DomainDescriptor::so(3, 3).is_err());
        assert!(DomainDescriptor::so(5, 1).is_err());
        assert!(DomainDescriptor::sp(2, 2).is_err());
        assert!(DomainDescriptor::type_a(4, 3).is_err());
        assert!(DomainDescriptor::type_a(2, 7).is_ok());
        assert!(DomainDescriptor::type_a(3, 8).is_ok());
    }

    #[test]
    fn classify_nu_against_wallach() {
        let d = DomainDescriptor::su(7, 3).unwrap();
        assert_eq!(d.classify_nu(&rat_int(1)).unwrap(), Some(2));
        assert_eq!(d.classify_nu(&rat(5, 2)).unwrap(), None);
        assert_eq!(d.classify_nu(&rat_int(2)).unwrap(), Some(3));
        assert!(d.classify_nu(&rat(1, 2)).is_err());
    }
}
