//! Enumeration of the discrete complementary-series components appearing in
//! two branching problems: the tensor square of a scalar holomorphic
//! representation of `SU(l,r)` restricted to the diagonal, and the restriction
//! of a scalar holomorphic representation to `SO0(l,r)` or `Sp(l,r)`.
//!
//! Each admissible `(nu, k)` yields a certificate whose norm square is a
//! balanced `4F3` series at the all-ones point (a reduced `2F1`-shaped series
//! at singular `nu`, where the ambient Hilbert space drops K-types and the
//! corresponding numerator parameter truncates the sum). Admissibility is
//! decided by the generic boundedness criterion at runtime; the closed-form
//! inequalities are carried along and re-asserted against the criterion every
//! time a certificate is certified, so a transcription slip in either side
//! cannot pass silently.

use crate::combinatorics::{rat, rat_int};
use crate::domains::DomainDescriptor;
use crate::hypergeo::{hyper_at_one, SeriesParams, SeriesResult};
use crate::numeric::Precision;
use crate::spherical::{lambda_of_sigma, LambdaReading};
use crate::{Error, Rat, Result};
use num::One;

/// Which branching problem a certificate belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Setting {
    Tensor,
    Restriction,
}

impl std::fmt::Display for Setting {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Setting::Tensor => write!(f, "tensor"),
            Setting::Restriction => write!(f, "restriction"),
        }
    }
}

/// Subgroup family in the restriction setting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HKind {
    SO,
    Sp,
}

impl std::str::FromStr for HKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "so" => Ok(HKind::SO),
            "sp" => Ok(HKind::Sp),
            other => Err(Error::InvalidArgument(format!(
                "unknown subgroup kind {other:?}"
            ))),
        }
    }
}

/// Continuous ray or `j`-th singular Wallach point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NuClass {
    Continuous,
    Singular { j: u32 },
}

impl std::fmt::Display for NuClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NuClass::Continuous => write!(f, "continuous"),
            NuClass::Singular { j } => write!(f, "singular(j={j})"),
        }
    }
}

/// One admissible discrete component.
#[derive(Clone, Debug)]
pub struct BranchingCertificate {
    pub setting: Setting,
    /// Subgroup family, present in the restriction setting.
    pub hkind: Option<HKind>,
    pub group_g: String,
    pub group_h: String,
    pub l: u32,
    pub r: u32,
    pub nu: Rat,
    pub nu_class: NuClass,
    pub k: u32,
    /// `nu + k` in the tensor setting, `nu + 2k` in the restriction setting.
    pub sigma: Rat,
    pub lambda: LambdaReading,
    /// Norm-square series at the all-ones point.
    pub params: SeriesParams,
    /// Human-readable closed-form bound that admitted this certificate.
    pub bound: String,
    /// Which admissibility rule produced it.
    pub rule: &'static str,
    pub norm_square: Option<SeriesResult>,
}

/// Scan output: certificates plus an explanation when the scan is empty by
/// hypothesis rather than by search.
#[derive(Clone, Debug, Default)]
pub struct ScanReport {
    pub certificates: Vec<BranchingCertificate>,
    pub note: Option<String>,
}

/// Internal description of one admissibility case; the closed-form bound and
/// the norm-square series parameters are generated side by side.
#[derive(Clone, Debug)]
pub enum ScanCase {
    TensorContinuous { l: u32, r: u32, nu: Rat, k: u32 },
    TensorSingular { l: u32, r: u32, j: u32 },
    SoContinuous { l: u32, r: u32, nu: Rat, k: u32 },
    SoSingular { l: u32, r: u32, j: u32 },
    SpContinuous { l: u32, r: u32, nu: Rat, k: u32 },
    SpSingular { l: u32, r: u32, j: u32 },
}

impl ScanCase {
    /// The printed closed-form admissibility inequality.
    pub fn printed_bound_holds(&self) -> bool {
        match self {
            ScanCase::TensorContinuous { l, r, nu, k } => {
                let b = rat_int(i64::from(*l) - i64::from(*r));
                rat_int(2) * nu + rat_int(4 * i64::from(*k)) < Rat::one() + b
            }
            ScanCase::TensorSingular { l, r, j } => {
                let _ = r;
                i64::from(*l) - i64::from(*r) > 2 * i64::from(*j) - 3
            }
            ScanCase::SoContinuous { l, r, nu, k } => {
                let half_lr = rat_int(i64::from(*l) - i64::from(*r)) / rat_int(2);
                nu + rat_int(4 * i64::from(*k)) < half_lr
            }
            ScanCase::SoSingular { l, r, j } => i64::from(*l) - i64::from(*r) > i64::from(*j) - 1,
            ScanCase::SpContinuous { l, r, nu, k } => {
                let bound = rat_int(i64::from(*l) - i64::from(*r)) + rat(3, 2);
                nu + rat_int(4 * i64::from(*k)) < bound
            }
            ScanCase::SpSingular { l, r, j } => i64::from(*l) - i64::from(*r) >= i64::from(*j) - 2,
        }
    }

    /// Render the bound with its numbers, for certificates and reports.
    pub fn bound_text(&self) -> String {
        match self {
            ScanCase::TensorContinuous { l, r, nu, k } => {
                format!("2 nu + 4k < 1 + (l - r): 2({nu}) + 4({k}) < 1 + {}", l - r)
            }
            ScanCase::TensorSingular { l, r, j } => {
                format!("l - r > 2j - 3: {} > {}", l - r, 2 * i64::from(*j) - 3)
            }
            ScanCase::SoContinuous { l, r, nu, k } => {
                format!("nu + 4k < (l - r)/2: ({nu}) + 4({k}) < {}/2", l - r)
            }
            ScanCase::SoSingular { l, r, j } => {
                format!("l - r > j - 1: {} > {}", l - r, j - 1)
            }
            ScanCase::SpContinuous { l, r, nu, k } => {
                format!("nu + 4k < (l - r) + 3/2: ({nu}) + 4({k}) < {} + 3/2", l - r)
            }
            ScanCase::SpSingular { l, r, j } => {
                format!("l - r >= j - 2: {} >= {}", l - r, i64::from(*j) - 2)
            }
        }
    }

    /// Norm-square series of the component. Singular cases use the reduced
    /// parameter lists in which the cancelling numerator/denominator pairs at
    /// `sigma = nu` have been removed; the remaining numerator sits on the
    /// truncation lattice and kills exactly the K-types absent from the
    /// ambient space.
    pub fn series_params(&self) -> Result<SeriesParams> {
        match self {
            ScanCase::TensorContinuous { l, r, nu, k } => {
                let dom = DomainDescriptor::su(*l, *r)?;
                let s = nu + rat_int(i64::from(*k));
                SeriesParams::new(
                    vec![s.clone(), s.clone(), s.clone(), s],
                    vec![nu.clone(), nu.clone(), dom.dim_over_rank],
                    *r,
                    rat_int(2),
                )
            }
            ScanCase::TensorSingular { l, r, j } => {
                let dom = DomainDescriptor::su(*l, *r)?;
                let nu = rat_int(i64::from(*j) - 1);
                SeriesParams::new(
                    vec![nu.clone(), nu],
                    vec![dom.dim_over_rank],
                    *r,
                    rat_int(2),
                )
            }
            ScanCase::SoContinuous { l, r, nu, k } => {
                let dom = DomainDescriptor::so(*l, *r)?;
                let s = nu + rat_int(2 * i64::from(*k));
                let c = so_denominator(&dom);
                SeriesParams::new(
                    vec![
                        &s / rat_int(2),
                        &s / rat_int(2),
                        (&s + Rat::one()) / rat_int(2),
                        (&s + Rat::one()) / rat_int(2),
                    ],
                    vec![nu / rat_int(2), (nu + Rat::one()) / rat_int(2), c],
                    *r,
                    Rat::one(),
                )
            }
            ScanCase::SoSingular { l, r, j } => {
                let dom = DomainDescriptor::so(*l, *r)?;
                let nu = rat_int(i64::from(*j) - 1);
                let c = so_denominator(&dom);
                SeriesParams::new(
                    vec![&nu / rat_int(2), (&nu + Rat::one()) / rat_int(2)],
                    vec![c],
                    *r,
                    Rat::one(),
                )
            }
            ScanCase::SpContinuous { l, r, nu, k } => {
                let dom = DomainDescriptor::sp(*l, *r)?;
                let s = nu + rat_int(2 * i64::from(*k));
                let c = sp_denominator(&dom);
                SeriesParams::new(
                    vec![s.clone(), s.clone(), &s - Rat::one(), &s - Rat::one()],
                    vec![c, nu.clone(), nu - Rat::one()],
                    *r,
                    rat_int(4),
                )
            }
            ScanCase::SpSingular { l, r, j } => {
                let dom = DomainDescriptor::sp(*l, *r)?;
                let nu = rat_int(i64::from(*j) - 1);
                let c = sp_denominator(&dom);
                SeriesParams::new(vec![nu.clone(), &nu - Rat::one()], vec![c], *r, rat_int(4))
            }
        }
    }

    /// The admissibility decision both routes must agree on.
    pub fn criterion_holds(&self) -> Result<bool> {
        Ok(self.series_params()?.convergent_at_one())
    }
}

/// `(a/2)(r-1) + b + 1/2` for `SO0(l,r)`, in real-form data.
fn so_denominator(dom: &DomainDescriptor) -> Rat {
    &dom.real.a / rat_int(2) * rat_int(i64::from(dom.real.rank) - 1) + dom.real.b() + rat(1, 2)
}

/// `(a/2)(r-1) + b + iota/2` for `Sp(l,r)`, in real-form data.
fn sp_denominator(dom: &DomainDescriptor) -> Rat {
    let iota = &dom.real.iota_minus_1 + Rat::one();
    &dom.real.a / rat_int(2) * rat_int(i64::from(dom.real.rank) - 1)
        + dom.real.b()
        + iota / rat_int(2)
}

/// Enumerate the discrete components of the tensor square of the scalar
/// holomorphic representation of `SU(l,r)` under the diagonal. `nu` must lie
/// in the Wallach set; admissible `k` run from 0 to `k_max`.
pub fn scan_tensor(l: u32, r: u32, nu: &Rat, k_max: u32) -> Result<ScanReport> {
    if r < 2 || l <= r {
        return Err(Error::InvalidDomain(format!(
            "tensor scan needs l > r >= 2, got l={l} r={r}"
        )));
    }
    let dom = DomainDescriptor::su(l, r)?;
    if i64::from(l) - i64::from(r) <= 2 {
        return Ok(ScanReport {
            certificates: Vec::new(),
            note: Some(format!(
                "l - r = {} <= 2: no discrete components occur for tube-like or thin type I domains",
                l - r
            )),
        });
    }
    let nu_class = dom.classify_nu(nu)?;
    let mut report = ScanReport::default();
    match nu_class {
        None => {
            for k in 0..=k_max {
                let case = ScanCase::TensorContinuous {
                    l,
                    r,
                    nu: nu.clone(),
                    k,
                };
                if push_if_admissible(
                    &mut report,
                    &dom,
                    Setting::Tensor,
                    case,
                    nu,
                    NuClass::Continuous,
                    k,
                )? {
                    continue;
                }
                break; // admissible k form a downward-closed interval
            }
        }
        Some(1) => {
            report.note = Some("nu = 0 carries only the constants; nothing to branch".into());
        }
        Some(j) => {
            let case = ScanCase::TensorSingular { l, r, j };
            push_if_admissible(
                &mut report,
                &dom,
                Setting::Tensor,
                case,
                nu,
                NuClass::Singular { j },
                0,
            )?;
        }
    }
    Ok(report)
}

/// Enumerate the discrete components of the restriction of the scalar
/// holomorphic representation to `SO0(l,r)` (ambient `SU(l,r)`) or `Sp(l,r)`
/// (ambient `SU(2l,2r)`).
pub fn scan_restriction(hkind: HKind, l: u32, r: u32, nu: &Rat, k_max: u32) -> Result<ScanReport> {
    let lr = i64::from(l) - i64::from(r);
    let (dom, hyp_ok, hyp_text) = match hkind {
        HKind::SO => (
            DomainDescriptor::so(l, r)?,
            lr > 2 * (i64::from(r) - 1),
            "l - r > 2(r - 1)",
        ),
        HKind::Sp => (
            DomainDescriptor::sp(l, r)?,
            lr >= 2 * (i64::from(r) - 1),
            "l - r >= 2(r - 1)",
        ),
    };
    if !hyp_ok {
        return Err(Error::InvalidDomain(format!(
            "{} requires {hyp_text}; got l - r = {lr}, r = {r}",
            dom.label
        )));
    }
    let nu_class = dom.classify_nu(nu)?;
    let mut report = ScanReport::default();
    match nu_class {
        None => {
            for k in 0..=k_max {
                let case = match hkind {
                    HKind::SO => ScanCase::SoContinuous {
                        l,
                        r,
                        nu: nu.clone(),
                        k,
                    },
                    HKind::Sp => ScanCase::SpContinuous {
                        l,
                        r,
                        nu: nu.clone(),
                        k,
                    },
                };
                if push_if_admissible(
                    &mut report,
                    &dom,
                    Setting::Restriction,
                    case,
                    nu,
                    NuClass::Continuous,
                    k,
                )? {
                    continue;
                }
                break;
            }
        }
        Some(1) => {
            report.note = Some("nu = 0 carries only the constants; nothing to branch".into());
        }
        Some(j) => {
            let case = match hkind {
                HKind::SO => ScanCase::SoSingular { l, r, j },
                HKind::Sp => ScanCase::SpSingular { l, r, j },
            };
            push_if_admissible(
                &mut report,
                &dom,
                Setting::Restriction,
                case,
                nu,
                NuClass::Singular { j },
                0,
            )?;
        }
    }
    Ok(report)
}

fn push_if_admissible(
    report: &mut ScanReport,
    dom: &DomainDescriptor,
    setting: Setting,
    case: ScanCase,
    nu: &Rat,
    nu_class: NuClass,
    k: u32,
) -> Result<bool> {
    let printed = case.printed_bound_holds();
    let criterion = case.criterion_holds()?;
    if printed != criterion {
        return Err(Error::BoundCriterionMismatch(format!(
            "{}: printed {printed}, criterion {criterion}",
            case.bound_text()
        )));
    }
    if !criterion {
        return Ok(false);
    }
    let (sigma, rule, group_g, group_h) = describe(&case, nu, k);
    let lambda = lambda_of_sigma(dom, &sigma)?;
    let hkind = match case {
        ScanCase::SoContinuous { .. } | ScanCase::SoSingular { .. } => Some(HKind::SO),
        ScanCase::SpContinuous { .. } | ScanCase::SpSingular { .. } => Some(HKind::Sp),
        _ => None,
    };
    report.certificates.push(BranchingCertificate {
        setting,
        hkind,
        group_g,
        group_h,
        l: dom.l.unwrap_or(0),
        r: dom.real.rank,
        nu: nu.clone(),
        nu_class,
        k,
        sigma,
        lambda,
        params: case.series_params()?,
        bound: case.bound_text(),
        rule,
        norm_square: None,
    });
    Ok(true)
}

fn describe(case: &ScanCase, nu: &Rat, k: u32) -> (Rat, &'static str, String, String) {
    match case {
        ScanCase::TensorContinuous { l, r, .. } => (
            nu + rat_int(i64::from(k)),
            "tensor-continuous",
            format!("SU({l},{r}) x SU({l},{r})"),
            format!("SU({l},{r}) diagonal"),
        ),
        ScanCase::TensorSingular { l, r, .. } => (
            nu.clone(),
            "tensor-singular",
            format!("SU({l},{r}) x SU({l},{r})"),
            format!("SU({l},{r}) diagonal"),
        ),
        ScanCase::SoContinuous { l, r, .. } => (
            nu + rat_int(2 * i64::from(k)),
            "restriction-so-continuous",
            format!("SU({l},{r})"),
            format!("SO0({l},{r})"),
        ),
        ScanCase::SoSingular { l, r, .. } => (
            nu.clone(),
            "restriction-so-singular",
            format!("SU({l},{r})"),
            format!("SO0({l},{r})"),
        ),
        ScanCase::SpContinuous { l, r, .. } => (
            nu + rat_int(2 * i64::from(k)),
            "restriction-sp-continuous",
            format!("SU({},{})", 2 * l, 2 * r),
            format!("Sp({l},{r})"),
        ),
        ScanCase::SpSingular { l, r, .. } => (
            nu.clone(),
            "restriction-sp-singular",
            format!("SU({},{})", 2 * l, 2 * r),
            format!("Sp({l},{r})"),
        ),
    }
}

/// Fill in the norm square of a certificate by direct shell summation, after
/// re-asserting that the closed-form bound it was admitted under is
/// equivalent to the runtime convergence criterion on its exact parameter
/// list. Also rejects certificates sitting on the bound's boundary (the
/// criterion is strict).
pub fn certify(
    cert: &mut BranchingCertificate,
    max_degree: u32,
    tail_tol: f64,
    precision: Precision,
) -> Result<()> {
    let case = reconstruct_case(cert)?;
    let printed = case.printed_bound_holds();
    let criterion = case.criterion_holds()?;
    if printed != criterion {
        return Err(Error::BoundCriterionMismatch(format!(
            "{}: printed {printed}, criterion {criterion}",
            case.bound_text()
        )));
    }
    if !criterion {
        return Err(Error::DivergentAtOne(cert.bound.clone()));
    }
    let result = hyper_at_one(&cert.params, max_degree, tail_tol, precision)?;
    if result.value <= 0.0 || result.value.is_nan() {
        return Err(Error::InvalidArgument(format!(
            "norm square came out nonpositive: {}",
            result.value
        )));
    }
    cert.norm_square = Some(result);
    Ok(())
}

fn reconstruct_case(cert: &BranchingCertificate) -> Result<ScanCase> {
    let l = cert.l;
    let r = cert.r;
    Ok(match (cert.setting, cert.nu_class, cert.hkind) {
        (Setting::Tensor, NuClass::Continuous, _) => ScanCase::TensorContinuous {
            l,
            r,
            nu: cert.nu.clone(),
            k: cert.k,
        },
        (Setting::Tensor, NuClass::Singular { j }, _) => ScanCase::TensorSingular { l, r, j },
        (Setting::Restriction, NuClass::Continuous, Some(HKind::SO)) => ScanCase::SoContinuous {
            l,
            r,
            nu: cert.nu.clone(),
            k: cert.k,
        },
        (Setting::Restriction, NuClass::Continuous, Some(HKind::Sp)) => ScanCase::SpContinuous {
            l,
            r,
            nu: cert.nu.clone(),
            k: cert.k,
        },
        (Setting::Restriction, NuClass::Singular { j }, Some(HKind::SO)) => {
            ScanCase::SoSingular { l, r, j }
        }
        (Setting::Restriction, NuClass::Singular { j }, Some(HKind::Sp)) => {
            ScanCase::SpSingular { l, r, j }
        }
        (Setting::Restriction, _, None) => {
            return Err(Error::InvalidArgument(
                "restriction certificate is missing its subgroup kind".into(),
            ))
        }
    })
}
