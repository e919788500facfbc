//! Realization of constant Jordan types: decide whether `[1]^c [2]^d` is
//! attained by an indecomposable with equal kernels (or equal images), build
//! one, and certify it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bgp::{build_preprojective, coxeter_shift_plan, tau_inverse_tree, WindowCase};
use crate::cover::{
    build_indecomposable_tree_rep, build_root_vector, build_source_regular, is_inj, push_down, thin_path_rep, TreeRep,
};
use crate::echelon::{build_echelon_rep, ekp_echelon_certificate, select_phi};
use crate::exactmat::Field;
use crate::kronecker::{is_constant_jordan_type, is_in_ijt, tits_form, xi, DimVector, IjtClause, JordanType, KroneckerRep};
use crate::verify::{
    eip_sample_check, ekp_sample_check, end_is_local, restriction_check, CertifiedWitness, EkpCertificate,
    IndecEvidence, Mode,
};
use crate::{Error, Result};

/// Samples used to confirm the Jordan type of every witness.
pub const JORDAN_SAMPLES: usize = 100;
/// Samples behind a sampled kernel certificate and the restriction check.
pub const CHECK_SAMPLES: usize = 200;

/// Construction used for a dimension vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// The simple at the sink, for `(c, d) = (1, 0)`.
    Simple,
    /// Real roots: `P_i` from the preprojective chain.
    Preprojective,
    /// `b <= (r-1)a`: shifted-identity blocks.
    Echelon,
    /// `(r-1)a + 1 <= b` and `(r-1)b <= (r^2-r-1)a`: push-down from a source-regular tree.
    Cover,
    /// Above the cover window: inverse translates of a window witness.
    Shift,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Simple => "simple",
            Route::Preprojective => "preprojective",
            Route::Echelon => "echelon",
            Route::Cover => "cover",
            Route::Shift => "shift",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The dispatch decision for `(r, c, d)`, computed in integers only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub r: usize,
    pub jordan: JordanType,
    pub dim: DimVector,
    pub form_value: i128,
    pub accepted: bool,
    /// The first failing membership clause for rejected types.
    pub failed: Option<IjtClause>,
    pub route: Option<Route>,
}

pub fn classify(r: usize, c: usize, d: usize) -> Result<Classification> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r = {r} must be at least 2")));
    }
    let jordan = JordanType::new(c, d);
    let dim = xi(jordan);
    let form_value = tits_form(r, dim);
    let mut out = Classification {
        r,
        jordan,
        dim,
        form_value,
        accepted: false,
        failed: None,
        route: None,
    };
    if (c, d) == (1, 0) {
        out.accepted = true;
        out.route = Some(Route::Simple);
        return Ok(out);
    }
    let verdict = is_in_ijt(r, jordan);
    if !verdict.member {
        out.failed = verdict.failed;
        return Ok(out);
    }
    out.accepted = true;
    let (ri, a, b) = (r as i128, dim.a as i128, dim.b as i128);
    out.route = Some(if form_value == 1 {
        Route::Preprojective
    } else if b <= (ri - 1) * a {
        Route::Echelon
    } else if (ri - 1) * b <= (ri * ri - ri - 1) * a {
        Route::Cover
    } else {
        Route::Shift
    });
    Ok(out)
}

/// Builds and certifies a witness for `(c, d)` over the rationals.
///
/// Rejected types produce [`Error::Rejected`] naming the failed clause. Any
/// failed internal certificate is an [`Error::Certificate`].
pub fn realize(r: usize, c: usize, d: usize, mode: Mode, seed: u64) -> Result<CertifiedWitness> {
    let class = classify(r, c, d)?;
    let Some(route) = class.route else {
        let clause = class.failed.map(|f| format!("{f}")).unwrap_or_else(|| String::from("membership"));
        return Err(Error::Rejected(format!("[1]^{c}[2]^{d} is not realizable for r = {r}: {clause} fails")));
    };
    let f = Field::Rational;
    let DimVector { a, b } = class.dim;
    let mut trace = Vec::new();
    trace.push(format!("classify: (c,d) = ({c},{d}) -> dim ({a},{b}), q = {}", class.form_value));
    trace.push(format!("route: {route}"));

    let (rep, certificate) = match route {
        Route::Simple => (KroneckerRep::zero(r, DimVector::new(0, 1), f)?, EkpCertificate::Vacuous),
        Route::Preprojective => {
            let rep = build_preprojective(r, a, b, f)?;
            trace.push(format!("preprojective chain reached ({a},{b})"));
            let check = ekp_sample_check(&rep, CHECK_SAMPLES, seed)?;
            if !check.holds {
                return Err(Error::Certificate(format!("preprojective ({a},{b}) failed the sampled kernel check")));
            }
            (rep, EkpCertificate::Sampled { samples: CHECK_SAMPLES, seed })
        }
        Route::Echelon => {
            let spec = select_phi(r, a, b)?;
            trace.push(format!("echelon {}: shifts {:?}", spec.case, spec.phi));
            let rep = build_echelon_rep(&spec, f)?;
            let shifts = ekp_echelon_certificate(&rep)
                .ok_or_else(|| Error::Certificate("echelon structure check failed".into()))?;
            (rep, EkpCertificate::Echelon { shifts })
        }
        Route::Cover => {
            let tree = cover_witness(r, a, b, &mut trace)?;
            certified_tree(tree, &mut trace)?
        }
        Route::Shift => {
            let plan = coxeter_shift_plan(r, a, b)?;
            let DimVector { a: u, b: v } = plan.intermediate;
            trace.push(format!("shift plan: l = {}, {} at ({u},{v})", plan.l, plan.window_case));
            let mut tree = match plan.window_case {
                WindowCase::Thin => {
                    trace.push(format!("thin zigzag with {u} sources and {v} sinks"));
                    thin_path_rep(r, u, v)?
                }
                WindowCase::Cover => cover_witness(r, u, v, &mut trace)?,
            };
            for step in 1..=plan.l {
                tree = tau_inverse_tree(&tree)?;
                trace.push(format!("tau inverse {step}/{}: push-down dim {}", plan.l, tree.push_down_dim()));
            }
            certified_tree(tree, &mut trace)?
        }
    };
    if rep.dim() != class.dim {
        return Err(Error::Certificate(format!("built dim {} instead of {}", rep.dim(), class.dim)));
    }

    let locality = end_is_local(&rep)?;
    if !locality.local {
        return Err(Error::Certificate(format!(
            "witness is decomposable: dim End = {}, radical {}",
            locality.end_dim, locality.radical_dim
        )));
    }
    let evidence = if locality.end_dim == 1 { IndecEvidence::Brick } else { IndecEvidence::LocalEndo };
    trace.push(format!("indecomposable: dim End = {}, radical {} ({evidence})", locality.end_dim, locality.radical_dim));

    let (rep, certificate) = match mode {
        Mode::Ekp => (rep, certificate),
        Mode::Eip => {
            trace.push(String::from("dualized for equal images"));
            (rep.dual(), certificate)
        }
    };
    let witness = CertifiedWitness {
        rep,
        mode,
        jordan: class.jordan,
        certificate,
        evidence,
        trace,
    };
    let check = check_witness(&witness, seed)?;
    if let Some(failure) = check.first_failure() {
        return Err(Error::Certificate(format!("witness failed its own check: {failure}")));
    }
    let mut witness = witness;
    witness.trace.push(format!("checked: {}", check.summary()));
    Ok(witness)
}

fn cover_witness(r: usize, a: usize, b: usize, trace: &mut Vec<String>) -> Result<TreeRep> {
    let q = build_source_regular(r, a)?;
    let alpha = build_root_vector(&q, a, b)?;
    let raised: Vec<String> =
        alpha.iter().filter(|(_, &n)| n > 1).map(|(v, n)| format!("{v}:{n}")).collect();
    trace.push(format!(
        "source-regular tree: {a} sources, {} sinks, raised sinks [{}]",
        q.sinks().count(),
        raised.join(" ")
    ));
    build_indecomposable_tree_rep(&q, &alpha)
}

fn certified_tree(tree: TreeRep, trace: &mut Vec<String>) -> Result<(KroneckerRep, EkpCertificate)> {
    let inj = is_inj(&tree)?;
    if let Some(edge) = inj.witness {
        return Err(Error::Certificate(format!("tree map {} -> {} is not injective", edge.source, edge.sink)));
    }
    trace.push(format!("all tree maps injective on {} vertices", tree.support().len()));
    Ok((push_down(&tree)?, EkpCertificate::InjCover { tree }))
}

/// One named check in a [`WitnessCheck`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub checks: Vec<NamedCheck>,
}

impl WitnessCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail))
    }

    pub fn summary(&self) -> String {
        let names: Vec<&str> = self.checks.iter().map(|c| c.name).collect();
        names.join(", ")
    }
}

/// Re-validates a witness from its data alone: the certificate against the
/// (un-dualized) representation, the Jordan type at fresh parameters, and
/// the restriction predicates.
pub fn check_witness(w: &CertifiedWitness, seed: u64) -> Result<WitnessCheck> {
    let base = match w.mode {
        Mode::Ekp => w.rep.clone(),
        Mode::Eip => w.rep.dual(),
    };
    let mut checks = Vec::new();
    let (passed, detail) = match &w.certificate {
        EkpCertificate::Vacuous => (base.dim().a == 0, format!("dim M_1 = {}", base.dim().a)),
        EkpCertificate::Echelon { shifts } => {
            let found = ekp_echelon_certificate(&base);
            (found.as_ref() == Some(shifts), format!("shifts {shifts:?}"))
        }
        EkpCertificate::InjCover { tree } => {
            let inj = is_inj(tree)?;
            let matches = push_down(tree)? == base;
            (inj.holds && matches, format!("injective tree maps: {}, push-down matches: {matches}", inj.holds))
        }
        EkpCertificate::Sampled { samples, seed } => {
            let v = ekp_sample_check(&base, *samples, *seed)?;
            (v.holds, format!("{samples} samples at seed {seed}"))
        }
    };
    checks.push(NamedCheck {
        name: "certificate",
        passed,
        detail: format!("{}: {detail}", w.certificate.kind()),
    });

    if w.mode == Mode::Eip {
        let v = eip_sample_check(&w.rep, CHECK_SAMPLES, seed)?;
        checks.push(NamedCheck {
            name: "eip-sampled",
            passed: v.holds,
            detail: format!("{CHECK_SAMPLES} samples at seed {seed}"),
        });
    }

    let cjt = is_constant_jordan_type(&w.rep, JORDAN_SAMPLES, seed.wrapping_add(1))?;
    checks.push(NamedCheck {
        name: "jordan-type",
        passed: cjt.jordan == Some(w.jordan),
        detail: format!("expected {}, ranks seen {:?}", w.jordan, cjt.record.ranks_seen),
    });

    let restriction = restriction_check(&w.rep, CHECK_SAMPLES, seed.wrapping_add(2))?;
    checks.push(NamedCheck {
        name: "restriction",
        passed: restriction.holds,
        detail: format!(
            "generic {}, q(d, d+c) = {}, c bound applies: {}",
            restriction.generic, restriction.form_value, restriction.c_bound_applies
        ),
    });
    Ok(WitnessCheck { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let c = classify(3, 3, 2).unwrap();
        assert_eq!((c.accepted, c.route, c.dim), (true, Some(Route::Cover), DimVector::new(2, 5)));
        let c = classify(2, 0, 2).unwrap();
        assert!(!c.accepted && c.route.is_none());
        for r in 2..=6 {
            let c = classify(r, r - 1, 1).unwrap();
            assert_eq!(c.route, Some(Route::Preprojective));
        }
        let c = classify(3, 1, 1).unwrap();
        assert_eq!(c.failed, Some(IjtClause::CAtLeastRMinusOne));
        assert_eq!(classify(3, 1, 0).unwrap().route, Some(Route::Simple));
    }

    #[test]
    fn realize_examples() {
        let w = realize(3, 3, 2, Mode::Ekp, 1).unwrap();
        assert_eq!((w.rep.dim(), w.certificate.kind()), (DimVector::new(2, 5), "inj-cover"));
        let w = realize(3, 2, 2, Mode::Ekp, 1).unwrap();
        assert_eq!((w.rep.dim(), w.certificate.kind()), (DimVector::new(2, 4), "echelon"));
        let w = realize(3, 8, 5, Mode::Ekp, 1).unwrap();
        assert_eq!((w.rep.dim(), w.certificate.kind()), (DimVector::new(5, 13), "inj-cover"));
        assert!(w.trace.iter().any(|t| t.contains("l = 1, thin-case at (1,2)")));
        let w = realize(2, 1, 1, Mode::Ekp, 1).unwrap();
        assert_eq!((w.rep.dim(), w.certificate.kind()), (DimVector::new(1, 2), "sampled"));
        assert!(matches!(realize(3, 1, 1, Mode::Ekp, 1), Err(Error::Rejected(_))));
        let w = realize(3, 1, 0, Mode::Ekp, 1).unwrap();
        assert_eq!((w.rep.dim(), w.certificate.kind()), (DimVector::new(0, 1), "vacuous"));
    }

    #[test]
    fn eip_mode_dualizes() {
        let w = realize(3, 3, 2, Mode::Eip, 4).unwrap();
        assert_eq!(w.rep.dim(), DimVector::new(5, 2));
        assert!(check_witness(&w, 9).unwrap().passed());
    }

    #[test]
    fn tampered_witness_fails() {
        let mut w = realize(3, 2, 2, Mode::Ekp, 1).unwrap();
        w.certificate = EkpCertificate::Echelon { shifts: alloc::vec![1, 2, 3] };
        assert!(!check_witness(&w, 1).unwrap().passed());
    }
}
