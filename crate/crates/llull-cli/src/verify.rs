//! Oracle cross-checks: every closed form must agree with the generic
//! fixed-point engine, the accelerated iteration with naive one-step
//! iteration, and revision must be insensitive to replacing a doctrine
//! by its canonical form.

use std::fmt;

use llull_core::ballots::{llull_matrix, score_vectors, Profile, TruncationMode};
use llull_core::belief::{one_step_revise, upper_revise, Valuation};
use llull_core::blake::blake_canonical_form;
use llull_core::doctrines::{
    build_doctrine_named, comprehensive_upper_revise, initial_valuation, DoctrineKind, UnaryInit,
    VotingUniverse,
};
use llull_core::methods::{
    comprehensive_rejections, goodness_revision, maximin_winners, minimax_winners, paths_closure,
    plurality_winners, run_method, symmetric_prominence_winners, MethodId,
};
use llull_core::rational::zero;

use crate::CliError;

pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            write!(f, "check {}: ok", self.name)
        } else {
            write!(f, "check {}: MISMATCH ({})", self.name, self.detail)
        }
    }
}

/// Compares two values into a named check.
pub fn check_eq<T: PartialEq + fmt::Debug>(name: String, left: T, right: T) -> Check {
    let ok = left == right;
    Check {
        name,
        ok,
        detail: if ok {
            String::new()
        } else {
            format!("{left:?} != {right:?}")
        },
    }
}

fn naive_fixed_point(
    v: &Valuation,
    d: &llull_core::belief::Doctrine,
) -> Result<Valuation, CliError> {
    let mut current = v.clone();
    loop {
        let next = one_step_revise(&current, d)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

pub fn run_checks(
    profile: &Profile,
    mode: TruncationMode,
    cap: usize,
) -> Result<Vec<Check>, CliError> {
    let m = llull_matrix(profile, mode);
    let scores = score_vectors(profile);
    let n = m.n();
    let mut checks = Vec::new();
    let margin = zero();

    // Closed-form winners against the engine route.
    let engine = |method: MethodId| -> Result<_, CliError> {
        Ok(run_method(method, profile, mode, None, &margin, cap)?)
    };
    checks.push(check_eq(
        "minimax closed form vs supremacy engine".into(),
        minimax_winners(&m),
        engine(MethodId::Minimax)?.winners,
    ));
    checks.push(check_eq(
        "plurality closed form vs supremacy engine".into(),
        plurality_winners(profile),
        engine(MethodId::Plurality)?.winners,
    ));
    checks.push(check_eq(
        "maximin closed form vs prominence engine".into(),
        maximin_winners(&m),
        engine(MethodId::Maximin)?.winners,
    ));
    let (sym_winners, sym_acc) = symmetric_prominence_winners(&m);
    let sym_engine = engine(MethodId::SymmetricProminence)?;
    checks.push(check_eq(
        "symmetric prominence closed form vs engine".into(),
        (sym_winners, Some(sym_acc)),
        (sym_engine.winners, sym_engine.acceptabilities),
    ));

    if n >= 2 && n <= cap {
        // Generic properties per doctrine: widest paths, naive vs
        // accelerated iteration, canonical-form invariance.
        for kind in [
            DoctrineKind::Transitivity,
            DoctrineKind::Supremacy,
            DoctrineKind::Prominence,
            DoctrineKind::SymmetricProminence,
            DoctrineKind::Goodness,
        ] {
            let (vu, d) = build_doctrine_named(kind, m.options(), cap)?;
            let init = match kind {
                DoctrineKind::Goodness => UnaryInit::Approval,
                _ => UnaryInit::Zero,
            };
            let v0 = initial_valuation(&vu, &m, Some(&scores), init)?;
            let fixed = upper_revise(&v0, &d)?;
            match kind {
                DoctrineKind::Transitivity => {
                    let closure = paths_closure(&m);
                    let agrees = (0..n).all(|x| {
                        (0..n)
                            .filter(|&y| y != x)
                            .all(|y| fixed.get(vu.pref(x, y)) == closure.entry(x, y))
                    });
                    checks.push(Check {
                        name: "widest paths vs transitivity engine".into(),
                        ok: agrees,
                        detail: "closure entry differs from fixed point".into(),
                    });
                }
                DoctrineKind::Goodness => {
                    let rev = goodness_revision(&m, &scores);
                    let agrees = (0..n).all(|x| {
                        fixed.get(vu.unary(x)) == &rev.good[x]
                            && fixed.get(vu.unary_negated(x)) == &rev.bad[x]
                    });
                    checks.push(Check {
                        name: "goodness path formulas vs engine".into(),
                        ok: agrees,
                        detail: "revised approval differs from fixed point".into(),
                    });
                }
                _ => {}
            }
            checks.push(check_eq(
                format!("naive vs accelerated iteration ({})", kind.id()),
                naive_fixed_point(&v0, &d)?,
                fixed.clone(),
            ));
            if vu.universe().len() <= llull_core::blake::DEFAULT_LITERAL_GUARD {
                let canonical = blake_canonical_form(&d)?;
                checks.push(check_eq(
                    format!("canonical-form invariance ({})", kind.id()),
                    upper_revise(&v0, &canonical)?,
                    fixed,
                ));
            }
        }

        // Comprehensive prominence: subset formula vs grouped engine,
        // and (for small option counts) the materialised clause list.
        let vu = VotingUniverse::new(DoctrineKind::ComprehensiveProminence, m.options());
        let v0 = initial_valuation(&vu, &m, None, UnaryInit::Zero)?;
        let grouped = comprehensive_upper_revise(&vu, &v0)?;
        let rejections = comprehensive_rejections(&m);
        let agrees = (0..n).all(|y| grouped.get(vu.unary_negated(y)) == &rejections[y]);
        checks.push(Check {
            name: "comprehensive subset formula vs grouped engine".into(),
            ok: agrees,
            detail: "rejection degree differs from fixed point".into(),
        });
        if n <= 6 {
            let (_, d) =
                build_doctrine_named(DoctrineKind::ComprehensiveProminence, m.options(), cap)?;
            checks.push(check_eq(
                "grouped vs materialised comprehensive engine".into(),
                grouped,
                upper_revise(&v0, &d)?,
            ));
        }
    }
    Ok(checks)
}
