//! The suite registry: one entry per certified statement, each a list of
//! named checks.

use super::suites::{derivatives, distortion, elliptic_bounds, identities, three_param};
use super::{figures, CheckOutput, Ctx};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// An exact identity tested to a fixed tolerance.
    Identity,
    /// A chain of inequalities.
    Inequality,
    /// A closed-form derivative against finite differences.
    Derivative,
    /// Monotonicity, convexity or a range claim on an ascending axis.
    Shape,
}

pub(crate) struct CheckDef {
    pub name: &'static str,
    pub kind: CheckKind,
    pub run: fn(&Ctx) -> CheckOutput,
}

impl CheckDef {
    pub const fn identity(name: &'static str, run: fn(&Ctx) -> CheckOutput) -> Self {
        Self {
            name,
            kind: CheckKind::Identity,
            run,
        }
    }
    pub const fn ineq(name: &'static str, run: fn(&Ctx) -> CheckOutput) -> Self {
        Self {
            name,
            kind: CheckKind::Inequality,
            run,
        }
    }
    pub const fn deriv(name: &'static str, run: fn(&Ctx) -> CheckOutput) -> Self {
        Self {
            name,
            kind: CheckKind::Derivative,
            run,
        }
    }
    pub const fn shape(name: &'static str, run: fn(&Ctx) -> CheckOutput) -> Self {
        Self {
            name,
            kind: CheckKind::Shape,
            run,
        }
    }
}

struct SuiteDef {
    id: &'static str,
    checks: &'static [CheckDef],
}

const SUITES: &[SuiteDef] = &[
    SuiteDef {
        id: "identity_1_3",
        checks: identities::IDENTITY_1_3,
    },
    SuiteDef {
        id: "mu_functional_identity",
        checks: identities::MU_FUNCTIONAL,
    },
    SuiteDef {
        id: "phi_composition",
        checks: identities::PHI_COMPOSITION,
    },
    SuiteDef {
        id: "thm_1_5",
        checks: elliptic_bounds::THM_1_5,
    },
    SuiteDef {
        id: "thm_1_7",
        checks: elliptic_bounds::THM_1_7,
    },
    SuiteDef {
        id: "thm_1_8",
        checks: elliptic_bounds::THM_1_8,
    },
    SuiteDef {
        id: "thm_1_9",
        checks: elliptic_bounds::THM_1_9,
    },
    SuiteDef {
        id: "post_2_9",
        checks: elliptic_bounds::POST_2_9,
    },
    SuiteDef {
        id: "lemma_2_3",
        checks: elliptic_bounds::LEMMA_2_3,
    },
    SuiteDef {
        id: FD_SUITE,
        checks: derivatives::LEMMA_2_4,
    },
    SuiteDef {
        id: "lemma_2_5",
        checks: elliptic_bounds::LEMMA_2_5,
    },
    SuiteDef {
        id: "lemma_2_10",
        checks: elliptic_bounds::LEMMA_2_10,
    },
    SuiteDef {
        id: "thm_3_1",
        checks: distortion::THM_3_1,
    },
    SuiteDef {
        id: "cor_3_2",
        checks: distortion::COR_3_2,
    },
    SuiteDef {
        id: "lemma_3_3",
        checks: distortion::LEMMA_3_3,
    },
    SuiteDef {
        id: "ineq_3_4",
        checks: distortion::INEQ_3_4,
    },
    SuiteDef {
        id: "thm_3_5",
        checks: distortion::THM_3_5,
    },
    SuiteDef {
        id: "thm_3_6",
        checks: distortion::THM_3_6,
    },
    SuiteDef {
        id: "thm_3_7",
        checks: distortion::THM_3_7,
    },
    SuiteDef {
        id: "thm_3_8",
        checks: distortion::THM_3_8,
    },
    SuiteDef {
        id: "thm_3_9",
        checks: distortion::THM_3_9,
    },
    SuiteDef {
        id: "remark_3_10",
        checks: distortion::REMARK_3_10,
    },
    SuiteDef {
        id: "lemma_3_11",
        checks: distortion::LEMMA_3_11,
    },
    SuiteDef {
        id: "thm_3_12",
        checks: distortion::THM_3_12,
    },
    SuiteDef {
        id: "cor_3_13",
        checks: distortion::COR_3_13,
    },
    SuiteDef {
        id: "lemma_4_1",
        checks: three_param::LEMMA_4_1,
    },
    SuiteDef {
        id: "lemma_4_2",
        checks: three_param::LEMMA_4_2,
    },
    SuiteDef {
        id: "thm_4_3",
        checks: three_param::THM_4_3,
    },
    SuiteDef {
        id: "lemma_4_4",
        checks: three_param::LEMMA_4_4,
    },
    SuiteDef {
        id: "thm_4_5",
        checks: three_param::THM_4_5,
    },
    SuiteDef {
        id: "fig_1_dominance",
        checks: figures::FIG_1,
    },
    SuiteDef {
        id: "fig_2_crossover",
        checks: figures::FIG_2,
    },
];

pub(crate) const FD_SUITE: &str = "lemma_2_4";

const FD_FORMULAS: [(&str, &str); 7] = [
    ("dK_dr", "2"),
    ("dE_dr", "3"),
    ("dmu_dr", "4"),
    ("dphi_dr", "5"),
    ("dphi_dK", "6"),
    ("deta_dx", "7"),
    ("deta_dK", "8"),
];

pub(crate) fn fd_check_name(formula_id: &str) -> Result<&'static str> {
    FD_FORMULAS
        .iter()
        .find(|(f, _)| *f == formula_id)
        .map(|(_, c)| *c)
        .ok_or_else(|| Error::Unknown(format!("formula {formula_id}")))
}

/// Registered suite identifiers, in run order.
pub fn suite_ids() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.id).collect()
}

/// Check names within a suite, with their kinds.
pub fn check_ids(suite_id: &str) -> Result<Vec<(&'static str, CheckKind)>> {
    SUITES
        .iter()
        .find(|s| s.id == suite_id)
        .map(|s| s.checks.iter().map(|c| (c.name, c.kind)).collect())
        .ok_or_else(|| Error::Unknown(format!("suite {suite_id}")))
}

/// Resolve `suite` or `suite_check` to the suite id and the checks to run.
pub(crate) fn resolve(id: &str) -> Result<(&'static str, Vec<&'static CheckDef>)> {
    if let Some(s) = SUITES.iter().find(|s| s.id == id) {
        return Ok((s.id, s.checks.iter().collect()));
    }
    for s in SUITES {
        if let Some(rest) = id.strip_prefix(s.id).and_then(|r| r.strip_prefix('_')) {
            if let Some(c) = s.checks.iter().find(|c| c.name == rest) {
                return Ok((s.id, vec![c]));
            }
        }
    }
    Err(Error::Unknown(format!("suite {id}")))
}
