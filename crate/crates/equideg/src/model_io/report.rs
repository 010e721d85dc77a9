use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CouplingBlock, Model, ModelConfig};
use crate::bifurcation::{rabinowitz_sum, Conclusion, Mode, DIRECTION_ALTERNATIVE};
use crate::burnside::{to_term_list, Term};
use crate::error::{Error, Result};
use crate::spectrum::{CriticalPoint, Triple};

pub const BRANCH_STATEMENT: &str = "branch of non-radial solutions bifurcating from (alpha0, 0) \
with symmetries at least";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsotypicRow {
    pub j: usize,
    pub label: String,
    pub multiplicity: usize,
    pub weight: Option<f64>,
    pub eigenvalue_multiplicity: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub id: Triple,
    pub alpha: f64,
    pub mode: Mode,
    pub k_fixed: bool,
    pub alpha_minus: f64,
    pub alpha_plus: f64,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub id: Triple,
    pub orbit_type: String,
    pub n_minus: BTreeMap<u32, usize>,
    pub n_plus: BTreeMap<u32, usize>,
    pub m_minus: BTreeMap<u32, usize>,
    pub m_plus: BTreeMap<u32, usize>,
    pub indicator: BTreeMap<u32, i8>,
    pub max_folding: Option<u32>,
    pub x0: i64,
    /// Closed-form coefficient of the maximally folded type in the invariant.
    pub closed_form: Option<i64>,
    /// Closed-form coefficients over `Σ^s` on either side, when applicable.
    pub side_coefficients: Option<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub id: Triple,
    pub alpha: f64,
    pub orbit_type: String,
    pub folding: u32,
    pub symmetry: String,
    pub coefficient: i64,
    pub statement: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub orbit_type: String,
    pub max_folding: Option<u32>,
    pub members: Vec<Triple>,
    pub odd: bool,
    pub conclusion: Conclusion,
    pub symmetry: Option<String>,
    pub alternative: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SumRecord {
    pub mode: Mode,
    pub terms: Vec<Term>,
}

/// Everything the pipeline derives from one model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BifurcationReport {
    pub model: ModelConfig,
    pub isotypic: Vec<IsotypicRow>,
    pub critical_points: Vec<CriticalPoint>,
    pub invariants: Vec<InvariantRecord>,
    pub profiles: Vec<ProfileRecord>,
    pub certificates: Vec<CertificateRecord>,
    pub verdicts: Vec<VerdictRecord>,
    pub rabinowitz_sum: Vec<SumRecord>,
    pub flags: Vec<String>,
    pub warnings: Vec<String>,
}

impl BifurcationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }
}

fn isotypic_rows(model: &Model) -> Vec<IsotypicRow> {
    model
        .decomposition
        .iter()
        .enumerate()
        .map(|(j, (label, mult))| {
            let block: Option<&CouplingBlock> = model.blocks.iter().find(|b| b.j == j);
            IsotypicRow {
                j,
                label: label.clone(),
                multiplicity: *mult,
                weight: block.map(|b| b.weight),
                eigenvalue_multiplicity: block.map(|b| b.multiplicity),
            }
        })
        .collect()
}

/// Runs the whole pipeline. Cross-check mismatches are recorded in `flags`
/// instead of aborting; every other error propagates.
pub fn run_report(model: &Model) -> Result<BifurcationReport> {
    let amb = model.ambient();
    let problem = model.problem()?;
    let analysis = &model.config.analysis;
    let active = problem.active_critical_points();
    let mut flags = Vec::new();
    let mut warnings: Vec<String> = model.config.notes.clone();
    if analysis.k_fixed {
        warnings.push(
            "K-fixed analysis: only odd frequencies enter the index sets; ring elements live in \
             the Burnside ring of O(2) x Gamma'"
                .into(),
        );
    }
    if analysis.modes().contains(&Mode::Relative) {
        let bg: Vec<String> = problem.background().iter().map(|t| t.to_string()).collect();
        warnings.push(format!(
            "relative mode divides out the background factors {}",
            if bg.is_empty() { "(none)".to_string() } else { bg.join(" ") }
        ));
    }

    let mut invariants = Vec::new();
    let mut sums = Vec::new();
    for mode in analysis.modes() {
        let mut values = Vec::new();
        for cp in &active {
            let w = problem.local_invariant(cp, mode)?;
            invariants.push(InvariantRecord {
                id: w.id,
                alpha: w.alpha,
                mode,
                k_fixed: w.k_fixed,
                alpha_minus: w.alpha_minus,
                alpha_plus: w.alpha_plus,
                terms: to_term_list(&w.value, amb),
            });
            values.push(w);
        }
        sums.push(SumRecord {
            mode,
            terms: to_term_list(&rabinowitz_sum(&values), amb),
        });
    }

    let maximal = problem.maximal_types()?;
    let mut profiles = Vec::new();
    for cp in &active {
        for h in &maximal {
            let p = problem.folding_profile(cp, h)?;
            let mut closed_form = None;
            let mut side_coefficients = None;
            if let Some(s) = p.s {
                match problem.closed_form_coeff(cp, h, s) {
                    Ok(c) => closed_form = Some(c),
                    Err(e @ Error::CrossCheckMismatch { .. }) => flags.push(e.to_string()),
                    Err(e) => return Err(e),
                }
                match problem.factor_coeffs(cp, h, s) {
                    Ok(c) => side_coefficients = c,
                    Err(e @ Error::CrossCheckMismatch { .. }) => flags.push(e.to_string()),
                    Err(e) => return Err(e),
                }
            }
            profiles.push(ProfileRecord {
                id: cp.id,
                orbit_type: amb.symbol(h),
                n_minus: p.n_minus,
                n_plus: p.n_plus,
                m_minus: p.m_minus,
                m_plus: p.m_plus,
                indicator: p.i,
                max_folding: p.s,
                x0: p.x0,
                closed_form,
                side_coefficients,
            });
        }
    }

    let mut certificates = Vec::new();
    for cp in &active {
        for c in problem.branch_certificates(cp)? {
            certificates.push(CertificateRecord {
                id: c.id,
                alpha: c.alpha,
                orbit_type: amb.symbol(&c.orbit_type),
                folding: c.folding,
                symmetry: amb.symbol(&c.symmetry),
                coefficient: c.coefficient,
                statement: format!("{BRANCH_STATEMENT} {}", amb.symbol(&c.symmetry)),
            });
        }
    }

    let mut verdicts = Vec::new();
    for h in &maximal {
        let v = problem.global_verdict(h)?;
        let unbounded = v.conclusion == Conclusion::UnboundedBranch;
        verdicts.push(VerdictRecord {
            orbit_type: amb.symbol(h),
            max_folding: v.s_bar,
            members: v.j_set.iter().map(|c| c.id).collect(),
            odd: v.odd,
            conclusion: v.conclusion,
            symmetry: v.symmetry.as_ref().map(|t| amb.symbol(t)),
            alternative: unbounded.then(|| DIRECTION_ALTERNATIVE.to_string()),
        });
    }

    Ok(BifurcationReport {
        model: model.config.clone(),
        isotypic: isotypic_rows(model),
        critical_points: problem.critical_points().to_vec(),
        invariants,
        profiles,
        certificates,
        verdicts,
        rabinowitz_sum: sums,
        flags,
        warnings,
    })
}
