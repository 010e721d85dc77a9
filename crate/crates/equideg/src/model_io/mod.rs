//! Configuration ingestion, model assembly and reports.

mod config;
mod report;

pub use config::{
    ActionConfig, AnalysisConfig, CharacterTableConfig, CouplingConfig, GroupConfig, HorizonConfig,
    LinearizationConfig, ModelConfig, NameEntry, Template,
};
pub use report::{
    run_report, BifurcationReport, CertificateRecord, InvariantRecord, IsotypicRow, ProfileRecord,
    SumRecord, VerdictRecord, BRANCH_STATEMENT,
};

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::bifurcation::Problem;
use crate::degrees::DegreeBook;
use crate::error::{Error, Result};
use crate::finite_group::{
    group_from_generators, isotypic_decompose, CharacterTable, FiniteGroup, OrthogonalAction, Permutation,
};
use crate::orbit_types::{irrep_models, Ambient, OrbitType, SubgroupName};
use crate::spectrum::{EigenvalueCurve, KernelMode, Spectrum, Triple};

const EQUIVARIANCE_TOL: f64 = 1e-12;
const SCALAR_TOL: f64 = 1e-9;

/// One isotypic block of the coupling matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CouplingBlock {
    pub j: usize,
    pub label: String,
    pub weight: f64,
    /// Dimension of the block, the multiplicity of `weight` as an eigenvalue of `C`.
    pub multiplicity: usize,
}

/// An assembled model ready for analysis.
pub struct Model {
    pub config: ModelConfig,
    pub gamma: FiniteGroup,
    pub table: CharacterTable,
    pub action: OrthogonalAction,
    pub decomposition: Vec<(String, usize)>,
    pub coupling: DMatrix<f64>,
    pub blocks: Vec<CouplingBlock>,
    pub book: DegreeBook,
    pub spectrum: Spectrum,
}

fn matrix_from_rows(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Schema("matrix is not square".into()));
    }
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}

/// Loads and assembles a model from a JSON file.
pub fn load_model(path: impl AsRef<std::path::Path>) -> Result<Model> {
    Model::new(ModelConfig::from_path(path)?)
}

impl Model {
    pub fn new(config: ModelConfig) -> Result<Self> {
        config.validate()?;
        let g = &config.group;
        let gens = g
            .gamma_generators
            .iter()
            .map(|s| Permutation::from_cycles(s, g.degree))
            .collect::<Result<Vec<_>>>()?;
        let gamma = group_from_generators(g.degree, &gens)?;
        let ct = &g.character_table;
        let reps = ct
            .class_representatives
            .iter()
            .map(|s| Permutation::from_cycles(s, g.degree))
            .collect::<Result<Vec<_>>>()?;
        let table = CharacterTable::new(&gamma, ct.labels.clone(), reps, ct.characters.clone())?;

        let gen_mats = generator_matrices(&config.action, gens.len())?;
        let action = OrthogonalAction::from_generators(&gamma, &gen_mats)?;
        let k = action.dim();
        let coupling = matrix_from_rows(&config.coupling_matrix())?;
        if coupling.nrows() != k {
            return Err(Error::Schema(format!(
                "coupling matrix is {0}x{0} but the action has dimension {k}",
                coupling.nrows()
            )));
        }
        if (&coupling - coupling.transpose()).abs().max() > EQUIVARIANCE_TOL {
            return Err(Error::Schema("coupling matrix is not symmetric".into()));
        }
        for m in &gen_mats {
            let err = (m * &coupling - &coupling * m).abs().max();
            if err > EQUIVARIANCE_TOL {
                return Err(Error::EquivarianceViolation(err));
            }
        }
        let decomposition = isotypic_decompose(&gamma, &action, &table)?;
        let blocks = coupling_blocks(&gamma, &action, &table, &coupling)?;

        let names: Vec<SubgroupName> = g
            .subgroup_names
            .iter()
            .map(|e| SubgroupName {
                name: e.name.clone(),
                generators: e.generators.clone(),
            })
            .collect();
        let amb = Ambient::new(&gamma, g.antipodal, &names, Some(table.clone()))?;
        let full_action = lift_action(&amb, &gamma, &action)?;
        let pairs = base_pairs(&amb, &gamma);
        let irreps = irrep_models(&amb, &full_action, &table, &pairs)?;

        let curves = blocks
            .iter()
            .map(|b| EigenvalueCurve::new(b.j, config.linearization.a, b.weight, config.linearization.zeta.clone()))
            .collect::<Result<Vec<_>>>()?;
        let mults = decomposition
            .iter()
            .enumerate()
            .filter(|(_, (_, m))| *m > 0)
            .map(|(j, (_, m))| (j, *m))
            .collect();
        let spectrum = Spectrum::new(curves, mults, config.horizon.m_max, config.horizon.n_max)?;
        let book = DegreeBook::new(Arc::new(amb), irreps);
        Ok(Self {
            config,
            gamma,
            table,
            action,
            decomposition,
            coupling,
            blocks,
            book,
            spectrum,
        })
    }

    pub fn ambient(&self) -> &Ambient {
        self.book.ambient()
    }

    pub fn problem(&self) -> Result<Problem<'_>> {
        Problem::new(
            &self.book,
            &self.spectrum,
            self.config.analysis.k_fixed,
            self.config.analysis.alpha_bracket,
        )
    }

    /// Resolves a rendered symbol, rendering the orbit types of every
    /// irreducible at `m = 0, 1` and at the critical frequencies first.
    pub fn orbit_type(&self, symbol: &str) -> Result<OrbitType> {
        let amb = self.ambient();
        if let Ok(t) = amb.lookup(symbol) {
            return Ok(t);
        }
        let mut levels: Vec<u32> = vec![0, 1];
        levels.extend(self.spectrum.critical_points()?.iter().map(|c| c.id.m));
        levels.sort_unstable();
        levels.dedup();
        for irrep in self.book.irreps() {
            for &m in &levels {
                for (t, _) in self.book.orbit_types(m, irrep.j)?.iter() {
                    amb.symbol(t);
                }
            }
        }
        amb.symbol(&amb.whole());
        amb.lookup(symbol)
    }

    /// `(j, weight, multiplicity)` for every block of `C`.
    pub fn coupling_spectrum(&self) -> Vec<(usize, f64, usize)> {
        self.blocks.iter().map(|b| (b.j, b.weight, b.multiplicity)).collect()
    }

    /// The kernel mode at critical triple `id` spanning the fixed space of
    /// `orbit_type` inside `W_m ⊗ V_j`.
    pub fn kernel_mode(&self, id: Triple, orbit_type: &OrbitType) -> Result<KernelMode> {
        let s = self.spectrum.table().get(id.m, id.n as usize);
        let irrep = self.book.irrep(id.j)?;
        let amb = self.ambient();
        let d = irrep.dim;
        let (elems, level) = match orbit_type {
            OrbitType::Finite(ft) => (amb.elements_of(orbit_type)?, ft.level()),
            OrbitType::Product(c) => {
                if id.m != 0 {
                    return Err(Error::Schema(format!(
                        "{} fixes nothing at m = {}",
                        amb.symbol(orbit_type),
                        id.m
                    )));
                }
                let members = amb.classes()[*c].representative.members().to_vec();
                let els = members
                    .into_iter()
                    .map(|g| crate::orbit_types::Elem { a: 0, f: 0, g: g as u32 })
                    .collect();
                (els, 1)
            }
        };
        let (rows, w) = if id.m == 0 { (d, 1) } else { (2 * d, 2) };
        let mut p = DMatrix::<f64>::zeros(rows, rows);
        for e in &elems {
            let v = &irrep.matrices[e.g as usize];
            p += if id.m == 0 {
                v.clone()
            } else {
                let th = 2.0 * std::f64::consts::PI * (id.m * e.a) as f64 / level as f64;
                let (sn, cs) = th.sin_cos();
                let mut r = DMatrix::from_row_slice(2, 2, &[cs, -sn, sn, cs]);
                if e.f == 1 {
                    r *= DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
                }
                r.kronecker(v)
            };
        }
        p /= elems.len() as f64;
        let eig = nalgebra::SymmetricEigen::new(p);
        let best = (0..rows)
            .max_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]))
            .expect("nonempty");
        if eig.eigenvalues[best] < 0.5 {
            return Err(Error::Schema(format!(
                "{} has no fixed vector in V_{{{},{}}}",
                amb.symbol(orbit_type),
                id.m,
                id.j
            )));
        }
        let mut x: DVector<f64> = eig.eigenvectors.column(best).into_owned();
        let pivot = x.iter().copied().fold(0.0f64, |acc, v| if v.abs() > acc.abs() + 1e-12 { v } else { acc });
        if pivot < 0.0 {
            x = -x;
        }
        let ca = irrep.basis.clone() * x.rows(0, d);
        let cb = if w == 2 {
            irrep.basis.clone() * x.rows(d, d)
        } else {
            DVector::zeros(ca.len())
        };
        let clean = |v: DVector<f64>| v.map(|t| if t.abs() < 1e-13 { 0.0 } else { t });
        Ok(KernelMode::new(s, id.m, clean(ca), clean(cb)))
    }
}

fn generator_matrices(action: &ActionConfig, count: usize) -> Result<Vec<DMatrix<f64>>> {
    let mats = match action {
        ActionConfig::Permutation { degree, images } => images
            .iter()
            .map(|s| Ok(Permutation::from_cycles(s, *degree)?.matrix()))
            .collect::<Result<Vec<_>>>()?,
        ActionConfig::Matrices { matrices } => matrices
            .iter()
            .map(|m| matrix_from_rows(m))
            .collect::<Result<Vec<_>>>()?,
    };
    if mats.len() != count {
        return Err(Error::Schema(format!(
            "action lists {} generator images for {count} generators",
            mats.len()
        )));
    }
    Ok(mats)
}

/// Action of Γ' = Γ (× Z2) with the antipode acting as `-Id`.
fn lift_action(amb: &Ambient, gamma: &FiniteGroup, action: &OrthogonalAction) -> Result<OrthogonalAction> {
    let full = amb.gamma();
    let base = amb.base_degree();
    let mats = full
        .generators()
        .map(|p| {
            let core = Permutation::new(p.images()[..base].to_vec())?;
            let idx = gamma
                .index_of(&core)
                .ok_or_else(|| Error::Schema("generator does not restrict to Γ".into()))?;
            let m = action.matrix(idx).clone();
            Ok(if p.degree() > base && p.image(base) != base { -m } else { m })
        })
        .collect::<Result<Vec<_>>>()?;
    OrthogonalAction::from_generators(full, &mats)
}

/// `(index in Γ', index in Γ)` for the elements of Γ' fixing the antipodal points.
fn base_pairs(amb: &Ambient, gamma: &FiniteGroup) -> Vec<(usize, usize)> {
    let base = amb.base_degree();
    amb.gamma()
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, p)| (base..p.degree()).all(|i| p.image(i) == i))
        .filter_map(|(i, p)| {
            let core = Permutation::new(p.images()[..base].to_vec()).ok()?;
            gamma.index_of(&core).map(|b| (i, b))
        })
        .collect()
}

fn coupling_blocks(
    gamma: &FiniteGroup,
    action: &OrthogonalAction,
    table: &CharacterTable,
    c: &DMatrix<f64>,
) -> Result<Vec<CouplingBlock>> {
    let n = action.dim();
    let mut out = Vec::new();
    for j in 0..table.len() {
        let mut p = DMatrix::<f64>::zeros(n, n);
        for x in 0..gamma.order() {
            p += action.matrix(x) * table.value(j, x) as f64;
        }
        p *= table.dim(j) as f64 / gamma.order() as f64;
        let rank = p.trace().round() as usize;
        if rank == 0 {
            continue;
        }
        let weight = (c * &p).trace() / rank as f64;
        let err = (c * &p - &p * weight).abs().max();
        if err > SCALAR_TOL {
            return Err(Error::NonScalarIsotypicBlock(j));
        }
        out.push(CouplingBlock {
            j,
            label: table.labels[j].clone(),
            weight,
            multiplicity: rank,
        });
    }
    Ok(out)
}
