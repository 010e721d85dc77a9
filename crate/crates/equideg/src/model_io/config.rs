use serde::{Deserialize, Serialize};

use crate::bifurcation::Mode;
use crate::error::{Error, Result};
use crate::spectrum::Zeta;

/// Top-level model description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    pub name: String,
    pub group: GroupConfig,
    pub action: ActionConfig,
    pub linearization: LinearizationConfig,
    #[serde(default)]
    pub horizon: HorizonConfig,
    #[serde(default)]
    pub analysis: AnalysisConfig,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    /// Number of points Γ permutes.
    pub degree: usize,
    pub gamma_generators: Vec<String>,
    #[serde(default)]
    pub antipodal: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subgroup_names: Vec<NameEntry>,
    pub character_table: CharacterTableConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NameEntry {
    pub name: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterTableConfig {
    pub labels: Vec<String>,
    pub class_representatives: Vec<String>,
    pub characters: Vec<Vec<i64>>,
}

/// Images of the Γ generators, as permutations of coordinates or as matrices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ActionConfig {
    Permutation { degree: usize, images: Vec<String> },
    Matrices { matrices: Vec<Vec<Vec<f64>>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearizationConfig {
    pub a: f64,
    #[serde(alias = "coupling_matrix")]
    pub coupling: CouplingConfig,
    pub zeta: Zeta,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CouplingConfig {
    Matrix(Vec<Vec<f64>>),
    /// `C = c·Id + d·adjacency`.
    Template {
        template: Template,
        c: f64,
        d: f64,
        adjacency: Vec<Vec<f64>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Template {
    Adjacency,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HorizonConfig {
    pub m_max: u32,
    pub n_max: usize,
}

impl Default for HorizonConfig {
    fn default() -> Self {
        Self { m_max: 12, n_max: 12 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisConfig {
    /// Restricts reports to one mode; both are computed when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default)]
    pub k_fixed: bool,
    #[serde(default = "default_bracket")]
    pub alpha_bracket: f64,
}

fn default_bracket() -> f64 {
    1.0
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            mode: None,
            k_fixed: false,
            alpha_bracket: 1.0,
        }
    }
}

impl AnalysisConfig {
    pub fn modes(&self) -> Vec<Mode> {
        match self.mode {
            Some(m) => vec![m],
            None => vec![Mode::Full, Mode::Relative],
        }
    }
}

impl ModelConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: impl AsRef<std::path::Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Shape checks that need no group theory.
    pub fn validate(&self) -> Result<()> {
        let k = self.coupling_matrix().len();
        if k == 0 {
            return Err(Error::Schema("empty coupling matrix".into()));
        }
        if self.coupling_matrix().iter().any(|row| row.len() != k) {
            return Err(Error::Schema("coupling matrix is not square".into()));
        }
        if !(self.analysis.alpha_bracket > 0.0) {
            return Err(Error::Schema("alpha_bracket must be positive".into()));
        }
        if !self.linearization.a.is_finite() {
            return Err(Error::Schema("a must be finite".into()));
        }
        self.linearization.zeta.validate()
    }

    /// The coupling matrix `C` with `A(α) = a·Id + ζ(α)·C`.
    pub fn coupling_matrix(&self) -> Vec<Vec<f64>> {
        match &self.linearization.coupling {
            CouplingConfig::Matrix(m) => m.clone(),
            CouplingConfig::Template { c, d, adjacency, .. } => adjacency
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &x)| d * x + if i == j { *c } else { 0.0 })
                        .collect()
                })
                .collect(),
        }
    }
}
