use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bounded monotone profile `ζ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Zeta {
    /// `ζ(α) = 1/(1 + e^{-α})`.
    Sigmoid,
    /// Piecewise linear through `(α, ζ)` breakpoints, constant beyond the ends.
    Tabulated { breakpoints: Vec<(f64, f64)> },
}

impl Zeta {
    pub fn validate(&self) -> Result<()> {
        if let Zeta::Tabulated { breakpoints } = self {
            if breakpoints.len() < 2 {
                return Err(Error::Schema("tabulated zeta needs two breakpoints".into()));
            }
            let increasing = breakpoints
                .windows(2)
                .all(|w| w[1].0 > w[0].0 && w[1].1 > w[0].1);
            if !increasing {
                return Err(Error::NonMonotoneCurve(0));
            }
        }
        Ok(())
    }

    pub fn value(&self, alpha: f64) -> f64 {
        match self {
            Zeta::Sigmoid => 1.0 / (1.0 + (-alpha).exp()),
            Zeta::Tabulated { breakpoints: b } => {
                let last = b.len() - 1;
                if alpha <= b[0].0 {
                    return b[0].1;
                }
                if alpha >= b[last].0 {
                    return b[last].1;
                }
                let i = b.partition_point(|p| p.0 <= alpha) - 1;
                let (x0, y0) = b[i];
                let (x1, y1) = b[i + 1];
                y0 + (y1 - y0) * (alpha - x0) / (x1 - x0)
            }
        }
    }

    /// Infimum and supremum; values strictly between are attained once.
    pub fn range(&self) -> (f64, f64) {
        match self {
            Zeta::Sigmoid => (0.0, 1.0),
            Zeta::Tabulated { breakpoints: b } => (b[0].1, b[b.len() - 1].1),
        }
    }

    /// `ζ^{-1}(z)` for `z` in the open range.
    pub fn inverse(&self, z: f64) -> Option<f64> {
        let (lo, hi) = self.range();
        if !(z > lo && z < hi) {
            return None;
        }
        Some(match self {
            Zeta::Sigmoid => (z / (1.0 - z)).ln(),
            Zeta::Tabulated { breakpoints: b } => {
                let i = b.partition_point(|p| p.1 <= z) - 1;
                let (x0, y0) = b[i];
                let (x1, y1) = b[i + 1];
                x0 + (x1 - x0) * (z - y0) / (y1 - y0)
            }
        })
    }
}

/// `μ_j(α) = a + w ζ(α)`, the eigenvalue of `A(α)` on the isotypic block `j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueCurve {
    pub j: usize,
    pub a: f64,
    pub w: f64,
    pub zeta: Zeta,
}

impl EigenvalueCurve {
    pub fn new(j: usize, a: f64, w: f64, zeta: Zeta) -> Result<Self> {
        zeta.validate()?;
        if w == 0.0 || !w.is_finite() || !a.is_finite() {
            return Err(Error::NonMonotoneCurve(j));
        }
        Ok(Self { j, a, w, zeta })
    }

    pub fn value(&self, alpha: f64) -> f64 {
        self.a + self.w * self.zeta.value(alpha)
    }

    /// Open codomain `(inf μ, sup μ)`.
    pub fn codomain(&self) -> (f64, f64) {
        let (lo, hi) = self.zeta.range();
        let (p, q) = (self.a + self.w * lo, self.a + self.w * hi);
        (p.min(q), p.max(q))
    }

    /// The ζ-level `(y - a)/w` at which `μ_j` reaches `y`.
    pub fn zeta_level(&self, y: f64) -> f64 {
        (y - self.a) / self.w
    }

    /// `μ_j^{-1}(y)` when `y` lies in the open codomain.
    pub fn inverse(&self, y: f64) -> Option<f64> {
        self.zeta.inverse(self.zeta_level(y))
    }
}
