//! Dirichlet spectrum of the disc, eigenvalue curves of the linearization,
//! critical points and index sets.

mod bessel;
mod curve;
mod kernel;

pub use bessel::{bessel_j, bessel_j_prime, bessel_zero_sq, bessel_zeros, BesselZeroTable};
pub use curve::{EigenvalueCurve, Zeta};
pub use kernel::KernelMode;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index `(n, m, j)`: Bessel zero `n`, O(2)-frequency `m`, isotypic block `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32, usize)", into = "(u32, u32, usize)")]
pub struct Triple {
    pub n: u32,
    pub m: u32,
    pub j: usize,
}

impl Triple {
    pub fn new(n: u32, m: u32, j: usize) -> Self {
        Self { n, m, j }
    }
}

impl From<(u32, u32, usize)> for Triple {
    fn from((n, m, j): (u32, u32, usize)) -> Self {
        Self { n, m, j }
    }
}

impl From<Triple> for (u32, u32, usize) {
    fn from(t: Triple) -> Self {
        (t.n, t.m, t.j)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.m, self.j)
    }
}

impl std::str::FromStr for Triple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim_matches(|c| c == '(' || c == ')').split(',').collect();
        let bad = || Error::Schema(format!("expected n,m,j but got {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        Ok(Self {
            n: parts[0].trim().parse().map_err(|_| bad())?,
            m: parts[1].trim().parse().map_err(|_| bad())?,
            j: parts[2].trim().parse().map_err(|_| bad())?,
        })
    }
}

/// `α_{n,m,j} = μ_j^{-1}(s_{nm})`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub id: Triple,
    pub alpha: f64,
    pub zeta_level: f64,
    pub s: f64,
}

/// `ξ_{n,m,j}(α) = 1 - μ_j(α)/s_{nm}`.
pub fn eigenvalue_xi(curve: &EigenvalueCurve, s: f64, alpha: f64) -> f64 {
    1.0 - curve.value(alpha) / s
}

/// Smallest horizon that captures every `s_{nm}` below `sup`.
pub fn required_horizon(sup: f64) -> Result<(u32, usize)> {
    let mut m = 0u32;
    while (m * (m + 2)) as f64 <= sup {
        m += 1;
    }
    let mut n = 1usize;
    loop {
        let zeros = bessel_zeros(0, n)?;
        if zeros[n - 1] * zeros[n - 1] > sup {
            break;
        }
        n += 1;
    }
    Ok((m, n))
}

fn check_horizon(curves: &[EigenvalueCurve], table: &BesselZeroTable) -> Result<()> {
    let sup = curves.iter().map(|c| c.codomain().1).fold(f64::NEG_INFINITY, f64::max);
    if !sup.is_finite() {
        return Ok(());
    }
    let m_ok = (table.m_max * (table.m_max + 2)) as f64 > sup;
    let n_ok = (0..=table.m_max).all(|m| table.get(m, table.n_max) > sup);
    if m_ok && n_ok {
        return Ok(());
    }
    let (m, n) = required_horizon(sup)?;
    Err(Error::InsufficientHorizon {
        m_max: m.max(table.m_max) as usize,
        n_max: n.max(table.n_max),
    })
}

/// Critical points of all curves, sorted by `α`.
pub fn critical_points(curves: &[EigenvalueCurve], table: &BesselZeroTable) -> Result<Vec<CriticalPoint>> {
    check_horizon(curves, table)?;
    let mut out = Vec::new();
    for c in curves {
        let (lo, hi) = c.codomain();
        for (m, n, s) in table.iter() {
            if s > lo && s < hi {
                if let Some(alpha) = c.inverse(s) {
                    out.push(CriticalPoint {
                        id: Triple::new(n as u32, m, c.j),
                        alpha,
                        zeta_level: c.zeta_level(s),
                        s,
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| a.alpha.total_cmp(&b.alpha).then(a.id.cmp(&b.id)));
    Ok(out)
}

/// `Σ_-(α)`, `Σ(α)` and `Σ^K(α)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexSets {
    pub alpha: f64,
    pub sigma_minus: Vec<Triple>,
    pub sigma: Vec<Triple>,
    pub sigma_k: Vec<Triple>,
}

/// Curves, multiplicities and a Bessel table large enough for them.
#[derive(Clone, Debug)]
pub struct Spectrum {
    curves: Vec<EigenvalueCurve>,
    multiplicities: Vec<(usize, usize)>,
    table: BesselZeroTable,
}

impl Spectrum {
    /// Builds the table at the requested horizon, enlarged when the curves
    /// reach beyond it.
    pub fn new(
        curves: Vec<EigenvalueCurve>,
        multiplicities: Vec<(usize, usize)>,
        m_max: u32,
        n_max: usize,
    ) -> Result<Self> {
        let sup = curves.iter().map(|c| c.codomain().1).fold(0.0, f64::max);
        let (m_need, n_need) = required_horizon(sup)?;
        let table = BesselZeroTable::new(m_max.max(m_need), n_max.max(n_need))?;
        check_horizon(&curves, &table)?;
        Ok(Self {
            curves,
            multiplicities,
            table,
        })
    }

    pub fn table(&self) -> &BesselZeroTable {
        &self.table
    }

    pub fn curves(&self) -> &[EigenvalueCurve] {
        &self.curves
    }

    pub fn curve(&self, j: usize) -> Option<&EigenvalueCurve> {
        self.curves.iter().find(|c| c.j == j)
    }

    pub fn multiplicity(&self, j: usize) -> usize {
        self.multiplicities
            .iter()
            .find(|(k, _)| *k == j)
            .map_or(0, |(_, m)| *m)
    }

    pub fn critical_points(&self) -> Result<Vec<CriticalPoint>> {
        critical_points(&self.curves, &self.table)
    }

    pub fn index_sets(&self, alpha: f64) -> Result<IndexSets> {
        let mut sigma_minus = Vec::new();
        for c in &self.curves {
            let mu = c.value(alpha);
            for (m, n, s) in self.table.iter() {
                let xi = 1.0 - mu / s;
                if xi.abs() < 1e-13 {
                    return Err(Error::AlphaIsCritical(alpha));
                }
                if xi < 0.0 {
                    sigma_minus.push(Triple::new(n as u32, m, c.j));
                }
            }
        }
        sigma_minus.sort();
        let sigma: Vec<Triple> = sigma_minus
            .iter()
            .copied()
            .filter(|t| self.multiplicity(t.j) % 2 == 1)
            .collect();
        let sigma_k = sigma.iter().copied().filter(|t| t.m % 2 == 1).collect();
        Ok(IndexSets {
            alpha,
            sigma_minus,
            sigma,
            sigma_k,
        })
    }
}

/// Constants `c = a π^{1/2 - ν/q} ‖L^{-1}‖` and `d = b √π ‖L^{-1}‖` of the
/// a-priori estimate `t <= c t^ν + d`.
pub fn a_priori_constants(a: f64, b: f64, nu: f64, q: f64, op_norm: f64) -> (f64, f64) {
    let pi = std::f64::consts::PI;
    (a * pi.powf(0.5 - nu / q) * op_norm, b * pi.sqrt() * op_norm)
}

/// `(R_0, R)` where `R_0` is the largest root of `t - c t^ν - d` and
/// `R = c R_0^ν + d`.
pub fn a_priori_radius_from_constants(c: f64, d: f64, nu: f64) -> (f64, f64) {
    let psi = |t: f64| t - c * t.powf(nu) - d;
    let mut lo = if c > 0.0 { (c * nu).powf(1.0 / (1.0 - nu)) } else { 0.0 };
    let mut hi = lo.max(d).max(1.0);
    while psi(hi) <= 0.0 {
        hi *= 2.0;
    }
    if psi(lo) >= 0.0 {
        hi = lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if psi(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-15 * hi.max(1.0) {
            break;
        }
    }
    let r0 = hi;
    (r0, c * r0.powf(nu) + d)
}

/// A-priori bound `R(α)` on solutions, `‖u‖ < R(α)`.
///
/// `op_norm` is `‖L^{-1}‖`; the Dirichlet Laplacian on the unit disc gives
/// `1/s_{10}` in `L^2`.
pub fn a_priori_radius(a: f64, b: f64, nu: f64, q: f64, op_norm: f64) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) || q <= 1.0f64.max(2.0 * nu) || a < 0.0 || b < 0.0 || op_norm <= 0.0 {
        return Err(Error::Schema("a-priori bound needs 0<nu<1, q>max(1,2nu), a,b>=0".into()));
    }
    let (c, d) = a_priori_constants(a, b, nu, q, op_norm);
    Ok(a_priori_radius_from_constants(c, d, nu).1)
}

/// Default `‖L^{-1}‖ = 1/s_{10}`.
pub fn default_op_norm() -> Result<f64> {
    Ok(1.0 / bessel_zero_sq(0, 1)?)
}
