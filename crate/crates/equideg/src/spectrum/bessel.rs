use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const SERIES_LIMIT: f64 = 12.0;
const MAX_STEPS: usize = 200;

/// `J_m(x)` for `x >= 0`.
///
/// Ascending series for small arguments, Miller's backward recurrence
/// normalised by `J_0 + 2 Σ J_{2k} = 1` otherwise.
pub fn bessel_j(m: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    if x <= SERIES_LIMIT {
        series(m, x)
    } else {
        miller(m, x)
    }
}

fn series(m: u32, x: f64) -> f64 {
    let h = x / 2.0;
    let mut term = 1.0;
    for k in 1..=m {
        term *= h / k as f64;
    }
    let mut sum = term;
    let q = -h * h;
    for k in 1..200 {
        term *= q / (k as f64 * (k + m) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

fn miller(m: u32, x: f64) -> f64 {
    let start = {
        let n = (x.max(m as f64) + 40.0 + 10.0 * x.sqrt()) as u32;
        n + (n & 1)
    };
    let mut jp1 = 0.0;
    let mut j = 1e-30;
    let mut norm = 0.0;
    let mut wanted = 0.0;
    for k in (0..=start).rev() {
        if k == m {
            wanted = j;
        }
        if k % 2 == 0 {
            norm += if k == 0 { j } else { 2.0 * j };
        }
        if k == 0 {
            break;
        }
        let jm1 = 2.0 * k as f64 / x * j - jp1;
        jp1 = j;
        j = jm1;
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp1 *= 1e-250;
            wanted *= 1e-250;
            norm *= 1e-250;
        }
    }
    wanted / norm
}

/// `J_m'(x)`.
pub fn bessel_j_prime(m: u32, x: f64) -> f64 {
    if m == 0 {
        -bessel_j(1, x)
    } else {
        bessel_j(m - 1, x) - m as f64 / x * bessel_j(m, x)
    }
}

/// The first `count` positive zeros of `J_m`.
///
/// Zeros are bracketed by a sign scan from `x = m` (every zero of `J_m`
/// exceeds `m`) and polished by Newton steps kept inside the bracket.
pub fn bessel_zeros(m: u32, count: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    let step = 0.25;
    let mut lo = (m as f64).max(step);
    let mut flo = bessel_j(m, lo);
    while out.len() < count {
        let hi = lo + step;
        let fhi = bessel_j(m, hi);
        if flo == 0.0 {
            out.push(lo);
        } else if flo.signum() != fhi.signum() {
            out.push(polish(m, lo, hi)?);
        }
        lo = hi;
        flo = fhi;
    }
    Ok(out)
}

fn polish(m: u32, mut a: f64, mut b: f64) -> Result<f64> {
    let fa = bessel_j(m, a);
    let mut x = 0.5 * (a + b);
    for _ in 0..MAX_STEPS {
        let fx = bessel_j(m, x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
        } else {
            b = x;
        }
        let d = bessel_j_prime(m, x);
        let newton = x - fx / d;
        let next = if d != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
        if (next - x).abs() < 1e-15 * x.max(1.0) || b - a < 1e-14 * x.max(1.0) {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::ConvergenceFailure(format!("zero of J_{m} in [{a}, {b}]")))
}

/// `s_{nm}`: the square of the `n`-th positive zero of `J_m` (`n >= 1`).
pub fn bessel_zero_sq(m: u32, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Schema("Bessel zeros are numbered from 1".into()));
    }
    let z = bessel_zeros(m, n)?;
    Ok(z[n - 1] * z[n - 1])
}

/// `s[m][n-1]` for `m <= m_max`, `1 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BesselZeroTable {
    pub m_max: u32,
    pub n_max: usize,
    entries: Vec<Vec<f64>>,
}

impl BesselZeroTable {
    pub fn new(m_max: u32, n_max: usize) -> Result<Self> {
        let entries = (0..=m_max)
            .map(|m| Ok(bessel_zeros(m, n_max)?.into_iter().map(|z| z * z).collect()))
            .collect::<Result<Vec<Vec<f64>>>>()?;
        Ok(Self { m_max, n_max, entries })
    }

    /// `s_{nm}` with `n` counted from 1.
    pub fn get(&self, m: u32, n: usize) -> f64 {
        self.entries[m as usize][n - 1]
    }

    pub fn row(&self, m: u32) -> &[f64] {
        &self.entries[m as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, usize, f64)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(m, row)| row.iter().enumerate().map(move |(n, &s)| (m as u32, n + 1, s)))
    }
}
