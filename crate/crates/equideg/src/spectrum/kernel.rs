use nalgebra::DVector;

use super::bessel::bessel_j;
use crate::finite_group::Permutation;

/// Kernel eigenfunction `J_m(√s r)(cos(mθ) a + sin(mθ) b)` with `a, b ∈ V`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelMode {
    pub s: f64,
    pub m: u32,
    pub a: DVector<f64>,
    pub b: DVector<f64>,
}

impl KernelMode {
    pub fn new(s: f64, m: u32, a: DVector<f64>, b: DVector<f64>) -> Self {
        assert_eq!(a.len(), b.len(), "mode vectors must share a dimension");
        Self { s, m, a, b }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn value(&self, r: f64, theta: f64) -> DVector<f64> {
        let radial = bessel_j(self.m, self.s.sqrt() * r);
        let (sin, cos) = (self.m as f64 * theta).sin_cos();
        (&self.a * cos + &self.b * sin) * radial
    }

    /// The mode transformed by a coordinate permutation, `(σu)_i = u_{σ(i)}`.
    pub fn permuted(&self, p: &Permutation) -> Self {
        let m = p.matrix();
        Self {
            s: self.s,
            m: self.m,
            a: &m * &self.a,
            b: &m * &self.b,
        }
    }

    /// Equality of coefficient vectors.
    pub fn same_coefficients(&self, other: &Self) -> bool {
        self.m == other.m && self.a == other.a && self.b == other.b
    }

    /// Polar grid `r_i = i/(n-1)`, `θ_k = 2πk/n`, row-major in `r`.
    pub fn grid(&self, n: usize) -> Vec<(f64, f64, DVector<f64>)> {
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            let r = if n > 1 { i as f64 / (n - 1) as f64 } else { 0.0 };
            for k in 0..n {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                out.push((r, theta, self.value(r, theta)));
            }
        }
        out
    }

    /// CSV with header `r,theta,u1..uk`.
    pub fn grid_csv(&self, n: usize) -> String {
        let mut s = String::from("r,theta");
        for i in 1..=self.dim() {
            s.push_str(&format!(",u{i}"));
        }
        s.push('\n');
        for (r, theta, u) in self.grid(n) {
            s.push_str(&format!("{r},{theta}"));
            for x in u.iter() {
                s.push_str(&format!(",{x}"));
            }
            s.push('\n');
        }
        s
    }

    /// Largest deviation of `u(r, θ + shift)` from `sign · u(r, θ)` on the grid.
    pub fn rotation_residual(&self, n: usize, shift: f64, sign: f64) -> f64 {
        self.grid(n)
            .into_iter()
            .map(|(r, t, u)| (self.value(r, t + shift) - u * sign).amax())
            .fold(0.0, f64::max)
    }

    /// Largest deviation of `u(r, -θ)` from `u(r, θ)` on the grid.
    pub fn reflection_residual(&self, n: usize) -> f64 {
        self.grid(n)
            .into_iter()
            .map(|(r, t, u)| (self.value(r, -t) - u).amax())
            .fold(0.0, f64::max)
    }
}
