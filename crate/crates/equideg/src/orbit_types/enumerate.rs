use std::collections::{BTreeMap, HashMap};

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};

use super::{Ambient, Elem, OrbitType};
use crate::error::{Error, Result};
use crate::finite_group::{CharacterTable, OrthogonalAction};

const TOL: f64 = 1e-9;

/// Concrete orthogonal model of one irreducible `V_j^-` of Γ'.
#[derive(Clone, Debug)]
pub struct IrrepModel {
    pub j: usize,
    pub label: String,
    pub dim: usize,
    pub multiplicity: usize,
    /// Orthonormal basis of the chosen copy inside `V`.
    pub basis: DMatrix<f64>,
    pub matrices: Vec<DMatrix<f64>>,
    pub character: Vec<f64>,
}

/// Splits `V` into one irreducible copy per character that occurs.
///
/// `table` lives on Γ (the first `base_degree` points); the action is on Γ'.
pub fn irrep_models(
    amb: &Ambient,
    action: &OrthogonalAction,
    table: &CharacterTable,
    gamma_elements: &[(usize, usize)],
) -> Result<Vec<IrrepModel>> {
    let g = amb.gamma();
    let n = action.dim();
    let order_base = gamma_elements.len() as f64;
    let mut out = Vec::new();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for j in 0..table.len() {
        let d = table.dim(j);
        let mut p = DMatrix::<f64>::zeros(n, n);
        for &(full, base) in gamma_elements {
            p += action.matrix(full) * table.value(j, base) as f64;
        }
        p *= d as f64 / order_base;
        let rank = p.trace().round() as usize;
        if rank == 0 {
            continue;
        }
        let block = top_eigenvectors(&p, rank);
        let copy = if rank == d {
            block.clone()
        } else {
            let mut s = DMatrix::<f64>::zeros(rank, rank);
            for r in 0..rank {
                for c in r..rank {
                    let v: f64 = rng.gen_range(-1.0..1.0);
                    s[(r, c)] = v;
                    s[(c, r)] = v;
                }
            }
            let lifted = &block * &s * block.transpose();
            let mut avg = DMatrix::<f64>::zeros(n, n);
            for x in 0..g.order() {
                let m = action.matrix(x);
                avg += m * &lifted * m.transpose();
            }
            let inner = block.transpose() * avg * &block;
            let eig = SymmetricEigen::new(inner);
            let mut idx: Vec<usize> = (0..rank).collect();
            idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
            let lead = eig.eigenvalues[idx[0]];
            let cluster: Vec<usize> = idx
                .into_iter()
                .filter(|&i| (eig.eigenvalues[i] - lead).abs() < 1e-6 * (1.0 + lead.abs()))
                .collect();
            if cluster.len() != d {
                return Err(Error::NonIntegralMultiplicity {
                    label: table.labels[j].clone(),
                    value: rank as f64 / d as f64,
                });
            }
            let mut coeff = DMatrix::<f64>::zeros(rank, d);
            for (c, &i) in cluster.iter().enumerate() {
                coeff.set_column(c, &eig.eigenvectors.column(i));
            }
            &block * coeff
        };
        let matrices: Vec<DMatrix<f64>> = (0..g.order())
            .map(|x| copy.transpose() * action.matrix(x) * &copy)
            .collect();
        let character = matrices.iter().map(|m| m.trace()).collect();
        out.push(IrrepModel {
            j,
            label: table.labels[j].clone(),
            dim: d,
            multiplicity: rank / d,
            basis: copy,
            matrices,
            character,
        });
    }
    Ok(out)
}

fn top_eigenvectors(p: &DMatrix<f64>, rank: usize) -> DMatrix<f64> {
    let eig = SymmetricEigen::new(p.clone());
    let mut idx: Vec<usize> = (0..p.nrows()).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let mut out = DMatrix::<f64>::zeros(p.nrows(), rank);
    for (c, &i) in idx.iter().take(rank).enumerate() {
        out.set_column(c, &eig.eigenvectors.column(i));
    }
    out
}

/// Orthonormal basis of the null space.
fn null_space(a: &DMatrix<f64>) -> DMatrix<f64> {
    let cols = a.ncols();
    let a = if a.nrows() < cols {
        let mut p = DMatrix::<f64>::zeros(cols, cols);
        p.view_mut((0, 0), (a.nrows(), cols)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let top = svd.singular_values.iter().copied().fold(1.0f64, f64::max);
    let keep: Vec<usize> = (0..cols).filter(|&i| svd.singular_values[i] < TOL * top).collect();
    let mut out = DMatrix::<f64>::zeros(cols, keep.len());
    for (c, &i) in keep.iter().enumerate() {
        out.set_column(c, &v_t.row(i).transpose());
    }
    out
}

fn projector_key(b: &DMatrix<f64>) -> Vec<i64> {
    let p = b * b.transpose();
    p.iter().map(|x| (x * 1e6).round() as i64).collect()
}

fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a.kronecker(b)
}

fn w_matrix(m: u32, n: u32, e: Elem) -> DMatrix<f64> {
    let th = 2.0 * std::f64::consts::PI * (m as f64) * (e.a as f64) / (n as f64);
    let (s, c) = th.sin_cos();
    let r = DMatrix::from_row_slice(2, 2, &[c, -s, s, c]);
    if e.f == 1 {
        r * DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0])
    } else {
        r
    }
}

fn rotation(th: f64) -> DMatrix<f64> {
    let (s, c) = th.sin_cos();
    DMatrix::from_row_slice(2, 2, &[c, -s, s, c])
}

/// A reflection `(R_φ κ, γ)` fixing `b` whose angle lies off the truncation
/// lattice. Returns the `W_m` rotation angle that conjugates it onto `κ`.
fn off_lattice_reflection(irrep: &IrrepModel, b: &DMatrix<f64>) -> Option<f64> {
    let flip = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
    let swap = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
    for v in &irrep.matrices {
        let x = kron(&flip, v) * b;
        let y = kron(&swap, v) * b;
        let (xx, xy, yy) = (x.dot(&x), x.dot(&y), y.dot(&y));
        let (xb, yb) = (x.dot(b), y.dot(b));
        let det = xx * yy - xy * xy;
        if det.abs() < TOL {
            continue;
        }
        let c = (xb * yy - yb * xy) / det;
        let s = (yb * xx - xb * xy) / det;
        if ((c * c + s * s) - 1.0).abs() > 1e-7 {
            continue;
        }
        if (&x * c + &y * s - b).abs().max() < 1e-7 {
            return Some(-s.atan2(c) / 2.0);
        }
    }
    None
}

fn exponent(amb: &Ambient) -> u32 {
    let g = amb.gamma();
    (0..g.order()).fold(1, |acc, x| super::lcm(acc, g.element_order(x) as u32))
}

/// Isotropy types of nonzero vectors of `W_m ⊗ V_j^-` with fixed dimensions.
///
/// Fixed subspaces of single elements are closed under intersection; the
/// pointwise stabiliser of each resulting subspace is an isotropy group.
pub fn orbit_types(amb: &Ambient, irrep: &IrrepModel, m: u32) -> Result<Vec<(OrbitType, usize)>> {
    let ng = amb.gamma().order() as u32;
    let (level, elems): (u32, Vec<Elem>) = if m == 0 {
        (1, (0..ng).map(|g| Elem { a: 0, f: 0, g }).collect())
    } else {
        let n = m * exponent(amb);
        let mut v = Vec::with_capacity((2 * n * ng) as usize);
        for a in 0..n {
            for f in 0..2 {
                for g in 0..ng {
                    v.push(Elem { a, f, g });
                }
            }
        }
        (n, v)
    };
    let mats: Vec<DMatrix<f64>> = elems
        .iter()
        .map(|&e| {
            let v = &irrep.matrices[e.g as usize];
            if m == 0 {
                v.clone()
            } else {
                kron(&w_matrix(m, level, e), v)
            }
        })
        .collect();
    let d = mats[0].nrows();
    let id = DMatrix::<f64>::identity(d, d);
    let mut spaces: HashMap<Vec<i64>, DMatrix<f64>> = HashMap::new();
    for mx in &mats {
        let b = null_space(&(mx - &id));
        if b.ncols() > 0 {
            spaces.entry(projector_key(&b)).or_insert(b);
        }
    }
    let mut frontier: Vec<DMatrix<f64>> = spaces.values().cloned().collect();
    while !frontier.is_empty() {
        let all: Vec<DMatrix<f64>> = spaces.values().cloned().collect();
        let mut next = Vec::new();
        for b in &frontier {
            let pb = &id - b * b.transpose();
            for c in &all {
                let pc = &id - c * c.transpose();
                let mut stacked = DMatrix::<f64>::zeros(2 * d, d);
                stacked.view_mut((0, 0), (d, d)).copy_from(&pb);
                stacked.view_mut((d, 0), (d, d)).copy_from(&pc);
                let x = null_space(&stacked);
                if x.ncols() == 0 {
                    continue;
                }
                let key = projector_key(&x);
                if !spaces.contains_key(&key) {
                    spaces.insert(key, x.clone());
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    let stabiliser = |b: &DMatrix<f64>| -> Vec<usize> {
        (0..mats.len())
            .filter(|&i| (&mats[i] * b - b).abs().max() < 1e-7)
            .collect()
    };
    let fixed_space = |stab: &[usize]| -> DMatrix<f64> {
        let mut stacked = DMatrix::<f64>::zeros(stab.len().max(1) * d, d);
        for (r, &i) in stab.iter().enumerate() {
            stacked.view_mut((r * d, 0), (d, d)).copy_from(&(&mats[i] - &id));
        }
        null_space(&stacked)
    };
    let id_w = DMatrix::<f64>::identity(irrep.dim, irrep.dim);
    let mut found: BTreeMap<OrbitType, usize> = BTreeMap::new();
    for b in spaces.values() {
        // Re-derive the space as the fixed space of its stabiliser so that
        // near-intersections left by rounding cannot produce spurious pairs.
        let mut stab = stabiliser(b);
        let mut f = fixed_space(&stab);
        if m > 0 && stab.iter().all(|&i| elems[i].f == 0) {
            if let Some(turn) = off_lattice_reflection(irrep, &f) {
                stab = stabiliser(&(kron(&rotation(turn), &id_w) * &f));
                f = fixed_space(&stab);
            }
        }
        let t = if m == 0 {
            let members: Vec<usize> = stab.iter().map(|&i| elems[i].g as usize).collect();
            OrbitType::Product(amb.class_of(&amb.gamma().subgroup(&members)?))
        } else {
            let mut codes: Vec<u32> = stab.iter().map(|&i| amb.encode(elems[i])).collect();
            codes.sort_unstable();
            OrbitType::Finite(amb.canonicalize(level, &codes))
        };
        let dim = amb.fixed_dim(&t, m, &irrep.character)?;
        if dim != f.ncols() {
            return Err(Error::CrossCheckMismatch {
                what: format!("fixed dimension of {} in V_{{{m},{}}}", amb.symbol(&t), irrep.j),
                fast: dim as i64,
                product: f.ncols() as i64,
            });
        }
        found.insert(t, dim);
    }
    let mut out: Vec<(OrbitType, usize)> = found.into_iter().collect();
    out.sort_by_key(|(t, _)| std::cmp::Reverse(amb.sort_key(t)));
    Ok(out)
}
