mod common;

use nalgebra::DMatrix;

use common::{model, BUNDLED};
use equideg::bifurcation::{rabinowitz_sum, Conclusion, Mode};
use equideg::finite_group::Permutation;
use equideg::model_io::{ActionConfig, AnalysisConfig, CouplingConfig, LinearizationConfig, Model, ModelConfig};
use equideg::spectrum::{Triple, Zeta};
use equideg::BurnsideElement;

/// Orthonormal basis of the sum-zero hyperplane of `R^n`, as rows.
fn helmert(n: usize) -> DMatrix<f64> {
    let mut b = DMatrix::zeros(n - 1, n);
    for k in 1..n {
        let norm = ((k * k + k) as f64).sqrt();
        for i in 0..k {
            b[(k - 1, i)] = 1.0 / norm;
        }
        b[(k - 1, k)] = -(k as f64) / norm;
    }
    b
}

fn block_diag(blocks: &[DMatrix<f64>]) -> DMatrix<f64> {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut m = DMatrix::zeros(n, n);
    let mut i = 0;
    for b in blocks {
        m.view_mut((i, i), (b.nrows(), b.ncols())).copy_from(b);
        i += b.nrows();
    }
    m
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect()
}

/// S4 acting on `R^3 ⊕ R^3` by the standard representation and its sign
/// twist, with coupling weights `w` on the two blocks.
fn twisted_pair(a: f64, w: [f64; 2], k_fixed: bool) -> Model {
    let h = helmert(4);
    let mats: Vec<Vec<Vec<f64>>> = ["(1,2)", "(1,2,3,4)"]
        .iter()
        .map(|g| {
            let std = &h * Permutation::from_cycles(g, 4).unwrap().matrix() * h.transpose();
            rows(&block_diag(&[std.clone(), -std]))
        })
        .collect();
    let coupling = block_diag(&[DMatrix::identity(3, 3) * w[0], DMatrix::identity(3, 3) * w[1]]);
    let mut cfg = ModelConfig::from_path(BUNDLED).unwrap();
    cfg.name = "twisted-pair".into();
    cfg.action = ActionConfig::Matrices { matrices: mats };
    cfg.linearization = LinearizationConfig { a, coupling: CouplingConfig::Matrix(rows(&coupling)), zeta: Zeta::Sigmoid };
    cfg.analysis = AnalysisConfig { mode: None, k_fixed, alpha_bracket: 1.0 };
    cfg.notes.clear();
    Model::new(cfg).unwrap()
}

fn bundled_with(a: f64, c: f64, d: f64, k_fixed: bool) -> Model {
    let mut cfg = ModelConfig::from_path(BUNDLED).unwrap();
    cfg.linearization.a = a;
    if let CouplingConfig::Template { c: cc, d: dd, .. } = &mut cfg.linearization.coupling {
        *cc = c;
        *dd = d;
    }
    cfg.analysis.k_fixed = k_fixed;
    Model::new(cfg).unwrap()
}

#[test]
fn full_is_background_times_relative() {
    let p = model().problem().unwrap();
    let amb = model().ambient();
    let bg = p.background_product().unwrap();
    for cp in p.active_critical_points() {
        let full = p.local_invariant(&cp, Mode::Full).unwrap().value;
        let rel = p.local_invariant(&cp, Mode::Relative).unwrap().value;
        assert_eq!(full, bg.multiply(&rel, amb).unwrap(), "{}", cp.id);
        assert!(!rel.is_zero());
    }
}

#[test]
fn full_invariants_telescope() {
    let p = model().problem().unwrap();
    let cps = p.active_critical_points();
    let invs: Vec<_> = cps.iter().map(|c| p.local_invariant(c, Mode::Full).unwrap()).collect();
    let left = p.rho(&p.sigma(invs[0].alpha_minus).unwrap()).unwrap();
    let right = p.rho(&p.sigma(invs.last().unwrap().alpha_plus).unwrap()).unwrap();
    assert_eq!(rabinowitz_sum(&invs), left.sub(&right));
}

#[test]
fn regular_interval_has_zero_invariant() {
    let p = model().problem().unwrap();
    let cps = p.active_critical_points();
    let (a, b) = (cps[0].alpha, cps[1].alpha);
    let lo = a + 0.25 * (b - a);
    let hi = a + 0.75 * (b - a);
    let diff = p.rho(&p.sigma(lo).unwrap()).unwrap().sub(&p.rho(&p.sigma(hi).unwrap()).unwrap());
    assert!(diff.is_zero());
}

#[test]
fn sums_of_one_and_of_opposites() {
    let p = model().problem().unwrap();
    let cp = p.critical_point(Triple::new(1, 3, 2)).unwrap();
    let w = p.local_invariant(cp, Mode::Relative).unwrap();
    assert_eq!(rabinowitz_sum(std::slice::from_ref(&w)), w.value);
    let mut neg = w.clone();
    neg.value = w.value.neg();
    assert!(rabinowitz_sum(&[w, neg]).is_zero());
    assert!(rabinowitz_sum(&[]).is_zero());
}

#[test]
fn first_invariant_is_unit_minus_degree() {
    let p = model().problem().unwrap();
    let cp = p.critical_point(Triple::new(1, 3, 2)).unwrap();
    let w = p.local_invariant(cp, Mode::Relative).unwrap().value;
    let expected = BurnsideElement::unit(model().ambient()).sub(&model().book.basic_degree(3, 2).unwrap());
    assert_eq!(w, expected);
}

#[test]
fn folding_profiles_are_consistent() {
    let p = model().problem().unwrap();
    for cp in p.active_critical_points() {
        for h in p.maximal_types().unwrap() {
            let f = p.folding_profile(&cp, &h).unwrap();
            for (&s, &i) in &f.i {
                let same = f.n_minus[&s] % 2 == f.n_plus[&s] % 2;
                assert_eq!(same, i == 0);
            }
            assert_eq!(f.s, f.i.iter().filter(|(_, &v)| v != 0).map(|(&s, _)| s).max());
            if let Some(s) = f.s {
                assert_eq!(f.m_minus[&s] % 2, f.m_plus[&s] % 2, "{} at {}", model().ambient().symbol(&h), cp.id);
                let omega = p.local_invariant(&cp, Mode::Full).unwrap().value;
                for &above in f.i.keys().filter(|&&k| k > s) {
                    assert_eq!(omega.coeff(&model().ambient().fold(&h, above)), 0);
                }
            }
        }
    }
}

#[test]
fn unrelated_types_have_flat_profiles() {
    let p = model().problem().unwrap();
    let cp = p.critical_point(Triple::new(1, 3, 2)).unwrap();
    for h in model().book.maximal_types(1, 0).unwrap().iter() {
        let f = p.folding_profile(cp, h).unwrap();
        assert!(f.i.values().all(|&v| v == 0));
        assert_eq!(f.s, None);
    }
}

#[test]
fn first_crossing_certifies_with_positive_sign() {
    let p = model().problem().unwrap();
    let cp = p.critical_point(Triple::new(1, 3, 2)).unwrap();
    for h in model().book.maximal_types(1, 2).unwrap().iter() {
        assert_eq!(p.folding_profile(cp, h).unwrap().s, Some(3));
        assert!(p.closed_form_coeff(cp, h, 3).unwrap() > 0);
        assert_eq!(p.closed_form_coeff(cp, h, 5).unwrap(), 0);
    }
    let certs = p.branch_certificates(cp).unwrap();
    assert_eq!(certs.len(), 3);
    assert!(certs.iter().all(|c| c.folding == 3 && c.coefficient != 0));
}

#[test]
fn bundled_verdicts_are_singletons() {
    let p = model().problem().unwrap();
    for h in p.maximal_types().unwrap() {
        let v = p.global_verdict(&h).unwrap();
        assert_eq!(v.j_set.len(), 1);
        assert_eq!(v.conclusion, Conclusion::UnboundedBranch);
    }
}

#[test]
fn shared_type_alternates_and_is_inconclusive() {
    // both blocks cross s_13 and nothing else
    let m = twisted_pair(38.0, [4.0, 3.5], true);
    let p = m.problem().unwrap();
    let ids: Vec<Triple> = p.active_critical_points().iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), 2);
    assert!(ids.iter().all(|t| (t.n, t.m) == (1, 3)));
    let book = &m.book;
    let shared: Vec<_> = book
        .maximal_types(1, ids[0].j)
        .unwrap()
        .iter()
        .filter(|h| book.maximal_types(1, ids[1].j).unwrap().contains(h))
        .cloned()
        .collect();
    assert!(!shared.is_empty());
    for h in &shared {
        let v = p.global_verdict(h).unwrap();
        assert_eq!(v.s_bar, Some(3));
        assert_eq!(v.j_set.len(), 2);
        assert!(!v.odd);
        assert_eq!(v.conclusion, Conclusion::Inconclusive);
        assert_eq!(v.symmetry, None);
        let signs: Vec<i8> = v.j_set.iter().map(|c| p.folding_profile(c, h).unwrap().indicator(3)).collect();
        assert_eq!(signs[0] * signs[1], -1);
    }
    for h in p.maximal_types().unwrap().iter().filter(|h| !shared.contains(h)) {
        let v = p.global_verdict(h).unwrap();
        assert_eq!(v.j_set.len(), 1);
        assert_eq!(v.conclusion, Conclusion::UnboundedBranch);
    }
}

#[test]
fn no_critical_points_is_inconclusive() {
    let m = bundled_with(1.0, 1.0, 0.0, true);
    let p = m.problem().unwrap();
    assert!(p.critical_points().is_empty());
    for h in p.maximal_types().unwrap() {
        let v = p.global_verdict(&h).unwrap();
        assert!(v.j_set.is_empty());
        assert_eq!(v.s_bar, None);
        assert_eq!(v.conclusion, Conclusion::Inconclusive);
    }
}

#[test]
fn radial_crossings_certify_nothing() {
    // curve weights (1.3, 0.7, 0.9): only s_10 = 5.783 is crossed
    let m = bundled_with(5.0, 0.9, 0.1, false);
    let p = m.problem().unwrap();
    let cps = p.active_critical_points();
    assert!(!cps.is_empty());
    for cp in &cps {
        assert_eq!(cp.id.m, 0);
        assert!(p.branch_certificates(cp).unwrap().is_empty());
    }
}
