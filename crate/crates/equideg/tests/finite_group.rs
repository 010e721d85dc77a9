use std::collections::BTreeSet;

use nalgebra::DMatrix;
use proptest::prelude::*;

use equideg::finite_group::{
    direct_product, fixed_dim, group_from_generators, group_from_generators_capped, isotypic_decompose, n_count,
    subgroup_classes, subgroup_classes_capped, weyl_order, CharacterTable, FiniteGroup, OrthogonalAction, Permutation,
    Subgroup,
};
use equideg::Error;

fn perm(s: &str, n: usize) -> Permutation {
    Permutation::from_cycles(s, n).unwrap()
}

fn s4() -> FiniteGroup {
    group_from_generators(4, &[perm("(1,2)", 4), perm("(1,2,3,4)", 4)]).unwrap()
}

fn s4_z2() -> FiniteGroup {
    let z2 = group_from_generators(2, &[perm("(1,2)", 2)]).unwrap();
    direct_product(&s4(), &z2).unwrap()
}

fn s4_table(g: &FiniteGroup) -> CharacterTable {
    CharacterTable::new(
        g,
        ["chi0", "chi1", "chi2", "chi3", "chi4"].map(String::from).to_vec(),
        ["()", "(1,2)", "(1,2)(3,4)", "(1,2,3)", "(1,2,3,4)"].map(|s| perm(s, 4)).to_vec(),
        vec![
            vec![1, 1, 1, 1, 1],
            vec![1, -1, 1, 1, -1],
            vec![2, 0, 2, -1, 0],
            vec![3, 1, -1, 0, -1],
            vec![3, -1, -1, 0, 1],
        ],
    )
    .unwrap()
}

/// Every subgroup, by adjoining single elements to known subgroups until closed.
fn all_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::from([vec![g.identity()]]);
    let mut frontier = vec![vec![g.identity()]];
    while let Some(h) = frontier.pop() {
        for x in 0..g.order() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x);
            let k = g.generate(&gens).members().to_vec();
            if out.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    out
}

fn brute_normalizer_order(g: &FiniteGroup, h: &Subgroup) -> usize {
    (0..g.order())
        .filter(|&x| h.members().iter().all(|&y| h.contains(g.conj(x, y))))
        .count()
}

fn brute_element_classes(g: &FiniteGroup) -> usize {
    let mut seen = vec![false; g.order()];
    let mut count = 0;
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        count += 1;
        for y in 0..g.order() {
            seen[g.conj(y, x)] = true;
        }
    }
    count
}

fn six_membrane_action(g: &FiniteGroup) -> OrthogonalAction {
    OrthogonalAction::from_generators(g, &[perm("(1,5)(2,4)(3,6)", 6).matrix(), perm("(1,2,3,4)", 6).matrix()]).unwrap()
}

#[test]
fn generated_orders() {
    assert_eq!(s4().order(), 24);
    assert_eq!(group_from_generators(4, &[]).unwrap().order(), 1);
    assert_eq!(s4_z2().order(), 48);
    let one = group_from_generators(1, &[]).unwrap();
    assert_eq!(direct_product(&one, &one).unwrap().order(), 1);
}

#[test]
fn element_classes_match_brute_force() {
    let g = s4_z2();
    assert_eq!(g.conjugacy_classes().len(), brute_element_classes(&g));
    assert_eq!(brute_element_classes(&g), 10);
}

#[test]
fn subgroup_counts_match_brute_force() {
    let z2 = group_from_generators(2, &[perm("(1,2)", 2)]).unwrap();
    let d4 = group_from_generators(4, &[perm("(1,2,3,4)", 4), perm("(1,3)", 4)]).unwrap();
    let z6 = group_from_generators(5, &[perm("(1,2,3)(4,5)", 5)]).unwrap();
    for g in [s4(), s4_z2(), d4, z6, z2] {
        let classes = subgroup_classes(&g).unwrap();
        let total: usize = classes.iter().map(|c| c.class_size).sum();
        assert_eq!(total, all_subgroups(&g).len(), "order {}", g.order());
    }
    assert_eq!(subgroup_classes(&s4()).unwrap().len(), 11);
    assert_eq!(subgroup_classes(&s4_z2()).unwrap().len(), 33);
}

#[test]
fn weyl_orders_match_normalizers() {
    let g = s4();
    let a4 = g.generate(&[
        g.index_of(&perm("(1,2,3)", 4)).unwrap(),
        g.index_of(&perm("(1,2)(3,4)", 4)).unwrap(),
    ]);
    assert_eq!(weyl_order(&g, &a4).unwrap(), 2);
    assert_eq!(weyl_order(&g, &g.trivial()).unwrap(), 24);
    let g = s4_z2();
    for c in subgroup_classes(&g).unwrap() {
        let h = &c.representative;
        assert_eq!(weyl_order(&g, h).unwrap() * h.order(), brute_normalizer_order(&g, h));
        assert_eq!(g.order() / brute_normalizer_order(&g, h), c.class_size);
    }
}

#[test]
fn containment_counts() {
    let g = s4();
    let classes = subgroup_classes(&g).unwrap();
    let v = g.generate(&[g.index_of(&perm("(1,2)(3,4)", 4)).unwrap()]);
    let d4 = classes.iter().find(|c| c.representative.order() == 8).unwrap();
    let brute = g
        .conjugates(&d4.representative)
        .iter()
        .filter(|k| v.is_subset_of(k))
        .count();
    assert_eq!(n_count(&g, &v, d4).unwrap(), brute);
    assert_eq!(brute, 3);
    for c in &classes {
        assert_eq!(n_count(&g, &c.representative, c).unwrap(), 1);
        assert_eq!(n_count(&g, &g.trivial(), c).unwrap(), c.class_size);
    }
}

#[test]
fn lagrange_on_s4_z2() {
    let g = s4_z2();
    let classes = subgroup_classes(&g).unwrap();
    for h in &classes {
        for k in &classes {
            if k.representative.order() % h.representative.order() != 0 {
                assert_eq!(n_count(&g, &h.representative, k).unwrap(), 0);
            }
        }
    }
}

#[test]
fn six_membrane_decomposition() {
    let g = s4();
    let t = s4_table(&g);
    let action = six_membrane_action(&g);
    let m: Vec<usize> = isotypic_decompose(&g, &action, &t).unwrap().iter().map(|x| x.1).collect();
    assert_eq!(m, vec![1, 0, 1, 0, 1]);
    let dim: usize = m.iter().enumerate().map(|(j, k)| k * t.dim(j)).sum();
    assert_eq!(dim, action.dim());
    let traces: Vec<i64> = t.class_reps.iter().map(|p| action.trace(g.index_of(p).unwrap()).round() as i64).collect();
    assert_eq!(traces, vec![6, 0, 2, 0, 2]);
}

#[test]
fn trivial_and_regular_actions() {
    let g = s4();
    let t = s4_table(&g);
    let one = DMatrix::identity(1, 1);
    let triv = OrthogonalAction::from_generators(&g, &[one.clone(), one]).unwrap();
    let m: Vec<usize> = isotypic_decompose(&g, &triv, &t).unwrap().iter().map(|x| x.1).collect();
    assert_eq!(m, vec![1, 0, 0, 0, 0]);
    assert_eq!(fixed_dim(&triv, &g.trivial()).unwrap(), 1);
}

#[test]
fn fixed_dimensions() {
    let g = s4();
    let action = six_membrane_action(&g);
    assert_eq!(fixed_dim(&action, &g.trivial()).unwrap(), 6);
    // averaging oracle: rank of the projector onto the invariants of S4
    let mut p = DMatrix::<f64>::zeros(6, 6);
    for x in 0..g.order() {
        p += action.matrix(x);
    }
    p /= g.order() as f64;
    assert_eq!(p.trace().round() as usize, fixed_dim(&action, &g.whole()).unwrap());
    assert_eq!(fixed_dim(&action, &g.whole()).unwrap(), 1);
}

#[test]
fn antipode_fixes_nothing() {
    let g = s4_z2();
    // generators of the product: those of S4 first, then the swap (5,6)
    let mats = vec![
        perm("(1,5)(2,4)(3,6)", 6).matrix(),
        perm("(1,2,3,4)", 6).matrix(),
        -DMatrix::<f64>::identity(6, 6),
    ];
    let action = OrthogonalAction::from_generators(&g, &mats).unwrap();
    let antipode = g.index_of(&perm("(5,6)", 6)).unwrap();
    assert_eq!(fixed_dim(&action, &g.generate(&[antipode])).unwrap(), 0);
    for c in subgroup_classes(&g).unwrap() {
        if c.representative.contains(antipode) {
            assert_eq!(fixed_dim(&action, &c.representative).unwrap(), 0);
        }
    }
}

#[test]
fn caps_are_enforced() {
    let gens = [perm("(1,2)", 8), perm("(1,2,3,4,5,6,7,8)", 8)];
    assert!(matches!(
        group_from_generators_capped(8, &gens, 100),
        Err(Error::ClosureCapExceeded(100))
    ));
    let s8 = group_from_generators(8, &gens).unwrap();
    assert_eq!(s8.order(), 40320);
    assert!(matches!(subgroup_classes(&s8), Err(Error::ClosureCapExceeded(_))));
    assert!(matches!(subgroup_classes_capped(&s4(), 10), Err(Error::ClosureCapExceeded(10))));
}

fn shuffled() -> impl Strategy<Value = Vec<usize>> {
    Just((0..5).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn weyl_of_whole_group_is_one(gens in prop::collection::vec(shuffled(), 0..3)) {
        let perms: Vec<Permutation> = gens.into_iter().map(|v| Permutation::new(v).unwrap()).collect();
        let g = group_from_generators(5, &perms).unwrap();
        prop_assert_eq!(weyl_order(&g, &g.whole()).unwrap(), 1);
        for c in subgroup_classes(&g).unwrap() {
            let h = &c.representative;
            prop_assert_eq!(brute_normalizer_order(&g, h) % h.order(), 0);
            prop_assert_eq!(weyl_order(&g, h).unwrap() * h.order(), brute_normalizer_order(&g, h));
        }
    }

    #[test]
    fn fixed_dim_is_monotone(a in 0usize..24, b in 0usize..24, c in 0usize..24) {
        let g = s4();
        let action = six_membrane_action(&g);
        let h1 = g.generate(&[a]);
        let h2 = g.generate(&[a, b]);
        let h3 = g.generate(&[a, b, c]);
        let d = |h: &Subgroup| fixed_dim(&action, h).unwrap();
        prop_assert!(d(&h1) >= d(&h2));
        prop_assert!(d(&h2) >= d(&h3));
    }
}
