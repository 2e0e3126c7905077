//! Plan construction and selection checked against exhaustive enumeration.

mod common;

use std::collections::BTreeMap;

use common::{fixture, random_small, threshold_grid, SmallInstance};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wdmst::oracle::{brute_critical_value, enumerate_spanning_trees, max_weight_on_tree_path};
use wdmst::{
    apply_change, precompute_all, precompute_plan, select_tree, tree_total_weight, weight_function,
    WhichTree,
};

#[test]
fn threshold_fixture_values() {
    let g = fixture("threshold8.wdg");
    let ps = precompute_all(&g);
    let plan = ps.plan(10).unwrap();
    assert_eq!((plan.d_s(), plan.s_v(), plan.cv()), (40.0, 32.0, 8.0));
    assert_eq!(brute_critical_value(&g, 10).unwrap(), 8.0);
    let f = weight_function(plan);
    assert_eq!((f.intercept, f.plateau, f.breakpoint), (32.0, 40.0, 8.0));
}

#[test]
fn selections_match_catalog_on_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..150 {
        let n = rng.gen_range(2..=8);
        let mut g = random_small(&mut rng, SmallInstance { n, max_weight: 20, unstable: 1, distinct: i % 2 == 0 });
        let e = g.unstable_ids()[0];
        let plan = precompute_plan(&g, e, &BTreeMap::new()).unwrap();
        assert_eq!(plan.cv(), brute_critical_value(&g, e).unwrap());
        let mut catalog = enumerate_spanning_trees(&g).unwrap();
        let centre = if plan.cv().is_finite() { plan.cv() } else { 0.0 };
        for x in threshold_grid(centre) {
            catalog.set_weight(e, x);
            g.set_unstable_weight(e, x).unwrap();
            let sel = select_tree(&plan, x);
            let best = catalog.minimum().unwrap();
            assert_eq!(sel.total_weight, best);
            assert_eq!(tree_total_weight(sel.tree, &g), best);
            assert_eq!(weight_function(&plan).eval(x), best);
        }
    }
}

#[test]
fn both_trees_optimal_at_breakpoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(3..=8);
        let mut g = random_small(&mut rng, SmallInstance { n, max_weight: 20, unstable: 1, distinct: false });
        let e = g.unstable_ids()[0];
        let plan = precompute_plan(&g, e, &BTreeMap::new()).unwrap();
        let Some(mst_s) = plan.mst_s() else { continue };
        g.set_unstable_weight(e, plan.cv()).unwrap();
        let best = enumerate_spanning_trees(&g).unwrap().minimum().unwrap();
        assert_eq!(tree_total_weight(mst_s, &g), best);
        assert_eq!(tree_total_weight(plan.mst_v(), &g), best);
        assert_eq!(select_tree(&plan, plan.cv()).chosen, WhichTree::Stable);
        checked += 1;
    }
}

#[test]
fn critical_value_is_the_oracle_switch_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let n = rng.gen_range(3..=7);
        let g = random_small(&mut rng, SmallInstance { n, max_weight: 20, unstable: 1, distinct: false });
        let e = g.unstable_ids()[0];
        let cv = brute_critical_value(&g, e).unwrap();
        if !cv.is_finite() {
            continue;
        }
        let mut catalog = enumerate_spanning_trees(&g).unwrap();
        for x in threshold_grid(cv) {
            catalog.set_weight(e, x);
            let minimizers = catalog.minimizers();
            if x < cv {
                assert!(minimizers.iter().all(|t| t.contains(&e)));
            } else if x > cv {
                assert!(minimizers.iter().any(|t| !t.contains(&e)));
            }
        }
    }
}

#[test]
fn bottleneck_identity_on_distinct_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(3..=8);
        let g = random_small(&mut rng, SmallInstance { n, max_weight: 40, unstable: 1, distinct: true });
        let e = g.unstable_ids()[0];
        let plan = precompute_plan(&g, e, &BTreeMap::new()).unwrap();
        let Some(mst_s) = plan.mst_s() else { continue };
        let edge = &g.edges()[e];
        assert_eq!(plan.cv(), max_weight_on_tree_path(mst_s.edge_ids(), &g, edge.u, edge.v));
        checked += 1;
    }
}

#[test]
fn multi_edge_plans_match_frozen_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..40 {
        let n = rng.gen_range(4..=8);
        let mut g = random_small(&mut rng, SmallInstance { n, max_weight: 20, unstable: 3, distinct: false });
        let mut ps = precompute_all(&g);
        for _ in 0..4 {
            let e = g.unstable_ids()[rng.gen_range(0..3)];
            let x = rng.gen_range(0..=25) as f64;
            let expected = select_tree(ps.plan(e).unwrap(), x);
            let (immediate, updated) = apply_change(&ps, &mut g, e, x).unwrap();
            assert_eq!(immediate, expected);
            // The old plan for e is still exact at the new value.
            let best = enumerate_spanning_trees(&g).unwrap().minimum().unwrap();
            assert_eq!(immediate.total_weight, best);
            for plan in updated.plans() {
                let k = plan.unstable_edge();
                assert_eq!(plan.cv(), brute_critical_value(&g, k).unwrap());
                let others: BTreeMap<_, _> =
                    g.unstable_values().into_iter().filter(|&(id, _)| id != k).collect();
                assert_eq!(plan.frozen_others(), &others);
            }
            assert_eq!(updated, precompute_all(&g));
            ps = updated;
        }
    }
}

#[test]
fn single_edge_plan_is_stable_under_changes() {
    let mut g = fixture("threshold8.wdg");
    let mut ps = precompute_all(&g);
    let original = ps.clone();
    for x in [5.0, 9.0, 8.0, -3.0, 1e6] {
        let (sel, updated) = apply_change(&ps, &mut g, 10, x).unwrap();
        let want = if x < 8.0 { (WhichTree::Variable, 32.0 + x) } else { (WhichTree::Stable, 40.0) };
        assert_eq!((sel.chosen, sel.total_weight), want);
        assert_eq!(updated.plans(), original.plans());
        ps = updated;
    }
}

#[test]
fn cv_nonnegative_with_nonnegative_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..300 {
        let n = rng.gen_range(2..=8);
        let g = random_small(&mut rng, SmallInstance { n, max_weight: 20, unstable: 2, distinct: false });
        for plan in precompute_all(&g).plans() {
            assert!(plan.cv() >= 0.0);
        }
    }
}

#[test]
fn equal_weight_fixture() {
    let g = fixture("ties.wdg");
    let ps = precompute_all(&g);
    let plan = ps.plan(6).unwrap();
    assert_eq!(plan.cv(), brute_critical_value(&g, 6).unwrap());
    assert_eq!(plan.cv(), 2.0);
}

proptest! {
    #[test]
    fn weight_function_is_min_of_the_two_lines(
        d_s in -50i32..50,
        s_v in -50i32..50,
        xs in proptest::collection::vec(-200i32..200, 1..20),
    ) {
        // Two parallel routes: a stable edge of weight d_s - s_v beside the
        // unstable edge, plus a shared pendant edge of weight s_v.
        let g = wdmst::WeaklyDynamicGraph::build(3, &[
            wdmst::EdgeSpec::stable(0, 1, (d_s - s_v) as f64),
            wdmst::EdgeSpec::unstable(0, 1, 0.0),
            wdmst::EdgeSpec::stable(1, 2, s_v as f64),
        ]).unwrap();
        let plan = precompute_plan(&g, 1, &BTreeMap::new()).unwrap();
        prop_assert_eq!(plan.d_s(), d_s as f64);
        prop_assert_eq!(plan.s_v(), s_v as f64);
        let f = weight_function(&plan);
        let mut prev = f64::NEG_INFINITY;
        let mut sorted = xs.clone();
        sorted.sort();
        for x in sorted {
            let x = x as f64 / 2.0;
            let y = f.eval(x);
            prop_assert_eq!(y, (d_s as f64).min(s_v as f64 + x));
            prop_assert!(y >= prev);
            prev = y;
        }
    }
}
