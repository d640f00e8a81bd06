mod common;

use common::*;
use p3embed::embed::{embed, find_representative_point, AlgoStats, Mode, Outcome};
use p3embed::general::{dp_evaluate, embed_general_with_table, DpKey, DpTable};
use p3embed::geometry::{cross_int, Point, Triangle};
use p3embed::harness::{
    gen_plane3tree, gen_yes_instance, gen_yes_instance_with, mapping_to_json, mapping_to_text, parse_mapping,
    render_svg, verify, GenOptions, InstanceFile, VerifyMode,
};
use p3embed::plane3tree::{validate_and_build, PlaneGraphInput};
use p3embed::range_oracle::{Backend, RangeOracle};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn distinct_points(max: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::hash_set((lo..=hi, lo..=hi), 1..=max).prop_map(|s| s.into_iter().map(|(x, y)| p(x, y)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn backends_agree(pts in distinct_points(80, -30, 30), tri in prop::array::uniform3((-40i64..=40, -40i64..=40))) {
        let [a, b, c] = tri.map(|(x, y)| p(x, y));
        prop_assume!(cross_int(a, b, c) != 0);
        let brute = RangeOracle::build(&pts, Backend::BruteForce).unwrap();
        let kd = RangeOracle::build(&pts, Backend::Hierarchical).unwrap();
        let t = Triangle::from_points(a, b, c);
        prop_assert_eq!(kd.count_interior(&t).unwrap(), scan_count(&pts, a, b, c));
        prop_assert_eq!(kd.count_interior(&t).unwrap(), brute.count_interior(&t).unwrap());
        prop_assert_eq!(kd.report_closed(&t).unwrap(), brute.report_closed(&t).unwrap());
        // Orientation of the query does not matter.
        let r = Triangle::from_points(a, c, b);
        prop_assert_eq!(kd.report_interior(&r).unwrap(), kd.report_interior(&t).unwrap());
    }

    #[test]
    fn tree_sizes_follow_recurrence(n in 3usize..400, seed in any::<u64>()) {
        let g = gen_plane3tree(n, seed).unwrap();
        let t = validate_and_build(&g).unwrap();
        prop_assert_eq!(t.internal_count(), n - 3);
        prop_assert_eq!(t.node(t.root()).size, n - 3);
        for node in t.nodes() {
            match node.children {
                Some(ch) => prop_assert_eq!(node.size, 1 + ch.iter().map(|&c| t.node(c).size).sum::<usize>()),
                None => prop_assert_eq!(node.size, 0),
            }
        }
    }

    #[test]
    fn relabelling_keeps_the_tree_shape(n in 4usize..60, seed in any::<u64>()) {
        let g = gen_plane3tree(n, seed).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = PlaneGraphInput::new(n, g.edges.iter().map(|&(u, v)| (perm[v], perm[u])).collect(), g.outer.map(|v| perm[v]));
        let (t, u) = (validate_and_build(&g).unwrap(), validate_and_build(&h).unwrap());
        let root_rep = t.node(t.root()).rep.unwrap();
        prop_assert_eq!(u.node(u.root()).rep, Some(perm[root_rep]));
        let mut a: Vec<usize> = t.nodes().iter().map(|x| x.size).collect();
        let mut b: Vec<usize> = u.nodes().iter().map(|x| x.size).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn representative_matches_scan(seed in any::<u64>(), inner in 1usize..40, cut in any::<(u16, u16)>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = triangle_with_interior(&mut rng, inner, 60);
        let [x, y, z] = [pts[0], pts[1], pts[2]];
        let rest = inner - 1;
        let n1 = cut.0 as usize % (rest + 1);
        let n2 = cut.1 as usize % (rest - n1 + 1);
        let n3 = rest - n1 - n2;
        let oracle = RangeOracle::build(&pts, Backend::Hierarchical).unwrap();
        let mut stats = AlgoStats::default();
        let got = find_representative_point(x, y, z, n1, n2, n3, &oracle, &mut stats).unwrap();
        let want = root_count_solutions(&pts, [x, y, z], [n1, n2, n3]);
        prop_assert!(want.len() <= 1);
        prop_assert_eq!(got, want.first().copied());
    }

    #[test]
    fn modes_agree_on_small_sets(n in 4usize..30, seed in any::<u64>(), size in 8i64..80) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gen_plane3tree(n, seed).unwrap();
        let t = validate_and_build(&g).unwrap();
        let pts = triangle_with_interior(&mut rng, n - 3, size.max(n as i64));
        let a = embed(&t, &pts, Mode::Improved).unwrap();
        let b = embed(&t, &pts, Mode::Baseline).unwrap();
        prop_assert_eq!(&a.outcome, &b.outcome);
        if let Outcome::Found(m) = &a.outcome {
            prop_assert!(verify(&g, &pts, m, VerifyMode::Exact).unwrap().valid);
        }
    }

    #[test]
    fn planted_drawing_is_recovered(n in 3usize..200, seed in any::<u64>(), collinear in any::<bool>()) {
        let opts = GenOptions { general_position: !collinear, coord_bound: if collinear { 40 } else { 1_000_000 } };
        let inst = gen_yes_instance_with(n, seed, &opts).unwrap();
        let w = inst.witness.clone().unwrap();
        prop_assert!(verify(&inst.graph, &inst.points, &w, VerifyMode::Exact).unwrap().valid);
        let t = validate_and_build(&inst.graph).unwrap();
        let r = embed(&t, &inst.points, Mode::Improved).unwrap();
        let m = r.outcome.mapping().cloned();
        prop_assert!(m.is_some());
        let m = m.unwrap();
        if inst.graph.outer.iter().all(|&v| m.assignment[v] == w.assignment[v]) {
            prop_assert_eq!(m, w);
        }
    }

    #[test]
    fn generator_is_deterministic(n in 3usize..100, seed in any::<u64>()) {
        prop_assert_eq!(gen_yes_instance(n, seed, 1_000_000).unwrap(), gen_yes_instance(n, seed, 1_000_000).unwrap());
        prop_assert_eq!(gen_plane3tree(n, seed).unwrap(), gen_plane3tree(n, seed).unwrap());
    }

    #[test]
    fn instance_files_round_trip(n in 3usize..60, seed in any::<u64>()) {
        let inst = gen_yes_instance(n, seed, 1_000_000).unwrap();
        prop_assert_eq!(&InstanceFile::parse(&inst.to_text()).unwrap(), &inst);
        prop_assert_eq!(&InstanceFile::from_json(&inst.to_json()).unwrap(), &inst);
        let w = inst.witness.unwrap();
        prop_assert_eq!(&parse_mapping(&mapping_to_text(&w)).unwrap(), &w);
        prop_assert_eq!(&parse_mapping(&mapping_to_json(&w)).unwrap(), &w);
    }

    #[test]
    fn dp_memo_is_sound_and_small(n in 3usize..7, extra in 0usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gen_plane3tree(n, seed).unwrap();
        let t = validate_and_build(&g).unwrap();
        let pts = random_points(&mut rng, n + extra, 0, 6);
        let k = pts.len() as u64;
        let out = embed_general_with_table(&t, &pts).unwrap();
        prop_assert!(out.table.entries_evaluated() <= n as u64 * k * k * k);
        let keys: Vec<DpKey> = out.table.keys().copied().collect();
        for key in keys {
            let mut fresh = DpTable::new();
            let v = dp_evaluate(key, &mut fresh, &t, &pts);
            prop_assert_eq!(Some(v), out.table.get(&key).map(|w| w.is_some()));
        }
        if let Some(m) = &out.mapping {
            prop_assert!(verify(&g, &pts, m, VerifyMode::Generalized).unwrap().valid);
        }
        if extra == 0 {
            prop_assert_eq!(out.mapping.is_some(), embed(&t, &pts, Mode::Improved).unwrap().outcome.is_found());
        }
    }

    #[test]
    fn svg_has_one_dot_per_point(n in 3usize..50, seed in any::<u64>()) {
        let inst = gen_yes_instance(n, seed, 1_000_000).unwrap();
        let svg = render_svg(&inst.graph, &inst.points, inst.witness.as_ref());
        prop_assert_eq!(svg.matches("<circle").count(), n);
        prop_assert_eq!(svg.matches("<line").count(), inst.graph.edges.len());
    }
}

#[test]
fn k4_on_triangle_plus_centre() {
    let pts = vec![p(0, 0), p(9, 0), p(0, 9), p(2, 2)];
    let t = validate_and_build(&k4()).unwrap();
    let r = embed(&t, &pts, Mode::Improved).unwrap();
    let m = r.outcome.mapping().unwrap();
    assert_eq!(m.assignment[3], p(2, 2));
    assert!(verify(&k4(), &pts, m, VerifyMode::Exact).unwrap().valid);
}

#[test]
fn brute_force_oracle_rejects_convex_quad() {
    let pts = vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4)];
    let t = validate_and_build(&k4()).unwrap();
    assert!(!brute_force_embeddable(&k4(), &t, &pts, VerifyMode::Exact));
    assert!(!embed(&t, &pts, Mode::Improved).unwrap().outcome.is_found());
}
