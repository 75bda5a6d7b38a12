mod common;

use aprac::drawing::{parse_drawing, serialize_drawing, Drawing, DrawnEdge};
use aprac::factor::{regularize, split_two_factors};
use aprac::geom::Point;
use aprac::graph::{parse_graph, serialize_graph};
use aprac::layout::draw;
use aprac::validate::{find_crossings, find_crossings_naive, validate, Mode, SlopeSet, ValidateOptions};
use proptest::prelude::*;

fn arb_point(side: i64) -> impl Strategy<Value = Point> {
    (0..side, 0..side).prop_map(|(x, y)| Point::new(x, y))
}

/// Arbitrary polyline drawings on a small grid, valid or not.
fn arb_drawing(max_n: usize, max_bends: usize, side: i64) -> impl Strategy<Value = Drawing> {
    (2..=max_n).prop_flat_map(move |n| {
        let positions = prop::collection::vec(arb_point(side), n);
        let edge = (0..n, 0..n, prop::collection::vec(arb_point(side), 0..=max_bends));
        (positions, prop::collection::vec(edge, 0..=2 * n)).prop_map(|(positions, raw)| Drawing {
            positions,
            edges: raw
                .into_iter()
                .enumerate()
                .map(|(i, (u, v, b))| DrawnEdge::with_bends(i, u, v, b))
                .collect(),
        })
    })
}

/// Drawings with only horizontal and vertical segments.
fn arb_orthogonal(max_n: usize, side: i64) -> impl Strategy<Value = Drawing> {
    (2..=max_n).prop_flat_map(move |n| {
        let positions = prop::collection::vec(arb_point(side), n);
        (positions, prop::collection::vec((0..n, 0..n, any::<bool>()), 0..=2 * n)).prop_map(|(positions, raw)| {
            let edges = raw
                .into_iter()
                .enumerate()
                .map(|(i, (u, v, flip))| {
                    let (p, q) = (positions[u], positions[v]);
                    let bend = if flip {
                        Point::new(p.x, q.y)
                    } else {
                        Point::new(q.x, p.y)
                    };
                    DrawnEdge::with_bends(i, u, v, [bend])
                })
                .collect();
            Drawing { positions, edges }
        })
    })
}

fn verdict(d: &Drawing, bends: usize, mode: Mode) -> bool {
    validate(d, &ValidateOptions::new(bends, mode)).passed
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sweep_matches_all_pairs(d in arb_drawing(8, 2, 12)) {
        prop_assert_eq!(find_crossings(&d), find_crossings_naive(&d));
    }

    #[test]
    fn sweep_matches_all_pairs_orthogonal(d in arb_orthogonal(10, 10)) {
        prop_assert_eq!(find_crossings(&d), find_crossings_naive(&d));
    }

    #[test]
    fn translation_preserves_verdicts(d in arb_drawing(7, 2, 10), dx in -1000i64..1000, dy in -1000i64..1000) {
        let t = d.translate(dx, dy);
        for mode in [Mode::Rac, Mode::Aprac] {
            for k in 0..=2 {
                prop_assert_eq!(verdict(&d, k, mode), verdict(&t, k, mode));
            }
        }
        let slopes = SlopeSet::parse("0;1;-2/3").unwrap();
        let opts = ValidateOptions::new(2, Mode::SlopeRac).with_slopes(slopes);
        prop_assert_eq!(validate(&d, &opts).passed, validate(&t, &opts).passed);
    }

    #[test]
    fn rotation_preserves_aprac_verdict(d in arb_orthogonal(8, 10)) {
        let r = d.rotate90();
        prop_assert_eq!(verdict(&d, 1, Mode::Aprac), verdict(&r, 1, Mode::Aprac));
        prop_assert_eq!(verdict(&d, 1, Mode::Rac), verdict(&r, 1, Mode::Rac));
    }

    #[test]
    fn drawing_text_round_trips(d in arb_drawing(6, 2, 50)) {
        prop_assert_eq!(parse_drawing(&serialize_drawing(&d)).unwrap(), d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factors_partition_the_arcs(seed in any::<u64>(), n in 1usize..120, density in 1usize..6) {
        let g = common::random_bounded_degree(n, 8, density * n, &mut common::rng(seed));
        let dmg = regularize(&g, 4).unwrap();
        prop_assert!(dmg.is_regular(4));
        let f = split_two_factors(&dmg, 4).unwrap();
        prop_assert_eq!(f.factors.len(), 4);
        prop_assert_eq!(f.check(&dmg), Ok(()));
        prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn layout_always_validates(seed in any::<u64>(), n in 1usize..150, density in 1usize..6) {
        let g = common::random_bounded_degree(n, 8, density * n, &mut common::rng(seed));
        let d = draw(&g).unwrap();
        prop_assert_eq!(d.m(), g.m());
        let report = validate(&d, &ValidateOptions::new(2, Mode::Aprac));
        prop_assert!(report.passed, "{}", report.to_text());
        let (w, h) = d.extent();
        prop_assert!(w <= 8 * n as i64 && h <= 8 * n as i64);
    }
}
