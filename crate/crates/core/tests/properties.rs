mod common;

use common::{euler_from_bracket, reduce_mod2, square_is_zero};
use kmc_core::minimality::certify_with;
use kmc_core::random::{random_classical_any, random_connected_virtual, random_virtual, random_virtual_knot};
use kmc_core::{
    build_atom, build_complex, certify_from_table, enumerate_k1, genus, kauffman_bracket, khovanov_table,
    parse_pd, ArcEnds, Diagram, Field, Limits, Twist, Verdict,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn any_diagram(seed: u64, n: usize) -> Diagram {
    let mut rng = StdRng::seed_from_u64(seed);
    match seed % 3 {
        0 => random_virtual(&mut rng, n),
        1 => random_virtual_knot(&mut rng, n),
        _ => random_classical_any(&mut rng, n.max(1)),
    }
}

/// PD labels cannot give a direction to a component made of a single arc
/// from one over-port of a crossing to the other.
fn has_over_loop(d: &Diagram) -> bool {
    d.arcs()
        .iter()
        .any(|a| matches!(*a, ArcEnds::Ports(p, q) if p / 4 == q / 4 && p % 2 == 1 && q % 2 == 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn moves_act_on_the_bracket(seed in any::<u64>(), n in 1usize..6, pick in any::<usize>()) {
        let d = any_diagram(seed, n);
        let b = kauffman_bracket(&d);
        let arcs = d.arcs().len();
        let (i, j) = (pick % arcs, (pick / arcs) % arcs);
        prop_assert_eq!(kauffman_bracket(&d.r2_add(i, j).unwrap()), b.clone());
        prop_assert_eq!(kauffman_bracket(&d.r1_add(i, Twist::Positive).unwrap()), -&b.shift(3));
        prop_assert_eq!(kauffman_bracket(&d.r1_add(j, Twist::Negative).unwrap()), -&b.shift(-3));
        prop_assert_eq!(kauffman_bracket(&d.virtualize(pick % d.crossing_count()).unwrap()), b.clone());
        prop_assert_eq!(kauffman_bracket(&d.mirror()), b.invert_variable());
    }

    #[test]
    fn pd_text_round_trips(seed in any::<u64>(), n in 0usize..8) {
        let d = any_diagram(seed, n);
        prop_assume!(!has_over_loop(&d));
        let back = parse_pd(&d.to_pd()).unwrap();
        prop_assert_eq!(&back, &d);
        let v = d.virtualize(seed as usize % n.max(1)).ok();
        if let Some(v) = v.filter(|v| !has_over_loop(v)) {
            prop_assert_eq!(parse_pd(&v.to_pd()).unwrap(), v);
        }
    }

    #[test]
    fn euler_characteristic_matches_the_bracket(seed in any::<u64>(), n in 0usize..6) {
        let d = any_diagram(seed, n);
        let gf2 = khovanov_table(&d, Field::Gf2, 14).unwrap();
        prop_assert_eq!(reduce_mod2(&gf2.graded_euler_characteristic()), reduce_mod2(&euler_from_bracket(&d)));
        if genus(&build_atom(&d)).orientable {
            let q = khovanov_table(&d, Field::Q, 12).unwrap();
            prop_assert_eq!(q.graded_euler_characteristic(), euler_from_bracket(&d));
            // universal coefficients: torsion only adds mod-2 classes
            for e in q.entries() {
                prop_assert!(gf2.dim(e.t, e.q) >= e.dim);
            }
        }
    }

    #[test]
    fn differentials_square_to_zero(seed in any::<u64>(), n in 1usize..6) {
        let d = any_diagram(seed, n);
        let c = build_complex(&d, &d.orient(), Field::Gf2).unwrap();
        prop_assert!(square_is_zero(&c, true));
        if genus(&build_atom(&d)).orientable {
            let c = build_complex(&d, &d.orient(), Field::Q).unwrap();
            prop_assert!(square_is_zero(&c, false));
        }
    }

    #[test]
    fn single_circle_census(seed in any::<u64>(), n in 0usize..9) {
        let d = any_diagram(seed, n);
        let k1 = enumerate_k1(&d, 24).unwrap();
        prop_assert!(k1.checks().all_pass(), "{:?}", k1);
        let (lo, hi) = k1.window;
        prop_assert_eq!(hi - lo, 2 - k1.chi);
    }

    #[test]
    fn homology_lives_on_single_circle_diagonals(seed in any::<u64>(), n in 1usize..6) {
        let d = any_diagram(seed, n);
        prop_assume!(d.connected_pieces() == 1);
        let tab = khovanov_table(&d, Field::Gf2, 14).unwrap();
        let (n_plus, _) = d.crossing_signs(&d.orient()).unwrap();
        let support = enumerate_k1(&d, 24).unwrap().diagonal_support(n_plus);
        prop_assert!(tab.diagonals().is_subset(&support));
    }

    #[test]
    fn thickness_is_bounded_by_genus(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_connected_virtual(&mut rng, n);
        let g = genus(&build_atom(&d));
        let tab = khovanov_table(&d, Field::Gf2, 14).unwrap();
        prop_assert!(tab.thickness().unwrap().twice() <= g.twice_genus as i64 + 4);
    }

    #[test]
    fn table_path_is_never_more_permissive(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_classical_any(&mut rng, n);
        let full = certify_with(&d, &[Field::Q], &Limits::default()).unwrap();
        let tab = full.fields[0].table();
        let from_table = certify_from_table(&tab, n, None).unwrap();
        if full.twice_genus as i64 == (full.thickness.twice() - 4).max(0) {
            prop_assert_eq!(from_table.verdict == Verdict::Minimal, full.fields[0].broad_1_complete && full.two_complete);
        }
        if from_table.verdict == Verdict::Minimal {
            prop_assert_eq!(full.verdict, Verdict::Minimal);
        }
    }

    #[test]
    fn virtualization_keeps_the_certificate(seed in any::<u64>(), n in 1usize..6, c in any::<usize>()) {
        let d = any_diagram(seed, n);
        let v = d.virtualize(c % d.crossing_count()).unwrap();
        prop_assert_eq!(kmc_core::certify(&v, &[]).unwrap(), kmc_core::certify(&d, &[]).unwrap());
    }
}
