mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::*;
use diflip::connectivity::{
    enumerate_2cuts, is_strongly_k_edge_connected, minimal_one_out_set, strong_components,
};
use diflip::digraph::split_vertex;
use diflip::embedding::{equivalent, euler_genus, faces_to_rotation, trace_faces};
use diflip::format;
use diflip::generate::{doubled_cycle, fixture, RandomEulerian};
use diflip::immersion::{immerses, verify_certificate};
use diflip::peripheral::directed_cycles;
use diflip::whitney::{
    apply_moves, contract_at_cut, induce_rotation, splice_rotations, whitney_flip,
};
use diflip::{Digraph, FlipMove, Pairing, RotationSystem, SplitChoice};

fn two_regular() -> impl Strategy<Value = Digraph> {
    (1usize..=7, any::<u64>()).prop_map(|(n, seed)| RandomEulerian::regular(n, 2).generate(seed))
}

fn eulerian() -> impl Strategy<Value = Digraph> {
    (1usize..=7, 1usize..=3, any::<u64>())
        .prop_map(|(n, d, seed)| RandomEulerian::new(n, d).generate(seed))
}

fn with_rotation() -> impl Strategy<Value = (Digraph, RotationSystem)> {
    (two_regular(), any::<u64>()).prop_map(|(h, bits)| {
        let mask = bits & ((1u64 << h.vertex_count()) - 1);
        let r = RotationSystem::from_mask(&h, mask).unwrap();
        (h, r)
    })
}

fn normalised_library_faces(h: &Digraph, r: &RotationSystem) -> Vec<Vec<usize>> {
    // same normal form as the oracle: least rotation of the walk or its reverse
    let mut out: Vec<Vec<usize>> = trace_faces(h, r)
        .unwrap()
        .walks()
        .iter()
        .map(|w| {
            let s = w.arcs();
            let mut best = s.to_vec();
            let mut rev = s.to_vec();
            rev.reverse();
            for seq in [s.to_vec(), rev] {
                for i in 0..seq.len() {
                    let rot: Vec<usize> = seq[i..].iter().chain(&seq[..i]).copied().collect();
                    best = best.min(rot);
                }
            }
            best
        })
        .collect();
    out.sort();
    out
}

#[test]
fn splitting_c4x2_gives_c3x2() {
    let c4 = doubled_cycle(4);
    let c3 = fixture("C3x2").unwrap();
    for v in 0..4 {
        for pairing in [Pairing::Straight, Pairing::Crossed] {
            let split = split_vertex(&c4, SplitChoice::new(v, pairing)).unwrap();
            assert!(
                isomorphic_oracle(&split.digraph, &c3),
                "vertex {v} {pairing:?}"
            );
        }
    }
}

#[test]
fn splitting_c3x2_gives_d2() {
    let c3 = fixture("C3x2").unwrap();
    let d2 = fixture("D2").unwrap();
    let split = split_vertex(&c3, SplitChoice::new(0, Pairing::Straight)).unwrap();
    assert!(isomorphic_oracle(&split.digraph, &d2));
}

#[test]
fn c3x2_does_not_immerse_c4x2() {
    let c3 = fixture("C3x2").unwrap();
    let c4 = fixture("C4x2").unwrap();
    assert_eq!(immerses(&c3, &c4).unwrap(), None);
}

#[test]
fn fixture_cut_structure() {
    assert_eq!(
        two_cut_pairs_oracle(&fixture("LOOPLINK").unwrap()),
        vec![(1, 3)]
    );
    for name in ["D2", "C3x2", "BOUQUET"] {
        let h = fixture(name).unwrap();
        assert!(two_cut_pairs_oracle(&h).is_empty(), "{name}");
        assert!(is_strongly_k_edge_connected(&h, 2), "{name}");
    }
    assert!(two_cut_pairs_oracle(&fixture("C4x2").unwrap()).is_empty());
}

#[test]
fn directed_cycles_match_oracle_on_fixtures() {
    for (name, h) in fixtures() {
        let library: BTreeSet<BTreeSet<usize>> = directed_cycles(&h)
            .iter()
            .map(|c| c.arcs().iter().copied().collect())
            .collect();
        assert_eq!(library, cycles_oracle(&h), "{name}");
        assert_eq!(
            directed_cycles(&h).len(),
            library.len(),
            "{name}: duplicates"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn digraph_text_round_trip(h in eulerian()) {
        let text = format::write_digraph(&h);
        prop_assert_eq!(format::parse_digraph(&text).unwrap(), h);
    }

    #[test]
    fn rotation_and_face_text_round_trip((h, r) in with_rotation()) {
        let text = format::write_rotation(&r);
        prop_assert_eq!(&format::parse_rotation(&text, h.vertex_count()).unwrap(), &r);
        let faces = trace_faces(&h, &r).unwrap();
        prop_assert_eq!(format::parse_faces(&format::write_faces(&faces)).unwrap(), faces);
    }

    #[test]
    fn generator_output_is_connected_eulerian(n in 2usize..=9, lo in 1usize..=3, extra in 0usize..=2, seed in any::<u64>()) {
        let params = RandomEulerian::new(n, lo + extra).min_half_degree(lo).loopless();
        let h = params.generate(seed);
        prop_assert_eq!(&h, &params.generate(seed));
        prop_assert!(h.is_eulerian() && !h.has_loops());
        prop_assert!(connected_oracle(&h, &BTreeSet::new()));
        let report = h.degree_report();
        prop_assert!(report.outdegree.iter().all(|&d| d >= lo && d <= lo + extra));
    }

    #[test]
    fn cuts_match_oracle(h in eulerian()) {
        let mut library: Vec<(usize, usize)> = enumerate_2cuts(&h)
            .unwrap()
            .iter()
            .map(|c| (c.out_arc.min(c.in_arc), c.out_arc.max(c.in_arc)))
            .collect();
        library.sort();
        prop_assert_eq!(library, two_cut_pairs_oracle(&h));
        for cut in enumerate_2cuts(&h).unwrap() {
            prop_assert!(!cut.side.contains(&0));
            let inside: BTreeSet<usize> = cut.side.iter().copied().collect();
            let arcs = h.arcs();
            prop_assert!(inside.contains(&arcs[cut.out_arc].tail) && !inside.contains(&arcs[cut.out_arc].head));
            prop_assert!(!inside.contains(&arcs[cut.in_arc].tail) && inside.contains(&arcs[cut.in_arc].head));
        }
    }

    #[test]
    fn minimal_one_out_set_matches_oracle(h in eulerian()) {
        let library = minimal_one_out_set(&h).unwrap().map(|c| c.side);
        prop_assert_eq!(library, minimal_one_out_oracle(&h));
    }

    #[test]
    fn k_edge_connectivity_matches_oracle(h in eulerian()) {
        let m = h.arc_count();
        let oracle = |k: usize| -> bool {
            match k {
                1 => strongly_connected_oracle(&h, &BTreeSet::new()),
                2 => (0..m).all(|a| strongly_connected_oracle(&h, &BTreeSet::from([a]))),
                _ => (0..m).all(|a| (a..m).all(|b| strongly_connected_oracle(&h, &BTreeSet::from([a, b])))),
            }
        };
        for k in 1..=3 {
            prop_assert_eq!(is_strongly_k_edge_connected(&h, k), oracle(k), "k = {}", k);
        }
    }

    #[test]
    fn strong_components_match_reachability(h in eulerian()) {
        let r = reach(&h, &BTreeSet::new());
        for comp in strong_components(&h) {
            for &x in &comp {
                for (y, row) in r.iter().enumerate() {
                    prop_assert_eq!(comp.contains(&y), r[x][y] && row[x]);
                }
            }
        }
    }

    #[test]
    fn faces_match_oracle((h, r) in with_rotation()) {
        prop_assert_eq!(normalised_library_faces(&h, &r), faces_oracle(&h, &r));
        prop_assert_eq!(euler_genus(&h, &r).ok(), genus_oracle(&h, &r));
    }

    #[test]
    fn mirror_image_has_the_same_faces((h, r) in with_rotation()) {
        prop_assert_eq!(trace_faces(&h, &r.reversed()).unwrap(), trace_faces(&h, &r).unwrap());
    }

    #[test]
    fn faces_determine_the_rotation((h, r) in with_rotation()) {
        let faces = trace_faces(&h, &r).unwrap();
        let distinct_holders = (0..h.arc_count()).all(|a| {
            faces.walks().iter().filter(|w| w.arcs().contains(&a)).count() == 2
        });
        match faces_to_rotation(&h, &faces) {
            Some(back) => prop_assert!(equivalent(&trace_faces(&h, &back).unwrap(), &faces)),
            None => prop_assert!(!distinct_holders, "no rotation rebuilt for {:?}", faces),
        }
    }

    #[test]
    fn flips_are_side_independent_and_commute((h, r) in with_rotation(), pick in any::<prop::sample::Index>()) {
        let cuts = enumerate_2cuts(&h).unwrap();
        prop_assume!(!cuts.is_empty());
        let a = FlipMove::new(cuts[pick.index(cuts.len())].clone());
        let b = FlipMove::new(cuts[(pick.index(cuts.len()) + 1) % cuts.len()].clone());
        let n = h.vertex_count();
        let from_a = whitney_flip(&h, &r, &a).unwrap();
        let from_other_side = whitney_flip(&h, &r, &FlipMove::new(a.cut.complement(n))).unwrap();
        prop_assert_eq!(trace_faces(&h, &from_a).unwrap(), trace_faces(&h, &from_other_side).unwrap());
        prop_assert_eq!(genus_oracle(&h, &from_a), genus_oracle(&h, &r));
        let ab = apply_moves(&h, &r, &[a.clone(), b.clone()]).unwrap();
        let ba = apply_moves(&h, &r, &[b, a]).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn contraction_adds_genus_and_splices_back((h, r) in with_rotation(), pick in any::<prop::sample::Index>()) {
        let cuts = enumerate_2cuts(&h).unwrap();
        prop_assume!(!cuts.is_empty());
        let cut = &cuts[pick.index(cuts.len())];
        let pair = contract_at_cut(&h, cut).unwrap();
        prop_assert!(pair.inner.is_2regular() && pair.outer.is_2regular());
        prop_assert_eq!(pair.inner.vertex_count() + pair.outer.vertex_count(), h.vertex_count());
        let (inner, outer) = induce_rotation(&h, &pair, &r).unwrap();
        prop_assert_eq!(
            genus_oracle(&h, &r).unwrap(),
            genus_oracle(&pair.inner, &inner).unwrap() + genus_oracle(&pair.outer, &outer).unwrap()
        );
        let back = splice_rotations(&h, &pair, &inner, &outer).unwrap();
        prop_assert_eq!(faces_oracle(&h, &back), faces_oracle(&h, &r));
    }

    #[test]
    fn splitting_keeps_two_regular_closure(h in two_regular(), v in any::<prop::sample::Index>(), crossed in any::<bool>()) {
        let vertex = v.index(h.vertex_count());
        let pairing = if crossed { Pairing::Crossed } else { Pairing::Straight };
        prop_assume!(h.vertex_count() >= 2);
        let split = split_vertex(&h, SplitChoice::new(vertex, pairing)).unwrap();
        let g = &split.digraph;
        prop_assert_eq!(g.vertex_count(), h.vertex_count() - 1);
        prop_assert!(g.is_eulerian());
        prop_assert!(g.is_2regular());
        for (old, new) in split.arc_map.iter().enumerate() {
            let a = h.arc(old);
            match new {
                Some(id) => {
                    let b = g.arc(*id);
                    prop_assert_eq!(Some(b.tail), split.vertex_map[a.tail]);
                    prop_assert_eq!(Some(b.head), split.vertex_map[a.head]);
                }
                None => prop_assert!(a.tail == vertex || a.head == vertex),
            }
        }
    }

    #[test]
    fn immersion_certificates_pass_the_oracle(h in two_regular()) {
        prop_assume!(h.vertex_count() >= 3);
        let target = doubled_triangle();
        if let Some(cert) = immerses(&h, &target).unwrap() {
            prop_assert!(immersion_oracle(&h, &target, &cert.branch_map, &cert.paths));
            prop_assert!(verify_certificate(&h, &target, &cert).is_ok());
            let mut broken = cert.clone();
            broken.paths[0].clear();
            prop_assert!(verify_certificate(&h, &target, &broken).is_err());
        }
    }
}
