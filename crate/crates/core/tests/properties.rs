use proptest::prelude::*;

use hurwitz_core::class::{hyperoctahedral_generators, twisted_class_of};
use hurwitz_core::constellation::{build_constellation, extract_matchings, surface_report};
use hurwitz_core::factorization::{twisted_product, valid_transpositions};
use hurwitz_core::matching::lambda_of;
use hurwitz_core::matching_seq::{p_map, p_preimages, validate_matching_seq};
use hurwitz_core::{tau, PairMatching, Partition, Permutation, TranspositionSeq};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..2 * n as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn sized_permutations() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1usize..=6).prop_flat_map(|n| (permutation(n), permutation(n)))
}

/// A pair matching built by pairing consecutive entries of a shuffle.
fn matching(n: usize) -> impl Strategy<Value = PairMatching> {
    Just((0..2 * n as u8).collect::<Vec<u8>>()).prop_shuffle().prop_map(|order| {
        let mut images = vec![0u8; order.len()];
        for pair in order.chunks(2) {
            images[pair[0] as usize] = pair[1];
            images[pair[1] as usize] = pair[0];
        }
        PairMatching::new(Permutation::from_images(images).unwrap()).unwrap()
    })
}

fn word(max_m: usize) -> impl Strategy<Value = TranspositionSeq> {
    (2usize..=4, 0..=max_m).prop_flat_map(|(n, m)| {
        let letters = valid_transpositions(n).unwrap();
        proptest::collection::vec(0..letters.len(), m).prop_map(move |picks| {
            TranspositionSeq::new(n, picks.iter().map(|&i| letters[i]).collect()).unwrap()
        })
    })
}

/// Half the sizes of the components of the graph whose edges are the pairs
/// of both matchings.
fn union_graph_shape(d1: &PairMatching, d2: &PairMatching) -> Partition {
    let size = 2 * d1.n();
    let mut seen = vec![false; size];
    let mut parts = Vec::new();
    for start in 0..size {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for w in [d1.partner_index(v), d2.partner_index(v)] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        parts.push(count / 2);
    }
    Partition::new(parts).unwrap()
}

proptest! {
    #[test]
    fn conjugation_preserves_cycle_type((p, g) in sized_permutations()) {
        prop_assert_eq!(p.conjugate(&g).unwrap().cycle_type(), p.cycle_type());
    }

    #[test]
    fn compose_with_inverse_is_identity((p, q) in sized_permutations()) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(p.compose(&q).unwrap().inverse(), q.inverse().compose(&p.inverse()).unwrap());
    }

    #[test]
    fn cycle_notation_round_trip((p, _) in sized_permutations()) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse(&text, Some(p.n())).unwrap(), p);
    }

    #[test]
    fn lambda_is_symmetric_and_matches_union_graph(
        (d1, d2) in (1usize..=6).prop_flat_map(|n| (matching(n), matching(n)))
    ) {
        let l = lambda_of(&d1, &d2).unwrap();
        prop_assert_eq!(&l, &lambda_of(&d2, &d1).unwrap());
        prop_assert_eq!(l.weight(), d1.n());
        prop_assert_eq!(l, union_graph_shape(&d1, &d2));
    }

    #[test]
    fn twisted_class_is_hyperoctahedral_invariant(ts in word(5)) {
        let sigma = twisted_product(&ts);
        let class = twisted_class_of(&sigma);
        prop_assert!(class.is_some());
        for g in hyperoctahedral_generators(ts.n()).unwrap() {
            prop_assert_eq!(twisted_class_of(&sigma.conjugate(&g).unwrap()), class.clone());
        }
        let t = tau(ts.n()).unwrap().into_permutation();
        prop_assert_eq!(t.compose(&sigma).unwrap().compose(&t).unwrap(), sigma.inverse());
    }

    #[test]
    fn p_map_image_is_valid_and_invertible(ts in word(5)) {
        let lambda = twisted_class_of(&twisted_product(&ts)).unwrap();
        let ms = p_map(&ts);
        prop_assert!(validate_matching_seq(&ms, &lambda).unwrap().passed());
        let pre = p_preimages(&ms).unwrap();
        prop_assert_eq!(pre.len(), 1 << ts.len());
        prop_assert!(pre.contains(&ts));
    }

    #[test]
    fn constellation_round_trip(ts in word(5).prop_filter("m >= 2", |w| w.len() >= 2)) {
        let ms = p_map(&ts);
        let c = build_constellation(&ms).unwrap();
        prop_assert_eq!(extract_matchings(&c).unwrap(), ms.clone());
        let r = surface_report(&c);
        let (n, m, s) = (ms.n() as i64, ms.m() as i64, ms.profile().len() as i64);
        prop_assert_eq!(r.euler_characteristic, n + s - m);
    }

    #[test]
    fn word_text_round_trip(ts in word(6)) {
        let text = ts.to_string();
        prop_assert_eq!(TranspositionSeq::parse(&text, ts.n(), 1).unwrap(), ts);
    }

    #[test]
    fn partition_text_round_trip(parts in proptest::collection::vec(1u32..6, 1..6)) {
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        let exponent = p.parts().iter().map(|x| format!("{}^1", x)).collect::<Vec<_>>().join(" ");
        prop_assert_eq!(exponent.parse::<Partition>().unwrap(), p);
    }
}
