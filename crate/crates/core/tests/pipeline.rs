use hurwitz_core::constellation::{build_constellation, export_graph, surface_report, ConstellationRecord};
use hurwitz_core::factorization::{count_by_cycle_type, enumerate_factorizations, hurwitz_number};
use hurwitz_core::matching_seq::{count_matching_seqs, enumerate_matching_seqs, p_map, p_preimages};
use hurwitz_core::table::table_rows;
use hurwitz_core::{Error, MatchingSeq, PairMatching, Partition, TranspositionSeq};

fn lambda(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn small_counts() {
    let h = hurwitz_number(1, &lambda("2"), 1).unwrap();
    assert_eq!(h.raw_count, 4);
    assert_eq!((*h.value.numer(), *h.value.denom()), (2, 1));
    let h = hurwitz_number(0, &lambda("1,1"), 1).unwrap();
    assert_eq!((*h.value.numer(), *h.value.denom()), (1, 2));
    assert_eq!(hurwitz_number(3, &lambda("1"), 1).unwrap().raw_count, 0);
}

#[test]
fn enumerated_words_map_onto_enumerated_sequences() {
    for (m, l) in [(2, "2,1"), (3, "3"), (3, "1,1,1"), (4, "2,2")] {
        let l = lambda(l);
        let words: Vec<TranspositionSeq> = enumerate_factorizations(m, &l).unwrap().collect();
        let mut images: Vec<MatchingSeq> = words.iter().map(p_map).collect();
        images.sort();
        images.dedup();
        let mut seqs = enumerate_matching_seqs(m, &l).unwrap();
        seqs.sort();
        assert_eq!(images, seqs);
        assert_eq!(words.len() as u64, count_matching_seqs(m, &l).unwrap() << m);
    }
}

#[test]
fn pmap_then_preimages_example() {
    let ts = TranspositionSeq::parse("(1 2)", 2, 1).unwrap();
    let ms = p_map(&ts);
    assert_eq!(ms.to_string(), "[(1 -1)(2 -2), (1 -2)(-1 2)]");
    let words: Vec<String> = p_preimages(&ms).unwrap().iter().map(|w| w.to_string()).collect();
    assert_eq!(words, vec!["(-1 -2)", "(1 2)"]);
}

#[test]
fn too_short_for_a_constellation() {
    let ms = p_map(&TranspositionSeq::parse("(1 2)", 2, 1).unwrap());
    assert_eq!(build_constellation(&ms), Err(Error::ConstellationTooShort(1)));
}

#[test]
fn structured_export_survives_json() {
    let ms = enumerate_matching_seqs(3, &lambda("2,1")).unwrap().remove(0);
    let c = build_constellation(&ms).unwrap();
    let json = export_graph(&c, "json").unwrap();
    let record: ConstellationRecord = serde_json::from_str(&json).unwrap();
    assert_eq!(record.into_constellation().unwrap(), c);
}

#[test]
fn tampered_record_is_rejected() {
    let ms = enumerate_matching_seqs(2, &lambda("2")).unwrap().remove(0);
    let c = build_constellation(&ms).unwrap();
    let mut record = ConstellationRecord::from_constellation(&c);
    record.labels.swap(0, 1);
    assert!(record.clone().into_constellation().is_err());
    record.flags += 1;
    assert!(matches!(record.into_constellation(), Err(Error::MalformedFlags(_))));
}

#[test]
fn sphere_and_projective_plane() {
    let d = |s: &str| PairMatching::parse(s, 2).unwrap();
    let t = d("(1 -1)(2 -2)");
    let sphere = MatchingSeq::new(2, vec![t.clone(), d("(1 2)(-1 -2)"), t.clone()]).unwrap();
    let plane = MatchingSeq::new(2, vec![t, d("(1 2)(-1 -2)"), d("(1 -2)(-1 2)")]).unwrap();
    let rs = surface_report(&build_constellation(&sphere).unwrap());
    let rp = surface_report(&build_constellation(&plane).unwrap());
    assert_eq!((rs.euler_characteristic, rs.is_orientable()), (2, true));
    assert_eq!((rp.euler_characteristic, rp.is_orientable()), (1, false));
}

#[test]
fn table_rows_respect_the_two_to_one_identity() {
    for row in table_rows(3, 4, 2).unwrap() {
        assert_eq!(row.raw_count, row.matching_count << row.m, "{:?}", row);
    }
    let counts = count_by_cycle_type(4, 3, 2).unwrap();
    assert_eq!(counts.total().unwrap(), 12u64.pow(4));
}
