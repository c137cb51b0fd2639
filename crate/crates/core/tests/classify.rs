use bds::braided::BraidedSet;
use bds::classify::{
    brute_force_solutions, canonical_form, classify_lbts_upto_81, classify_order_3p, classify_order_p, classify_order_p2,
    sq_analysis, Constraints,
};
use bds::constructions::lbds_from_descriptor;
use bds::morphisms::{braided_isomorphic, SearchOptions};

fn matches_pipeline(brute: &[BraidedSet], pipeline: &[BraidedSet]) -> bool {
    brute.len() == pipeline.len()
        && brute.iter().all(|b| {
            pipeline
                .iter()
                .filter(|p| braided_isomorphic(b, p, SearchOptions::default()).unwrap().is_isomorphic())
                .count()
                == 1
        })
}

#[test]
fn brute_force_agrees_with_descriptors_at_prime_orders() {
    for p in [3u64, 5] {
        let brute = brute_force_solutions(p as usize, Constraints::latin_dihedral()).unwrap();
        let report = classify_order_p(p, SearchOptions::default()).unwrap();
        let pipeline: Vec<BraidedSet> = report.entries.iter().map(|e| e.solution.clone()).collect();
        assert!(matches_pipeline(&brute, &pipeline), "order {p}");
        let mut a: Vec<_> = brute.iter().map(canonical_form).collect();
        let mut b: Vec<_> = pipeline.iter().map(canonical_form).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}

#[test]
fn no_latin_triality_solutions_of_order_five() {
    assert!(brute_force_solutions(5, Constraints::latin_triality()).unwrap().is_empty());
    assert_eq!(brute_force_solutions(3, Constraints::latin_triality()).unwrap().len(), 2);
}

#[test]
fn classification_counts() {
    let o = SearchOptions::default();
    for p in [3, 5, 7] {
        let r = classify_order_p(p, o).unwrap();
        assert_eq!(r.count(), 2);
        assert!(r.pairwise_distinct());
    }
    for p in [3, 5] {
        let r = classify_order_p2(p, o).unwrap();
        assert_eq!(r.count(), 5);
        assert!(r.pairwise_distinct());
    }
    for p in [5, 7] {
        let r = classify_order_3p(p, o).unwrap();
        assert_eq!(r.count(), 8);
        assert_eq!(r.entries.iter().filter(|e| !e.associative).count(), 4);
        assert!(r.pairwise_distinct());
    }
}

#[test]
fn lbts_up_to_81() {
    let r = classify_lbts_upto_81(SearchOptions::default()).unwrap();
    let counts: Vec<usize> = [3, 9, 27, 81].iter().map(|&n| r.count_of_order(n)).collect();
    assert_eq!(counts, vec![2, 3, 4, 9]);
    assert!(r.pairwise_distinct());
    for e in &r.entries {
        let a = sq_analysis(&e.descriptor);
        assert_eq!(a.factorization, Some(true), "{}", e.name);
        assert_eq!(e.solution.braiding_order().order(), Some(3));
        let _ = lbds_from_descriptor(&e.descriptor);
    }
}
