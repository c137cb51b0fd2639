//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion, then fails if any
//! criterion outside `KNOWN_DEVIATIONS` fails, or if a listed deviation starts passing.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use bds::classify::{
    bp3_involutions, brute_force_solutions, canonical_form, catalog_report, classify_lbts_upto_81, classify_order_3p,
    classify_order_p, classify_order_p2, parse_expected, sq_analysis, ClassificationReport, Constraints,
};
use bds::constructions::{
    bpq_coords, build_bp3_condensed, build_bpq, build_l3, bruck_to_quandle, cyclic_group, descriptor_from_lbds,
    direct_product, elementary_abelian, elementary_lbts_descriptor, householder_braiding_check, l3_descriptor,
    lbds_from_descriptor, quandle_to_bruck, stock_solution, symmetric_space_solutions, LbdsDescriptor,
    PointedSymmetricSpace,
};
use bds::morphisms::{automorphism_group, involution_classes, n_ci, verify_ap3, SearchOptions};
use bds::tables::{classify_loop, holds, LawId, LoopData, MulTable};
use bds::BraidedSet;

/// Criteria that fail for a documented reason. Order 3p has eight classes, not six: the
/// cyclic group Z/3p has four involutive automorphisms, each giving its own class.
const KNOWN_DEVIATIONS: &[(u32, &str)] = &[(3, "order 3p yields 8 classes (4 cyclic + 4 nonassociative), not 6")];

#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn within(&mut self, what: &str, t: Duration, limit: Duration) {
        if t > limit {
            self.failures.push(format!("{what} took {t:.2?}, limit {limit:?}"));
        }
    }
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn violations_free(b: &BraidedSet) -> bool {
    b.is_solution().is_empty() && b.is_dihedral().is_empty()
}

fn identity_suite(c: &mut Checks) {
    let start = Instant::now();
    let b = stock_solution("smith", &[2]).unwrap();
    c.eq("order", b.order(), 9);
    c.eq("braid relation counterexamples", b.is_solution().len(), 0);
    c.eq("dihedral counterexamples", b.is_dihedral().len(), 0);
    c.eq("triality counterexamples", b.is_triality().len(), 0);
    c.expect(b.circ().is_latin(), "circ is not Latin");
    c.expect(b.is_biquandle(), "not a biquandle");
    c.within("identity suite", start.elapsed(), Duration::from_secs(1));
}

fn subloops_of_order(l: &LoopData, k: usize) -> usize {
    let mut seen = BTreeSet::new();
    for x in 0..l.order() {
        let g = l.generated(&[x]);
        if g.len() == k {
            seen.insert(g);
        }
    }
    seen.len()
}

fn bp3(c: &mut Checks) {
    for (p, aut_order) in [(5u64, 40u128), (7, 84)] {
        let start = Instant::now();
        let b = build_bpq(p, 3).unwrap();
        let condensed = build_bp3_condensed(p).unwrap();
        c.expect(b.table() == condensed.table(), format!("p={p}: condensed and general tables differ"));
        let cls = classify_loop(&b.loop_).unwrap();
        c.expect(cls.bruck && !cls.moufang, format!("p={p}: bruck={} moufang={}", cls.bruck, cls.moufang));
        c.expect(cls.element_orders.iter().all(|o| [1, 3, p as usize].contains(o)), format!("p={p}: element orders"));
        c.eq(&format!("p={p}: subloops of order p"), subloops_of_order(&b.loop_, p as usize), 1);
        c.eq(&format!("p={p}: subloops of order 3"), subloops_of_order(&b.loop_, 3), p as usize);
        let g = automorphism_group(b.table(), opts()).unwrap();
        c.eq(&format!("p={p}: |Aut|"), g.order(), aut_order);
        c.eq(&format!("p={p}: 2·p·(p-1)"), 2 * p as u128 * (p as u128 - 1), aut_order);
        let r = verify_ap3(p, opts()).unwrap();
        c.expect(r.equal && r.all_automorphisms, format!("p={p}: affine group differs from Aut"));
        c.eq(&format!("p={p}: involution classes"), involution_classes(b.table(), opts()).unwrap().len(), 4);
        c.within(&format!("p={p}"), start.elapsed(), Duration::from_secs(10));
    }
}

fn report_ok(c: &mut Checks, r: &ClassificationReport, want: usize) {
    c.eq(&r.title, r.count(), want);
    c.expect(r.pairwise_distinct(), format!("{}: missing non-isomorphism certificates", r.title));
}

fn classification_counts(c: &mut Checks) {
    for p in [3, 5, 7] {
        report_ok(c, &classify_order_p(p, opts()).unwrap(), 2);
    }
    for p in [3, 5] {
        report_ok(c, &classify_order_p2(p, opts()).unwrap(), 5);
    }
    for p in [5, 7] {
        let r = classify_order_3p(p, opts()).unwrap();
        c.note(format!("order {}: {} classes, {} certificates", 3 * p, r.count(), r.certificates.len()));
        report_ok(c, &r, 6);
    }
}

fn oracle(c: &mut Checks) {
    for p in [3u64, 5] {
        let start = Instant::now();
        let brute = brute_force_solutions(p as usize, Constraints::latin_dihedral()).unwrap();
        let pipeline = classify_order_p(p, opts()).unwrap();
        c.eq(&format!("brute force classes at {p}"), brute.len(), 2);
        let a: BTreeSet<Vec<u8>> = brute.iter().map(canonical_form).collect();
        let b: BTreeSet<Vec<u8>> = pipeline.entries.iter().map(|e| canonical_form(&e.solution)).collect();
        c.expect(a == b, format!("n={p}: brute-force and pipeline representatives differ"));
        c.within(&format!("n={p} scan"), start.elapsed(), Duration::from_secs(120));
    }
    for n in [2, 4] {
        c.eq(&format!("latin dihedral at {n}"), brute_force_solutions(n, Constraints::latin_dihedral()).unwrap().len(), 0);
    }
    c.eq("latin triality at 5", brute_force_solutions(5, Constraints::latin_triality()).unwrap().len(), 0);
}

fn l3(c: &mut Checks) {
    let start = Instant::now();
    let l = build_l3();
    c.eq("order", l.order(), 81);
    let cls = classify_loop(&l).unwrap();
    c.expect(cls.cml && cls.exponent == 3 && !cls.associative, "not a nonassociative CML of exponent 3");
    c.eq("center size", l.center().len(), 3);
    c.eq("involution classes", n_ci(l.table(), opts()).unwrap(), 4);
    let r = classify_lbts_upto_81(opts()).unwrap();
    c.eq("LBTS classes of order 81", r.count_of_order(81), 9);
    c.expect(r.pairwise_distinct(), "LBTS classes lack certificates");
    c.expect(sq_analysis(&l3_descriptor(3).unwrap()).is_endomorphism, "(L_3, S_3): Sq is not an endomorphism");
    c.expect(!sq_analysis(&l3_descriptor(4).unwrap()).is_endomorphism, "(L_3, S_4): Sq is an endomorphism");
    c.within("L_3", start.elapsed(), Duration::from_secs(300));
}

fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn table1(c: &mut Checks) {
    let t1 = parse_expected(&std::fs::read_to_string(data_path("table1_expected.tsv")).unwrap()).unwrap();
    let t2 = parse_expected(&std::fs::read_to_string(data_path("table2_expected.tsv")).unwrap()).unwrap();
    c.eq("expected order-27 rows", t1.len(), 7);
    c.eq("expected order-81 rows", t2.len(), 72);
    let z3 = cyclic_group(3);
    let loops: Vec<(String, MulTable)> = vec![
        ("27/1".into(), elementary_abelian(3, 3).unwrap().table().clone()),
        ("27/2".into(), direct_product(&z3, &cyclic_group(9)).table().clone()),
        ("27/7".into(), cyclic_group(27).table().clone()),
    ];
    let r = catalog_report(&loops, Some(&t1), opts()).unwrap();
    c.eq("n_CI of 27/1, 27/2, 27/7", r.rows.iter().map(|row| row.n_ci).collect::<Vec<_>>(), vec![4, 4, 2]);
    c.eq("matched rows", r.matched(), 3);
    c.expect(r.mismatched().is_empty(), "row mismatch");
    c.note(format!(
        "rows 3/3 match; totals {} and {} await the ingested catalogs (expected files sum to {} and {})",
        24,
        263,
        r.expected_total.unwrap_or(0),
        t2.iter().map(|(_, v)| v).sum::<usize>()
    ));
    c.eq("expected order-27 total", r.expected_total, Some(24));
    c.eq("expected order-81 total", t2.iter().map(|(_, v)| v).sum::<usize>(), 263);
}

fn all_descriptors() -> Vec<LbdsDescriptor> {
    let mut reports = Vec::new();
    for p in [3, 5, 7] {
        reports.push(classify_order_p(p, opts()).unwrap());
    }
    for p in [3, 5] {
        reports.push(classify_order_p2(p, opts()).unwrap());
    }
    for p in [5, 7] {
        reports.push(classify_order_3p(p, opts()).unwrap());
    }
    reports.push(classify_lbts_upto_81(opts()).unwrap());
    reports.into_iter().flat_map(|r| r.entries.into_iter().map(|e| e.descriptor)).collect()
}

fn diagonal_conclusions(c: &mut Checks, label: &str, b: &BraidedSet) {
    let d = b.diagonal_pair().unwrap();
    c.expect(d.equal && d.s_is_involutive(), format!("{label}: S != T or S is not involutive"));
    let n = b.order();
    c.expect((0..n).all(|x| (0..n).all(|y| b.bullet().get(x, y) == d.s[x])), format!("{label}: x•y != x^S"));
}

fn round_trips(c: &mut Checks) {
    let ds = all_descriptors();
    for (k, d) in ds.iter().enumerate() {
        let label = format!("instance {k} (order {})", d.order());
        let l = lbds_from_descriptor(d);
        c.expect(descriptor_from_lbds(&l.quasigroup, d.loop_.e()).ok().as_ref() == Some(d), format!("{label}: descriptor round trip"));
        for e in d.s.fixed_points() {
            let back = descriptor_from_lbds(&l.quasigroup, e).unwrap();
            c.expect(lbds_from_descriptor(&back).braided == l.braided, format!("{label}: rebuild from idempotent {e}"));
        }
        let q = bruck_to_quandle(&d.loop_);
        let back = quandle_to_bruck(&q, d.loop_.e()).unwrap();
        c.expect(back.table() == d.loop_.table(), format!("{label}: quandle to loop"));
        c.expect(bruck_to_quandle(&back) == q, format!("{label}: loop to quandle"));
        let rack = l.braided.derived_rack().unwrap();
        c.expect(
            rack.is_latin() && [LawId::LeftSymmetric, LawId::Idempotent, LawId::LeftDistributive].iter().all(|&law| holds(&rack, law).unwrap()),
            format!("{label}: derived rack is not a left-symmetric Latin quandle"),
        );
        diagonal_conclusions(c, &label, &l.braided);
    }
    for n in [3, 5] {
        for (k, b) in brute_force_solutions(n, Constraints::latin_dihedral()).unwrap().iter().enumerate() {
            diagonal_conclusions(c, &format!("brute force {n}/{k}"), b);
        }
    }
    c.note(format!("{} descriptors checked", ds.len()));
}

fn structural(c: &mut Checks) {
    let a = sq_analysis(&elementary_lbts_descriptor(1, 1).unwrap());
    c.expect(a.split_verified && a.is_endomorphism, "((Z/3)², 1⊕−1): split extension not verified");
    let p = 5;
    let (g, _) = &bp3_involutions(p as u64)[3];
    let d = LbdsDescriptor::new(build_bpq(p as u64, 3).unwrap(), g.as_permutation()).unwrap();
    let a = sq_analysis(&d);
    c.expect(!a.is_endomorphism, "B_5,3 with [-1,1,l0]: Sq is an endomorphism");
    match a.witness {
        Some(w) => {
            let ((xi, j), (yi, l)) = (bpq_coords(p, w.x), bpq_coords(p, w.y));
            c.expect(xi == 1 && yi == 0 && l != 0, format!("witness shape ({xi},{j}), ({yi},{l})"));
            c.eq("witness lhs", bpq_coords(p, w.lhs), (0, (j + 2 * p - 2 * l) % p));
            c.eq("witness rhs", bpq_coords(p, w.rhs), (0, (j + l) % p));
        }
        None => c.expect(false, "no witness"),
    }
    let lbts = classify_lbts_upto_81(opts()).unwrap();
    for e in &lbts.entries {
        c.eq(&format!("{}: factorization", e.name), sq_analysis(&e.descriptor).factorization, Some(true));
    }
}

fn numeric(c: &mut Checks) {
    match householder_braiding_check(3, 1000, 1e-9, 20_240_101) {
        Ok(r) => c.note(format!("worst residual {:.1e}", r.worst())),
        Err(e) => c.expect(false, format!("householder: {e}")),
    }
    for n in [5usize, 7, 9] {
        let m = MulTable::from_fn(n, |x, y| (2 * x + n - y) % n).unwrap();
        let space = PointedSymmetricSpace::from_quandle(&m, 0).unwrap();
        let (a, b) = symmetric_space_solutions(&space);
        c.expect(violations_free(&a) && violations_free(&b), format!("pointed space on Z/{n}: a solution form fails"));
    }
}

fn orders(c: &mut Checks) {
    for n in [3usize, 5, 7, 9] {
        let b = stock_solution("abelian", &[n]).unwrap();
        c.eq(&format!("abelian solution on Z/{n}"), b.braiding_order().order(), Some(n as u128));
    }
    for e in classify_lbts_upto_81(opts()).unwrap().entries {
        c.eq(&format!("{}: braiding order", e.name), e.solution.braiding_order().order(), Some(3));
    }
}

type Criterion = (u32, &'static str, fn(&mut Checks));

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "identity suite on the Smith solution over (Z/3)^2", identity_suite),
        (2, "B_p,3 structure, automorphisms and involutions at p = 5, 7", bp3),
        (3, "classification counts at orders p, p^2, 3p", classification_counts),
        (4, "brute-force oracle agreement", oracle),
        (5, "L_3 structure and LBTS classification", l3),
        (6, "order-27 involution counts from internal loops", table1),
        (7, "round trips and diagonal conclusions", round_trips),
        (8, "squaring-map structure theorems", structural),
        (9, "Householder braiding and pointed symmetric spaces", numeric),
        (10, "braiding orders", orders),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run) in criteria {
        let mut c = Checks::default();
        let start = Instant::now();
        run(&mut c);
        let pass = c.failures.is_empty();
        let deviation = KNOWN_DEVIATIONS.iter().find(|(d, _)| *d == id);
        println!("{} {id:>2}: {title} ({:.2?})", if pass { "PASS" } else { "FAIL" }, start.elapsed());
        for f in &c.failures {
            println!("      {f}");
        }
        for n in &c.notes {
            println!("      note: {n}");
        }
        match (pass, deviation) {
            (false, Some((_, why))) => println!("      known deviation: {why}"),
            (false, None) => unexpected.push(format!("criterion {id} failed")),
            (true, Some(_)) => unexpected.push(format!("criterion {id} passed but is listed as a deviation")),
            (true, None) => {}
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected results: {unexpected:?}");
        std::process::exit(1);
    }
}
