use std::sync::OnceLock;

use bds::classify::bp3_involutions;
use bds::constructions::{
    build_bp3_condensed, bruck_to_quandle, cyclic_group, descriptor_from_lbds, direct_product, elementary_lbts_descriptor,
    lbds_from_descriptor, quandle_to_bruck, signed_diagonal, LbdsDescriptor,
};
use bds::morphisms::{intertwiner_from_quasigroup_iso, lbds_quasigroup_isomorphic, n_ci, SearchOptions};
use bds::tables::{classify_loop, holds, BruckLoopData, LawId};
use bds::Permutation;
use proptest::prelude::*;

fn zn(n: usize, sign: i8) -> LbdsDescriptor {
    LbdsDescriptor::new(BruckLoopData::new(cyclic_group(n)).unwrap(), signed_diagonal(n, &[sign]).unwrap()).unwrap()
}

/// Descriptors over several carriers, including both nonassociative order-15 families.
fn pool() -> &'static [LbdsDescriptor] {
    static POOL: OnceLock<Vec<LbdsDescriptor>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v = vec![zn(3, 1), zn(3, -1), zn(5, -1), zn(7, 1), zn(9, -1), zn(15, -1)];
        v.push(zn(3, 1).product(&zn(3, -1)));
        v.push(zn(3, -1).product(&zn(5, 1)));
        v.push(elementary_lbts_descriptor(1, 2).unwrap());
        let b = build_bp3_condensed(5).unwrap();
        for (g, _) in bp3_involutions(5) {
            v.push(LbdsDescriptor::new(b.clone(), g.as_permutation()).unwrap());
        }
        v
    })
}

fn relabel(d: &LbdsDescriptor, phi: &Permutation) -> LbdsDescriptor {
    let inv = phi.inverse();
    let s = Permutation::from_fn(d.order(), |y| phi.apply(d.s.apply(inv.apply(y)))).unwrap();
    LbdsDescriptor::new(BruckLoopData::from_table(d.loop_.table().relabel(phi)).unwrap(), s).unwrap()
}

fn instance_and_relabelling() -> impl Strategy<Value = (usize, Permutation)> {
    (0..pool().len()).prop_flat_map(|i| {
        let n = pool()[i].order();
        (Just(i), Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn involution_class_count_ignores_labels((i, phi) in instance_and_relabelling()) {
        let m = pool()[i].loop_.table();
        let opts = SearchOptions::default();
        prop_assert_eq!(n_ci(m, opts).unwrap(), n_ci(&m.relabel(&phi), opts).unwrap());
    }

    #[test]
    fn descriptor_round_trip_at_any_fixed_point((i, phi) in instance_and_relabelling()) {
        let d = relabel(&pool()[i], &phi);
        let l = lbds_from_descriptor(&d);
        prop_assert_eq!(descriptor_from_lbds(&l.quasigroup, d.loop_.e()).unwrap(), d.clone());
        for e in d.s.fixed_points() {
            let back = descriptor_from_lbds(&l.quasigroup, e).unwrap();
            prop_assert_eq!(back.loop_.e(), e);
            prop_assert_eq!(lbds_from_descriptor(&back).braided, l.braided.clone());
        }
    }

    #[test]
    fn core_quandle_and_loop_are_mutually_inverse((i, phi) in instance_and_relabelling()) {
        let d = relabel(&pool()[i], &phi);
        let q = bruck_to_quandle(&d.loop_);
        let back = quandle_to_bruck(&q, d.loop_.e()).unwrap();
        prop_assert_eq!(back.table(), d.loop_.table());
        for e in [0, d.order() - 1] {
            let b = quandle_to_bruck(&q, e).unwrap();
            prop_assert_eq!(bruck_to_quandle(&b), q.clone());
        }
    }

    #[test]
    fn derived_rack_is_a_left_symmetric_latin_quandle((i, phi) in instance_and_relabelling()) {
        let b = lbds_from_descriptor(&relabel(&pool()[i], &phi)).braided;
        let rack = b.derived_rack().unwrap();
        prop_assert!(rack.is_latin());
        for law in [LawId::LeftSymmetric, LawId::Idempotent, LawId::LeftDistributive] {
            prop_assert!(holds(&rack, law).unwrap(), "{law}");
        }
    }

    #[test]
    fn latin_dihedral_instances_have_equal_involutive_diagonals((i, phi) in instance_and_relabelling()) {
        let b = lbds_from_descriptor(&relabel(&pool()[i], &phi)).braided;
        prop_assert!(b.is_lbds());
        let diag = b.diagonal_pair().unwrap();
        prop_assert!(diag.equal && diag.s_is_involutive());
        let n = b.order();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(b.bullet().get(x, y), diag.s[x]);
            }
        }
    }

    #[test]
    fn quasigroup_isomorphism_yields_an_intertwiner((i, phi) in instance_and_relabelling()) {
        let d1 = &pool()[i];
        let d2 = relabel(d1, &phi);
        let w = intertwiner_from_quasigroup_iso(d1, &d2, &phi).unwrap();
        prop_assert!(d1.loop_.table().is_isomorphism_to(d2.loop_.table(), &w));
        let outcome = lbds_quasigroup_isomorphic(d1, &d2, SearchOptions::default()).unwrap();
        let psi = outcome.witness().expect("relabelled copies are isomorphic").clone();
        let w = intertwiner_from_quasigroup_iso(d1, &d2, &psi).unwrap();
        prop_assert!(d1.loop_.table().is_isomorphism_to(d2.loop_.table(), &w));
        prop_assert!((0..d1.order()).all(|x| w.apply(d1.s.apply(x)) == d2.s.apply(w.apply(x))));
    }
}

#[test]
fn braiding_order_is_a_multiple_of_the_exponent() {
    for d in pool() {
        let exponent = classify_loop(&d.loop_.loop_).unwrap().exponent as u128;
        let order = lbds_from_descriptor(d).braided.braiding_order().order().unwrap();
        assert_eq!(order % exponent, 0, "order {order}, exponent {exponent}");
    }
}

#[test]
fn products_of_cyclic_groups_keep_their_involution_counts() {
    let opts = SearchOptions::default();
    let z3 = cyclic_group(3);
    let z5 = cyclic_group(5);
    let m = direct_product(&z3, &z5);
    assert_eq!(n_ci(m.table(), opts).unwrap(), 4);
    assert_eq!(n_ci(cyclic_group(15).table(), opts).unwrap(), 4);
}

fn random_table() -> impl Strategy<Value = bds::tables::MulTable> {
    (1usize..7).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |v| bds::tables::MulTable::from_fn(n, |x, y| v[x * n + y]).unwrap())
    })
}

proptest! {
    #[test]
    fn emitted_tables_parse_back_byte_identically(tables in prop::collection::vec(random_table(), 1..4), named in any::<bool>()) {
        use bds::format::{emit_tables, parse_tables, NamedTable};
        let named: Vec<NamedTable> = tables
            .into_iter()
            .enumerate()
            .map(|(i, t)| if named { NamedTable::new(Some(&format!("t{i}")), t).with_comment("generated") } else { NamedTable::new(None, t) })
            .collect();
        let text = emit_tables(&named);
        let parsed = parse_tables(&text).unwrap();
        prop_assert_eq!(&parsed, &named);
        prop_assert_eq!(emit_tables(&parsed), text);
    }
}
