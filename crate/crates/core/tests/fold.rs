use std::sync::Arc;

use mckay::catalog::{all_pairs, build_catalog_group, catalog_entry, pair_data, PairData};
use mckay::exact_arith::linalg::IntMatrix;
use mckay::exact_arith::rational;
use mckay::fold::{
    lattice_from_characters, pushforward_pairing, slodowy_c, verify_pair, weights, Convention, FoldResult,
};
use mckay::mckay::{intersection_matrix_b, mckay_matrix, DynkinType, Family};

fn data(g: &str, h: &str) -> PairData {
    pair_data(
        Arc::new(build_catalog_group(g).unwrap()),
        &catalog_entry(h).unwrap().generators,
    )
    .unwrap()
}

fn fold(g: &str, h: &str) -> FoldResult {
    let d = data(g, h);
    verify_pair(&d.pair, &d.h, &d.g).unwrap()
}

fn rat(m: &IntMatrix) -> Vec<Vec<mckay::exact_arith::Rational>> {
    m.iter().map(|r| r.iter().map(|&x| rational(x, 1)).collect()).collect()
}

#[test]
fn q8_over_c4_matches_the_hand_fold_of_a3() {
    let d = data("Q8", "C:4");
    let lat = lattice_from_characters(&d.pair, &d.h.table, &d.h.natural).unwrap();
    assert_eq!(lat.quotient_order(), 2);
    // C:4 is ordered tau_0, tau_2 (the sign), then the faithful pair
    assert_eq!(d.h.table.degrees(), &[1, 1, 1, 1]);
    let r = verify_pair(&d.pair, &d.h, &d.g).unwrap();
    assert_eq!(r.f, vec![1, 2]);
    assert_eq!(r.p, rat(&vec![vec![-2, 2], vec![2, -4]]));
    assert_eq!(r.d_row, rat(&vec![vec![-2, 1], vec![2, -2]]));
    assert_eq!(r.c, vec![vec![0, 1], vec![2, 0]]);
    assert_eq!(r.cartan_matrix, vec![vec![2, -1], vec![-2, 2]]);
    assert_eq!(r.verdicts.convention, Convention::Row);
    assert!(!r.verdicts.conventions_coincide);
    assert_eq!(r.cartan.family_pair(), vec![Family::B, Family::C]);
    assert_eq!(r.cartan.dynkin.unwrap().rank, 2);
    assert!(r.verdicts.identities_hold());
}

#[test]
fn two_t_over_q8_is_g2() {
    let r = fold("2T", "Q8");
    assert_eq!(r.orbits, vec![vec![1, 2, 3], vec![4]]);
    assert_eq!(r.f, vec![1, 3]);
    assert_eq!(r.p, rat(&vec![vec![-2, 3], vec![3, -6]]));
    assert_eq!(r.d, rat(&vec![vec![-2, 1], vec![3, -2]]));
    // the literal reading weights by the column node and gives the transpose
    assert_eq!(r.d_column, rat(&vec![vec![-2, 3], vec![1, -2]]));
    assert_eq!(r.c, vec![vec![0, 1], vec![3, 0]]);
    assert_eq!(r.cartan_matrix, vec![vec![2, -1], vec![-3, 2]]);
    assert_eq!(r.cartan.dynkin, Some(DynkinType::finite(Family::G, 2)));
    assert_eq!(r.verdicts.convention, Convention::Row);
    assert!(r.verdicts.identities_hold());
}

#[test]
fn two_o_over_two_t_is_f4() {
    let r = fold("2O", "2T");
    assert_eq!(r.orbits, vec![vec![1, 2], vec![3], vec![4, 5], vec![6]]);
    assert_eq!(r.f, vec![1, 2, 1, 2]);
    assert_eq!(r.cartan.dynkin, Some(DynkinType::finite(Family::F, 4)));
    assert!(r.verdicts.identities_hold());
}

#[test]
fn binary_dihedral_folds() {
    for n in 2..=6u32 {
        let r = fold(&format!("BD:{}", 4 * n), &format!("C:{}", 2 * n));
        let t = r.cartan.dynkin.unwrap();
        assert_eq!(r.cartan.family_pair(), vec![Family::B, Family::C]);
        assert_eq!(t.rank, n as usize);
        assert!(r.verdicts.identities_hold());
    }
    for n in 2..=3u32 {
        let r = fold(&format!("BD:{}", 8 * n), &format!("BD:{}", 4 * n));
        assert_eq!(r.cartan.family_pair(), vec![Family::B, Family::C]);
        assert_eq!(r.cartan.dynkin.unwrap().rank, n as usize + 1);
        assert!(r.verdicts.identities_hold());
    }
}

#[test]
fn trivial_quotient_reproduces_b_and_a() {
    let d = data("Q8", "Q8");
    let r = verify_pair(&d.pair, &d.h, &d.g).unwrap();
    let b = intersection_matrix_b(&d.h.table, &d.h.natural).unwrap();
    let a = mckay_matrix(&d.h.table, &d.h.natural, false).unwrap();
    assert_eq!(r.n, 1);
    assert_eq!(r.p, rat(&b));
    assert_eq!(r.c, a.entries);
    assert_eq!(r.cartan.dynkin, Some(DynkinType::finite(Family::D, 4)));
    assert_eq!(r.verdicts.degenerate, Some(true));
    assert!(r.verdicts.conventions_coincide);
}

#[test]
fn lattice_level_functions_agree_with_verify() {
    let d = data("2T", "Q8");
    let lat = lattice_from_characters(&d.pair, &d.h.table, &d.h.natural).unwrap();
    assert!(lat.preserves_pairing());
    // the order-three coset cycles the three leaves of D4
    let sigma = &lat.action()[1];
    assert_eq!(sigma[3], 3);
    assert!((0..3).all(|i| sigma[i] != i && sigma[i] < 3));
    assert_eq!(pushforward_pairing(&lat).unwrap(), vec![vec![-2, 3], vec![3, -6]]);
    assert_eq!(weights(&lat).unwrap(), vec![1, 3]);
    let a = mckay_matrix(&d.h.table, &d.h.natural, false).unwrap().entries;
    assert_eq!(slodowy_c(&a, lat.orbits()).unwrap(), vec![vec![0, 1], vec![3, 0]]);
}

#[test]
fn odd_cyclic_kernels_fold_outside_the_cartan_world() {
    // BD:12 > C:3: the quotient inverts the generator, so both nontrivial
    // characters form one orbit and 2I - C = [1]
    let g = Arc::new(build_catalog_group("BD:12").unwrap());
    let c3 =
        mckay::group::subgroup_from_generators(&g, &[catalog_entry("C:6").unwrap().generators[0].clone()]).unwrap();
    let h: Vec<usize> = c3
        .iter()
        .copied()
        .filter(|&x| g.element_order(x) != 2 && g.element_order(x) != 6)
        .collect();
    let gens = vec![g.element(h[1]).clone()];
    let d = pair_data(g, &gens).unwrap();
    let r = verify_pair(&d.pair, &d.h, &d.g).unwrap();
    assert_eq!(r.n, 4);
    assert_eq!(r.cartan_matrix, vec![vec![1]]);
    assert!(!r.verdicts.finite_type);
    assert!(r.verdicts.identities_hold());
}

#[test]
fn every_pair_satisfies_the_fold_identities() {
    for entry in all_pairs().unwrap() {
        let r = mckay::report::verify_pair_entry(&entry).unwrap();
        assert!(r.pass(), "{}: {:?}", entry.label(), r.result.failures);
    }
}

#[test]
fn fold_json_schema() {
    let r = fold("2O", "2T");
    let v = serde_json::to_value(&r).unwrap();
    for key in ["orbits", "f", "P", "D", "C", "cartan", "verdicts"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["cartan"]["family"], "F");
    assert_eq!(v["cartan"]["rank"], 4);
    assert_eq!(v["verdicts"]["two_I_minus_C_eq_minus_D"], "row");
    assert_eq!(v["verdicts"]["main_identity"], true);
    assert_eq!(v["P"][0][0], -2);
}
