mod common;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use solvgenus::centralizer::is_reversible;
use solvgenus::classification::{classify, standard_form};
use solvgenus::commensurability::intertwiner;
use solvgenus::conjugacy::{are_conjugate, classes_of_trace, represent, represent_unit, Group};
use solvgenus::geometry::hits_order2_cone;
use solvgenus::{monodromy_form, IntMatrix2};

#[test]
fn every_trace_three_matrix_has_two_splittings() {
    for t in [3, -3] {
        let mats = matrices_of_trace(t, 100);
        assert!(mats.len() > 100);
        for m in mats {
            let r = classify(&to_big(&m)).unwrap();
            assert_eq!((r.genus, r.irreducible_splitting_count), (2, 2), "{m:?}");
            assert!(r.verify().iter().all(|(_, ok)| *ok), "{m:?}");
        }
    }
}

#[test]
fn standard_form_exists_iff_unit_is_represented() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let l = to_big(&random_anosov(&mut rng, 30));
        let sf = standard_form(&l).unwrap();
        let unit = represent_unit(&l).unwrap();
        assert_eq!(sf.is_some(), unit.is_some(), "{l}");
        if let Some(sf) = sf {
            assert!(sf.verify(&l), "{l}");
            let conj = l.conjugate_by(&sf.conjugator).unwrap();
            assert_eq!(conj, sf.target());
        }
    }
}

#[test]
fn signed_representation_matches_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let m = random_anosov(&mut rng, 20);
        let l = to_big(&m);
        for value in [1i8, -1] {
            let lib = represent(&l, value).unwrap();
            let brute = {
                let (a, b, c, d) = (m[0] as i128, m[1] as i128, m[2] as i128, m[3] as i128);
                let mut hit = false;
                'scan: for q in 0..=300i128 {
                    for p in -300..=300i128 {
                        if c * p * p + (d - a) * p * q - b * q * q == value as i128 {
                            hit = true;
                            break 'scan;
                        }
                    }
                }
                hit
            };
            assert_eq!(lib.is_some(), brute, "{m:?} value {value}");
            if let Some(s) = lib {
                let (p, q) = s.vector();
                assert_eq!(monodromy_form(&l).unwrap().eval(p, q), BigInt::from(value));
            }
        }
    }
}

#[test]
fn gl_conjugacy_matches_bounded_search_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for t in [4i64, 5, 6, 8, -5] {
        let mats = matrices_of_trace(t, 5);
        for _ in 0..8 {
            let x = mats[rng.gen_range(0..mats.len())];
            let y = mats[rng.gen_range(0..mats.len())];
            for (group, dets) in [(Group::Sl, &[1][..]), (Group::Gl, &[1, -1][..])] {
                let lib = are_conjugate(&to_big(&x), &to_big(&y), group).unwrap();
                let brute = conjugators(&x, &y, 40, dets, true);
                assert_eq!(lib.is_some(), !brute.is_empty(), "{x:?} {y:?} {group:?}");
            }
        }
    }
}

#[test]
fn class_count_for_negative_trace_matches_clustering() {
    for t in [-3i64, -4, -5] {
        let lib = classes_of_trace(&BigInt::from(t)).unwrap().len();
        assert_eq!(lib, cluster_count(t, 20, 40), "t = {t}");
    }
}

#[test]
fn class_representatives_are_pairwise_non_conjugate() {
    for t in 3..=15i64 {
        let classes = classes_of_trace(&BigInt::from(t)).unwrap();
        for (i, x) in classes.iter().enumerate() {
            assert_eq!(x.representative.trace(), BigInt::from(t));
            for y in &classes[i + 1..] {
                assert!(are_conjugate(&x.representative, &y.representative, Group::Sl)
                    .unwrap()
                    .is_none());
            }
        }
    }
}

#[test]
fn order2_incidence_agrees_with_reversibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut hits = 0;
    for _ in 0..300 {
        let l = to_big(&random_anosov(&mut rng, 12));
        let inc = hits_order2_cone(&l).unwrap();
        let rev = is_reversible(&l).unwrap();
        assert_eq!(inc.hits, rev.is_some(), "{l}");
        if let Some(k) = rev {
            assert_eq!(&k * &l, &l.inverse().unwrap() * &k);
            hits += 1;
        }
    }
    assert!(hits > 0);
}

#[test]
fn reversibility_is_a_conjugacy_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let l = to_big(&random_anosov(&mut rng, 15));
        let k = random_sl2(&mut rng, 6);
        let c = l.conjugate_by(&k).unwrap();
        assert_eq!(
            is_reversible(&l).unwrap().is_some(),
            is_reversible(&c).unwrap().is_some(),
            "{l} by {k}"
        );
    }
}

#[test]
fn intertwiners_exist_both_ways() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..100 {
        let a = random_anosov(&mut rng, 12);
        let t = trace(&a);
        let mats = matrices_of_trace(t, 8);
        let b = mats[rng.gen_range(0..mats.len())];
        let (a, b) = (to_big(&a), to_big(&b));
        let ab = intertwiner(&a, &b).unwrap().expect("equal traces");
        let ba = intertwiner(&b, &a).unwrap().expect("equal traces");
        assert!(ab.verify(&a, &b) && ba.verify(&b, &a));
        assert_eq!(ab.index.is_one(), ba.index.is_one(), "{a} {b}");
    }
}

#[test]
fn standard_form_input_keeps_identity_conjugator() {
    for m in 3..=30i64 {
        let l = IntMatrix2::standard_form(m);
        let sf = standard_form(&l).unwrap().unwrap();
        assert_eq!(sf.conjugator, IntMatrix2::identity());
    }
}
