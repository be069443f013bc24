//! Ideal fillings, tropical quiver points and word independence.

use glmirror::charts::{ideal_superpotential, ideal_superpotential_i0};
use glmirror::exact::{int, rat, Rational};
use glmirror::fillings::*;
use glmirror::quiver::{tropical_critical_conditions_hold, tropical_outgoing_sum_check};
use glmirror::symbolic::Var;
use glmirror::weyl::{enumerate_reduced_words, DominantWeight, Root};
use proptest::prelude::*;

fn weight(v: &[i64]) -> DominantWeight {
    DominantWeight::from_ints(v).unwrap()
}

/// Independent oracle: a filling for `λ` satisfies the max relations and reproduces `λ`.
fn is_filling_for(f: &IdealFilling, lambda: &DominantWeight) -> bool {
    let n = lambda.n();
    let ell: Rational = lambda.components().iter().cloned().sum::<Rational>() / int(n as i64);
    let mut w = vec![ell; n];
    for i in 1..n {
        for j in i + 1..=n {
            let v = f.get(i, j);
            if *v < int(0) {
                return false;
            }
            if j - i >= 2 && v != f.get(i + 1, j).max(f.get(i, j - 1)) {
                return false;
            }
            w[i - 1] += v;
            w[j - 1] -= v;
        }
    }
    w == lambda.components()
}

#[test]
fn example_two_one_minus_one() {
    let lam = weight(&[2, 1, -1]);
    let f = filling_for_weight(&lam).unwrap();
    assert_eq!(f.rows(), vec![vec![rat(1, 2), rat(5, 6)], vec![rat(5, 6)]]);
    assert_eq!(lam.ell(), rat(2, 3));
    assert!(is_filling_for(&f, &lam));
}

#[test]
fn example_three_one_minus_one() {
    // Weight equations: n12+n13 = 2, n23−n12 = 0, n13+n23 = 2 with n13 = max(n12, n23).
    let lam = weight(&[3, 1, -1]);
    let f = filling_for_weight(&lam).unwrap();
    assert_eq!(f.rows(), vec![vec![int(1), int(1)], vec![int(1)]]);
    assert!(is_filling_for(&f, &lam));
}

#[test]
fn rank_one_filling() {
    let f = filling_for_weight(&weight(&[5, 1])).unwrap();
    assert_eq!(f.get(1, 2), &int(2));
}

#[test]
fn json_rows() {
    let f = filling_for_weight(&weight(&[2, 1, -1])).unwrap();
    assert_eq!(f.to_json(), serde_json::json!([["1/2", "5/6"], ["5/6"]]));
}

#[test]
fn tropical_point_structure() {
    for l in [vec![2, 1, -1], vec![3, 1, -1], vec![4, 2, 1, 0], vec![6, 3, 3, 1, 0]] {
        let lam = weight(&l);
        let f = filling_for_weight(&lam).unwrap();
        let p = filling_to_trop_point(&f, &lam).unwrap();
        assert_eq!(p.star_values(), lam.components());
        assert!(p.box_relations_hold());
        assert!(p.critical_conditions_hold());
        assert!(delta_from_minima_holds(&p));
        assert!(staircase_minimum_holds(&f));
        assert_eq!(trop_point_to_filling(&p).unwrap(), f);
    }
}

#[test]
fn trop_point_json_keys() {
    let lam = weight(&[2, 1, -1]);
    let p = filling_to_trop_point(&filling_for_weight(&lam).unwrap(), &lam).unwrap();
    let j = p.to_json();
    assert_eq!(j["ell"], "2/3");
    assert_eq!(j["delta"]["v11"], "2");
    assert!(j["rho"].get("a11").is_some());
}

#[test]
fn non_filling_is_rejected() {
    let lam = weight(&[2, 1, -1]);
    let bad = IdealFilling::from_rows(&[vec![int(1), int(1)], vec![int(1)]]).unwrap();
    assert!(filling_to_trop_point(&bad, &lam).is_err());
}

#[test]
fn word_independence_n4() {
    let lam = weight(&[5, 2, 1, -1]);
    let f = filling_for_weight(&lam).unwrap();
    let at_m = |v: Var| -> Option<Rational> {
        match v {
            Var::M(k) => Some(f.i0_vector()[k as usize - 1].clone()),
            _ => None,
        }
    };
    let base = ideal_superpotential_i0(4).unwrap().tropicalize(Some(lam.components()));
    let base_val = base.evaluate(&at_m).unwrap();
    let words = enumerate_reduced_words(4).unwrap();
    assert_eq!(words.len(), 16);
    for w in &words {
        let mu = tropical_critical_point(&lam, w).unwrap();
        assert_eq!(&mu, f.entries(), "word {:?}", w.letters());
        let pl = ideal_superpotential(w).unwrap().tropicalize(Some(lam.components()));
        let at_r = |v: Var| match v {
            Var::R(i, j) => mu.get(&Root::new(i as usize, j as usize).unwrap()).cloned(),
            _ => None,
        };
        assert_eq!(pl.evaluate(&at_r).unwrap(), base_val);
        assert_eq!(tropical_weight(&lam, &mu).unwrap(), vec![lam.ell(); 4]);
    }
}

fn beta_strategy(k: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((0i64..=6, 1i64..=3), k).prop_map(|v| v.into_iter().map(|(a, b)| rat(a, b)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recovers_random_fillings(n in 2usize..=5, seed in beta_strategy(4), ell in -4i64..=4) {
        let f = IdealFilling::from_first_diagonal(&seed[..n - 1]);
        prop_assert!(validate_filling(&f));
        let lam = DominantWeight::new(f.weight(&int(ell))).unwrap();
        prop_assert!(is_filling_for(&f, &lam));
        let found = fillings_for_weight_all(&lam).unwrap();
        prop_assert_eq!(found, vec![f.clone()]);
        let mu = f.i0_vector();
        prop_assert!(tropical_critical_conditions_hold(n, lam.components(), &mu).unwrap());
        prop_assert!(tropical_outgoing_sum_check(n, lam.components(), &mu).unwrap().iter().all(|x| x.1));
        let p = filling_to_trop_point(&f, &lam).unwrap();
        prop_assert!(p.critical_conditions_hold());
        prop_assert!(delta_from_minima_holds(&p));
        prop_assert!(staircase_minimum_holds(&f));
        prop_assert_eq!(trop_point_to_filling(&p).unwrap(), f.clone());
        prop_assert_eq!(tropical_weight(&lam, f.entries()).unwrap(), vec![lam.ell(); n]);
    }
}
