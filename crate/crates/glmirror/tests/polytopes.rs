//! Superpotential polytopes: H-representations, vertices, lattice points, weights, transfer.

use std::collections::BTreeMap;

use glmirror::charts::{braid_coordinate_change, string_to_ideal_i0, IdealCoords};
use glmirror::exact::{int, MinPlus, Rational};
use glmirror::fillings::filling_for_weight;
use glmirror::polytopes::*;
use glmirror::symbolic::VarTable;
use glmirror::weyl::{
    braid_path, enumerate_reduced_words, Move, positive_root_sequence, weyl_dimension, DominantWeight, ReducedWord,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn weight(v: &[i64]) -> DominantWeight {
    DominantWeight::from_ints(v).unwrap()
}

fn q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn ineq(c: &[i64], k: i64) -> Inequality {
    Inequality { coeffs: q(c), constant: int(k) }
}

/// Regular vertices, irregular vertex and two distinguished points, with weights.
type TableRow = (Vec<i64>, Vec<i64>);

fn string_table(l: &[i64]) -> Vec<TableRow> {
    let (a, b, c) = (l[0], l[1], l[2]);
    vec![
        (vec![0, 0, 0], vec![c, b, a]),
        (vec![0, b - c, 0], vec![b, c, a]),
        (vec![a - b, 0, 0], vec![c, a, b]),
        (vec![a - c, b - c, 0], vec![b, a, c]),
        (vec![0, a - c, a - b], vec![a, c, b]),
        (vec![b - c, a - c, a - b], vec![a, b, c]),
        (vec![0, a - b, a - b], vec![a - b + c, b, b]),
        (vec![a - b, b - c, 0], vec![b, a - b + c, b]),
        (vec![b - c, b - c, 0], vec![b, b, a - b + c]),
    ]
}

fn ideal_table(l: &[i64]) -> Vec<TableRow> {
    let (a, b, c) = (l[0], l[1], l[2]);
    vec![
        (vec![0, 0, 0], vec![c, b, a]),
        (vec![0, 0, b - c], vec![b, c, a]),
        (vec![0, a - b, -a + b], vec![c, a, b]),
        (vec![0, a - c, -a + b], vec![b, a, c]),
        (vec![a - b, 0, a - c], vec![a, c, b]),
        (vec![a - b, b - c, a - b], vec![a, b, c]),
        (vec![a - b, 0, a - b], vec![a - b + c, b, b]),
        (vec![0, a - b, -a + 2 * b - c], vec![b, a - b + c, b]),
        (vec![0, b - c, 0], vec![b, b, a - b + c]),
    ]
}

#[test]
fn string_hrep_matches_inequalities() {
    for l in [[2, 1, -1], [5, 2, 0], [3, 3, 1]] {
        let (a, b, c) = (l[0], l[1], l[2]);
        let p = polytope_hrep(PolytopeChart::String, &weight(&l)).unwrap();
        let expect = [
            ineq(&[1, 0, 0], 0),
            ineq(&[-1, 1, -2], a - b),
            ineq(&[0, 1, -1], 0),
            ineq(&[0, -1, 1], b - c),
            ineq(&[0, 0, 1], 0),
            ineq(&[0, 0, -1], a - b),
        ];
        assert_eq!(p.inequalities().len(), 6);
        assert_eq!(p.inequality_set(), expect.into_iter().collect());
    }
}

#[test]
fn ideal_hrep_matches_inequalities() {
    for l in [[2, 1, -1], [5, 2, 0], [3, 3, 1]] {
        let (a, b, c) = (l[0], l[1], l[2]);
        let p = polytope_hrep(PolytopeChart::Ideal, &weight(&l)).unwrap();
        let expect = [
            ineq(&[1, 0, 0], 0),
            ineq(&[-1, 0, 0], a - b),
            ineq(&[0, 1, 0], 0),
            ineq(&[-1, 1, 1], 0),
            ineq(&[1, -1, -1], b - c),
            ineq(&[-2, 0, 1], a - b),
        ];
        assert_eq!(p.inequalities().len(), 6);
        assert_eq!(p.inequality_set(), expect.into_iter().collect());
    }
}

fn check_table(chart: PolytopeChart, table: &[TableRow], l: &[i64]) {
    let lam = weight(l);
    let p = polytope_hrep(chart, &lam).unwrap();
    let verts = p.vertices().unwrap();
    let mut expect: Vec<Vec<Rational>> = table[..7].iter().map(|(v, _)| q(v)).collect();
    expect.sort();
    assert_eq!(verts, expect, "{chart}");
    for (pt, wt) in table {
        assert!(p.contains(&q(pt)), "{chart} {pt:?}");
        assert_eq!(trop_weight_projection(&q(pt), chart, &lam).unwrap(), q(wt), "{chart} {pt:?}");
    }
}

#[test]
fn vertex_tables() {
    for l in [[2, 1, -1], [7, 3, 0]] {
        check_table(PolytopeChart::String, &string_table(&l), &l);
        check_table(PolytopeChart::Ideal, &ideal_table(&l), &l);
    }
}

#[test]
fn spot_vertices() {
    let lam = weight(&[2, 1, -1]);
    let sv = polytope_hrep(PolytopeChart::String, &lam).unwrap().vertices().unwrap();
    for v in [[0, 0, 0], [3, 2, 0], [1, 2, 0]] {
        let p = q(&v);
        assert!(sv.contains(&p) || polytope_hrep(PolytopeChart::String, &lam).unwrap().contains(&p));
    }
    let iv = polytope_hrep(PolytopeChart::Ideal, &lam).unwrap().vertices().unwrap();
    assert!(iv.contains(&q(&[1, 0, 3])));
    assert!(iv.contains(&q(&[0, 1, -1])));
}

#[test]
fn trivial_weights() {
    for chart in [PolytopeChart::String, PolytopeChart::Ideal, PolytopeChart::Gt] {
        let p = polytope_hrep(chart, &weight(&[4, 4, 4])).unwrap();
        assert_eq!(p.vertices().unwrap(), vec![q(&[0, 0, 0])].into_iter().filter(|_| chart != PolytopeChart::Gt).chain((chart == PolytopeChart::Gt).then(|| q(&[4, 4, 4]))).collect::<Vec<_>>());
        assert_eq!(p.lattice_count().unwrap(), 1);
    }
    let p = polytope_hrep(PolytopeChart::String, &weight(&[0, 0, 0])).unwrap();
    assert_eq!(p.lattice_points().unwrap(), vec![vec![0, 0, 0]]);
}

/// Integral dominant weights with last entry 0 and first entry at most `top`.
fn weights_up_to(n: usize, top: i64) -> Vec<DominantWeight> {
    fn rec(n: usize, prefix: &mut Vec<i64>, top: i64, out: &mut Vec<DominantWeight>) {
        if prefix.len() == n - 1 {
            let mut v = prefix.clone();
            v.push(0);
            out.push(DominantWeight::from_ints(&v).unwrap());
            return;
        }
        let hi = prefix.last().copied().unwrap_or(top);
        for x in 0..=hi {
            prefix.push(x);
            rec(n, prefix, top, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), top, &mut out);
    out
}

#[test]
fn lattice_counts_are_dimensions() {
    for (n, top) in [(2, 5), (3, 5), (4, 2)] {
        for lam in weights_up_to(n, top) {
            let dim = weyl_dimension(&lam).unwrap();
            for chart in [PolytopeChart::String, PolytopeChart::Ideal, PolytopeChart::Gt] {
                let c = polytope_hrep(chart, &lam).unwrap().lattice_count().unwrap();
                assert_eq!(BigInt::from(c), dim, "{chart} {lam}");
            }
            assert_eq!(gt_pattern_count(&lam).unwrap(), dim, "{lam}");
        }
    }
}

#[test]
fn gt_examples() {
    assert_eq!(gt_pattern_count(&weight(&[2, 1, -1])).unwrap(), BigInt::from(15));
    assert_eq!(gt_polytope(&weight(&[1, 0, 0])).unwrap().lattice_count().unwrap(), 3);
}

fn weight_multiset(chart: PolytopeChart, lam: &DominantWeight) -> BTreeMap<Vec<Rational>, usize> {
    let mut m = BTreeMap::new();
    for p in polytope_hrep(chart, lam).unwrap().lattice_points().unwrap() {
        let pt: Vec<Rational> = p.iter().map(|&x| int(x)).collect();
        *m.entry(trop_weight_projection(&pt, chart, lam).unwrap()).or_insert(0) += 1;
    }
    m
}

#[test]
fn weight_multisets_agree_and_are_symmetric() {
    for l in [vec![2, 1, -1], vec![3, 1, 0], vec![2, 1, 1, 0]] {
        let lam = weight(&l);
        let s = weight_multiset(PolytopeChart::String, &lam);
        assert_eq!(s, weight_multiset(PolytopeChart::Ideal, &lam), "{lam}");
        assert_eq!(s, weight_multiset(PolytopeChart::Gt, &lam), "{lam}");
        for (w, k) in &s {
            let mut r = w.clone();
            r.reverse();
            assert_eq!(s.get(&r), Some(k));
            let mut sw = w.clone();
            sw.swap(0, 1);
            assert_eq!(s.get(&sw), Some(k));
            let mut sorted = w.clone();
            sorted.sort_by(|a, b| b.cmp(a));
            for (a, b) in sorted.iter().zip(lam.components()).scan((int(0), int(0)), |acc, (a, b)| {
                acc.0 += a;
                acc.1 += b;
                Some((acc.0.clone(), acc.1.clone()))
            }) {
                assert!(a <= b);
            }
        }
        assert_eq!(s.get(lam.components()), Some(&1));
    }
}

#[test]
fn string_and_ideal_polytopes_are_unimodularly_equivalent() {
    for n in [3usize, 4] {
        let images = string_to_ideal_i0(n);
        let zs = VarTable::string(n).coords().to_vec();
        assert_eq!(exponent_determinant(&images, &zs).unwrap(), int(1));
        let lam = if n == 3 { weight(&[3, 1, 0]) } else { weight(&[2, 1, 1, 0]) };
        let sp = polytope_hrep(PolytopeChart::String, &lam).unwrap();
        let ip = polytope_hrep(PolytopeChart::Ideal, &lam).unwrap();
        let mut mapped: Vec<Vec<Rational>> = sp
            .lattice_points()
            .unwrap()
            .iter()
            .map(|p| tropical_monomial_map(&images, &zs, &p.iter().map(|&x| int(x)).collect::<Vec<_>>()).unwrap())
            .collect();
        mapped.sort();
        let target: Vec<Vec<Rational>> =
            ip.lattice_points().unwrap().iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect();
        assert_eq!(mapped, target);
    }
}

#[test]
fn critical_point_is_interior_with_central_weight() {
    let lam = DominantWeight::new(vec![int(2), int(1), int(-1)]).unwrap();
    let f = filling_for_weight(&lam).unwrap();
    let mu = f.i0_vector();
    let p = polytope_hrep(PolytopeChart::Ideal, &lam).unwrap();
    assert!(p.inequalities().iter().all(|h| h.value(&mu) > int(0)));
    assert_eq!(trop_weight_projection(&mu, PolytopeChart::Ideal, &lam).unwrap(), vec![lam.ell(); 3]);
}

#[test]
fn identity_transfer_and_fixed_critical_point() {
    let w = ReducedWord::i0(4);
    let pt = q(&[1, -2, 3, 0, 5, 1]);
    assert_eq!(pl_transfer(&pt, &w, &w).unwrap(), pt);
    let lam = weight(&[5, 2, 1, -1]);
    let f = filling_for_weight(&lam).unwrap();
    for word in enumerate_reduced_words(4).unwrap() {
        let moved = pl_transfer(&f.i0_vector(), &w, &word).unwrap();
        let by_root: Vec<Rational> = positive_root_sequence(&word).iter().map(|r| f.entries()[r].clone()).collect();
        assert_eq!(moved, by_root);
    }
}

#[test]
fn word_lattice_points_count_dimension() {
    let lam = weight(&[2, 1, 0, 0]);
    let dim = weyl_dimension(&lam).unwrap();
    for word in enumerate_reduced_words(4).unwrap().iter().step_by(3) {
        for chart in [PolytopeChart::Ideal, PolytopeChart::String] {
            let pts = lattice_points_for_word(chart, word, &lam).unwrap();
            assert_eq!(BigInt::from(pts.len()), dim);
            assert!(pts.iter().all(|p| is_integral_point(p)));
            let mut dedup = pts.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), pts.len());
        }
    }
}

fn point_n4() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-6i64..=6, 1i64..=3), 6).prop_map(|v| v.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn transfer_roundtrip_n4(pt in point_n4(), a in 0usize..16, b in 0usize..16) {
        let words = enumerate_reduced_words(4).unwrap();
        let (u, w) = (&words[a], &words[b]);
        let there = pl_transfer(&pt, u, w).unwrap();
        prop_assert_eq!(pl_transfer(&there, w, u).unwrap(), pt.clone());
        let s_there = string_pl_transfer(&pt, u, w).unwrap();
        prop_assert_eq!(string_pl_transfer(&s_there, w, u).unwrap(), pt);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tropical_moves_preserve_box_sums(pt in point_n4(), b in 0usize..16) {
        let words = enumerate_reduced_words(4).unwrap();
        let from = ReducedWord::i0(4);
        let mut cur = IdealCoords::from_positional(from.clone(), &pt.iter().cloned().map(MinPlus).collect::<Vec<_>>()).unwrap();
        for mv in braid_path(&from, &words[b]).unwrap() {
            let next = braid_coordinate_change(&cur, mv).unwrap();
            if let Move::Braid { pos } = mv {
                let roots = positive_root_sequence(cur.word());
                let triple = [roots[pos - 1], roots[pos], roots[pos + 1]];
                let mid = *triple.iter().max_by_key(|r| r.j - r.i).unwrap();
                for outer in triple.iter().filter(|r| **r != mid) {
                    prop_assert_eq!(&next.get(*outer).0 + &next.get(mid).0, &cur.get(*outer).0 + &cur.get(mid).0);
                }
            } else {
                prop_assert_eq!(next.values(), cur.values());
            }
            cur = next;
        }
    }

    #[test]
    fn membership_is_word_independent(pt in prop::collection::vec(-2i64..=4, 6), b in 0usize..16) {
        let lam = weight(&[3, 1, 0, 0]);
        let words = enumerate_reduced_words(4).unwrap();
        let i0 = ReducedWord::i0(4);
        let x: Vec<Rational> = pt.iter().map(|&v| int(v)).collect();
        let inside = polytope_hrep(PolytopeChart::Ideal, &lam).unwrap().contains(&x);
        let moved = pl_transfer(&x, &i0, &words[b]).unwrap();
        prop_assert_eq!(contains_for_word(PolytopeChart::Ideal, &words[b], &lam, &moved).unwrap(), inside);
        let s_inside = polytope_hrep(PolytopeChart::String, &lam).unwrap().contains(&x);
        let s_moved = string_pl_transfer(&x, &i0, &words[b]).unwrap();
        prop_assert_eq!(contains_for_word(PolytopeChart::String, &words[b], &lam, &s_moved).unwrap(), s_inside);
    }
}
