//! Chart constructions checked against known n = 3, 4 examples and
//! independent oracles.

use std::collections::BTreeMap;

use glmirror::charts::*;
use glmirror::exact::{int, rat, PosLead, Rational, Semifield, Semiring};
use glmirror::matrix::{x_minus_product, Matrix};
use glmirror::symbolic::{LaurentMonomial, LaurentPoly, Monomial, RatFn, SubFreeExpr, Var};
use glmirror::weyl::{enumerate_reduced_words, neighbors, Move, ReducedWord, Root};
use proptest::prelude::*;

fn v(x: Var) -> SubFreeExpr {
    SubFreeExpr::var(x)
}
fn z(k: u16) -> SubFreeExpr {
    v(Var::Z(k))
}
fn m(k: u16) -> SubFreeExpr {
    v(Var::M(k))
}
fn d(k: u16) -> SubFreeExpr {
    v(Var::D(k))
}
fn mul(a: &SubFreeExpr, b: &SubFreeExpr) -> SubFreeExpr {
    Semifield::mul(a, b)
}
fn div(a: &SubFreeExpr, b: &SubFreeExpr) -> SubFreeExpr {
    Semifield::div(a, b)
}
fn sum(items: Vec<SubFreeExpr>) -> SubFreeExpr {
    SubFreeExpr::sum_of(items).unwrap()
}
fn r(i: usize, j: usize) -> Root {
    Root::new(i, j).unwrap()
}
fn mono(pairs: &[(Var, i32)]) -> LaurentMonomial {
    LaurentMonomial::from_monomial(Monomial::from_pairs(pairs.iter().cloned()))
}

/// `W(d, z)` for `n = 3` in the string chart of `(1,2,1)`.
fn golden_string_w3() -> SubFreeExpr {
    let q1 = div(&d(1), &d(2));
    let q2 = div(&d(2), &d(3));
    sum(vec![
        z(1),
        div(&z(2), &z(3)),
        z(3),
        mul(&q1, &div(&SubFreeExpr::constant(int(1)).unwrap(), &z(3))),
        mul(&q1, &div(&z(2), &mul(&z(1), &mul(&z(3), &z(3))))),
        mul(&q2, &div(&z(3), &z(2))),
    ])
}

/// `W(d, m)` for `n = 3` in the ideal chart of `(1,2,1)`.
fn golden_ideal_w3() -> SubFreeExpr {
    let q1 = div(&d(1), &d(2));
    let q2 = div(&d(2), &d(3));
    sum(vec![
        m(1),
        m(2),
        div(&mul(&m(2), &m(3)), &m(1)),
        mul(&q2, &div(&m(1), &mul(&m(2), &m(3)))),
        mul(&q1, &div(&m(3), &mul(&m(1), &m(1)))),
        mul(&q1, &div(&SubFreeExpr::constant(int(1)).unwrap(), &m(1))),
    ])
}

#[test]
fn string_superpotential_n3_matches_reference_expression() {
    let w = string_superpotential(&ReducedWord::i0(3)).unwrap();
    assert!(w.canonical_eq(&golden_string_w3()), "got {}", w.render_canonical());
    assert_eq!(w.monomial_terms().unwrap().len(), 6);
}

#[test]
fn string_chart_n3_factors_match_reference_matrices() {
    let p = string_chart_symbolic(&ReducedWord::i0(3)).unwrap();
    let zv = |k| RatFn::var(Var::Z(k));
    let expect_u1 = [
        [RatFn::poly(LaurentPoly::constant(int(1))), zv(3), zv(2)],
        [RatFn::zero(), RatFn::one(), Semiring::add(&zv(1), &Semifield::div(&zv(2), &zv(3)))],
        [RatFn::zero(), RatFn::zero(), RatFn::one()],
    ];
    for rr in 0..3 {
        for c in 0..3 {
            assert_eq!(p.u1.at(rr, c), &expect_u1[rr][c], "u1 entry ({rr},{c})");
        }
    }
    let b11 = RatFn::monomial(&mono(&[(Var::D(3), 1), (Var::Z(2), 1)]));
    let b33 = RatFn::monomial(&mono(&[(Var::D(1), 1), (Var::Z(1), -1), (Var::Z(3), -1)]));
    assert_eq!(p.b.at(0, 0), &b11);
    assert_eq!(p.b.at(2, 2), &b33);
    assert!(p.b.is_lower_triangular());
}

#[test]
fn ideal_superpotential_n3_matches_reference_expression() {
    let w = ideal_superpotential_i0(3).unwrap();
    assert!(w.canonical_eq(&golden_ideal_w3()), "got {}", w.render_canonical());
}

#[test]
fn ideal_weight_n3_matches_reference_matrix() {
    let p = ideal_chart_symbolic_i0(3).unwrap();
    let expect = [
        mono(&[(Var::D(3), 1), (Var::M(2), 1), (Var::M(3), 1)]),
        mono(&[(Var::D(2), 1), (Var::M(1), 1), (Var::M(3), -1)]),
        mono(&[(Var::D(1), 1), (Var::M(1), -1), (Var::M(2), -1)]),
    ];
    for (k, e) in expect.iter().enumerate() {
        assert_eq!(p.wt()[k], RatFn::monomial(e));
    }
    let dv: Vec<RatFn> = (1..=3).map(|i| RatFn::var(Var::D(i))).collect();
    assert_eq!(p.hw(), &dv[..]);
}

#[test]
fn rank_one_ideal_chart_is_direct_two_by_two_computation() {
    let w = ReducedWord::new(2, vec![1]).unwrap();
    let coords = IdealCoords::from_positional(w, &[RatFn::var(Var::M(1))]).unwrap();
    let dv = vec![RatFn::var(Var::D(1)), RatFn::var(Var::D(2))];
    let p = ideal_chart_point(&dv, &coords).unwrap();
    let m1 = RatFn::var(Var::M(1));
    let expect_w = Semiring::add(&m1, &Semifield::div(&Semifield::div(&dv[0], &dv[1]), &m1));
    assert_eq!(p.superpotential(), expect_w);
    assert_eq!(p.wt(), vec![Semifield::mul(&dv[1], &m1), Semifield::div(&dv[0], &m1)]);
}

#[test]
fn universal_weight_n4_matches_reference_formula() {
    let dv: Vec<SubFreeExpr> = (1..=4).map(d).collect();
    let mv: BTreeMap<Root, SubFreeExpr> = Root::all(4).into_iter().map(|a| (a, v(Var::root(a)))).collect();
    let t = universal_weight(&dv, &mv).unwrap();
    let mr = |i, j| v(Var::root(r(i, j)));
    let expect = [
        mul(&d(4), &mul(&mr(1, 4), &mul(&mr(2, 4), &mr(3, 4)))),
        div(&mul(&d(3), &mul(&mr(1, 3), &mr(2, 3))), &mr(3, 4)),
        div(&mul(&d(2), &mr(1, 2)), &mul(&mr(2, 3), &mr(2, 4))),
        div(&d(1), &mul(&mr(1, 2), &mul(&mr(1, 3), &mr(1, 4)))),
    ];
    for k in 0..4 {
        assert!(t[k].canonical_eq(&expect[k]), "entry {k}: {}", t[k]);
    }
    let ones: BTreeMap<Root, Rational> = Root::all(4).into_iter().map(|a| (a, int(1))).collect();
    let dd = vec![int(1), int(2), int(3), int(4)];
    assert_eq!(universal_weight(&dd, &ones).unwrap(), vec![int(4), int(3), int(2), int(1)]);
}

#[test]
fn universal_weight_reduces_to_i0_formula() {
    for n in 2..=5 {
        let dv: Vec<SubFreeExpr> = (1..=n as u16).map(d).collect();
        let mpos: Vec<SubFreeExpr> = (1..=(n * (n - 1) / 2) as u16).map(m).collect();
        let coords = IdealCoords::from_positional(ReducedWord::i0(n), &mpos).unwrap();
        let a = universal_weight(&dv, coords.values()).unwrap();
        let b = ideal_weight_formula_i0(&dv, &mpos).unwrap();
        for k in 0..n {
            assert!(a[k].canonical_eq(&b[k]));
        }
    }
}

#[test]
fn coordinate_change_examples() {
    let mz = string_to_ideal_i0(4);
    assert_eq!(mz[3], mono(&[(Var::Z(5), 1), (Var::Z(4), -1)]));
    assert_eq!(mz[4], mono(&[(Var::Z(2), 1), (Var::Z(1), -1)]));
    assert_eq!(mz[5], mono(&[(Var::Z(3), 1), (Var::Z(2), -1)]));
}

#[test]
fn coordinate_change_and_inverse_compose_to_identity() {
    for n in 2..=6 {
        let fwd = string_to_ideal_i0(n);
        let inv = ideal_to_string_i0(n);
        let rules: BTreeMap<Var, LaurentMonomial> =
            inv.iter().enumerate().map(|(k, x)| (Var::Z((k + 1) as u16), x.clone())).collect();
        for (k, x) in fwd.iter().enumerate() {
            assert_eq!(x.substitute(&rules), LaurentMonomial::var(Var::M((k + 1) as u16)), "n={n} k={k}");
        }
    }
}

#[test]
fn ansatz_compositions_equal_closed_forms() {
    for n in 2..=5 {
        assert_eq!(p_from_z_ansatz(n).unwrap(), p_from_z_closed_form(n), "p, n={n}");
        assert_eq!(m_from_p_ansatz(n).unwrap(), m_from_p_closed_form(n), "m(p), n={n}");
        assert_eq!(m_from_z_ansatz(n).unwrap(), string_to_ideal_i0(n), "m(z), n={n}");
    }
}

#[test]
fn string_superpotential_pulls_back_to_ideal_superpotential() {
    for n in 2..=4 {
        let ws = string_superpotential(&ReducedWord::i0(n)).unwrap();
        let wi = ideal_superpotential_i0(n).unwrap();
        let rules = monomial_rules(Var::Z, &ideal_to_string_i0(n));
        assert!(ws.substitute(&rules).canonical_eq(&wi), "n={n}");
    }
}

#[test]
fn string_weight_formula_matches_ldu_weight() {
    for n in 2..=4 {
        for w in enumerate_reduced_words(n).unwrap().into_iter().take(4) {
            let p = string_chart_symbolic(&w).unwrap();
            let dv: Vec<RatFn> = (1..=n as u16).map(|i| RatFn::var(Var::D(i))).collect();
            let zv: Vec<RatFn> = (1..=w.len() as u16).map(|k| RatFn::var(Var::Z(k))).collect();
            assert_eq!(p.wt(), string_weight_formula(&w, &dv, &zv).unwrap(), "word {w}");
            // t_R = w̄_0 · d · [u]_0 · w̄_0^{-1}: position n−j+1 holds d_j·u_jj.
            let u = x_minus_product(n, w.letters(), &zv).unwrap();
            for j in 0..n {
                assert_eq!(p.wt()[n - 1 - j], Semiring::mul(&dv[j], u.at(j, j)));
            }
        }
    }
}

#[test]
fn twist_diagonal_factor_is_identity() {
    use glmirror::matrix::w0bar;
    for n in 2..=4 {
        for w in enumerate_reduced_words(n).unwrap() {
            let zv: Vec<RatFn> = (1..=w.len() as u16).map(|k| RatFn::var(Var::Z(k))).collect();
            let u = x_minus_product(n, w.letters(), &zv).unwrap();
            let w0: Matrix<RatFn> = w0bar(n);
            let (_, dd, _) = w0.mul(&u.transpose()).inverse().unwrap().gauss_ldu().unwrap();
            assert_eq!(dd, Matrix::identity(n), "word {w}");
        }
    }
}

#[test]
fn hw_recovers_d_in_ideal_chart() {
    let w = ReducedWord::new(4, vec![1, 2, 3, 2, 1, 2]).unwrap();
    let vals: Vec<Rational> = vec![rat(1, 2), int(3), rat(5, 7), int(2), rat(9, 4), int(1)];
    let coords = IdealCoords::from_positional(w, &vals).unwrap();
    let dv = vec![int(2), rat(1, 3), int(5), rat(7, 2)];
    let p = ideal_chart_point(&dv, &coords).unwrap();
    assert_eq!(p.hw(), &dv[..]);
}

#[test]
fn braid_change_preserves_products_and_roundtrips() {
    let coords = symbolic_ideal_coords(&ReducedWord::i0(3));
    let out = braid_coordinate_change(&coords, Move::Braid { pos: 1 }).unwrap();
    let (a, ab, b) = (r(1, 2), r(1, 3), r(2, 3));
    assert!(mul(out.get(a), out.get(ab)).canonical_eq(&mul(coords.get(a), coords.get(ab))));
    let expect_a = div(&mul(coords.get(ab), &Semifield::add(coords.get(a), coords.get(b))), coords.get(b));
    assert!(out.get(a).canonical_eq(&expect_a));
    let back = braid_coordinate_change(&out, Move::Braid { pos: 1 }).unwrap();
    for root in Root::all(3) {
        assert!(back.get(root).canonical_eq(coords.get(root)));
    }
}

#[test]
fn universal_weight_is_invariant_under_single_moves() {
    for n in 3..=4 {
        let dv: Vec<SubFreeExpr> = (1..=n as u16).map(d).collect();
        for w in enumerate_reduced_words(n).unwrap() {
            let c = symbolic_ideal_coords(&w);
            let t0 = universal_weight(&dv, c.values()).unwrap();
            for (_, mv) in neighbors(w.letters()) {
                if let Move::Braid { .. } = mv {
                    let c2 = braid_coordinate_change(&c, mv).unwrap();
                    let t1 = universal_weight(&dv, c2.values()).unwrap();
                    for k in 0..n {
                        assert!(t0[k].canonical_eq(&t1[k]));
                    }
                }
            }
        }
    }
}

#[test]
fn transfer_example_n4_through_string_coordinates() {
    let i = ReducedWord::new(4, vec![1, 2, 3, 2, 1, 2]).unwrap();
    let i0 = ReducedWord::i0(4);
    let zp: Vec<SubFreeExpr> = (1..=6).map(|k| v(Var::Z(k))).collect();
    // z' (word i) → z (word i_0) → m (word i_0) → m' (word i).
    let zz = string_transfer(&i, &zp, &i0).unwrap();
    let mz = string_to_ideal_i0(4);
    let zrules: BTreeMap<Var, SubFreeExpr> =
        zz.iter().enumerate().map(|(k, e)| (Var::Z((k + 1) as u16), e.clone())).collect();
    let mvals: Vec<SubFreeExpr> =
        mz.iter().map(|x| SubFreeExpr::mono(x.clone()).substitute(&zrules)).collect();
    let out = chart_transfer(&IdealCoords::from_positional(i0, &mvals).unwrap(), &i).unwrap();
    let zq = |k: u16| v(Var::Z(k));
    let s = Semifield::add(&mul(&zq(4), &zq(6)), &zq(5));
    assert!(out.get(r(1, 2)).canonical_eq(&div(&s, &zq(6))));
    assert!(out.get(r(1, 3)).canonical_eq(&div(&mul(&zq(5), &zq(6)), &s)));
    assert!(out.get(r(1, 4)).canonical_eq(&zq(1)));
    let e34 = Semifield::add(
        &div(&zq(2), &zq(1)),
        &div(&mul(&zq(3), &zq(5)), &mul(&zq(1), &mul(&zq(4), &s))),
    );
    assert!(out.get(r(3, 4)).canonical_eq(&e34));
    let e24 = div(
        &mul(&zq(3), &mul(&zq(4), &s)),
        &Semifield::add(&mul(&zq(2), &mul(&zq(4), &s)), &mul(&zq(3), &zq(5))),
    );
    assert!(out.get(r(2, 4)).canonical_eq(&e24));
    // m'_{α23} = m_5(m_4+m_6)/m_6 expanded through the string coordinates.
    let e23 = Semifield::add(
        &div(&zq(2), &zq(1)),
        &div(&mul(&mul(&zq(2), &zq(2)), &mul(&zq(4), &s)), &mul(&zq(1), &mul(&zq(3), &zq(5)))),
    );
    assert!(out.get(r(2, 3)).canonical_eq(&e23));
    // The braid move preserves m'_{α23}·m'_{α24} = m_4·m_5 = z_5 z_2/(z_4 z_1).
    let prod = mul(out.get(r(2, 3)), out.get(r(2, 4)));
    let expect = div(&mul(&zq(2), &mul(&zq(4), &s)), &mul(&zq(1), &zq(5)));
    assert!(prod.canonical_eq(&expect));
}

fn poslead_strategy() -> impl Strategy<Value = PosLead> {
    (-4i64..=4, 1i64..=3, 1i64..=9, 1i64..=4)
        .prop_map(|(vn, vd, cn, cd)| PosLead::new(rat(vn, vd), rat(cn, cd)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn transfer_roundtrip_is_identity(vals in prop::collection::vec(poslead_strategy(), 6), a in 0usize..16, b in 0usize..16) {
        let words = enumerate_reduced_words(4).unwrap();
        let c = IdealCoords::from_positional(words[a].clone(), &vals).unwrap();
        let there = chart_transfer(&c, &words[b]).unwrap();
        let back = chart_transfer(&there, &words[a]).unwrap();
        prop_assert_eq!(back.values(), c.values());
    }

    #[test]
    fn ideal_chart_matrix_is_word_independent(vals in prop::collection::vec(1i64..=9, 6), a in 0usize..16, b in 0usize..16) {
        let words = enumerate_reduced_words(4).unwrap();
        let q: Vec<Rational> = vals.iter().map(|&x| rat(x, 2)).collect();
        let dv = vec![int(3), int(1), rat(1, 2), int(2)];
        let c = IdealCoords::from_positional(words[a].clone(), &q).unwrap();
        let c2 = chart_transfer(&c, &words[b]).unwrap();
        let b1 = ideal_chart_b(&dv, &c).unwrap();
        let b2 = ideal_chart_b(&dv, &c2).unwrap();
        prop_assert_eq!(b1, b2);
    }
}

#[test]
fn string_and_ideal_charts_agree_on_leading_terms() {
    use glmirror::charts::ChartConsistency;
    use glmirror::exact::PosLead;
    use glmirror::toeplitz::random_poslead;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for n in 3..=4 {
        let c = ChartConsistency::new(n).unwrap();
        for _ in 0..10 {
            let d: Vec<PosLead> = (0..n).map(|_| random_poslead(&mut rng, 3)).collect();
            let m: Vec<PosLead> = (0..n * (n - 1) / 2).map(|_| random_poslead(&mut rng, 3)).collect();
            assert!(c.check(&d, &m).unwrap());
        }
    }
}
