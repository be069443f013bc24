//! Quiver decorations, torus maps and critical-point identities.

use glmirror::charts::{ideal_superpotential_i0, ideal_to_string_i0, ideal_weight_formula_i0, monomial_rules, string_superpotential};
use glmirror::exact::{rat, PosLead, Rational, Semifield};
use glmirror::quiver::*;
use glmirror::symbolic::{LaurentMonomial, Monomial, SubFreeExpr, Var};
use glmirror::weyl::ReducedWord;
use proptest::prelude::*;

fn mono(pairs: &[(Var, i32)]) -> LaurentMonomial {
    LaurentMonomial::from_monomial(Monomial::from_pairs(pairs.iter().cloned()))
}

#[test]
fn n3_ideal_decoration_matches_figure() {
    use Var::{D, M};
    let dec = decorate(3, QuiverChart::Ideal).unwrap();
    let mut verticals: Vec<LaurentMonomial> = [Arrow::A(1, 1), Arrow::A(2, 1), Arrow::A(2, 2)]
        .iter()
        .map(|a| dec.label(*a).clone())
        .collect();
    verticals.sort();
    let mut expect = vec![mono(&[(M(1), 1)]), mono(&[(M(2), 1)]), mono(&[(M(2), 1), (M(3), 1), (M(1), -1)])];
    expect.sort();
    assert_eq!(verticals, expect);
    assert_eq!(dec.label(Arrow::B(2, 2)), &mono(&[(D(1), 1), (D(2), -1), (M(1), -1)]));
    assert_eq!(dec.label(Arrow::B(3, 2)), &mono(&[(D(1), 1), (D(2), -1), (M(3), 1), (M(1), -2)]));
    assert_eq!(dec.label(Arrow::B(3, 3)), &mono(&[(D(2), 1), (D(3), -1), (M(1), 1), (M(2), -1), (M(3), -1)]));
}

#[test]
fn n3_string_decoration_matches_figure() {
    use Var::{D, Z};
    let dec = decorate(3, QuiverChart::String).unwrap();
    let mut verticals: Vec<LaurentMonomial> = [Arrow::A(1, 1), Arrow::A(2, 1), Arrow::A(2, 2)]
        .iter()
        .map(|a| dec.label(*a).clone())
        .collect();
    verticals.sort();
    let mut expect = vec![mono(&[(Z(1), 1)]), mono(&[(Z(3), 1)]), mono(&[(Z(2), 1), (Z(3), -1)])];
    expect.sort();
    assert_eq!(verticals, expect);
    assert_eq!(dec.label(Arrow::B(2, 2)), &mono(&[(D(1), 1), (D(2), -1), (Z(3), -1)]));
    assert_eq!(dec.label(Arrow::B(3, 2)), &mono(&[(D(1), 1), (D(2), -1), (Z(2), 1), (Z(1), -1), (Z(3), -2)]));
    assert_eq!(dec.label(Arrow::B(3, 3)), &mono(&[(D(2), 1), (D(3), -1), (Z(3), 1), (Z(2), -1)]));
}

#[test]
fn relations_hold_for_all_decorations() {
    for n in 2..=5 {
        for chart in [QuiverChart::Ideal, QuiverChart::String] {
            let dec = decorate(n, chart).unwrap();
            assert!(dec.box_relations_hold(), "n={n} {chart:?}");
            assert!(dec.star_relations_hold(), "n={n} {chart:?}");
            let (kappa, _) = dec.torus_maps().unwrap();
            let d: Vec<LaurentMonomial> = (1..=n as u16).map(|i| LaurentMonomial::var(Var::D(i))).collect();
            assert_eq!(kappa, d);
        }
    }
}

#[test]
fn quiver_superpotential_equals_chart_superpotential() {
    for n in 2..=4 {
        let fi = decorate(n, QuiverChart::Ideal).unwrap().superpotential();
        assert!(fi.canonical_eq(&ideal_superpotential_i0(n).unwrap()), "ideal n={n}");
        let fs = decorate(n, QuiverChart::String).unwrap().superpotential();
        assert!(fs.canonical_eq(&string_superpotential(&ReducedWord::i0(n)).unwrap()), "string n={n}");
        let rules = monomial_rules(Var::Z, &ideal_to_string_i0(n));
        assert!(fs.substitute(&rules).canonical_eq(&fi), "pullback n={n}");
    }
}

#[test]
fn rank_one_superpotential() {
    let f = decorate(2, QuiverChart::Ideal).unwrap().superpotential();
    let m1 = SubFreeExpr::var(Var::M(1));
    let expect = Semifield::add(
        &m1,
        &SubFreeExpr::mono(mono(&[(Var::D(1), 1), (Var::D(2), -1), (Var::M(1), -1)])),
    );
    assert!(f.canonical_eq(&expect));
}

#[test]
fn gamma_is_the_weight_matrix() {
    for n in 2..=5 {
        let (_, gamma) = decorate(n, QuiverChart::Ideal).unwrap().torus_maps().unwrap();
        let d: Vec<SubFreeExpr> = (1..=n as u16).map(|i| SubFreeExpr::var(Var::D(i))).collect();
        let m: Vec<SubFreeExpr> = (1..=(n * (n - 1) / 2) as u16).map(|k| SubFreeExpr::var(Var::M(k))).collect();
        let wt = ideal_weight_formula_i0(&d, &m).unwrap();
        for k in 0..n {
            assert!(SubFreeExpr::mono(gamma[k].clone()).canonical_eq(&wt[k]), "n={n} k={k}");
        }
    }
}

#[test]
fn trivial_labels_give_trivial_gamma() {
    let dec = decorate(4, QuiverChart::Ideal).unwrap();
    let (_, gamma) = dec.torus_maps().unwrap();
    for g in gamma {
        assert_eq!(g.evaluate::<Rational>(&|_| Some(rat(1, 1))).unwrap(), rat(1, 1));
    }
}

#[test]
fn critical_condition_structure() {
    let c2 = decorate(2, QuiverChart::Ideal).unwrap().critical_conditions();
    assert_eq!(c2.len(), 1);
    assert_eq!(c2[0].incoming.iter().map(|x| x.0).collect::<Vec<_>>(), vec![Arrow::B(2, 2)]);
    assert_eq!(c2[0].outgoing.iter().map(|x| x.0).collect::<Vec<_>>(), vec![Arrow::A(1, 1)]);
    let c3 = decorate(3, QuiverChart::String).unwrap().critical_conditions();
    let v21 = c3.iter().find(|c| c.vertex == Vertex { i: 2, j: 1 }).unwrap();
    assert_eq!(v21.incoming.len() + v21.outgoing.len(), 3);
    assert_eq!(decorate(4, QuiverChart::Ideal).unwrap().critical_conditions().len(), 6);
    assert_eq!(decorate(5, QuiverChart::Ideal).unwrap().critical_conditions().len(), 10);
}

fn poslead() -> impl Strategy<Value = PosLead> {
    (-3i64..=3, 1i64..=2, 1i64..=7, 1i64..=3).prop_map(|(v, vd, c, cd)| PosLead::new(rat(v, vd), rat(c, cd)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn n3_critical_family_satisfies_identities(m2 in poslead(), x in poslead(), d3 in poslead()) {
        let p = critical_family_n3(&m2, &x, &d3);
        let dec = decorate(3, QuiverChart::Ideal).unwrap();
        let assign = p.assign();
        let values = dec.evaluate(&assign).unwrap();
        for c in dec.critical_conditions() {
            prop_assert!(c.holds(&values));
        }
        let report = outgoing_sum_check(&dec, &assign).unwrap();
        prop_assert!(report.passed());
        // Weight at a critical point is scalar with c^3 = d_1 d_2 d_3.
        let (_, gamma) = dec.torus_maps().unwrap();
        let g: Vec<PosLead> = gamma.iter().map(|m| m.evaluate(&assign).unwrap()).collect();
        prop_assert_eq!(&g[0], &g[1]);
        prop_assert_eq!(&g[1], &g[2]);
        let cube = g[0].mul(&g[0]).mul(&g[0]);
        prop_assert_eq!(cube, p.d[0].mul(&p.d[1]).mul(&p.d[2]));
        // d_j/d_{j+1} is recovered from the ideal coordinates.
        let coroots = simple_coroots_from_m(&dec, &assign).unwrap();
        prop_assert_eq!(&coroots[0], &p.d[0].div(&p.d[1]));
        prop_assert_eq!(&coroots[1], &p.d[1].div(&p.d[2]));
    }

    #[test]
    fn generic_points_are_reported_not_asserted(m1 in poslead(), m2 in poslead(), m3 in poslead()) {
        let dec = decorate(3, QuiverChart::Ideal).unwrap();
        let one = PosLead::constant(rat(1, 1)).unwrap();
        let assign = |v: Var| match v {
            Var::M(1) => Some(m1.clone()),
            Var::M(2) => Some(m2.clone()),
            Var::M(3) => Some(m3.clone()),
            Var::D(_) => Some(one.clone()),
            _ => None,
        };
        let values = dec.evaluate(&assign).unwrap();
        let all_hold = dec.critical_conditions().iter().all(|c| c.holds(&values));
        let report = outgoing_sum_check(&dec, &assign).unwrap();
        prop_assert_eq!(all_hold, matches!(report, OutgoingSumReport::Checked(_)));
    }
}

#[test]
fn rank_one_outgoing_sum() {
    let dec = decorate(2, QuiverChart::Ideal).unwrap();
    let assign = |v: Var| match v {
        Var::M(1) => Some(rat(3, 1)),
        Var::D(1) => Some(rat(9, 1)),
        Var::D(2) => Some(rat(1, 1)),
        _ => None,
    };
    assert_eq!(outgoing_sum_check(&dec, &assign).unwrap(), OutgoingSumReport::Checked(vec![(Vertex { i: 2, j: 1 }, true)]));
}
