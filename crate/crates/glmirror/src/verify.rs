//! Verification battery: ten exact checks of the structural results implemented by the crate,
//! grouped into suites. Every check is deterministic (fixed random seeds) and reports its
//! runtime against a budget.
//!
//! ```
//! use glmirror::verify::{run_criterion, Suite};
//! let r = run_criterion(1);
//! assert!(r.passed, "{}", r.detail);
//! assert_eq!("minors".parse::<Suite>().unwrap().criteria(), vec![4, 5]);
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chamber::{chamber_minor_monomiality_check, AnsatzTarget};
use crate::charts::{
    ideal_superpotential_i0, m_from_p_ansatz, m_from_p_closed_form, m_from_z_ansatz, p_from_z_ansatz,
    p_from_z_closed_form, string_superpotential, string_to_ideal_i0, ChartConsistency,
};
use crate::error::{MirrorError, Result};
use crate::exact::{int, rat, PosLead, Rational, Semifield};
use crate::fillings::{
    filling_for_weight, filling_to_trop_point, trop_point_to_filling, tropical_critical_point, tropical_weight,
    validate_filling, IdealFilling,
};
use crate::polytopes::{gt_pattern_count, polytope_hrep, trop_weight_projection, Inequality, PolytopeChart};
use crate::quiver::{decorate, tropical_outgoing_sum_check, QuiverChart};
use crate::symbolic::{SubFreeExpr, Var};
use crate::toeplitz::{
    is_toeplitz, random_poslead, random_shift_factors, theorem_check, toeplitz_family_n3, toeplitz_from_shifts,
    ToeplitzWitness,
};
use crate::weyl::{enumerate_reduced_words, num_positive_roots, weyl_dimension, DominantWeight, ReducedWord, Root};

/// Number of criteria in the battery.
pub const CRITERIA: u8 = 10;

/// Outcome of one criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    /// Criterion number, `1..=10`.
    pub id: u8,
    /// Short name.
    pub name: &'static str,
    /// Whether the check succeeded within its time budget.
    pub passed: bool,
    /// Human-readable summary of what was checked or what failed.
    pub detail: String,
    /// Wall-clock time spent.
    pub elapsed: Duration,
    /// Time budget.
    pub budget: Duration,
}

impl CriterionResult {
    /// JSON form; the runtime is omitted so that output is reproducible.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "budget_s": self.budget.as_secs(),
        })
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {:>2} {:<28} {:>8.3}s / {}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

/// Named groups of criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Chamber minors and the Chamber Ansatz compositions.
    Minors,
    /// Superpotentials and chart consistency.
    Charts,
    /// Quiver identities.
    Quiver,
    /// Tropical critical points and fillings.
    Fillings,
    /// Superpotential polytopes.
    Polytopes,
    /// Toeplitz witnesses.
    Toeplitz,
    /// Everything.
    All,
}

impl Suite {
    /// Criterion numbers in this suite.
    pub fn criteria(&self) -> Vec<u8> {
        match self {
            Suite::Minors => vec![4, 5],
            Suite::Charts => vec![1, 6],
            Suite::Quiver => vec![10],
            Suite::Fillings => vec![7, 8],
            Suite::Polytopes => vec![2, 3],
            Suite::Toeplitz => vec![9],
            Suite::All => (1..=CRITERIA).collect(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Minors => "minors",
            Suite::Charts => "charts",
            Suite::Quiver => "quiver",
            Suite::Fillings => "fillings",
            Suite::Polytopes => "polytopes",
            Suite::Toeplitz => "toeplitz",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = MirrorError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minors" => Ok(Suite::Minors),
            "charts" => Ok(Suite::Charts),
            "quiver" => Ok(Suite::Quiver),
            "fillings" => Ok(Suite::Fillings),
            "polytopes" => Ok(Suite::Polytopes),
            "toeplitz" => Ok(Suite::Toeplitz),
            "all" => Ok(Suite::All),
            other => Err(MirrorError::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

/// Runs every criterion of a suite in order.
pub fn run_suite(suite: Suite) -> Vec<CriterionResult> {
    suite.criteria().into_iter().map(run_criterion).collect()
}

/// Runs one criterion. Unknown numbers yield a failed result.
pub fn run_criterion(id: u8) -> CriterionResult {
    let (name, budget, check): (&'static str, u64, fn() -> Result<String>) = match id {
        1 => ("golden superpotentials", 1, golden_superpotentials),
        2 => ("golden polytopes", 1, golden_polytopes),
        3 => ("lattice count = dimension", 60, lattice_counts),
        4 => ("chamber minor monomiality", 10, monomiality),
        5 => ("coordinate change", 30, coordinate_change),
        6 => ("chart consistency", 30, chart_consistency),
        7 => ("tropical critical point", 10, critical_point),
        8 => ("filling bijection", 20, filling_bijection),
        9 => ("toeplitz witnesses", 30, toeplitz_witnesses),
        10 => ("quiver identities", 10, quiver_identities),
        _ => ("unknown", 0, || Err(MirrorError::Domain("no such criterion".into()))),
    };
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget);
    let (passed, detail) = match outcome {
        Ok(detail) if elapsed <= budget => (true, detail),
        Ok(detail) => (false, format!("{detail}; over time budget")),
        Err(e) => (false, e.to_string()),
    };
    CriterionResult { id, name, passed, detail, elapsed, budget }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(MirrorError::Integrity(msg()))
    }
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn weight(v: &[i64]) -> Result<DominantWeight> {
    DominantWeight::from_ints(v)
}

// ---------------------------------------------------------------------------
// Reference data
// ---------------------------------------------------------------------------

fn var(v: Var) -> SubFreeExpr {
    SubFreeExpr::var(v)
}

fn ratio(num: &[Var], den: &[Var]) -> SubFreeExpr {
    let one = SubFreeExpr::constant(int(1)).expect("positive constant");
    let prod = |vs: &[Var]| vs.iter().fold(one.clone(), |acc, v| Semifield::mul(&acc, &var(*v)));
    Semifield::div(&prod(num), &prod(den))
}

/// `W(d, z)` for `n = 3` along `(1,2,1)`.
pub fn reference_string_w3() -> SubFreeExpr {
    use Var::{D, Z};
    SubFreeExpr::sum_of(vec![
        ratio(&[Z(1)], &[]),
        ratio(&[Z(2)], &[Z(3)]),
        ratio(&[Z(3)], &[]),
        ratio(&[D(1)], &[D(2), Z(3)]),
        ratio(&[D(1), Z(2)], &[D(2), Z(1), Z(3), Z(3)]),
        ratio(&[D(2), Z(3)], &[D(3), Z(2)]),
    ])
    .expect("non-empty sum")
}

/// `W(d, m)` for `n = 3` along `(1,2,1)`.
pub fn reference_ideal_w3() -> SubFreeExpr {
    use Var::{D, M};
    SubFreeExpr::sum_of(vec![
        ratio(&[M(1)], &[]),
        ratio(&[M(2)], &[]),
        ratio(&[M(2), M(3)], &[M(1)]),
        ratio(&[D(2), M(1)], &[D(3), M(2), M(3)]),
        ratio(&[D(1), M(3)], &[D(2), M(1), M(1)]),
        ratio(&[D(1)], &[D(2), M(1)]),
    ])
    .expect("non-empty sum")
}

/// String-chart inequalities for `n = 3` at `λ = (a, b, c)`.
pub fn reference_string_hrep3(l: &[i64; 3]) -> Vec<Inequality> {
    let (a, b, c) = (l[0], l[1], l[2]);
    [([1, 0, 0], 0), ([-1, 1, -2], a - b), ([0, 1, -1], 0), ([0, -1, 1], b - c), ([0, 0, 1], 0), ([0, 0, -1], a - b)]
        .into_iter()
        .map(|(co, k)| Inequality { coeffs: ints(&co), constant: int(k) })
        .collect()
}

/// Ideal-chart inequalities for `n = 3` at `λ = (a, b, c)`.
pub fn reference_ideal_hrep3(l: &[i64; 3]) -> Vec<Inequality> {
    let (a, b, c) = (l[0], l[1], l[2]);
    [([1, 0, 0], 0), ([-1, 0, 0], a - b), ([0, 1, 0], 0), ([-1, 1, 1], 0), ([1, -1, -1], b - c), ([-2, 0, 1], a - b)]
        .into_iter()
        .map(|(co, k)| Inequality { coeffs: ints(&co), constant: int(k) })
        .collect()
}

/// A point of an `n = 3` polytope together with its weight.
pub type TablePoint = ([i64; 3], [i64; 3]);

/// Points of the `n = 3` string polytope with their weights: six regular vertices, the
/// irregular vertex and two further distinguished points.
pub fn reference_string_table3(l: &[i64; 3]) -> Vec<TablePoint> {
    let (a, b, c) = (l[0], l[1], l[2]);
    vec![
        ([0, 0, 0], [c, b, a]),
        ([0, b - c, 0], [b, c, a]),
        ([a - b, 0, 0], [c, a, b]),
        ([a - c, b - c, 0], [b, a, c]),
        ([0, a - c, a - b], [a, c, b]),
        ([b - c, a - c, a - b], [a, b, c]),
        ([0, a - b, a - b], [a - b + c, b, b]),
        ([a - b, b - c, 0], [b, a - b + c, b]),
        ([b - c, b - c, 0], [b, b, a - b + c]),
    ]
}

/// Points of the `n = 3` ideal polytope with their weights, in the same order.
pub fn reference_ideal_table3(l: &[i64; 3]) -> Vec<TablePoint> {
    let (a, b, c) = (l[0], l[1], l[2]);
    vec![
        ([0, 0, 0], [c, b, a]),
        ([0, 0, b - c], [b, c, a]),
        ([0, a - b, b - a], [c, a, b]),
        ([0, a - c, b - a], [b, a, c]),
        ([a - b, 0, a - c], [a, c, b]),
        ([a - b, b - c, a - b], [a, b, c]),
        ([a - b, 0, a - b], [a - b + c, b, b]),
        ([0, a - b, 2 * b - a - c], [b, a - b + c, b]),
        ([0, b - c, 0], [b, b, a - b + c]),
    ]
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

fn golden_superpotentials() -> Result<String> {
    let ws = string_superpotential(&ReducedWord::i0(3))?;
    ensure(ws.canonical_eq(&reference_string_w3()), || format!("string W = {}", ws.render_canonical()))?;
    let wi = ideal_superpotential_i0(3)?;
    ensure(wi.canonical_eq(&reference_ideal_w3()), || format!("ideal W = {}", wi.render_canonical()))?;
    let counts = (ws.monomial_terms()?.len(), wi.monomial_terms()?.len());
    ensure(counts == (6, 6), || format!("monomial counts {counts:?}"))?;
    Ok("W(d,z) and W(d,m) for n=3 match, 6 monomials each".into())
}

fn golden_polytopes() -> Result<String> {
    let l = [2, 1, -1];
    let lam = weight(&l)?;
    let charts: [(PolytopeChart, Vec<Inequality>, Vec<TablePoint>); 2] = [
        (PolytopeChart::String, reference_string_hrep3(&l), reference_string_table3(&l)),
        (PolytopeChart::Ideal, reference_ideal_hrep3(&l), reference_ideal_table3(&l)),
    ];
    for (chart, hrep, table) in charts {
        let p = polytope_hrep(chart, &lam)?;
        ensure(p.inequality_set() == hrep.into_iter().collect(), || format!("{chart} inequalities differ"))?;
        let mut expect: Vec<Vec<Rational>> = table[..7].iter().map(|(x, _)| ints(x)).collect();
        expect.sort();
        ensure(p.vertices()? == expect, || format!("{chart} vertices differ"))?;
        for (x, w) in &table {
            ensure(p.contains(&ints(x)), || format!("{chart} point {x:?} outside"))?;
            ensure(trop_weight_projection(&ints(x), chart, &lam)? == ints(w), || format!("{chart} weight at {x:?}"))?;
        }
    }
    Ok("H-representations, 7 vertices and 9 tabulated points with weights, both charts".into())
}

/// Integral dominant weights with last entry 0 and `λ_1 ≤ bound`.
fn integral_weights(n: usize, bound: i64) -> Vec<Vec<i64>> {
    fn go(prefix: &mut Vec<i64>, n: usize, cap: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n - 1 {
            let mut v = prefix.clone();
            v.push(0);
            out.push(v);
            return;
        }
        for x in (0..=cap).rev() {
            prefix.push(x);
            go(prefix, n, x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, bound, &mut out);
    out
}

fn lattice_counts() -> Result<String> {
    let mut checked = 0;
    for (n, bound) in [(3usize, 6i64), (4, 3)] {
        for l in integral_weights(n, bound) {
            let lam = weight(&l)?;
            let dim = weyl_dimension(&lam)?;
            for chart in [PolytopeChart::String, PolytopeChart::Ideal, PolytopeChart::Gt] {
                let count = polytope_hrep(chart, &lam)?.lattice_count()?;
                ensure(num_bigint::BigInt::from(count) == dim, || format!("{chart} count {count} vs {dim} at {l:?}"))?;
            }
            ensure(gt_pattern_count(&lam)? == dim, || format!("GT patterns at {l:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} weights, three charts each"))
}

fn monomiality() -> Result<String> {
    let mut minors = 0;
    for n in 3..=5 {
        for target in [AnsatzTarget::UTranspose, AnsatzTarget::U1] {
            let r = chamber_minor_monomiality_check(target, n)?;
            ensure(r.all_monomial, || format!("n={n} {}: non-monomial minor", r.target))?;
            minors += r.minors.len();
        }
    }
    Ok(format!("{minors} chamber minors, all monomial"))
}

fn coordinate_change() -> Result<String> {
    for n in 3..=6 {
        ensure(p_from_z_ansatz(n)? == p_from_z_closed_form(n), || format!("p(z), n={n}"))?;
        ensure(m_from_p_ansatz(n)? == m_from_p_closed_form(n), || format!("m(p), n={n}"))?;
        ensure(m_from_z_ansatz(n)? == string_to_ideal_i0(n), || format!("m(z), n={n}"))?;
    }
    Ok("ansatz compositions equal the closed forms for n=3..6".into())
}

fn chart_consistency() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 3..=4 {
        let c = ChartConsistency::new(n)?;
        for _ in 0..100 {
            let d: Vec<PosLead> = (0..n).map(|_| random_poslead(&mut rng, 4)).collect();
            let m: Vec<PosLead> = (0..num_positive_roots(n)).map(|_| random_poslead(&mut rng, 4)).collect();
            ensure(c.check(&d, &m)?, || format!("n={n}: charts differ at d={d:?} m={m:?}"))?;
        }
    }
    Ok("b, u1, u2 agree on 100 samples each for n=3,4".into())
}

/// Random strictly dominant rational weight.
fn random_strict_weight<R: Rng>(rng: &mut R, n: usize) -> Result<DominantWeight> {
    let mut v = Vec::with_capacity(n);
    let mut cur = Rational::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=3).into());
    for _ in 0..n {
        v.push(cur.clone());
        cur -= Rational::new(rng.gen_range(1i64..=12).into(), rng.gen_range(1i64..=4).into());
    }
    DominantWeight::new(v)
}

fn example_weight() -> Result<DominantWeight> {
    weight(&[2, 1, -1])
}

/// Weights whose tropical critical points are examined in criteria 7 and 10.
fn critical_weights() -> Result<Vec<DominantWeight>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = vec![example_weight()?];
    for _ in 0..3 {
        out.push(random_strict_weight(&mut rng, 4)?);
    }
    Ok(out)
}

fn critical_point() -> Result<String> {
    let lam = example_weight()?;
    let f = filling_for_weight(&lam)?;
    let mu = f.i0_vector();
    ensure(mu == vec![rat(1, 2), rat(5, 6), rat(5, 6)], || format!("point {mu:?}"))?;
    ensure(&tropical_critical_point(&lam, &ReducedWord::i0(3))? == f.entries(), || "chart transfer differs".into())?;
    let at = |v: Var| match v {
        Var::M(k) => mu.get(k as usize - 1).cloned(),
        _ => None,
    };
    let tw = ideal_superpotential_i0(3)?.tropicalize(Some(lam.components())).evaluate(&at)?;
    ensure(tw > int(0), || format!("Trop(W) = {tw}"))?;
    let third = vec![rat(2, 3); 3];
    ensure(trop_weight_projection(&mu, PolytopeChart::Ideal, &lam)? == third, || "weight projection".into())?;
    ensure(tropical_weight(&lam, f.entries())? == third, || "universal weight".into())?;
    let words = enumerate_reduced_words(4)?;
    for lam in &critical_weights()?[1..] {
        let base = tropical_critical_point(lam, &ReducedWord::i0(4))?;
        for w in &words {
            ensure(tropical_critical_point(lam, w)? == base, || format!("word {:?} at {lam:?}", w.letters()))?;
        }
    }
    Ok(format!("(1/2, 5/6, 5/6), Trop(W) = {tw}, weight (2/3,2/3,2/3); 3 weights x {} words", words.len()))
}

/// Random ideal fillings with `n ≤ 5` and their weights.
fn random_fillings() -> Result<Vec<(IdealFilling, DominantWeight)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(2usize..=5);
            let beta: Vec<Rational> = (0..n - 1)
                .map(|_| Rational::new(rng.gen_range(0i64..=18).into(), rng.gen_range(1i64..=3).into()))
                .collect();
            let f = IdealFilling::from_first_diagonal(&beta);
            let ell = Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=3).into());
            let lam = DominantWeight::new(f.weight(&ell))?;
            Ok((f, lam))
        })
        .collect()
}

fn filling_bijection() -> Result<String> {
    for (f, lam) in random_fillings()? {
        ensure(validate_filling(&f), || format!("not a filling: {:?}", f.rows()))?;
        let p = filling_to_trop_point(&f, &lam)?;
        ensure(trop_point_to_filling(&p)? == f, || "filling round trip".into())?;
        ensure(filling_to_trop_point(&trop_point_to_filling(&p)?, &lam)? == p, || "point round trip".into())?;
        ensure(p.star_values() == lam.components(), || "star values".into())?;
        ensure(p.critical_conditions_hold(), || "critical conditions".into())?;
    }
    Ok("200 fillings, both round trips, stars and critical conditions".into())
}

fn family_witness<R: Rng>(rng: &mut R) -> Result<ToeplitzWitness> {
    let mut val = || Rational::new(rng.gen_range(0i64..=24).into(), rng.gen_range(1i64..=4).into());
    let (mu1, mu3) = (val(), val());
    let c1 = Rational::new(rng.gen_range(1i64..=20).into(), rng.gen_range(1i64..=4).into());
    let c3 = Rational::new(rng.gen_range(1i64..=20).into(), rng.gen_range(1i64..=4).into());
    toeplitz_family_n3(&mu1, &mu3, &c1, &c3)
}

fn toeplitz_witnesses() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let r = |i, j| Root { i, j };
    for _ in 0..200 {
        let w = family_witness(&mut rng)?;
        ensure(is_toeplitz(w.product()), || "family member not Toeplitz".into())?;
        let top = w.m()[&r(1, 2)].valuation().clone().max(w.m()[&r(2, 3)].valuation().clone());
        ensure(w.m()[&r(1, 3)].valuation() == &top, || "max relation".into())?;
        ensure(theorem_check(&w).passed(), || "valuations are not a filling".into())?;
    }
    let word = ReducedWord::i0(3);
    for _ in 0..200 {
        let m1 = random_poslead(&mut rng, 4);
        let m3 = random_poslead(&mut rng, 4);
        let top = m1.valuation().clone().max(m3.valuation().clone());
        let shift = loop {
            let s = rng.gen_range(-12i64..=12);
            if s != 0 {
                break Rational::new(s.into(), rng.gen_range(1i64..=3).into());
            }
        };
        let m2 = PosLead::new(top + shift, Rational::new(rng.gen_range(1i64..=15).into(), 1.into()))?;
        let m: BTreeMap<Root, PosLead> = [(r(1, 2), m1), (r(1, 3), m2), (r(2, 3), m3)].into_iter().collect();
        let w = ToeplitzWitness::new(word.clone(), m)?;
        ensure(!is_toeplitz(w.product()), || "non-max sample is Toeplitz".into())?;
    }
    let mut found = 0;
    for _ in 0..20 {
        let w = toeplitz_from_shifts(4, &random_shift_factors(&mut rng, 3, 3))?;
        ensure(is_toeplitz(w.product()), || "shift product not Toeplitz".into())?;
        ensure(theorem_check(&w).passed() && validate_filling(&w.valuations()), || "n=4 witness".into())?;
        found += 1;
    }
    Ok(format!("200 family witnesses, 200 non-max samples, {found} n=4 witnesses"))
}

fn quiver_identities() -> Result<String> {
    for n in 2..=5 {
        for chart in [QuiverChart::String, QuiverChart::Ideal] {
            let dec = decorate(n, chart)?;
            ensure(dec.box_relations_hold() && dec.star_relations_hold(), || format!("relations n={n} {chart:?}"))?;
        }
    }
    let mut points = 0;
    let mut check = |lam: &DominantWeight, mu: &[Rational]| -> Result<()> {
        let flags = tropical_outgoing_sum_check(lam.n(), lam.components(), mu)?;
        ensure(flags.iter().all(|x| x.1), || format!("outgoing sums at {lam:?}"))?;
        points += 1;
        Ok(())
    };
    for lam in critical_weights()? {
        check(&lam, &filling_for_weight(&lam)?.i0_vector())?;
    }
    for (f, lam) in random_fillings()? {
        check(&lam, &f.i0_vector())?;
    }
    Ok(format!("box and star relations for n<=5; outgoing sums at {points} critical points"))
}
