//! Ideal fillings and tropical critical points.
//!
//! An ideal filling is a triangular array `n_ij ≥ 0` (`i < j`) with
//! `n_ij = max(n_{i+1,j}, n_{i,j−1})`; equivalently `n_ij` is the maximum of the
//! first-diagonal entries `n_{k,k+1}`, `i ≤ k < j`. It is a filling *for* the
//! dominant weight `λ` when `Σ n_ij α_ij + ℓ Σ ε_i = λ` with `ℓ = (1/n) Σ λ_i`.
//! Keyed by positive roots, the filling is the tropical critical point of the
//! superpotential in every ideal chart.
//!
//! ```
//! use glmirror::fillings::filling_for_weight;
//! use glmirror::weyl::DominantWeight;
//! use glmirror::exact::rat;
//! let f = filling_for_weight(&DominantWeight::from_ints(&[2, 1, -1]).unwrap()).unwrap();
//! assert_eq!(f.get(1, 2), &rat(1, 2));
//! assert_eq!(f.get(1, 3), &rat(5, 6));
//! ```

use std::collections::BTreeMap;

use crate::charts::{chart_transfer, i0_position, universal_weight, IdealCoords};
use crate::error::{MirrorError, Result};
use crate::exact::{int, render_rational, MinPlus, Rational};
use crate::matrix::solve_linear;
use crate::quiver::{build_quiver, Arrow, Vertex};
use crate::weyl::{num_positive_roots, DominantWeight, ReducedWord, Root};

/// Triangular array `n_ij`, `1 ≤ i < j ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFilling {
    n: usize,
    entries: BTreeMap<Root, Rational>,
}

impl IdealFilling {
    /// Builds a filling from root-indexed entries (no validation of the max relations).
    pub fn new(n: usize, entries: BTreeMap<Root, Rational>) -> Result<Self> {
        if entries.len() != num_positive_roots(n) || Root::all(n).iter().any(|r| !entries.contains_key(r)) {
            return Err(MirrorError::Domain("filling must have one entry per positive root".into()));
        }
        Ok(IdealFilling { n, entries })
    }

    /// The ideal filling generated by its first diagonal `β_k = n_{k,k+1}`.
    pub fn from_first_diagonal(beta: &[Rational]) -> Self {
        let n = beta.len() + 1;
        let entries = Root::all(n)
            .into_iter()
            .map(|r| (r, beta[r.i - 1..r.j - 1].iter().max().cloned().expect("nonempty window")))
            .collect();
        IdealFilling { n, entries }
    }

    /// Builds a filling from rows `[[n_12, …, n_1n], [n_23, …], …]`.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let n = rows.len() + 1;
        let mut entries = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - 1 - i {
                return Err(MirrorError::Domain("filling rows must be upper triangular".into()));
            }
            for (k, v) in row.iter().enumerate() {
                entries.insert(Root::new(i + 1, i + 2 + k)?, v.clone());
            }
        }
        IdealFilling::new(n, entries)
    }

    /// Rank parameter.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `n_ij`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[&Root { i, j }]
    }

    /// Root-indexed entries.
    pub fn entries(&self) -> &BTreeMap<Root, Rational> {
        &self.entries
    }

    /// Upper-triangular rows.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (1..self.n).map(|i| (i + 1..=self.n).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    /// Entries in the `i_0` order `μ_{s_i+j−i} = n_ij`.
    pub fn i0_vector(&self) -> Vec<Rational> {
        let mut out = vec![int(0); num_positive_roots(self.n)];
        for (r, v) in &self.entries {
            out[i0_position(self.n, *r) - 1] = v.clone();
        }
        out
    }

    /// The weight `Σ n_ij α_ij + ℓ Σ ε_i`.
    pub fn weight(&self, ell: &Rational) -> Vec<Rational> {
        let mut out = vec![ell.clone(); self.n];
        for (r, v) in &self.entries {
            out[r.i - 1] += v;
            out[r.j - 1] -= v;
        }
        out
    }

    /// JSON form: rows of `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows()
                .iter()
                .map(|row| serde_json::Value::Array(row.iter().map(|q| render_rational(q).into()).collect()))
                .collect(),
        )
    }
}

/// Whether all entries are nonnegative and the max relations hold.
pub fn validate_filling(f: &IdealFilling) -> bool {
    let zero = int(0);
    f.entries.values().all(|v| *v >= zero)
        && Root::all(f.n).into_iter().filter(|r| r.j - r.i >= 2).all(|r| {
            let a = f.get(r.i + 1, r.j);
            let b = f.get(r.i, r.j - 1);
            f.get(r.i, r.j) == a.max(b)
        })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// All ideal fillings for `λ` found by enumerating orderings of the first diagonal.
///
/// For each total order of `β_1, …, β_{n−1}` the maxima become fixed entries, the weight
/// equations become a square linear system, and a solution is kept when it is nonnegative,
/// weakly respects the order and yields an ideal filling for `λ`. Duplicates are removed.
pub fn fillings_for_weight_all(lambda: &DominantWeight) -> Result<Vec<IdealFilling>> {
    let n = lambda.n();
    if n < 2 {
        return Err(MirrorError::Domain("fillings need n ≥ 2".into()));
    }
    if n > 7 {
        return Err(MirrorError::SizeLimit(format!("filling search supports n ≤ 7, got {n}")));
    }
    let ell = lambda.ell();
    let k = n - 1;
    let mut found: Vec<IdealFilling> = Vec::new();
    for order in permutations(k) {
        // rank[b] = position of β_b in the order (larger rank = larger value).
        let mut rank = vec![0usize; k];
        for (pos, &b) in order.iter().enumerate() {
            rank[b] = pos;
        }
        let argmax = |i: usize, j: usize| -> usize { (i - 1..j - 1).max_by_key(|&b| rank[b]).expect("nonempty window") };
        let mut a = vec![vec![int(0); k]; k];
        let mut rhs = vec![int(0); k];
        for row in 1..=k {
            rhs[row - 1] = lambda.get(row) - &ell;
            for j in row + 1..=n {
                a[row - 1][argmax(row, j)] += int(1);
            }
            for i in 1..row {
                a[row - 1][argmax(i, row)] -= int(1);
            }
        }
        let Some(beta) = solve_linear(&a, &rhs) else { continue };
        if beta.iter().any(|b| *b < int(0)) {
            continue;
        }
        let respects = order.windows(2).all(|w| beta[w[0]] <= beta[w[1]]);
        if !respects {
            continue;
        }
        let f = IdealFilling::from_first_diagonal(&beta);
        if f.weight(&ell) != lambda.components() {
            continue;
        }
        if !found.contains(&f) {
            found.push(f);
        }
    }
    Ok(found)
}

/// The unique ideal filling for a dominant weight.
pub fn filling_for_weight(lambda: &DominantWeight) -> Result<IdealFilling> {
    let mut all = fillings_for_weight_all(lambda)?;
    match all.len() {
        1 => Ok(all.pop().expect("one element")),
        0 => Err(MirrorError::Integrity(format!("no ideal filling found for {lambda}"))),
        k => Err(MirrorError::Integrity(format!("{k} distinct ideal fillings found for {lambda}"))),
    }
}

/// Tropical point on the quiver: vertex valuations `δ`, arrow valuations `ρ` and
/// per-dot minima `π` of incoming valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropQuiverPoint {
    /// Rank parameter.
    pub n: usize,
    /// `ℓ = (1/n) Σ λ_i`.
    pub ell: Rational,
    /// Vertex valuations.
    pub delta: BTreeMap<Vertex, Rational>,
    /// Arrow valuations `ρ_a = δ_{h(a)} − δ_{t(a)}`.
    pub rho: BTreeMap<Arrow, Rational>,
    /// Minimum incoming valuation at each dot vertex.
    pub pi: BTreeMap<Vertex, Rational>,
}

impl TropQuiverPoint {
    /// Builds a point from vertex valuations.
    pub fn from_delta(n: usize, ell: Rational, delta: BTreeMap<Vertex, Rational>) -> Result<Self> {
        let q = build_quiver(n)?;
        let rho: BTreeMap<Arrow, Rational> =
            q.arrows().iter().map(|a| (*a, &delta[&a.head()] - &delta[&a.tail()])).collect();
        let pi = q
            .dots()
            .into_iter()
            .map(|v| {
                let m = q.incoming(v).iter().map(|a| rho[a].clone()).min().expect("dots have incoming arrows");
                (v, m)
            })
            .collect();
        Ok(TropQuiverPoint { n, ell, delta, rho, pi })
    }

    /// Whether `min_in ρ = min_out ρ` at every dot vertex.
    pub fn critical_conditions_hold(&self) -> bool {
        let q = build_quiver(self.n).expect("valid n");
        q.dots().into_iter().all(|v| {
            let out = q.outgoing(v).iter().map(|a| self.rho[a].clone()).min();
            out.as_ref() == Some(&self.pi[&v])
        })
    }

    /// Whether the tropical box relations `ρ_{a1}+ρ_{a2} = ρ_{a3}+ρ_{a4}` hold.
    pub fn box_relations_hold(&self) -> bool {
        let q = build_quiver(self.n).expect("valid n");
        q.boxes().iter().all(|[a1, a2, a3, a4]| &self.rho[a1] + &self.rho[a2] == &self.rho[a3] + &self.rho[a4])
    }

    /// JSON form with vertex and arrow names as keys and `"p/q"` values.
    pub fn to_json(&self) -> serde_json::Value {
        fn table<K: std::fmt::Display>(m: &BTreeMap<K, Rational>) -> serde_json::Value {
            m.iter().map(|(k, v)| (k.to_string(), serde_json::Value::from(render_rational(v)))).collect()
        }
        serde_json::json!({
            "n": self.n,
            "ell": render_rational(&self.ell),
            "delta": table(&self.delta),
            "rho": table(&self.rho),
            "pi": table(&self.pi),
        })
    }

    /// Star valuations `δ_{v_kk}`.
    pub fn star_values(&self) -> Vec<Rational> {
        (1..=self.n).map(|k| self.delta[&Vertex { i: k, j: k }].clone()).collect()
    }
}

/// `δ_{v_ji} = H^h_ij − H^v_ij + ℓ` with `H^h_ij = Σ_{l>j} n_il`, `H^v_ij = Σ_{l<i} n_lj`.
pub fn filling_to_trop_point(f: &IdealFilling, lambda: &DominantWeight) -> Result<TropQuiverPoint> {
    let n = f.n();
    if lambda.n() != n {
        return Err(MirrorError::Domain("filling and weight sizes differ".into()));
    }
    let ell = lambda.ell();
    if !validate_filling(f) || f.weight(&ell) != lambda.components() {
        return Err(MirrorError::Integrity("not an ideal filling for the given weight".into()));
    }
    let mut delta = BTreeMap::new();
    for j in 1..=n {
        for i in 1..=j {
            let hh: Rational = (j + 1..=n).map(|l| f.get(i, l).clone()).sum();
            let hv: Rational = (1..i).map(|l| f.get(l, j).clone()).sum();
            delta.insert(Vertex { i: j, j: i }, hh - hv + &ell);
        }
    }
    TropQuiverPoint::from_delta(n, ell, delta)
}

/// `n_ij = π(v_ji)`; requires the tropical critical conditions.
pub fn trop_point_to_filling(p: &TropQuiverPoint) -> Result<IdealFilling> {
    if !p.critical_conditions_hold() {
        return Err(MirrorError::Integrity("tropical critical conditions fail".into()));
    }
    let entries = Root::all(p.n).into_iter().map(|r| (r, p.pi[&Vertex { i: r.j, j: r.i }].clone())).collect();
    let f = IdealFilling::new(p.n, entries)?;
    if !validate_filling(&f) {
        return Err(MirrorError::Integrity("minima do not form an ideal filling".into()));
    }
    Ok(f)
}

/// `min(H̄^v_{i,j+1} − H̄^v_ij, H̄^h_{i,j+1} − H̄^h_{i+1,j+1}) = 0` for `1 ≤ i < j ≤ n−1`,
/// with `H̄^v_ij = Σ_{l≤i} n_lj` and `H̄^h_ij = Σ_{l≥j} n_il`.
pub fn staircase_minimum_holds(f: &IdealFilling) -> bool {
    let n = f.n();
    let hv = |i: usize, j: usize| -> Rational { (1..=i).map(|l| f.get(l, j).clone()).sum() };
    let hh = |i: usize, j: usize| -> Rational { (j..=n).map(|l| f.get(i, l).clone()).sum() };
    (1..n).all(|j| {
        (1..j).all(|i| {
            let a = hv(i, j + 1) - hv(i, j);
            let b = hh(i, j + 1) - hh(i + 1, j + 1);
            a.min(b) == int(0)
        })
    })
}

/// `δ_{v_ji} = Σ_{r>j} π(v_ri) − Σ_{c<i} π(v_jc) + ℓ` at every vertex.
pub fn delta_from_minima_holds(p: &TropQuiverPoint) -> bool {
    let n = p.n;
    (1..=n).all(|j| {
        (1..=j).all(|i| {
            let below: Rational = (j + 1..=n).map(|r| p.pi[&Vertex { i: r, j: i }].clone()).sum();
            let left: Rational = (1..i).map(|c| p.pi[&Vertex { i: j, j: c }].clone()).sum();
            p.delta[&Vertex { i: j, j: i }] == below - left + &p.ell
        })
    })
}

/// Root-indexed tropical critical point in the ideal chart of `word`, obtained by moving the
/// `i_0` point along the tropical braid changes.
pub fn tropical_critical_point(lambda: &DominantWeight, word: &ReducedWord) -> Result<BTreeMap<Root, Rational>> {
    let n = lambda.n();
    if word.n() != n {
        return Err(MirrorError::Domain("word and weight sizes differ".into()));
    }
    let f = filling_for_weight(lambda)?;
    let at_i0 = IdealCoords::new(ReducedWord::i0(n), f.entries().iter().map(|(r, v)| (*r, MinPlus(v.clone()))).collect())?;
    let moved = chart_transfer(&at_i0, word)?;
    Ok(moved.values().iter().map(|(r, v)| (*r, v.0.clone())).collect())
}

/// Valuation of the weight matrix at a root-indexed tropical point with `d = t^λ`.
pub fn tropical_weight(lambda: &DominantWeight, mu: &BTreeMap<Root, Rational>) -> Result<Vec<Rational>> {
    let d: Vec<MinPlus> = lambda.components().iter().cloned().map(MinPlus).collect();
    let m: BTreeMap<Root, MinPlus> = mu.iter().map(|(r, v)| (*r, MinPlus(v.clone()))).collect();
    Ok(universal_weight(&d, &m)?.into_iter().map(|x| x.0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn validate_examples() {
        let ok = IdealFilling::from_rows(&[vec![rat(1, 2), rat(5, 6)], vec![rat(5, 6)]]).unwrap();
        assert!(validate_filling(&ok));
        let zero = IdealFilling::from_rows(&[vec![int(0), int(0)], vec![int(0)]]).unwrap();
        assert!(validate_filling(&zero));
        let bad = IdealFilling::from_rows(&[vec![int(1), int(0)], vec![int(0)]]).unwrap();
        assert!(!validate_filling(&bad));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn constant_weight_gives_zero_filling() {
        let f = filling_for_weight(&DominantWeight::from_ints(&[3, 3, 3, 3]).unwrap()).unwrap();
        assert!(f.entries().values().all(|v| *v == int(0)));
    }
}
