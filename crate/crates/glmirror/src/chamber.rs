//! Wiring diagrams and the Chamber Ansatz.
//!
//! For a reduced word `i = (i_1, …, i_N)` the ansatz arrangement has `n`
//! strands numbered bottom to top. After `k` crossings the strand at position
//! `p` carries the label `w_(k)(p)`, with `w_(k) = s_{i_1}···s_{i_k}`. The
//! chamber at level `j` (between positions `j` and `j+1`) after `k` crossings
//! is labelled by the set `w_(k){1, …, j}` of strands passing below it.
//!
//! For an upper triangular `z`, write `Δ_j(k)` for the chamber minor
//! `Δ^{[1..j]}_{w_(k){1..j}}(z)` (with `Δ_0 = Δ_n = 1`). The parameters
//!
//! `t_k = Δ_{i+1}(k)·Δ_{i−1}(k) / (Δ_i(k)·Δ_i(k−1))`, `i = i_k`,
//!
//! satisfy `y_{i_1}(t_1)···y_{i_N}(t_N)·B_+ = z·w̄_0·B_+`.
//!
//! ```
//! use glmirror::chamber::build_arrangement;
//! use glmirror::weyl::ReducedWord;
//! let arr = build_arrangement(&ReducedWord::i0(3));
//! let labels: Vec<Vec<usize>> = arr.chambers().iter().map(|c| c.label.clone()).collect();
//! assert!(labels.contains(&vec![2, 3]));
//! ```

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{MirrorError, Result};
use crate::exact::{Field, Semiring};
use crate::matrix::{network_from_factorization, Factor, Matrix, PlanarNetwork};
use crate::symbolic::{LaurentMonomial, LaurentPoly, Monomial, Var};
use crate::weyl::ReducedWord;

/// A bounded or left-unbounded chamber of the arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chamber {
    /// Number of crossings to the left of the chamber (0 for the leftmost chambers).
    pub k: usize,
    /// Level `j` of the chamber (it lies between strand positions `j` and `j+1`).
    pub level: usize,
    /// Labels of the strands passing below the chamber, sorted.
    pub label: Vec<usize>,
    /// Horizontal extent `[k, k_next]` in crossing units, for plotting.
    pub x_range: (usize, usize),
}

/// A crossing of two adjacent strands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    /// 1-based position in the word.
    pub k: usize,
    /// Level `i_k` of the crossing.
    pub level: usize,
    /// Labels of the two strands (lower before the crossing first).
    pub strands: (usize, usize),
}

/// Pseudoline arrangement of a reduced word with its chamber labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    word: ReducedWord,
    crossings: Vec<Crossing>,
    chambers: Vec<Chamber>,
    prefixes: Vec<Vec<usize>>,
}

impl Arrangement {
    /// The underlying word.
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    /// Crossings in order.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// All `(n−1) + N` chambers: the leftmost ones first, then one per crossing.
    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    /// Label `w_(k){1..j}` of the chamber at level `j` after `k` crossings (`j` may be `0` or `n`).
    pub fn label_at(&self, k: usize, j: usize) -> Vec<usize> {
        let mut l: Vec<usize> = self.prefixes[k][..j].to_vec();
        l.sort();
        l
    }

    /// Dump suitable for plotting (crossing coordinates and chamber boxes).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "word": self.word,
            "crossings": self.crossings.iter().map(|c| serde_json::json!({
                "k": c.k, "level": c.level, "x": c.k as f64 - 0.5, "y": c.level as f64 + 0.5,
                "strands": [c.strands.0, c.strands.1],
            })).collect::<Vec<_>>(),
            "chambers": self.chambers,
        })
    }
}

/// Builds the ansatz arrangement of a reduced word by strand tracing.
pub fn build_arrangement(w: &ReducedWord) -> Arrangement {
    let n = w.n();
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut prefixes = vec![perm.clone()];
    let mut crossings = Vec::new();
    for (idx, &i) in w.letters().iter().enumerate() {
        crossings.push(Crossing { k: idx + 1, level: i, strands: (perm[i - 1], perm[i]) });
        perm.swap(i - 1, i);
        prefixes.push(perm.clone());
    }
    let next_crossing_at = |from: usize, level: usize| -> usize {
        w.letters()
            .iter()
            .enumerate()
            .skip(from)
            .find(|(_, &l)| l == level)
            .map(|(idx, _)| idx + 1)
            .unwrap_or(w.len() + 1)
    };
    let mut chambers = Vec::new();
    let label = |k: usize, j: usize| -> Vec<usize> {
        let mut l: Vec<usize> = prefixes[k][..j].to_vec();
        l.sort();
        l
    };
    for level in 1..n {
        chambers.push(Chamber { k: 0, level, label: label(0, level), x_range: (0, next_crossing_at(0, level)) });
    }
    for (idx, &level) in w.letters().iter().enumerate() {
        let k = idx + 1;
        chambers.push(Chamber { k, level, label: label(k, level), x_range: (k, next_crossing_at(k, level)) });
    }
    Arrangement { word: w.clone(), crossings, chambers, prefixes }
}

/// Chamber Ansatz parameters of an upper triangular matrix, from determinantal minors.
pub fn ansatz_factorize<F: Field>(z: &Matrix<F>, w: &ReducedWord) -> Result<Vec<F>> {
    if z.n() != w.n() {
        return Err(MirrorError::Domain("matrix and word sizes differ".into()));
    }
    let arr = build_arrangement(w);
    let n = w.n();
    let minor = |k: usize, j: usize| -> Result<F> {
        if j == 0 || j == n {
            return Ok(F::one());
        }
        let rows: Vec<usize> = (1..=j).collect();
        z.minor(&rows, &arr.label_at(k, j))
    };
    let mut out = Vec::with_capacity(w.len());
    for (idx, &i) in w.letters().iter().enumerate() {
        let k = idx + 1;
        let num = minor(k, i + 1)?.mul(&minor(k, i - 1)?);
        let den = minor(k, i)?.mul(&minor(k - 1, i)?);
        let t = num
            .div(&den)
            .ok_or_else(|| MirrorError::NonGeneric(format!("chamber minor vanishes at crossing {k}")))?;
        out.push(t);
    }
    Ok(out)
}

/// Network of `u^T = Π_{m=N..1} t_{i_m}(1/z_m)·x_{i_m}(z_m)` for `u = x_{−i}(z)`.
pub fn network_u_transpose(word: &ReducedWord) -> PlanarNetwork<LaurentPoly> {
    let n = word.n();
    let mut factors = Vec::new();
    for (idx, &i) in word.letters().iter().enumerate().rev() {
        let z = Monomial::var(Var::Z((idx + 1) as u16));
        factors.push(Factor::Torus {
            i,
            lower: LaurentPoly::term(crate::exact::int(1), z.inv()),
            upper: LaurentPoly::term(crate::exact::int(1), z.clone()),
        });
        factors.push(Factor::X { i, w: LaurentPoly::term(crate::exact::int(1), z) });
    }
    network_from_factorization(n, &factors).expect("letters are valid indices")
}

/// Network of `x_{i_1}(v_1)···x_{i_N}(v_N)` with symbolic edge weights.
pub fn network_x_product(word: &ReducedWord, weights: &[LaurentPoly]) -> PlanarNetwork<LaurentPoly> {
    let factors: Vec<Factor<LaurentPoly>> =
        word.letters().iter().zip(weights).map(|(&i, w)| Factor::X { i, w: w.clone() }).collect();
    network_from_factorization(word.n(), &factors).expect("letters are valid indices")
}

/// Network of `u_1 = x_{i'_0}(p_1, …, p_N)` in the variables `p_k`.
pub fn network_u1(n: usize) -> PlanarNetwork<LaurentPoly> {
    let w = ReducedWord::i0_prime(n);
    let weights: Vec<LaurentPoly> = (1..=w.len()).map(|k| LaurentPoly::var(Var::P(k as u16))).collect();
    network_x_product(&w, &weights)
}

/// All chamber minors of a network's path matrix for the arrangement of `w`,
/// keyed by `(k, level)` of each chamber in [`Arrangement::chambers`] order.
pub fn chamber_minors(net: &PlanarNetwork<LaurentPoly>, w: &ReducedWord) -> Vec<(Chamber, LaurentPoly)> {
    let arr = build_arrangement(w);
    let mut cache: BTreeMap<usize, BTreeMap<Vec<usize>, LaurentPoly>> = BTreeMap::new();
    let mut out = Vec::new();
    for ch in arr.chambers() {
        let fam = cache
            .entry(ch.level)
            .or_insert_with(|| net.disjoint_families_from(&(1..=ch.level).collect::<Vec<_>>()));
        let v = fam.get(&ch.label).cloned().unwrap_or_else(LaurentPoly::zero);
        out.push((ch.clone(), v));
    }
    out
}

/// Result of checking that all chamber minors are single Laurent monomials.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialityReport {
    /// Word of the arrangement.
    pub word: ReducedWord,
    /// Name of the target matrix.
    pub target: String,
    /// Each chamber label with its minor rendered as text.
    pub minors: Vec<(Vec<usize>, String)>,
    /// Whether every minor is a single monomial.
    pub all_monomial: bool,
}

/// Which unipotent matrix a monomiality check targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnsatzTarget {
    /// `u^T` with `u = x_{−i_0}(z)`, arrangement of `i'_0^op`.
    UTranspose,
    /// `u_1 = x_{i'_0}(p)`, arrangement of `i_0`.
    U1,
}

/// Evaluates every chamber minor through the path network and checks monomiality.
pub fn chamber_minor_monomiality_check(target: AnsatzTarget, n: usize) -> Result<MonomialityReport> {
    if !(2..=6).contains(&n) {
        return Err(MirrorError::SizeLimit(format!("monomiality check supports 2 ≤ n ≤ 6, got {n}")));
    }
    let (net, w, name) = match target {
        AnsatzTarget::UTranspose => (network_u_transpose(&ReducedWord::i0(n)), ReducedWord::i0_prime_op(n), "u^T"),
        AnsatzTarget::U1 => (network_u1(n), ReducedWord::i0(n), "u_1"),
    };
    let minors = chamber_minors(&net, &w);
    let all_monomial = minors.iter().all(|(_, p)| p.as_monomial().is_some());
    Ok(MonomialityReport {
        word: w,
        target: name.to_string(),
        minors: minors.into_iter().map(|(c, p)| (c.label, p.render())).collect(),
        all_monomial,
    })
}

/// Chamber Ansatz parameters as Laurent monomials, computed from network minors.
///
/// Fails with an integrity error if a required minor is not a monomial.
pub fn ansatz_monomials(net: &PlanarNetwork<LaurentPoly>, w: &ReducedWord) -> Result<Vec<LaurentMonomial>> {
    let n = w.n();
    let arr = build_arrangement(w);
    let mut fams: BTreeMap<usize, BTreeMap<Vec<usize>, LaurentPoly>> = BTreeMap::new();
    let mut minor = |k: usize, j: usize| -> Result<LaurentMonomial> {
        if j == 0 || j == n {
            return Ok(LaurentMonomial::one());
        }
        let label = arr.label_at(k, j);
        let fam = fams.entry(j).or_insert_with(|| net.disjoint_families_from(&(1..=j).collect::<Vec<_>>()));
        let p = fam.get(&label).cloned().unwrap_or_else(LaurentPoly::zero);
        let (c, m) = p.as_monomial().ok_or_else(|| {
            MirrorError::Integrity(format!("chamber minor at level {j} after {k} crossings is not a monomial: {p}"))
        })?;
        LaurentMonomial::new(c.clone(), m.clone())
    };
    let mut out = Vec::with_capacity(w.len());
    for (idx, &i) in w.letters().iter().enumerate() {
        let k = idx + 1;
        let num = minor(k, i + 1)?.mul(&minor(k, i - 1)?);
        let den = minor(k, i)?.mul(&minor(k - 1, i)?);
        out.push(num.div(&den));
    }
    Ok(out)
}

/// Checks `y_{i_1}(t_1)···y_{i_N}(t_N)^{−1} · z · w̄_0` is upper triangular.
pub fn reassembles<F: Field>(z: &Matrix<F>, w: &ReducedWord, params: &[F]) -> Result<bool> {
    let n = w.n();
    let y = crate::matrix::y_product(n, w.letters(), params);
    let w0: Matrix<F> = crate::matrix::w0bar(n);
    let lhs = y.inverse()?.mul(z).mul(&w0);
    Ok(lhs.is_upper_triangular())
}

/// Whether every entry of a matrix is zero (helper for reports).
pub fn is_zero_matrix<R: Semiring>(m: &Matrix<R>) -> bool {
    (0..m.n()).all(|r| (0..m.n()).all(|c| m.at(r, c).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational};

    fn labels(w: &ReducedWord) -> Vec<Vec<usize>> {
        let mut l: Vec<Vec<usize>> = build_arrangement(w).chambers().iter().map(|c| c.label.clone()).collect();
        l.sort();
        l
    }

    #[test]
    fn standard_arrangement_labels() {
        let mut expect = vec![
            vec![1],
            vec![2],
            vec![3],
            vec![4],
            vec![1, 2],
            vec![2, 3],
            vec![3, 4],
            vec![1, 2, 3],
            vec![2, 3, 4],
        ];
        expect.sort();
        assert_eq!(labels(&ReducedWord::i0(4)), expect);
        let op = labels(&ReducedWord::i0_prime_op(4));
        for l in [vec![1, 2, 4], vec![1, 3, 4], vec![1, 4]] {
            assert!(op.contains(&l));
        }
    }

    #[test]
    fn rank_one_arrangement() {
        let w = ReducedWord::new(2, vec![1]).unwrap();
        let arr = build_arrangement(&w);
        assert_eq!(arr.crossings().len(), 1);
        assert_eq!(labels(&w), vec![vec![1], vec![2]]);
        let z = Matrix::from_rows(vec![vec![int(1), int(5)], vec![int(0), int(1)]]).unwrap();
        let t = ansatz_factorize(&z, &w).unwrap();
        assert_eq!(t, vec![crate::exact::rat(1, 5)]);
        assert!(reassembles(&z, &w, &t).unwrap());
    }

    #[test]
    fn network_minors_match_determinants() {
        let w = ReducedWord::i0(3);
        let net = network_x_product(
            &w,
            &[LaurentPoly::constant(int(2)), LaurentPoly::constant(int(3)), LaurentPoly::constant(int(5))],
        );
        let m = net.path_matrix();
        let mr: Matrix<Rational> = m.map(|p| p.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(|| int(0)));
        for (ch, v) in chamber_minors(&net, &w) {
            let rows: Vec<usize> = (1..=ch.level).collect();
            let det = mr.minor(&rows, &ch.label).unwrap();
            let val = v.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(|| int(0));
            assert_eq!(det, val);
        }
    }
}
