//! Toeplitz products of `y`-factors and the valuations of their parameters.
//!
//! For a reduced word `i` of `w_0` and positive leading terms `m_α` (one per positive root),
//! the product `y_{i_1}(1/m_{α_1})···y_{i_N}(1/m_{α_N})` is lower unitriangular. When it is
//! Toeplitz (constant along every subdiagonal), the valuations `μ_α = val(m_α)` form an ideal
//! filling. All entries are subtraction-free in the `1/m`, so leading terms are exact.
//!
//! ```
//! use glmirror::toeplitz::{toeplitz_family_n3, theorem_check};
//! use glmirror::exact::{int, rat};
//! let w = toeplitz_family_n3(&int(1), &int(2), &int(1), &int(1)).unwrap();
//! assert!(theorem_check(&w).passed());
//! assert_eq!(w.m()[&glmirror::weyl::Root { i: 1, j: 3 }].valuation(), &int(2));
//! ```

use std::collections::BTreeMap;

use rand::Rng;

use crate::charts::{chart_transfer, y_braid, IdealCoords};
use crate::error::{MirrorError, Result};
use num_traits::Signed;

use crate::exact::{int, PosLead, Rational, Semifield};
use crate::fillings::{validate_filling, IdealFilling};
use crate::matrix::{y_product, Matrix};
use crate::weyl::{apply_move, braid_search, is_reduced_expression, num_positive_roots, positive_root_sequence, Move, ReducedWord, Root};

/// Lower unitriangular matrix over leading terms; `None` is the zero entry.
pub type LeadMatrix = Matrix<Option<PosLead>>;

/// `y_{i_1}(1/m_{α_1})···y_{i_N}(1/m_{α_N})` along `word`.
pub fn y_factor_product(word: &ReducedWord, m: &BTreeMap<Root, PosLead>) -> Result<LeadMatrix> {
    let roots = positive_root_sequence(word);
    let params: Vec<Option<PosLead>> = roots
        .iter()
        .map(|r| {
            m.get(r)
                .map(|x| Some(x.recip()))
                .ok_or_else(|| MirrorError::Domain(format!("missing parameter for root {r}")))
        })
        .collect::<Result<_>>()?;
    Ok(y_product(word.n(), word.letters(), &params))
}

/// Whether `m` is lower unitriangular with every subdiagonal constant (valuation and coefficient).
pub fn is_toeplitz(m: &LeadMatrix) -> bool {
    let n = m.n();
    let one = Some(PosLead::t_pow(int(0)));
    let lower_unitriangular = (0..n).all(|r| {
        (0..n).all(|c| match c.cmp(&r) {
            std::cmp::Ordering::Greater => m.at(r, c).is_none(),
            std::cmp::Ordering::Equal => *m.at(r, c) == one,
            std::cmp::Ordering::Less => true,
        })
    });
    lower_unitriangular && (1..n).all(|k| (k + 1..n).all(|r| m.at(r, r - k) == m.at(k, 0)))
}

/// Parameters along a reduced word together with their Toeplitz product.
#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzWitness {
    word: ReducedWord,
    m: BTreeMap<Root, PosLead>,
    product: LeadMatrix,
}

impl ToeplitzWitness {
    /// Builds a witness, computing the product.
    pub fn new(word: ReducedWord, m: BTreeMap<Root, PosLead>) -> Result<Self> {
        if m.len() != num_positive_roots(word.n()) {
            return Err(MirrorError::Domain("one parameter per positive root is required".into()));
        }
        let product = y_factor_product(&word, &m)?;
        Ok(ToeplitzWitness { word, m, product })
    }

    /// Reduced word.
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    /// Root-indexed parameters.
    pub fn m(&self) -> &BTreeMap<Root, PosLead> {
        &self.m
    }

    /// The product matrix.
    pub fn product(&self) -> &LeadMatrix {
        &self.product
    }

    /// Valuations `μ_α`, as a triangular array.
    pub fn valuations(&self) -> IdealFilling {
        let entries = self.m.iter().map(|(r, x)| (*r, x.valuation().clone())).collect();
        IdealFilling::new(self.word.n(), entries).expect("one entry per root")
    }

    /// The same point expressed in the parameters of another reduced word.
    pub fn transfer(&self, to: &ReducedWord) -> Result<Self> {
        let c = IdealCoords::new(self.word.clone(), self.m.clone())?;
        ToeplitzWitness::new(to.clone(), chart_transfer(&c, to)?.values().clone())
    }

    /// JSON form with `"coeff@valuation"` entries.
    pub fn to_json(&self) -> serde_json::Value {
        let render = |x: &Option<PosLead>| x.as_ref().map_or_else(|| "0".to_string(), |p| p.to_string());
        serde_json::json!({
            "word": self.word.letters(),
            "m": self.m.iter().map(|(r, x)| (r.to_string(), serde_json::Value::from(x.to_string()))).collect::<serde_json::Map<_, _>>(),
            "product": self.product.rows().iter().map(|row| row.iter().map(render).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "toeplitz": is_toeplitz(&self.product),
        })
    }
}

/// The `n = 3` family along `(1,2,1)`: `m_{α12} = c_1 t^{μ_1}`, `m_{α23} = c_3 t^{μ_3}` and
/// `m_{α13} = 1/(1/m_{α12} + 1/m_{α23})`.
pub fn toeplitz_family_n3(mu1: &Rational, mu3: &Rational, c1: &Rational, c3: &Rational) -> Result<ToeplitzWitness> {
    let m1 = PosLead::new(mu1.clone(), c1.clone())?;
    let m3 = PosLead::new(mu3.clone(), c3.clone())?;
    let m2 = m1.recip().add(&m3.recip()).recip();
    let mut m = BTreeMap::new();
    m.insert(Root { i: 1, j: 2 }, m1);
    m.insert(Root { i: 1, j: 3 }, m2);
    m.insert(Root { i: 2, j: 3 }, m3);
    ToeplitzWitness::new(ReducedWord::new(3, vec![1, 2, 1])?, m)
}

/// Outcome of checking that the valuations of a Toeplitz witness form an ideal filling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremReport {
    /// The product is Toeplitz; `valid` records whether the valuations form an ideal filling.
    Checked {
        /// Valuations `μ_α`.
        filling: IdealFilling,
        /// Whether the max relations and nonnegativity hold.
        valid: bool,
    },
    /// The product is not Toeplitz.
    Skipped {
        /// Why the check did not apply.
        reason: String,
    },
}

impl TheoremReport {
    /// Whether the check applied and succeeded.
    pub fn passed(&self) -> bool {
        matches!(self, TheoremReport::Checked { valid: true, .. })
    }
}

/// Checks that the valuations of a Toeplitz witness with nonnegative valuations form an
/// ideal filling.
pub fn theorem_check(w: &ToeplitzWitness) -> TheoremReport {
    if !is_toeplitz(&w.product) {
        return TheoremReport::Skipped { reason: "product is not Toeplitz".into() };
    }
    if w.m.values().any(|x| *x.valuation() < int(0)) {
        return TheoremReport::Skipped { reason: "a parameter has negative valuation".into() };
    }
    let filling = w.valuations();
    let valid = validate_filling(&filling);
    TheoremReport::Checked { filling, valid }
}

/// Reduces a product of `y`-factors to a reduced word, using braid moves and
/// `y_i(a) y_i(b) = y_i(a + b)`. Returns the reduced letters and parameters.
pub fn reduce_y_word<T: Semifield>(n: usize, letters: &[usize], params: &[T]) -> Result<(Vec<usize>, Vec<T>)> {
    if letters.len() != params.len() {
        return Err(MirrorError::Domain("letters and parameters differ in length".into()));
    }
    let mut w = letters.to_vec();
    let mut p = params.to_vec();
    while !is_reduced_expression(n, &w) {
        let moves = braid_search(&w, |x| x.windows(2).any(|pair| pair[0] == pair[1]))
            .ok_or_else(|| MirrorError::Integrity("non-reduced word without a reducible form".into()))?;
        for mv in moves {
            w = apply_move(&w, mv).ok_or_else(|| MirrorError::Integrity("braid move does not apply".into()))?;
            match mv {
                Move::Commute { pos } => p.swap(pos - 1, pos),
                Move::Braid { pos } => {
                    let (a, b, c) = y_braid(&p[pos - 1], &p[pos], &p[pos + 1]);
                    p[pos - 1] = a;
                    p[pos] = b;
                    p[pos + 1] = c;
                }
            }
        }
        let k = w.windows(2).position(|pair| pair[0] == pair[1]).expect("goal reached");
        let merged = p[k].add(&p[k + 1]);
        w.remove(k + 1);
        p.remove(k + 1);
        p[k] = merged;
    }
    Ok((w, p))
}

/// Toeplitz witness from the commuting product `Π_k (I + a_k S)`, each factor being
/// `y_1(a_k)···y_{n−1}(a_k)`, reduced to a reduced word of `w_0`.
pub fn toeplitz_from_shifts(n: usize, a: &[PosLead]) -> Result<ToeplitzWitness> {
    if a.len() + 1 < n {
        return Err(MirrorError::Domain(format!("need at least {} shift factors for n = {n}", n - 1)));
    }
    let mut letters = Vec::new();
    let mut params = Vec::new();
    for x in a {
        for i in 1..n {
            letters.push(i);
            params.push(x.clone());
        }
    }
    let (w, p) = reduce_y_word(n, &letters, &params)?;
    let word = ReducedWord::new(n, w)?;
    if word.len() != num_positive_roots(n) {
        return Err(MirrorError::NonGeneric("shift product does not reach the longest element".into()));
    }
    let m = positive_root_sequence(&word).into_iter().zip(p).map(|(r, y)| (r, y.recip())).collect();
    ToeplitzWitness::new(word, m)
}

/// Random positive leading term with valuation in `[-v, v]` (denominators up to 3) and
/// coefficient in `(0, 5]`.
pub fn random_poslead<R: Rng>(rng: &mut R, v: i64) -> PosLead {
    let val = Rational::new(rng.gen_range(-3 * v..=3 * v).into(), rng.gen_range(1i64..=3).into());
    let coeff = Rational::new(rng.gen_range(1i64..=15).into(), rng.gen_range(1i64..=3).into());
    PosLead::new(val, coeff).expect("positive coefficient")
}

/// `count` shift factors with valuations in `[-v, 0]`, so that the resulting parameters
/// have nonnegative valuations.
pub fn random_shift_factors<R: Rng>(rng: &mut R, count: usize, v: i64) -> Vec<PosLead> {
    (0..count)
        .map(|_| {
            let p = random_poslead(rng, v);
            let val = -p.valuation().abs();
            PosLead::new(val, p.coefficient().clone()).expect("positive coefficient")
        })
        .collect()
}

/// Deterministic sample of Toeplitz witnesses: the `n = 3` family along `(1,2,1)` with
/// nonnegative valuations, and shift products for `n ≥ 4`.
pub fn sample_witnesses(n: usize, count: usize, seed: u64) -> Result<Vec<ToeplitzWitness>> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| match n {
            0..=2 => Err(MirrorError::SizeLimit(format!("witness sampling needs n ≥ 3, got {n}"))),
            3 => {
                let a = random_poslead(&mut rng, 4);
                let b = random_poslead(&mut rng, 4);
                toeplitz_family_n3(&a.valuation().abs(), &b.valuation().abs(), a.coefficient(), b.coefficient())
            }
            6.. => Err(MirrorError::SizeLimit(format!("witness sampling supports n ≤ 5, got {n}"))),
            _ => {
                let k = rng.gen_range(n - 1..=n + 1);
                toeplitz_from_shifts(n, &random_shift_factors(&mut rng, k, 3))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn rank_one_product() {
        let m1 = PosLead::new(int(2), int(3)).unwrap();
        let mut m = BTreeMap::new();
        m.insert(Root { i: 1, j: 2 }, m1.clone());
        let w = ToeplitzWitness::new(ReducedWord::i0(2), m).unwrap();
        assert_eq!(w.product().at(1, 0), &Some(m1.recip()));
        assert!(is_toeplitz(w.product()));
    }

    #[test]
    fn symmetric_family_member() {
        let w = toeplitz_family_n3(&int(0), &int(0), &int(1), &int(1)).unwrap();
        assert_eq!(w.m()[&Root { i: 1, j: 3 }], PosLead::new(int(0), rat(1, 2)).unwrap());
    }

    #[test]
    fn merging_reduces_length() {
        let one = PosLead::t_pow(int(0));
        let (w, p) = reduce_y_word(2, &[1, 1], &[one.clone(), one]).unwrap();
        assert_eq!(w, vec![1]);
        assert_eq!(p[0], PosLead::new(int(0), int(2)).unwrap());
    }
}
