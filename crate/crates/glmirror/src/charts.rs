//! Toric charts on the Landau–Ginzburg variety `Z = B_−^∨ ∩ B^∨ w̄_0 B^∨`.
//!
//! A point `b ∈ Z` factors as `b = u_1 · d · w̄_0 · u_2` with `u_1, u_2`
//! upper unitriangular and `d` diagonal. The superpotential is
//! `W(b) = χ(u_1) + χ(u_2)` where `χ` sums the superdiagonal, the
//! highest-weight map is `hw(b) = d` and the weight map `wt(b)` is the
//! diagonal of `b`.
//!
//! * The **string chart** of a reduced word `i` sends `(d, z)` to the `b`
//!   obtained from `u = x_{−i}(z)` via the twist `η = [(w̄_0 u^T)^{−1}]_+`, the
//!   involution `ι(g) = (w̄_0 g^{−1} w̄_0^{−1})^T`, `u_1 = ι(η)`, and the
//!   completion `u_1 · d · w̄_0 = L·D·U`, `b = L·D`, `u_2 = U^{−1}`.
//! * The **ideal chart** of `i` sends `(d, m')` to
//!   `y_{i_1}(1/m'_{α_1})···y_{i_N}(1/m'_{α_N}) · t_R(d, m')` where `α_k` is the
//!   positive root ordering of `i` and `t_R` is the universal weight matrix.
//!
//! ```
//! use glmirror::charts::string_superpotential;
//! use glmirror::weyl::ReducedWord;
//! let w = string_superpotential(&ReducedWord::i0(3)).unwrap();
//! assert_eq!(w.monomial_terms().unwrap().len(), 6);
//! ```

use std::collections::BTreeMap;

use crate::chamber::{ansatz_monomials, network_u1, network_u_transpose};
use crate::error::{MirrorError, Result};
use crate::exact::{Field, Semifield, Semiring};
use crate::matrix::{bruhat_decompose, w0bar, x_minus_product, y_product, Matrix};
use crate::symbolic::{LaurentMonomial, RatFn, SubFreeExpr, Var};
use crate::weyl::{apply_move, braid_path, num_positive_roots, positive_root_sequence, s_offset, Move, ReducedWord, Root};

/// A point of `Z` with its factorization when known.
#[derive(Clone, Debug, PartialEq)]
pub struct ZPoint<F> {
    /// The lower triangular matrix `b`.
    pub b: Matrix<F>,
    /// Left unipotent factor `u_1`.
    pub u1: Matrix<F>,
    /// Torus factor `d` as a vector `(d_1, …, d_n)`.
    pub d: Vec<F>,
    /// Right unipotent factor `u_2`.
    pub u2: Matrix<F>,
}

impl<F: Field> ZPoint<F> {
    /// Builds the point from `b` alone by Bruhat decomposition.
    pub fn from_b(b: Matrix<F>) -> Result<Self> {
        let f = bruhat_decompose(&b)?;
        Ok(ZPoint { b, u1: f.u1, d: f.d.diag(), u2: f.u2 })
    }

    /// Superpotential value `χ(u_1) + χ(u_2)`.
    pub fn superpotential(&self) -> F {
        Semiring::add(&self.u1.superdiagonal_sum(), &self.u2.superdiagonal_sum())
    }

    /// Highest weight `hw(b) = d`.
    pub fn hw(&self) -> &[F] {
        &self.d
    }

    /// Weight `wt(b)`: the diagonal of `b`.
    pub fn wt(&self) -> Vec<F> {
        self.b.diag()
    }
}

/// Root-indexed ideal coordinates for a reduced word.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealCoords<T> {
    word: ReducedWord,
    values: BTreeMap<Root, T>,
}

impl<T: Clone> IdealCoords<T> {
    /// Validates that the keys are exactly the positive roots.
    pub fn new(word: ReducedWord, values: BTreeMap<Root, T>) -> Result<Self> {
        let roots = Root::all(word.n());
        if values.len() != roots.len() || roots.iter().any(|r| !values.contains_key(r)) {
            return Err(MirrorError::Domain("ideal coordinates must be indexed by all positive roots".into()));
        }
        Ok(IdealCoords { word, values })
    }

    /// Coordinates given positionally in the word's root order.
    pub fn from_positional(word: ReducedWord, values: &[T]) -> Result<Self> {
        if values.len() != word.len() {
            return Err(MirrorError::Domain(format!("expected {} coordinates, got {}", word.len(), values.len())));
        }
        let map = positive_root_sequence(&word).into_iter().zip(values.iter().cloned()).collect();
        IdealCoords::new(word, map)
    }

    /// The word.
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    /// Root-indexed values.
    pub fn values(&self) -> &BTreeMap<Root, T> {
        &self.values
    }

    /// Value at a root.
    pub fn get(&self, r: Root) -> &T {
        &self.values[&r]
    }

    /// Values in the word's root order.
    pub fn positional(&self) -> Vec<T> {
        positive_root_sequence(&self.word).into_iter().map(|r| self.values[&r].clone()).collect()
    }
}

/// Position of `α_ij` in the root order of `i_0`: `s_i + j − i`.
pub fn i0_position(n: usize, r: Root) -> usize {
    s_offset(n, r.i) + r.j - r.i
}

/// Symbolic ideal coordinates `m'_α` for a word.
pub fn symbolic_ideal_coords(word: &ReducedWord) -> IdealCoords<SubFreeExpr> {
    let values = Root::all(word.n()).into_iter().map(|r| (r, SubFreeExpr::var(Var::root(r)))).collect();
    IdealCoords { word: word.clone(), values }
}

fn check_len<T>(what: &str, v: &[T], expect: usize) -> Result<()> {
    if v.len() != expect {
        return Err(MirrorError::Domain(format!("{what}: expected {expect} entries, got {}", v.len())));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// String chart
// ---------------------------------------------------------------------------

/// The string chart `(d, z) ↦ b` over a field.
pub fn string_chart_point<F: Field>(w: &ReducedWord, d: &[F], z: &[F]) -> Result<ZPoint<F>> {
    let n = w.n();
    check_len("d", d, n)?;
    check_len("z", z, w.len())?;
    let u = x_minus_product(n, w.letters(), z)?;
    let w0: Matrix<F> = w0bar(n);
    let w0_inv = w0.inverse()?;
    let eta = w0.mul(&u.transpose()).inverse()?.upper_part()?;
    let u1 = w0.mul(&eta.inverse()?).mul(&w0_inv).transpose();
    let g = u1.mul(&Matrix::diagonal(d)).mul(&w0);
    let (l, dd, uu) = g.gauss_ldu()?;
    let u2 = uu.inverse()?;
    let b = l.mul(&dd);
    Ok(ZPoint { b, u1, d: d.to_vec(), u2 })
}

/// Symbolic variables `d_1..d_n`.
pub fn d_vars<F: Field>(n: usize, var: impl Fn(Var) -> F) -> Vec<F> {
    (1..=n).map(|i| var(Var::D(i as u16))).collect()
}

/// The string chart over rational functions in `d_i` and `z_k`.
pub fn string_chart_symbolic(w: &ReducedWord) -> Result<ZPoint<RatFn>> {
    let d = d_vars(w.n(), RatFn::var);
    let z: Vec<RatFn> = (1..=w.len()).map(|k| RatFn::var(Var::Z(k as u16))).collect();
    string_chart_point(w, &d, &z)
}

/// Converts a rational function with positive numerator and denominator to a subtraction-free expression.
pub fn ratfn_to_subfree(r: &RatFn) -> Result<SubFreeExpr> {
    let num = r.numerator().to_subfree()?;
    match r.as_poly() {
        Some(_) => Ok(num),
        None => Ok(Semifield::div(&num, &r.denominator().to_subfree()?)),
    }
}

/// Matrix of subtraction-free entries (`None` for structural zeros).
pub fn subfree_matrix(m: &Matrix<RatFn>) -> Result<Matrix<Option<SubFreeExpr>>> {
    m.try_map(|e| if Semiring::is_zero(e) { Ok(None) } else { ratfn_to_subfree(e).map(Some) })
}

/// Superpotential of the string chart of `w` as a subtraction-free expression.
pub fn string_superpotential(w: &ReducedWord) -> Result<SubFreeExpr> {
    let p = string_chart_symbolic(w)?;
    ratfn_to_subfree(&p.superpotential())
}

/// Weight matrix in string coordinates: entry `n−j+1` is `d_j Π_{i_m=j−1} z_m / Π_{i_m=j} z_m`.
pub fn string_weight_formula<T: Semifield>(w: &ReducedWord, d: &[T], z: &[T]) -> Result<Vec<T>> {
    let n = w.n();
    check_len("d", d, n)?;
    check_len("z", z, w.len())?;
    let mut out = vec![T::unit(); n];
    for j in 1..=n {
        let mut v = d[j - 1].clone();
        for (m, &i) in w.letters().iter().enumerate() {
            if i + 1 == j {
                v = v.mul(&z[m]);
            } else if i == j {
                v = v.div(&z[m]);
            }
        }
        out[n - j] = v;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Ideal chart
// ---------------------------------------------------------------------------

/// Universal weight matrix diagonal: entry `n−j+1` is
/// `d_j Π_{l<j} m'_{α_lj} / Π_{l=j}^{n−1} m'_{α_{j,l+1}}`.
pub fn universal_weight<T: Semifield + Clone>(d: &[T], m: &BTreeMap<Root, T>) -> Result<Vec<T>> {
    let n = d.len();
    let get = |i: usize, j: usize| -> Result<T> {
        m.get(&Root::new(i, j)?)
            .cloned()
            .ok_or_else(|| MirrorError::UnboundVariable(format!("m'{i}{j}")))
    };
    let mut out = vec![T::unit(); n];
    for j in 1..=n {
        let mut v = d[j - 1].clone();
        for l in 1..j {
            v = v.mul(&get(l, j)?);
        }
        for l in j..n {
            v = v.div(&get(j, l + 1)?);
        }
        out[n - j] = v;
    }
    Ok(out)
}

/// Weight matrix in the `i_0` ideal coordinates: entry `n−j+1` is
/// `d_j Π_{k<j} m_{s_k+j−k} / Π_{r=1}^{n−j} m_{s_j+r}`.
pub fn ideal_weight_formula_i0<T: Semifield>(d: &[T], m: &[T]) -> Result<Vec<T>> {
    let n = d.len();
    check_len("m", m, num_positive_roots(n))?;
    let mut out = vec![T::unit(); n];
    for j in 1..=n {
        let mut v = d[j - 1].clone();
        for k in 1..j {
            v = v.mul(&m[s_offset(n, k) + j - k - 1]);
        }
        for r in 1..=n - j {
            v = v.div(&m[s_offset(n, j) + r - 1]);
        }
        out[n - j] = v;
    }
    Ok(out)
}

/// The ideal chart `b` over a semifield with adjoined zero (no subtraction needed).
pub fn ideal_chart_b<T: Semifield>(d: &[T], coords: &IdealCoords<T>) -> Result<Matrix<Option<T>>> {
    let n = coords.word().n();
    check_len("d", d, n)?;
    let params: Vec<Option<T>> = coords.positional().iter().map(|m| Some(m.recip())).collect();
    let y = y_product(n, coords.word().letters(), &params);
    let tr: Vec<Option<T>> = universal_weight(d, coords.values())?.into_iter().map(Some).collect();
    Ok(y.mul(&Matrix::diagonal(&tr)))
}

/// The ideal chart over a field, with the full factorization.
pub fn ideal_chart_point<F: Field + Semifield>(d: &[F], coords: &IdealCoords<F>) -> Result<ZPoint<F>> {
    let n = coords.word().n();
    check_len("d", d, n)?;
    let mut params = Vec::with_capacity(coords.word().len());
    for m in coords.positional() {
        params.push(
            Field::inv(&m).ok_or_else(|| MirrorError::NonGeneric("ideal coordinate is zero".into()))?,
        );
    }
    let y = y_product(n, coords.word().letters(), &params);
    let tr = universal_weight(d, coords.values())?;
    ZPoint::from_b(y.mul(&Matrix::diagonal(&tr)))
}

/// The `i_0` ideal chart over rational functions in `d_i` and `m_k`.
pub fn ideal_chart_symbolic_i0(n: usize) -> Result<ZPoint<RatFn>> {
    let w = ReducedWord::i0(n);
    let m: Vec<RatFn> = (1..=w.len()).map(|k| RatFn::var(Var::M(k as u16))).collect();
    let coords = IdealCoords::from_positional(w, &m)?;
    ideal_chart_point(&d_vars(n, RatFn::var), &coords)
}

/// Superpotential of the `i_0` ideal chart, by Bruhat decomposition of `b`.
pub fn ideal_superpotential_i0(n: usize) -> Result<SubFreeExpr> {
    ratfn_to_subfree(&ideal_chart_symbolic_i0(n)?.superpotential())
}

/// Superpotential in the ideal chart of an arbitrary word, in the variables `m'_α`,
/// obtained by pulling back the `i_0` superpotential through [`chart_transfer`].
pub fn ideal_superpotential(w: &ReducedWord) -> Result<SubFreeExpr> {
    let n = w.n();
    let base = ideal_superpotential_i0(n)?;
    let at_i0 = chart_transfer(&symbolic_ideal_coords(w), &ReducedWord::i0(n))?;
    let rules: BTreeMap<Var, SubFreeExpr> = at_i0
        .values()
        .iter()
        .map(|(r, e)| (Var::M(i0_position(n, *r) as u16), e.clone()))
        .collect();
    Ok(base.substitute(&rules))
}

// ---------------------------------------------------------------------------
// Monomial coordinate changes for i_0
// ---------------------------------------------------------------------------

fn z_mono(k: usize) -> LaurentMonomial {
    LaurentMonomial::var(Var::Z(k as u16))
}

fn p_mono(k: usize) -> LaurentMonomial {
    LaurentMonomial::var(Var::P(k as u16))
}

fn m_mono(k: usize) -> LaurentMonomial {
    LaurentMonomial::var(Var::M(k as u16))
}

/// Ideal coordinates in terms of string coordinates for `i_0`:
/// `m_{s_k+a} = z_{1+s_{n−a}}` if `k = 1`, else `z_{k+s_{n−k−a+1}} / z_{k−1+s_{n−k−a+1}}`.
pub fn string_to_ideal_i0(n: usize) -> Vec<LaurentMonomial> {
    let s = |k: usize| s_offset(n, k);
    let mut out = vec![LaurentMonomial::one(); num_positive_roots(n)];
    for k in 1..n {
        for a in 1..=n - k {
            out[s(k) + a - 1] = if k == 1 {
                z_mono(1 + s(n - a))
            } else {
                let b = n - k - a + 1;
                z_mono(k + s(b)).div(&z_mono(k - 1 + s(b)))
            };
        }
    }
    out
}

/// Inverse change: `z_{k+s_{n−k−a+1}} = Π_{r=0}^{k−1} m_{s_{k−r}+a+r}`.
pub fn ideal_to_string_i0(n: usize) -> Vec<LaurentMonomial> {
    let s = |k: usize| s_offset(n, k);
    let mut out = vec![LaurentMonomial::one(); num_positive_roots(n)];
    for k in 1..n {
        for a in 1..=n - k {
            let mut v = LaurentMonomial::one();
            for r in 0..k {
                v = v.mul(&m_mono(s(k - r) + a + r));
            }
            out[k + s(n - k - a + 1) - 1] = v;
        }
    }
    out
}

/// Intermediate coordinates of `u_1 = x_{i'_0}(p)` in terms of `z`:
/// `p_{s_k+a} = z_{1+s_a}` if `k = 1`, else `z_{k+s_a} / z_{k−1+s_{a+1}}`.
pub fn p_from_z_closed_form(n: usize) -> Vec<LaurentMonomial> {
    let s = |k: usize| s_offset(n, k);
    let mut out = vec![LaurentMonomial::one(); num_positive_roots(n)];
    for k in 1..n {
        for a in 1..=n - k {
            out[s(k) + a - 1] =
                if k == 1 { z_mono(1 + s(a)) } else { z_mono(k + s(a)).div(&z_mono(k - 1 + s(a + 1))) };
        }
    }
    out
}

/// Ideal coordinates in terms of `p`:
/// `m_{s_k+a} = Π_{r=1}^{k} p_{s_{r+1}−a+1} / Π_{r=1}^{k−1} p_{s_{r+1}−a}`.
pub fn m_from_p_closed_form(n: usize) -> Vec<LaurentMonomial> {
    let s = |k: usize| s_offset(n, k);
    let mut out = vec![LaurentMonomial::one(); num_positive_roots(n)];
    for k in 1..n {
        for a in 1..=n - k {
            let mut v = LaurentMonomial::one();
            for r in 1..=k {
                v = v.mul(&p_mono(s(r + 1) + 1 - a));
            }
            for r in 1..k {
                v = v.div(&p_mono(s(r + 1) - a));
            }
            out[s(k) + a - 1] = v;
        }
    }
    out
}

/// `p` in terms of `z`, from the Chamber Ansatz applied to `u^T` along `i'_0^{op}`.
pub fn p_from_z_ansatz(n: usize) -> Result<Vec<LaurentMonomial>> {
    let t = ansatz_monomials(&network_u_transpose(&ReducedWord::i0(n)), &ReducedWord::i0_prime_op(n))?;
    Ok(t.into_iter().rev().collect())
}

/// `m` in terms of `p`, from the Chamber Ansatz applied to `u_1` along `i_0`.
pub fn m_from_p_ansatz(n: usize) -> Result<Vec<LaurentMonomial>> {
    let t = ansatz_monomials(&network_u1(n), &ReducedWord::i0(n))?;
    Ok(t.iter().map(|x| x.inv()).collect())
}

/// `m` in terms of `z`, composing the two Chamber Ansatz factorizations.
pub fn m_from_z_ansatz(n: usize) -> Result<Vec<LaurentMonomial>> {
    let p = p_from_z_ansatz(n)?;
    let rules: BTreeMap<Var, LaurentMonomial> =
        p.into_iter().enumerate().map(|(k, v)| (Var::P((k + 1) as u16), v)).collect();
    Ok(m_from_p_ansatz(n)?.iter().map(|m| m.substitute(&rules)).collect())
}

/// Substitution rules `m_k ↦ monomial in z` (or the inverse) as a map.
pub fn monomial_rules(target: fn(u16) -> Var, images: &[LaurentMonomial]) -> BTreeMap<Var, SubFreeExpr> {
    images.iter().enumerate().map(|(k, v)| (target((k + 1) as u16), SubFreeExpr::mono(v.clone()))).collect()
}

// ---------------------------------------------------------------------------
// Braid coordinate changes
// ---------------------------------------------------------------------------

/// Ideal-coordinate change for a single move.
///
/// For a long braid with root triple `(α, α+β, β)`:
/// `m''_α = m'_{α+β}(m'_α+m'_β)/m'_β`, `m''_{α+β} = m'_α m'_β/(m'_α+m'_β)`,
/// `m''_β = m'_{α+β}(m'_α+m'_β)/m'_α`. Commutations change only the word.
pub fn braid_coordinate_change<T: Semifield>(coords: &IdealCoords<T>, mv: Move) -> Result<IdealCoords<T>> {
    let w = coords.word();
    let letters = apply_move(w.letters(), mv)
        .ok_or_else(|| MirrorError::Domain(format!("move {mv:?} does not apply to {w}")))?;
    let new_word = ReducedWord::new(w.n(), letters)?;
    let mut values = coords.values().clone();
    if let Move::Braid { pos } = mv {
        let roots = positive_root_sequence(w);
        let (a, ab, b) = (roots[pos - 1], roots[pos], roots[pos + 1]);
        let (ma, mab, mb) = (values[&a].clone(), values[&ab].clone(), values[&b].clone());
        let s = ma.add(&mb);
        values.insert(a, mab.mul(&s).div(&mb));
        values.insert(ab, ma.mul(&mb).div(&s));
        values.insert(b, mab.mul(&s).div(&ma));
    }
    Ok(IdealCoords { word: new_word, values })
}

/// Ideal-coordinate transfer along the canonical braid path between two words.
pub fn chart_transfer<T: Semifield>(coords: &IdealCoords<T>, to: &ReducedWord) -> Result<IdealCoords<T>> {
    let mut cur = coords.clone();
    for mv in braid_path(coords.word(), to)? {
        cur = braid_coordinate_change(&cur, mv)?;
    }
    Ok(cur)
}

/// `y_i(a) y_j(b) y_i(c) = y_j(bc/(a+c)) y_i(a+c) y_j(ab/(a+c))` for `|i − j| = 1`.
pub fn y_braid<T: Semifield>(a: &T, b: &T, c: &T) -> (T, T, T) {
    let s = a.add(c);
    (b.mul(c).div(&s), s.clone(), a.mul(b).div(&s))
}

/// `x_{−i}(a) x_{−j}(b) x_{−i}(c) = x_{−j}(A) x_{−i}(B) x_{−j}(C)` for `|i − j| = 1`,
/// with `(A, B, C) = (bc/(ac+b), ac, (ac+b)/c)` (the map is an involution).
pub fn x_minus_braid<T: Semifield>(a: &T, b: &T, c: &T) -> (T, T, T) {
    let ac = a.mul(c);
    let s = ac.add(b);
    (b.mul(c).div(&s), ac, s.div(c))
}

/// String-coordinate change for a single move (`u = x_{−i}(z)` is preserved).
pub fn string_braid_change<T: Semifield>(w: &ReducedWord, z: &[T], mv: Move) -> Result<(ReducedWord, Vec<T>)> {
    check_len("z", z, w.len())?;
    let letters = apply_move(w.letters(), mv)
        .ok_or_else(|| MirrorError::Domain(format!("move {mv:?} does not apply to {w}")))?;
    let mut out = z.to_vec();
    match mv {
        Move::Commute { pos } => out.swap(pos - 1, pos),
        Move::Braid { pos } => {
            let (a, b, c) = x_minus_braid(&z[pos - 1], &z[pos], &z[pos + 1]);
            out[pos - 1] = a;
            out[pos] = b;
            out[pos + 1] = c;
        }
    }
    Ok((ReducedWord::new(w.n(), letters)?, out))
}

/// String-coordinate transfer along the canonical braid path.
pub fn string_transfer<T: Semifield>(from: &ReducedWord, z: &[T], to: &ReducedWord) -> Result<Vec<T>> {
    let mut w = from.clone();
    let mut cur = z.to_vec();
    for mv in braid_path(from, to)? {
        let (nw, nz) = string_braid_change(&w, &cur, mv)?;
        w = nw;
        cur = nz;
    }
    Ok(cur)
}

/// Entry-wise comparison of the string and ideal charts for `i_0`, after the change of
/// coordinates `z = z(m)`. The symbolic factorizations are computed once; each sample is
/// then evaluated over any semifield.
#[derive(Clone, Debug)]
pub struct ChartConsistency {
    n: usize,
    string: [Matrix<Option<SubFreeExpr>>; 3],
    ideal: [Matrix<Option<SubFreeExpr>>; 3],
    z_of_m: Vec<LaurentMonomial>,
}

impl ChartConsistency {
    /// Builds the symbolic comparison data for rank `n`.
    pub fn new(n: usize) -> Result<Self> {
        let convert = |p: &ZPoint<RatFn>| -> Result<[Matrix<Option<SubFreeExpr>>; 3]> {
            Ok([subfree_matrix(&p.b)?, subfree_matrix(&p.u1)?, subfree_matrix(&p.u2)?])
        };
        let string = convert(&string_chart_symbolic(&ReducedWord::i0(n))?)?;
        let ideal = convert(&ideal_chart_symbolic_i0(n)?)?;
        Ok(ChartConsistency { n, string, ideal, z_of_m: ideal_to_string_i0(n) })
    }

    /// Rank.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Evaluates `b`, `u_1` and `u_2` in both charts at `(d, m)` and reports whether
    /// they agree. Also checks the ideal `b` computed directly from the `y`-factor product.
    pub fn check<T: Semifield + PartialEq>(&self, d: &[T], m: &[T]) -> Result<bool> {
        check_len("d", d, self.n)?;
        check_len("m", m, num_positive_roots(self.n))?;
        let ideal_assign = |v: Var| match v {
            Var::D(i) => d.get(i as usize - 1).cloned(),
            Var::M(k) => m.get(k as usize - 1).cloned(),
            _ => None,
        };
        let z = evaluate_monomials(&self.z_of_m, &ideal_assign)?;
        let string_assign = |v: Var| match v {
            Var::D(i) => d.get(i as usize - 1).cloned(),
            Var::Z(k) => z.get(k as usize - 1).cloned(),
            _ => None,
        };
        let eval = |mat: &Matrix<Option<SubFreeExpr>>, assign: &dyn Fn(Var) -> Option<T>| -> Result<Vec<Vec<Option<T>>>> {
            mat.rows()
                .iter()
                .map(|row| row.iter().map(|e| e.as_ref().map(|x| x.evaluate(assign)).transpose()).collect())
                .collect()
        };
        let mut b_string = None;
        for (s, i) in self.string.iter().zip(&self.ideal) {
            let left = eval(s, &string_assign)?;
            if left != eval(i, &ideal_assign)? {
                return Ok(false);
            }
            b_string.get_or_insert(left);
        }
        let coords = IdealCoords::from_positional(ReducedWord::i0(self.n), m)?;
        let direct = ideal_chart_b(d, &coords)?.rows();
        Ok(b_string.as_ref() == Some(&direct))
    }
}

/// Evaluates monomial images (e.g. from [`ideal_to_string_i0`]) at a point.
pub fn evaluate_monomials<T: Semifield>(images: &[LaurentMonomial], assign: &dyn Fn(Var) -> Option<T>) -> Result<Vec<T>> {
    images.iter().map(|m| m.evaluate(assign)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Rational};

    #[test]
    fn n3_closed_forms() {
        let m = string_to_ideal_i0(3);
        assert_eq!(m[0], z_mono(3));
        assert_eq!(m[1], z_mono(1));
        assert_eq!(m[2], z_mono(2).div(&z_mono(1)));
        let zz = ideal_to_string_i0(3);
        assert_eq!(zz[0], m_mono(2));
        assert_eq!(zz[1], m_mono(2).mul(&m_mono(3)));
        assert_eq!(zz[2], m_mono(1));
    }

    #[test]
    fn rank_one_ideal_chart() {
        let w = ReducedWord::new(2, vec![1]).unwrap();
        let coords = IdealCoords::from_positional(w, &[int(3)]).unwrap();
        let p = ideal_chart_point(&[int(5), int(2)], &coords).unwrap();
        assert_eq!(p.hw(), &[int(5), int(2)]);
        assert_eq!(p.superpotential(), int(3) + rat(5, 2) / int(3));
    }

    #[test]
    fn x_minus_braid_is_an_identity_of_matrices() {
        let (a, b, c) = (rat(2, 3), int(5), rat(7, 2));
        let (aa, bb, cc) = x_minus_braid(&a, &b, &c);
        let lhs = x_minus_product(3, &[1, 2, 1], &[a.clone(), b.clone(), c.clone()]).unwrap();
        let rhs = x_minus_product(3, &[2, 1, 2], &[aa.clone(), bb.clone(), cc.clone()]).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(x_minus_braid(&aa, &bb, &cc), (a, b, c));
    }

    #[test]
    fn single_move_triple() {
        let w = ReducedWord::i0(3);
        let coords = IdealCoords::from_positional(w, &[int(1), int(1), int(1)]).unwrap();
        let out = braid_coordinate_change(&coords, Move::Braid { pos: 1 }).unwrap();
        let a = Root::new(1, 2).unwrap();
        let ab = Root::new(1, 3).unwrap();
        let b = Root::new(2, 3).unwrap();
        assert_eq!(out.get(a), &int(2));
        assert_eq!(out.get(ab), &rat(1, 2));
        assert_eq!(out.get(b), &int(2));
        let back: Vec<Rational> = braid_coordinate_change(&out, Move::Braid { pos: 1 }).unwrap().positional();
        assert_eq!(back, vec![int(1), int(1), int(1)]);
    }
}
