//! Square matrices over a generic ring interface.
//!
//! Provides Chevalley generators of `GL_n`, minors, the Gauss decomposition
//! `g = [g]_−[g]_0[g]_+`, the Bruhat-cell decomposition `b = u_1·d·w̄_0·u_2`,
//! and planar networks whose minors are computed by the
//! Lindström–Gessel–Viennot rule as sums over vertex-disjoint path families.
//!
//! Index sets passed to [`Matrix::minor`] are 1-based, matching the usual
//! `Δ^J_K` notation.
//!
//! ```
//! use glmirror::matrix::{Matrix, w0bar};
//! use glmirror::exact::{int, Rational};
//! let w: Matrix<Rational> = w0bar(3);
//! assert_eq!(w.at(1, 1), &int(-1));
//! assert_eq!(w.minor(&[1, 2, 3], &[1, 2, 3]).unwrap(), int(1));
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{MirrorError, Result};
use crate::exact::{Field, Rational, Ring, Semifield, Semiring};
use crate::weyl::ReducedWord;

/// Dense square matrix, row-major, 0-based storage.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    n: usize,
    data: Vec<R>,
}

impl<R: Semiring> Matrix<R> {
    /// Builds from a function of 0-based `(row, col)`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        Matrix { n, data }
    }

    /// Builds from rows; every row must have length `n`.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MirrorError::Domain("matrix must be square".into()));
        }
        Ok(Matrix { n, data: rows.into_iter().flatten().collect() })
    }

    /// Identity.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| if r == c { R::one() } else { R::zero() })
    }

    /// Diagonal matrix.
    pub fn diagonal(entries: &[R]) -> Self {
        Self::from_fn(entries.len(), |r, c| if r == c { entries[r].clone() } else { R::zero() })
    }

    /// Size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn at(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.n + c]
    }

    /// Mutable entry at 0-based `(row, col)`.
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut R {
        &mut self.data[r * self.n + c]
    }

    /// Rows as vectors.
    pub fn rows(&self) -> Vec<Vec<R>> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.at(r, c).clone()).collect()).collect()
    }

    /// Diagonal entries.
    pub fn diag(&self) -> Vec<R> {
        (0..self.n).map(|i| self.at(i, i).clone()).collect()
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.at(c, r).clone())
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        Self::from_fn(self.n, |r, c| {
            let mut acc = R::zero();
            for k in 0..self.n {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.at(k, c);
                if b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            acc
        })
    }

    /// Product of a list of matrices (identity for the empty list).
    pub fn product(n: usize, factors: &[Self]) -> Self {
        factors.iter().fold(Self::identity(n), |acc, f| acc.mul(f))
    }

    /// Entry-wise map into another semiring.
    pub fn map<S: Semiring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    /// Fallible entry-wise map.
    pub fn try_map<S: Semiring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix { n: self.n, data: self.data.iter().map(f).collect::<Result<Vec<S>>>()? })
    }

    /// Whether all entries strictly above the diagonal vanish.
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|r| (r + 1..self.n).all(|c| self.at(r, c).is_zero()))
    }

    /// Whether all entries strictly below the diagonal vanish.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|r| (0..r).all(|c| self.at(r, c).is_zero()))
    }

    /// Whether the matrix is upper triangular with unit diagonal.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| self.at(i, i) == &R::one())
    }

    /// Sum of the superdiagonal entries `χ(u) = Σ u_{i,i+1}`.
    pub fn superdiagonal_sum(&self) -> R {
        (0..self.n.saturating_sub(1)).fold(R::zero(), |acc, i| acc.add(self.at(i, i + 1)))
    }
}

impl<R: Ring> Matrix<R> {
    /// Minor `Δ^J_K` with 1-based row set `J` and column set `K`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<R> {
        if rows.len() != cols.len() {
            return Err(MirrorError::Domain(format!(
                "minor needs equal-size index sets, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        if let Some(bad) = rows.iter().chain(cols).find(|&&x| x == 0 || x > self.n) {
            return Err(MirrorError::IndexOutOfRange(format!("minor index {bad} not in 1..{}", self.n)));
        }
        let l = rows.len();
        if l == 0 {
            return Ok(R::one());
        }
        // memo[mask] = signed sum for the first popcount(mask) rows using the columns in mask
        let mut memo: HashMap<u32, R> = HashMap::new();
        memo.insert(0, R::one());
        for mask in 1u32..(1u32 << l) {
            let r = mask.count_ones() as usize - 1;
            let mut acc = R::zero();
            for c in 0..l {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let entry = self.at(rows[r] - 1, cols[c] - 1);
                if entry.is_zero() {
                    continue;
                }
                let rest = &memo[&(mask & !(1 << c))];
                if rest.is_zero() {
                    continue;
                }
                let higher = (mask >> (c + 1)).count_ones();
                let term = entry.mul(rest);
                acc = if higher % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            memo.insert(mask, acc);
        }
        Ok(memo.remove(&((1u32 << l) - 1)).expect("full mask computed"))
    }

    /// Determinant.
    pub fn det(&self) -> R {
        let idx: Vec<usize> = (1..=self.n).collect();
        self.minor(&idx, &idx).expect("valid index sets")
    }

    /// Entry-wise negation.
    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }
}

impl<F: Field> Matrix<F> {
    /// Inverse via the adjugate; fails when the determinant vanishes.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let inv_det = det.inv().ok_or_else(|| MirrorError::NonGeneric("singular matrix".into()))?;
        let n = self.n;
        let mut out = Matrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                // (A^{-1})_{rc} = (−1)^{r+c} Δ^{[n]∖c}_{[n]∖r} / det
                let rows: Vec<usize> = (1..=n).filter(|&x| x != c + 1).collect();
                let cols: Vec<usize> = (1..=n).filter(|&x| x != r + 1).collect();
                let cof = self.minor(&rows, &cols)?;
                let signed = if (r + c) % 2 == 0 { cof } else { cof.neg() };
                *out.at_mut(r, c) = signed.mul(&inv_det);
            }
        }
        Ok(out)
    }

    /// Gauss decomposition `M = L·D·U` (lower unitriangular, diagonal, upper unitriangular).
    pub fn gauss_ldu(&self) -> Result<(Self, Self, Self)> {
        let n = self.n;
        let mut principal = vec![F::one()];
        for k in 1..=n {
            let idx: Vec<usize> = (1..=k).collect();
            let d = self.minor(&idx, &idx)?;
            if d.is_zero() {
                return Err(MirrorError::NonGeneric(format!("leading principal minor {k} vanishes")));
            }
            principal.push(d);
        }
        let mut l = Matrix::identity(n);
        let mut d = Matrix::identity(n);
        let mut u = Matrix::identity(n);
        for k in 1..=n {
            *d.at_mut(k - 1, k - 1) = principal[k]
                .div(&principal[k - 1])
                .ok_or_else(|| MirrorError::NonGeneric("zero pivot".into()))?;
            let head: Vec<usize> = (1..k).collect();
            for j in k + 1..=n {
                let mut cols = head.clone();
                cols.push(j);
                let rows: Vec<usize> = (1..=k).collect();
                let num = self.minor(&rows, &cols)?;
                *u.at_mut(k - 1, j - 1) =
                    num.div(&principal[k]).ok_or_else(|| MirrorError::NonGeneric("zero pivot".into()))?;
                let mut rows_l = head.clone();
                rows_l.push(j);
                let num_l = self.minor(&rows_l, &(1..=k).collect::<Vec<_>>())?;
                *l.at_mut(j - 1, k - 1) =
                    num_l.div(&principal[k]).ok_or_else(|| MirrorError::NonGeneric("zero pivot".into()))?;
            }
        }
        Ok((l, d, u))
    }

    /// Upper unitriangular part `[g]_+` of the Gauss decomposition.
    pub fn upper_part(&self) -> Result<Self> {
        Ok(self.gauss_ldu()?.2)
    }
}

impl<R: Semiring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Chevalley generators
// ---------------------------------------------------------------------------

/// Kinds of one-parameter subgroup elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChevalleyKind {
    /// `x_i(z)`: upper unipotent.
    X,
    /// `y_i(z)`: lower unipotent.
    Y,
    /// `x_{−i}(z) = φ_i [[1/z, 0], [1, z]]`.
    XMinus,
    /// `t_i(z) = φ_i diag(z, 1/z)`.
    T,
    /// `s̄_i = φ_i [[0, −1], [1, 0]]`.
    SBar,
    /// `w̄_0`, product of the `s̄_i` along a reduced word.
    W0Bar,
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(MirrorError::IndexOutOfRange(format!("generator index {i} not in 1..{}", n.saturating_sub(1))))
    } else {
        Ok(())
    }
}

fn embed<R: Semiring>(n: usize, i: usize, block: [[R; 2]; 2]) -> Matrix<R> {
    let mut m = Matrix::identity(n);
    *m.at_mut(i - 1, i - 1) = block[0][0].clone();
    *m.at_mut(i - 1, i) = block[0][1].clone();
    *m.at_mut(i, i - 1) = block[1][0].clone();
    *m.at_mut(i, i) = block[1][1].clone();
    m
}

/// `x_i(z)`.
pub fn x_gen<R: Semiring>(n: usize, i: usize, z: R) -> Matrix<R> {
    embed(n, i, [[R::one(), z], [R::zero(), R::one()]])
}

/// `y_i(z)`.
pub fn y_gen<R: Semiring>(n: usize, i: usize, z: R) -> Matrix<R> {
    embed(n, i, [[R::one(), R::zero()], [z, R::one()]])
}

/// `x_{−i}(z)`.
pub fn x_minus_gen<F: Field>(n: usize, i: usize, z: &F) -> Result<Matrix<F>> {
    let inv = z.inv().ok_or_else(|| MirrorError::NonGeneric("x_{-i} parameter is zero".into()))?;
    Ok(embed(n, i, [[inv, F::zero()], [F::one(), z.clone()]]))
}

/// `t_i(z)`.
pub fn t_gen<F: Field>(n: usize, i: usize, z: &F) -> Result<Matrix<F>> {
    let inv = z.inv().ok_or_else(|| MirrorError::NonGeneric("t_i parameter is zero".into()))?;
    Ok(embed(n, i, [[z.clone(), F::zero()], [F::zero(), inv]]))
}

/// `s̄_i`.
pub fn sbar<R: Ring>(n: usize, i: usize) -> Matrix<R> {
    embed(n, i, [[R::zero(), R::one().neg()], [R::one(), R::zero()]])
}

/// `w̄_0` computed along the word `i_0`.
pub fn w0bar<R: Ring>(n: usize) -> Matrix<R> {
    w0bar_along(&ReducedWord::i0(n))
}

/// `w̄_0` computed along a given reduced word.
pub fn w0bar_along<R: Ring>(w: &ReducedWord) -> Matrix<R> {
    let n = w.n();
    w.letters().iter().fold(Matrix::identity(n), |acc, &i| acc.mul(&sbar(n, i)))
}

/// Generic constructor dispatching on the kind (the index is ignored for `W0Bar`).
pub fn chevalley<F: Field>(kind: ChevalleyKind, n: usize, i: usize, param: &F) -> Result<Matrix<F>> {
    if kind != ChevalleyKind::W0Bar {
        check_index(n, i)?;
    }
    match kind {
        ChevalleyKind::X => Ok(x_gen(n, i, param.clone())),
        ChevalleyKind::Y => Ok(y_gen(n, i, param.clone())),
        ChevalleyKind::XMinus => x_minus_gen(n, i, param),
        ChevalleyKind::T => t_gen(n, i, param),
        ChevalleyKind::SBar => Ok(sbar(n, i)),
        ChevalleyKind::W0Bar => Ok(w0bar(n)),
    }
}

/// Product `y_{i_1}(t_1)···y_{i_k}(t_k)`.
pub fn y_product<R: Semiring>(n: usize, letters: &[usize], params: &[R]) -> Matrix<R> {
    letters
        .iter()
        .zip(params)
        .fold(Matrix::identity(n), |acc, (&i, t)| acc.mul(&y_gen(n, i, t.clone())))
}

/// Product `x_{i_1}(t_1)···x_{i_k}(t_k)`.
pub fn x_product<R: Semiring>(n: usize, letters: &[usize], params: &[R]) -> Matrix<R> {
    letters
        .iter()
        .zip(params)
        .fold(Matrix::identity(n), |acc, (&i, t)| acc.mul(&x_gen(n, i, t.clone())))
}

/// Product `x_{−i_1}(z_1)···x_{−i_k}(z_k)`.
pub fn x_minus_product<F: Field>(n: usize, letters: &[usize], params: &[F]) -> Result<Matrix<F>> {
    let mut acc = Matrix::identity(n);
    for (&i, z) in letters.iter().zip(params) {
        acc = acc.mul(&x_minus_gen(n, i, z)?);
    }
    Ok(acc)
}

/// Antidiagonal permutation matrix `P` (no signs).
pub fn antidiagonal<R: Semiring>(n: usize) -> Matrix<R> {
    Matrix::from_fn(n, |r, c| if r + c + 1 == n { R::one() } else { R::zero() })
}

/// The factors of `b = u_1 · d · w̄_0 · u_2` with `u_1, u_2` upper unitriangular.
#[derive(Clone, Debug, PartialEq)]
pub struct BruhatFactors<F> {
    /// Left unipotent factor.
    pub u1: Matrix<F>,
    /// Torus factor (as a diagonal matrix).
    pub d: Matrix<F>,
    /// Right unipotent factor.
    pub u2: Matrix<F>,
}

/// Decomposes `b ∈ B^∨ w̄_0 B^∨` as `u_1 · d · w̄_0 · u_2`.
pub fn bruhat_decompose<F: Field>(b: &Matrix<F>) -> Result<BruhatFactors<F>> {
    let n = b.n();
    let w0: Matrix<F> = w0bar(n);
    let w0_inv = w0.inverse()?;
    let p: Matrix<F> = antidiagonal(n);
    let h = b.mul(&w0_inv);
    let (l, d, u) = p.mul(&h).mul(&p).gauss_ldu()?;
    let u1 = p.mul(&l).mul(&p);
    let dd = p.mul(&d).mul(&p);
    let lower = p.mul(&u).mul(&p);
    let u2 = w0_inv.mul(&lower).mul(&w0);
    Ok(BruhatFactors { u1, d: dd, u2 })
}

// ---------------------------------------------------------------------------
// Planar networks
// ---------------------------------------------------------------------------

/// One factor of a planar-network factorization.
#[derive(Clone, Debug, PartialEq)]
pub enum Factor<R> {
    /// `x_i(w)`: a diagonal edge from level `i` up to level `i+1`.
    X {
        /// Level of the lower end.
        i: usize,
        /// Edge weight.
        w: R,
    },
    /// Torus factor weighting level `i` by `lower` and level `i+1` by `upper`
    /// (for `t_i(1/w)` take `lower = 1/w`, `upper = w`).
    Torus {
        /// Lower level.
        i: usize,
        /// Weight on level `i`.
        lower: R,
        /// Weight on level `i + 1`.
        upper: R,
    },
}

impl<R: Semifield> Factor<Option<R>> {
    /// `t_i(1/w)` over a semifield with adjoined zero.
    pub fn torus_inv(i: usize, w: &R) -> Self {
        Factor::Torus { i, lower: Some(w.recip()), upper: Some(w.clone()) }
    }
}

/// Segment of a planar network.
#[derive(Clone, Debug, PartialEq)]
pub enum Segment<R> {
    /// Diagonal edge from `level` to `level + 1`.
    Edge {
        /// Lower level.
        level: usize,
        /// Weight.
        weight: R,
    },
    /// Horizontal weights on `level` and `level + 1`.
    Scale {
        /// Lower level.
        level: usize,
        /// Weight on `level`.
        lower: R,
        /// Weight on `level + 1`.
        upper: R,
    },
}

/// Acyclic left-to-right planar network with `n` levels numbered bottom to top.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarNetwork<R> {
    n: usize,
    segments: Vec<Segment<R>>,
}

/// Builds the network whose weighted path matrix is the product of the factors.
pub fn network_from_factorization<R: Semiring>(n: usize, factors: &[Factor<R>]) -> Result<PlanarNetwork<R>> {
    let mut segments = Vec::with_capacity(factors.len());
    for f in factors {
        match f {
            Factor::X { i, w } => {
                check_index(n, *i)?;
                segments.push(Segment::Edge { level: *i, weight: w.clone() });
            }
            Factor::Torus { i, lower, upper } => {
                check_index(n, *i)?;
                segments.push(Segment::Scale { level: *i, lower: lower.clone(), upper: upper.clone() });
            }
        }
    }
    Ok(PlanarNetwork { n, segments })
}

impl<R: Semiring> PlanarNetwork<R> {
    /// Number of levels.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Segments left to right.
    pub fn segments(&self) -> &[Segment<R>] {
        &self.segments
    }

    /// Number of diagonal edges.
    pub fn edge_count(&self) -> usize {
        self.segments.iter().filter(|s| matches!(s, Segment::Edge { .. })).count()
    }

    /// Weighted path matrix (the product of the factor matrices).
    pub fn path_matrix(&self) -> Matrix<R> {
        let n = self.n;
        self.segments.iter().fold(Matrix::identity(n), |acc, s| {
            let f = match s {
                Segment::Edge { level, weight } => x_gen(n, *level, weight.clone()),
                Segment::Scale { level, lower, upper } => {
                    let mut m = Matrix::identity(n);
                    *m.at_mut(level - 1, level - 1) = lower.clone();
                    *m.at_mut(*level, *level) = upper.clone();
                    m
                }
            };
            acc.mul(&f)
        })
    }

    /// Weights of all vertex-disjoint path families from the sources `J`,
    /// keyed by the (sorted) sink set they reach.
    pub fn disjoint_families_from(&self, sources: &[usize]) -> BTreeMap<Vec<usize>, R> {
        let mut start = 0u32;
        for &s in sources {
            start |= 1 << (s - 1);
        }
        let mut states: BTreeMap<u32, R> = BTreeMap::new();
        states.insert(start, R::one());
        for seg in &self.segments {
            let mut next: BTreeMap<u32, R> = BTreeMap::new();
            let mut push = |mask: u32, val: R| {
                if val.is_zero() {
                    return;
                }
                match next.get_mut(&mask) {
                    Some(v) => *v = v.add(&val),
                    None => {
                        next.insert(mask, val);
                    }
                }
            };
            for (mask, val) in &states {
                match seg {
                    Segment::Edge { level, weight } => {
                        let lo = 1u32 << (level - 1);
                        let hi = 1u32 << level;
                        push(*mask, val.clone());
                        if mask & lo != 0 && mask & hi == 0 {
                            push((mask & !lo) | hi, val.mul(weight));
                        }
                    }
                    Segment::Scale { level, lower, upper } => {
                        let mut v = val.clone();
                        if mask & (1u32 << (level - 1)) != 0 {
                            v = v.mul(lower);
                        }
                        if mask & (1u32 << level) != 0 {
                            v = v.mul(upper);
                        }
                        push(*mask, v);
                    }
                }
            }
            states = next;
        }
        states
            .into_iter()
            .map(|(mask, v)| ((1..=self.n).filter(|l| mask & (1 << (l - 1)) != 0).collect(), v))
            .collect()
    }

    /// The minor `Δ^J_K` of the path matrix as a sum over vertex-disjoint path families.
    pub fn lgv_minor(&self, sources: &[usize], sinks: &[usize]) -> Result<R> {
        if sources.len() != sinks.len() {
            return Err(MirrorError::Domain("lgv_minor needs |J| = |K|".into()));
        }
        if let Some(bad) = sources.iter().chain(sinks).find(|&&x| x == 0 || x > self.n) {
            return Err(MirrorError::IndexOutOfRange(format!("level {bad} not in 1..{}", self.n)));
        }
        let mut s = sources.to_vec();
        s.sort();
        s.dedup();
        let mut k = sinks.to_vec();
        k.sort();
        k.dedup();
        if s.len() != sources.len() || k.len() != sinks.len() {
            return Err(MirrorError::Domain("repeated index in lgv_minor".into()));
        }
        Ok(self.disjoint_families_from(&s).remove(&k).unwrap_or_else(R::zero))
    }
}

/// Converts a rational matrix into any field containing the rationals.
pub fn embed_rational<F: Field>(m: &Matrix<Rational>) -> Matrix<F> {
    m.map(|q| F::from_rational(q))
}

/// Solves the square system `a·x = b` by Gaussian elimination; `None` when `a` is singular.
pub fn solve_linear<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = b.len();
    let mut rows: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].inv()?;
        for x in rows[col][col..].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = x.sub(&factor.mul(p));
                }
            }
        }
    }
    Some(rows.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn generator_examples() {
        let y: Matrix<Rational> = y_gen(2, 1, int(5));
        assert_eq!(y.rows(), vec![vec![int(1), int(0)], vec![int(5), int(1)]]);
        let t: Matrix<Rational> = t_gen(2, 1, &int(3)).unwrap();
        assert_eq!(t.diag(), vec![int(3), rat(1, 3)]);
        let w: Matrix<Rational> = w0bar(3);
        assert_eq!(
            w.rows(),
            vec![vec![int(0), int(0), int(1)], vec![int(0), int(-1), int(0)], vec![int(1), int(0), int(0)]]
        );
        assert!(chevalley::<Rational>(ChevalleyKind::X, 3, 3, &int(1)).is_err());
    }

    #[test]
    fn ldu_example() {
        let m = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(1)]]).unwrap();
        let (l, d, u) = m.gauss_ldu().unwrap();
        assert_eq!(l.rows(), vec![vec![int(1), int(0)], vec![rat(1, 2), int(1)]]);
        assert_eq!(d.diag(), vec![int(2), rat(1, 2)]);
        assert_eq!(u.rows(), vec![vec![int(1), rat(1, 2)], vec![int(0), int(1)]]);
        let id: Matrix<Rational> = Matrix::identity(3);
        let (l, d, u) = id.gauss_ldu().unwrap();
        assert_eq!((l, d, u), (id.clone(), id.clone(), id));
    }

    #[test]
    fn singular_ldu_is_reported() {
        let m = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(1)]]).unwrap();
        assert!(matches!(m.gauss_ldu(), Err(MirrorError::NonGeneric(_))));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![
            vec![int(2), int(1), int(0)],
            vec![int(1), int(3), int(1)],
            vec![int(0), int(1), int(4)],
        ])
        .unwrap();
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(3));
    }

    #[test]
    fn single_edge_network() {
        let net = network_from_factorization(2, &[Factor::X { i: 1, w: int(7) }]).unwrap();
        assert_eq!(net.edge_count(), 1);
        assert_eq!(net.lgv_minor(&[1], &[2]).unwrap(), int(7));
        assert_eq!(net.lgv_minor(&[1, 2], &[1, 2]).unwrap(), int(1));
        assert_eq!(net.lgv_minor(&[2], &[1]).unwrap(), int(0));
    }
}
