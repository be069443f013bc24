//! Superpotential polytopes.
//!
//! With `d = t^λ` the tropicalized superpotential of a positive Laurent chart is a minimum of
//! affine forms, so `{Trop(W) ≥ 0}` is cut out by one half-space per monomial of `W`. This
//! module builds those H-representations for the `i_0` string and ideal charts and for the
//! Gelfand-Tsetlin vertex chart, enumerates vertices and lattice points exactly, projects
//! points to weights and moves points between reduced words by the tropical braid moves.
//!
//! ```
//! use glmirror::polytopes::{polytope_hrep, PolytopeChart};
//! use glmirror::weyl::DominantWeight;
//! let lam = DominantWeight::from_ints(&[2, 1, -1]).unwrap();
//! let p = polytope_hrep(PolytopeChart::String, &lam).unwrap();
//! assert_eq!(p.inequalities().len(), 6);
//! assert_eq!(p.lattice_points().unwrap().len(), 15);
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::charts::{
    chart_transfer, ideal_superpotential_i0, ideal_weight_formula_i0, string_superpotential, string_transfer,
    string_weight_formula, IdealCoords,
};
use crate::error::{MirrorError, Result};
use crate::exact::{int, render_rational, MinPlus, Rational};
use crate::matrix::solve_linear;
use crate::quiver::{build_quiver, Vertex};
use crate::symbolic::{LaurentMonomial, Var, VarTable};
use crate::weyl::{num_positive_roots, DominantWeight, ReducedWord};

/// Largest ambient dimension accepted by vertex enumeration.
pub const MAX_VERTEX_DIM: usize = 8;

/// Coordinate system of a superpotential polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolytopeChart {
    /// String coordinates `ζ` of the word `i_0`.
    String,
    /// Ideal coordinates `μ` of the word `i_0`.
    Ideal,
    /// Gelfand-Tsetlin vertex coordinates of the quiver dots.
    Gt,
}

impl fmt::Display for PolytopeChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolytopeChart::String => "string",
            PolytopeChart::Ideal => "ideal",
            PolytopeChart::Gt => "gt",
        })
    }
}

impl FromStr for PolytopeChart {
    type Err = MirrorError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "string" | "string_z" => Ok(PolytopeChart::String),
            "ideal" | "ideal_m" => Ok(PolytopeChart::Ideal),
            "gt" | "vertex_gt" => Ok(PolytopeChart::Gt),
            other => Err(MirrorError::Parse(format!("unknown chart '{other}' (expected string, ideal or gt)"))),
        }
    }
}

/// Half-space `coeffs·x + constant ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    /// Linear coefficients in the polytope's variable order.
    pub coeffs: Vec<Rational>,
    /// Constant term.
    pub constant: Rational,
}

impl Inequality {
    /// Value of the affine form at a point.
    pub fn value(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (c, v)| acc + c * v)
    }

    /// JSON form `{"coeffs": [...], "const": "p/q"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self.coeffs.iter().map(render_rational).collect::<Vec<_>>(),
            "const": render_rational(&self.constant),
        })
    }

    fn scaled_integers(&self) -> Result<(Vec<i64>, i64)> {
        let l = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let conv = |q: &Rational| -> Result<i64> {
            (q.numer() * (&l / q.denom()))
                .to_i64()
                .ok_or_else(|| MirrorError::SizeLimit("inequality coefficients exceed i64".into()))
        };
        Ok((self.coeffs.iter().map(conv).collect::<Result<_>>()?, conv(&self.constant)?))
    }
}

/// Polytope `{x : every inequality ≥ 0}` for a weight `λ` in one chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropPolytope {
    chart: PolytopeChart,
    lambda: DominantWeight,
    vars: Vec<Var>,
    inequalities: Vec<Inequality>,
    bounded_cone: bool,
}

type TemplateCache = Mutex<BTreeMap<(PolytopeChart, usize), Arc<Template>>>;

/// `λ`-independent data of a chart: linear parts and `λ`-coefficients of each half-space.
#[derive(Debug)]
struct Template {
    vars: Vec<Var>,
    rows: Vec<(Vec<Rational>, Vec<Rational>)>,
    bounded_cone: bool,
}

fn template(chart: PolytopeChart, n: usize) -> Result<Arc<Template>> {
    static CACHE: OnceLock<TemplateCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(t) = cache.lock().expect("template cache").get(&(chart, n)) {
        return Ok(t.clone());
    }
    let vars = chart_vars(chart, n);
    let terms = match chart {
        PolytopeChart::String => string_superpotential(&ReducedWord::i0(n))?.monomial_terms()?,
        PolytopeChart::Ideal => ideal_superpotential_i0(n)?.monomial_terms()?,
        PolytopeChart::Gt => return Err(MirrorError::Unsupported("the GT polytope has no superpotential template".into())),
    };
    let rows: Vec<(Vec<Rational>, Vec<Rational>)> = terms
        .iter()
        .map(|t| {
            let a = t.tropicalize(None);
            if let Some(v) = a.coeffs.keys().find(|v| !v.is_param() && !vars.contains(v)) {
                return Err(MirrorError::Integrity(format!("monomial uses unexpected variable {v}")));
            }
            let lam: Vec<Rational> = (1..=n).map(|i| a.coeffs.get(&Var::D(i as u16)).cloned().unwrap_or_else(|| int(0))).collect();
            Ok((a.dense(&vars), lam))
        })
        .collect::<Result<_>>()?;
    let probe = TropPolytope {
        chart,
        lambda: DominantWeight::new(vec![int(0); n])?,
        vars: vars.clone(),
        inequalities: rows.iter().map(|(c, _)| Inequality { coeffs: c.clone(), constant: int(0) }).collect(),
        bounded_cone: false,
    };
    let bounded_cone = !probe.is_unbounded()?;
    let t = Arc::new(Template { vars, rows, bounded_cone });
    cache.lock().expect("template cache").insert((chart, n), t.clone());
    Ok(t)
}

/// Half-spaces of `Trop(W) ≥ 0`, one per monomial of a positive Laurent polynomial `W`.
pub fn hrep_from_terms(terms: &[LaurentMonomial], vars: &[Var], lambda: &DominantWeight) -> Result<Vec<Inequality>> {
    terms
        .iter()
        .map(|t| {
            let a = t.tropicalize(Some(lambda.components()));
            if let Some(v) = a.coeffs.keys().find(|v| !v.is_param() && !vars.contains(v)) {
                return Err(MirrorError::Integrity(format!("monomial uses unexpected variable {v}")));
            }
            Ok(Inequality { coeffs: a.dense(vars), constant: a.constant })
        })
        .collect()
}

/// Variables of a chart, in coordinate order.
pub fn chart_vars(chart: PolytopeChart, n: usize) -> Vec<Var> {
    match chart {
        PolytopeChart::String => VarTable::string(n).coords().to_vec(),
        PolytopeChart::Ideal => VarTable::ideal(n).coords().to_vec(),
        PolytopeChart::Gt => gt_dots(n).into_iter().map(|v| Var::X(v.i as u8, v.j as u8)).collect(),
    }
}

fn gt_dots(n: usize) -> Vec<Vertex> {
    let mut v: Vec<Vertex> = (1..=n).flat_map(|i| (1..i).map(move |j| Vertex { i, j })).collect();
    v.sort();
    v
}

/// H-representation of the polytope of `λ` in an `i_0` chart or the vertex chart.
pub fn polytope_hrep(chart: PolytopeChart, lambda: &DominantWeight) -> Result<TropPolytope> {
    let n = lambda.n();
    if n < 2 {
        return Err(MirrorError::Domain("polytopes need n ≥ 2".into()));
    }
    if chart == PolytopeChart::Gt {
        return gt_polytope(lambda);
    }
    if n > 5 {
        return Err(MirrorError::SizeLimit(format!("chart polytopes support n ≤ 5, got {n}")));
    }
    let t = template(chart, n)?;
    let inequalities = t
        .rows
        .iter()
        .map(|(c, l)| Inequality {
            coeffs: c.clone(),
            constant: l.iter().zip(lambda.components()).fold(int(0), |acc, (a, b)| acc + a * b),
        })
        .collect();
    Ok(TropPolytope { chart, lambda: lambda.clone(), vars: t.vars.clone(), inequalities, bounded_cone: t.bounded_cone })
}

/// Gelfand-Tsetlin polytope: `δ_head − δ_tail ≥ 0` on every quiver arrow with the star
/// vertices fixed to `δ_{v_kk} = λ_k`.
pub fn gt_polytope(lambda: &DominantWeight) -> Result<TropPolytope> {
    let n = lambda.n();
    let q = build_quiver(n)?;
    let vars = chart_vars(PolytopeChart::Gt, n);
    let dots = gt_dots(n);
    let affine = |v: Vertex| -> (Vec<Rational>, Rational) {
        let mut c = vec![int(0); dots.len()];
        if v.is_star() {
            (c, lambda.get(v.i).clone())
        } else {
            c[dots.iter().position(|d| *d == v).expect("dot vertex")] = int(1);
            (c, int(0))
        }
    };
    let inequalities = q
        .arrows()
        .iter()
        .map(|a| {
            let (ch, kh) = affine(a.head());
            let (ct, kt) = affine(a.tail());
            Inequality { coeffs: ch.iter().zip(&ct).map(|(x, y)| x - y).collect(), constant: kh - kt }
        })
        .collect();
    Ok(TropPolytope { chart: PolytopeChart::Gt, lambda: lambda.clone(), vars, inequalities, bounded_cone: true })
}

/// Number of integer Gelfand-Tsetlin patterns with top row `λ`, counted row by row.
pub fn gt_pattern_count(lambda: &DominantWeight) -> Result<BigInt> {
    if !lambda.is_integral() {
        return Err(MirrorError::Domain(format!("GT patterns need an integral weight, got {lambda}")));
    }
    let top: Vec<BigInt> = lambda.components().iter().map(|q| q.to_integer()).collect();
    let mut memo: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
    Ok(count_below(&top, &mut memo))
}

fn count_below(row: &[BigInt], memo: &mut BTreeMap<Vec<BigInt>, BigInt>) -> BigInt {
    if row.len() <= 1 {
        return BigInt::one();
    }
    if let Some(c) = memo.get(row) {
        return c.clone();
    }
    let mut total = BigInt::zero();
    let mut next = Vec::with_capacity(row.len() - 1);
    fn rec(row: &[BigInt], next: &mut Vec<BigInt>, total: &mut BigInt, memo: &mut BTreeMap<Vec<BigInt>, BigInt>) {
        let k = next.len();
        if k + 1 == row.len() {
            *total += count_below(next, memo);
            return;
        }
        let mut x = row[k + 1].clone();
        while x <= row[k] {
            next.push(x.clone());
            rec(row, next, total, memo);
            next.pop();
            x += 1;
        }
    }
    rec(row, &mut next, &mut total, memo);
    memo.insert(row.to_vec(), total.clone());
    total
}

impl TropPolytope {
    /// Builds a polytope from explicit data.
    pub fn new(chart: PolytopeChart, lambda: DominantWeight, vars: Vec<Var>, inequalities: Vec<Inequality>) -> Result<Self> {
        if inequalities.iter().any(|h| h.coeffs.len() != vars.len()) {
            return Err(MirrorError::Domain("inequality length differs from the dimension".into()));
        }
        Ok(TropPolytope { chart, lambda, vars, inequalities, bounded_cone: false })
    }

    /// Chart tag.
    pub fn chart(&self) -> PolytopeChart {
        self.chart
    }

    /// Weight `λ`.
    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    /// Coordinate variables.
    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    /// Half-spaces.
    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    /// Distinct half-spaces in sorted order.
    pub fn inequality_set(&self) -> BTreeSet<Inequality> {
        self.inequalities.iter().cloned().collect()
    }

    /// Whether a point satisfies every inequality.
    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim() && self.inequalities.iter().all(|h| h.value(x) >= int(0))
    }

    fn check_dim(&self) -> Result<()> {
        if self.dim() > MAX_VERTEX_DIM {
            return Err(MirrorError::SizeLimit(format!(
                "vertex enumeration supports dimension ≤ {MAX_VERTEX_DIM}, got {}",
                self.dim()
            )));
        }
        Ok(())
    }

    /// Whether some nonzero direction `d` has `coeffs·d ≥ 0` for every inequality.
    pub fn is_unbounded(&self) -> Result<bool> {
        self.check_dim()?;
        let n = self.dim();
        if n == 0 {
            return Ok(false);
        }
        let rows: Vec<&Vec<Rational>> = self.inequalities.iter().map(|h| &h.coeffs).collect();
        let mut found = false;
        for_each_subset(rows.len(), n - 1, &mut |s| {
            for k in 0..n {
                let mut a: Vec<Vec<Rational>> = s.iter().map(|&i| rows[i].clone()).collect();
                let mut e = vec![int(0); n];
                e[k] = int(1);
                a.push(e);
                let mut b = vec![int(0); n];
                b[n - 1] = int(1);
                if let Some(d) = solve_linear(&a, &b) {
                    for sign in [int(1), int(-1)] {
                        let dir: Vec<Rational> = d.iter().map(|x| x * &sign).collect();
                        if rows.iter().all(|r| r.iter().zip(&dir).fold(int(0), |acc, (c, x)| acc + c * x) >= int(0)) {
                            found = true;
                            return false;
                        }
                    }
                    break;
                }
            }
            true
        });
        Ok(found)
    }

    /// Exact vertex set, sorted, via feasible basic solutions.
    pub fn vertices(&self) -> Result<Vec<Vec<Rational>>> {
        self.check_dim()?;
        if !self.bounded_cone && self.is_unbounded()? {
            return Err(MirrorError::Integrity("polytope is unbounded".into()));
        }
        let n = self.dim();
        let mut out: BTreeSet<Vec<Rational>> = BTreeSet::new();
        if n == 0 {
            if self.contains(&[]) {
                out.insert(vec![]);
            }
            return Ok(out.into_iter().collect());
        }
        let ints: Vec<(Vec<i64>, i64)> = self.inequalities.iter().map(|h| h.scaled_integers()).collect::<Result<_>>()?;
        for_each_subset(self.inequalities.len(), n, &mut |s| {
            match bareiss_solve(&ints, s) {
                Some(Some((num, det))) => {
                    let value = |c: &[i64], k: i64| -> Option<i128> {
                        let mut acc = i128::from(k).checked_mul(det)?;
                        for (a, x) in c.iter().zip(&num) {
                            acc = acc.checked_add(i128::from(*a).checked_mul(*x)?)?;
                        }
                        Some(acc)
                    };
                    let feasible =
                        ints.iter().all(|(c, k)| value(c, *k).is_none_or(|v| v.signum() * det.signum() >= 0));
                    if feasible {
                        let x: Vec<Rational> =
                            num.iter().map(|v| Rational::new(BigInt::from(*v), BigInt::from(det))).collect();
                        if self.contains(&x) {
                            out.insert(x);
                        }
                    }
                }
                Some(None) => {}
                None => {
                    let a: Vec<Vec<Rational>> = s.iter().map(|&i| self.inequalities[i].coeffs.clone()).collect();
                    let b: Vec<Rational> = s.iter().map(|&i| -&self.inequalities[i].constant).collect();
                    if let Some(x) = solve_linear(&a, &b) {
                        if self.contains(&x) {
                            out.insert(x);
                        }
                    }
                }
            }
            true
        });
        Ok(out.into_iter().collect())
    }

    /// All integer points, in lexicographic order.
    pub fn lattice_points(&self) -> Result<Vec<Vec<i64>>> {
        let verts = self.vertices()?;
        if verts.is_empty() {
            return Ok(Vec::new());
        }
        let n = self.dim();
        let to_i64 = |b: BigInt| b.to_i64().ok_or_else(|| MirrorError::SizeLimit("coordinate exceeds i64".into()));
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for k in 0..n {
            let min = verts.iter().map(|v| &v[k]).min().expect("nonempty");
            let max = verts.iter().map(|v| &v[k]).max().expect("nonempty");
            lo.push(to_i64(min.ceil().to_integer())?);
            hi.push(to_i64(max.floor().to_integer())?);
        }
        let ints: Vec<(Vec<i64>, i64)> = self.inequalities.iter().map(|h| h.scaled_integers()).collect::<Result<_>>()?;
        // suffix[h][k]: largest possible contribution of coordinates k.. to inequality h.
        let suffix: Vec<Vec<i64>> = ints
            .iter()
            .map(|(c, _)| {
                let mut s = vec![0i64; n + 1];
                for k in (0..n).rev() {
                    s[k] = s[k + 1] + (c[k] * lo[k]).max(c[k] * hi[k]);
                }
                s
            })
            .collect();
        let mut out = Vec::new();
        let mut x = vec![0i64; n];
        let mut partial: Vec<i64> = ints.iter().map(|(_, k)| *k).collect();
        scan(0, &lo, &hi, &ints, &suffix, &mut x, &mut partial, &mut out);
        Ok(out)
    }

    /// Number of integer points.
    pub fn lattice_count(&self) -> Result<usize> {
        Ok(self.lattice_points()?.len())
    }

    /// JSON form with inequalities and, when requested, vertices and the lattice count.
    pub fn to_json(&self, vertices: bool, lattice: bool) -> Result<serde_json::Value> {
        let mut obj = serde_json::Map::new();
        obj.insert("chart".into(), self.chart.to_string().into());
        obj.insert(
            "lambda".into(),
            self.lambda.components().iter().map(render_rational).collect::<Vec<_>>().into(),
        );
        obj.insert("variables".into(), self.vars.iter().map(|v| v.to_string()).collect::<Vec<_>>().into());
        obj.insert("inequalities".into(), self.inequalities.iter().map(Inequality::to_json).collect::<Vec<_>>().into());
        if vertices {
            let v: Vec<serde_json::Value> = self
                .vertices()?
                .iter()
                .map(|p| p.iter().map(render_rational).collect::<Vec<_>>().into())
                .collect();
            obj.insert("vertices".into(), v.into());
        }
        if lattice {
            obj.insert("lattice_count".into(), self.lattice_count()?.into());
        }
        Ok(serde_json::Value::Object(obj))
    }
}

/// Solves the tight system of the rows in `s` by fraction-free elimination.
/// `Some(Some((x·det, det)))` on success, `Some(None)` when singular, `None` on overflow.
fn bareiss_solve(ints: &[(Vec<i64>, i64)], s: &[usize]) -> Option<Option<(Vec<i128>, i128)>> {
    let n = s.len();
    let mut m: Vec<Vec<i128>> = s
        .iter()
        .map(|&i| {
            let (c, k) = &ints[i];
            c.iter().map(|&x| i128::from(x)).chain(std::iter::once(-i128::from(*k))).collect()
        })
        .collect();
    let mut prev: i128 = 1;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| m[r][col] != 0) else { return Some(None) };
        m.swap(p, col);
        for r in col + 1..n {
            for c in col + 1..=n {
                let v = m[r][c].checked_mul(m[col][col])?.checked_sub(m[r][col].checked_mul(m[col][c])?)?;
                m[r][c] = v / prev;
            }
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    let det = m[n - 1][n - 1];
    // Back substitution with numerators over the common denominator `det`.
    let mut x = vec![0i128; n];
    for r in (0..n).rev() {
        let mut acc = m[r][n].checked_mul(det)?;
        for c in r + 1..n {
            acc = acc.checked_sub(m[r][c].checked_mul(x[c])?)?;
        }
        if acc % m[r][r] != 0 {
            return None;
        }
        x[r] = acc / m[r][r];
    }
    Some(Some((x, det)))
}

#[allow(clippy::too_many_arguments)]
fn scan(
    k: usize,
    lo: &[i64],
    hi: &[i64],
    ints: &[(Vec<i64>, i64)],
    suffix: &[Vec<i64>],
    x: &mut Vec<i64>,
    partial: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if partial.iter().zip(suffix).any(|(p, s)| p + s[k] < 0) {
        return;
    }
    if k == x.len() {
        out.push(x.clone());
        return;
    }
    for v in lo[k]..=hi[k] {
        x[k] = v;
        for (p, (c, _)) in partial.iter_mut().zip(ints) {
            *p += c[k] * v;
        }
        scan(k + 1, lo, hi, ints, suffix, x, partial, out);
        for (p, (c, _)) in partial.iter_mut().zip(ints) {
            *p -= c[k] * v;
        }
    }
}

/// Calls `f` on every `k`-subset of `0..m` in lexicographic order until it returns `false`.
fn for_each_subset(m: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            let go = rec(i + 1, m, k, cur, f);
            cur.pop();
            if !go {
                return false;
            }
        }
        true
    }
    rec(0, m, k, &mut Vec::with_capacity(k), f);
}

fn minplus(v: &[Rational]) -> Vec<MinPlus> {
    v.iter().cloned().map(MinPlus).collect()
}

/// Valuation of the weight matrix diagonal at a point of a chart, with `d = t^λ`.
pub fn trop_weight_projection(point: &[Rational], chart: PolytopeChart, lambda: &DominantWeight) -> Result<Vec<Rational>> {
    let n = lambda.n();
    let d = minplus(lambda.components());
    let out = match chart {
        PolytopeChart::String => string_weight_formula(&ReducedWord::i0(n), &d, &minplus(point))?,
        PolytopeChart::Ideal => ideal_weight_formula_i0(&d, &minplus(point))?,
        PolytopeChart::Gt => return gt_weight(point, lambda),
    };
    Ok(out.into_iter().map(|x| x.0).collect())
}

/// Weight of a GT point: entry `k` is `Σ_{D_k} δ − Σ_{D_{k+1}} δ` over the diagonals
/// `D_k = {v_{k,1}, v_{k+1,2}, …}`.
fn gt_weight(point: &[Rational], lambda: &DominantWeight) -> Result<Vec<Rational>> {
    let n = lambda.n();
    let dots = gt_dots(n);
    if point.len() != dots.len() {
        return Err(MirrorError::Domain("GT point has the wrong dimension".into()));
    }
    let value = |v: Vertex| -> Rational {
        if v.is_star() {
            lambda.get(v.i).clone()
        } else {
            point[dots.iter().position(|d| *d == v).expect("dot vertex")].clone()
        }
    };
    let diag = |k: usize| -> Rational { (0..=n - k).map(|t| value(Vertex { i: k + t, j: 1 + t })).sum() };
    Ok((1..=n).map(|k| if k < n { diag(k) - diag(k + 1) } else { diag(k) }).collect())
}

/// Ideal-coordinate point moved from one word to another by the tropical braid moves.
/// Coordinates are positional along each word's root sequence.
pub fn pl_transfer(point: &[Rational], from: &ReducedWord, to: &ReducedWord) -> Result<Vec<Rational>> {
    if from.n() != to.n() {
        return Err(MirrorError::Domain("words have different n".into()));
    }
    let c = IdealCoords::from_positional(from.clone(), &minplus(point))?;
    Ok(chart_transfer(&c, to)?.positional().into_iter().map(|x| x.0).collect())
}

/// String-coordinate point moved from one word to another by the tropical braid moves.
pub fn string_pl_transfer(point: &[Rational], from: &ReducedWord, to: &ReducedWord) -> Result<Vec<Rational>> {
    if from.n() != to.n() {
        return Err(MirrorError::Domain("words have different n".into()));
    }
    Ok(string_transfer(from, &minplus(point), to)?.into_iter().map(|x| x.0).collect())
}

/// Membership of a point in the polytope of an arbitrary word, tested by pulling back to `i_0`.
pub fn contains_for_word(chart: PolytopeChart, word: &ReducedWord, lambda: &DominantWeight, point: &[Rational]) -> Result<bool> {
    let n = lambda.n();
    let i0 = ReducedWord::i0(n);
    let pulled = match chart {
        PolytopeChart::Ideal => pl_transfer(point, word, &i0)?,
        PolytopeChart::String => string_pl_transfer(point, word, &i0)?,
        PolytopeChart::Gt => return Err(MirrorError::Unsupported("the GT chart has no word".into())),
    };
    Ok(polytope_hrep(chart, lambda)?.contains(&pulled))
}

/// Lattice points of the polytope of an arbitrary word, pushed forward from `i_0`, sorted.
pub fn lattice_points_for_word(chart: PolytopeChart, word: &ReducedWord, lambda: &DominantWeight) -> Result<Vec<Vec<Rational>>> {
    let n = lambda.n();
    let i0 = ReducedWord::i0(n);
    let base = polytope_hrep(chart, lambda)?.lattice_points()?;
    let mut out: Vec<Vec<Rational>> = base
        .into_iter()
        .map(|p| {
            let q: Vec<Rational> = p.into_iter().map(int).collect();
            match chart {
                PolytopeChart::Ideal => pl_transfer(&q, &i0, word),
                PolytopeChart::String => string_pl_transfer(&q, &i0, word),
                PolytopeChart::Gt => Err(MirrorError::Unsupported("the GT chart has no word".into())),
            }
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// Tropicalization of a monomial coordinate change: the linear map on valuations.
pub fn tropical_monomial_map(images: &[LaurentMonomial], source: &[Var], point: &[Rational]) -> Result<Vec<Rational>> {
    if source.len() != point.len() {
        return Err(MirrorError::Domain("point and variable list differ in length".into()));
    }
    images
        .iter()
        .map(|m| {
            let a = m.tropicalize(None);
            a.evaluate(&|v| source.iter().position(|s| *s == v).map(|i| point[i].clone()))
        })
        .collect()
}

/// Number of coordinates of a chart.
pub fn chart_dim(n: usize) -> usize {
    num_positive_roots(n)
}

/// Whether every point is integral.
pub fn is_integral_point(p: &[Rational]) -> bool {
    p.iter().all(|q| q.is_integer())
}

/// Absolute value of the determinant of the linear part of a monomial map (exponent matrix).
pub fn exponent_determinant(images: &[LaurentMonomial], source: &[Var]) -> Result<Rational> {
    let n = source.len();
    if images.len() != n {
        return Err(MirrorError::Domain("monomial map is not square".into()));
    }
    let mut a: Vec<Vec<Rational>> = images
        .iter()
        .map(|m| source.iter().map(|v| int(m.monomial().exponent(*v) as i64)).collect())
        .collect();
    let mut det = int(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else { return Ok(int(0)) };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det *= &piv;
        let pivot_row = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            let f = &row[col] / &piv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * p;
            }
        }
    }
    Ok(det.abs())
}
