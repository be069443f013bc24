//! The Givental quiver and its decorations.
//!
//! Vertices `v_ij` with `1 ≤ j ≤ i ≤ n` sit in lower triangular form; the
//! diagonal vertices `v_ii` are stars and the rest are dots. The vertical
//! arrow `a_ij` runs from `v_{i+1,j}` up to `v_ij` and the horizontal arrow
//! `b_ij` runs from `v_ij` left to `v_{i,j−1}`. A decoration assigns a
//! Laurent monomial `r_a` to every arrow such that `r_a = x_{h(a)}/x_{t(a)}`
//! for some vertex values `x` with `x_{v_ii} = d_i`.
//!
//! ```
//! use glmirror::quiver::{build_quiver, decorate, QuiverChart};
//! let q = build_quiver(4).unwrap();
//! assert_eq!(q.arrows().len(), 12);
//! let dec = decorate(3, QuiverChart::Ideal).unwrap();
//! assert!(dec.box_relations_hold());
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::charts::p_from_z_closed_form;
use crate::error::{MirrorError, Result};
use crate::exact::{MinPlus, Rational, Semifield};
use crate::symbolic::{LaurentMonomial, SubFreeExpr, Var};
use crate::weyl::{num_positive_roots, s_offset};

/// A vertex `v_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    /// Row (1 = top).
    pub i: usize,
    /// Column (1 = left).
    pub j: usize,
}

impl Vertex {
    /// Whether the vertex is a star (`i = j`).
    pub fn is_star(&self) -> bool {
        self.i == self.j
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}{}", self.i, self.j)
    }
}

/// An arrow of the quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Arrow {
    /// Vertical arrow `a_ij: v_{i+1,j} → v_ij`.
    A(usize, usize),
    /// Horizontal arrow `b_ij: v_ij → v_{i,j−1}`.
    B(usize, usize),
}

impl Arrow {
    /// Head vertex.
    pub fn head(&self) -> Vertex {
        match *self {
            Arrow::A(i, j) => Vertex { i, j },
            Arrow::B(i, j) => Vertex { i, j: j - 1 },
        }
    }

    /// Tail vertex.
    pub fn tail(&self) -> Vertex {
        match *self {
            Arrow::A(i, j) => Vertex { i: i + 1, j },
            Arrow::B(i, j) => Vertex { i, j },
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arrow::A(i, j) => write!(f, "a{i}{j}"),
            Arrow::B(i, j) => write!(f, "b{i}{j}"),
        }
    }
}

/// Incidence structure of the quiver for `GL_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    n: usize,
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Rank parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices, row by row.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Dot vertices.
    pub fn dots(&self) -> Vec<Vertex> {
        self.vertices.iter().copied().filter(|v| !v.is_star()).collect()
    }

    /// All arrows (verticals first).
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Arrows with the given head.
    pub fn incoming(&self, v: Vertex) -> Vec<Arrow> {
        self.arrows.iter().copied().filter(|a| a.head() == v).collect()
    }

    /// Arrows with the given tail.
    pub fn outgoing(&self, v: Vertex) -> Vec<Arrow> {
        self.arrows.iter().copied().filter(|a| a.tail() == v).collect()
    }

    /// Boxes as `(a_{i,c}, b_{i,c}, b_{i+1,c}, a_{i,c−1})` with `r_{a_ic} r_{b_ic} = r_{b_{i+1,c}} r_{a_{i,c−1}}`.
    pub fn boxes(&self) -> Vec<[Arrow; 4]> {
        let mut out = Vec::new();
        for i in 1..self.n {
            for c in 2..=i {
                out.push([Arrow::A(i, c), Arrow::B(i, c), Arrow::B(i + 1, c), Arrow::A(i, c - 1)]);
            }
        }
        out
    }
}

/// Builds the quiver for `n ≥ 2`.
pub fn build_quiver(n: usize) -> Result<Quiver> {
    if n < 2 {
        return Err(MirrorError::Domain(format!("quiver requires n ≥ 2, got {n}")));
    }
    let mut vertices = Vec::new();
    for i in 1..=n {
        for j in 1..=i {
            vertices.push(Vertex { i, j });
        }
    }
    let mut arrows = Vec::new();
    for i in 1..n {
        for j in 1..=i {
            arrows.push(Arrow::A(i, j));
        }
    }
    for i in 2..=n {
        for j in 2..=i {
            arrows.push(Arrow::B(i, j));
        }
    }
    Ok(Quiver { n, vertices, arrows })
}

/// Coordinate system used to decorate the quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuiverChart {
    /// String coordinates `z` of `i_0`.
    String,
    /// Ideal coordinates `m` of `i_0`.
    Ideal,
}

/// A quiver with Laurent monomial arrow labels and star values `d_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decoration {
    quiver: Quiver,
    chart: QuiverChart,
    arrows: BTreeMap<Arrow, LaurentMonomial>,
}

fn d_mono(i: usize) -> LaurentMonomial {
    LaurentMonomial::var(Var::D(i as u16))
}

fn m_mono(k: usize) -> LaurentMonomial {
    LaurentMonomial::var(Var::M(k as u16))
}

/// Ideal-chart vertical label
/// `r_{a_ij} = Π_{r=0}^{j−1} m_{s_{j−r}+i−j+1+r} / Π_{r=0}^{j−2} m_{s_{j−1−r}+i−j+1+r}`.
fn ideal_vertical(n: usize, i: usize, j: usize) -> LaurentMonomial {
    let mut v = LaurentMonomial::one();
    for r in 0..j {
        v = v.mul(&m_mono(s_offset(n, j - r) + i - j + 1 + r));
    }
    for r in 0..j.saturating_sub(1) {
        v = v.div(&m_mono(s_offset(n, j - 1 - r) + i - j + 1 + r));
    }
    v
}

/// Decorates the quiver in the `i_0` string or ideal chart.
///
/// Verticals come from the chart; horizontals from the star relation
/// `r_{b_cc} = (d_{c−1}/d_c)/r_{a_{c−1,c−1}}` and the box relations.
pub fn decorate(n: usize, chart: QuiverChart) -> Result<Decoration> {
    let quiver = build_quiver(n)?;
    let mut arrows = BTreeMap::new();
    let p = p_from_z_closed_form(n);
    for i in 1..n {
        for j in 1..=i {
            let v = match chart {
                QuiverChart::Ideal => ideal_vertical(n, i, j),
                QuiverChart::String => p[s_offset(n, j) + n - i - 1].clone(),
            };
            arrows.insert(Arrow::A(i, j), v);
        }
    }
    for c in 2..=n {
        let star = d_mono(c - 1).div(&d_mono(c)).div(&arrows[&Arrow::A(c - 1, c - 1)]);
        arrows.insert(Arrow::B(c, c), star);
        for i in c..n {
            let v = arrows[&Arrow::A(i, c)].mul(&arrows[&Arrow::B(i, c)]).div(&arrows[&Arrow::A(i, c - 1)]);
            arrows.insert(Arrow::B(i + 1, c), v);
        }
    }
    Ok(Decoration { quiver, chart, arrows })
}

impl Decoration {
    /// The underlying quiver.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// The chart.
    pub fn chart(&self) -> QuiverChart {
        self.chart
    }

    /// Label of an arrow.
    pub fn label(&self, a: Arrow) -> &LaurentMonomial {
        &self.arrows[&a]
    }

    /// All labels.
    pub fn labels(&self) -> &BTreeMap<Arrow, LaurentMonomial> {
        &self.arrows
    }

    /// Whether every box relation holds as a monomial identity.
    pub fn box_relations_hold(&self) -> bool {
        self.quiver.boxes().iter().all(|[a1, a2, a3, a4]| {
            self.arrows[a1].mul(&self.arrows[a2]) == self.arrows[a3].mul(&self.arrows[a4])
        })
    }

    /// Whether every star relation `r_{b_{c,c}} · r_{a_{c−1,c−1}} = d_{c−1}/d_c` holds.
    pub fn star_relations_hold(&self) -> bool {
        (2..=self.quiver.n).all(|c| {
            self.arrows[&Arrow::B(c, c)].mul(&self.arrows[&Arrow::A(c - 1, c - 1)]) == d_mono(c - 1).div(&d_mono(c))
        })
    }

    /// Superpotential `F = Σ_a r_a`.
    pub fn superpotential(&self) -> SubFreeExpr {
        SubFreeExpr::sum_of(self.arrows.values().cloned().map(SubFreeExpr::mono).collect())
            .expect("a quiver has arrows")
    }

    /// Vertex values: `x_{v_nn} = d_n`, the bottom row via `b`, then upwards via `a`.
    ///
    /// Fails with an integrity error if some arrow is not `x_{h(a)}/x_{t(a)}`.
    pub fn vertex_values(&self) -> Result<BTreeMap<Vertex, LaurentMonomial>> {
        let n = self.quiver.n;
        let mut x = BTreeMap::new();
        x.insert(Vertex { i: n, j: n }, d_mono(n));
        for c in (2..=n).rev() {
            let v = x[&Vertex { i: n, j: c }].mul(&self.arrows[&Arrow::B(n, c)]);
            x.insert(Vertex { i: n, j: c - 1 }, v);
        }
        for i in (1..n).rev() {
            for j in 1..=i {
                let v = x[&Vertex { i: i + 1, j }].mul(&self.arrows[&Arrow::A(i, j)]);
                x.insert(Vertex { i, j }, v);
            }
        }
        for a in self.quiver.arrows() {
            if x[&a.head()].div(&x[&a.tail()]) != self.arrows[a] {
                return Err(MirrorError::Integrity(format!("arrow {a} is inconsistent with the vertex values")));
            }
        }
        Ok(x)
    }

    /// Torus maps: `κ = (x_{v_ii})` and `γ = (Ξ_i/Ξ_{i+1})` with `Ξ_i = Π_{v ∈ D_i} x_v`,
    /// `D_i = {v_{i,1}, v_{i+1,2}, …}`.
    pub fn torus_maps(&self) -> Result<(Vec<LaurentMonomial>, Vec<LaurentMonomial>)> {
        let n = self.quiver.n;
        let x = self.vertex_values()?;
        let kappa = (1..=n).map(|i| x[&Vertex { i, j: i }].clone()).collect();
        let xi = |i: usize| -> LaurentMonomial {
            (0..=n - i).fold(LaurentMonomial::one(), |acc, r| acc.mul(&x[&Vertex { i: i + r, j: 1 + r }]))
        };
        let gamma = (1..=n)
            .map(|i| if i == n { xi(n) } else { xi(i).div(&xi(i + 1)) })
            .collect();
        Ok((kappa, gamma))
    }

    /// Critical-point equations: for each dot vertex, incoming and outgoing labels.
    pub fn critical_conditions(&self) -> Vec<CriticalCondition> {
        self.quiver
            .dots()
            .into_iter()
            .map(|v| CriticalCondition {
                vertex: v,
                incoming: self.quiver.incoming(v).into_iter().map(|a| (a, self.arrows[&a].clone())).collect(),
                outgoing: self.quiver.outgoing(v).into_iter().map(|a| (a, self.arrows[&a].clone())).collect(),
            })
            .collect()
    }

    /// Evaluates every arrow label over a semifield.
    pub fn evaluate<T: Semifield>(&self, assign: &dyn Fn(Var) -> Option<T>) -> Result<BTreeMap<Arrow, T>> {
        self.arrows.iter().map(|(a, m)| Ok((*a, m.evaluate(assign)?))).collect()
    }

    /// JSON graph dump.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.quiver.n,
            "nodes": self.quiver.vertices.iter().map(|v| serde_json::json!({
                "id": v.to_string(), "i": v.i, "j": v.j, "star": v.is_star(),
            })).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|(a, m)| serde_json::json!({
                "id": a.to_string(), "tail": a.tail().to_string(), "head": a.head().to_string(), "label": m.render(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Balance equation `Σ_{h(a)=v} r_a = Σ_{t(a)=v} r_a` at a dot vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalCondition {
    /// The dot vertex.
    pub vertex: Vertex,
    /// Incoming arrows with labels.
    pub incoming: Vec<(Arrow, LaurentMonomial)>,
    /// Outgoing arrows with labels.
    pub outgoing: Vec<(Arrow, LaurentMonomial)>,
}

impl CriticalCondition {
    /// Whether the condition holds at the given arrow values.
    pub fn holds<T: Semifield>(&self, values: &BTreeMap<Arrow, T>) -> bool {
        sum_over(&self.incoming, values) == sum_over(&self.outgoing, values)
    }
}

fn sum_over<T: Semifield>(arrows: &[(Arrow, LaurentMonomial)], values: &BTreeMap<Arrow, T>) -> Option<T> {
    arrows.iter().map(|(a, _)| values[a].clone()).reduce(|x, y| x.add(&y))
}

/// Position `s_k + i − k` of the ideal coordinate matched to the dot vertex `v_ik`.
pub fn outgoing_index(n: usize, v: Vertex) -> usize {
    s_offset(n, v.j) + v.i - v.j
}

/// Outcome of [`outgoing_sum_check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum OutgoingSumReport {
    /// The critical conditions fail at some vertex, so the identity was not tested.
    PreconditionFailed {
        /// Offending vertex.
        vertex: Vertex,
    },
    /// Result per dot vertex: `(vertex, holds)`.
    Checked(Vec<(Vertex, bool)>),
}

impl OutgoingSumReport {
    /// Whether the identity was tested and holds everywhere.
    pub fn passed(&self) -> bool {
        matches!(self, OutgoingSumReport::Checked(v) if v.iter().all(|(_, ok)| *ok))
    }
}

/// Checks `Σ_{t(a)=v_ik} r_a = m_{s_k+i−k}` at every dot vertex, given a point of the ideal chart
/// that satisfies the critical conditions.
pub fn outgoing_sum_check<T: Semifield>(dec: &Decoration, assign: &dyn Fn(Var) -> Option<T>) -> Result<OutgoingSumReport> {
    if dec.chart() != QuiverChart::Ideal {
        return Err(MirrorError::Unsupported("outgoing sums are stated in ideal coordinates".into()));
    }
    let values = dec.evaluate(assign)?;
    let n = dec.quiver().n();
    let mut out = Vec::new();
    for cond in dec.critical_conditions() {
        if !cond.holds(&values) {
            return Ok(OutgoingSumReport::PreconditionFailed { vertex: cond.vertex });
        }
        let m = m_mono(outgoing_index(n, cond.vertex)).evaluate(assign)?;
        out.push((cond.vertex, sum_over(&cond.outgoing, &values) == Some(m)));
    }
    Ok(OutgoingSumReport::Checked(out))
}

/// Tropical outgoing-sum identity: at a tropical point `μ` (with `d ↦ λ`) the minimum of the
/// outgoing valuations at `v_ik` equals `μ_{s_k+i−k}`. Returns one flag per dot vertex.
pub fn tropical_outgoing_sum_check(n: usize, lambda: &[Rational], mu: &[Rational]) -> Result<Vec<(Vertex, bool)>> {
    if lambda.len() != n || mu.len() != num_positive_roots(n) {
        return Err(MirrorError::Domain("tropical point has the wrong dimension".into()));
    }
    let dec = decorate(n, QuiverChart::Ideal)?;
    let assign = |v: Var| -> Option<MinPlus> {
        match v {
            Var::M(k) => mu.get(k as usize - 1).cloned().map(MinPlus),
            Var::D(i) => lambda.get(i as usize - 1).cloned().map(MinPlus),
            _ => None,
        }
    };
    let values = dec.evaluate(&assign)?;
    Ok(dec
        .critical_conditions()
        .into_iter()
        .map(|c| {
            let s = sum_over(&c.outgoing, &values).map(|x| x.0);
            (c.vertex, s.as_ref() == Some(&mu[outgoing_index(n, c.vertex) - 1]))
        })
        .collect())
}

/// Tropical critical conditions: at each dot vertex the minimum incoming valuation equals the
/// minimum outgoing valuation.
pub fn tropical_critical_conditions_hold(n: usize, lambda: &[Rational], mu: &[Rational]) -> Result<bool> {
    let dec = decorate(n, QuiverChart::Ideal)?;
    let assign = |v: Var| -> Option<MinPlus> {
        match v {
            Var::M(k) => mu.get(k as usize - 1).cloned().map(MinPlus),
            Var::D(i) => lambda.get(i as usize - 1).cloned().map(MinPlus),
            _ => None,
        }
    };
    let values = dec.evaluate(&assign)?;
    Ok(dec.critical_conditions().iter().all(|c| c.holds(&values)))
}

/// Monomial `r_{b_{n,j+1}} / (d_j/d_{j+1})`, a ratio of ideal coordinates.
pub fn bottom_wall_ratio(dec: &Decoration, j: usize) -> LaurentMonomial {
    let n = dec.quiver().n();
    dec.label(Arrow::B(n, j + 1)).div(&d_mono(j).div(&d_mono(j + 1)))
}

/// At a critical point, `d_j/d_{j+1} = m_{s_j+n−j} / (r_{b_{n,j+1}}/(d_j/d_{j+1}))`.
/// Returns the right-hand sides for `j = 1..n−1` evaluated at a point.
pub fn simple_coroots_from_m<T: Semifield>(dec: &Decoration, assign: &dyn Fn(Var) -> Option<T>) -> Result<Vec<T>> {
    let n = dec.quiver().n();
    (1..n)
        .map(|j| {
            let m = m_mono(s_offset(n, j) + n - j).evaluate(assign)?;
            Ok(m.div(&bottom_wall_ratio(dec, j).evaluate(assign)?))
        })
        .collect()
}

/// A point of the `n = 3` ideal chart on the critical locus.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPointN3<T> {
    /// Ideal coordinates `(m_1, m_2, m_3)`.
    pub m: [T; 3],
    /// Highest-weight parameters `(d_1, d_2, d_3)`.
    pub d: [T; 3],
}

impl<T: Semifield> CriticalPointN3<T> {
    /// Assignment closure for evaluation.
    pub fn assign(&self) -> impl Fn(Var) -> Option<T> + '_ {
        move |v| match v {
            Var::M(k) if (1..=3).contains(&k) => Some(self.m[k as usize - 1].clone()),
            Var::D(k) if (1..=3).contains(&k) => Some(self.d[k as usize - 1].clone()),
            _ => None,
        }
    }
}

/// The `n = 3` critical family parametrized by `m_2`, `x` and `d_3`, solved subtraction-free:
/// `m_1 = m_2 + x`, `d_1/d_2 = x·m_1`, `m_3 = m_2 m_1²/(d_1/d_2)`,
/// `d_2/d_3 = (m_2m_3/m_1 + (d_1/d_2) m_3/m_1²)·m_2m_3/m_1`.
pub fn critical_family_n3<T: Semifield>(m2: &T, x: &T, d3: &T) -> CriticalPointN3<T> {
    let m1 = m2.add(x);
    let q1 = x.mul(&m1);
    let m3 = m2.mul(&m1).mul(&m1).div(&q1);
    let a22 = m2.mul(&m3).div(&m1);
    let b32 = q1.mul(&m3).div(&m1.mul(&m1));
    let q2 = a22.add(&b32).mul(&a22);
    let d2 = q2.mul(d3);
    let d1 = q1.mul(&d2);
    CriticalPointN3 { m: [m1, m2.clone(), m3], d: [d1, d2, d3.clone()] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_quivers() {
        let q = build_quiver(2).unwrap();
        assert_eq!(q.vertices().len(), 3);
        assert_eq!(q.arrows(), &[Arrow::A(1, 1), Arrow::B(2, 2)]);
        let q3 = build_quiver(3).unwrap();
        assert_eq!(q3.vertices().len(), 6);
        assert_eq!(q3.arrows().len(), 6);
        assert_eq!(build_quiver(4).unwrap().dots().len(), 6);
    }

    #[test]
    fn n4_ideal_vertical_at_v42() {
        let dec = decorate(4, QuiverChart::Ideal).unwrap();
        let expect = m_mono(3).mul(&m_mono(5)).div(&m_mono(2));
        assert_eq!(dec.label(Arrow::A(3, 2)), &expect);
    }
}
