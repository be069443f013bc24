//! Symbolic engine.
//!
//! * [`Var`]: named variables (coordinates `z_k`, `m_k`, `p_k`, root-indexed
//!   `m'_α`, parameters `d_i`).
//! * [`Monomial`] / [`LaurentMonomial`]: Laurent monomials with integer exponents.
//! * [`LaurentPoly`]: Laurent polynomials with signed rational coefficients,
//!   including exact division.
//! * [`RatFn`]: quotients of Laurent polynomials, a field used for generic
//!   linear algebra (inverse, LDU) on symbolic matrices.
//! * [`SubFreeExpr`]: subtraction-free expression trees (sums, products,
//!   quotients of positive monomials) that evaluate over any [`Semifield`].
//! * [`PLForm`]: piecewise-linear forms produced by tropicalization.
//!
//! ```
//! use glmirror::symbolic::{SubFreeExpr, Var};
//! use glmirror::exact::{int, rat, Rational, Semifield};
//! let e = SubFreeExpr::var(Var::Z(1)).add(&SubFreeExpr::var(Var::Z(2)).div(&SubFreeExpr::var(Var::Z(3))));
//! let vals = [int(1), int(2), int(4)];
//! let v: Rational = e.evaluate(&|v| match v { Var::Z(k) => Some(vals[k as usize - 1].clone()), _ => None }).unwrap();
//! assert_eq!(v, rat(3, 2));
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::error::{MirrorError, Result};
use crate::exact::{int, Field, MinPlus, Rational, Ring, Semifield, Semiring};
use crate::weyl::Root;

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

/// A symbolic variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// String coordinate `z_k`.
    Z(u16),
    /// Ideal coordinate `m_k` (positional, word `i_0`).
    M(u16),
    /// Intermediate coordinate `p_k`.
    P(u16),
    /// Root-indexed ideal coordinate `m'_{α_ij}`.
    R(u8, u8),
    /// Gelfand-Tsetlin vertex coordinate `x_{v_ij}`.
    X(u8, u8),
    /// Highest-weight parameter `d_i`.
    D(u16),
}

impl Var {
    /// Root-indexed coordinate for `α`.
    pub fn root(r: Root) -> Self {
        Var::R(r.i as u8, r.j as u8)
    }

    /// Whether the variable is a highest-weight parameter.
    pub fn is_param(&self) -> bool {
        matches!(self, Var::D(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z(k) => write!(f, "z{k}"),
            Var::M(k) => write!(f, "m{k}"),
            Var::P(k) => write!(f, "p{k}"),
            Var::R(i, j) => write!(f, "m'{i}{j}"),
            Var::X(i, j) => write!(f, "x{i}{j}"),
            Var::D(k) => write!(f, "d{k}"),
        }
    }
}

/// Ordered coordinate and parameter variables of a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    coords: Vec<Var>,
    params: Vec<Var>,
}

impl VarTable {
    /// Builds a table; names must be unique and the two blocks disjoint.
    pub fn new(coords: Vec<Var>, params: Vec<Var>) -> Result<Self> {
        let mut all: Vec<Var> = coords.iter().chain(params.iter()).copied().collect();
        all.sort();
        let len = all.len();
        all.dedup();
        if all.len() != len {
            return Err(MirrorError::Integrity("duplicate variable in VarTable".into()));
        }
        Ok(VarTable { coords, params })
    }

    /// Coordinates `z_1..z_N` and parameters `d_1..d_n`.
    pub fn string(n: usize) -> Self {
        let nn = n * (n - 1) / 2;
        VarTable {
            coords: (1..=nn).map(|k| Var::Z(k as u16)).collect(),
            params: (1..=n).map(|k| Var::D(k as u16)).collect(),
        }
    }

    /// Coordinates `m_1..m_N` and parameters `d_1..d_n`.
    pub fn ideal(n: usize) -> Self {
        let nn = n * (n - 1) / 2;
        VarTable {
            coords: (1..=nn).map(|k| Var::M(k as u16)).collect(),
            params: (1..=n).map(|k| Var::D(k as u16)).collect(),
        }
    }

    /// Coordinate variables in order.
    pub fn coords(&self) -> &[Var] {
        &self.coords
    }

    /// Parameter variables in order.
    pub fn params(&self) -> &[Var] {
        &self.params
    }

    /// Position of a coordinate variable.
    pub fn coord_index(&self, v: Var) -> Option<usize> {
        self.coords.iter().position(|&c| c == v)
    }
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// Product of variable powers with integer exponents; sorted, no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// A single variable.
    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut map: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e != 0).collect())
    }

    /// Sorted `(var, exp)` pairs.
    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    /// Exponent of `v`.
    pub fn exponent(&self, v: Var) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map(|(_, e)| *e).unwrap_or(0)
    }

    /// Whether this is the empty product.
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Integer power.
    pub fn pow(&self, e: i32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, x)| (*v, x * e)).collect())
    }

    /// Inverse.
    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Quotient.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Variables occurring in the monomial.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }

    /// Evaluates over a semifield.
    pub fn evaluate<T: Semifield>(&self, assign: &dyn Fn(Var) -> Option<T>) -> Result<T> {
        let mut acc = T::unit();
        for (v, e) in &self.0 {
            let x = assign(*v).ok_or_else(|| MirrorError::UnboundVariable(v.to_string()))?;
            acc = acc.mul(&x.powi(*e as i64));
        }
        Ok(acc)
    }

    /// Renders as `num/den`, e.g. `z2/(z1*z3^2)`; the empty product renders as `1`.
    pub fn render(&self) -> String {
        let fmt_side = |side: Vec<(Var, i32)>| -> String {
            side.iter()
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect::<Vec<_>>()
                .join("*")
        };
        let num: Vec<(Var, i32)> = self.0.iter().filter(|(_, e)| *e > 0).copied().collect();
        let den: Vec<(Var, i32)> = self.0.iter().filter(|(_, e)| *e < 0).map(|(v, e)| (*v, -e)).collect();
        let n = if num.is_empty() { "1".to_string() } else { fmt_side(num) };
        match den.len() {
            0 => n,
            1 => format!("{n}/{}", fmt_side(den)),
            _ => format!("{n}/({})", fmt_side(den)),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A Laurent monomial with positive rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial {
    coefficient: Rational,
    monomial: Monomial,
}

impl LaurentMonomial {
    /// Creates `c · x^e`; `c` must be positive.
    pub fn new(coefficient: Rational, monomial: Monomial) -> Result<Self> {
        if !coefficient.is_positive() {
            return Err(MirrorError::Domain(format!("monomial coefficient must be positive, got {coefficient}")));
        }
        Ok(LaurentMonomial { coefficient, monomial })
    }

    /// Unit-coefficient monomial.
    pub fn from_monomial(monomial: Monomial) -> Self {
        LaurentMonomial { coefficient: int(1), monomial }
    }

    /// A single variable.
    pub fn var(v: Var) -> Self {
        Self::from_monomial(Monomial::var(v))
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    /// The positive coefficient.
    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    /// The monomial part.
    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        LaurentMonomial {
            coefficient: &self.coefficient * &other.coefficient,
            monomial: self.monomial.mul(&other.monomial),
        }
    }

    /// Quotient.
    pub fn div(&self, other: &Self) -> Self {
        LaurentMonomial {
            coefficient: &self.coefficient / &other.coefficient,
            monomial: self.monomial.div(&other.monomial),
        }
    }

    /// Integer power.
    pub fn pow(&self, e: i32) -> Self {
        let mut c = int(1);
        for _ in 0..e.unsigned_abs() {
            c *= &self.coefficient;
        }
        if e < 0 {
            c = c.recip();
        }
        LaurentMonomial { coefficient: c, monomial: self.monomial.pow(e) }
    }

    /// Inverse.
    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Evaluates over a semifield.
    pub fn evaluate<T: Semifield>(&self, assign: &dyn Fn(Var) -> Option<T>) -> Result<T> {
        Ok(T::from_coefficient(&self.coefficient).mul(&self.monomial.evaluate(assign)?))
    }

    /// Substitutes monomials for variables.
    pub fn substitute(&self, rules: &BTreeMap<Var, LaurentMonomial>) -> LaurentMonomial {
        let mut acc = LaurentMonomial { coefficient: self.coefficient.clone(), monomial: Monomial::one() };
        for (v, e) in self.monomial.pairs() {
            let img = rules.get(v).cloned().unwrap_or_else(|| LaurentMonomial::var(*v));
            acc = acc.mul(&img.pow(*e));
        }
        acc
    }

    /// Tropicalization: an affine form whose constant collects `λ` from the `d_i`.
    pub fn tropicalize(&self, lambda: Option<&[Rational]>) -> AffineForm {
        let mut coeffs = BTreeMap::new();
        let mut constant = int(0);
        for (v, e) in self.monomial.pairs() {
            match (v, lambda) {
                (Var::D(i), Some(l)) => constant += int(*e as i64) * &l[*i as usize - 1],
                _ => {
                    coeffs.insert(*v, int(*e as i64));
                }
            }
        }
        AffineForm { coeffs, constant }
    }

    /// As a one-term Laurent polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::term(self.coefficient.clone(), self.monomial.clone())
    }

    /// Text form, e.g. `(1/2)*z1/z3`.
    pub fn render(&self) -> String {
        let m = self.monomial.render();
        if One::is_one(&self.coefficient) {
            m
        } else if self.monomial.is_one() {
            format!("{}", self.coefficient)
        } else if self.coefficient.is_integer() {
            format!("{}*{m}", self.coefficient)
        } else {
            format!("({})*{m}", self.coefficient)
        }
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// Laurent polynomial with signed rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    /// A single term `c·x^e` (zero if `c = 0`).
    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// A single variable.
    pub fn var(v: Var) -> Self {
        Self::term(int(1), Monomial::var(v))
    }

    /// A constant.
    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    /// Terms in canonical (sorted) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether this is the zero polynomial.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&Rational, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// Whether every coefficient is positive (and the polynomial is non-zero).
    pub fn is_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_positive())
    }

    /// Positive terms as Laurent monomials; `None` if a coefficient is not positive.
    pub fn positive_terms(&self) -> Option<Vec<LaurentMonomial>> {
        self.terms
            .iter()
            .map(|(m, c)| LaurentMonomial::new(c.clone(), m.clone()).ok())
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// All variables occurring.
    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.keys().flat_map(|m| m.vars()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Exact quotient `self / other` in the Laurent polynomial ring, if it exists.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_empty() {
            return None;
        }
        if self.is_empty() {
            return Some(Self::zero());
        }
        if let Some((c, m)) = other.as_monomial() {
            return Some(self.mul_monomial(&m.inv()).scale(&c.recip()));
        }
        let mut vars = self.vars();
        vars.extend(other.vars());
        vars.sort();
        vars.dedup();
        let k = vars.len();
        let dense = |p: &LaurentPoly| -> (BTreeMap<Vec<i32>, Rational>, Vec<i32>) {
            let mut mins = vec![i32::MAX; k];
            let mut raw = Vec::new();
            for (m, c) in &p.terms {
                let v: Vec<i32> = vars.iter().map(|&x| m.exponent(x)).collect();
                for (a, b) in mins.iter_mut().zip(&v) {
                    *a = (*a).min(*b);
                }
                raw.push((v, c.clone()));
            }
            let shifted = raw
                .into_iter()
                .map(|(v, c)| (v.iter().zip(&mins).map(|(a, b)| a - b).collect(), c))
                .collect();
            (shifted, mins)
        };
        let (mut rem, min_a) = dense(self);
        let (div, min_b) = dense(other);
        let (lt_b, lc_b) = div.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quot: BTreeMap<Vec<i32>, Rational> = BTreeMap::new();
        let max_steps = 200_000usize;
        let mut steps = 0usize;
        while let Some((lt_r, lc_r)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            steps += 1;
            if steps > max_steps {
                return None;
            }
            let shift: Vec<i32> = lt_r.iter().zip(&lt_b).map(|(a, b)| a - b).collect();
            if shift.iter().any(|&e| e < 0) {
                return None;
            }
            let coef = &lc_r / &lc_b;
            for (m, c) in &div {
                let key: Vec<i32> = m.iter().zip(&shift).map(|(a, b)| a + b).collect();
                let val = rem.entry(key.clone()).or_insert_with(|| int(0));
                *val -= &coef * c;
                if val.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(shift, coef);
        }
        let offset: Vec<i32> = min_a.iter().zip(&min_b).map(|(a, b)| a - b).collect();
        let mut out = LaurentPoly::zero();
        for (e, c) in quot {
            let m = Monomial::from_pairs(vars.iter().zip(e.iter().zip(&offset)).map(|(&v, (a, b))| (v, a + b)));
            out.add_term(m, c);
        }
        Some(out)
    }

    /// Evaluates over a field.
    pub fn evaluate_field<F: Field>(&self, assign: &dyn Fn(Var) -> Option<F>) -> Result<F> {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = F::from_rational(c);
            for (v, e) in m.pairs() {
                let x = assign(*v).ok_or_else(|| MirrorError::UnboundVariable(v.to_string()))?;
                let base = if *e < 0 {
                    x.inv().ok_or_else(|| MirrorError::NonGeneric(format!("{v} evaluates to zero")))?
                } else {
                    x
                };
                for _ in 0..e.unsigned_abs() {
                    t = t.mul(&base);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitutes monomials for variables.
    pub fn substitute_monomials(&self, rules: &BTreeMap<Var, LaurentMonomial>) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let lm = LaurentMonomial { coefficient: int(1), monomial: m.clone() }.substitute(rules);
            out.add_term(lm.monomial().clone(), c * lm.coefficient());
        }
        out
    }

    /// Converts to a subtraction-free expression; fails on non-positive coefficients.
    pub fn to_subfree(&self) -> Result<SubFreeExpr> {
        let terms = self
            .positive_terms()
            .ok_or_else(|| MirrorError::Domain(format!("not a positive Laurent polynomial: {self}")))?;
        SubFreeExpr::sum_of(terms.into_iter().map(SubFreeExpr::Mono).collect())
            .ok_or_else(|| MirrorError::Domain("empty sum".into()))
    }

    /// Deterministic text form.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let body = if One::is_one(&mag) {
                m.render()
            } else if m.is_one() {
                mag.to_string()
            } else if mag.is_integer() {
                format!("{mag}*{}", m.render())
            } else {
                format!("({mag})*{}", m.render())
            };
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Semiring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::constant(int(1))
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Ring for LaurentPoly {
    fn neg(&self) -> Self {
        self.scale(&-int(1))
    }
    fn from_rational(q: &Rational) -> Self {
        LaurentPoly::constant(q.clone())
    }
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

/// Quotient of two Laurent polynomials, reduced to a Laurent polynomial
/// whenever the division is exact.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFn {
    /// Builds `num/den`; `den` must be non-zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_empty() {
            return Err(MirrorError::NonGeneric("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_empty() {
            return RatFn { num, den: Semiring::one() };
        }
        if let Some(q) = num.exact_div(&den) {
            return RatFn { num: q, den: Semiring::one() };
        }
        RatFn { num, den }
    }

    /// A Laurent polynomial as a rational function.
    pub fn poly(p: LaurentPoly) -> Self {
        RatFn { num: p, den: Semiring::one() }
    }

    /// A single variable.
    pub fn var(v: Var) -> Self {
        Self::poly(LaurentPoly::var(v))
    }

    /// A monomial.
    pub fn monomial(m: &LaurentMonomial) -> Self {
        Self::poly(m.to_poly())
    }

    /// Numerator.
    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator.
    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// The Laurent polynomial, if the denominator reduced to `1`.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den == Semiring::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Text form.
    pub fn render(&self) -> String {
        match self.as_poly() {
            Some(p) => p.render(),
            None => format!("({})/({})", self.num.render(), self.den.render()),
        }
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Semiring for RatFn {
    fn zero() -> Self {
        RatFn::poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        RatFn::poly(Semiring::one())
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        Self::normalized(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }
    fn mul(&self, other: &Self) -> Self {
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl Ring for RatFn {
    fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(q: &Rational) -> Self {
        RatFn::poly(LaurentPoly::constant(q.clone()))
    }
}

impl Field for RatFn {
    fn inv(&self) -> Option<Self> {
        if self.num.is_empty() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }
}

impl Semifield for RatFn {
    fn from_coefficient(c: &Rational) -> Self {
        <RatFn as Ring>::from_rational(c)
    }
    fn add(&self, other: &Self) -> Self {
        Semiring::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Semiring::mul(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        Semiring::mul(self, &other.inv().expect("division by zero rational function"))
    }
}

// ---------------------------------------------------------------------------
// Subtraction-free expressions
// ---------------------------------------------------------------------------

/// Subtraction-free expression over positive Laurent monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubFreeExpr {
    /// Leaf.
    Mono(LaurentMonomial),
    /// Sum of at least two subexpressions.
    Sum(Vec<SubFreeExpr>),
    /// Product of at least two subexpressions.
    Prod(Vec<SubFreeExpr>),
    /// Quotient.
    Quot(Box<SubFreeExpr>, Box<SubFreeExpr>),
}

impl SubFreeExpr {
    /// A variable leaf.
    pub fn var(v: Var) -> Self {
        SubFreeExpr::Mono(LaurentMonomial::var(v))
    }

    /// A monomial leaf.
    pub fn mono(m: LaurentMonomial) -> Self {
        SubFreeExpr::Mono(m)
    }

    /// A positive constant.
    pub fn constant(c: Rational) -> Result<Self> {
        Ok(SubFreeExpr::Mono(LaurentMonomial::new(c, Monomial::one())?))
    }

    /// Sum of a list; `None` for the empty sum.
    pub fn sum_of(items: Vec<SubFreeExpr>) -> Option<Self> {
        let mut it = items.into_iter();
        let first = it.next()?;
        Some(it.fold(first, |acc, x| Semifield::add(&acc, &x)))
    }

    /// The monomial, if this is a leaf.
    pub fn as_monomial(&self) -> Option<&LaurentMonomial> {
        match self {
            SubFreeExpr::Mono(m) => Some(m),
            _ => None,
        }
    }

    /// Whether any quotient node with a non-monomial denominator occurs.
    pub fn has_quotient(&self) -> bool {
        match self {
            SubFreeExpr::Mono(_) => false,
            SubFreeExpr::Sum(v) | SubFreeExpr::Prod(v) => v.iter().any(|e| e.has_quotient()),
            SubFreeExpr::Quot(_, _) => true,
        }
    }

    /// Evaluates over any semifield.
    pub fn evaluate<T: Semifield>(&self, assign: &dyn Fn(Var) -> Option<T>) -> Result<T> {
        match self {
            SubFreeExpr::Mono(m) => m.evaluate(assign),
            SubFreeExpr::Sum(v) => {
                let mut acc = v[0].evaluate(assign)?;
                for e in &v[1..] {
                    acc = acc.add(&e.evaluate(assign)?);
                }
                Ok(acc)
            }
            SubFreeExpr::Prod(v) => {
                let mut acc = v[0].evaluate(assign)?;
                for e in &v[1..] {
                    acc = acc.mul(&e.evaluate(assign)?);
                }
                Ok(acc)
            }
            SubFreeExpr::Quot(a, b) => Ok(a.evaluate(assign)?.div(&b.evaluate(assign)?)),
        }
    }

    /// Evaluates with a map-based assignment.
    pub fn evaluate_map<T: Semifield>(&self, assign: &BTreeMap<Var, T>) -> Result<T> {
        self.evaluate(&|v| assign.get(&v).cloned())
    }

    /// Capture-free substitution of expressions for variables.
    pub fn substitute(&self, rules: &BTreeMap<Var, SubFreeExpr>) -> SubFreeExpr {
        self.evaluate(&|v| Some(rules.get(&v).cloned().unwrap_or_else(|| SubFreeExpr::var(v))))
            .expect("substitution assigns every variable")
    }

    /// Canonical form as a rational function (expanded numerator and denominator).
    pub fn to_ratfn(&self) -> RatFn {
        match self {
            SubFreeExpr::Mono(m) => RatFn::monomial(m),
            SubFreeExpr::Sum(v) => v.iter().map(|e| e.to_ratfn()).fold(Semiring::zero(), |a: RatFn, b| Semiring::add(&a, &b)),
            SubFreeExpr::Prod(v) => v.iter().map(|e| e.to_ratfn()).fold(Semiring::one(), |a: RatFn, b| Semiring::mul(&a, &b)),
            SubFreeExpr::Quot(a, b) => Semifield::div(&a.to_ratfn(), &b.to_ratfn()),
        }
    }

    /// Expanded Laurent polynomial, if the canonical form has trivial denominator.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.to_ratfn().as_poly().cloned()
    }

    /// Equality of canonical forms.
    pub fn canonical_eq(&self, other: &Self) -> bool {
        self.to_ratfn() == other.to_ratfn()
    }

    /// Positive monomial terms of the expanded form (for positive Laurent polynomials).
    pub fn monomial_terms(&self) -> Result<Vec<LaurentMonomial>> {
        let p = self
            .to_laurent()
            .ok_or_else(|| MirrorError::Unsupported("expression is not a Laurent polynomial".into()))?;
        p.positive_terms()
            .ok_or_else(|| MirrorError::Integrity("subtraction-free expression expanded with a non-positive term".into()))
    }

    /// Tropicalization with `d_i ↦ t^{λ_i}` (or symbolic `d_i` when `lambda` is `None`).
    pub fn tropicalize(&self, lambda: Option<&[Rational]>) -> PLForm {
        match self {
            SubFreeExpr::Mono(m) => PLForm::Affine(m.tropicalize(lambda)),
            SubFreeExpr::Sum(v) => PLForm::Min(v.iter().map(|e| e.tropicalize(lambda)).collect()),
            SubFreeExpr::Prod(v) => PLForm::Sum(v.iter().map(|e| e.tropicalize(lambda)).collect()),
            SubFreeExpr::Quot(a, b) => PLForm::Diff(Box::new(a.tropicalize(lambda)), Box::new(b.tropicalize(lambda))),
        }
    }

    /// Tree text form.
    pub fn render(&self) -> String {
        match self {
            SubFreeExpr::Mono(m) => m.render(),
            SubFreeExpr::Sum(v) => v.iter().map(|e| e.render()).collect::<Vec<_>>().join(" + "),
            SubFreeExpr::Prod(v) => v.iter().map(|e| format!("({})", e.render())).collect::<Vec<_>>().join("*"),
            SubFreeExpr::Quot(a, b) => format!("({})/({})", a.render(), b.render()),
        }
    }

    /// Canonical text form (sorted monomials of the expanded numerator and denominator).
    pub fn render_canonical(&self) -> String {
        self.to_ratfn().render()
    }
}

impl fmt::Display for SubFreeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Semifield for SubFreeExpr {
    fn from_coefficient(c: &Rational) -> Self {
        SubFreeExpr::Mono(
            LaurentMonomial::new(c.clone(), Monomial::one()).expect("semifield constants are positive"),
        )
    }
    fn add(&self, other: &Self) -> Self {
        let mut items = Vec::new();
        for e in [self, other] {
            match e {
                SubFreeExpr::Sum(v) => items.extend(v.iter().cloned()),
                x => items.push(x.clone()),
            }
        }
        SubFreeExpr::Sum(items)
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (SubFreeExpr::Mono(a), SubFreeExpr::Mono(b)) => SubFreeExpr::Mono(a.mul(b)),
            (SubFreeExpr::Mono(a), x) | (x, SubFreeExpr::Mono(a)) if One::is_one(a.coefficient()) && a.monomial().is_one() => {
                x.clone()
            }
            _ => {
                let mut items = Vec::new();
                for e in [self, other] {
                    match e {
                        SubFreeExpr::Prod(v) => items.extend(v.iter().cloned()),
                        x => items.push(x.clone()),
                    }
                }
                SubFreeExpr::Prod(items)
            }
        }
    }
    fn div(&self, other: &Self) -> Self {
        match other {
            SubFreeExpr::Mono(b) => self.mul(&SubFreeExpr::Mono(b.inv())),
            _ => SubFreeExpr::Quot(Box::new(self.clone()), Box::new(other.clone())),
        }
    }
}

// ---------------------------------------------------------------------------
// Piecewise-linear forms
// ---------------------------------------------------------------------------

/// Affine form `Σ c_v·v + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineForm {
    /// Coefficients of the variables (zero coefficients omitted).
    pub coeffs: BTreeMap<Var, Rational>,
    /// Constant term.
    pub constant: Rational,
}

impl AffineForm {
    /// Evaluates at a point.
    pub fn evaluate(&self, point: &dyn Fn(Var) -> Option<Rational>) -> Result<Rational> {
        let mut acc = self.constant.clone();
        for (v, c) in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let x = point(*v).ok_or_else(|| MirrorError::UnboundVariable(v.to_string()))?;
            acc += c * x;
        }
        Ok(acc)
    }

    /// Dense coefficient vector over the given variable order.
    pub fn dense(&self, vars: &[Var]) -> Vec<Rational> {
        vars.iter().map(|v| self.coeffs.get(v).cloned().unwrap_or_else(|| int(0))).collect()
    }

    /// Text form, e.g. `λ`-substituted `1 - z1 + 2*z2`.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (v, c) in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if One::is_one(&mag) { v.to_string() } else { format!("{mag}*{v}") };
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Piecewise-linear form obtained by tropicalization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PLForm {
    /// Affine leaf.
    Affine(AffineForm),
    /// Minimum of subforms.
    Min(Vec<PLForm>),
    /// Sum of subforms.
    Sum(Vec<PLForm>),
    /// Difference (from tropicalized quotients).
    Diff(Box<PLForm>, Box<PLForm>),
}

impl PLForm {
    /// Evaluates at a point.
    pub fn evaluate(&self, point: &dyn Fn(Var) -> Option<Rational>) -> Result<Rational> {
        Ok(match self {
            PLForm::Affine(a) => a.evaluate(point)?,
            PLForm::Min(v) => {
                let mut best: Option<Rational> = None;
                for f in v {
                    let x = f.evaluate(point)?;
                    best = Some(match best {
                        Some(b) if b <= x => b,
                        _ => x,
                    });
                }
                best.ok_or_else(|| MirrorError::Integrity("empty min".into()))?
            }
            PLForm::Sum(v) => {
                let mut acc = int(0);
                for f in v {
                    acc += f.evaluate(point)?;
                }
                acc
            }
            PLForm::Diff(a, b) => a.evaluate(point)? - b.evaluate(point)?,
        })
    }

    /// The affine pieces of a top-level minimum of affine forms, if the form has that shape.
    pub fn min_of_affine(&self) -> Option<Vec<AffineForm>> {
        match self {
            PLForm::Affine(a) => Some(vec![a.clone()]),
            PLForm::Min(v) => {
                let mut out = Vec::new();
                for f in v {
                    out.extend(f.min_of_affine()?);
                }
                Some(out)
            }
            _ => None,
        }
    }

    /// Text form.
    pub fn render(&self) -> String {
        match self {
            PLForm::Affine(a) => a.render(),
            PLForm::Min(v) => format!("min{{{}}}", v.iter().map(|f| f.render()).collect::<Vec<_>>().join(", ")),
            PLForm::Sum(v) => v.iter().map(|f| format!("({})", f.render())).collect::<Vec<_>>().join(" + "),
            PLForm::Diff(a, b) => format!("({}) - ({})", a.render(), b.render()),
        }
    }
}

/// Tropicalizes a subtraction-free expression by evaluating it over [`MinPlus`].
pub fn tropical_value(e: &SubFreeExpr, point: &dyn Fn(Var) -> Option<Rational>) -> Result<Rational> {
    e.evaluate::<MinPlus>(&|v| point(v).map(MinPlus)).map(|m| m.0)
}
