//! Symmetric-group combinatorics.
//!
//! Reduced words for the longest element `w0 ∈ S_n`, braid moves between
//! them, the positive-root ordering induced by a word, dominant weights and
//! the Weyl dimension formula.
//!
//! Words are 1-indexed: the letter `i` stands for the simple transposition
//! `s_i = (i, i+1)`.
//!
//! ```
//! use glmirror::weyl::{enumerate_reduced_words, ReducedWord, braid_path};
//! assert_eq!(enumerate_reduced_words(4).unwrap().len(), 16);
//! let a = ReducedWord::new(3, vec![1, 2, 1]).unwrap();
//! let b = ReducedWord::new(3, vec![2, 1, 2]).unwrap();
//! assert_eq!(braid_path(&a, &b).unwrap().len(), 1);
//! ```

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{MirrorError, Result};
use crate::exact::{int, Rational};

/// Number of positive roots of `GL_n`, `N = n(n−1)/2`.
pub fn num_positive_roots(n: usize) -> usize {
    n * (n - 1) / 2
}

/// The offset `s_k = Σ_{j<k} (n−j)`, so that `s_1 = 0`.
pub fn s_offset(n: usize, k: usize) -> usize {
    (1..k).map(|j| n - j).sum()
}

/// A positive root `α_ij = ε_i − ε_j` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root {
    /// Row index.
    pub i: usize,
    /// Column index.
    pub j: usize,
}

impl Root {
    /// Creates `α_ij`; requires `i < j`.
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i >= j || i == 0 {
            return Err(MirrorError::Domain(format!("not a positive root: ({i},{j})")));
        }
        Ok(Root { i, j })
    }

    /// The simple root `α_i = α_{i,i+1}`.
    pub fn simple(i: usize) -> Self {
        Root { i, j: i + 1 }
    }

    /// All positive roots of `GL_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Root> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Root { i, j });
            }
        }
        out
    }

    /// Parses `"a12"` or `"12"`-style labels (single-digit indices) or `"a1,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('a');
        let (a, b) = if let Some((a, b)) = t.split_once(',') {
            (a.to_string(), b.to_string())
        } else if t.len() == 2 {
            (t[..1].to_string(), t[1..].to_string())
        } else {
            return Err(MirrorError::Parse(format!("cannot parse root label {s}")));
        };
        let i = a.parse().map_err(|_| MirrorError::Parse(format!("bad root label {s}")))?;
        let j = b.parse().map_err(|_| MirrorError::Parse(format!("bad root label {s}")))?;
        Root::new(i, j)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "a{}{}", self.i, self.j)
        } else {
            write!(f, "a{},{}", self.i, self.j)
        }
    }
}

/// A reduced expression `s_{i_1}···s_{i_N}` for `w0` in `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    /// Validates and wraps a word; it must be a reduced expression for `w0`.
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(MirrorError::Domain(format!("n must be at least 2, got {n}")));
        }
        if letters.len() != num_positive_roots(n) {
            return Err(MirrorError::Domain(format!(
                "a reduced word for w0 in S_{n} has length {}, got {}",
                num_positive_roots(n),
                letters.len()
            )));
        }
        if let Some(bad) = letters.iter().find(|&&l| l == 0 || l >= n) {
            return Err(MirrorError::IndexOutOfRange(format!("letter {bad} not in 1..{}", n - 1)));
        }
        if !is_reduced(n, &letters) {
            return Err(MirrorError::Domain(format!("{letters:?} is not reduced")));
        }
        Ok(ReducedWord { n, letters })
    }

    /// Rank parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The letters `i_1, …, i_N`.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Length `N`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word is empty (only for the degenerate `n = 1`, never constructed).
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word read backwards, again a reduced word for `w0`.
    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        ReducedWord { n: self.n, letters }
    }

    /// The standard word `i_0 = (1, …, n−1, 1, …, n−2, …, 1, 2, 1)`.
    pub fn i0(n: usize) -> Self {
        let mut letters = Vec::new();
        for top in (1..n).rev() {
            letters.extend(1..=top);
        }
        ReducedWord { n, letters }
    }

    /// The word `i'_0 = (n−1, …, 1, n−1, …, 2, …, n−1)`.
    pub fn i0_prime(n: usize) -> Self {
        let mut letters = Vec::new();
        for low in 1..n {
            letters.extend((low..n).rev());
        }
        ReducedWord { n, letters }
    }

    /// The reverse of `i'_0`.
    pub fn i0_prime_op(n: usize) -> Self {
        Self::i0_prime(n).reversed()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One-line notation of `s_{i_1}···s_{i_k}` (1-based values), starting from the identity.
pub fn word_permutation(n: usize, letters: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = (1..=n).collect();
    for &i in letters {
        w.swap(i - 1, i);
    }
    w
}

/// Whether right multiplication by each successive letter increases the length.
pub fn is_reduced_expression(n: usize, letters: &[usize]) -> bool {
    let mut w: Vec<usize> = (1..=n).collect();
    for &i in letters {
        if i == 0 || i >= n || w[i - 1] > w[i] {
            return false;
        }
        w.swap(i - 1, i);
    }
    true
}

/// Whether `letters` is a reduced expression for the longest element of `S_n`.
pub fn is_reduced(n: usize, letters: &[usize]) -> bool {
    letters.len() == num_positive_roots(n)
        && is_reduced_expression(n, letters)
        && word_permutation(n, letters) == (1..=n).rev().collect::<Vec<_>>()
}

/// Number of inversions of a permutation in one-line notation.
pub fn inversions(w: &[usize]) -> usize {
    let mut c = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                c += 1;
            }
        }
    }
    c
}

/// All reduced words for `w0` in `S_n`, sorted lexicographically.
pub fn enumerate_reduced_words(n: usize) -> Result<Vec<ReducedWord>> {
    if !(2..=6).contains(&n) {
        return Err(MirrorError::SizeLimit(format!("enumerate_reduced_words supports 2 ≤ n ≤ 6, got {n}")));
    }
    let total = num_positive_roots(n);
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), (1..=n).collect())];
    while let Some((word, perm)) = stack.pop() {
        if word.len() == total {
            out.push(ReducedWord { n, letters: word });
            continue;
        }
        for i in (1..n).rev() {
            if perm[i - 1] < perm[i] {
                let mut p = perm.clone();
                p.swap(i - 1, i);
                let mut w = word.clone();
                w.push(i);
                stack.push((w, p));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The positive roots `α^i_k = s_{i_1}···s_{i_{k−1}} α_{i_k}` in word order.
pub fn positive_root_sequence(w: &ReducedWord) -> Vec<Root> {
    root_sequence_of(w.n, &w.letters)
}

/// Root sequence of an arbitrary reduced expression (not necessarily for `w0`).
pub fn root_sequence_of(n: usize, letters: &[usize]) -> Vec<Root> {
    let mut out = Vec::with_capacity(letters.len());
    let mut prefix: Vec<usize> = (1..=n).collect();
    for &i in letters {
        let a = prefix[i - 1];
        let b = prefix[i];
        out.push(Root { i: a.min(b), j: a.max(b) });
        prefix.swap(i - 1, i);
    }
    out
}

/// An elementary rewriting step between reduced words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    /// `i, j ↔ j, i` for `|i − j| ≥ 2`, at the 1-based position of the first letter.
    Commute {
        /// 1-based position of the first swapped letter.
        pos: usize,
    },
    /// `i, j, i ↔ j, i, j` for `|i − j| = 1`, at the 1-based position of the first letter.
    Braid {
        /// 1-based position of the first letter of the triple.
        pos: usize,
    },
}

/// Applies a move to a letter sequence, returning `None` if it is not applicable.
pub fn apply_move(letters: &[usize], mv: Move) -> Option<Vec<usize>> {
    let mut out = letters.to_vec();
    match mv {
        Move::Commute { pos } => {
            let p = pos.checked_sub(1)?;
            if p + 1 >= letters.len() || letters[p].abs_diff(letters[p + 1]) < 2 {
                return None;
            }
            out.swap(p, p + 1);
        }
        Move::Braid { pos } => {
            let p = pos.checked_sub(1)?;
            if p + 2 >= letters.len() {
                return None;
            }
            let (a, b, c) = (letters[p], letters[p + 1], letters[p + 2]);
            if a != c || a.abs_diff(b) != 1 {
                return None;
            }
            out[p] = b;
            out[p + 1] = a;
            out[p + 2] = b;
        }
    }
    Some(out)
}

/// All words reachable by one move, sorted lexicographically by the resulting word.
pub fn neighbors(letters: &[usize]) -> Vec<(Vec<usize>, Move)> {
    let mut out = Vec::new();
    for pos in 1..=letters.len() {
        for mv in [Move::Commute { pos }, Move::Braid { pos }] {
            if let Some(w) = apply_move(letters, mv) {
                out.push((w, mv));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Breadth-first search in the braid-move graph from `start` to the first word
/// satisfying `goal`; neighbors are explored in lexicographic order.
pub fn braid_search(start: &[usize], goal: impl Fn(&[usize]) -> bool) -> Option<Vec<Move>> {
    if goal(start) {
        return Some(Vec::new());
    }
    let mut parent: HashMap<Vec<usize>, (Vec<usize>, Move)> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(start.to_vec());
    parent.insert(start.to_vec(), (Vec::new(), Move::Commute { pos: 0 }));
    while let Some(cur) = queue.pop_front() {
        for (next, mv) in neighbors(&cur) {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), (cur.clone(), mv));
            if goal(&next) {
                let mut path = Vec::new();
                let mut node = next;
                while node.as_slice() != start {
                    let (prev, m) = parent[&node].clone();
                    path.push(m);
                    node = prev;
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(next);
        }
    }
    None
}

/// Shortest sequence of moves transforming `from` into `to` (deterministic BFS).
pub fn braid_path(from: &ReducedWord, to: &ReducedWord) -> Result<Vec<Move>> {
    if from.n != to.n {
        return Err(MirrorError::Domain(format!("words for different n: {} vs {}", from.n, to.n)));
    }
    braid_search(&from.letters, |w| w == to.letters.as_slice())
        .ok_or_else(|| MirrorError::Integrity(format!("no braid path from {from} to {to}")))
}

/// A weakly decreasing weight `λ_1 ≥ … ≥ λ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    components: Vec<Rational>,
}

impl DominantWeight {
    /// Validates weak decrease.
    pub fn new(components: Vec<Rational>) -> Result<Self> {
        if components.is_empty() {
            return Err(MirrorError::Domain("empty weight".into()));
        }
        for w in components.windows(2) {
            if w[0] < w[1] {
                return Err(MirrorError::Domain(format!(
                    "weight is not dominant: components must be weakly decreasing, found {} < {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(DominantWeight { components })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| int(x)).collect())
    }

    /// Number of components.
    pub fn n(&self) -> usize {
        self.components.len()
    }

    /// Components `λ_1, …, λ_n`.
    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    /// Component `λ_k` (1-based).
    pub fn get(&self, k: usize) -> &Rational {
        &self.components[k - 1]
    }

    /// The average `ℓ = (1/n) Σ λ_i`.
    pub fn ell(&self) -> Rational {
        let s: Rational = self.components.iter().sum();
        s / int(self.components.len() as i64)
    }

    /// Whether every component is an integer.
    pub fn is_integral(&self) -> bool {
        self.components.iter().all(|c| c.is_integer())
    }

    /// Whether the components strictly decrease.
    pub fn is_strictly_dominant(&self) -> bool {
        self.components.windows(2).all(|w| w[0] > w[1])
    }
}

impl std::str::FromStr for DominantWeight {
    type Err = MirrorError;

    /// Parses comma-separated rationals such as `"2,1,-1"` or `"5/2,1/3,0"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s.split(',').map(crate::exact::parse_rational).collect::<Result<Vec<_>>>()?;
        DominantWeight::new(parts)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Dimension `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)` of the irreducible representation `V_λ`.
pub fn weyl_dimension(lambda: &DominantWeight) -> Result<BigInt> {
    if !lambda.is_integral() {
        return Err(MirrorError::Domain(format!("weyl_dimension needs an integral weight, got {lambda}")));
    }
    let n = lambda.n();
    let mut acc = Rational::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let gap = int((j - i) as i64);
            acc *= (lambda.get(i) - lambda.get(j) + &gap) / gap;
        }
    }
    debug_assert!(acc.is_integer() && acc > Rational::zero());
    Ok(acc.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_word_sets() {
        let w3 = enumerate_reduced_words(3).unwrap();
        let l3: Vec<Vec<usize>> = w3.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(l3, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        let w2 = enumerate_reduced_words(2).unwrap();
        assert_eq!(w2.len(), 1);
        assert_eq!(w2[0].letters(), &[1]);
        assert!(enumerate_reduced_words(7).is_err());
    }

    #[test]
    fn standard_words() {
        assert_eq!(ReducedWord::i0(4).letters(), &[1, 2, 3, 1, 2, 1]);
        assert_eq!(ReducedWord::i0_prime(4).letters(), &[3, 2, 1, 3, 2, 3]);
        assert_eq!(ReducedWord::i0_prime_op(4).letters(), &[3, 2, 3, 1, 2, 3]);
        for n in 2..=6 {
            assert!(is_reduced(n, ReducedWord::i0(n).letters()));
            assert!(is_reduced(n, ReducedWord::i0_prime(n).letters()));
        }
    }

    #[test]
    fn root_orderings() {
        let r = positive_root_sequence(&ReducedWord::i0(3));
        assert_eq!(r, vec![Root { i: 1, j: 2 }, Root { i: 1, j: 3 }, Root { i: 2, j: 3 }]);
        let w = ReducedWord::new(4, vec![1, 2, 3, 2, 1, 2]).unwrap();
        let labels: Vec<String> = positive_root_sequence(&w).iter().map(|r| r.to_string()).collect();
        assert_eq!(labels, ["a12", "a13", "a14", "a34", "a24", "a23"]);
        let labels: Vec<String> =
            positive_root_sequence(&ReducedWord::i0(4)).iter().map(|r| r.to_string()).collect();
        assert_eq!(labels, ["a12", "a13", "a14", "a23", "a24", "a34"]);
    }

    #[test]
    fn braid_paths() {
        let a = ReducedWord::new(3, vec![1, 2, 1]).unwrap();
        let b = ReducedWord::new(3, vec![2, 1, 2]).unwrap();
        assert_eq!(braid_path(&a, &b).unwrap(), vec![Move::Braid { pos: 1 }]);
        assert!(braid_path(&a, &a).unwrap().is_empty());
    }

    #[test]
    fn dimensions() {
        assert_eq!(weyl_dimension(&DominantWeight::from_ints(&[0, 0, 0]).unwrap()).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dimension(&DominantWeight::from_ints(&[1, 0, 0]).unwrap()).unwrap(), BigInt::from(3));
        assert_eq!(weyl_dimension(&DominantWeight::from_ints(&[2, 1, -1]).unwrap()).unwrap(), BigInt::from(15));
        assert!(DominantWeight::from_ints(&[0, 1]).is_err());
    }

    #[test]
    fn offsets() {
        assert_eq!(s_offset(4, 1), 0);
        assert_eq!(s_offset(4, 2), 3);
        assert_eq!(s_offset(4, 3), 5);
        assert_eq!(s_offset(4, 4), 6);
    }
}
