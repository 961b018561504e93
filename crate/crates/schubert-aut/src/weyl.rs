//! Weyl group elements as words in the simple reflections: actions on
//! weights, lengths, inversion sets, longest elements, and minimal coset
//! representatives.
//!
//! Elements are compared by their action matrix on simple-root coordinates,
//! never by word equality, so braid normalization is unnecessary. The
//! leftmost letter of a word acts last.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::rootsys::{Coord, RootSystem, Weight};

/// Upper bound on coset enumerations unless overridden.
pub const DEFAULT_ENUM_GUARD: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("enumeration would exceed the guard of {guard} elements")]
    EnumerationTooLarge { guard: usize },
}

/// Integer matrix of a Weyl group element acting on simple-root
/// coordinates; column j holds the image of α_{j+1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ActionMatrix {
    n: usize,
    cols: Vec<Vec<i64>>,
}

impl ActionMatrix {
    pub fn identity(n: usize) -> Self {
        ActionMatrix {
            n,
            cols: (0..n)
                .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == ActionMatrix::identity(self.n)
    }

    /// Matrix of the simple reflection s_i.
    pub fn reflection(rs: &RootSystem, i: usize) -> Self {
        let n = rs.rank();
        let mut m = ActionMatrix::identity(n);
        for j in 0..n {
            m.cols[j][i - 1] -= rs.cartan_entry(i, j + 1);
        }
        m
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let mut coords = vec![Coord::from_integer(0); self.n];
        for (j, c) in w.coords().iter().enumerate() {
            if !c.is_zero() {
                for i in 0..self.n {
                    coords[i] += Coord::from_integer(self.cols[j][i]) * c;
                }
            }
        }
        Weight::from_coords(coords)
    }

    /// self ∘ other as actions (self applied after other).
    pub fn compose(&self, other: &ActionMatrix) -> ActionMatrix {
        let n = self.n;
        let cols = (0..n)
            .map(|j| {
                let mut col = vec![0i64; n];
                for k in 0..n {
                    let f = other.cols[j][k];
                    if f != 0 {
                        for i in 0..n {
                            col[i] += self.cols[k][i] * f;
                        }
                    }
                }
                col
            })
            .collect();
        ActionMatrix { n, cols }
    }

    /// Image of α_j (1-based) as a weight.
    pub fn column(&self, j: usize) -> Weight {
        Weight::from_integers(&self.cols[j - 1])
    }

    pub fn key(&self) -> Vec<i64> {
        self.cols.iter().flatten().copied().collect()
    }

    fn inversion_count(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|beta| self.apply(beta).is_negative())
            .count()
    }
}

/// A word in the simple reflections, with 1-based letters.
#[derive(Clone)]
pub struct WeylWord<'a> {
    rs: &'a RootSystem,
    letters: Vec<usize>,
}

impl<'a> WeylWord<'a> {
    pub fn new(rs: &'a RootSystem, letters: Vec<usize>) -> Self {
        for &l in &letters {
            assert!(l >= 1 && l <= rs.rank(), "letter {} out of range", l);
        }
        WeylWord { rs, letters }
    }

    pub fn identity(rs: &'a RootSystem) -> Self {
        WeylWord { rs, letters: Vec::new() }
    }

    pub fn rs(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// w(μ): rightmost letter applied first.
    pub fn act(&self, mu: &Weight) -> Weight {
        let mut w = mu.clone();
        for &i in self.letters.iter().rev() {
            w = self.rs.reflect(i, &w);
        }
        w
    }

    /// w⁻¹(μ): letters applied left to right.
    pub fn act_inverse(&self, mu: &Weight) -> Weight {
        let mut w = mu.clone();
        for &i in &self.letters {
            w = self.rs.reflect(i, &w);
        }
        w
    }

    pub fn inverse(&self) -> WeylWord<'a> {
        let mut letters = self.letters.clone();
        letters.reverse();
        WeylWord { rs: self.rs, letters }
    }

    /// Concatenation self · other.
    pub fn compose(&self, other: &WeylWord<'a>) -> WeylWord<'a> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { rs: self.rs, letters }
    }

    pub fn action_matrix(&self) -> ActionMatrix {
        let mut m = ActionMatrix::identity(self.rs.rank());
        for &i in self.letters.iter().rev() {
            m = ActionMatrix::reflection(self.rs, i).compose(&m);
        }
        m
    }

    /// Length of the underlying group element, l(w) = |R⁺(w)|.
    pub fn length(&self) -> usize {
        self.action_matrix().inversion_count(self.rs)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.len() == self.length()
    }

    /// R⁺(w) = {β ∈ R⁺ : w(β) < 0}, sorted.
    pub fn inversion_set(&self) -> Vec<Weight> {
        let m = self.action_matrix();
        self.rs
            .positive_roots()
            .iter()
            .filter(|beta| m.apply(beta).is_negative())
            .cloned()
            .collect()
    }

    /// A reduced word for the same element, found by greedy descent.
    pub fn reduced(&self) -> WeylWord<'a> {
        reduced_word_of(self.rs, self.action_matrix())
    }

    pub fn action_eq(&self, other: &WeylWord) -> bool {
        self.action_matrix() == other.action_matrix()
    }

    /// Left-descent set {i : w⁻¹(α_i) < 0}; this is the set of simple
    /// reflections stabilizing the corresponding Schubert variety. The
    /// inversion-based and length-based computations are cross-checked.
    pub fn stabilizer_simple_roots(&self) -> BTreeSet<usize> {
        let by_inversion: BTreeSet<usize> = self
            .rs
            .simple_indices()
            .filter(|&i| self.act_inverse(&self.rs.simple_root(i)).is_negative())
            .collect();
        let len = self.length();
        let by_descent: BTreeSet<usize> = self
            .rs
            .simple_indices()
            .filter(|&i| {
                let mut letters = vec![i];
                letters.extend_from_slice(&self.letters);
                WeylWord::new(self.rs, letters).length() < len
            })
            .collect();
        assert_eq!(by_inversion, by_descent, "descent computations disagree");
        by_inversion
    }
}

impl fmt::Display for WeylWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{}", i)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for WeylWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylWord({:?})", self.letters)
    }
}

/// Extracts a reduced word by repeatedly peeling the least right descent.
fn reduced_word_of<'a>(rs: &'a RootSystem, mut m: ActionMatrix) -> WeylWord<'a> {
    let mut picks = Vec::new();
    while !m.is_identity() {
        let i = rs
            .simple_indices()
            .find(|&i| m.column(i).is_negative())
            .expect("non-identity action with no right descent");
        m = m.compose(&ActionMatrix::reflection(rs, i));
        picks.push(i);
    }
    picks.reverse();
    WeylWord::new(rs, picks)
}

/// Longest element of the standard parabolic subgroup W_J, as a reduced
/// word. `J = S` gives w₀ of the whole group.
pub fn longest_element<'a>(rs: &'a RootSystem, j_set: &BTreeSet<usize>) -> WeylWord<'a> {
    let mut m = ActionMatrix::identity(rs.rank());
    let mut letters = Vec::new();
    loop {
        // Right-multiplying by s_i lengthens exactly when w(α_i) > 0.
        let next = j_set.iter().copied().find(|&i| m.column(i).is_positive());
        match next {
            Some(i) => {
                m = m.compose(&ActionMatrix::reflection(rs, i));
                letters.push(i);
            }
            None => break,
        }
    }
    WeylWord::new(rs, letters)
}

pub fn full_simple_set(rs: &RootSystem) -> BTreeSet<usize> {
    rs.simple_indices().collect()
}

/// Unique factorization w = w^J · w_J with w^J ∈ W^J and w_J ∈ W_J;
/// lengths add. Works for arbitrary (not necessarily reduced) input words.
pub fn coset_factorize<'a>(
    w: &WeylWord<'a>,
    j_set: &BTreeSet<usize>,
) -> (WeylWord<'a>, WeylWord<'a>) {
    let rs = w.rs();
    let mut m = w.action_matrix();
    let mut tail: Vec<usize> = Vec::new();
    loop {
        let next = j_set.iter().copied().find(|&j| m.column(j).is_negative());
        match next {
            Some(j) => {
                m = m.compose(&ActionMatrix::reflection(rs, j));
                tail.insert(0, j);
            }
            None => break,
        }
    }
    (reduced_word_of(rs, m), WeylWord::new(rs, tail))
}

/// Enumerates W^J = {w : w(α_j) ∈ R⁺ for all j ∈ J} by breadth-first
/// closure under length-increasing left multiplication. Every element of
/// W^J of length k is s_i times one of length k−1 that is again in W^J,
/// so the closure is complete.
pub fn enumerate_min_reps<'a>(
    rs: &'a RootSystem,
    j_set: &BTreeSet<usize>,
) -> Result<Vec<WeylWord<'a>>, WeylError> {
    enumerate_min_reps_guarded(rs, j_set, DEFAULT_ENUM_GUARD)
}

pub fn enumerate_min_reps_guarded<'a>(
    rs: &'a RootSystem,
    j_set: &BTreeSet<usize>,
    guard: usize,
) -> Result<Vec<WeylWord<'a>>, WeylError> {
    let in_min_reps = |m: &ActionMatrix| j_set.iter().all(|&j| m.column(j).is_positive());
    let id = ActionMatrix::identity(rs.rank());
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    seen.insert(id.key());
    let mut queue: VecDeque<(ActionMatrix, Vec<usize>, usize)> = VecDeque::new();
    queue.push_back((id, Vec::new(), 0));
    let mut out = Vec::new();
    while let Some((m, word, len)) = queue.pop_front() {
        out.push(WeylWord::new(rs, word.clone()));
        for i in rs.simple_indices() {
            let next = ActionMatrix::reflection(rs, i).compose(&m);
            if next.inversion_count(rs) != len + 1 || !in_min_reps(&next) {
                continue;
            }
            if seen.insert(next.key()) {
                if seen.len() > guard {
                    return Err(WeylError::EnumerationTooLarge { guard });
                }
                let mut next_word = vec![i];
                next_word.extend_from_slice(&word);
                queue.push_back((next, next_word, len + 1));
            }
        }
    }
    Ok(out)
}
