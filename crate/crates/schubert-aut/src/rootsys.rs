//! Root-system data for the simple types A–G: Cartan matrices, positive
//! roots, pairings, fundamental weights, ρ, and the highest root.
//!
//! Weights are stored in simple-root coordinates with exact rational
//! entries, so root coordinates stay integral and half-integral characters
//! of covering groups remain representable without rounding. Simple-root
//! indices are 1-based throughout the public API, matching the usual
//! Bourbaki numbering.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Exact rational coordinate.
pub type Coord = Rational64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("unsupported simple type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },
}

/// A weight written in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Coord>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Coord::zero(); rank],
        }
    }

    pub fn from_coords(coords: Vec<Coord>) -> Self {
        Weight { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| Coord::from_integer(c)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    /// Coefficient of α_i (1-based).
    pub fn coord(&self, i: usize) -> Coord {
        self.coords[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Nonzero with every coordinate ≤ 0. For roots this is exactly
    /// membership in −R⁺.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.coords.iter().all(|c| !c.is_positive())
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn scaled(&self, factor: Coord) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    /// Sum of simple-root coordinates (the height, for roots).
    pub fn height(&self) -> Coord {
        self.coords.iter().sum()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if mag != Coord::from_integer(1) {
                if mag.is_integer() {
                    write!(f, "{}", mag)?;
                } else {
                    write!(f, "({})", mag)?;
                }
            }
            write!(f, "α{}", k + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Immutable Cartan datum of one simple type.
pub struct RootSystem {
    letter: char,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Weight>,
    positive_set: BTreeSet<Weight>,
    fundamental: Vec<Weight>,
    inverse_cartan: Vec<Vec<Coord>>,
    highest_root: Weight,
    rho: Weight,
}

impl RootSystem {
    /// Builds the root system of the given simple type. Positive roots are
    /// generated by string-closure from the simple roots and validated
    /// against the classification counts.
    pub fn new(letter: char, rank: usize) -> Result<Self, RootSystemError> {
        let letter = letter.to_ascii_uppercase();
        let cartan = cartan_matrix(letter, rank)
            .ok_or(RootSystemError::InvalidType { letter, rank })?;
        let symmetrizer = symmetrize(&cartan);

        let pairing_of = |w: &Weight, i: usize| -> Coord {
            (0..rank)
                .map(|j| w.coords()[j] * Coord::from_integer(cartan[i - 1][j]))
                .sum()
        };

        // Height-by-height closure: β + α_i is a root iff the α_i-string
        // through β extends upward, i.e. p − ⟨β, α_i∨⟩ > 0 where p counts
        // the steps already available below β.
        let mut positive_set: BTreeSet<Weight> = BTreeSet::new();
        let mut by_height: Vec<Vec<Weight>> = vec![Vec::new()];
        let simples: Vec<Weight> = (0..rank)
            .map(|k| {
                let mut v = vec![0i64; rank];
                v[k] = 1;
                Weight::from_integers(&v)
            })
            .collect();
        by_height.push(simples.clone());
        positive_set.extend(simples.iter().cloned());
        loop {
            let current = by_height.last().unwrap().clone();
            let mut next = Vec::new();
            for beta in &current {
                for i in 1..=rank {
                    let alpha = &simples[i - 1];
                    let mut p = 0i64;
                    let mut down = beta - alpha;
                    while positive_set.contains(&down) {
                        p += 1;
                        down = &down - alpha;
                    }
                    let pairing = pairing_of(beta, i);
                    let q = Coord::from_integer(p) - pairing;
                    if q.is_positive() {
                        let up = beta + alpha;
                        if positive_set.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            by_height.push(next);
        }

        let mut positive_roots: Vec<Weight> = Vec::new();
        for level in &by_height {
            positive_roots.extend(level.iter().cloned());
        }
        assert_eq!(
            positive_roots.len(),
            positive_root_count(letter, rank),
            "positive root count mismatch for {}{}",
            letter,
            rank
        );

        // Highest root: the unique root at maximal height; it admits no
        // extension by any simple root and pairs non-negatively with all.
        let top_level = by_height.last().unwrap();
        assert_eq!(top_level.len(), 1, "highest root is not unique");
        let highest_root = top_level[0].clone();
        for i in 1..=rank {
            let up = &highest_root + &simples[i - 1];
            assert!(!positive_set.contains(&up));
            assert!(!pairing_of(&highest_root, i).is_negative());
        }

        // ρ both as half the sum of R⁺ and as the sum of fundamental
        // weights; the two must agree.
        let mut sum = Weight::zero(rank);
        for beta in &positive_roots {
            sum = &sum + beta;
        }
        let rho = sum.scaled(Coord::new(1, 2));

        let rational_cartan: Vec<Vec<Coord>> = cartan
            .iter()
            .map(|row| row.iter().map(|&e| Coord::from_integer(e)).collect())
            .collect();
        let inverse_cartan = invert(&rational_cartan);
        let fundamental: Vec<Weight> = (0..rank)
            .map(|i| {
                Weight::from_coords((0..rank).map(|j| inverse_cartan[j][i]).collect())
            })
            .collect();
        let mut fund_sum = Weight::zero(rank);
        for w in &fundamental {
            fund_sum = &fund_sum + w;
        }
        assert_eq!(rho, fund_sum, "ρ disagrees with the sum of fundamental weights");

        let rs = RootSystem {
            letter,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            positive_set,
            fundamental,
            inverse_cartan,
            highest_root,
            rho,
        };

        // Reflection closure: every simple reflection permutes R.
        for i in 1..=rs.rank {
            for beta in &rs.positive_roots {
                let image = rs.reflect(i, beta);
                assert!(
                    rs.is_root(&image),
                    "s{} does not preserve the root set of {}{}",
                    i,
                    rs.letter,
                    rs.rank
                );
            }
        }

        Ok(rs)
    }

    pub fn letter(&self) -> char {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// ⟨α_j, α_i∨⟩ (1-based), so that `cartan_entry(i, i) = 2`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn symmetrizer_entry(&self, i: usize) -> i64 {
        self.symmetrizer[i - 1]
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        assert!(i >= 1 && i <= self.rank, "simple-root index out of range");
        let mut v = vec![0i64; self.rank];
        v[i - 1] = 1;
        Weight::from_integers(&v)
    }

    pub fn simple_indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weight(&self, i: usize) -> &Weight {
        &self.fundamental[i - 1]
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_set.contains(w)
    }

    /// Membership in R = R⁺ ∪ −R⁺.
    pub fn is_root(&self, w: &Weight) -> bool {
        self.positive_set.contains(w) || self.positive_set.contains(&(-w))
    }

    /// ⟨μ, α_i∨⟩ = 2(μ, α_i)/(α_i, α_i).
    pub fn pairing(&self, mu: &Weight, i: usize) -> Coord {
        assert!(i >= 1 && i <= self.rank, "simple-root index out of range");
        (0..self.rank)
            .map(|j| mu.coords()[j] * Coord::from_integer(self.cartan[i - 1][j]))
            .sum()
    }

    /// W-invariant bilinear form, normalized so (α_i, α_i) = 2 d_i.
    pub fn bilinear(&self, a: &Weight, b: &Weight) -> Coord {
        let mut total = Coord::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                total += a.coords()[i]
                    * b.coords()[j]
                    * Coord::from_integer(self.symmetrizer[i] * self.cartan[i][j]);
            }
        }
        total
    }

    /// ⟨μ, β∨⟩ for an arbitrary root β.
    pub fn pairing_root(&self, mu: &Weight, beta: &Weight) -> Coord {
        debug_assert!(self.is_root(beta));
        Coord::from_integer(2) * self.bilinear(mu, beta) / self.bilinear(beta, beta)
    }

    /// Simple reflection s_i(μ) = μ − ⟨μ, α_i∨⟩ α_i.
    pub fn reflect(&self, i: usize, mu: &Weight) -> Weight {
        let c = self.pairing(mu, i);
        let mut coords = mu.coords().to_vec();
        coords[i - 1] -= c;
        Weight::from_coords(coords)
    }

    pub fn is_dominant(&self, mu: &Weight) -> bool {
        self.simple_indices().all(|i| !self.pairing(mu, i).is_negative())
    }

    /// Coordinates of μ in the fundamental-weight basis: v_i = ⟨μ, α_i∨⟩.
    pub fn to_fundamental(&self, mu: &Weight) -> Vec<Coord> {
        self.simple_indices().map(|i| self.pairing(mu, i)).collect()
    }

    /// Inverse of `to_fundamental`.
    pub fn to_simple(&self, v: &[Coord]) -> Weight {
        assert_eq!(v.len(), self.rank, "coordinate dimension mismatch");
        Weight::from_coords(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|i| self.inverse_cartan[j][i] * v[i]).sum())
                .collect(),
        )
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}{})", self.letter, self.rank)
    }
}

fn chain(cartan: &mut [Vec<i64>], a: usize, b: usize) {
    cartan[a][b] = -1;
    cartan[b][a] = -1;
}

/// Cartan matrix in Bourbaki numbering, entries c[i][j] = ⟨α_{j+1}, α_{i+1}∨⟩.
/// For G2 we take α1 short, so c[0][1] = −3.
fn cartan_matrix(letter: char, rank: usize) -> Option<Vec<Vec<i64>>> {
    let valid = match letter {
        'A' => rank >= 1,
        'B' => rank >= 2,
        // C1 and C2 coincide with A1 and B2 but are accepted so that the
        // C-family statements can be checked from rank 1 up.
        'C' => rank >= 1,
        'D' => rank >= 3,
        'E' => (6..=8).contains(&rank),
        'F' => rank == 4,
        'G' => rank == 2,
        _ => false,
    };
    if !valid {
        return None;
    }
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    match letter {
        'A' => {
            for k in 0..rank.saturating_sub(1) {
                chain(&mut c, k, k + 1);
            }
        }
        'B' => {
            for k in 0..rank - 1 {
                chain(&mut c, k, k + 1);
            }
            // α_rank is short: ⟨α_{n−1}, α_n∨⟩ = −2
            c[rank - 1][rank - 2] = -2;
        }
        'C' => {
            for k in 0..rank.saturating_sub(1) {
                chain(&mut c, k, k + 1);
            }
            if rank >= 2 {
                // α_rank is long: ⟨α_n, α_{n−1}∨⟩ = −2
                c[rank - 2][rank - 1] = -2;
            }
        }
        'D' => {
            for k in 0..rank - 2 {
                chain(&mut c, k, k + 1);
            }
            chain(&mut c, rank - 3, rank - 1);
        }
        'E' => {
            // Chain 1–3–4–5–…–n with node 2 attached to node 4.
            chain(&mut c, 0, 2);
            for k in 2..rank - 1 {
                chain(&mut c, k, k + 1);
            }
            chain(&mut c, 1, 3);
        }
        'F' => {
            chain(&mut c, 0, 1);
            chain(&mut c, 1, 2);
            chain(&mut c, 2, 3);
            // α3, α4 short: ⟨α_2, α_3∨⟩ = −2
            c[2][1] = -2;
        }
        'G' => {
            c[0][1] = -3;
            c[1][0] = -1;
        }
        _ => unreachable!(),
    }
    Some(c)
}

/// Positive integers d_i with (d_i c_ij) symmetric, found by propagating
/// norm ratios along the Dynkin diagram.
fn symmetrize(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d = vec![Coord::zero(); n];
    d[0] = Coord::from_integer(1);
    let mut todo = vec![0usize];
    while let Some(i) = todo.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_zero() {
                d[j] = d[i] * Coord::new(cartan[i][j], cartan[j][i]);
                todo.push(j);
            }
        }
    }
    let denom_lcm = d
        .iter()
        .map(|r| *r.denom())
        .fold(1i64, num_integer_lcm);
    let scaled: Vec<i64> = d
        .iter()
        .map(|r| (r * Coord::from_integer(denom_lcm)).to_integer())
        .collect();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(
                scaled[i] * cartan[i][j],
                scaled[j] * cartan[j][i],
                "symmetrizer failed"
            );
        }
    }
    scaled
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn positive_root_count(letter: char, rank: usize) -> usize {
    match letter {
        'A' => rank * (rank + 1) / 2,
        'B' | 'C' => rank * rank,
        'D' => rank * (rank - 1),
        'E' => match rank {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
        'F' => 24,
        'G' => 6,
        _ => unreachable!(),
    }
}

/// Exact Gauss-Jordan inverse; panics on singular input (Cartan matrices of
/// simple types never are).
fn invert(m: &[Vec<Coord>]) -> Vec<Vec<Coord>> {
    let n = m.len();
    let mut a: Vec<Vec<Coord>> = m.to_vec();
    let mut inv: Vec<Vec<Coord>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Coord::from_integer(1)
                    } else {
                        Coord::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col];
                for j in 0..n {
                    let ac = a[col][j];
                    let ic = inv[col][j];
                    a[r][j] -= factor * ac;
                    inv[r][j] -= factor * ic;
                }
            }
        }
    }
    inv
}

/// All simple types of rank ≤ `max_rank`, canonical ranks only (no
/// low-rank aliases like C2 or D3).
pub fn canonical_types(max_rank: usize) -> Vec<(char, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(('A', n));
    }
    for n in 2..=max_rank {
        out.push(('B', n));
    }
    for n in 3..=max_rank {
        out.push(('C', n));
    }
    for n in 4..=max_rank {
        out.push(('D', n));
    }
    for n in 6..=max_rank.min(8) {
        out.push(('E', n));
    }
    if max_rank >= 4 {
        out.push(('F', 4));
    }
    if max_rank >= 2 {
        out.push(('G', 2));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(letter: char, rank: usize) -> RootSystem {
        RootSystem::new(letter, rank).unwrap()
    }

    #[test]
    fn classification_counts() {
        for (letter, rank, count) in [
            ('A', 1, 1),
            ('A', 4, 10),
            ('B', 2, 4),
            ('B', 4, 16),
            ('C', 3, 9),
            ('D', 4, 12),
            ('D', 5, 20),
            ('E', 6, 36),
            ('E', 7, 63),
            ('E', 8, 120),
            ('F', 4, 24),
            ('G', 2, 6),
        ] {
            assert_eq!(rs(letter, rank).positive_roots().len(), count);
        }
    }

    #[test]
    fn invalid_types_rejected() {
        for (letter, rank) in [('A', 0), ('B', 1), ('D', 2), ('E', 5), ('E', 9), ('F', 3), ('G', 3), ('H', 2)] {
            assert!(matches!(
                RootSystem::new(letter, rank),
                Err(RootSystemError::InvalidType { .. })
            ));
        }
    }

    #[test]
    fn g2_highest_root() {
        let g2 = rs('G', 2);
        assert_eq!(*g2.highest_root(), Weight::from_integers(&[3, 2]));
        // Dominant with fundamental coordinates (0, 1).
        assert_eq!(
            g2.to_fundamental(g2.highest_root()),
            vec![Coord::zero(), Coord::from_integer(1)]
        );
    }

    #[test]
    fn c3_highest_root_is_twice_first_fundamental() {
        let c3 = rs('C', 3);
        assert_eq!(
            c3.to_fundamental(c3.highest_root()),
            vec![Coord::from_integer(2), Coord::zero(), Coord::zero()]
        );
        assert_eq!(*c3.highest_root(), Weight::from_integers(&[2, 2, 1]));
    }

    #[test]
    fn b4_highest_root_is_second_fundamental() {
        let b4 = rs('B', 4);
        assert_eq!(
            b4.to_fundamental(b4.highest_root()),
            vec![
                Coord::zero(),
                Coord::from_integer(1),
                Coord::zero(),
                Coord::zero()
            ]
        );
    }

    #[test]
    fn a1_basics() {
        let a1 = rs('A', 1);
        assert_eq!(a1.positive_roots(), &[Weight::from_integers(&[1])]);
        assert_eq!(*a1.rho(), Weight::from_coords(vec![Coord::new(1, 2)]));
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs('A', 2);
        assert_eq!(
            a2.pairing(&Weight::from_integers(&[1, 1]), 1),
            Coord::from_integer(1)
        );
        let g2 = rs('G', 2);
        let top = g2.highest_root().clone();
        assert_eq!(g2.pairing(&top, 1), Coord::zero());
        assert_eq!(g2.pairing(&top, 2), Coord::from_integer(1));
        assert_eq!(g2.pairing(&Weight::zero(2), 1), Coord::zero());
    }

    #[test]
    fn fundamental_coordinate_round_trip() {
        for (letter, rank) in [('A', 3), ('B', 3), ('C', 3), ('D', 4), ('F', 4), ('G', 2)] {
            let r = rs(letter, rank);
            for beta in r.positive_roots() {
                let v = r.to_fundamental(beta);
                assert_eq!(r.to_simple(&v), *beta);
            }
            assert_eq!(
                r.to_fundamental(r.rho()),
                vec![Coord::from_integer(1); rank]
            );
        }
    }

    #[test]
    fn a2_fundamental_of_simple_root() {
        let a2 = rs('A', 2);
        assert_eq!(
            a2.to_fundamental(&a2.simple_root(1)),
            vec![Coord::from_integer(2), Coord::from_integer(-1)]
        );
    }

    #[test]
    fn c3_to_simple_of_highest_fundamental_coords() {
        let c3 = rs('C', 3);
        let v = [Coord::from_integer(2), Coord::zero(), Coord::zero()];
        assert_eq!(c3.to_simple(&v), Weight::from_integers(&[2, 2, 1]));
    }

    #[test]
    fn closure_under_addition() {
        // If a sum of two positive roots lands back in the root lattice as
        // a root, it must be in the generated set; verified by reflection
        // stability plus the string property below, and brute-forced here.
        for (letter, rank) in [('A', 3), ('B', 3), ('C', 3), ('G', 2), ('F', 4)] {
            let r = rs(letter, rank);
            for beta in r.positive_roots() {
                for gamma in r.positive_roots() {
                    let sum = beta + gamma;
                    if r.is_root(&sum) {
                        assert!(r.is_positive_root(&sum));
                    }
                }
            }
        }
    }

    #[test]
    fn string_property_exhaustive_small_rank() {
        // For β ≠ ±α_i the α_i-string through β is unbroken with length
        // 1 + ⟨top, α_i∨⟩.
        for (letter, rank) in canonical_types(5) {
            let r = rs(letter, rank);
            let mut all_roots: Vec<Weight> = r.positive_roots().to_vec();
            all_roots.extend(r.positive_roots().iter().map(|b| -b));
            for i in r.simple_indices() {
                let alpha = r.simple_root(i);
                for beta in &all_roots {
                    if *beta == alpha || *beta == -(&alpha) {
                        continue;
                    }
                    let mut top = beta.clone();
                    while r.is_root(&(&top + &alpha)) {
                        top = &top + &alpha;
                    }
                    let pairing = r.pairing(&top, i);
                    assert!(pairing.is_integer() && !pairing.is_negative());
                    let len = 1 + pairing.to_integer();
                    let mut cur = top.clone();
                    for _ in 0..len {
                        assert!(r.is_root(&cur));
                        cur = &cur - &alpha;
                    }
                    assert!(!r.is_root(&cur));
                }
            }
        }
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(rs('B', 3).symmetrizer, vec![2, 2, 1]);
        assert_eq!(rs('C', 3).symmetrizer, vec![1, 1, 2]);
        assert_eq!(rs('G', 2).symmetrizer, vec![1, 3]);
        assert_eq!(rs('F', 4).symmetrizer, vec![2, 2, 1, 1]);
        assert_eq!(rs('A', 3).symmetrizer, vec![1, 1, 1]);
    }
}
