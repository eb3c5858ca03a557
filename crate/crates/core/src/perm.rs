//! Permutations of `[n]` in one-line notation and the symmetric group as a
//! Coxeter backend.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::convexity::InversionTable;
use crate::coxeter::{CoxeterBackend, ReflectionSet};
use crate::{Error, Result};

/// A permutation `w` of `[n]` stored by its one-line notation
/// `w(1) ... w(n)` together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    line: Vec<u8>,
    inv: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        let line: Vec<u8> = (1..=n as u8).collect();
        Permutation { inv: line.clone(), line }
    }

    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        let n = line.len();
        if n > 64 {
            return Err(Error::InvalidPermutation("more than 64 letters".into()));
        }
        let mut inv = vec![0u8; n];
        for (pos, &v) in line.iter().enumerate() {
            if v == 0 || v > n || inv[v - 1] != 0 {
                return Err(Error::InvalidPermutation(format!("{line:?} is not a permutation of [{n}]")));
            }
            inv[v - 1] = pos as u8 + 1;
        }
        Ok(Permutation {
            line: line.iter().map(|&v| v as u8).collect(),
            inv,
        })
    }

    pub fn n(&self) -> usize {
        self.line.len()
    }

    /// `w(i)` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.line[i - 1] as usize
    }

    /// `w^{-1}(i)`: the position of value `i`.
    pub fn position(&self, i: usize) -> usize {
        self.inv[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.line.iter().map(|&v| v as usize).collect()
    }

    pub fn inverse(&self) -> Self {
        Permutation {
            line: self.inv.clone(),
            inv: self.line.clone(),
        }
    }

    /// The product `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        let line: Vec<usize> = (1..=self.n()).map(|i| self.apply(other.apply(i))).collect();
        Permutation::from_one_line(&line).expect("product of permutations")
    }

    /// `w * w0`: the one-line notation read backwards.
    pub fn reversed(&self) -> Self {
        let mut line = self.one_line();
        line.reverse();
        Permutation::from_one_line(&line).expect("reversal of a permutation")
    }

    /// `w * s_i`: swaps positions `i` and `i + 1`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut line = self.one_line();
        line.swap(i - 1, i);
        Permutation::from_one_line(&line).expect("adjacent swap")
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.n();
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.line[i - 1] > self.line[j - 1])
            .count()
    }

    /// `T_L(w)`: transpositions `t_{i,j}` (`i < j`) with `w^{-1}(i) > w^{-1}(j)`.
    pub fn left_inversions(&self) -> ReflectionSet<(usize, usize)> {
        let n = self.n();
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.position(i) > self.position(j))
            .collect()
    }

    /// `T_L(w)` as a bit mask; see [`transposition_bit`].
    pub fn inversion_mask(&self) -> u64 {
        let n = self.n();
        self.left_inversions()
            .into_iter()
            .fold(0, |m, (i, j)| m | 1 << transposition_bit(n, i, j))
    }
}

/// Bit index of `t_{i,j}` (`i < j`) among the `n(n-1)/2` transpositions,
/// ordered lexicographically.
pub fn transposition_bit(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            for v in &self.line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.line.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`"45312"`) or whitespace/comma separated
    /// values (`"10 2 1 ..."`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(format!("cannot parse `{s}`"));
        let values: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(&values)
    }
}

/// All permutations of `[n]` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::from_one_line(prefix).expect("valid"));
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v);
                rec(n, prefix, used, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// The symmetric group `S_n` with simple generators `s_i = (i i+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetricGroup {
    pub n: usize,
}

impl CoxeterBackend for SymmetricGroup {
    type Element = Permutation;
    type Reflection = (usize, usize);

    fn rank(&self) -> usize {
        self.n.saturating_sub(1)
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }

    fn mul_generator(&self, w: &Permutation, g: usize) -> Permutation {
        w.mul_simple(g)
    }

    fn length(&self, w: &Permutation) -> usize {
        w.length()
    }

    fn conjugate_generator(&self, a: &Permutation, g: usize) -> (usize, usize) {
        // a (g g+1) a^{-1} = (a(g) a(g+1))
        let (x, y) = (a.apply(g), a.apply(g + 1));
        (x.min(y), x.max(y))
    }

    fn inversion_set(&self, w: &Permutation) -> ReflectionSet<(usize, usize)> {
        w.left_inversions()
    }
}

/// Every element of `S_n` with its inversion mask, in lexicographic order
/// (the identity first).
#[derive(Debug, Clone)]
pub struct PermutationTable {
    perms: Vec<Permutation>,
    masks: Vec<u64>,
    index: HashMap<Permutation, usize>,
}

impl PermutationTable {
    pub fn new(n: usize) -> Self {
        assert!(n * n.saturating_sub(1) / 2 <= 64, "S_{n} has too many reflections for a 64-bit mask");
        let perms = all_permutations(n);
        let masks = perms.iter().map(Permutation::inversion_mask).collect();
        let index = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PermutationTable { perms, masks, index }
    }

    pub fn perm(&self, idx: usize) -> &Permutation {
        &self.perms[idx]
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }
}

impl InversionTable for PermutationTable {
    fn len(&self) -> usize {
        self.perms.len()
    }

    fn mask(&self, idx: usize) -> u64 {
        self.masks[idx]
    }

    fn label(&self, idx: usize) -> String {
        self.perms[idx].to_string()
    }
}
