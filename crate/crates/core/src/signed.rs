//! Signed permutations of `±[n]` and the hyperoctahedral group `B_n`.
//!
//! Generator 1 is the sign change `t_{1,-1}` (negate the first entry);
//! generator `k + 1` is `t_{k,k+1}` (swap entries `k` and `k + 1`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::convexity::InversionTable;
use crate::coxeter::{CoxeterBackend, ReflectionSet};
use crate::perm::{all_permutations, transposition_bit};
use crate::{Error, Result};

/// A signed permutation `w` with `w(-i) = -w(i)`, stored as
/// `w(1) ... w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    line: Vec<i32>,
}

/// A reflection of `B_n` written `(i, j)`: `t_{i,j}` for `0 < i < j`,
/// `t_{i,-j}` for `0 < i < |j|, j < 0`, and `t_{i,-i}`.
pub type SignedReflection = (i32, i32);

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            line: (1..=n as i32).collect(),
        }
    }

    pub fn from_one_line(line: &[i32]) -> Result<Self> {
        let n = line.len() as i32;
        let mut seen = vec![false; line.len()];
        for &v in line {
            if v == 0 || v.abs() > n || seen[(v.abs() - 1) as usize] {
                return Err(Error::InvalidPermutation(format!("{line:?} is not a signed permutation of ±[{n}]")));
            }
            seen[(v.abs() - 1) as usize] = true;
        }
        Ok(SignedPermutation { line: line.to_vec() })
    }

    pub fn n(&self) -> usize {
        self.line.len()
    }

    pub fn one_line(&self) -> &[i32] {
        &self.line
    }

    /// `w(i)` for `i` in `±[n]`.
    pub fn apply(&self, i: i32) -> i32 {
        i.signum() * self.line[(i.abs() - 1) as usize]
    }

    /// `w^{-1}(i)` for `i` in `±[n]`.
    pub fn position(&self, i: i32) -> i32 {
        let p = self.line.iter().position(|&v| v.abs() == i.abs()).expect("value present") as i32 + 1;
        if self.line[(p - 1) as usize] == i {
            p
        } else {
            -p
        }
    }

    pub fn inverse(&self) -> Self {
        let line: Vec<i32> = (1..=self.n() as i32).map(|i| self.position(i)).collect();
        SignedPermutation { line }
    }

    /// `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        let line = (1..=self.n() as i32).map(|i| self.apply(other.apply(i))).collect();
        SignedPermutation { line }
    }

    /// `w * w0` with `w0 = -id`: every entry negated.
    pub fn times_longest(&self) -> Self {
        SignedPermutation {
            line: self.line.iter().map(|v| -v).collect(),
        }
    }

    /// `w * s_g` for a 1-based generator.
    pub fn mul_generator(&self, g: usize) -> Self {
        let mut line = self.line.clone();
        if g == 1 {
            line[0] = -line[0];
        } else {
            line.swap(g - 2, g - 1);
        }
        SignedPermutation { line }
    }

    /// `T_L(w)` by the one-line rules: `t_{i,j}` if `w^{-1}(i) > w^{-1}(j)`,
    /// `t_{i,-j}` if `w^{-1}(i) < w^{-1}(-j)`, `t_{i,-i}` if
    /// `w^{-1}(i) < w^{-1}(-i)`.
    pub fn left_inversions(&self) -> ReflectionSet<SignedReflection> {
        let n = self.n() as i32;
        let mut set = ReflectionSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.position(i) > self.position(j) {
                    set.insert((i, j));
                }
                if self.position(i) < self.position(-j) {
                    set.insert((i, -j));
                }
            }
            if self.position(i) < self.position(-i) {
                set.insert((i, -i));
            }
        }
        set
    }

    pub fn length(&self) -> usize {
        self.left_inversions().len()
    }

    pub fn inversion_mask(&self) -> u64 {
        let n = self.n();
        self.left_inversions()
            .into_iter()
            .fold(0, |m, t| m | 1 << signed_reflection_bit(n, t))
    }
}

/// Canonical name of the reflection swapping `x <-> y` (and `-x <-> -y`).
pub fn signed_reflection(x: i32, y: i32) -> SignedReflection {
    let (mut a, mut b) = if x.abs() <= y.abs() { (x, y) } else { (y, x) };
    if a < 0 {
        a = -a;
        b = -b;
    }
    (a, b)
}

/// Bit index of a reflection among the `n^2` reflections of `B_n`.
pub fn signed_reflection_bit(n: usize, (i, j): SignedReflection) -> usize {
    let pairs = n * (n - 1) / 2;
    let (i, aj) = (i as usize, j.unsigned_abs() as usize);
    if aj == i {
        2 * pairs + i - 1
    } else if j > 0 {
        transposition_bit(n, i, aj)
    } else {
        pairs + transposition_bit(n, i, aj)
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation({self})")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.line.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Space or comma separated signed integers, e.g. `"4 -2 1 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::InvalidPermutation(format!("cannot parse `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::from_one_line(&values)
    }
}

/// All `2^n n!` signed permutations, ordered by underlying permutation and
/// then by sign pattern (the identity first).
pub fn all_signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::with_capacity((1 << n) * all_permutations(n).len());
    for p in all_permutations(n) {
        let base: Vec<i32> = p.one_line().iter().map(|&v| v as i32).collect();
        for signs in 0u32..1 << n {
            let line = base
                .iter()
                .enumerate()
                .map(|(k, &v)| if signs >> k & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation { line });
        }
    }
    out
}

/// The hyperoctahedral group `B_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hyperoctahedral {
    pub n: usize,
}

impl CoxeterBackend for Hyperoctahedral {
    type Element = SignedPermutation;
    type Reflection = SignedReflection;

    fn rank(&self) -> usize {
        self.n
    }

    fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.n)
    }

    fn mul_generator(&self, w: &SignedPermutation, g: usize) -> SignedPermutation {
        w.mul_generator(g)
    }

    fn length(&self, w: &SignedPermutation) -> usize {
        w.length()
    }

    fn conjugate_generator(&self, a: &SignedPermutation, g: usize) -> SignedReflection {
        if g == 1 {
            let x = a.apply(1).abs();
            (x, -x)
        } else {
            signed_reflection(a.apply(g as i32 - 1), a.apply(g as i32))
        }
    }

    fn inversion_set(&self, w: &SignedPermutation) -> ReflectionSet<SignedReflection> {
        w.left_inversions()
    }
}

/// Every element of `B_n` with its inversion mask; index 0 is the identity.
#[derive(Debug, Clone)]
pub struct SignedPermutationTable {
    perms: Vec<SignedPermutation>,
    masks: Vec<u64>,
    index: HashMap<SignedPermutation, usize>,
}

impl SignedPermutationTable {
    pub fn new(n: usize) -> Self {
        assert!(n * n <= 64, "B_{n} has too many reflections for a 64-bit mask");
        let perms = all_signed_permutations(n);
        let masks = perms.iter().map(SignedPermutation::inversion_mask).collect();
        let index = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        SignedPermutationTable { perms, masks, index }
    }

    pub fn perm(&self, idx: usize) -> &SignedPermutation {
        &self.perms[idx]
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn perms(&self) -> &[SignedPermutation] {
        &self.perms
    }
}

impl InversionTable for SignedPermutationTable {
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
