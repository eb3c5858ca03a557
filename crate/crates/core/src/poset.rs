//! Finite posets on labelled elements `p_1, ..., p_n` and their linear
//! extensions.
//!
//! Elements are 1-based in the public API. The strict order is stored as
//! transitive "strictly above" / "strictly below" bit sets, so `n <= 64`.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;
use crate::relabel::{compress, expand};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    n: usize,
    /// `above[i]` has bit `j` set iff `p_{i+1} < p_{j+1}`.
    above: Vec<u64>,
    below: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PosetFile {
    n: usize,
    covers: Vec<[usize; 2]>,
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

impl Poset {
    /// Builds the poset whose relation is the transitive closure of `rel`
    /// (1-based arguments). Fails if the closure has a cycle.
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n > 64 {
            return Err(Error::InvalidPoset("at most 64 elements".into()));
        }
        let mut above = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && rel(i + 1, j + 1) {
                    above[i] |= 1 << j;
                }
            }
        }
        Self::close(n, above)
    }

    /// Builds a poset from cover pairs `(i, j)` meaning `p_i < p_j`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        for &(i, j) in covers {
            if i == 0 || j == 0 || i > n || j > n || i == j {
                return Err(Error::InvalidPoset(format!("bad cover ({i}, {j}) for n = {n}")));
            }
        }
        Self::from_relation(n, |i, j| covers.contains(&(i, j)))
    }

    fn close(n: usize, mut above: Vec<u64>) -> Result<Self> {
        // Warshall on bit rows
        for k in 0..n {
            for i in 0..n {
                if above[i] >> k & 1 == 1 {
                    above[i] |= above[k];
                }
            }
        }
        if (0..n).any(|i| above[i] >> i & 1 == 1) {
            return Err(Error::InvalidPoset("relation has a cycle".into()));
        }
        let mut below = vec![0u64; n];
        for i in 0..n {
            for j in bits(above[i]) {
                below[j] |= 1 << i;
            }
        }
        Ok(Poset { n, above, below })
    }

    pub fn chain(n: usize) -> Self {
        Self::from_relation(n, |i, j| i < j).expect("chain")
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            n,
            above: vec![0; n],
            below: vec![0; n],
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: PosetFile = serde_json::from_str(s)?;
        let covers: Vec<(usize, usize)> = file.covers.iter().map(|&[i, j]| (i, j)).collect();
        Self::from_covers(file.n, &covers)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let file = PosetFile {
            n: self.n,
            covers: self.covers().into_iter().map(|(i, j)| [i, j]).collect(),
        };
        serde_json::to_string(&file).expect("poset serializes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_i < p_j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i - 1] >> (j - 1) & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less(i, j) || self.less(j, i)
    }

    /// Bit set (bit `j - 1` for `p_j`) of elements strictly above `p_i`.
    pub fn above_mask(&self, i: usize) -> u64 {
        self.above[i - 1]
    }

    pub fn below_mask(&self, i: usize) -> u64 {
        self.below[i - 1]
    }

    /// Elements covering `p_i`, as a bit set.
    pub fn upper_covers_mask(&self, i: usize) -> u64 {
        let up = self.above[i - 1];
        bits(up).fold(up, |m, j| m & !self.above[j])
    }

    /// Elements covered by `p_i`, as a bit set.
    pub fn lower_covers_mask(&self, i: usize) -> u64 {
        let down = self.below[i - 1];
        bits(down).fold(down, |m, j| m & !self.below[j])
    }

    /// Cover pairs `(i, j)` with `p_i ⋖ p_j`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|i| bits(self.upper_covers_mask(i)).map(move |j| (i, j + 1)))
            .collect()
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.above[i - 1] == 0
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        self.below[i - 1] == 0
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.is_maximal(i)).collect()
    }

    /// `P \ {p_a}` with the remaining labels compressed to `1..n-1`.
    pub fn remove(&self, a: usize) -> Poset {
        Poset::from_relation(self.n - 1, |i, j| self.less(expand(i, a), expand(j, a))).expect("subposet")
    }

    /// Relation pairs `(i, j)` with `p_i < p_j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|i| bits(self.above[i - 1]).map(move |j| (i, j + 1)))
            .collect()
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n = {}, covers = {:?})", self.n, self.covers())
    }
}

/// An order-preserving bijection `λ: P -> [n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    /// `values[i - 1] = λ(p_i)`.
    values: Vec<usize>,
}

impl LinearExtension {
    /// Wraps a value array after checking it is a linear extension of `poset`.
    pub fn new(poset: &Poset, values: Vec<usize>) -> Result<Self> {
        let ext = LinearExtension { values };
        if ext.is_extension_of(poset) {
            Ok(ext)
        } else {
            Err(Error::InvalidPoset(format!("{:?} is not a linear extension", ext.values)))
        }
    }

    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        LinearExtension { values }
    }

    /// The extension `λ` with `π_λ = w`, i.e. `λ(p_{w(i)}) = i`.
    pub fn from_permutation(poset: &Poset, w: &Permutation) -> Result<Self> {
        let values = (1..=w.n()).map(|j| w.position(j)).collect();
        Self::new(poset, values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `λ(p_i)`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `λ^{-1}(v)`.
    pub fn element_with_value(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x == v).expect("value in range") + 1
    }

    /// `π_λ` with `π_λ(i) = j` iff `λ(p_j) = i`.
    pub fn permutation(&self) -> Permutation {
        let mut line = vec![0; self.n()];
        for (j, &v) in self.values.iter().enumerate() {
            line[v - 1] = j + 1;
        }
        Permutation::from_one_line(&line).expect("bijection")
    }

    pub fn is_extension_of(&self, poset: &Poset) -> bool {
        let n = poset.n();
        if self.values.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &self.values {
            if v == 0 || v > n || seen[v - 1] {
                return false;
            }
            seen[v - 1] = true;
        }
        poset.relations().into_iter().all(|(i, j)| self.value(i) < self.value(j))
    }
}

impl fmt::Debug for LinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearExtension({:?})", self.values)
    }
}

/// Every linear extension of `poset`, sorted lexicographically by value array.
pub fn linear_extensions(poset: &Poset) -> Vec<LinearExtension> {
    fn rec(poset: &Poset, placed: u64, order: &mut Vec<usize>, out: &mut Vec<LinearExtension>) {
        let n = poset.n();
        if order.len() == n {
            let mut values = vec![0; n];
            for (k, &i) in order.iter().enumerate() {
                values[i - 1] = k + 1;
            }
            out.push(LinearExtension { values });
            return;
        }
        for i in 1..=n {
            if placed >> (i - 1) & 1 == 0 && poset.below_mask(i) & !placed == 0 {
                order.push(i);
                rec(poset, placed | 1 << (i - 1), order, out);
                order.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(poset, 0, &mut Vec::with_capacity(poset.n()), &mut out);
    out.sort();
    out
}

/// `e(P)`, counted by backtracking over order ideals (memoized).
pub fn count_linear_extensions(poset: &Poset) -> u64 {
    fn rec(poset: &Poset, placed: u64, full: u64, memo: &mut HashMap<u64, u64>) -> u64 {
        if placed == full {
            return 1;
        }
        if let Some(&c) = memo.get(&placed) {
            return c;
        }
        let count = (1..=poset.n())
            .filter(|&i| placed >> (i - 1) & 1 == 0 && poset.below_mask(i) & !placed == 0)
            .map(|i| rec(poset, placed | 1 << (i - 1), full, memo))
            .sum();
        memo.insert(placed, count);
        count
    }
    let full = crate::finite::full_mask(poset.n());
    rec(poset, 0, full, &mut HashMap::new())
}

/// Restricts an extension of `P \ {p_a}` (compressed labels) back onto the
/// labels of `P`, leaving `p_a` with value 0.
pub(crate) fn lift_values(ext: &LinearExtension, a: usize) -> Vec<usize> {
    let n = ext.n() + 1;
    (1..=n).map(|i| if i == a { 0 } else { ext.value(compress(i, a)) }).collect()
}
