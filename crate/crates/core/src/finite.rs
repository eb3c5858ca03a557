//! Finite Coxeter groups realized through the geometric representation.
//!
//! Roots are found numerically (form entries `-cos(pi / m_ij)`) and
//! deduplicated with a fixed tolerance; from then on everything is exact
//! index and bit-mask arithmetic.

use std::collections::{HashMap, VecDeque};
use std::f64::consts::PI;

use crate::convexity::InversionTable;
use crate::coxeter::{CoxeterBackend, CoxeterMatrix, ReflectionSet, Word};
use crate::{Error, Result};

/// Tolerance used when identifying numerically computed roots.
pub const ROOT_TOLERANCE: f64 = 1e-9;

/// Default cap on the total number of roots explored by the closure.
pub const DEFAULT_ROOT_CAP: usize = 200;

/// Inversion set of an element as a bit mask over positive-root indices.
pub type InversionMask = u64;

#[derive(Debug, Clone)]
pub struct RootSystem {
    rank: usize,
    /// Coordinates in the simple-root basis.
    roots: Vec<Vec<f64>>,
    /// `positive_index[r]` is the bit index of root `r` when it is positive.
    positive_index: Vec<Option<usize>>,
    /// Root index for each positive bit.
    positive_roots: Vec<usize>,
    /// `action[g][r]` is the index of `s_g(root r)` (0-based generator).
    action: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root(&self, r: usize) -> &[f64] {
        &self.roots[r]
    }

    pub fn is_positive(&self, r: usize) -> bool {
        self.positive_index[r].is_some()
    }

    pub fn positive_bit(&self, r: usize) -> Option<usize> {
        self.positive_index[r]
    }

    /// Root index of the `bit`-th positive root.
    pub fn positive_root(&self, bit: usize) -> usize {
        self.positive_roots[bit]
    }

    /// Index of `s_g(root r)` for a 1-based generator.
    pub fn act(&self, g: usize, r: usize) -> usize {
        self.action[g - 1][r]
    }

    /// Index of the negated root.
    pub fn negation(&self, r: usize) -> usize {
        let target: Vec<f64> = self.roots[r].iter().map(|x| -x).collect();
        find_root(&self.roots, &target).expect("root systems are closed under negation")
    }
}

fn find_root(roots: &[Vec<f64>], v: &[f64]) -> Option<usize> {
    roots
        .iter()
        .position(|r| r.iter().zip(v).all(|(a, b)| (a - b).abs() < ROOT_TOLERANCE))
}

/// Closes the simple roots under the generator actions.
pub fn build_root_system(matrix: &CoxeterMatrix, cap: usize) -> Result<RootSystem> {
    let rank = matrix.rank();
    let form = |i: usize, j: usize| -> f64 {
        match matrix.order(i + 1, j + 1) {
            None => -1.0,
            Some(m) => -(PI / f64::from(m)).cos(),
        }
    };
    let reflect = |g: usize, v: &[f64]| -> Vec<f64> {
        // s_g(v) = v - 2 B(alpha_g, v) alpha_g
        let b: f64 = (0..rank).map(|j| form(g, j) * v[j]).sum();
        let mut out = v.to_vec();
        out[g] -= 2.0 * b;
        out
    };

    let mut roots: Vec<Vec<f64>> = (0..rank)
        .map(|i| {
            let mut e = vec![0.0; rank];
            e[i] = 1.0;
            e
        })
        .collect();
    let mut action: Vec<Vec<usize>> = vec![Vec::new(); rank];
    let mut next = 0;
    while next < roots.len() {
        for g in 0..rank {
            let image = reflect(g, &roots[next]);
            let idx = match find_root(&roots, &image) {
                Some(idx) => idx,
                None => {
                    if roots.len() >= cap {
                        return Err(Error::NotFiniteType { cap });
                    }
                    roots.push(image);
                    roots.len() - 1
                }
            };
            action[g].push(idx);
        }
        next += 1;
    }

    let mut positive_index = vec![None; roots.len()];
    let mut positive_roots = Vec::new();
    for (r, coords) in roots.iter().enumerate() {
        let nonneg = coords.iter().all(|&x| x > -ROOT_TOLERANCE);
        let nonpos = coords.iter().all(|&x| x < ROOT_TOLERANCE);
        if nonneg == nonpos {
            return Err(Error::InvalidMatrix(format!("root {r} is neither positive nor negative")));
        }
        if nonneg {
            positive_index[r] = Some(positive_roots.len());
            positive_roots.push(r);
        }
    }
    Ok(RootSystem {
        rank,
        roots,
        positive_index,
        positive_roots,
        action,
    })
}

/// A fully enumerated finite Coxeter group.
///
/// Elements are indexed in breadth-first order from the identity, exploring
/// generators in increasing order; element 0 is the identity.
#[derive(Debug, Clone)]
pub struct GroupTable {
    matrix: CoxeterMatrix,
    roots: RootSystem,
    /// Action of each element on root indices.
    perms: Vec<Vec<u16>>,
    lookup: HashMap<Vec<u16>, usize>,
    masks: Vec<InversionMask>,
    lengths: Vec<u32>,
    /// `mul[w * rank + g]` is the index of `w s_{g+1}`.
    mul: Vec<usize>,
    /// BFS parent and the generator leading to each element.
    parent: Vec<(usize, usize)>,
    longest: usize,
}

impl GroupTable {
    /// Realizes and enumerates a finite-type matrix.
    pub fn from_matrix(matrix: &CoxeterMatrix, root_cap: usize) -> Result<Self> {
        let roots = build_root_system(matrix, root_cap)?;
        enumerate_group(matrix, roots)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn order(&self) -> usize {
        self.masks.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w] as usize
    }

    pub fn mask(&self, w: usize) -> InversionMask {
        self.masks[w]
    }

    pub fn masks(&self) -> &[InversionMask] {
        &self.masks
    }

    /// Mask with every positive root set.
    pub fn full_mask(&self) -> InversionMask {
        full_mask(self.roots.positive_count())
    }

    /// `w s_g` for a 1-based generator.
    pub fn mul_gen(&self, w: usize, g: usize) -> usize {
        self.mul[w * self.rank() + g - 1]
    }

    pub fn multiply(&self, u: usize, v: usize) -> usize {
        let pu = &self.perms[u];
        let composed: Vec<u16> = self.perms[v].iter().map(|&r| pu[r as usize]).collect();
        self.lookup[&composed]
    }

    pub fn inverse(&self, w: usize) -> usize {
        let p = &self.perms[w];
        let mut inv = vec![0u16; p.len()];
        for (r, &img) in p.iter().enumerate() {
            inv[img as usize] = r as u16;
        }
        self.lookup[&inv]
    }

    /// Root index of `w(root r)`.
    pub fn act_on_root(&self, w: usize, r: usize) -> usize {
        self.perms[w][r] as usize
    }

    /// The breadth-first reduced word of `w`.
    pub fn word(&self, w: usize) -> Word {
        let mut letters = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while cur != 0 {
            let (p, g) = self.parent[cur];
            letters.push(g);
            cur = p;
        }
        letters.reverse();
        Word {
            letters,
            reduced: true,
        }
    }

    /// Element reached by evaluating a word from the identity.
    pub fn element(&self, word: &Word) -> Result<usize> {
        word.letters.iter().try_fold(0, |w, &g| {
            self.matrix.check_generator(g)?;
            Ok(self.mul_gen(w, g))
        })
    }

    /// Reflection `w s_g w^{-1}` as a positive-root bit index.
    pub fn reflection_bit(&self, w: usize, g: usize) -> usize {
        let simple = g - 1;
        let mut r = self.act_on_root(w, simple);
        if !self.roots.is_positive(r) {
            r = self.roots.negation(r);
        }
        self.roots.positive_bit(r).expect("positive")
    }

    /// The reflection corresponding to a positive root, as a group element.
    pub fn reflection_element(&self, bit: usize) -> usize {
        let target = self.roots.positive_root(bit);
        for w in 0..self.order() {
            for g in 1..=self.rank() {
                if self.act_on_root(w, g - 1) == target {
                    let a = w;
                    return self.multiply(self.mul_gen(a, g), self.inverse(a));
                }
            }
        }
        unreachable!("every positive root is in the orbit of a simple root")
    }
}

pub(crate) fn full_mask(bits: usize) -> InversionMask {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Breadth-first closure of the identity under right multiplication.
pub fn enumerate_group(matrix: &CoxeterMatrix, roots: RootSystem) -> Result<GroupTable> {
    let rank = matrix.rank();
    let positive = roots.positive_count();
    if positive > 64 {
        return Err(Error::MaskTooWide { positive });
    }
    let root_count = roots.root_count();
    let identity: Vec<u16> = (0..root_count as u16).collect();

    let mut perms = vec![identity.clone()];
    let mut lookup = HashMap::from([(identity, 0usize)]);
    let mut lengths = vec![0u32];
    let mut parent = vec![(0usize, 0usize)];
    let mut mul: Vec<usize> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        debug_assert_eq!(mul.len(), w * rank);
        for g in 0..rank {
            let pw = &perms[w];
            let next: Vec<u16> = (0..root_count).map(|r| pw[roots.action[g][r]]).collect();
            let idx = match lookup.get(&next) {
                Some(&idx) => idx,
                None => {
                    let idx = perms.len();
                    lookup.insert(next.clone(), idx);
                    perms.push(next);
                    lengths.push(lengths[w] + 1);
                    parent.push((w, g + 1));
                    queue.push_back(idx);
                    idx
                }
            };
            mul.push(idx);
        }
    }

    // bit t of mask(w) is set iff w^{-1} sends positive root t negative
    let masks: Vec<InversionMask> = perms
        .iter()
        .map(|p| {
            let mut inv = vec![0usize; root_count];
            for (r, &img) in p.iter().enumerate() {
                inv[img as usize] = r;
            }
            (0..positive).fold(0u64, |m, bit| {
                let r = roots.positive_roots[bit];
                if roots.is_positive(inv[r]) {
                    m
                } else {
                    m | (1 << bit)
                }
            })
        })
        .collect();

    let full = full_mask(positive);
    let longest = masks
        .iter()
        .position(|&m| m == full)
        .ok_or_else(|| Error::InvalidMatrix("no element inverts every positive root".into()))?;
    Ok(GroupTable {
        matrix: matrix.clone(),
        roots,
        perms,
        lookup,
        masks,
        lengths,
        mul,
        parent,
        longest,
    })
}

impl InversionTable for GroupTable {
    fn len(&self) -> usize {
        self.masks.len()
    }

    fn mask(&self, idx: usize) -> u64 {
        self.masks[idx]
    }

    fn label(&self, idx: usize) -> String {
        self.word(idx).to_string()
    }
}

impl CoxeterBackend for GroupTable {
    type Element = usize;
    type Reflection = usize;

    fn rank(&self) -> usize {
        self.matrix.rank()
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul_generator(&self, w: &usize, g: usize) -> usize {
        self.mul_gen(*w, g)
    }

    fn length(&self, w: &usize) -> usize {
        self.lengths[*w] as usize
    }

    fn conjugate_generator(&self, a: &usize, g: usize) -> usize {
        self.reflection_bit(*a, g)
    }

    fn inversion_set(&self, w: &usize) -> ReflectionSet<usize> {
        let m = self.masks[*w];
        (0..64).filter(|b| m >> b & 1 == 1).collect()
    }

    fn reduced_word(&self, w: &usize) -> Word {
        self.word(*w)
    }
}

/// `mask(w)` for an element index.
pub fn inversion_mask(table: &GroupTable, w: usize) -> Result<InversionMask> {
    table.masks.get(w).copied().ok_or(Error::ElementOutOfRange(w))
}
