//! Hyperoctahedral side: type B posets on `p_{±1}, ..., p_{±n}`, their
//! antisymmetric linear extensions, the maps `φ_{p_k}` and `f_P`, and the
//! injection `B(P_{id,w,wu}) -> B(P_w) x B(wP_u)`.
//!
//! Elements are addressed by their signed label directly. Internally label
//! `x` lives at index `n + x` for `x < 0` and `n + x - 1` for `x > 0`, so
//! index order is label order.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::injection::InjectionCheck;
use crate::poset::bits;
use crate::relabel::{compress_signed, expand_signed};
use crate::signed::{all_signed_permutations, SignedPermutation};
use crate::type_a::SidorenkoReport;
use crate::{Error, Result};

/// A poset on `±[n]` with `p_i < p_j  =>  p_{-j} < p_{-i}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeBPoset {
    n: usize,
    above: Vec<u64>,
    below: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct TypeBPosetFile {
    n: usize,
    covers: Vec<[i32; 2]>,
}

fn index(n: usize, x: i32) -> usize {
    if x < 0 {
        (n as i32 + x) as usize
    } else {
        (n as i32 + x - 1) as usize
    }
}

fn label(n: usize, idx: usize) -> i32 {
    let (n, idx) = (n as i32, idx as i32);
    if idx < n {
        idx - n
    } else {
        idx - n + 1
    }
}

/// Signed labels `-n, ..., -1, 1, ..., n`.
pub fn signed_labels(n: usize) -> impl Iterator<Item = i32> + Clone {
    let n = n as i32;
    (-n..=n).filter(|&x| x != 0)
}

impl TypeBPoset {
    /// Transitive closure of `rel` on signed labels. Fails on cycles or if
    /// the result is not centrally symmetric.
    pub fn from_relation(n: usize, rel: impl Fn(i32, i32) -> bool) -> Result<Self> {
        if 2 * n > 64 {
            return Err(Error::InvalidPoset("at most 32 signed pairs".into()));
        }
        let mut above = vec![0u64; 2 * n];
        for x in signed_labels(n) {
            for y in signed_labels(n) {
                if x != y && rel(x, y) {
                    above[index(n, x)] |= 1 << index(n, y);
                }
            }
        }
        let poset = Self::close(n, above)?;
        if !poset.is_symmetric() {
            return Err(Error::InvalidPoset("relation is not centrally symmetric".into()));
        }
        Ok(poset)
    }

    /// Builds from signed cover pairs `(i, j)` meaning `p_i < p_j`. With
    /// `symmetrize`, the mirrored pair `(-j, -i)` is added for every cover.
    pub fn from_covers(n: usize, covers: &[(i32, i32)], symmetrize: bool) -> Result<Self> {
        for &(i, j) in covers {
            let ok = |x: i32| x != 0 && x.unsigned_abs() as usize <= n;
            if !ok(i) || !ok(j) || i == j {
                return Err(Error::InvalidPoset(format!("bad cover ({i}, {j}) for n = {n}")));
            }
        }
        Self::from_relation(n, |x, y| {
            covers.contains(&(x, y)) || (symmetrize && covers.contains(&(-y, -x)))
        })
    }

    fn close(n: usize, mut above: Vec<u64>) -> Result<Self> {
        let m = 2 * n;
        for k in 0..m {
            for i in 0..m {
                if above[i] >> k & 1 == 1 {
                    above[i] |= above[k];
                }
            }
        }
        if (0..m).any(|i| above[i] >> i & 1 == 1) {
            return Err(Error::InvalidPoset("relation has a cycle".into()));
        }
        let mut below = vec![0u64; m];
        for i in 0..m {
            for j in bits(above[i]) {
                below[j] |= 1 << i;
            }
        }
        Ok(TypeBPoset { n, above, below })
    }

    /// Loads `{"n": n, "covers": [[i, j], ...]}` with signed labels.
    pub fn from_json_str(s: &str, symmetrize: bool) -> Result<Self> {
        let file: TypeBPosetFile = serde_json::from_str(s)?;
        let covers: Vec<(i32, i32)> = file.covers.iter().map(|&[i, j]| (i, j)).collect();
        Self::from_covers(file.n, &covers, symmetrize)
    }

    pub fn from_json_file(path: impl AsRef<Path>, symmetrize: bool) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?, symmetrize)
    }

    pub fn to_json(&self) -> String {
        let file = TypeBPosetFile {
            n: self.n,
            covers: self.covers().into_iter().map(|(i, j)| [i, j]).collect(),
        };
        serde_json::to_string(&file).expect("poset serializes")
    }

    /// `p_{-n} < ... < p_{-1} < p_1 < ... < p_n`.
    pub fn chain(n: usize) -> Self {
        Self::from_relation(n, |x, y| x < y).expect("chain")
    }

    /// The poset with no relations at all.
    pub fn antichain(n: usize) -> Self {
        TypeBPoset {
            n,
            above: vec![0; 2 * n],
            below: vec![0; 2 * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn less(&self, x: i32, y: i32) -> bool {
        self.above[index(self.n, x)] >> index(self.n, y) & 1 == 1
    }

    pub fn comparable(&self, x: i32, y: i32) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    pub fn is_symmetric(&self) -> bool {
        self.relations().into_iter().all(|(x, y)| self.less(-y, -x))
    }

    pub fn is_maximal(&self, x: i32) -> bool {
        self.above[index(self.n, x)] == 0
    }

    pub fn maximal_elements(&self) -> Vec<i32> {
        signed_labels(self.n).filter(|&x| self.is_maximal(x)).collect()
    }

    fn lower_covers(&self, x: i32) -> Vec<i32> {
        let down = self.below[index(self.n, x)];
        let covers = bits(down).fold(down, |m, j| m & !self.below[j]);
        bits(covers).map(|j| label(self.n, j)).collect()
    }

    pub fn relations(&self) -> Vec<(i32, i32)> {
        (0..2 * self.n)
            .flat_map(|i| bits(self.above[i]).map(move |j| (label(self.n, i), label(self.n, j))))
            .collect()
    }

    pub fn covers(&self) -> Vec<(i32, i32)> {
        (0..2 * self.n)
            .flat_map(|i| {
                let up = self.above[i];
                let covers = bits(up).fold(up, |m, j| m & !self.above[j]);
                bits(covers).map(move |j| (label(self.n, i), label(self.n, j)))
            })
            .collect()
    }

    /// `P \ {p_a, p_{-a}}`, relabelled onto `±[n-1]`.
    pub fn remove_pair(&self, a: i32) -> TypeBPoset {
        TypeBPoset::from_relation(self.n - 1, |x, y| self.less(expand_signed(x, a), expand_signed(y, a)))
            .expect("restriction of a type B poset")
    }
}

impl fmt::Debug for TypeBPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeBPoset(n = {}, covers = {:?})", self.n, self.covers())
    }
}

/// An order-preserving bijection `λ: P -> ±[n]` with `λ(p_{-i}) = -λ(p_i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeBLinearExtension {
    n: usize,
    /// Values in index order (label `-n` first).
    values: Vec<i32>,
}

impl TypeBLinearExtension {
    /// Builds from `(label, value)` assignments for the positive labels;
    /// negatives are mirrored.
    pub fn from_positive_values(poset: &TypeBPoset, values: &[i32]) -> Result<Self> {
        let n = poset.n();
        if values.len() != n {
            return Err(Error::InvalidPoset("one value per positive label expected".into()));
        }
        let mut all = vec![0; 2 * n];
        for (k, &v) in values.iter().enumerate() {
            let x = k as i32 + 1;
            all[index(n, x)] = v;
            all[index(n, -x)] = -v;
        }
        let ext = TypeBLinearExtension { n, values: all };
        if ext.is_extension_of(poset) {
            Ok(ext)
        } else {
            Err(Error::InvalidPoset(format!("{values:?} is not a type B linear extension")))
        }
    }

    /// The extension with `π_λ = w`: `λ(p_j) = w^{-1}(j)`.
    pub fn from_permutation(poset: &TypeBPoset, w: &SignedPermutation) -> Result<Self> {
        let values: Vec<i32> = (1..=poset.n() as i32).map(|j| w.position(j)).collect();
        Self::from_positive_values(poset, &values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, x: i32) -> i32 {
        self.values[index(self.n, x)]
    }

    pub fn element_with_value(&self, v: i32) -> i32 {
        label(self.n, self.values.iter().position(|&x| x == v).expect("value in range"))
    }

    /// `π_λ` with `π_λ(i) = j` iff `λ(p_j) = i`.
    pub fn permutation(&self) -> SignedPermutation {
        let line: Vec<i32> = (1..=self.n as i32).map(|i| self.element_with_value(i)).collect();
        SignedPermutation::from_one_line(&line).expect("bijection")
    }

    pub fn is_extension_of(&self, poset: &TypeBPoset) -> bool {
        let n = poset.n();
        if self.n != n || self.values.len() != 2 * n {
            return false;
        }
        let mut seen = vec![false; 2 * n];
        for x in signed_labels(n) {
            let v = self.value(x);
            if v == 0 || v.unsigned_abs() as usize > n || self.value(-x) != -v {
                return false;
            }
            let slot = index(n, v);
            if seen[slot] {
                return false;
            }
            seen[slot] = true;
        }
        poset.relations().into_iter().all(|(x, y)| self.value(x) < self.value(y))
    }

    /// `(label, value)` for every element, labels ascending.
    pub fn assignments(&self) -> Vec<(i32, i32)> {
        signed_labels(self.n).map(|x| (x, self.value(x))).collect()
    }
}

impl fmt::Debug for TypeBLinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeBLinearExtension({:?})", self.assignments())
    }
}

/// `P_U` for `U ⊆ B_n`: `p_i < p_j` iff `u^{-1}(i) < u^{-1}(j)` for all `u`.
pub fn typeb_poset(perms: &[SignedPermutation]) -> Result<TypeBPoset> {
    let first = perms.first().ok_or(Error::Empty("type B poset of an empty set"))?;
    let n = first.n();
    if perms.iter().any(|u| u.n() != n) {
        return Err(Error::InvalidPermutation("signed permutations of different sizes".into()));
    }
    let poset = TypeBPoset::from_relation(n, |x, y| perms.iter().all(|u| u.position(x) < u.position(y)))?;
    assert!(poset.is_symmetric());
    Ok(poset)
}

/// `P_w = P_{id, w}`.
pub fn typeb_poset_of(w: &SignedPermutation) -> TypeBPoset {
    typeb_poset(&[SignedPermutation::identity(w.n()), w.clone()]).expect("nonempty")
}

/// Every type B linear extension, sorted by value array.
///
/// Values `-n, -n+1, ..., -1` are handed out in order, each to an element
/// whose lower set is already negative; the mirror image fills in the
/// positive values.
pub fn typeb_linear_extensions(poset: &TypeBPoset) -> Vec<TypeBLinearExtension> {
    fn rec(poset: &TypeBPoset, negative: u64, used: u64, order: &mut Vec<i32>, out: &mut Vec<TypeBLinearExtension>) {
        let n = poset.n();
        if order.len() == n {
            let mut values = vec![0; 2 * n];
            for (k, &x) in order.iter().enumerate() {
                let v = k as i32 - n as i32;
                values[index(n, x)] = v;
                values[index(n, -x)] = -v;
            }
            out.push(TypeBLinearExtension { n, values });
            return;
        }
        for x in signed_labels(n) {
            let (ix, imx) = (index(n, x), index(n, -x));
            if used >> ix & 1 == 0 && poset.below[ix] & !negative == 0 {
                order.push(x);
                rec(poset, negative | 1 << ix, used | 1 << ix | 1 << imx, order, out);
                order.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(poset, 0, 0, &mut Vec::with_capacity(poset.n()), &mut out);
    out.sort();
    out
}

/// `e_B(P)`.
pub fn count_typeb_extensions(poset: &TypeBPoset) -> u64 {
    fn rec(poset: &TypeBPoset, negative: u64, used: u64, depth: usize, memo: &mut HashMap<u64, u64>) -> u64 {
        let n = poset.n();
        if depth == n {
            return 1;
        }
        if let Some(&c) = memo.get(&negative) {
            return c;
        }
        let mut count = 0;
        for x in signed_labels(n) {
            let (ix, imx) = (index(n, x), index(n, -x));
            if used >> ix & 1 == 0 && poset.below[ix] & !negative == 0 {
                count += rec(poset, negative | 1 << ix, used | 1 << ix | 1 << imx, depth + 1, memo);
            }
        }
        memo.insert(negative, count);
        count
    }
    rec(poset, 0, 0, 0, &mut HashMap::new())
}

/// Swaps the values at `a` and `b` together with the mirrored pair; when
/// `b = -a` the two swaps are the same single swap.
fn mirrored_swap(n: usize, values: &mut [i32], a: i32, b: i32) {
    values.swap(index(n, a), index(n, b));
    if b != -a {
        values.swap(index(n, -a), index(n, -b));
    }
}

/// Moves the value at `a` upward within `within`, swapping with the
/// smallest-valued strictly greater element (and mirroring each swap).
fn bubble_up_signed(poset: &TypeBPoset, values: &mut [i32], mut a: i32, within: u64) {
    let n = poset.n();
    loop {
        let greater = poset.above[index(n, a)] & within;
        let Some(b) = bits(greater).min_by_key(|&j| values[j]) else {
            break;
        };
        let b = label(n, b);
        mirrored_swap(n, values, a, b);
        a = b;
    }
}

/// `φ_{p_k}: B(P \ {p_k, p_{-k}}) -> B(P)`; `ext` uses the labels of
/// [`TypeBPoset::remove_pair`].
pub fn typeb_phi(poset: &TypeBPoset, k: i32, ext: &TypeBLinearExtension) -> TypeBLinearExtension {
    let n = poset.n();
    assert_eq!(ext.n() + 1, n, "extension of P minus one pair expected");
    let mut values = vec![0; 2 * n];
    for x in signed_labels(n) {
        values[index(n, x)] = if x.abs() == k.abs() {
            0
        } else {
            ext.value(compress_signed(x, k))
        };
    }
    values[index(n, k)] = n as i32;
    values[index(n, -k)] = -(n as i32);
    bubble_up_signed(poset, &mut values, k, crate::finite::full_mask(2 * n));
    TypeBLinearExtension { n, values }
}

/// The type B insertion map `f_P(w)`: step `k` applies `φ_{p_{w(k)}}` in the
/// restriction of `P` to `p_{±w(1)}, ..., p_{±w(k)}`.
pub fn typeb_insert(poset: &TypeBPoset, w: &SignedPermutation) -> Result<TypeBLinearExtension> {
    let n = poset.n();
    if w.n() != n {
        return Err(Error::InvalidPermutation(format!("signed permutation of ±[{}] for n = {n}", w.n())));
    }
    let mut values = vec![0; 2 * n];
    let mut assigned = 0u64;
    for k in 1..=n as i32 {
        let x = w.apply(k);
        values[index(n, x)] = k;
        values[index(n, -x)] = -k;
        assigned |= 1 << index(n, x) | 1 << index(n, -x);
        bubble_up_signed(poset, &mut values, x, assigned);
    }
    Ok(TypeBLinearExtension { n, values })
}

/// The promotion chain together with the path followed by the value `-n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeBPromotion {
    /// `t_1 > t_2 > ... > t_l`: where the value `n` travels.
    pub chain: Vec<i32>,
    /// Where the value `-n` travels.
    pub negative_track: Vec<i32>,
}

/// Promotion chain of a type B extension: from `λ^{-1}(n)`, step to the
/// lower cover of largest value and swap (mirrored) at every step.
pub fn typeb_promotion_chain(poset: &TypeBPoset, ext: &TypeBLinearExtension) -> TypeBPromotion {
    let n = poset.n();
    let top = n as i32;
    let mut values = ext.values.clone();
    let find = |values: &[i32], v: i32| label(n, values.iter().position(|&x| x == v).expect("value"));
    let mut t = find(&values, top);
    let mut chain = vec![t];
    let mut negative_track = vec![find(&values, -top)];
    while let Some(next) = poset.lower_covers(t).into_iter().max_by_key(|&y| values[index(n, y)]) {
        mirrored_swap(n, &mut values, t, next);
        t = next;
        chain.push(t);
        negative_track.push(find(&values, -top));
    }
    TypeBPromotion { chain, negative_track }
}

/// `λ -> (f_{P_w}(π_λ), f_{wP_u}(π_λ))` on `B(P_{id, w, wu})`.
///
/// Not injective for every pair: `w = u = -2 1` already collides, through
/// the single self swap of `φ_{p_{-1}}`.
pub fn typeb_injection(
    w: &SignedPermutation,
    u: &SignedPermutation,
) -> Result<InjectionCheck<TypeBLinearExtension, (TypeBLinearExtension, TypeBLinearExtension)>> {
    if w.n() != u.n() {
        return Err(Error::InvalidPermutation("signed permutations of different sizes".into()));
    }
    let n = w.n();
    let wu = w.compose(u);
    let domain = typeb_poset(&[SignedPermutation::identity(n), w.clone(), wu.clone()])?;
    let left = typeb_poset_of(w);
    let right = typeb_poset(&[w.clone(), wu])?;
    let mut ok = true;
    let mut mapping = Vec::new();
    for lambda in typeb_linear_extensions(&domain) {
        let pi = lambda.permutation();
        let image = (typeb_insert(&left, &pi)?, typeb_insert(&right, &pi)?);
        ok &= image.0.is_extension_of(&left) && image.1.is_extension_of(&right);
        mapping.push((lambda, image));
    }
    let sizes = vec![count_typeb_extensions(&left) as usize, count_typeb_extensions(&right) as usize];
    Ok(InjectionCheck::certify(mapping, ok, sizes))
}

/// `e_B(P_w) e_B(P_{w w0}) >= 2^n n!` for every `w` in `B_n`.
pub fn typeb_sidorenko_check(n: usize) -> SidorenkoReport {
    let bound: u64 = (1u64 << n) * (1..=n as u64).product::<u64>();
    let rows: Vec<(u64, SignedPermutation)> = all_signed_permutations(n)
        .into_par_iter()
        .map(|w| {
            let product =
                count_typeb_extensions(&typeb_poset_of(&w)) * count_typeb_extensions(&typeb_poset_of(&w.times_longest()));
            (product, w)
        })
        .collect();
    let (min_product, minimizer) = rows
        .iter()
        .min_by_key(|(p, w)| (*p, w.clone()))
        .map(|(p, w)| (*p, w.to_string()))
        .expect("B_n is nonempty");
    SidorenkoReport {
        group: format!("B{n}"),
        n,
        checked: rows.len(),
        bound,
        min_product,
        min_ratio: min_product as f64 / bound as f64,
        minimizer,
        holds: rows.iter().all(|(p, _)| *p >= bound),
    }
}
