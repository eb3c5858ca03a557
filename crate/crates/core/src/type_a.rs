//! Symmetric-group side: inversion posets `P_U`, the insertion map
//! `f_P: S_n -> L(P)`, its last step `φ_{p_i}`, promotion chains, and the
//! injection `L(P_{id,w,wu}) -> L(P_w) x L(wP_u)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::injection::InjectionCheck;
use crate::perm::{all_permutations, Permutation};
use crate::poset::{bits, count_linear_extensions, lift_values, linear_extensions, LinearExtension, Poset};
use crate::{Error, Result};

/// `P_U`: `p_i < p_j` iff `u^{-1}(i) < u^{-1}(j)` for every `u` in `U`.
pub fn inversion_poset(perms: &[Permutation]) -> Result<Poset> {
    let first = perms.first().ok_or(Error::Empty("inversion poset of an empty set"))?;
    let n = first.n();
    if perms.iter().any(|u| u.n() != n) {
        return Err(Error::InvalidPermutation("permutations of different sizes".into()));
    }
    Poset::from_relation(n, |i, j| perms.iter().all(|u| u.position(i) < u.position(j)))
}

/// `P_w = P_{id, w}`.
pub fn poset_of(w: &Permutation) -> Poset {
    inversion_poset(&[Permutation::identity(w.n()), w.clone()]).expect("nonempty")
}

/// `wP_u = P_{w, wu}`.
pub fn permuted_poset(w: &Permutation, u: &Permutation) -> Result<Poset> {
    inversion_poset(&[w.clone(), w.compose(u)])
}

/// Moves the value held by `a` upward: while `a` is not maximal among
/// `within`, swap with the strictly greater element of smallest value.
///
/// The smallest-valued greater element is always a cover of `a`, since any
/// element between them carries a smaller value.
fn bubble_up(poset: &Poset, values: &mut [usize], mut a: usize, within: u64) {
    loop {
        let greater = poset.above_mask(a) & within;
        let Some(b) = bits(greater).min_by_key(|&j| values[j]) else {
            break;
        };
        values.swap(a - 1, b);
        a = b + 1;
    }
}

/// The insertion map `f_P(w)`.
///
/// Step `k` places value `k` on `p_{w(k)}` and bubbles it up until it sits
/// at a maximal element of the subposet on `p_{w(1)}, ..., p_{w(k)}`.
pub fn insert(poset: &Poset, w: &Permutation) -> Result<LinearExtension> {
    let n = poset.n();
    if w.n() != n {
        return Err(Error::InvalidPermutation(format!("permutation of [{}] for a poset on {n} elements", w.n())));
    }
    let mut values = vec![0; n];
    let mut assigned = 0u64;
    for k in 1..=n {
        let a = w.apply(k);
        values[a - 1] = k;
        assigned |= 1 << (a - 1);
        bubble_up(poset, &mut values, a, assigned);
    }
    Ok(LinearExtension::from_values_unchecked(values))
}

/// `φ_{p_a}: L(P \ {p_a}) -> L(P)`; `ext` uses the compressed labels of
/// [`Poset::remove`].
pub fn phi(poset: &Poset, a: usize, ext: &LinearExtension) -> LinearExtension {
    let n = poset.n();
    assert_eq!(ext.n() + 1, n, "extension of P minus one element expected");
    let mut values = lift_values(ext, a);
    values[a - 1] = n;
    bubble_up(poset, &mut values, a, crate::finite::full_mask(n));
    LinearExtension::from_values_unchecked(values)
}

/// The promotion chain `t_1 > t_2 > ... > t_l` of `ext`: starts at the
/// element with value `n` and repeatedly steps to the lower cover of
/// largest value.
pub fn promotion_chain(poset: &Poset, ext: &LinearExtension) -> Vec<usize> {
    let mut t = ext.element_with_value(poset.n());
    let mut chain = vec![t];
    while let Some(next) = bits(poset.lower_covers_mask(t)).max_by_key(|&j| ext.value(j + 1)) {
        t = next + 1;
        chain.push(t);
    }
    chain
}

/// `λ -> (f_{P_w}(π_λ), f_{wP_u}(π_λ))` on `L(P_{id, w, wu})`, with an
/// exhaustive injectivity certificate.
pub fn theorem_injection(
    w: &Permutation,
    u: &Permutation,
) -> Result<InjectionCheck<LinearExtension, (LinearExtension, LinearExtension)>> {
    if w.n() != u.n() {
        return Err(Error::InvalidPermutation("permutations of different sizes".into()));
    }
    let n = w.n();
    let wu = w.compose(u);
    let domain = inversion_poset(&[Permutation::identity(n), w.clone(), wu.clone()])?;
    let left = poset_of(w);
    let right = inversion_poset(&[w.clone(), wu])?;
    let mut ok = true;
    let mut mapping = Vec::new();
    for lambda in linear_extensions(&domain) {
        let pi = lambda.permutation();
        let image = (insert(&left, &pi)?, insert(&right, &pi)?);
        ok &= image.0.is_extension_of(&left) && image.1.is_extension_of(&right);
        mapping.push((lambda, image));
    }
    let sizes = vec![count_linear_extensions(&left) as usize, count_linear_extensions(&right) as usize];
    Ok(InjectionCheck::certify(mapping, ok, sizes))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SidorenkoReport {
    pub group: String,
    pub n: usize,
    pub checked: usize,
    /// `n!` (or `2^n n!` in type B).
    pub bound: u64,
    pub min_product: u64,
    pub min_ratio: f64,
    pub minimizer: String,
    pub holds: bool,
}

/// `e(P_w) e(P_{w w0}) >= n!` for every `w` in `S_n`.
pub fn sidorenko_check(n: usize) -> SidorenkoReport {
    let bound: u64 = (1..=n as u64).product();
    let rows: Vec<(u64, Permutation)> = all_permutations(n)
        .into_par_iter()
        .map(|w| {
            let product = count_linear_extensions(&poset_of(&w)) * count_linear_extensions(&poset_of(&w.reversed()));
            (product, w)
        })
        .collect();
    let (min_product, minimizer) = rows
        .iter()
        .min_by_key(|(p, w)| (*p, w.clone()))
        .map(|(p, w)| (*p, w.to_string()))
        .expect("S_n is nonempty");
    SidorenkoReport {
        group: format!("S{n}"),
        n,
        checked: rows.len(),
        bound,
        min_product,
        min_ratio: min_product as f64 / bound as f64,
        minimizer,
        holds: rows.iter().all(|(p, _)| *p >= bound),
    }
}
