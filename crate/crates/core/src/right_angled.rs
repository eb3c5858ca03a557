//! Right-angled Coxeter groups (`m_ij ∈ {2, ∞}` off the diagonal).
//!
//! The only relations are `s^2 = 1` and commutations, so an element is a
//! commutation class of reduced words. Elements are stored as the
//! lexicographically least word in their class, which makes equality a
//! plain vector comparison. Reflections are normal forms of palindromes
//! `a s a^{-1}`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;

use crate::convexity::{HullReport, Property, Verdict, Witness};
use crate::coxeter::{CoxeterBackend, CoxeterMatrix, ReflectionSet, Word};
use crate::injection::InjectionCheck;
use crate::{Error, Result};

/// Seed used by the randomized sweeps unless another is given.
pub const DEFAULT_SEED: u64 = 20_240_531;

/// A group element as its canonical reduced word (1-based letters).
///
/// Ordered shortlex, so sorted collections list shorter elements first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RAWord {
    letters: Vec<usize>,
}

impl RAWord {
    pub fn identity() -> Self {
        RAWord::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
            reduced: true,
        }
    }
}

impl Ord for RAWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), &self.letters).cmp(&(other.len(), &other.letters))
    }
}

impl PartialOrd for RAWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RAWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

impl fmt::Debug for RAWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RAWord({self})")
    }
}

/// A reflection, stored as the canonical word of an odd palindrome.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RAReflection(pub RAWord);

impl fmt::Debug for RAReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RAReflection({})", self.0)
    }
}

/// A right-angled Coxeter group given by its matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightAngledGroup {
    matrix: CoxeterMatrix,
    /// `commute[s]` has bit `t` set iff `m(s, t) = 2` (0-based, `s != t`).
    commute: Vec<u64>,
}

impl RightAngledGroup {
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        if !matrix.is_right_angled() {
            return Err(Error::NotRightAngled);
        }
        let r = matrix.rank();
        if r > 64 {
            return Err(Error::InvalidMatrix("rank above 64".into()));
        }
        let commute = (1..=r)
            .map(|s| (1..=r).filter(|&t| t != s && matrix.entry(s, t) == 2).fold(0u64, |m, t| m | 1 << (t - 1)))
            .collect();
        Ok(RightAngledGroup { matrix, commute })
    }

    /// The free product of `rank` copies of `Z/2` (all `m_ij = ∞`).
    pub fn universal(rank: usize) -> Self {
        let rows: Vec<Vec<u32>> = (0..rank)
            .map(|i| (0..rank).map(|j| if i == j { 1 } else { 0 }).collect())
            .collect();
        Self::new(CoxeterMatrix::from_rows(rank, &rows).expect("valid")).expect("right-angled")
    }

    /// The infinite dihedral group: generators 1 and 2 with `m = ∞`.
    pub fn infinite_dihedral() -> Self {
        Self::universal(2)
    }

    /// A random right-angled matrix: each pair commutes with probability 1/2.
    pub fn random(rank: usize, rng: &mut impl Rng) -> Self {
        let mut rows = vec![vec![1u32; rank]; rank];
        for i in 0..rank {
            for j in i + 1..rank {
                let m = if rng.gen_bool(0.5) { 2 } else { 0 };
                rows[i][j] = m;
                rows[j][i] = m;
            }
        }
        Self::new(CoxeterMatrix::from_rows(rank, &rows).expect("valid")).expect("right-angled")
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn commutes(&self, s: usize, t: usize) -> bool {
        self.commute[s - 1] >> (t - 1) & 1 == 1
    }

    fn check_letters(&self, letters: &[usize]) -> Result<()> {
        for &g in letters {
            self.matrix.check_generator(g)?;
        }
        Ok(())
    }

    /// Reduces and canonicalizes an arbitrary word.
    pub fn normal_form(&self, letters: &[usize]) -> Result<RAWord> {
        self.check_letters(letters)?;
        Ok(self.normal_form_unchecked(letters))
    }

    fn normal_form_unchecked(&self, letters: &[usize]) -> RAWord {
        let mut reduced: Vec<usize> = Vec::with_capacity(letters.len());
        for &s in letters {
            self.push_letter(&mut reduced, s);
        }
        RAWord {
            letters: self.canonicalize(reduced),
        }
    }

    /// Appends `s` to a reduced word, cancelling it against the last `s`
    /// when everything in between commutes with `s`.
    fn push_letter(&self, word: &mut Vec<usize>, s: usize) {
        match word.iter().rposition(|&x| x == s) {
            Some(k) if word[k + 1..].iter().all(|&x| self.commutes(s, x)) => {
                word.remove(k);
            }
            _ => word.push(s),
        }
    }

    /// Lexicographically least word in the commutation class: repeatedly
    /// take the smallest letter that can be moved to the front.
    fn canonicalize(&self, mut rest: Vec<usize>) -> Vec<usize> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for k in 0..rest.len() {
                let s = rest[k];
                if best.is_some_and(|b| rest[b] <= s) {
                    continue;
                }
                if rest[..k].iter().all(|&x| self.commutes(s, x)) {
                    best = Some(k);
                }
            }
            out.push(rest.remove(best.expect("first letter is always available")));
        }
        out
    }

    pub fn element(&self, word: &Word) -> Result<RAWord> {
        self.normal_form(&word.letters)
    }

    pub fn multiply(&self, u: &RAWord, v: &RAWord) -> RAWord {
        let mut letters = u.letters.clone();
        letters.extend_from_slice(&v.letters);
        self.normal_form_unchecked(&letters)
    }

    pub fn inverse(&self, w: &RAWord) -> RAWord {
        let mut letters = w.letters.clone();
        letters.reverse();
        self.normal_form_unchecked(&letters)
    }

    pub fn mul_generator(&self, w: &RAWord, s: usize) -> RAWord {
        let mut letters = w.letters.clone();
        self.push_letter(&mut letters, s);
        RAWord {
            letters: self.canonicalize(letters),
        }
    }

    /// `s w`.
    pub fn left_mul_generator(&self, s: usize, w: &RAWord) -> RAWord {
        let mut letters = vec![s];
        letters.extend_from_slice(&w.letters);
        self.normal_form_unchecked(&letters)
    }

    /// `ℓ(s w) < ℓ(w)`: some `s` in the word commutes with everything
    /// before it.
    pub fn is_left_descent(&self, w: &RAWord, s: usize) -> bool {
        match w.letters.iter().position(|&x| x == s) {
            Some(k) => w.letters[..k].iter().all(|&x| self.commutes(s, x)),
            None => false,
        }
    }

    pub fn is_right_descent(&self, w: &RAWord, s: usize) -> bool {
        match w.letters.iter().rposition(|&x| x == s) {
            Some(k) => w.letters[k + 1..].iter().all(|&x| self.commutes(s, x)),
            None => false,
        }
    }

    /// The reflection `a s a^{-1}`.
    pub fn reflection(&self, a: &[usize], s: usize) -> RAReflection {
        let mut letters = a.to_vec();
        letters.push(s);
        letters.extend(a.iter().rev());
        RAReflection(self.normal_form_unchecked(&letters))
    }

    /// `T_L(w)` from the prefixes of its canonical word.
    pub fn inversions(&self, w: &RAWord) -> ReflectionSet<RAReflection> {
        let mut set = ReflectionSet::new();
        for k in 0..w.len() {
            let fresh = set.insert(self.reflection(&w.letters[..k], w.letters[k]));
            assert!(fresh, "repeated reflection in the reduced word {w}");
        }
        set
    }

    /// `u ≤_R v` iff `T_L(u) ⊆ T_L(v)`.
    pub fn leq(&self, u: &RAWord, v: &RAWord) -> bool {
        u.len() <= v.len() && self.inversions(u).is_subset(&self.inversions(v))
    }

    /// The weak-order meet, by stripping common left descents (smallest
    /// generator first). The result's inversion set is checked against
    /// `T_L(u) ∩ T_L(v)` on every call.
    pub fn meet(&self, u: &RAWord, v: &RAWord) -> RAWord {
        let (mut u1, mut v1) = (u.clone(), v.clone());
        let mut prefix = Vec::new();
        while let Some(s) = (1..=self.rank()).find(|&s| self.is_left_descent(&u1, s) && self.is_left_descent(&v1, s)) {
            prefix.push(s);
            u1 = self.left_mul_generator(s, &u1);
            v1 = self.left_mul_generator(s, &v1);
        }
        let result = self.normal_form_unchecked(&prefix);
        let common: ReflectionSet<RAReflection> =
            self.inversions(u).intersection(&self.inversions(v)).cloned().collect();
        assert_eq!(self.inversions(&result), common, "meet of {u} and {v}");
        result
    }

    /// Every element whose inversion set lies between the intersection and
    /// the union of the inputs' inversion sets, sorted shortlex.
    pub fn hull(&self, xs: &[RAWord]) -> Result<Vec<RAWord>> {
        let first = xs.first().ok_or(Error::Empty("hull of an empty set"))?;
        let mut lower = self.inversions(first);
        let mut upper = ReflectionSet::new();
        for x in xs {
            let t = self.inversions(x);
            lower = lower.intersection(&t).cloned().collect();
            upper.extend(t);
        }
        let mut members = Vec::new();
        let mut seen: HashSet<RAWord> = HashSet::new();
        let mut queue = VecDeque::from([RAWord::identity()]);
        seen.insert(RAWord::identity());
        while let Some(x) = queue.pop_front() {
            for s in 1..=self.rank() {
                if self.is_right_descent(&x, s) || !upper.contains(&self.reflection(&x.letters, s)) {
                    continue;
                }
                let y = self.mul_generator(&x, s);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            members.push(x);
        }
        members.retain(|w| lower.is_subset(&self.inversions(w)));
        members.sort();
        Ok(members)
    }

    /// All elements of length at most `radius`, sorted shortlex.
    pub fn ball(&self, radius: usize) -> Vec<RAWord> {
        let mut layer = vec![RAWord::identity()];
        let mut out = layer.clone();
        for _ in 0..radius {
            let next: BTreeSet<RAWord> = layer
                .iter()
                .flat_map(|x| {
                    (1..=self.rank())
                        .filter(|&s| !self.is_right_descent(x, s))
                        .map(move |s| self.mul_generator(x, s))
                })
                .collect();
            layer = next.into_iter().collect();
            out.extend(layer.iter().cloned());
        }
        out.sort();
        out
    }

    /// A random element of length at most `max_len`: a random word of
    /// that many letters, reduced.
    pub fn random_element(&self, max_len: usize, rng: &mut impl Rng) -> RAWord {
        let letters: Vec<usize> = (0..max_len).map(|_| rng.gen_range(1..=self.rank())).collect();
        self.normal_form_unchecked(&letters)
    }

    /// `x -> (x ∧ u, x ∧ v)` on `conv(id, u, v)`, certified injective by
    /// comparing all images.
    pub fn injection_check(&self, u: &RAWord, v: &RAWord) -> Result<InjectionCheck<RAWord, (RAWord, RAWord)>> {
        let domain = self.hull(&[RAWord::identity(), u.clone(), v.clone()])?;
        let (tu, tv) = (self.inversions(u), self.inversions(v));
        let mut ok = true;
        let mapping: Vec<(RAWord, (RAWord, RAWord))> = domain
            .into_iter()
            .map(|x| {
                let image = (self.meet(&x, u), self.meet(&x, v));
                ok &= self.inversions(&image.0).is_subset(&tu) && self.inversions(&image.1).is_subset(&tv);
                (x, image)
            })
            .collect();
        let sizes = vec![
            self.hull(&[RAWord::identity(), u.clone()])?.len(),
            self.hull(&[RAWord::identity(), v.clone()])?.len(),
        ];
        Ok(InjectionCheck::certify(mapping, ok, sizes))
    }

    /// Sweeps all pairs `u <= v` of the ball of radius `max_length`,
    /// checking `|[id,u]| |[id,v]| >= |conv(u, id, v)|` (or `|conv(u, v)|`
    /// for the plain hull property).
    pub fn verify(&self, max_length: usize, property: Property) -> HullReport {
        let start = Instant::now();
        let ball = self.ball(max_length);
        let interval: Vec<usize> = ball
            .par_iter()
            .map(|x| self.hull(&[RAWord::identity(), x.clone()]).expect("nonempty").len())
            .collect();
        let n = ball.len();
        let found = (0..n)
            .into_par_iter()
            .filter_map(|a| {
                (a..n).find_map(|b| {
                    let gens = match property {
                        Property::Strong => vec![ball[a].clone(), RAWord::identity(), ball[b].clone()],
                        Property::Hull => vec![ball[a].clone(), ball[b].clone()],
                    };
                    let rhs = self.hull(&gens).expect("nonempty").len();
                    (interval[a] * interval[b] < rhs).then_some(([a, 0, b], [interval[a], interval[b], rhs]))
                })
            })
            .min_by_key(|(idx, _)| *idx);
        let witness = found.map(|([a, _, b], sizes)| Witness {
            u: ball[a].to_string(),
            v: "id".into(),
            w: ball[b].to_string(),
            sizes,
            indices: [a, 0, b],
        });
        HullReport {
            scope: format!("right-angled rank {} ball of radius {max_length}", self.rank()),
            property,
            pairs_checked: (n as u64) * (n as u64 + 1) / 2,
            verdict: if witness.is_some() { Verdict::Violated } else { Verdict::Holds },
            witness,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

impl CoxeterBackend for RightAngledGroup {
    type Element = RAWord;
    type Reflection = RAReflection;

    fn rank(&self) -> usize {
        self.matrix.rank()
    }

    fn identity(&self) -> RAWord {
        RAWord::identity()
    }

    fn mul_generator(&self, w: &RAWord, g: usize) -> RAWord {
        RightAngledGroup::mul_generator(self, w, g)
    }

    fn length(&self, w: &RAWord) -> usize {
        w.len()
    }

    fn conjugate_generator(&self, a: &RAWord, g: usize) -> RAReflection {
        self.reflection(&a.letters, g)
    }

    fn inversion_set(&self, w: &RAWord) -> ReflectionSet<RAReflection> {
        self.inversions(w)
    }

    fn is_right_descent(&self, w: &RAWord, g: usize) -> bool {
        RightAngledGroup::is_right_descent(self, w, g)
    }
}
