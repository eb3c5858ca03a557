//! Coxeter matrices, words and the weak-order vocabulary shared by all
//! backends.
//!
//! Generators are numbered `1..=rank` everywhere in the public API. Infinite
//! entries of a Coxeter matrix are stored (and serialized) as `0`.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hash;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Symmetric matrix of orders `m_ij`, with `0` standing for infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct CoxeterMatrix {
    rank: usize,
    m: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    rank: usize,
    m: Vec<Vec<u32>>,
}

impl TryFrom<MatrixFile> for CoxeterMatrix {
    type Error = Error;

    fn try_from(file: MatrixFile) -> Result<Self> {
        CoxeterMatrix::from_rows(file.rank, &file.m)
    }
}

impl From<CoxeterMatrix> for MatrixFile {
    fn from(m: CoxeterMatrix) -> Self {
        MatrixFile {
            rank: m.rank,
            m: m.rows(),
        }
    }
}

impl CoxeterMatrix {
    /// Builds a matrix from rows, validating shape, diagonal and symmetry.
    pub fn from_rows(rank: usize, rows: &[Vec<u32>]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
            return Err(Error::InvalidMatrix(format!("expected a {rank}x{rank} matrix")));
        }
        for i in 0..rank {
            if rows[i][i] != 1 {
                return Err(Error::InvalidMatrix(format!("diagonal entry m[{i}][{i}] must be 1")));
            }
            for j in 0..rank {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidMatrix(format!(
                        "asymmetric entries m[{i}][{j}] = {} and m[{j}][{i}] = {}",
                        rows[i][j], rows[j][i]
                    )));
                }
                if i != j && rows[i][j] == 1 {
                    return Err(Error::InvalidMatrix(format!("off-diagonal entry m[{i}][{j}] must be >= 2 or 0 (infinity)")));
                }
            }
        }
        Ok(CoxeterMatrix {
            rank,
            m: rows.iter().flatten().copied().collect(),
        })
    }

    /// Builds a matrix of the given rank from the listed off-diagonal
    /// entries `(i, j, m_ij)` (1-based); all other pairs commute.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut rows = vec![vec![2; rank]; rank];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, m) in edges {
            if i == 0 || j == 0 || i > rank || j > rank || i == j {
                return Err(Error::InvalidMatrix(format!("bad edge ({i}, {j})")));
            }
            rows[i - 1][j - 1] = m;
            rows[j - 1][i - 1] = m;
        }
        Self::from_rows(rank, &rows)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Raw entry for 1-based generators, `0` meaning infinity.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.m[(i - 1) * self.rank + (j - 1)]
    }

    /// Order of `s_i s_j`, or `None` when it is infinite.
    pub fn order(&self, i: usize, j: usize) -> Option<u32> {
        match self.entry(i, j) {
            0 => None,
            m => Some(m),
        }
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.m.chunks(self.rank).map(<[u32]>::to_vec).collect()
    }

    pub fn is_right_angled(&self) -> bool {
        (1..=self.rank).all(|i| (1..=self.rank).all(|j| i == j || matches!(self.entry(i, j), 0 | 2)))
    }

    pub fn check_generator(&self, g: usize) -> Result<()> {
        if g == 0 || g > self.rank {
            Err(Error::GeneratorOutOfRange {
                generator: g,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }
}

/// Named finite types accepted by the constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    F4,
    G2,
    H3,
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::F4 => 4,
            CoxeterType::G2 => 2,
            CoxeterType::H3 => 3,
        }
    }

    /// Expands the label into its Coxeter matrix.
    ///
    /// Type `A_n` numbers the adjacent transpositions `s_i = (i i+1)`. Type
    /// `B_n` uses generator 1 for the sign change `t_{1,-1}` and generator
    /// `i + 1` for `t_{i,i+1}`, matching [`crate::signed`].
    pub fn matrix(self) -> CoxeterMatrix {
        let n = self.rank();
        let chain = |orders: &[u32]| -> Vec<(usize, usize, u32)> {
            orders.iter().enumerate().map(|(i, &m)| (i + 1, i + 2, m)).collect()
        };
        let edges = match self {
            CoxeterType::A(_) => chain(&vec![3; n.saturating_sub(1)]),
            CoxeterType::B(_) => {
                let mut orders = vec![3; n.saturating_sub(1)];
                if let Some(first) = orders.first_mut() {
                    *first = 4;
                }
                chain(&orders)
            }
            CoxeterType::D(_) => {
                // branch node 2 for D4; for larger n the fork sits at n - 2
                let mut edges = chain(&vec![3; n - 2]);
                edges.push((n - 2, n, 3));
                edges
            }
            CoxeterType::F4 => chain(&[3, 4, 3]),
            CoxeterType::G2 => chain(&[6]),
            CoxeterType::H3 => chain(&[5, 3]),
        };
        CoxeterMatrix::from_edges(n, &edges).expect("named types are valid")
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::F4 => f.write_str("F4"),
            CoxeterType::G2 => f.write_str("G2"),
            CoxeterType::H3 => f.write_str("H3"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownType(s.to_string());
        let label = s.trim().to_ascii_uppercase();
        match label.as_str() {
            "F4" => return Ok(CoxeterType::F4),
            "G2" => return Ok(CoxeterType::G2),
            "H3" => return Ok(CoxeterType::H3),
            _ => {}
        }
        let (kind, rest) = label.split_at(label.chars().next().map_or(0, char::len_utf8));
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match kind {
            "A" if (1..=7).contains(&n) => Ok(CoxeterType::A(n)),
            "B" if (2..=4).contains(&n) => Ok(CoxeterType::B(n)),
            "D" if n == 4 => Ok(CoxeterType::D(n)),
            _ => Err(unknown()),
        }
    }
}

/// A finite sequence of 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    pub letters: Vec<usize>,
    /// Set once a backend has certified the word as reduced.
    pub reduced: bool,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word {
            letters,
            reduced: false,
        }
    }

    pub fn identity() -> Self {
        Word {
            letters: Vec::new(),
            reduced: true,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses letters separated by spaces or commas; `id` or `e` is empty.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "id" || s == "e" {
            return Ok(Word::identity());
        }
        let letters = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidMatrix(format!("bad generator `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::new(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.letters.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Inversion set `T_L(w)` in a backend's own reflection representation.
pub type ReflectionSet<R> = BTreeSet<R>;

/// A concrete realization of a Coxeter group.
///
/// Elements multiply on the right by generators; reflections are whatever
/// canonical representation the backend prefers (root index, transposition
/// pair, palindromic word).
pub trait CoxeterBackend {
    type Element: Clone + Eq + Hash + fmt::Debug;
    type Reflection: Clone + Ord + fmt::Debug;

    fn rank(&self) -> usize;
    fn identity(&self) -> Self::Element;
    /// `w * s_g` for a 1-based generator `g`.
    fn mul_generator(&self, w: &Self::Element, g: usize) -> Self::Element;
    fn length(&self, w: &Self::Element) -> usize;
    /// The reflection `a s_g a^{-1}`.
    fn conjugate_generator(&self, a: &Self::Element, g: usize) -> Self::Reflection;
    /// `T_L(w)` evaluated by the backend's native rule.
    fn inversion_set(&self, w: &Self::Element) -> ReflectionSet<Self::Reflection>;

    fn is_right_descent(&self, w: &Self::Element, g: usize) -> bool {
        self.length(&self.mul_generator(w, g)) < self.length(w)
    }

    /// A reduced word for `w`, built by stripping smallest right descents.
    fn reduced_word(&self, w: &Self::Element) -> Word {
        let mut w = w.clone();
        let mut letters = Vec::with_capacity(self.length(&w));
        while self.length(&w) > 0 {
            let g = (1..=self.rank())
                .find(|&g| self.is_right_descent(&w, g))
                .expect("non-identity element has a right descent");
            letters.push(g);
            w = self.mul_generator(&w, g);
        }
        letters.reverse();
        Word {
            letters,
            reduced: true,
        }
    }
}

/// Evaluates a word (reduced or not) to an element.
pub fn element_of_word<B: CoxeterBackend>(backend: &B, word: &Word) -> Result<B::Element> {
    let mut w = backend.identity();
    for &g in &word.letters {
        if g == 0 || g > backend.rank() {
            return Err(Error::GeneratorOutOfRange {
                generator: g,
                rank: backend.rank(),
            });
        }
        w = backend.mul_generator(&w, g);
    }
    Ok(w)
}

/// Replaces `word` by a reduced word for the same element.
pub fn reduce_word<B: CoxeterBackend>(backend: &B, word: &Word) -> Result<Word> {
    if word.reduced {
        return Ok(word.clone());
    }
    let w = element_of_word(backend, word)?;
    if backend.length(&w) == word.len() {
        return Ok(Word {
            letters: word.letters.clone(),
            reduced: true,
        });
    }
    Ok(backend.reduced_word(&w))
}

/// Inversion set from the prefixes of a reduced word: one reflection
/// `s_{i_1} ... s_{i_k} ... s_{i_1}` per prefix.
///
/// A repeated reflection means the word was not reduced.
pub fn inversions_from_word<B: CoxeterBackend>(backend: &B, word: &Word) -> Result<ReflectionSet<B::Reflection>> {
    let mut prefix = backend.identity();
    let mut set = ReflectionSet::new();
    for &g in &word.letters {
        if g == 0 || g > backend.rank() {
            return Err(Error::GeneratorOutOfRange {
                generator: g,
                rank: backend.rank(),
            });
        }
        if !set.insert(backend.conjugate_generator(&prefix, g)) {
            return Err(Error::NotReduced(word.letters.clone()));
        }
        prefix = backend.mul_generator(&prefix, g);
    }
    Ok(set)
}

/// Right weak order: `u <= v` iff `T_L(u)` is contained in `T_L(v)`.
pub fn leq_weak<B: CoxeterBackend>(backend: &B, u: &B::Element, v: &B::Element) -> bool {
    backend.inversion_set(u).is_subset(&backend.inversion_set(v))
}

/// Minimal-length representative `w^J` of the left coset `w W_J`.
pub fn min_coset_rep<B: CoxeterBackend>(backend: &B, w: &B::Element, parabolic: &[usize]) -> B::Element {
    let mut w = w.clone();
    while let Some(&g) = parabolic.iter().find(|&&g| backend.is_right_descent(&w, g)) {
        w = backend.mul_generator(&w, g);
    }
    w
}
