//! Brute-force oracles shared by the integration tests. None of them use
//! inversion sets: hulls come from shortest paths in Cayley or flip graphs,
//! extensions from filtering all bijections, normal forms from exhaustive
//! rewriting.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use coxhull::graphical::SimpleGraph;
use coxhull::poset::Poset;
use coxhull::right_angled::RightAngledGroup;
use coxhull::type_b::TypeBPoset;

/// All-pairs distances in a graph given by adjacency lists.
pub fn distances(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &adj[u] {
                    if d[v] == usize::MAX {
                        d[v] = d[u] + 1;
                        q.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

/// Smallest geodesically closed vertex set containing `xs`: repeatedly
/// add every vertex on a shortest path between two members.
pub fn geodesic_hull(dist: &[Vec<usize>], xs: &[usize]) -> BTreeSet<usize> {
    let n = dist.len();
    let mut set: BTreeSet<usize> = xs.iter().copied().collect();
    loop {
        let members: Vec<usize> = set.iter().copied().collect();
        let mut grown = set.clone();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                for z in 0..n {
                    if dist[a][z] + dist[z][b] == dist[a][b] {
                        grown.insert(z);
                    }
                }
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

/// Number of bijections `[n] -> [n]` that are order preserving.
pub fn brute_extension_count(p: &Poset) -> usize {
    coxhull::perm::all_permutations(p.n())
        .into_iter()
        .filter(|w| {
            let values = w.one_line();
            p.relations().into_iter().all(|(i, j)| values[i - 1] < values[j - 1])
        })
        .count()
}

/// Number of antisymmetric order-preserving bijections, over all of `B_n`.
pub fn brute_typeb_extension_count(p: &TypeBPoset) -> usize {
    coxhull::signed::all_signed_permutations(p.n())
        .into_iter()
        .filter(|w| {
            let value = |x: i32| w.apply(x);
            p.relations().into_iter().all(|(x, y)| value(x) < value(y))
        })
        .count()
}

/// Lexicographically least among the shortest words reachable from
/// `letters` by commuting adjacent letters and deleting adjacent pairs
/// `s s`. By Tits' solution to the word problem this is a normal form.
pub fn rewriting_normal_form(group: &RightAngledGroup, letters: &[usize]) -> Vec<usize> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([letters.to_vec()]);
    seen.insert(letters.to_vec());
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            let next = if a == b {
                let mut v = w.clone();
                v.drain(i..i + 2);
                v
            } else if group.commutes(a, b) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                v
            } else {
                continue;
            };
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let min = seen.iter().map(Vec::len).min().unwrap();
    seen.into_iter().find(|w| w.len() == min).unwrap()
}

/// Acyclic orientations by trying all `2^m` orientations.
pub fn brute_acyclic_count(g: &SimpleGraph) -> usize {
    let m = g.edges().len();
    (0u64..1 << m)
        .filter(|bits| {
            // acyclic iff some topological order exists; try DFS colouring
            let mut out = vec![Vec::new(); g.n()];
            for (k, &(u, v)) in g.edges().iter().enumerate() {
                if bits >> k & 1 == 1 {
                    out[u].push(v);
                } else {
                    out[v].push(u);
                }
            }
            fn has_cycle(u: usize, out: &[Vec<usize>], colour: &mut [u8]) -> bool {
                colour[u] = 1;
                for &v in &out[u] {
                    if colour[v] == 1 || (colour[v] == 0 && has_cycle(v, out, colour)) {
                        return true;
                    }
                }
                colour[u] = 2;
                false
            }
            let mut colour = vec![0u8; g.n()];
            !(0..g.n()).any(|u| colour[u] == 0 && has_cycle(u, &out, &mut colour))
        })
        .count()
}

/// Every labeled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            SimpleGraph::new(n, &edges).unwrap()
        })
        .collect()
}

/// Closure of a set of posets under intersection of relations.
pub fn intersection_closure(seed: Vec<Poset>) -> Vec<Poset> {
    let mut all: BTreeSet<Poset> = seed.into_iter().collect();
    let mut frontier: Vec<Poset> = all.iter().cloned().collect();
    let base: Vec<Poset> = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for q in &base {
                let r = Poset::from_relation(p.n(), |i, j| p.less(i, j) && q.less(i, j)).unwrap();
                if all.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    all.into_iter().collect()
}

/// Same closure for type B posets.
pub fn typeb_intersection_closure(seed: Vec<TypeBPoset>) -> Vec<TypeBPoset> {
    let mut all: HashMap<TypeBPoset, ()> = seed.iter().cloned().map(|p| (p, ())).collect();
    let mut frontier = seed.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for q in &seed {
                let r = TypeBPoset::from_relation(p.n(), |x, y| p.less(x, y) && q.less(x, y)).unwrap();
                if all.insert(r.clone(), ()).is_none() {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    all.into_keys().collect()
}
