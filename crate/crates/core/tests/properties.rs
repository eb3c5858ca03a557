//! Randomized invariants.

mod common;

use proptest::prelude::*;

use coxhull::convexity;
use coxhull::graphical::{acyclic_orientations, classify_good, SimpleGraph};
use coxhull::perm::{Permutation, PermutationTable};
use coxhull::poset::{count_linear_extensions, Poset};
use coxhull::relabel::{compress_signed, expand_signed};
use coxhull::right_angled::{RAWord, RightAngledGroup};
use coxhull::signed::SignedPermutation;
use coxhull::type_a::{insert, inversion_poset};
use coxhull::type_b::{count_typeb_extensions, typeb_insert, typeb_poset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|line| Permutation::from_one_line(&line).unwrap())
}

fn signed(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((1..=n as i32).collect::<Vec<i32>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
        |(line, signs)| {
            let line: Vec<i32> = line.iter().zip(&signs).map(|(&x, &neg)| if neg { -x } else { x }).collect();
            SignedPermutation::from_one_line(&line).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn permutation_group_laws(w in perm(6), u in perm(6)) {
        prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(6));
        prop_assert_eq!(w.left_inversions().len(), w.length());
        prop_assert_eq!(w.length() + w.reversed().length(), 15);
        let wu = w.compose(&u);
        for i in 1..=6 {
            prop_assert_eq!(wu.apply(i), w.apply(u.apply(i)));
        }
    }

    #[test]
    fn signed_group_laws(w in signed(4), u in signed(4)) {
        prop_assert_eq!(w.compose(&w.inverse()), SignedPermutation::identity(4));
        prop_assert_eq!(w.left_inversions().len(), w.length());
        prop_assert_eq!(w.length() + w.times_longest().length(), 16);
        let wu = w.compose(&u);
        for i in [-4, -3, -2, -1, 1, 2, 3, 4] {
            prop_assert_eq!(wu.apply(i), w.apply(u.apply(i)));
            prop_assert_eq!(w.apply(-i), -w.apply(i));
        }
    }

    #[test]
    fn signed_relabel_round_trip(x in -6i32..=6, removed in 1i32..=6) {
        prop_assume!(x != 0 && x.abs() != removed);
        prop_assert_eq!(expand_signed(compress_signed(x, removed), removed), x);
        prop_assert_eq!(compress_signed(x, removed).signum(), x.signum());
    }

    #[test]
    fn extension_counts_and_insertion(us in prop::collection::vec(perm(6), 1..4), w in perm(6)) {
        let p = inversion_poset(&us).unwrap();
        prop_assert_eq!(count_linear_extensions(&p) as usize, common::brute_extension_count(&p));
        let lam = insert(&p, &w).unwrap();
        prop_assert!(lam.is_extension_of(&p));
        prop_assert_eq!(insert(&p, &lam.permutation()).unwrap(), lam);
    }

    #[test]
    fn poset_json_round_trip(us in prop::collection::vec(perm(5), 1..3)) {
        let p = inversion_poset(&us).unwrap();
        prop_assert_eq!(Poset::from_json_str(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn typeb_counts_and_insertion(us in prop::collection::vec(signed(3), 1..4), w in signed(3)) {
        let p = typeb_poset(&us).unwrap();
        prop_assert!(p.is_symmetric());
        prop_assert_eq!(count_typeb_extensions(&p) as usize, common::brute_typeb_extension_count(&p));
        let lam = typeb_insert(&p, &w).unwrap();
        prop_assert!(lam.is_extension_of(&p));
        prop_assert_eq!(typeb_insert(&p, &lam.permutation()).unwrap(), lam);
    }

    #[test]
    fn hulls_are_convex_and_contain_generators(xs in prop::collection::vec(0usize..120, 1..4)) {
        let table = PermutationTable::new(5);
        let h = convexity::hull(&table, &xs).unwrap();
        for x in &xs {
            prop_assert!(h.contains(*x));
        }
        prop_assert!(convexity::is_convex(&table, &h.members).unwrap().is_some());
        prop_assert_eq!(convexity::hull(&table, &h.members).unwrap().members, h.members.clone());
    }

    #[test]
    fn right_angled_words(seed in any::<u64>(), a in prop::collection::vec(1usize..=4, 0..10), b in prop::collection::vec(1usize..=4, 0..10)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = RightAngledGroup::random(4, &mut rng);
        let (x, y) = (g.normal_form(&a).unwrap(), g.normal_form(&b).unwrap());
        prop_assert_eq!(g.normal_form(x.letters()).unwrap(), x.clone());
        prop_assert!(x.len() <= a.len());
        prop_assert_eq!(g.multiply(&x, &g.inverse(&x)), RAWord::identity());
        prop_assert_eq!(g.inversions(&x).len(), x.len());
        // asserts the inversion-set identity internally
        let m = g.meet(&x, &y);
        prop_assert_eq!(g.meet(&y, &x), m);
    }

    #[test]
    fn graph_invariants(mask in 0u32..1 << 15) {
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        let g = SimpleGraph::new(6, &edges).unwrap();
        prop_assert_eq!(acyclic_orientations(&g).len(), common::brute_acyclic_count(&g));
        let c = classify_good(&g);
        // every edge lies in exactly one block
        let covered: usize = c.blocks.iter().map(|b| b.iter().enumerate().map(|(i, &u)| b[i + 1..].iter().filter(|&&v| g.has_edge(u - 1, v - 1)).count()).sum::<usize>()).sum();
        prop_assert_eq!(covered, g.edges().len());
    }
}
