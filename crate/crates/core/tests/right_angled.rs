//! Right-angled groups: normal forms, reflections, meets, hulls and the
//! meet injection, against rewriting and Cayley-distance oracles.

mod common;

use std::collections::BTreeSet;

use coxhull::convexity::Property;
use coxhull::coxeter::{CoxeterMatrix, Word};
use coxhull::right_angled::{RAWord, RightAngledGroup, DEFAULT_SEED};
use coxhull::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn word(g: &RightAngledGroup, letters: &[usize]) -> RAWord {
    g.normal_form(letters).unwrap()
}

fn dist(g: &RightAngledGroup, x: &RAWord, y: &RAWord) -> usize {
    g.multiply(&g.inverse(x), y).len()
}

/// Geodesic closure in the Cayley graph, searching candidates in `ball`.
fn geodesic_hull(g: &RightAngledGroup, ball: &[RAWord], xs: &[RAWord]) -> BTreeSet<RAWord> {
    let mut set: BTreeSet<RAWord> = xs.iter().cloned().collect();
    loop {
        let members: Vec<RAWord> = set.iter().cloned().collect();
        let mut grown = set.clone();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                let d = dist(g, a, b);
                for z in ball {
                    if dist(g, a, z) + dist(g, z, b) == d {
                        grown.insert(z.clone());
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

#[test]
fn commuting_and_free_letters() {
    let m = CoxeterMatrix::from_json_str(r#"{"rank": 2, "m": [[1, 2], [2, 1]]}"#).unwrap();
    let g = RightAngledGroup::new(m).unwrap();
    assert_eq!(word(&g, &[1, 2, 1]).letters(), &[2]);
    let free = RightAngledGroup::infinite_dihedral();
    assert_eq!(word(&free, &[1, 2, 1]).letters(), &[1, 2, 1]);
    assert_eq!(word(&free, &[1, 1, 2, 2]), RAWord::identity());
    assert_eq!(RAWord::identity().to_string(), "id");
    assert!(free.normal_form(&[3]).is_err());
    let not_ra = CoxeterMatrix::from_json_str(r#"{"rank": 2, "m": [[1, 3], [3, 1]]}"#).unwrap();
    assert!(matches!(RightAngledGroup::new(not_ra), Err(Error::NotRightAngled)));
}

#[test]
fn normal_form_matches_rewriting_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..20 {
        let g = RightAngledGroup::random(3, &mut rng);
        let words: Vec<Vec<usize>> = (0..40)
            .map(|_| {
                let len = rng.gen_range(0..=8);
                (0..len).map(|_| rng.gen_range(1..=3)).collect()
            })
            .collect();
        for w in &words {
            let nf = word(&g, w);
            assert_eq!(nf.letters(), common::rewriting_normal_form(&g, w).as_slice(), "{w:?}");
            // no letter can be commuted next to an equal letter
            let l = nf.letters();
            for i in 0..l.len() {
                for j in i + 1..l.len() {
                    if l[i] == l[j] {
                        assert!((i + 1..j).any(|k| !g.commutes(l[i], l[k])));
                    }
                }
            }
        }
        for a in &words[..10] {
            for b in &words[..10] {
                let mut prod = a.clone();
                prod.extend(b.iter().rev());
                let same = common::rewriting_normal_form(&g, &prod).is_empty();
                assert_eq!(word(&g, a) == word(&g, b), same);
            }
        }
    }
}

#[test]
fn group_axioms_on_a_ball() {
    let g = RightAngledGroup::universal(3);
    let ball = g.ball(3);
    assert_eq!(ball.len(), 1 + 3 + 6 + 12);
    for x in &ball {
        assert_eq!(g.multiply(x, &g.inverse(x)), RAWord::identity());
        assert_eq!(g.element(&x.to_word()).unwrap(), *x);
        for y in ball.iter().step_by(3) {
            for z in ball.iter().step_by(5) {
                assert_eq!(g.multiply(&g.multiply(x, y), z), g.multiply(x, &g.multiply(y, z)));
            }
        }
    }
    assert!(g.element(&Word::new(vec![1, 4])).is_err());
}

#[test]
fn prefix_reflections() {
    let g = RightAngledGroup::infinite_dihedral();
    let st = g.inversions(&word(&g, &[1, 2]));
    let ts = g.inversions(&word(&g, &[2, 1]));
    let names = |set: &coxhull::coxeter::ReflectionSet<coxhull::right_angled::RAReflection>| {
        set.iter().map(|r| r.0.to_string()).collect::<BTreeSet<_>>()
    };
    assert_eq!(names(&st), BTreeSet::from(["1".to_string(), "1 2 1".to_string()]));
    assert_eq!(names(&ts), BTreeSet::from(["2".to_string(), "2 1 2".to_string()]));
    assert!(st.is_disjoint(&ts));
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..20 {
        let g = RightAngledGroup::random(3, &mut rng);
        for _ in 0..20 {
            let w = g.random_element(8, &mut rng);
            let inv = g.inversions(&w);
            assert_eq!(inv.len(), w.len());
            for r in &inv {
                // odd palindromic length and self-inverse
                assert_eq!(r.0.len() % 2, 1);
                assert_eq!(g.multiply(&r.0, &r.0), RAWord::identity());
                // the left inversion set of w is exactly the reflections r with ℓ(rw) < ℓ(w)
                assert!(g.multiply(&r.0, &w).len() < w.len());
            }
        }
    }
}

#[test]
fn simple_reflections_are_not_conjugate() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let g = RightAngledGroup::random(4, &mut rng);
    for _ in 0..200 {
        let a = g.random_element(5, &mut rng);
        for s in 1..=4 {
            let r = g.reflection(a.letters(), s);
            let odd: Vec<usize> = (1..=4).filter(|&t| r.0.letters().iter().filter(|&&x| x == t).count() % 2 == 1).collect();
            assert_eq!(odd, vec![s]);
        }
    }
}

#[test]
fn meet_examples_and_laws() {
    let g = RightAngledGroup::infinite_dihedral();
    let (st, ts, sts) = (word(&g, &[1, 2]), word(&g, &[2, 1]), word(&g, &[1, 2, 1]));
    assert_eq!(g.meet(&st, &ts), RAWord::identity());
    assert_eq!(g.meet(&sts, &st), st);
    assert_eq!(g.meet(&st, &st), st);
    assert_eq!(g.meet(&st, &RAWord::identity()), RAWord::identity());

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for rank in [3, 4] {
        let g = RightAngledGroup::random(rank, &mut rng);
        let ball = g.ball(3);
        for _ in 0..60 {
            let u = g.random_element(6, &mut rng);
            let v = g.random_element(6, &mut rng);
            let m = g.meet(&u, &v);
            assert!(g.leq(&m, &u) && g.leq(&m, &v));
            for z in &ball {
                if g.leq(z, &u) && g.leq(z, &v) {
                    assert!(g.leq(z, &m));
                }
            }
        }
    }
}

#[test]
fn hull_examples() {
    let g = RightAngledGroup::infinite_dihedral();
    let s = word(&g, &[1]);
    assert_eq!(g.hull(&[RAWord::identity(), s.clone()]).unwrap(), vec![RAWord::identity(), s]);
    let h = g.hull(&[RAWord::identity(), word(&g, &[1, 2]), word(&g, &[2, 1])]).unwrap();
    let names: Vec<String> = h.iter().map(ToString::to_string).collect();
    assert_eq!(names, ["id", "1", "2", "1 2", "2 1"]);
    // oracle over the length-4 ball
    let oracle = geodesic_hull(&g, &g.ball(4), &[RAWord::identity(), word(&g, &[1, 2]), word(&g, &[2, 1])]);
    assert_eq!(h.into_iter().collect::<BTreeSet<_>>(), oracle);
    assert!(g.hull(&[]).is_err());
}

#[test]
fn hull_matches_geodesic_oracle() {
    let g = RightAngledGroup::universal(3);
    let big = g.ball(6);
    let small = g.ball(3);
    for (i, x) in small.iter().enumerate() {
        for y in &small[i..] {
            let h: BTreeSet<RAWord> = g.hull(&[RAWord::identity(), x.clone(), y.clone()]).unwrap().into_iter().collect();
            assert_eq!(h, geodesic_hull(&g, &big, &[RAWord::identity(), x.clone(), y.clone()]), "{x} | {y}");
            let pair: BTreeSet<RAWord> = g.hull(&[x.clone(), y.clone()]).unwrap().into_iter().collect();
            assert_eq!(pair, geodesic_hull(&g, &big, &[x.clone(), y.clone()]));
        }
    }
    // a group with commuting letters
    let m = CoxeterMatrix::from_json_str(r#"{"rank": 3, "m": [[1, 2, 0], [2, 1, 0], [0, 0, 1]]}"#).unwrap();
    let g = RightAngledGroup::new(m).unwrap();
    let big = g.ball(6);
    let small = g.ball(3);
    for x in &small {
        for y in &small {
            let h: BTreeSet<RAWord> = g.hull(&[RAWord::identity(), x.clone(), y.clone()]).unwrap().into_iter().collect();
            assert_eq!(h, geodesic_hull(&g, &big, &[RAWord::identity(), x.clone(), y.clone()]));
        }
    }
}

#[test]
fn injection_examples() {
    let g = RightAngledGroup::infinite_dihedral();
    let check = g.injection_check(&word(&g, &[1, 2]), &word(&g, &[2, 1])).unwrap();
    assert!(check.is_injective() && check.codomain_ok);
    assert_eq!(check.domain_size(), 5);
    let u = word(&g, &[1, 2, 1, 2]);
    let check = g.injection_check(&u, &RAWord::identity()).unwrap();
    for (x, (a, b)) in &check.mapping {
        assert_eq!(a, x);
        assert_eq!(*b, RAWord::identity());
    }
}

#[test]
fn sampled_injections_and_strong_hull_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for k in 0..200 {
        let g = RightAngledGroup::random(3 + k % 2, &mut rng);
        let u = g.random_element(5, &mut rng);
        let v = g.random_element(5, &mut rng);
        let check = g.injection_check(&u, &v).unwrap();
        assert!(check.is_injective() && check.codomain_ok, "{u} | {v}");
        let triple = g.hull(&[RAWord::identity(), u.clone(), v.clone()]).unwrap().len();
        assert!(triple <= check.codomain_size());
        assert_eq!(triple, check.domain_size());
    }
}

#[test]
fn ball_sweeps_hold() {
    let g = RightAngledGroup::universal(3);
    for property in [Property::Hull, Property::Strong] {
        let report = g.verify(3, property);
        assert!(report.holds());
        assert_eq!(report.pairs_checked, 22 * 23 / 2);
    }
    let g = RightAngledGroup::infinite_dihedral();
    assert!(g.verify(6, Property::Strong).holds());
}
