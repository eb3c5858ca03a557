//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use coxhull::convexity::{self, check_hull_property, check_strong_hull, InversionTable, Scope};
use coxhull::coxeter::{inversions_from_word, CoxeterBackend, CoxeterType};
use coxhull::finite::{GroupTable, DEFAULT_ROOT_CAP};
use coxhull::graphical::{ac_iso_check, classify_good, fig4, fig5, OrientationTable, SimpleGraph};
use coxhull::perm::{all_permutations, Permutation, PermutationTable, SymmetricGroup};
use coxhull::poset::linear_extensions;
use coxhull::right_angled::{RightAngledGroup, DEFAULT_SEED};
use coxhull::signed::{all_signed_permutations, Hyperoctahedral, SignedPermutation, SignedPermutationTable};
use coxhull::type_a::{self, inversion_poset, promotion_chain, sidorenko_check, theorem_injection};
use coxhull::type_b::{
    typeb_injection, typeb_insert, typeb_linear_extensions, typeb_phi, typeb_poset, typeb_promotion_chain,
    typeb_sidorenko_check, TypeBLinearExtension, TypeBPoset,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FINITE_TYPES: [&str; 10] = ["A2", "A3", "A4", "A5", "B2", "B3", "G2", "H3", "D4", "F4"];

/// What a criterion found: pass/fail plus a one-line detail.
struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn table(t: &str) -> GroupTable {
    GroupTable::from_matrix(&t.parse::<CoxeterType>().unwrap().matrix(), DEFAULT_ROOT_CAP).unwrap()
}

fn finite_verification() -> Verdict {
    let mut failures = Vec::new();
    let mut slowest = Vec::new();
    for t in FINITE_TYPES {
        let start = Instant::now();
        let report = check_strong_hull(&table(t), Scope::Group, t);
        let elapsed = start.elapsed();
        let limit = if t == "F4" { Duration::from_secs(600) } else { Duration::from_secs(60) };
        if !report.holds() || report.witness.is_some() {
            failures.push(format!("{t} violated"));
        }
        if elapsed > limit {
            failures.push(format!("{t} took {elapsed:?}"));
        }
        if matches!(t, "A5" | "B3" | "F4") {
            slowest.push(format!("{t} {:.2}s", elapsed.as_secs_f64()));
        }
    }
    verdict(failures.is_empty(), format!("10 types, zero witnesses; {} {}", slowest.join(", "), failures.join("; ")))
}

fn fig1_regression() -> Verdict {
    let p = coxhull::poset::Poset::from_covers(5, &[(5, 2), (2, 3), (3, 4), (5, 1), (1, 4)]).unwrap();
    let pi = type_a::insert(&p, &"45312".parse().unwrap()).unwrap().permutation();
    verdict(pi.to_string() == "52134", format!("pi = {pi}"))
}

fn fig2_regression() -> Verdict {
    let p = TypeBPoset::from_covers(4, &[(1, -2), (-2, 2), (2, -1), (3, -1), (1, -3), (4, 2), (-2, -4)], false).unwrap();
    let ext = typeb_insert(&p, &"4 -2 1 3".parse().unwrap()).unwrap();
    let ok = [(4, 1), (2, 2), (3, 3), (-1, 4)].iter().all(|&(x, v)| ext.value(x) == v && ext.value(-x) == -v);
    verdict(ok, format!("{:?}", ext.assignments()))
}

fn sidorenko_sweeps() -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut ratios = Vec::new();
    for n in 1..=6 {
        let r = sidorenko_check(n);
        if !r.holds || r.min_product < r.bound {
            failures.push(r.group.clone());
        }
        ratios.push(format!("{} {}", r.group, r.min_ratio));
    }
    for n in 1..=3 {
        let r = typeb_sidorenko_check(n);
        if !r.holds || r.min_product < r.bound {
            failures.push(r.group.clone());
        }
        ratios.push(format!("{} {}", r.group, r.min_ratio));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        failures.push(format!("took {elapsed:?}"));
    }
    verdict(failures.is_empty(), format!("min ratios: {} {}", ratios.join(", "), failures.join("; ")))
}

fn injection_suites() -> Verdict {
    let mut parts = Vec::new();
    let mut pass = true;

    let s4 = all_permutations(4);
    let a_bad = s4
        .iter()
        .flat_map(|w| s4.iter().map(move |u| (w, u)))
        .filter(|(w, u)| {
            let c = theorem_injection(w, u).unwrap();
            !(c.is_injective() && c.codomain_ok)
        })
        .count();
    pass &= a_bad == 0;
    parts.push(format!("S4: {a_bad}/576 pairs collide"));

    let b3 = all_signed_permutations(3);
    let mut b_bad = 0;
    let mut first = None;
    for w in &b3 {
        for u in &b3 {
            let c = typeb_injection(w, u).unwrap();
            if !(c.is_injective() && c.codomain_ok) {
                b_bad += 1;
                first.get_or_insert_with(|| format!(" (first w = {w}, u = {u})"));
            }
        }
    }
    pass &= b_bad == 0;
    parts.push(format!("B3: {b_bad}/2304 pairs collide{}", first.unwrap_or_default()));

    let dihedral = RightAngledGroup::infinite_dihedral();
    let ball = dihedral.ball(6);
    let d_bad = ball
        .iter()
        .flat_map(|u| ball.iter().map(move |v| (u, v)))
        .filter(|(u, v)| {
            let c = dihedral.injection_check(u, v).unwrap();
            !(c.is_injective() && c.codomain_ok)
        })
        .count();
    pass &= d_bad == 0;
    parts.push(format!("infinite dihedral ball(6): {d_bad}/{} collide", ball.len() * ball.len()));

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut r_bad = 0;
    for k in 0..1000 {
        let g = RightAngledGroup::random(3 + k % 2, &mut rng);
        let u = g.random_element(5, &mut rng);
        let v = g.random_element(5, &mut rng);
        let c = g.injection_check(&u, &v).unwrap();
        r_bad += usize::from(!(c.is_injective() && c.codomain_ok));
    }
    pass &= r_bad == 0;
    parts.push(format!("random rank 3/4: {r_bad}/1000 collide"));
    verdict(pass, parts.join("; "))
}

fn bridges() -> Verdict {
    let mut parts = Vec::new();
    let mut pass = true;

    // extensions of P_U against hulls, every U of size <= 3
    let check_a = {
        let table = PermutationTable::new(4);
        let perms = all_permutations(4);
        let mut bad = 0;
        let mut sets = 0;
        for a in 0..24 {
            for b in a..24 {
                for c in b..24 {
                    let ids = [a, b, c];
                    let u: Vec<Permutation> = ids.iter().map(|&i| perms[i].clone()).collect();
                    let from_poset: BTreeSet<usize> = linear_extensions(&inversion_poset(&u).unwrap())
                        .iter()
                        .map(|l| table.index_of(&l.permutation()).unwrap())
                        .collect();
                    let idx: Vec<usize> = u.iter().map(|p| table.index_of(p).unwrap()).collect();
                    let hull: BTreeSet<usize> = convexity::hull(&table, &idx).unwrap().members.into_iter().collect();
                    bad += usize::from(from_poset != hull);
                    sets += 1;
                }
            }
        }
        parts.push(format!("S4 sets: {bad}/{sets} differ"));
        bad == 0
    };
    pass &= check_a;

    let check_b = {
        let table = SignedPermutationTable::new(2);
        let perms = all_signed_permutations(2);
        let mut bad = 0;
        for a in 0..8 {
            for b in a..8 {
                for c in b..8 {
                    let u: Vec<SignedPermutation> = [a, b, c].iter().map(|&i| perms[i].clone()).collect();
                    let from_poset: BTreeSet<usize> = typeb_linear_extensions(&typeb_poset(&u).unwrap())
                        .iter()
                        .map(|l| table.index_of(&l.permutation()).unwrap())
                        .collect();
                    let idx: Vec<usize> = u.iter().map(|p| table.index_of(p).unwrap()).collect();
                    let hull: BTreeSet<usize> = convexity::hull(&table, &idx).unwrap().members.into_iter().collect();
                    bad += usize::from(from_poset != hull);
                }
            }
        }
        parts.push(format!("B2 sets: {bad} differ"));
        bad == 0
    };
    pass &= check_b;

    // prefix inversions against the one-line rules
    let s5 = SymmetricGroup { n: 5 };
    let a_ok = all_permutations(5)
        .iter()
        .all(|w| inversions_from_word(&s5, &s5.reduced_word(w)).unwrap() == w.left_inversions());
    let b3 = Hyperoctahedral { n: 3 };
    let b_ok = all_signed_permutations(3)
        .iter()
        .all(|w| inversions_from_word(&b3, &b3.reduced_word(w)).unwrap() == w.left_inversions());
    pass &= a_ok && b_ok;
    parts.push(format!("prefix inversions S5 {a_ok}, B3 {b_ok}"));

    // every meet asserts its inversion set; count the calls
    let mut meets = 0;
    let dihedral = RightAngledGroup::infinite_dihedral();
    let ball = dihedral.ball(6);
    for u in &ball {
        for v in &ball {
            let m = dihedral.meet(u, v);
            meets += 1;
            pass &= dihedral.leq(&m, u) && dihedral.leq(&m, v);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for k in 0..1000 {
        let g = RightAngledGroup::random(3 + k % 2, &mut rng);
        let (u, v) = (g.random_element(6, &mut rng), g.random_element(6, &mut rng));
        let m = g.meet(&u, &v);
        meets += 1;
        pass &= g.leq(&m, &u) && g.leq(&m, &v);
    }
    parts.push(format!("{meets} meets checked"));
    verdict(pass, parts.join("; "))
}

fn graphical_suite() -> Verdict {
    let start = Instant::now();
    let mut parts = Vec::new();
    let f4 = fig4().hull_sizes();
    let mut pass = f4 == (4, 2, 9);
    parts.push(format!("fig4 {f4:?}"));
    for n in 4..=7 {
        for split in 1..=n - 3 {
            let sizes = fig5(n, split).unwrap().hull_sizes();
            pass &= sizes == (3, 1 << (n - 2), (1 << n) - 2);
        }
    }
    parts.push(format!("fig5 n=4..7 {pass}"));
    let mut disagree = 0;
    let mut graphs = 0;
    for n in 1..=5 {
        for g in common::all_graphs(n).into_iter().filter(SimpleGraph::is_connected) {
            let brute = check_hull_property(&OrientationTable::new(&g), Scope::AllTriples, "ac(G)").holds();
            disagree += usize::from(classify_good(&g).good != brute);
            graphs += 1;
        }
    }
    pass &= disagree == 0;
    parts.push(format!("classification disagrees on {disagree}/{graphs} connected graphs"));
    let iso = (1..=4).all(|n| ac_iso_check(n).ok);
    pass &= iso;
    parts.push(format!("iso n<=4 {iso}"));
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(300);
    verdict(pass, parts.join("; "))
}

fn masks_and_complements<T: InversionTable>(t: &T, full: u64, longest: impl Fn(usize) -> usize, len: impl Fn(usize) -> usize) -> bool {
    (0..t.len()).all(|w| t.mask(w).count_ones() as usize == len(w) && t.mask(longest(w)) == full ^ t.mask(w))
}

fn invariant_suite() -> Verdict {
    let mut parts = Vec::new();
    let mut pass = true;
    let mut groups = 0;
    for t in FINITE_TYPES {
        let g = table(t);
        pass &= masks_and_complements(&g, g.full_mask(), |w| g.multiply(w, g.longest()), |w| g.length(w));
        groups += 1;
    }
    for n in 1..=5 {
        let t = PermutationTable::new(n);
        let full = if n < 2 { 0 } else { (1u64 << (n * (n - 1) / 2)) - 1 };
        pass &= masks_and_complements(&t, full, |w| t.index_of(&t.perm(w).reversed()).unwrap(), |w| t.perm(w).length());
        groups += 1;
    }
    for n in 1..=3 {
        let t = SignedPermutationTable::new(n);
        let full = (1u64 << (n * n)) - 1;
        pass &= masks_and_complements(&t, full, |w| t.index_of(&t.perm(w).times_longest()).unwrap(), |w| t.perm(w).length());
        groups += 1;
    }
    parts.push(format!("mask laws on {groups} groups {pass}"));

    // type A: image of φ at p_a is the set of extensions whose chain visits p_a
    let mut a_bad = 0;
    let mut a_cases = 0;
    for n in 1..=4 {
        let seed = all_permutations(n).iter().map(|u| inversion_poset(std::slice::from_ref(u)).unwrap()).collect();
        for p in common::intersection_closure(seed) {
            for a in 1..=n {
                let image: BTreeSet<Vec<usize>> = linear_extensions(&p.remove(a))
                    .iter()
                    .map(|l| type_a::phi(&p, a, l).values().to_vec())
                    .collect();
                let on_chain: BTreeSet<Vec<usize>> = linear_extensions(&p)
                    .into_iter()
                    .filter(|l| promotion_chain(&p, l).contains(&a))
                    .map(|l| l.values().to_vec())
                    .collect();
                a_bad += usize::from(image != on_chain);
                a_cases += 1;
            }
        }
    }
    pass &= a_bad == 0;
    parts.push(format!("type A chains: {a_bad}/{a_cases} mismatches"));

    let mut b_bad = 0;
    let mut b_cases = 0;
    let mut first = None;
    for n in 1..=4 {
        let seed = all_signed_permutations(n).iter().map(|u| typeb_poset(std::slice::from_ref(u)).unwrap()).collect();
        for p in common::typeb_intersection_closure(seed) {
            for k in coxhull::type_b::signed_labels(n) {
                let image: BTreeSet<TypeBLinearExtension> =
                    typeb_linear_extensions(&p.remove_pair(k)).iter().map(|l| typeb_phi(&p, k, l)).collect();
                let on_chain: BTreeSet<TypeBLinearExtension> = typeb_linear_extensions(&p)
                    .into_iter()
                    .filter(|l| typeb_promotion_chain(&p, l).chain.contains(&k))
                    .collect();
                if image != on_chain {
                    b_bad += 1;
                    first.get_or_insert_with(|| format!(" (first {p:?}, k = {k})"));
                }
                b_cases += 1;
            }
        }
    }
    pass &= b_bad == 0;
    parts.push(format!("type B chains: {b_bad}/{b_cases} mismatches{}", first.unwrap_or_default()));
    verdict(pass, parts.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("finite strong hull sweeps", finite_verification),
        ("type A insertion regression", fig1_regression),
        ("type B insertion regression", fig2_regression),
        ("Sidorenko sweeps", sidorenko_sweeps),
        ("injection suites", injection_suites),
        ("hull and extension bridges", bridges),
        ("graphical counterexamples and classification", graphical_suite),
        ("inversion and promotion-chain invariants", invariant_suite),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run));
        let secs = start.elapsed().as_secs_f64();
        let (pass, detail) = match result {
            Ok(v) => (v.pass, v.detail),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                (false, format!("panicked: {msg}"))
            }
        };
        failed += usize::from(!pass);
        println!("{} criterion {}: {name} [{secs:.2}s] {detail}", if pass { "PASS" } else { "FAIL" }, k + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
