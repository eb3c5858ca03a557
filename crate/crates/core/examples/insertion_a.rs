//! The insertion map onto linear extensions, promotion chains, and the
//! pair-of-insertions injection in `S_n`.

use coxhull::perm::Permutation;
use coxhull::poset::{count_linear_extensions, Poset};
use coxhull::type_a::{insert, poset_of, promotion_chain, theorem_injection};

fn main() -> coxhull::Result<()> {
    // p5 < p2 < p3 < p4 and p5 < p1 < p4
    let p = Poset::from_covers(5, &[(5, 2), (2, 3), (3, 4), (5, 1), (1, 4)])?;
    let w: Permutation = "45312".parse()?;
    let lam = insert(&p, &w)?;
    println!("f_P({w}) = {:?}, pi = {}", lam.values(), lam.permutation());
    println!("promotion chain: {:?}", promotion_chain(&p, &lam));
    println!("e(P) = {}", count_linear_extensions(&p));

    let w: Permutation = "2143".parse()?;
    let u: Permutation = "2413".parse()?;
    let check = theorem_injection(&w, &u)?;
    println!(
        "w = {w}, u = {u}: |L(P_(id,w,wu))| = {}, e(P_w) e(wP_u) = {} x {}, injective: {}",
        check.domain_size(),
        check.codomain_sizes[0],
        check.codomain_sizes[1],
        check.is_injective()
    );
    for (lam, (a, b)) in check.mapping.iter().take(4) {
        println!("  {} -> ({}, {})", lam.permutation(), a.permutation(), b.permutation());
    }
    println!("P_w for w = {w}: {:?}", poset_of(&w).covers());
    Ok(())
}
