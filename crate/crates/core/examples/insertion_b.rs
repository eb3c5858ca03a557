//! Type B posets, the signed insertion map, and a pair where the signed
//! version of the insertion injection collides.

use coxhull::signed::SignedPermutation;
use coxhull::type_b::{count_typeb_extensions, typeb_injection, typeb_insert, typeb_promotion_chain, TypeBPoset};

fn main() -> coxhull::Result<()> {
    let p = TypeBPoset::from_covers(4, &[(1, -2), (-2, 2), (2, -1), (3, -1), (1, -3), (4, 2), (-2, -4)], false)?;
    let w: SignedPermutation = "4 -2 1 3".parse()?;
    let lam = typeb_insert(&p, &w)?;
    println!("f_P({w}):");
    for (x, v) in lam.assignments() {
        if v > 0 {
            println!("  p{x:<2} -> {v}");
        }
    }
    let promo = typeb_promotion_chain(&p, &lam);
    println!("promotion chain {:?}, -n travels {:?}", promo.chain, promo.negative_track);
    println!("e_B(P) = {}", count_typeb_extensions(&p));

    let w: SignedPermutation = "-2 1".parse()?;
    let check = typeb_injection(&w, &w)?;
    match &check.collision {
        Some(c) => println!(
            "w = u = {w}: {} and {} both map to the same pair",
            c.first.permutation(),
            c.second.permutation()
        ),
        None => println!("w = u = {w}: injective"),
    }
    println!(
        "sizes: {} <= {} x {}",
        check.domain_size(),
        check.codomain_sizes[0],
        check.codomain_sizes[1]
    );
    Ok(())
}
