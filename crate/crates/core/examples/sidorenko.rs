//! `e(P) e(P^c) >= n!` over all two-dimensional posets, and the signed
//! analog with `2^n n!`.

use coxhull::type_a::sidorenko_check;
use coxhull::type_b::typeb_sidorenko_check;

fn main() {
    for n in 1..=6 {
        let r = sidorenko_check(n);
        println!("{:>3}: {:>6} posets, min product {:>6} vs {:>6}, at {}", r.group, r.checked, r.min_product, r.bound, r.minimizer);
    }
    for n in 1..=3 {
        let r = typeb_sidorenko_check(n);
        println!("{:>3}: {:>6} posets, min product {:>6} vs {:>6}, at {}", r.group, r.checked, r.min_product, r.bound, r.minimizer);
    }
}
