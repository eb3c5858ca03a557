//! Normal forms, meets and hulls in right-angled Coxeter groups.

use coxhull::convexity::Property;
use coxhull::coxeter::CoxeterMatrix;
use coxhull::right_angled::{RAWord, RightAngledGroup, DEFAULT_SEED};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> coxhull::Result<()> {
    // 1 and 3 commute, every other pair is free
    let m = CoxeterMatrix::from_json_str(r#"{"rank": 3, "m": [[1, 0, 2], [0, 1, 0], [2, 0, 1]]}"#)?;
    let g = RightAngledGroup::new(m)?;
    for letters in [vec![3, 1, 3], vec![3, 2, 1, 3], vec![1, 2, 2, 3, 1]] {
        println!("{letters:?} -> {}", g.normal_form(&letters)?);
    }

    let u = g.normal_form(&[1, 2, 3])?;
    let v = g.normal_form(&[3, 2, 1])?;
    let names = |w: &RAWord| g.inversions(w).iter().map(|r| format!("[{}]", r.0)).collect::<Vec<_>>().join(" ");
    println!("T_L({u}) = {}", names(&u));
    println!("T_L({v}) = {}", names(&v));
    println!("meet = {}", g.meet(&u, &v));
    let hull = g.hull(&[RAWord::identity(), u.clone(), v.clone()])?;
    println!("|conv(id, u, v)| = {}", hull.len());
    let check = g.injection_check(&u, &v)?;
    println!("x -> (x ^ u, x ^ v) injective: {}", check.is_injective());

    let report = g.verify(4, Property::Strong);
    println!("{} pairs in the radius-4 ball: {:?}", report.pairs_checked, report.verdict);

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let random = RightAngledGroup::random(4, &mut rng);
    let x = random.random_element(6, &mut rng);
    println!("random rank-4 group, element {x} of length {}", x.len());
    Ok(())
}
