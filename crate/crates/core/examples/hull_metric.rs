//! Hulls in weak order as `W(D, A)` and the log-hull distance on `S_4`.

use coxhull::convexity::{self, check_hull_property, HullMetric, InversionTable, Scope};
use coxhull::perm::{Permutation, PermutationTable};

fn main() -> coxhull::Result<()> {
    let table = PermutationTable::new(4);
    let idx = |s: &str| table.index_of(&s.parse::<Permutation>().unwrap()).unwrap();

    let gens = [idx("1234"), idx("2143"), idx("3412")];
    let h = convexity::hull(&table, &gens)?;
    println!("conv(1234, 2143, 3412) has {} members (D = {:#b}, A = {:#b})", h.len(), h.lower, h.upper);

    let pair = convexity::hull(&table, &[idx("1234"), idx("2413")])?;
    let names: Vec<String> = pair.members.iter().map(|&m| table.label(m)).collect();
    println!("conv(1234, 2413) = [id, 2413] = {{{}}}", names.join(", "));

    for set in [vec!["1234", "2134"], vec!["1234", "2314"], vec!["1234", "2134", "2314"]] {
        let ids: Vec<usize> = set.iter().map(|s| idx(s)).collect();
        println!("{set:?} convex: {}", convexity::is_convex(&table, &ids)?.is_some());
    }

    let report = check_hull_property(&table, Scope::Group, "S4");
    let metric = HullMetric::new(&table).with_report(&report);
    for (u, v) in [("1234", "1234"), ("1234", "2134"), ("1324", "4231"), ("1234", "4321")] {
        let d = metric.distance(idx(u), idx(v))?;
        println!("d({u}, {v}) = log {:.0} = {:.4} (verified metric: {})", d.value.exp(), d.value, d.verified);
    }
    Ok(())
}
