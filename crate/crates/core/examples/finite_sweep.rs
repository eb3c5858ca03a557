//! Strong hull sweeps over enumerated finite Coxeter groups.
//!
//! `cargo run --release --example finite_sweep [TYPE...]`

use coxhull::convexity::{check_hull_property, check_strong_hull, Scope};
use coxhull::coxeter::CoxeterType;
use coxhull::finite::{GroupTable, DEFAULT_ROOT_CAP};

fn main() -> coxhull::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let types = if args.is_empty() {
        vec!["A3".to_string(), "B3".into(), "G2".into(), "H3".into(), "D4".into(), "F4".into()]
    } else {
        args
    };
    for label in types {
        let t: CoxeterType = label.parse()?;
        let table = GroupTable::from_matrix(&t.matrix(), DEFAULT_ROOT_CAP)?;
        let strong = check_strong_hull(&table, Scope::Group, &label);
        let weak = check_hull_property(&table, Scope::Group, &label);
        println!(
            "{label:>3}: |W| = {:>5}, {:>2} reflections, {:>7} pairs, strong {:?}, weak {:?} ({} ms)",
            table.order(),
            table.root_system().positive_count(),
            strong.pairs_checked,
            strong.verdict,
            weak.verdict,
            strong.elapsed_ms + weak.elapsed_ms
        );
    }
    Ok(())
}
