//! Acyclic orientations: the two counterexample families, the block
//! classification and the permutohedron for complete graphs.

use coxhull::convexity::{check_hull_property, Scope};
use coxhull::graphical::{ac_iso_check, acyclic_orientations, classify_good, fig4, fig5, OrientationTable, SimpleGraph};

fn main() -> coxhull::Result<()> {
    let f = fig4();
    println!("G4: |ac| = {}, hull sizes {:?}", acyclic_orientations(&f.graph).len(), f.hull_sizes());
    for n in 4..=7 {
        println!("C{n}: hull sizes {:?}", fig5(n, 1)?.hull_sizes());
    }

    let graphs = [
        ("K4", SimpleGraph::complete(4)),
        ("C4", SimpleGraph::cycle(4)),
        ("P5", SimpleGraph::path(5)),
        ("bowtie", SimpleGraph::parse("1 2\n2 3\n3 1\n3 4\n4 5\n5 3")?),
    ];
    for (name, g) in &graphs {
        let c = classify_good(g);
        let brute = check_hull_property(&OrientationTable::new(g), Scope::AllTriples, name);
        println!("{name:>6}: good = {:<5} brute force {:?}; {}", c.good, brute.verdict, c.reason);
    }

    for n in 2..=4 {
        let r = ac_iso_check(n);
        println!("ac(K{n}) vs Cayley graph of S{n}: {} vertices, {} edges, isomorphic: {}", r.vertices, r.edges, r.ok);
    }
    Ok(())
}
