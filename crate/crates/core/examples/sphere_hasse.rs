//! Hasse diagram of the stratification of C_2(S^2), as Graphviz.
//!
//! Pipe the output through `dot -Tsvg` to draw it.

use braid_strata::arrangement::Limits;
use braid_strata::sphere::sphere_poset;

fn main() -> braid_strata::Result<()> {
    let sp = sphere_poset(2, 2, &Limits::default())?;
    for e in sp.poset.elements() {
        eprintln!("{:>2} {:<16} dim {}", e.id, e.cell.to_string(), e.dim);
    }
    eprintln!("{} oracle queries for {} cross-type pairs", sp.memo.queried(), sp.memo.len());
    print!("{}", sp.poset.to_dot("C2_S2"));
    Ok(())
}
