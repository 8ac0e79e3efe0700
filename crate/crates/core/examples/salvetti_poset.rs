//! The configuration-cell face poset of the braid arrangement in (R^k)^n and
//! the homology of its order complex.

use braid_strata::arrangement::{salvetti_poset, Limits};
use braid_strata::complex::order_complex;
use braid_strata::homology::homology;

fn main() -> braid_strata::Result<()> {
    let limits = Limits::default();
    for (n, k) in [(2, 2), (3, 2), (3, 3), (4, 2)] {
        let poset = salvetti_poset(n, k, &limits)?;
        let c = order_complex(&poset);
        let h = homology(&c)?;
        println!(
            "n={n} k={k}: {} cells, {} covers, complex dim {:?}, f {:?}",
            poset.len(),
            poset.covers().len(),
            c.dimension(),
            c.f_vector()
        );
        println!("  betti {:?}", h.betti());
    }
    Ok(())
}
