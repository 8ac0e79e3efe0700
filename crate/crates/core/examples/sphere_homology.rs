//! Homology of ordered and unordered configurations of points on spheres.

use braid_strata::arrangement::Limits;
use braid_strata::complex::{order_complex, quotient, GroupAction};
use braid_strata::homology::homology;
use braid_strata::sphere::sphere_poset;

fn main() -> braid_strata::Result<()> {
    let limits = Limits::default();
    for (n, k) in [(2, 1), (2, 2), (2, 3), (3, 1)] {
        let sp = sphere_poset(n, k, &limits)?;
        let c = order_complex(&sp.poset);
        let ordered = homology(&c)?;
        let action = GroupAction::symmetric(&sp.poset, n)?;
        let q = quotient(&c, &action)?;
        let unordered = homology(&q)?;
        println!("C_{n}(S^{k}): chi {} | {}", c.euler_char(), ordered.to_string().trim_end().replace('\n', ", "));
        println!("B_{n}(S^{k}): chi {} | {}", q.euler_char(), unordered.to_string().trim_end().replace('\n', ", "));
    }
    Ok(())
}
