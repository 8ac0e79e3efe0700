//! Exact feasibility queries: a witness configuration when a boundary face
//! exists and a negative cycle when it does not.

use braid_strata::combinat::PartitionTree;
use braid_strata::oracle::{boundary_face_witness, DiffConstraintSystem, Solution, Var};

fn main() -> braid_strata::Result<()> {
    let x = Var::new(1, 1);
    let y = Var::new(2, 1);
    let mut sys = DiffConstraintSystem::new();
    sys.lt(x, y).le(y, 1).equal(x, 1);
    match sys.solve()? {
        Solution::Feasible(w) => println!("feasible: {:?}", w.values()),
        Solution::Infeasible(cert) => println!("infeasible: {}", cert.describe(&sys)),
    }

    let lambda: PartitionTree = "[[{1}],[{2}]]".parse()?;
    for (ell, mu) in [(1, "[[{2}]]"), (2, "[[{1}]]")] {
        let mu: PartitionTree = mu.parse()?;
        match boundary_face_witness(&lambda, ell, &mu)? {
            Some((d, sys, w)) => {
                println!("ell={ell}: p_{ell}[{}] = {} reaches the boundary", d.level, d.sign);
                for (v, val) in w.instantiate(&sys) {
                    println!("  {v} = {val}");
                }
            }
            None => println!("ell={ell}: no boundary face"),
        }
    }
    Ok(())
}
