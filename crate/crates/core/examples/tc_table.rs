//! Table of higher topological complexity for small spaces.

use braid_strata::tcformulas::{tc_quaternionic, tc_sphere_product, tc_symplectic, tc_torus, tcs_sphere_upper};

fn main() -> braid_strata::Result<()> {
    for n in 2..=4 {
        println!("n = {n}");
        for ks in [vec![1], vec![2], vec![2, 3], vec![2, 2, 5]] {
            println!("  {}", tc_sphere_product(&ks, n)?.render(false));
        }
        println!("  {}", tc_torus(3, n)?.render(false));
        println!("  {}", tc_symplectic(2, n)?.render(false));
        println!("  {}", tc_quaternionic(2, n)?.render(false));
        for k in 1..=3 {
            println!("  {}", tcs_sphere_upper(n, k)?.render(false));
        }
    }
    println!("{}", tc_torus(2, 2)?.render(true));
    Ok(())
}
