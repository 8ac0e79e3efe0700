//! Zero-divisor products in H*(X^n) and their nonvanishing.

use braid_strata::cupcalc::{diagonal_pullback, multiply, verify_witness, RingDescriptor, WitnessCase, WitnessLimits};

fn main() -> braid_strata::Result<()> {
    let ring = RingDescriptor::sphere(2, 3)?;
    let v = |i| ring.slot_class(0, i);
    let a = v(2)?.sub(&v(1)?)?;
    let b = v(3)?.sub(&v(1)?)?;
    println!("({a}) ({b}) = {}", multiply(&a, &b)?);
    println!("diagonal pullback of {a}: {}", diagonal_pullback(&a));

    let limits = WitnessLimits::default();
    let cases = [
        WitnessCase::MultBySphere { n: 3, k: 2 },
        WitnessCase::Cohom { n: 3, m: 2, d: 2 },
        WitnessCase::SpheresProduct { ks: vec![2, 3], n: 3 },
    ];
    for case in &cases {
        let r = verify_witness(case, &limits)?;
        println!("{case:?}: cl >= {}", r.cl_lower_bound);
        for p in &r.products {
            println!("  {} -> {} on {}", p.expression, p.target_coefficient, p.target);
        }
    }
    Ok(())
}
