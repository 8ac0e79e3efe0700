//! Sign vectors of a few configurations in R^2 and the partition trees that
//! encode them.

use braid_strata::arrangement::{count_cells, enumerate_cells, CellFilter, Limits};
use braid_strata::combinat::{sign_of, PartitionTree, SignVector};

fn main() -> braid_strata::Result<()> {
    let points: [[i64; 2]; 3] = [[0, 0], [1, 0], [0, 2]];
    let sv = SignVector::from_fn(3, 2, |i, j| {
        let diff: Vec<i64> = (0..2).map(|l| points[j - 1][l] - points[i - 1][l]).collect();
        sign_of(&diff).expect("two coordinates")
    })?;
    let tree = PartitionTree::from_signvector(&sv)?;
    println!("points {points:?}");
    println!("sign vector {sv}");
    println!("tree {tree} (dimension {})", tree.dimension());
    let back: PartitionTree = tree.to_string().parse()?;
    assert_eq!(back, tree);

    for k in 1..=3 {
        let all = count_cells(3, k, CellFilter::All);
        let conf = count_cells(3, k, CellFilter::Configuration);
        println!("n=3 k={k}: {all} cells, {conf} configuration cells");
    }

    let limits = Limits::default();
    for cell in enumerate_cells(2, 2, CellFilter::All, &limits)? {
        println!("  {cell}  dim {}", cell.dimension());
    }
    Ok(())
}
