#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use braid_strata::arrangement::{enumerate_trees, CellFilter};
use braid_strata::combinat::{sign_of, PartitionTree, SignSymbol, SignVector};
use braid_strata::homology::ChainComplex;
use braid_strata::sphere::SpherePoset;

pub type Config = Vec<Vec<i64>>;

pub fn sign_vector(points: &Config) -> SignVector {
    let n = points.len();
    let k = points[0].len();
    SignVector::from_fn(n, k, |i, j| {
        let d: Vec<i64> = (0..k).map(|l| points[j - 1][l] - points[i - 1][l]).collect();
        sign_of(&d).unwrap()
    })
    .unwrap()
}

/// Every configuration with coordinates drawn from `values`.
pub fn configurations(n: usize, k: usize, values: &[i64]) -> impl Iterator<Item = Config> + '_ {
    let g = values.len();
    let total = g.pow((n * k) as u32);
    (0..total).map(move |mut code| {
        let mut pts = vec![vec![0i64; k]; n];
        for p in pts.iter_mut() {
            for c in p.iter_mut() {
                *c = values[code % g];
                code /= g;
            }
        }
        pts
    })
}

/// Sign vectors of all configurations, each with one representative.
///
/// Replacing every coordinate by its rank among the `n` values in that
/// coordinate keeps all difference signs, so coordinates in `0..n` reach
/// every realizable sign vector.
pub fn realized(n: usize, k: usize) -> BTreeMap<String, (SignVector, Config)> {
    let values: Vec<i64> = (0..n as i64).collect();
    let mut out = BTreeMap::new();
    for pts in configurations(n, k, &values) {
        let sv = sign_vector(&pts);
        out.entry(sv.to_string()).or_insert((sv, pts));
    }
    out
}

/// Whether the point `x` lies in the closure of the cell containing `y`:
/// cells are relatively open convex sets, so this holds exactly when
/// `x + t(y - x)` lies in that cell for small `t > 0`.
pub fn segment_enters(x: &Config, y: &Config) -> bool {
    let n = x.len();
    let k = x[0].len();
    for i in 0..n {
        for j in (i + 1)..n {
            let d: Vec<i64> = (0..k).map(|l| x[j][l] - x[i][l]).collect();
            let e: Vec<i64> = (0..k).map(|l| y[j][l] - y[i][l]).collect();
            let limit: Vec<i64> = d.iter().zip(&e).map(|(&a, &b)| if a != 0 { a.signum() } else { b.signum() }).collect();
            if sign_of(&limit).unwrap() != sign_of(&e).unwrap() {
                return false;
            }
        }
    }
    true
}

/// Triples `(lambda, ell, mu)` for which a cube configuration with `p_ell`
/// on the boundary, the other points inside realizing `mu`, lies in the
/// closure of `lambda`. Coordinates in `{-4,-2,0,2,4}`, boundary at `±4`.
pub fn boundary_faces_by_grid(n: usize, k: usize) -> HashSet<(String, usize, String)> {
    let grid = [-4i64, -2, 0, 2, 4];
    let labels: Vec<usize> = (1..=n).collect();
    let lambdas = enumerate_trees(&labels, k, CellFilter::Configuration);
    let lambda_svs: Vec<SignVector> = lambdas.iter().map(PartitionTree::to_signvector).collect();
    let mut found = HashSet::new();
    for pts in configurations(n, k, &grid) {
        let on_boundary: Vec<bool> = pts.iter().map(|p| p.iter().any(|c| c.abs() == 4)).collect();
        if on_boundary.iter().filter(|&&b| b).count() != 1 {
            continue;
        }
        let ell = on_boundary.iter().position(|&b| b).unwrap() + 1;
        let full = sign_vector(&pts);
        let Some(rest) = full.without(ell) else { continue };
        if rest.entries().contains(&SignSymbol::Zero) {
            continue;
        }
        let mu = PartitionTree::from_signvector(&rest).unwrap();
        for (lambda, sv) in lambdas.iter().zip(&lambda_svs) {
            if full.leq(sv) {
                found.insert((lambda.to_string(), ell, mu.to_string()));
            }
        }
    }
    found
}

/// Rows of the sphere memo that disagree with the grid search.
pub fn memo_mismatches(sp: &SpherePoset, n: usize, k: usize) -> Vec<String> {
    let grid = boundary_faces_by_grid(n, k);
    sp.memo
        .rows()
        .into_iter()
        .filter(|(l, ell, mu, v)| grid.contains(&(l.to_string(), *ell, mu.to_string())) != *v)
        .map(|(l, ell, mu, v)| format!("{l} {ell} {mu}: oracle {v}"))
        .collect()
}

/// Largest `d` for which `∂_{d-1} ∂_d` is nonzero, or `None` if all vanish.
pub fn boundary_squared_failure(c: &impl ChainComplex) -> Option<usize> {
    let top = c.chain_ranks().len();
    (2..top).find(|&d| {
        let lower = c.boundary_matrix(d - 1).unwrap();
        let upper = c.boundary_matrix(d).unwrap();
        !lower.mul(&upper).unwrap().is_zero()
    })
}

/// Disagreements between the combinatorial order/realizability and both
/// the exact oracle and the grid search. Returns `(raw, realizable, errors)`.
pub fn oracle_agreement(n: usize, k: usize) -> (usize, usize, Vec<String>) {
    use braid_strata::oracle::{closure_leq_geometric, realizable};
    let grid = realized(n, k);
    let raw = SignVector::all_raw(n, k);
    let mut errors = Vec::new();
    for sv in &raw {
        let by_grid = grid.contains_key(&sv.to_string());
        let by_tree = PartitionTree::from_signvector(sv).is_ok();
        let by_oracle = realizable(sv);
        if by_grid != by_tree || by_grid != by_oracle {
            errors.push(format!("realizability of {sv}: grid {by_grid} tree {by_tree} oracle {by_oracle}"));
        }
    }
    let cells: Vec<&(SignVector, Config)> = grid.values().collect();
    for (a, x) in &cells {
        for (b, y) in &cells {
            let by_segment = segment_enters(x, y);
            let by_symbols = a.leq(b);
            let by_oracle = closure_leq_geometric(a, b).unwrap();
            let by_trees = PartitionTree::from_signvector(a)
                .unwrap()
                .face_leq(&PartitionTree::from_signvector(b).unwrap())
                .unwrap();
            if by_segment != by_symbols || by_segment != by_oracle || by_segment != by_trees {
                errors.push(format!(
                    "{a} <= {b}: segment {by_segment} symbols {by_symbols} oracle {by_oracle} trees {by_trees}"
                ));
            }
        }
    }
    (raw.len(), cells.len(), errors)
}

/// Coefficients of `(1 + t)(1 + 2t)⋯(1 + (n-1)t)`.
pub fn falling_poincare(n: usize) -> Vec<usize> {
    let mut poly = vec![1usize];
    for i in 1..n {
        let mut next = vec![0; poly.len() + 1];
        for (d, &c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + 1] += c * i;
        }
        poly = next;
    }
    poly
}

/// Homology of `RP^k` from its cellular chain complex with one cell per
/// dimension and `∂_d = 1 + (-1)^d`. Returns `(betti, torsion)` per degree.
pub fn projective_space_homology(k: usize) -> Vec<(usize, Vec<u64>)> {
    let boundary = |d: usize| -> i64 {
        if d == 0 || d > k {
            0
        } else if d.is_multiple_of(2) {
            2
        } else {
            0
        }
    };
    (0..=k)
        .map(|d| {
            let cycles = usize::from(boundary(d) == 0);
            let image = boundary(d + 1);
            match (cycles, image) {
                (1, 0) => (1, vec![]),
                (1, m) if m.abs() == 1 => (0, vec![]),
                (1, m) => (0, vec![m.unsigned_abs()]),
                _ => (0, vec![]),
            }
        })
        .collect()
}

/// Homology of `S^k`.
pub fn sphere_homology(k: usize) -> Vec<(usize, Vec<u64>)> {
    (0..=k).map(|d| (usize::from(d == 0 || d == k), vec![])).collect()
}
