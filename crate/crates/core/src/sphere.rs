//! The braid stratification of `(S^k)^n`, restricted to the configuration
//! space `C_n(S^k)`, and the action of the symmetric group on it.
//!
//! `S^k` is the cube `I^k = [-1, 1]^k` with its boundary collapsed to a
//! basepoint. A configuration either has every point in the open cube
//! (an *interior* cell, indexed by a configuration tree on `1..=n`) or has
//! exactly one point at the basepoint (a *basepoint* cell, indexed by that
//! point and a configuration tree on the others). Configurations with two
//! points at the basepoint lie in the fat diagonal and never occur.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arrangement::{count_cells, enumerate_trees, validate_nk, Cell, CellFilter, FacePoset, Limits};
use crate::combinat::{PartitionTree, SignVector};
use crate::error::{Error, Result};
use crate::oracle;

/// A bijection of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i - 1]` is the image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidParameter(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The transposition of `a` and `b` in `Σ_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidParameter(format!("transposition ({a} {b}) outside 1..={n}")));
        }
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// All of `Σ_n` in lexicographic order of image sequences, identity first.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { images: current.clone() }];
        // Next lexicographic permutation.
        loop {
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("successor exists");
            current.swap(i - 1, j);
            current[i..].reverse();
            out.push(Permutation { images: current.clone() });
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// A cell of the braid stratification lying in `C_n(S^k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SphereCell {
    /// Type B: every point in the open cube.
    Interior { tree: PartitionTree },
    /// Type A: point `ell` at the basepoint, the rest in the open cube.
    Basepoint { ell: usize, tree: PartitionTree },
}

impl SphereCell {
    pub fn tree(&self) -> &PartitionTree {
        match self {
            SphereCell::Interior { tree } | SphereCell::Basepoint { tree, .. } => tree,
        }
    }

    pub fn basepoint(&self) -> Option<usize> {
        match self {
            SphereCell::Interior { .. } => None,
            SphereCell::Basepoint { ell, .. } => Some(*ell),
        }
    }

    pub fn variant(&self) -> &'static str {
        match self {
            SphereCell::Interior { .. } => "B",
            SphereCell::Basepoint { .. } => "A",
        }
    }
}

impl fmt::Display for SphereCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphereCell::Interior { tree } => write!(f, "B{tree}"),
            SphereCell::Basepoint { ell, tree } => write!(f, "A{ell}{tree}"),
        }
    }
}

impl Cell for SphereCell {
    fn dimension(&self) -> usize {
        // The basepoint factor is a 0-cell.
        self.tree().dimension()
    }

    fn record(&self) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("variant".into(), json!(self.variant()));
        m.insert("ell".into(), json!(self.basepoint()));
        m.insert("tree".into(), json!(self.tree().to_string()));
        m
    }

    fn relabel(&self, sigma: &Permutation) -> Self {
        act(sigma, self)
    }
}

/// Relabels every point of the cell by `sigma`.
pub fn act(sigma: &Permutation, cell: &SphereCell) -> SphereCell {
    let tree = cell.tree().relabel(|x| sigma.apply(x));
    match cell {
        SphereCell::Interior { .. } => SphereCell::Interior { tree },
        SphereCell::Basepoint { ell, .. } => SphereCell::Basepoint { ell: sigma.apply(*ell), tree },
    }
}

/// Number of cells of the braid stratification in `C_n(S^k)`:
/// `N_k(n) + n·N_k(n-1)`.
pub fn count_sphere_cells(n: usize, k: usize) -> u128 {
    let interior = count_cells(n, k, CellFilter::Configuration);
    let basepoint = if n >= 2 { count_cells(n - 1, k, CellFilter::Configuration) } else { 0 };
    interior.saturating_add((n as u128).saturating_mul(basepoint))
}

/// Memo of boundary-face verdicts keyed by (interior tree, basepoint, tree).
///
/// Pairs where `mu` is not below `lambda` with `ell` deleted are recorded as
/// `false` without an oracle call: the oracle system contains those closure
/// conditions, so it would reject them too.
#[derive(Debug, Clone, Default)]
pub struct BoundaryMemo {
    verdicts: HashMap<(PartitionTree, usize, PartitionTree), bool>,
    queried: usize,
}

impl BoundaryMemo {
    pub fn get(&self, lambda: &PartitionTree, ell: usize, mu: &PartitionTree) -> Option<bool> {
        self.verdicts.get(&(lambda.clone(), ell, mu.clone())).copied()
    }

    pub fn len(&self) -> usize {
        self.verdicts.len()
    }

    /// Number of pairs decided by an oracle call.
    pub fn queried(&self) -> usize {
        self.queried
    }

    pub fn is_empty(&self) -> bool {
        self.verdicts.is_empty()
    }

    /// All recorded `(lambda, ell, mu, verdict)` rows, sorted.
    pub fn rows(&self) -> Vec<(&PartitionTree, usize, &PartitionTree, bool)> {
        let mut rows: Vec<_> = self.verdicts.iter().map(|((l, e, m), v)| (l, *e, m, *v)).collect();
        rows.sort();
        rows
    }
}

/// The face poset of `C_n(S^k)` with the braid stratification, together with
/// the oracle verdicts used for the cross-type order.
#[derive(Debug, Clone)]
pub struct SpherePoset {
    pub poset: FacePoset<SphereCell>,
    pub memo: BoundaryMemo,
}

/// Builds the face poset of the braid stratification on `C_n(S^k)`.
pub fn sphere_poset(n: usize, k: usize, limits: &Limits) -> Result<SpherePoset> {
    validate_nk(n, k)?;
    if n < 2 {
        return Err(Error::InvalidParameter("sphere posets need n >= 2".into()));
    }
    limits.check("sphere poset", n, k, count_sphere_cells(n, k))?;

    let labels: Vec<usize> = (1..=n).collect();
    let interior = enumerate_trees(&labels, k, CellFilter::Configuration);
    let basepoint: Vec<(usize, Vec<PartitionTree>)> = labels
        .iter()
        .map(|&ell| {
            let rest: Vec<usize> = labels.iter().copied().filter(|&x| x != ell).collect();
            (ell, enumerate_trees(&rest, k, CellFilter::Configuration))
        })
        .collect();

    // Cross-type verdicts: one oracle query per (lambda, ell, mu) that passes
    // the combinatorial necessary condition.
    let lambda_svs: Vec<SignVector> = interior.iter().map(PartitionTree::to_signvector).collect();
    let mu_svs: Vec<Vec<SignVector>> =
        basepoint.iter().map(|(_, mus)| mus.iter().map(PartitionTree::to_signvector).collect()).collect();
    let mut queries: Vec<(usize, usize, usize)> = Vec::new();
    for (li, lambda_sv) in lambda_svs.iter().enumerate() {
        for (ei, (ell, _)) in basepoint.iter().enumerate() {
            let restricted = lambda_sv.without(*ell);
            for (mi, mu_sv) in mu_svs[ei].iter().enumerate() {
                if restricted.as_ref().is_none_or(|r| mu_sv.leq(r)) {
                    queries.push((li, ei, mi));
                }
            }
        }
    }
    let verdicts: Vec<bool> = queries
        .par_iter()
        .map(|&(li, ei, mi)| {
            let (ell, mus) = &basepoint[ei];
            oracle::boundary_face_feasible(&interior[li], *ell, &mus[mi])
        })
        .collect::<Result<Vec<bool>>>()?;
    let mut memo = BoundaryMemo { queried: queries.len(), ..BoundaryMemo::default() };
    for lambda in &interior {
        for (ell, mus) in &basepoint {
            for mu in mus {
                memo.verdicts.insert((lambda.clone(), *ell, mu.clone()), false);
            }
        }
    }
    for (&(li, ei, mi), &v) in queries.iter().zip(&verdicts) {
        let (ell, mus) = &basepoint[ei];
        memo.verdicts.insert((interior[li].clone(), *ell, mus[mi].clone()), v);
    }

    let mut cells: Vec<SphereCell> = interior.iter().cloned().map(|tree| SphereCell::Interior { tree }).collect();
    for (ell, mus) in &basepoint {
        cells.extend(mus.iter().cloned().map(|tree| SphereCell::Basepoint { ell: *ell, tree }));
    }
    let svs: HashMap<SphereCell, SignVector> = cells.iter().map(|c| (c.clone(), c.tree().to_signvector())).collect();

    let poset = FacePoset::from_order(cells, |a, b| match (a, b) {
        (SphereCell::Interior { .. }, SphereCell::Interior { .. }) => svs[a].leq(&svs[b]),
        (SphereCell::Basepoint { ell: e1, .. }, SphereCell::Basepoint { ell: e2, .. }) => {
            e1 == e2 && svs[a].leq(&svs[b])
        }
        (SphereCell::Basepoint { ell, tree: mu }, SphereCell::Interior { tree: lambda }) => {
            memo.verdicts[&(lambda.clone(), *ell, mu.clone())]
        }
        (SphereCell::Interior { .. }, SphereCell::Basepoint { .. }) => false,
    })?;
    Ok(SpherePoset { poset, memo })
}

/// Partition of a poset into orbits of `Σ_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// Each orbit lists element ids in increasing order; orbits are sorted by
    /// their smallest id.
    pub orbits: Vec<Vec<usize>>,
    pub free: bool,
    /// A cell fixed by a non-identity permutation, if any.
    pub fixed: Option<(usize, Permutation)>,
}

/// Orbits of the `Σ_n` action on the elements of `poset`.
pub fn orbits<C: Cell>(poset: &FacePoset<C>, n: usize) -> Result<OrbitReport> {
    let mut orbit_of = vec![usize::MAX; poset.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut fixed = None;
    let maps: Vec<(Permutation, Vec<usize>)> = Permutation::all(n)
        .into_iter()
        .map(|sigma| poset.permutation_map(&sigma).map(|m| (sigma, m)))
        .collect::<Result<_>>()?;
    for id in 0..poset.len() {
        if fixed.is_none() {
            if let Some((sigma, _)) = maps.iter().find(|(s, m)| !s.is_identity() && m[id] == id) {
                fixed = Some((id, sigma.clone()));
            }
        }
        if orbit_of[id] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = maps.iter().map(|(_, m)| m[id]).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            orbit_of[m] = orbits.len();
        }
        orbits.push(members);
    }
    Ok(OrbitReport { orbits, free: fixed.is_none(), fixed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PartitionTree {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_algebra() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert!(all[0].is_identity());
        for a in &all {
            assert!(a.compose(&a.inverse()).is_identity());
            for b in &all {
                let ab = a.compose(b);
                for i in 1..=3 {
                    assert_eq!(ab.apply(i), a.apply(b.apply(i)));
                }
            }
        }
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn act_examples() {
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let top = SphereCell::Interior { tree: t("[[{1}],[{2}]]") };
        assert_eq!(act(&Permutation::identity(2), &top), top);
        assert_eq!(act(&swap, &top), SphereCell::Interior { tree: t("[[{2}],[{1}]]") });
        assert_eq!(
            top.tree().to_signvector().get(1, 2),
            -act(&swap, &top).tree().to_signvector().get(1, 2)
        );
        let a = SphereCell::Basepoint { ell: 1, tree: t("[[{2}]]") };
        assert_eq!(act(&swap, &a), SphereCell::Basepoint { ell: 2, tree: t("[[{1}]]") });
    }

    #[test]
    fn circle_poset() {
        let sp = sphere_poset(2, 1, &Limits::default()).unwrap();
        let p = &sp.poset;
        assert_eq!(p.len(), 4);
        assert_eq!(p.covers().len(), 4);
        for (a, b) in p.covers() {
            assert!(matches!(p.cell(*a), SphereCell::Basepoint { .. }));
            assert!(matches!(p.cell(*b), SphereCell::Interior { .. }));
        }
        assert_eq!(p.order_complex_dimension(), Some(1));
    }

    #[test]
    fn two_sphere_poset() {
        let p = sphere_poset(2, 2, &Limits::default()).unwrap().poset;
        assert_eq!(p.len(), 6);
        assert_eq!(p.covers().len(), 8);
        let by_dim = |d| p.elements().iter().filter(|e| e.dim == d).count();
        assert_eq!((by_dim(2), by_dim(3), by_dim(4)), (2, 2, 2));
        assert_eq!(p.order_complex_dimension(), Some(2));
    }

    #[test]
    fn three_points_on_circle() {
        let p = sphere_poset(3, 1, &Limits::default()).unwrap().poset;
        assert_eq!(p.len(), 12);
        for e in p.elements() {
            match &e.cell {
                SphereCell::Interior { tree } => {
                    assert_eq!(e.dim, 3);
                    let below: Vec<_> = p.covers().iter().filter(|(_, b)| *b == e.id).map(|(a, _)| *a).collect();
                    assert_eq!(below.len(), 2);
                    let order: Vec<usize> = tree.to_string().chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect();
                    let ends = [order[0], order[2]];
                    for a in below {
                        let ell = p.cell(a).basepoint().unwrap();
                        assert!(ends.contains(&ell));
                    }
                }
                SphereCell::Basepoint { .. } => assert_eq!(e.dim, 2),
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let limits = Limits::default();
        let r = orbits(&sphere_poset(2, 2, &limits).unwrap().poset, 2).unwrap();
        assert!(r.free);
        assert_eq!(r.orbits.len(), 3);
        assert!(r.orbits.iter().all(|o| o.len() == 2));

        let r = orbits(&crate::arrangement::salvetti_poset(3, 1, &limits).unwrap(), 3).unwrap();
        assert!(r.free);
        assert_eq!(r.orbits, vec![(0..6).collect::<Vec<_>>()]);

        let r = orbits(&sphere_poset(2, 1, &limits).unwrap().poset, 2).unwrap();
        assert!(r.free);
        assert_eq!(r.orbits.len(), 2);
    }

    #[test]
    fn full_stratification_action_is_not_free() {
        let p = crate::arrangement::face_poset(2, 1, CellFilter::All, &Limits::default()).unwrap();
        let r = orbits(&p, 2).unwrap();
        assert!(!r.free);
        let (id, sigma) = r.fixed.unwrap();
        assert!(!p.cell(id).is_configuration());
        assert!(!sigma.is_identity());
    }

    #[test]
    fn skipped_pairs_are_oracle_rejected() {
        for (n, k) in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)] {
            let sp = sphere_poset(n, k, &Limits::default()).unwrap();
            for (lambda, ell, mu, verdict) in sp.memo.rows() {
                assert_eq!(verdict, oracle::boundary_face_feasible(lambda, ell, mu).unwrap(), "{lambda} {ell} {mu}");
            }
            assert!(sp.memo.queried() <= sp.memo.len());
        }
    }

    #[test]
    fn cell_count_formula() {
        for (n, k) in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)] {
            let p = sphere_poset(n, k, &Limits::default()).unwrap().poset;
            assert_eq!(p.len() as u128, count_sphere_cells(n, k));
        }
    }
}
