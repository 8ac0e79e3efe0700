//! Cells of the `k`-th Björner–Ziegler stratification of the braid
//! arrangement `A_{n-1}` and their face posets.
//!
//! The configuration cells (distinct points) form the face poset whose order
//! complex is the `k`-th order Salvetti complex, a model of `C_n(R^k)`.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::hash::Hash;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinat::{Node, PartitionTree};
use crate::error::{Error, Result};
use crate::sphere::Permutation;

/// Environment variable overriding the default cell-count refusal threshold.
pub const LIMIT_ENV: &str = "BRAID_STRATA_LIMIT";

/// Which cells to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellFilter {
    All,
    /// Cells where all points are distinct.
    Configuration,
}

impl fmt::Display for CellFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellFilter::All => "all",
            CellFilter::Configuration => "configuration",
        })
    }
}

/// Refusal thresholds checked before any enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_n: usize,
    pub max_k: usize,
    pub max_cells: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 6, max_k: 4, max_cells: 200_000 }
    }
}

impl Limits {
    /// Defaults, with `max_cells` taken from [`LIMIT_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(LIMIT_ENV) {
            limits.max_cells = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{LIMIT_ENV}={raw:?} is not a cell count")))?;
        }
        Ok(limits)
    }

    pub fn unlimited() -> Self {
        Limits { max_n: usize::MAX, max_k: usize::MAX, max_cells: u128::MAX }
    }

    pub(crate) fn check(&self, what: &str, n: usize, k: usize, projected: u128) -> Result<()> {
        if n > self.max_n {
            return Err(Error::ResourceLimit {
                what: format!("{what} with n = {n} (max n {})", self.max_n),
                projected,
                limit: self.max_cells,
            });
        }
        if k > self.max_k {
            return Err(Error::ResourceLimit {
                what: format!("{what} with k = {k} (max k {})", self.max_k),
                projected,
                limit: self.max_cells,
            });
        }
        if projected > self.max_cells {
            return Err(Error::ResourceLimit { what: what.to_string(), projected, limit: self.max_cells });
        }
        Ok(())
    }
}

pub(crate) fn validate_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(())
}

fn binomial(n: usize, r: usize) -> u128 {
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of depth-`k` trees on `m` points:
/// `T_k(m) = Σ_{ordered partitions π of [m]} Π_{B ∈ π} T_{k-1}(|B|)` with
/// `T_0(m) = 1` for all cells and `T_0(m) = [m = 1]` for configuration cells.
/// Saturates at `u128::MAX`.
pub fn count_cells(n: usize, k: usize, filter: CellFilter) -> u128 {
    // level[m] = T_j(m); ordered[m] sums over ordered partitions by first block size.
    let mut level: Vec<u128> = (0..=n)
        .map(|m| match filter {
            CellFilter::All => 1,
            CellFilter::Configuration => u128::from(m == 1),
        })
        .collect();
    for _ in 0..k {
        let mut ordered = vec![0u128; n + 1];
        ordered[0] = 1;
        for m in 1..=n {
            let mut total = 0u128;
            for s in 1..=m {
                let term = binomial(m, s)
                    .saturating_mul(level[s])
                    .saturating_mul(ordered[m - s]);
                total = total.saturating_add(term);
            }
            ordered[m] = total;
        }
        ordered[0] = 0;
        level = ordered;
    }
    level[n]
}

/// Ordered set partitions of `items`, first block chosen as a subset mask in
/// increasing order.
fn ordered_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let m = items.len();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << m) {
        let (block, rest): (Vec<usize>, Vec<usize>) = {
            let mut b = Vec::new();
            let mut r = Vec::new();
            for (i, &x) in items.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    b.push(x);
                } else {
                    r.push(x);
                }
            }
            (b, r)
        };
        for mut tail in ordered_partitions(&rest) {
            tail.insert(0, block.clone());
            out.push(tail);
        }
    }
    out
}

fn nodes(labels: &[usize], level: usize, filter: CellFilter) -> Vec<Node> {
    if level == 0 {
        if filter == CellFilter::Configuration && labels.len() != 1 {
            return Vec::new();
        }
        return vec![Node::Class(labels.to_vec())];
    }
    let mut out = Vec::new();
    for partition in ordered_partitions(labels) {
        let options: Vec<Vec<Node>> = partition.iter().map(|b| nodes(b, level - 1, filter)).collect();
        if options.iter().any(Vec::is_empty) {
            continue;
        }
        // Cartesian product, last block varying fastest.
        let mut combos: Vec<Vec<Node>> = vec![Vec::new()];
        for opts in &options {
            combos = combos
                .into_iter()
                .flat_map(|prefix| {
                    opts.iter().map(move |o| {
                        let mut next = prefix.clone();
                        next.push(o.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(combos.into_iter().map(Node::Split));
    }
    out
}

/// Every depth-`k` tree on an arbitrary label set, in deterministic order.
/// No resource checks; see [`enumerate_cells`].
pub fn enumerate_trees(labels: &[usize], k: usize, filter: CellFilter) -> Vec<PartitionTree> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    nodes(&sorted, k, filter)
        .into_iter()
        .map(|root| PartitionTree::new(k, root).expect("enumerated trees are well formed"))
        .collect()
}

/// Every cell of the `k`-th stratification of `A_{n-1}` on labels `1..=n`.
pub fn enumerate_cells(n: usize, k: usize, filter: CellFilter, limits: &Limits) -> Result<Vec<PartitionTree>> {
    validate_nk(n, k)?;
    limits.check("cell enumeration", n, k, count_cells(n, k, filter))?;
    let labels: Vec<usize> = (1..=n).collect();
    Ok(enumerate_trees(&labels, k, filter))
}

/// Combinatorial face order on trees; see [`PartitionTree::face_leq`].
pub fn face_leq(a: &PartitionTree, b: &PartitionTree) -> Result<bool> {
    a.face_leq(b)
}

/// A cell type that can live in a [`FacePoset`].
pub trait Cell: Clone + Eq + Hash + Send + Sync + fmt::Display {
    fn dimension(&self) -> usize;

    /// Cell-specific fields of the JSON record (besides `id` and `dim`).
    fn record(&self) -> serde_json::Map<String, Value>;

    /// Image under a permutation of the point labels.
    fn relabel(&self, sigma: &Permutation) -> Self;
}

impl Cell for PartitionTree {
    fn dimension(&self) -> usize {
        PartitionTree::dimension(self)
    }

    fn record(&self) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("tree".into(), Value::String(self.to_string()));
        m
    }

    fn relabel(&self, sigma: &Permutation) -> Self {
        PartitionTree::relabel(self, |x| sigma.apply(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetElement<C> {
    pub id: usize,
    pub cell: C,
    pub dim: usize,
}

/// Finite poset of cells ordered by "lies in the closure of".
///
/// Elements are numbered by increasing dimension, so `a < b` implies
/// `id(a) < id(b)`. Only the covering relation is stored.
#[derive(Debug, Clone)]
pub struct FacePoset<C> {
    elements: Vec<PosetElement<C>>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    index: HashMap<C, usize>,
}

impl<C: Cell> FacePoset<C> {
    /// Builds the poset from cells and a (reflexive) order predicate on cells.
    /// Fails if the predicate is not compatible with strictly increasing
    /// dimension.
    pub fn from_order(cells: Vec<C>, leq: impl Fn(&C, &C) -> bool + Sync) -> Result<Self> {
        let mut keyed: Vec<(usize, usize, C)> = cells
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c.dimension(), i, c))
            .collect();
        keyed.sort_by_key(|(d, i, _)| (*d, *i));
        let elements: Vec<PosetElement<C>> = keyed
            .into_iter()
            .enumerate()
            .map(|(id, (dim, _, cell))| PosetElement { id, cell, dim })
            .collect();
        let n = elements.len();

        let below: Vec<FixedBitSet> = elements
            .par_iter()
            .map(|b| {
                let mut set = FixedBitSet::with_capacity(n);
                for a in &elements {
                    if a.id != b.id && leq(&a.cell, &b.cell) {
                        set.insert(a.id);
                    }
                }
                set
            })
            .collect();

        for b in &elements {
            if let Some(a) = below[b.id].ones().find(|&a| elements[a].dim >= b.dim) {
                return Err(Error::InvalidParameter(format!(
                    "order relates {} (dim {}) below {} (dim {})",
                    elements[a].cell, elements[a].dim, b.cell, b.dim
                )));
            }
        }

        let mut covers = Vec::new();
        for b in 0..n {
            let mut reachable = FixedBitSet::with_capacity(n);
            for c in below[b].ones() {
                reachable.union_with(&below[c]);
            }
            for a in below[b].ones() {
                if !reachable.contains(a) {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        Ok(Self::from_covers(elements, covers))
    }

    fn from_covers(elements: Vec<PosetElement<C>>, covers: Vec<(usize, usize)>) -> Self {
        let mut up = vec![Vec::new(); elements.len()];
        for &(a, b) in &covers {
            up[a].push(b);
        }
        let index = elements.iter().map(|e| (e.cell.clone(), e.id)).collect();
        FacePoset { elements, covers, up, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PosetElement<C>] {
        &self.elements
    }

    pub fn cell(&self, id: usize) -> &C {
        &self.elements[id].cell
    }

    pub fn dim(&self, id: usize) -> usize {
        self.elements[id].dim
    }

    pub fn id_of(&self, cell: &C) -> Option<usize> {
        self.index.get(cell).copied()
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, id: usize) -> &[usize] {
        &self.up[id]
    }

    /// Strict up-sets, reconstituted from the covers by transitive closure.
    pub fn strictly_above(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        // Ids increase along the order, so a reverse sweep sees up-sets first.
        for a in (0..n).rev() {
            let mut set = FixedBitSet::with_capacity(n);
            for &b in &self.up[a] {
                set.insert(b);
                set.union_with(&above[b]);
            }
            above[a] = set;
        }
        above
    }

    /// The full strict relation as sorted `(lower, upper)` pairs.
    pub fn relation(&self) -> Vec<(usize, usize)> {
        self.strictly_above()
            .iter()
            .enumerate()
            .flat_map(|(a, set)| set.ones().map(move |b| (a, b)).collect::<Vec<_>>())
            .collect()
    }

    pub fn less_than(&self, a: usize, b: usize) -> bool {
        self.strictly_above()[a].contains(b)
    }

    /// Number of elements in a longest chain.
    pub fn longest_chain(&self) -> usize {
        let mut best = vec![1usize; self.len()];
        for a in (0..self.len()).rev() {
            for &b in &self.up[a] {
                best[a] = best[a].max(best[b] + 1);
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// Dimension of the order complex: longest chain length minus one.
    pub fn order_complex_dimension(&self) -> Option<usize> {
        self.longest_chain().checked_sub(1)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.len()];
        for &(_, b) in &self.covers {
            has_lower[b] = true;
        }
        (0..self.len()).filter(|&i| !has_lower[i]).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    /// Covers whose dimension drop is not exactly one.
    pub fn irregular_covers(&self) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .copied()
            .filter(|&(a, b)| self.dim(b) != self.dim(a) + 1)
            .collect()
    }

    /// Images of every element under `sigma`, as an id map.
    pub fn permutation_map(&self, sigma: &Permutation) -> Result<Vec<usize>> {
        self.elements
            .iter()
            .map(|e| {
                let image = e.cell.relabel(sigma);
                self.id_of(&image)
                    .ok_or_else(|| Error::Mismatch(format!("{} maps outside the poset", e.cell)))
            })
            .collect()
    }

    /// JSON document `{n, k, space, cells, covers}`.
    pub fn to_json(&self, n: usize, k: usize, space: &str) -> Value {
        let cells: Vec<Value> = self
            .elements
            .iter()
            .map(|e| {
                let mut m = serde_json::Map::new();
                m.insert("id".into(), json!(e.id));
                m.extend(e.cell.record());
                m.insert("dim".into(), json!(e.dim));
                Value::Object(m)
            })
            .collect();
        let covers: Vec<Value> = self.covers.iter().map(|(a, b)| json!([a, b])).collect();
        json!({ "n": n, "k": k, "space": space, "cells": cells, "covers": covers })
    }

    /// Graphviz Hasse diagram, bottom to top, one rank per dimension.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        let mut dims: Vec<usize> = self.elements.iter().map(|e| e.dim).collect();
        dims.dedup();
        for d in dims {
            let _ = write!(out, "  {{ rank=same;");
            for e in self.elements.iter().filter(|e| e.dim == d) {
                let _ = write!(out, " c{};", e.id);
            }
            let _ = writeln!(out, " }}");
        }
        for e in &self.elements {
            let _ = writeln!(out, "  c{} [label=\"{}\\ndim {}\"];", e.id, e.cell, e.dim);
        }
        for (a, b) in &self.covers {
            let _ = writeln!(out, "  c{a} -> c{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Face poset of the `k`-th stratification of `A_{n-1}`, optionally
/// restricted to configuration cells.
pub fn face_poset(n: usize, k: usize, filter: CellFilter, limits: &Limits) -> Result<FacePoset<PartitionTree>> {
    let cells = enumerate_cells(n, k, filter, limits)?;
    let keyed: HashMap<PartitionTree, usize> = cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let svs: Vec<_> = cells.iter().map(PartitionTree::to_signvector).collect();
    FacePoset::from_order(cells, |a, b| svs[keyed[a]].leq(&svs[keyed[b]]))
}

/// Face poset of the configuration cells: its order complex is the `k`-th
/// order Salvetti complex of `A_{n-1}`.
pub fn salvetti_poset(n: usize, k: usize, limits: &Limits) -> Result<FacePoset<PartitionTree>> {
    face_poset(n, k, CellFilter::Configuration, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(m: usize) -> u128 {
        (1..=m as u128).product()
    }

    #[test]
    fn counts_match_examples() {
        assert_eq!(count_cells(2, 2, CellFilter::All), 5);
        assert_eq!(count_cells(2, 2, CellFilter::Configuration), 4);
        assert_eq!(count_cells(3, 1, CellFilter::Configuration), 6);
        assert_eq!(count_cells(3, 2, CellFilter::Configuration), 24);
        for m in 1..=7 {
            assert_eq!(count_cells(m, 1, CellFilter::Configuration), factorial(m));
        }
        // Ordered set partitions (Fubini numbers).
        assert_eq!(count_cells(3, 1, CellFilter::All), 13);
        assert_eq!(count_cells(4, 1, CellFilter::All), 75);
    }

    #[test]
    fn enumeration_matches_counts() {
        for n in 1..=4 {
            for k in 1..=3 {
                for filter in [CellFilter::All, CellFilter::Configuration] {
                    if count_cells(n, k, filter) > 5000 {
                        continue;
                    }
                    let cells = enumerate_cells(n, k, filter, &Limits::default()).unwrap();
                    assert_eq!(cells.len() as u128, count_cells(n, k, filter), "n={n} k={k} {filter}");
                    let mut dedup = cells.clone();
                    dedup.sort();
                    dedup.dedup();
                    assert_eq!(dedup.len(), cells.len());
                    if filter == CellFilter::Configuration {
                        assert!(cells.iter().all(PartitionTree::is_configuration));
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_cells(3, 2, CellFilter::All, &Limits::default()).unwrap();
        let b = enumerate_cells(3, 2, CellFilter::All, &Limits::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn limits_refuse_with_projected_count() {
        let limits = Limits { max_cells: 10, ..Limits::default() };
        match enumerate_cells(3, 2, CellFilter::Configuration, &limits) {
            Err(Error::ResourceLimit { projected, limit, .. }) => {
                assert_eq!(projected, 24);
                assert_eq!(limit, 10);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
        assert!(enumerate_cells(7, 1, CellFilter::Configuration, &Limits::default()).is_err());
        assert!(enumerate_cells(2, 5, CellFilter::Configuration, &Limits::default()).is_err());
        assert!(enumerate_cells(0, 1, CellFilter::All, &Limits::default()).is_err());
    }

    #[test]
    fn face_leq_examples() {
        let t = |s: &str| s.parse::<PartitionTree>().unwrap();
        let diag = t("[[{1,2}]]");
        let e3 = t("[[{1},{2}]]");
        let e3_other = t("[[{2},{1}]]");
        assert!(face_leq(&diag, &e3).unwrap());
        assert!(face_leq(&e3, &e3).unwrap());
        assert!(!face_leq(&e3, &e3_other).unwrap());
        assert!(face_leq(&diag, &t("[{1,2}]")).is_err());
    }

    #[test]
    fn salvetti_examples() {
        let limits = Limits::default();
        let p = salvetti_poset(2, 2, &limits).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.order_complex_dimension(), Some(1));
        assert_eq!(p.covers().len(), 4);

        let p = salvetti_poset(3, 1, &limits).unwrap();
        assert_eq!(p.len(), 6);
        assert!(p.covers().is_empty());
        assert_eq!(p.order_complex_dimension(), Some(0));

        let p = salvetti_poset(3, 2, &limits).unwrap();
        assert_eq!(p.len(), 24);
        assert_eq!(p.order_complex_dimension(), Some(2));
        let dims: Vec<usize> = p.elements().iter().map(|e| e.dim).collect();
        assert_eq!(*dims.iter().min().unwrap(), 2 + 3 - 1);
        assert_eq!(*dims.iter().max().unwrap(), 6);
    }

    #[test]
    fn full_poset_has_diagonal_minimum() {
        for (n, k) in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)] {
            let p = face_poset(n, k, CellFilter::All, &Limits::default()).unwrap();
            let mins = p.minimal_elements();
            assert_eq!(mins.len(), 1);
            let labels: Vec<usize> = (1..=n).collect();
            assert_eq!(p.cell(mins[0]), &PartitionTree::diagonal(&labels, k).unwrap());
            assert_eq!(p.dim(mins[0]), k);
            assert!(p.maximal_elements().iter().all(|&m| p.dim(m) == n * k));
            assert!(p.irregular_covers().is_empty());
        }
    }

    #[test]
    fn dot_and_json_shapes() {
        let p = salvetti_poset(2, 2, &Limits::default()).unwrap();
        let v = p.to_json(2, 2, "euclidean");
        assert_eq!(v["space"], "euclidean");
        assert_eq!(v["cells"].as_array().unwrap().len(), 4);
        assert_eq!(v["covers"].as_array().unwrap().len(), 4);
        let dot = p.to_dot("sal");
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("->").count(), 4);
    }
}
