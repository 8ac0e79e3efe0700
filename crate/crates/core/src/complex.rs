//! Ordered simplicial complexes (chains of a poset) and their quotients by
//! free group actions.

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arrangement::{Cell, FacePoset};
use crate::error::{Error, Result};
use crate::sphere::Permutation;

/// A simplicial complex on vertices `0..vertices` whose simplices are stored
/// as strictly increasing vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl SimplicialComplex {
    fn from_sets(vertices: usize, mut simplices: Vec<Vec<Vec<usize>>>) -> Self {
        while simplices.last().is_some_and(Vec::is_empty) {
            simplices.pop();
        }
        for layer in &mut simplices {
            layer.sort();
            layer.dedup();
        }
        let index = simplices
            .iter()
            .map(|layer| layer.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        SimplicialComplex { vertices, simplices, index }
    }

    /// The closure of a list of simplices. Each input is sorted; repeated
    /// vertices are an error.
    pub fn from_maximal(vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut layers: Vec<Vec<Vec<usize>>> = Vec::new();
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!("simplex {facet:?} repeats a vertex")));
            }
            if f.is_empty() {
                continue;
            }
            if let Some(&v) = f.iter().find(|&&v| v >= vertices) {
                return Err(Error::InvalidParameter(format!("vertex {v} outside 0..{vertices}")));
            }
            let m = f.len();
            if layers.len() < m {
                layers.resize(m, Vec::new());
            }
            for mask in 1u64..(1u64 << m) {
                let face: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                layers[face.len() - 1].push(face);
            }
        }
        Ok(Self::from_sets(vertices, layers))
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        self.index.get(d)?.get(simplex).copied()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_char(&self) -> i64 {
        euler(&self.f_vector())
    }

    /// `{dims, simplices}`.
    pub fn to_json(&self) -> Value {
        json!({ "dims": self.f_vector(), "simplices": self.simplices })
    }
}

pub(crate) fn euler(f: &[usize]) -> i64 {
    f.iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// The order complex: one simplex per nonempty chain of the poset.
pub fn order_complex<C: Cell>(poset: &FacePoset<C>) -> SimplicialComplex {
    let above = poset.strictly_above();
    // Chains starting at each element, grown upward; ids increase along chains.
    let per_start: Vec<Vec<Vec<usize>>> = (0..poset.len())
        .into_par_iter()
        .map(|start| {
            let mut out = Vec::new();
            let mut stack = vec![vec![start]];
            while let Some(chain) = stack.pop() {
                let last = *chain.last().expect("chains are nonempty");
                for next in above[last].ones() {
                    let mut longer = chain.clone();
                    longer.push(next);
                    stack.push(longer);
                }
                out.push(chain);
            }
            out
        })
        .collect();
    let mut layers: Vec<Vec<Vec<usize>>> = Vec::new();
    for chain in per_start.into_iter().flatten() {
        let d = chain.len() - 1;
        if layers.len() <= d {
            layers.resize(d + 1, Vec::new());
        }
        layers[d].push(chain);
    }
    SimplicialComplex::from_sets(poset.len(), layers)
}

/// A finite group acting on the vertices of a complex, one vertex map per
/// group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    maps: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Every map must be a bijection of `0..len`. The identity must be present.
    pub fn new(maps: Vec<Vec<usize>>) -> Result<Self> {
        let len = maps.first().map_or(0, Vec::len);
        for m in &maps {
            let mut seen = vec![false; len];
            if m.len() != len || m.iter().any(|&x| x >= len || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidParameter("group element is not a bijection of the vertices".into()));
            }
        }
        if !maps.iter().any(|m| m.iter().enumerate().all(|(i, &x)| i == x)) {
            return Err(Error::InvalidParameter("group action lacks the identity".into()));
        }
        Ok(GroupAction { maps })
    }

    /// The trivial group on `len` vertices.
    pub fn trivial(len: usize) -> Self {
        GroupAction { maps: vec![(0..len).collect()] }
    }

    /// `Σ_n` acting on a face poset by relabeling points.
    pub fn symmetric<C: Cell>(poset: &FacePoset<C>, n: usize) -> Result<Self> {
        let maps = Permutation::all(n)
            .iter()
            .map(|sigma| poset.permutation_map(sigma))
            .collect::<Result<Vec<_>>>()?;
        GroupAction::new(maps)
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    fn image(&self, g: usize, simplex: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = simplex.iter().map(|&v| self.maps[g][v]).collect();
        out.sort_unstable();
        out
    }

    fn is_identity(&self, g: usize) -> bool {
        self.maps[g].iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// Quotient of an ordered simplicial complex by a free action, kept as a
/// semi-simplicial set: orbit representatives plus face maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitComplex {
    reps: Vec<Vec<Vec<usize>>>,
    /// `face_table[d][r][i]`: orbit (in dimension `d - 1`) of the `i`-th
    /// face of representative `r`. Empty for `d = 0`.
    face_table: Vec<Vec<Vec<usize>>>,
    group_order: usize,
}

impl OrbitComplex {
    pub fn dimension(&self) -> Option<usize> {
        self.reps.len().checked_sub(1)
    }

    /// Lexicographically minimal chains, one per orbit, sorted.
    pub fn representatives(&self, d: usize) -> &[Vec<usize>] {
        self.reps.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self, d: usize, rep: usize) -> &[usize] {
        &self.face_table[d][rep]
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.reps.iter().map(Vec::len).collect()
    }

    pub fn euler_char(&self) -> i64 {
        euler(&self.f_vector())
    }

    /// `{dims, simplices, face_table}`.
    pub fn to_json(&self) -> Value {
        json!({ "dims": self.f_vector(), "simplices": self.reps, "face_table": self.face_table })
    }
}

/// Quotient of `c` by a free action. The action must send simplices to
/// simplices and must fix no simplex except through the identity.
pub fn quotient(c: &SimplicialComplex, action: &GroupAction) -> Result<OrbitComplex> {
    if action.maps.first().map_or(0, Vec::len) != c.vertex_count() {
        return Err(Error::Mismatch("action and complex have different vertex sets".into()));
    }
    let dims = c.simplices.len();
    let mut reps: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dims];
    // orbit_of[d][simplex index] = representative index.
    let mut orbit_of: Vec<Vec<usize>> = c.simplices.iter().map(|l| vec![usize::MAX; l.len()]).collect();
    for d in 0..dims {
        for (i, s) in c.simplices[d].iter().enumerate() {
            if orbit_of[d][i] != usize::MAX {
                continue;
            }
            let mut members = Vec::with_capacity(action.order());
            for g in 0..action.order() {
                let image = action.image(g, s);
                let j = c.index[d]
                    .get(&image)
                    .copied()
                    .ok_or_else(|| Error::Mismatch(format!("{s:?} maps to {image:?}, which is not a simplex")))?;
                if j == i && !action.is_identity(g) {
                    return Err(Error::NonFreeAction(format!("simplex {s:?} is fixed by a non-identity element")));
                }
                members.push(j);
            }
            // Simplices are sorted, so the first member index is the lexicographic minimum.
            let r = reps[d].len();
            for &j in &members {
                orbit_of[d][j] = r;
            }
            reps[d].push(c.simplices[d][*members.iter().min().expect("group is nonempty")].clone());
        }
    }
    // Orbit discovery scans simplices in sorted order, so the discovering
    // simplex is the orbit minimum and reps are already sorted.
    let face_table: Vec<Vec<Vec<usize>>> = (0..dims)
        .map(|d| {
            if d == 0 {
                return vec![Vec::new(); reps[0].len()];
            }
            reps[d]
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|i| {
                            let mut face = s.clone();
                            face.remove(i);
                            orbit_of[d - 1][c.index[d - 1][&face]]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(OrbitComplex { reps, face_table, group_order: action.order() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Limits;
    use crate::sphere::sphere_poset;

    fn cycle(m: usize) -> SimplicialComplex {
        let edges: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
        SimplicialComplex::from_maximal(m, &edges).unwrap()
    }

    #[test]
    fn small_complexes() {
        let c = cycle(4);
        assert_eq!(c.f_vector(), vec![4, 4]);
        assert_eq!(c.euler_char(), 0);
        let point = SimplicialComplex::from_maximal(1, &[vec![0]]).unwrap();
        assert_eq!(point.euler_char(), 1);
        assert_eq!(point.dimension(), Some(0));
        assert!(SimplicialComplex::from_maximal(2, &[vec![0, 0]]).is_err());
        assert!(SimplicialComplex::from_maximal(2, &[vec![0, 2]]).is_err());
        let tri = SimplicialComplex::from_maximal(3, &[vec![2, 0, 1]]).unwrap();
        assert_eq!(tri.f_vector(), vec![3, 3, 1]);
        assert_eq!(tri.index_of(&[0, 2]), Some(1));
    }

    #[test]
    fn order_complex_examples() {
        let limits = Limits::default();
        let c = order_complex(&sphere_poset(2, 1, &limits).unwrap().poset);
        assert_eq!(c.f_vector(), vec![4, 4]);
        let c = order_complex(&sphere_poset(2, 2, &limits).unwrap().poset);
        assert_eq!(c.f_vector(), vec![6, 12, 8]);
        assert_eq!(c.euler_char(), 2);
        let antichain = order_complex(&crate::arrangement::salvetti_poset(3, 1, &limits).unwrap());
        assert_eq!(antichain.f_vector(), vec![6]);
    }

    #[test]
    fn quotient_examples() {
        let limits = Limits::default();
        for (k, f) in [(1, vec![2, 2]), (2, vec![3, 6, 4])] {
            let p = sphere_poset(2, k, &limits).unwrap().poset;
            let c = order_complex(&p);
            let q = quotient(&c, &GroupAction::symmetric(&p, 2).unwrap()).unwrap();
            assert_eq!(q.f_vector(), f);
            assert_eq!(c.euler_char(), 2 * q.euler_char());
        }
        let c = cycle(5);
        let q = quotient(&c, &GroupAction::trivial(5)).unwrap();
        assert_eq!(q.f_vector(), c.f_vector());
        assert_eq!(q.representatives(1), c.simplices(1));
    }

    #[test]
    fn non_free_action_is_rejected() {
        // Reflection of the 4-cycle fixing vertices 0 and 2.
        let c = cycle(4);
        let action = GroupAction::new(vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]]).unwrap();
        match quotient(&c, &action) {
            Err(Error::NonFreeAction(msg)) => assert!(msg.contains("[0]")),
            other => panic!("expected rejection, got {other:?}"),
        }
        assert!(GroupAction::new(vec![vec![1, 0]]).is_err());
        assert!(GroupAction::new(vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn orbit_faces_are_representative_independent() {
        let p = sphere_poset(3, 2, &Limits::default()).unwrap().poset;
        let c = order_complex(&p);
        let action = GroupAction::symmetric(&p, 3).unwrap();
        let q = quotient(&c, &action).unwrap();
        let orbit_rep = |s: &[usize]| -> Vec<usize> {
            (0..action.order()).map(|g| action.image(g, s)).min().unwrap()
        };
        for d in 1..=q.dimension().unwrap() {
            for s in c.simplices(d) {
                let rep = orbit_rep(s);
                let r = q.representatives(d).binary_search(&rep).unwrap();
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    let fr = q.representatives(d - 1).binary_search(&orbit_rep(&face)).unwrap();
                    assert_eq!(q.faces(d, r)[i], fr);
                }
            }
        }
        for (d, &count) in c.f_vector().iter().enumerate() {
            assert_eq!(count, 6 * q.f_vector()[d]);
        }
    }
}
