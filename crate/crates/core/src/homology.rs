//! Integral homology via Smith normal form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::complex::{OrbitComplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Integer matrix with sparse row storage and arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// From row-major entries; all rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameter("ragged matrix rows".into()));
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone().into());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.data[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) outside {}x{}", self.rows, self.cols);
        if value.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, value);
        }
    }

    fn add_to(&mut self, i: usize, j: usize, value: BigInt) {
        let next = self.get(i, j) + value;
        self.set(i, j, next);
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::Mismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    *acc.entry(*j).or_default() += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[i] = acc;
        }
        Ok(out)
    }
}

/// Invariant factors `d_1 | d_2 | …` (all positive) of a matrix; the rank is
/// their number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|f| !f.is_one()).cloned().collect()
    }
}

/// Invariant factors of `m`.
///
/// Unit entries are pivoted out first on the sparse representation; what
/// remains is reduced densely, always pivoting on a nonzero entry of minimal
/// absolute value.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = m.data.clone();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (i, r) in rows.iter().enumerate() {
        for &j in r.keys() {
            col_rows[j].insert(i);
        }
    }
    let mut alive = vec![true; m.rows];
    let mut units = 0usize;
    loop {
        let mut pivoted = false;
        for r in 0..m.rows {
            if !alive[r] {
                continue;
            }
            // Unit entry in the sparsest column.
            let Some(c) = rows[r]
                .iter()
                .filter(|(_, v)| v.abs().is_one())
                .map(|(c, _)| *c)
                .min_by_key(|c| col_rows[*c].len())
            else {
                continue;
            };
            let pivot = rows[r][&c].clone();
            let pivot_row = rows[r].clone();
            let targets: Vec<usize> = col_rows[c].iter().copied().filter(|&i| i != r).collect();
            for i in targets {
                let factor = &rows[i][&c] * &pivot;
                for (j, v) in &pivot_row {
                    let entry = rows[i].entry(*j).or_default();
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        rows[i].remove(j);
                        col_rows[*j].remove(&i);
                    } else {
                        col_rows[*j].insert(i);
                    }
                }
            }
            for j in pivot_row.keys() {
                col_rows[*j].remove(&r);
            }
            rows[r].clear();
            alive[r] = false;
            units += 1;
            pivoted = true;
        }
        if !pivoted {
            break;
        }
    }

    let rest_rows: Vec<usize> = (0..m.rows).filter(|&r| alive[r] && !rows[r].is_empty()).collect();
    let rest_cols: Vec<usize> = (0..m.cols).filter(|&c| !col_rows[c].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> = rest_cols.iter().enumerate().map(|(p, &c)| (c, p)).collect();
    let mut dense: Vec<Vec<BigInt>> = rest_rows
        .iter()
        .map(|&r| {
            let mut row = vec![BigInt::zero(); rest_cols.len()];
            for (c, v) in &rows[r] {
                row[col_pos[c]] = v.clone();
            }
            row
        })
        .collect();
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_diagonalize(&mut dense, &mut NoTransforms));
    factors.sort();
    SmithForm { factors }
}

/// Row and column operations applied during a dense reduction.
trait Recorder {
    fn swap_rows(&mut self, _i: usize, _j: usize) {}
    /// row_i += c·row_j
    fn add_row(&mut self, _i: usize, _j: usize, _c: &BigInt) {}
    fn negate_row(&mut self, _i: usize) {}
    fn swap_cols(&mut self, _i: usize, _j: usize) {}
    /// col_i += c·col_j
    fn add_col(&mut self, _i: usize, _j: usize, _c: &BigInt) {}
}

struct NoTransforms;
impl Recorder for NoTransforms {}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Reduces `a` in place to Smith normal form and returns the nonzero
/// diagonal.
fn dense_diagonalize(a: &mut [Vec<BigInt>], rec: &mut impl Recorder) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_abs_entry(a, t) else {
                return diag;
            };
            if pi != t {
                a.swap(pi, t);
                rec.swap_rows(pi, t);
            }
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(pj, t);
                }
                rec.swap_cols(pj, t);
            }
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = -(&a[i][t] / &p);
                if !q.is_zero() {
                    for j in t..cols {
                        let delta = &q * &a[t][j];
                        a[i][j] += delta;
                    }
                    rec.add_row(i, t, &q);
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = -(&a[t][j] / &p);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let delta = &q * &row[t];
                        row[j] += delta;
                    }
                    rec.add_col(j, t, &q);
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                    rec.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for v in a[t].iter_mut() {
                *v = -&*v;
            }
            rec.negate_row(t);
        }
        diag.push(a[t][t].clone());
    }
    diag
}

/// `P·M·Q = D` with `P`, `Q` unimodular and `D` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: IntegerMatrix,
    pub p: IntegerMatrix,
    pub p_inv: IntegerMatrix,
    pub q: IntegerMatrix,
    pub q_inv: IntegerMatrix,
}

impl SmithDecomposition {
    pub fn factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i))
            .filter(|v| !v.is_zero())
            .collect()
    }

    /// `P⁻¹·D·Q⁻¹`, which equals the input matrix.
    pub fn reconstruct(&self) -> IntegerMatrix {
        self.p_inv
            .mul(&self.d)
            .and_then(|x| x.mul(&self.q_inv))
            .expect("transform shapes agree")
    }
}

struct Transforms {
    p: Vec<Vec<BigInt>>,
    p_inv: Vec<Vec<BigInt>>,
    q: Vec<Vec<BigInt>>,
    q_inv: Vec<Vec<BigInt>>,
}

fn dense_identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

impl Recorder for Transforms {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.p.swap(i, j);
        for row in &mut self.p_inv {
            row.swap(i, j);
        }
    }

    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        let src = self.p[j].clone();
        for (x, s) in self.p[i].iter_mut().zip(&src) {
            *x += c * s;
        }
        for row in &mut self.p_inv {
            let delta = c * &row[i];
            row[j] -= delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.p[i] {
            *x = -&*x;
        }
        for row in &mut self.p_inv {
            row[i] = -&row[i];
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.q {
            row.swap(i, j);
        }
        self.q_inv.swap(i, j);
    }

    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for row in &mut self.q {
            let delta = c * &row[j];
            row[i] += delta;
        }
        let src = self.q_inv[i].clone();
        for (x, s) in self.q_inv[j].iter_mut().zip(&src) {
            *x -= c * s;
        }
    }
}

fn to_matrix(rows: Vec<Vec<BigInt>>, cols: usize) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(rows.len(), cols);
    for (i, r) in rows.into_iter().enumerate() {
        for (j, v) in r.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

/// Dense Smith normal form with unimodular transforms.
pub fn smith_decomposition(m: &IntegerMatrix) -> SmithDecomposition {
    let mut a = m.to_dense();
    let mut rec = Transforms {
        p: dense_identity(m.rows()),
        p_inv: dense_identity(m.rows()),
        q: dense_identity(m.cols()),
        q_inv: dense_identity(m.cols()),
    };
    dense_diagonalize(&mut a, &mut rec);
    SmithDecomposition {
        d: to_matrix(a, m.cols()),
        p: to_matrix(rec.p, m.rows()),
        p_inv: to_matrix(rec.p_inv, m.rows()),
        q: to_matrix(rec.q, m.cols()),
        q_inv: to_matrix(rec.q_inv, m.cols()),
    }
}

/// A finite chain complex of free abelian groups.
pub trait ChainComplex {
    /// Ranks of the chain groups in degrees `0..=dim`.
    fn chain_ranks(&self) -> Vec<usize>;

    /// `∂_d: C_d → C_{d-1}` with rows indexed by `(d-1)`-cells. Valid for
    /// `1 <= d <= dim`.
    fn boundary_matrix(&self, d: usize) -> Result<IntegerMatrix>;
}

fn check_degree(d: usize, ranks: usize) -> Result<()> {
    if d == 0 || d >= ranks {
        return Err(Error::DegreeOutOfRange { degree: d, max: ranks.saturating_sub(1) });
    }
    Ok(())
}

impl ChainComplex for SimplicialComplex {
    fn chain_ranks(&self) -> Vec<usize> {
        self.f_vector()
    }

    fn boundary_matrix(&self, d: usize) -> Result<IntegerMatrix> {
        check_degree(d, self.f_vector().len())?;
        let mut m = IntegerMatrix::zeros(self.simplices(d - 1).len(), self.simplices(d).len());
        for (col, s) in self.simplices(d).iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let row = self.index_of(&face).expect("complex is closed under faces");
                m.add_to(row, col, if i % 2 == 0 { BigInt::one() } else { -BigInt::one() });
            }
        }
        Ok(m)
    }
}

impl ChainComplex for OrbitComplex {
    fn chain_ranks(&self) -> Vec<usize> {
        self.f_vector()
    }

    fn boundary_matrix(&self, d: usize) -> Result<IntegerMatrix> {
        let ranks = self.f_vector();
        check_degree(d, ranks.len())?;
        let mut m = IntegerMatrix::zeros(ranks[d - 1], ranks[d]);
        for col in 0..ranks[d] {
            for (i, &row) in self.faces(d, col).iter().enumerate() {
                m.add_to(row, col, if i % 2 == 0 { BigInt::one() } else { -BigInt::one() });
            }
        }
        Ok(m)
    }
}

/// One homology group `Z^betti ⊕ Z/t_1 ⊕ …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub d: usize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "H_{} = {}", self.d, parts.join(" + "))
    }
}

/// Unreduced integral homology in degrees `0..=dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroups {
    pub degrees: Vec<HomologyGroup>,
}

impl HomologyGroups {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|g| g.betti).collect()
    }

    /// Torsion factors per degree as machine integers (saturating).
    pub fn torsion(&self) -> Vec<Vec<u64>> {
        self.degrees
            .iter()
            .map(|g| g.torsion.iter().map(|t| t.to_u64().unwrap_or(u64::MAX)).collect())
            .collect()
    }

    pub fn euler_char(&self) -> i64 {
        self.degrees
            .iter()
            .map(|g| if g.d % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// `{degrees: [{d, betti, torsion}]}`.
    pub fn to_json(&self) -> Value {
        let degrees: Vec<Value> = self
            .degrees
            .iter()
            .map(|g| {
                let torsion: Vec<Value> = g
                    .torsion
                    .iter()
                    .map(|t| t.to_u64().map_or_else(|| json!(t.to_string()), |x| json!(x)))
                    .collect();
                json!({ "d": g.d, "betti": g.betti, "torsion": torsion })
            })
            .collect();
        json!({ "degrees": degrees })
    }
}

impl fmt::Display for HomologyGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.degrees {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Unreduced integral homology of a chain complex.
pub fn homology(c: &impl ChainComplexSync) -> Result<HomologyGroups> {
    let ranks = c.chain_ranks();
    let top = ranks.len();
    // forms[d] is the Smith form of ∂_d; ∂_0 and ∂_{top} are zero.
    let forms: Vec<SmithForm> = (0..=top)
        .into_par_iter()
        .map(|d| {
            if d == 0 || d == top {
                Ok(SmithForm { factors: Vec::new() })
            } else {
                c.boundary_matrix(d).map(|m| smith_normal_form(&m))
            }
        })
        .collect::<Result<_>>()?;
    let degrees = (0..top)
        .map(|d| HomologyGroup {
            d,
            betti: ranks[d] - forms[d].rank() - forms[d + 1].rank(),
            torsion: forms[d + 1].torsion(),
        })
        .collect();
    Ok(HomologyGroups { degrees })
}

/// Chain complexes whose boundary matrices can be built from several threads.
pub trait ChainComplexSync: ChainComplex + Sync {}
impl<T: ChainComplex + Sync> ChainComplexSync for T {}
