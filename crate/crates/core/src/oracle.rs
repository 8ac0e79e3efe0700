//! Exact feasibility of the linear systems that cut out cells.
//!
//! Every condition used here compares two coordinates at the same level, or
//! bounds one coordinate by a constant. Such a system is a difference
//! constraint system: it is feasible iff its constraint graph has no negative
//! cycle. Strict inequalities carry a symbolic positive infinitesimal, so
//! weights live in [`EpsRational`] and the answer is exact.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::combinat::{PartitionTree, SignSymbol, SignVector};
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// `finite + eps·ε` for a positive infinitesimal `ε`, ordered
/// lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EpsRational {
    pub finite: Rational,
    pub eps: Rational,
}

impl EpsRational {
    pub fn new(finite: Rational, eps: Rational) -> Self {
        EpsRational { finite, eps }
    }

    pub fn zero() -> Self {
        Self::from(Rational::zero())
    }

    pub fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    /// Value after substituting a concrete `ε`.
    pub fn instantiate(&self, eps: Rational) -> Rational {
        self.finite + self.eps * eps
    }
}

impl From<Rational> for EpsRational {
    fn from(finite: Rational) -> Self {
        EpsRational { finite, eps: Rational::zero() }
    }
}

impl Ord for EpsRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.finite.cmp(&other.finite).then(self.eps.cmp(&other.eps))
    }
}

impl PartialOrd for EpsRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: Self) -> Self {
        EpsRational { finite: self.finite + rhs.finite, eps: self.eps + rhs.eps }
    }
}

impl Sub for EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for EpsRational {
    type Output = EpsRational;
    fn neg(self) -> Self {
        EpsRational { finite: -self.finite, eps: -self.eps }
    }
}

impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps.is_zero() {
            write!(f, "{}", self.finite)
        } else if self.eps.is_negative() {
            write!(f, "{} - {}ε", self.finite, -self.eps)
        } else {
            write!(f, "{} + {}ε", self.finite, self.eps)
        }
    }
}

/// Coordinate `level` (1-based) of point `point`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub point: usize,
    pub level: usize,
}

impl Var {
    pub fn new(point: usize, level: usize) -> Self {
        Var { point, level }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}[{}]", self.point, self.level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Const(Rational),
}

impl From<Var> for Term {
    fn from(v: Var) -> Self {
        Term::Var(v)
    }
}

impl From<i64> for Term {
    fn from(c: i64) -> Self {
        Term::Const(Rational::from_integer(c))
    }
}

impl From<Rational> for Term {
    fn from(c: Rational) -> Self {
        Term::Const(c)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Const(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Lt,
    Le,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

/// `lhs rel rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub lhs: Term,
    pub rel: Relation,
    pub rhs: Term,
}

impl Constraint {
    fn level(&self) -> Result<usize> {
        match (self.lhs, self.rhs) {
            (Term::Var(a), Term::Var(b)) if a.level == b.level => Ok(a.level),
            (Term::Var(a), Term::Var(b)) => Err(Error::MalformedConstraint(format!(
                "{a} and {b} live on different levels"
            ))),
            (Term::Var(a), Term::Const(_)) | (Term::Const(_), Term::Var(a)) => Ok(a.level),
            (Term::Const(_), Term::Const(_)) => {
                Err(Error::MalformedConstraint(format!("{self} has no variable")))
            }
        }
    }

    fn holds(&self, value: &impl Fn(&Term) -> Rational) -> bool {
        let (l, r) = (value(&self.lhs), value(&self.rhs));
        match self.rel {
            Relation::Lt => l < r,
            Relation::Le => l <= r,
            Relation::Eq => l == r,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.rel, self.rhs)
    }
}

/// A conjunction of single-difference and unit-bound constraints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiffConstraintSystem {
    constraints: Vec<Constraint>,
}

impl DiffConstraintSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, lhs: impl Into<Term>, rel: Relation, rhs: impl Into<Term>) -> &mut Self {
        self.constraints.push(Constraint { lhs: lhs.into(), rel, rhs: rhs.into() });
        self
    }

    pub fn lt(&mut self, lhs: impl Into<Term>, rhs: impl Into<Term>) -> &mut Self {
        self.push(lhs, Relation::Lt, rhs)
    }

    pub fn le(&mut self, lhs: impl Into<Term>, rhs: impl Into<Term>) -> &mut Self {
        self.push(lhs, Relation::Le, rhs)
    }

    pub fn equal(&mut self, lhs: impl Into<Term>, rhs: impl Into<Term>) -> &mut Self {
        self.push(lhs, Relation::Eq, rhs)
    }

    pub fn extend(&mut self, other: &DiffConstraintSystem) -> &mut Self {
        self.constraints.extend_from_slice(&other.constraints);
        self
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .constraints
            .iter()
            .flat_map(|c| [c.lhs, c.rhs])
            .filter_map(|t| match t {
                Term::Var(v) => Some(v),
                Term::Const(_) => None,
            })
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    fn validate(&self) -> Result<()> {
        self.constraints.iter().try_for_each(|c| c.level().map(|_| ()))
    }

    /// Decides feasibility level by level.
    pub fn solve(&self) -> Result<Solution> {
        self.validate()?;
        let mut by_level: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (idx, c) in self.constraints.iter().enumerate() {
            by_level.entry(c.level()?).or_default().push(idx);
        }
        let mut values = BTreeMap::new();
        for indices in by_level.values() {
            match shortest_paths(&self.constraints, indices) {
                Ok(level_values) => values.extend(level_values),
                Err(cert) => return Ok(Solution::Infeasible(cert)),
            }
        }
        Ok(Solution::Feasible(Witness { values }))
    }

    /// Decides feasibility on the undecomposed constraint graph.
    pub fn solve_joint(&self) -> Result<Solution> {
        self.validate()?;
        let all: Vec<usize> = (0..self.constraints.len()).collect();
        Ok(match shortest_paths(&self.constraints, &all) {
            Ok(values) => Solution::Feasible(Witness { values }),
            Err(cert) => Solution::Infeasible(cert),
        })
    }

    pub fn is_feasible(&self) -> Result<bool> {
        Ok(self.solve()?.is_feasible())
    }
}

/// Outcome of [`DiffConstraintSystem::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Feasible(Witness),
    Infeasible(Certificate),
}

impl Solution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Solution::Feasible(_))
    }
}

/// Variable assignment over [`EpsRational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    values: BTreeMap<Var, EpsRational>,
}

impl Witness {
    pub fn get(&self, v: Var) -> Option<EpsRational> {
        self.values.get(&v).copied()
    }

    pub fn values(&self) -> &BTreeMap<Var, EpsRational> {
        &self.values
    }

    fn term(&self, t: &Term) -> EpsRational {
        match t {
            Term::Var(v) => self.values.get(v).copied().unwrap_or_else(EpsRational::zero),
            Term::Const(c) => EpsRational::from(*c),
        }
    }

    /// A positive value of `ε` small enough that every constraint of `sys`
    /// holds once it is substituted.
    pub fn admissible_eps(&self, sys: &DiffConstraintSystem) -> Rational {
        let mut eps = Rational::one();
        for c in sys.constraints() {
            let diff = self.term(&c.lhs) - self.term(&c.rhs);
            // finite < 0 with a positive infinitesimal part needs eps < -finite/eps_coeff.
            if diff.finite.is_negative() && diff.eps.is_positive() {
                let slack = -diff.finite / diff.eps;
                if slack < eps * Rational::from_integer(2) {
                    eps = slack / Rational::from_integer(2);
                }
            }
        }
        eps
    }

    /// Plain rational values obtained by substituting [`Witness::admissible_eps`].
    pub fn instantiate(&self, sys: &DiffConstraintSystem) -> BTreeMap<Var, Rational> {
        let eps = self.admissible_eps(sys);
        self.values.iter().map(|(v, x)| (*v, x.instantiate(eps))).collect()
    }

    /// Checks every constraint of `sys` over plain rationals.
    pub fn satisfies(&self, sys: &DiffConstraintSystem) -> bool {
        let values = self.instantiate(sys);
        let value = |t: &Term| match t {
            Term::Var(v) => values.get(v).copied().unwrap_or_else(Rational::zero),
            Term::Const(c) => *c,
        };
        sys.constraints().iter().all(|c| c.holds(&value))
    }
}

/// One inequality `to - from <= weight` read off a constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleStep {
    pub constraint: usize,
    /// For equalities: whether the `rhs - lhs` half was used.
    pub reversed: bool,
}

/// Negative cycle in the constraint graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub steps: Vec<CycleStep>,
}

impl Certificate {
    /// Sum of the step inequalities. Its left side telescopes to zero, so a
    /// lexicographically negative total is the contradiction `0 < 0` or
    /// `0 <= -c` with `c > 0`.
    pub fn total(&self, sys: &DiffConstraintSystem) -> EpsRational {
        self.steps
            .iter()
            .map(|s| edge_of(&sys.constraints()[s.constraint], s.reversed).2)
            .fold(EpsRational::zero(), |a, b| a + b)
    }

    /// Confirms the steps form a closed walk with negative total weight.
    pub fn verify(&self, sys: &DiffConstraintSystem) -> bool {
        if self.steps.is_empty() {
            return false;
        }
        let edges: Vec<_> = self
            .steps
            .iter()
            .map(|s| edge_of(&sys.constraints()[s.constraint], s.reversed))
            .collect();
        let closed = edges
            .iter()
            .zip(edges.iter().cycle().skip(1))
            .all(|(a, b)| a.1 == b.0);
        closed && self.total(sys).is_negative()
    }

    pub fn describe(&self, sys: &DiffConstraintSystem) -> String {
        self.steps
            .iter()
            .map(|s| {
                let c = sys.constraints()[s.constraint];
                if s.reversed {
                    format!("{} {} {}", c.rhs, c.rel, c.lhs)
                } else {
                    c.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }
}

/// Graph node: a variable or the ground (the constant 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum GraphNode {
    Ground,
    Var(Var),
}

/// Edge `(from, to, w)` meaning `value(to) - value(from) <= w`.
fn edge_of(c: &Constraint, reversed: bool) -> (GraphNode, GraphNode, EpsRational) {
    let split = |t: Term| match t {
        Term::Var(v) => (GraphNode::Var(v), Rational::zero()),
        Term::Const(k) => (GraphNode::Ground, k),
    };
    // lhs rel rhs  <=>  node(lhs) - node(rhs) rel c_rhs - c_lhs
    let (ln, lc) = split(c.lhs);
    let (rn, rc) = split(c.rhs);
    let bound = rc - lc;
    let strict = if c.rel == Relation::Lt { -Rational::one() } else { Rational::zero() };
    if reversed {
        // Only meaningful for equalities: node(rhs) - node(lhs) <= -(bound).
        (ln, rn, EpsRational::from(-bound))
    } else {
        (rn, ln, EpsRational::new(bound, strict))
    }
}

fn shortest_paths(
    constraints: &[Constraint],
    indices: &[usize],
) -> std::result::Result<BTreeMap<Var, EpsRational>, Certificate> {
    let mut edges = Vec::with_capacity(indices.len() * 2);
    for &idx in indices {
        let c = &constraints[idx];
        edges.push((edge_of(c, false), CycleStep { constraint: idx, reversed: false }));
        if c.rel == Relation::Eq {
            edges.push((edge_of(c, true), CycleStep { constraint: idx, reversed: true }));
        }
    }

    let mut nodes: Vec<GraphNode> = vec![GraphNode::Ground];
    for ((a, b, _), _) in &edges {
        nodes.push(*a);
        nodes.push(*b);
    }
    nodes.sort_unstable();
    nodes.dedup();
    let index = |node: &GraphNode| nodes.binary_search(node).expect("node registered");
    let edges: Vec<(usize, usize, EpsRational, CycleStep)> = edges
        .into_iter()
        .map(|((a, b, w), step)| (index(&a), index(&b), w, step))
        .collect();

    // Distances from a virtual source joined to every node by a zero edge.
    let mut dist = vec![EpsRational::zero(); nodes.len()];
    let mut pred: Vec<Option<usize>> = vec![None; nodes.len()];
    let mut last_relaxed = None;
    for _ in 0..nodes.len() {
        last_relaxed = None;
        for (e, (from, to, w, _)) in edges.iter().enumerate() {
            let candidate = dist[*from] + *w;
            if candidate < dist[*to] {
                dist[*to] = candidate;
                pred[*to] = Some(e);
                last_relaxed = Some(*to);
            }
        }
        if last_relaxed.is_none() {
            break;
        }
    }

    if let Some(mut v) = last_relaxed {
        // Walking back |V| predecessors lands on the cycle.
        for _ in 0..nodes.len() {
            v = edges[pred[v].expect("relaxed node has a predecessor")].0;
        }
        let start = v;
        let mut steps = Vec::new();
        loop {
            let e = pred[v].expect("cycle node has a predecessor");
            steps.push(edges[e].3);
            v = edges[e].0;
            if v == start {
                break;
            }
        }
        steps.reverse();
        return Err(Certificate { steps });
    }

    let ground = dist[index(&GraphNode::Ground)];
    Ok(nodes
        .iter()
        .zip(&dist)
        .filter_map(|(node, d)| match node {
            GraphNode::Var(v) => Some((*v, *d - ground)),
            GraphNode::Ground => None,
        })
        .collect())
}

fn pair_conditions(sys: &mut DiffConstraintSystem, i: usize, j: usize, s: SignSymbol, k: usize, weak: bool) {
    let top = match s {
        SignSymbol::Zero => 0,
        SignSymbol::Plus(m) | SignSymbol::Minus(m) => m,
    };
    for level in (top + 1..=k).rev() {
        sys.equal(Var::new(i, level), Var::new(j, level));
    }
    let rel = if weak { Relation::Le } else { Relation::Lt };
    match s {
        SignSymbol::Zero => {}
        SignSymbol::Plus(m) => {
            sys.push(Var::new(i, m), rel, Var::new(j, m));
        }
        SignSymbol::Minus(m) => {
            sys.push(Var::new(j, m), rel, Var::new(i, m));
        }
    }
}

/// The defining equalities and strict inequalities of the cell `sv`.
pub fn exact_conditions(sys: &mut DiffConstraintSystem, sv: &SignVector) {
    for ((i, j), s) in sv.pairs() {
        pair_conditions(sys, i, j, s, sv.depth(), false);
    }
}

/// The equalities and weak inequalities cutting out the closure of `sv`.
pub fn closure_conditions(sys: &mut DiffConstraintSystem, sv: &SignVector) {
    for ((i, j), s) in sv.pairs() {
        pair_conditions(sys, i, j, s, sv.depth(), true);
    }
}

/// Whether some configuration has sign vector `sv`.
pub fn realizable(sv: &SignVector) -> bool {
    let mut sys = DiffConstraintSystem::new();
    exact_conditions(&mut sys, sv);
    // Points without constraints still need a coordinate; none needed for feasibility.
    sys.is_feasible().expect("cell conditions are well formed")
}

/// Whether the cell `sub` meets the closure of the cell `sup`.
pub fn closure_leq_geometric(sub: &SignVector, sup: &SignVector) -> Result<bool> {
    if sub.depth() != sup.depth() || sub.labels() != sup.labels() {
        return Err(Error::Mismatch("sign vectors on different labels or depths".into()));
    }
    let mut sys = DiffConstraintSystem::new();
    exact_conditions(&mut sys, sub);
    closure_conditions(&mut sys, sup);
    sys.is_feasible()
}

/// The facet disjunct `p_ell[level] = sign` of a boundary-face query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryDisjunct {
    pub level: usize,
    pub sign: i64,
}

fn boundary_system(lambda: &PartitionTree, ell: usize, mu: &PartitionTree) -> Result<DiffConstraintSystem> {
    if !lambda.is_configuration() || !mu.is_configuration() {
        return Err(Error::InvalidParameter(
            "boundary-face queries need configuration trees".into(),
        ));
    }
    if lambda.depth() != mu.depth() {
        return Err(Error::Mismatch("trees of different depth".into()));
    }
    let labels = lambda.labels();
    if !labels.contains(&ell) {
        return Err(Error::Mismatch(format!("basepoint label {ell} not in {lambda}")));
    }
    let rest: Vec<usize> = labels.iter().copied().filter(|&x| x != ell).collect();
    if mu.labels() != rest {
        return Err(Error::Mismatch(format!("{mu} is not a tree on the labels other than {ell}")));
    }
    let k = lambda.depth();
    let mut sys = DiffConstraintSystem::new();
    for &x in &labels {
        for level in 1..=k {
            let v = Var::new(x, level);
            if x == ell {
                sys.le(-1, v).le(v, 1);
            } else {
                sys.lt(-1, v).lt(v, 1);
            }
        }
    }
    exact_conditions(&mut sys, &mu.to_signvector());
    closure_conditions(&mut sys, &lambda.to_signvector());
    Ok(sys)
}

/// Searches the facet disjuncts `p_ell[j] = ±1` (level ascending, `-` first)
/// for a point of the closure of `lambda` whose `ell`-th point lies on the
/// cube boundary while the remaining points realize `mu` in the open cube.
pub fn boundary_face_witness(
    lambda: &PartitionTree,
    ell: usize,
    mu: &PartitionTree,
) -> Result<Option<(BoundaryDisjunct, DiffConstraintSystem, Witness)>> {
    let base = boundary_system(lambda, ell, mu)?;
    for level in 1..=lambda.depth() {
        for sign in [-1i64, 1] {
            let mut sys = base.clone();
            sys.equal(Var::new(ell, level), sign);
            if let Solution::Feasible(w) = sys.solve()? {
                return Ok(Some((BoundaryDisjunct { level, sign }, sys, w)));
            }
        }
    }
    Ok(None)
}

/// Whether the basepoint cell `(ell, mu)` lies in the closure of the interior
/// cell `lambda` inside `(S^k)^n`.
pub fn boundary_face_feasible(lambda: &PartitionTree, ell: usize, mu: &PartitionTree) -> Result<bool> {
    Ok(boundary_face_witness(lambda, ell, mu)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use SignSymbol::*;

    fn x() -> Var {
        Var::new(1, 1)
    }
    fn y() -> Var {
        Var::new(2, 1)
    }
    fn z() -> Var {
        Var::new(3, 1)
    }

    #[test]
    fn strict_cycle_is_infeasible() {
        let mut sys = DiffConstraintSystem::new();
        sys.lt(x(), y()).lt(y(), z()).lt(z(), x());
        match sys.solve().unwrap() {
            Solution::Infeasible(cert) => {
                assert_eq!(cert.steps.len(), 3);
                assert!(cert.verify(&sys));
                assert_eq!(cert.total(&sys), EpsRational::new(0.into(), (-3).into()));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn equality_is_feasible() {
        let mut sys = DiffConstraintSystem::new();
        sys.equal(x(), y());
        let Solution::Feasible(w) = sys.solve().unwrap() else { panic!() };
        assert_eq!(w.get(x()), w.get(y()));
        assert!(w.satisfies(&sys));
    }

    #[test]
    fn boundary_pinned_with_strict_neighbour() {
        let mut sys = DiffConstraintSystem::new();
        sys.le(x(), 1).equal(x(), 1).lt(y(), x()).lt(-1, y());
        let Solution::Feasible(w) = sys.solve().unwrap() else { panic!() };
        assert_eq!(w.get(x()).unwrap(), EpsRational::from(Rational::from_integer(1)));
        let vy = w.get(y()).unwrap();
        assert_eq!(vy.finite, Rational::from_integer(1));
        assert!(vy.eps.is_negative());
        assert!(w.satisfies(&sys));
    }

    #[test]
    fn malformed_constraints_rejected() {
        let mut sys = DiffConstraintSystem::new();
        sys.lt(Var::new(1, 1), Var::new(2, 2));
        assert!(matches!(sys.solve(), Err(Error::MalformedConstraint(_))));
        let mut sys = DiffConstraintSystem::new();
        sys.lt(0, 1);
        assert!(sys.solve().is_err());
    }

    #[test]
    fn realizability_examples() {
        let cyclic = SignVector::from_fn(3, 1, |i, j| if (i, j) == (1, 3) { Minus(1) } else { Plus(1) }).unwrap();
        assert!(!realizable(&cyclic));
        let sv = SignVector::standard(2, 2, vec![Plus(2)]).unwrap();
        assert!(realizable(&sv));
        let t: PartitionTree = "[[{2}],[{1},{3}]]".parse().unwrap();
        assert!(realizable(&t.to_signvector()));
    }

    #[test]
    fn closure_examples() {
        let sv = |s| SignVector::standard(2, 2, vec![s]).unwrap();
        assert!(closure_leq_geometric(&sv(Zero), &sv(Plus(1))).unwrap());
        assert!(closure_leq_geometric(&sv(Plus(2)), &sv(Plus(2))).unwrap());
        assert!(!closure_leq_geometric(&sv(Plus(2)), &sv(Plus(1))).unwrap());
        assert!(closure_leq_geometric(&sv(Plus(1)), &sv(Minus(2))).unwrap());
        assert!(!closure_leq_geometric(&sv(Plus(2)), &sv(Minus(2))).unwrap());
    }

    #[test]
    fn boundary_face_examples() {
        let t = |s: &str| s.parse::<PartitionTree>().unwrap();
        // n = 2, k = 1: p1 sent to the basepoint from p1 < p2.
        let (d, sys, w) = boundary_face_witness(&t("[{1},{2}]"), 1, &t("[{2}]")).unwrap().unwrap();
        assert_eq!(d, BoundaryDisjunct { level: 1, sign: -1 });
        assert!(w.satisfies(&sys));

        let lambda = t("[{1},{2},{3}]");
        assert!(!boundary_face_feasible(&lambda, 2, &t("[{1},{3}]")).unwrap());
        assert!(!boundary_face_feasible(&lambda, 2, &t("[{3},{1}]")).unwrap());
        assert!(boundary_face_feasible(&lambda, 3, &t("[{1},{2}]")).unwrap());
        assert!(!boundary_face_feasible(&lambda, 3, &t("[{2},{1}]")).unwrap());
    }

    #[test]
    fn boundary_face_rejects_non_configuration_trees() {
        let t = |s: &str| s.parse::<PartitionTree>().unwrap();
        assert!(boundary_face_feasible(&t("[{1,2},{3}]"), 3, &t("[{1,2}]")).is_err());
        assert!(boundary_face_feasible(&t("[{1},{2}]"), 3, &t("[{1}]")).is_err());
    }
}
