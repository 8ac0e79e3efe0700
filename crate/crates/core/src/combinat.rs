//! Sign symbols, sign vectors and their encoding as nested ordered set
//! partitions.
//!
//! A point configuration `p_1, …, p_n` in `R^k` determines, for every pair
//! `i < j`, the symbol `sign_k(p_j - p_i)`: the sign of the topmost nonzero
//! coordinate of the difference, tagged with that coordinate's level. The
//! collection of these symbols is a [`SignVector`]. Sign vectors that actually
//! arise from configurations are exactly the ones described by a
//! [`PartitionTree`]: order the points by their level-`k` coordinate, group
//! ties, then order each tie group by the level-`k-1` coordinate, and so on
//! down to level 1, where the remaining ties are coincident points.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{Error, Result};

/// An element of `S_k = {0, ±e_1, …, ±e_k}`.
///
/// The derived `Ord` is only a storage order (used for deterministic
/// iteration); the closure order is [`symbol_leq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignSymbol {
    Zero,
    Plus(usize),
    Minus(usize),
}

impl SignSymbol {
    /// Level of the symbol; `0` for [`SignSymbol::Zero`].
    pub fn level(self) -> usize {
        match self {
            SignSymbol::Zero => 0,
            SignSymbol::Plus(j) | SignSymbol::Minus(j) => j,
        }
    }

    pub fn is_valid(self, k: usize) -> bool {
        match self {
            SignSymbol::Zero => true,
            SignSymbol::Plus(j) | SignSymbol::Minus(j) => (1..=k).contains(&j),
        }
    }

    /// All `2k + 1` symbols at depth `k`, in the order
    /// `0, -e_1, +e_1, -e_2, +e_2, …`.
    pub fn all(k: usize) -> Vec<SignSymbol> {
        let mut out = Vec::with_capacity(2 * k + 1);
        out.push(SignSymbol::Zero);
        for j in 1..=k {
            out.push(SignSymbol::Minus(j));
            out.push(SignSymbol::Plus(j));
        }
        out
    }
}

impl Neg for SignSymbol {
    type Output = SignSymbol;

    fn neg(self) -> SignSymbol {
        match self {
            SignSymbol::Zero => SignSymbol::Zero,
            SignSymbol::Plus(j) => SignSymbol::Minus(j),
            SignSymbol::Minus(j) => SignSymbol::Plus(j),
        }
    }
}

impl fmt::Display for SignSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignSymbol::Zero => write!(f, "0"),
            SignSymbol::Plus(j) => write!(f, "+e{j}"),
            SignSymbol::Minus(j) => write!(f, "-e{j}"),
        }
    }
}

/// The `k`-dimensional sign of a vector: `sign(x_j)·e_j` for the largest `j`
/// with `x_j ≠ 0`, or `Zero` for the zero vector.
pub fn sign_of<T: Signed>(x: &[T]) -> Result<SignSymbol> {
    if x.is_empty() {
        return Err(Error::InvalidParameter(
            "sign vector of an empty coordinate tuple (k = 0)".into(),
        ));
    }
    for (idx, v) in x.iter().enumerate().rev() {
        if v.is_positive() {
            return Ok(SignSymbol::Plus(idx + 1));
        }
        if v.is_negative() {
            return Ok(SignSymbol::Minus(idx + 1));
        }
    }
    Ok(SignSymbol::Zero)
}

/// Closure order on `S_k`: `t ≤ s` iff the level set of `t` lies in the
/// closure of the level set of `s`.
///
/// The closure of `{sign_k = ±e_j}` is `{x_k = … = x_{j+1} = 0, ±x_j ≥ 0}`,
/// which contains `0` and every `±e_i` with `i < j`, but not `∓e_j`.
pub fn symbol_leq(t: SignSymbol, s: SignSymbol) -> bool {
    if t == s {
        return true;
    }
    match s {
        SignSymbol::Zero => false,
        SignSymbol::Plus(j) | SignSymbol::Minus(j) => t.level() < j,
    }
}

/// Index of the pair `(a, b)`, `a < b`, among the pairs of `0..n` listed in
/// lexicographic order.
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Assignment of a symbol to every pair of a finite label set.
///
/// `entry(i, j)` records `sign_k(p_j - p_i)`; reading a pair in reverse order
/// returns the negated symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    k: usize,
    labels: Vec<usize>,
    entries: Vec<SignSymbol>,
}

impl SignVector {
    /// Builds a sign vector on an explicit label set. `entries` follows the
    /// lexicographic order of pairs of sorted labels.
    pub fn new(k: usize, mut labels: Vec<usize>, entries: Vec<SignSymbol>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("depth k must be at least 1".into()));
        }
        if labels.is_empty() {
            return Err(Error::InvalidParameter("empty label set".into()));
        }
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("repeated label".into()));
        }
        let n = labels.len();
        if entries.len() != n * (n - 1) / 2 {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries, got {}",
                n * (n - 1) / 2,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| !s.is_valid(k)) {
            return Err(Error::InvalidParameter(format!("symbol {bad} invalid at depth {k}")));
        }
        Ok(SignVector { k, labels, entries })
    }

    /// Sign vector on the standard labels `1..=n`.
    pub fn standard(n: usize, k: usize, entries: Vec<SignSymbol>) -> Result<Self> {
        Self::new(k, (1..=n).collect(), entries)
    }

    /// Builds a sign vector on labels `1..=n` from a function of the pair.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(usize, usize) -> SignSymbol) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 1..=n {
            for j in i + 1..=n {
                entries.push(f(i, j));
            }
        }
        Self::standard(n, k, entries)
    }

    pub fn depth(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Raw entries in lexicographic pair order.
    pub fn entries(&self) -> &[SignSymbol] {
        &self.entries
    }

    fn position(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Symbol of the pair `(i, j)`. Reversed pairs return the negation;
    /// `i == j` returns `Zero`. Panics on unknown labels.
    pub fn get(&self, i: usize, j: usize) -> SignSymbol {
        let a = self.position(i).expect("label not in sign vector");
        let b = self.position(j).expect("label not in sign vector");
        self.get_by_position(a, b)
    }

    fn get_by_position(&self, a: usize, b: usize) -> SignSymbol {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Equal => SignSymbol::Zero,
            Less => self.entries[pair_index(self.labels.len(), a, b)],
            Greater => -self.entries[pair_index(self.labels.len(), b, a)],
        }
    }

    /// Iterator over `((i, j), symbol)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), SignSymbol)> + '_ {
        let n = self.labels.len();
        (0..n)
            .flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
            .zip(self.entries.iter())
            .map(move |((a, b), s)| ((self.labels[a], self.labels[b]), *s))
    }

    /// The sign vector on the labels other than `drop`. `None` if `drop` is
    /// the only label.
    pub fn without(&self, drop: usize) -> Option<SignVector> {
        if self.labels.len() < 2 {
            return None;
        }
        let labels: Vec<usize> = self.labels.iter().copied().filter(|&x| x != drop).collect();
        let entries = self
            .pairs()
            .filter(|((i, j), _)| *i != drop && *j != drop)
            .map(|(_, s)| s)
            .collect();
        Some(SignVector { k: self.k, labels, entries })
    }

    /// Componentwise [`symbol_leq`]; `false` when label sets or depths differ.
    pub fn leq(&self, other: &SignVector) -> bool {
        self.k == other.k
            && self.labels == other.labels
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(t, s)| symbol_leq(*t, *s))
    }

    /// Every sign vector over `S_k^{C(n,2)}` on labels `1..=n`, realizable or
    /// not. There are `(2k+1)^{C(n,2)}` of them.
    pub fn all_raw(n: usize, k: usize) -> Vec<SignVector> {
        let symbols = SignSymbol::all(k);
        let m = n * n.saturating_sub(1) / 2;
        let mut out = Vec::new();
        let mut digits = vec![0usize; m];
        loop {
            let entries = digits.iter().map(|&d| symbols[d]).collect();
            out.push(SignVector::standard(n, k, entries).expect("valid by construction"));
            let mut pos = 0;
            loop {
                if pos == m {
                    return out;
                }
                digits[pos] += 1;
                if digits[pos] < symbols.len() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, ((i, j), s)) in self.pairs().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}{j}:{s}")?;
        }
        write!(f, ")")
    }
}

/// One level of a partition tree.
///
/// A `Split` at level `j` lists its blocks in increasing order of the
/// level-`j` coordinate; each block is a node of level `j - 1`. Level-0 nodes
/// are coincidence classes of labels, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Class(Vec<usize>),
    Split(Vec<Node>),
}

impl Node {
    fn collect_labels(&self, out: &mut Vec<usize>) {
        match self {
            Node::Class(xs) => out.extend_from_slice(xs),
            Node::Split(children) => children.iter().for_each(|c| c.collect_labels(out)),
        }
    }

    fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn check(&self, level: usize) -> Result<()> {
        match (self, level) {
            (Node::Class(xs), 0) => {
                if xs.is_empty() {
                    return Err(Error::MalformedTree("empty coincidence class".into()));
                }
                if xs.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::MalformedTree(
                        "class elements must be strictly increasing".into(),
                    ));
                }
                Ok(())
            }
            (Node::Split(children), l) if l > 0 => {
                if children.is_empty() {
                    return Err(Error::MalformedTree(format!("empty partition at level {l}")));
                }
                children.iter().try_for_each(|c| c.check(l - 1))
            }
            (Node::Class(_), l) => Err(Error::MalformedTree(format!(
                "coincidence class found at level {l}, expected a partition"
            ))),
            (Node::Split(_), _) => Err(Error::MalformedTree("partition found below level 1".into())),
        }
    }

    fn block_count(&self) -> usize {
        match self {
            Node::Class(_) => 0,
            Node::Split(children) => children.len() + children.iter().map(Node::block_count).sum::<usize>(),
        }
    }

    fn is_configuration(&self) -> bool {
        match self {
            Node::Class(xs) => xs.len() == 1,
            Node::Split(children) => children.iter().all(Node::is_configuration),
        }
    }

    fn relabel(&self, f: &impl Fn(usize) -> usize) -> Node {
        match self {
            Node::Class(xs) => {
                let mut ys: Vec<usize> = xs.iter().map(|&x| f(x)).collect();
                ys.sort_unstable();
                Node::Class(ys)
            }
            Node::Split(children) => Node::Split(children.iter().map(|c| c.relabel(f)).collect()),
        }
    }

    fn fill(&self, level: usize, set: &mut impl FnMut(usize, usize, SignSymbol)) {
        match self {
            Node::Class(xs) => {
                for (a, &x) in xs.iter().enumerate() {
                    for &y in &xs[a + 1..] {
                        set(x, y, SignSymbol::Zero);
                    }
                }
            }
            Node::Split(children) => {
                for (a, lo) in children.iter().enumerate() {
                    let lo_labels = lo.labels();
                    for hi in &children[a + 1..] {
                        for y in hi.labels() {
                            for &x in &lo_labels {
                                set(x, y, SignSymbol::Plus(level));
                            }
                        }
                    }
                }
                for c in children {
                    c.fill(level - 1, set);
                }
            }
        }
    }

    fn write_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Class(xs) => {
                write!(f, "{{")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "}}")
            }
            Node::Split(children) => {
                write!(f, "[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    c.write_text(f)?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Depth-`k` nested ordered set partition; the canonical encoding of a cell
/// of the `k`-th Björner–Ziegler stratification of the braid arrangement.
///
/// Text form: partitions are written `[…]`, coincidence classes `{…}`, e.g.
/// `[[{2}],[{1},{3}]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTree {
    depth: usize,
    root: Node,
}

impl PartitionTree {
    pub fn new(depth: usize, root: Node) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidParameter("depth k must be at least 1".into()));
        }
        root.check(depth)?;
        let mut labels = root.labels();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedTree("blocks overlap".into()));
        }
        Ok(PartitionTree { depth, root })
    }

    /// The all-`Zero` tree: every point coincides.
    pub fn diagonal(labels: &[usize], depth: usize) -> Result<Self> {
        let mut xs = labels.to_vec();
        xs.sort_unstable();
        let mut node = Node::Class(xs);
        for _ in 0..depth {
            node = Node::Split(vec![node]);
        }
        Self::new(depth, node)
    }

    /// A depth-`k` tree whose level-`k` partition is `order` in singletons.
    pub fn separated(order: &[usize], depth: usize) -> Result<Self> {
        let blocks = order
            .iter()
            .map(|&x| {
                let mut node = Node::Class(vec![x]);
                for _ in 1..depth {
                    node = Node::Split(vec![node]);
                }
                node
            })
            .collect();
        Self::new(depth, Node::Split(blocks))
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Sorted label set.
    pub fn labels(&self) -> Vec<usize> {
        let mut xs = self.root.labels();
        xs.sort_unstable();
        xs
    }

    pub fn len(&self) -> usize {
        self.root.labels().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when every coincidence class is a singleton (distinct points).
    pub fn is_configuration(&self) -> bool {
        self.root.is_configuration()
    }

    /// Number of degrees of freedom of the cell: the total number of blocks
    /// over all partitions in the tree.
    pub fn dimension(&self) -> usize {
        self.root.block_count()
    }

    pub fn to_signvector(&self) -> SignVector {
        let labels = self.labels();
        let n = labels.len();
        let mut entries = vec![SignSymbol::Zero; n * (n - 1) / 2];
        let pos = |x: usize| labels.binary_search(&x).expect("label present");
        self.root.fill(self.depth, &mut |x, y, s| {
            let (a, b) = (pos(x), pos(y));
            if a < b {
                entries[pair_index(n, a, b)] = s;
            } else {
                entries[pair_index(n, b, a)] = -s;
            }
        });
        SignVector { k: self.depth, labels, entries }
    }

    /// Inverse of [`PartitionTree::to_signvector`]; fails with
    /// [`Error::Unrealizable`] when no configuration has this sign vector.
    pub fn from_signvector(sv: &SignVector) -> Result<Self> {
        let positions: Vec<usize> = (0..sv.len()).collect();
        let root = build_node(sv, &positions, sv.depth())?;
        Ok(PartitionTree { depth: sv.depth(), root })
    }

    /// Applies a relabeling of points. `f` must be injective on the labels.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> PartitionTree {
        PartitionTree { depth: self.depth, root: self.root.relabel(&f) }
    }

    /// Combinatorial face order: componentwise closure order of sign vectors.
    pub fn face_leq(&self, other: &PartitionTree) -> Result<bool> {
        if self.depth != other.depth || self.labels() != other.labels() {
            return Err(Error::Mismatch("face order needs trees on the same labels and depth".into()));
        }
        Ok(self.to_signvector().leq(&other.to_signvector()))
    }
}

fn build_node(sv: &SignVector, members: &[usize], level: usize) -> Result<Node> {
    if level == 0 {
        for (a, &x) in members.iter().enumerate() {
            for &y in &members[a + 1..] {
                if sv.get_by_position(x, y) != SignSymbol::Zero {
                    return Err(Error::Unrealizable);
                }
            }
        }
        let mut labels: Vec<usize> = members.iter().map(|&p| sv.labels[p]).collect();
        labels.sort_unstable();
        return Ok(Node::Class(labels));
    }

    // Group points that agree on levels >= `level`.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in members {
        match classes
            .iter_mut()
            .find(|c| sv.get_by_position(c[0], x).level() < level)
        {
            Some(c) => c.push(x),
            None => classes.push(vec![x]),
        }
    }
    for c in &classes {
        for (a, &x) in c.iter().enumerate() {
            if c[a + 1..].iter().any(|&y| sv.get_by_position(x, y).level() >= level) {
                return Err(Error::Unrealizable);
            }
        }
    }

    // Between classes every symbol must be ±e_level with one direction.
    let m = classes.len();
    let mut precedes = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let s = sv.get_by_position(classes[a][0], classes[b][0]);
            if s.level() != level {
                return Err(Error::Unrealizable);
            }
            for &x in &classes[a] {
                for &y in &classes[b] {
                    if sv.get_by_position(x, y) != s {
                        return Err(Error::Unrealizable);
                    }
                }
            }
            if s == SignSymbol::Plus(level) {
                precedes[a][b] = true;
            } else {
                precedes[b][a] = true;
            }
        }
    }

    // A tournament is a total order iff its out-degrees are pairwise distinct.
    let mut ranked: Vec<(usize, usize)> = (0..m)
        .map(|a| (precedes[a].iter().filter(|&&p| p).count(), a))
        .collect();
    ranked.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    if ranked.iter().enumerate().any(|(pos, (out, _))| *out != m - 1 - pos) {
        return Err(Error::Unrealizable);
    }

    let children = ranked
        .into_iter()
        .map(|(_, a)| build_node(sv, &classes[a], level - 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(Node::Split(children))
}

impl fmt::Display for PartitionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.write_text(f)
    }
}

impl FromStr for PartitionTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut parser = TreeParser { input: &bytes, pos: 0 };
        let (root, depth) = parser.node()?;
        if parser.pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input at byte {}", parser.pos)));
        }
        let tree = PartitionTree::new(depth, root)?;
        // Only canonical text is accepted so that the encoding stays bijective.
        if tree.to_string() != String::from_utf8_lossy(&bytes) {
            return Err(Error::Parse(format!("non-canonical tree text {s:?}")));
        }
        Ok(tree)
    }
}

struct TreeParser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{}' at byte {}", c as char, self.pos)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected a label at byte {start}")))
    }

    /// Returns the node and its level.
    fn node(&mut self) -> Result<(Node, usize)> {
        match self.peek() {
            Some(b'{') => {
                self.pos += 1;
                let mut xs = vec![self.number()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    xs.push(self.number()?);
                }
                self.expect(b'}')?;
                Ok((Node::Class(xs), 0))
            }
            Some(b'[') => {
                self.pos += 1;
                let (first, level) = self.node()?;
                let mut children = vec![first];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    let (c, l) = self.node()?;
                    if l != level {
                        return Err(Error::Parse("blocks at mixed depths".into()));
                    }
                    children.push(c);
                }
                self.expect(b']')?;
                Ok((Node::Split(children), level + 1))
            }
            _ => Err(Error::Parse(format!("unexpected input at byte {}", self.pos))),
        }
    }
}
