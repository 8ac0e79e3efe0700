//! Integral cohomology rings `H*(X)^{⊗n}` for `X` a product of spheres or a
//! space with truncated polynomial cohomology, and the zero-divisor products
//! that bound higher topological complexity from below.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A ring generator of `H*(X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Generator {
    /// Fundamental class of `S^degree`; squares to zero.
    Sphere { degree: usize },
    /// Even-degree class `u` with `u^{height+1} = 0`.
    Trunc { degree: usize, height: usize },
}

impl Generator {
    pub fn degree(self) -> usize {
        match self {
            Generator::Sphere { degree } | Generator::Trunc { degree, .. } => degree,
        }
    }

    fn max_exponent(self) -> u32 {
        match self {
            Generator::Sphere { .. } => 1,
            Generator::Trunc { height, .. } => height as u32,
        }
    }
}

/// `H*(X)^{⊗n}` where `H*(X)` is the graded-commutative ring on `factors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RingDescriptor {
    factors: Vec<Generator>,
    tensor_power: usize,
}

impl RingDescriptor {
    pub fn new(factors: Vec<Generator>, tensor_power: usize) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("ring needs at least one generator".into()));
        }
        if tensor_power == 0 {
            return Err(Error::InvalidParameter("tensor power must be at least 1".into()));
        }
        for g in &factors {
            match *g {
                Generator::Sphere { degree: 0 } => {
                    return Err(Error::InvalidParameter("sphere generators need degree >= 1".into()))
                }
                Generator::Trunc { degree, height } if degree == 0 || degree % 2 == 1 || height == 0 => {
                    return Err(Error::InvalidParameter(format!(
                        "truncated generators need even positive degree and height >= 1, got degree {degree} height {height}"
                    )))
                }
                _ => {}
            }
        }
        Ok(RingDescriptor { factors, tensor_power })
    }

    /// `H*(S^k)^{⊗n}`.
    pub fn sphere(k: usize, n: usize) -> Result<Self> {
        Self::new(vec![Generator::Sphere { degree: k }], n)
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn tensor_power(&self) -> usize {
        self.tensor_power
    }

    /// The single-slot ring `H*(X)`.
    pub fn base(&self) -> RingDescriptor {
        RingDescriptor { factors: self.factors.clone(), tensor_power: 1 }
    }

    fn width(&self) -> usize {
        self.factors.len() * self.tensor_power
    }

    fn generator_at(&self, position: usize) -> Generator {
        self.factors[position % self.factors.len()]
    }

    pub fn zero(&self) -> RingElement {
        RingElement { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> RingElement {
        self.monomial(vec![0; self.width()], BigInt::one())
    }

    fn monomial(&self, exponents: Vec<u32>, coefficient: BigInt) -> RingElement {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponents, coefficient);
        }
        RingElement { ring: self.clone(), terms }
    }

    /// The class of generator `generator` pulled back along the projection
    /// to slot `slot` (1-based).
    pub fn slot_class(&self, generator: usize, slot: usize) -> Result<RingElement> {
        if generator >= self.factors.len() {
            return Err(Error::InvalidParameter(format!("no generator {generator}")));
        }
        if slot == 0 || slot > self.tensor_power {
            return Err(Error::InvalidParameter(format!("slot {slot} outside 1..={}", self.tensor_power)));
        }
        let mut e = vec![0; self.width()];
        e[(slot - 1) * self.factors.len() + generator] = 1;
        Ok(self.monomial(e, BigInt::one()))
    }

    /// Product of two basis monomials in normal order, or `None` when a
    /// relation kills it.
    fn multiply_monomials(&self, a: &[u32], b: &[u32]) -> Option<(Vec<u32>, bool)> {
        let mut out = Vec::with_capacity(a.len());
        for (p, (&x, &y)) in a.iter().zip(b).enumerate() {
            let e = x + y;
            if e > self.generator_at(p).max_exponent() {
                return None;
            }
            out.push(e);
        }
        // Each factor of `b` moves left past the factors of `a` in later positions.
        let mut odd_swaps = 0usize;
        let mut odd_in_a_after = 0usize;
        for p in (0..a.len()).rev() {
            let deg = self.generator_at(p).degree();
            if deg % 2 == 1 {
                if b[p] % 2 == 1 {
                    odd_swaps += odd_in_a_after;
                }
                odd_in_a_after += a[p] as usize;
            }
        }
        Some((out, odd_swaps % 2 == 1))
    }

    fn describe(&self, exponents: &[u32]) -> String {
        let g = self.factors.len();
        let mut parts = Vec::new();
        for (p, &e) in exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = match self.generator_at(p) {
                Generator::Sphere { .. } => "v",
                Generator::Trunc { .. } => "u",
            };
            let gen_tag = if g > 1 { format!("{}", p % g + 1) } else { String::new() };
            let slot = p / g + 1;
            let base = if g > 1 { format!("{name}{gen_tag}_{slot}") } else { format!("{name}_{slot}") };
            parts.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Integer combination of normal-form monomials. Exponents are listed slot
/// by slot, generators in descriptor order within a slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: RingDescriptor,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl RingElement {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Degree when every term has the same degree; `None` for zero or mixed.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|e| monomial_degree(&self.ring, e));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Term whose exponent vector is largest in lexicographic order.
    pub fn leading_term(&self) -> Option<(&[u32], &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (e.as_slice(), c))
    }

    fn check_same(&self, other: &RingElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Mismatch("ring elements over different descriptors".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Ok(RingElement { ring: self.ring.clone(), terms })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> RingElement {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        RingElement { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, exponent: usize) -> Result<RingElement> {
        let mut out = self.ring.one();
        for _ in 0..exponent {
            out = multiply(&out, self)?;
        }
        Ok(out)
    }

    pub fn describe_term(&self, exponents: &[u32]) -> String {
        self.ring.describe(exponents)
    }
}

fn monomial_degree(ring: &RingDescriptor, exponents: &[u32]) -> usize {
    exponents
        .iter()
        .enumerate()
        .map(|(p, &e)| ring.generator_at(p).degree() * e as usize)
        .sum()
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            let sep = if i > 0 { " " } else { "" };
            let abs = c.abs();
            let term = self.ring.describe(e);
            if abs.is_one() && term != "1" {
                write!(f, "{sep}{sign}{}{term}", if i > 0 { " " } else { "" })?;
            } else {
                write!(f, "{sep}{sign}{}{abs} {term}", if i > 0 { " " } else { "" })?;
            }
        }
        Ok(())
    }
}

/// Cup product with the Koszul sign rule.
pub fn multiply(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.check_same(b)?;
    let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            if let Some((e, negative)) = a.ring.multiply_monomials(ea, eb) {
                let c = ca * cb;
                let entry = terms.entry(e).or_default();
                if negative {
                    *entry -= c;
                } else {
                    *entry += c;
                }
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(RingElement { ring: a.ring.clone(), terms })
}

/// Pullback along the diagonal `X → X^n`: the slot monomials are multiplied
/// together in `H*(X)`.
pub fn diagonal_pullback(a: &RingElement) -> RingElement {
    let base = a.ring.base();
    let g = base.factors.len();
    let mut out = base.zero();
    for (e, c) in &a.terms {
        let mut product = base.monomial(vec![0; g], c.clone());
        for slot in e.chunks(g) {
            let factor = base.monomial(slot.to_vec(), BigInt::one());
            product = multiply(&product, &factor).expect("same base ring");
        }
        out = out.add(&product).expect("same base ring");
    }
    out
}

/// The explicit zero-divisor products to evaluate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum WitnessCase {
    /// `(v_2 - v_1)⋯(v_n - v_1)` in `H*(S^k)^{⊗n}`, and for even `k` also
    /// `(v_1 + ⋯ + v_{n-1} - (n-1) v_n)^n`.
    MultBySphere { n: usize, k: usize },
    /// `(u_2 - u_1)^{2m} (u_3 - u_1)^m ⋯ (u_n - u_1)^m` for `u` of even degree
    /// `d` with `u^{m+1} = 0`.
    Cohom { n: usize, m: usize, d: usize },
    /// Product over the spheres of `S^{k_1} × ⋯ × S^{k_m}` of the single-sphere
    /// witnesses, certifying `cl >= m(n-1) + #even k_j`.
    SpheresProduct { ks: Vec<usize>, n: usize },
}

/// One evaluated product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub expression: String,
    /// Number of factors, each checked to lie in the kernel of the diagonal.
    pub factors: usize,
    pub zero_divisors: bool,
    pub nonzero: bool,
    pub degree: Option<usize>,
    pub terms: usize,
    /// A basis monomial tracked by the argument, with its coefficient.
    pub target: String,
    #[serde(serialize_with = "crate::cupcalc::bigint_as_string")]
    pub target_coefficient: BigInt,
    pub leading: Option<String>,
    #[serde(serialize_with = "crate::cupcalc::opt_bigint_as_string")]
    pub leading_coefficient: Option<BigInt>,
}

pub(crate) fn bigint_as_string<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub(crate) fn opt_bigint_as_string<S: serde::Serializer>(
    x: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub case: WitnessCase,
    pub ring: RingDescriptor,
    pub products: Vec<ProductReport>,
    /// Largest certified number of zero-divisor factors with nonzero product.
    pub cl_lower_bound: usize,
}

impl WitnessReport {
    pub fn nonzero(&self) -> bool {
        self.products.iter().all(|p| p.nonzero && p.zero_divisors)
    }
}

/// Refuses witnesses whose total degree exceeds `max_degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessLimits {
    pub max_degree: usize,
}

impl Default for WitnessLimits {
    fn default() -> Self {
        WitnessLimits { max_degree: 96 }
    }
}

struct Product {
    expression: String,
    factors: Vec<RingElement>,
    target: Vec<u32>,
}

fn evaluate(ring: &RingDescriptor, p: Product) -> Result<ProductReport> {
    let zero_divisors = p.factors.iter().all(|f| diagonal_pullback(f).is_zero());
    let mut value = ring.one();
    for f in &p.factors {
        value = multiply(&value, f)?;
    }
    let leading = value.leading_term().map(|(e, c)| (ring.describe(e), c.clone()));
    Ok(ProductReport {
        expression: p.expression,
        factors: p.factors.len(),
        zero_divisors,
        nonzero: !value.is_zero(),
        degree: value.degree(),
        terms: value.term_count(),
        target: ring.describe(&p.target),
        target_coefficient: value.coefficient(&p.target),
        leading: leading.as_ref().map(|(s, _)| s.clone()),
        leading_coefficient: leading.map(|(_, c)| c),
    })
}

fn difference(ring: &RingDescriptor, generator: usize, i: usize, j: usize) -> Result<RingElement> {
    ring.slot_class(generator, i)?.sub(&ring.slot_class(generator, j)?)
}

/// Witness factors and the `(slot, exponent)` pairs of the tracked monomial.
type Factors = (Vec<RingElement>, Vec<(usize, u32)>);

/// `(v_2 - v_1)⋯(v_n - v_1)` for generator `g`; target `v_2⋯v_n`.
fn odd_sphere_factors(ring: &RingDescriptor, g: usize, n: usize) -> Result<Factors> {
    let factors = (2..=n).map(|i| difference(ring, g, i, 1)).collect::<Result<_>>()?;
    Ok((factors, (2..=n).map(|slot| (slot, 1)).collect()))
}

/// `n` copies of `v_1 + ⋯ + v_{n-1} - (n-1) v_n`; target `v_1⋯v_n`.
fn even_sphere_factors(ring: &RingDescriptor, g: usize, n: usize) -> Result<Factors> {
    let mut w = ring.slot_class(g, n)?.scale(&BigInt::from(-(n as i64 - 1)));
    for i in 1..n {
        w = w.add(&ring.slot_class(g, i)?)?;
    }
    Ok((vec![w; n], (1..=n).map(|slot| (slot, 1)).collect()))
}

fn target_exponents(ring: &RingDescriptor, g: usize, slots: &[(usize, u32)], into: &mut [u32]) {
    let width = ring.factors.len();
    for &(slot, e) in slots {
        into[(slot - 1) * width + g] = e;
    }
}

fn check_degree(total: usize, limits: &WitnessLimits) -> Result<()> {
    if total > limits.max_degree {
        return Err(Error::DegreeOutOfRange { degree: total, max: limits.max_degree });
    }
    Ok(())
}

/// Evaluates the witness products for `case`.
pub fn verify_witness(case: &WitnessCase, limits: &WitnessLimits) -> Result<WitnessReport> {
    match case {
        WitnessCase::MultBySphere { n, k } => {
            let (n, k) = (*n, *k);
            if n < 2 || k == 0 {
                return Err(Error::InvalidParameter("need n >= 2 and k >= 1".into()));
            }
            check_degree(n * k, limits)?;
            let ring = RingDescriptor::sphere(k, n)?;
            let mut products = Vec::new();
            let (factors, slots) = odd_sphere_factors(&ring, 0, n)?;
            let mut target = vec![0; ring.width()];
            target_exponents(&ring, 0, &slots, &mut target);
            let expression = (2..=n).map(|i| format!("(v_{i} - v_1)")).collect::<Vec<_>>().join(" ");
            products.push(evaluate(&ring, Product { expression, factors, target })?);
            if k % 2 == 0 {
                let (factors, slots) = even_sphere_factors(&ring, 0, n)?;
                let mut target = vec![0; ring.width()];
                target_exponents(&ring, 0, &slots, &mut target);
                let sum = (1..n).map(|i| format!("v_{i}")).collect::<Vec<_>>().join(" + ");
                let expression = format!("({sum} - {} v_{n})^{n}", n - 1);
                products.push(evaluate(&ring, Product { expression, factors, target })?);
            }
            let cl_lower_bound = products
                .iter()
                .filter(|p| p.nonzero && p.zero_divisors)
                .map(|p| p.factors)
                .max()
                .unwrap_or(0);
            Ok(WitnessReport { case: case.clone(), ring, products, cl_lower_bound })
        }
        WitnessCase::Cohom { n, m, d } => {
            let (n, m, d) = (*n, *m, *d);
            if n < 2 || m == 0 {
                return Err(Error::InvalidParameter("need n >= 2 and m >= 1".into()));
            }
            check_degree(n * m * d, limits)?;
            let ring = RingDescriptor::new(vec![Generator::Trunc { degree: d, height: m }], n)?;
            let mut factors = vec![difference(&ring, 0, 2, 1)?; 2 * m];
            for i in 3..=n {
                factors.extend(std::iter::repeat_n(difference(&ring, 0, i, 1)?, m));
            }
            let target = vec![m as u32; n];
            let mut expression = format!("(u_2 - u_1)^{}", 2 * m);
            for i in 3..=n {
                expression.push_str(&format!(" (u_{i} - u_1)^{m}"));
            }
            let report = evaluate(&ring, Product { expression, factors, target })?;
            let cl_lower_bound = if report.nonzero && report.zero_divisors { report.factors } else { 0 };
            Ok(WitnessReport { case: case.clone(), ring, products: vec![report], cl_lower_bound })
        }
        WitnessCase::SpheresProduct { ks, n } => {
            let n = *n;
            if ks.is_empty() || n < 2 || ks.contains(&0) {
                return Err(Error::InvalidParameter("need nonempty sphere dimensions >= 1 and n >= 2".into()));
            }
            check_degree(n * ks.iter().sum::<usize>(), limits)?;
            let ring = RingDescriptor::new(ks.iter().map(|&k| Generator::Sphere { degree: k }).collect(), n)?;
            let mut factors = Vec::new();
            let mut target = vec![0; ring.width()];
            let mut pieces = Vec::new();
            for (g, &k) in ks.iter().enumerate() {
                let (f, slots) = if k % 2 == 0 {
                    even_sphere_factors(&ring, g, n)?
                } else {
                    odd_sphere_factors(&ring, g, n)?
                };
                pieces.push(format!("[S^{k}: {} factors]", f.len()));
                factors.extend(f);
                target_exponents(&ring, g, &slots, &mut target);
            }
            let report = evaluate(&ring, Product { expression: pieces.join(" "), factors, target })?;
            let cl_lower_bound = if report.nonzero && report.zero_divisors { report.factors } else { 0 };
            Ok(WitnessReport { case: case.clone(), ring, products: vec![report], cl_lower_bound })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(ring: &RingDescriptor, slot: usize) -> RingElement {
        ring.slot_class(0, slot).unwrap()
    }

    #[test]
    fn slot_classes() {
        let r = RingDescriptor::sphere(2, 3).unwrap();
        assert_eq!(v(&r, 2).degree(), Some(2));
        assert_eq!(multiply(&v(&r, 1), &v(&r, 2)).unwrap().degree(), Some(4));
        assert!(multiply(&v(&r, 1), &v(&r, 1)).unwrap().is_zero());
        assert!(r.slot_class(0, 4).is_err());
        assert!(r.slot_class(1, 1).is_err());
        assert!(RingDescriptor::new(vec![Generator::Trunc { degree: 3, height: 1 }], 2).is_err());
        assert!(RingDescriptor::new(vec![Generator::Sphere { degree: 0 }], 2).is_err());
    }

    #[test]
    fn koszul_signs() {
        let r = RingDescriptor::sphere(3, 2).unwrap();
        let ab = multiply(&v(&r, 1), &v(&r, 2)).unwrap();
        let ba = multiply(&v(&r, 2), &v(&r, 1)).unwrap();
        assert_eq!(ab, ba.scale(&BigInt::from(-1)));
        let r = RingDescriptor::sphere(2, 2).unwrap();
        assert_eq!(multiply(&v(&r, 1), &v(&r, 2)).unwrap(), multiply(&v(&r, 2), &v(&r, 1)).unwrap());
    }

    #[test]
    fn expansions() {
        let r = RingDescriptor::sphere(1, 3).unwrap();
        let p = multiply(&v(&r, 2).sub(&v(&r, 1)).unwrap(), &v(&r, 3).sub(&v(&r, 1)).unwrap()).unwrap();
        assert_eq!(p.coefficient(&[0, 1, 1]).abs(), BigInt::one());

        let cp1 = RingDescriptor::new(vec![Generator::Trunc { degree: 2, height: 1 }], 2).unwrap();
        let d = v(&cp1, 2).sub(&v(&cp1, 1)).unwrap();
        let sq = d.pow(2).unwrap();
        assert_eq!(sq, cp1.monomial(vec![1, 1], BigInt::from(-2)));
    }

    #[test]
    fn pullback_examples() {
        for n in 2..=4 {
            for k in 1..=4 {
                let r = RingDescriptor::sphere(k, n).unwrap();
                for i in 1..=n {
                    assert!(diagonal_pullback(&v(&r, i).sub(&v(&r, 1)).unwrap()).is_zero());
                }
                let top = diagonal_pullback(&v(&r, 1));
                assert_eq!(top, r.base().slot_class(0, 1).unwrap());
                if k % 2 == 0 {
                    let (w, _) = even_sphere_factors(&r, 0, n).unwrap();
                    assert!(diagonal_pullback(&w[0]).is_zero());
                }
            }
        }
        let r = RingDescriptor::new(vec![Generator::Sphere { degree: 1 }, Generator::Sphere { degree: 1 }], 2).unwrap();
        // x_1 y_2 pulls back to x y; y_1 x_2 pulls back to y x = -x y.
        let a = multiply(&r.slot_class(0, 1).unwrap(), &r.slot_class(1, 2).unwrap()).unwrap();
        let b = multiply(&r.slot_class(1, 1).unwrap(), &r.slot_class(0, 2).unwrap()).unwrap();
        assert_eq!(diagonal_pullback(&a), diagonal_pullback(&b).scale(&BigInt::from(-1)));
        assert!(!diagonal_pullback(&a).is_zero());
    }

    #[test]
    fn witness_examples() {
        let limits = WitnessLimits::default();
        let r = verify_witness(&WitnessCase::Cohom { n: 2, m: 1, d: 2 }, &limits).unwrap();
        assert_eq!(r.products[0].target_coefficient, BigInt::from(-2));
        assert_eq!(r.cl_lower_bound, 2);

        let r = verify_witness(&WitnessCase::MultBySphere { n: 3, k: 2 }, &limits).unwrap();
        assert_eq!(r.products.len(), 2);
        assert!(r.nonzero());
        assert_eq!(r.cl_lower_bound, 3);

        let r = verify_witness(&WitnessCase::MultBySphere { n: 2, k: 3 }, &limits).unwrap();
        assert_eq!(r.products.len(), 1);
        assert!(r.products[0].nonzero && r.products[0].zero_divisors);
        assert_eq!(r.cl_lower_bound, 1);

        let too_big = WitnessLimits { max_degree: 4 };
        assert!(matches!(
            verify_witness(&WitnessCase::MultBySphere { n: 3, k: 2 }, &too_big),
            Err(Error::DegreeOutOfRange { degree: 6, max: 4 })
        ));
    }

    #[test]
    fn display_is_readable() {
        let r = RingDescriptor::sphere(2, 2).unwrap();
        let x = v(&r, 2).sub(&v(&r, 1)).unwrap();
        assert_eq!(x.to_string(), "-v_1 + v_2");
        assert_eq!(x.scale(&BigInt::from(3)).to_string(), "-3 v_1 + 3 v_2");
        assert_eq!(r.zero().to_string(), "0");
    }
}
