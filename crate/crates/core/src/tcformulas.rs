//! Closed forms for higher topological complexity `TC_n` of sphere products,
//! tori, symplectic manifolds and quaternionic projective spaces, and bounds
//! for the symmetric variant `TC^S_n(S^k)`.
//!
//! All values are reduced: a trivial fibration has genus 0.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Space whose complexity is reported.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    SphereProduct { ks: Vec<usize> },
    Torus { k: usize },
    Symplectic { m: usize },
    Quaternionic { m: usize },
    TcsSphere { k: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SphereProduct { ks } => {
                let s: Vec<String> = ks.iter().map(|k| format!("S^{k}")).collect();
                write!(f, "{}", s.join(" x "))
            }
            Family::Torus { k } => write!(f, "T^{k}"),
            Family::Symplectic { m } => write!(f, "symplectic M^{} (u^{m} != 0)", 2 * m),
            Family::Quaternionic { m } => write!(f, "HP^{m}"),
            Family::TcsSphere { k } => write!(f, "S^{k}"),
        }
    }
}

/// Known Lusternik–Schnirelmann category bracket `cat(X^{n-1}) <= TC_n(X) <= cat(X^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CatBracket {
    pub lower: usize,
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TcReport {
    #[serde(flatten)]
    pub family: Family,
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    pub value: Option<usize>,
    #[serde(serialize_with = "ratio_as_string")]
    pub rational_bound: Option<Ratio<i64>>,
    pub cat: Option<CatBracket>,
    pub provenance: String,
}

fn ratio_as_string<S: Serializer>(r: &Option<Ratio<i64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl TcReport {
    fn exact(family: Family, n: usize, value: usize, cat: Option<CatBracket>, provenance: &str) -> Self {
        TcReport {
            family,
            n,
            lower: value,
            upper: value,
            value: Some(value),
            rational_bound: None,
            cat,
            provenance: provenance.into(),
        }
    }

    /// Unreduced value `TC + 1`, when exact.
    pub fn unreduced(&self) -> Option<usize> {
        self.value.map(|v| v + 1)
    }

    pub fn render(&self, unreduced: bool) -> String {
        let shift = usize::from(unreduced);
        let name = if matches!(self.family, Family::TcsSphere { .. }) { "TC^S" } else { "TC" };
        let mut s = match self.value {
            Some(v) => format!("{name}_{}({}) = {}", self.n, self.family, v + shift),
            None => format!(
                "{} <= {name}_{}({}) <= {}",
                self.lower + shift,
                self.n,
                self.family,
                self.upper + shift
            ),
        };
        if let Some(r) = self.rational_bound {
            s.push_str(&format!("  [rational bound {r}]"));
        }
        if let Some(c) = self.cat {
            s.push_str(&format!("  [cat {} .. {}]", c.lower, c.upper));
        }
        if unreduced {
            s.push_str("  (unreduced)");
        }
        s
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

fn check_positive(name: &str, x: usize) -> Result<()> {
    if x == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `TC_n(S^{k_1} × ⋯ × S^{k_m}) = m(n-1) + l`, `l` the number of even `k_j`.
pub fn tc_sphere_product(ks: &[usize], n: usize) -> Result<TcReport> {
    check_n(n)?;
    if ks.is_empty() {
        return Err(Error::InvalidParameter("need at least one sphere".into()));
    }
    for &k in ks {
        check_positive("sphere dimension", k)?;
    }
    let m = ks.len();
    let l = ks.iter().filter(|&&k| k % 2 == 0).count();
    let cat = CatBracket { lower: m * (n - 1), upper: m * n };
    Ok(TcReport::exact(
        Family::SphereProduct { ks: ks.to_vec() },
        n,
        m * (n - 1) + l,
        Some(cat),
        "zero-divisor cup-length m(n-1)+l of the sphere product (l even spheres) meets the dimensional upper bound",
    ))
}

/// `TC_n(T^k) = k(n-1)`.
pub fn tc_torus(k: usize, n: usize) -> Result<TcReport> {
    check_n(n)?;
    check_positive("k", k)?;
    let cat = CatBracket { lower: k * (n - 1), upper: k * n };
    Ok(TcReport::exact(
        Family::Torus { k },
        n,
        k * (n - 1),
        Some(cat),
        "torus is a product of odd spheres; equals cat(T^{k(n-1)})",
    ))
}

/// `TC_n(M) = nm` for closed symplectic `M^{2m}`.
pub fn tc_symplectic(m: usize, n: usize) -> Result<TcReport> {
    check_n(n)?;
    check_positive("m", m)?;
    Ok(TcReport::exact(
        Family::Symplectic { m },
        n,
        n * m,
        Some(CatBracket { lower: m * (n - 1), upper: m * n }),
        "cup-length witness (u_2-u_1)^{2m}(u_3-u_1)^m...(u_n-u_1)^m for the symplectic class meets cat(M^n)",
    ))
}

/// `TC_n(HP^m) = nm`.
pub fn tc_quaternionic(m: usize, n: usize) -> Result<TcReport> {
    check_n(n)?;
    check_positive("m", m)?;
    Ok(TcReport::exact(
        Family::Quaternionic { m },
        n,
        n * m,
        Some(CatBracket { lower: m * (n - 1), upper: m * n }),
        "cup-length witness on the degree 4 generator meets cat((HP^m)^n)",
    ))
}

/// Upper bound `i - 1 - (i-2)/k` for the genus of the `i`-th symmetric
/// stage, with its integer floor.
pub fn genus_eps_upper(i: usize, k: usize) -> Result<(Ratio<i64>, usize)> {
    if i < 2 {
        return Err(Error::InvalidParameter(format!("i must be at least 2, got {i}")));
    }
    check_positive("k", k)?;
    let (ii, kk) = (i as i64, k as i64);
    let rational = Ratio::new((ii - 1) * kk - (ii - 2), kk);
    let floor = ((i - 1) * k - (i - 2)) / k;
    Ok((rational, floor))
}

/// Bounds for `TC^S_n(S^k)`, the sum of the stage genera plus `n - 1`.
///
/// The lower bound uses genus 1 at stage 2 and, for odd `k`, positive genus
/// at every stage. Exact value `2(n-1)` when `n = 2`, `k = 1`, or `n = 3`
/// with `k` odd.
pub fn tcs_sphere_upper(n: usize, k: usize) -> Result<TcReport> {
    check_n(n)?;
    check_positive("k", k)?;
    let (nn, kk) = (n as i64, k as i64);
    let rational = Ratio::new(((nn + 2) * (kk - 1) + 4) * (nn - 1), 2 * kk);
    let mut upper = n - 1;
    for i in 2..=n {
        upper += genus_eps_upper(i, k)?.1;
    }
    let stages = if k % 2 == 1 { n - 1 } else { 1 };
    let lower = (n - 1) + stages;
    let exact = n == 2 || k == 1 || (n == 3 && k % 2 == 1);
    let value = exact.then_some(2 * (n - 1));
    debug_assert_eq!(exact, lower == upper);
    Ok(TcReport {
        family: Family::TcsSphere { k },
        n,
        lower,
        upper,
        value,
        rational_bound: Some(rational),
        cat: None,
        provenance: "sum over stages i = 2..n of floor(i-1-(i-2)/k), plus n-1; lower bound from positive stage genera"
            .into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(tc_sphere_product(&[3], 2).unwrap().value, Some(1));
        assert_eq!(tc_sphere_product(&[2], 3).unwrap().value, Some(3));
        assert_eq!(tc_sphere_product(&[2, 3], 2).unwrap().value, Some(3));
        assert_eq!(tc_sphere_product(&[2, 3], 4).unwrap().value, Some(7));
        assert_eq!(tc_torus(2, 3).unwrap().value, Some(4));
        assert_eq!(tc_symplectic(1, 2).unwrap().value, Some(2));
        assert_eq!(tc_quaternionic(2, 3).unwrap().value, Some(6));
        assert!(tc_sphere_product(&[], 2).is_err());
        assert!(tc_sphere_product(&[0], 2).is_err());
        assert!(tc_torus(1, 1).is_err());
    }

    #[test]
    fn genus_bounds() {
        assert_eq!(genus_eps_upper(2, 7).unwrap(), (Ratio::from_integer(1), 1));
        assert_eq!(genus_eps_upper(3, 1).unwrap(), (Ratio::from_integer(1), 1));
        assert_eq!(genus_eps_upper(4, 2).unwrap(), (Ratio::from_integer(2), 2));
        assert_eq!(genus_eps_upper(4, 3).unwrap(), (Ratio::new(7, 3), 2));
    }

    #[test]
    fn symmetric_sphere() {
        for k in 1..=6 {
            let r = tcs_sphere_upper(2, k).unwrap();
            assert_eq!(r.rational_bound, Some(Ratio::from_integer(2)));
            assert_eq!((r.upper, r.value), (2, Some(2)));
        }
        let r = tcs_sphere_upper(3, 1).unwrap();
        assert_eq!((r.upper, r.value), (4, Some(4)));
        let r = tcs_sphere_upper(3, 3).unwrap();
        assert_eq!(r.rational_bound, Some(Ratio::new(14, 3)));
        assert_eq!((r.upper, r.value), (4, Some(4)));
        let r = tcs_sphere_upper(3, 2).unwrap();
        assert_eq!((r.lower, r.upper, r.value), (3, 4, None));
    }

    #[test]
    fn report_rendering() {
        let r = tc_torus(2, 3).unwrap();
        assert_eq!(r.unreduced(), Some(5));
        assert!(r.render(false).starts_with("TC_3(T^2) = 4"));
        let json = serde_json::to_value(tcs_sphere_upper(3, 3).unwrap()).unwrap();
        assert_eq!(json["rational_bound"], "14/3");
        assert_eq!(json["family"], "tcs-sphere");
    }
}
