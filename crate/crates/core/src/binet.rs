//! Root-based evaluation of the leading basis sequence `P^{(k−1)}`.
//!
//! The characteristic polynomial `g(X) = X^k − c₁X^{k−1} − ⋯ − c_k` is
//! instantiated at a numeric point, its roots are found by Aberth–Ehrlich
//! simultaneous iteration and clustered into a [`RootProfile`], and
//! `P^{(k−1)}_{n+k−1}` is recovered as
//!
//! * `Σ_{i₁+⋯+i_k=n} α₁^{i₁}⋯α_k^{i_k}` when all roots are simple,
//! * `Σ_{i₁+⋯+i_s=n} Π binom(i_j+m_j−1, i_j)·α_j^{i_j}` with multiplicities,
//! * `binom(n+k−1, n)·αⁿ` for a single root of multiplicity `k`.

use num_complex::Complex64;

use crate::closed_form::enumerate_compositions;
use crate::error::{Error, Result};

/// Iteration cap of the root finder.
pub const MAX_ITERATIONS: usize = 1000;
/// Required backward error `|g(z)| / Σ|a_j||z|^j` of every approximation.
pub const RESIDUAL_TOLERANCE: f64 = 1e-12;
/// Approximations closer than this (relative to `max(1, |z|)`) are one root.
pub const CLUSTER_RADIUS: f64 = 1e-6;

/// Upper limit on the number of compositions a Binet sum may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositionBudget(pub u64);

impl Default for CompositionBudget {
    fn default() -> Self {
        CompositionBudget(5_000_000)
    }
}

/// Distinct roots `α₁..α_s` of the characteristic polynomial with their
/// multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct RootProfile {
    roots: Vec<Complex64>,
    mults: Vec<u32>,
}

impl RootProfile {
    pub fn new(roots: Vec<Complex64>, mults: Vec<u32>) -> Result<Self> {
        if roots.is_empty() || roots.len() != mults.len() || mults.contains(&0) {
            return Err(Error::InvalidSpec("root profile needs matching, positive multiplicities".into()));
        }
        Ok(RootProfile { roots, mults })
    }

    /// All roots simple.
    pub fn distinct(roots: Vec<Complex64>) -> Result<Self> {
        let mults = vec![1; roots.len()];
        Self::new(roots, mults)
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    /// Degree of the characteristic polynomial, `Σ m_i`.
    pub fn order(&self) -> usize {
        self.mults.iter().map(|&m| m as usize).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.mults.iter().all(|&m| m == 1)
    }

    /// `[c₁..c_k]` such that `Π (X − α_i)^{m_i} = X^k − c₁X^{k−1} − ⋯ − c_k`.
    pub fn reconstruct_coeffs(&self) -> Vec<Complex64> {
        // monic, highest degree first
        let mut poly = vec![Complex64::new(1.0, 0.0)];
        for (&alpha, &m) in self.roots.iter().zip(&self.mults) {
            for _ in 0..m {
                let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
                for (i, &a) in poly.iter().enumerate() {
                    next[i] += a;
                    next[i + 1] -= a * alpha;
                }
                poly = next;
            }
        }
        poly[1..].iter().map(|a| -a).collect()
    }
}

/// Monic polynomial (highest degree first) and its derivative at `z`, plus
/// `Σ|a_j||z|^j` for backward-error scaling.
fn horner(poly: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let r = z.norm();
    for &a in poly {
        dp = dp * z + p;
        p = p * z + a;
        scale = scale * r + a.norm();
    }
    (p, dp, scale)
}

fn backward_error(poly: &[Complex64], z: Complex64) -> f64 {
    let (p, _, scale) = horner(poly, z);
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Numeric roots of `X^k − c₁X^{k−1} − ⋯ − c_k`, clustered by multiplicity.
pub fn char_roots(coeff_values: &[Complex64]) -> Result<RootProfile> {
    let k = coeff_values.len();
    if k == 0 {
        return Err(Error::InvalidSpec("order must be at least 1".into()));
    }
    if k == 1 {
        return RootProfile::distinct(vec![coeff_values[0]]);
    }
    if coeff_values.iter().any(|c| !c.is_finite()) {
        return Err(Error::NoConvergence { iterations: 0, residual: f64::NAN });
    }
    let poly: Vec<Complex64> = std::iter::once(Complex64::new(1.0, 0.0))
        .chain(coeff_values.iter().map(|c| -c))
        .collect();

    let radius = coeff_values
        .iter()
        .enumerate()
        .map(|(i, c)| c.norm().powf(1.0 / (i as f64 + 1.0)))
        .fold(0.0, f64::max);
    if radius == 0.0 {
        return RootProfile::new(vec![Complex64::new(0.0, 0.0)], vec![k as u32]);
    }

    let mut z: Vec<Complex64> = (0..k)
        .map(|j| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * j as f64 / k as f64 + 0.4))
        .collect();

    let mut settled_for = 0;
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut max_step = 0.0f64;
        for i in 0..k {
            let (p, dp, _) = horner(&poly, z[i]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let w = p / dp;
            let s: Complex64 = (0..k).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = w / (Complex64::new(1.0, 0.0) - w * s);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        let residual = z.iter().map(|&zi| backward_error(&poly, zi)).fold(0.0, f64::max);
        if residual <= RESIDUAL_TOLERANCE {
            settled_for += 1;
            // a few extra sweeps sharpen simple roots to full precision
            if settled_for >= 8 || max_step < 1e-16 {
                break;
            }
        }
    }
    let residual = z.iter().map(|&zi| backward_error(&poly, zi)).fold(0.0, f64::max);
    if residual > RESIDUAL_TOLERANCE || z.iter().any(|zi| !zi.is_finite()) {
        return Err(Error::NoConvergence { iterations, residual });
    }
    Ok(cluster(&poly, &z))
}

/// Groups approximations whose Weierstrass inclusion disks overlap, or that
/// lie within [`CLUSTER_RADIUS`] of each other. An m-fold root is only
/// resolved to about `ε^{1/m}`, so distance alone cannot merge its copies.
fn cluster(poly: &[Complex64], z: &[Complex64]) -> RootProfile {
    let k = z.len();
    let eps = f64::EPSILON;
    let radii: Vec<f64> = (0..k)
        .map(|i| {
            let (p, _, scale) = horner(poly, z[i]);
            let bound = p.norm() + 2.0 * k as f64 * eps * scale;
            let denom: f64 = (0..k).filter(|&j| j != i).map(|j| (z[i] - z[j]).norm()).product();
            if denom == 0.0 {
                f64::INFINITY
            } else {
                k as f64 * bound / denom
            }
        })
        .collect();

    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for i in 0..k {
        for j in i + 1..k {
            let d = (z[i] - z[j]).norm();
            let scale = z[i].norm().max(z[j].norm()).max(1.0);
            if d <= radii[i] + radii[j] || d <= CLUSTER_RADIUS * scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut roots = Vec::new();
    let mut mults = Vec::new();
    for i in 0..k {
        if find(&mut parent, i) != i {
            continue;
        }
        let members: Vec<Complex64> = (0..k).filter(|&j| find(&mut parent, j) == i).map(|j| z[j]).collect();
        let centroid = members.iter().sum::<Complex64>() / members.len() as f64;
        let root = if members.len() > 1 { refine_multiple(poly, centroid, &members) } else { centroid };
        roots.push(root);
        mults.push(members.len() as u32);
    }
    RootProfile { roots, mults }
}

/// Highest-degree-first derivative.
fn derivative(poly: &[Complex64]) -> Vec<Complex64> {
    let deg = poly.len() - 1;
    poly[..deg].iter().enumerate().map(|(i, &a)| a * (deg - i) as f64).collect()
}

/// An m-fold root of `g` is a simple root of `g^{(m−1)}`; Newton on that
/// derivative from the cluster centroid recovers it to near full precision.
/// The centroid is kept if Newton leaves the neighbourhood of the cluster.
fn refine_multiple(poly: &[Complex64], centroid: Complex64, members: &[Complex64]) -> Complex64 {
    let mut d = poly.to_vec();
    for _ in 1..members.len() {
        d = derivative(&d);
    }
    let spread = members.iter().map(|m| (m - centroid).norm()).fold(0.0, f64::max);
    let reach = 2.0 * spread.max(CLUSTER_RADIUS * centroid.norm().max(1.0));
    let mut z = centroid;
    for _ in 0..50 {
        let (p, dp, _) = horner(&d, z);
        if p == Complex64::new(0.0, 0.0) || dp == Complex64::new(0.0, 0.0) {
            break;
        }
        let step = p / dp;
        z -= step;
        if !z.is_finite() || (z - centroid).norm() > reach {
            return centroid;
        }
        if step.norm() <= 4.0 * f64::EPSILON * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Count of compositions of `n` into `s` parts, saturating at `u64::MAX`.
fn composition_count(s: usize, n: u64) -> u64 {
    // binom(n + s − 1, s − 1)
    let mut acc: u128 = 1;
    for i in 0..(s as u128).saturating_sub(1) {
        acc = acc * (n as u128 + 1 + i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn binom_f64(n: u64, k: u64) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Weighted complete homogeneous sum `Σ Π w_j[i_j]` over compositions of `n`.
fn weighted_sum(tables: &[Vec<Complex64>], n: u64, budget: CompositionBudget) -> Result<Complex64> {
    let count = composition_count(tables.len(), n);
    if count > budget.0 {
        return Err(Error::BudgetExceeded {
            limit: budget.0.min(usize::MAX as u64) as usize,
            actual: count.min(usize::MAX as u64) as usize,
        });
    }
    let mut total = Complex64::new(0.0, 0.0);
    for comp in enumerate_compositions(tables.len(), n) {
        total += comp
            .counts
            .iter()
            .zip(tables)
            .map(|(&i, t)| t[i as usize])
            .product::<Complex64>();
    }
    Ok(total)
}

/// `P^{(k−1)}_{n+k−1} = Σ_{i₁+⋯+i_k=n} α₁^{i₁}⋯α_k^{i_k}` for simple roots.
pub fn binet_distinct(profile: &RootProfile, n: u64, budget: CompositionBudget) -> Result<Complex64> {
    if !profile.is_simple() {
        return Err(Error::InvalidSpec("binet_distinct needs simple roots".into()));
    }
    let tables: Vec<Vec<Complex64>> = profile
        .roots
        .iter()
        .map(|&a| (0..=n).map(|i| a.powu(i as u32)).collect())
        .collect();
    weighted_sum(&tables, n, budget)
}

/// `P^{(k−1)}_{n+k−1} = Σ_{i₁+⋯+i_s=n} Π binom(i_j+m_j−1, i_j)·α_j^{i_j}`.
pub fn binet_multiple(profile: &RootProfile, n: u64, budget: CompositionBudget) -> Result<Complex64> {
    let tables: Vec<Vec<Complex64>> = profile
        .roots
        .iter()
        .zip(&profile.mults)
        .map(|(&a, &m)| {
            (0..=n)
                .map(|i| a.powu(i as u32) * binom_f64(i + m as u64 - 1, i))
                .collect()
        })
        .collect();
    weighted_sum(&tables, n, budget)
}

/// `P^{(k−1)}_{n+k−1} = binom(n+k−1, n)·αⁿ` when `g = (X − α)^k`.
pub fn binet_single(alpha: Complex64, k: usize, n: u64) -> Complex64 {
    alpha.powu(n as u32) * binom_f64(n + k as u64 - 1, n)
}

/// `Σ m_i α_iⁿ`, the power sum of the roots counted with multiplicity.
pub fn power_sum(profile: &RootProfile, n: u64) -> Complex64 {
    profile
        .roots
        .iter()
        .zip(&profile.mults)
        .map(|(&a, &m)| a.powu(n as u32) * m as f64)
        .sum()
}

/// Twelve significant digits, `%g` style: fixed notation for decimal
/// exponents in `[−5, 12)`, scientific otherwise, trailing zeros trimmed.
pub fn format_float(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa.to_string()), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `format_float` applied to both parts; the imaginary part is omitted when
/// it is exactly zero.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format_float(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{}{}i", format_float(z.re), sign, format_float(z.im.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(55.0), "55");
        assert_eq!(format_float(-0.6180339887498949), "-0.61803398875");
        assert_eq!(format_float(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_float(1e20), "1e+20");
        assert_eq!(format_float(1.5e-7), "1.5e-07");
        assert_eq!(format_float(123456789012.0), "123456789012");
        assert_eq!(format_complex(Complex64::new(1.0, -2.5)), "1-2.5i");
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn close(a: Complex64, b: f64, rel: f64) -> bool {
        (a - c(b)).norm() <= rel * b.abs().max(1.0)
    }

    #[test]
    fn fibonacci_roots() {
        let p = char_roots(&[c(1.0), c(1.0)]).unwrap();
        assert_eq!(p.mults(), &[1, 1]);
        let mut re: Vec<f64> = p.roots().iter().map(|r| r.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] + 0.6180339887498949).abs() < 1e-12);
        assert!((re[1] - 1.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn double_root() {
        let p = char_roots(&[c(2.0), c(-1.0)]).unwrap();
        assert_eq!(p.mults(), &[2]);
        assert!((p.roots()[0] - c(1.0)).norm() < 1e-10);
    }

    #[test]
    fn order_one_root() {
        let p = char_roots(&[c(3.0)]).unwrap();
        assert_eq!(p.roots(), &[c(3.0)]);
        assert_eq!(p.mults(), &[1]);
    }

    #[test]
    fn quadruple_root_is_clustered() {
        // (X - 2)^4 = X^4 - 8X^3 + 24X^2 - 32X + 16
        let p = char_roots(&[c(8.0), c(-24.0), c(32.0), c(-16.0)]).unwrap();
        assert_eq!(p.mults(), &[4]);
        assert!((p.roots()[0] - c(2.0)).norm() < 1e-8);
    }

    #[test]
    fn zero_polynomial_coefficients() {
        let p = char_roots(&[c(0.0), c(0.0), c(0.0)]).unwrap();
        assert_eq!(p.mults(), &[3]);
        assert_eq!(p.roots()[0], c(0.0));
    }

    #[test]
    fn non_finite_input_is_an_error() {
        assert!(matches!(char_roots(&[c(f64::NAN), c(1.0)]), Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn distinct_examples() {
        let p = char_roots(&[c(1.0), c(1.0)]).unwrap();
        let b = CompositionBudget::default();
        assert!(close(binet_distinct(&p, 9, b).unwrap(), 55.0, 1e-8));
        assert!(close(binet_distinct(&p, 0, b).unwrap(), 1.0, 1e-15));
        let p3 = char_roots(&[c(2.0), c(-1.0), c(3.0)]).unwrap();
        assert!(close(binet_distinct(&p3, 1, b).unwrap(), 2.0, 1e-10));
    }

    #[test]
    fn multiple_examples() {
        let b = CompositionBudget::default();
        // (X-1)^2 (X-2) = X^3 - 4X^2 + 5X - 2; integer iteration of c = [4,-5,2]
        let p = char_roots(&[c(4.0), c(-5.0), c(2.0)]).unwrap();
        assert_eq!(p.order(), 3);
        let mut seq = vec![0i64, 0, 1];
        for n in 3..=5 {
            seq.push(4 * seq[n - 1] - 5 * seq[n - 2] + 2 * seq[n - 3]);
        }
        assert!(close(binet_multiple(&p, 3, b).unwrap(), seq[5] as f64, 1e-8));

        let single = RootProfile::new(vec![c(1.5)], vec![3]).unwrap();
        for n in 0..8 {
            let lhs = binet_multiple(&single, n, b).unwrap();
            assert!((lhs - binet_single(c(1.5), 3, n)).norm() < 1e-9);
        }
    }

    #[test]
    fn single_examples() {
        assert!(close(binet_single(c(1.0), 2, 5), 6.0, 1e-15));
        assert!(close(binet_single(c(7.0), 4, 0), 1.0, 1e-15));
        assert!(close(binet_single(c(2.0), 1, 3), 8.0, 1e-15));
    }

    #[test]
    fn budget_is_enforced() {
        let p = RootProfile::distinct(vec![c(1.0), c(2.0), c(3.0), c(4.0)]).unwrap();
        let err = binet_distinct(&p, 100, CompositionBudget(1000)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { limit: 1000, actual: 176851 }));
    }

    #[test]
    fn reconstruct_round_trip() {
        let coeffs = [c(1.0), c(-2.0), c(3.0), c(5.0)];
        let p = char_roots(&coeffs).unwrap();
        for (a, b) in p.reconstruct_coeffs().iter().zip(&coeffs) {
            assert!((a - b).norm() <= 1e-8 * b.norm().max(1.0));
        }
    }

    #[test]
    fn composition_count_values() {
        assert_eq!(composition_count(1, 10), 1);
        assert_eq!(composition_count(3, 3), 10);
        assert_eq!(composition_count(4, 100), 176851);
    }
}
