//! Non-iterative formulas for the leading basis sequence `P^{(k−1)}`.
//!
//! With `b_n := P^{(k−1)}_{n+k−1}`, the generating function of `b` is
//! `(1 − c₁X − ⋯ − c_kX^k)^{−1}`. Two closed forms follow:
//!
//! * the multinomial sum over weighted compositions `i₁ + 2i₂ + ⋯ + k·i_k = n`
//!   ([`multinomial_term`]);
//! * the determinant of the `n×n` banded Toeplitz Hessenberg matrix with first
//!   row `(c₁, …, c_n)` and `−1` on the subdiagonal ([`hessenberg_det_symbolic`]).
//!
//! [`hessenberg_det_numeric_oracle`] evaluates the same determinant on integer
//! points by fraction-free elimination and never touches the recurrence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::recurrence::{RecurrenceSpec, TermBudget};
use crate::ring::{IntPoint, MultiPoly, VarList};

/// Counts `(i₁, …, i_k)` of one composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedComposition {
    pub counts: Vec<u32>,
}

impl WeightedComposition {
    /// `Σ i_j`.
    pub fn parts(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }
}

/// Lazy enumeration of `w₁i₁ + ⋯ + w_ki_k = n` in descending lexicographic
/// order on the counts. The enumerator owns all of its state, so each call
/// yields an independent stream.
#[derive(Debug, Clone)]
pub struct Compositions {
    weights: Vec<u64>,
    counts: Vec<u32>,
    // rem[p] = weight still to place in positions p..
    rem: Vec<u64>,
    primed: bool,
    exhausted: bool,
}

impl Compositions {
    fn new(weights: Vec<u64>, n: u64) -> Self {
        let k = weights.len();
        let mut rem = vec![0; k + 1];
        rem[0] = n;
        Compositions { weights, counts: vec![0; k], rem, primed: false, exhausted: k == 0 && n > 0 }
    }

    fn fill_from(&mut self, p: usize) {
        for q in p..self.weights.len() {
            let c = self.rem[q] / self.weights[q];
            self.counts[q] = c as u32;
            self.rem[q + 1] = self.rem[q] - c * self.weights[q];
        }
    }

    fn advance(&mut self) -> bool {
        let k = self.weights.len();
        for q in (0..k.saturating_sub(1)).rev() {
            if self.counts[q] > 0 {
                self.counts[q] -= 1;
                self.rem[q + 1] = self.rem[q] - self.counts[q] as u64 * self.weights[q];
                self.fill_from(q + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for Compositions {
    type Item = WeightedComposition;

    fn next(&mut self) -> Option<WeightedComposition> {
        if self.exhausted {
            return None;
        }
        let mut have = if self.primed {
            self.advance()
        } else {
            self.primed = true;
            self.fill_from(0);
            true
        };
        while have {
            if self.rem[self.weights.len()] == 0 {
                return Some(WeightedComposition { counts: self.counts.clone() });
            }
            have = self.advance();
        }
        self.exhausted = true;
        None
    }
}

/// Solutions of `i₁ + 2i₂ + ⋯ + k·i_k = n`.
pub fn enumerate_weighted_compositions(k: usize, n: u64) -> Compositions {
    Compositions::new((1..=k as u64).collect(), n)
}

/// Solutions of `i₁ + ⋯ + i_s = n`.
pub fn enumerate_compositions(s: usize, n: u64) -> Compositions {
    Compositions::new(vec![1; s], n)
}

/// `0!, 1!, …, n!`.
pub(crate) fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = Vec::with_capacity(n + 1);
    f.push(BigInt::one());
    for i in 1..=n {
        let next = &f[i - 1] * BigInt::from(i);
        f.push(next);
    }
    f
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Cache of `c_j^e`, filled on demand.
struct PowerCache<'a> {
    bases: &'a [MultiPoly],
    powers: Vec<Vec<MultiPoly>>,
}

impl<'a> PowerCache<'a> {
    fn new(bases: &'a [MultiPoly]) -> Self {
        let powers = bases.iter().map(|b| vec![MultiPoly::one(b.vars()), b.clone()]).collect();
        PowerCache { bases, powers }
    }

    fn get(&mut self, j: usize, e: u32) -> Result<&MultiPoly> {
        let e = e as usize;
        while self.powers[j].len() <= e {
            let next = self.powers[j].last().expect("seeded").try_mul(&self.bases[j])?;
            self.powers[j].push(next);
        }
        Ok(&self.powers[j][e])
    }
}

fn common_vars(coeffs: &[MultiPoly]) -> Result<VarList> {
    let vars = coeffs
        .first()
        .ok_or_else(|| Error::InvalidSpec("at least one coefficient required".into()))?
        .vars()
        .clone();
    for c in coeffs {
        if c.vars() != &vars {
            return Err(Error::VariableMismatch { left: vars.to_string(), right: c.vars().to_string() });
        }
    }
    Ok(vars)
}

/// `P^{(k−1)}_{n+k−1} = Σ (i₁+⋯+i_k)!/(i₁!⋯i_k!) · c₁^{i₁}⋯c_k^{i_k}` over
/// `i₁ + 2i₂ + ⋯ + k·i_k = n`.
pub fn multinomial_term(coeffs: &[MultiPoly], n: u64) -> Result<MultiPoly> {
    multinomial_term_with(coeffs, n, TermBudget::UNLIMITED)
}

pub fn multinomial_term_with(coeffs: &[MultiPoly], n: u64, budget: TermBudget) -> Result<MultiPoly> {
    signed_multinomial(coeffs, n, budget, |_| false)
}

/// Shared multinomial sum; `negate(composition)` flips the sign of one summand.
fn signed_multinomial<F>(coeffs: &[MultiPoly], n: u64, budget: TermBudget, negate: F) -> Result<MultiPoly>
where
    F: Fn(&WeightedComposition) -> bool,
{
    let vars = common_vars(coeffs)?;
    let fact = factorials(n as usize);
    let mut cache = PowerCache::new(coeffs);
    let mut total = MultiPoly::zero(&vars);
    for comp in enumerate_weighted_compositions(coeffs.len(), n) {
        let mut coefficient = fact[comp.parts() as usize].clone();
        for &i in &comp.counts {
            coefficient /= &fact[i as usize];
        }
        if negate(&comp) {
            coefficient = -coefficient;
        }
        let mut monomial = MultiPoly::constant(&vars, coefficient);
        for (j, &i) in comp.counts.iter().enumerate() {
            if i > 0 {
                monomial = monomial.try_mul(cache.get(j, i)?)?;
            }
        }
        total = total.try_add(&monomial)?;
        budget.check(&total)?;
    }
    Ok(total)
}

/// The `n×n` matrix with `c_{j−i+1}` on and above the diagonal (zero beyond
/// `c_k`), `sub` on the subdiagonal and zero below it.
fn banded_hessenberg(coeffs: &[MultiPoly], n: usize, sign: i64, sub: i64) -> Vec<Vec<MultiPoly>> {
    let vars = coeffs[0].vars();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j >= i && j - i < coeffs.len() {
                        coeffs[j - i].scale(&BigInt::from(sign))
                    } else if j + 1 == i {
                        MultiPoly::constant(vars, sub)
                    } else {
                        MultiPoly::zero(vars)
                    }
                })
                .collect()
        })
        .collect()
}

/// Matrix whose determinant is `P^{(k−1)}_{n+k−1}`: first row `(c₁, …, c_n)`,
/// `−1` on the subdiagonal.
pub fn hessenberg_matrix(coeffs: &[MultiPoly], n: usize) -> Vec<Vec<MultiPoly>> {
    banded_hessenberg(coeffs, n, 1, -1)
}

/// Determinant of an upper Hessenberg matrix over the polynomial ring via the
/// expansion along the last column:
/// `D_m = Σ_{r≤m} (−1)^{m−r} h_{r,m} (Π_{i=r}^{m−1} h_{i+1,i}) D_{r−1}`.
pub fn upper_hessenberg_det(matrix: &[Vec<MultiPoly>], vars: &VarList, budget: TermBudget) -> Result<MultiPoly> {
    let n = matrix.len();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidSpec("matrix is not square".into()));
        }
        if row.iter().take(i.saturating_sub(1)).any(|p| !p.is_zero()) {
            return Err(Error::InvalidSpec(format!("row {i} has entries below the subdiagonal")));
        }
    }
    let mut minors: Vec<MultiPoly> = vec![MultiPoly::one(vars)];
    for m in 0..n {
        let mut acc = MultiPoly::zero(vars);
        // r runs from m down to 0; `chain` holds Π_{i=r}^{m-1} h_{i+1,i}.
        let mut chain = MultiPoly::one(vars);
        for r in (0..=m).rev() {
            if r < m {
                chain = chain.try_mul(&matrix[r + 1][r])?;
                if chain.is_zero() {
                    break;
                }
            }
            let entry = &matrix[r][m];
            if entry.is_zero() || minors[r].is_zero() {
                continue;
            }
            let mut term = entry.try_mul(&chain)?.try_mul(&minors[r])?;
            if (m - r) % 2 == 1 {
                term = -term;
            }
            acc = acc.try_add(&term)?;
        }
        budget.check(&acc)?;
        minors.push(acc);
    }
    Ok(minors.pop().expect("non-empty"))
}

/// Exact determinant of [`hessenberg_matrix`]; `n = 0` gives 1.
pub fn hessenberg_det_symbolic(coeffs: &[MultiPoly], n: usize) -> Result<MultiPoly> {
    hessenberg_det_symbolic_with(coeffs, n, TermBudget::UNLIMITED)
}

pub fn hessenberg_det_symbolic_with(coeffs: &[MultiPoly], n: usize, budget: TermBudget) -> Result<MultiPoly> {
    let vars = common_vars(coeffs)?;
    upper_hessenberg_det(&hessenberg_matrix(coeffs, n), &vars, budget)
}

/// `b_n = (−1)^n · det` of the matrix with `−c_{j−i+1}` on and above the
/// diagonal and `+1` on the subdiagonal.
pub fn hessenberg_det_signed(coeffs: &[MultiPoly], n: usize) -> Result<MultiPoly> {
    let vars = common_vars(coeffs)?;
    let det = upper_hessenberg_det(&banded_hessenberg(coeffs, n, -1, 1), &vars, TermBudget::UNLIMITED)?;
    Ok(if n % 2 == 1 { -det } else { det })
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination
/// with row pivoting. Every division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// The Hessenberg determinant at an integer point, from the literal integer
/// matrix and [`bareiss_determinant`].
pub fn hessenberg_det_numeric_oracle(coeffs: &[MultiPoly], n: usize, point: &IntPoint) -> Result<BigInt> {
    let values: Vec<BigInt> = coeffs.iter().map(|c| c.eval_int(point)).collect::<Result<_>>()?;
    let matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j >= i && j - i < values.len() {
                        values[j - i].clone()
                    } else if j + 1 == i {
                        BigInt::from(-1)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(bareiss_determinant(matrix))
}

/// Coefficients `d_0..d_N` of `(1 − Σc_iX^i)(1 + Σ_{n≥1} b_nX^n)` for the
/// supplied `b_0..b_N` (`b_0` is expected to be 1).
pub fn series_product(coeffs: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    (0..b.len())
        .map(|m| {
            let mut d = b[m].clone();
            for (i, c) in coeffs.iter().enumerate().take(m) {
                d = &d - &(c * &b[m - 1 - i]);
            }
            d
        })
        .collect()
}

/// `P^{(j)}_n` from the leading sequence `b_m = P^{(k−1)}_{m+k−1}`:
/// `P^{(j)}_n = b_{n−j} − Σ_{m=j+1}^{k−1} c_{m−j}·b_{n−m}` with `b_{<0} = 0`.
///
/// `b` must hold at least `n − j + 1` entries.
pub fn basis_term_from_leading(coeffs: &[MultiPoly], b: &[MultiPoly], j: usize, n: usize) -> MultiPoly {
    let vars = coeffs[0].vars();
    let at = |idx: isize| -> MultiPoly {
        if idx < 0 {
            MultiPoly::zero(vars)
        } else {
            b[idx as usize].clone()
        }
    };
    let mut acc = at(n as isize - j as isize);
    for m in j + 1..coeffs.len() {
        let bm = at(n as isize - m as isize);
        if !bm.is_zero() {
            acc = &acc - &(&coeffs[m - j - 1] * &bm);
        }
    }
    acc
}

/// `P_n = Σ_j P_j·P^{(j)}_n` with each basis term rebuilt from `b`.
pub fn compose_from_leading(spec: &RecurrenceSpec, b: &[MultiPoly], n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(spec.vars());
    for (j, p) in spec.initial().iter().enumerate() {
        if !p.is_zero() {
            acc = &acc + &(p * &basis_term_from_leading(spec.coeffs(), b, j, n));
        }
    }
    acc
}

/// Sign exponent used by the closed form of the generalized Lucas polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LucasSign {
    /// `(−1)^{n + i₁ + ⋯ + i_k}`, which follows from `c_i = (−1)^{i+1}x_i`.
    Derived,
    /// `(−1)^{k + i₁ + ⋯ + i_k}`; kept only to demonstrate that it is wrong.
    AsPrinted,
}

/// Variables `x1..xk` of the generalized Lucas family.
pub fn lucas_vars(k: usize) -> VarList {
    VarList::new((1..=k).map(|i| format!("x{i}")))
}

/// Generalized Lucas recurrence of order `k ≥ 2`: `c_i = (−1)^{i+1}x_i`,
/// initial window `L_j = δ_{j,k−1}`.
pub fn generalized_lucas_spec(k: usize) -> Result<RecurrenceSpec> {
    if k < 2 {
        return Err(Error::InvalidSpec(format!("generalized Lucas polynomials need k >= 2, got {k}")));
    }
    let vars = lucas_vars(k);
    let coeffs = (0..k)
        .map(|i| {
            let x = MultiPoly::var_at(&vars, i);
            if i % 2 == 0 {
                x
            } else {
                -x
            }
        })
        .collect();
    RecurrenceSpec::with_delta_initials(vars, coeffs, k - 1)
}

/// `L_n(x₁, …, x_k)` by iterating the defining recurrence.
pub fn generalized_lucas(k: usize, n: usize) -> Result<MultiPoly> {
    let spec = generalized_lucas_spec(k)?;
    Ok(crate::recurrence::iterate_terms(&spec, n).pop().expect("n+1 terms"))
}

/// `L_{n+k−1}` from the multinomial closed form with the chosen sign.
pub fn generalized_lucas_closed(k: usize, n: u64, sign: LucasSign) -> Result<MultiPoly> {
    let spec = generalized_lucas_spec(k)?;
    let vars = spec.vars().clone();
    let xs: Vec<MultiPoly> = (0..k).map(|i| MultiPoly::var_at(&vars, i)).collect();
    let shift = match sign {
        LucasSign::Derived => n,
        LucasSign::AsPrinted => k as u64,
    };
    signed_multinomial(&xs, n, TermBudget::UNLIMITED, |comp| (shift + comp.parts()) % 2 == 1)
}

/// Whether an integer is an exact multiple; used by explicit-sum formulas
/// whose rational-looking factors must be integral.
pub(crate) fn exact_div(num: &BigInt, den: &BigInt) -> Option<BigInt> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::basis_sequence;

    fn vars_named(names: &[&str]) -> (VarList, Vec<MultiPoly>) {
        let v = VarList::new(names.iter().copied());
        let ps = names.iter().map(|n| MultiPoly::var(&v, n).unwrap()).collect();
        (v, ps)
    }

    fn counts(it: Compositions) -> Vec<Vec<u32>> {
        it.map(|c| c.counts).collect()
    }

    #[test]
    fn weighted_composition_examples() {
        assert_eq!(counts(enumerate_weighted_compositions(2, 2)), vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(counts(enumerate_weighted_compositions(4, 0)), vec![vec![0, 0, 0, 0]]);
        assert_eq!(
            counts(enumerate_weighted_compositions(3, 3)),
            vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(counts(enumerate_weighted_compositions(1, 5)), vec![vec![5]]);
    }

    // brute force over the box [0, n]^k
    fn brute_weighted(k: usize, n: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut c = vec![0u32; k];
        loop {
            let w: u32 = c.iter().enumerate().map(|(j, &i)| (j as u32 + 1) * i).sum();
            if w == n {
                out.push(c.clone());
            }
            let mut p = 0;
            loop {
                if p == k {
                    out.sort();
                    out.reverse();
                    return out;
                }
                c[p] += 1;
                if c[p] <= n {
                    break;
                }
                c[p] = 0;
                p += 1;
            }
        }
    }

    #[test]
    fn weighted_compositions_match_brute_force() {
        for k in 1..=4 {
            for n in 0..=9 {
                assert_eq!(counts(enumerate_weighted_compositions(k, n as u64)), brute_weighted(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn ordinary_composition_count() {
        for s in 1..=4usize {
            for n in 0..=8u64 {
                let count = enumerate_compositions(s, n).count();
                assert_eq!(BigInt::from(count), binomial(n + s as u64 - 1, s as u64 - 1));
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        let (_, q) = vars_named(&["q1", "q2"]);
        assert_eq!(multinomial_term(&q, 2).unwrap().to_string(), "q1^2 + q2");
        assert!(multinomial_term(&q, 0).unwrap().is_one());
        let (_, c) = vars_named(&["c1", "c2", "c3"]);
        assert_eq!(multinomial_term(&c, 3).unwrap().to_string(), "c1^3 + 2*c1*c2 + c3");
    }

    #[test]
    fn multinomial_matches_leading_basis() {
        let (v, c) = vars_named(&["c1", "c2", "c3"]);
        let spec = RecurrenceSpec::with_delta_initials(v, c.clone(), 2).unwrap();
        let basis = basis_sequence(&spec, 2, 12).unwrap();
        for n in 0..=10u64 {
            assert_eq!(multinomial_term(&c, n).unwrap(), basis[n as usize + 2]);
        }
    }

    #[test]
    fn hessenberg_examples() {
        let (v, c) = vars_named(&["c1", "c2"]);
        assert!(hessenberg_det_symbolic(&c, 0).unwrap().is_one());
        assert_eq!(hessenberg_det_symbolic(&c, 1).unwrap().to_string(), "c1");
        assert_eq!(hessenberg_det_symbolic(&c, 2).unwrap().to_string(), "c1^2 + c2");
        let x = MultiPoly::var(&VarList::new(["x"]), "x").unwrap();
        let fib = vec![x.clone(), MultiPoly::one(x.vars())];
        assert_eq!(hessenberg_det_symbolic(&fib, 4).unwrap().to_string(), "x^4 + 3*x^2 + 1");
        let _ = v;
    }

    #[test]
    fn signed_variant_agrees() {
        let (_, c) = vars_named(&["c1", "c2", "c3"]);
        for n in 0..=8 {
            assert_eq!(hessenberg_det_signed(&c, n).unwrap(), hessenberg_det_symbolic(&c, n).unwrap());
        }
    }

    #[test]
    fn hessenberg_rejects_non_hessenberg_input() {
        let v = VarList::new(["x"]);
        let one = MultiPoly::one(&v);
        let zero = MultiPoly::zero(&v);
        let m = vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![one.clone(), zero.clone(), one.clone()],
        ];
        assert!(upper_hessenberg_det(&m, &v, TermBudget::UNLIMITED).is_err());
    }

    #[test]
    fn bareiss_small_cases() {
        let b = |rows: Vec<Vec<i64>>| rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        assert_eq!(bareiss_determinant(b(vec![])), 1.into());
        assert_eq!(bareiss_determinant(b(vec![vec![1, 1], vec![-1, 1]])), 2.into());
        assert_eq!(bareiss_determinant(b(vec![vec![0, 1], vec![1, 0]])), (-1).into());
        assert_eq!(bareiss_determinant(b(vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]])), 6.into());
        assert_eq!(bareiss_determinant(b(vec![vec![1, 2], vec![2, 4]])), 0.into());
        assert_eq!(bareiss_determinant(b(vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]])), (-1).into());
    }

    #[test]
    fn numeric_oracle_examples() {
        let v = VarList::new(["x"]);
        let x = MultiPoly::var(&v, "x").unwrap();
        let fib = vec![x, MultiPoly::one(&v)];
        let at1: IntPoint = [("x".to_string(), BigInt::from(1))].into();
        assert_eq!(hessenberg_det_numeric_oracle(&fib, 0, &at1).unwrap(), 1.into());
        assert_eq!(hessenberg_det_numeric_oracle(&fib, 9, &at1).unwrap(), 55.into());
        let ones = vec![MultiPoly::one(&v), MultiPoly::one(&v)];
        assert_eq!(hessenberg_det_numeric_oracle(&ones, 2, &at1).unwrap(), 2.into());
    }

    #[test]
    fn series_inverse_is_one() {
        let (_, c) = vars_named(&["a", "b", "c"]);
        let b: Vec<_> = (0..=10).map(|n| multinomial_term(&c, n).unwrap()).collect();
        let d = series_product(&c, &b);
        assert!(d[0].is_one());
        assert!(d[1..].iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn compose_from_leading_reproduces_basis() {
        let (v, c) = vars_named(&["c1", "c2", "c3"]);
        let spec = RecurrenceSpec::with_delta_initials(v.clone(), c.clone(), 0).unwrap();
        let b: Vec<_> = (0..=12).map(|n| multinomial_term(&c, n).unwrap()).collect();
        for j in 0..3 {
            let basis = basis_sequence(&spec, j, 12).unwrap();
            for n in 0..=12 {
                assert_eq!(basis_term_from_leading(&c, &b, j, n), basis[n], "j={j} n={n}");
            }
        }
    }

    #[test]
    fn generalized_lucas_examples() {
        assert!(generalized_lucas(2, 1).unwrap().is_one());
        assert_eq!(generalized_lucas(2, 2).unwrap().to_string(), "x1");
        assert_eq!(generalized_lucas(2, 3).unwrap().to_string(), "x1^2 - x2");
        assert!(generalized_lucas(1, 3).is_err());
    }

    #[test]
    fn generalized_lucas_sign_conventions() {
        for k in 2..=4usize {
            for n in 0..=8u64 {
                let iter = generalized_lucas(k, n as usize + k - 1).unwrap();
                assert_eq!(generalized_lucas_closed(k, n, LucasSign::Derived).unwrap(), iter);
            }
        }
        // printed sign flips L_2 = x1 to -x1 at k = 2, n = 1
        let printed = generalized_lucas_closed(2, 1, LucasSign::AsPrinted).unwrap();
        assert_eq!(printed.to_string(), "-x1");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(5, 7), 0.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(exact_div(&10.into(), &5.into()), Some(2.into()));
        assert_eq!(exact_div(&10.into(), &3.into()), None);
    }
}
