//! Order-k linear recurrences with polynomial coefficients.
//!
//! A [`RecurrenceSpec`] fixes `P_{n+k} = c₁P_{n+k−1} + ⋯ + c_kP_n` together
//! with the initial window `P₀, …, P_{k−1}`. This module provides the plain
//! iteration engine, the basis sequences `P^{(j)}` (delta initial windows),
//! the basis-decomposition check, and the companion-matrix power engine.

use crate::error::{Error, Result};
use crate::ring::{MultiPoly, VarList};

/// Upper bound on the number of terms any intermediate polynomial may hold.
///
/// Symbolic terms can grow exponentially with `n` for multivariate
/// coefficients; a bounded budget turns that into a clean error.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TermBudget(pub Option<usize>);

impl TermBudget {
    pub const UNLIMITED: TermBudget = TermBudget(None);

    pub fn limit(terms: usize) -> Self {
        TermBudget(Some(terms))
    }

    pub fn check(&self, p: &MultiPoly) -> Result<()> {
        match self.0 {
            Some(limit) if p.num_terms() > limit => {
                Err(Error::BudgetExceeded { limit, actual: p.num_terms() })
            }
            _ => Ok(()),
        }
    }
}

/// One sequence: coefficients `c₁..c_k` and initial terms `P₀..P_{k−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    vars: VarList,
    coeffs: Vec<MultiPoly>,
    initial: Vec<MultiPoly>,
}

impl RecurrenceSpec {
    pub fn new(vars: VarList, coeffs: Vec<MultiPoly>, initial: Vec<MultiPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSpec("order must be at least 1".into()));
        }
        if coeffs.len() != initial.len() {
            return Err(Error::InvalidSpec(format!(
                "{} coefficients but {} initial terms",
                coeffs.len(),
                initial.len()
            )));
        }
        for p in coeffs.iter().chain(initial.iter()) {
            if p.vars() != &vars {
                return Err(Error::VariableMismatch {
                    left: vars.to_string(),
                    right: p.vars().to_string(),
                });
            }
        }
        Ok(RecurrenceSpec { vars, coeffs, initial })
    }

    /// The recurrence with initial window `δ_{ij}`, i.e. the basis sequence `P^{(j)}`.
    pub fn with_delta_initials(vars: VarList, coeffs: Vec<MultiPoly>, j: usize) -> Result<Self> {
        let k = coeffs.len();
        if j >= k {
            return Err(Error::IndexOutOfRange { index: j, bound: k });
        }
        let initial = delta_window(&vars, k, j);
        Self::new(vars, coeffs, initial)
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[MultiPoly] {
        &self.initial
    }

    /// Same coefficients, new initial window.
    pub fn with_initial(&self, initial: Vec<MultiPoly>) -> Result<Self> {
        Self::new(self.vars.clone(), self.coeffs.clone(), initial)
    }

    /// Whether the initial window is `δ_{i,j}`.
    pub fn has_delta_initials(&self, j: usize) -> bool {
        self.initial
            .iter()
            .enumerate()
            .all(|(i, p)| if i == j { p.is_one() } else { p.is_zero() })
    }

    /// Coefficients of `g(X) = X^k − c₁X^{k−1} − ⋯ − c_k`, highest degree first.
    pub fn characteristic_polynomial(&self) -> Vec<MultiPoly> {
        std::iter::once(MultiPoly::one(&self.vars))
            .chain(self.coeffs.iter().map(|c| -c))
            .collect()
    }
}

pub(crate) fn delta_window(vars: &VarList, k: usize, j: usize) -> Vec<MultiPoly> {
    (0..k)
        .map(|i| if i == j { MultiPoly::one(vars) } else { MultiPoly::zero(vars) })
        .collect()
}

/// `P_{n+k}` from the window `P_n..P_{n+k−1}` (oldest first).
fn step(coeffs: &[MultiPoly], window: &[MultiPoly]) -> MultiPoly {
    let k = coeffs.len();
    let mut next = MultiPoly::zero(window[0].vars());
    for (i, c) in coeffs.iter().enumerate() {
        let prev = &window[k - 1 - i];
        if !c.is_zero() && !prev.is_zero() {
            next = &next + &(c * prev);
        }
    }
    next
}

/// `[P₀, …, P_{n_max}]` by direct iteration.
pub fn iterate_terms(spec: &RecurrenceSpec, n_max: usize) -> Vec<MultiPoly> {
    iterate_terms_with(spec, n_max, TermBudget::UNLIMITED).expect("unlimited budget")
}

pub fn iterate_terms_with(spec: &RecurrenceSpec, n_max: usize, budget: TermBudget) -> Result<Vec<MultiPoly>> {
    let k = spec.order();
    let mut out: Vec<MultiPoly> = spec.initial.iter().take(n_max + 1).cloned().collect();
    for p in &out {
        budget.check(p)?;
    }
    while out.len() <= n_max {
        let next = step(&spec.coeffs, &out[out.len() - k..]);
        budget.check(&next)?;
        out.push(next);
    }
    Ok(out)
}

/// `[P^{(j)}_0, …, P^{(j)}_{n_max}]`.
pub fn basis_sequence(spec: &RecurrenceSpec, j: usize, n_max: usize) -> Result<Vec<MultiPoly>> {
    let basis = RecurrenceSpec::with_delta_initials(spec.vars.clone(), spec.coeffs.clone(), j)?;
    Ok(iterate_terms(&basis, n_max))
}

/// Outcome of [`decompose_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Holds,
    Mismatch { n: usize, lhs: MultiPoly, rhs: MultiPoly },
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        matches!(self, Decomposition::Holds)
    }
}

/// Checks `P_n = Σ_{i<k} P_i·P^{(i)}_n` for every `n ≤ n_max`.
pub fn decompose_check(spec: &RecurrenceSpec, n_max: usize) -> Decomposition {
    let bases: Vec<Vec<MultiPoly>> = (0..spec.order())
        .map(|j| basis_sequence(spec, j, n_max).expect("j < order"))
        .collect();
    decompose_check_against(spec, &bases, n_max)
}

/// [`decompose_check`] with caller-supplied basis sequences (one per `j`,
/// each of length at least `n_max + 1`).
pub fn decompose_check_against(spec: &RecurrenceSpec, bases: &[Vec<MultiPoly>], n_max: usize) -> Decomposition {
    let terms = iterate_terms(spec, n_max);
    for (n, lhs) in terms.iter().enumerate() {
        let mut rhs = MultiPoly::zero(&spec.vars);
        for (p_i, basis) in spec.initial.iter().zip(bases) {
            rhs = &rhs + &(p_i * &basis[n]);
        }
        if &rhs != lhs {
            return Decomposition::Mismatch { n, lhs: lhs.clone(), rhs };
        }
    }
    Decomposition::Holds
}

/// Square matrix over the polynomial ring, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn identity(vars: &VarList, size: usize) -> Self {
        let mut entries = vec![MultiPoly::zero(vars); size * size];
        for i in 0..size {
            entries[i * size + i] = MultiPoly::one(vars);
        }
        PolyMatrix { size, entries }
    }

    /// Companion matrix `C` acting on the state `(P_n, …, P_{n+k−1})ᵀ`:
    /// ones on the superdiagonal, last row `(c_k, c_{k−1}, …, c₁)`, so that
    /// `C·(P_n, …, P_{n+k−1})ᵀ = (P_{n+1}, …, P_{n+k})ᵀ`.
    pub fn companion(spec: &RecurrenceSpec) -> Self {
        let k = spec.order();
        let mut m = PolyMatrix { size: k, entries: vec![MultiPoly::zero(&spec.vars); k * k] };
        for i in 0..k - 1 {
            m.entries[i * k + i + 1] = MultiPoly::one(&spec.vars);
        }
        for j in 0..k {
            m.entries[(k - 1) * k + j] = spec.coeffs[k - 1 - j].clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &MultiPoly {
        &self.entries[row * self.size + col]
    }

    fn mul(&self, other: &Self, budget: TermBudget) -> Result<Self> {
        let n = self.size;
        let vars = self.entries[0].vars();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = MultiPoly::zero(vars);
                for l in 0..n {
                    let (a, b) = (self.get(i, l), other.get(l, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.try_add(&a.try_mul(b)?)?;
                    }
                }
                budget.check(&acc)?;
                entries.push(acc);
            }
        }
        Ok(PolyMatrix { size: n, entries })
    }

    pub fn pow(&self, mut e: u64, budget: TermBudget) -> Result<Self> {
        let vars = self.entries[0].vars().clone();
        let mut result = Self::identity(&vars, self.size);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, budget)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, budget)?;
            }
        }
        Ok(result)
    }
}

/// `P_n` as the first entry of `Cⁿ·(P₀, …, P_{k−1})ᵀ`.
pub fn companion_power_term(spec: &RecurrenceSpec, n: u64) -> MultiPoly {
    companion_power_term_with(spec, n, TermBudget::UNLIMITED).expect("unlimited budget")
}

pub fn companion_power_term_with(spec: &RecurrenceSpec, n: u64, budget: TermBudget) -> Result<MultiPoly> {
    let power = PolyMatrix::companion(spec).pow(n, budget)?;
    let mut acc = MultiPoly::zero(&spec.vars);
    for (j, p) in spec.initial.iter().enumerate() {
        acc = acc.try_add(&power.get(0, j).try_mul(p)?)?;
    }
    budget.check(&acc)?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(ps: &[MultiPoly]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    fn classical_fib() -> RecurrenceSpec {
        let v = VarList::new(["x"]);
        let x = MultiPoly::var(&v, "x").unwrap();
        RecurrenceSpec::new(v.clone(), vec![x, MultiPoly::one(&v)], vec![MultiPoly::zero(&v), MultiPoly::one(&v)])
            .unwrap()
    }

    fn dickson_d() -> RecurrenceSpec {
        let v = VarList::new(["x", "a"]);
        let x = MultiPoly::var(&v, "x").unwrap();
        let a = MultiPoly::var(&v, "a").unwrap();
        RecurrenceSpec::new(v.clone(), vec![x.clone(), -&a], vec![MultiPoly::constant(&v, 2), x]).unwrap()
    }

    #[test]
    fn iterate_classical_fibonacci() {
        let terms = iterate_terms(&classical_fib(), 4);
        assert_eq!(strs(&terms), ["0", "1", "x", "x^2 + 1", "x^3 + 2*x"]);
        assert_eq!(iterate_terms(&classical_fib(), 0).len(), 1);
    }

    #[test]
    fn iterate_dickson_first_kind() {
        assert_eq!(strs(&iterate_terms(&dickson_d(), 3)), ["2", "x", "x^2 - 2*a", "x^3 - 3*x*a"]);
    }

    #[test]
    fn truncates_initial_window() {
        let v = VarList::new(["x"]);
        let spec = RecurrenceSpec::new(
            v.clone(),
            vec![MultiPoly::one(&v); 3],
            vec![MultiPoly::constant(&v, 4), MultiPoly::constant(&v, 5), MultiPoly::constant(&v, 6)],
        )
        .unwrap();
        assert_eq!(strs(&iterate_terms(&spec, 1)), ["4", "5"]);
    }

    #[test]
    fn basis_sequences() {
        let v = VarList::new(["q1", "q2"]);
        let q1 = MultiPoly::var(&v, "q1").unwrap();
        let q2 = MultiPoly::var(&v, "q2").unwrap();
        let spec = RecurrenceSpec::with_delta_initials(v.clone(), vec![q1, q2], 0).unwrap();
        assert_eq!(strs(&basis_sequence(&spec, 1, 3).unwrap()), ["0", "1", "q1", "q1^2 + q2"]);
        assert_eq!(strs(&basis_sequence(&spec, 0, 1).unwrap()), ["1", "0"]);
        assert!(matches!(basis_sequence(&spec, 2, 3), Err(Error::IndexOutOfRange { index: 2, bound: 2 })));

        let v3 = VarList::new(["c1", "c2", "c3"]);
        let cs: Vec<_> = ["c1", "c2", "c3"].iter().map(|n| MultiPoly::var(&v3, n).unwrap()).collect();
        let spec3 = RecurrenceSpec::with_delta_initials(v3, cs, 2).unwrap();
        assert_eq!(basis_sequence(&spec3, 2, 3).unwrap()[3].to_string(), "c1");
    }

    #[test]
    fn validation() {
        let v = VarList::new(["x"]);
        assert!(RecurrenceSpec::new(v.clone(), vec![], vec![]).is_err());
        assert!(RecurrenceSpec::new(v.clone(), vec![MultiPoly::one(&v)], vec![]).is_err());
        let w = VarList::new(["y"]);
        assert!(matches!(
            RecurrenceSpec::new(v.clone(), vec![MultiPoly::one(&w)], vec![MultiPoly::one(&v)]),
            Err(Error::VariableMismatch { .. })
        ));
    }

    #[test]
    fn decomposition_holds_and_detects_corruption() {
        let spec = classical_fib();
        assert!(decompose_check(&spec, 10).holds());

        let mut bases: Vec<_> = (0..2).map(|j| basis_sequence(&spec, j, 10).unwrap()).collect();
        let v = spec.vars().clone();
        bases[1][6] = &bases[1][6] + &MultiPoly::one(&v);
        match decompose_check_against(&spec, &bases, 10) {
            Decomposition::Mismatch { n, .. } => assert_eq!(n, 6),
            Decomposition::Holds => panic!("corruption not detected"),
        }
    }

    #[test]
    fn companion_examples() {
        let v = VarList::new(Vec::<String>::new());
        let one = MultiPoly::one(&v);
        let fib = RecurrenceSpec::new(v.clone(), vec![one.clone(), one.clone()], vec![MultiPoly::zero(&v), one]).unwrap();
        assert_eq!(companion_power_term(&fib, 10).to_string(), "55");
        assert_eq!(companion_power_term(&dickson_d(), 0).to_string(), "2");
        assert_eq!(companion_power_term(&dickson_d(), 5).to_string(), "x^5 - 5*x^3*a + 5*x*a^2");
    }

    #[test]
    fn budget_is_enforced() {
        let spec = dickson_d();
        let err = iterate_terms_with(&spec, 12, TermBudget::limit(4)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { limit: 4, .. }));
        assert!(companion_power_term_with(&spec, 12, TermBudget::limit(4)).is_err());
        assert!(iterate_terms_with(&spec, 12, TermBudget::limit(100)).is_ok());
    }

    #[test]
    fn order_one_is_geometric() {
        let v = VarList::new(["x"]);
        let x = MultiPoly::var(&v, "x").unwrap();
        let spec = RecurrenceSpec::new(v.clone(), vec![x.clone()], vec![MultiPoly::constant(&v, 3)]).unwrap();
        assert_eq!(iterate_terms(&spec, 4)[4].to_string(), "3*x^4");
        assert_eq!(companion_power_term(&spec, 4).to_string(), "3*x^4");
    }
}
