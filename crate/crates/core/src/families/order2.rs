//! Fibonacci and Lucas polynomials of order 2.
//!
//! Both follow `P_{n+2} = q₁P_{n+1} + q₂P_n`; Fibonacci starts from `(0, 1)`
//! and Lucas from `(2, q₁)`.

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::binet::{binet_multiple, char_roots, power_sum, CompositionBudget};
use crate::closed_form::{binomial, exact_div};
use crate::error::{Error, Result};
use crate::recurrence::{iterate_terms, RecurrenceSpec};
use crate::ring::{ComplexPoint, MultiPoly, VarList};

/// The pair `(q₁, q₂)` over a shared variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order2Family {
    q1: MultiPoly,
    q2: MultiPoly,
}

impl Order2Family {
    pub fn new(q1: MultiPoly, q2: MultiPoly) -> Result<Self> {
        q1.try_add(&q2)?;
        Ok(Order2Family { q1, q2 })
    }

    /// `q₁`, `q₂` as free variables named `q1`, `q2`.
    pub fn generic() -> Self {
        let vars = VarList::new(["q1", "q2"]);
        Order2Family { q1: MultiPoly::var_at(&vars, 0), q2: MultiPoly::var_at(&vars, 1) }
    }

    /// Classical Fibonacci/Lucas polynomials: `q₁ = x`, `q₂ = 1`.
    pub fn classical() -> Self {
        let vars = VarList::new(["x"]);
        Order2Family { q1: MultiPoly::var_at(&vars, 0), q2: MultiPoly::one(&vars) }
    }

    /// Fibonacci and Lucas numbers: `q₁ = q₂ = 1`, no variables.
    pub fn numbers() -> Self {
        let vars = VarList::new(Vec::<String>::new());
        Order2Family { q1: MultiPoly::one(&vars), q2: MultiPoly::one(&vars) }
    }

    /// Dickson polynomials: variables `[x, a]`, `q₁ = x`, `q₂ = −a`.
    pub fn dickson() -> Self {
        let vars = VarList::new(["x", "a"]);
        Order2Family { q1: MultiPoly::var_at(&vars, 0), q2: -MultiPoly::var_at(&vars, 1) }
    }

    pub fn vars(&self) -> &VarList {
        self.q1.vars()
    }

    pub fn q1(&self) -> &MultiPoly {
        &self.q1
    }

    pub fn q2(&self) -> &MultiPoly {
        &self.q2
    }

    /// `Δ = q₁² + 4q₂`.
    pub fn discriminant(&self) -> MultiPoly {
        &(&self.q1 * &self.q1) + &self.q2.scale(&BigInt::from(4))
    }

    pub fn spec_with_initial(&self, p0: MultiPoly, p1: MultiPoly) -> Result<RecurrenceSpec> {
        RecurrenceSpec::new(self.vars().clone(), vec![self.q1.clone(), self.q2.clone()], vec![p0, p1])
    }

    pub fn fibonacci_spec(&self) -> RecurrenceSpec {
        self.spec_with_initial(MultiPoly::zero(self.vars()), MultiPoly::one(self.vars()))
            .expect("family variables agree")
    }

    pub fn lucas_spec(&self) -> RecurrenceSpec {
        self.spec_with_initial(MultiPoly::constant(self.vars(), 2), self.q1.clone())
            .expect("family variables agree")
    }

    /// `[F₀, …, F_{n_max}]`.
    pub fn fibonacci_terms(&self, n_max: usize) -> Vec<MultiPoly> {
        iterate_terms(&self.fibonacci_spec(), n_max)
    }

    /// `[L₀, …, L_{n_max}]`.
    pub fn lucas_terms(&self, n_max: usize) -> Vec<MultiPoly> {
        iterate_terms(&self.lucas_spec(), n_max)
    }

    /// `Σ_{i≤⌊m/2⌋} weight(i)·q₁^{m−2i}q₂^i`.
    fn power_sum_form<F>(&self, m: u64, weight: F) -> Result<MultiPoly>
    where
        F: Fn(u64) -> Result<BigInt>,
    {
        let mut acc = MultiPoly::zero(self.vars());
        for i in 0..=m / 2 {
            let w = weight(i)?;
            let term = &self.q1.pow((m - 2 * i) as u32) * &self.q2.pow(i as u32);
            acc = &acc + &term.scale(&w);
        }
        Ok(acc)
    }

    /// `F_{m+1} = Σ binom(m−i, i)·q₁^{m−2i}q₂^i`.
    pub fn fibonacci_explicit(&self, m: u64) -> MultiPoly {
        self.power_sum_form(m, |i| Ok(binomial(m - i, i))).expect("binomial weights")
    }

    /// `L_n = Σ n/(n−i)·binom(n−i, i)·q₁^{n−2i}q₂^i` for `n ≥ 1`.
    pub fn lucas_explicit(&self, n: u64) -> Result<MultiPoly> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, bound: 1 });
        }
        self.power_sum_form(n, |i| lucas_weight(n, i))
    }
}

/// `n/(n−i)·binom(n−i, i)`, which is always an integer for `0 ≤ i ≤ n/2`,
/// `n ≥ 1`; a remainder is reported as an error.
pub fn lucas_weight(n: u64, i: u64) -> Result<BigInt> {
    let num = BigInt::from(n) * binomial(n - i, i);
    exact_div(&num, &BigInt::from(n - i))
        .ok_or_else(|| Error::InvalidSpec(format!("n/(n-i)*binom(n-i,i) not integral at n={n}, i={i}")))
}

/// `F_n(x, y)`.
pub fn fib2(family: &Order2Family, n: usize) -> MultiPoly {
    family.fibonacci_terms(n).pop().expect("n+1 terms")
}

/// `L_n(x, y)`.
pub fn lucas2(family: &Order2Family, n: usize) -> MultiPoly {
    family.lucas_terms(n).pop().expect("n+1 terms")
}

/// Numeric `F_n` and `L_n` at one point from the roots `α, β` of
/// `t² − q₁t − q₂`.
#[derive(Debug, Clone)]
pub struct BinetPair {
    pub fibonacci: Complex64,
    pub lucas: Complex64,
}

/// `F_n = (αⁿ − βⁿ)/(α − β)`, `L_n = αⁿ + βⁿ`. When `Δ` vanishes at the point
/// the double-root formula is used instead: `F_n = n·α^{n−1}`, `L_n = 2αⁿ`.
pub fn binet_order2(family: &Order2Family, point: &ComplexPoint, n: u64) -> Result<BinetPair> {
    let q1 = family.q1.eval_complex(point)?;
    let q2 = family.q2.eval_complex(point)?;
    let profile = char_roots(&[q1, q2])?;
    let lucas = power_sum(&profile, n);
    let fibonacci = if profile.is_simple() {
        let (a, b) = (profile.roots()[0], profile.roots()[1]);
        (a.powu(n as u32) - b.powu(n as u32)) / (a - b)
    } else if n == 0 {
        Complex64::new(0.0, 0.0)
    } else {
        binet_multiple(&profile, n - 1, CompositionBudget::default())?
    };
    Ok(BinetPair { fibonacci, lucas })
}
