//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! A [`MultiPoly`] owns an ordered, immutable variable list and a map from
//! exponent vectors to nonzero coefficients. Zero coefficients are never
//! stored, so structural equality is semantic equality.
//!
//! Binary operations require both operands to carry the same variable list.
//! The `try_*` methods report a mismatch as [`Error::VariableMismatch`]; the
//! operator impls (`&a + &b`, `&a * &b`, ...) panic instead and are meant for
//! code paths where the lists are known to agree.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest total degree any polynomial may reach.
pub const MAX_TOTAL_DEGREE: u64 = 1_000_000;

/// Integer evaluation point: variable name to value.
pub type IntPoint = BTreeMap<String, BigInt>;

/// Complex evaluation point: variable name to value.
pub type ComplexPoint = BTreeMap<String, Complex64>;

/// Ordered list of variable names, shared between polynomials.
#[derive(Clone)]
pub struct VarList(Arc<[String]>);

impl VarList {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarList(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

impl PartialEq for VarList {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarList {}

impl fmt::Debug for VarList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VarList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(","))
    }
}

/// Exponents of one monomial, one entry per declared variable.
///
/// `Ord` is graded lexicographic: lower total degree first, ties broken
/// lexicographically in declared variable order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Box<[u32]>);

impl ExponentVector {
    pub fn zeros(len: usize) -> Self {
        ExponentVector(vec![0; len].into_boxed_slice())
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut e = vec![0; len];
        e[index] = 1;
        ExponentVector(e.into_boxed_slice())
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        ExponentVector(exps.into())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}

/// A polynomial in ℤ[v₁, …, v_m] stored in canonical sparse form.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarList,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &VarList) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarList) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &VarList, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::zeros(vars.len()), c);
        }
        MultiPoly { vars: vars.clone(), terms }
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &VarList, name: &str) -> Result<Self> {
        let idx = vars.index_of(name).ok_or_else(|| Error::MissingAssignment(name.to_string()))?;
        Ok(Self::var_at(vars, idx))
    }

    pub fn var_at(vars: &VarList, index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ExponentVector::unit(vars.len(), index), BigInt::one());
        MultiPoly { vars: vars.clone(), terms }
    }

    /// Builds a polynomial from (exponents, coefficient) pairs; like terms are
    /// merged and zeros dropped.
    pub fn from_terms<I>(vars: &VarList, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut map: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(Error::InvalidSpec(format!(
                    "exponent vector of length {} for {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            let e = ExponentVector(exps.into_boxed_slice());
            if e.total_degree() > MAX_TOTAL_DEGREE {
                return Err(Error::DegreeOverflow(e.total_degree()));
            }
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { vars: vars.clone(), terms: map })
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map_or(false, |(e, c)| e.is_constant() && c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&ExponentVector::from_slice(exps))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Constant term as an integer, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn total_degree(&self) -> u64 {
        self.terms.keys().next_back().map_or(0, ExponentVector::total_degree)
    }

    /// Largest absolute coefficient bit length; handy for budgets and benches.
    pub fn max_coefficient_bits(&self) -> u64 {
        self.terms.values().map(|c| c.bits()).max().unwrap_or(0)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.terms.clone(), &other.terms)
        } else {
            (other.terms.clone(), &self.terms)
        };
        for (e, c) in small {
            accumulate(&mut big, e, c);
        }
        Ok(MultiPoly { vars: self.vars.clone(), terms: big })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e, &-c);
        }
        Ok(MultiPoly { vars: self.vars.clone(), terms })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let degree = self.total_degree() + other.total_degree();
        if degree > MAX_TOTAL_DEGREE {
            return Err(Error::DegreeOverflow(degree));
        }
        if let Some(c) = self.as_constant() {
            return Ok(other.scale(&c));
        }
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(&c));
        }
        let mut acc: HashMap<ExponentVector, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod = ca * cb;
                match acc.entry(ea.add(eb)) {
                    Entry::Occupied(mut o) => *o.get_mut() += prod,
                    Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(MultiPoly { vars: self.vars.clone(), terms })
    }

    /// `self^m` by repeated squaring; `p^0 = 1` (including `0^0`).
    pub fn try_pow(&self, mut m: u32) -> Result<Self> {
        if m > 0 && self.total_degree().saturating_mul(m as u64) > MAX_TOTAL_DEGREE {
            return Err(Error::DegreeOverflow(self.total_degree().saturating_mul(m as u64)));
        }
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            m >>= 1;
            if m > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Panicking variant of [`MultiPoly::try_pow`]; overflow means a total
    /// degree beyond [`MAX_TOTAL_DEGREE`].
    pub fn pow(&self, m: u32) -> Self {
        self.try_pow(m).expect("polynomial power overflow")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, point: &IntPoint) -> Result<BigInt> {
        let values = self.assigned(point)?;
        let mut powers: Vec<HashMap<u32, BigInt>> = vec![HashMap::new(); values.len()];
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = powers[i].entry(k).or_insert_with(|| num_traits::pow(values[i].clone(), k as usize));
                term *= &*p;
            }
            total += term;
        }
        Ok(total)
    }

    /// Floating-point value at a complex point.
    pub fn eval_complex(&self, point: &ComplexPoint) -> Result<Complex64> {
        let values = self.assigned(point)?;
        let mut total = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut term = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (i, &k) in e.0.iter().enumerate() {
                if k != 0 {
                    term *= values[i].powu(k);
                }
            }
            total += term;
        }
        Ok(total)
    }

    fn assigned<T: Clone>(&self, point: &BTreeMap<String, T>) -> Result<Vec<T>> {
        self.vars
            .names()
            .iter()
            .map(|name| point.get(name).cloned().ok_or_else(|| Error::MissingAssignment(name.clone())))
            .collect()
    }

    /// Canonical text form (see [`fmt::Display`]).
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }
}

fn accumulate(terms: &mut BTreeMap<ExponentVector, BigInt>, e: &ExponentVector, c: &BigInt) {
    if let Some(existing) = terms.get_mut(e) {
        *existing += c;
        if existing.is_zero() {
            terms.remove(e);
        }
    } else if !c.is_zero() {
        terms.insert(e.clone(), c.clone());
    }
}

/// Terms in descending graded-lex order, written `c*v1^e1*v2^e2` and joined
/// by ` + ` / ` - `. Unit coefficients are omitted on non-constant terms,
/// exponent 1 is omitted, and the zero polynomial prints as `0`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if e.is_constant() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (name, &k) in self.vars.names().iter().zip(e.0.iter()) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars, self)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
