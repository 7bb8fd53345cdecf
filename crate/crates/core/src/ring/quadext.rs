//! The quadratic extension `R[√Δ]` of a polynomial ring, with `√Δ` a formal
//! symbol subject to `(√Δ)² = Δ`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::poly::MultiPoly;

/// `u + v·√Δ` for a fixed discriminant `Δ`.
#[derive(Clone)]
pub struct QuadExtElem {
    u: MultiPoly,
    v: MultiPoly,
    delta: Arc<MultiPoly>,
}

impl QuadExtElem {
    /// Fails when `u`, `v`, and `delta` do not share one variable list.
    pub fn new(u: MultiPoly, v: MultiPoly, delta: Arc<MultiPoly>) -> Result<Self> {
        u.try_add(&v)?;
        u.try_add(&delta)?;
        Ok(QuadExtElem { u, v, delta })
    }

    pub fn one(delta: Arc<MultiPoly>) -> Self {
        let u = MultiPoly::one(delta.vars());
        let v = MultiPoly::zero(delta.vars());
        QuadExtElem { u, v, delta }
    }

    /// `0 + 1·√Δ`.
    pub fn sqrt_delta(delta: Arc<MultiPoly>) -> Self {
        let u = MultiPoly::zero(delta.vars());
        let v = MultiPoly::one(delta.vars());
        QuadExtElem { u, v, delta }
    }

    pub fn u(&self) -> &MultiPoly {
        &self.u
    }

    pub fn v(&self) -> &MultiPoly {
        &self.v
    }

    pub fn delta(&self) -> &Arc<MultiPoly> {
        &self.delta
    }

    /// `u − v·√Δ`.
    pub fn conjugate(&self) -> Self {
        QuadExtElem { u: self.u.clone(), v: -&self.v, delta: self.delta.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QuadExtElem { u: self.u.scale(c), v: self.v.scale(c), delta: self.delta.clone() }
    }

    fn check_delta(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.delta, &other.delta) || self.delta == other.delta {
            Ok(())
        } else {
            Err(Error::DiscriminantMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_delta(other)?;
        Ok(QuadExtElem {
            u: self.u.try_add(&other.u)?,
            v: self.v.try_add(&other.v)?,
            delta: self.delta.clone(),
        })
    }

    /// `(u₁+v₁√Δ)(u₂+v₂√Δ) = (u₁u₂ + Δv₁v₂) + (u₁v₂ + u₂v₁)√Δ`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_delta(other)?;
        let vv = self.v.try_mul(&other.v)?;
        let u = self.u.try_mul(&other.u)?.try_add(&self.delta.try_mul(&vv)?)?;
        let v = self.u.try_mul(&other.v)?.try_add(&other.u.try_mul(&self.v)?)?;
        Ok(QuadExtElem { u, v, delta: self.delta.clone() })
    }

    /// `self^m` by repeated squaring; `a⁰ = 1 + 0·√Δ`.
    pub fn pow(&self, mut m: u32) -> Result<Self> {
        let mut result = Self::one(self.delta.clone());
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
}

/// Componentwise; elements over different discriminants are never equal.
impl PartialEq for QuadExtElem {
    fn eq(&self, other: &Self) -> bool {
        self.check_delta(other).is_ok() && self.u == other.u && self.v == other.v
    }
}

impl Eq for QuadExtElem {}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*sqrt({})", self.u, self.v, self.delta)
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly::VarList;

    #[test]
    fn sqrt_delta_squares_to_delta() {
        let vars = VarList::new(["x", "y"]);
        let x = MultiPoly::var(&vars, "x").unwrap();
        let y = MultiPoly::var(&vars, "y").unwrap();
        let delta = Arc::new(&x.pow(2) + &y.scale(&4.into()));
        let s = QuadExtElem::sqrt_delta(delta.clone());
        let sq = s.try_mul(&s).unwrap();
        assert_eq!(sq.u(), &*delta);
        assert!(sq.v().is_zero());
    }

    #[test]
    fn one_is_identity() {
        let vars = VarList::new(["x"]);
        let x = MultiPoly::var(&vars, "x").unwrap();
        let delta = Arc::new(&x + &MultiPoly::one(&vars));
        let a = QuadExtElem::new(x.pow(2), x.clone(), delta.clone()).unwrap();
        assert_eq!(QuadExtElem::one(delta).try_mul(&a).unwrap(), a);
    }

    #[test]
    fn constant_discriminant_five() {
        let vars = VarList::new(Vec::<String>::new());
        let delta = Arc::new(MultiPoly::constant(&vars, 5));
        let a = QuadExtElem::new(MultiPoly::one(&vars), MultiPoly::one(&vars), delta).unwrap();
        let sq = a.pow(2).unwrap();
        assert_eq!(sq.u().to_string(), "6");
        assert_eq!(sq.v().to_string(), "2");
    }

    #[test]
    fn pow_zero_and_one() {
        let vars = VarList::new(["x"]);
        let x = MultiPoly::var(&vars, "x").unwrap();
        let delta = Arc::new(x.clone());
        let a = QuadExtElem::new(x.clone(), x.pow(2), delta).unwrap();
        assert!(a.pow(0).unwrap().u().is_one());
        assert!(a.pow(0).unwrap().v().is_zero());
        assert_eq!(a.pow(1).unwrap(), a);
    }

    #[test]
    fn mismatched_discriminants_error() {
        let vars = VarList::new(["x"]);
        let x = MultiPoly::var(&vars, "x").unwrap();
        let a = QuadExtElem::sqrt_delta(Arc::new(x.clone()));
        let b = QuadExtElem::sqrt_delta(Arc::new(x.pow(2)));
        assert_eq!(a.try_mul(&b).unwrap_err(), Error::DiscriminantMismatch);
        assert_ne!(a, b);
    }
}
