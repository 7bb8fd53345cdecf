#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use recpoly::{MultiPoly, RecurrenceSpec, VarList};

pub fn xyz() -> VarList {
    VarList::new(["x", "y", "z"])
}

pub fn poly(vars: &VarList, terms: &[(Vec<u32>, i64)]) -> MultiPoly {
    MultiPoly::from_terms(vars, terms.iter().map(|(e, c)| (e.clone(), BigInt::from(*c)))).unwrap()
}

/// Up to `max_terms` terms of total degree `<= max_deg`, coefficients in
/// `[-c, c]`.
pub fn random_poly(rng: &mut ChaCha8Rng, vars: &VarList, max_terms: usize, max_deg: u32, c: i64) -> MultiPoly {
    let terms = rng.gen_range(1..=max_terms);
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut left = rng.gen_range(0..=max_deg);
        let mut exps = vec![0u32; vars.len()];
        for e in exps.iter_mut() {
            let take = rng.gen_range(0..=left);
            *e = take;
            left -= take;
        }
        out.push((exps, BigInt::from(rng.gen_range(-c..=c))));
    }
    MultiPoly::from_terms(vars, out).unwrap()
}

/// Order `k` spec over `x, y, z` with coefficients of degree `<= 2` and at
/// most 3 terms; initial terms are `δ_{j,k−1}` when `delta` holds.
pub fn random_spec(rng: &mut ChaCha8Rng, k: usize, delta: bool) -> RecurrenceSpec {
    let vars = xyz();
    let coeffs: Vec<MultiPoly> = (0..k).map(|_| random_poly(rng, &vars, 3, 2, 9)).collect();
    if delta {
        RecurrenceSpec::with_delta_initials(vars, coeffs, k - 1).unwrap()
    } else {
        let initial = (0..k).map(|_| random_poly(rng, &vars, 3, 2, 9)).collect();
        RecurrenceSpec::new(vars, coeffs, initial).unwrap()
    }
}
