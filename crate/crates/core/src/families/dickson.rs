//! Dickson polynomials `D_n(x, a)` and `E_n(x, a)` and tridiagonal
//! determinants.

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::closed_form::upper_hessenberg_det;
use crate::families::order2::{lucas_weight, Order2Family};
use crate::recurrence::{iterate_terms, TermBudget};
use crate::ring::{MultiPoly, VarList};

fn dickson_family() -> Order2Family {
    Order2Family::dickson()
}

/// `[D₀, …, D_{n_max}]` by recurrence.
pub fn dickson_d_terms(n_max: usize) -> Vec<MultiPoly> {
    dickson_family().lucas_terms(n_max)
}

/// `[E₀, …, E_{n_max}]` by recurrence from `(1, x)`.
pub fn dickson_e_terms(n_max: usize) -> Vec<MultiPoly> {
    let fam = dickson_family();
    let spec = fam
        .spec_with_initial(MultiPoly::one(fam.vars()), fam.q1().clone())
        .expect("family variables agree");
    iterate_terms(&spec, n_max)
}

/// `Σ weight(i)·x^{n−2i}(−a)^i`.
fn explicit_sum<F: Fn(u64) -> BigInt>(n: u64, weight: F) -> MultiPoly {
    let fam = dickson_family();
    let mut acc = MultiPoly::zero(fam.vars());
    for i in 0..=n / 2 {
        let term = &fam.q1().pow((n - 2 * i) as u32) * &fam.q2().pow(i as u32);
        acc = &acc + &term.scale(&weight(i));
    }
    acc
}

/// `D_n = Σ n/(n−i)·binom(n−i, i)·x^{n−2i}(−a)^i`; `D₀ = 2` by definition
/// since the weight is undefined at `n = i = 0`.
pub fn dickson_d_explicit(n: u64) -> MultiPoly {
    if n == 0 {
        return MultiPoly::constant(dickson_family().vars(), 2);
    }
    explicit_sum(n, |i| lucas_weight(n, i).expect("integral weight"))
}

/// `E_n = Σ binom(n−i, i)·x^{n−2i}(−a)^i`.
pub fn dickson_e_explicit(n: u64) -> MultiPoly {
    explicit_sum(n, |i| crate::closed_form::binomial(n - i, i))
}

/// `D_n(x, a)`; the recurrence and the explicit sum are both evaluated and
/// must agree.
pub fn dickson_d(n: usize) -> MultiPoly {
    let rec = dickson_d_terms(n).pop().expect("n+1 terms");
    assert_eq!(rec, dickson_d_explicit(n as u64), "D_{n}: recurrence and explicit sum disagree");
    rec
}

/// `E_n(x, a)`; the recurrence and the explicit sum are both evaluated and
/// must agree.
pub fn dickson_e(n: usize) -> MultiPoly {
    let rec = dickson_e_terms(n).pop().expect("n+1 terms");
    assert_eq!(rec, dickson_e_explicit(n as u64), "E_{n}: recurrence and explicit sum disagree");
    rec
}

/// `n×n` matrix with constant diagonal, subdiagonal, and superdiagonal.
pub fn tridiagonal_matrix(diag: &MultiPoly, sub: &MultiPoly, sup: &MultiPoly, n: usize) -> Vec<Vec<MultiPoly>> {
    let zero = MultiPoly::zero(diag.vars());
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        diag.clone()
                    } else if i == j + 1 {
                        sub.clone()
                    } else if j == i + 1 {
                        sup.clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// Symbolic determinant of the constant tridiagonal matrix; `n = 0` gives 1.
pub fn tridiagonal_det(diag: &MultiPoly, sub: &MultiPoly, sup: &MultiPoly, n: usize) -> MultiPoly {
    let vars: VarList = diag.vars().clone();
    upper_hessenberg_det(&tridiagonal_matrix(diag, sub, sup, n), &vars, TermBudget::UNLIMITED)
        .expect("tridiagonal matrices are upper Hessenberg")
}

/// `E_n` as the `n×n` tridiagonal determinant with diagonal `x`,
/// superdiagonal `a`, subdiagonal `1`.
pub fn dickson_e_det(n: usize) -> MultiPoly {
    let fam = dickson_family();
    let x = fam.q1().clone();
    let a = -fam.q2();
    tridiagonal_det(&x, &MultiPoly::one(fam.vars()), &a, n)
}

/// Conjugating by `diag(1, −1, 1, …)` negates both off-diagonals, so the
/// determinant with `(−sup, −sub)` equals the one with `(sup, sub)`.
pub fn sign_flip_holds(diag: &MultiPoly, sub: &MultiPoly, sup: &MultiPoly, n: usize) -> bool {
    tridiagonal_det(diag, sub, sup, n) == tridiagonal_det(diag, &-sub, &-sup, n)
}

/// Closed form of the tridiagonal determinant (diag `b`, sub `a`, sup `c`).
pub fn tridiag_closed_form(b: Complex64, a_sub: Complex64, c_sup: Complex64, n: u64) -> Complex64 {
    let disc = b * b - 4.0 * a_sub * c_sup;
    let scale = (b.norm_sqr()).max((a_sub * c_sup).norm()).max(f64::MIN_POSITIVE);
    if disc.norm() <= 1e-14 * scale {
        return (n as f64 + 1.0) * (b / 2.0).powu(n as u32);
    }
    let s = disc.sqrt();
    ((b + s).powu(n as u32 + 1) - (b - s).powu(n as u32 + 1)) / (2f64.powi(n as i32 + 1) * s)
}

/// Determinant by LU with partial pivoting.
pub fn det_lu(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .expect("non-empty range");
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for row in col + 1..n {
            let f = m[row][col] / p;
            for j in col..n {
                let v = m[col][j];
                m[row][j] -= f * v;
            }
        }
    }
    det
}

/// True iff the closed form and the LU determinant of the literal matrix
/// agree within `1e−8` relative.
pub fn tridiag_closed_form_check(b: Complex64, a_sub: Complex64, c_sup: Complex64, n: u64) -> bool {
    let size = n as usize;
    let zero = Complex64::new(0.0, 0.0);
    let m: Vec<Vec<Complex64>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        b
                    } else if i == j + 1 {
                        a_sub
                    } else if j == i + 1 {
                        c_sup
                    } else {
                        zero
                    }
                })
                .collect()
        })
        .collect();
    let numeric = det_lu(m);
    let closed = tridiag_closed_form(b, a_sub, c_sup, n);
    (numeric - closed).norm() <= 1e-8 * numeric.norm().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::order2::fib2;

    #[test]
    fn first_five_tables() {
        let d = dickson_d_terms(5);
        let e = dickson_e_terms(5);
        assert_eq!(d[4].to_string(), "x^4 - 4*x^2*a + 2*a^2");
        assert_eq!(e[4].to_string(), "x^4 - 3*x^2*a + a^2");
        assert_eq!(e[0].to_string(), "1");
        assert_eq!(d[5].to_string(), "x^5 - 5*x^3*a + 5*x*a^2");
    }

    #[test]
    fn explicit_matches_recurrence() {
        let d = dickson_d_terms(40);
        let e = dickson_e_terms(40);
        for n in 0..=40 {
            assert_eq!(dickson_d_explicit(n as u64), d[n]);
            assert_eq!(dickson_e_explicit(n as u64), e[n]);
        }
        dickson_d(12);
        dickson_e(12);
    }

    #[test]
    fn e_is_shifted_fibonacci() {
        let fam = Order2Family::dickson();
        for n in 0..20 {
            assert_eq!(dickson_e(n), fib2(&fam, n + 1));
        }
    }

    #[test]
    fn e_determinant() {
        assert_eq!(dickson_e_det(1).to_string(), "x");
        assert_eq!(dickson_e_det(2).to_string(), "x^2 - a");
        for n in 1..=15 {
            assert_eq!(dickson_e_det(n), dickson_e(n));
        }
        let vars = VarList::new(["x"]);
        let x = MultiPoly::var_at(&vars, 0);
        let one = MultiPoly::one(&vars);
        assert_eq!(tridiagonal_det(&x, &one, &one, 3).to_string(), "x^3 - 2*x");
    }

    #[test]
    fn sign_flip() {
        let fam = Order2Family::dickson();
        let x = fam.q1().clone();
        let a = -fam.q2();
        let one = MultiPoly::one(fam.vars());
        for n in 0..=10 {
            assert!(sign_flip_holds(&x, &one, &a, n));
        }
    }

    #[test]
    fn closed_form_examples() {
        let c = |v: f64| Complex64::new(v, 0.0);
        for n in 1..=20 {
            assert!(tridiag_closed_form_check(c(2.0), c(1.0), c(1.0), n));
            assert!((tridiag_closed_form(c(2.0), c(1.0), c(1.0), n) - c(n as f64 + 1.0)).norm() < 1e-9);
        }
        assert!((tridiag_closed_form(c(1.0), c(1.0), c(-1.0), 9) - c(55.0)).norm() < 1e-9);
        assert!(tridiag_closed_form_check(c(1.0), c(1.0), c(-1.0), 9));
        assert!(tridiag_closed_form_check(c(3.5), c(-2.0), c(0.25), 1));
        let z = Complex64::new(0.3, -1.2);
        assert!(tridiag_closed_form_check(z, c(2.0), Complex64::new(-0.5, 0.7), 17));
    }

    #[test]
    fn lu_determinant() {
        let c = |v: f64| Complex64::new(v, 0.0);
        let m = vec![vec![c(0.0), c(1.0)], vec![c(1.0), c(0.0)]];
        assert!((det_lu(m) - c(-1.0)).norm() < 1e-15);
    }
}
