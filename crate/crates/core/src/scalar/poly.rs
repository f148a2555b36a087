//! Dense univariate polynomials over Q, ascending coefficient order.
//!
//! Only what the cyclotomic field needs: multiplication, remainder by a monic
//! integer polynomial, and the extended Euclidean algorithm.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use super::Rational;

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Remainder of `p` modulo the monic integer polynomial `m`, padded to
/// exactly `deg(m)` coefficients.
pub(crate) fn rem_monic(mut p: Poly, m: &[BigInt]) -> Poly {
    let deg = m.len() - 1;
    while p.len() > deg {
        let lead = p.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = p.len() - deg;
        for (j, mj) in m[..deg].iter().enumerate() {
            if !mj.is_zero() {
                p[shift + j] -= &lead * Rational::from_integer(mj.clone());
            }
        }
    }
    p.resize(deg, Rational::zero());
    p
}

/// Quotient and remainder for a general nonzero divisor.
fn div_rem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn sub(a: &[Rational], b: &[Rational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the monic irreducible `m`, or `None` when `a ≡ 0`.
pub(crate) fn inverse_mod(a: &[Rational], m: &[BigInt]) -> Option<Poly> {
    let mut r0: Poly = m.iter().cloned().map(Rational::from_integer).collect();
    let mut r1: Poly = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    // Invariant: r_i ≡ s_i · a  (mod m)
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is the gcd; nonconstant means `a` shares a factor with `m`.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let inv: Poly = s0.into_iter().map(|x| x * &c).collect();
    Some(rem_monic(inv, m))
}

static CYCLOTOMIC_CACHE: Lazy<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial Φ_n, ascending coefficients.
///
/// Computed as (x^n − 1) / Π_{d | n, d < n} Φ_d by exact division.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial order must be positive");
    if let Some(p) = CYCLOTOMIC_CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|&d| n.is_multiple_of(d)) {
        let phi_d = cyclotomic_polynomial(d);
        num = exact_div_monic(&num, &phi_d);
    }
    let p = Arc::new(num);
    CYCLOTOMIC_CACHE.lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "inexact cyclotomic division");
    q
}

/// Euler's totient, i.e. deg Φ_n.
pub fn totient(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=30u64 {
            let mut prod: Poly = vec![Rational::one()];
            for d in (1..=n).filter(|d| n % d == 0) {
                let phi: Poly = cyclotomic_polynomial(d)
                    .iter()
                    .cloned()
                    .map(Rational::from_integer)
                    .collect();
                prod = mul(&prod, &phi);
            }
            let mut expect = vec![Rational::zero(); n as usize + 1];
            expect[0] = -Rational::one();
            expect[n as usize] = Rational::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn totients() {
        let known = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &t) in known.iter().enumerate() {
            assert_eq!(totient(i as u64 + 1), t);
        }
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(inverse_mod(&[Rational::zero()], &cyclotomic_polynomial(4)).is_none());
    }
}
