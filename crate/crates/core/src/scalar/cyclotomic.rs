use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{self, cyclotomic_polynomial, Poly};
use super::Rational;
use crate::error::{domain, Result};

/// An exact element of the cyclotomic field Q(ζ_L).
///
/// Stored in the power basis 1, ζ, …, ζ^{φ(L)−1}, reduced modulo Φ_L, so two
/// numbers of the same order are equal iff their coefficient vectors are.
/// Numbers of different orders are compared after lifting both to the lcm
/// order. Order 1 holds plain rationals.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

/// Reduced images of ζ^0 … ζ^{L−1} in the power basis, one table per order.
static POWER_TABLES: Lazy<Mutex<HashMap<u64, Arc<Vec<Poly>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn power_table(order: u64) -> Arc<Vec<Poly>> {
    if let Some(t) = POWER_TABLES.lock().unwrap().get(&order) {
        return t.clone();
    }
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    let mut table = Vec::with_capacity(order as usize);
    let mut cur: Poly = vec![Rational::zero(); deg];
    cur[0] = Rational::one();
    for _ in 0..order {
        table.push(cur.clone());
        // multiply by x and reduce
        let mut next = vec![Rational::zero()];
        next.extend(cur);
        cur = poly::rem_monic(next, &phi);
    }
    let table = Arc::new(table);
    POWER_TABLES.lock().unwrap().insert(order, table.clone());
    table
}

fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

impl Cyclotomic {
    /// Builds a number from power-basis coefficients of any length; the
    /// input is reduced modulo Φ_order.
    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(order);
        Cyclotomic {
            order,
            coeffs: poly::rem_monic(coeffs, &phi),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ_L^k = e^{2πik/L}; `k` may be negative.
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let e = k.rem_euclid(order as i64) as usize;
        Cyclotomic {
            order,
            coeffs: power_table(order)[e].clone(),
        }
    }

    /// √2 = ζ₈ + ζ₈⁷, exact.
    pub fn sqrt2() -> Self {
        Self::root_of_unity(8, 1) + Self::root_of_unity(8, 7)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Cyclotomic::one()
    }

    /// The rational value, if this number lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        let d = self.clone().descend();
        (d.order == 1).then(|| d.coeffs[0].clone())
    }

    /// Re-expresses the number in Q(ζ_target); `target` must be a multiple
    /// of the current order.
    pub fn lift(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.order),
            "cannot lift order {} to {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let table = power_table(target);
        let deg = table[0].len();
        let mut out = vec![Rational::zero(); deg];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&table[(k * step) % target as usize]) {
                if !t.is_zero() {
                    *o += c * t;
                }
            }
        }
        Cyclotomic {
            order: target,
            coeffs: out,
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let m = lcm(self.order, other.order);
        (self.lift(m), other.lift(m))
    }

    /// Multiplicative inverse, via extended gcd with Φ_L.
    pub fn invert(&self) -> Result<Self> {
        let phi = cyclotomic_polynomial(self.order);
        match poly::inverse_mod(&self.coeffs, &phi) {
            Some(coeffs) => Ok(Cyclotomic {
                order: self.order,
                coeffs,
            }),
            None => domain("cannot invert zero"),
        }
    }

    /// Complex conjugation, ζ^k ↦ ζ^{L−k}.
    pub fn conjugate(&self) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        let table = power_table(self.order);
        let l = self.order as usize;
        let mut out = vec![Rational::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&table[(l - k) % l]) {
                if !t.is_zero() {
                    *o += c * t;
                }
            }
        }
        Cyclotomic {
            order: self.order,
            coeffs: out,
        }
    }

    /// |a|², exact.
    pub fn norm_sqr(&self) -> Self {
        self * &self.conjugate()
    }

    pub fn to_complex(&self) -> Complex64 {
        let l = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = std::f64::consts::TAU * k as f64 / l;
                Complex64::from_polar(rational_to_f64(c), theta)
            })
            .sum()
    }

    /// Smallest-order representation of the same value.
    ///
    /// Tries every divisor of the current order (smallest first) and keeps
    /// the first subfield that contains the value. Also folds odd orders
    /// out of Q(ζ_{2m}) = Q(ζ_m).
    pub fn descend(self) -> Self {
        if self.order == 1 {
            return self;
        }
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            return Cyclotomic::from_rational(self.coeffs[0].clone());
        }
        let n = self.order;
        for d in (2..n).filter(|&d| n.is_multiple_of(d)) {
            if let Some(sub) = self.try_express_in(d) {
                return sub;
            }
        }
        self
    }

    /// Solves for coefficients over Q(ζ_d) whose lift equals `self`.
    fn try_express_in(&self, d: u64) -> Option<Self> {
        let sub_deg = poly::totient(d);
        // columns: lifts of ζ_d^j for j < sub_deg
        let columns: Vec<Cyclotomic> = (0..sub_deg as i64)
            .map(|j| Cyclotomic::root_of_unity(d, j).lift(self.order))
            .collect();
        let rows = self.coeffs.len();
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = columns.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let sol = solve_rational(&mut aug, sub_deg)?;
        Some(Cyclotomic {
            order: d,
            coeffs: sol,
        })
    }
}

/// Exact Gaussian elimination on an augmented system; `None` if inconsistent.
fn solve_rational(aug: &mut [Vec<Rational>], unknowns: usize) -> Option<Vec<Rational>> {
    let rows = aug.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let pivot_row = aug[r].clone();
                for (x, y) in aug[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = aug[i][unknowns].clone();
    }
    Some(sol)
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
    })
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        // rationals scale without lifting
        if self.order == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.order == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b) = self.aligned(rhs);
        let phi = cyclotomic_polynomial(a.order);
        Cyclotomic {
            order: a.order,
            coeffs: poly::rem_monic(poly::mul(&a.coeffs, &b.coeffs), &phi),
        }
    }
}

impl Cyclotomic {
    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident $atr:ident $am:ident),*) => {$(
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic { (&self).$m(rhs) }
        }
        impl<'a> $tr<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { self.$m(&rhs) }
        }
        impl $atr<&Cyclotomic> for Cyclotomic {
            fn $am(&mut self, rhs: &Cyclotomic) { *self = (&*self).$m(rhs); }
        }
        impl $atr<Cyclotomic> for Cyclotomic {
            fn $am(&mut self, rhs: Cyclotomic) { *self = (&*self).$m(&rhs); }
        }
    )*};
}

forward_owned!(Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign);

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `c0 + c1*z8^1 + …`, with `z8` standing for ζ₈.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}^{k}", self.order)?,
                (_, false) => write!(f, "{mag}*z{}^{k}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// JSON: {"order": L, "coeffs": [[num, den], ...]}. Integers that overflow
// i64 are written as decimal strings.

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    order: u64,
    coeffs: Vec<[serde_json::Value; 2]>,
}

fn int_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("non-integer coefficient {n}")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        other => Err(format!("expected integer, got {other}")),
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| [int_to_json(c.numer()), int_to_json(c.denom())])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(d)?;
        if repr.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n = int_from_json(n)?;
                let d = int_from_json(d)?;
                if d.is_zero() {
                    return Err("zero denominator".to_string());
                }
                Ok(Rational::new(n, d))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(Cyclotomic::from_coeffs(repr.order, coeffs))
    }
}
