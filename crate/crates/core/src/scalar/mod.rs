//! Scalars: exact cyclotomic numbers and a complex floating-point mirror.
//!
//! All identity checks in the crate run over [`Cyclotomic`]; the float
//! backend exists for cross-checks and for the CLI's `--backend float`.

mod cyclotomic;
mod poly;

use std::fmt::{Debug, Display};

pub use cyclotomic::Cyclotomic;
pub use num_complex::Complex64;
pub use poly::{cyclotomic_polynomial, totient};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Double-precision complex number used by the float backend.
pub type ComplexFloat = Complex64;

/// Default absolute tolerance for float-backend comparisons.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

pub(crate) use cyclotomic::rational_to_f64;

/// Shorthand for [`Cyclotomic::root_of_unity`].
pub fn root_of_unity(order: u64, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(order, k)
}

/// Field operations needed by the generic matrix code.
pub trait Scalar: Clone + Debug + Display + PartialEq + Send + Sync + 'static {
    /// True for the exact backend; tolerances are ignored when set.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn to_complex(&self) -> Complex64;
    /// Equality within `tol` (absolute); exact types ignore `tol`.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
}

impl Scalar for Cyclotomic {
    const EXACT: bool = true;

    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn from_i64(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.conjugate()
    }
    fn inv(&self) -> Option<Self> {
        self.invert().ok()
    }
    fn to_complex(&self) -> Complex64 {
        Cyclotomic::to_complex(self)
    }
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

/// Below this modulus a float is treated as zero when pivoting.
const FLOAT_ZERO: f64 = 1e-12;

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.norm() < FLOAT_ZERO
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| Complex64::inv(self))
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= tol
    }
}
