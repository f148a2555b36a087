//! Dense matrices over a [`Scalar`], Kronecker products, the flip operator
//! and the regular representation of a cyclic group algebra.
//!
//! Composite indices put the first tensor factor in the most significant
//! position: entry ((i₁,i₂),(j₁,j₂)) of A⊗B sits at row i₁·rows(B)+i₂.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, usage, Result};
use crate::groupalg::{AlgebraElement, BasisElement, GroupSpec, TensorElement};
use crate::scalar::{Complex64, Cyclotomic, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<S = Cyclotomic> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

pub type FloatMatrix = Matrix<Complex64>;

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return usage("matrix dimensions must be positive");
        }
        if entries.len() != rows * cols {
            return usage(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            ));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds from integer rows; handy for literal matrices.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return usage("ragged matrix rows");
        }
        let entries = rows.iter().flat_map(|r| r.iter().map(|&x| S::from_i64(x))).collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn to_float(&self) -> FloatMatrix {
        self.map(|x| x.to_complex())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] = out.entries[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return usage(format!("vector of length {} for {} columns", v.len(), self.cols));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(S::zero(), |acc, j| {
                    let a = self.get(i, j);
                    if a.is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(&v[j]))
                    }
                })
            })
            .collect())
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            let a = self.get(i / r2, j / c2);
            if a.is_zero() {
                S::zero()
            } else {
                a.mul(other.get(i % r2, j % c2))
            }
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.mul(s))
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return usage(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conjugate_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Entrywise comparison; exact scalars ignore `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.is_square() && self.approx_eq(&Self::identity(self.rows), tol)
    }

    /// M·M† = I.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_square()
            && self
                .matmul(&self.conjugate_transpose())
                .is_ok_and(|p| p.is_identity(tol))
    }

    /// Gauss–Jordan inverse. The pivot is the first nonzero entry at or below
    /// the diagonal.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return usage(format!("cannot invert {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let mut a: Vec<Vec<S>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<S>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return domain(format!("matrix is singular: no pivot in column {c}"));
            };
            a.swap(c, p);
            inv.swap(c, p);
            let piv = a[c][c].inv().expect("nonzero pivot");
            for j in 0..n {
                a[c][j] = a[c][j].mul(&piv);
                inv[c][j] = inv[c][j].mul(&piv);
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for j in 0..n {
                    if !a[c][j].is_zero() {
                        a[r][j] = a[r][j].sub(&f.mul(&a[c][j]));
                    }
                    if !inv[c][j].is_zero() {
                        inv[r][j] = inv[r][j].sub(&f.mul(&inv[c][j]));
                    }
                }
            }
        }
        Ok(Matrix {
            rows: n,
            cols: n,
            entries: inv.into_iter().flatten().collect(),
        })
    }

    /// Row rank by forward elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<S>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let piv = a[rank][c].inv().expect("nonzero pivot");
            let (top, rest) = a.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in rest.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let f = row[c].mul(&piv);
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = x.sub(&f.mul(p));
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        if !self.is_square() {
            return usage("power of a non-square matrix");
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base)?;
            }
            base = base.matmul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join("\t"))?;
        }
        Ok(())
    }
}

// {"rows":r,"cols":c,"entries":[…]}; exact entries use the cyclotomic JSON
// form, float entries are [re, im] pairs.

#[derive(Serialize)]
struct MatrixReprRef<'a, S> {
    rows: usize,
    cols: usize,
    entries: &'a [S],
}

#[derive(Deserialize)]
struct MatrixRepr<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar + Serialize> Serialize for Matrix<S> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        MatrixReprRef {
            rows: self.rows,
            cols: self.cols,
            entries: &self.entries,
        }
        .serialize(s)
    }
}

impl<'de, S: Scalar + Deserialize<'de>> Deserialize<'de> for Matrix<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::<S>::deserialize(d)?;
        Matrix::new(r.rows, r.cols, r.entries).map_err(serde::de::Error::custom)
    }
}

pub fn matmul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>> {
    a.matmul(b)
}

pub fn kron<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    a.kron(b)
}

/// Kronecker product of a sequence, left to right.
pub fn kron_all<S: Scalar>(factors: &[Matrix<S>]) -> Matrix<S> {
    factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, m| acc.kron(m))
}

pub fn invert_matrix<S: Scalar>(a: &Matrix<S>) -> Result<Matrix<S>> {
    a.invert()
}

pub fn conjugate_transpose<S: Scalar>(a: &Matrix<S>) -> Matrix<S> {
    a.conjugate_transpose()
}

/// The swap V⊗W → W⊗V, e_i⊗e_j ↦ e_j⊗e_i, for dim V = `dv`, dim W = `dw`.
pub fn swap_operator<S: Scalar>(dv: usize, dw: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(dv * dw, dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            m.set(j * dv + i, i * dw + j, S::one());
        }
    }
    m
}

/// The flip τ on C^d ⊗ C^d.
pub fn flip_operator<S: Scalar>(d: usize) -> Matrix<S> {
    assert!(d >= 1, "flip operator needs d ≥ 1");
    swap_operator(d, d)
}

/// n×n cyclic shift e_j ↦ e_{j+1 mod n}.
pub fn cyclic_shift<S: Scalar>(n: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        m.set((j + 1) % n, j, S::one());
    }
    m
}

/// Left regular representation of C[Z/η₁ × … × Z/ηₙ]:
/// g^{(a₁…aₙ)} ↦ P₁^{a₁} ⊗ … ⊗ Pₙ^{aₙ} with Pₖ the ηₖ-cycle.
#[derive(Clone, Debug)]
pub struct RepresentationMap {
    spec: GroupSpec,
    shifts: Vec<Matrix<Cyclotomic>>,
}

pub fn regular_representation(spec: &GroupSpec) -> RepresentationMap {
    RepresentationMap {
        spec: spec.clone(),
        shifts: spec.orders().iter().map(|&o| cyclic_shift(o as usize)).collect(),
    }
}

impl RepresentationMap {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn dimension(&self) -> usize {
        self.spec.group_order()
    }

    /// Generator matrices, one per cyclic factor, each acting on the full
    /// module.
    pub fn generators(&self) -> Vec<Matrix<Cyclotomic>> {
        (0..self.spec.rank())
            .map(|k| {
                let mut exps = vec![0i64; self.spec.rank()];
                exps[k] = 1;
                self.image(&self.spec.element(&exps).expect("valid exponents"))
            })
            .collect()
    }

    pub fn image(&self, b: &BasisElement) -> Matrix<Cyclotomic> {
        let factors: Vec<_> = b
            .exponents()
            .iter()
            .zip(&self.shifts)
            .map(|(&a, p)| p.pow(a).expect("square"))
            .collect();
        kron_all(&factors)
    }

    pub fn image_of_element(&self, x: &AlgebraElement) -> Result<Matrix<Cyclotomic>> {
        if x.spec() != &self.spec {
            return usage("element and representation have different group specs");
        }
        let d = self.dimension();
        x.terms().iter().try_fold(Matrix::zeros(d, d), |acc, (b, c)| {
            acc.add(&self.image(b).scale(c))
        })
    }

    /// Γ^{⊗k} applied to a k-legged tensor; dimension d^k.
    pub fn image_of_tensor(&self, t: &TensorElement) -> Result<Matrix<Cyclotomic>> {
        if t.spec() != &self.spec {
            return usage("tensor and representation have different group specs");
        }
        let n = self.dimension().pow(t.legs() as u32);
        t.terms().iter().try_fold(Matrix::zeros(n, n), |acc, (key, c)| {
            let factors: Vec<_> = key.iter().map(|b| self.image(b)).collect();
            acc.add(&kron_all(&factors).scale(c))
        })
    }
}
