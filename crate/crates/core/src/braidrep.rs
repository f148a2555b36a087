//! Braided R-matrices R′ = τ·Γ(R), the braid-group representations they
//! generate, and the module maps C^R_{V,W} = τ_{V,W} ∘ (ρ_V ⊗ ρ_W)(R).
//!
//! Conventions:
//! - strand `i` of an `N`-strand braid acts on tensor slots `i` and `i+1`
//!   (1-based), so generator `i` is I^{⊗(i−1)} ⊗ R′ ⊗ I^{⊗(N−i−1)};
//! - a braid word is multiplied out as written: the word `[a, b, c]`
//!   evaluates to G_a·G_b·G_c, so the last letter acts on a state first;
//! - a negative letter `−i` uses the exact inverse of R′ in slot `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::groupalg::{coproduct, universal_r, AlgebraElement, BasisElement, GroupSpec, TensorElement};
use crate::linalg::{flip_operator, kron_all, regular_representation, swap_operator, Matrix};
use crate::scalar::{Cyclotomic, Scalar, FLOAT_TOLERANCE};

/// Where an R-matrix came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Group(GroupSpec),
    External(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Group(s) => write!(f, "group {:?}", s.orders()),
            Provenance::External(label) => write!(f, "external ({label})"),
        }
    }
}

/// An invertible d²×d² matrix meant to satisfy the braid relation.
#[derive(Clone, Debug)]
pub struct BraidedRMatrix<S: Scalar = Cyclotomic> {
    dim: usize,
    matrix: Matrix<S>,
    inverse: Matrix<S>,
    provenance: Provenance,
}

impl<S: Scalar> BraidedRMatrix<S> {
    /// Wraps an arbitrary square matrix of size d²; fails if the size is not a
    /// perfect square or the matrix is singular.
    pub fn new(matrix: Matrix<S>, provenance: Provenance) -> Result<Self> {
        if !matrix.is_square() {
            return usage("R-matrix must be square");
        }
        let n = matrix.rows();
        let dim = (1..=n).find(|d| d * d >= n).unwrap_or(1);
        if dim * dim != n {
            return usage(format!("R-matrix size {n} is not d² for any d"));
        }
        let inverse = matrix.invert()?;
        Ok(BraidedRMatrix {
            dim,
            matrix,
            inverse,
            provenance,
        })
    }

    pub fn external(matrix: Matrix<S>, label: impl Into<String>) -> Result<Self> {
        Self::new(matrix, Provenance::External(label.into()))
    }

    /// Local dimension d.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix<S> {
        &self.inverse
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

impl BraidedRMatrix<Cyclotomic> {
    pub fn to_float(&self) -> BraidedRMatrix<crate::scalar::Complex64> {
        BraidedRMatrix {
            dim: self.dim,
            matrix: self.matrix.to_float(),
            inverse: self.inverse.to_float(),
            provenance: self.provenance.clone(),
        }
    }
}

/// R′ = τ·Γ(R) for the universal R of `spec`, with d = Πηₖ.
pub fn braided_r(spec: &GroupSpec) -> BraidedRMatrix {
    let gamma = regular_representation(spec);
    let gr = gamma
        .image_of_tensor(&universal_r(spec))
        .expect("R is over the same spec");
    let d = gamma.dimension();
    let matrix = flip_operator(d).matmul(&gr).expect("shapes agree");
    BraidedRMatrix::new(matrix, Provenance::Group(spec.clone())).expect("R′ is invertible")
}

/// (R′⊗I)(I⊗R′)(R′⊗I) = (I⊗R′)(R′⊗I)(I⊗R′) on (C^d)^{⊗3}.
pub fn check_braided_ybe<S: Scalar>(r: &BraidedRMatrix<S>) -> bool {
    check_braided_ybe_tol(r, FLOAT_TOLERANCE)
}

pub fn check_braided_ybe_tol<S: Scalar>(r: &BraidedRMatrix<S>, tol: f64) -> bool {
    let id = Matrix::<S>::identity(r.dim);
    let left = r.matrix.kron(&id);
    let right = id.kron(&r.matrix);
    let lhs = left.matmul(&right).and_then(|m| m.matmul(&left));
    let rhs = right.matmul(&left).and_then(|m| m.matmul(&right));
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => a.approx_eq(&b, tol),
        _ => false,
    }
}

fn place<S: Scalar>(block: &Matrix<S>, i: usize, strands: usize, dim: usize) -> Matrix<S> {
    let before = Matrix::<S>::identity(dim.pow(i as u32 - 1));
    let after = Matrix::<S>::identity(dim.pow((strands - i - 1) as u32));
    kron_all(&[before, block.clone(), after])
}

/// R′ᵢ = I^{⊗(i−1)} ⊗ R′ ⊗ I^{⊗(N−i−1)}, a d^N × d^N matrix.
pub fn braid_generator<S: Scalar>(i: usize, strands: usize, r: &BraidedRMatrix<S>) -> Result<Matrix<S>> {
    if strands < 2 || i == 0 || i >= strands {
        return usage(format!(
            "generator index {i} out of range for {strands} strands"
        ));
    }
    Ok(place(&r.matrix, i, strands, r.dim))
}

/// Far commutation (|i−j| ≥ 2) and the adjacent braid relation for every
/// generator pair on `strands` strands.
pub fn check_braid_relations<S: Scalar>(strands: usize, r: &BraidedRMatrix<S>) -> bool {
    check_braid_relations_tol(strands, r, FLOAT_TOLERANCE)
}

pub fn check_braid_relations_tol<S: Scalar>(strands: usize, r: &BraidedRMatrix<S>, tol: f64) -> bool {
    if strands < 2 {
        return false;
    }
    let gens: Vec<Matrix<S>> = (1..strands)
        .map(|i| braid_generator(i, strands, r).expect("index in range"))
        .collect();
    let prod = |ms: &[&Matrix<S>]| -> Matrix<S> {
        ms.iter()
            .skip(1)
            .fold(ms[0].clone(), |acc, m| acc.matmul(m).expect("same size"))
    };
    for i in 0..gens.len() {
        for j in i + 2..gens.len() {
            if !prod(&[&gens[i], &gens[j]]).approx_eq(&prod(&[&gens[j], &gens[i]]), tol) {
                return false;
            }
        }
        if i + 1 < gens.len() {
            let (a, b) = (&gens[i], &gens[i + 1]);
            if !prod(&[a, b, a]).approx_eq(&prod(&[b, a, b]), tol) {
                return false;
            }
        }
    }
    true
}

/// A word in the braid group generators; letter ±i is σᵢ^{±1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return usage("a braid needs at least two strands");
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return usage(format!("invalid letter {l} for {strands} strands"));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses a comma-separated list such as `"1,2,-1"`; the empty string is
    /// the empty word.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let letters = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|t| {
                    i32::from_str(t.trim())
                        .map_err(|_| Error::Usage(format!("malformed braid letter {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return usage("cannot concatenate braids on different strand counts");
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Product of the word's generators, leftmost letter leftmost.
pub fn evaluate_braid_word<S: Scalar>(w: &BraidWord, r: &BraidedRMatrix<S>) -> Result<Matrix<S>> {
    let n = r.dim.pow(w.strands as u32);
    w.letters.iter().try_fold(Matrix::identity(n), |acc, &l| {
        let block = if l > 0 { &r.matrix } else { &r.inverse };
        acc.matmul(&place(block, l.unsigned_abs() as usize, w.strands, r.dim))
    })
}

/// A representation of C[Z/η₁ × … × Z/ηₙ] on C^dim, given by commuting
/// generator matrices Mₖ with Mₖ^{ηₖ} = I.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    spec: GroupSpec,
    dim: usize,
    generators: Vec<Matrix>,
}

impl ModuleAction {
    pub fn from_generators(spec: &GroupSpec, generators: Vec<Matrix>) -> Result<Self> {
        if generators.len() != spec.rank() {
            return usage(format!(
                "need {} generator matrices, got {}",
                spec.rank(),
                generators.len()
            ));
        }
        let dim = generators[0].rows();
        for (m, &o) in generators.iter().zip(spec.orders()) {
            if !m.is_square() || m.rows() != dim {
                return usage("generator matrices must be square of a common size");
            }
            if !m.pow(o)?.is_identity(0.0) {
                return usage(format!("generator does not satisfy M^{o} = I"));
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if a.matmul(b)? != b.matmul(a)? {
                    return usage("generator matrices must commute");
                }
            }
        }
        Ok(ModuleAction {
            spec: spec.clone(),
            dim,
            generators,
        })
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(spec: &GroupSpec) -> Self {
        let gamma = regular_representation(spec);
        ModuleAction {
            spec: spec.clone(),
            dim: gamma.dimension(),
            generators: gamma.generators(),
        }
    }

    /// One-dimensional module where every group element acts as 1.
    pub fn trivial(spec: &GroupSpec) -> Self {
        Self::character(spec, &vec![0; spec.rank()]).expect("trivial character")
    }

    /// One-dimensional module g_k ↦ ζ_{ηₖ}^{wₖ}.
    pub fn character(spec: &GroupSpec, weights: &[i64]) -> Result<Self> {
        if weights.len() != spec.rank() {
            return usage("one weight per cyclic factor");
        }
        let generators = weights
            .iter()
            .zip(spec.orders())
            .map(|(&w, &o)| Matrix::new(1, 1, vec![Cyclotomic::root_of_unity(o as u64, w)]))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleAction {
            spec: spec.clone(),
            dim: 1,
            generators,
        })
    }

    /// Direct sum of two modules over the same spec.
    pub fn direct_sum(&self, other: &ModuleAction) -> Result<Self> {
        if self.spec != other.spec {
            return usage("direct sum of modules over different specs");
        }
        let n = self.dim + other.dim;
        let generators = self
            .generators
            .iter()
            .zip(&other.generators)
            .map(|(a, b)| {
                Matrix::from_fn(n, n, |i, j| match (i < self.dim, j < self.dim) {
                    (true, true) => a.get(i, j).clone(),
                    (false, false) => b.get(i - self.dim, j - self.dim).clone(),
                    _ => Cyclotomic::zero(),
                })
            })
            .collect();
        Ok(ModuleAction {
            spec: self.spec.clone(),
            dim: n,
            generators,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// ρ(g^a) = Πₖ Mₖ^{aₖ}.
    pub fn image(&self, b: &BasisElement) -> Matrix {
        b.exponents()
            .iter()
            .zip(&self.generators)
            .fold(Matrix::identity(self.dim), |acc, (&a, m)| {
                acc.matmul(&m.pow(a).expect("square")).expect("same size")
            })
    }

    pub fn image_of_element(&self, x: &AlgebraElement) -> Result<Matrix> {
        if x.spec() != &self.spec {
            return usage("element and module have different group specs");
        }
        x.terms()
            .iter()
            .try_fold(Matrix::zeros(self.dim, self.dim), |acc, (b, c)| {
                acc.add(&self.image(b).scale(c))
            })
    }
}

/// (ρ₁ ⊗ … ⊗ ρ_k)(t) for a k-legged tensor, one module per leg.
pub fn represent_tensor(t: &TensorElement, modules: &[&ModuleAction]) -> Result<Matrix> {
    if modules.len() != t.legs() {
        return usage(format!("{} modules for {} legs", modules.len(), t.legs()));
    }
    if modules.iter().any(|m| m.spec() != t.spec()) {
        return usage("module and tensor have different group specs");
    }
    let n: usize = modules.iter().map(|m| m.dim).product();
    t.terms().iter().try_fold(Matrix::zeros(n, n), |acc, (key, c)| {
        let factors: Vec<_> = key.iter().zip(modules).map(|(b, m)| m.image(b)).collect();
        acc.add(&kron_all(&factors).scale(c))
    })
}

/// Matrix of C^R_{V,W} = τ_{V,W} ∘ (ρ_V⊗ρ_W)(R) : V⊗W → W⊗V.
pub fn c_r_map(v: &ModuleAction, w: &ModuleAction, r: &TensorElement) -> Result<Matrix> {
    if v.spec != w.spec {
        return usage("modules have different group specs");
    }
    if r.legs() != 2 {
        return usage("R must have two legs");
    }
    let acted = represent_tensor(r, &[v, w])?;
    swap_operator(v.dim, w.dim).matmul(&acted)
}

/// c intertwines the H-actions on V⊗W and W⊗V (via Δ) and is invertible.
pub fn check_module_morphism(c: &Matrix, v: &ModuleAction, w: &ModuleAction) -> Result<bool> {
    if v.spec != w.spec {
        return usage("modules have different group specs");
    }
    let n = v.dim * w.dim;
    if c.rows() != n || c.cols() != n || c.invert().is_err() {
        return Ok(false);
    }
    for b in v.spec.basis() {
        let dx = coproduct(&AlgebraElement::basis(&v.spec, b));
        let on_vw = represent_tensor(&dx, &[v, w])?;
        let on_wv = represent_tensor(&dx, &[w, v])?;
        if c.matmul(&on_vw)? != on_wv.matmul(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// (C_{V,W}⊗id_U)(id_V⊗C_{U,W})(C_{U,V}⊗id_W)
///   = (id_W⊗C_{U,V})(C_{U,W}⊗id_V)(id_U⊗C_{V,W})
/// as maps U⊗V⊗W → W⊗V⊗U.
pub fn check_hexagon(
    u: &ModuleAction,
    v: &ModuleAction,
    w: &ModuleAction,
    r: &TensorElement,
) -> Result<bool> {
    let c_uv = c_r_map(u, v, r)?;
    let c_uw = c_r_map(u, w, r)?;
    let c_vw = c_r_map(v, w, r)?;
    let id = |m: &ModuleAction| Matrix::<Cyclotomic>::identity(m.dim);

    let lhs = c_vw
        .kron(&id(u))
        .matmul(&id(v).kron(&c_uw))?
        .matmul(&c_uv.kron(&id(w)))?;
    let rhs = id(w)
        .kron(&c_uv)
        .matmul(&c_uw.kron(&id(v)))?
        .matmul(&id(u).kron(&c_vw))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::universal_r;

    fn spec(o: &[u32]) -> GroupSpec {
        GroupSpec::new(o.to_vec()).unwrap()
    }

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(rows).unwrap()
    }

    fn r_prime_z2() -> Matrix {
        ints(&[&[1, 1, 1, -1], &[1, -1, 1, 1], &[1, 1, -1, 1], &[-1, 1, 1, 1]])
            .scale(&Cyclotomic::ratio(1, 2))
    }

    #[test]
    fn braided_r_examples() {
        assert_eq!(*braided_r(&spec(&[2])).matrix(), r_prime_z2());
        assert_eq!(*braided_r(&spec(&[1])).matrix(), Matrix::identity(1));
    }

    #[test]
    fn braided_r_z3_entry_formula() {
        // Γ(R)[(j′,k′),(j,k)] = ⅓ ζ₃^{−(j′−j)(k′−k)}, then rows are flipped
        let r = braided_r(&spec(&[3]));
        for jp in 0..3i64 {
            for kp in 0..3i64 {
                for j in 0..3i64 {
                    for k in 0..3i64 {
                        let expect = Cyclotomic::root_of_unity(3, -(jp - j) * (kp - k))
                            .scale(&crate::scalar::Rational::new(1.into(), 3.into()));
                        let row = (kp * 3 + jp) as usize;
                        let col = (j * 3 + k) as usize;
                        assert_eq!(*r.matrix().get(row, col), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn braided_ybe_examples() {
        assert!(check_braided_ybe(&braided_r(&spec(&[2]))));
        assert!(check_braided_ybe(&braided_r(&spec(&[3]))));
        let flip = BraidedRMatrix::external(flip_operator::<Cyclotomic>(2), "flip").unwrap();
        assert!(check_braided_ybe(&flip));
        assert!(check_braided_ybe(&braided_r(&spec(&[2])).to_float()));
    }

    #[test]
    fn ybe_can_fail() {
        // diag(1,1,1,-1) ⊗ swap-free: CZ is not a braid-relation solution
        let cz = ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
        let h = ints(&[&[1, 1], &[1, -1]]).kron(&Matrix::identity(2));
        let m = h.matmul(&cz).unwrap();
        let r = BraidedRMatrix::external(m, "h-cz").unwrap();
        assert!(!check_braided_ybe(&r));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(BraidedRMatrix::external(Matrix::<Cyclotomic>::identity(3), "x").is_err());
        assert!(BraidedRMatrix::external(Matrix::<Cyclotomic>::zeros(4, 4), "x").is_err());
    }

    #[test]
    fn generators() {
        let r = braided_r(&spec(&[2]));
        assert_eq!(braid_generator(1, 2, &r).unwrap(), r_prime_z2());
        let i2 = Matrix::identity(2);
        assert_eq!(braid_generator(1, 3, &r).unwrap(), r_prime_z2().kron(&i2));
        assert_eq!(braid_generator(2, 3, &r).unwrap(), i2.kron(&r_prime_z2()));
        assert_eq!(braid_generator(2, 3, &r).unwrap().rows(), 8);
        assert!(braid_generator(0, 3, &r).is_err());
        assert!(braid_generator(3, 3, &r).is_err());
    }

    #[test]
    fn braid_relations() {
        let r2 = braided_r(&spec(&[2]));
        assert!(check_braid_relations(2, &r2));
        assert!(check_braid_relations(3, &r2));
        assert!(check_braid_relations(4, &r2));
        assert!(!check_braid_relations(1, &r2));
    }

    #[test]
    fn braid_words() {
        let r = braided_r(&spec(&[2]));
        let w = BraidWord::parse(3, "").unwrap();
        assert_eq!(evaluate_braid_word(&w, &r).unwrap(), Matrix::identity(8));
        let w = BraidWord::parse(2, "1, -1").unwrap();
        assert_eq!(evaluate_braid_word(&w, &r).unwrap(), Matrix::identity(4));
        let a = evaluate_braid_word(&BraidWord::parse(3, "1,2,1").unwrap(), &r).unwrap();
        let b = evaluate_braid_word(&BraidWord::parse(3, "2,1,2").unwrap(), &r).unwrap();
        assert_eq!(a, b);
        assert!(BraidWord::parse(3, "1,3").is_err());
        assert!(BraidWord::parse(3, "1,0").is_err());
        assert!(BraidWord::parse(3, "1,x").is_err());
        assert!(BraidWord::parse(1, "").is_err());
        assert_eq!(BraidWord::parse(4, "1,-3,2").unwrap().to_string(), "1,-3,2");
    }

    #[test]
    fn word_order_is_matrix_order() {
        let r = braided_r(&spec(&[3]));
        let w = BraidWord::parse(3, "1,2").unwrap();
        let g1 = braid_generator(1, 3, &r).unwrap();
        let g2 = braid_generator(2, 3, &r).unwrap();
        assert_eq!(evaluate_braid_word(&w, &r).unwrap(), g1.matmul(&g2).unwrap());
    }

    #[test]
    fn c_r_examples() {
        let s = spec(&[2]);
        let reg = ModuleAction::regular(&s);
        assert_eq!(c_r_map(&reg, &reg, &universal_r(&s)).unwrap(), r_prime_z2());
        let t = ModuleAction::trivial(&s);
        assert_eq!(c_r_map(&t, &t, &universal_r(&s)).unwrap(), Matrix::identity(1));
        let other = ModuleAction::regular(&spec(&[3]));
        assert!(c_r_map(&reg, &other, &universal_r(&s)).is_err());
    }

    #[test]
    fn c_r_for_z2_squared_matches_sum_over_phases() {
        // C(u⊗v) = ¼ Σ_{a,b} (−1)^{a·b} g^b▷v ⊗ g^a▷u, expanded directly on
        // basis vectors e_{u} ⊗ e_{v} of the regular module
        let s = spec(&[2, 2]);
        let reg = ModuleAction::regular(&s);
        let c = c_r_map(&reg, &reg, &universal_r(&s)).unwrap();
        let shift = |x: usize, g: usize| ((x >> 1) ^ (g >> 1)) << 1 | ((x & 1) ^ (g & 1));
        let mut oracle = Matrix::<Cyclotomic>::zeros(16, 16);
        for u in 0..4 {
            for v in 0..4 {
                for a in 0..4usize {
                    for b in 0..4usize {
                        let dot = (a >> 1) * (b >> 1) + (a & 1) * (b & 1);
                        let sign = if dot % 2 == 0 { 1 } else { -1 };
                        let row = shift(v, b) * 4 + shift(u, a);
                        let col = u * 4 + v;
                        let cur = oracle.get(row, col).clone();
                        oracle.set(row, col, cur + Cyclotomic::ratio(sign, 4));
                    }
                }
            }
        }
        assert_eq!(c, oracle);
    }

    #[test]
    fn morphism_examples() {
        for o in [&[2][..], &[3]] {
            let s = spec(o);
            let reg = ModuleAction::regular(&s);
            let c = c_r_map(&reg, &reg, &universal_r(&s)).unwrap();
            assert!(check_module_morphism(&c, &reg, &reg).unwrap());
        }
        let s = spec(&[2]);
        let reg = ModuleAction::regular(&s);
        assert!(!check_module_morphism(&Matrix::zeros(4, 4), &reg, &reg).unwrap());
        // invertible but not an intertwiner
        let bogus = Matrix::identity(2).kron(&ints(&[&[1, 1], &[0, 1]]));
        assert!(!check_module_morphism(&bogus, &reg, &reg).unwrap());
    }

    #[test]
    fn hexagon_examples() {
        for o in [&[2][..], &[3]] {
            let s = spec(o);
            let reg = ModuleAction::regular(&s);
            assert!(check_hexagon(&reg, &reg, &reg, &universal_r(&s)).unwrap());
        }
    }

    #[test]
    fn hexagon_on_mixed_modules() {
        let s = spec(&[3]);
        let reg = ModuleAction::regular(&s);
        let chi = ModuleAction::character(&s, &[1]).unwrap();
        let sum = chi.direct_sum(&ModuleAction::trivial(&s)).unwrap();
        let r = universal_r(&s);
        assert!(check_hexagon(&reg, &chi, &sum, &r).unwrap());
        assert!(check_hexagon(&sum, &reg, &chi, &r).unwrap());
        let c = c_r_map(&chi, &reg, &r).unwrap();
        assert!(check_module_morphism(&c, &chi, &reg).unwrap());
    }

    #[test]
    fn module_validation() {
        let s = spec(&[2]);
        assert!(ModuleAction::from_generators(&s, vec![ints(&[&[1, 1], &[0, 1]])]).is_err());
        assert!(ModuleAction::from_generators(&s, vec![]).is_err());
        let s22 = spec(&[2, 2]);
        let x = ints(&[&[0, 1], &[1, 0]]);
        let z = ints(&[&[1, 0], &[0, -1]]);
        assert!(ModuleAction::from_generators(&s22, vec![x.clone(), z]).is_err());
        assert!(ModuleAction::from_generators(&s22, vec![x.clone(), x]).is_ok());
        assert!(ModuleAction::character(&s, &[1, 1]).is_err());
    }
}
