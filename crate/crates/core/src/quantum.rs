//! Qudit state vectors with exact amplitudes, Bell states, gate application,
//! and the two entanglement diagnostics used here: two-qubit concurrence and
//! Schmidt rank.
//!
//! Qudit 0 is the most significant digit of a basis index, matching the
//! Kronecker convention of [`crate::linalg`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braidrep::BraidedRMatrix;
use crate::error::{domain, usage, Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{rational_to_f64, Complex64, Cyclotomic, Scalar, FLOAT_TOLERANCE};

/// Amplitudes of an n-qudit pure state, local dimension d. Not normalized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateVector {
    d: usize,
    n: usize,
    amps: Vec<Cyclotomic>,
}

impl StateVector {
    pub fn new(d: usize, n: usize, amps: Vec<Cyclotomic>) -> Result<Self> {
        if d < 1 || n < 1 {
            return usage("states need d ≥ 1 and n ≥ 1");
        }
        if amps.len() != d.pow(n as u32) {
            return usage(format!(
                "{n} qudits of dimension {d} need {} amplitudes, got {}",
                d.pow(n as u32),
                amps.len()
            ));
        }
        if amps.iter().all(Cyclotomic::is_zero) {
            return domain("the zero vector is not a state");
        }
        Ok(StateVector { d, n, amps })
    }

    /// Computational basis state |digits⟩.
    pub fn basis(d: usize, digits: &[usize]) -> Result<Self> {
        if digits.iter().any(|&x| x >= d) {
            return usage(format!("basis digits {digits:?} out of range for d = {d}"));
        }
        let idx = digits.iter().fold(0, |acc, &x| acc * d + x);
        let mut amps = vec![Cyclotomic::zero(); d.pow(digits.len() as u32)];
        amps[idx] = Cyclotomic::one();
        Self::new(d, digits.len(), amps)
    }

    pub fn from_ints(d: usize, n: usize, amps: &[i64]) -> Result<Self> {
        Self::new(d, n, amps.iter().map(|&a| Cyclotomic::from_integer(a)).collect())
    }

    /// Parses a named qubit state: a Bell label (`phi+`, `phi-`, `psi+`,
    /// `psi-`) or a bit string such as `01`.
    pub fn from_label(label: &str) -> Result<Self> {
        if let Ok(kind) = label.parse::<BellKind>() {
            return Ok(bell_state(kind));
        }
        let digits = label
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => usage(format!("unknown state label {label:?}")),
            })
            .collect::<Result<Vec<_>>>()?;
        if digits.is_empty() {
            return usage("empty state label");
        }
        Self::basis(2, &digits)
    }

    pub fn local_dim(&self) -> usize {
        self.d
    }

    pub fn qudits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Cyclotomic] {
        &self.amps
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.amps.iter().map(Cyclotomic::to_complex).collect()
    }

    pub fn scale(&self, s: &Cyclotomic) -> Result<Self> {
        Self::new(self.d, self.n, self.amps.iter().map(|a| a * s).collect())
    }

    /// Σ|a|², exact.
    pub fn norm_sqr(&self) -> Cyclotomic {
        self.amps.iter().map(Cyclotomic::norm_sqr).sum()
    }

    /// λ with `self = λ·other`, if the two states lie on the same ray.
    pub fn ray_factor(&self, other: &StateVector) -> Option<Cyclotomic> {
        if (self.d, self.n) != (other.d, other.n) {
            return None;
        }
        let k = other.amps.iter().position(|a| !a.is_zero())?;
        let lambda = &self.amps[k] * &other.amps[k].invert().ok()?;
        self.amps
            .iter()
            .zip(&other.amps)
            .all(|(x, y)| *x == &lambda * y)
            .then_some(lambda)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(Error::from)
    }
}

impl<'de> Deserialize<'de> for StateVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            d: usize,
            n: usize,
            amps: Vec<Cyclotomic>,
        }
        let r = Repr::deserialize(d)?;
        StateVector::new(r.d, r.n, r.amps).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.amps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut digits = vec![0; self.n];
            let mut rest = i;
            for slot in digits.iter_mut().rev() {
                *slot = rest % self.d;
                rest /= self.d;
            }
            let label: String = digits.iter().map(|x| x.to_string()).collect();
            write!(f, "({a})|{label}⟩")?;
        }
        Ok(())
    }
}

/// The four Bell states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BellKind {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PhiPlus,
        BellKind::PhiMinus,
        BellKind::PsiPlus,
        BellKind::PsiMinus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BellKind::PhiPlus => "phi+",
            BellKind::PhiMinus => "phi-",
            BellKind::PsiPlus => "psi+",
            BellKind::PsiMinus => "psi-",
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BellKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi+" => Ok(BellKind::PhiPlus),
            "phi-" => Ok(BellKind::PhiMinus),
            "psi+" => Ok(BellKind::PsiPlus),
            "psi-" => Ok(BellKind::PsiMinus),
            _ => usage(format!("unknown Bell state {s:?}")),
        }
    }
}

/// 1/√2 = (ζ₈ + ζ₈⁷)/2.
pub fn inv_sqrt2() -> Cyclotomic {
    Cyclotomic::sqrt2() * Cyclotomic::ratio(1, 2)
}

pub fn bell_state(kind: BellKind) -> StateVector {
    let ints: [i64; 4] = match kind {
        BellKind::PhiPlus => [1, 0, 0, 1],
        BellKind::PhiMinus => [1, 0, 0, -1],
        BellKind::PsiPlus => [0, 1, 1, 0],
        BellKind::PsiMinus => [0, 1, -1, 0],
    };
    let h = inv_sqrt2();
    StateVector::new(2, 2, ints.iter().map(|&x| Cyclotomic::from_integer(x) * &h).collect())
        .expect("nonzero")
}

/// Applies a d^k × d^k gate to the qudits `targets` (in that order; the
/// first target is the gate's most significant factor).
pub fn apply_gate(g: &Matrix, s: &StateVector, targets: &[usize]) -> Result<StateVector> {
    let k = targets.len();
    let dk = s.d.pow(k as u32);
    if k == 0 || g.rows() != dk || g.cols() != dk {
        return usage(format!(
            "gate of size {}x{} does not act on {k} qudits of dimension {}",
            g.rows(),
            g.cols(),
            s.d
        ));
    }
    if targets.iter().any(|&t| t >= s.n) {
        return usage(format!("target out of range for {} qudits", s.n));
    }
    let mut sorted = targets.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return usage("gate targets must be distinct");
    }
    // place value of each qudit in a basis index
    let stride = |q: usize| s.d.pow((s.n - 1 - q) as u32);
    let target_offset = |local: usize| -> usize {
        let mut rest = local;
        let mut off = 0;
        for &t in targets.iter().rev() {
            off += (rest % s.d) * stride(t);
            rest /= s.d;
        }
        off
    };
    let offsets: Vec<usize> = (0..dk).map(target_offset).collect();
    let mut out = vec![Cyclotomic::zero(); s.amps.len()];
    for base in 0..s.amps.len() {
        // visit each assignment of the untouched qudits once
        if targets.iter().any(|&t| (base / stride(t)) % s.d != 0) {
            continue;
        }
        let local: Vec<Cyclotomic> = offsets.iter().map(|&o| s.amps[base + o].clone()).collect();
        for (o, v) in offsets.iter().zip(g.apply(&local)?) {
            out[base + o] = v;
        }
    }
    StateVector::new(s.d, s.n, out)
}

/// Expected image of each Bell state under the gate: (input, sign, output).
pub const BELL_ACTIONS: [(BellKind, i64, BellKind); 4] = [
    (BellKind::PhiPlus, 1, BellKind::PsiPlus),
    (BellKind::PsiPlus, 1, BellKind::PhiPlus),
    (BellKind::PhiMinus, 1, BellKind::PhiMinus),
    (BellKind::PsiMinus, -1, BellKind::PsiMinus),
];

#[derive(Clone, Debug)]
pub struct BellOutcome {
    pub input: BellKind,
    pub expected_sign: i64,
    pub expected: BellKind,
    pub image: StateVector,
    pub pass: bool,
}

impl BellOutcome {
    pub fn describe(&self) -> String {
        let sign = if self.expected_sign < 0 { "-" } else { "" };
        format!(
            "R'|{}> -> {}|{}>: {} (image {})",
            self.input,
            sign,
            self.expected,
            if self.pass { "holds" } else { "fails" },
            self.image
        )
    }
}

/// Exact check, signs included, of the four Bell-state mappings
/// Φ⁺↦Ψ⁺, Ψ⁺↦Φ⁺, Φ⁻↦Φ⁻, Ψ⁻↦−Ψ⁻.
pub fn verify_bell_actions(r: &BraidedRMatrix) -> Result<Vec<BellOutcome>> {
    if r.dim() != 2 {
        return usage("Bell actions need a qubit R-matrix (d = 2)");
    }
    BELL_ACTIONS
        .iter()
        .map(|&(input, sign, expected)| {
            let image = apply_gate(r.matrix(), &bell_state(input), &[0, 1])?;
            let target = bell_state(expected).scale(&Cyclotomic::from_integer(sign))?;
            Ok(BellOutcome {
                input,
                expected_sign: sign,
                expected,
                pass: image == target,
                image,
            })
        })
        .collect()
}

/// C = 2|a₀₀a₁₁ − a₀₁a₁₀| / Σ|a|² for a two-qubit state.
pub fn concurrence(s: &StateVector) -> Result<f64> {
    if (s.d, s.n) != (2, 2) {
        return usage("concurrence is defined here for two qubits only");
    }
    let a = &s.amps;
    let det = &(&a[0] * &a[3]) - &(&a[1] * &a[2]);
    let norm = s.norm_sqr();
    let norm = norm
        .as_rational()
        .map(|q| rational_to_f64(&q))
        .unwrap_or_else(|| norm.to_complex().re);
    if norm <= 0.0 {
        return domain("zero state has no concurrence");
    }
    Ok((2.0 * det.to_complex().norm() / norm).min(1.0))
}

/// Float-backend concurrence for raw amplitudes.
pub fn concurrence_float(a: &[Complex64]) -> Result<f64> {
    if a.len() != 4 {
        return usage("concurrence needs four amplitudes");
    }
    let norm: f64 = a.iter().map(|x| x.norm_sqr()).sum();
    if norm == 0.0 {
        return domain("zero state has no concurrence");
    }
    Ok((2.0 * (a[0] * a[3] - a[1] * a[2]).norm() / norm).min(1.0))
}

/// Rank of the amplitude matrix across the cut between the first `cut`
/// qudits and the rest; 1 exactly for product states.
pub fn schmidt_rank(s: &StateVector, cut: usize) -> Result<usize> {
    if cut == 0 || cut >= s.n {
        return usage(format!("cut {cut} does not split {} qudits", s.n));
    }
    let rows = s.d.pow(cut as u32);
    let cols = s.d.pow((s.n - cut) as u32);
    let m = Matrix::new(rows, cols, s.amps.clone())?;
    Ok(m.rank())
}

fn require_unit<S: Scalar>(x: &S, name: &str) -> Result<()> {
    let modulus = x.to_complex().norm();
    if (modulus - 1.0).abs() > FLOAT_TOLERANCE {
        return usage(format!("{name} = {x} is not on the unit circle (|{name}| = {modulus})"));
    }
    Ok(())
}

/// [[a,0,0,0],[0,0,d,0],[0,c,0,0],[0,0,0,b]] for unit-modulus a, b, c, d.
pub fn kauffman_lomonaco_r<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> Result<Matrix<S>> {
    for (x, name) in [(a, "a"), (b, "b"), (c, "c"), (d, "d")] {
        require_unit(x, name)?;
    }
    let z = S::zero();
    Matrix::new(
        4,
        4,
        vec![
            a.clone(), z.clone(), z.clone(), z.clone(),
            z.clone(), z.clone(), d.clone(), z.clone(),
            z.clone(), c.clone(), z.clone(), z.clone(),
            z.clone(), z.clone(), z.clone(), b.clone(),
        ],
    )
}

/// Applies the Kauffman–Lomonaco matrix to ψ⊗ψ with ψ = |0⟩+|1⟩ and reports
/// (entangled, concurrence), entangled meaning concurrence > 1e−9.
pub fn kl_entangling_test(
    a: &Cyclotomic,
    b: &Cyclotomic,
    c: &Cyclotomic,
    d: &Cyclotomic,
) -> Result<(bool, f64)> {
    let m = kauffman_lomonaco_r(a, b, c, d)?;
    let psi_psi = StateVector::from_ints(2, 2, &[1, 1, 1, 1])?;
    let image = apply_gate(&m, &psi_psi, &[0, 1])?;
    let conc = concurrence(&image)?;
    Ok((conc > FLOAT_TOLERANCE, conc))
}

/// ½·[[1,0,0,0],[0,1,−1,0],[0,1,1,0],[−1,0,0,1]].
pub fn bell_matrix() -> Matrix {
    Matrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, -1, 0], &[0, 1, 1, 0], &[-1, 0, 0, 1]])
        .expect("4x4")
        .scale(&Cyclotomic::ratio(1, 2))
}

/// Expected Bell-matrix images of |00⟩, |01⟩, |10⟩, |11⟩: (digits, sign, state).
pub const BELL_MATRIX_ACTIONS: [([usize; 2], i64, BellKind); 4] = [
    ([0, 0], 1, BellKind::PhiMinus),
    ([0, 1], 1, BellKind::PsiPlus),
    ([1, 0], -1, BellKind::PsiMinus),
    ([1, 1], 1, BellKind::PhiPlus),
];

#[derive(Clone, Debug)]
pub struct RayOutcome {
    pub input: [usize; 2],
    pub expected_sign: i64,
    pub expected: BellKind,
    pub image: StateVector,
    /// λ with image = λ·(sign·expected), when one exists.
    pub factor: Option<Cyclotomic>,
    pub concurrence: f64,
    pub pass: bool,
}

impl RayOutcome {
    pub fn describe(&self) -> String {
        let sign = if self.expected_sign < 0 { "-" } else { "" };
        let factor = match &self.factor {
            Some(l) => format!("scale {:.6}", l.to_complex().re),
            None => "not on the expected ray".to_string(),
        };
        format!(
            "B|{}{}> ~ {}|{}>: {} ({factor}, image {}, concurrence {:.12})",
            self.input[0],
            self.input[1],
            sign,
            self.expected,
            if self.pass { "holds" } else { "fails" },
            self.image,
            self.concurrence
        )
    }
}

/// Checks each basis image of `b` against its expected Bell state up to one
/// positive real factor.
pub fn verify_bell_matrix_actions(b: &Matrix) -> Result<Vec<RayOutcome>> {
    BELL_MATRIX_ACTIONS
        .iter()
        .map(|&(input, sign, expected)| {
            let image = apply_gate(b, &StateVector::basis(2, &input)?, &[0, 1])?;
            let target = bell_state(expected).scale(&Cyclotomic::from_integer(sign))?;
            let factor = image.ray_factor(&target);
            let positive = factor
                .as_ref()
                .is_some_and(|l| *l == l.conjugate() && l.to_complex().re > 0.0);
            Ok(RayOutcome {
                input,
                expected_sign: sign,
                expected,
                concurrence: concurrence(&image)?,
                factor,
                pass: positive,
                image,
            })
        })
        .collect()
}
