//! Python bindings: exact scalars, group specs, R-matrices, braid words and
//! qubit states.

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use qtbraid::braidrep::{self, BraidWord, BraidedRMatrix};
use qtbraid::groupalg::{self, GroupSpec, TensorElement};
use qtbraid::linalg::{self, Matrix};
use qtbraid::quantum::{self, BellKind, StateVector};
use qtbraid::scalar::{Complex64, Cyclotomic};

fn err(e: qtbraid::Error) -> PyErr {
    match e {
        qtbraid::Error::Domain(m) => PyArithmeticError::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for qtbraid::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(err)
    }
}

// ---------------------------------------------------------------------------

/// Exact element of a cyclotomic field Q(ζ_L).
#[pyclass(name = "Cyclotomic", module = "qtbraid_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyCyclotomic(Cyclotomic);

#[derive(FromPyObject)]
enum ScalarArg<'py> {
    Exact(PyRef<'py, PyCyclotomic>),
    Int(i64),
}

impl ScalarArg<'_> {
    fn value(&self) -> Cyclotomic {
        match self {
            ScalarArg::Exact(c) => c.0.clone(),
            ScalarArg::Int(n) => Cyclotomic::from_integer(*n),
        }
    }
}

#[pymethods]
impl PyCyclotomic {
    #[new]
    #[pyo3(signature = (num, den = 1))]
    fn new(num: i64, den: i64) -> PyResult<Self> {
        if den == 0 {
            return Err(PyArithmeticError::new_err("zero denominator"));
        }
        Ok(PyCyclotomic(Cyclotomic::ratio(num, den)))
    }

    /// ζ_order^k.
    #[staticmethod]
    fn root_of_unity(order: u64, k: i64) -> PyResult<Self> {
        if order == 0 {
            return Err(PyValueError::new_err("order must be positive"));
        }
        Ok(PyCyclotomic(Cyclotomic::root_of_unity(order, k)))
    }

    #[staticmethod]
    fn sqrt2() -> Self {
        PyCyclotomic(Cyclotomic::sqrt2())
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json_parse(s).map(PyCyclotomic)
    }

    #[getter]
    fn order(&self) -> u64 {
        self.0.order()
    }

    fn conjugate(&self) -> Self {
        PyCyclotomic(self.0.conjugate())
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.invert().py().map(PyCyclotomic)
    }

    fn to_complex(&self) -> Complex64 {
        self.0.to_complex()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn to_json(&self) -> String {
        qtbraid_json(&self.0)
    }

    fn __add__(&self, other: ScalarArg<'_>) -> Self {
        PyCyclotomic(&self.0 + &other.value())
    }

    fn __radd__(&self, other: ScalarArg<'_>) -> Self {
        self.__add__(other)
    }

    fn __sub__(&self, other: ScalarArg<'_>) -> Self {
        PyCyclotomic(&self.0 - &other.value())
    }

    fn __rsub__(&self, other: ScalarArg<'_>) -> Self {
        PyCyclotomic(&other.value() - &self.0)
    }

    fn __mul__(&self, other: ScalarArg<'_>) -> Self {
        PyCyclotomic(&self.0 * &other.value())
    }

    fn __rmul__(&self, other: ScalarArg<'_>) -> Self {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: ScalarArg<'_>) -> PyResult<Self> {
        let inv = other.value().invert().py()?;
        Ok(PyCyclotomic(&self.0 * &inv))
    }

    fn __neg__(&self) -> Self {
        PyCyclotomic(-self.0.clone())
    }

    fn __eq__(&self, other: ScalarArg<'_>) -> bool {
        self.0 == other.value()
    }

    fn __complex__(&self) -> Complex64 {
        self.0.to_complex()
    }

    fn __repr__(&self) -> String {
        format!("Cyclotomic({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn serde_json_parse<T: serde::de::DeserializeOwned>(s: &str) -> PyResult<T> {
    serde_json::from_str(s).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn qtbraid_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

// ---------------------------------------------------------------------------

/// Orders η₁, …, ηₙ of a product of cyclic groups.
#[pyclass(name = "GroupSpec", module = "qtbraid_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGroupSpec(GroupSpec);

#[pymethods]
impl PyGroupSpec {
    #[new]
    fn new(orders: Vec<u32>) -> PyResult<Self> {
        GroupSpec::new(orders).py().map(PyGroupSpec)
    }

    #[getter]
    fn orders(&self) -> Vec<u32> {
        self.0.orders().to_vec()
    }

    /// d = Πηₖ, the dimension of the regular representation.
    #[getter]
    fn group_order(&self) -> usize {
        self.0.group_order()
    }

    fn __eq__(&self, other: PyRef<'_, PyGroupSpec>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("GroupSpec({:?})", self.0.orders())
    }
}

// ---------------------------------------------------------------------------

/// Exact dense matrix over cyclotomic numbers.
#[pyclass(name = "Matrix", module = "qtbraid_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMatrix(Matrix);

#[pymethods]
impl PyMatrix {
    /// From integer rows, optionally scaled by num/den.
    #[new]
    #[pyo3(signature = (rows, num = 1, den = 1))]
    fn new(rows: Vec<Vec<i64>>, num: i64, den: i64) -> PyResult<Self> {
        if den == 0 {
            return Err(PyArithmeticError::new_err("zero denominator"));
        }
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Matrix::from_int_rows(&refs).py()?;
        Ok(PyMatrix(m.scale(&Cyclotomic::ratio(num, den))))
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyMatrix(Matrix::identity(n))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json_parse(s).map(PyMatrix)
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.rows(), self.0.cols())
    }

    fn entry(&self, i: usize, j: usize) -> PyResult<PyCyclotomic> {
        if i >= self.0.rows() || j >= self.0.cols() {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(PyCyclotomic(self.0.get(i, j).clone()))
    }

    fn to_complex(&self) -> Vec<Vec<Complex64>> {
        (0..self.0.rows())
            .map(|i| (0..self.0.cols()).map(|j| self.0.get(i, j).to_complex()).collect())
            .collect()
    }

    fn kron(&self, other: PyRef<'_, PyMatrix>) -> Self {
        PyMatrix(self.0.kron(&other.0))
    }

    fn dagger(&self) -> Self {
        PyMatrix(self.0.conjugate_transpose())
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.invert().py().map(PyMatrix)
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Exact M·M† = I.
    fn is_unitary(&self) -> bool {
        self.0.is_unitary(0.0)
    }

    fn to_json(&self) -> String {
        qtbraid_json(&self.0)
    }

    fn __matmul__(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        self.0.matmul(&other.0).py().map(PyMatrix)
    }

    fn __eq__(&self, other: PyRef<'_, PyMatrix>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Matrix {}x{}\n{}", self.0.rows(), self.0.cols(), self.0)
    }
}

// ---------------------------------------------------------------------------

/// Element of the n-fold tensor power of a group algebra.
#[pyclass(name = "TensorElement", module = "qtbraid_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyTensor(TensorElement);

#[pymethods]
impl PyTensor {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        TensorElement::from_json(s).py().map(PyTensor)
    }

    #[getter]
    fn legs(&self) -> usize {
        self.0.legs()
    }

    #[getter]
    fn spec(&self) -> PyGroupSpec {
        PyGroupSpec(self.0.spec().clone())
    }

    /// (exponent vectors per leg, coefficient) for every nonzero term.
    fn terms(&self) -> Vec<(Vec<Vec<u32>>, PyCyclotomic)> {
        self.0
            .terms()
            .iter()
            .map(|(k, c)| (k.iter().map(|b| b.0.clone()).collect(), PyCyclotomic(c.clone())))
            .collect()
    }

    fn to_json(&self) -> PyResult<String> {
        self.0.to_json().py()
    }

    fn __eq__(&self, other: PyRef<'_, PyTensor>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("TensorElement(legs={}, terms={})", self.0.legs(), self.0.terms().len())
    }
}

// ---------------------------------------------------------------------------

/// Invertible d²×d² matrix for braid-group representations.
#[pyclass(name = "BraidedRMatrix", module = "qtbraid_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyBraided(BraidedRMatrix);

#[pymethods]
impl PyBraided {
    /// Wraps an arbitrary invertible d²×d² matrix.
    #[new]
    #[pyo3(signature = (matrix, label = "external"))]
    fn new(matrix: PyRef<'_, PyMatrix>, label: &str) -> PyResult<Self> {
        BraidedRMatrix::external(matrix.0.clone(), label).py().map(PyBraided)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn matrix(&self) -> PyMatrix {
        PyMatrix(self.0.matrix().clone())
    }

    fn check_ybe(&self) -> bool {
        braidrep::check_braided_ybe(&self.0)
    }

    fn check_braid_relations(&self, strands: usize) -> bool {
        braidrep::check_braid_relations(strands, &self.0)
    }

    /// Generator i (1-based) on the given number of strands.
    fn generator(&self, i: usize, strands: usize) -> PyResult<PyMatrix> {
        braidrep::braid_generator(i, strands, &self.0).py().map(PyMatrix)
    }

    /// Matrix of a word such as "1,2,-1"; letters multiply as written.
    fn evaluate_word(&self, strands: usize, word: &str) -> PyResult<PyMatrix> {
        let w = BraidWord::parse(strands, word).py()?;
        braidrep::evaluate_braid_word(&w, &self.0).py().map(PyMatrix)
    }

    /// Exact Bell-basis checks: [(input, expected, holds)].
    fn bell_actions(&self) -> PyResult<Vec<(String, String, bool)>> {
        let out = quantum::verify_bell_actions(&self.0).py()?;
        Ok(out
            .iter()
            .map(|o| {
                let sign = if o.expected_sign < 0 { "-" } else { "" };
                (o.input.to_string(), format!("{sign}{}", o.expected), o.pass)
            })
            .collect())
    }
}

// ---------------------------------------------------------------------------

/// Pure n-qudit state with exact amplitudes.
#[pyclass(name = "StateVector", module = "qtbraid_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyState(StateVector);

#[pymethods]
impl PyState {
    #[new]
    fn new(d: usize, n: usize, amplitudes: Vec<ScalarArg<'_>>) -> PyResult<Self> {
        StateVector::new(d, n, amplitudes.iter().map(ScalarArg::value).collect())
            .py()
            .map(PyState)
    }

    /// "phi+", "psi-", "01", …
    #[staticmethod]
    fn from_label(label: &str) -> PyResult<Self> {
        StateVector::from_label(label).py().map(PyState)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        StateVector::from_json(s).py().map(PyState)
    }

    #[getter]
    fn amplitudes(&self) -> Vec<PyCyclotomic> {
        self.0.amplitudes().iter().cloned().map(PyCyclotomic).collect()
    }

    fn to_complex(&self) -> Vec<Complex64> {
        self.0.to_complex()
    }

    fn concurrence(&self) -> PyResult<f64> {
        quantum::concurrence(&self.0).py()
    }

    fn schmidt_rank(&self, cut: usize) -> PyResult<usize> {
        quantum::schmidt_rank(&self.0, cut).py()
    }

    /// Applies a gate to the listed qudits (first target most significant).
    fn apply(&self, gate: PyRef<'_, PyMatrix>, targets: Vec<usize>) -> PyResult<Self> {
        quantum::apply_gate(&gate.0, &self.0, &targets).py().map(PyState)
    }

    fn to_json(&self) -> String {
        qtbraid_json(&self.0)
    }

    fn __eq__(&self, other: PyRef<'_, PyState>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("StateVector({})", self.0)
    }
}

// ---------------------------------------------------------------------------

/// Universal R; `form` is "product" (product of phases) or "literal".
#[pyfunction]
#[pyo3(signature = (spec, form = "product"))]
fn universal_r(spec: PyRef<'_, PyGroupSpec>, form: &str) -> PyResult<PyTensor> {
    match form {
        "product" => Ok(PyTensor(groupalg::universal_r(&spec.0))),
        "literal" => Ok(PyTensor(groupalg::universal_r_literal(&spec.0))),
        _ => Err(PyValueError::new_err(format!("unknown form {form:?}"))),
    }
}

/// R′ = τ·Γ(R).
#[pyfunction]
fn braided_r(spec: PyRef<'_, PyGroupSpec>) -> PyBraided {
    PyBraided(braidrep::braided_r(&spec.0))
}

/// Image of a tensor under the regular representation.
#[pyfunction]
fn regular_image(t: PyRef<'_, PyTensor>) -> PyResult<PyMatrix> {
    linalg::regular_representation(t.0.spec())
        .image_of_tensor(&t.0)
        .py()
        .map(PyMatrix)
}

#[pyfunction]
fn flip_operator(d: usize) -> PyMatrix {
    PyMatrix(linalg::flip_operator(d))
}

#[pyfunction]
fn check_hopf_axioms(spec: PyRef<'_, PyGroupSpec>) -> bool {
    groupalg::check_hopf_axioms(&spec.0)
}

#[pyfunction]
fn check_quasi_cocommutative(r: PyRef<'_, PyTensor>) -> PyResult<bool> {
    groupalg::check_quasi_cocommutative(r.0.spec(), &r.0).py()
}

#[pyfunction]
fn check_quasitriangular(r: PyRef<'_, PyTensor>) -> PyResult<bool> {
    groupalg::check_quasitriangular(r.0.spec(), &r.0).py()
}

#[pyfunction]
fn check_algebraic_ybe(r: PyRef<'_, PyTensor>) -> PyResult<bool> {
    groupalg::check_algebraic_ybe(r.0.spec(), &r.0).py()
}

/// Module morphism and hexagon checks of C^R on regular modules.
#[pyfunction]
fn check_hexagon_regular(r: PyRef<'_, PyTensor>) -> PyResult<(bool, bool)> {
    let reg = braidrep::ModuleAction::regular(r.0.spec());
    let c = braidrep::c_r_map(&reg, &reg, &r.0).py()?;
    let morphism = braidrep::check_module_morphism(&c, &reg, &reg).py()?;
    let hexagon = braidrep::check_hexagon(&reg, &reg, &reg, &r.0).py()?;
    Ok((morphism, hexagon))
}

#[pyfunction]
fn bell_state(kind: &str) -> PyResult<PyState> {
    let k: BellKind = kind.parse().py()?;
    Ok(PyState(quantum::bell_state(k)))
}

#[pyfunction]
fn bell_matrix() -> PyMatrix {
    PyMatrix(quantum::bell_matrix())
}

#[pyfunction]
fn kauffman_lomonaco_r(a: ScalarArg<'_>, b: ScalarArg<'_>, c: ScalarArg<'_>, d: ScalarArg<'_>) -> PyResult<PyMatrix> {
    quantum::kauffman_lomonaco_r(&a.value(), &b.value(), &c.value(), &d.value())
        .py()
        .map(PyMatrix)
}

/// (entangled, concurrence) of R(ψ⊗ψ) with ψ = |0⟩+|1⟩.
#[pyfunction]
fn kl_entangling_test(a: ScalarArg<'_>, b: ScalarArg<'_>, c: ScalarArg<'_>, d: ScalarArg<'_>) -> PyResult<(bool, f64)> {
    quantum::kl_entangling_test(&a.value(), &b.value(), &c.value(), &d.value()).py()
}

#[pymodule]
fn qtbraid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCyclotomic>()?;
    m.add_class::<PyGroupSpec>()?;
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyTensor>()?;
    m.add_class::<PyBraided>()?;
    m.add_class::<PyState>()?;
    m.add_function(wrap_pyfunction!(universal_r, m)?)?;
    m.add_function(wrap_pyfunction!(braided_r, m)?)?;
    m.add_function(wrap_pyfunction!(regular_image, m)?)?;
    m.add_function(wrap_pyfunction!(flip_operator, m)?)?;
    m.add_function(wrap_pyfunction!(check_hopf_axioms, m)?)?;
    m.add_function(wrap_pyfunction!(check_quasi_cocommutative, m)?)?;
    m.add_function(wrap_pyfunction!(check_quasitriangular, m)?)?;
    m.add_function(wrap_pyfunction!(check_algebraic_ybe, m)?)?;
    m.add_function(wrap_pyfunction!(check_hexagon_regular, m)?)?;
    m.add_function(wrap_pyfunction!(bell_state, m)?)?;
    m.add_function(wrap_pyfunction!(bell_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(kauffman_lomonaco_r, m)?)?;
    m.add_function(wrap_pyfunction!(kl_entangling_test, m)?)?;
    Ok(())
}
