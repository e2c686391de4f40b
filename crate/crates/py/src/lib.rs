//! Python bindings. Rationals cross the boundary as strings `"p/q"`, exponent
//! vectors as lists of ints.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use multideal::asymptotic::{asymptotic_multiplier_ideal, GradedSystem};
use multideal::{self as md, Error, Rational};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NotStabilized { .. } | Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn rational(text: &str) -> PyResult<Rational> {
    md::parse_rational(text).map_err(to_py)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

/// A monomial ideal in `n` variables, stored by its minimal generators.
#[pyclass(name = "MonomialIdeal", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyIdeal(md::MonomialIdeal);

#[pymethods]
impl PyIdeal {
    /// Parses `"(x^2, y^3)"` or `"{[2,0],[0,3]}"`.
    #[new]
    #[pyo3(signature = (text, n=None))]
    fn new(text: &str, n: Option<usize>) -> PyResult<Self> {
        md::parse_ideal(text, n).map(PyIdeal).map_err(to_py)
    }

    #[staticmethod]
    fn from_generators(n: usize, generators: Vec<Vec<u32>>) -> PyResult<Self> {
        let gens = generators.into_iter().map(md::ExponentVector::new).collect();
        md::MonomialIdeal::new(n, gens).map(PyIdeal).map_err(to_py)
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.0.ambient_dim()
    }

    #[getter]
    fn generators(&self) -> Vec<Vec<u32>> {
        self.0.generators().iter().map(|g| g.entries().to_vec()).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({:?})", self.0.to_string())
    }

    fn __contains__(&self, monomial: Vec<u32>) -> PyResult<bool> {
        self.0.contains_monomial(&md::ExponentVector::new(monomial)).map_err(to_py)
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    /// `other ⊆ self`.
    fn contains_ideal(&self, other: &PyIdeal) -> PyResult<bool> {
        self.0.contains_ideal(&other.0).map_err(to_py)
    }

    fn __mul__(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        self.0.multiply(&other.0).map(PyIdeal).map_err(to_py)
    }

    fn __add__(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        self.0.sum(&other.0).map(PyIdeal).map_err(to_py)
    }

    fn __and__(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        self.0.intersect(&other.0).map(PyIdeal).map_err(to_py)
    }

    fn __pow__(&self, k: u32, _modulo: Option<u32>) -> PyIdeal {
        PyIdeal(self.0.power(k))
    }

    fn symbolic_power(&self, k: u32) -> PyResult<PyIdeal> {
        self.0.symbolic_power(k).map(PyIdeal).map_err(to_py)
    }

    fn integral_closure(&self) -> PyResult<PyIdeal> {
        md::integral_closure(&self.0).map(PyIdeal).map_err(to_py)
    }

    /// `J(self^c)`.
    fn multiplier(&self, c: &str) -> PyResult<PyIdeal> {
        md::multiplier_ideal(&self.0, &rational(c)?).map(PyIdeal).map_err(to_py)
    }

    /// Log canonical threshold, `"inf"` for the unit ideal.
    fn lct(&self) -> PyResult<String> {
        md::lct(&self.0).map(|t| t.to_string()).map_err(to_py)
    }

    /// `(xi, witness)` for each jumping number in `(0, bound]`.
    fn jumping_numbers(&self, bound: &str) -> PyResult<Vec<(String, Vec<u32>)>> {
        let spectrum = md::jumping_numbers(&self.0, &rational(bound)?).map_err(to_py)?;
        Ok(spectrum
            .jumps
            .iter()
            .map(|j| (md::format_rational(&j.xi), j.witness.entries().to_vec()))
            .collect())
    }

    /// Facets `(normal, offset)` of the Newton polyhedron, meaning
    /// `<normal, x> >= offset`.
    fn newton_facets(&self) -> PyResult<Vec<(Vec<i64>, i64)>> {
        let p = md::build(&self.0).map_err(to_py)?;
        Ok(p.facets().iter().map(|f| (f.normal.clone(), f.offset)).collect())
    }
}

/// Outcome of a theorem check.
#[pyclass(name = "Verdict", frozen)]
struct PyVerdict(md::Verdict);

#[pymethods]
impl PyVerdict {
    #[getter]
    fn name(&self) -> String {
        self.0.name.clone()
    }

    #[getter]
    fn holds(&self) -> bool {
        self.0.holds
    }

    #[getter]
    fn stage(&self) -> String {
        self.0.stage.clone()
    }

    /// A monomial (list of ints) or a rational string in `lhs \ rhs`.
    #[getter]
    fn counterexample(&self) -> Option<String> {
        self.0.counterexample.as_ref().map(json)
    }

    fn to_json(&self) -> String {
        json(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Verdict({}, holds={})", self.0.name, self.0.holds)
    }
}

fn verdict(v: md::Result<md::Verdict>) -> PyResult<PyVerdict> {
    v.map(PyVerdict).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (text, n=None))]
fn parse_ideal(text: &str, n: Option<usize>) -> PyResult<PyIdeal> {
    PyIdeal::new(text, n)
}

#[pyfunction]
fn multiplier_ideal(ideal: &PyIdeal, c: &str) -> PyResult<PyIdeal> {
    ideal.multiplier(c)
}

/// `J(a1^c1 ··· ak^ck)` from `[(ideal, "p/q"), ...]`.
#[pyfunction]
fn mixed_multiplier_ideal(terms: Vec<(PyIdeal, String)>) -> PyResult<PyIdeal> {
    let terms = terms
        .into_iter()
        .map(|(i, c)| Ok((i.0, rational(&c)?)))
        .collect::<PyResult<Vec<_>>>()?;
    md::mixed_multiplier_ideal(&terms).map(PyIdeal).map_err(to_py)
}

#[pyfunction]
fn lct(ideal: &PyIdeal) -> PyResult<String> {
    ideal.lct()
}

#[pyfunction]
fn jumping_numbers(ideal: &PyIdeal, bound: &str) -> PyResult<Vec<(String, Vec<u32>)>> {
    ideal.jumping_numbers(bound)
}

#[pyfunction]
fn jumping_length(monomial: Vec<u32>) -> PyResult<usize> {
    md::jumping_length(&md::ExponentVector::new(monomial)).map_err(to_py)
}

/// `J(a_•^c)` for `kind` in `"powers"`, `"symbolic"` (data: an ideal) or
/// `"weight"` (data: a list of rational strings). Returns the ideal and
/// the index at which it stabilized.
#[pyfunction]
#[pyo3(signature = (kind, data, c, p_max=md::DEFAULT_P_MAX))]
fn asymptotic(kind: &str, data: &Bound<'_, PyAny>, c: &str, p_max: u64) -> PyResult<(PyIdeal, u64)> {
    let system = match kind {
        "powers" => GradedSystem::powers(data.extract::<PyIdeal>()?.0),
        "symbolic" => GradedSystem::symbolic(data.extract::<PyIdeal>()?.0),
        "weight" => {
            let weights = data
                .extract::<Vec<String>>()?
                .iter()
                .map(|w| rational(w))
                .collect::<PyResult<Vec<_>>>()?;
            GradedSystem::weighted(weights)
        }
        _ => return Err(PyValueError::new_err(format!("unknown system kind {kind:?}"))),
    }
    .map_err(to_py)?;
    let a = asymptotic_multiplier_ideal(&system, &rational(c)?, p_max).map_err(to_py)?;
    Ok((PyIdeal(a.ideal), a.p_used))
}

#[pyfunction]
fn check_skoda_i(b: &PyIdeal, m: u64) -> PyResult<PyVerdict> {
    verdict(md::check_skoda_i(&b.0, m))
}

#[pyfunction]
fn check_briancon_skoda(b: &PyIdeal, m: u64) -> PyResult<PyVerdict> {
    verdict(md::check_briancon_skoda(&b.0, m))
}

#[pyfunction]
#[pyo3(signature = (a, b, c, d, m=None))]
fn check_subadditivity(a: &PyIdeal, b: &PyIdeal, c: &str, d: &str, m: Option<u64>) -> PyResult<PyVerdict> {
    verdict(md::check_subadditivity(&a.0, &b.0, &rational(c)?, &rational(d)?, m))
}

#[pyfunction]
fn check_jump_lemma(a: &PyIdeal, b: &PyIdeal, m: u64) -> PyResult<PyVerdict> {
    verdict(md::check_jump_lemma(&a.0, &b.0, m))
}

#[pyfunction]
#[pyo3(signature = (a, window="1"))]
fn check_periodicity(a: &PyIdeal, window: &str) -> PyResult<PyVerdict> {
    verdict(md::check_periodicity(&a.0, &rational(window)?))
}

#[pyfunction]
fn check_symbolic_power(q: &PyIdeal, m: u32) -> PyResult<PyVerdict> {
    verdict(md::symbolic_power_theorem_check(&q.0, m))
}

/// Runs the randomized theorem suite; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (seed=42, cases=100, dims=vec![2, 3]))]
fn run_suite(seed: u64, cases: usize, dims: Vec<usize>) -> PyResult<String> {
    let config = md::SuiteConfig {
        seed,
        cases,
        dims,
        ..md::SuiteConfig::default()
    };
    md::run_suite(&config).map(|r| json(&r)).map_err(to_py)
}

#[pymodule]
fn multideal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(parse_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(multiplier_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(mixed_multiplier_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(lct, m)?)?;
    m.add_function(wrap_pyfunction!(jumping_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(jumping_length, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(check_skoda_i, m)?)?;
    m.add_function(wrap_pyfunction!(check_briancon_skoda, m)?)?;
    m.add_function(wrap_pyfunction!(check_subadditivity, m)?)?;
    m.add_function(wrap_pyfunction!(check_jump_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(check_periodicity, m)?)?;
    m.add_function(wrap_pyfunction!(check_symbolic_power, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
