//! Python bindings: the main types and operations of the `monoideal` crate.
//!
//! The module mirrors the CLI surface: ideals parse from the same text and
//! JSON formats, primes come back as sorted lists of variable names, and
//! the sequence/depth machinery returns plain dictionaries.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use monoideal::budget::Budget;
use monoideal::depth;
use monoideal::error::Error;
use monoideal::format;
use monoideal::groebner;
use monoideal::primes;
use monoideal::ring::Monomial;
use monoideal::sequences;
use monoideal::transforms;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::OracleMismatch(_) | Error::NoDecomposition(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn budget() -> PyResult<Budget> {
    Budget::from_env().map_err(to_py_err)
}

/// A monomial ideal over a named ring, held in canonical minimal form.
#[pyclass(name = "MonomialIdeal", frozen, from_py_object)]
#[derive(Clone)]
struct PyMonomialIdeal {
    inner: monoideal::MonomialIdeal,
}

#[pymethods]
impl PyMonomialIdeal {
    /// Parse the line-oriented text format (`vars ...` / `gens ...`).
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyMonomialIdeal {
            inner: format::parse_ideal(text).map_err(to_py_err)?,
        })
    }

    /// Parse the JSON form `{"vars": [...], "gens": [[e1, ..., en], ...]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyMonomialIdeal {
            inner: format::ideal_from_json(&value).map_err(to_py_err)?,
        })
    }

    fn to_text(&self) -> String {
        format::write_ideal(&self.inner)
    }

    fn to_json(&self) -> String {
        format::ideal_to_json(&self.inner).to_string()
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.ring().names().to_vec()
    }

    /// Minimal generators as exponent vectors.
    #[getter]
    fn gens(&self) -> Vec<Vec<u64>> {
        self.inner
            .gens()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Membership test for a monomial given as an exponent vector.
    fn contains(&self, exponents: Vec<u64>) -> PyResult<bool> {
        if exponents.len() != self.inner.nvars() {
            return Err(PyValueError::new_err("exponent vector has wrong length"));
        }
        Ok(self.inner.contains(&Monomial::new(exponents)))
    }

    /// The quotient (I : c) for a monomial c given as an exponent vector.
    fn colon(&self, exponents: Vec<u64>) -> PyResult<Self> {
        if exponents.len() != self.inner.nvars() {
            return Err(PyValueError::new_err("exponent vector has wrong length"));
        }
        Ok(PyMonomialIdeal {
            inner: self
                .inner
                .colon(&Monomial::new(exponents))
                .map_err(to_py_err)?,
        })
    }

    /// The largest exponent of the variable over the generators.
    fn var_degree(&self, var: &str) -> PyResult<u64> {
        let v = self.inner.ring().index_or_err(var).map_err(to_py_err)?;
        self.inner.var_degree(v).map_err(to_py_err)
    }

    fn squarefree_part(&self) -> Self {
        PyMonomialIdeal {
            inner: self.inner.squarefree_part(),
        }
    }

    /// The ideal generated by the n-th powers of the generators.
    fn bracket_power(&self, n: u64) -> PyResult<Self> {
        Ok(PyMonomialIdeal {
            inner: self.inner.bracket_power(n).map_err(to_py_err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({})", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

fn prime_names(ideal: &monoideal::MonomialIdeal, p: &primes::MonomialPrime) -> Vec<String> {
    p.names(ideal.ring()).iter().map(|s| s.to_string()).collect()
}

/// Edge ideal of a cycle, path, or cycle-with-pendant-path.
#[pyfunction]
#[pyo3(signature = (kind, n, m = 0))]
fn graph_ideal(kind: &str, n: usize, m: usize) -> PyResult<PyMonomialIdeal> {
    let inner = match kind {
        "cycle" => depth::cycle_ideal(n),
        "path" => depth::path_ideal(n),
        "gnm" | "unicyclic" => depth::unicyclic_ideal(n, m),
        other => Err(Error::InvalidArgument(format!("unknown graph kind `{other}`"))),
    }
    .map_err(to_py_err)?;
    Ok(PyMonomialIdeal { inner })
}

/// Minimal primes as sorted lists of variable names.
#[pyfunction]
fn minimal_primes(ideal: &PyMonomialIdeal) -> PyResult<Vec<Vec<String>>> {
    Ok(primes::minimal_primes(&ideal.inner)
        .map_err(to_py_err)?
        .iter()
        .map(|p| prime_names(&ideal.inner, p))
        .collect())
}

/// Associated primes through the polarization.
#[pyfunction]
fn associated_primes(ideal: &PyMonomialIdeal) -> PyResult<Vec<Vec<String>>> {
    Ok(primes::associated_primes(&ideal.inner)
        .map_err(to_py_err)?
        .iter()
        .map(|p| prime_names(&ideal.inner, p))
        .collect())
}

/// Associated primes by the brute-force witness scan (independent oracle).
#[pyfunction]
fn associated_primes_bruteforce(ideal: &PyMonomialIdeal) -> PyResult<Vec<Vec<String>>> {
    Ok(
        primes::associated_primes_bruteforce(&ideal.inner, &budget()?)
            .map_err(to_py_err)?
            .iter()
            .map(|p| prime_names(&ideal.inner, p))
            .collect(),
    )
}

/// Star neighbors N*(w) of one variable.
#[pyfunction]
fn star_neighbors(ideal: &PyMonomialIdeal, var: &str) -> PyResult<Vec<String>> {
    let w = ideal.inner.ring().index_or_err(var).map_err(to_py_err)?;
    Ok(primes::star_neighbors(&ideal.inner, w)
        .iter()
        .map(|&z| ideal.inner.ring().name(z).to_string())
        .collect())
}

/// Decompose an embedded associated prime (a list of variable names) into a
/// minimal prime plus star-neighbor variables with witnesses.
#[pyfunction]
fn embedded_decomposition<'py>(
    py: Python<'py>,
    ideal: &PyMonomialIdeal,
    prime: Vec<String>,
) -> PyResult<Bound<'py, PyDict>> {
    let ring = ideal.inner.ring();
    let vars: Result<Vec<usize>, Error> =
        prime.iter().map(|n| ring.index_or_err(n)).collect();
    let q = primes::MonomialPrime::new(vars.map_err(to_py_err)?);
    let d = primes::embedded_decomposition(&ideal.inner, &q).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("min_prime", prime_names(&ideal.inner, &d.minimal_prime))?;
    let extras = PyList::empty(py);
    for e in &d.extras {
        let entry = PyDict::new(py);
        entry.set_item("z", ring.name(e.z))?;
        entry.set_item("witness", ring.name(e.witness))?;
        extras.append(entry)?;
    }
    out.set_item("extras", extras)?;
    Ok(out)
}

/// True when every variable reaches its maximal degree in every generator
/// it divides (no embedded primes then).
#[pyfunction]
fn has_no_embedded_hypothesis(ideal: &PyMonomialIdeal) -> bool {
    primes::has_no_embedded_hypothesis(&ideal.inner)
}

/// Whether the coefficient-1 sum of the named variables is regular on R/I.
#[pyfunction]
fn is_regular_linear_form(ideal: &PyMonomialIdeal, form: Vec<String>) -> PyResult<bool> {
    let f = format::parse_linear_form(ideal.inner.ring(), &form.join("+")).map_err(to_py_err)?;
    primes::is_regular_linear_form(&ideal.inner, &f).map_err(to_py_err)
}

/// ini(I, f) for a linear sum f like "x1+x5+x2". Engines: "transform",
/// "buchberger", or "both" (cross-checked).
#[pyfunction]
#[pyo3(signature = (ideal, form, engine = "both", order = None))]
fn initial_ideal(
    ideal: &PyMonomialIdeal,
    form: &str,
    engine: &str,
    order: Option<&str>,
) -> PyResult<PyMonomialIdeal> {
    let ring = ideal.inner.ring();
    let f = format::parse_linear_form(ring, form).map_err(to_py_err)?;
    let order = match order {
        Some(spec) => format::parse_term_order(ring, spec).map_err(to_py_err)?,
        None => {
            let names: Vec<&str> = f.vars().iter().map(|&v| ring.name(v)).collect();
            format::parse_term_order(ring, &names.join(",")).map_err(to_py_err)?
        }
    };
    let budget = budget()?;
    let closed = |i: &monoideal::MonomialIdeal| match *f.vars() {
        [a, b] => transforms::ini_binomial(i, a, b),
        [a, b, c] => transforms::ini_trinomial(i, a, b, c),
        _ => Err(Error::PreconditionViolated(
            "no closed form for 4 or more summands".into(),
        )),
    };
    let inner = match engine {
        "buchberger" => {
            groebner::initial_ideal(&ideal.inner, Some(&f), &order, &budget).map_err(to_py_err)?
        }
        "transform" => closed(&ideal.inner).map_err(to_py_err)?,
        "both" => {
            let oracle = groebner::initial_ideal(&ideal.inner, Some(&f), &order, &budget)
                .map_err(to_py_err)?;
            match closed(&ideal.inner) {
                Ok(t) if t != oracle => {
                    return Err(PyRuntimeError::new_err(format!(
                        "engines disagree: transform {t} != buchberger {oracle}"
                    )))
                }
                _ => {}
            }
            oracle
        }
        other => return Err(PyValueError::new_err(format!("unknown engine `{other}`"))),
    };
    Ok(PyMonomialIdeal { inner })
}

fn plan_for(kind: &str, size: usize) -> Result<sequences::SequencePlan, Error> {
    match kind {
        "cycle" => sequences::cycle_sequence(size),
        "gnm2" => sequences::unicyclic_sequence(size),
        other => Err(Error::InvalidArgument(format!("unknown plan kind `{other}`"))),
    }
}

/// The sequence plan for a cycle (`kind="cycle"`, size = vertex count) or a
/// pendant-path graph (`kind="gnm2"`, size = t), as a JSON string.
#[pyfunction]
fn sequence_plan(kind: &str, size: usize) -> PyResult<String> {
    Ok(plan_for(kind, size).map_err(to_py_err)?.to_json().to_string())
}

/// Verify a plan (JSON string) on an ideal. Returns a dict with the
/// verified length and one record per step.
#[pyfunction]
#[pyo3(signature = (ideal, plan_json, engine = "both"))]
fn verify_initially_regular<'py>(
    py: Python<'py>,
    ideal: &PyMonomialIdeal,
    plan_json: &str,
    engine: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let value: serde_json::Value =
        serde_json::from_str(plan_json).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let plan = sequences::SequencePlan::from_json(&value).map_err(to_py_err)?;
    let engine: sequences::Engine = engine.parse().map_err(to_py_err)?;
    let order = plan.default_order();
    let trace =
        sequences::verify_initially_regular(&ideal.inner, &plan, engine, &order, &budget()?)
            .map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("verified_length", trace.verified_length)?;
    let steps = PyList::empty(py);
    for step in &trace.steps {
        let entry = PyDict::new(py);
        entry.set_item("form", step.form.display(plan.ring()).to_string())?;
        entry.set_item("regular", step.regular)?;
        entry.set_item("ass_count", step.ass_count)?;
        steps.append(entry)?;
    }
    out.set_item("steps", steps)?;
    Ok(out)
}

/// Depth of R/I by the homological oracle; returns (depth, pd).
#[pyfunction]
fn depth_oracle(ideal: &PyMonomialIdeal) -> PyResult<(usize, usize)> {
    let r = depth::depth_oracle(&ideal.inner, &budget()?).map_err(to_py_err)?;
    Ok((r.value, r.pd.unwrap_or(0)))
}

/// Closed-form depth of the cycle edge ideal: ceil((n-1)/3).
#[pyfunction]
fn depth_cycle(n: usize) -> PyResult<usize> {
    depth::depth_cycle_formula(n).map_err(to_py_err)
}

/// Closed-form depth of the path edge ideal: ceil(p/3).
#[pyfunction]
fn depth_path(p: usize) -> PyResult<usize> {
    depth::depth_path_formula(p).map_err(to_py_err)
}

/// Closed-form depth of the cycle-with-pendant-path edge ideal.
#[pyfunction]
fn depth_unicyclic(n: usize, m: usize) -> PyResult<usize> {
    depth::depth_unicyclic_formula(n, m).map_err(to_py_err)
}

#[pymodule]
fn monoideal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonomialIdeal>()?;
    m.add_function(wrap_pyfunction!(graph_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_primes, m)?)?;
    m.add_function(wrap_pyfunction!(associated_primes, m)?)?;
    m.add_function(wrap_pyfunction!(associated_primes_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(star_neighbors, m)?)?;
    m.add_function(wrap_pyfunction!(embedded_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(has_no_embedded_hypothesis, m)?)?;
    m.add_function(wrap_pyfunction!(is_regular_linear_form, m)?)?;
    m.add_function(wrap_pyfunction!(initial_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_plan, m)?)?;
    m.add_function(wrap_pyfunction!(verify_initially_regular, m)?)?;
    m.add_function(wrap_pyfunction!(depth_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(depth_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(depth_path, m)?)?;
    m.add_function(wrap_pyfunction!(depth_unicyclic, m)?)?;
    Ok(())
}
