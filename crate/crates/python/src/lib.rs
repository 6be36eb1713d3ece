//! Python module `schur_ratio_py`. Exact values cross the boundary as `int` and
//! `fractions.Fraction`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use schur_ratio::exact::{self, IdentityRanges, RatioRecord};
use schur_ratio::region::{self, RootClassification, SamplerConfig};
use schur_ratio::{Error, ExactRational};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Domain { .. } | Error::Precision(_) => PyValueError::new_err(e.to_string()),
        Error::Invariant { .. } => PyRuntimeError::new_err(e.to_string()),
    }
}

trait OrPyErr<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPyErr<T> for schur_ratio::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py_err)
    }
}

/// Monic polynomial `x^d + a_1 x^{d-1} + ... + a_d`.
#[pyclass(name = "MonicPolynomial", frozen)]
pub struct PyMonicPolynomial {
    inner: region::MonicPolynomial,
}

#[pymethods]
impl PyMonicPolynomial {
    /// `coefficients` are `a_1, ..., a_d` as ints or Fractions.
    #[new]
    fn new(coefficients: Vec<ExactRational>) -> PyResult<Self> {
        Ok(PyMonicPolynomial { inner: region::MonicPolynomial::new(coefficients).py()? })
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn coefficients(&self) -> Vec<ExactRational> {
        self.inner.coefficients().to_vec()
    }

    /// Every root strictly inside the unit disk.
    fn is_stable(&self) -> bool {
        region::schur_cohn_stable(&self.inner)
    }

    /// `("unstable", None)`, `("degenerate", None)` or `("classified", s)` with `s` the
    /// number of complex-conjugate root pairs.
    fn classify(&self) -> (&'static str, Option<usize>) {
        match region::classify(&self.inner) {
            RootClassification::Unstable => ("unstable", None),
            RootClassification::Degenerate(_) => ("degenerate", None),
            RootClassification::Classified { s, .. } => ("classified", Some(s)),
        }
    }

    fn __repr__(&self) -> String {
        let c: Vec<String> = self.inner.coefficients().iter().map(|a| a.to_string()).collect();
        format!("MonicPolynomial([{}])", c.join(", "))
    }
}

/// Exact volumes and probabilities at one degree.
#[pyclass(name = "RatioRecord", frozen, get_all)]
pub struct PyRatioRecord {
    d: u32,
    ratio: BigInt,
    v_total: ExactRational,
    v0: ExactRational,
    v1: ExactRational,
    p0: ExactRational,
    p1: ExactRational,
}

impl From<RatioRecord> for PyRatioRecord {
    fn from(r: RatioRecord) -> Self {
        PyRatioRecord { d: r.d, ratio: r.ratio, v_total: r.v_total, v0: r.v0, v1: r.v1, p0: r.p0, p1: r.p1 }
    }
}

#[pymethods]
impl PyRatioRecord {
    fn __repr__(&self) -> String {
        format!("RatioRecord(d={}, ratio={}, p0={}, p1={})", self.d, self.ratio, self.p0, self.p1)
    }
}

/// `r_d = v_d^(1) / v_d^(0)` from the closed form.
#[pyfunction]
fn ratio(d: u32) -> PyResult<BigInt> {
    exact::ratio_closed_form(d).py()
}

/// `r_d` from every exact route; the sum and integral routes are `None` below `d = 2`.
#[pyfunction]
fn ratio_routes<'py>(py: Python<'py>, d: u32) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("closed_form", exact::ratio_closed_form(d).py()?)?;
    out.set_item("recurrence", exact::ratio_recurrence_seq(d).py()?[d as usize].clone())?;
    out.set_item("series", exact::ratio_gf_coefficients(d).py()?[d as usize].clone())?;
    let sum = if d >= 2 { Some(exact::ratio_sum_form(d).py()?) } else { None };
    out.set_item("sum_form", sum)?;
    let integral = if d >= 2 { Some(exact::v1_exact_via_integral(d).py()? / exact::v0_exact(d)) } else { None };
    out.set_item("integral", integral)?;
    Ok(out)
}

/// Total volume `v_d` of the coefficient region.
#[pyfunction]
fn fam_volume(d: u32) -> PyResult<ExactRational> {
    exact::fam_volume(d).py()
}

/// `v_d^(0)`, the volume of polynomials with only real roots.
#[pyfunction]
fn v0(d: u32) -> ExactRational {
    exact::v0_exact(d)
}

/// `v_d^(1)` assembled from the double-integral expansion.
#[pyfunction]
fn v1(d: u32) -> PyResult<ExactRational> {
    exact::v1_exact_via_integral(d).py()
}

/// Legendre polynomial `P_d(x)` at a rational point.
#[pyfunction]
fn legendre(d: u32, x: ExactRational) -> PyResult<ExactRational> {
    exact::legendre(d, &x).py()
}

/// Records for `d = 0..=d_max`.
#[pyfunction]
fn records(d_max: u32) -> PyResult<Vec<PyRatioRecord>> {
    Ok(exact::probability_records(d_max).py()?.into_iter().map(Into::into).collect())
}

/// Generating-function coefficients `r_0, ..., r_n`.
#[pyfunction]
fn series(n: u32) -> PyResult<Vec<BigInt>> {
    exact::ratio_gf_coefficients(n).py()
}

/// `r_d / L(d) - 1` at the requested precision, rounded to float.
#[pyfunction]
#[pyo3(signature = (d, precision_bits = 128))]
fn asymptotic_residual(d: u32, precision_bits: usize) -> PyResult<f64> {
    Ok(exact::asymptotic_residual(d, precision_bits).py()?.to_f64())
}

/// `[(name, cases, failures)]` for each identity family.
#[pyfunction]
#[pyo3(signature = (max_a = 60, max_m = 40))]
fn identities(max_a: u64, max_m: u64) -> Vec<(String, usize, usize)> {
    let ranges = IdentityRanges { max_a, max_mn: max_m, ..IdentityRanges::default() };
    exact::run_identity_suite(&ranges).into_iter().map(|o| (o.name.to_string(), o.cases, o.failures.len())).collect()
}

/// Monte-Carlo estimate of `v_d^(s)` for every `s`; deterministic in `seed`.
#[pyfunction]
#[pyo3(signature = (d, samples, seed = region::sampler::DEFAULT_SEED, threads = None))]
fn estimate_volumes<'py>(
    py: Python<'py>,
    d: usize,
    samples: u64,
    seed: u64,
    threads: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let cfg = SamplerConfig { seed, threads, ..SamplerConfig::new(d, samples) };
    let est = py.detach(|| region::estimate_volumes(&cfg)).py()?;
    let out = PyDict::new(py);
    out.set_item("hits", &est.hits)?;
    out.set_item("degenerate", est.degenerate)?;
    out.set_item("misses", est.misses)?;
    out.set_item("box_volume", &est.box_volume)?;
    out.set_item("estimates", &est.estimates)?;
    out.set_item("std_errors", &est.std_errors)?;
    Ok(out)
}

#[pymodule]
pub fn schur_ratio_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonicPolynomial>()?;
    m.add_class::<PyRatioRecord>()?;
    m.add_function(wrap_pyfunction!(ratio, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_routes, m)?)?;
    m.add_function(wrap_pyfunction!(fam_volume, m)?)?;
    m.add_function(wrap_pyfunction!(v0, m)?)?;
    m.add_function(wrap_pyfunction!(v1, m)?)?;
    m.add_function(wrap_pyfunction!(legendre, m)?)?;
    m.add_function(wrap_pyfunction!(records, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_residual, m)?)?;
    m.add_function(wrap_pyfunction!(identities, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_volumes, m)?)?;
    Ok(())
}
