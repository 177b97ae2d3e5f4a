//! Python bindings for `oppsched`.
//!
//! Combiners and methods are passed as their lowercase names (`"sc"`,
//! `"mrc"`, `"oc"`). Invalid arguments raise `ValueError`; numerical
//! failures raise `ArithmeticError`.

use ::oppsched as core;
use core::analytic;
use core::simulator::{self, CombinerKind};
use core::throughput;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

fn to_py(err: core::Error) -> PyErr {
    match err {
        core::Error::InvalidConfig(_) | core::Error::DimensionMismatch(_) | core::Error::Domain { .. } => {
            PyValueError::new_err(err.to_string())
        }
        _ => PyArithmeticError::new_err(err.to_string()),
    }
}

fn combiner(name: &str) -> PyResult<CombinerKind> {
    name.parse::<CombinerKind>().map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyclass(name = "SystemConfig", module = "oppsched_py", frozen)]
struct PySystemConfig(simulator::SystemConfig);

#[pymethods]
impl PySystemConfig {
    #[new]
    #[pyo3(signature = (users, rho, transmit_antennas = 4, receive_antennas = 2))]
    fn new(users: usize, rho: f64, transmit_antennas: usize, receive_antennas: usize) -> PyResult<Self> {
        simulator::SystemConfig::new(transmit_antennas, receive_antennas, users, rho)
            .map(Self)
            .map_err(to_py)
    }

    #[getter]
    fn users(&self) -> usize {
        self.0.users()
    }

    #[getter]
    fn rho(&self) -> f64 {
        self.0.rho()
    }

    #[getter]
    fn transmit_antennas(&self) -> usize {
        self.0.transmit_antennas()
    }

    #[getter]
    fn receive_antennas(&self) -> usize {
        self.0.receive_antennas()
    }

    fn __repr__(&self) -> String {
        format!(
            "SystemConfig(users={}, rho={}, transmit_antennas={}, receive_antennas={})",
            self.0.users(),
            self.0.rho(),
            self.0.transmit_antennas(),
            self.0.receive_antennas()
        )
    }
}

/// Normalizing factors of the maximum of `k` draws.
#[pyclass(name = "NormalizingFactors", module = "oppsched_py", frozen)]
struct PyFactors(analytic::NormalizingFactors);

#[pymethods]
impl PyFactors {
    #[getter]
    fn b_k(&self) -> f64 {
        self.0.b_k
    }

    #[getter]
    fn a_k(&self) -> f64 {
        self.0.a_k
    }

    #[getter]
    fn k(&self) -> u64 {
        self.0.k
    }

    #[getter]
    fn method(&self) -> &'static str {
        self.0.method.name()
    }

    fn __repr__(&self) -> String {
        format!(
            "NormalizingFactors(k={}, b_k={}, a_k={}, method='{}')",
            self.0.k,
            self.0.b_k,
            self.0.a_k,
            self.0.method.name()
        )
    }
}

#[pyclass(name = "ThroughputEstimate", module = "oppsched_py", frozen)]
struct PyEstimate(throughput::ThroughputEstimate);

#[pymethods]
impl PyEstimate {
    #[getter]
    fn value(&self) -> f64 {
        self.0.value
    }

    #[getter]
    fn stderr(&self) -> f64 {
        self.0.stderr
    }

    #[getter]
    fn k(&self) -> u64 {
        self.0.k
    }

    #[getter]
    fn method(&self) -> &'static str {
        self.0.method.name()
    }

    #[getter]
    fn truncated_at(&self) -> Option<f64> {
        self.0.truncated_at
    }

    #[getter]
    fn quadrature_error(&self) -> Option<f64> {
        self.0.quadrature_error
    }

    fn __repr__(&self) -> String {
        format!(
            "ThroughputEstimate(method='{}', k={}, value={}, stderr={})",
            self.0.method.name(),
            self.0.k,
            self.0.value,
            self.0.stderr
        )
    }
}

/// Closed-form effective-SINR law of one combiner at 4 transmit and 2
/// receive antennas.
#[pyclass(name = "SinrModel", module = "oppsched_py", frozen)]
struct PySinrModel(analytic::SinrModel);

#[pymethods]
impl PySinrModel {
    #[new]
    fn new(combiner_name: &str, rho: f64) -> PyResult<Self> {
        analytic::SinrModel::new(combiner(combiner_name)?, rho)
            .map(Self)
            .map_err(to_py)
    }

    #[getter]
    fn combiner(&self) -> &'static str {
        self.0.combiner().name()
    }

    #[getter]
    fn rho(&self) -> f64 {
        self.0.rho()
    }

    fn cdf(&self, x: f64) -> PyResult<f64> {
        self.0.cdf(x).map_err(to_py)
    }

    fn sf(&self, x: f64) -> PyResult<f64> {
        self.0.sf(x).map_err(to_py)
    }

    fn pdf(&self, x: f64) -> PyResult<f64> {
        self.0.pdf(x).map_err(to_py)
    }

    fn hazard_limit(&self, x: f64) -> PyResult<f64> {
        self.0.hazard_limit(x).map_err(to_py)
    }

    fn quantile(&self, p: f64) -> PyResult<f64> {
        self.0.quantile(p).map_err(to_py)
    }

    fn solve_factors(&self, k: u64) -> PyResult<PyFactors> {
        self.0.solve_factors(k).map(PyFactors).map_err(to_py)
    }

    #[pyo3(signature = (k, beams = 4))]
    fn exact_throughput(&self, k: u64, beams: usize) -> PyResult<PyEstimate> {
        throughput::exact_throughput(&self.0, k, beams).map(PyEstimate).map_err(to_py)
    }

    fn scaling_ratio(&self, k: u64) -> PyResult<f64> {
        throughput::scaling_ratio(&self.0, k).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("SinrModel('{}', rho={})", self.0.combiner().name(), self.0.rho())
    }
}

/// Monte Carlo average sum-rate over `trials` scheduling slots.
#[pyfunction]
#[pyo3(signature = (config, combiner_name, trials, seed = 1))]
fn simulate_sum_rate(
    py: Python<'_>,
    config: &PySystemConfig,
    combiner_name: &str,
    trials: usize,
    seed: u64,
) -> PyResult<PyEstimate> {
    let kind = combiner(combiner_name)?;
    let cfg = config.0;
    py.detach(|| simulator::simulate_sum_rate(&cfg, kind, trials, seed))
        .map(PyEstimate)
        .map_err(to_py)
}

/// Effective SINR samples on `beam` (0-based) for one user per slot.
#[pyfunction]
#[pyo3(signature = (config, combiner_name, samples, beam = 0, seed = 1))]
fn sample_effective_sinrs(
    py: Python<'_>,
    config: &PySystemConfig,
    combiner_name: &str,
    samples: usize,
    beam: usize,
    seed: u64,
) -> PyResult<Vec<f64>> {
    let kind = combiner(combiner_name)?;
    let cfg = config.0;
    py.detach(|| simulator::sample_effective_sinrs(&cfg, &[kind], beam, samples, seed))
        .map(|mut v| v.remove(0))
        .map_err(to_py)
}

#[pyfunction]
fn approx_factors(combiner_name: &str, k: u64) -> PyResult<PyFactors> {
    analytic::approx_factors(combiner(combiner_name)?, k)
        .map(PyFactors)
        .map_err(to_py)
}

#[pyfunction]
fn asymptotic_throughput(factors: &PyFactors) -> PyResult<PyEstimate> {
    throughput::asymptotic_throughput(&factors.0).map(PyEstimate).map_err(to_py)
}

#[pyfunction]
fn sir_limit_cdf(combiner_name: &str, x: f64) -> PyResult<f64> {
    analytic::sir_limit_cdf(combiner(combiner_name)?, x).map_err(to_py)
}

#[pyfunction]
fn rho1_scaling_form(combiner_name: &str, k: u64) -> PyResult<f64> {
    throughput::rho1_scaling_form(combiner(combiner_name)?, k).map_err(to_py)
}

#[pymodule]
fn oppsched_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySystemConfig>()?;
    m.add_class::<PySinrModel>()?;
    m.add_class::<PyFactors>()?;
    m.add_class::<PyEstimate>()?;
    m.add_function(wrap_pyfunction!(simulate_sum_rate, m)?)?;
    m.add_function(wrap_pyfunction!(sample_effective_sinrs, m)?)?;
    m.add_function(wrap_pyfunction!(approx_factors, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_throughput, m)?)?;
    m.add_function(wrap_pyfunction!(sir_limit_cdf, m)?)?;
    m.add_function(wrap_pyfunction!(rho1_scaling_form, m)?)?;
    m.add("COMBINERS", vec!["sc", "mrc", "oc"])?;
    Ok(())
}
