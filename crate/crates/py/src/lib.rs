// Clippy sees a same-type PyErr conversion inside the #[pyfunction]
// expansion of pyo3 0.22; the lint does not apply to our code.
#![allow(clippy::useless_conversion)]

//! Python bindings: the chain, the samplers and the exact coefficient
//! engine, driven from an in-process module. Randomized functions take an
//! explicit (seed, stream) pair and are reproducible.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use splitmerge_core::character::{a_q_coefficients, format_rational, tau_q_class_function};
use splitmerge_core::partition::Partition;
use splitmerge_core::pd::pd1_sample;
use splitmerge_core::perm::{haar_sample, sample_px, shifted_step_via_group};
use splitmerge_core::rng::stream_rng;
use splitmerge_core::simplex::MassPartition as CoreMassPartition;
use splitmerge_core::CoreError;

fn to_py_err(e: CoreError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A sorted finite-support point of the simplex.
#[pyclass]
#[derive(Clone)]
struct MassPartition {
    inner: CoreMassPartition,
}

#[pymethods]
impl MassPartition {
    /// Sort, drop zeros and renormalize a mass vector summing to 1.
    #[new]
    fn new(masses: Vec<f64>) -> PyResult<Self> {
        Ok(Self {
            inner: CoreMassPartition::reorder(&masses).map_err(to_py_err)?,
        })
    }

    /// The one-part state (1.0).
    #[staticmethod]
    fn point_mass() -> Self {
        Self {
            inner: CoreMassPartition::point_mass(),
        }
    }

    fn parts(&self) -> Vec<f64> {
        self.inner.parts().to_vec()
    }

    fn sum_squares(&self) -> f64 {
        self.inner.sum_squares()
    }

    fn largest(&self) -> f64 {
        self.inner.largest()
    }

    fn num_parts_above(&self, eps: f64) -> usize {
        self.inner.num_parts_above(eps)
    }

    /// One split-merge step.
    fn apply_t(&self, seed: u64, stream: u64) -> Self {
        let mut rng = stream_rng(seed, stream);
        Self {
            inner: self.inner.apply_t(&mut rng),
        }
    }

    /// State after q half steps (identity or split-merge, fair coin each).
    fn trajectory(&self, q: u32, seed: u64, stream: u64) -> Self {
        let mut rng = stream_rng(seed, stream);
        Self {
            inner: self.inner.trajectory(q, &mut rng),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("MassPartition({:?})", self.inner.parts())
    }
}

/// One PD(1) sample by stick breaking (decreasing sticks, residual below
/// `tol` discarded).
#[pyfunction]
#[pyo3(signature = (seed, stream, tol = 1e-8))]
fn pd1(seed: u64, stream: u64, tol: f64) -> PyResult<MassPartition> {
    let mut rng = stream_rng(seed, stream);
    Ok(MassPartition {
        inner: pd1_sample(&mut rng, tol).map_err(to_py_err)?,
    })
}

/// Cycle lengths of a uniform random permutation of degree n, non-increasing.
#[pyfunction]
fn haar_cycle_lengths(n: u32, seed: u64, stream: u64) -> PyResult<Vec<usize>> {
    let mut rng = stream_rng(seed, stream);
    Ok(haar_sample(n, &mut rng)
        .map_err(to_py_err)?
        .cycle_profile()
        .lengths)
}

/// Cycle lengths of one draw of the labelled insertion process attached to
/// `x`, at degree n.
#[pyfunction]
fn insertion_process_cycle_lengths(
    x: &MassPartition,
    n: u32,
    seed: u64,
    stream: u64,
) -> PyResult<Vec<usize>> {
    let mut rng = stream_rng(seed, stream);
    Ok(sample_px(&x.inner, n, &mut rng)
        .map_err(to_py_err)?
        .permutation
        .cycle_profile()
        .lengths)
}

/// The split-merge step realized on the group side: cycle fractions of
/// w·(1 2) with w drawn from the insertion process at degree n.
#[pyfunction]
fn transposition_shift(
    x: &MassPartition,
    n: u32,
    seed: u64,
    stream: u64,
) -> PyResult<MassPartition> {
    let mut rng = stream_rng(seed, stream);
    Ok(MassPartition {
        inner: shifted_step_via_group(&x.inner, n, &mut rng).map_err(to_py_err)?,
    })
}

/// Exact coefficients a_q(l) of the projected chain measure at degree n
/// after q half steps, as {l: "num/den"} strings. Both computation routes
/// are run and must agree.
#[pyfunction]
fn exact_coefficients(n: u32, q: u32) -> PyResult<BTreeMap<u32, String>> {
    let coeffs = a_q_coefficients(n, q).map_err(to_py_err)?;
    Ok(coeffs
        .into_iter()
        .map(|(l, value)| (l, format_rational(&value)))
        .collect())
}

/// Value of the projected chain measure on a conjugacy class of S_n, as a
/// "num/den" string.
#[pyfunction]
fn chain_measure_value(n: u32, q: u32, cycle_type: Vec<u32>) -> PyResult<String> {
    let class = Partition::new(cycle_type).map_err(to_py_err)?;
    let tau_q = tau_q_class_function(n, q).map_err(to_py_err)?;
    let value = tau_q.evaluate(&class).map_err(to_py_err)?;
    Ok(format_rational(&value))
}

#[pymodule]
fn splitmerge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<MassPartition>()?;
    m.add_function(wrap_pyfunction!(pd1, m)?)?;
    m.add_function(wrap_pyfunction!(haar_cycle_lengths, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_process_cycle_lengths, m)?)?;
    m.add_function(wrap_pyfunction!(transposition_shift, m)?)?;
    m.add_function(wrap_pyfunction!(exact_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(chain_measure_value, m)?)?;
    Ok(())
}
