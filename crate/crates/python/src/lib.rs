//! Python bindings for `kbound`.
//!
//! Counts come back as Python `int`, so nothing overflows. Invalid parameters
//! raise `ValueError`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use kbound::blocks::{self, BlockQuery, EllProfile};
use kbound::{combinatorics, exceptional, lseries, oracle, GroupFamily};

fn py_err(e: kbound::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family(tag: &str) -> PyResult<GroupFamily> {
    tag.parse().map_err(py_err)
}

/// Invariants of one unipotent block.
#[pyclass(name = "BlockInvariants", frozen, get_all)]
struct PyBlockInvariants {
    family: String,
    n: u64,
    w: u64,
    k_b: BigUint,
    exactness: String,
    defect_exponent: u64,
    abelian_defect: bool,
    verdict: String,
}

#[pymethods]
impl PyBlockInvariants {
    fn __repr__(&self) -> String {
        format!(
            "BlockInvariants(family={}, n={}, w={}, k_b={}, defect_exponent={}, verdict={})",
            self.family, self.n, self.w, self.k_b, self.defect_exponent, self.verdict
        )
    }
}

fn run(query: BlockQuery) -> PyResult<PyBlockInvariants> {
    let inv = blocks::evaluate(&query).map_err(py_err)?;
    Ok(PyBlockInvariants {
        family: query.family.tag().to_string(),
        n: query.n,
        w: query.w,
        k_b: inv.k_b,
        exactness: inv.exactness.to_string(),
        defect_exponent: inv.defect_exponent,
        abelian_defect: inv.abelian_defect,
        verdict: inv.verdict.to_string(),
    })
}

/// Weight-`w` unipotent block of a classical family for a synthetic `(ℓ, d, a)`.
#[pyfunction]
fn evaluate_block(family_tag: &str, ell: u64, d: u64, a: u64, w: u64) -> PyResult<PyBlockInvariants> {
    let profile = EllProfile::new(ell, d, a).map_err(py_err)?;
    run(BlockQuery::weighted(family(family_tag)?, profile, w))
}

/// Same, with `(d, a)` derived from a prime power `q`.
#[pyfunction]
fn evaluate_block_for_q(family_tag: &str, q: u64, ell: u64, w: u64) -> PyResult<PyBlockInvariants> {
    let fam = family(family_tag)?;
    let profile = if fam.is_unitary() {
        blocks::ell_profile_negated(q, ell)
    } else {
        blocks::ell_profile(q, ell)
    }
    .map_err(py_err)?;
    run(BlockQuery::weighted(fam, profile, w))
}

/// Principal block of `SL_n ≤ G ≤ GL_n` (or the unitary analogue) with
/// `|GL_n : G|_ℓ = ℓ^g`; `g` defaults to `a`.
#[pyfunction]
#[pyo3(signature = (family_tag, ell, a, n, g=None))]
fn evaluate_principal(
    family_tag: &str,
    ell: u64,
    a: u64,
    n: u64,
    g: Option<u64>,
) -> PyResult<PyBlockInvariants> {
    let profile = EllProfile::new(ell, 1, a).map_err(py_err)?;
    run(BlockQuery::principal(family(family_tag)?, profile, n, g.unwrap_or(a)))
}

/// Principal block of `PSL_ℓ(q)` with `ℓ^a || q − 1`.
#[pyfunction]
fn evaluate_psl(ell: u64, a: u64) -> PyResult<PyBlockInvariants> {
    let profile = EllProfile::new(ell, 1, a).map_err(py_err)?;
    run(BlockQuery::psl(profile))
}

#[pyfunction]
fn closed_form_count(family_tag: &str, ell: u64, d: u64, a: u64, w: u64) -> PyResult<BigUint> {
    blocks::closed_form_count(family(family_tag)?, ell, d, a, w).map_err(py_err)
}

/// The class-by-class count, independent of the closed formula.
#[pyfunction]
fn block_count_proof_path(family_tag: &str, ell: u64, d: u64, a: u64, w: u64) -> PyResult<BigUint> {
    lseries::block_count_proof_path(family(family_tag)?, ell, d, a, w).map_err(py_err)
}

#[pyfunction]
fn bound_thm_slnproof(n: u64, ell: u64, a: u64, m: u64) -> PyResult<BigUint> {
    blocks::bound_thm_slnproof(n, ell, a, m).map_err(py_err)
}

#[pyfunction]
fn partition_count(t: u64) -> BigUint {
    combinatorics::partition_count(t)
}

#[pyfunction]
fn multipartition_count(s: u64, t: u64) -> BigUint {
    combinatorics::multipartition_count(s, t)
}

#[pyfunction]
fn p_ell(ell: u64, w: u64) -> BigUint {
    combinatorics::p_ell(ell, w)
}

#[pyfunction]
fn k_ell_a_w(ell: u64, a: u64, w: u64) -> PyResult<BigUint> {
    combinatorics::k_ell_a_w(ell, a, w).map_err(py_err)
}

/// ℓ-compositions of `w` as lists of weights.
#[pyfunction]
fn ell_compositions(ell: u64, w: u64) -> Vec<Vec<u64>> {
    combinatorics::ell_compositions(ell, w)
        .into_iter()
        .map(|c| c.weights().to_vec())
        .collect()
}

#[pyfunction]
fn unipotent_count(label: &str) -> PyResult<BigUint> {
    exceptional::unipotent_count(label).map_err(py_err)
}

/// `(group, ℓ, Σ e, Σ sizes, holds)` for each tabulated ℓ-element class table.
#[pyfunction]
fn average_checks() -> Vec<(String, u64, BigUint, BigUint, bool)> {
    exceptional::class_tables()
        .iter()
        .map(|t| {
            let c = exceptional::average_check(t);
            (t.group_label.clone(), t.ell, c.sum_e, c.sum_sizes, c.holds)
        })
        .collect()
}

#[pyfunction]
fn e8_series_bound_check(a: u64) -> PyResult<bool> {
    exceptional::e8_series_bound_check(a).map_err(py_err)
}

/// Whether `5·q^{N−r}` exceeds 136 for the named root system.
#[pyfunction]
fn fg_margin(label: &str, q: u64) -> PyResult<bool> {
    let datum = exceptional::root_system(label).map_err(py_err)?;
    Ok(exceptional::fg_margin(&datum, q))
}

/// Number of ℓ-element classes of `GL_n(q)` found by brute force.
#[pyfunction]
fn gl_ell_class_count(n: u32, q: u32, ell: u64) -> PyResult<usize> {
    Ok(oracle::gl_ell_class_census(n, q, ell).map_err(py_err)?.classes.len())
}

#[pyfunction]
fn sl_ell_class_count(n: u32, q: u32, ell: u64) -> PyResult<usize> {
    Ok(oracle::sl_ell_class_census(n, q, ell).map_err(py_err)?.classes.len())
}

/// Conjugacy classes of `G(m, p, n)` by brute force.
#[pyfunction]
fn gmpn_class_count(m: u64, p: u64, n: u64) -> PyResult<u64> {
    oracle::gmpn_class_count(m, p, n).map_err(py_err)
}

#[pyfunction]
fn multipartition_enumerate(s: u64, t: u64) -> PyResult<BigUint> {
    oracle::multipartition_enumerate(s, t).map_err(py_err)
}

#[pymodule]
fn kbound_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBlockInvariants>()?;
    m.add_function(wrap_pyfunction!(evaluate_block, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_block_for_q, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_principal, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_psl, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_count, m)?)?;
    m.add_function(wrap_pyfunction!(block_count_proof_path, m)?)?;
    m.add_function(wrap_pyfunction!(bound_thm_slnproof, m)?)?;
    m.add_function(wrap_pyfunction!(partition_count, m)?)?;
    m.add_function(wrap_pyfunction!(multipartition_count, m)?)?;
    m.add_function(wrap_pyfunction!(p_ell, m)?)?;
    m.add_function(wrap_pyfunction!(k_ell_a_w, m)?)?;
    m.add_function(wrap_pyfunction!(ell_compositions, m)?)?;
    m.add_function(wrap_pyfunction!(unipotent_count, m)?)?;
    m.add_function(wrap_pyfunction!(average_checks, m)?)?;
    m.add_function(wrap_pyfunction!(e8_series_bound_check, m)?)?;
    m.add_function(wrap_pyfunction!(fg_margin, m)?)?;
    m.add_function(wrap_pyfunction!(gl_ell_class_count, m)?)?;
    m.add_function(wrap_pyfunction!(sl_ell_class_count, m)?)?;
    m.add_function(wrap_pyfunction!(gmpn_class_count, m)?)?;
    m.add_function(wrap_pyfunction!(multipartition_enumerate, m)?)?;
    Ok(())
}
