//! Python bindings. Sequences are passed as `str` (one symbol per code
//! point) or `bytes` (one symbol per byte); results come back as `str`.

use maxrep::{Embedding, Error, Seq, SigmaRule, Symbol};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

#[derive(FromPyObject)]
enum Text {
    Str(String),
    Bytes(Vec<u8>),
}

impl Text {
    fn seq(&self) -> Seq {
        match self {
            Text::Str(s) => Seq::from_text(s),
            Text::Bytes(b) => Seq::from_bytes(b),
        }
    }
}

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn symbol(c: &str) -> PyResult<Symbol> {
    let mut chars = c.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(Symbol::from_char(c)),
        _ => Err(PyValueError::new_err(format!(
            "{c:?} is not a single symbol"
        ))),
    }
}

fn rule(name: &str) -> PyResult<SigmaRule> {
    match name {
        "smallest" => Ok(SigmaRule::SmallestRepeating),
        "most-frequent" | "most_frequent" => Ok(SigmaRule::MostFrequent),
        _ => Err(PyValueError::new_err(format!(
            "unknown sigma rule {name:?}"
        ))),
    }
}

fn indices(w: &[Embedding]) -> Vec<Vec<usize>> {
    w.iter().map(|e| e.indices().to_vec()).collect()
}

/// A k-repeating subsequence `unit^k` with its 1-based witness blocks.
#[pyclass(frozen, get_all, skip_from_py_object, module = "maxrep")]
#[derive(Clone)]
struct KRepResult {
    k: usize,
    sigma: Option<String>,
    unit: String,
    prefix: String,
    suffix: String,
    witness: Vec<Vec<usize>>,
}

#[pymethods]
impl KRepResult {
    /// `unit` repeated `k` times.
    #[getter]
    fn repeated(&self) -> String {
        self.unit.repeat(self.k)
    }

    fn __len__(&self) -> usize {
        self.unit.chars().count() * self.k
    }

    fn __repr__(&self) -> String {
        format!(
            "KRepResult(k={}, unit={:?}, sigma={:?})",
            self.k, self.unit, self.sigma
        )
    }
}

impl From<maxrep::KRepResult> for KRepResult {
    fn from(r: maxrep::KRepResult) -> Self {
        KRepResult {
            k: r.k,
            sigma: r.sigma.map(|c| c.to_string()),
            unit: r.unit.render(),
            prefix: r.prefix.render(),
            suffix: r.suffix.render(),
            witness: indices(&r.witness),
        }
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "maxrep")]
#[derive(Clone)]
struct MaximalityVerdict {
    is_valid: bool,
    is_maximal: bool,
    /// `(gap, symbol)` of the first insertion that stays k-repeating.
    counterexample: Option<(usize, String)>,
}

#[pymethods]
impl MaximalityVerdict {
    fn __bool__(&self) -> bool {
        self.is_valid && self.is_maximal
    }

    fn __repr__(&self) -> String {
        format!(
            "MaximalityVerdict(is_valid={}, is_maximal={}, counterexample={:?})",
            self.is_valid, self.is_maximal, self.counterexample
        )
    }
}

/// Next/previous occurrence index over a fixed sequence.
#[pyclass(frozen, module = "maxrep")]
struct OccIndex(maxrep::OccIndex);

#[pymethods]
impl OccIndex {
    #[new]
    fn new(s: Text) -> Self {
        OccIndex(maxrep::OccIndex::new(&s.seq()))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// Ascending 1-based positions of `c`.
    fn positions(&self, c: &str) -> PyResult<Vec<usize>> {
        Ok(self.0.positions(symbol(c)?).to_vec())
    }

    /// Smallest `j >= i` with `x` a subsequence of `S(i..j]`.
    fn next_pt(&self, x: Text, i: usize) -> Option<usize> {
        self.0.next_pt(&x.seq(), i)
    }

    /// Largest `l <= i` with `x` a subsequence of `S[l..i)`.
    fn prev_pt(&self, x: Text, i: usize) -> Option<usize> {
        self.0.prev_pt(&x.seq(), i)
    }
}

#[pyfunction]
#[pyo3(signature = (s, sigma_rule = "smallest"))]
fn maximal_square_subsequence(s: Text, sigma_rule: &str) -> PyResult<KRepResult> {
    maxrep::maximal_square_subsequence_with(&s.seq(), rule(sigma_rule)?)
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (s, k, sigma_rule = "smallest"))]
fn maximal_k_repeating(s: Text, k: usize, sigma_rule: &str) -> PyResult<KRepResult> {
    maxrep::maximal_k_repeating_with(&s.seq(), k, rule(sigma_rule)?)
        .map(Into::into)
        .map_err(err)
}

/// Grows the k-repeating `x` into a maximal one containing it.
#[pyfunction]
fn extend_k_rep(s: Text, x: Text, sigma: &str, k: usize) -> PyResult<KRepResult> {
    let s = s.seq();
    let sigma = symbol(sigma)?;
    let ext = maxrep::extend_k_rep(&s, &x.seq(), sigma, k).map_err(err)?;
    maxrep::KRepResult::from_unit(&s, k, sigma, ext.unit())
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (hosts, constraint = Text::Str(String::new())))]
fn mkcs_constrained(hosts: Vec<Text>, constraint: Text) -> PyResult<String> {
    let hosts: Vec<Seq> = hosts.iter().map(Text::seq).collect();
    let refs: Vec<&[Symbol]> = hosts.iter().map(|h| &h[..]).collect();
    let inst = maxrep::McsInstance::new(refs, constraint.seq()).map_err(err)?;
    Ok(maxrep::mkcs_constrained(&inst).render())
}

#[pyfunction]
fn enum_sigma_starts(s: Text, sigma: &str, r: usize, k: usize) -> PyResult<Vec<Vec<usize>>> {
    let s = s.seq();
    let positions = maxrep::occ_positions(&s, symbol(sigma)?);
    Ok(maxrep::enum_sigma_starts(r, k, &positions)
        .map_err(err)?
        .map(|p| p.0)
        .collect())
}

#[pyfunction]
fn check_maximal_k_rep(s: Text, x: Text, k: usize) -> PyResult<MaximalityVerdict> {
    let v = maxrep::check_maximal_k_rep(&s.seq(), &x.seq(), k).map_err(err)?;
    Ok(MaximalityVerdict {
        is_valid: v.is_valid,
        is_maximal: v.is_maximal,
        counterexample: v.counterexample.map(|i| (i.gap, i.symbol.to_string())),
    })
}

/// Witness blocks for `x^k` in `s`, or `None`.
#[pyfunction]
fn check_k_repeating(s: Text, x: Text, k: usize) -> Option<Vec<Vec<usize>>> {
    maxrep::check_k_repeating(&s.seq(), &x.seq(), k).map(|w| indices(&w))
}

/// `True` iff `m` is a maximal common subsequence of `hosts` containing
/// `constraint`.
#[pyfunction]
fn verify_mcs_output(hosts: Vec<Text>, constraint: Text, m: Text) -> bool {
    let hosts: Vec<Seq> = hosts.iter().map(Text::seq).collect();
    let refs: Vec<&[Symbol]> = hosts.iter().map(|h| &h[..]).collect();
    maxrep::verify_mcs_output(&refs, &constraint.seq(), &m.seq()).accepted()
}

/// Length of a longest square subsequence (quadratic per cut).
#[pyfunction]
fn lss_oracle(s: Text) -> PyResult<usize> {
    maxrep::lss_oracle(&s.seq()).map_err(err)
}

#[pymodule(name = "maxrep")]
fn py_maxrep(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<KRepResult>()?;
    m.add_class::<MaximalityVerdict>()?;
    m.add_class::<OccIndex>()?;
    m.add_function(wrap_pyfunction!(maximal_square_subsequence, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_k_repeating, m)?)?;
    m.add_function(wrap_pyfunction!(extend_k_rep, m)?)?;
    m.add_function(wrap_pyfunction!(mkcs_constrained, m)?)?;
    m.add_function(wrap_pyfunction!(enum_sigma_starts, m)?)?;
    m.add_function(wrap_pyfunction!(check_maximal_k_rep, m)?)?;
    m.add_function(wrap_pyfunction!(check_k_repeating, m)?)?;
    m.add_function(wrap_pyfunction!(verify_mcs_output, m)?)?;
    m.add_function(wrap_pyfunction!(lss_oracle, m)?)?;
    Ok(())
}
