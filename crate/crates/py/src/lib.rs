//! Python bindings. Structured inputs and reports cross the boundary as
//! JSON strings in the same formats the CLI uses.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use upperspace::formats::{
    emit_powerspace_sidecar, emit_space_report, emit_topspace, parse_poset,
    parse_topspace, to_stable_string,
};
use upperspace::frame::FrameOnD;
use upperspace::gallery::{analyze_gallery, GalleryName};
use upperspace::powerspace::PowerSpace;
use upperspace::suite::{run_suite, SuiteConfig};
use upperspace::{PointSet, WfParams};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(frozen)]
struct Poset {
    inner: upperspace::Poset,
}

#[pymethods]
impl Poset {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Poset { inner: parse_poset(text).map_err(err)? })
    }

    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn leq(&self, a: &str, b: &str) -> PyResult<bool> {
        let i = self.inner.index_of(a).ok_or_else(|| err(format!("unknown {a:?}")))?;
        let j = self.inner.index_of(b).ok_or_else(|| err(format!("unknown {b:?}")))?;
        Ok(self.inner.leq(i, j))
    }

    fn scott_space(&self) -> PyResult<Space> {
        Ok(Space { inner: self.inner.scott_topology().map_err(err)? })
    }

    fn alexandroff_space(&self) -> PyResult<Space> {
        Ok(Space { inner: self.inner.alexandroff_topology().map_err(err)? })
    }

    /// Frame checks on D(L); returns the report as JSON.
    fn frame_check(&self, seed: u64) -> PyResult<String> {
        let frame = FrameOnD::build(&self.inner).map_err(err)?;
        let law = frame.frame_law_check(seed);
        let m = frame.elements().len();
        for a in 0..m {
            for b in 0..m {
                frame.heyting_implication(a, b);
            }
        }
        let spatiality = frame.primes_and_spatiality();
        Ok(to_stable_string(&serde_json::json!({
            "frame_law": law.holds,
            "frame_law_exhaustive": law.exhaustive,
            "residuation": true,
            "spatial": spatiality.spatial,
            "primes": spatiality.primes.len(),
            "element_count": m,
            "seed": seed,
        })))
    }
}

#[pyclass(frozen)]
struct Space {
    inner: upperspace::TopSpace,
}

#[pymethods]
impl Space {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Space { inner: parse_topspace(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        to_stable_string(&emit_topspace(&self.inner))
    }

    fn points(&self) -> Vec<String> {
        self.inner.points().to_vec()
    }

    fn open_count(&self) -> usize {
        self.inner.opens().len()
    }

    fn is_t0(&self) -> bool {
        self.inner.is_t0()
    }

    fn closure(&self, points: Vec<String>) -> PyResult<Vec<String>> {
        let s = self.name_set(&points)?;
        Ok(self.inner.set_names(&self.inner.closure(&s).map_err(err)?))
    }

    fn saturation(&self, points: Vec<String>) -> PyResult<Vec<String>> {
        let s = self.name_set(&points)?;
        Ok(self.inner.set_names(&self.inner.saturation(&s).map_err(err)?))
    }

    fn specialization_poset(&self) -> PyResult<Poset> {
        Ok(Poset { inner: self.inner.specialization_poset().map_err(err)? })
    }

    /// The full space report (T0, sober, well-filtered, d-space, coherent)
    /// as JSON.
    fn analyze(&self) -> PyResult<String> {
        let report = self.inner.space_report(&WfParams::default()).map_err(err)?;
        Ok(to_stable_string(&emit_space_report(&self.inner, &report)))
    }

    /// The Smyth power space: upper Vietoris space plus a sidecar with the
    /// reverse-inclusion order and the canonical map, both as JSON.
    fn powerspace(&self) -> PyResult<(String, String)> {
        let ps = PowerSpace::build_default(&self.inner).map_err(err)?;
        let uv = ps.uv_topspace().map_err(err)?;
        let sidecar = emit_powerspace_sidecar(&ps).map_err(err)?;
        Ok((
            to_stable_string(&emit_topspace(&uv)),
            to_stable_string(&sidecar),
        ))
    }
}

impl Space {
    fn name_set(&self, points: &[String]) -> PyResult<PointSet> {
        let mut idx = Vec::new();
        for p in points {
            idx.push(
                self.inner
                    .point_index(p)
                    .ok_or_else(|| err(format!("unknown point {p:?}")))?,
            );
        }
        Ok(PointSet::from_indices(self.inner.n(), idx))
    }
}

/// Verdict report for a named symbolic space as JSON.
#[pyfunction]
fn gallery(name: &str) -> PyResult<String> {
    let name = GalleryName::parse(name).map_err(err)?;
    let report = analyze_gallery(name).map_err(err)?;
    let value = serde_json::to_value(&report).map_err(err)?;
    Ok(to_stable_string(&value))
}

/// Runs the verification battery (reduced by default for interactive use)
/// and returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (seed=42, exhaustive_upto=3, random_posets=50))]
fn suite(seed: u64, exhaustive_upto: usize, random_posets: usize) -> PyResult<String> {
    let cfg = SuiteConfig {
        seed,
        exhaustive_upto,
        random_posets,
        random_poset_max_n: 6,
        lattice_exhaustive_upto: 4,
        random_lattices: 40,
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg).map_err(err)?;
    Ok(to_stable_string(&report.to_json()))
}

#[pymodule]
fn upperspace_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poset>()?;
    m.add_class::<Space>()?;
    m.add_function(wrap_pyfunction!(gallery, m)?)?;
    m.add_function(wrap_pyfunction!(suite, m)?)?;
    Ok(())
}
