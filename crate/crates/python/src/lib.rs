use std::collections::BTreeMap;

use cubegrid::{graycode, topology, verify};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(
    pycubegrid,
    FitError,
    PyValueError,
    "The grid does not fit the cube."
);
create_exception!(
    pycubegrid,
    MalformedMapError,
    PyValueError,
    "An embedding map failed validation."
);

fn to_py(err: cubegrid::Error) -> PyErr {
    match err {
        cubegrid::Error::RowOverflow { .. } | cubegrid::Error::ColOverflow { .. } => {
            FitError::new_err(err.to_string())
        }
        cubegrid::Error::Validation(_) => MalformedMapError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

#[pyclass(name = "CubeSpec", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCubeSpec {
    inner: cubegrid::CubeSpec,
}

#[pymethods]
impl PyCubeSpec {
    #[new]
    fn new(k: u32, n: u32) -> PyResult<Self> {
        cubegrid::CubeSpec::new(k, n)
            .map(|inner| PyCubeSpec { inner })
            .map_err(to_py)
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn node_count(&self) -> u64 {
        self.inner.node_count()
    }

    fn nodes(&self) -> Vec<Vec<u32>> {
        topology::nodes(&self.inner)
            .map(|c| c.into_digits())
            .collect()
    }

    fn neighbors(&self, coord: Vec<u32>) -> PyResult<Vec<Vec<u32>>> {
        let c = self.coordinate(coord)?;
        Ok(topology::neighbors(&self.inner, &c)
            .into_iter()
            .map(|c| c.into_digits())
            .collect())
    }

    fn are_adjacent(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<bool> {
        Ok(topology::are_adjacent(
            &self.inner,
            &self.coordinate(a)?,
            &self.coordinate(b)?,
        ))
    }

    fn torus_distance(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<u64> {
        Ok(topology::torus_distance(
            &self.inner,
            &self.coordinate(a)?,
            &self.coordinate(b)?,
        ))
    }

    fn stats(&self) -> BTreeMap<&'static str, u64> {
        let s = topology::cube_stats(&self.inner);
        BTreeMap::from([
            ("node_count", s.node_count),
            ("edge_count", s.edge_count),
            ("degree", s.degree.into()),
            ("diameter", s.diameter),
        ])
    }

    /// Graphviz source for the cube, with `map` drawn on it if given.
    #[pyo3(signature = (map=None))]
    fn to_dot(&self, map: Option<&PyEmbeddingMap>) -> String {
        cubegrid::dot::cube_to_dot(&self.inner, map.map(|m| &m.inner))
    }

    fn __repr__(&self) -> String {
        format!("CubeSpec(k={}, n={})", self.inner.k(), self.inner.n())
    }
}

impl PyCubeSpec {
    fn coordinate(&self, digits: Vec<u32>) -> PyResult<cubegrid::Coordinate> {
        let c = cubegrid::Coordinate::new(digits);
        if self.inner.contains(&c) {
            Ok(c)
        } else {
            Err(PyValueError::new_err(format!(
                "{c} is not a node of the {}",
                self.inner
            )))
        }
    }
}

#[pyclass(name = "GridSpec", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGridSpec {
    inner: cubegrid::GridSpec,
}

#[pymethods]
impl PyGridSpec {
    #[new]
    fn new(rows: u32, cols: u32) -> PyResult<Self> {
        cubegrid::GridSpec::new(rows, cols)
            .map(|inner| PyGridSpec { inner })
            .map_err(to_py)
    }

    #[getter]
    fn rows(&self) -> u32 {
        self.inner.rows()
    }

    #[getter]
    fn cols(&self) -> u32 {
        self.inner.cols()
    }

    fn __repr__(&self) -> String {
        format!(
            "GridSpec(rows={}, cols={})",
            self.inner.rows(),
            self.inner.cols()
        )
    }
}

#[pyclass(name = "LabelledPoint", frozen, get_all)]
struct PyLabelledPoint {
    x: u32,
    y: u32,
    coord: Vec<u32>,
    label: String,
    row: String,
    pad: String,
    col: String,
}

#[pymethods]
impl PyLabelledPoint {
    fn __repr__(&self) -> String {
        format!(
            "LabelledPoint(x={}, y={}, coord={:?}, label='{}', row='{}', pad='{}', col='{}')",
            self.x, self.y, self.coord, self.label, self.row, self.pad, self.col
        )
    }
}

#[pyclass(name = "EmbeddingMap", frozen)]
struct PyEmbeddingMap {
    inner: cubegrid::EmbeddingMap,
}

#[pymethods]
impl PyEmbeddingMap {
    #[getter]
    fn grid(&self) -> PyGridSpec {
        PyGridSpec {
            inner: *self.inner.grid(),
        }
    }

    #[getter]
    fn cube(&self) -> PyCubeSpec {
        PyCubeSpec {
            inner: *self.inner.cube(),
        }
    }

    fn assign(&self, x: u32, y: u32) -> PyResult<Vec<u32>> {
        let g = self.inner.grid();
        if x >= g.rows() || y >= g.cols() {
            return Err(PyValueError::new_err(format!(
                "({x},{y}) lies outside the grid"
            )));
        }
        Ok(self.inner.assign(x, y).digits().to_vec())
    }

    /// Coordinates in x-major order.
    fn assignments(&self) -> Vec<Vec<u32>> {
        self.inner
            .assignments()
            .iter()
            .map(|c| c.digits().to_vec())
            .collect()
    }

    fn labelled_view(&self) -> PyResult<Vec<PyLabelledPoint>> {
        let view = cubegrid::labelled_view(&self.inner).map_err(to_py)?;
        Ok(view
            .into_iter()
            .map(|p| PyLabelledPoint {
                x: p.x,
                y: p.y,
                coord: p.coord.into_digits(),
                label: p.label.to_string(),
                row: p.partition.row.to_string(),
                pad: p.partition.pad.to_string(),
                col: p.partition.col.to_string(),
            })
            .collect())
    }

    fn to_json(&self) -> String {
        cubegrid::MapDocument::from_map(&self.inner).to_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = cubegrid::MapDocument::from_json(text).map_err(to_py)?;
        doc.to_map()
            .map(|inner| PyEmbeddingMap { inner })
            .map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.inner.assignments().len()
    }

    fn __repr__(&self) -> String {
        let g = self.inner.grid();
        format!(
            "EmbeddingMap({}x{} in the {})",
            g.rows(),
            g.cols(),
            self.inner.cube()
        )
    }
}

#[pyclass(name = "EmbeddingReport", frozen, get_all)]
struct PyEmbeddingReport {
    injective: bool,
    dilation: u64,
    load: u64,
    congestion: u64,
    expansion: (u64, u64),
    isomorphic: bool,
}

#[pymethods]
impl PyEmbeddingReport {
    fn __repr__(&self) -> String {
        format!(
            "EmbeddingReport(injective={}, dilation={}, load={}, congestion={}, expansion={}/{}, isomorphic={})",
            py_bool(self.injective),
            self.dilation,
            self.load,
            self.congestion,
            self.expansion.0,
            self.expansion.1,
            py_bool(self.isomorphic)
        )
    }
}

fn py_bool(b: bool) -> &'static str {
    if b {
        "True"
    } else {
        "False"
    }
}

#[pyfunction]
fn bin_gray_encode(index: u64, width: u32) -> PyResult<String> {
    graycode::bin_gray_encode(index, width)
        .map(|b| b.to_string())
        .map_err(to_py)
}

#[pyfunction]
fn bin_gray_decode(code: &str) -> PyResult<u64> {
    let bits: cubegrid::BitString = code.parse().map_err(to_py)?;
    Ok(graycode::bin_gray_decode(&bits))
}

#[pyfunction]
fn kary_gray_rank_to_tuple(index: u64, k: u32, d: u32) -> PyResult<Vec<u32>> {
    graycode::kary_gray_rank_to_tuple(index, k, d).map_err(to_py)
}

#[pyfunction]
fn kary_gray_tuple_to_rank(digits: Vec<u32>, k: u32, d: u32) -> PyResult<u64> {
    graycode::kary_gray_tuple_to_rank(&digits, k, d).map_err(to_py)
}

#[pyfunction]
fn label_of_coordinate(coord: Vec<u32>, k: u32) -> PyResult<String> {
    graycode::label_of_coordinate(&cubegrid::Coordinate::new(coord), k)
        .map(|b| b.to_string())
        .map_err(to_py)
}

#[pyfunction]
fn check_fit(grid: &PyGridSpec, cube: &PyCubeSpec) -> PyResult<()> {
    cubegrid::check_fit(&grid.inner, &cube.inner).map_err(to_py)
}

#[pyfunction]
fn embed_grid(grid: &PyGridSpec, cube: &PyCubeSpec) -> PyResult<PyEmbeddingMap> {
    cubegrid::embed_grid(&grid.inner, &cube.inner)
        .map(|inner| PyEmbeddingMap { inner })
        .map_err(to_py)
}

#[pyfunction]
fn inflate_k(k: u32, n: u32) -> PyResult<PyCubeSpec> {
    cubegrid::inflate_k(k, n)
        .map(|inner| PyCubeSpec { inner })
        .map_err(to_py)
}

/// Build a map from explicit coordinates listed in x-major order.
#[pyfunction]
fn embedding_from_assignments(
    grid: &PyGridSpec,
    cube: &PyCubeSpec,
    coords: Vec<Vec<u32>>,
) -> PyResult<PyEmbeddingMap> {
    let coords = coords.into_iter().map(cubegrid::Coordinate::new).collect();
    cubegrid::EmbeddingMap::from_assignments(grid.inner, cube.inner, coords)
        .map(|inner| PyEmbeddingMap { inner })
        .map_err(to_py)
}

#[pyfunction(name = "verify")]
fn verify_map(map: &PyEmbeddingMap) -> PyEmbeddingReport {
    let r = verify::verify(&map.inner);
    PyEmbeddingReport {
        injective: r.injective,
        dilation: r.dilation,
        load: r.load,
        congestion: r.congestion,
        expansion: (*r.expansion.numer(), *r.expansion.denom()),
        isomorphic: r.isomorphic,
    }
}

#[pyfunction]
fn is_isomorphic_embedding(map: &PyEmbeddingMap) -> bool {
    verify::is_isomorphic_embedding(&map.inner)
}

/// Returns `("found", map)`, `("none", None)` or `("budget_exhausted", None)`.
#[pyfunction]
#[pyo3(signature = (grid, cube, node_budget=10_000_000))]
fn oracle_search(
    grid: &PyGridSpec,
    cube: &PyCubeSpec,
    node_budget: u64,
) -> PyResult<(&'static str, Option<PyEmbeddingMap>)> {
    let outcome = verify::oracle_search(&grid.inner, &cube.inner, node_budget).map_err(to_py)?;
    let name = outcome.name();
    Ok(match outcome {
        verify::OracleOutcome::Found(inner) => (name, Some(PyEmbeddingMap { inner })),
        _ => (name, None),
    })
}

#[pymodule]
fn pycubegrid(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCubeSpec>()?;
    m.add_class::<PyGridSpec>()?;
    m.add_class::<PyEmbeddingMap>()?;
    m.add_class::<PyEmbeddingReport>()?;
    m.add_class::<PyLabelledPoint>()?;
    m.add("FitError", m.py().get_type::<FitError>())?;
    m.add("MalformedMapError", m.py().get_type::<MalformedMapError>())?;
    m.add_function(wrap_pyfunction!(bin_gray_encode, m)?)?;
    m.add_function(wrap_pyfunction!(bin_gray_decode, m)?)?;
    m.add_function(wrap_pyfunction!(kary_gray_rank_to_tuple, m)?)?;
    m.add_function(wrap_pyfunction!(kary_gray_tuple_to_rank, m)?)?;
    m.add_function(wrap_pyfunction!(label_of_coordinate, m)?)?;
    m.add_function(wrap_pyfunction!(check_fit, m)?)?;
    m.add_function(wrap_pyfunction!(embed_grid, m)?)?;
    m.add_function(wrap_pyfunction!(inflate_k, m)?)?;
    m.add_function(wrap_pyfunction!(embedding_from_assignments, m)?)?;
    m.add_function(wrap_pyfunction!(verify_map, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic_embedding, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_search, m)?)?;
    Ok(())
}
