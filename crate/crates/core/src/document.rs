//! JSON interchange for embedding maps and verifier reports.
//!
//! A map document looks like
//!
//! ```json
//! { "k": 4, "n": 3, "rows": 3, "cols": 9,
//!   "assignments": [ { "x": 0, "y": 0, "coord": [0, 0, 0], "label": "000000" }, ... ] }
//! ```
//!
//! with assignments in x-major order and `label` null when `k` is not a power
//! of two. Documents read back in may list assignments in any order, but every
//! grid point must appear exactly once.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::embedding::{EmbeddingMap, GridSpec};
use crate::error::{Error, Result};
use crate::graycode;
use crate::topology::{Coordinate, CubeSpec};
use crate::verify::EmbeddingReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentRecord {
    pub x: u32,
    pub y: u32,
    pub coord: Vec<u32>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDocument {
    pub k: u32,
    pub n: u32,
    pub rows: u32,
    pub cols: u32,
    pub assignments: Vec<AssignmentRecord>,
}

impl MapDocument {
    pub fn from_map(map: &EmbeddingMap) -> Self {
        let k = map.cube().k();
        let with_labels = k.is_power_of_two();
        let assignments = map
            .iter()
            .map(|((x, y), coord)| AssignmentRecord {
                x,
                y,
                coord: coord.digits().to_vec(),
                label: with_labels.then(|| {
                    graycode::label_of_coordinate(coord, k)
                        .expect("coordinates of a map lie in its cube")
                        .to_string()
                }),
            })
            .collect();
        MapDocument {
            k,
            n: map.cube().n(),
            rows: map.grid().rows(),
            cols: map.grid().cols(),
            assignments,
        }
    }

    /// Check the document and build the map it describes.
    ///
    /// Every problem found is reported, not just the first.
    pub fn to_map(&self) -> Result<EmbeddingMap> {
        let cube = CubeSpec::new(self.k, self.n)?;
        let grid = GridSpec::new(self.rows, self.cols)?;
        let mut problems = Vec::new();
        let mut by_point: BTreeMap<(u32, u32), Coordinate> = BTreeMap::new();
        let mut seen: BTreeSet<(u32, u32)> = BTreeSet::new();

        for rec in &self.assignments {
            let (x, y) = (rec.x, rec.y);
            if x >= grid.rows() || y >= grid.cols() {
                problems.push(format!(
                    "({x},{y}) lies outside the {}x{} grid",
                    grid.rows(),
                    grid.cols()
                ));
                continue;
            }
            if !seen.insert((x, y)) {
                problems.push(format!("({x},{y}) is assigned more than once"));
                continue;
            }
            let coord = Coordinate::new(rec.coord.clone());
            if !cube.contains(&coord) {
                problems.push(format!("({x},{y}) -> {coord} is not a node of the {cube}"));
                continue;
            }
            if let Some(label) = &rec.label {
                match graycode::label_of_coordinate(&coord, cube.k()) {
                    Ok(expected) if expected.to_string() == *label => {}
                    Ok(expected) => problems.push(format!(
                        "({x},{y}) -> {coord} carries label {label:?}, expected {expected}"
                    )),
                    Err(_) => problems.push(format!(
                        "({x},{y}) carries label {label:?} but k = {} has no binary labels",
                        cube.k()
                    )),
                }
            }
            by_point.insert((x, y), coord);
        }
        for (x, y) in grid.points() {
            if !seen.contains(&(x, y)) {
                problems.push(format!("({x},{y}) has no assignment"));
            }
        }
        if !problems.is_empty() {
            return Err(Error::Validation(problems));
        }
        EmbeddingMap::from_assignments(grid, cube, by_point.into_values().collect())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("map documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Validation(vec![format!("invalid map document: {e}")]))
    }
}

pub fn report_to_json(report: &EmbeddingReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::embed_grid;
    use crate::verify::verify;

    fn paper_map() -> EmbeddingMap {
        embed_grid(&GridSpec::new(3, 9).unwrap(), &CubeSpec::new(4, 3).unwrap()).unwrap()
    }

    #[test]
    fn document_round_trip() {
        let map = paper_map();
        let doc = MapDocument::from_map(&map);
        assert_eq!(doc.assignments.len(), 27);
        assert_eq!(doc.assignments[26].label.as_deref(), Some("111100"));
        let back = MapDocument::from_json(&doc.to_json())
            .unwrap()
            .to_map()
            .unwrap();
        assert_eq!(back, map);
    }

    #[test]
    fn json_shape() {
        let doc = MapDocument::from_map(&paper_map());
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(value["k"], 4);
        assert_eq!(value["cols"], 9);
        assert_eq!(
            value["assignments"][0],
            serde_json::json!({"x": 0, "y": 0, "coord": [0, 0, 0], "label": "000000"})
        );
    }

    #[test]
    fn odd_arity_has_null_labels() {
        let map = embed_grid(&GridSpec::new(3, 3).unwrap(), &CubeSpec::new(3, 2).unwrap()).unwrap();
        let doc = MapDocument::from_map(&map);
        assert!(doc.assignments.iter().all(|a| a.label.is_none()));
        assert!(doc.to_json().contains("\"label\": null"));
    }

    #[test]
    fn shuffled_assignments_are_accepted() {
        let mut doc = MapDocument::from_map(&paper_map());
        doc.assignments.reverse();
        assert_eq!(doc.to_map().unwrap(), paper_map());
    }

    #[test]
    fn malformed_documents_list_every_offender() {
        let mut doc = MapDocument::from_map(&paper_map());
        doc.assignments[1].x = 0;
        doc.assignments[1].y = 0;
        doc.assignments[2].coord = vec![0, 0, 9];
        doc.assignments[2].label = None;
        doc.assignments[3].label = Some("101010".into());
        let Err(Error::Validation(list)) = doc.to_map() else {
            panic!("expected a validation error");
        };
        let text = list.join("\n");
        assert!(text.contains("(0,0) is assigned more than once"), "{text}");
        assert!(text.contains("(0,1) has no assignment"), "{text}");
        assert!(text.contains("(0,2) -> (0,0,9)"), "{text}");
        assert!(text.contains("(0,3) -> (0,0,3) carries label"), "{text}");
        assert_eq!(list.len(), 4, "{text}");
    }

    #[test]
    fn corrupted_map_still_verifies_as_non_injective() {
        let mut doc = MapDocument::from_map(&paper_map());
        doc.assignments[1].coord = doc.assignments[0].coord.clone();
        doc.assignments[1].label = doc.assignments[0].label.clone();
        let report = verify(&doc.to_map().unwrap());
        assert!(!report.injective);
        assert!(!report.isomorphic);
    }

    #[test]
    fn report_json_shape() {
        let json = report_to_json(&verify(&paper_map()));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(
            value,
            serde_json::json!({
                "injective": true, "dilation": 1, "load": 1, "congestion": 1,
                "expansion": [64, 27], "isomorphic": true
            })
        );
    }
}
