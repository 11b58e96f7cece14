//! Grid-into-cube embedding.
//!
//! Grid point `(x, y)` of an `A x B` grid goes to the cube node whose
//! dimension-0 digit is `x` and whose remaining `n - 1` digits are the `y`-th
//! tuple of the reflected base-`k` Gray code. Moving along a row changes one
//! trailing digit by one; moving along a column changes the leading digit by
//! one. Neither move wraps, so the map has dilation 1 as long as `A <= k` and
//! `B <= k^(n-1)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graycode::{self, BitString, LabelPartition};
use crate::topology::{Coordinate, CubeSpec};

/// An `rows x cols` mesh without wraparound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    rows: u32,
    cols: u32,
}

impl GridSpec {
    pub fn new(rows: u32, cols: u32) -> Result<Self> {
        if rows < 1 {
            return Err(Error::domain("rows", rows.into(), ">= 1"));
        }
        if cols < 1 {
            return Err(Error::domain("cols", cols.into(), ">= 1"));
        }
        if u64::from(rows) * u64::from(cols) < 2 {
            return Err(Error::domain("rows*cols", 1, ">= 2"));
        }
        Ok(GridSpec { rows, cols })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn point_count(&self) -> u64 {
        u64::from(self.rows) * u64::from(self.cols)
    }

    /// Position of `(x, y)` in x-major order.
    pub fn index_of(&self, x: u32, y: u32) -> usize {
        x as usize * self.cols as usize + y as usize
    }

    /// All points in x-major order.
    pub fn points(&self) -> impl Iterator<Item = (u32, u32)> {
        let cols = self.cols;
        (0..self.rows).flat_map(move |x| (0..cols).map(move |y| (x, y)))
    }

    /// Every mesh edge once, as pairs of x-major point indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, y) in self.points() {
            let here = self.index_of(x, y);
            if y + 1 < self.cols {
                out.push((here, self.index_of(x, y + 1)));
            }
            if x + 1 < self.rows {
                out.push((here, self.index_of(x + 1, y)));
            }
        }
        out
    }
}

/// An assignment of every grid point to a cube node.
///
/// Construction checks that every coordinate belongs to the cube, so any value
/// of this type can be measured by the verifier. Injectivity is not enforced;
/// that is one of the things the verifier reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingMap {
    grid: GridSpec,
    cube: CubeSpec,
    assign: Vec<Coordinate>,
}

impl EmbeddingMap {
    /// Build a map from coordinates listed in x-major order.
    pub fn from_assignments(
        grid: GridSpec,
        cube: CubeSpec,
        assign: Vec<Coordinate>,
    ) -> Result<Self> {
        let mut problems = Vec::new();
        if assign.len() as u64 != grid.point_count() {
            problems.push(format!(
                "expected {} assignments, got {}",
                grid.point_count(),
                assign.len()
            ));
        }
        for ((x, y), coord) in grid.points().zip(&assign) {
            if !cube.contains(coord) {
                problems.push(format!("({x},{y}) -> {coord} is not a node of the {cube}"));
            }
        }
        if problems.is_empty() {
            Ok(EmbeddingMap { grid, cube, assign })
        } else {
            Err(Error::Validation(problems))
        }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn cube(&self) -> &CubeSpec {
        &self.cube
    }

    pub fn assign(&self, x: u32, y: u32) -> &Coordinate {
        &self.assign[self.grid.index_of(x, y)]
    }

    /// Coordinates in x-major order.
    pub fn assignments(&self) -> &[Coordinate] {
        &self.assign
    }

    /// `((x, y), coordinate)` in x-major order.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &Coordinate)> {
        self.grid.points().zip(self.assign.iter())
    }

    /// Number of distinct cube nodes in use.
    pub fn image_size(&self) -> usize {
        self.assign.iter().collect::<HashSet<_>>().len()
    }
}

/// Ok iff the grid has at most `k` rows and at most `k^(n-1)` columns.
pub fn check_fit(grid: &GridSpec, cube: &CubeSpec) -> Result<()> {
    if grid.rows > cube.k() {
        return Err(Error::RowOverflow {
            rows: grid.rows,
            k: cube.k(),
        });
    }
    let capacity = u64::from(cube.k()).pow(cube.n() - 1);
    if u64::from(grid.cols) > capacity {
        return Err(Error::ColOverflow {
            cols: grid.cols.into(),
            capacity,
        });
    }
    Ok(())
}

/// Cube digits `1..n` for column `y`.
fn column_digits(y: u32, cube: &CubeSpec) -> Result<Vec<u32>> {
    match cube.n() {
        1 => Ok(Vec::new()),
        n => graycode::kary_gray_rank_to_tuple(y.into(), cube.k(), n - 1),
    }
}

pub fn embed_grid(grid: &GridSpec, cube: &CubeSpec) -> Result<EmbeddingMap> {
    check_fit(grid, cube)?;
    let columns = (0..grid.cols)
        .map(|y| column_digits(y, cube))
        .collect::<Result<Vec<_>>>()?;
    let mut assign = Vec::with_capacity(grid.point_count() as usize);
    for x in 0..grid.rows {
        for tail in &columns {
            let mut digits = Vec::with_capacity(cube.n() as usize);
            digits.push(x);
            digits.extend_from_slice(tail);
            assign.push(Coordinate::new(digits));
        }
    }
    Ok(EmbeddingMap {
        grid: *grid,
        cube: *cube,
        assign,
    })
}

/// The cube with arity rounded up to the next power of two.
pub fn inflate_k(k: u32, n: u32) -> Result<CubeSpec> {
    if k < 2 {
        return Err(Error::domain("k", k.into(), ">= 2"));
    }
    let inflated = k
        .checked_next_power_of_two()
        .ok_or_else(|| Error::domain("k", k.into(), "<= 2^31"))?;
    CubeSpec::new(inflated, n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledPoint {
    pub x: u32,
    pub y: u32,
    pub coord: Coordinate,
    pub label: BitString,
    pub partition: LabelPartition,
}

/// One row per grid point, x-major, with the node's binary label split into
/// its row, pad and column fields.
pub fn labelled_view(map: &EmbeddingMap) -> Result<Vec<LabelledPoint>> {
    map.iter()
        .map(|((x, y), coord)| {
            let label = graycode::label_of_coordinate(coord, map.cube.k())?;
            let partition = graycode::partition_label(&label, &map.grid, &map.cube)?;
            Ok(LabelledPoint {
                x,
                y,
                coord: coord.clone(),
                label,
                partition,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graycode::{bin_gray_encode, exact_log2};
    use crate::topology::are_adjacent;

    fn cube(k: u32, n: u32) -> CubeSpec {
        CubeSpec::new(k, n).unwrap()
    }

    fn grid(a: u32, b: u32) -> GridSpec {
        GridSpec::new(a, b).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0, 3).is_err());
        assert!(GridSpec::new(3, 0).is_err());
        assert!(GridSpec::new(1, 1).is_err());
        assert!(GridSpec::new(1, 2).is_ok());
    }

    #[test]
    fn grid_edges_count() {
        // A(B-1) + (A-1)B
        assert_eq!(grid(3, 9).edges().len(), 3 * 8 + 2 * 9);
        assert_eq!(grid(1, 2).edges(), vec![(0, 1)]);
    }

    #[test]
    fn fit_examples() {
        assert!(check_fit(&grid(3, 9), &cube(4, 3)).is_ok());
        assert_eq!(
            check_fit(&grid(5, 1), &cube(4, 3)),
            Err(Error::RowOverflow { rows: 5, k: 4 })
        );
        let err = check_fit(&grid(4, 17), &cube(4, 3)).unwrap_err();
        assert_eq!(
            err,
            Error::ColOverflow {
                cols: 17,
                capacity: 16
            }
        );
        assert!(err.to_string().contains("1 too many"), "{err}");
    }

    #[test]
    fn embed_examples() {
        let map = embed_grid(&grid(3, 9), &cube(4, 3)).unwrap();
        assert_eq!(map.assign(0, 0).digits(), &[0, 0, 0]);
        assert_eq!(map.assign(2, 8).digits(), &[2, 2, 0]);
        let label = |x, y| {
            graycode::label_of_coordinate(map.assign(x, y), 4)
                .unwrap()
                .to_string()
        };
        assert_eq!(label(0, 0), "000000");
        assert_eq!(label(2, 8), "111100");

        let square = embed_grid(&grid(2, 2), &cube(2, 2)).unwrap();
        let got: Vec<_> = square
            .assignments()
            .iter()
            .map(|c| c.digits().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn embed_propagates_fit_errors() {
        assert!(matches!(
            embed_grid(&grid(5, 2), &cube(4, 3)),
            Err(Error::RowOverflow { .. })
        ));
        assert!(matches!(
            embed_grid(&grid(2, 3), &cube(4, 1)),
            Err(Error::ColOverflow { .. })
        ));
    }

    #[test]
    fn single_dimension_cube_takes_a_column() {
        let map = embed_grid(&grid(3, 1), &cube(3, 1)).unwrap();
        let got: Vec<_> = map
            .assignments()
            .iter()
            .map(|c| c.digits().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn inflate_examples() {
        assert_eq!(inflate_k(4, 3).unwrap().k(), 4);
        assert_eq!(inflate_k(3, 2).unwrap().k(), 4);
        assert_eq!(inflate_k(5, 3).unwrap().k(), 8);
        assert_eq!(inflate_k(5, 3).unwrap().n(), 3);
        assert!(inflate_k(1, 3).is_err());
    }

    #[test]
    fn labelled_view_examples() {
        let view = labelled_view(&embed_grid(&grid(3, 9), &cube(4, 3)).unwrap()).unwrap();
        assert_eq!(view.len(), 27);
        assert!(view
            .iter()
            .all(|p| p.partition.row.width() == 2 && p.partition.col.width() == 4));
        assert!(view.windows(2).all(|w| (w[0].x, w[0].y) < (w[1].x, w[1].y)));

        // A 1x2 line exceeds k^(n-1) = 1 columns in a one-dimensional cube;
        // the same line stood on end runs down dimension 0.
        assert!(matches!(
            embed_grid(&grid(1, 2), &cube(2, 1)),
            Err(Error::ColOverflow { .. })
        ));
        let view = labelled_view(&embed_grid(&grid(2, 1), &cube(2, 1)).unwrap()).unwrap();
        let labels: Vec<_> = view.iter().map(|p| p.label.to_string()).collect();
        assert_eq!(labels, vec!["0", "1"]);

        let view = labelled_view(&embed_grid(&grid(2, 4), &cube(4, 3)).unwrap()).unwrap();
        let p = &view[0].partition;
        assert_eq!((p.row.width(), p.pad.width(), p.col.width()), (1, 3, 2));
    }

    #[test]
    fn labelled_view_rejects_odd_arity() {
        let map = embed_grid(&grid(3, 3), &cube(3, 2)).unwrap();
        assert!(matches!(
            labelled_view(&map),
            Err(Error::UnsupportedArity { k: 3, suggested: 4 })
        ));
    }

    #[test]
    fn row_field_carries_row_code_when_rows_fill_a_dimension() {
        for (k, n) in [(2u32, 3u32), (4, 2), (4, 3), (8, 2)] {
            let m = exact_log2(k).unwrap();
            for a in (1..=k).filter(|&a| graycode::ceil_log2(a.into()) == m) {
                let b = k.pow(n - 1).min(7);
                let Ok(g) = GridSpec::new(a, b) else { continue };
                let r = m;
                for p in labelled_view(&embed_grid(&g, &cube(k, n)).unwrap()).unwrap() {
                    assert_eq!(p.partition.row, bin_gray_encode(p.x.into(), r).unwrap());
                }
            }
        }
    }

    #[test]
    fn row_code_sits_in_low_bits_of_dimension_zero() {
        // With fewer row bits than a dimension holds, x keeps its Gray code
        // in the low bits of dimension 0 and the leading bits stay zero.
        for k in [4u32, 8, 16] {
            let m = exact_log2(k).unwrap();
            for a in 2..=k {
                let r = graycode::ceil_log2(a.into());
                let map = embed_grid(&grid(a, 2), &cube(k, 2)).unwrap();
                for p in labelled_view(&map).unwrap() {
                    let dim0 = p.label.slice(0, m as usize);
                    assert_eq!(
                        dim0.slice((m - r) as usize, m as usize),
                        bin_gray_encode(p.x.into(), r).unwrap()
                    );
                    assert!(dim0.slice(0, (m - r) as usize).bits().iter().all(|&b| !b));
                }
            }
        }
    }

    #[test]
    fn short_row_field_cannot_hold_row_code_and_stay_adjacent() {
        // k = 8, A = 3: three row digits whose labels start with gray(x, 2)
        // and that form a path in the 8-ring do not exist.
        let k = 8;
        let ring = cube(k, 1);
        let top2 = |d: u32| bin_gray_encode(d.into(), 3).unwrap().slice(0, 2);
        let mut found = false;
        for d0 in 0..k {
            for d1 in 0..k {
                for d2 in 0..k {
                    let ds = [d0, d1, d2];
                    let codes_ok = ds
                        .iter()
                        .enumerate()
                        .all(|(x, &d)| top2(d) == bin_gray_encode(x as u64, 2).unwrap());
                    let c = |d: u32| Coordinate::new(vec![d]);
                    let path_ok =
                        are_adjacent(&ring, &c(d0), &c(d1)) && are_adjacent(&ring, &c(d1), &c(d2));
                    found |= codes_ok && path_ok;
                }
            }
        }
        assert!(!found);
    }

    #[test]
    fn from_assignments_reports_offenders() {
        let bad = vec![Coordinate::new(vec![0, 0]), Coordinate::new(vec![0, 5])];
        let err = EmbeddingMap::from_assignments(grid(1, 2), cube(4, 2), bad).unwrap_err();
        match err {
            Error::Validation(list) => {
                assert_eq!(list.len(), 1);
                assert!(list[0].contains("(0,1)"), "{list:?}");
            }
            other => panic!("unexpected {other:?}"),
        }
        let short = vec![Coordinate::new(vec![0, 0])];
        assert!(EmbeddingMap::from_assignments(grid(1, 2), cube(4, 2), short).is_err());
    }
}
