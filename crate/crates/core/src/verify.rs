//! Independent measurement of an embedding map, plus an exhaustive
//! backtracking search used as ground truth on small instances.
//!
//! Nothing here relies on how [`crate::embedding::embed_grid`] builds its
//! maps; every metric is recomputed from the assignment and the torus
//! distance.

use std::collections::HashMap;

use num_rational::Ratio;
use serde::Serialize;

use crate::embedding::{EmbeddingMap, GridSpec};
use crate::error::Result;
use crate::topology::{self, Coordinate, CubeSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub injective: bool,
    pub dilation: u64,
    pub load: u64,
    pub congestion: u64,
    /// Cube nodes per grid point, serialized as `[numerator, denominator]`.
    pub expansion: Ratio<u64>,
    pub isomorphic: bool,
}

/// The host-edge path a grid edge is routed over.
///
/// Dimensions are corrected in ascending order, each along the shorter way
/// round its ring; when both ways are equally long the non-wrapping direction
/// is taken. Returns the cube edges as pairs of dense node indices, low first.
pub fn route(cube: &CubeSpec, from: &Coordinate, to: &Coordinate) -> Vec<(u64, u64)> {
    let k = cube.k();
    let mut here = from.digits().to_vec();
    let mut path = Vec::new();
    for dim in 0..here.len() {
        let target = to.digits()[dim];
        let up = (target + k - here[dim]) % k;
        let down = (here[dim] + k - target) % k;
        let step_up = match up.cmp(&down) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            // Tie: moving up wraps iff the target lies below the current digit.
            std::cmp::Ordering::Equal => target > here[dim],
        };
        while here[dim] != target {
            let before = cube.index_of(&Coordinate::new(here.clone()));
            here[dim] = if step_up {
                (here[dim] + 1) % k
            } else {
                (here[dim] + k - 1) % k
            };
            let after = cube.index_of(&Coordinate::new(here.clone()));
            path.push((before.min(after), before.max(after)));
        }
    }
    path
}

/// Measure injectivity, dilation, load, congestion and expansion of a map.
pub fn verify(map: &EmbeddingMap) -> EmbeddingReport {
    let grid = map.grid();
    let cube = map.cube();
    let assign = map.assignments();

    let mut per_node: HashMap<&Coordinate, u64> = HashMap::new();
    for coord in assign {
        *per_node.entry(coord).or_default() += 1;
    }
    let load = per_node.values().copied().max().unwrap_or(0);
    let injective = load <= 1;

    let mut dilation = 0;
    let mut per_edge: HashMap<(u64, u64), u64> = HashMap::new();
    for (u, v) in grid.edges() {
        let (a, b) = (&assign[u], &assign[v]);
        dilation = dilation.max(topology::torus_distance(cube, a, b));
        for edge in route(cube, a, b) {
            *per_edge.entry(edge).or_default() += 1;
        }
    }
    let congestion = per_edge.values().copied().max().unwrap_or(0);

    EmbeddingReport {
        injective,
        dilation,
        load,
        congestion,
        expansion: Ratio::new(cube.node_count(), grid.point_count()),
        isomorphic: injective && dilation == 1,
    }
}

pub fn is_isomorphic_embedding(map: &EmbeddingMap) -> bool {
    verify(map).isomorphic
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(EmbeddingMap),
    /// The search space was exhausted: no isomorphic embedding exists.
    None,
    /// The step budget ran out before the search finished.
    BudgetExhausted,
}

impl OracleOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            OracleOutcome::Found(_) => "found",
            OracleOutcome::None => "none",
            OracleOutcome::BudgetExhausted => "budget_exhausted",
        }
    }
}

struct Search<'a> {
    grid: &'a GridSpec,
    cube: &'a CubeSpec,
    /// Neighbor lists by dense node index, each in lexicographic order.
    adjacency: Vec<Vec<usize>>,
    used: Vec<bool>,
    placed: Vec<usize>,
    budget: u64,
    steps: u64,
}

enum Step {
    Done,
    DeadEnd,
    OutOfBudget,
}

impl Search<'_> {
    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    fn place(&mut self, point: usize) -> Step {
        if point == self.placed.len() && point as u64 == self.grid.point_count() {
            return Step::Done;
        }
        let cols = self.grid.cols() as usize;
        let (x, y) = (point / cols, point % cols);
        let left = (y > 0).then(|| self.placed[point - 1]);
        let up = (x > 0).then(|| self.placed[point - cols]);

        // Only neighbors of an already placed grid neighbor can work; the
        // lexicographic order of the candidates is the same either way.
        let candidates: Vec<usize> = match left.or(up) {
            Some(anchor) => self.adjacency[anchor].clone(),
            None => (0..self.used.len()).collect(),
        };
        for node in candidates {
            if self.used[node] {
                continue;
            }
            if left.is_some_and(|l| !self.adjacent(l, node))
                || up.is_some_and(|u| !self.adjacent(u, node))
            {
                continue;
            }
            if self.steps == self.budget {
                return Step::OutOfBudget;
            }
            self.steps += 1;
            self.used[node] = true;
            self.placed.push(node);
            match self.place(point + 1) {
                Step::DeadEnd => {}
                other => return other,
            }
            self.placed.pop();
            self.used[node] = false;
        }
        Step::DeadEnd
    }
}

/// Depth-first search for an isomorphic embedding.
///
/// Grid points are placed in x-major order and candidate nodes are tried in
/// lexicographic order, so the first embedding found is always the same one.
/// Each tentative placement costs one step of `node_budget`.
pub fn oracle_search(grid: &GridSpec, cube: &CubeSpec, node_budget: u64) -> Result<OracleOutcome> {
    if grid.point_count() > cube.node_count() {
        return Ok(OracleOutcome::None);
    }
    let adjacency = topology::nodes(cube)
        .map(|c| {
            let mut list: Vec<usize> = topology::neighbors(cube, &c)
                .iter()
                .map(|nb| cube.index_of(nb) as usize)
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    let mut search = Search {
        grid,
        cube,
        adjacency,
        used: vec![false; cube.node_count() as usize],
        placed: Vec::with_capacity(grid.point_count() as usize),
        budget: node_budget,
        steps: 0,
    };
    Ok(match search.place(0) {
        Step::Done => {
            let assign = search
                .placed
                .iter()
                .map(|&i| search.cube.coordinate_at(i as u64))
                .collect();
            OracleOutcome::Found(EmbeddingMap::from_assignments(*grid, *cube, assign)?)
        }
        Step::DeadEnd => OracleOutcome::None,
        Step::OutOfBudget => OracleOutcome::BudgetExhausted,
    })
}
