//! Reference constructions that share no code with the library.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

/// Binary reflected Gray code by list reflection: prefix 0 to the previous
/// list, then 1 to the same list reversed.
pub fn reflected_binary_list(width: u32) -> Vec<String> {
    let mut list = vec![String::new()];
    for _ in 0..width {
        let mut next: Vec<String> = list.iter().map(|s| format!("0{s}")).collect();
        next.extend(list.iter().rev().map(|s| format!("1{s}")));
        list = next;
    }
    list
}

/// Reflected base-k Gray code by list reflection: leading digit v is followed
/// by the shorter list forward when v is even and reversed when v is odd.
pub fn reflected_kary_list(k: u32, d: u32) -> Vec<Vec<u32>> {
    let mut list = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for v in 0..k {
            let tails: Box<dyn Iterator<Item = &Vec<u32>>> = if v % 2 == 0 {
                Box::new(list.iter())
            } else {
                Box::new(list.iter().rev())
            };
            for t in tails {
                let mut tuple = vec![v];
                tuple.extend_from_slice(t);
                next.push(tuple);
            }
        }
        list = next;
    }
    list
}

/// Base-k digit tuples of every node, lexicographic.
pub fn all_nodes(k: u32, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..k).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Neighbors by the ring rule, written out independently.
pub fn ring_neighbors(k: u32, node: &[u32]) -> HashSet<Vec<u32>> {
    let mut out = HashSet::new();
    for dim in 0..node.len() {
        for delta in [1, k - 1] {
            let mut nb = node.to_vec();
            nb[dim] = (nb[dim] + delta) % k;
            out.insert(nb);
        }
    }
    out
}

/// Shortest-path lengths from `src` to every node by breadth-first search,
/// indexed by the lexicographic position of the node.
pub fn bfs_distances(k: u32, n: u32, src: &[u32]) -> Vec<u64> {
    let count = u64::from(k).pow(n) as usize;
    let encode = |t: &[u32]| {
        t.iter()
            .fold(0usize, |acc, &d| acc * k as usize + d as usize)
    };
    let decode = |mut i: usize| {
        let mut t = vec![0u32; n as usize];
        for slot in t.iter_mut().rev() {
            *slot = (i % k as usize) as u32;
            i /= k as usize;
        }
        t
    };
    let mut dist = vec![u64::MAX; count];
    dist[encode(src)] = 0;
    let mut queue = VecDeque::from([encode(src)]);
    while let Some(u) = queue.pop_front() {
        for v in ring_neighbors(k, &decode(u)) {
            let v = encode(&v);
            if dist[v] == u64::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    assert!(dist.iter().all(|&d| d != u64::MAX));
    dist
}

/// Checks an x-major assignment directly: distinct nodes, and every mesh edge
/// maps to nodes differing by exactly one in exactly one digit (no wrap).
pub fn brute_force_no_wrap_isomorphic(
    rows: u32,
    cols: u32,
    assign: &[Vec<u32>],
) -> Result<(), String> {
    let distinct: HashSet<&Vec<u32>> = assign.iter().collect();
    if distinct.len() != assign.len() {
        return Err("two grid points share a node".into());
    }
    let at = |x: u32, y: u32| &assign[(x * cols + y) as usize];
    let step_ok = |a: &[u32], b: &[u32]| {
        let diffs: Vec<u32> = a
            .iter()
            .zip(b)
            .filter(|(p, q)| p != q)
            .map(|(p, q)| p.abs_diff(*q))
            .collect();
        diffs == [1]
    };
    for x in 0..rows {
        for y in 0..cols {
            if y + 1 < cols && !step_ok(at(x, y), at(x, y + 1)) {
                return Err(format!(
                    "row edge ({x},{y})-({x},{}) is not a unit step",
                    y + 1
                ));
            }
            if x + 1 < rows && !step_ok(at(x, y), at(x + 1, y)) {
                return Err(format!(
                    "column edge ({x},{y})-({},{y}) is not a unit step",
                    x + 1
                ));
            }
        }
    }
    Ok(())
}
