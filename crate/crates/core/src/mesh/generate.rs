//! Structured test meshes.

use super::{MeshError, SimplicialMesh};

/// Tensor grid with nodes `xs × ys`; each cell is split along the diagonal
/// from its lower-left to its upper-right corner. Vertex `(i, j)` is
/// `j·xs.len() + i`.
pub fn graded_grid(xs: &[f64], ys: &[f64]) -> Result<SimplicialMesh, MeshError> {
    let (coords, simplices) = grid_parts(xs, ys);
    SimplicialMesh::new(2, coords, simplices, Vec::new())
}

fn grid_parts(xs: &[f64], ys: &[f64]) -> (Vec<[f64; 3]>, Vec<Vec<usize>>) {
    let nx = xs.len();
    let coords = ys.iter().flat_map(|&y| xs.iter().map(move |&x| [x, y, 0.0])).collect();
    let mut simplices = Vec::new();
    for j in 0..ys.len().saturating_sub(1) {
        for i in 0..nx.saturating_sub(1) {
            let a = j * nx + i;
            let (b, c, d) = (a + 1, a + nx + 1, a + nx);
            simplices.push(vec![a, b, c]);
            simplices.push(vec![a, c, d]);
        }
    }
    (coords, simplices)
}

fn uniform_nodes(count: usize, length: f64) -> Vec<f64> {
    (0..=count).map(|i| length * i as f64 / count as f64).collect()
}

/// Unit square cut into `s × s` squares, `2s²` triangles.
pub fn unit_square(s: usize) -> Result<SimplicialMesh, MeshError> {
    let nodes = uniform_nodes(s, 1.0);
    graded_grid(&nodes, &nodes)
}

/// A single row of `len` unit squares, `2·len` triangles.
pub fn strip(len: usize) -> Result<SimplicialMesh, MeshError> {
    graded_grid(&uniform_nodes(len, len as f64), &[0.0, 1.0])
}

/// Unit square with opposite sides identified: a flat torus with `2s²`
/// triangles and no boundary. Needs `s ≥ 2`.
pub fn periodic_square(s: usize) -> Result<SimplicialMesh, MeshError> {
    let nodes = uniform_nodes(s, 1.0);
    let (coords, simplices) = grid_parts(&nodes, &nodes);
    let at = |i: usize, j: usize| j * (s + 1) + i;
    let mut pairs = Vec::with_capacity(2 * (s + 1));
    for k in 0..=s {
        pairs.push((at(0, k), at(s, k)));
        pairs.push((at(k, 0), at(k, s)));
    }
    SimplicialMesh::new(2, coords, simplices, pairs)
}

/// Unit cube cut into `s³` cubes of six tetrahedra each.
pub fn unit_cube(s: usize) -> Result<SimplicialMesh, MeshError> {
    let n = s + 1;
    let at = |i: usize, j: usize, k: usize| (k * n + j) * n + i;
    let h = 1.0 / s as f64;
    let mut coords = Vec::with_capacity(n * n * n);
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                coords.push([i as f64 * h, j as f64 * h, k as f64 * h]);
            }
        }
    }
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut simplices = Vec::with_capacity(6 * s * s * s);
    for k in 0..s {
        for j in 0..s {
            for i in 0..s {
                for order in ORDERS {
                    let mut p = [i, j, k];
                    let mut tet = vec![at(p[0], p[1], p[2])];
                    for axis in order {
                        p[axis] += 1;
                        tet.push(at(p[0], p[1], p[2]));
                    }
                    simplices.push(tet);
                }
            }
        }
    }
    SimplicialMesh::new(3, coords, simplices, Vec::new())
}
