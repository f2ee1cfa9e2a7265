use std::fmt;
use std::str::FromStr;

use super::rotation::RotationSystem;
use super::EmbeddingError;

/// Benchmark embeddings with known genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `s × s` grid in the plane, genus 0.
    PlanarGrid,
    /// `s × s` grid with wrap-around rows and columns, genus 1 (`s ≥ 3`).
    ToroidalGrid,
    /// Cycle on `s` vertices with its two faces, genus 0 (`s ≥ 3`).
    Cycle,
    /// `K_4` drawn in the plane, genus 0; the size is ignored.
    CompletePlanarK4,
    /// Connected sum of two `s × s` toroidal grids glued along a square,
    /// genus 2 (`s ≥ 3`).
    DoubleTorusGrid,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::PlanarGrid,
        Family::ToroidalGrid,
        Family::Cycle,
        Family::CompletePlanarK4,
        Family::DoubleTorusGrid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::PlanarGrid => "planar_grid",
            Family::ToroidalGrid => "toroidal_grid",
            Family::Cycle => "cycle",
            Family::CompletePlanarK4 => "complete_planar_k4",
            Family::DoubleTorusGrid => "double_torus_grid",
        }
    }

    pub fn genus(self) -> usize {
        match self {
            Family::PlanarGrid | Family::Cycle | Family::CompletePlanarK4 => 0,
            Family::ToroidalGrid => 1,
            Family::DoubleTorusGrid => 2,
        }
    }

    pub fn min_size(self) -> usize {
        match self {
            Family::PlanarGrid => 2,
            Family::CompletePlanarK4 => 0,
            Family::ToroidalGrid | Family::Cycle | Family::DoubleTorusGrid => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = EmbeddingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| EmbeddingError::UnknownFamily(s.to_string()))
    }
}

/// Rotation system of the named family at the given size.
pub fn family_generator(family: Family, size: usize) -> Result<RotationSystem, EmbeddingError> {
    if size < family.min_size() {
        return Err(EmbeddingError::FamilySize {
            family: family.name(),
            size,
            min: family.min_size(),
        });
    }
    let (n, faces) = match family {
        Family::PlanarGrid => planar_grid_faces(size),
        Family::ToroidalGrid => (size * size, torus_faces(size)),
        Family::Cycle => {
            let walk: Vec<usize> = (0..size).collect();
            let back: Vec<usize> = walk.iter().rev().copied().collect();
            (size, vec![walk, back])
        }
        Family::CompletePlanarK4 => (4, vec![vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3], vec![0, 2, 1]]),
        Family::DoubleTorusGrid => double_torus_faces(size),
    };
    RotationSystem::from_oriented_faces(n, &faces)
}

/// Looks a family up by name.
pub fn family_by_name(name: &str, size: usize) -> Result<RotationSystem, EmbeddingError> {
    family_generator(name.parse()?, size)
}

fn square(s: usize, i: usize, j: usize) -> Vec<usize> {
    let at = |a: usize, b: usize| (a % s) * s + (b % s);
    vec![at(i, j), at(i, j + 1), at(i + 1, j + 1), at(i + 1, j)]
}

fn torus_faces(s: usize) -> Vec<Vec<usize>> {
    (0..s).flat_map(|i| (0..s).map(move |j| square(s, i, j))).collect()
}

fn planar_grid_faces(s: usize) -> (usize, Vec<Vec<usize>>) {
    let mut faces: Vec<Vec<usize>> = (0..s - 1)
        .flat_map(|i| (0..s - 1).map(move |j| square(s, i, j)))
        .collect();
    // Outer face runs against the squares: top row leftwards, left column
    // down, bottom row rightwards, right column up.
    let at = |i: usize, j: usize| i * s + j;
    let mut outer = Vec::with_capacity(4 * (s - 1));
    outer.extend((1..s).rev().map(|j| at(0, j)));
    outer.extend((0..s - 1).map(|i| at(i, 0)));
    outer.extend((0..s - 1).map(|j| at(s - 1, j)));
    outer.extend((1..s).rev().map(|i| at(i, s - 1)));
    faces.push(outer);
    (s * s, faces)
}

fn double_torus_faces(s: usize) -> (usize, Vec<Vec<usize>>) {
    let m = s * s;
    let removed = square(s, 0, 0);
    // Second torus: its square [b0, b1, b2, b3] at the origin is glued onto
    // [a0, a3, a2, a1] so the orientations agree; other vertices shift past
    // the first torus.
    let glue = [removed[0], removed[3], removed[2], removed[1]];
    let mut relabel = vec![usize::MAX; m];
    for (k, &b) in removed.iter().enumerate() {
        relabel[b] = glue[k];
    }
    let mut next = m;
    for slot in relabel.iter_mut().filter(|x| **x == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut faces: Vec<Vec<usize>> = torus_faces(s).into_iter().skip(1).collect();
    faces.extend(
        torus_faces(s)
            .into_iter()
            .skip(1)
            .map(|f| f.into_iter().map(|v| relabel[v]).collect()),
    );
    (next, faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::rotation::{euler_genus, trace_faces};

    #[test]
    fn every_family_has_its_genus() {
        for family in Family::ALL {
            for size in [3, 4, 6] {
                let r = family_generator(family, size).unwrap();
                assert_eq!(euler_genus(&r).unwrap(), family.genus(), "{family} {size}");
            }
        }
    }

    #[test]
    fn torus_4_counts() {
        let r = family_generator(Family::ToroidalGrid, 4).unwrap();
        assert_eq!((r.vertex_count(), r.edge_count()), (16, 32));
        let faces = trace_faces(&r);
        assert_eq!(faces.len(), 16);
        assert!(faces.iter().all(|f| f.len() == 4));
        assert!((0..16).all(|v| r.graph().valence(v) == 4));
    }

    #[test]
    fn planar_grid_5() {
        let r = family_generator(Family::PlanarGrid, 5).unwrap();
        assert_eq!(r.vertex_count(), 25);
        assert_eq!(r.edge_count(), 40);
        assert_eq!(euler_genus(&r).unwrap(), 0);
    }

    #[test]
    fn cycle_7() {
        let r = family_generator(Family::Cycle, 7).unwrap();
        assert_eq!(trace_faces(&r).len(), 2);
        assert_eq!(euler_genus(&r).unwrap(), 0);
    }

    #[test]
    fn double_torus_counts() {
        let s = 4;
        let r = family_generator(Family::DoubleTorusGrid, s).unwrap();
        assert_eq!(r.vertex_count(), 2 * s * s - 4);
        assert_eq!(r.edge_count(), 4 * s * s - 4);
        assert_eq!(trace_faces(&r).len(), 2 * s * s - 2);
    }

    #[test]
    fn names_round_trip() {
        for family in Family::ALL {
            assert_eq!(family.name().parse::<Family>().unwrap(), family);
        }
        assert!(matches!("moebius".parse::<Family>(), Err(EmbeddingError::UnknownFamily(_))));
        assert!(matches!(
            family_generator(Family::ToroidalGrid, 2),
            Err(EmbeddingError::FamilySize { .. })
        ));
    }
}
