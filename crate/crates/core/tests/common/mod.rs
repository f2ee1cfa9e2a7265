#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_transfer::cover::{interval_cover_builder, TwoFoldCover};
use spectral_transfer::embedding::RotationSystem;
use spectral_transfer::metric::MetricGraphModel;
use spectral_transfer::WeightedGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `|a − b| ≤ abs + rel·|b|`.
#[track_caller]
pub fn assert_close(a: f64, b: f64, abs: f64, rel: f64) {
    assert!((a - b).abs() <= abs + rel * b.abs(), "{a} vs {b} (abs {abs}, rel {rel})");
}

#[track_caller]
pub fn assert_all_close(a: &[f64], b: &[f64], abs: f64) {
    assert_eq!(a.len(), b.len(), "length mismatch");
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        assert!((x - y).abs() <= abs, "index {i}: {x} vs {y}");
    }
}

/// Ordinary least squares `y ≈ a + b x`; returns `(b, standard error of b)`.
pub fn regression(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = xs.iter().zip(ys).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
    let se = if xs.len() > 2 { (sse / (n - 2.0) / sxx).sqrt() } else { 0.0 };
    (slope, se)
}

/// `m` sorted random points in `(0, length)` at least `gap` apart.
fn sorted_points(rng: &mut ChaCha8Rng, m: usize, length: f64, gap: f64) -> Vec<f64> {
    loop {
        let mut p: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..length)).collect();
        p.sort_by(f64::total_cmp);
        let ok = p.windows(2).all(|w| w[1] - w[0] > gap)
            && p[0] > gap
            && length - p[m - 1] > gap;
        if ok {
            return p;
        }
    }
}

/// Exact two-fold circle cover by the arcs `[p_i, p_{i+2}]` over `m ≥ 3`
/// random break points.
pub fn random_circle_cover(rng: &mut ChaCha8Rng, m: usize, length: f64) -> TwoFoldCover {
    let p = sorted_points(rng, m, length, 1e-3 * length);
    let arcs: Vec<(f64, f64)> = (0..m)
        .map(|i| {
            let a = p[i];
            let mut b = p[(i + 2) % m];
            if b <= a {
                b += length;
            }
            ((a + b) / 2.0, (b - a) / 2.0)
        })
        .collect();
    interval_cover_builder(length, &arcs, true).expect("valid circle cover")
}

/// Exact two-fold interval cover `[0, p_1], [p_{i−1}, p_{i+1}], [p_{m−1}, L]`
/// over `m − 1 ≥ 1` random interior break points.
pub fn random_interval_cover(rng: &mut ChaCha8Rng, m: usize, length: f64) -> TwoFoldCover {
    let mut p = vec![0.0];
    p.extend(sorted_points(rng, m - 1, length, 1e-3 * length));
    p.push(length);
    let mut arcs = vec![(p[1] / 2.0, p[1] / 2.0)];
    for i in 1..m {
        arcs.push(((p[i - 1] + p[i + 1]) / 2.0, (p[i + 1] - p[i - 1]) / 2.0));
    }
    arcs.push(((p[m - 1] + length) / 2.0, (length - p[m - 1]) / 2.0));
    interval_cover_builder(length, &arcs, false).expect("valid interval cover")
}

/// Equal arcs `[iL/n, (i+2)L/n]` on a circle of length `length`.
pub fn equal_circle_cover(n: usize, length: f64) -> TwoFoldCover {
    let step = length / n as f64;
    let arcs: Vec<(f64, f64)> = (0..n).map(|i| ((i as f64 + 1.0) * step, step)).collect();
    interval_cover_builder(length, &arcs, true).expect("valid equal cover")
}

/// Random spanning tree plus extra edges, as vertex pairs.
pub fn random_connected_pairs(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let j = rng.gen_range(0..i);
            (order[i].min(order[j]), order[i].max(order[j]))
        })
        .collect();
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !pairs.contains(&(a.min(b), a.max(b))) {
            pairs.push((a.min(b), a.max(b)));
        }
    }
    pairs
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize, weighted: bool) -> WeightedGraph {
    let pairs = random_connected_pairs(rng, n, extra);
    let edges: Vec<(usize, usize, f64)> = pairs
        .into_iter()
        .map(|(a, b)| (a, b, if weighted { rng.gen_range(0.2..3.0) } else { 1.0 }))
        .collect();
    WeightedGraph::new(n, edges).expect("valid random graph")
}

/// Connected simple model with every length in `[1, 2]`.
pub fn random_balanced_model(rng: &mut ChaCha8Rng, n: usize) -> MetricGraphModel {
    let extra = rng.gen_range(0..=n);
    let pairs = random_connected_pairs(rng, n, extra);
    let edges = pairs.into_iter().map(|(a, b)| (a, b, rng.gen_range(1.0..=2.0))).collect();
    let m = MetricGraphModel::new(n, edges).expect("valid random model");
    assert!(m.is_length_balanced());
    m
}

/// Random cyclic orders on a random connected simple graph.
pub fn random_rotation_system(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> RotationSystem {
    let pairs = random_connected_pairs(rng, n, extra);
    let mut orders = vec![Vec::new(); n];
    for &(a, b) in &pairs {
        orders[a].push(b);
        orders[b].push(a);
    }
    for o in &mut orders {
        o.shuffle(rng);
    }
    RotationSystem::from_neighbor_orders(&orders).expect("valid rotation system")
}

/// Small graph corpus: paths, cycles, stars and complete graphs on at most
/// five vertices.
pub fn small_graph_corpus() -> Vec<(String, WeightedGraph)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push((format!("P{n}"), WeightedGraph::path(n)));
        out.push((format!("K{n}"), WeightedGraph::complete(n)));
    }
    for n in 3..=5 {
        out.push((format!("C{n}"), WeightedGraph::cycle(n)));
    }
    for d in 1..=4 {
        out.push((format!("S{d}"), WeightedGraph::star(d)));
    }
    out
}

/// Minimum of `cut(S) / min(vol S, vol S̄)` over all proper nonempty
/// vertex subsets, by enumeration. Vertex `n − 1` is fixed outside `S`.
pub fn brute_force_conductance(g: &WeightedGraph) -> f64 {
    let n = g.n();
    assert!((2..=20).contains(&n), "enumeration is exponential");
    let deg = g.degrees();
    let total: f64 = deg.iter().sum();
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << (n - 1)) {
        let inside = |v: usize| mask >> v & 1 == 1;
        let vol: f64 = (0..n).filter(|&v| inside(v)).map(|v| deg[v]).sum();
        let cut: f64 = g.edges().iter().filter(|e| inside(e.u) != inside(e.v)).map(|e| e.w).sum();
        best = best.min(cut / vol.min(total - vol));
    }
    best
}

/// Unit cycles, unit stars, the theta graph and `random` random balanced
/// models on at most 12 vertices.
pub fn model_suite(random: usize) -> Vec<(String, MetricGraphModel)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((format!("C{n}"), MetricGraphModel::cycle(n, 1.0).unwrap()));
    }
    for d in 2..=10 {
        out.push((format!("S{d}"), MetricGraphModel::star(&vec![1.0; d]).unwrap()));
    }
    out.push(("theta".to_string(), MetricGraphModel::theta(1.0).unwrap()));
    let mut rng = rng(36);
    for i in 0..random {
        let n = rng.gen_range(2..=12);
        out.push((format!("random{i}"), random_balanced_model(&mut rng, n)));
    }
    out
}
