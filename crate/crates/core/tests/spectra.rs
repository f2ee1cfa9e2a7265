mod common;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;
use spectral_transfer::graph::cartesian_product;
use spectral_transfer::laplacian::{normalized_spectrum, rayleigh_quotient, standard_laplacian, standard_spectrum};
use spectral_transfer::linalg::{eigenvalues, SymMatrix, DEFAULT_TOLERANCE};
use spectral_transfer::WeightedGraph;

// Exact polynomial arithmetic, coefficients in ascending order.
type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn is_zero(p: &Poly) -> bool {
    p.iter().all(Zero::is_zero)
}

fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect())
}

fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = trim(a.clone());
    let b = trim(b.clone());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() && !is_zero(&r) {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * c;
        }
        q[shift] = f;
        r.pop();
        r = trim(r);
        if r.is_empty() {
            r.push(BigRational::zero());
        }
    }
    (trim(q), r)
}

fn monic(p: &Poly) -> Poly {
    let lead = p.last().unwrap().clone();
    p.iter().map(|c| c / &lead).collect()
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !is_zero(&b) {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

/// Yun's square-free factorization: `p = Π_m f_m^m`, returned as `(m, f_m)`
/// for the non-constant factors.
fn yun(p: &Poly) -> Vec<(usize, Poly)> {
    let mut out = Vec::new();
    let dp = derivative(p);
    let a0 = gcd(p, &dp);
    let mut b = div_rem(p, &a0).0;
    let mut c = div_rem(&dp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut m = 1;
    while b.len() > 1 {
        let a = gcd(&b, &d);
        if a.len() > 1 {
            out.push((m, a.clone()));
        }
        b = div_rem(&b, &a).0;
        c = div_rem(&d, &a).0;
        d = sub(&c, &derivative(&b));
        m += 1;
    }
    out
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn eval(p: &Poly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), derivative(p)];
    while !is_zero(chain.last().unwrap()) {
        let n = chain.len();
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        if is_zero(&r) {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn sign_changes(chain: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct roots of the square-free `p` in `(lo, hi]`.
fn count_roots(chain: &[Poly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_changes(chain, lo) - sign_changes(chain, hi)
}

/// `det(xI − A)` for a small integer matrix (Faddeev–LeVerrier).
fn char_poly(a: &[Vec<i64>]) -> Poly {
    let n = a.len();
    let mul = |x: &[Vec<i64>], y: &[Vec<i64>]| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum()).collect())
            .collect()
    };
    let mut coeffs = vec![0i64; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0i64; n]; n];
    for k in 1..=n {
        for i in 0..n {
            m[i][i] += coeffs[n - k + 1];
        }
        let am = mul(a, &m);
        let trace: i64 = (0..n).map(|i| am[i][i]).sum();
        assert_eq!(trace % k as i64, 0);
        coeffs[n - k] = -trace / k as i64;
        m = am;
    }
    coeffs.into_iter().map(|c| BigRational::from_integer(c.into())).collect()
}

/// Checks computed eigenvalues against the exact roots of the
/// characteristic polynomial: every window `[μ − tol, μ + tol]` (merged
/// where they overlap) holds exactly as many roots, with multiplicity, as
/// computed values.
fn check_against_char_poly(a: &[Vec<i64>], tol: f64) {
    let rows: Vec<Vec<f64>> = a.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    let spec = eigenvalues(&SymMatrix::from_rows(&rows).unwrap(), DEFAULT_TOLERANCE).unwrap();
    let factors: Vec<(usize, Vec<Poly>)> = yun(&char_poly(a)).into_iter().map(|(m, f)| (m, sturm_chain(&f))).collect();
    let mut windows: Vec<(f64, f64, usize)> = Vec::new();
    for &mu in &spec.values {
        match windows.last_mut() {
            Some(w) if mu - tol <= w.1 => {
                w.1 = mu + tol;
                w.2 += 1;
            }
            _ => windows.push((mu - tol, mu + tol, 1)),
        }
    }
    for (lo, hi, expected) in windows {
        let (lo, hi) = (BigRational::from_float(lo).unwrap(), BigRational::from_float(hi).unwrap());
        let exact: usize = factors.iter().map(|(m, chain)| m * count_roots(chain, &lo, &hi)).sum();
        assert_eq!(exact, expected, "matrix {a:?}, spectrum {:?}", spec.values);
    }
}

fn symmetric_from(order: usize, entries: &[i64]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; order]; order];
    let mut it = entries.iter();
    for i in 0..order {
        for j in i..order {
            let v = *it.next().unwrap();
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    a
}

#[test]
fn polynomial_helpers() {
    let r = |x: i64| BigRational::from_integer(x.into());
    // (x − 1)² (x + 2) = x³ − 3x + 2
    let p = vec![r(2), r(-3), r(0), r(1)];
    let f = yun(&p);
    assert_eq!(f.len(), 2);
    assert_eq!(f[0], (1, vec![r(2), r(1)]));
    assert_eq!(f[1], (2, vec![r(-1), r(1)]));
    let chain = sturm_chain(&f[0].1);
    assert_eq!(count_roots(&chain, &r(-3), &r(0)), 1);
    assert_eq!(char_poly(&[vec![0, 1], vec![1, 0]]), vec![r(-1), r(0), r(1)]);
}

#[test]
fn eigenvalues_match_char_poly_exhaustively_up_to_order_three() {
    let values: Vec<i64> = (-3..=3).collect();
    for order in 1..=3usize {
        let free = order * (order + 1) / 2;
        let total = values.len().pow(free as u32);
        for code in 0..total {
            let mut c = code;
            let entries: Vec<i64> = (0..free)
                .map(|_| {
                    let v = values[c % values.len()];
                    c /= values.len();
                    v
                })
                .collect();
            check_against_char_poly(&symmetric_from(order, &entries), 1e-8);
        }
    }
}

#[test]
fn eigenvalues_match_char_poly_on_sampled_order_four() {
    let mut rng = common::rng(4);
    for _ in 0..20_000 {
        let entries: Vec<i64> = (0..10).map(|_| rng.gen_range(-3..=3)).collect();
        check_against_char_poly(&symmetric_from(4, &entries), 1e-8);
    }
}

#[test]
fn product_spectra_are_sums() {
    let corpus = common::small_graph_corpus();
    for (n1, g1) in &corpus {
        for (n2, g2) in &corpus {
            let prod = cartesian_product(g1, g2).unwrap();
            let s1 = standard_spectrum(g1, DEFAULT_TOLERANCE).unwrap().values;
            let s2 = standard_spectrum(g2, DEFAULT_TOLERANCE).unwrap().values;
            let mut sums: Vec<f64> = s1.iter().flat_map(|a| s2.iter().map(move |b| a + b)).collect();
            sums.sort_by(f64::total_cmp);
            let got = standard_spectrum(&prod, DEFAULT_TOLERANCE).unwrap().values;
            assert_eq!(got.len(), sums.len(), "{n1} x {n2}");
            for (x, y) in got.iter().zip(&sums) {
                assert!((x - y).abs() <= 1e-8, "{n1} x {n2}: {x} vs {y}");
            }
        }
    }
}

fn graph_strategy(weighted: bool) -> impl Strategy<Value = WeightedGraph> {
    (2usize..14, 0usize..20, any::<u64>())
        .prop_map(move |(n, extra, seed)| common::random_connected_graph(&mut common::rng(seed), n, extra, weighted))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn standard_rows_sum_to_zero(g in graph_strategy(true)) {
        let l = standard_laplacian(&g);
        let d_max = g.degrees().into_iter().fold(0.0, f64::max);
        for i in 0..g.n() {
            let s: f64 = l.row(i).iter().sum();
            prop_assert!(s.abs() <= 1e-12 * d_max);
        }
    }

    #[test]
    fn normalized_spectrum_in_range(g in graph_strategy(true)) {
        let s = normalized_spectrum(&g, DEFAULT_TOLERANCE).unwrap();
        let tol = 1e-10;
        prop_assert!(s.values.iter().all(|&x| (-tol..=2.0 + tol).contains(&x)));
        prop_assert!(s.values[0].abs() <= tol);
        prop_assert!(s.values[1] > tol);
    }

    #[test]
    fn zero_multiplicity_counts_components(
        parts in proptest::collection::vec((2usize..7, 0usize..6, any::<u64>()), 1..4)
    ) {
        let mut g = WeightedGraph::empty(0);
        for &(n, extra, seed) in &parts {
            g = g.disjoint_union(&common::random_connected_graph(&mut common::rng(seed), n, extra, true));
        }
        let s = normalized_spectrum(&g, DEFAULT_TOLERANCE).unwrap();
        let zeros = s.values.iter().filter(|x| x.abs() <= 1e-9).count();
        prop_assert_eq!(zeros, parts.len());
        prop_assert_eq!(g.component_count(), parts.len());
    }

    #[test]
    fn standard_and_normalized_are_comparable(g in graph_strategy(false)) {
        let nr = normalized_spectrum(&g, DEFAULT_TOLERANCE).unwrap().values;
        let st = standard_spectrum(&g, DEFAULT_TOLERANCE).unwrap().values;
        let (d_min, d_max) = (g.min_valence() as f64, g.max_valence() as f64);
        for (a, b) in nr.iter().zip(&st) {
            prop_assert!(d_min * a <= b + 1e-9 && *b <= d_max * a + 1e-9, "{} {} {} {}", d_min, a, b, d_max);
        }
    }

    #[test]
    fn rayleigh_above_fiedler(g in graph_strategy(true), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let d = g.degrees();
        let mut f: Vec<f64> = (0..g.n()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mean = f.iter().zip(&d).map(|(x, w)| x * w).sum::<f64>() / d.iter().sum::<f64>();
        f.iter_mut().for_each(|x| *x -= mean);
        prop_assume!(f.iter().any(|x| x.abs() > 1e-6));
        let q = rayleigh_quotient(&g, &f).unwrap();
        let s = normalized_spectrum(&g, DEFAULT_TOLERANCE).unwrap();
        prop_assert!(q >= s.values[1] - 1e-10 && q <= 2.0 + 1e-12);
    }

    #[test]
    fn eigenvalues_are_deterministic(g in graph_strategy(true)) {
        let a = normalized_spectrum(&g, DEFAULT_TOLERANCE).unwrap();
        let b = normalized_spectrum(&g, DEFAULT_TOLERANCE).unwrap();
        prop_assert_eq!(a.values, b.values);
    }
}
