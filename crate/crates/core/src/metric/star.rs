use std::f64::consts::PI;

use serde::Serialize;

use super::model::MetricGraphModel;
use super::MetricError;

/// Poles closer than this relative distance are treated as one.
const POLE_CLUSTER: f64 = 1e-12;

/// Metric star: `d ≥ 1` intervals glued at a common centre.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricStar {
    lengths: Vec<f64>,
}

impl MetricStar {
    pub fn new(lengths: Vec<f64>) -> Result<Self, MetricError> {
        if lengths.is_empty() || lengths.iter().any(|l| !(l.is_finite() && *l > 0.0)) {
            return Err(MetricError::InvalidStar);
        }
        Ok(MetricStar { lengths })
    }

    pub fn equilateral(d: usize, length: f64) -> Result<Self, MetricError> {
        Self::new(vec![length; d])
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn degree(&self) -> usize {
        self.lengths.len()
    }

    pub fn l_max(&self) -> f64 {
        self.lengths.iter().copied().fold(0.0, f64::max)
    }

    /// Model with the centre as vertex 0 and one leaf per branch.
    pub fn model(&self) -> MetricGraphModel {
        MetricGraphModel::star(&self.lengths).expect("valid star")
    }

    fn tangent_sum(&self, t: f64) -> f64 {
        self.lengths.iter().map(|l| (t * l).tan()).sum()
    }
}

/// A pole `t` of `Σ tan(t ℓ_e)` and the branches whose tangent blows up there.
struct Pole {
    t: f64,
    branches: usize,
}

/// `λ_0 = 0, λ_1, …, λ_{k_max}` of a metric star with free ends.
///
/// With `t = √λ`, an eigenfunction is `A_e cos(t(ℓ_e − x))` on branch `e`.
/// If the centre value is nonzero, `Σ_e tan(t ℓ_e) = 0`; the tangent sum
/// increases between consecutive poles, so each gap holds one simple root.
/// If the centre value vanishes, `t` is a pole and the branches `J` with
/// `cos(t ℓ_e) = 0` carry a space of dimension `|J| − 1`.
pub fn star_secular_solve(s: &MetricStar, k_max: usize) -> Result<Vec<f64>, MetricError> {
    let l_min = s.lengths.iter().copied().fold(f64::INFINITY, f64::min);
    let t_top = PI * (k_max as f64 + 2.0) / l_min;
    let poles = cluster_poles(s, t_top);

    let mut roots: Vec<f64> = vec![0.0];
    for p in &poles {
        roots.extend(std::iter::repeat(p.t * p.t).take(p.branches - 1));
    }
    for w in poles.windows(2) {
        let t = bisect_gap(s, w[0].t, w[1].t)?;
        roots.push(t * t);
    }
    roots.sort_by(f64::total_cmp);
    roots.truncate(k_max + 1);
    Ok(roots)
}

fn cluster_poles(s: &MetricStar, t_top: f64) -> Vec<Pole> {
    let mut raw: Vec<f64> = Vec::new();
    for &l in &s.lengths {
        let mut j = 0.0;
        loop {
            let t = (PI / 2.0 + PI * j) / l;
            if t > t_top {
                break;
            }
            raw.push(t);
            j += 1.0;
        }
    }
    raw.sort_by(f64::total_cmp);
    let mut poles: Vec<Pole> = Vec::new();
    for t in raw {
        match poles.last_mut() {
            Some(p) if (t - p.t) <= POLE_CLUSTER * t => p.branches += 1,
            _ => poles.push(Pole { t, branches: 1 }),
        }
    }
    poles
}

/// Root of the tangent sum in the open gap `(lo, hi)` between consecutive
/// poles, where it rises from `−∞` to `+∞`.
fn bisect_gap(s: &MetricStar, lo: f64, hi: f64) -> Result<f64, MetricError> {
    let (mut a, mut b) = (lo, hi);
    let (mut f_lo, mut f_hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let f = s.tangent_sum(mid);
        if f.is_nan() {
            return Err(MetricError::RootBracketFailure { lo, hi, f_lo, f_hi });
        }
        if f < 0.0 {
            a = mid;
            f_lo = f;
        } else {
            b = mid;
            f_hi = f;
        }
    }
    if !(f_lo <= 0.0 && f_hi >= 0.0) || a == lo && b == hi {
        return Err(MetricError::RootBracketFailure { lo, hi, f_lo, f_hi });
    }
    Ok(0.5 * (a + b))
}
