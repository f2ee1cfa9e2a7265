use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use spectral_transfer::cover::{
    check_transfer, cover_laplacian, gram_identity_defect, Cell, Intersection, NeumannProfile, TransferReport,
    TwoFoldCover,
};
use spectral_transfer::embedding::{family_by_name, genus_bound_evaluate, GenusBoundReport, RotationSystem};
use spectral_transfer::laplacian::{normalized_spectrum, standard_spectrum};
use spectral_transfer::linalg::{eigenvalues, Spectrum, DEFAULT_TOLERANCE};
use spectral_transfer::mesh::{partition_mesh, partition_report, PartitionReport, SimplicialMesh};
use spectral_transfer::metric::{
    dilation_check, lower_bound_check, sandwich_check, subdivision_stability, DilationReport, LowerBoundReport,
    MetricError, MetricGraphModel, SandwichReport, StabilityReport,
};
use spectral_transfer::WeightedGraph;

use crate::error::CliError;
use crate::output::{emit, num, render, Format, Table};

/// Subdivision counts used by the stability report.
pub const STABILITY_COUNTS: std::ops::RangeInclusive<usize> = 1..=32;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Normalized,
    Standard,
}

pub fn spectrum(
    input: &Path,
    kind: Kind,
    tol: f64,
    require_connected: bool,
    format: Format,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let g = WeightedGraph::parse_edge_list(&read(input)?)?;
    if require_connected && !g.is_connected() {
        return Err(CliError::Solver(format!("graph has {} connected components", g.component_count())));
    }
    let s: Spectrum = match kind {
        Kind::Normalized => normalized_spectrum(&g, tol)?,
        Kind::Standard => standard_spectrum(&g, tol)?,
    };
    let text = render(format, &s, || {
        let mut t = Table::new(&["k", "value"]);
        for (k, v) in s.values.iter().enumerate() {
            t.push(vec![k.to_string(), num(*v)]);
        }
        vec![t]
    });
    emit(out, &text)
}

/// Cover file: measure data plus optional continuum eigenvalues and
/// per-cell Neumann values for the transfer check.
#[derive(Deserialize)]
struct CoverInput {
    cells: Vec<Cell>,
    #[serde(default)]
    intersections: Vec<Intersection>,
    continuum: Option<Vec<f64>>,
    neumann: Option<Vec<f64>>,
}

#[derive(Serialize)]
struct CoverCheckReport {
    cells: usize,
    exact: bool,
    exactness_defect: f64,
    gram_identity_defect: Option<f64>,
    spectrum: Spectrum,
    transfer: Option<TransferReport>,
}

pub fn cover_check(input: &Path, k_max: usize, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let file: CoverInput = serde_json::from_str(&read(input)?).map_err(|e| CliError::Parse(format!("cover JSON: {e}")))?;
    let cover = TwoFoldCover::new(file.cells, file.intersections)?;
    let spectrum = eigenvalues(&cover_laplacian(&cover)?, DEFAULT_TOLERANCE)
        .map_err(|e| CliError::Solver(e.to_string()))?;
    let exact = cover.is_exact();
    let gram = if exact { Some(gram_identity_defect(&cover)?) } else { None };
    let transfer = match (file.continuum, file.neumann) {
        (Some(continuum), Some(neumann)) if exact => {
            let k = k_max.min(continuum.len().saturating_sub(1));
            Some(check_transfer(&cover, &continuum, &NeumannProfile::new(neumann)?, k)?)
        }
        (Some(_), Some(_)) => return Err(CliError::Parse("transfer check needs an exact two-fold cover".into())),
        (None, None) => None,
        _ => return Err(CliError::Parse("`continuum` and `neumann` must be given together".into())),
    };
    let report = CoverCheckReport {
        cells: cover.len(),
        exact,
        exactness_defect: cover.exactness_defect(),
        gram_identity_defect: gram,
        spectrum,
        transfer,
    };
    let text = render(format, &report, || {
        let mut t = Table::new(&["k", "discrete", "bound", "holds", "ratio"]);
        if let Some(tr) = &report.transfer {
            for r in &tr.rows {
                t.push(vec![r.k.to_string(), num(r.discrete), num(r.bound), r.holds.to_string(), num(r.ratio)]);
            }
        }
        vec![t]
    });
    emit(out, &text)
}

pub fn genus_bound(
    input: Option<&Path>,
    family: Option<&str>,
    size: Option<usize>,
    k_max: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let r = match (input, family) {
        (Some(path), None) => RotationSystem::from_json(&read(path)?)?,
        (None, Some(name)) => {
            let size = size.ok_or_else(|| CliError::Usage("--family needs --size".into()))?;
            family_by_name(name, size)?
        }
        _ => return Err(CliError::Usage("give exactly one of a rotation file or --family".into())),
    };
    let report: GenusBoundReport = genus_bound_evaluate(&r, k_max)?;
    let text = render(format, &report, || {
        let mut t = Table::new(&["k", "lambda", "ratio"]);
        for row in &report.rows {
            t.push(vec![row.k.to_string(), num(row.lambda), num(row.ratio)]);
        }
        vec![t]
    });
    emit(out, &text)
}

#[derive(Serialize)]
struct MetricReport {
    n: usize,
    length_balanced: bool,
    lower_bound: LowerBoundReport,
    sandwich: Option<SandwichReport>,
    stability: Option<Vec<StabilityReport>>,
    dilation: Option<DilationReport>,
}

fn metric_tables(r: &MetricReport) -> Vec<Table> {
    let mut lower = Table::new(&["k", "continuum", "indicator", "normalized", "bound", "slack", "holds"]);
    for row in &r.lower_bound.rows {
        lower.push(vec![
            row.k.to_string(),
            num(row.continuum),
            num(row.indicator),
            num(row.normalized),
            num(row.bound),
            num(row.slack),
            row.holds.to_string(),
        ]);
    }
    let mut tables = vec![lower];
    if let Some(s) = &r.sandwich {
        let mut t = Table::new(&["k", "normalized", "continuum", "c1_hat", "c2_hat"]);
        for row in &s.rows {
            t.push(vec![row.k.to_string(), num(row.normalized), num(row.continuum), num(row.c1_hat), num(row.c2_hat)]);
        }
        tables.push(t);
    }
    if let Some(st) = &r.stability {
        let mut t = Table::new(&["k", "s", "scaled_value"]);
        for rep in st {
            for &(s, v) in &rep.values {
                t.push(vec![rep.k.to_string(), s.to_string(), num(v)]);
            }
        }
        tables.push(t);
    }
    if let Some(d) = &r.dilation {
        let mut t = Table::new(&["k", "dilated", "predicted", "difference", "band", "holds"]);
        for row in &d.rows {
            t.push(vec![
                row.k.to_string(),
                num(row.dilated),
                num(row.predicted),
                num(row.difference),
                num(row.band),
                row.holds.to_string(),
            ]);
        }
        tables.push(t);
    }
    tables
}

/// Writes every report the model admits. Unbalanced models get the lower
/// bound (and dilation) report before failing with the balance error.
pub fn metric(
    input: &Path,
    k_max: usize,
    level: usize,
    dilate: Option<f64>,
    format: Format,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let m = MetricGraphModel::parse(&read(input)?)?;
    let k_top = k_max.min(m.n() - 1);
    let lower_bound = lower_bound_check(&m, k_top, level)?;
    let dilation = dilate.map(|beta| dilation_check(&m, beta, k_top, level)).transpose()?;
    let gated = || -> Result<(SandwichReport, Vec<StabilityReport>), MetricError> {
        let ks: Vec<usize> = (1..=k_max).collect();
        let counts: Vec<usize> = STABILITY_COUNTS.collect();
        Ok((sandwich_check(&m, k_top, level)?, subdivision_stability(&m, &ks, &counts)?))
    };
    let (sandwich, stability, pending) = match gated() {
        Ok((s, st)) => (Some(s), Some(st), None),
        Err(e @ MetricError::NotLengthBalanced { .. }) => (None, None, Some(e)),
        Err(e) => return Err(e.into()),
    };
    let report = MetricReport {
        n: m.n(),
        length_balanced: m.is_length_balanced(),
        lower_bound,
        sandwich,
        stability,
        dilation,
    };
    emit(out, &render(format, &report, || metric_tables(&report)))?;
    match pending {
        Some(e) => Err(CliError::NotLengthBalanced(format!("{e}; sandwich and stability reports skipped"))),
        None => Ok(()),
    }
}

pub fn partition(
    input: &Path,
    balance_floor: f64,
    lambda1: Option<f64>,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<(), CliError> {
    let m = SimplicialMesh::parse(&read(input)?)?;
    let p = partition_mesh(&m, balance_floor)?;
    let report: PartitionReport = partition_report(&m, &p, lambda1)?;
    if let Some(path) = out {
        let mut lines = String::with_capacity(8 * p.side.len());
        for (i, &s) in p.side.iter().enumerate() {
            lines.push_str(&format!("{i} {}\n", u8::from(s)));
        }
        emit(Some(path), &lines)?;
    }
    let text = render(format, &report, || {
        let mut t = Table::new(&[
            "simplices",
            "cut_count",
            "cut_measure",
            "balance",
            "volume_balance",
            "conductance",
            "fiedler_value",
            "kappa",
            "epsilon",
            "fiedler_ratio",
            "cut_ratio",
        ]);
        let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
        t.push(vec![
            report.simplices.to_string(),
            report.cut_count.to_string(),
            num(report.cut_measure),
            num(report.balance),
            num(report.volume_balance),
            num(report.conductance),
            num(report.fiedler_value),
            num(report.kappa),
            num(report.epsilon),
            opt(report.fiedler_ratio),
            opt(report.cut_ratio),
        ]);
        vec![t]
    });
    emit(None, &text)
}
