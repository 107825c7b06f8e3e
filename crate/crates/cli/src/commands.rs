use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Serialize;

use sasaki_core::classify::{
    default_curve_corpus, failures, observe, verify_curve_eigen_theorem, verify_hopf_theorems, verify_legendre_theorems,
    Direction, EigenReport, OperatorTag, Subject, SuiteConfig, Verdict,
};
use sasaki_core::{
    horizontal_lift, synthesize_frenet_curve, synthesize_legendre_curve, FrameVector, FrenetData, Profile, SampledCurve,
    SpaceForm,
};

use crate::chart::{Chart, Element};
use crate::{ExportArgs, Family, GeometryFormat, GridArgs, Outcome, ShapeArgs, Suite, SweepArgs, SynthesizeArgs, TableFormat, VerifyArgs};

const SCHEMA: &str = "1";

fn value_name<T: ValueEnum>(value: &T) -> String {
    value.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

/// Formats a float so that it reads back to the same value.
fn num(x: f64) -> String {
    format!("{x:?}")
}

fn tolerance_override() -> Result<Option<f64>> {
    match std::env::var("SASAKI_TOL") {
        Ok(text) => match text.trim().parse::<f64>() {
            Ok(tol) if tol > 0.0 && tol.is_finite() => Ok(Some(tol)),
            _ => bail!("SASAKI_TOL must be a positive number, got `{text}`"),
        },
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => bail!("SASAKI_TOL: {e}"),
    }
}

fn suite_config(grid: &GridArgs) -> Result<SuiteConfig> {
    let length = match grid.n {
        Some(n) => n.saturating_sub(1) as f64 * grid.h,
        None => grid.length,
    };
    let config = SuiteConfig::new(grid.h, length).context("invalid grid")?;
    Ok(match tolerance_override()? {
        Some(tol) => config.with_tol(tol),
        None => config,
    })
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn csv_bytes<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<Vec<u8>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    Ok(writer.into_inner()?)
}

#[derive(Serialize)]
struct GridRecord {
    h: f64,
    length: f64,
    n: usize,
    tol: f64,
}

impl From<&SuiteConfig> for GridRecord {
    fn from(config: &SuiteConfig) -> Self {
        GridRecord { h: config.h, length: config.length, n: config.n(), tol: config.tol }
    }
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    subject: &'a Subject,
    label: String,
    operator: OperatorTag,
    lambda_est: Option<f64>,
    residual: f64,
    verdict: Verdict,
    theorem_tag: &'static str,
    direction: Direction,
    expected_verdict: Verdict,
    expected_lambda: Option<f64>,
    verdict_refined: Verdict,
    residual_refined: f64,
    operator_norm: f64,
    oracle_agreement: f64,
    tol: f64,
    holds: bool,
}

impl<'a> From<&'a EigenReport> for ReportRecord<'a> {
    fn from(r: &'a EigenReport) -> Self {
        ReportRecord {
            subject: &r.subject,
            label: r.subject.to_string(),
            operator: r.operator,
            lambda_est: r.lambda_est,
            residual: r.residual,
            verdict: r.verdict,
            theorem_tag: r.theorem.tag(),
            direction: r.direction,
            expected_verdict: r.expected_verdict,
            expected_lambda: r.expected_lambda,
            verdict_refined: r.verdict_refined,
            residual_refined: r.residual_refined,
            operator_norm: r.operator_norm,
            oracle_agreement: r.oracle_agreement,
            tol: r.tol,
            holds: r.holds,
        }
    }
}

#[derive(Serialize)]
struct ReportRow {
    label: String,
    c: f64,
    operator: OperatorTag,
    lambda_est: Option<f64>,
    residual: f64,
    verdict: Verdict,
    theorem_tag: &'static str,
    direction: Direction,
    expected_verdict: Verdict,
    expected_lambda: Option<f64>,
    verdict_refined: Verdict,
    residual_refined: f64,
    operator_norm: f64,
    oracle_agreement: f64,
    tol: f64,
    holds: bool,
}

impl From<ReportRecord<'_>> for ReportRow {
    fn from(r: ReportRecord<'_>) -> Self {
        ReportRow {
            label: r.label,
            c: r.subject.c(),
            operator: r.operator,
            lambda_est: r.lambda_est,
            residual: r.residual,
            verdict: r.verdict,
            theorem_tag: r.theorem_tag,
            direction: r.direction,
            expected_verdict: r.expected_verdict,
            expected_lambda: r.expected_lambda,
            verdict_refined: r.verdict_refined,
            residual_refined: r.residual_refined,
            operator_norm: r.operator_norm,
            oracle_agreement: r.oracle_agreement,
            tol: r.tol,
            holds: r.holds,
        }
    }
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    holds: usize,
    mismatched: usize,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    schema: &'static str,
    suite: String,
    c: &'a [f64],
    grid: GridRecord,
    summary: Summary,
    reports: Vec<ReportRecord<'a>>,
}

pub fn verify(args: VerifyArgs) -> Result<Outcome> {
    let config = suite_config(&args.grid)?;
    let wants = |suite: Suite| args.suite == suite || args.suite == Suite::All;
    let mut reports = Vec::new();
    if wants(Suite::Curves) {
        for &c in &args.c {
            reports.extend(verify_curve_eigen_theorem(&SpaceForm::new(c), &default_curve_corpus(c), &config)?);
        }
    }
    if wants(Suite::Legendre) {
        reports.extend(verify_legendre_theorems(&args.c, &config)?);
    }
    if wants(Suite::Hopf) {
        reports.extend(verify_hopf_theorems(&args.c, &config)?);
    }
    let failed = failures(&reports);
    let bytes = match args.format {
        TableFormat::Json => json_bytes(&VerifyReport {
            schema: SCHEMA,
            suite: value_name(&args.suite),
            c: &args.c,
            grid: GridRecord::from(&config),
            summary: Summary { total: reports.len(), holds: reports.len() - failed.len(), mismatched: failed.len() },
            reports: reports.iter().map(ReportRecord::from).collect(),
        })?,
        TableFormat::Csv => csv_bytes(reports.iter().map(|r| ReportRow::from(ReportRecord::from(r))))?,
    };
    write_output(args.output.as_deref(), &bytes)?;
    eprintln!("{} reports, {} hold, {} mismatched", reports.len(), reports.len() - failed.len(), failed.len());
    for r in &failed {
        if let Some(line) = r.mismatch() {
            eprintln!("mismatch: {line}");
        }
    }
    Ok(if failed.is_empty() { Outcome::Clean } else { Outcome::Mismatch })
}

/// Orthonormal right-handed frame with `p1` along `direction`.
fn frame_from_direction(direction: &[f64]) -> Result<[FrameVector; 3]> {
    let &[x, y, z] = direction else {
        bail!("--direction needs three components, got {}", direction.len());
    };
    let d = FrameVector([x, y, z]);
    let Some(p1) = d.normalized(1e-12) else {
        bail!("--direction must be a nonzero vector");
    };
    let k = (0..3).min_by(|&a, &b| p1[a].abs().total_cmp(&p1[b].abs())).unwrap_or(0);
    let e = FrameVector::basis(k);
    let p2 = (e - p1 * e.dot(&p1)).normalized(1e-12).context("degenerate --direction")?;
    Ok([p1, p2, p1.cross(&p2)])
}

/// A synthesised curve, or the horizontal lift of a cylinder's base curve.
struct Shape {
    curve: SampledCurve,
    frenet: FrenetData,
    mean_curvature: Option<Vec<f64>>,
}

fn build_shape(shape: &ShapeArgs, config: &SuiteConfig) -> Result<Shape> {
    let sf = SpaceForm::new(shape.c);
    let (h, n) = (config.h, config.n());
    let (kappa, tau) = (shape.kappa, shape.tau);
    let (curve, frenet, mean_curvature) = match shape.family {
        Family::Frenet => {
            let frame = frame_from_direction(&shape.direction)?;
            let (curve, fd) = synthesize_frenet_curve(&sf, |s| kappa.eval(s), |s| tau.eval(s), frame, h, n)?;
            (curve, fd, None)
        }
        Family::Legendre => {
            let (curve, fd) = synthesize_legendre_curve(&sf, |s| kappa.eval(s), h, n)?;
            (curve, fd, None)
        }
        Family::Cylinder => {
            let kappa_bar = kappa.samples(h, n);
            let (curve, fd) = horizontal_lift(&sf, &kappa_bar, h)?;
            let mean = kappa_bar.iter().map(|k| 0.5 * k).collect();
            (curve, fd, Some(mean))
        }
    };
    Ok(Shape { curve, frenet, mean_curvature })
}

fn shape_summary(shape: &ShapeArgs, config: &SuiteConfig) -> String {
    let mut text = format!("family={} c={} kappa={}", value_name(&shape.family), shape.c, shape.kappa);
    if shape.family == Family::Frenet {
        let d = &shape.direction;
        let _ = write!(text, " tau={} direction={},{},{}", shape.tau, d[0], d[1], d[2]);
    }
    let _ = write!(text, " h={} n={}", config.h, config.n());
    text
}

#[derive(Serialize)]
struct SampleRecord {
    s: f64,
    kappa: f64,
    tau: f64,
    p1: [f64; 3],
    p2: [f64; 3],
    p3: [f64; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    mean_curvature: Option<f64>,
}

#[derive(Serialize)]
struct SynthesisReport {
    schema: &'static str,
    family: String,
    c: f64,
    kappa: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<String>,
    h: f64,
    n: usize,
    samples: Vec<SampleRecord>,
}

pub fn synthesize(args: SynthesizeArgs) -> Result<Outcome> {
    let config = suite_config(&args.grid)?;
    let shape = build_shape(&args.shape, &config)?;
    let tau = shape.frenet.tau_or_zero();
    let samples: Vec<SampleRecord> = (0..shape.frenet.n())
        .map(|i| {
            let [p1, p2, p3] = shape.frenet.frame(i);
            SampleRecord {
                s: shape.curve.arclength(i),
                kappa: shape.frenet.kappa[i],
                tau: tau[i],
                p1: p1.0,
                p2: p2.0,
                p3: p3.0,
                mean_curvature: shape.mean_curvature.as_ref().map(|m| m[i]),
            }
        })
        .collect();
    let bytes = match args.format {
        TableFormat::Json => json_bytes(&SynthesisReport {
            schema: SCHEMA,
            family: value_name(&args.shape.family),
            c: args.shape.c,
            kappa: args.shape.kappa.to_string(),
            tau: (args.shape.family == Family::Frenet).then(|| args.shape.tau.to_string()),
            h: config.h,
            n: config.n(),
            samples,
        })?,
        TableFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            let mut header: Vec<String> = ["s", "kappa", "tau"].map(String::from).to_vec();
            for p in ["p1", "p2", "p3"] {
                header.extend((1..=3).map(|k| format!("{p}_{k}")));
            }
            if shape.mean_curvature.is_some() {
                header.push("mean_curvature".into());
            }
            writer.write_record(&header)?;
            for r in &samples {
                let mut row = vec![num(r.s), num(r.kappa), num(r.tau)];
                row.extend(r.p1.iter().chain(&r.p2).chain(&r.p3).map(|x| num(*x)));
                row.extend(r.mean_curvature.map(num));
                writer.write_record(&row)?;
            }
            writer.into_inner()?
        }
    };
    write_output(args.output.as_deref(), &bytes)?;
    Ok(Outcome::Clean)
}

fn polyline_csv(chart: &Chart, summary: &str, curve: &SampledCurve, path: &[Element]) -> Result<Vec<u8>> {
    let mut bytes = format!("# sasaki polyline\n# chart: {}\n# {summary}\n", chart.describe()).into_bytes();
    let mut writer = csv::Writer::from_writer(&mut bytes);
    writer.write_record(["s", "x", "y", "z"])?;
    for (i, p) in chart.polyline(path).iter().enumerate() {
        writer.write_record([num(curve.arclength(i)), num(p[0]), num(p[1]), num(p[2])])?;
    }
    writer.flush()?;
    drop(writer);
    Ok(bytes)
}

fn cylinder_obj(chart: &Chart, summary: &str, path: &[Element], fiber_samples: usize, fiber_length: f64) -> String {
    let m = fiber_samples;
    let closed = chart.fiber_period();
    let offsets: Vec<f64> = match closed {
        Some(period) => (0..m).map(|j| j as f64 * period / m as f64).collect(),
        None => (0..m).map(|j| j as f64 * fiber_length / (m - 1) as f64).collect(),
    };
    let fibers = match closed {
        Some(period) => format!("closed fibres, period {period}"),
        None => format!("open fibres, length {fiber_length}"),
    };
    let grid: Vec<Element> = path.iter().flat_map(|g| offsets.iter().map(|&t| chart.fiber(g, t))).collect();
    let chart = chart.with_pole_avoiding(&grid);
    let mut out = format!("# sasaki hopf cylinder\n# chart: {}\n# {summary}\n# {m} samples per fibre, {fibers}\no cylinder\n", chart.describe());
    let mut row_start: Option<[f64; 3]> = None;
    for row in grid.chunks(m) {
        let mut prev = row_start;
        for (j, g) in row.iter().enumerate() {
            let p = chart.coords(g, prev);
            if j == 0 {
                row_start = Some(p);
            }
            prev = Some(p);
            let _ = writeln!(out, "v {} {} {}", num(p[0]), num(p[1]), num(p[2]));
        }
    }
    let strips = if closed.is_some() { m } else { m - 1 };
    for i in 0..path.len().saturating_sub(1) {
        for j in 0..strips {
            let j2 = (j + 1) % m;
            let v = |row: usize, col: usize| row * m + col + 1;
            let _ = writeln!(out, "f {} {} {} {}", v(i, j), v(i + 1, j), v(i + 1, j2), v(i, j2));
        }
    }
    out
}

pub fn export(args: ExportArgs) -> Result<Outcome> {
    let chart = Chart::select(args.chart, args.shape.c)?;
    if args.format == GeometryFormat::Obj && args.shape.family != Family::Cylinder {
        bail!("obj export needs --family cylinder");
    }
    let config = suite_config(&args.grid)?;
    let shape = build_shape(&args.shape, &config)?;
    let path = chart.trace(&shape.curve);
    let chart = chart.with_pole_avoiding(&path);
    let summary = shape_summary(&args.shape, &config);
    let bytes = match args.format {
        GeometryFormat::Csv => polyline_csv(&chart, &summary, &shape.curve, &path)?,
        GeometryFormat::Obj => cylinder_obj(&chart, &summary, &path, args.fiber_samples as usize, args.fiber_length).into_bytes(),
    };
    write_output(args.output.as_deref(), &bytes)?;
    Ok(Outcome::Clean)
}

#[derive(Serialize)]
struct SweepRecord {
    label: String,
    c: f64,
    value: f64,
    lambda_est: Option<f64>,
    residual: f64,
    residual_refined: f64,
    operator_norm: f64,
    verdict: Verdict,
    verdict_refined: Verdict,
    oracle_agreement: f64,
}

#[derive(Serialize)]
struct SweepReport {
    schema: &'static str,
    family: String,
    operator: OperatorTag,
    grid: GridRecord,
    records: Vec<SweepRecord>,
}

pub fn sweep(args: SweepArgs) -> Result<Outcome> {
    let config = suite_config(&args.grid)?;
    let operator = OperatorTag::from(args.operator);
    let mut records = Vec::new();
    for &c in &args.c {
        for &value in &args.values {
            let kappa = Profile::constant(value);
            let subject = match args.family {
                Family::Frenet => Subject::Curve { c, kappa, tau: Profile::constant(args.tau) },
                Family::Legendre => Subject::Legendre { c, kappa },
                Family::Cylinder => Subject::Cylinder { c, kappa_bar: kappa },
            };
            let obs = observe(subject, operator, &config).with_context(|| subject.to_string())?;
            records.push(SweepRecord {
                label: subject.to_string(),
                c,
                value,
                lambda_est: obs.lambda_est,
                residual: obs.residual,
                residual_refined: obs.residual_refined,
                operator_norm: obs.operator_norm,
                verdict: obs.verdict,
                verdict_refined: obs.verdict_refined,
                oracle_agreement: obs.oracle_agreement,
            });
        }
    }
    let bytes = match args.format {
        TableFormat::Json => json_bytes(&SweepReport {
            schema: SCHEMA,
            family: value_name(&args.family),
            operator,
            grid: GridRecord::from(&config),
            records,
        })?,
        TableFormat::Csv => csv_bytes(records)?,
    };
    write_output(args.output.as_deref(), &bytes)?;
    Ok(Outcome::Clean)
}
