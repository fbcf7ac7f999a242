//! Execution of subcommands and rendering of their results.

use std::fs;
use std::io::Read;
use std::path::Path;

use chowkit::binary::{
    bezout_bracket_matrix, common_root_binary, resultant_bezout, resultant_sylvester, stiefel_of, sylvester_matrix,
    BinaryForm,
};
use chowkit::determinantal::{chow_bracket_matrix, chow_form_at, chow_form_determinantal, LinearMatrix, Scroll};
use chowkit::fixtures::{self, render_grid, Format};
use chowkit::grassmann::{eval_bracket_matrix, BracketMatrix, StiefelMatrix};
use chowkit::hyperelliptic::{
    curve_common_zero, elliptic_bracket_matrix, elliptic_resultant, hyperelliptic_bezout, hyperelliptic_sylvester,
    EllipticFunction, HyperellipticInstance, VERIFIED_K_MAX,
};
use chowkit::ring::{parse_fp, parse_rational};
use chowkit::suites::{self, Report, SuiteOptions};
use chowkit::ternary::{net_stiefel, pfaffian_matrix_quadrics, pfaffian_quadrics, resultant_quadrics, stiefel_matrix_quadrics, TernaryQuadric};
use chowkit::veronese::{
    min_rank_divisor, schur_rank, ulrich_chi, ulrich_partition, weakly_ulrich_line_range, BettiTable,
};
use chowkit::{DenseMatrix, PrimeField, Ring, Scalar};
use schemars::schema::RootSchema;
use serde_json::{json, Value};

use crate::args::*;
use crate::error::{CliError, Result};

/// Result of one command before formatting.
pub enum Output {
    /// A single exact value.
    Value { text: String, json: Value },
    /// A matrix or table of cells; `json` carries the structured form.
    Grid { cells: Vec<Vec<String>>, json: Value },
    /// Verification reports.
    Reports(Vec<Report>),
    /// Already formatted text.
    Rendered(String),
    /// Already formatted text of a failed verification.
    FailedRendered(String),
}

impl Output {
    pub fn failed(&self) -> bool {
        match self {
            Output::Reports(rs) => rs.iter().any(|r| !r.passed()),
            Output::FailedRendered(_) => true,
            _ => false,
        }
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        let pretty = |v: &Value| serde_json::to_string_pretty(v).expect("values serialize") + "\n";
        match (self, format) {
            (Output::Rendered(s) | Output::FailedRendered(s), _) => Ok(s.clone()),
            (Output::Value { text, .. }, OutputFormat::Text) => Ok(format!("{text}\n")),
            (Output::Value { json, .. } | Output::Grid { json, .. }, OutputFormat::Json) => Ok(pretty(json)),
            (Output::Value { .. }, f) => Err(CliError::Unsupported(format!(
                "format {} needs a matrix or table result; use text or json",
                core_format(f)
            ))),
            (Output::Grid { cells, .. }, f) => Ok(render_grid(cells, core_format(f))),
            (Output::Reports(rs), OutputFormat::Text) => {
                Ok(rs.iter().map(|r| format!("{r}\n")).collect::<Vec<_>>().join("\n"))
            }
            (Output::Reports(rs), OutputFormat::Json) => Ok(pretty(&serde_json::to_value(rs).expect("reports serialize"))),
            (Output::Reports(rs), OutputFormat::Csv) => {
                let mut cells = vec![vec!["suite".into(), "check".into(), "status".into(), "detail".into()]];
                for r in rs {
                    for c in &r.checks {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        cells.push(vec![r.title.clone(), c.name.clone(), status.into(), c.detail.clone()]);
                    }
                }
                Ok(render_grid(&cells, Format::Csv))
            }
            (Output::Reports(_), OutputFormat::Latex) => {
                Err(CliError::Unsupported("format latex is not available for verification reports".into()))
            }
        }
    }
}

pub fn core_format(f: OutputFormat) -> Format {
    match f {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
        OutputFormat::Latex => Format::Latex,
        OutputFormat::Csv => Format::Csv,
    }
}

/// The modulus for random suites: `--prime`, then `CHOWKIT_PRIME`, then `2^31 - 1`.
pub fn suite_field(opts: &Options) -> Result<PrimeField> {
    if let Some(p) = opts.prime {
        return Ok(PrimeField::new(p)?);
    }
    match std::env::var("CHOWKIT_PRIME") {
        Ok(s) => {
            let p: u64 = s
                .trim()
                .parse()
                .map_err(|_| CliError::Validation(format!("CHOWKIT_PRIME={s:?} is not an integer")))?;
            Ok(PrimeField::new(p)?)
        }
        Err(_) => Ok(PrimeField::default_field()),
    }
}

type Parser<'a, S> = &'a dyn Fn(&str) -> chowkit::Result<S>;

/// Runs `$body` with `$parse` bound to a scalar parser for Q, or for F_p when
/// `--prime` is given.
macro_rules! over_scalars {
    ($opts:expr, $parse:ident => $body:expr) => {
        match $opts.prime {
            None => {
                let $parse: Parser<'_, chowkit::Rational> = &|s: &str| parse_rational(s);
                $body
            }
            Some(p) => {
                let field = PrimeField::new(p)?;
                let $parse: Parser<'_, chowkit::Fp> = &move |s: &str| parse_fp(s, field);
                $body
            }
        }
    };
}

fn scalars<S>(what: &str, vals: &[String], parse: Parser<'_, S>) -> Result<Vec<S>> {
    vals.iter()
        .map(|v| parse(v).map_err(|e| CliError::Validation(format!("--{what}: {e}"))))
        .collect()
}

fn exactly<S>(what: &str, n: usize, vals: &[String], parse: Parser<'_, S>) -> Result<Vec<S>> {
    if vals.len() != n {
        return Err(CliError::Validation(format!("--{what} needs {n} coefficients, got {}", vals.len())));
    }
    scalars(what, vals, parse)
}

fn value<S: Scalar>(key: &str, x: &S) -> Output {
    Output::Value { text: x.to_exact_string(), json: json!({ key: x.to_exact_string() }) }
}

fn matrix_output<S: Scalar>(m: &DenseMatrix<S>) -> Output {
    let cells: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(Scalar::to_exact_string).collect()).collect();
    Output::Grid { json: json!({ "rows": m.rows(), "cols": m.cols(), "matrix": cells }), cells }
}

fn bracket_output<R: Ring>(m: &BracketMatrix<R>) -> Output {
    let rows = m.to_rows();
    let cells = rows.iter().map(|r| r.iter().map(|e| e.to_compact_string()).collect()).collect();
    let spaced: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    Output::Grid { json: json!({ "rows": m.rows(), "cols": m.cols(), "matrix": spaced }), cells }
}

pub fn run_command(cmd: Command, opts: &Options) -> Result<Output> {
    match cmd {
        Command::Binary(a) => binary(&a, opts),
        Command::TernaryQuadrics(a) => ternary(&a, opts),
        Command::Hyper(a) => hyper(&a, opts),
        Command::Elliptic(a) => elliptic(&a, opts),
        Command::ChowDet(a) => chow_det(&a, opts),
        Command::Tables(a) => tables(&a),
        Command::Verify(a) => verify(&a, opts),
        Command::Emit(a) => Ok(Output::Rendered(fixtures::emit(&a.id, core_format(opts.format))?)),
        Command::Job(a) => {
            let (cmd, job_opts) = parse_job(&read_input(&a.path)?)?;
            let out = run_command(cmd, &job_opts)?;
            let text = out.render(job_opts.format)?;
            Ok(if out.failed() { Output::FailedRendered(text) } else { Output::Rendered(text) })
        }
        Command::Schema(a) => schema(&a),
    }
}

pub fn binary(a: &BinaryArgs, opts: &Options) -> Result<Output> {
    if let Some(d) = a.brackets {
        return Ok(bracket_output(&bezout_bracket_matrix::<chowkit::Rational>(d)?));
    }
    over_scalars!(opts, parse => binary_with(a, parse))
}

fn binary_with<S: Scalar>(a: &BinaryArgs, parse: Parser<'_, S>) -> Result<Output> {
    if a.f.is_empty() || a.g.is_empty() {
        return Err(CliError::Validation("binary needs --f and --g (or --brackets D)".into()));
    }
    if a.f.len() != a.g.len() {
        return Err(CliError::Validation(format!(
            "--f and --g must have the same degree, got {} and {} coefficients",
            a.f.len(),
            a.g.len()
        )));
    }
    let f = BinaryForm::new(scalars("f", &a.f, parse)?)?;
    let g = BinaryForm::new(scalars("g", &a.g, parse)?)?;
    if a.matrix {
        let m = match a.method {
            Method::Sylvester => sylvester_matrix(&f, &g)?,
            Method::Bezout => eval_bracket_matrix(&bezout_bracket_matrix(f.degree())?, &stiefel_of(&f, &g)?)?,
        };
        return Ok(matrix_output(&m));
    }
    let res = match a.method {
        Method::Sylvester => resultant_sylvester(&f, &g)?,
        Method::Bezout => resultant_bezout(&f, &g)?,
    };
    if !a.oracle {
        return Ok(value("resultant", &res));
    }
    let root = common_root_binary(&f, &g)?;
    Ok(Output::Value {
        text: format!("{}\ncommon root: {}", res.to_exact_string(), if root { "yes" } else { "no" }),
        json: json!({ "resultant": res.to_exact_string(), "common_root": root }),
    })
}

pub fn ternary(a: &TernaryArgs, opts: &Options) -> Result<Output> {
    let given = !(a.a.is_empty() && a.b.is_empty() && a.c.is_empty());
    if !given {
        return match a.emit {
            Some(TernaryMatrix::PfaffianMatrix) => Ok(Output::Rendered(fixtures::emit("pfaffian8", core_format(opts.format))?)),
            Some(TernaryMatrix::StiefelMatrix) => Ok(Output::Rendered(fixtures::emit("stiefel6", core_format(opts.format))?)),
            None => Err(CliError::Validation("ternary-quadrics needs --a, --b, --c or --emit".into())),
        };
    }
    over_scalars!(opts, parse => ternary_with(a, parse))
}

fn ternary_with<S: Scalar>(a: &TernaryArgs, parse: Parser<'_, S>) -> Result<Output> {
    let q = |w: &str, v: &[String]| -> Result<TernaryQuadric<S>> { Ok(TernaryQuadric::new(exactly(w, 6, v, parse)?)?) };
    let (qa, qb, qc) = (q("a", &a.a)?, q("b", &a.b)?, q("c", &a.c)?);
    match a.emit {
        Some(TernaryMatrix::PfaffianMatrix) => {
            Ok(matrix_output(&eval_bracket_matrix(&pfaffian_matrix_quadrics()?, &net_stiefel(&qa, &qb, &qc))?))
        }
        Some(TernaryMatrix::StiefelMatrix) => Ok(matrix_output(&stiefel_matrix_quadrics(&qa, &qb, &qc)?)),
        None => {
            let r = match a.method {
                TernaryMethod::Pfaffian => pfaffian_quadrics(&qa, &qb, &qc)?,
                TernaryMethod::Stiefel => resultant_quadrics(&qa, &qb, &qc)?,
            };
            Ok(value("resultant", &r))
        }
    }
}

pub fn hyper(a: &HyperArgs, opts: &Options) -> Result<Output> {
    if a.k > VERIFIED_K_MAX {
        eprintln!("warning: the Bezout formula is verified only for k <= {VERIFIED_K_MAX}");
    }
    over_scalars!(opts, parse => hyper_with(a, parse))
}

fn trimmed<S: Scalar>(mut v: Vec<S>) -> Vec<S> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn hyper_with<S: Scalar>(a: &HyperArgs, parse: Parser<'_, S>) -> Result<Output> {
    if a.f1.is_empty() || a.f2.is_empty() {
        return Err(CliError::Validation("hyper needs --f1 and --f2".into()));
    }
    let p = |w: &str, v: &[String]| scalars(w, v, parse);
    let inst = HyperellipticInstance::from_coeffs(
        a.genus,
        a.k,
        &p("f1", &a.f1)?,
        &p("f2", &a.f2)?,
        &p("a", &a.a)?,
        &p("b", &a.b)?,
        &p("c", &a.c)?,
        &p("d", &a.d)?,
    )?;
    if !a.f.is_empty() && trimmed(p("f", &a.f)?) != trimmed(inst.f()) {
        return Err(CliError::Validation("--f differs from f1 * f2".into()));
    }
    let m = match a.method {
        Method::Sylvester => hyperelliptic_sylvester(&inst)?,
        Method::Bezout => hyperelliptic_bezout(&inst)?,
    };
    if a.matrix {
        return Ok(matrix_output(&m));
    }
    let det = m.det()?;
    if !a.oracle {
        return Ok(value("resultant", &det));
    }
    let zero = curve_common_zero(&inst)?;
    Ok(Output::Value {
        text: format!("{}\ncommon zero: {}", det.to_exact_string(), if zero { "yes" } else { "no" }),
        json: json!({ "resultant": det.to_exact_string(), "common_zero": zero }),
    })
}

pub fn elliptic(a: &EllipticArgs, opts: &Options) -> Result<Output> {
    if a.rho.is_empty() {
        if a.matrix && a.a.is_empty() && a.c.is_empty() {
            return Ok(Output::Rendered(fixtures::emit("elliptic4", core_format(opts.format))?));
        }
        return Err(CliError::Validation("elliptic needs --rho r1,r2,r3".into()));
    }
    over_scalars!(opts, parse => elliptic_with(a, parse))
}

fn elliptic_with<S: Scalar>(a: &EllipticArgs, parse: Parser<'_, S>) -> Result<Output> {
    let rho: [S; 3] = exactly("rho", 3, &a.rho, parse)?.try_into().map_err(|_| unreachable_len())?;
    let symbolic = elliptic_bracket_matrix(&rho)?;
    if a.matrix && a.a.is_empty() && a.c.is_empty() {
        return Ok(bracket_output(&symbolic));
    }
    let one = |x: &str, xs: &[String], y: &str, ys: &Option<String>| -> Result<EllipticFunction<S>> {
        let x: [S; 3] = exactly(x, 3, xs, parse)?.try_into().map_err(|_| unreachable_len())?;
        let y = ys.as_deref().ok_or_else(|| CliError::Validation(format!("elliptic needs --{y}")))?;
        Ok(EllipticFunction { x, y: parse(y)? })
    };
    let f = one("a", &a.a, "b", &a.b)?;
    let g = one("c", &a.c, "d", &a.d)?;
    if a.matrix {
        let row = |e: &EllipticFunction<S>| e.x.iter().cloned().chain([e.y.clone()]).collect::<Vec<_>>();
        let s = StiefelMatrix::from_rows(vec![row(&f), row(&g)])?;
        return Ok(matrix_output(&eval_bracket_matrix(&symbolic, &s)?));
    }
    Ok(value("resultant", &elliptic_resultant(&f, &g, &rho)?))
}

fn unreachable_len() -> CliError {
    CliError::Validation("wrong number of values".into())
}

pub fn chow_det(a: &ChowDetArgs, opts: &Options) -> Result<Output> {
    over_scalars!(opts, parse => chow_det_with(a, parse))
}

fn linear_matrix<S: Scalar>(a: &ChowDetArgs, parse: Parser<'_, S>) -> Result<LinearMatrix<S>> {
    let sources = [!a.scroll.is_empty(), a.rnc.is_some(), a.matrix_file.is_some(), a.linear_matrix.is_some()];
    if sources.iter().filter(|&&x| x).count() != 1 {
        return Err(CliError::Validation(
            "chow-det needs exactly one of --scroll, --rnc, --matrix-file, linear_matrix".into(),
        ));
    }
    if !a.scroll.is_empty() {
        return Ok(Scroll::new(a.scroll.clone())?.linear_matrix());
    }
    if let Some(d) = a.rnc {
        return Ok(Scroll::rational_normal_curve(d)?.linear_matrix());
    }
    let spec = match (&a.matrix_file, &a.linear_matrix) {
        (Some(path), _) => {
            let text = read_input(path)?;
            let v: Value = serde_json::from_str(&text).map_err(CliError::MalformedJson)?;
            serde_json::from_value::<LinearMatrixSpec>(v)
                .map_err(|e| CliError::Schema { what: "linear matrix".into(), source: e })?
        }
        (None, Some(spec)) => spec.clone(),
        (None, None) => unreachable!("one source is present"),
    };
    let entries = spec
        .entries
        .iter()
        .map(|row| row.iter().map(|e| scalars("entries", e, parse)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let m = LinearMatrix::new(entries)?;
    if (m.g(), m.f(), m.n()) != (spec.g, spec.f, spec.n) {
        return Err(CliError::Validation(format!(
            "linear matrix declares g={}, f={}, n={} but its entries have g={}, f={}, n={}",
            spec.g,
            spec.f,
            spec.n,
            m.g(),
            m.f(),
            m.n()
        )));
    }
    Ok(m)
}

fn chow_det_with<S: Scalar>(a: &ChowDetArgs, parse: Parser<'_, S>) -> Result<Output> {
    let phi = linear_matrix(a, parse)?;
    let psi = chow_bracket_matrix(&phi)?;
    if !a.at.is_empty() {
        let rows = a
            .at
            .iter()
            .map(|r| scalars("at", &r.split(',').map(str::to_string).collect::<Vec<_>>(), parse))
            .collect::<Result<Vec<_>>>()?;
        return Ok(value("chow_form", &chow_form_at(&psi, &StiefelMatrix::from_rows(rows)?)?));
    }
    if a.expand {
        let det = chow_form_determinantal(&phi)?;
        return Ok(Output::Value { text: det.to_compact_string(), json: json!({ "chow_form": det.to_string() }) });
    }
    Ok(bracket_output(&psi))
}

fn grid_json(kind: &str, cells: &[Vec<String>]) -> Value {
    json!({ "kind": kind, "cells": cells })
}

fn betti_output(kind: &str, t: &BettiTable) -> Output {
    let cells = t
        .rows
        .iter()
        .map(|r| r.iter().map(|c| c.map_or("...".to_string(), |n| if n == 0 { ".".into() } else { n.to_string() })).collect())
        .collect();
    let mut json = serde_json::to_value(t).expect("tables serialize");
    json["kind"] = kind.into();
    Output::Grid { cells, json }
}

pub fn tables(a: &TablesArgs) -> Result<Output> {
    let grid = |kind: &str, nmax: u64, dmax: u64, cell: &dyn Fn(u64, u64) -> Result<String>| -> Result<Output> {
        let mut cells = vec![std::iter::once("n\\d".to_string()).chain((1..=dmax).map(|d| d.to_string())).collect::<Vec<_>>()];
        for n in 1..=nmax {
            let mut row = vec![n.to_string()];
            for d in 1..=dmax {
                row.push(cell(n, d)?);
            }
            cells.push(row);
        }
        Ok(Output::Grid { json: grid_json(kind, &cells), cells })
    };
    match a.kind {
        TableKind::Schur => grid("schur", a.nmax.unwrap_or(5), a.dmax.unwrap_or(5), &|n, d| {
            Ok(schur_rank(&ulrich_partition(n, d)?, n)?.to_string())
        }),
        TableKind::Divisor => grid("divisor", a.nmax.unwrap_or(5), a.dmax.unwrap_or(6), &|n, d| {
            Ok(min_rank_divisor(n, d)?.to_string())
        }),
        TableKind::LineRange => grid("line-range", a.nmax.unwrap_or(10), a.dmax.unwrap_or(10), &|k, d| {
            Ok(match weakly_ulrich_line_range(k as i64, d as i64)? {
                Some(r) => format!("{}..{}", r.start(), r.end()),
                None => "-".into(),
            })
        }),
        TableKind::Chi => {
            let (Some(h0), Some(k), Some(d)) = (a.h0, a.k, a.d) else {
                return Err(CliError::Validation("tables chi needs --h0, --k and --d".into()));
            };
            let mut cells = vec![vec!["e".to_string(), "chi".to_string()]];
            for e in -(i64::from(k) + 1) * d..=d {
                cells.push(vec![e.to_string(), ulrich_chi(h0, k, d, e)?.to_string()]);
            }
            Ok(Output::Grid { json: grid_json("chi", &cells), cells })
        }
        TableKind::Rank2 => {
            let d = a.d.unwrap_or(2);
            let d = u64::try_from(d).map_err(|_| CliError::Validation(format!("--d must be positive, got {d}")))?;
            Ok(betti_output("rank2", &chowkit::veronese::rank2_p2_tate_table(d)?))
        }
        TableKind::Hm => Ok(betti_output("hm", &BettiTable::load("hm-betti")?)),
        TableKind::Nullcorr => Ok(betti_output("nullcorr", &BettiTable::load("nullcorr-betti")?)),
    }
}

pub fn verify(a: &VerifyArgs, opts: &Options) -> Result<Output> {
    let so = SuiteOptions { seed: opts.seed, field: suite_field(opts)?, trials: opts.trials };
    let kmax_hyper = a.kmax.unwrap_or(VERIFIED_K_MAX);
    if matches!(a.suite, Suite::BaZero | Suite::All) && a.family == Family::Hyper && kmax_hyper > VERIFIED_K_MAX {
        eprintln!("warning: k > {VERIFIED_K_MAX} goes beyond the verified range and may take long");
    }
    let reports = match a.suite {
        Suite::BaZero => match a.family {
            Family::Hyper => vec![suites::ba_zero_hyper(a.gmax, kmax_hyper)],
            Family::Binary => vec![suites::ba_zero_binary(a.dmax.unwrap_or(12))],
        },
        Suite::Binary => vec![suites::binary_crosscheck(a.dmax.unwrap_or(8), &so)],
        Suite::Ternary => vec![suites::ternary_quadrics(&so)],
        Suite::EagonNorthcott => {
            vec![suites::eagon_northcott_suite(a.gmax.unwrap_or(3), a.fmax.unwrap_or(6), a.nmax.unwrap_or(6), &so)]
        }
        Suite::Psi => vec![suites::psi_reproduction(&so)],
        Suite::ScrollCorrected => vec![suites::scroll_sign_corrected(&so)],
        Suite::Hyper => vec![suites::hyper_semantics(a.gmax.unwrap_or(2), a.kmax.unwrap_or(5), &so)],
        Suite::Elliptic => vec![suites::elliptic_suite(&so)],
        Suite::Tables => vec![suites::tables_suite()],
        Suite::Properties => vec![suites::properties_suite(&so)],
        Suite::All => vec![
            suites::ba_zero_hyper(None, kmax_hyper),
            suites::ba_zero_binary(12),
            suites::binary_crosscheck(8, &so),
            suites::ternary_quadrics(&so),
            suites::eagon_northcott_suite(3, 6, 6, &so),
            suites::psi_reproduction(&so),
            suites::scroll_sign_corrected(&so),
            suites::hyper_semantics(2, 5, &so),
            suites::elliptic_suite(&so),
            suites::tables_suite(),
            suites::properties_suite(&so),
        ],
    };
    Ok(Output::Reports(reports))
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io { path: "<stdin>".into(), source: e })?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })
}

fn payload<T: serde::de::DeserializeOwned>(kind: JobKind, v: Value) -> Result<T> {
    let v = if v.is_null() { json!({}) } else { v };
    serde_json::from_value(v).map_err(|e| CliError::Schema { what: format!("{} payload", kind.name()), source: e })
}

/// Parses a job file and returns the command it describes with its options.
pub fn parse_job(text: &str) -> Result<(Command, Options)> {
    let v: Value = serde_json::from_str(text).map_err(CliError::MalformedJson)?;
    let spec: JobSpec = serde_json::from_value(v).map_err(|e| CliError::Schema { what: "job".into(), source: e })?;
    let p = spec.payload;
    let cmd = match spec.subcommand {
        k @ JobKind::Binary => Command::Binary(payload(k, p)?),
        k @ JobKind::TernaryQuadrics => Command::TernaryQuadrics(payload(k, p)?),
        k @ JobKind::Hyper => Command::Hyper(payload(k, p)?),
        k @ JobKind::Elliptic => Command::Elliptic(payload(k, p)?),
        k @ JobKind::ChowDet => Command::ChowDet(payload(k, p)?),
        k @ JobKind::Tables => Command::Tables(payload(k, p)?),
        k @ JobKind::Verify => Command::Verify(payload(k, p)?),
    };
    Ok((cmd, spec.options))
}

/// Every shipped schema, by name.
pub fn schemas() -> Vec<(&'static str, RootSchema)> {
    vec![
        ("job", schemars::schema_for!(JobSpec)),
        ("binary", schemars::schema_for!(BinaryArgs)),
        ("ternary-quadrics", schemars::schema_for!(TernaryArgs)),
        ("hyper", schemars::schema_for!(HyperArgs)),
        ("elliptic", schemars::schema_for!(EllipticArgs)),
        ("chow-det", schemars::schema_for!(ChowDetArgs)),
        ("linear-matrix", schemars::schema_for!(LinearMatrixSpec)),
        ("tables", schemars::schema_for!(TablesArgs)),
        ("verify", schemars::schema_for!(VerifyArgs)),
    ]
}

pub fn schema_text(s: &RootSchema) -> String {
    serde_json::to_string_pretty(s).expect("schemas serialize") + "\n"
}

fn schema(a: &SchemaArgs) -> Result<Output> {
    let all = schemas();
    if let Some(dir) = &a.out_dir {
        fs::create_dir_all(dir).map_err(|e| CliError::Io { path: dir.display().to_string(), source: e })?;
        let mut written = Vec::new();
        for (name, s) in &all {
            let path = dir.join(format!("{name}.schema.json"));
            fs::write(&path, schema_text(s)).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
            written.push(path.display().to_string());
        }
        return Ok(Output::Rendered(written.join("\n") + "\n"));
    }
    let names: Vec<&str> = all.iter().map(|(n, _)| *n).collect();
    all.into_iter()
        .find(|(n, _)| *n == a.name)
        .map(|(_, s)| Output::Rendered(schema_text(&s)))
        .ok_or_else(|| CliError::Validation(format!("unknown schema {:?}; known: {}", a.name, names.join(", "))))
}
