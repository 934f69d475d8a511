use std::io::Write;

use charrel_core::connection::{count_brute, count_census, eval_count};
use charrel_core::cover::{
    forbidden_set_scan, forced_three_cycle_witnesses, z_k, CoverOutcome, Family, MAX_COVER_LIMIT,
};
use charrel_core::defect_zero::{Octagonal, Staircase};
use charrel_core::groebner::analyze_zero_set;
use charrel_core::oracle::{MnOracle, YoungDiagram};
use charrel_core::partition::{classes_with_norm_at_most, parse_class_list};
use charrel_core::relation::TBuilder;
use charrel_core::Partition;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::{Config, OutputMode};
use crate::report::*;
use crate::{cache, verify, CliError};

#[derive(Debug, Parser)]
#[command(name = "charrel", version, about = "Exact polynomial identities among normalized character values of S_n, and their zero sets")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character table of S_n, or one row of it
    Table {
        #[arg(long)]
        n: u32,
        /// Only this irreducible, e.g. 5,2,2
        #[arg(long)]
        shape: Option<String>,
    },
    /// Connection count polynomial: placements x' of x with x'y of class target
    Conn {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        target: String,
        /// Evaluate at this n and cross-check by enumeration when small enough
        #[arg(long)]
        n: Option<u32>,
    },
    /// Relations t_lambda - T_lambda
    Tpoly {
        /// A class such as 2,2, or several joined by semicolons
        #[arg(long, conflicts_with = "norm")]
        lambda: Option<String>,
        /// Every non-cycle class with 0 < norm <= this bound
        #[arg(long)]
        norm: Option<u32>,
    },
    /// Reduced Groebner basis for a set of prescribed zeros
    Groebner {
        /// Classes separated by ';', e.g. "3;4;3,2"
        #[arg(long)]
        zeros: String,
        /// Norm bound of the relations used
        #[arg(long, default_value_t = 4)]
        cap: u32,
    },
    /// Staircase polynomial P_lambda for odd-part lambda
    Staircase {
        #[arg(long)]
        lambda: String,
        /// Compare with the oracle at the staircase of this size
        #[arg(long)]
        k: Option<u32>,
    },
    /// Octagonal polynomial for classes without parts divisible by 3
    Octagonal {
        #[arg(long)]
        lambda: String,
        /// Compare with the oracle at this octagonal number
        #[arg(long)]
        n: Option<u32>,
    },
    /// Minimum number of irreducibles whose zeros cover the nonidentity classes
    Cover {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        limit: usize,
        /// Only classes of norm at most this
        #[arg(long)]
        cap: Option<u32>,
        /// Also scan zero patterns among classes of norm at most 4
        #[arg(long)]
        scan: bool,
    },
    /// Closed formulas for hook-like families against the oracle
    Families {
        #[arg(long, value_enum)]
        family: Option<FamilyKind>,
        /// a,b,c,d,e for the hook families
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        c: Option<String>,
        /// Smallest accepted scale parameter; defaults per family
        #[arg(long)]
        threshold: Option<u32>,
        /// Largest n evaluated
        #[arg(long, default_value_t = 27)]
        max_n: u32,
    },
    /// Runs the invariant suite
    VerifyAll {
        /// Only n <= 8
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    TwoHooks2,
    TwoHooks3,
    TwoRows,
    TwoRowsCols,
}

/// Parses `argv`, runs the command and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, mode: OutputMode, value: &T, text: impl FnOnce(&mut dyn Write) -> std::io::Result<()>) -> Result<(), CliError> {
    match mode {
        OutputMode::Json => {
            serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::other)?;
            writeln!(out)?;
        }
        OutputMode::Text => text(out)?,
    }
    Ok(())
}

fn class(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse()?)
}

fn shape(s: &str) -> Result<YoungDiagram, CliError> {
    Ok(s.parse()?)
}

fn list(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|v| v.trim().parse().map_err(|_| CliError::Usage(format!("bad integer list '{s}'"))))
        .collect()
}

pub fn dispatch(cli: &Cli, out: &mut dyn Write, diag: &mut dyn Write) -> Result<i32, CliError> {
    let config = &cli.config;
    config.validate()?;
    let mode = config.output;
    match &cli.command {
        Command::Table { n, shape: only } => {
            let table = cache::load_or_compute(config, *n)?;
            let rows: Vec<usize> = match only {
                Some(s) => {
                    let s = shape(s)?;
                    vec![table
                        .character_index(&s)
                        .ok_or_else(|| CliError::Usage(format!("{s} is not a partition of {n}")))?]
                }
                None => (0..table.characters().len()).collect(),
            };
            let report = TableReport {
                n: *n,
                classes: table.classes().iter().map(Partition::render).collect(),
                rows: rows
                    .iter()
                    .map(|&r| TableRow {
                        shape: table.characters()[r].to_string(),
                        values: table.row(r).iter().map(ToString::to_string).collect(),
                    })
                    .collect(),
            };
            emit(out, mode, &report, |out| {
                if rows.len() == 1 {
                    writeln!(out, "{}", report.rows[0].shape)?;
                    for (c, v) in report.classes.iter().zip(&report.rows[0].values) {
                        writeln!(out, "{c}\t{v}")?;
                    }
                } else {
                    writeln!(out, "shape\t{}", report.classes.join("\t"))?;
                    for row in &report.rows {
                        writeln!(out, "{}\t{}", row.shape, row.values.join("\t"))?;
                    }
                }
                Ok(())
            })?;
        }
        Command::Conn { x, y, target, n } => {
            let (x, y, target) = (class(x)?, class(y)?, class(target)?);
            let census = count_census(&x, &y)?;
            let poly = census.get(&target).cloned().unwrap_or_default();
            let mut count = None;
            let mut brute = None;
            if let Some(n) = *n {
                count = Some(eval_count(&poly, n)?.to_string());
                if x.class_size(n)? <= config.enumeration_cap.into() {
                    brute = Some(count_brute(&x, &y, &target, n, config.enumeration_cap)?.to_string());
                }
            }
            if brute.is_some() && brute != count {
                return Err(CliError::Core(charrel_core::Error::Falsified(format!(
                    "census and enumeration disagree for {x} * {y} -> {target}"
                ))));
            }
            let report = ConnReport {
                x: x.render(),
                y: y.render(),
                target: target.render(),
                polynomial: poly.render(),
                n: *n,
                count,
                brute_force: brute,
            };
            emit(out, mode, &report, |out| {
                writeln!(out, "count({} * {} -> {}) = {}", report.x, report.y, report.target, report.polynomial)?;
                if let (Some(n), Some(c)) = (report.n, &report.count) {
                    writeln!(out, "at n = {n}: {c}")?;
                }
                if let Some(b) = &report.brute_force {
                    writeln!(out, "enumeration: {b}")?;
                }
                Ok(())
            })?;
        }
        Command::Tpoly { lambda, norm } => {
            let classes = match (lambda, norm) {
                (Some(l), _) if l.contains(';') => parse_class_list(l)?,
                (Some(l), _) => vec![class(l)?],
                (None, Some(k)) => classes_with_norm_at_most(*k)
                    .into_iter()
                    .filter(|c| !c.is_identity() && !c.is_cycle())
                    .collect(),
                (None, None) => return Err(CliError::Usage("give --lambda or --norm".into())),
            };
            let mut builder = TBuilder::new();
            let relations = classes
                .iter()
                .map(|c| {
                    Ok(RelationEntry {
                        class: c.render(),
                        relation: builder.relation(c)?.render(),
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let report = TpolyReport { relations };
            emit(out, mode, &report, |out| {
                for r in &report.relations {
                    writeln!(out, "{} | {}", r.class, r.relation)?;
                }
                Ok(())
            })?;
        }
        Command::Groebner { zeros, cap } => {
            let zeros = parse_class_list(zeros)?;
            let mut builder = TBuilder::new();
            let analysis = analyze_zero_set(&mut builder, &zeros, *cap)?;
            let report = GroebnerReport {
                zeros: analysis.vanishing.iter().map(Partition::render).collect(),
                cap: *cap,
                inconsistent: analysis.inconsistent,
                basis: analysis.basis.iter().map(|b| b.render()).collect(),
                constraints: analysis.constraints.iter().map(|c| c.describe()).collect(),
            };
            emit(out, mode, &report, |out| {
                writeln!(out, "zeros: {}", report.zeros.join("; "))?;
                if report.inconsistent {
                    writeln!(out, "basis: {{1}} (no character vanishes on all of these)")?;
                }
                for (i, b) in report.basis.iter().enumerate() {
                    writeln!(out, "g{}: {b}", i + 1)?;
                }
                for c in &report.constraints {
                    writeln!(out, "constraint: {c}")?;
                }
                Ok(())
            })?;
        }
        Command::Staircase { lambda, k } => {
            let lambda = class(lambda)?;
            let sp = Staircase::new().p(&lambda)?;
            let checks_passed = sp.check().is_ok();
            let ratio = match k {
                Some(k) => {
                    let shape = YoungDiagram::staircase(*k);
                    let n = shape.n();
                    if n > config.max_table_n {
                        return Err(CliError::Core(charrel_core::Error::ResourceGuard(format!(
                            "staircase of size {k} has n={n}"
                        ))));
                    }
                    if n < lambda.supp() {
                        return Err(CliError::Usage(format!("{lambda} does not fit in S_{n}")));
                    }
                    Some(RatioCheck {
                        n,
                        shape: shape.to_string(),
                        polynomial: sp.ratio_at(n)?.to_string(),
                        oracle: MnOracle::new().ratio(&shape, &lambda)?.to_string(),
                    })
                }
                None => None,
            };
            let report = DefectReport {
                kind: "staircase".into(),
                class: lambda.render(),
                polynomial: sp.poly.render(),
                degree: sp.poly.degree(),
                checks_passed,
                ratio,
            };
            emit_defect(out, mode, &report)?;
            return Ok(defect_code(&report));
        }
        Command::Octagonal { lambda, n } => {
            let lambda = class(lambda)?;
            let op = Octagonal::new().p(&lambda)?;
            let checks_passed = op.check().is_ok();
            let ratio = match n {
                Some(n) => {
                    let shape = YoungDiagram::octagonal(*n)
                        .ok_or_else(|| CliError::Usage(format!("{n} is not an octagonal number")))?;
                    if *n < lambda.supp() {
                        return Err(CliError::Usage(format!("{lambda} does not fit in S_{n}")));
                    }
                    Some(RatioCheck {
                        n: *n,
                        shape: shape.to_string(),
                        polynomial: op.ratio_at(*n)?.to_string(),
                        oracle: MnOracle::new().ratio(&shape, &lambda)?.to_string(),
                    })
                }
                None => None,
            };
            let report = DefectReport {
                kind: "octagonal".into(),
                class: lambda.render(),
                polynomial: op.poly.render(),
                degree: op.poly.degree(),
                checks_passed,
                ratio,
            };
            emit_defect(out, mode, &report)?;
            return Ok(defect_code(&report));
        }
        Command::Cover { n, limit, cap, scan } => {
            if *limit == 0 || *limit > MAX_COVER_LIMIT {
                return Err(CliError::Usage(format!("--limit must be in 1..={MAX_COVER_LIMIT}")));
            }
            let table = cache::load_or_compute(config, *n)?;
            let result = z_k(&table, *cap, *limit)?;
            let forced = forced_three_cycle_witnesses(&table)
                .into_iter()
                .map(|(s, rho)| ScanEntry {
                    shape: s.to_string(),
                    zeros: vec![format!("rho(3) = {rho}")],
                })
                .collect();
            let scan_alarms = if *scan {
                let report = forbidden_set_scan(&table)?;
                Some(
                    report
                        .alarms
                        .iter()
                        .map(|a| ScanEntry {
                            shape: a.shape.to_string(),
                            zeros: a.subset.iter().map(Partition::render).collect(),
                        })
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            let (outcome, witness, uncovered) = match &result.outcome {
                CoverOutcome::Found { witness, .. } => ("found", witness.iter().map(ToString::to_string).collect(), vec![]),
                CoverOutcome::ExceedsLimit { .. } => ("exceeds-limit", vec![], vec![]),
                CoverOutcome::NoCover { uncovered } => ("no-cover", vec![], uncovered.iter().map(Partition::render).collect()),
            };
            let report = CoverReport {
                n: *n,
                cap: *cap,
                limit: *limit,
                outcome: outcome.into(),
                z: result.value(),
                witness,
                uncovered,
                forced_three_cycle: forced,
                scan_alarms,
            };
            let name = match cap {
                Some(k) => format!("Z_{k}({n})"),
                None => format!("Z({n})"),
            };
            emit(out, mode, &report, |out| {
                match report.outcome.as_str() {
                    "found" => {
                        writeln!(out, "{name}={}", report.z.unwrap_or_default())?;
                        writeln!(out, "witness: {}", report.witness.join(" "))?;
                    }
                    "exceeds-limit" => writeln!(out, "{name}>{}", report.limit)?,
                    _ => writeln!(out, "{name}: no cover, uncovered {}", report.uncovered.join(" "))?,
                }
                for f in &report.forced_three_cycle {
                    writeln!(out, "forced three-cycle value: {} with {}", f.shape, f.zeros.join(""))?;
                }
                if let Some(alarms) = &report.scan_alarms {
                    writeln!(out, "scan alarms: {}", alarms.len())?;
                    for a in alarms {
                        writeln!(out, "  {} vanishes on {}", a.shape, a.zeros.join(" "))?;
                    }
                }
                Ok(())
            })?;
            if report.scan_alarms.as_ref().is_some_and(|a| !a.is_empty()) {
                return Ok(3);
            }
        }
        Command::Families {
            family,
            params,
            k,
            a,
            b,
            c,
            threshold,
            max_n,
        } => {
            let members = match family {
                None => default_families(),
                Some(kind) => vec![family_from_args(*kind, params, *k, a, b, c)?],
            };
            let mut oracle = MnOracle::new();
            let mut entries = Vec::new();
            for f in &members {
                let t = threshold.unwrap_or_else(|| f.default_threshold());
                let check = charrel_core::cover::family_ratio(&mut oracle, f, t, *max_n)?;
                entries.push(FamilyEntry {
                    family: family_name(f).into(),
                    parameters: family_params(f),
                    shape: check.shape.to_string(),
                    n: check.shape.n(),
                    class: check.class.render(),
                    formula: check.formula.to_string(),
                    oracle: check.oracle.to_string(),
                    agrees: check.agrees(),
                });
            }
            let report = FamiliesReport { entries };
            emit(out, mode, &report, |out| {
                for e in &report.entries {
                    let mark = if e.agrees { "ok" } else { "MISMATCH" };
                    writeln!(
                        out,
                        "{} {} {} n={} omega{}: formula {} oracle {} {mark}",
                        e.family, e.parameters, e.shape, e.n, e.class, e.formula, e.oracle
                    )?;
                }
                Ok(())
            })?;
            if report.entries.iter().any(|e| !e.agrees) {
                return Ok(3);
            }
        }
        Command::VerifyAll { quick } => {
            let report = verify::run(config, *quick, diag)?;
            emit(out, mode, &report, |out| {
                for c in &report.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{mark} {}: {}", c.name, c.detail)?;
                }
                Ok(())
            })?;
            if !report.passed() {
                return Ok(3);
            }
        }
    }
    Ok(0)
}

fn emit_defect(out: &mut dyn Write, mode: OutputMode, report: &DefectReport) -> Result<(), CliError> {
    emit(out, mode, report, |out| {
        writeln!(out, "P_{} = {}", report.class, report.polynomial)?;
        writeln!(out, "checks: {}", if report.checks_passed { "pass" } else { "FAIL" })?;
        if let Some(r) = &report.ratio {
            writeln!(out, "at {} (n = {}): polynomial {} oracle {}", r.shape, r.n, r.polynomial, r.oracle)?;
        }
        Ok(())
    })
}

fn defect_code(report: &DefectReport) -> i32 {
    let ratio_ok = report.ratio.as_ref().is_none_or(|r| r.polynomial == r.oracle);
    if report.checks_passed && ratio_ok {
        0
    } else {
        3
    }
}

fn family_from_args(
    kind: FamilyKind,
    params: &Option<String>,
    k: Option<u32>,
    a: &Option<String>,
    b: &Option<String>,
    c: &Option<String>,
) -> Result<Family, CliError> {
    let need = |v: &Option<String>, name: &str| {
        v.as_deref()
            .ok_or_else(|| CliError::Usage(format!("--{name} is required for this family")))
            .and_then(list)
    };
    match kind {
        FamilyKind::TwoHooks2 | FamilyKind::TwoHooks3 => {
            let p = need(params, "params")?;
            let [a, b, c, d, e] = p[..] else {
                return Err(CliError::Usage("--params takes a,b,c,d,e".into()));
            };
            Ok(if kind == FamilyKind::TwoHooks2 {
                Family::TwoHooks2 { a, b, c, d, e }
            } else {
                Family::TwoHooks3 { a, b, c, d, e }
            })
        }
        FamilyKind::TwoRows | FamilyKind::TwoRowsCols => {
            let k = k.ok_or_else(|| CliError::Usage("--k is required for this family".into()))?;
            let (a, b) = (need(a, "a")?, need(b, "b")?);
            Ok(if kind == FamilyKind::TwoRows {
                Family::TwoRows { k, a, b }
            } else {
                Family::TwoRowsCols { k, a, b, c: need(c, "c")? }
            })
        }
    }
}

fn family_name(f: &Family) -> &'static str {
    match f {
        Family::TwoHooks2 { .. } => "two-hooks-2",
        Family::TwoHooks3 { .. } => "two-hooks-3",
        Family::TwoRows { .. } => "two-rows",
        Family::TwoRowsCols { .. } => "two-rows-cols",
    }
}

fn family_params(f: &Family) -> String {
    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    match f {
        Family::TwoHooks2 { a, b, c, d, e } | Family::TwoHooks3 { a, b, c, d, e } => format!("a,b,c,d,e={a},{b},{c},{d},{e}"),
        Family::TwoRows { k, a, b } => format!("k={k} a={} b={}", join(a), join(b)),
        Family::TwoRowsCols { k, a, b, c } => format!("k={k} a={} b={} c={}", join(a), join(b), join(c)),
    }
}

/// Members with `n <= 27` at the default thresholds.
pub fn default_families() -> Vec<Family> {
    let mut out = Vec::new();
    for (a, b, c, d, e) in [(10, 0, 3, 2, 0), (10, 0, 0, 0, 0), (10, 1, 1, 1, 1), (11, 0, 2, 1, 0), (12, 1, 0, 0, 2), (10, 2, 1, 0, 3)] {
        out.push(Family::TwoHooks2 { a, b, c, d, e });
        out.push(Family::TwoHooks3 { a, b, c, d, e });
    }
    for (k, b) in [(8, [0, 0]), (8, [1, 0]), (8, [0, 1]), (8, [2, 1]), (9, [0, 0]), (8, [3, 0])] {
        out.push(Family::TwoRows { k, a: vec![2, 1], b: b.to_vec() });
    }
    for (k, b, c) in [(10, 0, 0), (10, 3, 2), (11, 1, 4), (12, 2, 0), (13, 0, 2)] {
        out.push(Family::TwoRowsCols { k, a: vec![1], b: vec![b], c: vec![c] });
    }
    out
}
