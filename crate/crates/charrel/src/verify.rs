//! The invariant suite behind `verify-all`.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::Zero;

use charrel_core::cover::{forbidden_set_scan, small_class_violations, z_k};
use charrel_core::defect_zero::{ratio_lower_bounds, Octagonal, Staircase};
use charrel_core::oracle::{CharTable, MnOracle, YoungDiagram};
use charrel_core::partition::{classes_with_norm_at_most, partitions_of};
use charrel_core::relation::{eval_at_character, extract_leading_cycle_coeff, leading_cycle_coeff, TBuilder};
use charrel_core::Partition;

use crate::cache::load_or_compute;
use crate::config::Config;
use crate::report::{CheckEntry, VerifyReport};
use crate::CliError;

const Z_THREE: [u32; 7] = [5, 6, 8, 9, 10, 12, 21];

struct Limits {
    n: u32,
    relation_norm: u32,
    leading_supp: u32,
    staircase_supp: u32,
    octagonal_n: &'static [u32],
}

const QUICK: Limits = Limits {
    n: 8,
    relation_norm: 4,
    leading_supp: 8,
    staircase_supp: 10,
    octagonal_n: &[5, 8],
};

const FULL: Limits = Limits {
    n: 12,
    relation_norm: 5,
    leading_supp: 9,
    staircase_supp: 15,
    octagonal_n: &[5, 8, 16, 21],
};

fn entry(name: &str, failures: Vec<String>, total: usize) -> CheckEntry {
    CheckEntry {
        name: name.into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{total} cases")
        } else {
            format!("{} of {total} failed, first: {}", failures.len(), failures[0])
        },
    }
}

/// Row orthogonality weighted by class sizes.
fn orthogonal(table: &CharTable) -> bool {
    let n = table.n();
    let order: BigInt = (1..=n).map(BigInt::from).product();
    let sizes: Option<Vec<BigInt>> = table.classes().iter().map(|c| c.class_size(n).ok()).collect();
    let Some(sizes) = sizes else { return false };
    let p = table.classes().len();
    (0..p).all(|i| {
        (i..p).all(|j| {
            let sum: BigInt = (0..p).map(|c| &sizes[c] * table.value(i, c) * table.value(j, c)).sum();
            sum == if i == j { order.clone() } else { BigInt::zero() }
        })
    })
}

pub fn run(config: &Config, quick: bool, diag: &mut dyn Write) -> Result<VerifyReport, CliError> {
    let lim = if quick { &QUICK } else { &FULL };
    let mut checks = Vec::new();
    let mut oracle = MnOracle::new();

    let _ = writeln!(diag, "character tables up to n={}", lim.n);
    let mut tables = Vec::new();
    for n in 1..=lim.n {
        tables.push(load_or_compute(config, n)?);
    }
    let failures: Vec<String> = tables.iter().filter(|t| !orthogonal(t)).map(|t| format!("S_{}", t.n())).collect();
    checks.push(entry("orthogonality of character tables", failures, tables.len()));

    let _ = writeln!(diag, "relations against the oracle");
    let mut builder = TBuilder::new();
    let (mut failures, mut total) = (vec![], 0);
    for class in classes_with_norm_at_most(lim.relation_norm).into_iter().filter(|c| !c.is_identity()) {
        let t = builder.t_poly(&class)?;
        for n in class.supp().max(2)..=lim.n {
            for shape in YoungDiagram::all(n) {
                total += 1;
                if eval_at_character(&mut oracle, &shape, &t)? != oracle.ratio(&shape, &class)? {
                    failures.push(format!("{class} at {shape}"));
                }
            }
        }
    }
    checks.push(entry("T_lambda evaluates to the character ratio", failures, total));

    let (mut failures, mut total) = (vec![], 0);
    for class in (2..=lim.leading_supp).flat_map(partitions_of).filter(|c| !c.is_cycle() && !c.is_identity()) {
        total += 1;
        let t = builder.t_poly(&class)?;
        if extract_leading_cycle_coeff(&t, &class) != leading_cycle_coeff(&class)? {
            failures.push(class.render());
        }
    }
    checks.push(entry("leading cycle coefficient", failures, total));

    let _ = writeln!(diag, "covers");
    let (mut failures, mut total) = (vec![], 0);
    for table in tables.iter().filter(|t| t.n() >= 4) {
        total += 1;
        let n = table.n();
        let z = z_k(table, None, 3)?.value();
        if (z == Some(3)) != Z_THREE.contains(&n) {
            failures.push(format!("Z({n}) = {z:?}"));
        }
        if !small_class_violations(table).is_empty() {
            failures.push(format!("joint zeros of (2), (3), (2^2) at n={n}"));
        }
        if (8..=13).contains(&n) && !forbidden_set_scan(table)?.alarms.is_empty() {
            failures.push(format!("zero pattern outside the allowed cases at n={n}"));
        }
    }
    checks.push(entry("zero sets and covers", failures, total));

    let _ = writeln!(diag, "staircase polynomials");
    let mut staircase = Staircase::new();
    let (mut failures, mut total) = (vec![], 0);
    for class in (2..=lim.staircase_supp)
        .flat_map(partitions_of)
        .filter(|c| !c.is_identity() && c.parts().iter().all(|p| p % 2 == 1))
    {
        total += 1;
        let sp = staircase.p(&class)?;
        if sp.check().is_err() {
            failures.push(format!("{class}: structure"));
        }
        for k in 2u32.. {
            let shape = YoungDiagram::staircase(k);
            if shape.n() > lim.n {
                break;
            }
            if shape.n() >= class.supp() && sp.ratio_at(shape.n())? != oracle.ratio(&shape, &class)? {
                failures.push(format!("{class} at k={k}"));
            }
        }
    }
    checks.push(entry("staircase polynomials", failures, total));

    let _ = writeln!(diag, "octagonal polynomials");
    let mut octagonal = Octagonal::new();
    let (mut failures, mut total) = (vec![], 0);
    let classes: Vec<Partition> = (2..=lim.n).flat_map(partitions_of).filter(|c| !c.is_identity()).collect();
    for class in &classes {
        total += 1;
        let op = octagonal.p(class)?;
        if op.check().is_err() {
            failures.push(format!("{class}: structure"));
        }
        for &n in lim.octagonal_n.iter().filter(|&&n| n >= class.supp()) {
            let shape = YoungDiagram::octagonal(n).expect("octagonal number");
            if op.ratio_at(n)? != oracle.ratio(&shape, class)? {
                failures.push(format!("{class} at n={n}"));
            }
        }
    }
    checks.push(entry("octagonal polynomials", failures, total));

    let (mut failures, mut total) = (vec![], 0);
    for n in 6..=lim.n {
        let report = ratio_lower_bounds(&mut oracle, n)?;
        total += report.characters;
        failures.extend(report.violations.iter().map(|(s, c)| format!("{s} at {c}")));
    }
    checks.push(entry("lower bounds for rho((2^2)) and rho((3^2))", failures, total));

    Ok(VerifyReport { quick, checks })
}

