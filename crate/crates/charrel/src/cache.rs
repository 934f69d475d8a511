//! Character tables on disk and the parallel table fill.
//!
//! A cache file is plain text: a header line `charrel-table n <n> p <p(n)>`,
//! a `classes` line, a `shapes` line, one line of decimal values per shape,
//! and finally `sha256 <hex>` over everything before it.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use charrel_core::oracle::{CharTable, MnOracle, YoungDiagram};
use charrel_core::partition::partitions_of;
use charrel_core::{Error, Partition};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::CliError;

pub fn table_file(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("table-{n}.txt"))
}

/// Fills the table row by row on a pool of `threads` workers.
pub fn compute_parallel(n: u32, max_n: u32, threads: usize) -> Result<CharTable, CliError> {
    CharTable::guard(n, max_n)?;
    let classes = partitions_of(n);
    let shapes = YoungDiagram::all(n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    let values = pool.install(|| {
        shapes
            .par_iter()
            .map_init(MnOracle::new, |oracle, shape| oracle.row(shape, &classes))
            .collect::<Result<Vec<_>, Error>>()
    })?;
    Ok(CharTable::from_parts(n, classes, shapes, values)?)
}

pub fn encode(table: &CharTable) -> String {
    let join = |items: Vec<String>| items.join(";");
    let mut body = String::new();
    writeln!(body, "charrel-table n {} p {}", table.n(), table.classes().len()).unwrap();
    writeln!(body, "classes {}", join(table.classes().iter().map(|c| c.render()).collect())).unwrap();
    let shapes = table
        .characters()
        .iter()
        .map(|s| s.rows().iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    writeln!(body, "shapes {}", join(shapes.collect())).unwrap();
    for row in table.values() {
        let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
        writeln!(body, "{}", cells.join(" ")).unwrap();
    }
    let digest = hex(&Sha256::digest(body.as_bytes()));
    body.push_str(&format!("sha256 {digest}\n"));
    body
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses a cache file; `None` for anything malformed or failing its checksum.
pub fn decode(text: &str) -> Option<CharTable> {
    let (body, tail) = text.trim_end().rsplit_once('\n')?;
    let body = format!("{body}\n");
    let digest = tail.strip_prefix("sha256 ")?;
    if hex(&Sha256::digest(body.as_bytes())) != digest {
        return None;
    }
    let mut lines = body.lines();
    let header: Vec<&str> = lines.next()?.split_whitespace().collect();
    let (n, p): (u32, usize) = match header.as_slice() {
        ["charrel-table", "n", n, "p", p] => (n.parse().ok()?, p.parse().ok()?),
        _ => return None,
    };
    let classes: Vec<Partition> = lines
        .next()?
        .strip_prefix("classes ")?
        .split(';')
        .map(|c| c.parse().ok())
        .collect::<Option<_>>()?;
    let shapes: Vec<YoungDiagram> = lines
        .next()?
        .strip_prefix("shapes ")?
        .split(';')
        .map(|s| s.parse().ok())
        .collect::<Option<_>>()?;
    let values: Vec<Vec<BigInt>> = lines
        .map(|l| l.split(' ').map(|v| v.parse().ok()).collect::<Option<_>>())
        .collect::<Option<_>>()?;
    if classes.len() != p {
        return None;
    }
    CharTable::from_parts(n, classes, shapes, values).ok()
}

/// Reads the cached table for `n`, computing and storing it on a miss.
pub fn load_or_compute(config: &Config, n: u32) -> Result<CharTable, CliError> {
    CharTable::guard(n, config.max_table_n)?;
    let Some(dir) = config.cache_path() else {
        return compute_parallel(n, config.max_table_n, config.threads);
    };
    let path = table_file(&dir, n);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Some(table) = decode(&text) {
            if table.n() == n {
                return Ok(table);
            }
        }
        eprintln!("cache file {} is stale or corrupt, recomputing", path.display());
    }
    eprintln!("computing the character table of S_{n}");
    let table = compute_parallel(n, config.max_table_n, config.threads)?;
    fs::create_dir_all(&dir)?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, encode(&table))?;
    fs::rename(&tmp, &path)?;
    Ok(table)
}
