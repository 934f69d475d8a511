//! Machine-readable reports. Exact numbers travel as decimal or rational strings.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub shape: String,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub n: u32,
    pub classes: Vec<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnReport {
    pub x: String,
    pub y: String,
    pub target: String,
    pub polynomial: String,
    pub n: Option<u32>,
    pub count: Option<String>,
    pub brute_force: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub class: String,
    pub relation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TpolyReport {
    pub relations: Vec<RelationEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerReport {
    pub zeros: Vec<String>,
    pub cap: u32,
    pub inconsistent: bool,
    pub basis: Vec<String>,
    pub constraints: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioCheck {
    pub n: u32,
    pub shape: String,
    pub polynomial: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub kind: String,
    pub class: String,
    pub polynomial: String,
    pub degree: Option<usize>,
    pub checks_passed: bool,
    pub ratio: Option<RatioCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub shape: String,
    pub zeros: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub n: u32,
    pub cap: Option<u32>,
    pub limit: usize,
    pub outcome: String,
    pub z: Option<usize>,
    pub witness: Vec<String>,
    pub uncovered: Vec<String>,
    pub forced_three_cycle: Vec<ScanEntry>,
    pub scan_alarms: Option<Vec<ScanEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub family: String,
    pub parameters: String,
    pub shape: String,
    pub n: u32,
    pub class: String,
    pub formula: String,
    pub oracle: String,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamiliesReport {
    pub entries: Vec<FamilyEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub quick: bool,
    pub checks: Vec<CheckEntry>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}
