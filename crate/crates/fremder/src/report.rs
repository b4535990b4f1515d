//! The machine-readable report emitted by the command-line tool, schema
//! `fremder-report/1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "fremder-report/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub input_digest: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<SolutionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region: Option<RegionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairReport>>,
    pub diagnostics: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionReport {
    /// Entries as `[re, im]` pairs.
    pub vector: Vec<[f64; 2]>,
    pub residual: [f64; 2],
    pub kind: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionReport {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub exact: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairReport {
    pub z: f64,
    pub vector: Vec<[f64; 2]>,
    pub residual: [f64; 2],
    pub kind: String,
}

pub fn vector_entries(x: &DVector<Complex64>) -> Vec<[f64; 2]> {
    x.iter().map(|z| [z.re, z.im]).collect()
}

impl Report {
    pub fn new(command: &str, input_digest: String, status: &str) -> Self {
        Report {
            schema: REPORT_SCHEMA.to_string(),
            command: command.to_string(),
            input_digest,
            status: status.to_string(),
            solution: None,
            region: None,
            pairs: None,
            diagnostics: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Flat `key = value` rendering with 17 significant digits on floats.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "schema = {}", self.schema);
        let _ = writeln!(out, "command = {}", self.command);
        let _ = writeln!(out, "input_digest = {}", self.input_digest);
        let _ = writeln!(out, "status = {}", self.status);
        if let Some(sol) = &self.solution {
            let _ = writeln!(out, "solution.kind = {}", sol.kind);
            let _ = writeln!(
                out,
                "solution.residual = {:.16e} {:.16e}",
                sol.residual[0], sol.residual[1]
            );
            for (j, entry) in sol.vector.iter().enumerate() {
                let _ = writeln!(out, "solution.x[{j}] = {:.16e} {:.16e}", entry[0], entry[1]);
            }
        }
        if let Some(region) = &self.region {
            let _ = writeln!(out, "region.re_min = {:.16e}", region.re_min);
            let _ = writeln!(out, "region.re_max = {:.16e}", region.re_max);
            let _ = writeln!(out, "region.im_min = {:.16e}", region.im_min);
            let _ = writeln!(out, "region.im_max = {:.16e}", region.im_max);
            let _ = writeln!(out, "region.exact = {}", region.exact);
        }
        if let Some(pairs) = &self.pairs {
            let _ = writeln!(out, "pairs.count = {}", pairs.len());
            for (k, pair) in pairs.iter().enumerate() {
                let _ = writeln!(out, "pairs[{k}].z = {:.16e}", pair.z);
                let _ = writeln!(out, "pairs[{k}].kind = {}", pair.kind);
                let _ = writeln!(
                    out,
                    "pairs[{k}].residual = {:.16e} {:.16e}",
                    pair.residual[0], pair.residual[1]
                );
                for (j, entry) in pair.vector.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "pairs[{k}].x[{j}] = {:.16e} {:.16e}",
                        entry[0], entry[1]
                    );
                }
            }
        }
        for (key, value) in &self.diagnostics {
            let _ = writeln!(out, "diagnostics.{key} = {value}");
        }
        out
    }
}
