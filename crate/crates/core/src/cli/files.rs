//! On-disk formats: states, channels, group tables and reports.
//!
//! Complex matrices are nested row arrays of `[re, im]` pairs.

use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::ExperimentReport;
use crate::groups::FiniteGroup;
use crate::linalg::ComplexMatrix;
use crate::measures::MeasureResult;
use crate::quantum::{DensityOperator, KrausChannel};

pub type JsonMatrix = Vec<Vec<[f64; 2]>>;

pub fn matrix_from_json(rows: &JsonMatrix, nrows: usize, ncols: usize, what: &str) -> Result<ComplexMatrix> {
    if rows.len() != nrows {
        return Err(Error::DimensionMismatch(format!("{what}: expected {nrows} rows, found {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(nrows * ncols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(Error::DimensionMismatch(format!(
                "{what}: row {i} has {} entries, expected {ncols}",
                row.len()
            )));
        }
        entries.extend(row.iter().map(|[re, im]| Complex64::new(*re, *im)));
    }
    ComplexMatrix::new(nrows, ncols, &entries)
}

pub fn matrix_to_json(m: &ComplexMatrix) -> JsonMatrix {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| {
                    let z = m.get(i, j);
                    [crate::real::round_sig(z.re), crate::real::round_sig(z.im)]
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dim: usize,
    pub matrix: JsonMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl StateFile {
    pub fn from_state(rho: &DensityOperator, label: Option<String>) -> Self {
        Self { dim: rho.dim(), matrix: matrix_to_json(rho.matrix()), label }
    }

    pub fn to_state(&self) -> Result<DensityOperator> {
        if self.dim == 0 {
            return Err(Error::InvalidState("dim must be positive".into()));
        }
        DensityOperator::new(matrix_from_json(&self.matrix, self.dim, self.dim, "state matrix")?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelFile {
    pub input_dim: usize,
    pub output_dim: usize,
    pub kraus: Vec<JsonMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ChannelFile {
    pub fn to_channel(&self) -> Result<KrausChannel> {
        if self.input_dim == 0 || self.output_dim == 0 {
            return Err(Error::InvalidArgument("channel dimensions must be positive".into()));
        }
        let ops = self
            .kraus
            .iter()
            .enumerate()
            .map(|(k, m)| matrix_from_json(m, self.output_dim, self.input_dim, &format!("Kraus operator {k}")))
            .collect::<Result<Vec<_>>>()?;
        KrausChannel::new(ops)
    }

    pub fn from_channel(ch: &KrausChannel, label: Option<String>) -> Self {
        Self {
            input_dim: ch.input_dim(),
            output_dim: ch.output_dim(),
            kraus: ch.kraus_ops().iter().map(matrix_to_json).collect(),
            label,
        }
    }
}

/// A finite group as a multiplication table: `table[g][h]` is the index of
/// `gh`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: usize,
}

impl GroupFile {
    pub fn to_group(&self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::InvalidGroup(format!(
                "order {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        let labels = match &self.labels {
            Some(l) => l.clone(),
            None => (0..self.order).map(|g| g.to_string()).collect(),
        };
        FiniteGroup::new(labels, self.table.clone(), self.identity)
    }
}

/// Outcome of `check-channel`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelCheckReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub channel_label: Option<String>,
    pub input_group: String,
    pub output_group: String,
    #[serde(with = "crate::real")]
    pub tolerance: f64,
    #[serde(with = "crate::real")]
    pub max_deviation: f64,
    pub symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Measure(MeasureResult),
    Experiment(ExperimentReport),
    ChannelCheck(ChannelCheckReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    pub seed: u64,
    pub payload: Payload,
    pub started_unix: u64,
    pub finished_unix: u64,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path, what: &str) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{what} {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{what} {}: {e}", path.display())))
}

/// Writes to a temporary file next to `path` and renames it into place, so
/// a failed write leaves no partial file.
pub fn write_json_atomic<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(format!("serializing report: {e}")))?;
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| Error::InvalidArgument(format!("writing {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(text.as_bytes()).map_err(io)?;
    tmp.write_all(b"\n").map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
