//! Numeric CSV tables with byte-stable formatting.

use std::io::Write;
use std::path::Path;

use crate::error::{CliError, CliResult};

/// Column headers carry their unit in parentheses, e.g. `theta (rad)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// 17 significant digits in scientific notation, so values round-trip.
pub fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

impl Table {
    pub fn new(headers: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    /// Index of the column whose header starts with `name`.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h.split(" (").next() == Some(name))
    }

    pub fn to_csv(&self) -> Vec<u8> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(|&x| format_value(x))).expect("in-memory write");
        }
        w.into_inner().expect("in-memory flush")
    }
}

/// Writes `bytes` to `path` through a temporary file in the same directory
/// followed by a rename, so readers never observe a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> CliResult<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir.display(), e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(path.display(), e))?;
    tmp.as_file().sync_all().map_err(|e| CliError::io(path.display(), e))?;
    tmp.persist(path).map_err(|e| CliError::io(path.display(), e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_is_fixed() {
        assert_eq!(format_value(0.825), "8.2499999999999996e-1");
        assert_eq!(format_value(-1.0), "-1.0000000000000000e0");
        let mut t = Table::new(["c (1)", "mu_ef/mu (1)"]);
        t.push(vec![0.1, 0.5]);
        let s = String::from_utf8(t.to_csv()).unwrap();
        assert_eq!(s, "c (1),mu_ef/mu (1)\n1.0000000000000001e-1,5.0000000000000000e-1\n");
        assert_eq!(t.column("mu_ef/mu"), Some(1));
    }
}
