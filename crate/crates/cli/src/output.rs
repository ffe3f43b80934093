use std::fs;
use std::path::Path;

use crate::error::{CliError, Result};

/// 17 significant digits, `.` decimal separator.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn create_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// Renders rows as RFC-4180 CSV with a header.
pub fn csv_string<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(|c| c.as_ref()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Numerical(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(sci(4.0 / 3.0), "1.3333333333333333e0");
        assert_eq!(sci(4.0 / 3.0).parse::<f64>().unwrap(), 4.0 / 3.0);
        assert_eq!(sci(-0.1), "-1.0000000000000001e-1");
    }

    #[test]
    fn csv_quotes_when_needed() {
        let s = csv_string(&["a", "b"], &[vec!["1", "x, y"]]).unwrap();
        assert_eq!(s, "a,b\n1,\"x, y\"\n");
    }
}
