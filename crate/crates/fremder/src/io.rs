//! Matrix ingestion and serialization: Matrix Market files (array and
//! coordinate, real/integer/complex fields, symmetry tags expanded on read)
//! and a minimal text format (first line `n`, then `n*n` lines `re im` in
//! row-major order).

use std::fmt::Write as _;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use sha2::{Digest, Sha256};

use crate::core::ComplexMatrix;
use crate::error::FremderError;

pub fn read_matrix_file(path: &Path) -> Result<ComplexMatrix, FremderError> {
    let text = std::fs::read_to_string(path)?;
    parse_matrix(&text)
}

/// Parses either format, dispatching on the Matrix Market banner.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, FremderError> {
    if text.trim_start().starts_with("%%MatrixMarket") {
        parse_matrix_market(text)
    } else {
        parse_minimal(text)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> FremderError {
    FremderError::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_f64(token: &str, line: usize) -> Result<f64, FremderError> {
    token
        .parse::<f64>()
        .map_err(|_| parse_err(line, format!("expected a number, got `{token}`")))
}

/// Minimal text format: dimension, then row-major entries as `re im` pairs
/// (a lone `re` is accepted). Blank lines and `#` comments are skipped.
pub fn parse_minimal(text: &str) -> Result<ComplexMatrix, FremderError> {
    let mut n: Option<usize> = None;
    let mut entries: Vec<Complex64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match n {
            None => {
                let dim: usize = line
                    .parse()
                    .map_err(|_| parse_err(line_no, "expected the matrix dimension"))?;
                if dim == 0 {
                    return Err(parse_err(line_no, "dimension must be positive"));
                }
                n = Some(dim);
                entries.reserve(dim * dim);
            }
            Some(dim) => {
                let mut tokens = line.split_whitespace();
                let re = parse_f64(tokens.next().unwrap(), line_no)?;
                let im = match tokens.next() {
                    Some(tok) => parse_f64(tok, line_no)?,
                    None => 0.0,
                };
                if tokens.next().is_some() {
                    return Err(parse_err(line_no, "expected `re im` on entry lines"));
                }
                if entries.len() == dim * dim {
                    return Err(parse_err(line_no, "more entries than dimension allows"));
                }
                entries.push(Complex64::new(re, im));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "empty input"))?;
    if entries.len() != n * n {
        return Err(parse_err(
            0,
            format!("expected {} entries, got {}", n * n, entries.len()),
        ));
    }
    ComplexMatrix::from_row_slice(n, &entries)
}

/// Serializes to the minimal text format with 17 significant digits, enough
/// for a bit-exact read-back.
pub fn write_minimal(m: &ComplexMatrix) -> String {
    let n = m.dim();
    let mut out = String::new();
    let _ = writeln!(out, "{n}");
    for i in 0..n {
        for j in 0..n {
            let z = m.as_inner()[(i, j)];
            let _ = writeln!(out, "{:.16e} {:.16e}", z.re, z.im);
        }
    }
    out
}

/// Hex SHA-256 of the canonical minimal-text serialization.
pub fn matrix_digest(m: &ComplexMatrix) -> String {
    let canonical = write_minimal(m);
    let hash = Sha256::digest(canonical.as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MmFormat {
    Array,
    Coordinate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MmField {
    Real,
    Integer,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MmSymmetry {
    General,
    Symmetric,
    SkewSymmetric,
    Hermitian,
}

fn parse_matrix_market(text: &str) -> Result<ComplexMatrix, FremderError> {
    let mut lines = text.lines().enumerate();

    let (_, banner) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?;
    let tokens: Vec<&str> = banner.split_whitespace().collect();
    if tokens.len() != 5 || tokens[0] != "%%MatrixMarket" || !tokens[1].eq_ignore_ascii_case("matrix")
    {
        return Err(parse_err(
            1,
            "expected banner `%%MatrixMarket matrix <format> <field> <symmetry>`",
        ));
    }
    let format = match tokens[2].to_ascii_lowercase().as_str() {
        "array" => MmFormat::Array,
        "coordinate" => MmFormat::Coordinate,
        other => return Err(parse_err(1, format!("unsupported format `{other}`"))),
    };
    let field = match tokens[3].to_ascii_lowercase().as_str() {
        "real" => MmField::Real,
        "integer" => MmField::Integer,
        "complex" => MmField::Complex,
        other => return Err(parse_err(1, format!("unsupported field `{other}`"))),
    };
    let symmetry = match tokens[4].to_ascii_lowercase().as_str() {
        "general" => MmSymmetry::General,
        "symmetric" => MmSymmetry::Symmetric,
        "skew-symmetric" => MmSymmetry::SkewSymmetric,
        "hermitian" => MmSymmetry::Hermitian,
        other => return Err(parse_err(1, format!("unsupported symmetry `{other}`"))),
    };

    // Skip comments; the next data line carries the size.
    let mut size_line = None;
    for (idx, raw) in lines.by_ref() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        size_line = Some((idx + 1, line));
        break;
    }
    let (size_no, size_text) = size_line.ok_or_else(|| parse_err(0, "missing size line"))?;
    let size_tokens: Vec<&str> = size_text.split_whitespace().collect();

    let entry_value = |tokens: &[&str], pos: usize, line_no: usize| -> Result<Complex64, FremderError> {
        match field {
            MmField::Real | MmField::Integer => {
                if tokens.len() != pos + 1 {
                    return Err(parse_err(line_no, "wrong number of values on entry line"));
                }
                Ok(Complex64::new(parse_f64(tokens[pos], line_no)?, 0.0))
            }
            MmField::Complex => {
                if tokens.len() != pos + 2 {
                    return Err(parse_err(line_no, "wrong number of values on entry line"));
                }
                Ok(Complex64::new(
                    parse_f64(tokens[pos], line_no)?,
                    parse_f64(tokens[pos + 1], line_no)?,
                ))
            }
        }
    };

    let mirror = |value: Complex64| match symmetry {
        MmSymmetry::General | MmSymmetry::Symmetric => value,
        MmSymmetry::SkewSymmetric => -value,
        MmSymmetry::Hermitian => value.conj(),
    };

    match format {
        MmFormat::Array => {
            if size_tokens.len() != 2 {
                return Err(parse_err(size_no, "array size line must be `rows cols`"));
            }
            let rows: usize = size_tokens[0]
                .parse()
                .map_err(|_| parse_err(size_no, "bad row count"))?;
            let cols: usize = size_tokens[1]
                .parse()
                .map_err(|_| parse_err(size_no, "bad column count"))?;
            if rows != cols || rows == 0 {
                return Err(FremderError::NonSquare { rows, cols });
            }
            let n = rows;
            let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
            // Column-major; symmetric and hermitian store the lower triangle
            // including the diagonal, skew-symmetric the strict lower triangle.
            let mut slots: Vec<(usize, usize)> = Vec::new();
            for j in 0..n {
                let start = match symmetry {
                    MmSymmetry::General => 0,
                    MmSymmetry::Symmetric | MmSymmetry::Hermitian => j,
                    MmSymmetry::SkewSymmetric => j + 1,
                };
                for i in start..n {
                    slots.push((i, j));
                }
            }
            let mut slot_iter = slots.into_iter();
            for (idx, raw) in lines.by_ref() {
                let line_no = idx + 1;
                let line = raw.trim();
                if line.is_empty() || line.starts_with('%') {
                    continue;
                }
                let (i, j) = slot_iter
                    .next()
                    .ok_or_else(|| parse_err(line_no, "more entries than the size line allows"))?;
                let tokens: Vec<&str> = line.split_whitespace().collect();
                let value = entry_value(&tokens, 0, line_no)?;
                m[(i, j)] = value;
                if symmetry != MmSymmetry::General && i != j {
                    m[(j, i)] = mirror(value);
                }
            }
            if slot_iter.next().is_some() {
                return Err(parse_err(0, "fewer entries than the size line requires"));
            }
            ComplexMatrix::new(m)
        }
        MmFormat::Coordinate => {
            if size_tokens.len() != 3 {
                return Err(parse_err(size_no, "coordinate size line must be `rows cols nnz`"));
            }
            let rows: usize = size_tokens[0]
                .parse()
                .map_err(|_| parse_err(size_no, "bad row count"))?;
            let cols: usize = size_tokens[1]
                .parse()
                .map_err(|_| parse_err(size_no, "bad column count"))?;
            let nnz: usize = size_tokens[2]
                .parse()
                .map_err(|_| parse_err(size_no, "bad nonzero count"))?;
            if rows != cols || rows == 0 {
                return Err(FremderError::NonSquare { rows, cols });
            }
            let n = rows;
            let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
            let mut seen = 0usize;
            for (idx, raw) in lines.by_ref() {
                let line_no = idx + 1;
                let line = raw.trim();
                if line.is_empty() || line.starts_with('%') {
                    continue;
                }
                if seen == nnz {
                    return Err(parse_err(line_no, "more entries than the size line allows"));
                }
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() < 2 {
                    return Err(parse_err(line_no, "expected `i j value`"));
                }
                let i: usize = tokens[0]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad row index"))?;
                let j: usize = tokens[1]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad column index"))?;
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(parse_err(line_no, "index out of range (indices are 1-based)"));
                }
                let value = entry_value(&tokens, 2, line_no)?;
                m[(i - 1, j - 1)] = value;
                if symmetry != MmSymmetry::General && i != j {
                    m[(j - 1, i - 1)] = mirror(value);
                }
                seen += 1;
            }
            if seen != nnz {
                return Err(parse_err(0, "fewer entries than the size line requires"));
            }
            ComplexMatrix::new(m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn minimal_round_trip_is_exact() {
        let a = ComplexMatrix::from_row_slice(
            2,
            &[
                c(1.0 / 3.0, -2.0 / 7.0),
                c(0.0, 1e-15),
                c(std::f64::consts::PI, 0.0),
                c(-1.0, 1.0),
            ],
        )
        .unwrap();
        let text = write_minimal(&a);
        let back = parse_minimal(&text).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn minimal_rejects_wrong_entry_count() {
        assert!(parse_minimal("2\n1 0\n2 0\n3 0\n").is_err());
    }

    #[test]
    fn matrix_market_array_complex() {
        let text = "%%MatrixMarket matrix array complex general\n% comment\n2 2\n1.0 0.0\n0.0 0.0\n2.0 0.0\n-1.0 0.0\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.as_inner()[(0, 0)], c(1.0, 0.0));
        assert_eq!(m.as_inner()[(0, 1)], c(2.0, 0.0));
        assert_eq!(m.as_inner()[(1, 0)], c(0.0, 0.0));
        assert_eq!(m.as_inner()[(1, 1)], c(-1.0, 0.0));
    }

    #[test]
    fn matrix_market_coordinate_hermitian_expands() {
        let text = "%%MatrixMarket matrix coordinate complex hermitian\n2 2 2\n1 1 1.0 0.0\n2 1 0.5 0.5\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.as_inner()[(1, 0)], c(0.5, 0.5));
        assert_eq!(m.as_inner()[(0, 1)], c(0.5, -0.5));
    }

    #[test]
    fn matrix_market_array_symmetric_lower_triangle() {
        let text = "%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n3\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.as_inner()[(0, 1)], c(2.0, 0.0));
        assert_eq!(m.as_inner()[(1, 0)], c(2.0, 0.0));
        assert_eq!(m.as_inner()[(1, 1)], c(3.0, 0.0));
    }

    #[test]
    fn matrix_market_skew_symmetric_array() {
        let text = "%%MatrixMarket matrix array real skew-symmetric\n2 2\n5\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.as_inner()[(1, 0)], c(5.0, 0.0));
        assert_eq!(m.as_inner()[(0, 1)], c(-5.0, 0.0));
        assert_eq!(m.as_inner()[(0, 0)], c(0.0, 0.0));
    }

    #[test]
    fn non_square_is_rejected() {
        let text = "%%MatrixMarket matrix coordinate real general\n2 3 1\n1 1 1.0\n";
        assert!(matches!(
            parse_matrix(text),
            Err(FremderError::NonSquare { .. })
        ));
    }

    #[test]
    fn malformed_banner_is_rejected() {
        assert!(parse_matrix("%%MatrixMarket tensor array real general\n1 1\n1\n").is_err());
    }

    #[test]
    fn digest_is_stable_and_content_sensitive() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(2);
        assert_eq!(matrix_digest(&a), matrix_digest(&b));
        let d = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(2.0, 0.0)]);
        assert_ne!(matrix_digest(&a), matrix_digest(&d));
        assert_eq!(matrix_digest(&a).len(), 64);
    }
}
