//! Exact command-line inputs: scalars `a` or `a/b`, matrices `1,0;0,1`,
//! vectors `1,2`, or `@file` pointing at a JSON array of scalars.

use std::fs;

use azumaya_core::document::Scalar;
use azumaya_core::{ENParams, Error, Field, Matrix, Result};
use serde_json::{json, Value};

use crate::args::EnArgs;

/// Reads `@path` arguments; anything else is returned unchanged.
pub fn read_source(text: &str) -> Result<Option<String>> {
    match text.trim().strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(Some)
            .map_err(|e| Error::Parse(format!("cannot read `{path}`: {e}"))),
        None => Ok(None),
    }
}

fn scalars<F: Field>(items: &[Scalar], what: &str) -> Result<Vec<F>> {
    items
        .iter()
        .enumerate()
        .map(|(k, s)| {
            s.parse::<F>(&format!("/{k}"))
                .map_err(|e| Error::Parse(format!("{what}: {e}")))
        })
        .collect()
}

pub fn parse_scalar<F: Field>(text: &str) -> Result<F> {
    F::parse_scalar(text)
}

pub fn parse_vector<F: Field>(text: &str) -> Result<Vec<F>> {
    if let Some(json) = read_source(text)? {
        let items: Vec<Scalar> =
            serde_json::from_str(&json).map_err(|e| Error::Parse(format!("vector file: {e}")))?;
        return scalars(&items, "vector file");
    }
    if text.trim().is_empty() {
        return Err(Error::Parse("empty vector".into()));
    }
    text.split(',').map(F::parse_scalar).collect()
}

pub fn parse_matrix<F: Field>(text: &str) -> Result<Matrix<F>> {
    let rows: Vec<Vec<F>> = match read_source(text)? {
        Some(json) => {
            let items: Vec<Vec<Scalar>> =
                serde_json::from_str(&json).map_err(|e| Error::Parse(format!("matrix file: {e}")))?;
            items
                .iter()
                .map(|row| scalars(row, "matrix file"))
                .collect::<Result<_>>()?
        }
        None => {
            if text.trim().is_empty() {
                return Err(Error::Parse("empty matrix".into()));
            }
            text.split(';')
                .map(|row| row.split(',').map(F::parse_scalar).collect())
                .collect::<Result<_>>()?
        }
    };
    let cols = rows.first().map_or(0, Vec::len);
    if cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("matrix rows must be nonempty and of equal length".into()));
    }
    Matrix::from_rows(rows)
}

/// `n` is the size of `A`; `γ` and `Λ` default to zero.
pub fn en_params<F: Field>(args: &EnArgs) -> Result<ENParams<F>> {
    let a = parse_matrix::<F>(&args.a)?;
    let n = a.rows();
    let alpha = parse_scalar::<F>(&args.alpha)?;
    let gamma = match &args.gamma {
        Some(g) => parse_vector::<F>(g)?,
        None => vec![F::zero(); n],
    };
    let lambda = match &args.lambda {
        Some(l) => parse_matrix::<F>(l)?,
        None => Matrix::zeros(n, n),
    };
    ENParams::new(n, a, alpha, gamma, lambda)
}

fn matrix_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| json!(x.to_string())).collect()))
            .collect(),
    )
}

pub fn params_json<F: Field>(p: &ENParams<F>) -> Value {
    json!({
        "n": p.n,
        "a": matrix_json(&p.a),
        "alpha": p.alpha.to_string(),
        "gamma": p.gamma.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "lambda": matrix_json(&p.lambda),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use azumaya_core::{Rational, F7};

    #[test]
    fn matrices_parse_exactly() {
        let m = parse_matrix::<Rational>("0,1/2; -3,4").unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m[(0, 1)].to_string(), "1/2");
        assert_eq!(m[(1, 0)].to_string(), "-3");
        assert!(parse_matrix::<Rational>("1,2;3").is_err());
        assert!(parse_matrix::<Rational>("0.5").is_err());
        assert_eq!(parse_matrix::<F7>("1/2").unwrap()[(0, 0)], F7::new(4));
    }

    #[test]
    fn vectors_and_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        fs::write(&path, r#"[[1, "2/3"], [0, -1]]"#).unwrap();
        let m = parse_matrix::<Rational>(&format!("@{}", path.display())).unwrap();
        assert_eq!(m[(0, 1)].to_string(), "2/3");
        assert_eq!(parse_vector::<Rational>("1,-2").unwrap().len(), 2);
        assert!(parse_matrix::<Rational>("@/nonexistent/file.json").is_err());
    }
}
