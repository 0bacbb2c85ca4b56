//! Plain-text formats.
//!
//! All formats ignore blank lines and lines whose first non-blank character
//! is `#`. Errors cite 1-based line numbers of the original input.
//!
//! * Table: a line with the order `n`, then `n` rows of `n` indices.
//! * Vectors: one vector per line, whitespace-separated scalars.
//! * Representation: a line with the degree `d`, then for each element in
//!   index order `d` rows of `d` scalars.

use crate::error::ParseError;
use crate::field::{Field, Scalar};
use crate::gyro::GyroTable;
use crate::matrix::Matrix;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_count(line: usize, text: &str, what: &str) -> Result<usize, ParseError> {
    text.parse::<usize>()
        .map_err(|_| syntax(line, format!("expected {what}, found {text:?}")))
}

fn parse_scalars(field: Field, line: usize, text: &str) -> Result<Vec<Scalar>, ParseError> {
    text.split_whitespace()
        .map(|tok| field.parse_scalar(tok).map_err(|e| syntax(line, e.to_string())))
        .collect()
}

/// Parses and validates a Cayley table.
pub fn parse_table(text: &str) -> Result<GyroTable, ParseError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| ParseError::UnexpectedEof("missing order line".into()))?;
    let n = parse_count(line, first, "the order")?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (line, text) = lines
            .next()
            .ok_or_else(|| ParseError::UnexpectedEof(format!("expected {n} rows, found {r}")))?;
        let row = text
            .split_whitespace()
            .map(|tok| {
                let v = parse_count(line, tok, "an element index")?;
                if v >= n {
                    return Err(syntax(line, format!("entry {v} is not below the order {n}")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<usize>, _>>()?;
        if row.len() != n {
            return Err(syntax(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "trailing content after the table"));
    }
    Ok(GyroTable::from_cayley(rows)?)
}

/// Writes a table in the format read by [`parse_table`].
pub fn emit_table(g: &GyroTable) -> String {
    let mut out = format!("{}\n", g.order());
    for row in g.cayley_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Parses vectors of length `dim`.
pub fn parse_vectors(text: &str, field: Field, dim: usize) -> Result<Vec<Vec<Scalar>>, ParseError> {
    content_lines(text)
        .map(|(line, t)| {
            let v = parse_scalars(field, line, t)?;
            if v.len() != dim {
                return Err(syntax(line, format!("expected {dim} entries, found {}", v.len())));
            }
            Ok(v)
        })
        .collect()
}

/// Parses a representation file for a gyrogroup of the given order,
/// returning the degree and one matrix per element.
pub fn parse_representation(text: &str, field: Field, order: usize) -> Result<(usize, Vec<Matrix>), ParseError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| ParseError::UnexpectedEof("missing degree line".into()))?;
    let d = parse_count(line, first, "the degree")?;
    let mut matrices = Vec::with_capacity(order);
    for a in 0..order {
        let mut rows = Vec::with_capacity(d);
        for r in 0..d {
            let (line, t) = lines.next().ok_or_else(|| {
                ParseError::UnexpectedEof(format!("matrix for element {a} has {r} of {d} rows"))
            })?;
            let row = parse_scalars(field, line, t)?;
            if row.len() != d {
                return Err(syntax(line, format!("expected {d} entries, found {}", row.len())));
            }
            rows.push(row);
        }
        matrices.push(Matrix::from_rows(field, d, rows));
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, format!("trailing content after {order} matrices")));
    }
    Ok((d, matrices))
}

/// Writes matrices in the format read by [`parse_representation`].
pub fn emit_representation(degree: usize, matrices: &[Matrix]) -> String {
    let mut out = format!("{degree}\n");
    for (a, m) in matrices.iter().enumerate() {
        out.push_str(&format!("# element {a}\n{m}"));
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GyroError;
    use crate::gyro::builtin;

    #[test]
    fn table_round_trip() {
        let g = builtin("g8").unwrap();
        let text = emit_table(&g);
        assert_eq!(parse_table(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# Z2\n\n2\n0 1\n  # mid\n1 0\n";
        assert_eq!(parse_table(text).unwrap().order(), 2);
    }

    #[test]
    fn errors_cite_lines() {
        assert_eq!(
            parse_table("2\n0 1\n1 x\n"),
            Err(ParseError::Syntax {
                line: 3,
                message: "expected an element index, found \"x\"".into()
            })
        );
        assert!(matches!(parse_table("2\n0 1\n1 2\n"), Err(ParseError::Syntax { line: 3, .. })));
        assert!(matches!(parse_table("2\n0 1\n"), Err(ParseError::UnexpectedEof(_))));
        assert!(matches!(parse_table("2\n0 1 1\n1 0\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_table("2\n0 1\n1 0\n0\n"), Err(ParseError::Syntax { line: 4, .. })));
        assert!(matches!(parse_table(""), Err(ParseError::UnexpectedEof(_))));
    }

    #[test]
    fn table_validation_errors_pass_through() {
        assert_eq!(
            parse_table("2\n0 1\n0 1\n"),
            Err(ParseError::Gyro(GyroError::ColumnNotPermutation(0)))
        );
    }

    #[test]
    fn vectors() {
        let q = Field::Rationals;
        let v = parse_vectors("1 -1/2\n# c\n0 3\n", q, 2).unwrap();
        assert_eq!(v[0][1], q.parse_scalar("-1/2").unwrap());
        assert!(matches!(parse_vectors("1 2 3\n", q, 2), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_vectors("1 1/0\n", q, 2), Err(ParseError::Syntax { line: 1, .. })));
        let f = Field::Prime(3);
        assert_eq!(parse_vectors("4 -1\n", f, 2).unwrap()[0], vec![f.from_i64(1), f.from_i64(2)]);
    }

    #[test]
    fn representation_round_trip() {
        let f = Field::Prime(5);
        let ms = vec![Matrix::identity(f, 2), Matrix::from_i64(f, &[&[0, 1], &[1, 0]])];
        let text = emit_representation(2, &ms);
        assert_eq!(parse_representation(&text, f, 2).unwrap(), (2, ms));
        assert!(matches!(parse_representation("2\n1 0\n0 1\n", f, 2), Err(ParseError::UnexpectedEof(_))));
    }
}
