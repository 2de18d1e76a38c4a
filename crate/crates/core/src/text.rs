//! Plain-text matrix format.
//!
//! One row per line, entries separated by whitespace. Blank lines are
//! skipped and `#` starts a comment that runs to the end of the line.
//! Dimensions are inferred from the content.

use crate::error::{Error, Result};
use crate::matrix::{AnyMatrix, Matrix};
use crate::scalar::{classify, Exact, Float, LiteralKind, Mode, Scalar};

/// How to pick the arithmetic for parsed input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeChoice {
    /// Exact unless some token is written in scientific notation.
    #[default]
    Auto,
    Exact,
    Float,
}

impl ModeChoice {
    /// Resolves `Auto` against a set of literal tokens.
    pub fn resolve<'a>(self, tokens: impl IntoIterator<Item = &'a str>) -> Mode {
        match self {
            ModeChoice::Exact => Mode::Exact,
            ModeChoice::Float => Mode::Float,
            ModeChoice::Auto => {
                if tokens
                    .into_iter()
                    .any(|t| classify(t) == Some(LiteralKind::Scientific))
                {
                    Mode::Float
                } else {
                    Mode::Exact
                }
            }
        }
    }
}

/// A token with its 1-based source position.
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Vec<Vec<Token<'_>>> {
    let mut rows = Vec::new();
    for (ln, raw) in src.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut row = Vec::new();
        let mut start = None;
        for (pos, ch) in body
            .char_indices()
            .chain(std::iter::once((body.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    row.push(Token {
                        text: &body[s..pos],
                        line: ln + 1,
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    rows
}

pub fn parse_matrix<T: Scalar>(src: &str) -> Result<Matrix<T>> {
    let rows = tokenize(src);
    let width = rows.first().map_or(0, Vec::len);
    let mut parsed = Vec::with_capacity(rows.len());
    for row in &rows {
        if row.len() != width {
            let tok = &row[0];
            return Err(Error::Parse {
                line: tok.line,
                column: tok.column,
                message: format!("row has {} entries, expected {width}", row.len()),
            });
        }
        let values = row
            .iter()
            .map(|tok| {
                T::parse_literal(tok.text).map_err(|e| Error::Parse {
                    line: tok.line,
                    column: tok.column,
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<T>>>()?;
        parsed.push(values);
    }
    Matrix::from_rows(parsed)
}

/// Parses a matrix, choosing the arithmetic from `choice`.
pub fn parse_any(src: &str, choice: ModeChoice) -> Result<AnyMatrix> {
    let rows = tokenize(src);
    let mode = choice.resolve(rows.iter().flatten().map(|t| t.text));
    Ok(match mode {
        Mode::Exact => AnyMatrix::Exact(parse_matrix::<Exact>(src)?),
        Mode::Float => AnyMatrix::Float(parse_matrix::<Float>(src)?),
    })
}
