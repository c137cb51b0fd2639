//! Plain-text interchange format for multiplication tables, braided sets and permutation lists.
//!
//! A table is its order `n` on one line followed by `n` lines of `n` whitespace-separated
//! 0-based entries. Lines starting with `#` are comments. A file may hold several tables
//! separated by blank lines, each optionally preceded by an `@name` header. A braided set is a
//! file with exactly two tables named `circ` and `bullet`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::braided::BraidedSet;
use crate::perm::Permutation;
use crate::tables::{MulTable, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected the table order, found `{0}`")]
    ExpectedOrder(String),
    #[error("`{0}` is not a non-negative integer")]
    BadToken(String),
    #[error("row has {found} entries, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("file ends after {found} of {expected} rows")]
    MissingRows { expected: usize, found: usize },
    #[error("entry {value} is out of range for order {n}")]
    OutOfRange { value: usize, n: usize },
    #[error("header `@{0}` is not followed by a table")]
    DanglingHeader(String),
    #[error("empty header name")]
    EmptyHeader,
    #[error("no tables found")]
    NoTables,
    #[error("found {0} tables where one was expected")]
    TooManyTables(usize),
    #[error("expected tables @circ and @bullet, found {0}")]
    NotBraided(String),
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// A parse failure at a 1-based line number (0 when the failure concerns the whole file).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// A table with its optional name and the comment lines written directly above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedTable {
    pub comments: Vec<String>,
    pub name: Option<String>,
    pub table: MulTable,
}

impl NamedTable {
    pub fn new(name: Option<&str>, table: MulTable) -> Self {
        Self { comments: Vec::new(), name: name.map(str::to_string), table }
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        self.comments.push(comment.into());
        self
    }
}

fn parse_usize(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| err(line, ParseErrorKind::BadToken(tok.to_string())))
}

/// Parses every table in `text`.
pub fn parse_tables(text: &str) -> Result<Vec<NamedTable>, ParseError> {
    let mut out = Vec::new();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).peekable();
    let mut comments = Vec::new();
    let mut header: Option<(usize, String)> = None;
    while let Some((ln, line)) = lines.next() {
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            continue;
        }
        if let Some(name) = line.strip_prefix('@') {
            let name = name.trim();
            if name.is_empty() {
                return Err(err(ln, ParseErrorKind::EmptyHeader));
            }
            if let Some((hl, h)) = header {
                return Err(err(hl, ParseErrorKind::DanglingHeader(h)));
            }
            header = Some((ln, name.to_string()));
            continue;
        }
        let mut toks = line.split_whitespace();
        let n = match (toks.next(), toks.next()) {
            (Some(t), None) => t.parse::<usize>().map_err(|_| err(ln, ParseErrorKind::ExpectedOrder(line.to_string())))?,
            _ => return Err(err(ln, ParseErrorKind::ExpectedOrder(line.to_string()))),
        };
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
        while rows.len() < n {
            let Some((rl, row)) = lines.next() else {
                return Err(err(ln, ParseErrorKind::MissingRows { expected: n, found: rows.len() }));
            };
            if row.starts_with('#') {
                continue;
            }
            if row.is_empty() {
                return Err(err(rl, ParseErrorKind::MissingRows { expected: n, found: rows.len() }));
            }
            let vals = row.split_whitespace().map(|t| parse_usize(rl, t)).collect::<Result<Vec<_>, _>>()?;
            if vals.len() != n {
                return Err(err(rl, ParseErrorKind::RowLength { expected: n, found: vals.len() }));
            }
            if let Some(&v) = vals.iter().find(|&&v| v >= n) {
                return Err(err(rl, ParseErrorKind::OutOfRange { value: v, n }));
            }
            rows.push(vals);
        }
        let table = MulTable::new(n, &rows).map_err(|e| err(ln, e.into()))?;
        out.push(NamedTable { comments: std::mem::take(&mut comments), name: header.take().map(|h| h.1), table });
    }
    if let Some((hl, h)) = header {
        return Err(err(hl, ParseErrorKind::DanglingHeader(h)));
    }
    Ok(out)
}

/// Parses a file that must contain exactly one table.
pub fn parse_single_table(text: &str) -> Result<NamedTable, ParseError> {
    let mut t = parse_tables(text)?;
    match t.len() {
        0 => Err(err(0, ParseErrorKind::NoTables)),
        1 => Ok(t.pop().expect("one table")),
        k => Err(err(0, ParseErrorKind::TooManyTables(k))),
    }
}

fn write_table(out: &mut String, t: &NamedTable) {
    for c in &t.comments {
        if c.is_empty() {
            out.push_str("#\n");
        } else {
            let _ = writeln!(out, "# {c}");
        }
    }
    if let Some(name) = &t.name {
        let _ = writeln!(out, "@{name}");
    }
    let _ = writeln!(out, "{}", t.table.order());
    for row in t.table.rows() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

/// Writes tables separated by blank lines.
pub fn emit_tables(tables: &[NamedTable]) -> String {
    let mut out = String::new();
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        write_table(&mut out, t);
    }
    out
}

pub fn emit_table(name: Option<&str>, m: &MulTable) -> String {
    emit_tables(&[NamedTable::new(name, m.clone())])
}

/// `@circ` and `@bullet` tables, with optional leading comments.
pub fn emit_braided(comments: &[&str], b: &BraidedSet) -> String {
    let mut circ = NamedTable::new(Some("circ"), b.circ().clone());
    circ.comments = comments.iter().map(|c| c.to_string()).collect();
    emit_tables(&[circ, NamedTable::new(Some("bullet"), b.bullet().clone())])
}

pub fn parse_braided(text: &str) -> Result<BraidedSet, ParseError> {
    let tables = parse_tables(text)?;
    let names: Vec<Option<&str>> = tables.iter().map(|t| t.name.as_deref()).collect();
    if names != [Some("circ"), Some("bullet")] {
        let shown: Vec<String> = names.iter().map(|n| n.map_or("(unnamed)".to_string(), |n| format!("@{n}"))).collect();
        return Err(err(0, ParseErrorKind::NotBraided(shown.join(", "))));
    }
    BraidedSet::new(tables[0].table.clone(), tables[1].table.clone())
        .map_err(|e| err(0, ParseErrorKind::NotBraided(e.to_string())))
}

/// True if the text holds a braided set rather than plain tables.
pub fn looks_braided(tables: &[NamedTable]) -> bool {
    tables.len() == 2 && tables[0].name.as_deref() == Some("circ") && tables[1].name.as_deref() == Some("bullet")
}

/// Degree on the first line, then one image tuple per line.
pub fn emit_permutations(n: usize, perms: &[Permutation]) -> String {
    let mut out = format!("{n}\n");
    for p in perms {
        let line: Vec<String> = p.images().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_permutations(text: &str) -> Result<(usize, Vec<Permutation>), ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, first) = lines.next().ok_or_else(|| err(0, ParseErrorKind::NoTables))?;
    let n = first.parse::<usize>().map_err(|_| err(ln, ParseErrorKind::ExpectedOrder(first.to_string())))?;
    let mut perms = Vec::new();
    for (ln, line) in lines {
        let vals = line.split_whitespace().map(|t| parse_usize(ln, t)).collect::<Result<Vec<_>, _>>()?;
        if vals.len() != n {
            return Err(err(ln, ParseErrorKind::RowLength { expected: n, found: vals.len() }));
        }
        perms.push(Permutation::new(vals).map_err(|e| err(ln, ParseErrorKind::NotPermutation(e.to_string())))?);
    }
    Ok((n, perms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_headers_and_several_tables() {
        let text = "# two tables\n@a\n2\n0 1\n1 0\n\n# rows may be commented\n3\n0 1 2\n# inside\n1 2 0\n2 0 1\n";
        let t = parse_tables(text).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].name.as_deref(), Some("a"));
        assert_eq!(t[0].comments, vec!["two tables".to_string()]);
        assert_eq!(t[1].name, None);
        assert_eq!(t[1].table.get(1, 2), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_tables("2\n0 1\n1\n").unwrap_err();
        assert_eq!(e, ParseError { line: 3, kind: ParseErrorKind::RowLength { expected: 2, found: 1 } });
        assert_eq!(parse_tables("2\n0 x\n").unwrap_err().line, 2);
        assert_eq!(parse_tables("2\n0 2\n1 0\n").unwrap_err().kind, ParseErrorKind::OutOfRange { value: 2, n: 2 });
        assert_eq!(parse_tables("@a\n@b\n1\n0\n").unwrap_err().line, 1);
        assert!(matches!(parse_tables("3\n0 1 2\n").unwrap_err().kind, ParseErrorKind::MissingRows { .. }));
        assert!(matches!(parse_tables("1 2\n").unwrap_err().kind, ParseErrorKind::ExpectedOrder(_)));
    }

    #[test]
    fn braided_round_trip() {
        let b = BraidedSet::from_fn(3, |x, y| ((2 * x + 3 - y) % 3, x)).unwrap();
        let text = emit_braided(&["dihedral quandle"], &b);
        assert!(text.starts_with("# dihedral quandle\n@circ\n3\n"));
        assert_eq!(parse_braided(&text).unwrap(), b);
        assert!(parse_braided(&emit_table(Some("circ"), b.circ())).is_err());
    }

    #[test]
    fn permutation_round_trip() {
        let perms = vec![Permutation::identity(3), Permutation::new(vec![2, 0, 1]).unwrap()];
        let text = emit_permutations(3, &perms);
        assert_eq!(text, "3\n0 1 2\n2 0 1\n");
        assert_eq!(parse_permutations(&text).unwrap(), (3, perms));
        assert!(parse_permutations("2\n0 0\n").is_err());
    }
}
