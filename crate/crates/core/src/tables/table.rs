use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("empty table")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    Ragged { row: usize, len: usize, n: usize },
    #[error("expected {n} rows, found {rows}")]
    RowCount { rows: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for order {n}")]
    OutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("order {0} exceeds the supported maximum of 65535")]
    TooLarge(usize),
}

/// A binary operation on `{0, ..., n-1}` stored row-major: `get(x, y) = x ∗ y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MulTable {
    n: usize,
    t: Vec<u16>,
}

impl MulTable {
    /// Validates a raw `n × n` table. Never clamps.
    pub fn new(n: usize, raw: &[Vec<usize>]) -> Result<Self, TableError> {
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > u16::MAX as usize {
            return Err(TableError::TooLarge(n));
        }
        if raw.len() != n {
            return Err(TableError::RowCount { rows: raw.len(), n });
        }
        let mut t = Vec::with_capacity(n * n);
        for (row, r) in raw.iter().enumerate() {
            if r.len() != n {
                return Err(TableError::Ragged { row, len: r.len(), n });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(TableError::OutOfRange { row, col, value, n });
                }
                t.push(value as u16);
            }
        }
        Ok(Self { n, t })
    }

    /// Builds the table of `f`, validating every entry.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, TableError> {
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > u16::MAX as usize {
            return Err(TableError::TooLarge(n));
        }
        let mut t = Vec::with_capacity(n * n);
        for row in 0..n {
            for col in 0..n {
                let value = f(row, col);
                if value >= n {
                    return Err(TableError::OutOfRange { row, col, value, n });
                }
                t.push(value as u16);
            }
        }
        Ok(Self { n, t })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.t[x * self.n + y] as usize
    }

    pub fn row(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.t[x * self.n..(x + 1) * self.n].iter().map(|&v| v as usize)
    }

    pub fn column(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).map(move |x| self.get(x, y))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x).collect()).collect()
    }

    /// First row that is not a permutation, if any.
    pub fn first_non_permutation_row(&self) -> Option<usize> {
        (0..self.n).find(|&x| !is_permutation(self.row(x), self.n))
    }

    pub fn first_non_permutation_column(&self) -> Option<usize> {
        (0..self.n).find(|&y| !is_permutation(self.column(y), self.n))
    }

    pub fn is_latin(&self) -> bool {
        self.first_non_permutation_row().is_none() && self.first_non_permutation_column().is_none()
    }

    pub fn transpose(&self) -> MulTable {
        MulTable { n: self.n, t: (0..self.n * self.n).map(|i| self.t[(i % self.n) * self.n + i / self.n]).collect() }
    }

    /// The isomorphic copy under `φ`: `φ(x) ∗' φ(y) = φ(x ∗ y)`.
    pub fn relabel(&self, phi: &Permutation) -> MulTable {
        assert_eq!(phi.degree(), self.n);
        let mut t = vec![0u16; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                t[phi.apply(x) * self.n + phi.apply(y)] = phi.apply(self.get(x, y)) as u16;
            }
        }
        MulTable { n: self.n, t }
    }

    /// True when `φ(x ∗ y) = φ(x) ∗' φ(y)` for all pairs.
    pub fn is_isomorphism_to(&self, other: &MulTable, phi: &Permutation) -> bool {
        self.n == other.n
            && phi.degree() == self.n
            && (0..self.n).all(|x| {
                (0..self.n).all(|y| phi.apply(self.get(x, y)) == other.get(phi.apply(x), phi.apply(y)))
            })
    }
}

fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

impl fmt::Debug for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MulTable(n = {})", self.n)?;
        for x in 0..self.n {
            let row: Vec<String> = self.row(x).map(|v| v.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}
