//! Involution-class counts over a list of ingested loops, compared with published values.

use super::ClassifyError;
use crate::morphisms::{n_ci, SearchOptions};
use crate::tables::{BruckLoopData, MulTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub name: String,
    pub order: usize,
    pub n_ci: usize,
    pub expected: Option<usize>,
}

impl CatalogRow {
    pub fn matches(&self) -> Option<bool> {
        self.expected.map(|e| e == self.n_ci)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogReport {
    pub rows: Vec<CatalogRow>,
    pub total: usize,
    /// Sum of the expected column, when one was supplied.
    pub expected_total: Option<usize>,
    /// Expected names that no ingested loop carries.
    pub missing: Vec<String>,
}

impl CatalogReport {
    pub fn matched(&self) -> usize {
        self.rows.iter().filter(|r| r.matches() == Some(true)).count()
    }

    pub fn mismatched(&self) -> Vec<&CatalogRow> {
        self.rows.iter().filter(|r| r.matches() == Some(false)).collect()
    }

    /// Every row has an expected value that matches and nothing expected is missing.
    pub fn all_match(&self) -> bool {
        self.missing.is_empty() && self.rows.iter().all(|r| r.matches() == Some(true))
    }
}

/// Parses `name value` lines; blank lines and `#` comments are skipped.
pub fn parse_expected(text: &str) -> Result<Vec<(String, usize)>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(name), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!("line {}: expected two columns", i + 1));
        };
        let value = value.parse().map_err(|_| format!("line {}: `{value}` is not a count", i + 1))?;
        out.push((name.to_string(), value));
    }
    Ok(out)
}

/// Computes the involution-class count of every loop, rejecting tables that are not uniquely
/// 2-divisible Bruck loops.
pub fn catalog_report(
    loops: &[(String, MulTable)],
    expected: Option<&[(String, usize)]>,
    opts: SearchOptions,
) -> Result<CatalogReport, ClassifyError> {
    let mut rows = Vec::with_capacity(loops.len());
    for (name, m) in loops {
        BruckLoopData::from_table(m.clone())
            .map_err(|e| ClassifyError::NotBruck { name: name.clone(), reason: e.to_string() })?;
        let expected = expected.and_then(|ex| ex.iter().find(|(n, _)| n == name).map(|&(_, v)| v));
        rows.push(CatalogRow { name: name.clone(), order: m.order(), n_ci: n_ci(m, opts)?, expected });
    }
    let missing = expected
        .map(|ex| ex.iter().filter(|(n, _)| !loops.iter().any(|(l, _)| l == n)).map(|(n, _)| n.clone()).collect())
        .unwrap_or_default();
    Ok(CatalogReport {
        total: rows.iter().map(|r| r.n_ci).sum(),
        expected_total: expected.map(|ex| ex.iter().map(|&(_, v)| v).sum()),
        rows,
        missing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_group, direct_product, elementary_abelian};

    #[test]
    fn associative_order_27_rows() {
        let loops = vec![
            ("27/1".to_string(), elementary_abelian(3, 3).unwrap().table().clone()),
            ("27/2".to_string(), direct_product(&cyclic_group(3), &cyclic_group(9)).table().clone()),
            ("27/7".to_string(), cyclic_group(27).table().clone()),
        ];
        let expected = parse_expected("# id n_CI\n27/1\t4\n27/2\t4\n27/7\t2\n27/5\t2\n").unwrap();
        let r = catalog_report(&loops, Some(&expected), SearchOptions::default()).unwrap();
        assert_eq!(r.rows.iter().map(|r| r.n_ci).collect::<Vec<_>>(), vec![4, 4, 2]);
        assert_eq!(r.matched(), 3);
        assert_eq!(r.missing, vec!["27/5".to_string()]);
        assert_eq!((r.total, r.expected_total), (10, Some(12)));
        assert!(!r.all_match());
    }

    #[test]
    fn rejects_non_bruck_tables() {
        let z4 = cyclic_group(4).table().clone();
        let err = catalog_report(&[("z4".into(), z4)], None, SearchOptions::default()).unwrap_err();
        assert!(matches!(err, ClassifyError::NotBruck { .. }));
    }

    #[test]
    fn expected_file_errors() {
        assert!(parse_expected("a 1 2").is_err());
        assert!(parse_expected("a x").is_err());
    }
}
