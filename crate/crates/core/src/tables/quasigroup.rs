use thiserror::Error;

use super::table::MulTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasigroupError {
    #[error("row {0} is not a permutation (not a left quasigroup)")]
    NotLeftQuasigroup(usize),
    #[error("column {0} is not a permutation (not a right quasigroup)")]
    NotRightQuasigroup(usize),
    #[error("division tables violate {axiom} at ({x}, {y})")]
    AxiomViolated { axiom: &'static str, x: usize, y: usize },
    #[error("order mismatch between operation tables")]
    OrderMismatch,
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("{0} is not a two-sided identity")]
    NotIdentity(usize),
}

/// Left division table `x\y`: the unique `z` with `x ∗ z = y`.
pub(crate) fn invert_rows(m: &MulTable) -> Result<MulTable, QuasigroupError> {
    if let Some(row) = m.first_non_permutation_row() {
        return Err(QuasigroupError::NotLeftQuasigroup(row));
    }
    let n = m.order();
    let mut raw = vec![vec![0; n]; n];
    for x in 0..n {
        for z in 0..n {
            raw[x][m.get(x, z)] = z;
        }
    }
    Ok(MulTable::new(n, &raw).expect("row inverse is in range"))
}

/// Right division table `x/y`: the unique `z` with `z ∗ y = x`.
pub(crate) fn invert_columns(m: &MulTable) -> Result<MulTable, QuasigroupError> {
    if let Some(col) = m.first_non_permutation_column() {
        return Err(QuasigroupError::NotRightQuasigroup(col));
    }
    let n = m.order();
    let mut raw = vec![vec![0; n]; n];
    for y in 0..n {
        for z in 0..n {
            raw[m.get(z, y)][y] = z;
        }
    }
    Ok(MulTable::new(n, &raw).expect("column inverse is in range"))
}

/// A left quasigroup `(Q, ∗, \)`: every left translation is a bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftQuasigroup {
    pub mul: MulTable,
    pub ldiv: MulTable,
}

impl LeftQuasigroup {
    pub fn from_mul(mul: MulTable) -> Result<Self, QuasigroupError> {
        let ldiv = invert_rows(&mul)?;
        Ok(Self { mul, ldiv })
    }

    pub fn order(&self) -> usize {
        self.mul.order()
    }

    /// `x^S = x\x`.
    pub fn left_diagonal(&self) -> Vec<usize> {
        (0..self.order()).map(|x| self.ldiv.get(x, x)).collect()
    }
}

/// A quasigroup `(Q, ∗, \, /)` satisfying IL, SL, IR and SR.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasigroupData {
    pub mul: MulTable,
    pub ldiv: MulTable,
    pub rdiv: MulTable,
}

impl QuasigroupData {
    /// Computes both divisions by inverting rows and columns.
    pub fn from_mul(mul: MulTable) -> Result<Self, QuasigroupError> {
        let ldiv = invert_rows(&mul)?;
        let rdiv = invert_columns(&mul)?;
        Ok(Self { mul, ldiv, rdiv })
    }

    /// Accepts externally computed divisions after checking the four axioms.
    pub fn from_parts(mul: MulTable, ldiv: MulTable, rdiv: MulTable) -> Result<Self, QuasigroupError> {
        let n = mul.order();
        if ldiv.order() != n || rdiv.order() != n {
            return Err(QuasigroupError::OrderMismatch);
        }
        let q = Self { mul, ldiv, rdiv };
        if let Some((axiom, x, y)) = q.first_axiom_violation() {
            return Err(QuasigroupError::AxiomViolated { axiom, x, y });
        }
        Ok(q)
    }

    pub fn order(&self) -> usize {
        self.mul.order()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv.get(x, y)
    }

    #[inline]
    pub fn rdiv(&self, x: usize, y: usize) -> usize {
        self.rdiv.get(x, y)
    }

    /// First failing instance of (IL) `y\(y∗x) = x`, (SL) `y∗(y\x) = x`,
    /// (IR) `(x∗y)/y = x`, (SR) `(x/y)∗y = x`.
    pub fn first_axiom_violation(&self) -> Option<(&'static str, usize, usize)> {
        let n = self.order();
        for x in 0..n {
            for y in 0..n {
                if self.ldiv(y, self.mul(y, x)) != x {
                    return Some(("IL", x, y));
                }
                if self.mul(y, self.ldiv(y, x)) != x {
                    return Some(("SL", x, y));
                }
                if self.rdiv(self.mul(x, y), y) != x {
                    return Some(("IR", x, y));
                }
                if self.mul(self.rdiv(x, y), y) != x {
                    return Some(("SR", x, y));
                }
            }
        }
        None
    }
}

/// A loop: quasigroup with two-sided identity `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopData {
    pub q: QuasigroupData,
    pub e: usize,
}

impl LoopData {
    pub fn new(q: QuasigroupData, e: usize) -> Result<Self, QuasigroupError> {
        let n = q.order();
        if e >= n || (0..n).any(|x| q.mul(e, x) != x || q.mul(x, e) != x) {
            return Err(QuasigroupError::NotIdentity(e));
        }
        Ok(Self { q, e })
    }

    /// Builds the quasigroup and locates the identity.
    pub fn from_mul(mul: MulTable) -> Result<Self, QuasigroupError> {
        let e = find_identity(&mul).ok_or(QuasigroupError::NoIdentity)?;
        let q = QuasigroupData::from_mul(mul)?;
        Ok(Self { q, e })
    }

    pub fn order(&self) -> usize {
        self.q.order()
    }

    pub fn table(&self) -> &MulTable {
        &self.q.mul
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.q.mul(x, y)
    }

    /// Right inverse `x\e`, the unique `y` with `x ∗ y = e`.
    pub fn right_inverse(&self, x: usize) -> usize {
        self.q.ldiv(x, self.e)
    }

    /// Left inverse `e/x`, the unique `y` with `y ∗ x = e`.
    pub fn left_inverse(&self, x: usize) -> usize {
        self.q.rdiv(self.e, x)
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)))))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Closure of `gens` under multiplication (a subloop in the finite case).
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        closure(&self.q.mul, gens.iter().copied().chain(std::iter::once(self.e)))
    }

    /// True when `set` is closed under multiplication and contains `e`.
    pub fn is_subloop(&self, set: &[usize]) -> bool {
        is_closed(&self.q.mul, set) && set.contains(&self.e)
    }

    /// Elements commuting and associating with everything.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&a| {
                (0..n).all(|x| self.mul(a, x) == self.mul(x, a))
                    && (0..n).all(|x| {
                        (0..n).all(|y| {
                            self.mul(self.mul(a, x), y) == self.mul(a, self.mul(x, y))
                                && self.mul(self.mul(x, a), y) == self.mul(x, self.mul(a, y))
                                && self.mul(self.mul(x, y), a) == self.mul(x, self.mul(y, a))
                        })
                    })
            })
            .collect()
    }
}

/// Sorted closure of `seed` under the table's operation.
pub fn closure(m: &MulTable, seed: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let n = m.order();
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    for s in seed {
        if !inside[s] {
            inside[s] = true;
            members.push(s);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        for j in 0..=i {
            let b = members[j];
            for c in [m.get(a, b), m.get(b, a)] {
                if !inside[c] {
                    inside[c] = true;
                    members.push(c);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

pub fn is_closed(m: &MulTable, set: &[usize]) -> bool {
    let mut inside = vec![false; m.order()];
    for &s in set {
        inside[s] = true;
    }
    set.iter().all(|&a| set.iter().all(|&b| inside[m.get(a, b)]))
}

/// Index `e` whose row and column are both the identity map.
pub fn find_identity(m: &MulTable) -> Option<usize> {
    let n = m.order();
    (0..n).find(|&e| (0..n).all(|x| m.get(e, x) == x && m.get(x, e) == x))
}

/// `{x : x ∗ x = x}`.
pub fn idempotents(m: &MulTable) -> Vec<usize> {
    (0..m.order()).filter(|&x| m.get(x, x) == x).collect()
}

/// Operation whose squaring map is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalOf {
    Mul,
    LeftDiv,
    RightDiv,
}

/// `x ↦ x op x` for the chosen operation of a quasigroup.
pub fn squaring_map(q: &QuasigroupData, which: DiagonalOf) -> Vec<usize> {
    let table = match which {
        DiagonalOf::Mul => &q.mul,
        DiagonalOf::LeftDiv => &q.ldiv,
        DiagonalOf::RightDiv => &q.rdiv,
    };
    table_diagonal(table)
}

pub fn table_diagonal(m: &MulTable) -> Vec<usize> {
    (0..m.order()).map(|x| m.get(x, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> MulTable {
        MulTable::from_fn(n, |x, y| (x + y) % n).unwrap()
    }

    #[test]
    fn group_divisions_are_subtraction() {
        let q = QuasigroupData::from_mul(zn(3)).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(q.ldiv(x, y), (y + 3 - x) % 3);
                assert_eq!(q.rdiv(x, y), (x + 3 - y) % 3);
            }
        }
        assert_eq!(q.first_axiom_violation(), None);
    }

    #[test]
    fn derived_order_four_table_is_not_right_quasigroup() {
        let raw = vec![vec![1, 0, 2, 3], vec![1, 0, 2, 3], vec![0, 1, 3, 2], vec![0, 1, 3, 2]];
        let m = MulTable::new(4, &raw).unwrap();
        assert_eq!(QuasigroupData::from_mul(m.clone()).unwrap_err(), QuasigroupError::NotRightQuasigroup(0));
        assert!(LeftQuasigroup::from_mul(m.clone()).is_ok());
        assert_eq!(find_identity(&m), None);
    }

    #[test]
    fn left_nonderived_circ_is_not_right_quasigroup() {
        let m = MulTable::new(3, &[vec![1, 0, 2], vec![1, 0, 2], vec![0, 1, 2]]).unwrap();
        assert!(matches!(QuasigroupData::from_mul(m), Err(QuasigroupError::NotRightQuasigroup(_))));
    }

    #[test]
    fn identity_and_idempotents() {
        assert_eq!(find_identity(&zn(5)), Some(0));
        assert_eq!(idempotents(&zn(5)), vec![0]);
        let quandle = MulTable::from_fn(5, |x, y| (2 * x + 5 - y) % 5).unwrap();
        assert_eq!(idempotents(&quandle), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn squaring_of_cyclic_group() {
        let q = QuasigroupData::from_mul(zn(3)).unwrap();
        assert_eq!(squaring_map(&q, DiagonalOf::Mul), vec![0, 2, 1]);
        assert_eq!(squaring_map(&q, DiagonalOf::LeftDiv), vec![0, 0, 0]);
    }

    #[test]
    fn from_parts_checks_axioms() {
        let m = zn(3);
        let bad = zn(3);
        let err = QuasigroupData::from_parts(m.clone(), bad.clone(), bad).unwrap_err();
        assert!(matches!(err, QuasigroupError::AxiomViolated { .. }));
        let q = QuasigroupData::from_mul(m).unwrap();
        assert!(QuasigroupData::from_parts(q.mul.clone(), q.ldiv.clone(), q.rdiv.clone()).is_ok());
    }

    #[test]
    fn closure_of_generator() {
        let m = zn(6);
        assert_eq!(closure(&m, [2]), vec![0, 2, 4]);
        assert!(is_closed(&m, &[0, 3]));
        assert!(!is_closed(&m, &[0, 1]));
    }
}
