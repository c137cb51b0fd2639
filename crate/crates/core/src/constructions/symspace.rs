//! Finite pointed symmetric spaces and their two braided dihedral sets.

use super::ConstructionError;
use crate::braided::BraidedSet;
use crate::perm::Permutation;
use crate::tables::MulTable;

/// A family of involutions `s_x` with `s_x(x) = x` and `s_{s_x(y)} s_x = s_x s_y`, plus a base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedSymmetricSpace {
    sym: Vec<Permutation>,
    o: usize,
}

impl PointedSymmetricSpace {
    pub fn new(sym: Vec<Permutation>, o: usize) -> Result<Self, ConstructionError> {
        let n = sym.len();
        let invalid = |axiom: &'static str, witness: Vec<usize>| ConstructionError::InvalidSymmetricSpace { axiom, witness };
        if n == 0 || o >= n {
            return Err(invalid("base point", vec![o]));
        }
        if let Some(x) = sym.iter().position(|s| s.degree() != n) {
            return Err(invalid("degree", vec![x]));
        }
        for (x, s) in sym.iter().enumerate() {
            if s.apply(x) != x {
                return Err(invalid("s_x(x) = x", vec![x]));
            }
            if !s.is_involution() {
                return Err(invalid("s_x^2 = id", vec![x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let sxy = sym[x].apply(y);
                for z in 0..n {
                    if sym[sxy].apply(sym[x].apply(z)) != sym[x].apply(sym[y].apply(z)) {
                        return Err(invalid("s_{s_x(y)}(s_x(z)) = s_x(s_y(z))", vec![x, y, z]));
                    }
                }
            }
        }
        Ok(Self { sym, o })
    }

    /// `s_x(y) = x ∗ y` for a left-symmetric quandle table.
    pub fn from_quandle(m: &MulTable, o: usize) -> Result<Self, ConstructionError> {
        let sym = (0..m.order())
            .map(|x| {
                Permutation::new(m.row(x).collect()).map_err(|_| ConstructionError::InvalidSymmetricSpace {
                    axiom: "s_x is a bijection",
                    witness: vec![x],
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(sym, o)
    }

    pub fn order(&self) -> usize {
        self.sym.len()
    }

    pub fn base_point(&self) -> usize {
        self.o
    }

    pub fn symmetry(&self, x: usize) -> &Permutation {
        &self.sym[x]
    }
}

/// `(x, y) ↦ (s_x(y), x)` and `(x, y) ↦ (s_x(s_o(y)), s_o(x))`.
pub fn symmetric_space_solutions(s: &PointedSymmetricSpace) -> (BraidedSet, BraidedSet) {
    let n = s.order();
    let so = s.symmetry(s.o);
    let first = BraidedSet::from_fn(n, |x, y| (s.sym[x].apply(y), x)).expect("in range");
    let second = BraidedSet::from_fn(n, |x, y| (s.sym[x].apply(so.apply(y)), so.apply(x))).expect("in range");
    (first, second)
}
