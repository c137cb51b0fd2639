//! Latin braided dihedral sets presented as a Bruck loop with an involutive automorphism.

use super::groups::product_permutation;
use super::ConstructionError;
use crate::braided::BraidedSet;
use crate::perm::Permutation;
use crate::tables::{BruckLoopData, LoopData, MulTable, QuasigroupData};

/// `(Q, +, e, S)` with `S` an involutive automorphism of a uniquely 2-divisible Bruck loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LbdsDescriptor {
    pub loop_: BruckLoopData,
    pub s: Permutation,
}

impl LbdsDescriptor {
    pub fn new(loop_: BruckLoopData, s: Permutation) -> Result<Self, ConstructionError> {
        if s.degree() != loop_.order() {
            return Err(ConstructionError::BadParams(format!(
                "automorphism has degree {}, loop has order {}",
                s.degree(),
                loop_.order()
            )));
        }
        if !s.is_involution() {
            return Err(ConstructionError::NotInvolutive);
        }
        if !loop_.is_automorphism(&s) {
            return Err(ConstructionError::NotAutomorphism);
        }
        Ok(Self { loop_, s })
    }

    /// Validates the loop first, reporting Bruck and 2-divisibility failures.
    pub fn from_loop(l: LoopData, s: Permutation) -> Result<Self, ConstructionError> {
        Self::new(BruckLoopData::new(l)?, s)
    }

    pub fn order(&self) -> usize {
        self.loop_.order()
    }

    /// Componentwise product, labelled as in [`super::direct_product`].
    pub fn product(&self, other: &LbdsDescriptor) -> LbdsDescriptor {
        let l = super::direct_product(&self.loop_.loop_, &other.loop_.loop_);
        let s = product_permutation(&self.s, &other.s);
        Self::from_loop(l, s).expect("products of descriptors are descriptors")
    }
}

/// The braided set and the quasigroup `(Q, ∘, \∘, /∘)` of a descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lbds {
    pub braided: BraidedSet,
    pub quasigroup: QuasigroupData,
}

/// `r(x, y) = (2x − y^S, x^S)` with the divisions `x\y = 2x^S − y^S` and
/// `x/y = y^S + ½(−y^S + x)`.
pub fn lbds_from_descriptor(d: &LbdsDescriptor) -> Lbds {
    let b = &d.loop_;
    let s = |x| d.s.apply(x);
    let n = d.order();
    let circ = MulTable::from_fn(n, |x, y| b.sub(b.dbl(x), s(y))).expect("in range");
    let ldiv = MulTable::from_fn(n, |x, y| b.sub(b.dbl(s(x)), s(y))).expect("in range");
    let rdiv = MulTable::from_fn(n, |x, y| b.add(s(y), b.half(b.add(b.neg(s(y)), x)))).expect("in range");
    let bullet = MulTable::from_fn(n, |x, _| s(x)).expect("in range");
    let quasigroup = QuasigroupData::from_parts(circ.clone(), ldiv, rdiv)
        .expect("division formulas satisfy the quasigroup axioms for every descriptor");
    Lbds { braided: BraidedSet::new(circ, bullet).expect("same order"), quasigroup }
}

/// Recovers `(Q, +, e, S)` from an LBDS quasigroup and an idempotent `e`:
/// `x + y = (x/e)∘(e∘y)` and `x^S = x\x`.
pub fn descriptor_from_lbds(q: &QuasigroupData, e: usize) -> Result<LbdsDescriptor, ConstructionError> {
    let n = q.order();
    if e >= n || q.mul(e, e) != e {
        return Err(ConstructionError::NotIdempotent(e));
    }
    let bullet = MulTable::from_fn(n, |x, _| q.ldiv(x, x)).expect("in range");
    let b = BraidedSet::new(q.mul.clone(), bullet).expect("same order");
    if let Some(v) = b.is_solution_capped(1).into_iter().next() {
        return Err(ConstructionError::NotLbds(format!("{v}")));
    }
    if let Some(v) = b.is_dihedral_capped(1).into_iter().next() {
        return Err(ConstructionError::NotLbds(format!("{v}")));
    }
    let add = MulTable::from_fn(n, |x, y| q.mul(q.rdiv(x, e), q.mul(e, y))).expect("in range");
    let l = LoopData::from_mul(add).map_err(|err| ConstructionError::NotLbds(format!("isotope: {err}")))?;
    let s = Permutation::from_fn(n, |x| q.ldiv(x, x)).map_err(|_| ConstructionError::NotLbds("x\\x is not bijective".into()))?;
    LbdsDescriptor::from_loop(l, s)
}

/// As [`descriptor_from_lbds`], starting from a braided set that must be a Latin dihedral solution.
pub fn descriptor_from_braided(b: &BraidedSet, e: usize) -> Result<LbdsDescriptor, ConstructionError> {
    let q = b.circ_quasigroup().ok_or_else(|| ConstructionError::NotLbds("circ is not a quasigroup".into()))?;
    if !b.is_lbds() {
        return Err(ConstructionError::NotLbds("not a dihedral solution".into()));
    }
    let d = descriptor_from_lbds(&q, e)?;
    if lbds_from_descriptor(&d).braided.bullet() != b.bullet() {
        return Err(ConstructionError::NotLbds("bullet is not the diagonal map".into()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::super::{build_bpq, cyclic_group};
    use super::*;

    fn zn(n: usize, s: impl Fn(usize) -> usize) -> LbdsDescriptor {
        LbdsDescriptor::from_loop(cyclic_group(n), Permutation::from_fn(n, s).unwrap()).unwrap()
    }

    #[test]
    fn z3_solutions() {
        let plus = lbds_from_descriptor(&zn(3, |x| x));
        assert_eq!(plus.braided, BraidedSet::from_fn(3, |x, y| ((2 * x + 3 - y) % 3, x)).unwrap());
        let minus = lbds_from_descriptor(&zn(3, |x| (3 - x) % 3));
        assert_eq!(minus.braided, BraidedSet::from_fn(3, |x, y| ((2 * x + y) % 3, (3 - x) % 3)).unwrap());
        assert!(minus.braided.is_lbts());
    }

    #[test]
    fn round_trip_on_b53() {
        let b = build_bpq(5, 3).unwrap();
        let s = Permutation::identity(15);
        let d = LbdsDescriptor::new(b, s).unwrap();
        let l = lbds_from_descriptor(&d);
        assert!(l.braided.is_lbds());
        let back = descriptor_from_lbds(&l.quasigroup, 0).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn quandle_on_z7_gives_trivial_s() {
        let q = QuasigroupData::from_mul(MulTable::from_fn(7, |x, y| (2 * x + 7 - y) % 7).unwrap()).unwrap();
        let d = descriptor_from_lbds(&q, 0).unwrap();
        assert_eq!(d.loop_.table(), cyclic_group(7).table());
        assert!(d.s.is_identity());
    }

    #[test]
    fn rejects_bad_descriptors() {
        let l = cyclic_group(5);
        let shift = Permutation::from_fn(5, |x| (x + 1) % 5).unwrap();
        assert_eq!(LbdsDescriptor::from_loop(l.clone(), shift).unwrap_err(), ConstructionError::NotInvolutive);
        let swap = Permutation::new(vec![0, 2, 1, 3, 4]).unwrap();
        assert_eq!(LbdsDescriptor::from_loop(l, swap).unwrap_err(), ConstructionError::NotAutomorphism);
        assert!(matches!(
            LbdsDescriptor::from_loop(cyclic_group(4), Permutation::identity(4)),
            Err(ConstructionError::NotTwoDivisible { .. })
        ));
    }

    #[test]
    fn not_idempotent() {
        let q = QuasigroupData::from_mul(MulTable::from_fn(5, |x, y| (x + y) % 5).unwrap()).unwrap();
        assert_eq!(descriptor_from_lbds(&q, 1).unwrap_err(), ConstructionError::NotIdempotent(1));
    }
}
