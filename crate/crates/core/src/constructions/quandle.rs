//! Left-symmetric Latin quandles and uniquely 2-divisible Bruck loops as isotopes of each other.

use super::ConstructionError;
use crate::braided::BraidedSet;
use crate::tables::{holds, BruckLoopData, LawId, LoopData, MulTable, QuasigroupData};

/// `x ∗ y = 2x − y`.
pub fn bruck_to_quandle(b: &BruckLoopData) -> MulTable {
    MulTable::from_fn(b.order(), |x, y| b.sub(b.dbl(x), y)).expect("in range")
}

/// `x + y = (x/e) ∗ (e ∗ y)` for a left-symmetric Latin quandle.
pub fn quandle_to_bruck(m: &MulTable, e: usize) -> Result<BruckLoopData, ConstructionError> {
    let q = QuasigroupData::from_mul(m.clone()).map_err(|err| ConstructionError::NotLsQuandle(format!("{err}")))?;
    if e >= m.order() {
        return Err(ConstructionError::BadParams(format!("base point {e} out of range")));
    }
    for law in [LawId::Idempotent, LawId::LeftSymmetric, LawId::LeftDistributive] {
        if !holds(&q, law).expect("no divisions needed") {
            return Err(ConstructionError::NotLsQuandle(format!("{} fails", law.name())));
        }
    }
    let add = MulTable::from_fn(m.order(), |x, y| q.mul(q.rdiv(x, e), q.mul(e, y))).expect("in range");
    let l = LoopData::from_mul(add).map_err(|err| ConstructionError::Internal(format!("isotope: {err}")))?;
    Ok(BruckLoopData::new(l)?)
}

/// The derived solution `r(x, y) = (x ∘ y, x)`.
pub fn derived_bds_from_rack(m: &MulTable) -> BraidedSet {
    BraidedSet::derived(m.clone())
}
