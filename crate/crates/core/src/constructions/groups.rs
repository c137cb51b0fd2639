//! Abelian groups and products of loops.

use super::ConstructionError;
use crate::perm::Permutation;
use crate::tables::{LoopData, MulTable};

pub fn cyclic_group(n: usize) -> LoopData {
    LoopData::from_mul(MulTable::from_fn(n, |x, y| (x + y) % n).expect("n > 0")).expect("group")
}

/// `A × B` labelled `(a, b) ↦ a·|B| + b`.
pub fn direct_product(a: &LoopData, b: &LoopData) -> LoopData {
    let nb = b.order();
    let m = MulTable::from_fn(a.order() * nb, |x, y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
        .expect("in range");
    LoopData::from_mul(m).expect("product of loops is a loop")
}

/// `s × t` acting on the product labelling used by [`direct_product`].
pub fn product_permutation(s: &Permutation, t: &Permutation) -> Permutation {
    let nb = t.degree();
    Permutation::from_fn(s.degree() * nb, |x| s.apply(x / nb) * nb + t.apply(x % nb)).expect("bijective")
}

/// `(Z/p)^k` with base-`p` digits, most significant first.
pub fn elementary_abelian(p: usize, k: u32) -> Result<LoopData, ConstructionError> {
    if p < 2 || k == 0 {
        return Err(ConstructionError::BadParams(format!("(Z/{p})^{k}")));
    }
    let n = p.checked_pow(k).filter(|&n| n <= u16::MAX as usize).ok_or_else(|| {
        ConstructionError::BadParams(format!("(Z/{p})^{k} is too large"))
    })?;
    let m = MulTable::from_fn(n, |x, y| {
        let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
        for _ in 0..k {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out
    })
    .expect("in range");
    Ok(LoopData::from_mul(m).expect("group"))
}

/// The automorphism of `(Z/p)^k` multiplying digit `i` (most significant first) by `signs[i] = ±1`.
pub fn signed_diagonal(p: usize, signs: &[i8]) -> Result<Permutation, ConstructionError> {
    if signs.is_empty() || signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(ConstructionError::BadParams(format!("signs {signs:?} must be ±1")));
    }
    let k = signs.len();
    let n = p.pow(k as u32);
    Ok(Permutation::from_fn(n, |x| {
        let mut out = 0;
        let mut place = 1;
        let mut x = x;
        for i in (0..k).rev() {
            let d = x % p;
            let d = if signs[i] == 1 { d } else { (p - d) % p };
            out += d * place;
            x /= p;
            place *= p;
        }
        out
    })
    .expect("bijective"))
}
