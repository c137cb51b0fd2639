//! The Bruck loops `B_{p,q}` on `Z/q × Z/p`, labelled `(i, j) ↦ i·p + j`.

use super::gf::{gf2_setup, is_prime, mod_inv, Gf2Setup};
use super::ConstructionError;
use crate::tables::{BruckLoopData, LoopData, MulTable};

#[inline]
pub fn bpq_label(p: usize, i: usize, j: usize) -> usize {
    i * p + j
}

#[inline]
pub fn bpq_coords(p: usize, x: usize) -> (usize, usize) {
    (x / p, x % p)
}

/// The product table of `B_{p,q}` for a given setup:
/// `(i,j)⊞(k,l) = (i+k, ((θ_k+θ_{i+k})/(θ_k+θ_kθ_i))·j + (θ_{i+k}/θ_k)·l)`.
pub fn bpq_table(s: &Gf2Setup) -> Result<MulTable, ConstructionError> {
    let (p, q) = (s.p, s.q);
    let th = &s.theta;
    // coefficient pairs indexed by (i, k)
    let mut coef = vec![(0u64, 0u64); (q * q) as usize];
    for i in 0..q {
        for k in 0..q {
            let ik = ((i + k) % q) as usize;
            let (ti, tk) = (th[i as usize], th[k as usize]);
            let den = (tk + tk * ti) % p;
            if den == 0 || tk == 0 {
                return Err(ConstructionError::CoefficientUndefined { i: i as usize, k: k as usize });
            }
            let c1 = (tk + th[ik]) % p * mod_inv(den, p) % p;
            let c2 = th[ik] * mod_inv(tk, p) % p;
            coef[(i * q + k) as usize] = (c1, c2);
        }
    }
    let (pu, qu) = (p as usize, q as usize);
    Ok(MulTable::from_fn(pu * qu, |x, y| {
        let (i, j) = bpq_coords(pu, x);
        let (k, l) = bpq_coords(pu, y);
        let (c1, c2) = coef[i * qu + k];
        bpq_label(pu, (i + k) % qu, ((c1 * j as u64 + c2 * l as u64) % p) as usize)
    })
    .expect("entries in range"))
}

/// `B_{p,q}` with the deterministic choice of `ω`, verified to be a uniquely 2-divisible Bruck loop.
pub fn build_bpq(p: u64, q: u64) -> Result<BruckLoopData, ConstructionError> {
    build_bpq_with_setup(&gf2_setup(p, q)?)
}

pub fn build_bpq_with_setup(s: &Gf2Setup) -> Result<BruckLoopData, ConstructionError> {
    let m = bpq_table(s)?;
    let l = LoopData::from_mul(m).map_err(|e| ConstructionError::Internal(format!("B_(p,q) is not a loop: {e}")))?;
    Ok(BruckLoopData::new(l)?)
}

/// `B_{p,3}` from its nine block formulas, with `-1 ≡ 2` in `Z/3` and `2⁻¹` the inverse of 2 mod `p`.
pub fn build_bp3_condensed(p: u64) -> Result<BruckLoopData, ConstructionError> {
    if p <= 3 || !is_prime(p) {
        return Err(ConstructionError::BadParams(format!("p = {p} must be a prime greater than 3")));
    }
    let pu = p as usize;
    let half = (p as usize).div_ceil(2);
    let m = |a: usize, b: usize| (a * b) % pu;
    let neg = |a: usize| (pu - a % pu) % pu;
    let table = MulTable::from_fn(3 * pu, |x, y| {
        let (i, j) = bpq_coords(pu, x);
        let (k, l) = bpq_coords(pu, y);
        let (r, s) = match (i, k) {
            (0, _) => (k, (j + l) % pu),
            (_, 0) => (i, (j + neg(m(2, l))) % pu),
            (1, 1) | (2, 2) => ((i + k) % 3, (neg(m(2, j)) + l) % pu),
            (1, 2) | (2, 1) => (0, m(half, neg(j + l))),
            _ => unreachable!(),
        };
        bpq_label(pu, r, s)
    })
    .expect("entries in range");
    let l = LoopData::from_mul(table).map_err(|e| ConstructionError::Internal(format!("condensed table: {e}")))?;
    Ok(BruckLoopData::new(l)?)
}
