//! The nonassociative commutative Moufang loop `L_3` of order 81 on `C_3² × Z/3[ω]`,
//! labelled `(m, n, q, r) ↦ 27m + 9n + 3q + r` where `(m, n)` are exponents of `b^m c^n` and
//! `q + rω` is the ring coordinate.

use crate::perm::Permutation;
use crate::tables::{LoopData, MulTable};

#[inline]
pub fn l3_label(m: usize, n: usize, q: usize, r: usize) -> usize {
    27 * m + 9 * n + 3 * q + r
}

#[inline]
pub fn l3_coords(x: usize) -> (usize, usize, usize, usize) {
    (x / 27, (x / 9) % 3, (x / 3) % 3, x % 3)
}

/// `ω · (q + rω) = -r + (q - r)ω`, using `ω² = -1 - ω`.
fn times_omega((q, r): (usize, usize)) -> (usize, usize) {
    ((3 - r) % 3, (q + 3 - r) % 3)
}

fn times_omega_pow(z: (usize, usize), k: usize) -> (usize, usize) {
    (0..k % 3).fold(z, |z, _| times_omega(z))
}

fn l3_mul(x: usize, y: usize) -> usize {
    let (m1, n1, q1, r1) = l3_coords(x);
    let (m2, n2, q2, r2) = l3_coords(y);
    let nu = (m1 * n2 + 9 - n1 * m2) % 3;
    let a = times_omega_pow((q1, r1), nu);
    let b = times_omega_pow((q2, r2), (3 - nu) % 3);
    l3_label((m1 + m2) % 3, (n1 + n2) % 3, (a.0 + b.0) % 3, (a.1 + b.1) % 3)
}

pub fn l3_table() -> MulTable {
    MulTable::from_fn(81, l3_mul).expect("in range")
}

pub fn build_l3() -> LoopData {
    LoopData::from_mul(l3_table()).expect("L_3 is a loop with identity (e, 0)")
}

/// The involutive automorphisms `S_1, …, S_4` of `L_3`: identity, inversion, negation of the
/// ring coordinate, and inversion of the `C_3²` coordinate.
pub fn l3_involutions() -> [Permutation; 4] {
    let neg = |a: usize| (3 - a) % 3;
    let f = |g: &dyn Fn(usize, usize, usize, usize) -> usize| {
        Permutation::from_fn(81, |x| {
            let (m, n, q, r) = l3_coords(x);
            g(m, n, q, r)
        })
        .expect("bijective")
    };
    [
        Permutation::identity(81),
        f(&|m, n, q, r| l3_label(neg(m), neg(n), neg(q), neg(r))),
        f(&|m, n, q, r| l3_label(m, n, neg(q), neg(r))),
        f(&|m, n, q, r| l3_label(neg(m), neg(n), q, r)),
    ]
}
