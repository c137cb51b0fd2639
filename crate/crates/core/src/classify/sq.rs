//! The right-division squaring map `x ↦ x/x` of a descriptor's quasigroup.

use crate::constructions::{lbds_from_descriptor, LbdsDescriptor};
use crate::tables::{element_orders, is_closed, MulTable};

/// A pair on which the squaring map fails to respect the loop operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqWitness {
    pub x: usize,
    pub y: usize,
    /// `Sq(x + y)`
    pub lhs: usize,
    /// `Sq(x) + Sq(y)`
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqAnalysis {
    /// `sq[x] = x /∘ x`.
    pub sq: Vec<usize>,
    /// `{x : x^S = x}`, which is also the set of idempotents and the image of `sq`.
    pub fixed_locus: Vec<usize>,
    /// `{x : x^S = −x}`, the preimage of `e` under `sq`.
    pub q_e: Vec<usize>,
    pub image_is_fixed_locus: bool,
    pub kernel_is_q_e: bool,
    /// Both sets are closed under `+` and `∘`.
    pub substructures: bool,
    pub is_endomorphism: bool,
    /// `sq` respects `∘`; always equal to `is_endomorphism` for a valid descriptor.
    pub quasigroup_endomorphism: bool,
    /// The multiplicative squaring map `x ↦ x∘x` respects `∘`.
    pub mul_sq_endomorphism: bool,
    pub witness: Option<SqWitness>,
    /// The sequence `Q_e → Q → Sq(Q)` splits with every element uniquely `f + k`.
    pub split_verified: bool,
    /// `Some(Q = Sq(Q) + Q_e)` when the loop has exponent 3.
    pub factorization: Option<bool>,
}

fn preserves(m: &MulTable, f: &[usize]) -> bool {
    let n = m.order();
    (0..n).all(|x| (0..n).all(|y| f[m.get(x, y)] == m.get(f[x], f[y])))
}

pub fn sq_analysis(d: &LbdsDescriptor) -> SqAnalysis {
    let n = d.order();
    let b = &d.loop_;
    let e = b.e();
    let lbds = lbds_from_descriptor(d);
    let q = &lbds.quasigroup;
    let sq: Vec<usize> = (0..n).map(|x| q.rdiv(x, x)).collect();
    let fixed_locus: Vec<usize> = (0..n).filter(|&x| d.s.apply(x) == x).collect();
    let q_e: Vec<usize> = (0..n).filter(|&x| d.s.apply(x) == b.neg(x)).collect();

    let mut image: Vec<usize> = sq.clone();
    image.sort_unstable();
    image.dedup();
    let image_is_fixed_locus = image == fixed_locus;
    let kernel: Vec<usize> = (0..n).filter(|&x| sq[x] == e).collect();
    let kernel_is_q_e = kernel == q_e;
    let substructures = [&fixed_locus, &q_e].iter().all(|s| is_closed(b.table(), s) && is_closed(&q.mul, s));

    let witness = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find_map(|(x, y)| {
        let (lhs, rhs) = (sq[b.add(x, y)], b.add(sq[x], sq[y]));
        (lhs != rhs).then_some(SqWitness { x, y, lhs, rhs })
    });
    let is_endomorphism = witness.is_none();
    let quasigroup_endomorphism = preserves(&q.mul, &sq);
    let mul_sq: Vec<usize> = (0..n).map(|x| q.mul(x, x)).collect();
    let mul_sq_endomorphism = preserves(&q.mul, &mul_sq);

    let mut sums: Vec<usize> = fixed_locus.iter().flat_map(|&f| q_e.iter().map(move |&k| b.add(f, k))).collect();
    sums.sort_unstable();
    let unique_sums = sums.windows(2).all(|w| w[0] != w[1]);
    sums.dedup();
    let covers = sums.len() == n;

    let split_verified = is_endomorphism
        && image_is_fixed_locus
        && kernel_is_q_e
        && fixed_locus.iter().all(|&f| sq[f] == f)
        && fixed_locus.iter().filter(|f| q_e.contains(f)).eq([e].iter())
        && covers
        && unique_sums;
    let exponent3 = element_orders(&b.loop_).map(|o| o.iter().all(|&k| k == 1 || k == 3)).unwrap_or(false);
    let factorization = exponent3.then_some(covers);

    SqAnalysis {
        sq,
        fixed_locus,
        q_e,
        image_is_fixed_locus,
        kernel_is_q_e,
        substructures,
        is_endomorphism,
        quasigroup_endomorphism,
        mul_sq_endomorphism,
        witness,
        split_verified,
        factorization,
    }
}
