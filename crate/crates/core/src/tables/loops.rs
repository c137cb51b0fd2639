//! Loop classification and uniquely 2-divisible Bruck loops.

use thiserror::Error;

use super::laws::{check_law_capped, LawId, Violation};
use super::quasigroup::LoopData;
use super::table::MulTable;
use crate::perm::{lcm, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error("element {0} does not generate a cyclic group (not power-associative)")]
    NotPowerAssociative(usize),
    #[error("not a Bruck loop: {0}")]
    NotBruck(Violation),
    #[error("doubling map is not injective: 2·{x} = 2·{y}")]
    NotTwoDivisible { x: usize, y: usize },
}

/// Result of exhaustive law evaluation on a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopClassification {
    pub associative: bool,
    pub commutative: bool,
    pub two_sided_inverses: bool,
    pub bol: bool,
    pub moufang: bool,
    pub aip: bool,
    pub lip: bool,
    pub rip: bool,
    /// Commutative Moufang.
    pub cml: bool,
    /// Bol with the automorphic inverse property.
    pub bruck: bool,
    pub uniquely_2_divisible: bool,
    /// `element_orders[x]` is the order of `x`.
    pub element_orders: Vec<usize>,
    pub exponent: usize,
    pub bruck_data: Option<BruckLoopData>,
}

impl LoopClassification {
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for &o in &self.element_orders {
            *counts.entry(o).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

fn law_holds(l: &LoopData, law: LawId) -> bool {
    check_law_capped(l, law, 1).expect("loops carry both divisions and an identity").is_empty()
}

/// Orders of all elements, after checking `y^k x = y^{k-1}(y x)` for every `k` up to the order
/// of `y` and every `x`. Right powers are `y^k = y^{k-1} ∗ y`.
pub fn element_orders(l: &LoopData) -> Result<Vec<usize>, LoopError> {
    let n = l.order();
    let mut orders = vec![0; n];
    for y in 0..n {
        let mut prev = l.e;
        let mut cur = y;
        let mut k = 1;
        loop {
            if (0..n).any(|x| l.mul(cur, x) != l.mul(prev, l.mul(y, x))) {
                return Err(LoopError::NotPowerAssociative(y));
            }
            if cur == l.e {
                break;
            }
            if k >= n {
                return Err(LoopError::NotPowerAssociative(y));
            }
            prev = cur;
            cur = l.mul(cur, y);
            k += 1;
        }
        orders[y] = k;
    }
    Ok(orders)
}

pub fn classify_loop(l: &LoopData) -> Result<LoopClassification, LoopError> {
    let element_orders = element_orders(l)?;
    let exponent = element_orders.iter().fold(1u128, |acc, &o| lcm(acc, o as u128)) as usize;
    let associative = law_holds(l, LawId::Associative);
    let commutative = law_holds(l, LawId::Commutative);
    let two_sided_inverses = law_holds(l, LawId::TwoSidedInverse);
    let bol = law_holds(l, LawId::Bol);
    let moufang = law_holds(l, LawId::Moufang);
    let aip = two_sided_inverses && law_holds(l, LawId::AutomorphicInverse);
    let lip = two_sided_inverses && law_holds(l, LawId::LeftInverse);
    let rip = two_sided_inverses && law_holds(l, LawId::RightInverse);
    let bruck = bol && aip;
    let uniquely_2_divisible = doubling_collision(l).is_none();
    let bruck_data = if bruck && uniquely_2_divisible { BruckLoopData::new(l.clone()).ok() } else { None };
    Ok(LoopClassification {
        associative,
        commutative,
        two_sided_inverses,
        bol,
        moufang,
        aip,
        lip,
        rip,
        cml: commutative && moufang,
        bruck,
        uniquely_2_divisible,
        element_orders,
        exponent,
        bruck_data,
    })
}

fn doubling_collision(l: &LoopData) -> Option<(usize, usize)> {
    let n = l.order();
    let mut pre = vec![usize::MAX; n];
    for x in 0..n {
        let d = l.mul(x, x);
        if pre[d] != usize::MAX {
            return Some((pre[d], x));
        }
        pre[d] = x;
    }
    None
}

/// A uniquely 2-divisible Bruck loop written additively, with its negation, doubling and halving
/// permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruckLoopData {
    pub loop_: LoopData,
    pub neg: Permutation,
    pub dbl: Permutation,
    pub half: Permutation,
}

impl BruckLoopData {
    /// Checks the Bol law, the automorphic inverse property, unique 2-divisibility and
    /// `2(x+y) = x+(2y+x)`.
    pub fn new(l: LoopData) -> Result<Self, LoopError> {
        for law in [LawId::TwoSidedInverse, LawId::Bol, LawId::AutomorphicInverse] {
            if let Some(v) = check_law_capped(&l, law, 1).expect("loop").into_iter().next() {
                return Err(LoopError::NotBruck(v));
            }
        }
        if let Some((x, y)) = doubling_collision(&l) {
            return Err(LoopError::NotTwoDivisible { x, y });
        }
        if let Some(v) = check_law_capped(&l, LawId::BruckLaw1, 1).expect("loop").into_iter().next() {
            return Err(LoopError::NotBruck(v));
        }
        let n = l.order();
        let neg = Permutation::from_fn(n, |x| l.right_inverse(x)).expect("inverse map of a loop is bijective");
        let dbl = Permutation::from_fn(n, |x| l.mul(x, x)).expect("checked injective");
        let half = dbl.inverse();
        Ok(Self { loop_: l, neg, dbl, half })
    }

    pub fn from_table(m: MulTable) -> Result<Self, BruckTableError> {
        let l = LoopData::from_mul(m)?;
        Ok(Self::new(l)?)
    }

    pub fn order(&self) -> usize {
        self.loop_.order()
    }

    pub fn e(&self) -> usize {
        self.loop_.e
    }

    pub fn table(&self) -> &MulTable {
        self.loop_.table()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.loop_.mul(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg.apply(x)
    }

    /// `x - y = x + (-y)`.
    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn dbl(&self, x: usize) -> usize {
        self.dbl.apply(x)
    }

    #[inline]
    pub fn half(&self, x: usize) -> usize {
        self.half.apply(x)
    }

    /// True when `s` preserves the loop operation.
    pub fn is_automorphism(&self, s: &Permutation) -> bool {
        s.degree() == self.order() && self.table().is_isomorphism_to(self.table(), s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BruckTableError {
    #[error(transparent)]
    Quasigroup(#[from] super::quasigroup::QuasigroupError),
    #[error(transparent)]
    Loop(#[from] LoopError),
}
