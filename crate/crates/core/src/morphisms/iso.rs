//! Isomorphism tests with certificates, and isomorphisms between solutions built from descriptors.

use std::collections::BTreeMap;
use std::fmt;

use super::group::automorphism_group;
use super::search::{joint_classes_pinned, Algebra, Engine, SearchError, SearchOptions};
use crate::constructions::{ap3_group, build_bpq, lbds_from_descriptor, LbdsDescriptor};
use crate::perm::Permutation;
use crate::tables::MulTable;

/// Why two structures are not isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonIsoCertificate {
    OrderMismatch { left: usize, right: usize },
    /// An isomorphism invariant takes different values on the two sides.
    InvariantMismatch { invariant: String },
    /// The search space was exhausted after this many nodes.
    Exhausted { nodes: u64 },
}

impl fmt::Display for NonIsoCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonIsoCertificate::OrderMismatch { left, right } => write!(f, "orders differ ({left} vs {right})"),
            NonIsoCertificate::InvariantMismatch { invariant } => write!(f, "invariant differs: {invariant}"),
            NonIsoCertificate::Exhausted { nodes } => write!(f, "search exhausted after {nodes} nodes"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(Permutation),
    NotIsomorphic(NonIsoCertificate),
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }

    pub fn witness(&self) -> Option<&Permutation> {
        match self {
            IsoOutcome::Isomorphic(p) => Some(p),
            IsoOutcome::NotIsomorphic(_) => None,
        }
    }
}

fn histogram(ids: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in ids {
        *h.entry(c).or_default() += 1;
    }
    h
}

/// Largest order for which the quartic entropic count is computed.
const ENTROPIC_MAX: usize = 128;

fn associative_triples(m: &MulTable) -> u64 {
    let n = m.order();
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            let xy = m.get(x, y);
            count += (0..n).filter(|&z| m.get(xy, z) == m.get(x, m.get(y, z))).count() as u64;
        }
    }
    count
}

/// Quadruples with `(xy)(zw) = (xz)(yw)`.
fn entropic_quadruples(m: &MulTable) -> u64 {
    let n = m.order();
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            let xy = m.get(x, y);
            for z in 0..n {
                let (row_xy, xz) = (xy, m.get(x, z));
                count += (0..n).filter(|&w| m.get(row_xy, m.get(z, w)) == m.get(xz, m.get(y, w))).count() as u64;
            }
        }
    }
    count
}

/// Whole-structure counts that separate algebras whose elements all look alike.
fn global_mismatch(a: &Algebra, b: &Algebra) -> Option<String> {
    let (ta, tb) = (a.parts().0, b.parts().0);
    for (i, (ma, mb)) in ta.iter().zip(tb).enumerate() {
        if associative_triples(ma) != associative_triples(mb) {
            return Some(format!("associative triples of operation {i}"));
        }
        if ma.order() <= ENTROPIC_MAX && entropic_quadruples(ma) != entropic_quadruples(mb) {
            return Some(format!("entropic quadruples of operation {i}"));
        }
    }
    None
}

/// Searches for an isomorphism between two algebras of the same signature.
pub fn algebras_isomorphic(a: &Algebra, b: &Algebra, opts: SearchOptions) -> Result<IsoOutcome, SearchError> {
    algebras_isomorphic_pinned(a, b, &[], opts)
}

/// As [`algebras_isomorphic`], restricted to maps sending each `x` to `y` for `(x, y)` in `pins`.
pub fn algebras_isomorphic_pinned(
    a: &Algebra,
    b: &Algebra,
    pins: &[(usize, usize)],
    opts: SearchOptions,
) -> Result<IsoOutcome, SearchError> {
    if a.order() != b.order() {
        return Ok(IsoOutcome::NotIsomorphic(NonIsoCertificate::OrderMismatch { left: a.order(), right: b.order() }));
    }
    let (ca, cb) = joint_classes_pinned(a, b, pins, opts.use_invariants);
    if histogram(&ca) != histogram(&cb) {
        return Ok(IsoOutcome::NotIsomorphic(NonIsoCertificate::InvariantMismatch {
            invariant: "refined element profile".into(),
        }));
    }
    if opts.use_invariants {
        if let Some(invariant) = global_mismatch(a, b) {
            return Ok(IsoOutcome::NotIsomorphic(NonIsoCertificate::InvariantMismatch { invariant }));
        }
    }
    let mut engine = Engine::with_classes(a, b, ca, cb, opts.budget);
    if !pins.iter().all(|&(x, y)| engine.assign(x, y)) {
        return Ok(IsoOutcome::NotIsomorphic(NonIsoCertificate::Exhausted { nodes: engine.nodes }));
    }
    match engine.find_first()? {
        Some(phi) => Ok(IsoOutcome::Isomorphic(phi)),
        None => Ok(IsoOutcome::NotIsomorphic(NonIsoCertificate::Exhausted { nodes: engine.nodes })),
    }
}

/// Isomorphism of two magmas given by their tables.
pub fn are_isomorphic(m1: &MulTable, m2: &MulTable, opts: SearchOptions) -> Result<IsoOutcome, SearchError> {
    algebras_isomorphic(&Algebra::from_table(m1), &Algebra::from_table(m2), opts)
}

/// Isomorphism of braided sets: a bijection preserving both `∘` and `•`.
pub fn braided_isomorphic(
    b1: &crate::braided::BraidedSet,
    b2: &crate::braided::BraidedSet,
    opts: SearchOptions,
) -> Result<IsoOutcome, SearchError> {
    let a = Algebra::new(vec![b1.circ().clone(), b1.bullet().clone()], Vec::new());
    let b = Algebra::new(vec![b2.circ().clone(), b2.bullet().clone()], Vec::new());
    algebras_isomorphic(&a, &b, opts)
}

/// Loop isomorphism intertwining the two involutions.
pub fn descriptors_isomorphic(d1: &LbdsDescriptor, d2: &LbdsDescriptor, opts: SearchOptions) -> Result<IsoOutcome, SearchError> {
    algebras_isomorphic(&Algebra::with_map(d1.loop_.table(), &d1.s), &Algebra::with_map(d2.loop_.table(), &d2.s), opts)
}

/// Isomorphism of the solutions built from two descriptors.
pub fn lbds_isomorphic(d1: &LbdsDescriptor, d2: &LbdsDescriptor, opts: SearchOptions) -> Result<IsoOutcome, SearchError> {
    braided_isomorphic(&lbds_from_descriptor(d1).braided, &lbds_from_descriptor(d2).braided, opts)
}

/// Isomorphism of the `∘` quasigroups alone; it determines `•` as the diagonal `x\∘x`.
///
/// Only maps sending `e₁` to `e₂` are searched. This loses nothing: if `ψ` is any isomorphism,
/// `ψ(e₁)` is fixed by the involution, the translation `x ↦ g ∗ x` with `g = e₂ /∗ ψ(e₁)` is an
/// automorphism of `∘`, and composing it with `ψ` gives an isomorphism sending `e₁` to `e₂`.
pub fn lbds_quasigroup_isomorphic(d1: &LbdsDescriptor, d2: &LbdsDescriptor, opts: SearchOptions) -> Result<IsoOutcome, SearchError> {
    let (a, b) = (lbds_from_descriptor(d1).braided, lbds_from_descriptor(d2).braided);
    algebras_isomorphic_pinned(
        &Algebra::from_table(a.circ()),
        &Algebra::from_table(b.circ()),
        &[(d1.loop_.e(), d2.loop_.e())],
        opts,
    )
}

/// The quandle `x ∗ y = 2x − y` of a descriptor's loop.
fn core_quandle(d: &LbdsDescriptor) -> MulTable {
    let b = &d.loop_;
    MulTable::from_fn(d.order(), |x, y| b.sub(b.dbl(x), y)).expect("in range")
}

/// Turns an isomorphism `ψ` of the `∘` quasigroups into a loop isomorphism intertwining the
/// involutions: `φ(x) = g ∗ ψ(x)` with `g = e₂ /∗ ψ(e₁)`. Returns `None` if `ψ` is not a
/// `∘`-isomorphism.
pub fn intertwiner_from_quasigroup_iso(d1: &LbdsDescriptor, d2: &LbdsDescriptor, psi: &Permutation) -> Option<Permutation> {
    let (c1, c2) = (lbds_from_descriptor(d1).braided, lbds_from_descriptor(d2).braided);
    if psi.degree() != d1.order() || d2.order() != d1.order() || !c1.circ().is_isomorphism_to(c2.circ(), psi) {
        return None;
    }
    let star = core_quandle(d2);
    let (e2, a) = (d2.loop_.e(), psi.apply(d1.loop_.e()));
    let g = (0..d2.order()).find(|&g| star.get(g, a) == e2)?;
    let phi = Permutation::from_fn(d1.order(), |x| star.get(g, psi.apply(x))).ok()?;
    let ok = d1.loop_.table().is_isomorphism_to(d2.loop_.table(), &phi)
        && (0..d1.order()).all(|x| phi.apply(d1.s.apply(x)) == d2.s.apply(phi.apply(x)));
    ok.then_some(phi)
}

/// Outcome of comparing the automorphism group of `B_{p,3}` with the explicit group `A_{p,3}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ap3Report {
    pub p: u64,
    pub computed_order: u128,
    pub expected_order: u128,
    /// Every element of `A_{p,3}` is an automorphism.
    pub all_automorphisms: bool,
    /// The two groups have the same elements.
    pub equal: bool,
}

pub fn verify_ap3(p: u64, opts: SearchOptions) -> Result<Ap3Report, SearchError> {
    let loop_ = build_bpq(p, 3).map_err(|_| SearchError::SignatureMismatch)?;
    let aut = automorphism_group(loop_.table(), opts)?;
    let explicit = ap3_group(p);
    let all_automorphisms = explicit.iter().all(|g| loop_.table().is_isomorphism_to(loop_.table(), &g.as_permutation()));
    let expected_order = explicit.len() as u128;
    let equal = all_automorphisms
        && aut.order() == expected_order
        && explicit.iter().all(|g| aut.contains(&g.as_permutation()));
    Ok(Ap3Report { p, computed_order: aut.order(), expected_order, all_automorphisms, equal })
}
