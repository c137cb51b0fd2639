//! Braided sets `r(x, y) = (x ∘ y, x • y)` and the conditions they may satisfy.

use std::sync::OnceLock;

use thiserror::Error;

use crate::perm::{lcm, Permutation};
use crate::tables::{for_all_tuples, invert_columns, invert_rows, MulTable, QuasigroupData, Violation, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidedError {
    #[error("circ has order {circ} but bullet has order {bullet}")]
    OrderMismatch { circ: usize, bullet: usize },
    #[error("the {0} division does not exist")]
    MissingDivision(&'static str),
}

/// Derived structure flags. Always computed from the tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidedFlags {
    pub solution: bool,
    pub dihedral: bool,
    pub triality: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub latin: bool,
    pub bijective: bool,
    pub biquandle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NondegeneracyFlags {
    pub left: bool,
    pub right: bool,
    pub latin: bool,
    pub bijective: bool,
}

/// The diagonal maps `x^S = x \∘ x` and `x^T = x /• x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalPair {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub mutually_inverse: bool,
    pub equal: bool,
}

impl DiagonalPair {
    pub fn s_permutation(&self) -> Option<Permutation> {
        Permutation::new(self.s.clone()).ok()
    }

    pub fn t_permutation(&self) -> Option<Permutation> {
        Permutation::new(self.t.clone()).ok()
    }

    /// `S² = id`.
    pub fn s_is_involutive(&self) -> bool {
        self.s.iter().enumerate().all(|(x, &sx)| self.s[sx] == x)
    }
}

/// Order of `r` as a self-map of `Q²`: `r^(preperiod + period) = r^preperiod`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidingOrder {
    pub bijective: bool,
    pub period: u128,
    pub preperiod: usize,
}

impl BraidingOrder {
    /// The group-theoretic order, defined when `r` is a permutation.
    pub fn order(&self) -> Option<u128> {
        self.bijective.then_some(self.period)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QybeDual {
    /// `ρ12 ρ13 ρ23 = ρ23 ρ13 ρ12` with `ρ = τ r`.
    pub qybe_holds: bool,
    /// `ρ² = id`.
    pub involutive: bool,
}

/// A self-map of `Q²` given by two operation tables.
#[derive(Debug, Clone)]
pub struct BraidedSet {
    circ: MulTable,
    bullet: MulTable,
    circ_ldiv: Option<MulTable>,
    circ_rdiv: Option<MulTable>,
    bullet_rdiv: Option<MulTable>,
    flags: OnceLock<BraidedFlags>,
}

impl PartialEq for BraidedSet {
    fn eq(&self, other: &Self) -> bool {
        self.circ == other.circ && self.bullet == other.bullet
    }
}

impl Eq for BraidedSet {}

impl BraidedSet {
    pub fn new(circ: MulTable, bullet: MulTable) -> Result<Self, BraidedError> {
        if circ.order() != bullet.order() {
            return Err(BraidedError::OrderMismatch { circ: circ.order(), bullet: bullet.order() });
        }
        let circ_ldiv = invert_rows(&circ).ok();
        let circ_rdiv = invert_columns(&circ).ok();
        let bullet_rdiv = invert_columns(&bullet).ok();
        Ok(Self { circ, bullet, circ_ldiv, circ_rdiv, bullet_rdiv, flags: OnceLock::new() })
    }

    /// Builds `r` from a function returning `(x ∘ y, x • y)`.
    pub fn from_fn(n: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self, crate::tables::TableError> {
        let circ = MulTable::from_fn(n, |x, y| r(x, y).0)?;
        let bullet = MulTable::from_fn(n, |x, y| r(x, y).1)?;
        Ok(Self::new(circ, bullet).expect("same order"))
    }

    /// The derived solution `(x ∘ y, x)` of a left-distributive operation.
    pub fn derived(circ: MulTable) -> Self {
        let bullet = MulTable::from_fn(circ.order(), |x, _| x).expect("in range");
        Self::new(circ, bullet).expect("same order")
    }

    /// The flip `τ(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x)).expect("in range")
    }

    pub fn order(&self) -> usize {
        self.circ.order()
    }

    pub fn circ(&self) -> &MulTable {
        &self.circ
    }

    pub fn bullet(&self) -> &MulTable {
        &self.bullet
    }

    pub fn circ_ldiv(&self) -> Option<&MulTable> {
        self.circ_ldiv.as_ref()
    }

    pub fn circ_rdiv(&self) -> Option<&MulTable> {
        self.circ_rdiv.as_ref()
    }

    pub fn bullet_rdiv(&self) -> Option<&MulTable> {
        self.bullet_rdiv.as_ref()
    }

    /// `(Q, ∘, \∘, /∘)` when `∘` is a quasigroup.
    pub fn circ_quasigroup(&self) -> Option<QuasigroupData> {
        match (&self.circ_ldiv, &self.circ_rdiv) {
            (Some(l), Some(r)) => Some(QuasigroupData { mul: self.circ.clone(), ldiv: l.clone(), rdiv: r.clone() }),
            _ => None,
        }
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.circ.get(x, y), self.bullet.get(x, y))
    }

    /// `r` on pair indices `x·n + y`.
    pub fn pair_map(&self) -> Vec<usize> {
        let n = self.order();
        (0..n * n)
            .map(|i| {
                let (a, b) = self.apply(i / n, i % n);
                a * n + b
            })
            .collect()
    }

    /// `r` as a permutation of `Q²` when it is bijective.
    pub fn as_permutation(&self) -> Option<Permutation> {
        Permutation::new(self.pair_map()).ok()
    }

    /// Counterexamples to YB1-YB3, at most `cap` per identity.
    pub fn is_solution_capped(&self, cap: usize) -> Vec<Violation> {
        let n = self.order();
        let c = |x, y| self.circ.get(x, y);
        let b = |x, y| self.bullet.get(x, y);
        let mut out = for_all_tuples(n, 3, cap, |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            let lhs = c(x, c(y, z));
            let rhs = c(c(x, y), c(b(x, y), z));
            (lhs != rhs).then(|| Violation { law: "YB1", vars: v.to_vec(), lhs, rhs })
        });
        out.extend(for_all_tuples(n, 3, cap, |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            let lhs = b(c(x, y), c(b(x, y), z));
            let rhs = c(b(x, c(y, z)), b(y, z));
            (lhs != rhs).then(|| Violation { law: "YB2", vars: v.to_vec(), lhs, rhs })
        }));
        out.extend(for_all_tuples(n, 3, cap, |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            let lhs = b(b(x, y), z);
            let rhs = b(b(x, c(y, z)), b(y, z));
            (lhs != rhs).then(|| Violation { law: "YB3", vars: v.to_vec(), lhs, rhs })
        }));
        out
    }

    pub fn is_solution(&self) -> Vec<Violation> {
        self.is_solution_capped(DEFAULT_CAP)
    }

    /// `r12 r23 r12 = r23 r12 r23` as maps of `Q³`, evaluated by composing functions.
    pub fn braid_relation_holds(&self) -> bool {
        let n = self.order();
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = self.apply(x, y);
            (a, b, z)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = self.apply(y, z);
            (x, a, b)
        };
        (0..n * n * n).all(|i| {
            let t = (i / (n * n), (i / n) % n, i % n);
            r12(r23(r12(t))) == r23(r12(r23(t)))
        })
    }

    pub fn is_dihedral_capped(&self, cap: usize) -> Vec<Violation> {
        let n = self.order();
        let mut out = for_all_tuples(n, 2, cap, |v| {
            let (c, b) = self.apply(v[0], v[1]);
            let lhs = self.bullet.get(b, c);
            (lhs != v[0]).then(|| Violation { law: "Di1", vars: v.to_vec(), lhs, rhs: v[0] })
        });
        out.extend(for_all_tuples(n, 2, cap, |v| {
            let (c, b) = self.apply(v[0], v[1]);
            let lhs = self.circ.get(b, c);
            (lhs != v[1]).then(|| Violation { law: "Di2", vars: v.to_vec(), lhs, rhs: v[1] })
        }));
        out
    }

    /// Counterexamples to Di1-Di2, i.e. to `(τ r)² = id`.
    pub fn is_dihedral(&self) -> Vec<Violation> {
        self.is_dihedral_capped(DEFAULT_CAP)
    }

    pub fn is_triality_capped(&self, cap: usize) -> Vec<Violation> {
        let n = self.order();
        let mut out = for_all_tuples(n, 2, cap, |v| {
            let (c, b) = self.apply(v[0], v[1]);
            let lhs = self.circ.get(c, b);
            let rhs = self.bullet.get(v[1], v[0]);
            (lhs != rhs).then(|| Violation { law: "Tri1", vars: v.to_vec(), lhs, rhs })
        });
        out.extend(for_all_tuples(n, 2, cap, |v| {
            let (c, b) = self.apply(v[0], v[1]);
            let lhs = self.bullet.get(c, b);
            let rhs = self.circ.get(v[1], v[0]);
            (lhs != rhs).then(|| Violation { law: "Tri2", vars: v.to_vec(), lhs, rhs })
        }));
        out
    }

    /// Counterexamples to Tri1-Tri2. Together with dihedrality these say `r³ = id`.
    pub fn is_triality(&self) -> Vec<Violation> {
        self.is_triality_capped(DEFAULT_CAP)
    }

    /// `r³` is the identity of `Q²`.
    pub fn cube_is_identity(&self) -> bool {
        let m = self.pair_map();
        (0..m.len()).all(|i| m[m[m[i]]] == i)
    }

    pub fn nondegeneracy_flags(&self) -> NondegeneracyFlags {
        NondegeneracyFlags {
            left: self.circ_ldiv.is_some(),
            right: self.bullet_rdiv.is_some(),
            latin: self.circ_ldiv.is_some() && self.circ_rdiv.is_some(),
            bijective: self.as_permutation().is_some(),
        }
    }

    pub fn diagonal_pair(&self) -> Result<DiagonalPair, BraidedError> {
        let l = self.circ_ldiv.as_ref().ok_or(BraidedError::MissingDivision("left circ"))?;
        let r = self.bullet_rdiv.as_ref().ok_or(BraidedError::MissingDivision("right bullet"))?;
        let n = self.order();
        let s: Vec<usize> = (0..n).map(|x| l.get(x, x)).collect();
        let t: Vec<usize> = (0..n).map(|x| r.get(x, x)).collect();
        let mutually_inverse = (0..n).all(|x| s[t[x]] == x && t[s[x]] == x);
        let equal = s == t;
        Ok(DiagonalPair { s, t, mutually_inverse, equal })
    }

    /// Nondegenerate, bijective, and `(x \∘ x) /• (x \∘ x) = x`.
    pub fn is_biquandle(&self) -> bool {
        let f = self.nondegeneracy_flags();
        f.left && f.right && f.bijective && self.diagonal_pair().map(|d| d.mutually_inverse).unwrap_or(false)
    }

    /// The derived rack `x ◁ y = x ∘ (y • (y \∘ x))`.
    pub fn derived_rack(&self) -> Result<MulTable, BraidedError> {
        let l = self.circ_ldiv.as_ref().ok_or(BraidedError::MissingDivision("left circ"))?;
        Ok(MulTable::from_fn(self.order(), |x, y| self.circ.get(x, self.bullet.get(y, l.get(y, x)))).expect("in range"))
    }

    /// Exact order of `r` from its functional graph on `Q²`.
    pub fn braiding_order(&self) -> BraidingOrder {
        let m = self.pair_map();
        let (period, preperiod) = functional_graph_order(&m);
        BraidingOrder { bijective: preperiod == 0 && is_bijection(&m), period, preperiod }
    }

    /// Checks the quantum Yang-Baxter equation for `ρ = τ r` on `Q³` and whether `ρ² = id`.
    pub fn qybe_dual_check(&self) -> QybeDual {
        let n = self.order();
        let rho = |x: usize, y: usize| {
            let (c, b) = self.apply(x, y);
            (b, c)
        };
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = rho(x, y);
            (a, b, z)
        };
        let r13 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = rho(x, z);
            (a, y, b)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = rho(y, z);
            (x, a, b)
        };
        let qybe_holds = (0..n * n * n).all(|i| {
            let t = (i / (n * n), (i / n) % n, i % n);
            r12(r13(r23(t))) == r23(r13(r12(t)))
        });
        let involutive = (0..n * n).all(|i| {
            let (a, b) = rho(i / n, i % n);
            rho(a, b) == (i / n, i % n)
        });
        QybeDual { qybe_holds, involutive }
    }

    /// All structure flags, computed once.
    pub fn flags(&self) -> BraidedFlags {
        *self.flags.get_or_init(|| {
            let nd = self.nondegeneracy_flags();
            let dihedral = self.is_dihedral_capped(1).is_empty();
            BraidedFlags {
                solution: self.is_solution_capped(1).is_empty(),
                dihedral,
                triality: dihedral && self.is_triality_capped(1).is_empty(),
                left_nondegenerate: nd.left,
                right_nondegenerate: nd.right,
                latin: nd.latin,
                bijective: nd.bijective,
                biquandle: self.is_biquandle(),
            }
        })
    }

    /// Latin braided dihedral set.
    pub fn is_lbds(&self) -> bool {
        let f = self.flags();
        f.solution && f.dihedral && f.latin
    }

    /// Latin braided triality set.
    pub fn is_lbts(&self) -> bool {
        self.is_lbds() && self.flags().triality
    }
}

fn is_bijection(m: &[usize]) -> bool {
    let mut seen = vec![false; m.len()];
    m.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

/// `(period, preperiod)` of a self-map: the least `p` and `t` with `f^(t+p) = f^t`.
fn functional_graph_order(f: &[usize]) -> (u128, usize) {
    let len = f.len();
    // 0 = unvisited, 1 = on current path, 2 = done
    let mut state = vec![0u8; len];
    let mut on_cycle = vec![false; len];
    let mut period = 1u128;
    for start in 0..len {
        if state[start] != 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut x = start;
        while state[x] == 0 {
            state[x] = 1;
            path.push(x);
            x = f[x];
        }
        if state[x] == 1 {
            let pos = path.iter().position(|&p| p == x).expect("on path");
            let cycle = &path[pos..];
            for &c in cycle {
                on_cycle[c] = true;
            }
            period = lcm(period, cycle.len() as u128);
        }
        for p in path {
            state[p] = 2;
        }
    }
    let mut depth = vec![usize::MAX; len];
    let mut preperiod = 0;
    for start in 0..len {
        let mut path = Vec::new();
        let mut x = start;
        while depth[x] == usize::MAX && !on_cycle[x] {
            path.push(x);
            x = f[x];
        }
        let mut d = if on_cycle[x] { 0 } else { depth[x] };
        for &p in path.iter().rev() {
            d += 1;
            depth[p] = d;
        }
        if on_cycle[start] {
            depth[start] = 0;
        }
        preperiod = preperiod.max(depth[start]);
    }
    (period, preperiod)
}
