//! Backtracking search for structure-preserving bijections between finite algebras.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::perm::Permutation;
use crate::tables::MulTable;

/// Default node budget for a single search call.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("group of order {order} is larger than the element cap {cap}")]
    TooLarge { order: u128, cap: usize },
    #[error("structures have different signatures")]
    SignatureMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes per call.
    pub budget: u64,
    /// Prune with isomorphism-invariant element profiles. Disabling keeps the search exact but slower.
    pub use_invariants: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, use_invariants: true }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget, ..Self::default() }
    }
}

/// A finite carrier with binary operations and unary maps, all of which a morphism must preserve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    n: usize,
    binary: Vec<MulTable>,
    unary: Vec<Vec<usize>>,
}

impl Algebra {
    pub fn new(binary: Vec<MulTable>, unary: Vec<Vec<usize>>) -> Self {
        let n = binary.first().map(|m| m.order()).or_else(|| unary.first().map(|u| u.len())).expect("at least one op");
        assert!(binary.iter().all(|m| m.order() == n) && unary.iter().all(|u| u.len() == n), "orders must agree");
        Self { n, binary, unary }
    }

    pub fn from_table(m: &MulTable) -> Self {
        Self::new(vec![m.clone()], Vec::new())
    }

    /// A table together with a map to be intertwined.
    pub fn with_map(m: &MulTable, s: &Permutation) -> Self {
        Self::new(vec![m.clone()], vec![s.images().collect()])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub(crate) fn parts(&self) -> (&[MulTable], &[Vec<usize>]) {
        (&self.binary, &self.unary)
    }

    fn same_signature(&self, o: &Algebra) -> bool {
        self.n == o.n && self.binary.len() == o.binary.len() && self.unary.len() == o.unary.len()
    }

    /// True when `phi` preserves every operation into `other`.
    pub fn is_morphism_to(&self, other: &Algebra, phi: &Permutation) -> bool {
        self.same_signature(other)
            && phi.degree() == self.n
            && self.binary.iter().zip(&other.binary).all(|(a, b)| a.is_isomorphism_to(b, phi))
            && self.unary.iter().zip(&other.unary).all(|(a, b)| (0..self.n).all(|x| phi.apply(a[x]) == b[phi.apply(x)]))
    }

    fn base_invariants(&self, x: usize) -> Vec<u64> {
        let n = self.n;
        let mut v = Vec::new();
        for m in &self.binary {
            v.push((m.get(x, x) == x) as u64);
            v.push((0..n).filter(|&y| m.get(x, y) == y).count() as u64);
            v.push((0..n).filter(|&y| m.get(y, x) == y).count() as u64);
            v.push((0..n).filter(|&y| m.get(x, y) == m.get(y, x)).count() as u64);
            let (tail, cycle) = rho(x, |p| m.get(p, x), n);
            v.push(tail);
            v.push(cycle);
            let mut assoc = 0u64;
            for y in 0..n {
                let xy = m.get(x, y);
                for z in 0..n {
                    if m.get(xy, z) == m.get(x, m.get(y, z)) {
                        assoc += 1;
                    }
                }
            }
            v.push(assoc);
        }
        for u in &self.unary {
            v.push((u[x] == x) as u64);
            v.push(rho(x, |p| u[p], n).1);
        }
        v
    }
}

/// `(tail, cycle)` lengths of the orbit of `start` under `f`.
fn rho(start: usize, f: impl Fn(usize) -> usize, n: usize) -> (u64, u64) {
    let mut seen = vec![u32::MAX; n];
    let mut x = start;
    let mut k = 0u32;
    while seen[x] == u32::MAX {
        seen[x] = k;
        x = f(x);
        k += 1;
    }
    (seen[x] as u64, (k - seen[x]) as u64)
}

fn relabel_jointly(sigs: Vec<Vec<u64>>) -> Vec<u32> {
    let map: BTreeMap<&Vec<u64>, u32> = {
        let mut keys: Vec<&Vec<u64>> = sigs.iter().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().enumerate().map(|(i, k)| (k, i as u32)).collect()
    };
    sigs.iter().map(|s| map[s]).collect()
}

/// Isomorphism-invariant colourings of the elements of `a` and `b`, refined until stable, with
/// comparable colour ids across both algebras.
pub(crate) fn joint_classes(a: &Algebra, b: &Algebra, use_invariants: bool) -> (Vec<u32>, Vec<u32>) {
    joint_classes_pinned(a, b, &[], use_invariants)
}

/// As [`joint_classes`], with the `i`-th pinned pair `(x, y)` given its own colour on both sides.
pub(crate) fn joint_classes_pinned(
    a: &Algebra,
    b: &Algebra,
    pins: &[(usize, usize)],
    use_invariants: bool,
) -> (Vec<u32>, Vec<u32>) {
    let n = a.n;
    if !use_invariants {
        return (vec![0; n], vec![0; n]);
    }
    let pin_tag = |side: usize, x: usize| -> u64 {
        pins.iter().position(|p| if side == 0 { p.0 == x } else { p.1 == x }).map_or(0, |i| i as u64 + 1)
    };
    let sigs: Vec<Vec<u64>> = (0..n)
        .map(|x| {
            let mut v = a.base_invariants(x);
            v.push(pin_tag(0, x));
            v
        })
        .chain((0..n).map(|x| {
            let mut v = b.base_invariants(x);
            v.push(pin_tag(1, x));
            v
        }))
        .collect();
    let mut ids = relabel_jointly(sigs);
    let mut count = distinct(&ids);
    loop {
        let sig = |alg: &Algebra, off: usize, x: usize| -> Vec<u64> {
            let id = |y: usize| ids[off + y] as u64;
            let mut v = vec![id(x)];
            for m in &alg.binary {
                let mut left: Vec<u64> = (0..n).map(|y| id(m.get(x, y)) << 32 | id(y)).collect();
                let mut right: Vec<u64> = (0..n).map(|y| id(m.get(y, x)) << 32 | id(y)).collect();
                left.sort_unstable();
                right.sort_unstable();
                v.extend(left);
                v.extend(right);
            }
            for u in &alg.unary {
                v.push(id(u[x]));
            }
            v
        };
        let sigs: Vec<Vec<u64>> = (0..n).map(|x| sig(a, 0, x)).chain((0..n).map(|x| sig(b, n, x))).collect();
        let next = relabel_jointly(sigs);
        let c = distinct(&next);
        ids = next;
        if c == count {
            break;
        }
        count = c;
    }
    (ids[..n].to_vec(), ids[n..].to_vec())
}

fn distinct(ids: &[u32]) -> usize {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

const NONE: u32 = u32::MAX;

/// Whether an enumeration callback wants more solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
}

/// Partial bijection `src → dst` extended by propagation through every operation.
pub(crate) struct Engine<'a> {
    src: &'a Algebra,
    dst: &'a Algebra,
    cls_src: Vec<u32>,
    cls_dst: Vec<u32>,
    free_in_class: Vec<u32>,
    fwd: Vec<u32>,
    bwd: Vec<u32>,
    trail: Vec<u32>,
    involutive: bool,
    pub nodes: u64,
    budget: u64,
}

impl<'a> Engine<'a> {
    pub fn new(src: &'a Algebra, dst: &'a Algebra, opts: SearchOptions) -> Result<Self, SearchError> {
        if !src.same_signature(dst) {
            return Err(SearchError::SignatureMismatch);
        }
        let (cls_src, cls_dst) = joint_classes(src, dst, opts.use_invariants);
        Ok(Self::with_classes(src, dst, cls_src, cls_dst, opts.budget))
    }

    pub fn with_classes(src: &'a Algebra, dst: &'a Algebra, cls_src: Vec<u32>, cls_dst: Vec<u32>, budget: u64) -> Self {
        let n = src.n;
        let k = cls_src.iter().chain(&cls_dst).copied().max().unwrap_or(0) as usize + 1;
        let mut free_in_class = vec![0u32; k];
        for &c in &cls_dst {
            free_in_class[c as usize] += 1;
        }
        Self {
            src,
            dst,
            cls_src,
            cls_dst,
            free_in_class,
            fwd: vec![NONE; n],
            bwd: vec![NONE; n],
            trail: Vec::with_capacity(n),
            involutive: false,
            nodes: 0,
            budget,
        }
    }

    /// Additionally require `φ(φ(x)) = x` (only meaningful when `src` and `dst` coincide).
    pub fn involutive(mut self) -> Self {
        self.involutive = true;
        self
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().expect("non-empty") as usize;
            let b = self.fwd[a] as usize;
            self.fwd[a] = NONE;
            self.bwd[b] = NONE;
            self.free_in_class[self.cls_dst[b] as usize] += 1;
        }
    }

    /// Assigns `x ↦ y` and everything it forces; on contradiction restores the previous state.
    pub fn assign(&mut self, x: usize, y: usize) -> bool {
        let mark = self.trail.len();
        if self.propagate(x, y) {
            true
        } else {
            self.undo_to(mark);
            false
        }
    }

    fn propagate(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x as u32, y as u32)];
        while let Some((a, b)) = queue.pop() {
            let (a, b) = (a as usize, b as usize);
            if self.fwd[a] != NONE {
                if self.fwd[a] as usize != b {
                    return false;
                }
                continue;
            }
            if self.bwd[b] != NONE || self.cls_src[a] != self.cls_dst[b] {
                return false;
            }
            self.fwd[a] = b as u32;
            self.bwd[b] = a as u32;
            self.free_in_class[self.cls_dst[b] as usize] -= 1;
            self.trail.push(a as u32);
            let len = self.trail.len();
            for (ms, md) in self.src.binary.iter().zip(&self.dst.binary) {
                for &c in &self.trail[..len] {
                    let c = c as usize;
                    let d = self.fwd[c] as usize;
                    queue.push((ms.get(a, c) as u32, md.get(b, d) as u32));
                    if c != a {
                        queue.push((ms.get(c, a) as u32, md.get(d, b) as u32));
                    }
                }
            }
            for (us, ud) in self.src.unary.iter().zip(&self.dst.unary) {
                queue.push((us[a] as u32, ud[b] as u32));
            }
            if self.involutive {
                queue.push((b as u32, a as u32));
            }
        }
        true
    }

    fn pick_branch(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for x in 0..self.src.n {
            if self.fwd[x] == NONE {
                let c = self.free_in_class[self.cls_src[x] as usize];
                if best.is_none_or(|(bc, _)| c < bc) {
                    best = Some((c, x));
                    if c <= 1 {
                        break;
                    }
                }
            }
        }
        best.map(|(_, x)| x)
    }

    fn current(&self) -> Permutation {
        Permutation::from_fn(self.src.n, |x| self.fwd[x] as usize).expect("complete bijection")
    }

    /// Depth-first enumeration of all completions of the current partial map.
    pub fn enumerate(&mut self, on_found: &mut dyn FnMut(Permutation) -> Flow) -> Result<Flow, SearchError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::BudgetExceeded { budget: self.budget });
        }
        let Some(x) = self.pick_branch() else {
            let phi = self.current();
            debug_assert!(self.src.is_morphism_to(self.dst, &phi));
            return Ok(on_found(phi));
        };
        let cx = self.cls_src[x];
        for y in 0..self.dst.n {
            if self.bwd[y] != NONE || self.cls_dst[y] != cx {
                continue;
            }
            let mark = self.trail.len();
            if self.propagate(x, y) {
                let flow = self.enumerate(on_found);
                self.undo_to(mark);
                if flow? == Flow::Stop {
                    return Ok(Flow::Stop);
                }
            } else {
                self.undo_to(mark);
            }
        }
        Ok(Flow::Continue)
    }

    /// First completion in search order, if any.
    pub fn find_first(&mut self) -> Result<Option<Permutation>, SearchError> {
        let mut found = None;
        self.enumerate(&mut |phi| {
            found = Some(phi);
            Flow::Stop
        })?;
        Ok(found)
    }
}
