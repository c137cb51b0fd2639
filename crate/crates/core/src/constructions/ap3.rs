//! The group `A_{p,3}` of maps `(x, y) ↦ (ax, by + λ_c(x))` on `Z/3 × Z/p`.

use std::fmt;

use super::bpq::{bpq_coords, bpq_label};
use super::gf::mod_inv;
use crate::perm::Permutation;

/// `λ_c : Z/3 → Z/p` with `λ_c(0) = 0` and `λ_c(±1) = ±c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaMap {
    pub p: u64,
    pub c: u64,
}

impl LambdaMap {
    pub fn new(p: u64, c: u64) -> Self {
        Self { p, c: c % p }
    }

    pub fn eval(&self, x: usize) -> u64 {
        match x % 3 {
            0 => 0,
            1 => self.c,
            _ => (self.p - self.c) % self.p,
        }
    }

    /// `λ_b + d·λ_c = λ_{b + dc}`.
    pub fn add_scaled(&self, d: u64, other: &LambdaMap) -> LambdaMap {
        LambdaMap::new(self.p, self.c + d % self.p * other.c)
    }

    /// `x ↦ λ_c(a x)` for `a ∈ {1, -1}`, which is `λ_{ac}`.
    pub fn precompose(&self, a: i8) -> LambdaMap {
        if a == 1 {
            *self
        } else {
            LambdaMap::new(self.p, self.p - self.c)
        }
    }
}

/// `[a, b, λ_c]` with `a = ±1` in `Z/3` and `b` a unit mod `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ap3Element {
    pub a: i8,
    pub b: u64,
    pub lam: LambdaMap,
}

impl Ap3Element {
    pub fn new(p: u64, a: i8, b: u64, c: u64) -> Self {
        assert!(a == 1 || a == -1, "a must be ±1");
        assert!(!b.is_multiple_of(p), "b must be a unit");
        Self { a, b: b % p, lam: LambdaMap::new(p, c) }
    }

    pub fn identity(p: u64) -> Self {
        Self::new(p, 1, 1, 0)
    }

    pub fn p(&self) -> u64 {
        self.lam.p
    }

    pub fn c(&self) -> u64 {
        self.lam.c
    }

    fn a_mod_p(&self) -> u64 {
        if self.a == 1 {
            1
        } else {
            self.p() - 1
        }
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let p = self.p();
        let ax = if self.a == 1 { x % 3 } else { (3 - x % 3) % 3 };
        (ax, ((self.b * y as u64 + self.lam.eval(x)) % p) as usize)
    }

    /// `self ∘ other`, applying `other` first: `[d,e,λ_f]∘[a,b,λ_c] = [da, eb, λ_{ec + af}]`.
    pub fn compose(&self, other: &Ap3Element) -> Ap3Element {
        let p = self.p();
        let lam = LambdaMap::new(p, self.b * other.c()).add_scaled(1, &self.lam.precompose(other.a));
        Ap3Element { a: self.a * other.a, b: self.b * other.b % p, lam }
    }

    /// `[a⁻¹, b⁻¹, λ_{−a⁻¹ b⁻¹ c}]`.
    pub fn inverse(&self) -> Ap3Element {
        let p = self.p();
        let binv = mod_inv(self.b, p);
        let c = (p - self.c()) % p * binv % p * self.a_mod_p() % p;
        Ap3Element { a: self.a, b: binv, lam: LambdaMap::new(p, c) }
    }

    /// Action on the `B_{p,3}` labels `(i, j) ↦ i·p + j`.
    pub fn as_permutation(&self) -> Permutation {
        let p = self.p() as usize;
        Permutation::from_fn(3 * p, |x| {
            let (i, j) = bpq_coords(p, x);
            let (i2, j2) = self.apply(i, j);
            bpq_label(p, i2, j2)
        })
        .expect("A_(p,3) elements act bijectively")
    }

    pub fn is_involution(&self) -> bool {
        let sq = self.compose(self);
        sq == Self::identity(self.p()) && *self != sq
    }
}

impl fmt::Display for Ap3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, λ_{}]", self.a, self.b, self.c())
    }
}

/// All `2p(p−1)` elements, sorted.
pub fn ap3_group(p: u64) -> Vec<Ap3Element> {
    let mut out = Vec::with_capacity((2 * p * (p - 1)) as usize);
    for a in [1i8, -1] {
        for b in 1..p {
            for c in 0..p {
                out.push(Ap3Element::new(p, a, b, c));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_order_and_closure() {
        for p in [5u64, 7] {
            let g = ap3_group(p);
            assert_eq!(g.len() as u64, 2 * p * (p - 1));
            let set: std::collections::HashSet<_> = g.iter().copied().collect();
            for x in &g {
                for y in &g {
                    assert!(set.contains(&x.compose(y)));
                }
                assert_eq!(x.compose(&x.inverse()), Ap3Element::identity(p));
                assert_eq!(x.inverse().compose(x), Ap3Element::identity(p));
            }
        }
    }

    #[test]
    fn composition_matches_action() {
        let g = ap3_group(5);
        for x in g.iter().step_by(3) {
            for y in g.iter().step_by(7) {
                assert_eq!(x.compose(y).as_permutation(), x.as_permutation().compose(&y.as_permutation()));
            }
        }
    }

    #[test]
    fn lambda_rules() {
        let (l, m) = (LambdaMap::new(7, 3), LambdaMap::new(7, 5));
        assert_eq!(l.add_scaled(2, &m), LambdaMap::new(7, 13));
        for x in 0..3 {
            assert_eq!(l.precompose(-1).eval(x), l.eval((3 - x) % 3));
        }
    }
}
