//! Permutations of `{0, ..., n-1}` in image-array form.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image {value} at position {at} is out of range for degree {n}")]
    OutOfRange { at: usize, value: usize, n: usize },
    #[error("image {value} occurs twice (positions {first} and {second})")]
    Repeated { value: usize, first: usize, second: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

/// A bijection of `{0, ..., n-1}`; `img[x]` is the image of `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<u32>,
}

impl Permutation {
    pub fn new(img: Vec<usize>) -> Result<Self, PermError> {
        let n = img.len();
        let mut seen = vec![usize::MAX; n];
        for (at, &value) in img.iter().enumerate() {
            if value >= n {
                return Err(PermError::OutOfRange { at, value, n });
            }
            if seen[value] != usize::MAX {
                return Err(PermError::Repeated { value, first: seen[value], second: at });
            }
            seen[value] = at;
        }
        Ok(Self { img: img.into_iter().map(|v| v as u32).collect() })
    }

    /// Builds a permutation from a closure, validating bijectivity.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self, PermError> {
        Self::new((0..n).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self { img: (0..n as u32).collect() }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.img.iter().map(|&v| v as usize)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.img
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { img: other.img.iter().map(|&x| self.img[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.img.len()];
        for (x, &y) in self.img.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { img: inv }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.img.len()];
        for (x, &y) in self.img.iter().enumerate() {
            out[g.img[x] as usize] = g.img[y as usize];
        }
        Permutation { img: out }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// True when `self² = id` (the identity included).
    pub fn is_involution(&self) -> bool {
        self.img.iter().enumerate().all(|(x, &y)| self.img[y as usize] == x as u32)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images().enumerate().filter(|&(x, y)| x == y).map(|(x, _)| x).collect()
    }

    /// Disjoint cycles, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Order in the symmetric group (lcm of cycle lengths).
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.img)
    }
}

impl fmt::Display for Permutation {
    /// Image tuple, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.img.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Saturates at `u128::MAX`.
pub(crate) fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).saturating_mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(
            Permutation::new(vec![0, 0, 1]),
            Err(PermError::Repeated { value: 0, first: 0, second: 1 })
        );
        assert!(matches!(Permutation::new(vec![0, 3, 1]), Err(PermError::OutOfRange { .. })));
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        let b = Permutation::new(vec![1, 0, 2]).unwrap();
        let ab = a.compose(&b);
        for x in 0..3 {
            assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn order_and_cycles() {
        let p = Permutation::new(vec![1, 2, 0, 4, 3, 5]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        assert!(p.pow(3).is_involution());
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let s = Permutation::new(vec![1, 0, 2]).unwrap();
        let g = Permutation::new(vec![2, 0, 1]).unwrap();
        let c = s.conjugate_by(&g);
        assert_eq!(c, g.compose(&s).compose(&g.inverse()));
    }
}
