//! Arithmetic in the quadratic extension `GF(p²) = F_p[x]/(x² − t)`.

use std::fmt;

use super::ConstructionError;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a, p - 2, p)
}

/// Smallest quadratic non-residue modulo an odd prime.
pub fn smallest_nonresidue(p: u64) -> u64 {
    (2..p).find(|&t| mod_pow(t, (p - 1) / 2, p) == p - 1).expect("odd primes have non-residues")
}

/// `a + b√t` in `GF(p²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Element {
    pub p: u64,
    pub t: u64,
    pub a: u64,
    pub b: u64,
}

impl Gf2Element {
    pub fn new(p: u64, t: u64, a: u64, b: u64) -> Self {
        Self { p, t, a: a % p, b: b % p }
    }

    pub fn from_base(p: u64, t: u64, a: u64) -> Self {
        Self::new(p, t, a, 0)
    }

    pub fn zero(p: u64, t: u64) -> Self {
        Self::new(p, t, 0, 0)
    }

    pub fn one(p: u64, t: u64) -> Self {
        Self::new(p, t, 1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True when the element lies in the prime field.
    pub fn in_base_field(&self) -> bool {
        self.b == 0
    }

    pub fn add(self, o: Self) -> Self {
        Self::new(self.p, self.t, self.a + o.a, self.b + o.b)
    }

    pub fn neg(self) -> Self {
        Self::new(self.p, self.t, self.p - self.a, self.p - self.b)
    }

    pub fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    pub fn mul(self, o: Self) -> Self {
        let p = self.p;
        let a = (self.a * o.a + self.b * o.b % p * self.t) % p;
        let b = (self.a * o.b + self.b * o.a) % p;
        Self::new(p, self.t, a, b)
    }

    /// `(a + b√t)⁻¹ = (a − b√t) / (a² − t b²)`.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.p;
        let norm = (self.a * self.a % p + p - self.b * self.b % p * self.t % p) % p;
        let ni = mod_inv(norm, p);
        Some(Self::new(p, self.t, self.a * ni, (p - self.b) * ni))
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut r = Self::one(self.p, self.t);
        let mut b = self;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(b);
            }
            b = b.mul(b);
            e >>= 1;
        }
        r
    }

    /// Multiplicative order, or `None` for zero.
    pub fn order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let one = Self::one(self.p, self.t);
        let mut x = self;
        let mut k = 1;
        while x != one {
            x = x.mul(self);
            k += 1;
        }
        Some(k)
    }
}

impl fmt::Display for Gf2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}√{}", self.a, self.b, self.t)
        }
    }
}

/// Parameters of `B_{p,q}`: the non-residue `t`, a root of unity `ω` of order `q`, and
/// `θ_i = 2/(ω^i + ω^{-i})` as residues mod `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Setup {
    pub p: u64,
    pub q: u64,
    pub t: u64,
    pub omega: Gf2Element,
    pub theta: Vec<u64>,
}

fn check_pair(p: u64, q: u64) -> Result<u64, ConstructionError> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(ConstructionError::NotOddPrime(p));
    }
    if q.is_multiple_of(2) || !is_prime(q) || !(p * p - 1).is_multiple_of(q) {
        return Err(ConstructionError::BadOrderPair { p, q });
    }
    Ok(smallest_nonresidue(p))
}

/// All elements of multiplicative order exactly `q`, in lexicographic `(a, b)` order.
pub fn omega_candidates(p: u64, q: u64) -> Result<Vec<Gf2Element>, ConstructionError> {
    let t = check_pair(p, q)?;
    let one = Gf2Element::one(p, t);
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            let w = Gf2Element::new(p, t, a, b);
            if !w.is_zero() && w != one && w.pow(q) == one {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// Deterministic setup using the lexicographically first root of unity of order `q`.
pub fn gf2_setup(p: u64, q: u64) -> Result<Gf2Setup, ConstructionError> {
    let omega = *omega_candidates(p, q)?.first().ok_or(ConstructionError::BadOrderPair { p, q })?;
    gf2_setup_with_omega(p, q, omega)
}

pub fn gf2_setup_with_omega(p: u64, q: u64, omega: Gf2Element) -> Result<Gf2Setup, ConstructionError> {
    let t = check_pair(p, q)?;
    let omega = Gf2Element::new(p, t, omega.a, omega.b);
    if omega.order() != Some(q) {
        return Err(ConstructionError::BadParams(format!("{omega} does not have order {q}")));
    }
    let two = Gf2Element::from_base(p, t, 2);
    let winv = omega.inv().expect("nonzero");
    let mut theta = Vec::with_capacity(q as usize);
    for i in 0..q {
        let den = omega.pow(i).add(winv.pow(i));
        let th = two.mul(den.inv().ok_or(ConstructionError::DenominatorZero { i })?);
        if !th.in_base_field() {
            return Err(ConstructionError::DenominatorZero { i });
        }
        theta.push(th.a);
    }
    for i in 1..q as usize {
        assert_eq!(theta[i], theta[q as usize - i], "θ_(-i) = θ_i");
    }
    Ok(Gf2Setup { p, q, t, omega, theta })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_for_q3_is_minus_two() {
        for p in [5u64, 7, 11, 13] {
            let s = gf2_setup(p, 3).unwrap();
            assert_eq!(s.theta[0], 1);
            assert_eq!(s.theta[1], p - 2);
            assert_eq!(s.theta[2], p - 2);
        }
        assert_eq!(gf2_setup(5, 3).unwrap().theta[1], 3);
    }

    #[test]
    fn omega_in_base_field_when_q_divides_p_minus_one() {
        let s = gf2_setup(7, 3).unwrap();
        assert_eq!((s.omega.a, s.omega.b), (2, 0));
        let s = gf2_setup(5, 3).unwrap();
        assert!(!s.omega.in_base_field());
        assert_eq!(s.t, 2);
    }

    #[test]
    fn rejects_bad_pairs() {
        assert_eq!(gf2_setup(5, 7).unwrap_err(), ConstructionError::BadOrderPair { p: 5, q: 7 });
        assert_eq!(gf2_setup(9, 5).unwrap_err(), ConstructionError::NotOddPrime(9));
    }

    #[test]
    fn field_inverse() {
        let t = smallest_nonresidue(11);
        for a in 0..11 {
            for b in 0..11 {
                let x = Gf2Element::new(11, t, a, b);
                if let Some(y) = x.inv() {
                    assert_eq!(x.mul(y), Gf2Element::one(11, t));
                }
            }
        }
    }
}
