//! Brute-force evaluation of named identities over all variable assignments.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use super::quasigroup::{find_identity, LeftQuasigroup, LoopData, QuasigroupData};
use super::table::MulTable;

pub const DEFAULT_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    /// `x ∗ (x ∗ y) = y`
    LeftSymmetric,
    /// `(y ∗ x) ∗ x = y`
    RightSymmetric,
    /// `x ∗ (y ∗ x) = y`
    SemiSymmetric1,
    /// `(x ∗ y) ∗ x = y`
    SemiSymmetric2,
    /// `x(yz) = (xy)(xz)`
    LeftDistributive,
    /// `x(yz) = (xy)(x^S z)` with `x^S = x\x`
    LeftF,
    /// `(zy)x = (z(x/x))(yx)`
    RightF,
    /// `x(y(xz)) = (x(yx))z`
    Bol,
    /// `x(y(xz)) = ((xy)x)z`
    Moufang,
    /// `(xy)⁻¹ = x⁻¹y⁻¹`
    AutomorphicInverse,
    /// `x⁻¹(xy) = y`
    LeftInverse,
    /// `(yx)x⁻¹ = y`
    RightInverse,
    /// `x⁻¹x = e` where `x⁻¹ = x\e`
    TwoSidedInverse,
    /// `x²(yz) = (xy)(xz)`
    Manin,
    Commutative,
    Idempotent,
    Associative,
    /// `(x\x)(xy) = y`
    SquareLeftInverse,
    /// `x/(y\x) = y`
    DivisionTents1,
    /// `(x/y)\x = y`
    DivisionTents2,
    /// `x/y = y\x`
    DivisionSwap,
    /// `(y\x)\x = y`
    LeftDivisionSymmetric,
    /// `2(x+y) = x+(2y+x)` written multiplicatively with `2z = zz`
    BruckLaw1,
}

impl LawId {
    pub const ALL: [LawId; 23] = [
        LawId::LeftSymmetric,
        LawId::RightSymmetric,
        LawId::SemiSymmetric1,
        LawId::SemiSymmetric2,
        LawId::LeftDistributive,
        LawId::LeftF,
        LawId::RightF,
        LawId::Bol,
        LawId::Moufang,
        LawId::AutomorphicInverse,
        LawId::LeftInverse,
        LawId::RightInverse,
        LawId::TwoSidedInverse,
        LawId::Manin,
        LawId::Commutative,
        LawId::Idempotent,
        LawId::Associative,
        LawId::SquareLeftInverse,
        LawId::DivisionTents1,
        LawId::DivisionTents2,
        LawId::DivisionSwap,
        LawId::LeftDivisionSymmetric,
        LawId::BruckLaw1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::LeftSymmetric => "LS",
            LawId::RightSymmetric => "RS",
            LawId::SemiSymmetric1 => "SS1",
            LawId::SemiSymmetric2 => "SS2",
            LawId::LeftDistributive => "LD",
            LawId::LeftF => "LF",
            LawId::RightF => "RF",
            LawId::Bol => "Bol",
            LawId::Moufang => "Moufang",
            LawId::AutomorphicInverse => "AIP",
            LawId::LeftInverse => "LIP",
            LawId::RightInverse => "RIP",
            LawId::TwoSidedInverse => "inverses",
            LawId::Manin => "Manin",
            LawId::Commutative => "commutative",
            LawId::Idempotent => "idempotent",
            LawId::Associative => "associative",
            LawId::SquareLeftInverse => "SqInLIP",
            LawId::DivisionTents1 => "DivTents1",
            LawId::DivisionTents2 => "DivTents2",
            LawId::DivisionSwap => "DivSwap",
            LawId::LeftDivisionSymmetric => "LDivSym",
            LawId::BruckLaw1 => "BruckLaw1",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            LawId::Idempotent | LawId::TwoSidedInverse => 1,
            LawId::LeftSymmetric
            | LawId::RightSymmetric
            | LawId::SemiSymmetric1
            | LawId::SemiSymmetric2
            | LawId::AutomorphicInverse
            | LawId::LeftInverse
            | LawId::RightInverse
            | LawId::Commutative
            | LawId::SquareLeftInverse
            | LawId::DivisionTents1
            | LawId::DivisionTents2
            | LawId::DivisionSwap
            | LawId::LeftDivisionSymmetric
            | LawId::BruckLaw1 => 2,
            LawId::LeftDistributive
            | LawId::LeftF
            | LawId::RightF
            | LawId::Bol
            | LawId::Moufang
            | LawId::Manin
            | LawId::Associative => 3,
        }
    }

    fn needs_ldiv(self) -> bool {
        matches!(
            self,
            LawId::LeftF
                | LawId::SquareLeftInverse
                | LawId::DivisionTents1
                | LawId::DivisionTents2
                | LawId::DivisionSwap
                | LawId::LeftDivisionSymmetric
        ) || self.needs_identity()
    }

    fn needs_rdiv(self) -> bool {
        matches!(self, LawId::RightF | LawId::DivisionTents1 | LawId::DivisionTents2 | LawId::DivisionSwap)
    }

    fn needs_identity(self) -> bool {
        matches!(
            self,
            LawId::AutomorphicInverse | LawId::LeftInverse | LawId::RightInverse | LawId::TwoSidedInverse
        )
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LawId::ALL
            .iter()
            .copied()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown law `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("law {law} needs the {which} division, which is not available")]
    LawNeedsDivision { law: LawId, which: &'static str },
    #[error("law {0} needs a two-sided identity element")]
    LawNeedsIdentity(LawId),
}

/// One failing assignment with both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub vars: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        write!(f, "{}:", self.law)?;
        for (i, v) in self.vars.iter().enumerate() {
            write!(f, " {}={}", NAMES.get(i).copied().unwrap_or("w"), v)?;
        }
        write!(f, " (lhs {} != rhs {})", self.lhs, self.rhs)
    }
}

/// Borrowed view of a magma with whichever divisions are known.
#[derive(Debug, Clone, Copy)]
pub struct Structure<'a> {
    pub mul: &'a MulTable,
    pub ldiv: Option<&'a MulTable>,
    pub rdiv: Option<&'a MulTable>,
}

impl<'a> From<&'a MulTable> for Structure<'a> {
    fn from(mul: &'a MulTable) -> Self {
        Structure { mul, ldiv: None, rdiv: None }
    }
}

impl<'a> From<&'a LeftQuasigroup> for Structure<'a> {
    fn from(q: &'a LeftQuasigroup) -> Self {
        Structure { mul: &q.mul, ldiv: Some(&q.ldiv), rdiv: None }
    }
}

impl<'a> From<&'a QuasigroupData> for Structure<'a> {
    fn from(q: &'a QuasigroupData) -> Self {
        Structure { mul: &q.mul, ldiv: Some(&q.ldiv), rdiv: Some(&q.rdiv) }
    }
}

impl<'a> From<&'a LoopData> for Structure<'a> {
    fn from(l: &'a LoopData) -> Self {
        Structure::from(&l.q)
    }
}

struct Env<'a> {
    mul: &'a MulTable,
    ldiv: Option<&'a MulTable>,
    rdiv: Option<&'a MulTable>,
    e: usize,
}

impl Env<'_> {
    #[inline]
    fn m(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }
    #[inline]
    fn l(&self, x: usize, y: usize) -> usize {
        self.ldiv.expect("checked before evaluation").get(x, y)
    }
    #[inline]
    fn r(&self, x: usize, y: usize) -> usize {
        self.rdiv.expect("checked before evaluation").get(x, y)
    }
    #[inline]
    fn inv(&self, x: usize) -> usize {
        self.l(x, self.e)
    }

    fn sides(&self, law: LawId, v: &[usize]) -> (usize, usize) {
        let x = v[0];
        let y = v.get(1).copied().unwrap_or(0);
        let z = v.get(2).copied().unwrap_or(0);
        match law {
            LawId::LeftSymmetric => (self.m(x, self.m(x, y)), y),
            LawId::RightSymmetric => (self.m(self.m(y, x), x), y),
            LawId::SemiSymmetric1 => (self.m(x, self.m(y, x)), y),
            LawId::SemiSymmetric2 => (self.m(self.m(x, y), x), y),
            LawId::LeftDistributive => (self.m(x, self.m(y, z)), self.m(self.m(x, y), self.m(x, z))),
            LawId::LeftF => {
                let xs = self.l(x, x);
                (self.m(x, self.m(y, z)), self.m(self.m(x, y), self.m(xs, z)))
            }
            LawId::RightF => {
                let xt = self.r(x, x);
                (self.m(self.m(z, y), x), self.m(self.m(z, xt), self.m(y, x)))
            }
            LawId::Bol => (self.m(x, self.m(y, self.m(x, z))), self.m(self.m(x, self.m(y, x)), z)),
            LawId::Moufang => (self.m(x, self.m(y, self.m(x, z))), self.m(self.m(self.m(x, y), x), z)),
            LawId::AutomorphicInverse => (self.inv(self.m(x, y)), self.m(self.inv(x), self.inv(y))),
            LawId::LeftInverse => (self.m(self.inv(x), self.m(x, y)), y),
            LawId::RightInverse => (self.m(self.m(y, x), self.inv(x)), y),
            LawId::TwoSidedInverse => (self.m(self.inv(x), x), self.e),
            LawId::Manin => (self.m(self.m(x, x), self.m(y, z)), self.m(self.m(x, y), self.m(x, z))),
            LawId::Commutative => (self.m(x, y), self.m(y, x)),
            LawId::Idempotent => (self.m(x, x), x),
            LawId::Associative => (self.m(self.m(x, y), z), self.m(x, self.m(y, z))),
            LawId::SquareLeftInverse => (self.m(self.l(x, x), self.m(x, y)), y),
            LawId::DivisionTents1 => (self.r(x, self.l(y, x)), y),
            LawId::DivisionTents2 => (self.l(self.r(x, y), x), y),
            LawId::DivisionSwap => (self.r(x, y), self.l(y, x)),
            LawId::LeftDivisionSymmetric => (self.l(self.l(y, x), x), y),
            LawId::BruckLaw1 => {
                let s = self.m(x, y);
                let yy = self.m(y, y);
                (self.m(s, s), self.m(x, self.m(yy, x)))
            }
        }
    }
}

/// Every violating assignment of `law`, up to [`DEFAULT_CAP`].
pub fn check_law<'a>(s: impl Into<Structure<'a>>, law: LawId) -> Result<Vec<Violation>, LawError> {
    check_law_capped(s, law, DEFAULT_CAP)
}

/// Every violating assignment of `law`, up to `cap` of them, in lexicographic order of the
/// variable tuple. An empty result certifies the identity on the whole carrier.
pub fn check_law_capped<'a>(
    s: impl Into<Structure<'a>>,
    law: LawId,
    cap: usize,
) -> Result<Vec<Violation>, LawError> {
    let s = s.into();
    if law.needs_ldiv() && s.ldiv.is_none() {
        return Err(LawError::LawNeedsDivision { law, which: "left" });
    }
    if law.needs_rdiv() && s.rdiv.is_none() {
        return Err(LawError::LawNeedsDivision { law, which: "right" });
    }
    let e = if law.needs_identity() {
        find_identity(s.mul).ok_or(LawError::LawNeedsIdentity(law))?
    } else {
        0
    };
    let env = Env { mul: s.mul, ldiv: s.ldiv, rdiv: s.rdiv, e };
    let n = s.mul.order();
    let k = law.arity();
    let name = law.name();
    Ok(for_all_tuples(n, k, cap, |v| {
        let (lhs, rhs) = env.sides(law, v);
        (lhs != rhs).then(|| Violation { law: name, vars: v.to_vec(), lhs, rhs })
    }))
}

/// True when `law` holds everywhere.
pub fn holds<'a>(s: impl Into<Structure<'a>>, law: LawId) -> Result<bool, LawError> {
    Ok(check_law_capped(s, law, 1)?.is_empty())
}

/// Runs `test` on every `k`-tuple over `{0..n}` (partitioned by the first coordinate) and
/// returns the first `cap` failures in lexicographic order.
pub(crate) fn for_all_tuples<F>(n: usize, k: usize, cap: usize, test: F) -> Vec<Violation>
where
    F: Fn(&[usize]) -> Option<Violation> + Sync,
{
    if cap == 0 {
        return Vec::new();
    }
    let per_first: Vec<Vec<Violation>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut found = Vec::new();
            let mut v = vec![0usize; k];
            v[0] = x;
            let rest = n.pow((k - 1) as u32);
            for idx in 0..rest {
                let mut r = idx;
                for slot in (1..k).rev() {
                    v[slot] = r % n;
                    r /= n;
                }
                if let Some(viol) = test(&v) {
                    found.push(viol);
                    if found.len() >= cap {
                        break;
                    }
                }
            }
            found
        })
        .collect();
    per_first.into_iter().flatten().take(cap).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> MulTable {
        MulTable::from_fn(n, |x, y| (x + y) % n).unwrap()
    }

    #[test]
    fn commutativity_of_cyclic_group() {
        assert!(check_law(&zn(3), LawId::Commutative).unwrap().is_empty());
    }

    #[test]
    fn division_laws_need_divisions() {
        let m = zn(3);
        assert_eq!(
            check_law(&m, LawId::LeftF).unwrap_err(),
            LawError::LawNeedsDivision { law: LawId::LeftF, which: "left" }
        );
        let q = QuasigroupData::from_mul(m).unwrap();
        assert!(check_law(&q, LawId::LeftF).is_ok());
    }

    #[test]
    fn inverse_laws_need_identity() {
        let quandle = QuasigroupData::from_mul(MulTable::from_fn(3, |x, y| (2 * x + 3 - y) % 3).unwrap()).unwrap();
        assert_eq!(
            check_law(&quandle, LawId::AutomorphicInverse).unwrap_err(),
            LawError::LawNeedsIdentity(LawId::AutomorphicInverse)
        );
    }

    #[test]
    fn violations_are_capped_and_ordered() {
        // x - y on Z/5 is far from commutative
        let m = MulTable::from_fn(5, |x, y| (x + 5 - y) % 5).unwrap();
        let all = check_law_capped(&m, LawId::Commutative, usize::MAX).unwrap();
        assert_eq!(all.len(), 20);
        let capped = check_law_capped(&m, LawId::Commutative, 3).unwrap();
        assert_eq!(capped, all[..3].to_vec());
        assert_eq!(capped[0].vars, vec![0, 1]);
        assert_eq!((capped[0].lhs, capped[0].rhs), (4, 1));
    }

    #[test]
    fn law_names_round_trip() {
        for law in LawId::ALL {
            assert_eq!(law.name().parse::<LawId>().unwrap(), law);
        }
        assert!("nope".parse::<LawId>().is_err());
    }

    #[test]
    fn dihedral_quandle_laws() {
        let m = MulTable::from_fn(5, |x, y| (2 * x + 5 - y) % 5).unwrap();
        assert!(holds(&m, LawId::LeftSymmetric).unwrap());
        assert!(holds(&m, LawId::LeftDistributive).unwrap());
        assert!(holds(&m, LawId::Idempotent).unwrap());
        assert!(!holds(&m, LawId::Commutative).unwrap());
    }
}
