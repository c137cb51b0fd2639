//! Named families of example solutions.

use super::groups::{elementary_abelian, signed_diagonal};
use super::l3::{build_l3, l3_involutions};
use super::lbds::LbdsDescriptor;
use super::ConstructionError;
use crate::braided::BraidedSet;
use crate::tables::{classify_loop, LoopData};

/// Family names accepted by [`stock_solution`], with their parameter lists.
pub const STOCK_FAMILIES: [(&str, &str); 9] = [
    ("trivial", "n"),
    ("dihedral_quandle", "n"),
    ("abelian", "n"),
    ("smith", "k (carrier (Z/3)^k)"),
    ("smith_l3", ""),
    ("cml_derived", "k (carrier (Z/3)^k)"),
    ("cml_derived_l3", ""),
    ("lbts", "a b (S = +1 on a factors, -1 on b factors of (Z/3)^(a+b))"),
    ("lbts_l3", "i (S_i, 1 <= i <= 4)"),
];

fn require_cml3(l: &LoopData) -> Result<(), ConstructionError> {
    let c = classify_loop(l).map_err(|e| ConstructionError::BadParams(format!("{e}")))?;
    if c.cml && c.exponent == 3 {
        Ok(())
    } else {
        Err(ConstructionError::BadParams("carrier must be a commutative Moufang loop of exponent 3".into()))
    }
}

/// `r(x, y) = (−x + y, −x)` on a commutative Moufang loop of exponent 3.
pub fn smith_solution(l: &LoopData) -> Result<BraidedSet, ConstructionError> {
    require_cml3(l)?;
    let inv = |x| l.right_inverse(x);
    Ok(BraidedSet::from_fn(l.order(), |x, y| (l.mul(inv(x), y), inv(x))).expect("in range"))
}

/// `r(x, y) = (−x − y, x)` on a commutative Moufang loop of exponent 3.
pub fn cml_derived_solution(l: &LoopData) -> Result<BraidedSet, ConstructionError> {
    require_cml3(l)?;
    let inv = |x| l.right_inverse(x);
    Ok(BraidedSet::from_fn(l.order(), |x, y| (l.mul(inv(x), inv(y)), x)).expect("in range"))
}

/// `r(x, y) = (−x − y^S, x^S)` for a descriptor over an exponent-3 loop.
pub fn lbts_solution(d: &LbdsDescriptor) -> Result<BraidedSet, ConstructionError> {
    require_cml3(&d.loop_.loop_)?;
    let b = &d.loop_;
    let s = |x| d.s.apply(x);
    Ok(BraidedSet::from_fn(d.order(), |x, y| (b.add(b.neg(x), b.neg(s(y))), s(x))).expect("in range"))
}

/// `(Z/3, +, 0, 1)^a × (Z/3, +, 0, −1)^b`.
pub fn elementary_lbts_descriptor(a: usize, b: usize) -> Result<LbdsDescriptor, ConstructionError> {
    let k = a + b;
    if k == 0 || k > 8 {
        return Err(ConstructionError::BadParams(format!("a + b = {k} must lie in 1..=8")));
    }
    let signs: Vec<i8> = std::iter::repeat_n(1, a).chain(std::iter::repeat_n(-1, b)).collect();
    LbdsDescriptor::from_loop(elementary_abelian(3, k as u32)?, signed_diagonal(3, &signs)?)
}

/// `(L_3, ⊞, (e, 0), S_i)` for `1 ≤ i ≤ 4`.
pub fn l3_descriptor(i: usize) -> Result<LbdsDescriptor, ConstructionError> {
    if !(1..=4).contains(&i) {
        return Err(ConstructionError::BadParams(format!("S_{i} does not exist; use 1..=4")));
    }
    LbdsDescriptor::from_loop(build_l3(), l3_involutions()[i - 1].clone())
}

fn expect_params(name: &str, params: &[usize], len: usize) -> Result<(), ConstructionError> {
    if params.len() == len {
        Ok(())
    } else {
        Err(ConstructionError::BadParams(format!("{name} takes {len} parameter(s), got {}", params.len())))
    }
}

fn positive(n: usize) -> Result<usize, ConstructionError> {
    if (1..=u16::MAX as usize).contains(&n) {
        Ok(n)
    } else {
        Err(ConstructionError::BadParams(format!("order {n} out of range")))
    }
}

fn cml3(k: usize) -> Result<LoopData, ConstructionError> {
    if !(1..=8).contains(&k) {
        return Err(ConstructionError::BadParams(format!("rank {k} must lie in 1..=8")));
    }
    elementary_abelian(3, k as u32)
}

pub fn stock_solution(name: &str, params: &[usize]) -> Result<BraidedSet, ConstructionError> {
    let one = |params: &[usize]| -> Result<usize, ConstructionError> {
        expect_params(name, params, 1)?;
        Ok(params[0])
    };
    match name {
        "trivial" => Ok(BraidedSet::flip(positive(one(params)?)?)),
        "dihedral_quandle" => {
            let n = positive(one(params)?)?;
            Ok(BraidedSet::from_fn(n, |x, y| ((2 * x + n - y) % n, x)).expect("in range"))
        }
        "abelian" => {
            let n = positive(one(params)?)?;
            Ok(BraidedSet::from_fn(n, |x, y| ((2 * x + y) % n, (n - x) % n)).expect("in range"))
        }
        "smith" => smith_solution(&cml3(one(params)?)?),
        "smith_l3" => {
            expect_params(name, params, 0)?;
            smith_solution(&build_l3())
        }
        "cml_derived" => cml_derived_solution(&cml3(one(params)?)?),
        "cml_derived_l3" => {
            expect_params(name, params, 0)?;
            cml_derived_solution(&build_l3())
        }
        "lbts" => {
            expect_params(name, params, 2)?;
            lbts_solution(&elementary_lbts_descriptor(params[0], params[1])?)
        }
        "lbts_l3" => lbts_solution(&l3_descriptor(one(params)?)?),
        _ => Err(ConstructionError::UnknownFamily(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::super::lbds_from_descriptor;
    use super::*;

    #[test]
    fn smith_on_z3_squared_is_latin_triality() {
        let s = stock_solution("smith", &[2]).unwrap();
        let f = s.flags();
        assert!(f.solution && f.dihedral && f.triality && f.latin);
    }

    #[test]
    fn abelian_on_z4_is_not_latin() {
        let s = stock_solution("abelian", &[4]).unwrap();
        let f = s.flags();
        assert!(f.solution && f.dihedral && !f.latin);
        assert_eq!(s.braiding_order().order(), Some(4));
    }

    #[test]
    fn dihedral_quandle_on_z3_is_triality() {
        assert!(stock_solution("dihedral_quandle", &[3]).unwrap().flags().triality);
        assert!(!stock_solution("dihedral_quandle", &[5]).unwrap().flags().triality);
    }

    #[test]
    fn lbts_formula_agrees_with_descriptor_construction() {
        for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 1)] {
            let d = elementary_lbts_descriptor(a, b).unwrap();
            assert_eq!(lbts_solution(&d).unwrap(), lbds_from_descriptor(&d).braided);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(stock_solution("nope", &[]), Err(ConstructionError::UnknownFamily(_))));
        assert!(matches!(stock_solution("abelian", &[]), Err(ConstructionError::BadParams(_))));
        assert!(matches!(stock_solution("lbts_l3", &[5]), Err(ConstructionError::BadParams(_))));
        assert!(smith_solution(&super::super::cyclic_group(5)).is_err());
    }
}
