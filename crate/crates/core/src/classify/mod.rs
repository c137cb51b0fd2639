//! Classification of Latin dihedral solutions at small orders, with non-isomorphism certificates,
//! a brute-force oracle, squaring-map analysis and catalog counting.

mod brute;
mod catalog;
mod sq;

use std::cmp::Reverse;

use thiserror::Error;

use crate::braided::BraidedSet;
use crate::constructions::{
    build_bpq, build_l3, cyclic_group, elementary_abelian, elementary_lbts_descriptor, l3_descriptor, lbds_from_descriptor,
    signed_diagonal, Ap3Element, ConstructionError, LbdsDescriptor,
};
use crate::morphisms::{
    descriptors_isomorphic, involution_classes, lbds_quasigroup_isomorphic, n_ci, IsoOutcome, NonIsoCertificate,
    SearchError, SearchOptions,
};
use crate::perm::Permutation;
use crate::tables::{check_law_capped, LawId, LoopData};

pub use brute::{brute_force_solutions, canonical_form, Constraints, BRUTE_LATIN_MAX, BRUTE_DERIVED_MAX};
pub use catalog::{catalog_report, parse_expected, CatalogReport, CatalogRow};
pub use sq::{sq_analysis, SqAnalysis, SqWitness};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("representatives {left} and {right} are isomorphic")]
    Duplicate { left: String, right: String },
    #[error("representative {name} fails {law}")]
    RepresentativeFails { name: String, law: String },
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("order {n} exceeds the brute-force limit {max} for this constraint profile")]
    InfeasibleSize { n: usize, max: usize },
    #[error("unsupported constraint profile: {0}")]
    UnsupportedConstraints(String),
    #[error("{name} is not a uniquely 2-divisible Bruck loop: {reason}")]
    NotBruck { name: String, reason: String },
    #[error("{0} must be an odd prime")]
    NotOddPrime(u64),
}

/// One isomorphism class, given by a descriptor and the solution it builds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub name: String,
    pub descriptor: LbdsDescriptor,
    pub solution: BraidedSet,
    pub associative: bool,
    pub triality: bool,
}

impl ClassEntry {
    pub fn new(name: impl Into<String>, descriptor: LbdsDescriptor) -> Self {
        let solution = lbds_from_descriptor(&descriptor).braided;
        let associative = descriptor.loop_.loop_.is_associative();
        let triality = solution.is_triality_capped(1).is_empty();
        Self { name: name.into(), descriptor, solution, associative, triality }
    }

    pub fn order(&self) -> usize {
        self.descriptor.order()
    }

    /// Number of points fixed by the involution.
    pub fn fixed_points(&self) -> usize {
        self.descriptor.s.fixed_points().len()
    }
}

/// Why a pair of representatives is not isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCertificate {
    pub left: usize,
    pub right: usize,
    pub certificate: NonIsoCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub title: String,
    pub entries: Vec<ClassEntry>,
    pub certificates: Vec<PairCertificate>,
    /// Sum of involution-class counts over the carrier loops; must equal the number of classes.
    pub nci_total: usize,
}

impl ClassificationReport {
    pub fn count(&self) -> usize {
        self.entries.len()
    }

    pub fn count_of_order(&self, n: usize) -> usize {
        self.entries.iter().filter(|e| e.order() == n).count()
    }

    pub fn orders(&self) -> Vec<usize> {
        let mut o: Vec<usize> = self.entries.iter().map(|e| e.order()).collect();
        o.dedup();
        o
    }

    /// Every pair of representatives carries a certificate.
    pub fn pairwise_distinct(&self) -> bool {
        let k = self.entries.len();
        self.certificates.len() == k * k.saturating_sub(1) / 2
    }
}

fn require_odd_prime(p: u64) -> Result<(), ClassifyError> {
    if p >= 3 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
        Ok(())
    } else {
        Err(ClassifyError::NotOddPrime(p))
    }
}

fn negation(l: &LoopData) -> Permutation {
    Permutation::from_fn(l.order(), |x| l.right_inverse(x)).expect("inversion is bijective")
}

fn verify_representative(e: &ClassEntry) -> Result<(), ClassifyError> {
    let fail = |law: String| Err(ClassifyError::RepresentativeFails { name: e.name.clone(), law });
    if let Some(v) = e.solution.is_solution_capped(1).first() {
        return fail(v.to_string());
    }
    if let Some(v) = e.solution.is_dihedral_capped(1).first() {
        return fail(v.to_string());
    }
    if !e.solution.nondegeneracy_flags().latin {
        return fail("latin".into());
    }
    Ok(())
}

/// Sorts entries, checks each one and certifies every pair as non-isomorphic, both through the
/// intertwiner search on descriptors and through the quasigroup search.
fn certify(title: &str, mut entries: Vec<ClassEntry>, nci_total: usize, opts: SearchOptions) -> Result<ClassificationReport, ClassifyError> {
    entries.sort_by(|a, b| {
        let key = |e: &ClassEntry| (e.order(), !e.associative, Reverse(e.fixed_points()));
        key(a).cmp(&key(b)).then_with(|| a.solution.circ().rows().cmp(&b.solution.circ().rows()))
    });
    for e in &entries {
        verify_representative(e)?;
    }
    let mut certificates = Vec::new();
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let (a, b) = (&entries[i], &entries[j]);
            let by_descriptor = descriptors_isomorphic(&a.descriptor, &b.descriptor, opts)?;
            let by_quasigroup = if a.order() == b.order() {
                lbds_quasigroup_isomorphic(&a.descriptor, &b.descriptor, opts)?.is_isomorphic()
            } else {
                false
            };
            match by_descriptor {
                IsoOutcome::Isomorphic(_) => {
                    return Err(ClassifyError::Duplicate { left: a.name.clone(), right: b.name.clone() });
                }
                IsoOutcome::NotIsomorphic(certificate) => {
                    if by_quasigroup {
                        return Err(ClassifyError::Inconsistent(format!(
                            "{} and {}: quasigroups isomorphic but no intertwining loop isomorphism",
                            a.name, b.name
                        )));
                    }
                    certificates.push(PairCertificate { left: i, right: j, certificate });
                }
            }
        }
    }
    if nci_total != entries.len() {
        return Err(ClassifyError::Inconsistent(format!(
            "{} representatives but involution classes add up to {nci_total}",
            entries.len()
        )));
    }
    Ok(ClassificationReport { title: title.to_string(), entries, certificates, nci_total })
}

fn nci(l: &LoopData, opts: SearchOptions) -> Result<usize, ClassifyError> {
    Ok(n_ci(l.table(), opts)?)
}

/// The two classes of order `p`: `(Z/p, +, 0, ±1)`.
pub fn classify_order_p(p: u64, opts: SearchOptions) -> Result<ClassificationReport, ClassifyError> {
    require_odd_prime(p)?;
    let z = cyclic_group(p as usize);
    let entries = vec![
        ClassEntry::new(format!("(Z/{p}, +1)"), LbdsDescriptor::from_loop(z.clone(), Permutation::identity(p as usize))?),
        ClassEntry::new(format!("(Z/{p}, -1)"), LbdsDescriptor::from_loop(z.clone(), negation(&z))?),
    ];
    certify(&format!("LBDS of order {p}"), entries, nci(&z, opts)?, opts)
}

/// The five classes of order `p²`.
pub fn classify_order_p2(p: u64, opts: SearchOptions) -> Result<ClassificationReport, ClassifyError> {
    require_odd_prime(p)?;
    let n = (p * p) as usize;
    let cyc = cyclic_group(n);
    let el = elementary_abelian(p as usize, 2)?;
    let mut entries = vec![
        ClassEntry::new(format!("(Z/{n}, +1)"), LbdsDescriptor::from_loop(cyc.clone(), Permutation::identity(n))?),
        ClassEntry::new(format!("(Z/{n}, -1)"), LbdsDescriptor::from_loop(cyc.clone(), negation(&cyc))?),
    ];
    for (name, signs) in [("+1", [1i8, 1]), ("-1", [-1, -1]), ("+1 (+) -1", [1, -1])] {
        let s = signed_diagonal(p as usize, &signs)?;
        entries.push(ClassEntry::new(format!("((Z/{p})^2, {name})"), LbdsDescriptor::from_loop(el.clone(), s)?));
    }
    let total = nci(&cyc, opts)? + nci(&el, opts)?;
    certify(&format!("LBDS of order {n}"), entries, total, opts)
}

/// The four involutions `[±1, ±1, λ_0]` of `B_{p,3}`, identity first.
pub fn bp3_involutions(p: u64) -> [(Ap3Element, &'static str); 4] {
    [
        (Ap3Element::new(p, 1, 1, 0), "[1,1,l0]"),
        (Ap3Element::new(p, -1, p - 1, 0), "[-1,-1,l0]"),
        (Ap3Element::new(p, 1, p - 1, 0), "[1,-1,l0]"),
        (Ap3Element::new(p, -1, 1, 0), "[-1,1,l0]"),
    ]
}

/// Classes of order `3p` for a prime `p > 3`: one per involutive automorphism of `Z/3p`
/// (multiplication by a unit squaring to 1, four of them) and four over `B_{p,3}`.
pub fn classify_order_3p(p: u64, opts: SearchOptions) -> Result<ClassificationReport, ClassifyError> {
    require_odd_prime(p)?;
    if p == 3 {
        return Err(ClassifyError::Construction(ConstructionError::BadParams("p must exceed 3".into())));
    }
    let n = 3 * p as usize;
    let cyc = cyclic_group(n);
    let b = build_bpq(p, 3)?;
    let cyclic_classes = involution_classes(cyc.table(), opts)?;
    let mut entries = Vec::new();
    for c in &cyclic_classes {
        let u = c.representative.apply(1);
        let name = match u {
            1 => "+1".to_string(),
            u if u == n - 1 => "-1".to_string(),
            u => format!("x{u}"),
        };
        entries.push(ClassEntry::new(format!("(Z/{n}, {name})"), LbdsDescriptor::from_loop(cyc.clone(), c.representative.clone())?));
    }
    let classes = involution_classes(b.table(), opts)?;
    let mut hit = vec![false; classes.len()];
    for (g, name) in bp3_involutions(p) {
        let s = g.as_permutation();
        let k = classes
            .iter()
            .position(|c| c.elements.binary_search(&s).is_ok())
            .ok_or_else(|| ClassifyError::Inconsistent(format!("{name} is not an involutive automorphism")))?;
        if std::mem::replace(&mut hit[k], true) {
            return Err(ClassifyError::Inconsistent(format!("{name} shares an involution class")));
        }
        entries.push(ClassEntry::new(format!("(B_{p},3, {name})"), LbdsDescriptor::new(b.clone(), s)?));
    }
    if hit.iter().any(|h| !h) {
        return Err(ClassifyError::Inconsistent("an involution class of B_{p,3} has no representative".into()));
    }
    let total = cyclic_classes.len() + classes.len();
    certify(&format!("LBDS of order {n}"), entries, total, opts)
}

/// LBTS of orders 3, 9, 27 and 81: signed diagonals over elementary abelian 3-groups, and the
/// four involutions of `L_3`.
pub fn classify_lbts_upto_81(opts: SearchOptions) -> Result<ClassificationReport, ClassifyError> {
    let mut entries = Vec::new();
    let mut total = 0;
    for k in 1..=4usize {
        total += nci(&elementary_abelian(3, k as u32)?, opts)?;
        for b in 0..=k {
            let name = format!("(Q_1)^{} x (Q_-1)^{}", k - b, b);
            entries.push(ClassEntry::new(name, elementary_lbts_descriptor(k - b, b)?));
        }
    }
    total += nci(&build_l3(), opts)?;
    for i in 1..=4 {
        entries.push(ClassEntry::new(format!("(L_3, S_{i})"), l3_descriptor(i)?));
    }
    let report = certify("LBTS of order at most 81", entries, total, opts)?;
    for e in &report.entries {
        if !e.triality {
            return Err(ClassifyError::RepresentativeFails { name: e.name.clone(), law: "triality".into() });
        }
        let q = lbds_from_descriptor(&e.descriptor).quasigroup;
        for law in [LawId::LeftF, LawId::SquareLeftInverse, LawId::RightSymmetric] {
            if let Some(v) = check_law_capped(&q, law, 1).map_err(|err| ClassifyError::Inconsistent(err.to_string()))?.first() {
                return Err(ClassifyError::RepresentativeFails { name: e.name.clone(), law: v.to_string() });
            }
        }
    }
    Ok(report)
}
