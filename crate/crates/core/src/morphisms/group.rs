//! Automorphism groups as stabilizer chains, conjugacy classes and involution counting.

use std::collections::{HashMap, HashSet, VecDeque};

use super::search::{joint_classes, Algebra, Engine, Flow, SearchError, SearchOptions};
use crate::perm::Permutation;
use crate::tables::{closure, MulTable};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Level {
    point: usize,
    /// `transversal[y]` maps the base point to `y`, for every `y` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// A permutation group given by a base and strong generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    n: usize,
    levels: Vec<Level>,
    generators: Vec<Permutation>,
    /// Search nodes spent building the group.
    pub nodes: u64,
}

fn orbit_with_transversal(n: usize, point: usize, gens: &[&Permutation]) -> (Vec<usize>, Vec<Option<Permutation>>) {
    let mut transversal: Vec<Option<Permutation>> = vec![None; n];
    transversal[point] = Some(Permutation::identity(n));
    let mut orbit = vec![point];
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if transversal[y].is_none() {
                transversal[y] = Some(g.compose(transversal[x].as_ref().expect("in orbit")));
                orbit.push(y);
                queue.push_back(y);
            }
        }
    }
    orbit.sort_unstable();
    (orbit, transversal)
}

fn plain_orbit(n: usize, point: usize, gens: &[&Permutation]) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut out = vec![point];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Points whose images determine an automorphism.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.n {
            return false;
        }
        let mut h = g.clone();
        for l in &self.levels {
            let y = h.apply(l.point);
            match &l.transversal[y] {
                Some(u) => h = u.inverse().compose(&h),
                None => return false,
            }
        }
        h.is_identity()
    }

    /// All elements in lexicographic order of image tuples, refusing groups larger than `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>, SearchError> {
        let order = self.order();
        if order > cap as u128 {
            return Err(SearchError::TooLarge { order, cap });
        }
        let mut out = vec![Permutation::identity(self.n)];
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * l.orbit.len());
            for &y in &l.orbit {
                let u = l.transversal[y].as_ref().expect("orbit point");
                for g in &out {
                    next.push(u.compose(g));
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }
}

/// Chooses base points greedily: the rarest element class not yet in the generated closure.
fn choose_base(alg_tables: &[MulTable], unary: &[Vec<usize>], classes: &[u32], n: usize) -> Vec<usize> {
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for &c in classes {
        *class_size.entry(c).or_default() += 1;
    }
    let mut base = Vec::new();
    let mut covered = vec![false; n];
    let close = |seed: &[usize]| -> Vec<usize> {
        let mut set: Vec<usize> = seed.to_vec();
        loop {
            let mut grown = set.clone();
            for m in alg_tables {
                grown = closure(m, grown);
            }
            for u in unary {
                let extra: Vec<usize> = grown.iter().map(|&x| u[x]).collect();
                grown.extend(extra);
            }
            grown.sort_unstable();
            grown.dedup();
            if grown == set {
                return set;
            }
            set = grown;
        }
    };
    for x in close(&[]) {
        covered[x] = true;
    }
    while let Some(x) = (0..n).filter(|&x| !covered[x]).min_by_key(|&x| (class_size[&classes[x]], x)) {
        base.push(x);
        for y in close(&base) {
            covered[y] = true;
        }
    }
    base
}

/// The automorphism group of an algebra as a stabilizer chain.
pub fn automorphism_group_of(alg: &Algebra, opts: SearchOptions) -> Result<AutGroup, SearchError> {
    let n = alg.order();
    let (classes, _) = joint_classes(alg, alg, opts.use_invariants);
    let (tables, unary) = alg.parts();
    let base = choose_base(tables, unary, &classes, n);
    let mut gens: Vec<(usize, Permutation)> = Vec::new();
    let mut levels: Vec<Level> = Vec::with_capacity(base.len());
    let mut nodes = 0u64;
    for i in (0..base.len()).rev() {
        let point = base[i];
        let gens_at = |gens: &[(usize, Permutation)], lvl: usize| -> Vec<Permutation> {
            gens.iter().filter(|(l, _)| *l >= lvl).map(|(_, g)| g.clone()).collect()
        };
        let lower = gens_at(&gens, i + 1);
        let lower_refs: Vec<&Permutation> = lower.iter().collect();
        let mut current = gens_at(&gens, i);
        let (mut orbit, mut transversal) = orbit_with_transversal(n, point, &current.iter().collect::<Vec<_>>());
        let mut rejected = vec![false; n];
        for y in 0..n {
            if classes[y] != classes[point] || transversal[y].is_some() || rejected[y] {
                continue;
            }
            let mut engine = Engine::with_classes(alg, alg, classes.clone(), classes.clone(), opts.budget.saturating_sub(nodes));
            let mut ok = base[..i].iter().all(|&b| engine.assign(b, b));
            ok = ok && engine.assign(point, y);
            let found = if ok { engine.find_first() } else { Ok(None) };
            nodes += engine.nodes;
            match found {
                Err(SearchError::BudgetExceeded { .. }) => return Err(SearchError::BudgetExceeded { budget: opts.budget }),
                Err(e) => return Err(e),
                Ok(Some(g)) => {
                    gens.push((i, g.clone()));
                    current.push(g);
                    (orbit, transversal) = orbit_with_transversal(n, point, &current.iter().collect::<Vec<_>>());
                }
                Ok(None) => {
                    for z in plain_orbit(n, y, &lower_refs) {
                        rejected[z] = true;
                    }
                }
            }
        }
        levels.push(Level { point, transversal, orbit });
    }
    levels.reverse();
    Ok(AutGroup { n, levels, generators: gens.into_iter().map(|(_, g)| g).collect(), nodes })
}

/// Automorphisms of a table. Loops need no identity hint: automorphisms fix the only idempotent.
pub fn automorphism_group(m: &MulTable, opts: SearchOptions) -> Result<AutGroup, SearchError> {
    automorphism_group_of(&Algebra::from_table(m), opts)
}

/// A conjugacy class with its lexicographically least representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub order: u128,
    pub elements: Vec<Permutation>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Orbits of `set` under conjugation by `gens`. `set` must be closed under that action.
fn conjugation_orbits(set: Vec<Permutation>, gens: &[Permutation]) -> Vec<ConjugacyClass> {
    let index: HashMap<Permutation, usize> = set.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; set.len()];
    let mut classes = Vec::new();
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let x = &set[members[i]];
            for g in gens {
                let y = x.conjugate_by(g);
                let j = *index.get(&y).expect("set is closed under conjugation");
                if !seen[j] {
                    seen[j] = true;
                    members.push(j);
                }
            }
            i += 1;
        }
        let mut elements: Vec<Permutation> = members.into_iter().map(|j| set[j].clone()).collect();
        elements.sort();
        let representative = elements[0].clone();
        classes.push(ConjugacyClass { order: representative.order(), representative, elements });
    }
    classes.sort_by(|a, b| (a.order, a.size(), &a.representative).cmp(&(b.order, b.size(), &b.representative)));
    classes
}

/// Conjugacy classes of the whole group, sorted by (element order, size, representative).
pub fn conjugacy_classes(g: &AutGroup, cap: usize) -> Result<Vec<ConjugacyClass>, SearchError> {
    Ok(conjugation_orbits(g.elements(cap)?, &g.generators))
}

/// Every automorphism `φ` with `φ² = id`, identity included, in search order.
pub fn involutive_automorphisms(alg: &Algebra, opts: SearchOptions) -> Result<Vec<Permutation>, SearchError> {
    let mut engine = Engine::new(alg, alg, opts)?.involutive();
    let mut out = Vec::new();
    engine.enumerate(&mut |p| {
        out.push(p);
        Flow::Continue
    })?;
    Ok(out)
}

/// Conjugacy classes of automorphisms of order dividing 2, identity class included.
pub fn involution_classes_of(alg: &Algebra, opts: SearchOptions) -> Result<Vec<ConjugacyClass>, SearchError> {
    let aut = automorphism_group_of(alg, opts)?;
    let invs = involutive_automorphisms(alg, opts)?;
    debug_assert_eq!(invs.iter().collect::<HashSet<_>>().len(), invs.len());
    Ok(conjugation_orbits(invs, aut.generators()))
}

pub fn involution_classes(m: &MulTable, opts: SearchOptions) -> Result<Vec<ConjugacyClass>, SearchError> {
    involution_classes_of(&Algebra::from_table(m), opts)
}

/// Number of conjugacy classes of automorphisms `S` with `S² = id`, identity included.
pub fn n_ci(m: &MulTable, opts: SearchOptions) -> Result<usize, SearchError> {
    Ok(involution_classes(m, opts)?.len())
}
