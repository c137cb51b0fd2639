//! Exhaustive enumeration of small solutions up to simultaneous relabelling.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::ClassifyError;
use crate::braided::BraidedSet;
use crate::tables::MulTable;

/// Largest order for the Latin scan.
pub const BRUTE_LATIN_MAX: usize = 5;
/// Largest order for the derived scan.
pub const BRUTE_DERIVED_MAX: usize = 4;

/// Properties every enumerated solution must have. Every result is a solution of the braid
/// relation; `triality` implies `dihedral`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Constraints {
    pub latin: bool,
    pub dihedral: bool,
    pub triality: bool,
    /// `x • y = x`.
    pub derived: bool,
}

impl Constraints {
    pub fn latin_dihedral() -> Self {
        Self { latin: true, dihedral: true, ..Self::default() }
    }

    pub fn latin_triality() -> Self {
        Self { latin: true, dihedral: true, triality: true, derived: false }
    }

    pub fn derived_dihedral() -> Self {
        Self { derived: true, dihedral: true, ..Self::default() }
    }
}

struct Pair {
    n: usize,
    c: Vec<u8>,
    b: Vec<u8>,
}

impl Pair {
    fn c(&self, x: usize, y: usize) -> usize {
        self.c[x * self.n + y] as usize
    }

    fn b(&self, x: usize, y: usize) -> usize {
        self.b[x * self.n + y] as usize
    }

    fn satisfies(&self, k: Constraints) -> bool {
        let n = self.n;
        let dihedral = k.dihedral || k.triality;
        for x in 0..n {
            for y in 0..n {
                let (xc, xb) = (self.c(x, y), self.b(x, y));
                if dihedral && (self.b(xb, xc) != x || self.c(xb, xc) != y) {
                    return false;
                }
                if k.triality && (self.c(xc, xb) != self.b(y, x) || self.b(xc, xb) != self.c(y, x)) {
                    return false;
                }
                for z in 0..n {
                    let (yc, yb) = (self.c(y, z), self.b(y, z));
                    let bz = self.c(xb, z);
                    if self.c(x, yc) != self.c(xc, bz)
                        || self.b(xc, bz) != self.c(self.b(x, yc), yb)
                        || self.b(xb, z) != self.b(self.b(x, yc), yb)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Lexicographically least `(∘, •)` image under all relabellings.
    fn canonical(&self, perms: &[Vec<u8>]) -> Vec<u8> {
        let n = self.n;
        let mut best: Option<Vec<u8>> = None;
        let mut buf = vec![0u8; 2 * n * n];
        for p in perms {
            for x in 0..n {
                for y in 0..n {
                    let (px, py) = (p[x] as usize, p[y] as usize);
                    buf[px * n + py] = p[self.c(x, y)];
                    buf[n * n + px * n + py] = p[self.b(x, y)];
                }
            }
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        best.expect("at least the identity")
    }
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn rec(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

/// Completes `square` (first row already filled) to every Latin square, row by row.
fn latin_completions(n: usize, square: &mut Vec<u8>, cell: usize, col_used: &mut [u32], row_used: &mut [u32], f: &mut dyn FnMut(&[u8])) {
    if cell == n * n {
        f(square);
        return;
    }
    let (r, c) = (cell / n, cell % n);
    for v in 0..n {
        let bit = 1u32 << v;
        if row_used[r] & bit != 0 || col_used[c] & bit != 0 {
            continue;
        }
        square[cell] = v as u8;
        row_used[r] |= bit;
        col_used[c] |= bit;
        latin_completions(n, square, cell + 1, col_used, row_used, f);
        row_used[r] &= !bit;
        col_used[c] &= !bit;
    }
}

/// `x • y` forced by `(x•y)∘(x∘y) = y` on a Latin `∘`.
fn dihedral_bullet(n: usize, c: &[u8]) -> Vec<u8> {
    let mut rdiv = vec![0u8; n * n];
    for z in 0..n {
        for w in 0..n {
            rdiv[c[z * n + w] as usize * n + w] = z as u8;
        }
    }
    let mut b = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            b[x * n + y] = rdiv[y * n + c[x * n + y] as usize];
        }
    }
    b
}

fn scan_latin(n: usize, k: Constraints, perms: &[Vec<u8>]) -> BTreeSet<Vec<u8>> {
    perms
        .par_iter()
        .map(|first| {
            let mut found = BTreeSet::new();
            let mut square = vec![0u8; n * n];
            square[..n].copy_from_slice(first);
            let mut col_used: Vec<u32> = first.iter().map(|&v| 1u32 << v).collect();
            let mut row_used = vec![0u32; n];
            row_used[0] = (1u32 << n) - 1;
            latin_completions(n, &mut square, n, &mut col_used, &mut row_used, &mut |sq| {
                let b = if k.derived {
                    (0..n * n).map(|i| (i / n) as u8).collect()
                } else {
                    dihedral_bullet(n, sq)
                };
                let pair = Pair { n, c: sq.to_vec(), b };
                if pair.satisfies(k) {
                    found.insert(pair.canonical(perms));
                }
            });
            found
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

fn scan_derived(n: usize, k: Constraints, perms: &[Vec<u8>]) -> BTreeSet<Vec<u8>> {
    let dihedral = k.dihedral || k.triality;
    let rows: Vec<&Vec<u8>> = perms
        .iter()
        .filter(|p| !dihedral || (0..n).all(|i| p[p[i] as usize] as usize == i))
        .collect();
    let bullet: Vec<u8> = (0..n * n).map(|i| (i / n) as u8).collect();
    rows.par_iter()
        .map(|first| {
            let mut found = BTreeSet::new();
            let mut idx = vec![0usize; n];
            loop {
                let mut c: Vec<u8> = Vec::with_capacity(n * n);
                c.extend_from_slice(first);
                for &i in &idx[1..] {
                    c.extend_from_slice(rows[i]);
                }
                let pair = Pair { n, c, b: bullet.clone() };
                let latin_ok = !k.latin || (0..n).all(|y| (0..n).map(|x| 1u32 << pair.c(x, y)).fold(0, |a, b| a | b) == (1 << n) - 1);
                if latin_ok && pair.satisfies(k) {
                    found.insert(pair.canonical(perms));
                }
                let mut pos = n - 1;
                loop {
                    if pos == 0 {
                        return found;
                    }
                    idx[pos] += 1;
                    if idx[pos] < rows.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos -= 1;
                }
            }
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// All solutions of order `n` meeting `k`, one per class under simultaneous relabelling of
/// both operations, sorted by canonical form.
pub fn brute_force_solutions(n: usize, k: Constraints) -> Result<Vec<BraidedSet>, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::InfeasibleSize { n, max: 0 });
    }
    let found = if k.derived {
        if n > BRUTE_DERIVED_MAX {
            return Err(ClassifyError::InfeasibleSize { n, max: BRUTE_DERIVED_MAX });
        }
        scan_derived(n, k, &permutations(n))
    } else if k.latin {
        if !(k.dihedral || k.triality) {
            return Err(ClassifyError::UnsupportedConstraints(
                "a Latin scan needs the dihedral condition to determine the second operation".into(),
            ));
        }
        if n > BRUTE_LATIN_MAX {
            return Err(ClassifyError::InfeasibleSize { n, max: BRUTE_LATIN_MAX });
        }
        scan_latin(n, k, &permutations(n))
    } else {
        return Err(ClassifyError::UnsupportedConstraints("choose latin or derived".into()));
    };
    Ok(found
        .into_iter()
        .map(|v| {
            let circ = MulTable::from_fn(n, |x, y| v[x * n + y] as usize).expect("in range");
            let bullet = MulTable::from_fn(n, |x, y| v[n * n + x * n + y] as usize).expect("in range");
            BraidedSet::new(circ, bullet).expect("same order")
        })
        .collect())
}

/// Canonical form of a braided set under simultaneous relabelling, for orders up to 8.
pub fn canonical_form(b: &BraidedSet) -> Vec<u8> {
    let n = b.order();
    assert!(n <= 8, "canonical forms are computed by full relabelling");
    let pair = Pair {
        n,
        c: b.circ().rows().concat().into_iter().map(|v| v as u8).collect(),
        b: b.bullet().rows().concat().into_iter().map(|v| v as u8).collect(),
    };
    pair.canonical(&permutations(n))
}
