//! Monomial bookkeeping for exterior algebras on at most 16 generators.
//!
//! A monomial `e^{i_1} ^ ... ^ e^{i_k}` with `i_1 < ... < i_k` is stored as the
//! bitmask with bits `i_1, ..., i_k` set.

use std::sync::OnceLock;

use itertools::Itertools;

pub const MAX_GENERATORS: usize = 16;

/// Lexicographic bases of every `Lambda^k` for a fixed number of generators.
#[derive(Debug)]
pub struct Basis {
    ngens: usize,
    by_degree: Vec<Vec<u32>>,
    index: Vec<u32>,
}

static BASES: [OnceLock<Basis>; MAX_GENERATORS + 1] =
    [const { OnceLock::new() }; MAX_GENERATORS + 1];

/// Shared basis tables for `ngens` generators.
pub fn basis(ngens: usize) -> &'static Basis {
    assert!(
        ngens <= MAX_GENERATORS,
        "at most {MAX_GENERATORS} generators supported"
    );
    BASES[ngens].get_or_init(|| Basis::new(ngens))
}

impl Basis {
    fn new(ngens: usize) -> Self {
        let mut by_degree = Vec::with_capacity(ngens + 1);
        let mut index = vec![0u32; 1 << ngens];
        for k in 0..=ngens {
            let masks: Vec<u32> = (0..ngens)
                .combinations(k)
                .map(|c| c.iter().fold(0u32, |m, &i| m | (1 << i)))
                .collect();
            for (i, &m) in masks.iter().enumerate() {
                index[m as usize] = i as u32;
            }
            by_degree.push(masks);
        }
        Basis {
            ngens,
            by_degree,
            index,
        }
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Monomials of degree `k` in lexicographic order of index sets.
    pub fn degree(&self, k: usize) -> &[u32] {
        &self.by_degree[k]
    }

    /// Position of `mask` within its degree.
    pub fn index_of(&self, mask: u32) -> usize {
        self.index[mask as usize] as usize
    }

    /// Monomials of bidegree `(p, q)` when the first `n` generators are of
    /// type (1,0) and the last `n` of type (0,1). Lexicographic on
    /// (holomorphic set, antiholomorphic set).
    pub fn bidegree(&self, n: usize, p: usize, q: usize) -> Vec<u32> {
        if p > n || q > n {
            return Vec::new();
        }
        self.by_degree[p + q]
            .iter()
            .copied()
            .filter(|&m| bidegree(m, n) == (p, q))
            .collect()
    }
}

pub fn degree(mask: u32) -> usize {
    mask.count_ones() as usize
}

pub fn bidegree(mask: u32, n: usize) -> (usize, usize) {
    let low = (1u32 << n) - 1;
    (
        (mask & low).count_ones() as usize,
        (mask >> n).count_ones() as usize,
    )
}

/// Sign of `e^a ^ e^b = sign * e^{a|b}`, or 0 if the monomials overlap.
pub fn wedge_sign(a: u32, b: u32) -> i32 {
    if a & b != 0 {
        return 0;
    }
    // Count pairs (i in a, j in b) with i > j.
    let mut inversions = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (a >> j).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Indices of the set bits, ascending.
pub fn indices(mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(degree(mask));
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}
