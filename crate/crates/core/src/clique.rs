//! Maximum-clique search over the compatibility graph of `H_q(n,w)`.
//!
//! Vertices are the words of the space in canonical order; two words are
//! adjacent when their distance is at least `d`. A maximum clique is an
//! optimal code. The search is branch-and-bound with greedy colouring
//! bounds over bitsets, seeded by a greedy clique and cut off as soon as
//! the Johnson bound is reached.
//!
//! The automorphism group of `H_q(n,w)` (coordinate permutations composed
//! with per-coordinate permutations of the nonzero symbols) preserves
//! distance and acts transitively on words, so some maximum clique contains
//! the first word and the search fixes it.

use crate::bounds::johnson_bounds;
use crate::error::{Error, Result};
use crate::hamming::{distance_unchecked, ConstantWeightCode, Params, Word};

pub const DEFAULT_ORACLE_CAP: usize = 5000;

#[derive(Clone)]
struct Bitset {
    blocks: Vec<u64>,
}

impl Bitset {
    fn empty(n: usize) -> Self {
        Bitset {
            blocks: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn remove(&mut self, i: usize) {
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        self.blocks
            .iter()
            .enumerate()
            .find(|(_, &b)| b != 0)
            .map(|(i, &b)| i * 64 + b.trailing_zeros() as usize)
    }

    #[inline]
    fn intersect(&self, other: &Bitset) -> Bitset {
        Bitset {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    #[inline]
    fn intersect_with(&mut self, other: &Bitset) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }
}

/// Generic maximum-clique search on an explicit graph.
pub struct CliqueSearch {
    adj: Vec<Bitset>,
    ceiling: usize,
    best: Vec<usize>,
    nodes: u64,
}

impl CliqueSearch {
    /// `adjacent(i, j)` must be symmetric; `ceiling` is any valid upper bound
    /// on the clique number.
    pub fn new(n: usize, ceiling: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut adj = vec![Bitset::empty(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        CliqueSearch {
            adj,
            ceiling,
            best: Vec::new(),
            nodes: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn greedy_seed(&self, start: &[usize]) -> Vec<usize> {
        let n = self.adj.len();
        let mut clique: Vec<usize> = start.to_vec();
        let mut cand = Bitset::empty(n);
        for i in 0..n {
            cand.insert(i);
        }
        for &v in start {
            cand.intersect_with(&self.adj[v]);
        }
        while let Some(v) = cand.first() {
            clique.push(v);
            cand.intersect_with(&self.adj[v]);
        }
        clique
    }

    /// Maximum clique containing every vertex of `fixed` (which must itself
    /// be a clique).
    pub fn run(&mut self, fixed: &[usize]) -> Vec<usize> {
        let n = self.adj.len();
        self.best = self.greedy_seed(fixed);
        if self.best.len() >= self.ceiling {
            return self.best.clone();
        }
        let mut cand = Bitset::empty(n);
        for i in 0..n {
            cand.insert(i);
        }
        for &v in fixed {
            cand.remove(v);
            cand.intersect_with(&self.adj[v]);
        }
        let mut current = fixed.to_vec();
        self.expand(cand, &mut current);
        self.best.clone()
    }

    fn colour_order(&self, cand: &Bitset) -> Vec<(usize, usize)> {
        let mut order = Vec::new();
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                uncoloured.remove(v);
                q.remove(v);
                // Remove neighbours of v from this colour class.
                for (a, b) in q.blocks.iter_mut().zip(&self.adj[v].blocks) {
                    *a &= !b;
                }
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, mut cand: Bitset, current: &mut Vec<usize>) -> bool {
        self.nodes += 1;
        let order = self.colour_order(&cand);
        for &(v, colour) in order.iter().rev() {
            if current.len() + colour <= self.best.len() {
                return false;
            }
            current.push(v);
            let next = cand.intersect(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                    if self.best.len() >= self.ceiling {
                        current.pop();
                        return true;
                    }
                }
            } else if self.expand(next, current) {
                current.pop();
                return true;
            }
            current.pop();
            cand.remove(v);
        }
        false
    }
}

/// An optimal `(n,d,w)_q` code found by exhaustive search.
pub fn optimal_code(p: &Params, cap: usize) -> Result<ConstantWeightCode> {
    let space = p.space();
    let size = space.size();
    if size > cap as u128 {
        return Err(Error::TooLarge {
            count: size,
            cap: cap as u128,
        });
    }
    let words: Vec<Word> = space.enumerate(cap as u128)?.collect();
    let (ceiling, _) = johnson_bounds(p);
    let d = p.d;
    let mut search = CliqueSearch::new(words.len(), ceiling.max(1) as usize, |i, j| {
        distance_unchecked(&words[i], &words[j]) >= d
    });
    let clique = search.run(&[0]);
    let code = ConstantWeightCode::new(space, clique.iter().map(|&i| words[i].clone()).collect())?;
    if let Some((i, j, dist)) = code.distance_violation(d) {
        return Err(Error::invariant(format!(
            "oracle clique has words {} and {} at distance {dist}",
            code.words()[i],
            code.words()[j]
        )));
    }
    Ok(code)
}
