//! Words of the constant-weight Hamming space `H_q(n,w)`, codes and tilings.
//!
//! Symbols are `0..q`; the nonzero symbols `1..=g` (with `g = q - 1`) are the
//! ones that appear in the set representation `{(i, x_i) : x_i != 0}`.
//! Positions in the set representation are 1-based.
//!
//! The canonical order of `H_q(n,w)` lists supports in colexicographic
//! order and, within a support, symbol patterns in lexicographic order. The
//! rank of a word is its index in that order.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default refusal threshold for enumerating a space.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

/// Largest alphabet a [`Word`] can hold.
pub const MAX_ALPHABET: u32 = 256;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Reduce an integer into `[g] = {1..g}` modulo `g`.
#[inline]
pub fn reduce_mod(v: i64, g: u32) -> u8 {
    let g = g as i64;
    ((v - 1).rem_euclid(g) + 1) as u8
}

/// The space `H_q(n,w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Space {
    pub q: u32,
    pub n: usize,
    pub w: usize,
}

impl Space {
    pub fn new(q: u32, n: usize, w: usize) -> Result<Self> {
        if !(2..=MAX_ALPHABET).contains(&q) {
            return Err(Error::param(format!(
                "alphabet size q={q} must lie in 2..={MAX_ALPHABET}"
            )));
        }
        if n == 0 {
            return Err(Error::param("length n must be at least 1"));
        }
        if w == 0 || w > n {
            return Err(Error::param(format!(
                "weight w={w} must satisfy 1 <= w <= n={n}"
            )));
        }
        Ok(Space { q, n, w })
    }

    #[inline]
    pub fn g(&self) -> u32 {
        self.q - 1
    }

    /// `C(n,w) * (q-1)^w`.
    pub fn size(&self) -> u128 {
        binomial(self.n, self.w) * (self.g() as u128).pow(self.w as u32)
    }

    /// All words in canonical order, refusing spaces above `cap`.
    pub fn enumerate(&self, cap: u128) -> Result<SpaceIter> {
        let count = self.size();
        if count > cap {
            return Err(Error::TooLarge { count, cap });
        }
        Ok(SpaceIter::new(*self))
    }

    /// Index of `word` in the canonical enumeration.
    pub fn rank(&self, word: &Word) -> Result<u128> {
        self.check_member(word)?;
        let g = self.g() as u128;
        let mut support_rank = 0u128;
        let mut pattern = 0u128;
        let mut k = 0usize;
        for (pos, &s) in word.symbols.iter().enumerate() {
            if s != 0 {
                k += 1;
                support_rank += binomial(pos, k);
                pattern = pattern * g + (s as u128 - 1);
            }
        }
        Ok(support_rank * g.pow(self.w as u32) + pattern)
    }

    /// Inverse of [`Space::rank`].
    pub fn unrank(&self, rank: u128) -> Result<Word> {
        if rank >= self.size() {
            return Err(Error::param(format!("rank {rank} out of range for {self}")));
        }
        let g = self.g() as u128;
        let per_support = g.pow(self.w as u32);
        let mut support_rank = rank / per_support;
        let mut pattern = rank % per_support;
        // Colex unranking: pick the largest position first.
        let mut support = vec![0usize; self.w];
        let mut upper = self.n;
        for k in (1..=self.w).rev() {
            let mut c = k - 1;
            while c + 1 < upper && binomial(c + 1, k) <= support_rank {
                c += 1;
            }
            support[k - 1] = c;
            support_rank -= binomial(c, k);
            upper = c;
        }
        let mut symbols = vec![0u8; self.n];
        for &pos in support.iter().rev() {
            symbols[pos] = (pattern % g) as u8 + 1;
            pattern /= g;
        }
        Ok(Word {
            q: self.q as u16,
            symbols,
        })
    }

    pub fn check_member(&self, word: &Word) -> Result<()> {
        if word.len() != self.n || word.q() != self.q {
            return Err(Error::param(format!(
                "word of length {} over q={} is not in {}",
                word.len(),
                word.q(),
                self
            )));
        }
        if word.weight() != self.w {
            return Err(Error::param(format!(
                "word {} has weight {} but {} requires {}",
                word,
                word.weight(),
                self,
                self.w
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}({},{})", self.q, self.n, self.w)
    }
}

/// Parameters `(q, n, d, w)` of a constant-weight code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub q: u32,
    pub n: usize,
    pub d: usize,
    pub w: usize,
}

impl Params {
    pub fn new(q: u32, n: usize, d: usize, w: usize) -> Result<Self> {
        Space::new(q, n, w)?;
        if d < 2 || d > 2 * w {
            return Err(Error::param(format!(
                "distance d={d} must satisfy 2 <= d <= 2w={}",
                2 * w
            )));
        }
        Ok(Params { q, n, d, w })
    }

    pub fn space(&self) -> Space {
        Space {
            q: self.q,
            n: self.n,
            w: self.w,
        }
    }

    #[inline]
    pub fn g(&self) -> u32 {
        self.q - 1
    }

    /// `t = ceil((2w - d + 1) / 2)`.
    #[inline]
    pub fn t(&self) -> usize {
        (2 * self.w + 2 - self.d) / 2
    }

    pub fn odd_distance(&self) -> bool {
        self.d % 2 == 1
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={},d={},w={})_q={}", self.n, self.d, self.w, self.q)
    }
}

/// A word of `Z_q^n`, stored as its symbol vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    q: u16,
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(q: u32, symbols: Vec<u8>) -> Result<Self> {
        if !(2..=MAX_ALPHABET).contains(&q) {
            return Err(Error::param(format!("alphabet size q={q} out of range")));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s as u32 >= q) {
            return Err(Error::param(format!("symbol {bad} is not below q={q}")));
        }
        Ok(Word {
            q: q as u16,
            symbols,
        })
    }

    /// Build from the set representation `{(position, symbol)}` with 1-based
    /// positions and nonzero symbols.
    pub fn from_set(n: usize, q: u32, set: &[(usize, u8)]) -> Result<Self> {
        let mut symbols = vec![0u8; n];
        for &(pos, sym) in set {
            if pos == 0 || pos > n {
                return Err(Error::param(format!("position {pos} outside [1,{n}]")));
            }
            if sym == 0 || sym as u32 >= q {
                return Err(Error::param(format!("symbol {sym} outside [1,{}]", q - 1)));
            }
            if symbols[pos - 1] != 0 {
                return Err(Error::param(format!("position {pos} listed twice")));
            }
            symbols[pos - 1] = sym;
        }
        Word::new(q, symbols)
    }

    #[inline]
    pub(crate) fn from_raw(q: u32, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as u32) < q));
        Word {
            q: q as u16,
            symbols,
        }
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q as u32
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    #[inline]
    pub fn symbol(&self, pos: usize) -> u8 {
        self.symbols[pos]
    }

    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    /// 0-based positions of the nonzero symbols, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Set representation with 1-based positions.
    pub fn to_set(&self) -> Vec<(usize, u8)> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(i, &s)| (i + 1, s))
            .collect()
    }

    pub fn to_json(&self) -> WordJson {
        WordJson {
            n: self.len(),
            q: self.q(),
            set: self
                .to_set()
                .into_iter()
                .map(|(p, s)| [p, s as usize])
                .collect(),
        }
    }

    /// Compact `pos.sym` rendering, e.g. `1.1 2.1 3.1`.
    pub fn paper_style(&self) -> String {
        self.to_set()
            .iter()
            .map(|(p, s)| format!("{p}.{s}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 && self.q > 10 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Canonical JSON encoding of a word: `{"n":4,"q":3,"set":[[1,1],[2,1],[3,1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub n: usize,
    pub q: u32,
    pub set: Vec<[usize; 2]>,
}

impl WordJson {
    pub fn to_word(&self) -> Result<Word> {
        let mut set = Vec::with_capacity(self.set.len());
        for &[p, s] in &self.set {
            if s > u8::MAX as usize {
                return Err(Error::param(format!("symbol {s} too large")));
            }
            set.push((p, s as u8));
        }
        Word::from_set(self.n, self.q, &set)
    }
}

/// Number of coordinates where `x` and `y` differ.
pub fn hamming_distance(x: &Word, y: &Word) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::param(format!(
            "length mismatch: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.q != y.q {
        return Err(Error::param(format!(
            "alphabet mismatch: q={} vs q={}",
            x.q, y.q
        )));
    }
    Ok(distance_unchecked(x, y))
}

#[inline]
pub(crate) fn distance_unchecked(x: &Word, y: &Word) -> usize {
    x.symbols
        .iter()
        .zip(&y.symbols)
        .filter(|(a, b)| a != b)
        .count()
}

/// Canonical-order iterator over `H_q(n,w)`.
pub struct SpaceIter {
    space: Space,
    support: Vec<usize>,
    pattern: Vec<u8>,
    done: bool,
}

impl SpaceIter {
    fn new(space: Space) -> Self {
        SpaceIter {
            space,
            support: (0..space.w).collect(),
            pattern: vec![1; space.w],
            done: false,
        }
    }

    fn advance(&mut self) {
        let g = self.space.g() as u8;
        // Next pattern, last coordinate fastest.
        for i in (0..self.pattern.len()).rev() {
            if self.pattern[i] < g {
                self.pattern[i] += 1;
                return;
            }
            self.pattern[i] = 1;
        }
        // Next support in colex order.
        let w = self.support.len();
        for i in 0..w {
            let limit = if i + 1 < w {
                self.support[i + 1]
            } else {
                self.space.n
            };
            if self.support[i] + 1 < limit {
                self.support[i] += 1;
                for (j, slot) in self.support.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SpaceIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let mut symbols = vec![0u8; self.space.n];
        for (&pos, &s) in self.support.iter().zip(&self.pattern) {
            symbols[pos] = s;
        }
        self.advance();
        Some(Word::from_raw(self.space.q, symbols))
    }
}

/// Result of [`ConstantWeightCode::min_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinDistance {
    pub value: usize,
    /// Set when the code has fewer than two words; `value` is then `2w`.
    pub vacuous: bool,
}

/// A set of distinct words of one space `H_q(n,w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantWeightCode {
    space: Space,
    words: Vec<Word>,
}

impl ConstantWeightCode {
    pub fn new(space: Space, words: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            space.check_member(w)?;
            if !seen.insert(w) {
                return Err(Error::param(format!("duplicate word {w} in code")));
            }
        }
        Ok(ConstantWeightCode { space, words })
    }

    /// Skips membership checks; used by constructions whose output is
    /// certified by [`crate::verify`] afterwards.
    pub(crate) fn from_parts(space: Space, words: Vec<Word>) -> Self {
        ConstantWeightCode { space, words }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn min_distance(&self) -> MinDistance {
        if self.words.len() < 2 {
            return MinDistance {
                value: 2 * self.space.w,
                vacuous: true,
            };
        }
        let mut best = usize::MAX;
        for (i, x) in self.words.iter().enumerate() {
            for y in &self.words[i + 1..] {
                best = best.min(distance_unchecked(x, y));
            }
        }
        MinDistance {
            value: best,
            vacuous: false,
        }
    }

    /// First pair (by index) at distance below `d`, if any.
    pub fn distance_violation(&self, d: usize) -> Option<(usize, usize, usize)> {
        for (i, x) in self.words.iter().enumerate() {
            for (j, y) in self.words.iter().enumerate().skip(i + 1) {
                let dist = distance_unchecked(x, y);
                if dist < d {
                    return Some((i, j, dist));
                }
            }
        }
        None
    }
}

/// Minimum distance of a code.
pub fn min_distance(code: &ConstantWeightCode) -> MinDistance {
    code.min_distance()
}

/// An ordered collection of codes claimed to partition `H_q(n,w)`.
///
/// Nothing here checks the partition property; see [`crate::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub params: Params,
    pub tiles: Vec<ConstantWeightCode>,
    pub provenance: String,
}

impl Tiling {
    pub fn new(
        params: Params,
        tiles: Vec<ConstantWeightCode>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let space = params.space();
        if let Some(bad) = tiles.iter().find(|t| t.space() != space) {
            return Err(Error::param(format!(
                "tile over {} in a tiling of {}",
                bad.space(),
                space
            )));
        }
        Ok(Tiling {
            params,
            tiles,
            provenance: provenance.into(),
        })
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    pub fn word_count(&self) -> usize {
        self.tiles.iter().map(|t| t.len()).sum()
    }

    /// Distinct tile sizes, ascending.
    pub fn tile_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.tiles.iter().map(|t| t.len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(q: u32, v: &[u8]) -> Word {
        Word::new(q, v.to_vec()).unwrap()
    }

    #[test]
    fn distance_examples() {
        let x = w(2, &[1, 1, 1, 0, 0]);
        let y = w(2, &[0, 0, 1, 1, 1]);
        assert_eq!(hamming_distance(&x, &y).unwrap(), 4);
        assert_eq!(hamming_distance(&x, &x).unwrap(), 0);
        let from_set = Word::from_set(5, 2, &[(1, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(hamming_distance(&from_set, &x).unwrap(), 0);
    }

    #[test]
    fn distance_mismatch_errors() {
        let x = w(3, &[1, 1, 0]);
        assert!(hamming_distance(&x, &w(3, &[1, 1, 0, 0])).is_err());
        assert!(hamming_distance(&x, &w(4, &[1, 1, 0])).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |q, n, k| {
            Space::new(q, n, k)
                .unwrap()
                .enumerate(DEFAULT_ENUMERATION_CAP)
                .unwrap()
                .count()
        };
        assert_eq!(count(3, 4, 3), 32);
        assert_eq!(count(2, 5, 5), 1);
        assert_eq!(count(4, 6, 3), 540);
    }

    #[test]
    fn enumeration_refuses_above_cap() {
        let s = Space::new(3, 4, 3).unwrap();
        match s.enumerate(31) {
            Err(Error::TooLarge { count, cap }) => assert_eq!((count, cap), (32, 31)),
            other => panic!("expected refusal, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn weight_above_length_rejected() {
        assert!(Space::new(3, 3, 4).is_err());
    }

    #[test]
    fn canonical_order_starts_colex() {
        let s = Space::new(3, 4, 2).unwrap();
        let first: Vec<String> = s
            .enumerate(100)
            .unwrap()
            .take(6)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(
            first,
            ["(1100)", "(1200)", "(2100)", "(2200)", "(1010)", "(1020)"]
        );
    }

    #[test]
    fn params_t() {
        assert_eq!(Params::new(3, 9, 5, 3).unwrap().t(), 1);
        assert_eq!(Params::new(3, 4, 3, 3).unwrap().t(), 2);
        assert_eq!(Params::new(3, 4, 4, 3).unwrap().t(), 2);
        assert_eq!(Params::new(2, 6, 6, 3).unwrap().t(), 1);
        assert_eq!(Params::new(2, 6, 2, 3).unwrap().t(), 3);
        assert!(Params::new(2, 6, 7, 3).is_err());
        assert!(Params::new(2, 6, 1, 3).is_err());
    }

    #[test]
    fn reduce_mod_into_one_based() {
        assert_eq!(reduce_mod(3, 3), 3);
        assert_eq!(reduce_mod(4, 3), 1);
        assert_eq!(reduce_mod(0, 3), 3);
        assert_eq!(reduce_mod(-1, 3), 2);
    }

    #[test]
    fn min_distance_vacuous_for_singletons() {
        let s = Space::new(3, 4, 3).unwrap();
        let c = ConstantWeightCode::new(s, vec![w(3, &[1, 1, 1, 0])]).unwrap();
        assert_eq!(
            c.min_distance(),
            MinDistance {
                value: 6,
                vacuous: true
            }
        );
    }

    #[test]
    fn repeated_support_one_symbol_change_is_close() {
        let s = Space::new(3, 4, 3).unwrap();
        let c = ConstantWeightCode::new(s, vec![w(3, &[1, 2, 1, 0]), w(3, &[1, 1, 1, 0])]).unwrap();
        assert!(c.min_distance().value <= 2);
    }

    #[test]
    fn code_rejects_duplicates_and_wrong_weight() {
        let s = Space::new(3, 4, 3).unwrap();
        assert!(
            ConstantWeightCode::new(s, vec![w(3, &[1, 1, 1, 0]), w(3, &[1, 1, 1, 0])]).is_err()
        );
        assert!(ConstantWeightCode::new(s, vec![w(3, &[1, 1, 0, 0])]).is_err());
    }

    #[test]
    fn json_encoding() {
        let x = Word::from_set(4, 3, &[(1, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(
            serde_json::to_string(&x.to_json()).unwrap(),
            r#"{"n":4,"q":3,"set":[[1,1],[2,1],[3,1]]}"#
        );
    }
}
