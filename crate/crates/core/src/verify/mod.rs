//! Independent certification of tilings, codes and designs.
//!
//! Nothing here reuses construction code: coverage is counted by fresh
//! traversals and the partition check runs over canonical word ranks.

pub mod coloring;
pub mod mutation;

pub use coloring::{verify_edge_coloring, verify_strong_coloring};

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds;
use crate::designs::{BlockDesign, DesignKind, LargeSet, Resolution};
use crate::hamming::{distance_unchecked, Params, Tiling, Word, DEFAULT_ENUMERATION_CAP};

/// Failures kept per verdict; the rest are only counted.
const MAX_FAILURES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    DuplicateWord,
    MissingWord,
    DistanceViolation,
    SizeViolation,
    CountViolation,
    GroupViolation,
    CoverageViolation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    /// Set when part of the check was done on a sample only.
    pub sampled: bool,
    pub failures: Vec<Failure>,
    /// Failures found beyond the recorded ones.
    pub omitted: usize,
    /// Human-readable list of the checks performed.
    pub checks: Vec<String>,
}

impl Default for Verdict {
    fn default() -> Self {
        Verdict {
            ok: true,
            sampled: false,
            failures: Vec::new(),
            omitted: 0,
            checks: Vec::new(),
        }
    }
}

impl Verdict {
    fn fail(&mut self, kind: FailureKind, witness: Value) {
        self.ok = false;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(Failure { kind, witness });
        } else {
            self.omitted += 1;
        }
    }

    fn absorb(&mut self, other: Verdict, context: Value) {
        self.sampled |= other.sampled;
        for f in other.failures {
            let mut witness = f.witness;
            witness["context"] = context.clone();
            self.fail(f.kind, witness);
        }
        self.omitted += other.omitted;
        if !other.ok {
            self.ok = false;
        }
    }

    pub fn has(&self, kind: FailureKind) -> bool {
        self.failures.iter().any(|f| f.kind == kind)
    }

    pub fn summary(&self) -> String {
        if self.ok {
            return "ok".into();
        }
        let mut counts: Vec<(FailureKind, usize)> = Vec::new();
        for f in &self.failures {
            match counts.iter_mut().find(|(k, _)| *k == f.kind) {
                Some((_, c)) => *c += 1,
                None => counts.push((f.kind, 1)),
            }
        }
        let parts: Vec<String> = counts.iter().map(|(k, c)| format!("{c}x {k:?}")).collect();
        let first = self
            .failures
            .first()
            .map(|f| f.witness.to_string())
            .unwrap_or_default();
        format!("{}; first witness {}", parts.join(", "), first)
    }
}

/// Where the optimal tile size comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedSize {
    /// The exact value from the bounds module, or the upper bound when no
    /// exact value is known (a tile meeting it is optimal).
    Formula,
    /// Exhaustive clique search, falling back to `Formula` above its cap.
    Oracle,
    Given(u128),
}

fn word_json(w: &Word) -> Value {
    serde_json::to_value(w.to_json()).expect("word json")
}

/// Full certification of a tiling: partition, distance, optimality and
/// tile count.
pub fn verify_tiling(t: &Tiling, source: ExpectedSize) -> Verdict {
    verify_tiling_with_cap(t, source, DEFAULT_ENUMERATION_CAP)
}

pub fn verify_tiling_with_cap(t: &Tiling, source: ExpectedSize, cap: u128) -> Verdict {
    let p = t.params;
    let space = p.space();
    let mut v = Verdict::default();

    // Membership.
    let mut members: Vec<(usize, usize, u128)> = Vec::with_capacity(t.word_count());
    for (ti, tile) in t.tiles.iter().enumerate() {
        for (wi, w) in tile.words().iter().enumerate() {
            match space.rank(w) {
                Ok(r) => members.push((ti, wi, r)),
                Err(e) => v.fail(
                    FailureKind::CoverageViolation,
                    json!({"tile": ti, "index": wi, "word": w.to_string(), "reason": e.to_string()}),
                ),
            }
        }
    }

    // Partition.
    let size = space.size();
    if size <= cap {
        v.checks.push(format!(
            "partition: bitmap over all {size} ranks of {space}"
        ));
        let mut seen = vec![0u64; (size as usize).div_ceil(64)];
        let mut first_tile: HashMap<u128, usize> = HashMap::new();
        let mut dups: Vec<(usize, usize, u128)> = Vec::new();
        for &(ti, wi, r) in &members {
            let (b, m) = ((r / 64) as usize, 1u64 << (r % 64));
            if seen[b] & m != 0 {
                dups.push((ti, wi, r));
            } else {
                seen[b] |= m;
            }
        }
        if !dups.is_empty() {
            let wanted: std::collections::HashSet<u128> = dups.iter().map(|d| d.2).collect();
            for &(ti, _, r) in &members {
                if wanted.contains(&r) {
                    first_tile.entry(r).or_insert(ti);
                }
            }
            for (ti, wi, r) in dups {
                let w = &t.tiles[ti].words()[wi];
                v.fail(
                    FailureKind::DuplicateWord,
                    json!({"word": word_json(w), "tiles": [first_tile[&r], ti]}),
                );
            }
        }
        for (b, &bits) in seen.iter().enumerate() {
            let mut missing = !bits;
            while missing != 0 {
                let r = (b * 64) as u128 + missing.trailing_zeros() as u128;
                missing &= missing - 1;
                if r >= size {
                    break;
                }
                if v.failures.len() >= MAX_FAILURES {
                    v.ok = false;
                    v.omitted += 1;
                    continue;
                }
                let w = space.unrank(r).expect("rank in range");
                v.fail(FailureKind::MissingWord, json!({"word": word_json(&w)}));
            }
        }
    } else {
        // The space is too large for a bitmap; sort the ranks present
        // instead, which still decides the partition exactly.
        v.checks.push(format!(
            "partition: sorted ranks ({size} words exceeds the bitmap cap {cap})"
        ));
        let mut ranks: Vec<(u128, usize)> = members.iter().map(|&(ti, _, r)| (r, ti)).collect();
        ranks.sort_unstable();
        for pair in ranks.windows(2) {
            if pair[0].0 == pair[1].0 {
                let w = space.unrank(pair[0].0).expect("rank in range");
                v.fail(
                    FailureKind::DuplicateWord,
                    json!({"word": word_json(&w), "tiles": [pair[0].1, pair[1].1]}),
                );
            }
        }
        let distinct = {
            let mut d = ranks.iter().map(|r| r.0).collect::<Vec<_>>();
            d.dedup();
            d.len() as u128
        };
        if distinct != size {
            v.fail(
                FailureKind::MissingWord,
                json!({"present": distinct, "space": size}),
            );
        }
    }

    // Distance.
    v.checks.push(format!(
        "distance: every pair within each tile is at least {}",
        p.d
    ));
    let violations: Vec<(usize, usize, usize, usize)> = t
        .tiles
        .par_iter()
        .enumerate()
        .filter_map(|(ti, tile)| {
            let words = tile.words();
            for i in 0..words.len() {
                for j in i + 1..words.len() {
                    if words[i].len() == words[j].len() {
                        let d = distance_unchecked(&words[i], &words[j]);
                        if d < p.d {
                            return Some((ti, i, j, d));
                        }
                    }
                }
            }
            None
        })
        .collect();
    for (ti, i, j, d) in violations {
        let words = t.tiles[ti].words();
        v.fail(
            FailureKind::DistanceViolation,
            json!({"tile": ti, "words": [word_json(&words[i]), word_json(&words[j])], "distance": d, "required": p.d}),
        );
    }

    // Optimality.
    let (expected, how) = expected_tile_size(&p, source);
    v.checks.push(format!(
        "optimality: every tile has {expected} words ({how})"
    ));
    for (ti, tile) in t.tiles.iter().enumerate() {
        if tile.len() as u128 != expected {
            v.fail(
                FailureKind::SizeViolation,
                json!({"tile": ti, "size": tile.len(), "expected": expected, "source": how}),
            );
        }
    }

    // Tile count.
    let count = bounds::expected_tile_count(&p)
        .or_else(|| (expected > 0 && size.is_multiple_of(expected)).then(|| size / expected));
    if let Some(c) = count {
        v.checks.push(format!("count: {c} tiles"));
        if t.tiles.len() as u128 != c {
            v.fail(
                FailureKind::CountViolation,
                json!({"tiles": t.tiles.len(), "expected": c}),
            );
        }
    }
    v
}

fn expected_tile_size(p: &Params, source: ExpectedSize) -> (u128, String) {
    match source {
        ExpectedSize::Given(n) => (n, "given".into()),
        ExpectedSize::Oracle => match bounds::clique_oracle(p, crate::clique::DEFAULT_ORACLE_CAP) {
            Ok(a) => (a, "clique oracle".into()),
            Err(_) => expected_tile_size(p, ExpectedSize::Formula),
        },
        ExpectedSize::Formula => {
            let r = bounds::exact_value(p);
            match r.exact {
                Some(e) => (e, format!("exact value via {:?}", r.source)),
                None => (r.upper, format!("upper bound via {:?}", r.source)),
            }
        }
    }
}

/// Distance and size check for a single code.
pub fn verify_code(
    code: &crate::hamming::ConstantWeightCode,
    d: usize,
    expected: Option<u128>,
) -> Verdict {
    let mut v = Verdict::default();
    v.checks.push(format!("distance: every pair at least {d}"));
    let words = code.words();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if words[i] == words[j] {
                v.fail(
                    FailureKind::DuplicateWord,
                    json!({"word": word_json(&words[i]), "indices": [i, j]}),
                );
                continue;
            }
            let dist = distance_unchecked(&words[i], &words[j]);
            if dist < d {
                v.fail(
                    FailureKind::DistanceViolation,
                    json!({"words": [word_json(&words[i]), word_json(&words[j])], "distance": dist, "required": d}),
                );
            }
        }
    }
    if let Some(e) = expected {
        v.checks.push(format!("size: {e} words"));
        if words.len() as u128 != e {
            v.fail(
                FailureKind::SizeViolation,
                json!({"size": words.len(), "expected": e}),
            );
        }
    }
    v
}

/// Visits every `k`-subset of `items` in lexicographic order.
fn for_each_subset(items: &[usize], k: usize, mut f: impl FnMut(&[usize])) {
    let n = items.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut cur = vec![0; k];
    loop {
        for (c, &i) in cur.iter_mut().zip(&idx) {
            *c = items[i];
        }
        f(&cur);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Block sizes, point membership, group transversality and `t`-subset
/// coverage.
pub fn verify_design(d: &BlockDesign) -> Verdict {
    let mut v = Verdict::default();
    let point_set: std::collections::HashSet<usize> = d.points.iter().copied().collect();
    if point_set.len() != d.points.len() {
        v.fail(
            FailureKind::CoverageViolation,
            json!({"reason": "repeated point label"}),
        );
    }
    v.checks
        .push(format!("blocks: {} blocks of size {}", d.blocks.len(), d.w));
    for (bi, b) in d.blocks.iter().enumerate() {
        let mut s = b.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != d.w || b.len() != d.w {
            v.fail(
                FailureKind::SizeViolation,
                json!({"block": b, "index": bi, "expected": d.w}),
            );
        }
        if let Some(x) = b.iter().find(|x| !point_set.contains(x)) {
            v.fail(
                FailureKind::CoverageViolation,
                json!({"block": b, "index": bi, "foreign_point": x}),
            );
        }
    }

    let group_of: Option<HashMap<usize, usize>> = d.groups.as_ref().map(|gs| {
        let mut m = HashMap::new();
        for (gi, g) in gs.iter().enumerate() {
            for &x in g {
                if m.insert(x, gi).is_some() {
                    v.fail(
                        FailureKind::GroupViolation,
                        json!({"point": x, "reason": "in two groups"}),
                    );
                }
            }
        }
        m
    });
    let needs_groups = matches!(d.kind, DesignKind::HDesign | DesignKind::HPacking);
    if needs_groups && group_of.is_none() {
        v.fail(
            FailureKind::GroupViolation,
            json!({"reason": "H-design without groups"}),
        );
    }
    if let Some(gm) = &group_of {
        v.checks
            .push("groups: every block meets every group at most once".into());
        if gm.len() != d.points.len() || d.points.iter().any(|x| !gm.contains_key(x)) {
            v.fail(
                FailureKind::GroupViolation,
                json!({"reason": "groups do not partition the points"}),
            );
        }
        for b in &d.blocks {
            let mut hit: HashMap<usize, usize> = HashMap::new();
            for &x in b {
                if let Some(&g) = gm.get(&x) {
                    if let Some(&y) = hit.get(&g) {
                        v.fail(
                            FailureKind::GroupViolation,
                            json!({"block": b, "points": [y, x], "group": g}),
                        );
                    }
                    hit.insert(g, x);
                }
            }
        }
    }

    // Coverage of t-subsets.
    let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
    for b in &d.blocks {
        let mut s = b.clone();
        s.sort_unstable();
        s.dedup();
        for_each_subset(&s, d.t, |sub| *counts.entry(sub.to_vec()).or_insert(0) += 1);
    }
    let exact = matches!(d.kind, DesignKind::Steiner | DesignKind::HDesign);
    v.checks.push(format!(
        "coverage: every {}{}-subset {}",
        if group_of.is_some() {
            "transverse "
        } else {
            ""
        },
        d.t,
        if exact {
            "in exactly one block"
        } else {
            "in at most one block"
        }
    ));
    let mut pts = d.points.clone();
    pts.sort_unstable();
    for_each_subset(&pts, d.t, |sub| {
        if let Some(gm) = &group_of {
            let mut gs: Vec<usize> = sub.iter().filter_map(|x| gm.get(x).copied()).collect();
            gs.sort_unstable();
            gs.dedup();
            if gs.len() < sub.len() {
                return;
            }
        }
        let c = counts.get(sub).copied().unwrap_or(0);
        if c > 1 || (exact && c == 0) {
            v.fail(
                FailureKind::CoverageViolation,
                json!({"subset": sub, "count": c}),
            );
        }
    });
    v
}

/// Design check plus: classes partition the blocks and each class is an
/// `S(i,w,n)`. Parallel classes with `w` not dividing `n` must miss
/// exactly `n mod w` points.
pub fn verify_resolution(r: &Resolution) -> Verdict {
    let mut v = verify_design(&r.design);
    let d = &r.design;
    let mut used = vec![0usize; d.blocks.len()];
    for (ci, class) in r.classes.iter().enumerate() {
        for &b in class {
            if b >= used.len() {
                v.fail(
                    FailureKind::CoverageViolation,
                    json!({"class": ci, "block_index": b, "reason": "no such block"}),
                );
            } else {
                used[b] += 1;
            }
        }
    }
    v.checks.push(format!(
        "resolution: {} classes partition the blocks",
        r.classes.len()
    ));
    for (b, &c) in used.iter().enumerate() {
        if c != 1 {
            v.fail(
                FailureKind::CoverageViolation,
                json!({"block": d.blocks[b], "classes_containing": c}),
            );
        }
    }
    let i = r.class_strength;
    let near = i == 1 && !d.n().is_multiple_of(d.w);
    v.checks.push(format!(
        "classes: each an S({i},{},{}){}",
        d.w,
        d.n(),
        if near {
            " up to n mod w uncovered points"
        } else {
            ""
        }
    ));
    for (ci, class) in r.classes.iter().enumerate() {
        let blocks: Vec<Vec<usize>> = class
            .iter()
            .filter(|&&b| b < d.blocks.len())
            .map(|&b| d.blocks[b].clone())
            .collect();
        let sub = BlockDesign {
            points: d.points.clone(),
            groups: None,
            blocks: blocks.clone(),
            t: i,
            w: d.w,
            kind: if near {
                DesignKind::Packing
            } else {
                DesignKind::Steiner
            },
        };
        let cv = verify_design(&sub);
        v.absorb(cv, json!({"class": ci}));
        if near && blocks.len() != d.n() / d.w {
            v.fail(
                FailureKind::SizeViolation,
                json!({"class": ci, "size": blocks.len(), "expected": d.n() / d.w}),
            );
        }
    }
    v
}

/// Members verified individually, then pairwise block-disjointness and
/// coverage of every `w`-subset of `1..=n` exactly once.
pub fn verify_large_set(ls: &LargeSet) -> Verdict {
    let mut v = Verdict::default();
    for (mi, m) in ls.members.iter().enumerate() {
        v.absorb(verify_design(m), json!({"member": mi}));
        if m.points.iter().any(|&x| x == 0 || x > ls.n) {
            v.fail(
                FailureKind::CoverageViolation,
                json!({"member": mi, "reason": "point outside 1..=n"}),
            );
        }
    }
    if !ls.resolutions.is_empty() {
        if ls.resolutions.len() != ls.members.len() {
            v.fail(
                FailureKind::CountViolation,
                json!({"resolutions": ls.resolutions.len(), "members": ls.members.len()}),
            );
        }
        for (mi, (r, m)) in ls.resolutions.iter().zip(&ls.members).enumerate() {
            if &r.design != m {
                v.fail(
                    FailureKind::CoverageViolation,
                    json!({"member": mi, "reason": "resolution of a different design"}),
                );
            }
            v.absorb(verify_resolution(r), json!({"member": mi}));
        }
    }
    let mut owner: HashMap<Vec<usize>, usize> = HashMap::new();
    for (mi, m) in ls.members.iter().enumerate() {
        for b in &m.blocks {
            let mut s = b.clone();
            s.sort_unstable();
            if let Some(prev) = owner.insert(s.clone(), mi) {
                v.fail(
                    FailureKind::CoverageViolation,
                    json!({"block": s, "members": [prev, mi]}),
                );
            }
        }
    }
    let all: Vec<usize> = (1..=ls.n).collect();
    v.checks.push(format!(
        "large set: {} members cover every {}-subset of [{}] once",
        ls.members.len(),
        ls.w,
        ls.n
    ));
    for_each_subset(&all, ls.w, |s| {
        if !owner.contains_key(s) {
            v.fail(
                FailureKind::CoverageViolation,
                json!({"subset": s, "count": 0}),
            );
        }
    });
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_counted() {
        let mut n = 0;
        for_each_subset(&[1, 2, 3, 4, 5], 3, |_| n += 1);
        assert_eq!(n, 10);
        let mut got = Vec::new();
        for_each_subset(&[4, 7], 2, |s| got.push(s.to_vec()));
        assert_eq!(got, vec![vec![4, 7]]);
        let mut zero = 0;
        for_each_subset(&[1, 2], 0, |_| zero += 1);
        assert_eq!(zero, 1);
    }

    #[test]
    fn repeated_block_breaks_coverage() {
        let mut d = crate::designs::build_sts(9).unwrap();
        assert!(verify_design(&d).ok);
        d.blocks[1] = d.blocks[0].clone();
        let v = verify_design(&d);
        assert!(v.has(FailureKind::CoverageViolation));
    }

    #[test]
    fn group_violation_reported() {
        let d = BlockDesign::new(4, 1, 2, DesignKind::HDesign, vec![vec![1, 2], vec![3, 4]])
            .with_groups(vec![vec![1, 2], vec![3, 4]]);
        assert!(verify_design(&d).has(FailureKind::GroupViolation));
    }
}
