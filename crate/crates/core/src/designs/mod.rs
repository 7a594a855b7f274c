//! Block designs, resolutions and large sets, with the constructions and
//! searches the tilings are built from.
//!
//! Points are labelled `1..=n`. Blocks are stored sorted.

pub mod exact_cover;
pub mod hdesign;
pub mod opt;
pub mod projective;
pub mod sqs;
pub mod sts;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use hdesign::{code_from_design, design_from_code, gmhp_check, gs_check, HCheck};
pub use opt::{build_opt, opt_size_formula};
pub use projective::build_pg2;
pub use sqs::{build_2resolvable_sqs16, sqs8};
pub use sts::{build_lkts9, build_lsts, build_olkts9, build_sts, resolve};

/// Default node budget for exact-cover searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DesignKind {
    Steiner,
    Packing,
    HDesign,
    HPacking,
}

/// A design on a point set; `t`-subsets (transverse to the groups, when
/// present) lie in exactly one block (`Steiner`, `HDesign`) or at most one
/// (`Packing`, `HPacking`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDesign {
    pub points: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<usize>>>,
    pub blocks: Vec<Vec<usize>>,
    pub t: usize,
    pub w: usize,
    pub kind: DesignKind,
}

impl BlockDesign {
    /// A design on `1..=n`.
    pub fn new(n: usize, t: usize, w: usize, kind: DesignKind, blocks: Vec<Vec<usize>>) -> Self {
        Self::on_points((1..=n).collect(), t, w, kind, blocks)
    }

    pub fn on_points(
        points: Vec<usize>,
        t: usize,
        w: usize,
        kind: DesignKind,
        blocks: Vec<Vec<usize>>,
    ) -> Self {
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        BlockDesign {
            points,
            groups: None,
            blocks,
            t,
            w,
            kind,
        }
    }

    pub fn with_groups(mut self, groups: Vec<Vec<usize>>) -> Self {
        self.groups = Some(groups);
        self
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The design on the points other than `x`, keeping blocks avoiding `x`.
    pub fn delete_point(&self, x: usize) -> BlockDesign {
        let points = self.points.iter().copied().filter(|&p| p != x).collect();
        let blocks = self
            .blocks
            .iter()
            .filter(|b| !b.contains(&x))
            .cloned()
            .collect();
        let kind = match self.kind {
            DesignKind::Steiner => DesignKind::Packing,
            DesignKind::HDesign => DesignKind::HPacking,
            k => k,
        };
        BlockDesign {
            points,
            groups: None,
            blocks,
            t: self.t,
            w: self.w,
            kind,
        }
    }

    /// Design JSON: `{"n":9,"blocks":[[1,2,3],...]}`.
    pub fn to_json(&self, resolution: Option<&Resolution>) -> serde_json::Value {
        let mut v = serde_json::json!({ "n": self.n(), "blocks": self.blocks });
        if self.points != (1..=self.n()).collect::<Vec<_>>() {
            v["points"] = serde_json::json!(self.points);
        }
        if let Some(r) = resolution {
            v["resolution"] = serde_json::json!(r.classes);
        }
        v
    }
}

/// A partition of a design's blocks into classes, each an
/// `S(class_strength, w, n)` (`class_strength = 1`: parallel classes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub design: BlockDesign,
    /// Block indices per class.
    pub classes: Vec<Vec<usize>>,
    pub class_strength: usize,
}

impl Resolution {
    pub fn class_blocks(&self, i: usize) -> Vec<Vec<usize>> {
        self.classes[i]
            .iter()
            .map(|&b| self.design.blocks[b].clone())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LargeSetTarget {
    Lsts,
    Lkts,
    Olkts,
    OptPt,
    Lgs,
    Lgmhp,
    Toc,
}

/// Pairwise block-disjoint designs whose blocks together are all
/// `w`-subsets of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LargeSet {
    pub n: usize,
    pub w: usize,
    pub target: LargeSetTarget,
    pub members: Vec<BlockDesign>,
    /// Empty, or one resolution per member.
    #[serde(default)]
    pub resolutions: Vec<Resolution>,
}

impl LargeSet {
    pub fn part_sizes(&self) -> Vec<usize> {
        self.members.iter().map(BlockDesign::block_count).collect()
    }

    /// `{"n":9,"w":3,"target":"lsts","members":[<design JSON>, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let members: Vec<serde_json::Value> = self
            .members
            .iter()
            .enumerate()
            .map(|(i, m)| m.to_json(self.resolutions.get(i)))
            .collect();
        serde_json::json!({ "n": self.n, "w": self.w, "target": self.target, "members": members })
    }
}

/// All `k`-subsets of `items` in lexicographic order.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Dense index of a sorted `k`-subset of `1..=n` (colex rank).
pub(crate) fn subset_index(s: &[usize]) -> usize {
    s.iter()
        .enumerate()
        .map(|(i, &x)| crate::hamming::binomial(x - 1, i + 1) as usize)
        .sum()
}

pub(crate) fn require_verified(what: &str, verdict: crate::verify::Verdict) -> Result<()> {
    if verdict.ok {
        Ok(())
    } else {
        Err(Error::invariant(format!(
            "{what} failed verification: {}",
            verdict.summary()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_ranks_are_dense() {
        let pts: Vec<usize> = (1..=7).collect();
        let mut ranks: Vec<usize> = subsets(&pts, 3).iter().map(|s| subset_index(s)).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, (0..35).collect::<Vec<_>>());
    }

    #[test]
    fn delete_point_keeps_avoiding_blocks() {
        let d = build_sts(7).unwrap();
        let p = d.delete_point(7);
        assert_eq!(p.block_count(), 4);
        assert_eq!(p.kind, DesignKind::Packing);
        assert_eq!(p.n(), 6);
    }
}
