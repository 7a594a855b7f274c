//! Almost-regular edge-colorings of the complete `w`-uniform hypergraph
//! `λK_n^w`, good colorings derived from large sets of Kirkman systems, and
//! strong vertex colorings.
//!
//! Vertices are `1..=n`; an edge is a sorted `w`-subset.

pub mod baranyai;
pub mod flow;
pub mod strong;

use serde::{Deserialize, Serialize};

use crate::designs::{LargeSet, Resolution};
use crate::error::{Error, Result};
use crate::verify::verify_edge_coloring;

pub use baranyai::baranyai;
pub use strong::{find_odd_cycle, strong_color, strong_color_with_budget, OddCycle};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFlags {
    /// Within each class, vertex degrees differ by at most one.
    pub almost_regular: bool,
    /// Consecutive groups of `g` classes each form a pair packing.
    pub g_good: Option<usize>,
    /// `g_good` with a strong `w`-coloring supplied for every group.
    pub g_star_good: Option<usize>,
}

/// Partition of `[n]` into `w` parts meeting each target edge at most once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongColoring {
    pub parts: Vec<Vec<usize>>,
}

impl StrongColoring {
    /// Part index of every vertex `1..=n` (`None` if uncoloured).
    pub fn colour_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut c = vec![None; n + 1];
        for (i, p) in self.parts.iter().enumerate() {
            for &x in p {
                if x <= n {
                    c[x] = Some(i);
                }
            }
        }
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub n: usize,
    pub w: usize,
    pub lambda: u64,
    pub classes: Vec<Vec<Vec<usize>>>,
    pub flags: ColoringFlags,
    /// One strong coloring per group of `g_star_good` classes, else empty.
    #[serde(default)]
    pub strong: Vec<StrongColoring>,
}

impl EdgeColoring {
    /// Union of the classes of group `s` under grouping by `g`.
    pub fn group_edges(&self, g: usize, s: usize) -> Vec<Vec<usize>> {
        self.classes[s * g..(s + 1) * g]
            .iter()
            .flatten()
            .cloned()
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("coloring json")
    }
}

fn require_ok(what: &str, c: &EdgeColoring) -> Result<()> {
    let v = verify_edge_coloring(c);
    if v.ok {
        Ok(())
    } else {
        Err(Error::invariant(format!(
            "{what} failed verification: {}",
            v.summary()
        )))
    }
}

/// Classes are the parallel classes of each member, paired consecutively;
/// every pair is then strongly coloured, so the result is both 2-good and
/// 2*-good.
fn two_good(n: usize, resolutions: &[Resolution]) -> Result<EdgeColoring> {
    let mut classes = Vec::new();
    for (mi, r) in resolutions.iter().enumerate() {
        if r.classes.len() % 2 != 0 {
            return Err(Error::unsupported(format!(
                "member {mi} has {} parallel classes; pairing needs an even count",
                r.classes.len()
            )));
        }
        for i in 0..r.classes.len() {
            let mut c = r.class_blocks(i);
            c.sort();
            classes.push(c);
        }
    }
    let w = resolutions.first().map_or(3, |r| r.design.w);
    let mut c = EdgeColoring {
        n,
        w,
        lambda: 1,
        classes,
        flags: ColoringFlags {
            almost_regular: true,
            g_good: Some(2),
            g_star_good: None,
        },
        strong: Vec::new(),
    };
    c.strong = (0..c.classes.len() / 2)
        .map(|s| strong_color(n, &c.group_edges(2, s), w))
        .collect::<Result<_>>()?;
    c.flags.g_star_good = Some(2);
    require_ok("2-good coloring", &c)?;
    Ok(c)
}

fn resolutions_of(ls: &LargeSet, what: &str) -> Result<Vec<Resolution>> {
    if ls.resolutions.len() != ls.members.len() || ls.members.is_empty() {
        return Err(Error::param(format!(
            "{what} must carry one resolution per member"
        )));
    }
    if ls.resolutions.iter().any(|r| r.class_strength != 1) {
        return Err(Error::param(format!(
            "{what} resolutions must be into parallel classes"
        )));
    }
    Ok(ls.resolutions.clone())
}

/// 2-good coloring of `K_n^3` from an LKTS(n), `n ≡ 9 (mod 12)`.
pub fn two_good_from_lkts(lkts: &LargeSet) -> Result<EdgeColoring> {
    if lkts.n % 12 != 9 || lkts.w != 3 {
        return Err(Error::unsupported(format!(
            "LKTS route needs w = 3 and n ≡ 9 (mod 12), got n = {}",
            lkts.n
        )));
    }
    two_good(lkts.n, &resolutions_of(lkts, "LKTS")?)
}

/// 2-good coloring of `K_{n+1}^3` from an OLKTS(n), `n ≡ 9 (mod 12)`; the
/// classes are near-1-factors missing the member's removed point.
pub fn two_good_from_olkts(olkts: &LargeSet) -> Result<EdgeColoring> {
    if olkts.n % 12 != 10 || olkts.w != 3 {
        return Err(Error::unsupported(format!(
            "OLKTS route needs w = 3 and n ≡ 9 (mod 12) points per member, got {} vertices",
            olkts.n
        )));
    }
    two_good(olkts.n, &resolutions_of(olkts, "OLKTS")?)
}

/// Check a supplied `g*`-good coloring and return it with its flags
/// confirmed, or the violated clause.
pub fn validate_g_star(mut c: EdgeColoring, g: usize) -> Result<EdgeColoring> {
    c.flags.g_good = Some(g);
    c.flags.g_star_good = Some(g);
    let v = verify_edge_coloring(&c);
    if v.ok {
        Ok(c)
    } else {
        Err(Error::Verification(format!(
            "supplied {g}*-good coloring rejected: {}",
            v.summary()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{build_lkts9, build_olkts9};

    #[test]
    fn lkts9_pairs() {
        let c = two_good_from_lkts(&build_lkts9().unwrap()).unwrap();
        assert_eq!(c.classes.len(), 28);
        assert_eq!(c.strong.len(), 14);
        for s in 0..14 {
            let mut deg = [0; 10];
            c.group_edges(2, s)
                .iter()
                .flatten()
                .for_each(|&x| deg[x] += 1);
            assert!(deg[1..].iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn olkts9_pairs() {
        let c = two_good_from_olkts(&build_olkts9().unwrap()).unwrap();
        assert_eq!((c.n, c.classes.len(), c.strong.len()), (10, 40, 20));
        assert!(c.classes.iter().all(|k| k.len() == 3));
    }

    #[test]
    fn wrong_residue_rejected() {
        let mut ls = build_lkts9().unwrap();
        ls.n = 15;
        assert!(matches!(
            two_good_from_lkts(&ls),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn odd_class_count_rejected() {
        let mut ls = build_lkts9().unwrap();
        ls.resolutions[0].classes.pop();
        assert!(matches!(
            two_good_from_lkts(&ls),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn broken_strong_coloring_rejected() {
        let mut c = two_good_from_lkts(&build_lkts9().unwrap()).unwrap();
        let x = c.strong[0].parts[0].pop().unwrap();
        c.strong[0].parts[1].push(x);
        assert!(matches!(validate_g_star(c, 2), Err(Error::Verification(_))));
    }
}
