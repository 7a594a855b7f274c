//! Steiner quadruple systems.

use super::exact_cover::{Cover, ExactCover};
use super::{
    require_verified, subset_index, subsets, BlockDesign, DesignKind, Resolution,
    DEFAULT_SEARCH_BUDGET,
};
use crate::error::{Error, Result};
use crate::verify::{verify_design, verify_resolution};

/// The `SQS(8)` of 4-subsets of `F_2^3` summing to zero; point `v + 1`
/// stands for the vector with bits `v`.
pub fn sqs8() -> Result<BlockDesign> {
    let pts: Vec<usize> = (0..8).collect();
    let blocks: Vec<Vec<usize>> = subsets(&pts, 4)
        .into_iter()
        .filter(|b| b.iter().fold(0, |acc, &x| acc ^ x) == 0)
        .map(|b| b.iter().map(|x| x + 1).collect())
        .collect();
    let d = BlockDesign::new(8, 3, 4, DesignKind::Steiner, blocks);
    require_verified("SQS(8)", verify_design(&d))?;
    Ok(d)
}

/// First `SQS(n)` found by exact cover of the triples; used to produce the
/// catalog entry for `n = 10`.
pub fn search_sqs(n: usize, budget: u64) -> Result<BlockDesign> {
    let pts: Vec<usize> = (1..=n).collect();
    let quads = subsets(&pts, 4);
    let mut ec = ExactCover::new(subsets(&pts, 3).len(), 0);
    for b in &quads {
        ec.add_row(subsets(b, 3).iter().map(|t| subset_index(t)).collect());
    }
    match ec.first(budget) {
        Cover::Found(mut rows) => {
            rows.sort_unstable();
            let d = BlockDesign::new(
                n,
                3,
                4,
                DesignKind::Steiner,
                rows.into_iter().map(|r| quads[r].clone()).collect(),
            );
            require_verified("SQS", verify_design(&d))?;
            Ok(d)
        }
        Cover::None => Err(Error::Nonexistent(format!(
            "no SQS({n}): exact cover exhausted"
        ))),
        Cover::Unknown => Err(Error::Indeterminate(format!(
            "SQS({n}) search budget exhausted"
        ))),
    }
}

/// The `SQS(16)` of planes of `AG(4,2)`, split into 7 classes of 20 blocks
/// that are each an `S(2,4,16)`.
///
/// A plane with direction `U` (a 2-dimensional subspace) covers the pair
/// `{a,b}` iff `a + b` lies in `U`, so a union of parallel plane classes is
/// an `S(2,4,16)` iff their directions partition the nonzero vectors. The
/// search enumerates those groups of 5 directions and then picks 7 of them
/// partitioning all 35 directions.
pub fn build_2resolvable_sqs16() -> Result<Resolution> {
    // Two-dimensional subspaces, each as its three nonzero vectors.
    let mut dirs: Vec<[usize; 3]> = Vec::new();
    for a in 1..16usize {
        for b in a + 1..16 {
            let c = a ^ b;
            if c > b {
                dirs.push([a, b, c]);
            }
        }
    }
    debug_assert_eq!(dirs.len(), 35);

    let mut spreads_ec = ExactCover::new(15, 0);
    for d in &dirs {
        spreads_ec.add_row(d.iter().map(|v| v - 1).collect());
    }
    let spreads = spreads_ec
        .all(DEFAULT_SEARCH_BUDGET)
        .ok_or_else(|| Error::Indeterminate("spread enumeration budget exhausted".into()))?;

    let mut packing_ec = ExactCover::new(dirs.len(), 0);
    for s in &spreads {
        packing_ec.add_row(s.clone());
    }
    let chosen = match packing_ec.first(DEFAULT_SEARCH_BUDGET) {
        Cover::Found(rows) => rows,
        Cover::None => {
            return Err(Error::invariant(
                "no partition of the 35 directions into spreads",
            ))
        }
        Cover::Unknown => {
            return Err(Error::Indeterminate(
                "SQS(16) class search budget exhausted".into(),
            ))
        }
    };

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &si in &chosen {
        let mut class = Vec::new();
        for &di in &spreads[si] {
            let [u, v, _] = dirs[di];
            let mut seen = [false; 16];
            for a in 0..16usize {
                if seen[a] {
                    continue;
                }
                let mut plane = vec![a, a ^ u, a ^ v, a ^ u ^ v];
                for &x in &plane {
                    seen[x] = true;
                }
                plane.iter_mut().for_each(|x| *x += 1);
                plane.sort_unstable();
                class.push(blocks.len());
                blocks.push(plane);
            }
        }
        classes.push(class);
    }
    let design = BlockDesign::new(16, 3, 4, DesignKind::Steiner, blocks);
    let r = Resolution {
        design,
        classes,
        class_strength: 2,
    };
    require_verified("2-resolvable SQS(16)", verify_resolution(&r))?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::resolve;

    #[test]
    fn sqs8_resolves_into_complementary_pairs() {
        let d = sqs8().unwrap();
        assert_eq!(d.block_count(), 14);
        let r = resolve(&d, 1).unwrap().unwrap();
        assert_eq!(r.classes.len(), 7);
        assert!(r.classes.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn sqs10_search() {
        let d = search_sqs(10, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(d.block_count(), 30);
    }

    #[test]
    fn sqs16_classes() {
        let r = build_2resolvable_sqs16().unwrap();
        assert_eq!(r.design.block_count(), 140);
        assert_eq!(r.classes.len(), 7);
        assert!(r.classes.iter().all(|c| c.len() == 20));
    }
}
