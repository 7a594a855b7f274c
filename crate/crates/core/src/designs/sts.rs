//! Steiner triple systems, their large sets and resolutions.

use super::exact_cover::{Cover, ExactCover};
use super::{
    require_verified, subset_index, subsets, BlockDesign, DesignKind, LargeSet, LargeSetTarget,
    Resolution, DEFAULT_SEARCH_BUDGET,
};
use crate::catalog;
use crate::error::{Error, Result};
use crate::verify::{verify_design, verify_large_set, verify_resolution};

/// An `S(2,3,n)` by the Bose (`n = 6k+3`) or Skolem (`n = 6k+1`)
/// construction.
pub fn build_sts(n: usize) -> Result<BlockDesign> {
    let blocks = match n % 6 {
        3 => bose(n),
        1 => skolem(n),
        _ => {
            return Err(Error::unsupported(format!(
                "an STS({n}) needs n = 1 or 3 (mod 6)"
            )))
        }
    };
    let d = BlockDesign::new(n, 2, 3, DesignKind::Steiner, blocks);
    require_verified("STS", verify_design(&d))?;
    Ok(d)
}

fn bose(n: usize) -> Vec<Vec<usize>> {
    let v = n / 3;
    let half = v.div_ceil(2);
    let label = |x: usize, i: usize| x + v * (i % 3) + 1;
    let mut blocks: Vec<Vec<usize>> = (0..v)
        .map(|x| vec![label(x, 0), label(x, 1), label(x, 2)])
        .collect();
    for i in 0..3 {
        for x in 0..v {
            for y in x + 1..v {
                let z = (x + y) * half % v;
                blocks.push(vec![label(x, i), label(y, i), label(z, i + 1)]);
            }
        }
    }
    blocks
}

fn skolem(n: usize) -> Vec<Vec<usize>> {
    let k = (n - 1) / 6;
    let m = 2 * k;
    let label = |x: usize, i: usize| x + m * (i % 3) + 1;
    let inf = n;
    // Half-idempotent commutative quasigroup of order 2k.
    let op = |x: usize, y: usize| {
        let z = (x + y) % m;
        if z.is_multiple_of(2) {
            z / 2
        } else {
            (z - 1) / 2 + k
        }
    };
    let mut blocks: Vec<Vec<usize>> = (0..k)
        .map(|x| vec![label(x, 0), label(x, 1), label(x, 2)])
        .collect();
    for x in 0..k {
        for i in 0..3 {
            blocks.push(vec![inf, label(x + k, i), label(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                blocks.push(vec![label(x, i), label(y, i), label(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

/// Every `S(2,3,n)` on `1..=n`, by exhaustive exact cover.
fn all_sts(n: usize, budget: u64) -> Result<Vec<Vec<Vec<usize>>>> {
    let pts: Vec<usize> = (1..=n).collect();
    let triples = subsets(&pts, 3);
    let mut ec = ExactCover::new(n * (n - 1) / 2, 0);
    for t in &triples {
        ec.add_row(subsets(t, 2).iter().map(|p| subset_index(p)).collect());
    }
    let sols = ec
        .all(budget)
        .ok_or_else(|| Error::Indeterminate(format!("STS({n}) enumeration budget exhausted")))?;
    Ok(sols
        .into_iter()
        .map(|rows| rows.into_iter().map(|r| triples[r].clone()).collect())
        .collect())
}

/// A large set of `STS(n)`: `n-2` disjoint systems covering all triples.
pub fn build_lsts(n: usize) -> Result<LargeSet> {
    let members: Vec<BlockDesign> = match n {
        3 => vec![build_sts(3)?],
        7 => {
            return Err(Error::Nonexistent(
                "a large set of STS(n) exists iff n = 1,3 (mod 6), n >= 3 and n != 7".into(),
            ))
        }
        9 => lsts9()?,
        13 => lsts13()?,
        _ if n % 6 == 1 || n % 6 == 3 => {
            return Err(Error::unsupported(format!(
                "large sets of STS({n}) are out of scope; supported n: 3, 9, 13"
            )))
        }
        _ => {
            return Err(Error::Nonexistent(format!(
                "no STS({n}) exists since n is not 1 or 3 (mod 6)"
            )))
        }
    };
    let ls = LargeSet {
        n,
        w: 3,
        target: LargeSetTarget::Lsts,
        members,
        resolutions: Vec::new(),
    };
    require_verified("LSTS", verify_large_set(&ls))?;
    Ok(ls)
}

fn lsts9() -> Result<Vec<BlockDesign>> {
    let systems = all_sts(9, DEFAULT_SEARCH_BUDGET)?;
    let pts: Vec<usize> = (1..=9).collect();
    let mut ec = ExactCover::new(subsets(&pts, 3).len(), 0);
    for s in &systems {
        ec.add_row(s.iter().map(|t| subset_index(t)).collect());
    }
    match ec.first(DEFAULT_SEARCH_BUDGET) {
        Cover::Found(rows) => {
            let mut rows = rows;
            rows.sort_unstable();
            Ok(rows
                .into_iter()
                .map(|r| BlockDesign::new(9, 2, 3, DesignKind::Steiner, systems[r].clone()))
                .collect())
        }
        Cover::None => Err(Error::invariant("no seven disjoint STS(9) among all 840")),
        Cover::Unknown => Err(Error::Indeterminate(
            "LSTS(9) search budget exhausted".into(),
        )),
    }
}

/// An `STS(13)` meeting each orbit of `Z_11` (acting on points `1..=11`,
/// fixing 12 and 13) in one triple; its 11 translates form the large set.
fn lsts13() -> Result<Vec<BlockDesign>> {
    let shift = |x: usize, s: usize| if x <= 11 { (x - 1 + s) % 11 + 1 } else { x };
    let pts: Vec<usize> = (1..=13).collect();
    let triples = subsets(&pts, 3);
    let mut orbit_of = vec![usize::MAX; triples.len()];
    let mut orbits = 0;
    for t in &triples {
        if orbit_of[subset_index(t)] != usize::MAX {
            continue;
        }
        for s in 0..11 {
            let mut u: Vec<usize> = t.iter().map(|&x| shift(x, s)).collect();
            u.sort_unstable();
            orbit_of[subset_index(&u)] = orbits;
        }
        orbits += 1;
    }
    let pair_cols = 13 * 12 / 2;
    let mut ec = ExactCover::new(orbits + pair_cols, 0);
    for t in &triples {
        let mut cols = vec![orbit_of[subset_index(t)]];
        cols.extend(subsets(t, 2).iter().map(|p| orbits + subset_index(p)));
        ec.add_row(cols);
    }
    let rows = match ec.first(DEFAULT_SEARCH_BUDGET) {
        Cover::Found(rows) => rows,
        Cover::None => return Err(Error::invariant("no Z_11-orbit starter for an LSTS(13)")),
        Cover::Unknown => {
            return Err(Error::Indeterminate(
                "LSTS(13) starter search budget exhausted".into(),
            ))
        }
    };
    let base: Vec<Vec<usize>> = rows.into_iter().map(|r| triples[r].clone()).collect();
    Ok((0..11)
        .map(|s| {
            let blocks = base
                .iter()
                .map(|t| t.iter().map(|&x| shift(x, s)).collect())
                .collect();
            BlockDesign::new(13, 2, 3, DesignKind::Steiner, blocks)
        })
        .collect())
}

/// Partitions the blocks of a Steiner system into `S(i,w,n)`s.
///
/// `Ok(None)` means the search space was exhausted: no `i`-resolution
/// exists. For `i = 1` with `w` not dividing `n`, classes are near-parallel
/// (each misses `n mod w` points).
pub fn resolve(design: &BlockDesign, i: usize) -> Result<Option<Resolution>> {
    resolve_with_budget(design, i, DEFAULT_SEARCH_BUDGET)
}

pub fn resolve_with_budget(
    design: &BlockDesign,
    i: usize,
    budget: u64,
) -> Result<Option<Resolution>> {
    if i == 0 || i > design.t {
        return Err(Error::param(format!(
            "resolution strength {i} must lie in 1..={}",
            design.t
        )));
    }
    let w = design.w;
    let n = design.n();
    let pts = &design.points;
    let pos = |x: usize| {
        pts.iter()
            .position(|&p| p == x)
            .expect("block point in design")
            + 1
    };
    let local: Vec<usize> = (1..=n).collect();
    let i_subsets = subsets(&local, i);
    let slack = if i == 1 { n % w } else { 0 };
    let mut ec = ExactCover::new(i_subsets.len() + usize::from(slack > 0), 0);
    for b in &design.blocks {
        let mut lb: Vec<usize> = b.iter().map(|&x| pos(x)).collect();
        lb.sort_unstable();
        ec.add_row(subsets(&lb, i).iter().map(|s| subset_index(s)).collect());
    }
    if slack > 0 {
        for s in subsets(&local, slack) {
            let mut cols: Vec<usize> = s.iter().map(|&x| x - 1).collect();
            cols.push(i_subsets.len());
            ec.add_row(cols);
        }
    }
    let nb = design.blocks.len();
    let Some(classes) = ec.all(budget) else {
        return Err(Error::Indeterminate(format!(
            "enumerating sub-{i}-systems exceeded {budget} nodes"
        )));
    };
    let classes: Vec<Vec<usize>> = classes
        .into_iter()
        .map(|c| c.into_iter().filter(|&r| r < nb).collect())
        .collect();
    let mut cover = ExactCover::new(nb, 0);
    for c in &classes {
        cover.add_row(c.clone());
    }
    match cover.first(budget) {
        Cover::Found(rows) => {
            let mut chosen: Vec<Vec<usize>> =
                rows.into_iter().map(|r| classes[r].clone()).collect();
            chosen.sort();
            let r = Resolution {
                design: design.clone(),
                classes: chosen,
                class_strength: i,
            };
            require_verified("resolution", verify_resolution(&r))?;
            Ok(Some(r))
        }
        Cover::None => Ok(None),
        Cover::Unknown => Err(Error::Indeterminate(format!(
            "partitioning into sub-{i}-systems exceeded {budget} nodes"
        ))),
    }
}

fn resolve_all(members: &[BlockDesign]) -> Result<Vec<Resolution>> {
    members
        .iter()
        .map(|m| resolve(m, 1)?.ok_or_else(|| Error::invariant("an STS(9) without a resolution")))
        .collect()
}

/// Seven disjoint `KTS(9)`: the large set of `STS(9)` with each member
/// resolved into parallel classes.
pub fn build_lkts9() -> Result<LargeSet> {
    let mut ls = build_lsts(9)?;
    ls.resolutions = resolve_all(&ls.members)?;
    ls.target = LargeSetTarget::Lkts;
    require_verified("LKTS(9)", verify_large_set(&ls))?;
    Ok(ls)
}

/// An overlarge set of `KTS(9)` on `1..=10`: member `y` holds the triples
/// `T` with `T + {y}` a block of the catalog `SQS(10)`.
pub fn build_olkts9() -> Result<LargeSet> {
    let sqs = catalog::design("sqs10")?;
    let members: Vec<BlockDesign> = (1..=10)
        .map(|y| {
            let points = (1..=10).filter(|&x| x != y).collect();
            let blocks = sqs
                .blocks
                .iter()
                .filter(|b| b.contains(&y))
                .map(|b| b.iter().copied().filter(|&x| x != y).collect())
                .collect();
            BlockDesign::on_points(points, 2, 3, DesignKind::Steiner, blocks)
        })
        .collect();
    let resolutions = resolve_all(&members)?;
    let ls = LargeSet {
        n: 10,
        w: 3,
        target: LargeSetTarget::Olkts,
        members,
        resolutions,
    };
    require_verified("OLKTS(9)", verify_large_set(&ls))?;
    Ok(ls)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sts_small() {
        assert_eq!(build_sts(3).unwrap().blocks, vec![vec![1, 2, 3]]);
        assert_eq!(build_sts(7).unwrap().block_count(), 7);
        assert_eq!(build_sts(9).unwrap().block_count(), 12);
        for n in [13, 15, 19, 21, 25, 27, 31, 33] {
            assert_eq!(
                build_sts(n).unwrap().block_count(),
                n * (n - 1) / 6,
                "n = {n}"
            );
        }
        assert!(matches!(build_sts(8), Err(Error::Unsupported(_))));
    }

    #[test]
    fn sts9_count() {
        assert_eq!(all_sts(9, u64::MAX).unwrap().len(), 840);
        assert_eq!(all_sts(7, u64::MAX).unwrap().len(), 30);
    }

    #[test]
    fn lsts_cases() {
        let ls = build_lsts(9).unwrap();
        assert_eq!(ls.part_sizes(), vec![12; 7]);
        assert_eq!(build_lsts(3).unwrap().members.len(), 1);
        assert!(matches!(build_lsts(7), Err(Error::Nonexistent(_))));
        assert!(matches!(build_lsts(15), Err(Error::Unsupported(_))));
    }

    #[test]
    fn lsts13() {
        let ls = build_lsts(13).unwrap();
        assert_eq!(ls.part_sizes(), vec![26; 11]);
    }

    #[test]
    fn resolutions() {
        let r = resolve(&build_sts(9).unwrap(), 1).unwrap().unwrap();
        assert_eq!(r.classes.len(), 4);
        assert!(r.classes.iter().all(|c| c.len() == 3));
        let one = resolve(&build_sts(3).unwrap(), 1).unwrap().unwrap();
        assert_eq!(one.classes, vec![vec![0]]);
        // STS(7) has no near-parallel resolution: 7 blocks, classes of 2.
        assert_eq!(resolve(&build_sts(7).unwrap(), 1).unwrap(), None);
    }

    #[test]
    fn kirkman_sets() {
        let l = build_lkts9().unwrap();
        assert_eq!(l.members.len(), 7);
        assert!(l.resolutions.iter().all(|r| r.classes.len() == 4));
        let o = build_olkts9().unwrap();
        assert_eq!(o.members.len(), 10);
        assert!(o.members.iter().all(|m| m.block_count() == 12));
    }
}
