//! Projective planes `PG(2,m)` over `GF(m)`.

use super::{require_verified, BlockDesign, DesignKind};
use crate::algebra::FiniteField;
use crate::error::Result;
use crate::verify::verify_design;

/// The lines of `PG(2,m)` as an `S(2, m+1, m^2+m+1)`. Points are the
/// normalised vectors of `GF(m)^3` (first nonzero entry 1) in lexicographic
/// order; the line of a normalised `u` is `{v : u·v = 0}`.
pub fn build_pg2(m: u32) -> Result<BlockDesign> {
    let f = FiniteField::new(m)?;
    let mut pts: Vec<[u32; 3]> = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    let dot = |u: &[u32; 3], v: &[u32; 3]| (0..3).fold(0, |acc, i| f.add(acc, f.mul(u[i], v[i])));
    let blocks = pts
        .iter()
        .map(|u| {
            (0..pts.len())
                .filter(|&j| dot(u, &pts[j]) == 0)
                .map(|j| j + 1)
                .collect()
        })
        .collect();
    let d = BlockDesign::new(pts.len(), 2, m as usize + 1, DesignKind::Steiner, blocks);
    require_verified("PG(2,m)", verify_design(&d))?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_and_pg24() {
        assert_eq!(build_pg2(2).unwrap().block_count(), 7);
        let d = build_pg2(4).unwrap();
        assert_eq!((d.n(), d.block_count(), d.w), (21, 21, 5));
    }
}
