//! H-designs and H-packings viewed as constant-weight codes.
//!
//! With `n` groups of size `g`, point `j` of group `x` is the coordinate
//! value `(x, j)`; a transverse block is then a word of weight `w` over an
//! alphabet of size `g + 1`.

use serde::{Deserialize, Serialize};

use super::{BlockDesign, DesignKind};
use crate::error::{Error, Result};
use crate::hamming::{binomial, distance_unchecked, ConstantWeightCode, Space, Word};
use crate::verify::verify_design;

/// Outcome of [`gs_check`] or [`gmhp_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCheck {
    pub ok: bool,
    /// The H-design (or H-packing) coverage and transversality property.
    pub coverage_ok: bool,
    /// Minimum distance of the associated code (`2w` for fewer than two
    /// blocks).
    pub distance: usize,
    pub required_distance: usize,
    /// Block count equals `C(n,t) g^(t-1) / C(w,t)`.
    pub asterisk: bool,
    pub blocks: usize,
    pub asterisk_blocks: Option<u128>,
}

/// Points `(x-1) g + j` for `x` in `1..=n`, `j` in `1..=g`, grouped by `x`.
pub fn design_from_code(code: &ConstantWeightCode, t: usize, kind: DesignKind) -> BlockDesign {
    let s = code.space();
    let g = s.g() as usize;
    let blocks = code
        .words()
        .iter()
        .map(|w| {
            w.to_set()
                .iter()
                .map(|&(x, j)| (x - 1) * g + j as usize)
                .collect()
        })
        .collect();
    let groups = (0..s.n)
        .map(|x| (1..=g).map(|j| x * g + j).collect())
        .collect();
    BlockDesign::new(s.n * g, t, s.w, kind, blocks).with_groups(groups)
}

/// The associated code: group index is the coordinate, rank inside the
/// group the symbol.
pub fn code_from_design(d: &BlockDesign) -> Result<ConstantWeightCode> {
    let groups = d
        .groups
        .as_ref()
        .ok_or_else(|| Error::param("design has no group structure"))?;
    let g = groups.iter().map(Vec::len).max().unwrap_or(0);
    if g == 0 || groups.iter().any(|gr| gr.len() != g) {
        return Err(Error::param("groups must all have the same positive size"));
    }
    let space = Space::new(g as u32 + 1, groups.len(), d.w)?;
    let locate = |p: usize| -> Option<(usize, u8)> {
        groups.iter().enumerate().find_map(|(x, gr)| {
            gr.iter()
                .position(|&y| y == p)
                .map(|j| (x + 1, j as u8 + 1))
        })
    };
    let mut words = Vec::with_capacity(d.blocks.len());
    for b in &d.blocks {
        let set: Option<Vec<(usize, u8)>> = b.iter().map(|&p| locate(p)).collect();
        let set = set
            .ok_or_else(|| Error::param(format!("block {b:?} uses a point outside the groups")))?;
        words.push(Word::from_set(groups.len(), space.q, &set)?);
    }
    ConstantWeightCode::new(space, words)
}

fn check(d: &BlockDesign, kind: DesignKind, required: usize) -> Result<HCheck> {
    let groups = d
        .groups
        .as_ref()
        .ok_or_else(|| Error::param("GS/GMHP checks need a group structure"))?;
    let n = groups.len();
    let g = groups.first().map_or(0, Vec::len);
    let coverage_ok = verify_design(&BlockDesign { kind, ..d.clone() }).ok;
    let (distance, blocks) = match code_from_design(d) {
        Ok(code) => {
            let words = code.words();
            let mut best = 2 * d.w;
            for i in 0..words.len() {
                for j in i + 1..words.len() {
                    best = best.min(distance_unchecked(&words[i], &words[j]));
                }
            }
            (best, words.len())
        }
        Err(_) => (0, d.blocks.len()),
    };
    let (num, den) = (
        binomial(n, d.t) * (g as u128).pow(d.t.saturating_sub(1) as u32),
        binomial(d.w, d.t),
    );
    let asterisk_blocks = (den > 0 && num % den == 0).then(|| num / den);
    Ok(HCheck {
        ok: coverage_ok && distance >= required,
        coverage_ok,
        distance,
        required_distance: required,
        asterisk: asterisk_blocks == Some(blocks as u128),
        blocks,
        asterisk_blocks,
    })
}

/// Generalized Steiner system: an `H(n,g,w,t)` whose code has distance
/// `2(w-t)+1`.
pub fn gs_check(d: &BlockDesign) -> Result<HCheck> {
    check(d, DesignKind::HDesign, 2 * (d.w - d.t) + 1)
}

/// H-packing whose code has distance `2(w-t+1)`; `asterisk` flags the
/// maximum possible block count.
pub fn gmhp_check(d: &BlockDesign) -> Result<HCheck> {
    check(d, DesignKind::HPacking, 2 * (d.w - d.t + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{optimal_code, DEFAULT_ORACLE_CAP};
    use crate::hamming::Params;

    #[test]
    fn sts_is_gmhp_with_asterisk() {
        let sts = super::super::build_sts(9).unwrap();
        let d = BlockDesign {
            groups: Some((1..=9).map(|x| vec![x]).collect()),
            ..sts
        };
        let c = gmhp_check(&d).unwrap();
        assert!(c.ok && c.asterisk);
        assert_eq!(c.distance, 4);
    }

    #[test]
    fn oracle_gmhp_2_3_5_3() {
        let code = optimal_code(&Params::new(4, 5, 4, 3).unwrap(), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(code.len(), 10);
        let d = design_from_code(&code, 2, DesignKind::HPacking);
        let c = gmhp_check(&d).unwrap();
        assert!(c.ok && c.asterisk, "{c:?}");
        assert_eq!(code_from_design(&d).unwrap(), code);
    }

    #[test]
    fn missing_groups_rejected() {
        let d = super::super::build_sts(7).unwrap();
        assert!(matches!(gs_check(&d), Err(Error::Parameter(_))));
    }
}
