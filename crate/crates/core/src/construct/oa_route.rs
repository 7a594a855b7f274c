//! `TOC_q(n,4,3)` from an `OA(3,n+2,g)` and a partition of the triples into
//! pair packings.

use serde::{Deserialize, Serialize};

use super::{finish, route, word, Construction, Route};
use crate::algebra::{build_oa, row_blocks};
use crate::colorings::baranyai;
use crate::designs::build_opt;
use crate::error::{Error, Result};
use crate::hamming::{binomial, reduce_mod, Params, Word};

/// Where the packings come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum D4Source {
    /// An optimal `PT(n)`.
    Opt,
    /// Classes of an almost-regular edge-coloring of `K_n^3`.
    Baranyai,
}

/// Tiles `C_{i,j,k}`: the rows of the OA block with last two columns
/// `(j, i)` stamped onto the packings, part `s` taking row `k + s`.
pub fn toc_d4_oa(q: u32, n: usize, source: D4Source) -> Result<Construction> {
    let p = Params::new(q, n, 4, 3)?;
    let g = p.g();
    let (parts, theorem, what): (Vec<Vec<Vec<usize>>>, Route, String) = match source {
        D4Source::Opt => {
            let opt = build_opt(n)?;
            let m = opt.members.len();
            if (g as usize) < m {
                return Err(Error::unsupported(format!(
                    "g = {g} is below m = {m}, the part count of OPT({n})"
                )));
            }
            (
                opt.members.into_iter().map(|d| d.blocks).collect(),
                Route::D4OaOpt,
                format!("OPT({n}) with {m} parts"),
            )
        }
        D4Source::Baranyai => {
            let r = binomial(n, 3).div_ceil((n / 3) as u128) as usize;
            if (g as usize) < r {
                return Err(Error::unsupported(format!(
                    "g = {g} is below r = ⌈C(n,3)/⌊n/3⌋⌉ = {r} color classes"
                )));
            }
            let c = baranyai(n, 3, 1, true)?;
            (
                c.classes,
                Route::D4OaBaranyai,
                format!("baranyai(n={n}, w=3, ceil) with {r} classes"),
            )
        }
    };
    let oa = build_oa(3, n + 2, g)
        .map_err(|e| Error::unsupported(format!("OA(3,{},{g}) not constructible: {e}", n + 2)))?;
    let blocks = row_blocks(&oa, 2)?;
    let mut tiles: Vec<Vec<Word>> = Vec::with_capacity(blocks.len() * g as usize);
    for block in &blocks {
        for k in 1..=g {
            let mut tile = Vec::with_capacity(binomial(n, 3) as usize);
            for (s, part) in parts.iter().enumerate() {
                let r = reduce_mod(k as i64 + s as i64 + 1, g) as usize;
                let row = oa.row(block.rows[r - 1]);
                for b in part {
                    let set: Vec<(usize, u8)> = b.iter().map(|&x| (x, row[x - 1] as u8)).collect();
                    tile.push(word(n, q, &set));
                }
            }
            tiles.push(tile);
        }
    }
    finish(
        p,
        tiles,
        route(theorem, &[&format!("OA(3,{},{g})", n + 2), &what]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q5_n4_matches_toc443_shape() {
        let c = toc_d4_oa(5, 4, D4Source::Opt).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (64, vec![4])
        );
    }

    #[test]
    fn baranyai_threshold() {
        let e = toc_d4_oa(8, 6, D4Source::Baranyai).unwrap_err();
        assert!(
            matches!(e, Error::Unsupported(ref m) if m.contains("r = ")),
            "{e}"
        );
    }

    #[test]
    fn opt_threshold() {
        assert!(matches!(
            toc_d4_oa(5, 6, D4Source::Opt),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn baranyai_route_small() {
        // r = ⌈4/1⌉ = 4 classes, OA(3,6,4).
        let c = toc_d4_oa(5, 4, D4Source::Baranyai).unwrap();
        assert_eq!(c.tiling.tile_count(), 64);
    }
}
