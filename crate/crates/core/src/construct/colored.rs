//! `TOC_q(n,2w-1,w)` from good almost-regular edge-colorings.

use std::collections::HashSet;

use super::{finish, route, word, Construction, Route};
use crate::algebra::{build_oa, row_blocks, OrthogonalArray};
use crate::colorings::{strong_color, validate_g_star, EdgeColoring, StrongColoring};
use crate::error::{Error, Result};
use crate::hamming::{reduce_mod, Params, Word};
use crate::verify::{verify_edge_coloring, verify_strong_coloring};

/// Part index (0-based) of each vertex.
fn delta(n: usize, sc: &StrongColoring) -> Result<Vec<usize>> {
    sc.colour_of(n)
        .into_iter()
        .skip(1)
        .enumerate()
        .map(|(x, c)| c.ok_or_else(|| Error::param(format!("vertex {} is uncoloured", x + 1))))
        .collect()
}

fn stamp(n: usize, q: u32, edge: &[usize], delta: &[usize], row: &[u16], flip: bool) -> Word {
    let set: Vec<(usize, u8)> = edge
        .iter()
        .map(|&x| {
            let v = row[delta[x - 1]] as u8;
            (x, if flip { 3 - v } else { v })
        })
        .collect();
    word(n, q, &set)
}

/// Strong colorings for each group of `g` classes: the supplied ones after
/// checking, otherwise computed.
fn group_colorings(c: &EdgeColoring, g: usize) -> Result<Vec<StrongColoring>> {
    let groups = c.classes.len() / g;
    if c.strong.len() == groups {
        for (s, sc) in c.strong.iter().enumerate() {
            let v = verify_strong_coloring(c.n, &c.group_edges(g, s), c.w, sc);
            if !v.ok {
                return Err(Error::Verification(format!(
                    "strong coloring of group {s}: {}",
                    v.summary()
                )));
            }
        }
        return Ok(c.strong.clone());
    }
    (0..groups)
        .map(|s| strong_color(c.n, &c.group_edges(g, s), c.w))
        .collect()
}

/// Ternary tiles `B_i^s`: row `i` of the full binary `OA(w,w,2)` stamped on
/// the first class of pair `s`, its complement on the second.
pub fn toc_d5_2good(c: &EdgeColoring, w: usize) -> Result<Construction> {
    if c.w != w {
        return Err(Error::param(format!(
            "coloring is {}-uniform, not {w}-uniform",
            c.w
        )));
    }
    let n = c.n;
    let r = c.classes.len();
    if !r.is_multiple_of(2) {
        return Err(Error::unsupported(format!(
            "r = {r} color classes is odd; the pairing needs r even"
        )));
    }
    let a = n % w;
    if 2 * a >= w {
        return Err(Error::unsupported(format!(
            "2a = {} is not below w = {w} (a = n mod w)",
            2 * a
        )));
    }
    let mut checked = c.clone();
    checked.flags.g_good = Some(2);
    checked.flags.g_star_good = None;
    let v = verify_edge_coloring(&checked);
    if !v.ok {
        return Err(Error::Verification(format!(
            "coloring is not 2-good: {}",
            v.summary()
        )));
    }
    let strong = group_colorings(c, 2)?;
    let p = Params::new(3, n, 2 * w - 1, w)?;
    let oa = build_oa(w, w, 2)?;
    let mut tiles = Vec::with_capacity(r / 2 * oa.rows().len());
    for (s, sc) in strong.iter().enumerate() {
        let d = delta(n, sc)?;
        for row in oa.rows() {
            let mut tile: Vec<Word> = c.classes[2 * s]
                .iter()
                .map(|e| stamp(n, 3, e, &d, row, false))
                .collect();
            tile.extend(
                c.classes[2 * s + 1]
                    .iter()
                    .map(|e| stamp(n, 3, e, &d, row, true)),
            );
            tiles.push(tile);
        }
    }
    finish(
        p,
        tiles,
        route(
            Route::D5TwoGood,
            &[
                &format!("2-good coloring of K_{n}^{w} with {r} classes"),
                "OA(w,w,2)",
            ],
        ),
    )
}

/// The array consumed by [`toc_d5_gstar`]: an `OA(w,2w-1,g)` when one is
/// constructible, otherwise the `g^w` rows `(α_1+i, …, α_{w-1}+i, i, α)`
/// for `α ∈ [g]^{w-1}`, `i ∈ [g]`. Both have the two properties the
/// construction uses: the first `w` columns contain every `w`-tuple once,
/// and grouping by the last `w-1` columns gives blocks of `g` rows on which
/// each of the first `w` columns is a permutation.
pub fn gstar_array(w: usize, g: u32) -> Result<OrthogonalArray> {
    if w == 0 || g == 0 {
        return Err(Error::param("gstar_array needs w >= 1 and g >= 1"));
    }
    if let Ok(oa) = build_oa(w, 2 * w - 1, g) {
        return Ok(oa);
    }
    let mut rows = Vec::with_capacity((g as usize).pow(w as u32));
    let alphas = (g as usize).pow(w as u32 - 1);
    for mut code in 0..alphas {
        let mut alpha = vec![0u16; w - 1];
        for c in (0..w - 1).rev() {
            alpha[c] = (code % g as usize) as u16 + 1;
            code /= g as usize;
        }
        for i in 1..=g {
            let mut row: Vec<u16> = alpha
                .iter()
                .map(|&x| reduce_mod(x as i64 + i as i64, g) as u16)
                .collect();
            row.push(i as u16);
            row.extend(&alpha);
            rows.push(row);
        }
    }
    OrthogonalArray::from_rows(w, g, rows)
}

/// Tiles `C_s(α,i) = ∪_t C_{s,t}(α, i+t)`: within group `s`, class `t`
/// takes row `i + t` of row block `R_α`, read through the strong coloring.
pub fn toc_d5_gstar(c: &EdgeColoring, oa: &OrthogonalArray) -> Result<Construction> {
    let (n, w) = (c.n, c.w);
    let g = oa.symbols();
    let gu = g as usize;
    if oa.columns() != 2 * w - 1 || oa.rows().len() != gu.pow(w as u32) {
        return Err(Error::param(format!(
            "need a {}-row array with {} columns over {g} symbols",
            gu.pow(w as u32),
            2 * w - 1
        )));
    }
    let prefixes: HashSet<&[u16]> = oa.rows().iter().map(|r| &r[..w]).collect();
    if prefixes.len() != gu.pow(w as u32) {
        return Err(Error::param(
            "the first w columns of the array repeat a w-tuple",
        ));
    }
    let blocks = row_blocks(oa, w - 1)
        .map_err(|e| Error::param(format!("array has no usable row blocks: {e}")))?;
    let a = n % w;
    if gu * a >= w {
        return Err(Error::unsupported(format!(
            "ga = {} is not below w = {w} (a = n mod w)",
            gu * a
        )));
    }
    let c = validate_g_star(c.clone(), gu)?;
    let p = Params::new(g + 1, n, 2 * w - 1, w)?;
    let q = p.q;
    let mut tiles = Vec::new();
    for (s, sc) in c.strong.iter().enumerate() {
        let d = delta(n, sc)?;
        for block in &blocks {
            for i in 1..=g {
                let mut tile = Vec::with_capacity(gu * (n / w));
                for t in 1..=g {
                    let row = oa.row(block.rows[reduce_mod(i as i64 + t as i64, g) as usize - 1]);
                    let class = &c.classes[s * gu + t as usize - 1];
                    tile.extend(class.iter().map(|e| stamp(n, q, e, &d, row, false)));
                }
                tiles.push(tile);
            }
        }
    }
    finish(
        p,
        tiles,
        route(
            Route::D5Gstar,
            &[
                &format!("{g}*-good coloring of K_{n}^{w}"),
                &format!("{}x{} array over [{g}]", oa.rows().len(), oa.columns()),
            ],
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{two_good_from_lkts, two_good_from_olkts, ColoringFlags};
    use crate::designs::{build_lkts9, build_olkts9};

    fn tile_set(c: &Construction) -> Vec<Vec<Word>> {
        let mut v: Vec<Vec<Word>> = c
            .tiling
            .tiles
            .iter()
            .map(|t| {
                let mut w = t.words().to_vec();
                w.sort();
                w
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn lkts9_route() {
        let col = two_good_from_lkts(&build_lkts9().unwrap()).unwrap();
        let c = toc_d5_2good(&col, 3).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (112, vec![6])
        );
        let gs = toc_d5_gstar(&col, &gstar_array(3, 2).unwrap()).unwrap();
        assert_eq!(tile_set(&c), tile_set(&gs));
    }

    #[test]
    fn olkts9_route() {
        let col = two_good_from_olkts(&build_olkts9().unwrap()).unwrap();
        let c = toc_d5_2good(&col, 3).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (160, vec![6])
        );
    }

    #[test]
    fn degenerate_g1() {
        let col = two_good_from_lkts(&build_lkts9().unwrap()).unwrap();
        // Each parallel class as its own group, with a strong coloring of it.
        let strong = col
            .classes
            .iter()
            .map(|k| strong_color(9, k, 3).unwrap())
            .collect();
        let single = EdgeColoring {
            strong,
            flags: ColoringFlags::default(),
            ..col
        };
        let c = toc_d5_gstar(&single, &gstar_array(3, 1).unwrap()).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (28, vec![3])
        );
    }

    #[test]
    fn gstar_array_blocks() {
        for g in 1..=3 {
            let a = gstar_array(3, g).unwrap();
            assert_eq!(row_blocks(&a, 2).unwrap().len(), (g * g) as usize);
        }
        build_oa(3, 5, 4).unwrap().verify_strength().unwrap();
    }

    #[test]
    fn non_strongly_colorable_rejected() {
        let mut col = two_good_from_lkts(&build_lkts9().unwrap()).unwrap();
        col.strong[3].parts.swap(0, 1);
        let x = col.strong[3].parts[0].pop().unwrap();
        col.strong[3].parts[2].push(x);
        assert!(matches!(
            toc_d5_gstar(&col, &gstar_array(3, 2).unwrap()),
            Err(Error::Verification(_))
        ));
    }

    #[test]
    fn odd_r_rejected() {
        let mut col = two_good_from_lkts(&build_lkts9().unwrap()).unwrap();
        col.classes.pop();
        assert!(matches!(toc_d5_2good(&col, 3), Err(Error::Unsupported(_))));
    }
}
