//! Blow-ups of small generalized Steiner systems and H-packings along
//! Steiner systems and their resolutions, and the catalog expansion of
//! `TOC_4(8,5,3)`.

use super::{finish, route, Construction, Route};
use crate::catalog;
use crate::clique::{optimal_code, DEFAULT_ORACLE_CAP};
use crate::designs::{
    build_pg2, code_from_design, design_from_code, gmhp_check, gs_check, BlockDesign, DesignKind,
    Resolution,
};
use crate::error::{Error, Result};
use crate::hamming::{binomial, reduce_mod, ConstantWeightCode, Params, Space, Tiling, Word};
use crate::verify::{verify_code, verify_design, verify_resolution};

/// The words of `code` (length `w'`) moved onto `block` by the
/// order-preserving bijection `[w'] → block`, as words of length `n`.
pub fn instantiate(code: &ConstantWeightCode, block: &[usize], n: usize) -> Result<Vec<Word>> {
    let s = code.space();
    if block.len() != s.n
        || block.windows(2).any(|p| p[0] >= p[1])
        || block.iter().any(|&x| x == 0 || x > n)
    {
        return Err(Error::param(format!(
            "block {block:?} is not an increasing {}-subset of 1..={n}",
            s.n
        )));
    }
    Ok(code
        .words()
        .iter()
        .map(|w| {
            let mut sym = vec![0u8; n];
            for (p, &a) in w.symbols().iter().enumerate() {
                sym[block[p] - 1] = a;
            }
            Word::from_raw(s.q, sym)
        })
        .collect())
}

fn assemble(code: &ConstantWeightCode, blocks: &[Vec<usize>], n: usize) -> Result<Vec<Word>> {
    let mut out = Vec::with_capacity(blocks.len() * code.len());
    for b in blocks {
        out.extend(instantiate(code, b, n)?);
    }
    Ok(out)
}

fn check_steiner(d: &BlockDesign, t: usize, w_prime: usize) -> Result<()> {
    if d.t != t || d.w != w_prime || d.kind != DesignKind::Steiner {
        return Err(Error::param(format!(
            "need an S({t},{w_prime},n), got an S({},{},{})",
            d.t,
            d.w,
            d.n()
        )));
    }
    let v = verify_design(d);
    if !v.ok {
        return Err(Error::Verification(format!(
            "Steiner system: {}",
            v.summary()
        )));
    }
    Ok(())
}

/// Each base tile must be a GS (odd `d`) or an asterisked GMHP (even `d`)
/// of strength `t`.
fn check_base(base: &Tiling, t: usize, packing: bool) -> Result<()> {
    let p = base.params;
    let need = if packing {
        2 * (p.w - t + 1)
    } else {
        2 * (p.w - t) + 1
    };
    if p.d != need {
        return Err(Error::param(format!(
            "base distance {} is not {need} for strength {t}",
            p.d
        )));
    }
    for (j, tile) in base.tiles.iter().enumerate() {
        let kind = if packing {
            DesignKind::HPacking
        } else {
            DesignKind::HDesign
        };
        let d = design_from_code(tile, t, kind);
        let c = if packing {
            gmhp_check(&d)?
        } else {
            gs_check(&d)?
        };
        if !c.ok || (packing && !c.asterisk) {
            return Err(Error::Verification(format!(
                "base tile {j} fails the {} check: {c:?}",
                if packing { "GMHP*" } else { "GS" }
            )));
        }
    }
    Ok(())
}

/// A `GS(t,w,n,g)` from an `S(t,w',n)` and a `GS(t,w,w',g)`: the base
/// system placed on every block.
pub fn lgs_expand(
    steiner: &BlockDesign,
    base: &ConstantWeightCode,
    t: usize,
) -> Result<ConstantWeightCode> {
    let s = base.space();
    check_steiner(steiner, t, s.n)?;
    let c = gs_check(&design_from_code(base, t, DesignKind::HDesign))?;
    if !c.ok {
        return Err(Error::Verification(format!(
            "base is not a GS({t},{},{},{}): {c:?}",
            s.w,
            s.n,
            s.g()
        )));
    }
    let n = steiner.n();
    let space = Space::new(s.q, n, s.w)?;
    let code = ConstantWeightCode::from_parts(space, assemble(base, &steiner.blocks, n)?);
    let expected = binomial(n, t) * (s.g() as u128).pow(t as u32) / binomial(s.w, t);
    let v = verify_code(&code, 2 * (s.w - t) + 1, Some(expected));
    if !v.ok {
        return Err(Error::Verification(format!("expanded GS: {}", v.summary())));
    }
    Ok(code)
}

fn recurse(res: &Resolution, base: &Tiling, packing: bool, theorem: Route) -> Result<Construction> {
    let bp = base.params;
    let t = res.class_strength;
    let design = &res.design;
    if design.t != bp.w || design.w != bp.n {
        return Err(Error::param(format!(
            "need a resolution of an S({},{},n), got one of an S({},{},{})",
            bp.w,
            bp.n,
            design.t,
            design.w,
            design.n()
        )));
    }
    let v = verify_resolution(res);
    if !v.ok {
        return Err(Error::Verification(format!("resolution: {}", v.summary())));
    }
    check_base(base, t, packing)?;
    let n = design.n();
    let p = Params::new(bp.q, n, bp.d, bp.w)?;
    let mut tiles = Vec::with_capacity(res.classes.len() * base.tile_count());
    for i in 0..res.classes.len() {
        let blocks = res.class_blocks(i);
        for tile in &base.tiles {
            tiles.push(assemble(tile, &blocks, n)?);
        }
    }
    finish(
        p,
        tiles,
        route(
            theorem,
            &[
                &format!(
                    "{t}-resolution of S({},{},{n}) with {} classes",
                    design.t,
                    design.w,
                    res.classes.len()
                ),
                &format!("base tiling of {bp} with {} tiles", base.tile_count()),
            ],
        ),
    )
}

/// Tile `C_i^j` is base tile `j` placed on every block of class `i`.
pub fn toc_recursive(res: &Resolution, base: &Tiling) -> Result<Construction> {
    recurse(res, base, false, Route::TocRecursive)
}

/// [`toc_recursive`] for even distance, from a large set of asterisked
/// GMHPs.
pub fn gmhp_recursive(res: &Resolution, base: &Tiling) -> Result<Construction> {
    recurse(res, base, true, Route::GmhpRecursive)
}

/// A GMHP from an `S(t,w',n)` and an asterisked `GMHP(t,w,w',g)`; the
/// result has `C(n,t) g^(t-1) / C(w,t)` blocks.
pub fn gmhp_expand(steiner: &BlockDesign, base: &BlockDesign) -> Result<BlockDesign> {
    let c = gmhp_check(base)?;
    if !c.ok || !c.asterisk {
        return Err(Error::Verification(format!("base is not a GMHP*: {c:?}")));
    }
    let code = code_from_design(base)?;
    let s = code.space();
    let t = base.t;
    check_steiner(steiner, t, s.n)?;
    let n = steiner.n();
    let space = Space::new(s.q, n, s.w)?;
    let big = ConstantWeightCode::from_parts(space, assemble(&code, &steiner.blocks, n)?);
    let expected = binomial(n, t) * (s.g() as u128).pow(t as u32 - 1) / binomial(s.w, t);
    if big.len() as u128 != expected {
        return Err(Error::invariant(format!(
            "expanded GMHP has {} blocks, expected {expected}",
            big.len()
        )));
    }
    let d = design_from_code(&big, t, DesignKind::HPacking);
    let c = gmhp_check(&d)?;
    if !c.ok || !c.asterisk {
        return Err(Error::Verification(format!(
            "expanded GMHP fails its check: {c:?}"
        )));
    }
    Ok(d)
}

/// The optimal `(21,4,3)_4` code: `PG(2,4)` blown up by the searched
/// `GMHP*(2,3,5,3)`.
pub fn gmhp21() -> Result<ConstantWeightCode> {
    let pg = build_pg2(4)?;
    let base = optimal_code(&Params::new(4, 5, 4, 3)?, DEFAULT_ORACLE_CAP)?;
    let d = gmhp_expand(&pg, &design_from_code(&base, 2, DesignKind::HPacking))?;
    let code = code_from_design(&d)?;
    let v = verify_code(&code, 4, Some(210));
    if !v.ok {
        return Err(Error::Verification(format!(
            "(21,4,3)_4 code: {}",
            v.summary()
        )));
    }
    Ok(code)
}

/// `TOC_4(8,5,3)`: the nine catalog `GS(1,3,8,3)`s under the group of
/// order 21 generated by `α: x_i → x_(i+1)` and `β: x_i → (x+1)_i` on
/// `x ∈ [7]`, fixing `8_i`.
pub fn expand_lgs138() -> Result<Construction> {
    let name = "lgs_1_3_8_3";
    let (p, codes) = catalog::codes(name)?;
    let mut tiles = Vec::with_capacity(codes.len() * 21);
    for code in &codes {
        for a in 0..3 {
            for e in 0..7 {
                tiles.push(
                    code.words()
                        .iter()
                        .map(|w| {
                            let mut sym = vec![0u8; p.n];
                            for (x, s) in w.to_set() {
                                let y = if x == 8 {
                                    8
                                } else {
                                    reduce_mod(x as i64 + e, 7) as usize
                                };
                                sym[y - 1] = reduce_mod(s as i64 + a, 3);
                            }
                            Word::from_raw(p.q, sym)
                        })
                        .collect(),
                );
            }
        }
    }
    finish(
        p,
        tiles,
        route(Route::Catalog, &[name, "<α, β> of order 21"]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{build_2resolvable_sqs16, build_lsts, build_sts};

    #[test]
    fn lgs138_counts() {
        let c = expand_lgs138().unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (189, vec![8])
        );
        let (_, codes) = catalog::codes("lgs_1_3_8_3").unwrap();
        let first = Word::from_set(8, 4, &[(1, 1), (2, 1), (3, 1)]).unwrap();
        assert!(codes[0].words().contains(&first));
    }

    #[test]
    fn printed_table_is_not_closed_under_the_group() {
        let (_, codes) = catalog::codes("lgs_1_3_8_3_printed").unwrap();
        assert_eq!(codes.len(), 9);
        let mut seen = std::collections::HashSet::new();
        let mut dup = 0;
        for code in &codes {
            for a in 0..3 {
                for e in 0..7 {
                    for w in code.words() {
                        let set: Vec<(usize, u8)> = w
                            .to_set()
                            .into_iter()
                            .map(|(x, s)| {
                                (
                                    if x == 8 {
                                        8
                                    } else {
                                        reduce_mod(x as i64 + e, 7) as usize
                                    },
                                    reduce_mod(s as i64 + a, 3),
                                )
                            })
                            .collect();
                        dup += usize::from(!seen.insert(Word::from_set(8, 4, &set).unwrap()));
                    }
                }
            }
        }
        assert!(dup > 0);
    }

    #[test]
    fn sqs16_recursion() {
        let res = build_2resolvable_sqs16().unwrap();
        let base = catalog::tiling("toc_3_4_3_3").unwrap();
        let c = toc_recursive(&res, &base).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (28, vec![160])
        );
        assert_eq!(c.tiling.word_count(), 4480);
    }

    #[test]
    fn single_block_recursion_is_identity() {
        let base = catalog::tiling("toc_3_4_3_3").unwrap();
        let design = BlockDesign::new(4, 3, 4, DesignKind::Steiner, vec![vec![1, 2, 3, 4]]);
        let res = Resolution {
            design,
            classes: vec![vec![0]],
            class_strength: 2,
        };
        let c = toc_recursive(&res, &base).unwrap();
        assert_eq!(c.tiling.tiles, base.tiles);
    }

    #[test]
    fn lsts9_blows_up_binary_base() {
        // All triples of [9] form an S(3,3,9); the LSTS(9) members are
        // 2-resolution classes.
        let ls = build_lsts(9).unwrap();
        let pts: Vec<usize> = (1..=9).collect();
        let blocks = crate::designs::subsets(&pts, 3);
        let classes = ls
            .members
            .iter()
            .map(|m| {
                m.blocks
                    .iter()
                    .map(|b| blocks.iter().position(|x| x == b).unwrap())
                    .collect()
            })
            .collect();
        let design = BlockDesign::new(9, 3, 3, DesignKind::Steiner, blocks);
        let res = Resolution {
            design,
            classes,
            class_strength: 2,
        };
        let base = super::super::toc_binary_w3(3, 4).unwrap().tiling;
        let c = gmhp_recursive(&res, &base).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (7, vec![12])
        );
    }

    #[test]
    fn gmhp_identity_on_sts9() {
        let sts = build_sts(9).unwrap();
        let one = BlockDesign::new(3, 2, 3, DesignKind::HPacking, vec![vec![1, 2, 3]])
            .with_groups(vec![vec![1], vec![2], vec![3]]);
        let d = gmhp_expand(&sts, &one).unwrap();
        assert_eq!(d.blocks, sts.blocks);
    }

    #[test]
    fn gmhp21_size() {
        assert_eq!(gmhp21().unwrap().len(), 210);
    }

    #[test]
    fn lgs_expand_rejects_bad_base() {
        let sts = build_sts(7).unwrap();
        let bad = optimal_code(&Params::new(3, 3, 2, 2).unwrap(), DEFAULT_ORACLE_CAP).unwrap();
        assert!(lgs_expand(&sts, &bad, 2).is_err());
    }
}
