//! Closed-form and coloring-stamped families: `d = 2`, `d = 2w`, binary
//! weight three and `TOC_q(4,4,3)`.

use std::collections::HashMap;

use super::{finish, from_catalog, route, word, Construction, Route};
use crate::bounds::binary_n43;
use crate::colorings::baranyai;
use crate::designs::{build_lsts, subsets};
use crate::error::{Error, Result};
use crate::hamming::{binomial, reduce_mod, Params, Word};

/// All tuples of `[g]^len` in lexicographic order.
fn tuples(len: usize, g: u32) -> impl Iterator<Item = Vec<u8>> {
    let total = (g as u64).pow(len as u32);
    (0..total).map(move |mut r| {
        let mut v = vec![1u8; len];
        for i in (0..len).rev() {
            v[i] = (r % g as u64) as u8 + 1;
            r /= g as u64;
        }
        v
    })
}

/// `g` tiles; tile `i` holds every word with
/// `b_2 ≡ b_1 + i + b_3 + … + b_w (mod g)`, where `b_j` is the `j`-th
/// nonzero symbol. Any single-symbol change moves a word to another tile.
pub fn toc_d2(q: u32, n: usize, w: usize) -> Result<Construction> {
    let p = Params::new(q, n, 2, w)?;
    let g = p.g();
    let pts: Vec<usize> = (1..=n).collect();
    let supports = subsets(&pts, w);
    let tiles: Vec<Vec<Word>> = (1..=g)
        .map(|i| {
            let mut tile = Vec::new();
            if w == 1 {
                tile.extend((1..=n).map(|x| word(n, q, &[(x, i as u8)])));
                return tile;
            }
            for s in &supports {
                for a in 1..=g {
                    for rest in tuples(w - 2, g) {
                        let sum: i64 = rest.iter().map(|&b| b as i64).sum();
                        let mut set = vec![
                            (s[0], a as u8),
                            (s[1], reduce_mod(a as i64 + i as i64 + sum, g)),
                        ];
                        set.extend(s[2..].iter().zip(&rest).map(|(&x, &b)| (x, b)));
                        tile.push(word(n, q, &set));
                    }
                }
            }
            tile
        })
        .collect();
    finish(p, tiles, route(Route::D2Formula, &[]))
}

/// Tiling with disjoint-support tiles from a Baranyai coloring of
/// `g^w K_n^w`; every occurrence of a support gets the next unused symbol
/// pattern.
pub fn toc_d2w(q: u32, n: usize, w: usize) -> Result<Construction> {
    d2w_for(&Params::new(q, n, 2 * w, w)?)
}

/// The `d = 2w` construction for `p`; binary `d = 2w - 1` codes are the same
/// objects.
pub(crate) fn d2w_for(p: &Params) -> Result<Construction> {
    let (q, n, w) = (p.q, p.n, p.w);
    if !(p.d == 2 * w || (q == 2 && p.d == 2 * w - 1)) {
        return Err(Error::unsupported(format!(
            "the d2w route needs d = 2w, got d = {}",
            p.d
        )));
    }
    let g = p.g();
    let lambda = (g as u64).pow(w as u32);
    let k = (n / w) as u128;
    let total = lambda as u128 * binomial(n, w);
    if !total.is_multiple_of(k) {
        return Err(Error::Nonexistent(format!(
            "TOC_q(n,2w,w) exists iff ⌊n/w⌋ divides (q-1)^w C(n,w); here {k} does not divide {total}"
        )));
    }
    let coloring = baranyai(n, w, lambda, false)?;
    let patterns: Vec<Vec<u8>> = tuples(w, g).collect();
    let mut next: HashMap<&[usize], usize> = HashMap::new();
    let tiles = coloring
        .classes
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|e| {
                    let c = next.entry(e.as_slice()).or_insert(0);
                    let pat = &patterns[*c];
                    *c += 1;
                    let set: Vec<(usize, u8)> =
                        e.iter().copied().zip(pat.iter().copied()).collect();
                    word(n, q, &set)
                })
                .collect()
        })
        .collect();
    finish(
        *p,
        tiles,
        route(
            Route::D2wColoring,
            &[&format!("baranyai(n={n}, w={w}, λ={lambda})")],
        ),
    )
}

/// Binary weight-three tilings for every `d` where they exist.
pub fn toc_binary_w3(n: usize, d: usize) -> Result<Construction> {
    let p = Params::new(2, n, d, 3)?;
    match d {
        2 => toc_d2(2, n, 3),
        5 | 6 => d2w_for(&p),
        _ => {
            let blocks_to_tiles = |members: Vec<Vec<Vec<usize>>>| -> Vec<Vec<Word>> {
                members
                    .into_iter()
                    .map(|blocks| {
                        blocks
                            .iter()
                            .map(|b| word(n, 2, &b.iter().map(|&x| (x, 1)).collect::<Vec<_>>()))
                            .collect()
                    })
                    .collect()
            };
            match n {
                3 | 4 => {
                    let pts: Vec<usize> = (1..=n).collect();
                    let tiles = blocks_to_tiles(subsets(&pts, 3).into_iter().map(|b| vec![b]).collect());
                    finish(p, tiles, route(Route::BinaryW3, &["single triples"]))
                }
                5 => from_catalog(&p),
                _ if n % 6 == 4 || n % 6 == 5 => Err(Error::Nonexistent(format!(
                    "n ≡ 4,5 (mod 6), n >= 10: A_2(n,4,3) = {} does not divide C(n,3) = {}",
                    binary_n43(n),
                    binomial(n, 3)
                ))),
                6 | 7 => Err(Error::Nonexistent(format!(
                    "TOC_2(n,{d},3) exists iff n ∈ {{3,4,5}} or n ≡ 0,1,2,3 (mod 6) with n >= 8; n = {n}"
                ))),
                _ if n % 6 == 1 || n % 6 == 3 => {
                    let ls = build_lsts(n)?;
                    let tiles = blocks_to_tiles(ls.members.into_iter().map(|m| m.blocks).collect());
                    finish(p, tiles, route(Route::BinaryW3, &[&format!("LSTS({n})")]))
                }
                _ => {
                    let ls = build_lsts(n + 1)?;
                    let tiles = blocks_to_tiles(ls.members.iter().map(|m| m.delete_point(n + 1).blocks).collect());
                    finish(p, tiles, route(Route::BinaryW3, &[&format!("LSTS({}) minus point {}", n + 1, n + 1)]))
                }
            }
        }
    }
}

/// `TOC_q(4,4,3)`: `g^3` tiles of four words for `q >= 4`; the catalog for
/// `q = 3`; single words for `q = 2`.
pub fn toc443(q: u32) -> Result<Construction> {
    let p = Params::new(q, 4, 4, 3)?;
    match q {
        2 => return toc_binary_w3(4, 4),
        3 => return from_catalog(&p),
        _ => {}
    }
    let g = p.g();
    let r = |v: u32| reduce_mod(v as i64, g);
    let mut tiles = Vec::with_capacity((g as usize).pow(3));
    for x in 1..=g {
        for y in 1..=g {
            for z in 1..=g {
                // The unique w in [g] with x + y + z + w ≡ 0 (mod g).
                let w = reduce_mod(-((x + y + z) as i64), g) as u32;
                tiles.push(vec![
                    word(4, q, &[(1, r(x)), (2, r(y)), (3, r(z))]),
                    word(4, q, &[(1, r(x + 1)), (2, r(y + 1)), (4, r(w))]),
                    word(4, q, &[(1, r(x + 2)), (3, r(z + 1)), (4, r(w + 2))]),
                    word(4, q, &[(2, r(y + 2)), (3, r(z + 2)), (4, r(w + 1))]),
                ]);
            }
        }
    }
    finish(p, tiles, route(Route::Toc443, &[]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d2_examples() {
        let c = toc_d2(3, 3, 3).unwrap();
        assert_eq!((c.tiling.tile_count(), c.tiling.tile_sizes()), (2, vec![4]));
        assert_eq!(toc_d2(2, 6, 3).unwrap().tiling.tile_count(), 1);
        let c = toc_d2(4, 6, 3).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (3, vec![180])
        );
        assert_eq!(toc_d2(4, 5, 1).unwrap().tiling.tile_sizes(), vec![5]);
    }

    #[test]
    fn d2w_examples() {
        let c = toc_d2w(3, 6, 3).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (80, vec![2])
        );
        assert!(matches!(toc_d2w(2, 7, 3), Err(Error::Nonexistent(_))));
    }

    #[test]
    fn binary_examples() {
        let c = toc_binary_w3(9, 4).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (7, vec![12])
        );
        let c = toc_binary_w3(8, 3).unwrap();
        assert_eq!((c.tiling.tile_count(), c.tiling.tile_sizes()), (7, vec![8]));
        assert_eq!(toc_binary_w3(5, 4).unwrap().tiling.tile_count(), 5);
        assert_eq!(toc_binary_w3(4, 4).unwrap().tiling.tile_count(), 4);
        assert!(matches!(toc_binary_w3(10, 4), Err(Error::Nonexistent(_))));
        assert!(matches!(toc_binary_w3(7, 6), Err(Error::Nonexistent(_))));
        assert!(matches!(toc_binary_w3(7, 4), Err(Error::Nonexistent(_))));
        assert_eq!(toc_binary_w3(6, 6).unwrap().tiling.tile_count(), 10);
    }

    #[test]
    fn toc443_examples() {
        let c = toc443(5).unwrap();
        assert_eq!(
            (c.tiling.tile_count(), c.tiling.tile_sizes()),
            (64, vec![4])
        );
        assert_eq!(toc443(4).unwrap().tiling.tile_count(), 27);
        assert_eq!(toc443(3).unwrap().tiling.tile_count(), 16);
    }
}
