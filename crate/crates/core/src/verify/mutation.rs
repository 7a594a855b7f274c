//! Single-word mutations of a tiling, for testing the verifier.
//!
//! Every mutation removes or alters exactly one occurrence of one word, so
//! the original word goes missing (or a tile changes size) and a correct
//! verifier must reject the result.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::hamming::{ConstantWeightCode, Tiling, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MutationKind {
    /// Exchange two coordinates holding different symbols within one word.
    Swap,
    /// Drop one word.
    Delete,
    /// Replace one coordinate by a different symbol of the alphabet.
    Flip,
    /// Move one word to another tile.
    Move,
}

pub const ALL_MUTATIONS: [MutationKind; 4] = [
    MutationKind::Swap,
    MutationKind::Delete,
    MutationKind::Flip,
    MutationKind::Move,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    pub kind: MutationKind,
    pub tile: usize,
    pub index: usize,
    pub detail: String,
}

/// Applies one random mutation of `kind`; `None` when the tiling admits
/// none (e.g. `Move` with a single tile).
pub fn mutate(t: &Tiling, kind: MutationKind, rng: &mut impl Rng) -> Option<(Tiling, Mutation)> {
    let nonempty: Vec<usize> = (0..t.tiles.len())
        .filter(|&i| !t.tiles[i].is_empty())
        .collect();
    if nonempty.is_empty() {
        return None;
    }
    let ti = nonempty[rng.gen_range(0..nonempty.len())];
    let wi = rng.gen_range(0..t.tiles[ti].len());
    let word = t.tiles[ti].words()[wi].clone();
    let q = t.params.q;
    let mut tiles: Vec<Vec<Word>> = t.tiles.iter().map(|c| c.words().to_vec()).collect();
    let detail;
    match kind {
        MutationKind::Swap => {
            let s = word.symbols().to_vec();
            let pairs: Vec<(usize, usize)> = (0..s.len())
                .flat_map(|i| (i + 1..s.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| s[i] != s[j])
                .collect();
            if pairs.is_empty() {
                return None;
            }
            let (i, j) = pairs[rng.gen_range(0..pairs.len())];
            let mut s2 = s.clone();
            s2.swap(i, j);
            tiles[ti][wi] = Word::new(q, s2).ok()?;
            detail = format!("swapped coordinates {} and {} of {}", i + 1, j + 1, word);
        }
        MutationKind::Delete => {
            tiles[ti].remove(wi);
            detail = format!("deleted {word}");
        }
        MutationKind::Flip => {
            let pos = rng.gen_range(0..word.len());
            let old = word.symbol(pos);
            let mut new = rng.gen_range(0..q - 1) as u8;
            if new >= old {
                new += 1;
            }
            let mut s2 = word.symbols().to_vec();
            s2[pos] = new;
            tiles[ti][wi] = Word::new(q, s2).ok()?;
            detail = format!(
                "coordinate {} of {} changed {} -> {}",
                pos + 1,
                word,
                old,
                new
            );
        }
        MutationKind::Move => {
            if t.tiles.len() < 2 {
                return None;
            }
            let mut tj = rng.gen_range(0..t.tiles.len() - 1);
            if tj >= ti {
                tj += 1;
            }
            let w = tiles[ti].remove(wi);
            tiles[tj].push(w);
            detail = format!("moved {word} from tile {ti} to tile {tj}");
        }
    }
    let space = t.params.space();
    let codes = tiles
        .into_iter()
        .map(|ws| ConstantWeightCode::from_parts(space, ws))
        .collect();
    let mutated = Tiling {
        params: t.params,
        tiles: codes,
        provenance: format!("{} (mutated)", t.provenance),
    };
    Some((
        mutated,
        Mutation {
            kind,
            tile: ti,
            index: wi,
            detail,
        },
    ))
}
