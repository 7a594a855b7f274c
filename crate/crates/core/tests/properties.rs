//! Property tests for the invariants every module promises.

use proptest::prelude::*;
use toc_core::algebra::{build_oa, prime_power, row_blocks};
use toc_core::colorings::{baranyai, strong_color};
use toc_core::construct::{toc_d2, toc_d2w};
use toc_core::hamming::{binomial, hamming_distance, Params, Space, Word};
use toc_core::verify::mutation::{mutate, MutationKind, ALL_MUTATIONS};
use toc_core::verify::{verify_edge_coloring, verify_strong_coloring, verify_tiling, ExpectedSize};

fn space() -> impl Strategy<Value = Space> {
    (2u32..6, 1usize..9)
        .prop_flat_map(|(q, n)| (Just(q), Just(n), 1..=n))
        .prop_map(|(q, n, w)| Space::new(q, n, w).unwrap())
}

fn word(n: usize, q: u32) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..q as u8, n).prop_map(move |s| Word::new(q, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_unrank_round_trip(s in space(), seed in any::<u64>()) {
        let r = (seed as u128) % s.size();
        let w = s.unrank(r).unwrap();
        prop_assert_eq!(w.weight(), s.w);
        prop_assert_eq!(s.rank(&w).unwrap(), r);
    }

    #[test]
    fn ranks_follow_enumeration(s in space()) {
        for (i, w) in s.enumerate(200_000).unwrap().enumerate() {
            prop_assert_eq!(s.rank(&w).unwrap(), i as u128);
        }
    }

    #[test]
    fn set_round_trip(w in (2u32..6, 1usize..10).prop_flat_map(|(q, n)| word(n, q))) {
        let back = Word::from_set(w.len(), w.q(), &w.to_set()).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(w.to_json().to_word().unwrap(), w);
    }

    #[test]
    fn triangle_inequality(
        (x, y, z) in (2u32..5, 1usize..8).prop_flat_map(|(q, n)| (word(n, q), word(n, q), word(n, q)))
    ) {
        let (xy, yz, xz) = (hamming_distance(&x, &y).unwrap(), hamming_distance(&y, &z).unwrap(), hamming_distance(&x, &z).unwrap());
        prop_assert!(xz <= xy + yz);
        prop_assert_eq!(xy, hamming_distance(&y, &x).unwrap());
        prop_assert_eq!(xy == 0, x == y);
    }

    #[test]
    fn oa_strength(g in 2u32..10, t in 1usize..4, extra in 0usize..3) {
        prop_assume!(prime_power(g).is_some() && t < g as usize);
        let k = (t + extra).min(g as usize + 1);
        let oa = build_oa(t, k, g).unwrap();
        prop_assert_eq!(oa.rows().len(), (g as usize).pow(t as u32));
        prop_assert!(oa.verify_strength().is_ok());
        if t >= 2 {
            let blocks = row_blocks(&oa, t - 1).unwrap();
            prop_assert_eq!(blocks.len(), (g as usize).pow(t as u32 - 1));
            prop_assert!(blocks.iter().all(|b| b.rows.len() == g as usize));
        }
    }

    #[test]
    fn baranyai_partitions(n in 3usize..11, w in 2usize..5, lambda in 1u64..4) {
        prop_assume!(w <= n);
        let k = (n / w) as u128;
        prop_assume!((lambda as u128 * binomial(n, w)).is_multiple_of(k));
        let c = baranyai(n, w, lambda, false).unwrap();
        prop_assert!(verify_edge_coloring(&c).ok);
        prop_assert_eq!(c.classes.len() as u128, lambda as u128 * binomial(n, w) / k);
    }

    #[test]
    fn matchings_are_strongly_colourable(n in 3usize..13, w in 2usize..5, rot in 0usize..13) {
        prop_assume!(w <= n);
        let pts: Vec<usize> = (0..n).map(|i| (i + rot) % n + 1).collect();
        let edges: Vec<Vec<usize>> = pts.chunks_exact(w).map(|c| c.to_vec()).collect();
        let sc = strong_color(n, &edges, w).unwrap();
        prop_assert!(verify_strong_coloring(n, &edges, w, &sc).ok);
    }

    #[test]
    fn d2_tilings_verify(q in 2u32..5, n in 2usize..7, w in 1usize..5) {
        prop_assume!(w <= n);
        let c = toc_d2(q, n, w).unwrap();
        prop_assert_eq!(c.tiling.tile_count(), (q - 1) as usize);
        prop_assert!(c.verdict.ok);
    }

    #[test]
    fn mutations_are_caught(seed in any::<u64>(), which in 0usize..4) {
        use rand::SeedableRng;
        let c = toc_d2w(3, 6, 3).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let kind: MutationKind = ALL_MUTATIONS[which];
        if let Some((m, _)) = mutate(&c.tiling, kind, &mut rng) {
            let v = verify_tiling(&m, ExpectedSize::Formula);
            prop_assert!(!v.ok && !v.failures.is_empty());
        }
    }

    #[test]
    fn params_reject_bad_distance(q in 2u32..5, n in 1usize..8, w in 1usize..8, d in 0usize..20) {
        prop_assume!(w <= n);
        prop_assert_eq!(Params::new(q, n, d, w).is_ok(), (2..=2 * w).contains(&d));
    }
}
