//! Construction, certification and re-verification across modules.

use toc_core::bounds::{exact_value, expected_tile_count};
use toc_core::cert::{Certificate, Manifest};
use toc_core::colorings::two_good_from_olkts;
use toc_core::construct::{construct, gstar_array, toc_d5_gstar, Method, Route};
use toc_core::designs::build_olkts9;
use toc_core::verify::{verify_tiling, ExpectedSize, FailureKind};
use toc_core::{Error, Params};

fn params(q: u32, n: usize, d: usize, w: usize) -> Params {
    Params::new(q, n, d, w).unwrap()
}

#[test]
fn auto_routes() {
    let cases = [
        ((3, 4, 4, 3), Route::Catalog),
        ((4, 6, 2, 3), Route::D2Formula),
        ((2, 9, 4, 3), Route::BinaryW3),
        ((3, 6, 6, 3), Route::D2wColoring),
        ((5, 4, 4, 3), Route::Toc443),
        ((8, 6, 4, 3), Route::D4OaOpt),
        ((3, 9, 5, 3), Route::D5TwoGood),
        ((3, 16, 3, 3), Route::TocRecursive),
        ((4, 8, 5, 3), Route::Catalog),
    ];
    for ((q, n, d, w), route) in cases {
        let p = params(q, n, d, w);
        let c = construct(&p, Method::Auto).unwrap();
        assert_eq!(c.route.theorem, route, "{p}");
        let size = exact_value(&p).exact.unwrap();
        assert!(
            c.tiling.tiles.iter().all(|t| t.len() as u128 == size),
            "{p}"
        );
        if let Some(k) = expected_tile_count(&p) {
            assert_eq!(c.tiling.tile_count() as u128, k, "{p}");
        }
    }
}

#[test]
fn certificate_round_trip_reverifies() {
    let p = params(3, 10, 5, 3);
    let c = construct(&p, Method::D5TwoGood).unwrap();
    let cert = Certificate::from_construction(&c, Manifest::new("test", Some(p), 0, 0));
    let back = Certificate::from_json_str(&cert.to_json_string())
        .unwrap()
        .to_tiling()
        .unwrap();
    assert!(verify_tiling(&back, ExpectedSize::Formula).ok);
}

#[test]
fn tampering_is_witnessed() {
    let c = construct(&params(3, 4, 3, 3), Method::Catalog).unwrap();
    let mut cert = Certificate::from_construction(&c, Manifest::new("test", None, 0, 0));
    let dup = cert.tiles[0][0].clone();
    cert.tiles[1][0] = dup;
    let v = verify_tiling(&cert.to_tiling().unwrap(), ExpectedSize::Formula);
    assert!(v.has(FailureKind::DuplicateWord) && v.has(FailureKind::MissingWord));
}

#[test]
fn gstar_matches_two_good_on_olkts() {
    let col = two_good_from_olkts(&build_olkts9().unwrap()).unwrap();
    let a = toc_d5_gstar(&col, &gstar_array(3, 2).unwrap()).unwrap();
    let b = construct(&params(3, 10, 5, 3), Method::D5TwoGood).unwrap();
    let sorted = |t: &toc_core::Tiling| {
        let mut v: Vec<Vec<_>> = t
            .tiles
            .iter()
            .map(|c| {
                let mut w = c.words().to_vec();
                w.sort();
                w
            })
            .collect();
        v.sort();
        v
    };
    assert_eq!(sorted(&a.tiling), sorted(&b.tiling));
}

#[test]
fn explicit_methods_refuse_other_parameters() {
    let p = params(3, 9, 5, 3);
    for m in [
        Method::D2,
        Method::Binary,
        Method::Toc443,
        Method::D4Oa,
        Method::Recursive,
        Method::Catalog,
    ] {
        assert!(
            matches!(construct(&p, m), Err(Error::Unsupported(_))),
            "{m:?}"
        );
    }
}

#[test]
fn oracle_sizes_agree_on_small_tilings() {
    for (q, n, d, w) in [(3, 4, 4, 3), (3, 4, 3, 3), (4, 4, 4, 3), (2, 5, 4, 3)] {
        let c = construct(&params(q, n, d, w), Method::Auto).unwrap();
        assert!(verify_tiling(&c.tiling, ExpectedSize::Oracle).ok);
    }
}
