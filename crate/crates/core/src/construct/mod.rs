//! Tiling builders. Every builder verifies its output in full before
//! returning it.

pub mod closed;
pub mod colored;
pub mod oa_route;
pub mod recursive;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::colorings::{two_good_from_lkts, two_good_from_olkts};
use crate::designs::{build_2resolvable_sqs16, build_lkts9, build_olkts9};
use crate::error::{Error, Result};
use crate::hamming::{ConstantWeightCode, Params, Tiling, Word};
use crate::verify::{verify_tiling, ExpectedSize, Verdict};

pub use closed::{toc443, toc_binary_w3, toc_d2, toc_d2w};
pub use colored::{gstar_array, toc_d5_2good, toc_d5_gstar};
pub use oa_route::{toc_d4_oa, D4Source};
pub use recursive::{
    expand_lgs138, gmhp21, gmhp_expand, gmhp_recursive, instantiate, lgs_expand, toc_recursive,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    D2Formula,
    D2wColoring,
    BinaryW3,
    Toc443,
    D4OaOpt,
    D4OaBaranyai,
    D5TwoGood,
    D5Gstar,
    LgsExpand,
    TocRecursive,
    GmhpExpand,
    GmhpRecursive,
    Catalog,
}

/// The route taken and the objects it consumed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRoute {
    pub theorem: Route,
    pub inputs: Vec<String>,
}

/// A verified tiling together with how it was made.
#[derive(Debug, Clone)]
pub struct Construction {
    pub tiling: Tiling,
    pub route: ConstructionRoute,
    pub verdict: Verdict,
}

/// Method selector for [`construct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Auto,
    D2,
    D2w,
    Binary,
    Toc443,
    D4Oa,
    D4OaBaranyai,
    #[serde(rename = "d5-2good")]
    D5TwoGood,
    D5Gstar,
    Recursive,
    Catalog,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::param(format!("unknown method {s}")))
    }
}

/// Words are assembled unchecked; [`finish`] certifies the result.
pub(crate) fn word(n: usize, q: u32, set: &[(usize, u8)]) -> Word {
    let mut s = vec![0u8; n];
    for &(x, a) in set {
        s[x - 1] = a;
    }
    Word::from_raw(q, s)
}

/// Wraps tiles, runs the full verifier and refuses anything that fails.
pub(crate) fn finish(
    params: Params,
    tiles: Vec<Vec<Word>>,
    route: ConstructionRoute,
) -> Result<Construction> {
    let space = params.space();
    let tiles = tiles
        .into_iter()
        .map(|t| ConstantWeightCode::from_parts(space, t))
        .collect();
    let provenance = format!("{:?}({})", route.theorem, route.inputs.join(", "));
    let tiling = Tiling::new(params, tiles, provenance)?;
    let verdict = verify_tiling(&tiling, ExpectedSize::Formula);
    if !verdict.ok {
        return Err(Error::Verification(format!(
            "{:?} output for {params}: {}",
            route.theorem,
            verdict.summary()
        )));
    }
    Ok(Construction {
        tiling,
        route,
        verdict,
    })
}

pub(crate) fn route(theorem: Route, inputs: &[&str]) -> ConstructionRoute {
    ConstructionRoute {
        theorem,
        inputs: inputs.iter().map(|s| s.to_string()).collect(),
    }
}

/// Catalog tilings by parameters.
pub fn from_catalog(p: &Params) -> Result<Construction> {
    let name = match (p.q, p.n, p.d, p.w) {
        (3, 4, 4, 3) => "toc_3_4_4_3",
        (3, 4, 3, 3) => "toc_3_4_3_3",
        (2, 5, 4, 3) | (2, 5, 3, 3) => "toc_2_5_4_3",
        (4, 8, 5, 3) => return expand_lgs138(),
        _ => return Err(Error::unsupported(format!("no catalog tiling for {p}"))),
    };
    let t = catalog::tiling(name)?;
    let tiles = t
        .tiles
        .into_iter()
        .map(ConstantWeightCode::into_words)
        .collect();
    finish(*p, tiles, route(Route::Catalog, &[name]))
}

/// Builds a tiling for `p` by the given method; `Auto` tries the catalog,
/// closed forms, the OA route, the coloring routes and the recursion, in
/// that order.
pub fn construct(p: &Params, method: Method) -> Result<Construction> {
    let (q, n, d, w) = (p.q, p.n, p.d, p.w);
    match method {
        Method::Catalog => from_catalog(p),
        Method::D2 => {
            if d != 2 {
                return Err(Error::unsupported("the d2 route needs d = 2"));
            }
            toc_d2(q, n, w)
        }
        Method::D2w => closed::d2w_for(p),
        Method::Binary => {
            if q != 2 || w != 3 {
                return Err(Error::unsupported("the binary route needs q = 2 and w = 3"));
            }
            toc_binary_w3(n, d)
        }
        Method::Toc443 => {
            if (n, d, w) != (4, 4, 3) {
                return Err(Error::unsupported("toc443 needs (n,d,w) = (4,4,3)"));
            }
            toc443(q)
        }
        Method::D4Oa | Method::D4OaBaranyai => {
            if (d, w) != (4, 3) {
                return Err(Error::unsupported("the OA route needs d = 4 and w = 3"));
            }
            let source = if method == Method::D4Oa {
                D4Source::Opt
            } else {
                D4Source::Baranyai
            };
            toc_d4_oa(q, n, source)
        }
        Method::D5TwoGood | Method::D5Gstar => {
            if (q, d, w) != (3, 5, 3) {
                return Err(Error::unsupported(
                    "the 2-good routes are implemented for q = 3, d = 5, w = 3",
                ));
            }
            let coloring = match n {
                9 => two_good_from_lkts(&build_lkts9()?)?,
                10 => two_good_from_olkts(&build_olkts9()?)?,
                _ => {
                    return Err(Error::unsupported(format!(
                        "2-good colorings are available for n = 9 (LKTS) and n = 10 (OLKTS), not n = {n}"
                    )))
                }
            };
            if method == Method::D5TwoGood {
                toc_d5_2good(&coloring, 3)
            } else {
                toc_d5_gstar(&coloring, &gstar_array(3, 2)?)
            }
        }
        Method::Recursive => {
            if (q, n, d, w) != (3, 16, 3, 3) {
                return Err(Error::unsupported(
                    "the shipped recursion inputs cover TOC_3(16,3,3) (2-resolvable SQS(16) with the TOC_3(4,3,3) base)",
                ));
            }
            let res = build_2resolvable_sqs16()?;
            let base = catalog::tiling("toc_3_4_3_3")?;
            toc_recursive(&res, &base)
        }
        Method::Auto => auto(p),
    }
}

fn auto(p: &Params) -> Result<Construction> {
    let (q, n, d, w) = (p.q, p.n, p.d, p.w);
    if let Ok(c) = from_catalog(p) {
        return Ok(c);
    }
    if d == 2 {
        return toc_d2(q, n, w);
    }
    if q == 2 && w == 3 {
        return toc_binary_w3(n, d);
    }
    if d == 2 * w || (q == 2 && d == 2 * w - 1) {
        return closed::d2w_for(p);
    }
    if (n, d, w) == (4, 4, 3) {
        return toc443(q);
    }
    if (d, w) == (4, 3) {
        return match toc_d4_oa(q, n, D4Source::Opt) {
            Err(Error::Unsupported(_)) => toc_d4_oa(q, n, D4Source::Baranyai),
            other => other,
        };
    }
    if (q, d, w) == (3, 5, 3) && (n == 9 || n == 10) {
        return construct(p, Method::D5TwoGood);
    }
    if (q, n, d, w) == (3, 16, 3, 3) {
        return construct(p, Method::Recursive);
    }
    Err(Error::unsupported(format!(
        "no construction route covers {p}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names() {
        assert_eq!("d4-oa".parse::<Method>().unwrap(), Method::D4Oa);
        assert_eq!("d5-2good".parse::<Method>().unwrap(), Method::D5TwoGood);
        assert!("nope".parse::<Method>().is_err());
    }

    #[test]
    fn catalog_route() {
        let c = from_catalog(&Params::new(3, 4, 4, 3).unwrap()).unwrap();
        assert_eq!(c.tiling.tile_count(), 16);
        assert_eq!(c.route.theorem, Route::Catalog);
    }

    #[test]
    fn auto_reports_gaps() {
        let p = Params::new(4, 7, 5, 3).unwrap();
        assert!(matches!(
            construct(&p, Method::Auto),
            Err(Error::Unsupported(_))
        ));
    }
}
