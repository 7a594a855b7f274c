//! Certificate files: a tiling with its parameters, provenance, route and
//! the manifest of the run that produced it.

use serde::{Deserialize, Serialize};

use crate::construct::{Construction, ConstructionRoute};
use crate::error::{Error, Result};
use crate::hamming::{ConstantWeightCode, Params, Tiling, WordJson};

pub const SCHEMA: u32 = 1;

/// How a certificate was produced; identical manifests give byte-identical
/// certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub seed: u64,
    pub budget: u64,
    pub version: String,
}

impl Manifest {
    pub fn new(command: impl Into<String>, params: Option<Params>, seed: u64, budget: u64) -> Self {
        Manifest {
            command: command.into(),
            params,
            input: None,
            output: None,
            seed,
            budget,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub manifest: Manifest,
    pub params: Params,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<ConstructionRoute>,
    pub tiles: Vec<Vec<WordJson>>,
}

impl Certificate {
    pub fn from_tiling(t: &Tiling, route: Option<ConstructionRoute>, manifest: Manifest) -> Self {
        Certificate {
            schema: SCHEMA,
            manifest,
            params: t.params,
            provenance: t.provenance.clone(),
            route,
            tiles: t
                .tiles
                .iter()
                .map(|c| c.words().iter().map(|w| w.to_json()).collect())
                .collect(),
        }
    }

    pub fn from_construction(c: &Construction, manifest: Manifest) -> Self {
        Self::from_tiling(&c.tiling, Some(c.route.clone()), manifest)
    }

    /// Rebuilds the tiling, checking every word against the declared space.
    pub fn to_tiling(&self) -> Result<Tiling> {
        if self.schema != SCHEMA {
            return Err(Error::param(format!(
                "certificate schema {} is not {SCHEMA}",
                self.schema
            )));
        }
        let p = Params::new(self.params.q, self.params.n, self.params.d, self.params.w)?;
        let tiles = self
            .tiles
            .iter()
            .map(|t| {
                ConstantWeightCode::new(
                    p.space(),
                    t.iter()
                        .map(WordJson::to_word)
                        .collect::<Result<Vec<_>>>()?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Tiling::new(p, tiles, self.provenance.clone())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::param(format!("malformed certificate: {e}")))
    }
}

/// One line per tile, words as `pos.sym` triples separated by two spaces.
pub fn paper_style(t: &Tiling) -> String {
    let width = t.tile_count().to_string().len();
    let mut out = format!(
        "TOC_{}({},{},{}): {} tiles\n",
        t.params.q,
        t.params.n,
        t.params.d,
        t.params.w,
        t.tile_count()
    );
    for (i, tile) in t.tiles.iter().enumerate() {
        let words: Vec<String> = tile.words().iter().map(|w| w.paper_style()).collect();
        out.push_str(&format!("{:>width$}: {}\n", i + 1, words.join("  ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::construct::{construct, Method};

    #[test]
    fn round_trip() {
        let c = construct(&Params::new(3, 4, 4, 3).unwrap(), Method::Auto).unwrap();
        let m = Manifest::new("construct", Some(c.tiling.params), 0, 0);
        let cert = Certificate::from_construction(&c, m);
        let text = cert.to_json_string();
        let back = Certificate::from_json_str(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_tiling().unwrap().tiles, c.tiling.tiles);
        assert!(text.contains("\"schema\": 1"));
    }

    #[test]
    fn wrong_schema_rejected() {
        let t = catalog::tiling("toc_3_4_4_3").unwrap();
        let mut cert = Certificate::from_tiling(&t, None, Manifest::new("verify", None, 0, 0));
        cert.schema = 2;
        assert!(cert.to_tiling().is_err());
    }

    #[test]
    fn paper_style_lines() {
        let t = catalog::tiling("toc_3_4_4_3").unwrap();
        let s = paper_style(&t);
        assert_eq!(s.lines().count(), 17);
        assert!(s.lines().nth(1).unwrap().starts_with(" 1: 1.1 2.1 3.1"));
    }
}
