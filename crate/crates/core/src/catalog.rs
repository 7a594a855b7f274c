//! Small objects shipped as JSON data: printed tilings, tables and designs
//! that are cheaper to store than to search for.
//!
//! Entries are embedded at build time; setting `TOC_CATALOG_DIR` makes the
//! loader read `<dir>/<name>.json` instead.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::designs::{BlockDesign, DesignKind, LargeSet, LargeSetTarget};
use crate::error::{Error, Result};
use crate::hamming::{ConstantWeightCode, Params, Tiling, Word};

pub const CATALOG_ENV: &str = "TOC_CATALOG_DIR";

const EMBEDDED: &[(&str, &str)] = &[
    ("toc_3_4_4_3", include_str!("../catalog/toc_3_4_4_3.json")),
    ("toc_3_4_3_3", include_str!("../catalog/toc_3_4_3_3.json")),
    ("toc_2_5_4_3", include_str!("../catalog/toc_2_5_4_3.json")),
    ("opt7", include_str!("../catalog/opt7.json")),
    ("lgs_1_3_8_3", include_str!("../catalog/lgs_1_3_8_3.json")),
    (
        "lgs_1_3_8_3_printed",
        include_str!("../catalog/lgs_1_3_8_3_printed.json"),
    ),
    ("sqs8", include_str!("../catalog/sqs8.json")),
    ("sqs10", include_str!("../catalog/sqs10.json")),
];

/// Header fields common to every entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryInfo {
    pub name: String,
    pub kind: String,
    pub description: String,
    pub provenance: String,
}

pub fn names() -> Vec<&'static str> {
    EMBEDDED.iter().map(|(n, _)| *n).collect()
}

fn raw(name: &str) -> Result<Value> {
    let text = match std::env::var_os(CATALOG_ENV) {
        Some(dir) => {
            let path = std::path::Path::new(&dir).join(format!("{name}.json"));
            std::fs::read_to_string(&path)
                .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?
        }
        None => EMBEDDED
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| Error::Catalog(format!("no catalog entry named {name}")))?,
    };
    serde_json::from_str(&text).map_err(|e| Error::Catalog(format!("{name}: {e}")))
}

fn field<T: for<'de> Deserialize<'de>>(v: &Value, name: &str, key: &str) -> Result<T> {
    let f = v
        .get(key)
        .ok_or_else(|| Error::Catalog(format!("{name}: missing field {key}")))?;
    serde_json::from_value(f.clone()).map_err(|e| Error::Catalog(format!("{name}.{key}: {e}")))
}

fn expect_kind(v: &Value, name: &str, kind: &str) -> Result<()> {
    let k: String = field(v, name, "kind")?;
    if k == kind {
        Ok(())
    } else {
        Err(Error::Catalog(format!("{name} is a {k}, not a {kind}")))
    }
}

pub fn info(name: &str) -> Result<EntryInfo> {
    let v = raw(name)?;
    Ok(EntryInfo {
        name: field(&v, name, "name")?,
        kind: field(&v, name, "kind")?,
        description: field(&v, name, "description")?,
        provenance: field(&v, name, "provenance")?,
    })
}

pub fn list() -> Result<Vec<EntryInfo>> {
    names().into_iter().map(info).collect()
}

fn params(v: &Value, name: &str) -> Result<Params> {
    Params::new(
        field(v, name, "q")?,
        field(v, name, "n")?,
        field(v, name, "d")?,
        field(v, name, "w")?,
    )
}

/// A tiling stored as symbol vectors, exactly as listed.
pub fn tiling(name: &str) -> Result<Tiling> {
    let v = raw(name)?;
    expect_kind(&v, name, "tiling")?;
    let p = params(&v, name)?;
    let tiles: Vec<Vec<Vec<u8>>> = field(&v, name, "tiles")?;
    let codes = tiles
        .into_iter()
        .map(|t| {
            let words = t
                .into_iter()
                .map(|s| Word::new(p.q, s))
                .collect::<Result<Vec<_>>>()?;
            ConstantWeightCode::new(p.space(), words)
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Catalog(format!("{name}: {e}")))?;
    let provenance: String = field(&v, name, "provenance")?;
    Tiling::new(p, codes, format!("catalog {name} ({provenance})"))
}

/// Codes stored in set notation `[position, symbol]`, with their parameters.
pub fn codes(name: &str) -> Result<(Params, Vec<ConstantWeightCode>)> {
    let v = raw(name)?;
    expect_kind(&v, name, "codes")?;
    let p = params(&v, name)?;
    let systems: Vec<Vec<Vec<(usize, u8)>>> = field(&v, name, "codes")?;
    let codes = systems
        .into_iter()
        .map(|s| {
            let words = s
                .iter()
                .map(|set| Word::from_set(p.n, p.q, set))
                .collect::<Result<Vec<_>>>()?;
            ConstantWeightCode::new(p.space(), words)
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Catalog(format!("{name}: {e}")))?;
    Ok((p, codes))
}

pub fn design(name: &str) -> Result<BlockDesign> {
    let v = raw(name)?;
    expect_kind(&v, name, "design")?;
    Ok(BlockDesign::new(
        field(&v, name, "n")?,
        field(&v, name, "t")?,
        field(&v, name, "w")?,
        DesignKind::Steiner,
        field(&v, name, "blocks")?,
    ))
}

pub fn large_set(name: &str) -> Result<LargeSet> {
    let v = raw(name)?;
    expect_kind(&v, name, "large_set")?;
    let n: usize = field(&v, name, "n")?;
    let t: usize = field(&v, name, "t")?;
    let w: usize = field(&v, name, "w")?;
    let target: LargeSetTarget = field(&v, name, "target")?;
    let members: Vec<Vec<Vec<usize>>> = field(&v, name, "members")?;
    let kind = if target == LargeSetTarget::OptPt {
        DesignKind::Packing
    } else {
        DesignKind::Steiner
    };
    Ok(LargeSet {
        n,
        w,
        target,
        members: members
            .into_iter()
            .map(|b| BlockDesign::new(n, t, w, kind, b))
            .collect(),
        resolutions: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        for e in list().unwrap() {
            let ok = match e.kind.as_str() {
                "tiling" => tiling(&e.name).is_ok(),
                "codes" => codes(&e.name).is_ok(),
                "design" => design(&e.name).is_ok(),
                "large_set" => large_set(&e.name).is_ok(),
                _ => false,
            };
            assert!(ok, "{}", e.name);
        }
    }

    #[test]
    fn kinds_are_checked() {
        assert!(matches!(design("opt7"), Err(Error::Catalog(_))));
        assert!(matches!(tiling("nope"), Err(Error::Catalog(_))));
    }
}
