//! The acceptance matrix: each criterion rebuilds its objects, verifies
//! them in full and checks the expected counts within a time limit.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::bounds::{clique_oracle, exact_value};
use crate::catalog;
use crate::clique::DEFAULT_ORACLE_CAP;
use crate::colorings::{baranyai, two_good_from_lkts, two_good_from_olkts};
use crate::construct::{
    expand_lgs138, gmhp21, toc443, toc_binary_w3, toc_d2, toc_d2w, toc_d4_oa, toc_d5_2good,
    toc_recursive, Construction, D4Source,
};
use crate::designs::{
    build_2resolvable_sqs16, build_lkts9, build_olkts9, design_from_code, gs_check, DesignKind,
};
use crate::error::{Error, Result};
use crate::hamming::{binomial, Params, Tiling};
use crate::verify::mutation::{mutate, ALL_MUTATIONS};
use crate::verify::{
    verify_design, verify_edge_coloring, verify_large_set, verify_tiling, ExpectedSize,
};

/// Seed for the mutation criterion.
pub const MUTATION_SEED: u64 = 0x70c;
/// Mutations applied to each tiling.
pub const MUTATIONS_PER_TILING: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: f64,
}

impl CriterionResult {
    /// `PASS  7 d=5 coloring route (2.31 s / 30 s): ...`
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {} ({:.2} s / {} s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.limit_seconds,
            self.detail
        )
    }
}

/// Identifier, name and time limit in seconds.
pub const CRITERIA: [(u32, &str, f64); 13] = [
    (1, "catalog fidelity", 1.0),
    (2, "d=2 closed form", 30.0),
    (3, "d=2w coloring route", 5.0),
    (4, "binary weight three", 10.0),
    (5, "TOC_q(4,4,3)", 5.0),
    (6, "OA route for d=4", 60.0),
    (7, "d=5 coloring route", 30.0),
    (8, "LGS(1,3,8,3) expansion", 10.0),
    (9, "recursion via 2-resolvable SQS(16)", 600.0),
    (10, "GMHP blow-up", 120.0),
    (11, "oracle agreement", 300.0),
    (12, "mutation kill rate", 600.0),
    (13, "Baranyai suite", 60.0),
];

/// Runs one criterion.
pub fn run_criterion(id: u32) -> Result<CriterionResult> {
    let &(_, name, limit) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::param(format!("no acceptance criterion {id}")))?;
    let start = Instant::now();
    let outcome = match id {
        1 => c1_catalog(),
        2 => c2_d2().map(|(d, _)| d),
        3 => c3_d2w().map(|(d, _)| d),
        4 => c4_binary().map(|(d, _)| d),
        5 => c5_toc443().map(|(d, _)| d),
        6 => c6_d4_oa().map(|(d, _)| d),
        7 => c7_d5().map(|(d, _)| d),
        8 => c8_lgs138().map(|(d, _)| d),
        9 => c9_sqs16().map(|(d, _)| d),
        10 => c10_gmhp(),
        11 => c11_oracle(),
        12 => c12_mutations(),
        _ => c13_baranyai(),
    };
    let seconds = start.elapsed().as_secs_f64();
    let (passed, detail) = match outcome {
        Ok(d) if seconds <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the time limit")),
        Err(e) => (false, e.to_string()),
    };
    Ok(CriterionResult {
        id,
        name,
        passed,
        detail,
        seconds,
        limit_seconds: limit,
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|c| run_criterion(c.0).expect("known criterion"))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(msg()))
    }
}

/// Verifies again and checks tile count and size.
fn check_tiling(label: &str, t: &Tiling, tiles: usize, size: usize) -> Result<()> {
    let v = verify_tiling(t, ExpectedSize::Formula);
    ensure(v.ok && !v.sampled, || format!("{label}: {}", v.summary()))?;
    ensure(
        t.tile_count() == tiles && t.tile_sizes() == vec![size],
        || {
            format!(
                "{label}: {} tiles of sizes {:?}, expected {tiles} x {size}",
                t.tile_count(),
                t.tile_sizes()
            )
        },
    )
}

fn expect_nonexistent(label: &str, r: Result<Construction>) -> Result<()> {
    match r {
        Err(Error::Nonexistent(_)) => Ok(()),
        Err(e) => Err(Error::Verification(format!(
            "{label}: expected a nonexistence exit, got {e}"
        ))),
        Ok(_) => Err(Error::Verification(format!(
            "{label}: expected a nonexistence exit, got a tiling"
        ))),
    }
}

type Tilings = Vec<(String, Tiling)>;

fn catalog_tilings() -> Result<Tilings> {
    let mut out = Vec::new();
    for (name, tiles, size) in [
        ("toc_3_4_4_3", 16, 2),
        ("toc_3_4_3_3", 4, 8),
        ("toc_2_5_4_3", 5, 2),
    ] {
        let t = catalog::tiling(name)?;
        check_tiling(name, &t, tiles, size)?;
        out.push((name.to_string(), t));
    }
    Ok(out)
}

fn c1_catalog() -> Result<String> {
    catalog_tilings()?;
    let opt7 = catalog::large_set("opt7")?;
    let v = verify_large_set(&opt7);
    ensure(v.ok, || format!("opt7: {}", v.summary()))?;
    ensure(opt7.part_sizes() == vec![7, 7, 6, 6, 5, 4], || {
        format!("opt7 part sizes {:?}", opt7.part_sizes())
    })?;
    let (_, systems) = catalog::codes("lgs_1_3_8_3_printed")?;
    ensure(systems.len() == 9, || {
        format!("{} printed base systems", systems.len())
    })?;
    let mut all = std::collections::HashSet::new();
    for (i, s) in systems.iter().enumerate() {
        let c = gs_check(&design_from_code(s, 1, DesignKind::HDesign))?;
        ensure(c.ok, || {
            format!("printed base system {i} is not a GS(1,3,8,3): {c:?}")
        })?;
        for w in s.words() {
            ensure(all.insert(w.clone()), || {
                format!("word {w} repeats across printed base systems")
            })?;
        }
    }
    Ok(
        "Example tilings 16x2, 4x8, 5x2; OPT(7) parts 7,7,6,6,5,4; 9 disjoint printed GS(1,3,8,3)"
            .into(),
    )
}

fn c2_d2() -> Result<(String, Tilings)> {
    let mut out = Vec::new();
    for q in 2..=5u32 {
        for w in [3, 4] {
            for n in w..=8 {
                let c = toc_d2(q, n, w)?;
                let g = (q - 1) as usize;
                let size = g.pow(w as u32 - 1) * binomial(n, w) as usize;
                check_tiling(&format!("TOC_{q}({n},2,{w})"), &c.tiling, g, size)?;
                out.push((format!("TOC_{q}({n},2,{w})"), c.tiling));
            }
        }
    }
    Ok((format!("{} tilings verified", out.len()), out))
}

fn c3_d2w() -> Result<(String, Tilings)> {
    let a = toc_d2w(3, 6, 3)?.tiling;
    check_tiling("TOC_3(6,6,3)", &a, 80, 2)?;
    let b = toc_d2w(4, 6, 3)?.tiling;
    check_tiling("TOC_4(6,6,3)", &b, 270, 2)?;
    expect_nonexistent("TOC_2(7,6,3)", toc_d2w(2, 7, 3))?;
    Ok((
        "TOC_3(6,6,3) 80x2, TOC_4(6,6,3) 270x2, TOC_2(7,6,3) rejected".into(),
        vec![("TOC_3(6,6,3)".into(), a), ("TOC_4(6,6,3)".into(), b)],
    ))
}

fn c4_binary() -> Result<(String, Tilings)> {
    let mut out = Vec::new();
    for (n, d, tiles, size) in [(9, 4, 7, 12), (8, 4, 7, 8), (6, 6, 10, 2), (9, 6, 28, 3)] {
        let label = format!("TOC_2({n},{d},3)");
        let t = toc_binary_w3(n, d)?.tiling;
        check_tiling(&label, &t, tiles, size)?;
        out.push((label, t));
    }
    for (n, d) in [(10, 4), (11, 4), (7, 6)] {
        expect_nonexistent(&format!("TOC_2({n},{d},3)"), toc_binary_w3(n, d))?;
    }
    Ok((
        "7x12, 7x8, 10x2, 28x3; n=10,11 at d=4 and n=7 at d=6 rejected".into(),
        out,
    ))
}

fn c5_toc443() -> Result<(String, Tilings)> {
    let mut out = Vec::new();
    for q in 4..=6u32 {
        let g = (q - 1) as usize;
        let label = format!("TOC_{q}(4,4,3)");
        let t = toc443(q)?.tiling;
        check_tiling(&label, &t, g.pow(3), 4)?;
        let oracle = clique_oracle(&Params::new(q, 4, 4, 3)?, DEFAULT_ORACLE_CAP)?;
        ensure(oracle == 4, || format!("oracle A_{q}(4,4,3) = {oracle}"))?;
        out.push((label, t));
    }
    Ok(("g^3 tiles of 4 for q = 4,5,6; oracle value 4".into(), out))
}

fn c6_d4_oa() -> Result<(String, Tilings)> {
    let t = toc_d4_oa(8, 6, D4Source::Opt)?.tiling;
    check_tiling("TOC_8(6,4,3)", &t, 343, 20)?;
    ensure(t.word_count() == 6860, || {
        format!("{} words", t.word_count())
    })?;
    Ok((
        "TOC_8(6,4,3) 343x20 = 6860".into(),
        vec![("TOC_8(6,4,3)".into(), t)],
    ))
}

fn c7_d5() -> Result<(String, Tilings)> {
    let a = toc_d5_2good(&two_good_from_lkts(&build_lkts9()?)?, 3)?.tiling;
    check_tiling("TOC_3(9,5,3)", &a, 112, 6)?;
    ensure(112 == binomial(8, 2) * 4, || "tile count formula".into())?;
    let b = toc_d5_2good(&two_good_from_olkts(&build_olkts9()?)?, 3)?.tiling;
    check_tiling("TOC_3(10,5,3)", &b, 160, 6)?;
    Ok((
        "TOC_3(9,5,3) 112x6, TOC_3(10,5,3) 160x6".into(),
        vec![("TOC_3(9,5,3)".into(), a), ("TOC_3(10,5,3)".into(), b)],
    ))
}

fn c8_lgs138() -> Result<(String, Tilings)> {
    let t = expand_lgs138()?.tiling;
    check_tiling("TOC_4(8,5,3)", &t, 189, 8)?;
    ensure(t.word_count() as u128 == binomial(8, 3) * 27, || {
        format!("{} words", t.word_count())
    })?;
    Ok((
        "TOC_4(8,5,3) 189x8 = 1512".into(),
        vec![("TOC_4(8,5,3)".into(), t)],
    ))
}

fn c9_sqs16() -> Result<(String, Tilings)> {
    let res = build_2resolvable_sqs16()?;
    ensure(res.classes.len() == 7, || {
        format!("{} classes", res.classes.len())
    })?;
    for i in 0..res.classes.len() {
        let blocks = res.class_blocks(i);
        ensure(blocks.len() == 20, || {
            format!("class {i} has {} blocks", blocks.len())
        })?;
        let d = crate::designs::BlockDesign::new(16, 2, 4, DesignKind::Steiner, blocks);
        let v = verify_design(&d);
        ensure(v.ok, || {
            format!("class {i} is not an S(2,4,16): {}", v.summary())
        })?;
    }
    let t = toc_recursive(&res, &catalog::tiling("toc_3_4_3_3")?)?.tiling;
    check_tiling("TOC_3(16,3,3)", &t, 28, 160)?;
    ensure(t.word_count() == 4480, || {
        format!("{} words", t.word_count())
    })?;
    Ok((
        "7 classes x 20 blocks; TOC_3(16,3,3) 28x160 = 4480".into(),
        vec![("TOC_3(16,3,3)".into(), t)],
    ))
}

fn c10_gmhp() -> Result<String> {
    let code = gmhp21()?;
    ensure(code.len() == 210, || format!("{} words", code.len()))?;
    let bound = exact_value(&Params::new(4, 21, 4, 3)?);
    ensure(bound.exact == Some(210) || bound.upper == 210, || {
        format!("bound for (21,4,3)_4 is {bound:?}")
    })?;
    Ok("(21,4,3)_4 code of 210 words at distance 4".into())
}

fn c11_oracle() -> Result<String> {
    let mut compared = 0;
    for q in 2..=4u32 {
        for n in 3..=6 {
            for d in 2..=6 {
                let p = Params::new(q, n, d, 3)?;
                if let Some(e) = exact_value(&p).exact {
                    let o = clique_oracle(&p, DEFAULT_ORACLE_CAP)?;
                    ensure(e == o, || format!("{p}: exact_value {e}, oracle {o}"))?;
                    compared += 1;
                }
            }
        }
    }
    for (d, want) in [(4, 2), (3, 8)] {
        let p = Params::new(3, 4, d, 3)?;
        let o = clique_oracle(&p, DEFAULT_ORACLE_CAP)?;
        ensure(o == want, || format!("oracle {p} = {o}, expected {want}"))?;
    }
    Ok(format!(
        "{compared} parameter sets agree; A_3(4,4,3) = 2, A_3(4,3,3) = 8"
    ))
}

/// Every tiling built by criteria 1 to 9.
pub fn acceptance_tilings() -> Result<Tilings> {
    let mut all = catalog_tilings()?;
    for part in [
        c2_d2, c3_d2w, c4_binary, c5_toc443, c6_d4_oa, c7_d5, c8_lgs138, c9_sqs16,
    ] {
        all.extend(part()?.1);
    }
    Ok(all)
}

fn c12_mutations() -> Result<String> {
    let tilings = acceptance_tilings()?;
    let mut rng = StdRng::seed_from_u64(MUTATION_SEED);
    let (mut applied, mut killed) = (0usize, 0usize);
    let mut escaped = Vec::new();
    for (label, t) in &tilings {
        let mut done = 0;
        let mut attempts = 0;
        while done < MUTATIONS_PER_TILING && attempts < 10 * MUTATIONS_PER_TILING {
            let kind = ALL_MUTATIONS[attempts % ALL_MUTATIONS.len()];
            attempts += 1;
            let Some((m, how)) = mutate(t, kind, &mut rng) else {
                continue;
            };
            done += 1;
            applied += 1;
            let v = verify_tiling(&m, ExpectedSize::Formula);
            if !v.ok && !v.failures.is_empty() && v.failures.iter().all(|f| !f.witness.is_null()) {
                killed += 1;
            } else if escaped.len() < 5 {
                escaped.push(format!("{label}: {}", how.detail));
            }
        }
    }
    ensure(killed == applied, || {
        format!(
            "{killed}/{applied} mutations detected; escaped: {}",
            escaped.join("; ")
        )
    })?;
    Ok(format!(
        "{killed}/{applied} mutations over {} tilings detected with witnesses",
        tilings.len()
    ))
}

fn c13_baranyai() -> Result<String> {
    let mut runs = 0;
    for w in [3usize, 4] {
        let mut lambdas = vec![1u64, 2u64.pow(w as u32), 3u64.pow(w as u32)];
        lambdas.dedup();
        for n in w..=12 {
            let k = (n / w) as u128;
            for &lambda in &lambdas {
                let total = lambda as u128 * binomial(n, w);
                if !total.is_multiple_of(k) {
                    continue;
                }
                let c = baranyai(n, w, lambda, false)?;
                let v = verify_edge_coloring(&c);
                ensure(v.ok, || format!("n={n} w={w} λ={lambda}: {}", v.summary()))?;
                ensure(c.classes.len() as u128 == total / k, || {
                    format!("n={n} w={w} λ={lambda}: {} classes", c.classes.len())
                })?;
                ensure(c.classes.iter().all(|cl| cl.len() as u128 == k), || {
                    format!("n={n} w={w} λ={lambda}: class size")
                })?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} colorings verified"))
}
