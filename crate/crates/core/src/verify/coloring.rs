//! Checks for edge-colorings and strong colorings.

use std::collections::HashMap;

use serde_json::json;

use super::{for_each_subset, FailureKind, Verdict};
use crate::colorings::{EdgeColoring, StrongColoring};

/// Parts partition `1..=n` into exactly `w` parts and meet every edge at
/// most once.
pub fn verify_strong_coloring(
    n: usize,
    edges: &[Vec<usize>],
    w: usize,
    sc: &StrongColoring,
) -> Verdict {
    let mut v = Verdict::default();
    v.checks.push(format!(
        "strong coloring: {} parts partition [{n}], each edge meets each part at most once",
        w
    ));
    if sc.parts.len() != w {
        v.fail(
            FailureKind::CountViolation,
            json!({"parts": sc.parts.len(), "expected": w}),
        );
    }
    let mut part_of = vec![usize::MAX; n + 1];
    for (pi, p) in sc.parts.iter().enumerate() {
        for &x in p {
            if x == 0 || x > n {
                v.fail(
                    FailureKind::CoverageViolation,
                    json!({"part": pi, "foreign_point": x}),
                );
            } else if part_of[x] != usize::MAX {
                v.fail(
                    FailureKind::CoverageViolation,
                    json!({"point": x, "parts": [part_of[x], pi]}),
                );
            } else {
                part_of[x] = pi;
            }
        }
    }
    if let Some(x) = (1..=n).find(|&x| part_of[x] == usize::MAX) {
        v.fail(
            FailureKind::CoverageViolation,
            json!({"point": x, "reason": "in no part"}),
        );
    }
    for e in edges {
        let mut hit: HashMap<usize, usize> = HashMap::new();
        for &x in e {
            let Some(&p) = part_of.get(x) else { continue };
            if p == usize::MAX {
                continue;
            }
            if let Some(&y) = hit.get(&p) {
                v.fail(
                    FailureKind::GroupViolation,
                    json!({"edge": e, "points": [y, x], "part": p}),
                );
            }
            hit.insert(p, x);
        }
    }
    v
}

/// Edge shape, λ-fold coverage of every `w`-subset, class sizes and the
/// claimed flags.
pub fn verify_edge_coloring(c: &EdgeColoring) -> Verdict {
    let mut v = Verdict::default();
    let (n, w) = (c.n, c.w);
    let k = n.checked_div(w).unwrap_or(0);
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for (ci, class) in c.classes.iter().enumerate() {
        for e in class {
            let mut s = e.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != w || e.len() != w || s.iter().any(|&x| x == 0 || x > n) {
                v.fail(FailureKind::SizeViolation, json!({"class": ci, "edge": e}));
                continue;
            }
            *counts.entry(s).or_insert(0) += 1;
        }
    }
    v.checks.push(format!(
        "coverage: every {w}-subset of [{n}] in exactly {} classes",
        c.lambda
    ));
    let all: Vec<usize> = (1..=n).collect();
    let mut seen = 0usize;
    for_each_subset(&all, w, |s| {
        seen += 1;
        let got = counts.get(s).copied().unwrap_or(0);
        if got != c.lambda {
            v.fail(
                FailureKind::CoverageViolation,
                json!({"edge": s, "count": got, "expected": c.lambda}),
            );
        }
    });
    if counts.len() > seen {
        v.fail(
            FailureKind::CoverageViolation,
            json!({"reason": "edges outside K_n^w"}),
        );
    }

    v.checks.push(format!(
        "classes: {k} edges each, a smaller last class allowed"
    ));
    let last = c.classes.len().saturating_sub(1);
    for (ci, class) in c.classes.iter().enumerate() {
        let ok = if ci == last {
            (1..=k).contains(&class.len())
        } else {
            class.len() == k
        };
        if !ok {
            v.fail(
                FailureKind::SizeViolation,
                json!({"class": ci, "size": class.len(), "expected": k}),
            );
        }
    }

    if c.flags.almost_regular {
        v.checks
            .push("almost regular: degrees within a class differ by at most one".into());
        for (ci, class) in c.classes.iter().enumerate() {
            let mut deg = vec![0usize; n + 1];
            class
                .iter()
                .flatten()
                .filter(|&&x| x >= 1 && x <= n)
                .for_each(|&x| deg[x] += 1);
            let (lo, hi) = (
                deg[1..].iter().min().copied().unwrap_or(0),
                deg[1..].iter().max().copied().unwrap_or(0),
            );
            if hi > lo + 1 {
                v.fail(
                    FailureKind::GroupViolation,
                    json!({"class": ci, "min_degree": lo, "max_degree": hi}),
                );
            }
        }
    }

    let good = c.flags.g_good.or(c.flags.g_star_good);
    if let Some(g) = good {
        v.checks.push(format!(
            "{g}-good: classes are matchings of {k} edges; groups of {g} are pair packings"
        ));
        if g == 0 || !c.classes.len().is_multiple_of(g) {
            v.fail(
                FailureKind::CountViolation,
                json!({"classes": c.classes.len(), "group": g}),
            );
        } else {
            for (ci, class) in c.classes.iter().enumerate() {
                let mut deg = vec![0usize; n + 1];
                class
                    .iter()
                    .flatten()
                    .filter(|&&x| x >= 1 && x <= n)
                    .for_each(|&x| deg[x] += 1);
                if deg.iter().any(|&d| d > 1) || class.len() != k {
                    v.fail(
                        FailureKind::GroupViolation,
                        json!({"class": ci, "reason": "not a matching of floor(n/w) edges"}),
                    );
                }
            }
            for s in 0..c.classes.len() / g {
                let mut pairs: std::collections::HashSet<(usize, usize)> =
                    std::collections::HashSet::new();
                for e in c.classes[s * g..(s + 1) * g].iter().flatten() {
                    for i in 0..e.len() {
                        for j in i + 1..e.len() {
                            let p = (e[i].min(e[j]), e[i].max(e[j]));
                            if !pairs.insert(p) {
                                v.fail(
                                    FailureKind::CoverageViolation,
                                    json!({"group": s, "pair": [p.0, p.1]}),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    if let Some(g) = c.flags.g_star_good {
        v.checks
            .push(format!("{g}*-good: a strong {w}-coloring per group"));
        let groups = c.classes.len().checked_div(g).unwrap_or(0);
        if c.strong.len() != groups {
            v.fail(
                FailureKind::CountViolation,
                json!({"strong_colorings": c.strong.len(), "groups": groups}),
            );
        }
        for (s, sc) in c.strong.iter().enumerate().take(groups) {
            let edges: Vec<Vec<usize>> = c.classes[s * g..(s + 1) * g]
                .iter()
                .flatten()
                .cloned()
                .collect();
            v.absorb(
                verify_strong_coloring(n, &edges, w, sc),
                json!({"group": s}),
            );
        }
    }
    v
}
