//! Strong vertex colorings of uniform hypergraphs and odd Berge-cycle
//! detection.

use serde::{Deserialize, Serialize};

use super::StrongColoring;
use crate::error::{Error, Result};
use crate::verify::verify_strong_coloring;

/// Default step budget for the cycle search and the colouring backtrack.
pub const DEFAULT_COLORING_BUDGET: u64 = 10_000_000;

/// A Berge cycle `x_1 E_1 x_2 E_2 … x_k E_k x_1` with `k` odd; `edges[i]`
/// contains `points[i]` and `points[i + 1]` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycle {
    pub points: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
}

enum Search {
    Found(OddCycle),
    None,
    Budget,
}

/// First odd Berge cycle of length at least 3, rooted at its smallest
/// point; `Err(Indeterminate)` if the budget runs out.
pub fn find_odd_cycle(n: usize, edges: &[Vec<usize>], budget: u64) -> Result<Option<OddCycle>> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, e) in edges.iter().enumerate() {
        for &x in e {
            if x == 0 || x > n {
                return Err(Error::param(format!(
                    "edge {e:?} has a vertex outside 1..={n}"
                )));
            }
            incident[x].push(i);
        }
    }
    let mut steps = 0u64;
    for s in 1..=n {
        let mut used_edge = vec![false; edges.len()];
        let mut on_path = vec![false; n + 1];
        let mut pts = vec![s];
        let mut es = Vec::new();
        on_path[s] = true;
        match dfs(
            s,
            s,
            edges,
            &incident,
            &mut used_edge,
            &mut on_path,
            &mut pts,
            &mut es,
            &mut steps,
            budget,
        ) {
            Search::Found(c) => return Ok(Some(c)),
            Search::Budget => {
                return Err(Error::Indeterminate(
                    "odd-cycle search budget exhausted".into(),
                ))
            }
            Search::None => {}
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    root: usize,
    x: usize,
    edges: &[Vec<usize>],
    incident: &[Vec<usize>],
    used_edge: &mut [bool],
    on_path: &mut [bool],
    pts: &mut Vec<usize>,
    es: &mut Vec<usize>,
    steps: &mut u64,
    budget: u64,
) -> Search {
    for &e in &incident[x] {
        if used_edge[e] {
            continue;
        }
        *steps += 1;
        if *steps > budget {
            return Search::Budget;
        }
        used_edge[e] = true;
        es.push(e);
        for &y in &edges[e] {
            if y == x {
                continue;
            }
            if y == root && es.len() >= 3 && es.len() % 2 == 1 {
                return Search::Found(OddCycle {
                    points: pts.clone(),
                    edges: es.iter().map(|&i| edges[i].clone()).collect(),
                });
            }
            if y > root && !on_path[y] {
                on_path[y] = true;
                pts.push(y);
                match dfs(
                    root, y, edges, incident, used_edge, on_path, pts, es, steps, budget,
                ) {
                    Search::None => {}
                    other => return other,
                }
                pts.pop();
                on_path[y] = false;
            }
        }
        es.pop();
        used_edge[e] = false;
    }
    Search::None
}

pub fn strong_color(n: usize, edges: &[Vec<usize>], w: usize) -> Result<StrongColoring> {
    strong_color_with_budget(n, edges, w, DEFAULT_COLORING_BUDGET)
}

/// Rejects hypergraphs with an odd Berge cycle, then colours vertices in
/// breadth-first order over the edges so each edge sees distinct colours,
/// backtracking on dead ends. Vertices in no edge join the smallest part.
pub fn strong_color_with_budget(
    n: usize,
    edges: &[Vec<usize>],
    w: usize,
    budget: u64,
) -> Result<StrongColoring> {
    if w == 0 {
        return Err(Error::param("strong coloring needs w >= 1"));
    }
    if let Some(e) = edges.iter().find(|e| e.len() > w) {
        return Err(Error::Nonexistent(format!(
            "edge {e:?} has more than {w} vertices"
        )));
    }
    if let Some(c) = find_odd_cycle(n, edges, budget)? {
        return Err(Error::Nonexistent(format!(
            "odd cycle through points {:?} via edges {:?}; the union is not from a good group",
            c.points, c.edges
        )));
    }

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, e) in edges.iter().enumerate() {
        for &x in e {
            incident[x].push(i);
        }
    }
    // Breadth-first vertex order through shared edges.
    let mut order = Vec::new();
    let mut seen = vec![false; n + 1];
    for start in 1..=n {
        if seen[start] || incident[start].is_empty() {
            continue;
        }
        seen[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &e in &incident[x] {
                for &y in &edges[e] {
                    if !seen[y] {
                        seen[y] = true;
                        order.push(y);
                    }
                }
            }
        }
    }

    let mut colour = vec![usize::MAX; n + 1];
    let mut steps = 0u64;
    if !backtrack(
        0,
        &order,
        edges,
        &incident,
        w,
        &mut colour,
        &mut steps,
        budget,
    ) {
        return Err(if steps > budget {
            Error::Indeterminate("strong coloring budget exhausted".into())
        } else {
            Error::Nonexistent(format!("no strong {w}-coloring exists"))
        });
    }
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); w];
    for x in 1..=n {
        if colour[x] != usize::MAX {
            parts[colour[x]].push(x);
        }
    }
    for x in (1..=n).filter(|&x| colour[x] == usize::MAX) {
        let smallest = (0..w).min_by_key(|&c| parts[c].len()).expect("w >= 1");
        parts[smallest].push(x);
    }
    parts.iter_mut().for_each(|p| p.sort_unstable());
    let sc = StrongColoring { parts };
    let v = verify_strong_coloring(n, edges, w, &sc);
    if !v.ok {
        return Err(Error::invariant(format!(
            "strong coloring failed verification: {}",
            v.summary()
        )));
    }
    Ok(sc)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    i: usize,
    order: &[usize],
    edges: &[Vec<usize>],
    incident: &[Vec<usize>],
    w: usize,
    colour: &mut [usize],
    steps: &mut u64,
    budget: u64,
) -> bool {
    if i == order.len() {
        return true;
    }
    let x = order[i];
    // Symmetry: a fresh colour is only ever the next unused one.
    let used = order[..i].iter().map(|&y| colour[y] + 1).max().unwrap_or(0);
    for c in 0..w.min(used + 1) {
        *steps += 1;
        if *steps > budget {
            return false;
        }
        let clash = incident[x]
            .iter()
            .any(|&e| edges[e].iter().any(|&y| y != x && colour[y] == c));
        if clash {
            continue;
        }
        colour[x] = c;
        if backtrack(i + 1, order, edges, incident, w, colour, steps, budget) {
            return true;
        }
        colour[x] = usize::MAX;
        if *steps > budget {
            return false;
        }
    }
    false
}
