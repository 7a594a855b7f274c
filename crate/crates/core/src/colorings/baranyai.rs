//! Almost-regular edge-colorings of `λK_n^w` by flow induction.
//!
//! Each class is kept as `k_j` partial edges plus a remainder bin holding at
//! most `n - k_j w` vertices. Vertices are added one at a time; vertex
//! `m + 1` goes into exactly one slot of every class, chosen by an integral
//! flow in which every current partial edge `S` must be extended
//! `λ C(n-m-1, w-|S|-1)` times in total. The fractional assignment giving
//! each slot weight `(w - |S|) / (n - m)` meets all quotas, so an integral
//! one exists.

use std::collections::HashMap;

use super::flow::FlowGraph;
use super::{require_ok, ColoringFlags, EdgeColoring};
use crate::error::{Error, Result};
use crate::hamming::binomial;

/// Classes of `⌊n/w⌋` pairwise disjoint edges covering every `w`-subset
/// exactly `λ` times. With `ceil`, a last smaller class absorbs the
/// remainder when `⌊n/w⌋` does not divide `λ C(n,w)`.
pub fn baranyai(n: usize, w: usize, lambda: u64, ceil: bool) -> Result<EdgeColoring> {
    if w == 0 || w > n || lambda == 0 {
        return Err(Error::param(format!(
            "need 1 <= w <= n and λ >= 1, got n={n} w={w} λ={lambda}"
        )));
    }
    let k = n / w;
    let total = lambda as u128 * binomial(n, w);
    if !total.is_multiple_of(k as u128) && !ceil {
        return Err(Error::unsupported(format!(
            "⌊n/w⌋ = {k} does not divide λ·C(n,w) = {total}; use the ceiling variant"
        )));
    }
    let r = total.div_ceil(k as u128) as usize;
    let mut sizes = vec![k; r];
    sizes[r - 1] = (total - (r as u128 - 1) * k as u128) as usize;

    let mut parts: Vec<Vec<Vec<usize>>> = sizes
        .iter()
        .map(|&s| vec![Vec::with_capacity(w); s])
        .collect();
    let mut bin = vec![0usize; r];
    let bin_cap: Vec<usize> = sizes.iter().map(|&s| n - s * w).collect();

    for m in 0..n {
        let v = m + 1;
        // Distinct partial edges in first-seen order.
        let mut index: HashMap<&[usize], usize> = HashMap::new();
        let mut keys: Vec<&[usize]> = Vec::new();
        for class in &parts {
            for p in class {
                if p.len() < w && !index.contains_key(p.as_slice()) {
                    index.insert(p, keys.len());
                    keys.push(p);
                }
            }
        }
        let (source, sink, bin_node) = (0, 1, 2);
        let first_class = 3;
        let first_key = first_class + r;
        let mut g = FlowGraph::new(first_key + keys.len());
        let mut quota_sum: u128 = 0;
        for (i, s) in keys.iter().enumerate() {
            let quota = lambda as u128 * binomial(n - m - 1, w - s.len() - 1);
            quota_sum += quota;
            g.add_edge(first_key + i, sink, quota as u64);
        }
        let bin_quota = (r as u128)
            .checked_sub(quota_sum)
            .ok_or_else(|| Error::invariant("edge quotas exceed class count"))?;
        g.add_edge(bin_node, sink, bin_quota as u64);

        // Per class: (edge id, key index or None for the bin).
        let mut choices: Vec<Vec<(usize, Option<usize>)>> = Vec::with_capacity(r);
        for (j, class) in parts.iter().enumerate() {
            g.add_edge(source, first_class + j, 1);
            let mut mult: Vec<(usize, u64)> = Vec::new();
            for p in class {
                if p.len() < w {
                    let key = index[p.as_slice()];
                    match mult.iter_mut().find(|(kk, _)| *kk == key) {
                        Some((_, c)) => *c += 1,
                        None => mult.push((key, 1)),
                    }
                }
            }
            let mut opts: Vec<(usize, Option<usize>)> = mult
                .into_iter()
                .map(|(key, c)| (g.add_edge(first_class + j, first_key + key, c), Some(key)))
                .collect();
            if bin[j] < bin_cap[j] {
                opts.push((g.add_edge(first_class + j, bin_node, 1), None));
            }
            choices.push(opts);
        }
        let f = g.max_flow(source, sink);
        if f != r as u64 {
            return Err(Error::invariant(format!(
                "flow step for vertex {v} reached {f} of {r}"
            )));
        }
        let picks: Vec<Option<Vec<usize>>> = choices
            .iter()
            .map(|opts| {
                let &(_, key) = opts
                    .iter()
                    .find(|(e, _)| g.flow_on(*e) == 1)
                    .expect("class carries one unit");
                key.map(|kk| keys[kk].to_vec())
            })
            .collect();
        drop(index);
        for (j, pick) in picks.into_iter().enumerate() {
            match pick {
                Some(s) => {
                    let slot = parts[j]
                        .iter_mut()
                        .find(|p| **p == s)
                        .expect("chosen partial edge present");
                    slot.push(v);
                }
                None => bin[j] += 1,
            }
        }
    }

    for class in &mut parts {
        class.sort();
    }
    let c = EdgeColoring {
        n,
        w,
        lambda,
        classes: parts,
        flags: ColoringFlags {
            almost_regular: true,
            g_good: None,
            g_star_good: None,
        },
        strong: Vec::new(),
    };
    require_ok("Baranyai coloring", &c)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_factorization_of_k6_3() {
        let c = baranyai(6, 3, 1, false).unwrap();
        assert_eq!(c.classes.len(), 10);
        assert!(c.classes.iter().all(|k| k.len() == 2));
    }

    #[test]
    fn single_edge_classes() {
        let c = baranyai(4, 3, 1, false).unwrap();
        assert_eq!(c.classes.len(), 4);
        assert!(c.classes.iter().all(|k| k.len() == 1));
    }

    #[test]
    fn multiset_lambda_27() {
        let c = baranyai(6, 3, 27, false).unwrap();
        assert_eq!(c.classes.len(), 270);
    }

    #[test]
    fn divisibility_enforced() {
        assert!(matches!(
            baranyai(7, 3, 1, false),
            Err(Error::Unsupported(_))
        ));
        let c = baranyai(7, 3, 1, true).unwrap();
        assert_eq!(c.classes.len(), 18);
        assert_eq!(c.classes.last().unwrap().len(), 1);
    }

    #[test]
    fn near_one_factors() {
        let c = baranyai(10, 3, 1, false).unwrap();
        assert_eq!(c.classes.len(), 40);
    }
}
