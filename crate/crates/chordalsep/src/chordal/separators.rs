//! Brute-force enumeration of minimal vertex separators, by two independent
//! routes: the full-component characterization and the definitional per-pair
//! subset scan.

use crate::graph::{Graph, VertexSet};

/// All minimal vertex separators of `g`, deduplicated and sorted.
///
/// Uses the neighborhood-of-component characterization: a nonempty set `S` is
/// a minimal `u,v`-separator for some pair exactly when `G - S` has at least
/// two components `C` whose neighborhood `N(C)` is all of `S`. Works on
/// disconnected graphs (separators live inside components). Intended for
/// graphs with up to about 12 vertices.
pub fn minimal_separators_direct(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 16, "direct separator enumeration is limited to small graphs");
    let masks = g.neighbor_masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut found = Vec::new();
    for subset in 1u64..1 << n {
        if subset == all {
            continue;
        }
        let rest = all & !subset;
        let mut full_components = 0;
        let mut remaining = rest;
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            // Flood-fill one component of G - subset.
            let mut component = 1u64 << start;
            loop {
                let mut next = component;
                let mut frontier = component;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    next |= masks[v] & rest;
                }
                if next == component {
                    break;
                }
                component = next;
            }
            remaining &= !component;
            let neighborhood = {
                let mut nb = 0u64;
                let mut vs = component;
                while vs != 0 {
                    let v = vs.trailing_zeros() as usize;
                    vs &= vs - 1;
                    nb |= masks[v];
                }
                nb & !component
            };
            if neighborhood == subset {
                full_components += 1;
                if full_components >= 2 {
                    break;
                }
            }
        }
        if full_components >= 2 {
            found.push(VertexSet::from_mask(subset));
        }
    }
    found.sort();
    found
}

/// Definitional oracle: for every non-adjacent pair `(u, v)` in a common
/// component, every inclusion-minimal subset of `V - {u, v}` whose removal
/// separates `u` from `v`. Returns the deduplicated union over all pairs.
/// Slower than [`minimal_separators_direct`]; retained as an independent
/// double check for graphs with up to about 8 vertices.
pub fn minimal_separators_exhaustive(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 10, "exhaustive separator scan is limited to very small graphs");
    let masks = g.neighbor_masks();
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let separates = |s: u64, u: usize, v: usize| -> bool {
        let rest = all & !s;
        let mut reached = 1u64 << u;
        loop {
            let mut next = reached;
            let mut frontier = reached;
            while frontier != 0 {
                let w = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= masks[w] & rest;
            }
            if next == reached {
                return reached >> v & 1 == 0;
            }
            reached = next;
        }
    };
    let mut found = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacent(u, v) || !same_component(&masks, u, v) {
                continue;
            }
            let candidates_mask = all & !(1 << u) & !(1 << v);
            let mut sub = candidates_mask;
            // Iterate over all subsets of candidates_mask, including the
            // empty set, in decreasing mask order.
            loop {
                let s = sub;
                if s != 0 && separates(s, u, v) {
                    let minimal = (0..n)
                        .filter(|&x| s >> x & 1 == 1)
                        .all(|x| !separates(s & !(1 << x), u, v));
                    if minimal {
                        found.push(VertexSet::from_mask(s));
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & candidates_mask;
            }
        }
    }
    found.sort();
    found.dedup();
    found
}

fn same_component(masks: &[u64], u: usize, v: usize) -> bool {
    let mut reached = 1u64 << u;
    loop {
        let mut next = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let w = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= masks[w];
        }
        if next == reached {
            return reached >> v & 1 == 1;
        }
        reached = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    #[test]
    fn p4_has_the_two_inner_singletons() {
        let p4 = parse_graph6("Ch").unwrap();
        let expected = vec![VertexSet::new(vec![1]), VertexSet::new(vec![2])];
        assert_eq!(minimal_separators_direct(&p4), expected);
        assert_eq!(minimal_separators_exhaustive(&p4), expected);
    }

    #[test]
    fn claw_has_one_separator_set() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(minimal_separators_direct(&claw), vec![VertexSet::new(vec![0])]);
    }

    #[test]
    fn complete_graphs_have_none() {
        let k4 = parse_graph6("C~").unwrap();
        assert!(minimal_separators_direct(&k4).is_empty());
        assert!(minimal_separators_exhaustive(&k4).is_empty());
    }

    #[test]
    fn c6_has_nine_separators_including_non_close_ones() {
        // In the 6-cycle the pair {1, 4} is a minimal separator that is not
        // the neighborhood of any single vertex's residual component, which
        // is why the enumeration scans all subsets.
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let direct = minimal_separators_direct(&c6);
        assert!(direct.contains(&VertexSet::new(vec![1, 4])));
        assert_eq!(direct, minimal_separators_exhaustive(&c6));
        assert_eq!(direct.len(), 9);
    }

    #[test]
    fn disconnected_graphs_union_component_separators() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let expected = vec![VertexSet::new(vec![1]), VertexSet::new(vec![4])];
        assert_eq!(minimal_separators_direct(&g), expected);
        assert_eq!(minimal_separators_exhaustive(&g), expected);
    }
}
