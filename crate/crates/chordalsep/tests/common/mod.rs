//! Shared fixtures for the integration tests: the named graphs from the
//! catalog and a couple of generators.

#![allow(dead_code)]

use chordalsep::graph::Graph;

pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

pub fn p4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
}

pub fn two_p3() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap()
}

pub fn gem() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap()
}

pub fn dart() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]).unwrap()
}

pub fn butterfly() -> Graph {
    Graph::from_edges(
        7,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (2, 3), (4, 5), (5, 6)],
    )
    .unwrap()
}

pub fn hajos() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)],
    )
    .unwrap()
}

pub fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Builds a graph from a flat bit vector over vertex pairs in column order.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    assert_eq!(bits.len(), n * n.saturating_sub(1) / 2);
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Reference graph6 encoder written directly from the format definition,
/// independent of the production encoder's bit packing.
pub fn reference_graph6(n: usize, bits: &[bool]) -> String {
    assert!(n <= 62);
    assert_eq!(bits.len(), n * n.saturating_sub(1) / 2);
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - i);
            }
        }
        out.push((63 + value) as char);
    }
    out
}
