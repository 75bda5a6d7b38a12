#![allow(dead_code)]

use aprac::drawing::{Drawing, DrawnEdge};
use aprac::geom::{intersect, Intersection, Point};
use aprac::graph::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random simple graph of maximum degree `max_deg`: `tries` random pairs are offered
/// and kept while both endpoints have room.
pub fn random_bounded_degree(n: usize, max_deg: usize, tries: usize, rng: &mut StdRng) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let mut deg = vec![0usize; n];
    for _ in 0..tries {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u == v || deg[u] == max_deg || deg[v] == max_deg || g.has_edge(u, v) {
            continue;
        }
        g.add_edge(u, v).expect("checked above");
        deg[u] += 1;
        deg[v] += 1;
    }
    g
}

/// Random planar straight-line drawing: distinct random points, then random edges kept
/// while they meet no earlier edge or vertex except at shared endpoints.
pub fn random_planar_drawing(n: usize, side: i64, tries: usize, rng: &mut StdRng) -> Drawing {
    let mut positions: Vec<Point> = Vec::with_capacity(n);
    while positions.len() < n {
        let p = Point::new(rng.random_range(0..side), rng.random_range(0..side));
        if !positions.contains(&p) {
            positions.push(p);
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for _ in 0..tries {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u == v || edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
            continue;
        }
        let (p, q) = (positions[u], positions[v]);
        let through_vertex = positions
            .iter()
            .enumerate()
            .any(|(w, &r)| w != u && w != v && aprac::geom::on_segment(p, q, r));
        let clashes = edges
            .iter()
            .any(|&(a, b)| match intersect(p, q, positions[a], positions[b]) {
                Intersection::Disjoint => false,
                Intersection::Touch(t) => ![a, b].iter().any(|&x| (x == u || x == v) && positions[x] == t),
                Intersection::Proper(_) | Intersection::Overlap => true,
            });
        if !through_vertex && !clashes {
            edges.push((u, v));
        }
    }
    Drawing {
        positions,
        edges: edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| DrawnEdge::straight(i, u, v))
            .collect(),
    }
}
