//! Detection of local configurations that cannot occur in straight-line drawings whose
//! crossings are all between a horizontal and a vertical edge.
//!
//! Triangles are 3-cycles of the drawn graph; containment is decided with exact
//! orientation tests and points on a triangle's boundary are reported as degenerate.

use std::collections::BTreeSet;

use thiserror::Error;

use super::crossings::find_crossings;
use crate::drawing::Drawing;
use crate::geom::{orient2d, Point};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForbiddenError {
    #[error("edge {edge} has bends; the detector needs a straight-line drawing")]
    HasBends { edge: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Finding {
    /// Two edges sharing `common` both cross `crossed`.
    AdjacentCrossers {
        crossed: usize,
        first: usize,
        second: usize,
        common: usize,
    },
    /// `outer` lies outside `triangle` while the listed neighbours of it lie inside.
    NeighborsInside {
        triangle: [usize; 3],
        outer: usize,
        inner: Vec<usize>,
    },
    /// `inner` lies inside `triangle` and has the listed neighbours outside.
    NeighborsOutside {
        triangle: [usize; 3],
        inner: usize,
        outer: Vec<usize>,
    },
    /// `inner` is inside `triangle`, its neighbour `outer` is outside, and `apex` is
    /// adjacent to both and to every triangle vertex.
    CommonNeighbor {
        triangle: [usize; 3],
        inner: usize,
        outer: usize,
        apex: usize,
    },
    /// `vertex` lies on the boundary of `triangle`.
    Degenerate { triangle: [usize; 3], vertex: usize },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Inside,
    Boundary,
    Outside,
}

fn locate(t: [Point; 3], p: Point) -> Side {
    let s = [
        orient2d(t[0], t[1], p),
        orient2d(t[1], t[2], p),
        orient2d(t[2], t[0], p),
    ]
    .map(i128::signum);
    let pos = s.iter().filter(|&&x| x > 0).count();
    let neg = s.iter().filter(|&&x| x < 0).count();
    if pos == 3 || neg == 3 {
        Side::Inside
    } else if pos > 0 && neg > 0 {
        Side::Outside
    } else if pos == 0 && neg == 0 {
        // Collinear triangle: nothing is inside it.
        Side::Outside
    } else {
        Side::Boundary
    }
}

pub fn detect_forbidden_configs(d: &Drawing) -> Result<Vec<Finding>, ForbiddenError> {
    if let Some(edge) = d.edges.iter().position(|e| !e.bends.is_empty()) {
        return Err(ForbiddenError::HasBends { edge });
    }
    let n = d.n();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for e in &d.edges {
        if e.u != e.v {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
    }
    let mut out = Vec::new();

    let mut crossers: Vec<Vec<usize>> = vec![Vec::new(); d.m()];
    for c in find_crossings(d) {
        crossers[c.a.edge].push(c.b.edge);
        crossers[c.b.edge].push(c.a.edge);
    }
    for (crossed, list) in crossers.iter().enumerate() {
        for (i, &f) in list.iter().enumerate() {
            for &g in &list[i + 1..] {
                let (ef, eg) = (&d.edges[f], &d.edges[g]);
                for common in [ef.u, ef.v] {
                    if common == eg.u || common == eg.v {
                        out.push(Finding::AdjacentCrossers {
                            crossed,
                            first: f.min(g),
                            second: f.max(g),
                            common,
                        });
                    }
                }
            }
        }
    }

    for a in 0..n {
        for &b in adj[a].range(a + 1..) {
            for &c in adj[b].range(b + 1..) {
                if !adj[a].contains(&c) {
                    continue;
                }
                let triangle = [a, b, c];
                let pts = triangle.map(|v| d.positions[v]);
                let side: Vec<Side> = (0..n)
                    .map(|v| {
                        if triangle.contains(&v) {
                            Side::Boundary
                        } else {
                            locate(pts, d.positions[v])
                        }
                    })
                    .collect();
                triangle_findings(triangle, &adj, &side, &mut out);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn triangle_findings(triangle: [usize; 3], adj: &[BTreeSet<usize>], side: &[Side], out: &mut Vec<Finding>) {
    let n = side.len();
    for v in (0..n).filter(|v| !triangle.contains(v)) {
        if side[v] == Side::Boundary {
            out.push(Finding::Degenerate { triangle, vertex: v });
        }
    }
    for u in (0..n).filter(|u| !triangle.contains(u)) {
        match side[u] {
            Side::Outside => {
                let inner: Vec<usize> = adj[u].iter().copied().filter(|&v| side[v] == Side::Inside).collect();
                if inner.len() >= 2 {
                    out.push(Finding::NeighborsInside {
                        triangle,
                        outer: u,
                        inner,
                    });
                }
            }
            Side::Inside => {
                let outer: Vec<usize> = adj[u]
                    .iter()
                    .copied()
                    .filter(|&v| !triangle.contains(&v) && side[v] == Side::Outside)
                    .collect();
                if outer.len() >= 3 {
                    out.push(Finding::NeighborsOutside {
                        triangle,
                        inner: u,
                        outer: outer.clone(),
                    });
                }
                for &v in &outer {
                    for &apex in adj[u].intersection(&adj[v]) {
                        if !triangle.contains(&apex) && triangle.iter().all(|t| adj[apex].contains(t)) {
                            out.push(Finding::CommonNeighbor {
                                triangle,
                                inner: u,
                                outer: v,
                                apex,
                            });
                        }
                    }
                }
            }
            Side::Boundary => {}
        }
    }
}
