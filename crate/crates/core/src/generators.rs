//! Dense graph families with certified drawings: a straight-line family with
//! `4n - 2 floor(sqrt n) - 7` edges, a 1-bend family with `5n - 16` edges and a 2-bend
//! family with `10n - 46` edges. Every crossing in these drawings is between a
//! horizontal and a vertical segment.

use thiserror::Error;

use crate::drawing::{Drawing, DrawnEdge};
use crate::geom::Point;
use crate::graph::Graph;
use crate::layout::bends::{
    route_horizontal_middle, route_horizontal_port, route_vertical_middle, route_vertical_port, BOX_HALF, PITCH,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{family}: parameter {value} out of range ({requirement})")]
    OutOfRange {
        family: &'static str,
        value: usize,
        requirement: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Aprac0,
    Aprac1,
    Aprac2,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "aprac0" => Ok(Family::Aprac0),
            "aprac1" => Ok(Family::Aprac1),
            "aprac2" => Ok(Family::Aprac2),
            other => Err(format!("unknown family `{other}` (expected aprac0, aprac1 or aprac2)")),
        }
    }
}

impl Family {
    /// Maximum bends per edge in the family's drawings.
    pub fn bends(self) -> usize {
        match self {
            Family::Aprac0 => 0,
            Family::Aprac1 => 1,
            Family::Aprac2 => 2,
        }
    }

    pub fn generate(self, param: usize) -> Result<(Graph, Drawing), GeneratorError> {
        match self {
            Family::Aprac0 => gen_aprac0(param),
            Family::Aprac1 => gen_aprac1(param),
            Family::Aprac2 => gen_aprac2(param),
        }
    }
}

struct Builder {
    positions: Vec<Point>,
    edges: Vec<(usize, usize, Vec<Point>)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            positions: vec![Point::new(0, 0); n],
            edges: Vec::new(),
        }
    }

    fn place(&mut self, v: usize, x: i64, y: i64) {
        self.positions[v] = Point::new(x, y);
    }

    fn edge(&mut self, u: usize, v: usize, bends: &[Point]) {
        self.edges.push((u, v, bends.to_vec()));
    }

    fn finish(self) -> (Graph, Drawing) {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let graph = Graph::from_edges(self.positions.len(), &pairs).expect("generated edge sets are simple");
        let edges = self
            .edges
            .into_iter()
            .enumerate()
            .map(|(i, (u, v, bends))| DrawnEdge::with_bends(i, u, v, bends))
            .collect();
        (
            graph,
            Drawing {
                positions: self.positions,
                edges,
            },
        )
    }
}

fn p(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

/// Grid of `k x k` vertices drawn as a 45 degree diamond: grid edges are oblique and the
/// two diagonals of every face are a horizontal/vertical crossing pair. `N` and `S`
/// sit to the right of the diamond, above and below it, and see its upper and lower
/// boundary respectively.
pub fn gen_aprac0(k: usize) -> Result<(Graph, Drawing), GeneratorError> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(GeneratorError::OutOfRange {
            family: "aprac0",
            value: k,
            requirement: "k even and k >= 4",
        });
    }
    let id = |c: usize, r: usize| r * k + c;
    let (north, south) = (k * k, k * k + 1);
    let mut b = Builder::new(k * k + 2);
    for r in 0..k {
        for c in 0..k {
            let (ci, ri) = (c as i64, r as i64);
            b.place(id(c, r), 2 * (ci + ri), 2 * (ci - ri));
        }
    }
    let span = 4 * (k as i64 - 1);
    b.place(north, span + 2, span + 4);
    b.place(south, span + 2, -(span + 4));

    for r in 0..k {
        for c in 0..k {
            if c + 1 < k {
                b.edge(id(c, r), id(c + 1, r), &[]);
            }
            if r + 1 < k {
                b.edge(id(c, r), id(c, r + 1), &[]);
            }
            if c + 1 < k && r + 1 < k {
                b.edge(id(c, r), id(c + 1, r + 1), &[]);
                b.edge(id(c + 1, r), id(c, r + 1), &[]);
            }
        }
    }
    // Upper boundary: the side r = 0 and the side c = k - 1, sharing the top corner.
    for c in 0..k {
        b.edge(north, id(c, 0), &[]);
    }
    for r in 1..k {
        b.edge(north, id(k - 1, r), &[]);
    }
    for r in 0..k {
        b.edge(south, id(0, r), &[]);
    }
    for c in 1..k {
        b.edge(south, id(c, k - 1), &[]);
    }
    b.edge(north, south, &[]);
    Ok(b.finish())
}

/// `n - 4` vertices on the legs of an isosceles triangle (apex up, horizontal base),
/// triangulated by a y-monotone zigzag, plus four outer vertices. Every leg vertex
/// reaches `N` and `S` with a vertical first segment and `W` or `E` with a horizontal
/// one; the inner diagonals have one horizontal segment each.
pub fn gen_aprac1(n: usize) -> Result<(Graph, Drawing), GeneratorError> {
    if n < 8 {
        return Err(GeneratorError::OutOfRange {
            family: "aprac1",
            value: n,
            requirement: "n >= 8",
        });
    }
    let legs = n - 4;
    let left_count = legs / 2;
    let right_count = legs - left_count;
    // Vertices from bottom to top with their side (false = left). Both base vertices
    // share height 0; above them the sides alternate and the top one is on the right.
    let mut seq: Vec<(usize, bool)> = vec![(0, false), (left_count, true)];
    let (mut next_left, mut next_right) = (1, left_count + 1);
    let mut right_turn = right_count > left_count;
    while next_left < left_count || next_right < legs {
        if right_turn {
            seq.push((next_right, true));
            next_right += 1;
        } else {
            seq.push((next_left, false));
            next_left += 1;
        }
        right_turn = !right_turn;
    }
    let height = |i: usize| if i < 2 { 0 } else { 2 * (i as i64 - 1) };
    let top = height(seq.len() - 1);
    let apex = top + 2;
    let leg_x = |right: bool, y: i64| if right { 2 * (apex - y) } else { -2 * (apex - y) };

    let (north, east, south, west) = (legs, legs + 1, legs + 2, legs + 3);
    let mut b = Builder::new(n);
    let mut y_of = vec![0; legs];
    for (i, &(v, right)) in seq.iter().enumerate() {
        y_of[v] = height(i);
        b.place(v, leg_x(right, height(i)), height(i));
    }

    let x_west = -2 * apex - 3;
    let x_east = 2 * apex + 3;
    let x_ns = -2 * apex - 1;
    let y_we = top + 1;
    let y_north = top + 3;
    let y_south = -3;
    let far = 8 * apex + 20;
    b.place(north, 0, y_north + far);
    b.place(east, x_east + far, y_we);
    b.place(south, x_ns, y_south - far);
    b.place(west, x_west - far, top / 2);

    // The cycle: both legs bottom to top, the base and the top edge.
    for w in 1..left_count {
        b.edge(w - 1, w, &[]);
    }
    for w in left_count + 1..legs {
        b.edge(w - 1, w, &[]);
    }
    b.edge(0, left_count, &[]);
    b.edge(left_count - 1, legs - 1, &[]);
    // Diagonals between height-consecutive vertices on opposite legs: horizontal from the
    // upper vertex to just inside the other leg, then a short oblique segment down.
    let mut pairs = vec![(if seq[2].1 { seq[0] } else { seq[1] }, seq[2])];
    for i in 2..seq.len() - 2 {
        pairs.push((seq[i], seq[i + 1]));
    }
    for ((lo, lo_right), (hi, _)) in pairs {
        let y = y_of[hi];
        let inner = if lo_right {
            leg_x(true, y) - 1
        } else {
            leg_x(false, y) + 1
        };
        b.edge(hi, lo, &[p(inner, y)]);
    }
    #[allow(clippy::needless_range_loop)]
    for v in 0..legs {
        let x = b.positions[v].x;
        b.edge(v, north, &[p(x, y_north)]);
        b.edge(v, south, &[p(x, y_south)]);
        if v < left_count {
            b.edge(v, west, &[p(x_west, y_of[v])]);
        } else {
            b.edge(v, east, &[p(x_east, y_of[v])]);
        }
    }
    b.edge(legs - 1, west, &[p(x_west, top)]);
    b.edge(north, east, &[]);
    b.edge(east, south, &[]);
    b.edge(south, west, &[]);
    b.edge(west, north, &[]);
    b.edge(south, north, &[p(x_ns, y_north)]);
    b.edge(east, west, &[p(x_west, y_we)]);
    Ok(b.finish())
}

/// Ranks of the `k x k` points in the slightly rotated grid: point `(c, r)` has x-rank
/// `c k + r` and y-rank `r k + c`. Indexed by `r k + c`.
pub fn sheared_grid_ranks(k: usize) -> Vec<(usize, usize)> {
    (0..k * k).map(|i| (i % k * k + i / k, i)).collect()
}

/// Smallest `dist_x + dist_y` over all pairs, where a distance counts the points strictly
/// between two points along that axis.
pub fn min_rank_distance(ranks: &[(usize, usize)]) -> Option<usize> {
    let mut best = None;
    for (i, a) in ranks.iter().enumerate() {
        for b in &ranks[i + 1..] {
            let d = a.0.abs_diff(b.0) - 1 + a.1.abs_diff(b.1) - 1;
            best = Some(best.map_or(d, |x: usize| x.min(d)));
        }
    }
    best
}

/// `k^2` points of a sheared grid in 8x8 boxes, plus `N`, `E`, `S`, `W`. Each box uses
/// fixed offsets: entries of horizontal-port edges at columns -1 and +1, the middles
/// towards `N` and `S` at +2 and -2 (rows symmetric), consecutive pairs on the box
/// boundary.
pub fn gen_aprac2(k: usize) -> Result<(Graph, Drawing), GeneratorError> {
    if k < 6 {
        return Err(GeneratorError::OutOfRange {
            family: "aprac2",
            value: k,
            requirement: "k >= 6",
        });
    }
    let count = k * k;
    let ranks = sheared_grid_ranks(k);
    let mut by_x = vec![0; count];
    let mut by_y = vec![0; count];
    for (v, &(rx, ry)) in ranks.iter().enumerate() {
        by_x[rx] = v;
        by_y[ry] = v;
    }
    let (north, east, south, west) = (count, count + 1, count + 2, count + 3);
    let mut b = Builder::new(count + 4);
    for (v, &(rx, ry)) in ranks.iter().enumerate() {
        b.place(v, PITCH * rx as i64, PITCH * ry as i64);
    }
    let pos = b.positions.clone();

    for t in 0..count - 1 {
        let (u, v) = (by_x[t], by_x[t + 1]);
        b.edge(u, v, &route_vertical_middle(pos[u], pos[v]));
        let (u, v) = (by_y[t], by_y[t + 1]);
        b.edge(u, v, &route_horizontal_middle(pos[u], pos[v]));
    }

    let extent = PITCH * count as i64;
    let (x_left, x_right) = (-PITCH, extent);
    let (y_bottom, y_top) = (-PITCH, extent);
    let x_ns = x_left + 2;
    let y_we = y_top - 2;
    let far = 4 * extent;
    b.place(north, extent / 2, y_top + far);
    b.place(east, x_right + far, y_we);
    b.place(south, x_ns, y_bottom - far);
    b.place(west, x_left - far, extent / 2);
    let half = BOX_HALF;
    #[allow(clippy::needless_range_loop)]
    for v in 0..count {
        let c = pos[v];
        b.edge(v, north, &[p(c.x + 2, c.y + half), p(c.x + 2, y_top)]);
        b.edge(v, south, &[p(c.x - 2, c.y - half), p(c.x - 2, y_bottom)]);
        b.edge(v, east, &[p(c.x + half, c.y + 2), p(x_right, c.y + 2)]);
        b.edge(v, west, &[p(c.x - half, c.y - 2), p(x_left, c.y - 2)]);
    }

    // Port edges: east to x-rank + 2, west to x-rank - 3, north to y-rank + 2, south to
    // y-rank - 3. Incoming entries use slot -1 for the shorter and +1 for the longer hop.
    for v in 0..count {
        let (rx, ry) = ranks[v];
        if rx + 2 < count {
            let q = by_x[rx + 2];
            b.edge(v, q, &route_horizontal_port(pos[v], pos[q], -1));
        }
        if rx >= 3 {
            let q = by_x[rx - 3];
            b.edge(v, q, &route_horizontal_port(pos[v], pos[q], 1));
        }
        if ry + 2 < count {
            let q = by_y[ry + 2];
            b.edge(v, q, &route_vertical_port(pos[v], pos[q], -1));
        }
        if ry >= 3 {
            let q = by_y[ry - 3];
            b.edge(v, q, &route_vertical_port(pos[v], pos[q], 1));
        }
    }

    b.edge(north, east, &[]);
    b.edge(east, south, &[]);
    b.edge(south, west, &[]);
    b.edge(west, north, &[]);
    b.edge(south, north, &[p(x_ns, y_top)]);
    b.edge(east, west, &[p(x_left, y_we)]);
    Ok(b.finish())
}
