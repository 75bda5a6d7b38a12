//! Drawing hygiene: coincident points, points lying inside foreign segments and
//! collinear overlaps.

use std::collections::{BTreeSet, HashMap};

use super::crossings::LineIndex;
use super::segments::{Segment, SegmentRef};
use super::Violation;
use crate::drawing::Drawing;
use crate::geom::{lattice_steps, on_segment, Orientation, Point};

/// Above this many lattice steps an oblique segment is checked against a point scan
/// rather than by enumerating its lattice points.
const LATTICE_ENUMERATION_LIMIT: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Owner {
    Vertex(usize),
    Bend { edge: usize, index: usize },
}

fn owners(d: &Drawing) -> HashMap<Point, Vec<Owner>> {
    let mut map: HashMap<Point, Vec<Owner>> = HashMap::new();
    for (v, &p) in d.positions.iter().enumerate() {
        map.entry(p).or_default().push(Owner::Vertex(v));
    }
    for (ei, e) in d.edges.iter().enumerate() {
        for (k, &p) in e.bends.iter().enumerate() {
            map.entry(p).or_default().push(Owner::Bend { edge: ei, index: k });
        }
    }
    map
}

/// Index of an owner within the point sequence of edge `ei`, if it belongs to it.
fn position_on(d: &Drawing, ei: usize, o: Owner) -> Option<usize> {
    let e = &d.edges[ei];
    match o {
        Owner::Vertex(v) if v == e.u => Some(0),
        Owner::Vertex(v) if v == e.v => Some(e.bends.len() + 1),
        Owner::Bend { edge, index } if edge == ei => Some(index + 1),
        _ => None,
    }
}

#[derive(Default)]
struct Sink {
    vertex_hits: BTreeSet<(usize, usize)>,
    bend_hits: BTreeSet<(usize, usize)>,
    out: Vec<Violation>,
}

impl Sink {
    /// Owner `o` sits at `point`, which lies on edge `edge`.
    fn hit(&mut self, d: &Drawing, o: Owner, edge: usize, point: Point) {
        match o {
            Owner::Vertex(v) if v != d.edges[edge].u && v != d.edges[edge].v => {
                if self.vertex_hits.insert((edge, v)) {
                    self.out
                        .push(Violation::SegmentThroughVertex { edge, vertex: v, point });
                }
            }
            Owner::Vertex(_) => {
                // An edge returning to its own endpoint.
                if self.bend_hits.insert((edge, edge)) {
                    self.out.push(Violation::BendOnEdge {
                        bend_edge: edge,
                        edge,
                        point,
                    });
                }
            }
            Owner::Bend { edge: f, .. } => {
                if self.bend_hits.insert((f, edge)) {
                    self.out.push(Violation::BendOnEdge {
                        bend_edge: f,
                        edge,
                        point,
                    });
                }
            }
        }
    }
}

pub(crate) fn point_violations(d: &Drawing, segs: &[Segment]) -> Vec<Violation> {
    let map = owners(d);
    let mut sink = Sink::default();

    let mut groups: Vec<(&Point, &Vec<Owner>)> = map.iter().filter(|(_, o)| o.len() > 1).collect();
    groups.sort();
    for (&point, list) in groups {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                match (a, b) {
                    (Owner::Vertex(x), Owner::Vertex(y)) => {
                        sink.out.push(Violation::VertexCollision { a: x, b: y, point });
                    }
                    (Owner::Vertex(_), Owner::Bend { edge, .. }) | (Owner::Bend { edge, .. }, Owner::Vertex(_)) => {
                        let v = if matches!(a, Owner::Vertex(_)) { a } else { b };
                        let bend = if v == a { b } else { a };
                        if !adjacent_on(d, edge, v, bend) {
                            sink.hit(d, v, edge, point);
                        }
                    }
                    (Owner::Bend { edge: e, .. }, Owner::Bend { edge: f, .. }) => {
                        if e != f || !adjacent_on(d, e, a, b) {
                            sink.hit(d, a, f, point);
                        }
                    }
                }
            }
        }
    }

    let hs: Vec<&Segment> = segs
        .iter()
        .filter(|s| s.orientation == Orientation::Horizontal)
        .collect();
    let vs: Vec<&Segment> = segs.iter().filter(|s| s.orientation == Orientation::Vertical).collect();
    let h_index = LineIndex::build(&hs, |s| s.p.y, |s| (s.xmin(), s.xmax()));
    let v_index = LineIndex::build(&vs, |s| s.p.x, |s| (s.ymin(), s.ymax()));
    let mut points: Vec<(&Point, &Vec<Owner>)> = map.iter().collect();
    points.sort();
    let mut interior: Vec<(Point, SegmentRef)> = Vec::new();
    for &(&p, _) in &points {
        h_index.containing(p.y, p.x, |s| {
            if s.xmin() < p.x && p.x < s.xmax() {
                interior.push((p, s.id));
            }
        });
        v_index.containing(p.x, p.y, |s| {
            if s.ymin() < p.y && p.y < s.ymax() {
                interior.push((p, s.id));
            }
        });
    }
    for s in segs.iter().filter(|s| s.orientation == Orientation::Oblique) {
        let steps = lattice_steps(s.p, s.q);
        if steps <= LATTICE_ENUMERATION_LIMIT {
            let (dx, dy) = s.direction();
            let (sx, sy) = (dx / steps as i64, dy / steps as i64);
            for k in 1..steps as i64 {
                let p = Point::new(s.p.x + k * sx, s.p.y + k * sy);
                if map.contains_key(&p) {
                    interior.push((p, s.id));
                }
            }
        } else {
            let lo = points.partition_point(|(p, _)| p.x <= s.xmin());
            for &(&p, _) in points[lo..].iter().take_while(|(p, _)| p.x < s.xmax()) {
                if on_segment(s.p, s.q, p) {
                    interior.push((p, s.id));
                }
            }
        }
    }
    interior.sort();
    for (p, seg) in interior {
        for &o in &map[&p] {
            sink.hit(d, o, seg.edge, p);
        }
    }
    sink.out
}

/// Whether the two owners are consecutive points of the polyline of `edge`. Such pairs
/// form a zero-length segment, which is reported separately.
fn adjacent_on(d: &Drawing, edge: usize, a: Owner, b: Owner) -> bool {
    match (position_on(d, edge, a), position_on(d, edge, b)) {
        (Some(i), Some(j)) => i.abs_diff(j) == 1,
        _ => false,
    }
}

/// Segments on one line: (start, end, segment) along the line direction.
type LineSpans = Vec<(i64, i64, SegmentRef)>;

pub(crate) fn overlap_violations(segs: &[Segment]) -> Vec<Violation> {
    // Key each segment by the line it lies on and its span along that line.
    let mut lines: HashMap<(i64, i64, i128), LineSpans> = HashMap::new();
    for s in segs {
        let (dx, dy) = s.direction();
        let g = num_integer::Integer::gcd(&dx, &dy);
        let (mut a, mut b) = (dx / g, dy / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        let offset = a as i128 * s.p.y as i128 - b as i128 * s.p.x as i128;
        let (lo, hi) = if a != 0 {
            (s.xmin(), s.xmax())
        } else {
            (s.ymin(), s.ymax())
        };
        lines.entry((a, b, offset)).or_default().push((lo, hi, s.id));
    }
    let mut out = Vec::new();
    for (_, mut items) in lines {
        items.sort();
        let mut best: Option<(i64, SegmentRef)> = None;
        for (lo, hi, id) in items {
            if let Some((bhi, bid)) = best {
                if lo < bhi {
                    out.push(Violation::Overlap { a: bid, b: id });
                }
            }
            if best.is_none_or(|(bhi, _)| hi > bhi) {
                best = Some((hi, id));
            }
        }
    }
    out.sort_by_key(|v| match v {
        Violation::Overlap { a, b } => (*a.min(b), *a.max(b)),
        _ => unreachable!(),
    });
    out
}
