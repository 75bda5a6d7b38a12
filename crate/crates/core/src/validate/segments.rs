use crate::drawing::Drawing;
use crate::geom::{orientation, Orientation, Point};

/// Identifies segment `index` of the polyline of drawing edge `edge` (edges are numbered
/// by their position in the drawing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegmentRef {
    pub edge: usize,
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub id: SegmentRef,
    pub p: Point,
    pub q: Point,
    pub orientation: Orientation,
    /// Endpoint vertex of the edge touched by this segment, if any.
    pub incident_vertex: Option<usize>,
}

impl Segment {
    pub fn xmin(&self) -> i64 {
        self.p.x.min(self.q.x)
    }
    pub fn xmax(&self) -> i64 {
        self.p.x.max(self.q.x)
    }
    pub fn ymin(&self) -> i64 {
        self.p.y.min(self.q.y)
    }
    pub fn ymax(&self) -> i64 {
        self.p.y.max(self.q.y)
    }
    pub fn direction(&self) -> (i64, i64) {
        (self.q.x - self.p.x, self.q.y - self.p.y)
    }
}

/// All positive-length segments of the drawing in edge order. Zero-length pieces are
/// skipped here and reported by the validator.
pub fn segments(d: &Drawing) -> Vec<Segment> {
    let mut out = Vec::new();
    for (ei, e) in d.edges.iter().enumerate() {
        let pts = d.polyline(e);
        let last = pts.len() - 2;
        for (k, w) in pts.windows(2).enumerate() {
            let Some(orientation) = orientation(w[0], w[1]) else {
                continue;
            };
            let incident_vertex = match (k == 0, k == last) {
                (true, _) => Some(e.u),
                (false, true) => Some(e.v),
                _ => None,
            };
            out.push(Segment {
                id: SegmentRef { edge: ei, index: k },
                p: w[0],
                q: w[1],
                orientation,
                incident_vertex,
            });
        }
    }
    out
}
