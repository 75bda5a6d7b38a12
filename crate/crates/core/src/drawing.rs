//! Polyline drawings and their line-based file format.
//!
//! ```text
//! v <id> <x> <y>
//! e <u> <v> [b <x> <y>]...
//! ```
//!
//! Bends are listed from `u` to `v`. Lines starting with `#` are comments; the writer
//! uses `# augmented <edge-index>` and `# factor <edge-index> <f>` comments to carry
//! optional per-edge metadata that other readers may ignore.

use std::fmt::Write as _;

use smallvec::SmallVec;
use thiserror::Error;

use crate::geom::{Point, COORD_LIMIT};
use crate::graph::{EdgeId, Graph};

/// Bend points of one edge; the common case of at most two stays inline.
pub type Bends = SmallVec<[Point; 2]>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawnEdge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
    pub bends: Bends,
    pub augmented: bool,
    /// Index of the 2-factor the edge was routed with, when known.
    pub factor: Option<u8>,
}

impl DrawnEdge {
    pub fn straight(id: usize, u: usize, v: usize) -> Self {
        DrawnEdge::with_bends(id, u, v, [])
    }

    pub fn with_bends(id: usize, u: usize, v: usize, bends: impl IntoIterator<Item = Point>) -> Self {
        DrawnEdge {
            id: EdgeId(id),
            u,
            v,
            bends: bends.into_iter().collect(),
            augmented: false,
            factor: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Drawing {
    pub positions: Vec<Point>,
    pub edges: Vec<DrawnEdge>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DrawingParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

impl Drawing {
    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// The full point sequence of an edge: `u`, its bends, then `v`.
    pub fn polyline(&self, edge: &DrawnEdge) -> Vec<Point> {
        let mut pts = Vec::with_capacity(edge.bends.len() + 2);
        pts.push(self.positions[edge.u]);
        pts.extend_from_slice(&edge.bends);
        pts.push(self.positions[edge.v]);
        pts
    }

    pub fn max_bends(&self) -> usize {
        self.edges.iter().map(|e| e.bends.len()).max().unwrap_or(0)
    }

    /// `(min, max)` corners over all vertices and bends, or `None` for an empty drawing.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let mut pts = self
            .positions
            .iter()
            .chain(self.edges.iter().flat_map(|e| e.bends.iter()));
        let first = *pts.next()?;
        let (mut lo, mut hi) = (first, first);
        for p in pts {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }

    /// Width and height of the bounding box in grid units.
    pub fn extent(&self) -> (i64, i64) {
        self.bounding_box()
            .map(|(lo, hi)| (hi.x - lo.x, hi.y - lo.y))
            .unwrap_or((0, 0))
    }

    /// The underlying graph of the non-augmented edges.
    pub fn graph(&self) -> Result<Graph, crate::graph::GraphError> {
        let mut g = Graph::new(self.n());
        for e in self.edges.iter().filter(|e| !e.augmented) {
            g.add_edge(e.u, e.v)?;
        }
        Ok(g)
    }

    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> Drawing {
        Drawing {
            positions: self.positions.iter().map(|&p| f(p)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| DrawnEdge {
                    bends: e.bends.iter().map(|&p| f(p)).collect(),
                    ..e.clone()
                })
                .collect(),
        }
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Drawing {
        self.map_points(|p| Point::new(p.x + dx, p.y + dy))
    }

    /// Rotation by 90 degrees counter-clockwise about the origin.
    pub fn rotate90(&self) -> Drawing {
        self.map_points(|p| Point::new(-p.y, p.x))
    }

    /// Rotation by 45 degrees combined with scaling by sqrt(2): `(x, y) -> (x - y, x + y)`.
    pub fn rotate45_scaled(&self) -> Drawing {
        self.map_points(|p| Point::new(p.x - p.y, p.x + p.y))
    }
}

pub fn serialize_drawing(d: &Drawing) -> String {
    let mut out = String::new();
    for (i, p) in d.positions.iter().enumerate() {
        let _ = writeln!(out, "v {} {} {}", i, p.x, p.y);
    }
    for (i, e) in d.edges.iter().enumerate() {
        if e.augmented {
            let _ = writeln!(out, "# augmented {i}");
        }
        if let Some(f) = e.factor {
            let _ = writeln!(out, "# factor {i} {f}");
        }
        let _ = write!(out, "e {} {}", e.u, e.v);
        for b in &e.bends {
            let _ = write!(out, " b {} {}", b.x, b.y);
        }
        out.push('\n');
    }
    out
}

pub fn parse_drawing(text: &str) -> Result<Drawing, DrawingParseError> {
    let mut positions: Vec<Option<Point>> = Vec::new();
    let mut edges: Vec<DrawnEdge> = Vec::new();
    let mut augmented: Vec<usize> = Vec::new();
    let mut factors: Vec<(usize, u8)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| DrawingParseError::Malformed { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let tokens: Vec<&str> = comment.split_whitespace().collect();
            match tokens.as_slice() {
                ["augmented", i] => {
                    if let Ok(i) = i.parse() {
                        augmented.push(i);
                    }
                }
                ["factor", i, f] => {
                    if let (Ok(i), Ok(f)) = (i.parse(), f.parse()) {
                        factors.push((i, f));
                    }
                }
                _ => {}
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let int = |s: &str| -> Result<i64, DrawingParseError> {
            let v: i64 = s
                .parse()
                .map_err(|_| err(format!("expected an integer, found `{s}`")))?;
            if v.abs() > COORD_LIMIT {
                return Err(err(format!("coordinate {v} exceeds the supported range")));
            }
            Ok(v)
        };
        let index = |s: &str| -> Result<usize, DrawingParseError> {
            s.parse().map_err(|_| err(format!("expected a vertex id, found `{s}`")))
        };
        match tokens[0] {
            "v" => {
                if tokens.len() != 4 {
                    return Err(err("vertex line must be `v <id> <x> <y>`".into()));
                }
                let id = index(tokens[1])?;
                let p = Point::new(int(tokens[2])?, int(tokens[3])?);
                if id >= positions.len() {
                    positions.resize(id + 1, None);
                }
                if positions[id].replace(p).is_some() {
                    return Err(err(format!("vertex {id} defined twice")));
                }
            }
            "e" => {
                if tokens.len() < 3 || !(tokens.len() - 3).is_multiple_of(3) {
                    return Err(err("edge line must be `e <u> <v> [b <x> <y>]...`".into()));
                }
                let u = index(tokens[1])?;
                let v = index(tokens[2])?;
                let mut bends = Bends::new();
                for chunk in tokens[3..].chunks(3) {
                    if chunk[0] != "b" {
                        return Err(err(format!("expected `b`, found `{}`", chunk[0])));
                    }
                    bends.push(Point::new(int(chunk[1])?, int(chunk[2])?));
                }
                edge_lines.push(line);
                edges.push(DrawnEdge::with_bends(edges.len(), u, v, bends));
            }
            other => return Err(err(format!("unknown line tag `{other}`"))),
        }
    }

    let positions: Vec<Point> = positions
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            p.ok_or_else(|| DrawingParseError::Malformed {
                line: 0,
                message: format!("vertex {i} has no position"),
            })
        })
        .collect::<Result<_, _>>()?;
    for (e, &line) in edges.iter().zip(&edge_lines) {
        for w in [e.u, e.v] {
            if w >= positions.len() {
                return Err(DrawingParseError::Malformed {
                    line,
                    message: format!("edge endpoint {w} is not a vertex"),
                });
            }
        }
    }
    for i in augmented {
        if let Some(e) = edges.get_mut(i) {
            e.augmented = true;
        }
    }
    for (i, f) in factors {
        if let Some(e) = edges.get_mut(i) {
            e.factor = Some(f);
        }
    }
    Ok(Drawing { positions, edges })
}
