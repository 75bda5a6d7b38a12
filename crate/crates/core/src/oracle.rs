//! Exhaustive search for straight-line drawings of tiny graphs on a bounded grid.
//!
//! Vertices are placed in order of decreasing degree; a partial placement is dropped as
//! soon as an edge passes through a vertex or two placed edges cross badly. Complete
//! placements are only accepted in a canonical position under translation and the grid
//! symmetries, and are certified by the validator. A failed search says nothing about
//! drawings on larger grids.

use rayon::prelude::*;
use thiserror::Error;

use crate::drawing::{Drawing, DrawnEdge};
use crate::geom::{orient2d, Point};
use crate::graph::Graph;
use crate::validate::{validate, Mode, ValidateOptions};

pub const MAX_VERTICES: usize = 7;
pub const MAX_CELLS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("the search handles at most {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("grid {0}x{1} has more than {MAX_CELLS} points")]
    GridTooLarge(usize, usize),
    #[error("the search supports modes rac and aprac only")]
    UnsupportedMode,
}

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub width: usize,
    pub height: usize,
    pub mode: Mode,
    /// Explore first-level branches in a fixed order and return the first hit in it.
    pub deterministic: bool,
}

impl OracleOptions {
    pub fn new(width: usize, height: usize, mode: Mode) -> Self {
        OracleOptions {
            width,
            height,
            mode,
            deterministic: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Drawing),
    NotFound {
        width: usize,
        height: usize,
        /// Canonical complete placements that were handed to the validator.
        candidates: u64,
    },
}

impl SearchOutcome {
    pub fn drawing(&self) -> Option<&Drawing> {
        match self {
            SearchOutcome::Found(d) => Some(d),
            SearchOutcome::NotFound { .. } => None,
        }
    }

    pub fn summary(&self) -> String {
        match self {
            SearchOutcome::Found(d) => format!("found: {} vertices, {} edges", d.n(), d.m()),
            SearchOutcome::NotFound {
                width,
                height,
                candidates,
            } => format!(
                "not found on the {width}x{height} grid ({candidates} candidate placements rejected); \
                 this is not a proof that no such drawing exists"
            ),
        }
    }
}

struct Search<'a> {
    order: Vec<usize>,
    /// For each position in `order`, the neighbours placed before it.
    earlier: Vec<Vec<usize>>,
    edges: &'a [(usize, usize)],
    cells: Vec<Point>,
    opts: OracleOptions,
}

#[derive(Clone)]
struct State {
    pos: Vec<Option<Point>>,
    segments: Vec<(usize, usize)>,
    candidates: u64,
}

fn strictly_inside(a: Point, b: Point, p: Point) -> bool {
    orient2d(a, b, p) == 0
        && p != a
        && p != b
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

fn proper_crossing(a: Point, b: Point, c: Point, d: Point) -> bool {
    let s = |x: i128| x.signum();
    s(orient2d(a, b, c)) * s(orient2d(a, b, d)) < 0 && s(orient2d(c, d, a)) * s(orient2d(c, d, b)) < 0
}

impl Search<'_> {
    fn crossing_allowed(&self, a: Point, b: Point, c: Point, d: Point) -> bool {
        let (u, w) = ((b.x - a.x, b.y - a.y), (d.x - c.x, d.y - c.y));
        match self.opts.mode {
            Mode::Aprac => (u.0 == 0 && w.1 == 0) || (u.1 == 0 && w.0 == 0),
            _ => u.0 as i128 * w.0 as i128 + u.1 as i128 * w.1 as i128 == 0,
        }
    }

    fn fits(&self, state: &State, v: usize, c: Point) -> bool {
        let placed = || state.pos.iter().flatten();
        if placed().any(|&p| p == c) {
            return false;
        }
        let at = |x: usize| state.pos[x].expect("segment endpoints are placed");
        if state.segments.iter().any(|&(a, b)| strictly_inside(at(a), at(b), c)) {
            return false;
        }
        let i = self.order.iter().position(|&x| x == v).expect("v is in the order");
        for &w in &self.earlier[i] {
            let q = at(w);
            if placed().any(|&p| strictly_inside(c, q, p)) {
                return false;
            }
            for &(a, b) in &state.segments {
                if a == w || b == w {
                    continue;
                }
                let (pa, pb) = (at(a), at(b));
                if proper_crossing(c, q, pa, pb) && !self.crossing_allowed(c, q, pa, pb) {
                    return false;
                }
            }
        }
        true
    }

    fn descend(&self, state: &mut State, i: usize) -> Option<Vec<Point>> {
        if i == self.order.len() {
            let pos: Vec<Point> = state.pos.iter().map(|p| p.expect("all placed")).collect();
            if !is_canonical(&pos, self.opts.width, self.opts.height) {
                return None;
            }
            state.candidates += 1;
            return Some(pos);
        }
        let v = self.order[i];
        for &c in &self.cells {
            if !self.fits(state, v, c) {
                continue;
            }
            state.pos[v] = Some(c);
            let added = self.earlier[i].len();
            state.segments.extend(self.earlier[i].iter().map(|&w| (v, w)));
            if let Some(pos) = self.descend(state, i + 1) {
                if self.certify(&pos) {
                    return Some(pos);
                }
            }
            state.segments.truncate(state.segments.len() - added);
            state.pos[v] = None;
        }
        None
    }

    fn drawing(&self, pos: &[Point]) -> Drawing {
        Drawing {
            positions: pos.to_vec(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| DrawnEdge::straight(i, u, v))
                .collect(),
        }
    }

    fn certify(&self, pos: &[Point]) -> bool {
        validate(&self.drawing(pos), &ValidateOptions::new(0, self.opts.mode)).passed
    }
}

/// Whether `pos` is the lexicographically smallest of its images under the grid
/// symmetries, each translated to touch both axes.
fn is_canonical(pos: &[Point], width: usize, height: usize) -> bool {
    let normalize = |pts: Vec<Point>| -> Vec<Point> {
        let mx = pts.iter().map(|p| p.x).min().unwrap_or(0);
        let my = pts.iter().map(|p| p.y).min().unwrap_or(0);
        pts.into_iter().map(|p| Point::new(p.x - mx, p.y - my)).collect()
    };
    let own = normalize(pos.to_vec());
    if own != pos {
        return false;
    }
    let (w, h) = (width as i64, height as i64);
    for t in 1..8 {
        let img = normalize(
            pos.iter()
                .map(|p| {
                    let (x, y) = if t & 4 != 0 { (p.y, p.x) } else { (p.x, p.y) };
                    let x = if t & 1 != 0 { -x } else { x };
                    let y = if t & 2 != 0 { -y } else { y };
                    Point::new(x, y)
                })
                .collect(),
        );
        let fits = img.iter().all(|p| p.x < w && p.y < h);
        if fits && img < own {
            return false;
        }
    }
    true
}

pub fn search_drawing(g: &Graph, opts: OracleOptions) -> Result<SearchOutcome, OracleError> {
    if g.n() > MAX_VERTICES {
        return Err(OracleError::TooManyVertices(g.n()));
    }
    if opts.width * opts.height > MAX_CELLS {
        return Err(OracleError::GridTooLarge(opts.width, opts.height));
    }
    if opts.mode == Mode::SlopeRac {
        return Err(OracleError::UnsupportedMode);
    }
    let not_found = |candidates| SearchOutcome::NotFound {
        width: opts.width,
        height: opts.height,
        candidates,
    };
    if opts.width == 0 || opts.height == 0 {
        return Ok(if g.n() == 0 {
            SearchOutcome::Found(Drawing::default())
        } else {
            not_found(0)
        });
    }

    let deg = g.degrees();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let adj = g.adjacency();
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| adj[v].iter().copied().filter(|w| order[..i].contains(w)).collect())
        .collect();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let cells: Vec<Point> = (0..opts.height as i64)
        .flat_map(|y| (0..opts.width as i64).map(move |x| Point::new(x, y)))
        .collect();
    let search = Search {
        order,
        earlier,
        edges: &edges,
        cells,
        opts,
    };
    if g.n() == 0 {
        return Ok(SearchOutcome::Found(Drawing::default()));
    }

    // Split at the first placement level.
    let first = search.order[0];
    let branch = |&c: &Point| {
        let mut state = State {
            pos: vec![None; g.n()],
            segments: Vec::new(),
            candidates: 0,
        };
        state.pos[first] = Some(c);
        let hit = search.descend(&mut state, 1);
        (hit, state.candidates)
    };
    let results: Vec<(Option<Vec<Point>>, u64)> = if opts.deterministic {
        let mut out = Vec::new();
        for c in &search.cells {
            let r = branch(c);
            let done = r.0.is_some();
            out.push(r);
            if done {
                break;
            }
        }
        out
    } else {
        search.cells.par_iter().map(branch).collect()
    };
    let candidates = results.iter().map(|r| r.1).sum();
    Ok(match results.into_iter().find_map(|r| r.0) {
        Some(pos) => SearchOutcome::Found(search.drawing(&pos)),
        None => not_found(candidates),
    })
}
