//! Exact validation of polyline drawings against the k-bend RAC, axis-parallel RAC and
//! s-slope RAC rules.

pub mod crossings;
pub mod density;
pub mod forbidden;
mod incidence;
pub mod segments;
mod slopes;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::drawing::Drawing;
use crate::geom::{Point, RatPoint};

pub use crossings::{find_crossings, find_crossings_naive, Crossing};
pub use density::{density_report, DensityBound};
pub use segments::{Segment, SegmentRef};
pub use slopes::{Slope, SlopeParseError, SlopeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every crossing is at a right angle.
    Rac,
    /// Every crossing is between a horizontal and a vertical segment.
    Aprac,
    /// Every crossing is at a right angle between segments whose slopes come from a set.
    SlopeRac,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rac" => Ok(Mode::Rac),
            "aprac" => Ok(Mode::Aprac),
            "slope-rac" => Ok(Mode::SlopeRac),
            other => Err(format!("unknown mode `{other}` (expected rac, aprac or slope-rac)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ValidateOptions {
    pub bends: usize,
    pub mode: Mode,
    pub slopes: SlopeSet,
    /// Require any two edges to share at most one point.
    pub strict_simple: bool,
    /// List horizontal/vertical crossings too (they are only counted otherwise).
    pub collect_crossings: bool,
}

impl ValidateOptions {
    pub fn new(bends: usize, mode: Mode) -> Self {
        ValidateOptions {
            bends,
            mode,
            slopes: SlopeSet::horizontal(),
            strict_simple: false,
            collect_crossings: false,
        }
    }

    pub fn with_slopes(mut self, slopes: SlopeSet) -> Self {
        self.slopes = slopes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BendCount {
        edge: usize,
        bends: usize,
        limit: usize,
    },
    ZeroLength {
        edge: usize,
        index: usize,
    },
    LoopEdge {
        edge: usize,
    },
    OutOfRange {
        point: Point,
    },
    VertexCollision {
        a: usize,
        b: usize,
        point: Point,
    },
    SegmentThroughVertex {
        edge: usize,
        vertex: usize,
        point: Point,
    },
    /// A bend of `bend_edge` lies on `edge`.
    BendOnEdge {
        bend_edge: usize,
        edge: usize,
        point: Point,
    },
    Overlap {
        a: SegmentRef,
        b: SegmentRef,
    },
    Angle {
        a: SegmentRef,
        b: SegmentRef,
        point: RatPoint,
    },
    AxisParallel {
        a: SegmentRef,
        b: SegmentRef,
        point: RatPoint,
    },
    Slope {
        a: SegmentRef,
        b: SegmentRef,
        point: RatPoint,
    },
    NonSimple {
        a: usize,
        b: usize,
        shared: usize,
    },
}

fn seg(s: &SegmentRef) -> String {
    format!("{}.{}", s.edge, s.index)
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            BendCount { edge, bends, limit } => write!(f, "bend-count edge {edge}: {bends} bends, limit {limit}"),
            ZeroLength { edge, index } => write!(f, "zero-length edge {edge} segment {index}"),
            LoopEdge { edge } => write!(f, "loop edge {edge}"),
            OutOfRange { point } => write!(f, "out-of-range point {point}"),
            VertexCollision { a, b, point } => write!(f, "vertex-collision {a} {b} at {point}"),
            SegmentThroughVertex { edge, vertex, point } => {
                write!(f, "segment-through-vertex edge {edge} vertex {vertex} at {point}")
            }
            BendOnEdge { bend_edge, edge, point } => {
                write!(f, "bend-on-edge bend of edge {bend_edge} on edge {edge} at {point}")
            }
            Overlap { a, b } => write!(f, "overlap segments {} {}", seg(a), seg(b)),
            Angle { a, b, point } => write!(f, "angle segments {} {} at {point}", seg(a), seg(b)),
            AxisParallel { a, b, point } => {
                write!(f, "axis-parallel segments {} {} at {point}", seg(a), seg(b))
            }
            Slope { a, b, point } => write!(f, "slope segments {} {} at {point}", seg(a), seg(b)),
            NonSimple { a, b, shared } => write!(f, "non-simple edges {a} {b} share {shared} points"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub n: usize,
    pub m: usize,
    pub max_bends: usize,
    pub bounding_box: Option<(Point, Point)>,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub passed: bool,
    pub crossing_count: u128,
    /// Non-axis-parallel crossings always; all crossings when requested.
    pub crossings: Vec<Crossing>,
    pub violations: Vec<Violation>,
    /// Informational findings that do not affect the verdict.
    pub warnings: Vec<String>,
    pub stats: Stats,
    pub density: Vec<DensityBound>,
}

impl ValidationReport {
    /// Whether a passing drawing exceeds an edge-density bound of its class.
    pub fn density_exceeded(&self) -> bool {
        self.passed && self.density.iter().any(DensityBound::exceeded)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            let _ = writeln!(out, "{v}");
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning {w}");
        }
        let s = &self.stats;
        let _ = writeln!(out, "verdict {}", if self.passed { "pass" } else { "fail" });
        let _ = writeln!(out, "vertices {} edges {} max-bends {}", s.n, s.m, s.max_bends);
        if let Some((lo, hi)) = s.bounding_box {
            let _ = writeln!(out, "bounding-box {lo} {hi} extent {}x{}", hi.x - lo.x, hi.y - lo.y);
        }
        let _ = writeln!(out, "crossings {}", self.crossing_count);
        let _ = writeln!(out, "violations {}", self.violations.len());
        for b in &self.density {
            let _ = writeln!(out, "density {} bound {} slack {}", b.label, b.bound, b.slack);
        }
        out
    }
}

pub fn validate(d: &Drawing, options: &ValidateOptions) -> ValidationReport {
    let mut violations = Vec::new();
    for p in d.positions.iter().chain(d.edges.iter().flat_map(|e| e.bends.iter())) {
        if !p.in_range() {
            violations.push(Violation::OutOfRange { point: *p });
        }
    }
    if !violations.is_empty() {
        // Exact predicates are only safe inside the supported range.
        return finish(d, options, violations, 0, Vec::new(), Vec::new());
    }
    for (ei, e) in d.edges.iter().enumerate() {
        if e.bends.len() > options.bends {
            violations.push(Violation::BendCount {
                edge: ei,
                bends: e.bends.len(),
                limit: options.bends,
            });
        }
        if e.u == e.v {
            violations.push(Violation::LoopEdge { edge: ei });
        }
        for (k, w) in d.polyline(e).windows(2).enumerate() {
            if w[0] == w[1] {
                violations.push(Violation::ZeroLength { edge: ei, index: k });
            }
        }
    }

    let segs = segments::segments(d);
    violations.extend(incidence::point_violations(d, &segs));
    violations.extend(incidence::overlap_violations(&segs));

    let list_all = options.collect_crossings || options.strict_simple;
    let scan = crossings::scan(&segs, list_all);
    let crossing_count = scan.hv_count + scan.listed.iter().filter(|c| !c.axis_parallel).count() as u128;
    for c in scan.listed.iter().filter(|c| !c.axis_parallel) {
        let (a, b, point) = (c.a, c.b, c.point);
        if !c.right_angle {
            violations.push(Violation::Angle { a, b, point });
            continue;
        }
        match options.mode {
            Mode::Rac => {}
            Mode::Aprac => violations.push(Violation::AxisParallel { a, b, point }),
            Mode::SlopeRac => {
                let sa = &segs_lookup(&segs, a);
                let sb = &segs_lookup(&segs, b);
                if !options.slopes.admits(sa.direction()) || !options.slopes.admits(sb.direction()) {
                    violations.push(Violation::Slope { a, b, point });
                }
            }
        }
    }

    let mut warnings = Vec::new();
    if list_all {
        let shared = shared_points(d, &scan.listed);
        for ((a, b), count) in shared {
            if count > 1 {
                if options.strict_simple {
                    violations.push(Violation::NonSimple { a, b, shared: count });
                } else {
                    warnings.push(format!("edges {a} {b} share {count} points"));
                }
            }
        }
    }
    let listed = if list_all {
        scan.listed
    } else {
        scan.listed.into_iter().filter(|c| !c.axis_parallel).collect()
    };
    finish(d, options, violations, crossing_count, listed, warnings)
}

fn finish(
    d: &Drawing,
    options: &ValidateOptions,
    violations: Vec<Violation>,
    crossing_count: u128,
    crossings: Vec<Crossing>,
    warnings: Vec<String>,
) -> ValidationReport {
    let slopes = (options.mode == Mode::SlopeRac).then(|| options.slopes.len());
    ValidationReport {
        passed: violations.is_empty(),
        crossing_count,
        crossings,
        violations,
        warnings,
        stats: Stats {
            n: d.n(),
            m: d.m(),
            max_bends: d.max_bends(),
            bounding_box: d.bounding_box(),
        },
        density: density_report(d.n(), d.m(), options.bends, slopes),
    }
}

fn segs_lookup(segs: &[Segment], r: SegmentRef) -> Segment {
    let i = segs.partition_point(|s| s.id < r);
    segs[i]
}

/// Points shared by each pair of distinct edges: crossings plus common endpoints.
fn shared_points(d: &Drawing, listed: &[Crossing]) -> BTreeMap<(usize, usize), usize> {
    let mut shared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in listed.iter().filter(|c| c.a.edge != c.b.edge) {
        let (a, b) = (c.a.edge.min(c.b.edge), c.a.edge.max(c.b.edge));
        *shared.entry((a, b)).or_default() += 1;
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); d.n()];
    for (ei, e) in d.edges.iter().enumerate() {
        incident[e.u].push(ei);
        if e.v != e.u {
            incident[e.v].push(ei);
        }
    }
    for list in incident {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                *shared.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
    }
    shared
}
