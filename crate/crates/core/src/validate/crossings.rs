//! Exact crossing detection.
//!
//! Horizontal/vertical pairs are handled by an x-sweep that can either count them with a
//! Fenwick tree or list them; every other pair is found through per-line indexes
//! (oblique against axis-parallel) or an x-sorted sweep (oblique against oblique).

use std::collections::{BTreeMap, BTreeSet};

use super::segments::{segments, Segment, SegmentRef};
use crate::drawing::Drawing;
use crate::geom::{dot, intersect, Intersection, Orientation, RatPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// The two segments with `a < b`.
    pub a: SegmentRef,
    pub b: SegmentRef,
    pub point: RatPoint,
    pub right_angle: bool,
    /// One segment is horizontal and the other vertical.
    pub axis_parallel: bool,
}

fn make_crossing(s: &Segment, t: &Segment, point: RatPoint) -> Crossing {
    let (a, b) = if s.id < t.id { (s, t) } else { (t, s) };
    Crossing {
        a: a.id,
        b: b.id,
        point,
        right_angle: dot(a.direction(), b.direction()) == 0,
        axis_parallel: matches!(
            (a.orientation, b.orientation),
            (Orientation::Horizontal, Orientation::Vertical) | (Orientation::Vertical, Orientation::Horizontal)
        ),
    }
}

fn proper(s: &Segment, t: &Segment) -> Option<Crossing> {
    match intersect(s.p, s.q, t.p, t.q) {
        Intersection::Proper(point) => Some(make_crossing(s, t, point)),
        _ => None,
    }
}

fn sort(list: &mut [Crossing]) {
    list.sort_by_key(|c| (c.a, c.b));
}

/// Reference implementation: tests every pair of segments.
pub fn find_crossings_naive(d: &Drawing) -> Vec<Crossing> {
    let segs = segments(d);
    let mut out = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if let Some(c) = proper(&segs[i], &segs[j]) {
                out.push(c);
            }
        }
    }
    sort(&mut out);
    out
}

/// Every crossing of the drawing, sorted by segment pair.
pub fn find_crossings(d: &Drawing) -> Vec<Crossing> {
    let segs = segments(d);
    let scan = scan(&segs, true);
    scan.listed
}

pub(crate) struct Scan {
    /// Number of horizontal/vertical crossings.
    pub hv_count: u128,
    /// All non-axis-parallel crossings, plus the horizontal/vertical ones when requested.
    pub listed: Vec<Crossing>,
}

pub(crate) fn scan(segs: &[Segment], list_hv: bool) -> Scan {
    let by = |o: Orientation| -> Vec<&Segment> { segs.iter().filter(|s| s.orientation == o).collect() };
    let hs = by(Orientation::Horizontal);
    let vs = by(Orientation::Vertical);
    let os = by(Orientation::Oblique);

    let mut listed = Vec::new();
    let hv_count = if list_hv {
        let found = list_hv_crossings(&hs, &vs);
        let c = found.len() as u128;
        listed.extend(found);
        c
    } else {
        count_hv_crossings(&hs, &vs)
    };

    let h_index = LineIndex::build(&hs, |s| s.p.y, |s| (s.xmin(), s.xmax()));
    let v_index = LineIndex::build(&vs, |s| s.p.x, |s| (s.ymin(), s.ymax()));
    for o in &os {
        h_index.for_each_candidate((o.ymin(), o.ymax()), (o.xmin(), o.xmax()), |t| {
            listed.extend(proper(o, t));
        });
        v_index.for_each_candidate((o.xmin(), o.xmax()), (o.ymin(), o.ymax()), |t| {
            listed.extend(proper(o, t));
        });
    }

    let mut sorted = os.clone();
    sorted.sort_by_key(|s| s.xmin());
    for i in 0..sorted.len() {
        let s = sorted[i];
        for t in &sorted[i + 1..] {
            if t.xmin() > s.xmax() {
                break;
            }
            if t.ymin() <= s.ymax() && s.ymin() <= t.ymax() {
                listed.extend(proper(s, t));
            }
        }
    }
    sort(&mut listed);
    Scan { hv_count, listed }
}

/// Axis-parallel segments grouped by the line they lie on, each line sorted by interval start.
pub(crate) struct LineIndex<'a> {
    lines: BTreeMap<i64, Line<'a>>,
}

struct Line<'a> {
    /// `(lo, hi, segment)` sorted by `lo`.
    items: Vec<(i64, i64, &'a Segment)>,
    /// Running maximum of `hi` over the prefix.
    prefix_hi: Vec<i64>,
}

impl<'a> LineIndex<'a> {
    pub(crate) fn build(
        segs: &[&'a Segment],
        line: impl Fn(&Segment) -> i64,
        span: impl Fn(&Segment) -> (i64, i64),
    ) -> Self {
        let mut raw: BTreeMap<i64, Vec<(i64, i64, &'a Segment)>> = BTreeMap::new();
        for &s in segs {
            let (lo, hi) = span(s);
            raw.entry(line(s)).or_default().push((lo, hi, s));
        }
        let lines = raw
            .into_iter()
            .map(|(k, mut items)| {
                items.sort_by_key(|&(lo, hi, s)| (lo, hi, s.id));
                let mut best = i64::MIN;
                let prefix_hi = items
                    .iter()
                    .map(|&(_, hi, _)| {
                        best = best.max(hi);
                        best
                    })
                    .collect();
                (k, Line { items, prefix_hi })
            })
            .collect();
        LineIndex { lines }
    }

    /// Calls `f` for every segment on a line in `lines` whose span meets `span`.
    pub(crate) fn for_each_candidate(&self, lines: (i64, i64), span: (i64, i64), mut f: impl FnMut(&'a Segment)) {
        for line in self.lines.range(lines.0..=lines.1).map(|(_, l)| l) {
            let end = line.items.partition_point(|&(lo, _, _)| lo <= span.1);
            for i in (0..end).rev() {
                if line.prefix_hi[i] < span.0 {
                    break;
                }
                let (_, hi, s) = line.items[i];
                if hi >= span.0 {
                    f(s);
                }
            }
        }
    }

    /// Every segment on line `line` whose closed span contains `at`.
    pub(crate) fn containing(&self, line: i64, at: i64, mut f: impl FnMut(&'a Segment)) {
        self.for_each_candidate((line, line), (at, at), &mut f);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum EventKind {
    Remove,
    Query,
    Insert,
}

/// Sweep events in x order. At equal x, horizontal segments ending there are removed
/// before vertical segments are queried, and those starting there are inserted after, so
/// only strictly interior meetings are found.
fn events<'a>(hs: &[&'a Segment], vs: &[&'a Segment]) -> Vec<(i64, EventKind, &'a Segment)> {
    let mut ev = Vec::with_capacity(2 * hs.len() + vs.len());
    for &h in hs {
        ev.push((h.xmin(), EventKind::Insert, h));
        ev.push((h.xmax(), EventKind::Remove, h));
    }
    for &v in vs {
        ev.push((v.p.x, EventKind::Query, v));
    }
    ev.sort_by_key(|&(x, k, s)| (x, k, s.id));
    ev
}

fn count_hv_crossings(hs: &[&Segment], vs: &[&Segment]) -> u128 {
    let mut ys: Vec<i64> = hs.iter().map(|s| s.p.y).collect();
    ys.sort_unstable();
    ys.dedup();
    let mut tree = Fenwick::new(ys.len());
    let mut total = 0u128;
    for (_, kind, s) in events(hs, vs) {
        match kind {
            EventKind::Insert => tree.add(ys.binary_search(&s.p.y).expect("indexed"), 1),
            EventKind::Remove => tree.add(ys.binary_search(&s.p.y).expect("indexed"), -1),
            EventKind::Query => {
                // Open interval (ymin, ymax).
                let lo = ys.partition_point(|&y| y <= s.ymin());
                let hi = ys.partition_point(|&y| y < s.ymax());
                if lo < hi {
                    total += (tree.prefix(hi) - tree.prefix(lo)) as u128;
                }
            }
        }
    }
    total
}

fn list_hv_crossings(hs: &[&Segment], vs: &[&Segment]) -> Vec<Crossing> {
    let mut active: BTreeSet<(i64, SegmentRef)> = BTreeSet::new();
    let mut by_ref: BTreeMap<SegmentRef, &Segment> = BTreeMap::new();
    let mut out = Vec::new();
    for (_, kind, s) in events(hs, vs) {
        match kind {
            EventKind::Insert => {
                active.insert((s.p.y, s.id));
                by_ref.insert(s.id, s);
            }
            EventKind::Remove => {
                active.remove(&(s.p.y, s.id));
            }
            EventKind::Query => {
                let lo = (
                    s.ymin(),
                    SegmentRef {
                        edge: usize::MAX,
                        index: usize::MAX,
                    },
                );
                let hi = (s.ymax(), SegmentRef { edge: 0, index: 0 });
                if lo >= hi {
                    continue;
                }
                for &(y, r) in active.range(lo..hi) {
                    let point = RatPoint::new(s.p.x as i128, y as i128, 1);
                    out.push(make_crossing(s, by_ref[&r], point));
                }
            }
        }
    }
    out
}

struct Fenwick {
    tree: Vec<i64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick { tree: vec![0; n + 1] }
    }

    fn add(&mut self, i: usize, delta: i64) {
        let mut i = i + 1;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over the first `i` positions.
    fn prefix(&self, mut i: usize) -> i64 {
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i &= i - 1;
        }
        s
    }
}
