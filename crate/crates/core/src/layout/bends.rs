//! Bend placement. Vertex `v` sits at `(8 * rank_x(v), 8 * rank_y(v))` in the center of
//! an 8x8 box; every edge is drawn with exactly two bends and its middle segment is
//! the only oblique one.

use super::classify::{ClassifiedArc, EdgeClass};
use crate::geom::Point;

pub const PITCH: i64 = 8;
pub const BOX_HALF: i64 = 4;
/// Offset of the bends of a consecutive-pair edge from the box center along the order axis.
pub const CORNER_OFFSET: i64 = 3;

fn toward(from: i64, to: i64, amount: i64) -> i64 {
    if to < from {
        -amount
    } else {
        amount
    }
}

/// Leaves `u` horizontally, turns at the column `x_v + slot` and enters the box of `v`
/// through its top or bottom side.
pub fn route_horizontal_port(u: Point, v: Point, slot: i64) -> [Point; 2] {
    let dy = toward(v.y, u.y, BOX_HALF);
    [Point::new(v.x + slot, u.y), Point::new(v.x + slot, v.y + dy)]
}

/// Leaves `u` vertically, turns at the row `y_v + slot` and enters the box of `v`
/// through its left or right side.
pub fn route_vertical_port(u: Point, v: Point, slot: i64) -> [Point; 2] {
    let dx = toward(v.x, u.x, BOX_HALF);
    [Point::new(u.x, v.y + slot), Point::new(v.x + dx, v.y + slot)]
}

/// Edge between x-consecutive vertices: the middle segment is vertical.
pub fn route_vertical_middle(u: Point, v: Point) -> [Point; 2] {
    let sx = toward(u.x, v.x, BOX_HALF);
    let sy = toward(u.y, v.y, CORNER_OFFSET);
    [Point::new(u.x + sx, u.y + sy), Point::new(v.x - sx, v.y - sy)]
}

/// Edge between y-consecutive vertices: the middle segment is horizontal.
pub fn route_horizontal_middle(u: Point, v: Point) -> [Point; 2] {
    let sx = toward(u.x, v.x, CORNER_OFFSET);
    let sy = toward(u.y, v.y, BOX_HALF);
    [Point::new(u.x + sx, u.y + sy), Point::new(v.x - sx, v.y - sy)]
}

/// Bends from source to target for one classified arc.
pub fn route(positions: &[Point], ca: &ClassifiedArc) -> [Point; 2] {
    let u = positions[ca.arc.source];
    let v = positions[ca.arc.target];
    match ca.class {
        EdgeClass::Oblique1 { port, slot } => {
            use super::classify::Port::*;
            match port {
                East | West => route_horizontal_port(u, v, slot),
                North | South => route_vertical_port(u, v, slot),
            }
        }
        EdgeClass::Oblique2Vertical => route_vertical_middle(u, v),
        EdgeClass::Oblique2Horizontal => route_horizontal_middle(u, v),
    }
}
