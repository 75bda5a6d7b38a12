//! 2-bend drawings of graphs with maximum degree at most 8 in which every crossing is
//! between a horizontal and a vertical segment.
//!
//! The graph is regularized to a 4-in/4-out multigraph and split into four directed
//! 2-factors F0..F3. (F0, F2) define the x-order of the vertices, (F1, F3) the y-order.
//! Every edge of F0/F2 then leaves its source horizontally and every edge of F1/F3
//! vertically, so that each edge consists of two axis-parallel segments and one oblique
//! segment that lies inside a single vertex box.

pub mod bends;
pub mod classify;
pub mod order;

use thiserror::Error;

use crate::drawing::{Drawing, DrawnEdge};
use crate::factor::{regularize, split_two_factors, FactorError, Permutation, TwoFactorSet};
use crate::geom::Point;
use crate::graph::{DirectedMultigraph, EdgeKind, Graph};

pub use classify::{Axis, Classification, EdgeClass, Port};
pub use order::{compute_order, LinearOrder};

pub const MAX_DEGREE: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LayoutError {
    #[error("maximum degree {max_degree} exceeds {MAX_DEGREE}")]
    DegreeTooHigh { max_degree: usize },
    #[error("factorization failed: {0}")]
    Factor(#[from] FactorError),
    #[error("both arcs leaving vertex {vertex} need the same port")]
    PortConflict { vertex: usize },
    #[error("more than four arcs enter the box of vertex {vertex}")]
    SlotOverflow { vertex: usize },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DrawOptions {
    /// Keep the non-loop augmented edges in the output, marked as augmented.
    pub keep_augmented: bool,
}

/// All intermediate results of a layout run.
#[derive(Debug, Clone)]
pub struct Layout {
    pub multigraph: DirectedMultigraph,
    pub factors: TwoFactorSet,
    pub order_x: LinearOrder,
    pub order_y: LinearOrder,
    pub trace_x: order::OrderTrace,
    pub trace_y: order::OrderTrace,
    pub class_x: Classification,
    pub class_y: Classification,
    /// Drawing of every non-loop arc, augmented ones included.
    pub full: Drawing,
}

pub fn layout(g: &Graph) -> Result<Layout, LayoutError> {
    run(g, None)
}

/// With `output` set, `full` holds the final drawing of `g` instead of every arc.
fn run(g: &Graph, output: Option<DrawOptions>) -> Result<Layout, LayoutError> {
    let max_degree = g.max_degree();
    if max_degree > MAX_DEGREE {
        return Err(LayoutError::DegreeTooHigh { max_degree });
    }
    let multigraph = regularize(g, 4)?;
    let factors = split_two_factors(&multigraph, 4)?;
    let perms: Vec<Permutation> = (0..4)
        .map(|i| {
            factors
                .permutation(&multigraph, i)
                .expect("split produces permutations")
        })
        .collect();

    let ((order_x, trace_x), (order_y, trace_y)) = rayon::join(
        || order::compute_order_traced(&perms[0], &perms[2]),
        || order::compute_order_traced(&perms[1], &perms[3]),
    );
    let class_x = classify::classify_and_assign(&order_x, Axis::X, (&perms[0], 0), (&perms[2], 2))?;
    let class_y = classify::classify_and_assign(&order_y, Axis::Y, (&perms[1], 1), (&perms[3], 3))?;

    let positions: Vec<Point> = (0..g.n())
        .map(|v| {
            Point::new(
                bends::PITCH * order_x.rank(v) as i64,
                bends::PITCH * order_y.rank(v) as i64,
            )
        })
        .collect();
    // Arc ids are dense; index the classified arcs by id so edges come out in id order.
    let classified: Vec<&classify::ClassifiedArc> = class_x.arcs.iter().chain(&class_y.arcs).collect();
    let mut by_id = vec![u32::MAX; multigraph.arcs.len()];
    for (i, ca) in classified.iter().enumerate() {
        by_id[ca.arc.id.0] = i as u32;
    }
    let originals = g.edges();
    let edges: Vec<DrawnEdge> = by_id
        .iter()
        .filter(|&&i| i != u32::MAX)
        .map(|&i| classified[i as usize])
        .filter(|ca| match output {
            Some(opts) => ca.arc.kind == EdgeKind::Original || opts.keep_augmented,
            None => true,
        })
        .map(|ca| {
            let mut e = DrawnEdge {
                id: ca.arc.id,
                u: ca.arc.source,
                v: ca.arc.target,
                bends: bends::route(&positions, ca).into(),
                augmented: ca.arc.kind == EdgeKind::Augmented,
                factor: Some(ca.factor),
            };
            // Final output runs each original edge from its first endpoint.
            if output.is_some() && !e.augmented && e.u != originals[e.id.0].u {
                e.bends.reverse();
                std::mem::swap(&mut e.u, &mut e.v);
            }
            e
        })
        .collect();

    Ok(Layout {
        multigraph,
        factors,
        order_x,
        order_y,
        trace_x,
        trace_y,
        class_x,
        class_y,
        full: Drawing { positions, edges },
    })
}

/// Draws `g` with at most two bends per edge. Output edges follow the input edge order
/// and each polyline runs from the edge's first to its second endpoint.
pub fn draw(g: &Graph) -> Result<Drawing, LayoutError> {
    draw_with(g, DrawOptions::default())
}

pub fn draw_with(g: &Graph, options: DrawOptions) -> Result<Drawing, LayoutError> {
    Ok(run(g, Some(options))?.full)
}
