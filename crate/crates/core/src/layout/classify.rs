//! Edge classification and port assignment for one pair of 2-factors.
//!
//! For the x-pair every non-loop arc either joins two x-consecutive vertices
//! (drawn with a vertical middle segment) or leaves its source through the east or
//! west port. The y-pair is symmetric with north/south ports.

use std::collections::HashMap;

use super::order::LinearOrder;
use super::LayoutError;
use crate::factor::Permutation;
use crate::graph::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Arcs of the first and third factor, ordered along x.
    X,
    /// Arcs of the second and fourth factor, ordered along y.
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Port {
    North,
    East,
    South,
    West,
}

impl Port {
    fn along(axis: Axis, forward: bool) -> Port {
        match (axis, forward) {
            (Axis::X, true) => Port::East,
            (Axis::X, false) => Port::West,
            (Axis::Y, true) => Port::North,
            (Axis::Y, false) => Port::South,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    /// Leaves through `port` and enters the target box at offset `slot` from its center line.
    Oblique1 { port: Port, slot: i64 },
    /// Endpoints are x-consecutive; the middle segment is vertical.
    Oblique2Vertical,
    /// Endpoints are y-consecutive; the middle segment is horizontal.
    Oblique2Horizontal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifiedArc {
    pub arc: Arc,
    /// Index (0..4) of the 2-factor the arc came from.
    pub factor: u8,
    pub class: EdgeClass,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub axis: Axis,
    pub arcs: Vec<ClassifiedArc>,
    /// Number of arcs whose direction was flipped to resolve a port conflict.
    pub reoriented: usize,
}

/// Offsets of the four entry slots on a box side, relative to the center line.
pub const SLOTS: [i64; 4] = [-2, -1, 1, 2];

#[derive(Debug, Clone, Copy, Default)]
struct PortUsers {
    items: [u32; 2],
    len: u8,
}

impl PortUsers {
    fn push(&mut self, i: usize) {
        assert!(self.len < 2, "a vertex has two outgoing arcs per factor pair");
        self.items[self.len as usize] = i as u32;
        self.len += 1;
    }

    fn remove(&mut self, i: usize) {
        if self.items[0] as usize == i {
            self.items[0] = self.items[1];
        }
        self.len -= 1;
    }
}

struct Item {
    arc: Arc,
    factor: u8,
    primary: bool,
    oblique1: bool,
}

fn side(order: &LinearOrder, axis: Axis, source: usize, target: usize) -> Port {
    Port::along(axis, order.precedes(source, target))
}

/// Classifies the arcs of `primary` (the factor that defined `order`) and `secondary`,
/// resolves port conflicts by flipping arcs and assigns entry slots.
pub fn classify_and_assign(
    order: &LinearOrder,
    axis: Axis,
    primary: (&Permutation, u8),
    secondary: (&Permutation, u8),
) -> Result<Classification, LayoutError> {
    let mut items = Vec::new();
    for (perm, factor, is_primary) in [(primary.0, primary.1, true), (secondary.0, secondary.1, false)] {
        for arc in perm.out_arc.iter().filter(|a| !a.is_loop()) {
            items.push(Item {
                arc: *arc,
                factor,
                primary: is_primary,
                oblique1: !order.consecutive(arc.source, arc.target),
            });
        }
    }

    // Up to two oblique-1 arcs per (vertex, side); side 0 is forward, 1 backward.
    let n = order.len();
    let side_index = |source: usize, target: usize| usize::from(!order.precedes(source, target));
    let mut users: Vec<PortUsers> = vec![PortUsers::default(); 2 * n];
    for (i, it) in items.iter().enumerate().filter(|(_, it)| it.oblique1) {
        let (s, t) = (it.arc.source, it.arc.target);
        users[2 * s + side_index(s, t)].push(i);
    }

    let mut reoriented = 0;
    for &v in order.order() {
        for side in 0..2 {
            let here = users[2 * v + side];
            if here.len < 2 {
                continue;
            }
            let mut candidates = here.items;
            // Try the arc of the factor that defined the order first.
            if !items[candidates[0] as usize].primary {
                candidates.swap(0, 1);
            }
            let mut resolved = false;
            for i in candidates.map(|i| i as usize) {
                let arc = items[i].arc;
                let target_slot = 2 * arc.target + side_index(arc.target, arc.source);
                if users[target_slot].len == 0 {
                    users[2 * v + side].remove(i);
                    users[target_slot].push(i);
                    items[i].arc = arc.reversed();
                    reoriented += 1;
                    resolved = true;
                    break;
                }
            }
            if !resolved {
                return Err(LayoutError::PortConflict { vertex: v });
            }
        }
    }

    let mut incoming: Vec<[u32; SLOTS.len()]> = vec![[0; SLOTS.len()]; n];
    let mut incoming_len = vec![0u8; n];
    for (i, it) in items.iter().enumerate().filter(|(_, it)| it.oblique1) {
        let t = it.arc.target;
        if incoming_len[t] as usize == SLOTS.len() {
            return Err(LayoutError::SlotOverflow { vertex: t });
        }
        incoming[t][incoming_len[t] as usize] = i as u32;
        incoming_len[t] += 1;
    }
    let mut slot = vec![0i64; items.len()];
    for (list, &len) in incoming.iter_mut().zip(&incoming_len) {
        let list = &mut list[..len as usize];
        list.sort_by_key(|&i| items[i as usize].arc.id);
        for (k, &i) in list.iter().enumerate() {
            slot[i as usize] = SLOTS[k];
        }
    }

    let arcs = items
        .iter()
        .enumerate()
        .map(|(i, it)| ClassifiedArc {
            arc: it.arc,
            factor: it.factor,
            class: if it.oblique1 {
                EdgeClass::Oblique1 {
                    port: side(order, axis, it.arc.source, it.arc.target),
                    slot: slot[i],
                }
            } else if axis == Axis::X {
                EdgeClass::Oblique2Vertical
            } else {
                EdgeClass::Oblique2Horizontal
            },
        })
        .collect();
    Ok(Classification { axis, arcs, reoriented })
}

/// Checks the port and slot invariants of a classification against its order.
pub fn check_classification(order: &LinearOrder, c: &Classification) -> Result<(), String> {
    let mut ports = HashMap::new();
    let mut slots = HashMap::new();
    for ca in &c.arcs {
        let (s, t) = (ca.arc.source, ca.arc.target);
        match ca.class {
            EdgeClass::Oblique2Vertical | EdgeClass::Oblique2Horizontal => {
                if !order.consecutive(s, t) {
                    return Err(format!("arc {s}->{t} drawn as oblique-2 but not consecutive"));
                }
            }
            EdgeClass::Oblique1 { port, slot } => {
                if order.consecutive(s, t) {
                    return Err(format!("arc {s}->{t} drawn as oblique-1 but consecutive"));
                }
                if port != side(order, c.axis, s, t) {
                    return Err(format!("arc {s}->{t} uses the port facing away from its target"));
                }
                if ports.insert((s, port), ca.arc.id).is_some() {
                    return Err(format!("port {port:?} of vertex {s} used twice"));
                }
                if !SLOTS.contains(&slot) || slots.insert((t, slot), ca.arc.id).is_some() {
                    return Err(format!("slot {slot} at vertex {t} invalid or used twice"));
                }
            }
        }
    }
    Ok(())
}
