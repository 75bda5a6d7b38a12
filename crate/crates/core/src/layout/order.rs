//! Vertex orders built from a pair of 2-factors.
//!
//! The cycles of the primary factor are laid out one after another; each cycle loses
//! one special vertex (its lowest id), the remaining path is placed in walk order, and
//! the special vertex is then re-inserted next to the path according to where its arc
//! in the secondary factor points.

use crate::factor::Permutation;

/// A total order on `0..n` with O(1) rank lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl LinearOrder {
    pub fn from_sequence(order: Vec<usize>) -> Option<Self> {
        let mut rank = vec![usize::MAX; order.len()];
        for (i, &v) in order.iter().enumerate() {
            if v >= order.len() || rank[v] != usize::MAX {
                return None;
            }
            rank[v] = i;
        }
        Some(LinearOrder { order, rank })
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn consecutive(&self, a: usize, b: usize) -> bool {
        self.rank[a].abs_diff(self.rank[b]) == 1
    }
}

/// Where the special vertex of a cycle ends up relative to its path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    First,
    Last,
    Before(usize),
    After(usize),
}

/// The cycle structure the order was built from, kept for invariant checks.
#[derive(Debug, Clone)]
pub struct OrderTrace {
    /// Cycles of the primary factor, each starting at its special vertex.
    pub cycles: Vec<Vec<usize>>,
    pub cycle_of: Vec<usize>,
    pub insertions: Vec<Insertion>,
}

pub fn compute_order(primary: &Permutation, secondary: &Permutation) -> LinearOrder {
    compute_order_traced(primary, secondary).0
}

pub fn compute_order_traced(primary: &Permutation, secondary: &Permutation) -> (LinearOrder, OrderTrace) {
    let n = primary.n();
    let cycles = primary.cycles();
    let mut cycle_of = vec![0; n];
    // Position of each path vertex within its path (the special vertex gets usize::MAX).
    let mut path_pos = vec![usize::MAX; n];
    for (i, cycle) in cycles.iter().enumerate() {
        for (k, &v) in cycle.iter().enumerate() {
            cycle_of[v] = i;
            if k > 0 {
                path_pos[v] = k - 1;
            }
        }
    }

    let mut sequence = Vec::with_capacity(n);
    let mut insertions = Vec::with_capacity(cycles.len());
    for (i, cycle) in cycles.iter().enumerate() {
        let special = cycle[0];
        let path = &cycle[1..];
        let insertion = if cycle.len() <= 2 {
            Insertion::First
        } else {
            let (a, b) = (path[0], path[path.len() - 1]);
            let c = secondary.succ[special];
            if c == special || cycle_of[c] < i {
                Insertion::First
            } else if cycle_of[c] > i {
                Insertion::Last
            } else if c == a {
                Insertion::First
            } else if c == b {
                // Placing the vertex after b makes both arcs between them consecutive.
                Insertion::Last
            } else {
                let d = secondary.succ[c];
                if d == special || d == c {
                    // No usable direction at c; sitting next to c keeps the arcs between
                    // the two vertices consecutive.
                    Insertion::Before(c)
                } else {
                    let c_before_d = if cycle_of[d] == i {
                        path_pos[c] < path_pos[d]
                    } else {
                        i < cycle_of[d]
                    };
                    if c_before_d {
                        Insertion::Before(c)
                    } else {
                        Insertion::After(c)
                    }
                }
            }
        };
        insertions.push(insertion);
        match insertion {
            Insertion::First => {
                sequence.push(special);
                sequence.extend_from_slice(path);
            }
            Insertion::Last => {
                sequence.extend_from_slice(path);
                sequence.push(special);
            }
            Insertion::Before(c) | Insertion::After(c) => {
                for &v in path {
                    if v == c && matches!(insertion, Insertion::Before(_)) {
                        sequence.push(special);
                    }
                    sequence.push(v);
                    if v == c && matches!(insertion, Insertion::After(_)) {
                        sequence.push(special);
                    }
                }
            }
        }
    }
    let order = LinearOrder::from_sequence(sequence).expect("every vertex is placed exactly once");
    (
        order,
        OrderTrace {
            cycles,
            cycle_of,
            insertions,
        },
    )
}

/// Checks that each cycle occupies a contiguous block in cycle order and that every
/// special vertex sits next to its path (or starts its block for singleton cycles).
pub fn check_order(order: &LinearOrder, trace: &OrderTrace) -> Result<(), String> {
    let mut next_rank = 0;
    for (i, cycle) in trace.cycles.iter().enumerate() {
        let ranks: Vec<usize> = cycle.iter().map(|&v| order.rank(v)).collect();
        let lo = *ranks.iter().min().expect("cycles are nonempty");
        let hi = *ranks.iter().max().expect("cycles are nonempty");
        if lo != next_rank || hi - lo + 1 != cycle.len() {
            return Err(format!(
                "cycle {i} is not a contiguous block after cycle {}",
                i.wrapping_sub(1)
            ));
        }
        next_rank = hi + 1;
        let special = cycle[0];
        if cycle.len() == 1 {
            if order.rank(special) != lo {
                return Err(format!("singleton cycle {i} misplaced"));
            }
        } else if !cycle[1..].iter().any(|&v| order.consecutive(v, special)) {
            return Err(format!("special vertex {special} is not next to its path"));
        }
        // The path itself must appear in walk order, possibly split once by the special vertex.
        let path_ranks: Vec<usize> = cycle[1..].iter().map(|&v| order.rank(v)).collect();
        if path_ranks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("path of cycle {i} is not in walk order"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Arc, EdgeId, EdgeKind};

    fn perm(succ: &[usize]) -> Permutation {
        let arcs: Vec<Arc> = succ
            .iter()
            .enumerate()
            .map(|(s, &t)| Arc {
                id: EdgeId(s),
                source: s,
                target: t,
                kind: EdgeKind::Original,
            })
            .collect();
        Permutation::from_arcs(succ.len(), &arcs).unwrap()
    }

    #[test]
    fn triangle_with_c_on_path_end() {
        // Primary: 0 -> 1 -> 2 -> 0. Path is 1, 2; both ends are cycle neighbours of 0.
        let primary = perm(&[1, 2, 0]);
        for (succ, expected) in [([1, 0, 2], [0, 1, 2]), ([2, 1, 0], [1, 2, 0])] {
            let (order, trace) = compute_order_traced(&primary, &perm(&succ));
            assert_eq!(order.order(), &expected);
            check_order(&order, &trace).unwrap();
        }
    }

    #[test]
    fn singleton_cycles_in_cycle_order() {
        let primary = perm(&[0, 1]);
        let secondary = perm(&[1, 0]);
        let order = compute_order(&primary, &secondary);
        assert_eq!(order.order(), &[0, 1]);
    }

    #[test]
    fn case_one_and_two() {
        // Two triangles {0,1,2} and {3,4,5}.
        let primary = perm(&[1, 2, 0, 4, 5, 3]);
        // Special 0 points into the later cycle, special 3 into the earlier one.
        let secondary = perm(&[3, 0, 4, 2, 5, 1]);
        let (order, trace) = compute_order_traced(&primary, &secondary);
        assert_eq!(trace.insertions, vec![Insertion::Last, Insertion::First]);
        assert_eq!(order.order(), &[1, 2, 0, 3, 4, 5]);
        check_order(&order, &trace).unwrap();
    }

    #[test]
    fn case_three_uses_direction_of_c() {
        // Primary 0 -> 1 -> 2 -> 3 -> 4 -> 0, path 1 2 3 4. Secondary (0, 2), (2, 4): c = 2 precedes d = 4.
        let primary = perm(&[1, 2, 3, 4, 0]);
        let secondary = perm(&[2, 3, 4, 0, 1]);
        let (order, trace) = compute_order_traced(&primary, &secondary);
        assert_eq!(trace.insertions, vec![Insertion::Before(2)]);
        assert_eq!(order.order(), &[1, 0, 2, 3, 4]);
        // Secondary (0, 3), (3, 1): d precedes c, so insert after c.
        let secondary = perm(&[3, 4, 0, 1, 2]);
        let (order, trace) = compute_order_traced(&primary, &secondary);
        assert_eq!(trace.insertions, vec![Insertion::After(3)]);
        assert_eq!(order.order(), &[1, 2, 3, 0, 4]);
    }

    #[test]
    fn case_three_degenerate_fallbacks() {
        let primary = perm(&[1, 2, 3, 4, 0]);
        // c = a = 1.
        let (_, trace) = compute_order_traced(&primary, &perm(&[1, 2, 3, 4, 0]));
        assert_eq!(trace.insertions, vec![Insertion::First]);
        // c = 4 = b.
        let (_, trace) = compute_order_traced(&primary, &perm(&[4, 2, 3, 1, 0]));
        assert_eq!(trace.insertions, vec![Insertion::Last]);
        // c = 2 with (2, 0): d is the special vertex itself.
        let (_, trace) = compute_order_traced(&primary, &perm(&[2, 3, 0, 4, 1]));
        assert_eq!(trace.insertions, vec![Insertion::Before(2)]);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(LinearOrder::from_sequence(vec![0, 0]).is_none());
        assert!(LinearOrder::from_sequence(vec![1, 2]).is_none());
    }
}
