//! Regularization of a bounded-degree graph to a `d`-in/`d`-out multigraph and its
//! decomposition into `d` directed 2-factors.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Arc, DirectedMultigraph, EdgeId, EdgeKind, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("maximum degree {max_degree} exceeds 2d = {}", 2 * .d)]
    DegreeTooHigh { max_degree: usize, d: usize },
    #[error("d must be at least 1")]
    ZeroDegree,
    #[error("vertex {vertex} has indegree {indeg} and outdegree {outdeg}, expected {d}")]
    NotRegular {
        vertex: usize,
        indeg: usize,
        outdeg: usize,
        d: usize,
    },
}

/// Partition of the arcs of a regular multigraph into directed 2-factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactorSet {
    pub factors: Vec<Vec<EdgeId>>,
}

/// A 2-factor viewed as a permutation: `succ[v]` is the head of the unique arc leaving `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    pub succ: Vec<usize>,
    pub pred: Vec<usize>,
    /// The arc leaving each vertex.
    pub out_arc: Vec<Arc>,
}

impl Permutation {
    pub fn from_arcs(n: usize, arcs: &[Arc]) -> Option<Self> {
        let mut succ = vec![usize::MAX; n];
        let mut pred = vec![usize::MAX; n];
        let mut out_arc: Vec<Option<Arc>> = vec![None; n];
        for a in arcs {
            if succ[a.source] != usize::MAX || pred[a.target] != usize::MAX {
                return None;
            }
            succ[a.source] = a.target;
            pred[a.target] = a.source;
            out_arc[a.source] = Some(*a);
        }
        let out_arc = out_arc.into_iter().collect::<Option<Vec<_>>>()?;
        Some(Permutation { succ, pred, out_arc })
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    /// The cycles, each listed from its lowest vertex along the arcs, ordered by that vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.succ[v];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl TwoFactorSet {
    pub fn permutation(&self, dmg: &DirectedMultigraph, index: usize) -> Option<Permutation> {
        let arcs: Vec<Arc> = self.factors[index]
            .iter()
            .map(|&id| dmg.arc(id).copied())
            .collect::<Option<_>>()?;
        Permutation::from_arcs(dmg.n, &arcs)
    }

    /// Checks disjointness, completeness and the in = out = 1 property of every factor.
    pub fn check(&self, dmg: &DirectedMultigraph) -> Result<(), String> {
        let mut used = vec![false; dmg.arcs.len()];
        let index_of: std::collections::HashMap<EdgeId, usize> =
            dmg.arcs.iter().enumerate().map(|(i, a)| (a.id, i)).collect();
        for (f, factor) in self.factors.iter().enumerate() {
            for id in factor {
                let Some(&i) = index_of.get(id) else {
                    return Err(format!("factor {f} references unknown arc {}", id.0));
                };
                if used[i] {
                    return Err(format!("arc {} appears twice", id.0));
                }
                used[i] = true;
            }
            if self.permutation(dmg, f).is_none() {
                return Err(format!("factor {f} is not a 2-factor"));
            }
        }
        if let Some(i) = used.iter().position(|&u| !u) {
            return Err(format!("arc {} is in no factor", dmg.arcs[i].id.0));
        }
        Ok(())
    }

    /// One line per factor, arcs as `u>v`, augmented arcs suffixed with `*`.
    pub fn listing(&self, dmg: &DirectedMultigraph) -> String {
        let mut out = String::new();
        for factor in &self.factors {
            let mut arcs: Vec<&Arc> = factor.iter().filter_map(|&id| dmg.arc(id)).collect();
            arcs.sort_by_key(|a| (a.source, a.target, a.id));
            let tokens: Vec<String> = arcs
                .iter()
                .map(|a| {
                    let star = if a.kind == EdgeKind::Augmented { "*" } else { "" };
                    format!("{}>{}{}", a.source, a.target, star)
                })
                .collect();
            let _ = writeln!(out, "{}", tokens.join(" "));
        }
        out
    }
}

/// Augments `g` to a multigraph in which every vertex has degree `2d`, then orients it
/// along closed trails so that every vertex has indegree and outdegree `d`.
pub fn regularize(g: &Graph, d: usize) -> Result<DirectedMultigraph, FactorError> {
    if d == 0 {
        return Err(FactorError::ZeroDegree);
    }
    let max_degree = g.max_degree();
    if max_degree > 2 * d {
        return Err(FactorError::DegreeTooHigh { max_degree, d });
    }
    let n = g.n();
    let mut ends: Vec<(usize, usize, EdgeKind)> = g.edges().iter().map(|e| (e.u, e.v, e.kind)).collect();
    let mut deficit: Vec<usize> = g.degrees().iter().map(|&x| 2 * d - x).collect();

    // Pair the two lowest deficient vertices until at most one remains.
    let mut i = 0;
    let mut j = 0;
    loop {
        while i < n && deficit[i] == 0 {
            i += 1;
        }
        j = j.max(i + 1);
        while j < n && deficit[j] == 0 {
            j += 1;
        }
        if j >= n {
            break;
        }
        let k = deficit[i].min(deficit[j]);
        for _ in 0..k {
            ends.push((i, j, EdgeKind::Augmented));
        }
        deficit[i] -= k;
        deficit[j] -= k;
    }
    if i < n {
        // The total deficit is even, so the last vertex needs an even number of stubs.
        debug_assert_eq!(deficit[i] % 2, 0);
        for _ in 0..deficit[i] / 2 {
            ends.push((i, i, EdgeKind::Augmented));
        }
    }

    let orient = euler_orientation(n, &ends);
    let arcs = ends
        .iter()
        .enumerate()
        .map(|(idx, &(u, v, kind))| {
            let (source, target) = if orient[idx] { (u, v) } else { (v, u) };
            Arc {
                id: EdgeId(idx),
                source,
                target,
                kind,
            }
        })
        .collect();
    Ok(DirectedMultigraph { n, arcs })
}

/// Orients every edge of an even-degree multigraph along closed trails. Returns, per
/// edge, whether it is traversed from its first to its second endpoint.
fn euler_orientation(n: usize, ends: &[(usize, usize, EdgeKind)]) -> Vec<bool> {
    let pairs: Vec<(u32, u32)> = ends.iter().map(|&(u, v, _)| (u as u32, v as u32)).collect();
    closed_trails(n, &pairs)
        .into_iter()
        .map(|s| s & TRAIL_FORWARD != 0)
        .collect()
}

const TRAIL_FORWARD: u8 = 1;
const TRAIL_ODD: u8 = 2;

// Row entries are (other endpoint | USED, partner entry | LEFT | ODD). LEFT marks the
// end the walk left from, ODD its parity within the trail.
const USED: u32 = 1 << 31;
const LEFT: u32 = 1 << 31;
const ODD: u32 = 1 << 30;
const INDEX: u32 = ODD - 1;

/// Decomposes an even-degree multigraph into closed trails. For every edge the result
/// records whether the trail runs from its first to its second endpoint and whether the
/// edge sits at an odd position of its trail.
fn closed_trails(nodes: usize, edges: &[(u32, u32)]) -> Vec<u8> {
    assert!(2 * edges.len() <= INDEX as usize && nodes < USED as usize);
    let mut offsets = vec![0u32; nodes + 1];
    for &(a, b) in edges {
        offsets[a as usize + 1] += 1;
        offsets[b as usize + 1] += 1;
    }
    for i in 0..nodes {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut items = vec![(0u32, 0u32); 2 * edges.len()];
    // Entry of each edge in the row of its first endpoint.
    let mut first = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        let i = fill[a as usize];
        fill[a as usize] += 1;
        let j = fill[b as usize];
        fill[b as usize] += 1;
        items[i as usize] = (b, j);
        items[j as usize] = (a, i);
        first.push(i);
    }
    drop(fill);

    // Entries are marked as they are consumed, so the first unused entry of a row is
    // always found by rescanning from its start; rows hold at most a few entries.
    for start in 0..nodes {
        let mut parity = 0;
        let mut cur = start;
        loop {
            let row = offsets[cur] as usize..offsets[cur + 1] as usize;
            let Some(k) = items[row.clone()].iter().position(|it| it.0 & USED == 0) else {
                debug_assert_eq!(cur, start, "walks are closed in an even-degree graph");
                break;
            };
            let i = row.start + k;
            let (other, partner) = items[i];
            items[i] = (other | USED, partner | LEFT | parity);
            items[partner as usize].0 |= USED;
            parity ^= ODD;
            cur = other as usize;
        }
    }

    first
        .into_iter()
        .map(|i| {
            let mut tag = items[i as usize].1;
            let mut state = TRAIL_FORWARD;
            if tag & LEFT == 0 {
                tag = items[(tag & INDEX) as usize].1;
                state = 0;
            }
            if tag & ODD != 0 {
                state |= TRAIL_ODD;
            }
            state
        })
        .collect()
}

/// Splits the arcs of a `d`-in/`d`-out multigraph into `d` directed 2-factors.
pub fn split_two_factors(dmg: &DirectedMultigraph, d: usize) -> Result<TwoFactorSet, FactorError> {
    if d == 0 {
        return Err(FactorError::ZeroDegree);
    }
    let (indeg, outdeg) = dmg.in_out_degrees();
    for v in 0..dmg.n {
        if indeg[v] != d || outdeg[v] != d {
            return Err(FactorError::NotRegular {
                vertex: v,
                indeg: indeg[v],
                outdeg: outdeg[v],
                d,
            });
        }
    }
    let all: Vec<usize> = (0..dmg.arcs.len()).collect();
    let mut parts = Vec::with_capacity(d);
    split_regular(dmg, all, d, &mut parts);
    let factors = parts
        .into_iter()
        .map(|part| part.into_iter().map(|i| dmg.arcs[i].id).collect())
        .collect();
    Ok(TwoFactorSet { factors })
}

fn split_regular(dmg: &DirectedMultigraph, arcs: Vec<usize>, d: usize, out: &mut Vec<Vec<usize>>) {
    if dmg.n == 0 {
        out.extend(std::iter::repeat_with(Vec::new).take(d));
        return;
    }
    match d {
        1 => out.push(arcs),
        d if d % 2 == 0 => {
            let (a, b) = euler_split(dmg, &arcs);
            split_regular(dmg, a, d / 2, out);
            split_regular(dmg, b, d / 2, out);
        }
        d => {
            let (matching, rest) = peel_perfect_matching(dmg, &arcs);
            out.push(matching);
            split_regular(dmg, rest, d - 1, out);
        }
    }
}

/// Halves a regular bipartite multigraph (tails on the left, heads on the right) by
/// colouring each closed trail alternately.
fn euler_split(dmg: &DirectedMultigraph, arcs: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = dmg.n as u32;
    let pairs: Vec<(u32, u32)> = arcs
        .iter()
        .map(|&i| (dmg.arcs[i].source as u32, n + dmg.arcs[i].target as u32))
        .collect();
    let state = closed_trails(2 * dmg.n, &pairs);
    let mut first = Vec::with_capacity(arcs.len() / 2);
    let mut second = Vec::with_capacity(arcs.len() / 2);
    for (&s, &i) in state.iter().zip(arcs) {
        if s & TRAIL_ODD != 0 {
            second.push(i);
        } else {
            first.push(i);
        }
    }
    (first, second)
}

/// Finds a perfect matching (one arc leaving and one entering every vertex) with
/// augmenting paths; it exists because the bipartite multigraph is regular.
fn peel_perfect_matching(dmg: &DirectedMultigraph, arcs: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = dmg.n;
    let mut out_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (local, &i) in arcs.iter().enumerate() {
        out_adj[dmg.arcs[i].source].push(local);
    }
    const NONE: usize = usize::MAX;
    // match_of_head[t] = local arc currently matched into head t.
    let mut match_of_head = vec![NONE; n];
    let mut match_of_tail = vec![NONE; n];

    // Greedy start.
    for s in 0..n {
        for &local in &out_adj[s] {
            let t = dmg.arcs[arcs[local]].target;
            if match_of_head[t] == NONE {
                match_of_head[t] = local;
                match_of_tail[s] = local;
                break;
            }
        }
    }

    let mut stamp = vec![0usize; n];
    let mut round = 0usize;
    for s in 0..n {
        if match_of_tail[s] != NONE {
            continue;
        }
        round += 1;
        // Iterative DFS over tails; stack of (tail, next adjacency index).
        let mut stack: Vec<(usize, usize)> = vec![(s, 0)];
        let mut via: Vec<usize> = Vec::new();
        let mut found = false;
        while let Some(&mut (tail, ref mut next)) = stack.last_mut() {
            if *next >= out_adj[tail].len() {
                stack.pop();
                via.pop();
                continue;
            }
            let local = out_adj[tail][*next];
            *next += 1;
            let t = dmg.arcs[arcs[local]].target;
            if stamp[t] == round {
                continue;
            }
            stamp[t] = round;
            via.push(local);
            let owner = match_of_head[t];
            if owner == NONE {
                found = true;
                break;
            }
            stack.push((dmg.arcs[arcs[owner]].source, 0));
        }
        assert!(found, "regular bipartite multigraphs have perfect matchings");
        // `via[k]` is the arc chosen at stack level k; flip along the path.
        for (level, &local) in via.iter().enumerate() {
            let tail = stack[level].0;
            let t = dmg.arcs[arcs[local]].target;
            match_of_head[t] = local;
            match_of_tail[tail] = local;
        }
    }

    let mut in_matching = vec![false; arcs.len()];
    for &local in &match_of_tail {
        in_matching[local] = true;
    }
    let mut matching = Vec::with_capacity(n);
    let mut rest = Vec::with_capacity(arcs.len() - n);
    for (local, &i) in arcs.iter().enumerate() {
        if in_matching[local] {
            matching.push(i);
        } else {
            rest.push(i);
        }
    }
    (matching, rest)
}
