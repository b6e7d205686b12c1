//! Peripheral cycles: directed cycles whose removal leaves the digraph
//! strongly connected.
//!
//! [`two_peripheral_cycles`] finds two of them through a given arc of a
//! strongly 2-edge-connected Eulerian digraph by repeatedly rerouting a path so
//! that the components left behind grow lexicographically.
//! [`peripheral_embedder`] uses those cycles as the faces of a spherical
//! embedding, which is unique for strongly 2-edge-connected 2-regular digraphs.

use std::collections::{BTreeSet, VecDeque};

use log::{debug, warn};

use crate::connectivity::{
    self, cut_with_side, is_strongly_connected_without, weak_components_without, EdgeCut2,
};
use crate::digraph::Digraph;
use crate::embedding::{self, FaceSet, RotationSystem};
use crate::error::{Error, Result};

/// Arc ids of a vertex-simple directed path, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedPath(Vec<usize>);

impl DirectedPath {
    pub fn new(h: &Digraph, arcs: Vec<usize>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (i, &a) in arcs.iter().enumerate() {
            let arc = h.try_arc(a)?;
            if i == 0 {
                seen.insert(arc.tail);
            } else if h.arc(arcs[i - 1]).head != arc.tail {
                return Err(Error::NotACycle(format!(
                    "arcs {} and {a} do not chain",
                    arcs[i - 1]
                )));
            }
            if !seen.insert(arc.head) {
                return Err(Error::NotACycle(format!(
                    "path revisits vertex {}",
                    arc.head
                )));
            }
        }
        Ok(DirectedPath(arcs))
    }

    pub fn arcs(&self) -> &[usize] {
        &self.0
    }

    /// Vertex sequence from start to end; a path with no arcs has none.
    pub fn vertices(&self, h: &Digraph) -> Vec<usize> {
        path_vertices(h, &self.0)
    }
}

fn path_vertices(h: &Digraph, arcs: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(arcs.len() + 1);
    if let Some(&first) = arcs.first() {
        out.push(h.arc(first).tail);
    }
    out.extend(arcs.iter().map(|&a| h.arc(a).head));
    out
}

/// A vertex-simple directed cycle, stored starting at its least arc id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedCycle(Vec<usize>);

impl DirectedCycle {
    pub fn new(h: &Digraph, arcs: Vec<usize>) -> Result<Self> {
        check_cycle(h, &arcs)?;
        let start = arcs
            .iter()
            .enumerate()
            .min_by_key(|(_, a)| **a)
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut arcs = arcs;
        arcs.rotate_left(start);
        Ok(DirectedCycle(arcs))
    }

    pub fn arcs(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, arc: usize) -> bool {
        self.0.contains(&arc)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_cycle(h: &Digraph, arcs: &[usize]) -> Result<()> {
    if arcs.is_empty() {
        return Err(Error::NotACycle("no arcs".into()));
    }
    let n = arcs.len();
    let mut tails = BTreeSet::new();
    for i in 0..n {
        let arc = h.try_arc(arcs[i])?;
        let next = h.try_arc(arcs[(i + 1) % n])?;
        if arc.head != next.tail {
            return Err(Error::NotACycle(format!(
                "arc {} ends at {} but arc {} starts at {}",
                arcs[i],
                arc.head,
                arcs[(i + 1) % n],
                next.tail
            )));
        }
        if !tails.insert(arc.tail) {
            return Err(Error::NotACycle(format!(
                "vertex {} is visited twice",
                arc.tail
            )));
        }
    }
    Ok(())
}

/// `H - E(C)`, all vertices kept, is strongly connected.
pub fn is_peripheral(h: &Digraph, cycle: &DirectedCycle) -> Result<bool> {
    check_cycle(h, cycle.arcs())?;
    let mut removed = vec![false; h.arc_count()];
    for &a in cycle.arcs() {
        removed[a] = true;
    }
    Ok(is_strongly_connected_without(h, &removed))
}

/// Every vertex-simple directed cycle, each once, ordered by least vertex
/// and then by discovery.
pub fn directed_cycles(h: &Digraph) -> Vec<DirectedCycle> {
    let mut out = Vec::new();
    for start in 0..h.vertex_count() {
        let mut on_path = vec![false; h.vertex_count()];
        on_path[start] = true;
        let mut arcs = Vec::new();
        cycles_from(h, start, start, &mut on_path, &mut arcs, &mut out);
    }
    out
}

fn cycles_from(
    h: &Digraph,
    start: usize,
    at: usize,
    on_path: &mut [bool],
    arcs: &mut Vec<usize>,
    out: &mut Vec<DirectedCycle>,
) {
    for a in h.out_arcs(at).collect::<Vec<_>>() {
        let next = h.arc(a).head;
        if next == start {
            arcs.push(a);
            out.push(DirectedCycle::new(h, arcs.clone()).expect("closed simple walk"));
            arcs.pop();
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            arcs.push(a);
            cycles_from(h, start, next, on_path, arcs, out);
            arcs.pop();
            on_path[next] = false;
        }
    }
}

/// Two distinct peripheral cycles through one arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralPair {
    pub first: DirectedCycle,
    pub second: DirectedCycle,
    /// rerouting steps taken by the two improvement loops together
    pub improvement_steps: usize,
    /// the exhaustive path search had to be used
    pub fallback_used: bool,
}

/// Shortest path from `from` to `to` over arcs with `allowed[a]`, exploring
/// arcs in id order.
fn bfs_path(
    h: &Digraph,
    from: usize,
    to: usize,
    allowed: &dyn Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    let mut out_adj = vec![Vec::new(); n];
    for (id, arc) in h.arcs().iter().enumerate() {
        if allowed(id) {
            out_adj[arc.tail].push(id);
        }
    }
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &a in &out_adj[x] {
            let y = h.arc(a).head;
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(a);
                queue.push_back(y);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let a = parent[cur]?;
        path.push(a);
        cur = h.arc(a).tail;
    }
    path.reverse();
    Some(path)
}

enum Improvement {
    Peripheral(Vec<usize>, usize),
    Cut(EdgeCut2),
    Stalled,
}

/// Component sizes ranked for the lexicographic objective. With an anchor,
/// the size of the anchor's component comes first.
fn objective(components: &[Vec<usize>], anchor: Option<usize>) -> Vec<usize> {
    let mut rest: Vec<usize> = Vec::new();
    let mut head = Vec::new();
    for c in components {
        if anchor.is_some_and(|a| c.contains(&a)) {
            head.push(c.len());
        } else {
            rest.push(c.len());
        }
    }
    rest.sort_unstable_by(|a, b| b.cmp(a));
    head.extend(rest);
    head
}

/// Reroute a `v -> u` path until `H - (E(path) + e)` is connected.
///
/// With `anchor` set, the component containing it is never rerouted through
/// and is maximised first.
fn improve(
    h: &Digraph,
    e: usize,
    mut path: Vec<usize>,
    anchor: Option<usize>,
) -> Result<Improvement> {
    let mut previous: Option<Vec<usize>> = None;
    let mut steps = 0;
    loop {
        let mut removed = vec![false; h.arc_count()];
        removed[e] = true;
        for &a in &path {
            removed[a] = true;
        }
        let components = weak_components_without(h, &removed);
        // what is left is Eulerian, so its weak and strong components coincide
        let strong = connectivity::strong_components_without(h, Some(&removed));
        if strong != components {
            return Err(Error::Internal(format!(
                "weak components {components:?} differ from strong components {strong:?}"
            )));
        }
        let score = objective(&components, anchor);
        if let Some(prev) = &previous {
            if score <= *prev {
                debug!("improvement stalled at {score:?} after {prev:?}");
                return Ok(Improvement::Stalled);
            }
        }
        if components.len() == 1 {
            return Ok(Improvement::Peripheral(path, steps));
        }

        let target = components
            .iter()
            .filter(|c| anchor.is_none_or(|a| !c.contains(&a)))
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .ok_or_else(|| Error::Internal("no component to reroute through".into()))?;
        let mut inside = vec![false; h.vertex_count()];
        for &x in target {
            inside[x] = true;
        }
        let vertices = path_vertices(h, &path);
        let first = vertices.iter().position(|&x| inside[x]);
        let last = vertices.iter().rposition(|&x| inside[x]);
        let (Some(i), Some(j)) = (first, last) else {
            return Err(Error::Internal(format!(
                "component {target:?} does not meet the path"
            )));
        };

        if vertices[i + 1..j].iter().all(|&x| inside[x]) {
            // the component together with this stretch of path hangs off two arcs
            let mut side: Vec<usize> = target.clone();
            side.extend_from_slice(&vertices[i..=j]);
            return cut_with_side(h, &side)
                .map(Improvement::Cut)
                .map_err(|err| Error::Internal(format!("expected a 2-edge-cut: {err}")));
        }

        let (x, y) = (vertices[i], vertices[j]);
        let detour = bfs_path(h, x, y, &|a| {
            !removed[a] && inside[h.arc(a).tail] && inside[h.arc(a).head]
        })
        .ok_or_else(|| Error::Internal(format!("no path {x} -> {y} inside {target:?}")))?;
        let mut rerouted = path[..i].to_vec();
        rerouted.extend(detour);
        rerouted.extend_from_slice(&path[j..]);
        path = rerouted;
        previous = Some(score);
        steps += 1;
    }
}

/// Exhaustive search over simple `v -> u` paths avoiding `forbidden` arcs for
/// one that closes a peripheral cycle with `e`.
fn exhaustive_peripheral(h: &Digraph, e: usize, forbidden: &[bool]) -> Option<Vec<usize>> {
    let (u, v) = (h.arc(e).tail, h.arc(e).head);
    let mut on_path = vec![false; h.vertex_count()];
    on_path[v] = true;
    let mut path = Vec::new();
    fn go(
        h: &Digraph,
        e: usize,
        at: usize,
        goal: usize,
        forbidden: &[bool],
        on_path: &mut [bool],
        path: &mut Vec<usize>,
    ) -> bool {
        if at == goal {
            let mut removed = vec![false; h.arc_count()];
            removed[e] = true;
            for &a in path.iter() {
                removed[a] = true;
            }
            return is_strongly_connected_without(h, &removed);
        }
        for a in h.out_arcs(at).collect::<Vec<_>>() {
            let next = h.arc(a).head;
            if a == e || forbidden[a] || on_path[next] {
                continue;
            }
            on_path[next] = true;
            path.push(a);
            if go(h, e, next, goal, forbidden, on_path, path) {
                return true;
            }
            path.pop();
            on_path[next] = false;
        }
        false
    }
    go(h, e, v, u, forbidden, &mut on_path, &mut path).then_some(path)
}

fn cycle_through(h: &Digraph, e: usize, path: &[usize]) -> Result<DirectedCycle> {
    let mut arcs = vec![e];
    arcs.extend_from_slice(path);
    DirectedCycle::new(h, arcs)
}

/// Two distinct peripheral cycles through arc `e` of a strongly
/// 2-edge-connected Eulerian digraph.
///
/// The first cycle is `P + e` for a `v -> u` path `P`, starting from a
/// shortest path and rerouted until `H - (E(P) + e)` is connected. The second
/// is `Q + e` with `Q` arc-disjoint from `P`, rerouted the same way while
/// keeping the component that holds `P` as large as possible. Both results are
/// checked with [`is_peripheral`]. If a loop stalls, an exhaustive path search
/// takes over and `fallback_used` is set.
pub fn two_peripheral_cycles(h: &Digraph, e: usize) -> Result<PeripheralPair> {
    let arc = h.try_arc(e)?;
    if !h.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    h.require_connected()?;
    if let Some(cut) = connectivity::minimal_one_out_set(h)? {
        return Err(Error::NotStrongly2EdgeConnected { cut });
    }
    if arc.is_loop() {
        return Err(Error::LoopArc { arc: e });
    }
    let (u, v) = (arc.tail, arc.head);
    let mut fallback_used = false;

    let initial = bfs_path(h, v, u, &|a| a != e)
        .ok_or_else(|| Error::Internal(format!("no path {v} -> {u} avoiding arc {e}")))?;
    let (p, p_steps) = match improve(h, e, initial, None)? {
        Improvement::Peripheral(p, steps) => (p, steps),
        Improvement::Cut(cut) => return Err(Error::NotStrongly2EdgeConnected { cut }),
        Improvement::Stalled => {
            warn!("peripheral search through arc {e} stalled; using exhaustive search");
            fallback_used = true;
            let none = vec![false; h.arc_count()];
            let p = exhaustive_peripheral(h, e, &none)
                .ok_or_else(|| Error::Internal(format!("no peripheral cycle through arc {e}")))?;
            (p, 0)
        }
    };

    let mut on_p = vec![false; h.arc_count()];
    for &a in &p {
        on_p[a] = true;
    }
    let initial = bfs_path(h, v, u, &|a| a != e && !on_p[a]).ok_or_else(|| {
        Error::Internal(format!(
            "no path {v} -> {u} arc-disjoint from the first cycle"
        ))
    })?;
    let (q, q_steps) = match improve(h, e, initial, Some(v))? {
        Improvement::Peripheral(q, steps) => (q, steps),
        Improvement::Cut(cut) => return Err(Error::NotStrongly2EdgeConnected { cut }),
        Improvement::Stalled => {
            warn!("second peripheral search through arc {e} stalled; using exhaustive search");
            fallback_used = true;
            let q = exhaustive_peripheral(h, e, &on_p).ok_or_else(|| {
                Error::Internal(format!("no second peripheral cycle through arc {e}"))
            })?;
            (q, 0)
        }
    };

    let first = cycle_through(h, e, &p)?;
    let second = cycle_through(h, e, &q)?;
    if first == second || !is_peripheral(h, &first)? || !is_peripheral(h, &second)? {
        return Err(Error::Internal(format!(
            "cycles {:?} and {:?} through arc {e} failed verification",
            first.arcs(),
            second.arcs()
        )));
    }
    Ok(PeripheralPair {
        first,
        second,
        improvement_steps: p_steps + q_steps,
        fallback_used,
    })
}

/// Spherical embedding of a connected, strongly 2-edge-connected 2-regular
/// digraph built from peripheral cycles, or `None` if it has none.
///
/// On the sphere every peripheral cycle bounds a face and every arc has two
/// distinct peripheral cycles through it, so the candidate cycles must be
/// exactly the `|V| + 2` faces, two per arc.
pub fn peripheral_embedder(h: &Digraph) -> Result<Option<(RotationSystem, FaceSet)>> {
    h.require_2regular()?;
    h.require_connected()?;
    if let Some(cut) = connectivity::minimal_one_out_set(h)? {
        return Err(Error::NotStrongly2EdgeConnected { cut });
    }
    if h.has_loops() {
        // only the one-vertex bouquet of two loops is strongly 2-edge-connected
        // and has a loop; both of its rotations are mirror images
        let rotation = RotationSystem::from_mask(h, 0)?;
        let faces = embedding::trace_faces(h, &rotation)?;
        let genus = embedding::genus_from_counts(h.vertex_count(), h.arc_count(), faces.len())?;
        return Ok((genus == 0).then_some((rotation, faces)));
    }

    let mut candidates: BTreeSet<DirectedCycle> = BTreeSet::new();
    for e in 0..h.arc_count() {
        let pair = two_peripheral_cycles(h, e)?;
        candidates.insert(pair.first);
        candidates.insert(pair.second);
    }
    if candidates.len() != h.vertex_count() + 2 {
        return Ok(None);
    }
    let faces = FaceSet::from_arc_lists(candidates.iter().map(|c| c.arcs().to_vec()).collect());
    if !faces.is_well_formed_for(h) {
        return Ok(None);
    }
    let Some(rotation) = embedding::faces_to_rotation(h, &faces) else {
        return Ok(None);
    };
    let genus = embedding::euler_genus(h, &rotation)?;
    Ok((genus == 0).then_some((rotation, faces)))
}
