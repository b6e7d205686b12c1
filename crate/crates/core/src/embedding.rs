//! Alternating rotation systems and their directed facial walks.
//!
//! A rotation system fixes a cyclic order of the arc ends around every vertex.
//! For an Eulerian digraph it describes an embedding whose faces are bounded
//! by directed walks exactly when in-ends and out-ends alternate around every
//! vertex. Faces are the orbits of "arrive at an end, step to its rotation
//! successor, cross that arc"; with alternation each orbit crosses all of its
//! arcs forwards or all of them backwards, and backward orbits are reversed so
//! that every facial walk is directed.
//!
//! Surfaces are never represented; the Euler genus stands in for them.

use std::collections::HashMap;

use crate::digraph::{ArcEnd, Digraph};
use crate::error::{Error, Result};

/// Default vertex bound for [`enumerate_embeddings`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

/// Cyclic order of arc ends at each vertex. Each cyclic list is stored
/// rotated to start at its least end, so `==` compares cyclic orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    order: Vec<Vec<ArcEnd>>,
}

fn rotate_to_min(mut cycle: Vec<ArcEnd>) -> Vec<ArcEnd> {
    if let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, e)| **e)
        .map(|(i, _)| i)
    {
        cycle.rotate_left(pos);
    }
    cycle
}

impl RotationSystem {
    pub fn new(order: Vec<Vec<ArcEnd>>) -> Self {
        RotationSystem {
            order: order.into_iter().map(rotate_to_min).collect(),
        }
    }

    /// One of the two alternating rotations at every vertex of a 2-regular
    /// digraph: with in-ends `e1 < e2` and out-ends `f1 < f2` at a vertex,
    /// `false` selects `(e1 f1 e2 f2)` and `true` selects `(e1 f2 e2 f1)`.
    /// The two choices at a vertex are mirror images of each other.
    pub fn from_choices(h: &Digraph, choices: &[bool]) -> Result<Self> {
        h.require_2regular()?;
        assert_eq!(choices.len(), h.vertex_count(), "one choice per vertex");
        let order = h
            .ends_by_vertex()
            .into_iter()
            .zip(choices)
            .map(|(ends, &flip)| {
                let ins: Vec<ArcEnd> = ends.iter().copied().filter(ArcEnd::is_in_end).collect();
                let outs: Vec<ArcEnd> = ends.iter().copied().filter(ArcEnd::is_out_end).collect();
                if flip {
                    vec![ins[0], outs[1], ins[1], outs[0]]
                } else {
                    vec![ins[0], outs[0], ins[1], outs[1]]
                }
            })
            .collect();
        Ok(RotationSystem::new(order))
    }

    /// Rotation system from a bitmask of choices (bit `v` for vertex `v`).
    pub fn from_mask(h: &Digraph, mask: u64) -> Result<Self> {
        let choices: Vec<bool> = (0..h.vertex_count()).map(|v| mask >> v & 1 == 1).collect();
        RotationSystem::from_choices(h, &choices)
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn at(&self, v: usize) -> &[ArcEnd] {
        &self.order[v]
    }

    pub fn orders(&self) -> &[Vec<ArcEnd>] {
        &self.order
    }

    /// Every cyclic order reversed (the mirror image).
    pub fn reversed(&self) -> Self {
        let all: Vec<usize> = (0..self.order.len()).collect();
        self.reversed_on(&all)
    }

    /// Cyclic orders reversed at the given vertices only.
    pub fn reversed_on(&self, vertices: &[usize]) -> Self {
        let mut order = self.order.clone();
        for &v in vertices {
            order[v].reverse();
        }
        RotationSystem::new(order)
    }

    /// Successor of every end in its vertex's cyclic order, indexed by
    /// [`ArcEnd::index`].
    fn successors(&self, arc_count: usize) -> Vec<ArcEnd> {
        let mut next = vec![ArcEnd::tail(0); 2 * arc_count];
        for cycle in &self.order {
            for (i, end) in cycle.iter().enumerate() {
                next[end.index()] = cycle[(i + 1) % cycle.len()];
            }
        }
        next
    }
}

/// Structural check: the rotation at every vertex lists exactly the ends of
/// that vertex. Then report whether in-ends and out-ends alternate.
pub fn validate_rotation(h: &Digraph, rotation: &RotationSystem) -> Result<bool> {
    check_coverage(h, rotation)?;
    Ok(first_non_alternating(rotation).is_none())
}

fn check_coverage(h: &Digraph, rotation: &RotationSystem) -> Result<()> {
    let expected = h.ends_by_vertex();
    if rotation.vertex_count() != h.vertex_count() {
        return Err(Error::RotationCoverage {
            vertex: rotation.vertex_count().min(h.vertex_count()),
        });
    }
    for (v, ends) in expected.iter().enumerate() {
        let mut got = rotation.at(v).to_vec();
        got.sort();
        if &got != ends {
            return Err(Error::RotationCoverage { vertex: v });
        }
    }
    Ok(())
}

fn first_non_alternating(rotation: &RotationSystem) -> Option<usize> {
    rotation.orders().iter().position(|cycle| {
        (0..cycle.len()).any(|i| cycle[i].side == cycle[(i + 1) % cycle.len()].side)
    })
}

/// Coverage and alternation, as an error.
pub fn check_rotation(h: &Digraph, rotation: &RotationSystem) -> Result<()> {
    check_coverage(h, rotation)?;
    match first_non_alternating(rotation) {
        Some(vertex) => Err(Error::NotAlternating { vertex }),
        None => Ok(()),
    }
}

/// A directed closed walk, stored as its lexicographically least rotation
/// (which starts at its least arc id).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacialWalk(Vec<usize>);

impl FacialWalk {
    pub fn new(arcs: Vec<usize>) -> Self {
        let n = arcs.len();
        let best = (0..n)
            .map(|s| {
                let mut r = arcs.clone();
                r.rotate_left(s);
                r
            })
            .min()
            .unwrap_or_default();
        FacialWalk(best)
    }

    pub fn arcs(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The head of every arc is the tail of the next, cyclically.
    pub fn is_directed_in(&self, h: &Digraph) -> bool {
        let n = self.0.len();
        n > 0
            && self.0.iter().all(|&a| a < h.arc_count())
            && (0..n).all(|i| h.arc(self.0[i]).head == h.arc(self.0[(i + 1) % n]).tail)
    }
}

/// Multiset of facial walks, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSet(Vec<FacialWalk>);

impl FaceSet {
    pub fn new(mut walks: Vec<FacialWalk>) -> Self {
        walks.sort();
        FaceSet(walks)
    }

    pub fn from_arc_lists(lists: Vec<Vec<usize>>) -> Self {
        FaceSet::new(lists.into_iter().map(FacialWalk::new).collect())
    }

    pub fn walks(&self) -> &[FacialWalk] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// How many times each arc occurs across all walks.
    pub fn arc_occurrences(&self, arc_count: usize) -> Vec<usize> {
        let mut count = vec![0; arc_count];
        for walk in &self.0 {
            for &a in walk.arcs() {
                if a < arc_count {
                    count[a] += 1;
                }
            }
        }
        count
    }

    /// Each arc of `h` occurs exactly twice and every walk is directed.
    pub fn is_well_formed_for(&self, h: &Digraph) -> bool {
        self.0.iter().all(|w| w.is_directed_in(h))
            && self.arc_occurrences(h.arc_count()).iter().all(|&c| c == 2)
    }
}

/// Trace the faces of an alternating rotation system.
pub fn trace_faces(h: &Digraph, rotation: &RotationSystem) -> Result<FaceSet> {
    check_rotation(h, rotation)?;
    let next = rotation.successors(h.arc_count());
    let mut seen = vec![false; 2 * h.arc_count()];
    let mut walks = Vec::new();
    for start in 0..2 * h.arc_count() {
        if seen[start] {
            continue;
        }
        let mut arcs = Vec::new();
        let mut forward = None;
        let mut arrival = ArcEnd::from_index(start);
        while !seen[arrival.index()] {
            seen[arrival.index()] = true;
            let leave = next[arrival.index()];
            match forward {
                None => forward = Some(leave.is_out_end()),
                Some(f) if f != leave.is_out_end() => {
                    return Err(Error::Internal(
                        "face orbit mixes forward and backward arcs".into(),
                    ))
                }
                _ => {}
            }
            arcs.push(leave.arc);
            arrival = leave.opposite();
        }
        if forward == Some(false) {
            arcs.reverse();
        }
        walks.push(FacialWalk::new(arcs));
    }
    Ok(FaceSet::new(walks))
}

/// Orientable genus `g` with `V - E + F = 2 - 2g`. Requires a connected digraph.
pub fn euler_genus(h: &Digraph, rotation: &RotationSystem) -> Result<usize> {
    h.require_connected()?;
    let faces = trace_faces(h, rotation)?;
    genus_from_counts(h.vertex_count(), h.arc_count(), faces.len())
}

/// Genus from vertex, edge and face counts of a connected cellular embedding.
/// A lone vertex with no arcs is the sphere with one face.
pub fn genus_from_counts(vertices: usize, edges: usize, faces: usize) -> Result<usize> {
    let faces = if edges == 0 { 1 } else { faces };
    let twice = 2 + edges as i64 - vertices as i64 - faces as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Internal(format!(
            "V={vertices} E={edges} F={faces} gives no integral genus"
        )));
    }
    Ok((twice / 2) as usize)
}

/// Same facial walks, as multisets.
pub fn equivalent(a: &FaceSet, b: &FaceSet) -> bool {
    a == b
}

/// One equivalence class of alternating rotation systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingClass {
    pub faces: FaceSet,
    pub genus: usize,
    /// number of rotation systems in the class
    pub count: usize,
    /// first rotation system of the class in enumeration order
    pub representative: RotationSystem,
}

/// All `2^|V|` alternating rotation systems of a connected 2-regular digraph,
/// grouped by face set, in order of first appearance by choice mask.
pub fn enumerate_embeddings(h: &Digraph, bound: usize) -> Result<Vec<EmbeddingClass>> {
    h.require_2regular()?;
    h.require_connected()?;
    let n = h.vertex_count();
    if n > bound || n >= 64 {
        return Err(Error::BoundExceeded { vertices: n, bound });
    }
    let mut classes: Vec<EmbeddingClass> = Vec::new();
    let mut index: HashMap<FaceSet, usize> = HashMap::new();
    for mask in 0..1u64 << n {
        let rotation = RotationSystem::from_mask(h, mask)?;
        let faces = trace_faces(h, &rotation)?;
        match index.get(&faces) {
            Some(&i) => classes[i].count += 1,
            None => {
                let genus = genus_from_counts(n, h.arc_count(), faces.len())?;
                index.insert(faces.clone(), classes.len());
                classes.push(EmbeddingClass {
                    faces,
                    genus,
                    count: 1,
                    representative: rotation,
                });
            }
        }
    }
    Ok(classes)
}

/// Rebuild a rotation system from a face set, or `None` if no alternating
/// rotation system has exactly these faces.
///
/// Every arc must lie on one face traversed forwards and one traversed
/// backwards in the orbit sense, so the faces are 2-coloured along shared
/// arcs. A forward face `(.., a, b, ..)` fixes `succ(head end of a) = tail end
/// of b`; a backward face fixes `succ(tail end of b) = head end of a`. The
/// successors must close up into a single cycle at every vertex, and the
/// result is confirmed by tracing it again.
pub fn faces_to_rotation(h: &Digraph, faces: &FaceSet) -> Option<RotationSystem> {
    let m = h.arc_count();
    if !faces.is_well_formed_for(h) {
        return None;
    }
    let walks = faces.walks();

    // the two faces containing each arc
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (f, walk) in walks.iter().enumerate() {
        for &a in walk.arcs() {
            holders[a].push(f);
        }
    }
    if holders.iter().any(|hs| hs[0] == hs[1]) {
        return None;
    }

    // 2-colour the face adjacency; the least face of each part goes forward
    let mut forward: Vec<Option<bool>> = vec![None; walks.len()];
    let mut adjacency = vec![Vec::new(); walks.len()];
    for hs in &holders {
        adjacency[hs[0]].push(hs[1]);
        adjacency[hs[1]].push(hs[0]);
    }
    for root in 0..walks.len() {
        if forward[root].is_some() {
            continue;
        }
        forward[root] = Some(true);
        let mut stack = vec![root];
        while let Some(f) = stack.pop() {
            let colour = forward[f].unwrap();
            for &g in &adjacency[f] {
                match forward[g] {
                    None => {
                        forward[g] = Some(!colour);
                        stack.push(g);
                    }
                    Some(c) if c == colour => return None,
                    _ => {}
                }
            }
        }
    }

    let mut next: Vec<Option<ArcEnd>> = vec![None; 2 * m];
    let mut assign = |from: ArcEnd, to: ArcEnd| -> bool {
        match next[from.index()] {
            Some(existing) => existing == to,
            None => {
                next[from.index()] = Some(to);
                true
            }
        }
    };
    for (f, walk) in walks.iter().enumerate() {
        let arcs = walk.arcs();
        for i in 0..arcs.len() {
            let (a, b) = (arcs[i], arcs[(i + 1) % arcs.len()]);
            let ok = if forward[f] == Some(true) {
                assign(ArcEnd::head(a), ArcEnd::tail(b))
            } else {
                assign(ArcEnd::tail(b), ArcEnd::head(a))
            };
            if !ok {
                return None;
            }
        }
    }
    let next: Vec<ArcEnd> = next.into_iter().collect::<Option<Vec<_>>>()?;

    let mut order = Vec::with_capacity(h.vertex_count());
    for ends in h.ends_by_vertex() {
        let Some(&first) = ends.first() else {
            order.push(Vec::new());
            continue;
        };
        let mut cycle = vec![first];
        let mut cur = next[first.index()];
        while cur != first {
            if cycle.len() > ends.len() || h.end_vertex(cur) != h.end_vertex(first) {
                return None;
            }
            cycle.push(cur);
            cur = next[cur.index()];
        }
        if cycle.len() != ends.len() {
            return None;
        }
        order.push(cycle);
    }
    let rotation = RotationSystem::new(order);
    match trace_faces(h, &rotation) {
        Ok(traced) if traced == *faces => Some(rotation),
        _ => None,
    }
}
