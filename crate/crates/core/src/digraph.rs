//! Directed multigraphs with identified arcs.
//!
//! Arcs are addressed by their index; parallel arcs and loops are allowed and
//! are distinguished by that index. Every arc contributes two [`ArcEnd`]s, one
//! at its tail and one at its head, so a loop contributes two ends at the same
//! vertex.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn new(tail: usize, head: usize) -> Self {
        Arc { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Which end of an arc. The tail end is an out-end of its vertex, the head end
/// an in-end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EndSide {
    Tail,
    Head,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcEnd {
    pub arc: usize,
    pub side: EndSide,
}

impl ArcEnd {
    pub fn tail(arc: usize) -> Self {
        ArcEnd {
            arc,
            side: EndSide::Tail,
        }
    }

    pub fn head(arc: usize) -> Self {
        ArcEnd {
            arc,
            side: EndSide::Head,
        }
    }

    pub fn is_in_end(&self) -> bool {
        self.side == EndSide::Head
    }

    pub fn is_out_end(&self) -> bool {
        self.side == EndSide::Tail
    }

    /// The other end of the same arc.
    pub fn opposite(&self) -> Self {
        match self.side {
            EndSide::Tail => ArcEnd::head(self.arc),
            EndSide::Head => ArcEnd::tail(self.arc),
        }
    }

    /// Dense index `2 * arc + side`, used for per-end arrays.
    pub fn index(&self) -> usize {
        2 * self.arc
            + match self.side {
                EndSide::Tail => 0,
                EndSide::Head => 1,
            }
    }

    pub fn from_index(index: usize) -> Self {
        if index.is_multiple_of(2) {
            ArcEnd::tail(index / 2)
        } else {
            ArcEnd::head(index / 2)
        }
    }
}

impl fmt::Display for ArcEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            EndSide::Tail => write!(f, "{}t", self.arc),
            EndSide::Head => write!(f, "{}h", self.arc),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<Arc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub indegree: Vec<usize>,
    pub outdegree: Vec<usize>,
    pub is_eulerian: bool,
    pub is_2regular: bool,
    /// Connectivity of the underlying undirected graph.
    pub is_connected: bool,
}

/// Check arc endpoints and compute the degree report for a raw arc list.
pub fn validate(vertex_count: usize, arcs: &[Arc]) -> Result<DegreeReport> {
    let mut indegree = vec![0; vertex_count];
    let mut outdegree = vec![0; vertex_count];
    for (id, arc) in arcs.iter().enumerate() {
        for vertex in [arc.tail, arc.head] {
            if vertex >= vertex_count {
                return Err(Error::ArcEndpoint {
                    arc: id,
                    vertex,
                    vertex_count,
                });
            }
        }
        outdegree[arc.tail] += 1;
        indegree[arc.head] += 1;
    }
    let is_eulerian = indegree.iter().zip(&outdegree).all(|(i, o)| i == o);
    let is_2regular = indegree
        .iter()
        .zip(&outdegree)
        .all(|(&i, &o)| i == 2 && o == 2);
    let is_connected = crate::connectivity::weak_components_of(vertex_count, arcs, None).len() <= 1;
    Ok(DegreeReport {
        indegree,
        outdegree,
        is_eulerian,
        is_2regular,
        is_connected,
    })
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: Vec<Arc>) -> Result<Self> {
        for (id, arc) in arcs.iter().enumerate() {
            for vertex in [arc.tail, arc.head] {
                if vertex >= vertex_count {
                    return Err(Error::ArcEndpoint {
                        arc: id,
                        vertex,
                        vertex_count,
                    });
                }
            }
        }
        Ok(Digraph { vertex_count, arcs })
    }

    /// Build from `(tail, head)` pairs. Panics on a bad endpoint; meant for
    /// literals in fixtures and tests.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Self {
        let arcs = pairs.iter().map(|&(t, h)| Arc::new(t, h)).collect();
        Digraph::new(vertex_count, arcs).expect("arc endpoint out of range")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> Arc {
        self.arcs[id]
    }

    pub fn try_arc(&self, id: usize) -> Result<Arc> {
        self.arcs
            .get(id)
            .copied()
            .ok_or(Error::InvalidArc { arc: id })
    }

    /// Vertex at which an arc end sits.
    pub fn end_vertex(&self, end: ArcEnd) -> usize {
        let arc = self.arcs[end.arc];
        match end.side {
            EndSide::Tail => arc.tail,
            EndSide::Head => arc.head,
        }
    }

    pub fn out_arcs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.tail == v)
            .map(|(id, _)| id)
    }

    pub fn in_arcs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.head == v)
            .map(|(id, _)| id)
    }

    /// All arc ends at each vertex, ordered by arc id then side.
    pub fn ends_by_vertex(&self) -> Vec<Vec<ArcEnd>> {
        let mut ends = vec![Vec::new(); self.vertex_count];
        for (id, arc) in self.arcs.iter().enumerate() {
            ends[arc.tail].push(ArcEnd::tail(id));
            ends[arc.head].push(ArcEnd::head(id));
        }
        for list in &mut ends {
            list.sort();
        }
        ends
    }

    pub fn degree_report(&self) -> DegreeReport {
        validate(self.vertex_count, &self.arcs).expect("digraph invariants hold by construction")
    }

    pub fn is_eulerian(&self) -> bool {
        self.degree_report().is_eulerian
    }

    pub fn is_2regular(&self) -> bool {
        self.degree_report().is_2regular
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(Arc::is_loop)
    }

    pub(crate) fn require_2regular(&self) -> Result<()> {
        if self.is_2regular() {
            Ok(())
        } else {
            Err(Error::NotTwoRegular)
        }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if crate::connectivity::is_connected(self) {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// The subdigraph induced by `vertices` (sorted and renumbered in order).
    /// Returns the digraph and, for each new arc, the id of the original arc.
    pub fn induced(&self, vertices: &[usize]) -> (Digraph, Vec<usize>) {
        let mut map = vec![usize::MAX; self.vertex_count];
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (new, &old) in sorted.iter().enumerate() {
            map[old] = new;
        }
        let mut arcs = Vec::new();
        let mut origin = Vec::new();
        for (id, arc) in self.arcs.iter().enumerate() {
            if map[arc.tail] != usize::MAX && map[arc.head] != usize::MAX {
                arcs.push(Arc::new(map[arc.tail], map[arc.head]));
                origin.push(id);
            }
        }
        (
            Digraph {
                vertex_count: sorted.len(),
                arcs,
            },
            origin,
        )
    }

    /// Disjoint union; vertices and arcs of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.vertex_count;
        let mut arcs = self.arcs.clone();
        arcs.extend(
            other
                .arcs
                .iter()
                .map(|a| Arc::new(a.tail + shift, a.head + shift)),
        );
        Digraph {
            vertex_count: shift + other.vertex_count,
            arcs,
        }
    }

    /// Same digraph with the listed arcs deleted (vertices kept). Returns the
    /// original id of every surviving arc.
    pub fn without_arcs(&self, removed: &[usize]) -> (Digraph, Vec<usize>) {
        let mut gone = vec![false; self.arcs.len()];
        for &a in removed {
            gone[a] = true;
        }
        let origin: Vec<usize> = (0..self.arcs.len()).filter(|&a| !gone[a]).collect();
        let arcs = origin.iter().map(|&a| self.arcs[a]).collect();
        (
            Digraph {
                vertex_count: self.vertex_count,
                arcs,
            },
            origin,
        )
    }
}

/// How the two in-arcs of a vertex are matched to its two out-arcs when the
/// vertex is split. In-arcs and out-arcs are each taken in increasing id order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// first in-arc with first out-arc, second with second
    Straight,
    /// first in-arc with second out-arc, second with first
    Crossed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SplitChoice {
    pub vertex: usize,
    pub pairing: Pairing,
}

impl SplitChoice {
    pub fn new(vertex: usize, pairing: Pairing) -> Self {
        SplitChoice { vertex, pairing }
    }

    /// Build the choice that matches `in_arc` with `out_arc` at `vertex`.
    pub fn matching(h: &Digraph, vertex: usize, in_arc: usize, out_arc: usize) -> Result<Self> {
        let ins: Vec<usize> = h.in_arcs(vertex).collect();
        let outs: Vec<usize> = h.out_arcs(vertex).collect();
        if ins.len() != 2 || outs.len() != 2 {
            return Err(Error::NotDegreeTwo {
                vertex,
                indegree: ins.len(),
                outdegree: outs.len(),
            });
        }
        let i = ins.iter().position(|&a| a == in_arc);
        let o = outs.iter().position(|&a| a == out_arc);
        match (i, o) {
            (Some(i), Some(o)) if i == o => Ok(SplitChoice::new(vertex, Pairing::Straight)),
            (Some(_), Some(_)) => Ok(SplitChoice::new(vertex, Pairing::Crossed)),
            _ => Err(Error::BadPairing { vertex }),
        }
    }
}

/// Result of splitting a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub digraph: Digraph,
    /// old vertex id -> new vertex id (`None` for the split vertex)
    pub vertex_map: Vec<Option<usize>>,
    /// old arc id -> new arc id for every arc not incident to the split vertex
    pub arc_map: Vec<Option<usize>>,
}

/// Delete a vertex of indegree and outdegree two and reconnect its in-arcs to
/// its out-arcs according to `choice`.
///
/// A new arc takes the slot of the in-arc it starts with, so untouched arcs
/// keep their relative order. Loops at the split vertex are followed through:
/// an in-arc matched to a loop continues along that loop's partner, and a loop
/// matched to itself closes up and disappears.
pub fn split_vertex(h: &Digraph, choice: SplitChoice) -> Result<Split> {
    let v = choice.vertex;
    if v >= h.vertex_count() {
        return Err(Error::InvalidVertex { vertex: v });
    }
    let ins: Vec<usize> = h.in_arcs(v).collect();
    let outs: Vec<usize> = h.out_arcs(v).collect();
    if ins.len() != 2 || outs.len() != 2 {
        return Err(Error::NotDegreeTwo {
            vertex: v,
            indegree: ins.len(),
            outdegree: outs.len(),
        });
    }
    let partner = |in_arc: usize| -> usize {
        let i = if ins[0] == in_arc { 0 } else { 1 };
        match choice.pairing {
            Pairing::Straight => outs[i],
            Pairing::Crossed => outs[1 - i],
        }
    };

    // Each in-arc coming from another vertex starts a chain through v that
    // ends at the first out-arc leaving v.
    let mut replacement: Vec<(usize, Arc)> = Vec::new();
    for &e in &ins {
        let tail = h.arc(e).tail;
        if tail == v {
            continue;
        }
        let mut f = partner(e);
        while h.arc(f).head == v {
            f = partner(f);
        }
        replacement.push((e, Arc::new(tail, h.arc(f).head)));
    }

    let renumber = |x: usize| if x > v { x - 1 } else { x };
    let mut vertex_map = vec![None; h.vertex_count()];
    for (old, slot) in vertex_map.iter_mut().enumerate() {
        if old != v {
            *slot = Some(renumber(old));
        }
    }

    let mut arcs = Vec::with_capacity(h.arc_count() - 2);
    let mut arc_map = vec![None; h.arc_count()];
    for (id, arc) in h.arcs().iter().enumerate() {
        if arc.tail != v && arc.head != v {
            arc_map[id] = Some(arcs.len());
            arcs.push(Arc::new(renumber(arc.tail), renumber(arc.head)));
        } else if let Some((_, new)) = replacement.iter().find(|(e, _)| *e == id) {
            arcs.push(Arc::new(renumber(new.tail), renumber(new.head)));
        }
    }

    Ok(Split {
        digraph: Digraph::new(h.vertex_count() - 1, arcs)?,
        vertex_map,
        arc_map,
    })
}
