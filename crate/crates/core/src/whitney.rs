//! Whitney flips on 2-edge-cuts and synthesis of flip sequences between
//! spherical embeddings.
//!
//! A flip reflects everything on one side `X` of a 2-edge-cut. In rotation
//! terms it reverses the cyclic order at every vertex of `X`; the two cut arcs
//! are where the reflected disc meets the digraph.

use crate::connectivity::{self, check_cut, cut_with_side, EdgeCut2};
use crate::digraph::{Arc, ArcEnd, Digraph, EndSide};
use crate::embedding::{self, check_rotation, trace_faces, RotationSystem};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlipMove {
    pub cut: EdgeCut2,
}

impl FlipMove {
    pub fn new(cut: EdgeCut2) -> Self {
        FlipMove { cut }
    }

    /// The same flip described by the side that avoids `anchor`. Both sides
    /// give the same faces.
    pub fn excluding(&self, anchor: usize, vertex_count: usize) -> Self {
        FlipMove {
            cut: self.cut.excluding(anchor, vertex_count),
        }
    }
}

/// Reverse the rotation at every vertex on the flipped side.
pub fn whitney_flip(
    h: &Digraph,
    rotation: &RotationSystem,
    flip: &FlipMove,
) -> Result<RotationSystem> {
    check_cut(h, &flip.cut)?;
    check_rotation(h, rotation)?;
    Ok(rotation.reversed_on(&flip.cut.side))
}

/// Apply moves left to right.
pub fn apply_moves(
    h: &Digraph,
    rotation: &RotationSystem,
    moves: &[FlipMove],
) -> Result<RotationSystem> {
    moves
        .iter()
        .try_fold(rotation.clone(), |r, m| whitney_flip(h, &r, m))
}

/// The two digraphs obtained by contracting either side of a 2-edge-cut.
///
/// `inner` keeps the side `X` and replaces the outside by one arc from the
/// tail `u` of the out-arc to the head `v` of the in-arc. `outer` keeps the
/// rest and replaces `X` by one arc from the tail `a` of the in-arc to the head
/// `b` of the out-arc. In both, the new arc is the last arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionPair {
    pub cut: EdgeCut2,
    pub inner: Digraph,
    pub outer: Digraph,
    /// inner vertex -> original vertex
    pub inner_vertices: Vec<usize>,
    /// outer vertex -> original vertex
    pub outer_vertices: Vec<usize>,
    /// inner arc -> original arc (`None` for the new arc)
    pub inner_arcs: Vec<Option<usize>>,
    /// outer arc -> original arc (`None` for the new arc)
    pub outer_arcs: Vec<Option<usize>>,
}

impl ContractionPair {
    pub fn inner_new_arc(&self) -> usize {
        self.inner.arc_count() - 1
    }

    pub fn outer_new_arc(&self) -> usize {
        self.outer.arc_count() - 1
    }
}

fn inverse(map: &[Option<usize>], size: usize) -> Vec<Option<usize>> {
    let mut inv = vec![None; size];
    for (new, old) in map.iter().enumerate() {
        if let Some(old) = old {
            inv[*old] = Some(new);
        }
    }
    inv
}

fn side_digraph(
    h: &Digraph,
    side: &[usize],
    new_arc: (usize, usize),
) -> (Digraph, Vec<usize>, Vec<Option<usize>>) {
    let (induced, origin) = h.induced(side);
    let mut vertex_of = vec![usize::MAX; h.vertex_count()];
    for (new, &old) in side.iter().enumerate() {
        vertex_of[old] = new;
    }
    let mut arcs = induced.arcs().to_vec();
    arcs.push(Arc::new(vertex_of[new_arc.0], vertex_of[new_arc.1]));
    let mut arc_origin: Vec<Option<usize>> = origin.into_iter().map(Some).collect();
    arc_origin.push(None);
    let digraph = Digraph::new(side.len(), arcs).expect("endpoints lie on this side");
    (digraph, side.to_vec(), arc_origin)
}

pub fn contract_at_cut(h: &Digraph, cut: &EdgeCut2) -> Result<ContractionPair> {
    check_cut(h, cut)?;
    let out_arc = h.arc(cut.out_arc);
    let in_arc = h.arc(cut.in_arc);
    let inside = cut.side.clone();
    let outside = cut.complement(h.vertex_count()).side;
    let (inner, inner_vertices, inner_arcs) = side_digraph(h, &inside, (out_arc.tail, in_arc.head));
    let (outer, outer_vertices, outer_arcs) =
        side_digraph(h, &outside, (in_arc.tail, out_arc.head));
    Ok(ContractionPair {
        cut: cut.clone(),
        inner,
        outer,
        inner_vertices,
        outer_vertices,
        inner_arcs,
        outer_arcs,
    })
}

/// Restrict a rotation to one side, putting the new arc's ends where the cut
/// arcs' ends were.
fn restrict(
    rotation: &RotationSystem,
    vertices: &[usize],
    arcs: &[Option<usize>],
    original_arc_count: usize,
    substitutions: [(ArcEnd, ArcEnd); 2],
) -> RotationSystem {
    let arc_of = inverse(arcs, original_arc_count);
    let order = vertices
        .iter()
        .map(|&v| {
            rotation
                .at(v)
                .iter()
                .map(|end| {
                    if let Some((_, new)) = substitutions.iter().find(|(old, _)| old == end) {
                        *new
                    } else {
                        ArcEnd {
                            arc: arc_of[end.arc].expect("end of an arc on this side"),
                            side: end.side,
                        }
                    }
                })
                .collect()
        })
        .collect();
    RotationSystem::new(order)
}

/// Rotations induced on the inner and outer contractions.
pub fn induce_rotation(
    h: &Digraph,
    pair: &ContractionPair,
    rotation: &RotationSystem,
) -> Result<(RotationSystem, RotationSystem)> {
    check_rotation(h, rotation)?;
    let (o, i) = (pair.cut.out_arc, pair.cut.in_arc);
    let inner_new = pair.inner_new_arc();
    let outer_new = pair.outer_new_arc();
    let inner = restrict(
        rotation,
        &pair.inner_vertices,
        &pair.inner_arcs,
        h.arc_count(),
        [
            (ArcEnd::tail(o), ArcEnd::tail(inner_new)),
            (ArcEnd::head(i), ArcEnd::head(inner_new)),
        ],
    );
    let outer = restrict(
        rotation,
        &pair.outer_vertices,
        &pair.outer_arcs,
        h.arc_count(),
        [
            (ArcEnd::tail(i), ArcEnd::tail(outer_new)),
            (ArcEnd::head(o), ArcEnd::head(outer_new)),
        ],
    );
    check_rotation(&pair.inner, &inner)?;
    check_rotation(&pair.outer, &outer)?;
    Ok((inner, outer))
}

/// Glue rotations of the two contractions back into a rotation of `h`;
/// the inverse of [`induce_rotation`].
pub fn splice_rotations(
    h: &Digraph,
    pair: &ContractionPair,
    inner: &RotationSystem,
    outer: &RotationSystem,
) -> Result<RotationSystem> {
    check_rotation(&pair.inner, inner)?;
    check_rotation(&pair.outer, outer)?;
    let mut order = vec![Vec::new(); h.vertex_count()];
    let lift =
        |end: &ArcEnd, arcs: &[Option<usize>], new_arc: usize, tail_to: usize, head_to: usize| {
            if end.arc == new_arc {
                match end.side {
                    EndSide::Tail => ArcEnd::tail(tail_to),
                    EndSide::Head => ArcEnd::head(head_to),
                }
            } else {
                ArcEnd {
                    arc: arcs[end.arc].expect("original arc"),
                    side: end.side,
                }
            }
        };
    let (o, i) = (pair.cut.out_arc, pair.cut.in_arc);
    for (v, &orig) in pair.inner_vertices.iter().enumerate() {
        order[orig] = inner
            .at(v)
            .iter()
            .map(|end| lift(end, &pair.inner_arcs, pair.inner_new_arc(), o, i))
            .collect();
    }
    for (v, &orig) in pair.outer_vertices.iter().enumerate() {
        order[orig] = outer
            .at(v)
            .iter()
            .map(|end| lift(end, &pair.outer_arcs, pair.outer_new_arc(), i, o))
            .collect();
    }
    let rotation = RotationSystem::new(order);
    check_rotation(h, &rotation)?;
    Ok(rotation)
}

/// Carry a flip of the outer contraction back to `h`.
///
/// A cut that avoids the new arc is described from the side that contains
/// neither of its endpoints, where it is also a cut of `h`. A cut through the
/// new arc is described from the side containing the new arc's head, which
/// then absorbs `X`, and the new arc is replaced by the original in-arc of `X`.
fn lift_move(h: &Digraph, pair: &ContractionPair, flip: &FlipMove) -> Result<FlipMove> {
    let outer_n = pair.outer.vertex_count();
    let new_arc = pair.outer_new_arc();
    let e = pair.outer.arc(new_arc);
    let cut = &flip.cut;
    let to_original_arc = |a: usize| pair.outer_arcs[a].expect("original arc");
    let lifted = if cut.out_arc != new_arc && cut.in_arc != new_arc {
        let cut = cut.excluding(e.tail, outer_n);
        if cut.contains(e.head) {
            return Err(Error::Internal(
                "new arc crosses a cut that avoids it".into(),
            ));
        }
        EdgeCut2 {
            out_arc: to_original_arc(cut.out_arc),
            in_arc: to_original_arc(cut.in_arc),
            side: sorted(cut.side.iter().map(|&v| pair.outer_vertices[v]).collect()),
        }
    } else {
        let cut = if cut.contains(e.head) {
            cut.clone()
        } else {
            cut.complement(outer_n)
        };
        if cut.in_arc != new_arc {
            return Err(Error::Internal(
                "new arc should enter the side holding its head".into(),
            ));
        }
        let mut side: Vec<usize> = cut.side.iter().map(|&v| pair.outer_vertices[v]).collect();
        side.extend_from_slice(&pair.cut.side);
        EdgeCut2 {
            out_arc: to_original_arc(cut.out_arc),
            in_arc: pair.cut.in_arc,
            side: sorted(side),
        }
    };
    check_cut(h, &lifted)
        .map_err(|err| Error::Internal(format!("lifted flip is not a cut: {err}")))?;
    Ok(FlipMove::new(lifted))
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn require_spherical(h: &Digraph, rotation: &RotationSystem) -> Result<()> {
    let genus = embedding::euler_genus(h, rotation)?;
    if genus != 0 {
        return Err(Error::NotSpherical { genus });
    }
    Ok(())
}

/// Whitney flips taking `first` to an embedding equivalent to `second`, both
/// spherical embeddings of a connected 2-regular digraph.
///
/// Follows the induction on the vertex count: a strongly 2-edge-connected
/// digraph has a single spherical embedding; otherwise the smallest set `X`
/// with one arc leaving it is contracted away, the smaller problem is solved,
/// its flips are lifted, and one last flip of `X` fixes the inside if needed.
/// Every move is reported from the side not containing vertex 0.
pub fn flip_sequence(
    h: &Digraph,
    first: &RotationSystem,
    second: &RotationSystem,
) -> Result<Vec<FlipMove>> {
    h.require_2regular()?;
    h.require_connected()?;
    require_spherical(h, first)?;
    require_spherical(h, second)?;
    let moves: Vec<FlipMove> = synthesize(h, first, second)?
        .into_iter()
        .map(|m| m.excluding(0, h.vertex_count()))
        .collect();
    let result = apply_moves(h, first, &moves)?;
    if trace_faces(h, &result)? != trace_faces(h, second)? {
        return Err(Error::Internal(
            "flip sequence does not reach the target embedding".into(),
        ));
    }
    Ok(moves)
}

fn synthesize(
    h: &Digraph,
    first: &RotationSystem,
    second: &RotationSystem,
) -> Result<Vec<FlipMove>> {
    let target = trace_faces(h, second)?;
    if trace_faces(h, first)? == target {
        return Ok(Vec::new());
    }
    let Some(cut) = connectivity::minimal_one_out_set(h)? else {
        return Err(Error::Internal(
            "two inequivalent spherical embeddings of a strongly 2-edge-connected digraph".into(),
        ));
    };
    let pair = contract_at_cut(h, &cut)?;
    let (inner_first, outer_first) = induce_rotation(h, &pair, first)?;
    let (inner_second, outer_second) = induce_rotation(h, &pair, second)?;
    if trace_faces(&pair.inner, &inner_first)? != trace_faces(&pair.inner, &inner_second)? {
        return Err(Error::Internal(format!(
            "inner contraction at {:?} has inequivalent embeddings",
            cut.side
        )));
    }

    let mut moves = synthesize(&pair.outer, &outer_first, &outer_second)?
        .iter()
        .map(|m| lift_move(h, &pair, m))
        .collect::<Result<Vec<_>>>()?;
    let mut current = apply_moves(h, first, &moves)?;
    if trace_faces(h, &current)? != target {
        let last = FlipMove::new(cut_with_side(h, &cut.side)?);
        current = whitney_flip(h, &current, &last)?;
        moves.push(last);
    }
    if trace_faces(h, &current)? != target {
        return Err(Error::Internal(format!(
            "flipping {:?} did not reach the target embedding",
            cut.side
        )));
    }
    Ok(moves)
}
