//! Weak and strong components, strong k-edge-connectivity and 2-edge-cuts.
//!
//! Every query takes an optional "removed" mask over arc ids so that callers
//! can ask about `H - F` without building a new digraph.

use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};

/// A pair of arcs separating `side` from the rest of the digraph: `out_arc`
/// leaves `side`, `in_arc` enters it, and no other arc crosses.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeCut2 {
    pub out_arc: usize,
    pub in_arc: usize,
    /// sorted vertex ids
    pub side: Vec<usize>,
}

impl EdgeCut2 {
    /// The same cut described from the other side.
    pub fn complement(&self, vertex_count: usize) -> EdgeCut2 {
        let mut inside = vec![false; vertex_count];
        for &v in &self.side {
            inside[v] = true;
        }
        EdgeCut2 {
            out_arc: self.in_arc,
            in_arc: self.out_arc,
            side: (0..vertex_count).filter(|&v| !inside[v]).collect(),
        }
    }

    /// Describe the cut from the side that does not contain `anchor`.
    pub fn excluding(&self, anchor: usize, vertex_count: usize) -> EdgeCut2 {
        if self.side.binary_search(&anchor).is_ok() {
            self.complement(vertex_count)
        } else {
            self.clone()
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.side.binary_search(&v).is_ok()
    }
}

fn is_removed(removed: Option<&[bool]>, arc: usize) -> bool {
    removed.is_some_and(|r| r[arc])
}

/// Weak components of a raw arc list, each sorted, ordered by least vertex.
pub fn weak_components_of(
    vertex_count: usize,
    arcs: &[Arc],
    removed: Option<&[bool]>,
) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (id, arc) in arcs.iter().enumerate() {
        if is_removed(removed, id) {
            continue;
        }
        let (a, b) = (find(&mut parent, arc.tail), find(&mut parent, arc.head));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut label = vec![usize::MAX; vertex_count];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for v in 0..vertex_count {
        let root = find(&mut parent, v);
        if label[root] == usize::MAX {
            label[root] = components.len();
            components.push(Vec::new());
        }
        components[label[root]].push(v);
    }
    components
}

pub fn weak_components(h: &Digraph) -> Vec<Vec<usize>> {
    weak_components_of(h.vertex_count(), h.arcs(), None)
}

pub fn weak_components_without(h: &Digraph, removed: &[bool]) -> Vec<Vec<usize>> {
    weak_components_of(h.vertex_count(), h.arcs(), Some(removed))
}

/// Underlying undirected graph connected (the empty digraph counts as connected).
pub fn is_connected(h: &Digraph) -> bool {
    weak_components(h).len() <= 1
}

/// Strong components by Kosaraju's algorithm, each sorted, ordered by least vertex.
pub fn strong_components_without(h: &Digraph, removed: Option<&[bool]>) -> Vec<Vec<usize>> {
    let n = h.vertex_count();
    let mut out_adj = vec![Vec::new(); n];
    let mut in_adj = vec![Vec::new(); n];
    for (id, arc) in h.arcs().iter().enumerate() {
        if !is_removed(removed, id) {
            out_adj[arc.tail].push(arc.head);
            in_adj[arc.head].push(arc.tail);
        }
    }

    // first pass: finishing order on the forward graph
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut stack = vec![(start, 0usize)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&w) = out_adj[v].get(*next) {
                *next += 1;
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }

    // second pass: reverse graph in decreasing finishing time
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for &start in order.iter().rev() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &in_adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }

    let mut components = vec![Vec::new(); count];
    for v in 0..n {
        components[comp[v]].push(v);
    }
    components.sort();
    components
}

pub fn strong_components(h: &Digraph) -> Vec<Vec<usize>> {
    strong_components_without(h, None)
}

/// One strong component spanning every vertex. A single vertex (or no vertex)
/// is strongly connected.
pub fn is_strongly_connected(h: &Digraph) -> bool {
    strong_components(h).len() <= 1
}

pub fn is_strongly_connected_without(h: &Digraph, removed: &[bool]) -> bool {
    strong_components_without(h, Some(removed)).len() <= 1
}

/// `H - F` is strongly connected for every arc set `F` with `|F| < k`.
/// Checked by enumerating those sets; `k` is limited to 1..=3.
pub fn is_strongly_k_edge_connected(h: &Digraph, k: usize) -> bool {
    assert!((1..=3).contains(&k), "k must be 1, 2 or 3");
    if !is_strongly_connected(h) {
        return false;
    }
    let m = h.arc_count();
    let mut removed = vec![false; m];
    if k >= 2 {
        for a in 0..m {
            removed[a] = true;
            if !is_strongly_connected_without(h, &removed) {
                return false;
            }
            if k == 3 {
                for b in a + 1..m {
                    removed[b] = true;
                    let ok = is_strongly_connected_without(h, &removed);
                    removed[b] = false;
                    if !ok {
                        return false;
                    }
                }
            }
            removed[a] = false;
        }
    }
    true
}

/// Number of arcs with tail in `side` and head outside.
pub fn out_degree_of_set(h: &Digraph, side: &[usize]) -> usize {
    let inside = membership(h.vertex_count(), side);
    h.arcs()
        .iter()
        .filter(|a| inside[a.tail] && !inside[a.head])
        .count()
}

pub fn in_degree_of_set(h: &Digraph, side: &[usize]) -> usize {
    let inside = membership(h.vertex_count(), side);
    h.arcs()
        .iter()
        .filter(|a| !inside[a.tail] && inside[a.head])
        .count()
}

fn membership(n: usize, side: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; n];
    for &v in side {
        inside[v] = true;
    }
    inside
}

/// The 2-edge-cut whose side is `side`, if exactly one arc leaves and exactly
/// one arc enters it.
pub fn cut_with_side(h: &Digraph, side: &[usize]) -> Result<EdgeCut2> {
    let mut side = side.to_vec();
    side.sort_unstable();
    side.dedup();
    if let Some(&v) = side.iter().find(|&&v| v >= h.vertex_count()) {
        return Err(Error::InvalidVertex { vertex: v });
    }
    if side.is_empty() || side.len() == h.vertex_count() {
        return Err(Error::InvalidCut(
            "side must be a nonempty proper subset".into(),
        ));
    }
    let inside = membership(h.vertex_count(), &side);
    let leaving: Vec<usize> = (0..h.arc_count())
        .filter(|&a| inside[h.arc(a).tail] && !inside[h.arc(a).head])
        .collect();
    let entering: Vec<usize> = (0..h.arc_count())
        .filter(|&a| !inside[h.arc(a).tail] && inside[h.arc(a).head])
        .collect();
    match (leaving.as_slice(), entering.as_slice()) {
        (&[out_arc], &[in_arc]) => Ok(EdgeCut2 {
            out_arc,
            in_arc,
            side,
        }),
        _ => Err(Error::InvalidCut(format!(
            "{} arcs leave and {} arcs enter {:?}",
            leaving.len(),
            entering.len(),
            side
        ))),
    }
}

/// Check that `cut` is a genuine 2-edge-cut of `h` with the arcs it names.
pub fn check_cut(h: &Digraph, cut: &EdgeCut2) -> Result<()> {
    let actual = cut_with_side(h, &cut.side)?;
    if actual.out_arc != cut.out_arc || actual.in_arc != cut.in_arc || actual.side != cut.side {
        return Err(Error::InvalidCut(format!(
            "side {:?} is crossed by arcs {} (out) and {} (in), not {} and {}",
            actual.side, actual.out_arc, actual.in_arc, cut.out_arc, cut.in_arc
        )));
    }
    Ok(())
}

fn require_connected_eulerian(h: &Digraph) -> Result<()> {
    let report = h.degree_report();
    if !report.is_eulerian {
        return Err(Error::NotEulerian);
    }
    if !report.is_connected {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Every pair of arcs whose removal disconnects the underlying graph, ordered
/// by arc pair, each with the side that does not contain vertex 0.
pub fn enumerate_2cuts(h: &Digraph) -> Result<Vec<EdgeCut2>> {
    require_connected_eulerian(h)?;
    let m = h.arc_count();
    let mut removed = vec![false; m];
    let mut cuts = Vec::new();
    for a in 0..m {
        if h.arc(a).is_loop() {
            continue;
        }
        removed[a] = true;
        for b in a + 1..m {
            if h.arc(b).is_loop() {
                continue;
            }
            removed[b] = true;
            let components = weak_components_without(h, &removed);
            removed[b] = false;
            if components.len() < 2 {
                continue;
            }
            // connected Eulerian digraphs have no bridges, so the split is in two
            if components.len() != 2 {
                return Err(Error::Internal(format!(
                    "removing arcs {a} and {b} left {} components",
                    components.len()
                )));
            }
            let cut = cut_with_side(h, &components[1]).map_err(|e| {
                Error::Internal(format!("arc pair {a},{b} is not a balanced cut: {e}"))
            })?;
            cuts.push(cut);
        }
        removed[a] = false;
    }
    Ok(cuts)
}

/// A smallest vertex set `X` with exactly one arc leaving it (ties broken by
/// the lexicographically least sorted vertex list), or `None` when the digraph
/// is strongly 2-edge-connected.
pub fn minimal_one_out_set(h: &Digraph) -> Result<Option<EdgeCut2>> {
    let n = h.vertex_count();
    let best = enumerate_2cuts(h)?
        .into_iter()
        .flat_map(|cut| {
            let other = cut.complement(n);
            [cut, other]
        })
        .min_by(|a, b| {
            a.side
                .len()
                .cmp(&b.side.len())
                .then_with(|| a.side.cmp(&b.side))
        });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::fixture;

    #[test]
    fn weak_components_examples() {
        let d2 = fixture("D2").unwrap();
        assert_eq!(weak_components(&d2), vec![vec![0, 1]]);
        let (only_2_3, _) = d2.without_arcs(&[0, 1]);
        assert_eq!(weak_components(&only_2_3).len(), 1);
        let two = d2.disjoint_union(&d2);
        assert_eq!(weak_components(&two), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn strong_connectivity_examples() {
        assert!(is_strongly_connected(&fixture("C3x2").unwrap()));
        let (h, _) = fixture("D2").unwrap().without_arcs(&[0, 2]);
        assert!(!is_strongly_connected(&h));
        assert!(is_strongly_connected(&Digraph::new(1, vec![]).unwrap()));
        assert!(!is_strongly_connected(&Digraph::new(2, vec![]).unwrap()));
    }

    #[test]
    fn k_edge_connectivity_examples() {
        let d2 = fixture("D2").unwrap();
        assert!(is_strongly_k_edge_connected(&d2, 2));
        assert!(!is_strongly_k_edge_connected(&d2, 3));
        let ll = fixture("LOOPLINK").unwrap();
        assert!(is_strongly_k_edge_connected(&ll, 1));
        assert!(!is_strongly_k_edge_connected(&ll, 2));
    }

    #[test]
    fn cuts_of_fixtures() {
        let ll = fixture("LOOPLINK").unwrap();
        assert_eq!(
            enumerate_2cuts(&ll).unwrap(),
            vec![EdgeCut2 {
                out_arc: 3,
                in_arc: 1,
                side: vec![1]
            }]
        );
        assert!(enumerate_2cuts(&fixture("D2").unwrap()).unwrap().is_empty());
        assert!(enumerate_2cuts(&fixture("C3x2").unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn minimal_set_examples() {
        let ll = fixture("LOOPLINK").unwrap();
        assert_eq!(
            minimal_one_out_set(&ll).unwrap(),
            Some(EdgeCut2 {
                out_arc: 1,
                in_arc: 3,
                side: vec![0]
            })
        );
        assert_eq!(minimal_one_out_set(&fixture("D2").unwrap()).unwrap(), None);
        assert_eq!(
            minimal_one_out_set(&fixture("C3x2").unwrap()).unwrap(),
            None
        );
    }

    #[test]
    fn cut_side_validation() {
        let ll = fixture("LOOPLINK").unwrap();
        let cut = cut_with_side(&ll, &[1]).unwrap();
        assert!(check_cut(&ll, &cut).is_ok());
        let swapped = EdgeCut2 {
            out_arc: cut.in_arc,
            in_arc: cut.out_arc,
            side: cut.side.clone(),
        };
        assert!(check_cut(&ll, &swapped).is_err());
        assert!(cut_with_side(&ll, &[]).is_err());
        assert!(cut_with_side(&ll, &[0, 1]).is_err());
        assert!(cut_with_side(&fixture("D2").unwrap(), &[0]).is_err());
        assert_eq!(cut.complement(2).complement(2), cut);
    }

    #[test]
    fn non_eulerian_rejected() {
        let h = Digraph::from_pairs(2, &[(0, 1)]);
        assert_eq!(enumerate_2cuts(&h), Err(Error::NotEulerian));
    }
}
