//! Immersion containment of small targets and planarity with a certificate.
//!
//! A target digraph `T` is immersed in a host `H` when the vertices of `T` map
//! injectively to host vertices and every arc of `T` maps to a directed path
//! between the images of its ends, all paths pairwise arc-disjoint. For
//! 2-regular digraphs this is the same as reaching `T` by splitting vertices.

use std::collections::HashMap;

use crate::connectivity;
use crate::digraph::Digraph;
use crate::embedding::{self, RotationSystem};
use crate::error::{Error, Result};
use crate::generate::doubled_cycle;
use crate::peripheral::peripheral_embedder;
use crate::whitney::{contract_at_cut, splice_rotations};

pub const MAX_TARGET_VERTICES: usize = 4;
pub const MAX_TARGET_ARCS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImmersionCertificate {
    /// target vertex -> host vertex
    pub branch_map: Vec<usize>,
    /// target arc -> host arc ids of its path
    pub paths: Vec<Vec<usize>>,
}

/// Re-check a certificate against host and target without searching.
pub fn verify_certificate(
    host: &Digraph,
    target: &Digraph,
    cert: &ImmersionCertificate,
) -> Result<(), String> {
    if cert.branch_map.len() != target.vertex_count() {
        return Err("branch map does not cover the target vertices".into());
    }
    let mut hit = vec![false; host.vertex_count()];
    for &b in &cert.branch_map {
        if b >= host.vertex_count() {
            return Err(format!("branch vertex {b} is not a host vertex"));
        }
        if std::mem::replace(&mut hit[b], true) {
            return Err(format!("host vertex {b} is used twice"));
        }
    }
    if cert.paths.len() != target.arc_count() {
        return Err("paths do not cover the target arcs".into());
    }
    let mut used = vec![false; host.arc_count()];
    for (t_arc, path) in cert.paths.iter().enumerate() {
        let arc = target.arc(t_arc);
        let (from, to) = (cert.branch_map[arc.tail], cert.branch_map[arc.head]);
        if path.is_empty() {
            return Err(format!("path for target arc {t_arc} is empty"));
        }
        let mut at = from;
        for &a in path {
            if a >= host.arc_count() {
                return Err(format!("host arc {a} does not exist"));
            }
            if std::mem::replace(&mut used[a], true) {
                return Err(format!("host arc {a} is used twice"));
            }
            if host.arc(a).tail != at {
                return Err(format!(
                    "path for target arc {t_arc} breaks at host arc {a}"
                ));
            }
            at = host.arc(a).head;
        }
        if at != to {
            return Err(format!(
                "path for target arc {t_arc} ends at {at}, not {to}"
            ));
        }
    }
    Ok(())
}

/// Injective maps from `k` target vertices into `n` host vertices, ordered by
/// the sum of the images and then lexicographically.
fn branch_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn extend(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                extend(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(k, n, &mut Vec::new(), &mut out);
    out.sort_by_key(|m| (m.iter().sum::<usize>(), m.clone()));
    out
}

/// All vertex-simple directed paths `from -> to` (nonempty cycles when the
/// two coincide), shortest first.
fn simple_paths(h: &Digraph, from: usize, to: usize) -> Vec<Vec<usize>> {
    fn go(
        h: &Digraph,
        at: usize,
        to: usize,
        on: &mut [bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for a in h.out_arcs(at).collect::<Vec<_>>() {
            let next = h.arc(a).head;
            if next == to {
                cur.push(a);
                out.push(cur.clone());
                cur.pop();
            } else if !on[next] {
                on[next] = true;
                cur.push(a);
                go(h, next, to, on, cur, out);
                cur.pop();
                on[next] = false;
            }
        }
    }
    let mut on = vec![false; h.vertex_count()];
    on[from] = true;
    on[to] = true;
    let mut out = Vec::new();
    go(h, from, to, &mut on, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

struct Search<'a> {
    host: &'a Digraph,
    target: &'a Digraph,
    paths: HashMap<(usize, usize), Vec<Vec<usize>>>,
    /// for each target arc, an earlier parallel target arc
    parallel_to: Vec<Option<usize>>,
}

impl Search<'_> {
    fn route(
        &mut self,
        map: &[usize],
        t_arc: usize,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<Vec<usize>>> {
        if t_arc == self.target.arc_count() {
            return Some(Vec::new());
        }
        let arc = self.target.arc(t_arc);
        let key = (map[arc.tail], map[arc.head]);
        let host = self.host;
        let candidates = self
            .paths
            .entry(key)
            .or_insert_with(|| simple_paths(host, key.0, key.1))
            .clone();
        // parallel target arcs are interchangeable; take their paths in order
        let floor = self.parallel_to[t_arc].map_or(0, |p| chosen[p] + 1);
        for (idx, path) in candidates.iter().enumerate().skip(floor) {
            if path.iter().any(|&a| used[a]) {
                continue;
            }
            for &a in path {
                used[a] = true;
            }
            chosen.push(idx);
            if let Some(mut rest) = self.route(map, t_arc + 1, used, chosen) {
                rest.insert(0, path.clone());
                return Some(rest);
            }
            chosen.pop();
            for &a in path {
                used[a] = false;
            }
        }
        None
    }
}

/// Search for an immersion of `target` in `host` by backtracking over branch
/// maps and arc-disjoint path systems.
pub fn immerses(host: &Digraph, target: &Digraph) -> Result<Option<ImmersionCertificate>> {
    if target.vertex_count() > MAX_TARGET_VERTICES || target.arc_count() > MAX_TARGET_ARCS {
        return Err(Error::TargetTooLarge {
            vertices: target.vertex_count(),
            arcs: target.arc_count(),
        });
    }
    if target.vertex_count() > host.vertex_count() || target.arc_count() > host.arc_count() {
        return Ok(None);
    }
    let host_deg = host.degree_report();
    let target_deg = target.degree_report();
    let parallel_to = (0..target.arc_count())
        .map(|i| (0..i).rev().find(|&j| target.arc(j) == target.arc(i)))
        .collect();
    let mut search = Search {
        host,
        target,
        paths: HashMap::new(),
        parallel_to,
    };
    for map in branch_maps(target.vertex_count(), host.vertex_count()) {
        let fits = map.iter().enumerate().all(|(t, &b)| {
            host_deg.outdegree[b] >= target_deg.outdegree[t]
                && host_deg.indegree[b] >= target_deg.indegree[t]
        });
        if !fits {
            continue;
        }
        let mut used = vec![false; host.arc_count()];
        if let Some(paths) = search.route(&map, 0, &mut used, &mut Vec::new()) {
            return Ok(Some(ImmersionCertificate {
                branch_map: map,
                paths,
            }));
        }
    }
    Ok(None)
}

/// The planarity obstruction for 2-regular digraphs: the directed triangle
/// with every arc doubled.
pub fn obstruction() -> Digraph {
    doubled_cycle(3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarityVerdict {
    Planar(RotationSystem),
    Obstruction(ImmersionCertificate),
}

/// A spherical rotation system, built from peripheral cycles on strongly
/// 2-edge-connected pieces and spliced across 2-edge-cuts.
pub fn spherical_embedding(h: &Digraph) -> Result<Option<RotationSystem>> {
    h.require_2regular()?;
    h.require_connected()?;
    let Some(cut) = connectivity::minimal_one_out_set(h)? else {
        return Ok(peripheral_embedder(h)?.map(|(rotation, _)| rotation));
    };
    let pair = contract_at_cut(h, &cut)?;
    let Some(inner) = spherical_embedding(&pair.inner)? else {
        return Ok(None);
    };
    let Some(outer) = spherical_embedding(&pair.outer)? else {
        return Ok(None);
    };
    let rotation = splice_rotations(h, &pair, &inner, &outer)?;
    let genus = embedding::euler_genus(h, &rotation)?;
    if genus != 0 {
        return Err(Error::Internal(format!(
            "splicing spherical pieces at {:?} gave genus {genus}",
            cut.side
        )));
    }
    Ok(Some(rotation))
}

/// Either a spherical embedding or an immersion of the doubled triangle.
///
/// Both searches always run; exactly one of them must succeed.
pub fn planar_or_obstruction(h: &Digraph) -> Result<PlanarityVerdict> {
    let embedding = spherical_embedding(h)?;
    let target = obstruction();
    let certificate = immerses(h, &target)?;
    if let Some(cert) = &certificate {
        verify_certificate(h, &target, cert).map_err(Error::Internal)?;
    }
    match (embedding, certificate) {
        (Some(rotation), None) => Ok(PlanarityVerdict::Planar(rotation)),
        (None, Some(cert)) => Ok(PlanarityVerdict::Obstruction(cert)),
        (Some(_), Some(_)) => Err(Error::Internal(
            "found both a spherical embedding and a doubled-triangle immersion".into(),
        )),
        (None, None) => Err(Error::Internal(
            "found neither a spherical embedding nor a doubled-triangle immersion".into(),
        )),
    }
}
