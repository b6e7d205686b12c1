//! Brute-force oracles shared by the integration tests. None of these call the
//! library routine they are used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use diflip::generate::{fixture, RandomEulerian, FIXTURE_NAMES};
use diflip::{ArcEnd, Digraph, RotationSystem};

/// Reachability closure by repeated relaxation over the arcs not in `removed`.
pub fn reach(h: &Digraph, removed: &BTreeSet<usize>) -> Vec<Vec<bool>> {
    let n = h.vertex_count();
    let mut r = vec![vec![false; n]; n];
    for (v, row) in r.iter_mut().enumerate() {
        row[v] = true;
    }
    loop {
        let mut changed = false;
        for (id, arc) in h.arcs().iter().enumerate() {
            if removed.contains(&id) {
                continue;
            }
            for row in r.iter_mut() {
                if row[arc.tail] && !row[arc.head] {
                    row[arc.head] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return r;
        }
    }
}

pub fn strongly_connected_oracle(h: &Digraph, removed: &BTreeSet<usize>) -> bool {
    reach(h, removed).iter().all(|row| row.iter().all(|&b| b))
}

/// Underlying-graph connectivity by flood fill.
pub fn connected_oracle(h: &Digraph, removed: &BTreeSet<usize>) -> bool {
    let n = h.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    loop {
        let mut changed = false;
        for (id, arc) in h.arcs().iter().enumerate() {
            if removed.contains(&id) {
                continue;
            }
            if seen[arc.tail] != seen[arc.head] {
                seen[arc.tail] = true;
                seen[arc.head] = true;
                changed = true;
            }
        }
        if !changed {
            return seen.iter().all(|&s| s);
        }
    }
}

/// Unordered arc pairs whose removal disconnects the underlying graph.
pub fn two_cut_pairs_oracle(h: &Digraph) -> Vec<(usize, usize)> {
    let m = h.arc_count();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if !connected_oracle(h, &BTreeSet::from([a, b])) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Smallest vertex set with exactly one arc leaving, ties by sorted list,
/// by enumerating every proper nonempty subset.
pub fn minimal_one_out_oracle(h: &Digraph) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u64..(1 << n) - 1 {
        let side: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let out = h
            .arcs()
            .iter()
            .filter(|a| mask >> a.tail & 1 == 1 && mask >> a.head & 1 == 0)
            .count();
        if out != 1 {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => (side.len(), &side) < (b.len(), b),
        };
        if better {
            best = Some(side);
        }
    }
    best
}

/// Face count of a rotation system as the number of cycles of the
/// permutation "opposite end, then rotation successor" on arc ends, computed
/// on plain index arrays.
pub fn face_count_oracle(h: &Digraph, rotation: &RotationSystem) -> usize {
    let ends = 2 * h.arc_count();
    let mut succ = vec![usize::MAX; ends];
    for cycle in rotation.orders() {
        for i in 0..cycle.len() {
            succ[cycle[i].index()] = cycle[(i + 1) % cycle.len()].index();
        }
    }
    let mut seen = vec![false; ends];
    let mut cycles = 0;
    for s in 0..ends {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = succ[x] ^ 1;
        }
    }
    cycles
}

/// Every vertex bijection `a -> b` checked against the arc multisets.
pub fn isomorphic_oracle(a: &Digraph, b: &Digraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count() {
        return false;
    }
    let n = a.vertex_count();
    let mut target: Vec<(usize, usize)> = b.arcs().iter().map(|x| (x.tail, x.head)).collect();
    target.sort();
    permutations(n).into_iter().any(|p| {
        let mut mapped: Vec<(usize, usize)> =
            a.arcs().iter().map(|x| (p[x.tail], p[x.head])).collect();
        mapped.sort();
        mapped == target
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Simple directed cycles as arc lists, found by checking every arc subset
/// that forms one closed walk through distinct vertices. Only for tiny digraphs.
pub fn cycles_oracle(h: &Digraph) -> BTreeSet<BTreeSet<usize>> {
    let m = h.arc_count();
    assert!(m <= 16);
    let mut out = BTreeSet::new();
    for mask in 1u32..1 << m {
        let arcs: Vec<usize> = (0..m).filter(|a| mask >> a & 1 == 1).collect();
        let mut outdeg = vec![0; h.vertex_count()];
        let mut indeg = vec![0; h.vertex_count()];
        for &a in &arcs {
            outdeg[h.arc(a).tail] += 1;
            indeg[h.arc(a).head] += 1;
        }
        if outdeg.iter().zip(&indeg).any(|(&o, &i)| o > 1 || o != i) {
            continue;
        }
        // a 1-in 1-out arc set is a union of cycles; keep it if it is one
        let start = h.arc(arcs[0]).tail;
        let mut at = start;
        let mut steps = 0;
        loop {
            let a = *arcs.iter().find(|&&a| h.arc(a).tail == at).unwrap();
            at = h.arc(a).head;
            steps += 1;
            if at == start {
                break;
            }
        }
        if steps == arcs.len() {
            out.insert(arcs.into_iter().collect());
        }
    }
    out
}

pub fn ends_of(tokens: &[&str]) -> Vec<ArcEnd> {
    tokens
        .iter()
        .map(|t| {
            let (num, side) = t.split_at(t.len() - 1);
            let arc = num.parse().unwrap();
            if side == "h" {
                ArcEnd::head(arc)
            } else {
                ArcEnd::tail(arc)
            }
        })
        .collect()
}

pub fn fixtures() -> Vec<(String, Digraph)> {
    FIXTURE_NAMES
        .iter()
        .map(|n| (n.to_string(), fixture(n).unwrap()))
        .collect()
}

/// Fixtures plus `count` random connected 2-regular digraphs with
/// `1..=max_vertices` vertices.
pub fn two_regular_corpus(max_vertices: usize, count: usize, seed: u64) -> Vec<(String, Digraph)> {
    let mut out = fixtures();
    for i in 0..count as u64 {
        let n = 1 + (i as usize % max_vertices);
        let h = RandomEulerian::regular(n, 2).generate(seed * 1_000_003 + i);
        out.push((format!("random-{n}-{i}"), h));
    }
    out
}

/// Faces as orbits of the end permutation, each written as its cyclic arc
/// sequence normalised over rotations and reversal, then sorted.
pub fn faces_oracle(h: &Digraph, rotation: &RotationSystem) -> Vec<Vec<usize>> {
    let ends = 2 * h.arc_count();
    let mut succ = vec![usize::MAX; ends];
    for cycle in rotation.orders() {
        for i in 0..cycle.len() {
            succ[cycle[i].index()] = cycle[(i + 1) % cycle.len()].index();
        }
    }
    let mut seen = vec![false; ends];
    let mut faces = Vec::new();
    for s in 0..ends {
        if seen[s] {
            continue;
        }
        let mut arcs = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            arcs.push(x / 2);
            x = succ[x] ^ 1;
        }
        faces.push(normalise_cyclic(&arcs));
    }
    faces.sort();
    faces
}

fn normalise_cyclic(seq: &[usize]) -> Vec<usize> {
    let mut reversed = seq.to_vec();
    reversed.reverse();
    let mut best = seq.to_vec();
    for s in [seq.to_vec(), reversed] {
        for i in 0..s.len() {
            let rotated: Vec<usize> = s[i..].iter().chain(&s[..i]).copied().collect();
            best = best.min(rotated);
        }
    }
    best
}

/// Genus from the oracle face count, `None` if the Euler count is not a
/// non-negative even number.
pub fn genus_oracle(h: &Digraph, rotation: &RotationSystem) -> Option<usize> {
    let f = face_count_oracle(h, rotation) as i64;
    let chi = h.vertex_count() as i64 - h.arc_count() as i64 + f;
    let twice = 2 - chi;
    (twice >= 0 && twice % 2 == 0).then_some(twice as usize / 2)
}

pub fn all_rotations(h: &Digraph) -> Vec<RotationSystem> {
    (0..1u64 << h.vertex_count())
        .map(|mask| RotationSystem::from_mask(h, mask).unwrap())
        .collect()
}

/// Branch map injective, each path a directed walk between the right branch
/// vertices, no host arc used twice overall.
pub fn immersion_oracle(
    host: &Digraph,
    target: &Digraph,
    branch: &[usize],
    paths: &[Vec<usize>],
) -> bool {
    if branch.len() != target.vertex_count() || paths.len() != target.arc_count() {
        return false;
    }
    if branch.iter().collect::<BTreeSet<_>>().len() != branch.len()
        || branch.iter().any(|&b| b >= host.vertex_count())
    {
        return false;
    }
    let mut used = BTreeSet::new();
    for (t, path) in paths.iter().enumerate() {
        let arc = target.arc(t);
        let mut at = branch[arc.tail];
        if path.is_empty() {
            return false;
        }
        for &a in path {
            if a >= host.arc_count() || !used.insert(a) || host.arc(a).tail != at {
                return false;
            }
            at = host.arc(a).head;
        }
        if at != branch[arc.head] {
            return false;
        }
    }
    true
}

/// Strongly 2-edge-connected: strongly connected after deleting any one arc.
pub fn strongly_2ec_oracle(h: &Digraph) -> bool {
    strongly_connected_oracle(h, &BTreeSet::new())
        && (0..h.arc_count()).all(|a| strongly_connected_oracle(h, &BTreeSet::from([a])))
}

pub fn doubled_triangle() -> Digraph {
    Digraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)])
}
