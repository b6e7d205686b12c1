//! Named fixtures and seeded random Eulerian digraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity;
use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};

pub const FIXTURE_NAMES: [&str; 5] = ["D2", "C3x2", "C4x2", "LOOPLINK", "BOUQUET"];

/// Named fixture digraphs.
///
/// | name       | vertices | arcs (id: tail->head)                          |
/// |------------|----------|-------------------------------------------------|
/// | `D2`       | 2        | 0:0->1 1:1->0 2:0->1 3:1->0                      |
/// | `C3x2`     | 3        | 2i and 2i+1: i->i+1 (mod 3)                      |
/// | `C4x2`     | 4        | 2i and 2i+1: i->i+1 (mod 4)                      |
/// | `LOOPLINK` | 2        | 0:0->0 1:0->1 2:1->1 3:1->0                      |
/// | `BOUQUET`  | 1        | 0:0->0 1:0->0                                    |
pub fn fixture(name: &str) -> Result<Digraph> {
    let h = match name {
        "D2" => Digraph::from_pairs(2, &[(0, 1), (1, 0), (0, 1), (1, 0)]),
        "C3x2" => doubled_cycle(3),
        "C4x2" => doubled_cycle(4),
        "LOOPLINK" => Digraph::from_pairs(2, &[(0, 0), (0, 1), (1, 1), (1, 0)]),
        "BOUQUET" => Digraph::from_pairs(1, &[(0, 0), (0, 0)]),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Ok(h)
}

/// Directed `n`-cycle with every arc doubled; arcs `2i` and `2i+1` run from
/// `i` to `i+1 mod n`.
pub fn doubled_cycle(n: usize) -> Digraph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| [(i, (i + 1) % n), (i, (i + 1) % n)])
        .collect();
    Digraph::from_pairs(n, &pairs)
}

/// Parameters for random connected Eulerian digraphs.
///
/// The digraph is a union of `max_half_degree` permutation layers: the first
/// `min_half_degree` layers permute every vertex, the remaining ones permute a
/// random subset. Each layer adds one in-arc and one out-arc to each vertex it
/// touches, so every vertex ends up balanced.
#[derive(Clone, Copy, Debug)]
pub struct RandomEulerian {
    pub vertices: usize,
    pub min_half_degree: usize,
    pub max_half_degree: usize,
    pub allow_loops: bool,
}

impl RandomEulerian {
    pub fn new(vertices: usize, max_half_degree: usize) -> Self {
        RandomEulerian {
            vertices,
            min_half_degree: 1,
            max_half_degree,
            allow_loops: true,
        }
    }

    /// Every vertex gets exactly `half_degree` in-arcs and out-arcs.
    pub fn regular(vertices: usize, half_degree: usize) -> Self {
        RandomEulerian {
            vertices,
            min_half_degree: half_degree,
            max_half_degree: half_degree,
            allow_loops: true,
        }
    }

    pub fn loopless(mut self) -> Self {
        self.allow_loops = false;
        self
    }

    pub fn min_half_degree(mut self, d: usize) -> Self {
        self.min_half_degree = d;
        self
    }

    /// Draw a digraph; deterministic in `seed`. Retries until connected.
    pub fn generate(&self, seed: u64) -> Digraph {
        assert!(self.vertices >= 1, "need at least one vertex");
        assert!(self.max_half_degree >= 1, "need half-degree at least one");
        assert!(self.min_half_degree >= 1 && self.min_half_degree <= self.max_half_degree);
        assert!(
            self.allow_loops || self.vertices >= 2,
            "a loopless digraph on one vertex has no arcs"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let arcs = self.draw(&mut rng);
            if connectivity::weak_components_of(self.vertices, &arcs, None).len() == 1 {
                return Digraph::new(self.vertices, arcs).expect("endpoints are in range");
            }
        }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> Vec<Arc> {
        let mut arcs = Vec::new();
        for layer in 0..self.max_half_degree {
            let support: Vec<usize> = if layer < self.min_half_degree {
                (0..self.vertices).collect()
            } else {
                (0..self.vertices).filter(|_| rng.gen_bool(0.5)).collect()
            };
            if support.is_empty() || (!self.allow_loops && support.len() < 2) {
                continue;
            }
            let image = loop {
                let mut image = support.clone();
                image.shuffle(rng);
                if self.allow_loops || support.iter().zip(&image).all(|(a, b)| a != b) {
                    break image;
                }
            };
            arcs.extend(support.iter().zip(&image).map(|(&t, &h)| Arc::new(t, h)));
        }
        arcs
    }
}

/// Connected Eulerian digraph on `n` vertices with every half-degree at most
/// `d`, deterministic in `seed`.
pub fn generate_random_eulerian(n: usize, d: usize, seed: u64) -> Digraph {
    RandomEulerian::new(n, d).generate(seed)
}

/// Connected 2-regular digraph on `n` vertices (loops and parallel arcs allowed).
pub fn generate_random_two_regular(n: usize, seed: u64) -> Digraph {
    RandomEulerian::regular(n, 2).generate(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_match_table() {
        let c3 = fixture("C3x2").unwrap();
        assert_eq!(c3.vertex_count(), 3);
        assert_eq!(c3.arc_count(), 6);
        assert_eq!(c3.arc(4), Arc::new(2, 0));
        let ll = fixture("LOOPLINK").unwrap();
        assert_eq!(
            ll,
            Digraph::from_pairs(2, &[(0, 0), (0, 1), (1, 1), (1, 0)])
        );
        let d2 = fixture("D2").unwrap();
        assert_eq!((d2.vertex_count(), d2.arc_count()), (2, 4));
        for name in FIXTURE_NAMES {
            assert!(fixture(name).unwrap().is_2regular(), "{name}");
        }
        assert_eq!(fixture("K5"), Err(Error::UnknownFixture("K5".into())));
    }

    #[test]
    fn single_vertex_is_one_loop() {
        for seed in 0..5 {
            assert_eq!(
                generate_random_eulerian(1, 1, seed),
                Digraph::from_pairs(1, &[(0, 0)])
            );
        }
    }

    #[test]
    fn random_eulerian_contract() {
        let h = generate_random_eulerian(4, 2, 7);
        let report = h.degree_report();
        assert!(report.is_eulerian && report.is_connected);
        assert!(report.outdegree.iter().all(|&d| (1..=2).contains(&d)));
        assert_eq!(h, generate_random_eulerian(4, 2, 7));
    }

    #[test]
    fn loopless_and_regular_options() {
        for seed in 0..50 {
            let h = RandomEulerian::regular(5, 2).loopless().generate(seed);
            assert!(h.is_2regular());
            assert!(!h.has_loops());
            let g = RandomEulerian::new(7, 3).min_half_degree(2).generate(seed);
            let r = g.degree_report();
            assert!(r.is_eulerian && r.is_connected);
            assert!(r.indegree.iter().all(|&d| (2..=3).contains(&d)));
        }
    }
}
