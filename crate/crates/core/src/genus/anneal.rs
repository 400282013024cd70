use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::rotation::Darts;
use super::{verify_certificate, EmbeddingCertificate, RotationSystem};
use crate::graph::SimpleGraph;

const T_START: f64 = 1.5;
const T_END: f64 = 0.05;

fn restart_seed(seed: u64, restart: u32) -> u64 {
    seed ^ u64::from(restart).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// One annealing run; returns (faces, rotation) of the best state seen.
fn anneal_once(g: &SimpleGraph, darts: &Darts, steps: u64, seed: u64) -> (usize, Vec<Vec<usize>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.vertex_count();
    let mut rot: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    for list in &mut rot {
        list.shuffle(&mut rng);
    }
    let movable: Vec<usize> = (0..n).filter(|&v| rot[v].len() >= 3).collect();
    let mut seen = Vec::new();
    let mut faces = darts.face_count(&darts.sigma(&rot), &mut seen);
    let mut best = (faces, rot.clone());
    if movable.is_empty() {
        return best;
    }
    let mut sigma = darts.sigma(&rot);
    for step in 0..steps {
        let t = T_START * (T_END / T_START).powf(step as f64 / steps as f64);
        let v = movable[rng.random_range(0..movable.len())];
        let deg = rot[v].len();
        let i = rng.random_range(0..deg);
        let mut j = rng.random_range(0..deg - 1);
        if j >= i {
            j += 1;
        }
        let x = rot[v].remove(i);
        rot[v].insert(j, x);
        refresh_sigma(darts, &rot[v], v, &mut sigma);
        let next = darts.face_count(&sigma, &mut seen);
        let delta = next as f64 - faces as f64;
        if delta >= 0.0 || rng.random::<f64>() < (delta / t).exp() {
            faces = next;
            if faces > best.0 {
                best = (faces, rot.clone());
            }
        } else {
            let x = rot[v].remove(j);
            rot[v].insert(i, x);
            refresh_sigma(darts, &rot[v], v, &mut sigma);
        }
    }
    best
}

fn refresh_sigma(darts: &Darts, list: &[usize], v: usize, sigma: &mut [usize]) {
    for (k, &w) in list.iter().enumerate() {
        sigma[darts.dart(v, w)] = darts.dart(v, list[(k + 1) % list.len()]);
    }
}

/// Best embedding found by simulated annealing over rotation systems.
///
/// A move relocates one neighbour inside one vertex's cyclic order; the
/// objective is the face count. Restarts run in parallel and are merged by
/// (genus, rotation) order, so the result depends only on the arguments.
/// The certificate is re-verified before it is returned. `None` for
/// disconnected graphs.
pub fn heuristic_upper(g: &SimpleGraph, restarts: u32, steps: u64, seed: u64) -> Option<EmbeddingCertificate> {
    if !g.is_connected() {
        return None;
    }
    let darts = Darts::new(g);
    let runs: Vec<(usize, Vec<Vec<usize>>)> = (0..restarts.max(1))
        .into_par_iter()
        .map(|r| anneal_once(g, &darts, steps, restart_seed(seed, r)))
        .collect();
    let (_, rot) = runs
        .into_iter()
        .min_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)))
        .expect("at least one restart");
    let cert = EmbeddingCertificate::new(g, RotationSystem::new(rot)).ok()?;
    verify_certificate(g, &cert).ok()?.then_some(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_known_embeddings() {
        let k5 = SimpleGraph::complete(5);
        assert_eq!(heuristic_upper(&k5, 2, 5_000, 7).unwrap().genus, 1);
        let k4 = SimpleGraph::complete(4);
        assert_eq!(heuristic_upper(&k4, 2, 2_000, 7).unwrap().genus, 0);
        let k37 = SimpleGraph::complete_bipartite(3, 7);
        assert_eq!(heuristic_upper(&k37, 4, 50_000, 7).unwrap().genus, 2);
    }

    #[test]
    fn deterministic() {
        let g = SimpleGraph::complete(6);
        let a = heuristic_upper(&g, 3, 3_000, 42).unwrap();
        let b = heuristic_upper(&g, 3, 3_000, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn disconnected_is_none() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(heuristic_upper(&g, 1, 10, 0).is_none());
    }
}
