use super::rotation::Darts;
use super::RotationSystem;
use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

/// Outcome of an exact decision "is the genus at most `target`?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// A rotation of genus at most the target.
    Found(RotationSystem),
    /// No rotation of genus at most the target exists.
    Refuted { nodes: u64 },
    /// The node budget ran out.
    Aborted { nodes: u64 },
}

struct State<'a> {
    d: &'a Darts,
    /// Length of the input path behind each dart.
    len: Vec<usize>,
    /// Total length of unused darts.
    slack: usize,
    /// Weighted distances between vertices.
    dist: Vec<Vec<usize>>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    assigned: Vec<usize>,
    used: Vec<bool>,
    unused: usize,
    closed: usize,
    target_faces: usize,
    gamma: usize,
    nodes: u64,
    budget: u64,
    found: Option<RotationSystem>,
    /// Vertex whose rotation must list its first three darts in increasing
    /// cyclic order; this discards mirror images.
    anchor: Option<usize>,
    /// Directed triangles `a -> b -> c -> a` of unit edges, as dart triples;
    /// only filled when the girth is 3.
    triangles: Vec<[usize; 3]>,
    scratch: Vec<u32>,
}

/// `Err(())` signals budget exhaustion.
type Step = Result<bool, ()>;

impl State<'_> {
    /// Extends the open face that started at `d0` and currently ends with
    /// `cur`, of total length `w`.
    fn run(&mut self, d0: usize, cur: usize, w: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let back = self.dist[self.d.head[cur]][self.d.tail[d0]];
        let need = self.gamma.saturating_sub(w).max(back);
        if self.slack < need {
            return Ok(false);
        }
        if self.closed + 1 + (self.slack - need) / self.gamma < self.target_faces {
            return Ok(false);
        }
        if !self.triangles.is_empty() {
            // beyond the triangles that can still become faces, every face
            // has length at least 4
            let rest = self.slack - need;
            let open = self.triangle_packing_bound().min(rest / 3);
            if self.closed + 1 + open + (rest - 3 * open) / 4 < self.target_faces {
                return Ok(false);
            }
        }
        let r = self.d.rev[cur];
        if self.succ[r] != NONE {
            let e = self.succ[r];
            return self.advance(d0, e, w);
        }
        let v = self.d.head[cur];
        let deg = self.d.degree(v);
        let mut cands: Vec<usize> = Vec::with_capacity(deg);
        for e in self.d.out(v) {
            if self.pred[e] != NONE || (e == r && deg > 1) {
                continue;
            }
            if self.closes_early(v, r, e) {
                continue;
            }
            cands.push(e);
        }
        // closing the face first, then darts that could close it next
        let start = self.d.tail[d0];
        cands.sort_by_key(|&e| (e != d0, self.d.head[e] != start, e));
        for e in cands {
            self.succ[r] = e;
            self.pred[e] = r;
            self.assigned[v] += 1;
            if Some(v) == self.anchor && self.assigned[v] == deg && !self.anchor_ok(v) {
                self.assigned[v] -= 1;
                self.pred[e] = NONE;
                self.succ[r] = NONE;
                continue;
            }
            let res = self.advance(d0, e, w);
            self.assigned[v] -= 1;
            self.pred[e] = NONE;
            self.succ[r] = NONE;
            if res != Ok(false) {
                return res;
            }
        }
        Ok(false)
    }

    /// Upper bound on how many dart-disjoint triangles can still become
    /// faces: the size of a greedy set of darts meeting every open triangle.
    fn triangle_packing_bound(&mut self) -> usize {
        let mut open: Vec<[usize; 3]> = self
            .triangles
            .iter()
            .copied()
            .filter(|t| self.triangle_open(t))
            .collect();
        let mut hits = 0;
        while !open.is_empty() {
            for t in &open {
                for &d in t {
                    self.scratch[d] += 1;
                }
            }
            let best = open
                .iter()
                .flatten()
                .copied()
                .max_by_key(|&d| (self.scratch[d], std::cmp::Reverse(d)))
                .unwrap();
            for t in &open {
                for &d in t {
                    self.scratch[d] = 0;
                }
            }
            open.retain(|t| !t.contains(&best));
            hits += 1;
        }
        hits
    }

    /// Whether the directed triangle `t` can still be traced as a face.
    fn triangle_open(&self, t: &[usize; 3]) -> bool {
        (0..3).all(|k| {
            let (d, next) = (t[k], t[(k + 1) % 3]);
            let r = self.d.rev[d];
            !self.used[d]
                && (self.succ[r] == NONE || self.succ[r] == next)
                && (self.pred[next] == NONE || self.pred[next] == r)
        })
    }

    fn anchor_ok(&self, v: usize) -> bool {
        let x = self.d.off[v];
        let mut cur = self.succ[x];
        while cur != x + 1 && cur != x + 2 {
            cur = self.succ[cur];
        }
        cur == x + 1
    }

    /// Whether `succ[r] = e` would close a cycle of the rotation at `v`
    /// before all its darts are placed.
    fn closes_early(&self, v: usize, r: usize, e: usize) -> bool {
        let mut x = e;
        loop {
            if x == r {
                return self.assigned[v] + 1 != self.d.degree(v);
            }
            x = self.succ[x];
            if x == NONE {
                return false;
            }
        }
    }

    fn advance(&mut self, d0: usize, e: usize, w: usize) -> Step {
        if e == d0 {
            self.closed += 1;
            let res = if self.unused == 0 {
                let done = self.closed >= self.target_faces;
                if done {
                    self.found = Some(self.rotation());
                }
                Ok(done)
            } else {
                let s = self.next_start();
                self.used[s] = true;
                self.unused -= 1;
                self.slack -= self.len[s];
                let res = self.run(s, s, self.len[s]);
                self.slack += self.len[s];
                self.unused += 1;
                self.used[s] = false;
                res
            };
            self.closed -= 1;
            return res;
        }
        debug_assert!(!self.used[e]);
        self.used[e] = true;
        self.unused -= 1;
        self.slack -= self.len[e];
        let res = self.run(d0, e, w + self.len[e]);
        self.slack += self.len[e];
        self.unused += 1;
        self.used[e] = false;
        res
    }

    /// Unused dart whose head has the most decided successors.
    fn next_start(&self) -> usize {
        (0..self.d.len())
            .filter(|&x| !self.used[x])
            .min_by_key(|&x| {
                let h = self.d.head[x];
                let free = if self.succ[self.d.rev[x]] != NONE {
                    0
                } else {
                    self.d.degree(h) - self.assigned[h]
                };
                (free, x)
            })
            .expect("an unused dart")
    }

    fn rotation(&self) -> RotationSystem {
        let n = self.d.nbrs.len();
        let lists = (0..n)
            .map(|v| {
                let mut list = Vec::with_capacity(self.d.degree(v));
                if self.d.degree(v) > 0 {
                    let first = self.d.off[v];
                    let mut x = first;
                    loop {
                        list.push(self.d.head[x]);
                        x = self.succ[x];
                        if x == first {
                            break;
                        }
                    }
                }
                list
            })
            .collect();
        RotationSystem::new(lists)
    }
}

/// Decides whether the connected graph `g` embeds with genus at most
/// `target`, using at most `budget` branch nodes.
///
/// Faces are built one at a time; each step either follows an already
/// decided rotation successor or branches on it. A partial assignment is
/// cut when even closing every remaining face at minimum length (the girth,
/// when the minimum degree is at least 2) cannot reach the face count the
/// target genus requires.
pub fn decide_genus(g: &SimpleGraph, target: u32, budget: u64) -> Decision {
    decide_genus_weighted(g, target, budget, |_, _| 1)
}

/// [`decide_genus`] for a graph whose edge `uv` stands for a path of
/// `length(u, v) ≥ 1` edges. Lengths only sharpen the pruning: face lengths
/// and the girth are measured in the subdivided graph, which has the same
/// genus.
pub fn decide_genus_weighted(
    g: &SimpleGraph,
    target: u32,
    budget: u64,
    length: impl Fn(usize, usize) -> usize,
) -> Decision {
    assert!(g.is_connected(), "decide_genus needs a connected graph");
    let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
    if e == 0 {
        return Decision::Found(RotationSystem::new(vec![Vec::new(); v as usize]));
    }
    let needed = 2 - 2 * i64::from(target) - v + e;
    let darts = Darts::new(g);
    let len: Vec<usize> = (0..darts.len())
        .map(|d| length(darts.tail[d], darts.head[d]).max(1))
        .collect();
    let gamma = if g.min_degree() >= 2 {
        weighted_girth(g, &length).unwrap_or(1)
    } else {
        1
    };
    let dist = distances(g, &length);
    let mut st = State {
        d: &darts,
        dist,
        slack: len.iter().sum(),
        len,
        succ: vec![NONE; darts.len()],
        pred: vec![NONE; darts.len()],
        assigned: vec![0; g.vertex_count()],
        used: vec![false; darts.len()],
        unused: darts.len() - 1,
        closed: 0,
        target_faces: needed.max(1) as usize,
        gamma,
        nodes: 0,
        budget,
        found: None,
        anchor: None,
        triangles: Vec::new(),
        scratch: vec![0; darts.len()],
    };
    if gamma == 3 {
        for a in 0..g.vertex_count() {
            for b in g.neighbors(a) {
                for c in g.neighbors(b) {
                    if c != a && g.has_edge(c, a) && [(a, b), (b, c), (c, a)].iter().all(|&(x, y)| length(x, y) <= 1) {
                        st.triangles
                            .push([darts.dart(a, b), darts.dart(b, c), darts.dart(c, a)]);
                    }
                }
            }
        }
    }
    let s = st.next_start();
    st.anchor = Some(darts.head[s]).filter(|&h| darts.degree(h) >= 3);
    st.used[s] = true;
    st.slack -= st.len[s];
    let w = st.len[s];
    match st.run(s, s, w) {
        Ok(true) => Decision::Found(st.found.take().expect("rotation recorded on success")),
        Ok(false) => Decision::Refuted { nodes: st.nodes },
        Err(()) => Decision::Aborted { nodes: st.nodes },
    }
}

/// All-pairs shortest path lengths (Floyd–Warshall; graphs here are small).
fn distances(g: &SimpleGraph, length: &impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for w in g.neighbors(u) {
            row[w] = length(u, w).max(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Shortest cycle length when edge `uv` has length `length(u, v)`.
pub(crate) fn weighted_girth(g: &SimpleGraph, length: &impl Fn(usize, usize) -> usize) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for (a, b) in g.edges() {
        // shortest a-b path avoiding the edge ab
        let mut dist = vec![usize::MAX; n];
        let mut done = vec![false; n];
        dist[a] = 0;
        loop {
            let Some(u) = (0..n)
                .filter(|&u| !done[u] && dist[u] != usize::MAX)
                .min_by_key(|&u| dist[u])
            else {
                break;
            };
            if u == b {
                break;
            }
            done[u] = true;
            for w in g.neighbors(u) {
                if (u, w) == (a, b) {
                    continue;
                }
                let dw = dist[u] + length(u, w).max(1);
                if dw < dist[w] {
                    dist[w] = dw;
                }
            }
        }
        if dist[b] != usize::MAX {
            let c = dist[b] + length(a, b).max(1);
            best = Some(best.map_or(c, |x| x.min(c)));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::{embedding_genus, genus_complete, genus_complete_bipartite};

    fn min_genus(g: &SimpleGraph) -> u32 {
        for t in 0.. {
            match decide_genus(g, t, u64::MAX) {
                Decision::Found(rot) => {
                    assert!(embedding_genus(g, &rot).unwrap() <= t);
                    return t;
                }
                Decision::Refuted { .. } => continue,
                Decision::Aborted { .. } => unreachable!(),
            }
        }
        unreachable!()
    }

    #[test]
    fn complete_graphs() {
        for n in 3..=6 {
            assert_eq!(min_genus(&SimpleGraph::complete(n)), genus_complete(n as u32), "K{n}");
        }
    }

    #[test]
    fn complete_bipartite_graphs() {
        for (m, n) in [(2, 5), (3, 3), (3, 4), (3, 5), (4, 4)] {
            assert_eq!(
                min_genus(&SimpleGraph::complete_bipartite(m, n)),
                genus_complete_bipartite(m as u32, n as u32),
                "K{m},{n}"
            );
        }
    }

    #[test]
    fn petersen_is_toroidal() {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(min_genus(&SimpleGraph::from_edges(10, &e).unwrap()), 1);
    }

    #[test]
    fn weighted_girths() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(weighted_girth(&k4, &|_, _| 1), Some(3));
        let long = |u: usize, v: usize| if (u.min(v), u.max(v)) == (0, 1) { 5 } else { 1 };
        assert_eq!(weighted_girth(&k4, &long), Some(3));
        let c = SimpleGraph::cycle(4);
        assert_eq!(weighted_girth(&c, &long), Some(8));
        assert_eq!(weighted_girth(&SimpleGraph::path(3), &|_, _| 1), None);
    }

    #[test]
    fn weights_keep_answers() {
        // K3,3 with one edge standing for a path of length 3 is still toroidal
        let g = SimpleGraph::complete_bipartite(3, 3);
        let long = |u: usize, v: usize| if (u.min(v), u.max(v)) == (0, 3) { 3 } else { 1 };
        assert!(matches!(
            decide_genus_weighted(&g, 0, u64::MAX, long),
            Decision::Refuted { .. }
        ));
        assert!(matches!(
            decide_genus_weighted(&g, 1, u64::MAX, long),
            Decision::Found(_)
        ));
    }

    #[test]
    fn budget_aborts() {
        let g = SimpleGraph::complete_bipartite(4, 4);
        assert!(matches!(decide_genus(&g, 1, 5), Decision::Aborted { .. }));
    }
}
