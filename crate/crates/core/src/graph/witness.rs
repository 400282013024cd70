use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{is_complete_bipartite, GraphError, SimpleGraph};

/// Target graph of a subdivision witness: `K_{m,n}` or `K_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Pattern {
    Biclique(usize, usize),
    Clique(usize),
}

impl Pattern {
    pub fn vertex_count(self) -> usize {
        match self {
            Pattern::Biclique(m, n) => m + n,
            Pattern::Clique(k) => k,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            Pattern::Biclique(m, n) => m * n,
            Pattern::Clique(k) => k * k.saturating_sub(1) / 2,
        }
    }

    /// Genus of the pattern graph.
    pub fn genus(self) -> u32 {
        match self {
            Pattern::Biclique(m, n) => crate::genus::genus_complete_bipartite(m as u32, n as u32),
            Pattern::Clique(k) => crate::genus::genus_complete(k as u32),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Biclique(m, n) => write!(f, "K{m},{n}"),
            Pattern::Clique(k) => write!(f, "K{k}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .trim()
            .strip_prefix('K')
            .ok_or_else(|| format!("bad pattern \"{s}\""))?;
        let body = body.trim_start_matches('_').trim_matches(|c| c == '{' || c == '}');
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad pattern \"{s}\""));
        match body.split_once(',') {
            Some((m, n)) => Ok(Pattern::Biclique(num(m)?, num(n)?)),
            None => Ok(Pattern::Clique(num(body)?)),
        }
    }
}

impl TryFrom<String> for Pattern {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Pattern> for String {
    fn from(p: Pattern) -> String {
        p.to_string()
    }
}

/// Branch vertices plus one path per pattern edge. Paths run between branch
/// vertices and are internally disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
    pub pattern: Pattern,
}

/// Checks that `w` exhibits a subdivision of its pattern inside `g`.
///
/// Malformed witnesses (unknown vertices, broken paths, reused internal
/// vertices, paths not ending at branch vertices) are errors; a well-formed
/// witness whose contraction is not the pattern gives `Ok(false)`.
pub fn verify_subdivision_witness(g: &SimpleGraph, w: &SubdivisionWitness) -> Result<bool, GraphError> {
    let bad = |why: String| Err(GraphError::InvalidWitness(why));
    let n = g.vertex_count();
    let mut role = vec![usize::MAX; n];
    for (i, &b) in w.branch.iter().enumerate() {
        if b >= n {
            return bad(format!("branch vertex {b} is out of range"));
        }
        if role[b] != usize::MAX {
            return bad(format!("branch vertex {b} is repeated"));
        }
        role[b] = i;
    }
    let mut internal_used = vec![false; n];
    let mut contracted = SimpleGraph::with_vertices(w.branch.len());
    let mut duplicate = false;
    for path in &w.paths {
        if path.len() < 2 {
            return bad("a path needs at least two vertices".into());
        }
        if let Some(&v) = path.iter().find(|&&v| v >= n) {
            return bad(format!("path vertex {v} is out of range"));
        }
        for pair in path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return bad(format!("broken path: {} and {} are not adjacent", pair[0], pair[1]));
            }
        }
        let (s, t) = (path[0], path[path.len() - 1]);
        if role[s] == usize::MAX || role[t] == usize::MAX {
            return bad(format!("path {path:?} does not join branch vertices"));
        }
        if s == t {
            return bad(format!("path {path:?} is closed"));
        }
        for &v in &path[1..path.len() - 1] {
            if role[v] != usize::MAX {
                return bad(format!("internal vertex {v} is a branch vertex"));
            }
            if internal_used[v] {
                return bad(format!("internal vertex {v} is used twice"));
            }
            internal_used[v] = true;
        }
        if contracted.has_edge(role[s], role[t]) {
            duplicate = true;
        } else {
            contracted.add_edge(role[s], role[t]).unwrap();
        }
    }
    if duplicate || w.branch.len() != w.pattern.vertex_count() || w.paths.len() != w.pattern.edge_count() {
        return Ok(false);
    }
    Ok(match w.pattern {
        Pattern::Clique(k) => contracted.edge_count() == k * k.saturating_sub(1) / 2,
        Pattern::Biclique(m, k) => is_complete_bipartite(&contracted) == Some((m.min(k), m.max(k))),
    })
}

struct SubdivSearch<'a> {
    g: &'a SimpleGraph,
    pool: Vec<usize>,
    m: usize,
    n: usize,
    nodes: u64,
    budget: u64,
}

impl SubdivSearch<'_> {
    fn tick(&mut self) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(())
        } else {
            Ok(())
        }
    }

    fn choose_left(&mut self, start: usize, left: &mut Vec<usize>) -> Result<Option<SubdivisionWitness>, ()> {
        self.tick()?;
        if left.len() == self.m {
            let rest: Vec<usize> = self.pool.iter().copied().filter(|v| !left.contains(v)).collect();
            let free_total = rest.len() - self.n;
            let mut right = Vec::new();
            return self.choose_right(left, &rest, 0, &mut right, 0, free_total);
        }
        for i in start..self.pool.len() {
            if self.pool.len() - i < self.m - left.len() {
                break;
            }
            if self.g.degree(self.pool[i]) < self.n {
                continue;
            }
            left.push(self.pool[i]);
            if let Some(w) = self.choose_left(i + 1, left)? {
                return Ok(Some(w));
            }
            left.pop();
        }
        Ok(None)
    }

    fn choose_right(
        &mut self,
        left: &[usize],
        rest: &[usize],
        start: usize,
        right: &mut Vec<usize>,
        deficit: usize,
        free_total: usize,
    ) -> Result<Option<SubdivisionWitness>, ()> {
        self.tick()?;
        if right.len() == self.n {
            if self.m == self.n && left[0] > right[0] {
                return Ok(None);
            }
            return self.route(left, right, rest);
        }
        for i in start..rest.len() {
            if rest.len() - i < self.n - right.len() {
                break;
            }
            let v = rest[i];
            if self.g.degree(v) < self.m {
                continue;
            }
            let miss = left.iter().filter(|&&a| !self.g.has_edge(a, v)).count();
            if deficit + miss > free_total {
                continue;
            }
            right.push(v);
            if let Some(w) = self.choose_right(left, rest, i + 1, right, deficit + miss, free_total)? {
                return Ok(Some(w));
            }
            right.pop();
        }
        Ok(None)
    }

    fn route(&mut self, left: &[usize], right: &[usize], rest: &[usize]) -> Result<Option<SubdivisionWitness>, ()> {
        let mut free = vec![false; self.g.vertex_count()];
        for &v in rest {
            if !right.contains(&v) {
                free[v] = true;
            }
        }
        let mut missing = Vec::new();
        let mut paths = Vec::new();
        for &a in left {
            for &b in right {
                if self.g.has_edge(a, b) {
                    paths.push(vec![a, b]);
                } else {
                    missing.push((a, b));
                }
            }
        }
        if self.link(&missing, 0, &mut free, &mut paths)? {
            let branch = left.iter().chain(right).copied().collect();
            return Ok(Some(SubdivisionWitness {
                branch,
                paths,
                pattern: Pattern::Biclique(self.m, self.n),
            }));
        }
        Ok(None)
    }

    fn link(
        &mut self,
        missing: &[(usize, usize)],
        k: usize,
        free: &mut [bool],
        paths: &mut Vec<Vec<usize>>,
    ) -> Result<bool, ()> {
        if k == missing.len() {
            return Ok(true);
        }
        let (a, b) = missing[k];
        let mut path = vec![a];
        self.extend(missing, k, b, &mut path, free, paths)
    }

    fn extend(
        &mut self,
        missing: &[(usize, usize)],
        k: usize,
        target: usize,
        path: &mut Vec<usize>,
        free: &mut [bool],
        paths: &mut Vec<Vec<usize>>,
    ) -> Result<bool, ()> {
        self.tick()?;
        let last = *path.last().unwrap();
        if path.len() > 1 && self.g.has_edge(last, target) {
            path.push(target);
            paths.push(path.clone());
            if self.link(missing, k + 1, free, paths)? {
                return Ok(true);
            }
            paths.pop();
            path.pop();
        }
        let nexts: Vec<usize> = self.g.neighbors(last).filter(|&w| free[w]).collect();
        for w in nexts {
            free[w] = false;
            path.push(w);
            let done = self.extend(missing, k, target, path, free, paths)?;
            if done {
                return Ok(true);
            }
            path.pop();
            free[w] = true;
        }
        Ok(false)
    }
}

/// Searches for a subdivision of `K_{m,n}` whose vertices all lie in `pool`
/// (all vertices when `None`). Returns `Err(())` when the node budget runs
/// out, `Ok(None)` when the search space is exhausted.
pub fn find_biclique_subdivision(
    g: &SimpleGraph,
    m: usize,
    n: usize,
    pool: Option<&[usize]>,
    budget: u64,
) -> Result<Option<SubdivisionWitness>, ()> {
    let mut pool: Vec<usize> = match pool {
        Some(p) => p.to_vec(),
        None => (0..g.vertex_count()).collect(),
    };
    pool.sort_unstable();
    pool.dedup();
    if pool.len() < m + n || m == 0 || n == 0 {
        return Ok(None);
    }
    let (m, n) = (m.min(n), m.max(n));
    let mut st = SubdivSearch {
        g,
        pool,
        m,
        n,
        nodes: 0,
        budget,
    };
    st.choose_left(0, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_k55() -> (SimpleGraph, SubdivisionWitness) {
        let g = SimpleGraph::complete_bipartite(5, 5);
        let paths = (0..5).flat_map(|a| (5..10).map(move |b| vec![a, b])).collect();
        let w = SubdivisionWitness {
            branch: (0..10).collect(),
            paths,
            pattern: Pattern::Biclique(5, 5),
        };
        (g, w)
    }

    #[test]
    fn identity_witness() {
        let (g, w) = identity_k55();
        assert_eq!(verify_subdivision_witness(&g, &w), Ok(true));
    }

    #[test]
    fn subdivided_edge() {
        // K5,5 with edge 0-5 replaced by 0-10-5
        let (mut g, mut w) = identity_k55();
        let mut h = SimpleGraph::with_vertices(11);
        for (u, v) in g.edges() {
            if (u, v) != (0, 5) {
                h.add_edge(u, v).unwrap();
            }
        }
        h.add_edge(0, 10).unwrap();
        h.add_edge(10, 5).unwrap();
        g = h;
        w.paths[0] = vec![0, 10, 5];
        assert_eq!(verify_subdivision_witness(&g, &w), Ok(true));
        let found = find_biclique_subdivision(&g, 5, 5, None, 1_000_000).unwrap().unwrap();
        assert_eq!(verify_subdivision_witness(&g, &found), Ok(true));
    }

    #[test]
    fn malformed_witnesses() {
        let (g, mut w) = identity_k55();
        let mut shared = w.clone();
        // two paths through the same internal vertex
        shared.paths[0] = vec![0, 6, 1, 5];
        shared.paths[1] = vec![0, 7, 1, 6];
        assert!(verify_subdivision_witness(&g, &shared).is_err());
        w.paths[0] = vec![0, 1];
        assert!(matches!(
            verify_subdivision_witness(&g, &w),
            Err(GraphError::InvalidWitness(_))
        ));
        let (g, mut w) = identity_k55();
        w.pattern = Pattern::Clique(10);
        assert_eq!(verify_subdivision_witness(&g, &w), Ok(false));
    }

    #[test]
    fn pattern_strings() {
        assert_eq!("K5,5".parse::<Pattern>().unwrap(), Pattern::Biclique(5, 5));
        assert_eq!("K_{3,7}".parse::<Pattern>().unwrap(), Pattern::Biclique(3, 7));
        assert_eq!("K5".parse::<Pattern>().unwrap(), Pattern::Clique(5));
        assert!("L5".parse::<Pattern>().is_err());
        let json = serde_json::to_string(&Pattern::Biclique(5, 5)).unwrap();
        assert_eq!(json, "\"K5,5\"");
    }

    #[test]
    fn no_subdivision_in_small_graph() {
        let g = SimpleGraph::complete_bipartite(4, 5);
        assert_eq!(find_biclique_subdivision(&g, 5, 5, None, 1_000_000), Ok(None));
    }
}
