use super::SimpleGraph;

/// A biconnected component with its vertices in the parent graph.
#[derive(Clone, Debug)]
pub struct Block {
    /// Parent vertex ids, sorted; vertex `i` of `graph` is `vertices[i]`.
    pub vertices: Vec<usize>,
    pub graph: SimpleGraph,
}

/// Blocks of `g` with their vertex maps, ordered by vertex list. Isolated
/// vertices belong to no block.
pub fn blocks_with_vertices(g: &SimpleGraph) -> Vec<Block> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();

    for root in 0..n {
        if disc[root] != usize::MAX || nbrs[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frames: (vertex, parent, next neighbour position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&(v, parent, pos)) = stack.last() {
            if pos < nbrs[v].len() {
                let w = nbrs[v][pos];
                stack.last_mut().unwrap().2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut verts = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            verts.push(a);
                            verts.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        verts.dedup();
                        found.push(verts);
                    }
                }
            }
        }
    }
    found.sort();
    found
        .into_iter()
        .map(|vertices| Block {
            graph: g.induced_subgraph(&vertices).unwrap(),
            vertices,
        })
        .collect()
}

/// Biconnected components of `g`; isolated vertices are omitted.
pub fn blocks(g: &SimpleGraph) -> Vec<SimpleGraph> {
    blocks_with_vertices(g).into_iter().map(|b| b.graph).collect()
}
