//! Exact maximum-clique search on dense bit-set graphs.
//!
//! Branch and bound with greedy colouring bounds: vertices are renumbered by
//! descending degree, each node colours its candidate set greedily, and
//! candidates are expanded in decreasing colour order so the colour number
//! bounds the clique still reachable.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct BitGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitGraph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Graph on `0..n` with an edge wherever `compatible(i, j)` holds (`i < j`).
    pub fn from_relation<F: FnMut(usize, usize) -> bool>(n: usize, mut compatible: F) -> Self {
        let mut g = BitGraph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if compatible(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i * self.words + j / 64] |= 1 << (j % 64);
        self.adj[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &i)| vertices[a + 1..].iter().all(|&j| self.has_edge(i, j)))
    }

    /// Same graph with vertex `order[k]` renamed to `k`.
    fn reordered(&self, order: &[usize]) -> BitGraph {
        let mut g = BitGraph::new(self.n);
        for (a, &i) in order.iter().enumerate() {
            for (b, &j) in order.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }
}

type Bits = Vec<u64>;

fn is_empty(b: &[u64]) -> bool {
    b.iter().all(|&w| w == 0)
}

fn first(b: &[u64]) -> Option<usize> {
    b.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn clear(b: &mut [u64], i: usize) {
    b[i / 64] &= !(1 << (i % 64));
}

/// Search statistics and limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Branch-and-bound nodes allowed before giving up with a resource error.
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: 1_000_000 }
    }
}

struct Search<'a> {
    g: &'a BitGraph,
    nodes: u64,
    limits: SearchLimits,
    best: Vec<usize>,
    target: Option<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Greedy sequential colouring of `p`: returns vertices with their
    /// colour numbers, colours non-decreasing.
    fn colour(&self, p: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured: Bits = p.to_vec();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut colour = 0;
        while !is_empty(&uncoloured) {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = first(&q) {
                clear(&mut q, v);
                clear(&mut uncoloured, v);
                for (w, a) in q.iter_mut().zip(self.g.row(v)) {
                    *w &= !a;
                }
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: Bits) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(Error::Resource(format!(
                "clique search exceeded {} nodes",
                self.limits.max_nodes
            )));
        }
        let (order, colours) = self.colour(&p);
        for idx in (0..order.len()).rev() {
            let reachable = r.len() + colours[idx];
            match self.target {
                Some(t) if reachable < t => return Ok(()),
                None if reachable <= self.best.len() => return Ok(()),
                _ => {}
            }
            let v = order[idx];
            r.push(v);
            let next: Bits = p.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            match self.target {
                Some(t) if r.len() == t => self.found.push(r.clone()),
                _ => {
                    if is_empty(&next) {
                        if r.len() > self.best.len() {
                            self.best = r.clone();
                        }
                    } else {
                        self.expand(r, next)?;
                    }
                }
            }
            r.pop();
            clear(&mut p, v);
        }
        Ok(())
    }
}

fn degree_order(g: &BitGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(g.degree(i)), i));
    order
}

fn full_set(g: &BitGraph) -> Bits {
    let mut p = vec![0u64; g.words];
    for i in 0..g.n {
        p[i / 64] |= 1 << (i % 64);
    }
    p
}

/// Outcome of a maximum-clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    /// Vertices of a maximum clique, sorted.
    pub clique: Vec<usize>,
    pub nodes: u64,
}

/// A maximum clique. `incumbent`, when given, must be a clique and seeds
/// the lower bound; it is returned if nothing larger exists.
pub fn maximum_clique(g: &BitGraph, incumbent: Option<&[usize]>, limits: SearchLimits) -> Result<CliqueResult> {
    let order = degree_order(g);
    let mut pos = vec![0; g.n];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let h = g.reordered(&order);
    let mut best: Vec<usize> = incumbent
        .map(|c| {
            debug_assert!(g.is_clique(c));
            c.iter().map(|&i| pos[i]).collect()
        })
        .unwrap_or_default();
    if g.n > 0 && best.is_empty() {
        best.push(0);
    }
    let mut search = Search {
        g: &h,
        nodes: 0,
        limits,
        best,
        target: None,
        found: Vec::new(),
    };
    if g.n > 0 {
        search.expand(&mut Vec::new(), full_set(&h))?;
    }
    let mut clique: Vec<usize> = search.best.iter().map(|&k| order[k]).collect();
    clique.sort_unstable();
    Ok(CliqueResult {
        clique,
        nodes: search.nodes,
    })
}

/// Every clique with exactly `size` vertices, each sorted, in lexicographic
/// order. Meant for `size` equal to the clique number.
pub fn cliques_of_size(g: &BitGraph, size: usize, limits: SearchLimits) -> Result<Vec<Vec<usize>>> {
    if size == 0 {
        return Ok(vec![Vec::new()]);
    }
    let order = degree_order(g);
    let h = g.reordered(&order);
    let mut search = Search {
        g: &h,
        nodes: 0,
        limits,
        best: Vec::new(),
        target: Some(size),
        found: Vec::new(),
    };
    if g.n > 0 {
        search.expand(&mut Vec::new(), full_set(&h))?;
    }
    let mut out: Vec<Vec<usize>> = search
        .found
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|k| order[k]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_clique_number(g: &BitGraph) -> usize {
        (0u32..1 << g.n())
            .filter(|m| {
                let vs: Vec<usize> = (0..g.n()).filter(|i| m >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn matches_brute_force_on_pseudo_random_graphs() {
        let mut state = 0x1234_5678_u64;
        for _ in 0..60 {
            let n = 1 + (state % 12) as usize;
            let g = BitGraph::from_relation(n, |_, _| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                !state.is_multiple_of(3)
            });
            let res = maximum_clique(&g, None, SearchLimits::default()).unwrap();
            assert!(g.is_clique(&res.clique));
            assert_eq!(res.clique.len(), brute_force_clique_number(&g));
        }
    }

    #[test]
    fn enumerates_triangles_of_k4() {
        let g = BitGraph::from_relation(4, |_, _| true);
        let all = cliques_of_size(&g, 3, SearchLimits::default()).unwrap();
        assert_eq!(all.len(), 4);
        assert_eq!(all[0], vec![0, 1, 2]);
    }

    #[test]
    fn node_cap_is_a_resource_error() {
        let g = BitGraph::from_relation(40, |i, j| (i + j) % 3 != 0);
        let tiny = SearchLimits { max_nodes: 2 };
        assert!(matches!(maximum_clique(&g, None, tiny), Err(Error::Resource(_))));
    }

    #[test]
    fn empty_graph() {
        let g = BitGraph::new(0);
        assert!(maximum_clique(&g, None, SearchLimits::default()).unwrap().clique.is_empty());
        let g = BitGraph::new(3);
        assert_eq!(maximum_clique(&g, None, SearchLimits::default()).unwrap().clique.len(), 1);
    }
}
