//! Simple graphs on `{1..n}` and the complexes they induce.
//!
//! Adjacency is a per-vertex bit mask in the same layout as [`Face`], so a
//! neighborhood *is* a face and set algebra is a single instruction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, VertexId, MAX_VERTICES};

/// Largest `n` for which [`all_labeled_graphs`] will enumerate.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Face>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph {
            n,
            adj: vec![Face::EMPTY; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Input(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Input(format!("edge ({u},{v}) outside 1..={n}")));
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        self.adj[u - 1] = self.adj[u - 1].with(v);
        self.adj[v - 1] = self.adj[v - 1].with(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Face {
        Face::full(self.n)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u - 1].contains(v)
    }

    /// Open neighborhood.
    pub fn neighbors(&self, v: VertexId) -> Face {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v - 1].len()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (1..=self.n).flat_map(move |u| {
            self.adj[u - 1]
                .vertices()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// `N[v] = {v} ∪ neighbors(v)`.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<Face> {
        if v == 0 || v > self.n {
            return Err(Error::Domain(format!("vertex {v} outside 1..={}", self.n)));
        }
        Ok(self.adj[v - 1].with(v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            adj: (1..=self.n)
                .map(|v| all.difference(self.adj[v - 1]).without(v))
                .collect(),
        }
    }

    /// Connected in the usual sense; the graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = Face::singleton(1);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = Face::EMPTY;
            for v in frontier.vertices() {
                next = next.union(self.adj[v - 1]);
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen == self.vertices()
    }

    /// Parts placed on consecutive vertex blocks, in order.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let n: usize = parts.iter().map(|g| g.n).sum();
        let mut out = Graph::new(n);
        let mut offset = 0;
        for g in parts {
            for (u, v) in g.edges() {
                out.add_edge(u + offset, v + offset);
            }
            offset += g.n;
        }
        out
    }

    /// Induced subgraph on `keep`, relabeled order-preservingly. Also returns
    /// `old_of[new - 1]`.
    pub fn induced(&self, keep: Face) -> (Graph, Vec<VertexId>) {
        let old_of: Vec<VertexId> = keep.intersection(self.vertices()).vertices().collect();
        let mut g = Graph::new(old_of.len());
        for (i, &u) in old_of.iter().enumerate() {
            for (j, &v) in old_of.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i + 1, j + 1);
                }
            }
        }
        (g, old_of)
    }

    /// `G ∖ S` for a vertex set `S`.
    pub fn remove(&self, s: Face) -> (Graph, Vec<VertexId>) {
        self.induced(self.vertices().difference(s))
    }

    /// Relabels by `perm[old - 1] = new`.
    pub fn permute(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u - 1], perm[v - 1]);
        }
        g
    }

    /// Independence complex, on the same labels. Its facets are the maximal
    /// independent sets, found as maximal cliques of the complement.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let comp = self.complement();
        let mut facets = Vec::new();
        bron_kerbosch(&comp, Face::EMPTY, self.vertices(), Face::EMPTY, &mut facets);
        SimplicialComplex::from_facets(facets, Some(self.n)).expect("labels within range")
    }

    pub fn is_independent(&self, s: Face) -> bool {
        s.vertices().all(|v| self.adj[v - 1].is_disjoint(s))
    }

    /// Lexicographic breadth-first search order, starting from vertex 1.
    pub fn lex_bfs(&self) -> Vec<VertexId> {
        let n = self.n;
        let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let mut done = Face::EMPTY;
        let mut order = Vec::with_capacity(n);
        for step in 0..n {
            // largest label wins; ties go to the smallest vertex
            let v = (1..=n)
                .filter(|&v| !done.contains(v))
                .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
                .unwrap();
            done = done.with(v);
            order.push(v);
            for w in self.adj[v - 1].difference(done).vertices() {
                labels[w].push(n - step);
            }
        }
        order
    }

    /// Whether `order` lists vertices so that, for each vertex, its
    /// neighbours appearing later form a clique.
    pub fn is_perfect_elimination_ordering(&self, order: &[VertexId]) -> bool {
        let mut later = self.vertices();
        for &v in order {
            later = later.without(v);
            let nb = self.adj[v - 1].intersection(later);
            if !nb.vertices().all(|u| nb.without(u).is_subset(self.adj[u - 1])) {
                return false;
            }
        }
        true
    }

    /// Chordality: the reverse of a LexBFS order is a perfect elimination
    /// ordering exactly when the graph is chordal.
    pub fn is_chordal(&self) -> bool {
        let mut order = self.lex_bfs();
        order.reverse();
        self.is_perfect_elimination_ordering(&order)
    }

    pub fn is_cochordal(&self) -> bool {
        self.complement().is_chordal()
    }

    /// `D(G)`: adds an isolated vertex `n + 1`.
    pub fn d_op(&self) -> Graph {
        let mut g = self.clone();
        g.n += 1;
        g.adj.push(Face::EMPTY);
        g
    }

    /// `S(G)`: adds a vertex `n + 1` adjacent to every existing vertex.
    pub fn s_op(&self) -> Graph {
        let mut g = self.d_op();
        for v in 1..=self.n {
            g.add_edge(v, self.n + 1);
        }
        g
    }

    /// Threshold test by repeatedly stripping an isolated or dominating
    /// vertex. On success returns the construction word that rebuilds the
    /// graph from one vertex (up to relabeling).
    pub fn threshold_word(&self) -> Option<Vec<ThresholdOp>> {
        if self.n == 0 {
            return None;
        }
        let mut alive = self.vertices();
        let mut stripped = Vec::with_capacity(self.n.saturating_sub(1));
        while alive.len() > 1 {
            let step = alive.vertices().find_map(|v| {
                let nb = self.adj[v - 1].intersection(alive);
                if nb.is_empty() {
                    Some((v, ThresholdOp::D))
                } else if nb == alive.without(v) {
                    Some((v, ThresholdOp::S))
                } else {
                    None
                }
            })?;
            alive = alive.without(step.0);
            stripped.push(step.1);
        }
        stripped.reverse();
        Some(stripped)
    }

    pub fn is_threshold(&self) -> bool {
        self.threshold_word().is_some()
    }

    /// Vertices whose every neighbour is adjacent to all other vertices.
    /// These are exactly the near-cone apexes of the independence complex.
    pub fn flag_apexes(&self) -> Vec<VertexId> {
        (1..=self.n)
            .filter(|&v| {
                self.adj[v - 1]
                    .vertices()
                    .all(|w| self.adj[w - 1] == self.vertices().without(w))
            })
            .collect()
    }

    /// Writes the graph as `S^k D(core)` around the smallest near-cone apex of
    /// its independence complex. `None` when the complex is not a near-cone.
    pub fn flag_nearcone_decompose(&self) -> Option<NearConeDecomposition> {
        let apex = *self.flag_apexes().first()?;
        let closed = self.adj[apex - 1].with(apex);
        let (core, core_vertices) = self.remove(closed);
        Some(NearConeDecomposition {
            k: self.degree(apex),
            core,
            core_vertices,
            apex,
        })
    }

    /// Has a vertex of degree zero.
    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThresholdOp {
    /// Add an isolated vertex.
    D,
    /// Add a dominating vertex.
    S,
}

/// `G ≅ S^k(D(core))` with `apex` the vertex added by `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearConeDecomposition {
    pub k: usize,
    /// `G ∖ N[apex]`; may have zero vertices (for `G = K_1`).
    pub core: Graph,
    /// Original labels of the core's vertices.
    pub core_vertices: Vec<VertexId>,
    pub apex: VertexId,
}

impl NearConeDecomposition {
    /// `S^k(D(core))` on fresh labels.
    pub fn rebuild(&self) -> Graph {
        let mut g = self.core.d_op();
        for _ in 0..self.k {
            g = g.s_op();
        }
        g
    }
}

fn bron_kerbosch(g: &Graph, r: Face, mut p: Face, mut x: Face, out: &mut Vec<Face>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    // pivot: vertex of P ∪ X with the most neighbours in P
    let pivot = p
        .union(x)
        .vertices()
        .max_by_key(|&u| g.adj[u - 1].intersection(p).len())
        .unwrap();
    for v in p.difference(g.adj[pivot - 1]).vertices() {
        let nb = g.adj[v - 1];
        bron_kerbosch(g, r.with(v), p.intersection(nb), x.intersection(nb), out);
        p = p.without(v);
        x = x.with(v);
    }
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v, v + 1);
    }
    g
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n);
    g.add_edge(n, 1);
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

/// Complete multipartite graph with parts of the given sizes, on consecutive blocks.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let cliques: Vec<Graph> = parts.iter().map(|&s| complete(s)).collect();
    Graph::disjoint_union(&cliques).complement()
}

/// `G(n, density)` with a seeded ChaCha8 stream; edges visited lexicographically.
pub fn erdos_renyi(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every labeled graph on `n <= 6` vertices, `2^C(n,2)` of them, ordered by
/// the edge-subset bit mask.
pub fn all_labeled_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_EXHAUSTIVE_VERTICES {
        return Err(Error::Resource(format!(
            "exhaustive graph enumeration is limited to {MAX_EXHAUSTIVE_VERTICES} vertices"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    Ok((0u64..1 << pairs.len())
        .map(|mask| {
            let mut g = Graph::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            g
        })
        .collect())
}

/// Boundary of the simplex on `n + 1` vertices with `k` fresh cone points
/// over each facet: the facet missing vertex `i` becomes a simplex together
/// with vertices `n + 1 + (i - 1) k + 1 ..= n + 1 + i k`. The result is pure
/// with `(k + 1)(n + 1)` vertices.
pub fn coned_boundary(n: usize, k: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::Domain("coned boundary needs n >= 1".into()));
    }
    let total = (k + 1) * (n + 1);
    if total > MAX_VERTICES {
        return Err(Error::Resource(format!("{total} vertices exceeds {MAX_VERTICES}")));
    }
    let base = Face::full(n + 1);
    let facets = (1..=n + 1).map(|i| {
        let start = n + 1 + (i - 1) * k;
        let fresh = Face::full(start + k).difference(Face::full(start));
        base.without(i).union(fresh)
    });
    SimplicialComplex::from_facets(facets, Some(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_complexes_of_extremes() {
        assert_eq!(Graph::new(4).independence_complex(), SimplicialComplex::simplex(4));
        let k4 = complete(4).independence_complex();
        assert_eq!(k4.facets().len(), 4);
        assert_eq!(k4.max_facet_card().unwrap(), 1);
        let c4 = cycle(4).unwrap().independence_complex();
        assert_eq!(c4, SimplicialComplex::of(&[&[1, 3], &[2, 4]]));
        assert!(Graph::new(0).independence_complex().is_empty_complex());
    }

    #[test]
    fn closed_neighborhoods() {
        let star = Graph::new(3).s_op();
        assert_eq!(star.closed_neighborhood(4).unwrap(), Face::full(4));
        assert_eq!(star.closed_neighborhood(1).unwrap(), Face::of(&[1, 4]));
        assert_eq!(Graph::new(2).closed_neighborhood(2).unwrap(), Face::of(&[2]));
        assert!(star.closed_neighborhood(5).is_err());
    }

    #[test]
    fn chordality() {
        assert!(complete(5).is_chordal());
        assert!(path(6).is_chordal());
        let c4 = cycle(4).unwrap();
        assert!(!c4.is_chordal());
        assert!(c4.is_cochordal());
        let c6 = cycle(6).unwrap();
        assert!(!c6.is_chordal() && !c6.is_cochordal());
    }

    #[test]
    fn d_and_s() {
        assert_eq!(Graph::new(1).d_op(), Graph::new(2));
        let star = Graph::new(3).s_op();
        assert_eq!(star.edge_count(), 3);
        assert_eq!(star.degree(4), 3);
    }

    #[test]
    fn threshold_words() {
        assert_eq!(Graph::new(1).threshold_word(), Some(vec![]));
        assert!(!path(4).is_threshold());
        let g = Graph::new(1).d_op().s_op().d_op();
        assert_eq!(g.threshold_word().unwrap().len(), 3);
    }

    #[test]
    fn near_cone_decomposition() {
        let iso = Graph::disjoint_union(&[path(3), Graph::new(1)]);
        let dec = iso.flag_nearcone_decompose().unwrap();
        assert_eq!(dec.k, 0);
        assert_eq!(dec.apex, 4);
        assert_eq!(dec.core, path(3));
        assert!(cycle(5).unwrap().flag_nearcone_decompose().is_none());
        let k1 = Graph::new(1).flag_nearcone_decompose().unwrap();
        assert_eq!((k1.k, k1.core.n()), (0, 0));
        assert_eq!(k1.rebuild(), Graph::new(1));
    }

    #[test]
    fn generators() {
        assert_eq!(cycle(3).unwrap(), complete(3));
        assert!(cycle(2).is_err());
        assert_eq!(all_labeled_graphs(3).unwrap().len(), 8);
        assert!(all_labeled_graphs(7).is_err());
        let k222 = complete_multipartite(&[2, 2, 2]);
        assert_eq!(k222.edge_count(), 12);
        assert_eq!(erdos_renyi(6, 0.5, 4), erdos_renyi(6, 0.5, 4));
        assert_eq!(erdos_renyi(5, 1.0, 0), complete(5));
    }

    #[test]
    fn coned_boundary_shape() {
        let c = coned_boundary(2, 1).unwrap();
        assert_eq!(c.n(), 6);
        assert_eq!(c.facets().len(), 3);
        assert!(c.is_pure().unwrap());
        assert_eq!(c.max_facet_card().unwrap(), 3);
        // a base vertex sits in two of the three coned facets
        let link1 = c.link(Face::singleton(1)).unwrap();
        assert_eq!(link1.f_vector().as_slice(), &[1, 4, 2]);
        for r in 1..=3 {
            let best = (1..=6).map(|v| c.star_family(v, r).len()).max().unwrap();
            assert_eq!(best, link1.f(r - 1));
            // 2 * C(3, r - 1) only bounds it from above
            assert!(best <= 2 * [1, 3, 3][r - 1]);
        }
    }

    #[test]
    fn connectivity_and_unions() {
        assert!(!cycle(4).unwrap().complement().is_connected());
        assert!(cycle(5).unwrap().complement().is_connected());
        let u = Graph::disjoint_union(&[complete(2), complete(3)]);
        assert_eq!(u.n(), 5);
        assert_eq!(u.edge_count(), 4);
        assert!(!u.is_connected());
    }
}
