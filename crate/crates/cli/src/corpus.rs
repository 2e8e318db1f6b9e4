//! Instance corpora for verification campaigns.
//!
//! A [`CorpusSpec`] is written as `family:args`, for example `isolated:5`,
//! `cycles:4..8` or `random:200:7:0.5:1`. Expansion is deterministic.

use std::fmt;
use std::str::FromStr;

use ekrcx::graphs::{all_labeled_graphs, coned_boundary, cycle, Graph, MAX_EXHAUSTIVE_VERTICES};
use ekrcx::shifting::MAX_SHIFT_VERTICES;
use ekrcx::{Face, SimplicialComplex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

/// One object to check a claim on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    /// Human-readable origin, unique within a corpus.
    pub source: String,
    pub complex: SimplicialComplex,
    /// The graph when `complex` is its independence complex.
    pub graph: Option<Graph>,
    /// Components of a disjoint union or a join, in order.
    pub parts: Vec<Part>,
    /// Parameters of a coned boundary.
    pub coned: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Part {
    Graph(Graph),
    Complex(SimplicialComplex),
}

impl Instance {
    pub fn complex(source: String, complex: SimplicialComplex) -> Self {
        Instance {
            source,
            complex,
            graph: None,
            parts: Vec::new(),
            coned: None,
        }
    }

    pub fn graph(source: String, graph: Graph) -> Self {
        Instance {
            source,
            complex: graph.independence_complex(),
            graph: Some(graph),
            parts: Vec::new(),
            coned: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSpec {
    /// Every labeled graph on `1..=n` vertices.
    AllGraphs(usize),
    Chordal(usize),
    /// Labeled graphs with an isolated vertex.
    Isolated(usize),
    Threshold(usize),
    Cycles(usize, usize),
    Simplices(usize, usize),
    /// `count` random complexes on at most `n` vertices.
    Random { count: usize, n: usize, density: f64, seed: u64 },
    /// Cones over random complexes, some with extra facets, relabeled.
    NearCones { count: usize, n: usize, density: f64, seed: u64 },
    /// Pairs of random complexes, presented as their join.
    Pairs { count: usize, n: usize, density: f64, seed: u64 },
    /// An isolated vertex plus up to `parts - 1` further components, each a
    /// graph on at most `size` vertices (one per isomorphism type).
    Unions { parts: usize, size: usize },
    /// Coned boundaries with `2 <= n <= max_n` and `n < k <= max_k`.
    Coned { max_n: usize, max_k: usize },
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::AllGraphs(n) => write!(f, "all-graphs:{n}"),
            CorpusSpec::Chordal(n) => write!(f, "chordal:{n}"),
            CorpusSpec::Isolated(n) => write!(f, "isolated:{n}"),
            CorpusSpec::Threshold(n) => write!(f, "threshold:{n}"),
            CorpusSpec::Cycles(a, b) => write!(f, "cycles:{a}..{b}"),
            CorpusSpec::Simplices(a, b) => write!(f, "simplices:{a}..{b}"),
            CorpusSpec::Random { count, n, density, seed } => write!(f, "random:{count}:{n}:{density}:{seed}"),
            CorpusSpec::NearCones { count, n, density, seed } => {
                write!(f, "near-cones:{count}:{n}:{density}:{seed}")
            }
            CorpusSpec::Pairs { count, n, density, seed } => write!(f, "pairs:{count}:{n}:{density}:{seed}"),
            CorpusSpec::Unions { parts, size } => write!(f, "unions:{parts}:{size}"),
            CorpusSpec::Coned { max_n, max_k } => write!(f, "coned:{max_n}:{max_k}"),
        }
    }
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("bad {what} {s:?} in corpus spec")))
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| CliError::Usage(format!("expected a range A..B, got {s:?}")))?;
    let (a, b) = (parse_num(a, "range start")?, parse_num(b, "range end")?);
    if a > b {
        return Err(CliError::Usage(format!("empty range {s:?}")));
    }
    Ok((a, b))
}

impl FromStr for CorpusSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let fields: Vec<&str> = s.split(':').collect();
        let arity = |k: usize| {
            if fields.len() == k + 1 {
                Ok(())
            } else {
                Err(CliError::Usage(format!(
                    "corpus family {:?} takes {k} argument(s), got {:?}",
                    fields[0], s
                )))
            }
        };
        let graph_limit = |n: usize| {
            if n > MAX_EXHAUSTIVE_VERTICES {
                Err(CliError::Resource(format!(
                    "exhaustive graph corpora stop at {MAX_EXHAUSTIVE_VERTICES} vertices"
                )))
            } else {
                Ok(n)
            }
        };
        let random = |fields: &[&str]| -> Result<(usize, usize, f64, u64), CliError> {
            let n: usize = parse_num(fields[2], "vertex count")?;
            if n == 0 || n > MAX_SHIFT_VERTICES {
                return Err(CliError::Usage(format!("vertex count must be in 1..={MAX_SHIFT_VERTICES}")));
            }
            let density: f64 = parse_num(fields[3], "density")?;
            if !(0.0..=1.0).contains(&density) {
                return Err(CliError::Usage("density must lie in [0, 1]".into()));
            }
            Ok((parse_num(fields[1], "count")?, n, density, parse_num(fields[4], "seed")?))
        };
        let spec = match fields[0] {
            "all-graphs" | "chordal" | "isolated" | "threshold" => {
                arity(1)?;
                let n = graph_limit(parse_num(fields[1], "vertex count")?)?;
                match fields[0] {
                    "all-graphs" => CorpusSpec::AllGraphs(n),
                    "chordal" => CorpusSpec::Chordal(n),
                    "isolated" => CorpusSpec::Isolated(n),
                    _ => CorpusSpec::Threshold(n),
                }
            }
            "cycles" => {
                arity(1)?;
                let (a, b) = parse_range(fields[1])?;
                if a < 3 || b > 64 {
                    return Err(CliError::Usage("cycle lengths must lie in 3..=64".into()));
                }
                CorpusSpec::Cycles(a, b)
            }
            "simplices" => {
                arity(1)?;
                let (a, b) = parse_range(fields[1])?;
                if a < 1 || b > 64 {
                    return Err(CliError::Usage("simplex sizes must lie in 1..=64".into()));
                }
                CorpusSpec::Simplices(a, b)
            }
            "random" | "near-cones" | "pairs" => {
                arity(4)?;
                let (count, n, density, seed) = random(&fields)?;
                match fields[0] {
                    "random" => CorpusSpec::Random { count, n, density, seed },
                    "near-cones" => CorpusSpec::NearCones { count, n, density, seed },
                    _ => CorpusSpec::Pairs { count, n, density, seed },
                }
            }
            "unions" => {
                arity(2)?;
                let parts = parse_num(fields[1], "part count")?;
                let size = parse_num(fields[2], "part size")?;
                if parts == 0 || size == 0 || size > 4 || parts * size > 16 {
                    return Err(CliError::Usage("unions need 1 <= parts, 1 <= size <= 4, parts * size <= 16".into()));
                }
                CorpusSpec::Unions { parts, size }
            }
            "coned" => {
                arity(2)?;
                let max_n = parse_num(fields[1], "n")?;
                let max_k = parse_num(fields[2], "k")?;
                if (max_k + 1) * (max_n + 1) > 64 {
                    return Err(CliError::Resource("coned boundary exceeds 64 vertices".into()));
                }
                CorpusSpec::Coned { max_n, max_k }
            }
            other => return Err(CliError::Usage(format!("unknown corpus family {other:?}"))),
        };
        Ok(spec)
    }
}

fn graph_source(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("graph n={} e=[{}]", g.n(), edges.join(","))
}

fn labeled_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| all_labeled_graphs(n).expect("bounded when parsed"))
        .collect()
}

/// A random complex: between 2 and `max_n` vertices, up to `n` generating
/// sets each taking every vertex with probability `density`; vertices left
/// uncovered become isolated points.
pub fn random_complex(max_n: usize, density: f64, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(max_n.min(2)..=max_n);
    let count = rng.gen_range(1..=n);
    let mut facets: Vec<Face> = (0..count)
        .map(|_| Face::from_vertices((1..=n).filter(|_| rng.gen_bool(density))).unwrap())
        .filter(|f| !f.is_empty())
        .collect();
    let covered = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    facets.extend(Face::full(n).difference(covered).vertices().map(Face::singleton));
    SimplicialComplex::from_facets(facets, Some(n)).unwrap()
}

/// Cone over a random complex on at most `max_n - 1` vertices; with
/// probability one half, some minimal non-faces of the base are added as
/// facets (their boundaries lie in the apex link, so the result stays a
/// near-cone). Vertices are then shuffled.
pub fn random_near_cone(max_n: usize, density: f64, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_c0de);
    let base = random_complex(max_n - 1, density, seed);
    let cone = base.cone();
    let mut facets = cone.facets().to_vec();
    if rng.gen_bool(0.5) {
        for m in base.minimal_non_faces() {
            if m.len() >= 2 && rng.gen_bool(0.5) {
                facets.push(m);
            }
        }
    }
    let near = SimplicialComplex::from_facets(facets, Some(cone.n())).unwrap();
    let mut perm: Vec<usize> = (1..=near.n()).collect();
    perm.shuffle(&mut rng);
    near.permute(&perm)
}

/// One representative graph per isomorphism type on `1..=size` vertices.
fn graph_types(size: usize) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in labeled_graphs(size) {
        if !reps.iter().any(|h| isomorphic(h, &g)) {
            reps.push(g);
        }
    }
    reps
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (1..=a.n()).collect();
    loop {
        if &a.permute(&perm) == b {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Nondecreasing index sequences of length `len` over `0..k`.
fn multisets(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                let lo = s.last().copied().unwrap_or(0);
                (lo..k).map(move |i| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

impl CorpusSpec {
    pub fn expand(&self) -> Vec<Instance> {
        let graphs = |n: usize, keep: fn(&Graph) -> bool| -> Vec<Instance> {
            labeled_graphs(n)
                .into_iter()
                .filter(keep)
                .map(|g| Instance::graph(graph_source(&g), g))
                .collect()
        };
        match *self {
            CorpusSpec::AllGraphs(n) => graphs(n, |_| true),
            CorpusSpec::Chordal(n) => graphs(n, Graph::is_chordal),
            CorpusSpec::Isolated(n) => graphs(n, Graph::has_isolated_vertex),
            CorpusSpec::Threshold(n) => graphs(n, Graph::is_threshold),
            CorpusSpec::Cycles(a, b) => (a..=b)
                .map(|n| Instance::graph(format!("cycle {n}"), cycle(n).unwrap()))
                .collect(),
            CorpusSpec::Simplices(a, b) => (a..=b)
                .map(|n| Instance::complex(format!("simplex {n}"), SimplicialComplex::simplex(n)))
                .collect(),
            CorpusSpec::Random { count, n, density, seed } => (0..count as u64)
                .map(|i| {
                    let s = seed.wrapping_add(i);
                    Instance::complex(format!("random n<={n} p={density} seed={s}"), random_complex(n, density, s))
                })
                .collect(),
            CorpusSpec::NearCones { count, n, density, seed } => (0..count as u64)
                .map(|i| {
                    let s = seed.wrapping_add(i);
                    Instance::complex(
                        format!("near-cone n<={n} p={density} seed={s}"),
                        random_near_cone(n.max(2), density, s),
                    )
                })
                .collect(),
            CorpusSpec::Pairs { count, n, density, seed } => (0..count as u64)
                .map(|i| {
                    let s = seed.wrapping_add(2 * i);
                    let a = random_complex(n, density, s);
                    let b = random_complex(n, density, s + 1);
                    Instance {
                        source: format!("pair n<={n} p={density} seeds={s},{}", s + 1),
                        complex: a.join(&b),
                        graph: None,
                        parts: vec![Part::Complex(a), Part::Complex(b)],
                        coned: None,
                    }
                })
                .collect(),
            CorpusSpec::Unions { parts, size } => {
                let types = graph_types(size);
                let mut out = Vec::new();
                for extra in 0..parts {
                    for choice in multisets(types.len(), extra) {
                        let mut comps = vec![Graph::new(1)];
                        comps.extend(choice.iter().map(|&i| types[i].clone()));
                        let g = Graph::disjoint_union(&comps);
                        let names: Vec<String> = comps.iter().map(graph_source).collect();
                        out.push(Instance {
                            source: format!("union [{}]", names.join(" + ")),
                            complex: g.independence_complex(),
                            graph: Some(g),
                            parts: comps.into_iter().map(Part::Graph).collect(),
                            coned: None,
                        });
                    }
                }
                out
            }
            CorpusSpec::Coned { max_n, max_k } => {
                let mut out = Vec::new();
                for n in 2..=max_n {
                    for k in n + 1..=max_k {
                        out.push(Instance {
                            source: format!("coned boundary n={n} k={k}"),
                            complex: coned_boundary(n, k).expect("bounded when parsed"),
                            graph: None,
                            parts: Vec::new(),
                            coned: Some((n, k)),
                        });
                    }
                }
                out
            }
        }
    }
}
