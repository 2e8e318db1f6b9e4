//! Immutable simplicial complexes stored by their facets.
//!
//! A complex lives on the vertex universe `{1, ..., n}`. Two degenerate
//! values are first-class: the VOID complex (no faces at all) and the EMPTY
//! complex `{∅}` whose only face is the empty face. The link of a facet is
//! EMPTY, never VOID.
//!
//! Complexes produced by [`SimplicialComplex::link`] and a few other
//! operations may leave some vertices of the universe uncovered; use
//! [`SimplicialComplex::normalize`] before vertex-sensitive comparisons.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::face::{Face, VertexId, MAX_VERTICES};

/// Face counts indexed by CARDINALITY: `counts[r]` is the number of faces
/// with `r` vertices, so `counts[0] == 1` for any non-void complex.
///
/// Many references index by dimension instead, which shifts every entry by
/// one position; this crate never does.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `f_r`, zero past the end.
    pub fn get(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
struct FaceIndex {
    /// All faces in canonical (cardinality, lex) order.
    faces: Vec<Face>,
    /// `faces[offsets[r]..offsets[r + 1]]` are the faces of cardinality `r`.
    offsets: Vec<usize>,
}

#[derive(Clone)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
    index: OnceLock<FaceIndex>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "Void(n={})", self.n);
        }
        write!(f, "Complex(n={}, facets={:?})", self.n, self.facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Keeps only the inclusion-maximal members, in canonical order.
fn antichain(mut candidates: Vec<Face>) -> Vec<Face> {
    candidates.sort_unstable();
    candidates.dedup();
    // larger faces come later in canonical order, so scan from the back
    let mut kept: Vec<Face> = Vec::with_capacity(candidates.len());
    for &c in candidates.iter().rev() {
        if !kept.iter().any(|k| c.is_subset(*k)) {
            kept.push(c);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `candidates`.
    ///
    /// Inclusion-dominated candidates are dropped. `n` defaults to the largest
    /// vertex index present; an explicit `n` smaller than that is an input
    /// error. No candidates at all gives the VOID complex.
    pub fn from_facets<I: IntoIterator<Item = Face>>(candidates: I, n: Option<usize>) -> Result<Self> {
        let candidates: Vec<Face> = candidates.into_iter().collect();
        let max_used = candidates
            .iter()
            .filter_map(|f| f.max_vertex())
            .max()
            .unwrap_or(0);
        let n = match n {
            Some(n) if n < max_used => {
                return Err(Error::Input(format!(
                    "vertex count {n} is smaller than the largest vertex index {max_used}"
                )))
            }
            Some(n) if n > MAX_VERTICES => {
                return Err(Error::Input(format!(
                    "vertex count {n} exceeds the supported maximum of {MAX_VERTICES}"
                )))
            }
            Some(n) => n,
            None => max_used,
        };
        Ok(Self::from_parts(n, antichain(candidates)))
    }

    /// Like [`from_facets`](Self::from_facets) but from raw 1-based vertex lists.
    pub fn from_vertex_lists(lists: &[Vec<VertexId>], n: Option<usize>) -> Result<Self> {
        let faces = lists
            .iter()
            .map(|l| Face::from_vertices(l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(faces, n)
    }

    /// Shorthand for literals: panics on invalid input.
    pub fn of(facets: &[&[VertexId]]) -> Self {
        Self::from_facets(facets.iter().map(|f| Face::of(f)), None).expect("valid facets")
    }

    fn from_parts(n: usize, facets: Vec<Face>) -> Self {
        SimplicialComplex {
            n,
            facets,
            index: OnceLock::new(),
        }
    }

    pub fn void(n: usize) -> Self {
        Self::from_parts(n, Vec::new())
    }

    /// The complex `{∅}` on a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_parts(n, vec![Face::EMPTY])
    }

    /// The full simplex on `{1..n}`.
    pub fn simplex(n: usize) -> Self {
        Self::from_parts(n, vec![Face::full(n)])
    }

    /// Size of the vertex universe.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets in canonical order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension; `None` for VOID and `Some(-1)` for EMPTY.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    /// Union of all faces.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// Every vertex of the universe lies in some face.
    pub fn is_normalized(&self) -> bool {
        self.vertex_set() == Face::full(self.n)
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    fn index(&self) -> &FaceIndex {
        self.index.get_or_init(|| {
            let mut faces: Vec<Face> = self.facets.iter().flat_map(|f| f.subsets()).collect();
            faces.sort_unstable();
            faces.dedup();
            let top = faces.last().map(|f| f.len() + 1).unwrap_or(0);
            let mut offsets = vec![0usize; top + 1];
            for f in &faces {
                offsets[f.len() + 1] += 1;
            }
            for r in 1..offsets.len() {
                offsets[r] += offsets[r - 1];
            }
            FaceIndex { faces, offsets }
        })
    }

    /// All faces in canonical order (cardinality, then lex).
    pub fn faces(&self) -> &[Face] {
        &self.index().faces
    }

    /// Faces of cardinality `r`, lexicographically ordered.
    pub fn faces_of_card(&self, r: usize) -> &[Face] {
        let idx = self.index();
        if r + 1 >= idx.offsets.len() {
            return &[];
        }
        &idx.faces[idx.offsets[r]..idx.offsets[r + 1]]
    }

    pub fn f_vector(&self) -> FVector {
        let idx = self.index();
        FVector(idx.offsets.windows(2).map(|w| w[1] - w[0]).collect())
    }

    /// `f_r`: number of faces of cardinality `r`.
    pub fn f(&self, r: usize) -> usize {
        self.faces_of_card(r).len()
    }

    fn require_non_void(&self, what: &str) -> Result<()> {
        if self.is_void() {
            Err(Error::Domain(format!("{what} is undefined for the void complex")))
        } else {
            Ok(())
        }
    }

    pub fn min_facet_card(&self) -> Result<usize> {
        self.require_non_void("minimum facet cardinality")?;
        Ok(self.facets.iter().map(|f| f.len()).min().unwrap())
    }

    pub fn max_facet_card(&self) -> Result<usize> {
        self.require_non_void("maximum facet cardinality")?;
        Ok(self.facets.iter().map(|f| f.len()).max().unwrap())
    }

    pub fn is_pure(&self) -> Result<bool> {
        Ok(self.min_facet_card()? == self.max_facet_card()?)
    }

    /// `link σ = {τ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅}` on the same vertex universe.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::Domain(format!("{sigma:?} is not a face")));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        // F \ σ over facets F ⊇ σ is already an antichain
        let mut facets: Vec<Face> = facets;
        facets.sort_unstable();
        Ok(Self::from_parts(self.n, facets))
    }

    /// Faces avoiding `v` (the deletion `Δ ∖ v`), on the same universe.
    pub fn deletion(&self, v: VertexId) -> SimplicialComplex {
        Self::from_parts(
            self.n,
            antichain(self.facets.iter().map(|f| f.without(v)).collect()),
        )
    }

    /// Subcomplex induced on the vertex set `w`, on the same universe.
    pub fn induced(&self, w: Face) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        Self::from_parts(
            self.n,
            antichain(self.facets.iter().map(|f| f.intersection(w)).collect()),
        )
    }

    /// Join with `other`, whose vertices are relabeled to `n1+1 ..= n1+n2`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES, "join exceeds {MAX_VERTICES} vertices");
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(b.offset(self.n)));
            }
        }
        facets.sort_unstable();
        Self::from_parts(n, facets)
    }

    /// Cone with a new apex `n + 1`.
    pub fn cone(&self) -> SimplicialComplex {
        self.join(&SimplicialComplex::simplex(1))
    }

    /// Faces of dimension at most `r` (cardinality at most `r + 1`).
    pub fn skeleton(&self, r: isize) -> Result<SimplicialComplex> {
        if r < -1 {
            return Err(Error::Domain(format!("skeleton dimension {r} is below -1")));
        }
        let card = (r + 1) as usize;
        let mut out = Vec::new();
        for &f in &self.facets {
            if f.len() <= card {
                out.push(f);
            } else {
                out.extend(f.subsets().filter(|s| s.len() == card));
            }
        }
        Ok(Self::from_parts(self.n, antichain(out)))
    }

    /// Complex generated by the faces of dimension exactly `r`.
    pub fn pure_skeleton(&self, r: isize) -> Result<SimplicialComplex> {
        self.require_non_void("pure skeleton")?;
        let dim = self.dim().unwrap();
        if r < -1 || r > dim {
            return Err(Error::Domain(format!(
                "pure skeleton dimension {r} outside -1..={dim}"
            )));
        }
        let faces = self.faces_of_card((r + 1) as usize).to_vec();
        Ok(Self::from_parts(self.n, faces))
    }

    /// Whether every face stays a face after replacing a vertex by a
    /// smaller-indexed one.
    pub fn is_shifted(&self) -> bool {
        // checking facets is enough: any other replacement lands inside
        // either the facet itself or a replaced facet
        self.facets.iter().all(|&f| {
            f.vertices().all(|i| {
                (1..i)
                    .filter(|&j| !f.contains(j))
                    .all(|j| self.contains(f.without(i).with(j)))
            })
        })
    }

    /// All vertices `v` such that `(σ ∖ w) ∪ v` is a face for every face `σ`
    /// and every `w ∈ σ`. Empty when the complex is not a near-cone.
    pub fn near_cone_apexes(&self) -> Vec<VertexId> {
        self.vertex_set()
            .vertices()
            .filter(|&v| self.is_near_cone_apex(v))
            .collect()
    }

    pub fn is_near_cone_apex(&self, v: VertexId) -> bool {
        if !self.vertex_set().contains(v) {
            return false;
        }
        self.facets.iter().all(|&f| {
            f.contains(v)
                || f
                    .vertices()
                    .all(|w| self.contains(f.without(w).with(v)))
        })
    }

    /// Inclusion-minimal subsets of `{1..n}` that are not faces.
    pub fn minimal_non_faces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::EMPTY];
        }
        let mut out = Vec::new();
        for &sigma in self.faces() {
            for x in 1..=self.n {
                if sigma.contains(x) {
                    continue;
                }
                // generate each candidate once, from its largest vertex
                if sigma.max_vertex().is_some_and(|m| m > x) {
                    continue;
                }
                let tau = sigma.with(x);
                if self.contains(tau) {
                    continue;
                }
                if tau.vertices().all(|y| self.contains(tau.without(y))) {
                    out.push(tau);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Every minimal non-face has exactly two vertices.
    pub fn is_flag(&self) -> bool {
        !self.is_void() && self.minimal_non_faces().iter().all(|f| f.len() == 2)
    }

    /// Facets are the complements (in `{1..n}`) of the minimal non-faces.
    /// The full simplex maps to VOID and VOID maps to the full simplex.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let full = Face::full(self.n);
        let facets: Vec<Face> = self
            .minimal_non_faces()
            .into_iter()
            .map(|m| full.difference(m))
            .collect();
        Self::from_parts(self.n, antichain(facets))
    }

    /// Applies `map` (indexed by old vertex, entry 0 unused) and places the
    /// result on a universe of `new_n` vertices.
    pub fn relabel(&self, map: &[Option<VertexId>], new_n: usize) -> SimplicialComplex {
        Self::from_parts(
            new_n,
            antichain(self.facets.iter().map(|f| f.relabel(map)).collect()),
        )
    }

    /// Relabels by a permutation given as `perm[old - 1] = new`.
    pub fn permute(&self, perm: &[VertexId]) -> SimplicialComplex {
        assert_eq!(perm.len(), self.n);
        let mut map = vec![None; self.n + 1];
        for (i, &p) in perm.iter().enumerate() {
            map[i + 1] = Some(p);
        }
        self.relabel(&map, self.n)
    }

    /// Drops uncovered vertices, relabeling the rest order-preservingly to
    /// `1..=m`. Returns the normalized complex and `old_of[new - 1]`.
    pub fn normalize(&self) -> (SimplicialComplex, Vec<VertexId>) {
        let old_of: Vec<VertexId> = self.vertex_set().vertices().collect();
        let mut map = vec![None; self.n + 1];
        for (i, &v) in old_of.iter().enumerate() {
            map[v] = Some(i + 1);
        }
        (self.relabel(&map, old_of.len()), old_of)
    }

    /// Same complex on a larger universe.
    pub fn with_universe(&self, n: usize) -> Result<SimplicialComplex> {
        let used = self.vertex_set().max_vertex().unwrap_or(0);
        if n < used || n > MAX_VERTICES {
            return Err(Error::Input(format!("cannot place complex on {n} vertices")));
        }
        Ok(Self::from_parts(n, self.facets.clone()))
    }

    /// Face-set union on the larger of the two universes.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut facets = self.facets.clone();
        facets.extend_from_slice(&other.facets);
        Self::from_parts(self.n.max(other.n), antichain(facets))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(*f))
    }

    /// The `r`-faces containing `v`; its size is `f_{r-1}(link v)`.
    pub fn star_family(&self, v: VertexId, r: usize) -> Vec<Face> {
        self.faces_of_card(r)
            .iter()
            .copied()
            .filter(|f| f.contains(v))
            .collect()
    }
}
