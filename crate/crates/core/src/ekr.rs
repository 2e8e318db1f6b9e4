//! Erdős–Ko–Rado questions for the face families of a complex.
//!
//! A family of `r`-faces is `t`-intersecting when any two members share at
//! least `t` vertices. The complex is `r`-EKR when no such family (with
//! `t = 1`) beats the largest star `{F : |F| = r, v ∈ F}`, and strictly so
//! when every maximum family is a star. Maximum families are maximum
//! cliques of the compatibility graph on the `r`-faces, found exactly by
//! [`crate::clique`].

use std::time::{Duration, Instant};

use crate::clique::{cliques_of_size, maximum_clique, BitGraph, SearchLimits};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{binomial, Face, VertexId};
use crate::graphs::coned_boundary;

/// Limits for exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest number of candidate faces accepted.
    pub max_faces: usize,
    /// Branch-and-bound nodes for a maximum search.
    pub search_nodes: u64,
    /// Branch-and-bound nodes when enumerating all maximum families.
    pub enumeration_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_faces: 2000,
            search_nodes: 50_000_000,
            enumeration_nodes: 1_000_000,
        }
    }
}

impl Budget {
    pub fn with_max_faces(self, max_faces: usize) -> Self {
        Budget { max_faces, ..self }
    }
}

fn check_rank(delta: &SimplicialComplex, r: usize, t: usize) -> Result<()> {
    if t == 0 || r < t {
        return Err(Error::Domain(format!("need 1 <= t <= r, got r = {r}, t = {t}")));
    }
    let top = delta.max_facet_card()?;
    if r > top {
        return Err(Error::Domain(format!(
            "r = {r} exceeds the largest facet cardinality {top}"
        )));
    }
    Ok(())
}

/// Largest star: `(size, core)` where `core` is the `t`-face contained in
/// the most `r`-faces, earliest in canonical order on ties. For `t = 1`
/// the core is a single vertex.
pub fn star_bound_t(delta: &SimplicialComplex, r: usize, t: usize) -> Result<(usize, Face)> {
    check_rank(delta, r, t)?;
    let faces = delta.faces_of_card(r);
    let mut best = (0, Face::EMPTY);
    for &core in delta.faces_of_card(t) {
        let size = faces.iter().filter(|f| core.is_subset(**f)).count();
        if size > best.0 {
            best = (size, core);
        }
    }
    Ok(best)
}

/// Size of the largest `r`-star and the smallest vertex attaining it.
pub fn star_bound(delta: &SimplicialComplex, r: usize) -> Result<(usize, VertexId)> {
    let (size, core) = star_bound_t(delta, r, 1)?;
    Ok((size, core.min_vertex().expect("r >= 1 so stars are centred")))
}

/// A maximum `t`-intersecting family of `r`-faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectingFamily {
    pub size: usize,
    /// Members in canonical order.
    pub witness: Vec<Face>,
    pub nodes: u64,
}

fn compatibility(faces: &[Face], t: usize) -> BitGraph {
    BitGraph::from_relation(faces.len(), |i, j| faces[i].intersection(faces[j]).len() >= t)
}

fn guard(count: usize, budget: &Budget) -> Result<()> {
    if count > budget.max_faces {
        return Err(Error::Resource(format!(
            "{count} candidate faces exceeds the budget of {}",
            budget.max_faces
        )));
    }
    Ok(())
}

fn search(faces: &[Face], graph: &BitGraph, seed: &[Face], budget: &Budget) -> Result<IntersectingFamily> {
    let incumbent: Vec<usize> = seed
        .iter()
        .map(|f| faces.binary_search(f).expect("seed drawn from the candidates"))
        .collect();
    let limits = SearchLimits {
        max_nodes: budget.search_nodes,
    };
    let res = maximum_clique(graph, Some(&incumbent), limits)?;
    let witness: Vec<Face> = res.clique.iter().map(|&i| faces[i]).collect();
    Ok(IntersectingFamily {
        size: witness.len(),
        witness,
        nodes: res.nodes,
    })
}

/// Exact maximum `t`-intersecting family of `r`-faces. The best star seeds
/// the search, so ties resolve to a star.
pub fn max_intersecting(delta: &SimplicialComplex, r: usize, t: usize, budget: &Budget) -> Result<IntersectingFamily> {
    let (_, core) = star_bound_t(delta, r, t)?;
    let faces = delta.faces_of_card(r);
    guard(faces.len(), budget)?;
    let star: Vec<Face> = faces.iter().copied().filter(|f| core.is_subset(*f)).collect();
    search(faces, &compatibility(faces, t), &star, budget)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EkrVerdict {
    pub r: usize,
    pub t: usize,
    pub star_bound: usize,
    /// Smallest vertex of the best star's core.
    pub best_star_vertex: VertexId,
    pub best_star_core: Face,
    pub max_family_size: usize,
    /// A maximum family; when EKR fails it is larger than every star.
    pub witness: Vec<Face>,
    pub is_ekr: bool,
    /// Filled in by [`is_strict_r_ekr`].
    pub is_strict: Option<bool>,
    pub elapsed: Duration,
}

/// Compare the largest `t`-intersecting family with the largest star.
pub fn is_r_ekr(delta: &SimplicialComplex, r: usize, t: usize, budget: &Budget) -> Result<EkrVerdict> {
    let start = Instant::now();
    let (star, core) = star_bound_t(delta, r, t)?;
    let family = max_intersecting(delta, r, t, budget)?;
    Ok(EkrVerdict {
        r,
        t,
        star_bound: star,
        best_star_vertex: core.min_vertex().unwrap(),
        best_star_core: core,
        max_family_size: family.size,
        is_ekr: family.size <= star,
        witness: family.witness,
        is_strict: None,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictVerdict {
    pub ekr: EkrVerdict,
    pub strict: bool,
    /// Number of intersecting families of maximum size.
    pub maximum_families: usize,
    /// A maximum family that is not a star, when one exists.
    pub non_star: Option<Vec<Face>>,
}

/// Strict `r`-EKR: the complex is `r`-EKR and every maximum intersecting
/// family is a star. Enumerates all maximum families.
pub fn is_strict_r_ekr(delta: &SimplicialComplex, r: usize, budget: &Budget) -> Result<StrictVerdict> {
    let mut ekr = is_r_ekr(delta, r, 1, budget)?;
    let faces = delta.faces_of_card(r);
    let graph = compatibility(faces, 1);
    let limits = SearchLimits {
        max_nodes: budget.enumeration_nodes,
    };
    let all = cliques_of_size(&graph, ekr.max_family_size, limits)?;
    let non_star = all.iter().find_map(|c| {
        let family: Vec<Face> = c.iter().map(|&i| faces[i]).collect();
        let common = family.iter().fold(Face::full(delta.n()), |acc, f| acc.intersection(*f));
        let is_star = common
            .vertices()
            .any(|v| faces.iter().filter(|f| f.contains(v)).count() == family.len());
        (!is_star).then_some(family)
    });
    let strict = ekr.is_ekr && non_star.is_none();
    ekr.is_strict = Some(strict);
    Ok(StrictVerdict {
        ekr,
        strict,
        maximum_families: all.len(),
        non_star,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChvatalVerdict {
    pub holds: bool,
    /// Largest number of nonempty faces through one vertex.
    pub star_size: usize,
    pub best_vertex: VertexId,
    pub max_family_size: usize,
    pub witness: Vec<Face>,
}

/// Among all nonempty faces (any cardinality), is some largest
/// intersecting family a star?
pub fn chvatal_check(delta: &SimplicialComplex, budget: &Budget) -> Result<ChvatalVerdict> {
    if delta.is_void() {
        return Err(Error::Domain("void complex has no faces".into()));
    }
    let faces: Vec<Face> = delta.faces().iter().copied().filter(|f| !f.is_empty()).collect();
    guard(faces.len(), budget)?;
    if faces.is_empty() {
        return Err(Error::Domain("complex has no vertices".into()));
    }
    let mut best = (0, 0);
    for v in delta.vertex_set().vertices() {
        let size = faces.iter().filter(|f| f.contains(v)).count();
        if size > best.0 {
            best = (size, v);
        }
    }
    // `faces` is in canonical order, so binary search in `search` works
    let star: Vec<Face> = faces.iter().copied().filter(|f| f.contains(best.1)).collect();
    let family = search(&faces, &compatibility(&faces, 1), &star, budget)?;
    Ok(ChvatalVerdict {
        holds: family.size <= best.0,
        star_size: best.0,
        best_vertex: best.1,
        max_family_size: family.size,
        witness: family.witness,
    })
}

/// Star and family counts for [`coned_boundary`]`(n, k)` at rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConedBoundaryCounts {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// Largest `r`-star, by closed form.
    pub star: u64,
    /// `r`-faces containing a facet of the base boundary: `(n+1) C(k, r-n)`.
    /// Intersecting since `n >= 2`.
    pub family: u64,
    /// `n C(n+k, r-1)`, a coarser closed form that bounds `star` from above.
    pub star_upper: u64,
    /// Direct counts on the built complex, when it is small enough.
    pub star_direct: Option<u64>,
    pub family_direct: Option<u64>,
}

/// Largest vertex count for which [`coned_boundary_counts`] builds the
/// complex and counts directly.
pub const CONED_DIRECT_MAX_VERTICES: usize = 24;

/// Closed-form counts for the coned boundary, with `k > n >= 2` and
/// `n <= r <= (k+n)/2`.
///
/// With `m = r - 1`, a base vertex `v` lies in
/// `n (C(n-1+k, m) - C(n-1, m)) + [m < n] C(n, m)` faces of size `r`: those
/// using a cone point over the facet missing `u != v`, plus the faces inside
/// the base boundary. A cone point lies in `C(n+k-1, m)`.
pub fn coned_boundary_counts(n: usize, k: usize, r: usize) -> Result<ConedBoundaryCounts> {
    if n < 2 || k <= n {
        return Err(Error::Domain(format!("need k > n >= 2, got n = {n}, k = {k}")));
    }
    if r < n || r > (k + n) / 2 {
        return Err(Error::Domain(format!(
            "need {n} <= r <= {}, got r = {r}",
            (k + n) / 2
        )));
    }
    let m = r - 1;
    let base = n as u64 * (binomial(n - 1 + k, m) - binomial(n - 1, m))
        + if m < n { binomial(n, m) } else { 0 };
    let star = base.max(binomial(n + k - 1, m));
    let family = (n as u64 + 1) * binomial(k, r - n);
    let star_upper = n as u64 * binomial(n + k, m);
    let (star_direct, family_direct) = if (k + 1) * (n + 1) <= CONED_DIRECT_MAX_VERTICES {
        let delta = coned_boundary(n, k)?;
        let (s, _) = star_bound(&delta, r)?;
        let bases: Vec<Face> = (1..=n + 1).map(|u| Face::full(n + 1).without(u)).collect();
        let fam = delta
            .faces_of_card(r)
            .iter()
            .filter(|f| bases.iter().any(|b| b.is_subset(**f)))
            .count();
        (Some(s as u64), Some(fam as u64))
    } else {
        (None, None)
    };
    Ok(ConedBoundaryCounts {
        n,
        k,
        r,
        star,
        family,
        star_upper,
        star_direct,
        family_direct,
    })
}
