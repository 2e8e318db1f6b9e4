//! Exterior algebraic shifting over GF(p).
//!
//! For one random `n x n` matrix `g`, the cardinality-`r` part of the shift
//! is read off the compound matrix whose rows are the `r`-faces `T` of the
//! complex, whose columns are all `r`-subsets `S` of `[n]` in lexicographic
//! order, and whose entries are the minors `det g[T, S]`. The shifted
//! `r`-faces are the greedily independent columns.
//!
//! A random matrix over a large prime stands in for a generic one. Bad draws
//! are caught structurally (rank deficit, non-shifted or non-closed output)
//! and retried with a fresh seed.

use std::collections::HashSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{k_subsets, Face, VertexId};
use crate::linalg::{det_in_place, IncrementalBasis, PrimeField, PrimeMatrix};

/// Largest vertex universe `exterior_shift` accepts.
pub const MAX_SHIFT_VERTICES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftConfig {
    pub field: PrimeField,
    pub seed: u64,
    /// Total number of attempts, each with its own seed. At least 1.
    pub max_retries: usize,
}

impl Default for ShiftConfig {
    fn default() -> Self {
        ShiftConfig {
            field: PrimeField::default_field(),
            seed: 0,
            max_retries: 5,
        }
    }
}

impl ShiftConfig {
    pub fn new(prime: u64, seed: u64) -> Result<Self> {
        Ok(ShiftConfig {
            field: PrimeField::new(prime)?,
            seed,
            ..Self::default()
        })
    }

    pub fn with_seed(self, seed: u64) -> Self {
        ShiftConfig { seed, ..self }
    }

    /// Seed used by the `attempt`-th try (0-based); attempt 0 uses `seed` itself.
    pub fn attempt_seed(&self, attempt: usize) -> u64 {
        self.seed
            .wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftResult {
    pub shifted: SimplicialComplex,
    /// Attempts beyond the first.
    pub retries_used: usize,
    pub seeds_used: Vec<u64>,
}

/// Exterior algebraic shift of `delta`, with genericity retries.
pub fn exterior_shift(delta: &SimplicialComplex, cfg: &ShiftConfig) -> Result<ShiftResult> {
    if delta.is_void() {
        return Err(Error::Domain("cannot shift the void complex".into()));
    }
    if delta.n() > MAX_SHIFT_VERTICES {
        return Err(Error::Resource(format!(
            "shifting is limited to {MAX_SHIFT_VERTICES} vertices, got {}",
            delta.n()
        )));
    }
    let attempts = cfg.max_retries.max(1);
    let mut seeds_used = Vec::with_capacity(attempts);
    let mut last_reason = String::new();
    for attempt in 0..attempts {
        let seed = cfg.attempt_seed(attempt);
        seeds_used.push(seed);
        let g = PrimeMatrix::random(cfg.field, delta.n(), delta.n(), seed);
        match shift_with_matrix(delta, &g) {
            Ok(shifted) => {
                return Ok(ShiftResult {
                    shifted,
                    retries_used: attempt,
                    seeds_used,
                })
            }
            Err(reason) => last_reason = reason,
        }
    }
    Err(Error::Genericity {
        attempts,
        reason: last_reason,
    })
}

/// Shift computed with an explicit basis-change matrix `g` (`n x n`).
///
/// Returns a description of the failed structural check when `g` is not
/// generic enough for `delta`.
pub fn shift_with_matrix(
    delta: &SimplicialComplex,
    g: &PrimeMatrix,
) -> std::result::Result<SimplicialComplex, String> {
    let n = delta.n();
    assert_eq!((g.rows(), g.cols()), (n, n));
    let field = g.field();
    let top = delta.max_facet_card().map_err(|e| e.to_string())?;

    let mut chosen: Vec<Face> = vec![Face::EMPTY];
    let mut minor = Vec::new();
    for r in 1..=top {
        let rows = delta.faces_of_card(r);
        let mut basis = IncrementalBasis::new(field, rows.len());
        let mut found = 0;
        for s in k_subsets(n, r) {
            if found == rows.len() {
                break;
            }
            let column = rows
                .iter()
                .map(|&t| compound_entry(field, g, t, s, &mut minor))
                .collect();
            if basis.insert(column) {
                chosen.push(s);
                found += 1;
            }
        }
        if found < rows.len() {
            return Err(format!(
                "compound matrix at cardinality {r} has rank {found} < {}",
                rows.len()
            ));
        }
    }

    let members: HashSet<Face> = chosen.iter().copied().collect();
    if let Some(bad) = chosen
        .iter()
        .find(|f| f.vertices().any(|v| !members.contains(&f.without(v))))
    {
        return Err(format!("selected faces are not downward closed at {bad:?}"));
    }
    let shifted =
        SimplicialComplex::from_facets(chosen, Some(n)).map_err(|e| e.to_string())?;
    if !shifted.is_shifted() {
        return Err("selected complex is not shifted".into());
    }
    if shifted.f_vector() != delta.f_vector() {
        return Err("f-vector changed".into());
    }
    Ok(shifted)
}

fn compound_entry(field: PrimeField, g: &PrimeMatrix, rows: Face, cols: Face, buf: &mut Vec<u64>) -> u64 {
    buf.clear();
    for i in rows.vertices() {
        for j in cols.vertices() {
            buf.push(g.get(i - 1, j - 1));
        }
    }
    det_in_place(field, buf, rows.len())
}

/// Shift of a uniform family: the `r`-faces of the shift of the complex it
/// generates on `{1..n}`.
pub fn shift_family(family: &[Face], n: usize, cfg: &ShiftConfig) -> Result<Vec<Face>> {
    let Some(first) = family.first() else {
        return Ok(Vec::new());
    };
    let r = first.len();
    if family.iter().any(|f| f.len() != r) {
        return Err(Error::Domain("family is not uniform".into()));
    }
    if r == 0 {
        return Ok(vec![Face::EMPTY]);
    }
    let generated = SimplicialComplex::from_facets(family.iter().copied(), Some(n))?;
    let shifted = exterior_shift(&generated, cfg)?.shifted;
    Ok(shifted.faces_of_card(r).to_vec())
}

/// Relabels the link of `apex` onto `{1..n-1}`, order-preservingly.
fn link_on_remaining(delta: &SimplicialComplex, apex: VertexId) -> Result<SimplicialComplex> {
    let link = delta.link(Face::singleton(apex))?;
    let n = delta.n();
    let map: Vec<Option<VertexId>> = (0..=n)
        .map(|v| match v {
            0 => None,
            v if v < apex => Some(v),
            v if v == apex => None,
            v => Some(v - 1),
        })
        .collect();
    Ok(link.relabel(&map, n - 1))
}

/// Outcome of checking Nevo's description of the shift of a near-cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NevoCheck {
    pub holds: bool,
    /// Shift of the apex link, placed on vertices `2..=n`.
    pub shifted_link: SimplicialComplex,
    /// Facets of the shift that avoid vertex 1 (the family `B`).
    pub extra_facets: Vec<Face>,
    /// First face on which the two sides disagree.
    pub witness: Option<Face>,
}

/// For a near-cone with apex `apex`, checks that the link of vertex 1 in the
/// shift equals the shift of the apex link (on vertices `2..=n`) and that
/// every face of the shift containing 1 lies in the cone over that shift.
pub fn check_nevo(delta: &SimplicialComplex, apex: VertexId, cfg: &ShiftConfig) -> Result<NevoCheck> {
    if !delta.is_near_cone_apex(apex) {
        return Err(Error::Domain(format!(
            "vertex {apex} is not a near-cone apex"
        )));
    }
    let n = delta.n();
    let shifted = exterior_shift(delta, cfg)?.shifted;
    let link = link_on_remaining(delta, apex)?;
    let shifted_link_small = exterior_shift(&link, cfg)?.shifted;
    let up: Vec<Option<VertexId>> = (0..n).map(|v| (v > 0).then_some(v + 1)).collect();
    let shifted_link = shifted_link_small.relabel(&up, n);

    let one = Face::singleton(1);
    let link_one = shifted.link(one)?;
    let mut witness = link_one
        .faces()
        .iter()
        .chain(shifted_link.faces())
        .copied()
        .find(|&f| link_one.contains(f) != shifted_link.contains(f));
    if witness.is_none() {
        witness = shifted
            .facets()
            .iter()
            .copied()
            .find(|f| f.contains(1) && !shifted_link.contains(f.without(1)));
    }
    let extra_facets = shifted
        .facets()
        .iter()
        .copied()
        .filter(|f| !f.contains(1))
        .collect();
    Ok(NevoCheck {
        holds: witness.is_none(),
        shifted_link,
        extra_facets,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shift(d: &SimplicialComplex) -> SimplicialComplex {
        exterior_shift(d, &ShiftConfig::default()).unwrap().shifted
    }

    #[test]
    fn two_disjoint_edges() {
        let d = SimplicialComplex::of(&[&[1, 2], &[3, 4]]);
        assert_eq!(shift(&d), SimplicialComplex::of(&[&[1, 2], &[1, 3], &[4]]));
    }

    #[test]
    fn shifted_input_is_fixed() {
        let d = SimplicialComplex::of(&[&[1, 2], &[1, 3], &[4]]);
        assert_eq!(shift(&d), d);
        let s = SimplicialComplex::simplex(5);
        assert_eq!(shift(&s), s);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(exterior_shift(&SimplicialComplex::void(3), &ShiftConfig::default()).is_err());
        let e = SimplicialComplex::empty(3);
        assert_eq!(shift(&e), e);
        let big = SimplicialComplex::simplex(21);
        assert!(matches!(
            exterior_shift(&big, &ShiftConfig::default()),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn families() {
        let cfg = ShiftConfig::default();
        assert_eq!(shift_family(&[Face::of(&[1, 2])], 4, &cfg).unwrap(), vec![Face::of(&[1, 2])]);
        assert_eq!(shift_family(&[Face::of(&[3, 4])], 4, &cfg).unwrap(), vec![Face::of(&[1, 2])]);
        assert_eq!(
            shift_family(&[Face::of(&[1, 2]), Face::of(&[3, 4])], 4, &cfg).unwrap(),
            vec![Face::of(&[1, 2]), Face::of(&[1, 3])]
        );
        assert!(shift_family(&[Face::of(&[1, 2]), Face::of(&[3])], 4, &cfg).is_err());
    }

    #[test]
    fn nevo_on_a_cone() {
        let cone = SimplicialComplex::of(&[&[1, 2], &[3, 4]]).cone();
        let check = check_nevo(&cone, 5, &ShiftConfig::default()).unwrap();
        assert!(check.holds);
        assert!(check.extra_facets.is_empty());
        assert!(check_nevo(&SimplicialComplex::of(&[&[1, 2], &[3, 4]]), 1, &ShiftConfig::default()).is_err());
    }

    #[test]
    fn singular_matrix_is_reported() {
        let d = SimplicialComplex::of(&[&[1, 2], &[3, 4]]);
        let g = PrimeMatrix::zeros(PrimeField::default_field(), 4, 4);
        assert!(shift_with_matrix(&d, &g).is_err());
    }

    #[test]
    fn small_prime_eventually_gives_up_or_succeeds() {
        // over GF(2) a 4x4 random matrix is singular often; either outcome
        // must be well-formed
        let cfg = ShiftConfig::new(2, 3).unwrap();
        let d = SimplicialComplex::of(&[&[1, 2], &[3, 4]]);
        match exterior_shift(&d, &cfg) {
            Ok(res) => {
                assert!(res.shifted.is_shifted());
                assert_eq!(res.seeds_used.len(), res.retries_used + 1);
            }
            Err(Error::Genericity { attempts, .. }) => assert_eq!(attempts, 5),
            Err(e) => panic!("unexpected {e}"),
        }
    }
}
