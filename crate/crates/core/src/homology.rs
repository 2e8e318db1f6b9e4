//! Reduced simplicial homology over GF(p) and the Cohen-Macaulay family of
//! predicates built on it.
//!
//! Degrees follow dimension: `H̃_{-1}` is nonzero exactly for the EMPTY
//! complex `{∅}`, whose one face is the empty face. All chain groups are
//! indexed here by face cardinality `c`, so `∂_c` maps cardinality-`c`
//! chains to cardinality-`(c-1)` chains and `∂_1` is the augmentation.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{PrimeField, PrimeMatrix};
use crate::shifting::{exterior_shift, ShiftConfig};

/// Boundary map from cardinality-`c` chains to cardinality-`(c-1)` chains.
///
/// Rows are the `(c-1)`-faces and columns the `c`-faces, both in
/// lexicographic order. Deleting the vertex in position `i` contributes
/// `(-1)^i`.
pub fn boundary_matrix(delta: &SimplicialComplex, c: usize, field: PrimeField) -> PrimeMatrix {
    let cols = delta.faces_of_card(c);
    if c == 0 {
        return PrimeMatrix::zeros(field, 0, cols.len());
    }
    let rows = delta.faces_of_card(c - 1);
    let mut m = PrimeMatrix::zeros(field, rows.len(), cols.len());
    let minus_one = field.neg(1);
    for (j, &sigma) in cols.iter().enumerate() {
        for (pos, v) in sigma.vertices().enumerate() {
            let i = rows
                .binary_search(&sigma.without(v))
                .expect("complex is downward closed");
            m.set(i, j, if pos % 2 == 0 { 1 } else { minus_one });
        }
    }
    m
}

/// Reduced Betti numbers over one prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    /// `dims[i] = dim H̃_{i-1}`, for degrees `-1 ..= dim Δ`. Empty for VOID.
    pub dims: Vec<usize>,
    pub prime: u64,
}

impl BettiVector {
    /// `dim H̃_degree`, zero outside the stored range.
    pub fn get(&self, degree: isize) -> usize {
        if degree < -1 {
            return 0;
        }
        self.dims.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    /// Smallest degree with nonzero homology, if any.
    pub fn first_nonzero(&self) -> Option<isize> {
        self.dims.iter().position(|&d| d != 0).map(|i| i as isize - 1)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Alternating sum `Σ (-1)^i dim H̃_i`.
    pub fn reduced_euler(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// `dim H̃_{c-1} = f_c - rank ∂_c - rank ∂_{c+1}`.
pub fn reduced_betti(delta: &SimplicialComplex, field: PrimeField) -> BettiVector {
    let Some(dim) = delta.dim() else {
        return BettiVector {
            dims: Vec::new(),
            prime: field.modulus(),
        };
    };
    let top = (dim + 1) as usize;
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|c| boundary_matrix(delta, c, field).rank())
        .collect();
    let dims = (0..=top)
        .map(|c| delta.f(c) - ranks[c] - ranks[c + 1])
        .collect();
    BettiVector {
        dims,
        prime: field.modulus(),
    }
}

/// Result of a Cohen-Macaulay test; `witness` is the first face (in
/// canonical order) whose link has homology below its dimension, with the
/// offending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmCheck {
    pub holds: bool,
    pub witness: Option<(Face, isize)>,
}

/// Cohen-Macaulay over GF(p): `H̃_i(link σ) = 0` for every face `σ`
/// (including `∅`) and every `i < dim link σ`. VOID passes vacuously.
pub fn is_cohen_macaulay(delta: &SimplicialComplex, field: PrimeField) -> CmCheck {
    for &sigma in delta.faces() {
        let link = delta.link(sigma).expect("face of the complex");
        let dim = link.dim().unwrap();
        let betti = reduced_betti(&link, field);
        if let Some(i) = betti.first_nonzero() {
            if i < dim {
                return CmCheck {
                    holds: false,
                    witness: Some((sigma, i)),
                };
            }
        }
    }
    CmCheck {
        holds: true,
        witness: None,
    }
}

/// Every pure `r`-skeleton, `0 <= r <= dim`, is Cohen-Macaulay.
pub fn is_sequentially_cm(delta: &SimplicialComplex, field: PrimeField) -> bool {
    let Some(dim) = delta.dim() else {
        return true;
    };
    (0..=dim).all(|r| {
        let skel = delta.pure_skeleton(r).expect("r within range");
        is_cohen_macaulay(&skel, field).holds
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DepthMethod {
    /// Vanishing of link homology below `d - |σ|`.
    Links,
    /// Minimum facet dimension of the exterior shift.
    Shift,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    /// A dimension: `-1 <= depth <= dim Δ`.
    pub depth: isize,
    pub method: DepthMethod,
    /// For [`DepthMethod::Links`]: the faces `σ` and degrees `i` whose
    /// nonvanishing `H̃_i(link σ)` pins the depth (`i + |σ| = depth`).
    pub details: Vec<(Face, isize)>,
}

/// Depth over GF(p) as a dimension. EMPTY has depth -1; VOID is rejected.
pub fn depth(delta: &SimplicialComplex, method: DepthMethod, cfg: &ShiftConfig) -> Result<DepthReport> {
    if delta.is_void() {
        return Err(Error::Domain("depth of the void complex".into()));
    }
    match method {
        DepthMethod::Links => Ok(depth_by_links(delta, cfg.field)),
        DepthMethod::Shift => {
            let shifted = exterior_shift(delta, cfg)?.shifted;
            Ok(DepthReport {
                depth: shifted.min_facet_card()? as isize - 1,
                method,
                details: Vec::new(),
            })
        }
    }
}

fn depth_by_links(delta: &SimplicialComplex, field: PrimeField) -> DepthReport {
    // largest d with H̃_i(link σ) = 0 for all σ and i < d - |σ|, i.e. the
    // minimum over σ of (first nonzero degree of link σ) + |σ|
    let mut best = delta.dim().unwrap();
    let mut details = Vec::new();
    for &sigma in delta.faces() {
        let link = delta.link(sigma).expect("face of the complex");
        let Some(i) = reduced_betti(&link, field).first_nonzero() else {
            continue;
        };
        let bound = i + sigma.len() as isize;
        if bound < best {
            best = bound;
            details.clear();
        }
        if bound == best {
            details.push((sigma, i));
        }
    }
    DepthReport {
        depth: best,
        method: DepthMethod::Links,
        details,
    }
}

/// `depth(Δ1 * Δ2) == depth Δ1 + depth Δ2 + 1`, all by the links method.
pub fn depth_of_join_check(a: &SimplicialComplex, b: &SimplicialComplex, field: PrimeField) -> Result<bool> {
    if a.is_void() || b.is_void() {
        return Err(Error::Domain("join depth needs non-void complexes".into()));
    }
    let da = depth_by_links(a, field).depth;
    let db = depth_by_links(b, field).depth;
    let dj = depth_by_links(&a.join(b), field).depth;
    Ok(dj == da + db + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default_field()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::of(&[&[1, 2], &[1, 3], &[2, 3]])
    }

    #[test]
    fn augmentation_row() {
        let pts = SimplicialComplex::of(&[&[1], &[2], &[3]]);
        let d1 = boundary_matrix(&pts, 1, f());
        assert_eq!((d1.rows(), d1.cols()), (1, 3));
        assert!((0..3).all(|j| d1.get(0, j) == 1));
    }

    #[test]
    fn hollow_triangle_ranks() {
        let d2 = boundary_matrix(&hollow_triangle(), 2, f());
        assert_eq!(d2.rank(), 2);
        let b = reduced_betti(&hollow_triangle(), f());
        assert_eq!(b.dims, vec![0, 0, 1]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let d = SimplicialComplex::simplex(5);
        for c in 1..5 {
            let prod = boundary_matrix(&d, c, f())
                .mul(&boundary_matrix(&d, c + 1, f()))
                .unwrap();
            assert!(prod.is_zero(), "∂_{c} ∂_{} != 0", c + 1);
        }
    }

    #[test]
    fn degenerate_betti() {
        assert!(reduced_betti(&SimplicialComplex::simplex(4), f()).is_acyclic());
        assert_eq!(reduced_betti(&SimplicialComplex::empty(2), f()).dims, vec![1]);
        assert!(reduced_betti(&SimplicialComplex::void(2), f()).dims.is_empty());
    }

    #[test]
    fn cm_basics() {
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex(4), f()).holds);
        let two = SimplicialComplex::of(&[&[1, 2], &[3, 4]]);
        let check = is_cohen_macaulay(&two, f());
        assert!(!check.holds);
        assert_eq!(check.witness, Some((Face::EMPTY, 0)));
        assert!(is_cohen_macaulay(&SimplicialComplex::void(3), f()).holds);
        assert!(is_cohen_macaulay(&SimplicialComplex::empty(3), f()).holds);
    }

    #[test]
    fn depth_examples() {
        let cfg = ShiftConfig::default();
        for m in [DepthMethod::Links, DepthMethod::Shift] {
            assert_eq!(depth(&SimplicialComplex::simplex(4), m, &cfg).unwrap().depth, 3);
            assert_eq!(depth(&SimplicialComplex::empty(2), m, &cfg).unwrap().depth, -1);
            let two = SimplicialComplex::of(&[&[1, 2], &[3, 4]]);
            assert_eq!(depth(&two, m, &cfg).unwrap().depth, 0);
        }
        assert!(depth(&SimplicialComplex::void(2), DepthMethod::Links, &cfg).is_err());
    }

    #[test]
    fn join_of_points() {
        let p = SimplicialComplex::simplex(1);
        assert!(depth_of_join_check(&p, &p, f()).unwrap());
    }

    #[test]
    fn characteristic_two_sees_projective_plane() {
        // six-vertex RP^2: H̃_1 vanishes over odd primes but not over GF(2)
        let rp2 = SimplicialComplex::of(&[
            &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
            &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
        ]);
        assert!(reduced_betti(&rp2, f()).is_acyclic());
        let two = PrimeField::new(2).unwrap();
        assert_eq!(reduced_betti(&rp2, two).dims, vec![0, 0, 1, 1]);
        assert!(is_cohen_macaulay(&rp2, f()).holds);
        assert!(!is_cohen_macaulay(&rp2, two).holds);
    }
}
