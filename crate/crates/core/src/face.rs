//! Faces as fixed-width vertex bit masks.
//!
//! Vertex `v` (1-based) is stored in bit `v - 1`, so a [`Face`] can hold any
//! subset of `{1, ..., 64}`. The empty face is a legal value.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex index a [`Face`] can carry.
pub const MAX_VERTICES: usize = 64;

/// 1-based vertex identifier.
pub type VertexId = usize;

/// An immutable finite set of vertices.
///
/// `Ord` is the canonical order used throughout the crate: first by
/// cardinality, then lexicographically on the increasing vertex sequence
/// (`{1,2} < {1,3} < {2,3}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a face from 1-based vertex indices. Duplicates collapse.
    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 {
                return Err(Error::Input("vertex indices are 1-based; got 0".into()));
            }
            if v > MAX_VERTICES {
                return Err(Error::Input(format!(
                    "vertex {v} exceeds the supported maximum of {MAX_VERTICES}"
                )));
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    /// Panicking variant of [`Face::from_vertices`] for literals in tests and generators.
    pub fn of(vertices: &[VertexId]) -> Self {
        Self::from_vertices(vertices.iter().copied()).expect("valid vertex list")
    }

    /// The face `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: VertexId) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v));
        Face(1 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension `|σ| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: VertexId) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn with(self, v: VertexId) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: VertexId) -> Face {
        self.difference(Face::singleton(v))
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn min_vertex(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.vertices().collect()
    }

    /// Position of `v` among the vertices of this face (0-based), if present.
    pub fn position(self, v: VertexId) -> Option<usize> {
        self.contains(v)
            .then(|| (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize)
    }

    /// All subsets of this face, including the empty face and the face itself.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Lexicographic comparison of the increasing vertex sequences.
    ///
    /// For faces of equal cardinality this is the column order used by
    /// shifting: `{1,2} < {1,3} < ... < {2,3}`.
    pub fn lex_cmp(self, other: Face) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let (a_has, b_has) = (self.0 & low != 0, other.0 & low != 0);
        // first differing position: the sequence holding the smaller vertex
        // there is smaller, unless the other sequence already ended
        let below = low - 1;
        let a_rest = self.0 & !below;
        let b_rest = other.0 & !below;
        match (a_has, b_has) {
            (true, false) => {
                if b_rest == 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (false, true) => {
                if a_rest == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            _ => unreachable!(),
        }
    }

    /// Applies a vertex relabeling. `map[v]` is the new label of vertex `v`
    /// (index 0 unused). Vertices without an image are dropped.
    pub fn relabel(self, map: &[Option<VertexId>]) -> Face {
        let mut bits = 0u64;
        for v in self.vertices() {
            if let Some(Some(w)) = map.get(v) {
                bits |= 1 << (w - 1);
            }
        }
        Face(bits)
    }

    /// Shifts every vertex label up by `offset`.
    pub fn offset(self, offset: usize) -> Face {
        if self.0 == 0 {
            return self;
        }
        assert!(self.max_vertex().unwrap() + offset <= MAX_VERTICES);
        Face(self.0 << offset)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Face {
    /// Whitespace-separated vertex list, as in `.cplx` facet lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Subset enumeration of a mask (Gosper-free submask walk).
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Face(cur))
    }
}

/// All `r`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, r: usize) -> Vec<Face> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut idx: Vec<usize> = (1..=r).collect();
    loop {
        out.push(Face::of(&idx));
        // advance to the next combination in lex order
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - (r - 1 - i) {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Binomial coefficient with exact `u128` intermediate arithmetic.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
