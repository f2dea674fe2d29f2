//! Vector arrangements and signed vector arrangements.
//!
//! An arrangement is an ordered list of vectors ν₁,…,νₙ in ℚ^k; the
//! associated central hyperplane arrangement has Hᵢ = νᵢ^⊥ (the whole space
//! when νᵢ = 0).  To every subset S ⊆ [n] belong three spaces:
//!
//! * `H_S` — the intersection of the hyperplanes indexed by S,
//! * `V_S` — the span of the vectors indexed by S,
//! * `W_S` — the linear dependencies supported on S (inside ℚ^n).
//!
//! Subsets are bitmasks with bit i ↔ vector i (0-based); iteration order is
//! ascending numeric value.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::ArrError;
use crate::linalg::{dot, mask_bits, Rational, RationalMatrix, Subspace};

/// Sign attached to a vector of a signed arrangement.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

/// An ordered list of vectors in ℚ^k.  Zero vectors are allowed and encode
/// degenerate hyperplanes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorArrangement {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
}

/// The three subset spaces of one subset, bundled.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetSpaces {
    pub subset: u32,
    pub h: Subspace,
    pub v: Subspace,
    pub w: Subspace,
}

impl VectorArrangement {
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length != ambient dimension");
        }
        assert!(vectors.len() <= 31, "at most 31 vectors supported");
        VectorArrangement {
            ambient_dim,
            vectors,
        }
    }

    /// The empty arrangement (no vectors) in ℚ^k.
    pub fn empty(ambient_dim: usize) -> Self {
        Self::new(ambient_dim, Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, i: usize) -> &[Rational] {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.len()) - 1
    }

    /// H_S: common kernel of the functionals ⟨ν_s, ·⟩ for s ∈ S.
    pub fn h_space(&self, subset: u32) -> Subspace {
        let rows: Vec<Vec<Rational>> = mask_bits(subset)
            .into_iter()
            .map(|i| self.vectors[i].clone())
            .collect();
        if rows.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        RationalMatrix::from_rows(rows).kernel_basis()
    }

    /// V_S: span of the vectors indexed by S.
    pub fn v_space(&self, subset: u32) -> Subspace {
        let rows: Vec<Vec<Rational>> = mask_bits(subset)
            .into_iter()
            .map(|i| self.vectors[i].clone())
            .collect();
        Subspace::from_rows(self.ambient_dim, rows)
    }

    /// W_S ⊆ ℚ^n: dependencies Σ wᵢνᵢ = 0 with support inside S.
    pub fn w_space(&self, subset: u32) -> Subspace {
        let n = self.len();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        // Dependency conditions: one row per ambient coordinate.
        for j in 0..self.ambient_dim {
            rows.push((0..n).map(|i| self.vectors[i][j].clone()).collect());
        }
        // Support conditions: w_r = 0 for r outside S.
        for r in 0..n {
            if subset >> r & 1 == 0 {
                let mut e = vec![Rational::zero(); n];
                e[r] = Rational::one();
                rows.push(e);
            }
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        RationalMatrix::from_rows(rows).kernel_basis()
    }

    /// All three canonical subspaces of a subset.
    pub fn subset_spaces(&self, subset: u32) -> SubsetSpaces {
        assert!(subset <= self.full_mask() || (self.len() == 0 && subset == 0));
        SubsetSpaces {
            subset,
            h: self.h_space(subset),
            v: self.v_space(subset),
            w: self.w_space(subset),
        }
    }

    /// The Gale dual arrangement: ν_i^∨ is the orthogonal projection of eᵢ
    /// onto W = W_{[n]}, in the canonical RREF basis of W.
    pub fn gale_dual(&self) -> VectorArrangement {
        let n = self.len();
        let w = self.w_space(self.full_mask());
        let d = w.dim();
        let mut dual_vectors = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            dual_vectors.push(w.project_coords(&e));
        }
        VectorArrangement::new(d, dual_vectors)
    }

    /// Removes vector i, preserving the order of the rest.
    pub fn delete(&self, i: usize) -> Result<VectorArrangement, ArrError> {
        if i >= self.len() {
            return Err(ArrError::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let mut vectors = self.vectors.clone();
        vectors.remove(i);
        Ok(VectorArrangement::new(self.ambient_dim, vectors))
    }

    /// Restriction to νᵢ^⊥: ambient becomes the canonical basis of νᵢ^⊥
    /// (the whole space when νᵢ = 0) and the other vectors are orthogonally
    /// projected and re-expressed in that basis.
    pub fn restrict(&self, i: usize) -> Result<VectorArrangement, ArrError> {
        Ok(self.restrict_with_basis(i)?.0)
    }

    /// Like [`restrict`](Self::restrict) but also returns the subspace
    /// νᵢ^⊥ whose RREF basis carries the new coordinates.
    pub fn restrict_with_basis(&self, i: usize) -> Result<(VectorArrangement, Subspace), ArrError> {
        if i >= self.len() {
            return Err(ArrError::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let perp = if self.vectors[i].iter().all(|c| c.is_zero()) {
            Subspace::full(self.ambient_dim)
        } else {
            RationalMatrix::from_rows(vec![self.vectors[i].clone()]).kernel_basis()
        };
        let mut vectors = Vec::with_capacity(self.len() - 1);
        for (j, v) in self.vectors.iter().enumerate() {
            if j == i {
                continue;
            }
            vectors.push(perp.project_coords(v));
        }
        Ok((VectorArrangement::new(perp.dim(), vectors), perp))
    }

    /// Product arrangement: vectors νᵢ×0 followed by 0×ν′ⱼ in ℚ^{k+k′}.
    pub fn product(&self, other: &VectorArrangement) -> VectorArrangement {
        let k = self.ambient_dim;
        let kk = other.ambient_dim;
        let mut vectors = Vec::with_capacity(self.len() + other.len());
        for v in &self.vectors {
            let mut x = v.clone();
            x.extend(vec![Rational::zero(); kk]);
            vectors.push(x);
        }
        for v in &other.vectors {
            let mut x = vec![Rational::zero(); k];
            x.extend_from_slice(v);
            vectors.push(x);
        }
        VectorArrangement::new(k + kk, vectors)
    }

    pub fn permute(&self, perm: &[usize]) -> VectorArrangement {
        assert_eq!(perm.len(), self.len());
        let vectors = perm.iter().map(|&i| self.vectors[i].clone()).collect();
        VectorArrangement::new(self.ambient_dim, vectors)
    }

    pub fn negate_vector(&self, i: usize) -> VectorArrangement {
        let mut vectors = self.vectors.clone();
        vectors[i] = vectors[i].iter().map(|c| -c.clone()).collect();
        VectorArrangement::new(self.ambient_dim, vectors)
    }

    /// The dims triple (dim H_S, dim V_S, dim W_S) for every subset, in
    /// ascending subset order.
    pub fn matroid_data(&self) -> Vec<(usize, usize, usize)> {
        (0..=self.full_mask())
            .map(|s| {
                let sp = self.subset_spaces(s);
                (sp.h.dim(), sp.v.dim(), sp.w.dim())
            })
            .collect()
    }

    /// Rank data only (dim V_S for all S); unlike the H-dims this is
    /// invariant under re-coordinatization, so it is what the Gale-duality
    /// regressions compare.
    pub fn rank_data(&self) -> Vec<usize> {
        (0..=self.full_mask())
            .map(|s| self.v_space(s).dim())
            .collect()
    }

    /// Whether the vectors span the ambient space (H_{[n]} = 0).
    pub fn is_spanning(&self) -> bool {
        self.v_space(self.full_mask()).dim() == self.ambient_dim
    }
}

/// A directed multigraph with ordered edges; vertices are `0..vertices`.
/// Loops are allowed and give zero vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// The graphical arrangement of `g`: one vector x_from − x_to per edge.
/// With `reduced`, coordinates are re-expressed in the canonical basis of
/// (1,…,1)^⊥ so the ambient dimension drops by one.
pub fn from_graph(g: &Graph, reduced: bool) -> Result<VectorArrangement, ArrError> {
    let k = g.vertices;
    let mut vectors = Vec::with_capacity(g.edges.len());
    for &(a, b) in &g.edges {
        if a >= k || b >= k {
            return Err(ArrError::IndexOutOfRange {
                index: a.max(b),
                len: k,
            });
        }
        let mut v = vec![Rational::zero(); k];
        if a != b {
            v[a] = Rational::one();
            v[b] = -Rational::one();
        }
        vectors.push(v);
    }
    let arr = VectorArrangement::new(k, vectors);
    if !reduced {
        return Ok(arr);
    }
    let ones = vec![Rational::one(); k];
    let perp = RationalMatrix::from_rows(vec![ones]).kernel_basis();
    let vectors = arr
        .vectors
        .iter()
        .map(|v| {
            // Edge vectors are already orthogonal to (1,…,1).
            perp.coords(v).expect("edge vector lies in the reduced ambient")
        })
        .collect();
    Ok(VectorArrangement::new(perp.dim(), vectors))
}

/// Signed variant of [`from_graph`].
pub fn from_signed_graph(
    g: &Graph,
    signs: Vec<Sign>,
    reduced: bool,
) -> Result<SignedVectorArrangement, ArrError> {
    if signs.len() != g.edges.len() {
        return Err(ArrError::ShapeMismatch(format!(
            "{} signs for {} edges",
            signs.len(),
            g.edges.len()
        )));
    }
    Ok(SignedVectorArrangement::new(from_graph(g, reduced)?, signs))
}

/// A vector arrangement with a sign per vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedVectorArrangement {
    base: VectorArrangement,
    signs: Vec<Sign>,
}

impl SignedVectorArrangement {
    pub fn new(base: VectorArrangement, signs: Vec<Sign>) -> Self {
        assert_eq!(base.len(), signs.len(), "one sign per vector");
        SignedVectorArrangement { base, signs }
    }

    pub fn base(&self) -> &VectorArrangement {
        &self.base
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.ambient_dim()
    }

    pub fn vector(&self, i: usize) -> &[Rational] {
        self.base.vector(i)
    }

    pub fn full_mask(&self) -> u32 {
        self.base.full_mask()
    }

    /// Bitmask of positive indices.
    pub fn plus_mask(&self) -> u32 {
        let mut m = 0u32;
        for (i, s) in self.signs.iter().enumerate() {
            if s.is_plus() {
                m |= 1 << i;
            }
        }
        m
    }

    /// S̃ = S₊ ∪ ([n]₋ \ S₋): positive members of S together with the
    /// negative indices *not* in S.
    pub fn tilde(&self, subset: u32) -> u32 {
        let plus = self.plus_mask();
        let minus = self.full_mask() & !plus;
        (subset & plus) | (minus & !subset)
    }

    /// Gale dual with all signs flipped.
    pub fn gale_dual(&self) -> SignedVectorArrangement {
        SignedVectorArrangement::new(
            self.base.gale_dual(),
            self.signs.iter().map(|s| s.flip()).collect(),
        )
    }

    pub fn delete(&self, i: usize) -> Result<SignedVectorArrangement, ArrError> {
        let base = self.base.delete(i)?;
        let mut signs = self.signs.clone();
        signs.remove(i);
        Ok(SignedVectorArrangement::new(base, signs))
    }

    pub fn restrict(&self, i: usize) -> Result<SignedVectorArrangement, ArrError> {
        let base = self.base.restrict(i)?;
        let mut signs = self.signs.clone();
        signs.remove(i);
        Ok(SignedVectorArrangement::new(base, signs))
    }

    pub fn product(&self, other: &SignedVectorArrangement) -> SignedVectorArrangement {
        let base = self.base.product(&other.base);
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        SignedVectorArrangement::new(base, signs)
    }

    pub fn permute(&self, perm: &[usize]) -> SignedVectorArrangement {
        let base = self.base.permute(perm);
        let signs = perm.iter().map(|&i| self.signs[i]).collect();
        SignedVectorArrangement::new(base, signs)
    }

    pub fn negate_vector(&self, i: usize) -> SignedVectorArrangement {
        SignedVectorArrangement::new(self.base.negate_vector(i), self.signs.clone())
    }

    /// The Gale dual vectors (in the canonical W basis); move preconditions
    /// are stated in terms of these.
    pub fn dual_vectors(&self) -> Vec<Vec<Rational>> {
        self.base.gale_dual().vectors().to_vec()
    }
}

/// The pairings ⟨νᵢ, v⟩ for all vectors of the arrangement.
pub fn pairings(a: &VectorArrangement, v: &[Rational]) -> Vec<Rational> {
    (0..a.len()).map(|i| dot(a.vector(i), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    fn baby() -> VectorArrangement {
        VectorArrangement::new(3, vec![v(&[1, -1, 0]), v(&[0, 1, -1])])
    }

    fn braid() -> VectorArrangement {
        VectorArrangement::new(3, vec![v(&[1, -1, 0]), v(&[0, 1, -1]), v(&[-1, 0, 1])])
    }

    #[test]
    fn subset_spaces_baby() {
        let sp = baby().subset_spaces(0b11);
        assert_eq!(sp.h.dim(), 1);
        assert!(sp.h.contains_vector(&v(&[1, 1, 1])));
        assert_eq!(sp.v.dim(), 2);
        assert_eq!(sp.w.dim(), 0);
    }

    #[test]
    fn subset_spaces_empty_subset() {
        let sp = braid().subset_spaces(0);
        assert_eq!(sp.h, Subspace::full(3));
        assert_eq!(sp.v.dim(), 0);
        assert_eq!(sp.w.dim(), 0);
    }

    #[test]
    fn subset_spaces_braid_full() {
        let sp = braid().subset_spaces(0b111);
        assert_eq!(sp.h.dim(), 1);
        assert_eq!(sp.v.dim(), 2);
        assert_eq!(sp.w.dim(), 1);
        assert!(sp.w.contains_vector(&v(&[1, 1, 1])));
    }

    #[test]
    fn gale_dual_braid() {
        let dual = braid().gale_dual();
        assert_eq!(dual.ambient_dim(), 1);
        assert_eq!(dual.len(), 3);
        let first = dual.vector(0).to_vec();
        assert!(!first[0].is_zero());
        assert_eq!(dual.vector(1), &first[..]);
        assert_eq!(dual.vector(2), &first[..]);
    }

    #[test]
    fn gale_dual_independent() {
        let a = VectorArrangement::new(2, vec![v(&[1, 0]), v(&[0, 1])]);
        let dual = a.gale_dual();
        assert_eq!(dual.ambient_dim(), 0);
        assert_eq!(dual.len(), 2);
        assert!(dual.vector(0).is_empty());
    }

    #[test]
    fn gale_dual_signed_kink() {
        let sa = SignedVectorArrangement::new(
            VectorArrangement::new(1, vec![v(&[1])]),
            vec![Sign::Plus],
        );
        let dual = sa.gale_dual();
        assert_eq!(dual.ambient_dim(), 0);
        assert_eq!(dual.signs(), &[Sign::Minus]);
    }

    #[test]
    fn delete_and_restrict() {
        let b = braid();
        assert_eq!(b.delete(2).unwrap(), baby());
        let single = VectorArrangement::new(1, vec![v(&[1])]);
        let r = single.restrict(0).unwrap();
        assert_eq!(r.ambient_dim(), 0);
        assert_eq!(r.len(), 0);
        let d = single.delete(0).unwrap();
        assert_eq!(d, VectorArrangement::empty(1));
        assert!(b.delete(3).is_err());
        assert!(b.restrict(3).is_err());
    }

    #[test]
    fn restrict_baby_nonzero() {
        let r = baby().restrict(0).unwrap();
        assert_eq!(r.ambient_dim(), 2);
        assert_eq!(r.len(), 1);
        assert!(r.vector(0).iter().any(|c| !c.is_zero()));
    }

    #[test]
    fn restrict_at_zero_vector() {
        let a = VectorArrangement::new(2, vec![v(&[0, 0]), v(&[1, 1])]);
        let r = a.restrict(0).unwrap();
        assert_eq!(r.ambient_dim(), 2);
        assert_eq!(r.vector(0), &v(&[1, 1])[..]);
    }

    #[test]
    fn products() {
        let e1 = VectorArrangement::empty(1);
        let e2 = VectorArrangement::empty(2);
        assert_eq!(e1.product(&e2), VectorArrangement::empty(3));
        let a = VectorArrangement::new(1, vec![v(&[1])]);
        let p = a.product(&a);
        assert_eq!(p.vectors(), &[v(&[1, 0]), v(&[0, 1])]);
        let bp = baby().product(&e1);
        assert_eq!(bp.ambient_dim(), 4);
        assert_eq!(bp.len(), 2);
        assert_eq!(bp.vector(0), &v(&[1, -1, 0, 0])[..]);
    }

    #[test]
    fn triangle_graph_gives_braid() {
        let g = Graph {
            vertices: 3,
            edges: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert_eq!(from_graph(&g, false).unwrap(), braid());
    }

    #[test]
    fn loop_gives_zero_vector() {
        let g = Graph {
            vertices: 2,
            edges: vec![(1, 1)],
        };
        let a = from_graph(&g, false).unwrap();
        assert!(a.vector(0).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn reduced_path_is_independent() {
        let g = Graph {
            vertices: 3,
            edges: vec![(0, 1), (1, 2)],
        };
        let a = from_graph(&g, true).unwrap();
        assert_eq!(a.ambient_dim(), 2);
        assert_eq!(a.v_space(0b11).dim(), 2);
    }

    #[test]
    fn tilde_examples() {
        let base = VectorArrangement::new(1, vec![v(&[1]), v(&[2]), v(&[3])]);
        let all_plus = SignedVectorArrangement::new(base.clone(), vec![Sign::Plus; 3]);
        assert_eq!(all_plus.tilde(0b101), 0b101);
        let all_minus = SignedVectorArrangement::new(base.clone(), vec![Sign::Minus; 3]);
        assert_eq!(all_minus.tilde(0), 0b111);
        // signs (+,−,+), S = {1,2} (1-based) → S̃ = {1}
        let mixed =
            SignedVectorArrangement::new(base, vec![Sign::Plus, Sign::Minus, Sign::Plus]);
        assert_eq!(mixed.tilde(0b011), 0b001);
    }

    #[test]
    fn rank_nullity_all_subsets() {
        let arrs = [
            baby(),
            braid(),
            VectorArrangement::new(2, vec![v(&[0, 0]), v(&[1, 2]), v(&[2, 4])]),
        ];
        for a in &arrs {
            let k = a.ambient_dim();
            for s in 0..=a.full_mask() {
                let sp = a.subset_spaces(s);
                assert_eq!(sp.h.dim() + sp.v.dim(), k);
                assert_eq!(sp.w.dim(), (s.count_ones() as usize) - sp.v.dim());
            }
        }
    }

    #[test]
    fn gale_exchanges_dims() {
        for a in [
            baby(),
            braid(),
            VectorArrangement::new(1, vec![v(&[1]), v(&[2]), v(&[0])]),
        ] {
            let dual = a.gale_dual();
            let full = a.full_mask();
            for s in 0..=full {
                let sc = full & !s;
                assert_eq!(a.w_space(s).dim(), dual.h_space(sc).dim());
            }
        }
    }

    #[test]
    fn delete_restrict_gale_duality_matroid() {
        let a = braid();
        for i in 0..a.len() {
            let lhs = a.delete(i).unwrap().gale_dual();
            let rhs = a.gale_dual().restrict(i).unwrap();
            assert_eq!(lhs.rank_data(), rhs.rank_data());
        }
    }

    #[test]
    fn planar_dual_graphs_are_gale_dual() {
        // triangle vs. its planar dual (two vertices, three parallel edges);
        // 3-star vs. its planar dual (a bouquet of three loops); all reduced.
        let triangle = Graph {
            vertices: 3,
            edges: vec![(0, 1), (1, 2), (2, 0)],
        };
        let dipole = Graph {
            vertices: 2,
            edges: vec![(0, 1), (0, 1), (0, 1)],
        };
        let star = Graph {
            vertices: 4,
            edges: vec![(0, 3), (1, 3), (2, 3)],
        };
        let bouquet = Graph {
            vertices: 1,
            edges: vec![(0, 0), (0, 0), (0, 0)],
        };
        for (g, gstar) in [(triangle, dipole), (star, bouquet)] {
            let a = from_graph(&g, true).unwrap();
            let b = from_graph(&gstar, true).unwrap();
            assert_eq!(a.gale_dual().rank_data(), b.rank_data());
        }
    }

    #[test]
    fn double_dual_matroid() {
        for a in [braid(), VectorArrangement::new(1, vec![v(&[1]), v(&[2]), v(&[0])])] {
            assert_eq!(a.gale_dual().gale_dual().rank_data(), a.rank_data());
        }
    }
}
