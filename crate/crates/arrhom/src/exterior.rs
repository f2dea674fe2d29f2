//! Exterior algebras of subspaces with bitmask wedge bases, and the map
//! families used by every chain complex in the crate: induced maps of
//! linear maps (compound matrices per degree), left-wedge maps and interior
//! products (contractions), plus the wedge product itself.
//!
//! Basis convention: if a subspace has RREF basis rows b₀,…,b_{d−1}, the
//! wedge basis of ∧•(subspace) is indexed by bitmasks over `0..d`; mask `m`
//! stands for the wedge of the bᵢ with bit i set, factors in increasing
//! index order.  Within a degree, masks are ordered by ascending numeric
//! value, matching [`crate::linalg::masks_of_size`] and the compound-matrix
//! ordering.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::ArrError;
use crate::linalg::{dot, mask_bits, masks_of_size, Rational, RationalMatrix, Subspace};

/// An element of ∧•(space): finitely many wedge-basis terms with rational
/// coefficients.  Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExteriorElement {
    space: Subspace,
    terms: BTreeMap<u32, Rational>,
}

impl ExteriorElement {
    pub fn zero(space: Subspace) -> Self {
        ExteriorElement {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: Subspace) -> Self {
        Self::from_terms(space, [(0u32, Rational::one())])
    }

    pub fn basis_element(space: Subspace, mask: u32) -> Self {
        assert!(mask < (1u32 << space.dim()));
        Self::from_terms(space, [(mask, Rational::one())])
    }

    pub fn from_terms(space: Subspace, terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut t = BTreeMap::new();
        for (m, c) in terms {
            assert!(m < (1u32 << space.dim()));
            if !c.is_zero() {
                let e = t.entry(m).or_insert_with(Rational::zero);
                *e += c;
                if e.is_zero() {
                    t.remove(&m);
                }
            }
        }
        ExteriorElement { space, terms: t }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn terms(&self) -> &BTreeMap<u32, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common popcount of all terms, if the element is homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = m.count_ones() as usize;
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg
    }

    pub fn add(&self, other: &ExteriorElement) -> ExteriorElement {
        assert_eq!(self.space, other.space);
        let mut t = self.terms.clone();
        for (m, c) in &other.terms {
            let e = t.entry(*m).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                t.remove(m);
            }
        }
        ExteriorElement {
            space: self.space.clone(),
            terms: t,
        }
    }

    pub fn scale(&self, c: &Rational) -> ExteriorElement {
        if c.is_zero() {
            return Self::zero(self.space.clone());
        }
        ExteriorElement {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> ExteriorElement {
        self.scale(&-Rational::one())
    }

    /// Wedge product inside the common space.
    pub fn wedge(&self, other: &ExteriorElement) -> ExteriorElement {
        assert_eq!(self.space, other.space, "wedge in mismatched spaces");
        let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let sign = wedge_sign(*ma, *mb);
                let mut c = ca * cb;
                if sign < 0 {
                    c = -c;
                }
                let key = ma | mb;
                let e = out.entry(key).or_insert_with(Rational::zero);
                *e += c;
                if e.is_zero() {
                    out.remove(&key);
                }
            }
        }
        ExteriorElement {
            space: self.space.clone(),
            terms: out,
        }
    }

    /// Inner product induced on ∧•(space) by the standard ambient product:
    /// ⟨e_I, e_J⟩ = det of the Gram block picked out by I and J.
    pub fn induced_inner(&self, other: &ExteriorElement) -> Rational {
        assert_eq!(self.space, other.space);
        let gram = self.space.gram();
        let mut acc = Rational::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.count_ones() != mb.count_ones() {
                    continue;
                }
                let ia = mask_bits(*ma);
                let ib = mask_bits(*mb);
                let j = ia.len();
                let block = RationalMatrix::from_fn(j, j, |r, c| gram.get(ia[r], ib[c]).clone());
                acc += ca * cb * block.det();
            }
        }
        acc
    }
}

/// Sign of e_A ∧ e_B for disjoint masks: parity of the number of pairs
/// (a ∈ A, b ∈ B) with b < a.
pub fn wedge_sign(a: u32, b: u32) -> i32 {
    let mut inversions = 0u32;
    for bit in mask_bits(a) {
        inversions += (b & ((1u32 << bit) - 1)).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A graded linear map ∧•(source) → ∧•(target) that shifts exterior degree
/// by a fixed amount: one matrix block per source degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExteriorMap {
    source: Subspace,
    target: Subspace,
    degree_shift: i32,
    /// `blocks[j]`: ∧^j(source) → ∧^{j+shift}(target); rows/cols indexed by
    /// masks of the right popcount in ascending order.  Out-of-range target
    /// degrees give 0-row blocks.
    blocks: Vec<RationalMatrix>,
}

impl ExteriorMap {
    pub fn source(&self) -> &Subspace {
        &self.source
    }

    pub fn target(&self) -> &Subspace {
        &self.target
    }

    pub fn degree_shift(&self) -> i32 {
        self.degree_shift
    }

    pub fn block(&self, j: usize) -> &RationalMatrix {
        &self.blocks[j]
    }

    fn from_blocks(
        source: Subspace,
        target: Subspace,
        degree_shift: i32,
        blocks: Vec<RationalMatrix>,
    ) -> Self {
        debug_assert_eq!(blocks.len(), source.dim() + 1);
        for (j, b) in blocks.iter().enumerate() {
            let tdeg = j as i32 + degree_shift;
            let rows = if tdeg < 0 || tdeg > target.dim() as i32 {
                0
            } else {
                masks_of_size(target.dim(), tdeg as usize).len()
            };
            debug_assert_eq!(b.rows(), rows);
            debug_assert_eq!(b.cols(), masks_of_size(source.dim(), j).len());
        }
        ExteriorMap {
            source,
            target,
            degree_shift,
            blocks,
        }
    }

    /// The multiplicative extension of a linear map `source → target` given
    /// by its matrix `f` in the two RREF bases: block `j` is the degree-`j`
    /// compound matrix of `f`.
    pub fn induced(
        f: &RationalMatrix,
        source: &Subspace,
        target: &Subspace,
    ) -> Result<ExteriorMap, ArrError> {
        if f.rows() != target.dim() || f.cols() != source.dim() {
            return Err(ArrError::ShapeMismatch(
                "induced map matrix must be (target dim) x (source dim)".to_string(),
            ));
        }
        let mut blocks = Vec::with_capacity(source.dim() + 1);
        for j in 0..=source.dim() {
            if j > target.dim() {
                blocks.push(RationalMatrix::zeros(0, masks_of_size(source.dim(), j).len()));
            } else {
                blocks.push(f.compound(j)?);
            }
        }
        Ok(Self::from_blocks(source.clone(), target.clone(), 0, blocks))
    }

    /// Identity on ∧•(space).
    pub fn identity(space: &Subspace) -> ExteriorMap {
        Self::induced(&RationalMatrix::identity(space.dim()), space, space).unwrap()
    }

    /// Induced map of the natural inclusion `source ⊆ target`.
    pub fn induced_inclusion(source: &Subspace, target: &Subspace) -> Result<ExteriorMap, ArrError> {
        let f = source.inclusion_matrix(target)?;
        Self::induced(&f, source, target)
    }

    /// Induced map of the orthogonal projection `source → target`.
    pub fn induced_projection(source: &Subspace, target: &Subspace) -> ExteriorMap {
        let f = source.projection_matrix(target);
        Self::induced(&f, source, target).unwrap()
    }

    /// Left wedge by the ambient vector `v`: x ↦ p ∧ ι(x), where
    /// p = project(target, v) and ι is the induced inclusion
    /// `∧•(source) → ∧•(target)`.  Degree +1.
    pub fn wedge(
        v: &[Rational],
        source: &Subspace,
        target: &Subspace,
    ) -> Result<ExteriorMap, ArrError> {
        let incl = Self::induced_inclusion(source, target)?;
        let p = target.project_coords(v);
        Ok(Self::wedge_in_place(&p, target).compose(&incl))
    }

    /// Left wedge by the element of `space` with the given coordinates.
    pub fn wedge_in_place(coords: &[Rational], space: &Subspace) -> ExteriorMap {
        let d = space.dim();
        assert_eq!(coords.len(), d);
        let mut blocks = Vec::with_capacity(d + 1);
        for j in 0..=d {
            let src = masks_of_size(d, j);
            if j + 1 > d {
                blocks.push(RationalMatrix::zeros(0, src.len()));
                continue;
            }
            let tgt = masks_of_size(d, j + 1);
            let pos: BTreeMap<u32, usize> = tgt.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            let mut b = RationalMatrix::zeros(tgt.len(), src.len());
            for (ci, &m) in src.iter().enumerate() {
                for a in 0..d {
                    let bit = 1u32 << a;
                    if m & bit != 0 || coords[a].is_zero() {
                        continue;
                    }
                    let sign = wedge_sign(bit, m);
                    let mut c = coords[a].clone();
                    if sign < 0 {
                        c = -c;
                    }
                    let ri = pos[&(m | bit)];
                    let cur = b.get(ri, ci) + &c;
                    b.set(ri, ci, cur);
                }
            }
            blocks.push(b);
        }
        Self::from_blocks(space.clone(), space.clone(), 1, blocks)
    }

    /// Contraction (interior product) with the ambient vector `v`:
    /// x ↦ ι_p(x) with p = project(source, v) and
    /// ι_p(w₁∧…∧w_j) = Σᵢ (−1)^{i−1} ⟨p, wᵢ⟩ w₁∧…ŵᵢ…∧w_j,
    /// re-expressed in the basis of `target ⊆ source`.  Degree −1.
    ///
    /// Errors when the contracted result does not lie in ∧•(target); the
    /// callers' theorems guarantee it does, so this signals a bug upstream.
    pub fn contraction(
        v: &[Rational],
        source: &Subspace,
        target: &Subspace,
    ) -> Result<ExteriorMap, ArrError> {
        if !source.contains(target) {
            return Err(ArrError::NotContained(
                "contraction target not inside source".to_string(),
            ));
        }
        let d = source.dim();
        // Only the pairings with the basis rows matter, and projecting v into
        // the source does not change them.
        let pairings: Vec<Rational> = (0..d).map(|i| dot(source.basis_row(i), v)).collect();
        let incl = target.inclusion_matrix(source)?;
        let mut blocks = Vec::with_capacity(d + 1);
        for j in 0..=d {
            let src = masks_of_size(d, j);
            if j == 0 || (j - 1) > target.dim() {
                blocks.push(RationalMatrix::zeros(0, src.len()));
                continue;
            }
            let mid = masks_of_size(d, j - 1);
            let pos: BTreeMap<u32, usize> = mid.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            // Contraction in source coordinates.
            let mut raw = RationalMatrix::zeros(mid.len(), src.len());
            for (ci, &m) in src.iter().enumerate() {
                for a in mask_bits(m) {
                    if pairings[a].is_zero() {
                        continue;
                    }
                    let below = (m & ((1u32 << a) - 1)).count_ones();
                    let mut c = pairings[a].clone();
                    if below % 2 == 1 {
                        c = -c;
                    }
                    let ri = pos[&(m & !(1u32 << a))];
                    let cur = raw.get(ri, ci) + &c;
                    raw.set(ri, ci, cur);
                }
            }
            // Re-express in the wedge basis of the target via the induced
            // inclusion: solve compound(incl, j-1) · y = raw.
            let cp = incl.compound(j - 1)?;
            let sol = cp.solve(&raw).ok_or_else(|| {
                ArrError::NotContained("contracted element escapes the target".to_string())
            })?;
            // Confirm exact containment (solve zeroes free variables).
            if cp.mul(&sol) != raw {
                return Err(ArrError::NotContained(
                    "contracted element escapes the target".to_string(),
                ));
            }
            blocks.push(sol);
        }
        Ok(Self::from_blocks(source.clone(), target.clone(), -1, blocks))
    }

    pub fn apply(&self, x: &ExteriorElement) -> ExteriorElement {
        assert_eq!(x.space, self.source, "map applied to wrong space");
        let sd = self.source.dim();
        let td = self.target.dim();
        let mut out = BTreeMap::new();
        for (m, c) in &x.terms {
            let j = m.count_ones() as usize;
            let tdeg = j as i32 + self.degree_shift;
            if tdeg < 0 || tdeg > td as i32 {
                continue;
            }
            let src = masks_of_size(sd, j);
            let ci = src.iter().position(|&s| s == *m).unwrap();
            let tgt = masks_of_size(td, tdeg as usize);
            let b = &self.blocks[j];
            for (ri, &tm) in tgt.iter().enumerate() {
                let e = b.get(ri, ci);
                if e.is_zero() {
                    continue;
                }
                let entry = out.entry(tm).or_insert_with(Rational::zero);
                *entry += e * c;
                if entry.is_zero() {
                    out.remove(&tm);
                }
            }
        }
        ExteriorElement {
            space: self.target.clone(),
            terms: out,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ExteriorMap) -> ExteriorMap {
        assert_eq!(other.target, self.source, "composition mismatch");
        let shift = self.degree_shift + other.degree_shift;
        let sd = other.source.dim();
        let td = self.target.dim();
        let mut blocks = Vec::with_capacity(sd + 1);
        for j in 0..=sd {
            let mid = j as i32 + other.degree_shift;
            let out_deg = j as i32 + shift;
            let cols = masks_of_size(sd, j).len();
            let rows = if out_deg < 0 || out_deg > td as i32 {
                0
            } else {
                masks_of_size(td, out_deg as usize).len()
            };
            if rows == 0 {
                blocks.push(RationalMatrix::zeros(0, cols));
                continue;
            }
            if mid < 0 || mid > self.source.dim() as i32 {
                blocks.push(RationalMatrix::zeros(rows, cols));
                continue;
            }
            blocks.push(self.blocks[mid as usize].mul(&other.blocks[j]));
        }
        Self::from_blocks(other.source.clone(), self.target.clone(), shift, blocks)
    }

    pub fn add(&self, other: &ExteriorMap) -> ExteriorMap {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        assert_eq!(self.degree_shift, other.degree_shift);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        Self::from_blocks(
            self.source.clone(),
            self.target.clone(),
            self.degree_shift,
            blocks,
        )
    }

    pub fn scale(&self, c: &Rational) -> ExteriorMap {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        Self::from_blocks(
            self.source.clone(),
            self.target.clone(),
            self.degree_shift,
            blocks,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// Full 2^(target dim) × 2^(source dim) matrix over all wedge masks in
    /// ascending numeric order (mixing degrees); used to assemble tensor
    /// products of maps on cube vertices.
    pub fn full_matrix(&self) -> RationalMatrix {
        let sd = self.source.dim();
        let td = self.target.dim();
        let mut out = RationalMatrix::zeros(1 << td, 1 << sd);
        for j in 0..=sd {
            let tdeg = j as i32 + self.degree_shift;
            if tdeg < 0 || tdeg > td as i32 {
                continue;
            }
            let src = masks_of_size(sd, j);
            let tgt = masks_of_size(td, tdeg as usize);
            let b = &self.blocks[j];
            for (ci, &sm) in src.iter().enumerate() {
                for (ri, &tm) in tgt.iter().enumerate() {
                    let e = b.get(ri, ci);
                    if !e.is_zero() {
                        out.set(tm as usize, sm as usize, e.clone());
                    }
                }
            }
        }
        out
    }
}

/// Moves `x` into ∧•(joint): by the induced inclusion when x.space ⊆ joint,
/// by the induced orthogonal projection when joint ⊆ x.space.  These are the
/// two transports the chain-level multiplications use.
pub fn move_into(x: &ExteriorElement, joint: &Subspace) -> Result<ExteriorElement, ArrError> {
    if joint == x.space() {
        return Ok(x.clone());
    }
    if joint.contains(x.space()) {
        let m = ExteriorMap::induced_inclusion(x.space(), joint)?;
        Ok(m.apply(x))
    } else if x.space().contains(joint) {
        let m = ExteriorMap::induced_projection(x.space(), joint);
        Ok(m.apply(x))
    } else {
        Err(ArrError::NotContained(
            "no containment between element space and joint space".to_string(),
        ))
    }
}

/// Wedge product of two elements after transporting both into ∧•(joint).
pub fn wedge_product(
    x: &ExteriorElement,
    y: &ExteriorElement,
    joint: &Subspace,
) -> Result<ExteriorElement, ArrError> {
    if x.space().ambient_dim() != joint.ambient_dim()
        || y.space().ambient_dim() != joint.ambient_dim()
    {
        return Err(ArrError::ShapeMismatch(
            "wedge product ambient dimensions differ".to_string(),
        ));
    }
    Ok(move_into(x, joint)?.wedge(&move_into(y, joint)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};
    use alloc::vec;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn induced_identity_blocks() {
        let s = Subspace::full(2);
        let id = ExteriorMap::identity(&s);
        for j in 0..=2 {
            let size = masks_of_size(2, j).len();
            assert_eq!(*id.block(j), RationalMatrix::identity(size));
        }
    }

    #[test]
    fn induced_projection_to_zero() {
        let src = Subspace::full(1);
        let tgt = Subspace::zero(1);
        let m = ExteriorMap::induced_projection(&src, &tgt);
        assert_eq!(m.block(0), &RationalMatrix::identity(1));
        assert_eq!(m.block(1).rows(), 0);
    }

    #[test]
    fn induced_inclusion_line_into_plane() {
        let line = Subspace::from_rows(2, vec![v(&[1, 1])]);
        let plane = Subspace::full(2);
        let m = ExteriorMap::induced_inclusion(&line, &plane).unwrap();
        assert_eq!(m.block(1).col_vec(0), v(&[1, 1]));
        assert_eq!(m.block(1).rows(), 2);
    }

    #[test]
    fn wedge_in_full_line() {
        // source = target = Q^1, v = (1): 1 ↦ e1, e1 ↦ 0
        let s = Subspace::full(1);
        let m = ExteriorMap::wedge(&v(&[1]), &s, &s).unwrap();
        let one = ExteriorElement::one(s.clone());
        assert_eq!(m.apply(&one), ExteriorElement::basis_element(s.clone(), 1));
        let e1 = ExteriorElement::basis_element(s.clone(), 1);
        assert!(m.apply(&e1).is_zero());
    }

    #[test]
    fn wedge_orthogonal_vector_is_zero() {
        let target = Subspace::from_rows(2, vec![v(&[1, 0])]);
        let m = ExteriorMap::wedge(&v(&[0, 5]), &target.clone(), &target).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn baby_wedge_map_nonzero() {
        // baby arrangement: H_{12} = span(1,1,1), H_1 = (1,-1,0)^perp
        let h12 = Subspace::from_rows(3, vec![v(&[1, 1, 1])]);
        let h1 = RationalMatrix::from_rows(vec![v(&[1, -1, 0])]).kernel_basis();
        let m = ExteriorMap::wedge(&v(&[0, 1, -1]), &h12, &h1).unwrap();
        let one = ExteriorElement::one(h12);
        let img = m.apply(&one);
        assert!(!img.is_zero());
        // image is the projection of (0,1,-1) onto H_1
        let p = h1.project(&v(&[0, 1, -1]));
        let mut back = vec![Rational::zero(); 3];
        for (mask, c) in img.terms() {
            let row = h1.basis_row(mask.trailing_zeros() as usize);
            for (acc, b) in back.iter_mut().zip(row) {
                *acc += c * b;
            }
        }
        assert_eq!(back, p);
    }

    #[test]
    fn contraction_line_to_zero() {
        let s = Subspace::full(1);
        let t = Subspace::zero(1);
        let m = ExteriorMap::contraction(&v(&[1]), &s, &t).unwrap();
        let e1 = ExteriorElement::basis_element(s.clone(), 1);
        assert_eq!(m.apply(&e1), ExteriorElement::one(t.clone()));
        let one = ExteriorElement::one(s);
        assert!(m.apply(&one).is_zero());
    }

    #[test]
    fn contraction_orthogonal_is_zero() {
        let s = Subspace::from_rows(2, vec![v(&[1, 0])]);
        let m = ExteriorMap::contraction(&v(&[0, 3]), &s.clone(), &s).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn contraction_sign_convention() {
        // ι_{e1}(e1∧e2) = e2 with source Q^2, target = span(e2)
        let s = Subspace::full(2);
        let t = Subspace::from_rows(2, vec![v(&[0, 1])]);
        let m = ExteriorMap::contraction(&v(&[1, 0]), &s, &t).unwrap();
        let e12 = ExteriorElement::basis_element(s.clone(), 0b11);
        let img = m.apply(&e12);
        assert_eq!(img, ExteriorElement::basis_element(t, 1));
    }

    #[test]
    fn wedge_product_unit_and_antisymmetry() {
        let s = Subspace::full(2);
        let one = ExteriorElement::one(s.clone());
        let e1 = ExteriorElement::basis_element(s.clone(), 0b01);
        let e2 = ExteriorElement::basis_element(s.clone(), 0b10);
        assert_eq!(wedge_product(&one, &e1, &s).unwrap(), e1);
        let a = wedge_product(&e1, &e2, &s).unwrap();
        let b = wedge_product(&e2, &e1, &s).unwrap();
        assert_eq!(a, b.neg());
    }

    #[test]
    fn wedge_product_bilinear_expansion() {
        // (e1+e2) ∧ e1 = -(e1∧e2)
        let s = Subspace::full(2);
        let x =
            ExteriorElement::from_terms(s.clone(), [(0b01u32, rat_int(1)), (0b10u32, rat_int(1))]);
        let e1 = ExteriorElement::basis_element(s.clone(), 0b01);
        let got = wedge_product(&x, &e1, &s).unwrap();
        assert_eq!(got, ExteriorElement::from_terms(s, [(0b11u32, rat_int(-1))]));
    }

    #[test]
    fn functoriality_of_induced_maps() {
        let a = RationalMatrix::from_rows(vec![v(&[1, 2]), v(&[0, 1]), v(&[1, 1])]);
        let b = RationalMatrix::from_rows(vec![v(&[2, 1, 0]), v(&[1, 1, 1])]);
        let s2 = Subspace::full(2);
        let s3 = Subspace::full(3);
        let fa = ExteriorMap::induced(&a, &s2, &s3).unwrap();
        let fb = ExteriorMap::induced(&b, &s3, &s2).unwrap();
        let ab = ExteriorMap::induced(&b.mul(&a), &s2, &s2).unwrap();
        assert_eq!(fb.compose(&fa), ab);
    }

    #[test]
    fn contraction_squares_to_zero_and_leibniz() {
        let s = Subspace::full(3);
        let vv = v(&[1, 0, 0]);
        let c_full = ExteriorMap::contraction(&vv, &s, &s).unwrap();
        assert!(c_full.compose(&c_full).is_zero());
        // Leibniz: ι(x∧y) = ι(x)∧y + (-1)^{deg x} x∧ι(y); here deg x = 2.
        let x =
            ExteriorElement::from_terms(s.clone(), [(0b011u32, rat_int(2)), (0b101u32, rat(1, 2))]);
        let y = ExteriorElement::basis_element(s.clone(), 0b100);
        let lhs = c_full.apply(&x.wedge(&y));
        let rhs = c_full.apply(&x).wedge(&y).add(&x.wedge(&c_full.apply(&y)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_contraction_adjoint() {
        // Adjointness under the induced inner products, on a non-orthonormal
        // pair in the arrangement situation: small = big ∩ v^perp.
        let big = Subspace::from_rows(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let vv = v(&[2, -1, 3]);
        let small = big.intersect(&RationalMatrix::from_rows(vec![vv.clone()]).kernel_basis());
        assert_eq!(small.dim(), 1);
        let w = ExteriorMap::wedge(&vv, &small, &big).unwrap();
        let c = ExteriorMap::contraction(&vv, &big, &small).unwrap();
        for xm in 0..(1u32 << small.dim()) {
            for ym in 0..(1u32 << big.dim()) {
                let x = ExteriorElement::basis_element(small.clone(), xm);
                let y = ExteriorElement::basis_element(big.clone(), ym);
                let lhs = w.apply(&x).induced_inner(&y);
                let rhs = x.induced_inner(&c.apply(&y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
