//! Exact rational linear algebra: matrices over ℚ, canonical subspace
//! bases (reduced row echelon form), orthogonal projection under the
//! standard inner product, kernels and compound (minor) matrices.
//!
//! Subspaces of ℚ^m are always stored with their unique RREF basis, so two
//! row-equivalent presentations produce identical values and everything
//! downstream (wedge bases, cube differentials, regression output) is
//! reproducible bit for bit.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ArrError;

/// The ground field: arbitrary-precision rationals in canonical form
/// (coprime numerator/denominator, positive denominator).
pub type Rational = num_rational::BigRational;

/// Rational from an integer pair; panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, ArrError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| ArrError::Parse(String::from("bad rational numerator: ") + s))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| ArrError::Parse(String::from("bad rational denominator: ") + s))?;
    if d.is_zero() {
        return Err(ArrError::Parse(String::from("zero denominator: ") + s));
    }
    Ok(Rational::new(n, d))
}

/// Renders `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s += &r.denom().to_string();
        s
    }
}

/// Dense matrix over ℚ, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix with the given shape; `rows == 0` or `cols == 0` is fine.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(t, j);
                if b.is_zero() {
                    continue;
                }
                acc += a * b;
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Unique reduced row echelon form plus pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space of `self` as a canonical subspace of ℚ^cols.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            rows.push(v);
        }
        Subspace::from_rows(self.cols, rows)
    }

    /// Exact solve `self · x = rhs` for each column of `rhs`.
    /// Returns `None` when any column is inconsistent; free variables are
    /// set to zero, which makes the answer deterministic.
    pub fn solve(&self, rhs: &RationalMatrix) -> Option<RationalMatrix> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let mut aug = Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        });
        let (r, pivots) = aug.rref();
        aug = r;
        // Any pivot in the rhs block means inconsistency.
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = RationalMatrix::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, aug.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Determinant by fraction-free-ish Gaussian elimination (square only).
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                for j in 0..n {
                    m.entries.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            let inv = piv.recip();
            for i in (c + 1)..n {
                if !m.get(i, c).is_zero() {
                    let f = m.get(i, c) * &inv;
                    for j in c..n {
                        let v = m.get(i, j) - &f * m.get(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// Degree-`j` compound matrix: rows and columns are indexed by the
    /// size-`j` subsets of row resp. column indices, ordered by ascending
    /// bitmask value, and the entry at `(I, J)` is the minor `det(self[I, J])`.
    ///
    /// `compound(·, 0)` is the 1×1 identity and `compound(·, 1)` is the
    /// matrix itself; Cauchy–Binet makes this functorial in the matrix.
    pub fn compound(&self, j: usize) -> Result<RationalMatrix, ArrError> {
        let max = self.rows.min(self.cols);
        if j > max {
            return Err(ArrError::DegreeOutOfRange { degree: j, max });
        }
        let row_sets = masks_of_size(self.rows, j);
        let col_sets = masks_of_size(self.cols, j);
        let mut out = RationalMatrix::zeros(row_sets.len(), col_sets.len());
        for (ri, &rm) in row_sets.iter().enumerate() {
            let ridx = mask_bits(rm);
            for (ci, &cm) in col_sets.iter().enumerate() {
                let cidx = mask_bits(cm);
                let sub = Self::from_fn(j, j, |a, b| self.get(ridx[a], cidx[b]).clone());
                out.set(ri, ci, sub.det());
            }
        }
        Ok(out)
    }
}

/// All bitmasks over `dim` bits with `size` bits set, ascending numeric value.
pub fn masks_of_size(dim: usize, size: usize) -> Vec<u32> {
    assert!(dim <= 31);
    let mut out = Vec::new();
    for m in 0u32..(1u32 << dim) {
        if m.count_ones() as usize == size {
            out.push(m);
        }
    }
    out
}

/// Sorted list of set bit positions.
pub fn mask_bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|&b| mask >> b & 1 == 1).collect()
}

/// Inner product of two rational vectors (standard dot product).
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// A linear subspace of ℚ^m in canonical form: the rows of `basis` are the
/// unique RREF basis (nonzero, strictly increasing pivot columns).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RationalMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonicalizes arbitrary spanning rows.
    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<Rational>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient_dim, "subspace row length != ambient dim");
        }
        let (r, pivots) = RationalMatrix::from_rows(rows).rref();
        let basis = RationalMatrix::from_fn(pivots.len(), ambient_dim, |i, j| r.get(i, j).clone());
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RationalMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RationalMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> &[Rational] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the
    /// subspace.  RREF makes this a simple pivot read plus a membership check.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim);
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let lift = self.from_coords(&coords);
        if lift == v {
            Some(coords)
        } else {
            None
        }
    }

    /// The ambient vector with the given basis coordinates.
    pub fn from_coords(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient_dim {
                let b = self.basis.get(i, j);
                if !b.is_zero() {
                    out[j] += c * b;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains_vector(other.basis_row(i)))
    }

    /// Gram matrix of the basis rows under the standard inner product.
    pub fn gram(&self) -> RationalMatrix {
        let d = self.dim();
        RationalMatrix::from_fn(d, d, |i, j| dot(self.basis_row(i), self.basis_row(j)))
    }

    /// Orthogonal projection of `v` onto this subspace (standard product).
    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim);
        if self.dim() == 0 {
            return vec![Rational::zero(); self.ambient_dim];
        }
        self.from_coords(&self.project_coords(v))
    }

    /// Coordinates of the orthogonal projection of `v` in the RREF basis.
    pub fn project_coords(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim);
        let d = self.dim();
        if d == 0 {
            return Vec::new();
        }
        let rhs = RationalMatrix::from_fn(d, 1, |i, _| dot(self.basis_row(i), v));
        let sol = self
            .gram()
            .solve(&rhs)
            .expect("positive definite Gram matrix is invertible");
        (0..d).map(|i| sol.get(i, 0).clone()).collect()
    }

    /// Orthogonal complement under the standard inner product.
    pub fn perp(&self) -> Subspace {
        self.basis.kernel_basis()
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dim mismatch");
        // a ∩ b = (a⊥ + b⊥)⊥, exact over ℚ since ⟨,⟩ is positive definite.
        let pa = self.perp();
        let pb = other.perp();
        let stacked = pa.basis.vstack(&pb.basis);
        stacked.kernel_basis()
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            rows.push(self.basis.row_vec(i));
        }
        for i in 0..other.dim() {
            rows.push(other.basis.row_vec(i));
        }
        Subspace::from_rows(self.ambient_dim, rows)
    }

    /// Matrix (in RREF bases) of the inclusion `self ⊆ target`.
    pub fn inclusion_matrix(&self, target: &Subspace) -> Result<RationalMatrix, ArrError> {
        assert_eq!(self.ambient_dim, target.ambient_dim);
        let mut cols = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let c = target.coords(self.basis_row(i)).ok_or_else(|| {
                ArrError::NotContained("inclusion source not inside target".to_string())
            })?;
            cols.push(c);
        }
        Ok(RationalMatrix::from_fn(target.dim(), self.dim(), |i, j| {
            cols[j][i].clone()
        }))
    }

    /// Matrix (in RREF bases) of the orthogonal projection `self → target`.
    pub fn projection_matrix(&self, target: &Subspace) -> RationalMatrix {
        assert_eq!(self.ambient_dim, target.ambient_dim);
        let mut cols = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            cols.push(target.project_coords(self.basis_row(i)));
        }
        RationalMatrix::from_fn(target.dim(), self.dim(), |i, j| cols[j][i].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn rref_identity() {
        let id = RationalMatrix::identity(2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_two_rows() {
        let a = m(&[&[1, -1, 0], &[0, 1, -1]]);
        let (r, p) = a.rref();
        assert_eq!(r, m(&[&[1, 0, -1], &[0, 1, -1]]));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_zero() {
        let z = RationalMatrix::zeros(2, 3);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_of_braid_dependency_map() {
        // Braid vectors as columns of a 3×3 matrix; kernel is the line (1,1,1).
        let cols = m(&[&[1, 0, -1], &[-1, 1, 0], &[0, -1, 1]]);
        let k = cols.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vector(&v(&[1, 1, 1])));
        // Verify by substitution.
        assert!(cols.mul_vec(k.basis_row(0)).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kernel_identity_and_zero() {
        assert_eq!(RationalMatrix::identity(3).kernel_basis().dim(), 0);
        let full = RationalMatrix::zeros(2, 3).kernel_basis();
        assert_eq!(full, Subspace::full(3));
    }

    #[test]
    fn project_onto_line() {
        let t = Subspace::from_rows(3, vec![v(&[1, 1, 1])]);
        let p = t.project(&v(&[1, 0, 0]));
        assert_eq!(p, vec![rat(1, 3), rat(1, 3), rat(1, 3)]);
        // v - p orthogonal to the subspace
        let diff: Vec<Rational> = v(&[1, 0, 0]).iter().zip(&p).map(|(a, b)| a - b).collect();
        assert!(dot(&diff, t.basis_row(0)).is_zero());
    }

    #[test]
    fn project_trivial_cases() {
        let full = Subspace::full(2);
        assert_eq!(full.project(&v(&[3, 4])), v(&[3, 4]));
        let t = Subspace::from_rows(2, vec![v(&[2, 0])]);
        assert_eq!(t.project(&v(&[1, 0])), v(&[1, 0]));
    }

    #[test]
    fn project_idempotent() {
        let t = Subspace::from_rows(3, vec![v(&[1, 2, 0]), v(&[0, 1, 5])]);
        let x = v(&[7, -3, 2]);
        let p = t.project(&x);
        assert_eq!(t.project(&p), p);
        for i in 0..t.dim() {
            let diff: Vec<Rational> = x.iter().zip(&p).map(|(a, b)| a - b).collect();
            assert!(dot(&diff, t.basis_row(i)).is_zero());
        }
    }

    #[test]
    fn intersect_planes() {
        let a = m(&[&[1, -1, 0]]).kernel_basis();
        let b = m(&[&[0, 1, -1]]).kernel_basis();
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains_vector(&v(&[1, 1, 1])));
    }

    #[test]
    fn intersect_trivial() {
        let a = Subspace::from_rows(3, vec![v(&[1, 0, 2])]);
        assert_eq!(a.intersect(&Subspace::full(3)), a);
        assert_eq!(a.intersect(&Subspace::zero(3)), Subspace::zero(3));
    }

    #[test]
    fn compound_determinant() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let c = a.compound(2).unwrap();
        assert_eq!(c.rows(), 1);
        assert_eq!(*c.get(0, 0), rat_int(-2));
    }

    #[test]
    fn compound_identity() {
        for j in 0..=3 {
            let c = RationalMatrix::identity(3).compound(j).unwrap();
            let size = masks_of_size(3, j).len();
            assert_eq!(c, RationalMatrix::identity(size));
        }
    }

    #[test]
    fn compound_3x2() {
        let a = m(&[&[1, 0], &[0, 1], &[2, 3]]);
        let c = a.compound(2).unwrap();
        assert_eq!(c.rows(), 3);
        assert_eq!(c.cols(), 1);
        // minors of row pairs {0,1}, {0,2}, {1,2}
        assert_eq!(*c.get(0, 0), rat_int(1));
        assert_eq!(*c.get(1, 0), rat_int(3));
        assert_eq!(*c.get(2, 0), rat_int(-2));
        assert!(a.compound(3).is_err());
    }

    #[test]
    fn compound_degree_one_is_self() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.compound(1).unwrap(), a);
        let c0 = a.compound(0).unwrap();
        assert_eq!(c0, RationalMatrix::identity(1));
    }

    #[test]
    fn canonical_bases_for_row_equivalent_matrices() {
        let a = Subspace::from_rows(3, vec![v(&[1, -1, 0]), v(&[0, 1, -1])]);
        let b = Subspace::from_rows(3, vec![v(&[1, 0, -1]), v(&[2, -1, -1])]);
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_rank_nullity() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.dim(), a.cols() - a.rank());
        for i in 0..k.dim() {
            assert!(a.mul_vec(k.basis_row(i)).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_and_inconsistency() {
        let a = m(&[&[1, 1], &[0, 1], &[1, 2]]);
        let b = RationalMatrix::from_rows(vec![v(&[3]), v(&[1]), v(&[4])]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let bad = RationalMatrix::from_rows(vec![v(&[3]), v(&[1]), v(&[5])]);
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn cauchy_binet_on_products() {
        let a = m(&[&[1, 2, 0], &[0, 1, 1], &[3, 0, 1]]);
        let b = m(&[&[2, 1, 1], &[1, 0, 2], &[0, 1, 1]]);
        let ab = a.mul(&b);
        for j in 0..=3 {
            let lhs = ab.compound(j).unwrap();
            let rhs = a.compound(j).unwrap().mul(&b.compound(j).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
