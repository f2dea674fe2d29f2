//! Hypercube chain complexes of unsigned arrangements and the machinery
//! shared with the signed cube: multigraded complexes with sparse
//! differential blocks, Betti tables, graded Euler characteristics,
//! dg-algebra products and deletion–restriction short exact sequences.
//!
//! Every complex here is assembled the same way: chain groups live on the
//! vertices of the subset cube (one exterior algebra or a tensor product of
//! two per vertex), the differential is a sum of edge maps, basis elements
//! are grouped by their grading tuple and the differential becomes one
//! matrix per grading, moving along a single homological axis by a fixed
//! step.  `d² = 0` is asserted at build time.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arrangement::VectorArrangement;
use crate::error::ArrError;
use crate::exterior::ExteriorMap;
use crate::linalg::{Rational, RationalMatrix, Subspace};
use crate::poly::{gauss, i_pow, LaurentPoly, Var};

mod dg;
mod ses;

pub use dg::{
    dg_differential, dg_differential_with, dg_multiply, dg_multiply_with, dg_unit,
    leibniz_sign_exponent, ChainElement, DgKind, ProductRule,
};
pub use ses::{deletion_restriction_ses, verify_ses, BlockMap, SesKind, SesReport};

/// One basis element of a cube complex: a cube vertex, a copy tag (used by
/// direct sums), and wedge masks for the one or two tensor factors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BasisLabel {
    pub subset: u32,
    pub copy: u8,
    pub h_mask: u32,
    pub w_mask: u32,
}

/// Chain complex graded by tuples of integers (stored multiplied by
/// `denominator`, so half-integer gradings are exact), with the
/// differential moving only along `hom_axis` by `hom_step` stored units.
#[derive(Clone, Debug)]
pub struct MultigradedComplex {
    arity: usize,
    denominator: i64,
    hom_axis: usize,
    hom_step: i64,
    pieces: BTreeMap<Vec<i64>, Vec<BasisLabel>>,
    index: BTreeMap<BasisLabel, (Vec<i64>, usize)>,
    diffs: BTreeMap<Vec<i64>, RationalMatrix>,
}

/// Betti numbers: dimension of homology per grading tuple (stored doubled
/// when `denominator` is 2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    pub denominator: i64,
    pub arity: usize,
    table: BTreeMap<Vec<i64>, usize>,
}

impl BettiTable {
    pub fn new(denominator: i64, arity: usize) -> Self {
        BettiTable {
            denominator,
            arity,
            table: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, deg: Vec<i64>, dim: usize) {
        if dim > 0 {
            self.table.insert(deg, dim);
        }
    }

    pub fn get(&self, deg: &[i64]) -> usize {
        self.table.get(deg).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &usize)> {
        self.table.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.table.values().sum()
    }

    pub fn shift(&self, delta: &[i64]) -> BettiTable {
        assert_eq!(delta.len(), self.arity);
        let mut out = BettiTable::new(self.denominator, self.arity);
        for (deg, &dim) in &self.table {
            out.set(deg.iter().zip(delta).map(|(a, b)| a + b).collect(), dim);
        }
        out
    }

    /// Graded tensor product (Künneth convolution).
    pub fn convolve(&self, other: &BettiTable) -> BettiTable {
        assert_eq!(self.denominator, other.denominator);
        assert_eq!(self.arity, other.arity);
        let mut out = BettiTable::new(self.denominator, self.arity);
        for (da, &na) in &self.table {
            for (db, &nb) in &other.table {
                let deg: Vec<i64> = da.iter().zip(db).map(|(a, b)| a + b).collect();
                let cur = out.get(&deg);
                out.set(deg, cur + na * nb);
            }
        }
        out
    }

    /// Euler characteristic with (−1)^j read as i^{2j} along `hom_axis`;
    /// the remaining axes map to the given variables in order.
    pub fn euler_char(&self, hom_axis: usize, vars: &[Var]) -> LaurentPoly {
        let other_axes: Vec<usize> = (0..self.arity).filter(|&a| a != hom_axis).collect();
        assert_eq!(other_axes.len(), vars.len());
        let mut out = LaurentPoly::zero(vars.to_vec());
        for (deg, &dim) in &self.table {
            let sign = i_pow(2 * deg[hom_axis] / self.denominator);
            let exp2: Vec<i64> = other_axes.iter().map(|&a| 2 * deg[a] / self.denominator).collect();
            out.add_term(exp2, sign * gauss(dim as i64, 0));
        }
        out
    }
}

impl MultigradedComplex {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn hom_axis(&self) -> usize {
        self.hom_axis
    }

    pub fn hom_step(&self) -> i64 {
        self.hom_step
    }

    pub fn gradings(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.pieces.keys()
    }

    pub fn piece(&self, deg: &[i64]) -> &[BasisLabel] {
        self.pieces.get(deg).map(|v| &v[..]).unwrap_or(&[])
    }

    pub fn dim_at(&self, deg: &[i64]) -> usize {
        self.piece(deg).len()
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(|p| p.len()).sum()
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<(&Vec<i64>, usize)> {
        self.index.get(label).map(|(g, i)| (g, *i))
    }

    /// The differential block leaving the given grading, if any.
    pub fn differential_at(&self, deg: &[i64]) -> Option<&RationalMatrix> {
        self.diffs.get(deg)
    }

    pub fn next_grading(&self, deg: &[i64]) -> Vec<i64> {
        let mut out = deg.to_vec();
        out[self.hom_axis] += self.hom_step;
        out
    }

    pub fn prev_grading(&self, deg: &[i64]) -> Vec<i64> {
        let mut out = deg.to_vec();
        out[self.hom_axis] -= self.hom_step;
        out
    }

    /// Rank–nullity homology per grading tuple.
    pub fn betti(&self) -> BettiTable {
        let mut out = BettiTable::new(self.denominator, self.arity);
        for (g, labels) in &self.pieces {
            let dim = labels.len();
            let rank_out = self
                .diffs
                .get(g)
                .map(|m| m.rank())
                .unwrap_or(0);
            let rank_in = self
                .diffs
                .get(&self.prev_grading(g))
                .map(|m| m.rank())
                .unwrap_or(0);
            out.set(g.clone(), dim - rank_out - rank_in);
        }
        out
    }

    /// Graded Euler characteristic of the chain groups (equal to that of
    /// the homology since the differential is flat in the other axes).
    pub fn euler_char(&self, vars: &[Var]) -> LaurentPoly {
        let other_axes: Vec<usize> = (0..self.arity).filter(|&a| a != self.hom_axis).collect();
        assert_eq!(other_axes.len(), vars.len());
        let mut out = LaurentPoly::zero(vars.to_vec());
        for (deg, labels) in &self.pieces {
            let sign = i_pow(2 * deg[self.hom_axis] / self.denominator);
            let exp2: Vec<i64> = other_axes
                .iter()
                .map(|&a| 2 * deg[a] / self.denominator)
                .collect();
            out.add_term(exp2, sign * gauss(labels.len() as i64, 0));
        }
        out
    }

    /// Same complex with all gradings displaced by `delta` (stored units).
    pub fn shift(&self, delta: &[i64]) -> MultigradedComplex {
        assert_eq!(delta.len(), self.arity);
        let bump = |g: &Vec<i64>| -> Vec<i64> { g.iter().zip(delta).map(|(a, b)| a + b).collect() };
        MultigradedComplex {
            arity: self.arity,
            denominator: self.denominator,
            hom_axis: self.hom_axis,
            hom_step: self.hom_step,
            pieces: self.pieces.iter().map(|(g, v)| (bump(g), v.clone())).collect(),
            index: self
                .index
                .iter()
                .map(|(l, (g, i))| (*l, (bump(g), *i)))
                .collect(),
            diffs: self.diffs.iter().map(|(g, m)| (bump(g), m.clone())).collect(),
        }
    }

    /// Direct sum; labels of `other` get their copy tag raised above all of
    /// `self`'s so the two stay distinguishable.
    pub fn direct_sum(&self, other: &MultigradedComplex) -> MultigradedComplex {
        assert_eq!(self.arity, other.arity);
        assert_eq!(self.denominator, other.denominator);
        assert_eq!(self.hom_axis, other.hom_axis);
        assert_eq!(self.hom_step, other.hom_step);
        let bump = self
            .index
            .keys()
            .map(|l| l.copy)
            .max()
            .map(|c| c + 1)
            .unwrap_or(0);
        let relabel = |l: &BasisLabel| BasisLabel {
            copy: l.copy + bump,
            ..*l
        };
        let mut pieces = self.pieces.clone();
        let mut index = self.index.clone();
        for (g, labels) in &other.pieces {
            let entry = pieces.entry(g.clone()).or_default();
            for l in labels {
                let nl = relabel(l);
                index.insert(nl, (g.clone(), entry.len()));
                entry.push(nl);
            }
        }
        // Diffs: block-diagonal in the merged piece order.
        let mut diffs = BTreeMap::new();
        let gradings: Vec<Vec<i64>> = pieces.keys().cloned().collect();
        for g in &gradings {
            let next = {
                let mut n = g.clone();
                n[self.hom_axis] += self.hom_step;
                n
            };
            let rows = pieces.get(&next).map(|v| v.len()).unwrap_or(0);
            let cols = pieces[g].len();
            if rows == 0 || cols == 0 {
                continue;
            }
            let a_diff = self.diffs.get(g);
            let b_diff = other.diffs.get(g);
            if a_diff.is_none() && b_diff.is_none() {
                continue;
            }
            let a_cols = self.pieces.get(g).map(|v| v.len()).unwrap_or(0);
            let a_rows = self.pieces.get(&next).map(|v| v.len()).unwrap_or(0);
            let mut m = RationalMatrix::zeros(rows, cols);
            if let Some(d) = a_diff {
                for i in 0..d.rows() {
                    for j in 0..d.cols() {
                        let e = d.get(i, j);
                        if !e.is_zero() {
                            m.set(i, j, e.clone());
                        }
                    }
                }
            }
            if let Some(d) = b_diff {
                for i in 0..d.rows() {
                    for j in 0..d.cols() {
                        let e = d.get(i, j);
                        if !e.is_zero() {
                            m.set(a_rows + i, a_cols + j, e.clone());
                        }
                    }
                }
            }
            if !m.is_zero() {
                diffs.insert(g.clone(), m);
            }
        }
        MultigradedComplex {
            arity: self.arity,
            denominator: self.denominator,
            hom_axis: self.hom_axis,
            hom_step: self.hom_step,
            pieces,
            index,
            diffs,
        }
    }
}

/// Raw description of a cube complex before grading assembly.
pub(crate) struct CubeData {
    pub arity: usize,
    pub denominator: i64,
    pub hom_axis: usize,
    pub hom_step: i64,
    /// Vertex spaces: subset → (first factor, second factor).  A trivial
    /// second factor is the zero subspace of a 0-dimensional ambient.
    pub vertices: BTreeMap<u32, (Subspace, Subspace)>,
    /// Edges: (source subset, target subset, map on factor 1, map on
    /// factor 2, scalar).  The tensor map acts factorwise (no Koszul sign):
    /// (f⊗g)(x⊗y) = f(x)⊗g(y).
    pub edges: Vec<(u32, u32, ExteriorMap, ExteriorMap, Rational)>,
    /// Grading of a basis element at vertex S with factor degrees (i, j).
    pub grading: Box<dyn Fn(u32, usize, usize) -> Vec<i64>>,
}

pub(crate) fn trivial_factor() -> Subspace {
    Subspace::zero(0)
}

impl CubeData {
    /// Groups the vertex bases by grading, scatters the edge maps into
    /// per-grading blocks and checks d² = 0.
    pub fn assemble(self) -> MultigradedComplex {
        let mut pieces: BTreeMap<Vec<i64>, Vec<BasisLabel>> = BTreeMap::new();
        let mut index: BTreeMap<BasisLabel, (Vec<i64>, usize)> = BTreeMap::new();
        for (&s, (a, b)) in &self.vertices {
            for h_mask in 0..(1u32 << a.dim()) {
                for w_mask in 0..(1u32 << b.dim()) {
                    let label = BasisLabel {
                        subset: s,
                        copy: 0,
                        h_mask,
                        w_mask,
                    };
                    let g = (self.grading)(
                        s,
                        h_mask.count_ones() as usize,
                        w_mask.count_ones() as usize,
                    );
                    let entry = pieces.entry(g.clone()).or_default();
                    index.insert(label, (g, entry.len()));
                    entry.push(label);
                }
            }
        }
        let mut diffs: BTreeMap<Vec<i64>, RationalMatrix> = BTreeMap::new();
        for (src, tgt, f, g, scalar) in &self.edges {
            let mf = f.full_matrix();
            let mg = g.full_matrix();
            let (sa, sb) = &self.vertices[src];
            let (ta, tb) = &self.vertices[tgt];
            for sh in 0..(1u32 << sa.dim()) {
                for th in 0..(1u32 << ta.dim()) {
                    let ch = mf.get(th as usize, sh as usize);
                    if ch.is_zero() {
                        continue;
                    }
                    for sw in 0..(1u32 << sb.dim()) {
                        for tw in 0..(1u32 << tb.dim()) {
                            let cw = mg.get(tw as usize, sw as usize);
                            if cw.is_zero() {
                                continue;
                            }
                            let sl = BasisLabel {
                                subset: *src,
                                copy: 0,
                                h_mask: sh,
                                w_mask: sw,
                            };
                            let tl = BasisLabel {
                                subset: *tgt,
                                copy: 0,
                                h_mask: th,
                                w_mask: tw,
                            };
                            let (gs, is) = &index[&sl];
                            let (gt, it) = &index[&tl];
                            let mut expect = gs.clone();
                            expect[self.hom_axis] += self.hom_step;
                            assert_eq!(
                                gt, &expect,
                                "edge map not homogeneous along the homological axis"
                            );
                            let rows = pieces[gt].len();
                            let cols = pieces[gs].len();
                            let m = diffs
                                .entry(gs.clone())
                                .or_insert_with(|| RationalMatrix::zeros(rows, cols));
                            let cur = m.get(*it, *is) + ch * cw * scalar;
                            m.set(*it, *is, cur);
                        }
                    }
                }
            }
        }
        diffs.retain(|_, m| !m.is_zero());
        let out = MultigradedComplex {
            arity: self.arity,
            denominator: self.denominator,
            hom_axis: self.hom_axis,
            hom_step: self.hom_step,
            pieces,
            index,
            diffs,
        };
        out.assert_d_squared();
        out
    }
}

impl MultigradedComplex {
    pub fn assert_d_squared(&self) {
        for (g, d1) in &self.diffs {
            if let Some(d2) = self.diffs.get(&self.next_grading(g)) {
                assert!(d2.mul(d1).is_zero(), "differential does not square to zero");
            }
        }
    }
}

/// −1 iff the number of elements of S below r is odd: the sign that makes
/// the commutative cubes anti-commute.
pub fn edge_sign(subset: u32, r: usize) -> Result<Rational, ArrError> {
    if subset >> r & 1 == 1 {
        return Err(ArrError::Precondition(alloc::format!(
            "edge direction {r} already in subset"
        )));
    }
    let below = (subset & ((1u32 << r) - 1)).count_ones();
    Ok(if below % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    })
}

fn subset_masks(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

/// C_d: pieces ∧^i H_S in bidegree (|S|, i); differential the signed sums
/// of maps induced by the orthogonal projections H_S → H_{S∪r}.
pub fn build_characteristic_d(a: &VectorArrangement) -> MultigradedComplex {
    let n = a.len();
    let h: BTreeMap<u32, Subspace> = subset_masks(n).map(|s| (s, a.h_space(s))).collect();
    let trivial = trivial_factor();
    let mut edges = Vec::new();
    for s in subset_masks(n) {
        for r in 0..n {
            if s >> r & 1 == 1 {
                continue;
            }
            let t = s | 1 << r;
            let f = ExteriorMap::induced_projection(&h[&s], &h[&t]);
            edges.push((
                s,
                t,
                f,
                ExteriorMap::identity(&trivial),
                edge_sign(s, r).unwrap(),
            ));
        }
    }
    CubeData {
        arity: 2,
        denominator: 1,
        hom_axis: 0,
        hom_step: 1,
        vertices: h
            .into_iter()
            .map(|(s, sp)| (s, (sp, trivial_factor())))
            .collect(),
        edges,
        grading: Box::new(|s, i, _| vec![s.count_ones() as i64, i as i64]),
    }
    .assemble()
}

/// C_∂: same chain groups as C_d, regraded to (|S|+i, i); differential the
/// wedge maps ∧•H_S → ∧^{•+1}H_{S−s}, no sign choices.
pub fn build_characteristic_partial(a: &VectorArrangement) -> MultigradedComplex {
    let n = a.len();
    let h: BTreeMap<u32, Subspace> = subset_masks(n).map(|s| (s, a.h_space(s))).collect();
    let trivial = trivial_factor();
    let mut edges = Vec::new();
    for s in subset_masks(n) {
        for r in 0..n {
            if s >> r & 1 == 0 {
                continue;
            }
            let t = s & !(1 << r);
            let f = ExteriorMap::wedge(a.vector(r), &h[&s], &h[&t]).unwrap();
            edges.push((s, t, f, ExteriorMap::identity(&trivial), Rational::one()));
        }
    }
    CubeData {
        arity: 2,
        denominator: 1,
        hom_axis: 1,
        hom_step: 1,
        vertices: h
            .into_iter()
            .map(|(s, sp)| (s, (sp, trivial_factor())))
            .collect(),
        edges,
        grading: Box::new(|s, i, _| vec![s.count_ones() as i64 + i as i64, i as i64]),
    }
    .assemble()
}

/// C^P_d: pieces ∧^i V_S at (|S|, i); differential the signed induced
/// inclusions ∧•V_S ↪ ∧•V_{S∪r}.
pub fn build_poincare_d(a: &VectorArrangement) -> MultigradedComplex {
    let n = a.len();
    let v: BTreeMap<u32, Subspace> = subset_masks(n).map(|s| (s, a.v_space(s))).collect();
    let trivial = trivial_factor();
    let mut edges = Vec::new();
    for s in subset_masks(n) {
        for r in 0..n {
            if s >> r & 1 == 1 {
                continue;
            }
            let t = s | 1 << r;
            let f = ExteriorMap::induced_inclusion(&v[&s], &v[&t]).unwrap();
            edges.push((
                s,
                t,
                f,
                ExteriorMap::identity(&trivial),
                edge_sign(s, r).unwrap(),
            ));
        }
    }
    CubeData {
        arity: 2,
        denominator: 1,
        hom_axis: 0,
        hom_step: 1,
        vertices: v
            .into_iter()
            .map(|(s, sp)| (s, (sp, trivial_factor())))
            .collect(),
        edges,
        grading: Box::new(|s, i, _| vec![s.count_ones() as i64, i as i64]),
    }
    .assemble()
}

/// C^T_d: pieces ∧^i H_S ⊗ ∧^j W_S at (|S|, i, j); differential the signed
/// tensor of induced projection and induced inclusion.
pub fn build_tutte_d(a: &VectorArrangement) -> MultigradedComplex {
    let n = a.len();
    let spaces: BTreeMap<u32, (Subspace, Subspace)> = subset_masks(n)
        .map(|s| (s, (a.h_space(s), a.w_space(s))))
        .collect();
    let mut edges = Vec::new();
    for s in subset_masks(n) {
        for r in 0..n {
            if s >> r & 1 == 1 {
                continue;
            }
            let t = s | 1 << r;
            let f = ExteriorMap::induced_projection(&spaces[&s].0, &spaces[&t].0);
            let g = ExteriorMap::induced_inclusion(&spaces[&s].1, &spaces[&t].1).unwrap();
            edges.push((s, t, f, g, edge_sign(s, r).unwrap()));
        }
    }
    CubeData {
        arity: 3,
        denominator: 1,
        hom_axis: 0,
        hom_step: 1,
        vertices: spaces,
        edges,
        grading: Box::new(|s, i, j| vec![s.count_ones() as i64, i as i64, j as i64]),
    }
    .assemble()
}

/// The four natural wedge/contraction differentials on the Tutte chain
/// groups ∧^i H_S ⊗ ∧^j W_S (variants 1–4); all are anti-commutative
/// without sign assignments.
pub fn build_tutte_partial(
    a: &VectorArrangement,
    variant: u8,
) -> Result<MultigradedComplex, ArrError> {
    if !(1..=4).contains(&variant) {
        return Err(ArrError::InvalidVariant(alloc::format!(
            "tutte-partial variant {variant} (expected 1..4)"
        )));
    }
    let n = a.len();
    let spaces: BTreeMap<u32, (Subspace, Subspace)> = subset_masks(n)
        .map(|s| (s, (a.h_space(s), a.w_space(s))))
        .collect();
    let mut edges = Vec::new();
    let unit_vec = |r: usize| -> Vec<Rational> {
        let mut e = vec![Rational::zero(); n];
        e[r] = Rational::one();
        e
    };
    for s in subset_masks(n) {
        match variant {
            // ∂₁ = ⊕ w_{S,s} ⊗ b_{S,s}, down edges
            1 => {
                for r in 0..n {
                    if s >> r & 1 == 0 {
                        continue;
                    }
                    let t = s & !(1 << r);
                    let f = ExteriorMap::wedge(a.vector(r), &spaces[&s].0, &spaces[&t].0)?;
                    let g = ExteriorMap::induced_projection(&spaces[&s].1, &spaces[&t].1);
                    edges.push((s, t, f, g, Rational::one()));
                }
            }
            // ∂₂ = ⊕ b_{S,s} ⊗ c_{S,s}, down edges
            2 => {
                for r in 0..n {
                    if s >> r & 1 == 0 {
                        continue;
                    }
                    let t = s & !(1 << r);
                    let f = ExteriorMap::induced_inclusion(&spaces[&s].0, &spaces[&t].0)?;
                    let g = ExteriorMap::contraction(&unit_vec(r), &spaces[&s].1, &spaces[&t].1)?;
                    edges.push((s, t, f, g, Rational::one()));
                }
            }
            // ∂₃ = ⊕ d_{S,r} ⊗ w_{S,r}, up edges
            3 => {
                for r in 0..n {
                    if s >> r & 1 == 1 {
                        continue;
                    }
                    let t = s | 1 << r;
                    let f = ExteriorMap::induced_projection(&spaces[&s].0, &spaces[&t].0);
                    let g = ExteriorMap::wedge(&unit_vec(r), &spaces[&s].1, &spaces[&t].1)?;
                    edges.push((s, t, f, g, Rational::one()));
                }
            }
            // ∂₄ = ⊕ c_{S,r} ⊗ d_{S,r}, up edges
            _ => {
                for r in 0..n {
                    if s >> r & 1 == 1 {
                        continue;
                    }
                    let t = s | 1 << r;
                    let f = ExteriorMap::contraction(a.vector(r), &spaces[&s].0, &spaces[&t].0)?;
                    let g = ExteriorMap::induced_inclusion(&spaces[&s].1, &spaces[&t].1)?;
                    edges.push((s, t, f, g, Rational::one()));
                }
            }
        }
    }
    let (hom_axis, hom_step): (usize, i64) = match variant {
        1 => (1, 1),
        2 => (2, -1),
        3 => (2, 1),
        _ => (1, -1),
    };
    let grading: Box<dyn Fn(u32, usize, usize) -> Vec<i64>> = match variant {
        1 | 4 => Box::new(|s, i, j| vec![s.count_ones() as i64 + i as i64, i as i64, j as i64]),
        _ => Box::new(|s, i, j| vec![s.count_ones() as i64 - j as i64, i as i64, j as i64]),
    };
    Ok(CubeData {
        arity: 3,
        denominator: 1,
        hom_axis,
        hom_step,
        vertices: spaces,
        edges,
        grading,
    }
    .assemble())
}

/// The named homology theories, as selected by the CLI and the test suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Theory {
    D,
    Partial,
    PoincareD,
    TutteD,
    TuttePartial(u8),
}

pub fn build_theory(a: &VectorArrangement, theory: Theory) -> Result<MultigradedComplex, ArrError> {
    Ok(match theory {
        Theory::D => build_characteristic_d(a),
        Theory::Partial => build_characteristic_partial(a),
        Theory::PoincareD => build_poincare_d(a),
        Theory::TutteD => build_tutte_d(a),
        Theory::TuttePartial(v) => build_tutte_partial(a, v)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;
    use crate::poly::{char_poly, char_poly_bar, poincare_poly, tutte_hat};

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
    fn edge_sign_rule() {
        assert_eq!(edge_sign(0, 3).unwrap(), Rational::one());
        // 1-based S={1,3}, r=2 → 0-based S={0,2}, r=1: one element below
        assert_eq!(edge_sign(0b101, 1).unwrap(), -Rational::one());
        // 1-based S={1,2}, r=3 → 0-based S={0,1}, r=2: two elements below
        assert_eq!(edge_sign(0b011, 2).unwrap(), Rational::one());
        assert!(edge_sign(0b1, 0).is_err());
    }

    #[test]
    fn characteristic_d_shapes() {
        let empty = build_characteristic_d(&VectorArrangement::empty(2));
        assert_eq!(empty.total_dim(), 4);
        assert!(empty.diffs.is_empty());

        let c = build_characteristic_d(&baby());
        // columns: |S| = 0: 2^3; |S| = 1: 2^2 + 2^2; |S| = 2: 2^1
        let col = |i: i64| -> usize {
            c.gradings()
                .filter(|g| g[0] == i)
                .map(|g| c.dim_at(g))
                .sum()
        };
        assert_eq!(col(0), 8);
        assert_eq!(col(1), 8);
        assert_eq!(col(2), 2);
    }

    #[test]
    fn characteristic_d_euler_is_char_poly() {
        for a in [baby(), braid(), VectorArrangement::new(2, vec![v(&[0, 0]), v(&[1, 1])])] {
            let c = build_characteristic_d(&a);
            assert_eq!(c.euler_char(&[Var::Q]), char_poly(&a));
            assert_eq!(c.betti().euler_char(0, &[Var::Q]), char_poly(&a));
        }
    }

    #[test]
    fn characteristic_partial_euler_is_char_bar() {
        for a in [baby(), braid(), VectorArrangement::new(1, vec![v(&[0])])] {
            let c = build_characteristic_partial(&a);
            assert_eq!(c.euler_char(&[Var::Q]), char_poly_bar(&a));
        }
    }

    #[test]
    fn characteristic_partial_examples() {
        // empty(k): zero differential, homology = ∧•Q^k
        let c = build_characteristic_partial(&VectorArrangement::empty(3));
        assert!(c.diffs.is_empty());
        let b = c.betti();
        for i in 0..=3i64 {
            assert_eq!(b.get(&[i, i]), [1, 3, 3, 1][i as usize]);
        }
        // single hyperplane: total homology dim 1
        let c = build_characteristic_partial(&VectorArrangement::new(1, vec![v(&[1])]));
        assert_eq!(c.betti().total_dim(), 1);
        assert_eq!(c.betti().get(&[0, 0]), 1);
        // degenerate hyperplane: total homology dim 4
        let c = build_characteristic_partial(&VectorArrangement::new(1, vec![v(&[0])]));
        assert_eq!(c.betti().total_dim(), 4);
    }

    #[test]
    fn characteristic_d_homology_examples() {
        // baby: classes exactly at (0,3) and (0,2)
        let b = build_characteristic_d(&baby()).betti();
        assert_eq!(b.get(&[0, 3]), 1);
        assert_eq!(b.get(&[0, 2]), 1);
        assert_eq!(b.total_dim(), 2);
        // maximal independent: single class at (0, n)
        let indep = VectorArrangement::new(2, vec![v(&[1, 0]), v(&[0, 1])]);
        let b = build_characteristic_d(&indep).betti();
        assert_eq!(b.get(&[0, 2]), 1);
        assert_eq!(b.total_dim(), 1);
        // degenerate hyperplane: zero homology
        let degen = VectorArrangement::new(2, vec![v(&[0, 0]), v(&[1, 1])]);
        assert!(build_characteristic_d(&degen).betti().is_empty());
    }

    #[test]
    fn poincare_d_shapes_and_euler() {
        // the empty arrangement has a single cube vertex with V = 0
        let c = build_poincare_d(&VectorArrangement::empty(2));
        assert_eq!(c.total_dim(), 1);
        for a in [baby(), braid(), VectorArrangement::new(1, vec![v(&[1])])] {
            let c = build_poincare_d(&a);
            assert_eq!(c.euler_char(&[Var::Q]), poincare_poly(&a));
        }
        let c = build_poincare_d(&VectorArrangement::new(1, vec![v(&[1])]));
        assert_eq!(c.dim_at(&[0, 0]), 1);
        assert_eq!(c.dim_at(&[1, 0]), 1);
        assert_eq!(c.dim_at(&[1, 1]), 1);
    }

    #[test]
    fn tutte_d_euler_is_tutte_hat() {
        for a in [baby(), braid(), VectorArrangement::new(1, vec![v(&[1]), v(&[2])])] {
            let c = build_tutte_d(&a);
            assert_eq!(c.euler_char(&[Var::X, Var::Y]), tutte_hat(&a));
        }
    }

    #[test]
    fn tutte_partial_builds_and_substitution_identity() {
        // χ of C^T_∂₁ = (−x)^k T̂(−1/x, −1−x−xy)
        for a in [baby(), braid(), VectorArrangement::new(1, vec![v(&[1]), v(&[0])])] {
            let c = build_tutte_partial(&a, 1).unwrap();
            let vars = vec![Var::X, Var::Y];
            let inv_neg_x = LaurentPoly::monomial(vars.clone(), vec![-2, 0], gauss(-1, 0));
            let mut img_y = LaurentPoly::constant(vars.clone(), gauss(-1, 0));
            img_y.add_term(vec![2, 0], gauss(-1, 0));
            img_y.add_term(vec![2, 2], gauss(-1, 0));
            let neg_x_k = LaurentPoly::monomial(vars.clone(), vec![2, 0], gauss(-1, 0))
                .pow(a.ambient_dim() as u32);
            let rhs = tutte_hat(&a).substitute(&[inv_neg_x, img_y]).mul(&neg_x_k);
            assert_eq!(c.euler_char(&[Var::X, Var::Y]), rhs);
        }
        assert!(build_tutte_partial(&baby(), 0).is_err());
        assert!(build_tutte_partial(&baby(), 5).is_err());
    }

    #[test]
    fn tutte_partial_variants_one_and_four_transpose_dual() {
        for a in [baby(), braid()] {
            let b1 = build_tutte_partial(&a, 1).unwrap().betti();
            let b4 = build_tutte_partial(&a, 4).unwrap().betti();
            assert_eq!(b1, b4);
        }
        // variants 2 and 3 are also mutual transposes
        for a in [baby(), braid()] {
            let b2 = build_tutte_partial(&a, 2).unwrap().betti();
            let b3 = build_tutte_partial(&a, 3).unwrap().betti();
            assert_eq!(b2, b3);
        }
    }

    #[test]
    fn permutation_invariance_of_betti() {
        let a = braid();
        let perm = [2usize, 0, 1];
        let ap = a.permute(&perm);
        for theory in [
            Theory::D,
            Theory::Partial,
            Theory::PoincareD,
            Theory::TutteD,
            Theory::TuttePartial(1),
            Theory::TuttePartial(2),
            Theory::TuttePartial(3),
            Theory::TuttePartial(4),
        ] {
            let b1 = build_theory(&a, theory).unwrap().betti();
            let b2 = build_theory(&ap, theory).unwrap().betti();
            assert_eq!(b1, b2, "betti changed under permutation for {theory:?}");
        }
    }

    #[test]
    fn kunneth_for_characteristic_d() {
        let a = baby();
        let b = VectorArrangement::new(1, vec![v(&[1])]);
        let p = a.product(&b);
        for theory in [Theory::D, Theory::Partial, Theory::PoincareD, Theory::TutteD] {
            let ba = build_theory(&a, theory).unwrap().betti();
            let bb = build_theory(&b, theory).unwrap().betti();
            let bp = build_theory(&p, theory).unwrap().betti();
            assert_eq!(bp, ba.convolve(&bb), "kunneth failed for {theory:?}");
        }
    }

    #[test]
    fn baby_kernel_contains_paper_classes() {
        // Homology of C_d(baby) in column 0 is the kernel of the outgoing
        // differential; check it contains x1x2x3 and x1x3 − x1x2 − x2x3.
        let c = build_characteristic_d(&baby());
        // (0,3): piece is ∧³Q³ at S=∅, mask 0b111
        let g3 = vec![0i64, 3];
        assert_eq!(c.dim_at(&g3), 1);
        assert!(c.differential_at(&g3).is_none() || c.differential_at(&g3).unwrap().is_zero());
        // (0,2): kernel of the outgoing block
        let g2 = vec![0i64, 2];
        let d = c.differential_at(&g2).unwrap();
        let ker = d.kernel_basis();
        assert_eq!(ker.dim(), 1);
        // order of ∧² masks at S=∅: 0b011 (e1e2), 0b101 (e1e3), 0b110 (e2e3)
        let labels = c.piece(&g2);
        assert_eq!(labels.len(), 3);
        let coeff_of = |mask: u32| -> Rational {
            let pos = labels.iter().position(|l| l.h_mask == mask).unwrap();
            ker.basis_row(0)[pos].clone()
        };
        // x1x3 − x1x2 − x2x3, up to scale
        let c12 = coeff_of(0b011);
        let c13 = coeff_of(0b101);
        let c23 = coeff_of(0b110);
        assert_eq!(c12, -c13.clone());
        assert_eq!(c23, -c13.clone());
        assert!(!c13.is_zero());
    }
}
