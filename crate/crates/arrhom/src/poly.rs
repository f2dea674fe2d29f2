//! Laurent polynomials with Gaussian-integer coefficients and half-integer
//! exponents, and the state-sum polynomials of arrangements: characteristic
//! (both normalizations), Poincaré, Tutte/Tutte-hat, and the framed Jones
//! polynomial of a signed arrangement.
//!
//! Exponents are stored doubled (integer half-steps), so `exp2 = 3` means
//! q^{3/2}.  The factor (−1)^a for half-integer a is interpreted as i^{2a};
//! this is what reproduces the kink values exactly.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arrangement::{SignedVectorArrangement, VectorArrangement};

/// A Gaussian integer a + bi.
pub type GaussianInt = num_complex::Complex<BigInt>;

pub fn gauss(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(BigInt::from(re), BigInt::from(im))
}

/// i^k for any integer k.
pub fn i_pow(k: i64) -> GaussianInt {
    match k.rem_euclid(4) {
        0 => gauss(1, 0),
        1 => gauss(0, 1),
        2 => gauss(-1, 0),
        _ => gauss(0, -1),
    }
}

/// Variables a Laurent polynomial may use.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Var {
    Q,
    X,
    Y,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::X => "x",
            Var::Y => "y",
        }
    }
}

/// Multivariate Laurent polynomial over the Gaussian integers.  The term
/// map is keyed by doubled exponent tuples; zero coefficients are dropped
/// and the canonical term order is lexicographic on the tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<i64>, GaussianInt>,
}

impl LaurentPoly {
    pub fn zero(vars: Vec<Var>) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<Var>, c: GaussianInt) -> Self {
        let n = vars.len();
        let mut p = Self::zero(vars);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn one(vars: Vec<Var>) -> Self {
        Self::constant(vars, gauss(1, 0))
    }

    /// Monomial with *doubled* exponents.
    pub fn monomial(vars: Vec<Var>, exp2: Vec<i64>, c: GaussianInt) -> Self {
        assert_eq!(vars.len(), exp2.len());
        let mut p = Self::zero(vars);
        p.add_term(exp2, c);
        p
    }

    /// Single variable to the first power.
    pub fn var(v: Var) -> Self {
        Self::monomial(vec![v], vec![2], gauss(1, 0))
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, GaussianInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp2: Vec<i64>, c: GaussianInt) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(exp2.clone())
            .or_insert_with(GaussianInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exp2);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = Self::one(self.vars.clone());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes one Laurent polynomial per variable.  Requires all
    /// exponents of `self` to be non-negative integers (even doubled).
    pub fn substitute(&self, images: &[LaurentPoly]) -> LaurentPoly {
        assert_eq!(images.len(), self.vars.len());
        let out_vars = images.first().map(|p| p.vars.clone()).unwrap_or_default();
        for im in images {
            assert_eq!(im.vars, out_vars);
        }
        let mut out = LaurentPoly::zero(out_vars.clone());
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(out_vars.clone(), c.clone());
            for (i, &d) in e.iter().enumerate() {
                assert!(d >= 0 && d % 2 == 0, "substitute needs plain exponents");
                term = term.mul(&images[i].pow((d / 2) as u32));
            }
            out = out.add(&term);
        }
        out
    }

    /// (1 + v) in the given variable list.
    pub fn one_plus(vars: Vec<Var>, v: Var) -> LaurentPoly {
        let idx = vars.iter().position(|&x| x == v).expect("variable present");
        let n = vars.len();
        let mut p = Self::one(vars);
        let mut e = vec![0; n];
        e[idx] = 2;
        p.add_term(e, gauss(1, 0));
        p
    }

    /// (q + q⁻¹) in the single variable q.
    pub fn q_plus_q_inv() -> LaurentPoly {
        let mut p = Self::zero(vec![Var::Q]);
        p.add_term(vec![2], gauss(1, 0));
        p.add_term(vec![-2], gauss(1, 0));
        p
    }

    /// Canonical rendering: terms by ascending exponent tuple, coefficients
    /// "a", "bi" or "(a+bi)", exponents "v^k" or "v^(p/2)" for odd doubles.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            let mono = self.render_monomial(e);
            let (lead, body) = render_coeff(c, !mono.is_empty());
            if out.is_empty() {
                if lead < 0 {
                    out.push('-');
                }
            } else if lead < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
            if !mono.is_empty() && !body.is_empty() {
                out.push('*');
            }
            out.push_str(&mono);
        }
        out
    }

    fn render_monomial(&self, exp2: &[i64]) -> String {
        let mut out = String::new();
        for (v, &d) in self.vars.iter().zip(exp2) {
            if d == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(v.name());
            if d == 2 {
                continue;
            }
            out.push('^');
            if d % 2 == 0 {
                out.push_str(&(d / 2).to_string());
            } else {
                out.push('(');
                out.push_str(&d.to_string());
                out.push_str("/2)");
            }
        }
        out
    }
}

/// Renders a Gaussian coefficient; returns (sign to hoist, body).  The body
/// omits "1" in front of a monomial unless the coefficient is genuinely 1.
fn render_coeff(c: &GaussianInt, has_mono: bool) -> (i32, String) {
    let (re, im) = (&c.re, &c.im);
    if im.is_zero() {
        let neg = re.is_negative();
        let a = re.magnitude().to_string();
        let body = if a == "1" && has_mono { String::new() } else { a };
        (if neg { -1 } else { 1 }, body)
    } else if re.is_zero() {
        let neg = im.is_negative();
        let b = im.magnitude().to_string();
        let body = if b == "1" { "i".to_string() } else { b + "i" };
        (if neg { -1 } else { 1 }, body)
    } else {
        let mut s = String::from("(");
        s.push_str(&re.to_string());
        if !im.is_negative() {
            s.push('+');
        }
        if *im == BigInt::from(-1) {
            s.push('-');
        } else if *im != BigInt::from(1) {
            s.push_str(&im.to_string());
        }
        s.push_str("i)");
        (1, s)
    }
}

pub(crate) fn signed_one(parity: u32) -> GaussianInt {
    if parity % 2 == 0 {
        gauss(1, 0)
    } else {
        gauss(-1, 0)
    }
}

/// χ(𝓗, q) = Σ_S (−1)^{|S|} (1+q)^{dim H_S}.
pub fn char_poly(a: &VectorArrangement) -> LaurentPoly {
    let one_plus_q = LaurentPoly::one_plus(vec![Var::Q], Var::Q);
    let mut out = LaurentPoly::zero(vec![Var::Q]);
    for s in 0..=a.full_mask() {
        let h = a.h_space(s).dim();
        let term = one_plus_q.pow(h as u32).scale(&signed_one(s.count_ones()));
        out = out.add(&term);
    }
    out
}

/// χ̄(𝓗, q) = Σ_S q^{|S|} (1−q)^{dim H_S}.
pub fn char_poly_bar(a: &VectorArrangement) -> LaurentPoly {
    let mut one_minus_q = LaurentPoly::one(vec![Var::Q]);
    one_minus_q.add_term(vec![2], gauss(-1, 0));
    let mut out = LaurentPoly::zero(vec![Var::Q]);
    for s in 0..=a.full_mask() {
        let h = a.h_space(s).dim();
        let q_pow =
            LaurentPoly::monomial(vec![Var::Q], vec![2 * s.count_ones() as i64], gauss(1, 0));
        out = out.add(&q_pow.mul(&one_minus_q.pow(h as u32)));
    }
    out
}

/// π(𝓗, q) = Σ_S (−1)^{|S|} (1+q)^{dim V_S}.
pub fn poincare_poly(a: &VectorArrangement) -> LaurentPoly {
    let one_plus_q = LaurentPoly::one_plus(vec![Var::Q], Var::Q);
    let mut out = LaurentPoly::zero(vec![Var::Q]);
    for s in 0..=a.full_mask() {
        let v = a.v_space(s).dim();
        out = out.add(&one_plus_q.pow(v as u32).scale(&signed_one(s.count_ones())));
    }
    out
}

/// T(𝓗; x, y) = Σ_S (x−1)^{dim H_S − dim H_{[n]}} (y−1)^{dim W_S}.
pub fn tutte_poly(a: &VectorArrangement) -> LaurentPoly {
    let vars = vec![Var::X, Var::Y];
    let mut x_minus_1 = LaurentPoly::monomial(vars.clone(), vec![2, 0], gauss(1, 0));
    x_minus_1.add_term(vec![0, 0], gauss(-1, 0));
    let mut y_minus_1 = LaurentPoly::monomial(vars.clone(), vec![0, 2], gauss(1, 0));
    y_minus_1.add_term(vec![0, 0], gauss(-1, 0));
    let h_full = a.h_space(a.full_mask()).dim();
    let mut out = LaurentPoly::zero(vars);
    for s in 0..=a.full_mask() {
        let h = a.h_space(s).dim();
        let w = a.w_space(s).dim();
        out = out.add(
            &x_minus_1
                .pow((h - h_full) as u32)
                .mul(&y_minus_1.pow(w as u32)),
        );
    }
    out
}

/// T̂(𝓗; x, y) = Σ_S (−1)^{|S|} (1+x)^{dim H_S} (1+y)^{dim W_S}.
pub fn tutte_hat(a: &VectorArrangement) -> LaurentPoly {
    let vars = vec![Var::X, Var::Y];
    let one_plus_x = LaurentPoly::one_plus(vars.clone(), Var::X);
    let one_plus_y = LaurentPoly::one_plus(vars.clone(), Var::Y);
    let mut out = LaurentPoly::zero(vars);
    for s in 0..=a.full_mask() {
        let h = a.h_space(s).dim();
        let w = a.w_space(s).dim();
        let term = one_plus_x
            .pow(h as u32)
            .mul(&one_plus_y.pow(w as u32))
            .scale(&signed_one(s.count_ones()));
        out = out.add(&term);
    }
    out
}

/// J(𝓥) = Σ_S (−1)^{|S|−n/2} q^{|S|−n/2} (q+q⁻¹)^{dim H_S̃ + dim W_S̃},
/// with (−1)^{|S|−n/2} read as i^{2|S|−n}.
pub fn framed_jones(sa: &SignedVectorArrangement) -> LaurentPoly {
    let n = sa.len() as i64;
    let qq = LaurentPoly::q_plus_q_inv();
    let mut out = LaurentPoly::zero(vec![Var::Q]);
    for s in 0..=sa.full_mask() {
        let tilde = sa.tilde(s);
        let h = sa.base().h_space(tilde).dim();
        let w = sa.base().w_space(tilde).dim();
        let size = s.count_ones() as i64;
        let coeff = i_pow(2 * size - n);
        let q_pow = LaurentPoly::monomial(vec![Var::Q], vec![2 * size - n], gauss(1, 0));
        out = out.add(&qq.pow((h + w) as u32).mul(&q_pow).scale(&coeff));
    }
    out
}
