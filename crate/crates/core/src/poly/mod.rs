//! Dense univariate and sparse bivariate polynomials over an exact field.
//!
//! `UniPoly` stores coefficients in ascending degree order; the vector is
//! empty for the zero polynomial and otherwise ends in a nonzero coefficient.
//! `BivariatePoly` maps exponent pairs `(a, b)` (for `x^a y^b`) to nonzero
//! coefficients; zero coefficients are never stored.

mod gcd;
mod parse;

pub use gcd::{poly_gcd, squarefree_decomposition, squarefree_part};
pub use parse::{parse_poly, ParseError};

use std::collections::BTreeMap;
use std::fmt;



use crate::field::Field;
use crate::Rat;

// ---------------------------------------------------------------------------
// Univariate polynomials
// ---------------------------------------------------------------------------

/// A dense univariate polynomial with coefficients in `K`, ascending degrees.
#[derive(Clone, PartialEq)]
pub struct UniPoly<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![K::one()],
        }
    }

    pub fn constant(c: K) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The monomial c * t^deg.
    pub fn monomial(c: K, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// Minimal degree of a nonzero term, `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Make monic (leading coefficient one). Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Division with remainder over the field.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dlc = d.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap().div_exact(&dlc);
            let shift = rd - dd;
            quot[shift] = c.clone();
            let sub = d.scale(&c);
            let mut sub_coeffs = vec![K::zero(); shift];
            sub_coeffs.extend(sub.coeffs);
            rem = rem.sub(&UniPoly::from_coeffs(sub_coeffs));
        }
        (Self::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact univariate division");
        q
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut s = K::zero();
                for _ in 0..i {
                    s = s + c.clone();
                }
                s
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Map coefficients into another field.
    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Resultant of two polynomials, computed by a fraction-free-ish Euclidean
    /// scheme over the field.
    pub fn resultant(&self, rhs: &Self) -> K {
        let mut a = self.clone();
        let mut b = rhs.clone();
        if a.is_zero() || b.is_zero() {
            return K::zero();
        }
        let mut acc = K::one();
        let mut sign_flip = false;
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                // res(a, c) = c^{deg a}
                let c = b.coeff(0);
                let mut pw = K::one();
                for _ in 0..da {
                    pw = pw * c.clone();
                }
                let mut out = acc * pw;
                if sign_flip {
                    out = -out;
                }
                return out;
            }
            let (_, r) = a.div_rem(&b);
            if r.is_zero() {
                return K::zero();
            }
            let dr = r.degree().unwrap();
            // res(a,b) = (-1)^{da*db} lc(b)^{da - dr} res(b, r)
            if (da * db) % 2 == 1 {
                sign_flip = !sign_flip;
            }
            let lcb = b.leading_coeff().unwrap().clone();
            for _ in 0..(da - dr) {
                acc = acc * lcb.clone();
            }
            a = b;
            b = r;
        }
    }

    /// Squarefree decomposition by Yun's algorithm: returns `[(S_k, k)]` with
    /// `self = lc * prod S_k^k`, each `S_k` monic squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.monic();
        if f.degree() == Some(0) {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut out = Vec::new();
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut k = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.degree().map_or(false, |d| d > 0) {
                    out.push((b.monic(), k));
                }
                break;
            }
            let s = b.gcd(&d);
            if s.degree().map_or(false, |d| d > 0) {
                out.push((s.monic(), k));
            }
            b = b.div_exact(&s);
            c = d.div_exact(&s);
            k += 1;
            if b.degree() == Some(0) {
                break;
            }
        }
        out
    }

    /// Monic squarefree part (product of distinct irreducible factors).
    pub fn squarefree_part(&self) -> Self {
        let f = self.monic();
        if f.degree().map_or(true, |d| d == 0) {
            return f;
        }
        f.div_exact(&f.gcd(&f.derivative())).monic()
    }
}

impl<K: Field> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})t^{}", c, i)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Bivariate polynomials
// ---------------------------------------------------------------------------

/// A sparse bivariate polynomial: exponent pairs `(a, b)` for `x^a y^b`
/// mapped to nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct BivariatePoly<K: Field> {
    terms: BTreeMap<(u32, u32), K>,
}

impl<K: Field> BivariatePoly<K> {
    pub fn zero() -> Self {
        BivariatePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(K::one(), 0, 0)
    }

    pub fn var_x() -> Self {
        Self::monomial(K::one(), 1, 0)
    }

    pub fn var_y() -> Self {
        Self::monomial(K::one(), 0, 1)
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: K, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        BivariatePoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = ((u32, u32), K)>) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in iter {
            p.add_term(a, b, c);
        }
        p
    }

    fn add_term(&mut self, a: u32, b: u32, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(a, b)) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&(a, b));
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert((a, b), c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: u32, b: u32) -> K {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a == 0 && b == 0)
    }

    /// True if nonzero at the origin.
    pub fn is_unit_at_origin(&self) -> bool {
        !self.coeff(0, 0).is_zero()
    }

    /// Total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    /// Order at the origin: minimal total degree of a term, `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).min()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Graded-lex leading exponent pair (total degree first, then x-exponent).
    pub fn leading_monomial(&self) -> Option<(u32, u32)> {
        self.terms
            .keys()
            .copied()
            .max_by(|&(a1, b1), &(a2, b2)| (a1 + b1, a1).cmp(&(a2 + b2, a2)))
    }

    pub fn leading_coeff(&self) -> Option<K> {
        self.leading_monomial().map(|m| self.terms[&m].clone())
    }

    /// Scale so the graded-lex leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Exact division by repeated cancellation of graded-lex leading terms.
    /// Panics if the division is not exact.
    pub fn div_exact(&self, d: &Self) -> Self {
        self.try_div_exact(d).expect("inexact bivariate division")
    }

    /// Exact division; `None` if not exact.
    pub fn try_div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (da, db) = d.leading_monomial().unwrap();
        let dc = d.terms[&(da, db)].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (ra, rb) = rem.leading_monomial().unwrap();
            if ra < da || rb < db {
                return None;
            }
            let c = rem.terms[&(ra, rb)].div_exact(&dc);
            let t = Self::monomial(c, ra - da, rb - db);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(d));
        }
        Some(quot)
    }

    /// The homogeneous part of minimal total degree (tangent cone at origin).
    pub fn lowest_form(&self) -> Self {
        match self.order() {
            None => Self::zero(),
            Some(m) => BivariatePoly {
                terms: self
                    .terms
                    .iter()
                    .filter(|(&(a, b), _)| a + b == m)
                    .map(|(&k, c)| (k, c.clone()))
                    .collect(),
            },
        }
    }

    /// Substitute polynomials for both variables.
    pub fn substitute(&self, x: &Self, y: &Self) -> Self {
        // Horner-like over y for each x-degree block would be fine; with the
        // sizes at hand a power cache is simpler.
        let mut xp: Vec<Self> = vec![Self::one()];
        let mut yp: Vec<Self> = vec![Self::one()];
        let dx = self.deg_x().unwrap_or(0) as usize;
        let dy = self.deg_y().unwrap_or(0) as usize;
        for i in 1..=dx {
            xp.push(xp[i - 1].mul(x));
        }
        for i in 1..=dy {
            yp.push(yp[i - 1].mul(y));
        }
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out = out.add(&xp[a as usize].mul(&yp[b as usize]).scale(c));
        }
        out
    }

    /// Evaluate at a point.
    pub fn eval(&self, x: &K, y: &K) -> K {
        let mut out = K::zero();
        for (&(a, b), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..a {
                t = t * x.clone();
            }
            for _ in 0..b {
                t = t * y.clone();
            }
            out = out + t;
        }
        out
    }

    /// Exponent of the largest power of x dividing the polynomial.
    pub fn x_order(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).min()
    }

    /// Exponent of the largest power of y dividing the polynomial.
    pub fn y_order(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).min()
    }

    /// Divide by x^a y^b exactly.
    pub fn shift_down(&self, a: u32, b: u32) -> Self {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    assert!(i >= a && j >= b, "shift_down not exact");
                    ((i - a, j - b), c.clone())
                })
                .collect(),
        }
    }

    /// View as a univariate polynomial in y with `UniPoly` coefficients in x —
    /// only available through `to_y_coeffs`/`from_y_coeffs` to keep types simple.
    pub fn to_y_coeffs(&self) -> Vec<UniPoly<K>> {
        let dy = match self.deg_y() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![UniPoly::zero(); dy + 1];
        let dx = self.deg_x().unwrap_or(0) as usize;
        for (&(a, b), c) in &self.terms {
            let mut coeffs = vec![K::zero(); dx + 1];
            coeffs[a as usize] = c.clone();
            out[b as usize] = out[b as usize].add(&UniPoly::from_coeffs(coeffs));
        }
        out
    }

    pub fn from_y_coeffs(coeffs: &[UniPoly<K>]) -> Self {
        let mut p = Self::zero();
        for (b, u) in coeffs.iter().enumerate() {
            for (a, c) in u.coeffs().iter().enumerate() {
                p.add_term(a as u32, b as u32, c.clone());
            }
        }
        p
    }

    /// Partial derivative in x.
    pub fn derivative_x(&self) -> Self {
        let mut p = Self::zero();
        for (&(a, b), c) in &self.terms {
            if a > 0 {
                let mut s = K::zero();
                for _ in 0..a {
                    s = s + c.clone();
                }
                p.add_term(a - 1, b, s);
            }
        }
        p
    }

    /// Partial derivative in y.
    pub fn derivative_y(&self) -> Self {
        let mut p = Self::zero();
        for (&(a, b), c) in &self.terms {
            if b > 0 {
                let mut s = K::zero();
                for _ in 0..b {
                    s = s + c.clone();
                }
                p.add_term(a, b - 1, s);
            }
        }
        p
    }

    /// Swap the two variables.
    pub fn swap_vars(&self) -> Self {
        BivariatePoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> BivariatePoly<L> {
        let mut p = BivariatePoly::zero();
        for (&(a, b), c) in &self.terms {
            p.add_term(a, b, f(c));
        }
        p
    }
}

impl BivariatePoly<Rat> {
    /// Canonical associate: graded-lex monic.
    pub fn canonical(&self) -> Self {
        self.monic()
    }

    /// True if the two polynomials agree up to a nonzero constant factor.
    pub fn is_associate(&self, rhs: &Self) -> bool {
        if self.is_zero() || rhs.is_zero() {
            return self.is_zero() && rhs.is_zero();
        }
        self.monic() == rhs.monic()
    }
}

impl<K: Field> fmt::Debug for BivariatePoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::render(self, "x", "y"))
    }
}

impl<K: Field> fmt::Display for BivariatePoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::render(self, "x", "y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rat_int};
    use crate::QPoly;

    fn p(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let a = p("x^2 + y");
        let b = p("x^2 - y");
        assert_eq!(a.mul(&b), p("x^4 - y^2"));
        assert_eq!(a.add(&b), p("2*x^2"));
        assert_eq!(a.sub(&a), QPoly::zero());
        assert_eq!(p("(y^2-x^3)^4 + x^8*y^5").order(), Some(8));
        assert_eq!(p("(y^2-x^3)^4 + x^8*y^5").total_degree(), Some(13));
    }

    #[test]
    fn exact_division() {
        let a = p("(y^2-x^3)*(x+y)^2");
        let q = a.div_exact(&p("y^2-x^3"));
        assert_eq!(q, p("(x+y)^2"));
        assert!(p("x^2+y").try_div_exact(&p("x+1")).is_none());
    }

    #[test]
    fn lowest_form_is_tangent_cone() {
        assert_eq!(p("y^2 - x^3").lowest_form(), p("y^2"));
        assert_eq!(p("x*y + x^3 + y^4").lowest_form(), p("x*y"));
    }

    #[test]
    fn substitution_blowup_chart() {
        // cusp pulled back through x = u, y = u*w
        let cusp = p("y^2 - x^3");
        let pulled = cusp.substitute(&p("x"), &p("x*y"));
        assert_eq!(pulled, p("x^2*y^2 - x^3"));
        assert_eq!(pulled.x_order(), Some(2));
        assert_eq!(pulled.shift_down(2, 0), p("y^2 - x"));
    }

    #[test]
    fn uni_div_rem_and_gcd() {
        let f = UniPoly::from_coeffs(vec![rat_int(-1), rat_int(0), rat_int(1)]); // t^2 - 1
        let g = UniPoly::from_coeffs(vec![rat_int(1), rat_int(1)]); // t + 1
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]));
        let h = f.gcd(&g);
        assert_eq!(h, g.monic());
    }

    #[test]
    fn uni_yun_squarefree() {
        // t^2 (t+1)^3
        let t = UniPoly::monomial(rat_int(1), 1);
        let t1 = UniPoly::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let f = t.mul(&t).mul(&t1.mul(&t1).mul(&t1));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (t.monic(), 2));
        assert_eq!(dec[1], (t1.monic(), 3));
        assert_eq!(f.squarefree_part(), t.mul(&t1).monic());
    }

    #[test]
    fn uni_resultant_matches_known() {
        // res_t(t^2-2, t^2-3) = (2-3)^2 = 1; direct: product over roots of f of g(root)
        let f = UniPoly::from_coeffs(vec![rat_int(-2), rat_int(0), rat_int(1)]);
        let g = UniPoly::from_coeffs(vec![rat_int(-3), rat_int(0), rat_int(1)]);
        assert_eq!(f.resultant(&g), rat_int(1));
        // res(t-a, t-b) = b - a ... with f = t-2, g = t-5: g(2) = -3
        let f = UniPoly::from_coeffs(vec![rat_int(-2), rat_int(1)]);
        let g = UniPoly::from_coeffs(vec![rat_int(-5), rat_int(1)]);
        assert_eq!(f.resultant(&g), rat_int(-3));
        // resultant in x of the cusp and a line catches intersection multiplicity
        let a = p("y^2 - x^3").to_y_coeffs();
        let _ = a; // bivariate resultants are exercised in the puiseux tests
    }

    #[test]
    fn compose_and_eval() {
        let f = UniPoly::from_coeffs(vec![rat_int(1), rat_int(2), rat_int(1)]); // (t+1)^2
        let g = UniPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]); // t - 1
        assert_eq!(
            f.compose(&g),
            UniPoly::from_coeffs(vec![rat_int(0), rat_int(0), rat_int(1)])
        );
        assert_eq!(f.eval(&rat(1, 2)), rat(9, 4));
    }
}
