//! Simple algebraic extension towers over the rationals.
//!
//! A [`NumberField`] is a simple extension of its base (another
//! `NumberField`, or the rationals when `base` is `None`) by a monic
//! irreducible minimal polynomial. Elements ([`FElem`]) are either plain
//! rationals or coefficient vectors over the base field of some tower level;
//! arithmetic is exact modulo the minimal polynomials.
//!
//! Factorization over a tower uses Trager's norm descent: shift by a multiple
//! of the generator until the norm (a resultant, computed here by evaluation
//! and Lagrange interpolation) is squarefree over the base, factor the norm
//! one level down recursively, and pull factors back with gcds.

pub mod zfactor;

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::field::Field;
use crate::poly::UniPoly;
use crate::{Int, QUniPoly, Rat};

// ---------------------------------------------------------------------------
// Fields
// ---------------------------------------------------------------------------

struct FieldData {
    base: Option<NumberField>,
    /// Monic irreducible over the base; coefficients are base elements.
    minpoly: UniPoly<FElem>,
    degree: usize,
    level: usize,
    /// Degree over the rationals (product along the tower).
    abs_degree: usize,
}

/// A simple algebraic extension field in a tower over the rationals.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        self.0.level == other.0.level
            && self.0.minpoly == other.0.minpoly
            && self.0.base == other.0.base
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(a1..a{})", self.0.level)
    }
}

impl NumberField {
    /// Extend `base` (None = the rationals) by a monic irreducible `minpoly`.
    /// Irreducibility is the caller's responsibility; the factorization
    /// routines only ever construct extensions from irreducible factors.
    pub fn extend(base: Option<&NumberField>, minpoly: UniPoly<FElem>) -> NumberField {
        let degree = minpoly.degree().expect("minpoly must be nonconstant");
        assert!(degree >= 2, "extension by a linear polynomial");
        assert!(
            minpoly.leading_coeff().map_or(false, |c| c.is_one()),
            "minpoly must be monic"
        );
        let level = base.map_or(1, |b| b.0.level + 1);
        let abs_degree = degree * base.map_or(1, |b| b.0.abs_degree);
        NumberField(Arc::new(FieldData {
            base: base.cloned(),
            minpoly,
            degree,
            level,
            abs_degree,
        }))
    }

    pub fn base(&self) -> Option<&NumberField> {
        self.0.base.as_ref()
    }

    pub fn minpoly(&self) -> &UniPoly<FElem> {
        &self.0.minpoly
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn level(&self) -> usize {
        self.0.level
    }

    /// Degree of the whole tower over the rationals.
    pub fn absolute_degree(&self) -> usize {
        self.0.abs_degree
    }

    /// The generator as an element of this field.
    pub fn generator(&self) -> FElem {
        let mut coeffs = vec![FElem::zero(); self.0.degree];
        coeffs[1] = FElem::one();
        FElem::Alg(self.clone(), coeffs)
    }

    /// True if `other` appears in this field's base chain (inclusive).
    fn contains(&self, other: &NumberField) -> bool {
        if self == other {
            return true;
        }
        match &self.0.base {
            Some(b) => b.contains(other),
            None => false,
        }
    }
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// An element of some field in an extension tower: a rational, or a
/// coefficient vector over the base of its field.
#[derive(Clone)]
pub enum FElem {
    Rat(Rat),
    Alg(NumberField, Vec<FElem>),
}

impl FElem {
    /// Build an element of `field` from base-field coefficients, normalizing
    /// down to the base (or to a rational) when the tail is zero.
    pub fn make(field: NumberField, mut coeffs: Vec<FElem>) -> FElem {
        assert!(coeffs.len() <= field.degree(), "coefficient vector too long");
        coeffs.resize(field.degree(), FElem::zero());
        if coeffs[1..].iter().all(|c| c.is_zero()) {
            return coeffs.swap_remove(0);
        }
        FElem::Alg(field, coeffs)
    }

    pub fn from_int(n: i64) -> FElem {
        FElem::Rat(Rat::from_integer(Int::from(n)))
    }

    /// The field this element naturally lives in (None = rationals).
    pub fn field(&self) -> Option<&NumberField> {
        match self {
            FElem::Rat(_) => None,
            FElem::Alg(f, _) => Some(f),
        }
    }

    fn level(&self) -> usize {
        self.field().map_or(0, |f| f.level())
    }

    /// Lift into `field` (which must contain this element's own field).
    pub fn lift_to(&self, field: &NumberField) -> FElem {
        match self.field() {
            Some(f) if f == field => self.clone(),
            Some(f) => {
                assert!(
                    field.contains(f),
                    "cannot lift between unrelated extension fields"
                );
                let mut coeffs = vec![FElem::zero(); field.degree()];
                coeffs[0] = self.lift_to_base_of(field);
                FElem::Alg(field.clone(), coeffs)
            }
            None => {
                let mut coeffs = vec![FElem::zero(); field.degree()];
                coeffs[0] = self.clone();
                FElem::Alg(field.clone(), coeffs)
            }
        }
    }

    fn lift_to_base_of(&self, field: &NumberField) -> FElem {
        match field.base() {
            None => self.clone(),
            Some(b) => {
                if self.field() == Some(b) {
                    self.clone()
                } else {
                    self.lift_to(b)
                }
            }
        }
    }

    /// Coefficient vector over the base of `field`.
    fn coeffs_in(&self, field: &NumberField) -> Vec<FElem> {
        match self {
            FElem::Alg(f, v) if f == field => v.clone(),
            _ => {
                let mut coeffs = vec![FElem::zero(); field.degree()];
                coeffs[0] = self.lift_to_base_of(field);
                coeffs
            }
        }
    }

    fn addsub(&self, rhs: &FElem, sub: bool) -> FElem {
        match (self, rhs) {
            (FElem::Rat(a), FElem::Rat(b)) => {
                FElem::Rat(if sub { a - b } else { a + b })
            }
            _ => {
                let field = if self.level() >= rhs.level() {
                    self.field().unwrap().clone()
                } else {
                    rhs.field().unwrap().clone()
                };
                let a = self.coeffs_in(&field);
                let b = rhs.coeffs_in(&field);
                let coeffs = a
                    .iter()
                    .zip(b.iter())
                    .map(|(x, y)| x.addsub(y, sub))
                    .collect();
                FElem::make(field, coeffs)
            }
        }
    }
}

impl PartialEq for FElem {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FElem::Rat(a), FElem::Rat(b)) => a == b,
            (FElem::Rat(_), FElem::Alg(..)) | (FElem::Alg(..), FElem::Rat(_)) => false,
            (FElem::Alg(f, a), FElem::Alg(g, b)) => f == g && a == b,
        }
    }
}

impl fmt::Debug for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Zero for FElem {
    fn zero() -> Self {
        FElem::Rat(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        match self {
            FElem::Rat(r) => r.is_zero(),
            // normalized elements never have an all-zero tail
            FElem::Alg(..) => false,
        }
    }
}

impl One for FElem {
    fn one() -> Self {
        FElem::Rat(Rat::one())
    }
    fn is_one(&self) -> bool {
        matches!(self, FElem::Rat(r) if r.is_one())
    }
}

impl std::ops::Add for FElem {
    type Output = FElem;
    fn add(self, rhs: FElem) -> FElem {
        self.addsub(&rhs, false)
    }
}

impl std::ops::Sub for FElem {
    type Output = FElem;
    fn sub(self, rhs: FElem) -> FElem {
        self.addsub(&rhs, true)
    }
}

impl std::ops::Neg for FElem {
    type Output = FElem;
    fn neg(self) -> FElem {
        match self {
            FElem::Rat(r) => FElem::Rat(-r),
            FElem::Alg(f, v) => FElem::Alg(f, v.into_iter().map(|c| -c).collect()),
        }
    }
}

impl std::ops::Mul for FElem {
    type Output = FElem;
    fn mul(self, rhs: FElem) -> FElem {
        match (&self, &rhs) {
            (FElem::Rat(a), FElem::Rat(b)) => FElem::Rat(a * b),
            _ => {
                let field = if self.level() >= rhs.level() {
                    self.field().unwrap().clone()
                } else {
                    rhs.field().unwrap().clone()
                };
                let a = UniPoly::from_coeffs(self.coeffs_in(&field));
                let b = UniPoly::from_coeffs(rhs.coeffs_in(&field));
                let prod = a.mul(&b);
                let (_, rem) = prod.div_rem(field.minpoly());
                FElem::make(field, rem.coeffs().to_vec())
            }
        }
    }
}

impl Field for FElem {
    fn inv(&self) -> Self {
        match self {
            FElem::Rat(r) => FElem::Rat(Field::inv(r)),
            FElem::Alg(field, v) => {
                let a = UniPoly::from_coeffs(v.clone());
                let (g, s, _) = ext_gcd(&a, field.minpoly());
                assert!(
                    g.degree() == Some(0),
                    "element not invertible: minpoly not irreducible?"
                );
                let ginv = Field::inv(&g.coeff(0));
                let (_, rem) = s.scale(&ginv).div_rem(field.minpoly());
                FElem::make(field.clone(), rem.coeffs().to_vec())
            }
        }
    }

    fn from_rat(r: &Rat) -> Self {
        FElem::Rat(r.clone())
    }

    fn order_key(&self) -> Vec<Int> {
        match self {
            FElem::Rat(r) => vec![Int::zero(), r.numer().clone(), r.denom().clone()],
            FElem::Alg(f, v) => {
                let mut out = vec![Int::one(), Int::from(f.level() as i64)];
                for c in v {
                    out.extend(c.order_key());
                }
                out
            }
        }
    }

    fn render(&self) -> String {
        match self {
            FElem::Rat(r) => crate::field::format_rat(r),
            FElem::Alg(f, v) => {
                let name = format!("a{}", f.level());
                let mut parts = Vec::new();
                for (i, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let cs = c.render();
                    let wrapped = if cs.contains('+') || cs.contains(' ') || (i > 0 && cs.contains('-')) {
                        format!("({cs})")
                    } else {
                        cs
                    };
                    let term = match i {
                        0 => wrapped,
                        1 if wrapped == "1" => name.clone(),
                        1 => format!("{wrapped}*{name}"),
                        _ if wrapped == "1" => format!("{name}^{i}"),
                        _ => format!("{wrapped}*{name}^{i}"),
                    };
                    parts.push(term);
                }
                parts.join(" + ")
            }
        }
    }

    fn as_rat(&self) -> Option<Rat> {
        match self {
            FElem::Rat(r) => Some(r.clone()),
            FElem::Alg(..) => None,
        }
    }
}

/// Extended euclid for univariate polynomials over a field:
/// returns (g, s, t) with s·a + t·b = g.
pub fn ext_gcd<K: Field>(a: &UniPoly<K>, b: &UniPoly<K>) -> (UniPoly<K>, UniPoly<K>, UniPoly<K>) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
    let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let snew = s0.sub(&q.mul(&s1));
        let tnew = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = snew;
        t0 = t1;
        t1 = tnew;
    }
    (r0, s0, t0)
}

// ---------------------------------------------------------------------------
// Factorization over a tower (Trager)
// ---------------------------------------------------------------------------

/// Factor a nonzero univariate polynomial over the field `field` (None = Q)
/// into monic irreducible factors with multiplicities.
pub fn factor_over(field: Option<&NumberField>, f: &UniPoly<FElem>) -> Vec<(UniPoly<FElem>, usize)> {
    assert!(!f.is_zero(), "factoring zero");
    let mut out: Vec<(UniPoly<FElem>, usize)> = Vec::new();
    for (sqf, mult) in f.squarefree_decomposition() {
        for irr in factor_squarefree_over(field, &sqf) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.degree(), uni_key(&a.0), a.1).cmp(&(b.0.degree(), uni_key(&b.0), b.1))
    });
    out
}

fn uni_key(p: &UniPoly<FElem>) -> Vec<Int> {
    let mut out = Vec::new();
    for c in p.coeffs() {
        out.extend(c.order_key());
    }
    out
}

fn to_q(f: &UniPoly<FElem>) -> QUniPoly {
    UniPoly::from_coeffs(
        f.coeffs()
            .iter()
            .map(|c| c.as_rat().expect("coefficient not rational at base level"))
            .collect(),
    )
}

fn from_q(f: &QUniPoly) -> UniPoly<FElem> {
    f.map_coeffs(|c| FElem::Rat(c.clone()))
}

/// Factor a squarefree monic polynomial over `field` into monic irreducibles.
pub fn factor_squarefree_over(field: Option<&NumberField>, f: &UniPoly<FElem>) -> Vec<UniPoly<FElem>> {
    let deg = f.degree().expect("factoring a constant");
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![f.monic()];
    }
    let Some(field) = field else {
        return zfactor::factor_squarefree_rational(&to_q(f))
            .into_iter()
            .map(|q| from_q(&q))
            .collect();
    };
    let f = f.monic();
    let alpha = field.generator();
    // Trager: find a shift s with squarefree norm
    for s in 0..64i64 {
        let shift = FElem::from_int(s);
        // g(t) = f(t - s*alpha)
        let lin = UniPoly::from_coeffs(vec![-(shift.clone() * alpha.clone()), FElem::one()]);
        let g = f.compose(&lin);
        let norm = norm_poly(field, &g);
        // norm lives one level down
        if norm
            .gcd(&norm.derivative())
            .degree()
            .map_or(true, |d| d == 0)
        {
            let sub_factors = factor_squarefree_over(field.base(), &norm);
            let mut out = Vec::new();
            let mut rest = g.clone();
            for nf in sub_factors {
                if rest.degree() == Some(0) {
                    break;
                }
                let nf_lift = nf.map_coeffs(|c| c.lift_to(field));
                let h = rest.gcd(&nf_lift);
                if h.degree().map_or(false, |d| d >= 1) {
                    rest = rest.div_exact(&h).monic();
                    out.push(h.monic());
                }
            }
            assert!(
                rest.degree() == Some(0),
                "trager: factors did not exhaust the polynomial"
            );
            // undo the shift: factor(t) -> factor(t + s*alpha)
            let unshift = UniPoly::from_coeffs(vec![shift.clone() * alpha.clone(), FElem::one()]);
            return out
                .into_iter()
                .map(|h| h.compose(&unshift).monic())
                .collect();
        }
    }
    panic!("trager: no squarefree-norm shift found (degree {deg})");
}

/// Norm of g ∈ F[t] down to base(F)[t]: Res_u(minpoly(u), g_u(t)) computed by
/// evaluation at rational points and Lagrange interpolation.
fn norm_poly(field: &NumberField, g: &UniPoly<FElem>) -> UniPoly<FElem> {
    let n = g.degree().unwrap_or(0);
    let m = field.degree();
    let out_deg = n * m;
    // evaluation points t = 0, 1, 2, ...
    let mut points: Vec<(FElem, FElem)> = Vec::with_capacity(out_deg + 1);
    let mut t = 0i64;
    while points.len() < out_deg + 1 {
        let tv = FElem::from_int(t);
        // g(tv) as a polynomial in the generator u over base
        let val = g.eval(&tv);
        let val_poly = UniPoly::from_coeffs(val.coeffs_in(field));
        // res_u(minpoly, val_poly), both over base
        let r = field.minpoly().resultant(&val_poly);
        points.push((tv, r));
        t += 1;
    }
    lagrange(&points)
}

/// Lagrange interpolation through exact points.
fn lagrange(points: &[(FElem, FElem)]) -> UniPoly<FElem> {
    let mut out = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = UniPoly::constant(FElem::one());
        let mut den = FElem::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&UniPoly::from_coeffs(vec![-xj.clone(), FElem::one()]));
            den = den * (xi.clone() - xj.clone());
        }
        out = out.add(&num.scale(&(yi.clone() * Field::inv(&den))));
    }
    out
}

// ---------------------------------------------------------------------------
// Root finding with conjugacy classes
// ---------------------------------------------------------------------------

/// One conjugacy class of roots of a univariate polynomial.
#[derive(Clone, Debug)]
pub struct RootClass {
    /// A representative root: an element of `field_after` (either the old
    /// field or a fresh extension whose generator is the root).
    pub root: FElem,
    /// Multiplicity of each root in the class.
    pub multiplicity: usize,
    /// Number of conjugate roots represented by this class (= degree of the
    /// minimal polynomial of the root over the current field).
    pub class_size: usize,
    /// Minimal polynomial of the root over the current field.
    pub minpoly: UniPoly<FElem>,
    /// Field containing the representative root.
    pub field_after: Option<NumberField>,
}

/// All roots of `p` over `field` (None = rationals), grouped into conjugacy
/// classes; irrational classes adjoin a fresh simple extension.
pub fn roots_with_multiplicity(
    field: Option<&NumberField>,
    p: &UniPoly<FElem>,
) -> Vec<RootClass> {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let mut out = Vec::new();
    for (irr, mult) in factor_over(field, p) {
        let d = irr.degree().unwrap();
        if d == 0 {
            continue;
        }
        if d == 1 {
            // t + c -> root = -c
            let root = -irr.coeff(0);
            out.push(RootClass {
                root,
                multiplicity: mult,
                class_size: 1,
                minpoly: irr,
                field_after: field.cloned(),
            });
        } else {
            let ext = NumberField::extend(field, irr.clone());
            out.push(RootClass {
                root: ext.generator(),
                multiplicity: mult,
                class_size: d,
                minpoly: irr,
                field_after: Some(ext),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn upoly(coeffs: &[i64]) -> UniPoly<FElem> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| FElem::from_int(c)).collect())
    }

    #[test]
    fn roots_of_rational_polys() {
        // t^2 - 1 -> {1, -1} each multiplicity 1
        let rs = roots_with_multiplicity(None, &upoly(&[-1, 0, 1]));
        assert_eq!(rs.len(), 2);
        assert!(rs.iter().all(|r| r.class_size == 1 && r.multiplicity == 1));
        // t^3 -> {0} with multiplicity 3
        let rs = roots_with_multiplicity(None, &upoly(&[0, 0, 0, 1]));
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].multiplicity, 3);
        assert!(rs[0].root.is_zero());
        // t^2 - 2 -> one class of size 2 with a new generator
        let rs = roots_with_multiplicity(None, &upoly(&[-2, 0, 1]));
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].class_size, 2);
        let fld = rs[0].field_after.clone().unwrap();
        assert_eq!(fld.degree(), 2);
        // the root squares to 2
        let r = rs[0].root.clone();
        assert_eq!(r.clone() * r, FElem::from_int(2));
    }

    #[test]
    fn sum_of_class_sizes_times_multiplicities_is_degree() {
        for coeffs in [
            vec![-4i64, 0, 0, 0, 1], // t^4 - 4
            vec![0, -1, 0, 1],       // t^3 - t
            vec![1, 2, 1],           // (t+1)^2
            vec![2, 0, 1],           // t^2 + 2
            vec![-6, 11, -6, 1],     // (t-1)(t-2)(t-3)
        ] {
            let p = upoly(&coeffs);
            let deg = p.degree().unwrap();
            let rs = roots_with_multiplicity(None, &p);
            let total: usize = rs.iter().map(|r| r.class_size * r.multiplicity).sum();
            assert_eq!(total, deg, "degree mismatch for {coeffs:?}");
        }
    }

    #[test]
    fn tower_arithmetic_sqrt2() {
        // adjoin a = sqrt(2): check (1 + a)^2 = 3 + 2a and 1/(1+a) = a - 1
        let rs = roots_with_multiplicity(None, &upoly(&[-2, 0, 1]));
        let a = rs[0].root.clone();
        let one = FElem::one();
        let x = one.clone() + a.clone();
        let sq = x.clone() * x.clone();
        let expect = FElem::from_int(3) + FElem::from_int(2) * a.clone();
        assert_eq!(sq, expect);
        let inv = Field::inv(&x);
        assert_eq!(inv, a.clone() - one.clone());
        assert!((x * (a.clone() - FElem::one())).is_one());
    }

    #[test]
    fn factor_over_extension_splits() {
        // over Q(sqrt2), t^2 - 2 = (t - a)(t + a)
        let rs = roots_with_multiplicity(None, &upoly(&[-2, 0, 1]));
        let fld = rs[0].field_after.clone().unwrap();
        let p = upoly(&[-2, 0, 1]);
        let fs = factor_squarefree_over(Some(&fld), &p);
        assert_eq!(fs.len(), 2);
        for f in &fs {
            assert_eq!(f.degree(), Some(1));
        }
        // and t^2 - 3 stays irreducible over Q(sqrt2)
        let fs = factor_squarefree_over(Some(&fld), &upoly(&[-3, 0, 1]));
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn two_level_tower() {
        // Q(sqrt2)(sqrt3): arithmetic and factorization of t^4-10t^2+1
        // (minpoly of sqrt2+sqrt3) must split off linear factors.
        let rs = roots_with_multiplicity(None, &upoly(&[-2, 0, 1]));
        let f1 = rs[0].field_after.clone().unwrap();
        let rs = roots_with_multiplicity(Some(&f1), &upoly(&[-3, 0, 1]));
        assert_eq!(rs[0].class_size, 2);
        let f2 = rs[0].field_after.clone().unwrap();
        assert_eq!(f2.absolute_degree(), 4);
        let a = f1.generator().lift_to(&f2);
        let b = f2.generator();
        let s = a.clone() + b.clone();
        // s^4 - 10 s^2 + 1 = 0
        let s2 = s.clone() * s.clone();
        let s4 = s2.clone() * s2.clone();
        let val = s4 - FElem::from_int(10) * s2 + FElem::one();
        assert!(val.is_zero());
        // factor the quartic over the top field: four linear factors
        let quartic = upoly(&[1, 0, -10, 0, 1]);
        let fs = factor_squarefree_over(Some(&f2), &quartic);
        assert_eq!(fs.len(), 4);
        assert!(fs.iter().all(|f| f.degree() == Some(1)));
    }

    #[test]
    fn roots_in_extension_with_multiplicity() {
        // (t^2-2)^2 (t-1) over Q
        let sq = upoly(&[-2, 0, 1]);
        let p = sq.mul(&sq).mul(&upoly(&[-1, 1]));
        let rs = roots_with_multiplicity(None, &p);
        assert_eq!(rs.len(), 2);
        let lin = rs.iter().find(|r| r.class_size == 1).unwrap();
        assert_eq!(lin.multiplicity, 1);
        assert!(lin.root.is_one());
        let quad = rs.iter().find(|r| r.class_size == 2).unwrap();
        assert_eq!(quad.multiplicity, 2);
    }
}
