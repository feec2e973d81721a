//! Newton polygons and Puiseux branch expansions of plane curve germs.
//!
//! `puiseux_branches` computes one representative per conjugacy class of
//! Puiseux expansions of a reduced germ, following the classical
//! Newton–Puiseux iteration: pick a compact edge of the Newton polygon with
//! inclination P/Q, pick a root class z of the edge polynomial, substitute
//! x = x₁^Q, y = x₁^P (c + y₁) with c a Q-th root of z (adjoining extensions
//! as needed), divide by the exceptional power and repeat. Conjugate branches
//! are expanded once; the class size is the product of the degrees of the
//! edge-root minimal polynomials along the path.
//!
//! Contact orders between branch classes are computed by enumerating
//! conjugate parametrizations (tower embeddings weighted by conjugacy class
//! size, times the e rotations t ↦ ζt) and comparing series exactly.

use num_traits::{One, Signed, Zero};

use crate::alg::{factor_squarefree_over, roots_with_multiplicity, FElem, NumberField};
use crate::error::{Error, Result};
use crate::field::{rat, rat_int, Field};
use crate::poly::{BivariatePoly, UniPoly};
use crate::{Int, QPoly, Rat};

/// Bivariate polynomial over an extension tower element field.
pub type EPoly = BivariatePoly<FElem>;

// ---------------------------------------------------------------------------
// Newton polygon
// ---------------------------------------------------------------------------

/// One compact edge of the Newton polygon, descending in the y-exponent.
#[derive(Clone, Debug)]
pub struct PolygonEdge {
    /// Endpoint with the larger y-exponent.
    pub top: (u32, u32),
    /// Endpoint with the smaller y-exponent.
    pub bottom: (u32, u32),
    /// Inclination P/Q in lowest terms: branches behave like y ~ c x^{P/Q}.
    pub incl_num: u32,
    pub incl_den: u32,
    /// Edge polynomial φ(z): root classes of φ give the branch directions,
    /// with z = c^Q. Constant and leading coefficients are nonzero.
    pub poly: UniPoly<FElem>,
}

impl PolygonEdge {
    pub fn inclination(&self) -> Rat {
        rat(self.incl_num as i64, self.incl_den as i64)
    }
}

/// Newton polygon of a germ: support, lower-hull vertices, compact edges.
#[derive(Clone, Debug)]
pub struct NewtonPolygon {
    pub support: Vec<(u32, u32)>,
    pub vertices: Vec<(u32, u32)>,
    pub edges: Vec<PolygonEdge>,
}

/// Lower convex hull of the support with edge polynomials.
/// Errors if the germ is a unit at the origin.
pub fn newton_polygon(p: &EPoly) -> Result<NewtonPolygon> {
    if p.is_zero() {
        return Err(Error::domain("newton polygon of zero"));
    }
    if p.is_unit_at_origin() {
        return Err(Error::domain("no singularity at origin: germ is a unit"));
    }
    let support: Vec<(u32, u32)> = p.terms().map(|(&k, _)| k).collect();
    // staircase: for each x-exponent keep the minimal y-exponent
    let mut stair: Vec<(u32, u32)> = Vec::new();
    for &(a, b) in &support {
        match stair.iter_mut().find(|(sa, _)| *sa == a) {
            Some((_, sb)) => {
                if b < *sb {
                    *sb = b;
                }
            }
            None => stair.push((a, b)),
        }
    }
    stair.sort();
    // lower convex hull, left to right
    let mut hull: Vec<(u32, u32)> = Vec::new();
    for &pt in &stair {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // keep right turns: cross((b-a), (pt-a)) <= 0 keeps the hull lower
            let cross = (b.0 as i64 - a.0 as i64) * (pt.1 as i64 - a.1 as i64)
                - (b.1 as i64 - a.1 as i64) * (pt.0 as i64 - a.0 as i64);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    // compact edges: consecutive hull vertices with strictly decreasing y
    let mut edges = Vec::new();
    let mut vertices = vec![hull[0]];
    for w in hull.windows(2) {
        let (top, bottom) = (w[0], w[1]);
        if bottom.1 >= top.1 {
            break; // horizontal or rising: no further germ edges
        }
        vertices.push(bottom);
        let da = bottom.0 - top.0;
        let db = top.1 - bottom.1;
        let g = num_integer::Integer::gcd(&da, &db);
        let (pn, qn) = (da / g, db / g);
        let mut coeffs = vec![FElem::zero(); g as usize + 1];
        for k in 0..=g {
            let pt = (top.0 + k * pn, top.1 - k * qn);
            // reversed so the bottom endpoint supplies the constant term
            coeffs[(g - k) as usize] = p.coeff(pt.0, pt.1);
        }
        edges.push(PolygonEdge {
            top,
            bottom,
            incl_num: pn,
            incl_den: qn,
            poly: UniPoly::from_coeffs(coeffs),
        });
    }
    Ok(NewtonPolygon {
        support,
        vertices,
        edges,
    })
}

// ---------------------------------------------------------------------------
// Puiseux branches
// ---------------------------------------------------------------------------

/// One conjugacy class of Puiseux expansions of a branch.
#[derive(Clone, Debug)]
pub struct PuiseuxBranch {
    /// True for the branch x = 0 (variable roles swapped).
    pub vertical: bool,
    /// Ramification index e: the parametrization is x = t^e, y = series(t).
    pub ramification: u32,
    /// Series terms (exponent in x-units, coefficient), strictly increasing
    /// exponents with denominators dividing e.
    pub terms: Vec<(Rat, FElem)>,
    /// Coefficient field tower (None = rationals).
    pub field: Option<NumberField>,
    /// Number of conjugate branches represented by this class.
    pub class_size: u32,
    /// All terms with exponent ≤ truncation are present and correct.
    pub truncation: Rat,
    /// The series terminates: there are no further nonzero terms.
    pub exact: bool,
    /// Characteristic exponents (where the exponent denominator grows).
    pub char_exponents: Vec<Rat>,
    /// Caller-assigned id of the originating factor.
    pub factor_id: usize,
    /// Verified vanishing order: substituting the parametrization into the
    /// originating germ vanishes to at least this t-order (None = exactly 0).
    pub verified_order: Option<u64>,
}

impl PuiseuxBranch {
    /// The parametrization y(t) as a univariate polynomial in t (x = t^e),
    /// truncated at the stored terms.
    pub fn y_of_t(&self) -> UniPoly<FElem> {
        let mut coeffs: Vec<FElem> = Vec::new();
        for (q, c) in &self.terms {
            let te = q * rat_int(self.ramification as i64);
            assert!(te.denom().is_one(), "exponent not in (1/e)Z");
            let idx: usize = te.numer().to_string().parse().unwrap();
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, FElem::zero());
            }
            coeffs[idx] = c.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }
}

struct ExpandState {
    poly: EPoly,
    field: Option<NumberField>,
    e_so_far: u32,
    exp_offset: Rat,
    exp_scale: Rat,
    terms: Vec<(Rat, FElem)>,
    class_acc: u32,
    last_char: Rat,
    last_growth: Rat,
    last_split: Rat,
}

/// Compute the Puiseux branch classes of a reduced germ `p` (squarefree,
/// vanishing at the origin), expanded past `truncation` (in x-exponent
/// units) and past every characteristic, splitting, and tower-growth
/// exponent. Branches along the y-axis (x | p) come out as `vertical`.
pub fn puiseux_branches(p: &QPoly, truncation: i64) -> Result<Vec<PuiseuxBranch>> {
    puiseux_branches_tagged(p, truncation, 0)
}

/// Same as [`puiseux_branches`] with a caller-assigned factor id.
pub fn puiseux_branches_tagged(
    p: &QPoly,
    truncation: i64,
    factor_id: usize,
) -> Result<Vec<PuiseuxBranch>> {
    if p.is_zero() {
        return Err(Error::domain("puiseux expansion of zero"));
    }
    if p.is_unit_at_origin() {
        return Err(Error::domain("germ is a unit at the origin"));
    }
    let ep: EPoly = p.map_coeffs(|c| FElem::Rat(c.clone()));
    let mut out = Vec::new();
    let mut work = ep.clone();
    // x-axis special case: split off a vertical branch
    if let Some(k) = work.x_order() {
        if k >= 1 {
            if k >= 2 {
                return Err(Error::domain("germ is not reduced (x^2 divides it)"));
            }
            work = work.shift_down(1, 0);
            out.push(PuiseuxBranch {
                vertical: true,
                ramification: 1,
                terms: Vec::new(),
                field: None,
                class_size: 1,
                truncation: rat_int(truncation),
                exact: true,
                char_exponents: Vec::new(),
                factor_id,
                verified_order: None,
            });
        }
    }
    if work.is_unit_at_origin() || work.is_constant() {
        return Ok(out);
    }
    let tmin = rat_int(truncation.max(1));
    let mut stack = vec![ExpandState {
        poly: work,
        field: None,
        e_so_far: 1,
        exp_offset: Rat::zero(),
        exp_scale: Rat::one(),
        terms: Vec::new(),
        class_acc: 1,
        last_char: Rat::zero(),
        last_growth: Rat::zero(),
        last_split: Rat::zero(),
    }];
    let mut guard = 0usize;
    while let Some(state) = stack.pop() {
        if guard > 4096 {
            return Err(Error::internal("puiseux expansion did not terminate"));
        }
        // residual sheet multiplicity at the current center
        let on_axis = state.poly.terms().filter(|(&(_, b), _)| b == 0).count() == 0;
        let m_res = {
            // ord_y of poly(0, y)
            let mut m = None;
            for (&(a, b), _) in state.poly.terms() {
                if a == 0 {
                    m = Some(m.map_or(b, |mm: u32| mm.min(b)));
                }
            }
            m
        };
        // zero-continuation: y | poly means the series ends here exactly
        if on_axis {
            let yord = state.poly.y_order().unwrap_or(0);
            if yord != 1 {
                return Err(Error::internal(
                    "non-reduced branch structure in puiseux expansion",
                ));
            }
            out.push(finalize(p, &state, true, &tmin, factor_id));
            let rest = state.poly.shift_down(0, 1);
            if rest.is_unit_at_origin() {
                continue;
            }
            // other branches continue through the same center
            stack.push(ExpandState {
                poly: rest,
                ..clone_state(&state)
            });
            continue;
        }
        let m_res = m_res.expect("poly must meet the y-axis");
        // finished: single sheet expanded far enough
        let required = [
            tmin.clone(),
            state.last_char.clone(),
            state.last_growth.clone(),
            state.last_split.clone(),
        ]
        .into_iter()
        .max()
        .unwrap();
        if m_res == 1 && state.exp_offset > required {
            out.push(finalize(p, &state, false, &tmin, factor_id));
            continue;
        }
        // expand one polygon level
        let polygon = newton_polygon(&state.poly)?;
        let mut children = Vec::new();
        let mut total_classes = 0usize;
        for edge in &polygon.edges {
            let zroots = roots_with_multiplicity(state.field.as_ref(), &edge.poly);
            total_classes += zroots.iter().map(|r| r.class_size).sum::<usize>();
            for zr in zroots {
                children.push((edge.clone(), zr));
            }
        }
        if children.is_empty() {
            return Err(Error::internal("no polygon edge during puiseux expansion"));
        }
        let split_here = total_classes > 1;
        for (edge, zr) in children {
            let q = edge.incl_den;
            let pn = edge.incl_num;
            let fld_z = zr.field_after.clone();
            // choose one Q-th root of z (one rotation representative)
            let (c, fld_c) = if q == 1 {
                (zr.root.clone(), fld_z)
            } else {
                let mut tq = vec![FElem::zero(); q as usize + 1];
                tq[0] = -zr.root.clone();
                tq[q as usize] = FElem::one();
                let tq = UniPoly::from_coeffs(tq);
                let croots = roots_with_multiplicity(fld_z.as_ref(), &tq);
                let first = croots.into_iter().next().expect("t^Q - z has roots");
                (first.root, first.field_after)
            };
            let exp_here = &state.exp_offset
                + rat(pn as i64, q as i64) * &state.exp_scale;
            let new_scale = &state.exp_scale / rat_int(q as i64);
            let mut terms = state.terms.clone();
            terms.push((exp_here.clone(), c.clone()));
            let grew = fld_c.as_ref().map_or(1, |f| f.absolute_degree())
                != state.field.as_ref().map_or(1, |f| f.absolute_degree()) * zr.class_size;
            // tower growth beyond the z-class itself marks rotation ramification
            let substituted = np_substitute(&state.poly, q, pn, &c);
            stack.push(ExpandState {
                poly: substituted,
                field: fld_c.clone(),
                e_so_far: state.e_so_far * q,
                exp_offset: exp_here.clone(),
                exp_scale: new_scale,
                terms,
                class_acc: state.class_acc * zr.class_size as u32,
                last_char: if q > 1 {
                    exp_here.clone()
                } else {
                    state.last_char.clone()
                },
                last_growth: if grew || zr.class_size > 1 {
                    exp_here.clone()
                } else {
                    state.last_growth.clone()
                },
                last_split: if split_here || zr.multiplicity < m_res as usize {
                    exp_here.clone()
                } else {
                    state.last_split.clone()
                },
            });
        }
    }
    // canonical order: by first-term exponent, then coefficient keys
    out.sort_by(|a, b| branch_key(a).cmp(&branch_key(b)));
    Ok(out)
}

fn clone_state(s: &ExpandState) -> ExpandState {
    ExpandState {
        poly: s.poly.clone(),
        field: s.field.clone(),
        e_so_far: s.e_so_far,
        exp_offset: s.exp_offset.clone(),
        exp_scale: s.exp_scale.clone(),
        terms: s.terms.clone(),
        class_acc: s.class_acc,
        last_char: s.last_char.clone(),
        last_growth: s.last_growth.clone(),
        last_split: s.last_split.clone(),
    }
}

fn branch_key(b: &PuiseuxBranch) -> (u32, u32, Vec<(Rat, Vec<Int>)>) {
    (
        u32::from(b.vertical),
        b.ramification,
        b.terms
            .iter()
            .map(|(q, c)| (q.clone(), c.order_key()))
            .collect(),
    )
}

/// Substitute x = x₁^Q, y = x₁^P (c + y₁) and divide by the minimal power.
fn np_substitute(p: &EPoly, q: u32, pn: u32, c: &FElem) -> EPoly {
    // binomial expansion of (c + y)^b per term
    let mut out = EPoly::zero();
    for (&(a, b), coeff) in p.terms() {
        let xexp = q * a + pn * b;
        // (c + y)^b
        let mut pow = EPoly::one();
        let binom = EPoly::from_terms([((0, 0), c.clone()), ((0, 1), FElem::one())]);
        for _ in 0..b {
            pow = pow.mul(&binom);
        }
        out = out.add(&pow.scale(coeff).mul(&EPoly::monomial(FElem::one(), xexp, 0)));
    }
    let nu = out.x_order().expect("substitution of zero");
    out.shift_down(nu, 0)
}

fn finalize(
    orig: &QPoly,
    state: &ExpandState,
    exact: bool,
    tmin: &Rat,
    factor_id: usize,
) -> PuiseuxBranch {
    let e = state.e_so_far;
    let class_size = state.class_acc;
    let mut char_exponents = Vec::new();
    let mut denom_so_far = Int::one();
    for (qexp, _) in &state.terms {
        let d = qexp.denom().clone();
        let l = num_integer::Integer::lcm(&denom_so_far, &d);
        if l != denom_so_far {
            char_exponents.push(qexp.clone());
            denom_so_far = l;
        }
    }
    let truncation = if exact {
        std::cmp::max(tmin.clone(), state.exp_offset.clone())
    } else {
        state.exp_offset.clone()
    };
    let mut branch = PuiseuxBranch {
        vertical: false,
        ramification: e,
        terms: state.terms.clone(),
        field: state.field.clone(),
        class_size,
        truncation,
        exact,
        char_exponents,
        factor_id,
        verified_order: None,
    };
    branch.verified_order = verify_branch(orig, &branch);
    branch
}

/// Substitute the parametrization into the germ and measure the vanishing
/// t-order (None = identically zero up to the computed degree cap, which for
/// exact branches means exactly zero).
fn verify_branch(p: &QPoly, b: &PuiseuxBranch) -> Option<u64> {
    let e = b.ramification;
    let yt = b.y_of_t();
    // substitute x = t^e, y = y(t)
    let mut acc: UniPoly<FElem> = UniPoly::zero();
    for (&(ax, ay), c) in p.terms() {
        let mut term = UniPoly::monomial(FElem::Rat(c.clone()), (e * ax) as usize);
        for _ in 0..ay {
            term = term.mul(&yt);
        }
        acc = acc.add(&term);
    }
    acc.order().map(|o| o as u64)
}

// ---------------------------------------------------------------------------
// Conjugate enumeration, contact orders, intersection numbers
// ---------------------------------------------------------------------------

/// A conjugate image of a branch parametrization: the series terms with
/// coefficients mapped into a common field, plus the weight (number of tower
/// embeddings represented).
struct ConjugateSeries {
    terms: Vec<(Rat, FElem)>,
    weight: usize,
    exact: bool,
}

/// Enumerate the conjugate parametrizations of `b` as series over extensions
/// of `ambient` (one representative per conjugacy class of tower embeddings,
/// weighted, times the `e` rotations).
fn conjugates_of(
    b: &PuiseuxBranch,
    ambient: Option<NumberField>,
) -> Result<Vec<ConjugateSeries>> {
    // chain of fields from the bottom of b's tower
    let mut chain = Vec::new();
    let mut f = b.field.clone();
    while let Some(ff) = f {
        chain.push(ff.clone());
        f = ff.base().cloned();
    }
    chain.reverse();
    // map each generator to a root of its (mapped) minimal polynomial over
    // the growing ambient field: a tree of conjugacy-class choices
    struct Node {
        field: Option<NumberField>,
        images: Vec<FElem>, // images of chain generators so far
        weight: usize,
    }
    let mut nodes = vec![Node {
        field: ambient,
        images: Vec::new(),
        weight: 1,
    }];
    for level in &chain {
        let mut next = Vec::new();
        for node in nodes {
            let mapped = level
                .minpoly()
                .map_coeffs(|c| map_through(c, &chain, &node.images, node.field.as_ref()));
            let classes = roots_with_multiplicity(node.field.as_ref(), &mapped);
            for cl in classes {
                let mut images = node.images.clone();
                images.push(cl.root.clone());
                next.push(Node {
                    field: cl.field_after,
                    images,
                    weight: node.weight * cl.class_size,
                });
            }
        }
        nodes = next;
    }
    // rotations: adjoin a primitive e-th root of unity when e > 2
    let e = b.ramification;
    let mut out = Vec::new();
    for node in nodes {
        let (zeta, zfield) = primitive_root_of_unity(e, node.field.clone())?;
        for j in 0..e {
            let mut terms = Vec::new();
            for (qexp, c) in &b.terms {
                let mapped = map_through(c, &chain, &node.images, node.field.as_ref());
                // rotation multiplies the coefficient by zeta^{j * e * q}
                let int_exp = (qexp * rat_int(e as i64)).to_integer();
                let rot_pow = (Int::from(j) * int_exp).mod_floor(&Int::from(e));
                let mut rot = FElem::one();
                let rp: u32 = rot_pow.to_string().parse().unwrap();
                for _ in 0..rp {
                    rot = rot * zeta.clone();
                }
                terms.push((qexp.clone(), mapped * rot));
            }
            out.push(ConjugateSeries {
                terms,
                weight: node.weight,
                exact: b.exact,
            });
        }
        let _ = zfield;
    }
    Ok(out)
}

use num_integer::Integer as _;

/// Map a coefficient of b's tower through generator images.
fn map_through(
    c: &FElem,
    chain: &[NumberField],
    images: &[FElem],
    _target: Option<&NumberField>,
) -> FElem {
    match c {
        FElem::Rat(r) => FElem::Rat(r.clone()),
        FElem::Alg(f, coeffs) => {
            let level = chain
                .iter()
                .position(|cf| cf == f)
                .expect("coefficient field not in branch tower");
            let gen_image = images[level].clone();
            // polynomial in the generator with base coefficients
            let mut acc = FElem::zero();
            let mut pw = FElem::one();
            for co in coeffs {
                let mapped_co = map_through(co, chain, images, _target);
                acc = acc + mapped_co * pw.clone();
                pw = pw * gen_image.clone();
            }
            acc
        }
    }
}

/// A primitive e-th root of unity over `field`, adjoining an extension when
/// necessary (e ≤ 2 never extends).
fn primitive_root_of_unity(e: u32, field: Option<NumberField>) -> Result<(FElem, Option<NumberField>)> {
    if e == 1 {
        return Ok((FElem::one(), field));
    }
    if e == 2 {
        return Ok((-FElem::one(), field));
    }
    let cyc = cyclotomic(e);
    let classes = roots_with_multiplicity(field.as_ref(), &cyc.map_coeffs(|c| c.clone()));
    let first = classes
        .into_iter()
        .next()
        .ok_or_else(|| Error::internal("cyclotomic polynomial has no roots"))?;
    Ok((first.root, first.field_after))
}

/// The e-th cyclotomic polynomial over the rationals.
fn cyclotomic(e: u32) -> UniPoly<FElem> {
    // x^e - 1 divided by all lower cyclotomics of divisors
    let mut num = vec![FElem::zero(); e as usize + 1];
    num[0] = -FElem::one();
    num[e as usize] = FElem::one();
    let mut num = UniPoly::from_coeffs(num);
    for d in 1..e {
        if e % d == 0 {
            num = num.div_exact(&cyclotomic(d));
        }
    }
    num
}

/// Pairwise agreement orders between a fixed representative of `b1` and the
/// weighted conjugate parametrizations of `b2`. Returns (order, weight)
/// pairs; identically-equal parametrizations are skipped and reported in the
/// boolean (true when at least one was skipped).
fn agreement_orders(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<(Vec<(Rat, usize)>, bool)> {
    if b1.vertical || b2.vertical {
        return Err(Error::domain(
            "contact of vertical branches is not defined in x-exponents",
        ));
    }
    let conj = conjugates_of(b2, b1.field.clone())?;
    let mut out = Vec::new();
    let mut skipped = false;
    let cap = std::cmp::min(&b1.truncation, &b2.truncation).clone();
    for c in conj {
        // compare b1.terms with c.terms exponent by exponent
        let mut exps: Vec<Rat> = b1
            .terms
            .iter()
            .map(|(q, _)| q.clone())
            .chain(c.terms.iter().map(|(q, _)| q.clone()))
            .collect();
        exps.sort();
        exps.dedup();
        let coeff_of = |terms: &[(Rat, FElem)], q: &Rat| -> FElem {
            terms
                .iter()
                .find(|(qq, _)| qq == q)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(FElem::zero)
        };
        let mut order: Option<Rat> = None;
        for qexp in &exps {
            if qexp > &cap {
                break;
            }
            let c1 = coeff_of(&b1.terms, qexp);
            let c2 = coeff_of(&c.terms, qexp);
            // compare in a common field
            let diff = lift_pair_sub(&c1, &c2);
            if !diff.is_zero() {
                order = Some(qexp.clone());
                break;
            }
        }
        match order {
            Some(q) => out.push((q, c.weight)),
            None => {
                if b1.exact && c.exact {
                    skipped = true; // genuinely identical parametrization
                } else {
                    return Err(Error::InsufficientPrecision(format!(
                        "branches agree past truncation {}",
                        crate::field::format_rat(&cap)
                    )));
                }
            }
        }
    }
    Ok((out, skipped))
}

/// Subtract two elements that may live in unrelated display towers by
/// lifting rationals; panics if both are algebraic in unrelated fields.
fn lift_pair_sub(a: &FElem, b: &FElem) -> FElem {
    match (a, b) {
        (FElem::Rat(x), FElem::Rat(y)) => FElem::Rat(x - y),
        _ => a.clone() - b.clone(),
    }
}

/// Contact order of two branch classes: the largest exponent at which some
/// pair of conjugate parametrizations still agrees (i.e. the maximum over
/// conjugate pairs of the first disagreement exponent).
pub fn branch_contact(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<Rat> {
    let (orders, skipped) = agreement_orders(b1, b2)?;
    match orders.iter().map(|(q, _)| q).max() {
        Some(q) => Ok(q.clone()),
        None => {
            debug_assert!(skipped);
            Err(Error::InsufficientPrecision(
                "branches identical to full truncation".into(),
            ))
        }
    }
}

/// Intersection multiplicity of two distinct branch classes computed from
/// the series: e₁ · (cs₂/d₂) · Σ over conjugate parametrizations of the
/// agreement order.
pub fn branch_intersection(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<Rat> {
    if b1.vertical && b2.vertical {
        return Err(Error::domain("coincident vertical branches"));
    }
    if b1.vertical {
        return branch_intersection(b2, b1);
    }
    if b2.vertical {
        // [γ · {x = 0}] = ord_t(t^e) = e per branch in the class of γ
        return Ok(rat_int(b1.ramification as i64) * rat_int(b1.class_size as i64));
    }
    let (orders, skipped) = agreement_orders(b1, b2)?;
    if skipped {
        return Err(Error::domain(
            "intersection of a branch class with itself is not finite",
        ));
    }
    let d2 = b2.field.as_ref().map_or(1, |f| f.absolute_degree());
    let mut total = Rat::zero();
    for (q, w) in orders {
        total += q * rat_int(w as i64);
    }
    // each distinct parametrization of b2 was counted d2/cs2 times
    let scale = rat(b1.ramification as i64, 1) * rat(b2.class_size as i64, d2 as i64);
    // multiply by class_size of b1: the formula fixes one representative of
    // b1; its conjugates contribute identically
    Ok(total * scale * rat_int(b1.class_size as i64))
}

/// Order in x of the resultant in y of two germs: an independent oracle for
/// total intersection multiplicity at the origin, computed by evaluation and
/// interpolation. Inputs must not share a factor and should meet the line
/// x = 0 only at the origin.
pub fn resultant_intersection_order(p: &QPoly, q: &QPoly) -> Option<u64> {
    let py = p.to_y_coeffs();
    let qy = q.to_y_coeffs();
    let dp = py.len().checked_sub(1)?;
    let dq = qy.len().checked_sub(1)?;
    let deg_bound = dp * q.deg_x().unwrap_or(0) as usize + dq * p.deg_x().unwrap_or(0) as usize + 1;
    let lc_p = py.last()?.clone();
    let lc_q = qy.last()?.clone();
    let mut points: Vec<(Rat, Rat)> = Vec::new();
    let mut x0 = 1i64;
    while points.len() < deg_bound + 1 {
        let xv = rat_int(x0);
        x0 += 1;
        if lc_p.eval(&xv).is_zero() || lc_q.eval(&xv).is_zero() {
            continue;
        }
        let pv = UniPoly::from_coeffs(py.iter().map(|c| c.eval(&xv)).collect());
        let qv = UniPoly::from_coeffs(qy.iter().map(|c| c.eval(&xv)).collect());
        points.push((xv, pv.resultant(&qv)));
    }
    // Lagrange interpolation over Q
    let mut res = UniPoly::<Rat>::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = UniPoly::<Rat>::one();
        let mut den = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                num = num.mul(&UniPoly::from_coeffs(vec![-xj.clone(), Rat::one()]));
                den *= xi - xj;
            }
        }
        res = res.add(&num.scale(&(yi / den)));
    }
    res.order().map(|o| o as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }

    fn ep(s: &str) -> EPoly {
        p(s).map_coeffs(|c| FElem::Rat(c.clone()))
    }

    #[test]
    fn polygon_of_cusp() {
        let np = newton_polygon(&ep("y^2 - x^3")).unwrap();
        assert_eq!(np.vertices, vec![(0, 2), (3, 0)]);
        assert_eq!(np.edges.len(), 1);
        let e = &np.edges[0];
        assert_eq!((e.incl_num, e.incl_den), (3, 2));
        assert_eq!(e.inclination(), rat(3, 2));
    }

    #[test]
    fn polygon_of_smooth_germ() {
        let np = newton_polygon(&ep("y")).unwrap();
        assert_eq!(np.vertices, vec![(0, 1)]);
        assert!(np.edges.is_empty());
    }

    #[test]
    fn polygon_two_edges() {
        let np = newton_polygon(&ep("(y^2-x^3)*(y-x)")).unwrap();
        let inclinations: Vec<Rat> = np.edges.iter().map(|e| e.inclination()).collect();
        assert_eq!(inclinations, vec![rat(1, 1), rat(3, 2)]);
    }

    #[test]
    fn polygon_rejects_unit() {
        assert!(newton_polygon(&ep("1 + x")).is_err());
    }

    #[test]
    fn branches_of_cusp() {
        let bs = puiseux_branches(&p("y^2 - x^3"), 4).unwrap();
        assert_eq!(bs.len(), 1);
        let b = &bs[0];
        assert_eq!(b.ramification, 2);
        assert_eq!(b.class_size, 1);
        assert!(b.exact);
        assert_eq!(b.terms.len(), 1);
        assert_eq!(b.terms[0].0, rat(3, 2));
        assert!(b.terms[0].1.is_one());
        assert_eq!(b.char_exponents, vec![rat(3, 2)]);
        // substituting (t^2, t^3) gives exactly zero
        assert_eq!(b.verified_order, None);
    }

    #[test]
    fn branches_of_smooth_and_split_conics() {
        let bs = puiseux_branches(&p("y"), 4).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].ramification, 1);
        assert!(bs[0].terms.is_empty() && bs[0].exact);

        // y^2 - x^2: rational tangents, two classes of size 1
        let bs = puiseux_branches(&p("y^2 - x^2"), 4).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.class_size == 1 && b.ramification == 1));

        // y^2 - 2x^2: conjugate tangents, one class of size 2
        let bs = puiseux_branches(&p("y^2 - 2*x^2"), 4).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].class_size, 2);
        assert_eq!(bs[0].ramification, 1);
    }

    #[test]
    fn branch_count_matches_weierstrass_degree() {
        for s in [
            "y^2 - x^3",
            "(y^2-x^3)*(y-x)",
            "y^2 - 2*x^4",
            "(y^2-x^3)^4 + x^8*y^5",
            "(y^2-x^3)^5 + x^18",
            "y^3 - x^5",
            "(y-x)*(y+x)*(y-x^2)",
        ] {
            let poly = p(s);
            let bs = puiseux_branches(&poly, 6).unwrap();
            let wdeg: u32 = {
                // ord_y of p(0, y)
                poly.terms()
                    .filter(|(&(a, _), _)| a == 0)
                    .map(|(&(_, b), _)| b)
                    .min()
                    .unwrap()
            };
            let total: u32 = bs
                .iter()
                .filter(|b| !b.vertical)
                .map(|b| b.ramification * b.class_size)
                .sum();
            assert_eq!(total, wdeg, "sheet count mismatch for {s}");
            for b in &bs {
                if !b.vertical {
                    // parametrization vanishes well past the truncation
                    if let Some(ord) = b.verified_order {
                        let min_ord = (&b.truncation * rat_int(b.ramification as i64))
                            .floor()
                            .to_integer();
                        assert!(
                            Int::from(ord) >= min_ord,
                            "verification order too small for {s}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn paper_curve_has_single_branch_of_ramification_8() {
        let f = p("(y^2-x^3)^4 + x^8*y^5");
        let bs = puiseux_branches(&f, 3).unwrap();
        assert_eq!(bs.len(), 1);
        let b = &bs[0];
        assert_eq!(b.ramification, 8);
        assert_eq!(b.class_size, 1);
        assert_eq!(b.char_exponents, vec![rat(3, 2), rat(19, 8)]);
    }

    #[test]
    fn contact_examples() {
        // contact(y = x^{3/2}, y = x) = 1
        let cusp = puiseux_branches(&p("y^2 - x^3"), 5).unwrap().remove(0);
        let line = puiseux_branches(&p("y - x"), 5).unwrap().remove(0);
        assert_eq!(branch_contact(&cusp, &line).unwrap(), rat_int(1));

        // contact(y = 0, y = x^5) = 5
        let axis = puiseux_branches(&p("y"), 7).unwrap().remove(0);
        let quintic = puiseux_branches(&p("y - x^5"), 7).unwrap().remove(0);
        assert_eq!(branch_contact(&axis, &quintic).unwrap(), rat_int(5));

        // self-contact of the y^2 = 2x^3 branch: conjugate parametrizations
        // (rotations) diverge at the first fractional exponent 3/2
        let b = puiseux_branches(&p("y^2 - 2*x^3"), 5).unwrap().remove(0);
        let c = branch_contact(&b, &b).unwrap();
        assert_eq!(c, rat(3, 2));
    }

    #[test]
    fn intersection_against_resultant_oracle() {
        let cases: Vec<(&str, &str)> = vec![
            ("y^2 - x^3", "y - x"),
            ("y^2 - x^3", "y^2 - x^5"),
            ("y^2 - 2*x^3", "y - x"),
            ("y^3 - x^5", "y^2 - x^3"),
            ("(y^2-x^3)^4 + x^8*y^5", "y^2 - x^3"),
            ("y - x^2", "y + x^2"),
        ];
        for (ps, qs) in cases {
            let (pp, qq) = (p(ps), p(qs));
            let oracle = resultant_intersection_order(&pp, &qq).unwrap();
            let bs1 = puiseux_branches(&pp, 6).unwrap();
            let bs2 = puiseux_branches(&qq, 6).unwrap();
            let mut total = Rat::zero();
            for b1 in &bs1 {
                for b2 in &bs2 {
                    total += branch_intersection(b1, b2).unwrap();
                }
            }
            assert!(total.denom().is_one(), "non-integer intersection total");
            assert_eq!(
                total.to_integer(),
                Int::from(oracle),
                "Noether consistency failed for ({ps}, {qs})"
            );
        }
    }

    #[test]
    fn determinism_same_input_same_output() {
        let f = p("(y^2-x^3)*(y^2-2*x^3)*(y-x)");
        let a = puiseux_branches(&f, 8).unwrap();
        let b = puiseux_branches(&f, 8).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.ramification, y.ramification);
            assert_eq!(x.class_size, y.class_size);
            assert_eq!(x.terms, y.terms);
        }
    }
}
