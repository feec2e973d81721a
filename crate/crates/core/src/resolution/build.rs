//! The blow-up engine.
//!
//! Phase A resolves the reduced curve b·a₁·a₂ (b = gcd(f,g)): a point is
//! blown up while the strict transform through it is singular, carries more
//! than one branch, is tangent to an exceptional axis, or sits on a
//! satellite point. Phase B (only when both f and g vanish at the origin)
//! pushes every branch of a₁ or a₂ whose attachment component was created
//! from a satellite point through one more free blow-up. Phase C blows up
//! branch attachment points while the attachment component and the branch
//! carry strictly opposite signs of N = N_f - N_g; phase D does the same for
//! satellite intersections of two components with opposite signs. Phases C
//! and D eliminate the indeterminacy of the lifted map f/g.
//!
//! Conjugate points (directions whose tangent-cone root is irrational) are
//! processed once on a representative; the output expands every conjugacy
//! orbit into individual components so the proximity matrix is honestly
//! unimodular.

use num_traits::{One, Zero};

use crate::alg::{roots_with_multiplicity, FElem, NumberField};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{poly_gcd, squarefree_part, UniPoly};
use crate::puiseux::EPoly;
use crate::QPoly;

use super::{AffineBranch, BlowReason, Chart, Component, ResolutionData};

const HRED: usize = 0;
const B: usize = 1;
const A1: usize = 2;
const A2: usize = 3;

/// A point of the current surface model, in local coordinates (s, t).
#[derive(Clone)]
struct Point {
    chart: Chart,
    field: Option<NumberField>,
    /// Component (rep index) whose strict transform is {s = 0} / {t = 0}.
    axes: [Option<usize>; 2],
    /// Strict transforms of h_red, b, a1, a2 at this point (units allowed).
    curves: [EPoly; 4],
    /// Conjugacy class size of the direction that discovered this point.
    class: u32,
}

impl Point {
    fn ord(&self, which: usize) -> i64 {
        if self.curves[which].is_zero() {
            0
        } else {
            self.curves[which].order().unwrap_or(0) as i64
        }
    }

    fn axis_count(&self) -> usize {
        self.axes.iter().filter(|a| a.is_some()).count()
    }
}

/// A component representative before conjugacy-orbit expansion.
struct RepComp {
    prox: Vec<usize>,
    /// Discovery parent: the youngest axis (None for the origin).
    dp: Option<usize>,
    local_class: u32,
    v_b: i64,
    v_a1: i64,
    v_a2: i64,
    k: i64,
    chart: Chart,
    point_chart: Chart,
    point_axes: [Option<usize>; 2],
    from_satellite: bool,
    reason: BlowReason,
}

impl RepComp {
    fn n(&self) -> i64 {
        self.v_a1 - self.v_a2
    }
}

struct SatSite {
    a: usize,
    b: usize,
    point: Point,
}

struct Attach {
    point: Point,
    att: Option<usize>,
    mu_b: i64,
    mu_a1: i64,
    mu_a2: i64,
    from_satellite: bool,
}

impl Attach {
    fn n_branch(&self) -> i64 {
        self.mu_a1 - self.mu_a2
    }
}

struct Builder {
    reps: Vec<RepComp>,
    sites: Vec<SatSite>,
    attachments: Vec<Attach>,
}

impl Builder {
    /// Blow up a point: creates a component, registers corner sites, and
    /// returns the new rep index together with the curve children in
    /// canonical order.
    fn blow(&mut self, pt: &Point, reason: BlowReason) -> Result<(usize, Vec<Point>)> {
        let new_idx = self.reps.len();
        let prox: Vec<usize> = pt.axes.iter().flatten().copied().collect();
        let v_of = |which: usize, builder: &Builder| -> i64 {
            prox.iter()
                .map(|&j| match which {
                    B => builder.reps[j].v_b,
                    A1 => builder.reps[j].v_a1,
                    _ => builder.reps[j].v_a2,
                })
                .sum::<i64>()
                + pt.ord(which)
        };
        let v_b = v_of(B, self);
        let v_a1 = v_of(A1, self);
        let v_a2 = v_of(A2, self);
        let k = 1 + prox.iter().map(|&j| self.reps[j].k).sum::<i64>();
        let dp = prox.iter().copied().max();
        let u = EPoly::var_x();
        let w = EPoly::var_y();
        let uw = u.mul(&w);
        // valuation chart: (s, t) = (u, u w)
        let chart = Chart {
            x_sub: pt.chart.x_sub.substitute(&u, &uw),
            y_sub: pt.chart.y_sub.substitute(&u, &uw),
            field: pt.field.clone(),
        };
        self.reps.push(RepComp {
            prox: prox.clone(),
            dp,
            local_class: pt.class,
            v_b,
            v_a1,
            v_a2,
            k,
            chart,
            point_chart: pt.chart.clone(),
            point_axes: pt.axes,
            from_satellite: pt.axis_count() == 2,
            reason,
        });
        // the blown point separates its two axes
        if let [Some(a), Some(b)] = pt.axes {
            self.sites
                .retain(|s| !(s.a == a.min(b) && s.b == a.max(b)) && !(s.a == a.max(b) && s.b == a.min(b)));
        }
        // corner sites of the new component with the strict axes
        let mh = pt.ord(HRED) as u32;
        let sub_c1 = |f: &EPoly, c: &FElem| -> EPoly {
            // (s, t) = (u, u (c + w))
            let t_expr = EPoly::from_terms([((1, 0), c.clone()), ((1, 1), FElem::one())]);
            f.substitute(&u, &t_expr)
        };
        let orders: Vec<i64> = (0..4).map(|i| pt.ord(i)).collect();
        let transform_c1 = |curves: &[EPoly; 4], c: &FElem| -> [EPoly; 4] {
            let mut out: Vec<EPoly> = Vec::with_capacity(4);
            for (i, f) in curves.iter().enumerate() {
                if f.is_zero() {
                    out.push(EPoly::zero());
                } else {
                    out.push(sub_c1(f, c).shift_down(orders[i] as u32, 0));
                }
            }
            [out.remove(0), out.remove(0), out.remove(0), out.remove(0)]
        };
        let transform_c2 = |curves: &[EPoly; 4]| -> [EPoly; 4] {
            let mut out: Vec<EPoly> = Vec::with_capacity(4);
            for (i, f) in curves.iter().enumerate() {
                if f.is_zero() {
                    out.push(EPoly::zero());
                } else {
                    out.push(f.substitute(&uw, &w).shift_down(0, orders[i] as u32));
                }
            }
            [out.remove(0), out.remove(0), out.remove(0), out.remove(0)]
        };
        // corner with the old s-axis: C2 chart (s, t) = (u w, w)
        if let Some(a) = pt.axes[0] {
            let corner = Point {
                chart: Chart {
                    x_sub: pt.chart.x_sub.substitute(&uw, &w),
                    y_sub: pt.chart.y_sub.substitute(&uw, &w),
                    field: pt.field.clone(),
                },
                field: pt.field.clone(),
                axes: [Some(a), Some(new_idx)],
                curves: transform_c2(&pt.curves),
                class: 1,
            };
            self.sites.push(SatSite {
                a,
                b: new_idx,
                point: corner,
            });
        }
        // corner with the old t-axis: C1 chart at direction c = 0
        if let Some(bax) = pt.axes[1] {
            let zero = FElem::zero();
            let corner = Point {
                chart: Chart {
                    x_sub: sub_c1(&pt.chart.x_sub, &zero),
                    y_sub: sub_c1(&pt.chart.y_sub, &zero),
                    field: pt.field.clone(),
                },
                field: pt.field.clone(),
                axes: [Some(new_idx), Some(bax)],
                curves: transform_c1(&pt.curves, &zero),
                class: 1,
            };
            self.sites.push(SatSite {
                a: bax,
                b: new_idx,
                point: corner,
            });
        }
        // curve children: directions of the tangent cone of h_red
        let lowest = pt.curves[HRED].lowest_form();
        // finite directions: roots of L(1, c)
        let mut lc_poly_coeffs = vec![FElem::zero(); mh as usize + 1];
        for (&(i, j), coeff) in lowest.terms() {
            let _ = i;
            lc_poly_coeffs[j as usize] = coeff.clone();
        }
        let lc_poly = UniPoly::from_coeffs(lc_poly_coeffs);
        let vertical = lc_poly.degree().map_or(true, |d| (d as u32) < mh);
        let mut children: Vec<Point> = Vec::new();
        if !lc_poly.is_zero() && lc_poly.degree().map_or(false, |d| d >= 1) {
            for root in roots_with_multiplicity(pt.field.as_ref(), &lc_poly) {
                let c = root.root.clone();
                let child_field = root.field_after.clone();
                // lift curves into the extended field: substitution handles it
                let curves = transform_c1(&pt.curves, &c);
                // axes: the c = 0 direction may hit the strict old t-axis
                let axes = if c.is_zero() && pt.axes[1].is_some() {
                    [Some(new_idx), pt.axes[1]]
                } else {
                    [Some(new_idx), None]
                };
                if c.is_zero() && pt.axes[1].is_some() {
                    // this child is the corner already registered as a site
                    // (curve passes through it): keep the site in sync later
                    // by blowing the child through the normal stack path.
                }
                let t_expr = EPoly::from_terms([((1, 0), c.clone()), ((1, 1), FElem::one())]);
                let child = Point {
                    chart: Chart {
                        x_sub: pt.chart.x_sub.substitute(&u, &t_expr),
                        y_sub: pt.chart.y_sub.substitute(&u, &t_expr),
                        field: child_field.clone(),
                    },
                    field: child_field,
                    axes,
                    curves,
                    class: root.class_size as u32,
                };
                children.push(child);
            }
        }
        if vertical {
            // the direction along {s = 0}: C2 corner or a free vertical point
            let axes = [pt.axes[0], Some(new_idx)];
            let child = Point {
                chart: Chart {
                    x_sub: pt.chart.x_sub.substitute(&uw, &w),
                    y_sub: pt.chart.y_sub.substitute(&uw, &w),
                    field: pt.field.clone(),
                },
                field: pt.field.clone(),
                axes,
                curves: transform_c2(&pt.curves),
                class: 1,
            };
            children.push(child);
        }
        // keep only children the reduced curve actually passes through
        children.retain(|ch| !ch.curves[HRED].is_unit_at_origin() && !ch.curves[HRED].is_zero());
        Ok((new_idx, children))
    }

    /// Phase-A resolvedness of a point carrying the reduced curve.
    fn resolved(&self, pt: &Point) -> bool {
        let mh = pt.ord(HRED);
        if mh == 0 {
            return true;
        }
        if mh >= 2 {
            return false;
        }
        match pt.axis_count() {
            2 => false,
            0 => true,
            _ => {
                // tangency against the single exceptional axis
                let lowest = pt.curves[HRED].lowest_form();
                if pt.axes[0].is_some() {
                    // axis {s = 0}: tangent iff the w-coefficient vanishes
                    lowest.coeff(0, 1).is_zero().then_some(()).is_none()
                } else {
                    lowest.coeff(1, 0).is_zero().then_some(()).is_none()
                }
            }
        }
    }

    fn record_attachment(&mut self, pt: Point) {
        let att = pt.axes.iter().flatten().copied().next();
        let from_satellite = att.map_or(false, |j| self.reps[j].from_satellite);
        self.attachments.push(Attach {
            mu_b: pt.ord(B),
            mu_a1: pt.ord(A1),
            mu_a2: pt.ord(A2),
            point: pt,
            att,
            from_satellite,
        });
    }

    /// Blow up an attachment point and move the branch one level up.
    fn blow_attachment(&mut self, idx: usize, reason: BlowReason) -> Result<()> {
        let pt = self.attachments[idx].point.clone();
        let (_new_idx, children) = self.blow(&pt, reason)?;
        if children.len() != 1 {
            return Err(Error::internal(format!(
                "attachment blow-up produced {} curve children",
                children.len()
            )));
        }
        let child = children.into_iter().next().unwrap();
        if child.axis_count() != 1 || child.ord(HRED) != 1 {
            return Err(Error::internal(
                "branch not transverse after attachment blow-up",
            ));
        }
        let att = child.axes.iter().flatten().copied().next();
        self.attachments[idx] = Attach {
            mu_b: child.ord(B),
            mu_a1: child.ord(A1),
            mu_a2: child.ord(A2),
            point: child,
            att,
            from_satellite: false,
        };
        Ok(())
    }
}

/// Compute the minimal log resolution of the meromorphic germ f/g.
pub fn log_resolution(f: &QPoly, g: &QPoly) -> Result<ResolutionData> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("log resolution requires nonzero f and g"));
    }
    if f.is_unit_at_origin() && g.is_unit_at_origin() {
        return Err(Error::TrivialGerm(
            "f and g are both units at the origin".into(),
        ));
    }
    let b = poly_gcd(f, g)?;
    let a1 = f.div_exact(&b);
    let a2 = g.div_exact(&b);
    let h = b.mul(&a1).mul(&a2);
    let hred = squarefree_part(&h)?;
    if hred.is_constant() {
        return Err(Error::TrivialGerm("f/g is a unit germ".into()));
    }
    if a1.is_constant() && a2.is_constant() {
        return Err(Error::TrivialGerm("f/g is a constant germ".into()));
    }
    let to_e = |p: &QPoly| -> EPoly { p.map_coeffs(|c| FElem::Rat(c.clone())) };
    let origin = Point {
        chart: Chart {
            x_sub: EPoly::var_x(),
            y_sub: EPoly::var_y(),
            field: None,
        },
        field: None,
        axes: [None, None],
        curves: [to_e(&hred), to_e(&b), to_e(&a1), to_e(&a2)],
        class: 1,
    };
    let mut builder = Builder {
        reps: Vec::new(),
        sites: Vec::new(),
        attachments: Vec::new(),
    };

    // Phase A: resolve the reduced curve.
    let mut stack = vec![origin];
    let mut fuel = 100_000usize;
    while let Some(pt) = stack.pop() {
        fuel = fuel
            .checked_sub(1)
            .ok_or_else(|| Error::internal("curve resolution did not terminate"))?;
        if builder.resolved(&pt) {
            builder.record_attachment(pt);
            continue;
        }
        let (_idx, children) = builder.blow(&pt, BlowReason::Curve)?;
        for child in children.into_iter().rev() {
            stack.push(child);
        }
    }

    let meromorphic = !f.is_unit_at_origin() && !g.is_unit_at_origin();

    // Phase B: push satellite-attached branches of a1 or a2 one free point.
    if meromorphic {
        for i in 0..builder.attachments.len() {
            let a = &builder.attachments[i];
            if a.att.is_some() && a.from_satellite && (a.mu_a1 + a.mu_a2) > 0 {
                builder.blow_attachment(i, BlowReason::Polish)?;
            }
        }
    }

    // Phase C: branch base points (opposite signs of N on attachment and branch).
    for i in 0..builder.attachments.len() {
        let mut fuel = 10_000usize;
        loop {
            let a = &builder.attachments[i];
            let Some(att) = a.att else { break };
            let n_att = builder.reps[att].n();
            let n_b = a.n_branch();
            if n_att > 0 && n_b < 0 || n_att < 0 && n_b > 0 {
                builder.blow_attachment(i, BlowReason::BranchBasePoint)?;
            } else {
                break;
            }
            fuel = fuel
                .checked_sub(1)
                .ok_or_else(|| Error::internal("branch base-point chain did not terminate"))?;
        }
    }

    // Phase D: satellite base points.
    let mut fuel = 10_000usize;
    loop {
        let conflict = builder.sites.iter().position(|s| {
            let na = builder.reps[s.a].n();
            let nb = builder.reps[s.b].n();
            na > 0 && nb < 0 || na < 0 && nb > 0
        });
        let Some(pos) = conflict else { break };
        let pt = builder.sites[pos].point.clone();
        // the site is removed inside blow() via the axis pair
        let (_idx, children) = builder.blow(&pt, BlowReason::SatelliteBasePoint)?;
        if !children.is_empty() {
            return Err(Error::internal("curve passes through a late satellite"));
        }
        fuel = fuel
            .checked_sub(1)
            .ok_or_else(|| Error::internal("satellite base-point loop did not terminate"))?;
    }

    expand(builder)
}

/// Expand conjugacy orbits into individual components and assemble the
/// final resolution data.
fn expand(builder: Builder) -> Result<ResolutionData> {
    let reps = &builder.reps;
    let n_reps = reps.len();
    // copies per rep
    let mut copies = vec![1usize; n_reps];
    for i in 0..n_reps {
        let parent_copies = reps[i].dp.map_or(1, |d| copies[d]);
        copies[i] = parent_copies * reps[i].local_class as usize;
    }
    let mut start = vec![0usize; n_reps];
    let mut total = 0usize;
    for i in 0..n_reps {
        start[i] = total;
        total += copies[i];
    }
    // project a copy rank of rep r onto an ancestor a along the dp chain
    let project = |r: usize, rank: usize, a: usize| -> Result<usize> {
        let mut cur = r;
        let mut rk = rank;
        while cur != a {
            rk /= reps[cur].local_class as usize;
            cur = reps[cur]
                .dp
                .ok_or_else(|| Error::internal("axis not on discovery chain"))?;
        }
        Ok(rk)
    };
    let mut components = Vec::with_capacity(total);
    for (r, rep) in reps.iter().enumerate() {
        for rank in 0..copies[r] {
            let mut prox = Vec::with_capacity(rep.prox.len());
            for &a in &rep.prox {
                let ra = project(r, rank, a)?;
                prox.push(start[a] + ra);
            }
            components.push(Component {
                proximate_to: prox,
                k: rep.k,
                n_f: rep.v_b + rep.v_a1,
                n_g: rep.v_b + rep.v_a2,
                chart: Some(rep.chart.clone()),
                point_chart: Some(rep.point_chart.clone()),
                point_axes: expand_axes(rep.point_axes, r, rank, &start, &project)?,
                reason: rep.reason,
            });
        }
    }
    // affine branches: one aggregated entry per copy of the attachment rep
    let mut affine = Vec::new();
    for a in &builder.attachments {
        match a.att {
            None => affine.push(AffineBranch {
                attachment: None,
                class_size: a.point.class,
                mult_f: a.mu_b + a.mu_a1,
                mult_g: a.mu_b + a.mu_a2,
                point_chart: Some(a.point.chart.clone()),
                point_axes: [None, None],
            }),
            Some(att) => {
                for rank in 0..copies[att] {
                    affine.push(AffineBranch {
                        attachment: Some(start[att] + rank),
                        class_size: a.point.class,
                        mult_f: a.mu_b + a.mu_a1,
                        mult_g: a.mu_b + a.mu_a2,
                        point_chart: Some(a.point.chart.clone()),
                        point_axes: expand_axes(a.point.axes, att, rank, &start, &project)?,
                    });
                }
            }
        }
    }
    // adjacency: expand live sites over copies of the younger component
    let mut adjacency = Vec::new();
    for s in &builder.sites {
        let (young, old) = if s.a > s.b { (s.a, s.b) } else { (s.b, s.a) };
        for rank in 0..copies[young] {
            let ro = project(young, rank, old)?;
            adjacency.push((start[old] + ro, start[young] + rank));
        }
    }
    // dicritical flags
    let n: Vec<i64> = components.iter().map(|c| c.n_f - c.n_g).collect();
    let mut dicritical = vec![false; total];
    for (i, &ni) in n.iter().enumerate() {
        if ni != 0 {
            continue;
        }
        let neighbor_nonzero = adjacency
            .iter()
            .any(|&(a, b)| (a == i && n[b] != 0) || (b == i && n[a] != 0));
        let branch_nonzero = affine
            .iter()
            .any(|br| br.attachment == Some(i) && br.n() != 0);
        dicritical[i] = neighbor_nonzero || branch_nonzero;
    }
    Ok(ResolutionData {
        components,
        affine,
        adjacency,
        dicritical,
    })
}

fn expand_axes(
    axes: [Option<usize>; 2],
    owner_rep: usize,
    rank: usize,
    start: &[usize],
    project: &impl Fn(usize, usize, usize) -> Result<usize>,
) -> Result<[Option<usize>; 2]> {
    let mut out = [None, None];
    for (slot, ax) in axes.iter().enumerate() {
        if let Some(a) = ax {
            let ra = project(owner_rep, rank, *a)?;
            out[slot] = Some(start[*a] + ra);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::resolution::meromorphic_parts;

    fn p(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn cusp_classical_resolution() {
        // f = y^2 - x^3 with unit g: the classical three blow-ups
        let res = log_resolution(&p("y^2-x^3"), &p("1")).unwrap();
        assert_eq!(res.len(), 3);
        assert_eq!(res.n_f_vector(), vec![2, 3, 6]);
        assert_eq!(res.n_g_vector(), vec![0, 0, 0]);
        assert_eq!(res.k_vector(), vec![1, 2, 4]);
        assert_eq!(res.components[1].proximate_to, vec![0]);
        assert_eq!(res.components[2].proximate_to, vec![0, 1]);
        assert_eq!(res.affine.len(), 1);
        assert_eq!(res.affine[0].attachment, Some(2));
        assert_eq!(res.affine[0].mult_f, 1);
        assert!(res.dicritical.iter().all(|&d| !d));
    }

    #[test]
    fn x_over_y_single_blowup() {
        let res = log_resolution(&p("x"), &p("y")).unwrap();
        assert_eq!(res.len(), 1);
        assert_eq!(res.n_f_vector(), vec![1]);
        assert_eq!(res.n_g_vector(), vec![1]);
        assert_eq!(res.n_vector(), vec![0]);
        assert_eq!(res.dicritical, vec![true]);
        assert_eq!(res.affine.len(), 2);
        assert!(res.affine.iter().all(|b| b.attachment == Some(0)));
        let f_branch = res.affine.iter().position(|b| b.mult_f == 1).unwrap();
        let g_branch = res.affine.iter().position(|b| b.mult_g == 1).unwrap();
        assert_ne!(f_branch, g_branch);
        let parts = meromorphic_parts(&res);
        assert_eq!(parts.zero_exc, vec![0]);
        assert_eq!(parts.zero_aff[f_branch], 1);
        assert_eq!(parts.infinity_aff[g_branch], -1);
    }

    #[test]
    fn trivial_and_zero_inputs() {
        assert!(matches!(
            log_resolution(&p("1+x"), &p("1+y")),
            Err(Error::TrivialGerm(_))
        ));
        assert!(log_resolution(&QPoly::zero(), &p("x")).is_err());
        // f = g: the germ is the constant 1
        assert!(matches!(
            log_resolution(&p("x"), &p("x")),
            Err(Error::TrivialGerm(_))
        ));
    }

    #[test]
    fn smooth_f_unit_g_has_empty_resolution() {
        let res = log_resolution(&p("x"), &p("1")).unwrap();
        assert_eq!(res.len(), 0);
        assert_eq!(res.affine.len(), 1);
        assert_eq!(res.affine[0].attachment, None);
        assert_eq!(res.affine[0].mult_f, 1);
    }

    #[test]
    fn cusp_valuations_via_charts() {
        let res = log_resolution(&p("y^2-x^3"), &p("1")).unwrap();
        assert_eq!(res.valuation_vector(&p("x")).unwrap(), vec![1, 1, 2]);
        assert_eq!(res.valuation_vector(&p("y")).unwrap(), vec![1, 2, 3]);
        assert_eq!(res.valuation_vector(&p("y^2-x^3")).unwrap(), vec![2, 3, 6]);
        assert_eq!(res.valuation_vector(&p("1 + x")).unwrap(), vec![0, 0, 0]);
        // v = P^{-1} m cross-check
        for h in ["x", "y", "y^2-x^3", "x*y + y^3", "x^2 - y^5"] {
            let v = res.valuation_vector(&p(h)).unwrap();
            let m = res.multiplicity_vector(&p(h)).unwrap();
            let pm = res.proximity_matrix();
            let pv = pm.matvec(&v.iter().map(|&x| crate::field::rat_int(x)).collect::<Vec<_>>());
            let expect: Vec<crate::Rat> = m.iter().map(|&x| crate::field::rat_int(x)).collect();
            assert_eq!(pv, expect, "P v != m for {h}");
        }
    }

    #[test]
    fn tangential_pair_resolves_with_two_blowups() {
        // f = x (smooth), g = x + y^2 (smooth, tangent to f): two blow-ups
        let res = log_resolution(&p("x"), &p("x + y^2")).unwrap();
        assert_eq!(res.len(), 2);
        assert_eq!(res.n_f_vector(), vec![1, 2]);
        assert_eq!(res.n_g_vector(), vec![1, 2]);
        assert_eq!(res.n_vector(), vec![0, 0]);
        // E2 carries both branches, is dicritical; E1 is not
        assert_eq!(res.dicritical, vec![false, true]);
    }

    #[test]
    fn conjugate_directions_expand_orbit() {
        // y^2 - 2x^4 (with unit g): two conjugate smooth branches tangent to
        // the x-axis; the second blow-up has irrational direction roots but
        // the cluster stays rational sized: E1 then E2, branches on E2
        let res = log_resolution(&p("y^2 - 2*x^4"), &p("1")).unwrap();
        assert_eq!(res.len(), 2);
        assert_eq!(res.n_f_vector(), vec![2, 4]);
        // one aggregated affine entry of class size 2
        assert_eq!(res.affine.len(), 1);
        assert_eq!(res.affine[0].class_size, 2);
        // and a genuinely split orbit: x(y^2 - 2x^2) has two conjugate
        // directions away from the axes
        let res = log_resolution(&p("x*(y^2 - 2*x^2)"), &p("1")).unwrap();
        // blow up origin once; strict branches separate immediately
        assert_eq!(res.len(), 1);
        assert_eq!(res.affine.len(), 2);
        let mut sizes: Vec<u32> = res.affine.iter().map(|b| b.class_size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
    }
}
