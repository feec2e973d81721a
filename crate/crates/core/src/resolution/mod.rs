//! Minimal log resolution of a meromorphic germ f/g as combinatorial data.
//!
//! The resolution is a sequence of point blow-ups encoded by the proximity
//! matrix P (lower triangular, unit diagonal, entry (i,j) = -1 iff the point
//! p_i lies on the strict transform of E_j). Along with P we keep the
//! canonical values k = P⁻¹·1, the value vectors of f and g, the affine
//! branches of the strict transform with their attachment components, the
//! dicritical flags, and a chart log: for every component a substitution
//! (x, y) = Φ(u, w) whose u-order computes the valuation of an arbitrary
//! germ along that component.

mod build;
pub mod io;

pub use build::log_resolution;

use num_traits::Zero;

use crate::alg::NumberField;
use crate::error::{Error, Result};
use crate::field::rat_int;
use crate::linalg::QMatrix;
use crate::puiseux::EPoly;
use crate::{QPoly, Rat};

/// Why a point was blown up (kept for the minimality diagnostics).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowReason {
    /// The reduced curve was not yet resolved at the point (singular strict
    /// transform, several branches, tangency, or a satellite on the curve).
    Curve,
    /// A branch attached to a component created from a satellite point is
    /// pushed one more free point (meromorphic transversality polish).
    Polish,
    /// Base point of the pencil on a strict branch: the attachment component
    /// and the branch carry opposite signs of N.
    BranchBasePoint,
    /// Base point at a satellite: the two components carry opposite signs.
    SatelliteBasePoint,
}

/// One chart: a substitution (x, y) = (x_sub(u, w), y_sub(u, w)).
#[derive(Clone, Debug)]
pub struct Chart {
    pub x_sub: EPoly,
    pub y_sub: EPoly,
    pub field: Option<NumberField>,
}

/// One exceptional component E_i, indexed by the blown-up point p_i.
#[derive(Clone, Debug)]
pub struct Component {
    /// Indices of earlier components this point is proximate to (its axes).
    pub proximate_to: Vec<usize>,
    /// Canonical value k_i of the relative canonical divisor.
    pub k: i64,
    /// Value of f along the component: N_{f,i}.
    pub n_f: i64,
    /// Value of g along the component: N_{g,i}.
    pub n_g: i64,
    /// Valuation chart: E_i = {u = 0}; the u-order of a pullback is v_i.
    /// Absent for data imported without charts.
    pub chart: Option<Chart>,
    /// Chart centered at the blown-up point p_i itself (for strict-transform
    /// multiplicities).
    pub point_chart: Option<Chart>,
    /// Which of the point chart's axes (u, w) are exceptional components.
    pub point_axes: [Option<usize>; 2],
    pub reason: BlowReason,
}

/// Owner of an affine branch of the strict transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchOwner {
    F,
    G,
    Both,
}

impl BranchOwner {
    pub fn as_str(&self) -> &'static str {
        match self {
            BranchOwner::F => "f",
            BranchOwner::G => "g",
            BranchOwner::Both => "both",
        }
    }
}

/// An affine branch (class) of the strict transform of f·g.
#[derive(Clone, Debug)]
pub struct AffineBranch {
    /// The unique exceptional component met by the branch (None only when
    /// the resolution has no exceptional components at all).
    pub attachment: Option<usize>,
    /// Number of conjugate branches aggregated in this entry; each meets the
    /// attachment component once.
    pub class_size: u32,
    /// Multiplicity of the branch in f.
    pub mult_f: i64,
    /// Multiplicity of the branch in g.
    pub mult_g: i64,
    /// Chart at the attachment point (the branch is separated there);
    /// absent for imported data.
    pub point_chart: Option<Chart>,
    pub point_axes: [Option<usize>; 2],
}

impl AffineBranch {
    pub fn owner(&self) -> BranchOwner {
        match (self.mult_f > 0, self.mult_g > 0) {
            (true, false) => BranchOwner::F,
            (false, true) => BranchOwner::G,
            _ => BranchOwner::Both,
        }
    }

    /// N on the branch: multiplicity in f minus multiplicity in g.
    pub fn n(&self) -> i64 {
        self.mult_f - self.mult_g
    }
}

/// The combinatorial shadow of the minimal log resolution of f/g.
#[derive(Clone, Debug)]
pub struct ResolutionData {
    pub components: Vec<Component>,
    pub affine: Vec<AffineBranch>,
    /// Pairs of components whose strict transforms intersect on the final
    /// surface.
    pub adjacency: Vec<(usize, usize)>,
    /// Dicritical flags (N_i = 0 and the lifted map is non-constant on E_i).
    pub dicritical: Vec<bool>,
}

impl ResolutionData {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn k_vector(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.k).collect()
    }

    pub fn n_f_vector(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.n_f).collect()
    }

    pub fn n_g_vector(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.n_g).collect()
    }

    /// N_i = N_{f,i} - N_{g,i}.
    pub fn n_vector(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.n_f - c.n_g).collect()
    }

    /// The proximity matrix P: unit lower triangular, (i,j) = -1 iff p_i is
    /// proximate to p_j.
    pub fn proximity_matrix(&self) -> QMatrix {
        let n = self.len();
        let mut m = QMatrix::identity(n);
        for (i, c) in self.components.iter().enumerate() {
            for &j in &c.proximate_to {
                m[(i, j)] = -rat_int(1);
            }
        }
        m
    }

    /// Swap the roles of f and g (used by the infinity multiplier ideal).
    pub fn swap_fg(&self) -> ResolutionData {
        let mut out = self.clone();
        for c in &mut out.components {
            std::mem::swap(&mut c.n_f, &mut c.n_g);
        }
        for b in &mut out.affine {
            std::mem::swap(&mut b.mult_f, &mut b.mult_g);
        }
        // dicritical flags are symmetric in f and g
        out
    }

    /// Valuation vector of a nonzero polynomial: v_i(h) = u-order of the
    /// pullback of h through the chart of E_i.
    pub fn valuation_vector(&self, h: &QPoly) -> Result<Vec<i64>> {
        if h.is_zero() {
            return Err(Error::domain("valuation of the zero polynomial"));
        }
        let eh: EPoly = h.map_coeffs(|c| crate::alg::FElem::Rat(c.clone()));
        let mut out = Vec::with_capacity(self.len());
        for comp in &self.components {
            let chart = comp.chart.as_ref().ok_or_else(|| {
                Error::domain("resolution data has no charts (imported without them)")
            })?;
            let pulled = eh.substitute(&chart.x_sub, &chart.y_sub);
            let ord = pulled
                .x_order()
                .ok_or_else(|| Error::internal("pullback vanished identically"))?;
            out.push(ord as i64);
        }
        Ok(out)
    }

    /// Multiplicity vector m_i(h) = order of the strict transform of h at the
    /// point p_i (independent route; satisfies v = P⁻¹ m).
    pub fn multiplicity_vector(&self, h: &QPoly) -> Result<Vec<i64>> {
        if h.is_zero() {
            return Err(Error::domain("multiplicities of the zero polynomial"));
        }
        let eh: EPoly = h.map_coeffs(|c| crate::alg::FElem::Rat(c.clone()));
        let mut out = Vec::with_capacity(self.len());
        for comp in &self.components {
            let chart = comp.point_chart.as_ref().ok_or_else(|| {
                Error::domain("resolution data has no charts (imported without them)")
            })?;
            let pulled = eh.substitute(&chart.x_sub, &chart.y_sub);
            let sx = if comp.point_axes[0].is_some() {
                pulled.x_order().unwrap_or(0)
            } else {
                0
            };
            let sy = if comp.point_axes[1].is_some() {
                pulled.y_order().unwrap_or(0)
            } else {
                0
            };
            let strict = pulled.shift_down(sx, sy);
            out.push(strict.order().unwrap_or(0) as i64);
        }
        Ok(out)
    }

    /// Multiplicity of each affine branch as a component of `h` (the value of
    /// h at the affine component): computed from the squarefree decomposition
    /// of h and strict-transform membership at the attachment point.
    pub fn affine_values(&self, h: &QPoly) -> Result<Vec<i64>> {
        if h.is_zero() {
            return Err(Error::domain("affine values of the zero polynomial"));
        }
        if h.is_constant() {
            return Ok(vec![0; self.affine.len()]);
        }
        let dec = crate::poly::squarefree_decomposition(h)?;
        let mut out = vec![0i64; self.affine.len()];
        for (sqf, mult) in &dec {
            let es: EPoly = sqf.map_coeffs(|c| crate::alg::FElem::Rat(c.clone()));
            for (bi, branch) in self.affine.iter().enumerate() {
                let chart = branch.point_chart.as_ref().ok_or_else(|| {
                    Error::domain("resolution data has no charts (imported without them)")
                })?;
                let pulled = es.substitute(&chart.x_sub, &chart.y_sub);
                if pulled.is_zero() {
                    return Err(Error::internal("squarefree factor pulled back to zero"));
                }
                let sx = if branch.point_axes[0].is_some() {
                    pulled.x_order().unwrap_or(0)
                } else {
                    0
                };
                let sy = if branch.point_axes[1].is_some() {
                    pulled.y_order().unwrap_or(0)
                } else {
                    0
                };
                let strict = pulled.shift_down(sx, sy);
                if !strict.is_unit_at_origin() {
                    out[bi] += *mult as i64;
                }
            }
        }
        Ok(out)
    }

    /// Total transform divisor of h: exceptional valuations plus affine
    /// component multiplicities, as exact rationals.
    pub fn pullback_divisor(&self, h: &QPoly) -> Result<(Vec<Rat>, Vec<Rat>)> {
        let exc = self.valuation_vector(h)?.into_iter().map(rat_int).collect();
        let aff = self.affine_values(h)?.into_iter().map(rat_int).collect();
        Ok((exc, aff))
    }
}

/// The divisor N = N_f - N_g split into its positive part (including affine
/// branches of f) and negative part (affine branches of g).
#[derive(Clone, Debug, PartialEq)]
pub struct MeromorphicParts {
    /// N_i per exceptional component.
    pub n: Vec<i64>,
    /// Positive part on exceptional components (N_i when N_i > 0, else 0).
    pub zero_exc: Vec<i64>,
    /// Positive part on affine branches.
    pub zero_aff: Vec<i64>,
    /// Negative part (coefficients ≤ 0) on exceptional components.
    pub infinity_exc: Vec<i64>,
    /// Negative part on affine branches.
    pub infinity_aff: Vec<i64>,
}

/// Split π*f - π*g by sign; dicritical components belong to neither part.
pub fn meromorphic_parts(res: &ResolutionData) -> MeromorphicParts {
    let n = res.n_vector();
    let zero_exc = n.iter().map(|&v| if v > 0 { v } else { 0 }).collect();
    let infinity_exc = n.iter().map(|&v| if v < 0 { v } else { 0 }).collect();
    let mut zero_aff = Vec::new();
    let mut infinity_aff = Vec::new();
    for b in &res.affine {
        let nb = b.n();
        zero_aff.push(if nb > 0 { nb } else { 0 });
        infinity_aff.push(if nb < 0 { nb } else { 0 });
    }
    MeromorphicParts {
        n,
        zero_exc,
        zero_aff,
        infinity_exc,
        infinity_aff,
    }
}
