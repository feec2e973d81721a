//! Machine-readable resolution data: export and import.
//!
//! The exported document carries the combinatorial shadow (proximity rows,
//! k, N_f, N_g, affine branch table, dicritical flags, adjacency). Imported
//! data drives all divisor-lattice and jumping-number computations; chart
//!-dependent operations (valuations of new polynomials, generators) require
//! a resolution computed in-process and report a clean error otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{AffineBranch, BlowReason, Component, ResolutionData};

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ResolutionDoc {
    pub components: usize,
    /// Row i lists the indices j with p_i proximate to p_j.
    pub proximity: Vec<Vec<usize>>,
    pub k: Vec<i64>,
    pub n_f: Vec<i64>,
    pub n_g: Vec<i64>,
    pub n: Vec<i64>,
    pub dicritical: Vec<bool>,
    pub affine_branches: Vec<AffineBranchDoc>,
    pub adjacency: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AffineBranchDoc {
    pub owner: String,
    pub attachment: Option<usize>,
    pub class_size: u32,
    pub mult_f: i64,
    pub mult_g: i64,
}

pub fn export(res: &ResolutionData) -> ResolutionDoc {
    ResolutionDoc {
        components: res.len(),
        proximity: res
            .components
            .iter()
            .map(|c| c.proximate_to.clone())
            .collect(),
        k: res.k_vector(),
        n_f: res.n_f_vector(),
        n_g: res.n_g_vector(),
        n: res.n_vector(),
        dicritical: res.dicritical.clone(),
        affine_branches: res
            .affine
            .iter()
            .map(|b| AffineBranchDoc {
                owner: b.owner().as_str().to_string(),
                attachment: b.attachment,
                class_size: b.class_size,
                mult_f: b.mult_f,
                mult_g: b.mult_g,
            })
            .collect(),
        adjacency: res.adjacency.clone(),
    }
}

pub fn import(doc: &ResolutionDoc) -> Result<ResolutionData> {
    let n = doc.components;
    if doc.proximity.len() != n
        || doc.k.len() != n
        || doc.n_f.len() != n
        || doc.n_g.len() != n
        || doc.dicritical.len() != n
    {
        return Err(Error::domain("resolution document has inconsistent lengths"));
    }
    let mut components = Vec::with_capacity(n);
    for i in 0..n {
        for &j in &doc.proximity[i] {
            if j >= i {
                return Err(Error::domain(format!(
                    "component {i} proximate to a later or equal component {j}"
                )));
            }
        }
        if doc.proximity[i].len() > 2 {
            return Err(Error::domain(format!(
                "component {i} proximate to more than two points"
            )));
        }
        // validate the canonical recursion k = 1 + sum of proximate k's
        let expect_k = 1 + doc.proximity[i].iter().map(|&j| doc.k[j]).sum::<i64>();
        if doc.k[i] != expect_k {
            return Err(Error::domain(format!(
                "canonical value k[{i}] = {} violates k = P^-1 1 (expected {expect_k})",
                doc.k[i]
            )));
        }
        components.push(Component {
            proximate_to: doc.proximity[i].clone(),
            k: doc.k[i],
            n_f: doc.n_f[i],
            n_g: doc.n_g[i],
            chart: None,
            point_chart: None,
            point_axes: [None, None],
            reason: BlowReason::Curve,
        });
    }
    let mut affine = Vec::with_capacity(doc.affine_branches.len());
    for b in &doc.affine_branches {
        if let Some(a) = b.attachment {
            if a >= n {
                return Err(Error::domain("affine branch attached out of range"));
            }
        }
        affine.push(AffineBranch {
            attachment: b.attachment,
            class_size: b.class_size,
            mult_f: b.mult_f,
            mult_g: b.mult_g,
            point_chart: None,
            point_axes: [None, None],
        });
    }
    for &(a, b) in &doc.adjacency {
        if a >= n || b >= n {
            return Err(Error::domain("adjacency pair out of range"));
        }
    }
    Ok(ResolutionData {
        components,
        affine,
        adjacency: doc.adjacency.clone(),
        dicritical: doc.dicritical.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::resolution::log_resolution;

    #[test]
    fn export_import_roundtrip() {
        let res = log_resolution(
            &parse_poly("y^2-x^3").unwrap(),
            &parse_poly("1").unwrap(),
        )
        .unwrap();
        let doc = export(&res);
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let back: ResolutionDoc = serde_json::from_str(&json).unwrap();
        let res2 = import(&back).unwrap();
        assert_eq!(res2.n_f_vector(), res.n_f_vector());
        assert_eq!(res2.n_g_vector(), res.n_g_vector());
        assert_eq!(res2.k_vector(), res.k_vector());
        assert_eq!(res2.dicritical, res.dicritical);
        assert_eq!(res2.adjacency, res.adjacency);
        assert_eq!(res2.affine.len(), res.affine.len());
    }

    #[test]
    fn import_rejects_bad_k() {
        let res = log_resolution(
            &parse_poly("y^2-x^3").unwrap(),
            &parse_poly("1").unwrap(),
        )
        .unwrap();
        let mut doc = export(&res);
        doc.k[2] = 5;
        assert!(import(&doc).is_err());
    }
}
