//! Combinatorics of equivariant Demazure-type resolutions: stabilizer
//! parahorics, the length-additive factorization into longest coset
//! representatives, and the odd unitary example in type C.

use serde_json::{json, Value};

use crate::cosets::Facet;
use crate::root_data::{CartanType, Coweight};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Side, Word};
use crate::{Error, Result};

/// One stage `(P_i, Q_i, w_i)` of a resolutive sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionStep {
    pub parahoric: Facet,
    pub intersection: Facet,
    pub factor: AffineWeylElement,
}

impl AffineWeylGroup {
    /// Simple reflections `s` with `l((s w)^F) <= l(w^F)`.
    pub fn stabilizer_parahoric(&self, w: &AffineWeylElement, f: &Facet) -> Result<Facet> {
        let base = self.length(&self.min_right_rep(w, f));
        let nodes = (0..self.node_count())
            .filter(|&i| self.length(&self.min_right_rep(&self.left_mul_simple(i, w), f)) <= base)
            .collect::<Vec<_>>();
        if nodes.len() == self.node_count() {
            return Err(Error::StabilizerNotProper);
        }
        Ok(Facet::from_set_unchecked(nodes.into_iter().collect()))
    }

    /// Peels off `_P w` for the stabilizer `P` of the current element until
    /// nothing is left; `w` must be minimal in `w W_F`.
    pub fn resolutive_sequence(
        &self,
        w: &AffineWeylElement,
        f: &Facet,
    ) -> Result<Vec<ResolutionStep>> {
        if !w.has_trivial_label() {
            return Err(Error::NontrivialLabel);
        }
        if !self.is_min_rep(w, f, Side::Right) {
            return Err(Error::NotRightMinimal(f.to_vec()));
        }
        let mut parahorics = Vec::new();
        let mut factors = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            let p = self.stabilizer_parahoric(&cur, f)?;
            let (factor, rest) = self.left_decompose(&cur, &p);
            if factor.is_identity() {
                return Err(Error::Invariant(format!(
                    "trivial factor for the stabilizer {p} of a nontrivial element"
                )));
            }
            parahorics.push(p);
            factors.push(factor);
            cur = rest;
        }
        let n = parahorics.len();
        let steps = (0..n)
            .map(|i| {
                let next = if i + 1 < n { &parahorics[i + 1] } else { f };
                ResolutionStep {
                    parahoric: parahorics[i].clone(),
                    intersection: parahorics[i].intersection(next),
                    factor: factors[i].clone(),
                }
            })
            .collect();
        Ok(steps)
    }

    /// Sum of the fiber dimensions `l(longest of (W_P)^Q)`.
    pub fn bott_samelson_dim(&self, steps: &[ResolutionStep]) -> Result<usize> {
        steps
            .iter()
            .map(|s| self.longest_rep_length(&s.parahoric, &s.intersection))
            .sum()
    }

    pub fn resolution_json(&self, steps: &[ResolutionStep]) -> Result<Value> {
        let rendered: Vec<Value> = steps
            .iter()
            .map(|s| {
                json!({
                    "P": s.parahoric.to_vec(),
                    "Q": s.intersection.to_vec(),
                    "factor_length": self.length(&s.factor),
                    "factor_word": self.reduced_word(&s.factor).letters(),
                })
            })
            .collect();
        let total: usize = steps.iter().map(|s| self.length(&s.factor)).sum();
        Ok(json!({
            "steps": rendered,
            "summary": {
                "bott_samelson_dim": self.bott_samelson_dim(steps)?,
                "total_length": total,
            },
        }))
    }
}

/// Word of `w_{p,2}`: the blocks `s_0 s_1 ... s_{i-1}` multiplied with `i`
/// running from `p` down to `1`.
pub fn unitary_w_p2_word(p: usize) -> Word {
    Word((1..=p).rev().flat_map(|i| 0..i).collect())
}

/// The type `C_m` Schubert variety attached to `e^{-mu_p}` in the affine
/// Grassmannian of the special vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryExample {
    pub m: usize,
    pub p: usize,
    pub mu_p: Coweight,
    pub dim: usize,
    pub q_p: Facet,
    /// First factor of `e^{-mu_p} = w_{p,1} * w_{p,2}`.
    pub w_p1: AffineWeylElement,
    pub w_p2: AffineWeylElement,
    pub steps: Vec<ResolutionStep>,
    pub strata_count: usize,
}

impl UnitaryExample {
    pub fn to_json(&self, group: &AffineWeylGroup) -> Value {
        json!({
            "Q_p": self.q_p.to_vec(),
            "dim": self.dim,
            "m": self.m,
            "mu_p": self.mu_p.0,
            "p": self.p,
            "steps": self.steps.len(),
            "strata_count": self.strata_count,
            "w_p1_length": group.length(&self.w_p1),
            "w_p2_length": group.length(&self.w_p2),
            "w_p2_word": group.reduced_word(&self.w_p2).letters(),
        })
    }
}

pub fn unitary_example(m: usize, p: usize) -> Result<(AffineWeylGroup, UnitaryExample)> {
    if m == 0 || p == 0 || p > m {
        return Err(Error::OutOfRange(format!(
            "need 1 <= p <= m, got m = {m}, p = {p}"
        )));
    }
    let g = AffineWeylGroup::build(CartanType::C, m)?;
    let special = Facet::special_vertex(m);
    let mu_p = Coweight((0..m).map(|i| i64::from(i < p)).collect());
    let w = g.from_translation(&-&mu_p)?;
    let (pi, mi) = (p as i64, m as i64);

    let dim = g.special_dim(&-&mu_p)?;
    if dim as i64 != pi * (2 * mi + 1 - pi) {
        return Err(Error::Invariant(format!("dimension {dim} != p(2m+1-p)")));
    }
    let steps = g.resolutive_sequence(&w, &special)?;
    let first = steps
        .first()
        .ok_or_else(|| Error::Invariant("empty resolution of a nontrivial element".into()))?;
    let w_p1 = first.factor.clone();
    let w_p2 = g.multiply(&g.inverse(&w_p1), &w);
    if g.length(&w_p2) != p * (p + 1) / 2 {
        return Err(Error::Invariant(format!(
            "l(w_p2) = {} != p(p+1)/2",
            g.length(&w_p2)
        )));
    }
    let image = g.antidominant_rep(w_p2.translation())?;
    if image != -&mu_p || !g.is_min_rep(&w_p2, &special, Side::Right) {
        return Err(Error::Invariant(
            "w_p2 does not map to the orbit of mu_p".into(),
        ));
    }
    let q_p = Facet::from_set_unchecked((1..=m).filter(|&i| i != p).collect());
    let strata_count = g.strata(&w, &special, &special).len();
    if strata_count != p + 1 {
        return Err(Error::Invariant(format!(
            "{strata_count} strata, expected p + 1"
        )));
    }
    let example = UnitaryExample {
        m,
        p,
        mu_p,
        dim,
        q_p,
        w_p1,
        w_p2,
        steps,
        strata_count,
    };
    Ok((g, example))
}
