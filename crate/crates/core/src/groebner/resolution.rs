//! Graded free resolutions by iterated minimal syzygies. Each step stores the
//! generators of the syzygy module of the previous step, so the chain is
//! exact by construction; taking minimal generators at every step yields the
//! minimal resolution and its Betti degrees.

use super::module::{minimal_generators_shifted, syzygies, ModElem};
use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// One step F_k of the resolution. `shifts` are the generator degrees; for
/// k >= 1 `matrix[i]` expresses the i-th generator of F_k in F_{k-1}.
#[derive(Debug, Clone)]
pub struct ResolutionStep {
    pub shifts: Vec<i64>,
    pub matrix: Vec<ModElem>,
}

impl ResolutionStep {
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }
}

/// Minimal graded free resolution 0 <- I <- F_0 <- F_1 <- ... of an ideal.
/// `steps[0].matrix` holds the minimal generators of I as rank-1 elements.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub steps: Vec<ResolutionStep>,
}

impl Resolution {
    pub fn ranks(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.rank()).collect()
    }
}

pub fn free_resolution(ideal: &Ideal, length_bound: usize) -> Result<Resolution> {
    if !ideal.is_homogeneous() {
        return Err(Error::invalid("free_resolution: non-homogeneous ideal"));
    }
    if ideal.is_zero_ideal() {
        return Ok(Resolution { steps: Vec::new() });
    }
    let gens: Vec<ModElem> = ideal
        .gens()
        .iter()
        .map(|g| ModElem {
            comps: vec![g.clone()],
        })
        .collect();
    let min0 = minimal_generators_shifted(gens, 1, &[0])?;
    let shifts0: Vec<i64> = min0
        .iter()
        .map(|e| e.degree(&[0]).expect("homogeneous generator"))
        .collect();
    let mut steps = vec![ResolutionStep {
        shifts: shifts0,
        matrix: min0,
    }];
    loop {
        let prev = steps.last().unwrap();
        let rank = prev.rank();
        let prev_shifts = prev.shifts.clone();
        let syz = syzygies(&prev.matrix, ambient_rank_of(&prev.matrix, rank))?;
        let min = minimal_generators_shifted(syz, rank, &prev_shifts)?;
        if min.is_empty() {
            return Ok(Resolution { steps });
        }
        if steps.len() > length_bound {
            return Err(Error::Resource(
                "free_resolution: length bound exceeded".into(),
            ));
        }
        let shifts: Vec<i64> = min
            .iter()
            .map(|e| {
                e.degree(&steps.last().unwrap().shifts)
                    .expect("homogeneous syzygy")
            })
            .collect();
        steps.push(ResolutionStep {
            shifts,
            matrix: min,
        });
    }
}

fn ambient_rank_of(elems: &[ModElem], fallback: usize) -> usize {
    elems.first().map(|e| e.rank()).unwrap_or(fallback)
}

/// Exactness certificate: composing consecutive matrices gives zero.
pub fn verify_complex(res: &Resolution) -> bool {
    for k in 1..res.steps.len() {
        let prev = &res.steps[k - 1];
        for gen in &res.steps[k].matrix {
            // gen expresses a combination of prev.matrix that must vanish
            let rank = prev
                .matrix
                .first()
                .map(|e| e.rank())
                .unwrap_or(1);
            let mut acc = ModElem::zero(rank);
            for (j, coef) in gen.comps.iter().enumerate() {
                for (i, c) in prev.matrix[j].comps.iter().enumerate() {
                    acc.comps[i] = acc.comps[i].add(&coef.mul(c));
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Betti degrees at each step, sorted: the multiset {-shift} in the
/// conventional O(-d) notation.
pub fn betti_degrees(res: &Resolution) -> Vec<Vec<i64>> {
    res.steps
        .iter()
        .map(|s| {
            let mut d = s.shifts.clone();
            d.sort_unstable();
            d
        })
        .collect()
}

#[allow(dead_code)]
fn unused(_: &Poly) {}
