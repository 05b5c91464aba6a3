//! Hilbert functions and polynomials. HF is counted combinatorially from the
//! lead-term ideal of the reduced basis; HP is interpolated from the tail of
//! HF and accepted only after it reproduces a verification window of further
//! values.

use super::Ideal;
use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::rat::{rat_int, Rat};
use num_traits::Zero;

#[derive(Debug, Clone)]
pub struct HilbertData {
    /// HF(R/I)(t) for t = 0..hf.len()
    pub hf: Vec<i64>,
    /// HP coefficients, constant term first; degree <= 3
    pub hp: Vec<Rat>,
    /// dimension of Proj(R/I): -1 empty, 0 points, 1 curve, 2 surface, 3 all
    pub dim: i32,
    pub degree: i64,
    /// arithmetic genus for dim 1; length for dim 0; 0 otherwise
    pub genus_or_length: i64,
}

impl HilbertData {
    /// χ(O_X) = HP(0); the arithmetic genus convention p_a = 1 - χ extends
    /// uniformly to the empty scheme (p_a = 1).
    pub fn pa(&self) -> i64 {
        let chi = eval_hp(&self.hp, 0);
        let one = rat_int(1) - chi;
        rat_to_int(&one)
    }

    pub fn hp_at(&self, t: i64) -> Rat {
        eval_hp(&self.hp, t)
    }
}

fn eval_hp(hp: &[Rat], t: i64) -> Rat {
    let mut acc = Rat::zero();
    let tv = rat_int(t);
    for c in hp.iter().rev() {
        acc = acc * &tv + c;
    }
    acc
}

fn rat_to_int(r: &Rat) -> i64 {
    use num_traits::One;
    assert!(r.denom().is_one(), "expected integer value, got {r}");
    let n: num_bigint::BigInt = r.numer().clone();
    i64::try_from(n).expect("value fits i64")
}

/// Number of degree-t monomials not divisible by any of the given leads.
fn standard_monomial_count(leads: &[Monomial], t: u32) -> i64 {
    monomials_of_degree(t)
        .iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count() as i64
}

/// Lagrange interpolation through (ts[i], vs[i]); coefficients low-to-high.
fn interpolate(ts: &[i64], vs: &[i64]) -> Vec<Rat> {
    let n = ts.len();
    let mut coeffs = vec![Rat::zero(); n];
    for i in 0..n {
        // basis polynomial Π_{j≠i} (t - ts[j]) / (ts[i] - ts[j])
        let mut basis = vec![Rat::zero(); n];
        basis[0] = rat_int(1);
        let mut deg = 0usize;
        let mut denom = rat_int(1);
        for j in 0..n {
            if i == j {
                continue;
            }
            denom *= rat_int(ts[i] - ts[j]);
            // multiply basis by (t - ts[j])
            let mut next = vec![Rat::zero(); n];
            for (k, c) in basis.iter().enumerate().take(deg + 1) {
                next[k + 1] += c;
                next[k] -= c * rat_int(ts[j]);
            }
            basis = next;
            deg += 1;
        }
        let scale = rat_int(vs[i]) / denom;
        for k in 0..n {
            coeffs[k] += &basis[k] * &scale;
        }
    }
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

/// Hilbert data of Proj(R/I) for a homogeneous ideal I.
pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::invalid("hilbert_data: non-homogeneous ideal"));
    }
    let leads = if ideal.is_zero_ideal() {
        Vec::new()
    } else {
        ideal.gb()?.lead_monomials()
    };
    let mut bound: u32 = 14;
    const MAX_BOUND: u32 = 48;
    let mut hf: Vec<i64> = (0..=bound).map(|t| standard_monomial_count(&leads, t)).collect();
    loop {
        // fit a cubic through the last 4 values, verify on the 4 before them
        let t_end = hf.len() as i64 - 1;
        let ts: Vec<i64> = (t_end - 3..=t_end).collect();
        let vs: Vec<i64> = ts.iter().map(|&t| hf[t as usize]).collect();
        let hp = interpolate(&ts, &vs);
        let verified = (t_end - 7..t_end - 3)
            .all(|t| eval_hp(&hp, t) == rat_int(hf[t as usize]));
        if verified {
            return finish(hf, hp);
        }
        if bound >= MAX_BOUND {
            return Err(Error::Resource(
                "hilbert_data: interpolation window exhausted".into(),
            ));
        }
        let new_bound = (bound + 8).min(MAX_BOUND);
        for t in bound + 1..=new_bound {
            hf.push(standard_monomial_count(&leads, t));
        }
        bound = new_bound;
    }
}

fn finish(hf: Vec<i64>, hp: Vec<Rat>) -> Result<HilbertData> {
    let is_zero_poly = hp.iter().all(|c| c.is_zero());
    if is_zero_poly {
        return Ok(HilbertData {
            hf,
            hp: vec![Rat::zero()],
            dim: -1,
            degree: 0,
            genus_or_length: 0,
        });
    }
    let deg = hp.len() - 1;
    let dim = deg as i32;
    let factorial = [1i64, 1, 2, 6];
    let lead = hp.last().unwrap() * rat_int(factorial[deg]);
    let degree = rat_to_int(&lead);
    let genus_or_length = match dim {
        0 => rat_to_int(&hp[0]),
        1 => 1 - rat_to_int(&hp[0]),
        _ => 0,
    };
    Ok(HilbertData {
        hf,
        hp,
        dim,
        degree,
        genus_or_length,
    })
}

/// Independent Hilbert-function oracle: dim_Q (R/I)_t via a rank computation
/// on the raw generators, bypassing the Gröbner machinery entirely.
pub fn hf_brute(gens: &[crate::poly::Poly], t: u32) -> i64 {
    let total = monomials_of_degree(t).len() as i64;
    total - super::degree_piece_dim(gens, t) as i64
}
