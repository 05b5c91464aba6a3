//! 1-forms singular along a prescribed curve: built from explicit syzygies of
//! its ideal, or as the full linear space of twisted forms of a given degree
//! with coefficients in the ideal.

use crate::differential::{primitive_part, OneForm};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::monomial::{monomials_of_degree, Monomial, NVARS};
use crate::poly::Poly;
use crate::rat::{rat_int, Rat};
use crate::scheme::ProjScheme;
use num_traits::Zero;

/// Generators F_j of a saturated curve ideal together with a homogeneous
/// syzygy (G_j): Σ F_j G_j = 0 with deg F_j + deg G_j constant.
#[derive(Debug, Clone)]
pub struct SyzygyFormInput {
    pub generators: Vec<Poly>,
    pub syzygy: Vec<Poly>,
}

/// ω = Σ_j F_j · (1/deg G_j) · dG_j. The weights make the radial contraction
/// equal Σ F_j G_j = 0 even when the syzygy mixes degrees. Returned primitive.
pub fn form_from_syzygy(input: &SyzygyFormInput) -> Result<(OneForm, Poly)> {
    if input.generators.len() != input.syzygy.len() {
        return Err(Error::invalid("generator/syzygy length mismatch"));
    }
    let mut total: Option<u32> = None;
    let mut contraction = Poly::zero();
    let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
    for (f, g) in input.generators.iter().zip(&input.syzygy) {
        if g.is_zero() {
            continue;
        }
        let fd = f
            .homogeneous_degree()
            .ok_or_else(|| Error::invalid("non-homogeneous generator"))?;
        let gd = g
            .homogeneous_degree()
            .ok_or_else(|| Error::invalid("non-homogeneous syzygy entry"))?;
        if gd == 0 {
            return Err(Error::invalid("constant syzygy entry"));
        }
        match total {
            None => total = Some(fd + gd),
            Some(t) if t == fd + gd => {}
            Some(t) => {
                return Err(Error::invalid(format!(
                    "inhomogeneous syzygy: {} + {} != {}",
                    fd, gd, t
                )))
            }
        }
        contraction = contraction.add(&f.mul(g));
        let weight = Rat::from_integer(1.into()) / rat_int(gd as i64);
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = c.add(&f.mul(&g.partial_derivative(i)).scale(&weight));
        }
    }
    if !contraction.is_zero() {
        return Err(Error::invalid("not a syzygy: Σ F_j G_j ≠ 0"));
    }
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid("the syzygy produces the zero form"));
    }
    primitive_part(&coeffs)
}

/// The candidate space for degree-d distributions singular along C, plus the
/// diagnostics the construction needs.
#[derive(Debug, Clone)]
pub struct CandidateForms {
    pub basis: Vec<OneForm>,
    /// smallest m <= d with C contained in a degree-m hypersurface, if any —
    /// the hypothesis of the syzygy correspondence fails there
    pub violation: Option<u32>,
    /// whole-space common factor; a non-unit means no member has a saturated
    /// singular locus, so the effective dimension is zero
    pub common_factor: Poly,
}

impl CandidateForms {
    /// Dimension of the space of forms with codimension->=2 singular locus:
    /// the raw dimension unless every member shares a polynomial factor.
    pub fn primitive_dim(&self) -> usize {
        if self.common_factor.num_terms() == 1 && self.common_factor.terms()[0].0.is_one() {
            self.basis.len()
        } else {
            0
        }
    }
}

/// Basis of {ω of distribution degree d : every A_i lies in (I_C)_{d+1},
/// Σ A_i x_i = 0}, by exact linear algebra over a basis of the graded piece.
pub fn candidate_forms(c: &ProjScheme, d: u32) -> Result<CandidateForms> {
    let mut violation = None;
    for m in 1..=d {
        if crate::distribution::hypersurface_containment(c, m) > 0 {
            violation = Some(m);
            break;
        }
    }
    let piece = graded_piece_basis(&c.ideal, d + 1)?;
    if piece.is_empty() {
        return Ok(CandidateForms {
            basis: Vec::new(),
            violation,
            common_factor: Poly::one(),
        });
    }
    let target = monomials_of_degree(d + 2);
    let tindex: std::collections::HashMap<Monomial, usize> =
        target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let cols = 4 * piece.len();
    let mut mat = Mat::zero(target.len(), cols);
    for (pi, p) in piece.iter().enumerate() {
        for i in 0..NVARS {
            let col = i * piece.len() + pi;
            let prod = p.mul(&Poly::var(i));
            for (mm, cf) in prod.terms() {
                let prev = mat.get(tindex[mm], col).clone();
                mat.set(tindex[mm], col, prev + cf.clone());
            }
        }
    }
    let kernel = mat.kernel_basis();
    let mut basis = Vec::new();
    for v in kernel {
        let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
        for (pi, p) in piece.iter().enumerate() {
            for (i, c) in coeffs.iter_mut().enumerate() {
                let cf = &v[i * piece.len() + pi];
                if !cf.is_zero() {
                    *c = c.add(&p.scale(cf));
                }
            }
        }
        basis.push(OneForm::new(coeffs)?);
    }
    let common_factor = if basis.is_empty() {
        Poly::one()
    } else {
        let all: Vec<Poly> = basis
            .iter()
            .flat_map(|f| f.coeffs().iter().cloned())
            .filter(|c| !c.is_zero())
            .collect();
        crate::groebner::multivariate_gcd(&all)?
    };
    Ok(CandidateForms {
        basis,
        violation,
        common_factor,
    })
}

/// Q-basis of the degree-t graded piece of an ideal, as polynomials.
fn graded_piece_basis(ideal: &crate::groebner::Ideal, t: u32) -> Result<Vec<Poly>> {
    let monos = monomials_of_degree(t);
    let index: std::collections::HashMap<Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.gens() {
        let Some(gd) = g.homogeneous_degree() else { continue };
        if gd > t {
            continue;
        }
        for m in monomials_of_degree(t - gd) {
            let prod = g.mul_term(&m, &rat_int(1));
            let mut row = vec![Rat::zero(); monos.len()];
            for (mm, c) in prod.terms() {
                row[index[mm]] += c;
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let mut mat = Mat::from_rows(rows);
    let pivots = mat.rref();
    let mut out = Vec::new();
    for (r, _) in pivots.iter().enumerate() {
        let mut p = Poly::zero();
        for (ci, m) in monos.iter().enumerate() {
            let c = mat.get(r, ci);
            if !c.is_zero() {
                p = p.add(&Poly::monomial(*m, c.clone()));
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Number of independent syzygies of the ideal generators in which every
/// entry is linear — the other side of the candidate-space correspondence.
pub fn linear_first_syzygy_count(gens: &[Poly]) -> Result<usize> {
    let syz = crate::groebner::module::syzygy_module(gens)?;
    let shifts = syz.shifts.clone();
    let min = crate::groebner::module::minimal_generators_shifted(
        syz.generators,
        syz.ambient_rank,
        &shifts,
    )?;
    Ok(min
        .iter()
        .filter(|s| {
            s.comps
                .iter()
                .all(|c| c.is_zero() || c.homogeneous_degree() == Some(1))
        })
        .count())
}
