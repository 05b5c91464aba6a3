//! Projective subschemes of P^3: irrelevant-ideal saturation, curve
//! invariants, the pure 1-dimensional part (equidimensional hull) computed as
//! the annihilator of Ext^2(R/I, R), residual lengths, graded dimensions of
//! the dualizing module, and low-degree truncation subschemes.

use crate::error::{Error, Result};
use crate::groebner::hilbert::{hilbert_data, HilbertData};
use crate::groebner::module::{syzygies, ModElem};
use crate::groebner::resolution::{free_resolution, Resolution};
use crate::groebner::Ideal;
use crate::linalg::span_rank;
use crate::monomial::monomials_of_degree;
use crate::poly::Poly;
use crate::rat::Rat;
use num_traits::Zero;

/// A subscheme of P^3 presented by its saturated homogeneous ideal, with
/// Hilbert invariants attached.
#[derive(Debug, Clone)]
pub struct ProjScheme {
    pub ideal: Ideal,
    pub hilbert: HilbertData,
}

impl ProjScheme {
    pub fn dim(&self) -> i32 {
        self.hilbert.dim
    }

    pub fn degree(&self) -> i64 {
        if self.dim() >= 0 {
            self.hilbert.degree
        } else {
            0
        }
    }

    /// Arithmetic genus 1 - χ(O); equals 1 for the empty scheme.
    pub fn pa(&self) -> i64 {
        self.hilbert.pa()
    }

    pub fn length(&self) -> Option<i64> {
        if self.dim() == 0 {
            Some(self.hilbert.genus_or_length)
        } else {
            None
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dim() < 0
    }

    pub fn contains_point(&self, pt: &[Rat; 4]) -> Result<bool> {
        for g in self.ideal.gens() {
            if !g.eval(pt).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Saturates a homogeneous ideal with respect to (x,y,z,w) and packages the
/// resulting scheme. The unit ideal is returned as the (flagged) empty scheme.
pub fn saturate_irrelevant(ideal: &Ideal) -> Result<ProjScheme> {
    if !ideal.is_homogeneous() {
        return Err(Error::invalid("saturate_irrelevant: non-homogeneous ideal"));
    }
    let sat = if ideal.is_zero_ideal() {
        Ideal::zero()
    } else {
        ideal.saturation_irrelevant()?
    };
    let sat = if sat.is_unit()? { Ideal::unit() } else { sat };
    let hilbert = hilbert_data(&sat)?;
    Ok(ProjScheme { ideal: sat, hilbert })
}

/// (dimension, degree, genus-or-length). Errors on dim >= 2: a distribution's
/// singular scheme upstream was not primitive.
pub fn curve_invariants(s: &ProjScheme) -> Result<(i32, i64, i64)> {
    if s.dim() >= 2 {
        return Err(Error::invalid(format!(
            "scheme has dimension {}, expected a curve or points",
            s.dim()
        )));
    }
    let gl = match s.dim() {
        1 => s.pa(),
        0 => s.hilbert.genus_or_length,
        _ => 0,
    };
    Ok((s.dim(), s.degree(), gl))
}

/// Graded presentation of Ext^2(R/I, R): the kernel K = ker(d3^T) inside
/// F_2^* together with the image of d2^T. Twisting by -4 identifies it with
/// the dualizing module of the curve part.
#[derive(Debug, Clone)]
pub struct DualizingModule {
    /// degree b_k of the k-th generator of F_2 (so F_2^* = ⊕ R(b_k))
    dual_shifts: Vec<i64>,
    kernel_gens: Vec<ModElem>,
    image_gens: Vec<ModElem>,
}

impl DualizingModule {
    fn zero() -> Self {
        DualizingModule {
            dual_shifts: Vec::new(),
            kernel_gens: Vec::new(),
            image_gens: Vec::new(),
        }
    }

    /// Q-dimension of the degree-q graded piece of Ext^2(R/I, R).
    fn ext2_piece_dim(&self, q: i64) -> usize {
        if self.dual_shifts.is_empty() {
            return 0;
        }
        let k_dim = self.piece_rank(&self.kernel_gens, q);
        let im_dim = self.piece_rank(&self.image_gens, q);
        k_dim - im_dim
    }

    fn piece_rank(&self, gens: &[ModElem], q: i64) -> usize {
        // coordinates of the degree-q piece of F_2^*: position k contributes
        // the monomials of degree q + b_k
        let mut offsets = Vec::with_capacity(self.dual_shifts.len());
        let mut total = 0usize;
        let mut bases: Vec<Vec<crate::monomial::Monomial>> = Vec::new();
        for b in &self.dual_shifts {
            let d = q + b;
            let monos = if d < 0 {
                Vec::new()
            } else {
                monomials_of_degree(d as u32)
            };
            offsets.push(total);
            total += monos.len();
            bases.push(monos);
        }
        if total == 0 {
            return 0;
        }
        let mut rows = Vec::new();
        for g in gens {
            // degree of g as an element of F_2^* (components have degree
            // deg + (-b_k) ... i.e. elem degree = deg(comps[k]) - b_k)
            let shifts: Vec<i64> = self.dual_shifts.iter().map(|b| -b).collect();
            let Some(gdeg) = g.degree(&shifts) else { continue };
            if gdeg > q {
                continue;
            }
            let mdeg = (q - gdeg) as u32;
            for m in monomials_of_degree(mdeg) {
                let mut row = vec![Rat::zero(); total];
                for (k, comp) in g.comps.iter().enumerate() {
                    let scaled = comp.mul_term(&m, &crate::rat::rat_int(1));
                    for (mm, c) in scaled.terms() {
                        let idx = bases[k]
                            .iter()
                            .position(|bm| bm == mm)
                            .expect("monomial in degree basis");
                        row[offsets[k] + idx] = c.clone();
                    }
                }
                rows.push(row);
            }
        }
        span_rank(rows)
    }
}

/// h^0(ω_C(p)) for the Cohen-Macaulay curve C: the degree-p graded piece of
/// Ext^2(R/I, R(-4)).
pub fn dualizing_degree_dims(w: &DualizingModule, p: i64) -> usize {
    w.ext2_piece_dim(p - 4)
}

/// The pure 1-dimensional part of a scheme of dimension <= 1, together with
/// the dualizing module of the curve. A 0-dimensional or empty scheme yields
/// the empty curve (unit ideal).
pub fn equidimensional_hull(s: &ProjScheme) -> Result<(ProjScheme, DualizingModule)> {
    if s.dim() >= 2 {
        return Err(Error::invalid(format!(
            "equidimensional_hull: scheme has dimension {}",
            s.dim()
        )));
    }
    if s.is_empty() {
        return Ok((unit_scheme()?, DualizingModule::zero()));
    }
    let res = free_resolution(&s.ideal, 5)?;
    let w = dualizing_from_resolution(&res)?;
    if w.kernel_gens.is_empty() {
        return Ok((unit_scheme()?, w));
    }
    // ann(Ext^2) = ∩_s (im : κ_s) over a minimal set of kernel generators;
    // quotients already containing the running intersection are skipped
    let rank = w.dual_shifts.len();
    let image_gb = crate::groebner::module::module_gb(&w.image_gens, rank)?;
    let mut ann: Option<Ideal> = None;
    for kappa in &w.kernel_gens {
        if let Some(a) = &ann {
            let mut covered = true;
            for g in a.gens() {
                let scaled = ModElem {
                    comps: kappa.comps.iter().map(|c| c.mul(g)).collect(),
                };
                if !image_gb.contains(&scaled)? {
                    covered = false;
                    break;
                }
            }
            if covered {
                continue;
            }
        }
        let q = submodule_quotient(&w.image_gens, kappa, rank)?;
        ann = Some(match ann {
            None => q,
            Some(a) => a.intersection(&q)?,
        });
    }
    let ann = ann.unwrap();
    let hull = saturate_irrelevant(&ann)?;
    if !hull.ideal.contains_ideal(&s.ideal)? {
        return Err(Error::inconsistent(
            "equidimensional hull does not contain the input ideal",
        ));
    }
    Ok((hull, w))
}

fn unit_scheme() -> Result<ProjScheme> {
    let ideal = Ideal::unit();
    let hilbert = hilbert_data(&ideal)?;
    Ok(ProjScheme { ideal, hilbert })
}

/// Builds K = ker(d3^T) and im(d2^T) inside F_2^* from the minimal resolution.
fn dualizing_from_resolution(res: &Resolution) -> Result<DualizingModule> {
    if res.steps.len() < 2 {
        // no F_2: Ext^2 = 0
        return Ok(DualizingModule::zero());
    }
    let d2 = &res.steps[1]; // F_2 -> F_1
    let r1 = res.steps[0].rank();
    let r2 = d2.rank();
    let dual_shifts = d2.shifts.clone();
    // im(d2^T): for each basis vector of F_1^*, the corresponding row of d2
    let mut image_gens = Vec::with_capacity(r1);
    for i in 0..r1 {
        let comps: Vec<Poly> = (0..r2).map(|k| d2.matrix[k].comps[i].clone()).collect();
        let e = ModElem { comps };
        if !e.is_zero() {
            image_gens.push(e);
        }
    }
    let kernel_gens = if res.steps.len() < 3 {
        // d3 = 0: the kernel is all of F_2^*
        (0..r2)
            .map(|k| {
                let mut e = ModElem::zero(r2);
                e.comps[k] = Poly::one();
                e
            })
            .collect()
    } else {
        let d3 = &res.steps[2]; // F_3 -> F_2
        let r3 = d3.rank();
        // ker(d3^T) = syzygies of the rows of d3
        let rows: Vec<ModElem> = (0..r2)
            .map(|j| ModElem {
                comps: (0..r3).map(|k| d3.matrix[k].comps[j].clone()).collect(),
            })
            .collect();
        let raw = syzygies(&rows, r3)?;
        let neg_shifts: Vec<i64> = dual_shifts.iter().map(|b| -b).collect();
        crate::groebner::module::minimal_generators_shifted(raw, r2, &neg_shifts)?
    };
    Ok(DualizingModule {
        dual_shifts,
        kernel_gens,
        image_gens,
    })
}

/// (N : v) = {f : f·v ∈ N} for a submodule N ⊆ R^rank, via syzygies of
/// [v | N-generators]: first components of the relations.
fn submodule_quotient(n_gens: &[ModElem], v: &ModElem, rank: usize) -> Result<Ideal> {
    if v.is_zero() {
        return Ok(Ideal::unit());
    }
    let mut all = vec![v.clone()];
    all.extend_from_slice(n_gens);
    let syz = syzygies(&all, rank)?;
    let gens: Vec<Poly> = syz
        .into_iter()
        .map(|s| s.comps[0].clone())
        .filter(|f| !f.is_zero())
        .collect();
    Ideal::new(gens).simplified()
}

/// length(U) for 0 → U → O_Z → O_C → 0: the constant HP(R/I_Z) − HP(R/I_C).
/// A non-constant difference signals C ≠ hull(Z).
pub fn residual_length(z: &ProjScheme, c: &ProjScheme) -> Result<i64> {
    let diff: Vec<Rat> = {
        let a = &z.hilbert.hp;
        let b = &c.hilbert.hp;
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| {
                let av = a.get(i).cloned().unwrap_or_else(Rat::zero);
                let bv = b.get(i).cloned().unwrap_or_else(Rat::zero);
                av - bv
            })
            .collect()
    };
    if diff.iter().skip(1).any(|c| !c.is_zero()) {
        return Err(Error::inconsistent(
            "residual_length: Hilbert polynomial difference is not constant",
        ));
    }
    let len = diff[0].clone();
    use num_traits::One;
    if !len.denom().is_one() {
        return Err(Error::inconsistent("residual_length: non-integer length"));
    }
    let v = i64::try_from(len.numer().clone()).map_err(|_| Error::inconsistent("length overflow"))?;
    if v < 0 {
        return Err(Error::inconsistent("residual_length: negative length"));
    }
    Ok(v)
}

/// The subscheme cut out by the elements of I_C of degree <= d+1 (saturated).
pub fn truncated_subscheme(c: &ProjScheme, d: u32) -> Result<ProjScheme> {
    let bound = d + 1;
    let mut gens = Vec::new();
    for g in c.ideal.gens() {
        let Some(gd) = g.homogeneous_degree() else { continue };
        if gd > bound {
            continue;
        }
        for t in 0..=(bound - gd) {
            for m in monomials_of_degree(t) {
                gens.push(g.mul_term(&m, &crate::rat::rat_int(1)));
            }
        }
    }
    // the generators of the saturated ideal may not expose every low-degree
    // element; take the graded pieces of the cached basis instead when needed
    let basis_gens: Vec<Poly> = c
        .ideal
        .gb()?
        .basis
        .iter()
        .filter(|g| g.homogeneous_degree().map(|gd| gd <= bound).unwrap_or(false))
        .cloned()
        .collect();
    gens.extend(basis_gens);
    saturate_irrelevant(&Ideal::new(gens))
}

/// Ideal of a rational point (a:b:c:d): the 2x2 minors of the coordinate row
/// against the point.
pub fn point_ideal(pt: &[Rat; 4]) -> Ideal {
    let mut gens = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let m = Poly::var(i)
                .scale(&pt[j])
                .sub(&Poly::var(j).scale(&pt[i]));
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    Ideal::new(gens)
}

pub fn point_from_ints(coords: [i64; 4]) -> [Rat; 4] {
    [
        crate::rat::rat_int(coords[0]),
        crate::rat::rat_int(coords[1]),
        crate::rat::rat_int(coords[2]),
        crate::rat::rat_int(coords[3]),
    ]
}

/// Residual ideal (I_Z : I_C): the 0-dimensional part of Z away from C. Used
/// for point-membership checks on the residual scheme.
pub fn residual_ideal(z: &ProjScheme, c: &ProjScheme) -> Result<Ideal> {
    z.ideal.quotient(&c.ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(gens.iter().map(|s| parse_poly(s).unwrap()).collect())
    }

    fn twisted_cubic() -> Ideal {
        ideal(&["y^2 - xz", "yz - xw", "z^2 - yw"])
    }

    #[test]
    fn saturate_line() {
        let s = saturate_irrelevant(&ideal(&["x", "y"])).unwrap();
        assert_eq!((s.dim(), s.degree(), s.pa()), (1, 1, 0));
    }

    #[test]
    fn saturate_flags_dim_two() {
        // (x^2, xy) keeps its embedded line and defines a surface
        let s = saturate_irrelevant(&ideal(&["x^2", "xy"])).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(curve_invariants(&s).is_err());
    }

    #[test]
    fn unit_ideal_is_flagged_empty() {
        let s = saturate_irrelevant(&ideal(&["x", "y", "z", "w", "x - y"])).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn hull_of_pure_curve_is_itself() {
        let s = saturate_irrelevant(&twisted_cubic()).unwrap();
        let (hull, _) = equidimensional_hull(&s).unwrap();
        assert!(hull.ideal.equals(&s.ideal).unwrap());
        let (hull2, _) = equidimensional_hull(&hull).unwrap();
        assert!(hull2.ideal.equals(&hull.ideal).unwrap());
    }

    #[test]
    fn hull_strips_isolated_point() {
        let pt = point_ideal(&point_from_ints([1, 1, 0, 0]));
        let union = twisted_cubic().intersection(&pt).unwrap();
        let z = saturate_irrelevant(&union).unwrap();
        assert_eq!(z.dim(), 1);
        let (hull, _) = equidimensional_hull(&z).unwrap();
        assert!(hull.ideal.equals(&saturate_irrelevant(&twisted_cubic()).unwrap().ideal).unwrap());
        assert_eq!(residual_length(&z, &hull).unwrap(), 1);
        // the residual ideal vanishes at the point
        let resid = residual_ideal(&z, &hull).unwrap();
        let p = point_from_ints([1, 1, 0, 0]);
        for g in resid.gens() {
            assert!(g.eval(&p).is_zero());
        }
    }

    #[test]
    fn hull_of_points_is_empty_curve() {
        let pt = point_ideal(&point_from_ints([1, 0, 0, 1]));
        let s = saturate_irrelevant(&pt).unwrap();
        assert_eq!(s.dim(), 0);
        let (hull, _) = equidimensional_hull(&s).unwrap();
        assert!(hull.is_empty());
        assert_eq!(residual_length(&s, &hull).unwrap(), 1);
    }

    #[test]
    fn residual_zero_for_pure() {
        let s = saturate_irrelevant(&twisted_cubic()).unwrap();
        assert_eq!(residual_length(&s, &s).unwrap(), 0);
    }

    #[test]
    fn dualizing_dims_of_line_and_conic() {
        let line = saturate_irrelevant(&ideal(&["x", "y"])).unwrap();
        let (_, w) = equidimensional_hull(&line).unwrap();
        assert_eq!(dualizing_degree_dims(&w, 1), 0); // ω_L = O(-2)
        assert_eq!(dualizing_degree_dims(&w, 2), 1);
        assert_eq!(dualizing_degree_dims(&w, 3), 2);

        let conic = saturate_irrelevant(&ideal(&["w", "xz - y^2"])).unwrap();
        let (_, wc) = equidimensional_hull(&conic).unwrap();
        assert_eq!(dualizing_degree_dims(&wc, 1), 1); // ω_C = O_C(-1)
        assert_eq!(dualizing_degree_dims(&wc, 0), 0);
    }

    #[test]
    fn dualizing_dims_of_elliptic_quartic() {
        // complete intersection of two quadrics: ω_C = O_C, h^0(ω_C) = 1
        let c = saturate_irrelevant(&ideal(&["xw - yz", "x^2 - y^2 + z^2 - w^2"])).unwrap();
        assert_eq!((c.dim(), c.degree(), c.pa()), (1, 4, 1));
        let (hull, w) = equidimensional_hull(&c).unwrap();
        assert!(hull.ideal.equals(&c.ideal).unwrap());
        assert_eq!(dualizing_degree_dims(&w, 0), 1);
    }

    #[test]
    fn double_line_genus_minus_two_invariants() {
        let c = saturate_irrelevant(&ideal(&["x^2", "xy", "y^2", "x*(z^2 - w^2) - yzw"])).unwrap();
        assert_eq!((c.dim(), c.degree(), c.pa()), (1, 2, -2));
    }

    #[test]
    fn truncation_twisted_cubic_unchanged() {
        let c = saturate_irrelevant(&twisted_cubic()).unwrap();
        let t = truncated_subscheme(&c, 2).unwrap();
        assert!(t.ideal.equals(&c.ideal).unwrap());
    }

    #[test]
    fn truncation_of_genus_minus_three_double_line() {
        // generators x^2, xy, y^2, xz^3 + yw^3; the quartic falls away at d=2
        let c = saturate_irrelevant(&ideal(&["x^2", "xy", "y^2", "xz^3 + yw^3"])).unwrap();
        assert_eq!((c.dim(), c.degree(), c.pa()), (1, 2, -3));
        let t = truncated_subscheme(&c, 2).unwrap();
        // the second infinitesimal neighborhood (x,y)^2: degree 3
        assert!(t.ideal.equals(&ideal(&["x^2", "xy", "y^2"])).unwrap());
        assert_eq!((t.dim(), t.degree()), (1, 3));
    }

    #[test]
    fn truncation_forces_codimension_one_for_plane_cubic_union_line() {
        // I_C = (h, f)(h1, h2): degree <= 3 part is (h h1, h h2), which cuts
        // out the plane {h = 0} plus the line
        let h = parse_poly("w").unwrap();
        let f = parse_poly("x^3 + y^3 + z^3").unwrap();
        let i1 = Ideal::new(vec![h.clone(), f]);
        let i2 = ideal(&["x", "y"]);
        let prod = i1.product(&i2);
        let c = saturate_irrelevant(&prod).unwrap();
        let t = truncated_subscheme(&c, 2).unwrap();
        assert_eq!(t.dim(), 2);
    }
}
