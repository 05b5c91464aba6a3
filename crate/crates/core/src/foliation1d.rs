//! Foliations by curves on P^3: singular schemes of vector fields through
//! the 2x2-minor ideal, the classification of degree-1 fields by the
//! eigenstructure their schemes reveal, annihilator spaces of twisted
//! 1-forms, and the codimension-one distributions a (field, section) pair
//! induces, with predicted Chern classes.

use crate::differential::{contract, primitive_part, OneForm, VectorField};
use crate::distribution::{analyze, DistributionReport};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::monomial::{monomials_of_degree, Monomial, NVARS};
use crate::poly::Poly;
use crate::rat::{rat_int, Rat};
use crate::scheme::{equidimensional_hull, residual_length, saturate_irrelevant, ProjScheme};
use num_traits::Zero;

/// A linear vector field by its traceless 4x4 matrix: F_i = Σ_j a_ij x_j.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearField {
    pub matrix: [[Rat; NVARS]; NVARS],
}

/// A - (tr A / 4)·Id; rejects scalar matrices (the zero field on P^3).
pub fn traceless_normalize(a: &[[Rat; NVARS]; NVARS]) -> Result<LinearField> {
    let mut tr = Rat::zero();
    for (i, row) in a.iter().enumerate() {
        tr += &row[i];
    }
    let quarter = tr / rat_int(4);
    let mut m = a.clone();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= &quarter;
    }
    if m.iter().flatten().all(|v| v.is_zero()) {
        return Err(Error::invalid(
            "scalar matrix: the field is a multiple of the radial field",
        ));
    }
    Ok(LinearField { matrix: m })
}

impl LinearField {
    pub fn field(&self) -> Result<VectorField> {
        let comps: Vec<Poly> = self
            .matrix
            .iter()
            .map(|row| {
                let mut f = Poly::zero();
                for (j, c) in row.iter().enumerate() {
                    f = f.add(&Poly::var(j).scale(c));
                }
                f
            })
            .collect();
        VectorField::new([
            comps[0].clone(),
            comps[1].clone(),
            comps[2].clone(),
            comps[3].clone(),
        ])
    }
}

/// The scheme of zeros of a vector field: the saturation of the ideal of the
/// six 2x2 minors of the field against the coordinate row.
pub fn vf_singular_scheme(field: &VectorField) -> Result<ProjScheme> {
    let f = field.comps();
    let mut minors = Vec::with_capacity(6);
    for i in 0..NVARS {
        for j in (i + 1)..NVARS {
            let m = f[i].mul(&Poly::var(j)).sub(&f[j].mul(&Poly::var(i)));
            if !m.is_zero() {
                minors.push(m);
            }
        }
    }
    saturate_irrelevant(&crate::groebner::Ideal::new(minors))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChernTriple {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearCase {
    /// only 1-dimensional eigenspaces: four points counted with multiplicity
    Generic,
    /// one 2-dimensional eigenspace: a line plus a length-2 residue
    OneDoubleEigenspace,
    /// two 2-dimensional eigenspaces (or one Jordan pair): two skew lines or
    /// a double line of genus -1
    TwoDoubleEigenspaces,
}

#[derive(Debug, Clone)]
pub struct LinearClassification {
    pub case: LinearCase,
    pub conormal_chern: ChernTriple,
    pub scheme: ProjScheme,
    pub curve_part: ProjScheme,
    pub residual: i64,
}

/// Classifies a degree-1 foliation by curves from the computed singular
/// scheme (never from eigenvalues, which may be irrational).
pub fn classify_linear(field: &LinearField) -> Result<LinearClassification> {
    let nu = field.field()?;
    let scheme = vf_singular_scheme(&nu)?;
    if scheme.dim() >= 2 {
        return Err(Error::invalid(
            "the field vanishes along a surface: the foliation is not saturated \
             (a 3-dimensional eigenspace)",
        ));
    }
    let (curve_part, _w) = equidimensional_hull(&scheme)?;
    let residual = residual_length(&scheme, &curve_part)?;
    let (case, c2, c3) = if scheme.dim() == 0 {
        if scheme.length() != Some(4) {
            return Err(Error::inconsistent(format!(
                "a generic linear field vanishes on a length-4 scheme, got {:?}",
                scheme.length()
            )));
        }
        (LinearCase::Generic, 6, 4)
    } else {
        match curve_part.degree() {
            1 => (LinearCase::OneDoubleEigenspace, 5, 2),
            2 => (LinearCase::TwoDoubleEigenspaces, 4, 0),
            d => {
                return Err(Error::inconsistent(format!(
                    "linear field with a degree-{d} curve of zeros"
                )))
            }
        }
    };
    Ok(LinearClassification {
        case,
        conormal_chern: ChernTriple { c1: -4, c2, c3 },
        scheme,
        curve_part,
        residual,
    })
}

/// Basis of the space of twisted 1-forms with coefficients of degree l-1
/// annihilated by both the radial field and the given field: the sections
/// H^0 of the conormal sheaf twisted by l, by exact linear algebra.
pub fn annihilator_form_space(field: &VectorField, l: i64) -> Result<Vec<OneForm>> {
    if l < 1 {
        return Err(Error::invalid("annihilator_form_space needs l >= 1"));
    }
    let cdeg = l - 1;
    if cdeg < 1 {
        return Ok(Vec::new()); // constants cannot satisfy the radial condition
    }
    let source = monomials_of_degree(cdeg as u32);
    let cols = 4 * source.len();
    // two linear conditions: Σ A_i x_i = 0 (degree cdeg+1) and Σ A_i F_i = 0
    let radial_target = monomials_of_degree(cdeg as u32 + 1);
    let k = field.comp_degree() as i64;
    let field_target = monomials_of_degree((cdeg + k) as u32);
    let rows = radial_target.len() + field_target.len();
    let mut mat = Mat::zero(rows, cols);
    let rindex: std::collections::HashMap<Monomial, usize> =
        radial_target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let findex: std::collections::HashMap<Monomial, usize> =
        field_target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    for (ci, m) in source.iter().enumerate() {
        for i in 0..NVARS {
            let col = i * source.len() + ci;
            let radial_prod = m.mul(&Monomial::var(i));
            let r = rindex[&radial_prod];
            let prev = mat.get(r, col).clone();
            mat.set(r, col, prev + rat_int(1));
            let fp = field.comps()[i].mul_term(m, &rat_int(1));
            for (mm, c) in fp.terms() {
                let r = radial_target.len() + findex[mm];
                let prev = mat.get(r, col).clone();
                mat.set(r, col, prev + c.clone());
            }
        }
    }
    let kernel = mat.kernel_basis();
    let mut out = Vec::new();
    for v in kernel {
        let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
        for (ci, m) in source.iter().enumerate() {
            for (i, coeff) in coeffs.iter_mut().enumerate() {
                let c = &v[i * source.len() + ci];
                if !c.is_zero() {
                    *coeff = coeff.add(&Poly::monomial(*m, c.clone()));
                }
            }
        }
        out.push(OneForm::new(coeffs)?);
    }
    Ok(out)
}

/// The Chern triple the construction predicts for the distribution induced
/// by a degree-k foliation and a section of its conormal twisted by l.
pub fn predicted_chern(k: i64, l: i64, c2n: i64, c3n: i64) -> ChernTriple {
    ChernTriple {
        c1: 4 - l,
        c2: l * (k - 1) + 6 - c2n,
        c3: c3n + (1 - k - l) * c2n + (k * k + 2 * k + 3) * l - 4,
    }
}

/// Conormal Chern classes of the foliation by curves defined by a field,
/// read off the invariants of its singular scheme: c2(N*) = k^2 + 2k + 3 - δ
/// and c3 from the Chern-class identity of the defining sequence, with the
/// empty-curve convention pa = 1.
pub fn conormal_chern(field: &VectorField) -> Result<(ChernTriple, ProjScheme)> {
    let k = field.comp_degree() as i64;
    let w = vf_singular_scheme(field)?;
    if w.dim() >= 2 {
        return Err(Error::invalid("field vanishes along a surface"));
    }
    let (y, _) = equidimensional_hull(&w)?;
    let rho = residual_length(&w, &y)?;
    let delta = y.degree();
    let pa_eff = if y.is_empty() { 1 } else { y.pa() };
    let c2n = k * k + 2 * k + 3 - delta;
    let c3n = -4 - (k - 1) * c2n + (2 * k - 2) * delta - 2 * pa_eff + 2 + 2 * rho;
    Ok((
        ChernTriple {
            c1: -(3 + k),
            c2: c2n,
            c3: c3n,
        },
        w,
    ))
}

#[derive(Debug, Clone)]
pub struct InducedDistribution {
    pub report: DistributionReport,
    pub predicted: ChernTriple,
    pub conormal: ChernTriple,
    /// agreement certifies the cokernel hypothesis of the construction;
    /// disagreement is reported, not an error
    pub agrees: bool,
}

/// Analyzes the 1-form σ as a codimension-one distribution and compares the
/// result against the Chern classes the (field, σ, l) construction predicts.
pub fn induce_distribution(
    field: &VectorField,
    sigma: &OneForm,
    l: i64,
) -> Result<InducedDistribution> {
    if !contract(sigma, field.comps()).is_zero() {
        return Err(Error::invalid(
            "σ is not annihilated by the field: not a conormal section",
        ));
    }
    if sigma.degree() as i64 + 2 != l {
        return Err(Error::invalid(format!(
            "σ has coefficient degree {}, expected l - 1 = {}",
            sigma.degree() + 1,
            l - 1
        )));
    }
    let k = field.comp_degree() as i64;
    let (conormal, _w) = conormal_chern(field)?;
    let predicted = predicted_chern(k, l, conormal.c2, conormal.c3);
    let (prim, _gcd) = primitive_part(sigma.coeffs())?;
    let report = analyze(&prim)?;
    let agrees =
        (report.c1, report.c2, report.c3) == (predicted.c1, predicted.c2, predicted.c3);
    Ok(InducedDistribution {
        report,
        predicted,
        conormal,
        agrees,
    })
}

/// Basis of the space of coefficient quadruples of degree k contracting to
/// zero against every given form. Radial multiples P·(x,y,z,w) always lie in
/// this space; the genuine tangent fields are the rest. Dual to
/// `annihilator_form_space`, and the tool that recovers a foliation from a
/// presentation of its conormal.
pub fn field_space_annihilating(forms: &[&OneForm], k: u32) -> Result<Vec<[Poly; NVARS]>> {
    let source = monomials_of_degree(k);
    let cols = 4 * source.len();
    let mut rows_data: Vec<Vec<Rat>> = Vec::new();
    for form in forms {
        let target = monomials_of_degree(k + form.degree() + 1);
        let tindex: std::collections::HashMap<Monomial, usize> =
            target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut block = vec![vec![Rat::zero(); cols]; target.len()];
        for (ci, m) in source.iter().enumerate() {
            for i in 0..NVARS {
                let col = i * source.len() + ci;
                let prod = form.coeffs()[i].mul_term(m, &rat_int(1));
                for (mm, c) in prod.terms() {
                    block[tindex[mm]][col] += c;
                }
            }
        }
        rows_data.extend(block);
    }
    let kernel = Mat::from_rows(rows_data).kernel_basis();
    let mut out = Vec::new();
    for v in kernel {
        let mut comps = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
        for (ci, m) in source.iter().enumerate() {
            for (i, comp) in comps.iter_mut().enumerate() {
                let c = &v[i * source.len() + ci];
                if !c.is_zero() {
                    *comp = comp.add(&Poly::monomial(*m, c.clone()));
                }
            }
        }
        out.push(comps);
    }
    Ok(out)
}

/// First member of the solution space that is not a polynomial multiple of
/// the radial field, canonicalized.
pub fn genuine_field(solutions: &[[Poly; NVARS]]) -> Result<VectorField> {
    for comps in solutions {
        if let Ok(field) = VectorField::new(comps.clone()) {
            return Ok(field);
        }
    }
    Err(Error::invalid(
        "every solution is a multiple of the radial field",
    ))
}

/// Seeded small-integer combination of a basis of forms; used to pick a
/// generic conormal section reproducibly. Basis elements are taken primitive
/// and the coordinates stay in {-1, 0, 1} to keep the downstream Gröbner
/// arithmetic small.
pub fn seeded_combination(basis: &[OneForm], seed: u64) -> Result<OneForm> {
    if basis.is_empty() {
        return Err(Error::invalid("empty form basis"));
    }
    let primitive: Vec<OneForm> = basis.iter().map(|f| f.integer_primitive()).collect();
    let mut rng = crate::rng::SeededRng::new(seed);
    loop {
        let mut acc: Option<OneForm> = None;
        for f in &primitive {
            let c = rat_int(rng.int_in(-1, 1));
            if c.is_zero() {
                continue;
            }
            let scaled = f.scale(&c)?;
            acc = Some(match acc {
                None => scaled,
                Some(a) => a.add(&scaled)?,
            });
        }
        if let Some(form) = acc {
            return Ok(form);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn rmat(entries: [[i64; 4]; 4]) -> [[Rat; 4]; 4] {
        entries.map(|row| row.map(rat_int))
    }

    #[test]
    fn traceless_examples() {
        // identity plus e01 normalizes to e01
        let m = traceless_normalize(&rmat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
            .unwrap();
        assert_eq!(m.matrix[0][1], rat_int(1));
        assert!(m.matrix[0][0].is_zero());
        // already traceless: unchanged
        let t = traceless_normalize(&rmat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]))
            .unwrap();
        assert_eq!(t.matrix[0][0], rat_int(1));
        // diag(2,2,0,0) -> diag(1,1,-1,-1)
        let d = traceless_normalize(&rmat([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]))
            .unwrap();
        assert_eq!(d.matrix[2][2], rat_int(-1));
        // scalar matrix rejected
        assert!(traceless_normalize(&rmat([[3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]]))
            .is_err());
    }

    #[test]
    fn jordan_pair_gives_double_line() {
        // A = e01 + e23: the minors cut a double line of genus -1
        let f = traceless_normalize(&rmat([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]))
            .unwrap();
        let c = classify_linear(&f).unwrap();
        assert_eq!(c.case, LinearCase::TwoDoubleEigenspaces);
        assert_eq!(c.conormal_chern, ChernTriple { c1: -4, c2: 4, c3: 0 });
        // computed minor ideal: (y^2, yw, w^2, yz - xw) — the printed source
        // has w^3 in place of w^2, but the minors say w^2
        let expect = crate::groebner::Ideal::new(vec![
            parse_poly("y^2").unwrap(),
            parse_poly("yw").unwrap(),
            parse_poly("w^2").unwrap(),
            parse_poly("yz - xw").unwrap(),
        ]);
        assert!(c.scheme.ideal.equals(&expect).unwrap());
        assert_eq!((c.curve_part.degree(), c.curve_part.pa()), (2, -1));
        assert_eq!(c.residual, 0);
    }

    #[test]
    fn two_eigenplanes_give_skew_lines() {
        let f = traceless_normalize(&rmat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]))
            .unwrap();
        let c = classify_linear(&f).unwrap();
        assert_eq!(c.case, LinearCase::TwoDoubleEigenspaces);
        let skew = crate::groebner::Ideal::new(vec![
            parse_poly("x").unwrap(),
            parse_poly("y").unwrap(),
        ])
        .intersection(&crate::groebner::Ideal::new(vec![
            parse_poly("z").unwrap(),
            parse_poly("w").unwrap(),
        ]))
        .unwrap();
        assert!(c.scheme.ideal.equals(&skew).unwrap());
        assert_eq!((c.curve_part.degree(), c.curve_part.pa()), (2, -1));
    }

    #[test]
    fn generic_diagonal_gives_four_points() {
        let f = traceless_normalize(&rmat([[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, -6]]))
            .unwrap();
        let c = classify_linear(&f).unwrap();
        assert_eq!(c.case, LinearCase::Generic);
        assert_eq!(c.conormal_chern, ChernTriple { c1: -4, c2: 6, c3: 4 });
        assert_eq!(c.scheme.length(), Some(4));
    }

    #[test]
    fn jordan_block_gives_line_plus_double_point() {
        let f = traceless_normalize(&rmat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]))
            .unwrap();
        let c = classify_linear(&f).unwrap();
        assert_eq!(c.case, LinearCase::OneDoubleEigenspace);
        assert_eq!(c.conormal_chern, ChernTriple { c1: -4, c2: 5, c3: 2 });
        assert_eq!(c.curve_part.degree(), 1);
        assert_eq!(c.residual, 2);
    }

    #[test]
    fn plane_eigenspace_rejected() {
        let f = traceless_normalize(&rmat([[3, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]))
            .unwrap();
        assert!(classify_linear(&f).is_err());
    }

    #[test]
    fn singular_scheme_ignores_radial_shifts() {
        // the same field given by two representatives differing by P·radial
        let a = VectorField::new([
            parse_poly("y^2").unwrap(),
            parse_poly("z^2").unwrap(),
            parse_poly("w^2").unwrap(),
            parse_poly("x^2").unwrap(),
        ])
        .unwrap();
        let shifted = VectorField::new([
            parse_poly("y^2 + xz").unwrap(),
            parse_poly("z^2 + yz").unwrap(),
            parse_poly("w^2 + z^2").unwrap(),
            parse_poly("x^2 + zw").unwrap(),
        ])
        .unwrap();
        let sa = vf_singular_scheme(&a).unwrap();
        let sb = vf_singular_scheme(&shifted).unwrap();
        assert!(sa.ideal.equals(&sb.ideal).unwrap());
    }

    #[test]
    fn annihilator_of_constant_field() {
        let nu = VectorField::coordinate(3);
        let basis = annihilator_form_space(&nu, 2).unwrap();
        assert_eq!(basis.len(), 3);
        for f in &basis {
            assert!(contract(f, nu.comps()).is_zero());
        }
        assert!(annihilator_form_space(&nu, 1).unwrap().is_empty());
        assert!(annihilator_form_space(&nu, 0).is_err());
    }

    #[test]
    fn annihilator_of_jordan_pair_at_twist_four() {
        // conormal O(-2) ⊕ O(-2): twenty sections at l = 4
        let f = traceless_normalize(&rmat([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]))
            .unwrap();
        let nu = f.field().unwrap();
        let basis = annihilator_form_space(&nu, 4).unwrap();
        assert_eq!(basis.len(), 20);
    }

    #[test]
    fn predicted_chern_values() {
        assert_eq!(
            predicted_chern(3, 4, 9, 0),
            ChernTriple { c1: 0, c2: 5, c3: 14 }
        );
        assert_eq!(
            predicted_chern(3, 4, 10, 0),
            ChernTriple { c1: 0, c2: 4, c3: 8 }
        );
        assert_eq!(
            predicted_chern(1, 4, 4, 0),
            ChernTriple { c1: 0, c2: 2, c3: 4 }
        );
        assert_eq!(
            predicted_chern(2, 4, 6, 0),
            ChernTriple { c1: 0, c2: 4, c3: 10 }
        );
    }

    #[test]
    fn conormal_of_linear_fields_matches_classification() {
        for (mat, c2, c3) in [
            ([[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, -6]], 6, 4),
            ([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]], 5, 2),
            ([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]], 4, 0),
        ] {
            let f = traceless_normalize(&rmat(mat)).unwrap();
            let (chern, _) = conormal_chern(&f.field().unwrap()).unwrap();
            assert_eq!((chern.c1, chern.c2, chern.c3), (-4, c2, c3));
        }
    }
}
