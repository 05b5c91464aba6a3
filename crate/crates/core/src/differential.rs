//! Twisted differential forms and vector fields on P^3: descent checks,
//! singular ideals, contraction, and the exterior calculus behind the
//! integrability test ω ∧ dω = 0.

use crate::error::{Error, Result};
use crate::groebner::module::{module_gb, ModElem};
use crate::groebner::{multivariate_gcd, Ideal};
use crate::monomial::NVARS;
use crate::poly::{radial_pairing, Poly};

/// A twisted 1-form Σ A_i dx_i with homogeneous coefficients of common degree
/// d+1 and zero radial contraction; defines a degree-d distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm {
    coeffs: [Poly; NVARS],
    degree: u32,
}

impl OneForm {
    /// Validation is eager: every downstream formula assumes descent.
    pub fn new(coeffs: [Poly; NVARS]) -> Result<Self> {
        let mut deg: Option<u32> = None;
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree().ok_or_else(|| {
                Error::invalid(format!("coefficient A{i} is not homogeneous"))
            })?;
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                Some(e) => {
                    return Err(Error::invalid(format!(
                        "coefficient degrees differ: {e} vs {d}"
                    )))
                }
            }
        }
        let Some(cdeg) = deg else {
            return Err(Error::invalid("zero 1-form"));
        };
        if cdeg == 0 {
            return Err(Error::invalid("constant coefficients cannot descend"));
        }
        let radial = radial_pairing(&coeffs);
        if !radial.is_zero() {
            return Err(Error::invalid(format!(
                "radial contraction is nonzero: {}",
                radial.render()
            )));
        }
        Ok(OneForm {
            coeffs,
            degree: cdeg - 1,
        })
    }

    pub fn coeffs(&self) -> &[Poly; NVARS] {
        &self.coeffs
    }

    /// Degree d of the distribution: coefficients live in degree d+1.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The unsaturated coefficient ideal (A0, ..., A3).
    pub fn singular_ideal(&self) -> Ideal {
        Ideal::new(self.coeffs.to_vec())
    }

    pub fn scale(&self, c: &crate::rat::Rat) -> Result<OneForm> {
        OneForm::new([
            self.coeffs[0].scale(c),
            self.coeffs[1].scale(c),
            self.coeffs[2].scale(c),
            self.coeffs[3].scale(c),
        ])
    }

    pub fn add(&self, other: &OneForm) -> Result<OneForm> {
        OneForm::new([
            self.coeffs[0].add(&other.coeffs[0]),
            self.coeffs[1].add(&other.coeffs[1]),
            self.coeffs[2].add(&other.coeffs[2]),
            self.coeffs[3].add(&other.coeffs[3]),
        ])
    }

    /// Rescales so the coefficients have coprime integer entries; polynomial
    /// common factors are untouched (see `primitive_part` for those).
    pub fn integer_primitive(&self) -> OneForm {
        let refs: Vec<&crate::rat::Rat> = self
            .coeffs
            .iter()
            .flat_map(|c| c.terms().iter().map(|(_, r)| r))
            .collect();
        let ct = crate::rat::content(&refs);
        if crate::rat::is_one(&ct) {
            return self.clone();
        }
        let inv = ct.recip();
        OneForm {
            coeffs: [
                self.coeffs[0].scale(&inv),
                self.coeffs[1].scale(&inv),
                self.coeffs[2].scale(&inv),
                self.coeffs[3].scale(&inv),
            ],
            degree: self.degree,
        }
    }

    pub fn render(&self) -> String {
        let names = ["dx", "dy", "dz", "dw"];
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| format!("({})*{}", c.render(), n))
            .collect();
        parts.join(" + ")
    }
}

/// Σ A_i x_i of a candidate coefficient quadruple; zero certifies descent to
/// a 1-form on P^3.
pub fn radial_contraction(coeffs: &[Poly; NVARS]) -> Result<Poly> {
    let mut deg: Option<u32> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        let d = c
            .homogeneous_degree()
            .ok_or_else(|| Error::invalid("non-homogeneous coefficient"))?;
        match deg {
            None => deg = Some(d),
            Some(e) if e == d => {}
            _ => return Err(Error::invalid("unequal coefficient degrees")),
        }
    }
    Ok(radial_pairing(coeffs))
}

/// Divides the coefficients by their gcd; returns the primitive form and the
/// extracted common factor.
pub fn primitive_part(coeffs: &[Poly; NVARS]) -> Result<(OneForm, Poly)> {
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid("zero form"));
    }
    let g = multivariate_gcd(&coeffs.to_vec())?;
    let reduced: Vec<Poly> = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                Poly::zero()
            } else {
                c.div_exact(&g).expect("gcd divides every coefficient")
            }
        })
        .collect();
    let form = OneForm::new([
        reduced[0].clone(),
        reduced[1].clone(),
        reduced[2].clone(),
        reduced[3].clone(),
    ])?;
    Ok((form, g))
}

/// Whether the coefficients already have unit gcd.
pub fn is_primitive(form: &OneForm) -> Result<bool> {
    let g = multivariate_gcd(&form.coeffs.to_vec())?;
    Ok(g.num_terms() == 1 && g.terms()[0].0.is_one())
}

/// A polynomial vector field Σ F_i ∂/∂x_i with homogeneous components of a
/// common degree, stored by a canonical representative modulo multiples of
/// the radial field.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    comps: [Poly; NVARS],
    comp_degree: u32,
}

impl VectorField {
    pub fn new(comps: [Poly; NVARS]) -> Result<Self> {
        let mut deg: Option<u32> = None;
        for c in comps.iter().filter(|c| !c.is_zero()) {
            let d = c
                .homogeneous_degree()
                .ok_or_else(|| Error::invalid("non-homogeneous component"))?;
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return Err(Error::invalid("unequal component degrees")),
            }
        }
        let Some(cdeg) = deg else {
            return Err(Error::invalid("zero vector field"));
        };
        let canonical = canonical_mod_radial(&comps, cdeg)?;
        if canonical.iter().all(|c| c.is_zero()) {
            return Err(Error::invalid(
                "vector field is a multiple of the radial field",
            ));
        }
        Ok(VectorField {
            comps: canonical,
            comp_degree: cdeg,
        })
    }

    /// Constant field ∂/∂x_i.
    pub fn coordinate(i: usize) -> Self {
        let mut comps = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
        comps[i] = Poly::one();
        VectorField {
            comps,
            comp_degree: 0,
        }
    }

    pub fn comps(&self) -> &[Poly; NVARS] {
        &self.comps
    }

    /// Component degree k; the field is a section of TP^3(k-1).
    pub fn comp_degree(&self) -> u32 {
        self.comp_degree
    }

    pub fn radial() -> [Poly; NVARS] {
        [Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3)]
    }
}

/// Reduce a component quadruple modulo the submodule generated by the radial
/// field. Degree-1 fields get the traceless matrix representative.
fn canonical_mod_radial(comps: &[Poly; NVARS], cdeg: u32) -> Result<[Poly; NVARS]> {
    if cdeg == 0 {
        return Ok(comps.clone());
    }
    if cdeg == 1 {
        // subtract (tr/4) * radial
        let mut tr = crate::rat::Rat::from_integer(0.into());
        for (i, c) in comps.iter().enumerate() {
            for (m, coef) in c.terms() {
                if *m == crate::monomial::Monomial::var(i) {
                    tr += coef;
                }
            }
        }
        let quarter = tr / crate::rat::rat_int(4);
        let mut out = comps.clone();
        for (i, c) in out.iter_mut().enumerate() {
            *c = c.sub(&Poly::var(i).scale(&quarter));
        }
        return Ok(out);
    }
    let radial = ModElem {
        comps: VectorField::radial().to_vec(),
    };
    let gb = module_gb(&[radial], NVARS)?;
    let nf = gb.normal_form(&ModElem {
        comps: comps.to_vec(),
    })?;
    Ok([
        nf.comps[0].clone(),
        nf.comps[1].clone(),
        nf.comps[2].clone(),
        nf.comps[3].clone(),
    ])
}

/// Σ A_i F_i.
pub fn contract(form: &OneForm, field: &[Poly; NVARS]) -> Poly {
    let mut acc = Poly::zero();
    for i in 0..NVARS {
        acc = acc.add(&form.coeffs[i].mul(&field[i]));
    }
    acc
}

/// A 3-form against the basis dx∧dy∧dz, dx∧dy∧dw, dx∧dz∧dw, dy∧dz∧dw.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeForm {
    pub comps: [Poly; 4],
}

impl ThreeForm {
    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }
}

/// ω ∧ dω together with the integrability verdict (zero ⟺ the distribution
/// is a foliation).
pub fn integrability(form: &OneForm) -> (ThreeForm, bool) {
    // dω = Σ_{i<j} c_ij dx_i ∧ dx_j with c_ij = ∂A_j/∂x_i − ∂A_i/∂x_j
    let a = &form.coeffs;
    let mut c = vec![vec![Poly::zero(); NVARS]; NVARS];
    for i in 0..NVARS {
        for j in (i + 1)..NVARS {
            c[i][j] = a[j].partial_derivative(i).sub(&a[i].partial_derivative(j));
        }
    }
    let triple = |p: usize, q: usize, r: usize| -> Poly {
        // coefficient of dx_p ∧ dx_q ∧ dx_r (p < q < r) in ω ∧ dω
        a[p].mul(&c[q][r])
            .sub(&a[q].mul(&c[p][r]))
            .add(&a[r].mul(&c[p][q]))
    };
    let comps = [
        triple(0, 1, 2),
        triple(0, 1, 3),
        triple(0, 2, 3),
        triple(1, 2, 3),
    ];
    let tf = ThreeForm { comps };
    let flat = tf.is_zero();
    (tf, flat)
}

/// The 1-form ι_R ι_u ι_v (dx∧dy∧dz∧dw): coefficients are the signed 3x3
/// minors of the rows (x, u, v). It annihilates the radial field and both
/// inputs, so it is the form cut out by the span of u and v.
pub fn form_annihilating(u: &[Poly; NVARS], v: &[Poly; NVARS]) -> Result<OneForm> {
    let x = VectorField::radial();
    let det3 = |cols: [usize; 3]| -> Poly {
        let m = |r: &[Poly; NVARS], c: usize| r[cols[c]].clone();
        let a = m(&x, 0).mul(&m(u, 1).mul(&m(v, 2)).sub(&m(u, 2).mul(&m(v, 1))));
        let b = m(&x, 1).mul(&m(u, 0).mul(&m(v, 2)).sub(&m(u, 2).mul(&m(v, 0))));
        let c_ = m(&x, 2).mul(&m(u, 0).mul(&m(v, 1)).sub(&m(u, 1).mul(&m(v, 0))));
        a.sub(&b).add(&c_)
    };
    let coeffs = [
        det3([1, 2, 3]),
        det3([0, 2, 3]).neg(),
        det3([0, 1, 3]),
        det3([0, 1, 2]).neg(),
    ];
    OneForm::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_form_expr, parse_poly};
    use crate::rng::SeededRng;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn form(s: &str) -> OneForm {
        OneForm::new(parse_form_expr(s).unwrap()).unwrap()
    }

    pub(crate) fn jouanolou() -> OneForm {
        form("(x^2 y - w^3)dx + (y^2 z - x^3)dy + (z^2 w - y^3)dz + (w^2 x - z^3)dw")
    }

    #[test]
    fn radial_contraction_examples() {
        // antisymmetric pencil form
        let c = parse_form_expr("x dy - y dx").unwrap();
        assert!(radial_contraction(&c).unwrap().is_zero());
        // the quartic-coefficient example with isolated singularities
        let j = parse_form_expr("(x^2 y - w^3)dx + (y^2 z - x^3)dy + (z^2 w - y^3)dz + (w^2 x - z^3)dw").unwrap();
        assert!(radial_contraction(&j).unwrap().is_zero());
        // x dy alone does not descend
        let bad = parse_form_expr("x dy").unwrap();
        assert_eq!(radial_contraction(&bad).unwrap(), p("xy"));
        assert!(OneForm::new(bad).is_err());
    }

    #[test]
    fn singular_ideal_of_pencil() {
        let f = form("x dy - y dx");
        assert!(f.singular_ideal().equals(&Ideal::new(vec![p("x"), p("y")])).unwrap());
    }

    #[test]
    fn primitive_part_strips_common_factor() {
        let scaled = parse_form_expr("x^2 dy - xy dx").unwrap();
        let (prim, g) = primitive_part(&scaled).unwrap();
        assert_eq!(g, p("x"));
        assert_eq!(prim, form("x dy - y dx"));
        // pencil of quadrics with an extra factor
        let q1 = p("xw - yz");
        let q2 = p("x^2 + y^2 + z^2 + w^2");
        let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
        for i in 0..4 {
            let a = q2.mul(&q1.partial_derivative(i)).sub(&q1.mul(&q2.partial_derivative(i)));
            coeffs[i] = a.mul(&q1);
        }
        let (prim2, g2) = primitive_part(&coeffs).unwrap();
        assert_eq!(g2.monic(crate::monomial::TermOrder::Grevlex), q1.monic(crate::monomial::TermOrder::Grevlex));
        assert!(is_primitive(&prim2).unwrap());
    }

    #[test]
    fn contraction_values() {
        let f = form("x dy - y dx");
        assert!(contract(&f, &VectorField::radial()).is_zero());
        let ddx = [Poly::one(), Poly::zero(), Poly::zero(), Poly::zero()];
        assert_eq!(contract(&f, &ddx), p("-y"));
    }

    #[test]
    fn pencil_forms_are_integrable() {
        // Q2 dQ1 - Q1 dQ2 for equal-degree Q's
        let q1 = p("xw - yz");
        let q2 = p("x^2 + y^2 + z^2 + w^2");
        let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
        for i in 0..4 {
            coeffs[i] = q2.mul(&q1.partial_derivative(i)).sub(&q1.mul(&q2.partial_derivative(i)));
        }
        let f = OneForm::new(coeffs).unwrap();
        let (_, flat) = integrability(&f);
        assert!(flat);
        let (_, flat2) = integrability(&form("x dy - y dx"));
        assert!(flat2);
    }

    #[test]
    fn random_pencils_integrable() {
        let mut rng = SeededRng::new(2024);
        for round in 0..12 {
            let d = 1 + (round % 3) as u32;
            let f = random_homog(&mut rng, d);
            let g = random_homog(&mut rng, d);
            let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
            for i in 0..4 {
                coeffs[i] = f.mul(&g.partial_derivative(i)).sub(&g.mul(&f.partial_derivative(i)));
            }
            if coeffs.iter().all(|c| c.is_zero()) {
                continue;
            }
            let form = OneForm::new(coeffs).unwrap();
            let (_, flat) = integrability(&form);
            assert!(flat, "pencil form of degree {d} not integrable");
        }
    }

    fn random_homog(rng: &mut SeededRng, d: u32) -> Poly {
        let monos = crate::monomial::monomials_of_degree(d);
        let mut acc = Poly::zero();
        for m in monos {
            let c = rng.int_in(-2, 2);
            if c != 0 {
                acc = acc.add(&Poly::monomial(m, crate::rat::rat_int(c)));
            }
        }
        if acc.is_zero() {
            Poly::monomial(crate::monomial::monomials_of_degree(d)[0], crate::rat::rat_int(1))
        } else {
            acc
        }
    }

    #[test]
    fn jouanolou_not_integrable() {
        let (_, flat) = integrability(&jouanolou());
        assert!(!flat);
    }

    #[test]
    fn vector_field_canonicalization() {
        // identity + e01 normalizes to e01
        let f = VectorField::new([p("x + y"), p("y"), p("z"), p("w")]).unwrap();
        assert_eq!(f.comps()[0], p("y"));
        assert!(f.comps()[1].is_zero());
        // diag(2,2,0,0) -> diag(1,1,-1,-1)
        let g = VectorField::new([p("2x"), p("2y"), Poly::zero(), Poly::zero()]).unwrap();
        assert_eq!(g.comps()[0], p("x"));
        assert_eq!(g.comps()[3], p("-w"));
        // radial multiples are rejected
        assert!(VectorField::new([p("x"), p("y"), p("z"), p("w")]).is_err());
    }

    #[test]
    fn annihilating_form_of_two_fields() {
        let u = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::one()];
        let v = [p("y^2"), p("z^2"), p("x^2"), Poly::zero()];
        let f = form_annihilating(&u, &v).unwrap();
        assert!(contract(&f, &u).is_zero());
        assert!(contract(&f, &v).is_zero());
        assert!(contract(&f, &VectorField::radial()).is_zero());
        assert!(f.coeffs()[3].is_zero());
    }
}
