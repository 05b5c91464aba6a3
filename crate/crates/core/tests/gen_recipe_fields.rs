//! One-shot generator for the foliation-by-curves recipe fixtures: solves for
//! the cubic/quadratic fields whose conormal sheaves drive the (5,14), (4,10)
//! and (4,8) constructions, certifies the conormal type by annihilator
//! dimensions, and writes the fields to fixtures/*.vf.

use codim1::differential::OneForm;
use codim1::foliation1d::{annihilator_form_space, field_space_annihilating, genuine_field};
use codim1::parse::parse_poly;
use codim1::Poly;
use std::path::PathBuf;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn pencil_form(p: &str, q: &str) -> OneForm {
    // (deg q)·q·dp − (deg p)·p·dq, radial-zero for any homogeneous p, q
    let p = parse_poly(p).unwrap();
    let q = parse_poly(q).unwrap();
    let dp = p.homogeneous_degree().unwrap() as i64;
    let dq = q.homogeneous_degree().unwrap() as i64;
    let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
    for (i, c) in coeffs.iter_mut().enumerate() {
        *c = q
            .mul(&p.partial_derivative(i))
            .scale(&codim1::rat::rat_int(dq))
            .sub(&p.mul(&q.partial_derivative(i)).scale(&codim1::rat::rat_int(dp)));
    }
    OneForm::new(coeffs).unwrap()
}

fn write_vf(name: &str, comment: &str, field: &codim1::differential::VectorField) {
    let mut out = String::new();
    for line in comment.lines() {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    for (i, c) in field.comps().iter().enumerate() {
        out.push_str(&format!("F{}: {}\n", i, c.render()));
    }
    std::fs::write(fixtures_dir().join(name), out).unwrap();
}

#[test]
#[ignore]
fn generate_recipe_fields() {
    // (5,14): conormal O(-3) ⊕ O(-3), degree-3 field annihilating two
    // quadratic-coefficient pencil forms
    let alpha = pencil_form("x", "y^2 + zw");
    let beta = pencil_form("w", "x^2 + yz + z^2");
    let sols = field_space_annihilating(&[&alpha, &beta], 3).unwrap();
    println!("(5,14): solution space dim {}", sols.len());
    let nu = genuine_field(&sols).unwrap();
    for (l, expect) in [(3i64, 2usize), (4, 8)] {
        let dim = annihilator_form_space(&nu, l).unwrap().len();
        println!("(5,14): annihilator at l={l}: {dim} (expect {expect})");
        assert_eq!(dim, expect, "conormal type certificate failed");
    }
    write_vf(
        "rec-5-14.vf",
        "Degree-3 field with split conormal O(-3) ⊕ O(-3): the common kernel of\n\
         two quadratic-coefficient pencil forms. Twist-4 sections of the conormal\n\
         cut out lines; the induced distribution realizes (c2, c3) = (5, 14).",
        &nu,
    );

    // (4,10): conormal O(-2) ⊕ O(-3), degree-2 field annihilating one
    // linear-coefficient form and one quadratic-coefficient form
    let alpha = OneForm::new([
        parse_poly("-y").unwrap(),
        parse_poly("x").unwrap(),
        parse_poly("-w").unwrap(),
        parse_poly("z").unwrap(),
    ])
    .unwrap();
    let beta = pencil_form("y", "z^2 + xw");
    let sols = field_space_annihilating(&[&alpha, &beta], 2).unwrap();
    println!("(4,10): solution space dim {}", sols.len());
    let nu = genuine_field(&sols).unwrap();
    for (l, expect) in [(2i64, 1usize), (3, 5), (4, 14)] {
        let dim = annihilator_form_space(&nu, l).unwrap().len();
        println!("(4,10): annihilator at l={l}: {dim} (expect {expect})");
        assert_eq!(dim, expect, "conormal type certificate failed");
    }
    write_vf(
        "rec-4-10.vf",
        "Degree-2 field with conormal O(-2) ⊕ O(-3): the common kernel of a\n\
         linear-coefficient form and a quadratic-coefficient pencil form.\n\
         Twist-4 sections cut out conics; the induced distribution realizes\n\
         (c2, c3) = (4, 10).",
        &nu,
    );

    // (4,8): a degree-3 field whose conormal is the null-correlation twist
    // N(-3). A map N(-3) → Ω¹ is presented by a 4x4 matrix B of quadrics
    // whose rows are radial-zero 1-forms and whose columns kill the Euler
    // relation; restricting B to the kernel of the contact form and solving
    // for the cubic field annihilated by the image yields the field.
    let nu = build_null_correlation_field(11);
    for (l, expect) in [(2i64, 0usize), (3, 0), (4, 5)] {
        let dim = annihilator_form_space(&nu, l).unwrap().len();
        println!("(4,8): annihilator at l={l}: {dim} (expect {expect})");
        assert_eq!(dim, expect, "conormal type certificate failed");
    }
    write_vf(
        "rec-4-8.vf",
        "Degree-3 field with null-correlation conormal N(-3), built from a\n\
         generic presentation matrix restricted to the contact kernel. Twist-4\n\
         sections of the conormal cut out pairs of skew lines; the induced\n\
         distribution realizes (c2, c3) = (4, 8).",
        &nu,
    );
}

/// Solves for a generic 4x4 quadric matrix B with radial-zero rows and
/// Euler-zero columns, pushes the six contact-kernel generators through it,
/// and returns the cubic field annihilated by the resulting 1-forms.
fn build_null_correlation_field(seed: u64) -> codim1::differential::VectorField {
    use codim1::linalg::Mat;
    use codim1::monomial::{monomials_of_degree, Monomial};
    use codim1::rat::{rat_int, Rat};
    use num_traits::Zero;

    let quad = monomials_of_degree(2);
    let cols = 16 * quad.len(); // B_{ij} quadrics
    let cubic = monomials_of_degree(3);
    let cindex: std::collections::HashMap<Monomial, usize> =
        cubic.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    // conditions: for each row i, Σ_j B_ij x_j = 0; for each column j,
    // Σ_i x_i B_ij = 0 — each a cubic identity
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let col_of = |i: usize, j: usize, q: usize| (i * 4 + j) * quad.len() + q;
    for i in 0..4 {
        let mut block = vec![vec![Rat::zero(); cols]; cubic.len()];
        for j in 0..4 {
            for (qi, m) in quad.iter().enumerate() {
                let prod = m.mul(&Monomial::var(j));
                block[cindex[&prod]][col_of(i, j, qi)] += rat_int(1);
            }
        }
        rows.extend(block);
    }
    for j in 0..4 {
        let mut block = vec![vec![Rat::zero(); cols]; cubic.len()];
        for i in 0..4 {
            for (qi, m) in quad.iter().enumerate() {
                let prod = m.mul(&Monomial::var(i));
                block[cindex[&prod]][col_of(i, j, qi)] += rat_int(1);
            }
        }
        rows.extend(block);
    }
    let kernel = Mat::from_rows(rows).kernel_basis();
    println!("(4,8): presentation matrices form a {}-dim space", kernel.len());
    let mut rng = codim1::rng::SeededRng::new(seed);
    let mut combo = vec![Rat::zero(); cols];
    for v in &kernel {
        let c = rat_int(rng.int_in(-2, 2));
        if c.is_zero() {
            continue;
        }
        for (k, entry) in v.iter().enumerate() {
            combo[k] += entry * &c;
        }
    }
    // assemble B
    let mut b = vec![vec![Poly::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut p = Poly::zero();
            for (qi, m) in quad.iter().enumerate() {
                let c = &combo[col_of(i, j, qi)];
                if !c.is_zero() {
                    p = p.add(&Poly::monomial(*m, c.clone()));
                }
            }
            b[i][j] = p;
        }
    }
    // contact-kernel generators s_ab with Σ_i (s_ab)_i (ω0)_i = 0
    let x = |i: usize| Poly::var(i);
    let zero = Poly::zero();
    let kernel_gens: [[Poly; 4]; 6] = [
        [x(0), x(1), zero.clone(), zero.clone()],
        [x(3).neg(), zero.clone(), x(1), zero.clone()],
        [x(2), zero.clone(), zero.clone(), x(1)],
        [zero.clone(), x(3).neg(), x(0).neg(), zero.clone()],
        [zero.clone(), x(2), zero.clone(), x(0).neg()],
        [zero.clone(), zero.clone(), x(2), x(3)],
    ];
    // γ_ab = Σ_i (s_ab)_i β_i: 1-forms with cubic coefficients
    let mut gammas = Vec::new();
    for s in &kernel_gens {
        let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
        for i in 0..4 {
            if s[i].is_zero() {
                continue;
            }
            for (jj, coeff) in coeffs.iter_mut().enumerate() {
                *coeff = coeff.add(&s[i].mul(&b[i][jj]));
            }
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        gammas.push(OneForm::new(coeffs).expect("γ descends"));
    }
    let refs: Vec<&OneForm> = gammas.iter().collect();
    let sols = field_space_annihilating(&refs, 3).unwrap();
    println!("(4,8): field solution space dim {}", sols.len());
    genuine_field(&sols).unwrap()
}
