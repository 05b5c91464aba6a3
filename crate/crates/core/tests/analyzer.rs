//! End-to-end analyzer runs on the stored 1-forms: singular scheme, curve
//! part, Chern classes by both routes, stability, and table row.

use codim1::differential::OneForm;
use codim1::distribution::{analyze, residual_contains_points, Stability};
use codim1::parse::parse_form_file;
use codim1::scheme::point_from_ints;
use std::path::PathBuf;

fn load(name: &str) -> OneForm {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    let content = std::fs::read_to_string(&path).unwrap();
    OneForm::new(parse_form_file(&content).unwrap()).unwrap()
}

struct Expect {
    c2: i64,
    c3: i64,
    deg_c: i64,
    pa_c: Option<i64>,
    stability: Stability,
    quadric_dim: usize,
}

fn check(name: &str, e: Expect, points: &[[i64; 4]]) {
    let form = load(name);
    let r = analyze(&form).unwrap_or_else(|err| panic!("{name}: {err}"));
    assert_eq!(r.degree, 2, "{name}: degree");
    assert_eq!((r.c1, r.c2, r.c3), (0, e.c2, e.c3), "{name}: chern");
    assert_eq!(r.c3, r.c3_crosscheck, "{name}: c3 double computation");
    assert_eq!(r.deg_c, e.deg_c, "{name}: curve degree");
    assert_eq!(r.pa_c, e.pa_c, "{name}: curve genus");
    assert_eq!(r.stability.tag, e.stability, "{name}: stability");
    assert_eq!(r.quadric_dim, e.quadric_dim, "{name}: quadric containment");
    let row = r.table_row.expect("degree-2 report carries a table row");
    assert_eq!((row.c2, row.c3), (e.c2, e.c3), "{name}: table row");
    if !points.is_empty() {
        let pts: Vec<_> = points.iter().map(|p| point_from_ints(*p)).collect();
        assert!(
            residual_contains_points(&r, &pts).unwrap(),
            "{name}: residual scheme must contain the published points"
        );
    }
}

#[test]
fn sec5_rational_quartic() {
    check(
        "sec5-rational-quartic.form",
        Expect {
            c2: 2,
            c3: 2,
            deg_c: 4,
            pa_c: Some(0),
            stability: Stability::Stable,
            quadric_dim: 0,
        },
        &[[1, 0, 0, 1], [1, 1, 0, 2]],
    );
}

#[test]
fn sec5_instanton() {
    check(
        "sec5-instanton.form",
        Expect {
            c2: 2,
            c3: 0,
            deg_c: 4,
            pa_c: Some(-1),
            stability: Stability::Stable,
            quadric_dim: 0,
        },
        &[],
    );
}

#[test]
fn sec5_semistable() {
    let form = load("sec5-semistable.form");
    let r = analyze(&form).unwrap();
    assert_eq!((r.c2, r.c3), (2, 4));
    assert_eq!((r.deg_c, r.pa_c), (4, Some(1)));
    assert_eq!(r.stability.tag, Stability::StrictlySemistable);
    assert_eq!(r.stability.h0_zero, 1);
    assert_eq!(r.stability.h0_minus_one, 0);
    assert_eq!(r.quadric_dim, 0);
}

#[test]
fn sec6_twisted_cubic() {
    check(
        "sec6-twisted-cubic.form",
        Expect {
            c2: 3,
            c3: 6,
            deg_c: 3,
            pa_c: Some(0),
            stability: Stability::Stable,
            quadric_dim: 0,
        },
        &[[0, 1, 0, 0], [0, 0, 1, 0], [1, 1, -1, 1], [3, 0, 1, 0], [1, -7, 5, -7], [9, -31, 24, -33]],
    );
}

#[test]
fn sec6_conic_line() {
    check(
        "sec6-conic-line.form",
        Expect {
            c2: 3,
            c3: 4,
            deg_c: 3,
            pa_c: Some(-1),
            stability: Stability::Stable,
            quadric_dim: 0,
        },
        &[[1, 1, 1, 1], [4, 1, 2, 1], [1, 4, 2, 1], [289, 1225, -595, -3299]],
    );
}

#[test]
fn sec6_three_lines() {
    check(
        "sec6-three-lines.form",
        Expect {
            c2: 3,
            c3: 2,
            deg_c: 3,
            pa_c: Some(-2),
            stability: Stability::Stable,
            quadric_dim: 0,
        },
        &[[1, -1, 1, 1], [1, -2, 15, 5]],
    );
}

#[test]
fn sec7_double_line() {
    check(
        "sec7-double-line.form",
        Expect {
            c2: 4,
            c3: 6,
            deg_c: 2,
            pa_c: Some(-2),
            stability: Stability::Stable,
            quadric_dim: 0,
        },
        &[[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 1], [-1, 1, -1, 1], [38, -19, 14, -4], [9, -27, 17, 13]],
    );
}

#[test]
fn sec9_jouanolou() {
    let form = load("sec9-jouanolou.form");
    let r = analyze(&form).unwrap();
    assert_eq!((r.c2, r.c3), (6, 20));
    assert!(r.curve.is_empty());
    assert_eq!(r.z.dim(), 0);
    assert_eq!(r.z.length(), Some(20));
    assert_eq!(r.residual_length, 20);
    assert_eq!(r.stability.tag, Stability::Stable);
    assert_eq!(r.quadric_dim, 0);
    assert_eq!(r.table_row.unwrap().locus, "empty");
}

#[test]
fn constructed_r13_pencil() {
    let form = load("r13-pencil.form");
    let r = analyze(&form).unwrap();
    assert_eq!((r.c2, r.c3), (3, 8));
    assert_eq!((r.deg_c, r.pa_c), (3, Some(1)));
    assert_eq!(r.stability.tag, Stability::Stable);
    assert_eq!(r.quadric_dim, 0);
    let (_, flat) = codim1::differential::integrability(&form);
    assert!(flat, "pencil foliation must be integrable");
}

#[test]
fn constructed_r22_pencil() {
    let form = load("r22-pencil.form");
    let r = analyze(&form).unwrap();
    assert_eq!((r.c2, r.c3), (2, 4));
    assert_eq!((r.deg_c, r.pa_c), (4, Some(1)));
    assert_eq!(r.stability.tag, Stability::Stable);
    let (_, flat) = codim1::differential::integrability(&form);
    assert!(flat);
}

#[test]
fn constructed_l112_log() {
    let form = load("l112-log.form");
    let r = analyze(&form).unwrap();
    assert_eq!((r.c2, r.c3), (1, 2));
    assert_eq!((r.deg_c, r.pa_c), (5, Some(2)));
    assert_eq!(r.stability.tag, Stability::StrictlySemistable);
    // the curve lies in a quadric but the full singular scheme does not
    assert_eq!(r.quadric_dim, 0);
    assert_eq!(codim1::distribution::hypersurface_containment(&r.curve, 2), 1);
    let (_, flat) = codim1::differential::integrability(&form);
    assert!(flat, "logarithmic forms are integrable");
}

#[test]
fn constructed_l1111_log() {
    let form = load("l1111-log.form");
    let r = analyze(&form).unwrap();
    assert_eq!((r.c2, r.c3), (0, 0));
    assert_eq!((r.deg_c, r.pa_c), (6, Some(3)));
    assert_eq!(r.stability.tag, Stability::StrictlySemistable);
    assert_eq!(r.stability.h0_zero, 2);
    let (_, flat) = codim1::differential::integrability(&form);
    assert!(flat);
}

#[test]
fn constructed_split_s23() {
    let form = load("split-s23.form");
    let r = analyze(&form).unwrap();
    assert_eq!((r.c2, r.c3), (-1, 0));
    assert_eq!((r.deg_c, r.pa_c), (7, Some(5)));
    assert_eq!(r.stability.tag, Stability::Unstable);
    assert_eq!(r.stability.h0_minus_one, 1);
    let (_, flat) = codim1::differential::integrability(&form);
    assert!(!flat, "the chosen quadratic field depends on w");
}
