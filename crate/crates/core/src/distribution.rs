//! The analyzer: from a twisted 1-form to the full invariant report — degree,
//! singular scheme, curve/residual split, Chern classes computed by two
//! independent routes, stability by section counting, and the degree-2
//! classification row.

use crate::differential::{is_primitive, OneForm};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::monomial::monomials_of_degree;
use crate::rat::Rat;
use crate::scheme::{
    dualizing_degree_dims, equidimensional_hull, residual_length, saturate_irrelevant,
    truncated_subscheme, DualizingModule, ProjScheme,
};
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Unstable,
    StrictlySemistable,
    Stable,
}

impl Stability {
    pub fn as_str(&self) -> &'static str {
        match self {
            Stability::Unstable => "unstable",
            Stability::StrictlySemistable => "strictly_semistable",
            Stability::Stable => "stable",
        }
    }
}

/// Stability tag with its section-count witnesses.
#[derive(Debug, Clone)]
pub struct StabilityClass {
    pub tag: Stability,
    pub h0_minus_one: i64,
    pub h0_zero: i64,
}

/// A row of the degree-2 classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub c2: i64,
    pub c3: i64,
    /// spectrum of the tangent sheaf; empty for the split rows
    pub spectrum: &'static [i64],
    pub split: bool,
    pub locus: &'static str,
}

/// The degree-2 classification: possible (c2, c3) with spectra and the
/// generic curve part of the singular scheme. Row (6,20) carries the
/// six-element spectrum forced by the sum rule.
pub const TABLE: &[TableRow] = &[
    TableRow { c2: 6, c3: 20, spectrum: &[-3, -2, -2, -1, -1, -1], split: false, locus: "empty" },
    TableRow { c2: 5, c3: 14, spectrum: &[-2, -2, -1, -1, -1], split: false, locus: "line" },
    TableRow { c2: 4, c3: 10, spectrum: &[-2, -1, -1, -1], split: false, locus: "conic" },
    TableRow { c2: 4, c3: 8, spectrum: &[-1, -1, -1, -1], split: false, locus: "two skew lines" },
    TableRow { c2: 4, c3: 6, spectrum: &[-1, -1, -1, 0], split: false, locus: "double line of genus -2" },
    TableRow { c2: 3, c3: 8, spectrum: &[-2, -1, -1], split: false, locus: "plane cubic curve" },
    TableRow { c2: 3, c3: 6, spectrum: &[-1, -1, -1], split: false, locus: "twisted cubic" },
    TableRow { c2: 3, c3: 4, spectrum: &[-1, -1, 0], split: false, locus: "conic and a disjoint line" },
    TableRow { c2: 3, c3: 2, spectrum: &[-1, 0, 0], split: false, locus: "three skew lines" },
    TableRow { c2: 3, c3: 0, spectrum: &[0, 0, 0], split: false, locus: "double line of genus -2 and a disjoint line" },
    TableRow { c2: 2, c3: 4, spectrum: &[-1, -1], split: false, locus: "elliptic quartic curve" },
    TableRow { c2: 2, c3: 2, spectrum: &[-1, 0], split: false, locus: "rational quartic curve" },
    TableRow { c2: 2, c3: 0, spectrum: &[0, 0], split: false, locus: "twisted cubic and a disjoint line" },
    TableRow { c2: 1, c3: 2, spectrum: &[-1], split: false, locus: "curve of degree 5, genus 2" },
    TableRow { c2: 1, c3: 0, spectrum: &[0], split: false, locus: "elliptic curve of degree 5" },
    TableRow { c2: 0, c3: 0, spectrum: &[], split: true, locus: "ACM curve of degree 6, genus 3" },
    TableRow { c2: -1, c3: 0, spectrum: &[], split: true, locus: "ACM curve of degree 7, genus 5" },
];

/// The unique table row for (c2, c3), or the reason the pair is impossible.
pub fn classify_row(c2: i64, c3: i64) -> Result<&'static TableRow> {
    if let Some(row) = TABLE.iter().find(|r| r.c2 == c2 && r.c3 == c3) {
        return Ok(row);
    }
    if c2 == 4 && [0, 2, 4].contains(&c3) {
        return Err(Error::invalid(format!(
            "impossible pair ({c2}, {c3}): a degree-2 curve part has genus >= -2 \
             (a double line of genus < -2 would force the second infinitesimal \
             neighborhood of its support, of degree 3, into the singular scheme), \
             so c3 = 10 + 2*pa >= 6"
        )));
    }
    Err(Error::invalid(format!(
        "(c2, c3) = ({c2}, {c3}) is not a realizable pair for a degree-2 distribution"
    )))
}

/// Full analysis report for one distribution.
#[derive(Debug, Clone)]
pub struct DistributionReport {
    pub degree: u32,
    pub z: ProjScheme,
    pub curve: ProjScheme,
    pub dualizing: DualizingModule,
    pub residual_length: i64,
    pub deg_c: i64,
    /// None when the curve part is empty
    pub pa_c: Option<i64>,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub c3_crosscheck: i64,
    pub stability: StabilityClass,
    pub table_row: Option<&'static TableRow>,
    pub quadric_dim: usize,
    pub h0: BTreeMap<i64, i64>,
}

/// h^0(T_D(k)) by section counting: the space of coefficient quadruples F of
/// degree k+1 with Σ A_i F_i = 0, minus the radial multiples (all degree-k
/// polynomials embed as P · (x_0..x_3)).
pub fn section_dims(form: &OneForm, k: i64) -> Result<i64> {
    if k < -1 {
        return Err(Error::invalid("section_dims: k must be >= -1"));
    }
    let fdeg = k + 1; // component degree of the fields
    let comp_dim = dim_of_degree(fdeg);
    if comp_dim == 0 {
        return Ok(0);
    }
    let target_deg = (form.degree() as i64 + 1) + fdeg;
    let target = monomials_of_degree(target_deg as u32);
    let tindex: std::collections::HashMap<crate::monomial::Monomial, usize> =
        target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let source_monos = monomials_of_degree(fdeg as u32);
    let cols = 4 * source_monos.len();
    let mut mat = Mat::zero(target.len(), cols);
    for (ci, m) in source_monos.iter().enumerate() {
        for i in 0..4 {
            let prod = form.coeffs()[i].mul_term(m, &crate::rat::rat_int(1));
            for (mm, c) in prod.terms() {
                let r = tindex[mm];
                let col = i * source_monos.len() + ci;
                let prev = mat.get(r, col).clone();
                mat.set(r, col, prev + c.clone());
            }
        }
    }
    let rank = mat.rank();
    let kernel = cols as i64 - rank as i64;
    let radial_dim = dim_of_degree(k);
    Ok(kernel - radial_dim)
}

fn dim_of_degree(d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        ((d + 1) * (d + 2) * (d + 3) / 6) as i64
    }
}

/// Stability by section counting: a section of T_D(-1) destabilizes; among
/// semistable sheaves with c1 = 0, a section of T_D realizes O ⊂ T_D, which
/// is exactly the strictly-semistable case.
pub fn stability_class(form: &OneForm) -> Result<StabilityClass> {
    let h0_minus_one = section_dims(form, -1)?;
    let h0_zero = section_dims(form, 0)?;
    let tag = if h0_minus_one > 0 {
        Stability::Unstable
    } else if h0_zero > 0 {
        Stability::StrictlySemistable
    } else {
        Stability::Stable
    };
    Ok(StabilityClass {
        tag,
        h0_minus_one,
        h0_zero,
    })
}

/// Number of independent degree-m hypersurfaces containing the scheme.
pub fn hypersurface_containment(z: &ProjScheme, m: u32) -> usize {
    if z.ideal.is_zero_ideal() {
        return 0;
    }
    z.ideal.degree_piece_dim(m)
}

pub fn analyze(form: &OneForm) -> Result<DistributionReport> {
    if !is_primitive(form)? {
        return Err(Error::invalid(
            "form is not primitive: divide by the coefficient gcd first",
        ));
    }
    let d = form.degree() as i64;
    let z = saturate_irrelevant(&form.singular_ideal())?;
    if z.dim() >= 2 {
        return Err(Error::invalid(
            "singular scheme has codimension 1: not a distribution in the saturated sense",
        ));
    }
    let (curve, dualizing) = equidimensional_hull(&z)?;
    let resid = residual_length(&z, &curve)?;
    let deg_c = curve.degree();
    let pa_c = if curve.is_empty() { None } else { Some(curve.pa()) };
    let pa_eff = pa_c.unwrap_or(1); // χ(O_empty) = 0
    let c1 = 2 - d;
    let c2 = d * d + 2 - deg_c;
    let c3 = d * d * d + 2 * d * d + 2 * d - deg_c * (3 * d - 2) + 2 * pa_eff - 2;
    if c3 != resid {
        return Err(Error::inconsistent(format!(
            "c3 from degree/genus ({c3}) disagrees with the residual length ({resid})"
        )));
    }
    let stability = stability_class(form)?;
    let mut h0 = BTreeMap::new();
    h0.insert(-1, stability.h0_minus_one);
    h0.insert(0, stability.h0_zero);
    h0.insert(1, section_dims(form, 1)?);
    let quadric_dim = hypersurface_containment(&z, 2);
    let mut table_row = None;
    if d == 2 {
        if deg_c > 7 {
            return Err(Error::inconsistent(format!(
                "curve part has degree {deg_c} > 7, impossible in degree 2"
            )));
        }
        if c3 % 2 != 0 {
            return Err(Error::inconsistent("c3 must be even when c1 = 0"));
        }
        match stability.tag {
            Stability::Unstable => {
                if (c2, c3) != (-1, 0) {
                    return Err(Error::inconsistent(format!(
                        "unstable tangent sheaf with (c2, c3) = ({c2}, {c3}); only (-1, 0) splits as O(1) ⊕ O(-1)"
                    )));
                }
            }
            Stability::StrictlySemistable => {
                if ![(0, 0), (1, 2), (2, 4)].contains(&(c2, c3)) {
                    return Err(Error::inconsistent(format!(
                        "strictly semistable tangent sheaf requires (c2, c3) in {{(0,0), (1,2), (2,4)}}, got ({c2}, {c3})"
                    )));
                }
            }
            Stability::Stable => {
                if c3 > c2 * c2 - c2 + 2 {
                    return Err(Error::inconsistent(format!(
                        "c3 = {c3} exceeds the stable bound c2^2 - c2 + 2 = {}",
                        c2 * c2 - c2 + 2
                    )));
                }
            }
        }
        // h^0(T_D(1)) = h^0(ω_C(1)): the two sides come from independent
        // computations (section counting vs. the Ext^2 module)
        let lhs = h0[&1];
        let rhs = dualizing_degree_dims(&dualizing, 1) as i64;
        if lhs != rhs {
            return Err(Error::inconsistent(format!(
                "section count h0(T(1)) = {lhs} disagrees with h0(omega_C(1)) = {rhs}"
            )));
        }
        table_row = Some(classify_row(c2, c3).map_err(|e| Error::inconsistent(e.to_string()))?);
    }
    Ok(DistributionReport {
        degree: form.degree(),
        z,
        curve,
        dualizing,
        residual_length: resid,
        deg_c,
        pa_c,
        c1,
        c2,
        c3,
        c3_crosscheck: resid,
        stability,
        table_row,
        quadric_dim,
        h0,
    })
}

/// Checks that every expected point lies on the residual scheme (ideal
/// membership of the residual ideal in each point's maximal ideal).
pub fn residual_contains_points(
    report: &DistributionReport,
    points: &[[Rat; 4]],
) -> Result<bool> {
    let resid = crate::scheme::residual_ideal(&report.z, &report.curve)?;
    for pt in points {
        for g in resid.gens() {
            if !g.eval(pt).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Multiple-line structures on a line, with the parameters the admissibility
/// corollaries speak about.
#[derive(Debug, Clone, Copy)]
pub enum MultiLineKind {
    /// double line of arithmetic genus g <= 0
    Double { genus: i64 },
    /// triple line of type (a, b)
    Triple { a: i64, b: i64 },
}

#[derive(Debug, Clone)]
pub struct AdmissibilityVerdict {
    pub admissible: bool,
    pub violated: Option<String>,
    /// degree and dimension of the subscheme cut by the degree-(d+1)
    /// truncation of the curve ideal — the certificate of the obstruction
    pub truncation_degree: i64,
    pub truncation_dim: i32,
}

/// Can the given multiple-line curve appear inside the singular scheme of a
/// degree-d distribution? Decided by the genus/type bounds, with the
/// truncated subscheme computed as the obstruction certificate.
pub fn multiline_admissibility(
    c: &ProjScheme,
    kind: MultiLineKind,
    d: u32,
) -> Result<AdmissibilityVerdict> {
    let trunc = truncated_subscheme(c, d)?;
    let (violated, admissible) = match kind {
        MultiLineKind::Double { genus } => {
            if genus < -(d as i64) {
                (
                    Some(format!(
                        "a double line of genus {genus} < -{d} forces the second \
                         infinitesimal neighborhood of its support (degree 3) into \
                         the singular scheme"
                    )),
                    false,
                )
            } else {
                (None, true)
            }
        }
        MultiLineKind::Triple { a, b } => {
            let hit = (a == -1 && b >= d as i64) || (a >= 0 && a + b >= d as i64);
            if hit {
                (
                    Some(format!(
                        "a triple line of type ({a}, {b}) forces a multiple structure \
                         of degree at least 4 on its support into the singular scheme"
                    )),
                    false,
                )
            } else {
                (None, true)
            }
        }
    };
    Ok(AdmissibilityVerdict {
        admissible,
        violated,
        truncation_degree: trunc.degree(),
        truncation_dim: trunc.dim(),
    })
}
