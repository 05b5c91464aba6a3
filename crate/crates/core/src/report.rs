//! JSON rendering of analysis reports and scheme fragments.

use crate::distribution::DistributionReport;
use crate::scheme::ProjScheme;
use serde_json::{json, Value};

pub fn scheme_json(s: &ProjScheme) -> Value {
    json!({
        "dim": s.dim(),
        "degree": s.degree(),
        "genus": if s.dim() == 1 { Some(s.pa()) } else { None },
        "length": s.length(),
        "generators": s.ideal.gens().iter().map(|g| g.render()).collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &DistributionReport) -> Value {
    let h0: serde_json::Map<String, Value> = r
        .h0
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "schema": 1,
        "degree": r.degree,
        "c1": r.c1,
        "c2": r.c2,
        "c3": r.c3,
        "stability": r.stability.tag.as_str(),
        "table_row": r.table_row.map(|t| format!("({}, {}): {}", t.c2, t.c3, t.locus)),
        "curve": scheme_json(&r.curve),
        "residual_length": r.residual_length,
        "quadric_dim": r.quadric_dim,
        "h0": h0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scheme_fragment_shape() {
        let line = crate::scheme::saturate_irrelevant(&crate::groebner::Ideal::new(vec![
            crate::parse::parse_poly("x").unwrap(),
            crate::parse::parse_poly("y").unwrap(),
        ]))
        .unwrap();
        let v = scheme_json(&line);
        assert_eq!(v["dim"], 1);
        assert_eq!(v["degree"], 1);
        assert_eq!(v["genus"], 0);
        assert!(v["length"].is_null());
    }
}
