//! Browser bindings for the numerical semigroup demo page.
//!
//! Every export returns a JSON string; failures come back as
//! `{"error": "<Name>: <message>"}` so the page never has to catch.

use numsemi::buchweitz::gap_sumset;
use numsemi::pfseq::{pf_violation, predicted_g2_cardinality};
use numsemi::{
    buchweitz_test, build_pf, census_range, corollary_bound, decompose_pf, verify_window,
    DiffSeq, Semigroup,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest genus the page may ask the census for.
pub const MAX_DEMO_GENUS: u32 = 24;

fn error(e: numsemi::Error) -> Value {
    json!({ "error": format!("{}: {e}", e.name()) })
}

fn describe(s: &Semigroup) -> Value {
    let violation = pf_violation(s);
    let blocks = decompose_pf(s).ok().map(|bs| {
        bs.iter()
            .map(|b| json!({ "genus": b.genus, "large_gap": b.large_gap(), "gaps": b.semigroup.gaps().into_vec() }))
            .collect::<Vec<_>>()
    });
    let sumset = (s.genus() >= 2).then(|| {
        let report = buchweitz_test(s, 2).expect("genus checked");
        json!({ "elements": gap_sumset(s, 2).expect("not N"), "report": report })
    });
    json!({
        "gaps": s.gaps().into_vec(),
        "generators": s.minimal_generators(),
        "invariants": s.invariants(),
        "pseudo_frobenius": s.pseudo_frobenius().unwrap_or_default(),
        "schubert_index": s.schubert_index(),
        "pf_semigroup": violation.is_none(),
        "pf_reason": violation.map(|v| v.to_string()),
        "blocks": blocks,
        "second_sumset": sumset,
    })
}

/// Describes a semigroup given as `gens:5,7,11,13` or `gaps:1,2,3,4,6,8,9`.
#[wasm_bindgen]
pub fn inspect(spec: &str) -> String {
    match Semigroup::parse(spec.trim()) {
        Ok(s) => describe(&s),
        Err(e) => error(e),
    }
    .to_string()
}

/// The genus-`genus` member of the family of `seq`, plus the sequence verdict
/// and the direct check on `genus - 10 ..= genus + 10`.
#[wasm_bindgen]
pub fn sequence(seq: &str, genus: u32) -> String {
    let run = || -> numsemi::Result<Value> {
        let d: DiffSeq = seq.trim().parse()?;
        let verdict = corollary_bound(&d).ok();
        let s = build_pf(&d, genus)?;
        let lo = (genus.saturating_sub(10)..=genus)
            .find(|&g| build_pf(&d, g).is_ok())
            .unwrap_or(genus);
        let window = verify_window(&d, lo..=genus + 10)?;
        Ok(json!({
            "a": d.to_a().as_slice(),
            "verdict": verdict,
            "predicted_g2": predicted_g2_cardinality(&d, genus),
            "window": window,
            "semigroup": describe(&s),
        }))
    };
    run().unwrap_or_else(error).to_string()
}

/// Census rows for `lo..=hi`, capped at [`MAX_DEMO_GENUS`].
#[wasm_bindgen]
pub fn census(lo: u32, hi: u32) -> String {
    if hi > MAX_DEMO_GENUS {
        return json!({ "error": format!("the demo census stops at genus {MAX_DEMO_GENUS}") })
            .to_string();
    }
    match census_range(lo, hi) {
        Ok(rows) => json!(rows),
        Err(e) => error(e),
    }
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn inspect_small_example() {
        let v = parse(inspect("gens:5,7,11,13"));
        assert_eq!(v["gaps"], json!([1, 2, 3, 4, 6, 8, 9]));
        assert_eq!(v["pf_semigroup"], true);
        assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
        assert_eq!(v["second_sumset"]["report"]["threshold"], 18);
    }

    #[test]
    fn inspect_errors_are_json() {
        let v = parse(inspect("gens:2,4"));
        assert!(v["error"].as_str().unwrap().starts_with("InfiniteComplement"));
        let v = parse(inspect("gens:2,3"));
        assert_eq!(v["second_sumset"], Value::Null);
    }

    #[test]
    fn sequence_explorer() {
        let v = parse(sequence("7,1,2,1", 26));
        assert_eq!(v["a"], json!([12, 5, 4, 2, 1]));
        assert_eq!(v["verdict"]["corollary_bound"], 28);
        assert_eq!(v["semigroup"]["second_sumset"]["report"]["is_buchweitz"], true);
        let window = v["window"].as_array().unwrap();
        assert_eq!(window.first().unwrap(), &json!([16, false]));
        assert_eq!(window.last().unwrap(), &json!([36, true]));
        let v = parse(sequence("7,1,2,1", 5));
        assert!(v["error"].as_str().unwrap().starts_with("MalformedGapSet"));
    }

    #[test]
    fn census_rows() {
        let v = parse(census(16, 17));
        assert_eq!(v[0], json!({ "genus": 16, "ns": 4806, "b2s": 2, "b2pfs": 2 }));
        assert!(parse(census(2, 40))["error"].is_string());
        assert!(parse(census(1, 3))["error"].is_string());
    }
}
