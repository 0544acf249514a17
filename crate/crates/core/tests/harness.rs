use std::collections::BTreeSet;
use std::sync::OnceLock;

use regunip_core::chevalley::{sl2_torus_normalizer, twisted_diagonal_subgroup};
use regunip_core::harness::{
    registry, render_text, run_scenario, stable_json, verify_all, Aggregate, Config, Overrides, Report, OPERATIONS,
};
use regunip_core::verdicts::{gcr_check, girr_overgroup_of_regular_unipotent};
use regunip_core::{Field, Mat, MatrixGroup, Realization};

fn all_reports() -> &'static Aggregate {
    static A: OnceLock<Aggregate> = OnceLock::new();
    A.get_or_init(|| verify_all(&Config::default(), &Overrides::default(), false).unwrap())
}

#[test]
fn every_scenario_passes() {
    let agg = all_reports();
    for r in agg.reports.iter().filter(|r| !r.pass) {
        eprintln!("{}", render_text(r));
    }
    assert!(agg.pass, "failing: {:?}", agg.failed);
    assert_eq!(agg.exit_code(), 0);
}

#[test]
fn registry_ids_are_unique_and_cover_the_required_set() {
    let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
    let unique: BTreeSet<&str> = ids.iter().copied().collect();
    assert_eq!(unique.len(), ids.len());
    for id in [
        "regular-criterion-sl",
        "sp4-in-sl4",
        "adjoint-sl2-sl3-char2",
        "psl2-5-permutation",
        "ntorus-sl2-char2",
        "twisted-diagonal",
        "limits-exhaustive-sl3",
        "opp-radicals",
        "lie-regular-nilpotent",
        "uniprad-lemma",
        "semisimplify-quasiss",
        "sigma-borel-torus",
    ] {
        assert!(unique.contains(id), "{id} missing");
    }
}

#[test]
fn anchors_match_the_checked_in_list() {
    let listed: BTreeSet<&str> = include_str!("data/anchors.txt").lines().filter(|l| !l.is_empty()).collect();
    let registered: BTreeSet<&str> = registry().iter().map(|s| s.anchor).collect();
    let missing: Vec<_> = listed.difference(&registered).collect();
    let extra: Vec<_> = registered.difference(&listed).collect();
    assert!(missing.is_empty() && extra.is_empty(), "missing {missing:?}, unlisted {extra:?}");
}

#[test]
fn expectations_name_known_operations() {
    for r in &all_reports().reports {
        for e in &r.expectations {
            assert!(OPERATIONS.contains(&e.op.as_str()), "{}: unknown op {}", r.scenario, e.op);
        }
    }
}

#[test]
fn verdicts_carry_witnesses() {
    for r in &all_reports().reports {
        for e in r.expectations.iter().filter(|e| e.actual.get("answer").is_some()) {
            assert!(!e.witnesses.is_empty(), "{} / {}: verdict without witness", r.scenario, e.subject);
            if e.actual["answer"] == false {
                let checkable = e.witnesses.iter().any(|w| w["kind"] != "note" && w["kind"] != "cross_check");
                assert!(checkable, "{} / {}: negative answer without a checkable witness", r.scenario, e.subject);
            }
        }
    }
}

#[test]
fn reports_round_trip() {
    for r in &all_reports().reports {
        let text = serde_json::to_string(r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, r);
        assert_eq!(r.schema, "1");
    }
    let text = serde_json::to_string(all_reports()).unwrap();
    let back: Aggregate = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, all_reports());
}

#[test]
fn stable_sections_are_deterministic() {
    let again = verify_all(&Config::default(), &Overrides::default(), true).unwrap();
    assert_eq!(stable_json(&again).to_string(), stable_json(all_reports()).to_string());
}

#[test]
fn torus_normalizer_text_matches_golden() {
    let r = run_scenario("ntorus-sl2-char2", &Config::default()).unwrap();
    let text = render_text(&r);
    assert!(text.contains("witness unique_borel"));
    assert_eq!(text, include_str!("data/ntorus-sl2-char2.txt"));
}

#[test]
fn unknown_scenario_is_an_error() {
    assert!(run_scenario("no-such-thing", &Config::default()).is_err());
    let ov = Overrides { scenarios: Some(vec!["no-such-thing".into()]), ..Overrides::default() };
    assert!(verify_all(&Config::default(), &ov, false).is_err());
}

/// Subgroups from the scenarios that contain a regular unipotent `u` of `G`.
fn overgroups() -> Vec<(&'static str, MatrixGroup, Mat, MatrixGroup)> {
    let f2 = Field::new(2, 1).unwrap();
    let f4 = Field::new(2, 2).unwrap();
    let f16 = Field::new(2, 4).unwrap();
    let realized = |l: &str, f: &Field| MatrixGroup::realized(&Realization::parse(l).unwrap(), f);
    let sp4 = realized("Sp4", &f2);
    let u = sp4.realization().unwrap().standard_regular_unipotent(&f2);
    let v = Mat::from_rows(&[[1, 1], [0, 1]]);
    let uv = regunip_core::chevalley::block_diag(&v, &v);
    vec![
        ("Sp4(F2) in SL4", sp4, u, realized("SL4", &f2)),
        (
            "N(T)(F4) in SL2",
            sl2_torus_normalizer(&f4).unwrap(),
            Mat::from_rows(&[[0, 1], [1, 0]]),
            realized("SL2", &f4),
        ),
        ("H_2 in SL2 x SL2", twisted_diagonal_subgroup(2, &f16).unwrap(), uv.clone(), realized("SL2xSL2", &f16)),
        ("H_4 in SL2 x SL2", twisted_diagonal_subgroup(4, &f16).unwrap(), uv, realized("SL2xSL2", &f16)),
    ]
}

#[test]
fn identity_components_of_overgroups_are_completely_reducible() {
    for (name, h, _, g) in overgroups() {
        let h0 = MatrixGroup::generated(h.field(), h.identity_generators().to_vec()).unwrap();
        let v = gcr_check(&h0, &g, 1).unwrap();
        assert!(v.answer, "{name}: {v:?}");
    }
}

#[test]
fn overgroups_of_regular_unipotents_are_irreducible() {
    for (name, h, u, g) in overgroups() {
        let v = girr_overgroup_of_regular_unipotent(&h, &u, &g).unwrap();
        assert!(v.answer, "{name}: {v:?}");
    }
}
