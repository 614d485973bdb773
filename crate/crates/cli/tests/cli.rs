use std::path::PathBuf;

use gav_cli::{run, Outcome, Report, Status};
use gav_core::io::parse_gav;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn gav(args: &[&str]) -> Outcome {
    let mut argv = vec!["gav".to_string()];
    argv.extend(args.iter().map(|a| a.to_string()));
    run(argv)
}

fn json(args: &[&str]) -> (i32, Report) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = gav(&a);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    let report = Report::from_json(&out.stdout).expect("valid JSON report");
    (out.code, report)
}

fn witness<'a>(r: &'a Report, name: &str) -> &'a str {
    r.sections
        .iter()
        .flat_map(|s| &s.witnesses)
        .find(|w| w.name == name)
        .map(|w| w.value.as_str())
        .unwrap_or_else(|| panic!("no witness {name}"))
}

#[test]
fn validate_passes_on_valid_fixture() {
    let out = gav(&["validate", &fixture("a1sq.gav")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("gav validate: PASS"));
    assert!(!out.stdout.contains("FAIL"));
}

#[test]
fn compare_root_counts_one_and_two() {
    let (a, b) = (fixture("A.gav"), fixture("B.gav"));
    let (code, r) = json(&["classify-compare", &a, &b]);
    assert_eq!(code, 0);
    assert_eq!(r.verdict.as_deref(), Some("NonIsomorphic"));
    assert!(r.cited_results.iter().any(|c| c.quote.contains("equal number of roots")));
    let (_, back) = json(&["classify-compare", &b, &a]);
    assert_eq!(back.verdict, r.verdict);
    assert_eq!(gav(&["classify-compare", &a, &b, "--strict-exit"]).code, 1);
}

#[test]
fn compare_with_itself_is_isomorphic() {
    let a = fixture("A.gav");
    let (code, r) = json(&["classify-compare", &a, &a]);
    assert_eq!((code, r.verdict.as_deref()), (0, Some("Isomorphic")));
    assert_eq!(gav(&["classify-compare", &a, &a, "--strict-exit"]).code, 0);
}

#[test]
fn bad_map_has_well_definedness_witness() {
    let (code, r) = json(&["expmap-verify", &fixture("bad.map")]);
    assert_eq!((code, r.status), (1, Status::Fail));
    let pres = parse_gav(&std::fs::read_to_string(fixture("a1sq_z2.gav")).unwrap(), None).unwrap();
    let w = pres.parse(witness(&r, "well-definedness")).unwrap();
    assert_eq!(w, pres.parse("-2*Z*U - U^2").unwrap());
}

#[test]
fn gr_text_cites_and_matches_target() {
    let file = fixture("worked.gav");
    let out = gav(&["gr", &file, "--var", "1", "--root", "0"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("PASS") && out.stdout.contains("Theorem 2.3"));
    let (_, r) = json(&["gr", &file, "--var", "1", "--root", "0"]);
    let pres = parse_gav(&std::fs::read_to_string(&file).unwrap(), None).unwrap();
    assert_eq!(pres.parse(witness(&r, "relation")).unwrap(), pres.parse("X1^2*Y - (Z^2 + T^3)").unwrap());
}

#[test]
fn gr_at_the_other_root() {
    let (code, r) = json(&["gr", &fixture("worked.gav"), "--var", "1", "--root", "4"]);
    assert_eq!(code, 0);
    let pres = parse_gav(&std::fs::read_to_string(fixture("worked.gav")).unwrap(), None).unwrap();
    // X1 -> X1 - 1 turns X1^2 (X1 + 1) into (X1 - 1)^2 X1.
    assert_eq!(pres.parse(witness(&r, "relation")).unwrap(), pres.parse("X1*Y - (Z^2 + T^3)").unwrap());
}

#[test]
fn filtration_check_and_unsafe_weights() {
    let file = fixture("worked.gav");
    let (code, r) = json(&["filtration-check", &file, "--var", "1", "--root", "0", "--samples", "40"]);
    assert_eq!(code, 0);
    assert_eq!(r.sections.len(), 6);
    let (_, r) = json(&["filtration-check", &file, "--unsafe-weights", "1,0,0,0", "--samples", "20"]);
    assert!(r.cited_results.is_empty());
    assert_eq!(gav(&["filtration-check", &file, "--var", "1"]).code, 64);
}

#[test]
fn invariants_certified_or_downgraded() {
    let (code, r) = json(&["invariants", &fixture("A.gav")]);
    assert_eq!((code, r.status), (0, Status::Pass));
    let (code, r) = json(&["invariants", &fixture("simple_root.gav")]);
    assert_eq!((code, r.status), (2, Status::Inconclusive));
    assert!(r.sections.iter().any(|s| s.body.iter().any(|l| l.starts_with("DK(A) contains"))));
}

#[test]
fn expmap_construct_both() {
    let (code, r) = json(&["expmap-construct", &fixture("two_vars.gav")]);
    assert_eq!(code, 0);
    assert!(r.sections.iter().any(|s| s.title == "phi1") && r.sections.iter().any(|s| s.title == "phi2"));
}

#[test]
fn family_is_independent_of_worker_count() {
    let one = gav(&["family", "--count", "4", "--jobs", "1", "--json"]);
    let many = gav(&["family", "--count", "4", "--jobs", "4", "--json"]);
    assert_eq!(one, many);
    assert_eq!(one.code, 0);
    let r = Report::from_json(&one.stdout).unwrap();
    assert!(r.sections.iter().any(|s| s.body.iter().any(|l| l == "6/6 pairs NonIsomorphic")));
    assert_eq!(gav(&["family", "--count", "1"]).code, 64);
}

#[test]
fn family_from_line_file() {
    let (code, r) = json(&["family", "--count", "3", "--line", &fixture("line_p2.line")]);
    assert_eq!((code, r.status), (0, Status::Pass));
}

#[test]
fn line_verify_accepts_and_rejects() {
    assert_eq!(gav(&["line-verify", &fixture("line_p2.line")]).code, 0);
    let (code, r) = json(&["line-verify", &fixture("reducible.line")]);
    assert_eq!(code, 1);
    assert!(witness(&r, "discrepancy 1").contains("(Z)"));
}

#[test]
fn auto_complete_positive_and_negative() {
    let (code, r) = json(&["auto-complete", &fixture("t_shift.map")]);
    assert_eq!(code, 0);
    let pres = parse_gav(&std::fs::read_to_string(fixture("a1sq.gav")).unwrap(), None).unwrap();
    assert_eq!(pres.parse(witness(&r, "inverse(t)")).unwrap(), pres.parse("T - 2*X1^2").unwrap());
    let (code, r) = json(&["auto-complete", &fixture("z_plus_one.map")]);
    assert_eq!((code, r.status), (1, Status::Fail));
    assert!(witness(&r, "ideal membership").contains("not in"));
    assert_eq!(gav(&["auto-complete", &fixture("t_shift.map"), "--gamma", "2"]).code, 1);
}

#[test]
fn discriminant_report() {
    let (code, r) = json(&["classify-discriminant", &fixture("two_vars.gav")]);
    assert_eq!(code, 0);
    assert_eq!(witness(&r, "profile a_1"), "[(2, 2)]");
    assert_eq!(witness(&r, "profile a_2"), "[(3, 1)]");
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(gav(&["validate", &fixture("a1sq.gav"), "--bogus"]).code, 64);
    assert_eq!(gav(&["frobnicate"]).code, 64);
    assert_eq!(gav(&["gr", &fixture("a1sq.gav"), "--var", "2", "--root", "0"]).code, 64);
    let out = gav(&["validate", &fixture("malformed.gav")]);
    assert_eq!(out.code, 65);
    assert!(out.stderr.contains("line 4, column 11"), "{}", out.stderr);
    assert_eq!(gav(&["validate", &fixture("missing.gav")]).code, 65);
    assert_eq!(gav(&["gr", &fixture("a1sq.gav"), "--var", "1", "--root", "1"]).code, 65);
    assert_eq!(gav(&["validate", &fixture("a1sq.gav"), "--field", "3"]).code, 65);
    assert_eq!(gav(&["--help"]).code, 0);
}

#[test]
fn field_flag_base_changes() {
    let (code, r) = json(&["validate", &fixture("a1sq.gav"), "--field", "5^2"]);
    assert_eq!(code, 0);
    assert!(r.sections[0].body.contains(&"field 5^2".to_string()));
}

#[test]
fn json_and_text_carry_the_same_data() {
    let cases: Vec<Vec<String>> = vec![
        vec!["classify-compare".into(), fixture("A.gav"), fixture("B.gav")],
        vec!["expmap-verify".into(), fixture("bad.map")],
        vec!["gr".into(), fixture("worked.gav"), "--var".into(), "1".into(), "--root".into(), "0".into()],
        vec!["auto-complete".into(), fixture("t_shift.map")],
    ];
    for args in cases {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, r) = json(&a);
        let text = gav(&a);
        assert_eq!(code, text.code);
        assert_eq!(r.to_text(), text.stdout);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        for s in &r.sections {
            for w in &s.witnesses {
                assert!(text.stdout.contains(&format!("witness {} = {}", w.name, w.value)));
            }
        }
        for c in &r.cited_results {
            assert!(text.stdout.contains(&c.label) && text.stdout.contains(&c.quote));
        }
    }
}

#[test]
fn binary_matches_library() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_gav"))
        .args(["classify-compare", &fixture("A.gav"), &fixture("B.gav"), "--json", "--strict-exit"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let lib = gav(&["classify-compare", &fixture("A.gav"), &fixture("B.gav"), "--json", "--strict-exit"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
}
