//! End-to-end tests of the command-line surface through `cli::dispatch`.

use std::io::Write as _;

use graphicable::cli::dispatch;
use graphicable::families::{family_law, generate_graph, FamilySpec};
use graphicable::io::{export_dot, serialize_document, AlgebraDocument, GraphDocument};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = dispatch(&args, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("graphicable-test-{}-{name}", std::process::id()));
    let mut file = std::fs::File::create(&path).unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    path
}

fn algebra_file(spec: &FamilySpec) -> std::path::PathBuf {
    let law = family_law(spec).unwrap();
    let document = AlgebraDocument::from_algebra(&law, Some(spec.to_string()));
    write_temp(&format!("{spec}.json").replace([':', ','], "-"), &serialize_document(&document))
}

#[test]
fn verify_friendship_three_exits_zero_with_passing_report() {
    let result = run(&["verify", "friendship:3"]);
    assert_eq!(result.code, 0, "stderr: {}", result.stderr);
    let report: serde_json::Value = serde_json::from_str(&result.stdout).unwrap();
    assert_eq!(report["passed_all"], serde_json::Value::Bool(true));
    assert_eq!(report["spec"], "friendship:3");
}

#[test]
fn law_star_three_prints_four_lines() {
    let result = run(&["law", "star:3"]);
    assert_eq!(result.code, 0);
    assert_eq!(
        result.stdout,
        "e_1^2 = e_4\ne_2^2 = e_4\ne_3^2 = e_4\ne_4^2 = e_1 + e_2 + e_3\n"
    );
}

#[test]
fn law_json_round_trips_to_the_same_algebra() {
    let result = run(&["law", "tietze", "--format", "json"]);
    assert_eq!(result.code, 0);
    let document: AlgebraDocument = serde_json::from_str(&result.stdout).unwrap();
    assert_eq!(document.to_algebra().unwrap(), family_law(&FamilySpec::Tietze).unwrap());
    assert_eq!(document.family.as_deref(), Some("tietze"));
}

#[test]
fn verify_rejects_bad_parameters_with_exit_two() {
    let result = run(&["verify", "npartite:9999999"]);
    assert_eq!(result.code, 2);
    assert!(result.stderr.contains("npartite"), "stderr: {}", result.stderr);
    assert!(result.stdout.is_empty());
}

#[test]
fn generate_formats() {
    let dot = run(&["generate", "star:3", "--format", "dot"]);
    assert_eq!(dot.code, 0);
    let expected = export_dot(&generate_graph(&FamilySpec::Star(3)).unwrap());
    assert_eq!(dot.stdout, expected);

    let json = run(&["generate", "j5"]);
    assert_eq!(json.code, 0);
    let document: GraphDocument = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(document.n, 20);
    assert_eq!(document.edges.len(), 30);

    let text = run(&["generate", "petersen", "--format", "text"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.starts_with("gp:5,2: 10 vertices, 15 edges"));
}

#[test]
fn law_has_no_dot_rendering() {
    let result = run(&["law", "star:3", "--format", "dot"]);
    assert_eq!(result.code, 2);
}

#[test]
fn check_snark_on_algebra_documents() {
    let j5 = algebra_file(&FamilySpec::FlowerJ5);
    let result = run(&["check", j5.to_str().unwrap(), "--snark"]);
    assert_eq!(result.code, 0, "stderr: {}", result.stderr);
    let certificate: serde_json::Value = serde_json::from_str(&result.stdout).unwrap();
    assert_eq!(certificate["verdict"], serde_json::Value::Bool(true));
    assert_eq!(certificate["girth"], serde_json::json!(5));

    let tietze = algebra_file(&FamilySpec::Tietze);
    let at_five = run(&["check", tietze.to_str().unwrap(), "--snark"]);
    assert_eq!(at_five.code, 1, "Tietze fails the default girth threshold");
    let at_three = run(&["check", tietze.to_str().unwrap(), "--snark", "--girth-threshold", "3"]);
    assert_eq!(at_three.code, 0);
}

#[test]
fn check_hamiltonian_and_friendship_on_graph_documents() {
    let desargues = GraphDocument::from_graph(&generate_graph(&FamilySpec::desargues()).unwrap());
    let path = write_temp("desargues.json", &serde_json::to_string(&desargues).unwrap());
    let found = run(&["check", path.to_str().unwrap(), "--hamiltonian"]);
    assert_eq!(found.code, 0, "stderr: {}", found.stderr);
    let outcome: serde_json::Value = serde_json::from_str(&found.stdout).unwrap();
    assert_eq!(outcome["found"], serde_json::Value::Bool(true));

    let tietze = algebra_file(&FamilySpec::Tietze);
    let absent = run(&["check", tietze.to_str().unwrap(), "--hamiltonian"]);
    assert_eq!(absent.code, 1);

    let f3 = algebra_file(&FamilySpec::Friendship(3));
    assert_eq!(run(&["check", f3.to_str().unwrap(), "--friendship"]).code, 0);

    let c4 = GraphDocument::from_graph(&generate_graph(&FamilySpec::Cycle(4)).unwrap());
    let c4_path = write_temp("c4.json", &serde_json::to_string(&c4).unwrap());
    let rejected = run(&["check", c4_path.to_str().unwrap(), "--friendship"]);
    assert_eq!(rejected.code, 1);
    assert!(rejected.stdout.contains("Violated"));
}

#[test]
fn check_s_graphicable_flags_violations() {
    let good = algebra_file(&FamilySpec::Star(3));
    assert_eq!(run(&["check", good.to_str().unwrap(), "--s-graphicable"]).code, 0);

    let asymmetric = AlgebraDocument {
        schema_version: graphicable::io::SCHEMA_VERSION,
        dimension: 2,
        structure: vec!["0".into(), "1".into(), "0".into(), "0".into()],
        family: None,
    };
    let path = write_temp("asymmetric.json", &serialize_document(&asymmetric));
    let result = run(&["check", path.to_str().unwrap(), "--s-graphicable"]);
    assert_eq!(result.code, 1);
    assert!(result.stdout.contains("violation"));
}

#[test]
fn check_requires_exactly_one_flag() {
    let file = algebra_file(&FamilySpec::Star(2));
    assert_eq!(run(&["check", file.to_str().unwrap()]).code, 2);
    assert_eq!(
        run(&["check", file.to_str().unwrap(), "--snark", "--friendship"]).code,
        2
    );
    assert_eq!(run(&["check", "/nonexistent-file.json", "--snark"]).code, 2);
}

#[test]
fn embed_star_into_friendship() {
    let ok = run(&["embed", "star:4", "friendship:2"]);
    assert_eq!(ok.code, 0, "stderr: {}", ok.stderr);
    let outcome: serde_json::Value = serde_json::from_str(&ok.stdout).unwrap();
    assert_eq!(outcome["embeds"], serde_json::Value::Bool(true));

    let reverse = run(&["embed", "wheel:5", "friendship:2"]);
    assert_eq!(reverse.code, 1);

    let map = write_temp("map.json", "[1, 2, 3, 4, 5]");
    let mapped = run(&["embed", "friendship:2", "wheel:5", "--map", map.to_str().unwrap()]);
    assert_eq!(mapped.code, 0);

    let bad_map = write_temp("bad-map.json", "[1, 1, 2, 3, 4]");
    assert_eq!(
        run(&["embed", "friendship:2", "wheel:5", "--map", bad_map.to_str().unwrap()]).code,
        2
    );
}

#[test]
fn mul_star_elements() {
    let star = algebra_file(&FamilySpec::Star(3));
    let text = run(&["mul", star.to_str().unwrap(), "2,3,0,0", "1,-1,0,0"]);
    assert_eq!(text.code, 0, "stderr: {}", text.stderr);
    assert_eq!(text.stdout, "-e_4\n");

    let json = run(&["mul", star.to_str().unwrap(), "2,3,0,0", "1,-1,0,0", "--format", "json"]);
    assert_eq!(json.code, 0);
    let coefficients: Vec<String> = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(coefficients, vec!["0", "0", "0", "-1"]);

    let wrong_arity = run(&["mul", star.to_str().unwrap(), "1,2", "1,2"]);
    assert_eq!(wrong_arity.code, 2);
    let bad_token = run(&["mul", star.to_str().unwrap(), "1,x,0,0", "1,0,0,0"]);
    assert_eq!(bad_token.code, 2);
}

#[test]
fn chain_audit_via_cli() {
    let ok = run(&["chain", "3"]);
    assert_eq!(ok.code, 0, "stderr: {}", ok.stderr);
    let report: serde_json::Value = serde_json::from_str(&ok.stdout).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
    assert_eq!(report["errata"][0]["id"], "wheel-chain-index");

    assert_eq!(run(&["chain", "1"]).code, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["verify"]).code, 2);
    assert_eq!(run(&["verify", "star:3", "--all"]).code, 2);
    assert_eq!(run(&["law", "star:one"]).code, 2);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("generate"));
}

#[test]
fn resource_bounds_exit_three() {
    let result = run(&["generate", "bipartite:400,400"]);
    assert_eq!(result.code, 3);
    assert!(result.stderr.contains("bound"), "stderr: {}", result.stderr);
}

#[test]
fn verify_exit_code_agrees_with_report_verdict() {
    for spec in [
        "star:7",
        "friendship:4",
        "wheel:9",
        "npartite:2,2,3",
        "bipartite:2,5",
        "gp:11,4",
        "petersen",
        "j5",
        "tietze",
        "cycle:8",
        "path:5",
        "complete:6",
    ] {
        let result = run(&["verify", spec]);
        let report: serde_json::Value = serde_json::from_str(&result.stdout).unwrap();
        let passed = report["passed_all"].as_bool().unwrap();
        assert_eq!(result.code, if passed { 0 } else { 1 }, "{spec}");
    }
}

#[test]
fn verify_all_summarizes_the_grid() {
    let result = run(&["verify", "--all"]);
    assert_eq!(result.code, 0, "stderr: {}", result.stderr);
    let summary: serde_json::Value = serde_json::from_str(&result.stdout).unwrap();
    assert_eq!(summary["failed"], serde_json::json!(0));
    assert!(summary["total"].as_u64().unwrap() > 4000);
}
