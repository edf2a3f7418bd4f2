use std::io::Write;
use std::process::{Command, Output, Stdio};

fn liecp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecp")).args(args).env_remove("LIECP_DIM_CAP").output().unwrap()
}

fn liecp_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_liecp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn product_of_two_doublets() {
    let o = liecp(&["product", "--type", "A", "--rank", "1", "--left", "1", "--right", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!([{"highest": [0], "mult": 1}, {"highest": [2], "mult": 1}]));
}

#[test]
fn borel_g2() {
    let o = liecp(&["borel", "--type", "G", "--rank", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "rank(lambda_B) = 2 = dim h : PASS"));
}

#[test]
fn borel_matrix_dump() {
    let o = liecp(&["borel", "--type", "A", "--rank", "1", "--dump-matrix"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([["0", "0"], ["2", "0"]]));
}

#[test]
fn sl2_table_matches_golden() {
    let o = liecp(&["sl2-table", "--markdown"]);
    assert!(o.status.success());
    let golden = include_str!("../../core/tests/golden/eigenvalue_audit.md");
    assert_eq!(stdout(&o), golden);

    let o = liecp(&["sl2-table"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), golden.lines().count() - 2);
}

#[test]
fn sl2_embed_text_form() {
    let o = liecp(&["sl2-embed", "--type", "C", "--rank", "3", "--class", "long"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["charpoly"], "z0^11 * (z0^2 - 1*(z1^2+z2*z3))^4 * (z0^2 - 4*(z1^2+z2*z3))^1");
}

#[test]
fn linearize_then_decompose() {
    let o = liecp(&["linearize", "--type", "A", "--rank", "2", "--highest", "1,1", "--highest", "0,0"]);
    assert!(o.status.success());
    let factors = stdout(&o);
    let o = liecp_stdin(&["decompose", "--type", "A", "--rank", "2", "--input", "-"], &factors);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!([{"highest": [0, 0], "mult": 1}, {"highest": [1, 1], "mult": 1}]));
}

#[test]
fn rejects_non_characters() {
    let o = liecp_stdin(
        &["decompose", "--type", "A", "--rank", "1", "--input", "-"],
        r#"[{"coords":[1],"mult":1}]"#,
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not the weight system"));
}

#[test]
fn exit_codes() {
    assert_eq!(liecp(&["rootsys", "--type", "E", "--rank", "5"]).status.code(), Some(1));
    assert_eq!(liecp(&["rootsys", "--type", "Q", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(liecp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(liecp(&["product", "--type", "A", "--rank", "1", "--left", "x", "--right", "1"]).status.code(), Some(2));
    assert_eq!(liecp(&["product", "--type", "A", "--rank", "1", "--left", "-1", "--right", "1"]).status.code(), Some(1));
}

#[test]
fn dimension_cap_from_environment() {
    let args = ["charpoly", "--type", "A", "--rank", "1", "--highest", "4", "--expand"];
    assert!(liecp(&args).status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_liecp")).args(args).env("LIECP_DIM_CAP", "3").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = liecp(&["--dim-cap", "3", "charpoly", "--type", "A", "--rank", "1", "--highest", "4", "--expand"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn rootsys_dump() {
    let o = liecp(&["rootsys", "--type", "G", "--rank", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["cartan_matrix"], serde_json::json!([[2, -3], [-1, 2]]));
}

#[test]
fn oracle_commands() {
    let o = liecp(&["verify-sl2", "--m", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("PASS"));
    let o = liecp(&["verify-basechange", "--m", "2", "--seed", "9", "--trials", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| *l == "PASS").count(), 3);
    assert_eq!(liecp(&["verify-sl2", "--m", "12"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["sl2-table"][..],
        &["product", "--type", "B", "--rank", "2", "--left", "1,0", "--right", "0,1"][..],
        &["verify-basechange", "--m", "3", "--seed", "4"][..],
    ] {
        assert_eq!(liecp(args).stdout, liecp(args).stdout);
    }
}

#[test]
fn selftest_reports_every_criterion() {
    let o = liecp(&["selftest"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().filter(|l| l.contains("] criterion ")).collect();
    assert_eq!(lines.len(), 9);
    let all_pass = lines.iter().all(|l| l.starts_with("[PASS]"));
    assert_eq!(o.status.success(), all_pass);
}
