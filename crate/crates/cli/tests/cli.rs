use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn chowkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chowkit"))
        .args(args)
        .env_remove("CHOWKIT_PRIME")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn job(spec: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chowkit"))
        .args(["job", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(spec.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn binary_bezout_example() {
    let o = chowkit(&["binary", "--f", "1,0,-1", "--g", "1,0,-4", "--method", "bezout"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-9\n");
    let o = chowkit(&["binary", "--f", "1,0,-1", "--g", "1,0,-4"]);
    assert_eq!(stdout(&o), "9\n");
}

#[test]
fn binary_over_prime_field() {
    let o = chowkit(&["binary", "--f", "1,0,-1", "--g", "1,0,-4", "--prime", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["resultant"], "2 mod 7");
}

#[test]
fn ternary_pfaffian_latex() {
    let o = chowkit(&["ternary-quadrics", "--emit", "pfaffian-matrix", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let first_row = text.lines().nth(1).unwrap();
    let cells: Vec<&str> = first_row.trim_end_matches(" \\cr").split(" & ").collect();
    assert_eq!(cells[1], "[245]");
}

#[test]
fn emit_fixture_cells() {
    let o = chowkit(&["emit", "scroll3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["display"][0][0], "[034]");

    let o = chowkit(&["emit", "elliptic4"]);
    let row: Vec<String> = stdout(&o).lines().nth(1).unwrap().split_whitespace().map(str::to_string).collect();
    assert_eq!(row[3], "[12]");
}

#[test]
fn emitted_json_round_trips() {
    for id in ["pfaffian8", "stiefel6", "scroll3", "elliptic4", "hm-betti", "nullcorr-betti"] {
        let o = chowkit(&["emit", id, "--format", "json"]);
        let parsed = chowkit::fixtures::parse_json(&stdout(&o)).unwrap();
        assert!(parsed.same_data(&chowkit::fixtures::load(id).unwrap()), "{id}");
    }
}

#[test]
fn unknown_fixture_exits_2() {
    let o = chowkit(&["emit", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown fixture"));
}

#[test]
fn verify_ba_zero_lists_every_pair() {
    let o = chowkit(&["verify", "ba-zero", "--family", "hyper", "--gmax", "2", "--kmax", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for k in 1..=6 {
        for g in 0..k.min(3) {
            assert!(text.contains(&format!("PASS g={g} k={k}\n")), "g={g} k={k}");
        }
    }
}

#[test]
fn failing_suite_exits_3() {
    let o = chowkit(&["verify", "psi", "--trials", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL scroll S(2,1)"));
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        vec!["binary", "--f", "1,2", "--g", "1"],
        vec!["binary", "--f", "1,x", "--g", "1,2"],
        vec!["binary", "--f", "1,2", "--g", "1,2", "--format", "latex"],
        vec!["binary", "--nonsense"],
        vec!["hyper", "--g", "1", "--k", "1", "--f1", "1,0,1", "--f2", "0,1"],
        vec!["chow-det", "--rnc", "3", "--scroll", "2,1"],
        vec!["binary", "--f", "1,2", "--g", "1,2", "--prime", "8"],
    ] {
        assert_eq!(chowkit(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn job_matches_command_line() {
    let o = job(r#"{"subcommand":"binary","payload":{"f":["1","0","-1"],"g":["1","0","-4"],"method":"bezout"}}"#);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-9\n");
}

#[test]
fn job_errors_have_distinct_messages() {
    let malformed = job(r#"{"subcommand": "#);
    let bad_payload = job(r#"{"subcommand":"binary","payload":{"h":["1"]}}"#);
    let bad_job = job(r#"{"subcommand":"nope"}"#);
    let combo = job(r#"{"subcommand":"binary","payload":{"f":["1","0"],"g":["0","1"]},"options":{"format":"csv"}}"#);
    let msgs: Vec<String> = [&malformed, &bad_payload, &bad_job, &combo]
        .iter()
        .map(|o| {
            assert_eq!(o.status.code(), Some(2));
            String::from_utf8_lossy(&o.stderr).into_owned()
        })
        .collect();
    assert!(msgs[0].contains("malformed JSON"));
    assert!(msgs[1].contains("schema violation in binary payload"));
    assert!(msgs[2].contains("schema violation in job"));
    assert!(msgs[3].contains("unsupported parameter combination"));
}

#[test]
fn identical_jobs_give_identical_bytes() {
    let spec = r#"{"subcommand":"verify","payload":{"suite":"hyper","gmax":1,"kmax":3},"options":{"seed":7,"trials":5,"format":"json"}}"#;
    let a = job(spec);
    let b = job(spec);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn env_prime_sets_suite_modulus() {
    let o = Command::new(env!("CARGO_BIN_EXE_chowkit"))
        .args(["verify", "ternary", "--trials", "5"])
        .env("CHOWKIT_PRIME", "1000003")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mod 1000003"));
}

#[test]
fn shipped_schemas_are_current() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas");
    for name in ["job", "binary", "ternary-quadrics", "hyper", "elliptic", "chow-det", "linear-matrix", "tables", "verify"] {
        let shipped = std::fs::read_to_string(dir.join(format!("{name}.schema.json"))).unwrap();
        assert_eq!(stdout(&chowkit(&["schema", name])), shipped, "{name}");
    }
}

#[test]
fn chow_det_from_matrix_file() {
    let dir = std::env::temp_dir().join(format!("chowkit-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rnc2.json");
    // the 2 x 2 catalecticant of the conic: [[x0, x1], [x1, x2]]
    std::fs::write(
        &path,
        r#"{"g":2,"f":2,"n":2,"entries":[[["1","0","0"],["0","1","0"]],[["0","1","0"],["0","0","1"]]]}"#,
    )
    .unwrap();
    let from_file = chowkit(&["chow-det", "--matrix-file", path.to_str().unwrap(), "--at", "1,2,3", "--at", "0,1,5"]);
    let built_in = chowkit(&["chow-det", "--rnc", "2", "--at", "1,2,3", "--at", "0,1,5"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&built_in));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn hyper_methods_and_oracle() {
    let base = ["hyper", "--g", "1", "--k", "2", "--f1", "2,-3,1", "--f2", "-12,4", "--a", "1,2,3", "--b", "1", "--c", "0,1,-1", "--d", "2"];
    let syl = chowkit(&base);
    assert_eq!(syl.status.code(), Some(0));
    let mut args = base.to_vec();
    args.extend(["--oracle", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&chowkit(&args).stdout).unwrap();
    assert_eq!(v["common_zero"], false);
    assert_eq!(format!("{}\n", v["resultant"].as_str().unwrap()), stdout(&syl));
}

#[test]
fn tables_schur_grid() {
    let o = chowkit(&["tables", "schur", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cells"][3][3], "27");
}
