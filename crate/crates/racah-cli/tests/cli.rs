use std::process::{Command, Output};

use racah::exactnum::rat;
use racah::racah1::{racah1_eval, Su11Weights};
use serde_json::Value;

fn racah(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_racah")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval1_degree_zero() {
    let o = racah(&["eval1", "--nu", "1,1,1", "--N", "3", "--n", "0", "--x", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn eval2_degree_zero() {
    let o = racah(&["eval2", "--nu", "1,1,1,1", "--N", "2", "--n", "0,0", "--x", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn eval1_matches_library() {
    let w = Su11Weights::new(vec![rat(3, 4), rat(5, 6), rat(7, 8)]).unwrap();
    let expect = racah1_eval(2, 3, &w.params1(4).unwrap()).unwrap();
    let o = racah(&["eval1", "--nu", "3/4,5/6,7/8", "--N", "4", "--n", "2", "--x", "3"]);
    assert_eq!(stdout(&o).trim(), expect.to_string());
}

/// Every printed form holds except the closed β-form of e₁, which only the corrected form matches.
#[test]
fn verify_qr3_json() {
    let o = racah(&["verify-qr3", "--nu", "3/4,5/6,7/8", "--N", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["command"], "verify-qr3");
    assert_eq!(j["params"]["nu"], serde_json::json!(["3/4", "5/6", "7/8"]));
    assert_eq!(j["params"]["N"], 4);
    let results = j["results"].as_array().unwrap();
    assert!(!results.is_empty());
    for r in results {
        if r["relationId"] == "qr3.constant.e1" {
            assert_eq!(r["printedFormHolds"], false);
            assert_eq!(r["correctedFormHolds"], true);
        } else {
            assert_eq!(r["printedFormHolds"], true, "{r}");
        }
    }
}

#[test]
fn table1_csv() {
    let o = racah(&["table1", "--nu", "3/4,5/6,7/8", "--N", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n\\x,0,1,2,3");
    assert_eq!(lines[1], "0,1,1,1,1");
    assert_eq!(lines.len(), 5);
    let w = Su11Weights::new(vec![rat(3, 4), rat(5, 6), rat(7, 8)]).unwrap();
    let p = w.params1(3).unwrap();
    let row2: Vec<String> = (0..=3).map(|x| racah1_eval(2, x, &p).unwrap().to_string()).collect();
    assert_eq!(lines[3], format!("2,{}", row2.join(",")));
}

#[test]
fn table2_csv_labels() {
    let o = racah(&["table2", "--nu", "3/5,3/4,1,7/6", "--N", "1", "--format", "csv"]);
    let text = stdout(&o);
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["n\\x", "(0,0)", "(0,1)", "(1,1)"]);
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[0][0], "(0,0)");
    assert!(rows[0].iter().skip(1).all(|c| c == "1"));
}

#[test]
fn pole_packs_exit_3() {
    // ν₁+ν₂ = 1/2 puts a pole on the grid.
    let o = racah(&["eval1", "--nu", "1/4,1/4,1", "--N", "2", "--n", "0", "--x", "0"]);
    assert_eq!(o.status.code(), Some(3));
    // ν₁ = 1 makes the normalizer vanish at total degree 2.
    let o = racah(&["table2", "--nu", "1,1,1,1", "--N", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = racah(&["verify-duality", "--nu", "1/4,1/4,1,1", "--N", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eval1", "--nu", "1,1", "--N", "2", "--n", "0", "--x", "0"][..],
        &["eval1", "--nu", "one,1,1", "--N", "2"],
        &["eval2", "--nu", "1,1,1,1", "--N", "2", "--n", "0", "--x", "1,2"],
        &["table1", "--nu", "1,1,1"],
        &["verify-qr3", "--nu", "1,1,1", "--N", "0"],
        &["verify-qr3", "--bogus"],
        &["frobnicate"],
    ] {
        assert_eq!(racah(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table2", "--nu", "3/5,3/4,1,7/6", "--N", "3", "--format", "json"][..],
        &["verify-casimir", "--nu", "3/4,1,7/6,3/2", "--N", "2", "--format", "json"],
        &["verify-orthogonality", "--N", "2", "--format", "csv"],
    ] {
        let a = racah(args);
        let b = racah(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn out_flag_writes_the_artifact() {
    let dir = std::env::temp_dir().join(format!("racah-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    let args = ["table1", "--nu", "3/4,5/6,7/8", "--N", "2", "--format", "json"];
    let direct = racah(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o = racah(&with_out);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn battery_mode_covers_every_pack() {
    let o = racah(&["verify-duality", "--N", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    let runs = j.as_array().unwrap();
    assert_eq!(runs.len(), 5);
    assert!(runs.iter().all(|r| r["params"]["N"] == 2 && r["params"]["nu"].as_array().unwrap().len() == 4));
}

#[test]
fn weights_json() {
    let o = racah(&["weights", "--nu", "3/4,5/6,7/8", "--N", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    let omega = j["results"]["omega"].as_array().unwrap();
    assert_eq!(omega.len(), 3);
    assert_eq!(omega[0]["value"], "1");
    assert_eq!(j["results"]["sigma"].as_array().unwrap().len(), 3);
}
