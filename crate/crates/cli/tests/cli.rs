use std::process::Command;

use serde_json::Value;

fn run(args: &str) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_yangian"))
        .args(args.split_whitespace())
        .env_remove("YANGIAN_MAX_SIZE")
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exit code");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

fn factors(v: &Value) -> Vec<i64> {
    v["factors"]
        .as_array()
        .expect("factored polynomial")
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect()
}

#[test]
fn verify_suites_pass() {
    for args in [
        "verify sylvester --m 2 --n 3",
        "verify rtt --n 2 --s 3",
        "verify comatrix --n 3 --m 2",
        "verify minors --n 3",
        "verify centralizer --m 1 --n 3",
        "verify transvector --lambda 1,1 --m 1 --n 3",
    ] {
        let (code, json) = run(args);
        assert_eq!(code, 0, "{args}");
        assert_eq!(json["ok"], true, "{args}");
        assert!(!json["checks"].as_array().unwrap().is_empty(), "{args}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run("verify sylvester --m 5 --n 3").0, 2);
    assert_eq!(run("verify nonsense --n 3").0, 2);
    assert_eq!(run("drinfeld --lambda 1,2 --n 2").0, 2);
    assert_eq!(run("verify sylvester --n 3").0, 2);
}

#[test]
fn flagship_drinfeld() {
    let start = std::time::Instant::now();
    let (code, json) = run("drinfeld --lambda 10,8,5,4,2 --mu 6,3 --n 3");
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert_eq!(code, 0);
    let d = json["data"]["drinfeld"].as_array().unwrap();
    assert_eq!(factors(&d[0]), vec![4, 8, 9]);
    assert_eq!(factors(&d[1]), vec![0, 3, 6, 7]);
    assert_eq!(d[0]["text"], "(u+4)(u+8)(u+9)");
    assert_eq!(d[1]["text"], "u(u+3)(u+6)(u+7)");
    let nu: Vec<Vec<u64>> = serde_json::from_value(json["data"]["nu"].clone()).unwrap();
    assert_eq!(nu, vec![vec![10, 8, 6], vec![6, 5, 4], vec![3, 3, 2]]);
}

#[test]
fn small_drinfeld_cases() {
    let (code, json) = run("drinfeld --lambda 2,1 --mu 1 --n 2");
    assert_eq!(code, 0);
    assert_eq!(factors(&json["data"]["drinfeld"][0]), vec![-1, 1]);
    let (code, json) = run("drinfeld --lambda 1 --mu 1 --n 1");
    assert_eq!(code, 0);
    assert!(json["data"]["drinfeld"].as_array().unwrap().is_empty());
    let (code, json) = run("drinfeld --lambda 1,1,1 --mu 1 --n 1");
    assert_eq!(code, 1);
    assert!(json["error"].as_str().unwrap().contains("inadmissible"));
}

#[test]
fn elementary_word_and_full_runs() {
    let (code, json) = run("elementary --lambda 10,8,5,4,2 --mu 6,3 --m 2 --n 3");
    assert_eq!(code, 0);
    assert_eq!(json["data"]["zeta_word"], "(s_41)^2 (s_31)^2 s_52 s_42 (s_32)^3");
    for args in [
        "elementary --lambda 2,1 --mu 1 --m 1 --n 2 --full",
        "elementary --lambda 3 --mu 1 --m 1 --n 1 --full",
    ] {
        let (code, json) = run(args);
        assert_eq!(code, 0, "{args}");
        assert_eq!(json["ok"], true);
    }
    let (code, json) = run("elementary --lambda 10,8,5,4,2 --mu 6,3 --m 2 --n 3 --full");
    assert_eq!(code, 1);
    assert!(json["error"].as_str().unwrap().contains("too large"));
}

#[test]
fn capelli_reports_eigenvalue() {
    let (code, json) = run("capelli --lambda 2,1 --n 3");
    assert_eq!(code, 0);
    assert_eq!(factors(&json["data"]["expected"]), vec![-2, 0, 2]);
    assert_eq!(json["data"]["measured"], json["data"]["expected"]);
}

#[test]
fn seed_is_echoed_and_reports_are_deterministic() {
    let (_, a) = run("verify rtt --n 2 --s 2 --seed 7");
    let (_, b) = run("verify rtt --n 2 --s 2 --seed 7");
    assert!(a["command"].as_str().unwrap().contains("--seed 7"));
    assert_eq!(a["checks"], b["checks"]);
    let names: Vec<&str> = a["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
}

#[test]
fn size_guard_flag() {
    let (code, _) = run("elementary --lambda 2,1 --mu 1 --m 1 --n 2 --full --max-size 10");
    assert_eq!(code, 1);
}
