use serde_json::Value;
use yangian_web::{capelli_json, drinfeld_json, normal_order_json, parse_word};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).expect("valid JSON")
}

#[test]
fn drinfeld_flagship() {
    let r = parse(drinfeld_json("10,8,5,4,2", "6,3", 3, 0));
    assert_eq!(r["ok"], true);
    let d = &r["data"];
    assert_eq!(d["drinfeld"][0]["text"], "(u+4)(u+8)(u+9)");
    assert_eq!(d["drinfeld"][1]["text"], "u(u+3)(u+6)(u+7)");
    assert_eq!(d["drinfeld_agree"], true);
    assert_eq!(d["cells"].as_array().unwrap().len(), 29 - 9);
}

#[test]
fn drinfeld_errors_are_json() {
    let r = parse(drinfeld_json("1,1,1", "1", 1, 0));
    assert!(r["error"].as_str().unwrap().contains("inadmissible"));
    let r = parse(drinfeld_json("x", "", 1, 0));
    assert!(r["error"].is_string());
}

#[test]
fn capelli_matches_expected() {
    let r = parse(capelli_json("2,1", 3));
    assert_eq!(r["ok"], true);
    assert_eq!(r["data"]["measured"], r["data"]["expected"]);
    assert_eq!(r["data"]["expected"]["text"], "(u-2)u(u+2)");
}

#[test]
fn normal_order_commutator() {
    let r = parse(normal_order_json("E12 E21", 2));
    let a = parse(normal_order_json("E[2,1]*E[1,2]", 2));
    assert_eq!(r["terms"].as_array().unwrap().len(), 1);
    assert_eq!(a["terms"].as_array().unwrap().len(), 3);
    assert!(parse(normal_order_json("E12", 7))["error"].is_string());
    assert!(parse(normal_order_json("E11 E11 E11 E11 E11 E11 E11 E11 E11", 2))["error"].is_string());
}

#[test]
fn word_parser() {
    assert_eq!(parse_word("E12 e[3, 1]").unwrap().len(), 2);
    assert!(parse_word("F12").is_err());
    assert!(parse_word("E1").is_err());
    assert!(parse_word("").unwrap().is_empty());
}
