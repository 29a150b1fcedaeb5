use std::process::{Command, Output};

use harmonic_bounds::bounds::residual_via_digamma;
use harmonic_bounds::exact::{parse_rational, rat, Rational};
use serde_json::Value;

fn hbounds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbounds")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hbounds(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn q(v: &Value) -> Rational {
    parse_rational(v.as_str().expect("decimal string")).unwrap()
}

#[test]
fn gamma_with_one_term() {
    let v = json(&["gamma", "--n", "1", "--q", "1"]);
    assert!(q(&v["gamma"]["lo"]) <= rat(5, 12));
    assert!(q(&v["gamma"]["hi"]) >= rat(7, 12));
    assert!(q(&v["gamma"]["lo"]) > rat(41, 100));
}

#[test]
fn gamma_json_schema() {
    let v = json(&["gamma", "--n", "10", "--q", "3"]);
    let obj = v.as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    assert_eq!(keys, ["gamma", "n", "q", "method"]);
    assert_eq!(v["n"], 10);
    assert_eq!(v["q"], 3);
    assert_eq!(v["method"], "euler_maclaurin");
    let g = v["gamma"].as_object().unwrap();
    assert_eq!(g.len(), 2);
    assert!(q(&g["lo"]) < q(&g["hi"]));
}

#[test]
fn gamma_default_encloses_digits() {
    let v = json(&["gamma", "--n", "100", "--q", "8"]);
    // the digits are a 17-place truncation; the enclosure must sit in that cell
    let d = parse_rational("0.57721566490153286").unwrap();
    let ulp = parse_rational("1e-17").unwrap();
    assert!(q(&v["gamma"]["lo"]) >= d && q(&v["gamma"]["hi"]) <= d + ulp);
}

#[test]
fn sharp_bounds_at_one() {
    let v = json(&["bounds", "--n", "1", "--family", "sharp"]);
    let b = &v["bounds"][0];
    assert_eq!(b["upper_exact"], "3/7");
    assert_eq!(b["lower_strict"], false);
    let oracle = residual_via_digamma(1, &parse_rational("1e-30").unwrap(), 192).unwrap();
    assert!(q(&b["lower"]["lo"]) <= oracle.lo_rational());
    assert!(q(&b["lower"]["hi"]) >= oracle.hi_rational());
}

#[test]
fn phi_two() {
    let v = json(&["phi", "--x", "2"]);
    let (lo, hi) = (q(&v["phi"]["lo"]), q(&v["phi"]["hi"]));
    assert!(&hi - &lo <= parse_rational("2e-20").unwrap());
    let d = parse_rational("0.35469600731465752").unwrap();
    assert!(lo >= d && hi <= d + parse_rational("1e-17").unwrap());
}

#[test]
fn residual_is_outward() {
    for n in [1u64, 7, 1000] {
        let v = json(&["residual", "--n", &n.to_string()]);
        let oracle = residual_via_digamma(n, &parse_rational("1e-35").unwrap(), 256).unwrap();
        assert!(q(&v["residual"]["lo"]) <= oracle.hi_rational());
        assert!(q(&v["residual"]["hi"]) >= oracle.lo_rational());
    }
}

#[test]
fn table_csv_and_json_agree() {
    let csv = stdout(&["table", "--from", "1", "--to", "6", "--format", "csv"]);
    let rows = json(&["table", "--from", "1", "--to", "6"]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,residual_lo,residual_hi,franel_lo,franel_hi,tm_lo,tm_hi,sharp_lo_lo,sharp_lo_hi,sharp_hi,phi_lo,phi_hi"
    );
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for (line, row) in lines.zip(rows) {
        let s = |v: &Value| v.as_str().unwrap().to_string();
        let expected = [
            row["n"].to_string(),
            s(&row["residual"]["lo"]),
            s(&row["residual"]["hi"]),
            s(&row["franel"][0]),
            s(&row["franel"][1]),
            s(&row["toth_mare"][0]),
            s(&row["toth_mare"][1]),
            s(&row["sharp"][0]["lo"]),
            s(&row["sharp"][0]["hi"]),
            s(&row["sharp"][1]["hi"]),
            s(&row["phi"]["lo"]),
            s(&row["phi"]["hi"]),
        ];
        assert_eq!(line, expected.join(","));
    }
}

#[test]
fn table_rows_are_ordered() {
    let rows = json(&["table", "--from", "1", "--to", "20"]);
    for row in rows.as_array().unwrap() {
        let r = (q(&row["residual"]["lo"]), q(&row["residual"]["hi"]));
        assert!(q(&row["franel"][0]) < r.0 && r.1 < q(&row["franel"][1]));
        assert!(q(&row["toth_mare"][0]) < r.0 && r.1 < q(&row["toth_mare"][1]));
        assert!(q(&row["sharp"][0]["lo"]) <= r.1 && r.1 < q(&row["sharp"][1]["hi"]));
        assert!(q(&row["phi"]["lo"]) > rat(1, 3));
    }
}

#[test]
fn verify_theorem_to_1e5_exits_zero() {
    let out = hbounds(&["verify", "theorem", "--from", "1", "--to", "100000"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_suites_pass() {
    for suite in ["phi-monotone", "phi-derivative", "series", "integrands", "brackets", "ordering"] {
        let v = json(&["verify", suite, "--to", "300", "--samples", "40", "--n-max", "500"]);
        assert_eq!(v["status"], "pass", "{suite}: {v}");
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        vec!["gamma", "--bogus"],
        vec!["--bits", "8", "gamma"],
        vec!["gamma", "--n", "0"],
        vec!["table", "--from", "5", "--to", "2"],
        vec!["phi", "--x=-1"],
        vec!["residual", "--n", "3", "--width", "abc"],
        vec!["residual", "--n", "3", "--width", "0"],
        vec!["verify", "nope"],
        vec!["bounds", "--n", "2", "--family", "other"],
        vec![],
    ] {
        assert_eq!(hbounds(&args).status.code(), Some(64), "{args:?}");
    }
    assert_eq!(hbounds(&["--help"]).status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hbounds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    let out = hbounds(&["gamma", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["method"], "euler_maclaurin");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn width_is_parsed_exactly() {
    let v = json(&["residual", "--n", "2", "--width", "1/1000000000000"]);
    let w = q(&v["residual"]["hi"]) - q(&v["residual"]["lo"]);
    assert!(w <= parse_rational("1e-12").unwrap() + parse_rational("1e-24").unwrap());
}
