use std::process::{Command, Output};

fn porc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_porc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sweep_first_primes() {
    let o = porc(&["sweep", "--min", "5", "--max", "13", "--no-timing"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "p,class12,a,b,a_mod3,quartic360_root,octic_root,v_p,ec_naive,ec_formula,s_size,group_order,dp_formula,dp_burnside,dp_brute"
    );
    let dp: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(12).unwrap()).collect();
    assert_eq!(dp, ["12", "34", "30", "52"]);
}

#[test]
fn sweep_with_timing_has_the_extra_column() {
    let o = porc(&["sweep", "--min", "5", "--max", "7"]);
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().ends_with(",dp_brute,elapsed_ms"));
    assert_eq!(text.lines().nth(1).unwrap().split(',').count(), 16);
}

#[test]
fn sweep_json_single_row() {
    let o = porc(&["sweep", "--min", "5", "--max", "5", "--format", "json", "--no-timing"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["dp_formula"], 12);
    assert_eq!(rows[0]["a"], serde_json::Value::Null);
}

#[test]
fn brute_count_disabled() {
    let o = porc(&["sweep", "--min", "5", "--max", "200", "--brute-max", "0", "--no-timing", "--jobs", "2"]);
    assert!(o.status.success());
    for line in stdout(&o).lines().skip(1) {
        assert!(line.ends_with(",-1"), "{line}");
    }
}

#[test]
fn output_to_file() {
    let dir = std::env::temp_dir().join(format!("porc-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.csv");
    let o = porc(&["sweep", "--min", "11", "--max", "11", "--no-timing", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().nth(1).unwrap(), "11,11,,,,1,1,2,11,,6,60,30,30,30");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors() {
    assert_eq!(porc(&["verify", "4"]).status.code(), Some(1));
    assert_eq!(porc(&["verify", "3"]).status.code(), Some(1));
    assert_eq!(porc(&["sweep", "--min", "2", "--max", "10"]).status.code(), Some(1));
    assert_eq!(porc(&["sweep", "--max", "10", "--brute-max", "200"]).status.code(), Some(1));
    assert_eq!(porc(&["sweep"]).status.code(), Some(1));
    assert_eq!(porc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(porc(&["density", "--max", "50"]).status.code(), Some(1));
}

#[test]
fn verify_reports() {
    let o = porc(&["verify", "11"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("|S|=6"));
    assert!(!text.contains("FAIL"));
    let o = porc(&["verify", "13"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("V_p=0 branch"));
    let o = porc(&["verify", "7"]);
    assert!(stdout(&o).contains("PASS block-preserving automorphism search: 72 found"));
}

#[test]
fn density_and_witnesses() {
    let o = porc(&["density", "--max", "100", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n_1mod12"], 5);
    assert_eq!(v["n_both"], 1);
    assert_eq!(v["frac_both"], "1/5");
    let o = porc(&["subcong", "--d", "1", "--max", "10000", "--format", "csv"]);
    assert_eq!(stdout(&o), "d,modulus,c,witness_vp_positive,witness_vp_zero\n1,12,1,61,13\n");
    let o = porc(&["subcong", "--d", "1", "--max", "20", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "1,12,1,,13");
}

#[test]
fn covering_dimensions_and_dump() {
    for p in ["5", "101"] {
        let o = porc(&["covering", p]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "dim=23 nucleus=2\n");
    }
    let o = porc(&["covering", "7", "--dump"]);
    let text = stdout(&o);
    let body = text.split_once('\n').unwrap().1;
    let m = porc_core::lie::parse_dump(body).unwrap();
    assert_eq!(m.dim(), 23);
    assert_eq!(porc_core::lie::dump(&m), body);
}
