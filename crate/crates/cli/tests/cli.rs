use std::process::{Command, Output};

use serde_json::Value;

fn tori(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tori"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn unitary_example_shows_the_corollary_form() {
    let out = tori(&[
        "decompose",
        "--q",
        "2",
        "--eps",
        "-1",
        "--partition",
        "3,6,6,9",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("Z3 x Z63 x Z63 x Z513"), "{text}");
    assert!(text.contains("SU_24(2)"));
    assert!(text.contains("all paths isomorphic"));
}

#[test]
fn su_alias_matches_eps_minus_one() {
    let a = tori(&["decompose", "--q", "3", "--su", "--partition", "4,2"]);
    let b = tori(&["decompose", "--q", "3", "--eps", "-1", "--partition", "4,2"]);
    assert_eq!(stdout(&a), stdout(&b));
    let c = tori(&["decompose", "--q", "3", "--sl", "--partition", "4,2"]);
    let d = tori(&["decompose", "--q", "3", "--partition", "4,2"]);
    assert_eq!(stdout(&c), stdout(&d));
}

#[test]
fn projective_single_part_is_cyclic() {
    let out = tori(&[
        "decompose",
        "--q",
        "2",
        "--eps",
        "1",
        "--partition",
        "10",
        "--projective",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("d=1"), "{text}");
    assert!(text.contains("Z1023"));
}

#[test]
fn partition_one_is_trivial() {
    let out = tori(&[
        "decompose",
        "--q",
        "2",
        "--eps",
        "1",
        "--partition",
        "1",
        "--method",
        "chain",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let line = text.lines().find(|l| l.starts_with("chain")).unwrap();
    assert_eq!(line.split_whitespace().nth(1), Some("1"));
}

#[test]
fn json_schema() {
    let out = tori(&[
        "decompose",
        "--q",
        "7",
        "--partition",
        "5,5",
        "--projective",
        "--method",
        "chain",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "family",
            "q",
            "eps",
            "partition",
            "projective",
            "method",
            "factors",
            "order"
        ]
    );
    assert_eq!(v["family"], "PSL");
    assert_eq!(v["eps"], 1);
    assert_eq!(v["projective"], true);
    assert_eq!(v["factors"], serde_json::json!([2801, 8403]));
    assert_eq!(v["order"], "23536803");
}

#[test]
fn json_factors_beyond_64_bits_stay_exact() {
    let out = tori(&[
        "decompose",
        "--q",
        "1000003",
        "--partition",
        "7",
        "--method",
        "chain",
        "--format",
        "json",
    ]);
    let text = stdout(&out);
    // (q^7 - 1) / (q - 1) for q = 1000003
    let want = "1000019000151000643001549002005001093";
    assert!(text.contains(&format!("\"factors\":[{want}]")), "{text}");
    assert!(text.contains(&format!("\"order\":\"{want}\"")));
}

#[test]
fn all_methods_json_is_an_array() {
    let out = tori(&[
        "decompose",
        "--q",
        "2",
        "--su",
        "--partition",
        "3,6,6,9",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let methods: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["method"].as_str().unwrap())
        .collect();
    assert_eq!(methods[..2], ["chain", "canonical"]);
    assert!(methods.contains(&"corollary:cni1"));
}

#[test]
fn table_of_ten_matches_every_fixture_row() {
    for extra in [&[][..], &["--projective"][..], &["--eps", "-1"][..]] {
        let mut args = vec!["table", "--n", "10", "--q", "2", "--verify-canonical"];
        args.extend_from_slice(extra);
        let out = tori(&args);
        assert_eq!(code(&out), 0, "{extra:?}");
        let text = stdout(&out);
        assert!(
            text.contains("42 rows, 42 fixture matches, 0 mismatches, 0 invariant failures"),
            "{text}"
        );
    }
}

#[test]
fn table_json_rows() {
    let out = tori(&[
        "table", "--n", "5", "--q", "3", "--eps", "-1", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let rows: Vec<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 7);
    let first: Vec<u64> = rows[0]["partition"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(first, [5]);
    for r in &rows {
        assert_eq!(r["invariants_ok"], true);
        assert_eq!(r["fixture"], Value::Null);
    }
}

#[test]
fn table_of_one_is_trivial() {
    let out = tori(&["table", "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("1 rows"));
}

#[test]
fn table_flags_a_wrong_fixture() {
    let dir = std::env::temp_dir().join(format!("tori-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.tsv");
    std::fs::write(
        &path,
        "SL\t3\t[V^3-1]\nSL\t2,1\t[V^2-1]\nSL\t1^3\t[V-1]^3\n",
    )
    .unwrap();
    let out = tori(&[
        "table",
        "--n",
        "3",
        "--q",
        "3",
        "--fixtures",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("fixture MISMATCH"));
    std::fs::write(&path, "SL\t3\t[V^^3]\n").unwrap();
    assert_eq!(
        code(&tori(&[
            "table",
            "--n",
            "3",
            "--fixtures",
            path.to_str().unwrap()
        ])),
        2
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = [
        "verify",
        "--n-max",
        "7",
        "--q-set",
        "2,3,5",
        "--seed",
        "42",
        "--samples",
        "200",
    ];
    let a = tori(&args);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert!(stdout(&a).contains(" 0 failed"));
    let b = tori(&args);
    assert_eq!(stdout(&a), stdout(&b));
    let trivial = tori(&["verify", "--n-max", "1", "--samples", "10"]);
    assert_eq!(code(&trivial), 0);
}

#[test]
fn verify_covers_the_corpus_when_n_is_large_enough() {
    let out = tori(&["verify", "--n-max", "10", "--q-set", "2", "--samples", "10"]);
    assert_eq!(code(&out), 0);
    let line = stdout(&out)
        .lines()
        .find(|l| l.starts_with("fixture rows"))
        .unwrap()
        .to_string();
    // 84 table rows at one q and both signs
    assert!(line.contains(" 168 passed"), "{line}");
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(&tori(&["decompose", "--q", "1", "--partition", "3"])),
        2
    );
    assert_eq!(
        code(&tori(&["decompose", "--q", "2", "--partition", "3,x"])),
        2
    );
    assert_eq!(
        code(&tori(&[
            "decompose",
            "--q",
            "2",
            "--partition",
            "3",
            "--eps",
            "2"
        ])),
        2
    );
    assert_eq!(
        code(&tori(&[
            "decompose",
            "--q",
            "6",
            "--partition",
            "3",
            "--strict"
        ])),
        2
    );
    assert_eq!(
        code(&tori(&[
            "decompose",
            "--q",
            "9",
            "--partition",
            "3",
            "--strict"
        ])),
        0
    );
    assert_eq!(code(&tori(&["frobnicate"])), 2);
    let guard = tori(&[
        "decompose",
        "--q",
        "2",
        "--partition",
        "1^23",
        "--method",
        "canonical",
        "--canonical-method",
        "subsets",
    ]);
    assert_eq!(code(&guard), 3);
}

#[test]
fn bench_csv() {
    let out = tori(&["bench", "--s-max", "4", "--repeat", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,method,nanoseconds,input"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4 * 2 * 2);
    for r in &rows {
        assert_eq!(r.len(), 4);
        assert!(r[2].parse::<u128>().is_ok());
        assert!(["chain", "subsets"].contains(&r[1]));
    }
    let long = tori(&[
        "bench",
        "--s-max",
        "30",
        "--subsets-max",
        "3",
        "--repeat",
        "1",
    ]);
    let text = stdout(&long);
    assert!(text.lines().any(|l| l.starts_with("30,chain,")));
    assert!(text.lines().any(|l| l.starts_with("3,subsets,")));
    assert!(!text.lines().any(|l| l.starts_with("4,subsets,")));
}
