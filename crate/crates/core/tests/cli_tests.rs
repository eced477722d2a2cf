use faclr::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["faclr"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn single_coefficient_text() {
    let (code, out, _) = call(&[
        "lrcoef", "--theta", "1", "--mu", "1", "--nu", "1", "--n", "2", "--engine", "tableau",
        "--a", "symbolic", "--b", "symbolic",
    ]);
    assert_eq!(code, 0);
    let got: faclr::MultiPoly = out.trim().parse().unwrap();
    assert_eq!(
        got,
        "(a3 - b1) + (a1 - b2)"
            .replace(['(', ')'], "")
            .parse()
            .unwrap()
    );
}

#[test]
fn engines_agree_through_cli() {
    let base = [
        "lrcoef", "--theta", "2,1", "--mu", "1", "--nu", "2,2", "--n", "3", "--a", "shifted",
        "--b", "shifted",
    ];
    let mut seen = Vec::new();
    for engine in ["tableau", "recurrence", "hook", "oracle"] {
        let mut args = base.to_vec();
        args.extend(["--engine", engine]);
        let (code, out, err) = call(&args);
        assert_eq!(code, 0, "{engine}: {err}");
        seen.push(out);
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]), "{seen:?}");
}

#[test]
fn json_carries_schema_and_fields() {
    let (code, out, _) = call(&[
        "lrcoef", "--theta", "3,2/1", "--mu", "0", "--nu", "2,1", "--n", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["theta"], "3,2/1");
    assert_eq!(v["mu"], "0");
    assert_eq!(v["engine"], "tableau");
    assert!(v["value"]["terms"].is_array());
}

#[test]
fn verify_vanishing_succeeds() {
    let (code, out, _) = call(&["verify", "--suite", "vanishing", "--box", "3x3", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("vanishing: "));
}

#[test]
fn fs_table_has_agreement_column() {
    let (code, out, _) = call(&[
        "table", "--fs", "--box", "2x2", "--n", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["agree"] == true));
    assert!(rows
        .iter()
        .any(|r| r["lambda"] == "1" && r["mu"] == "1" && r["nu"] == "1" && r["hook"] == "1"));
}

#[test]
fn table_kinds_are_exclusive() {
    let (code, _, err) = call(&["table", "--fs", "--classical"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&[]).0, 2);
    assert_eq!(
        call(&["lrcoef", "--theta", "1", "--mu", "x", "--nu", "1"]).0,
        2
    );
    assert_eq!(
        call(&["lrcoef", "--theta", "1", "--mu", "1,1,1", "--nu", "1", "--n", "2"]).0,
        2
    );
    assert_eq!(call(&["verify", "--suite", "bogus"]).0, 2);
    assert_eq!(
        call(&["lrcoef", "--theta", "1", "--mu", "1", "--nu", "1", "--engine", "hook"]).0,
        2
    );
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn guardrail_requires_force() {
    let args = [
        "lrcoef", "--theta", "4,4,4,4", "--mu", "0", "--nu", "4,4,4,4", "--n", "8", "--a",
        "shifted", "--b", "shifted",
    ];
    let (code, _, err) = call(&args);
    assert_eq!(code, 2);
    assert!(err.contains("warning"));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &[
            "table",
            "--classical",
            "--box",
            "3x3",
            "--n",
            "3",
            "--format",
            "csv",
        ][..],
        &[
            "verify", "--suite", "hh", "--box", "2x2", "--n", "2", "--seed", "7", "--format",
            "json",
        ][..],
        &["bench", "--samples", "4", "--seed", "5"][..],
    ] {
        let strip = |s: String| -> String {
            s.lines()
                .map(|l| {
                    if args[0] == "bench" {
                        l.rsplitn(3, ',').nth(2).unwrap_or(l).to_string()
                    } else {
                        l.to_string()
                    }
                })
                .collect::<Vec<_>>()
                .join("\n")
        };
        let (c1, o1, _) = call(args);
        let (c2, o2, _) = call(args);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(strip(o1), strip(o2), "{args:?}");
    }
}

#[test]
fn jobs_do_not_change_output() {
    let one = call(&["table", "--fs", "--box", "2x2", "--n", "2", "--jobs", "1"]);
    let four = call(&["table", "--fs", "--box", "2x2", "--n", "2", "--jobs", "4"]);
    assert_eq!(one, four);
    assert_eq!(call(&["table", "--jobs", "0"]).0, 2);
}

#[test]
fn bench_reports_csv_rows() {
    let (code, out, _) = call(&["bench", "--samples", "3", "--box", "2x2", "--n", "2"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("engine,theta,mu,nu,n,micros,terms"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("faclr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("schur.json");
    let (code, out, _) = call(&[
        "schur",
        "--lambda",
        "2,1",
        "--n",
        "2",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn facschur_routes_agree() {
    let det = call(&["facschur", "--lambda", "2,1", "--n", "3", "--route", "det"]);
    let tab = call(&[
        "facschur", "--lambda", "2,1", "--n", "3", "--route", "tableau",
    ]);
    assert_eq!(det.0, 0);
    assert_eq!(det.1, tab.1);
    assert_eq!(
        call(&["facschur", "--lambda", "2,1/1", "--route", "det"]).0,
        2
    );
}
