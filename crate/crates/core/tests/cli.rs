use std::process::Command;

use modrecip::cli::{run, EXIT_OK, EXIT_UNDEFINED, EXIT_USAGE};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("modrecip").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = invoke(args);
    (code, serde_json::from_str(&out).expect("valid JSON"))
}

#[test]
fn golden_fixtures_match_byte_for_byte() {
    let cases: [(&[&str], &str); 4] = [
        (
            &["inv", "7", "22", "--json"],
            include_str!("golden/inv_7_22.json"),
        ),
        (
            &["inv", "7", "1", "--json"],
            include_str!("golden/inv_7_1.json"),
        ),
        (
            &["reduce", "7", "1", "3", "--json"],
            include_str!("golden/reduce_7_1_3.json"),
        ),
        (
            &["recip", "5", "1", "--json"],
            include_str!("golden/recip_5_1.json"),
        ),
    ];
    for (args, golden) in cases {
        for _ in 0..2 {
            let (code, out, _) = invoke(args);
            assert_eq!(code, EXIT_OK, "{args:?}");
            assert_eq!(out, golden, "{args:?}");
        }
    }
}

#[test]
fn inv_text_forms() {
    assert_eq!(invoke(&["inv", "7", "22"]).1, "19\n");
    assert_eq!(
        invoke(&["inv", "7", "1", "--classical"]).1,
        "1 (classical: 0)\n"
    );
    assert_eq!(invoke(&["inv", "3", "-5"]).1, "-3\n");
    assert_eq!(
        invoke(&["inv", "-0x7", "22", "--method", "reciprocity"]).1,
        "3\n"
    );
    assert_eq!(
        invoke(&["inv", "5", "-7", "--method", "brute-force"]).1,
        "-4\n"
    );
    assert_eq!(invoke(&["classical-inv", "7", "1"]).1, "0\n");
    assert_eq!(invoke(&["classical-inv", "3", "-5"]).1, "2\n");
}

#[test]
fn inv_json_reports_method() {
    let (code, v) = json(&["inv", "3", "5", "--json", "--method", "reciprocity"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["inverse"], "2");
    assert_eq!(v["classical"], "2");
    assert_eq!(v["method"], "reciprocity");
}

#[test]
fn undefined_inverse_exits_2_with_reason() {
    let (code, _, err) = invoke(&["inv", "2", "4"]);
    assert_eq!(code, EXIT_UNDEFINED);
    assert!(err.contains("NotCoprime"), "{err}");

    let (code, v) = json(&["inv", "0", "4", "--json"]);
    assert_eq!(code, EXIT_UNDEFINED);
    assert_eq!(v["error"], "ZeroOperand");

    let (code, v) = json(&["reduce", "1", "2", "3", "--json"]);
    assert_eq!(code, EXIT_UNDEFINED);
    assert_eq!(v["error"], "DomainError");
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(invoke(&["inv", "x", "3"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["inv", "3"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(
        invoke(&["bench", "--bits", "32", "--iters", "1"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        invoke(&["bench", "--bits", "64", "--iters", "0"]).0,
        EXIT_USAGE
    );
    assert_eq!(invoke(&["verify", "--bound", "1"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["gauss-inv", "1+", "2+1i"]).0, EXIT_USAGE);
    assert_eq!(
        invoke(&["inv", "3", "0x200001", "--method", "brute-force"]).0,
        EXIT_USAGE
    );
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn recip_reports_identity() {
    let (code, out, _) = invoke(&["recip", "3", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("lhs=16 rhs=16 k=1"), "{out}");
    let (_, out, _) = invoke(&["recip", "5", "1"]);
    assert!(out.contains("lhs=6 rhs=6 k=1"), "{out}");
    let (_, out, _) = invoke(&["recip", "-3", "-5"]);
    assert!(out.contains("lhs=16 rhs=16 k=1"), "{out}");
    assert_eq!(invoke(&["recip", "4", "6"]).0, EXIT_UNDEFINED);
}

#[test]
fn corollary_commands() {
    let (_, v) = json(&["reduce", "3", "2", "2", "--minus", "--json"]);
    assert_eq!(
        (v["modulus"].as_str(), v["formula"].as_str()),
        (Some("4"), Some("3"))
    );
    assert_eq!(invoke(&["square-inv", "3", "2"]).1, "(4⁻¹)_9 = 7\n");

    let (code, v) = json(&["quad", "3", "2", "1", "2", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["x"][0], "5");
    assert_eq!(v["y"][2], "-3");
    assert_eq!(v["sums"], Value::Null);

    let (code, v) = json(&["sums", "3", "2", "1", "2", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["sums"]["inv_s_mod_u"], "6");
    assert_eq!(v["sums"]["inv_t_mod_v"], "1");
}

#[test]
fn gaussian_commands() {
    let (code, out, _) = invoke(&["gauss-inv", "1+1i", "2+1i"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "representative 3-3i\ncanonical -1\n");

    let (_, v) = json(&["gauss-inv", "2+1i", "1+1i", "--json"]);
    assert_eq!(v["representative"], "2-1i");
    assert_eq!(v["identity_holds"], true);

    let (code, v) = json(&["gauss-inv", "1+2i", "3+4i", "--json"]);
    assert_eq!(code, EXIT_UNDEFINED);
    assert_eq!(v["error"], "NotCoprime");

    assert_eq!(invoke(&["gauss-inv", "2", "1+1i"]).0, EXIT_UNDEFINED);
    assert_eq!(invoke(&["gauss-inv", "-1-1i", "-2 + 1i"]).0, EXIT_OK);
    assert_eq!(invoke(&["gauss-linear-inv", "7", "1"]).1, "1+6i\n");
}

#[test]
fn verify_small_and_classical() {
    let (code, out, _) = invoke(&["verify", "--bound", "2"]);
    assert_eq!(code, EXIT_OK, "{out}");

    let (code, v) = json(&[
        "verify",
        "--bound",
        "16",
        "--use-classical-unit-inverse",
        "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    for suite in v["suites"].as_array().unwrap() {
        assert!(suite["failures"].as_u64().unwrap() > 0);
        assert_eq!(suite["failures"], suite["expected_failures"]);
        assert_eq!(suite["mismatches"], 0);
    }
}

#[test]
fn verify_reads_config_file() {
    let dir = std::env::temp_dir().join(format!("modrecip-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.toml");
    std::fs::write(&path, "bound = 4\nk_bound = 2\nshard_count = 1\n").unwrap();
    let (code, v) = json(&["verify", "--config", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["passed"], true);

    std::fs::write(&path, "bound = oops\n").unwrap();
    assert_eq!(
        invoke(&["verify", "--config", path.to_str().unwrap()]).0,
        EXIT_USAGE
    );
    assert_eq!(
        invoke(&["verify", "--config", "/nonexistent/sweep.toml"]).0,
        EXIT_USAGE
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bench_reports_agreement_and_seed() {
    let (code, v) = json(&[
        "bench", "--bits", "64", "--iters", "5", "--seed", "42", "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["agreement_count"], 5);
    assert_eq!(v["iterations"], 5);
    assert_eq!(v["seed"], 42);
    let (_, out, _) = invoke(&["bench", "--bits", "64", "--iters", "1", "--seed", "1"]);
    assert!(out.contains("agreement: 1/1"), "{out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_modrecip");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["inv", "7", "22"]);
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "19\n");
    assert_eq!(
        status(&["inv", "2", "4"]).status.code(),
        Some(EXIT_UNDEFINED)
    );
    assert_eq!(status(&["inv"]).status.code(), Some(EXIT_USAGE));
}
