use std::process::Command;

use bracket_width::poly::{parse_fraction, parse_poly};
use bracket_width_cli::{parse_curve_spec, run, Command as Cmd, CurveSpec, Job};
use serde_json::Value;

fn bin(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_bracketwidth"))
        .args(args)
        .output()
        .expect("binary runs");
    let doc: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (doc, out.status.code().unwrap())
}

#[test]
fn plane_curve_tau_in_two_brackets() {
    let (doc, code) = bin(&[
        "decompose",
        "--curve",
        "plane y^2 - x^3 - x",
        "--target",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["status"], "ok");
    assert!(doc["length"].as_u64().unwrap() <= 2);
    assert_eq!(doc["verification"], true);
}

#[test]
fn cusp_is_rejected() {
    let (doc, code) = bin(&["check", "--curve", "plane y^2 - x^3"]);
    assert_eq!(code, 3);
    assert_eq!(doc["status"], "error");
    assert_eq!(doc["error"]["code"], "NotSmooth");
}

#[test]
fn punctured_line_one_bracket() {
    let (doc, code) = bin(&[
        "decompose",
        "--curve",
        "line minus x",
        "--target",
        "1 / x^2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["length"], 1);
    assert_eq!(doc["verification"], true);
}

#[test]
fn exit_codes() {
    let (doc, code) = bin(&[
        "decompose",
        "--curve",
        "plane y^2 - x^3 - x",
        "--target",
        "1.5",
    ]);
    assert_eq!((code, doc["error"]["code"].as_str()), (2, Some("Parse")));
    let (_, code) = bin(&["check", "--curve", "circle"]);
    assert_eq!(code, 2);
    let (doc, code) = bin(&[
        "check",
        "--curve",
        "plane y^2 - x^5 - x - 1",
        "--max-steps",
        "2",
    ]);
    assert_eq!(
        (code, doc["error"]["code"].as_str()),
        (4, Some("StepBudgetExceeded"))
    );
    let (doc, code) = bin(&["check", "--curve", "space y - x^2; z - x^3 tau 1, 2x, 0"]);
    assert_eq!(
        (code, doc["error"]["code"].as_str()),
        (3, Some("DoesNotPreserveIdeal"))
    );
}

#[test]
fn verify_accepts_and_rejects() {
    let ok = [
        "verify", "--curve", "line", "--target", "1", "--pair", "-x, 1",
    ];
    let (doc, code) = bin(&ok);
    assert_eq!((code, &doc["verification"]), (0, &Value::Bool(true)));

    let bad = [
        "verify", "--curve", "line", "--target", "1", "--pair", "x, 1",
    ];
    let (doc, code) = bin(&bad);
    assert_eq!(code, 3);
    assert_eq!(doc["verification"], false);
    assert_eq!(doc["error"]["code"], "VerificationFailed");

    let (doc, code) = bin(&["decompose", "--curve", "line", "--target", "-x^2"]);
    assert_eq!((code, doc["length"].as_u64()), (0, Some(1)));
}

#[test]
fn decompose_output_feeds_verify() {
    let curve = "space y - x^2; z - x^3 tau 1, 2x, 3x^2";
    let (doc, code) = bin(&["decompose", "--curve", curve, "--target", "x*y*z + 3y"]);
    assert_eq!(code, 0);
    assert!(doc["length"].as_u64().unwrap() <= 3);
    let mut args = vec![
        "verify".to_owned(),
        "--curve".into(),
        curve.into(),
        "--target".into(),
        doc["target"].as_str().unwrap().into(),
    ];
    for pair in doc["decomposition"].as_array().unwrap() {
        args.push("--pair".into());
        args.push(format!(
            "{}, {}",
            pair[0].as_str().unwrap(),
            pair[1].as_str().unwrap()
        ));
    }
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let (doc, code) = bin(&args);
    assert_eq!((code, &doc["verification"]), (0, &Value::Bool(true)));
}

#[test]
fn printed_polynomials_reparse() {
    let mut job = Job::new(Cmd::Decompose, "plane y^2 - x^5 + x - 2");
    job.target = Some("7/3*x^3*y - x + 1/2".into());
    job.trace = true;
    let (doc, code) = run(&job);
    assert_eq!(code, 0, "{:?}", doc.error);
    let mut texts: Vec<String> = doc.decomposition.unwrap().into_iter().flatten().collect();
    texts.extend(doc.trace.unwrap().steps.into_iter().map(|s| s.value));
    for t in texts {
        let p = parse_poly(&t).unwrap();
        assert_eq!(p.to_string(), t);
    }

    let mut job = Job::new(Cmd::Decompose, "line minus x^2 - 1");
    job.target = Some("(x^3 + 2)/(x^2 - 1)^3".into());
    let (doc, code) = run(&job);
    assert_eq!(code, 0);
    for t in doc.decomposition.unwrap().into_iter().flatten() {
        parse_fraction(&t).unwrap();
    }
}

#[test]
fn curve_descriptions_round_trip() {
    for text in [
        "line",
        "line minus x^3 - x",
        "plane y^2 - x^3 - x",
        "space y - x^2; z - x^3 tau 1, 2*x, 3*x^2",
    ] {
        let spec = parse_curve_spec(text).unwrap();
        assert_eq!(spec.to_string(), text);
        assert_eq!(parse_curve_spec(&spec.to_string()).unwrap(), spec);
    }
    assert!(matches!(parse_curve_spec("line"), Ok(CurveSpec::Line)));
    assert!(parse_curve_spec("lines").is_err());
    assert!(parse_curve_spec("space y tau 1, 2").is_err());
}

#[test]
fn localize_reports_g_over_f_2k() {
    let mut job = Job::new(Cmd::Localize, "line minus x^2 + 1");
    job.target = Some("x^3 - 1".into());
    job.k = 2;
    job.trace = true;
    let (doc, code) = run(&job);
    assert_eq!(code, 0);
    assert_eq!(doc.length, Some(1));
    assert_eq!(doc.target.as_deref(), Some("(x^3 - 1)/(x^2 + 1)^4"));
    assert_eq!(doc.trace.unwrap().k, Some(2));
}

#[test]
fn nonsquarefree_puncture_warns() {
    let mut job = Job::new(Cmd::Check, "line minus x^2");
    let (doc, code) = run(&job);
    assert_eq!(code, 0);
    assert_eq!(doc.warnings.len(), 1);
    job.curve = "line minus x^2 - x".into();
    assert!(run(&job).0.warnings.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "decompose",
        "--curve",
        "plane y^2 - x^3 + 1",
        "--target",
        "x^4*y",
        "--trace",
    ];
    assert_eq!(bin(&args), bin(&args));
}
