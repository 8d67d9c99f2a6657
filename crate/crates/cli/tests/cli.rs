use std::process::Command;

use sahi_kernels::gammaval::SignedValue;
use sahi_kernels::positivity::{RegionCell, ScanReport, Verdict};
use sahi_kernels::sobolev::L2Report;
use sahi_kernels::sympoly::parse_sym_poly;
use sahi_kernels_cli::{
    run, CommandResult, EigenReport, FormReport, GramReport, JackReport, Status, VerifyExactReport, VerifyReport,
};

fn args(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

fn ok(s: &str) -> CommandResult {
    let r = run(args(s));
    assert_eq!(r.status, Status::Ok, "{s}: {:?}", r.diagnostics);
    assert_eq!(r.exit_code, 0);
    r
}

fn bin(argv: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_sahi-kernels"))
        .args(argv)
        .output()
        .expect("binary runs")
}

#[test]
fn jack_golden() {
    let r = ok("jack --lambda 2,0 --n 2 --kappa 1");
    assert_eq!(r.render(), "m[2,0] + 1*m[1,1]\nP(1^2) = 3\n");
    let rep: JackReport = serde_json::from_value(r.payload).unwrap();
    assert_eq!(rep.polynomial, "m[2,0] + 1*m[1,1]");
    assert_eq!(rep.eval_at_ones, "3");
    assert!(parse_sym_poly(&rep.polynomial, 2).is_ok());

    let r = ok("jack --lambda 2 --n 2 --kappa 1/2 --format json");
    let rep: JackReport = serde_json::from_value(r.payload).unwrap();
    assert_eq!(rep.polynomial, "m[2,0] + 2/3*m[1,1]");
}

#[test]
fn eigen_exact_two_pi() {
    let r = ok("eigen --space UN --n 1 --sigma 0 --tau 0 --lambda 0");
    assert_eq!(r.payload["exact"], "2*pi");
    assert_eq!(r.payload["sign"], 1);
    let v: SignedValue = serde_json::from_value(r.payload.clone()).unwrap();
    assert_eq!(v.exact_equals(&sahi_kernels::scalar::int(1), 1), Some(true));
    let rep: EigenReport = serde_json::from_value(r.payload).unwrap();
    assert_eq!(rep.lambda.parts(), &[0]);
}

#[test]
fn eigen_generic_point() {
    let r = ok("eigen --space UN --n 2 --sigma 0.3 --tau 0.2 --lambda 2,-1");
    for key in ["sign", "log_abs"] {
        assert!(r.payload.get(key).is_some());
    }
    let r = run(args("eigen --space UN --n 1 --sigma -1 --tau -1 --lambda 0"));
    assert_eq!(r.status, Status::Error);
    assert_eq!(r.exit_code, 1);
    assert!(r.diagnostics[0].contains("diverges"));
    ok("eigen --space UN --n 1 --sigma -1/2 --tau -3/4 --lambda 3 --reduced");
}

#[test]
fn selberg_is_lambda_zero() {
    let a = ok("selberg --space USp --n 2 --sigma 1/3 --tau 1/5");
    let b = ok("eigen --space USp --n 2 --sigma 1/3 --tau 1/5 --lambda 0,0");
    let va: SignedValue = serde_json::from_value(a.payload.clone()).unwrap();
    let vb: SignedValue = serde_json::from_value(b.payload).unwrap();
    assert_eq!(va, vb);
    assert!(a.payload["note"].as_str().unwrap().contains("Selberg"));
}

#[test]
fn scan_commands() {
    let r = ok("scan --space UN --n 1 --sigma 0.5 --tau 0.5 --box 6");
    let rep: ScanReport = serde_json::from_value(r.payload).unwrap();
    assert_eq!(rep.verdict, Verdict::Indefinite);
    let w = rep.witness.unwrap();
    assert_eq!((w.reference.parts(), w.other.parts()), (&[0][..], &[1][..]));
    // s = t = 1/2 lands on σ = τ = 0, where the kernel is constant
    let r = ok("scan --space UN --n 1 --s 0.5 --t 0.5 --box 6");
    let rep: ScanReport = serde_json::from_value(r.payload).unwrap();
    assert_eq!(rep.verdict, Verdict::Degenerate);
    let r = ok("scan --space UO --n 2 --s 0.1 --t 0.1 --box 6");
    let rep: ScanReport = serde_json::from_value(r.payload).unwrap();
    assert_eq!(rep.count, 13 * 14 / 2);
}

#[test]
fn region_csv_and_json() {
    let r = ok("region --space UN --n 1 --s-range -2:2 --t-range -2:2 --step 1/4");
    let csv = r.render();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("s,t,predicate,scan"));
    assert_eq!(lines.count(), 256);
    assert!(r.diagnostics.is_empty());
    let cells: Vec<RegionCell> = serde_json::from_value(r.payload).unwrap();
    assert!(cells.iter().all(|c| c.agrees() == Some(true)));

    let r = ok("region --space UN --n 1 --s-range -2:2 --t-range -2:2 --step 1/2 --format json");
    let v: serde_json::Value = serde_json::from_str(&r.render()).unwrap();
    assert_eq!(v["payload"].as_array().unwrap().len(), 64);
}

#[test]
fn verify_commands() {
    let r = ok("verify --n 2 --kappa 1 --sigma 0.5 --tau 0.5 --lambda 1,0 --N 1024");
    let rep: VerifyReport = serde_json::from_value(r.payload).unwrap();
    assert!(rep.passed && rep.rel_err < 1e-8);
    assert_eq!(rep.error_estimate, rep.quadrature.error_estimate);

    let r = ok("verify-exact --n 2 --kappa 1 --sigma 1 --tau 2 --lambda 1,-1");
    let rep: VerifyExactReport = serde_json::from_value(r.payload).unwrap();
    assert!(rep.equal);
    assert_eq!(rep.closed_form_rational, rep.constant_term_rational);

    // a midpoint rule far too coarse for the tolerance is reported as a mismatch
    let r = run(args(
        "verify --n 1 --kappa 1 --sigma 0.05 --tau 0.1 --lambda 2 --N 16 --rule midpoint --tol 1e-12",
    ));
    assert_eq!(r.status, Status::Error);
    assert_eq!(r.exit_code, 1);
    let rep: VerifyReport = serde_json::from_value(r.payload).unwrap();
    assert!(!rep.passed);
}

#[test]
fn gram_command() {
    let r = ok("gram --n 2 --kappa 2 --max-weight 3");
    let rep: GramReport = serde_json::from_value(r.payload).unwrap();
    assert_eq!(rep.max_off_diagonal, 0.0);
    assert_eq!(rep.lambdas.len(), 1 + 1 + 2 + 2);
    let r = run(args("gram --n 2 --kappa 1/2"));
    assert_eq!(r.exit_code, 2);
}

#[test]
fn form_and_l2() {
    let r = ok("form --space UN --n 1 --s 0.2 --t 0.2 --f 1 --g 1");
    let rep: FormReport = serde_json::from_value(r.payload).unwrap();
    assert!(rep.im.abs() < 1e-12 && rep.re > 0.0);
    let r = ok("form --space UN --n 1 --s 0.2 --t 0.2 --f 1+2*m[1] --g m[1]");
    let rep: FormReport = serde_json::from_value(r.payload).unwrap();
    let single = ok("form --space UN --n 1 --s 0.2 --t 0.2 --f m[1] --g m[1]");
    let single: FormReport = serde_json::from_value(single.payload).unwrap();
    assert!((rep.re - 2.0 * single.re).abs() < 1e-12 * rep.re.abs());

    let r = ok("l2-check --space USp --n 2 --box 4");
    let rep: L2Report = serde_json::from_value(r.payload).unwrap();
    assert!(rep.passed);
}

#[test]
fn usage_errors() {
    for bad in [
        "bogus",
        "jack --n 2 --kappa 1",
        "jack --lambda 2,x --kappa 1",
        "eigen --space XX --n 1 --sigma 0 --tau 0 --lambda 0",
        "eigen --space UN --n 2 --sigma 0 --tau 0 --lambda 0",
        "scan --space UN --n 1 --sigma 0.1 --box 3",
        "eigen --space UN --n 1 --sigma 0 --tau 0 --lambda 0 --format csv",
    ] {
        let r = run(args(bad));
        assert_eq!(r.status, Status::Error, "{bad}");
        assert_eq!(r.exit_code, 2, "{bad}");
    }
}

#[test]
fn binary_exit_codes_and_determinism() {
    let a = bin(&[
        "scan", "--space", "UN", "--n", "2", "--s", "0.3", "--t", "-0.2", "--box", "5",
    ]);
    let b = bin(&[
        "scan", "--space", "UN", "--n", "2", "--s", "0.3", "--t", "-0.2", "--box", "5",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_sahi-kernels"))
        .env("SAHI_KERNELS_THREADS", "1")
        .args([
            "scan", "--space", "UN", "--n", "2", "--s", "0.3", "--t", "-0.2", "--box", "5",
        ])
        .output()
        .unwrap();
    assert_eq!(single.stdout, a.stdout);

    let golden = bin(&["jack", "--lambda", "2,0", "--n", "2", "--kappa", "1"]);
    assert_eq!(
        String::from_utf8(golden.stdout).unwrap(),
        "m[2,0] + 1*m[1,1]\nP(1^2) = 3\n"
    );

    assert_eq!(bin(&["nope"]).status.code(), Some(2));
    let bad = bin(&[
        "verify", "--n", "1", "--kappa", "1", "--sigma", "0.05", "--tau", "0.1", "--lambda", "2", "--N", "16",
        "--rule", "midpoint", "--tol", "1e-12",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let parsed: CommandResult = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(parsed.status, Status::Error);
}
