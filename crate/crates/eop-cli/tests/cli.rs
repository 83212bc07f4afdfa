//! End-to-end behavior of the `eop` binary: exit codes, determinism, the
//! report envelope and its shipped schema, config-file precedence, and the
//! CSV contract of `eop sample`.

use std::process::{Command, Output};

use eop_core::report::validate;
use serde_json::Value;

fn eop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eop"))
        .args(args)
        .output()
        .expect("eop binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON document")
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn shipped_schema() -> Value {
    serde_json::from_str(include_str!("../schema/report.schema.json"))
        .expect("shipped schema parses")
}

#[test]
fn help_lists_every_command() {
    let out = eop(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    for cmd in ["identities", "spectrum", "sample", "tables", "verify"] {
        assert!(text.contains(cmd), "--help must list `{cmd}`");
    }
}

#[test]
fn identities_deterministic_schema_valid_and_passes() {
    let args = ["identities", "--samples", "2000", "--xi-samples", "200"];
    let first = eop(&args);
    let second = eop(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(
        first.stdout, second.stdout,
        "same flags and seed must reproduce the report byte for byte"
    );

    let doc = stdout_json(&first);
    validate(&doc, &shipped_schema()).expect("identities report matches the shipped schema");
    assert_eq!(doc["report"], "identities");
    assert_eq!(doc["version"], "1");
    assert_eq!(doc["defaults"]["seed"], 7, "default seed is echoed");
    assert_eq!(doc["defaults"]["omega"], 1.0, "default omega is echoed");
    assert_eq!(doc["payload"]["pass"], true);
    let worked = doc["payload"]["worked_point_xi"].as_f64().unwrap();
    assert!((worked + 1.0).abs() <= 1e-12);
}

#[test]
fn identities_seed_flag_changes_the_draws() {
    let base = eop(&["identities", "--samples", "500", "--xi-samples", "50"]);
    let other = eop(&["identities", "--samples", "500", "--xi-samples", "50", "--seed", "8"]);
    assert_eq!(base.status.code(), Some(0));
    assert_eq!(other.status.code(), Some(0));
    assert_ne!(
        base.stdout, other.stdout,
        "a different seed must change the sampled worst points"
    );
    assert_eq!(stdout_json(&other)["defaults"]["seed"], 8);
}

#[test]
fn spectrum_analytic_reproduces_worked_energies() {
    let out = eop(&[
        "spectrum", "--family", "scarf", "--g", "4", "--f1", "0", "--mode", "analytic",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    validate(&doc, &shipped_schema()).expect("spectrum report matches the shipped schema");
    assert_eq!(doc["report"], "spectrum");
    let levels = doc["payload"]["analytic"].as_array().expect("analytic ladder");
    let scale = 1.5f64.sqrt();
    // At g = 4, f1 = 0 the angular constants are lambda_l = 6 + 3 l and the
    // ladder is E = sqrt(3/2) (2n + lambda + 1).
    for (ell, lambda, e0) in [(0usize, 6.0, 7.0), (1, 9.0, 10.0), (2, 12.0, 13.0)] {
        let level = &levels[ell];
        assert_eq!(level["ell"], ell as u64);
        assert!((level["lambda"].as_f64().unwrap() - lambda).abs() <= 1e-12);
        let energies = level["energies"].as_array().unwrap();
        for (n, line) in energies.iter().enumerate() {
            let want = scale * (e0 + 2.0 * n as f64);
            let got = line["energy"].as_f64().unwrap();
            assert!(
                (got - want).abs() <= 1e-12 * want,
                "E(n={n}, ell={ell}) = {got}, want {want}"
            );
        }
    }
}

#[test]
fn spectrum_numeric_mismatch_exits_one_with_failing_report() {
    // 64 grid points leave a discretization error (~5e-3) above the match
    // tolerance: the command must still emit the report, but flag the failure
    // through the exit code and the pass field.
    let out = eop(&["spectrum", "--mode", "both", "--grid-points", "64"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    validate(&doc, &shipped_schema()).expect("failing report still matches the schema");
    assert_eq!(doc["payload"]["pass"], false);
    assert_eq!(doc["payload"]["numeric"]["pass"], false);
}

#[test]
fn coupling_bound_is_named_on_usage_error() {
    let out = eop(&["spectrum", "--family", "scarf", "--g", "4", "--f1", "5", "--mode", "analytic"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_text(&out).contains("f1 < g+1/2"),
        "the violated bound must be named: {}",
        stderr_text(&out)
    );
}

#[test]
fn zero_samples_is_a_usage_error() {
    let out = eop(&["identities", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_output_directory_is_an_io_error() {
    let out = eop(&[
        "identities", "--samples", "100", "--xi-samples", "10",
        "--out", "/nonexistent_dir_xyz/report.json",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn format_values_are_validated() {
    let out = eop(&["identities", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_text(&out).contains("unknown format"));

    // Nested reports have no CSV projection; asking for one is a usage error.
    let out = eop(&["identities", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sample_csv_layout_and_complex_column() {
    let out = eop(&[
        "sample", "--target", "potential", "--channel", "angular",
        "--family", "pt-eckart", "--grid-points", "100",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).expect("CSV is UTF-8");
    assert!(!text.contains('\r'), "line endings are LF only");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value_re,value_im");
    assert_eq!(lines.len(), 101, "header plus one row per grid point");
    let mut saw_imaginary = false;
    for row in &lines[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 3, "row has exactly three fields: {row}");
        for f in &fields {
            f.parse::<f64>().unwrap_or_else(|_| panic!("field `{f}` parses as f64"));
        }
        saw_imaginary |= fields[2] != "0";
    }
    assert!(
        saw_imaginary,
        "the imaginary-cotangent well has a genuinely complex potential"
    );

    // A real well must print a literal 0 imaginary column.
    let out = eop(&[
        "sample", "--target", "potential", "--channel", "angular",
        "--family", "scarf", "--f1", "0", "--grid-points", "50",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for row in text.lines().skip(1) {
        assert_eq!(row.split(',').nth(2), Some("0"), "real potential, row {row}");
    }
}

#[test]
fn sample_on_an_excluded_level_is_a_usage_error() {
    // ell = 1 is the index gap of the first-order extended imaginary-cotangent
    // well: there is no eigenfunction to sample.
    let out = eop(&[
        "sample", "--target", "wavefunction", "--channel", "angular",
        "--family", "pt-eckart", "--ell", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_fills_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eop.conf");
    std::fs::write(&path, "# reference configuration\nfamily = pt2\ng = 3.0\nseed = 99\n")
        .unwrap();
    let out = eop(&[
        "spectrum", "--mode", "analytic", "--config", path.to_str().unwrap(), "--g", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["defaults"]["family"], "pt2", "config supplies the family");
    assert_eq!(doc["defaults"]["g"], 4.0, "explicit flag beats the config value");
    assert_eq!(doc["defaults"]["seed"], 99, "config supplies the seed");
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eop.conf");
    std::fs::write(&path, "bogus = 1\n").unwrap();
    let out = eop(&["identities", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_text(&out).contains("unknown key `bogus`"));
}

#[test]
fn tables_are_byte_stable_across_runs() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let first = eop(&["tables", "--out", dir_a.path().to_str().unwrap()]);
    let second = eop(&["tables", "--out", dir_b.path().to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    for file in ["table_x1.json", "table_general_p.json"] {
        let a = std::fs::read(dir_a.path().join(file)).unwrap();
        let b = std::fs::read(dir_b.path().join(file)).unwrap();
        assert_eq!(a, b, "{file} must not change between runs");
        let doc: Value = serde_json::from_slice(&a).unwrap();
        validate(&doc, &shipped_schema()).expect("table document matches the shipped schema");
        assert_eq!(doc["report"], "tables");
        assert_eq!(doc["payload"]["pass"], true);
    }
}

#[test]
fn verify_report_validates_and_every_section_passes() {
    let out = eop(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    validate(&doc, &shipped_schema()).expect("verify report matches the shipped schema");
    assert_eq!(doc["report"], "verify");
    assert_eq!(doc["payload"]["pass"], true);
    for section in ["identities", "parameters", "separability", "residuals", "orthogonality"] {
        assert_eq!(
            doc["payload"][section]["pass"], true,
            "verification section `{section}` must pass"
        );
    }
    assert_eq!(doc["payload"]["radial_spectrum"]["pass"], true);
    assert_eq!(doc["payload"]["scarf_angular_spectrum"]["pass"], true);
}
