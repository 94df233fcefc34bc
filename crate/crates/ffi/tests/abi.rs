use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use tucker_volume::fixtures::DIAMOND_JSON;
use tucker_volume::verify::inject_fault;
use tucker_volume::instance::InstanceFile;
use tucker_volume_ffi::*;

fn load(json: &str) -> (TvStatus, *mut TvInstance) {
    let c = CString::new(json).unwrap();
    let mut inst = ptr::null_mut();
    let status = unsafe { tv_instance_from_json(c.as_ptr(), &mut inst) };
    (status, inst)
}

fn last_error() -> String {
    let p = tv_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn diamond_fixture_checks_clean() {
    let (status, inst) = load(DIAMOND_JSON);
    assert_eq!(status, TvStatus::Ok);
    unsafe {
        let mut dim = 0;
        assert_eq!(tv_instance_dimension(inst, &mut dim), TvStatus::Ok);
        assert_eq!(dim, 2);

        for enclosure in [TvEnclosure::Shell, TvEnclosure::Square2d] {
            let mut report = ptr::null_mut();
            assert_eq!(tv_check(inst, enclosure, &mut report), TvStatus::Ok);
            assert_eq!(tv_report_passed(report), 1);
            assert_eq!(tv_report_complementary_edge_count(report), 1);
            let mut degree = 0;
            assert_eq!(tv_report_degree(report, &mut degree), TvStatus::Ok);
            assert_eq!(degree, -1);

            let mut json = ptr::null_mut();
            assert_eq!(tv_report_to_json(report, &mut json), TvStatus::Ok);
            let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
            tv_string_free(json);
            assert!(text.contains("\"complementary_edges\""));
            tv_report_free(report);
        }

        let mut json = ptr::null_mut();
        assert_eq!(tv_instance_to_json(inst, &mut json), TvStatus::Ok);
        assert_eq!(CStr::from_ptr(json).to_str().unwrap(), DIAMOND_JSON);
        tv_string_free(json);
        tv_instance_free(inst);
    }
}

#[test]
fn faulty_instance_reports_failure_with_message() {
    let inst = InstanceFile::from_json(DIAMOND_JSON).unwrap();
    let bad = inject_fault(&inst).unwrap().to_json().unwrap();
    let (status, h) = load(&bad);
    assert_eq!(status, TvStatus::Ok);
    unsafe {
        let mut report = ptr::null_mut();
        assert_eq!(tv_check(h, TvEnclosure::Shell, &mut report), TvStatus::CheckFailed);
        assert!(last_error().starts_with("tucker_labeling"));
        assert_eq!(tv_report_passed(report), 0);
        tv_report_free(report);
        tv_instance_free(h);
    }
}

#[test]
fn malformed_input_and_null_pointers() {
    let (status, inst) = load("{\"triangulation\": 3}");
    assert_eq!(status, TvStatus::InvalidInput);
    assert!(inst.is_null());
    assert!(!last_error().is_empty());

    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(tv_instance_from_json(ptr::null(), &mut out), TvStatus::NullPointer);
        assert_eq!(tv_check(ptr::null(), TvEnclosure::Shell, &mut ptr::null_mut()), TvStatus::NullPointer);
        assert_eq!(tv_report_passed(ptr::null()), 0);
        assert_eq!(tv_report_complementary_edge_count(ptr::null()), 0);
        tv_instance_free(ptr::null_mut());
        tv_report_free(ptr::null_mut());
        tv_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_instances_pass() {
    for (mode, dim) in [(TvMode::Tucker, 3), (TvMode::Sperner, 2)] {
        unsafe {
            let mut inst = ptr::null_mut();
            assert_eq!(tv_instance_generate(dim, 5, 1, TvScheme::EdgeMidpoint, mode, &mut inst), TvStatus::Ok);
            let mut report = ptr::null_mut();
            assert_eq!(tv_check(inst, TvEnclosure::Shell, &mut report), TvStatus::Ok);
            assert_eq!(tv_report_passed(report), 1);
            tv_report_free(report);
            tv_instance_free(inst);
        }
    }
    let mut inst = ptr::null_mut();
    let status = unsafe { tv_instance_generate(0, 0, 0, TvScheme::Barycentric, TvMode::Tucker, &mut inst) };
    assert_eq!(status, TvStatus::InvalidInput);
}

#[test]
fn version_is_the_package_version() {
    let v = unsafe { CStr::from_ptr(tv_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/tucker_volume.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 12);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

/// Compiles a C client against the header and the static library.
#[test]
fn c_client_links_and_runs() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<this test> -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libtucker_volume_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let fixture = tmp.path().join("diamond.json");
    std::fs::write(&fixture, DIAMOND_JSON).unwrap();
    let exe = tmp.path().join("client");
    let out = Command::new(cc)
        .arg(dir.join("tests/client.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(&exe).arg(&fixture).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "{stdout}{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(stdout.trim(), "passed=1 edges=1 degree=-1");
}
