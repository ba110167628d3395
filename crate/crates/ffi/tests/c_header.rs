//! Compiles a C program against the generated header and links it to the
//! static library built for this test run.

use std::path::PathBuf;
use std::process::Command;

/// `libskewdouble_ffi.a` next to the test binary in `target/<profile>/deps`,
/// or the uplifted copy one level up.
fn static_lib() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    let candidates = [
        deps.join("libskewdouble_ffi.a"),
        deps.parent().unwrap().join("libskewdouble_ffi.a"),
    ];
    candidates
        .iter()
        .find(|p| p.exists())
        .cloned()
        .unwrap_or_else(|| panic!("static library not found in {}", deps.display()))
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let lib = static_lib();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = out_dir.join("skewdouble_smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .expect("C compiler not available");
    assert!(status.success(), "C compilation failed");
    let output = Command::new(&exe).output().unwrap();
    assert!(
        output.status.success(),
        "C smoke test failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&output.stdout), "ok\n");
}
