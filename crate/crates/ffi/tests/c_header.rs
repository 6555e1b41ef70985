//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler is on the path.
//!
//! Test builds only produce the rlib, so the static library is built here
//! with its own target directory (the outer cargo holds the lock on ours).

use std::path::{Path, PathBuf};
use std::process::Command;

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

fn build_staticlib() -> PathBuf {
    let dir = target_dir().join("ffi-staticlib");
    let status = Command::new(env!("CARGO"))
        .args(["build", "--quiet", "--lib", "-p", "recipbinom-ffi", "--manifest-path"])
        .arg(Path::new(env!("CARGO_MANIFEST_DIR")).join("Cargo.toml"))
        .arg("--target-dir")
        .arg(&dir)
        .status()
        .unwrap();
    assert!(status.success(), "building the static library failed");
    dir.join("debug/librecipbinom_ffi.a")
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/recipbinom.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "RB_STATUS_OK",
        "RB_STATUS_DIVERGENT",
        "typedef struct RbExpansion RbExpansion",
        "rb_expand(",
        "rb_expansion_coeff(",
        "rb_expansion_free(",
        "rb_check_run(",
        "rb_report_json(",
        "rb_dilog(",
        "rb_last_error_message(",
        "rb_string_free(",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = build_staticlib();
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out = std::env::temp_dir().join(format!("recipbinom_smoke_{}", std::process::id()));
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(
        run.status.success(),
        "smoke program failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
