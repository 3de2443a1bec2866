use std::path::Path;
use std::process::Command;

#[test]
fn header_declares_the_exports() {
    let h = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/starforge.h")).unwrap();
    for sym in ["sf_moyal_star", "sf_verify", "sf_rmatrix_load", "sf_frt_relations", "sf_double_build", "SF_CHECK_FAILED"] {
        assert!(h.contains(sym), "{sym} missing from header");
    }
    assert!(h.contains("typedef struct SfRMatrix SfRMatrix;"));
}

#[test]
fn header_compiles_as_c() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let src = "#include \"starforge.h\"\nint main(void) { return sf_version() == 0; }\n";
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("smoke.c");
    std::fs::write(&file, src).unwrap();
    match Command::new("cc").arg("-std=c99").arg("-Wall").arg("-fsyntax-only").arg("-I").arg(&include).arg(&file).output() {
        Ok(o) => assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr)),
        Err(e) => eprintln!("no C compiler available ({e}); syntax check skipped"),
    }
}
