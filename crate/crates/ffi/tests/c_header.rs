//! Compiles and runs a small C client against the generated header and the
//! static library. Skipped when no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

const CLIENT: &str = r#"
#include "arapath.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    uint32_t f = 0;
    if (ara_formula_value(7, 3, &f) != ARA_STATUS_OK || f != 3) return 1;

    AraCertificate *cert = NULL;
    if (ara_construct(5, 2, 32003, ARA_VERIFY_ALWAYS, &cert) != ARA_STATUS_OK) return 2;
    size_t count = 0;
    ara_certificate_count(cert, &count);
    bool verified = false;
    ara_certificate_verified(cert, &verified);
    char *g = NULL;
    ara_certificate_generator(cert, 2, &g);
    int ok = count == 3 && verified && strcmp(g, "x4*x5") == 0;
    ara_string_free(g);
    ara_certificate_free(cert);
    if (!ok) return 3;

    AraIdeal *ideal = NULL;
    if (ara_ideal_parse("x1 +", &ideal) != ARA_STATUS_PARSE_ERROR) return 4;
    if (ara_last_error() == NULL) return 5;
    printf("ok\n");
    return 0;
}
"#;

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
}

#[test]
fn c_client_links_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/c_header-xxxx -> target/<profile>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libarapath_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built, skipping", lib.display());
        return;
    }
    let work = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let source = work.join("client.c");
    let binary = work.join("client");
    std::fs::write(&source, CLIENT).unwrap();
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&source)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .unwrap();
    assert!(status.success(), "C client failed to build");
    let out = Command::new(&binary).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
