use std::path::{Path, PathBuf};
use std::process::Command;

const HEADER: &str = include_str!("../include/k3orders.h");

const PROGRAM: &str = r#"
#include <stdio.h>
#include "k3orders.h"

int main(void) {
    bool ok = false;
    if (k3_classify_order(66, 0, &ok) != K3_OK || !ok) return 1;
    if (k3_classify_order(62, 0, &ok) != K3_OK || ok) return 2;
    K3OrderSet *set = NULL;
    if (k3_order_set_new(11, &set) != K3_OK) return 3;
    uint64_t last = 0;
    if (k3_order_set_get(set, k3_order_set_len(set) - 1, &last) != K3_OK) return 4;
    k3_order_set_free(set);
    if (k3_classify_order(6, 3, &ok) != K3_UNSUPPORTED) return 5;
    char *msg = k3_last_error();
    if (msg == NULL) return 6;
    k3_string_free(msg);
    printf("%llu\n", (unsigned long long)last);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_declares_api() {
    for name in [
        "K3_OK = 0",
        "typedef struct K3OrderSet K3OrderSet;",
        "k3_classify_order(",
        "k3_order_set_new(",
        "k3_order_set_free(",
        "k3_replay_json(",
        "k3_verify_entry(",
        "k3_beta(",
        "k3_last_error(",
        "k3_string_free(",
        "#ifndef K3ORDERS_H",
    ] {
        assert!(HEADER.contains(name), "missing {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler, skipping");
        return;
    };
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-c");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");

    let syntax = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    assert!(syntax.success());

    let lib = target_dir().join("libk3orders_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built, link step skipped", lib.display());
        return;
    }
    let bin = dir.join("main");
    let link = Command::new(&cc)
        .args(["-std=c99", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(link.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "66");
}

fn which_cc() -> Result<String, ()> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    match Command::new(&cc).arg("--version").output() {
        Ok(o) if o.status.success() => Ok(cc),
        _ => Err(()),
    }
}
