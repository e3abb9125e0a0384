use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").expect("manifest dir");
    let out = PathBuf::from(&crate_dir).join("include").join("k3orders.h");
    std::fs::create_dir_all(out.parent().expect("include dir")).expect("create include dir");
    println!("cargo:rerun-if-changed=src/lib.rs");
    cbindgen::Builder::new()
        .with_crate(crate_dir)
        .with_language(cbindgen::Language::C)
        .with_include_guard("K3ORDERS_H")
        .with_cpp_compat(true)
        .generate()
        .expect("unable to generate C bindings")
        .write_to_file(out);
}
