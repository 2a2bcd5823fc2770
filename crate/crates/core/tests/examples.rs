mod exact_arithmetic {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exact_arithmetic.rs"
    ));
}

mod padic_valuations {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/padic_valuations.rs"
    ));
}

mod az_sequences {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/az_sequences.rs"
    ));
}

mod main_supercongruence {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/main_supercongruence.rs"
    ));
}

mod lemma_toolbox {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/lemma_toolbox.rs"
    ));
}

mod conjectures {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/conjectures.rs"
    ));
}

mod scan_report {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/scan_report.rs"
    ));
}

#[test]
fn exact_arithmetic_example_runs() {
    exact_arithmetic::run_example().expect("exact arithmetic example should run");
}

#[test]
fn padic_valuations_example_runs() {
    padic_valuations::run_example().expect("padic valuations example should run");
}

#[test]
fn az_sequences_example_runs() {
    az_sequences::run_example().expect("az sequences example should run");
}

#[test]
fn main_supercongruence_example_runs() {
    main_supercongruence::run_example().expect("main supercongruence example should run");
}

#[test]
fn lemma_toolbox_example_runs() {
    lemma_toolbox::run_example().expect("lemma toolbox example should run");
}

#[test]
fn conjectures_example_runs() {
    conjectures::run_example().expect("conjectures example should run");
}

#[test]
fn scan_report_example_runs() {
    scan_report::run_example().expect("scan report example should run");
}
