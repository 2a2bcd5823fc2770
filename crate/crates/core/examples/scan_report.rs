// Running a parameter grid and reading the JSON report back.

use az_core::checks::{run_suite, CheckId};
use az_core::grid::{GridSpec, IntRange};
use az_core::report::{Format, Metadata, Report};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = GridSpec::default()
        .checks([
            CheckId::MainSupercongruence,
            CheckId::T1,
            CheckId::CloseCong,
        ])
        .primes([5, 7])
        .range("n", IntRange::new(1, 7));
    let cases = spec.cases()?;
    let outcomes = run_suite(&cases, 2);
    let report = Report::new(Metadata::now(spec, 2, Vec::new()), outcomes);

    print!("{}", report.summary_text());
    let json = report.to_json_lines();
    let back = Report::from_json_lines(&json)?;
    assert_eq!(back, report);
    println!(
        "{} JSON lines, exit code {}",
        json.lines().count(),
        report.exit_code()
    );
    let csv = report.render(Format::Csv);
    println!("{}", csv.lines().next().unwrap_or_default());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("scan report example");
}
