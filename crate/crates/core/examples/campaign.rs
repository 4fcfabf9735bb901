// Running a batch of checks described by a JSON campaign file.
//
// `cargo run --release --example campaign -- path/to/spec.json`; with no
// argument it runs the bundled spec covering every check.

use supersym::campaign::{run_campaign, CampaignSpec, Format};

const BUNDLED: &str = include_str!("data/full_campaign.json");

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run(None)
}

fn run(path: Option<String>) -> Result<(), Box<dyn std::error::Error>> {
    let text = match path {
        Some(path) => std::fs::read_to_string(path)?,
        None => BUNDLED.to_string(),
    };
    let spec = CampaignSpec::from_json(&text)?;
    let report = run_campaign(&spec, 0)?;
    print!("{}", report.render(Format::Text));
    if !report.success() {
        return Err("some checks failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run(std::env::args().nth(1)) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
