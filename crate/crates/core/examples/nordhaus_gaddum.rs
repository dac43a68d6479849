//! Nordhaus-Gaddum-type bounds for χ and χ_δ on seeded random connected
//! graphs, plus the ceiling lemma used for grids, printed as a report table.
//!
//! ```text
//! cargo run --example nordhaus_gaddum -- 42
//! ```

use delta_chromatic::report::{overall, to_pretty};
use delta_chromatic::verify::{run, VerifyOptions};

fn main() -> delta_chromatic::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let opts = VerifyOptions {
        trials: Some(8),
        seed,
        max: Some(12),
        ..Default::default()
    };
    let mut rows = run("ng", &opts)?;
    rows.extend(run("lemma-ceiling", &opts)?);
    print!("{}", to_pretty(&rows));
    println!("overall: {}", overall(&rows));
    Ok(())
}
