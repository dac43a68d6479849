//! Build a few named graphs, take their δ-complements, and show how the
//! degree partition drives which pairs get flipped.
//!
//! ```text
//! cargo run --example delta_complement -- "S1,4"
//! ```

use delta_chromatic::families::{generate, FamilySpec};
use delta_chromatic::io::to_json;

fn main() -> delta_chromatic::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs = if args.is_empty() {
        vec!["P6".to_string(), "C5".into(), "S1,3".into(), "W5".into()]
    } else {
        args
    };
    for text in specs {
        let spec = FamilySpec::parse(&text)?;
        let g = generate(&spec)?;
        let d = g.delta_complement();
        println!("{spec}: {} vertices, {} edges", g.n(), g.edge_count());
        for class in g.degree_partition().classes() {
            println!("  degree {:>2}: {:?}", class.degree, class.vertices);
        }
        println!("  G       = {}", to_json(&g));
        println!("  G_delta = {}", to_json(&d));
        println!("  G_delta has {} edges\n", d.edge_count());
    }
    Ok(())
}
