//! Decompose the δ-complement of a product into the product of δ-complements
//! plus the extra edge set S, and check the equality characterization.

use delta_chromatic::families::{cycle, path, star};
use delta_chromatic::structure::{delta_of_product, equality_holds};
use delta_chromatic::Graph;

fn main() -> delta_chromatic::Result<()> {
    let cases: Vec<(&str, Vec<Graph>)> = vec![
        ("P2 x P2", vec![path(2), path(2)]),
        ("C3 x C3", vec![cycle(3), cycle(3)]),
        ("K1 x C9", vec![Graph::empty(1), cycle(9)]),
        ("S1,3 x P3", vec![star(3), path(3)]),
        ("P2 x P3 x C4", vec![path(2), path(3), cycle(4)]),
    ];
    println!(
        "{:<14} {:>6} {:>8} {:>10} {:>5} {:>6} {:>9}",
        "factors", "|V|", "|E(d)|", "|E(prod)|", "|S|", "equal", "identity"
    );
    for (name, gs) in cases {
        let d = delta_of_product(&gs)?;
        println!(
            "{:<14} {:>6} {:>8} {:>10} {:>5} {:>6} {:>9}",
            name,
            d.product.n(),
            d.delta_of_product.edge_count(),
            d.product_of_deltas.edge_count(),
            d.extra_edges.len(),
            equality_holds(&gs),
            d.union_identity_holds() && d.is_disjoint(),
        );
    }
    let d = delta_of_product(&[path(2), path(2)])?;
    println!("\nS for P2 x P2 (flat ids, row-major): {:?}", d.extra_edges);
    Ok(())
}
