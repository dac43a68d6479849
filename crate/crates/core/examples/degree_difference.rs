//! Colorings of products built from factor colorings: the cyclic-shift
//! coloring for factors with disjoint degree differences, and the
//! three-copy coloring of (K_1 ∨ H) □ P_3 for regular H.

use delta_chromatic::bounds::{degree_difference_collision, positive_degree_differences};
use delta_chromatic::chromatic::{chi_delta, Coloring, SolverOptions};
use delta_chromatic::constructions::{
    cyclic_block_color, degree_diff_product_coloring, join_p3_coloring,
};
use delta_chromatic::families::{cycle, join, path, star};
use delta_chromatic::graph::cartesian_product;
use delta_chromatic::Graph;

fn main() -> delta_chromatic::Result<()> {
    // cyclic shifts: G has five vertices colored 1,3,1,2,3; H has degree
    // classes of sizes 2,1,2,2, so p = 4 and each class contributes copies
    println!("color(g, h) with p = 4 (1-based):");
    let c0 = [0, 2, 0, 1, 2];
    let cols = [(0, 0), (0, 1), (1, 0), (2, 0), (2, 1), (3, 0), (3, 1)];
    for (g, &base) in c0.iter().enumerate() {
        let row: Vec<usize> = cols
            .iter()
            .map(|&(j, r)| cyclic_block_color(base, j, r, 4) + 1)
            .collect();
        println!("  g{} {row:?}", g + 1);
    }

    let opts = SolverOptions::default();
    for (name, g, h) in [
        ("C5 x P3", cycle(5), path(3)),
        ("P4 x S1,3", path(4), star(3)),
    ] {
        println!(
            "\n{name}: degree differences {:?} vs {:?}",
            positive_degree_differences(&g),
            positive_degree_differences(&h)
        );
        let c0 = chi_delta(&g, &opts).witness;
        let c = degree_diff_product_coloring(&g, &c0, &h)?;
        let delta = cartesian_product(&[&g, &h])?.0.delta_complement();
        let exact = chi_delta(&cartesian_product(&[&g, &h])?.0, &opts);
        println!(
            "  construction uses {} colors (proper: {}), exact value {:?}",
            c.colors_used(),
            c.is_proper(&delta)?,
            exact.chi
        );
    }
    println!(
        "\nP4 x P4 collides on difference {:?}",
        degree_difference_collision(&path(4), &path(4))
    );

    println!("\n(K1 v H) x P3 for regular H:");
    for (name, h, ch) in [
        (
            "N3",
            Graph::empty(3),
            Some(Coloring::from_colors(vec![0, 1, 2])),
        ),
        ("C5", cycle(5), None),
        ("C7", cycle(7), None),
    ] {
        let ch = ch.unwrap_or_else(|| chi_delta(&h, &opts).witness);
        let c = join_p3_coloring(&h, &ch)?;
        let delta = cartesian_product(&[&join(&Graph::empty(1), &h), &path(3)])?
            .0
            .delta_complement();
        println!(
            "  H = {name}: {} colors, proper: {}",
            c.colors_used(),
            c.is_proper(&delta)?
        );
    }
    Ok(())
}
