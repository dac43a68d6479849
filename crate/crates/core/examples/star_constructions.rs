//! Explicit optimal colorings of (S_{1,m} □ S_{1,n})_δ and (S_{1,m} □ P_n)_δ,
//! each certified by a clique of the same size.

use delta_chromatic::constructions::{check, star_path_coloring, star_star_coloring};
use delta_chromatic::families::{path, star};
use delta_chromatic::graph::cartesian_product;

fn main() -> delta_chromatic::Result<()> {
    println!("star x star");
    for (m, n) in [(3, 3), (3, 5), (5, 4)] {
        let delta = cartesian_product(&[&star(m), &star(n)])?
            .0
            .delta_complement();
        let c = star_star_coloring(m, n)?;
        let out = check(&delta, &c)?;
        println!(
            "  m={m} n={n}: {} colors, proper={}, clique certifies={:?}",
            out.colors_used, out.proper, out.clique_certifies
        );
    }
    let c = star_star_coloring(3, 3)?;
    println!("  (3,3) colors, 1-based, rows i = 0..3: ");
    for row in c.coloring.one_based().chunks(4) {
        println!("    {row:?}");
    }

    println!("star x path");
    for (m, n) in [(3, 3), (3, 4), (4, 6), (3, 7)] {
        let delta = cartesian_product(&[&star(m), &path(n)])?
            .0
            .delta_complement();
        let c = star_path_coloring(m, n)?;
        let out = check(&delta, &c)?;
        println!(
            "  m={m} n={n}: {} colors, proper={}, clique certifies={:?}",
            out.colors_used, out.proper, out.clique_certifies
        );
        for note in &c.notes {
            println!("    note: {note}");
        }
    }
    Ok(())
}
