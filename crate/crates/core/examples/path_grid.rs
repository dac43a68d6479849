//! The ⌈(n-2)(k-2)/2⌉-coloring of (P_n □ P_k)_δ drawn as a grid, with the
//! interior checkerboard clique that proves it optimal.
//!
//! ```text
//! cargo run --example path_grid -- 7 9
//! ```

use delta_chromatic::bounds::path_path_value;
use delta_chromatic::constructions::{check, path_path_coloring};
use delta_chromatic::families::path;
use delta_chromatic::graph::cartesian_product;

fn main() -> delta_chromatic::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, k) = match args.as_slice() {
        [n, k] => (*n, *k),
        _ => (6, 7),
    };
    let delta = cartesian_product(&[&path(n), &path(k)])?
        .0
        .delta_complement();
    let c = path_path_coloring(n, k)?;
    let out = check(&delta, &c)?;
    println!("P{n} x P{k}: target {} colors", path_path_value(n, k));
    println!(
        "used {}, proper {}, clique certifies {:?}\n",
        out.colors_used, out.proper, out.clique_certifies
    );
    let clique = c.clique.clone().unwrap_or_default();
    for i in 0..n {
        let row: Vec<String> = (0..k)
            .map(|j| {
                let v = i * k + j;
                let mark = if clique.contains(&v) { '*' } else { ' ' };
                format!("{:>3}{mark}", c.coloring.color(v) + 1)
            })
            .collect();
        println!("{}", row.join(""));
    }
    println!("\n* marks the clique; colors shown 1-based");
    Ok(())
}
