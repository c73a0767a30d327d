//! Enumerate every target-size maximal clique for a few small q and
//! classify them into automorphism orbits.
//!
//! Run with: cargo run --release --example census_small

use paley_square::census::classify;
use paley_square::display::fmt_element;
use paley_square::{ExtField, PaleyGraph, Result};

fn main() -> Result<()> {
    for q in [5u64, 9, 13, 25] {
        let field = ExtField::from_q(q)?;
        let graph = PaleyGraph::new(&field);
        let result = classify(&graph, None)?;
        println!(
            "q = {q}: {} cliques of size {} through a fixed edge, {} orbits",
            result.clique_count,
            result.target_size,
            result.orbit_count()
        );
        for orbit in &result.orbits {
            let display: Vec<String> = orbit
                .representative
                .iter()
                .map(|&g| fmt_element(&field, g))
                .collect();
            println!(
                "  family {:9} x{:3}  rep {{{}}}",
                orbit.family.as_str(),
                orbit.clique_count,
                display.join(", ")
            );
        }
    }
    Ok(())
}
