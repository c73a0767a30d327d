//! The four constructions of maximal cliques / independent sets of size
//! (q + r)/2 where r = q mod 4, with maximality certificates.
//!
//! Run with: cargo run --example cliques

use paley_square::constructions::{all_constructions, target_size};
use paley_square::display::fmt_element;
use paley_square::{ExtField, PaleyGraph, Result, SetKind};

fn main() -> Result<()> {
    for q in [13u64, 29, 31] {
        let field = ExtField::from_q(q)?;
        let graph = PaleyGraph::new(&field);
        println!(
            "== q = {q}: target size (q + q mod 4)/2 = {} ==",
            target_size(field.q())
        );
        for result in all_constructions(&field) {
            let kind = match result.set.kind {
                SetKind::Clique => "clique",
                SetKind::Independent => "independent set",
                SetKind::Neither => "neither",
            };
            assert_eq!(result.set.kind, result.expected_kind);
            assert_eq!(result.set.elements.len(), result.expected_size);
            assert!(result.certificate.maximal);
            let mut sorted = result.set.elements.clone();
            sorted.sort();
            let display: Vec<String> =
                sorted.iter().map(|&g| fmt_element(&field, g)).collect();
            println!(
                "  {:?}: maximal {kind} of size {}",
                result.id,
                sorted.len()
            );
            println!("    {{{}}}", display.join(", "));

            // Re-derive the certificate directly against the graph.
            let cert = graph.is_maximal(&result.set)?;
            assert!(cert.maximal && cert.extender.is_none());
        }
        println!();
    }
    Ok(())
}
