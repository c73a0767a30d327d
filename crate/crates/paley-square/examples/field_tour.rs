//! Walk through the canonical construction of GF(q) and GF(q^2) and the
//! multiplicative structure used everywhere else: norms, the circle
//! subgroup, and squareness.
//!
//! Run with: cargo run --example field_tour

use paley_square::display::fmt_element;
use paley_square::{ExtField, Result};

fn main() -> Result<()> {
    for q in [9u64, 29, 31] {
        let field = ExtField::from_q(q)?;
        let base = field.base();
        println!("== q = {q} (p = {}, e = {}) ==", base.p(), base.e());
        let irr: Vec<String> = base
            .irreducible()
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}*t^{i}"))
            .collect();
        println!("  irreducible over GF(p): {}", irr.join(" + "));
        println!("  generator of GF(q)*:    {}", base.generator().index());
        println!("  d (smallest non-square): {}", field.d().index());
        println!("  beta (primitive in GF(q^2)): {}", fmt_element(&field, field.beta()));

        // The norm maps GF(q^2)* onto GF(q)*; its kernel is the circle.
        let circle = field.circle_subgroups();
        assert_eq!(circle.circle.len() as u32, field.q() + 1);
        assert!(circle
            .circle
            .iter()
            .all(|&g| field.norm(g) == base.one()));
        println!("  |circle| = q + 1 = {}", circle.circle.len());
        println!(
            "  omega = beta^(q-1) = {}, Q0 = <omega^2> has {} elements",
            fmt_element(&field, field.omega()),
            circle.q0.len()
        );

        // Squareness in GF(q^2) is equivalent to the norm being a square
        // in GF(q); alpha itself is a square exactly when q = 3 mod 4.
        let alpha_sq = field.is_square(field.alpha())?;
        println!(
            "  alpha is a square: {} (q mod 4 = {})",
            alpha_sq,
            field.q() % 4
        );
        println!();
    }
    Ok(())
}
