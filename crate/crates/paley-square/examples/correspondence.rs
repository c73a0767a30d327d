//! The linear-fractional maps phi(g) = (g+1)/(g-1) and
//! psi(g) = (alpha*g + d)/(g - alpha), and the correspondence theorems
//! that carry the circle constructions onto the pencil constructions.
//!
//! Run with: cargo run --example correspondence

use paley_square::display::fmt_element;
use paley_square::moebius::{
    is_bijective_involution, phi, psi, verify_corollaries, verify_theorem_phi,
    verify_theorem_psi, MapKind,
};
use paley_square::{ExtField, Result};

fn main() -> Result<()> {
    for q in [29u64, 31] {
        let field = ExtField::from_q(q)?;
        println!("== q = {q} ==");

        // Both maps are involutions of the projective line restricted to
        // the points where they are finite.
        assert!(is_bijective_involution(&field, MapKind::Phi));
        assert!(is_bijective_involution(&field, MapKind::Psi));

        // phi maps the even half of the circle onto the alpha-line part
        // of the C2 clique; psi maps alpha times the even half onto the
        // base-line part of C1.
        let phi_report = verify_theorem_phi(&field);
        let psi_report = verify_theorem_psi(&field);
        println!(
            "  phi(Q0 side) == C2 side: {}",
            phi_report.equal
        );
        println!(
            "  psi(alpha*Q0 side) == C1 side: {}",
            psi_report.equal
        );
        assert!(phi_report.equal && psi_report.equal);

        let cor = verify_corollaries(&field);
        assert!(cor.phi_ok && cor.psi_ok);
        println!("  odd-half corollaries hold: true");

        // A few concrete values on the circle.
        let circle = field.circle_subgroups();
        for &g in circle.q0.iter().take(4) {
            println!(
                "  phi({}) = {}",
                fmt_element(&field, g),
                fmt_element(&field, phi(&field, g))
            );
        }
        let alpha = field.alpha();
        for &g in circle.q0.iter().take(4) {
            let ag = field.mul(alpha, g);
            println!(
                "  psi({}) = {}",
                fmt_element(&field, ag),
                fmt_element(&field, psi(&field, ag))
            );
        }
        println!();
    }
    Ok(())
}
