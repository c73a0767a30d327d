//! GF(q^2) as the affine plane AG(2,q): line classes, pencils, and the
//! circle as an oval with Qvist-style tangent counts.
//!
//! Run with: cargo run --example plane_and_ovals

use paley_square::affine_plane::{classify_line, line_through, oval_report, pencil, LineClass};
use paley_square::display::fmt_element;
use paley_square::{ExtField, Result};

fn main() -> Result<()> {
    let field = ExtField::from_q(29)?;
    let one = field.one();
    let alpha = field.alpha();

    // The two special lines through the origin: GF(q) itself (slope 1)
    // and the alpha line (slope alpha).
    for (name, slope) in [("F_q", one), ("alpha*F_q", alpha)] {
        let line = line_through(&field, field.zero(), slope)?;
        println!(
            "line {name}: slope {}, class {:?}, {} points",
            fmt_element(&field, line.slope()),
            classify_line(&field, &line),
            line.points().len()
        );
    }

    // Every pencil splits evenly into quadratic and non-quadratic lines.
    let p = pencil(&field, field.from_ints(2, 3));
    println!(
        "pencil through 2+3*a: {} quadratic, {} non-quadratic",
        p.quadratic.len(),
        p.non_quadratic.len()
    );
    assert_eq!(p.quadratic.len(), p.non_quadratic.len());

    // The circle (norm-one elements) is an oval: no line meets it in
    // three points, and tangents behave as Qvist's theorem dictates.
    let circle = field.circle_subgroups().circle;
    let report = oval_report(&field, &circle);
    println!(
        "circle: oval = {}, size = {}",
        report.is_oval, report.size
    );
    let mut tangent_hist = std::collections::BTreeMap::new();
    for &t in &report.tangent_counts {
        *tangent_hist.entry(t).or_insert(0u32) += 1;
    }
    println!("tangents per external point: {tangent_hist:?}");

    // A line is very much not an oval.
    let line = line_through(&field, field.zero(), one)?;
    let report = oval_report(&field, line.points());
    assert!(!report.is_oval);
    println!("F_q as a point set: oval = {}", report.is_oval);

    // Line classes partition the slopes evenly.
    let reps = paley_square::affine_plane::slope_representatives(&field);
    let quad = reps
        .iter()
        .filter(|&&s| {
            let l = line_through(&field, field.zero(), s).unwrap();
            classify_line(&field, &l) == LineClass::Quadratic
        })
        .count();
    println!("{} of {} slope classes are quadratic", quad, reps.len());
    Ok(())
}
