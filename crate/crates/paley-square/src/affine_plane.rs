//! The affine plane AG(2,q) viewed on GF(q^2): lines, slope classes,
//! pencils, the quadratic / non-quadratic split, and oval diagnostics.

use crate::error::{Error, Result};
use crate::gf_ext::{ExtElement, ExtField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineClass {
    Quadratic,
    NonQuadratic,
}

/// An affine line: q points with a slope defined up to GF(q)* multiples.
/// The stored slope is the canonical representative of its class and the
/// point list is sorted, so two equal lines compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    slope: ExtElement,
    points: Vec<ExtElement>,
}

impl Line {
    pub fn slope(&self) -> ExtElement {
        self.slope
    }

    pub fn points(&self) -> &[ExtElement] {
        &self.points
    }

    pub fn contains(&self, p: ExtElement) -> bool {
        self.points.binary_search(&p).is_ok()
    }
}

/// The smallest GF(q)*-multiple of a nonzero slope.
pub fn canonical_slope(field: &ExtField, s: ExtElement) -> Result<ExtElement> {
    if s.is_zero() {
        return Err(Error::ZeroSlope);
    }
    Ok(field
        .base()
        .units()
        .map(|c| field.scale(c, s))
        .min()
        .unwrap())
}

/// The line through p with slope s.
pub fn line_through(field: &ExtField, p: ExtElement, s: ExtElement) -> Result<Line> {
    let slope = canonical_slope(field, s)?;
    let mut points: Vec<ExtElement> = field
        .base()
        .elements()
        .map(|c| field.add(p, field.scale(c, slope)))
        .collect();
    points.sort();
    Ok(Line { slope, points })
}

/// Quadratic iff the slope is a square in GF(q^2)*.
pub fn classify_line(field: &ExtField, line: &Line) -> LineClass {
    if field.is_square(line.slope()).unwrap() {
        LineClass::Quadratic
    } else {
        LineClass::NonQuadratic
    }
}

/// One canonical representative per slope class; q+1 classes in total.
pub fn slope_representatives(field: &ExtField) -> Vec<ExtElement> {
    let mut reps = vec![canonical_slope(field, field.one()).unwrap()];
    for x in field.base().elements() {
        let s = field.make(x, field.base().one());
        reps.push(canonical_slope(field, s).unwrap());
    }
    reps.sort();
    reps.dedup();
    debug_assert_eq!(reps.len() as u32, field.q() + 1);
    reps
}

/// The q+1 lines through a point, split into quadratic and non-quadratic.
#[derive(Debug, Clone)]
pub struct Pencil {
    pub quadratic: Vec<Line>,
    pub non_quadratic: Vec<Line>,
}

pub fn pencil(field: &ExtField, p: ExtElement) -> Pencil {
    let mut quadratic = Vec::new();
    let mut non_quadratic = Vec::new();
    for s in slope_representatives(field) {
        let line = line_through(field, p, s).unwrap();
        match classify_line(field, &line) {
            LineClass::Quadratic => quadratic.push(line),
            LineClass::NonQuadratic => non_quadratic.push(line),
        }
    }
    Pencil {
        quadratic,
        non_quadratic,
    }
}

/// Every line of the plane, q^2 + q of them.
pub fn all_lines(field: &ExtField) -> Vec<Line> {
    let n = field.order() as usize;
    let mut lines = Vec::new();
    for s in slope_representatives(field) {
        let mut covered = vec![false; n];
        for idx in 0..n as u32 {
            if covered[idx as usize] {
                continue;
            }
            let line = line_through(field, field.from_index(idx), s).unwrap();
            for &p in line.points() {
                covered[field.index(p) as usize] = true;
            }
            lines.push(line);
        }
    }
    lines
}

/// Incidence diagnostics for a point set against every line of the plane.
/// Tangent and secant counts are indexed by canonical element index.
#[derive(Debug, Clone)]
pub struct OvalReport {
    pub is_oval: bool,
    pub size: usize,
    pub tangent_counts: Vec<u32>,
    pub secant_counts: Vec<u32>,
}

pub fn oval_report(field: &ExtField, set: &[ExtElement]) -> OvalReport {
    let n = field.order() as usize;
    let mut member = vec![false; n];
    for &p in set {
        member[field.index(p) as usize] = true;
    }
    let size = member.iter().filter(|&&m| m).count();
    let mut tangent_counts = vec![0u32; n];
    let mut secant_counts = vec![0u32; n];
    let mut max_meet = 0;
    for line in all_lines(field) {
        let meet = line
            .points()
            .iter()
            .filter(|&&p| member[field.index(p) as usize])
            .count();
        max_meet = max_meet.max(meet);
        if meet == 1 {
            for &p in line.points() {
                tangent_counts[field.index(p) as usize] += 1;
            }
        } else if meet == 2 {
            for &p in line.points() {
                secant_counts[field.index(p) as usize] += 1;
            }
        }
    }
    OvalReport {
        is_oval: size == field.q() as usize + 1 && max_meet <= 2,
        size,
        tangent_counts,
        secant_counts,
    }
}
