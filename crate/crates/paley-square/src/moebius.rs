//! The two involutive linear fractional maps on GF(q^2) and machine
//! verification of the correspondences they induce between the clique
//! constructions.

use crate::constructions::{construct_c1, construct_c2, construct_c3, construct_c4};
use crate::error::{Error, Result};
use crate::gf_ext::{ExtElement, ExtField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Phi,
    Psi,
}

/// One of the two maps, with its patched fixed point (1 for phi, alpha
/// for psi).
#[derive(Debug, Clone, Copy)]
pub struct FractionalMap {
    pub kind: MapKind,
    pub fixed_point: ExtElement,
}

impl FractionalMap {
    pub fn phi(field: &ExtField) -> Self {
        FractionalMap {
            kind: MapKind::Phi,
            fixed_point: field.one(),
        }
    }

    pub fn psi(field: &ExtField) -> Self {
        FractionalMap {
            kind: MapKind::Psi,
            fixed_point: field.alpha(),
        }
    }

    pub fn apply(&self, field: &ExtField, g: ExtElement) -> ExtElement {
        match self.kind {
            MapKind::Phi => phi(field, g),
            MapKind::Psi => psi(field, g),
        }
    }
}

/// phi(g) = (g + 1)/(g - 1), with phi(1) = 1.
pub fn phi(field: &ExtField, g: ExtElement) -> ExtElement {
    let one = field.one();
    if g == one {
        return one;
    }
    field
        .div(field.add(g, one), field.sub(g, one))
        .expect("g - 1 is nonzero here")
}

/// psi(g) = alpha * phi(alpha^-1 g) = (alpha g + d)/(g - alpha), with
/// psi(alpha) = alpha.
pub fn psi(field: &ExtField, g: ExtElement) -> ExtElement {
    let alpha = field.alpha();
    if g == alpha {
        return alpha;
    }
    let num = field.add(field.mul(alpha, g), field.embed(field.d()));
    field
        .div(num, field.sub(g, alpha))
        .expect("g - alpha is nonzero here")
}

fn require_on_circle(field: &ExtField, g: ExtElement) -> Result<()> {
    if field.norm(g) != field.base().one() {
        return Err(Error::NotOnCircle);
    }
    Ok(())
}

/// Closed form of phi on the norm-1 circle: phi(x + y a) = (y/(x-1)) a.
pub fn phi_on_circle(field: &ExtField, g: ExtElement) -> Result<ExtElement> {
    require_on_circle(field, g)?;
    if g == field.one() {
        return Err(Error::PoleAtOne);
    }
    let f = field.base();
    let c = f.div(g.y, f.sub(g.x, f.one()))?;
    Ok(field.scale(c, field.alpha()))
}

/// Closed form of phi on squares of circle elements:
/// phi(g^2) = (x/(y d)) a for g = x + y a on the circle, g != 1, -1.
pub fn phi_of_square(field: &ExtField, g: ExtElement) -> Result<ExtElement> {
    require_on_circle(field, g)?;
    if g == field.one() || g == field.neg(field.one()) {
        return Err(Error::DegenerateGamma);
    }
    let f = field.base();
    let c = f.div(g.x, f.mul(g.y, field.d()))?;
    Ok(field.scale(c, field.alpha()))
}

/// Closed form psi(alpha g) = y d/(x - 1) for g = x + y a on the circle,
/// g != 1.
pub fn psi_of_alpha_circle(field: &ExtField, g: ExtElement) -> Result<ExtElement> {
    require_on_circle(field, g)?;
    if g == field.one() {
        return Err(Error::PoleAtOne);
    }
    let f = field.base();
    let c = f.div(f.mul(g.y, field.d()), f.sub(g.x, f.one()))?;
    Ok(field.embed(c))
}

/// Closed form psi(alpha g^2) = x/y for g = x + y a on the circle,
/// g != 1, -1.
pub fn psi_of_alpha_square(field: &ExtField, g: ExtElement) -> Result<ExtElement> {
    require_on_circle(field, g)?;
    if g == field.one() || g == field.neg(field.one()) {
        return Err(Error::DegenerateGamma);
    }
    let f = field.base();
    Ok(field.embed(f.div(g.x, g.y)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    /// phi maps the even circle half onto the pencil set through 1.
    PhiCircleToPencil,
    /// psi maps alpha times the even circle half onto the pencil set
    /// through alpha.
    PsiAlphaCircleToPencil,
}

/// Image-set comparison for one of the two correspondence theorems.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub theorem: TheoremId,
    pub lhs: Vec<ExtElement>,
    pub rhs: Vec<ExtElement>,
    pub equal: bool,
    pub witness: Option<ExtElement>,
}

fn compare(theorem: TheoremId, mut lhs: Vec<ExtElement>, mut rhs: Vec<ExtElement>) -> CorrespondenceReport {
    lhs.sort();
    rhs.sort();
    let equal = lhs == rhs;
    let witness = if equal {
        None
    } else {
        lhs.iter()
            .find(|g| rhs.binary_search(g).is_err())
            .or_else(|| rhs.iter().find(|g| lhs.binary_search(g).is_err()))
            .copied()
    };
    CorrespondenceReport {
        theorem,
        lhs,
        rhs,
        equal,
        witness,
    }
}

/// phi(Q0) (with 0 adjoined when q = 3 mod 4) against the second
/// construction.
pub fn verify_theorem_phi(field: &ExtField) -> CorrespondenceReport {
    let (c3q0, _) = construct_c3(field);
    let lhs: Vec<_> = c3q0.set.elements.iter().map(|&g| phi(field, g)).collect();
    let rhs = construct_c2(field).set.elements;
    compare(TheoremId::PhiCircleToPencil, lhs, rhs)
}

/// psi(alpha Q0) (with 0 adjoined when q = 3 mod 4) against the first
/// construction.
pub fn verify_theorem_psi(field: &ExtField) -> CorrespondenceReport {
    let (c4q0, _) = construct_c4(field);
    let lhs: Vec<_> = c4q0.set.elements.iter().map(|&g| psi(field, g)).collect();
    let rhs = construct_c1(field).set.elements;
    compare(TheoremId::PsiAlphaCircleToPencil, lhs, rhs)
}

/// What the images of the odd circle half induce in P(q^2), for both maps.
#[derive(Debug, Clone)]
pub struct CorollaryReport {
    pub phi_ok: bool,
    pub psi_ok: bool,
}

pub fn verify_corollaries(field: &ExtField) -> CorollaryReport {
    use crate::paley::{PaleyGraph, SetKind};
    let graph = PaleyGraph::new(field);
    let circle = field.circle_subgroups();
    let one = field.one();
    let alpha = field.alpha();
    let q1_phi: Vec<_> = circle.q1.iter().map(|&g| phi(field, g)).collect();
    let q1_psi: Vec<_> = circle
        .q1
        .iter()
        .map(|&g| psi(field, field.mul(alpha, g)))
        .collect();

    let (phi_ok, psi_ok);
    if field.q() % 4 == 1 {
        // phi(Q1 + {1}) is the complete bipartite K_{1,(q+1)/2}
        phi_ok = graph.classify_set(&q1_phi).kind == SetKind::Independent
            && q1_phi.iter().all(|&g| graph.adjacent_fast(g, one));
        // psi(alpha Q1 + {alpha}) is a clique plus the isolated vertex alpha
        psi_ok = graph.classify_set(&q1_psi).kind == SetKind::Clique
            && q1_psi.iter().all(|&g| !graph.adjacent_fast(g, alpha));
    } else {
        // phi(Q1 + {0,1}) is the clique phi(Q1) plus the disjoint edge {1,-1}
        let minus_one = field.neg(one);
        phi_ok = graph.classify_set(&q1_phi).kind == SetKind::Clique
            && graph.adjacent_fast(one, minus_one)
            && q1_phi
                .iter()
                .all(|&g| !graph.adjacent_fast(g, one) && !graph.adjacent_fast(g, minus_one));
        // psi(alpha Q1 + {0,alpha}) is a clique plus the disjoint edge
        // {alpha,-alpha}
        let minus_alpha = field.neg(alpha);
        psi_ok = graph.classify_set(&q1_psi).kind == SetKind::Clique
            && graph.adjacent_fast(alpha, minus_alpha)
            && q1_psi
                .iter()
                .all(|&g| !graph.adjacent_fast(g, alpha) && !graph.adjacent_fast(g, minus_alpha));
    }
    CorollaryReport { phi_ok, psi_ok }
}

/// Exhaustive bijection-and-involution check of one map.
pub fn is_bijective_involution(field: &ExtField, map: MapKind) -> bool {
    let m = match map {
        MapKind::Phi => FractionalMap::phi(field),
        MapKind::Psi => FractionalMap::psi(field),
    };
    let n = field.order() as usize;
    let mut seen = vec![false; n];
    for g in field.elements() {
        let img = m.apply(field, g);
        let idx = field.index(img) as usize;
        if seen[idx] || m.apply(field, img) != g {
            return false;
        }
        seen[idx] = true;
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn phi_special_values() {
        let e = ExtField::from_q(29).unwrap();
        assert_eq!(phi(&e, e.neg(e.one())), e.zero());
        assert_eq!(phi(&e, e.zero()), e.neg(e.one()));
        assert_eq!(phi(&e, e.one()), e.one());
        // first row of the q=29 reference table
        assert_eq!(phi(&e, e.from_ints(-3, 2)), e.from_ints(0, 14));

        let e31 = ExtField::from_q(31).unwrap();
        assert_eq!(phi(&e31, e31.from_ints(-7, 4)), e31.from_ints(0, 15));
    }

    #[test]
    fn psi_special_values() {
        let e = ExtField::from_q(29).unwrap();
        assert_eq!(psi(&e, e.alpha()), e.alpha());
        assert_eq!(psi(&e, e.from_ints(-3, 7)), e.from_ints(14, 0));

        let e31 = ExtField::from_q(31).unwrap();
        assert_eq!(psi(&e31, e31.zero()), e31.neg(e31.alpha()));
    }

    #[test]
    fn psi_is_alpha_conjugate_of_phi() {
        let e = ExtField::from_q(27).unwrap();
        let alpha = e.alpha();
        let alpha_inv = e.inv(alpha).unwrap();
        for g in e.elements() {
            assert_eq!(psi(&e, g), e.mul(alpha, phi(&e, e.mul(alpha_inv, g))));
        }
    }

    #[test]
    fn bijective_involutions() {
        for q in [5u64, 9, 27, 29, 31] {
            let e = ExtField::from_q(q).unwrap();
            assert!(is_bijective_involution(&e, MapKind::Phi), "phi q={q}");
            assert!(is_bijective_involution(&e, MapKind::Psi), "psi q={q}");
        }
    }

    #[test]
    fn closed_forms_match_direct_evaluation() {
        for q in [5u64, 9, 13, 29, 31] {
            let e = ExtField::from_q(q).unwrap();
            let circle = e.circle_subgroups().circle;
            let one = e.one();
            let minus_one = e.neg(one);
            let alpha = e.alpha();
            for &g in &circle {
                if g != one {
                    assert_eq!(phi_on_circle(&e, g).unwrap(), phi(&e, g), "q={q}");
                    assert_eq!(
                        psi_of_alpha_circle(&e, g).unwrap(),
                        psi(&e, e.mul(alpha, g)),
                        "q={q}"
                    );
                }
                if g != one && g != minus_one {
                    let sq = e.mul(g, g);
                    assert_eq!(phi_of_square(&e, g).unwrap(), phi(&e, sq), "q={q}");
                    assert_eq!(
                        psi_of_alpha_square(&e, g).unwrap(),
                        psi(&e, e.mul(alpha, sq)),
                        "q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_preconditions() {
        let e = ExtField::from_q(29).unwrap();
        assert_eq!(
            phi_on_circle(&e, e.from_ints(2, 0)).unwrap_err(),
            Error::NotOnCircle
        );
        assert_eq!(phi_on_circle(&e, e.one()).unwrap_err(), Error::PoleAtOne);
        assert_eq!(
            phi_of_square(&e, e.neg(e.one())).unwrap_err(),
            Error::DegenerateGamma
        );
    }

    #[test]
    fn circle_images_fill_the_special_lines() {
        for q in [9u64, 29, 31] {
            let e = ExtField::from_q(q).unwrap();
            let circle = e.circle_subgroups().circle;
            let one = e.one();
            let alpha = e.alpha();
            let phi_img: BTreeSet<_> = circle
                .iter()
                .filter(|&&g| g != one)
                .map(|&g| phi(&e, g))
                .collect();
            let alpha_line: BTreeSet<_> = e
                .base()
                .elements()
                .map(|c| e.scale(c, alpha))
                .collect();
            assert_eq!(phi_img, alpha_line, "q={q}");

            let psi_img: BTreeSet<_> = circle
                .iter()
                .filter(|&&g| g != one)
                .map(|&g| psi(&e, e.mul(alpha, g)))
                .collect();
            let base_line: BTreeSet<_> = e.base().elements().map(|c| e.embed(c)).collect();
            assert_eq!(psi_img, base_line, "q={q}");
        }
    }

    #[test]
    fn norm_identity_on_square_images() {
        // N(1 - (x/(y d)) a) = -1/(y^2 d) on the circle minus {1,-1}
        for q in [5u64, 13, 29, 31] {
            let e = ExtField::from_q(q).unwrap();
            let f = e.base();
            let one = e.one();
            let minus_one = e.neg(one);
            for g in e.circle_subgroups().circle {
                if g == one || g == minus_one {
                    continue;
                }
                let img = phi_of_square(&e, g).unwrap();
                let lhs = e.norm(e.sub(one, img));
                let y2d = f.mul(f.mul(g.y, g.y), e.d());
                let rhs = f.neg(f.inv(y2d).unwrap());
                assert_eq!(lhs, rhs, "q={q}");
            }
        }
    }

    #[test]
    fn theorems_hold_at_the_reference_fields() {
        for q in [29u64, 31] {
            let e = ExtField::from_q(q).unwrap();
            let r = verify_theorem_phi(&e);
            assert!(r.equal, "phi q={q} witness {:?}", r.witness);
            let r = verify_theorem_psi(&e);
            assert!(r.equal, "psi q={q} witness {:?}", r.witness);
        }
    }

    #[test]
    fn corollaries_hold() {
        for q in [5u64, 29, 31] {
            let r = verify_corollaries(&ExtField::from_q(q).unwrap());
            assert!(r.phi_ok && r.psi_ok, "q={q}");
        }
    }
}
