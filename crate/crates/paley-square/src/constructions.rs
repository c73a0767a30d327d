//! The four families of second-largest maximal cliques / independent sets
//! of size (q + r(q))/2 in P(q^2), where r(q) = q mod 4.

use crate::gf_ext::{ExtElement, ExtField};
use crate::paley::{MaximalityCertificate, PaleyGraph, SetKind, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionId {
    /// Pencil of quadratic lines through alpha, meeting the subfield line.
    C1,
    /// Pencil through 1, meeting the alpha line.
    C2,
    /// The even half of the norm-1 circle.
    C3Q0,
    /// The odd half of the norm-1 circle.
    C3Q1,
    /// alpha times the even circle half.
    C4Q0,
    /// alpha times the odd circle half.
    C4Q1,
}

#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub id: ConstructionId,
    pub set: VertexSet,
    pub expected_kind: SetKind,
    pub expected_size: usize,
    pub certificate: MaximalityCertificate,
}

/// q mod 4.
pub fn r_of_q(q: u32) -> u32 {
    q % 4
}

/// The size class (q + r(q))/2 shared by all four constructions.
pub fn target_size(q: u32) -> usize {
    ((q + r_of_q(q)) / 2) as usize
}

fn finish(
    graph: &PaleyGraph,
    id: ConstructionId,
    elements: Vec<ExtElement>,
    expected_kind: SetKind,
) -> ConstructionResult {
    let set = graph.classify_set(&elements);
    let certificate = graph
        .is_maximal(&set)
        .unwrap_or(MaximalityCertificate {
            maximal: false,
            extender: None,
        });
    ConstructionResult {
        id,
        set,
        expected_kind,
        expected_size: target_size(graph.field().q()),
        certificate,
    }
}

/// {alpha} (and -alpha when q = 3 mod 4) together with the subfield
/// elements adjacent to alpha; always a maximal clique.
pub fn construct_c1(field: &ExtField) -> ConstructionResult {
    let graph = PaleyGraph::new(field);
    let alpha = field.alpha();
    let mut elements: Vec<ExtElement> = field
        .base()
        .elements()
        .map(|c| field.embed(c))
        .filter(|&g| g != alpha && graph.adjacent_fast(g, alpha))
        .collect();
    elements.push(alpha);
    if field.q() % 4 == 3 {
        elements.push(field.neg(alpha));
    }
    finish(&graph, ConstructionId::C1, elements, SetKind::Clique)
}

/// {1} with the alpha-line elements non-adjacent to 1 (q = 1 mod 4, a
/// maximal independent set), or {1, -1} with those adjacent to 1
/// (q = 3 mod 4, a maximal clique).
pub fn construct_c2(field: &ExtField) -> ConstructionResult {
    let graph = PaleyGraph::new(field);
    let one = field.one();
    let keep_adjacent = field.q() % 4 == 3;
    let mut elements: Vec<ExtElement> = field
        .base()
        .elements()
        .map(|c| field.scale(c, field.alpha()))
        .filter(|&g| graph.adjacent_fast(g, one) == keep_adjacent)
        .collect();
    elements.push(one);
    let expected_kind = if keep_adjacent {
        elements.push(field.neg(one));
        SetKind::Clique
    } else {
        SetKind::Independent
    };
    finish(&graph, ConstructionId::C2, elements, expected_kind)
}

/// The circle halves Q0 and Q1, with 0 adjoined when q = 3 mod 4.
pub fn construct_c3(field: &ExtField) -> (ConstructionResult, ConstructionResult) {
    let graph = PaleyGraph::new(field);
    let circle = field.circle_subgroups();
    let adjoin_zero = field.q() % 4 == 3;
    let expected_kind = if adjoin_zero {
        SetKind::Clique
    } else {
        SetKind::Independent
    };
    let build = |id, mut elements: Vec<ExtElement>| {
        if adjoin_zero {
            elements.push(field.zero());
        }
        finish(&graph, id, elements, expected_kind)
    };
    (
        build(ConstructionId::C3Q0, circle.q0),
        build(ConstructionId::C3Q1, circle.q1),
    )
}

/// alpha * Q0 and alpha * Q1, with 0 adjoined when q = 3 mod 4; maximal
/// cliques for every odd q.
pub fn construct_c4(field: &ExtField) -> (ConstructionResult, ConstructionResult) {
    let graph = PaleyGraph::new(field);
    let circle = field.circle_subgroups();
    let adjoin_zero = field.q() % 4 == 3;
    let alpha = field.alpha();
    let build = |id, half: &[ExtElement]| {
        let mut elements: Vec<ExtElement> = half.iter().map(|&g| field.mul(alpha, g)).collect();
        if adjoin_zero {
            elements.push(field.zero());
        }
        finish(&graph, id, elements, SetKind::Clique)
    };
    (
        build(ConstructionId::C4Q0, &circle.q0),
        build(ConstructionId::C4Q1, &circle.q1),
    )
}

/// All six construction results in a fixed order.
pub fn all_constructions(field: &ExtField) -> Vec<ConstructionResult> {
    let (c3a, c3b) = construct_c3(field);
    let (c4a, c4b) = construct_c4(field);
    vec![construct_c1(field), construct_c2(field), c3a, c3b, c4a, c4b]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_plane::{classify_line, line_through, LineClass};
    use std::collections::BTreeSet;

    fn set(field: &ExtField, pairs: &[(i64, i64)]) -> BTreeSet<ExtElement> {
        pairs.iter().map(|&(x, y)| field.from_ints(x, y)).collect()
    }

    fn pm(vals: &[i64]) -> Vec<i64> {
        let mut out = Vec::new();
        for &v in vals {
            out.push(v);
            if v != 0 {
                out.push(-v);
            }
        }
        out
    }

    #[test]
    fn c1_q29_matches_reference_list() {
        let e = ExtField::from_q(29).unwrap();
        let r = construct_c1(&e);
        let mut expected: BTreeSet<ExtElement> = pm(&[1, 3, 5, 6, 8, 13, 14])
            .into_iter()
            .map(|c| e.from_ints(c, 0))
            .collect();
        expected.insert(e.alpha());
        assert_eq!(
            r.set.elements.iter().copied().collect::<BTreeSet<_>>(),
            expected
        );
        assert_eq!(r.set.elements.len(), 15);
        assert_eq!(r.set.kind, SetKind::Clique);
        assert!(r.certificate.maximal);
    }

    #[test]
    fn c1_q31_matches_reference_list() {
        let e = ExtField::from_q(31).unwrap();
        let r = construct_c1(&e);
        let mut expected: BTreeSet<ExtElement> = pm(&[0, 2, 6, 9, 10, 11, 14, 15])
            .into_iter()
            .map(|c| e.from_ints(c, 0))
            .collect();
        expected.insert(e.alpha());
        expected.insert(e.neg(e.alpha()));
        assert_eq!(
            r.set.elements.iter().copied().collect::<BTreeSet<_>>(),
            expected
        );
        assert_eq!(r.set.elements.len(), 17);
        assert!(r.certificate.maximal);
    }

    #[test]
    fn c2_q29_matches_reference_list() {
        let e = ExtField::from_q(29).unwrap();
        let r = construct_c2(&e);
        let mut expected: BTreeSet<ExtElement> = pm(&[3, 4, 7, 8, 12, 13, 14])
            .into_iter()
            .map(|c| e.from_ints(0, c))
            .collect();
        expected.insert(e.one());
        assert_eq!(
            r.set.elements.iter().copied().collect::<BTreeSet<_>>(),
            expected
        );
        assert_eq!(r.set.kind, SetKind::Independent);
        assert!(r.certificate.maximal);
    }

    #[test]
    fn c2_q31_matches_reference_list() {
        // the q = 3 mod 4 variant picks up 0 along with the pencil points
        let e = ExtField::from_q(31).unwrap();
        let r = construct_c2(&e);
        let mut expected: BTreeSet<ExtElement> = pm(&[0, 2, 3, 5, 7, 11, 14, 15])
            .into_iter()
            .map(|c| e.from_ints(0, c))
            .collect();
        expected.insert(e.one());
        expected.insert(e.neg(e.one()));
        assert_eq!(
            r.set.elements.iter().copied().collect::<BTreeSet<_>>(),
            expected
        );
        assert_eq!(r.set.elements.len(), 17);
        assert_eq!(r.set.kind, SetKind::Clique);
        assert!(r.certificate.maximal);
    }

    #[test]
    fn c4_q29_matches_reference_list() {
        let e = ExtField::from_q(29).unwrap();
        let (aq0, _) = construct_c4(&e);
        let expected = set(
            &e,
            &[
                (5, -12), (-5, -12), (1, -4), (-1, -4), (4, -3), (-4, -3),
                (0, 1), (8, 2), (-8, 2), (3, 7), (-3, 7), (13, 10), (-13, 10),
                (10, 14), (-10, 14),
            ],
        );
        assert_eq!(
            aq0.set.elements.iter().copied().collect::<BTreeSet<_>>(),
            expected
        );
        assert_eq!(aq0.set.kind, SetKind::Clique);
        assert!(aq0.certificate.maximal);
    }

    #[test]
    fn c4_q31_matches_reference_list() {
        let e = ExtField::from_q(31).unwrap();
        let (aq0, _) = construct_c4(&e);
        let mut expected = BTreeSet::new();
        expected.insert(e.zero());
        for c in pm(&[11]) {
            expected.insert(e.from_ints(c, 0));
        }
        for c in pm(&[1]) {
            expected.insert(e.from_ints(0, c));
        }
        for &(x, y) in &[(13i64, 4i64), (12, 7), (15, 13)] {
            for sx in [1i64, -1] {
                for sy in [1i64, -1] {
                    expected.insert(e.from_ints(sx * x, sy * y));
                }
            }
        }
        assert_eq!(
            aq0.set.elements.iter().copied().collect::<BTreeSet<_>>(),
            expected
        );
        assert_eq!(aq0.set.elements.len(), 17);
        assert!(aq0.certificate.maximal);
    }

    #[test]
    fn all_constructions_have_target_size_kind_and_maximality() {
        for q in [3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 49, 81] {
            let e = ExtField::from_q(q).unwrap();
            for r in all_constructions(&e) {
                assert_eq!(r.set.elements.len(), r.expected_size, "q={q} {:?}", r.id);
                assert_eq!(r.set.kind, r.expected_kind, "q={q} {:?}", r.id);
                assert!(r.certificate.maximal, "q={q} {:?}", r.id);
            }
        }
    }

    #[test]
    fn c1_subfield_part_spans_quadratic_lines_with_alpha() {
        // pencil-route cross-check of the adjacency filter
        for q in [13u64, 29, 31] {
            let e = ExtField::from_q(q).unwrap();
            let r = construct_c1(&e);
            let alpha = e.alpha();
            let kept: Vec<_> = r
                .set
                .elements
                .iter()
                .copied()
                .filter(|g| g.y.is_zero())
                .collect();
            assert_eq!(kept.len() as u64, (q - 1) / 2);
            for c in kept {
                let line = line_through(&e, alpha, e.sub(c, alpha)).unwrap();
                assert_eq!(classify_line(&e, &line), LineClass::Quadratic);
            }
        }
    }

    #[test]
    fn frobenius_relates_the_two_c1_variants() {
        let e = ExtField::from_q(29).unwrap();
        let r = construct_c1(&e);
        let conj: BTreeSet<_> = r.set.elements.iter().map(|&g| e.frobenius(g)).collect();
        let orig: BTreeSet<_> = r.set.elements.iter().copied().collect();
        // conjugation swaps alpha and -alpha and fixes the subfield part
        let mut expected = orig.clone();
        expected.remove(&e.alpha());
        expected.insert(e.neg(e.alpha()));
        assert_eq!(conj, expected);

        let e = ExtField::from_q(31).unwrap();
        let r = construct_c1(&e);
        let conj: BTreeSet<_> = r.set.elements.iter().map(|&g| e.frobenius(g)).collect();
        let orig: BTreeSet<_> = r.set.elements.iter().copied().collect();
        assert_eq!(conj, orig);
    }

    #[test]
    fn multiplication_by_alpha_flips_kind_when_q_1_mod_4() {
        let e = ExtField::from_q(29).unwrap();
        let graph = PaleyGraph::new(&e);
        let c1 = construct_c1(&e);
        let scaled: Vec<_> = c1
            .set
            .elements
            .iter()
            .map(|&g| e.mul(e.alpha(), g))
            .collect();
        let s = graph.classify_set(&scaled);
        assert_eq!(s.kind, SetKind::Independent);
        assert!(graph.is_maximal(&s).unwrap().maximal);
    }
}
