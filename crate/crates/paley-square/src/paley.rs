//! Adjacency oracle for the Paley graph P(q^2) and clique / independent
//! set predicates with maximality certificates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf_ext::{ExtElement, ExtField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    Clique,
    Independent,
    Neither,
}

/// A vertex set with its pairwise-adjacency classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    pub elements: Vec<ExtElement>,
    pub kind: SetKind,
}

/// Outcome of a maximality check; a non-maximal set carries the first
/// extending vertex in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaximalityCertificate {
    pub maximal: bool,
    pub extender: Option<ExtElement>,
}

/// P(q^2): vertices are the field elements, edges the pairs whose
/// difference is a nonzero square. Thin handle over the extension field's
/// square bitmap.
#[derive(Debug, Clone, Copy)]
pub struct PaleyGraph<'a> {
    field: &'a ExtField,
}

impl<'a> PaleyGraph<'a> {
    pub fn new(field: &'a ExtField) -> Self {
        PaleyGraph { field }
    }

    pub fn field(&self) -> &'a ExtField {
        self.field
    }

    pub fn adjacent(&self, u: ExtElement, v: ExtElement) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop);
        }
        Ok(self.adjacent_fast(u, v))
    }

    /// Adjacency for distinct vertices, no self-loop guard.
    pub(crate) fn adjacent_fast(&self, u: ExtElement, v: ExtElement) -> bool {
        let diff = self.field.sub(u, v);
        self.field.is_square_fast(self.field.index(diff))
    }

    pub fn vertices(&self) -> impl Iterator<Item = ExtElement> + 'a {
        self.field.elements()
    }

    pub fn degree(&self) -> u64 {
        (self.field.order() - 1) / 2
    }

    pub fn classify_set(&self, elements: &[ExtElement]) -> VertexSet {
        assert!(!elements.is_empty(), "classification needs a nonempty set");
        let mut elements = elements.to_vec();
        elements.sort();
        elements.dedup();
        let mut all_adjacent = true;
        let mut none_adjacent = true;
        'outer: for (i, &u) in elements.iter().enumerate() {
            for &v in &elements[i + 1..] {
                if self.adjacent_fast(u, v) {
                    none_adjacent = false;
                } else {
                    all_adjacent = false;
                }
                if !all_adjacent && !none_adjacent {
                    break 'outer;
                }
            }
        }
        let kind = if all_adjacent {
            SetKind::Clique
        } else if none_adjacent {
            SetKind::Independent
        } else {
            SetKind::Neither
        };
        VertexSet { elements, kind }
    }

    /// A clique (resp. independent set) is maximal iff no outside vertex is
    /// adjacent (resp. non-adjacent) to every member. Candidates are tried
    /// in canonical order, so the certificate is deterministic.
    pub fn is_maximal(&self, set: &VertexSet) -> Result<MaximalityCertificate> {
        let want_adjacent = match set.kind {
            SetKind::Clique => true,
            SetKind::Independent => false,
            SetKind::Neither => return Err(Error::KindMismatch),
        };
        for w in self.vertices() {
            if set.elements.binary_search(&w).is_ok() {
                continue;
            }
            let extends = set
                .elements
                .iter()
                .all(|&u| self.adjacent_fast(u, w) == want_adjacent);
            if extends {
                return Ok(MaximalityCertificate {
                    maximal: false,
                    extender: Some(w),
                });
            }
        }
        Ok(MaximalityCertificate {
            maximal: true,
            extender: None,
        })
    }

    pub fn common_neighbors(&self, u: ExtElement, v: ExtElement) -> Vec<ExtElement> {
        self.vertices()
            .filter(|&w| w != u && w != v && self.adjacent_fast(w, u) && self.adjacent_fast(w, v))
            .collect()
    }

    /// Checks that multiplication by a fixed non-square swaps edges and
    /// non-edges (self-complementarity witness), and that multiplication by
    /// a square preserves adjacency. Exhaustive when `samples` is None.
    pub fn self_complement_witness(&self, samples: Option<u64>, seed: u64) -> (ExtElement, bool) {
        let f = self.field;
        let n = f
            .elements()
            .find(|&g| !g.is_zero() && !f.is_square(g).unwrap())
            .unwrap();
        let ok = match samples {
            None => {
                let all: Vec<_> = f.elements().collect();
                all.iter().enumerate().all(|(i, &u)| {
                    all[i + 1..].iter().all(|&v| {
                        self.adjacent_fast(u, v)
                            != self.adjacent_fast(f.mul(n, u), f.mul(n, v))
                    })
                })
            }
            Some(count) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let order = f.order() as u32;
                (0..count).all(|_| {
                    let u = f.from_index(rng.gen_range(0..order));
                    let mut v = f.from_index(rng.gen_range(0..order));
                    while v == u {
                        v = f.from_index(rng.gen_range(0..order));
                    }
                    self.adjacent_fast(u, v)
                        != self.adjacent_fast(f.mul(n, u), f.mul(n, v))
                })
            }
        };
        (n, ok)
    }
}
