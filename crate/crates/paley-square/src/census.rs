//! Exhaustive enumeration of maximal cliques of size (q + r(q))/2 in
//! P(q^2) and their classification up to graph automorphism.
//!
//! The automorphism group acts arc-transitively, so every orbit has a
//! member containing the arc (0, 1); the search therefore runs over the
//! common neighbourhood of {0, 1} and canonicalization only needs the
//! |C|^2 * 2e images that send some arc of C to (0, 1).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::constructions::{all_constructions, target_size, ConstructionId};
use crate::error::{Error, Result};
use crate::gf_ext::{ExtElement, ExtField};
use crate::paley::{PaleyGraph, SetKind};

/// An affine-Galois automorphism g -> a * g^(p^eps) + b with a a nonzero
/// square.
#[derive(Debug, Clone, Copy)]
pub struct AutMap {
    pub a: ExtElement,
    pub b: ExtElement,
    pub eps: u32,
}

impl AutMap {
    pub fn identity(field: &ExtField) -> AutMap {
        AutMap {
            a: field.one(),
            b: field.zero(),
            eps: 0,
        }
    }

    pub fn apply(&self, field: &ExtField, g: ExtElement) -> ExtElement {
        field.add(field.mul(self.a, field.galois(g, self.eps)), self.b)
    }

    /// self after other: (self . other)(g) = self(other(g)).
    pub fn compose(&self, field: &ExtField, other: &AutMap) -> AutMap {
        let a = field.mul(self.a, field.galois(other.a, self.eps));
        let b = self.apply(field, other.b);
        AutMap {
            a,
            b,
            eps: (self.eps + other.eps) % field.galois_count(),
        }
    }

    pub fn inverse(&self, field: &ExtField) -> AutMap {
        let eps_inv = (field.galois_count() - self.eps) % field.galois_count();
        let a_inv = field.galois(
            field.inv(self.a).expect("automorphism multiplier is nonzero"),
            eps_inv,
        );
        let b_inv = field.neg(field.mul(a_inv, field.galois(self.b, eps_inv)));
        AutMap {
            a: a_inv,
            b: b_inv,
            eps: eps_inv,
        }
    }
}

/// The automorphism sending the arc (u, v) to (0, 1): g -> (g - u)/(v - u).
/// Its multiplier is a square precisely because u and v are adjacent.
pub fn arc_normalizer(graph: &PaleyGraph, u: ExtElement, v: ExtElement) -> Result<AutMap> {
    let field = graph.field();
    if u == v || !graph.adjacent(u, v)? {
        return Err(Error::NotAnArc);
    }
    let a = field.inv(field.sub(v, u)).expect("u != v");
    Ok(AutMap {
        a,
        b: field.neg(field.mul(a, u)),
        eps: 0,
    })
}

struct Search {
    adj: Vec<Vec<bool>>,
    need: usize,
    deadline: Option<Instant>,
}

impl Search {
    fn run(
        &self,
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::BudgetExhausted);
            }
        }
        if p.is_empty() {
            if x.is_empty() && r.len() == self.need {
                out.push(r.clone());
            }
            return Ok(());
        }
        if r.len() + p.len() < self.need {
            return Ok(());
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| self.adj[u][v]).count())
            .unwrap();
        let branches: Vec<usize> = p.iter().copied().filter(|&v| !self.adj[pivot][v]).collect();
        for v in branches {
            let np: Vec<usize> = p.iter().copied().filter(|&w| self.adj[v][w]).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&w| self.adj[v][w]).collect();
            r.push(v);
            self.run(r, np, nx, out)?;
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
        Ok(())
    }
}

/// Every maximal clique of P(q^2) of size exactly (q + r(q))/2 that
/// contains both 0 and 1; by arc-transitivity every orbit is represented.
/// Each clique is returned sorted, and the list itself is sorted, so the
/// output is identical whether the first branching level runs in parallel
/// or not.
pub fn enumerate_target_cliques(
    graph: &PaleyGraph,
    deadline: Option<Instant>,
) -> Result<Vec<Vec<ExtElement>>> {
    let field = graph.field();
    let s = target_size(field.q());
    let zero = field.zero();
    let one = field.one();
    let candidates = graph.common_neighbors(zero, one);
    let n = candidates.len();
    if s < 2 {
        return Ok(Vec::new());
    }
    let need = s - 2;
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                adj[i][j] = graph.adjacent_fast(candidates[i], candidates[j]);
            }
        }
    }
    let search = Search { adj, need, deadline };

    // first branching level, unrolled so the branches can run in parallel
    let p: Vec<usize> = (0..n).collect();
    let pivot = p
        .iter()
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| search.adj[u][v]).count())
        .unwrap_or(0);
    let branch_vs: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !search.adj[pivot][v])
        .collect();
    let mut branches = Vec::new();
    {
        let mut p = p.clone();
        let mut x: Vec<usize> = Vec::new();
        for &v in &branch_vs {
            let np: Vec<usize> = p.iter().copied().filter(|&w| search.adj[v][w]).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&w| search.adj[v][w]).collect();
            branches.push((v, np, nx));
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let found: Result<Vec<Vec<Vec<usize>>>> = branches
        .into_par_iter()
        .map(|(v, np, nx)| {
            let mut out = Vec::new();
            let mut r = vec![v];
            search.run(&mut r, np, nx, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut raw: Vec<Vec<usize>> = found?.into_iter().flatten().collect();
    if n == 0 && need == 0 {
        raw.push(Vec::new());
    }

    let mut cliques = Vec::with_capacity(raw.len());
    for idxs in raw {
        let mut clique: Vec<ExtElement> = idxs.iter().map(|&i| candidates[i]).collect();
        clique.push(zero);
        clique.push(one);
        clique.sort();
        // postcondition recheck in the full graph
        let set = graph.classify_set(&clique);
        debug_assert_eq!(set.kind, SetKind::Clique);
        if graph.is_maximal(&set)?.maximal {
            cliques.push(clique);
        }
    }
    cliques.sort_by(|a, b| {
        let ka: Vec<u32> = a.iter().map(|&g| field.index(g)).collect();
        let kb: Vec<u32> = b.iter().map(|&g| field.index(g)).collect();
        ka.cmp(&kb)
    });
    cliques.dedup();
    Ok(cliques)
}

/// Aut-invariant canonical form of a clique: the lexicographic minimum,
/// over all arcs (u, v) of the clique and all 2e Galois exponents, of the
/// sorted index list of the image that sends (u, v) to (0, 1).
pub fn canonical_form(graph: &PaleyGraph, clique: &[ExtElement]) -> Result<Vec<ExtElement>> {
    let field = graph.field();
    if clique.len() < 2 {
        return Err(Error::NotAClique);
    }
    let set = graph.classify_set(clique);
    if set.kind != SetKind::Clique {
        return Err(Error::NotAClique);
    }
    let elems = &set.elements;
    let mut best: Option<Vec<u32>> = None;
    for &u in elems {
        for &v in elems {
            if u == v {
                continue;
            }
            let norm = arc_normalizer(graph, u, v)?;
            for eps in 0..field.galois_count() {
                let mut img: Vec<u32> = elems
                    .iter()
                    .map(|&g| field.index(field.galois(norm.apply(field, g), eps)))
                    .collect();
                img.sort_unstable();
                if best.as_ref().is_none_or(|b| img < *b) {
                    best = Some(img);
                }
            }
        }
    }
    Ok(best
        .unwrap()
        .into_iter()
        .map(|i| field.from_index(i))
        .collect())
}

/// Which known family an orbit belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Line-and-point pencil constructions (the subfield-anchored cliques).
    Pencil,
    /// Circle constructions (images of the norm-1 subgroup halves).
    Circle,
    Unknown,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Pencil => "pencil",
            Family::Circle => "circle",
            Family::Unknown => "unknown",
        }
    }

    fn parse(s: &str) -> Option<Family> {
        match s {
            "pencil" => Some(Family::Pencil),
            "circle" => Some(Family::Circle),
            "unknown" => Some(Family::Unknown),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: Vec<ExtElement>,
    pub clique_count: usize,
    pub family: Family,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub q: u32,
    pub d: u32,
    pub target_size: usize,
    pub clique_count: usize,
    pub orbits: Vec<Orbit>,
}

impl CensusResult {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

/// Groups the enumerated cliques by canonical form and tags each orbit
/// against the known construction families.
pub fn classify(graph: &PaleyGraph, deadline: Option<Instant>) -> Result<CensusResult> {
    let field = graph.field();
    let cliques = enumerate_target_cliques(graph, deadline)?;

    let mut groups: BTreeMap<Vec<u32>, (Vec<ExtElement>, usize)> = BTreeMap::new();
    for clique in &cliques {
        if let Some(d) = deadline {
            if Instant::now() > d {
                return Err(Error::BudgetExhausted);
            }
        }
        let form = canonical_form(graph, clique)?;
        let key: Vec<u32> = form.iter().map(|&g| field.index(g)).collect();
        let entry = groups.entry(key).or_insert_with(|| (form, 0));
        entry.1 += 1;
    }

    // canonical forms of the construction cliques, for tagging
    let mut family_forms: Vec<(Vec<u32>, Family)> = Vec::new();
    for c in all_constructions(field) {
        if c.set.kind != SetKind::Clique {
            continue;
        }
        let form = canonical_form(graph, &c.set.elements)?;
        let key: Vec<u32> = form.iter().map(|&g| field.index(g)).collect();
        let family = match c.id {
            ConstructionId::C1 | ConstructionId::C2 => Family::Pencil,
            _ => Family::Circle,
        };
        family_forms.push((key, family));
    }

    let orbits = groups
        .into_iter()
        .map(|(key, (representative, clique_count))| {
            let family = family_forms
                .iter()
                .find(|(k, _)| *k == key)
                .map(|&(_, f)| f)
                .unwrap_or(Family::Unknown);
            Orbit {
                representative,
                clique_count,
                family,
            }
        })
        .collect();

    Ok(CensusResult {
        q: field.q(),
        d: field.d().index(),
        target_size: target_size(field.q()),
        clique_count: cliques.len(),
        orbits,
    })
}

/// Versioned, byte-stable text form of a census result.
pub fn to_cache_text(result: &CensusResult) -> String {
    let mut out = String::new();
    writeln!(out, "paley-census v1").unwrap();
    writeln!(out, "q {}", result.q).unwrap();
    writeln!(out, "d {}", result.d).unwrap();
    writeln!(out, "target_size {}", result.target_size).unwrap();
    writeln!(out, "clique_count {}", result.clique_count).unwrap();
    writeln!(out, "orbit_count {}", result.orbits.len()).unwrap();
    for orbit in &result.orbits {
        let rep = orbit
            .representative
            .iter()
            .map(|g| format!("({},{})", g.x.index(), g.y.index()))
            .collect::<Vec<_>>()
            .join(";");
        writeln!(
            out,
            "orbit family={} count={} rep={}",
            orbit.family.as_str(),
            orbit.clique_count,
            rep
        )
        .unwrap();
    }
    out
}

pub fn from_cache_text(field: &ExtField, text: &str) -> Result<CensusResult> {
    let bad = |m: &str| Error::MalformedCache(m.to_string());
    let mut lines = text.lines();
    if lines.next() != Some("paley-census v1") {
        return Err(bad("missing version header"));
    }
    let mut scalar = |name: &str| -> Result<u64> {
        let line = lines.next().ok_or_else(|| bad("truncated header"))?;
        let rest = line
            .strip_prefix(name)
            .and_then(|r| r.strip_prefix(' '))
            .ok_or_else(|| bad(&format!("expected `{name}` line")))?;
        rest.parse().map_err(|_| bad("bad integer"))
    };
    let q = scalar("q")? as u32;
    let d = scalar("d")? as u32;
    let target = scalar("target_size")? as usize;
    let clique_count = scalar("clique_count")? as usize;
    let orbit_count = scalar("orbit_count")? as usize;
    let mut orbits = Vec::with_capacity(orbit_count);
    for line in lines {
        let rest = line
            .strip_prefix("orbit family=")
            .ok_or_else(|| bad("expected orbit line"))?;
        let (family, rest) = rest.split_once(" count=").ok_or_else(|| bad("orbit line"))?;
        let (count, rep) = rest.split_once(" rep=").ok_or_else(|| bad("orbit line"))?;
        let family = Family::parse(family).ok_or_else(|| bad("unknown family"))?;
        let clique_count = count.parse().map_err(|_| bad("bad count"))?;
        let mut representative = Vec::new();
        for pair in rep.split(';') {
            let inner = pair
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| bad("bad coordinate pair"))?;
            let (x, y) = inner.split_once(',').ok_or_else(|| bad("bad pair"))?;
            let x: u32 = x.parse().map_err(|_| bad("bad x"))?;
            let y: u32 = y.parse().map_err(|_| bad("bad y"))?;
            representative.push(field.make(field.base().element(x), field.base().element(y)));
        }
        orbits.push(Orbit {
            representative,
            clique_count,
            family,
        });
    }
    if orbits.len() != orbit_count {
        return Err(bad("orbit count mismatch"));
    }
    Ok(CensusResult {
        q,
        d,
        target_size: target,
        clique_count,
        orbits,
    })
}
