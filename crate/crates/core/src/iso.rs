//! Combinatorial isomorphism via canonical labelling.
//!
//! The vertex–facet incidence is treated as a bipartite graph. Colour
//! refinement splits vertices and facets by the multiset of colours they
//! see; when refinement stalls, each vertex of the first non-singleton
//! vertex cell is individualised in turn and the search recurses. Every
//! leaf is a discrete vertex colouring, i.e. a relabelling, and the
//! canonical form is the lexicographically least relabelled polytope over
//! all leaves. No leaf is pruned, so the result is exact.

use crate::error::{Error, Result};
use crate::polytope::CombinatorialPolytope;

/// Size limits for the canonical labelling search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoLimits {
    pub max_verts: usize,
    pub max_leaves: usize,
}

impl Default for IsoLimits {
    fn default() -> Self {
        Self { max_verts: 24, max_leaves: 5_000_000 }
    }
}

struct Incidence {
    vert_facets: Vec<Vec<usize>>,
    facet_verts: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(p: &CombinatorialPolytope) -> Self {
        let mut vert_facets = vec![Vec::new(); p.nverts()];
        for (fi, f) in p.facets().iter().enumerate() {
            for &v in f {
                vert_facets[v].push(fi);
            }
        }
        Self { vert_facets, facet_verts: p.facets().to_vec() }
    }
}

fn rank_signatures<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut sorted = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(s).expect("signature present") as u32)
        .collect()
}

fn class_count(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Refines to the coarsest equitable partition finer than the input.
/// Colour order is preserved, so the result does not depend on labels.
fn refine(inc: &Incidence, vcol: &mut Vec<u32>, fcol: &mut Vec<u32>) {
    loop {
        let before = (class_count(vcol), class_count(fcol));
        let fsig: Vec<(u32, Vec<u32>)> = inc
            .facet_verts
            .iter()
            .zip(fcol.iter())
            .map(|(vs, &c)| {
                let mut seen: Vec<u32> = vs.iter().map(|&v| vcol[v]).collect();
                seen.sort_unstable();
                (c, seen)
            })
            .collect();
        *fcol = rank_signatures(&fsig);
        let vsig: Vec<(u32, Vec<u32>)> = inc
            .vert_facets
            .iter()
            .zip(vcol.iter())
            .map(|(fs, &c)| {
                let mut seen: Vec<u32> = fs.iter().map(|&f| fcol[f]).collect();
                seen.sort_unstable();
                (c, seen)
            })
            .collect();
        *vcol = rank_signatures(&vsig);
        if (class_count(vcol), class_count(fcol)) == before {
            return;
        }
    }
}

struct Search<'a> {
    p: &'a CombinatorialPolytope,
    inc: Incidence,
    best: Option<CombinatorialPolytope>,
    leaves: usize,
    max_leaves: usize,
}

impl Search<'_> {
    fn run(&mut self, mut vcol: Vec<u32>, mut fcol: Vec<u32>) -> Result<()> {
        refine(&self.inc, &mut vcol, &mut fcol);
        let n = vcol.len();
        if class_count(&vcol) == n {
            self.leaves += 1;
            if self.leaves > self.max_leaves {
                return Err(Error::ResourceLimit(format!(
                    "canonical labelling explored more than {} leaves",
                    self.max_leaves
                )));
            }
            let perm: Vec<usize> = vcol.iter().map(|&c| c as usize).collect();
            let candidate = self.p.relabel_trusted(&perm);
            if self.best.as_ref().is_none_or(|b| candidate < *b) {
                self.best = Some(candidate);
            }
            return Ok(());
        }
        let mut counts = vec![0usize; n];
        for &c in &vcol {
            counts[c as usize] += 1;
        }
        let target = counts.iter().position(|&c| c > 1).expect("non-discrete") as u32;
        let members: Vec<usize> = (0..n).filter(|&v| vcol[v] == target).collect();
        for x in members {
            let split: Vec<u32> = vcol
                .iter()
                .enumerate()
                .map(|(v, &c)| match c.cmp(&target) {
                    std::cmp::Ordering::Greater => c + 1,
                    std::cmp::Ordering::Equal if v != x => c + 1,
                    _ => c,
                })
                .collect();
            self.run(split, fcol.clone())?;
        }
        Ok(())
    }
}

/// The lexicographically least relabelling of `p` over its canonical search tree.
///
/// Two polytopes are combinatorially isomorphic iff their canonical forms are equal.
pub fn canonical_form(p: &CombinatorialPolytope, limits: IsoLimits) -> Result<CombinatorialPolytope> {
    if p.nverts() > limits.max_verts {
        return Err(Error::ResourceLimit(format!(
            "isomorphism testing is limited to {} vertices, got {}",
            limits.max_verts,
            p.nverts()
        )));
    }
    let mut search = Search {
        p,
        inc: Incidence::new(p),
        best: None,
        leaves: 0,
        max_leaves: limits.max_leaves,
    };
    search.run(vec![0; p.nverts()], vec![0; p.nfacets()])?;
    Ok(search.best.expect("search reaches at least one leaf"))
}

/// Cheap label-free invariants; unequal invariants rule out isomorphism.
fn invariants(p: &CombinatorialPolytope) -> (usize, usize, usize, Vec<usize>, Vec<usize>) {
    let mut sizes: Vec<usize> = p.facets().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let mut incid = vec![0usize; p.nverts()];
    for f in p.facets() {
        for &v in f {
            incid[v] += 1;
        }
    }
    incid.sort_unstable();
    (p.dim(), p.nverts(), p.nfacets(), sizes, incid)
}

pub fn are_isomorphic(p: &CombinatorialPolytope, q: &CombinatorialPolytope) -> Result<bool> {
    are_isomorphic_with(p, q, IsoLimits::default())
}

pub fn are_isomorphic_with(
    p: &CombinatorialPolytope,
    q: &CombinatorialPolytope,
    limits: IsoLimits,
) -> Result<bool> {
    if invariants(p) != invariants(q) {
        return Ok(false);
    }
    Ok(canonical_form(p, limits)? == canonical_form(q, limits)?)
}
