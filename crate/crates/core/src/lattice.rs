//! Face lattice enumeration from vertex–facet incidences.
//!
//! Faces are the intersections of subsets of facets, together with the
//! whole polytope. The lattice is generated by closing the facet family
//! under intersection with single facets, then ranked bottom-up: the faces
//! covered by `H` are the maximal sets among `H ∩ F` over facets `F` not
//! containing `H`, and every one of them must sit at the same rank. Any
//! disagreement means the incidence data does not come from a polytope.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;

use crate::combinatorics::{satisfies_euler, ExcessDegree};
use crate::error::{Error, Result};
use crate::iso::{canonical_form, IsoLimits};
use crate::polytope::{CombinatorialPolytope, VertexSet};

/// Default cap on facet intersections computed during closure.
pub const DEFAULT_MAX_CANDIDATES: usize = 5_000_000;

/// The face lattice of a polytope, graded by rank.
///
/// Rank 0 holds the empty face, rank `i+1` the `i`-dimensional faces and
/// rank `d+1` the polytope itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    dim: usize,
    nverts: usize,
    ranks: Vec<Vec<VertexSet>>,
}

pub fn enumerate_lattice(p: &CombinatorialPolytope) -> Result<FaceLattice> {
    enumerate_lattice_with_limit(p, DEFAULT_MAX_CANDIDATES)
}

pub fn enumerate_lattice_with_limit(
    p: &CombinatorialPolytope,
    max_candidates: usize,
) -> Result<FaceLattice> {
    let n = p.nverts();
    let d = p.dim();
    let facets = p.facet_sets();
    let full = VertexSet::full(n);

    let mut seen: HashSet<VertexSet> = HashSet::new();
    seen.insert(full.clone());
    seen.insert(VertexSet::empty(n));
    let mut stack: Vec<VertexSet> = Vec::new();
    for f in &facets {
        if seen.insert(f.clone()) {
            stack.push(f.clone());
        }
    }
    let mut candidates = 0usize;
    while let Some(g) = stack.pop() {
        for f in &facets {
            candidates += 1;
            if candidates > max_candidates {
                return Err(Error::ResourceLimit(format!(
                    "face lattice closure exceeded {max_candidates} candidate faces"
                )));
            }
            let h = g.intersection(f);
            if h != g && seen.insert(h.clone()) {
                stack.push(h);
            }
        }
    }

    let mut faces: Vec<VertexSet> = seen.into_iter().collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut rank_of: HashMap<VertexSet, usize> = HashMap::with_capacity(faces.len());
    rank_of.insert(VertexSet::empty(n), 0);

    for h in faces.iter().filter(|h| !h.is_empty()) {
        let mut below: Vec<VertexSet> = facets
            .iter()
            .filter(|f| !h.is_subset(f))
            .map(|f| h.intersection(f))
            .collect();
        below.sort();
        below.dedup();
        let covers: Vec<&VertexSet> = below
            .iter()
            .filter(|g| !below.iter().any(|other| g.is_proper_subset(other)))
            .collect();
        let Some(first) = covers.first() else {
            return Err(Error::NotGraded(format!(
                "face {h:?} lies in every facet"
            )));
        };
        let r = rank_of[*first];
        if covers.iter().any(|g| rank_of[*g] != r) {
            return Err(Error::NotGraded(format!(
                "faces covered by {h:?} sit at different ranks"
            )));
        }
        rank_of.insert(h.clone(), r + 1);
    }

    let top = rank_of[&full];
    if top != d + 1 {
        return Err(Error::NotGraded(format!(
            "lattice has length {top}, expected d+1 = {}",
            d + 1
        )));
    }
    let mut ranks: Vec<Vec<VertexSet>> = vec![Vec::new(); d + 2];
    for face in faces {
        let r = rank_of[&face];
        ranks[r].push(face);
    }
    for level in &mut ranks {
        level.sort_by_key(|s| s.to_vec());
    }
    if ranks[1].len() != n || ranks[1].iter().any(|s| s.len() != 1) {
        return Err(Error::NotGraded(
            "rank-1 faces are not exactly the single vertices".into(),
        ));
    }
    if d >= 2 && ranks[2].iter().any(|s| s.len() != 2) {
        return Err(Error::NotGraded("an edge does not have two vertices".into()));
    }
    let lattice = FaceLattice { dim: d, nverts: n, ranks };
    if !lattice.satisfies_euler() {
        return Err(Error::InvalidPolytope(format!(
            "f-vector {:?} violates Euler's relation",
            lattice.f_vector()
        )));
    }
    Ok(lattice)
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    /// Faces of dimension `m`, for `-1 <= m <= d`.
    pub fn faces(&self, m: isize) -> &[VertexSet] {
        &self.ranks[(m + 1) as usize]
    }

    pub fn ranks(&self) -> &[Vec<VertexSet>] {
        &self.ranks
    }

    pub fn total_faces(&self) -> usize {
        self.ranks.iter().map(Vec::len).sum()
    }

    /// `(f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.ranks[1..=self.dim].iter().map(Vec::len).collect()
    }

    pub fn f_vector_big(&self) -> Vec<BigInt> {
        self.f_vector().into_iter().map(BigInt::from).collect()
    }

    pub fn satisfies_euler(&self) -> bool {
        satisfies_euler(&self.f_vector_big())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        if self.dim < 1 {
            return Vec::new();
        }
        self.faces(1)
            .iter()
            .map(|e| {
                let v = e.to_vec();
                (v[0], v[1])
            })
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nverts];
        for (a, b) in self.edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Vertex degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable();
        deg
    }

    /// Excess degree, computed as `2e - dv` and as `sum(deg - d)`; the two must agree.
    pub fn excess(&self) -> Result<ExcessDegree> {
        let e = self.faces(1).len() as i64;
        let direct = ExcessDegree::from_counts(e, self.nverts as i64, self.dim as i64)?;
        let by_degree: i64 = self
            .degrees()
            .iter()
            .map(|&deg| deg as i64 - self.dim as i64)
            .sum();
        assert_eq!(
            direct.value() as i64,
            by_degree,
            "handshake identity violated"
        );
        Ok(direct)
    }

    pub fn is_simple(&self) -> bool {
        self.degrees().iter().all(|&deg| deg == self.dim)
    }

    /// The face `face` viewed as a polytope in its own right.
    ///
    /// Its facets are the faces of one lower dimension contained in it.
    pub fn face_polytope(&self, face: &VertexSet) -> Result<CombinatorialPolytope> {
        let r = self
            .ranks
            .iter()
            .position(|level| level.contains(face))
            .ok_or_else(|| Error::InvalidPolytope(format!("{face:?} is not a face")))?;
        if r < 2 {
            return Err(Error::InvalidPolytope(
                "faces below dimension 1 are not polytopes of positive dimension".into(),
            ));
        }
        let verts = face.to_vec();
        let mut local = vec![usize::MAX; self.nverts];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let facets = self.ranks[r - 1]
            .iter()
            .filter(|g| g.is_subset(face))
            .map(|g| g.iter().map(|v| local[v]).collect())
            .collect();
        CombinatorialPolytope::new(r - 1, verts.len(), facets)
    }
}

impl CombinatorialPolytope {
    pub fn lattice(&self) -> Result<FaceLattice> {
        enumerate_lattice(self)
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets().iter().all(|f| f.len() == self.dim())
    }
}

pub fn graph_of(p: &CombinatorialPolytope) -> Result<Vec<(usize, usize)>> {
    Ok(enumerate_lattice(p)?.edges())
}

pub fn degree_sequence(p: &CombinatorialPolytope) -> Result<Vec<usize>> {
    Ok(enumerate_lattice(p)?.degree_sequence())
}

pub fn excess_of(p: &CombinatorialPolytope) -> Result<ExcessDegree> {
    enumerate_lattice(p)?.excess()
}

pub fn is_simple(p: &CombinatorialPolytope) -> Result<bool> {
    Ok(enumerate_lattice(p)?.is_simple())
}

pub fn is_simplicial(p: &CombinatorialPolytope) -> bool {
    p.is_simplicial()
}

/// One isomorphism class of facets together with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusClass {
    /// Canonical form of the facet type.
    pub facet: CombinatorialPolytope,
    pub count: usize,
}

/// Groups the facets of `p` by combinatorial type.
///
/// Classes are ordered by (vertex count, canonical form).
pub fn facet_census(p: &CombinatorialPolytope) -> Result<Vec<CensusClass>> {
    if p.dim() < 2 {
        return Err(Error::Unsupported("facet census needs d >= 2".into()));
    }
    let lattice = enumerate_lattice(p)?;
    let mut classes: Vec<CensusClass> = Vec::new();
    for f in lattice.faces(p.dim() as isize - 1) {
        let canon = canonical_form(&lattice.face_polytope(f)?, IsoLimits::default())?;
        match classes.iter_mut().find(|c| c.facet == canon) {
            Some(c) => c.count += 1,
            None => classes.push(CensusClass { facet: canon, count: 1 }),
        }
    }
    classes.sort_by(|a, b| {
        a.facet
            .nverts()
            .cmp(&b.facet.nverts())
            .then_with(|| a.facet.cmp(&b.facet))
    });
    Ok(classes)
}
