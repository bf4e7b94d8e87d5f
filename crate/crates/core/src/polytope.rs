//! Combinatorial polytopes given by their vertex–facet incidences.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A set of vertex indices stored as a bit mask.
///
/// Up to 64 vertices fit inline; larger polytopes spill to the heap. All sets
/// belonging to one polytope have the same word count, so equality and
/// hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn empty(nverts: usize) -> Self {
        let nwords = nverts.div_ceil(64).max(1);
        Self { words: SmallVec::from_elem(0, nwords) }
    }

    pub fn full(nverts: usize) -> Self {
        let mut s = Self::empty(nverts);
        for i in 0..nverts {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(nverts: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(nverts);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A polytope described only by its dimension, vertex count and facets.
///
/// Facets are stored sorted ascending and the facet list is sorted
/// lexicographically, so two values compare equal exactly when they have
/// the same labelled incidence structure. The serialized JSON form
/// `{"dim":…,"nverts":…,"facets":[[…],…]}` is therefore canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPolytope")]
pub struct CombinatorialPolytope {
    dim: usize,
    nverts: usize,
    facets: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPolytope {
    dim: usize,
    nverts: usize,
    facets: Vec<Vec<usize>>,
}

impl TryFrom<RawPolytope> for CombinatorialPolytope {
    type Error = Error;

    fn try_from(raw: RawPolytope) -> Result<Self> {
        Self::new(raw.dim, raw.nverts, raw.facets)
    }
}

impl CombinatorialPolytope {
    /// Validates and canonicalises an incidence description.
    ///
    /// Rejects out-of-range indices, repeated vertices inside a facet,
    /// nested or repeated facets, fewer than `d+1` facets and any vertex
    /// lying in fewer than `d` facets.
    pub fn new(dim: usize, nverts: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidPolytope("dimension must be at least 1".into()));
        }
        let mut facets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        for f in &facets {
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidPolytope(format!("facet {f:?} repeats a vertex")));
            }
            if let Some(&bad) = f.iter().find(|&&i| i >= nverts) {
                return Err(Error::InvalidPolytope(format!(
                    "facet {f:?} names vertex {bad} but there are only {nverts} vertices"
                )));
            }
        }
        facets.sort();
        if facets.len() < dim + 1 {
            return Err(Error::InvalidPolytope(format!(
                "{} facets is fewer than d+1 = {}",
                facets.len(),
                dim + 1
            )));
        }
        let sets: Vec<VertexSet> = facets
            .iter()
            .map(|f| VertexSet::from_indices(nverts, f.iter().copied()))
            .collect();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(Error::InvalidPolytope(format!(
                        "facet {:?} is contained in facet {:?}",
                        facets[i], facets[j]
                    )));
                }
            }
        }
        let mut incidence = vec![0usize; nverts];
        for f in &facets {
            for &i in f {
                incidence[i] += 1;
            }
        }
        if let Some((v, &c)) = incidence.iter().enumerate().find(|(_, &c)| c < dim) {
            return Err(Error::InvalidPolytope(format!(
                "vertex {v} lies in {c} facets, fewer than d = {dim}"
            )));
        }
        Ok(Self { dim, nverts, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn nfacets(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_sets(&self) -> Vec<VertexSet> {
        self.facets
            .iter()
            .map(|f| VertexSet::from_indices(self.nverts, f.iter().copied()))
            .collect()
    }

    /// Applies a vertex relabelling `old -> perm[old]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.nverts {
            return Err(Error::InvalidPolytope("relabelling has the wrong length".into()));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|&i| perm[i]).collect())
            .collect();
        Self::new(self.dim, self.nverts, facets)
    }

    /// Relabelling of an already validated polytope; `perm` must be a permutation.
    pub(crate) fn relabel_trusted(&self, perm: &[usize]) -> Self {
        let mut facets: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| {
                let mut g: Vec<usize> = f.iter().map(|&i| perm[i]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        facets.sort();
        Self { dim: self.dim, nverts: self.nverts, facets }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polytope serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        s.insert(3);
        s.insert(65);
        assert!(s.contains(65) && s.contains(3) && !s.contains(4));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![3, 65]);
        let t = VertexSet::from_indices(70, [3, 10, 65, 69]);
        assert!(s.is_proper_subset(&t));
        assert_eq!(t.intersection(&VertexSet::from_indices(70, [10, 11])).to_vec(), vec![10]);
        s.remove(3);
        assert_eq!(s.to_vec(), vec![65]);
    }

    #[test]
    fn canonical_ordering() {
        let p = CombinatorialPolytope::new(2, 3, vec![vec![2, 1], vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(p.to_json(), r#"{"dim":2,"nverts":3,"facets":[[0,1],[0,2],[1,2]]}"#);
        assert_eq!(CombinatorialPolytope::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn rejects_bad_incidences() {
        assert!(CombinatorialPolytope::new(2, 3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(CombinatorialPolytope::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 1, 2]]).is_err());
        assert!(CombinatorialPolytope::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 3]]).is_err());
        assert!(CombinatorialPolytope::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).is_err());
        assert!(CombinatorialPolytope::new(2, 3, vec![vec![0, 0], vec![1, 2], vec![0, 2]]).is_err());
        assert!(CombinatorialPolytope::from_json(r#"{"dim":2,"nverts":3,"facets":[[0,1]]}"#).is_err());
    }
}
