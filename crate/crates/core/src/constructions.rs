//! Constructors for the polytope families used throughout the crate.
//!
//! Every family is identified by a [`Family`] tag, which knows its
//! dimension, vertex count and edge count in closed form and can build the
//! polytope as a [`CombinatorialPolytope`]. Tags print and parse as e.g.
//! `pentasm(4)`, `delta_sum(2,3)` or `pyr^2(prism(3))`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::combinatorics::{binom, phi_unchecked};
use crate::error::{out_of_range, Error, Result};
use crate::polytope::CombinatorialPolytope;

/// Upper bound on candidate subsets examined by the Gale evenness test.
const MAX_GALE_CANDIDATES: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Simplex { d: usize },
    /// Prism over a `(d-1)`-simplex.
    Prism { d: usize },
    /// `M_{k,j}`: the `j`-fold pyramid over the `k`-dimensional prism.
    Triplex { k: usize, j: usize },
    Pentasm { d: usize },
    /// `Delta_{r,s}`: sum of an `r`-simplex and an `s`-simplex in complementary subspaces.
    DeltaSum { r: usize, s: usize },
    Sigma3,
    Pyramid { base: Box<Family>, t: usize },
    Cyclic { d: usize, v: usize },
    Stacked { d: usize, v: usize },
}

impl Family {
    pub fn pyramid(base: Family, t: usize) -> Family {
        if t == 0 {
            base
        } else {
            Family::Pyramid { base: Box::new(base), t }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Family::Simplex { d } if *d < 1 => Err(out_of_range("simplex needs d >= 1")),
            Family::Prism { d } if *d < 2 => Err(out_of_range("prism needs d >= 2")),
            Family::Triplex { k, .. } if *k < 1 => Err(out_of_range("triplex needs k >= 1")),
            Family::Pentasm { d } if *d < 3 => Err(out_of_range("pentasm needs d >= 3")),
            Family::DeltaSum { r, s } if *r < 1 || *s < 1 => {
                Err(out_of_range("delta_sum needs r >= 1 and s >= 1"))
            }
            Family::Pyramid { base, .. } => base.validate(),
            Family::Cyclic { d, v } | Family::Stacked { d, v } if *d < 2 || *v < d + 1 => {
                Err(out_of_range(format!("{} needs d >= 2 and v >= d+1", self.name())))
            }
            _ => Ok(()),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Family::Simplex { .. } => "simplex",
            Family::Prism { .. } => "prism",
            Family::Triplex { .. } => "triplex",
            Family::Pentasm { .. } => "pentasm",
            Family::DeltaSum { .. } => "delta_sum",
            Family::Sigma3 => "sigma3",
            Family::Pyramid { .. } => "pyr",
            Family::Cyclic { .. } => "cyclic",
            Family::Stacked { .. } => "stacked",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Family::Simplex { d } | Family::Prism { d } | Family::Pentasm { d } => *d,
            Family::Triplex { k, j } => k + j,
            Family::DeltaSum { r, s } => r + s,
            Family::Sigma3 => 3,
            Family::Pyramid { base, t } => base.dim() + t,
            Family::Cyclic { d, .. } | Family::Stacked { d, .. } => *d,
        }
    }

    pub fn nverts(&self) -> usize {
        match self {
            Family::Simplex { d } => d + 1,
            Family::Prism { d } => 2 * d,
            Family::Triplex { k, j } => 2 * k + j,
            Family::Pentasm { d } => 2 * d + 1,
            Family::DeltaSum { r, s } => (r + 1) * (s + 1),
            Family::Sigma3 => 7,
            Family::Pyramid { base, t } => base.nverts() + t,
            Family::Cyclic { v, .. } | Family::Stacked { v, .. } => *v,
        }
    }

    /// Edge count from the family's closed form.
    pub fn edge_count(&self) -> BigInt {
        let big = |x: usize| BigInt::from(x);
        match self {
            Family::Simplex { d } => binom(*d as i64 + 1, 2),
            Family::Prism { d } => big(d * d),
            Family::Triplex { k, j } => {
                let d = (k + j) as i64;
                phi_unchecked(1, d + *k as i64, d)
            }
            Family::Pentasm { d } => big(d * d + d - 1),
            Family::DeltaSum { r, s } => big((r + 1) * (s + 1) * (r + s) / 2),
            Family::Sigma3 => big(11),
            Family::Pyramid { base, t } => {
                base.edge_count() + big(t * base.nverts()) + binom(*t as i64, 2)
            }
            Family::Cyclic { d, v } => match d {
                2 => big(*v),
                3 => big(3 * v - 6),
                _ => binom(*v as i64, 2),
            },
            Family::Stacked { d, v } => match d {
                2 => big(*v),
                _ => big(d * v) - binom(*d as i64 + 1, 2),
            },
        }
    }

    pub fn build(&self) -> Result<CombinatorialPolytope> {
        self.validate()?;
        match self {
            Family::Simplex { d } => Ok(simplex(*d)),
            Family::Prism { d } => prism(*d),
            Family::Triplex { k, j } => triplex(*k, *j),
            Family::Pentasm { d } => pentasm(*d),
            Family::DeltaSum { r, s } => delta_sum(*r, *s),
            Family::Sigma3 => Ok(sigma3()),
            Family::Pyramid { base, t } => Ok(pyramid_t_fold(&base.build()?, *t)),
            Family::Cyclic { d, v } => cyclic(*d, *v),
            Family::Stacked { d, v } => stacked(*d, *v),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Simplex { d } | Family::Prism { d } | Family::Pentasm { d } => {
                write!(f, "{}({d})", self.name())
            }
            Family::Triplex { k, j } => write!(f, "triplex({k},{j})"),
            Family::DeltaSum { r, s } => write!(f, "delta_sum({r},{s})"),
            Family::Sigma3 => write!(f, "sigma3"),
            Family::Pyramid { base, t: 1 } => write!(f, "pyr({base})"),
            Family::Pyramid { base, t } => write!(f, "pyr^{t}({base})"),
            Family::Cyclic { d, v } | Family::Stacked { d, v } => {
                write!(f, "{}({d},{v})", self.name())
            }
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("unrecognised family `{s}`"));
        if s == "sigma3" {
            return Ok(Family::Sigma3);
        }
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let (head, inner) = (&s[..open], &s[open + 1..s.len() - 1]);
        if let Some(rest) = head.strip_prefix("pyr") {
            let t = match rest.strip_prefix('^') {
                Some(n) => n.parse().map_err(|_| bad())?,
                None if rest.is_empty() => 1,
                None => return Err(bad()),
            };
            return Ok(Family::pyramid(inner.parse()?, t));
        }
        let args: Vec<usize> = inner
            .split(',')
            .map(|a| a.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let fam = match (head, args.as_slice()) {
            ("simplex", [d]) => Family::Simplex { d: *d },
            ("prism", [d]) => Family::Prism { d: *d },
            ("triplex", [k, j]) => Family::Triplex { k: *k, j: *j },
            ("pentasm", [d]) => Family::Pentasm { d: *d },
            ("delta_sum", [r, s]) => Family::DeltaSum { r: *r, s: *s },
            ("cyclic", [d, v]) => Family::Cyclic { d: *d, v: *v },
            ("stacked", [d, v]) => Family::Stacked { d: *d, v: *v },
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

fn build(dim: usize, nverts: usize, facets: Vec<Vec<usize>>) -> CombinatorialPolytope {
    CombinatorialPolytope::new(dim, nverts, facets).expect("constructor produces a valid incidence")
}

/// `d+1` vertices, facets are all `d`-subsets.
pub fn simplex(d: usize) -> CombinatorialPolytope {
    assert!(d >= 1, "simplex needs d >= 1");
    let facets = (0..=d).map(|skip| (0..=d).filter(|&i| i != skip).collect()).collect();
    build(d, d + 1, facets)
}

/// Prism over a `(d-1)`-simplex. Vertex `(i, e)` has index `i + e*d`.
pub fn prism(d: usize) -> Result<CombinatorialPolytope> {
    if d < 2 {
        return Err(out_of_range("prism needs d >= 2"));
    }
    let mut facets: Vec<Vec<usize>> = vec![(0..d).collect(), (d..2 * d).collect()];
    for i in 0..d {
        facets.push((0..2 * d).filter(|&x| x % d != i).collect());
    }
    Ok(build(d, 2 * d, facets))
}

/// Pyramid with apex `nverts`: old facets gain the apex, the base becomes a facet.
pub fn pyramid(p: &CombinatorialPolytope) -> CombinatorialPolytope {
    let apex = p.nverts();
    let mut facets: Vec<Vec<usize>> = p
        .facets()
        .iter()
        .map(|f| f.iter().copied().chain([apex]).collect())
        .collect();
    facets.push((0..apex).collect());
    build(p.dim() + 1, apex + 1, facets)
}

pub fn pyramid_t_fold(p: &CombinatorialPolytope, t: usize) -> CombinatorialPolytope {
    (0..t).fold(p.clone(), |acc, _| pyramid(&acc))
}

/// `M_{k,j}`, the free join of a `k`-prism and a `(j-1)`-simplex.
pub fn triplex(k: usize, j: usize) -> Result<CombinatorialPolytope> {
    match k {
        0 => Err(out_of_range("triplex needs k >= 1")),
        1 => Ok(pyramid_t_fold(&simplex(1), j)),
        _ => Ok(pyramid_t_fold(&prism(k)?, j)),
    }
}

/// The `d`-pentasm from its facet census.
///
/// Vertices `u_1..u_d` have indices `0..d`, vertices `v_0..v_d` have indices `d..=2d`.
pub fn pentasm(d: usize) -> Result<CombinatorialPolytope> {
    if d < 3 {
        return Err(out_of_range("pentasm needs d >= 3"));
    }
    let u = |i: usize| i - 1;
    let v = |i: usize| d + i;
    let all_except = |skip: &[usize]| -> Vec<usize> {
        (0..=2 * d).filter(|x| !skip.contains(x)).collect()
    };
    let mut facets = Vec::new();
    for i in 3..=d {
        facets.push(all_except(&[u(i), v(i)]));
    }
    facets.push(all_except(&[u(1), v(1), v(0)]));
    facets.push(all_except(&[u(2), v(2), v(0)]));
    facets.push((1..=d).map(u).collect());
    facets.push((0..=d).filter(|&i| i != 1).map(v).collect());
    facets.push((0..=d).filter(|&i| i != 2).map(v).collect());
    Ok(build(d, 2 * d + 1, facets))
}

/// `Delta_{r,s}`. Vertex `(i, j)` has index `i*(s+1) + j`.
pub fn delta_sum(r: usize, s: usize) -> Result<CombinatorialPolytope> {
    if r < 1 || s < 1 {
        return Err(out_of_range("delta_sum needs r >= 1 and s >= 1"));
    }
    let idx = |i: usize, j: usize| i * (s + 1) + j;
    let mut facets = Vec::new();
    for skip in 0..=r {
        facets.push(
            (0..=r)
                .filter(|&i| i != skip)
                .flat_map(|i| (0..=s).map(move |j| idx(i, j)))
                .collect(),
        );
    }
    for skip in 0..=s {
        facets.push(
            (0..=r)
                .flat_map(|i| (0..=s).filter(move |&j| j != skip).map(move |j| idx(i, j)))
                .collect(),
        );
    }
    Ok(build(r + s, (r + 1) * (s + 1), facets))
}

/// The hexahedron with 7 vertices and 11 edges that is a sum of two triangles.
///
/// Vertex order follows the point list
/// `0, e1, e2, e1+e2, e1+e3, e2+e3, e1+e2+2e3`; the incidences were read
/// off the exact hull of those points.
pub fn sigma3() -> CombinatorialPolytope {
    build(
        3,
        7,
        vec![
            vec![0, 1, 2, 3],
            vec![0, 1, 4],
            vec![0, 2, 5],
            vec![0, 4, 5, 6],
            vec![1, 3, 4, 6],
            vec![2, 3, 5, 6],
        ],
    )
}

/// Cyclic polytope with vertices in moment-curve order; facets by Gale's evenness condition.
pub fn cyclic(d: usize, v: usize) -> Result<CombinatorialPolytope> {
    if d < 2 || v < d + 1 {
        return Err(out_of_range("cyclic needs d >= 2 and v >= d+1"));
    }
    let candidates = num_integer::binomial(v as u128, d as u128);
    if candidates > MAX_GALE_CANDIDATES {
        return Err(Error::ResourceLimit(format!(
            "cyclic({d},{v}) has {candidates} candidate facets"
        )));
    }
    let facets = (0..v)
        .combinations(d)
        .filter(|s| satisfies_gale_evenness(s, v))
        .collect();
    Ok(build(d, v, facets))
}

/// Every pair of non-members `i < j` has an even number of members between them.
fn satisfies_gale_evenness(subset: &[usize], v: usize) -> bool {
    let mut member = vec![false; v];
    for &i in subset {
        member[i] = true;
    }
    let outside: Vec<usize> = (0..v).filter(|&i| !member[i]).collect();
    outside.windows(2).all(|w| (w[0] + 1..w[1]).filter(|&i| member[i]).count() % 2 == 0)
}

/// Stacked polytope: start from a simplex and repeatedly erect a pyramid
/// over the lexicographically first facet.
pub fn stacked(d: usize, v: usize) -> Result<CombinatorialPolytope> {
    if d < 2 || v < d + 1 {
        return Err(out_of_range("stacked needs d >= 2 and v >= d+1"));
    }
    let mut facets: Vec<Vec<usize>> = simplex(d).facets().to_vec();
    for new in d + 1..v {
        facets.sort();
        let base = facets.remove(0);
        for skip in 0..base.len() {
            let mut f: Vec<usize> = base.iter().copied().filter(|&x| x != base[skip]).collect();
            f.push(new);
            facets.push(f);
        }
    }
    Ok(build(d, v, facets))
}

/// Every implemented construction of dimension `d` with at most `max_verts` vertices.
///
/// Pyramids are taken only over bases that are not themselves pyramids.
pub fn catalogue(d: usize, max_verts: usize) -> Vec<Family> {
    let mut out: Vec<Family> = apex_free_catalogue(d, max_verts);
    out.push(Family::Simplex { d });
    for k in 2..d {
        out.push(Family::Triplex { k, j: d - k });
    }
    for t in 1..d.saturating_sub(1) {
        for base in apex_free_catalogue(d - t, max_verts.saturating_sub(t)) {
            if !matches!(base, Family::Prism { .. }) {
                out.push(Family::pyramid(base, t));
            }
        }
    }
    out.retain(|f| f.nverts() <= max_verts && f.validate().is_ok());
    out.sort();
    out.dedup();
    out
}

fn apex_free_catalogue(d: usize, max_verts: usize) -> Vec<Family> {
    let mut out = Vec::new();
    if d >= 2 {
        out.push(Family::Prism { d });
        for v in d + 2..=max_verts {
            out.push(Family::Cyclic { d, v });
            if d >= 3 {
                out.push(Family::Stacked { d, v });
            }
        }
    }
    if d >= 3 {
        out.push(Family::Pentasm { d });
    }
    if d == 3 {
        out.push(Family::Sigma3);
    }
    for r in 1..=d / 2 {
        if r < d {
            out.push(Family::DeltaSum { r, s: d - r });
        }
    }
    out.retain(|f| f.nverts() <= max_verts);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trips() {
        for s in [
            "simplex(3)",
            "prism(4)",
            "triplex(2,1)",
            "pentasm(5)",
            "delta_sum(2,3)",
            "sigma3",
            "pyr(pentasm(4))",
            "pyr^3(delta_sum(2,2))",
            "cyclic(4,8)",
            "stacked(3,7)",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("hypercube(3)".parse::<Family>().is_err());
        assert!("prism(3".parse::<Family>().is_err());
        assert!("triplex(3)".parse::<Family>().is_err());
    }

    #[test]
    fn simplex_shapes() {
        assert_eq!(simplex(2).nfacets(), 3);
        assert_eq!(simplex(1).nfacets(), 2);
        assert_eq!(simplex(4).nverts(), 5);
    }

    #[test]
    fn prism_shapes() {
        let p = prism(4).unwrap();
        assert_eq!((p.nverts(), p.nfacets()), (8, 6));
        assert_eq!(prism(2).unwrap().nfacets(), 4);
        assert!(prism(1).is_err());
    }

    #[test]
    fn pentasm_census_sizes() {
        let p = pentasm(5).unwrap();
        let mut sizes: Vec<usize> = p.facets().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        // three simplices, two prisms (2d-2 vertices), d-2 pentasms (2d-1 vertices)
        assert_eq!(sizes, vec![5, 5, 5, 8, 8, 9, 9, 9]);
    }

    #[test]
    fn gale_evenness_polygon() {
        let hex = cyclic(2, 6).unwrap();
        assert_eq!(hex.nfacets(), 6);
        assert!(hex.facets().contains(&vec![0, 5]));
    }

    #[test]
    fn stacked_is_simplicial() {
        let s = stacked(3, 7).unwrap();
        assert!(s.is_simplicial());
        assert_eq!(s.nfacets(), 2 * 7 - 4);
    }

    #[test]
    fn validation() {
        assert!(Family::Pentasm { d: 2 }.build().is_err());
        assert!(Family::Cyclic { d: 4, v: 4 }.build().is_err());
        assert!(Family::pyramid(Family::DeltaSum { r: 0, s: 2 }, 1).build().is_err());
    }

    #[test]
    fn catalogue_dimensions_match() {
        for d in 2..=6 {
            for f in catalogue(d, 2 * d + 2) {
                assert_eq!(f.dim(), d, "{f}");
                assert!(f.nverts() <= 2 * d + 2, "{f}");
            }
        }
    }
}
