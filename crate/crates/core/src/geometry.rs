//! Exact-rational point configurations and a brute-force convex hull.
//!
//! This module is deliberately independent of the combinatorial
//! constructors: it realizes each family by explicit coordinates, recovers
//! the facets from scratch, and lets [`cross_check`] compare the two.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::constructions::Family;
use crate::error::{Error, Result};
use crate::iso::are_isomorphic;
use crate::lattice::enumerate_lattice;
use crate::polytope::{CombinatorialPolytope, VertexSet};

pub const MAX_POINTS_ENV: &str = "POLYGAP_MAX_POINTS";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        // BigRational is always kept reduced with a positive denominator.
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Unit vector `e_i` (1-based) in `dim`-space.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut p = Self::origin(dim);
        p.coords[i - 1] = BigRational::one();
        p
    }

    pub fn origin(dim: usize) -> Self {
        Self::new(vec![BigRational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coords.iter().map(|a| a * k).collect())
    }

    /// Pads with zero coordinates up to `dim`.
    pub fn embed(&self, dim: usize) -> Self {
        let mut coords = self.coords.clone();
        coords.resize(dim, BigRational::zero());
        Self::new(coords)
    }

    fn dot(&self, normal: &[BigRational]) -> BigRational {
        self.coords.iter().zip(normal).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coords.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Points in a common ambient space, each with a display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    points: Vec<RationalPoint>,
    labels: Vec<String>,
}

impl PointConfiguration {
    pub fn new(points: Vec<RationalPoint>) -> Result<Self> {
        let labels = (0..points.len()).map(|i| format!("p{i}")).collect();
        Self::with_labels(points, labels)
    }

    pub fn with_labels(points: Vec<RationalPoint>, labels: Vec<String>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidPolytope("point configuration is empty".into()));
        }
        if labels.len() != points.len() {
            return Err(Error::InvalidPolytope("one label per point is required".into()));
        }
        let dim = points[0].dim();
        if points.iter().any(|p| p.dim() != dim) {
            return Err(Error::InvalidPolytope("points have different lengths".into()));
        }
        let distinct: BTreeSet<&RationalPoint> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::InvalidPolytope("points are not pairwise distinct".into()));
        }
        Ok(Self { points, labels })
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn affine_dim(&self) -> usize {
        let rows: Vec<Vec<BigRational>> =
            self.points[1..].iter().map(|p| p.sub(&self.points[0]).coords).collect();
        rank(rows, self.ambient_dim())
    }

    /// Parses the plain-text point format: a header `d n`, then `n` lines of
    /// `d` coordinates written as `p/q` or plain integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty point file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header `{header}`"))))
            .collect::<Result<_>>()?;
        let [d, n] = nums[..] else {
            return Err(Error::Parse(format!("header must be `d n`, got `{header}`")));
        };
        let mut points = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            let coords: Vec<BigRational> =
                line.split_whitespace().map(parse_rational).collect::<Result<_>>()?;
            if coords.len() != d {
                return Err(Error::Parse(format!(
                    "point {i} has {} coordinates, expected {d}",
                    coords.len()
                )));
            }
            points.push(RationalPoint::new(coords));
        }
        if points.len() != n {
            return Err(Error::Parse(format!("expected {n} points, found {}", points.len())));
        }
        Self::new(points)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.ambient_dim(), self.len());
        for p in &self.points {
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }
}

fn parse_rational(tok: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{tok}`"));
    let (num, den) = match tok.split_once('/') {
        Some((a, b)) => (a, b),
        None => (tok, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{tok}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Row echelon form in place; returns the pivot columns.
fn echelon(rows: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..ncols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn rank(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> usize {
    echelon(&mut rows, ncols).len()
}

/// Normal of the hyperplane through `pts`, or `None` if they are affinely dependent.
fn hyperplane_normal(pts: &[&RationalPoint], dim: usize) -> Option<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = pts[1..].iter().map(|p| p.sub(pts[0]).coords).collect();
    let pivots = echelon(&mut rows, dim);
    if pivots.len() != dim - 1 {
        return None;
    }
    let free = (0..dim).find(|c| !pivots.contains(c)).expect("one free column");
    let mut normal = vec![BigRational::zero(); dim];
    normal[free] = BigRational::one();
    for (row, &pc) in rows.iter().zip(&pivots) {
        normal[pc] = -row[free].clone();
    }
    Some(normal)
}

/// Size limits for the brute-force hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_points: usize,
    pub max_dim: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self { max_points: 16, max_dim: 6 }
    }
}

impl OracleLimits {
    /// Defaults, with the point limit overridden by `POLYGAP_MAX_POINTS` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var(MAX_POINTS_ENV).ok().and_then(|s| s.parse().ok()) {
            limits.max_points = n;
        }
        limits
    }

    fn check(&self, npoints: usize, dim: usize) -> Result<()> {
        if npoints > self.max_points || dim > self.max_dim {
            return Err(Error::ResourceLimit(format!(
                "oracle is limited to {} points in dimension {}, got {npoints} points in dimension {dim}",
                self.max_points, self.max_dim
            )));
        }
        Ok(())
    }
}

pub fn hull_facets(cfg: &PointConfiguration) -> Result<CombinatorialPolytope> {
    hull_facets_with(cfg, OracleLimits::from_env())
}

/// Facets of the convex hull, found by testing every hyperplane spanned by `d` of the points.
pub fn hull_facets_with(cfg: &PointConfiguration, limits: OracleLimits) -> Result<CombinatorialPolytope> {
    let d = cfg.ambient_dim();
    let n = cfg.len();
    limits.check(n, d)?;
    let affine = cfg.affine_dim();
    if affine != d || d == 0 {
        return Err(Error::NotFullDimensional { affine, ambient: d });
    }
    let pts = cfg.points();
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for subset in (0..n).combinations(d) {
        let chosen: Vec<&RationalPoint> = subset.iter().map(|&i| &pts[i]).collect();
        let Some(normal) = hyperplane_normal(&chosen, d) else {
            continue;
        };
        let offset = chosen[0].dot(&normal);
        let (mut above, mut below, mut on) = (false, false, Vec::new());
        for (i, p) in pts.iter().enumerate() {
            let side = p.dot(&normal) - &offset;
            if side.is_zero() {
                on.push(i);
            } else if side.is_positive() {
                above = true;
            } else {
                below = true;
            }
        }
        if !(above && below) {
            facets.insert(on);
        }
    }
    let facets: Vec<Vec<usize>> = facets.into_iter().collect();
    let sets: Vec<VertexSet> =
        facets.iter().map(|f| VertexSet::from_indices(n, f.iter().copied())).collect();
    for i in 0..n {
        let mut meet = VertexSet::full(n);
        let mut count = 0;
        for s in sets.iter().filter(|s| s.contains(i)) {
            meet = meet.intersection(s);
            count += 1;
        }
        if count < d || meet.len() != 1 {
            return Err(Error::NotAVertex(i));
        }
    }
    CombinatorialPolytope::new(d, n, facets)
}

/// Explicit coordinates for a family instance, with vertices in the constructor's order.
pub fn realize(tag: &Family) -> Result<PointConfiguration> {
    realize_with(tag, OracleLimits::from_env())
}

pub fn realize_with(tag: &Family, limits: OracleLimits) -> Result<PointConfiguration> {
    tag.validate()?;
    limits.check(tag.nverts(), tag.dim())?;
    let (points, labels) = realize_unchecked(tag)?;
    PointConfiguration::with_labels(points, labels)
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// `{0, e_1, .., e_{k-1}} x {0, e_k}` in `k`-space; for `k = 1` this is a segment.
fn prism_points(k: usize) -> (Vec<RationalPoint>, Vec<String>) {
    let base = |i: usize| if i == 0 { RationalPoint::origin(k) } else { RationalPoint::unit(k, i) };
    let top = RationalPoint::unit(k, k);
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for eps in 0..2 {
        for i in 0..k {
            let p = if eps == 0 { base(i) } else { base(i).add(&top) };
            points.push(p);
            labels.push(format!("({i},{eps})"));
        }
    }
    (points, labels)
}

fn realize_unchecked(tag: &Family) -> Result<(Vec<RationalPoint>, Vec<String>)> {
    let d = tag.dim();
    let numbered = |prefix: &str, n: usize| (0..n).map(|i| format!("{prefix}{i}")).collect();
    Ok(match tag {
        Family::Simplex { d } => {
            let pts = std::iter::once(RationalPoint::origin(*d))
                .chain((1..=*d).map(|i| RationalPoint::unit(*d, i)))
                .collect();
            (pts, numbered("a", d + 1))
        }
        Family::Prism { d } => prism_points(*d),
        Family::Triplex { k, j } => {
            let (mut pts, mut labels) = prism_points(*k);
            pts = pts.iter().map(|p| p.embed(d)).collect();
            for a in 1..=*j {
                pts.push(RationalPoint::unit(d, k + a));
                labels.push(format!("apex{a}"));
            }
            (pts, labels)
        }
        Family::Pentasm { d } => {
            let e = |i: usize| RationalPoint::unit(*d, i);
            let e12 = e(1).add(&e(2));
            let mut pts: Vec<RationalPoint> = (1..=*d).map(|i| e12.add(&e(i))).collect();
            pts.push(RationalPoint::origin(*d));
            pts.extend((1..=*d).map(e));
            let labels = (1..=*d)
                .map(|i| format!("u{i}"))
                .chain((0..=*d).map(|i| format!("v{i}")))
                .collect();
            (pts, labels)
        }
        Family::DeltaSum { r, s } => {
            let a = |i: usize| if i == 0 { RationalPoint::origin(d) } else { RationalPoint::unit(d, i) };
            let b = |j: usize| if j == 0 { RationalPoint::origin(d) } else { RationalPoint::unit(d, r + j) };
            let mut pts = Vec::new();
            let mut labels = Vec::new();
            for i in 0..=*r {
                for j in 0..=*s {
                    pts.push(a(i).add(&b(j)));
                    labels.push(format!("({i},{j})"));
                }
            }
            (pts, labels)
        }
        Family::Sigma3 => {
            let pts = [
                [0, 0, 0],
                [1, 0, 0],
                [0, 1, 0],
                [1, 1, 0],
                [1, 0, 1],
                [0, 1, 1],
                [1, 1, 2],
            ]
            .iter()
            .map(|c| RationalPoint::from_ints(c))
            .collect();
            (pts, numbered("s", 7))
        }
        Family::Pyramid { base, t } => {
            let (pts, mut labels) = realize_unchecked(base)?;
            let mut pts: Vec<RationalPoint> = pts.iter().map(|p| p.embed(d)).collect();
            for a in 1..=*t {
                pts.push(RationalPoint::unit(d, base.dim() + a));
                labels.push(format!("apex{a}"));
            }
            (pts, labels)
        }
        Family::Cyclic { d, v } => {
            let pts = (0..*v as i64)
                .map(|t| RationalPoint::new((1..=*d as u32).map(|k| int(t.pow(k))).collect()))
                .collect();
            (pts, numbered("t", *v))
        }
        Family::Stacked { .. } => {
            return Err(Error::Unsupported(format!("no coordinate realization for {tag}")))
        }
    })
}

/// Whether the hull of `realize(tag)` is combinatorially equivalent to `tag.build()`.
pub fn cross_check(tag: &Family) -> Result<bool> {
    let hull = hull_facets(&realize(tag)?)?;
    are_isomorphic(&hull, &tag.build()?)
}

/// Cuts off the simple vertex `index`, replacing it by the midpoints of its incident edges.
pub fn truncate_vertex(cfg: &PointConfiguration, index: usize) -> Result<PointConfiguration> {
    let hull = hull_facets(cfg)?;
    let lattice = enumerate_lattice(&hull)?;
    let neighbours: Vec<usize> = lattice
        .edges()
        .into_iter()
        .filter_map(|(a, b)| match (a == index, b == index) {
            (true, _) => Some(b),
            (_, true) => Some(a),
            _ => None,
        })
        .collect();
    if neighbours.len() != hull.dim() {
        return Err(Error::Unsupported(format!(
            "vertex {index} has degree {}, only simple vertices can be truncated",
            neighbours.len()
        )));
    }
    let half = BigRational::new(1.into(), 2.into());
    let p = &cfg.points()[index];
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (i, (q, l)) in cfg.points().iter().zip(cfg.labels()).enumerate() {
        if i != index {
            points.push(q.clone());
            labels.push(l.clone());
        }
    }
    for &q in &neighbours {
        points.push(p.add(&cfg.points()[q]).scale(&half));
        labels.push(format!("cut{}", cfg.labels()[q]));
    }
    PointConfiguration::with_labels(points, labels)
}

/// Hull of `M_{2,d-2}` with one simple vertex truncated.
pub fn truncated_triplex(d: usize) -> Result<CombinatorialPolytope> {
    if d < 2 {
        return Err(Error::OutOfRange("truncated triplex needs d >= 2".into()));
    }
    let cfg = realize(&Family::Triplex { k: 2, j: d - 2 })?;
    let lattice = enumerate_lattice(&hull_facets(&cfg)?)?;
    let simple = lattice
        .degrees()
        .iter()
        .position(|&deg| deg == d)
        .ok_or_else(|| Error::Unsupported("triplex has no simple vertex".into()))?;
    hull_facets(&truncate_vertex(&cfg, simple)?)
}
