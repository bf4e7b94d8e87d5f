//! Exact bounds on edge, facet and face counts, and edge-count feasibility.
//!
//! Every answer carries a [`Status`] saying how much it can be trusted and a
//! short citation naming the result it rests on. Only `ProvedHere` and
//! `LowerBoundOnly` lower bounds, proved upper bounds and proved forbidden
//! bands are ever used to declare an edge count infeasible.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::combinatorics::{
    above_060_of_d_minus_1, above_062, binom, ceil_half, is_prime, phi_unchecked,
};
use crate::constructions::Family;
use crate::error::{out_of_range, Result};
use crate::json;

pub mod cite {
    pub const POLYGON: &str = "a polygon has as many edges as vertices";
    pub const TRIPLEX_MIN: &str = "triplex M(k,d-k) minimises edges among d-polytopes with d+k vertices, k <= d";
    pub const PENTASM_MIN: &str = "pentasm minimises edges among d-polytopes with 2d+1 vertices (d = 3 or d >= 5)";
    pub const DELTA22_MIN: &str = "Delta(2,2) is the unique 4-polytope with 9 vertices and 18 edges, the minimum";
    pub const SIMPLE_MIN: &str = "a simple polytope attains the degree bound dv/2";
    pub const DEGREE_BOUND: &str = "every vertex has degree at least d, so e >= dv/2";
    pub const LOW_DIM_2D2: &str = "min edges (d+3)(d-1) at 2d+2 vertices, known for d = 3 and d = 4";
    pub const CONJ_2D2: &str = "min edges (d+3)(d-1) at 2d+2 vertices, conjectured for d >= 6";
    pub const STEINITZ_MAX: &str = "a 3-polytope has at most 3v-6 edges (Steinitz)";
    pub const CYCLIC_MAX: &str = "cyclic polytopes are 2-neighbourly for d >= 4";
    pub const BAND_K4: &str = "no d-polytope with d+4 vertices has phi(d+4,d)+1 edges";
    pub const BAND_BIG: &str = "a non-triplex d-polytope with d+k vertices, 4 <= k <= d, has at least phi+k-3 edges";
    pub const COMPLETE_D2: &str = "E(d+2,d) is a complete interval";
    pub const COMPLETE_D3: &str = "E(d+3,d) is a complete interval for d >= 4 (pyramids over the d = 4 examples)";
    pub const E63: &str = "E(6,3) = [9,12] (Steinitz)";
    pub const E84: &str = "E(8,4) = {16} u [18,28]";
    pub const SIMPLEX_FACETS: &str = "a simplex is the only d-polytope with d+1 vertices";
    pub const DPLUS2_FACETS: &str = "d-polytopes with d+2 facets are t-fold pyramids over Delta(r,s), with v = d+1+rs";
    pub const PENTASM_FACETS: &str = "no d-polytope with 2d+1 vertices and d+2 facets when d is prime; the pentasm has d+3";
    pub const MCMULLEN_FACETS: &str = "McMullen: d+3 facets are attainable for v <= d^2/4 + 2d";
    pub const RIDGES_2D1: &str = "min ridges at 2d+1 vertices: (d^2+5d-2)/2 for prime d, else (d^2+3d+2)/2 (cited without proof)";
    pub const FM_TRIVIAL: &str = "vertex counts and the simplex case are immediate";
    pub const FM_FACETS: &str = "d+2 facets is the minimum for d+2 <= v <= 2d";
    pub const FM_HIGH: &str = "triplex uniquely minimises f_m for m >= 0.62d (or m >= 0.6(d-1), d <= 15)";
    pub const FM_LOW_DIM: &str = "phi_m is the minimum of f_m for every d <= 5";
    pub const FM_GRUNBAUM: &str = "Grunbaum: phi_m is the minimum of f_m for v <= d+4";
    pub const FM_CONJ: &str = "Grunbaum's conjecture; the triplex attains phi_m, minimality is open";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    ProvedHere,
    CitedUnproved,
    Conjectured,
    LowerBoundOnly,
    UpperBoundOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    #[serde(serialize_with = "json::big")]
    pub value: BigInt,
    pub status: Status,
    pub citation: String,
    pub witness: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unique: Option<bool>,
}

impl BoundResult {
    fn new(value: impl Into<BigInt>, status: Status, citation: &str, witness: Option<Family>) -> Self {
        Self { value: value.into(), status, citation: citation.to_string(), witness, unique: None }
    }

    fn with_unique(mut self, unique: bool) -> Self {
        self.unique = Some(unique);
        self
    }
}

fn phi_edges(v: usize, d: usize) -> BigInt {
    phi_unchecked(1, v as i64, d as i64)
}

fn check_params(v: usize, d: usize) -> Result<()> {
    if d < 2 || v <= d {
        return Err(out_of_range(format!("need d >= 2 and v >= d+1, got v={v}, d={d}")));
    }
    Ok(())
}

/// The `Delta(r,s)` with `r+s = d`, `2 <= r <= s` and `(r+1)(s+1) = v`, if any.
fn simple_delta(v: usize, d: usize) -> Option<Family> {
    (2..=d / 2).map(|r| (r, d - r)).find(|&(r, s)| (r + 1) * (s + 1) == v).map(|(r, s)| Family::DeltaSum { r, s })
}

/// Least number of edges of a `d`-polytope with `v` vertices, as far as it is known.
pub fn min_edges(v: usize, d: usize) -> Result<BoundResult> {
    check_params(v, d)?;
    use Status::*;
    let dv_half = ceil_half(&BigInt::from(d * v));
    Ok(if d == 2 {
        BoundResult::new(v, ProvedHere, cite::POLYGON, Some(Family::Cyclic { d: 2, v }))
    } else if v <= 2 * d {
        let k = v - d;
        let witness = if k == 1 { Family::Simplex { d } } else { Family::Triplex { k, j: d - k } };
        BoundResult::new(phi_edges(v, d), ProvedHere, cite::TRIPLEX_MIN, Some(witness))
    } else if v == 2 * d + 1 {
        if d == 4 {
            BoundResult::new(18, ProvedHere, cite::DELTA22_MIN, Some(Family::DeltaSum { r: 2, s: 2 }))
        } else {
            BoundResult::new(d * d + d - 1, ProvedHere, cite::PENTASM_MIN, Some(Family::Pentasm { d }))
        }
    } else if let Some(delta) = simple_delta(v, d) {
        BoundResult::new(dv_half, ProvedHere, cite::SIMPLE_MIN, Some(delta))
    } else if v == 2 * d + 2 {
        let value = (d + 3) * (d - 1);
        if d <= 4 {
            BoundResult::new(value, CitedUnproved, cite::LOW_DIM_2D2, None)
        } else {
            BoundResult::new(value, Conjectured, cite::CONJ_2D2, None)
        }
    } else {
        BoundResult::new(dv_half, LowerBoundOnly, cite::DEGREE_BOUND, None)
    })
}

/// The lower bound on edges that may be used to rule out an edge count.
fn proved_lower_edges(v: usize, d: usize) -> BigInt {
    match min_edges(v, d) {
        Ok(r) if matches!(r.status, Status::ProvedHere | Status::LowerBoundOnly) => r.value,
        _ => ceil_half(&BigInt::from(d * v)),
    }
}

pub fn max_edges(v: usize, d: usize) -> Result<BoundResult> {
    check_params(v, d)?;
    Ok(match d {
        2 => BoundResult::new(v, Status::ProvedHere, cite::POLYGON, Some(Family::Cyclic { d: 2, v })),
        3 => BoundResult::new(
            3 * v - 6,
            Status::ProvedHere,
            cite::STEINITZ_MAX,
            Some(Family::Stacked { d: 3, v }),
        ),
        _ => BoundResult::new(
            binom(v as i64, 2),
            Status::ProvedHere,
            cite::CYCLIC_MAX,
            Some(Family::Cyclic { d, v }),
        ),
    })
}

/// A closed integer interval; `lo > hi` means empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Band {
    #[serde(serialize_with = "json::big")]
    pub lo: BigInt,
    #[serde(serialize_with = "json::big")]
    pub hi: BigInt,
    pub citation: Option<String>,
}

impl Band {
    fn empty() -> Self {
        Self { lo: BigInt::from(1), hi: BigInt::zero(), citation: None }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, e: &BigInt) -> bool {
        &self.lo <= e && e <= &self.hi
    }

    pub fn values(&self) -> impl Iterator<Item = BigInt> + '_ {
        num_iter(&self.lo, &self.hi)
    }
}

fn num_iter(lo: &BigInt, hi: &BigInt) -> impl Iterator<Item = BigInt> {
    let hi = hi.clone();
    std::iter::successors(Some(lo.clone()), |x| Some(x + 1u32)).take_while(move |x| *x <= hi)
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "{{}}")
        } else if self.lo == self.hi {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// Edge counts strictly between the triplex and the next possible value,
/// for `d`-polytopes with `v = d+k` vertices, `d+1 <= v <= 2d`.
pub fn forbidden_band(v: usize, d: usize) -> Result<Band> {
    if d < 2 || v <= d || v > 2 * d {
        return Err(out_of_range(format!("forbidden bands need d < v <= 2d, got v={v}, d={d}")));
    }
    let k = v - d;
    let phi = phi_edges(v, d);
    Ok(match k {
        0..=3 => Band::empty(),
        4 => Band { lo: &phi + 1u32, hi: &phi + 1u32, citation: Some(cite::BAND_K4.into()) },
        _ => Band { lo: &phi + 1u32, hi: &phi + (k - 4), citation: Some(cite::BAND_BIG.into()) },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Infeasible,
    Feasible,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// What is known about `d`-polytopes with `v` vertices and the queried edge count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexOutcome {
    AboveMax {
        #[serde(serialize_with = "json::big")]
        max: BigInt,
        citation: String,
    },
    BelowMin {
        #[serde(serialize_with = "json::big")]
        min: BigInt,
        citation: String,
    },
    InBand { band: Band },
    Witness { family: Family },
    Cited { citation: String },
    Open,
}

impl VertexOutcome {
    pub fn excludes(&self) -> bool {
        matches!(self, Self::AboveMax { .. } | Self::BelowMin { .. } | Self::InBand { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexRow {
    pub v: usize,
    pub outcome: VertexOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityVerdict {
    pub dim: usize,
    pub edges: u64,
    pub verdict: Verdict,
    pub status: Option<Status>,
    pub reason: String,
    pub citations: Vec<String>,
    pub witness: Option<Family>,
    pub rows: Vec<VertexRow>,
}

impl fmt::Display for FeasibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.verdict, self.reason)
    }
}

/// Closed-form edge count of a `t`-fold pyramid over a base with `v` vertices and `e` edges.
fn pyramid_edges(e: &BigInt, v: usize, t: usize) -> BigInt {
    e + BigInt::from(t * v) + binom(t as i64, 2)
}

/// Searches the implemented families for a `d`-polytope with `v` vertices and `e` edges.
///
/// Candidates are `t`-fold pyramids (`t >= 0`) over prisms, pentasms,
/// `Delta(r,s)`, `Sigma3`, stacked and cyclic polytopes, plus the simplex.
/// Only closed forms are evaluated; nothing is built.
pub fn find_edge_witness(d: usize, v: usize, e: &BigInt) -> Option<Family> {
    if v == d + 1 {
        let simplex = Family::Simplex { d };
        return (simplex.edge_count() == *e).then_some(simplex);
    }
    for t in 0..d.saturating_sub(1) {
        let base_d = d - t;
        let Some(base_v) = v.checked_sub(t) else { break };
        if base_v <= base_d + 1 {
            continue;
        }
        let mut bases: Vec<Family> = Vec::new();
        if base_v == 2 * base_d {
            bases.push(Family::Prism { d: base_d });
        }
        if base_d >= 3 && base_v == 2 * base_d + 1 {
            bases.push(Family::Pentasm { d: base_d });
        }
        if let Some(delta) = simple_delta(base_v, base_d) {
            bases.push(delta);
        }
        if base_d == 3 && base_v == 7 {
            bases.push(Family::Sigma3);
        }
        if base_d >= 3 {
            bases.push(Family::Stacked { d: base_d, v: base_v });
        }
        bases.push(Family::Cyclic { d: base_d, v: base_v });
        for base in bases {
            if pyramid_edges(&base.edge_count(), base_v, t) == *e {
                return Some(match (base, t) {
                    (Family::Prism { d: k }, t) if t > 0 => Family::Triplex { k, j: t },
                    (base, t) => Family::pyramid(base, t),
                });
            }
        }
    }
    None
}

/// Complete intervals of edge counts known from the literature.
fn cited_feasible(v: usize, d: usize, e: &BigInt) -> Option<&'static str> {
    let k = v - d;
    let within = |lo: BigInt, hi: BigInt| &lo <= e && e <= &hi;
    let top = binom(v as i64, 2);
    match (d, k) {
        (3, 3) if within(9.into(), 12.into()) => Some(cite::E63),
        (4, 4) if *e == BigInt::from(16) || within(18.into(), 28.into()) => Some(cite::E84),
        (3.., 2) if within(phi_edges(v, d), max_edges(v, d).ok()?.value) => Some(cite::COMPLETE_D2),
        (4.., 3) if within(phi_edges(v, d), top) => Some(cite::COMPLETE_D3),
        _ => None,
    }
}

fn vertex_outcome(v: usize, d: usize, e: &BigInt) -> VertexOutcome {
    let max = max_edges(v, d).expect("v > d");
    if e > &max.value {
        return VertexOutcome::AboveMax { max: max.value, citation: max.citation };
    }
    let min = proved_lower_edges(v, d);
    if e < &min {
        let citation = min_edges(v, d)
            .ok()
            .filter(|r| r.value == min)
            .map_or(cite::DEGREE_BOUND.to_string(), |r| r.citation);
        return VertexOutcome::BelowMin { min, citation };
    }
    if v <= 2 * d {
        let band = forbidden_band(v, d).expect("d < v <= 2d");
        if band.contains(e) {
            return VertexOutcome::InBand { band };
        }
    }
    if let Some(family) = find_edge_witness(d, v, e) {
        return VertexOutcome::Witness { family };
    }
    match cited_feasible(v, d, e) {
        Some(c) => VertexOutcome::Cited { citation: c.to_string() },
        None => VertexOutcome::Open,
    }
}

/// Decides, as far as the encoded theorems and constructions allow, whether
/// some `d`-polytope has exactly `e` edges.
///
/// Vertex counts from `d+1` up to the first `v` with `dv/2 > e` are swept.
pub fn edges_feasible(d: usize, e: u64) -> Result<FeasibilityVerdict> {
    if d < 2 {
        return Err(out_of_range(format!("need d >= 2, got d={d}")));
    }
    let eb = BigInt::from(e);
    let v_max = ((2 * e / d as u64) as usize + 1).max(d + 1);
    let rows: Vec<VertexRow> =
        (d + 1..=v_max).map(|v| VertexRow { v, outcome: vertex_outcome(v, d, &eb) }).collect();

    let mut citations: Vec<String> = Vec::new();
    let mut cite_once = |c: &str| {
        if !citations.iter().any(|x| x == c) {
            citations.push(c.to_string());
        }
    };

    if rows.iter().all(|r| r.outcome.excludes()) {
        let mut parts = Vec::new();
        let mut last_max: Option<(usize, &BigInt)> = None;
        let mut first_min: Option<(usize, &BigInt)> = None;
        for row in &rows {
            match &row.outcome {
                VertexOutcome::InBand { band } => {
                    parts.push(format!("v={} band {band}", row.v));
                    cite_once(band.citation.as_deref().unwrap_or_default());
                }
                VertexOutcome::AboveMax { max, citation } => {
                    last_max = Some((row.v, max));
                    cite_once(citation);
                }
                VertexOutcome::BelowMin { min, citation } => {
                    first_min = first_min.or(Some((row.v, min)));
                    cite_once(citation);
                }
                _ => unreachable!("all rows exclude"),
            }
        }
        if let Some((v, max)) = last_max {
            parts.push(format!("v≤{v} max {max}"));
        }
        if let Some((v, min)) = first_min {
            parts.push(format!("v≥{v} min {min}"));
        }
        return Ok(FeasibilityVerdict {
            dim: d,
            edges: e,
            verdict: Verdict::Infeasible,
            status: Some(Status::ProvedHere),
            reason: parts.join("; "),
            citations,
            witness: None,
            rows,
        });
    }

    if let Some((v, family)) = rows.iter().find_map(|r| match &r.outcome {
        VertexOutcome::Witness { family } => Some((r.v, family.clone())),
        _ => None,
    }) {
        return Ok(FeasibilityVerdict {
            dim: d,
            edges: e,
            verdict: Verdict::Feasible,
            status: Some(Status::ProvedHere),
            reason: format!("v={v} witness {family}"),
            citations,
            witness: Some(family),
            rows,
        });
    }

    if let Some((v, citation)) = rows.iter().find_map(|r| match &r.outcome {
        VertexOutcome::Cited { citation } => Some((r.v, citation.clone())),
        _ => None,
    }) {
        cite_once(&citation);
        return Ok(FeasibilityVerdict {
            dim: d,
            edges: e,
            verdict: Verdict::Feasible,
            status: Some(Status::CitedUnproved),
            reason: format!("v={v}: {citation}"),
            citations,
            witness: None,
            rows,
        });
    }

    let open: Vec<String> = rows
        .iter()
        .filter(|r| r.outcome == VertexOutcome::Open)
        .map(|r| r.v.to_string())
        .collect();
    Ok(FeasibilityVerdict {
        dim: d,
        edges: e,
        verdict: Verdict::Unknown,
        status: None,
        reason: format!("no exclusion or witness at v={}", open.join(",")),
        citations,
        witness: None,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxDimension {
    pub edges: u64,
    pub dim: usize,
    pub certificates: Vec<FeasibilityVerdict>,
}

/// Largest `d` for which a `d`-polytope with `e` edges is not ruled out.
///
/// Every `d` from 2 up to the first one with `C(d+1,2) > e` is checked;
/// beyond that the simplex already has too many edges.
pub fn max_dimension_for_edges(e: u64) -> Result<MaxDimension> {
    if e < 3 {
        return Err(out_of_range(format!("need e >= 3, got {e}")));
    }
    let mut stop = 2;
    while (stop as u64) * (stop as u64 + 1) / 2 <= e {
        stop += 1;
    }
    let certificates: Vec<FeasibilityVerdict> =
        (2..=stop).map(|d| edges_feasible(d, e)).collect::<Result<_>>()?;
    let dim = certificates
        .iter()
        .rev()
        .find(|c| c.verdict != Verdict::Infeasible)
        .map(|c| c.dim)
        .expect("a polygon with e edges exists");
    Ok(MaxDimension { edges: e, dim, certificates })
}

/// Every edge count `e >= C(d+1,2)` that no `d`-polytope can have.
///
/// Counts beyond `d^2 + d` are never excluded, so the scan stops there.
pub fn gaps(d: usize) -> Result<Vec<FeasibilityVerdict>> {
    if d < 2 {
        return Err(out_of_range(format!("need d >= 2, got d={d}")));
    }
    let lo = (d * (d + 1) / 2) as u64;
    let hi = (d * d + d) as u64;
    (lo..=hi)
        .map(|e| edges_feasible(d, e))
        .filter(|r| r.as_ref().map_or(true, |v| v.verdict == Verdict::Infeasible))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcessBounds {
    #[serde(serialize_with = "json::opt_big")]
    pub lower: Option<BigInt>,
    #[serde(serialize_with = "json::big")]
    pub upper: BigInt,
    #[serde(serialize_with = "json::big")]
    pub simplicial_lower: BigInt,
}

/// Bounds on the excess degree `2e - dv` of a `d`-polytope with `v = d+k` vertices.
///
/// `lower` is `None` when `k > d`, where the triplex bound does not apply.
pub fn excess_bounds(v: usize, d: usize) -> Result<ExcessBounds> {
    if d < 3 || v <= d {
        return Err(out_of_range(format!("need d >= 3 and k = v-d >= 1, got v={v}, d={d}")));
    }
    let k = (v - d) as i64;
    let d = d as i64;
    Ok(ExcessBounds {
        lower: (k <= d).then(|| BigInt::from((k - 1) * (d - k))),
        upper: BigInt::from(if d == 3 { 3 * (k - 1) } else { (k - 1) * (d + k) }),
        simplicial_lower: BigInt::from((k - 1) * d),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Reachability {
    /// `v` is the vertex count of `seed` after `vertex_cuts` vertex
    /// truncations and `edge_cuts` edge truncations, all keeping it simple.
    Reachable { seed: Family, vertex_cuts: usize, edge_cuts: usize },
    Unknown,
}

/// Whether a simple `d`-polytope with `v` vertices is known to exist.
///
/// Cutting a vertex off a simple polytope adds `d-1` vertices and cutting an
/// edge adds `2d-4`; seeds are the simplex, the prism and the `Delta(r,s)`.
pub fn simple_vertex_reachable(v: usize, d: usize) -> Result<Reachability> {
    if d < 3 {
        return Err(out_of_range(format!("need d >= 3, got d={d}")));
    }
    let mut seeds = vec![(Family::Simplex { d }, d + 1), (Family::Prism { d }, 2 * d)];
    for r in 2..=d / 2 {
        seeds.push((Family::DeltaSum { r, s: d - r }, (r + 1) * (d - r + 1)));
    }
    if let Some((seed, _)) = seeds.iter().find(|(_, n)| *n == v) {
        return Ok(Reachability::Reachable { seed: seed.clone(), vertex_cuts: 0, edge_cuts: 0 });
    }
    let (vc, ec) = (d - 1, 2 * d - 4);
    for (seed, base) in seeds {
        let Some(rest) = v.checked_sub(base) else { continue };
        for edge_cuts in 0..=rest / ec {
            let left = rest - edge_cuts * ec;
            if left % vc == 0 {
                return Ok(Reachability::Reachable { seed, vertex_cuts: left / vc, edge_cuts });
            }
        }
    }
    Ok(Reachability::Unknown)
}

/// All `(r, s, t)` with `rs = k-1`, `1 <= r <= s` and `t = d-r-s >= 0`.
///
/// These are exactly the `d`-polytopes with `d+k` vertices and `d+2` facets,
/// each a `t`-fold pyramid over `Delta(r,s)`.
pub fn dplus2_decompositions(k: usize, d: usize) -> Result<Vec<(usize, usize, usize)>> {
    if k < 2 {
        return Err(out_of_range(format!("need k >= 2, got {k}")));
    }
    let n = k - 1;
    Ok((1..)
        .take_while(|r| r * r <= n)
        .filter(|r| n.is_multiple_of(*r))
        .map(|r| (r, n / r))
        .filter(|&(r, s)| r + s <= d)
        .map(|(r, s)| (r, s, d - r - s))
        .collect())
}

fn dplus2_family((r, s, t): (usize, usize, usize)) -> Family {
    if r == 1 {
        Family::Triplex { k: s + 1, j: t }
    } else {
        Family::pyramid(Family::DeltaSum { r, s }, t)
    }
}

/// Least number of facets of a `d`-polytope with `v` vertices, for `v <= d^2/4 + 2d`.
pub fn min_facets(v: usize, d: usize) -> Result<BoundResult> {
    check_params(v, d)?;
    let k = v - d;
    if v == d + 1 {
        return Ok(BoundResult::new(d + 1, Status::ProvedHere, cite::SIMPLEX_FACETS, Some(Family::Simplex { d }))
            .with_unique(true));
    }
    if 4 * v > d * d + 8 * d {
        return Err(out_of_range(format!(
            "facet minima are encoded only for v <= d^2/4 + 2d, got v={v}, d={d}"
        )));
    }
    let decomps = dplus2_decompositions(k, d)?;
    if let Some(&first) = decomps.first() {
        let status = Status::ProvedHere;
        let citation = if k <= d { cite::FM_FACETS } else { cite::DPLUS2_FACETS };
        return Ok(BoundResult::new(d + 2, status, citation, Some(dplus2_family(first)))
            .with_unique(decomps.len() == 1));
    }
    if v == 2 * d + 1 {
        return Ok(BoundResult::new(d + 3, Status::ProvedHere, cite::PENTASM_FACETS, Some(Family::Pentasm { d }))
            .with_unique(false));
    }
    Ok(BoundResult::new(d + 3, Status::CitedUnproved, cite::MCMULLEN_FACETS, None))
}

/// Least number of ridges of a `d`-polytope with `2d+1` vertices.
pub fn min_ridges_2dplus1(d: usize) -> Result<BoundResult> {
    if d < 3 {
        return Err(out_of_range(format!("need d >= 3, got d={d}")));
    }
    let decomps = dplus2_decompositions(d + 1, d)?;
    Ok(if is_prime(d as i64) {
        BoundResult::new((d * d + 5 * d - 2) / 2, Status::CitedUnproved, cite::RIDGES_2D1, Some(Family::Pentasm { d }))
            .with_unique(true)
    } else {
        BoundResult::new(
            (d * d + 3 * d + 2) / 2,
            Status::CitedUnproved,
            cite::RIDGES_2D1,
            decomps.first().copied().map(dplus2_family),
        )
        .with_unique(decomps.len() == 1)
    })
}

/// `phi_m(v, d)` as a bound on `m`-faces of `d`-polytopes with `d < v <= 2d`.
///
/// The triplex always attains it; the status records whether minimality is known.
pub fn fm_lower_bound(v: usize, d: usize, m: usize) -> Result<BoundResult> {
    if d < 2 || v <= d || v > 2 * d {
        return Err(out_of_range(format!("f_m bounds need d < v <= 2d, got v={v}, d={d}")));
    }
    if m >= d {
        return Err(out_of_range(format!("need m < d, got m={m}, d={d}")));
    }
    let k = v - d;
    let value = phi_unchecked(m as i64, v as i64, d as i64);
    let witness = Some(if k == 1 { Family::Simplex { d } } else { Family::Triplex { k, j: d - k } });
    let (mi, di) = (m as i64, d as i64);
    let (status, citation) = if m == 0 || k == 1 {
        (Status::ProvedHere, cite::FM_TRIVIAL)
    } else if m == 1 {
        (Status::ProvedHere, cite::TRIPLEX_MIN)
    } else if m == d - 1 {
        (Status::ProvedHere, cite::FM_FACETS)
    } else if above_062(mi, di) || (above_060_of_d_minus_1(mi, di) && d <= 15) {
        (Status::ProvedHere, cite::FM_HIGH)
    } else if d <= 5 {
        (Status::ProvedHere, cite::FM_LOW_DIM)
    } else if k <= 4 {
        (Status::CitedUnproved, cite::FM_GRUNBAUM)
    } else {
        (Status::Conjectured, cite::FM_CONJ)
    };
    Ok(BoundResult::new(value, status, citation, witness))
}

/// A bound answer tagged with the query that produced it, for JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct QueryRecord<T: Serialize> {
    pub query: String,
    #[serde(flatten)]
    pub result: T,
}

impl<T: Serialize> QueryRecord<T> {
    pub fn new(query: impl Into<String>, result: T) -> Self {
        Self { query: query.into(), result }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// One row of the `(v, d)` grid of edge minima.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub v: usize,
    pub d: usize,
    #[serde(serialize_with = "json::big")]
    pub value: BigInt,
    pub status: Status,
    pub witness: Option<Family>,
}

/// `bound(v, d)` for `2 <= d <= max_dim` and `d < v <= 2d + 2`.
pub fn bound_table(
    max_dim: usize,
    bound: impl Fn(usize, usize) -> Result<BoundResult>,
) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for d in 2..=max_dim {
        for v in d + 1..=2 * d + 2 {
            let r = bound(v, d)?;
            rows.push(TableRow { v, d, value: r.value, status: r.status, witness: r.witness });
        }
    }
    Ok(rows)
}

/// `e` as a `u64` if it fits.
pub fn small(e: &BigInt) -> Option<u64> {
    e.to_u64()
}
