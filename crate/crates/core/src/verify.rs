//! The acceptance checks, runnable from tests and from the command line.
//!
//! Each check returns a one-line detail on success and a list of the
//! failing sub-checks otherwise. Time limits are part of the check.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bounds::{
    dplus2_decompositions, edges_feasible, max_dimension_for_edges, min_facets, min_ridges_2dplus1,
    Verdict,
};
use crate::combinatorics::{
    above_alpha, above_beta, alpha_margin, alpha_margin_factored, beta_margin, beta_margin_factored,
    outside_vertices_identity_residual, is_prime, pentasm_fvector, phi, phi_edges_surplus_form, triplex_fvector,
};
use crate::constructions::{catalogue, pentasm, prism, sigma3, simplex, triplex, Family};
use crate::geometry::{cross_check, truncated_triplex};
use crate::iso::are_isomorphic;
use crate::lattice::{enumerate_lattice, facet_census};

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
    #[serde(serialize_with = "opt_secs")]
    pub limit: Option<Duration>,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64((d.as_secs_f64() * 1000.0).round() / 1000.0)
}

fn opt_secs<S: serde::Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => secs(d, s),
        None => s.serialize_none(),
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AC{:<2} {} {:<28} {:>8.3}s  {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type CheckFn = fn() -> Result<String, Vec<String>>;

struct Check {
    name: &'static str,
    limit: Option<Duration>,
    run: CheckFn,
}

const CHECKS: [Check; 10] = [
    Check { name: "identity sweep", limit: Some(Duration::from_secs(5)), run: identity_sweep },
    Check { name: "triplex f-vectors", limit: Some(Duration::from_secs(30)), run: triplex_data },
    Check { name: "pentasm", limit: None, run: pentasm_data },
    Check { name: "oracle equivalence", limit: Some(Duration::from_secs(120)), run: oracle_equivalence },
    Check { name: "gap reproduction", limit: Some(Duration::from_secs(10)), run: gap_reproduction },
    Check { name: "square gap sweep", limit: None, run: square_gap_sweep },
    Check { name: "euler relation", limit: None, run: euler_relation },
    Check { name: "uniqueness catalogue", limit: None, run: uniqueness_catalogue },
    Check { name: "facet and ridge minima", limit: None, run: facet_ridge_minima },
    Check { name: "margin positivity", limit: None, run: margin_positivity },
];

pub const CHECK_COUNT: usize = CHECKS.len();

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

/// Runs acceptance check `id` (1-based).
pub fn run(id: usize) -> CheckOutcome {
    let check = &CHECKS[id - 1];
    let start = Instant::now();
    let result = (check.run)();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(detail) => (true, detail),
        Err(failures) => (false, failures.join("; ")),
    };
    if let Some(limit) = check.limit {
        if elapsed > limit {
            passed = false;
            detail = format!("exceeded {}s limit; {detail}", limit.as_secs());
        }
    }
    CheckOutcome { id, name: check.name, passed, detail, elapsed, limit: check.limit }
}

/// Runs every check, one thread per check, and returns them in order.
pub fn run_all() -> Vec<CheckOutcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = (1..=CHECK_COUNT).map(|id| s.spawn(move || run(id))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    })
}

/// Collects failures; `Ok` carries `summary` when there are none.
struct Failures(Vec<String>);

impl Failures {
    fn new() -> Self {
        Self(Vec::new())
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn finish(self, summary: String) -> Result<String, Vec<String>> {
        if self.0.is_empty() {
            Ok(summary)
        } else {
            Err(self.0)
        }
    }
}

fn err_str(e: impl fmt::Display) -> String {
    e.to_string()
}

fn identity_sweep() -> Result<String, Vec<String>> {
    let mut f = Failures::new();
    let mut count = 0;
    for d in 1..=50i64 {
        for k in 1..=d {
            for n in 1..=k {
                let r = outside_vertices_identity_residual(d, k, n).map_err(|e| vec![err_str(e)])?;
                f.check(r.is_zero(), || format!("residual {r} at d={d} k={k} n={n}"));
                count += 1;
            }
            if d >= 2 {
                let a = phi_edges_surplus_form(d, k).map_err(|e| vec![err_str(e)])?;
                let b = phi(1, d + k, d).map_err(|e| vec![err_str(e)])?;
                f.check(a == b, || format!("surplus form {a} != phi {b} at d={d} k={k}"));
            }
        }
    }
    f.finish(format!("{count} identity instances vanish; surplus form agrees for d <= 50"))
}

fn triplex_data() -> Result<String, Vec<String>> {
    let mut f = Failures::new();
    let mut count = 0;
    for d in 1..=7usize {
        for k in 1..=d {
            let p = triplex(k, d - k).map_err(|e| vec![err_str(e)])?;
            let got = enumerate_lattice(&p).map_err(|e| vec![err_str(e)])?.f_vector_big();
            let want = triplex_fvector(d as i64, k as i64).map_err(|e| vec![err_str(e)])?;
            f.check(got == want, || format!("M({k},{}) has {got:?}, expected {want:?}", d - k));
            count += 1;
        }
    }
    f.finish(format!("{count} triplices match phi_m exactly"))
}

fn pentasm_data() -> Result<String, Vec<String>> {
    let mut f = Failures::new();
    for d in 3..=7usize {
        let p = pentasm(d).map_err(|e| vec![err_str(e)])?;
        let got = enumerate_lattice(&p).map_err(|e| vec![err_str(e)])?.f_vector_big();
        let want = pentasm_fvector(d as i64).map_err(|e| vec![err_str(e)])?;
        f.check(got == want, || format!("pentasm({d}) has {got:?}, expected {want:?}"));
        f.check(got[1] == BigInt::from(d * d + d - 1), || format!("pentasm({d}) edge count {}", got[1]));
        if d >= 4 {
            let census = facet_census(&p).map_err(|e| vec![err_str(e)])?;
            let kinds: Vec<(usize, usize)> = census.iter().map(|c| (c.facet.nverts(), c.count)).collect();
            let expect = vec![(d, 3), (2 * d - 2, 2), (2 * d - 1, d - 2)];
            f.check(kinds == expect, || format!("pentasm({d}) census {kinds:?}, expected {expect:?}"));
            let types = [simplex(d - 1), prism(d - 1).expect("d >= 4"), pentasm(d - 1).expect("d >= 4")];
            for (class, ty) in census.iter().zip(&types) {
                let same = are_isomorphic(&class.facet, ty).unwrap_or(false);
                f.check(same, || format!("pentasm({d}) facet class with {} vertices has the wrong type", class.facet.nverts()));
            }
        }
    }
    f.finish("f-vectors for 3 <= d <= 7 and census (3 simplices, 2 prisms, d-2 pentasms) for 4 <= d <= 7".into())
}

fn oracle_equivalence() -> Result<String, Vec<String>> {
    let mut tags: Vec<Family> = (3..=5).map(|d| Family::Pentasm { d }).collect();
    tags.push(Family::Sigma3);
    tags.push(Family::DeltaSum { r: 2, s: 2 });
    tags.push(Family::DeltaSum { r: 2, s: 3 });
    for d in 1..=5 {
        for k in 1..=d {
            tags.push(Family::Triplex { k, j: d - k });
        }
    }
    tags.extend((3..=5).map(|d| Family::Prism { d }));
    let mut f = Failures::new();
    for tag in &tags {
        match cross_check(tag) {
            Ok(ok) => f.check(ok, || format!("hull of realize({tag}) differs from the constructor")),
            Err(e) => f.check(false, || format!("{tag}: {e}")),
        }
    }
    for d in 3..=4 {
        let same = truncated_triplex(d)
            .and_then(|cut| are_isomorphic(&cut, &pentasm(d)?))
            .unwrap_or(false);
        f.check(same, || format!("truncating M(2,{}) does not give pentasm({d})", d - 2));
    }
    f.finish(format!("{} realizations cross-checked; truncation gives the pentasm for d = 3, 4", tags.len()))
}

fn gap_reproduction() -> Result<String, Vec<String>> {
    let verdict = |d: usize, e: u64| edges_feasible(d, e).map(|v| v.verdict).map_err(|x| vec![err_str(x)]);
    let mut f = Failures::new();
    let v417 = verdict(4, 17)?;
    f.check(v417 == Verdict::Infeasible, || {
        format!("edges_feasible(4,17) is {v417}, expected Infeasible")
    });
    f.check(verdict(4, 16)? == Verdict::Feasible, || "edges_feasible(4,16) is not Feasible".into());
    f.check(verdict(4, 18)? == Verdict::Feasible, || "edges_feasible(4,18) is not Feasible".into());
    f.check(verdict(10, 80)? == Verdict::Infeasible, || "edges_feasible(10,80) is not Infeasible".into());
    let md = max_dimension_for_edges(407).map_err(|e| vec![err_str(e)])?;
    f.check(md.dim == 23, || format!("max_dimension_for_edges(407) = {}", md.dim));
    for c in &md.certificates {
        if (24..=28).contains(&c.dim) {
            f.check(c.verdict == Verdict::Infeasible, || format!("407 edges at d={} is {c}", c.dim));
        }
        if c.dim == 23 {
            f.check(c.verdict != Verdict::Infeasible, || "407 edges ruled out at d=23".into());
        }
    }
    f.finish("E(8,4) gap, 80 edges in dimension 10, 407 edges at most dimension 23".into())
}

fn square_gap_sweep() -> Result<String, Vec<String>> {
    let mut f = Failures::new();
    let mut count = 0;
    for n in 2..=4usize {
        for d in n * n + 2..=30 {
            let j = d - n * n;
            let c = (d + n) * (d + n - 1) / 2;
            for e in c + 1..=c + j - 1 {
                let v = edges_feasible(d, e as u64).map_err(|x| vec![err_str(x)])?;
                f.check(v.verdict == Verdict::Infeasible, || format!("d={d} e={e}: {v}"));
                count += 1;
            }
        }
    }
    f.finish(format!("{count} edge counts ruled out for n in 2..=4, d = n^2+j <= 30"))
}

fn euler_relation() -> Result<String, Vec<String>> {
    let mut f = Failures::new();
    let mut count = 0;
    let mut special = 0;
    for d in 2..=6 {
        for fam in catalogue(d, 2 * d + 2) {
            let p = fam.build().map_err(|e| vec![err_str(e)])?;
            // enumeration itself rejects any lattice that violates Euler's relation
            let fv = match enumerate_lattice(&p) {
                Ok(l) => l.f_vector_big(),
                Err(e) => {
                    f.check(false, || format!("{fam}: {e}"));
                    continue;
                }
            };
            count += 1;
            if d == 5 && fam.nverts() == 10 {
                let (e, t, r, fa) = (&fv[1], &fv[2], &fv[3], &fv[4]);
                f.check(*t == (e - 8) + (r - fa), || format!("{fam}: t != (e-8)+(r-f) for {fv:?}"));
                special += 1;
            }
        }
    }
    f.finish(format!("{count} catalogue lattices satisfy Euler; {special} with d=5, v=10 satisfy t=(e-8)+(r-f)"))
}

fn uniqueness_catalogue() -> Result<String, Vec<String>> {
    let mut f = Failures::new();
    let p3 = pentasm(3).map_err(|e| vec![err_str(e)])?;
    let s3 = sigma3();
    for (name, p) in [("pentasm(3)", &p3), ("sigma3", &s3)] {
        let fv = enumerate_lattice(p).map_err(|e| vec![err_str(e)])?.f_vector();
        f.check(fv == [7, 11, 6], || format!("{name} has f-vector {fv:?}"));
    }
    f.check(!are_isomorphic(&p3, &s3).unwrap_or(true), || "pentasm(3) and sigma3 are isomorphic".into());
    let mut hits = 0;
    for d in 2..=6 {
        let pr = prism(d).map_err(|e| vec![err_str(e)])?;
        for fam in catalogue(d, 2 * d).into_iter().filter(|x| x.nverts() == 2 * d) {
            let p = fam.build().map_err(|e| vec![err_str(e)])?;
            let edges = enumerate_lattice(&p).map_err(|e| vec![err_str(e)])?.f_vector()[1];
            if edges == d * d {
                hits += 1;
                let same = are_isomorphic(&p, &pr).unwrap_or(false);
                f.check(same, || format!("{fam} has {} vertices and {} edges but is not a prism", 2 * d, d * d));
            }
        }
    }
    f.finish(format!("pentasm(3) and sigma3 differ; {hits} catalogue members with (2d, d^2) are all prisms"))
}

fn facet_ridge_minima() -> Result<String, Vec<String>> {
    let mut f = Failures::new();
    let value = |v, d| min_facets(v, d).map(|r| r.value).map_err(|e| vec![err_str(e)]);
    f.check(value(11, 5)? == BigInt::from(8), || "min_facets(11,5) != 8".into());
    f.check(value(12, 5)? == BigInt::from(7), || "min_facets(12,5) != 7".into());
    for d in [3usize, 5, 7] {
        let r = min_ridges_2dplus1(d).map_err(|e| vec![err_str(e)])?;
        let p = pentasm(d).map_err(|e| vec![err_str(e)])?;
        let ridges = &enumerate_lattice(&p).map_err(|e| vec![err_str(e)])?.f_vector_big()[d - 2];
        f.check(&r.value == ridges, || format!("ridges at d={d}: bound {} vs pentasm {ridges}", r.value));
    }
    for k in 2..=20usize {
        for d in k..=k + 5 {
            let n = dplus2_decompositions(k, d).map_err(|e| vec![err_str(e)])?.len();
            let expect = k == 2 || is_prime(k as i64 - 1);
            f.check((n == 1) == expect, || format!("k={k} d={d}: {n} decompositions"));
        }
    }
    f.finish("facet minima at (11,5), (12,5); ridge minima match the pentasm; uniqueness for k <= 20".into())
}

fn margin_positivity() -> Result<String, Vec<String>> {
    let mut f = Failures::new();
    let (mut alpha_checked, mut beta_checked) = (0, 0);
    for d in 2..=30i64 {
        for m in 2..=d {
            let a = alpha_margin(d, m).map_err(|e| vec![err_str(e)])?;
            let af = alpha_margin_factored(d, m).map_err(|e| vec![err_str(e)])?;
            f.check(BigRational::from_integer(a.clone()) == af, || format!("alpha identity fails at d={d} m={m}"));
            let regime = above_alpha(m, d) || (d <= 15 && 5 * m >= 3 * (d - 1));
            if regime && m < d {
                f.check(a.is_positive(), || format!("alpha margin {a} at d={d} m={m}"));
                alpha_checked += 1;
            }
            if m >= 3 {
                let b = beta_margin(d, m).map_err(|e| vec![err_str(e)])?;
                let bf = beta_margin_factored(d, m).map_err(|e| vec![err_str(e)])?;
                f.check(BigRational::from_integer(b.clone()) == bf, || format!("beta identity fails at d={d} m={m}"));
                let regime = above_beta(m, d) || (d <= 17 && 2 * m >= d);
                if regime && m < d {
                    f.check(b.is_positive(), || format!("beta margin {b} at d={d} m={m}"));
                    beta_checked += 1;
                }
            }
        }
    }
    f.finish(format!(
        "identities hold for d <= 30; {alpha_checked} alpha and {beta_checked} beta instances positive (m < d)"
    ))
}
