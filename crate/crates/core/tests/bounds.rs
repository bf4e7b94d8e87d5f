use num_bigint::BigInt;
use polygap::bounds::{
    edges_feasible, find_edge_witness, forbidden_band, gaps, max_dimension_for_edges, max_edges,
    min_edges, min_facets, min_ridges_2dplus1, Status, Verdict, VertexOutcome,
};
use polygap::combinatorics::{binom, phi};
use polygap::constructions::{catalogue, Family};
use polygap::lattice::enumerate_lattice;

fn edges_of(f: &Family) -> usize {
    enumerate_lattice(&f.build().unwrap()).unwrap().f_vector()[1]
}

#[test]
fn min_edges_matches_enumerated_triplex() {
    for d in 2..=7 {
        for v in d + 1..=2 * d {
            let r = min_edges(v, d).unwrap();
            let k = v - d;
            let t = Family::Triplex { k, j: d - k };
            assert_eq!(r.value, BigInt::from(edges_of(&t)), "v={v} d={d}");
        }
    }
}

#[test]
fn proved_witnesses_have_the_claimed_edge_count() {
    for d in 2..=6 {
        for v in d + 1..=2 * d + 3 {
            for r in [min_edges(v, d).unwrap(), max_edges(v, d).unwrap()] {
                if let (Status::ProvedHere, Some(w)) = (r.status, &r.witness) {
                    assert_eq!(w.nverts(), v, "{w}");
                    assert_eq!(BigInt::from(edges_of(w)), r.value, "{w} at v={v} d={d}");
                }
            }
        }
    }
}

#[test]
fn bands_avoid_every_catalogue_member() {
    for d in 2..=7 {
        for fam in catalogue(d, 2 * d) {
            let v = fam.nverts();
            if v <= d {
                continue;
            }
            let band = forbidden_band(v, d).unwrap();
            assert!(!band.contains(&fam.edge_count()), "{fam} lands in band {band}");
        }
    }
}

#[test]
fn feasible_answers_come_with_real_witnesses() {
    for d in 2..=5 {
        let lo = d * (d + 1) / 2;
        for e in lo..=lo + 25 {
            let verdict = edges_feasible(d, e as u64).unwrap();
            if let Some(w) = &verdict.witness {
                assert_eq!(verdict.verdict, Verdict::Feasible);
                assert_eq!(w.dim(), d);
                assert_eq!(edges_of(w), e, "{w}");
            }
            if verdict.verdict == Verdict::Feasible {
                assert!(verdict.witness.is_some() || verdict.status == Some(Status::CitedUnproved));
            }
            if verdict.verdict == Verdict::Infeasible {
                assert!(!verdict.citations.is_empty());
            }
        }
    }
}

#[test]
fn witness_search_agrees_with_closed_forms() {
    for d in 3..=6 {
        for fam in catalogue(d, 2 * d + 3) {
            let w = find_edge_witness(d, fam.nverts(), &fam.edge_count());
            assert!(w.is_some(), "{fam} not rediscovered");
        }
    }
}

#[test]
fn dimension_four_spectrum() {
    assert_eq!(edges_feasible(4, 9).unwrap().verdict, Verdict::Infeasible);
    assert_eq!(edges_feasible(4, 10).unwrap().witness, Some(Family::Simplex { d: 4 }));
    assert_eq!(edges_feasible(4, 16).unwrap().verdict, Verdict::Feasible);
    assert_eq!(edges_feasible(4, 18).unwrap().verdict, Verdict::Feasible);
    // 17 edges is impossible with 8 vertices but every count in [15,21] occurs with 7.
    let v17 = edges_feasible(4, 17).unwrap();
    assert_eq!(v17.verdict, Verdict::Feasible);
    let at8 = v17.rows.iter().find(|r| r.v == 8).unwrap();
    assert!(matches!(at8.outcome, VertexOutcome::InBand { .. }));
    let g: Vec<u64> = gaps(4).unwrap().iter().map(|v| v.edges).collect();
    assert_eq!(g, vec![11, 12]);
}

#[test]
fn square_gap_family() {
    // d = n^2 + j with j >= 2: nothing in [C(d+n,2)+1, C(d+n,2)+j-1]
    for n in 2..=4usize {
        for j in 2.. {
            let d = n * n + j;
            if d > 30 {
                break;
            }
            let c = binom((d + n) as i64, 2);
            let c: u64 = c.try_into().unwrap();
            for e in c + 1..=c + j as u64 - 1 {
                let v = edges_feasible(d, e).unwrap();
                assert_eq!(v.verdict, Verdict::Infeasible, "d={d} e={e}: {v}");
            }
        }
    }
}

#[test]
fn second_gap_family() {
    // n >= 4, d >= n^2 - j, 0 <= j <= n-4: nothing in [phi(d+n+1,d)+j+1, phi(d+n+1,d)+n-3]
    for n in 4..=5usize {
        for j in 0..=n - 4 {
            for d in n * n - j..=30 {
                let p: u64 = phi(1, (d + n + 1) as i64, d as i64).unwrap().try_into().unwrap();
                for e in p + j as u64 + 1..=p + n as u64 - 3 {
                    let v = edges_feasible(d, e).unwrap();
                    assert_eq!(v.verdict, Verdict::Infeasible, "n={n} j={j} d={d} e={e}: {v}");
                }
            }
        }
    }
}

#[test]
fn four_hundred_and_seven_edges() {
    let r = max_dimension_for_edges(407).unwrap();
    assert_eq!(r.dim, 23);
    for c in &r.certificates {
        let expect_infeasible = c.dim >= 24;
        assert_eq!(c.verdict == Verdict::Infeasible, expect_infeasible, "d={}: {c}", c.dim);
    }
    assert_eq!(r.certificates.last().unwrap().dim, 29);
    let d10 = max_dimension_for_edges(80).unwrap();
    let c10 = d10.certificates.iter().find(|c| c.dim == 10).unwrap();
    assert_eq!(c10.verdict, Verdict::Infeasible);
}

#[test]
fn dimension_ten_gaps_include_eighty() {
    let g: Vec<u64> = gaps(10).unwrap().iter().map(|v| v.edges).collect();
    assert!(g.contains(&80));
    for v in gaps(10).unwrap() {
        assert_eq!(v.verdict, Verdict::Infeasible);
    }
}

#[test]
fn facet_minimum_witnesses() {
    for d in 3..=6 {
        for v in d + 1..=2 * d + 1 {
            let r = min_facets(v, d).unwrap();
            if let Some(w) = &r.witness {
                let p = w.build().unwrap();
                assert_eq!((p.nverts(), p.nfacets()), (v, r.value.clone().try_into().unwrap()), "{w}");
            }
        }
    }
}

#[test]
fn ridge_minimum_witnesses() {
    for d in 3..=7 {
        let r = min_ridges_2dplus1(d).unwrap();
        let w = r.witness.clone().unwrap();
        let f = enumerate_lattice(&w.build().unwrap()).unwrap().f_vector();
        assert_eq!(w.nverts(), 2 * d + 1);
        assert_eq!(BigInt::from(f[d - 2]), r.value, "{w}");
    }
}
