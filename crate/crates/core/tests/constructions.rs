use polygap::combinatorics::triplex_fvector;
use polygap::constructions::{catalogue, cyclic, delta_sum, pentasm, pyramid, stacked, triplex, Family};
use polygap::lattice::{enumerate_lattice, excess_of, graph_of, is_simple};

fn fvec(p: &polygap::CombinatorialPolytope) -> Vec<usize> {
    enumerate_lattice(p).unwrap().f_vector()
}

#[test]
fn pyramid_face_recurrence() {
    for d in 2..=6 {
        for fam in catalogue(d, 2 * d).into_iter().filter(|f| f.nverts() <= 12) {
            let p = fam.build().unwrap();
            let f = fvec(&p);
            let g = fvec(&pyramid(&p));
            // f_m(pyr P) = f_m(P) + f_{m-1}(P), with f_{-1} = 1 and f_d = 1
            let ext = |m: isize| -> usize {
                match m {
                    -1 => 1,
                    m if m as usize == d => 1,
                    m => f[m as usize],
                }
            };
            for m in 0..=d {
                assert_eq!(g[m], ext(m as isize) + ext(m as isize - 1), "{fam} m={m}");
            }
        }
    }
}

#[test]
fn delta_sums_are_simple_with_the_expected_edges() {
    for r in 1..=3 {
        for s in r..=4 {
            let p = delta_sum(r, s).unwrap();
            let d = r + s;
            let v = (r + 1) * (s + 1);
            assert_eq!(p.nverts(), v);
            assert_eq!(p.nfacets(), d + 2);
            assert!(is_simple(&p).unwrap(), "delta_sum({r},{s})");
            assert_eq!(fvec(&p)[1], d * v / 2);
        }
    }
}

#[test]
fn cyclic_polytopes_are_neighbourly() {
    for d in 4..=6 {
        for v in d + 1..=12 {
            let e = fvec(&cyclic(d, v).unwrap())[1];
            assert_eq!(e, v * (v - 1) / 2, "cyclic({d},{v})");
        }
    }
}

#[test]
fn stacked_edge_count() {
    // d = 2 gives a polygon, outside the formula
    for d in 3..=6 {
        for v in d + 1..=12 {
            let e = fvec(&stacked(d, v).unwrap())[1];
            let want = d * v - d * (d + 1) / 2;
            assert_eq!(e, want, "stacked({d},{v})");
        }
    }
}

#[test]
fn pentasm_excess_sits_on_d_minus_2_vertices() {
    for d in 3..=6 {
        let p = pentasm(d).unwrap();
        let edges = graph_of(&p).unwrap();
        assert_eq!(edges.len(), d * d + d - 1);
        let mut deg = vec![0; p.nverts()];
        for (a, b) in &edges {
            deg[*a] += 1;
            deg[*b] += 1;
        }
        // excess d-2, one unit on each of d-2 vertices
        let high = deg.iter().filter(|&&x| x == d + 1).count();
        assert_eq!(high, d - 2, "pentasm({d}) degrees {deg:?}");
        assert!(deg.iter().all(|&x| x == d || x == d + 1));
    }
}

#[test]
fn triplex_matches_closed_form_beyond_the_acceptance_range() {
    for d in 8..=9 {
        for k in [1, 2, d / 2, d] {
            let got: Vec<_> = enumerate_lattice(&triplex(k, d - k).unwrap()).unwrap().f_vector_big();
            assert_eq!(got, triplex_fvector(d as i64, k as i64).unwrap(), "d={d} k={k}");
        }
    }
}

#[test]
fn excess_has_the_parity_of_dv() {
    for d in 2..=6 {
        for fam in catalogue(d, 2 * d + 2) {
            let p = fam.build().unwrap();
            let x = excess_of(&p).unwrap().value() as usize;
            assert_eq!(x % 2, (d * p.nverts()) % 2, "{fam}");
        }
    }
}

#[test]
fn closed_form_edge_counts_agree_with_lattices() {
    for d in 2..=6 {
        for fam in catalogue(d, 2 * d + 2) {
            let e = fvec(&fam.build().unwrap())[1];
            assert_eq!(fam.edge_count(), e.into(), "{fam}");
        }
    }
}

#[test]
fn family_tags_round_trip() {
    for d in 2..=5 {
        for fam in catalogue(d, 2 * d + 1) {
            let back: Family = fam.to_string().parse().unwrap();
            assert_eq!(back, fam);
        }
    }
    assert!("pentasm(2)".parse::<Family>().unwrap().validate().is_err());
    assert!("hexagon(6)".parse::<Family>().is_err());
}
