use srg_chroma::arith::{Rational, RationalMatrix};
use srg_chroma::chroma::{exact_chromatic, verify_coloring, Coloring};
use srg_chroma::graph::Graph;
use srg_chroma::packing::{build_representation, maehara_lift, representation_to_packing, tangency_graph, verify};
use srg_chroma::quadrangle::{build_gq, find_spread, spread_to_coloring};
use srg_chroma::srg::{ceil_u64, gq_complement_params, gq_point_graph_params, hoffman_chromatic_lower, SrgParams};

fn params(g: &Graph) -> SrgParams {
    g.srg_check().unwrap().params().unwrap()
}

fn test_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("Petersen complement", Graph::petersen().complement()),
        ("halved 5-cube", Graph::halved_cube(5)),
        ("GQ(2,4) complement", build_gq(2).unwrap().point_graph().complement()),
        ("GQ(3,9) complement", build_gq(3).unwrap().point_graph().complement()),
    ]
}

/// `MᵀM / (δ(−s(v−1) − k)/v)` with `M = (A − sI)(I − J/v)` formed as an
/// explicit product (scaled by `v` to stay integral), for comparison with the
/// closed-form Gram.
fn eigenprojection_gram(g: &Graph, p: &SrgParams) -> RationalMatrix {
    let sp = srg_chroma::srg::spectrum(p).unwrap();
    let n = g.order();
    let v = n as i128;
    let a_minus_s: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, g.has_edge(i, j)) {
                    (true, _) => -(sp.s as i128),
                    (false, true) => 1,
                    (false, false) => 0,
                })
                .collect()
        })
        .collect();
    let centering = |i: usize, j: usize| if i == j { v - 1 } else { -1 };
    let vm: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|l| a_minus_s[i][l] * centering(l, j)).sum()).collect())
        .collect();
    let (k, s, delta) = (p.k as i128, sp.s as i128, sp.delta as i128);
    let denom = v * delta * (-s * (v - 1) - k);
    RationalMatrix::from_fn(n, n, |i, j| {
        let dot: i128 = (0..n).map(|l| vm[l][i] * vm[l][j]).sum();
        Rational::new(dot.into(), denom.into())
    })
}

#[test]
fn gq_point_graphs_are_strongly_regular() {
    for q in [2u64, 3, 4] {
        let s = build_gq(q).unwrap();
        let expected = gq_point_graph_params(q, q * q).unwrap();
        assert_eq!(params(&s.point_graph()), expected, "q = {q}");
        assert_eq!(params(&s.point_graph().complement()), gq_complement_params(q).unwrap());
    }
}

#[test]
fn closed_form_gram_equals_eigenprojection() {
    for (name, g) in test_graphs() {
        let p = params(&g);
        let rep = build_representation(&g, &p).unwrap();
        assert_eq!(rep.gram, eigenprojection_gram(&g, &p), "{name}");
        assert_eq!(rep.gram.rank() as u64, rep.spectrum.f, "{name}");
    }
}

#[test]
fn packing_round_trip() {
    for (name, g) in test_graphs() {
        let rep = build_representation(&g, &params(&g)).unwrap();
        let c = representation_to_packing(&rep);
        assert_eq!(tangency_graph(&c).unwrap(), g, "{name}");
        let back = srg_chroma::packing::PackingCertificate::from_json(&c.to_json()).unwrap();
        assert_eq!(verify(&back).unwrap().tangency_graph, g, "{name}");
    }
}

#[test]
fn lift_is_join_with_k2() {
    for (name, g) in test_graphs() {
        let c = representation_to_packing(&build_representation(&g, &params(&g)).unwrap());
        let lifted = maehara_lift(&c).unwrap();
        let v = verify(&lifted).unwrap();
        assert_eq!(v.tangency_graph, g.join_with_k2(), "{name}");
        assert_eq!(v.rank, c.dimension + 1, "{name}");
        if g.order() <= 16 {
            let base = exact_chromatic(&g, 10_000_000).unwrap().chi;
            let up = exact_chromatic(&v.tangency_graph, 10_000_000).unwrap().chi;
            assert_eq!(up, base + 2, "{name}");
        }
    }
}

#[test]
fn spread_sandwich() {
    for q in [2u64, 3] {
        let s = build_gq(q).unwrap();
        let sp = find_spread(&s, None).unwrap();
        let colors = spread_to_coloring(&sp, &s).unwrap();
        let complement = s.point_graph().complement();
        let coloring = Coloring { colors };
        assert_eq!(verify_coloring(&complement, &coloring), Ok(true));
        let lower = ceil_u64(&hoffman_chromatic_lower(&gq_complement_params(q).unwrap()).unwrap());
        assert_eq!(coloring.palette() as u64, q * q * q + 1);
        assert_eq!(lower, q * q * q + 1);
    }
}
