mod common;

use common::{assert_close, brute_force_cover_pmf, c15, d14, four_node, m14};
use rwdist::chains::{
    commute_cdf, commute_chain, commute_pmf_convolution, hitting_cdf, union_hitting_cdf,
};
use rwdist::cover::{
    cover_cdf_complete, cover_cdf_cycle, cover_cdf_exact, cover_cdf_path, cover_pmf_complete,
};
use rwdist::graphs::{build_graph, generate_graph, transition_matrix};
use rwdist::{ExactCap, GraphKind};

#[test]
fn stationary_entry_matches_printed_form() {
    let m = transition_matrix(&four_node());
    for t in 1..=60 {
        assert_close(&format!("t={t}"), m.occupancy_after(0, t)[3], m14(t), 1e-10);
    }
}

#[test]
fn hitting_matches_printed_form() {
    let f = hitting_cdf(&transition_matrix(&four_node()), 0, 3, 60).unwrap();
    for t in 1..=60 {
        assert_close(&format!("t={t}"), f.at(t), d14(t), 1e-10);
    }
}

#[test]
fn hitting_pmf_of_the_example() {
    let f = hitting_cdf(&transition_matrix(&four_node()), 0, 3, 3).unwrap();
    let p = f.pmf();
    assert_close("p(1)", p.at(1), 1.0 / 3.0, 1e-15);
    assert_close("p(2)", p.at(2), 1.0 / 9.0, 1e-15);
    assert_close("F(2)", f.at(2), 4.0 / 9.0, 1e-15);
}

#[test]
fn commute_occupancy_matches_printed_form() {
    let chain = commute_chain(&transition_matrix(&four_node()), 0, 3).unwrap();
    let c = chain.absorbed_occupancy(60);
    assert_eq!(c[0], 0.0);
    assert_eq!(c[1], 0.0);
    assert_close("c3", c[2], 1.0 / 6.0, 1e-15);
    for t in 1..=60 {
        assert_close(&format!("t={t}"), c[t - 1], c15(t), 1e-9);
    }
}

#[test]
fn commute_methods_agree_on_the_example() {
    let m = transition_matrix(&four_node());
    let chain = commute_cdf(&m, 0, 3, 200).unwrap();
    let conv = commute_pmf_convolution(&m, 0, 3, 200)
        .unwrap()
        .cumulative(rwdist::SeriesKind::Commute);
    for t in 1..=200 {
        assert_close(&format!("t={t}"), chain.at(t), conv.at(t), 1e-10);
    }
}

#[test]
fn union_of_two_targets() {
    let f = union_hitting_cdf(&transition_matrix(&four_node()), 0, &[1, 3], 60).unwrap();
    for t in 1..=60 {
        assert_close(
            &format!("t={t}"),
            f.at(t),
            1.0 - 3f64.powi(-(t as i32)),
            1e-12,
        );
    }
}

#[test]
fn exact_cover_matches_walk_enumeration() {
    let graphs = [
        four_node(),
        build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap(),
        generate_graph(GraphKind::Path, 5).unwrap(),
    ];
    for g in &graphs {
        let m = transition_matrix(g);
        for z in 0..g.node_count() {
            let pmf = brute_force_cover_pmf(g, z, 16);
            let f = cover_cdf_exact(&m, z, 16, ExactCap::default()).unwrap();
            let mut acc = 0.0;
            for (t, p) in pmf.iter().enumerate() {
                acc += p;
                assert_close(&format!("z={z} t={}", t + 1), f.at(t + 1), acc, 1e-12);
            }
        }
    }
}

#[test]
fn closed_forms_match_walk_enumeration() {
    let k4 = generate_graph(GraphKind::Complete, 4).unwrap();
    let c5 = generate_graph(GraphKind::Cycle, 5).unwrap();
    let p5 = generate_graph(GraphKind::Path, 5).unwrap();
    let horizon = 14;
    let cumulative = |pmf: Vec<f64>| {
        pmf.iter()
            .scan(0.0, |acc, p| {
                *acc += p;
                Some(*acc)
            })
            .collect::<Vec<_>>()
    };

    let want = cumulative(brute_force_cover_pmf(&k4, 0, horizon));
    let got = cover_cdf_complete(4, horizon).unwrap();
    for t in 1..=horizon {
        assert_close(&format!("K4 t={t}"), got.at(t), want[t - 1], 1e-12);
    }
    for z in 0..5 {
        let want = cumulative(brute_force_cover_pmf(&c5, z, horizon));
        let got = cover_cdf_cycle(&transition_matrix(&c5), z, horizon).unwrap();
        for t in 1..=horizon {
            assert_close(&format!("C5 z={z} t={t}"), got.at(t), want[t - 1], 1e-12);
        }
        let want = cumulative(brute_force_cover_pmf(&p5, z, horizon));
        let got = cover_cdf_path(&transition_matrix(&p5), z, horizon).unwrap();
        for t in 1..=horizon {
            assert_close(&format!("P5 z={z} t={t}"), got.at(t), want[t - 1], 1e-12);
        }
    }
}

#[test]
fn complete_pmf_uses_shifted_exponent() {
    let k3 = generate_graph(GraphKind::Complete, 3).unwrap();
    let brute = brute_force_cover_pmf(&k3, 0, 12);
    let p = cover_pmf_complete(3, 12).unwrap();
    assert_eq!(brute[1], 0.5);
    for t in 1..=12 {
        assert_close(&format!("t={t}"), p.at(t), brute[t - 1], 1e-15);
    }
    let k5 = generate_graph(GraphKind::Complete, 5).unwrap();
    let brute = brute_force_cover_pmf(&k5, 2, 12);
    let p = cover_pmf_complete(5, 12).unwrap();
    for t in 1..=12 {
        assert_close(&format!("K5 t={t}"), p.at(t), brute[t - 1], 1e-14);
    }
}
