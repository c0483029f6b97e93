use colourbias_core::constructions::{build, ConstructionSpec, Variant};
use colourbias_core::pipeline::{
    run_discrepancy_experiment, Adversary, ColouringSpec, ExperimentConfig, ExperimentRecord, HostSpec, Route,
};
use colourbias_core::random::{adversarial_residual, sample_gnp, ResidualStrategy};
use colourbias_core::{Graph, Rational};

/// Re-checks a record's cycle against `h` and recounts colours with `colour_of`.
fn recheck(rec: &ExperimentRecord, h: &Graph, colour_of: impl Fn(usize, usize) -> usize, r: usize) {
    let order = rec.cycle.as_ref().expect("found records carry the cycle");
    let n = h.n();
    let mut sorted = order.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..n).collect::<Vec<_>>(), "seed {}", rec.seed);
    let mut counts = vec![0; r];
    for i in 0..n {
        let (a, b) = (order[i], order[(i + 1) % n]);
        assert!(h.has_edge(a, b), "seed {}: ({a}, {b}) not in H", rec.seed);
        counts[colour_of(a, b) - 1] += 1;
    }
    assert_eq!(counts, rec.colour_counts, "seed {}", rec.seed);
    assert_eq!(rec.achieved_bias, *counts.iter().max().unwrap());
    assert!(rec.fatal.is_none(), "seed {}: {:?}", rec.seed, rec.fatal);
}

#[test]
fn sparse_hosts_with_large_construction() {
    let n = 150;
    let p = 3.0 * (n as f64).ln() / n as f64;
    let f = build(ConstructionSpec::large(n, 2)).unwrap();
    let mut cfg = ExperimentConfig::new(n, 2, HostSpec::Gnp { p }, ColouringSpec::Construction { variant: Variant::LargeAlpha, alpha: None });
    cfg.eps = Rational::new(3, 10);
    cfg.seeds = (0..20).collect();
    let recs = run_discrepancy_experiment(&cfg).unwrap();
    let found: Vec<_> = recs.iter().filter(|r| r.found).collect();
    assert!(found.len() >= 18, "{} of 20 found", found.len());
    for rec in found {
        recheck(rec, &sample_gnp(n, p, rec.seed).unwrap(), |a, b| f.pair_colour(a, b), 2);
        assert!(rec.achieved_bias >= 70, "seed {}: bias {}", rec.seed, rec.achieved_bias);
        assert!(rec.achieved_bias <= rec.upper_bound.unwrap());
        assert!(matches!(rec.route, Some(Route::Sparse) | Some(Route::Contraction)));
    }
}

#[test]
fn single_colour_complete_host() {
    for n in [5, 9, 12] {
        let cfg = ExperimentConfig::new(n, 1, HostSpec::Complete, ColouringSpec::Single);
        let rec = &run_discrepancy_experiment(&cfg).unwrap()[0];
        assert!(rec.found);
        assert_eq!(rec.achieved_bias, n);
        recheck(rec, &Graph::complete(n), |_, _| 1, 1);
    }
}

/// Medium construction at `n = 12`, `α = 3/4`. The alternate-edge matching
/// carries at least half the cycle's majority and at most `⌈αn/r⌉ = 5` edges of
/// one colour, the construction's own halved bound.
#[test]
fn medium_construction_matching_halving() {
    let alpha = Rational::new(3, 4);
    let f = build(ConstructionSpec::med(12, 2, alpha)).unwrap();
    let mut cfg = ExperimentConfig::new(12, 2, HostSpec::Given(f.graph.clone()), ColouringSpec::Construction { variant: Variant::MedAlpha, alpha: Some(alpha) });
    cfg.seeds = (0..5).collect();
    for rec in run_discrepancy_experiment(&cfg).unwrap() {
        assert!(rec.found, "seed {}: {:?}", rec.seed, rec.error);
        recheck(&rec, &f.graph, |a, b| f.pair_colour(a, b), 2);
        assert_eq!(rec.upper_bound, Some(10));
        let (_, count) = rec.matching_bias.unwrap();
        assert!(count >= rec.achieved_bias.div_ceil(2) && count <= 5, "seed {}: {count}", rec.seed);
    }
}

#[test]
fn random_colourings_on_residual_hosts() {
    let (n, p) = (120, 0.3);
    let alpha = Rational::new(3, 4);
    let strategy = ResidualStrategy::GreedyMinDegree;
    let mut cfg = ExperimentConfig::new(n, 3, HostSpec::Gnp { p }, ColouringSpec::Random);
    cfg.adversary = Some(Adversary { alpha, strategy });
    cfg.seeds = (0..6).collect();
    let recs = run_discrepancy_experiment(&cfg).unwrap();
    let mut found = 0;
    for rec in &recs {
        assert!(rec.fatal.is_none());
        if rec.found {
            found += 1;
            let h = adversarial_residual(&sample_gnp(n, p, rec.seed).unwrap(), alpha, strategy, rec.seed).unwrap().graph;
            let order = rec.cycle.as_ref().unwrap();
            for i in 0..n {
                assert!(h.has_edge(order[i], order[(i + 1) % n]));
            }
            assert_eq!(rec.colour_counts.iter().sum::<usize>(), n);
        }
    }
    assert!(found >= 5, "{found} of 6 found");
}
