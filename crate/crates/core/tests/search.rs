use nearzero::laws::Gen;
use nearzero::rational::q;
use nearzero::search::{
    brute_oracle, candidate_values, enumeration_min, find_jset_witness, find_vdw_witness,
    verify_witness, ColoringSpec, JsetTarget, SearchBounds, SearchOutcome, VdwProblem,
};
use nearzero::{FiniteIndexSet, GroundRing, IntPolynomial, PartialSequence, Rational};

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::new(c.to_vec()).unwrap()
}

fn geo(scale: Rational) -> PartialSequence {
    PartialSequence::geometric(scale, q(1, 2)).unwrap()
}

fn small_problem(polys: &[&[i64]], coloring: ColoringSpec) -> VdwProblem {
    VdwProblem {
        ground: GroundRing::Dyadic { max_scale: 24 },
        polys: polys.iter().map(|c| poly(c)).collect(),
        sequence: geo(q(1, 2)),
        coloring,
    }
}

/// Engine result against the brute-force witness set over many seeded
/// colorings: same first witness, same existence, and every witness the
/// engine reports is sound.
#[test]
fn engine_matches_oracle_on_random_colorings() {
    let bounds = SearchBounds::new(4, 32);
    let mut gen = Gen::new(11);
    for polys in [
        &[&[1][..], &[0, 1]][..],
        &[&[1], &[1, 1]],
        &[&[2], &[1, 0, 1], &[0, 3]],
    ] {
        let base = small_problem(
            polys,
            ColoringSpec::Band {
                width: q(1, 8),
                colors: 2,
            },
        );
        let points = candidate_values(&base, &bounds).unwrap();
        for _ in 0..15 {
            let mut problem = base.clone();
            problem.coloring = gen.coloring(&points);
            let all = brute_oracle(&problem, &bounds).unwrap();
            let report = find_vdw_witness(&problem, &bounds, 2).unwrap();
            match (report.outcome.found(), enumeration_min(&all)) {
                (Some(w), Some(m)) => {
                    assert!(w.same_configuration(m), "{:?}", problem.coloring);
                    assert!(verify_witness(w, &problem));
                    assert!(all.iter().all(|x| verify_witness(x, &problem)));
                }
                (None, None) => assert_eq!(report.outcome, SearchOutcome::NotFound),
                (w, m) => panic!("engine {w:?} vs oracle {m:?}"),
            }
        }
    }
}

/// Restricting the oracle to sets of bounded size gives the engine's
/// answer under the same bound.
#[test]
fn set_size_bound_is_respected() {
    let mut bounds = SearchBounds::new(5, 32);
    bounds.max_set_size = 2;
    let problem = small_problem(
        &[&[1], &[0, 1]],
        ColoringSpec::Residue {
            modulus: 3,
            scale: 6,
        },
    );
    let all = brute_oracle(&problem, &bounds).unwrap();
    assert!(all.iter().all(|w| w.index_set.len() <= 2));
    let w = find_vdw_witness(&problem, &bounds, 1).unwrap();
    match enumeration_min(&all) {
        Some(m) => assert!(w.outcome.found().unwrap().same_configuration(m)),
        None => assert_eq!(w.outcome, SearchOutcome::NotFound),
    }
}

#[test]
fn uncolored_values_never_form_witnesses() {
    let empty = ColoringSpec::Table {
        colors: 2,
        entries: Default::default(),
    };
    let problem = small_problem(&[&[1]], empty);
    let bounds = SearchBounds::new(4, 32);
    assert!(brute_oracle(&problem, &bounds).unwrap().is_empty());
    assert_eq!(
        find_vdw_witness(&problem, &bounds, 1).unwrap().outcome,
        SearchOutcome::NotFound
    );
}

#[test]
fn worker_count_independence() {
    let problem = small_problem(
        &[&[1], &[1, 1], &[0, 0, 1]],
        ColoringSpec::Residue {
            modulus: 5,
            scale: 9,
        },
    );
    let bounds = SearchBounds::new(10, 512);
    let base = find_vdw_witness(&problem, &bounds, 1).unwrap();
    for workers in [2, 4, 8] {
        let r = find_vdw_witness(&problem, &bounds, workers).unwrap();
        assert_eq!(r.outcome, base.outcome);
        assert_eq!(r.stats.candidates_examined, base.stats.candidates_examined);
        assert_eq!(r.stats.pruned, base.stats.pruned);
    }
}

#[test]
fn budget_exceeded_is_not_none() {
    let problem = small_problem(
        &[&[1], &[1, 1]],
        ColoringSpec::Band {
            width: q(1, 16),
            colors: 2,
        },
    );
    let mut bounds = SearchBounds::new(12, 1024);
    let full = find_vdw_witness(&problem, &bounds, 1).unwrap();
    let used = full.stats.candidates_examined;
    bounds.max_candidates = Some(used);
    assert_eq!(
        find_vdw_witness(&problem, &bounds, 1).unwrap().outcome,
        full.outcome
    );
    bounds.max_candidates = Some(used - 1);
    assert_eq!(
        find_vdw_witness(&problem, &bounds, 3).unwrap().outcome,
        SearchOutcome::BudgetExceeded
    );
}

/// For the single polynomial `x` the witness condition is just "the one
/// value `a + sigma_F` is colored", which is the J-set condition for the
/// union of all color cells.
#[test]
fn jset_and_vdw_agree_for_identity_polynomial() {
    let bounds = SearchBounds::new(6, 64);
    let mut gen = Gen::new(5);
    for _ in 0..10 {
        let base = small_problem(
            &[&[1]],
            ColoringSpec::Band {
                width: q(1, 8),
                colors: 2,
            },
        );
        let points: Vec<Rational> = candidate_values(&base, &bounds)
            .unwrap()
            .into_iter()
            .filter(|_| gen.unit_rational(4) < q(1, 3))
            .collect();
        let coloring = ColoringSpec::Table {
            colors: 2,
            entries: points.iter().map(|x| (x.clone(), 0)).collect(),
        };
        let problem = VdwProblem {
            coloring: coloring.clone(),
            ..base
        };
        let vdw = find_vdw_witness(&problem, &bounds, 1).unwrap();
        let cell = JsetTarget::Cell { coloring, color: 0 };
        let jset = find_jset_witness(
            &problem.ground,
            std::slice::from_ref(&problem.sequence),
            &|x| cell.contains(x),
            &bounds,
            1,
        )
        .unwrap();
        assert_eq!(
            vdw.outcome.found().is_some(),
            jset.outcome.found().is_some()
        );
        if let (Some(v), Some(j)) = (vdw.outcome.found(), jset.outcome.found()) {
            assert_eq!((&v.a, &v.index_set), (&j.a, &j.index_set));
        }
    }
}

/// Two sequences, target one band of a 2-coloring, on the 2^-8 grid with
/// `N = 10`. A plain double loop confirms a witness exists; the engine
/// must return the first one in enumeration order.
#[test]
fn jset_band_cell_two_sequences() {
    let ground = GroundRing::Dyadic { max_scale: 24 };
    let fs = [geo(q(1, 2)), geo(q(1, 4))];
    let band = ColoringSpec::Band {
        width: q(1, 16),
        colors: 2,
    };
    let target = JsetTarget::Cell {
        coloring: band,
        color: 1,
    };
    let bounds = SearchBounds::new(10, 256);

    let mut first: Option<(FiniteIndexSet, Rational)> = None;
    for mask in 1u32..1 << 10 {
        let set =
            FiniteIndexSet::new((0..10).filter(|b| mask >> b & 1 == 1).map(|b| b + 1)).unwrap();
        for i in 1..256 {
            let a = q(i, 256);
            let ok = fs.iter().all(|f| {
                let v = &a + &f.sigma(&set).unwrap();
                ground.member(&v) && target.contains(&v)
            });
            if ok && first.as_ref().is_none_or(|(s, b)| (&set, &a) < (s, b)) {
                first = Some((set.clone(), a));
            }
        }
    }
    let (set, a) = first.expect("brute force finds a witness");
    let r = find_jset_witness(&ground, &fs, &|x| target.contains(x), &bounds, 4).unwrap();
    let w = r.outcome.found().unwrap();
    assert_eq!((&w.index_set, &w.a), (&set, &a));
    for (f, v) in fs.iter().zip(&w.values) {
        assert_eq!(*v, &w.a + &f.sigma(&w.index_set).unwrap());
    }
}

#[test]
fn traces_round_trip_through_json() {
    let problem = small_problem(
        &[&[1], &[1, 1]],
        ColoringSpec::Band {
            width: q(1, 16),
            colors: 2,
        },
    );
    let r = find_vdw_witness(&problem, &SearchBounds::new(12, 1024), 1).unwrap();
    let w = r.outcome.found().unwrap();
    let json = serde_json::to_string(w).unwrap();
    let back: nearzero::search::WitnessVdW = serde_json::from_str(&json).unwrap();
    assert_eq!(&back, w);
    assert!(verify_witness(&back, &problem));
}
