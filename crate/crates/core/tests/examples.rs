//! Worked examples for interval pairs, the scalar, pair transforms and the
//! small synthetic geometries.

use num_traits::Signed;
use posetime::harness::minkowski::MinkowskiScript;
use posetime::harness::simplex::generate_simplex;
use posetime::interval::{artificial_event, join_intervals, split_coords, Basis, IntervalKind};
use posetime::spacetime::{
    add_velocities, apply_pair_transform, chain_distance_matrix, compose_transforms,
    embedding_dimension, from_coords, inner_product, interval_scalar, lorentz_apply,
    lorentz_matrix, minkowski_form, pythagorean_join, scalar_length, spherical_decompose,
    subspace_projection, subspace_projection_from_distances, to_coords, Character, OrthogonalSum,
    SpacetimeCoords,
};
use posetime::structure::CoordinatedPair;
use posetime::{
    Error, EventId, GeneralizedInterval, IntervalPair, PairTransform, Quantity, Rational,
};

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn pair(a: i64, b: i64) -> IntervalPair {
    IntervalPair::from_ints(a, b)
}

fn t(m: i64, n: i64) -> PairTransform {
    PairTransform::new(r(m), r(n)).unwrap()
}

#[test]
fn length_and_distance() {
    let p = pair(4, 1);
    assert_eq!(p.length(), q(5, 2));
    assert_eq!(p.distance(), q(3, 2));
    let (sym, anti) = p.decompose();
    assert_eq!((sym.first, sym.second), (q(5, 2), q(5, 2)));
    assert_eq!((anti.first, anti.second), (q(3, 2), q(-3, 2)));
    assert_eq!(sym.try_add(&anti).unwrap(), p);
}

#[test]
fn classification() {
    let c = pair(4, 1).classify();
    assert_eq!((c.kind, c.pure), (IntervalKind::ChainLike, false));
    let c = pair(2, 2).classify();
    assert_eq!((c.kind, c.pure), (IntervalKind::ChainLike, true));
    let c = pair(3, -1).classify();
    assert_eq!((c.kind, c.pure), (IntervalKind::AntichainLike, false));
    let c = pair(1, -1).classify();
    assert_eq!((c.kind, c.pure), (IntervalKind::AntichainLike, true));
    let c = pair(3, 0).classify();
    assert_eq!((c.kind, c.pure), (IntervalKind::ProjectionLike, false));
    let c = pair(0, 0).classify();
    assert_eq!((c.kind, c.pure), (IntervalKind::ProjectionLike, true));
}

#[test]
fn joins_add_componentwise() {
    let (a, b, c) = (EventId(0), EventId(1), EventId(2));
    let basis = Basis::TwoChain {
        p: "P".into(),
        q: "Q".into(),
    };
    let ab = pair(1, 2).with_basis(basis.clone());
    let bc = pair(3, -1).with_basis(basis.clone());
    let (ac, sum) = join_intervals(
        (GeneralizedInterval::new(a, b), &ab),
        (GeneralizedInterval::new(b, c), &bc),
    )
    .unwrap();
    assert_eq!(ac, GeneralizedInterval::new(a, c));
    assert_eq!((sum.first, sum.second), (r(4), r(1)));
    assert_eq!(sum.length(), ab.length() + bc.length());

    let bb = pair(0, 0).with_basis(basis.clone());
    let (_, same) = join_intervals(
        (GeneralizedInterval::new(a, b), &ab),
        (GeneralizedInterval::new(b, b), &bb),
    )
    .unwrap();
    assert_eq!(same, ab);

    assert_eq!(
        join_intervals(
            (GeneralizedInterval::new(a, b), &ab),
            (GeneralizedInterval::new(a, c), &bc),
        )
        .unwrap_err(),
        Error::NoSharedEndpoint
    );
    let other = pair(3, -1).with_basis(Basis::TwoChain {
        p: "P".into(),
        q: "R".into(),
    });
    assert!(matches!(
        join_intervals(
            (GeneralizedInterval::new(a, b), &ab),
            (GeneralizedInterval::new(b, c), &other),
        ),
        Err(Error::BasisMismatch { .. })
    ));
}

#[test]
fn artificial_event_splits_into_antisymmetric_then_symmetric() {
    assert_eq!(
        artificial_event(r(0), r(0), r(4), r(1)),
        (q(3, 2), q(-3, 2))
    );
    let split = split_coords((r(0), r(0)), (r(4), r(1)), Basis::Detached);
    assert_eq!(
        (split.antisymmetric.first, split.antisymmetric.second),
        (q(3, 2), q(-3, 2))
    );
    assert_eq!(
        (split.symmetric.first, split.symmetric.second),
        (q(5, 2), q(5, 2))
    );
    assert!(split.antisymmetric.is_antisymmetric());
    assert!(split.symmetric.is_symmetric());
}

#[test]
fn scalar_and_scalar_length() {
    let s = interval_scalar(&pair(4, 1));
    assert_eq!((s.value, s.character), (r(4), Character::TimeLike));
    assert_eq!(
        interval_scalar(&pair(3, -1)).character,
        Character::SpaceLike
    );
    assert_eq!(interval_scalar(&pair(0, 5)).character, Character::Null);

    let l = scalar_length(&pair(4, 1));
    assert_eq!((l.magnitude, l.imaginary), (Quantity::Exact(r(2)), false));
    let l = scalar_length(&pair(1, -1));
    assert_eq!((l.magnitude, l.imaginary), (Quantity::Exact(r(1)), true));
    assert_eq!(l.to_string(), "1i");
    let l = scalar_length(&pair(2, 1));
    assert!(!l.magnitude.is_exact());
    assert!((l.magnitude.to_f64() - 2f64.sqrt()).abs() < 1e-12);
}

#[test]
fn minkowski_form_of_a_pair() {
    assert_eq!(minkowski_form(&pair(4, 1)), (r(4), q(25, 4), q(9, 4)));
    let c = to_coords(&pair(4, 1));
    assert_eq!((c.dt, c.dx), (q(5, 2), q(3, 2)));
    assert_eq!(from_coords(c), pair(4, 1));
    assert_eq!(inner_product(&pair(4, 1), &pair(4, 1)), r(4));
    // orthogonal to its mirror image in the light cone
    assert_eq!(inner_product(&pair(4, 1), &pair(1, -4)), q(-15, 2));
    assert_eq!(inner_product(&pair(2, 2), &pair(3, -3)), r(0));
}

#[test]
fn pair_transforms() {
    let boost = t(4, 1);
    let moved = apply_pair_transform(&pair(2, 2), &boost);
    assert_eq!(moved.exact().unwrap(), pair(4, 1));
    let moved = apply_pair_transform(&pair(3, 2), &boost);
    assert_eq!(moved.exact().unwrap(), pair(6, 1));
    assert_eq!(moved.product(), Quantity::Exact(r(6)));

    assert_eq!(boost.beta(), q(3, 5));
    assert_eq!(boost.gamma(), Quantity::Exact(q(5, 4)));
    assert_eq!(t(1, 4).beta(), q(-3, 5));
    let m = lorentz_matrix(&boost);
    assert_eq!(m[0][0], Quantity::Exact(q(5, 4)));
    assert_eq!(m[0][1], Quantity::Exact(q(3, 4)));
    assert_eq!(m[1][0], m[0][1]);

    let id = lorentz_matrix(&t(3, 3));
    assert_eq!(id[0][0], Quantity::Exact(r(1)));
    assert_eq!(id[0][1], Quantity::Exact(r(0)));

    let twice = compose_transforms(&boost, &boost);
    assert_eq!((twice.m(), twice.n()), (r(16), r(1)));
    assert_eq!(twice.beta(), q(15, 17));
    assert_eq!(add_velocities(q(3, 5), q(3, 5)), q(15, 17));
    assert_eq!(compose_transforms(&boost, &boost.inverse()).beta(), r(0));

    // the Lorentz matrix moves (2, 0) exactly as the pair map moves (2, 2)
    let c = lorentz_apply(SpacetimeCoords { dt: r(2), dx: r(0) }, &boost);
    assert_eq!(
        (c.dt, c.dx),
        (Quantity::Exact(q(5, 2)), Quantity::Exact(q(3, 2)))
    );

    assert!(matches!(
        PairTransform::new(r(0), r(1)),
        Err(Error::DegenerateTransform { .. })
    ));
    assert!(matches!(
        PairTransform::new(r(2), r(-1)),
        Err(Error::DegenerateTransform { .. })
    ));
}

#[test]
fn orthogonal_joins() {
    let a = pair(3, -3).with_basis(Basis::TwoChain {
        p: "P".into(),
        q: "Q".into(),
    });
    let b = pair(4, -4).with_basis(Basis::TwoChain {
        p: "R".into(),
        q: "S".into(),
    });
    assert_eq!(pythagorean_join(&a, &b).unwrap(), r(25));
    assert_eq!(pythagorean_join(&a, &a).unwrap_err(), Error::SameSubspace);
    let skew = pair(4, -1).with_basis(Basis::TwoChain {
        p: "R".into(),
        q: "S".into(),
    });
    assert!(matches!(
        pythagorean_join(&a, &skew),
        Err(Error::NotAntisymmetric(_))
    ));

    let mut sum = OrthogonalSum::default();
    sum.push(pair(5, 5).with_basis(Basis::TwoChain {
        p: "T".into(),
        q: "T".into(),
    }))
    .unwrap();
    sum.push(a).unwrap();
    sum.push(b).unwrap();
    assert_eq!(sum.scalar(), r(0));
}

#[test]
fn spherical_components() {
    let s = spherical_decompose(5.0, 3.0, 0.7, 2.1);
    assert!(s.consistent(1e-12));
    assert!((s.scalar_spherical - 16.0).abs() < 1e-12);
    let pole = spherical_decompose(2.0, 1.0, 0.0, 0.0);
    assert_eq!(pole.components, [2.0, 0.0, 0.0, 1.0]);
    let equator = spherical_decompose(2.0, 1.0, std::f64::consts::FRAC_PI_2, 0.0);
    assert!((equator.components[1] - 1.0).abs() < 1e-12);
    assert!(equator.components[3].abs() < 1e-12);
}

#[test]
fn simplex_distances() {
    let two = generate_simplex(2).unwrap();
    let (c1, c2) = (&two.chains[0], &two.chains[1]);
    let pair = CoordinatedPair::new(&two.poset, c1, c2).unwrap();
    assert_eq!(
        pair.chain_distance(two.lower(0), two.lower(1)).unwrap(),
        r(-1)
    );
    assert_eq!(
        pair.chain_distance(two.upper(0), two.upper(1)),
        Err(Error::OutOfRange(
            "event 2 has no forward projection onto `C2`".into()
        ))
    );

    for n in 1..=6 {
        let s = generate_simplex(n).unwrap();
        let refs: Vec<_> = s.chains.iter().collect();
        let d = chain_distance_matrix(&s.poset, &refs).unwrap();
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x.abs(), if i == j { r(0) } else { r(1) });
            }
        }
        assert_eq!(embedding_dimension(&d), n - 1);
    }
    assert!(generate_simplex(0).is_err());
}

#[test]
fn subspace_projection_examples() {
    assert_eq!(
        subspace_projection_from_distances(r(2), r(3), r(4), r(1), r(5)).unwrap(),
        r(2)
    );
    // an offset orthogonal to P and Q adds the same square to every distance
    let h2 = r(9);
    let lift = |d: Rational| d * d + h2;
    let direct = ((lift(r(4)) - lift(r(1))) - (lift(r(2)) - lift(r(3)))) / (r(2) * r(5));
    assert_eq!(direct, r(2));
    assert_eq!(
        subspace_projection_from_distances(r(2), r(3), r(4), r(1), r(0)).unwrap_err(),
        Error::CoincidentChains
    );

    let cfg = MinkowskiScript::new(1)
        .rest_chain("P", vec![r(0)], -12..=12)
        .rest_chain("Q", vec![r(5)], -12..=12)
        .event("x", r(0), vec![r(2)])
        .event("y", r(0), vec![r(4)])
        .build()
        .unwrap();
    let (x, y) = (cfg.event("x").unwrap(), cfg.event("y").unwrap());
    let proj = subspace_projection(
        &cfg.poset,
        x,
        y,
        cfg.chain("P").unwrap(),
        cfg.chain("Q").unwrap(),
    )
    .unwrap();
    assert_eq!(proj.value, r(2));
    assert!(!proj.extrapolated);
}
