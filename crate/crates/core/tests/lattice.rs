use posetime::harness::lattice::{generate_lattice, Lattice, LatticeChainSpec, LatticeSpec};
use posetime::interval::{interval_pair_one_chain, interval_pair_two_chains, Side};
use posetime::projection::{backward_index, classify_projection, forward_index, quantify_event};
use posetime::spacetime::element_chain_distance;
use posetime::structure::{
    chain_properly_collinear, check_compatible, check_coordinated, collinearity_case,
    detect_linear_relation, induced_chain_order, CollinearityCase, CoordinatedPair,
    CoordinationWindow,
};
use posetime::{Chain, Error, GeneralizedInterval, ProjectionCase, Rational, ValuedChain};

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn lattice(u: usize, v: usize, chains: Vec<LatticeChainSpec>) -> Lattice {
    generate_lattice(&LatticeSpec {
        u_size: u,
        v_size: v,
        chains,
    })
    .unwrap()
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

/// Element `i` of a lattice chain is `(u0 + i du, v0 + i dv)`, so the
/// projections of `(u, v)` are a max of ceilings and a min of floors.
fn closed_form(
    spec: &LatticeChainSpec,
    len: usize,
    u: usize,
    v: usize,
) -> (Option<usize>, Option<usize>) {
    let (u, v) = (u as i64, v as i64);
    let (u0, v0, du, dv) = (
        spec.u0 as i64,
        spec.v0 as i64,
        spec.du as i64,
        spec.dv as i64,
    );
    let f = div_ceil(u - u0, du).max(div_ceil(v - v0, dv)).max(0);
    let b = div_floor(u - u0, du)
        .min(div_floor(v - v0, dv))
        .min(len as i64 - 1);
    (
        (f < len as i64).then_some(f as usize),
        (b >= 0).then_some(b as usize),
    )
}

#[test]
fn projections_match_closed_form_on_every_small_window() {
    let mut checked = 0;
    for u in 1..=10 {
        for v in 1..=10 {
            let spec = LatticeSpec::standard(u, v);
            let l = generate_lattice(&spec).unwrap();
            for (cs, c) in spec.chains.iter().zip(&l.chains) {
                for e in l.poset.events() {
                    let (eu, ev) = l.coords(e);
                    let want = closed_form(cs, c.len(), eu, ev);
                    let got = (
                        forward_index(&l.poset, e, c),
                        backward_index(&l.poset, e, c),
                    );
                    assert_eq!(
                        got,
                        want,
                        "window {u}x{v}, chain {}, event ({eu},{ev})",
                        c.name()
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn event_three_one_onto_rest_chain() {
    let l = generate_lattice(&LatticeSpec::standard(8, 8)).unwrap();
    let p = l.chain("rest0").unwrap();
    let x = l.event(3, 1).unwrap();
    let out = classify_projection(&l.poset, x, p).unwrap();
    assert_eq!(out.case, ProjectionCase::Both);
    assert_eq!(out.forward, l.event(3, 3));
    assert_eq!(out.backward, l.event(1, 1));
    assert_eq!(quantify_event(&l.poset, x, p).unwrap(), (r(3), r(1)));
}

#[test]
fn single_event_window() {
    let l = lattice(1, 1, vec![LatticeChainSpec::rest("P", 0)]);
    assert_eq!(l.poset.event_count(), 1);
    assert!(l.poset.cover_edges().is_empty());
    assert_eq!(l.chain("P").unwrap().len(), 1);
}

#[test]
fn window_errors() {
    assert_eq!(
        generate_lattice(&LatticeSpec {
            u_size: 0,
            v_size: 3,
            chains: vec![]
        })
        .unwrap_err(),
        Error::EmptyWindow
    );
    let escaping = LatticeSpec {
        u_size: 4,
        v_size: 4,
        chains: vec![LatticeChainSpec::rest("P", 0).with_ticks(9)],
    };
    assert!(matches!(
        generate_lattice(&escaping),
        Err(Error::ChainEscapesWindow(_))
    ));
}

#[test]
fn rest_chains_in_eight_by_eight_are_coordinated() {
    let l = lattice(
        8,
        8,
        vec![
            LatticeChainSpec::rest("P", 0),
            LatticeChainSpec::rest("Q", 2),
        ],
    );
    let (p, q) = (l.chain("P").unwrap(), l.chain("Q").unwrap());
    let w = CoordinationWindow::maximal(&l.poset, p, q);
    assert!(check_compatible(&l.poset, p, q, &w).unwrap());
    assert!(check_coordinated(&l.poset, p, q, &w).unwrap());
    let back = CoordinationWindow::maximal(&l.poset, q, p);
    assert!(check_coordinated(&l.poset, q, p, &back).unwrap());
    let double = q.rescaled(r(2)).unwrap();
    assert!(!check_coordinated(&l.poset, p, &double, &w).unwrap());
}

#[test]
fn chain_distance_is_the_same_for_every_choice() {
    let l = lattice(
        14,
        14,
        vec![
            LatticeChainSpec::rest("P", 0),
            LatticeChainSpec::rest("Q", 2),
        ],
    );
    let (p, q) = (l.chain("P").unwrap(), l.chain("Q").unwrap());
    let pair = CoordinatedPair::new(&l.poset, p, q).unwrap();
    let mut n = 0;
    for &pe in p.elements() {
        for &qe in q.elements() {
            if forward_index(&l.poset, pe, q).is_none() || forward_index(&l.poset, qe, p).is_none()
            {
                assert!(pair.chain_distance(pe, qe).is_err());
                continue;
            }
            assert_eq!(pair.chain_distance(pe, qe).unwrap(), r(-2));
            n += 1;
        }
    }
    assert!(n > 50);
    let swapped = CoordinatedPair::new(&l.poset, q, p).unwrap();
    assert_eq!(swapped.distance().unwrap(), r(-2));
    let own = CoordinatedPair::new(&l.poset, p, p).unwrap();
    assert_eq!(own.distance().unwrap(), r(0));
}

#[test]
fn element_distance_ignores_reference_and_side() {
    let l = lattice(12, 12, vec![LatticeChainSpec::rest("P", 0)]);
    let p = l.chain("P").unwrap();
    let right = l.event(6, 2).unwrap();
    let left = l.event(2, 6).unwrap();
    for &reference in p.elements() {
        assert_eq!(
            element_chain_distance(&l.poset, right, p, reference).unwrap(),
            r(-2)
        );
        assert_eq!(
            element_chain_distance(&l.poset, left, p, reference).unwrap(),
            r(-2)
        );
        assert_eq!(
            element_chain_distance(&l.poset, l.event(5, 5).unwrap(), p, reference).unwrap(),
            r(0)
        );
    }
}

#[test]
fn straddling_interval_uses_crossed_projections() {
    let l = lattice(8, 8, vec![LatticeChainSpec::rest("P", 0)]);
    let p = l.chain("P").unwrap();
    let iv = GeneralizedInterval::new(l.event(1, 3).unwrap(), l.event(5, 3).unwrap());
    // Pb = (5,5), P̄a = (1,1), P̄b = (3,3), Pa = (3,3)
    let pair = interval_pair_one_chain(&l.poset, iv, p, [Side::Left, Side::Right]).unwrap();
    assert_eq!((pair.first, pair.second), (r(4), r(0)));
    let same = interval_pair_one_chain(&l.poset, iv, p, [Side::Right, Side::Right]).unwrap();
    assert_eq!((same.first, same.second), (r(2), r(2)));
}

#[test]
fn closed_interval_on_chain_is_symmetric() {
    let l = lattice(8, 8, vec![LatticeChainSpec::rest("P", 0)]);
    let p = l.chain("P").unwrap();
    let iv = GeneralizedInterval::new(p.get(1), p.get(5));
    let pair = interval_pair_one_chain(&l.poset, iv, p, [Side::Left, Side::Left]).unwrap();
    assert_eq!((pair.first, pair.second), (r(4), r(4)));
    let point = GeneralizedInterval::new(p.get(2), p.get(2));
    let zero = interval_pair_one_chain(&l.poset, point, p, [Side::Left, Side::Left]).unwrap();
    assert_eq!((zero.first, zero.second), (r(0), r(0)));
}

#[test]
fn two_chain_pair_between_rest_chains() {
    // (3,1) and (6,2) translated two steps forward in time, so the chain at 2
    // has elements in the past of both endpoints
    let l = lattice(
        12,
        12,
        vec![
            LatticeChainSpec::rest("P", 0),
            LatticeChainSpec::rest("Q", 2),
        ],
    );
    let (p, q) = (l.chain("P").unwrap(), l.chain("Q").unwrap());
    let iv = GeneralizedInterval::new(l.event(5, 3).unwrap(), l.event(8, 4).unwrap());
    let pair = interval_pair_two_chains(&l.poset, iv, p, q).unwrap();
    assert_eq!((pair.first, pair.second), (r(3), r(1)));
    let one = interval_pair_one_chain(&l.poset, iv, p, [Side::Right, Side::Right]).unwrap();
    assert_eq!((one.first, one.second), (r(3), r(1)));
    let a = l.event(5, 3).unwrap();
    let degenerate =
        interval_pair_two_chains(&l.poset, GeneralizedInterval::new(a, a), p, q).unwrap();
    assert_eq!((degenerate.first, degenerate.second), (r(0), r(0)));

    // at the window edge the chain at 2 starts at (4,0), after (3,1)
    let edge = GeneralizedInterval::new(l.event(3, 1).unwrap(), l.event(6, 2).unwrap());
    assert!(interval_pair_two_chains(&l.poset, edge, p, q).is_err());
}

/// Side of `(u, v)` relative to rest chains at 0 and `c`.
fn expected_case(u: usize, v: usize, c: i64) -> CollinearityCase {
    let x2 = u as i64 - v as i64;
    if x2 < 0 {
        CollinearityCase::I
    } else if x2 <= 2 * c {
        CollinearityCase::II
    } else {
        CollinearityCase::III
    }
}

#[test]
fn collinearity_follows_spatial_position() {
    let l = lattice(
        24,
        24,
        vec![
            LatticeChainSpec::rest("P", 0),
            LatticeChainSpec::rest("Q", 4),
        ],
    );
    let (p, q) = (l.chain("P").unwrap(), l.chain("Q").unwrap());
    let mut by_case = [0usize; 3];
    for e in l.poset.events() {
        let (u, v) = l.coords(e);
        match collinearity_case(&l.poset, e, p, q) {
            Ok(CollinearityCase::NotCollinear) | Err(_) => {
                // only near the window edges
                assert!(
                    u < 10 || v < 2 || u > 13 || v > 13,
                    "({u},{v}) unclassified"
                );
            }
            Ok(case) => {
                assert_eq!(case, expected_case(u, v, 4), "({u},{v})");
                by_case[case as usize] += 1;
            }
        }
    }
    assert!(by_case.iter().all(|&n| n > 5), "{by_case:?}");
}

#[test]
fn chain_collinearity() {
    let l = lattice(
        24,
        24,
        vec![
            LatticeChainSpec::rest("P", 0),
            LatticeChainSpec::rest("X", 2),
            LatticeChainSpec::rest("Q", 4),
        ],
    );
    let (p, x, q) = (
        l.chain("P").unwrap(),
        l.chain("X").unwrap(),
        l.chain("Q").unwrap(),
    );
    // the part of X whose projections onto both chains exist
    let mid = x.sub_chain(4, 12).unwrap();
    assert!(chain_properly_collinear(&l.poset, &mid, p, q).unwrap());
    let own = p.sub_chain(8, 14).unwrap();
    assert!(chain_properly_collinear(&l.poset, &own, p, q).unwrap());

    let mut gappy: Vec<_> = mid.elements().to_vec();
    gappy.remove(3);
    let gappy = Chain::new(&l.poset, gappy).unwrap();
    assert!(!chain_properly_collinear(&l.poset, &gappy, p, q).unwrap());

    assert_eq!(
        induced_chain_order(&l.poset, p, &mid, q).unwrap(),
        ["P", "X", "Q"]
    );
}

#[test]
fn induced_order_of_three_rest_chains() {
    let l = lattice(
        16,
        16,
        vec![
            LatticeChainSpec::rest("c0", 0),
            LatticeChainSpec::rest("c2", 2),
            LatticeChainSpec::rest("c4", 4),
        ],
    );
    let (a, b, c) = (
        l.chain("c0").unwrap(),
        l.chain("c2").unwrap(),
        l.chain("c4").unwrap(),
    );
    assert_eq!(
        induced_chain_order(&l.poset, a, b, c).unwrap(),
        ["c0", "c2", "c4"]
    );
    assert_eq!(
        induced_chain_order(&l.poset, c, b, a).unwrap(),
        ["c4", "c2", "c0"]
    );
    assert!(matches!(
        induced_chain_order(&l.poset, a, c, b),
        Err(Error::NotBetween(_))
    ));
}

#[test]
fn boosted_chain_is_linearly_related() {
    let l = lattice(
        17,
        17,
        vec![
            LatticeChainSpec::rest("P", 0),
            LatticeChainSpec::boost("S", 4, 1),
        ],
    );
    let (p, s) = (l.chain("P").unwrap(), l.chain("S").unwrap());
    let rel = detect_linear_relation(&l.poset, s, p).unwrap();
    assert_eq!((rel.m, rel.n), (r(4), r(1)));
    assert_eq!(rel.step, r(2));
    assert_eq!(rel.per_unit(), (r(2), Rational::new(1, 2)));
    let own = detect_linear_relation(&l.poset, p, p).unwrap();
    assert_eq!(own.per_unit(), (r(1), r(1)));

    let mut bent: Vec<_> = s.elements().to_vec();
    bent[2] = l.event(9, 2).unwrap();
    let bent = ValuedChain::arithmetic(Chain::new(&l.poset, bent).unwrap(), r(0), r(2)).unwrap();
    assert!(matches!(
        detect_linear_relation(&l.poset, &bent, p),
        Err(Error::NotLinearlyRelated(_))
    ));
}

#[test]
fn boosted_and_rest_chains_agree_on_scalar() {
    let l = lattice(
        17,
        17,
        vec![
            LatticeChainSpec::rest("P", 0),
            LatticeChainSpec::boost("S", 4, 1),
        ],
    );
    let (p, s) = (l.chain("P").unwrap(), l.chain("S").unwrap());
    // the tick [(4,1), (8,2)] of S: (2, 2) on S, (4, 1) on P
    let iv = GeneralizedInterval::new(l.event(4, 1).unwrap(), l.event(8, 2).unwrap());
    let on_s = interval_pair_one_chain(&l.poset, iv, s, [Side::On, Side::On]).unwrap();
    let on_p = interval_pair_one_chain(&l.poset, iv, p, [Side::Right, Side::Right]).unwrap();
    assert_eq!((on_s.first, on_s.second), (r(2), r(2)));
    assert_eq!((on_p.first, on_p.second), (r(4), r(1)));
    assert_eq!(on_s.product(), on_p.product());
}
