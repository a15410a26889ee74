//! The invariant suite run by `posetime verify`.
//!
//! Each source gets its own thread; every check reads only the frozen poset
//! and chains.

use std::fmt;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::ValuedChain;
use crate::error::Result;
use crate::harness::lattice::{generate_lattice, LatticeGeometry, LatticeSpec};
use crate::harness::minkowski::{axis_configuration, MinkowskiGeometry};
use crate::harness::random::{generate_random, longest_chain};
use crate::harness::simplex::generate_simplex;
use crate::harness::text::{parse_text, to_text};
use crate::harness::{Geometry, Source};
use crate::interval::{
    classify_interval, decompose, interval_pair_one_chain, GeneralizedInterval, IntervalKind,
    IntervalPair, Side,
};
use crate::poset::{build_poset, EventId, Poset};
use crate::projection::{backward_index, forward_index};
use crate::quantity::{Quantity, TOLERANCE};
use crate::spacetime::{
    add_velocities, apply_pair_transform, beta, chain_distance_matrix, compose_transforms,
    embedding_dimension, lorentz_apply, minkowski_form, subspace_projection, to_coords,
    transform_coords_via_pair, PairTransform,
};
use crate::structure::{collinearity_case, detect_linear_relation, Betweenness, CoordinatedPair};
use crate::Rational;

/// Interval sweeps are quadratic in the event count; larger posets skip them.
pub const INTERVAL_SWEEP_LIMIT: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub source: String,
    pub property: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} ({})",
            if self.passed { "ok" } else { "FAIL" },
            self.source,
            self.property,
            self.detail
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

type Outcome = std::result::Result<String, String>;

fn run(source: &str, property: &'static str, f: impl FnOnce() -> Outcome) -> CheckResult {
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        source: source.to_string(),
        property,
        passed,
        detail,
    }
}

/// Every generator the tool ships, at desk scale.
pub fn builtin_sources() -> Result<Vec<Source>> {
    let mut out = Vec::new();
    for (u, v) in [(10, 10), (17, 6)] {
        out.push(
            generate_lattice(&LatticeSpec::standard(u, v))?.into_source(format!("lattice:{u},{v}")),
        );
    }
    for n in 2..=8 {
        out.push(generate_simplex(n)?.into_source(format!("simplex:{n}")));
    }
    for (seed, n, d) in [(1, 40, 0.1), (2, 48, 0.2), (3, 64, 0.05)] {
        let poset = generate_random(seed, n, d)?;
        let chain = longest_chain(&poset)?;
        out.push(Source::plain(
            format!("random:{seed},{n},{d}"),
            poset,
            vec![chain],
        ));
    }
    for h in [0, 24] {
        out.push(axis_configuration(h)?.into_source(format!("minkowski:axis,h={h}")));
    }
    Ok(out)
}

/// Runs the suite on every source in parallel, plus the pair-algebra checks.
pub fn verify_all(sources: &[Source]) -> Report {
    let mut results = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = sources
            .iter()
            .map(|s| scope.spawn(move || verify_source(s)))
            .collect();
        let algebra = scope.spawn(|| verify_algebra(0x5eed));
        for h in handles {
            results.extend(h.join().expect("check thread panicked"));
        }
        results.extend(algebra.join().expect("check thread panicked"));
    });
    Report { results }
}

pub fn verify_source(s: &Source) -> Vec<CheckResult> {
    let name = s.name.as_str();
    let mut out = vec![
        run(name, "order axioms", || {
            s.poset
                .check_order_axioms()
                .map(|_| format!("{} events", s.poset.event_count()))
        }),
        run(name, "transitive reduction round trip", || {
            reduction_round_trip(&s.poset)
        }),
        run(name, "projection matches brute force", || {
            projection_oracle(s)
        }),
        run(name, "projection brackets and monotonicity", || {
            projection_order(s)
        }),
        run(name, "length additivity", || length_additivity(s)),
        run(name, "text format round trip", || text_round_trip(s)),
    ];
    let pairs = coordinated_pairs(s);
    out.push(run(
        name,
        "coordination and distance well-definedness",
        || coordination(s, &pairs),
    ));
    out.push(run(
        name,
        "one- and two-chain quantifications agree",
        || quantification_agreement(s, &pairs),
    ));
    out.push(run(name, "sign preservation", || {
        sign_preservation(s, &pairs)
    }));
    match &s.geometry {
        Geometry::Lattice(g) => {
            out.push(run(name, "linear relation of moving chains", || {
                linear_relations(s, g)
            }));
            out.push(run(name, "interval scalar invariance", || {
                scalar_invariance(s, g)
            }));
        }
        Geometry::Simplex => {
            out.push(run(name, "equal pairwise chain distances", || {
                simplex_distances(s)
            }));
        }
        Geometry::Minkowski(g) => {
            out.push(run(name, "subspace projection invariance", || {
                subspace_invariance(s, g)
            }));
        }
        Geometry::None => {}
    }
    out
}

fn reduction_round_trip(poset: &Poset) -> Outcome {
    let reduced = poset.transitive_reduction();
    let again = build_poset(poset.event_count(), &reduced).map_err(|e| e.to_string())?;
    if again.same_closure(poset) {
        Ok(format!("{} cover edges", reduced.len()))
    } else {
        Err("rebuilding from cover edges changed the closure".into())
    }
}

fn projection_oracle(s: &Source) -> Outcome {
    let mut n = 0;
    for c in &s.chains {
        for x in s.poset.events() {
            let slow_f = c
                .elements()
                .iter()
                .position(|&p| s.poset.leq_unchecked(x, p));
            let slow_b = c
                .elements()
                .iter()
                .rposition(|&p| s.poset.leq_unchecked(p, x));
            let fast = (
                forward_index(&s.poset, x, c),
                backward_index(&s.poset, x, c),
            );
            if fast != (slow_f, slow_b) {
                return Err(format!(
                    "event {} onto `{}`: fast {fast:?}, scan {:?}",
                    s.label(x),
                    c.name(),
                    (slow_f, slow_b)
                ));
            }
            n += 1;
        }
    }
    Ok(format!("{n} projections"))
}

fn projection_order(s: &Source) -> Outcome {
    let p = &s.poset;
    for c in &s.chains {
        for x in p.events() {
            if let Some(f) = forward_index(p, x, c) {
                if !p.leq_unchecked(x, c.get(f)) {
                    return Err(format!(
                        "{} is not below its forward projection",
                        s.label(x)
                    ));
                }
            }
            if let Some(b) = backward_index(p, x, c) {
                if !p.leq_unchecked(c.get(b), x) {
                    return Err(format!(
                        "{} is not above its backward projection",
                        s.label(x)
                    ));
                }
            }
        }
        // monotone on covers implies monotone everywhere
        for &(x, y) in p.cover_edges() {
            let mono = |a: Option<usize>, b: Option<usize>| match (a, b) {
                (Some(a), Some(b)) => a <= b,
                _ => true,
            };
            if !mono(forward_index(p, x, c), forward_index(p, y, c))
                || !mono(backward_index(p, x, c), backward_index(p, y, c))
            {
                return Err(format!(
                    "projection onto `{}` not monotone across {} < {}",
                    c.name(),
                    s.label(x),
                    s.label(y)
                ));
            }
        }
    }
    Ok(format!("{} chains", s.chains.len()))
}

fn length_additivity(s: &Source) -> Outcome {
    let mut n = 0usize;
    for c in &s.chains {
        let len = c.len();
        let stride = if len <= 64 { 1 } else { len / 16 };
        for a in (0..len).step_by(stride) {
            for cc in (a..len).step_by(stride) {
                let whole = c.interval(a, cc).map_err(|e| e.to_string())?;
                for b in a..=cc {
                    let l = c.interval(a, b).map_err(|e| e.to_string())?;
                    let r = c.interval(b, cc).map_err(|e| e.to_string())?;
                    let joined =
                        crate::chain::join_closed_intervals(&l, &r).map_err(|e| e.to_string())?;
                    if joined != whole || l.length() + r.length() != whole.length() {
                        return Err(format!("`{}` split [{a},{b},{cc}] not additive", c.name()));
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} splits"))
}

fn text_round_trip(s: &Source) -> Outcome {
    let doc = parse_text(&to_text(&s.poset, &s.chains)).map_err(|e| e.to_string())?;
    if !doc.poset.same_closure(&s.poset) {
        return Err("closure changed".into());
    }
    if doc.chains != s.chains {
        return Err("chains changed".into());
    }
    Ok("identical".into())
}

/// Ordered pairs of distinct chains that are coordinated, with their distance.
fn coordinated_pairs(s: &Source) -> Vec<(usize, usize, Rational)> {
    let mut out = Vec::new();
    for (i, p) in s.chains.iter().enumerate() {
        for (j, q) in s.chains.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Ok(pair) = CoordinatedPair::new(&s.poset, p, q) {
                if let Ok(d) = pair.distance() {
                    out.push((i, j, d));
                }
            }
        }
    }
    out
}

fn expected_coordinated(s: &Source, i: usize, j: usize) -> bool {
    match &s.geometry {
        Geometry::Lattice(g) => {
            let (a, b) = (&g.specs[i], &g.specs[j]);
            a.is_rest()
                && b.is_rest()
                && a.rate.is_none()
                && b.rate.is_none()
                && a.value0.is_none()
                && b.value0.is_none()
        }
        Geometry::Simplex | Geometry::Minkowski(_) => true,
        Geometry::None => false,
    }
}

fn coordination(s: &Source, pairs: &[(usize, usize, Rational)]) -> Outcome {
    let n = s.chains.len();
    for i in 0..n {
        for j in 0..n {
            if i != j
                && expected_coordinated(s, i, j)
                && !pairs.iter().any(|&(a, b, _)| a == i && b == j)
            {
                return Err(format!(
                    "`{}` and `{}` should be coordinated",
                    s.chains[i].name(),
                    s.chains[j].name()
                ));
            }
        }
    }
    let mut checked = 0usize;
    for &(i, j, d) in pairs {
        let (p, q) = (&s.chains[i], &s.chains[j]);
        let pair = CoordinatedPair::new(&s.poset, p, q).map_err(|e| e.to_string())?;
        let ps: Vec<EventId> = p
            .elements()
            .iter()
            .copied()
            .filter(|&e| forward_index(&s.poset, e, q).is_some())
            .collect();
        let qs: Vec<EventId> = q
            .elements()
            .iter()
            .copied()
            .filter(|&e| forward_index(&s.poset, e, p).is_some())
            .collect();
        let exhaustive = ps.len() * qs.len() <= 10_000;
        for (a, &pe) in ps.iter().enumerate() {
            for (b, &qe) in qs.iter().enumerate() {
                if !exhaustive && a != 0 && b != 0 && a != b {
                    continue;
                }
                let here = pair.chain_distance(pe, qe).map_err(|e| e.to_string())?;
                if here != d {
                    return Err(format!(
                        "distance from `{}` to `{}` is {here} at ({}, {}) but {d} elsewhere",
                        p.name(),
                        q.name(),
                        s.label(pe),
                        s.label(qe)
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{} coordinated pairs, {checked} distance evaluations",
        pairs.len()
    ))
}

/// Betweenness of every event relative to one ordered chain pair.
fn betweenness_table(s: &Source, i: usize, j: usize) -> Vec<Option<Betweenness>> {
    let (p, q) = (&s.chains[i], &s.chains[j]);
    s.poset
        .events()
        .map(|x| {
            collinearity_case(&s.poset, x, p, q)
                .ok()
                .map(|c| c.betweenness())
        })
        .collect()
}

fn too_large(s: &Source) -> Option<Outcome> {
    (s.poset.event_count() > INTERVAL_SWEEP_LIMIT).then(|| {
        Ok(format!(
            "skipped: {} events exceeds the sweep limit of {INTERVAL_SWEEP_LIMIT}",
            s.poset.event_count()
        ))
    })
}

fn quantification_agreement(s: &Source, pairs: &[(usize, usize, Rational)]) -> Outcome {
    if let Some(skip) = too_large(s) {
        return skip;
    }
    let mut checked = 0usize;
    for &(i, j, d) in pairs {
        if d.is_zero() {
            continue;
        }
        let (p, q) = (&s.chains[i], &s.chains[j]);
        let pair = CoordinatedPair::new(&s.poset, p, q).map_err(|e| e.to_string())?;
        let table = betweenness_table(s, i, j);
        let between: Vec<EventId> = s
            .poset
            .events()
            .filter(|x| table[x.0] == Some(Betweenness::Between))
            .collect();
        for &a in &between {
            for &b in &between {
                let iv = GeneralizedInterval::new(a, b);
                let two = crate::interval::two_chain_pair(&pair, iv).map_err(|e| e.to_string())?;
                let by_p = interval_pair_one_chain(&s.poset, iv, p, [Side::Right; 2])
                    .map_err(|e| e.to_string())?;
                let by_q = interval_pair_one_chain(&s.poset, iv, q, [Side::Left; 2])
                    .map_err(|e| e.to_string())?;
                if (by_p.first, by_p.second) != (two.first, two.second)
                    || (by_q.first, by_q.second) != (two.second, two.first)
                {
                    return Err(format!(
                        "[{}, {}] in `{}{}`: two-chain {two}, by `{}` {by_p}, by `{}` {by_q}",
                        s.label(a),
                        s.label(b),
                        p.name(),
                        q.name(),
                        p.name(),
                        q.name()
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} intervals"))
}

fn sign_preservation(s: &Source, pairs: &[(usize, usize, Rational)]) -> Outcome {
    if let Some(skip) = too_large(s) {
        return skip;
    }
    let pairs: Vec<_> = pairs.iter().filter(|p| !p.2.is_zero()).collect();
    let tables: Vec<_> = pairs
        .iter()
        .map(|&&(i, j, _)| betweenness_table(s, i, j))
        .collect();
    let coordinated: Vec<_> = pairs
        .iter()
        .map(|&&(i, j, _)| CoordinatedPair::new(&s.poset, &s.chains[i], &s.chains[j]))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    let mut compared = 0usize;
    for a in s.poset.events() {
        for b in s.poset.events() {
            let iv = GeneralizedInterval::new(a, b);
            let mut seen_chain = None;
            let mut seen_anti = None;
            let mut count = 0;
            for (k, &&(i, j, _)) in pairs.iter().enumerate() {
                let (ta, tb) = (tables[k][a.0], tables[k][b.0]);
                let (Some(ta), Some(tb)) = (ta, tb) else {
                    continue;
                };
                if ta == Betweenness::None || tb == Betweenness::None {
                    continue;
                }
                let mut quantified = Vec::new();
                if ta == Betweenness::Between && tb == Betweenness::Between {
                    if let Ok(pq) = crate::interval::two_chain_pair(&coordinated[k], iv) {
                        quantified.push(pq);
                    }
                }
                let sides_p = [
                    Side::relative_to_first(ta).map_err(|e| e.to_string())?,
                    Side::relative_to_first(tb).map_err(|e| e.to_string())?,
                ];
                if let Ok(pp) = interval_pair_one_chain(&s.poset, iv, &s.chains[i], sides_p) {
                    quantified.push(pp);
                }
                let sides_q = [
                    Side::relative_to_second(ta).map_err(|e| e.to_string())?,
                    Side::relative_to_second(tb).map_err(|e| e.to_string())?,
                ];
                if let Ok(qq) = interval_pair_one_chain(&s.poset, iv, &s.chains[j], sides_q) {
                    quantified.push(qq);
                }
                for pair in quantified {
                    count += 1;
                    let label = format!("{pair} via {}", pair.basis);
                    match classify_interval(&pair).kind {
                        IntervalKind::ChainLike => {
                            seen_chain.get_or_insert(label);
                        }
                        IntervalKind::AntichainLike => {
                            seen_anti.get_or_insert(label);
                        }
                        IntervalKind::ProjectionLike => {}
                    }
                }
            }
            if let (Some(c), Some(x)) = (&seen_chain, &seen_anti) {
                return Err(format!(
                    "[{}, {}] is chain-like as {c} but antichain-like as {x}",
                    s.label(a),
                    s.label(b)
                ));
            }
            if count >= 2 {
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} intervals quantified at least twice"))
}

fn linear_relations(s: &Source, g: &LatticeGeometry) -> Outcome {
    let mut found = Vec::new();
    for (pi, pspec) in g.specs.iter().enumerate() {
        if !pspec.is_rest() || pspec.rate.is_some() || pspec.value0.is_some() {
            continue;
        }
        let p = &s.chains[pi];
        for (si, sspec) in g.specs.iter().enumerate() {
            if si == pi || sspec.rate.is_some() {
                continue;
            }
            let chain = &s.chains[si];
            let Some((run, side)) = one_sided_run(s, g, chain, pi) else {
                continue;
            };
            let sub = ValuedChain::new(
                chain.sub_chain(run.0, run.1).map_err(|e| e.to_string())?,
                chain.values()[run.0..=run.1].to_vec(),
            )
            .map_err(|e| e.to_string())?;
            let rel = detect_linear_relation(&s.poset, &sub, p)
                .map_err(|e| format!("`{}` against `{}`: {e}", chain.name(), p.name()))?;
            let (du, dv) = (
                Rational::from(sspec.du as i64),
                Rational::from(sspec.dv as i64),
            );
            let expected = if side == Side::Left {
                (dv, du)
            } else {
                (du, dv)
            };
            if (rel.m, rel.n) != expected || rel.m * rel.n != rel.step * rel.step {
                return Err(format!(
                    "`{}` against `{}`: {rel}, expected (m, n) = ({}, {})",
                    chain.name(),
                    p.name(),
                    expected.0,
                    expected.1
                ));
            }
            if !sspec.is_rest() {
                found.push(format!(
                    "{}/{}: ({}, {})",
                    chain.name(),
                    p.name(),
                    rel.m,
                    rel.n
                ));
            }
        }
    }
    Ok(if found.is_empty() {
        "rest chains only".into()
    } else {
        found.join(", ")
    })
}

/// Longest run of chain elements that project both ways onto chain `pi`
/// and stay on one side of it.
fn one_sided_run(
    s: &Source,
    g: &LatticeGeometry,
    chain: &ValuedChain,
    pi: usize,
) -> Option<((usize, usize), Side)> {
    let p = &s.chains[pi];
    let spec = &g.specs[pi];
    let mut best: Option<((usize, usize), Side)> = None;
    for side in [Side::Left, Side::Right] {
        let mut start = None;
        for k in 0..=chain.len() {
            let ok = k < chain.len() && {
                let e = chain.get(k);
                let sd = g.side(e, spec);
                (sd == side || sd == Side::On)
                    && forward_index(&s.poset, e, p).is_some()
                    && backward_index(&s.poset, e, p).is_some()
            };
            match (ok, start) {
                (true, None) => start = Some(k),
                (false, Some(a)) => {
                    let len = k - a;
                    if len >= 2 && best.is_none_or(|((x, y), _)| y - x + 1 < len) {
                        best = Some(((a, k - 1), side));
                    }
                    start = None;
                }
                _ => {}
            }
        }
    }
    best
}

fn scalar_invariance(s: &Source, g: &LatticeGeometry) -> Outcome {
    if let Some(skip) = too_large(s) {
        return skip;
    }
    let resolved = |x: EventId, c: &ValuedChain| match (
        forward_index(&s.poset, x, c),
        backward_index(&s.poset, x, c),
    ) {
        (Some(f), Some(b)) => g.resolved(x, c.get(f)) && g.resolved(x, c.get(b)),
        _ => false,
    };
    let table: Vec<Vec<bool>> = s
        .chains
        .iter()
        .map(|c| s.poset.events().map(|x| resolved(x, c)).collect())
        .collect();
    let mut compared = 0usize;
    let mut across_motion = 0usize;
    for a in s.poset.events() {
        for b in s.poset.events() {
            let iv = GeneralizedInterval::new(a, b);
            let (ua, va) = g.coords(a);
            let (ub, vb) = g.coords(b);
            let expected = Rational::from((ub as i64 - ua as i64) * (vb as i64 - va as i64));
            let mut n = 0;
            let mut moving = false;
            for (ci, c) in s.chains.iter().enumerate() {
                if !table[ci][a.0] || !table[ci][b.0] {
                    continue;
                }
                let spec = &g.specs[ci];
                let sides = [g.side(a, spec), g.side(b, spec)];
                let pair =
                    interval_pair_one_chain(&s.poset, iv, c, sides).map_err(|e| e.to_string())?;
                if pair.product() != expected {
                    return Err(format!(
                        "[{}, {}] quantified by `{}` as {pair} with product {}, expected {expected}",
                        s.label(a),
                        s.label(b),
                        c.name(),
                        pair.product()
                    ));
                }
                n += 1;
                moving |= !spec.is_rest();
            }
            if n >= 2 {
                compared += 1;
                if moving {
                    across_motion += 1;
                }
            }
        }
    }
    Ok(format!(
        "{compared} intervals agree across chains, {across_motion} involving a moving chain"
    ))
}

fn simplex_distances(s: &Source) -> Outcome {
    let chains: Vec<&ValuedChain> = s.chains.iter().collect();
    if chains.len() < 2 {
        return Ok("no pairs".into());
    }
    let d = chain_distance_matrix(&s.poset, &chains).map_err(|e| e.to_string())?;
    let first = d[0][1].abs();
    for (i, row) in d.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i != j && x.abs() != first {
                return Err(format!(
                    "|D(C{}, C{})| = {} but |D(C1, C2)| = {first}",
                    i + 1,
                    j + 1,
                    x.abs()
                ));
            }
        }
    }
    let dims = embedding_dimension(&d);
    if dims != chains.len() - 1 {
        return Err(format!(
            "{} chains embed in {dims} dimensions",
            chains.len()
        ));
    }
    Ok(format!("all |D| = {first}, embedding dimension {dims}"))
}

fn subspace_invariance(s: &Source, g: &MinkowskiGeometry) -> Outcome {
    let (Some(x), Some(y)) = (g.event("x"), g.event("y")) else {
        return Ok("no endpoints named x and y".into());
    };
    let axis = |c: &ValuedChain| g.points[c.first().0].1[0];
    let (px, py) = (&g.points[x.0].1, &g.points[y.0].1);
    let mut values = Vec::new();
    for p in &s.chains {
        for q in &s.chains {
            if axis(p) >= axis(q) {
                continue;
            }
            let pi = subspace_projection(&s.poset, x, y, p, q).map_err(|e| e.to_string())?;
            let expected = py[0] - px[0];
            if pi.value != expected {
                return Err(format!(
                    "projection of [x, y] via `{}`, `{}` is {}, expected {expected}",
                    p.name(),
                    q.name(),
                    pi.value
                ));
            }
            values.push(pi.value);
        }
    }
    Ok(format!(
        "{} chain pairs all give {}",
        values.len(),
        values.first().map_or("-".into(), |v| v.to_string())
    ))
}

fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    Rational::new(rng.gen_range(lo..=hi), rng.gen_range(1..=12))
}

fn random_positive(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(1..=40), rng.gen_range(1..=12))
}

/// Pair-algebra identities over a seeded sample of rational pairs and transforms.
pub fn verify_algebra(seed: u64) -> Vec<CheckResult> {
    const N: usize = 1000;
    let src = "algebra";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<(IntervalPair, PairTransform, PairTransform)> = (0..N)
        .map(|_| {
            let pair = IntervalPair::new(
                random_rational(&mut rng, -40, 40),
                random_rational(&mut rng, -40, 40),
            );
            let t1 = PairTransform::new(random_positive(&mut rng), random_positive(&mut rng))
                .expect("positive");
            let t2 = PairTransform::new(random_positive(&mut rng), random_positive(&mut rng))
                .expect("positive");
            (pair, t1, t2)
        })
        .collect();
    vec![
        run(src, "symmetric-antisymmetric decomposition", || {
            for (p, _, _) in &samples {
                let (a, b) = decompose(p);
                if a.first + b.first != p.first || a.second + b.second != p.second {
                    return Err(format!("{p} does not reassemble"));
                }
            }
            Ok(format!("{N} pairs"))
        }),
        run(src, "Minkowski form", || {
            for (p, _, _) in &samples {
                let (s2, t2, x2) = minkowski_form(p);
                if s2 != t2 - x2 {
                    return Err(format!("{p}: {s2} != {t2} - {x2}"));
                }
            }
            Ok(format!("{N} pairs"))
        }),
        run(src, "pair transform preserves the scalar", || {
            for (p, t, _) in &samples {
                let out = apply_pair_transform(p, t);
                if !out
                    .product()
                    .approx_eq(Quantity::from(p.product()), TOLERANCE)
                {
                    return Err(format!("{p} under {t} gives {out}"));
                }
            }
            Ok(format!("{N} pairs"))
        }),
        run(src, "Lorentz matrix equals pair route", || {
            for (p, t, _) in &samples {
                let c = to_coords(p);
                let a = lorentz_apply(c, t);
                let b = transform_coords_via_pair(c, t);
                if !a.approx_eq(&b, TOLERANCE) {
                    return Err(format!("{c} under {t}: matrix {a}, pairs {b}"));
                }
            }
            Ok(format!("{N} samples"))
        }),
        run(src, "velocity addition", || {
            for (_, t1, t2) in &samples {
                let c = compose_transforms(t1, t2);
                if beta(&c) != add_velocities(beta(t1), beta(t2)) {
                    return Err(format!("{t1} composed with {t2}"));
                }
                if beta(t1) != -beta(&t1.inverse()) {
                    return Err(format!("beta of {t1} is not antisymmetric"));
                }
            }
            Ok(format!("{N} compositions"))
        }),
        run(src, "null pairs stay null", || {
            for (p, t, _) in &samples {
                for null in [
                    IntervalPair::new(p.first, Rational::zero()),
                    IntervalPair::new(Rational::zero(), p.second),
                ] {
                    let out = apply_pair_transform(&null, t);
                    if !(out.first.is_zero() || out.second.is_zero()) {
                        return Err(format!("{null} under {t} gives {out}"));
                    }
                }
            }
            if PairTransform::new(Rational::zero(), Rational::from(1)).is_ok() {
                return Err("degenerate transform accepted".into());
            }
            Ok(format!("{N} transforms"))
        }),
    ]
}
