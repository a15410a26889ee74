//! The interval scalar, pair transforms and the Minkowski structure they imply.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::chain::ValuedChain;
use crate::error::{Error, Result};
use crate::interval::IntervalPair;
use crate::poset::{EventId, Poset};
use crate::projection::both_indices;
use crate::quantity::Quantity;
use crate::structure::{collinearity_case, Betweenness, CoordinatedPair};
use crate::Rational;

fn two() -> Rational {
    Rational::from(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Character {
    TimeLike,
    SpaceLike,
    Null,
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Character::TimeLike => "time-like",
            Character::SpaceLike => "space-like",
            Character::Null => "null",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalarResult {
    pub value: Rational,
    pub character: Character,
}

/// `Δs² = Δp Δq`, positive for chain-like intervals.
pub fn interval_scalar(pair: &IntervalPair) -> ScalarResult {
    let value = pair.first * pair.second;
    let character = if value.is_positive() {
        Character::TimeLike
    } else if value.is_negative() {
        Character::SpaceLike
    } else {
        Character::Null
    };
    ScalarResult { value, character }
}

/// `sqrt(|Δp Δq|)`, flagged imaginary when the product is negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarLength {
    pub magnitude: Quantity,
    pub imaginary: bool,
}

impl fmt::Display for ScalarLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.imaginary {
            write!(f, "{}i", self.magnitude)
        } else {
            write!(f, "{}", self.magnitude)
        }
    }
}

pub fn scalar_length(pair: &IntervalPair) -> ScalarLength {
    let s = pair.first * pair.second;
    ScalarLength {
        magnitude: Quantity::sqrt(s.abs()),
        imaginary: s.is_negative(),
    }
}

/// `(Δs², Δt², Δx²)` with `Δs² = Δt² - Δx²`.
pub fn minkowski_form(pair: &IntervalPair) -> (Rational, Rational, Rational) {
    let dt = pair.length();
    let dx = pair.distance();
    (pair.first * pair.second, dt * dt, dx * dx)
}

/// Bilinear form whose diagonal is the interval scalar: `Δt1 Δt2 - Δx1 Δx2`.
pub fn inner_product(a: &IntervalPair, b: &IntervalPair) -> Rational {
    (a.first * b.second + a.second * b.first) / two()
}

/// Relation `(k, k) -> (m, n)` between linearly related chains, `k = sqrt(mn)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairTransform {
    m: Rational,
    n: Rational,
}

impl PairTransform {
    pub fn new(m: Rational, n: Rational) -> Result<PairTransform> {
        if !m.is_positive() || !n.is_positive() {
            return Err(Error::DegenerateTransform {
                m: m.to_string(),
                n: n.to_string(),
            });
        }
        Ok(PairTransform { m, n })
    }

    pub fn identity() -> PairTransform {
        PairTransform {
            m: Rational::from(1),
            n: Rational::from(1),
        }
    }

    pub fn m(&self) -> Rational {
        self.m
    }

    pub fn n(&self) -> Rational {
        self.n
    }

    pub fn inverse(&self) -> PairTransform {
        PairTransform {
            m: self.n,
            n: self.m,
        }
    }

    /// `sqrt(m / n)`, the factor applied to the first component.
    pub fn factor(&self) -> Quantity {
        Quantity::sqrt(self.m / self.n)
    }

    pub fn beta(&self) -> Rational {
        beta(self)
    }

    pub fn gamma(&self) -> Quantity {
        gamma(self)
    }
}

impl fmt::Display for PairTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m, n) = ({}, {})", self.m, self.n)
    }
}

/// A pair whose components may carry a square root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantityPair {
    pub first: Quantity,
    pub second: Quantity,
}

impl QuantityPair {
    pub fn product(&self) -> Quantity {
        self.first * self.second
    }

    /// The exact pair when both components are rational.
    pub fn exact(&self) -> Option<IntervalPair> {
        Some(IntervalPair::new(self.first.exact()?, self.second.exact()?))
    }
}

impl fmt::Display for QuantityPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// `(Δp sqrt(m/n), Δq sqrt(n/m))`
pub fn apply_pair_transform(pair: &IntervalPair, t: &PairTransform) -> QuantityPair {
    let k = t.factor();
    QuantityPair {
        first: Quantity::from(pair.first) * k,
        second: Quantity::from(pair.second) / k,
    }
}

/// `β = (m - n) / (m + n)`
pub fn beta(t: &PairTransform) -> Rational {
    (t.m - t.n) / (t.m + t.n)
}

/// `γ = 1 / sqrt(1 - β²) = (m + n) / (2 sqrt(mn))`
pub fn gamma(t: &PairTransform) -> Quantity {
    Quantity::from((t.m + t.n) / two()) / Quantity::sqrt(t.m * t.n)
}

/// `[[γ, βγ], [βγ, γ]]` acting on `(Δt, Δx)`.
pub fn lorentz_matrix(t: &PairTransform) -> [[Quantity; 2]; 2] {
    let g = gamma(t);
    let bg = g * beta(t);
    [[g, bg], [bg, g]]
}

pub fn compose_transforms(t1: &PairTransform, t2: &PairTransform) -> PairTransform {
    PairTransform {
        m: t1.m * t2.m,
        n: t1.n * t2.n,
    }
}

/// `(β1 + β2) / (1 + β1 β2)`
pub fn add_velocities(b1: Rational, b2: Rational) -> Rational {
    (b1 + b2) / (Rational::from(1) + b1 * b2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpacetimeCoords {
    pub dt: Rational,
    pub dx: Rational,
}

impl fmt::Display for SpacetimeCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(dt, dx) = ({}, {})", self.dt, self.dx)
    }
}

/// Coordinates that may carry a square root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantityCoords {
    pub dt: Quantity,
    pub dx: Quantity,
}

impl QuantityCoords {
    pub fn approx_eq(&self, other: &QuantityCoords, tol: f64) -> bool {
        self.dt.approx_eq(other.dt, tol) && self.dx.approx_eq(other.dx, tol)
    }
}

impl fmt::Display for QuantityCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(dt, dx) = ({}, {})", self.dt, self.dx)
    }
}

pub fn to_coords(pair: &IntervalPair) -> SpacetimeCoords {
    SpacetimeCoords {
        dt: pair.length(),
        dx: pair.distance(),
    }
}

pub fn from_coords(c: SpacetimeCoords) -> IntervalPair {
    IntervalPair::new(c.dt + c.dx, c.dt - c.dx)
}

/// Applies the Lorentz matrix of `t` to `c`.
pub fn lorentz_apply(c: SpacetimeCoords, t: &PairTransform) -> QuantityCoords {
    let [[a, b], [d, e]] = lorentz_matrix(t);
    let (dt, dx) = (Quantity::from(c.dt), Quantity::from(c.dx));
    QuantityCoords {
        dt: a * dt + b * dx,
        dx: d * dt + e * dx,
    }
}

/// The same map taken through interval pairs: coordinates to pair, pair
/// transform, back to coordinates.
pub fn transform_coords_via_pair(c: SpacetimeCoords, t: &PairTransform) -> QuantityCoords {
    let q = apply_pair_transform(&from_coords(c), t);
    let half = Rational::new(1, 2);
    QuantityCoords {
        dt: (q.first + q.second) * half,
        dx: (q.first - q.second) * half,
    }
}

/// Squared length of the join of two purely antisymmetric intervals lying in
/// distinct orthogonal subspaces.
pub fn pythagorean_join(a: &IntervalPair, b: &IntervalPair) -> Result<Rational> {
    let mut sum = OrthogonalSum::default();
    sum.push(a.clone())?;
    sum.push(b.clone())?;
    for c in &sum.components {
        if !c.is_antisymmetric() {
            return Err(Error::NotAntisymmetric(c.to_string()));
        }
    }
    Ok(-sum.scalar())
}

/// Intervals joined across orthogonal subspaces. Components are kept apart;
/// only their scalars combine.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrthogonalSum {
    pub components: Vec<IntervalPair>,
}

impl OrthogonalSum {
    pub fn push(&mut self, pair: IntervalPair) -> Result<()> {
        let label = pair.basis.subspace();
        if !label.is_empty() && self.components.iter().any(|c| c.basis.subspace() == label) {
            return Err(Error::SameSubspace);
        }
        self.components.push(pair);
        Ok(())
    }

    pub fn scalar(&self) -> Rational {
        self.components.iter().map(|c| c.first * c.second).sum()
    }
}

/// Cartesian components of a spherical displacement `(dt, dr, θ, φ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalDecomposition {
    /// `(dt, dr sinθ cosφ, dr sinθ sinφ, dr cosθ)`
    pub components: [f64; 4],
    /// `dt² - dr²`
    pub scalar_spherical: f64,
    /// `dt² - (dx² + dy² + dz²)`
    pub scalar_cartesian: f64,
}

impl SphericalDecomposition {
    pub fn consistent(&self, tol: f64) -> bool {
        let scale = self.scalar_spherical.abs().max(1.0);
        (self.scalar_spherical - self.scalar_cartesian).abs() <= tol * scale
    }
}

pub fn spherical_decompose(dt: f64, dr: f64, theta: f64, phi: f64) -> SphericalDecomposition {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let components = [dt, dr * st * cp, dr * st * sp, dr * ct];
    let spatial: f64 = components[1..].iter().map(|c| c * c).sum();
    SphericalDecomposition {
        components,
        scalar_spherical: dt * dt - dr * dr,
        scalar_cartesian: dt * dt - spatial,
    }
}

/// Antisymmetric part of the pair between `x` and a reference element of `chain`.
///
/// With `r` on the chain this is `((v(r) - v(Px)) - (v(P̄r) - v(P̄x))) / 2`,
/// which never depends on `r` and is never positive.
pub fn element_chain_distance(
    poset: &Poset,
    x: EventId,
    chain: &ValuedChain,
    reference: EventId,
) -> Result<Rational> {
    let ri = chain.position(reference).ok_or_else(|| {
        Error::OutOfRange(format!("event {reference} is not on `{}`", chain.name()))
    })?;
    let (f, b) = both_indices(poset, x, chain)?;
    let v = |i| chain.value(i);
    Ok(((v(ri) - v(f)) - (v(ri) - v(b))) / two())
}

/// `((d(y,P)² - d(y,Q)²) - (d(x,P)² - d(x,Q)²)) / (2 |d(P,Q)|)`
pub fn subspace_projection_from_distances(
    d_xp: Rational,
    d_xq: Rational,
    d_yp: Rational,
    d_yq: Rational,
    d_pq: Rational,
) -> Result<Rational> {
    if d_pq.is_zero() {
        return Err(Error::CoincidentChains);
    }
    let sq = |d: Rational| d * d;
    Ok(((sq(d_yp) - sq(d_yq)) - (sq(d_xp) - sq(d_xq))) / (two() * d_pq.abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubspaceProjection {
    pub value: Rational,
    /// An endpoint does not lie between the two chains.
    pub extrapolated: bool,
}

/// Projection of `[x, y]` onto the direction from `P` to `Q`.
pub fn subspace_projection(
    poset: &Poset,
    x: EventId,
    y: EventId,
    p: &ValuedChain,
    q: &ValuedChain,
) -> Result<SubspaceProjection> {
    let pair = CoordinatedPair::new(poset, p, q)?;
    let d_pq = pair.distance()?;
    let d = |e, c: &ValuedChain| element_chain_distance(poset, e, c, c.first());
    let value = subspace_projection_from_distances(d(x, p)?, d(x, q)?, d(y, p)?, d(y, q)?, d_pq)?;
    let between = |e| {
        matches!(
            collinearity_case(poset, e, p, q).map(|c| c.betweenness()),
            Ok(Betweenness::Between)
        )
    };
    Ok(SubspaceProjection {
        value,
        extrapolated: !(between(x) && between(y)),
    })
}

/// Pairwise chain distances; chains that are not coordinated give an error.
pub fn chain_distance_matrix(poset: &Poset, chains: &[&ValuedChain]) -> Result<Vec<Vec<Rational>>> {
    let n = chains.len();
    let mut d = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                d[i][j] = CoordinatedPair::new(poset, chains[i], chains[j])?.distance()?;
            }
        }
    }
    Ok(d)
}

/// Smallest Euclidean dimension that can hold points with these pairwise
/// distances, read off as the rank of the Gram matrix relative to point 0.
pub fn embedding_dimension(distances: &[Vec<Rational>]) -> usize {
    let n = distances.len();
    if n < 2 {
        return 0;
    }
    let sq = |i: usize, j: usize| distances[i][j] * distances[i][j];
    let mut g: Vec<Vec<Rational>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| (sq(0, i) + sq(0, j) - sq(i, j)) / two())
                .collect()
        })
        .collect();
    rank(&mut g)
}

fn rank(m: &mut [Vec<Rational>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c] / pivot_row[c];
                for (x, &p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= f * p;
                }
            }
        }
        r += 1;
    }
    r
}
