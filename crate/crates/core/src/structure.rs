//! Relations between an event and a pair of chains, and between chains.

use std::fmt;

use crate::chain::{Chain, ValuedChain};
use crate::error::{Error, Result};
use crate::poset::{EventId, Poset};
use crate::projection::{backward_index, both_indices, forward_index};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CollinearityCase {
    I,
    II,
    III,
    IV,
    V,
    NotCollinear,
}

impl CollinearityCase {
    /// Cases I to III are unchanged by reversing the order.
    pub fn is_proper(self) -> bool {
        matches!(
            self,
            CollinearityCase::I | CollinearityCase::II | CollinearityCase::III
        )
    }

    pub fn betweenness(self) -> Betweenness {
        match self {
            CollinearityCase::I => Betweenness::PSide,
            CollinearityCase::II => Betweenness::Between,
            CollinearityCase::III => Betweenness::QSide,
            _ => Betweenness::None,
        }
    }

    /// The case an element exhibits in the order dual.
    pub fn dual(self) -> CollinearityCase {
        match self {
            CollinearityCase::IV => CollinearityCase::V,
            CollinearityCase::V => CollinearityCase::IV,
            other => other,
        }
    }
}

impl fmt::Display for CollinearityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CollinearityCase::I => "I",
            CollinearityCase::II => "II",
            CollinearityCase::III => "III",
            CollinearityCase::IV => "IV",
            CollinearityCase::V => "V",
            CollinearityCase::NotCollinear => "none",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Betweenness {
    /// `x|P|Q`
    PSide,
    /// `P|x|Q`
    Between,
    /// `P|Q|x`
    QSide,
    None,
}

impl fmt::Display for Betweenness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Betweenness::PSide => "x|P|Q",
            Betweenness::Between => "P|x|Q",
            Betweenness::QSide => "P|Q|x",
            Betweenness::None => "-",
        };
        f.write_str(s)
    }
}

/// The eight projections involved in the collinearity identities.
#[derive(Debug, Clone, Copy)]
struct Projections {
    px: EventId,
    pbx: EventId,
    qx: EventId,
    qbx: EventId,
    p_qx: Option<EventId>,
    pb_qx: Option<EventId>,
    p_qbx: Option<EventId>,
    pb_qbx: Option<EventId>,
    q_px: Option<EventId>,
    qb_px: Option<EventId>,
    q_pbx: Option<EventId>,
    qb_pbx: Option<EventId>,
}

impl Projections {
    fn gather(poset: &Poset, x: EventId, p: &Chain, q: &Chain) -> Result<Projections> {
        let (pf, pb) = both_indices(poset, x, p)?;
        let (qf, qb) = both_indices(poset, x, q)?;
        let (px, pbx, qx, qbx) = (p.get(pf), p.get(pb), q.get(qf), q.get(qb));
        let fwd = |y: EventId, c: &Chain| forward_index(poset, y, c).map(|i| c.get(i));
        let bwd = |y: EventId, c: &Chain| backward_index(poset, y, c).map(|i| c.get(i));
        Ok(Projections {
            px,
            pbx,
            qx,
            qbx,
            p_qx: fwd(qx, p),
            pb_qx: bwd(qx, p),
            p_qbx: fwd(qbx, p),
            pb_qbx: bwd(qbx, p),
            q_px: fwd(px, q),
            qb_px: bwd(px, q),
            q_pbx: fwd(pbx, q),
            qb_pbx: bwd(pbx, q),
        })
    }

    fn holds(&self, case: CollinearityCase) -> bool {
        let s = self;
        let eq = |a: EventId, b: Option<EventId>| b == Some(a);
        match case {
            CollinearityCase::I => {
                eq(s.px, s.pb_qx) && eq(s.qx, s.q_px) && eq(s.pbx, s.p_qbx) && eq(s.qbx, s.qb_pbx)
            }
            CollinearityCase::II => {
                eq(s.px, s.p_qbx) && eq(s.qx, s.q_pbx) && eq(s.pbx, s.pb_qx) && eq(s.qbx, s.qb_px)
            }
            CollinearityCase::III => {
                eq(s.px, s.p_qx) && eq(s.qx, s.qb_px) && eq(s.pbx, s.pb_qbx) && eq(s.qbx, s.q_pbx)
            }
            CollinearityCase::IV => {
                eq(s.px, s.p_qx) && eq(s.qx, s.qb_px) && eq(s.pbx, s.p_qbx) && eq(s.qbx, s.qb_pbx)
            }
            CollinearityCase::V => {
                eq(s.px, s.pb_qx) && eq(s.qx, s.q_px) && eq(s.pbx, s.pb_qbx) && eq(s.qbx, s.q_pbx)
            }
            CollinearityCase::NotCollinear => false,
        }
    }
}

// Case II is tested first: an element lying on P satisfies both I and II, and
// one lying on Q satisfies both II and III. Such elements count as between.
const PRIORITY: [CollinearityCase; 5] = [
    CollinearityCase::II,
    CollinearityCase::I,
    CollinearityCase::III,
    CollinearityCase::IV,
    CollinearityCase::V,
];

/// Every case whose four identities hold for `x`, in priority order.
pub fn matching_cases(
    poset: &Poset,
    x: EventId,
    p: &Chain,
    q: &Chain,
) -> Result<Vec<CollinearityCase>> {
    let pr = Projections::gather(poset, x, p, q)?;
    Ok(PRIORITY.into_iter().filter(|&c| pr.holds(c)).collect())
}

pub fn collinearity_case(
    poset: &Poset,
    x: EventId,
    p: &Chain,
    q: &Chain,
) -> Result<CollinearityCase> {
    let pr = Projections::gather(poset, x, p, q)?;
    Ok(PRIORITY
        .into_iter()
        .find(|&c| pr.holds(c))
        .unwrap_or(CollinearityCase::NotCollinear))
}

pub fn is_properly_collinear(poset: &Poset, x: EventId, p: &Chain, q: &Chain) -> Result<bool> {
    Ok(collinearity_case(poset, x, p, q)?.is_proper())
}

pub fn betweenness(poset: &Poset, x: EventId, p: &Chain, q: &Chain) -> Result<Betweenness> {
    Ok(collinearity_case(poset, x, p, q)?.betweenness())
}

/// Whether a chain is properly collinear with `p` and `q`.
///
/// Every element must be properly collinear, and for each of the four
/// projection families (forward and backward onto each chain) the images of
/// consecutive elements must leave no chain element of the target skipped.
pub fn chain_properly_collinear(poset: &Poset, x: &Chain, p: &Chain, q: &Chain) -> Result<bool> {
    for &e in x.elements() {
        if !is_properly_collinear(poset, e, p, q)? {
            return Ok(false);
        }
    }
    for target in [p, q] {
        let mut fwd = Vec::with_capacity(x.len());
        let mut bwd = Vec::with_capacity(x.len());
        for &e in x.elements() {
            let (f, b) = both_indices(poset, e, target)?;
            fwd.push(f);
            bwd.push(b);
        }
        if !covers_contiguously(&fwd) || !covers_contiguously(&bwd) {
            return Ok(false);
        }
    }
    Ok(true)
}

// Images of a chain under a projection are non-decreasing; surjectivity onto
// the spanned interval means no step jumps by more than one.
fn covers_contiguously(image: &[usize]) -> bool {
    image.windows(2).all(|w| w[1] >= w[0] && w[1] - w[0] <= 1)
}

/// Betweenness of both endpoints of `[a, b]` relative to `P` and `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalBetweenness {
    pub a: Betweenness,
    pub b: Betweenness,
}

impl IntervalBetweenness {
    pub fn is_straddle(&self) -> bool {
        self.a != self.b
    }

    pub fn label(&self) -> &'static str {
        use Betweenness::*;
        match (self.a, self.b) {
            (PSide, PSide) => "[a,b]|P|Q",
            (PSide, Between) => "a|P|b|Q",
            (PSide, QSide) => "a|P|Q|b",
            (Between, PSide) => "b|P|a|Q",
            (Between, Between) => "P|[a,b]|Q",
            (Between, QSide) => "P|a|Q|b",
            (QSide, PSide) => "b|P|Q|a",
            (QSide, Between) => "P|b|Q|a",
            (QSide, QSide) => "P|Q|[a,b]",
            _ => "-",
        }
    }
}

impl fmt::Display for IntervalBetweenness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn interval_betweenness(
    poset: &Poset,
    a: EventId,
    b: EventId,
    p: &Chain,
    q: &Chain,
) -> Result<IntervalBetweenness> {
    let side = |x| -> Result<Betweenness> {
        match collinearity_case(poset, x, p, q)?.betweenness() {
            Betweenness::None => Err(Error::NotProperlyCollinear { event: x }),
            s => Ok(s),
        }
    };
    Ok(IntervalBetweenness {
        a: side(a)?,
        b: side(b)?,
    })
}

/// Orders three chains as listed when every element of `b` that projects
/// onto both `a` and `c` lies between them.
pub fn induced_chain_order<'c>(
    poset: &Poset,
    a: &'c Chain,
    b: &'c Chain,
    c: &'c Chain,
) -> Result<[&'c str; 3]> {
    let mut witnessed = false;
    for &e in b.elements() {
        let projects = |ch: &Chain| {
            forward_index(poset, e, ch).is_some() && backward_index(poset, e, ch).is_some()
        };
        if !projects(a) || !projects(c) {
            continue;
        }
        let s = betweenness(poset, e, a, c)?;
        if s != Betweenness::Between {
            return Err(Error::NotBetween(format!(
                "element {e} of `{}` is {s} relative to `{}` and `{}`",
                b.name(),
                a.name(),
                c.name()
            )));
        }
        witnessed = true;
    }
    if !witnessed {
        return Err(Error::NotBetween(format!(
            "no element of `{}` projects onto both `{}` and `{}`",
            b.name(),
            a.name(),
            c.name()
        )));
    }
    Ok([a.name(), b.name(), c.name()])
}

/// Positions chains along a line using induced betweenness.
///
/// Returns a rank per input chain. The first chain that is never strictly
/// between two others anchors rank 0. Falls back to listing order when the
/// chains admit no consistent line ordering.
pub fn rank_chains(poset: &Poset, chains: &[&Chain]) -> Vec<usize> {
    let n = chains.len();
    let listed: Vec<usize> = (0..n).collect();
    if n < 3 {
        return listed;
    }
    let between = |i: usize, j: usize, k: usize| {
        induced_chain_order(poset, chains[i], chains[j], chains[k]).is_ok()
    };
    let interior =
        |j: usize| (0..n).any(|i| (0..n).any(|k| i != j && k != j && i != k && between(i, j, k)));
    let Some(anchor) = (0..n).find(|&j| !interior(j)) else {
        return listed;
    };
    let mut order: Vec<usize> = (0..n).filter(|&j| j != anchor).collect();
    // j precedes k when j lies between the anchor and k
    for i in 1..order.len() {
        let mut j = i;
        while j > 0 && between(anchor, order[j], order[j - 1]) {
            order.swap(j, j - 1);
            j -= 1;
        }
    }
    order.insert(0, anchor);
    for w in order.windows(3) {
        if !between(w[0], w[1], w[2]) {
            return listed;
        }
    }
    let mut rank = vec![0; n];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    rank
}

/// A run of consecutive chain positions, possibly empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Span {
    pub start: usize,
    pub len: usize,
}

impl Span {
    pub fn new(start: usize, len: usize) -> Span {
        Span { start, len }
    }

    /// Inclusive index range `lo..=hi`.
    pub fn inclusive(lo: usize, hi: usize) -> Span {
        Span {
            start: lo,
            len: hi + 1 - lo,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= self.start && i < self.start + self.len
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "[]")
        } else {
            write!(f, "[{}, {}]", self.start, self.start + self.len - 1)
        }
    }
}

/// The four index ranges over which two chains are compared.
///
/// `p_forward` is forward projected onto `q_forward_image`, and `p_backward`
/// is back projected onto `q_backward_image`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoordinationWindow {
    pub p_forward: Span,
    pub q_forward_image: Span,
    pub p_backward: Span,
    pub q_backward_image: Span,
}

impl CoordinationWindow {
    /// The largest window: every element of `p` with a forward (resp.
    /// backward) projection onto `q`, and the span of the images.
    pub fn maximal(poset: &Poset, p: &Chain, q: &Chain) -> CoordinationWindow {
        let fwd: Vec<usize> = p
            .elements()
            .iter()
            .map_while(|&e| forward_index(poset, e, q))
            .collect();
        let bwd_from = p
            .elements()
            .partition_point(|&e| backward_index(poset, e, q).is_none());
        let bwd: Vec<usize> = p.elements()[bwd_from..]
            .iter()
            .filter_map(|&e| backward_index(poset, e, q))
            .collect();
        let image = |v: &[usize]| match (v.first(), v.last()) {
            (Some(&lo), Some(&hi)) if hi >= lo => Span::inclusive(lo, hi),
            _ => Span::default(),
        };
        CoordinationWindow {
            p_forward: Span::new(0, fwd.len()),
            q_forward_image: image(&fwd),
            p_backward: Span::new(bwd_from, bwd.len()),
            q_backward_image: image(&bwd),
        }
    }
}

impl fmt::Display for CoordinationWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "forward {} -> {}, backward {} -> {}",
            self.p_forward, self.q_forward_image, self.p_backward, self.q_backward_image
        )
    }
}

fn projected_range(
    poset: &Poset,
    p: &Chain,
    q: &Chain,
    src: Span,
    forward: bool,
) -> Result<Vec<usize>> {
    src.indices()
        .map(|i| {
            let e = p.get(i);
            let idx = if forward {
                forward_index(poset, e, q)
            } else {
                backward_index(poset, e, q)
            };
            idx.ok_or_else(|| Error::MissingProjection {
                event: e,
                chain: q.name().to_string(),
                direction: if forward { "forward" } else { "backward" },
            })
        })
        .collect()
}

fn bijective_onto(image: &[usize], target: Span) -> bool {
    image.len() == target.len && image.iter().zip(target.indices()).all(|(&a, b)| a == b)
}

fn check_spans(p: &Chain, q: &Chain, w: &CoordinationWindow) -> Result<()> {
    for (s, len) in [
        (w.p_forward, p.len()),
        (w.p_backward, p.len()),
        (w.q_forward_image, q.len()),
        (w.q_backward_image, q.len()),
    ] {
        if s.start + s.len > len {
            return Err(Error::BadInterval {
                lo: s.start,
                hi: (s.start + s.len).saturating_sub(1),
                len,
            });
        }
    }
    Ok(())
}

/// Projections map the window's ranges on `p` bijectively onto its ranges on `q`.
pub fn check_compatible(
    poset: &Poset,
    p: &ValuedChain,
    q: &ValuedChain,
    window: &CoordinationWindow,
) -> Result<bool> {
    check_spans(p, q, window)?;
    let fwd = projected_range(poset, p, q, window.p_forward, true)?;
    let bwd = projected_range(poset, p, q, window.p_backward, false)?;
    Ok(bijective_onto(&fwd, window.q_forward_image)
        && bijective_onto(&bwd, window.q_backward_image))
}

/// Compatible, and every closed interval in range has the length of its image.
pub fn check_coordinated(
    poset: &Poset,
    p: &ValuedChain,
    q: &ValuedChain,
    window: &CoordinationWindow,
) -> Result<bool> {
    if !check_compatible(poset, p, q, window)? {
        return Err(Error::NotCompatible {
            p: p.name().to_string(),
            q: q.name().to_string(),
        });
    }
    Ok(lengths_preserved(p, q, window))
}

fn lengths_preserved(p: &ValuedChain, q: &ValuedChain, w: &CoordinationWindow) -> bool {
    let steps = |src: Span, img: Span| {
        src.indices()
            .zip(img.indices())
            .collect::<Vec<_>>()
            .windows(2)
            .all(|s| p.value(s[1].0) - p.value(s[0].0) == q.value(s[1].1) - q.value(s[0].1))
    };
    steps(w.p_forward, w.q_forward_image) && steps(w.p_backward, w.q_backward_image)
}

/// Two chains verified to be coordinated over their maximal window.
#[derive(Debug, Clone, Copy)]
pub struct CoordinatedPair<'a> {
    pub poset: &'a Poset,
    pub p: &'a ValuedChain,
    pub q: &'a ValuedChain,
    pub window: CoordinationWindow,
}

impl<'a> CoordinatedPair<'a> {
    pub fn new(poset: &'a Poset, p: &'a ValuedChain, q: &'a ValuedChain) -> Result<Self> {
        let not = |reason: &str| Error::NotCoordinated {
            p: p.name().to_string(),
            q: q.name().to_string(),
            reason: reason.to_string(),
        };
        let window = CoordinationWindow::maximal(poset, p, q);
        if window.p_forward.is_empty() && window.p_backward.is_empty() {
            return Err(not(
                "no element of the first chain projects onto the second",
            ));
        }
        match check_coordinated(poset, p, q, &window) {
            Ok(true) => {}
            Ok(false) => return Err(not("projected lengths differ")),
            Err(Error::NotCompatible { .. }) => return Err(not("projections are not bijective")),
            Err(e) => return Err(e),
        }
        // the reverse direction must hold as well
        let back = CoordinationWindow::maximal(poset, q, p);
        match check_coordinated(poset, q, p, &back) {
            Ok(true) => {}
            Ok(false) => return Err(not("projected lengths differ")),
            Err(Error::NotCompatible { .. }) => return Err(not("projections are not bijective")),
            Err(e) => return Err(e),
        }
        Ok(CoordinatedPair {
            poset,
            p,
            q,
            window,
        })
    }

    /// `((v(p) - v(Pq)) - (v(Qp) - v(q))) / 2` for `p` on P and `q` on Q.
    pub fn chain_distance(&self, p: EventId, q: EventId) -> Result<Rational> {
        let out = |what: String| Error::OutOfRange(what);
        let pi = self
            .p
            .position(p)
            .ok_or_else(|| out(format!("event {p} is not on `{}`", self.p.name())))?;
        let qi = self
            .q
            .position(q)
            .ok_or_else(|| out(format!("event {q} is not on `{}`", self.q.name())))?;
        let qp = forward_index(self.poset, p, self.q).ok_or_else(|| {
            out(format!(
                "event {p} has no forward projection onto `{}`",
                self.q.name()
            ))
        })?;
        let pq = forward_index(self.poset, q, self.p).ok_or_else(|| {
            out(format!(
                "event {q} has no forward projection onto `{}`",
                self.p.name()
            ))
        })?;
        let two = Rational::from(2);
        Ok(((self.p.value(pi) - self.p.value(pq)) - (self.q.value(qp) - self.q.value(qi))) / two)
    }

    /// Chain distance at the first element of each chain that projects forward.
    pub fn distance(&self) -> Result<Rational> {
        let p = self
            .p
            .elements()
            .iter()
            .copied()
            .find(|&e| forward_index(self.poset, e, self.q).is_some());
        let q = self
            .q
            .elements()
            .iter()
            .copied()
            .find(|&e| forward_index(self.poset, e, self.p).is_some());
        match (p, q) {
            (Some(p), Some(q)) => self.chain_distance(p, q),
            _ => Err(Error::OutOfRange(format!(
                "`{}` and `{}` have no mutually projecting elements",
                self.p.name(),
                self.q.name()
            ))),
        }
    }
}

/// Per-step projected lengths of one chain onto another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearRelation {
    /// Forward-projected length of one step.
    pub m: Rational,
    /// Back-projected length of one step.
    pub n: Rational,
    /// Length of one step on the projected chain.
    pub step: Rational,
}

impl LinearRelation {
    /// `(m, n)` per unit length of the projected chain.
    pub fn per_unit(&self) -> (Rational, Rational) {
        (self.m / self.step, self.n / self.step)
    }
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m = {}, n = {} per step of {}",
            self.m, self.n, self.step
        )
    }
}

/// Detects constant step lengths when projecting chain `s` onto `p`.
pub fn detect_linear_relation(
    poset: &Poset,
    s: &ValuedChain,
    p: &ValuedChain,
) -> Result<LinearRelation> {
    if s.len() < 2 {
        return Err(Error::NotLinearlyRelated(format!(
            "`{}` has fewer than two elements",
            s.name()
        )));
    }
    let mut fwd = Vec::with_capacity(s.len());
    let mut bwd = Vec::with_capacity(s.len());
    for &e in s.elements() {
        let (f, b) = both_indices(poset, e, p)?;
        fwd.push(p.value(f));
        bwd.push(p.value(b));
    }
    let constant = |v: &[Rational], what: &str| -> Result<Rational> {
        let d = v[1] - v[0];
        match v.windows(2).position(|w| w[1] - w[0] != d) {
            None => Ok(d),
            Some(i) => Err(Error::NotLinearlyRelated(format!(
                "{what} step {i} has length {} but step 0 has length {d}",
                v[i + 1] - v[i]
            ))),
        }
    };
    let step = constant(s.values(), &format!("`{}`", s.name()))?;
    if step <= Rational::from(0) {
        return Err(Error::NotLinearlyRelated(format!(
            "`{}` does not advance",
            s.name()
        )));
    }
    let m = constant(&fwd, "forward-projected")?;
    let n = constant(&bwd, "back-projected")?;
    Ok(LinearRelation { m, n, step })
}
