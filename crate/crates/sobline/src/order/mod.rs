//! Computable compact lines: points, order queries, clopen intervals and
//! partitions, lexicographic doubling, and increasing quotient maps.
//!
//! Five line variants are supported. `Finite` and `Ordinal` segments and the
//! lexicographic double of any line are zero-dimensional; the rational unit
//! interval and the double-arrow line over a finite rational cut set are not,
//! and are rejected by operations that require zero-dimensionality. All
//! values are immutable and freely copyable; point validity is checked per
//! call against the line that is supposed to own the point.

pub mod cnf;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rat::{format_q, Q};
use crate::Result;
pub use cnf::{Cnf, CnfEnumerator, MAX_BOUND_COEFF};

/// A point of some compact line. Within a single line the derived structural
/// order coincides with the line order; comparing points of different lines
/// is meaningless and guarded by validity checks in line operations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointId {
    /// Index into a finite line.
    Finite(u64),
    /// Ordinal in Cantor normal form.
    Ordinal(Cnf),
    /// Point of a lexicographic double: (base, bit).
    Pair(Box<PointId>, u8),
    /// Rational in `[0,1]` on the unit interval line.
    Rational(Q),
    /// Double-arrow point: (x, bit) with bit 1 only at cut-set members.
    Doubled(Q, u8),
}

impl PointId {
    pub fn pair(base: PointId, bit: u8) -> PointId {
        PointId::Pair(Box::new(base), bit)
    }
}

impl fmt::Debug for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointId::Finite(i) => write!(f, "{i}"),
            PointId::Ordinal(x) => write!(f, "{x}"),
            PointId::Pair(p, b) => write!(f, "({p:?},{b})"),
            PointId::Rational(x) => write!(f, "{}", format_q(x)),
            PointId::Doubled(x, b) => write!(f, "({},{b})", format_q(x)),
        }
    }
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LineDescriptor {
    Finite { size: u64, labels: Option<Vec<String>> },
    Ordinal { bound: Cnf },
    LexDouble { inner: Box<LineDescriptor> },
    UnitInterval,
    DoubleArrow { cut_set: BTreeSet<Q> },
}

impl LineDescriptor {
    pub fn finite(size: u64) -> Self {
        assert!(size >= 1, "finite line needs at least one point");
        LineDescriptor::Finite { size, labels: None }
    }

    pub fn ordinal(bound: Cnf) -> Result<Self> {
        if bound.a > MAX_BOUND_COEFF || bound.b > MAX_BOUND_COEFF || bound.c > MAX_BOUND_COEFF {
            return Err(Error::InvalidInstance(format!(
                "ordinal bound {bound} exceeds coefficient cap {MAX_BOUND_COEFF}"
            )));
        }
        Ok(LineDescriptor::Ordinal { bound })
    }

    pub fn lex_double_of(inner: LineDescriptor) -> Self {
        LineDescriptor::LexDouble { inner: Box::new(inner) }
    }

    pub fn unit_interval() -> Self {
        LineDescriptor::UnitInterval
    }

    /// Double-arrow line over a finite set of rationals in `]0,1]`.
    pub fn double_arrow(cut_set: BTreeSet<Q>) -> Result<Self> {
        for x in &cut_set {
            if !(x > &Q::zero() && x <= &Q::one()) {
                return Err(Error::InvalidInstance(format!(
                    "double-arrow cut {} outside ]0,1]",
                    format_q(x)
                )));
            }
        }
        Ok(LineDescriptor::DoubleArrow { cut_set })
    }

    pub fn validate(&self, p: &PointId) -> Result<()> {
        let bad = || Err(Error::InvalidPoint(format!("{p} on {self:?}")));
        match (self, p) {
            (LineDescriptor::Finite { size, .. }, PointId::Finite(i)) => {
                if i < size {
                    Ok(())
                } else {
                    bad()
                }
            }
            (LineDescriptor::Ordinal { bound }, PointId::Ordinal(x)) => {
                if x <= bound {
                    Ok(())
                } else {
                    bad()
                }
            }
            (LineDescriptor::LexDouble { inner }, PointId::Pair(base, bit)) => {
                if *bit > 1 {
                    return bad();
                }
                inner.validate(base)
            }
            (LineDescriptor::UnitInterval, PointId::Rational(x)) => {
                if x >= &Q::zero() && x <= &Q::one() {
                    Ok(())
                } else {
                    bad()
                }
            }
            (LineDescriptor::DoubleArrow { cut_set }, PointId::Doubled(x, bit)) => {
                let in_range = x >= &Q::zero() && x <= &Q::one();
                match bit {
                    0 if in_range => Ok(()),
                    1 if cut_set.contains(x) => Ok(()),
                    _ => bad(),
                }
            }
            _ => bad(),
        }
    }

    pub fn min(&self) -> PointId {
        match self {
            LineDescriptor::Finite { .. } => PointId::Finite(0),
            LineDescriptor::Ordinal { .. } => PointId::Ordinal(Cnf::ZERO),
            LineDescriptor::LexDouble { inner } => PointId::pair(inner.min(), 0),
            LineDescriptor::UnitInterval => PointId::Rational(Q::zero()),
            LineDescriptor::DoubleArrow { .. } => PointId::Doubled(Q::zero(), 0),
        }
    }

    pub fn max(&self) -> PointId {
        match self {
            LineDescriptor::Finite { size, .. } => PointId::Finite(size - 1),
            LineDescriptor::Ordinal { bound } => PointId::Ordinal(*bound),
            LineDescriptor::LexDouble { inner } => PointId::pair(inner.max(), 1),
            LineDescriptor::UnitInterval => PointId::Rational(Q::one()),
            LineDescriptor::DoubleArrow { cut_set } => {
                if cut_set.contains(&Q::one()) {
                    PointId::Doubled(Q::one(), 1)
                } else {
                    PointId::Doubled(Q::one(), 0)
                }
            }
        }
    }

    pub fn compare(&self, p: &PointId, q: &PointId) -> Result<Ordering> {
        self.validate(p)?;
        self.validate(q)?;
        Ok(p.cmp(q))
    }

    pub fn successor(&self, p: &PointId) -> Result<Option<PointId>> {
        self.validate(p)?;
        Ok(match (self, p) {
            (LineDescriptor::Finite { size, .. }, PointId::Finite(i)) => {
                if i + 1 < *size {
                    Some(PointId::Finite(i + 1))
                } else {
                    None
                }
            }
            (LineDescriptor::Ordinal { bound }, PointId::Ordinal(x)) => {
                let s = x.succ();
                if s <= *bound {
                    Some(PointId::Ordinal(s))
                } else {
                    None
                }
            }
            (LineDescriptor::LexDouble { inner }, PointId::Pair(base, bit)) => match bit {
                0 => Some(PointId::pair((**base).clone(), 1)),
                _ => inner.successor(base)?.map(|s| PointId::pair(s, 0)),
            },
            (LineDescriptor::UnitInterval, _) => None,
            (LineDescriptor::DoubleArrow { cut_set }, PointId::Doubled(x, bit)) => {
                if *bit == 0 && cut_set.contains(x) {
                    Some(PointId::Doubled(x.clone(), 1))
                } else {
                    None
                }
            }
            _ => unreachable!("validated"),
        })
    }

    pub fn predecessor(&self, p: &PointId) -> Result<Option<PointId>> {
        self.validate(p)?;
        Ok(match (self, p) {
            (LineDescriptor::Finite { .. }, PointId::Finite(i)) => {
                i.checked_sub(1).map(PointId::Finite)
            }
            (LineDescriptor::Ordinal { .. }, PointId::Ordinal(x)) => {
                x.pred().map(PointId::Ordinal)
            }
            (LineDescriptor::LexDouble { inner }, PointId::Pair(base, bit)) => match bit {
                1 => Some(PointId::pair((**base).clone(), 0)),
                _ => inner.predecessor(base)?.map(|s| PointId::pair(s, 1)),
            },
            (LineDescriptor::UnitInterval, _) => None,
            (LineDescriptor::DoubleArrow { cut_set }, PointId::Doubled(x, bit)) => {
                if *bit == 1 && cut_set.contains(x) {
                    Some(PointId::Doubled(x.clone(), 0))
                } else {
                    None
                }
            }
            _ => unreachable!("validated"),
        })
    }

    /// Maximum, or a point with an immediate successor.
    pub fn is_right_isolated(&self, p: &PointId) -> Result<bool> {
        Ok(*p == self.max() || self.successor(p)?.is_some())
    }

    /// Minimum, or a point with an immediate predecessor.
    pub fn is_left_isolated(&self, p: &PointId) -> Result<bool> {
        Ok(*p == self.min() || self.predecessor(p)?.is_some())
    }

    /// `{p}` is open, i.e. `p` is isolated in the order topology.
    pub fn is_isolated(&self, p: &PointId) -> Result<bool> {
        Ok(self.is_right_isolated(p)? && self.is_left_isolated(p)?)
    }

    /// A point strictly between `p < q`, when the order is not consecutive
    /// there. Used to refine partitions in variation and integral checks.
    pub fn strictly_between(&self, p: &PointId, q: &PointId) -> Result<Option<PointId>> {
        self.validate(p)?;
        self.validate(q)?;
        if p >= q {
            return Ok(None);
        }
        Ok(match (self, p, q) {
            (LineDescriptor::Finite { .. }, _, _) | (LineDescriptor::Ordinal { .. }, _, _) => {
                match self.successor(p)? {
                    Some(s) if &s < q => Some(s),
                    _ => None,
                }
            }
            (LineDescriptor::UnitInterval, PointId::Rational(x), PointId::Rational(y)) => {
                Some(PointId::Rational((x + y) / crate::rat::q(2)))
            }
            (LineDescriptor::DoubleArrow { .. }, PointId::Doubled(x, i), PointId::Doubled(y, _)) => {
                if x == y {
                    None
                } else if *i == 0 && self.successor(p)? == Some(PointId::Doubled(x.clone(), 1)) {
                    Some(PointId::Doubled(x.clone(), 1))
                } else {
                    let m = (x + y) / crate::rat::q(2);
                    Some(PointId::Doubled(m, 0))
                }
            }
            (LineDescriptor::LexDouble { inner }, PointId::Pair(a, i), PointId::Pair(b, j)) => {
                if a == b {
                    None // (a,0) and (a,1) are consecutive
                } else if *i == 0 {
                    Some(PointId::pair((**a).clone(), 1))
                } else {
                    match inner.strictly_between(a, b)? {
                        Some(t) => Some(PointId::pair(t, 0)),
                        None => {
                            if *j == 1 {
                                Some(PointId::pair((**b).clone(), 0))
                            } else {
                                None
                            }
                        }
                    }
                }
            }
            _ => unreachable!("validated"),
        })
    }

    /// Zero-dimensionality flag. Double-arrow lines over a finite, hence
    /// non-dense, cut set are flagged non-zero-dimensional along with the
    /// unit interval; only Finite, Ordinal and LexDouble variants are
    /// accepted where zero-dimensionality is required.
    pub fn is_zero_dimensional(&self) -> bool {
        matches!(
            self,
            LineDescriptor::Finite { .. }
                | LineDescriptor::Ordinal { .. }
                | LineDescriptor::LexDouble { .. }
        )
    }

    /// Canonical deterministic stream of points. Breadth-first over the
    /// line's symbolic cut descriptions; visits every right-isolated point.
    pub fn point_stream(&self) -> Box<dyn Iterator<Item = PointId> + '_> {
        match self {
            LineDescriptor::Finite { size, .. } => {
                Box::new((0..*size).map(PointId::Finite))
            }
            LineDescriptor::Ordinal { bound } => {
                Box::new(CnfEnumerator::new(*bound).map(PointId::Ordinal))
            }
            LineDescriptor::UnitInterval => Box::new(DyadicStream::new().map(PointId::Rational)),
            LineDescriptor::DoubleArrow { cut_set } => {
                let mut head = vec![PointId::Doubled(Q::zero(), 0)];
                for x in cut_set {
                    head.push(PointId::Doubled(x.clone(), 0));
                    head.push(PointId::Doubled(x.clone(), 1));
                }
                if !cut_set.contains(&Q::one()) {
                    head.push(PointId::Doubled(Q::one(), 0));
                }
                let seen: BTreeSet<Q> = cut_set.iter().cloned().collect();
                let tail = DyadicStream::new()
                    .filter(move |x| !x.is_zero() && !x.is_one() && !seen.contains(x))
                    .map(|x| PointId::Doubled(x, 0));
                Box::new(head.into_iter().chain(tail))
            }
            LineDescriptor::LexDouble { inner } => Box::new(
                inner
                    .point_stream()
                    .flat_map(|p| [PointId::pair(p.clone(), 0), PointId::pair(p, 1)]),
            ),
        }
    }

    /// First `k` right-isolated points in canonical order, maximum excluded.
    pub fn enumerate_right_isolated(&self, k: usize) -> Vec<PointId> {
        let max = self.max();
        let mut out = Vec::with_capacity(k);
        // The stream may be infinite but contains every right-isolated point;
        // non-right-isolated entries are filtered out. Scan enough of it.
        let mut scanned = 0usize;
        for p in self.point_stream() {
            scanned += 1;
            if out.len() == k || scanned > 64 * (k + 8) {
                break;
            }
            if p != max && self.is_right_isolated(&p).unwrap_or(false) {
                out.push(p);
            }
        }
        out
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            LineDescriptor::Finite { .. } => "finite",
            LineDescriptor::Ordinal { .. } => "ordinal",
            LineDescriptor::LexDouble { .. } => "lexdouble",
            LineDescriptor::UnitInterval => "interval",
            LineDescriptor::DoubleArrow { .. } => "doublearrow",
        }
    }
}

/// Dyadic rationals of `[0,1]`: `0, 1, 1/2, 1/4, 3/4, 1/8, 3/8, ...`.
struct DyadicStream {
    level: u32,
    numer: u64,
    head: u8,
}

impl DyadicStream {
    fn new() -> Self {
        DyadicStream { level: 1, numer: 1, head: 0 }
    }
}

impl Iterator for DyadicStream {
    type Item = Q;

    fn next(&mut self) -> Option<Q> {
        if self.head < 2 {
            self.head += 1;
            return Some(if self.head == 1 { Q::zero() } else { Q::one() });
        }
        if self.level > 40 {
            return None;
        }
        let v = crate::rat::qr(self.numer as i64, 1 << self.level.min(62));
        self.numer += 2;
        if self.numer > (1u64 << self.level) {
            self.level += 1;
            self.numer = 1;
        }
        Some(v)
    }
}

/// `[0,hi]` when `lo` is absent, else `]lo,hi]`. Both endpoints must be
/// right-isolated for the interval to be clopen.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClopenInterval {
    pub lo: Option<PointId>,
    pub hi: PointId,
}

impl ClopenInterval {
    pub fn new(line: &LineDescriptor, lo: Option<PointId>, hi: PointId) -> Result<Self> {
        if let Some(l) = &lo {
            if !line.is_right_isolated(l)? {
                return Err(Error::NotRightIsolated(format!("{l}")));
            }
            if l >= &hi {
                return Err(Error::InvalidInstance("empty clopen interval".into()));
            }
        }
        if !line.is_right_isolated(&hi)? {
            return Err(Error::NotRightIsolated(format!("{hi}")));
        }
        Ok(ClopenInterval { lo, hi })
    }

    /// Whole line `[0, max]`.
    pub fn full(line: &LineDescriptor) -> Self {
        ClopenInterval { lo: None, hi: line.max() }
    }

    pub fn contains(&self, t: &PointId) -> bool {
        let above = match &self.lo {
            None => true,
            Some(l) => t > l,
        };
        above && t <= &self.hi
    }

    /// Minimum of the interval as a set.
    pub fn min_point(&self, line: &LineDescriptor) -> Result<PointId> {
        match &self.lo {
            None => Ok(line.min()),
            Some(l) => line
                .successor(l)?
                .ok_or_else(|| Error::InvalidInstance("empty clopen interval".into())),
        }
    }
}

/// A finite set of right-isolated cuts containing the maximum; induces the
/// cell partition `[0,b1], ]b1,b2], ..., ]b_{m-1}, b_m]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClopenPartition {
    pub cuts: Vec<PointId>,
}

impl ClopenPartition {
    pub fn new(line: &LineDescriptor, mut cuts: Vec<PointId>) -> Result<Self> {
        cuts.sort();
        cuts.dedup();
        for b in &cuts {
            line.validate(b)?;
            if !line.is_right_isolated(b)? {
                return Err(Error::NotRightIsolated(format!("{b}")));
            }
        }
        if cuts.last() != Some(&line.max()) {
            return Err(Error::MaxMissingFromCuts);
        }
        Ok(ClopenPartition { cuts })
    }

    pub fn cells(&self) -> Vec<ClopenInterval> {
        let mut out = Vec::with_capacity(self.cuts.len());
        let mut lo: Option<PointId> = None;
        for b in &self.cuts {
            out.push(ClopenInterval { lo: lo.clone(), hi: b.clone() });
            lo = Some(b.clone());
        }
        out
    }

    pub fn cell_of(&self, line: &LineDescriptor, t: &PointId) -> Result<ClopenInterval> {
        line.validate(t)?;
        let idx = self.cuts.partition_point(|b| b < t);
        let hi = self.cuts[idx].clone();
        let lo = if idx == 0 { None } else { Some(self.cuts[idx - 1].clone()) };
        Ok(ClopenInterval { lo, hi })
    }

    pub fn is_refined_by(&self, finer: &ClopenPartition) -> bool {
        self.cuts.iter().all(|b| finer.cuts.contains(b))
    }
}

/// Canonical increasing sequence of clopen partitions: the first `k` points
/// of the line's right-isolated enumeration plus the maximum. Deterministic,
/// monotone in `k`, and exhausting all right-isolated points in the limit.
pub fn refine_partitions(line: &LineDescriptor, k: usize) -> Result<ClopenPartition> {
    let mut cuts = line.enumerate_right_isolated(k);
    cuts.push(line.max());
    ClopenPartition::new(line, cuts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum QuotientKind {
    Identity,
    /// First projection of a lexicographic double onto its base.
    Projection,
    /// Fibers are the cells of the cut set; target is a finite line.
    Cuts(Vec<PointId>),
}

/// A continuous increasing surjection `q: K -> L` with closed-interval
/// fibers, together with derived fiber data.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub source: LineDescriptor,
    pub target: LineDescriptor,
    kind: QuotientKind,
}

impl QuotientMap {
    pub fn identity(line: LineDescriptor) -> Self {
        QuotientMap { source: line.clone(), target: line, kind: QuotientKind::Identity }
    }

    pub fn map(&self, p: &PointId) -> Result<PointId> {
        self.source.validate(p)?;
        Ok(match &self.kind {
            QuotientKind::Identity => p.clone(),
            QuotientKind::Projection => match p {
                PointId::Pair(base, _) => (**base).clone(),
                _ => unreachable!("validated"),
            },
            QuotientKind::Cuts(bounds) => {
                let idx = bounds.partition_point(|b| b < p);
                PointId::Finite(idx as u64)
            }
        })
    }

    /// `b_t`, the maximum of the fiber over `t`.
    pub fn fiber_max(&self, t: &PointId) -> Result<PointId> {
        self.target.validate(t)?;
        Ok(match &self.kind {
            QuotientKind::Identity => t.clone(),
            QuotientKind::Projection => PointId::pair(t.clone(), 1),
            QuotientKind::Cuts(bounds) => match t {
                PointId::Finite(i) => bounds[*i as usize].clone(),
                _ => unreachable!("validated"),
            },
        })
    }

    /// Minimum of the fiber over `t`.
    pub fn fiber_min(&self, t: &PointId) -> Result<PointId> {
        self.target.validate(t)?;
        Ok(match &self.kind {
            QuotientKind::Identity => t.clone(),
            QuotientKind::Projection => PointId::pair(t.clone(), 0),
            QuotientKind::Cuts(bounds) => match t {
                PointId::Finite(0) => self.source.min(),
                PointId::Finite(i) => self
                    .source
                    .successor(&bounds[*i as usize - 1])?
                    .expect("cut below max has a successor"),
                _ => unreachable!("validated"),
            },
        })
    }

    /// Whether the fiber over `t` has more than one point.
    pub fn is_multi_fiber(&self, t: &PointId) -> Result<bool> {
        Ok(self.fiber_min(t)? < self.fiber_max(t)?)
    }

    /// The multi-fiber set `Q_f` when it is finitely enumerable, otherwise a
    /// deterministic sample of at most `cap` of its points.
    pub fn multi_fiber_points(&self, cap: usize) -> Result<Vec<PointId>> {
        match &self.kind {
            QuotientKind::Identity => Ok(Vec::new()),
            QuotientKind::Cuts(bounds) => {
                let mut out = Vec::new();
                for i in 0..bounds.len() {
                    let t = PointId::Finite(i as u64);
                    if self.is_multi_fiber(&t)? {
                        out.push(t);
                    }
                }
                Ok(out)
            }
            QuotientKind::Projection => {
                Ok(self.target.point_stream().take(cap).collect())
            }
        }
    }

    /// `a_t`: a right-isolated point of the source inside the fiber over
    /// `t`, strictly below `b_t`. Exists whenever the source line is
    /// zero-dimensional and the fiber is not a singleton.
    pub fn fiber_witness(&self, t: &PointId) -> Result<Option<PointId>> {
        let lo = self.fiber_min(t)?;
        let hi = self.fiber_max(t)?;
        if lo == hi {
            return Ok(None);
        }
        let mut candidates: Vec<PointId> = vec![lo.clone()];
        if let PointId::Pair(base, 1) = &hi {
            candidates.push(PointId::pair((**base).clone(), 0));
        }
        if let Some(m) = self.source.strictly_between(&lo, &hi)? {
            candidates.push(m);
        }
        for cand in candidates {
            if cand >= lo && cand < hi && self.source.is_right_isolated(&cand)? {
                return Ok(Some(cand));
            }
        }
        Ok(None)
    }
}

/// Lexicographic doubling `K x {0,1}` together with the first-projection
/// quotient back onto `K`. Every fiber is the pair `{(t,0), (t,1)}`.
pub fn lex_double(line: &LineDescriptor) -> (LineDescriptor, QuotientMap) {
    let double = LineDescriptor::lex_double_of(line.clone());
    let q = QuotientMap {
        source: double.clone(),
        target: line.clone(),
        kind: QuotientKind::Projection,
    };
    (double, q)
}

/// Quotient of `K` by a finite set `E` of right-isolated cut points: the
/// fibers are the maximal intervals on which every `chi_[0,s]`, `s` in `E`,
/// is constant, and the target is the finite line of those order classes.
pub fn build_quotient(source: &LineDescriptor, cuts: &[PointId]) -> Result<QuotientMap> {
    let mut bounds: Vec<PointId> = Vec::new();
    for s in cuts {
        source.validate(s)?;
        if !source.is_right_isolated(s)? {
            return Err(Error::NotRightIsolated(format!("{s}")));
        }
        bounds.push(s.clone());
    }
    bounds.push(source.max());
    bounds.sort();
    bounds.dedup();
    let target = LineDescriptor::finite(bounds.len() as u64);
    Ok(QuotientMap { source: source.clone(), target, kind: QuotientKind::Cuts(bounds) })
}

#[cfg(test)]
mod tests;
