//! Finitely supported signed measures with exact rational weights.
//!
//! A measure is a finite map from points of a line to nonzero rational
//! weights. Total variation, the Jordan decomposition, cumulative (NBV)
//! profiles, Riemann-Stieltjes integration against continuous test functions
//! and pushforward along increasing quotients are all computed exactly; the
//! isometry `bv_norm(F_mu) = ||mu||` holds as a rational identity.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::order::{ClopenInterval, LineDescriptor, PointId, QuotientMap};
use crate::rat::Q;
use crate::space::TestFunction;
use crate::Result;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedMeasure {
    pub line: LineDescriptor,
    atoms: BTreeMap<PointId, Q>,
}

impl SignedMeasure {
    pub fn zero(line: LineDescriptor) -> Self {
        SignedMeasure { line, atoms: BTreeMap::new() }
    }

    pub fn dirac(line: LineDescriptor, p: PointId) -> Result<Self> {
        line.validate(&p)?;
        let mut atoms = BTreeMap::new();
        atoms.insert(p, crate::rat::q(1));
        Ok(SignedMeasure { line, atoms })
    }

    /// Builds from point/weight pairs, merging repeats and dropping zeros.
    pub fn from_atoms(line: LineDescriptor, pairs: Vec<(PointId, Q)>) -> Result<Self> {
        let mut atoms: BTreeMap<PointId, Q> = BTreeMap::new();
        for (p, w) in pairs {
            line.validate(&p)?;
            let entry = atoms.entry(p).or_insert_with(Q::zero);
            *entry += w;
        }
        atoms.retain(|_, w| !w.is_zero());
        Ok(SignedMeasure { line, atoms })
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&PointId, &Q)> {
        self.atoms.iter()
    }

    pub fn weight_at(&self, p: &PointId) -> Q {
        self.atoms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn support(&self) -> Vec<PointId> {
        self.atoms.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn num_atoms(&self) -> usize {
        self.atoms.len()
    }

    /// Total variation norm: sum of absolute weights.
    pub fn total_variation(&self) -> Q {
        self.atoms.values().map(|w| w.abs()).fold(Q::zero(), |a, b| a + b)
    }

    /// Total mass `mu(L)`.
    pub fn mass(&self) -> Q {
        self.atoms.values().fold(Q::zero(), |a, b| a + b)
    }

    /// Jordan decomposition `mu = mu_plus - mu_minus` with disjoint
    /// nonnegative parts.
    pub fn jordan(&self) -> (SignedMeasure, SignedMeasure) {
        let mut plus = BTreeMap::new();
        let mut minus = BTreeMap::new();
        for (p, w) in &self.atoms {
            if w.is_positive() {
                plus.insert(p.clone(), w.clone());
            } else {
                minus.insert(p.clone(), -w.clone());
            }
        }
        (
            SignedMeasure { line: self.line.clone(), atoms: plus },
            SignedMeasure { line: self.line.clone(), atoms: minus },
        )
    }

    pub fn negate(&self) -> SignedMeasure {
        let atoms = self.atoms.iter().map(|(p, w)| (p.clone(), -w.clone())).collect();
        SignedMeasure { line: self.line.clone(), atoms }
    }

    pub fn scale(&self, factor: &Q) -> SignedMeasure {
        if factor.is_zero() {
            return SignedMeasure::zero(self.line.clone());
        }
        let atoms = self.atoms.iter().map(|(p, w)| (p.clone(), w * factor)).collect();
        SignedMeasure { line: self.line.clone(), atoms }
    }

    pub fn add(&self, other: &SignedMeasure) -> Result<SignedMeasure> {
        if self.line != other.line {
            return Err(Error::LineMismatch);
        }
        let mut atoms = self.atoms.clone();
        for (p, w) in &other.atoms {
            let entry = atoms.entry(p.clone()).or_insert_with(Q::zero);
            *entry += w;
        }
        atoms.retain(|_, w| !w.is_zero());
        Ok(SignedMeasure { line: self.line.clone(), atoms })
    }

    pub fn sub(&self, other: &SignedMeasure) -> Result<SignedMeasure> {
        self.add(&other.negate())
    }

    /// Cumulative value `F_mu(t) = mu([0,t])`.
    pub fn cumulative(&self, t: &PointId) -> Result<Q> {
        self.line.validate(t)?;
        Ok(self
            .atoms
            .range(..=t.clone())
            .map(|(_, w)| w)
            .fold(Q::zero(), |a, b| a + b))
    }

    /// Mass of a clopen interval.
    pub fn interval_mass(&self, i: &ClopenInterval) -> Q {
        self.atoms
            .iter()
            .filter(|(p, _)| i.contains(p))
            .map(|(_, w)| w)
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Restriction to a clopen interval.
    pub fn restrict_interval(&self, i: &ClopenInterval) -> SignedMeasure {
        let atoms = self
            .atoms
            .iter()
            .filter(|(p, _)| i.contains(p))
            .map(|(p, w)| (p.clone(), w.clone()))
            .collect();
        SignedMeasure { line: self.line.clone(), atoms }
    }
}

/// The cumulative profile of a measure, i.e. the right-continuous function
/// of bounded variation `F(t) = mu([0,t])` under the norm
/// `|F(0)| + V(F)`.
#[derive(Clone, Debug)]
pub struct NbvProfile {
    pub measure: SignedMeasure,
}

impl NbvProfile {
    pub fn new(measure: SignedMeasure) -> Self {
        NbvProfile { measure }
    }

    pub fn line(&self) -> &LineDescriptor {
        &self.measure.line
    }

    pub fn value(&self, t: &PointId) -> Result<Q> {
        self.measure.cumulative(t)
    }

    /// Canonical partition carrying all variation of `F`: minimum, maximum
    /// and every atom.
    fn canonical_partition(&self) -> Vec<PointId> {
        let line = &self.measure.line;
        let mut pts: Vec<PointId> = vec![line.min(), line.max()];
        pts.extend(self.measure.support());
        pts.sort();
        pts.dedup();
        pts
    }

    fn variation_on(&self, pts: &[PointId]) -> Result<Q> {
        let mut total = Q::zero();
        let mut prev = self.value(&pts[0])?;
        for t in &pts[1..] {
            let cur = self.value(t)?;
            total += (cur.clone() - prev).abs();
            prev = cur;
        }
        Ok(total)
    }

    /// `|F(0)| + V(F)`. The variation is computed on the canonical
    /// atom-refining partition and re-checked on a one-step refinement,
    /// which is exact for finitely supported measures.
    pub fn bv_norm(&self) -> Result<Q> {
        let line = &self.measure.line;
        let pts = self.canonical_partition();
        let base = self.variation_on(&pts)?;
        let mut refined: Vec<PointId> = Vec::with_capacity(pts.len() * 2);
        for pair in pts.windows(2) {
            refined.push(pair[0].clone());
            if let Some(m) = line.strictly_between(&pair[0], &pair[1])? {
                refined.push(m);
            }
        }
        refined.push(pts.last().expect("nonempty").clone());
        let again = self.variation_on(&refined)?;
        if base != again {
            return Err(Error::PostconditionFailed(
                "variation not stable under refinement".into(),
            ));
        }
        let f0 = self.value(&line.min())?;
        Ok(f0.abs() + base)
    }
}

/// Riemann-Stieltjes integral of a continuous test function against the
/// profile of a finitely supported measure:
/// `S(f,F;P) = f(0)F(0) + sum f(t_{i+1}) (F(t_{i+1}) - F(t_i))` on a
/// partition refining all atoms and breakpoints, checked stable under one
/// further refinement. Equals `sum_p f(p) mu({p})` exactly.
pub fn rs_integral(f: &TestFunction, profile: &NbvProfile) -> Result<Q> {
    let line = profile.line();
    if f.line() != line {
        return Err(Error::LineMismatch);
    }
    let mut pts: Vec<PointId> = vec![line.min(), line.max()];
    pts.extend(profile.measure.support());
    pts.extend(f.breakpoints());
    pts.sort();
    pts.dedup();

    let sum_on = |pts: &[PointId]| -> Result<Q> {
        let mut total = f.eval(&pts[0])? * profile.value(&pts[0])?;
        let mut prev = profile.value(&pts[0])?;
        for t in &pts[1..] {
            let cur = profile.value(t)?;
            total += f.eval(t)? * (cur.clone() - &prev);
            prev = cur;
        }
        Ok(total)
    };

    let base = sum_on(&pts)?;
    let mut refined: Vec<PointId> = Vec::with_capacity(pts.len() * 2);
    for pair in pts.windows(2) {
        refined.push(pair[0].clone());
        if let Some(m) = line.strictly_between(&pair[0], &pair[1])? {
            refined.push(m);
        }
    }
    refined.push(pts.last().expect("nonempty").clone());
    let again = sum_on(&refined)?;
    if base != again {
        return Err(Error::PostconditionFailed(
            "Riemann-Stieltjes sum not stable under refinement".into(),
        ));
    }
    Ok(base)
}

/// Pushforward along an increasing quotient: atom at `q(p)` accumulates the
/// weight at `p`. Linear, norm-nonincreasing, mass-preserving.
pub fn pushforward(q: &QuotientMap, mu: &SignedMeasure) -> Result<SignedMeasure> {
    if mu.line != q.source {
        return Err(Error::LineMismatch);
    }
    let pairs = mu
        .atoms()
        .map(|(p, w)| Ok((q.map(p)?, w.clone())))
        .collect::<Result<Vec<_>>>()?;
    SignedMeasure::from_atoms(q.target.clone(), pairs)
}
