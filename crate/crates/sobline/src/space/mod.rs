//! Continuous test functions, pullback along quotients, and operators
//! `R: X -> C(L)` with exactly computable dual norms.

pub mod lp;
mod operator;

pub use operator::{CoefPattern, CoordinateOp, DualVector, FiniteBasisOp, OperatorR};

use num_traits::Zero;

use crate::error::Error;
use crate::order::{ClopenInterval, ClopenPartition, LineDescriptor, PointId, QuotientMap};
use crate::rat::Q;
use crate::Result;

/// A continuous test function: a step function subordinate to a clopen
/// partition, or a piecewise-linear function on the unit interval line.
/// Continuity is automatic in both representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TestFunction {
    Step(StepFunction),
    Pwl(PwlFunction),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepFunction {
    pub line: LineDescriptor,
    pub partition: ClopenPartition,
    pub values: Vec<Q>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PwlFunction {
    /// Nodes `(x, f(x))` with `x` strictly increasing from 0 to 1.
    pub nodes: Vec<(Q, Q)>,
}

impl StepFunction {
    pub fn new(line: &LineDescriptor, cuts: Vec<PointId>, values: Vec<Q>) -> Result<Self> {
        let partition = ClopenPartition::new(line, cuts)?;
        if partition.cuts.len() != values.len() {
            return Err(Error::InvalidInstance(
                "step function needs one value per cell".into(),
            ));
        }
        Ok(StepFunction { line: line.clone(), partition, values })
    }

    pub fn eval(&self, t: &PointId) -> Result<Q> {
        self.line.validate(t)?;
        let idx = self.partition.cuts.partition_point(|b| b < t);
        Ok(self.values[idx].clone())
    }

    pub fn cells(&self) -> Vec<(ClopenInterval, Q)> {
        self.partition
            .cells()
            .into_iter()
            .zip(self.values.iter().cloned())
            .collect()
    }
}

impl PwlFunction {
    pub fn new(nodes: Vec<(Q, Q)>) -> Result<Self> {
        if nodes.len() < 2 || nodes[0].0 != Q::zero() || nodes.last().unwrap().0 != crate::rat::q(1)
        {
            return Err(Error::InvalidInstance(
                "piecewise-linear nodes must run from 0 to 1".into(),
            ));
        }
        for w in nodes.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidInstance(
                    "piecewise-linear nodes must be strictly increasing".into(),
                ));
            }
        }
        Ok(PwlFunction { nodes })
    }

    pub fn eval(&self, x: &Q) -> Q {
        let i = self.nodes.partition_point(|(nx, _)| nx <= x);
        if i == 0 {
            return self.nodes[0].1.clone();
        }
        if i == self.nodes.len() {
            return self.nodes.last().unwrap().1.clone();
        }
        let (x0, y0) = &self.nodes[i - 1];
        let (x1, y1) = &self.nodes[i];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Largest absolute slope over all segments.
    pub fn max_slope(&self) -> Q {
        use num_traits::Signed;
        self.nodes
            .windows(2)
            .map(|w| ((&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0)).abs())
            .max()
            .expect("at least one segment")
    }
}

impl TestFunction {
    pub fn step(line: &LineDescriptor, cuts: Vec<PointId>, values: Vec<Q>) -> Result<Self> {
        Ok(TestFunction::Step(StepFunction::new(line, cuts, values)?))
    }

    pub fn piecewise_linear(nodes: Vec<(Q, Q)>) -> Result<Self> {
        Ok(TestFunction::Pwl(PwlFunction::new(nodes)?))
    }

    /// Characteristic function of the initial interval `[0, s]`.
    pub fn chi_initial(line: &LineDescriptor, s: PointId) -> Result<Self> {
        let max = line.max();
        if s == max {
            Self::step(line, vec![max], vec![crate::rat::q(1)])
        } else {
            Self::step(line, vec![s, max], vec![crate::rat::q(1), Q::zero()])
        }
    }

    pub fn constant(line: &LineDescriptor, v: Q) -> Result<Self> {
        Self::step(line, vec![line.max()], vec![v])
    }

    pub fn line(&self) -> &LineDescriptor {
        static UNIT: LineDescriptor = LineDescriptor::UnitInterval;
        match self {
            TestFunction::Step(s) => &s.line,
            TestFunction::Pwl(_) => &UNIT,
        }
    }

    pub fn eval(&self, t: &PointId) -> Result<Q> {
        match self {
            TestFunction::Step(s) => s.eval(t),
            TestFunction::Pwl(p) => match t {
                PointId::Rational(x) if x >= &Q::zero() && x <= &crate::rat::q(1) => {
                    Ok(p.eval(x))
                }
                _ => Err(Error::InvalidPoint(format!("{t} on interval"))),
            },
        }
    }

    pub fn sup_norm(&self) -> Q {
        use num_traits::Signed;
        match self {
            TestFunction::Step(s) => s
                .values
                .iter()
                .map(|v| v.abs())
                .max()
                .unwrap_or_else(Q::zero),
            TestFunction::Pwl(p) => p
                .nodes
                .iter()
                .map(|(_, y)| y.abs())
                .max()
                .unwrap_or_else(Q::zero),
        }
    }

    /// Points at which the function may change value; used to refine
    /// integration partitions.
    pub fn breakpoints(&self) -> Vec<PointId> {
        match self {
            TestFunction::Step(s) => s.partition.cuts.clone(),
            TestFunction::Pwl(p) => p
                .nodes
                .iter()
                .map(|(x, _)| PointId::Rational(x.clone()))
                .collect(),
        }
    }
}

/// Pullback `q^* f = f o q` of a step function along an increasing quotient.
/// Cells pull back to clopen cells cut at the fiber maxima `b_t`, so the
/// step structure and the sup norm are preserved exactly.
pub fn pullback(q: &QuotientMap, f: &TestFunction) -> Result<TestFunction> {
    let step = match f {
        TestFunction::Step(s) => s,
        TestFunction::Pwl(_) => {
            return Err(Error::UnsupportedLine(
                "pullback of piecewise-linear functions is not step-representable".into(),
            ))
        }
    };
    if step.line != q.target {
        return Err(Error::LineMismatch);
    }
    let cuts = step
        .partition
        .cuts
        .iter()
        .map(|b| q.fiber_max(b))
        .collect::<Result<Vec<_>>>()?;
    TestFunction::step(&q.source, cuts, step.values.clone())
}
