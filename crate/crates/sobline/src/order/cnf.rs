//! Ordinals below `omega^3` in Cantor normal form.
//!
//! A value `(a, b, c)` denotes `omega^2 * a + omega * b + c`. Line bounds are
//! capped at small coefficients; points of a line may carry arbitrary
//! coefficients as long as they stay at or below the bound.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest coefficient allowed in the bound of an ordinal line.
pub const MAX_BOUND_COEFF: u64 = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cnf {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Cnf {
    pub const ZERO: Cnf = Cnf { a: 0, b: 0, c: 0 };

    pub fn new(a: u64, b: u64, c: u64) -> Self {
        Cnf { a, b, c }
    }

    pub fn fin(c: u64) -> Self {
        Cnf { a: 0, b: 0, c }
    }

    /// `omega * b + c`.
    pub fn omega(b: u64, c: u64) -> Self {
        Cnf { a: 0, b, c }
    }

    /// `omega^2 * a`.
    pub fn omega2(a: u64) -> Self {
        Cnf { a, b: 0, c: 0 }
    }

    pub fn is_zero(&self) -> bool {
        *self == Cnf::ZERO
    }

    /// Limit ordinal: nonzero with no predecessor.
    pub fn is_limit(&self) -> bool {
        self.c == 0 && (self.a > 0 || self.b > 0)
    }

    /// Successor ordinal or zero.
    pub fn is_isolated_from_left(&self) -> bool {
        !self.is_limit()
    }

    pub fn succ(&self) -> Cnf {
        Cnf { a: self.a, b: self.b, c: self.c + 1 }
    }

    pub fn pred(&self) -> Option<Cnf> {
        if self.c > 0 {
            Some(Cnf { a: self.a, b: self.b, c: self.c - 1 })
        } else {
            None
        }
    }

    /// Smallest limit ordinal `>= self`, ignoring any upper bound.
    pub fn limit_ceil(&self) -> Cnf {
        if self.c == 0 && (self.a > 0 || self.b > 0) {
            *self
        } else {
            Cnf { a: self.a, b: self.b + 1, c: 0 }
        }
    }

    /// Largest limit ordinal `<= self`, if any.
    pub fn limit_floor(&self) -> Option<Cnf> {
        if self.a == 0 && self.b == 0 {
            None
        } else {
            Some(Cnf { a: self.a, b: self.b, c: 0 })
        }
    }

    /// Limits accumulate at `self` from below precisely at `omega^2 * a`.
    pub fn is_limit_of_limits(&self) -> bool {
        self.a > 0 && self.b == 0 && self.c == 0
    }

    fn weight(&self) -> u64 {
        self.a + self.b + self.c
    }
}

impl PartialOrd for Cnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cnf {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a, self.b, self.c).cmp(&(other.a, other.b, other.c))
    }
}

impl fmt::Display for Cnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.a > 0 {
            parts.push(if self.a == 1 { "w2".to_string() } else { format!("w2*{}", self.a) });
        }
        if self.b > 0 {
            parts.push(if self.b == 1 { "w".to_string() } else { format!("w*{}", self.b) });
        }
        if self.c > 0 || parts.is_empty() {
            parts.push(self.c.to_string());
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl fmt::Debug for Cnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Enumerates all ordinals `<= bound` in a breadth-first order: ascending
/// coefficient weight `a+b+c`, lexicographic within a weight class. The
/// stream is deterministic and visits every point of the segment.
pub struct CnfEnumerator {
    bound: Cnf,
    weight: u64,
    queue: Vec<Cnf>,
}

impl CnfEnumerator {
    pub fn new(bound: Cnf) -> Self {
        CnfEnumerator { bound, weight: 0, queue: Vec::new() }
    }

    fn fill(&mut self) {
        // Weight classes below the bound's weight are never empty until all
        // points are exhausted, but classes can be empty once the bound caps
        // coordinates; scan a bounded number of classes per fill.
        while self.queue.is_empty() {
            let w = self.weight;
            if w > self.bound.weight() {
                return;
            }
            self.weight += 1;
            let mut class = Vec::new();
            for a in 0..=w {
                for b in 0..=(w - a) {
                    let c = w - a - b;
                    let v = Cnf { a, b, c };
                    if v <= self.bound {
                        class.push(v);
                    }
                }
            }
            class.sort();
            class.reverse(); // pop from the back in ascending order
            self.queue = class;
        }
    }
}

impl Iterator for CnfEnumerator {
    type Item = Cnf;

    fn next(&mut self) -> Option<Cnf> {
        self.fill();
        self.queue.pop()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_lexicographic() {
        assert!(Cnf::fin(5) < Cnf::omega(1, 0));
        assert!(Cnf::omega(1, 3) < Cnf::omega(2, 0));
        assert!(Cnf::omega(7, 99) < Cnf::omega2(1));
    }

    #[test]
    fn limits_and_successors() {
        assert!(Cnf::omega(1, 0).is_limit());
        assert!(!Cnf::ZERO.is_limit());
        assert!(!Cnf::fin(3).is_limit());
        assert_eq!(Cnf::omega(1, 0).succ(), Cnf::omega(1, 1));
        assert_eq!(Cnf::omega(1, 1).pred(), Some(Cnf::omega(1, 0)));
        assert_eq!(Cnf::omega(1, 0).pred(), None);
        assert!(Cnf::omega2(1).is_limit_of_limits());
        assert!(!Cnf::omega(2, 0).is_limit_of_limits());
        assert_eq!(Cnf::fin(4).limit_ceil(), Cnf::omega(1, 0));
        assert_eq!(Cnf::omega(2, 5).limit_floor(), Some(Cnf::omega(2, 0)));
        assert_eq!(Cnf::fin(4).limit_floor(), None);
    }

    #[test]
    fn enumeration_of_omega_segment_is_naturals_then_limit() {
        let pts: Vec<Cnf> = CnfEnumerator::new(Cnf::omega(1, 0)).take(6).collect();
        assert_eq!(
            pts,
            vec![
                Cnf::ZERO,
                Cnf::fin(1),
                Cnf::omega(1, 0),
                Cnf::fin(2),
                Cnf::fin(3),
                Cnf::fin(4)
            ]
        );
    }

    #[test]
    fn enumeration_of_omega_squared_interleaves_blocks() {
        let pts: Vec<Cnf> = CnfEnumerator::new(Cnf::omega2(1)).take(7).collect();
        assert_eq!(
            pts,
            vec![
                Cnf::ZERO,
                Cnf::fin(1),
                Cnf::omega(1, 0),
                Cnf::fin(2),
                Cnf::omega(1, 1),
                Cnf::omega(2, 0),
                Cnf::omega2(1),
            ]
        );
    }
}
