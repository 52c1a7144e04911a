use super::*;
use crate::rat::qr;

fn fin(n: u64) -> LineDescriptor {
    LineDescriptor::finite(n)
}

fn pt(i: u64) -> PointId {
    PointId::Finite(i)
}

fn ord_pt(a: u64, b: u64, c: u64) -> PointId {
    PointId::Ordinal(Cnf::new(a, b, c))
}

#[test]
fn finite_line_queries() {
    let line = fin(5);
    assert_eq!(line.successor(&pt(2)).unwrap(), Some(pt(3)));
    assert!(line.is_right_isolated(&pt(4)).unwrap());
    assert_eq!(line.min(), pt(0));
    assert_eq!(line.max(), pt(4));
    assert!(line.validate(&pt(5)).is_err());
}

#[test]
fn lex_double_successor_enumerates_four_point_order() {
    let line = LineDescriptor::lex_double_of(fin(2));
    let p00 = PointId::pair(pt(0), 0);
    let p01 = PointId::pair(pt(0), 1);
    let p10 = PointId::pair(pt(1), 0);
    let p11 = PointId::pair(pt(1), 1);
    assert_eq!(line.successor(&p00).unwrap(), Some(p01.clone()));
    assert_eq!(line.successor(&p01).unwrap(), Some(p10.clone()));
    assert_eq!(line.successor(&p10).unwrap(), Some(p11.clone()));
    assert_eq!(line.successor(&p11).unwrap(), None);
    assert_eq!(line.min(), p00);
    assert_eq!(line.max(), p11);
    assert!(line.compare(&p01, &p10).unwrap() == std::cmp::Ordering::Less);
}

#[test]
fn ordinal_successor_and_isolation() {
    let line = LineDescriptor::ordinal(Cnf::omega(2, 0)).unwrap();
    assert_eq!(line.successor(&ord_pt(0, 1, 0)).unwrap(), Some(ord_pt(0, 1, 1)));
    assert!(line.is_right_isolated(&ord_pt(0, 1, 0)).unwrap());
    assert!(!line.is_left_isolated(&ord_pt(0, 1, 0)).unwrap());
    assert!(line.is_left_isolated(&ord_pt(0, 0, 0)).unwrap());
    // max of the segment
    assert_eq!(line.successor(&ord_pt(0, 2, 0)).unwrap(), None);
    assert!(line.is_right_isolated(&ord_pt(0, 2, 0)).unwrap());
}

#[test]
fn lex_double_of_ordinal_has_bit_successor_at_limits() {
    let line = LineDescriptor::lex_double_of(
        LineDescriptor::ordinal(Cnf::omega(1, 0)).unwrap(),
    );
    let w0 = PointId::pair(ord_pt(0, 1, 0), 0);
    let w1 = PointId::pair(ord_pt(0, 1, 0), 1);
    assert_eq!(line.successor(&w0).unwrap(), Some(w1));
}

#[test]
fn partition_cells_and_cell_of() {
    let line = fin(5);
    let p = ClopenPartition::new(&line, vec![pt(1), pt(4)]).unwrap();
    let cells = p.cells();
    assert_eq!(cells.len(), 2);
    assert_eq!(cells[0], ClopenInterval { lo: None, hi: pt(1) });
    assert_eq!(cells[1], ClopenInterval { lo: Some(pt(1)), hi: pt(4) });
    assert_eq!(p.cell_of(&line, &pt(2)).unwrap(), cells[1]);
    assert_eq!(p.cell_of(&line, &pt(0)).unwrap(), cells[0]);

    // coarsest partition
    let coarse = ClopenPartition::new(&line, vec![pt(4)]).unwrap();
    assert_eq!(coarse.cells(), vec![ClopenInterval::full(&line)]);

    // max missing
    assert!(matches!(
        ClopenPartition::new(&line, vec![pt(1)]),
        Err(Error::MaxMissingFromCuts)
    ));
}

#[test]
fn partition_on_ordinal_segment() {
    let line = LineDescriptor::ordinal(Cnf::omega(2, 0)).unwrap();
    let p = ClopenPartition::new(&line, vec![ord_pt(0, 0, 5), ord_pt(0, 2, 0)]).unwrap();
    let cells = p.cells();
    assert_eq!(cells.len(), 2);
    let cell = p.cell_of(&line, &ord_pt(0, 1, 0)).unwrap();
    assert_eq!(cell, cells[1]);
    assert_eq!(cell.lo, Some(ord_pt(0, 0, 5)));
}

#[test]
fn partition_rejects_non_right_isolated_cut() {
    let line = LineDescriptor::unit_interval();
    let bad = ClopenPartition::new(
        &line,
        vec![PointId::Rational(qr(1, 2)), PointId::Rational(qr(1, 1))],
    );
    assert!(matches!(bad, Err(Error::NotRightIsolated(_))));
}

#[test]
fn lex_double_quotient_fibers() {
    let (double, q) = lex_double(&fin(2));
    assert_eq!(double, LineDescriptor::lex_double_of(fin(2)));
    for i in 0..2 {
        let t = pt(i);
        assert_eq!(q.fiber_max(&t).unwrap(), PointId::pair(pt(i), 1));
        assert_eq!(q.fiber_witness(&t).unwrap(), Some(PointId::pair(pt(i), 0)));
        assert!(q.is_multi_fiber(&t).unwrap());
    }
    assert_eq!(q.map(&PointId::pair(pt(1), 0)).unwrap(), pt(1));
}

#[test]
fn build_quotient_classes_on_finite_line() {
    let k = fin(5);
    let q = build_quotient(&k, &[pt(1), pt(3)]).unwrap();
    assert_eq!(q.target, fin(3));
    let expect = [(0u64, 0u64), (1, 0), (2, 1), (3, 1), (4, 2)];
    for (p, t) in expect {
        assert_eq!(q.map(&pt(p)).unwrap(), pt(t));
    }
    assert_eq!(q.fiber_max(&pt(0)).unwrap(), pt(1));
    assert_eq!(q.fiber_max(&pt(1)).unwrap(), pt(3));
    assert_eq!(q.multi_fiber_points(16).unwrap(), vec![pt(0), pt(1)]);
}

#[test]
fn build_quotient_empty_cut_set_is_constant() {
    let k = fin(5);
    let q = build_quotient(&k, &[]).unwrap();
    assert_eq!(q.target, fin(1));
    for i in 0..5 {
        assert_eq!(q.map(&pt(i)).unwrap(), pt(0));
    }
}

#[test]
fn build_quotient_on_lex_double() {
    let k = LineDescriptor::lex_double_of(fin(2));
    let q = build_quotient(&k, &[PointId::pair(pt(0), 0)]).unwrap();
    assert_eq!(q.target, fin(2));
    assert_eq!(q.map(&PointId::pair(pt(0), 0)).unwrap(), pt(0));
    assert_eq!(q.map(&PointId::pair(pt(0), 1)).unwrap(), pt(1));
    assert_eq!(q.fiber_max(&pt(1)).unwrap(), PointId::pair(pt(1), 1));
    assert_eq!(q.fiber_witness(&pt(1)).unwrap(), Some(PointId::pair(pt(0), 1)));
}

#[test]
fn refine_partitions_examples() {
    // finite line: eventually all points are cuts
    let line = fin(4);
    let p1 = refine_partitions(&line, 1).unwrap();
    assert!(p1.cuts.contains(&pt(3)));
    let p3 = refine_partitions(&line, 3).unwrap();
    assert_eq!(p3.cuts, vec![pt(0), pt(1), pt(2), pt(3)]);

    // ordinal segment [0, omega]: cuts below omega in enumeration order
    let omega = LineDescriptor::ordinal(Cnf::omega(1, 0)).unwrap();
    let p3 = refine_partitions(&omega, 3).unwrap();
    assert_eq!(
        p3.cuts,
        vec![ord_pt(0, 0, 0), ord_pt(0, 0, 1), ord_pt(0, 0, 2), ord_pt(0, 1, 0)]
    );

    // the unit interval has no right-isolated point except the maximum
    let unit = LineDescriptor::unit_interval();
    for k in 1..5 {
        let p = refine_partitions(&unit, k).unwrap();
        assert_eq!(p.cuts, vec![PointId::Rational(qr(1, 1))]);
    }
}

#[test]
fn refine_partitions_monotone_and_exhaustive() {
    for line in [
        fin(6),
        LineDescriptor::ordinal(Cnf::omega2(1)).unwrap(),
        LineDescriptor::lex_double_of(fin(3)),
    ] {
        let mut prev = refine_partitions(&line, 1).unwrap();
        for k in 2..12 {
            let next = refine_partitions(&line, k).unwrap();
            assert!(prev.is_refined_by(&next), "P_{} not within P_{k} on {line:?}", k - 1);
            prev = next;
        }
    }
}

#[test]
fn double_arrow_structure() {
    let q_set: BTreeSet<Q> = [qr(1, 2)].into_iter().collect();
    let line = LineDescriptor::double_arrow(q_set).unwrap();
    let half0 = PointId::Doubled(qr(1, 2), 0);
    let half1 = PointId::Doubled(qr(1, 2), 1);
    assert_eq!(line.successor(&half0).unwrap(), Some(half1.clone()));
    assert!(line.is_right_isolated(&half0).unwrap());
    assert!(!line.is_right_isolated(&half1).unwrap());
    assert_eq!(line.max(), PointId::Doubled(qr(1, 1), 0));
    assert!(!line.is_zero_dimensional());
    assert!(line.validate(&PointId::Doubled(qr(1, 3), 1)).is_err());
}

#[test]
fn quotient_map_is_monotone_with_convex_fibers() {
    // exhaustive check on a finite source
    let k = fin(7);
    let q = build_quotient(&k, &[pt(0), pt(2), pt(5)]).unwrap();
    for i in 0..7u64 {
        for j in i..7u64 {
            let qi = q.map(&pt(i)).unwrap();
            let qj = q.map(&pt(j)).unwrap();
            assert!(qi <= qj);
        }
    }
    // fibers are order convex: same image for everything between min and max
    for t in q.multi_fiber_points(16).unwrap() {
        let lo = q.fiber_min(&t).unwrap();
        let hi = q.fiber_max(&t).unwrap();
        for i in 0..7u64 {
            let p = pt(i);
            if p >= lo && p <= hi {
                assert_eq!(q.map(&p).unwrap(), t);
            }
        }
        let w = q.fiber_witness(&t).unwrap().expect("zero-dimensional source");
        assert!(w < hi);
        assert!(k.is_right_isolated(&w).unwrap());
    }
}

#[test]
fn successor_has_nothing_strictly_between() {
    let lines = [
        fin(5),
        LineDescriptor::ordinal(Cnf::omega(1, 3)).unwrap(),
        LineDescriptor::lex_double_of(fin(3)),
    ];
    for line in lines {
        for p in line.point_stream().take(12) {
            if let Some(s) = line.successor(&p).unwrap() {
                assert!(line.compare(&p, &s).unwrap() == std::cmp::Ordering::Less);
                assert_eq!(line.strictly_between(&p, &s).unwrap(), None);
            }
        }
    }
}

#[test]
fn strictly_between_dense_variants() {
    let unit = LineDescriptor::unit_interval();
    let m = unit
        .strictly_between(&PointId::Rational(qr(1, 4)), &PointId::Rational(qr(3, 4)))
        .unwrap()
        .unwrap();
    assert_eq!(m, PointId::Rational(qr(1, 2)));

    let da = LineDescriptor::double_arrow([qr(1, 2)].into_iter().collect()).unwrap();
    let m = da
        .strictly_between(&PointId::Doubled(qr(1, 2), 1), &PointId::Doubled(qr(1, 1), 0))
        .unwrap()
        .unwrap();
    assert_eq!(m, PointId::Doubled(qr(3, 4), 0));
}
