//! The predicate implementations against an exact rational oracle, plus the
//! exact-invariance properties orientation must satisfy.

use chromospan::geom::{self, CirclePosition, Orientation, Point};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};
use proptest::prelude::*;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rat(x: f64) -> BigRational {
    BigRational::from_f64(x).expect("finite coordinate")
}

/// Sign of the 4x4 in-circle determinant with rows (x, y, x^2 + y^2, 1),
/// evaluated in exact rational arithmetic. Positive means d lies inside the
/// circle through the counter-clockwise triple (a, b, c).
fn incircle_det_exact(a: Point, b: Point, c: Point, d: Point) -> BigInt {
    let row = |p: Point| {
        let x = rat(p.x);
        let y = rat(p.y);
        let w = &x * &x + &y * &y;
        [x, y, w, BigRational::from_i64(1).unwrap()]
    };
    let m = [row(a), row(b), row(c), row(d)];

    // Laplace expansion along the last column of 1s.
    let det3 = |r0: &[BigRational; 4], r1: &[BigRational; 4], r2: &[BigRational; 4]| {
        &r0[0] * (&r1[1] * &r2[2] - &r1[2] * &r2[1])
            - &r0[1] * (&r1[0] * &r2[2] - &r1[2] * &r2[0])
            + &r0[2] * (&r1[0] * &r2[1] - &r1[1] * &r2[0])
    };
    let det = -det3(&m[1], &m[2], &m[3]) + det3(&m[0], &m[2], &m[3])
        - det3(&m[0], &m[1], &m[3])
        + det3(&m[0], &m[1], &m[2]);
    if det.is_zero() {
        BigInt::zero()
    } else if det.is_positive() {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn orient_det_exact(p: Point, q: Point, r: Point) -> BigInt {
    let det = (&rat(q.x) - &rat(p.x)) * (&rat(r.y) - &rat(p.y))
        - (&rat(q.y) - &rat(p.y)) * (&rat(r.x) - &rat(p.x));
    if det.is_zero() {
        BigInt::zero()
    } else if det.is_positive() {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

#[test]
fn in_circle_matches_exact_rational_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1BC1E);
    let mut checked = 0;
    while checked < 1000 {
        // Small integer coordinates make exact cocircularity common.
        let mut pts = [Point::new(0.0, 0.0); 4];
        for p in &mut pts {
            *p = Point::new(
                rng.random_range(-6..=6i32) as f64,
                rng.random_range(-6..=6i32) as f64,
            );
        }
        let [a, b, c, d] = pts;
        let orient = orient_det_exact(a, b, c);
        if orient.is_zero() {
            assert!(geom::in_circle(a, b, c, d).is_err());
            continue;
        }
        let expected = incircle_det_exact(a, b, c, d) * orient;
        let got = geom::in_circle(a, b, c, d).unwrap();
        let want = if expected.is_positive() {
            CirclePosition::Inside
        } else if expected.is_negative() {
            CirclePosition::Outside
        } else {
            CirclePosition::On
        };
        assert_eq!(got, want, "at {a:?} {b:?} {c:?} {d:?}");
        checked += 1;
    }
}

#[test]
fn orientation_matches_exact_rational_determinant_on_floats() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0E1E47);
    for _ in 0..1000 {
        let p = Point::new(rng.random::<f64>(), rng.random::<f64>());
        let q = Point::new(rng.random::<f64>(), rng.random::<f64>());
        // Force many near-degenerate triples: r close to the line pq.
        let t: f64 = rng.random_range(-1.0..2.0);
        let jit = (rng.random::<f64>() - 0.5) * 1e-15;
        let r = Point::new(
            p.x + t * (q.x - p.x) + jit,
            p.y + t * (q.y - p.y) - jit,
        );
        let want = orient_det_exact(p, q, r);
        let got = match geom::orientation(p, q, r) {
            Orientation::Ccw => BigInt::from(1),
            Orientation::Cw => BigInt::from(-1),
            Orientation::Collinear => BigInt::zero(),
        };
        assert_eq!(got, want);
    }
}

proptest! {
    // Integer coordinates and power-of-two scalings are exactly
    // representable, so these transformations must preserve the exact sign.
    #[test]
    fn orientation_antisymmetry_and_invariance(
        px in -1000i32..1000, py in -1000i32..1000,
        qx in -1000i32..1000, qy in -1000i32..1000,
        rx in -1000i32..1000, ry in -1000i32..1000,
        tx in -512i32..512, ty in -512i32..512,
        scale_exp in 0u32..4,
    ) {
        let p = Point::new(px as f64, py as f64);
        let q = Point::new(qx as f64, qy as f64);
        let r = Point::new(rx as f64, ry as f64);
        let o = geom::orientation(p, q, r);

        let swap = geom::orientation(q, p, r);
        let expected_swap = match o {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        };
        prop_assert_eq!(swap, expected_swap);

        let s = (1u32 << scale_exp) as f64;
        let f = |a: Point| Point::new((a.x + tx as f64) * s, (a.y + ty as f64) * s);
        prop_assert_eq!(geom::orientation(f(p), f(q), f(r)), o);
    }

    #[test]
    fn detour_is_at_least_one_and_symmetric(
        px in -100.0f64..100.0, py in -100.0f64..100.0,
        qx in -100.0f64..100.0, qy in -100.0f64..100.0,
        rx in -100.0f64..100.0, ry in -100.0f64..100.0,
    ) {
        let p = Point::new(px, py);
        let q = Point::new(qx, qy);
        let r = Point::new(rx, ry);
        prop_assume!(p != q);
        let d = geom::detour(p, r, q).unwrap();
        prop_assert!(d >= 1.0);
        prop_assert_eq!(d, geom::detour(q, r, p).unwrap());
    }

    // Every point strictly below the apex lands in exactly one cone.
    #[test]
    fn cone_partition_is_exact(
        qx in -10.0f64..10.0, qy in -10.0f64..-1e-9,
        k in 2usize..12,
    ) {
        let apex = Point::new(0.0, 0.0);
        let q = Point::new(qx, qy);
        let idx = geom::cone_index(apex, q, k);
        prop_assert!(idx.is_some());
        let cones = geom::downward_cones(apex, k);
        let members: Vec<usize> =
            (0..cones.len()).filter(|&j| cones[j].contains(q)).collect();
        prop_assert_eq!(members, vec![idx.unwrap()]);
    }
}
