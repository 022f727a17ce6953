mod common;

use apollonia::invariants::{q_value, radical_axis, triple_summary};
use apollonia::transforms::{apply_frame, canonical_frame, invert_in_circle, pencil_member, Direction};
use common::*;
use proptest::prelude::*;

fn mirror_strategy() -> impl Strategy<Value = apollonia::CircleCoeffs> {
    (-6.0..6.0f64, -6.0..6.0f64, 1.0..4.0f64, any::<bool>()).prop_map(|(x, y, r, o)| {
        let o = if o {
            apollonia::Orientation::CounterClockwise
        } else {
            apollonia::Orientation::Clockwise
        };
        apollonia::CircleCoeffs::from_center_radius(apollonia::Point::new(x, y), r, o).unwrap()
    })
}

fn frame_strategy() -> impl Strategy<Value = apollonia::transforms::FrameMap> {
    (-4.0..4.0f64, -4.0..4.0f64, -3.2..3.2f64).prop_map(|(x, y, rot)| apollonia::transforms::FrameMap {
        origin: apollonia::Point::new(x, y),
        rotation: rot,
    })
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn q_and_u_invariant_under_inversion(t in triple_strategy(), m in mirror_strategy()) {
        let img = t.map(|k| invert_in_circle(&k, &m));
        let (s, si) = (triple_summary(&t), triple_summary(&img));
        let tol = 1e-9 * s.q_scale.max(si.q_scale).powi(3) * apollonia::tolerance::coeff_scale(&img).powi(2);
        for n in 0..3 {
            prop_assert!((s.q[n] - si.q[n]).abs() <= tol);
        }
        prop_assert!((s.u - si.u).abs() <= tol);
    }

    #[test]
    fn q_and_u_invariant_under_rigid_motion(t in triple_strategy(), f in frame_strategy()) {
        let img = t.map(|k| apply_frame(&k, &f, Direction::Forward));
        let (s, si) = (triple_summary(&t), triple_summary(&img));
        for n in 0..3 {
            prop_assert!((s.q[n] - si.q[n]).abs() <= 1e-9 * s.q_scale);
        }
        prop_assert!((s.u - si.u).abs() <= 1e-9 * s.q_scale.powi(3));
    }

    #[test]
    fn reversal_action(t in triple_strategy(), j in 0usize..3) {
        let mut r = t;
        r[j] = r[j].reverse();
        let (s, sr) = (triple_summary(&t), triple_summary(&r));
        for (n, (a, b)) in apollonia::invariants::PAIRS.iter().enumerate() {
            if *a == j || *b == j {
                prop_assert!((sr.q[n] - (1.0 - s.q[n])).abs() <= 1e-14 * s.q_scale);
            } else {
                prop_assert_eq!(sr.q[n], s.q[n]);
            }
        }
        prop_assert_eq!(sr.minors.d4, -s.minors.d4);
    }

    #[test]
    fn inversion_is_an_involution(k in curve_strategy(), m in mirror_strategy()) {
        let back = invert_in_circle(&invert_in_circle(&k, &m), &m);
        prop_assert!(rel_distance(&back, &k, false) <= 1e-10 * apollonia::tolerance::coeff_scale(&[invert_in_circle(&k, &m)]));
    }

    #[test]
    fn frame_round_trip(k in curve_strategy(), f in frame_strategy()) {
        let back = apply_frame(&apply_frame(&k, &f, Direction::Forward), &f, Direction::Inverse);
        prop_assert!(k.coeff_distance(&back, false) <= 1e-12 * apollonia::tolerance::coeff_scale(&[k]).powi(2));
    }

    #[test]
    fn q_of_pair_survives_both_maps(k1 in curve_strategy(), k2 in curve_strategy(), f in frame_strategy()) {
        let q = q_value(&k1, &k2);
        let moved = q_value(&f.forward(&k1), &f.forward(&k2));
        prop_assert!((q - moved).abs() <= 1e-10 * q.abs().max(1.0));
    }

    #[test]
    fn canonical_round_trip(k1 in circle_strategy(), k2 in curve_strategy()) {
        let tol = apollonia::Tolerances::default();
        let p = canonical_frame(&k1, &k2, &tol).unwrap();
        let (a, b) = p.circles();
        prop_assert!(p.frame.inverse(&p.first_in_frame()).coeff_distance(&a, false) <= 1e-9 * apollonia::tolerance::coeff_scale(&[a]));
        prop_assert!(p.frame.inverse(&p.second_in_frame()).coeff_distance(&b, false) <= 1e-9 * apollonia::tolerance::coeff_scale(&[a, b]).powi(2));
        prop_assert!((p.q_closed_form() - p.q).abs() <= 1e-10 * p.q.abs().max(1.0) * apollonia::tolerance::coeff_scale(&[a, b]));
    }

    #[test]
    fn pencil_members_are_coaxal(k1 in circle_strategy(), k2 in circle_strategy(), t in -5.0..5.0f64) {
        let tol = apollonia::Tolerances::default();
        let Ok(m) = pencil_member(&k1, &k2, t, &tol) else { return Ok(()) };
        // the defect is evaluated from squares of the coefficients
        prop_assert!(m.normalization_defect().abs() <= 1e-10 * apollonia::tolerance::coeff_scale(&[m]).powi(2));
        if let (Ok(ax), Ok(am)) = (radical_axis(&k1, &k2, &tol), radical_axis(&k1, &m, &tol)) {
            prop_assert!(ax.coeff_distance(&am, true) <= 1e-8 * apollonia::tolerance::coeff_scale(&[k1, k2, m]));
        }
    }
}

#[test]
fn inversion_moves_counter_tangent_triples_to_counter_tangent_triples() {
    let mut r = rng(7);
    for _ in 0..50 {
        let t = random_counter_tangent_triple(&mut r);
        for q in triple_summary(&t).q {
            assert!((q - 1.0).abs() < 1e-9);
        }
    }
}
