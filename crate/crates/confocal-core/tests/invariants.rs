//! Property tests for the geometric invariants: interlacing of elliptic
//! coordinates, the Chasles count, reflection involution, base-point
//! independence of caustics, and nonnegativity of the pencil polynomial on
//! elliptic coordinates of points of a line.

use confocal_core::poly::eval;
use confocal_core::{
    caustics_of_line, elliptic_coordinates, pencil_polynomial, reflect, ConfocalFamily, Ray,
    ReflectionMode,
};
use proptest::prelude::*;

fn family_d2() -> ConfocalFamily {
    ConfocalFamily::new(&[2.0, 1.0]).unwrap()
}

fn family_d3() -> ConfocalFamily {
    ConfocalFamily::new(&[4.0, 2.0, 1.0]).unwrap()
}

fn nonzero_coord() -> impl Strategy<Value = f64> {
    (0.05_f64..3.0).prop_flat_map(|m| prop_oneof![Just(m), Just(-m)])
}

proptest! {
    #[test]
    fn interlacing_d3(x in nonzero_coord(), y in nonzero_coord(), z in nonzero_coord()) {
        let fam = family_d3();
        let c = elliptic_coordinates(&fam, &[x, y, z]).unwrap();
        let a = fam.axes();
        prop_assert!(c.is_generic());
        prop_assert!(c.lambdas[2] < a[2]);
        prop_assert!(a[2] < c.lambdas[1] && c.lambdas[1] < a[1]);
        prop_assert!(a[1] < c.lambdas[0] && c.lambdas[0] < a[0]);
    }

    #[test]
    fn coordinates_satisfy_defining_equation(x in nonzero_coord(), y in nonzero_coord(), z in nonzero_coord()) {
        let fam = family_d3();
        let p = [x, y, z];
        let c = elliptic_coordinates(&fam, &p).unwrap();
        for &l in &c.lambdas {
            prop_assert!((fam.quadric_form(l, &p) - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn chasles_count_and_base_point_independence(
        px in -1.0_f64..1.0, py in 0.05_f64..0.9,
        dx in -1.0_f64..1.0, dy in 0.1_f64..1.0,
        shift in 0.1_f64..3.0,
    ) {
        let fam = family_d2();
        let ray = Ray::new(&[px, py], &[dx, dy]).unwrap();
        let c1 = caustics_of_line(&fam, &ray).unwrap();
        prop_assert_eq!(c1.alphas().len(), 1);
        let moved = Ray::new(&ray.at(shift), &ray.direction).unwrap();
        let c2 = caustics_of_line(&fam, &moved).unwrap();
        prop_assert!(c1.relative_distance(&c2, fam.scale()) < 1e-10);
    }

    #[test]
    fn base_point_independence_d3(
        px in 0.1_f64..0.8, py in 0.1_f64..0.8, pz in 0.1_f64..0.8,
        dx in -1.0_f64..1.0, dy in -1.0_f64..1.0, dz in 0.15_f64..1.0,
        shift in 0.1_f64..2.0,
    ) {
        let fam = family_d3();
        let ray = Ray::new(&[px, py, pz], &[dx, dy, dz]).unwrap();
        let c1 = caustics_of_line(&fam, &ray).unwrap();
        prop_assert_eq!(c1.alphas().len(), 2);
        let moved = Ray::new(&ray.at(shift), &ray.direction).unwrap();
        let c2 = caustics_of_line(&fam, &moved).unwrap();
        prop_assert!(c1.relative_distance(&c2, fam.scale()) < 1e-9);
    }

    #[test]
    fn reflection_involution(
        angle in 0.0_f64..std::f64::consts::TAU,
        vx in -1.0_f64..1.0, vy in -1.0_f64..1.0,
    ) {
        prop_assume!(vx.abs() + vy.abs() > 0.1);
        let fam = family_d2();
        let p = [2.0_f64.sqrt() * angle.cos(), angle.sin()];
        let mut v = vec![vx, vy];
        confocal_core::ray::normalize(&mut v);
        let r1 = reflect(&fam, 0.0, &p, &v, ReflectionMode::Real).unwrap();
        let r2 = reflect(&fam, 0.0, &p, &r1, ReflectionMode::Real).unwrap();
        for (a, b) in v.iter().zip(&r2) {
            prop_assert!((a - b).abs() < 1e-12);
        }
        let w1 = reflect(&fam, 0.0, &p, &v, ReflectionMode::Virtual).unwrap();
        let w2 = reflect(&fam, 0.0, &p, &w1, ReflectionMode::Virtual).unwrap();
        for (a, b) in v.iter().zip(&w2) {
            prop_assert!((a - b).abs() < 1e-12);
        }
        for (a, b) in r1.iter().zip(&w1) {
            prop_assert!((a + b).abs() < 1e-12);
        }
    }

    #[test]
    fn reflection_preserves_caustics(
        angle in 0.3_f64..1.2,
        vx in -1.0_f64..-0.2, vy in -1.0_f64..-0.2,
    ) {
        let fam = family_d2();
        let p = [2.0_f64.sqrt() * angle.cos(), angle.sin()];
        let mut v = vec![vx, vy];
        confocal_core::ray::normalize(&mut v);
        let incoming = Ray::new(&p, &v).unwrap();
        let before = caustics_of_line(&fam, &incoming).unwrap();
        let out = reflect(&fam, 0.0, &p, &v, ReflectionMode::Real).unwrap();
        let outgoing = Ray::new(&p, &out).unwrap();
        let after = caustics_of_line(&fam, &outgoing).unwrap();
        prop_assert!(before.relative_distance(&after, fam.scale()) < 1e-10);
    }

    #[test]
    fn pencil_nonnegative_on_line_coordinates(
        px in 0.1_f64..0.7, py in 0.1_f64..0.7, pz in 0.1_f64..0.7,
        dx in -1.0_f64..1.0, dy in -1.0_f64..1.0, dz in 0.2_f64..1.0,
        t in -2.0_f64..2.0,
    ) {
        let fam = family_d3();
        let ray = Ray::new(&[px, py, pz], &[dx, dy, dz]).unwrap();
        let caustics = caustics_of_line(&fam, &ray).unwrap();
        let p = pencil_polynomial(&fam, &caustics);
        let scale: f64 = p.iter().map(|c| c.abs()).sum();
        let coords = elliptic_coordinates(&fam, &ray.at(t)).unwrap();
        for &l in &coords.lambdas {
            prop_assert!(eval(&p, l) >= -1e-9 * scale);
        }
    }

    #[test]
    fn round_trip_quadric_form(x in 0.05_f64..2.0, y in 0.05_f64..2.0) {
        let fam = family_d2();
        let c = elliptic_coordinates(&fam, &[x, y]).unwrap();
        for &l in &c.lambdas {
            prop_assert!((fam.quadric_form(l, &[x, y]) - 1.0).abs() < 1e-10);
        }
    }
}
