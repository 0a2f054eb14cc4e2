use std::f64::consts::PI;

use proptest::prelude::*;
use ringvac::greens::{self, calg_closed, GPoint};
use ringvac::spectrum;
use ringvac::units::{self, ClassicalInertia, PhysicalRing, UnitScales};
use ringvac::zeropoint::{self, DEFAULT_JUMP_TOL};
use ringvac::{FieldKind, Landscape};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn ring(radius_si: f64, b_field_si: f64, i_cl_si: f64) -> PhysicalRing {
    PhysicalRing { radius_si, b_field_si, inertia: ClassicalInertia::MomentOfInertia(i_cl_si), charge_quanta: 1 }
}

proptest! {
    #[test]
    fn si_round_trip(r in 1e-9f64..10.0, x in -1e3f64..1e3, b in 0.0f64..50.0, i in 1e-40f64..1e-20) {
        let s = UnitScales::for_radius(r).unwrap();
        prop_assert!(rel(s.from_si_energy(s.to_si_energy(x)), x) <= 1e-12);
        prop_assert!(rel(s.from_si_frequency(s.to_si_frequency(x)), x) <= 1e-12);
        prop_assert!(rel(s.from_si_inertia(s.to_si_inertia(x)), x) <= 1e-12);
        prop_assert!((s.radius_si() - r).abs() <= 1e-12 * r);

        let (state, scales) = units::reduce(&ring(r, b, i)).unwrap();
        prop_assert!(rel(scales.to_si_inertia(state.i_cl_hat), i) <= 1e-12);
        if b > 0.0 {
            prop_assert!(rel(scales.b_field_for_beta(state.beta, 1), b) <= 1e-12);
        }
    }

    #[test]
    fn beta_scales_with_area(r in 1e-9f64..1e-3, b in 1e-3f64..50.0) {
        let (small, _) = units::reduce(&ring(r, b, 1e-30)).unwrap();
        let (large, _) = units::reduce(&ring(2.0 * r, b, 1e-30)).unwrap();
        let (strong, _) = units::reduce(&ring(r, 3.0 * b, 1e-30)).unwrap();
        prop_assert!(rel(large.beta, 4.0 * small.beta) <= 1e-12);
        prop_assert!(rel(strong.beta, 3.0 * small.beta) <= 1e-12);
    }

    #[test]
    fn rotating_frequency_is_even(m in 1u32..10_000, nu in -0.999f64..0.999) {
        prop_assert_eq!(
            spectrum::rotating_mode_frequency(m, nu).unwrap(),
            spectrum::rotating_mode_frequency(m, -nu).unwrap()
        );
    }

    #[test]
    fn cutoff_error_falls_as_eps_squared(nu in -0.9f64..0.9) {
        let exact = -(1.0 - nu * nu) / 48.0;
        let eps: [f64; 4] = [0.4, 0.2, 0.1, 0.05];
        let logs: Vec<(f64, f64)> = eps
            .iter()
            .map(|&e| (e.ln(), (spectrum::cutoff_sum(nu, e).unwrap() - exact).abs().ln()))
            .collect();
        let n = logs.len() as f64;
        let (sx, sy) = logs.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
        let (mx, my) = (sx / n, sy / n);
        let num: f64 = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
        let den: f64 = logs.iter().map(|(x, _)| (x - mx).powi(2)).sum();
        let slope = num / den;
        prop_assert!((1.9..=2.1).contains(&slope), "slope {}", slope);
    }

    #[test]
    fn structure_function_symmetric(x in 0.0f64..PI, y in 0.0f64..PI, z in 0.0f64..6.0) {
        let a = calg_closed(&GPoint::new(x, y, z, 1e-6));
        let b = calg_closed(&GPoint::new(y, x, z, 1e-6));
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn green_functions_vanish_on_the_cut(
        t in -20.0f64..20.0,
        tp in -20.0f64..20.0,
        phi in 0.01f64..6.27,
        nu in -0.95f64..0.95,
    ) {
        let cut = greens::wrap_angle(nu * t);
        prop_assert!(greens::green_rotating(t, tp, cut, phi, nu, 1e-6).unwrap().norm() <= 1e-9);
        let cut = greens::wrap_angle(nu * tp);
        prop_assert!(greens::green_rotating(t, tp, phi, cut, nu, 1e-6).unwrap().norm() <= 1e-9);
        prop_assert!(greens::green_static(t, tp, 0.0, phi, 1e-6).unwrap().norm() <= 1e-9);
    }

    #[test]
    fn charged_parity(nu in 0.001f64..0.95, beta in 0.0f64..500.0) {
        let w = zeropoint::winding(nu, beta, DEFAULT_JUMP_TOL).unwrap();
        prop_assume!(!w.at_jump);
        let e = zeropoint::zp_energy_charged(nu, beta).unwrap();
        prop_assert_eq!(zeropoint::zp_energy_charged(-nu, beta).unwrap(), e);
        prop_assert_eq!(zeropoint::zp_energy_charged(nu, -beta).unwrap(), e);
        prop_assert_eq!(
            zeropoint::zp_angmom_charged(-nu, beta).unwrap(),
            -zeropoint::zp_angmom_charged(nu, beta).unwrap()
        );
    }

    #[test]
    fn energy_jumps_downward(beta in 1.0f64..1000.0, n in 1u64..50) {
        let nu_n = zeropoint::characteristic_nu(beta, n).unwrap();
        prop_assume!(nu_n < 0.98);
        let after = zeropoint::zp_energy_charged(nu_n * (1.0 + 1e-9), beta).unwrap();
        let before = zeropoint::zp_energy_charged(nu_n * (1.0 - 1e-9), beta).unwrap();
        prop_assert!(after < before);
    }

    #[test]
    fn landscape_is_even(beta in 0.0f64..300.0, i_cl in 0.0f64..1e5, nu in 0.0f64..0.5) {
        let l = Landscape::new(beta, i_cl, 0.5, FieldKind::Charged).unwrap();
        let w = l.winding(nu).unwrap();
        prop_assume!(!w.at_jump);
        prop_assert_eq!(l.total_energy(nu).unwrap(), l.total_energy(-nu).unwrap());
    }

    #[test]
    fn branches_tile_the_domain(beta in 0.0f64..500.0, nu_max in 0.01f64..0.95) {
        let l = Landscape::new(beta, 1.0, nu_max, FieldKind::Charged).unwrap();
        let branches = l.enumerate_branches();
        prop_assert_eq!(branches[0].nu_lo, 0.0);
        prop_assert_eq!(branches.last().unwrap().nu_hi, nu_max);
        for (k, w) in branches.windows(2).enumerate() {
            prop_assert_eq!(w[0].nu_hi, w[1].nu_lo);
            prop_assert!(w[0].nu_lo < w[0].nu_hi);
            prop_assert_eq!(w[0].n, k as i64);
        }
        // Jumps are the integers in (0, βν_max/(1 - ν_max²)].
        let top = beta * nu_max / (1.0 - nu_max * nu_max);
        prop_assume!((top - top.round()).abs() > 1e-9);
        prop_assert_eq!(l.jumps().len() as f64, top.floor());
    }

    #[test]
    fn branch_energy_matches_direct_sum(beta in 0.0f64..300.0, i_cl in 0.0f64..1e5, nu in 0.0f64..0.5) {
        let l = Landscape::new(beta, i_cl, 0.5, FieldKind::Charged).unwrap();
        let w = l.winding(nu).unwrap();
        prop_assume!(!w.at_jump);
        let b = l.branches().find(|b| b.contains(nu)).unwrap();
        let direct = l.total_energy(nu).unwrap();
        prop_assert!((b.energy(nu) - direct).abs() <= 1e-12 * direct.abs().max(1.0));
        prop_assert!((b.angmom(nu) - l.total_angmom(nu).unwrap()).abs() <= 1e-12 * b.angmom(nu).abs().max(1.0));
    }

    #[test]
    fn de_dl_is_nu_on_branch(beta in 1.0f64..300.0, i_cl in 100.0f64..1e5, nu in 0.01f64..0.5) {
        let l = Landscape::new(beta, i_cl, 0.6, FieldKind::Charged).unwrap();
        let w = l.winding(nu).unwrap();
        let mut h = 1e-4;
        while h > 1e-8
            && (l.winding(nu - h).unwrap().m_wind != w.m_wind || l.winding(nu + h).unwrap().m_wind != w.m_wind)
        {
            h /= 2.0;
        }
        prop_assume!(h > 1e-8 && !w.at_jump);
        let de = l.total_energy(nu + h).unwrap() - l.total_energy(nu - h).unwrap();
        let dl = l.total_angmom(nu + h).unwrap() - l.total_angmom(nu - h).unwrap();
        prop_assume!(dl.abs() > 1e-9);
        prop_assert!((de / dl - nu).abs() <= 1e-6, "dE/dL {} vs nu {}", de / dl, nu);
    }

    #[test]
    fn stopping_a_rotating_ground_state_costs_work(beta in 0.0f64..300.0, i_cl in 0.0f64..2e4) {
        let r = Landscape::new(beta, i_cl, 0.05, FieldKind::Charged).unwrap().global_minimum().unwrap();
        prop_assert!(r.candidates.iter().all(|c| r.e_star <= c.energy));
        prop_assert!(r.nu_star >= 0.0);
        prop_assert_eq!(r.rotating_ground_state, r.e_star < r.e_zero);
        if r.rotating_ground_state {
            prop_assert!(r.stopping_work() > 0.0);
        }
    }
}

#[test]
fn eigenfunctions_are_orthonormal() {
    let gram = ringvac::oracles::eigenfunction_gram(20, 40_000);
    let mut worst = 0.0f64;
    for (i, row) in gram.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - target).abs());
        }
    }
    assert!(worst <= 1e-10, "{worst:e}");
}
