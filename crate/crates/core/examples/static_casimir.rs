// Zero-point energy of a ring with a Dirichlet cut, from the mode sum.
//
// Run with `cargo run --example static_casimir`.

use ringvac::spectrum::{self, Regulator};
use ringvac::units::UnitScales;
use ringvac::zeropoint;

pub fn run_example() -> anyhow::Result<()> {
    println!("{:>8} {:>22}", "eps", "cutoff sum");
    for eps in [0.4, 0.2, 0.1, 0.05] {
        println!("{eps:>8} {:>22.15e}", spectrum::cutoff_sum(0.0, eps)?);
    }

    let cutoff = spectrum::casimir_energy_mode_sum(0.0, &Regulator::default())?;
    let finite = spectrum::casimir_energy_mode_sum(0.0, &Regulator::finite_part())?;
    println!("extrapolated  {cutoff:.15e}");
    println!("finite part   {finite:.15e}");
    println!("-1/48         {:.15e}", -1.0 / 48.0);
    anyhow::ensure!((cutoff + 1.0 / 48.0).abs() < 1e-8);

    // The rotating-frame spectrum only sees (1 - ν²); the lab-frame energy
    // grows with ν² instead.
    for nu in [0.0, 0.5, 0.9] {
        let cmp = spectrum::compare_with_closed_form(nu, &Regulator::default())?;
        println!(
            "nu={nu:<4} mode sum {:+.10}  closed form {:+.10}  difference {:+.10}",
            cmp.mode_sum, cmp.closed_form, cmp.discrepancy
        );
    }

    let one_metre = UnitScales::for_radius(1.0)?;
    println!(
        "R = 1 m: E = {:.6e} J, I_zp = {:.6e} kg m^2",
        one_metre.to_si_energy(zeropoint::zp_energy_neutral(0.0)?),
        zeropoint::zp_moment_of_inertia_si(&one_metre)
    );
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
