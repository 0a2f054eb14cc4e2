// Charged field in a magnetic flux: winding number, enhancement factor and
// the jumps of the zero-point energy.

use ringvac::zeropoint::{self, EnhancementCoefficient, DEFAULT_JUMP_TOL};

pub fn run_example() -> anyhow::Result<()> {
    let beta = 100.0;
    println!("{:>4} {:>20} {:>12}", "n", "nu_n", "n/beta");
    for n in 1..=5 {
        println!("{n:>4} {:>20.15} {:>12.6}", zeropoint::characteristic_nu(beta, n)?, n as f64 / beta);
    }

    println!("{:>8} {:>4} {:>6} {:>14} {:>14}", "nu", "M", "C", "E_zp", "L_zp");
    for k in 0..=8 {
        let nu = 0.005 * f64::from(k);
        let w = zeropoint::winding(nu, beta, DEFAULT_JUMP_TOL)?;
        println!(
            "{nu:>8.3} {:>4} {:>6} {:>14.8} {:>14.8}",
            w.m_wind,
            w.enhancement().c_factor,
            zeropoint::zp_energy_charged(nu, beta)?,
            zeropoint::zp_angmom_charged(nu, beta)?
        );
    }

    // No flux: two real components, twice the neutral result.
    let nu = 0.3;
    println!("beta=0: {} vs 2x neutral {}", zeropoint::zp_energy_charged(nu, 0.0)?, 2.0 * zeropoint::zp_energy_neutral(nu)?);
    println!("C(M=1000) = {}", EnhancementCoefficient::for_winding(1000).c_factor);
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
