// A micron-sized charged ring in a 10 T field, in SI units.

use ringvac::cli::{estimate, RunConfig};

pub fn run_example() -> anyhow::Result<()> {
    let cfg = RunConfig {
        radius_si: Some(1e-6),
        b_field_si: Some(10.0),
        charge_quanta: Some(1),
        i_cl_hat: Some(1e5),
        nu: Some(1e-3),
        winding: Some(1000),
        ..RunConfig::default()
    };
    let est = estimate(&cfg)?;
    println!("beta        = {:.6e}", est.beta);
    println!("nu_ch       = {:.6e}  (1/beta = {:.6e})", est.nu_ch.unwrap_or(0.0), est.nu_ch_nonrelativistic.unwrap_or(0.0));
    println!("Omega_ch    = {:.6e} rad/s", est.omega_ch_si.unwrap_or(0.0));
    println!("at nu=1e-3: M = {}, C = {}", est.winding.m_wind, est.c_factor);
    println!("C(M=1000)   = {}", est.requested_winding.map_or(0, |c| c.c_factor));
    println!("I_zp        = {:.4e} kg m^2", est.i_zp_si);
    println!(
        "minimum: nu* = {:.6e} (Omega = {:.4e} rad/s), rotating ground state: {}, at nu_max: {}",
        est.minimum.nu_star, est.minimum.si.omega_star, est.minimum.rotating_ground_state, est.minimum.boundary_hit
    );
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
