// Global minimum of classical plus zero-point rotational energy.

use ringvac::oracles;
use ringvac::{FieldKind, Landscape};

pub fn run_example() -> anyhow::Result<()> {
    let device = Landscape::new(100.0, 9000.0, 0.05, FieldKind::Charged)?;
    for b in device.branches() {
        println!("branch {} [{:.10}, {:.10}) C={} E(nu) = {:+.4} nu^2 {:+.6}", b.n, b.nu_lo, b.nu_hi, b.c_factor, b.curvature, b.offset);
    }

    let report = device.global_minimum()?;
    println!("nu* = {:.16}  E* = {:.16}  E(0) = {:.16}", report.nu_star, report.e_star, report.e_zero);
    println!("rotating ground state: {}  work to stop: {:.6}", report.rotating_ground_state, report.stopping_work());

    let scan = oracles::grid_scan_minimum(&device, 1e-6)?;
    println!("grid scan: argmin {:.6}, refined min {:.16}", scan.grid_argmin, scan.refined_min);

    for i_cl in [1e3, 1e4, 1e5, 1e6] {
        let r = Landscape::new(100.0, i_cl, 0.05, FieldKind::Charged)?.global_minimum()?;
        println!("I={i_cl:>9.0}  nu*={:.10}  branch {}  rotating={}", r.nu_star, r.branch_n, r.rotating_ground_state);
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
