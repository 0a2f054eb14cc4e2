// Energy density by point splitting, with the coincidence divergence removed
// and the splitting extrapolated away.

use std::f64::consts::PI;

use ringvac::pointsplit::{t00_point_split, SplitConfig};

pub fn run_example() -> anyhow::Result<()> {
    let cfg = SplitConfig::default();
    for nu in [0.0, 0.5] {
        let ps = t00_point_split(nu, 2.0, &cfg)?;
        println!("nu = {nu}");
        for s in &ps.samples {
            println!("  dt={:<6} raw={:+.10e} remainder={:+.12e}", s.dt, s.raw, s.remainder);
        }
        let target = -(1.0 + nu * nu) / (96.0 * PI);
        println!("  extrapolated {:+.12e}  expected {:+.12e}  rel.err {:.1e}", ps.density, target, ((ps.density - target) / target).abs());
    }

    for phi in [0.5, 2.0, 5.0] {
        println!("phi = {phi}: {:+.12e}", t00_point_split(0.5, phi, &cfg)?.density);
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
