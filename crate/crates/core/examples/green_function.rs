// The structure function behind the Green functions: closed form against
// the damped mode series, and the Dirichlet condition on the moving cut.

use ringvac::greens::{self, calg_closed, calg_series, GPoint};
use ringvac::oracles;

pub fn run_example() -> anyhow::Result<()> {
    let p = GPoint::new(0.7, 1.1, 0.3, 1e-4);
    let closed = calg_closed(&p)?;
    println!("closed form      {closed:.12}");
    for m_max in [1_000u64, 100_000, 1_000_000] {
        let s = calg_series(&p, m_max)?;
        println!("series m<={m_max:<8} {:.12}  |diff| {:.2e}  tail <= {:.1e}", s.value, (s.value - closed).norm(), s.tail_bound);
    }

    let nu = 0.5;
    let t = 1.3;
    let on_cut = greens::wrap_angle(nu * t);
    let g = greens::green_rotating(t, 0.2, on_cut, 1.0, nu, 1e-9)?;
    println!("G on the moving cut: |G| = {:.2e}", g.norm());

    let closed = greens::green_rotating(0.4, 0.0, 1.0, 2.5, nu, 1e-3)?;
    let modes = oracles::green_rotating_modes(0.4, 0.0, 1.0, 2.5, nu, 1e-3, 200_000)?;
    println!("rotating G: closed {closed:.10}  modes {modes:.10}");
    anyhow::ensure!((closed - modes).norm() < 1e-6);
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
