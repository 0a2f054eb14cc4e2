// Energy as a function of angular momentum: single-valued, with a jump in
// both at every branch boundary, and dE/dL = nu along each branch.

use ringvac::landscape::SINGLE_VALUED_TOL;
use ringvac::{FieldKind, Landscape};

pub fn run_example() -> anyhow::Result<()> {
    let device = Landscape::new(100.0, 9000.0, 0.05, FieldKind::Charged)?;
    let grid: Vec<f64> = (0..500).map(|k| f64::from(k) * 1e-4).collect();
    let table = device.e_of_l_table(&grid, SINGLE_VALUED_TOL)?;
    println!("{} rows, single-valued: {}, L increasing: {}", table.rows.len(), table.single_valued(), table.l_increasing);

    for j in device.jumps() {
        println!("jump {} at nu={:.12}: dE={:+.6} dL={:+.6}", j.n, j.nu, j.delta_e, j.delta_l);
    }

    let rows = &table.rows;
    for k in [50, 150, 250, 350, 450] {
        let (a, b, c) = (&rows[k - 1], &rows[k], &rows[k + 1]);
        if a.branch_n == c.branch_n {
            let slope = (c.e_total - a.e_total) / (c.l_total - a.l_total);
            println!("nu={:.4}  dE/dL={:.12}", b.nu, slope);
        }
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
