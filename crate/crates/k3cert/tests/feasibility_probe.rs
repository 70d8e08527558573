// Temporary feasibility probe; not part of the suite (run with --ignored).

use k3cert::ffield::make_field;
use k3cert::groebner::{contains_one, schubert_line_ideals, GbConfig};
use k3cert::poly::{poly_from_text, Fq, MPoly, Qq, Zz, VARS_P4};

const F2: &str = "x0^2 - 3*x0*x1 + 3*x1^2 + 5*x0*x2 + 4*x1*x2 + 5*x2^2 - x0*x3 - 2*x1*x3 - 3*x2*x3 - 5*x0*x4 + 5*x1*x4 + 47*x3^2 + 47*x4^2";
const F3: &str = "2*x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3 - x0*x1*x2 - 3*x1^2*x2 + 4*x0*x2^2 - 4*x1*x2^2 + 5*x2^3 + 4*x0^2*x3 + x0*x1*x3 + 5*x1^2*x3 + 4*x0*x2*x3 + 4*x1*x2*x3 - 3*x2^2*x3 + 4*x1*x3^2 - x2*x3^2 + 5*x0^2*x4 - 4*x0*x1*x4 + 2*x1^2*x4 + x0*x2*x4 + 4*x1*x2*x4 - 2*x2^2*x4 + 4*x0*x3*x4 - 3*x2*x3*x4 - x0*x4^2 - x1*x4^2 + 5*x2*x4^2";

fn rational_pair() -> (MPoly<Qq>, MPoly<Qq>) {
    let f2 = poly_from_text(&Qq, F2, &VARS_P4).unwrap();
    let f3 = poly_from_text(&Qq, F3, &VARS_P4).unwrap();
    (f2, f3)
}

#[test]
#[ignore]
fn probe_deg6_line_cells_over_q() {
    let (f2, f3) = rational_pair();
    let zz = vec![f2.to_zz_primitive().0, f3.to_zz_primitive().0];
    let cfg = GbConfig::default();
    let start = std::time::Instant::now();
    let cells = schubert_line_ideals(&Zz, &zz, 4);
    for cell in &cells {
        eprintln!(
            "starting cell {:?}: {} gens, degrees {:?}",
            cell.pivots,
            cell.gens.len(),
            cell.gens.iter().map(|g| g.total_degree()).collect::<Vec<_>>()
        );
        let t0 = std::time::Instant::now();
        let empty = contains_one(&Zz, &cell.gens, &cfg);
        println!(
            "cell {:?}: gens {} -> {:?} in {:?}",
            cell.pivots,
            cell.gens.len(),
            empty,
            t0.elapsed()
        );
    }
    println!("total over Q: {:?}", start.elapsed());
}

#[test]
#[ignore]
fn probe_single_cell_over_q() {
    let idx: usize = std::env::var("K3CERT_PROBE_CELL")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0);
    let (f2, f3) = rational_pair();
    let zz = vec![f2.to_zz_primitive().0, f3.to_zz_primitive().0];
    let cells = schubert_line_ideals(&Zz, &zz, 4);
    let cell = &cells[idx];
    let t0 = std::time::Instant::now();
    let empty = contains_one(&Zz, &cell.gens, &GbConfig::default());
    println!("cell {:?}: -> {:?} in {:?}", cell.pivots, empty, t0.elapsed());
}

#[test]
#[ignore]
fn probe_deg6_line_cells_mod_47_and_1009() {
    let (f2, f3) = rational_pair();
    for p in [47u64, 1009, 1048573] {
        let fq = Fq(make_field(p, 1).unwrap());
        let r2 = f2.reduce_mod(&fq).unwrap();
        let r3 = f3.reduce_mod(&fq).unwrap();
        let cfg = GbConfig::default();
        let start = std::time::Instant::now();
        let cells = schubert_line_ideals(&fq, &[r2, r3], 4);
        let mut solvable = vec![];
        for cell in &cells {
            let empty = contains_one(&fq, &cell.gens, &cfg).unwrap();
            if !empty {
                solvable.push(cell.pivots);
            }
        }
        println!("p={p}: solvable cells {:?} in {:?}", solvable, start.elapsed());
    }
}
