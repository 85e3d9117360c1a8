//! Axis families, the projection axioms and the projection complex.
//!
//! cargo run --release --example projection_complex

use horolab::actions::GroupAction;
use horolab::projection::{
    build_axis_family, build_complex, chain_family, least_connected_k, least_forcing_constant, verify_bgit,
    verify_projection_axioms,
};

fn main() -> horolab::Result<()> {
    let a = GroupAction::f2();
    let seeds = [a.parse("a")?];
    let translates = ["e", "b", "b^2", "b^3", "ab", "Ab"]
        .iter()
        .map(|w| a.parse(w))
        .collect::<horolab::Result<Vec<_>>>()?;
    let fam = build_axis_family(&a, &seeds, &translates)?;
    let rep = verify_projection_axioms(&fam, None);
    println!("{} translated axes of a: κ = {}, axioms pass: {}", fam.len(), rep.kappa, rep.passed());

    let chain = chain_family(&a, 4, 7)?;
    let pc = build_complex(&chain, 2)?;
    let forcing = least_forcing_constant(&pc, &chain);
    println!(
        "chain (ba^4)^i·Ax(a): K = 2 complex connected {}, K̂ = {}, least connected K = {:?}",
        pc.connected,
        forcing.k_hat,
        least_connected_k(&chain, 8)?
    );
    let b = verify_bgit(&pc, &chain, &[0, 1, 2, 3], 6, None)?;
    println!("bounded geodesic image along U0..U3 seen from U6: {}", b.value);
    print!("{}", pc.graph.to_dot("chain"));
    Ok(())
}
