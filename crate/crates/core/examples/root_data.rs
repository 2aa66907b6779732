//! Builds a few root data, checks the axioms and reports the Cartan type.
//!
//! ```text
//! cargo run --example root_data
//! ```

use levikit::root_datum::{direct_sum, gl2, pgl2, sl2, standard, torus, Isogeny, RootDatum};

fn main() -> levikit::Result<()> {
    for (name, b) in [
        ("SL2", sl2()),
        ("PGL2", pgl2()),
        ("GL2", gl2()),
        ("G2", standard("G2", Isogeny::SimplyConnected)?),
        ("B2 x T1", direct_sum(&standard("B2", Isogeny::Adjoint)?, &torus(1))?),
    ] {
        println!(
            "{name:8} rank {} roots {:2} type {:8} cartan {:?}",
            b.datum().rank(),
            b.datum().num_roots(),
            b.classify()?.label(),
            b.cartan_matrix()
        );
    }

    let d = sl2().datum().dual();
    println!("dual of SL2 has roots {:?}", d.roots());

    // a broken datum: <alpha, alpha^v> = 1
    let bad = RootDatum::from_parts(1, vec![vec![1], vec![-1]], vec![vec![1], vec![-1]])?;
    for v in bad.validate() {
        println!("violation: {v}");
    }
    Ok(())
}
