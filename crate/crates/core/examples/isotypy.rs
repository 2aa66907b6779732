//! p-morphisms between root data: classification, duality, factorization
//! and Steinberg endomorphisms.

use levikit::isotypy::{classify_steinberg, factor_isotypy, PMorphism, DEFAULT_STEINBERG_BOUND};
use levikit::lattice::LatticeMap;
use levikit::root_datum::{gl2, pgl2, sl2, standard, Isogeny};

fn main() -> levikit::Result<()> {
    // X(PGL2) -> X(SL2), alpha -> alpha, i.e. [2] in the standard bases
    let f = LatticeMap::from_rows(&[vec![2]], 1)?;
    for p in [2, 3] {
        let m = PMorphism::infer(f.clone(), p, pgl2().datum().clone(), sl2().datum().clone())?;
        println!("SL2 -> PGL2 at p = {p}: q = {:?}, {:?}", m.q(), m.classify());
        println!("  dual: {:?}", m.dual().classify());
    }

    // SL2 -> GL2: X(GL2) -> X(SL2), (a, b) -> a - b
    let incl = LatticeMap::from_rows(&[vec![1, -1]], 2)?;
    let m = PMorphism::infer(incl, 2, gl2().datum().clone(), sl2().datum().clone())?;
    let fac = factor_isotypy(&m)?;
    println!("SL2 -> GL2 {:?}", m.classify());
    println!("  factors with lattice ranks {} -> {} -> {} -> {}",
        fac.psi2.source().rank(), fac.psi.source().rank(), fac.psi1.source().rank(), fac.psi1.target().rank());

    let b2 = standard("B2", Isogeny::Adjoint)?;
    let suzuki = PMorphism::infer(LatticeMap::from_rows(&[vec![0, 1], vec![2, 0]], 2)?, 2, b2.datum().clone(), b2.datum().clone())?;
    let s = classify_steinberg(&b2, &suzuki, DEFAULT_STEINBERG_BOUND)?;
    println!("B2 exceptional endomorphism: {:?}, F^{} = 2^{}", s.kind, s.m, s.a);
    Ok(())
}
