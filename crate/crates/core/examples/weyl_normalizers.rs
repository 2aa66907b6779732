//! Weyl group orders and the decomposition N_W(W_I) = W_I ⋊ N_W(I) for every
//! subset I of the simple roots of D4.

use levikit::root_datum::{standard, Isogeny};
use levikit::weyl::{order_from_type, WeylGroup};

fn main() -> levikit::Result<()> {
    for t in ["A2", "B2", "G2", "A3", "D4", "F4"] {
        let b = standard(t, Isogeny::SimplyConnected)?;
        let w = WeylGroup::generate(&b)?;
        println!("|W({t})| = {} (degree product {})", w.order(), order_from_type(&b.classify()?));
    }

    let w = WeylGroup::generate(&standard("D4", Isogeny::Adjoint)?)?;
    for mask in 0u32..16 {
        let i: Vec<usize> = (0..4).filter(|k| mask >> k & 1 == 1).collect();
        let h = w.normalizer_decomposition(&i)?;
        println!("I = {i:?}: |N_W(W_I)| = {:3} = {:2} * {:2}  {}",
            h.normalizer.len(), h.parabolic.len(), h.stabilizer.len(), if h.check { "ok" } else { "FAIL" });
    }
    Ok(())
}
