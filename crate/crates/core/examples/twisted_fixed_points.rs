//! Fixed points of diagram twists on Weyl groups and their relative
//! normalizers.

use levikit::root_datum::{standard, Isogeny};
use levikit::weyl::{fixed_points, relative_normalizers, stable_subsets, Twist, WeylGroup};

fn main() -> levikit::Result<()> {
    for (t, sigma) in [
        ("A2", vec![1, 0]),
        ("A3", vec![2, 1, 0]),
        ("A5", vec![4, 3, 2, 1, 0]),
        ("D4", vec![2, 1, 3, 0]),
        ("D4", vec![0, 1, 3, 2]),
    ] {
        let w = WeylGroup::generate(&standard(t, Isogeny::SimplyConnected)?)?;
        let f = Twist::from_diagram(&w, &sigma)?;
        let fp = fixed_points(&w, &f)?;
        println!("{t} twisted by {sigma:?}: W^F of order {} and type {}", fp.elements.len(), fp.coxeter_type.label());
        for i in stable_subsets(&f) {
            let r = relative_normalizers(&w, &f, &fp, &i)?;
            println!("  I = {i:?}: |N_W^F(I)| = {}, |N_W^F(W_I)| = {}, |W_I^F| = {}",
                r.stabilizer.len(), r.normalizer.len(), r.parabolic_fixed.len());
        }
    }
    Ok(())
}
